"""Hopf bimodules over the dual and the module structures derived from them.

A Hopf bimodule over the dual D of H is a space with a D-bimodule
structure and a D-bicomodule structure subject to four compatibility
conditions ("the coaction of a scaled element is the scaled coaction"),
written out in docs/file-format.md and checked verbatim here:

  lambda(p.m) = sum p1 m(-1) (x) p2.m(0)
  rho(p.m)    = sum p1.m(0)  (x) p2 m(1)
  lambda(m.q) = sum m(-1) q1 (x) m(0).q2
  rho(m.q)    = sum m(0).q1  (x) m(1) q2

Such a module is simultaneously a left module over each of the four-slot
product algebras; the explicit action tensors are materialized by
`derived_action` and the equalities between them under the isomorphisms
are verified by `verify_action_correspondence`.
"""

from dataclasses import dataclass
import random

from .actions import (ActionData, CoactionData, bicomodule_legs,
                      bicomodule_to_module, check_bicomodule_coherence,
                      check_coaction_axioms, check_module_axioms)
from .algebra import random_dense_vector
from .crossed import StandardTriple, build_xyz, diagonal_crossed, smash_handles, two_sided_crossed
from .errors import DimensionMismatchError
from .isos import build_iso
from .linalg import sv_canon, sv_from_list
from .report import CheckMode, CheckReport, MORPHISM_DIM_CAP


@dataclass
class HopfBimoduleData:
    field: object
    space_dim: int
    left_act: ActionData      # D acting on the left
    right_act: ActionData     # D acting on the right
    left_co: CoactionData     # coaction by D, left
    right_co: CoactionData    # coaction by D, right


@dataclass
class TripleModuleData:
    """Left actions of A, K and B on one space, candidate (A, K, B)-module."""
    space_dim: int
    a_act: ActionData
    h_act: ActionData
    b_act: ActionData


# ---------------------------------------------------------------------------
# axioms

def check_hopf_bimodule(module, hopf):
    """Bimodule + bicomodule + the four action/coaction compatibilities."""
    from .algebra import dual_hopf
    dual = dual_hopf(hopf)
    n = hopf.dim
    m_dim = module.space_dim
    field = module.field
    if module.left_act.actor_dim != n or module.right_act.actor_dim != n:
        raise DimensionMismatchError("actions must be by the dual of H")
    report = check_module_axioms(module.left_act, dual.algebra)
    if not report.passed:
        return report
    report.absorb(check_module_axioms(module.right_act, dual.algebra))
    if not report.passed:
        return report
    one = field.one
    la, ra = module.left_act, module.right_act
    for p in range(n):
        for q in range(n):
            for j in range(m_dim):
                lhs = ra.act_sv({q: one}, la.act_basis(p, j))
                rhs = la.act_sv({p: one}, ra.act_basis(q, j))
                report.checked += 1
                if lhs != rhs:
                    report.fail("bimodule-commute", (p, q, j), lhs, rhs)
                    return report
    for co in (module.left_co, module.right_co):
        report.absorb(check_coaction_axioms(co, dual.coalgebra))
        if not report.passed:
            return report
    report.absorb(check_bicomodule_coherence(module.left_co, module.right_co))
    if not report.passed:
        return report

    # the four compatibilities, as elements of D (x) M or M (x) D
    dmul = dual.algebra.mul_basis
    for p in range(n):
        for j in range(m_dim):
            # lambda(p.m) vs sum p1 m(-1) (x) p2.m(0)
            lhs = {}
            for c, k, w in _co_of_sv(module.left_co, la.act_basis(p, j)):
                lhs[(c, k)] = lhs.get((c, k), 0) + w
            rhs = {}
            for p1, p2, cp in dual.coalgebra.delta(p):
                for c, k, w in module.left_co.legs(j):
                    for c2, cc in dmul(p1, c).items():
                        for k2, ck in la.act_basis(p2, k).items():
                            key = (c2, k2)
                            rhs[key] = rhs.get(key, 0) + cp * w * cc * ck
            report.checked += 1
            if sv_canon(field, lhs) != sv_canon(field, rhs):
                report.fail("compat-left-coaction-left-action", (p, j),
                            sv_canon(field, lhs), sv_canon(field, rhs))
                return report
            # rho(p.m) vs sum p1.m(0) (x) p2 m(1)
            lhs = {}
            for c, k, w in _co_of_sv(module.right_co, la.act_basis(p, j)):
                lhs[(c, k)] = lhs.get((c, k), 0) + w
            rhs = {}
            for p1, p2, cp in dual.coalgebra.delta(p):
                for c, k, w in module.right_co.legs(j):
                    for c2, cc in dmul(p2, c).items():
                        for k2, ck in la.act_basis(p1, k).items():
                            key = (c2, k2)
                            rhs[key] = rhs.get(key, 0) + cp * w * cc * ck
            report.checked += 1
            if sv_canon(field, lhs) != sv_canon(field, rhs):
                report.fail("compat-right-coaction-left-action", (p, j),
                            sv_canon(field, lhs), sv_canon(field, rhs))
                return report
            # lambda(m.q) vs sum m(-1) q1 (x) m(0).q2
            lhs = {}
            for c, k, w in _co_of_sv(module.left_co, ra.act_basis(p, j)):
                lhs[(c, k)] = lhs.get((c, k), 0) + w
            rhs = {}
            for q1, q2, cq in dual.coalgebra.delta(p):
                for c, k, w in module.left_co.legs(j):
                    for c2, cc in dmul(c, q1).items():
                        for k2, ck in ra.act_basis(q2, k).items():
                            key = (c2, k2)
                            rhs[key] = rhs.get(key, 0) + cq * w * cc * ck
            report.checked += 1
            if sv_canon(field, lhs) != sv_canon(field, rhs):
                report.fail("compat-left-coaction-right-action", (p, j),
                            sv_canon(field, lhs), sv_canon(field, rhs))
                return report
            # rho(m.q) vs sum m(0).q1 (x) m(1) q2
            lhs = {}
            for c, k, w in _co_of_sv(module.right_co, ra.act_basis(p, j)):
                lhs[(c, k)] = lhs.get((c, k), 0) + w
            rhs = {}
            for q1, q2, cq in dual.coalgebra.delta(p):
                for c, k, w in module.right_co.legs(j):
                    for c2, cc in dmul(c, q2).items():
                        for k2, ck in ra.act_basis(q1, k).items():
                            key = (c2, k2)
                            rhs[key] = rhs.get(key, 0) + cq * w * cc * ck
            report.checked += 1
            if sv_canon(field, lhs) != sv_canon(field, rhs):
                report.fail("compat-right-coaction-right-action", (p, j),
                            sv_canon(field, lhs), sv_canon(field, rhs))
                return report
    return report


def _co_of_sv(coaction, space_sv):
    for j, cj in space_sv.items():
        for c, k, w in coaction.legs(j):
            yield c, k, cj * w


# ---------------------------------------------------------------------------
# examples

def example_bimodule(hopf, kind, v_dim=1):
    """The regular bimodule D, or the free one D (x) V (x) D.

    The free module carries outer multiplications; its coactions apply
    Delta to both outer slots and multiply the outer legs together, the
    middle slot staying inert.
    """
    from .algebra import dual_hopf
    dual = dual_hopf(hopf)
    n = hopf.dim
    field = hopf.field
    if kind == "regular":
        left_t, right_t = {}, {}
        for (i, j), entries in dual.algebra.mult.items():
            left_t[(i, j)] = dict(entries)
            right_t[(j, i)] = dict(entries)   # m.q = product m q
        la = ActionData(field, n, n, "left", left_t)
        ra = ActionData(field, n, n, "right", right_t)
        lc_t = {i: [(j, k, c) for j, k, c in dual.coalgebra.delta(i)]
                for i in range(n)}
        rc_t = {i: [(k, j, c) for j, k, c in dual.coalgebra.delta(i)]
                for i in range(n)}
        lc = CoactionData(field, n, n, "left", lc_t)
        rc = CoactionData(field, n, n, "right", rc_t)
        return HopfBimoduleData(field, n, la, ra, lc, rc)
    if kind != "free":
        raise ValueError(f"unknown example bimodule {kind!r}")
    if v_dim < 1:
        raise ValueError("free bimodule needs v_dim >= 1")
    m_dim = n * v_dim * n

    def idx(a, x, b):
        return (a * v_dim + x) * n + b

    dmul = dual.algebra.mul_basis
    left_t, right_t, lc_t, rc_t = {}, {}, {}, {}
    for a in range(n):
        for x in range(v_dim):
            for b in range(n):
                j = idx(a, x, b)
                for p in range(n):
                    entries = {idx(s, x, b): c for s, c in dmul(p, a).items()}
                    if entries:
                        left_t[(p, j)] = entries
                    entries = {idx(a, x, s): c for s, c in dmul(b, p).items()}
                    if entries:
                        right_t[(p, j)] = entries
                lc_terms, rc_terms = {}, {}
                for a1, a2, ca in dual.coalgebra.delta(a):
                    for b1, b2, cb in dual.coalgebra.delta(b):
                        for s, cs in dmul(a1, b1).items():
                            key = (s, idx(a2, x, b2))
                            lc_terms[key] = lc_terms.get(key, 0) + ca * cb * cs
                        for s, cs in dmul(a2, b2).items():
                            key = (s, idx(a1, x, b1))
                            rc_terms[key] = rc_terms.get(key, 0) + ca * cb * cs
                lc_t[j] = [(c, k, w) for (c, k), v in lc_terms.items()
                           for w in (field.canon(v),) if w != field.zero]
                rc_t[j] = [(c, k, w) for (c, k), v in rc_terms.items()
                           for w in (field.canon(v),) if w != field.zero]
    la = ActionData(field, n, m_dim, "left", left_t)
    ra = ActionData(field, n, m_dim, "right", right_t)
    lc = CoactionData(field, m_dim, n, "left", lc_t)
    rc = CoactionData(field, m_dim, n, "right", rc_t)
    return HopfBimoduleData(field, m_dim, la, ra, lc, rc)


# ---------------------------------------------------------------------------
# derived module structures

def _legs_by_evaluation(module):
    """Per basis element: (right leg value, left leg value) -> [(mid, w)]."""
    table = []
    for j in range(module.space_dim):
        by_eval = {}
        for cl, k, cr, w in bicomodule_legs(module.left_co, module.right_co, j):
            by_eval.setdefault((cr, cl), []).append((k, w))
        table.append(by_eval)
    return table


def derived_action(module, hopf, which, setup=None):
    """The left action of X, Y, Z or one of the smash halves on the module.

    All five come from evaluating coaction legs against grouplike slots
    and sandwiching with arrow-twisted bimodule actions:

      X: ((g (x) h) (x) (p (x) q)).m
           = sum m(-1)(g2) m(1)(h2) (h1->p<-g1).m(0).(h3->q<-g3)
      Y: (p # (h (x) g) # q).m
           = sum m(-1)(g1) m(1)(h1) p.m(0).(h2->q<-g2)
      Z: ((p (x) q) >< (h (x) g)).m = sum m(-1)(g) m(1)(h) p.m(0).q
      left smash  (p # (h (x) g)).m = sum m(-1)(g) m(1)(h) p.m(0)
      right smash ((h (x) g) # q).m = sum m(-1)(g1) m(1)(h1) m(0).(h2->q<-g2)
    """
    if setup is None:
        setup = StandardTriple(hopf)
    n = setup.n
    field = setup.field
    one = field.one
    delta = hopf.coalgebra.delta
    delta2 = hopf.coalgebra.delta2
    la, ra = module.left_act, module.right_act
    legs = _legs_by_evaluation(module)
    m_dim = module.space_dim
    tensor = {}

    def put(actor, j, sv):
        if sv:
            tensor[(actor, j)] = sv

    if which == "Z":
        for p in range(n):
            for q in range(n):
                base = (p * n + q) * n
                for h in range(n):
                    for g in range(n):
                        actor = (base + h) * n + g
                        for j in range(m_dim):
                            acc = {}
                            for k, w in legs[j].get((h, g), ()):
                                mid = ra.act_basis(q, k)
                                for k2, c2 in mid.items():
                                    for k3, c3 in la.act_basis(p, k2).items():
                                        acc[k3] = acc.get(k3, 0) + w * c2 * c3
                            put(actor, j, sv_canon(field, acc))
    elif which == "Y":
        for p in range(n):
            for h in range(n):
                dh = delta(h)
                for g in range(n):
                    dg = delta(g)
                    for q in range(n):
                        actor = ((p * n + h) * n + g) * n + q
                        for j in range(m_dim):
                            acc = {}
                            for h1, h2, ch in dh:
                                for g1, g2, cg in dg:
                                    hits = legs[j].get((h1, g1))
                                    if not hits:
                                        continue
                                    qv = setup.arrow_basis(h2, q, g2)
                                    w0 = ch * cg
                                    for k, w in hits:
                                        mid = ra.act_sv(qv, {k: one})
                                        for k2, c2 in mid.items():
                                            for k3, c3 in la.act_basis(p, k2).items():
                                                acc[k3] = acc.get(k3, 0) + w0 * w * c2 * c3
                            put(actor, j, sv_canon(field, acc))
    elif which == "X":
        for g in range(n):
            d2g = delta2(g)
            for h in range(n):
                d2h = delta2(h)
                for p in range(n):
                    for q in range(n):
                        actor = ((g * n + h) * n + p) * n + q
                        for j in range(m_dim):
                            acc = {}
                            for h1, h2, h3, ch in d2h:
                                for g1, g2, g3, cg in d2g:
                                    hits = legs[j].get((h2, g2))
                                    if not hits:
                                        continue
                                    pv = setup.arrow_basis(h1, p, g1)
                                    qv = setup.arrow_basis(h3, q, g3)
                                    w0 = ch * cg
                                    for k, w in hits:
                                        mid = ra.act_sv(qv, {k: one})
                                        out = la.act_sv(pv, mid)
                                        for k3, c3 in out.items():
                                            acc[k3] = acc.get(k3, 0) + w0 * w * c3
                            put(actor, j, sv_canon(field, acc))
    elif which == "left_smash":
        for p in range(n):
            for h in range(n):
                for g in range(n):
                    actor = (p * n + h) * n + g
                    for j in range(m_dim):
                        acc = {}
                        for k, w in legs[j].get((h, g), ()):
                            for k3, c3 in la.act_basis(p, k).items():
                                acc[k3] = acc.get(k3, 0) + w * c3
                        put(actor, j, sv_canon(field, acc))
    elif which == "right_smash":
        for h in range(n):
            dh = delta(h)
            for g in range(n):
                dg = delta(g)
                for q in range(n):
                    actor = (h * n + g) * n + q
                    for j in range(m_dim):
                        acc = {}
                        for h1, h2, ch in dh:
                            for g1, g2, cg in dg:
                                hits = legs[j].get((h1, g1))
                                if not hits:
                                    continue
                                qv = setup.arrow_basis(h2, q, g2)
                                w0 = ch * cg
                                for k, w in hits:
                                    for k2, c2 in ra.act_sv(qv, {k: one}).items():
                                        acc[k2] = acc.get(k2, 0) + w0 * w * c2
                        put(actor, j, sv_canon(field, acc))
    else:
        raise ValueError(f"unknown derived action {which!r}")
    actor_dim = n ** 4 if which in ("X", "Y", "Z") else n ** 3
    return ActionData(field, actor_dim, m_dim, "left", tensor)


def check_module_over_handle(handle, act, mode=None):
    """Unit and (xy).m = x.(y.m) for a left action over an AlgebraHandle."""
    if act.actor_dim != handle.dim:
        raise DimensionMismatchError("action actor does not match handle")
    if mode is None:
        mode = CheckMode.auto(handle.dim, cap=MORPHISM_DIM_CAP)
    report = CheckReport()
    field = handle.field
    one = field.one
    for j in range(act.space_dim):
        m = {j: one}
        got = act.act_sv(handle.unit, m)
        if got != m:
            report.fail("module-unit", (j,), got, m)
            return report
        report.checked += 1
    if mode.kind == "exhaustive":
        for i in range(handle.dim):
            ei = {i: one}
            for j in range(handle.dim):
                prod = handle.basis_product(i, j)
                for t in range(act.space_dim):
                    m = {t: one}
                    lhs = act.act_sv(prod, m)
                    rhs = act.act_sv(ei, act.act_basis(j, t))
                    report.checked += 1
                    if lhs != rhs:
                        report.fail("module-assoc", (i, j, t), lhs, rhs)
                        return report
        return report
    rng = random.Random(mode.seed)
    for t in range(mode.trials):
        x = sv_from_list(field, random_dense_vector(field, rng, handle.dim))
        y = sv_from_list(field, random_dense_vector(field, rng, handle.dim))
        m = sv_from_list(field, random_dense_vector(field, rng, act.space_dim))
        lhs = act.act_sv(handle.product(x, y), m)
        rhs = act.act_sv(x, act.act_sv(y, m))
        report.checked += 1
        if lhs != rhs:
            report.fail("module-assoc", ("trial", t), lhs, rhs)
            return report
    return report


def verify_action_correspondence(module, hopf, setup=None, mode=None,
                                 trials=200, seed=0):
    """act_X(x, m) = act_Y(phi x, m) = act_Z(beta x, m), act_Y(y, m) = act_Z(alpha y, m)."""
    if setup is None:
        setup = StandardTriple(hopf)
    n4 = setup.n ** 4
    field = setup.field
    one = field.one
    if mode is None:
        mode = CheckMode.auto(n4, cap=MORPHISM_DIM_CAP, trials=trials, seed=seed)
    act_x = derived_action(module, hopf, "X", setup)
    act_y = derived_action(module, hopf, "Y", setup)
    act_z = derived_action(module, hopf, "Z", setup)
    phi = build_iso("phi", hopf, setup)
    alpha = build_iso("alpha", hopf, setup)
    beta = build_iso("beta", hopf, setup)
    report = CheckReport()
    if mode.kind == "exhaustive":
        for i in range(n4):
            phi_i = phi.col_sv(i)
            beta_i = beta.col_sv(i)
            alpha_i = alpha.col_sv(i)
            for t in range(module.space_dim):
                m = {t: one}
                via_x = act_x.act_basis(i, t)
                via_y = act_y.act_sv(phi_i, m)
                report.checked += 1
                if via_x != via_y:
                    report.fail("correspondence-X-Y", (i, t), via_x, via_y)
                    return report
                via_z = act_z.act_sv(beta_i, m)
                if via_x != via_z:
                    report.fail("correspondence-X-Z", (i, t), via_x, via_z)
                    return report
                y_direct = act_y.act_basis(i, t)
                z_via_alpha = act_z.act_sv(alpha_i, m)
                if y_direct != z_via_alpha:
                    report.fail("correspondence-Y-Z", (i, t), y_direct,
                                z_via_alpha)
                    return report
        return report
    rng = random.Random(mode.seed)
    for t in range(mode.trials):
        x = random_dense_vector(field, rng, n4)
        m = sv_from_list(field, random_dense_vector(field, rng,
                                                    module.space_dim))
        x_sv = sv_from_list(field, x)
        via_x = act_x.act_sv(x_sv, m)
        via_y = act_y.act_sv(sv_from_list(field, phi.apply_dense(x)), m)
        report.checked += 1
        if via_x != via_y:
            report.fail("correspondence-X-Y", ("trial", t), via_x, via_y)
            return report
        via_z = act_z.act_sv(sv_from_list(field, beta.apply_dense(x)), m)
        if via_x != via_z:
            report.fail("correspondence-X-Z", ("trial", t), via_x, via_z)
            return report
        y_direct = act_y.act_sv(x_sv, m)
        z_via_alpha = act_z.act_sv(sv_from_list(field, alpha.apply_dense(x)), m)
        if y_direct != z_via_alpha:
            report.fail("correspondence-Y-Z", ("trial", t), y_direct,
                        z_via_alpha)
            return report
    return report


# ---------------------------------------------------------------------------
# the (A, H, B)-module picture

def triple_from_bimodule(module, hopf, setup=None):
    """Left actions of (D, K, D^op) on the module: the two bimodule actions
    (the right one re-read as a left action of the opposite algebra) and
    the coaction-evaluation action of K."""
    if setup is None:
        setup = StandardTriple(hopf)
    b_tensor = {key: dict(entries)
                for key, entries in module.right_act.tensor.items()}
    b_act = ActionData(module.field, setup.n, module.space_dim, "left",
                       b_tensor)
    h_act = bicomodule_to_module(module.left_co, module.right_co, hopf)
    return TripleModuleData(module.space_dim, module.left_act, h_act, b_act)


def assemble_two_sided_action(triple, a_dim, h_dim, b_dim):
    """(a # h # b).m = a.(h.(b.m)) as an explicit action tensor."""
    field = triple.a_act.field
    one = field.one
    tensor = {}
    for a in range(a_dim):
        for h in range(h_dim):
            for b in range(b_dim):
                actor = (a * h_dim + h) * b_dim + b
                for j in range(triple.space_dim):
                    step = triple.b_act.act_basis(b, j)
                    step = triple.h_act.act_sv({h: one}, step)
                    step = triple.a_act.act_sv({a: one}, step)
                    if step:
                        tensor[(actor, j)] = step
    return ActionData(field, a_dim * h_dim * b_dim, triple.space_dim, "left",
                      tensor)


def triple_module_roundtrip(triple, a_alg, hopf_mid, b_alg, act_left_a,
                            act_right_b, mode=None):
    """Full consistency suite for a candidate (A, H, B)-module.

    Checks the three compatibility conditions, their antipode-inverse
    equivalents, that the assembled action is a module over A # H # B,
    and that restricting along the three embeddings recovers the inputs.
    """
    field = triple.a_act.field
    one = field.one
    report = CheckReport()
    m_dim = triple.space_dim
    da, dh, db = a_alg.dim, hopf_mid.dim, b_alg.dim
    a_act, h_act, b_act = triple.a_act, triple.h_act, triple.b_act

    for a in range(da):
        for b in range(db):
            for j in range(m_dim):
                lhs = b_act.act_sv({b: one}, a_act.act_basis(a, j))
                rhs = a_act.act_sv({a: one}, b_act.act_basis(b, j))
                report.checked += 1
                if lhs != rhs:
                    report.fail("condition-i", (a, b, j), lhs, rhs)
                    return report
    s_inv = hopf_mid.antipode_inv_col
    for b in range(db):
        for h in range(dh):
            dl = hopf_mid.coalgebra.delta(h)
            for j in range(m_dim):
                lhs = b_act.act_sv({b: one}, h_act.act_basis(h, j))
                acc = {}
                for h1, h2, c in dl:
                    moved = act_right_b.act_basis(h2, b)
                    inner = b_act.act_sv(moved, {j: one})
                    for k, ck in h_act.act_sv({h1: one}, inner).items():
                        acc[k] = acc.get(k, 0) + c * ck
                rhs = sv_canon(field, acc)
                report.checked += 1
                if lhs != rhs:
                    report.fail("condition-ii", (b, h, j), lhs, rhs)
                    return report
                # equivalent form: h.(b.m) = sum (b.S^-1(h2)).(h1.m)
                lhs = h_act.act_sv({h: one}, b_act.act_basis(b, j))
                acc = {}
                for h1, h2, c in dl:
                    moved = act_right_b.act_sv(s_inv(h2), {b: one})
                    for k, ck in b_act.act_sv(moved,
                                              h_act.act_basis(h1, j)).items():
                        acc[k] = acc.get(k, 0) + c * ck
                rhs = sv_canon(field, acc)
                report.checked += 1
                if lhs != rhs:
                    report.fail("condition-ii-inverse-form", (b, h, j), lhs, rhs)
                    return report
    for h in range(dh):
        dl = hopf_mid.coalgebra.delta(h)
        for a in range(da):
            for j in range(m_dim):
                lhs = h_act.act_sv({h: one}, a_act.act_basis(a, j))
                acc = {}
                for h1, h2, c in dl:
                    moved = act_left_a.act_basis(h1, a)
                    for k, ck in a_act.act_sv(moved,
                                              h_act.act_basis(h2, j)).items():
                        acc[k] = acc.get(k, 0) + c * ck
                rhs = sv_canon(field, acc)
                report.checked += 1
                if lhs != rhs:
                    report.fail("condition-iii", (h, a, j), lhs, rhs)
                    return report
                # equivalent form: a.(h.m) = sum h2.((S^-1(h1).a).m)
                lhs = a_act.act_sv({a: one}, h_act.act_basis(h, j))
                acc = {}
                for h1, h2, c in dl:
                    moved = act_left_a.act_sv(s_inv(h1), {a: one})
                    inner = a_act.act_sv(moved, {j: one})
                    for k, ck in h_act.act_sv({h2: one}, inner).items():
                        acc[k] = acc.get(k, 0) + c * ck
                rhs = sv_canon(field, acc)
                report.checked += 1
                if lhs != rhs:
                    report.fail("condition-iii-inverse-form", (h, a, j), lhs, rhs)
                    return report

    handle = two_sided_crossed(a_alg, hopf_mid, b_alg, act_left_a, act_right_b,
                               verify=False)
    assembled = assemble_two_sided_action(triple, da, dh, db)
    report.absorb(check_module_over_handle(handle, assembled, mode))
    if not report.passed:
        return report

    unit_a = a_alg.unit_sv()
    unit_h = hopf_mid.algebra.unit_sv()
    unit_b = b_alg.unit_sv()
    for j in range(m_dim):
        m = {j: one}
        for a in range(da):
            emb = _embed3({a: one}, unit_h, unit_b, dh, db)
            got = assembled.act_sv(emb, m)
            want = a_act.act_basis(a, j)
            report.checked += 1
            if got != want:
                report.fail("restriction-A", (a, j), got, want)
                return report
        for h in range(dh):
            emb = _embed3(unit_a, {h: one}, unit_b, dh, db)
            got = assembled.act_sv(emb, m)
            want = h_act.act_basis(h, j)
            report.checked += 1
            if got != want:
                report.fail("restriction-H", (h, j), got, want)
                return report
        for b in range(db):
            emb = _embed3(unit_a, unit_h, {b: one}, dh, db)
            got = assembled.act_sv(emb, m)
            want = b_act.act_basis(b, j)
            report.checked += 1
            if got != want:
                report.fail("restriction-B", (b, j), got, want)
                return report
    return report


def _embed3(a_sv, h_sv, b_sv, dh, db):
    out = {}
    for a, ca in a_sv.items():
        for h, ch in h_sv.items():
            for b, cb in b_sv.items():
                out[(a * dh + h) * db + b] = ca * ch * cb
    return out


def diagonal_module_condition(c_act, h_act, c_alg, hopf_mid, act_left_c,
                              act_right_c, mode=None):
    """h.(c.m) = sum (h1.c.S^-1(h3)).(h2.m), and the assembled action
    (c >< h).m = c.(h.m) is a module over the diagonal crossed product."""
    field = c_act.field
    one = field.one
    report = CheckReport()
    m_dim = c_act.space_dim
    dc, dh = c_alg.dim, hopf_mid.dim
    s_inv = hopf_mid.antipode_inv_col
    for h in range(dh):
        d2 = hopf_mid.coalgebra.delta2(h)
        for c in range(dc):
            for j in range(m_dim):
                lhs = h_act.act_sv({h: one}, c_act.act_basis(c, j))
                acc = {}
                for h1, h2, h3, w in d2:
                    moved = act_right_c.act_sv(s_inv(h3),
                                               act_left_c.act_basis(h1, c))
                    inner = h_act.act_basis(h2, j)
                    for k, ck in c_act.act_sv(moved, inner).items():
                        acc[k] = acc.get(k, 0) + w * ck
                rhs = sv_canon(field, acc)
                report.checked += 1
                if lhs != rhs:
                    report.fail("diagonal-condition", (h, c, j), lhs, rhs)
                    return report
    handle = diagonal_crossed(c_alg, hopf_mid, act_left_c, act_right_c,
                              verify=False)
    tensor = {}
    for c in range(dc):
        for h in range(dh):
            actor = c * dh + h
            for j in range(m_dim):
                sv = c_act.act_sv({c: one}, h_act.act_basis(h, j))
                if sv:
                    tensor[(actor, j)] = sv
    assembled = ActionData(field, dc * dh, m_dim, "left", tensor)
    report.absorb(check_module_over_handle(handle, assembled, mode))
    return report


def verify_f_correspondence(triple, module, hopf, setup=None, mode=None):
    """act_two_sided(u, m) = act_diagonal(f(u), m) on the canonical triple."""
    if setup is None:
        setup = StandardTriple(hopf)
    n = setup.n
    field = setup.field
    one = field.one
    f_map = build_iso("f", hopf, setup)
    assembled = assemble_two_sided_action(triple, n, n * n, n)
    z_act = derived_action(module, hopf, "Z", setup)
    n4 = n ** 4
    if mode is None:
        mode = CheckMode.auto(n4, cap=MORPHISM_DIM_CAP)
    report = CheckReport()
    if mode.kind == "exhaustive":
        for i in range(n4):
            fi = f_map.col_sv(i)
            for t in range(module.space_dim):
                lhs = assembled.act_basis(i, t)
                rhs = z_act.act_sv(fi, {t: one})
                report.checked += 1
                if lhs != rhs:
                    report.fail("f-correspondence", (i, t), lhs, rhs)
                    return report
        return report
    rng = random.Random(mode.seed)
    for t in range(mode.trials):
        x = random_dense_vector(field, rng, n4)
        m = sv_from_list(field, random_dense_vector(field, rng,
                                                    module.space_dim))
        lhs = assembled.act_sv(sv_from_list(field, x), m)
        rhs = z_act.act_sv(sv_from_list(field, f_map.apply_dense(x)), m)
        report.checked += 1
        if lhs != rhs:
            report.fail("f-correspondence", ("trial", t), lhs, rhs)
            return report
    return report
