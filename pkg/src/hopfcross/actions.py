"""Module and comodule structures over structure-constant algebras.

Action tensors are sparse maps ``(i, j) -> {k: c}`` where i indexes the
acting algebra and j, k the space: for a left action
``e_i . m_j = sum_k c m_k``, for a right action ``m_j . e_i = sum_k c m_k``.
Right actions keep their own tensors; they are never re-encoded as left
actions over the opposite algebra, so the displayed formulas stay
literal and conversions are explicit.

Coaction tensors are ``j -> [(c, k, coeff), ...]``; for a left coaction
``m_j -> sum coeff e^c (x) m_k`` and for a right one
``m_j -> sum coeff m_k (x) e^c``.  Coactions by the dual algebra index
their coalgebra legs by the dual basis, so "evaluate the leg at a basis
element of H" is coefficient extraction.
"""

from dataclasses import dataclass

from .algebra import (check_algebra_axioms, dual_hopf, tensor_algebra,
                      tensor_hopf, variant)
from .errors import DimensionMismatchError, UnverifiedActionError
from .linalg import LinearMap, sv_add_into, sv_canon
from .report import CheckMode, CheckReport


@dataclass
class ActionData:
    field: object
    actor_dim: int
    space_dim: int
    side: str           # "left" | "right"
    tensor: dict        # (actor i, src j) -> {dst k: c}

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"bad side {self.side!r}")
        for (i, j), entries in self.tensor.items():
            if not (0 <= i < self.actor_dim and 0 <= j < self.space_dim):
                raise IndexError(f"action key ({i}, {j}) out of range")
            for k in entries:
                if not 0 <= k < self.space_dim:
                    raise IndexError(f"action target {k} out of range")

    def act_basis(self, i, j):
        return self.tensor.get((i, j), {})

    def act_sv(self, actor_sv, space_sv):
        acc = {}
        tensor = self.tensor
        for i, a in actor_sv.items():
            for j, b in space_sv.items():
                entries = tensor.get((i, j))
                if entries:
                    sv_add_into(acc, entries, a * b)
        return sv_canon(self.field, acc)


@dataclass
class CoactionData:
    field: object
    space_dim: int
    coalgebra_dim: int
    side: str           # "left" | "right"
    tensor: dict        # j -> [(coalgebra c, space k, coeff), ...]

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"bad side {self.side!r}")
        for j, terms in self.tensor.items():
            if not 0 <= j < self.space_dim:
                raise IndexError(f"coaction key {j} out of range")
            for c, k, _ in terms:
                if not (0 <= c < self.coalgebra_dim and 0 <= k < self.space_dim):
                    raise IndexError(f"coaction leg ({c}, {k}) out of range")

    def legs(self, j):
        return self.tensor.get(j, [])


# ---------------------------------------------------------------------------
# axiom checks

def check_module_axioms(act, actor_alg, mode=None):
    """Unit acts as identity; action associates with the actor's product."""
    if act.actor_dim != actor_alg.dim:
        raise DimensionMismatchError("actor dim does not match algebra dim")
    if mode is None:
        mode = CheckMode.auto(act.actor_dim)
    report = CheckReport()
    field = act.field
    one = field.one
    unit = actor_alg.unit_sv()
    for j in range(act.space_dim):
        m = {j: one}
        got = act.act_sv(unit, m)
        if got != m:
            report.fail("module-unit", (j,), got, m)
            return report
        report.checked += 1
    for a in range(act.actor_dim):
        ea = {a: one}
        for b in range(act.actor_dim):
            ab = actor_alg.mul_basis(a, b)
            eb = {b: one}
            for j in range(act.space_dim):
                m = {j: one}
                lhs = act.act_sv(ab, m)
                if act.side == "left":
                    rhs = act.act_sv(ea, act.act_sv(eb, m))
                else:
                    rhs = act.act_sv(eb, act.act_sv(ea, m))
                report.checked += 1
                if lhs != rhs:
                    report.fail(f"module-assoc-{act.side}", (a, b, j), lhs, rhs)
                    return report
    return report


def check_module_algebra(side, hopf, alg, act, mode=None):
    """Module axioms plus H-equivariance of the product and unit of `alg`.

    Left:  h.(ab) = sum (h1.a)(h2.b) and h.1 = eps(h) 1.
    Right: (ab).h = sum (a.h1)(b.h2) and 1.h = eps(h) 1.
    """
    if act.side != side:
        raise ValueError(f"action is {act.side}-sided, expected {side}")
    if act.space_dim != alg.dim:
        raise DimensionMismatchError("action space does not match algebra dim")
    report = check_module_axioms(act, hopf.algebra, mode)
    if not report.passed:
        return report
    field = act.field
    one = field.one
    unit_a = alg.unit_sv()
    counit = hopf.coalgebra.counit
    for h in range(hopf.dim):
        got = act.act_sv({h: one}, unit_a)
        want = sv_canon(field, {k: counit[h] * c for k, c in unit_a.items()})
        if got != want:
            report.fail("module-algebra-unit", (h,), got, want)
            return report
        delta = hopf.coalgebra.delta(h)
        for a in range(alg.dim):
            for b in range(alg.dim):
                lhs = act.act_sv({h: one}, alg.mul_basis(a, b))
                acc = {}
                for h1, h2, c in delta:
                    part = alg.mul_sv(act.act_basis(h1, a), act.act_basis(h2, b))
                    sv_add_into(acc, part, c)
                rhs = sv_canon(field, acc)
                report.checked += 1
                if lhs != rhs:
                    report.fail(f"module-algebra-{side}", (h, a, b), lhs, rhs)
                    return report
    return report


def check_coaction_axioms(coact, coalgebra):
    """Coassociativity with Delta of the coacting coalgebra; counit law."""
    if coact.coalgebra_dim != coalgebra.dim:
        raise DimensionMismatchError("coaction coalgebra dim mismatch")
    report = CheckReport()
    field = coact.field
    for j in range(coact.space_dim):
        # both sides live in C (x) C (x) M (left) or M (x) C (x) C (right)
        lhs, rhs = {}, {}
        for c, k, w in coact.legs(j):
            for c1, c2, w2 in coalgebra.delta(c):
                lhs_key = (c1, c2, k)
                lhs[lhs_key] = lhs.get(lhs_key, 0) + w * w2
            inner = coact.legs(k)
            for c2, k2, w2 in inner:
                if coact.side == "left":
                    rhs_key = (c, c2, k2)
                else:
                    rhs_key = (c2, c, k2)
                rhs[rhs_key] = rhs.get(rhs_key, 0) + w * w2
        if sv_canon(field, lhs) != sv_canon(field, rhs):
            report.fail(f"coaction-coassoc-{coact.side}", (j,),
                        sv_canon(field, lhs), sv_canon(field, rhs))
            return report
        counit_applied = {}
        for c, k, w in coact.legs(j):
            counit_applied[k] = counit_applied.get(k, 0) + w * coalgebra.counit[c]
        if sv_canon(field, counit_applied) != {j: field.one}:
            report.fail(f"coaction-counit-{coact.side}", (j,),
                        sv_canon(field, counit_applied), {j: field.one})
            return report
        report.checked += 1
    return report


def bicomodule_legs(left_co, right_co, j):
    """Two-sided coaction of basis m_j: [(left leg, middle, right leg, coeff)].

    Computed as (id (x) rho) lambda; the bicomodule coherence check
    guarantees this equals (lambda (x) id) rho.
    """
    out = {}
    for cl, k, w in left_co.legs(j):
        for cr, k2, w2 in right_co.legs(k):
            key = (cl, k2, cr)
            out[key] = out.get(key, 0) + w * w2
    field = left_co.field
    canon = field.canon
    return [(cl, k, cr, c) for (cl, k, cr), v in out.items()
            for c in (canon(v),) if c != field.zero]


def check_bicomodule_coherence(left_co, right_co):
    """(lambda (x) id) rho = (id (x) rho) lambda on every basis element."""
    report = CheckReport()
    field = left_co.field
    for j in range(left_co.space_dim):
        via_left = {}
        for cl, k, w in left_co.legs(j):
            for cr, k2, w2 in right_co.legs(k):
                key = (cl, k2, cr)
                via_left[key] = via_left.get(key, 0) + w * w2
        via_right = {}
        for cr, k, w in right_co.legs(j):
            for cl, k2, w2 in left_co.legs(k):
                key = (cl, k2, cr)
                via_right[key] = via_right.get(key, 0) + w * w2
        if sv_canon(field, via_left) != sv_canon(field, via_right):
            report.fail("bicomodule-coherence", (j,),
                        sv_canon(field, via_left), sv_canon(field, via_right))
            return report
        report.checked += 1
    return report


# ---------------------------------------------------------------------------
# the regular actions of H on H* and derived structures

def regular_actions(hopf):
    """The left and right regular actions of H on its dual.

    (h -> f)(h') = f(h'h) and (f <- h')(h) = f(h'h), expressed on the
    dual basis: e_u -> e^j = sum_t m[t,u][j] e^t and
    e^j <- e_v = sum_t m[v,t][j] e^t.
    """
    n = hopf.dim
    field = hopf.field
    left, right = {}, {}
    for (t, u), entries in hopf.algebra.mult.items():
        for j, c in entries.items():
            left.setdefault((u, j), {})[t] = c
    for (v, t), entries in hopf.algebra.mult.items():
        for j, c in entries.items():
            right.setdefault((v, j), {})[t] = c
    return (ActionData(field, n, n, "left", left),
            ActionData(field, n, n, "right", right))


def trivial_action(hopf, space_dim, side):
    """h . m = eps(h) m; the degenerate action that untwists every product."""
    field = hopf.field
    tensor = {}
    for i in range(hopf.dim):
        e = field.canon(hopf.coalgebra.counit[i])
        if e == field.zero:
            continue
        for j in range(space_dim):
            tensor[(i, j)] = {j: e}
    return ActionData(field, hopf.dim, space_dim, side, tensor)


def build_bimodule_algebra(a_alg, act_left, b_alg, act_right, hopf,
                           verify=True, sep="*"):
    """Tensor algebra A (x) B with H acting on the left through A only and
    on the right through B only; the two actions commute slot by slot.

    Raises UnverifiedActionError unless both inputs pass their
    module-algebra checks (skippable for pre-verified callers).
    """
    if verify:
        rep = check_module_algebra("left", hopf, a_alg, act_left)
        if not rep.passed:
            raise UnverifiedActionError("left factor is not a module algebra", rep)
        rep = check_module_algebra("right", hopf, b_alg, act_right)
        if not rep.passed:
            raise UnverifiedActionError("right factor is not a module algebra", rep)
    field = a_alg.field
    db = b_alg.dim
    c_alg = tensor_algebra(a_alg, b_alg, sep=sep)
    left_tensor, right_tensor = {}, {}
    for (i, a), entries in act_left.tensor.items():
        for b in range(db):
            left_tensor[(i, a * db + b)] = {k * db + b: c for k, c in entries.items()}
    for (i, b), entries in act_right.tensor.items():
        for a in range(a_alg.dim):
            right_tensor[(i, a * db + b)] = {a * db + k: c for k, c in entries.items()}
    act_l = ActionData(field, hopf.dim, c_alg.dim, "left", left_tensor)
    act_r = ActionData(field, hopf.dim, c_alg.dim, "right", right_tensor)
    return c_alg, act_l, act_r


def check_bimodule_algebra(hopf, alg, act_left, act_right, mode=None):
    """Left and right module-algebra axioms plus h.(c.g) = (h.c).g."""
    report = check_module_algebra("left", hopf, alg, act_left, mode)
    if not report.passed:
        return report
    report.absorb(check_module_algebra("right", hopf, alg, act_right, mode))
    if not report.passed:
        return report
    one = alg.field.one
    for h in range(hopf.dim):
        for g in range(hopf.dim):
            for c in range(alg.dim):
                lhs = act_left.act_sv({h: one}, act_right.act_basis(g, c))
                rhs = act_right.act_sv({g: one}, act_left.act_basis(h, c))
                report.checked += 1
                if lhs != rhs:
                    report.fail("bimodule-actions-commute", (h, g, c), lhs, rhs)
                    return report
    return report


def bicomodule_to_module(left_co, right_co, hopf):
    """Convert an H*-bicomodule into a left (H (x) H^op)-module.

    (h (x) g) . m = sum m(-1)(g) m(1)(h) m(0); the first tensor slot of
    the actor evaluates the right coaction leg, the second the left one.
    """
    n = hopf.dim
    if left_co.coalgebra_dim != n or right_co.coalgebra_dim != n:
        raise DimensionMismatchError("coaction legs must be dual-basis indexed")
    dual_coa = dual_hopf(hopf).coalgebra
    for co in (left_co, right_co):
        rep = check_coaction_axioms(co, dual_coa)
        if not rep.passed:
            raise UnverifiedActionError("coaction fails its axioms", rep)
    rep = check_bicomodule_coherence(left_co, right_co)
    if not rep.passed:
        raise UnverifiedActionError("not a bicomodule", rep)
    field = left_co.field
    tensor = {}
    for j in range(left_co.space_dim):
        for cl, k, cr, w in bicomodule_legs(left_co, right_co, j):
            # actor index (u, v) = (H slot, H^op slot): u = cr, v = cl
            key = (cr * n + cl, j)
            tensor.setdefault(key, {})
            tensor[key][k] = field.canon(tensor[key].get(k, 0) + w)
    tensor = {key: {k: c for k, c in entries.items() if c != field.zero}
              for key, entries in tensor.items()}
    tensor = {key: entries for key, entries in tensor.items() if entries}
    return ActionData(field, n * n, left_co.space_dim, "left", tensor)


def comodule_algebra_map(hopf):
    """The coaction making H* a right comodule algebra over H* (x) H*^cop.

    p maps to sum p2 (x) (p3 (x) p1); returns the matrix of the map
    H* -> H* (x) (H* (x) H*^cop) on dual bases together with a report
    verifying that it is an algebra map and a coassociative, counital
    coaction.
    """
    dual = dual_hopf(hopf)
    n = hopf.dim
    field = hopf.field
    big = tensor_hopf(dual, variant(dual, "cop"))

    def rho_basis(t):
        out = {}
        for a, b, c, w in dual.coalgebra.delta2(t):
            key = b * n * n + c * n + a     # p2 (x) (p3 (x) p1)
            out[key] = out.get(key, 0) + w
        return sv_canon(field, out)

    cols = [rho_basis(t) for t in range(n)]
    lm = LinearMap.from_columns(field, n, n ** 3, cols)

    report = CheckReport()
    # coassociativity and counit as a right comodule over `big`
    for t in range(n):
        lhs, rhs = {}, {}
        for key, w in cols[t].items():
            v, d = divmod(key, n * n)
            for key2, w2 in cols[v].items():
                v2, d2 = divmod(key2, n * n)
                k = (v2, d2, d)
                lhs[k] = lhs.get(k, 0) + w * w2
            for d1, d2, w2 in big.coalgebra.delta(d):
                k = (v, d1, d2)
                rhs[k] = rhs.get(k, 0) + w * w2
        if sv_canon(field, lhs) != sv_canon(field, rhs):
            report.fail("comodule-coassoc", (t,), sv_canon(field, lhs),
                        sv_canon(field, rhs))
            return lm, report
        counit_applied = {}
        for key, w in cols[t].items():
            v, d = divmod(key, n * n)
            counit_applied[v] = counit_applied.get(v, 0) + w * big.coalgebra.counit[d]
        if sv_canon(field, counit_applied) != {t: field.one}:
            report.fail("comodule-counit", (t,),
                        sv_canon(field, counit_applied), {t: field.one})
            return lm, report
        report.checked += 1
    # algebra map into H* (x) big with componentwise product
    for i in range(n):
        for j in range(n):
            lhs = {}
            for k, c in dual.algebra.mul_basis(i, j).items():
                sv_add_into(lhs, cols[k], c)
            rhs = {}
            for key1, w1 in cols[i].items():
                v1, d1 = divmod(key1, n * n)
                for key2, w2 in cols[j].items():
                    v2, d2 = divmod(key2, n * n)
                    for v, cv in dual.algebra.mul_basis(v1, v2).items():
                        for d, cd in big.algebra.mul_basis(d1, d2).items():
                            key = v * n * n + d
                            rhs[key] = rhs.get(key, 0) + w1 * w2 * cv * cd
            report.checked += 1
            if sv_canon(field, lhs) != sv_canon(field, rhs):
                report.fail("comodule-algebra-map", (i, j),
                            sv_canon(field, lhs), sv_canon(field, rhs))
                return lm, report
    return lm, report
