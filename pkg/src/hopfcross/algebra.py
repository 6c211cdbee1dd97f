"""Structure-constant algebras, coalgebras and Hopf algebras.

Conventions, fixed once for the whole package:

* multiplication is a sparse map ``(i, j) -> {k: c}`` meaning
  ``e_i e_j = sum_k c e_k``; the unit is a dense coefficient vector;
* comultiplication is ``i -> [(j, k, c), ...]`` meaning
  ``Delta(e_i) = sum c e_j (x) e_k``; the counit is a dense vector;
* the antipode is a dense matrix, column j = S(e_j);
* all tensor-product bases are lexicographic with the left factor major
  (``index = i * dim_right + j``);
* the double dual is identified with the original space through the
  evaluation pairing and no other identification is ever used.

Axiom checks are exhaustive on all basis triples up to dimension 32 and
switch to seeded random exact trials above that; over Q a random trial
is polynomial identity testing with integer coordinates in
[-10**6, 10**6], so a violated identity escapes detection with
probability at most (total degree)/(2*10**6 + 1) per trial.
"""

from dataclasses import dataclass, field as dc_field
import random

from .errors import DimensionMismatchError, FieldMismatchError
from .linalg import (LinearMap, mat_inv, kernel_basis,
                     sv_canon, sv_add_into, sv_from_list)
from .report import CheckMode, CheckReport, RANDOM_COORD_BOUND


@dataclass
class AlgebraData:
    field: object
    dim: int
    basis_labels: list
    mult: dict          # (i, j) -> {k: scalar}
    unit: list          # dense length-dim vector

    def __post_init__(self):
        n = self.dim
        if len(self.basis_labels) != n or len(self.unit) != n:
            raise DimensionMismatchError("labels/unit length must equal dim")
        for (i, j), entries in self.mult.items():
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"mult key ({i}, {j}) out of range")
            for k in entries:
                if not 0 <= k < n:
                    raise IndexError(f"mult target {k} out of range")

    def unit_sv(self):
        return sv_from_list(self.field, self.unit)

    def mul_basis(self, i, j):
        return self.mult.get((i, j), {})

    def mul_sv(self, x, y):
        acc = {}
        mult = self.mult
        for i, a in x.items():
            for j, b in y.items():
                entries = mult.get((i, j))
                if entries:
                    sv_add_into(acc, entries, a * b)
        return sv_canon(self.field, acc)

    def mul_dense(self, xs, ys):
        acc = [0] * self.dim
        zero = self.field.zero
        for (i, j), entries in self.mult.items():
            c = xs[i]
            if c == zero:
                continue
            d = ys[j]
            if d == zero:
                continue
            cd = c * d
            for k, m in entries.items():
                acc[k] += cd * m
        canon = self.field.canon
        return [canon(v) for v in acc]


@dataclass
class CoalgebraData:
    field: object
    dim: int
    basis_labels: list
    comult: dict        # i -> [(j, k, scalar), ...]
    counit: list
    _delta2: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        n = self.dim
        if len(self.basis_labels) != n or len(self.counit) != n:
            raise DimensionMismatchError("labels/counit length must equal dim")
        for i, terms in self.comult.items():
            if not 0 <= i < n:
                raise IndexError(f"comult key {i} out of range")
            for j, k, _ in terms:
                if not (0 <= j < n and 0 <= k < n):
                    raise IndexError(f"comult leg ({j}, {k}) out of range")

    def delta(self, i):
        return self.comult.get(i, [])

    def delta2(self, i):
        """(Delta (x) id) Delta on basis i, cached: [(a, b, c, coeff), ...]."""
        cached = self._delta2.get(i)
        if cached is None:
            acc = {}
            for j, k, c in self.delta(i):
                for a, b, c2 in self.delta(j):
                    key = (a, b, k)
                    acc[key] = acc.get(key, 0) + c * c2
            canon = self.field.canon
            cached = [(a, b, k, cc) for (a, b, k), v in acc.items()
                      for cc in (canon(v),) if cc != self.field.zero]
            self._delta2[i] = cached
        return cached

    def delta_sv(self, v, pair_dim=None):
        """Delta applied to a sparse vector, flattened over dim*dim."""
        n = self.dim
        acc = {}
        for i, c in v.items():
            for j, k, c2 in self.delta(i):
                key = j * n + k
                acc[key] = acc.get(key, 0) + c * c2
        return sv_canon(self.field, acc)


@dataclass
class HopfAlgebraData:
    algebra: AlgebraData
    coalgebra: CoalgebraData
    antipode: list      # dense dim x dim matrix, column j = S(e_j)
    _s_inv: object = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.algebra.dim != self.coalgebra.dim:
            raise DimensionMismatchError("algebra and coalgebra dims differ")
        n = self.algebra.dim
        if len(self.antipode) != n or any(len(r) != n for r in self.antipode):
            raise DimensionMismatchError("antipode matrix must be dim x dim")

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def basis_labels(self):
        return self.algebra.basis_labels

    def antipode_map(self):
        return LinearMap(self.field, self.dim, self.dim,
                         [row[:] for row in self.antipode])

    def antipode_col(self, j):
        zero = self.field.zero
        return {r: self.antipode[r][j] for r in range(self.dim)
                if self.antipode[r][j] != zero}

    def antipode_sv(self, v):
        acc = {}
        for j, c in v.items():
            sv_add_into(acc, self.antipode_col(j), c)
        return sv_canon(self.field, acc)

    def antipode_inverse(self):
        if self._s_inv is None:
            self._s_inv = LinearMap(self.field, self.dim, self.dim,
                                    mat_inv(self.field, self.antipode))
        return self._s_inv

    def antipode_inv_col(self, j):
        return self.antipode_inverse().col_sv(j)

    def antipode_inv_sv(self, v):
        return self.antipode_inverse().apply_sv(v)

    def counit_sv(self, v):
        acc = 0
        for i, c in v.items():
            acc += c * self.coalgebra.counit[i]
        return self.field.canon(acc)


def random_dense_vector(field, rng, dim, bound=RANDOM_COORD_BOUND):
    return [field.canon(field.random(rng, bound)) for _ in range(dim)]


# ---------------------------------------------------------------------------
# axiom checks

def check_algebra_axioms(alg, mode=None):
    """Unit law and associativity, exhaustive or on random exact vectors."""
    if mode is None:
        mode = CheckMode.auto(alg.dim)
    report = CheckReport()
    n = alg.dim
    unit = alg.unit_sv()
    if mode.kind == "exhaustive":
        for i in range(n):
            e = {i: alg.field.one}
            left = alg.mul_sv(unit, e)
            if left != e:
                report.fail("unit-law-left", (i,), left, e)
                return report
            right = alg.mul_sv(e, unit)
            if right != e:
                report.fail("unit-law-right", (i,), right, e)
                return report
            report.checked += 1
        for i in range(n):
            for j in range(n):
                ij = alg.mul_basis(i, j)
                for k in range(n):
                    lhs = alg.mul_sv(ij, {k: alg.field.one})
                    rhs = alg.mul_sv({i: alg.field.one}, alg.mul_basis(j, k))
                    report.checked += 1
                    if lhs != rhs:
                        report.fail("associativity", (i, j, k), lhs, rhs)
                        return report
        return report
    rng = random.Random(mode.seed)
    unit_dense = list(alg.unit)
    for t in range(mode.trials):
        x = random_dense_vector(alg.field, rng, n)
        y = random_dense_vector(alg.field, rng, n)
        z = random_dense_vector(alg.field, rng, n)
        ux = alg.mul_dense(unit_dense, x)
        if ux != x:
            report.fail("unit-law-left", ("trial", t), ux, x)
            return report
        xu = alg.mul_dense(x, unit_dense)
        if xu != x:
            report.fail("unit-law-right", ("trial", t), xu, x)
            return report
        lhs = alg.mul_dense(alg.mul_dense(x, y), z)
        rhs = alg.mul_dense(x, alg.mul_dense(y, z))
        report.checked += 1
        if lhs != rhs:
            report.fail("associativity", ("trial", t), lhs, rhs)
            return report
    return report


def check_coalgebra_axioms(coa, mode=None):
    """Coassociativity and the counit law (linear, so always per basis)."""
    report = CheckReport()
    n = coa.dim
    field = coa.field
    for i in range(n):
        lhs, rhs = {}, {}
        for j, k, c in coa.delta(i):
            for a, b, c2 in coa.delta(j):
                key = (a, b, k)
                lhs[key] = lhs.get(key, 0) + c * c2
            for a, b, c2 in coa.delta(k):
                key = (j, a, b)
                rhs[key] = rhs.get(key, 0) + c * c2
        if sv_canon(field, lhs) != sv_canon(field, rhs):
            report.fail("coassociativity", (i,), sv_canon(field, lhs),
                        sv_canon(field, rhs))
            return report
        left_counit, right_counit = {}, {}
        for j, k, c in coa.delta(i):
            left_counit[k] = left_counit.get(k, 0) + c * coa.counit[j]
            right_counit[j] = right_counit.get(j, 0) + c * coa.counit[k]
        target = {i: field.one}
        if sv_canon(field, left_counit) != target:
            report.fail("counit-left", (i,), sv_canon(field, left_counit), target)
            return report
        if sv_canon(field, right_counit) != target:
            report.fail("counit-right", (i,), sv_canon(field, right_counit), target)
            return report
        report.checked += 1
    return report


def _delta_of_product_mismatch(hopf, i, j):
    """Delta(e_i e_j) vs Delta(e_i) Delta(e_j); None if they agree."""
    alg, coa = hopf.algebra, hopf.coalgebra
    n = alg.dim
    lhs = {}
    for k, c in alg.mul_basis(i, j).items():
        for a, b, c2 in coa.delta(k):
            key = a * n + b
            lhs[key] = lhs.get(key, 0) + c * c2
    rhs = {}
    for a1, b1, c1 in coa.delta(i):
        for a2, b2, c2 in coa.delta(j):
            cc = c1 * c2
            for a, ca in alg.mul_basis(a1, a2).items():
                for b, cb in alg.mul_basis(b1, b2).items():
                    key = a * n + b
                    rhs[key] = rhs.get(key, 0) + cc * ca * cb
    lhs, rhs = sv_canon(alg.field, lhs), sv_canon(alg.field, rhs)
    return None if lhs == rhs else (lhs, rhs)


def check_hopf_axioms(hopf, mode=None):
    """Full Hopf suite: (co)algebra, bialgebra, antipode, S invertible."""
    alg, coa = hopf.algebra, hopf.coalgebra
    field = alg.field
    if mode is None:
        mode = CheckMode.auto(alg.dim)
    report = check_algebra_axioms(alg, mode)
    if not report.passed:
        return report
    report.absorb(check_coalgebra_axioms(coa))
    if not report.passed:
        return report
    n = alg.dim

    # Delta and counit are algebra maps; Delta(1) = 1 (x) 1, eps(1) = 1.
    unit = alg.unit_sv()
    delta_unit = coa.delta_sv(unit)
    unit_tensor = {}
    for i, a in unit.items():
        for j, b in unit.items():
            unit_tensor[i * n + j] = field.canon(a * b)
    if delta_unit != sv_canon(field, unit_tensor):
        report.fail("comult-of-unit", (), delta_unit, sv_canon(field, unit_tensor))
        return report
    eps_unit = hopf.counit_sv(unit)
    if not field.eq(eps_unit, field.one):
        report.fail("counit-of-unit", (), eps_unit, field.one)
        return report

    for i in range(n):
        for j in range(n):
            mismatch = _delta_of_product_mismatch(hopf, i, j)
            report.checked += 1
            if mismatch:
                report.fail("comult-multiplicative", (i, j), *mismatch)
                return report
            lhs = field.canon(sum(c * coa.counit[k]
                                  for k, c in alg.mul_basis(i, j).items()))
            rhs = field.canon(coa.counit[i] * coa.counit[j])
            if not field.eq(lhs, rhs):
                report.fail("counit-multiplicative", (i, j), lhs, rhs)
                return report

    # Convolution identities for the antipode.
    for i in range(n):
        left_acc, right_acc = {}, {}
        for j, k, c in coa.delta(i):
            s_j = hopf.antipode_col(j)
            for t, ct in s_j.items():
                sv_add_into(left_acc, alg.mul_basis(t, k), c * ct)
            s_k = hopf.antipode_col(k)
            for t, ct in s_k.items():
                sv_add_into(right_acc, alg.mul_basis(j, t), c * ct)
        target = sv_canon(field, {u: coa.counit[i] * cu for u, cu in unit.items()})
        left_acc = sv_canon(field, left_acc)
        if left_acc != target:
            report.fail("antipode-left", (i,), left_acc, target)
            return report
        right_acc = sv_canon(field, right_acc)
        if right_acc != target:
            report.fail("antipode-right", (i,), right_acc, target)
            return report
        report.checked += 1

    try:
        hopf.antipode_inverse()
    except Exception:
        report.fail("antipode-invertible", (), "singular", "invertible")
    return report


# ---------------------------------------------------------------------------
# constructions

def dual_hopf(hopf):
    """The dual Hopf algebra on the dual basis.

    Multiplication of the dual is the transpose of Delta, its unit is the
    counit, comultiplication is the transpose of multiplication, the
    counit is evaluation at 1, and the antipode is the transpose of S.
    Taking the dual twice returns the original structure constants under
    the evaluation pairing.
    """
    alg, coa = hopf.algebra, hopf.coalgebra
    field = alg.field
    n = alg.dim
    labels = [f"{lbl}^" for lbl in alg.basis_labels]

    mult = {}
    for i, terms in coa.comult.items():
        for j, k, c in terms:
            mult.setdefault((j, k), {})[i] = c
    dual_alg = AlgebraData(field, n, labels, mult, list(coa.counit))

    comult = {}
    for (i, j), entries in alg.mult.items():
        for k, c in entries.items():
            comult.setdefault(k, []).append((i, j, c))
    dual_coa = CoalgebraData(field, n, labels, comult, list(alg.unit))

    antipode = [[hopf.antipode[c][r] for c in range(n)] for r in range(n)]
    return HopfAlgebraData(dual_alg, dual_coa, antipode)


def op_algebra(alg, labels=None):
    """Same space with reversed multiplication."""
    mult = {}
    for (i, j), entries in alg.mult.items():
        mult[(j, i)] = dict(entries)
    return AlgebraData(alg.field, alg.dim,
                       list(labels or alg.basis_labels), mult, list(alg.unit))


def cop_coalgebra(coa, labels=None):
    """Same space with reversed comultiplication."""
    comult = {}
    for i, terms in coa.comult.items():
        comult[i] = [(k, j, c) for j, k, c in terms]
    return CoalgebraData(coa.field, coa.dim,
                         list(labels or coa.basis_labels), comult,
                         list(coa.counit))


def variant(hopf, which):
    """op / cop / op_cop of a Hopf algebra.

    op reverses multiplication, cop reverses comultiplication; in either
    single case the antipode becomes S^-1, while op_cop keeps S.
    """
    if which not in ("op", "cop", "op_cop"):
        raise ValueError(f"unknown variant {which!r}")
    alg, coa = hopf.algebra, hopf.coalgebra
    if which == "op":
        new_alg, new_coa = op_algebra(alg), coa
    elif which == "cop":
        new_alg, new_coa = alg, cop_coalgebra(coa)
    else:
        new_alg, new_coa = op_algebra(alg), cop_coalgebra(coa)
    if which == "op_cop":
        antipode = [row[:] for row in hopf.antipode]
    else:
        antipode = [row[:] for row in hopf.antipode_inverse().rows]
    return HopfAlgebraData(new_alg, new_coa, antipode)


def tensor_algebra(a, b, sep="*"):
    """Componentwise algebra structure on basis pairs, left factor major."""
    if a.field != b.field:
        raise FieldMismatchError("tensor factors over different fields")
    field = a.field
    da, db = a.dim, b.dim
    labels = [f"{la}{sep}{lb}" for la in a.basis_labels for lb in b.basis_labels]
    mult = {}
    for (i1, j1), e1 in a.mult.items():
        for (i2, j2), e2 in b.mult.items():
            entries = {}
            for k1, c1 in e1.items():
                for k2, c2 in e2.items():
                    c = field.canon(c1 * c2)
                    if c != field.zero:
                        entries[k1 * db + k2] = c
            if entries:
                mult[(i1 * db + i2, j1 * db + j2)] = entries
    unit = [field.canon(ua * ub) for ua in a.unit for ub in b.unit]
    return AlgebraData(field, da * db, labels, mult, unit)


def tensor_hopf(h1, h2):
    """H1 (x) H2 with componentwise structure and antipode S1 (x) S2."""
    if h1.field != h2.field:
        raise FieldMismatchError("tensor factors over different fields")
    field = h1.field
    d1, d2 = h1.dim, h2.dim
    alg = tensor_algebra(h1.algebra, h2.algebra)
    labels = alg.basis_labels
    comult = {}
    for i1 in range(d1):
        for i2 in range(d2):
            terms = []
            for j1, k1, c1 in h1.coalgebra.delta(i1):
                for j2, k2, c2 in h2.coalgebra.delta(i2):
                    c = field.canon(c1 * c2)
                    if c != field.zero:
                        terms.append((j1 * d2 + j2, k1 * d2 + k2, c))
            if terms:
                comult[i1 * d2 + i2] = terms
    counit = [field.canon(h1.coalgebra.counit[i1] * h2.coalgebra.counit[i2])
              for i1 in range(d1) for i2 in range(d2)]
    coa = CoalgebraData(field, d1 * d2, labels, comult, counit)
    antipode = [[field.canon(h1.antipode[r1][c1] * h2.antipode[r2][c2])
                 for c1 in range(d1) for c2 in range(d2)]
                for r1 in range(d1) for r2 in range(d2)]
    return HopfAlgebraData(alg, coa, antipode)


def antipode_inverse(hopf):
    """S^-1 as a LinearMap; raises SingularMatrixError on corrupted input."""
    return hopf.antipode_inverse()


def trace_form_radical(alg):
    """Basis of the radical of the trace form (x, y) -> tr(L_x L_y).

    In characteristic 0 this kernel is the Jacobson radical, so the
    algebra is semisimple iff the result is empty.  Rejected over F_p,
    where the criterion is invalid.
    """
    if alg.field.characteristic != 0:
        raise ValueError("trace-form radical requires characteristic 0")
    n = alg.dim
    field = alg.field

    # trace(L_i L_j) = sum_t coefficient of e_t in e_i (e_j e_t)
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = 0
            for t in range(n):
                for s, c in alg.mul_basis(j, t).items():
                    c2 = alg.mul_basis(i, s).get(t)
                    if c2 is not None:
                        acc += c * c2
            gram[i][j] = field.canon(acc)
    return kernel_basis(field, gram)
