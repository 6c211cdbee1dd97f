import pytest

from hopfcross.actions import (ActionData, CoactionData, bicomodule_legs,
                               bicomodule_to_module, build_bimodule_algebra,
                               check_bicomodule_coherence, check_coaction_axioms,
                               check_module_algebra, check_module_axioms,
                               comodule_algebra_map, regular_actions,
                               trivial_action)
from hopfcross.algebra import dual_hopf, tensor_hopf, variant
from hopfcross.catalog import catalog_named
from hopfcross.errors import UnverifiedActionError
from hopfcross.fields import QQ


def eval_functional(hopf, f_sv, h_idx):
    # pairing <e^j, e_i> = delta_ij on the dual basis
    return f_sv.get(h_idx, 0)


def oracle_left_arrow(hopf, h_idx, f_sv):
    # (h -> f)(h') = f(h' h), evaluated basis element by basis element
    out = {}
    for t in range(hopf.dim):
        prod = hopf.algebra.mul_basis(t, h_idx)
        val = sum(c * eval_functional(hopf, f_sv, s) for s, c in prod.items())
        if val:
            out[t] = val
    return out


def oracle_right_arrow(hopf, f_sv, h_idx):
    # (f <- h')(h) = f(h' h)
    out = {}
    for t in range(hopf.dim):
        prod = hopf.algebra.mul_basis(h_idx, t)
        val = sum(c * eval_functional(hopf, f_sv, s) for s, c in prod.items())
        if val:
            out[t] = val
    return out


def test_regular_actions_match_evaluation_oracle(cyclic2, sweedler):
    for hopf in (cyclic2, sweedler):
        left, right = regular_actions(hopf)
        for h in range(hopf.dim):
            for j in range(hopf.dim):
                assert left.act_basis(h, j) == oracle_left_arrow(hopf, h, {j: 1})
                assert right.act_basis(h, j) == oracle_right_arrow(hopf, {j: 1}, h)


def test_regular_action_spec_values(cyclic2):
    left, right = regular_actions(cyclic2)
    assert left.act_basis(1, 0) == {1: 1}      # g -> e0 = e1
    assert right.act_basis(1, 1) == {0: 1}     # e1 <- g = e0
    for j in range(2):
        assert left.act_sv({0: 1}, {j: 1}) == {j: 1}   # 1 -> f = f


def test_regular_actions_are_module_actions(cyclic3, sweedler):
    for hopf in (cyclic3, sweedler):
        left, right = regular_actions(hopf)
        assert check_module_axioms(left, hopf.algebra).passed
        assert check_module_axioms(right, hopf.algebra).passed


def test_regular_actions_are_module_algebras_all_catalog():
    # the dual is a left module algebra under -> and a right one under <-
    for name in ("cyclic:2", "cyclic:3", "dual_cyclic:2", "sweedler4",
                 "taft:2:5"):
        hopf = catalog_named(name)
        dual = dual_hopf(hopf)
        left, right = regular_actions(hopf)
        assert check_module_algebra("left", hopf, dual.algebra, left).passed
        assert check_module_algebra("right", hopf, dual.algebra, right).passed


def test_dual_is_module_algebra_over_k(setup_c2, setup_sw):
    # (h (x) g).f = h -> f <- g and the twisted right-sided counterpart
    for setup in (setup_c2, setup_sw):
        rep = check_module_algebra("left", setup.K, setup.dual.algebra,
                                   setup.act_on_dual)
        assert rep.passed
        rep = check_module_algebra("right", setup.K, setup.dual_op_alg,
                                   setup.act_on_dual_op)
        assert rep.passed


def test_trivial_action_is_module_algebra(sweedler):
    act = trivial_action(sweedler, sweedler.dim, "left")
    rep = check_module_algebra("left", sweedler, sweedler.algebra, act)
    assert rep.passed


def test_module_algebra_check_fails_on_wrong_side(cyclic2):
    left, _ = regular_actions(cyclic2)
    with pytest.raises(ValueError):
        check_module_algebra("right", cyclic2, dual_hopf(cyclic2).algebra, left)


def test_build_bimodule_algebra_canonical(setup_c2):
    c, act_l, act_r = (setup_c2.C, setup_c2.act_left_C, setup_c2.act_right_C)
    assert c.dim == 4
    one = QQ.one
    # left action touches only the first slot, right only the second
    for h in range(setup_c2.K.dim):
        for a in range(2):
            for b in range(2):
                j = a * 2 + b
                left = act_l.act_basis(h, j)
                assert all(k % 2 == b for k in left)
                right = act_r.act_basis(h, j)
                assert all(k // 2 == a for k in right)
    # the two actions commute on all basis triples
    for h in range(setup_c2.K.dim):
        for g in range(setup_c2.K.dim):
            for j in range(4):
                lhs = act_l.act_sv({h: one}, act_r.act_basis(g, j))
                rhs = act_r.act_sv({g: one}, act_l.act_basis(h, j))
                assert lhs == rhs


def test_build_bimodule_algebra_trivial_case():
    from hopfcross.algebra import AlgebraData
    hopf = catalog_named("cyclic:2")
    one_dim = AlgebraData(QQ, 1, ["1"], {(0, 0): {0: 1}}, [1])
    triv_l = trivial_action(hopf, 1, "left")
    triv_r = trivial_action(hopf, 1, "right")
    c, act_l, act_r = build_bimodule_algebra(one_dim, triv_l, one_dim, triv_r,
                                             hopf)
    assert c.dim == 1
    assert act_l.act_basis(0, 0) == {0: 1}
    assert act_l.act_basis(1, 0) == {0: 1}     # eps(g) = 1 for the group algebra


def test_build_bimodule_algebra_rejects_bad_action(cyclic2):
    dual = dual_hopf(cyclic2)
    bad = ActionData(QQ, 2, 2, "left",
                     {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1},
                      (1, 1): {1: 1}})   # g.(g.e0) = e1 but (gg).e0 = e0
    with pytest.raises(UnverifiedActionError):
        build_bimodule_algebra(dual.algebra, bad, dual.algebra,
                               trivial_action(cyclic2, 2, "right"), cyclic2)


def regular_coactions(hopf):
    dual = dual_hopf(hopf)
    n = hopf.dim
    lc = CoactionData(hopf.field, n, n, "left",
                      {i: [(j, k, c) for j, k, c in dual.coalgebra.delta(i)]
                       for i in range(n)})
    rc = CoactionData(hopf.field, n, n, "right",
                      {i: [(k, j, c) for j, k, c in dual.coalgebra.delta(i)]
                       for i in range(n)})
    return lc, rc


def test_coaction_axioms_and_coherence(sweedler):
    dual = dual_hopf(sweedler)
    lc, rc = regular_coactions(sweedler)
    assert check_coaction_axioms(lc, dual.coalgebra).passed
    assert check_coaction_axioms(rc, dual.coalgebra).passed
    assert check_bicomodule_coherence(lc, rc).passed


def test_coaction_axioms_catch_broken_counit(cyclic2):
    dual = dual_hopf(cyclic2)
    bad = CoactionData(QQ, 2, 2, "left", {0: [(0, 0, 1)], 1: [(0, 1, 1)]})
    rep = check_coaction_axioms(bad, dual.coalgebra)
    assert not rep.passed


def test_bicomodule_to_module_regular(cyclic2):
    lc, rc = regular_coactions(cyclic2)
    act = bicomodule_to_module(lc, rc, cyclic2)
    # (g (x) g).e1 = e1 and (1 (x) 1).m = m
    assert act.act_basis(1 * 2 + 1, 1) == {1: 1}
    assert act.act_basis(0, 0) == {0: 1}
    assert act.act_basis(0, 1) == {1: 1}
    # (g (x) 1).e1: only the right coaction leg is evaluated at g
    legs = bicomodule_legs(lc, rc, 1)
    expect = {}
    for cl, k, cr, w in legs:
        if cl == 0 and cr == 1:
            expect[k] = expect.get(k, 0) + w
    assert act.act_basis(1 * 2 + 0, 1) == expect
    # and it is a genuine module over K = H (x) H^op
    k = tensor_hopf(cyclic2, variant(cyclic2, "op"))
    assert check_module_axioms(act, k.algebra).passed


def test_bicomodule_to_module_rejects_non_bicomodule(cyclic2):
    lc, rc = regular_coactions(cyclic2)
    bad = CoactionData(QQ, 2, 2, "left", {0: [(0, 0, 1)], 1: [(0, 1, 1)]})
    with pytest.raises(UnverifiedActionError):
        bicomodule_to_module(bad, rc, cyclic2)


def test_comodule_algebra_map_unit_and_example(cyclic2):
    lm, rep = comodule_algebra_map(cyclic2)
    assert rep.passed
    # the unit of the dual (eps = e^0 + e^1) goes to eps (x) eps (x) eps
    image = lm.apply_sv({0: 1, 1: 1})
    assert image == {k: 1 for k in range(8)}
    # p = e1 spreads over all (j, k, i) with i + j + k = 1 mod 2
    image = lm.apply_sv({1: 1})
    expect = {}
    for i in range(2):
        for j in range(2):
            for k in range(2):
                if (i + j + k) % 2 == 1:
                    expect[j * 4 + k * 2 + i] = 1
    assert image == expect


def test_comodule_algebra_map_all_catalog():
    for name in ("cyclic:2", "cyclic:3", "sweedler4", "taft:2:5"):
        _, rep = comodule_algebra_map(catalog_named(name))
        assert rep.passed, name
