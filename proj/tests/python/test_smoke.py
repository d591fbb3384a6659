import pytest

import ison


def test_generators_compose():
    a = ison.Isometry.alpha()
    b = ison.Isometry.beta()
    assert a * b == ison.Isometry.identity()
    ba = b * a
    assert ba != ison.Isometry.identity()
    assert ba.idempotent()
    assert ba.dom.min_member() == 2
    assert a.eval(1) == 2
    assert b.eval(1) is None


def test_canonical_round_trip():
    g = ison.Isometry(ison.CofiniteSet([2], 4), 2)
    cf = g.canonical()
    assert (cf.A, cf.n0, cf.i, cf.j) == ([1], 3, 1, 3)
    assert ison.rebuild(cf) == g
    assert g.noise() == 2


def test_enumeration_counts():
    assert len(ison.enumerate_elements(ison.EnumBounds(0, 1))) == 5
    assert len(ison.enumerate_elements(ison.EnumBounds())) == 140


def test_solvers():
    a = ison.Isometry.alpha()
    sols = ison.solve_left(a, ison.Isometry.identity())
    assert sols == [ison.Isometry.beta()]
    for x in ison.solve_right(a, a):
        assert x * a == a


def test_orders_and_chains():
    g = ison.bicyclic(2, 3)
    d = ison.bicyclic(1, 2)
    assert ison.ll_leq(g, d)
    assert ison.natural_leq(g, d)
    assert ison.conjugate_down(d, 1) == g
    assert ison.conjugate_up(g, 1) == d
    assert ison.conjugate_up(ison.Isometry.alpha(), 1) is None
    chain = ison.ChainCursor(d).take(3)
    assert chain == [d, g, ison.bicyclic(3, 4)]
    assert ison.coset_of(g) == ison.coset_of(d)


def test_commutation_bound():
    moved = ison.commute_eps(ison.Side.left, ison.Gen.alpha, 2, [1], 3, 5)
    assert moved.eps_side == ison.Side.left
    assert moved.eps == ison.Isometry.epsilon([1], 3, 3)
    with pytest.raises(ison.BoundViolation):
        ison.commute_eps(ison.Side.left, ison.Gen.alpha, 6, [1], 3, 5)


def test_congruence():
    g = ison.bicyclic(2, 5)
    assert ison.mg_image(g) == 3
    rel = ison.mg_related(g, ison.pow(ison.Isometry.alpha(), 3))
    assert rel.related and rel.witness is not None
    assert rel.witness * g == rel.witness * ison.pow(ison.Isometry.alpha(), 3)
    u, v = ison.simple_witness(g, ison.Isometry.beta())
    assert u * g * v == ison.Isometry.beta()
    assert ison.green_R(g, ison.bicyclic(2, 4))
    assert not ison.green_L(g, ison.bicyclic(2, 4))


def test_zero_topology():
    a = ison.Isometry.alpha()
    zero = ison.ZElem.zero()
    assert (zero * ison.ZElem(a)).is_zero()
    u = ison.CofiniteNbhd([ison.Isometry.identity()])
    v = ison.shrink_neighborhood(a, u)
    assert ison.Isometry.beta() in v.excluded
    assert ison.products_stay_inside(a, v, u, ison.EnumBounds(4, 6))
    assert ison.check_separate_continuity(a, u, ison.EnumBounds(4, 6))
    only_u, only_v = ison.symmetric_difference_check(u, ison.CofiniteNbhd([]))
    assert only_u == [] and only_v == [ison.Isometry.identity()]


def test_word_language():
    assert ison.format(ison.eval_text("a b")) == "I"
    assert ison.format(ison.eval_text("Z a")) == "Z"
    for g in ison.enumerate_elements(ison.EnumBounds(2, 2)):
        text = ison.format(g)
        back = ison.eval_text(text)
        assert not back.is_zero() and back.elem() == g
    with pytest.raises(ison.WordSyntaxError):
        ison.eval_text("a^")
    with pytest.raises(ison.InvalidParameters):
        ison.Isometry.epsilon([2], 5, 0)
    with pytest.raises(ison.InvalidParameters):
        ison.Isometry(ison.CofiniteSet([], 1), -1)


def test_verify_module():
    ids = ison.verify.check_ids()
    assert "bicyclic" in ids and "lemma-2.12" in ids
    result = ison.verify.run_check("bicyclic")
    assert result.passed and result.checks > 0
