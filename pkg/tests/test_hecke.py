"""0-Hecke modules: constructions, relations, twists, hulls, and covers."""

import json

import numpy as np
import pytest

from wol.compositions import all_compositions, comp_of, is_peak, set_of

from wol.diagrams import reading
from wol.errors import DomainError, OrderError
from wol.hecke import (
    HeckeModule,
    check_relations,
    hull_or_cover,
    intertwiner_from_dp_iso,
    module_B,
    module_Bbar,
    module_M,
    module_SPIT,
    module_to_json,
    projective_decomposition,
    signed_intertwiner,
    twist_theta_chi,
)
from wol.permutations import (
    LEFT,
    all_perms,
    compose,
    descent_class,
    descents,
    longest_element,
    longest_parabolic,
    parse_perm,
    w1,
    weak_interval,
)
from wol.posets import interval_to_poset
from wol.tableaux import enumerate_family, sink_source
from wol.verify import all_left_intervals


def test_singleton_module_is_descent_indicator():
    sigma = parse_perm("231564")
    M = module_B(weak_interval(sigma, sigma, LEFT))
    des = descents(sigma, LEFT)
    for i in range(1, 6):
        assert M.pis[i - 1][0, 0] == (1 if i in des else 0)


def test_projective_module_dimension():
    # B over the full descent class of alpha has the projective dimension;
    # the dimensions over all alpha sum to n!.
    for n in range(1, 6):
        total = 0
        for alpha in all_compositions(n):
            s_comp = frozenset(range(1, n)) - set_of(alpha)
            M = module_B(descent_class(s_comp, s_comp, n))
            total += M.dim
        assert total == len(list(all_perms(n)))


def test_module_m_equals_module_b_on_intervals():
    I = weak_interval(parse_perm("132465"), parse_perm("231564"), LEFT)
    MB = module_B(I)
    MM = module_M(interval_to_poset(I))
    assert MB.basis == MM.basis
    assert all(np.array_equal(a, b) for a, b in zip(MB.pis, MM.pis))


def test_bbar_is_signed_version():
    I = weak_interval(parse_perm("1324"), parse_perm("3421"), LEFT)
    M, Mbar = module_B(I), module_Bbar(I)
    for i in range(1, 4):
        bar = Mbar.pi_bar(i)
        for col, g in enumerate(Mbar.basis):
            if i in descents(g, LEFT):
                assert bar[col, col] == -1
            else:
                assert bar[col, col] == 0
    check_relations(Mbar)


def test_module_spit_golden():
    M = module_SPIT((3, 2, 3, 1))
    lo = reading(sink_source("SPIT", (3, 2, 3, 1), "sink"), "LRTB")
    from wol.compositions import reverse

    I = weak_interval(lo, w1(set_of(reverse((3, 2, 3, 1))), 9), LEFT)
    assert M.dim == I.size == len(enumerate_family("SPIT", (3, 2, 3, 1)))
    with pytest.raises(Exception):
        module_SPIT((1, 2))


@pytest.mark.parametrize("alpha", [(2,), (2, 2), (3, 1), (2, 2, 1), (3, 2)])
def test_module_spit_matches_bbar(alpha):
    # reading words carry the tableau basis onto the negative interval module
    M = module_SPIT(alpha)
    n = sum(alpha)
    lo = reading(sink_source("SPIT", alpha, "sink"), "LRTB")
    from wol.compositions import reverse

    I = weak_interval(lo, w1(set_of(reverse(alpha)), n), LEFT)
    B = module_Bbar(I)
    index = {g: k for k, g in enumerate(B.basis)}
    pairing = [(k, index[reading(T, "LRTB")]) for k, T in enumerate(M.basis)]
    signs = signed_intertwiner(M, B, pairing)
    assert signs is not None
    assert set(signs.values()) == {1}


def test_twist_of_one_dimensional():
    # F_alpha modules twist to F_{alpha^c}
    n = 5
    for alpha in all_compositions(n):
        sigma = longest_parabolic(frozenset(range(1, n)) - set_of(alpha), n)
        M = module_B(weak_interval(sigma, sigma, LEFT))
        T = twist_theta_chi(M)
        for i in range(1, n):
            assert T.pis[i - 1][0, 0] == 1 - M.pis[i - 1][0, 0]


def test_twist_matches_reversed_interval():
    n = 4
    w0 = longest_element(n)
    for I in all_left_intervals(n):
        T = twist_theta_chi(module_B(I))
        J = weak_interval(compose(I.hi, w0), compose(I.lo, w0), LEFT)
        MJ = module_B(J)
        index = {g: k for k, g in enumerate(MJ.basis)}
        pairing = [(k, index[compose(g, w0)]) for k, g in enumerate(T.basis)]
        assert signed_intertwiner(T, MJ, pairing) is not None


def test_double_twist_identity():
    n = 4
    for I in all_left_intervals(n):
        M = module_B(I)
        TT = twist_theta_chi(twist_theta_chi(M))
        assert signed_intertwiner(TT, M, [(k, k) for k in range(M.dim)]) is not None


def test_intertwiner_from_dp_iso():
    I = weak_interval(parse_perm("132465"), parse_perm("231564"), LEFT)
    same = intertwiner_from_dp_iso(I, I)
    assert same == {g: g for g in I.elements}
    # adjacent member of the class: the s_3 translate
    from wol.classes import one_step_moves

    (i, K), = one_step_moves(I)
    mapping = intertwiner_from_dp_iso(I, K)
    assert mapping is not None
    # equal-size but inequivalent pair
    A = weak_interval((1, 2, 3), (2, 1, 3), LEFT)
    B = weak_interval((1, 2, 3), (1, 3, 2), LEFT)
    assert intertwiner_from_dp_iso(A, B) is None


def test_hull_interval_golden():
    result = hull_or_cover("lower", S={2}, rho=parse_perm("142563"))
    assert result.kind == "injective_hull"
    # max C = [345126, 456123]; r(D) = (3,3) and the right descents of the
    # max's lower end give {3}, so the hull is projective indecomposable
    assert result.upper_set == {3} == set_of((3, 3))
    assert result.lower_set == descents(parse_perm("345126"), "R")
    assert result.interval.lo == longest_parabolic({3}, 6)
    assert result.interval.hi == w1({3}, 6)
    assert result.is_projective_indecomposable
    with pytest.raises(OrderError):
        hull_or_cover("lower", S={2, 5}, rho=parse_perm("231564"))


def test_cover_interval_golden():
    result = hull_or_cover("upper", sigma=parse_perm("345126"), S={3})
    assert result.kind == "projective_cover"
    assert result.interval.lo == longest_parabolic({2}, 6)
    assert result.interval.hi == w1({2, 5}, 6)
    assert not result.is_projective_indecomposable


def test_family_hull_goldens():
    x = hull_or_cover("X", alpha=(3, 2, 4))
    assert x.lower_set == x.upper_set == {1, 3, 6}
    assert x.is_projective_indecomposable
    v = hull_or_cover("V", alpha=(3, 2, 4))
    assert v.lower_set == {1, 4, 5, 6}
    assert v.upper_set == set(range(1, 7))
    q = hull_or_cover("Q-hull", alpha=(3, 2, 3, 1))
    assert q.lower_set == q.upper_set == {1, 4, 6}
    assert q.is_projective_indecomposable
    qc = hull_or_cover("Q-cover", alpha=(3, 2, 3, 1))
    assert qc.lower_set == {2, 4, 6}
    with pytest.raises(DomainError):
        hull_or_cover("bogus", alpha=(2,))


@pytest.mark.parametrize("n", range(1, 8))
def test_hull_cover_shortcuts_agree(n):
    # hull_or_cover raises InternalError if a shortcut deviates
    for alpha in all_compositions(n):
        for kind in ("V", "X", "Shat", "RV", "RX", "RShat"):
            result = hull_or_cover(kind, alpha=alpha)
            assert result.lower_set <= result.upper_set
        if is_peak(alpha):
            hull_or_cover("Q-hull", alpha=alpha)
            hull_or_cover("Q-cover", alpha=alpha)


def test_projective_decomposition_examples():
    assert projective_decomposition({1, 3}, {1, 3}, 4) == [comp_of({2}, 4)]
    assert len(projective_decomposition(set(), set(range(1, 5)), 5)) == 16
    got = projective_decomposition({1}, {1, 3}, 4)
    assert sorted(got) == [(2, 1, 1), (2, 2)]
    with pytest.raises(OrderError):
        projective_decomposition({2}, {1}, 4)


def test_module_json():
    I = weak_interval((1, 2, 3), (2, 1, 3), LEFT)
    data = json.loads(module_to_json(module_B(I)))
    assert data["n"] == 3 and data["flavor"] == "pi"
    assert data["basis"] == ["123", "213"]
    assert len(data["pi"]) == 2
    spit = json.loads(module_to_json(module_SPIT((2, 2))))
    assert spit["basis"][0]["entries"]


def test_relation_checker_detects_breakage():
    bad = HeckeModule(
        3,
        ("a", "b"),
        (np.array([[1, 1], [0, 1]]), np.array([[0, 0], [0, 0]])),
        "pi",
    )
    with pytest.raises(Exception):
        check_relations(bad)
