"""Equivalence classes: moves, BFS enumeration, and the tableau bijection."""

import json

import pytest

from wol.classes import (
    class_tableau_bijection,
    class_to_json,
    dp_iso_exists,
    dp_iso_find,
    equiv_class,
    hasse_dot,
    one_step_moves,
)
from wol.descent_diagrams import build_D_S_rho
from wol.errors import DomainError, ResourceCapError
from wol.permutations import (
    LEFT,
    compose,
    descents,
    identity,
    inverse,
    longest_element,
    parse_perm,
    weak_interval,
)

NINE_MEMBERS = [
    ("132456", "142563"),
    ("134256", "145263"),
    ("134526", "145623"),
    ("312456", "412563"),
    ("314256", "415263"),
    ("314526", "415623"),
    ("341256", "451263"),
    ("341526", "451623"),
    ("345126", "456123"),
]

# Edges redrawn from the worked figure, as (from, to, generator).
NINE_EDGES = {
    ("132456", "312456", 1),
    ("132456", "134256", 3),
    ("312456", "314256", 3),
    ("134256", "314256", 1),
    ("134256", "134526", 4),
    ("314256", "341256", 2),
    ("314256", "314526", 4),
    ("134526", "314526", 1),
    ("341256", "341526", 4),
    ("314526", "341526", 2),
    ("341526", "345126", 3),
}


def nine_class():
    return equiv_class(weak_interval(parse_perm("132456"), parse_perm("142563"), LEFT))


def test_one_step_moves_examples():
    n = 4
    full = weak_interval(identity(n), longest_element(n), LEFT)
    assert one_step_moves(full) == []
    I = weak_interval(parse_perm("132465"), parse_perm("231564"), LEFT)
    assert [i for i, _ in one_step_moves(I)] == [3]
    J = weak_interval(parse_perm("132456"), parse_perm("142563"), LEFT)
    assert [i for i, _ in one_step_moves(J)] == [1, 3]


def test_equiv_class_singleton():
    n = 6
    C = equiv_class(weak_interval(identity(n), longest_element(n), LEFT))
    assert C.size == 1 and C.min_index == C.max_index == 0


def test_equiv_class_nine_member_golden():
    from wol.permutations import format_perm

    C = nine_class()
    assert [(format_perm(J.lo), format_perm(J.hi)) for J in C.members] == NINE_MEMBERS
    assert C.min_index == 0
    assert C.members[C.max_index].lo == parse_perm("345126")
    got_edges = {
        (
            "".join(map(str, C.members[a].lo)),
            "".join(map(str, C.members[b].lo)),
            i,
        )
        for a, b, i in C.hasse
    }
    normalized = {
        (min(x, y), max(x, y), i) for x, y, i in got_edges
    }
    assert normalized == {(min(x, y), max(x, y), i) for x, y, i in NINE_EDGES}
    assert C.xi == compose(parse_perm("142563"), inverse(parse_perm("132456")))


def test_equiv_class_four_chain_golden():
    # the worked ladder: four members joined by the moves s_3, s_4, s_5
    from wol.permutations import format_perm

    C = equiv_class(weak_interval(parse_perm("132465"), parse_perm("231564"), LEFT))
    assert [(format_perm(J.lo), format_perm(J.hi)) for J in C.members] == [
        ("132465", "231564"),
        ("134265", "235164"),
        ("134625", "235614"),
        ("134652", "235641"),
    ]
    assert C.hasse == ((0, 1, 3), (1, 2, 4), (2, 3, 5))
    assert (C.min_index, C.max_index) == (0, 3)


def test_equiv_class_cap():
    with pytest.raises(ResourceCapError):
        equiv_class(
            weak_interval(parse_perm("132456"), parse_perm("142563"), LEFT), cap=3
        )


def test_xi_constant_and_descents():
    C = nine_class()
    for J in C.members:
        assert compose(J.hi, inverse(J.lo)) == C.xi
        assert descents(J.lo, LEFT) == descents(C.min.lo, LEFT)


def test_dp_iso_examples():
    I = weak_interval(parse_perm("132465"), parse_perm("231564"), LEFT)
    assert dp_iso_exists(I, I)
    J = weak_interval(parse_perm("134652"), parse_perm("235641"), LEFT)
    assert dp_iso_exists(I, J)
    A = weak_interval((1, 2, 3), (2, 1, 3), LEFT)
    B = weak_interval((1, 2, 3), (1, 3, 2), LEFT)
    assert not dp_iso_exists(A, B)
    mapping = dp_iso_find(I, J)
    assert mapping is not None
    for g, h in mapping.items():
        assert descents(g, LEFT) == descents(h, LEFT)


def test_dp_iso_cap():
    n = 5
    big = weak_interval(identity(n), longest_element(n), LEFT)
    with pytest.raises(ResourceCapError):
        dp_iso_exists(big, big)
    assert dp_iso_exists(big, big, cap=200)


def test_class_tableau_bijection_trivial():
    n = 3
    C = equiv_class(weak_interval(identity(n), longest_element(n), LEFT))
    D = build_D_S_rho(frozenset(), longest_element(n))
    report = class_tableau_bijection(C, D)
    assert report.ok and len(report.pairing) == 1


def test_class_tableau_bijection_nine():
    C = nine_class()
    D = build_D_S_rho({2}, parse_perm("142563"))
    report = class_tableau_bijection(C, D)
    assert report.ok
    assert len(report.pairing) == 9


def test_class_tableau_bijection_mismatch_report():
    C = nine_class()
    wrong = build_D_S_rho({2, 5}, parse_perm("231564"))
    report = class_tableau_bijection(C, wrong)
    assert not report.ok
    assert "|C|" in report.detail or "class" in report.detail


def test_class_json_and_dot():
    C = nine_class()
    data = json.loads(class_to_json(C))
    assert data["xi"] == "124563"
    assert data["members"][data["min"]] == ["132456", "142563"]
    assert data["members"][data["max"]] == ["345126", "456123"]
    assert len(data["hasse"]) == 11
    dot = hasse_dot(C)
    assert dot.startswith("digraph")
    assert dot.count("->") == 11
    assert '[label="s3"]' in dot


def test_one_step_moves_rejects_right_intervals():
    with pytest.raises(DomainError):
        one_step_moves(weak_interval((1, 2, 3), (2, 1, 3), "R"))
