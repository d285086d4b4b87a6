"""
The descent-preserving equivalence on left weak Bruhat intervals: one-step
moves, class enumeration by BFS, the class order, and a brute-force
isomorphism oracle.

Two intervals are equivalent when a poset isomorphism between them
preserves every left descent set.  The one-step move multiplies an
interval on the right by s_i whenever (i, i+1) is a comparable
non-covering pair of its regular poset.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .diagrams import Diagram, Filling, enumerate_ST, poset_of_filling, reading, reflect
from .errors import DomainError, InternalError, ResourceCapError, resolve_cap
from .permutations import (
    LEFT,
    RIGHT,
    Perm,
    WeakInterval,
    compose,
    descents,
    format_perm,
    inv_mask,
    inverse,
    length,
    mult_s_left,
    weak_interval,
)
from .posets import COMPARABLE_NONCOVERING, classify_pair, interval_to_poset, sigma_L_interval

__all__ = [
    "EquivClass",
    "BijectionReport",
    "one_step_moves",
    "equiv_class",
    "dp_iso_exists",
    "dp_iso_find",
    "class_tableau_bijection",
    "class_to_json",
    "class_from_json",
    "hasse_dot",
]

CLASS_CAP = 100_000
DP_ISO_CAP = 60


def one_step_moves(I: WeakInterval) -> list[tuple[int, WeakInterval]]:
    """All legal moves (i, I s_i) out of a left interval.

    A move at i exists exactly when (i, i+1) is a comparable pair that is
    not a covering pair in the interval's poset.
    """
    if I.side != LEFT:
        raise DomainError("one_step_moves expects a left interval")
    P = interval_to_poset(I)
    return [
        (i, I.translate_right(i))
        for i in range(1, I.n)
        if classify_pair(P, i) == COMPARABLE_NONCOVERING
    ]


@dataclass(frozen=True)
class EquivClass:
    """One equivalence class, in canonical member order.

    Members are sorted by (lo, hi); hasse edges (a, b, i) record
    members[a] s_i = members[b] with a < b; xi is hi lo^-1, the same for
    every member.
    """

    n: int
    members: tuple[WeakInterval, ...]
    xi: Perm
    hasse: tuple[tuple[int, int, int], ...]
    min_index: int
    max_index: int

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def min(self) -> WeakInterval:
        return self.members[self.min_index]

    @property
    def max(self) -> WeakInterval:
        return self.members[self.max_index]


def equiv_class(I: WeakInterval, cap: int | None = None) -> EquivClass:
    """BFS closure of an interval under one-step moves.

    Verifies along the way that xi stays constant, and afterwards that
    the lower endpoints form the right weak interval [sigma_0, sigma_1]_R.
    """
    cap = resolve_cap(cap, CLASS_CAP)
    xi = compose(I.hi, inverse(I.lo))
    seen: dict[tuple[Perm, Perm], WeakInterval] = {(I.lo, I.hi): I}
    edges: set[tuple[tuple[Perm, Perm], tuple[Perm, Perm], int]] = set()
    frontier = [I]
    while frontier:
        nxt = []
        for J in frontier:
            for i, K in one_step_moves(J):
                if compose(K.hi, inverse(K.lo)) != xi:
                    raise InternalError("xi changed along a one-step move")
                key = (K.lo, K.hi)
                src = (J.lo, J.hi)
                edges.add((src, key, i) if src < key else (key, src, i))
                if key not in seen:
                    if len(seen) >= cap:
                        raise ResourceCapError(
                            f"class size exceeds cap {cap}", count=len(seen)
                        )
                    seen[key] = K
                    nxt.append(K)
        frontier = nxt
    members = tuple(sorted(seen.values(), key=lambda J: (J.lo, J.hi)))
    index = {(J.lo, J.hi): k for k, J in enumerate(members)}
    hasse = tuple(sorted((index[a], index[b], i) for a, b, i in edges))
    los = [J.lo for J in members]
    min_index = min(range(len(members)), key=lambda k: length(los[k]))
    max_index = max(range(len(members)), key=lambda k: length(los[k]))
    lo_set = weak_interval(los[min_index], los[max_index], RIGHT).elements
    if sorted(los) != list(lo_set):
        raise InternalError("lower endpoints do not form a right weak interval")
    return EquivClass(I.n, members, xi, hasse, min_index, max_index)


def _interval_profile(I: WeakInterval):
    base = length(I.lo)
    return sorted(
        (length(g) - base, tuple(sorted(descents(g, LEFT)))) for g in I.elements
    )


def _iso_candidates(I: WeakInterval, J: WeakInterval) -> Iterator[dict[Perm, Perm]]:
    """Backtracking search for descent-preserving poset isomorphisms.

    Elements are matched rank by rank; a partial map survives when the
    lower covers of the new element map exactly onto the lower covers of
    its image.
    """
    elems_I = sorted(I.elements, key=length)
    elems_J = set(J.elements)
    base_I, base_J = length(I.lo), length(J.lo)

    def fingerprint(g: Perm, base: int):
        return (length(g) - base, descents(g, LEFT))

    targets: dict[tuple[int, frozenset[int]], list[Perm]] = {}
    for h in elems_J:
        targets.setdefault(fingerprint(h, base_J), []).append(h)

    def lower_covers(g: Perm, members: set[Perm]) -> frozenset[Perm]:
        lg = length(g)
        return frozenset(
            h
            for i in descents(g, LEFT)
            if (h := mult_s_left(g, i)) in members and length(h) == lg - 1
        )

    members_I = set(I.elements)
    covers_I = {g: lower_covers(g, members_I) for g in elems_I}
    covers_J = {h: lower_covers(h, elems_J) for h in elems_J}

    mapping: dict[Perm, Perm] = {}
    used: set[Perm] = set()

    def extend(k: int) -> Iterator[dict[Perm, Perm]]:
        if k == len(elems_I):
            yield dict(mapping)
            return
        g = elems_I[k]
        want = frozenset(mapping[c] for c in covers_I[g])
        for h in targets.get(fingerprint(g, base_I), []):
            if h in used or covers_J[h] != want:
                continue
            mapping[g] = h
            used.add(h)
            yield from extend(k + 1)
            del mapping[g]
            used.remove(h)

    yield from extend(0)


def _check_iso_caps(I: WeakInterval, J: WeakInterval, cap: int | None) -> bool:
    cap = resolve_cap(cap, DP_ISO_CAP)
    if I.size > cap or J.size > cap:
        raise ResourceCapError(
            f"interval size {max(I.size, J.size)} exceeds oracle cap {cap}"
        )
    if I.n != J.n or I.size != J.size:
        return False
    return _interval_profile(I) == _interval_profile(J)


def dp_iso_find(
    I: WeakInterval, J: WeakInterval, cap: int | None = None
) -> dict[Perm, Perm] | None:
    """A descent-preserving poset isomorphism I -> J, or None."""
    if not _check_iso_caps(I, J, cap):
        return None
    return next(_iso_candidates(I, J), None)


def dp_iso_exists(I: WeakInterval, J: WeakInterval, cap: int | None = None) -> bool:
    """Whether some descent-preserving poset isomorphism I -> J exists.

    >>> I = weak_interval((1, 2, 3), (2, 1, 3), "L")
    >>> J = weak_interval((1, 2, 3), (1, 3, 2), "L")
    >>> dp_iso_exists(I, J)
    False
    """
    return dp_iso_find(I, J, cap) is not None


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of matching a class against the standard tableaux of a diagram."""

    ok: bool
    pairing: tuple[tuple[Filling, WeakInterval], ...]
    detail: str

    def __bool__(self) -> bool:
        return self.ok


def class_tableau_bijection(C: EquivClass, D: Diagram) -> BijectionReport:
    """Verify that T -> Sigma_L(P_{T^x}) is an order isomorphism from
    (ST(D^x), <=) onto (C, <=), returning the explicit pairing.

    The pairwise order comparison uses inversion-set bitmasks, which
    agree with the length-additivity order test.
    """
    tableaux = enumerate_ST(reflect(D, "x_axis"))
    if len(tableaux) != C.size:
        return BijectionReport(
            False, (), f"|ST(D^x)| = {len(tableaux)} but |C| = {C.size}"
        )
    member_set = {(J.lo, J.hi): J for J in C.members}
    pairing = []
    images = set()
    for T in tableaux:
        J = sigma_L_interval(poset_of_filling(reflect(T, "x_axis")))
        key = (J.lo, J.hi)
        if key not in member_set:
            return BijectionReport(False, (), f"tableau maps outside the class: {J}")
        if key in images:
            return BijectionReport(False, (), f"two tableaux map to {J}")
        images.add(key)
        pairing.append((T, member_set[key]))
    # T <= U in ST(D^x) iff readingTBLR(T) <=_L readingTBLR(U); the class
    # order compares lower endpoints on the right.
    word_masks = [inv_mask(reading(T, "TBLR")) for T, _ in pairing]
    lo_masks = [inv_mask(inverse(J.lo)) for _, J in pairing]
    m = len(pairing)
    for a in range(m):
        for b in range(m):
            st_le = word_masks[a] & ~word_masks[b] == 0
            cls_le = lo_masks[a] & ~lo_masks[b] == 0
            if st_le != cls_le:
                return BijectionReport(
                    False,
                    tuple(pairing),
                    f"order mismatch at {pairing[a][1]} vs {pairing[b][1]}",
                )
    return BijectionReport(True, tuple(pairing), "verified")


def class_to_json(C: EquivClass) -> str:
    return json.dumps(
        {
            "xi": format_perm(C.xi),
            "members": [[format_perm(J.lo), format_perm(J.hi)] for J in C.members],
            "hasse": [list(e) for e in C.hasse],
            "min": C.min_index,
            "max": C.max_index,
        }
    )


def class_from_json(text: str) -> EquivClass:
    from .permutations import parse_perm

    data = json.loads(text)
    members = tuple(
        weak_interval(parse_perm(lo), parse_perm(hi), LEFT)
        for lo, hi in data["members"]
    )
    return EquivClass(
        members[0].n,
        members,
        parse_perm(data["xi"]),
        tuple(tuple(e) for e in data["hasse"]),
        int(data["min"]),
        int(data["max"]),
    )


def hasse_dot(C: EquivClass) -> str:
    """DOT rendering of the class Hasse diagram, edges labeled s_i."""
    lines = ["digraph hasse {"]
    for k, J in enumerate(C.members):
        lines.append(f'  m{k} [label="{J}"];')
    for a, b, i in C.hasse:
        lo_a, lo_b = C.members[a].lo, C.members[b].lo
        src, dst = (a, b) if length(lo_a) < length(lo_b) else (b, a)
        lines.append(f'  m{src} -> m{dst} [label="s{i}"];')
    lines.append("}")
    return "\n".join(lines)
