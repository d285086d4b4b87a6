"""
Named verification sweeps: each checks a batch of structural identities
against brute-force oracles at small n and reports pass/fail.

The CLI ``verify`` command runs these; the acceptance tests call them
with the sizes fixed by the project contract.
"""

from __future__ import annotations

import random
from itertools import chain, combinations
from typing import Callable, Iterator

from . import hecke, tableaux
from .classes import dp_iso_exists, equiv_class, one_step_moves
from .compositions import all_compositions, is_peak, set_of
from .descent_diagrams import (
    build_D_S_rho,
    build_D_sigma_S,
    lower_minmax,
    upper_minmax,
)
from .diagrams import (
    Diagram,
    canonical_fill,
    diagram_of,
    enumerate_ST,
    fill_ne,
    hecke_star,
    is_free_upper_right,
    poset_of_filling,
    reading,
    reflect,
    tableau_T,
)
from .permutations import (
    LEFT,
    RIGHT,
    Perm,
    WeakInterval,
    all_perms,
    compose,
    coset_decompose,
    covers_up,
    descent_class,
    descents,
    identity,
    inverse,
    length,
    longest_element,
    longest_parabolic,
    mult_s_right,
    w1,
    weak_interval,
    weak_leq,
)
from .posets import (
    COMPARABLE_NONCOVERING,
    COVERING,
    Poset,
    bar,
    classify_pair,
    extremes_of_regular,
    interval_to_poset,
    is_regular,
    linear_extensions_L,
    relabel,
    sigma_L_interval,
)

Check = tuple[str, Callable[[int, int], tuple[bool, str]]]


def subsets(ground: list[int]) -> Iterator[frozenset[int]]:
    return map(
        frozenset, chain.from_iterable(combinations(ground, k) for k in range(len(ground) + 1))
    )


def all_left_intervals(n: int) -> Iterator[WeakInterval]:
    perms = list(all_perms(n))
    for lo in perms:
        for hi in perms:
            if weak_leq(lo, hi, LEFT):
                yield WeakInterval(LEFT, lo, hi)


def edge_decorated_covers(P: Poset) -> frozenset[tuple[int, int, bool]]:
    """Covers with their strict/weak decoration (strict when the larger
    poset element carries the smaller label)."""
    return frozenset((a, b, a > b) for a, b in P.covers())


def decorated_iso_exists(P: Poset, Q: Poset) -> bool:
    """Isomorphism of posets carrying strict edges to strict edges and
    weak to weak (labels otherwise forgotten)."""
    if P.n != Q.n:
        return False
    covers_p = P.covers()
    covers_q = Q.covers()
    if len(covers_p) != len(covers_q):
        return False

    def profile(poset: Poset, covers, x: int):
        up = [(y, x > y) for a, y in covers if a == x]
        down = [(a, a > x) for a, y in covers if y == x]
        return (
            len(poset.down_set(x)),
            len(poset.up_set(x)),
            sorted(s for _, s in up),
            sorted(s for _, s in down),
        )

    prof_p = {x: profile(P, covers_p, x) for x in range(1, P.n + 1)}
    prof_q = {x: profile(Q, covers_q, x) for x in range(1, Q.n + 1)}
    if sorted(map(str, prof_p.values())) != sorted(map(str, prof_q.values())):
        return False
    order = sorted(range(1, P.n + 1), key=lambda x: len(P.down_set(x)))
    strict_p = {(a, b): a > b for a, b in covers_p}
    strict_q = {(a, b): a > b for a, b in covers_q}
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        below = [(a, strict_p[(a, x)]) for a, b in covers_p if b == x]
        for y in range(1, Q.n + 1):
            if y in used or prof_q[y] != prof_p[x]:
                continue
            want = {(mapping[a], s) for a, s in below if a in mapping}
            have = {
                (a, strict_q[(a, y)])
                for a, b in covers_q
                if b == y and a in mapping.values()
            }
            if want != have:
                continue
            mapping[x] = y
            used.add(y)
            if extend(k + 1):
                return True
            del mapping[x]
            used.remove(y)
        return False

    if not extend(0):
        return False
    # A cover-preserving bijection between posets with equal cover counts
    # and matched down-set sizes is an isomorphism.
    return True


def random_diagrams(count: int, max_cells: int, seed: int) -> list[Diagram]:
    """Deterministic sample of valid diagrams with up to max_cells cells."""
    rng = random.Random(seed)
    out: list[Diagram] = []
    while len(out) < count:
        n_cells = rng.randint(2, max_cells)
        width = rng.randint(1, min(4, n_cells))
        height = rng.randint(max(1, (n_cells + width * 2 - 1) // (width * 2)), 4)
        grid = [(x, y) for x in range(1, width + 1) for y in range(1, height + 1)]
        if len(grid) < n_cells:
            continue
        cells = frozenset(rng.sample(grid, n_cells))
        try:
            out.append(Diagram(cells))
        except Exception:
            continue
    return out


# --- perm suite ----------------------------------------------------------


def check_descent_symmetry(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(1, min(nmax, 6) + 1):
        for w in all_perms(n):
            if descents(w, LEFT) != descents(inverse(w), RIGHT):
                return False, f"Des_L mismatch at {w}"
            lw = length(w)
            for i in range(1, n):
                swap = {i: i + 1, i + 1: i}
                left_drop = length(tuple(swap.get(x, x) for x in w)) < lw
                if (i in descents(w, LEFT)) != left_drop:
                    return False, f"length-drop mismatch at {w}, {i}"
    return True, "descent sets match inverse/right and length drops"


def check_weak_order_oracle(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(1, min(nmax, 5) + 1):
        perms = list(all_perms(n))
        for side in (LEFT, RIGHT):
            reach: dict[Perm, set[Perm]] = {}

            def reachable(u: Perm) -> set[Perm]:
                if u not in reach:
                    acc = {u}
                    for _, v in covers_up(u, side):
                        acc |= reachable(v)
                    reach[u] = acc
                return reach[u]

            for u in reversed(perms):
                reachable(u)
            for u in perms:
                for v in perms:
                    if weak_leq(u, v, side) != (v in reachable(u)):
                        return False, f"weak_leq oracle fails at {u}, {v}, {side}"
    return True, "length-additivity test matches cover reachability"


def check_w0_w1_identities(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(1, min(nmax, 7) + 1):
        w0 = longest_element(n)
        for S in subsets(list(range(1, n))):
            ws = longest_parabolic(S, n)
            if compose(ws, ws) != identity(n):
                return False, f"w0({sorted(S)}) not an involution"
            if descents(ws, LEFT) != S or descents(ws, RIGHT) != S:
                return False, f"descents of w0({sorted(S)}) wrong"
            comp = frozenset(range(1, n)) - S
            if w1(S, n) != compose(w0, longest_parabolic(comp, n)):
                return False, f"w1({sorted(S)}) identity fails"
    return True, "parabolic longest elements and w1 identities hold"


def check_descent_class_oracle(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(1, min(nmax, 5) + 1):
        for T in subsets(list(range(1, n))):
            for S in subsets(sorted(T)):
                expected = sorted(
                    w for w in all_perms(n) if S <= descents(w, RIGHT) <= T
                )
                got = descent_class(S, T, n).elements
                if list(got) != expected:
                    return False, f"descent class ({sorted(S)}, {sorted(T)}, {n})"
    return True, "descent classes equal brute-force descent filters"


def check_coset_decomposition(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(2, min(nmax, 5) + 1):
        for S in subsets(list(range(1, n))):
            parabolic = {u for u in all_perms(n) if descents_support(u) <= S}
            for w in all_perms(n):
                z, u = coset_decompose(w, S)
                if compose(z, u) != w:
                    return False, f"zu != w at {w}"
                if length(z) + length(u) != length(w):
                    return False, f"length additivity fails at {w}, {sorted(S)}"
                if u not in parabolic:
                    return False, f"u outside parabolic at {w}"
                if not descents(z, RIGHT) <= frozenset(range(1, n)) - S:
                    return False, f"z has a right descent in S at {w}"
    return True, "coset decompositions are length-additive and well-placed"


def descents_support(u: Perm) -> frozenset[int]:
    """Generator indices moved by u: i with u not fixing [1..i] setwise."""
    n = len(u)
    moved = set()
    for i in range(1, n):
        if set(u[:i]) != set(range(1, i + 1)):
            moved.add(i)
    return frozenset(moved)


def check_interval_closure(nmax: int, seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    n = min(nmax, 6)
    perms = list(all_perms(n))
    for _ in range(50):
        lo = rng.choice(perms)
        ups = [v for v in perms if weak_leq(lo, v, LEFT)]
        hi = rng.choice(ups)
        I = weak_interval(lo, hi, LEFT)
        members = set(I.elements)
        for g in members:
            for i, h in covers_up(g, LEFT):
                if weak_leq(h, hi, LEFT) and h not in members:
                    return False, f"interval not closed at {g} -> {h}"
    return True, "interval element sets are closed under in-range covers"


# --- poset suite ---------------------------------------------------------


def check_interval_poset_roundtrip(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(1, min(nmax, 5) + 1):
        for I in all_left_intervals(n):
            P = interval_to_poset(I)
            if not is_regular(P):
                return False, f"P_I not regular for {I}"
            if tuple(linear_extensions_L(P)) != I.elements:
                return False, f"Sigma_L(P_I) != I for {I}"
            back = sigma_L_interval(P)
            if (back.lo, back.hi) != (I.lo, I.hi):
                return False, f"extremes disagree for {I}"
    return True, "interval -> regular poset -> interval round-trips"


def check_extremes_formula(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(1, min(nmax, 5) + 1):
        for I in all_left_intervals(n):
            P = interval_to_poset(I)
            exts = linear_extensions_L(P)
            lo, hi = extremes_of_regular(P)
            by_len = sorted(exts, key=length)
            if lo != by_len[0] or hi != by_len[-1]:
                return False, f"extremes not extreme for {I}"
            if any(
                not (weak_leq(lo, g, LEFT) and weak_leq(g, hi, LEFT)) for g in exts
            ):
                return False, f"extremes not bounds for {I}"
    return True, "counting formulas give the weak-order min and max"


def check_relabel_classification(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(2, min(nmax, 5) + 1):
        for I in all_left_intervals(n):
            P = interval_to_poset(I)
            for i in range(1, n):
                kind = classify_pair(P, i)
                Q = relabel(P, i)
                if relabel(Q, i) != P:
                    return False, "relabel is not an involution"
                if kind == COMPARABLE_NONCOVERING:
                    if not is_regular(Q):
                        return False, f"s_i P not regular at {I}, {i}"
                    moved = sigma_L_interval(Q)
                    if (moved.lo, moved.hi) != (
                        mult_s_right(I.lo, i),
                        mult_s_right(I.hi, i),
                    ):
                        return False, f"Sigma_L(s_i P) != I s_i at {I}, {i}"
                    if not decorated_iso_exists(P, Q):
                        return False, f"edge decoration changed at {I}, {i}"
                elif kind == COVERING:
                    if not is_regular(Q):
                        return False, f"covering relabel broke regularity at {I}, {i}"
                    if decorated_iso_exists(P, Q):
                        return False, f"covering relabel kept decorations at {I}, {i}"
                else:
                    if not decorated_iso_exists(P, Q):
                        return False, f"incomparable relabel changed poset at {I}, {i}"
    return True, "label swaps behave per pair classification"


def check_bar_involution(nmax: int, seed: int) -> tuple[bool, str]:
    n = min(nmax, 5)
    w0 = longest_element(n)
    for I in all_left_intervals(n):
        P = interval_to_poset(I)
        if bar(bar(P)) != P:
            return False, f"bar not involutive at {I}"
        flipped = sorted(compose(g, w0) for g in linear_extensions_L(P))
        if list(linear_extensions_L(bar(P))) != flipped:
            return False, f"Sigma_L(bar P) != Sigma_L(P) w0 at {I}"
    return True, "label complement matches right w0-translation"


# --- diagram suite -------------------------------------------------------


def check_reflections(nmax: int, seed: int) -> tuple[bool, str]:
    for D in random_diagrams(50, 8, seed):
        for op in ("transpose", "star", "x_axis"):
            if reflect(reflect(D, op), op) != D:
                return False, f"{op} not involutive on {D}"
        F = canonical_fill(D, "down")
        for op in ("transpose", "star", "x_axis", "bar"):
            if reflect(reflect(F, op), op) != F:
                return False, f"{op} not involutive on filling of {D}"
        if poset_of_filling(reflect(F, "transpose")) != poset_of_filling(F):
            return False, f"P_F != P_F^t on {D}"
        star_down = reflect(canonical_fill(D, "down"), "star")
        if star_down != canonical_fill(reflect(D, "star"), "right"):
            return False, f"(F_down)^* != F_right of D^* on {D}"
    return True, "reflections are involutive with the stated identities"


def check_two_kinds(nmax: int, seed: int) -> tuple[bool, str]:
    for D in random_diagrams(40, 7, seed):
        down = sigma_L_interval(poset_of_filling(canonical_fill(D, "down")))
        right = sigma_L_interval(poset_of_filling(canonical_fill(D, "right")))
        tprime, t = tableau_T(D, True), tableau_T(D, False)
        if (down.lo, down.hi) != (reading(tprime, "TBLR"), reading(t, "TBLR")):
            return False, f"down interval readings fail on {D}"
        if (right.lo, right.hi) != (reading(tprime, "LRTB"), reading(t, "LRTB")):
            return False, f"right interval readings fail on {D}"
        from .compositions import set_of as _set_of
        from .diagrams import profiles

        r_prof, c_prof = profiles(D)
        n = D.n
        if reading(t, "LRTB") != w1(_set_of(r_prof), n):
            return False, f"LRTB(T_D) != w1(set(r(D))) on {D}"
        if reading(tprime, "TBLR") != longest_parabolic(
            frozenset(range(1, n)) - _set_of(c_prof), n
        ):
            return False, f"TBLR(T'_D) != w0(set(c(D))^c) on {D}"
    return True, "canonical fillings give the stated descent intervals"


def _cell_decorations(F) -> dict[tuple, bool]:
    """Strictness of each cell-poset cover edge under the filling's labels."""
    cells = sorted(F.diagram.cells)

    def leq(c, d):
        return c[0] <= d[0] and c[1] <= d[1]

    out = {}
    for c in cells:
        for d in cells:
            if c != d and leq(c, d) and not any(
                e not in (c, d) and leq(c, e) and leq(e, d) for e in cells
            ):
                out[(c, d)] = F.value_at(*c) > F.value_at(*d)
    return out


def check_fill_ne(nmax: int, seed: int) -> tuple[bool, str]:
    for D in random_diagrams(40, 7, seed):
        down = canonical_fill(D, "down")
        ne = fill_ne(D)
        if _cell_decorations(down) != _cell_decorations(ne):
            return False, f"fill_ne changed the edge-decorated poset on {D}"
        if not decorated_iso_exists(poset_of_filling(down), poset_of_filling(ne)):
            return False, f"fill_ne posets not decoration-isomorphic on {D}"
        Q = poset_of_filling(ne)
        for i in range(1, D.n):
            if Q.leq(i, i + 1) and not Q.is_cover(i, i + 1):
                return False, f"non-covering i <= i+1 survives in F_ne on {D}"
        if is_free_upper_right(D) and ne != canonical_fill(D, "right"):
            return False, f"free diagram but F_ne != F_right on {D}"
    return True, "northeast filling keeps decorations and covers consecutive pairs"


def check_star_action_relations(nmax: int, seed: int) -> tuple[bool, str]:
    from .errors import ResourceCapError

    for D in random_diagrams(25, 8, seed):
        Dx = reflect(D, "x_axis")
        try:
            tabs = enumerate_ST(Dx, cap=300)
        except ResourceCapError:
            continue

        def star(i, T):
            res = hecke_star(i, T)
            return res

        for T in tabs:
            for i in range(1, D.n):
                once = star(i, T)
                if once is not None and star(i, once) != once:
                    return False, f"star idempotence fails on {D}"
            for i in range(1, D.n - 1):
                lhs = _star_word(T, [i, i + 1, i])
                rhs = _star_word(T, [i + 1, i, i + 1])
                if lhs != rhs:
                    return False, f"star braid fails on {D}"
            for i in range(1, D.n - 1):
                for j in range(i + 2, D.n):
                    if _star_word(T, [i, j]) != _star_word(T, [j, i]):
                        return False, f"star commutation fails on {D}"
    return True, "star action satisfies the 0-Hecke relations"


def _star_word(T, word):
    cur = T
    for i in reversed(word):
        if cur is None:
            return None
        cur = hecke_star(i, cur)
    return cur


def check_descent_diagram_invariants(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(1, min(nmax, 5) + 1):
        for S in subsets(list(range(1, n))):
            w0S = longest_parabolic(S, n)
            for rho in all_perms(n):
                if not weak_leq(w0S, rho, LEFT):
                    continue
                D = build_D_S_rho(S, rho)
                got = sigma_L_interval(poset_of_filling(canonical_fill(D, "down")))
                if (got.lo, got.hi) != (w0S, rho):
                    return False, f"F_down interval wrong for ({sorted(S)}, {rho})"
            top = w1(S, n)
            for sigma in all_perms(n):
                if not weak_leq(sigma, top, LEFT):
                    continue
                ud = build_D_sigma_S(sigma, S)
                got = sigma_L_interval(
                    poset_of_filling(canonical_fill(ud.diagram, "right"))
                )
                if (got.lo, got.hi) != (sigma, top):
                    return False, f"F_right interval wrong for ({sigma}, {sorted(S)})"
    return True, "descent diagrams realize their intervals"


def check_ribbons_free(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(1, min(nmax, 8) + 1):
        for alpha in all_compositions(n):
            D = diagram_of(alpha, "ribbon")
            if not is_free_upper_right(D):
                return False, f"ribbon {alpha} not free"
            if _has_two_by_two(D):
                return False, f"ribbon {alpha} has a 2x2 block"
    return True, "ribbon diagrams are free and have no 2x2 blocks"


def _has_two_by_two(D: Diagram) -> bool:
    return any(
        {(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)} <= D.cells
        for x, y in D.cells
    )


# --- class suite ---------------------------------------------------------


def check_class_oracle(nmax: int, seed: int, samples: int = 500) -> tuple[bool, str]:
    n = min(nmax, 4)
    intervals = list(all_left_intervals(n))
    classes = {}
    for I in intervals:
        C = equiv_class(I)
        classes[(I.lo, I.hi)] = frozenset((J.lo, J.hi) for J in C.members)
    for a in intervals:
        for b in intervals:
            same = (b.lo, b.hi) in classes[(a.lo, a.hi)]
            if dp_iso_exists(a, b) != same:
                return False, f"oracle disagrees at {a}, {b}"
    if nmax >= 5:
        rng = random.Random(seed)
        five = list(all_left_intervals(5))
        for _ in range(samples):
            a, b = rng.choice(five), rng.choice(five)
            same = (b.lo, b.hi) in {
                (J.lo, J.hi) for J in equiv_class(a).members
            }
            if dp_iso_exists(a, b) != same:
                return False, f"sampled oracle disagrees at {a}, {b}"
    return True, "class membership coincides with descent-preserving isomorphism"


def check_class_structure(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(1, min(nmax, 5) + 1):
        for S in subsets(list(range(1, n))):
            w0S = longest_parabolic(S, n)
            for rho in all_perms(n):
                if not weak_leq(w0S, rho, LEFT):
                    continue
                I = weak_interval(w0S, rho, LEFT)
                C = equiv_class(I)
                if (C.min.lo, C.min.hi) != (w0S, rho):
                    return False, f"min C is not the lower interval at {I}"
                lowers = [
                    J
                    for J in C.members
                    if any(
                        J.lo == longest_parabolic(T, n)
                        for T in subsets(list(range(1, n)))
                    )
                ]
                if len(lowers) != 1:
                    return False, f"lower descent interval not unique in C({I})"
                lo2, hi2 = lower_minmax(S, rho)
                if (lo2.lo, lo2.hi) != (C.min.lo, C.min.hi):
                    return False, f"lower_minmax min mismatch at {I}"
                if (hi2.lo, hi2.hi) != (C.max.lo, C.max.hi):
                    return False, f"lower_minmax max mismatch at {I}"
            top = w1(S, n)
            for sigma in all_perms(n):
                if not weak_leq(sigma, top, LEFT):
                    continue
                I = weak_interval(sigma, top, LEFT)
                C = equiv_class(I)
                if (C.max.lo, C.max.hi) != (sigma, top):
                    return False, f"max C is not the upper interval at {I}"
                lo2, hi2 = upper_minmax(sigma, S)
                if (lo2.lo, lo2.hi) != (C.min.lo, C.min.hi):
                    return False, f"upper_minmax min mismatch at {I}"
                if (hi2.lo, hi2.hi) != (C.max.lo, C.max.hi):
                    return False, f"upper_minmax max mismatch at {I}"
    return True, "lower/upper classes have the stated extremes"


def check_move_preserves_descents(nmax: int, seed: int) -> tuple[bool, str]:
    n = min(nmax, 5)
    rng = random.Random(seed)
    perms = list(all_perms(n))
    for _ in range(60):
        lo = rng.choice(perms)
        ups = [v for v in perms if weak_leq(lo, v, LEFT)]
        I = weak_interval(lo, rng.choice(ups), LEFT)
        for i, J in one_step_moves(I):
            for g in I.elements:
                if descents(g, LEFT) != descents(mult_s_right(g, i), LEFT):
                    return False, f"move s_{i} changed descents in {I}"
    return True, "one-step moves preserve left descent sets elementwise"


# --- family suite --------------------------------------------------------


def _valid_family_kinds(alpha) -> list[str]:
    kinds = ["P", "F", "V", "X", "Shat"]
    if is_peak(alpha):
        kinds.append("Q")
    return kinds


def check_family_vs_bfs(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(1, min(nmax, 5) + 1):
        for alpha in all_compositions(n):
            for kind in _valid_family_kinds(alpha):
                summary = tableaux.family_class(kind, alpha)
                C = equiv_class(summary.min_interval)
                if (C.min.lo, C.min.hi) != (
                    summary.min_interval.lo,
                    summary.min_interval.hi,
                ):
                    return False, f"{kind}({alpha}) min mismatch"
                if (C.max.lo, C.max.hi) != (
                    summary.max_interval.lo,
                    summary.max_interval.hi,
                ):
                    return False, f"{kind}({alpha}) max mismatch"
                if C.size != summary.size:
                    return False, f"{kind}({alpha}) size mismatch"
    return True, "closed-form classes agree with BFS"


def check_family_freeness(nmax: int, seed: int) -> tuple[bool, str]:
    from .descent_diagrams import family_diagram

    for n in range(1, min(nmax, 7) + 1):
        for alpha in all_compositions(n):
            for kind in ("P", "V", "X", "Shat"):
                if not is_free_upper_right(family_diagram(kind, alpha)):
                    return False, f"{kind}({alpha}) diagram not free"
            if is_peak(alpha) and not is_free_upper_right(family_diagram("Q", alpha)):
                return False, f"Q({alpha}) diagram not free"
    return True, "family diagrams are free of the configuration"


def check_singleton_class(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(1, min(nmax, 5) + 1):
        for alpha in all_compositions(n):
            summary = tableaux.family_class("F", alpha)
            C = equiv_class(summary.min_interval)
            if any(J.lo != J.hi for J in C.members):
                return False, f"F({alpha}) class has non-singletons"
            srt = tableaux.enumerate_family("SRT", alpha)
            if len(srt) != C.size or C.size != summary.size:
                return False, f"F({alpha}) class size != |SRT|"
            lo = longest_parabolic(frozenset(range(1, n)) - set_of(alpha), n)
            hi = compose(longest_parabolic(set_of(alpha), n), longest_element(n))
            expected = set(weak_interval(lo, hi, RIGHT).elements)
            if {J.lo for J in C.members} != expected:
                return False, f"F({alpha}) members differ from descent class"
    return True, "singleton classes sweep their right descent class"


def check_twisted_translates(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(1, min(nmax, 5) + 1):
        w0 = longest_element(n)
        for alpha in all_compositions(n):
            for kind in ("V", "X", "Shat"):
                base = tableaux.family_class(kind, alpha)
                twisted = tableaux.family_class("R" + kind, alpha)
                base_members = equiv_class(base.min_interval).members
                expected = sorted(
                    (compose(J.hi, w0), compose(J.lo, w0)) for J in base_members
                )
                got = equiv_class(twisted.min_interval).members
                if [(J.lo, J.hi) for J in got] != expected:
                    return False, f"R{kind}({alpha}) is not the w0-translate"
    return True, "twisted classes are elementwise right w0-translates"


def check_tableau_bijection_sweep(nmax: int, seed: int) -> tuple[bool, str]:
    from .classes import class_tableau_bijection

    for n in range(1, min(nmax, 5) + 1):
        for S in subsets(list(range(1, n))):
            w0S = longest_parabolic(S, n)
            for rho in all_perms(n):
                if not weak_leq(w0S, rho, LEFT):
                    continue
                D = build_D_S_rho(S, rho)
                if not is_free_upper_right(D):
                    continue
                C = equiv_class(weak_interval(w0S, rho, LEFT))
                if not class_tableau_bijection(C, D):
                    return False, f"bijection fails for ({sorted(S)}, {rho})"
            top = w1(S, n)
            for sigma in all_perms(n):
                if not weak_leq(sigma, top, LEFT):
                    continue
                ud = build_D_sigma_S(sigma, S)
                if not is_free_upper_right(ud.diagram):
                    continue
                C = equiv_class(weak_interval(sigma, top, LEFT))
                if not class_tableau_bijection(C, ud.diagram):
                    return False, f"bijection fails for ({sigma}, {sorted(S)})"
    return True, "free-diagram classes match their standard tableaux"


# --- module suite --------------------------------------------------------


def check_module_relations(nmax: int, seed: int) -> tuple[bool, str]:
    # Relation checking runs inside every constructor.
    for n in range(1, min(nmax, 6) + 1):
        for alpha in all_compositions(n):
            s_comp = frozenset(range(1, n)) - set_of(alpha)
            hecke.module_B(descent_class(s_comp, s_comp, n))
            sigma = longest_parabolic(s_comp, n)
            hecke.module_B(weak_interval(sigma, sigma, LEFT))
            if is_peak(alpha):
                hecke.module_SPIT(alpha)
    n = min(nmax, 4)
    for I in all_left_intervals(n):
        M = hecke.module_B(I)
        hecke.module_Bbar(I)
        hecke.module_M(interval_to_poset(I))
        hecke.twist_theta_chi(M)
    return True, "all constructed modules satisfy the 0-Hecke relations"


def check_one_dimensional_action(nmax: int, seed: int) -> tuple[bool, str]:
    n = min(nmax, 5)
    for sigma in all_perms(n):
        M = hecke.module_B(weak_interval(sigma, sigma, LEFT))
        des = descents(sigma, LEFT)
        for i in range(1, n):
            expected = 1 if i in des else 0
            if M.pis[i - 1][0, 0] != expected:
                return False, f"B([{sigma},{sigma}]) acts wrongly at {i}"
    return True, "singleton interval modules act by descent indicators"


def check_dimension_audits(nmax: int, seed: int) -> tuple[bool, str]:
    from .compositions import reverse, subset_reverse

    for n in range(1, min(nmax, 6) + 1):
        for alpha in all_compositions(n):
            s_comp = frozenset(range(1, n)) - set_of(alpha)
            w0c = longest_parabolic(s_comp, n)
            sit = tableaux.enumerate_family("SIT", alpha)
            sink_sit = tableaux.sink_source("SIT", alpha, "sink")
            if len(sit) != weak_interval(w0c, reading(sink_sit, "RLBT"), LEFT).size:
                return False, f"SIT({alpha}) dimension audit fails"
            srt = tableaux.enumerate_family("SRT", alpha)
            if len(srt) != descent_class(s_comp, s_comp, n).size:
                return False, f"SRT({alpha}) dimension audit fails"
            sett = tableaux.enumerate_family("SET", alpha)
            sink_set = tableaux.sink_source("SET", alpha, "sink")
            if len(sett) != weak_interval(w0c, reading(sink_set, "RLBT"), LEFT).size:
                return False, f"SET({alpha}) dimension audit fails"
            if is_peak(alpha):
                spit = tableaux.enumerate_family("SPIT", alpha)
                sink_spit = tableaux.sink_source("SPIT", alpha, "sink")
                if subset_reverse(set_of(alpha), n) != set_of(reverse(alpha)):
                    return False, f"set(alpha)^r != set(alpha^r) at {alpha}"
                hi = w1(set_of(reverse(alpha)), n)
                size = weak_interval(reading(sink_spit, "LRTB"), hi, LEFT).size
                if len(spit) != size:
                    return False, f"SPIT({alpha}) dimension audit fails"
                if hecke.module_SPIT(alpha).dim != size:
                    return False, f"SPIT({alpha}) module dimension mismatch"
    return True, "family cardinalities equal their interval dimensions"


def check_twist_consistency(nmax: int, seed: int) -> tuple[bool, str]:
    n = min(nmax, 4)
    w0 = longest_element(n)
    for I in all_left_intervals(n):
        M = hecke.module_B(I)
        T = hecke.twist_theta_chi(M)
        J = weak_interval(compose(I.hi, w0), compose(I.lo, w0), LEFT)
        MJ = hecke.module_B(J)
        index = {g: k for k, g in enumerate(MJ.basis)}
        pairing = [(k, index[compose(g, w0)]) for k, g in enumerate(T.basis)]
        if hecke.signed_intertwiner(T, MJ, pairing) is None:
            return False, f"twist of B({I}) does not match B({J})"
        TT = hecke.twist_theta_chi(T)
        identity_pairing = [(k, k) for k in range(M.dim)]
        if hecke.signed_intertwiner(TT, M, identity_pairing) is None:
            return False, f"double twist of B({I}) not the identity"
    return True, "theta-chi twists land on the reversed intervals"


def check_intertwiner_ladder(nmax: int, seed: int) -> tuple[bool, str]:
    n = min(nmax, 5)
    rng = random.Random(seed)
    perms = list(all_perms(n))
    for _ in range(20):
        lo = rng.choice(perms)
        ups = [v for v in perms if weak_leq(lo, v, LEFT)]
        I = weak_interval(lo, rng.choice(ups), LEFT)
        for i, J in one_step_moves(I):
            mapping = hecke.intertwiner_from_dp_iso(I, J)
            if mapping is None:
                return False, f"no intertwiner along move s_{i} from {I}"
            if any(mult_s_right(g, i) != h for g, h in mapping.items()):
                # a different iso can also intertwine; translation must too
                translation = {g: mult_s_right(g, i) for g in I.elements}
                MI, MJ = hecke.module_B(I), hecke.module_B(J)
                index_I = {g: k for k, g in enumerate(MI.basis)}
                index_J = {g: k for k, g in enumerate(MJ.basis)}
                pairing = [(index_I[g], index_J[h]) for g, h in translation.items()]
                if hecke.signed_intertwiner(MI, MJ, pairing) is None:
                    return False, f"translation fails to intertwine at {I}, s_{i}"
    return True, "adjacent class members intertwine by right translation"


def check_hull_cover_families(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(1, min(nmax, 7) + 1):
        for alpha in all_compositions(n):
            for kind in ("V", "X", "Shat", "RV", "RX", "RShat"):
                result = hecke.hull_or_cover(kind, alpha=alpha)
                if not result.lower_set <= result.upper_set:
                    return False, f"{kind}({alpha}) is not a descent class"
                if kind in ("X", "RX") and not result.is_projective_indecomposable:
                    return False, f"{kind}({alpha}) hull should be indecomposable"
            if is_peak(alpha):
                hull = hecke.hull_or_cover("Q-hull", alpha=alpha)
                if not hull.is_projective_indecomposable:
                    return False, f"Q({alpha}) hull should be indecomposable"
                hecke.hull_or_cover("Q-cover", alpha=alpha)
    return True, "family hulls and covers match the general formulas"


def check_projective_decompositions(nmax: int, seed: int) -> tuple[bool, str]:
    for n in range(1, min(nmax, 6) + 1):
        for T in subsets(list(range(1, n))):
            for S in subsets(sorted(T)):
                hecke.projective_decomposition(S, T, n)
    return True, "projective summand dimensions audit cleanly"


SUITES: dict[str, list[Check]] = {
    "perm": [
        ("descent symmetry", check_descent_symmetry),
        ("weak order oracle", check_weak_order_oracle),
        ("w0/w1 identities", check_w0_w1_identities),
        ("descent class oracle", check_descent_class_oracle),
        ("coset decomposition", check_coset_decomposition),
        ("interval closure", check_interval_closure),
    ],
    "poset": [
        ("interval/poset round trip", check_interval_poset_roundtrip),
        ("extremes formula", check_extremes_formula),
        ("relabel classification", check_relabel_classification),
        ("bar involution", check_bar_involution),
    ],
    "diagram": [
        ("reflections", check_reflections),
        ("canonical fill intervals", check_two_kinds),
        ("northeast filling", check_fill_ne),
        ("star action relations", check_star_action_relations),
        ("descent diagram intervals", check_descent_diagram_invariants),
        ("ribbons free", check_ribbons_free),
    ],
    "class": [
        ("iso oracle", check_class_oracle),
        ("class structure", check_class_structure),
        ("moves preserve descents", check_move_preserves_descents),
    ],
    "family": [
        ("closed forms vs BFS", check_family_vs_bfs),
        ("diagram freeness", check_family_freeness),
        ("singleton classes", check_singleton_class),
        ("twisted translates", check_twisted_translates),
        ("tableau bijections", check_tableau_bijection_sweep),
    ],
    "module": [
        ("relation suite", check_module_relations),
        ("one-dimensional actions", check_one_dimensional_action),
        ("dimension audits", check_dimension_audits),
        ("twist consistency", check_twist_consistency),
        ("intertwiner ladder", check_intertwiner_ladder),
        ("hulls and covers", check_hull_cover_families),
        ("projective decompositions", check_projective_decompositions),
    ],
}


def run_suite(name: str, nmax: int, seed: int = 0) -> list[tuple[str, bool, str]]:
    """Run one suite (or 'all'); returns (check name, ok, detail) rows."""
    names = list(SUITES) if name == "all" else [name]
    rows = []
    for suite in names:
        if suite not in SUITES:
            raise KeyError(f"unknown suite {suite!r}")
        for check_name, fn in SUITES[suite]:
            ok, detail = fn(nmax, seed)
            rows.append((f"{suite}:{check_name}", ok, detail))
    return rows
