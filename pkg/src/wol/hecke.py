"""
0-Hecke modules as explicit integer generator matrices: interval modules,
poset modules, the peak-tableau module, twists, intertwiners, and the
injective-hull / projective-cover interval formulas.

Matrices always represent the idempotent generators pi_1..pi_{n-1}
(column j holds the image of basis vector j); the flavor tag records
whether the construction naturally acted through pi or through
pi-bar = pi - 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .compositions import (
    Composition,
    all_compositions,
    is_peak,
    reverse,
    set_of,
    subset_transpose,
    validate_composition,
)
from .classes import _iso_candidates, _check_iso_caps
from .descent_diagrams import build_D_S_rho, build_D_sigma_S, family_diagram
from .diagrams import (
    Diagram,
    Filling,
    canonical_fill,
    filling_to_json,
    free_violation,
    profiles,
    reading,
    reflect,
)
from .errors import DomainError, InternalError, OrderError, ShapeError
from .permutations import (
    LEFT,
    Perm,
    WeakInterval,
    descents,
    format_perm,
    longest_parabolic,
    mult_s_left,
    w1,
    weak_interval,
)
from .posets import Poset, linear_extensions_L
from .tableaux import enumerate_family

__all__ = [
    "HeckeModule",
    "HullCoverResult",
    "module_B",
    "module_Bbar",
    "module_M",
    "module_SPIT",
    "check_relations",
    "twist_theta_chi",
    "intertwiner_from_dp_iso",
    "signed_intertwiner",
    "hull_interval",
    "cover_interval",
    "hull_or_cover",
    "projective_decomposition",
    "module_to_json",
    "module_from_json",
]

PI = "pi"
PI_BAR = "pi_bar"


@dataclass(frozen=True, eq=False)
class HeckeModule:
    """A finite-dimensional module given by its pi-generator matrices."""

    n: int
    basis: tuple
    pis: tuple[np.ndarray, ...]
    flavor: str

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pi_bar(self, i: int) -> np.ndarray:
        return self.pis[i - 1] - np.eye(self.dim, dtype=np.int64)

    def __repr__(self) -> str:
        return f"HeckeModule(n={self.n}, dim={self.dim}, flavor={self.flavor!r})"


def check_relations(M: HeckeModule) -> None:
    """Verify idempotence, the braid relation, and far commutation.

    Raises InternalError on failure; constructors call this and it must
    never fire on well-formed input.
    """
    mats = M.pis
    for i, A in enumerate(mats, start=1):
        if not np.array_equal(A @ A, A):
            raise InternalError(f"pi_{i} is not idempotent")
    for i in range(1, M.n - 1):
        A, B = mats[i - 1], mats[i]
        if not np.array_equal(A @ B @ A, B @ A @ B):
            raise InternalError(f"braid relation fails at {i}")
    for i in range(1, M.n - 1):
        for j in range(i + 2, M.n):
            A, B = mats[i - 1], mats[j - 1]
            if not np.array_equal(A @ B, B @ A):
                raise InternalError(f"far commutation fails at ({i}, {j})")


def _module_from_action(n, basis, act, flavor):
    """Assemble matrices from an action callback act(i, b) -> list of
    (coefficient, basis element)."""
    index = {b: k for k, b in enumerate(basis)}
    dim = len(basis)
    pis = []
    for i in range(1, n):
        A = np.zeros((dim, dim), dtype=np.int64)
        for b, col in index.items():
            for coeff, image in act(i, b):
                A[index[image], col] += coeff
        pis.append(A)
    M = HeckeModule(n, tuple(basis), tuple(pis), flavor)
    check_relations(M)
    return M


def _interval_action(elements: frozenset[Perm]):
    def act(i: int, g: Perm):
        if i in descents(g, LEFT):
            return [(1, g)]
        h = mult_s_left(g, i)
        return [(1, h)] if h in elements else []

    return act


def module_B(I: WeakInterval) -> HeckeModule:
    """The weak Bruhat interval module B(I) in its permutation basis."""
    if I.side != LEFT:
        raise DomainError("interval modules take left intervals")
    basis = I.elements
    return _module_from_action(I.n, basis, _interval_action(frozenset(basis)), PI)


def module_Bbar(I: WeakInterval) -> HeckeModule:
    """The negative interval module: pi-bar fixes descents with sign -1."""
    if I.side != LEFT:
        raise DomainError("interval modules take left intervals")
    basis = I.elements
    elements = frozenset(basis)

    def act_bar(i: int, g: Perm):
        if i in descents(g, LEFT):
            return [(-1, g)]
        h = mult_s_left(g, i)
        return [(1, h)] if h in elements else []

    def act(i: int, g: Perm):
        images = {g: 1}
        for coeff, image in act_bar(i, g):
            images[image] = images.get(image, 0) + coeff
        return [(c, b) for b, c in images.items() if c]

    return _module_from_action(I.n, basis, act, PI_BAR)


def module_M(P: Poset) -> HeckeModule:
    """The poset module on the left linear extensions of P."""
    basis = linear_extensions_L(P)
    return _module_from_action(P.n, basis, _interval_action(frozenset(basis)), PI)


def module_SPIT(alpha: Iterable[int]) -> HeckeModule:
    """The peak-immaculate-tableau module for a peak composition.

    pi-bar negates a tableau when i sits strictly below i+1, moves it to
    the swapped tableau when that stays in the family, and kills it
    otherwise.
    """
    alpha = validate_composition(alpha)
    if not is_peak(alpha):
        raise ShapeError(f"{alpha} is not a peak composition")
    basis = enumerate_family("SPIT", alpha)
    members = set(basis)
    n = sum(alpha)

    def swap_tab(T: Filling, i: int) -> Filling:
        swap = {i: i + 1, i + 1: i}
        return Filling(T.diagram, tuple((x, y, swap.get(v, v)) for x, y, v in T.entries))

    def act(i: int, T: Filling):
        # pi = pi_bar + 1
        yi = T.cell_of(i)[1]
        yj = T.cell_of(i + 1)[1]
        if yi < yj:
            return []  # pi_bar gives -T, so pi gives 0
        out = [(1, T)]
        if yi > yj:
            moved = swap_tab(T, i)
            if moved in members:
                out.append((1, moved))
        return out

    return _module_from_action(n, basis, act, PI_BAR)


def twist_theta_chi(M: HeckeModule) -> HeckeModule:
    """The dual-space twist: the new pi-bar matrices are the transposes
    of the negated pi matrices."""
    dim = M.dim
    eye = np.eye(dim, dtype=np.int64)
    pis = tuple(eye - A.T for A in M.pis)
    out = HeckeModule(M.n, M.basis, pis, M.flavor)
    check_relations(out)
    return out


def signed_intertwiner(
    M1: HeckeModule, M2: HeckeModule, pairing: Sequence[tuple[int, int]]
) -> dict[int, int] | None:
    """Signs eps making the signed permutation matrix Phi (sending basis
    k of M1 to eps[k] times basis pairing[k] of M2) intertwine all
    generators, or None.

    Signs are propagated from connected components and then fully
    verified.
    """
    if M1.n != M2.n or M1.dim != M2.dim:
        return None
    to2 = dict(pairing)
    dim = M1.dim
    # Relative signs between basis vectors linked by any generator entry.
    edges: dict[int, list[tuple[int, int]]] = {k: [] for k in range(dim)}
    for A, B in zip(M1.pis, M2.pis):
        for a in range(dim):
            for b in range(dim):
                if a == b:
                    continue
                t = A[b, a]
                if t == 0:
                    continue
                u = B[to2[b], to2[a]]
                if u == 0 or abs(t) != abs(u):
                    return None
                rel = 1 if t == u else -1
                edges[a].append((b, rel))
                edges[b].append((a, rel))
    eps: dict[int, int] = {}
    for root in range(dim):
        if root in eps:
            continue
        eps[root] = 1
        stack = [root]
        while stack:
            a = stack.pop()
            for b, rel in edges[a]:
                if b not in eps:
                    eps[b] = eps[a] * rel
                    stack.append(b)
    phi = np.zeros((dim, dim), dtype=np.int64)
    for a in range(dim):
        phi[to2[a], a] = eps[a]
    for A, B in zip(M1.pis, M2.pis):
        if not np.array_equal(phi @ A, B @ phi):
            return None
    return eps


def intertwiner_from_dp_iso(
    I: WeakInterval, J: WeakInterval, cap: int | None = None
) -> dict[Perm, Perm] | None:
    """A descent-preserving isomorphism I -> J whose basis bijection
    intertwines B(I) and B(J), or None when none exists."""
    if not _check_iso_caps(I, J, cap):
        return None
    MI, MJ = module_B(I), module_B(J)
    index_I = {g: k for k, g in enumerate(MI.basis)}
    index_J = {g: k for k, g in enumerate(MJ.basis)}
    for mapping in _iso_candidates(I, J):
        pairing = [(index_I[g], index_J[h]) for g, h in mapping.items()]
        phi = np.zeros((MI.dim, MI.dim), dtype=np.int64)
        for a, b in pairing:
            phi[b, a] = 1
        if all(np.array_equal(phi @ A, B @ phi) for A, B in zip(MI.pis, MJ.pis)):
            return mapping
    return None


@dataclass(frozen=True)
class HullCoverResult:
    """An injective hull or projective cover, as a descent-class interval."""

    kind: str  # "injective_hull" | "projective_cover"
    interval: WeakInterval
    lower_set: frozenset[int]
    upper_set: frozenset[int]

    @property
    def is_projective_indecomposable(self) -> bool:
        return self.lower_set == self.upper_set


def _require_free(D: Diagram) -> None:
    violation = free_violation(D)
    if violation is not None:
        raise OrderError(
            f"diagram is not free of a strictly upper-right configuration: {violation}"
        )


def hull_interval(D: Diagram) -> HullCoverResult:
    """Injective hull of the module of a free diagram's lower interval:
    [w_0(Des_L(readingBTLR(F^right))), w_1(set(r(D)))]_L."""
    _require_free(D)
    n = D.n
    A = descents(reading(canonical_fill(D, "right"), "BTLR"), LEFT)
    B = set_of(profiles(D)[0])
    if not A <= B:
        raise InternalError("hull interval is not a descent class")
    return HullCoverResult(
        "injective_hull",
        weak_interval(longest_parabolic(A, n), w1(B, n), LEFT),
        frozenset(A),
        frozenset(B),
    )


def cover_interval(D: Diagram) -> HullCoverResult:
    """Projective cover of the module of a free diagram's upper interval:
    [w_0(set(c(D))^c), w_1(Des_L(readingLRBT(F^down)))]_L."""
    _require_free(D)
    n = D.n
    A = frozenset(range(1, n)) - set_of(profiles(D)[1])
    B = descents(reading(canonical_fill(D, "down"), "LRBT"), LEFT)
    if not A <= B:
        raise InternalError("cover interval is not a descent class")
    return HullCoverResult(
        "projective_cover",
        weak_interval(longest_parabolic(A, n), w1(B, n), LEFT),
        frozenset(A),
        frozenset(B),
    )


def _v_hull_shortcut(alpha: Composition) -> HullCoverResult:
    # Closed form for Des_L of the column reading of F^right on the V
    # diagram.  Each part of size >= 2 contributes the descent run
    # beta_i - alpha_i + 2 .. beta_i - 1 with beta_i the i-th partial sum
    # minus i, and n - ell is always a descent when any part exceeds 1.
    n, ell = sum(alpha), len(alpha)
    A: set[int] = set()
    for i in range(1, ell + 1):
        if alpha[i - 1] >= 2:
            beta = sum(alpha[:i]) - i
            A.update(range(beta - alpha[i - 1] + 2, beta))
    if n > ell:
        A.add(n - ell)
    B = set_of(profiles(family_diagram("V", alpha))[0])
    return HullCoverResult(
        "injective_hull",
        weak_interval(longest_parabolic(frozenset(A), n), w1(B, n), LEFT),
        frozenset(A),
        frozenset(B),
    )


def _x_hull_shortcut(alpha: Composition) -> HullCoverResult:
    n = sum(alpha)
    S = set_of(profiles(family_diagram("X", alpha))[0])
    return HullCoverResult(
        "injective_hull",
        weak_interval(longest_parabolic(S, n), w1(S, n), LEFT),
        frozenset(S),
        frozenset(S),
    )


def _q_cover_shortcut(alpha: Composition) -> HullCoverResult:
    n, ell = sum(alpha), len(alpha)
    A = frozenset(2 * k for k in range(1, ell))
    G = family_diagram("Q", alpha)
    B = descents(reading(canonical_fill(G, "down"), "LRBT"), LEFT)
    return HullCoverResult(
        "projective_cover",
        weak_interval(longest_parabolic(A, n), w1(B, n), LEFT),
        A,
        frozenset(B),
    )


def _q_hull_shortcut(alpha: Composition) -> HullCoverResult:
    n = sum(alpha)
    S = set_of(reverse(alpha))
    return HullCoverResult(
        "injective_hull",
        weak_interval(longest_parabolic(S, n), w1(S, n), LEFT),
        frozenset(S),
        frozenset(S),
    )


def _twisted_cover_shortcut(kind: str, alpha: Composition) -> HullCoverResult:
    n = sum(alpha)
    base_diagram = family_diagram(kind, alpha)
    r_set = set_of(profiles(base_diagram)[0])
    if kind == "V":
        A = subset_transpose(r_set, n)
        B = subset_transpose(_v_hull_shortcut(alpha).lower_set, n)
    elif kind == "X":
        A = B = subset_transpose(r_set, n)
    else:  # Shat
        A = subset_transpose(r_set, n)
        hull = hull_interval(base_diagram)
        B = subset_transpose(hull.lower_set, n)
    return HullCoverResult(
        "projective_cover",
        weak_interval(longest_parabolic(A, n), w1(B, n), LEFT),
        frozenset(A),
        frozenset(B),
    )


def hull_or_cover(kind: str, **params) -> HullCoverResult:
    """Hulls and covers, general or by family shortcut.

    kind "lower" takes S and rho; "upper" takes sigma and S.  The family
    kinds take alpha; each family shortcut is checked against the general
    formula on the family's diagram before being returned.
    """
    if kind == "lower":
        S, rho = frozenset(params["S"]), params["rho"]
        return hull_interval(build_D_S_rho(S, rho))
    if kind == "upper":
        sigma, S = params["sigma"], frozenset(params["S"])
        return cover_interval(build_D_sigma_S(sigma, S).diagram)
    alpha = validate_composition(params["alpha"])
    if kind in ("V", "X", "Shat"):
        shortcut = {
            "V": _v_hull_shortcut,
            "X": _x_hull_shortcut,
            "Shat": lambda a: hull_interval(family_diagram("Shat", a)),
        }[kind](alpha)
        general = hull_interval(family_diagram(kind, alpha))
    elif kind == "Q-cover":
        shortcut = _q_cover_shortcut(alpha)
        general = cover_interval(family_diagram("Q", alpha))
    elif kind == "Q-hull":
        shortcut = _q_hull_shortcut(alpha)
        general = hull_interval(family_diagram("Q", alpha))
    elif kind in ("RV", "RX", "RShat"):
        base = kind[1:]
        shortcut = _twisted_cover_shortcut(base, alpha)
        general = cover_interval(reflect(family_diagram(base, alpha), "transpose"))
    else:
        raise DomainError(f"unknown hull/cover kind {kind!r}")
    if (shortcut.kind, shortcut.interval) != (general.kind, general.interval):
        raise InternalError(
            f"family shortcut disagrees with the general formula for {kind}({alpha}): "
            f"{shortcut.interval} vs {general.interval}"
        )
    return shortcut


def projective_decomposition(
    S: Iterable[int], T: Iterable[int], n: int
) -> list[Composition]:
    """Compositions alpha of n with S <= set(alpha)^c <= T, audited so the
    projective dimensions sum to the descent-class size."""
    S, T = frozenset(S), frozenset(T)
    if not S <= T:
        raise OrderError(f"S must be contained in T: {sorted(S)} vs {sorted(T)}")
    full = frozenset(range(1, n))
    out = [
        alpha
        for alpha in all_compositions(n)
        if S <= full - set_of(alpha) <= T
    ]
    total = sum(
        weak_interval(
            longest_parabolic(full - set_of(a), n), w1(full - set_of(a), n), LEFT
        ).size
        for a in out
    )
    expected = weak_interval(longest_parabolic(S, n), w1(T, n), LEFT).size
    if total != expected:
        raise InternalError(
            f"projective dimensions sum to {total}, descent class has {expected}"
        )
    return out


def module_to_json(M: HeckeModule) -> str:
    def label(b):
        if isinstance(b, tuple):
            return format_perm(b)
        return json.loads(filling_to_json(b))

    return json.dumps(
        {
            "n": M.n,
            "flavor": M.flavor,
            "basis": [label(b) for b in M.basis],
            "pi": [A.tolist() for A in M.pis],
        }
    )


def module_from_json(text: str) -> HeckeModule:
    from .diagrams import filling_from_json
    from .permutations import parse_perm

    data = json.loads(text)
    basis = tuple(
        parse_perm(b) if isinstance(b, str) else filling_from_json(json.dumps(b))
        for b in data["basis"]
    )
    pis = tuple(np.array(A, dtype=np.int64) for A in data["pi"])
    M = HeckeModule(int(data["n"]), basis, pis, data["flavor"])
    check_relations(M)
    return M
