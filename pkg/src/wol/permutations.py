"""
Permutations of {1, ..., n} in one-line notation, and the weak Bruhat orders.

A permutation is a tuple ``w`` of length n containing each of 1..n exactly
once, with ``w[i-1]`` the image of i.  All values and positions are 1-based
to match the usual combinatorial conventions; only tuple indexing is
0-based.

>>> compose((3, 2, 1), (3, 2, 1))
(1, 2, 3)
>>> length((2, 3, 1, 5, 6, 4))
4
>>> sorted(descents((2, 3, 1, 5, 6, 4), "L"))
[1, 4]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Literal

from .errors import DomainError, OrderError

__all__ = [
    "Perm",
    "Side",
    "LEFT",
    "RIGHT",
    "WeakInterval",
    "identity",
    "is_perm",
    "all_perms",
    "compose",
    "inverse",
    "length",
    "mult_s_left",
    "mult_s_right",
    "descents",
    "longest_element",
    "longest_parabolic",
    "w1",
    "weak_leq",
    "inv_mask",
    "covers_up",
    "weak_interval",
    "descent_class",
    "coset_decompose",
    "format_perm",
    "parse_perm",
    "format_subset",
    "parse_subset",
]

Perm = tuple[int, ...]
Side = Literal["L", "R"]
LEFT: Side = "L"
RIGHT: Side = "R"

N_CAP = 20  # window entries stay small machine integers


def _check_side(side: str) -> None:
    if side not in ("L", "R"):
        raise DomainError(f"side must be 'L' or 'R', got {side!r}")


def identity(n: int) -> Perm:
    """The identity permutation of S_n.

    >>> identity(4)
    (1, 2, 3, 4)
    """
    if not 1 <= n <= N_CAP:
        raise DomainError(f"window size must be in 1..{N_CAP}, got {n}")
    return tuple(range(1, n + 1))


def is_perm(w: Iterable[int]) -> bool:
    """Check that ``w`` is a bijection of {1..n} in one-line notation.

    >>> [is_perm(w) for w in [(1,), (2, 1), (1, 1), (0, 1)]]
    [True, True, False, False]
    """
    w = tuple(w)
    return sorted(w) == list(range(1, len(w) + 1))


def validate_perm(w: Iterable[int]) -> Perm:
    w = tuple(w)
    if not is_perm(w):
        raise DomainError(f"not a permutation window: {w}")
    if len(w) > N_CAP:
        raise DomainError(f"window size {len(w)} exceeds cap {N_CAP}")
    return w


def all_perms(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    return _itertools_permutations(range(1, n + 1))


def compose(u: Perm, v: Perm) -> Perm:
    """The product uv, acting as (uv)(i) = u(v(i)).

    >>> compose((6, 5, 4, 3, 2, 1), (1, 3, 2, 4, 6, 5))
    (6, 4, 5, 3, 1, 2)
    """
    if len(u) != len(v):
        raise DomainError(f"size mismatch: {len(u)} vs {len(v)}")
    return tuple(u[x - 1] for x in v)


def inverse(u: Perm) -> Perm:
    """The inverse permutation.

    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    inv = [0] * len(u)
    for i, x in enumerate(u):
        inv[x - 1] = i + 1
    return tuple(inv)


def length(u: Perm) -> int:
    """Coxeter length = number of inversion pairs.

    >>> length((2, 3, 1, 5, 6, 4))
    4
    """
    n = len(u)
    return sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])


def inv_mask(u: Perm) -> int:
    """Bitmask of position-inversion pairs of the window.

    Bit for (i, j), i < j, is set when u(i) > u(j).  Containment of these
    masks is the left weak order: u <=_L v iff inv_mask(u) is a subset of
    inv_mask(v); on inverses it gives the right order.  Used as a fast
    path for bulk comparisons; agrees with :func:`weak_leq`.
    """
    n = len(u)
    mask = 0
    bit = 0
    for i in range(n):
        for j in range(i + 1, n):
            if u[i] > u[j]:
                mask |= 1 << bit
            bit += 1
    return mask


def mult_s_left(u: Perm, i: int) -> Perm:
    """s_i u: swaps the values i and i+1 in the window."""
    swap = {i: i + 1, i + 1: i}
    return tuple(swap.get(x, x) for x in u)


def mult_s_right(u: Perm, i: int) -> Perm:
    """u s_i: swaps the window entries at positions i and i+1."""
    w = list(u)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def descents(u: Perm, side: Side) -> frozenset[int]:
    """Left or right descent set of ``u``.

    Right descents are the positions i with u(i) > u(i+1); left descents
    are the right descents of the inverse.  Both agree with the
    length-drop definition.

    >>> sorted(descents((2, 3, 1, 5, 6, 4), "R"))
    [2, 5]
    """
    _check_side(side)
    if side == LEFT:
        u = inverse(u)
    return frozenset(i + 1 for i in range(len(u) - 1) if u[i] > u[i + 1])


def longest_element(n: int) -> Perm:
    """w_0, the order-reversing permutation."""
    return tuple(range(n, 0, -1))


def _check_subset(S: Iterable[int], n: int) -> frozenset[int]:
    S = frozenset(S)
    if not all(1 <= i <= n - 1 for i in S):
        raise DomainError(f"generator indices must lie in 1..{n - 1}: {sorted(S)}")
    return S


def longest_parabolic(S: Iterable[int], n: int) -> Perm:
    """w_0(S), the longest element of the parabolic subgroup S_S.

    Reverses each maximal block of consecutive generator indices.

    >>> longest_parabolic({2, 5}, 6)
    (1, 3, 2, 4, 6, 5)
    """
    S = _check_subset(S, n)
    w = list(range(1, n + 1))
    i = 1
    while i <= n - 1:
        if i in S:
            j = i
            while j + 1 <= n - 1 and j + 1 in S:
                j += 1
            w[i - 1 : j + 1] = reversed(w[i - 1 : j + 1])
            i = j + 2
        else:
            i += 1
    return tuple(w)


def w1(T: Iterable[int], n: int) -> Perm:
    """w_1(T) = w_0 w_0(T^c): the longest minimal-length coset representative.

    >>> w1({3}, 6)
    (4, 5, 6, 1, 2, 3)
    """
    T = _check_subset(T, n)
    comp = frozenset(range(1, n)) - T
    return compose(longest_element(n), longest_parabolic(comp, n))


def weak_leq(u: Perm, v: Perm, side: Side) -> bool:
    """Weak Bruhat order test via length additivity.

    Right order: l(u) + l(u^-1 v) = l(v); left order uses v u^-1.

    >>> weak_leq((1, 3, 2, 4, 6, 5), (2, 3, 1, 5, 6, 4), "L")
    True
    >>> weak_leq((2, 1, 3), (1, 3, 2), "L")
    False
    """
    _check_side(side)
    if len(u) != len(v):
        raise DomainError(f"size mismatch: {len(u)} vs {len(v)}")
    if side == RIGHT:
        quot = compose(inverse(u), v)
    else:
        quot = compose(v, inverse(u))
    return length(u) + length(quot) == length(v)


def covers_up(u: Perm, side: Side) -> list[tuple[int, Perm]]:
    """Upward covers of ``u``: the pairs (i, s_i u) or (i, u s_i)."""
    _check_side(side)
    ds = descents(u, side)
    mult = mult_s_left if side == LEFT else mult_s_right
    return [(i, mult(u, i)) for i in range(1, len(u)) if i not in ds]


@dataclass(frozen=True)
class WeakInterval:
    """A nonempty weak Bruhat interval [lo, hi] with a side tag.

    The order relation lo <= hi is checked at construction; the element
    list is computed on demand and cached, sorted lexicographically by
    one-line notation.
    """

    side: Side
    lo: Perm
    hi: Perm

    def __post_init__(self):
        _check_side(self.side)
        validate_perm(self.lo)
        validate_perm(self.hi)
        if not weak_leq(self.lo, self.hi, self.side):
            raise OrderError(
                f"{format_perm(self.lo)} is not below {format_perm(self.hi)} "
                f"in the {self.side} weak order"
            )

    @property
    def n(self) -> int:
        return len(self.lo)

    @cached_property
    def elements(self) -> tuple[Perm, ...]:
        seen = {self.lo}
        frontier = [self.lo]
        while frontier:
            nxt = []
            for g in frontier:
                for _, h in covers_up(g, self.side):
                    if h not in seen and weak_leq(h, self.hi, self.side):
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return tuple(sorted(seen))

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, g: Perm) -> bool:
        return weak_leq(self.lo, g, self.side) and weak_leq(g, self.hi, self.side)

    def translate_right(self, i: int) -> "WeakInterval":
        """The interval [lo s_i, hi s_i] (for left intervals)."""
        return WeakInterval(self.side, mult_s_right(self.lo, i), mult_s_right(self.hi, i))

    def __str__(self) -> str:
        return f"[{format_perm(self.lo)}, {format_perm(self.hi)}]_{self.side}"


def weak_interval(lo: Perm, hi: Perm, side: Side) -> WeakInterval:
    """The weak Bruhat interval from lo to hi; rejects lo not below hi.

    >>> weak_interval((1, 2, 3), (3, 1, 2), "L").elements
    ((1, 2, 3), (2, 1, 3), (3, 1, 2))
    """
    return WeakInterval(side, validate_perm(lo), validate_perm(hi))


def descent_class(S: Iterable[int], T: Iterable[int], n: int) -> WeakInterval:
    """The descent class {w : S <= Des_R(w) <= T} as [w_0(S), w_1(T)]_L.

    >>> str(descent_class({2, 5}, {1, 2, 4, 5}, 6))
    '[132465, 653421]_L'
    """
    S = _check_subset(S, n)
    T = _check_subset(T, n)
    if not S <= T:
        raise OrderError(f"S must be contained in T: {sorted(S)} vs {sorted(T)}")
    return weak_interval(longest_parabolic(S, n), w1(T, n), LEFT)


def coset_decompose(w: Perm, S: Iterable[int]) -> tuple[Perm, Perm]:
    """Write w = z u with u in S_S, Des_R(z) in S^c, l(w) = l(z) + l(u).

    >>> z, u = coset_decompose((2, 3, 1, 5, 6, 4), {1})
    >>> compose(z, u)
    (2, 3, 1, 5, 6, 4)
    """
    n = len(w)
    S = _check_subset(S, n)
    z = validate_perm(w)
    u = identity(n)
    while True:
        i = next((i for i in sorted(S) if z[i - 1] > z[i]), None)
        if i is None:
            return z, u
        z = mult_s_right(z, i)
        u = mult_s_left(u, i)


def format_perm(w: Perm) -> str:
    """One-line text form: digit string for n <= 9, comma-separated above.

    >>> format_perm((2, 3, 1, 5, 6, 4))
    '231564'
    >>> format_perm(tuple(range(1, 11)))
    '1,2,3,4,5,6,7,8,9,10'
    """
    if len(w) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def parse_perm(text: str) -> Perm:
    """Inverse of :func:`format_perm`.

    >>> parse_perm("231564")
    (2, 3, 1, 5, 6, 4)
    """
    text = text.strip()
    if "," in text:
        w = tuple(int(part) for part in text.split(","))
    else:
        w = tuple(int(ch) for ch in text)
    return validate_perm(w)


def format_subset(S: Iterable[int]) -> str:
    """Render a generator subset as "{2,5}"; the empty set as "{}"."""
    return "{" + ",".join(str(i) for i in sorted(S)) + "}"


def parse_subset(text: str) -> frozenset[int]:
    """Inverse of :func:`format_subset`.

    >>> sorted(parse_subset("{2,5}"))
    [2, 5]
    """
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(int(part) for part in text.split(","))
