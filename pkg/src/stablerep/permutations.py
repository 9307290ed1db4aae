"""Finitely supported permutations of the positive integers.

Elements of every finite symmetric group live in one type: a permutation
is stored by its action on the (finite) set of points it moves, so the
nested groups S_1 < S_2 < ... can be mixed freely and equality ignores
trailing fixed points.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence


class Permutation:
    """A bijection of {1, 2, 3, ...} moving only finitely many points.

    >>> s = Permutation.from_cycles([[1, 2], [4, 5, 6]])
    >>> s(1), s(2), s(3), s(4)
    (2, 1, 3, 5)
    >>> s.level
    6
    >>> s.cycle_type()
    (3, 2)
    """

    __slots__ = ("_map", "_pairs", "_hash")

    def __init__(self, mapping: Mapping[int, int]):
        m = {}
        for a, b in mapping.items():
            a = int(a)
            b = int(b)
            if a < 1 or b < 1:
                raise ValueError("points must be positive integers")
            if a != b:
                m[a] = b
        if set(m) != set(m.values()):
            raise ValueError("mapping is not a bijection on its support")
        self._map = m
        self._pairs = tuple(sorted(m.items()))
        self._hash = hash(self._pairs)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from a list of disjoint cycles, e.g. [[1, 2], [4, 5, 6]]."""
        m: dict[int, int] = {}
        for cyc in cycles:
            cyc = list(cyc)
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated point inside cycle {cyc}")
            for p in cyc:
                if p in m:
                    raise ValueError(f"cycles are not disjoint at point {p}")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                m[a] = b
        return cls(m)

    @classmethod
    def from_one_line(cls, values: Sequence[int]) -> "Permutation":
        """Build from the word (s(1), ..., s(n))."""
        return cls({i + 1: v for i, v in enumerate(values)})

    def __call__(self, i: int) -> int:
        return self._map.get(i, i)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (p * q)(i) = p(q(i)): the right factor acts first.
        if not isinstance(other, Permutation):
            return NotImplemented
        pts = set(self._map) | set(other._map)
        return Permutation({i: self(other(i)) for i in pts})

    def inverse(self) -> "Permutation":
        return Permutation({b: a for a, b in self._map.items()})

    def conjugate_by(self, t: "Permutation") -> "Permutation":
        """Return t * self * t^-1."""
        return Permutation({t(a): t(b) for a, b in self._map.items()})

    def shift(self, m: int) -> "Permutation":
        """Translate every moved point up by m: acts on {m+1, m+2, ...}.

        >>> transposition(1, 2).shift(3)
        Permutation[(4 5)]
        """
        if m < 0:
            raise ValueError("shift must be >= 0")
        return Permutation({a + m: b + m for a, b in self._map.items()})

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._map)

    @property
    def level(self) -> int:
        """Smallest n with support contained in {1, ..., n}; 0 for the identity."""
        return max(self._map, default=0)

    def is_identity(self) -> bool:
        return not self._map

    def one_line(self, n: Optional[int] = None) -> tuple[int, ...]:
        n = self.level if n is None else n
        if n < self.level:
            raise ValueError(f"level {self.level} permutation does not fit in S_{n}")
        return tuple(self(i) for i in range(1, n + 1))

    def cycles(self) -> list[list[int]]:
        """Disjoint cycles of length >= 2, each starting at its smallest point."""
        seen: set[int] = set()
        out = []
        for start in sorted(self._map):
            if start in seen:
                continue
            cyc = [start]
            p = self._map[start]
            while p != start:
                cyc.append(p)
                seen.add(p)
                p = self._map[p]
            seen.add(start)
            out.append(cyc)
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Multiset of cycle lengths >= 2, weakly decreasing. Fixed points implicit."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def cycle_partition(self, n: int) -> tuple[int, ...]:
        """Full cycle type as a partition of n, fixed points included.

        >>> transposition(1, 2).cycle_partition(4)
        (2, 1, 1)
        """
        if n < self.level:
            raise ValueError(f"level {self.level} permutation does not fit in S_{n}")
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (n - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def preserves(self, n: int) -> bool:
        """True iff the set {1, ..., n} is mapped onto itself."""
        return all(b <= n for a, b in self._map.items() if a <= n)

    @property
    def sign(self) -> int:
        return (-1) ** sum(len(c) - 1 for c in self.cycles())

    def to_cycles(self) -> list[list[int]]:
        return self.cycles()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        # Deterministic order: by level, then one-line word.
        if not isinstance(other, Permutation):
            return NotImplemented
        n = max(self.level, other.level)
        return (self.level, self.one_line(n)) < (other.level, other.one_line(n))

    def __str__(self) -> str:
        if not self._map:
            return "e"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())

    def __repr__(self) -> str:
        return f"Permutation[{self}]"


IDENTITY = Permutation({})


def transposition(i: int, j: int) -> Permutation:
    if i == j:
        raise ValueError("transposition needs two distinct points")
    return Permutation({i: j, j: i})


def cycle(*points: int) -> Permutation:
    """The cycle sending points[0] -> points[1] -> ... -> points[0]."""
    return Permutation.from_cycles([points]) if len(points) > 1 else IDENTITY


def conjugate(t: Permutation, s: Permutation) -> Permutation:
    """Return t * s * t^-1.

    >>> conjugate(transposition(1, 3), transposition(1, 2))
    Permutation[(2 3)]
    """
    return s.conjugate_by(t)


def split_product(s: Permutation, n: int) -> Optional[tuple[Permutation, Permutation]]:
    """Factor s = s1 * s2 with s1 in S_n and s2 fixing 1..n, if possible.

    Returns None when s does not preserve {1, ..., n} as a set; the
    factorization is unique when it exists.

    >>> split_product(Permutation.from_cycles([[1, 2], [4, 5]]), 3)
    (Permutation[(1 2)], Permutation[(4 5)])
    >>> split_product(transposition(3, 4), 3) is None
    True
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if not s.preserves(n):
        return None
    low = {a: b for a, b in s._pairs if a <= n}
    high = {a: b for a, b in s._pairs if a > n}
    return Permutation(low), Permutation(high)


@lru_cache(maxsize=8)
def symmetric_group(n: int) -> tuple[Permutation, ...]:
    """All elements of S_n, in lexicographic one-line order. Cached."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return tuple(
        Permutation.from_one_line(w) for w in itertools.permutations(range(1, n + 1))
    )


@lru_cache(maxsize=8)
def element_index(n: int) -> dict[Permutation, int]:
    return {g: i for i, g in enumerate(symmetric_group(n))}


def adjacent_word(p: Permutation, n: Optional[int] = None) -> tuple[int, ...]:
    """Write p as a product of adjacent transpositions.

    Returns indices (i_1, ..., i_k) meaning p = t_{i_1} * ... * t_{i_k}
    where t_i = (i, i+1) and the rightmost factor acts first.

    >>> w = adjacent_word(cycle(1, 2, 3))
    >>> from functools import reduce
    >>> reduce(lambda a, b: a * b, [transposition(i, i + 1) for i in w]) == cycle(1, 2, 3)
    True
    """
    n = p.level if n is None else n
    word = list(p.one_line(n))
    swaps = []
    changed = True
    while changed:
        changed = False
        for idx in range(n - 1):
            if word[idx] > word[idx + 1]:
                word[idx], word[idx + 1] = word[idx + 1], word[idx]
                swaps.append(idx + 1)
                changed = True
    return tuple(reversed(swaps))
