"""Exact root-system engine for gl(n+m) and sp(2p) relative to their compact subalgebras.

Weights and roots live in coordinates of the standard e_i basis.  All
arithmetic is exact (`fractions.Fraction` over arbitrary-precision ints):
half-integer weights and tests like "is this pairing a positive integer"
are load-bearing, so nothing is ever rounded.

Two systems are provided:

* ``build_gl_root_system(n, m)`` -- gl(n+m) with compact part
  gl(n) x gl(m) (blocks 1..n and n+1..n+m), type A.
* ``build_sp_root_system(p)`` -- sp(2p) with compact part gl(p), type C.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]
#: A weight vector; entries are exact rationals in e_i coordinates.
Weight = tuple[Fraction, ...]

GL = "gl"
SP = "sp"


def as_weight(coords: Iterable[Union[Rational, str]]) -> tuple[Fraction, ...]:
    """Coerce a sequence of exact rationals (or strings like "3/2") to a weight."""
    return tuple(Fraction(c) for c in coords)


def weight_sum(a: Sequence[Rational], b: Sequence[Rational]) -> tuple[Fraction, ...]:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return tuple(Fraction(x) + Fraction(y) for x, y in zip(a, b))


@dataclass(frozen=True)
class Root:
    """A root with its positivity and compactness flags.

    Coordinates are exact integers; in type A roots look like e_i - e_j,
    in type C additionally +-(e_i + e_j) and +-2e_i.
    """

    coords: tuple[int, ...]
    is_positive: bool
    is_compact: bool

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords), not self.is_positive, self.is_compact)


@dataclass(frozen=True)
class RootSystem:
    """Enumerated root system with positivity/compactness partitions and rho.

    Immutable after construction; every derived view is precomputed so the
    instance can be shared freely across parallel workers.
    """

    kind: str                    # GL or SP
    blocks: tuple[int, ...]      # (n, m) for GL, (p,) for SP
    rank: int
    roots: tuple[Root, ...]
    rho: tuple[Fraction, ...]
    _by_coords: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_by_coords", {r.coords: r for r in self.roots})

    @property
    def positive(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.is_positive)

    @property
    def compact(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.is_compact)

    @property
    def noncompact(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if not r.is_compact)

    @property
    def noncompact_positive(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.is_positive and not r.is_compact)

    @property
    def compact_positive(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.is_positive and r.is_compact)

    def classify(self, coords: Sequence[Rational]) -> Union[Root, None]:
        """Return the stored root with these coordinates, or None if not a root."""
        if len(coords) != self.rank:
            raise ValueError(f"dimension mismatch: {len(coords)} vs rank {self.rank}")
        key = _intify(coords)
        if key is None:
            return None
        return self._by_coords.get(key)

    def is_compact_coords(self, coords: Sequence[Rational]) -> bool:
        root = self.classify(coords)
        return root is not None and root.is_compact

    def simple_roots(self) -> tuple[Root, ...]:
        """The simple positive roots: e_i - e_{i+1} (both kinds), plus 2e_p for SP."""
        simple = []
        for i in range(self.rank - 1):
            coords = [0] * self.rank
            coords[i], coords[i + 1] = 1, -1
            simple.append(self._by_coords[tuple(coords)])
        if self.kind == SP:
            coords = [0] * self.rank
            coords[-1] = 2
            simple.append(self._by_coords[tuple(coords)])
        return tuple(simple)


def _intify(coords: Sequence[Rational]) -> Union[tuple[int, ...], None]:
    """Exact-integer key for coordinate lookup; None if any entry is non-integral."""
    out = []
    for c in coords:
        f = Fraction(c)
        if f.denominator != 1:
            return None
        out.append(f.numerator)
    return tuple(out)


def build_gl_root_system(n: int, m: int) -> RootSystem:
    """Root system of gl(n+m) with compact block pair gl(n) x gl(m).

    Roots are e_i - e_j (i != j); e_i - e_j is positive iff i < j and
    compact iff i, j lie in the same block {1..n} or {n+1..n+m}.
    rho = ((m+n-1)/2, (m+n-3)/2, ..., (-m-n+1)/2).
    """
    if n < 1 or m < 1:
        raise ValueError(f"block sizes must be positive, got n={n}, m={m}")
    rank = n + m
    roots = []
    for i in range(rank):
        for j in range(rank):
            if i == j:
                continue
            coords = [0] * rank
            coords[i], coords[j] = 1, -1
            same_block = (i < n) == (j < n)
            roots.append(Root(tuple(coords), is_positive=i < j, is_compact=same_block))
    rho = tuple(Fraction(rank - 2 * i - 1, 2) for i in range(rank))
    return RootSystem(GL, (n, m), rank, tuple(roots), rho)


def build_sp_root_system(p: int) -> RootSystem:
    """Root system of sp(2p) with compact part gl(p).

    Positive roots: e_i - e_j (i < j), e_i + e_j (i < j), 2e_i; the compact
    roots are exactly the e_i - e_j.  rho = (p, p-1, ..., 1).
    """
    if p < 1:
        raise ValueError(f"rank must be positive, got p={p}")
    roots = []
    for i in range(p):
        for j in range(p):
            if i == j:
                continue
            coords = [0] * p
            coords[i], coords[j] = 1, -1
            roots.append(Root(tuple(coords), is_positive=i < j, is_compact=True))
    for i in range(p):
        for j in range(i + 1, p):
            coords = [0] * p
            coords[i] = coords[j] = 1
            roots.append(Root(tuple(coords), is_positive=True, is_compact=False))
            roots.append(Root(tuple(-c for c in coords), is_positive=False, is_compact=False))
    for i in range(p):
        coords = [0] * p
        coords[i] = 2
        roots.append(Root(tuple(coords), is_positive=True, is_compact=False))
        roots.append(Root(tuple(-c for c in coords), is_positive=False, is_compact=False))
    rho = tuple(Fraction(p - i) for i in range(p))
    return RootSystem(SP, (p,), p, tuple(roots), rho)


def _coords_of(alpha: Union[Root, Sequence[Rational]]) -> Sequence[Rational]:
    return alpha.coords if isinstance(alpha, Root) else alpha


def pairing(lam: Sequence[Rational], alpha: Union[Root, Sequence[Rational]]) -> Fraction:
    """The normalized pairing 2<lam, alpha> / <alpha, alpha>, exactly.

    With the standard dot product this gives lam_i - lam_j on e_i - e_j,
    lam_i + lam_j on e_i + e_j, and lam_i on 2e_i.
    """
    ac = _coords_of(alpha)
    if len(lam) != len(ac):
        raise ValueError(f"dimension mismatch: {len(lam)} vs {len(ac)}")
    norm = sum(c * c for c in ac)
    if norm == 0:
        raise ValueError("zero vector is not a root")
    num = sum(Fraction(l) * c for l, c in zip(lam, ac))
    return 2 * num / norm


def reflect(alpha: Union[Root, Sequence[Rational]],
            gamma: Union[Root, Sequence[Rational]]) -> tuple[Fraction, ...]:
    """Reflection s_alpha(gamma) = gamma - (gamma)_alpha * alpha, in coordinates."""
    ac = _coords_of(alpha)
    gc = _coords_of(gamma)
    c = pairing(gc, ac)
    return tuple(Fraction(g) - c * a for g, a in zip(gc, ac))


def classify_root(rs: RootSystem, coords: Sequence[Rational]) -> Union[Root, None]:
    """Membership lookup: the system's Root with these coordinates, or None."""
    return rs.classify(coords)
