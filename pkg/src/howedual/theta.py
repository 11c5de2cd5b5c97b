"""Duality-correspondence weight maps for the two compact dual pairs.

For (U(p), U(m,n)) a parameter sigma = (a; b) maps to the lowest weight

    tau' = (a_1 + p/2, ..., a_k + p/2, p/2, ..., p/2)
           (+) (-p/2, ..., -p/2, b_1 - p/2, ..., b_l - p/2)

(first block length m, second length n), and for (O(n,R), Sp(2p,R)) a
parameter (a_1, ..., a_k; eps) maps to

    tau' = (a_1 + n/2, ..., a_k + n/2, [n/2 + 1] * (1-eps)/2*(n-2k), n/2, ..., n/2)

of length p.  The lowest weights are converted to highest weights by
conjugation with the longest Weyl element: a block swap for gl, negate and
reverse for sp.

Parameters store only the strictly nonzero a's and b's; the constant pads
are applied when the formulas are evaluated.  Enumeration orders are
lexicographic and documented so golden outputs stay stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .rootsys import Weight


class ConstraintViolation(ValueError):
    """A correspondence parameter violates an admissibility constraint."""


def _check_strictly_positive_decreasing(entries: Sequence[int], name: str) -> None:
    if any(x <= 0 for x in entries):
        raise ConstraintViolation(f"{name} entries must be strictly positive: {entries}")
    if any(entries[i] < entries[i + 1] for i in range(len(entries) - 1)):
        raise ConstraintViolation(f"{name} must be weakly decreasing: {entries}")


@dataclass(frozen=True)
class UnitarySigma:
    """Parameter (a; b) for the (U(p), U(m,n)) correspondence.

    a: strictly positive, weakly decreasing (length k);
    b: strictly negative, weakly decreasing (length l), so 0 > b_1 >= ... >= b_l.
    Admissibility: k + l <= p, k <= m, l <= n.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    p: int
    m: int
    n: int

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def l(self) -> int:
        return len(self.b)

    def validate(self, relaxed: bool = False) -> None:
        """Raise ConstraintViolation naming the failed inequality.

        relaxed=True lifts only k + l <= p (the paper-style analysis
        relaxation); k <= m and l <= n stay mandatory because the weight
        formula is undefined without them.
        """
        _check_strictly_positive_decreasing(self.a, "a")
        neg = tuple(-x for x in self.b)
        if any(x >= 0 for x in self.b):
            raise ConstraintViolation(f"b entries must be strictly negative: {self.b}")
        if any(neg[i] > neg[i + 1] for i in range(len(neg) - 1)):
            raise ConstraintViolation(f"b must be weakly decreasing: {self.b}")
        if self.p < 1 or self.m < 1 or self.n < 1:
            raise ConstraintViolation(f"p, m, n must be positive: p={self.p}, m={self.m}, n={self.n}")
        if self.k > self.m:
            raise ConstraintViolation(f"k <= m violated: k={self.k}, m={self.m}")
        if self.l > self.n:
            raise ConstraintViolation(f"l <= n violated: l={self.l}, n={self.n}")
        if not relaxed and self.k + self.l > self.p:
            raise ConstraintViolation(f"k + l <= p violated: k={self.k}, l={self.l}, p={self.p}")


@dataclass(frozen=True)
class SignedWeight:
    """Dominant O(n,R)-parameter (a_1 >= ... >= a_k > 0; eps) for (O(n,R), Sp(2p,R)).

    Admissibility: k <= floor(n/2) and k + (1-eps)/2 * (n-2k) <= p.  The
    eps = -1 sign-twist is carried as metadata; it enters only through the
    middle block of the correspondence formula.
    """

    a: tuple[int, ...]
    epsilon: int
    n: int
    p: int

    @property
    def k(self) -> int:
        return len(self.a)

    def middle_length(self) -> int:
        return (1 - self.epsilon) // 2 * (self.n - 2 * self.k)

    def validate(self) -> None:
        _check_strictly_positive_decreasing(self.a, "a")
        if self.epsilon not in (1, -1):
            raise ConstraintViolation(f"epsilon must be +1 or -1: {self.epsilon}")
        if self.n < 1 or self.p < 1:
            raise ConstraintViolation(f"n, p must be positive: n={self.n}, p={self.p}")
        if self.k > self.n // 2:
            raise ConstraintViolation(f"k <= floor(n/2) violated: k={self.k}, n={self.n}")
        if self.k + self.middle_length() > self.p:
            raise ConstraintViolation(
                f"k + (1-eps)/2*(n-2k) <= p violated: k={self.k}, "
                f"middle={self.middle_length()}, p={self.p}")


def theta_u_lowest(sigma: UnitarySigma, relaxed: bool = False) -> Weight:
    """Lowest gl(m+n)-weight tau' attached to sigma; block lengths (m, n)."""
    sigma.validate(relaxed=relaxed)
    half_p = Fraction(sigma.p, 2)
    first = [x + half_p for x in sigma.a] + [half_p] * (sigma.m - sigma.k)
    second = [-half_p] * (sigma.n - sigma.l) + [x - half_p for x in sigma.b]
    return tuple(first + second)


def theta_o_lowest(sigma: SignedWeight) -> Weight:
    """Lowest sp(2p)-weight tau' attached to (a; eps); length p."""
    sigma.validate()
    half_n = Fraction(sigma.n, 2)
    mid = sigma.middle_length()
    out = [x + half_n for x in sigma.a]
    out += [half_n + 1] * mid
    out += [half_n] * (sigma.p - sigma.k - mid)
    return tuple(out)


def to_highest_gl(tau_prime: Sequence, m: int, n: int) -> Weight:
    """Swap the (m | n) blocks of a lowest gl-weight into the highest weight.

    The longest Weyl element sends U(m,n) to U(n,m); the result is the
    highest weight (n-block first, m-block second), dominant for U(n) x U(m).
    """
    if len(tau_prime) != m + n:
        raise ValueError(f"length mismatch: expected {m}+{n}={m + n}, got {len(tau_prime)}")
    tp = tuple(Fraction(x) for x in tau_prime)
    return tp[m:] + tp[:m]


def to_highest_sp(tau_prime: Sequence) -> Weight:
    """Negate and reverse a lowest sp-weight into the highest weight."""
    return tuple(-Fraction(x) for x in reversed(tau_prime))


def weakly_decreasing_tuples(lo: int, hi: int, length: int) -> Iterator[tuple[int, ...]]:
    """All weakly decreasing tuples with entries in [lo, hi], in ascending lex order."""
    if length == 0:
        yield ()
        return
    for first in range(lo, hi + 1):
        for rest in weakly_decreasing_tuples(lo, first, length - 1):
            yield (first,) + rest


def enumerate_sigma_u(p: int, m: int, n: int, bound: int) -> list[UnitarySigma]:
    """All admissible (a; b) with entries bounded by `bound` in absolute value.

    Ordered lexicographically by (k, l, a, b); includes the empty parameter.
    """
    if bound < 0:
        raise ValueError(f"bound must be >= 0, got {bound}")
    out = []
    for k in range(0, min(m, p) + 1):
        for l in range(0, min(n, p - k) + 1):
            for a in weakly_decreasing_tuples(1, bound, k):
                for b in weakly_decreasing_tuples(-bound, -1, l):
                    out.append(UnitarySigma(a=a, b=b, p=p, m=m, n=n))
    return out


def enumerate_sigma_o(n: int, p: int, bound: int) -> list[SignedWeight]:
    """All admissible (a; eps) with entries <= `bound`, both signs of eps.

    Ordered lexicographically by (eps, k, a) with eps ascending (-1 first).
    """
    if bound < 0:
        raise ValueError(f"bound must be >= 0, got {bound}")
    out = []
    for eps in (-1, 1):
        for k in range(0, n // 2 + 1):
            middle = (1 - eps) // 2 * (n - 2 * k)
            if k + middle > p:
                continue
            for a in weakly_decreasing_tuples(1, bound, k):
                out.append(SignedWeight(a=a, epsilon=eps, n=n, p=p))
    return out
