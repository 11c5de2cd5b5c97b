"""Dimension-level checks for the filtration identities on induced modules.

Everything here is exact integer combinatorics: graded pieces of symmetric
algebras are counted by stars-and-bars, the filtration dimensions are their
partial sums, and the two sides of each identity are computed independently
and compared with no tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .theta import SignedWeight


@dataclass(frozen=True)
class HilbertSlice:
    """dim S(C^d)[n] = C(d+n-1, n): one graded piece of a symmetric algebra."""

    generators: int
    degree: int
    value: int

    @classmethod
    def of(cls, d: int, n: int) -> "HilbertSlice":
        return cls(d, n, sym_hilbert(d, n))


def sym_hilbert(d: int, n: int) -> int:
    """Dimension of the degree-n piece of the symmetric algebra on d generators."""
    if d < 0 or n < 0:
        raise ValueError(f"need d, n >= 0, got d={d}, n={n}")
    if d == 0:
        if n > 0:
            raise ValueError("zero generators admit no positive-degree elements")
        return 1
    return comb(d + n - 1, n)


def _cumulative(d: int, top: int) -> list[int]:
    """Partial sums sum_{r <= t} sym_hilbert(d, r) for t = 0..top."""
    out = []
    acc = 0
    for r in range(top + 1):
        acc += sym_hilbert(d, r)
        out.append(acc)
    return out


@dataclass(frozen=True)
class GradedRow:
    degree: int
    values: tuple[int, ...]

    @property
    def equal(self) -> bool:
        return len(set(self.values)) == 1


@dataclass(frozen=True)
class GradedReport:
    """Per-degree dimension table for one filtration identity."""

    kind: str                  # "o" or "sp"
    params: dict[str, int]
    columns: tuple[str, ...]
    rows: tuple[GradedRow, ...]

    @property
    def all_equal(self) -> bool:
        return all(row.equal for row in self.rows)


def graded_table_o(m: int, n: int, dim_e: int, top: int) -> GradedReport:
    """Filtration dimensions of V_E and V_E^+ through degree `top`.

    Both p (symmetric off-diagonal blocks of o(m,n)) and p^+ (rectangular
    m x n blocks of gl(m+n)) have dimension m*n, which is exactly why the
    two filtrations match; the third column is the closed form.
    """
    if m < 1 or n < 1 or dim_e < 1 or top < 0:
        raise ValueError(f"bad parameters: m={m}, n={n}, dim_e={dim_e}, top={top}")
    dim_p = m * n
    dim_p_plus = m * n
    side_ve = _cumulative(dim_p, top)
    side_ve_plus = _cumulative(dim_p_plus, top)
    rows = tuple(
        GradedRow(t, (dim_e * side_ve[t], dim_e * side_ve_plus[t],
                      dim_e * sum(sym_hilbert(m * n, r) for r in range(t + 1))))
        for t in range(top + 1))
    return GradedReport("o", {"m": m, "n": n, "dimE": dim_e, "N": top},
                        ("dim_VE", "dim_VE_plus", "closed_form"), rows)


def graded_table_sp(p: int, dim_e: int, dim_f: int, top: int) -> GradedReport:
    """Filtration dimensions of V and V_E (x) V_F through degree `top`.

    d = p(p+1)/2 counts symmetric p x p matrices (each of p^+, p^-); the
    double sum over r + s <= t must match the single sum on 2d generators,
    which is the Cauchy product identity at the dimension level.
    """
    if p < 1 or dim_e < 1 or dim_f < 1 or top < 0:
        raise ValueError(f"bad parameters: p={p}, dimE={dim_e}, dimF={dim_f}, top={top}")
    d = p * (p + 1) // 2
    rows = []
    for t in range(top + 1):
        double = sum(sym_hilbert(d, r) * sym_hilbert(d, s)
                     for r in range(t + 1) for s in range(t + 1 - r))
        single = sum(sym_hilbert(2 * d, i) for i in range(t + 1))
        rows.append(GradedRow(t, (dim_e * dim_f * double,
                                  dim_e * dim_f * double,
                                  dim_e * dim_f * single)))
    return GradedReport("sp", {"p": p, "dimE": dim_e, "dimF": dim_f, "N": top},
                        ("dim_V", "dim_VE_VF", "cauchy_form"), rows)


def check_graded_dims_o(m: int, n: int, dim_e: int, top: int) -> bool:
    """True iff dim(V_E)_t = dim(V_E^+)_t = dimE * sum_{r<=t} C(mn+r-1, r) for t <= top."""
    return graded_table_o(m, n, dim_e, top).all_equal


def check_graded_dims_sp(p: int, dim_e: int, dim_f: int, top: int) -> bool:
    """True iff the V / V_E (x) V_F filtration dimensions agree through degree top."""
    return graded_table_sp(p, dim_e, dim_f, top).all_equal


def weyl_dim(kind: str, weight: Union[Sequence, SignedWeight]) -> int:
    """Dimension of the finite-dimensional irreducible with the given parameter.

    kind="u": weight is a weakly decreasing rational vector for U(q); the
    product formula prod_{i<j} (w_i - w_j + j - i)/(j - i) requires all
    pairwise differences to be integers (constant half-integer shifts drop
    out).  kind="o": weight is a SignedWeight, dimensioned through the
    classical so(n) product formulas, doubled when n = 2k (the two halves
    rejoin in the full orthogonal group); the sign twist never changes the
    dimension.
    """
    if kind == "u":
        return _weyl_dim_u(weight)
    if kind == "o":
        if not isinstance(weight, SignedWeight):
            raise TypeError("kind='o' expects a SignedWeight parameter")
        return _weyl_dim_o(weight)
    raise ValueError(f"unknown kind {kind!r}; expected 'u' or 'o'")


def _weyl_dim_u(weight: Sequence) -> int:
    lam = tuple(Fraction(x) for x in weight)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"weight must be weakly decreasing: {weight}")
    num = 1
    den = 1
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            diff = lam[i] - lam[j]
            if diff.denominator != 1:
                raise ValueError(f"pairwise differences must be integers: {weight}")
            num *= int(diff) + (j - i)
            den *= j - i
    dim, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"Weyl product not integral for {weight}")
    return dim


def _weyl_dim_o(sigma: SignedWeight) -> int:
    sigma.validate()
    r = sigma.n // 2
    lam = list(sigma.a) + [0] * (r - sigma.k)
    if sigma.n % 2 == 1:
        l = [Fraction(2 * (lam[i] + r - i) - 1, 2) for i in range(r)]   # lam[i] + (r-1-i) + 1/2
        m = [Fraction(2 * (r - i) - 1, 2) for i in range(r)]
        dim = Fraction(1)
        for i in range(r):
            dim *= l[i] / m[i]
            for j in range(i + 1, r):
                dim *= (l[i] ** 2 - l[j] ** 2) / (m[i] ** 2 - m[j] ** 2)
    else:
        l = [lam[i] + r - 1 - i for i in range(r)]
        m = [r - 1 - i for i in range(r)]
        dim = Fraction(1)
        for i in range(r):
            for j in range(i + 1, r):
                dim *= Fraction(l[i] ** 2 - l[j] ** 2, m[i] ** 2 - m[j] ** 2)
        if sigma.k == r:
            dim *= 2
    if dim.denominator != 1:
        raise ArithmeticError(f"orthogonal dimension product not integral for {sigma}")
    return int(dim)
