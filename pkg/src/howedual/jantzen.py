"""Irreducibility decision for generalized Verma modules N(lambda).

The criterion: if every non-compact positive root alpha with
(lambda+rho)_alpha a strictly positive integer admits a gamma in the full
set of non-compact roots (both signs) with (lambda+rho)_gamma = 0 and
s_alpha(gamma) compact, then N(lambda) is irreducible.  In type A the
condition is also necessary, so a failed rescue there certifies
reducibility; in type C a failed rescue leaves the status unknown.

Integrality is decided exactly on rationals: a pairing of 3/2 is *not* a
positive integer and must never be rounded into one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .rootsys import GL, RootSystem, Weight, pairing, reflect, weight_sum

IRREDUCIBLE = "Irreducible"
REDUCIBLE = "Reducible"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class RescueWitness:
    """One positive-integer pairing and the rescue root found for it (if any)."""

    alpha: tuple[int, ...]
    value: int
    rescue: Union[tuple[int, ...], None]


@dataclass(frozen=True)
class Verdict:
    """Decision plus the full trace of positive-integer pairings encountered.

    status is Reducible only for type-A systems, where the criterion is
    necessary and sufficient; an unrescued pairing in type C yields Unknown.
    """

    status: str
    witnesses: tuple[RescueWitness, ...]

    @property
    def is_irreducible(self) -> bool:
        return self.status == IRREDUCIBLE


def check_irreducible(rs: RootSystem, lam: Sequence) -> Verdict:
    """Decide irreducibility of N(lambda) on the given root system.

    No dominance precondition is imposed; callers sweeping correspondence
    images should gate on dominance_check separately.
    """
    lam_rho = weight_sum(lam, rs.rho)
    witnesses = []
    rescued_all = True
    for alpha in rs.noncompact_positive:
        value = pairing(lam_rho, alpha)
        if value.denominator != 1 or value <= 0:
            continue
        rescue = None
        for gamma in rs.noncompact:
            if pairing(lam_rho, gamma) != 0:
                continue
            if rs.is_compact_coords(reflect(alpha, gamma)):
                rescue = gamma.coords
                break
        witnesses.append(RescueWitness(alpha.coords, int(value), rescue))
        if rescue is None:
            rescued_all = False
    if rescued_all:
        status = IRREDUCIBLE
    else:
        status = REDUCIBLE if rs.kind == GL else UNKNOWN
    return Verdict(status, tuple(witnesses))


def dominance_check(rs: RootSystem, lam: Sequence) -> bool:
    """True iff (lambda)_alpha >= 0 for every positive compact root alpha."""
    lam = tuple(Fraction(x) for x in lam)
    return all(pairing(lam, alpha) >= 0 for alpha in rs.compact_positive)
