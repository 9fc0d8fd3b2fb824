"""Failure points of the monomial orthogonality conditions.

A pair of exponents ``(e1, e2)`` is a failure point when all three sufficient
conditions for Hermitian orthogonality of the monomial rows X**e1 and X**e2
fail at once::

    e1 + e2 == L (mod lam),  e1 == e2 (mod tau),  e1 != e2 (mod rho)

The first failure point minimises e2; any code using monomials of degree at
most ``T2 - 1`` avoids every failure point.
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple

from .parameters import classify_case, optimal_L

__all__ = [
    "FirstFailurePoint",
    "best_residues",
    "default_bound",
    "first_failure_point_bruteforce",
    "first_failure_point_closed_form",
    "is_failure_point",
    "oracle_rows",
    "scan_all_L",
]


class FirstFailurePoint(NamedTuple):
    T1: int
    T2: int

    @property
    def gap(self) -> int:
        return self.T2 - self.T1


def is_failure_point(e1: int, e2: int, lam: int, tau: int, rho: int, L: int) -> bool:
    return (e1 + e2 - L) % lam == 0 and (e1 - e2) % tau == 0 and (e1 - e2) % rho != 0


def default_bound(lam: int, tau: int) -> int:
    return 2 * lam + 8 * tau


def first_failure_point_bruteforce(lam: int, tau: int, rho: int, L: int,
                                   bound: int | None = None) -> FirstFailurePoint | None:
    """Scan ``0 <= e1 < e2 <= bound`` by e2 then e1; ``None`` if nothing fails."""
    if bound is None:
        bound = default_bound(lam, tau)
    for e2 in range(1, bound + 1):
        for e1 in range(e2):
            if is_failure_point(e1, e2, lam, tau, rho, L):
                return FirstFailurePoint(e1, e2)
    return None


def first_failure_point_closed_form(case: int, lam: int, tau: int) -> FirstFailurePoint:
    """Tabulated first failure point at the optimal L for each case."""
    if case == 1:
        if lam % 2:
            raise AssertionError(f"case 1 needs lambda even, got {lam}")
        return FirstFailurePoint((lam - 2) // 2, (lam + 4 * tau - 2) // 2)
    if case == 2:
        return FirstFailurePoint(lam - 1, lam + tau - 1)
    if case == 3:
        if (lam + tau) % 2:
            raise AssertionError(f"case 3 needs lambda + tau even, got {lam} + {tau}")
        return FirstFailurePoint((lam + tau - 2) // 2, (lam + 3 * tau - 2) // 2)
    raise ValueError(f"unknown case {case}")


def scan_all_L(lam: int, tau: int, rho: int,
               bound: int | None = None) -> dict[int, FirstFailurePoint | None]:
    return {L: first_failure_point_bruteforce(lam, tau, rho, L, bound) for L in range(lam)}


def best_residues(scan: dict[int, FirstFailurePoint | None]) -> list[int]:
    """Residues attaining the largest T2; a residue with no failure point in range beats all."""
    def score(ffp):
        return float("inf") if ffp is None else ffp.T2
    top = max(score(f) for f in scan.values())
    return [L for L, f in scan.items() if score(f) == top]


def oracle_rows(lam: int, tau: int, rho: int, L: int | None = None,
                bound: int | None = None, all_L: bool = False) -> list[dict]:
    """Brute-force report rows ``{lambda, tau, rho, L, T1, T2, matches_closed_form}``.

    The closed form is compared only at the table's L, and only when
    ``(lam, tau, rho)`` satisfies the q-independent hypotheses (coprime lam and
    tau, rho/kappa >= 2); elsewhere ``matches_closed_form`` is ``None``.
    """
    closed = None
    best = None
    if gcd(lam, tau) == 1 and rho // (gcd(lam, rho) * gcd(tau, rho)) >= 2 and min(lam, tau, rho) > 1:
        case = classify_case(lam, tau, rho)
        best = optimal_L(case, lam, tau)
        closed = first_failure_point_closed_form(case, lam, tau)
    if all_L:
        residues = list(range(lam))
    elif L is not None:
        residues = [L % lam]
    elif best is not None:
        residues = [best]
    else:
        raise ValueError("L is required when the tuple is not admissible")
    rows = []
    for r in residues:
        ffp = first_failure_point_bruteforce(lam, tau, rho, r, bound)
        match = None
        if closed is not None and r == best:
            match = ffp == closed
        rows.append({
            "lambda": lam, "tau": tau, "rho": rho, "L": r,
            "T1": None if ffp is None else ffp.T1,
            "T2": None if ffp is None else ffp.T2,
            "matches_closed_form": match,
        })
    return rows
