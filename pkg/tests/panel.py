"""Parameter panels shared by the acceptance tests."""

from functools import lru_cache
from math import gcd

from sympy import divisors

from qmds.parameters import is_prime_power, validate

PANEL_Q = (5, 7, 9, 11, 13, 17, 19, 23, 27, 29)


@lru_cache(maxsize=None)
def panel_by_q(max_lt: int = 900) -> tuple:
    """Admissible (q, lam, tau, rho) with lam*tau <= max_lt, sigma = 2."""
    out = []
    for q in PANEL_Q:
        for lam in divisors(q - 1)[1:]:
            for tau in divisors(q + 1)[1:]:
                if gcd(lam, tau) != 1 or lam * tau > max_lt:
                    continue
                for rho in divisors(q + 1)[1:]:
                    if rho // (gcd(lam, rho) * gcd(tau, rho)) >= 2:
                        out.append((q, lam, tau, rho))
    return tuple(out)


@lru_cache(maxsize=None)
def panel_triples() -> tuple:
    """Distinct (lam, tau, rho) across the panel."""
    return tuple(sorted({t[1:] for t in panel_by_q()}))


def prime_powers(lo: int, hi: int) -> list[int]:
    return [q for q in range(lo, hi + 1) if is_prime_power(q)]


def params_for(q, lam, tau, rho, sigma=2):
    return validate(q, lam, tau, rho, sigma)
