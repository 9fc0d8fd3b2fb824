"""Named parameter families with worked examples.

Each family maps a prime power q to the list of ``(q, lam, tau, rho, sigma, d)``
tuples it produces; codes are built at the family's distance bound.
"""

from __future__ import annotations

from sympy import divisors

from .parameters import ParameterError, is_prime_power

__all__ = ["DEFAULT_Q", "FIXTURES", "fixture_tuples"]

DEFAULT_Q = {"c1": 11, "c2": 83, "c3": 29, "small-d": 7}
# the worked example's m when q is the default
_DEFAULT_M = {"c2": 7, "c3": 3}


def _wrong_class(name: str, q: int, why: str) -> ParameterError:
    return ParameterError("fixture_congruence", f"q = {q} is outside family {name}: {why}")


def _c1(q: int, m: int | None, sigma: int | None):
    if q % 8 != 3 or q <= 3:
        raise _wrong_class("c1", q, "need q = 3 mod 8 and q > 3")
    lam, tau = (q - 1) // 2, (q + 1) // 4
    return [(q, lam, tau, 4, sigma or 3, (5 * q + 1) // 8)]


def _c2(q: int, m: int | None, sigma: int | None):
    half = (q + 1) // 2
    if q % 2 == 0:
        raise _wrong_class("c2", q, "need q odd")
    valid = [d for d in divisors(half) if d < half and (half // d) % 2 == 0]
    if not valid:
        raise _wrong_class("c2", q, "no m divides (q+1)/2 with (q+1)/(2m) even")
    m = m or (_DEFAULT_M["c2"] if q == DEFAULT_Q["c2"] else valid[0])
    if m not in valid:
        raise _wrong_class("c2", q, f"m = {m} not in {valid}")
    lam, tau = (q - 1) // 2, (q + 1) // (2 * m)
    return [(q, lam, tau, q + 1, sigma or 2, lam + tau)]


def _c3(q: int, m: int | None, sigma: int | None):
    half = (q + 1) // 2
    if q % 8 != 5:
        raise _wrong_class("c3", q, "need q = 5 mod 8")
    valid = [d for d in divisors(half) if 1 < d < half]
    if not valid:
        raise _wrong_class("c3", q, "no m with 1 < m < (q+1)/2 divides (q+1)/2")
    m = m or (_DEFAULT_M["c3"] if q == DEFAULT_Q["c3"] else valid[0])
    if m not in valid:
        raise _wrong_class("c3", q, f"m = {m} not in {valid}")
    tau = (q + 1) // (2 * m)
    return [(q, q - 1, tau, q + 1, sigma or 2, (q - 1) // 2 + (q + 1) // m)]


def _small_d(q: int, m: int | None, sigma: int | None):
    out = []
    if q % 6 == 1:
        out += [(q, 3, 2, q + 1, s, 5) for s in range(2, (q + 1) // 2 + 1)]
    if q % 6 == 5 and q > 5:
        out += [(q, 2, 3, q + 1, s, 7) for s in range(2, (q + 1) // 6 + 1)]
    if q % 12 == 7:
        out += [(q, 3, 4, q + 1, s, 7) for s in range(2, (q + 1) // 4 + 1)]
    if not out:
        raise _wrong_class("small-d", q, "need q = 1 mod 6, q = 5 mod 6 with q > 5, or q = 7 mod 12")
    if sigma is not None:
        out = [t for t in out if t[4] == sigma]
    return out


FIXTURES = {"c1": _c1, "c2": _c2, "c3": _c3, "small-d": _small_d}


def fixture_tuples(name: str, q: int | None = None, m: int | None = None,
                   sigma: int | None = None) -> list[tuple[int, int, int, int, int, int]]:
    if name not in FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}")
    q = DEFAULT_Q[name] if q is None else q
    if not is_prime_power(q):
        raise ParameterError("q_prime_power", f"q = {q} is not a prime power")
    return FIXTURES[name](q, m, sigma)
