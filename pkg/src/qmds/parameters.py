"""Admissible construction parameters, case classification, optimal L and T."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from sympy import divisors, factorint

__all__ = [
    "ConstructionParams",
    "ParameterError",
    "QuantumCodeParams",
    "classify_case",
    "enumerate_params",
    "is_prime_power",
    "max_distance_T",
    "optimal_L",
    "validate",
]


class ParameterError(ValueError):
    """A construction hypothesis is violated.

    ``hypothesis`` is a short stable name for the violated condition, e.g.
    ``"lambda_divides_q_minus_1"`` or ``"sigma_range"``.
    """

    def __init__(self, hypothesis: str, message: str):
        super().__init__(f"{hypothesis}: {message}")
        self.hypothesis = hypothesis


def is_prime_power(q: int) -> bool:
    return q >= 2 and len(factorint(q)) == 1


@dataclass(frozen=True)
class ConstructionParams:
    q: int
    lam: int
    tau: int
    rho: int
    sigma: int
    kappa1: int
    kappa2: int
    case: int
    L: int
    T: int

    @property
    def kappa(self) -> int:
        return self.kappa1 * self.kappa2

    @property
    def n(self) -> int:
        return self.lam * self.tau * self.sigma

    @property
    def max_sigma(self) -> int:
        return self.rho // self.kappa

    def as_record(self) -> dict:
        return {
            "q": self.q, "lambda": self.lam, "tau": self.tau, "rho": self.rho,
            "sigma": self.sigma, "kappa": self.kappa, "case": self.case,
            "L": self.L, "T": self.T, "n": self.n,
        }


@dataclass(frozen=True)
class QuantumCodeParams:
    """``[[n, k, d]]_q`` of a stabilizer code."""

    q: int
    n: int
    k: int
    d: int

    def __post_init__(self):
        if self.k + 2 * self.d > self.n + 2:
            raise ValueError(f"[[{self.n},{self.k},{self.d}]]_{self.q} violates the quantum Singleton bound")

    @property
    def is_mds(self) -> bool:
        return self.k + 2 * self.d == self.n + 2

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]]_{self.q}"

    def as_record(self) -> dict:
        return {"q": self.q, "n": self.n, "k": self.k, "d": self.d}


def classify_case(lam: int, tau: int, rho: int) -> int:
    """Row of the failure-point table that applies to ``(lam, tau, rho)``.

    1: lam even.  2: lam odd and (lam < tau or tau even or rho == 2).
    3: lam odd, lam > tau, tau odd, rho != 2.
    """
    if lam == tau:
        raise ParameterError("gcd_lambda_tau", f"lambda = tau = {lam} cannot be coprime")
    if lam % 2 == 0:
        return 1
    if lam < tau or tau % 2 == 0 or rho == 2:
        return 2
    return 3


def optimal_L(case: int, lam: int, tau: int) -> int:
    """Optimal residue L in ``[0, lam)``: 2*tau-2 for cases 1 and 3, tau-2 for case 2."""
    if case == 2:
        return (tau - 2) % lam
    if case in (1, 3):
        return (2 * tau - 2) % lam
    raise ValueError(f"unknown case {case}")


def max_distance_T(case: int, lam: int, tau: int) -> int:
    if case == 1:
        num = lam + 4 * tau
    elif case == 2:
        return lam + tau
    elif case == 3:
        num = lam + 3 * tau
    else:
        raise ValueError(f"unknown case {case}")
    if num % 2:
        raise AssertionError(f"non-integral T for case {case}, lambda={lam}, tau={tau}")
    return num // 2


def validate(q: int, lam: int, tau: int, rho: int, sigma: int) -> ConstructionParams:
    """Check every hypothesis of the construction and derive the rest.

    Raises :class:`ParameterError` naming the first violated hypothesis.
    """
    if q < 3 or not is_prime_power(q):
        raise ParameterError("q_prime_power", f"q = {q} must be a prime power >= 3")
    if lam <= 1:
        raise ParameterError("lambda_gt_1", f"lambda = {lam} must exceed 1")
    if (q - 1) % lam:
        raise ParameterError("lambda_divides_q_minus_1", f"lambda = {lam} does not divide q-1 = {q - 1}")
    if tau <= 1:
        raise ParameterError("tau_gt_1", f"tau = {tau} must exceed 1")
    if (q + 1) % tau:
        raise ParameterError("tau_divides_q_plus_1", f"tau = {tau} does not divide q+1 = {q + 1}")
    if rho <= 1:
        raise ParameterError("rho_gt_1", f"rho = {rho} must exceed 1")
    if (q + 1) % rho:
        raise ParameterError("rho_divides_q_plus_1", f"rho = {rho} does not divide q+1 = {q + 1}")
    if gcd(lam, tau) != 1:
        raise ParameterError("gcd_lambda_tau", f"gcd(lambda, tau) = {gcd(lam, tau)} != 1")
    k1, k2 = gcd(lam, rho), gcd(tau, rho)
    if rho // (k1 * k2) < 2:
        raise ParameterError("rho_over_kappa", f"rho/kappa = {rho}/{k1 * k2} < 2")
    if not 2 <= sigma <= rho // (k1 * k2):
        raise ParameterError("sigma_range", f"sigma = {sigma} outside [2, rho/kappa = {rho // (k1 * k2)}]")
    case = classify_case(lam, tau, rho)
    T = max_distance_T(case, lam, tau)
    n = lam * tau * sigma
    if 2 * (T - 1) > n:
        raise ParameterError("dimension_feasibility", f"2(T-1) = {2 * (T - 1)} exceeds n = {n}")
    return ConstructionParams(q, lam, tau, rho, sigma, k1, k2, case, optimal_L(case, lam, tau), T)


def enumerate_params(q: int, max_n: int | None = None) -> list[ConstructionParams]:
    """Every admissible ``(lam, tau, rho, sigma)`` for ``q``, lexicographically."""
    if q < 3 or not is_prime_power(q):
        raise ParameterError("q_prime_power", f"q = {q} must be a prime power >= 3")
    out = []
    lower = divisors(q - 1)[1:]
    upper = divisors(q + 1)[1:]
    for lam in lower:
        for tau in upper:
            if gcd(lam, tau) != 1:
                continue
            for rho in upper:
                top = rho // (gcd(lam, rho) * gcd(tau, rho))
                for sigma in range(2, top + 1):
                    if max_n is not None and lam * tau * sigma > max_n:
                        break
                    out.append(validate(q, lam, tau, rho, sigma))
    return out
