"""Twisted generalized Reed-Solomon codes over GF(q^2).

Coordinates are labelled by triples ``(i, j, k)`` with ``0 <= i < lam``,
``0 <= j < tau``, ``0 <= k < sigma`` in lexicographic order, so the column
index is ``(i*tau + j)*sigma + k``.  The evaluation point at ``(i, j, k)`` is
``z_lam**i * z_tau**j * z_rho**k`` and the twist entry ``v`` satisfies
``v**(q+1) == z_lam**(-i*L) * s_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .field import FieldContext
from .parameters import ConstructionParams

__all__ = [
    "Construction",
    "EvaluationSet",
    "GeneratorMatrix",
    "SVector",
    "TwistVector",
    "build",
    "build_evaluation_set",
    "build_s_vector",
    "build_twist_vector",
    "euclidean_product",
    "factorized_hermitian_product",
    "generator_matrix",
    "hermitian_product",
    "monomial_row",
]


@dataclass(frozen=True)
class EvaluationSet:
    points: np.ndarray
    shape: tuple[int, int, int]

    def __len__(self) -> int:
        return len(self.points)

    def index(self, i: int, j: int, k: int) -> int:
        _, tau, sigma = self.shape
        return (i * tau + j) * sigma + k

    def entry(self, i: int, j: int, k: int) -> int:
        return int(self.points[self.index(i, j, k)])


@dataclass(frozen=True)
class SVector:
    values: tuple[int, ...]


@dataclass(frozen=True)
class TwistVector:
    values: np.ndarray
    profile: np.ndarray  # values**(q+1), in GF(q)*
    shape: tuple[int, int, int]

    def profile_at(self, i: int, j: int, k: int) -> int:
        _, tau, sigma = self.shape
        return int(self.profile[(i * tau + j) * sigma + k])


@dataclass(frozen=True)
class GeneratorMatrix:
    rows: np.ndarray  # (k, n) element ints
    params: ConstructionParams
    k: int


def _triples(lam: int, tau: int, sigma: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    i, j, k = np.meshgrid(np.arange(lam), np.arange(tau), np.arange(sigma), indexing="ij")
    return i.ravel(), j.ravel(), k.ravel()


def build_evaluation_set(ctx: FieldContext, params: ConstructionParams) -> EvaluationSet:
    z_lam = ctx.root_of_unity(params.lam)
    z_tau = ctx.root_of_unity(params.tau)
    z_rho = ctx.root_of_unity(params.rho)
    i, j, k = _triples(params.lam, params.tau, params.sigma)
    pts = ctx.vmul(ctx.vmul(ctx.vpow(z_lam, i), ctx.vpow(z_tau, j)), ctx.vpow(z_rho, k))
    return EvaluationSet(pts, (params.lam, params.tau, params.sigma))


def build_s_vector(ctx: FieldContext, sigma: int) -> SVector:
    """Nonzero s_0..s_{sigma-1} in GF(q) summing to zero.

    sigma == 2 gives (1, -1).  Otherwise s_0..s_{sigma-3} are 1, s_{sigma-2}
    is 1 unless that would make the last entry zero, in which case it is 2.
    """
    if sigma < 2:
        raise ValueError(f"sigma = {sigma} must be at least 2")
    one = 1
    if sigma == 2:
        return SVector((one, ctx.neg(one)))
    head = [one] * (sigma - 2)
    partial = 0
    for s in head:
        partial = ctx.add(partial, s)
    # s_{sigma-2} must avoid 0 and -partial
    pick = one if ctx.add(partial, one) != 0 else 2
    total = ctx.add(partial, pick)
    return SVector(tuple(head + [pick, ctx.neg(total)]))


def build_twist_vector(ctx: FieldContext, params: ConstructionParams, s: SVector | None = None,
                       pick: Callable[[list[int], tuple[int, int, int]], int] | None = None) -> TwistVector:
    """Twist vector whose norms follow ``z_lam**(-i*L) * s_k``.

    ``pick(roots, (i, j, k))`` chooses among the q+1 norm roots; the default
    takes the first root in canonical order, which makes v constant in j.
    """
    if s is None:
        s = build_s_vector(ctx, params.sigma)
    z_lam = ctx.root_of_unity(params.lam)
    lam, tau, sigma = params.lam, params.tau, params.sigma
    vals = np.empty(params.n, dtype=np.int64)
    prof = np.empty(params.n, dtype=np.int64)
    col = 0
    for i in range(lam):
        scale = ctx.pow(z_lam, -i * params.L)
        for j in range(tau):
            for k in range(sigma):
                w = ctx.mul(scale, s.values[k])
                prof[col] = w
                if pick is None:
                    vals[col] = ctx.solve_norm(w)
                else:
                    vals[col] = pick(ctx.norm_roots(w), (i, j, k))
                col += 1
    return TwistVector(vals, prof, (lam, tau, sigma))


@dataclass(frozen=True)
class Construction:
    """Everything needed to write down rows of the twisted GRS code."""

    ctx: FieldContext
    params: ConstructionParams
    points: EvaluationSet
    s: SVector
    twist: TwistVector

    def row(self, e: int) -> np.ndarray:
        return monomial_row(self, e)

    def generator_matrix(self, k: int) -> GeneratorMatrix:
        if not 1 <= k <= self.params.n:
            raise ValueError(f"dimension k = {k} outside [1, n = {self.params.n}]")
        rows = np.stack([self.row(e) for e in range(k)])
        return GeneratorMatrix(rows, self.params, k)


def build(ctx: FieldContext, params: ConstructionParams, pick=None) -> Construction:
    if ctx.q != params.q:
        raise ValueError(f"field has q = {ctx.q} but parameters have q = {params.q}")
    s = build_s_vector(ctx, params.sigma)
    return Construction(ctx, params, build_evaluation_set(ctx, params), s,
                        build_twist_vector(ctx, params, s, pick))


def monomial_row(con: Construction, e: int) -> np.ndarray:
    """Evaluation of X**e twisted by v: ``v * A**e`` coordinatewise."""
    ctx = con.ctx
    return ctx.vmul(con.twist.values, ctx.vpow(con.points.points, e))


def generator_matrix(ctx: FieldContext, params: ConstructionParams, k: int) -> GeneratorMatrix:
    return build(ctx, params).generator_matrix(k)


def _check_lengths(a, b) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    return a, b


def hermitian_product(ctx: FieldContext, a, b) -> int:
    """sum_i a_i * b_i**q."""
    a, b = _check_lengths(a, b)
    return int(ctx.vsum(ctx.vmul(a, ctx.vfrobenius(b))))


def euclidean_product(ctx: FieldContext, a, b) -> int:
    a, b = _check_lengths(a, b)
    return int(ctx.vsum(ctx.vmul(a, b)))


def factorized_hermitian_product(con: Construction, e1: int, e2: int) -> int:
    """Hermitian product of rows e1, e2 as a product of three geometric sums.

    Computed straight from the roots of unity and the s-vector, without
    forming any row, so it serves as an independent check of the direct sum.
    """
    ctx, pr = con.ctx, con.params
    z_lam = ctx.root_of_unity(pr.lam)
    z_tau = ctx.root_of_unity(pr.tau)
    z_rho = ctx.root_of_unity(pr.rho)
    x = e1 + pr.q * e2
    first = 0
    for i in range(pr.lam):
        first = ctx.add(first, ctx.pow(z_lam, i * (x - pr.L)))
    second = 0
    for j in range(pr.tau):
        second = ctx.add(second, ctx.pow(z_tau, j * x))
    third = 0
    for k in range(pr.sigma):
        third = ctx.add(third, ctx.mul(con.s.values[k], ctx.pow(z_rho, k * x)))
    return ctx.mul(ctx.mul(first, second), third)
