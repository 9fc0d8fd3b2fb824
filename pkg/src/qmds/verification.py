"""Certificates for constructed codes.

Everything here is an exact identity over GF(q^2).  The Hermitian dual
distance is certified through MDS-ness of C itself: entrywise Frobenius is a
field automorphism, so it preserves the rank of every column subset, hence
C^{perp_h} = (C^{perp_e})^q is isometric to the Euclidean dual, which is MDS
exactly when C is.  MDS-ness of C is checked on k x k minors, either all of
them or a seeded random sample backed by the structural GRS check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import _kernels
from .construction import build
from .field import FieldContext
from .parameters import ConstructionParams, ParameterError, QuantumCodeParams

__all__ = [
    "Certificate",
    "CertificationError",
    "MDSCheck",
    "certify_matrix",
    "check_mds_via_minors",
    "check_self_orthogonal",
    "derive_quantum_params",
    "full_certificate",
    "hermitian_gram",
    "matrix_rank",
    "min_distance_exhaustive",
    "structural_grs_certificate",
]

DEFAULT_MINOR_CAP = 10**7
DEFAULT_SAMPLES = 10**5
DEFAULT_EXHAUSTIVE_CAP = 10**7

INHERITED_DISTANCE_NOTE = (
    "quantum distance is the Hermitian dual distance k+1; the stabilizer bridge "
    "guarantees at least this value and purity is not examined"
)


class CertificationError(RuntimeError):
    """A proof obligation failed; ``obligation`` names it."""

    def __init__(self, obligation: str, certificate: "Certificate | None" = None):
        super().__init__(f"obligation failed: {obligation}")
        self.obligation = obligation
        self.certificate = certificate


def _tables(ctx: FieldContext):
    return ctx.q, ctx.exp_table, ctx.log_table, ctx.qadd_table, ctx.qneg_table


def _split_tables(ctx: FieldContext):
    exp2 = np.concatenate([ctx.exp_table, ctx.exp_table])
    return (ctx.q, exp2 % ctx.q, exp2 // ctx.q, ctx.log_table, ctx.qadd_table,
            int(ctx.log_table[ctx.neg(1)]))


def matrix_rank(ctx: FieldContext, mat) -> int:
    return int(_kernels.rank(np.ascontiguousarray(mat, dtype=np.int64), *_tables(ctx)))


def hermitian_gram(ctx: FieldContext, G) -> np.ndarray:
    """``G @ (G**q).T`` over GF(q^2)."""
    G = np.asarray(G, dtype=np.int64)
    conj = ctx.vfrobenius(G)
    return np.stack([ctx.vsum(ctx.vmul(row[None, :], conj), axis=1) for row in G])


def check_self_orthogonal(ctx: FieldContext, G) -> bool:
    return not hermitian_gram(ctx, G).any()


@dataclass
class MDSCheck:
    mode: str  # "full" or "sampled"
    passed: bool
    minors_checked: int
    minors_total: int
    seed: int | None = None
    structural: bool | None = None
    singular_columns: list[int] | None = None

    def as_record(self) -> dict:
        return {
            "mode": self.mode, "passed": self.passed,
            "minors_checked": self.minors_checked, "minors_total": self.minors_total,
            "seed": self.seed, "structural": self.structural,
            "singular_columns": self.singular_columns,
        }


def structural_grs_certificate(ctx: FieldContext, G) -> bool:
    """True iff G is the generator matrix of a GRS code in monomial form.

    That is, row e equals ``v * a**e`` for a nonzero vector v and a vector a
    of pairwise distinct points, which makes the code MDS.
    """
    G = np.asarray(G, dtype=np.int64)
    v = G[0]
    if not v.all():
        return False
    if G.shape[0] == 1:
        return True
    inv_v = ctx.vpow(v, -1)
    a = ctx.vmul(G[1], inv_v)
    if len(np.unique(a)) != len(a):
        return False
    return all(np.array_equal(G[e], ctx.vmul(v, ctx.vpow(a, e))) for e in range(2, G.shape[0]))


def check_mds_via_minors(ctx: FieldContext, G, cap: int = DEFAULT_MINOR_CAP,
                         samples: int = DEFAULT_SAMPLES, seed: int = 0) -> MDSCheck:
    """Check k x k minors of G: all of them if C(n, k) <= cap, else a seeded sample.

    In sampled mode the verdict also requires the structural GRS certificate.
    """
    G = np.ascontiguousarray(G, dtype=np.int64)
    k, n = G.shape
    if matrix_rank(ctx, G) != k:
        raise ValueError(f"generator matrix has rank below {k}")
    total = comb(n, k)
    tabs = _split_tables(ctx)
    g_lo, g_hi = G % ctx.q, G // ctx.q
    if total <= cap:
        checked, bad = _kernels.all_minors_nonsingular(g_lo, g_hi, *tabs, total)
        return MDSCheck("full", len(bad) == 0, int(checked), total,
                        singular_columns=[int(c) for c in bad] or None)
    rng = np.random.default_rng(seed)
    checked = 0
    chunk = max(1, min(samples, 2_000_000 // max(n, 1)))
    while checked < samples:
        b = min(chunk, samples - checked)
        subsets = np.sort(np.argsort(rng.random((b, n)), axis=1)[:, :k], axis=1)
        hit = _kernels.subsets_nonsingular(g_lo, g_hi, np.ascontiguousarray(subsets), *tabs)
        if hit >= 0:
            return MDSCheck("sampled", False, checked + hit + 1, total, seed,
                            singular_columns=[int(c) for c in subsets[hit]])
        checked += b
    structural = structural_grs_certificate(ctx, G)
    return MDSCheck("sampled", structural, checked, total, seed, structural)


def min_distance_exhaustive(ctx: FieldContext, G, cap: int = DEFAULT_EXHAUSTIVE_CAP) -> int:
    """Minimum weight over all q^(2k) - 1 nonzero codewords."""
    G = np.ascontiguousarray(G, dtype=np.int64)
    k = G.shape[0]
    if ctx.order**k > cap:
        raise ValueError(f"{ctx.order}^{k} codewords exceed the cap {cap}")
    return int(_kernels.min_weight(G, *_tables(ctx)))


def derive_quantum_params(params: ConstructionParams, d: int) -> QuantumCodeParams:
    """``[[n, n-2d+2, d]]_q`` for ``2 <= d <= T``."""
    if not 2 <= d <= params.T:
        raise ParameterError("distance_range", f"d = {d} outside [2, T = {params.T}]")
    qp = QuantumCodeParams(params.q, params.n, params.n - 2 * d + 2, d)
    assert qp.is_mds
    return qp


@dataclass
class Certificate:
    self_orthogonal: bool
    mds: MDSCheck
    quantum: QuantumCodeParams | None
    exhaustive_distance: int | None = None
    obligations: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.obligations.values())

    def failed(self) -> list[str]:
        return [name for name, good in self.obligations.items() if not good]

    def as_record(self) -> dict:
        return {
            "certified": self.ok,
            "self_orthogonal": self.self_orthogonal,
            "mds": self.mds.as_record(),
            "exhaustive_distance": self.exhaustive_distance,
            "quantum": None if self.quantum is None else self.quantum.as_record(),
            "obligations": dict(self.obligations),
            "notes": list(self.notes),
        }


def _profile_shape_ok(ctx: FieldContext, G, params: ConstructionParams) -> bool:
    """Convention-free check of the twist norms read off row 0.

    The norms must be nonzero subfield elements, constant in j, geometric in
    i with a ratio of order dividing lambda, and sum to zero over k.
    """
    lam, tau, sigma = params.lam, params.tau, params.sigma
    w = ctx.vmul(G[0], ctx.vfrobenius(G[0])).reshape(lam, tau, sigma)
    if not w.all() or (w >= ctx.q).any():
        return False
    if not (w == w[:, :1, :]).all():
        return False
    ratio = ctx.div(int(w[1, 0, 0]), int(w[0, 0, 0])) if lam > 1 else 1
    if ctx.pow(ratio, lam) != 1:
        return False
    for i in range(lam):
        if not np.array_equal(w[i, 0], ctx.vmul(ctx.pow(ratio, i), w[0, 0])):
            return False
    return int(ctx.vsum(w[0, 0])) == 0


def certify_matrix(ctx: FieldContext, G, params: ConstructionParams | None = None, *,
                   minor_cap: int = DEFAULT_MINOR_CAP, samples: int = DEFAULT_SAMPLES,
                   exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP, seed: int = 0) -> Certificate:
    """Certify a generator matrix using only its entries (plus optional parameters).

    Never raises on a failed obligation; inspect ``Certificate.ok``.
    """
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    ob: dict[str, bool] = {}
    notes = [INHERITED_DISTANCE_NOTE]

    if params is not None:
        ob["length_matches_parameters"] = n == params.n
        ob["dimension_within_T"] = 1 <= k <= params.T - 1
        if ob["length_matches_parameters"]:
            ob["twist_profile"] = _profile_shape_ok(ctx, G, params)

    self_orth = check_self_orthogonal(ctx, G)
    ob["self_orthogonal"] = self_orth

    if matrix_rank(ctx, G) != k:
        ob["full_rank"] = False
        mds = MDSCheck("full", False, 0, comb(n, k))
    else:
        ob["full_rank"] = True
        mds = check_mds_via_minors(ctx, G, minor_cap, samples, seed)
    ob["mds"] = mds.passed
    if mds.mode == "sampled":
        notes.append(f"MDS from {mds.minors_checked} sampled minors (seed {seed}) "
                     f"and the structural GRS certificate")

    exhaustive = None
    if ob["full_rank"] and ctx.order**k <= exhaustive_cap:
        exhaustive = min_distance_exhaustive(ctx, G, exhaustive_cap)
        ob["exhaustive_distance"] = exhaustive == n - k + 1

    quantum = None
    if n - 2 * k >= 0 and k + 1 >= 2:
        quantum = QuantumCodeParams(params.q if params else ctx.q, n, n - 2 * k, k + 1)
    else:
        ob["quantum_parameters"] = False
    return Certificate(self_orth, mds, quantum, exhaustive, ob, notes)


def full_certificate(ctx: FieldContext, params: ConstructionParams, d: int, *,
                     minor_cap: int = DEFAULT_MINOR_CAP, samples: int = DEFAULT_SAMPLES,
                     exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP, seed: int = 0) -> Certificate:
    """Construct the code with k = d - 1 and certify every obligation.

    Raises :class:`CertificationError` naming the first failed obligation.
    """
    quantum = derive_quantum_params(params, d)
    con = build(ctx, params)
    pts = con.points.points
    distinct = len(np.unique(pts)) == len(pts) and bool(pts.all())

    z_lam = ctx.root_of_unity(params.lam)
    prof = con.twist.profile.reshape(params.lam, params.tau, params.sigma)
    expected = np.array([[[ctx.mul(ctx.pow(z_lam, -i * params.L), s) for s in con.s.values]
                          for _ in range(params.tau)] for i in range(params.lam)])
    norms = ctx.vmul(con.twist.values, ctx.vfrobenius(con.twist.values))
    twist_ok = np.array_equal(prof, expected) and np.array_equal(norms, con.twist.profile)

    G = con.generator_matrix(d - 1).rows
    cert = certify_matrix(ctx, G, params, minor_cap=minor_cap, samples=samples,
                          exhaustive_cap=exhaustive_cap, seed=seed)
    cert.obligations = {"distinct_evaluation_points": distinct, "twist_certified": twist_ok,
                        **cert.obligations}
    if cert.quantum != quantum:
        cert.obligations["quantum_parameters"] = False
    for name in cert.failed():
        raise CertificationError(name, cert)
    return cert
