"""Finite field tower GF(p) < GF(q) < GF(q^2) with table-driven arithmetic.

Elements of GF(q^2) are plain ints in ``range(q*q)``.  The base-p digits of an
element, least significant first, are its 2m coefficients over GF(p): the
first m digits give the constant coordinate (an element of GF(q), itself a
polynomial in x modulo ``base_modulus``) and the last m digits give the
coordinate of y, a root of the quadratic ``ext_modulus``.  So ``a = a0 + q*a1``
with ``a0, a1`` in GF(q), and GF(q) is exactly ``range(q)``.

Scalar methods take and return Python ints.  The ``v*`` methods are the
numpy-vectorised counterparts used for whole codewords and matrices.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from sympy import factorint, isprime

__all__ = [
    "FieldContext",
    "FieldError",
    "field_for_q",
    "field_from_moduli",
    "make_field",
]


class FieldError(ValueError):
    """Invalid field parameters or an undefined field operation."""


# --------------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient lists, ascending degree
# --------------------------------------------------------------------------

def _poly_rem(num: list[int], den: Sequence[int], p: int) -> list[int]:
    num = list(num)
    inv_lead = pow(den[-1], -1, p)
    dd = len(den) - 1
    for shift in range(len(num) - 1 - dd, -1, -1):
        coef = num[shift + dd] * inv_lead % p
        if coef:
            for t, c in enumerate(den):
                num[shift + t] = (num[shift + t] - coef * c) % p
    return num[:dd]


def _monic_polys(degree: int, p: int) -> Iterable[list[int]]:
    """Monic polynomials of ``degree`` in lexicographic order of (c0, c1, ...)."""
    for idx in range(p**degree):
        low = []
        for _ in range(degree):
            low.append(idx % p)
            idx //= p
        yield low[::-1] + [1]


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    deg = len(poly) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(d, p):
            if not any(_poly_rem(list(poly), f, p)):
                return False
    return True


def _digits(a: int, base: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        out.append(a % base)
        a //= base
    return tuple(out)


class FieldContext:
    """The tower GF(p) < GF(q) < GF(q^2), q = p**m.

    Build one with :func:`make_field` (canonical moduli) or
    :func:`field_from_moduli` (explicit moduli, as read from a file).
    Instances are immutable and compare equal when their defining data match.

    Attributes
    ----------
    p, m, q : int
        Characteristic, degree of GF(q) over GF(p), and q = p**m.
    order : int
        q**2, the size of the top field.
    base_modulus : tuple of int
        Monic degree-m irreducible over GF(p), ascending coefficients.
    ext_modulus : tuple of int
        Monic quadratic ``c + b*y + y**2`` over GF(q) as ``(c, b, 1)``.
    g : int
        Primitive element of GF(q^2): the first one in canonical order.
    """

    def __init__(self, p: int, base_modulus: Sequence[int], ext_modulus: Sequence[int]):
        if not isprime(p):
            raise FieldError(f"characteristic {p} is not prime")
        base_modulus = tuple(int(c) for c in base_modulus)
        ext_modulus = tuple(int(c) for c in ext_modulus)
        m = len(base_modulus) - 1
        if m < 1 or base_modulus[-1] != 1 or any(not 0 <= c < p for c in base_modulus):
            raise FieldError(f"base modulus {base_modulus} is not a reduced monic polynomial over GF({p})")
        if not _is_irreducible(base_modulus, p):
            raise FieldError(f"base modulus {base_modulus} is reducible over GF({p})")
        q = p**m
        if q < 3:
            raise FieldError(f"q = {q} is too small; need q >= 3")
        if len(ext_modulus) != 3 or ext_modulus[2] != 1 or any(not 0 <= c < q for c in ext_modulus):
            raise FieldError(f"extension modulus {ext_modulus} is not a reduced monic quadratic over GF({q})")

        self.p = p
        self.m = m
        self.q = q
        self.order = q * q
        self.base_modulus = base_modulus
        self.ext_modulus = ext_modulus

        self._build_subfield_tables()
        c0, b0, _ = ext_modulus
        if any(self._qadd(self._qadd(self._qmul(y, y), self._qmul(b0, y)), c0) == 0 for y in range(q)):
            raise FieldError(f"extension modulus {ext_modulus} has a root in GF({q})")
        self._build_top_tables()

    # -- construction ------------------------------------------------------

    def _build_subfield_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        digits = [_digits(a, p, m) for a in range(q)]
        weights = [p**t for t in range(m)]

        def encode(coeffs: Sequence[int]) -> int:
            return sum(c * w for c, w in zip(coeffs, weights))

        add = [[encode([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q)] for a in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                prod = [0] * (2 * m - 1)
                for s, x in enumerate(digits[a]):
                    if x:
                        for t, y in enumerate(digits[b]):
                            prod[s + t] = (prod[s + t] + x * y) % p
                r = encode(_poly_rem(prod, self.base_modulus, p)) if m > 1 else prod[0]
                mul[a][b] = mul[b][a] = r
        self._qadd_t = add
        self._qmul_t = mul
        self._qneg_t = [add[a].index(0) for a in range(q)]

    def _qadd(self, a: int, b: int) -> int:
        return self._qadd_t[a][b]

    def _qmul(self, a: int, b: int) -> int:
        return self._qmul_t[a][b]

    def _raw_mul(self, a: int, b: int) -> int:
        # (a0 + a1 y)(b0 + b1 y) with y^2 = -b y - c
        q = self.q
        qa, qm, qn = self._qadd_t, self._qmul_t, self._qneg_t
        a0, a1 = a % q, a // q
        b0, b1 = b % q, b // q
        c, bb, _ = self.ext_modulus
        hi = qm[a1][b1]
        r0 = qa[qm[a0][b0]][qn[qm[c][hi]]]
        r1 = qa[qa[qm[a0][b1]][qm[a1][b0]]][qn[qm[bb][hi]]]
        return r0 + q * r1

    def _build_top_tables(self) -> None:
        q, order = self.q, self.order
        n = order - 1
        self.canonical = sorted(range(order), key=self.sort_key)
        primes = list(factorint(n))

        def raw_pow(a: int, e: int) -> int:
            r = 1
            while e:
                if e & 1:
                    r = self._raw_mul(r, a)
                a = self._raw_mul(a, a)
                e >>= 1
            return r

        for cand in self.canonical:
            if cand and all(raw_pow(cand, n // r) != 1 for r in primes):
                self.g = cand
                break
        exp = [1] * n
        for t in range(1, n):
            exp[t] = self._raw_mul(exp[t - 1], self.g)
        log = [-1] * order
        for t, v in enumerate(exp):
            log[v] = t
        self._exp = exp
        self._log = log

        self.exp_table = np.array(exp, dtype=np.int64)
        self.log_table = np.array(log, dtype=np.int64)
        self.qadd_table = np.array(self._qadd_t, dtype=np.int64)
        self.qneg_table = np.array(self._qneg_t, dtype=np.int64)
        self.digit_table = np.array([_digits(a, self.p, 2 * self.m) for a in range(order)], dtype=np.int64)
        self.digit_weights = np.array([self.p**t for t in range(2 * self.m)], dtype=np.int64)
        self._norm_roots: dict[int, list[int]] | None = None

    # -- identity ----------------------------------------------------------

    def _key(self) -> tuple:
        return (self.p, self.base_modulus, self.ext_modulus, self.g)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldContext) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return (f"FieldContext(p={self.p}, m={self.m}, base_modulus={self.base_modulus}, "
                f"ext_modulus={self.ext_modulus}, g={self.g})")

    # -- encoding ----------------------------------------------------------

    def digits(self, a: int) -> tuple[int, ...]:
        """The 2m coefficients of ``a`` over GF(p), degree 0 first."""
        return _digits(a, self.p, 2 * self.m)

    def from_digits(self, digits: Sequence[int]) -> int:
        if len(digits) != 2 * self.m or any(not 0 <= d < self.p for d in digits):
            raise FieldError(f"expected {2 * self.m} digits in [0, {self.p}), got {tuple(digits)}")
        return sum(d * self.p**t for t, d in enumerate(digits))

    def coeffs(self, a: int) -> tuple[int, int]:
        """Tower coordinates ``(a0, a1)`` in GF(q) with ``a = a0 + a1*y``."""
        return a % self.q, a // self.q

    def from_coeffs(self, a0: int, a1: int = 0) -> int:
        return a0 + self.q * a1

    def sort_key(self, a: int) -> tuple[int, ...]:
        """Canonical order: lexicographic on the digit vector, degree 0 first."""
        return self.digits(a)

    def elements(self) -> list[int]:
        """All elements of GF(q^2) in canonical order."""
        return list(self.canonical)

    def in_subfield(self, a: int) -> bool:
        return 0 <= a < self.q

    # -- scalar arithmetic -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        q, qa = self.q, self._qadd_t
        return qa[a % q][b % q] + q * qa[a // q][b // q]

    def neg(self, a: int) -> int:
        q, qn = self.q, self._qneg_t
        return qn[a % q] + q * qn[a // q]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp[-self._log[a] % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero raised to a negative power")
            return 1 if e == 0 else 0
        return self._exp[self._log[a] * e % (self.order - 1)]

    def log(self, a: int) -> int:
        """Discrete log base ``g``."""
        if a == 0:
            raise FieldError("log of zero")
        return self._log[a]

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.order - 1
        t = n
        for r in factorint(n):
            while t % r == 0 and self.pow(a, t // r) == 1:
                t //= r
        return t

    def root_of_unity(self, t: int) -> int:
        """``g**((q^2-1)/t)``, a primitive t-th root of unity."""
        if t < 1 or (self.order - 1) % t:
            raise FieldError(f"{t} does not divide q^2 - 1 = {self.order - 1}")
        return self._exp[(self.order - 1) // t] if t > 1 else 1

    def frobenius(self, a: int) -> int:
        """``a**q``.  With y**q = -b - y this is an affine map on the coordinates."""
        q, qa, qm, qn = self.q, self._qadd_t, self._qmul_t, self._qneg_t
        a0, a1 = a % q, a // q
        b = self.ext_modulus[1]
        return qa[a0][qn[qm[b][a1]]] + q * qn[a1]

    def norm(self, a: int) -> int:
        """``a**(q+1)``, an element of GF(q)."""
        return self.mul(a, self.frobenius(a))

    def norm_roots(self, c: int) -> list[int]:
        """All x with ``x**(q+1) == c``, in canonical order."""
        if self._norm_roots is None:
            table: dict[int, list[int]] = {}
            for x in self.canonical:
                table.setdefault(self.norm(x), []).append(x)
            self._norm_roots = table
        return list(self._norm_roots.get(c, []))

    def solve_norm(self, c: int) -> int:
        """The first root of ``x**(q+1) = c`` in canonical order, for c in GF(q)*."""
        if c == 0 or not self.in_subfield(c):
            raise FieldError(f"{c} is not a nonzero element of GF({self.q})")
        return self.norm_roots(c)[0]

    # -- vectorised arithmetic ---------------------------------------------

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        q, t = self.q, self.qadd_table
        return t[a % q, b % q] + q * t[a // q, b // q]

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        return self.qneg_table[a % self.q] + self.q * self.qneg_table[a // self.q]

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vpow(self, a, e) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        e = np.asarray(e, dtype=np.int64)
        out = self.exp_table[(self.log_table[a] * e) % (self.order - 1)]
        return np.where(a == 0, np.where(e == 0, 1, 0), out)

    def vfrobenius(self, a) -> np.ndarray:
        return self.vpow(a, self.q)

    def vsum(self, a, axis=-1) -> np.ndarray:
        """Field sum along ``axis``: digit-wise sums mod p."""
        d = self.digit_table[np.asarray(a, dtype=np.int64)]
        axis = axis if axis >= 0 else axis - 1
        return (d.sum(axis=axis) % self.p) @ self.digit_weights


@lru_cache(maxsize=None)
def make_field(p: int, m: int) -> FieldContext:
    """The canonical tower for q = p**m.

    Both moduli and the primitive element are the first valid candidates in
    canonical (lexicographic, degree-0-first) order, so the same ``(p, m)``
    always gives the same context.
    """
    if not isinstance(p, int) or not isprime(p):
        raise FieldError(f"p = {p} is not prime")
    if m < 1:
        raise FieldError(f"m = {m} must be positive")
    if p**m < 3:
        raise FieldError(f"q = {p**m} is too small; need q >= 3")
    base = next(f for f in _monic_polys(m, p) if _is_irreducible(f, p))
    sub = FieldContext.__new__(FieldContext)
    sub.p, sub.m, sub.q, sub.base_modulus = p, m, p**m, tuple(base)
    sub._build_subfield_tables()
    q = p**m
    # quadratic candidates (c, b) in lexicographic order of their digit vectors
    qkey = sorted(range(q), key=lambda a: _digits(a, p, m))
    for c in qkey:
        for b in qkey:
            if all(sub._qadd(sub._qadd(sub._qmul(y, y), sub._qmul(b, y)), c) != 0 for y in range(q)):
                return FieldContext(p, base, (c, b, 1))
    raise AssertionError("no irreducible quadratic found")  # pragma: no cover


def field_from_moduli(p: int, base_modulus: Sequence[int], ext_modulus: Sequence[int]) -> FieldContext:
    """Context for explicitly given moduli (validated for irreducibility)."""
    return FieldContext(p, base_modulus, ext_modulus)


def field_for_q(q: int) -> FieldContext:
    """Canonical tower for a prime power ``q``."""
    f = factorint(q)
    if len(f) != 1:
        raise FieldError(f"q = {q} is not a prime power")
    (p, m), = f.items()
    return make_field(int(p), int(m))
