"""Plain-text generator matrix files.

Layout (single spaces, trailing newline, nothing else)::

    p m q n k L lambda tau rho sigma
    <base modulus over GF(p), m+1 digits, degree 0 first>
    <ext modulus over GF(q), 3 elements of m comma-separated digits>
    <k lines of n elements, each 2m comma-separated digits>

The moduli are explicit so a reader can rebuild the field without knowing how
the writer chose it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import FieldContext, FieldError, field_from_moduli
from .construction import GeneratorMatrix

__all__ = ["MatrixFile", "MatrixFileError", "from_generator", "parse", "read", "serialize", "write"]

HEADER_FIELDS = ("p", "m", "q", "n", "k", "L", "lambda", "tau", "rho", "sigma")


class MatrixFileError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True, eq=False)
class MatrixFile:
    p: int
    m: int
    q: int
    n: int
    k: int
    L: int
    lam: int
    tau: int
    rho: int
    sigma: int
    base_modulus: tuple[int, ...]
    ext_modulus: tuple[int, int, int]
    rows: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, MatrixFile):
            return NotImplemented
        return (self.header() == other.header() and self.base_modulus == other.base_modulus
                and self.ext_modulus == other.ext_modulus and np.array_equal(self.rows, other.rows))

    def header(self) -> tuple[int, ...]:
        return (self.p, self.m, self.q, self.n, self.k, self.L, self.lam, self.tau, self.rho, self.sigma)

    def field(self) -> FieldContext:
        return field_from_moduli(self.p, self.base_modulus, self.ext_modulus)


def from_generator(ctx: FieldContext, gm: GeneratorMatrix) -> MatrixFile:
    pr = gm.params
    return MatrixFile(ctx.p, ctx.m, ctx.q, pr.n, gm.k, pr.L, pr.lam, pr.tau, pr.rho, pr.sigma,
                      ctx.base_modulus, ctx.ext_modulus, np.asarray(gm.rows, dtype=np.int64))


def _digits(a: int, p: int, width: int) -> str:
    out = []
    for _ in range(width):
        out.append(str(a % p))
        a //= p
    return ",".join(out)


def serialize(mf: MatrixFile) -> str:
    p, m = mf.p, mf.m
    lines = [
        " ".join(str(v) for v in mf.header()),
        " ".join(str(c) for c in mf.base_modulus),
        " ".join(_digits(c, p, m) for c in mf.ext_modulus),
    ]
    # digit strings for every field element, looked up per entry
    table = [_digits(a, p, 2 * m) for a in range(mf.q * mf.q)]
    for row in mf.rows:
        lines.append(" ".join(table[a] for a in row.tolist()))
    return "\n".join(lines) + "\n"


def _parse_element(tok: str, p: int, width: int, lineno: int) -> int:
    parts = tok.split(",")
    if len(parts) != width:
        raise MatrixFileError(lineno, f"element {tok!r} has {len(parts)} digits, expected {width}")
    value = 0
    for t, part in enumerate(parts):
        if not part.isdigit():
            raise MatrixFileError(lineno, f"element {tok!r} has a non-decimal digit")
        d = int(part)
        if d >= p:
            raise MatrixFileError(lineno, f"digit {d} in {tok!r} is not reduced mod {p}")
        value += d * p**t
    return value


def parse(text: str) -> MatrixFile:
    if not text.endswith("\n"):
        raise MatrixFileError(text.count("\n") + 1, "missing trailing newline")
    lines = text[:-1].split("\n")
    for i, line in enumerate(lines, 1):
        if line != " ".join(line.split()) or not line:
            raise MatrixFileError(i, "stray whitespace or empty line")
    if len(lines) < 3:
        raise MatrixFileError(len(lines), "truncated file: header and moduli required")

    head = lines[0].split()
    if len(head) != len(HEADER_FIELDS) or not all(h.isdigit() for h in head):
        raise MatrixFileError(1, f"header must be {len(HEADER_FIELDS)} decimal integers: {' '.join(HEADER_FIELDS)}")
    p, m, q, n, k, L, lam, tau, rho, sigma = (int(h) for h in head)
    if p < 2 or m < 1 or q != p**m:
        raise MatrixFileError(1, f"q = {q} is not p^m = {p}^{m}")
    if min(lam, tau, sigma) < 1 or n != lam * tau * sigma:
        raise MatrixFileError(1, f"n = {n} differs from lambda*tau*sigma = {lam * tau * sigma}")
    if not 1 <= k <= n:
        raise MatrixFileError(1, f"k = {k} outside [1, n]")

    base = lines[1].split()
    if len(base) != m + 1 or not all(b.isdigit() and int(b) < p for b in base):
        raise MatrixFileError(2, f"base modulus needs {m + 1} digits in [0, {p})")
    ext_toks = lines[2].split()
    if len(ext_toks) != 3:
        raise MatrixFileError(3, "extension modulus needs 3 coefficients")
    ext = tuple(_parse_element(t, p, m, 3) for t in ext_toks)

    if len(lines) != 3 + k:
        raise MatrixFileError(len(lines) + 1 if len(lines) < 3 + k else 4 + k,
                              f"expected {k} matrix rows, found {len(lines) - 3}")
    rows = np.empty((k, n), dtype=np.int64)
    for r in range(k):
        lineno = 4 + r
        toks = lines[3 + r].split()
        if len(toks) != n:
            raise MatrixFileError(lineno, f"row has {len(toks)} elements, expected {n}")
        rows[r] = [_parse_element(t, p, 2 * m, lineno) for t in toks]

    mf = MatrixFile(p, m, q, n, k, L, lam, tau, rho, sigma, tuple(int(b) for b in base), ext, rows)
    try:
        mf.field()
    except FieldError as exc:
        raise MatrixFileError(2, str(exc)) from None
    return mf


def write(path, mf: MatrixFile) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(serialize(mf))


def read(path) -> MatrixFile:
    with open(path) as fh:
        return parse(fh.read())
