"""Exact arithmetic over cyclotomic fields and exact rational matrices.

A :class:`CyclotomicNumber` is stored in the power basis of Q(zeta_m) reduced
modulo the cyclotomic polynomial Phi_m, as integer numerators over a single
positive common denominator.  Values of different conductors are combined by
lifting both to the least common multiple of the conductors.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .errors import InvariantViolation, SemanticError, SpecSyntaxError

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "CyclotomicNumber",
    "RationalMatrix",
    "cyc_make",
    "cyc_to_rational",
    "cyc_dot",
    "zeta",
    "mat_inverse",
    "mat_det",
    "format_rational",
    "parse_rational",
    "format_cyc",
    "parse_cyc",
    "euler_phi",
    "cyclotomic_polynomial",
]


# ---------------------------------------------------------------------------
# cyclotomic polynomials and reduction tables


def euler_phi(m: int) -> int:
    result, k, p = m, m, 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients), den monic."""
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + dn]
        quot[k] = c
        if c:
            for t, d in enumerate(den):
                num[k + t] -= c * d
    if any(num[:dn]):
        raise InvariantViolation("cyclotomic division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, ascending, from x^m - 1 divided by Phi_d for d | m, d < m."""
    if m < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row e (phi <= e < m) holds x^e mod Phi_m in the power basis."""
    phi = euler_phi(m)
    cp = cyclotomic_polynomial(m)
    rows: list[tuple[int, ...]] = []
    # x^phi = -(cp[0] + ... + cp[phi-1] x^(phi-1))
    cur = [0] * phi
    cur_is_basis = True
    for e in range(phi, m):
        if cur_is_basis:
            cur = [-c for c in cp[:phi]]
            cur_is_basis = False
        else:
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for t in range(phi):
                    cur[t] -= top * cp[t]
        rows.append(tuple(cur))
    return tuple(rows)


def _reduce_cyclic(vec: list[int], m: int) -> list[int]:
    """Reduce a length-m vector (coefficients of x^0..x^(m-1)) modulo Phi_m."""
    phi = euler_phi(m)
    out = vec[:phi]
    table = _reduction_table(m)
    for e in range(phi, m):
        c = vec[e]
        if c:
            row = table[e - phi]
            for t in range(phi):
                if row[t]:
                    out[t] += c * row[t]
    return out


@lru_cache(maxsize=None)
def _ramanujan_trace(m: int) -> tuple[Fraction, ...]:
    """Normalized trace Tr(zeta_m^k) / phi(m) for k < phi(m)."""
    phi = euler_phi(m)
    out = []
    for k in range(phi):
        d = m // math.gcd(m, k)
        out.append(Fraction(_mobius(d), euler_phi(d)))
    return tuple(out)


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


# ---------------------------------------------------------------------------
# CyclotomicNumber


def _as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class CyclotomicNumber:
    """An element of Q(zeta_m) in canonical power-basis form.

    Instances are immutable.  ``coeffs`` gives the power-basis coefficients as
    fractions; internally they are integer numerators over ``den``.
    """

    # _nz caches a sparse representative (exponent, numerator) over _den in
    # Z[x]/(x^m - 1); any representative reduces to the canonical form.
    __slots__ = ("m", "_num", "_den", "_hash", "_conj", "_nz")

    def __init__(self, m: int, num: Sequence[int], den: int = 1, *, _normalized: bool = False):
        if not _normalized:
            if m < 1:
                raise ValueError("conductor must be positive")
            if len(num) != euler_phi(m):
                raise ValueError("coefficient vector must have length phi(m)")
            if den == 0:
                raise ZeroDivisionError("division by zero")
            num, den = _normalize(list(num), den)
        self.m = m
        self._num = tuple(num)
        self._den = den
        self._hash = None
        self._conj = None
        self._nz = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rational(cls, q: Scalar, m: int = 1) -> CyclotomicNumber:
        q = _as_fraction(q)
        num = [0] * euler_phi(m)
        num[0] = q.numerator
        return cls(m, num, q.denominator, _normalized=True)

    @classmethod
    def _from_cyclic(cls, m: int, vec: list[int], den: int) -> CyclotomicNumber:
        num, nden = _normalize(_reduce_cyclic(vec, m), den)
        obj = cls(m, num, nden, _normalized=True)
        rep = [(k, c) for k, c in enumerate(vec) if c]
        if len(rep) < sum(1 for c in num if c):
            factor = den // nden
            if all(c % factor == 0 for _, c in rep):
                obj._nz = tuple((k, c // factor) for k, c in rep)
        return obj

    def _sparse(self) -> tuple[tuple[int, int], ...]:
        if self._nz is None:
            self._nz = tuple((k, c) for k, c in enumerate(self._num) if c)
        return self._nz

    # -- accessors ----------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def conductor(self) -> int:
        return self.m

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def terms(self) -> dict[int, Fraction]:
        return {k: Fraction(c, self._den) for k, c in enumerate(self._num) if c}

    def lift(self, m: int) -> CyclotomicNumber:
        """The same value written in Q(zeta_m); m must be a multiple of self.m."""
        if m == self.m:
            return self
        if m % self.m:
            raise ValueError(f"cannot lift conductor {self.m} to {m}")
        if self.is_rational():
            num = [0] * euler_phi(m)
            num[0] = self._num[0]
            return CyclotomicNumber(m, num, self._den, _normalized=True)
        step = m // self.m
        vec = [0] * m
        for k, c in self._sparse():
            vec[k * step] += c
        return CyclotomicNumber._from_cyclic(m, vec, self._den)

    def __complex__(self) -> complex:
        z = complex(math.cos(2 * math.pi / self.m), math.sin(2 * math.pi / self.m))
        return sum(c * z**k for k, c in enumerate(self._num)) / self._den

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> CyclotomicNumber | None:
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other, self.m)
        return None

    def _common(self, other: CyclotomicNumber) -> tuple[CyclotomicNumber, CyclotomicNumber]:
        if self.m == other.m:
            return self, other
        m = math.lcm(self.m, other.m)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        den = a._den * b._den // math.gcd(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        num = [x * fa + y * fb for x, y in zip(a._num, b._num)]
        num, den = _normalize(num, den)
        return CyclotomicNumber(a.m, num, den, _normalized=True)

    __radd__ = __add__

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.m, [-c for c in self._num], self._den, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 1:
                return self
            num, den = _normalize([c * other for c in self._num], self._den)
            return CyclotomicNumber(self.m, num, den, _normalized=True)
        if isinstance(other, Fraction):
            q = other
            num, den = _normalize([c * q.numerator for c in self._num], self._den * q.denominator)
            return CyclotomicNumber(self.m, num, den, _normalized=True)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if other.is_rational():
            return self * Fraction(other._num[0], other._den)
        if self.is_rational():
            return other * Fraction(self._num[0], self._den)
        a, b = self._common(other)
        m = a.m
        vec = [0] * m
        bn = b._sparse()
        for i, x in a._sparse():
            for j, y in bn:
                k = i + j
                if k >= m:
                    k -= m
                vec[k] += x * y
        return CyclotomicNumber._from_cyclic(m, vec, a._den * b._den)

    __rmul__ = __mul__

    def galois(self, u: int) -> CyclotomicNumber:
        """Apply the automorphism zeta_m -> zeta_m^u (u coprime to m)."""
        if math.gcd(u, self.m) != 1:
            raise ValueError("Galois exponent must be coprime to the conductor")
        if self.is_rational():
            return self
        m = self.m
        vec = [0] * m
        for k, c in self._sparse():
            vec[(k * u) % m] += c
        return CyclotomicNumber._from_cyclic(m, vec, self._den)

    def conjugate(self) -> CyclotomicNumber:
        if self._conj is None:
            self._conj = self.galois(-1 % self.m) if self.m > 2 else self
        return self._conj

    def norm(self) -> Fraction:
        """Field norm from Q(zeta_m) down to Q."""
        prod = self
        for u in range(2, self.m):
            if math.gcd(u, self.m) == 1:
                prod = prod * self.galois(u)
        return cyc_to_rational(prod)

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.is_rational():
            return CyclotomicNumber.from_rational(1 / Fraction(self._num[0], self._den), self.m)
        # x^-1 = (product of the other Galois conjugates) / N(x)
        others = None
        for u in range(2, self.m):
            if math.gcd(u, self.m) == 1:
                g = self.galois(u)
                others = g if others is None else others * g
        norm = cyc_to_rational(self * others)
        return others * (1 / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / _as_fraction(other))
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> CyclotomicNumber:
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.from_rational(1, self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.m == other.m:
            return self._den == other._den and self._num == other._num
        a, b = self._common(other)
        return a._den == b._den and a._num == b._num

    def __hash__(self) -> int:
        # the normalized trace does not depend on the ambient conductor
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                tr = _ramanujan_trace(self.m)
                self._hash = hash(sum(c * t for c, t in zip(self._num, tr)) / self._den)
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"CyclotomicNumber({format_cyc(self)!r})"

    def __str__(self) -> str:
        return format_cyc(self)


def _normalize(num: list[int], den: int) -> tuple[list[int], int]:
    if den < 0:
        num, den = [-c for c in num], -den
    g = den
    for c in num:
        if c:
            g = math.gcd(g, c)
            if g == 1:
                return num, den
    if not any(num):
        return num, 1
    return [c // g for c in num], den // g


def cyc_make(m: int, terms: Mapping[int, Scalar]) -> CyclotomicNumber:
    """Build sum(c * zeta_m^k) from an exponent -> coefficient map."""
    if m < 1:
        raise ValueError("conductor must be positive")
    fracs = {k % m: Fraction(0) for k in terms}
    for k, c in terms.items():
        fracs[k % m] += _as_fraction(c)
    den = 1
    for c in fracs.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    vec = [0] * m
    for k, c in fracs.items():
        vec[k] += c.numerator * (den // c.denominator)
    return CyclotomicNumber._from_cyclic(m, vec, den)


def cyc_dot(xs: Sequence[CyclotomicNumber], ys: Sequence[CyclotomicNumber],
            scales: Sequence[Scalar] | None = None, *, conj: bool = False) -> CyclotomicNumber:
    """sum_k s_k * x_k * y_k (y_k conjugated if ``conj``), reduced once at the end."""
    if len(xs) != len(ys):
        raise ValueError("length mismatch")
    if scales is None:
        scales = [1] * len(xs)
    terms = []
    L = 1
    D = 1
    for x, y, s in zip(xs, ys, scales):
        if not isinstance(x, CyclotomicNumber):
            x = CyclotomicNumber.from_rational(x)
        if not isinstance(y, CyclotomicNumber):
            y = CyclotomicNumber.from_rational(y)
        s = _as_fraction(s)
        if not s or x.is_zero() or y.is_zero():
            continue
        L = L * x.m // math.gcd(L, x.m)
        L = L * y.m // math.gcd(L, y.m)
        d = x._den * y._den * s.denominator
        D = D * d // math.gcd(D, d)
        terms.append((x, y, s, d))
    if not terms:
        return CyclotomicNumber.from_rational(0)
    vec = [0] * L
    sign = -1 if conj else 1
    for x, y, s, d in terms:
        fx, fy = L // x.m, L // y.m
        mult = s.numerator * (D // d)
        xn = [(k * fx, c * mult) for k, c in x._sparse()]
        yn = [((sign * k * fy) % L, c) for k, c in y._sparse()]
        for ex, cx in xn:
            for ey, cy in yn:
                e = ex + ey
                if e >= L:
                    e -= L
                vec[e] += cx * cy
    return CyclotomicNumber._from_cyclic(L, vec, D)


def zeta(m: int, k: int = 1) -> CyclotomicNumber:
    """The root of unity zeta_m^k."""
    return cyc_make(m, {k: 1})


def cyc_to_rational(x: CyclotomicNumber | Scalar) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return _as_fraction(x)
    if not x.is_rational():
        raise SemanticError("not rational")
    return Fraction(x._num[0], x._den)


# ---------------------------------------------------------------------------
# text encodings

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")
_CYC_RE = re.compile(r"^\s*cyc\(\s*(\d+)\s*;(.*)\)\s*$")


def format_rational(q: Scalar) -> str:
    q = _as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    match = _RATIONAL_RE.match(text)
    if not match:
        raise SpecSyntaxError(f"bad rational {text!r}")
    p, q = match.groups()
    if q is not None and int(q) == 0:
        raise SpecSyntaxError(f"zero denominator in {text!r}")
    return Fraction(int(p), int(q) if q else 1)


def format_cyc(x: CyclotomicNumber | Scalar) -> str:
    """``p/q`` for rational values, otherwise ``cyc(m; k:c, ...)``."""
    if isinstance(x, (int, Fraction)):
        return format_rational(x)
    if x.is_rational():
        return format_rational(Fraction(x._num[0], x._den))
    body = ", ".join(f"{k}:{format_rational(c)}" for k, c in sorted(x.terms().items()))
    return f"cyc({x.m}; {body})"


def parse_cyc(text: str) -> CyclotomicNumber:
    match = _CYC_RE.match(text)
    if not match:
        return CyclotomicNumber.from_rational(parse_rational(text))
    m = int(match.group(1))
    if m < 1:
        raise SpecSyntaxError(f"bad conductor in {text!r}")
    terms: dict[int, Fraction] = {}
    body = match.group(2).strip()
    if body:
        for item in body.split(","):
            if ":" not in item:
                raise SpecSyntaxError(f"bad cyclotomic term {item!r}")
            k, c = item.split(":", 1)
            try:
                exp = int(k)
            except ValueError:
                raise SpecSyntaxError(f"bad exponent {k!r}") from None
            terms[exp] = terms.get(exp, Fraction(0)) + parse_rational(c)
    return cyc_make(m, terms)


# ---------------------------------------------------------------------------
# RationalMatrix


class RationalMatrix:
    """Dense exact matrix over Q, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Scalar]):
        entries = tuple(_as_fraction(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError("entries.length must equal rows * cols")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> RationalMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(self.cols, self.rows,
                              [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    @property
    def T(self) -> RationalMatrix:
        return self.transpose()

    def minor(self, row: int, col: int) -> RationalMatrix:
        """Delete one row and one column."""
        return RationalMatrix(
            self.rows - 1, self.cols - 1,
            [self[i, j] for i in range(self.rows) if i != row
             for j in range(self.cols) if j != col],
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> RationalMatrix:
        return RationalMatrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> RationalMatrix:
        return RationalMatrix(self.rows, self.cols, [-a for a in self.entries])

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> RationalMatrix:
        s = _as_fraction(scalar)
        return RationalMatrix(self.rows, self.cols, [a * s for a in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            out = []
            ocols = [other.entries[j::other.cols] for j in range(other.cols)]
            for i in range(self.rows):
                r = self.row(i)
                out.extend(sum(a * b for a, b in zip(r, c)) for c in ocols)
            return RationalMatrix(self.rows, other.cols, out)
        vec = [_as_fraction(v) for v in other]
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [sum(a * b for a, b in zip(self.row(i), vec)) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(e) for e in self.row(i)) for i in range(self.rows))
        return f"RationalMatrix([{body}])"

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(e) for e in self.row(i)] for i in range(self.rows)]

    def to_text(self) -> str:
        """One row per line, entries in ``p/q`` form separated by spaces."""
        return "\n".join(" ".join(format_rational(e) for e in self.row(i)) for i in range(self.rows)) + "\n"

    @classmethod
    def from_text(cls, text: str) -> RationalMatrix:
        rows = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                rows.append([parse_rational(tok) for tok in line.split()])
        return cls.from_rows(rows)


def _integer_rows(M: RationalMatrix) -> tuple[list[list[int]], list[int]]:
    """Scale each row to integers; returns the integer rows and the row scale factors."""
    rows, scales = [], []
    for i in range(M.rows):
        r = M.row(i)
        d = 1
        for e in r:
            d = d * e.denominator // math.gcd(d, e.denominator)
        rows.append([int(e * d) for e in r])
        scales.append(d)
    return rows, scales


def _bareiss_gauss_jordan(a: list[list[int]], n: int) -> int:
    """Fraction-free Gauss-Jordan on an n x (n + k) integer array, in place.

    On return the left block is det * I (row swaps applied to ``a``) and the
    returned value is that common diagonal entry.  Raises on singularity.
    """
    prev = 1
    width = len(a[0]) if a else 0
    for k in range(n):
        if a[k][k] == 0:
            for s in range(k + 1, n):
                if a[s][k] != 0:
                    a[k], a[s] = a[s], a[k]
                    break
            else:
                raise SemanticError("singular")
        piv = a[k][k]
        rk = a[k]
        for i in range(n):
            if i == k:
                continue
            ri = a[i]
            f = ri[k]
            for j in range(width):
                ri[j] = (piv * ri[j] - f * rk[j]) // prev
        prev = piv
    return prev


def mat_inverse(M: RationalMatrix) -> RationalMatrix:
    """Exact inverse by fraction-free Gauss-Jordan elimination."""
    if not M.is_square():
        raise ValueError("matrix must be square")
    n = M.rows
    if n == 0:
        return RationalMatrix(0, 0, [])
    rows, scales = _integer_rows(M)
    aug = [rows[i] + [int(i == j) for j in range(n)] for i in range(n)]
    d = _bareiss_gauss_jordan(aug, n)
    # N^-1 = right block / d, and M = diag(1/scales) N  =>  M^-1 = N^-1 diag(scales)
    return RationalMatrix(n, n, [Fraction(aug[i][n + j] * scales[j], d)
                                 for i in range(n) for j in range(n)])


def mat_det(M: RationalMatrix) -> Fraction:
    """Exact determinant (Bareiss elimination)."""
    if not M.is_square():
        raise ValueError("matrix must be square")
    n = M.rows
    if n == 0:
        return Fraction(1)
    rows, scales = _integer_rows(M)
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for s in range(k + 1, n):
                if a[s][k] != 0:
                    a[k], a[s] = a[s], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    denom = math.prod(scales)
    return Fraction(sign * a[n - 1][n - 1], denom)
