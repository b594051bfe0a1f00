"""Exact arithmetic in cyclotomic fields Q(zeta_N) and exact linear algebra.

A ``CycloNumber`` is a dense vector of rationals in the power basis
1, zeta, ..., zeta^(phi(N)-1) of Q[x]/Phi_N(x), so equality at a fixed
conductor is coefficient-wise and every invertibility question is decided
without floating point.  Mixed-conductor arithmetic promotes both operands
to the lcm conductor, capped (default 10080, override with the
``SMATRIX_MAX_CONDUCTOR`` environment variable).

Roots of unity get their own canonical type: ``RootOfUnity(order, exponent)``
means e^(2*pi*i*exponent/order), stored with gcd(exponent, order) = 1 so the
order field is the true multiplicative order.  The literal syntax "zN^k"
(with "1" and "-1" as aliases) is used module-wide and in all file formats.

>>> cyclotomic_polynomial(12)
(1, 0, -1, 0, 1)
>>> (root_of_unity(4, 1) * root_of_unity(4, 1)) == root_of_unity(2, 1)
True
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    ConductorCapExceeded,
    ConductorMismatch,
    DivisionByZero,
    NotSquare,
    ParseError,
)

DEFAULT_MAX_CONDUCTOR = 10080


def max_conductor() -> int:
    """Current lcm cap for mixed-conductor arithmetic."""
    raw = os.environ.get("SMATRIX_MAX_CONDUCTOR")
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise ParseError(f"SMATRIX_MAX_CONDUCTOR={raw!r} is not an integer") from exc
    return DEFAULT_MAX_CONDUCTOR


def _common_conductor(a: int, b: int) -> int:
    target = math.lcm(a, b)
    cap = max_conductor()
    if target > cap:
        raise ConductorCapExceeded(
            f"conductor lcm({a}, {b}) = {target} exceeds the cap {cap}"
        )
    return target


# ----------------------------------------------------------------------
# Integer / rational polynomial helpers (dense, ascending degree).
# ----------------------------------------------------------------------

def _trim(coeffs):
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end]


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _poly_divmod_exact(num, den):
    """Quotient and remainder of integer polynomials with monic divisor."""
    assert den and den[-1] == 1, "divisor must be monic"
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 0)
    while len(_trim(num)) >= len(den):
        num = _trim(num)
        shift = len(num) - len(den)
        lead = num[-1]
        q[shift] = lead
        for i, c in enumerate(den):
            num[shift + i] -= lead * c
    return _trim(q), _trim(num)


def euler_phi(n: int) -> int:
    assert n >= 1
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """The n-th cyclotomic polynomial Phi_n as ascending integer coefficients.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n;
    monic of degree phi(n).

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    """
    if n < 1:
        raise ParseError(f"conductor must be >= 1, got {n}")
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in divisors(n):
        if d == n:
            continue
        num, rem = _poly_divmod_exact(num, list(cyclotomic_polynomial(d)))
        assert not rem
    assert len(num) - 1 == euler_phi(n) and num[-1] == 1
    return tuple(num)


@lru_cache(maxsize=None)
def _phi_fractions(n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in cyclotomic_polynomial(n))


def _reduce_mod_phi(coeffs: list[Fraction], n: int) -> tuple[Fraction, ...]:
    """Reduce a rational polynomial in zeta_n modulo Phi_n; fixed length phi(n)."""
    phi = _phi_fractions(n)
    deg = len(phi) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, deg - 1, -1):
        lead = work[i]
        if lead:
            shift = i - deg
            for j in range(len(phi)):
                work[shift + j] -= lead * phi[j]
        work.pop()
    while len(work) < deg:
        work.append(Fraction(0))
    return tuple(work)


# ----------------------------------------------------------------------
# Roots of unity.
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class RootOfUnity:
    """e^(2*pi*i*exponent/order) in lowest terms; (1, 0) is the value 1."""

    order: int
    exponent: int

    def __post_init__(self):
        if self.order < 1 or not 0 <= self.exponent < self.order:
            raise ParseError(f"root of unity out of range: {self}")
        if math.gcd(self.exponent, self.order) != 1 and self.order != 1:
            raise ParseError(f"root of unity not in canonical form: {self}")

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        n = math.lcm(self.order, other.order)
        k = (self.exponent * (n // self.order) + other.exponent * (n // other.order)) % n
        return root_of_unity(n, k)

    def __pow__(self, m: int) -> "RootOfUnity":
        return root_of_unity(self.order, (self.exponent * m) % self.order)

    def inv(self) -> "RootOfUnity":
        return root_of_unity(self.order, (-self.exponent) % self.order)

    @property
    def is_one(self) -> bool:
        return self.order == 1

    def __str__(self) -> str:
        return format_root(self)


def root_of_unity(order: int, exponent: int) -> RootOfUnity:
    """Canonical root e^(2*pi*i*exponent/order); reduces (order, exponent) by gcd."""
    if order < 1:
        raise ParseError(f"order must be positive, got {order}")
    exponent %= order
    g = math.gcd(exponent, order)
    if exponent == 0:
        return RootOfUnity(1, 0)
    return RootOfUnity(order // g, exponent // g)


ONE = root_of_unity(1, 0)
MINUS_ONE = root_of_unity(2, 1)


def parse_root(text: str) -> RootOfUnity:
    """Parse the literal syntax "zN^k"; "1" and "-1" are accepted aliases."""
    s = text.strip()
    if s == "1":
        return ONE
    if s == "-1":
        return MINUS_ONE
    if s.startswith("z") and "^" in s:
        head, _, tail = s[1:].partition("^")
        try:
            return root_of_unity(int(head), int(tail))
        except ValueError:
            pass
    raise ParseError(f"cannot parse root-of-unity literal {text!r}")


def format_root(r: RootOfUnity) -> str:
    if r == ONE:
        return "1"
    if r == MINUS_ONE:
        return "-1"
    return f"z{r.order}^{r.exponent}"


# ----------------------------------------------------------------------
# Cyclotomic numbers.
# ----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CycloNumber:
    """Element of Q(zeta_conductor) in the Phi-reduced power basis."""

    conductor: int
    coeffs: tuple[Fraction, ...]

    __hash__ = None  # equality promotes conductors, so hashing is unsafe

    def __post_init__(self):
        assert len(self.coeffs) == euler_phi(self.conductor)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_rational(value, conductor: int = 1) -> "CycloNumber":
        coeffs = [Fraction(value)] + [Fraction(0)] * (euler_phi(conductor) - 1)
        return CycloNumber(conductor, tuple(coeffs))

    @staticmethod
    def zero(conductor: int = 1) -> "CycloNumber":
        return CycloNumber.from_rational(0, conductor)

    @staticmethod
    def one(conductor: int = 1) -> "CycloNumber":
        return CycloNumber.from_rational(1, conductor)

    # -- representation -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def promote(self, target: int) -> "CycloNumber":
        """Rewrite at a larger conductor; target must be a multiple of ours."""
        if target == self.conductor:
            return self
        if target % self.conductor != 0:
            raise ConductorMismatch(
                f"cannot promote conductor {self.conductor} into {target}"
            )
        step = target // self.conductor
        out = [Fraction(0)] * (len(self.coeffs) * step)
        for i, c in enumerate(self.coeffs):
            out[i * step] = c
        return CycloNumber(target, _reduce_mod_phi(out, target))

    # -- field operations ------------------------------------------------

    def _with(self, other: "CycloNumber"):
        n = _common_conductor(self.conductor, other.conductor)
        return self.promote(n), other.promote(n)

    def __add__(self, other: "CycloNumber") -> "CycloNumber":
        a, b = self._with(other)
        return CycloNumber(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __sub__(self, other: "CycloNumber") -> "CycloNumber":
        return self + (-other)

    def __neg__(self) -> "CycloNumber":
        return CycloNumber(self.conductor, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "CycloNumber") -> "CycloNumber":
        a, b = self._with(other)
        prod = _poly_mul(list(a.coeffs), list(b.coeffs))
        return CycloNumber(a.conductor, _reduce_mod_phi([Fraction(c) for c in prod], a.conductor))

    def inv(self) -> "CycloNumber":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero:
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        u = _poly_inverse_mod(list(self.coeffs), list(_phi_fractions(self.conductor)))
        return CycloNumber(self.conductor, _reduce_mod_phi(u, self.conductor))

    def __truediv__(self, other: "CycloNumber") -> "CycloNumber":
        return self * other.inv()

    def __pow__(self, m: int) -> "CycloNumber":
        if m < 0:
            return self.inv() ** (-m)
        result = CycloNumber.one(self.conductor)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def conj(self) -> "CycloNumber":
        """Complex conjugation, the Galois map zeta -> zeta^(-1)."""
        n = self.conductor
        acc = [Fraction(0)] * euler_phi(n)
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = _root_powers(n)[(-j) % n]
            for i, p in enumerate(power):
                acc[i] += c * p
        return CycloNumber(n, tuple(acc))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloNumber):
            return NotImplemented
        a, b = self._with(other)
        return a.coeffs == b.coeffs

    def __repr__(self) -> str:
        return f"CycloNumber({self.conductor}, {[str(c) for c in self.coeffs]})"


def _poly_inverse_mod(a: list[Fraction], modulus: list[Fraction]) -> list[Fraction]:
    """u with u*a = 1 mod modulus, for gcd(a, modulus) = 1 in Q[x]."""

    def degree(p):
        d = len(p) - 1
        while d >= 0 and p[d] == 0:
            d -= 1
        return d

    def divmod_frac(num, den):
        num = list(num)
        dd = degree(den)
        q = [Fraction(0)] * max(degree(num) - dd + 1, 1)
        while degree(num) >= dd:
            shift = degree(num) - dd
            factor = num[degree(num)] / den[dd]
            q[shift] += factor
            for i in range(dd + 1):
                num[shift + i] -= factor * den[i]
        return q, num

    r0, r1 = list(modulus), list(a)
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while degree(r1) > 0:
        q, r = divmod_frac(r0, r1)
        r0, r1 = r1, r
        qs = _poly_mul(q, s1)
        s_new = [Fraction(0)] * max(len(s0), len(qs))
        for i, c in enumerate(s0):
            s_new[i] += c
        for i, c in enumerate(qs):
            s_new[i] -= c
        s0, s1 = s1, s_new
    lead = r1[degree(r1)]
    assert degree(r1) == 0 and lead != 0, "element not invertible mod Phi_N"
    return [c / lead for c in s1]


@lru_cache(maxsize=None)
def _root_powers(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced coordinates of zeta_n^k for k = 0..n-1."""
    deg = euler_phi(n)
    powers = []
    current = [Fraction(1)] + [Fraction(0)] * (deg - 1)
    for _ in range(n):
        powers.append(tuple(current))
        shifted = [Fraction(0)] + list(current)
        current = list(_reduce_mod_phi(shifted, n))
    return tuple(powers)


def embed(r: RootOfUnity, target_conductor: int) -> CycloNumber:
    """The root as a CycloNumber at target_conductor; its order must divide it."""
    if target_conductor % r.order != 0:
        raise ConductorMismatch(
            f"order {r.order} does not divide target conductor {target_conductor}"
        )
    k = r.exponent * (target_conductor // r.order)
    return CycloNumber(target_conductor, _root_powers(target_conductor)[k % target_conductor])


def as_root_of_unity(x: CycloNumber) -> RootOfUnity | None:
    """Recover the canonical root equal to x, or None if x is not one.

    The roots of unity inside Q(zeta_N) are exactly those of order dividing N
    for even N and 2N for odd N.
    """
    m = x.conductor if x.conductor % 2 == 0 else 2 * x.conductor
    promoted = x.promote(m)
    for k in range(m):
        if promoted.coeffs == _root_powers(m)[k]:
            return root_of_unity(m, k)
    return None


# ----------------------------------------------------------------------
# Matrices.
# ----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CycloMatrix:
    """Row-major matrix of CycloNumbers sharing one conductor."""

    rows: int
    cols: int
    entries: tuple[CycloNumber, ...]

    __hash__ = None

    def __post_init__(self):
        assert self.rows >= 1 and self.cols >= 1
        assert len(self.entries) == self.rows * self.cols
        assert len({e.conductor for e in self.entries}) == 1

    @staticmethod
    def from_rows(rows: list[list[CycloNumber]]) -> "CycloMatrix":
        nrows = len(rows)
        ncols = len(rows[0])
        assert all(len(r) == ncols for r in rows)
        conductor = 1
        for row in rows:
            for e in row:
                conductor = _common_conductor(conductor, e.conductor)
        flat = tuple(e.promote(conductor) for row in rows for e in row)
        return CycloMatrix(nrows, ncols, flat)

    @staticmethod
    def identity(n: int, conductor: int = 1) -> "CycloMatrix":
        one = CycloNumber.one(conductor)
        zero = CycloNumber.zero(conductor)
        return CycloMatrix.from_rows(
            [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    def at(self, i: int, j: int) -> CycloNumber:
        return self.entries[i * self.cols + j]

    def row_list(self) -> list[list[CycloNumber]]:
        return [
            [self.at(i, j) for j in range(self.cols)] for i in range(self.rows)
        ]

    def transpose(self) -> "CycloMatrix":
        return CycloMatrix.from_rows(
            [[self.at(i, j) for i in range(self.rows)] for j in range(self.cols)]
        )

    def conj(self) -> "CycloMatrix":
        return CycloMatrix.from_rows(
            [[self.at(i, j).conj() for j in range(self.cols)] for i in range(self.rows)]
        )

    def matmul(self, other: "CycloMatrix") -> "CycloMatrix":
        assert self.cols == other.rows
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = CycloNumber.zero(1)
                for k in range(self.cols):
                    acc = acc + self.at(i, k) * other.at(k, j)
                row.append(acc)
            out.append(row)
        return CycloMatrix.from_rows(out)

    def scale(self, factor: CycloNumber) -> "CycloMatrix":
        return CycloMatrix.from_rows(
            [[self.at(i, j) * factor for j in range(self.cols)] for i in range(self.rows)]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(a == b for a, b in zip(self.entries, other.entries))

    def _eliminate(self):
        """Fraction-free (Bareiss) elimination; (rank, sign, last pivot)."""
        m = self.row_list()
        sign = 1
        prev = CycloNumber.one(self.entries[0].conductor)
        pivot_row = 0
        last_pivot = prev
        for col in range(self.cols):
            if pivot_row >= self.rows:
                break
            found = None
            for r in range(pivot_row, self.rows):
                if not m[r][col].is_zero:
                    found = r
                    break
            if found is None:
                continue
            if found != pivot_row:
                m[pivot_row], m[found] = m[found], m[pivot_row]
                sign = -sign
            pivot = m[pivot_row][col]
            for r in range(pivot_row + 1, self.rows):
                for c in range(col + 1, self.cols):
                    m[r][c] = (pivot * m[r][c] - m[r][col] * m[pivot_row][c]) / prev
                m[r][col] = CycloNumber.zero(pivot.conductor)
            prev = pivot
            last_pivot = pivot
            pivot_row += 1
        return pivot_row, sign, last_pivot

    def rank(self) -> int:
        rank, _, _ = self._eliminate()
        return rank

    def det(self) -> CycloNumber:
        if self.rows != self.cols:
            raise NotSquare(f"determinant of a {self.rows}x{self.cols} matrix")
        rank, sign, last_pivot = self._eliminate()
        if rank < self.rows:
            return CycloNumber.zero(self.entries[0].conductor)
        return -last_pivot if sign < 0 else last_pivot
