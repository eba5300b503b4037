"""Exact arithmetic in a cyclotomic field Q(zeta_m).

Elements are stored as coefficient vectors on the power basis
1, zeta, ..., zeta^(phi(m)-1), reduced modulo the m-th cyclotomic
polynomial, so equality is coefficient equality.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

Scalar = Union[int, Fraction]


class ModulusMismatch(ValueError):
    pass


class CycParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # Monic integer division; coefficients are low-degree first.
    num = list(num)
    dn = len(den) - 1
    assert den[-1] == 1
    quot = [0] * max(len(num) - dn, 1)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            quot[k - dn] = c
            for j, d in enumerate(den):
                num[k - dn + j] -= c * d
    return quot, num[:dn]


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_poly(d)))
            assert not any(rem)
    return tuple(poly)


@lru_cache(maxsize=None)
def totient(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    # Row k holds x^k mod Phi_m for 0 <= k < max(2*phi - 1, m).
    phi = totient(m)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(max(2 * phi - 1, m)):
        rows.append(tuple(cur))
        # multiply by x and reduce
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j, c in enumerate(cyclotomic_poly(m)[:-1]):
                cur[j] -= top * c
    return tuple(rows)


def _reduce(m: int, poly) -> tuple[Fraction, ...]:
    phi = totient(m)
    table = _power_table(m)
    out = [Fraction(0)] * phi
    for k, c in enumerate(poly):
        if not c:
            continue
        if k < phi:
            out[k] += c
        else:
            for j, t in enumerate(table[k % m] if k >= len(table) else table[k]):
                if t:
                    out[j] += c * t
    return tuple(out)


class CycNum:
    """An element of Q(zeta_m). Immutable."""

    __slots__ = ("m", "coeffs", "_hash")

    def __init__(self, m: int, coeffs):
        phi = totient(m)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            coeffs = _reduce(m, coeffs)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    @classmethod
    def _raw(cls, m: int, coeffs: tuple[Fraction, ...]) -> CycNum:
        obj = object.__new__(cls)
        object.__setattr__(obj, "m", m)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def rational(cls, m: int, value: Scalar) -> CycNum:
        phi = totient(m)
        return cls._raw(m, (Fraction(value),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zero(cls, m: int) -> CycNum:
        return cls.rational(m, 0)

    @classmethod
    def one(cls, m: int) -> CycNum:
        return cls.rational(m, 1)

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> CycNum:
        """zeta_m ** k for any integer k."""
        k %= m
        phi = totient(m)
        if k < phi:
            c = [Fraction(0)] * phi
            c[k] = Fraction(1)
            return cls._raw(m, tuple(c))
        return cls._raw(m, tuple(Fraction(t) for t in _power_table(m)[k]))

    # coercion ---------------------------------------------------------

    def _coerce(self, other) -> CycNum:
        if isinstance(other, CycNum):
            if other.m != self.m:
                raise ModulusMismatch(f"cannot combine Q(zeta_{self.m}) with Q(zeta_{other.m})")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(self.m, other)
        return NotImplemented

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNum._raw(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNum._raw(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum._raw(self.m, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        phi = len(a)
        if phi == 1:
            return CycNum._raw(self.m, (a[0] * b[0],))
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycNum._raw(self.m, _reduce(self.m, prod))

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        if not self:
            raise ZeroDivisionError("division by zero in Q(zeta_%d)" % self.m)
        phi = totient(self.m)
        if phi == 1 or not any(self.coeffs[1:]):
            c0 = self.coeffs[0]
            return CycNum.rational(self.m, 1 / c0)
        # Solve (multiplication-by-self) x = e_0 over Q.
        cols = [(self * CycNum.zeta(self.m, k)).coeffs for k in range(phi)]
        rows = [[cols[k][i] for k in range(phi)] + [Fraction(int(i == 0))] for i in range(phi)]
        for col in range(phi):
            piv = next(r for r in range(col, phi) if rows[r][col] != 0)
            rows[col], rows[piv] = rows[piv], rows[col]
            p = rows[col][col]
            rows[col] = [v / p for v in rows[col]]
            for r in range(phi):
                if r != col and rows[r][col] != 0:
                    f = rows[r][col]
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
        return CycNum._raw(self.m, tuple(rows[i][phi] for i in range(phi)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycNum._raw(self.m, tuple(a / other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_rational():
            return self / other.coeffs[0]
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int) -> CycNum:
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNum.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                h = hash(self.coeffs[0])
            else:
                h = hash((self.m, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    # field automorphisms ----------------------------------------------

    def galois(self, j: int) -> CycNum:
        """Image under zeta -> zeta^j (j coprime to m)."""
        if math.gcd(j, self.m) != 1:
            raise ValueError(f"{j} is not a unit mod {self.m}")
        poly = [Fraction(0)] * self.m
        for k, c in enumerate(self.coeffs):
            poly[(j * k) % self.m] += c
        return CycNum(self.m, poly)

    def conjugate(self) -> CycNum:
        return self.galois(-1 % self.m if self.m > 1 else 1)

    def __repr__(self):
        return f"CycNum({self.m}, {cyc_format(self)!r})"

    def __str__(self):
        return cyc_format(self)


def root_order(a: CycNum):
    """Least k >= 1 with a**k == 1, or None when a is not a root of unity."""
    if not a:
        return None
    bound = math.lcm(2, a.m)
    p = CycNum.one(a.m)
    for k in range(1, bound + 1):
        p = p * a
        if p == 1:
            return k
    return None


def cyc_arith(a: CycNum, b: CycNum, op: str) -> CycNum:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# text form ------------------------------------------------------------

def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def cyc_format(a: CycNum) -> str:
    m = a.m
    if a.is_rational():
        return _fmt_rational(a.coeffs[0])
    # Pure powers of zeta print as a single monomial, e.g. -i as z4^3.
    for k in range(1, m):
        if CycNum.zeta(m, k) == a:
            return f"z{m}^{k}"
    parts: list[str] = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = _fmt_rational(mag)
        elif mag == 1:
            body = f"z{m}^{k}"
        else:
            body = f"{_fmt_rational(mag)}*z{m}^{k}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


_TOKEN = re.compile(
    r"\s*(?:(?P<sign>[+-])\s*)?"
    r"(?:(?P<num>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?"
    r"(?:z(?P<mod>\d+)\^(?P<exp>-?\d+))?\s*"
)


def cyc_parse(text: str, m: int) -> CycNum:
    """Parse `term (+|- term)*` where a term is `[rational][*]z<m>^<k>` or a rational."""
    pos = 0
    n = len(text)
    total = [Fraction(0)] * m
    first = True
    if not text.strip():
        raise CycParseError("empty expression", 0)
    while pos < n:
        mt = _TOKEN.match(text, pos)
        start = pos
        if mt is None or mt.end() == pos:
            raise CycParseError(f"unexpected character {text[pos]!r}", pos)
        sign, num, star, mod, exp = mt.group("sign", "num", "star", "mod", "exp")
        if sign is None and not first:
            raise CycParseError("expected '+' or '-' between terms", mt.start())
        if num is None and mod is None:
            raise CycParseError("expected a rational or z<m>^<k> term", mt.end())
        if star and mod is None:
            raise CycParseError("expected z<m>^<k> after '*'", mt.end())
        coeff = Fraction(num) if num is not None else Fraction(1)
        if sign == "-":
            coeff = -coeff
        k = 0
        if mod is not None:
            if int(mod) != m:
                raise CycParseError(f"modulus z{mod} does not match field modulus {m}", mt.start("mod") - 1)
            k = int(exp)
            if not 0 <= k < m:
                raise CycParseError(f"exponent {k} out of range 0..{m - 1}", mt.start("exp"))
        total[k] += coeff
        pos = mt.end()
        first = False
        if pos == start:
            raise CycParseError("no progress", pos)
    return CycNum(m, total)
