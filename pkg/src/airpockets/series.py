"""Truncated power series with exact rational coefficients.

A :class:`TruncatedSeries` keeps the coefficients of x^0 .. x^order as
`fractions.Fraction` values in lowest terms.  All arithmetic is exact.
Binary operations require both operands to share the same order; truncate
explicitly when mixing orders.  Operations that lose low-order information
return a series of *smaller* order, so the order of a series is always an
honest statement of which coefficients are known:

* division by a series of valuation v returns order - v,
* shift(-j) returns order - j.

Instances are immutable and hashable.  Everything here is pure and safe to
share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import (
    BadConstantTerm,
    DivisionByZeroSeries,
    NonInvertible,
    OrderMismatch,
    ValuationUnderflow,
)

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficient must be int or Fraction, not {type(value).__name__}")


def _mul_lists(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [_ZERO] * (order + 1)
    for i in range(min(len(a), order + 1)):
        ai = a[i]
        if not ai:
            continue
        top = order - i
        for j in range(min(len(b) - 1, top) + 1):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def _div_lists(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    # long division, b[0] must be nonzero; exact to the given order
    inv0 = 1 / b[0]
    q = [_ZERO] * (order + 1)
    for n in range(order + 1):
        acc = a[n] if n < len(a) else _ZERO
        for i in range(n):
            qi = q[i]
            if qi and n - i < len(b):
                acc -= qi * b[n - i]
        q[n] = acc * inv0
    return q


class TruncatedSeries:
    """A power series in x known through x^order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = [_as_fraction(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("an empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(cs) < order + 1:
            cs.extend([_ZERO] * (order + 1 - len(cs)))
        elif len(cs) > order + 1:
            del cs[order + 1:]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # ---------- constructors ----------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def constant(cls, c: Scalar, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def monomial(cls, n: int, order: int, c: Scalar = 1) -> "TruncatedSeries":
        if n < 0:
            raise ValueError("monomial exponent must be nonnegative")
        coeffs = [0] * n + [c] if n <= order else []
        return cls(coeffs, order)

    @classmethod
    def polynomial(cls, coeffs: Iterable[Scalar], order: int) -> "TruncatedSeries":
        """Polynomial given by its coefficient list, truncated to the order."""
        return cls(coeffs, order)

    # ---------- inspection ----------

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside known range 0..{self.order}")
        return self.coeffs[n]

    @property
    def valuation(self) -> int:
        """Index of the first nonzero coefficient; order+1 when none is known."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order + 1

    def is_zero(self) -> bool:
        return self.valuation > self.order

    def integer_coefficients(self) -> tuple[int, ...]:
        """Coefficients as ints; raises ValueError on a non-integer coefficient."""
        out = []
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError(f"coefficient of x^{i} is non-integer: {c}")
            out.append(c.numerator)
        return tuple(out)

    # ---------- order management ----------

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise OrderMismatch(
                f"cannot truncate order {self.order} up to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def zero_extend(self, order: int) -> "TruncatedSeries":
        """Pad with zero coefficients.

        Only valid when the series is known to be a polynomial of degree
        <= self.order; the caller vouches for that.
        """
        if order < self.order:
            return self.truncate(order)
        return TruncatedSeries(self.coeffs, order)

    def _check_order(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise OrderMismatch(
                f"orders differ: {self.order} vs {other.order}")

    def _coerce(self, other) -> "TruncatedSeries | None":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        return None

    # ---------- arithmetic ----------

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        self._check_order(rhs)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, rhs.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        self._check_order(rhs)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, rhs.coeffs)], self.order)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            return TruncatedSeries([c * f for c in self.coeffs], self.order)
        if isinstance(other, TruncatedSeries):
            self._check_order(other)
            return TruncatedSeries(
                _mul_lists(list(self.coeffs), list(other.coeffs), self.order),
                self.order)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            if f == 0:
                raise ZeroDivisionError("division by zero scalar")
            return TruncatedSeries([c / f for c in self.coeffs], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        if other.is_zero():
            raise DivisionByZeroSeries("division by a series that is 0 to order")
        v = other.valuation
        if v > 0 and self.valuation < v:
            raise ValuationUnderflow(
                f"dividend valuation {self.valuation} < divisor valuation {v}")
        new_order = self.order - v
        a = list(self.coeffs[v:])
        b = list(other.coeffs[v:])
        return TruncatedSeries(_div_lists(a, b, new_order), new_order)

    def __rtruediv__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.coeffs[0]:
                raise NonInvertible(
                    "negative power of a series with zero constant term")
            return (TruncatedSeries.one(self.order) / self) ** (-exponent)
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def sqrt(self) -> "TruncatedSeries":
        """Square root by Newton iteration with order doubling.

        The constant term must be 1 (raises BadConstantTerm otherwise).
        """
        if self.coeffs[0] != 1:
            raise BadConstantTerm(
                f"sqrt needs constant term 1, got {self.coeffs[0]}")
        a = list(self.coeffs)
        s = [_ONE]
        prec = 0
        while prec < self.order:
            prec = min(2 * prec + 1, self.order)
            t = _div_lists(a, s + [_ZERO] * (prec + 1 - len(s)), prec)
            s = [(si + ti) / 2 for si, ti in
                 zip(s + [_ZERO] * (prec + 1 - len(s)), t)]
        return TruncatedSeries(s, self.order)

    def shift(self, j: int) -> "TruncatedSeries":
        """Multiply by x^j.

        For j >= 0 the order is preserved (overflowing top coefficients
        drop off the window).  For j < 0 the series must have valuation
        >= -j and the result has order + j.
        """
        if j >= 0:
            return TruncatedSeries([0] * j + list(self.coeffs), self.order)
        m = -j
        if self.valuation < m:
            raise ValuationUnderflow(
                f"shift({j}) on a series of valuation {self.valuation}")
        if m > self.order:
            raise ValuationUnderflow(f"shift({j}) exceeds order {self.order}")
        return TruncatedSeries(self.coeffs[m:], self.order - m)

    # ---------- comparisons and display ----------

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def agrees_through(self, other: "TruncatedSeries", n: int) -> bool:
        """True when both series share coefficients of x^0 .. x^n."""
        if n > self.order or n > other.order:
            raise OrderMismatch(f"agreement through {n} not decidable")
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __repr__(self):
        return f"TruncatedSeries({self!s}, order={self.order})"

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(parts) if parts else "0"
