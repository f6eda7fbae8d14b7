"""Exact scalars in the ring Q[i, s]/(i^2 + 1, s^2 - r).

The symbol s stands for the square root of the root index r and i for the
imaginary unit. Neither is embedded in the complex numbers; both are formal
symbols subject only to the two reduction rules, which are applied eagerly so
that the four-component form q0 + q1*i + q2*s + q3*i*s is canonical.
"""
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Tuple, Union

from rspin.errors import NotInvertibleError, RingMismatchError


RationalLike = Union[int, Fraction]


def format_rational(value: Fraction) -> str:
    """Render a rational as ``p`` or ``p/q``."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, eq=False)
class Scalar:
    """Element q0 + q1*i + q2*s + q3*i*s of the scalar ring for a fixed r."""

    q0: Fraction
    q1: Fraction
    q2: Fraction
    q3: Fraction
    r: int

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 2:
            raise ValueError(f"Root index must be an integer >= 2, got {self.r!r}")
        for name in ("q0", "q1", "q2", "q3"):
            value = getattr(self, name)
            if not isinstance(value, Fraction):
                object.__setattr__(self, name, Fraction(value))

    @classmethod
    def rational(cls, value: RationalLike, r: int) -> "Scalar":
        return cls(Fraction(value), Fraction(0), Fraction(0), Fraction(0), r)

    @classmethod
    def zero(cls, r: int) -> "Scalar":
        return cls.rational(0, r)

    @classmethod
    def one(cls, r: int) -> "Scalar":
        return cls.rational(1, r)

    @classmethod
    def imaginary_unit(cls, r: int) -> "Scalar":
        return cls(Fraction(0), Fraction(1), Fraction(0), Fraction(0), r)

    @classmethod
    def sqrt_r(cls, r: int) -> "Scalar":
        return cls(Fraction(0), Fraction(0), Fraction(1), Fraction(0), r)

    @property
    def components(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.q0, self.q1, self.q2, self.q3)

    @property
    def is_zero(self) -> bool:
        return not (self.q0 or self.q1 or self.q2 or self.q3)

    @property
    def is_rational(self) -> bool:
        return not (self.q1 or self.q2 or self.q3)

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.r != self.r:
                raise RingMismatchError(
                    f"Cannot combine scalars for r={self.r} and r={other.r}"
                )
            return other
        if isinstance(other, Rational):
            return Scalar.rational(Fraction(other), self.r)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(
            self.q0 + other.q0,
            self.q1 + other.q1,
            self.q2 + other.q2,
            self.q3 + other.q3,
            self.r,
        )

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.q0, -self.q1, -self.q2, -self.q3, self.r)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a0, a1, a2, a3 = self.components
        b0, b1, b2, b3 = other.components
        r = self.r
        # i*i = -1, s*s = r, i*(i*s) = -s, s*(i*s) = r*i
        return Scalar(
            a0 * b0 - a1 * b1 + r * a2 * b2 - r * a3 * b3,
            a0 * b1 + a1 * b0 + r * (a2 * b3 + a3 * b2),
            a0 * b2 + a2 * b0 - (a1 * b3 + a3 * b1),
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
            r,
        )

    __rmul__ = __mul__

    def conjugate(self, i: bool = False, s: bool = False) -> "Scalar":
        """Apply the ring automorphisms i -> -i and/or s -> -s."""
        q1 = -self.q1 if i else self.q1
        q2 = -self.q2 if s else self.q2
        q3 = self.q3
        if i != s:
            q3 = -q3
        return Scalar(self.q0, q1, q2, q3, self.r)

    def norm(self) -> Fraction:
        """Product of the four conjugates; a rational number."""
        half = self * self.conjugate(i=True)
        return (half * half.conjugate(s=True)).q0

    def inverse(self) -> "Scalar":
        """Multiplicative inverse.

        Raises:
            NotInvertibleError: For zero, or for a zero divisor (only possible
                when r is a perfect square).
        """
        if self.is_zero:
            raise NotInvertibleError("Division by zero scalar")
        norm = self.norm()
        if not norm:
            raise NotInvertibleError(
                f"Scalar {self} is a zero divisor for r={self.r} and has no inverse"
            )
        others = self.conjugate(i=True) * self.conjugate(s=True) * self.conjugate(i=True, s=True)
        return others.scale(1 / norm)

    def scale(self, factor: RationalLike) -> "Scalar":
        factor = Fraction(factor)
        return Scalar(
            self.q0 * factor, self.q1 * factor, self.q2 * factor, self.q3 * factor, self.r
        )

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_rational:
            if other.q0 == 0:
                raise NotInvertibleError("Division by zero scalar")
            return self.scale(1 / other.q0)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent: int) -> "Scalar":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Scalar.one(self.r)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.r == other.r and self.components == other.components
        if isinstance(other, Rational):
            return self.is_rational and self.q0 == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.q0)
        return hash((self.components, self.r))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        if self.is_rational:
            return f"({format_rational(self.q0)})"
        parts = []
        for value, label in zip(self.components, ("", "I", "S", "I*S")):
            if not value:
                continue
            magnitude = abs(value)
            if not label:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = label
            else:
                body = f"{format_rational(magnitude)}*{label}"
            if not parts:
                parts.append(f"-{body}" if value < 0 else body)
            else:
                parts.append(f" - {body}" if value < 0 else f" + {body}")
        return "(" + "".join(parts) + ")"

    def __repr__(self) -> str:
        return f"Scalar({self}, r={self.r})"


def kappa(r: int) -> Scalar:
    """The factor i*s/r in D = (i / sqrt(r)) d/dx."""
    return (Scalar.imaginary_unit(r) * Scalar.sqrt_r(r)).scale(Fraction(1, r))


def scalar_mul_div(x: Scalar, y: Scalar, mode: str) -> Scalar:
    """Multiply or divide two scalars of the same ring."""
    if mode == "multiply":
        return x * y
    if mode == "divide":
        return x / y
    raise ValueError(f"Unknown scalar mode: {mode}")
