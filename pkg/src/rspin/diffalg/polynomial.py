"""Differential polynomials in the jet variables u_m^(k).

A DiffPolynomial is a finite sum of monomials in the commuting variables
u_m^(k) (field index 0 <= m <= r-2, derivative order k >= 0) with Scalar
coefficients. Values are immutable; every operation returns a new polynomial
in canonical form (no zero coefficients, variables sorted by (m, k)).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from rspin.diffalg.scalar import RationalLike, Scalar, format_rational
from rspin.errors import MissingVariableError, RingMismatchError


@dataclass(frozen=True, order=True)
class JetVariable:
    """The k-fold x-derivative of the field u_m."""

    m: int
    k: int = 0

    def __post_init__(self):
        if self.m < 0 or self.k < 0:
            raise ValueError(f"Jet variable indices must be nonnegative, got m={self.m}, k={self.k}")

    def derivative(self) -> "JetVariable":
        return JetVariable(self.m, self.k + 1)

    def __str__(self) -> str:
        if self.k == 0:
            return f"u{self.m}"
        return f"u{self.m}_{self.k}"


Monomial = Tuple[Tuple[JetVariable, int], ...]

ONE: Monomial = ()


def monomial_degree(monomial: Monomial) -> int:
    return sum(exponent for _, exponent in monomial)


def monomial_sort_key(monomial: Monomial):
    """Degree first, then lexicographic on ((m, k), exponent) pairs."""
    return (
        monomial_degree(monomial),
        tuple((var.m, var.k, exponent) for var, exponent in monomial),
    )


def format_monomial(monomial: Monomial) -> str:
    factors = []
    for var, exponent in monomial:
        factors.append(str(var) if exponent == 1 else f"{var}^{exponent}")
    return "*".join(factors)


@lru_cache(maxsize=65536)
def _multiply_monomials(left: Monomial, right: Monomial) -> Monomial:
    if not left:
        return right
    if not right:
        return left
    exponents: Dict[JetVariable, int] = dict(left)
    for var, exponent in right:
        exponents[var] = exponents.get(var, 0) + exponent
    return tuple(sorted(exponents.items()))


@lru_cache(maxsize=65536)
def _differentiate_monomial(monomial: Monomial) -> Tuple[Tuple[int, Monomial], ...]:
    """Leibniz rule: d/dx of a monomial as (integer coefficient, monomial) pairs."""
    result: List[Tuple[int, Monomial]] = []
    for index, (var, exponent) in enumerate(monomial):
        rest = list(monomial[:index]) + list(monomial[index + 1:])
        if exponent > 1:
            rest.append((var, exponent - 1))
        derived = _multiply_monomials(tuple(sorted(rest)), ((var.derivative(), 1),))
        result.append((exponent, derived))
    return tuple(result)


class DiffPolynomial:
    """Exact polynomial in jet variables with Scalar coefficients."""

    __slots__ = ("_r", "_terms")

    def __init__(self, r: int, terms: Optional[Mapping[Monomial, Scalar]] = None):
        if not isinstance(r, int) or r < 2:
            raise ValueError(f"Root index must be an integer >= 2, got {r!r}")
        self._r = r
        cleaned: Dict[Monomial, Scalar] = {}
        for monomial, coefficient in (terms or {}).items():
            if not isinstance(coefficient, Scalar):
                coefficient = Scalar.rational(coefficient, r)
            elif coefficient.r != r:
                raise RingMismatchError(
                    f"Coefficient for r={coefficient.r} in polynomial for r={r}"
                )
            for var, _ in monomial:
                if var.m > r - 2:
                    raise ValueError(f"Field index {var.m} out of range 0..{r - 2} for r={r}")
            if not coefficient.is_zero:
                cleaned[monomial] = coefficient
        self._terms = cleaned

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, r: int) -> "DiffPolynomial":
        return cls(r)

    @classmethod
    def constant(cls, value: Union[RationalLike, Scalar], r: int) -> "DiffPolynomial":
        return cls(r, {ONE: value})

    @classmethod
    def variable(cls, m: int, k: int, r: int) -> "DiffPolynomial":
        if not 0 <= m <= r - 2:
            raise ValueError(f"Field index {m} out of range 0..{r - 2} for r={r}")
        return cls(r, {((JetVariable(m, k), 1),): Scalar.one(r)})

    # -- accessors ---------------------------------------------------------

    @property
    def r(self) -> int:
        return self._r

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(monomial == ONE for monomial in self._terms)

    @property
    def constant_term(self) -> Scalar:
        return self._terms.get(ONE, Scalar.zero(self._r))

    def terms(self) -> List[Tuple[Monomial, Scalar]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda item: monomial_sort_key(item[0]))

    def coefficient(self, monomial: Monomial) -> Scalar:
        return self._terms.get(monomial, Scalar.zero(self._r))

    def variables(self) -> List[JetVariable]:
        found = {var for monomial in self._terms for var, _ in monomial}
        return sorted(found)

    def degree(self) -> int:
        return max((monomial_degree(m) for m in self._terms), default=0)

    def __iter__(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "DiffPolynomial":
        if isinstance(other, DiffPolynomial):
            if other._r != self._r:
                raise RingMismatchError(
                    f"Cannot combine polynomials for r={self._r} and r={other._r}"
                )
            return other
        if isinstance(other, (Scalar, Rational)):
            return DiffPolynomial.constant(other, self._r)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            if monomial in terms:
                terms[monomial] = terms[monomial] + coefficient
            else:
                terms[monomial] = coefficient
        return DiffPolynomial(self._r, terms)

    __radd__ = __add__

    def __neg__(self) -> "DiffPolynomial":
        return DiffPolynomial(self._r, {m: -c for m, c in self._terms.items()})

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

    def scale(self, factor: Union[Scalar, RationalLike]) -> "DiffPolynomial":
        if not isinstance(factor, Scalar):
            factor = Scalar.rational(factor, self._r)
        if factor.is_zero:
            return DiffPolynomial.zero(self._r)
        return DiffPolynomial(self._r, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Scalar, Rational)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Monomial, Scalar] = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                monomial = _multiply_monomials(left, right)
                product = a * b
                if monomial in terms:
                    terms[monomial] = terms[monomial] + product
                else:
                    terms[monomial] = product
        return DiffPolynomial(self._r, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "DiffPolynomial":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = DiffPolynomial.constant(1, self._r)
        for _ in range(exponent):
            result = result * self
        return result

    # -- calculus ----------------------------------------------------------

    def total_derivative(self) -> "DiffPolynomial":
        """x-derivative, with u_m^(k) -> u_m^(k+1) on each jet variable."""
        terms: Dict[Monomial, Scalar] = {}
        for monomial, coefficient in self._terms.items():
            for multiplicity, derived in _differentiate_monomial(monomial):
                contribution = coefficient.scale(multiplicity)
                if derived in terms:
                    terms[derived] = terms[derived] + contribution
                else:
                    terms[derived] = contribution
        return DiffPolynomial(self._r, terms)

    def nth_derivative(self, n: int) -> "DiffPolynomial":
        result = self
        for _ in range(n):
            if result.is_zero:
                break
            result = result.total_derivative()
        return result

    def partial(self, var: JetVariable) -> "DiffPolynomial":
        """Partial derivative by a single jet variable."""
        terms: Dict[Monomial, Scalar] = {}
        for monomial, coefficient in self._terms.items():
            exponents = dict(monomial)
            exponent = exponents.get(var)
            if not exponent:
                continue
            if exponent == 1:
                del exponents[var]
            else:
                exponents[var] = exponent - 1
            reduced = tuple(sorted(exponents.items()))
            contribution = coefficient.scale(exponent)
            terms[reduced] = terms[reduced] + contribution if reduced in terms else contribution
        return DiffPolynomial(self._r, terms)

    def evaluate_at(self, assignment: Mapping[JetVariable, RationalLike]) -> Scalar:
        """Substitute rationals for every jet variable.

        Raises:
            MissingVariableError: If a variable of the polynomial is not assigned.
        """
        total = Scalar.zero(self._r)
        for monomial, coefficient in self._terms.items():
            value = Fraction(1)
            for var, exponent in monomial:
                if var not in assignment:
                    raise MissingVariableError(f"No value assigned to jet variable {var}")
                value *= Fraction(assignment[var]) ** exponent
            total = total + coefficient.scale(value)
        return total

    # -- comparison and rendering -----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, DiffPolynomial):
            return self._r == other._r and self._terms == other._terms
        if isinstance(other, (Scalar, Rational)):
            return self == DiffPolynomial.constant(other, self._r)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._r, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        rendered = []
        for monomial, coefficient in self.terms():
            rendered.append(_format_term(monomial, coefficient))
        text = rendered[0]
        for term in rendered[1:]:
            if term.startswith("-"):
                text += f" - {term[1:]}"
            else:
                text += f" + {term}"
        return text

    def __repr__(self) -> str:
        return f"DiffPolynomial({self}, r={self._r})"


def _format_term(monomial: Monomial, coefficient: Scalar) -> str:
    if monomial == ONE:
        return format_rational(coefficient.q0) if coefficient.is_rational else str(coefficient)
    body = format_monomial(monomial)
    if coefficient.is_rational:
        value = coefficient.q0
        if value == 1:
            return body
        if value == -1:
            return f"-{body}"
        return f"{format_rational(value)}*{body}"
    return f"{coefficient}*{body}"


def poly_arith(p: DiffPolynomial, q: DiffPolynomial, mode: str) -> DiffPolynomial:
    """Add or multiply two differential polynomials."""
    if mode == "add":
        return p + q
    if mode == "multiply":
        return p * q
    raise ValueError(f"Unknown polynomial mode: {mode}")


def total_derivative(p: DiffPolynomial) -> DiffPolynomial:
    return p.total_derivative()


def evaluate_at(p: DiffPolynomial, assignment: Mapping[JetVariable, RationalLike]) -> Scalar:
    return p.evaluate_at(assignment)


def euler_operator(p: DiffPolynomial, m: int) -> DiffPolynomial:
    """Variational derivative sum_k (-d/dx)^k dp/du_m^(k)."""
    result = DiffPolynomial.zero(p.r)
    for var in p.variables():
        if var.m != m:
            continue
        term = p.partial(var).nth_derivative(var.k)
        result = result - term if var.k % 2 else result + term
    return result


def is_total_derivative(p: DiffPolynomial) -> bool:
    """Whether p = d/dx P for some differential polynomial P."""
    if not p.constant_term.is_zero:
        return False
    return all(euler_operator(p, m).is_zero for m in range(p.r - 1))

