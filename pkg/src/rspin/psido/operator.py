"""Truncated pseudodifferential operators in the symbol D.

An operator is a Laurent sum of p_k D^k with DiffPolynomial coefficients. The
symbol D is (i / sqrt(r)) d/dx, so moving D past a coefficient follows

    D o f = f o D + kappa * f',    kappa = i*s/r.

Operators with infinitely many negative orders are stored with a watermark:
coefficients at orders >= watermark are certified, everything below is
unknown and must never be read. A watermark of None marks an exactly known
operator (all omitted orders are zero).
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from rspin.diffalg import DiffPolynomial, Scalar, kappa
from rspin.errors import RingMismatchError, TruncationError


@lru_cache(maxsize=4096)
def generalized_binomial(k: int, j: int) -> Fraction:
    """C(k, j) = k (k-1) ... (k-j+1) / j! for any integer k."""
    numerator = Fraction(1)
    for step in range(j):
        numerator *= k - step
        numerator /= step + 1
    return numerator


@lru_cache(maxsize=1024)
def kappa_power(r: int, j: int) -> Scalar:
    return kappa(r) ** j


class PseudoDiffOp:
    """Sum of p_k D^k with an explicit certification watermark."""

    __slots__ = ("_r", "_coefficients", "_watermark")

    def __init__(
        self,
        r: int,
        coefficients: Optional[Mapping[int, DiffPolynomial]] = None,
        watermark: Optional[int] = None,
    ):
        self._r = r
        self._watermark = watermark
        kept: Dict[int, DiffPolynomial] = {}
        for order, poly in (coefficients or {}).items():
            if poly.r != r:
                raise RingMismatchError(f"Coefficient for r={poly.r} in operator for r={r}")
            if watermark is not None and order < watermark:
                continue
            if not poly.is_zero:
                kept[order] = poly
        self._coefficients = kept

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, r: int) -> "PseudoDiffOp":
        return cls(r)

    @classmethod
    def symbol(cls, r: int, order: int = 1) -> "PseudoDiffOp":
        """The exact operator D^order."""
        return cls(r, {order: DiffPolynomial.constant(1, r)})

    @classmethod
    def identity(cls, r: int) -> "PseudoDiffOp":
        return cls.symbol(r, 0)

    @classmethod
    def multiplication(cls, poly: DiffPolynomial) -> "PseudoDiffOp":
        """The exact operator of multiplication by a differential polynomial."""
        return cls(poly.r, {0: poly})

    @classmethod
    def differential(cls, r: int, coefficients: Mapping[int, DiffPolynomial]) -> "PseudoDiffOp":
        if any(order < 0 for order in coefficients):
            raise ValueError("A differential operator has no negative orders")
        return cls(r, coefficients)

    # -- accessors ---------------------------------------------------------

    @property
    def r(self) -> int:
        return self._r

    @property
    def watermark(self) -> Optional[int]:
        return self._watermark

    @property
    def is_exact(self) -> bool:
        return self._watermark is None

    @property
    def top(self) -> Optional[int]:
        """Highest nonzero order; watermark - 1 for a truncated zero, None for exact zero."""
        if self._coefficients:
            return max(self._coefficients)
        if self._watermark is None:
            return None
        return self._watermark - 1

    @property
    def is_zero(self) -> bool:
        """Exactly zero (no certified coefficient and no unknown tail)."""
        return not self._coefficients and self._watermark is None

    @property
    def is_differential(self) -> bool:
        return self.is_exact and all(order >= 0 for order in self._coefficients)

    def orders(self) -> List[int]:
        return sorted(self._coefficients, reverse=True)

    def coefficient(self, order: int) -> DiffPolynomial:
        """Coefficient of D^order.

        Raises:
            TruncationError: If order lies below the watermark.
        """
        if self._watermark is not None and order < self._watermark:
            raise TruncationError(
                f"Coefficient of D^{order} is below the watermark {self._watermark}"
            )
        return self._coefficients.get(order, DiffPolynomial.zero(self._r))

    def items(self) -> Iterator[Tuple[int, DiffPolynomial]]:
        for order in self.orders():
            yield order, self._coefficients[order]

    def truncate(self, watermark: int) -> "PseudoDiffOp":
        """Forget every coefficient below watermark."""
        if self._watermark is not None and watermark < self._watermark:
            raise TruncationError(
                f"Cannot lower the watermark from {self._watermark} to {watermark}"
            )
        return PseudoDiffOp(self._r, self._coefficients, watermark)

    # -- linear structure --------------------------------------------------

    def _check_ring(self, other: "PseudoDiffOp") -> None:
        if other._r != self._r:
            raise RingMismatchError(
                f"Cannot combine operators for r={self._r} and r={other._r}"
            )

    def __add__(self, other: "PseudoDiffOp") -> "PseudoDiffOp":
        if not isinstance(other, PseudoDiffOp):
            return NotImplemented
        self._check_ring(other)
        watermark = _weaker(self._watermark, other._watermark)
        terms = dict(self._coefficients)
        for order, poly in other._coefficients.items():
            terms[order] = terms[order] + poly if order in terms else poly
        return PseudoDiffOp(self._r, terms, watermark)

    def __neg__(self) -> "PseudoDiffOp":
        return PseudoDiffOp(
            self._r, {k: -p for k, p in self._coefficients.items()}, self._watermark
        )

    def __sub__(self, other: "PseudoDiffOp") -> "PseudoDiffOp":
        if not isinstance(other, PseudoDiffOp):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Union[Scalar, DiffPolynomial, int, Fraction]) -> "PseudoDiffOp":
        """Left multiplication by a scalar or a function."""
        if isinstance(factor, DiffPolynomial):
            return PseudoDiffOp(
                self._r, {k: factor * p for k, p in self._coefficients.items()}, self._watermark
            )
        return PseudoDiffOp(
            self._r, {k: p.scale(factor) for k, p in self._coefficients.items()}, self._watermark
        )

    # -- comparison and rendering -----------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, PseudoDiffOp):
            return NotImplemented
        return (
            self._r == other._r
            and self._watermark == other._watermark
            and self._coefficients == other._coefficients
        )

    def __hash__(self) -> int:
        return hash((self._r, self._watermark, frozenset(self._coefficients.items())))

    def __str__(self) -> str:
        parts = [f"({poly})*D^{order}" for order, poly in self.items()]
        text = " + ".join(parts) if parts else "0"
        if self._watermark is not None:
            text += f" + O(D^{self._watermark - 1})"
        return text

    def __repr__(self) -> str:
        return f"PseudoDiffOp({self}, r={self._r})"


def _weaker(left: Optional[int], right: Optional[int]) -> Optional[int]:
    """Watermark of a sum: the higher of the two, None only if both exact."""
    if left is None:
        return right
    if right is None:
        return left
    return max(left, right)


def _composition_watermark(a: PseudoDiffOp, b: PseudoDiffOp) -> Optional[int]:
    candidates = []
    if b.watermark is not None:
        candidates.append(a.top + b.watermark)
    if a.watermark is not None:
        candidates.append(a.watermark + b.top)
    return max(candidates) if candidates else None


def _compose(a: PseudoDiffOp, b: PseudoDiffOp, floor: Optional[int] = None) -> PseudoDiffOp:
    a._check_ring(b)
    r = a.r
    if a.is_zero or b.is_zero:
        return PseudoDiffOp.zero(r)
    watermark = _composition_watermark(a, b)
    if floor is not None:
        watermark = floor if watermark is None else max(watermark, floor)
    if watermark is None:
        has_negative = any(order < 0 for order in a.orders())
        if has_negative and not all(poly.is_constant for _, poly in b.items()):
            raise TruncationError(
                "Composition is an infinite series; a depth must be given"
            )

    derivatives: Dict[int, List[DiffPolynomial]] = {}
    terms: Dict[int, DiffPolynomial] = {}
    for k, f in a.items():
        for l, g in b.items():
            chain = derivatives.setdefault(l, [g])
            j = 0
            while True:
                order = k + l - j
                if watermark is not None and order < watermark:
                    break
                if k >= 0 and j > k:
                    break
                while len(chain) <= j:
                    chain.append(chain[-1].total_derivative())
                derived = chain[j]
                if derived.is_zero:
                    break
                factor = kappa_power(r, j).scale(generalized_binomial(k, j))
                contribution = (f * derived).scale(factor)
                terms[order] = terms[order] + contribution if order in terms else contribution
                j += 1
    return PseudoDiffOp(r, terms, watermark)


def compose(a: PseudoDiffOp, b: PseudoDiffOp, depth: Optional[int] = None) -> PseudoDiffOp:
    """Noncommutative product a o b.

    Args:
        a: Left factor.
        b: Right factor.
        depth: Number of orders to retain below top(a) + top(b). Required when
            both factors are exact but the product is an infinite series.

    Returns:
        The product with watermark max(top(a) + wm(b), wm(a) + top(b)),
        raised further by depth when given.
    """
    floor = None
    if depth is not None:
        if depth < 1:
            raise ValueError(f"depth must be positive, got {depth}")
        if not (a.is_zero or b.is_zero):
            floor = a.top + b.top - depth + 1
    return _compose(a, b, floor)


def split_parts(a: PseudoDiffOp) -> Tuple[PseudoDiffOp, PseudoDiffOp]:
    """Split into the differential part (orders >= 0) and the rest.

    The plus part is exact whenever the watermark of a is at most 0.
    """
    plus_terms = {k: p for k, p in a.items() if k >= 0}
    minus_terms = {k: p for k, p in a.items() if k < 0}
    plus_watermark = a.watermark if a.watermark is not None and a.watermark > 0 else None
    plus = PseudoDiffOp(a.r, plus_terms, plus_watermark)
    minus = PseudoDiffOp(a.r, minus_terms, a.watermark)
    return plus, minus


def residue(a: PseudoDiffOp) -> DiffPolynomial:
    """Coefficient of D^-1.

    Raises:
        TruncationError: If the watermark lies above -1.
    """
    if a.watermark is not None and a.watermark > -1:
        raise TruncationError(f"residue not certified: watermark is {a.watermark}")
    return a.coefficient(-1)


def commutator(a: PseudoDiffOp, b: PseudoDiffOp, depth: Optional[int] = None) -> PseudoDiffOp:
    """[a, b] = a o b - b o a."""
    return compose(a, b, depth) - compose(b, a, depth)


def power(a: PseudoDiffOp, exponent: int, depth: Optional[int] = None) -> PseudoDiffOp:
    if exponent < 0:
        raise ValueError(f"Only nonnegative powers are supported, got {exponent}")
    result = PseudoDiffOp.identity(a.r)
    for _ in range(exponent):
        result = compose(result, a, depth)
    return result


def certified_equal(a: PseudoDiffOp, b: PseudoDiffOp) -> bool:
    """Compare two operators down to the weaker of their watermarks."""
    a._check_ring(b)
    watermark = _weaker(a.watermark, b.watermark)
    orders = set(a.orders()) | set(b.orders())
    for order in orders:
        if watermark is not None and order < watermark:
            continue
        if a.coefficient(order) != b.coefficient(order):
            return False
    return True
