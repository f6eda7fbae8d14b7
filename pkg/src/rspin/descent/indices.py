"""Index bookkeeping: the decomposition mtilde = a*r + m and type tuples."""
from dataclasses import dataclass, replace
from typing import Iterable, Tuple

from rspin.errors import TypeTupleError


@dataclass(frozen=True, order=True)
class IndexPair:
    """The pair (a, m) with mtilde = a*r + m."""

    a: int
    m: int
    r: int

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"Root index must be >= 2, got {self.r}")
        if self.a < 0:
            raise ValueError(f"a must be nonnegative, got {self.a}")
        if not -1 <= self.m <= self.r - 1:
            raise ValueError(f"m must lie in -1..{self.r - 1}, got {self.m}")

    @property
    def mtilde(self) -> int:
        return self.a * self.r + self.m

    @property
    def vanishing(self) -> bool:
        """m = r - 1, i.e. mtilde = -1 mod r."""
        return self.m == self.r - 1


def decompose_index(mtilde: int, r: int) -> IndexPair:
    """Unique (a, m) with mtilde = a*r + m and 0 <= m <= r - 1."""
    if mtilde < 0:
        raise ValueError(f"mtilde must be nonnegative, got {mtilde}")
    a, m = divmod(mtilde, r)
    return IndexPair(a, m, r)


@dataclass(frozen=True)
class TypeTuple:
    """An n-tuple of type entries on a genus-g curve.

    Entries are >= -1 and at most one entry equals -1; with two or more
    negative entries the descent relations are not defined.
    """

    entries: Tuple[int, ...]
    r: int
    genus: int = 0

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if self.r < 2:
            raise ValueError(f"Root index must be >= 2, got {self.r}")
        if self.genus < 0:
            raise ValueError(f"Genus must be nonnegative, got {self.genus}")
        if any(entry < -1 for entry in self.entries):
            raise TypeTupleError(f"Type entries must be >= -1, got {self.entries}")
        if sum(1 for entry in self.entries if entry < 0) > 1:
            raise TypeTupleError(
                f"At most one type entry may equal -1, got {self.entries}"
            )

    @classmethod
    def of(cls, entries: Iterable[int], r: int, genus: int = 0) -> "TypeTuple":
        return cls(tuple(entries), r, genus)

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, position: int) -> int:
        """Entry at a 1-based marked-point position."""
        self._check_position(position)
        return self.entries[position - 1]

    def with_entry(self, position: int, value: int) -> "TypeTuple":
        self._check_position(position)
        entries = list(self.entries)
        entries[position - 1] = value
        return replace(self, entries=tuple(entries))

    def shifted(self, position: int) -> "TypeTuple":
        """t + r * delta_position."""
        return self.with_entry(position, self.entry(position) + self.r)

    def reduced(self) -> Tuple[int, ...]:
        """Entries reduced mod r into 0..r-1."""
        return tuple(entry % self.r for entry in self.entries)

    def _check_position(self, position: int) -> None:
        if not 1 <= position <= len(self.entries):
            raise ValueError(
                f"Position {position} out of range 1..{len(self.entries)}"
            )

    def __str__(self) -> str:
        return "(" + ", ".join(str(entry) for entry in self.entries) + ")"


def same_component(left: TypeTuple, right: TypeTuple) -> bool:
    """Tuples congruent mod r label canonically isomorphic components."""
    return (
        left.r == right.r
        and left.genus == right.genus
        and len(left) == len(right)
        and left.reduced() == right.reduced()
    )
