"""Exact arithmetic on finite sets of non-negative integers.

The central objects are sumsets ``A + B = {a + b}`` and difference sets
``D_A = {|a - b| : a != b}``.  A pair of non-empty sets is *strong* when its
sumset has the maximum possible cardinality ``|A| * |B|``, which happens
exactly when the difference sets are disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError, InternalCheckError


@dataclass(frozen=True)
class IntSet:
    """Immutable finite set of non-negative integers, stored strictly
    ascending.

    An empty ``IntSet`` is legal (it arises as the difference set of a
    singleton) but may not be used as a vertex label.
    """

    elements: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for x in self.elements:
            if not isinstance(x, int) or isinstance(x, bool):
                raise DomainError(f"IntSet elements must be integers, got {x!r}")
            if x < 0:
                raise DomainError(f"IntSet elements must be non-negative, got {x}")
        for a, b in zip(self.elements, self.elements[1:]):
            if a >= b:
                raise DomainError(
                    f"IntSet elements must be strictly increasing, got {self.elements}"
                )

    @classmethod
    def of(cls, *elements: int) -> IntSet:
        return cls.from_iterable(elements)

    @classmethod
    def from_iterable(cls, elements: Iterable[int]) -> IntSet:
        """Build an IntSet from any iterable, sorting and deduplicating."""
        return cls(tuple(sorted(set(elements))))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __bool__(self) -> bool:
        return bool(self.elements)

    def intersects(self, other: IntSet) -> bool:
        return not set(self.elements).isdisjoint(other.elements)

    def to_json(self) -> list[int]:
        return list(self.elements)

    @classmethod
    def from_json(cls, data: Iterable[int]) -> IntSet:
        return cls.from_iterable(data)


def _require_nonempty(*sets: IntSet) -> None:
    for s in sets:
        if not s:
            raise DomainError("operation requires a non-empty set")


def sumset(a: IntSet, b: IntSet) -> IntSet:
    """Return ``{x + y : x in a, y in b}``.  Both arguments must be non-empty."""
    _require_nonempty(a, b)
    return IntSet.from_iterable(x + y for x in a for y in b)


def difference_set(a: IntSet) -> IntSet:
    """Return the non-zero absolute differences of distinct elements of ``a``.

    Zero is excluded: the set is taken over *distinct* pairs, so a singleton
    has an empty difference set.  This is the convention under which
    strongness of a pair is equivalent to disjointness of difference sets.
    """
    _require_nonempty(a)
    els = a.elements
    return IntSet.from_iterable(
        els[j] - els[i] for i in range(len(els)) for j in range(i + 1, len(els))
    )


def is_strong_pair(a: IntSet, b: IntSet, *, cross_check: bool = True) -> bool:
    """True iff ``|sumset(a, b)| == |a| * |b|``.

    Equivalently (and this is what gets returned) the difference sets of
    ``a`` and ``b`` are disjoint.  With ``cross_check`` enabled both criteria
    are evaluated and compared; a disagreement means this module is broken
    and raises ``InternalCheckError``.
    """
    _require_nonempty(a, b)
    disjoint = not difference_set(a).intersects(difference_set(b))
    if cross_check:
        by_cardinality = len(sumset(a, b)) == len(a) * len(b)
        if by_cardinality != disjoint:
            raise InternalCheckError(
                f"strongness criteria disagree for {a.elements} and {b.elements}: "
                f"cardinality says {by_cardinality}, difference sets say {disjoint}"
            )
    return disjoint


def translate(a: IntSet, t: int) -> IntSet:
    """Return ``{x + t : x in a}``.  Translation preserves the difference set."""
    _require_nonempty(a)
    if t < 0:
        raise DomainError(f"translation offset must be non-negative, got {t}")
    return IntSet(tuple(x + t for x in a.elements))
