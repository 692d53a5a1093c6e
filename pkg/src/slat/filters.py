"""Filters of a finite bounded meet semilattice.

A filter is a non-empty, meet-closed, upward-closed set of elements that
excludes zero.  In a finite semilattice every filter is the up-set of its
smallest member, so enumeration reduces to the non-zero principal up-sets;
the test suite asserts this identity against a raw subset scan.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .core import ElementSet, Semilattice, constrained_set, up
from .errors import NotAFilterError, ZeroElementError


@dataclass(frozen=True)
class Filter:
    lattice: Semilattice
    carrier: frozenset

    def __contains__(self, e: int) -> bool:
        return e in self.carrier

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.carrier))

    def labels(self) -> tuple[str, ...]:
        return self.lattice.labels_for(self.carrier)

    def sort_key(self) -> tuple:
        return (len(self.carrier), tuple(sorted(self.carrier)))


def is_filter(S: Semilattice, A: ElementSet) -> bool:
    """Check the filter axioms for a carrier set."""
    A = frozenset(A)
    if not A or S.zero in A:
        return False
    if any(not (0 <= e < len(S)) for e in A):
        return False
    for e in A:
        for f in A:
            if S.meet(e, f) not in A:
                return False
        for f in S.elements():
            if S.leq(e, f) and f not in A:
                return False
    return True


def _require_filter(S: Semilattice, F: Filter) -> None:
    if F.lattice != S or not is_filter(S, F.carrier):
        raise NotAFilterError(f"carrier {tuple(sorted(F.carrier))} fails the filter axioms")


def principal_filter(S: Semilattice, e: int) -> Filter:
    """The up-set of a non-zero element."""
    if e == S.zero:
        raise ZeroElementError("zero generates no filter")
    return Filter(S, up(S, {e}))


def enumerate_filters(S: Semilattice) -> list[Filter]:
    """All filters, smallest carriers first.

    Finite semilattices only have principal filters and distinct non-zero
    generators give distinct up-sets, so this is {e^up : e != 0}.
    """
    out = [principal_filter(S, e) for e in S.nonzero()]
    out.sort(key=Filter.sort_key)
    return out


def is_ultrafilter(S: Semilattice, F: Filter) -> bool:
    """Maximality via the meet criterion.

    F is an ultrafilter iff it already contains every element whose meet
    with each member of F is non-zero.  The suite asserts this agrees
    with literal maximality among all filters.
    """
    _require_filter(S, F)
    for b in S.elements():
        if b in F.carrier:
            continue
        if all(S.meet(b, c) != S.zero for c in F.carrier):
            return False
    return True


def extend_to_ultrafilter(S: Semilattice, e: int) -> Filter:
    """Grow the principal filter of e to an ultrafilter.

    Deterministic: repeatedly adjoin the smallest-index element compatible
    with the current generator.  The generator strictly decreases, so this
    terminates with the meet criterion satisfied.
    """
    if e == S.zero:
        raise ZeroElementError("zero extends to no ultrafilter")
    g = e
    while True:
        candidates = [b for b in S.elements()
                      if S.meet(b, g) != S.zero and not S.leq(g, b)]
        if not candidates:
            return principal_filter(S, g)
        g = S.meet(g, candidates[0])


def enumerate_ultrafilters(S: Semilattice) -> list[Filter]:
    return [F for F in enumerate_filters(S) if is_ultrafilter(S, F)]


@dataclass(frozen=True)
class TightViolation:
    """One witness that a filter fails tightness.

    pivot lies in the filter, excluded is disjoint from it, and candidate
    covers the constrained set of ({pivot}, excluded) while avoiding the
    filter.  vacuous marks the degenerate case where that constrained set
    is {0} and the empty cover suffices.
    """

    pivot: int
    excluded: frozenset
    candidate: frozenset
    vacuous: bool


def tight_violations(S: Semilattice, F: Filter) -> Iterator[TightViolation]:
    """Yield tightness failures in deterministic order.

    Only singleton pivots from F are needed: a finite subset of F bounds
    the same constrained set as its meet, which is again in F.  And only
    the maximal candidate matters: covering survives enlargement inside
    the constrained set, so if any filter-avoiding cover exists then the
    whole complement-in-the-constrained-set is one.
    """
    _require_filter(S, F)
    outside = sorted(set(S.elements()) - F.carrier - {S.zero})
    for pivot in sorted(F.carrier):
        for r in range(len(outside) + 1):
            for Y in itertools.combinations(outside, r):
                target = constrained_set(S, {pivot}, Y)
                candidate = target - F.carrier - {S.zero}
                nonzero = [x for x in target if x != S.zero]
                if all(any(S.meet(x, z) != S.zero for z in candidate) for x in nonzero):
                    yield TightViolation(pivot, frozenset(Y), candidate, vacuous=not nonzero)


def is_tight(S: Semilattice, F: Filter) -> bool:
    """A filter is tight when it meets every finite cover it constrains.

    Concretely: no pivot in F and excluded set disjoint from F admit a
    cover of their constrained set that avoids F entirely.  The vacuous
    constrained set {0} counts as covered by the empty family, so such a
    configuration already defeats tightness.
    """
    return next(tight_violations(S, F), None) is None


def tight_filters(S: Semilattice) -> list[Filter]:
    return [F for F in enumerate_filters(S) if is_tight(S, F)]
