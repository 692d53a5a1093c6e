"""The ultrafilter space of a finite bounded meet semilattice.

Points are ultrafilters.  Each element e owns the base set K(e) of
ultrafilters containing it, base sets generate the topology, and the
clopen algebra is materialized extensionally.  Nothing assumes the space
is discrete; that it comes out discrete on finite instances is observed
by the test suite, not baked in.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import ElementSet, Semilattice
from .errors import (
    BadBasisError,
    NotAFilterError,
    NotAHomomorphismError,
    NotARepresentationError,
    PreconditionFailedError,
    SamePointError,
    TheoremViolationError,
    UndecomposableError,
)
from .filters import Filter, enumerate_filters, enumerate_ultrafilters, is_filter, is_ultrafilter


def _point_set_key(ps: frozenset) -> tuple:
    return (len(ps), tuple(sorted(ps)))


@dataclass(frozen=True)
class UltrafilterSpace:
    lattice: Semilattice
    points: tuple[Filter, ...]
    base: tuple[frozenset, ...]  # indexed by element: point indices whose filter holds it

    def point_index(self, F: Filter) -> int:
        for i, P in enumerate(self.points):
            if P == F:
                return i
        raise ValueError("not a point of this space")


def build_space(S: Semilattice) -> UltrafilterSpace:
    """Materialize the ultrafilter space and verify its base laws."""
    points = tuple(enumerate_ultrafilters(S))
    base = tuple(
        frozenset(i for i, U in enumerate(points) if e in U.carrier)
        for e in S.elements())
    full = frozenset(range(len(points)))
    if base[S.zero] or base[S.one] != full:
        raise TheoremViolationError("base sets at the bounds are wrong")
    for e in S.nonzero():
        if not base[e]:
            raise TheoremViolationError(
                f"non-zero element {S.labels[e]!r} lies in no ultrafilter")
    for e in S.elements():
        for f in S.elements():
            if base[S.meet(e, f)] != base[e] & base[f]:
                raise TheoremViolationError(
                    f"base sets fail the meet law at ({S.labels[e]!r}, {S.labels[f]!r})")
    return UltrafilterSpace(S, points, base)


def kappa(space: UltrafilterSpace, e: int) -> frozenset:
    """Base set of an element: the points whose ultrafilter contains it."""
    if not (0 <= e < len(space.lattice)):
        raise ValueError(f"element index {e} out of range")
    return space.base[e]


def kappa_injective(space: UltrafilterSpace) -> bool:
    return len(set(space.base)) == len(space.base)


def hausdorff_witness(space: UltrafilterSpace, F: Filter, G: Filter) -> tuple[int, int]:
    """Elements (e, f) with e in F, f in G and disjoint base sets.

    Deterministic: e is the smallest index in F but not G, and f is the
    smallest member of G orthogonal to e, which exists by maximality.
    """
    if F == G:
        raise SamePointError("need two distinct points")
    space.point_index(F)
    space.point_index(G)
    S = space.lattice
    e = min(F.carrier - G.carrier)
    f = min(g for g in G.carrier if S.meet(e, g) == S.zero)
    if space.base[e] & space.base[f]:
        raise TheoremViolationError("separating base sets intersect")
    return (e, f)


def opens(space: UltrafilterSpace) -> list[frozenset]:
    """Every open set: all unions of base sets, exactly."""
    distinct = sorted(set(space.base), key=_point_set_key)
    found = {frozenset()}
    for r in range(1, len(distinct) + 1):
        for combo in itertools.combinations(distinct, r):
            found.add(frozenset().union(*combo))
    return sorted(found, key=_point_set_key)


@dataclass(frozen=True)
class ClopenAlgebra:
    """The Boolean algebra of clopen point sets, listed extensionally."""

    universe: frozenset
    elements: tuple[frozenset, ...]

    def meet(self, a: frozenset, b: frozenset) -> frozenset:
        return a & b

    def join(self, a: frozenset, b: frozenset) -> frozenset:
        return a | b

    def complement(self, a: frozenset) -> frozenset:
        return self.universe - a


def clopen_algebra(space: UltrafilterSpace) -> ClopenAlgebra:
    """Opens with open complement, checked to form a Boolean algebra."""
    os = set(opens(space))
    universe = frozenset(range(len(space.points)))
    elems = sorted((o for o in os if universe - o in os), key=_point_set_key)
    got = set(elems)
    for e in space.lattice.elements():
        if space.base[e] not in got:
            raise TheoremViolationError(
                f"base set of {space.lattice.labels[e]!r} is not clopen")
    for a in elems:
        for b in elems:
            if a & b not in got or a | b not in got:
                raise TheoremViolationError("clopens not closed under set operations")
    return ClopenAlgebra(universe, tuple(elems))


def join_decomposition(space: UltrafilterSpace, C: Iterable[int]) -> list[int]:
    """Write a clopen as a union of base sets, greedily.

    Takes every non-zero element whose base set sits inside C and checks
    the union comes back exactly.  The empty clopen decomposes as the
    empty list.  Point sets that are not unions of base sets are rejected.
    """
    C = frozenset(C)
    S = space.lattice
    picks = [e for e in S.nonzero() if space.base[e] <= C]
    union = frozenset().union(*(space.base[e] for e in picks)) if picks else frozenset()
    if union != C:
        raise UndecomposableError(
            f"point set {sorted(C)} is not a union of base sets")
    return picks


def dense_check(space: UltrafilterSpace) -> bool:
    """Does the lattice embed densely into its clopen algebra?

    Two things must hold: the base-set map is injective, so the lattice
    really sits inside the algebra, and every non-empty clopen contains a
    non-empty base set of a non-zero element.
    """
    if not kappa_injective(space):
        return False
    S = space.lattice
    nonzero_bases = [space.base[e] for e in S.nonzero() if space.base[e]]
    for C in clopen_algebra(space).elements:
        if C and not any(b <= C for b in nonzero_bases):
            return False
    return True


@dataclass(frozen=True)
class Representation:
    """A 0/1 assignment preserving bounds and meets."""

    lattice: Semilattice
    values: tuple[int, ...]


def is_representation(S: Semilattice, values: tuple[int, ...]) -> bool:
    if len(values) != len(S) or any(v not in (0, 1) for v in values):
        return False
    if values[S.zero] != 0 or values[S.one] != 1:
        return False
    for e in S.elements():
        for f in S.elements():
            if values[S.meet(e, f)] != values[e] * values[f]:
                return False
    return True


def rep_of_filter(S: Semilattice, F: Filter) -> Representation:
    """Characteristic function of a filter."""
    if F.lattice != S or not is_filter(S, F.carrier):
        raise NotAFilterError("carrier fails the filter axioms")
    return Representation(S, tuple(1 if e in F.carrier else 0 for e in S.elements()))


def filter_of_rep(S: Semilattice, rep: Representation) -> Filter:
    """Preimage of 1, which the representation laws force to be a filter."""
    if rep.lattice != S or not is_representation(S, rep.values):
        raise NotARepresentationError("values fail the representation laws")
    return Filter(S, frozenset(e for e in S.elements() if rep.values[e] == 1))


def filterspace_nbhd(S: Semilattice, e: int, es: Iterable[int]) -> list[Filter]:
    """Basic neighbourhood in the space of all filters.

    Filters containing e and omitting each listed element; the listed
    elements must sit below e.
    """
    es = tuple(es)
    bad = [x for x in es if not S.leq(x, e)]
    if bad:
        raise BadBasisError(
            f"basis elements {S.labels_for(bad)} are not below {S.labels[e]!r}")
    return [F for F in enumerate_filters(S)
            if e in F.carrier and all(x not in F.carrier for x in es)]


@dataclass(frozen=True)
class FiniteBooleanAlgebra:
    """Powerset algebra on a finite atom set; elements are atom subsets."""

    atoms: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.atoms)) != len(self.atoms):
            raise ValueError("atoms must be distinct")

    @property
    def bottom(self) -> frozenset:
        return frozenset()

    @property
    def top(self) -> frozenset:
        return frozenset(self.atoms)

    def elements(self) -> list[frozenset]:
        out = [frozenset()]
        for r in range(1, len(self.atoms) + 1):
            out.extend(frozenset(c) for c in itertools.combinations(sorted(self.atoms), r))
        return sorted(out, key=lambda s: (len(s), tuple(sorted(s))))

    def meet(self, a: frozenset, b: frozenset) -> frozenset:
        return a & b

    def join(self, a: frozenset, b: frozenset) -> frozenset:
        return a | b

    def complement(self, a: frozenset) -> frozenset:
        return self.top - a


def _check_bounded_hom(S: Semilattice, B: FiniteBooleanAlgebra,
                       alpha: Mapping[int, frozenset]) -> None:
    for e in S.elements():
        if e not in alpha:
            raise NotAHomomorphismError(f"no image for element {S.labels[e]!r}")
        if not frozenset(alpha[e]) <= B.top:
            raise NotAHomomorphismError(f"image of {S.labels[e]!r} uses unknown atoms")
    if frozenset(alpha[S.zero]) != B.bottom:
        raise NotAHomomorphismError("zero must map to the bottom")
    if frozenset(alpha[S.one]) != B.top:
        raise NotAHomomorphismError("one must map to the top")
    for e in S.elements():
        for f in S.elements():
            if frozenset(alpha[S.meet(e, f)]) != frozenset(alpha[e]) & frozenset(alpha[f]):
                raise NotAHomomorphismError(
                    f"meets not preserved at ({S.labels[e]!r}, {S.labels[f]!r})")


def extend_hom(S: Semilattice, B: FiniteBooleanAlgebra,
               alpha: Mapping[int, frozenset]) -> dict[frozenset, frozenset]:
    """Extend a bounded homomorphism through the clopen algebra.

    Requires the base-set map to be injective and, for every atom of B,
    the pullback {e : atom in alpha(e)} to be an ultrafilter.  The
    extension sends a clopen C to the atoms whose pullback point lies in
    C; by construction it matches alpha on base sets.  The result is
    verified to be a Boolean homomorphism and to agree with the greedy
    join-decomposition route, which pins uniqueness.
    """
    _check_bounded_hom(S, B, alpha)
    space = build_space(S)
    if not kappa_injective(space):
        raise PreconditionFailedError("base-set map is not injective, no embedding to extend")

    pull_point: dict[str, int] = {}
    for atom in B.atoms:
        carrier = frozenset(e for e in S.elements() if atom in alpha[e])
        if not is_filter(S, carrier):
            raise PreconditionFailedError(
                f"pullback at atom {atom!r} is not a filter")
        F = Filter(S, carrier)
        if not is_ultrafilter(S, F):
            raise PreconditionFailedError(
                f"pullback at atom {atom!r} is not an ultrafilter")
        pull_point[atom] = space.point_index(F)

    algebra = clopen_algebra(space)
    beta = {
        C: frozenset(atom for atom in B.atoms if pull_point[atom] in C)
        for C in algebra.elements}

    for e in S.elements():
        if beta[space.base[e]] != frozenset(alpha[e]):
            raise TheoremViolationError(
                f"extension disagrees with the map at {S.labels[e]!r}")
    if beta[frozenset()] != B.bottom or beta[algebra.universe] != B.top:
        raise TheoremViolationError("extension breaks the bounds")
    for C in algebra.elements:
        if beta[algebra.complement(C)] != B.complement(beta[C]):
            raise TheoremViolationError("extension breaks complement")
        for D in algebra.elements:
            if beta[C & D] != beta[C] & beta[D] or beta[C | D] != beta[C] | beta[D]:
                raise TheoremViolationError("extension breaks meet or join")
    for C in algebra.elements:
        parts = join_decomposition(space, C)
        via_parts = frozenset().union(*(frozenset(alpha[e]) for e in parts)) if parts else frozenset()
        if via_parts != beta[C]:
            raise TheoremViolationError("decomposition route disagrees with the extension")
    return beta
