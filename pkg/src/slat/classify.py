"""Decidable classification properties of finite bounded meet semilattices.

The properties here are pairwise linked on finite instances: being
0-disjunctive, having an injective base-set map, and admitting trapping
witnesses for every strict pair all coincide.  Report generation refuses
to return a report whose internal cross-checks disagree.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import stone
from .core import Semilattice, arrow, down, nonzero_pairs_below, star
from .errors import BadPairError, TheoremViolationError
from .filters import enumerate_ultrafilters, tight_filters


def is_zero_disjunctive(S: Semilattice) -> bool:
    """Whenever 0 != e < f, some non-zero element below f avoids e."""
    for f, e in nonzero_pairs_below(S):  # here e < f after renaming: f is the larger
        if not any(
                x != S.zero and S.leq(x, f) and S.meet(x, e) == S.zero
                for x in S.elements()):
            return False
    return True


def is_separative(S: Semilattice) -> bool:
    """Distinct elements own distinct base sets in the ultrafilter space."""
    return stone.kappa_injective(stone.build_space(S))


def meet_separation(S: Semilattice) -> bool:
    """Any two distinct elements are told apart by a third.

    For e != f some g meets exactly one of them non-trivially.  The
    symmetric form is deliberate; the one-sided variant degenerates.
    """
    for e in S.elements():
        for f in S.elements():
            if e == f:
                continue
            if not any(
                    (S.meet(e, g) == S.zero) != (S.meet(f, g) == S.zero)
                    for g in S.elements()):
                return False
    return True


def trapping_witness(S: Semilattice, e: int, f: int) -> list[int] | None:
    """Witness family for the pair 0 != f < e, or None.

    The candidate is maximal: every non-zero element below e orthogonal
    to f.  If e does not refine into candidate + {f}, no smaller family
    works either, and when the candidate is empty there is nothing to
    witness with, so the pair is untrapped.
    """
    if f == S.zero or f == e or not S.leq(f, e):
        raise BadPairError(
            f"need 0 != f < e, got f={S.labels[f]!r} e={S.labels[e]!r}")
    W = sorted((down(S, {e}) & star(S, f)) - {S.zero})
    if W and arrow(S, e, W + [f]):
        return W
    return None


def satisfies_trapping(S: Semilattice) -> bool:
    return all(trapping_witness(S, e, f) is not None for e, f in nonzero_pairs_below(S))


@dataclass(frozen=True)
class ClassificationReport:
    """Classification verdicts plus the per-pair trapping witnesses.

    witnesses holds one entry per strict non-zero pair (e, f), carrying
    the witness family or None when the pair is untrapped.
    """

    zero_disjunctive: bool
    separative: bool
    meet_separation: bool
    trapping: bool
    tight_equals_ultrafilters: bool
    witnesses: tuple[tuple[tuple[int, int], tuple[int, ...] | None], ...]

    def booleans(self) -> dict[str, bool]:
        return {
            "zero_disjunctive": self.zero_disjunctive,
            "separative": self.separative,
            "meet_separation": self.meet_separation,
            "trapping": self.trapping,
            "tight_equals_ultrafilters": self.tight_equals_ultrafilters,
        }


def is_compactable_finite(S: Semilattice) -> ClassificationReport:
    """Classify a finite instance, failing loudly on internal mismatch.

    On finite instances tight filters and ultrafilters must coincide, and
    the 0-disjunctive, separative and trapping verdicts must agree; a
    disagreement means a bug, not a finding, hence the raise.
    """
    zd = is_zero_disjunctive(S)
    sep = is_separative(S)
    ms = meet_separation(S)
    trap = satisfies_trapping(S)
    ultra = {F.carrier for F in enumerate_ultrafilters(S)}
    tight = {F.carrier for F in tight_filters(S)}
    teu = ultra == tight
    if zd != sep:
        raise TheoremViolationError(
            f"0-disjunctive={zd} but separative={sep} on a finite instance")
    if trap != sep:
        raise TheoremViolationError(
            f"trapping={trap} but separative={sep} on a finite instance")
    if not teu:
        odd = sorted(tuple(sorted(c)) for c in ultra ^ tight)
        raise TheoremViolationError(
            f"tight filters differ from ultrafilters at carriers {odd}")
    witnesses = tuple(
        ((e, f), tuple(w) if (w := trapping_witness(S, e, f)) is not None else None)
        for e, f in nonzero_pairs_below(S))
    return ClassificationReport(zd, sep, ms, trap, teu, witnesses)
