"""Classification: 0-disjunctive, separative, meet separation, trapping."""

from __future__ import annotations

import itertools

import pytest

from conftest import idx
from slat.catalog import CatalogSpec, enumerate_catalog
from slat.classify import (
    is_compactable_finite,
    is_separative,
    is_zero_disjunctive,
    meet_separation,
    satisfies_trapping,
    trapping_witness,
)
from slat.core import arrow, down, nonzero_pairs_below, star
from slat.errors import BadPairError


def oracle_zero_disjunctive(S) -> bool:
    # straight from the definition, no shared helpers
    for f in S.nonzero():
        for e in S.nonzero():
            if e == f or S.meet(e, f) != e:
                continue  # need 0 != e < f
            if not any(
                S.meet(x, f) == x and x != S.zero and S.meet(x, e) == S.zero
                for x in S.elements()
            ):
                return False
    return True


def test_zero_disjunctive_fixtures(vee, chain3, bool1):
    assert is_zero_disjunctive(vee)
    assert not is_zero_disjunctive(chain3)
    assert is_zero_disjunctive(bool1)  # no pairs 0 != e < f: vacuous


def test_zero_disjunctive_matches_oracle():
    for S in enumerate_catalog(CatalogSpec(max_size=6)):
        assert is_zero_disjunctive(S) == oracle_zero_disjunctive(S)


def test_separative_fixtures(vee, chain3, bool1):
    assert is_separative(vee)
    assert not is_separative(chain3)
    assert is_separative(bool1)


def test_meet_separation_fixtures(vee, chain3, bool1):
    assert meet_separation(vee)
    assert not meet_separation(chain3)  # a and 1 meet exactly the same things
    assert meet_separation(bool1)  # g = 1 tells 0 from 1


def test_trapping_witness_vee(vee):
    a, b, one = idx(vee, "a"), idx(vee, "b"), vee.one
    assert trapping_witness(vee, one, a) == [b]
    assert trapping_witness(vee, one, b) == [a]


def test_trapping_witness_chain3(chain3):
    assert trapping_witness(chain3, chain3.one, idx(chain3, "a")) is None


def test_trapping_witness_requires_strict_pair(vee):
    a = idx(vee, "a")
    with pytest.raises(BadPairError):
        trapping_witness(vee, a, a)
    with pytest.raises(BadPairError):
        trapping_witness(vee, a, vee.one)  # not f < e
    with pytest.raises(BadPairError):
        trapping_witness(vee, a, vee.zero)


def test_trapping_witness_semantics():
    # any witness W must sit inside down(e) ^ star(f) and refine e
    for S in enumerate_catalog(CatalogSpec(max_size=6)):
        for e, f in nonzero_pairs_below(S):
            W = trapping_witness(S, e, f)
            if W is None:
                continue
            region = (down(S, [e]) & star(S, f)) - {S.zero}
            assert set(W) <= region
            assert arrow(S, e, list(W) + [f])


def test_trapping_witness_complete():
    # when no witness is reported, no subset of the region works either
    for S in enumerate_catalog(CatalogSpec(max_size=5)):
        for e, f in nonzero_pairs_below(S):
            if trapping_witness(S, e, f) is not None:
                continue
            region = sorted((down(S, [e]) & star(S, f)) - {S.zero})
            for r in range(1, len(region) + 1):
                for W in itertools.combinations(region, r):
                    assert not arrow(S, e, list(W) + [f])


def test_satisfies_trapping_fixtures(vee, chain3, bool1):
    assert satisfies_trapping(vee)
    assert not satisfies_trapping(chain3)
    assert satisfies_trapping(bool1)


def test_equivalences_exhaustive():
    for S in enumerate_catalog(CatalogSpec(max_size=6)):
        zd = is_zero_disjunctive(S)
        assert is_separative(S) == zd
        assert meet_separation(S) == zd
        assert satisfies_trapping(S) == zd


def test_compactability_report(vee, chain3):
    rep = is_compactable_finite(vee)
    assert rep.booleans() == {
        "zero_disjunctive": True,
        "separative": True,
        "meet_separation": True,
        "trapping": True,
        "tight_equals_ultrafilters": True,
    }
    pair_to_witness = dict(rep.witnesses)
    a = idx(vee, "a")
    assert pair_to_witness[(vee.one, a)] == (idx(vee, "b"),)

    rep3 = is_compactable_finite(chain3)
    bools = rep3.booleans()
    assert not bools["separative"]
    assert bools["tight_equals_ultrafilters"]
    assert dict(rep3.witnesses)[(chain3.one, idx(chain3, "a"))] is None


def test_report_on_all_catalog_instances():
    # the internal cross-checks must never trip on lawful instances
    for S in enumerate_catalog(CatalogSpec(max_size=6)):
        rep = is_compactable_finite(S)
        assert rep.booleans()["tight_equals_ultrafilters"]
