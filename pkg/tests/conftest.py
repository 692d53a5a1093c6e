"""Shared fixtures: the small semilattices and graphs every module exercises."""

from __future__ import annotations

import pytest

from slat.core import Semilattice
from slat.pathlat import RootedGraph


@pytest.fixture
def vee() -> Semilattice:
    # two atoms under a common top, meet(a, b) = 0
    return Semilattice.from_order(
        ("0", "a", "b", "1"),
        (("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")),
    )


@pytest.fixture
def chain3() -> Semilattice:
    return Semilattice.from_order(("0", "a", "1"), (("0", "a"), ("a", "1")))


@pytest.fixture
def chain4() -> Semilattice:
    return Semilattice.from_order(
        ("0", "a", "b", "1"), (("0", "a"), ("a", "b"), ("b", "1"))
    )


@pytest.fixture
def bool1() -> Semilattice:
    # the two-element semilattice {0, 1}
    return Semilattice.from_order(("0", "1"), (("0", "1"),))


@pytest.fixture
def bool2() -> Semilattice:
    # powerset of a two-element set, ordered by inclusion
    return Semilattice.from_order(
        ("0", "p", "q", "1"),
        (("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")),
    )


@pytest.fixture
def two_loop() -> RootedGraph:
    # one vertex, two loops: backward paths are all words over {a, b}
    return RootedGraph(("t",), (("a", "t", "t"), ("b", "t", "t")), "t")


@pytest.fixture
def single_edge() -> RootedGraph:
    return RootedGraph(("r", "s"), (("a", "s", "r"),), "r")


def idx(S: Semilattice, label: str) -> int:
    return S.index(label)


def labels(S: Semilattice, xs) -> frozenset:
    return frozenset(S.labels[i] for i in xs)
