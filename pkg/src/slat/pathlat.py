"""Path semilattices of rooted directed graphs.

Edges have first-class identifiers; loops and parallel edges are fine.
Paths are walked backwards from the root: a path is a sequence of edges
whose first edge targets the root and where each next edge targets the
source of the previous one.  Shorter paths sit higher (reverse prefix
order), the empty path is the top, and truncating at a finite depth and
adjoining a zero yields a bounded meet semilattice in which distinct
non-orthogonal elements are always comparable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Semilattice, up
from .errors import (
    BadDepthError,
    BadPairError,
    FormatError,
    NotRootedError,
    ZeroElementError,
)

_RESERVED_IDS = {"0", "^"}


@dataclass(frozen=True)
class RootedGraph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]  # (id, source, target)
    root: str

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise FormatError("duplicate vertices")
        if self.root not in self.vertices:
            raise FormatError(f"root {self.root!r} is not a declared vertex")
        ids = [e[0] for e in self.edges]
        if len(set(ids)) != len(ids):
            raise FormatError("duplicate edge identifiers")
        for eid, src, tgt in self.edges:
            if not eid or any(c.isspace() for c in eid) or set(eid) & set("#<=."):
                raise FormatError(f"bad edge id {eid!r}")
            if eid in _RESERVED_IDS:
                raise FormatError(f"edge id {eid!r} is reserved")
            if src not in self.vertices or tgt not in self.vertices:
                raise FormatError(f"edge {eid!r} references undeclared vertices")

    def edges_into(self, v: str) -> tuple[tuple[str, str, str], ...]:
        return tuple(e for e in self.edges if e[2] == v)

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self.vertices), f"root: {self.root}"]
        lines.extend(f"edge {eid} {src} {tgt}" for eid, src, tgt in self.edges)
        return "\n".join(lines) + "\n"


def parse_rooted_graph(text: str) -> RootedGraph:
    """Parse the graph text format: vertices, root, one edge per line."""
    vertices: tuple[str, ...] | None = None
    root: str | None = None
    edges: list[tuple[str, str, str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if vertices is not None:
                raise FormatError("duplicate vertices line")
            vertices = tuple(line[len("vertices:"):].split())
        elif line.startswith("root:"):
            if root is not None:
                raise FormatError("duplicate root line")
            parts = line[len("root:"):].split()
            if len(parts) != 1:
                raise FormatError("root line must name exactly one vertex")
            root = parts[0]
        elif line.startswith("edge "):
            parts = line.split()
            if len(parts) != 4:
                raise FormatError(f"bad edge line {line!r}, expected 'edge id src tgt'")
            edges.append((parts[1], parts[2], parts[3]))
        else:
            raise FormatError(f"unrecognized line {line!r}")
    if vertices is None or root is None:
        raise FormatError("graph needs a vertices line and a root line")
    return RootedGraph(vertices, tuple(edges), root)


def unreachable_vertices(G: RootedGraph) -> list[str]:
    """Vertices with no directed path to the root."""
    reached = {G.root}
    frontier = [G.root]
    while frontier:
        v = frontier.pop()
        for _, src, tgt in G.edges:
            if tgt == v and src not in reached:
                reached.add(src)
                frontier.append(src)
    return [v for v in G.vertices if v not in reached]


def validate_rooted(G: RootedGraph) -> bool:
    """Every vertex reaches the root."""
    return not unreachable_vertices(G)


def zero_disjunctive_graph(G: RootedGraph) -> bool:
    """Graph-side criterion: every in-degree is zero or at least two."""
    if not validate_rooted(G):
        raise NotRootedError(f"unreachable vertices: {unreachable_vertices(G)}")
    for v in G.vertices:
        d = len(G.edges_into(v))
        if d == 1:
            return False
    return True


def pseudofinite_graph(G: RootedGraph) -> bool:
    """Finite graphs always pass: between f < e only finite chains fit."""
    if not validate_rooted(G):
        raise NotRootedError(f"unreachable vertices: {unreachable_vertices(G)}")
    return True


def _path_labels(paths: list[tuple[str, ...]]) -> list[str]:
    ids = {eid for p in paths for eid in p}
    sep = "" if all(len(eid) == 1 for eid in ids) else "."
    out = []
    for p in paths:
        out.append("^" if not p else sep.join(p))
    return out


def truncate(G: RootedGraph, depth: int) -> Semilattice:
    """Bounded meet semilattice of backward paths of length at most depth.

    Element 0 is the adjoined zero, element 1 is the empty path at the
    root.  Two paths meet at the longer one when one extends the other
    and at zero otherwise.  Path labels concatenate edge ids (dotted when
    ids are not single symbols); '0' and '^' name the bounds.
    """
    if not validate_rooted(G):
        raise NotRootedError(f"unreachable vertices: {unreachable_vertices(G)}")
    if not isinstance(depth, int) or depth < 1:
        raise BadDepthError(f"depth must be a positive integer, got {depth!r}")
    paths: list[tuple[str, ...]] = [()]
    frontier: list[tuple[tuple[str, ...], str]] = [((), G.root)]
    for _ in range(depth):
        grown: list[tuple[tuple[str, ...], str]] = []
        for prefix, at in frontier:
            for eid, src, _ in G.edges_into(at):
                grown.append((prefix + (eid,), src))
        frontier = grown
        paths.extend(p for p, _ in grown)

    labels = ["0"] + _path_labels(paths)
    if len(set(labels)) != len(labels):
        raise FormatError("edge ids produce colliding path labels")
    n = len(labels)
    table = [[0] * n for _ in range(n)]
    for i, p in enumerate(paths, start=1):
        for j, q in enumerate(paths, start=1):
            if p[:len(q)] == q:
                table[i][j] = i  # p extends q, the longer path is lower
            elif q[:len(p)] == p:
                table[i][j] = j
            else:
                table[i][j] = 0
    return Semilattice(tuple(labels), tuple(tuple(r) for r in table), zero=0, one=1)


def level(S: Semilattice, e: int) -> int | float:
    """Size of the up-set; on truncations this is path length plus one.

    Zero sits below everything, so its level is the infinity sentinel.
    """
    if e == S.zero:
        return math.inf
    return len(up(S, {e}))


def covers_hat(S: Semilattice, e: int) -> frozenset:
    """Elements directly below e, with nothing strictly between."""
    if e == S.zero:
        raise ZeroElementError("zero has no lower covers")
    below = [f for f in S.elements() if f != e and S.leq(f, e)]
    return frozenset(
        f for f in below
        if not any(g != f and g != e and S.leq(f, g) and S.leq(g, e) for g in S.elements()))


def sibling_cover_witness(S: Semilattice, e: int, f: int) -> list[int]:
    """Constructive witness family for 0 != f < e on a truncation.

    Walks the chain from e down to f one cover at a time and collects, at
    each step, the non-zero covers other than the chosen child.  Every
    collected element is below e and orthogonal to f, and e refines into
    the collected family plus f.
    """
    if f == S.zero or f == e or not S.leq(f, e):
        raise BadPairError(
            f"need 0 != f < e, got f={S.labels[f]!r} e={S.labels[e]!r}")
    interval = sorted(
        (g for g in S.elements() if S.leq(f, g) and S.leq(g, e)),
        key=lambda g: len(up(S, {g})))
    witness: list[int] = []
    for g, child in zip(interval, interval[1:]):
        covs = covers_hat(S, g)
        if child not in covs:
            raise BadPairError(
                f"interval [{S.labels[f]!r}, {S.labels[e]!r}] is not a cover chain")
        witness.extend(s for s in sorted(covs) if s != child and s != S.zero)
    return witness
