"""Finite digraphs and the order-theoretic checks built on them.

Everything downstream (cobweb construction, realizer search, the brute
force oracle) works over the small vocabulary defined here: vertices
labelled by position and level, digraphs with deterministic iteration
order, chains, and reachability relations.  All reachability-style
computations use per-vertex integer bitmasks, which keeps them fast
enough that the exhaustive searches in the realizer module stay
practical for a few hundred vertices.
"""

from __future__ import annotations

import heapq
from bisect import insort
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator

__all__ = [
    "Arc",
    "Chain",
    "CheckResult",
    "CyclicInputError",
    "Digraph",
    "NotLinearExtensionError",
    "Relation",
    "Vertex",
    "VertexSetMismatchError",
    "is_acyclic",
    "is_admissible",
    "is_linear_extension",
    "is_regular",
    "iter_topological_orders",
    "reachability",
    "topological_order",
    "transitive_reduction",
]


class CyclicInputError(ValueError):
    """An operation defined only for acyclic digraphs was given a cycle."""


class VertexSetMismatchError(ValueError):
    """A chain does not cover exactly the vertex set it is checked against."""


class NotLinearExtensionError(ValueError):
    """A chain violates at least one arc of its digraph."""


@dataclass(frozen=True, order=True)
class Vertex:
    """Element at 1-based ``position`` within layer ``level``."""

    position: int
    level: int

    def __post_init__(self) -> None:
        if self.position < 1:
            raise ValueError(f"vertex position must be >= 1, got {self.position}")
        if self.level < 0:
            raise ValueError(f"vertex level must be >= 0, got {self.level}")

    def __str__(self) -> str:
        return f"{self.position},{self.level}"


Arc = tuple[Vertex, Vertex]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a predicate, with a witness when one makes sense.

    Truthiness mirrors ``ok``, so results can be used directly in
    conditions while the witness stays available for error reporting.
    For failed checks the witness pinpoints the violation (an arc, a
    vertex triple, a pair); for some successful checks it carries the
    object that proves success.
    """

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


class Digraph:
    """Loop-free directed graph over an ordered vertex set.

    Vertices keep their construction order and arcs keep first-insertion
    order, so every computation derived from a Digraph is deterministic.
    Duplicate arcs are dropped silently; duplicate vertices, loops and
    arcs with unknown endpoints are rejected.
    """

    __slots__ = ("vertices", "arcs", "_index", "_succ")

    def __init__(self, vertices: Iterable[Vertex], arcs: Iterable[Arc] = ()) -> None:
        vs = tuple(vertices)
        index: dict[Vertex, int] = {}
        for v in vs:
            if v in index:
                raise ValueError(f"duplicate vertex {v}")
            index[v] = len(index)
        succ: list[list[int]] = [[] for _ in vs]
        seen: set[tuple[int, int]] = set()
        kept: list[Arc] = []
        for tail, head in arcs:
            if tail not in index:
                raise ValueError(f"arc endpoint {tail} is not a vertex")
            if head not in index:
                raise ValueError(f"arc endpoint {head} is not a vertex")
            if tail == head:
                raise ValueError(f"loop at {tail}")
            key = (index[tail], index[head])
            if key in seen:
                continue
            seen.add(key)
            succ[key[0]].append(key[1])
            kept.append((tail, head))
        self.vertices = vs
        self.arcs = tuple(kept)
        self._index = index
        self._succ = succ

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: Vertex) -> bool:
        return v in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertices == other.vertices and set(self.arcs) == set(other.arcs)

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset(self.arcs)))

    def __repr__(self) -> str:
        return f"Digraph({len(self.vertices)} vertices, {len(self.arcs)} arcs)"

    def index(self, v: Vertex) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise KeyError(f"{v} is not a vertex of this digraph") from None

    def successors(self, v: Vertex) -> tuple[Vertex, ...]:
        return tuple(self.vertices[j] for j in self._succ[self.index(v)])


@dataclass(frozen=True)
class Relation:
    """A set of ordered vertex pairs over a fixed vertex tuple.

    Used both for reachability of a digraph and for the strict order of
    a poset; two relations compare equal when they relate the same
    vertices the same way, regardless of where they came from.
    """

    vertices: tuple[Vertex, ...]
    pairs: frozenset[Arc]
    source: Digraph | None = field(default=None, compare=False, repr=False)

    def __contains__(self, pair: Arc) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Arc]:
        return iter(self.pairs)


class Chain:
    """Total order on a vertex set, stored as an explicit sequence."""

    __slots__ = ("order", "_rank")

    def __init__(self, order: Iterable[Vertex]) -> None:
        self.order: tuple[Vertex, ...] = tuple(order)
        self._rank: dict[Vertex, int] = {v: i for i, v in enumerate(self.order)}
        if len(self._rank) != len(self.order):
            raise ValueError("chain repeats a vertex")

    def rank(self, v: Vertex) -> int:
        try:
            return self._rank[v]
        except KeyError:
            raise KeyError(f"{v} is not in the chain") from None

    def precedes(self, u: Vertex, v: Vertex) -> bool:
        """True when u comes no later than v (reflexive)."""
        return self.rank(u) <= self.rank(v)

    @property
    def vertex_set(self) -> frozenset[Vertex]:
        return frozenset(self._rank)

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.order)

    def __getitem__(self, i: int) -> Vertex:
        return self.order[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.order == other.order

    def __hash__(self) -> int:
        return hash(self.order)

    def __repr__(self) -> str:
        body = " -> ".join(str(v) for v in self.order[:8])
        if len(self.order) > 8:
            body += f" -> ... ({len(self.order)} vertices)"
        return f"Chain({body})"


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _kahn_order(n: int, succ: list[list[int]]) -> list[int] | None:
    """Smallest-index-first topological order, or None if there is a cycle."""
    indeg = [0] * n
    for heads in succ:
        for j in heads:
            indeg[j] += 1
    avail = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(avail)
    out: list[int] = []
    while avail:
        i = heapq.heappop(avail)
        out.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(avail, j)
    return out if len(out) == n else None


def is_acyclic(g: Digraph) -> bool:
    return _kahn_order(len(g), g._succ) is not None


def topological_order(g: Digraph) -> tuple[Vertex, ...]:
    """The lexicographically first topological order of g.

    Ties are broken by vertex construction order.  Raises
    CyclicInputError when no topological order exists.
    """
    order = _kahn_order(len(g), g._succ)
    if order is None:
        raise CyclicInputError("digraph contains a directed cycle")
    return tuple(g.vertices[i] for i in order)


def _reach_bits(g: Digraph) -> list[int]:
    """reach[i] = bitmask of vertex indices reachable from i via >= 1 arc."""
    order = _kahn_order(len(g), g._succ)
    if order is None:
        raise CyclicInputError("digraph contains a directed cycle")
    reach = [0] * len(g)
    for i in reversed(order):
        acc = 0
        for j in g._succ[i]:
            acc |= reach[j] | (1 << j)
        reach[i] = acc
    return reach


def reachability(g: Digraph) -> Relation:
    """All pairs (u, w) with a directed path of length >= 1 from u to w.

    The result is irreflexive because g is required to be acyclic
    (CyclicInputError otherwise).
    """
    reach = _reach_bits(g)
    vs = g.vertices
    pairs = frozenset(
        (vs[i], vs[j]) for i in range(len(vs)) for j in _iter_bits(reach[i])
    )
    return Relation(vs, pairs, source=g)


def _redundant_head_bits(g: Digraph, reach: list[int]) -> list[int]:
    """red[i] = heads j such that an arc (i, j) is implied by a longer path."""
    red = []
    for i in range(len(g)):
        acc = 0
        for j in g._succ[i]:
            acc |= reach[j]
        red.append(acc)
    return red


def transitive_reduction(g: Digraph) -> Digraph:
    """The unique minimal subgraph of g with the same reachability.

    Uniqueness holds because g is acyclic; an arc is dropped exactly
    when some longer path joins its endpoints.
    """
    red = _redundant_head_bits(g, _reach_bits(g))
    kept = [
        (t, h) for (t, h) in g.arcs if not (red[g._index[t]] >> g._index[h]) & 1
    ]
    return Digraph(g.vertices, kept)


def is_regular(g: Digraph) -> CheckResult:
    """Whether g equals its own transitive reduction.

    On failure the witness is the first redundant arc in insertion
    order, i.e. an arc whose endpoints are also joined by a longer path.
    """
    red = _redundant_head_bits(g, _reach_bits(g))
    for t, h in g.arcs:
        if (red[g._index[t]] >> g._index[h]) & 1:
            return CheckResult(False, (t, h))
    return CheckResult(True)


def _require_same_vertex_set(c: Chain, g: Digraph) -> None:
    if c.vertex_set != frozenset(g.vertices):
        raise VertexSetMismatchError(
            "chain does not cover exactly the digraph's vertex set"
        )


def is_linear_extension(c: Chain, g: Digraph) -> bool:
    """True when every arc of g goes forward along c.

    Requires c to cover exactly the vertices of g
    (VertexSetMismatchError otherwise).  A cyclic digraph has no linear
    extension, so the answer is then False for every chain.
    """
    _require_same_vertex_set(c, g)
    rank = c._rank
    return all(rank[t] < rank[h] for t, h in g.arcs)


def _chain_position_reach(c: Chain, g: Digraph, reach: list[int]) -> list[int]:
    """Remap reach masks from vertex indices to positions along c."""
    n = len(g)
    pos_of = [0] * n
    for p, v in enumerate(c.order):
        pos_of[g._index[v]] = p
    return _position_reach(pos_of, reach)


def _position_reach(pos_of: list[int], reach: list[int]) -> list[int]:
    n = len(pos_of)
    pos_reach = [0] * n
    for i in range(n):
        m = 0
        for j in _iter_bits(reach[i]):
            m |= 1 << pos_of[j]
        pos_reach[pos_of[i]] = m
    return pos_reach


def _admissibility_witness(pos_reach: list[int]) -> tuple[int, int, int] | None:
    """First forbidden triple of chain positions, or None if admissible.

    A triple p1 < p2 < p3 is forbidden when p1 and p2 are incomparable,
    p2 and p3 are incomparable, yet p3 is reachable from p1.  Positions
    are scanned in lexicographic order so the witness is deterministic.
    """
    n = len(pos_reach)
    full = (1 << n) - 1
    for p1 in range(n):
        r1 = pos_reach[p1]
        later = full >> (p1 + 1) << (p1 + 1)
        if not r1 & later:
            continue
        for p2 in _iter_bits(later & ~r1):
            hits = r1 & ~pos_reach[p2] & (full >> (p2 + 1) << (p2 + 1))
            if hits:
                p3 = (hits & -hits).bit_length() - 1
                return (p1, p2, p3)
    return None


def is_admissible(c: Chain, g: Digraph) -> CheckResult:
    """Whether chain c avoids every forbidden incomparability triple in g.

    The forbidden pattern is a triple x1 before x2 before x3 along c
    with x1 parallel to x2, x2 parallel to x3, but a directed path from
    x1 to x3.  Comparability means a path in either direction.  On
    failure the witness is the lexicographically first such triple
    (by chain positions).  Requires an acyclic g covering the same
    vertex set as c; c itself does not have to be a linear extension.
    """
    _require_same_vertex_set(c, g)
    pos_reach = _chain_position_reach(c, g, _reach_bits(g))
    hit = _admissibility_witness(pos_reach)
    if hit is None:
        return CheckResult(True)
    return CheckResult(False, tuple(c.order[p] for p in hit))


def _iter_index_orders(n: int, succ: list[list[int]]) -> Iterator[tuple[int, ...]]:
    """All topological orders of 0..n-1, lexicographically smallest first.

    Backtracking with an incrementally maintained sorted list of
    available (in-degree zero) vertices.  Yields nothing if the graph
    is cyclic.
    """
    indeg = [0] * n
    for heads in succ:
        for j in heads:
            indeg[j] += 1
    avail = sorted(i for i in range(n) if indeg[i] == 0)
    order: list[int] = []

    def walk() -> Iterator[tuple[int, ...]]:
        if len(order) == n:
            yield tuple(order)
            return
        for v in tuple(avail):
            avail.remove(v)
            order.append(v)
            for w in succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    insort(avail, w)
            yield from walk()
            for w in succ[v]:
                if indeg[w] == 0:
                    avail.remove(w)
                indeg[w] += 1
            order.pop()
            insort(avail, v)

    yield from walk()


def iter_topological_orders(g: Digraph, limit: int | None = None) -> Iterator[Chain]:
    """Yield every topological order of g as a Chain, lexicographically.

    ``limit`` caps the number of chains yielded.  Raises
    CyclicInputError when g has no topological order at all.
    """
    if limit is not None and limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    if not is_acyclic(g):
        raise CyclicInputError("digraph contains a directed cycle")
    count = 0
    for idx in _iter_index_orders(len(g), g._succ):
        yield Chain(g.vertices[i] for i in idx)
        count += 1
        if limit is not None and count >= limit:
            return
