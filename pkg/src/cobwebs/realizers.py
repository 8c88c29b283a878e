"""Two-chain realizers and the orderability decision for DAGs.

A DAG is orderable when it is the Hasse diagram of a poset whose order
dimension is at most 2, i.e. when the reflexive closure of its
reachability equals the intersection of two total orders.  The
construction implemented here searches for an admissible linear
extension; reversing its incomparable pairs yields the second chain
whenever the resulting tournament is transitive.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass

from .cobweb import CobwebPoset
from .graphs import (
    Arc,
    Chain,
    CheckResult,
    CyclicInputError,
    Digraph,
    NotLinearExtensionError,
    Vertex,
    VertexSetMismatchError,
    _admissibility_witness,
    _chain_position_reach,
    _iter_bits,
    _iter_index_orders,
    _position_reach,
    _reach_bits,
    is_acyclic,
    is_linear_extension,
    is_regular,
    reachability,
)

__all__ = [
    "ConjugateCycleError",
    "NoAdmissibleChain",
    "NonTransitiveConjugate",
    "NotRegular",
    "Orderable",
    "OrderabilityVerdict",
    "Realizer",
    "ascending_chain",
    "conjugate_chain",
    "decide_orderable",
    "descending_chain",
    "intersect_chains",
    "verify_realizer",
]

DEFAULT_SEARCH_BUDGET = 1_000_000


class ConjugateCycleError(ValueError):
    """The conjugate candidate relation contains a directed cycle.

    Carries the offending cycle as a tuple of vertices, each preceding
    the next in the candidate relation and the last preceding the first.
    """

    def __init__(self, cycle: tuple[Vertex, ...]) -> None:
        super().__init__(
            "conjugate relation has a cycle: " + " -> ".join(str(v) for v in cycle)
        )
        self.cycle = cycle


def ascending_chain(p: CobwebPoset) -> Chain:
    """All vertices of p by level, left to right within each level."""
    return Chain(v for level in p.levels for v in level)


def descending_chain(p: CobwebPoset) -> Chain:
    """All vertices of p by level, right to left within each level."""
    return Chain(v for level in p.levels for v in reversed(level))


def intersect_chains(a: Chain, b: Chain) -> frozenset[Arc]:
    """Pairs (u, v) that both chains order the same way, u no later than v.

    The result is reflexive and is a partial order whenever both chains
    cover the same vertex set, which is required
    (VertexSetMismatchError otherwise).
    """
    if a.vertex_set != b.vertex_set:
        raise VertexSetMismatchError("chains cover different vertex sets")
    rank_b = b._rank
    pairs: set[Arc] = set()
    for i, u in enumerate(a.order):
        bu = rank_b[u]
        for v in a.order[i:]:
            if bu <= rank_b[v]:
                pairs.add((u, v))
    return frozenset(pairs)


@dataclass(frozen=True)
class Realizer:
    """Two chains claimed to intersect in the target digraph's order."""

    first: Chain
    second: Chain
    target: Digraph


@dataclass(frozen=True)
class Orderable:
    """The digraph is the Hasse diagram of an order of dimension <= 2."""

    realizer: Realizer


@dataclass(frozen=True)
class NotRegular:
    """The digraph is not its own transitive reduction; witness arc attached."""

    witness: Arc


@dataclass(frozen=True)
class NoAdmissibleChain:
    """No admissible linear extension was found.

    Conclusive when ``exhaustive`` is True; otherwise the search budget
    ran out before the space of topological orders was covered.
    """

    exhaustive: bool = True


@dataclass(frozen=True)
class NonTransitiveConjugate:
    """Every admissible chain tried had a cyclic conjugate relation.

    Kept for completeness of the verdict taxonomy; ``cycle`` records one
    offending cycle.  The same exhaustiveness caveat as for
    NoAdmissibleChain applies.
    """

    cycle: tuple[Vertex, ...]
    exhaustive: bool = True


OrderabilityVerdict = Orderable | NotRegular | NoAdmissibleChain | NonTransitiveConjugate


def verify_realizer(r: Realizer) -> CheckResult:
    """Check the realizer's defining equation directly.

    The intersection of the two chains must equal the reflexive closure
    of the target's reachability.  On mismatch the witness is the
    first differing pair (by target vertex order).  Chains that fail to
    cover the target's vertex set raise VertexSetMismatchError.
    """
    if r.first.vertex_set != frozenset(r.target.vertices):
        raise VertexSetMismatchError(
            "realizer chains do not cover the target's vertex set"
        )
    got = intersect_chains(r.first, r.second)
    expected = set(reachability(r.target).pairs)
    expected.update((v, v) for v in r.target.vertices)
    diff = got.symmetric_difference(expected)
    if not diff:
        return CheckResult(True)
    idx = r.target._index
    witness = min(diff, key=lambda pair: (idx[pair[0]], idx[pair[1]]))
    return CheckResult(False, witness)


def conjugate_chain(x: Chain, g: Digraph) -> Chain:
    """The chain that reverses exactly the incomparable pairs of x.

    Comparable pairs (joined by a directed path in g) keep their order
    from x; incomparable pairs are flipped.  The result is a total
    order exactly when that candidate relation is transitive; otherwise
    ConjugateCycleError carries a witness cycle.  x must be a linear
    extension of g (NotLinearExtensionError otherwise, which also
    covers cyclic g since those have no linear extensions).
    """
    if not is_linear_extension(x, g):
        raise NotLinearExtensionError("chain is not a linear extension of the digraph")
    n = len(g)
    pos_reach = _chain_position_reach(x, g, _reach_bits(g))
    pred = [0] * n
    for p in range(n):
        for q in _iter_bits(pos_reach[p]):
            pred[q] |= 1 << p
    # p beats q when q is reachable from p, or q precedes p in x with
    # no path between them.  x being an extension keeps reach forward,
    # so the two cases never overlap.
    beats = [
        pos_reach[p] | (((1 << p) - 1) & ~pred[p]) for p in range(n)
    ]
    remaining = (1 << n) - 1
    out: list[Vertex] = []
    while remaining:
        pick = -1
        for p in _iter_bits(remaining):
            if beats[p] & remaining == remaining & ~(1 << p):
                pick = p
                break
        if pick < 0:
            raise ConjugateCycleError(_tournament_cycle(beats, remaining, x))
        out.append(x.order[pick])
        remaining &= ~(1 << pick)
    return Chain(out)


def _tournament_cycle(
    beats: list[int], remaining: int, x: Chain
) -> tuple[Vertex, ...]:
    """Locate a directed cycle in the restriction of beats to remaining."""
    visited: set[int] = set()
    for root in _iter_bits(remaining):
        if root in visited:
            continue
        visited.add(root)
        stack = [(root, _iter_bits(beats[root] & remaining))]
        path = [root]
        on_path = {root}
        while stack:
            _, neighbors = stack[-1]
            advanced = False
            for nb in neighbors:
                if nb in on_path:
                    start = path.index(nb)
                    return tuple(x.order[p] for p in path[start:])
                if nb not in visited:
                    visited.add(nb)
                    stack.append((nb, _iter_bits(beats[nb] & remaining)))
                    path.append(nb)
                    on_path.add(nb)
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                on_path.discard(path.pop())
    raise AssertionError("no cycle found in a sourceless tournament")


def _rotated_greedy_order(
    n: int, succ: list[list[int]], rotation: int
) -> tuple[int, ...]:
    """Decode a rotation index into one topological order.

    At each step the available vertices are sorted and the rotation's
    next mixed-radix digit picks one of them.  Rotation 0 reproduces the
    lexicographically first order; increasing rotations visit
    progressively different corners of the order space.
    """
    indeg = [0] * n
    for heads in succ:
        for j in heads:
            indeg[j] += 1
    avail = sorted(i for i in range(n) if indeg[i] == 0)
    out: list[int] = []
    r = rotation
    while avail:
        r, d = divmod(r, len(avail))
        v = avail.pop(d)
        out.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                insort(avail, w)
    return tuple(out)


def decide_orderable(
    g: Digraph, search_budget: int = DEFAULT_SEARCH_BUDGET
) -> OrderabilityVerdict:
    """Decide whether g is the Hasse diagram of an order of dimension <= 2.

    Regularity is checked first.  Then topological orders are examined
    lexicographically; the first admissible one yields a verified
    realizer via its conjugate.  If the whole order space fits within
    ``search_budget`` the negative verdicts are conclusive
    (exhaustive=True).  Otherwise a deterministic rotation sweep samples
    up to ``search_budget`` further orders and a failure to find an
    admissible chain is reported as inconclusive.

    Raises CyclicInputError for cyclic input.
    """
    if search_budget < 1:
        raise ValueError(f"search_budget must be positive, got {search_budget}")
    if not is_acyclic(g):
        raise CyclicInputError("digraph contains a directed cycle")
    regular = is_regular(g)
    if not regular:
        return NotRegular(regular.witness)

    n = len(g)
    reach = _reach_bits(g)
    pos_of = [0] * n
    cycle_witness: tuple[Vertex, ...] | None = None

    def attempt(order_idx: tuple[int, ...]) -> Orderable | None:
        nonlocal cycle_witness
        for p, i in enumerate(order_idx):
            pos_of[i] = p
        if _admissibility_witness(_position_reach(pos_of, reach)) is not None:
            return None
        chain = Chain(g.vertices[i] for i in order_idx)
        try:
            mate = conjugate_chain(chain, g)
        except ConjugateCycleError as err:
            if cycle_witness is None:
                cycle_witness = err.cycle
            return None
        realizer = Realizer(chain, mate, g)
        if not verify_realizer(realizer):
            raise AssertionError("constructed realizer failed verification")
        return Orderable(realizer)

    produced = 0
    exhausted = False
    orders = _iter_index_orders(n, g._succ)
    while True:
        order_idx = next(orders, None)
        if order_idx is None:
            exhausted = True
            break
        if produced == search_budget:
            break
        produced += 1
        found = attempt(order_idx)
        if found is not None:
            return found

    if exhausted:
        if cycle_witness is not None:
            return NonTransitiveConjugate(cycle_witness, exhaustive=True)
        return NoAdmissibleChain(exhaustive=True)

    seen: set[tuple[int, ...]] = set()
    for rotation in range(search_budget):
        order_idx = _rotated_greedy_order(n, g._succ, rotation)
        if order_idx in seen:
            continue
        seen.add(order_idx)
        found = attempt(order_idx)
        if found is not None:
            return found
    if cycle_witness is not None:
        return NonTransitiveConjugate(cycle_witness, exhaustive=False)
    return NoAdmissibleChain(exhaustive=False)
