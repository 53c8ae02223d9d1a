"""Private neighborhoods, irredundant and dominating sets, and the exact
solvers for the lower irredundance number ir(G) and domination number γ(G).

Set arguments and results are vertex bitmasks.  Enumerators yield masks in
ascending numeric order (lexicographic over the bit string read from vertex
0 upward); the size-bounded searches inside ir/γ iterate cardinalities
ascending so they can stop at the first hit.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional

from . import budget
from .errors import ParameterError, PreconditionError
from .graphs import Graph, VertexSet, bits, closed_neighborhood_of_set, mask_from


def private_neighbors(g: Graph, v: int, s: VertexSet) -> VertexSet:
    """pn[v,S] = N[v] - N[S - {v}].  Requires v to be a member of s."""
    if not s >> v & 1:
        raise PreconditionError(f"vertex {v} is not in the set")
    return g.closed(v) & ~closed_neighborhood_of_set(g, s & ~(1 << v))


def is_irredundant(g: Graph, s: VertexSet) -> bool:
    """True when every member of ``s`` has a private neighbor.

    The empty set is vacuously irredundant.
    """
    for v in bits(s):
        if not g.closed(v) & ~closed_neighborhood_of_set(g, s & ~(1 << v)):
            return False
    return True


def is_maximal_irredundant(g: Graph, s: VertexSet) -> bool:
    """Irredundant, and no single-vertex extension stays irredundant."""
    if not is_irredundant(g, s):
        return False
    for v in bits(g.vertices & ~s):
        if is_irredundant(g, s | (1 << v)):
            return False
    return True


def maximal_irredundant_sets(g: Graph, size_cap: Optional[int] = None) -> Iterator[VertexSet]:
    """Yield every maximal irredundant set, ascending numeric mask order.

    With ``size_cap`` only sets of at most that many vertices are yielded.
    """
    for mask in range(1, 1 << g.n):
        if size_cap is not None and mask.bit_count() > size_cap:
            continue
        if is_maximal_irredundant(g, mask):
            yield mask


def ir_number(g: Graph, token=None) -> tuple[int, VertexSet]:
    """Minimum cardinality of a maximal irredundant set, with a witness."""
    if g.n == 0:
        raise ParameterError("ir is undefined on the empty graph")
    for size in range(1, g.n + 1):
        budget.check(token)
        for combo in combinations(range(g.n), size):
            s = mask_from(combo)
            if is_maximal_irredundant(g, s):
                return size, s
    raise AssertionError("unreachable: V(G) bounds the search")


def ir_verify(g: Graph, claimed: int, witness: Optional[VertexSet] = None, token=None) -> bool:
    """Size-capped check that ir(G) equals ``claimed``.

    Confirms no maximal irredundant set of size < claimed exists, and that the
    witness (or some set of the claimed size) is maximal irredundant.  Useful
    when the target value is known by construction and full discovery would
    be wasteful.
    """
    for size in range(1, claimed):
        budget.check(token)
        for combo in combinations(range(g.n), size):
            if is_maximal_irredundant(g, mask_from(combo)):
                return False
    if witness is not None:
        return witness.bit_count() == claimed and is_maximal_irredundant(g, witness)
    budget.check(token)
    return any(
        is_maximal_irredundant(g, mask_from(combo))
        for combo in combinations(range(g.n), claimed)
    )


def is_dominating(g: Graph, s: VertexSet) -> bool:
    """True when N[S] covers every vertex."""
    return closed_neighborhood_of_set(g, s) == g.vertices


def minimal_dominating_sets(g: Graph) -> Iterator[VertexSet]:
    """Yield dominating sets none of whose proper subsets dominate.

    Domination is monotone upward, so minimality reduces to checking the
    one-vertex deletions.
    """
    for mask in range(1 << g.n):
        if not is_dominating(g, mask):
            continue
        if all(not is_dominating(g, mask & ~(1 << v)) for v in bits(mask)):
            yield mask


def _greedy_dominating(g: Graph) -> VertexSet:
    chosen = 0
    covered = 0
    while covered != g.vertices:
        best_v = -1
        best_gain = -1
        for v in range(g.n):
            gain = (g.closed(v) & ~covered).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen |= 1 << best_v
        covered |= g.closed(best_v)
    return chosen


def gamma_number(g: Graph, token=None) -> tuple[int, VertexSet]:
    """Minimum cardinality of a dominating set, with a witness.

    Increasing-size subset search, bounded above by a greedy cover.
    """
    if g.n == 0:
        return 0, 0
    greedy = _greedy_dominating(g)
    ub = greedy.bit_count()
    for size in range(1, ub):
        budget.check(token)
        for combo in combinations(range(g.n), size):
            s = mask_from(combo)
            if is_dominating(g, s):
                return size, s
    return ub, greedy
