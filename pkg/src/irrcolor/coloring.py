"""Exact coloring solvers.

Chromatic number via saturation-ordered branch and bound; the rainbow-set
invariants (irredundance chromatic number, gamma chromatic number) via a
clique reduction: making a candidate set rainbow is the same as properly
coloring the graph with a clique added on that set.  Dominator-style
invariants search canonical class partitions directly.

All searches break ties toward the lowest vertex index and lowest color id,
so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import budget
from .errors import ParameterError
from .graphs import Graph, VertexSet, bits
from .irredundance import (
    gamma_number,
    ir_number,
    is_maximal_irredundant,
    is_dominating,
    maximal_irredundant_sets,
    minimal_dominating_sets,
)


@dataclass(frozen=True)
class Coloring:
    """Surjective assignment of vertices to color ids 0..k-1.

    Properness is a predicate, not an invariant: search intermediates may be
    improper.  ``canonical()`` relabels so first occurrences of color ids
    ascend with vertex index, the form the partition searches enumerate.
    """

    color_of: tuple[int, ...]
    k: int

    def __post_init__(self):
        used = set(self.color_of)
        if self.color_of and (min(used) < 0 or max(used) >= self.k):
            raise ValueError("color id out of range")
        if len(used) != self.k:
            raise ValueError("coloring must use every color id")

    def classes(self) -> list[VertexSet]:
        masks = [0] * self.k
        for v, c in enumerate(self.color_of):
            masks[c] |= 1 << v
        return masks

    def canonical(self) -> "Coloring":
        relabel: dict[int, int] = {}
        out = []
        for c in self.color_of:
            if c not in relabel:
                relabel[c] = len(relabel)
            out.append(relabel[c])
        return Coloring(tuple(out), self.k)


def is_proper(g: Graph, coloring: Coloring) -> bool:
    return all(coloring.color_of[u] != coloring.color_of[v] for u, v in g.edges())


def is_rainbow(coloring: Coloring, s: VertexSet) -> bool:
    """True when the members of ``s`` carry pairwise distinct colors."""
    seen = 0
    for v in bits(s):
        c = coloring.color_of[v]
        if seen >> c & 1:
            return False
        seen |= 1 << c
    return True


def add_clique(g: Graph, s: VertexSet) -> Graph:
    """Graph with all missing edges inside ``s`` added."""
    adj = list(g.adj)
    for v in bits(s):
        adj[v] |= s & ~(1 << v)
    return Graph(g.n, tuple(adj))


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    colors = [-1] * n
    sat = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (sat[u].bit_count(), g.degree(u), -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in bits(g.adj[v]):
            if colors[u] < 0:
                sat[u] |= 1 << c
    return colors


def max_clique(g: Graph) -> VertexSet:
    """A maximum clique, found by branch and bound over candidate masks."""
    best = 0

    def expand(r: int, p: int) -> None:
        nonlocal best
        while p:
            if r.bit_count() + p.bit_count() <= best.bit_count():
                return
            v = (p & -p).bit_length() - 1
            p ^= 1 << v
            rv = r | (1 << v)
            if rv.bit_count() > best.bit_count():
                best = rv
            expand(rv, p & g.adj[v])

    expand(0, g.vertices)
    return best


def chromatic_number(g: Graph, token=None) -> tuple[int, Coloring]:
    """Exact chi(G) and a witness proper coloring."""
    n = g.n
    if n == 0:
        return 0, Coloring((), 0)
    greedy = _dsatur_greedy(g)
    best = greedy[:]
    best_k = max(greedy) + 1
    clique = max_clique(g)
    lb = clique.bit_count()
    if lb < best_k:
        colors = [-1] * n
        clique_vs = list(bits(clique))
        for i, v in enumerate(clique_vs):
            colors[v] = i

        def search(uncolored: list[int], used: int) -> None:
            nonlocal best, best_k
            budget.check(token)
            if used >= best_k:
                return
            if not uncolored:
                best = colors[:]
                best_k = used
                return

            def saturation(u: int) -> tuple[int, int, int]:
                forb = 0
                for w in bits(g.adj[u]):
                    if colors[w] >= 0:
                        forb |= 1 << colors[w]
                return (forb.bit_count(), g.degree(u), -u)

            v = max(uncolored, key=saturation)
            rest = [u for u in uncolored if u != v]
            forb = 0
            for w in bits(g.adj[v]):
                if colors[w] >= 0:
                    forb |= 1 << colors[w]
            for c in range(min(used + 1, best_k - 1)):
                if forb >> c & 1:
                    continue
                colors[v] = c
                search(rest, max(used, c + 1))
                colors[v] = -1

        search([v for v in range(n) if colors[v] < 0], lb)
    return best_k, Coloring(tuple(best), best_k).canonical()


@dataclass(frozen=True)
class RainbowCert:
    """A proper coloring together with the set it renders rainbow."""

    coloring: Coloring
    rainbow_set: VertexSet


def _full_degree_vertex(g: Graph) -> Optional[int]:
    for v in range(g.n):
        if g.degree(v) == g.n - 1:
            return v
    return None


def irredundance_chromatic_number(g: Graph, token=None) -> tuple[int, RainbowCert]:
    """Minimum colors of a proper coloring with some maximal irredundant set
    rainbow.  Minimizes chi over the clique reductions of the candidates."""
    if g.n < 1:
        raise ParameterError("needs at least one vertex")
    chi, chi_col = chromatic_number(g, token)
    full = _full_degree_vertex(g)
    if full is not None:
        # a full-degree vertex is itself a maximal irredundant singleton
        cert = RainbowCert(chi_col, 1 << full)
        _validate_cert(g, cert, maximal_irredundant=True)
        return chi, cert
    irn, _ = ir_number(g, token)
    lower = max(chi, irn)
    candidates = sorted(maximal_irredundant_sets(g), key=lambda s: (s.bit_count(), s))
    best: Optional[tuple[int, RainbowCert]] = None
    for r in candidates:
        budget.check(token)
        if best is not None and r.bit_count() >= best[0]:
            continue
        k, col = chromatic_number(add_clique(g, r), token)
        if best is None or k < best[0]:
            best = (k, RainbowCert(col, r))
            if k == lower:
                break
    assert best is not None
    _validate_cert(g, best[1], maximal_irredundant=True)
    return best


def gamma_chromatic_number(g: Graph, token=None) -> tuple[int, RainbowCert]:
    """Minimum colors of a proper coloring with some dominating set rainbow.

    Minimal dominating sets suffice: rainbow-ness is hereditary downward and
    every dominating set contains a minimal one.
    """
    if g.n < 1:
        raise ParameterError("needs at least one vertex")
    chi, _ = chromatic_number(g, token)
    gam, _ = gamma_number(g, token)
    lower = max(chi, gam)
    candidates = sorted(minimal_dominating_sets(g), key=lambda s: (s.bit_count(), s))
    best: Optional[tuple[int, RainbowCert]] = None
    for d in candidates:
        budget.check(token)
        if best is not None and d.bit_count() >= best[0]:
            continue
        k, col = chromatic_number(add_clique(g, d), token)
        if best is None or k < best[0]:
            best = (k, RainbowCert(col, d))
            if k == lower:
                break
    assert best is not None
    _validate_cert(g, best[1], maximal_irredundant=False)
    return best


def _validate_cert(g: Graph, cert: RainbowCert, maximal_irredundant: bool) -> None:
    if not is_proper(g, cert.coloring):
        raise AssertionError("certificate coloring is not proper")
    if not is_rainbow(cert.coloring, cert.rainbow_set):
        raise AssertionError("certificate set is not rainbow")
    if maximal_irredundant:
        if not is_maximal_irredundant(g, cert.rainbow_set):
            raise AssertionError("certificate set is not maximal irredundant")
    elif not is_dominating(g, cert.rainbow_set):
        raise AssertionError("certificate set is not dominating")


# --- dominator-style colorings ------------------------------------------------
#
# v dominates class C when C is a subset of N(v), or C == {v}.
# v anti-dominates C when N[v] and C are disjoint (own class never counts).


def _partition_search(g: Graph, k: int, anti: bool, token=None) -> Optional[Coloring]:
    n = g.n
    colors = [-1] * n
    masks = [0] * k

    def alive(v: int, created: int, remaining: VertexSet) -> bool:
        nb = g.adj[v]
        dom_ok = False
        for c in range(created):
            m = masks[c]
            if m & ~nb == 0 or m == 1 << v:
                dom_ok = True
                break
        if not dom_ok and created < k and nb & remaining:
            dom_ok = True
        if not dom_ok:
            return False
        if not anti:
            return True
        closed = nb | (1 << v)
        for c in range(created):
            if masks[c] & closed == 0:
                return True
        return created < k and bool(remaining & ~closed)

    def final_ok(v: int) -> bool:
        nb = g.adj[v]
        dom = any(m & ~nb == 0 or m == 1 << v for m in masks)
        if not dom:
            return False
        if not anti:
            return True
        closed = nb | (1 << v)
        return any(m & closed == 0 for m in masks)

    def rec(i: int, created: int) -> Optional[Coloring]:
        budget.check(token)
        if n - i < k - created:
            return None
        if i == n:
            if created == k and all(final_ok(v) for v in range(n)):
                return Coloring(tuple(colors), k)
            return None
        remaining = (g.vertices >> (i + 1)) << (i + 1)
        for c in range(min(created + 1, k)):
            if masks[c] & g.adj[i]:
                continue
            colors[i] = c
            masks[c] |= 1 << i
            nxt = max(created, c + 1)
            if all(alive(v, nxt, remaining) for v in range(i + 1)):
                found = rec(i + 1, nxt)
                if found is not None:
                    return found
            colors[i] = -1
            masks[c] ^= 1 << i
        return None

    return rec(0, 0)


def dominator_chromatic_number(g: Graph, token=None) -> tuple[int, Coloring]:
    """Minimum colors of a proper coloring where every vertex dominates a
    color class."""
    if g.n < 1:
        raise ParameterError("needs at least one vertex")
    chi, _ = chromatic_number(g, token)
    for k in range(chi, g.n + 1):
        col = _partition_search(g, k, anti=False, token=token)
        if col is not None:
            return k, col
    raise AssertionError("unreachable: singleton classes always dominate")


def global_dominator_chromatic_number(g: Graph, token=None) -> Optional[tuple[int, Coloring]]:
    """Dominator coloring where every vertex also anti-dominates a class.

    Returns None when no such coloring exists at any k, which happens exactly
    when some vertex is adjacent to all others.
    """
    if g.n < 2:
        raise ParameterError("anti-domination needs a class to avoid")
    if _full_degree_vertex(g) is not None:
        return None
    chi, _ = chromatic_number(g, token)
    for k in range(chi, g.n + 1):
        col = _partition_search(g, k, anti=True, token=token)
        if col is not None:
            return k, col
    return None
