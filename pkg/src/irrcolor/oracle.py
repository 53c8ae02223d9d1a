"""Ground truth by exhaustion.

Every invariant is recomputed here from its bare definition: canonical set
partitions into independent classes (restricted-growth order), full subset
scans for the set invariants, and naive cartesian products over class
representatives for committee checks.  Nothing below shares solver logic
with the fast engines; only the Graph/Coloring containers are reused.
Deliberately slow, capped by ``size_cap`` to prevent accidental blowups.

One convention is shared with the fast path by design: graphs with minimum
degree at most 1 (including the one-vertex graph) are treated as not
committee-colorable.  For connected graphs with an edge the raw definition
already implies this; the convention only pins down the trivial cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from .coloring import Coloring
from .errors import ParameterError, SizeCapError
from .graphs import Graph, VertexSet, bits

DEFAULT_SIZE_CAP = 8

INVARIANT_IDS = (
    "chi",
    "ir",
    "gamma",
    "chi_i",
    "chi_gamma",
    "chi_d",
    "chi_gd",
    "irc_colorable",
    "chi_irc",
)


def independent_partitions(g: Graph, k: int) -> Iterator[Coloring]:
    """All partitions of V into exactly k independent classes, one canonical
    representative per unordered partition (vertex 0 in class 0, each later
    vertex's class at most one above the running maximum)."""
    if not 1 <= k <= g.n:
        raise ParameterError(f"k must be in 1..{g.n}")
    n = g.n
    colors = [0] * n
    masks = [0] * k

    def rec(i: int, created: int):
        if n - i < k - created:
            return
        if i == n:
            if created == k:
                yield Coloring(tuple(colors), k)
            return
        for c in range(min(created + 1, k)):
            if masks[c] & g.adj[i]:
                continue
            colors[i] = c
            masks[c] |= 1 << i
            yield from rec(i + 1, max(created, c + 1))
            masks[c] ^= 1 << i

    yield from rec(0, 0)


# definitional set predicates, local on purpose


def _closed_set(g: Graph, s: VertexSet) -> VertexSet:
    out = s
    for v in bits(s):
        out |= g.adj[v]
    return out


def _irredundant(g: Graph, s: VertexSet) -> bool:
    for v in bits(s):
        if not (g.adj[v] | (1 << v)) & ~_closed_set(g, s & ~(1 << v)):
            return False
    return True


def _max_irredundant(g: Graph, s: VertexSet) -> bool:
    if not _irredundant(g, s):
        return False
    others = ((1 << g.n) - 1) & ~s
    return all(not _irredundant(g, s | (1 << v)) for v in bits(others))


def _dominating(g: Graph, s: VertexSet) -> bool:
    return _closed_set(g, s) == (1 << g.n) - 1


def _rainbow(coloring: Coloring, s: VertexSet) -> bool:
    seen = 0
    for v in bits(s):
        c = coloring.color_of[v]
        if seen >> c & 1:
            return False
        seen |= 1 << c
    return True


@dataclass(frozen=True)
class OracleResult:
    value: object
    witness: object = None


def _check_cap(g: Graph, size_cap: int) -> None:
    if g.n > size_cap:
        raise SizeCapError(f"n={g.n} exceeds the oracle cap {size_cap}")


def _oracle_chi(g: Graph) -> OracleResult:
    if g.n == 0:
        return OracleResult(0, Coloring((), 0))
    for k in range(1, g.n + 1):
        for col in independent_partitions(g, k):
            return OracleResult(k, col)
    raise AssertionError("unreachable")


def _oracle_ir(g: Graph) -> OracleResult:
    if g.n == 0:
        raise ParameterError("ir is undefined on the empty graph")
    best = None
    for mask in range(1, 1 << g.n):
        if _max_irredundant(g, mask):
            if best is None or mask.bit_count() < best.bit_count():
                best = mask
    return OracleResult(best.bit_count(), best)


def _oracle_gamma(g: Graph) -> OracleResult:
    best = None
    for mask in range(1 << g.n):
        if _dominating(g, mask):
            if best is None or mask.bit_count() < best.bit_count():
                best = mask
    return OracleResult(best.bit_count(), best)


def _oracle_chi_i(g: Graph) -> OracleResult:
    if g.n == 0:
        raise ParameterError("undefined on the empty graph")
    mir = [m for m in range(1, 1 << g.n) if _max_irredundant(g, m)]
    for k in range(1, g.n + 1):
        for col in independent_partitions(g, k):
            for r in mir:
                if _rainbow(col, r):
                    return OracleResult(k, (col, r))
    raise AssertionError("unreachable: the all-singleton coloring qualifies")


def _oracle_chi_gamma(g: Graph) -> OracleResult:
    if g.n == 0:
        raise ParameterError("undefined on the empty graph")
    dom = [m for m in range(1 << g.n) if _dominating(g, m)]
    for k in range(1, g.n + 1):
        for col in independent_partitions(g, k):
            for d in dom:
                if _rainbow(col, d):
                    return OracleResult(k, (col, d))
    raise AssertionError("unreachable")


def _dominates_class(g: Graph, v: int, class_mask: VertexSet) -> bool:
    return class_mask & ~g.adj[v] == 0 or class_mask == 1 << v


def _oracle_chi_d(g: Graph) -> OracleResult:
    if g.n == 0:
        raise ParameterError("undefined on the empty graph")
    for k in range(1, g.n + 1):
        for col in independent_partitions(g, k):
            masks = col.classes()
            if all(
                any(_dominates_class(g, v, m) for m in masks) for v in range(g.n)
            ):
                return OracleResult(k, col)
    raise AssertionError("unreachable: singletons dominate themselves")


def _oracle_chi_gd(g: Graph) -> OracleResult:
    if g.n < 2:
        raise ParameterError("anti-domination needs a class to avoid")
    for k in range(1, g.n + 1):
        for col in independent_partitions(g, k):
            masks = col.classes()
            ok = True
            for v in range(g.n):
                closed = g.adj[v] | (1 << v)
                if not any(_dominates_class(g, v, m) for m in masks):
                    ok = False
                    break
                if not any(m & closed == 0 for m in masks):
                    ok = False
                    break
            if ok:
                return OracleResult(k, col)
    return OracleResult(None)


def _oracle_irc(g: Graph) -> tuple[bool, Optional[int], Optional[Coloring]]:
    if g.n == 0 or g.min_degree() <= 1:
        return False, None, None
    best_k = None
    best_col = None
    for k in range(1, g.n + 1):
        for col in independent_partitions(g, k):
            members = [list(bits(m)) for m in col.classes()]
            good = True
            for committee in product(*members):
                rc = 0
                for v in committee:
                    rc |= 1 << v
                if not _irredundant(g, rc):
                    good = False
                    break
            if good:
                best_k, best_col = k, col
                break
    return best_k is not None, best_k, best_col


def irc_partition_exists(g: Graph, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> bool:
    """Definitional check: some k-class partition has every committee
    irredundant.  Used to confirm findings from the fast conjecture scan."""
    _check_cap(g, size_cap)
    if g.n == 0 or g.min_degree() <= 1 or not 1 <= k <= g.n:
        return False
    for col in independent_partitions(g, k):
        members = [list(bits(m)) for m in col.classes()]
        good = True
        for committee in product(*members):
            rc = 0
            for v in committee:
                rc |= 1 << v
            if not _irredundant(g, rc):
                good = False
                break
        if good:
            return True
    return False


def oracle_invariant(g: Graph, which: str, size_cap: int = DEFAULT_SIZE_CAP) -> OracleResult:
    """Recompute one invariant by definition alone.  Raises SizeCapError when
    the graph is larger than ``size_cap``."""
    _check_cap(g, size_cap)
    if which == "chi":
        return _oracle_chi(g)
    if which == "ir":
        return _oracle_ir(g)
    if which == "gamma":
        return _oracle_gamma(g)
    if which == "chi_i":
        return _oracle_chi_i(g)
    if which == "chi_gamma":
        return _oracle_chi_gamma(g)
    if which == "chi_d":
        return _oracle_chi_d(g)
    if which == "chi_gd":
        return _oracle_chi_gd(g)
    if which == "irc_colorable":
        colorable, _, col = _oracle_irc(g)
        return OracleResult(colorable, col)
    if which == "chi_irc":
        _, k, col = _oracle_irc(g)
        return OracleResult(k, col)
    raise ParameterError(f"unknown invariant id {which!r}")


@dataclass(frozen=True)
class CrossCheckEntry:
    invariant: str
    fast: object
    oracle: object

    @property
    def agree(self) -> bool:
        return self.fast == self.oracle


@dataclass(frozen=True)
class CrossCheckReport:
    entries: tuple[CrossCheckEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.agree for e in self.entries)

    def disagreements(self) -> list[CrossCheckEntry]:
        return [e for e in self.entries if not e.agree]


def cross_check(g: Graph, size_cap: int = DEFAULT_SIZE_CAP) -> CrossCheckReport:
    """Every invariant via both the fast engines and this oracle.

    Any disagreement is a defect by definition.
    """
    _check_cap(g, size_cap)
    if g.n == 0:
        raise ParameterError("cross-check needs at least one vertex")
    from . import coloring as fast_col
    from . import irc as fast_irc
    from . import irredundance as fast_irr

    entries = []
    entries.append(CrossCheckEntry("chi", fast_col.chromatic_number(g)[0], _oracle_chi(g).value))
    entries.append(CrossCheckEntry("ir", fast_irr.ir_number(g)[0], _oracle_ir(g).value))
    entries.append(CrossCheckEntry("gamma", fast_irr.gamma_number(g)[0], _oracle_gamma(g).value))
    entries.append(
        CrossCheckEntry(
            "chi_i", fast_col.irredundance_chromatic_number(g)[0], _oracle_chi_i(g).value
        )
    )
    entries.append(
        CrossCheckEntry(
            "chi_gamma", fast_col.gamma_chromatic_number(g)[0], _oracle_chi_gamma(g).value
        )
    )
    entries.append(
        CrossCheckEntry(
            "chi_d", fast_col.dominator_chromatic_number(g)[0], _oracle_chi_d(g).value
        )
    )
    if g.n >= 2:
        fast_gd = fast_col.global_dominator_chromatic_number(g)
        entries.append(
            CrossCheckEntry(
                "chi_gd",
                fast_gd[0] if fast_gd is not None else None,
                _oracle_chi_gd(g).value,
            )
        )
    colorable, best_k, _ = _oracle_irc(g)
    fast_colorable = fast_irc.irc_colorability(g)
    entries.append(
        CrossCheckEntry("irc_colorable", fast_colorable is not None, colorable)
    )
    fast_irc_k = fast_irc.irc_chromatic_number(g)
    entries.append(
        CrossCheckEntry(
            "chi_irc", fast_irc_k[0] if fast_irc_k is not None else None, best_k
        )
    )
    return CrossCheckReport(tuple(entries))
