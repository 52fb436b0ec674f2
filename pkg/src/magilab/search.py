"""Exhaustive backtracking search for edge-magic and consecutive labelings.

This module is the independent oracle the theorem suites are checked
against, so its default mode relies only on definitional facts:

* the magic constant k forces each edge label to k - label(x) - label(y),
  which must land in the required edge block and be unused;
* summing the magic condition over all edges pins k to a narrow integer
  window via the degree-weighted label sum, which bounds the outer k loop.

The neighbor-block shortcut (all neighbors of a vertex must share a label
block) is a theorem about consecutive labelings, not a definition, so it is
opt-in via ``use_theorem_pruning`` and exists purely as a speedup whose
output must match the oracle bit for bit.

Searches enumerate vertex-label assignments depth first along a BFS
placement order, so all but the first vertex close at least one edge the
moment they are placed.  Results are reported sorted by vertex-label
vector, which makes output independent of the internal iteration order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, is_connected
from .labelings import TotalLabeling, VertexLabeling

DEFAULT_BUDGET = 22  # maximum |V|+|E| a full b-sweep or edge-magic sweep will accept


class SearchError(ValueError):
    """Query malformed or graph outside an operation's preconditions."""


class BudgetExceeded(RuntimeError):
    """Explicit refusal: the requested exhaustive sweep exceeds the label budget."""


@dataclass(frozen=True)
class SearchQuery:
    """What to search for.

    ``b`` present means consecutive search with that block offset; absent
    means any edge-magic labeling.  ``canonical_only`` breaks label
    symmetry between twin vertices (identical neighborhoods), shrinking the
    enumeration without changing which queries are satisfiable.
    """

    graph: Graph
    b: Optional[int] = None
    magic_constant: Optional[int] = None
    limit: Optional[int] = None
    canonical_only: bool = False
    use_theorem_pruning: bool = False

    def __post_init__(self):
        if self.b is not None and not 0 <= self.b <= self.graph.vertex_count:
            raise SearchError(f"b={self.b} outside 0..{self.graph.vertex_count}")


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one search; ``exhausted`` is False only when a limit cut it short."""

    labelings: tuple[TotalLabeling, ...]
    constants_found: frozenset[int]
    exhausted: bool
    solution_count: int
    b: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "b": self.b,
            "exhausted": self.exhausted,
            "constants": sorted(self.constants_found),
            "count": self.solution_count,
            "labelings": [lab.to_dict() for lab in self.labelings],
        }


# ---------------------------------------------------------------------------
# placement machinery
# ---------------------------------------------------------------------------

def _placement(graph: Graph):
    """BFS order from a max-degree root, plus each vertex's closed edges.

    ``backs[i]`` lists (earlier_vertex, edge_index) pairs for the vertex at
    position i, so the DFS can force those edge labels on placement.
    """
    n = graph.vertex_count
    adj = graph.adjacency
    root = max(range(n), key=lambda v: (len(adj[v]), -v))
    pos = {root: 0}
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in pos:
                pos[v] = len(order)
                order.append(v)
                queue.append(v)
    if len(order) != n:
        raise SearchError("search requires a connected graph")
    edge_index = graph.edge_index
    backs = []
    for i, v in enumerate(order):
        closed = []
        for u in adj[v]:
            if pos[u] < i:
                pair = (u, v) if u < v else (v, u)
                closed.append((u, edge_index[pair]))
        backs.append(tuple(closed))
    return order, backs


def _twin_rules(graph: Graph):
    """Per-vertex ordering constraints between vertices with equal neighborhoods."""
    groups: dict[frozenset, list[int]] = {}
    for v in range(graph.vertex_count):
        groups.setdefault(frozenset(graph.adjacency[v]), []).append(v)
    rules = [[] for _ in range(graph.vertex_count)]
    for members in groups.values():
        if len(members) < 2:
            continue
        for v in members:
            rules[v] = [(u, u < v) for u in members if u != v]
    return [tuple(r) for r in rules]


def _k_window(graph: Graph, b: Optional[int], pool: list[int], elo: int, ehi: int):
    """Integer window of conceivable magic constants.

    Summing k over all edges gives e*k = sum(deg(v)*label(v)) + sum of edge
    labels; pairing extreme degrees with extreme pool labels bounds the
    first term.  A per-edge extreme bound is intersected on top.
    """
    n, e = graph.vertex_count, graph.edge_count
    degrees = sorted((graph.degree(v) for v in range(n)), reverse=True)
    if b is not None:
        edge_sum = e * b + e * (e + 1) // 2
        dmin = sum(d * pool[i] for i, d in enumerate(degrees))
        dmax = sum(d * pool[n - 1 - i] for i, d in enumerate(degrees))
        klo = -((-(dmin + edge_sum)) // e)
        khi = (dmax + edge_sum) // e
    else:
        total = graph.label_count
        t = total * (total + 1) // 2
        weights = sorted((d - 1 for d in degrees), reverse=True)
        wmin = sum(w * (i + 1) for i, w in enumerate(weights))
        wmax = sum(w * (total - i) for i, w in enumerate(weights))
        klo = -((-(t + wmin)) // e)
        khi = (t + wmax) // e
    if n >= 2:
        klo = max(klo, pool[0] + pool[1] + elo)
        khi = min(khi, pool[-1] + pool[-2] + ehi)
    return klo, khi


def _enumerate(graph: Graph, b: Optional[int], magic_constant: Optional[int],
               limit: Optional[int], canonical_only: bool,
               use_theorem_pruning: bool, store: bool):
    """Core k-outer-loop backtracker shared by both search operations."""
    n, e = graph.vertex_count, graph.edge_count
    total = n + e
    if e == 0:
        return [], set(), True, 0
    order, backs = _placement(graph)
    if b is None:
        pool = list(range(1, total + 1))
        elo, ehi = 1, total
    else:
        pool = list(range(1, b + 1)) + list(range(b + e + 1, total + 1))
        elo, ehi = b + 1, b + e
    klo, khi = _k_window(graph, b, pool, elo, ehi)
    ks = range(klo, khi + 1)
    if magic_constant is not None:
        ks = [magic_constant] if klo <= magic_constant <= khi else []

    twins = _twin_rules(graph) if canonical_only else [()] * n
    block_prune = use_theorem_pruning and b is not None and b >= 1
    nb_block = [None] * n  # per-vertex block its placed neighbors occupy

    labels = [0] * n
    earr = [0] * e
    used = bytearray(total + 2)
    adjacency = graph.adjacency
    sols: list[tuple] = []
    constants: set[int] = set()
    count = 0
    truncated = False

    for k in ks:
        def place(i, k=k):
            nonlocal count, truncated
            if i == n:
                count += 1
                constants.add(k)
                if store:
                    sols.append((tuple(labels), tuple(earr)))
                if limit is not None and count >= limit:
                    truncated = True
                    return False
                return True
            v = order[i]
            bks = backs[i]
            tw = twins[v]
            for c in pool:
                if used[c]:
                    continue
                if tw:
                    bad = False
                    for u, u_first in tw:
                        lu = labels[u]
                        if lu and ((lu > c) if u_first else (lu < c)):
                            bad = True
                            break
                    if bad:
                        continue
                used[c] = 1
                labels[v] = c
                nf = 0
                ok = True
                for u, ei in bks:
                    el = k - c - labels[u]
                    if el < elo or el > ehi or used[el]:
                        ok = False
                        break
                    used[el] = 1
                    earr[ei] = el
                    nf += 1
                marked = None
                if ok and block_prune:
                    blk = c > b
                    for u in adjacency[v]:
                        state = nb_block[u]
                        if state is None:
                            nb_block[u] = blk
                            if marked is None:
                                marked = [u]
                            else:
                                marked.append(u)
                        elif state != blk:
                            ok = False
                            break
                proceed = place(i + 1) if ok else True
                if marked:
                    for u in marked:
                        nb_block[u] = None
                for t in range(nf):
                    used[earr[bks[t][1]]] = 0
                labels[v] = 0
                used[c] = 0
                if not proceed:
                    return False
            return True

        if not place(0):
            break

    if store:
        sols.sort()
    return sols, constants, not truncated, count


def _report(graph: Graph, sols, constants, exhausted, count, b) -> SearchReport:
    labelings = tuple(TotalLabeling(vl, el) for vl, el in sols)
    return SearchReport(labelings, frozenset(constants), exhausted, count, b)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def find_consecutive(query: SearchQuery) -> SearchReport:
    """All labelings with edge-label block {b+1 .. b+|E|} and constant sums."""
    graph = query.graph
    if query.b is None:
        raise SearchError("find_consecutive needs b; use find_edge_magic for open searches")
    if not is_connected(graph):
        raise SearchError("search requires a connected graph")
    if graph.edge_count < 1:
        raise SearchError("search requires at least one edge")
    sols, constants, exhausted, count = _enumerate(
        graph, query.b, query.magic_constant, query.limit,
        query.canonical_only, query.use_theorem_pruning, store=True)
    return _report(graph, sols, constants, exhausted, count, query.b)


def find_edge_magic(query: SearchQuery, budget: Optional[int] = None) -> SearchReport:
    """All edge-magic labelings regardless of where edge labels sit."""
    graph = query.graph
    if query.b is not None:
        raise SearchError("find_edge_magic searches without a block offset")
    if not is_connected(graph):
        raise SearchError("search requires a connected graph")
    _check_budget(graph, budget)
    sols, constants, exhausted, count = _enumerate(
        graph, None, query.magic_constant, query.limit,
        query.canonical_only, query.use_theorem_pruning, store=True)
    return _report(graph, sols, constants, exhausted, count, None)


def feasible_b_set(graph: Graph, budget: Optional[int] = None,
                   use_theorem_pruning: bool = False) -> set[int]:
    """Every offset b for which some consecutive magic labeling exists.

    Each sub-search runs to exhaustion (with twin symmetry broken, which
    cannot change satisfiability), so absent values are certified absent.
    """
    if not is_connected(graph):
        raise SearchError("feasible_b_set requires a connected graph")
    _check_budget(graph, budget)
    feasible = set()
    for b in range(graph.vertex_count + 1):
        _, _, _, count = _enumerate(graph, b, None, None, True,
                                    use_theorem_pruning, store=False)
        if count:
            feasible.add(b)
    return feasible


def count_canonical(graph: Graph, b: int,
                    automorphisms: Optional[tuple] = None) -> int:
    """Number of labeling orbits under the graph's automorphism group."""
    if automorphisms is None:
        automorphisms = compute_automorphisms(graph)
    report = find_consecutive(SearchQuery(graph=graph, b=b, canonical_only=True))
    n = graph.vertex_count
    orbit_reps = set()
    for lab in report.labelings:
        vl = lab.vertex_labels
        orbit_reps.add(min(tuple(vl[perm[i]] for i in range(n)) for perm in automorphisms))
    return len(orbit_reps)


def _check_budget(graph: Graph, budget: Optional[int]) -> None:
    cap = DEFAULT_BUDGET if budget is None else budget
    if graph.label_count > cap:
        raise BudgetExceeded(
            f"graph needs {graph.label_count} labels, over the budget of {cap}; "
            f"raise the budget to force the sweep")


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

def compute_automorphisms(graph: Graph) -> tuple[tuple[int, ...], ...]:
    """Exact automorphism group via degree refinement plus backtracking.

    Intended for the desk-scale graphs searched here (<= 16 vertices or so);
    the refinement collapses most of the search and the backtracker checks
    adjacency against every previously mapped vertex.
    """
    n = graph.vertex_count
    if n == 0:
        return ((),)
    adj = [frozenset(nbrs) for nbrs in graph.adjacency]
    color = [len(adj[v]) for v in range(n)]
    while True:
        sig = [(color[v], tuple(sorted(color[u] for u in adj[v]))) for v in range(n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        refined = [palette[s] for s in sig]
        if refined == color:
            break
        color = refined

    mapping = [-1] * n
    used = [False] * n
    perms: list[tuple[int, ...]] = []

    def extend(v: int) -> None:
        if v == n:
            perms.append(tuple(mapping))
            return
        for w in range(n):
            if used[w] or color[w] != color[v]:
                continue
            ok = True
            for u in range(v):
                if (u in adj[v]) != (mapping[u] in adj[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
                mapping[v] = -1

    extend(0)
    return tuple(perms)


# ---------------------------------------------------------------------------
# graceful search
# ---------------------------------------------------------------------------

def find_graceful(graph: Graph, limit: Optional[int] = 1) -> list[VertexLabeling]:
    """Backtracking search for graceful labelings over vertex labels 0..|E|.

    Differences close as vertices are placed along the BFS order; each must
    be a fresh value in 1..|E|.
    """
    if not is_connected(graph):
        raise SearchError("graceful search requires a connected graph")
    n, e = graph.vertex_count, graph.edge_count
    if n == 0:
        return []
    order, backs = _placement(graph)
    labels = [-1] * n
    used = bytearray(e + 1)
    used_diff = bytearray(e + 1)
    found: list[VertexLabeling] = []

    def place(i: int) -> bool:
        if i == n:
            found.append(VertexLabeling(tuple(labels)))
            return limit is None or len(found) < limit
        v = order[i]
        bks = backs[i]
        for c in range(e + 1):
            if used[c]:
                continue
            nd = 0
            ok = True
            for u, _ in bks:
                d = abs(c - labels[u])
                if d == 0 or used_diff[d]:
                    ok = False
                    break
                used_diff[d] = 1
                nd += 1
            proceed = True
            if ok:
                used[c] = 1
                labels[v] = c
                proceed = place(i + 1)
                labels[v] = -1
                used[c] = 0
            for t in range(nd):
                used_diff[abs(c - labels[bks[t][0]])] = 0
            if not proceed:
                return False
        return True

    place(0)
    return found
