"""Total and vertex labelings plus the classifiers that grade them.

All checks are exact integer arithmetic; nothing here tolerates
approximation.  A total labeling assigns ``1..|V|+|E|`` bijectively to
vertices and edges; the classifiers report whether it is edge-magic, where
its edge-label block sits, and whether it lands in the super range.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Bipartition, Graph, bipartition_of, is_connected


class LabelingError(ValueError):
    """Labeling does not fit the graph it is paired with."""


@dataclass(frozen=True, order=True)
class TotalLabeling:
    """Vertex labels by vertex index, edge labels by canonical edge order."""

    vertex_labels: tuple[int, ...]
    edge_labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertex_labels", tuple(int(x) for x in self.vertex_labels))
        object.__setattr__(self, "edge_labels", tuple(int(x) for x in self.edge_labels))

    def to_dict(self) -> dict:
        return {"vertex_labels": list(self.vertex_labels),
                "edge_labels": list(self.edge_labels)}

    @classmethod
    def from_dict(cls, data: dict) -> "TotalLabeling":
        try:
            return cls(tuple(data["vertex_labels"]), tuple(data["edge_labels"]))
        except (KeyError, TypeError) as exc:
            raise LabelingError(f"bad labeling record: {exc}") from exc


@dataclass(frozen=True)
class VertexLabeling:
    """Distinct vertex labels drawn from 0..|E|, as used by graceful checks."""

    vertex_labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertex_labels", tuple(int(x) for x in self.vertex_labels))

    def to_dict(self) -> dict:
        return {"vertex_labels": list(self.vertex_labels)}


@dataclass(frozen=True)
class LabelingClassification:
    """Derived facts about one total labeling.

    ``consecutive_index`` is only reported when the labeling is edge-magic
    AND its edge labels form one contiguous block, so a present index always
    comes with a present magic constant.  ``is_super`` means the block sits
    right after the vertex range, i.e. consecutive_index == |V|.
    """

    magic_constant: Optional[int] = None
    consecutive_index: Optional[int] = None
    is_super: bool = False
    side_with_small_labels: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "k": self.magic_constant,
            "b": self.consecutive_index,
            "super": self.is_super,
            "side": self.side_with_small_labels,
        }


def check_total_labeling(graph: Graph, labeling: TotalLabeling) -> None:
    """Raise LabelingError unless the labeling is a bijection onto 1..|V|+|E|."""
    if len(labeling.vertex_labels) != graph.vertex_count:
        raise LabelingError(
            f"expected {graph.vertex_count} vertex labels, got {len(labeling.vertex_labels)}")
    if len(labeling.edge_labels) != graph.edge_count:
        raise LabelingError(
            f"expected {graph.edge_count} edge labels, got {len(labeling.edge_labels)}")
    total = graph.label_count
    seen = [False] * (total + 1)
    for value in labeling.vertex_labels + labeling.edge_labels:
        if not 1 <= value <= total:
            raise LabelingError(f"label {value} outside 1..{total}")
        if seen[value]:
            raise LabelingError(f"label {value} used twice")
        seen[value] = True


def magic_constant_of(graph: Graph, labeling: TotalLabeling) -> Optional[int]:
    """The common edge sum, or None if sums differ or there are no edges."""
    check_total_labeling(graph, labeling)
    if graph.edge_count == 0:
        return None
    vl = labeling.vertex_labels
    el = labeling.edge_labels
    k = None
    for i, (u, v) in enumerate(graph.edges):
        s = vl[u] + vl[v] + el[i]
        if k is None:
            k = s
        elif s != k:
            return None
    return k


def consecutive_index_of(graph: Graph, labeling: TotalLabeling) -> Optional[int]:
    """Block offset b such that the edge labels are exactly {b+1..b+|E|}.

    Only reported for edge-magic labelings; a contiguous edge block without
    the magic property would be a misleading positive.
    """
    if graph.edge_count == 0:
        check_total_labeling(graph, labeling)
        return None
    if magic_constant_of(graph, labeling) is None:
        return None
    lo = min(labeling.edge_labels)
    hi = max(labeling.edge_labels)
    if hi - lo + 1 != graph.edge_count:
        return None
    b = lo - 1
    if not 0 <= b <= graph.vertex_count:
        return None
    return b


def neighbor_block_holds(graph: Graph, labeling: TotalLabeling, b: int) -> bool:
    """Do all neighbors of each vertex share one of the two vertex-label blocks?

    The blocks are {1..b} and {b+|E|+1..|V|+|E|}.  Inputs are checked for
    the structural preconditions (bijection, 1 <= b <= |V|); the block
    property itself is evaluated directly, so a corrupted labeling simply
    returns False.
    """
    check_total_labeling(graph, labeling)
    if not 1 <= b <= graph.vertex_count:
        raise LabelingError(f"b={b} outside 1..{graph.vertex_count}")
    high_start = b + graph.edge_count + 1
    vl = labeling.vertex_labels
    for nbrs in graph.adjacency:
        low = high = False
        for u in nbrs:
            if vl[u] <= b:
                low = True
            elif vl[u] >= high_start:
                high = True
            else:
                return False
        if low and high:
            return False
    return True


def is_graceful(graph: Graph, labeling: VertexLabeling) -> bool:
    """True iff the endpoint differences realize {1..|E|} exactly."""
    vl = labeling.vertex_labels
    if len(vl) != graph.vertex_count:
        raise LabelingError(
            f"expected {graph.vertex_count} vertex labels, got {len(vl)}")
    e = graph.edge_count
    if any(not 0 <= x <= e for x in vl):
        raise LabelingError(f"graceful labels must lie in 0..{e}")
    if len(set(vl)) != len(vl):
        raise LabelingError("graceful labels must be pairwise distinct")
    diffs = {abs(vl[u] - vl[v]) for u, v in graph.edges}
    return diffs == set(range(1, e + 1))


def classify(graph: Graph, labeling: TotalLabeling,
             bipartition: Optional[Bipartition] = None) -> LabelingClassification:
    """Aggregate magic constant, consecutive index, super flag, and side tag.

    The side tag names the partite side whose labels are exactly {1..b};
    it is only set for bipartite graphs with b equal to one side's size.
    """
    k = magic_constant_of(graph, labeling)
    b = consecutive_index_of(graph, labeling)
    is_super = b is not None and b == graph.vertex_count and graph.vertex_count > 0
    side = None
    if b is not None and 0 < b < graph.vertex_count:
        if bipartition is None and is_connected(graph):
            bipartition = bipartition_of(graph)
        if bipartition is not None:
            vl = labeling.vertex_labels
            small = frozenset(v for v in range(graph.vertex_count) if vl[v] <= b)
            if len(small) == b:
                if small == bipartition.side_x:
                    side = "X"
                elif small == bipartition.side_y:
                    side = "Y"
    return LabelingClassification(k, b, is_super, side)
