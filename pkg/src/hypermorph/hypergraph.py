"""Immutable hypergraph incidence structure and the elementary
vertex/edge cross-operators.

A hypergraph holds ``vertex_count`` vertices and an ordered list of
hyperedges, each a duplicate-free set of vertex indices.  Vertex and
edge subsets are dense boolean numpy vectors (``VertexSet`` /
``EdgeSet`` below are aliases, not wrapper classes); a
``SubHypergraph`` pairs one of each under the closedness invariant
that every selected edge has all its vertices selected.

The four cross-operators map between the two lattices of subsets:

* ``edge_to_vertex_dilate``: union of the selected edges' vertices
* ``vertex_to_edge_erode``:  edges entirely inside the vertex selection
* ``edge_to_vertex_erode``:  vertices avoided by every unselected edge
* ``vertex_to_edge_dilate``: edges meeting the vertex selection

``(vertex_to_edge_erode, edge_to_vertex_dilate)`` and
``(edge_to_vertex_erode, vertex_to_edge_dilate)`` are adjunctions, with
the dilation as the lower adjoint in both pairs:

    edge_to_vertex_dilate(xe) <= xv  iff  xe <= vertex_to_edge_erode(xv)
    vertex_to_edge_dilate(xv) <= xe  iff  xv <= edge_to_vertex_erode(xe)

Each erosion is also the complement-dual of the dilation pointing the
opposite way.  The test suite verifies both facts exhaustively on small
instances.
"""

from typing import Iterable, NamedTuple

import numpy as np

from . import kernels

# Dense membership vectors over the vertex and edge index ranges.
VertexSet = np.ndarray
EdgeSet = np.ndarray


class DimensionMismatch(ValueError):
    """A membership vector does not match the owning hypergraph."""


class ClosednessError(RuntimeError):
    """An operator produced a vertex/edge pair violating closedness.

    Raised only from internal assertions; seeing one means a bug in the
    operator algebra, not bad user input.
    """


class SubHypergraph(NamedTuple):
    """A vertex selection plus an edge selection, kept closed."""

    vertices: VertexSet
    hedges: EdgeSet


class Hypergraph:
    """Immutable incidence structure.

    Edges are stored CSR-style (``edge_ptr`` into ``edge_vertices``)
    together with the transposed vertex-to-edge index (``vertex_ptr``
    into ``vertex_edges``).  All arrays are read-only; instances are
    safe to share across threads.

    Edges with identical vertex sets are distinct edges.  Empty edges
    are rejected: an empty edge would be inside every vertex selection
    yet touch none, breaking the dilation/erosion symmetry.
    """

    __slots__ = (
        "vertex_count",
        "edge_ptr",
        "edge_vertices",
        "vertex_ptr",
        "vertex_edges",
        "_edges_cache",
    )

    def __init__(self, vertex_count: int, edges: Iterable[Iterable[int]]):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        flat: list[int] = []
        ptr = [0]
        for edge in edges:
            members = list(edge)
            flat.extend(members)
            ptr.append(len(flat))
        self._init_csr(
            int(vertex_count),
            np.asarray(ptr, dtype=np.int64),
            np.asarray(flat, dtype=np.int64),
        )

    @classmethod
    def from_csr(cls, vertex_count: int, edge_ptr: np.ndarray, edge_vertices: np.ndarray) -> "Hypergraph":
        """Build directly from CSR arrays (used by the grid builders)."""
        h = cls.__new__(cls)
        h._init_csr(
            int(vertex_count),
            np.array(edge_ptr, dtype=np.int64),  # private copies; frozen below
            np.array(edge_vertices, dtype=np.int64),
        )
        return h

    def _init_csr(self, vertex_count: int, edge_ptr: np.ndarray, edge_vertices: np.ndarray) -> None:
        if edge_ptr.ndim != 1 or edge_ptr.size == 0 or edge_ptr[0] != 0:
            raise ValueError("edge_ptr must be 1-D, non-empty and start at 0")
        if edge_ptr[-1] != edge_vertices.size or np.any(np.diff(edge_ptr) < 0):
            raise ValueError("edge_ptr does not delimit edge_vertices")
        sizes = np.diff(edge_ptr)
        if np.any(sizes == 0):
            raise ValueError("empty hyperedges are not allowed")
        if edge_vertices.size:
            if edge_vertices.min() < 0 or edge_vertices.max() >= vertex_count:
                raise ValueError("edge vertex index out of range")
        n_edges = edge_ptr.size - 1
        slot_edge = np.repeat(np.arange(n_edges, dtype=np.int64), sizes)
        if edge_vertices.size:
            order = np.lexsort((edge_vertices, slot_edge))
            sv = edge_vertices[order]
            se = slot_edge[order]
            dup = (sv[1:] == sv[:-1]) & (se[1:] == se[:-1])
            if np.any(dup):
                raise ValueError("duplicate vertex inside a hyperedge")
        # transpose: for each vertex, the ascending list of incident edges
        counts = np.bincount(edge_vertices, minlength=vertex_count)
        vertex_ptr = np.zeros(vertex_count + 1, dtype=np.int64)
        np.cumsum(counts, out=vertex_ptr[1:])
        by_vertex = np.argsort(edge_vertices, kind="stable")
        vertex_edges = slot_edge[by_vertex]

        for arr in (edge_ptr, edge_vertices, vertex_ptr, vertex_edges):
            arr.setflags(write=False)
        self.vertex_count = vertex_count
        self.edge_ptr = edge_ptr
        self.edge_vertices = edge_vertices
        self.vertex_ptr = vertex_ptr
        self.vertex_edges = vertex_edges
        self._edges_cache = None

    # -- basic queries ----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return self.edge_ptr.size - 1

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        """Edges as tuples of vertex indices, in storage order."""
        if self._edges_cache is None:
            ev = self.edge_vertices
            ep = self.edge_ptr
            self._edges_cache = tuple(
                tuple(int(v) for v in ev[ep[e] : ep[e + 1]])
                for e in range(self.edge_count)
            )
        return self._edges_cache

    @property
    def vertex_to_edges(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the ascending tuple of incident edge indices."""
        ve = self.vertex_edges
        vp = self.vertex_ptr
        return tuple(
            tuple(int(e) for e in ve[vp[v] : vp[v + 1]])
            for v in range(self.vertex_count)
        )

    def __repr__(self) -> str:
        return f"Hypergraph(vertices={self.vertex_count}, edges={self.edge_count})"

    # -- subset constructors ------------------------------------------------

    def vertex_set(self, members: Iterable[int] | None = None) -> VertexSet:
        out = np.zeros(self.vertex_count, dtype=np.bool_)
        if members is not None:
            out[list(members)] = True
        return out

    def edge_set(self, members: Iterable[int] | None = None) -> EdgeSet:
        out = np.zeros(self.edge_count, dtype=np.bool_)
        if members is not None:
            out[list(members)] = True
        return out

    def full_vertex_set(self) -> VertexSet:
        return np.ones(self.vertex_count, dtype=np.bool_)

    def full_edge_set(self) -> EdgeSet:
        return np.ones(self.edge_count, dtype=np.bool_)

    # -- debug dump ---------------------------------------------------------

    def to_text(self) -> str:
        """Debug dump: 'H <vertices> <edges>' then one line per edge."""
        lines = [f"H {self.vertex_count} {self.edge_count}"]
        for e in self.edges:
            lines.append(" ".join(str(v) for v in e))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Hypergraph":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("H "):
            raise ValueError("hypergraph dump must start with 'H <vertices> <edges>'")
        _, nv, ne = lines[0].split()
        edges = [[int(tok) for tok in ln.split()] for ln in lines[1 : 1 + int(ne)]]
        if len(edges) != int(ne):
            raise ValueError("hypergraph dump truncated")
        return cls(int(nv), edges)


# ---------------------------------------------------------------------------
# validation helpers

def check_vertex_set(h: Hypergraph, xv: np.ndarray) -> np.ndarray:
    xv = np.asarray(xv)
    if xv.ndim != 1 or xv.size != h.vertex_count:
        raise DimensionMismatch(
            f"vertex set of size {xv.size} does not fit hypergraph with "
            f"{h.vertex_count} vertices"
        )
    return xv.astype(np.bool_, copy=False)


def check_edge_set(h: Hypergraph, xe: np.ndarray) -> np.ndarray:
    xe = np.asarray(xe)
    if xe.ndim != 1 or xe.size != h.edge_count:
        raise DimensionMismatch(
            f"edge set of size {xe.size} does not fit hypergraph with "
            f"{h.edge_count} edges"
        )
    return xe.astype(np.bool_, copy=False)


# ---------------------------------------------------------------------------
# the four cross-operators

def edge_to_vertex_dilate(h: Hypergraph, xe: EdgeSet) -> VertexSet:
    """Union of the vertex sets of all selected edges."""
    xe = check_edge_set(h, xe)
    return kernels.cover_from_edges(h.vertex_count, h.edge_ptr, h.edge_vertices, xe)


def vertex_to_edge_erode(h: Hypergraph, xv: VertexSet) -> EdgeSet:
    """Edges whose vertices all belong to the selection."""
    xv = check_vertex_set(h, xv)
    return kernels.edges_inside(h.edge_ptr, h.edge_vertices, xv)


def edge_to_vertex_erode(h: Hypergraph, xe: EdgeSet) -> VertexSet:
    """Vertices belonging to no unselected edge.

    Equivalently the complement of the union of the unselected edges'
    vertices, so selecting every edge yields the full vertex set.
    """
    xe = check_edge_set(h, xe)
    covered = kernels.cover_from_edges(h.vertex_count, h.edge_ptr, h.edge_vertices, ~xe)
    return ~covered


def vertex_to_edge_dilate(h: Hypergraph, xv: VertexSet) -> EdgeSet:
    """Edges meeting the selection in at least one vertex."""
    xv = check_vertex_set(h, xv)
    return kernels.edges_touching(h.edge_ptr, h.edge_vertices, xv)


def complement_vertices(h: Hypergraph, xv: VertexSet) -> VertexSet:
    return ~check_vertex_set(h, xv)


def complement_edges(h: Hypergraph, xe: EdgeSet) -> EdgeSet:
    return ~check_edge_set(h, xe)


def is_subhypergraph(h: Hypergraph, xv: VertexSet, xe: EdgeSet) -> bool:
    """True iff every selected edge has all of its vertices selected."""
    xv = check_vertex_set(h, xv)
    xe = check_edge_set(h, xe)
    inside = kernels.edges_inside(h.edge_ptr, h.edge_vertices, xv)
    return not bool(np.any(xe & ~inside))
