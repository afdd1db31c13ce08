"""Coxeter matrices, graphs, connected extensions and cycle bases.

Matrix entries are ints: the diagonal is 1, off-diagonal entries are >= 2,
and 0 marks an infinite label (also in the JSON format).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

INFINITY = 0


class MatrixError(ValueError):
    pass


@dataclass(frozen=True)
class CoxeterMatrix:
    n: int
    m: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(tuple(row) for row in self.m))
        self.validate()

    def validate(self):
        if self.n < 1 or len(self.m) != self.n:
            raise MatrixError("matrix size mismatch")
        for i, row in enumerate(self.m):
            if len(row) != self.n:
                raise MatrixError("matrix not square")
            if row[i] != 1:
                raise MatrixError(f"diagonal entry m[{i}][{i}] must be 1")
            for j, v in enumerate(row):
                if i != j and v != INFINITY and v < 2:
                    raise MatrixError(f"off-diagonal entry m[{i}][{j}] = {v} < 2")
                if v != self.m[j][i]:
                    raise MatrixError("matrix not symmetric")

    def entry(self, i, j):
        return self.m[i][j]

    def to_json(self):
        return json.dumps({"n": self.n, "m": [list(r) for r in self.m]},
                          sort_keys=True)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(int(data["n"]), tuple(tuple(r) for r in data["m"]))


def standard_matrix(family: str, n: int) -> CoxeterMatrix:
    """Coxeter matrix of type A/B/D at rank n.

    A: path, all labels 3.  B: path with label 4 on the 0-1 edge.
    D: fork at vertex 2 with legs 0 and 1, all labels 3.
    """
    family = family.upper()
    minima = {"A": 1, "B": 2, "D": 3}
    if family not in minima:
        raise MatrixError(f"unknown family {family!r}")
    if n < minima[family]:
        raise MatrixError(f"type {family} needs rank >= {minima[family]}")
    m = [[2] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 1
    if family in ("A", "B"):
        for i in range(n - 1):
            m[i][i + 1] = m[i + 1][i] = 3
        if family == "B":
            m[0][1] = m[1][0] = 4
    else:
        m[0][2] = m[2][0] = 3
        m[1][2] = m[2][1] = 3
        for i in range(2, n - 1):
            m[i][i + 1] = m[i + 1][i] = 3
    return CoxeterMatrix(n, tuple(tuple(r) for r in m))


@dataclass(frozen=True)
class CoxeterGraph:
    """Vertices 0..n-1; an edge {i,j} labeled m_ij exists iff m_ij >= 3
    or m_ij is infinite."""

    matrix: CoxeterMatrix

    @property
    def n(self):
        return self.matrix.n

    def edges(self):
        """Sorted list of (i, j, label) with i < j."""
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                v = self.matrix.entry(i, j)
                if v == INFINITY or v >= 3:
                    out.append((i, j, v))
        return out

    def neighbors(self, v):
        return sorted(j for i, j, _ in self.edges() if i == v) + \
            sorted(i for i, j, _ in self.edges() if j == v)

    def adjacency(self):
        adj = {v: set() for v in range(self.n)}
        for i, j, _ in self.edges():
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def components(self):
        """Connected components as sorted vertex lists, ordered by minimum."""
        adj = self.adjacency()
        seen = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in sorted(adj[v]):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps


def graph_from_matrix(m: CoxeterMatrix) -> CoxeterGraph:
    return CoxeterGraph(m)


@dataclass(frozen=True)
class ConnectedExtension:
    """A Coxeter graph plus virtual label-2 edges chaining component anchors."""

    graph: CoxeterGraph
    virtual_edges: tuple[tuple[int, int], ...]
    anchors: tuple[int, ...]

    @property
    def n(self):
        return self.graph.n

    def all_edges(self):
        """Sorted (i, j, label, is_virtual) for real and virtual edges."""
        out = [(i, j, lab, False) for i, j, lab in self.graph.edges()]
        out += [(i, j, 2, True) for i, j in self.virtual_edges]
        out.sort(key=lambda e: (e[0], e[1]))
        return out

    def adjacency(self):
        adj = self.graph.adjacency()
        for i, j in self.virtual_edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def connected(self, i, j):
        """True if vertices i, j are joined by a real or virtual edge."""
        return j in self.adjacency()[i]


def connected_extension(g: CoxeterGraph, anchors=None) -> ConnectedExtension:
    """Chain one anchor per component with virtual edges (in component order).

    Default anchors are the smallest vertex of each component.
    """
    comps = g.components()
    if anchors is None:
        anchors = [c[0] for c in comps]
    else:
        anchors = list(anchors)
        if len(anchors) != len(comps):
            raise ValueError("need exactly one anchor per component")
        by_comp = []
        for c in comps:
            hits = [a for a in anchors if a in c]
            if len(hits) != 1:
                raise ValueError(f"component {c} needs exactly one anchor, got {hits}")
            by_comp.append(hits[0])
        anchors = by_comp
    virtual = []
    for a, b in zip(anchors, anchors[1:]):
        virtual.append((min(a, b), max(a, b)))
    return ConnectedExtension(g, tuple(virtual), tuple(anchors))


def cycle_basis(ext: ConnectedExtension):
    """Fundamental cycles of the lowest-index DFS spanning tree from vertex 0.

    Each cycle is a closed vertex sequence (v0, v1, ..., v0).  Empty when
    the extension is a tree.
    """
    adj = {v: sorted(ws) for v, ws in ext.adjacency().items()}
    parent = {0: None}
    order = []
    stack = [0]
    tree_edges = set()
    while stack:
        v = stack.pop()
        order.append(v)
        for w in reversed(adj[v]):
            if w not in parent:
                parent[w] = v
                tree_edges.add((min(v, w), max(v, w)))
                stack.append(w)

    def path_to_root(v):
        out = [v]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return out

    cycles = []
    for i, j, _, _ in ext.all_edges():
        if (i, j) in tree_edges:
            continue
        pi, pj = path_to_root(i), path_to_root(j)
        common = set(pi) & set(pj)
        # lowest common ancestor = first common vertex on i's root path
        lca = next(v for v in pi if v in common)
        up = pi[: pi.index(lca) + 1]
        down = pj[: pj.index(lca)]
        cycles.append(_normalize_cycle(up + list(reversed(down))))
    return cycles


def _normalize_cycle(verts):
    """Rotate a cycle to start at its smallest vertex, oriented toward the
    smaller of that vertex's two cycle neighbors, and close it."""
    k = verts.index(min(verts))
    verts = verts[k:] + verts[:k]
    if verts[-1] < verts[1]:
        verts = [verts[0]] + verts[:0:-1]
    return tuple(verts + [verts[0]])


def graph_to_dot(ext: ConnectedExtension) -> str:
    """DOT export of an extension; virtual edges are dashed."""
    lines = ["graph coxeter {"]
    for v in range(ext.n):
        lines.append(f'  {v} [label="{v}"];')
    for i, j, lab, virtual in ext.all_edges():
        style = ', style=dashed' if virtual else ''
        lines.append(f'  {i} -- {j} [label="{lab}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
