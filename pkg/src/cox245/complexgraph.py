"""Finite balls of the Coxeter-complex 1-skeleton and the Cayley graph.

Vertices of the Coxeter complex are cosets of the three maximal standard
parabolics, stored by their unique shortest representative.  Four vertex/
edge universes are wired and never mixed silently:

``"full-Y"``
    all three coset types; edges are nonempty coset intersection, plus the
    pentagon edges {w*FixD8, wt*FixD8}.
``"pentagon-subcomplex"``
    the D8-coset orbit with pentagon edges only: the tiling of the
    hyperbolic plane by right-angled pentagons, four around each vertex.
``"d10-orbit"``
    the dual picture: D10-cosets with edges {w*FixD10, wr*FixD10}, five
    squares around each vertex.
``"cayley"``
    group elements, edges = right multiplication by a generator.

Balls are built by BFS; vertex order is BFS depth with canonical-word
tie-break inside each level, which makes slab dumps reproducible.
Distances inside a slab are certified: a value is marked exact only when no
shorter path could leave the ball, otherwise a lower bound is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque

from .coxeter import (
    D4,
    D8,
    D10,
    GroupElement,
    PARABOLICS,
    ParabolicId,
    element_of_word,
    identity,
    min_coset_rep,
    parabolic_elements,
    _mat_mul,  # internal fast path for coset enumeration
)

__all__ = [
    "MODES",
    "Vertex",
    "make_vertex",
    "cayley_vertex",
    "fix_vertex",
    "translate",
    "adjacent",
    "neighbors",
    "pentagon_cyclic_neighbors",
    "GraphSlab",
    "Distance",
    "build_ball",
    "graph_distance",
    "ResourceLimitExceeded",
    "VertexNotInSlab",
]

MODES = ("full-Y", "pentagon-subcomplex", "cayley", "d10-orbit")


class ResourceLimitExceeded(RuntimeError):
    """Ball construction hit the vertex cap."""


class VertexNotInSlab(KeyError):
    pass


@dataclass(frozen=True)
class Vertex:
    """A coset of a maximal parabolic (or a bare group element in Cayley mode).

    ``rep`` is always the minimal coset representative, so equality of
    vertices is equality of fields.
    """

    parabolic: ParabolicId | None
    rep: GroupElement

    def word(self) -> str:
        return self.rep.canonical_word()

    def label(self) -> str:
        tag = self.parabolic.name if self.parabolic else "CAY"
        return f"{tag}:{self.word() or 'e'}"


def make_vertex(parabolic: ParabolicId, g: GroupElement) -> Vertex:
    return Vertex(parabolic, min_coset_rep(g, parabolic))


def cayley_vertex(g: GroupElement) -> Vertex:
    return Vertex(None, g)


def fix_vertex(parabolic: ParabolicId) -> Vertex:
    """The vertex fixed by the parabolic: its identity coset."""
    return Vertex(parabolic, identity())


def translate(w: GroupElement, v: Vertex) -> Vertex:
    """Left action of the group on vertices."""
    if v.parabolic is None:
        return Vertex(None, w * v.rep)
    return make_vertex(v.parabolic, w * v.rep)


# --- neighbor oracles ------------------------------------------------------

def _orbit_steps(rot_word: str, order: int, edge_word: str):
    """Matrices rot^k * edge for k = 0..order-1, both chiralities."""
    rot = element_of_word(rot_word)
    rot_inv = rot.inverse()
    edge = element_of_word(edge_word)
    even, odd = [], []
    acc_e, acc_o = identity(), identity()
    for _ in range(order):
        even.append(_mat_mul(acc_e.mat, edge.mat))
        odd.append(_mat_mul(acc_o.mat, edge.mat))
        acc_e = acc_e * rot
        acc_o = acc_o * rot_inv
    return even, odd


_PENT_STEPS = _orbit_steps("rs", 4, "t")
_D10_STEPS = _orbit_steps("st", 5, "r")


def pentagon_cyclic_neighbors(v: Vertex) -> list[Vertex]:
    """The four pentagon neighbors of a D8-vertex, in rotation order.

    The order is the orbit of the quarter-turn rs conjugated to the vertex;
    the chirality is corrected by the parity of the representative so that
    "clockwise" means the same thing at every vertex of the tiling (up to
    one global flip, which only exchanges the two lateral turn letters).
    """
    if v.parabolic != D8:
        raise ValueError("pentagon neighbors are defined for D8-vertices")
    steps = _PENT_STEPS[v.rep.length() % 2]
    return [make_vertex(D8, GroupElement(_mat_mul(v.rep.mat, m))) for m in steps]


def _d10_cyclic_neighbors(v: Vertex) -> list[Vertex]:
    if v.parabolic != D10:
        raise ValueError("square-tiling neighbors are defined for D10-vertices")
    steps = _D10_STEPS[v.rep.length() % 2]
    return [make_vertex(D10, GroupElement(_mat_mul(v.rep.mat, m))) for m in steps]


def _dedup(seq):
    seen = set()
    out = []
    for v in seq:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def _intersection_neighbors(v: Vertex) -> list[Vertex]:
    out = []
    for qname in ("D8", "D10", "D4"):
        q = PARABOLICS[qname]
        if q == v.parabolic:
            continue
        out.extend(make_vertex(q, GroupElement(_mat_mul(v.rep.mat, p.mat)))
                   for p in parabolic_elements(v.parabolic))
    return _dedup(out)


_CAYLEY_GENS = tuple(element_of_word(x) for x in "rst")


def neighbors(v: Vertex, mode: str) -> list[Vertex]:
    """Deterministically ordered neighbor list in the given universe."""
    if mode == "cayley":
        return [Vertex(None, v.rep * g) for g in _CAYLEY_GENS]
    if mode == "pentagon-subcomplex":
        return pentagon_cyclic_neighbors(v)
    if mode == "d10-orbit":
        return _d10_cyclic_neighbors(v)
    if mode == "full-Y":
        out = _intersection_neighbors(v)
        if v.parabolic == D8:
            out.extend(pentagon_cyclic_neighbors(v))
        return _dedup(out)
    raise ValueError(f"unknown mode {mode!r}")


_MEMBER_CACHE: dict[str, frozenset] = {}


def _member_mats(p: ParabolicId) -> frozenset:
    cached = _MEMBER_CACHE.get(p.name)
    if cached is None:
        cached = frozenset(g.mat for g in parabolic_elements(p))
        _MEMBER_CACHE[p.name] = cached
    return cached


def adjacent(u: Vertex, v: Vertex) -> bool:
    """Coxeter-complex adjacency: the two cosets intersect.

    Distinct cosets of the same parabolic never intersect, so same-type
    vertices are never adjacent here; the pentagon edges are a different
    edge notion and belong to the subcomplex modes.
    """
    if u.parabolic is None or v.parabolic is None:
        raise ValueError("coset adjacency needs parabolic vertices")
    if u == v or u.parabolic == v.parabolic:
        return False
    diff = u.rep.inverse() * v.rep
    q_mats = _member_mats(v.parabolic)
    return any(_mat_mul(p.mat, diff.mat) in q_mats
               for p in parabolic_elements(u.parabolic))


# --- slabs -----------------------------------------------------------------

@dataclass(frozen=True)
class Distance:
    """A slab distance; ``exact`` is False when truncation may hide a
    shorter path, in which case ``lower_bound`` is still valid."""

    value: int
    exact: bool
    lower_bound: int


class GraphSlab:
    """Immutable BFS ball.  Vertices are indexed in (depth, canonical word)
    order; adjacency is symmetric and irreflexive."""

    def __init__(self, mode, center, radius, vertices, depth, adj):
        self.mode = mode
        self.center = center
        self.radius = radius
        self.vertices = vertices
        self.depth = depth
        self.adj = adj
        self.index = {v: i for i, v in enumerate(vertices)}

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.index

    def index_of(self, v: Vertex) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise VertexNotInSlab(v.label()) from None

    def edges(self):
        for i, nbrs in enumerate(self.adj):
            for j in nbrs:
                if i < j:
                    yield (i, j)

    def distance(self, u: Vertex, v: Vertex) -> Distance:
        """BFS distance inside the slab, with a truncation certificate."""
        iu = self.index_of(u)
        iv = self.index_of(v)
        if iu == iv:
            return Distance(0, True, 0)
        dist = {iu: 0}
        queue = deque([iu])
        found = -1
        while queue:
            i = queue.popleft()
            if i == iv:
                found = dist[i]
                break
            for j in self.adj[i]:
                if j not in dist:
                    dist[j] = dist[i] + 1
                    queue.append(j)
        du, dv = self.depth[iu], self.depth[iv]
        escape = (self.radius + 1 - du) + (self.radius + 1 - dv)
        if found >= 0:
            exact = min(du, dv) + found <= self.radius + 1
            return Distance(found, exact, found if exact else min(found, escape))
        return Distance(escape, False, escape)

    def dump(self) -> str:
        """Debug text form: vertex lines "idx parabolic rep-word", then edge
        lines "i j"; ordering is the slab's deterministic vertex order."""
        lines = []
        for i, v in enumerate(self.vertices):
            tag = v.parabolic.name if v.parabolic else "CAY"
            lines.append(f"{i} {tag} {v.word() or 'e'}")
        for i, j in self.edges():
            lines.append(f"{i} {j}")
        return "\n".join(lines) + "\n"


def _check_center(center: Vertex, mode: str):
    if mode == "cayley":
        ok = center.parabolic is None
    elif mode == "pentagon-subcomplex":
        ok = center.parabolic == D8
    elif mode == "d10-orbit":
        ok = center.parabolic == D10
    elif mode == "full-Y":
        ok = center.parabolic is not None
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if not ok:
        raise ValueError(f"center {center.label()} does not fit mode {mode!r}")


def build_ball(center: Vertex, radius: int, mode: str,
               max_vertices: int = 500_000) -> GraphSlab:
    """BFS-complete ball of the given radius around ``center``."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    _check_center(center, mode)
    vertices = [center]
    depth = [0]
    index = {center: 0}
    nbr_lists: list[list[Vertex] | None] = [None]
    level = [0]
    for d in range(radius):
        discovered: dict[Vertex, None] = {}
        for i in level:
            nbrs = neighbors(vertices[i], mode)
            nbr_lists[i] = nbrs
            for nb in nbrs:
                if nb not in index and nb not in discovered:
                    discovered[nb] = None
        if not discovered:
            level = []
            break
        fresh = sorted(discovered, key=lambda v: (v.word(), v.parabolic.name if v.parabolic else ""))
        if len(vertices) + len(fresh) > max_vertices:
            raise ResourceLimitExceeded(
                f"ball exceeds {max_vertices} vertices at depth {d + 1}")
        level = []
        for v in fresh:
            index[v] = len(vertices)
            level.append(len(vertices))
            vertices.append(v)
            depth.append(d + 1)
            nbr_lists.append(None)
    for i in level:  # frontier still needs its in-slab edges
        nbr_lists[i] = neighbors(vertices[i], mode)
    adj: list[tuple[int, ...]] = []
    for i, nbrs in enumerate(nbr_lists):
        hits = sorted({index[nb] for nb in nbrs if nb in index} - {i})
        adj.append(tuple(hits))
    return GraphSlab(mode, center, radius, tuple(vertices), tuple(depth), tuple(adj))


def graph_distance(u: Vertex, v: Vertex, mode: str, max_depth: int = 64) -> int | None:
    """Exact distance in the (infinite) graph by bidirectional BFS.

    Returns None when the distance exceeds ``max_depth``.  Unlike slab
    distances this never suffers truncation: the frontier is generated from
    the group action on demand.
    """
    if u == v:
        return 0
    side_a = {u: 0}
    side_b = {v: 0}
    front_a, front_b = [u], [v]
    ra = rb = 0
    while ra + rb < max_depth and front_a and front_b:
        if len(front_a) <= len(front_b):
            front, dist, other, r = front_a, side_a, side_b, ra
            ra += 1
        else:
            front, dist, other, r = front_b, side_b, side_a, rb
            rb += 1
        nxt = []
        for x in front:
            for nb in neighbors(x, mode):
                if nb in other:
                    return r + 1 + other[nb]
                if nb not in dist:
                    dist[nb] = r + 1
                    nxt.append(nb)
        if front is front_a:
            front_a = nxt
        else:
            front_b = nxt
    return None
