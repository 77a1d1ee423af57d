"""The inference rules of the certificate calculus.

An edge type E is *elementarily implied* from a set of types by a 4- or
5-cycle whose sides all carry known types and whose diagonals all carry the
single type E (two diagonals for a 4-cycle, five for a 5-cycle; no
weakening to "some diagonal").  A *chain implication* applies elementary
steps in sequence, each enlarging the known set.

Cycle vertices are hypothetical: they need not be adjacent in any graph,
and repeats are permitted (a pair (v, v) counts as contained), though any
witness using them is flagged as degenerate in the log.

``find_witness`` searches a slab for a cycle realizing a wanted implication
deterministically: 4-cycles before 5-cycles, lexicographically in BFS
vertex indices.  ``dihedral_closure`` runs the same calculus inside an
abstract dihedral orbit, which is how the diagonal-implies-clique
closures of the 8-gon and 10-gon are checked.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .complexgraph import GraphSlab, Vertex, fix_vertex
from .coxeter import D4, D8, D10, identity
from .edgetypes import EdgeTypeKey, key_partners, pair_key

__all__ = [
    "SideNotKnown",
    "DiagonalsNotUniform",
    "ChainStepError",
    "CycleWitness",
    "LogEntry",
    "ImplicationState",
    "check_elementary",
    "close_chain",
    "find_witness",
    "close_orbit",
    "dihedral_closure",
    "DIHEDRAL_CHORD_LABELS",
]


class SideNotKnown(ValueError):
    def __init__(self, index: int, key: EdgeTypeKey):
        self.index = index
        self.key = key
        super().__init__(f"side {index} has type {key.serialize()} not in the known set")


class DiagonalsNotUniform(ValueError):
    def __init__(self, keys):
        self.keys = tuple(keys)
        super().__init__(
            "diagonals carry distinct types: " + ", ".join(k.serialize() for k in self.keys))


class ChainStepError(ValueError):
    def __init__(self, step: int, cause: Exception):
        self.step = step
        self.cause = cause
        super().__init__(f"chain step {step} failed: {cause}")


@dataclass(frozen=True)
class CycleWitness:
    """A 4- or 5-cycle of vertices with the type its diagonals should carry."""

    points: tuple[Vertex, ...]
    claimed_target: EdgeTypeKey | None = None

    def __post_init__(self):
        if len(self.points) not in (4, 5):
            raise ValueError("a cycle witness has exactly 4 or 5 vertices")

    @property
    def degenerate(self) -> bool:
        return len(set(self.points)) < len(self.points)

    def labels(self) -> tuple[str, ...]:
        return tuple(p.label() for p in self.points)


@dataclass(frozen=True)
class LogEntry:
    cycle: tuple[str, ...]
    derived: str
    degenerate: bool
    note: str = ""


@dataclass(frozen=True)
class ImplicationState:
    """Immutable set of known edge types plus the derivation log."""

    known: tuple[EdgeTypeKey, ...]
    log: tuple[LogEntry, ...] = ()

    @classmethod
    def initial(cls, keys) -> "ImplicationState":
        ordered = []
        for k in keys:
            if k not in ordered:
                ordered.append(k)
        return cls(tuple(ordered))

    @cached_property
    def known_set(self) -> frozenset[EdgeTypeKey]:
        return frozenset(self.known)

    def has(self, key: EdgeTypeKey) -> bool:
        return key.is_degenerate or key in self.known_set

    def add(self, key: EdgeTypeKey, entry: LogEntry) -> "ImplicationState":
        known = self.known if key in self.known_set else self.known + (key,)
        return ImplicationState(known, self.log + (entry,))


def _sides(points):
    n = len(points)
    return [(i, (i + 1) % n) for i in range(n)]


def _diagonals(points):
    n = len(points)
    if n == 4:
        return [(0, 2), (1, 3)]
    return [(i, (i + 2) % 5) for i in range(5)]


def check_elementary(state: ImplicationState, cycle: CycleWitness) -> EdgeTypeKey:
    """The implied type of the cycle, or an error naming what failed.

    Sides must carry known (or degenerate) types; all diagonals must carry
    one common type, which is returned.
    """
    pts = cycle.points
    for idx, (i, j) in enumerate(_sides(pts)):
        k = pair_key(pts[i], pts[j])
        if not state.has(k):
            raise SideNotKnown(idx, k)
    diag_keys = [pair_key(pts[i], pts[j]) for i, j in _diagonals(pts)]
    first = diag_keys[0]
    if any(k != first for k in diag_keys[1:]):
        raise DiagonalsNotUniform(diag_keys)
    return first


def apply_elementary(state: ImplicationState, cycle: CycleWitness,
                     note: str = "") -> tuple[ImplicationState, EdgeTypeKey]:
    derived = check_elementary(state, cycle)
    entry = LogEntry(cycle.labels(), derived.serialize(), cycle.degenerate, note)
    return state.add(derived, entry), derived


def close_chain(state: ImplicationState, cycles) -> ImplicationState:
    """Apply the cycles in order, growing the known set; atomic on failure
    (the input state is never touched, errors carry the failing step)."""
    current = state
    for step, cycle in enumerate(cycles):
        try:
            current, _ = apply_elementary(current, cycle)
        except (SideNotKnown, DiagonalsNotUniform) as exc:
            raise ChainStepError(step, exc) from exc
    return current


# --- witness search --------------------------------------------------------

class _SearchSpace:
    """Partner-set machinery over one slab, memoised across queries."""

    def __init__(self, slab: GraphSlab, anchor: Vertex | None, radius: int | None):
        self.slab = slab
        anchor = anchor if anchor is not None else slab.center
        radius = radius if radius is not None else slab.radius
        if anchor == slab.center:
            dist = slab.depth
        else:
            dist = self._bfs_from(slab.index_of(anchor))
        self.eligible = tuple(i for i in range(len(slab.vertices))
                              if dist[i] is not None and dist[i] <= radius)
        self.eligible_set = frozenset(self.eligible)
        self._partners: dict[tuple[int, EdgeTypeKey], tuple[int, ...]] = {}
        self._known: dict[tuple[int, frozenset], tuple[int, ...]] = {}

    def _bfs_from(self, start: int):
        dist: list[int | None] = [None] * len(self.slab.vertices)
        dist[start] = 0
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in self.slab.adj[i]:
                if dist[j] is None:
                    dist[j] = dist[i] + 1
                    queue.append(j)
        return dist

    def partners(self, i: int, key: EdgeTypeKey) -> tuple[int, ...]:
        memo_key = (i, key)
        got = self._partners.get(memo_key)
        if got is None:
            idx = self.slab.index
            hits = set()
            for cand in key_partners(self.slab.vertices[i], key):
                j = idx.get(cand)
                if j is not None and j in self.eligible_set:
                    hits.add(j)
            got = tuple(sorted(hits))
            self._partners[memo_key] = got
        return got

    def known_partners(self, i: int, keys: frozenset[EdgeTypeKey]) -> tuple[int, ...]:
        memo_key = (i, keys)
        got = self._known.get(memo_key)
        if got is None:
            hits = {i}  # a repeated vertex is a degenerate side, always allowed
            for k in keys:
                if not k.is_degenerate:
                    hits.update(self.partners(i, k))
            got = tuple(sorted(hits))
            self._known[memo_key] = got
        return got


def _abstract_anchors(mode: str) -> tuple[Vertex, ...]:
    if mode == "cayley":
        return (Vertex(None, identity()),)
    if mode == "pentagon-subcomplex":
        return (fix_vertex(D8),)
    if mode == "d10-orbit":
        return (fix_vertex(D10),)
    return (fix_vertex(D8), fix_vertex(D10), fix_vertex(D4))


def _abstract_cycle_exists(keys, target: EdgeTypeKey, mode: str, length: int) -> bool:
    """Whether ANY cycle with the wanted side/diagonal types exists.

    Cycle existence is invariant under the left action, so every witness
    translates to one through a fixed anchor of its own vertex type; the
    check runs with no radius bound, hence a negative here proves the slab
    sweep would come up empty and can be skipped.
    """
    memo: dict[tuple[Vertex, EdgeTypeKey], tuple[Vertex, ...]] = {}

    def partners(v, key):
        mk = (v, key)
        got = memo.get(mk)
        if got is None:
            got = tuple(key_partners(v, key))
            memo[mk] = got
        return got

    def known_partners(v):
        out = {v}
        for k in keys:
            if not k.is_degenerate:
                out.update(partners(v, k))
        return out

    for u0 in _abstract_anchors(mode):
        t0 = set(partners(u0, target))
        if not t0:
            continue
        kp0 = known_partners(u0)
        if length == 4:
            for u1 in kp0:
                hits = known_partners(u1) & t0
                if not hits:
                    continue
                t1 = set(partners(u1, target))
                for u2 in hits:
                    for u3 in known_partners(u2):
                        if u3 in t1 and u3 in kp0:
                            return True
        else:
            for u1 in kp0:
                t1 = set(partners(u1, target))
                if not t1:
                    continue
                for u2 in known_partners(u1) & t0:
                    t2 = set(partners(u2, target))
                    for u3 in known_partners(u2) & t1 & t0:
                        for u4 in known_partners(u3):
                            if u4 in kp0 and u4 in t2 and u4 in t1:
                                return True
    return False


def find_witness(state: ImplicationState, target: EdgeTypeKey, slab: GraphSlab,
                 anchor: Vertex | None = None, radius: int | None = None,
                 space: _SearchSpace | None = None) -> CycleWitness | None:
    """First cycle (4-cycles first, then 5-cycles, lexicographic in slab
    indices) with sides in ``state.known`` and all diagonals in ``target``.

    Returns None when no witness lies within ``radius`` of ``anchor``; that
    is an "inconclusive", never a refutation.  Deterministic by search
    order.  Pass a shared ``space`` to reuse partner sets across calls.
    """
    if space is None:
        space = _SearchSpace(slab, anchor, radius)
    keys = frozenset(state.known_set)
    verts = slab.vertices

    def witness(*idxs):
        return CycleWitness(tuple(verts[i] for i in idxs), target)

    eligible_4 = space.eligible if _abstract_cycle_exists(keys, target, slab.mode, 4) else ()
    for i0 in eligible_4:
        t0 = set(space.partners(i0, target))
        if not t0:
            continue
        kp0 = None
        for i1 in space.known_partners(i0, keys):
            c2 = [j for j in space.known_partners(i1, keys) if j in t0]
            if not c2:
                continue
            if kp0 is None:
                kp0 = set(space.known_partners(i0, keys))
            t1 = set(space.partners(i1, target))
            for i2 in c2:
                for i3 in space.known_partners(i2, keys):
                    if i3 in t1 and i3 in kp0:
                        return witness(i0, i1, i2, i3)
    eligible_5 = space.eligible if _abstract_cycle_exists(keys, target, slab.mode, 5) else ()
    for i0 in eligible_5:
        t0 = set(space.partners(i0, target))
        if not t0:
            continue
        kp0 = set(space.known_partners(i0, keys))
        for i1 in space.known_partners(i0, keys):
            t1 = set(space.partners(i1, target))
            if not t1:
                continue
            for i2 in space.known_partners(i1, keys):
                if i2 not in t0:
                    continue
                t2 = set(space.partners(i2, target))
                for i3 in space.known_partners(i2, keys):
                    if i3 not in t1 or i3 not in t0:
                        continue
                    for i4 in space.known_partners(i3, keys):
                        if i4 in kp0 and i4 in t2 and i4 in t1:
                            return witness(i0, i1, i2, i3, i4)
    return None


def close_orbit(state: ImplicationState, points: list[Vertex],
                note: str = "") -> ImplicationState:
    """Exhaust elementary implications whose vertices lie in ``points``.

    Used for dihedral orbits (finitely many vertices) where the claim is
    that the whole orbit becomes a clique; the caller checks that.
    """
    keys = {}
    n = len(points)
    for i in range(n):
        for j in range(n):
            keys[(i, j)] = pair_key(points[i], points[j])

    def scan(current):
        known = current.known_set
        def ok(i, j):
            k = keys[(i, j)]
            return k.is_degenerate or k in known
        for i0 in range(n):
            for i1 in range(n):
                if not ok(i0, i1):
                    continue
                for i2 in range(n):
                    if not ok(i1, i2):
                        continue
                    d1 = keys[(i0, i2)]
                    for i3 in range(n):
                        if ok(i2, i3) and ok(i3, i0) and keys[(i1, i3)] == d1 \
                                and not current.has(d1):
                            return CycleWitness((points[i0], points[i1], points[i2], points[i3]), d1)
        for i0 in range(n):
            for i1 in range(n):
                if not ok(i0, i1):
                    continue
                for i2 in range(n):
                    if not ok(i1, i2):
                        continue
                    d1 = keys[(i0, i2)]
                    if current.has(d1):
                        continue
                    for i3 in range(n):
                        if not ok(i2, i3) or keys[(i1, i3)] != d1:
                            continue
                        for i4 in range(n):
                            if ok(i3, i4) and ok(i4, i0) and keys[(i2, i4)] == d1 \
                                    and keys[(i3, i0)] == d1 and keys[(i4, i1)] == d1:
                                return CycleWitness(
                                    (points[i0], points[i1], points[i2], points[i3], points[i4]), d1)
        return None

    current = state
    while True:
        cyc = scan(current)
        if cyc is None:
            return current
        current, _ = apply_elementary(current, cyc, note)


# --- abstract dihedral model ------------------------------------------------

DIHEDRAL_CHORD_LABELS = {4: ("2", "3", "3'", "4"), 5: ("2", "3", "3'", "4", "5")}


def _dihedral_tables(m: int):
    """Pair-class table of the 2m-gon orbit of the dihedral group of order 2m.

    Points are group elements (k, f) = (ab)^k a^f in cycle order
    e, a, ab, aba, ...; the class of a pair is {d, d^-1} for d = p_i^-1 p_j,
    which is a complete orbit invariant because the action on the orbit is
    simply transitive.
    """
    def mul(x, y):
        k, f = x
        l, e = y
        return ((k + l) % m if f == 0 else (k - l) % m, (f + e) % 2)

    def inv(x):
        k, f = x
        return ((-k) % m, 0) if f == 0 else x

    points = []
    for j in range(m):
        points.append((j, 0))
        points.append((j, 1))

    def cls(i, j):
        d = mul(inv(points[i]), points[j])
        return min(d, inv(d))

    labels = {cls(0, 0): "0", min((0, 1), (0, 1)): "1a",
              min((m - 1, 1), (m - 1, 1)): "1b",
              min((1, 0), inv((1, 0))): "2", (1, 1): "3", (m - 2, 1): "3'",
              min((2, 0), inv((2, 0))): "4"}
    if m == 5:
        labels[(2, 1)] = "5"
    n = 2 * m
    table = [[labels[cls(i, j)] for j in range(n)] for i in range(n)]
    return table


def _dihedral_signatures(m: int):
    """All distinct (sides, diagonals) label signatures of 4- and 5-tuples
    through the basepoint; the group acts transitively on the orbit, so
    anchoring one vertex loses no implications."""
    table = _dihedral_tables(m)
    n = 2 * m
    sigs = set()
    rng = range(n)
    for x in rng:
        for y in rng:
            for z in rng:
                sides = frozenset((table[0][x], table[x][y], table[y][z], table[z][0]))
                d1, d2 = table[0][y], table[x][z]
                if d1 == d2:
                    sigs.add((sides, d1))
    for x in rng:
        for y in rng:
            for z in rng:
                d1, d2 = table[0][y], table[x][z]
                if d1 != d2:
                    continue
                for u in rng:
                    if table[y][u] == d1 and table[z][0] == d1 and table[u][x] == d1:
                        sides = frozenset(
                            (table[0][x], table[x][y], table[y][z], table[z][u], table[u][0]))
                        sigs.add((sides, d1))
    return tuple(sorted(sigs, key=lambda s: (s[1], sorted(s[0]))))


_SIG_CACHE: dict[int, tuple] = {}


def dihedral_closure(m: int, seed: str) -> set[str]:
    """Chord classes derivable from the orbit sides plus one seeded chord.

    The 2m-gon orbit of the dihedral group of order 2m has chord classes
    2, 3, 3', 4 (and 5 when m = 5); the closure claim is that any single
    seed forces all of them.
    """
    if m not in DIHEDRAL_CHORD_LABELS:
        raise ValueError("m must be 4 or 5")
    if seed not in DIHEDRAL_CHORD_LABELS[m]:
        raise ValueError(f"invalid seed {seed!r}; chord classes are {DIHEDRAL_CHORD_LABELS[m]}")
    sigs = _SIG_CACHE.get(m)
    if sigs is None:
        sigs = _dihedral_signatures(m)
        _SIG_CACHE[m] = sigs
    known = {"0", "1a", "1b", seed}
    changed = True
    while changed:
        changed = False
        for sides, diag in sigs:
            if diag not in known and sides <= known:
                known.add(diag)
                changed = True
    return known & set(DIHEDRAL_CHORD_LABELS[m])
