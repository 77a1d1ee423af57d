"""Canonical orbit invariants ("edge types") of unordered vertex pairs.

Two modes share one key type:

* complex mode: a pair of parabolic-coset vertices (gP, hQ).  Orbits of
  ordered pairs under the left action biject with double cosets P\\W/Q, so
  the invariant is the canonical word of the minimal double-coset
  representative of g^-1 h; the unordered key is the lexicographically
  smaller of the two oriented serializations.
* cayley mode: a pair of group elements (g, h); the invariant is the
  smaller of the canonical words of g^-1 h and h^-1 g.

Keys are exact: equal keys if and only if the pairs lie in one W-orbit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexgraph import GraphSlab, Vertex, make_vertex, translate
from .coxeter import (
    GroupElement,
    PARABOLICS,
    element_of_word,
    min_double_coset_rep,
    parabolic_elements,
)

__all__ = [
    "EdgeTypeKey",
    "type_key_cayley",
    "type_key_complex",
    "pair_key",
    "key_partners",
    "orbit_sample",
    "find_pair_transport",
]


@dataclass(frozen=True)
class EdgeTypeKey:
    mode: str  # "cayley" or "complex"
    p: str | None
    q: str | None
    word: str

    def serialize(self) -> str:
        if self.mode == "cayley":
            return f"CAY:{self.word}"
        return f"CPLX:{self.p}:{self.q}:{self.word}"

    @property
    def is_degenerate(self) -> bool:
        """The type of a pair (v, v); always treated as contained."""
        return self.word == ""

    def __repr__(self):
        return self.serialize()


def type_key_cayley(g: GroupElement, h: GroupElement) -> EdgeTypeKey:
    w1 = (g.inverse() * h).canonical_word()
    w2 = (h.inverse() * g).canonical_word()
    return EdgeTypeKey("cayley", None, None, min(w1, w2))


def type_key_complex(u: Vertex, v: Vertex) -> EdgeTypeKey:
    if u.parabolic is None or v.parabolic is None:
        raise ValueError("complex keys need parabolic-coset vertices")
    d1 = min_double_coset_rep(u.rep.inverse() * v.rep, u.parabolic, v.parabolic)
    d2 = d1.inverse()  # the minimal rep of the reversed pair's double coset
    k1 = (u.parabolic.name, v.parabolic.name, d1.canonical_word())
    k2 = (v.parabolic.name, u.parabolic.name, d2.canonical_word())
    p, q, w = min(k1, k2)
    return EdgeTypeKey("complex", p, q, w)


def pair_key(u: Vertex, v: Vertex) -> EdgeTypeKey:
    """Dispatch on the vertex universe; Cayley vertices have no parabolic."""
    if u.parabolic is None:
        return type_key_cayley(u.rep, v.rep)
    return type_key_complex(u, v)


def key_partners(v: Vertex, key: EdgeTypeKey) -> list[Vertex]:
    """All vertices u with pair_key(v, u) == key, in deterministic order.

    In complex mode the partners of a P-side vertex for key (P, Q, w) are
    the cosets v.rep * p * w * Q with p in P; the mirrored orientation uses
    w^-1.  Both directions are generated, deduplicated in order.
    """
    if key.mode == "cayley":
        g = element_of_word(key.word)
        out = [Vertex(None, v.rep * g)]
        back = Vertex(None, v.rep * g.inverse())
        if back != out[0]:
            out.append(back)
        return out
    w = element_of_word(key.word)
    variants = []
    if v.parabolic.name == key.p:
        variants.append((w, PARABOLICS[key.q]))
    if v.parabolic.name == key.q:
        variants.append((w.inverse(), PARABOLICS[key.p]))
    out = []
    seen = set()
    for step, target_parab in variants:
        for p in parabolic_elements(v.parabolic):
            cand = make_vertex(target_parab, v.rep * p * step)
            if cand not in seen:
                seen.add(cand)
                out.append(cand)
    return out


def orbit_sample(key: EdgeTypeKey, slab: GraphSlab, count: int) -> list[tuple[Vertex, Vertex]]:
    """Up to ``count`` distinct slab pairs of the given type, scanned in
    index order (degenerate pairs included for the identity key)."""
    out = []
    verts = slab.vertices
    for i in range(len(verts)):
        for j in range(i, len(verts)):
            if pair_key(verts[i], verts[j]) == key:
                out.append((verts[i], verts[j]))
                if len(out) >= count:
                    return out
    return out


def find_pair_transport(pair_a, pair_b) -> GroupElement | None:
    """An explicit w moving one unordered pair onto another of equal key.

    Searches w with w*a0 = b0 (coset-wise) and checks the other endpoint,
    in both orientations of pair_b.
    """
    a0, a1 = pair_a
    for b0, b1 in (pair_b, (pair_b[1], pair_b[0])):
        if a0.parabolic != b0.parabolic or a1.parabolic != b1.parabolic:
            continue
        for p in parabolic_elements(a0.parabolic):
            w = b0.rep * p * a0.rep.inverse()
            if translate(w, a0) == b0 and translate(w, a1) == b1:
                return w
    return None
