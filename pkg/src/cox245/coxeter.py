"""The (2,4,5) triangle Coxeter group via its reflection representation.

W = <r, s, t | r^2 = s^2 = t^2 = (rs)^4 = (st)^5 = (tr)^2 = 1> acts on a
3-dimensional real vector space with bilinear form B(a_i, a_j) =
-cos(pi/m_ij); each generator is the B-reflection in its simple root.  The
representation is faithful, so equality of group elements is equality of
matrices, and the word problem costs nothing beyond exact arithmetic.

Matrices are flat 9-tuples (row major) of integral quartic vectors from
:mod:`cox245.numberfield`.  Everything downstream identifies an element with
its matrix; canonical (ShortLex-least reduced) words are derived from the
matrix on demand and cached.

Descent tests are root-sign tests: x is a right descent of g iff g sends
the simple root of x to a negative root.  Minimal coset and double-coset
representatives are computed by descent stripping, which for standard
parabolic subgroups lands on the unique shortest element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numberfield import (
    FieldElement,
    IQ_ONE,
    IQ_PHI,
    IQ_SQRT2,
    IQ_TWO,
    IQ_ZERO,
    iq_mul,
    iq_neg,
    iq_sign,
    iq_sub,
    iq_to_field,
)

__all__ = [
    "GENERATORS",
    "GroupElement",
    "ParabolicId",
    "D8",
    "D10",
    "D4",
    "PARABOLICS",
    "identity",
    "element_of_word",
    "word_inverse",
    "right_descents",
    "left_descents",
    "canonical_word",
    "coxeter_length",
    "min_coset_rep",
    "min_double_coset_rep",
    "parabolic_elements",
    "bilinear_form_matrix",
    "generator_matrix_field",
]

GENERATORS = "rst"
_INDEX = {"r": 0, "s": 1, "t": 2}

# 2*B(a_x, a_y) over the integral basis; the dihedral exponents 4, 5, 2
# give off-diagonal values -sqrt2, -phi and 0.
_MINUS_SQRT2 = iq_neg(IQ_SQRT2)
_MINUS_PHI = iq_neg(IQ_PHI)
_TWOB = {
    "r": (IQ_TWO, _MINUS_SQRT2, IQ_ZERO),
    "s": (_MINUS_SQRT2, IQ_TWO, _MINUS_PHI),
    "t": (IQ_ZERO, _MINUS_PHI, IQ_TWO),
}

_IDENTITY_MAT = (
    IQ_ONE, IQ_ZERO, IQ_ZERO,
    IQ_ZERO, IQ_ONE, IQ_ZERO,
    IQ_ZERO, IQ_ZERO, IQ_ONE,
)


def _gen_matrix(x: str):
    """Reflection matrix: column j of M_x is e_j - 2B(a_x, a_j) e_x."""
    i = _INDEX[x]
    row = _TWOB[x]
    mat = list(_IDENTITY_MAT)
    for j in range(3):
        mat[3 * i + j] = iq_sub(mat[3 * i + j], row[j])
    return tuple(mat)


_GEN_MATS = {x: _gen_matrix(x) for x in GENERATORS}


def _mat_mul(m, n):
    (a0, a1, a2, a3, a4, a5, a6, a7, a8) = m
    (b0, b1, b2, b3, b4, b5, b6, b7, b8) = n
    def cell(x, y, z, u, v, w):
        p = iq_mul(x, u)
        q = iq_mul(y, v)
        r = iq_mul(z, w)
        return (p[0] + q[0] + r[0], p[1] + q[1] + r[1],
                p[2] + q[2] + r[2], p[3] + q[3] + r[3])
    return (
        cell(a0, a1, a2, b0, b3, b6), cell(a0, a1, a2, b1, b4, b7), cell(a0, a1, a2, b2, b5, b8),
        cell(a3, a4, a5, b0, b3, b6), cell(a3, a4, a5, b1, b4, b7), cell(a3, a4, a5, b2, b5, b8),
        cell(a6, a7, a8, b0, b3, b6), cell(a6, a7, a8, b1, b4, b7), cell(a6, a7, a8, b2, b5, b8),
    )


def _mat_mul_gen_right(m, x: str):
    """m * M_x, exploiting that M_x = I - e_x * c with c = 2B(a_x, -).

    Column j of the product is col_j(m) - c_j * col_x(m).
    """
    i = _INDEX[x]
    c = _TWOB[x]
    cols = [[m[j], m[3 + j], m[6 + j]] for j in range(3)]
    cx = cols[i]
    out = [None] * 9
    for j in range(3):
        cj = c[j]
        if cj == IQ_ZERO:
            new = cols[j]
        else:
            new = [iq_sub(cols[j][k], iq_mul(cj, cx[k])) for k in range(3)]
        out[j], out[3 + j], out[6 + j] = new
    return tuple(out)


def _mat_mul_gen_left(m, x: str):
    """M_x * m: row x of the product is row_x(m) - sum_k c_k row_k(m)."""
    i = _INDEX[x]
    c = _TWOB[x]
    out = list(m)
    for j in range(3):
        acc = m[3 * i + j]
        for k in range(3):
            ck = c[k]
            if ck != IQ_ZERO:
                prod = iq_mul(ck, m[3 * k + j])
                acc = (acc[0] - prod[0], acc[1] - prod[1], acc[2] - prod[2], acc[3] - prod[3])
        out[3 * i + j] = acc
    return tuple(out)


def _mat_det(m):
    def mul(x, y):
        return iq_mul(x, y)
    t1 = iq_mul(m[0], iq_sub(mul(m[4], m[8]), mul(m[5], m[7])))
    t2 = iq_mul(m[1], iq_sub(mul(m[3], m[8]), mul(m[5], m[6])))
    t3 = iq_mul(m[2], iq_sub(mul(m[3], m[7]), mul(m[4], m[6])))
    return (t1[0] - t2[0] + t3[0], t1[1] - t2[1] + t3[1],
            t1[2] - t2[2] + t3[2], t1[3] - t2[3] + t3[3])


def _mat_inv(m):
    """Inverse via the adjugate; valid because det = +-1 in this group."""
    det = _mat_det(m)
    cof = [None] * 9
    idx = ((4, 8, 5, 7), (2, 7, 1, 8), (1, 5, 2, 4),
           (5, 6, 3, 8), (0, 8, 2, 6), (2, 3, 0, 5),
           (3, 7, 4, 6), (1, 6, 0, 7), (0, 4, 1, 3))
    for k, (p, q, u, v) in enumerate(idx):
        cof[k] = iq_sub(iq_mul(m[p], m[q]), iq_mul(m[u], m[v]))
    # idx already encodes the transpose of the cofactor matrix
    if det == IQ_ONE:
        return tuple(cof)
    if det == iq_neg(IQ_ONE):
        return tuple(iq_neg(x) for x in cof)
    raise ArithmeticError("matrix is not in the reflection group (det != +-1)")


def _column_root_sign(m, x: str) -> int:
    """+1 if g(a_x) is a positive root, -1 if negative.

    Roots of a Coxeter system are totally positive or totally negative in
    simple-root coordinates; the check covers all three coordinates so a
    representation bug cannot slip through as a wrong descent.
    """
    j = _INDEX[x]
    sign = 0
    for i in range(3):
        s = iq_sign(m[3 * i + j])
        if s == 0:
            continue
        if sign == 0:
            sign = s
        elif s != sign:
            raise ArithmeticError("mixed-sign root coordinates; representation broken")
    if sign == 0:
        raise ArithmeticError("zero image of a simple root")
    return sign


class GroupElement:
    """Element of W, identified with its reflection-representation matrix.

    Immutable; the canonical word is computed at most once and cached.
    Instances hash and compare by matrix, which is exact.
    """

    __slots__ = ("mat", "_word")

    def __init__(self, mat):
        self.mat = mat
        self._word = None

    def __eq__(self, other):
        if isinstance(other, GroupElement):
            return self.mat == other.mat
        return NotImplemented

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return f"GroupElement({self.canonical_word()!r})"

    def __mul__(self, other):
        if isinstance(other, GroupElement):
            return GroupElement(_mat_mul(self.mat, other.mat))
        return NotImplemented

    def inverse(self) -> "GroupElement":
        return GroupElement(_mat_inv(self.mat))

    def is_identity(self) -> bool:
        return self.mat == _IDENTITY_MAT

    def canonical_word(self) -> str:
        """ShortLex-least (r < s < t) reduced word for this element."""
        if self._word is None:
            letters = []
            h = _mat_inv(self.mat)  # x is a left descent of g iff h(a_x) < 0
            while h != _IDENTITY_MAT:
                for x in GENERATORS:
                    if _column_root_sign(h, x) < 0:
                        letters.append(x)
                        h = _mat_mul_gen_right(h, x)
                        break
                else:
                    raise ArithmeticError("non-identity element with no descent")
            self._word = "".join(letters)
        return self._word

    def length(self) -> int:
        return len(self.canonical_word())

    def matrix(self) -> tuple[tuple[FieldElement, ...], ...]:
        """The matrix over the public basis {1, sqrt2, sqrt5, sqrt10}."""
        f = [iq_to_field(x) for x in self.mat]
        return (tuple(f[0:3]), tuple(f[3:6]), tuple(f[6:9]))

    def serialize(self) -> str:
        return ";".join(iq_to_field(x).serialize() for x in self.mat)

    def det_is_even(self) -> bool:
        """True iff det = +1, i.e. the Coxeter length is even."""
        return _mat_det(self.mat) == IQ_ONE


_IDENT = GroupElement(_IDENTITY_MAT)
_GENS = {x: GroupElement(_GEN_MATS[x]) for x in GENERATORS}
for _x, _g in _GENS.items():
    _g._word = _x
_IDENT._word = ""


def identity() -> GroupElement:
    return _IDENT


def element_of_word(word: str) -> GroupElement:
    """Product of generator matrices; the empty word is the identity."""
    mat = _IDENTITY_MAT
    for ch in word:
        if ch not in _INDEX:
            raise ValueError(f"bad generator {ch!r}; alphabet is 'r', 's', 't'")
        mat = _mat_mul_gen_right(mat, ch)
    return GroupElement(mat)


def word_inverse(word: str) -> str:
    # generators are involutions
    return word[::-1]


def right_descents(g: GroupElement) -> set[str]:
    """Generators x with length(g*x) < length(g)."""
    return {x for x in GENERATORS if _column_root_sign(g.mat, x) < 0}


def left_descents(g: GroupElement) -> set[str]:
    inv = _mat_inv(g.mat)
    return {x for x in GENERATORS if _column_root_sign(inv, x) < 0}


def canonical_word(g: GroupElement) -> str:
    return g.canonical_word()


def coxeter_length(g: GroupElement) -> int:
    return g.length()


@dataclass(frozen=True)
class ParabolicId:
    """A maximal standard parabolic subgroup, named by its dihedral type."""

    name: str
    gens: tuple[str, str]

    def __repr__(self):
        return self.name


D8 = ParabolicId("D8", ("r", "s"))
D10 = ParabolicId("D10", ("s", "t"))
D4 = ParabolicId("D4", ("t", "r"))
PARABOLICS = {"D8": D8, "D10": D10, "D4": D4}

_PARABOLIC_CACHE: dict[str, tuple[GroupElement, ...]] = {}


def parabolic_elements(p: ParabolicId) -> tuple[GroupElement, ...]:
    """All elements of the subgroup, by closure; sorted by (length, word)."""
    cached = _PARABOLIC_CACHE.get(p.name)
    if cached is not None:
        return cached
    seen = {_IDENTITY_MAT: _IDENT}
    frontier = [_IDENT]
    while frontier:
        nxt = []
        for g in frontier:
            for x in p.gens:
                mat = _mat_mul_gen_right(g.mat, x)
                if mat not in seen:
                    h = GroupElement(mat)
                    seen[mat] = h
                    nxt.append(h)
        frontier = nxt
    elems = tuple(sorted(seen.values(), key=lambda g: (g.length(), g.canonical_word())))
    _PARABOLIC_CACHE[p.name] = elems
    return elems


def min_coset_rep(g: GroupElement, p: ParabolicId) -> GroupElement:
    """Unique shortest element of the coset g*P (no right descent in P)."""
    mat = g.mat
    changed = True
    while changed:
        changed = False
        for x in p.gens:
            if _column_root_sign(mat, x) < 0:
                mat = _mat_mul_gen_right(mat, x)
                changed = True
    return GroupElement(mat)


def min_double_coset_rep(g: GroupElement, p: ParabolicId, q: ParabolicId) -> GroupElement:
    """Unique shortest element of P*g*Q.

    Alternate stripping of right descents in Q and left descents in P; the
    element this stabilises on is reduced on both sides, and each double
    coset of standard parabolics contains exactly one such element.
    """
    mat = g.mat
    inv = _mat_inv(mat)
    changed = True
    while changed:
        changed = False
        for x in q.gens:
            if _column_root_sign(mat, x) < 0:
                mat = _mat_mul_gen_right(mat, x)
                inv = _mat_mul_gen_left(inv, x)
                changed = True
        for x in p.gens:
            if _column_root_sign(inv, x) < 0:  # left descent of g
                mat = _mat_mul_gen_left(mat, x)
                inv = _mat_mul_gen_right(inv, x)
                changed = True
    return GroupElement(mat)


def bilinear_form_matrix() -> tuple[tuple[FieldElement, ...], ...]:
    """Gram matrix B of the form, over the public basis."""
    from .numberfield import COS_PI_4, COS_PI_5, ONE, ZERO

    b_rs = -COS_PI_4
    b_st = -COS_PI_5
    b_tr = ZERO
    return (
        (ONE, b_rs, b_tr),
        (b_rs, ONE, b_st),
        (b_tr, b_st, ONE),
    )


def generator_matrix_field(x: str) -> tuple[tuple[FieldElement, ...], ...]:
    return _GENS[x].matrix()
