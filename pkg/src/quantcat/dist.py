"""V-relations and V-distributors.

A relation r: X ⇸ Y is a matrix r[x][y] over the shared quantale;
composition is sup-of-tensor, (s·r)(x,z) = ⋁_y r(x,y) ⊗ s(y,z).
A distributor additionally absorbs the hom structures on both sides.
Companions f_* and f^* of a functor, adjoint pairs, and the right
extension [φ,ψ] live here too.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (BudgetExceeded, LeftActionFail, NotEnumerable,
                     QuantaleMismatch, RightActionFail, ShapeMismatch)
from .quantale import QElem
from .vcat import VCategory, VFunctor, unit_category


@dataclass(frozen=True)
class VRelation:
    dom: VCategory
    cod: VCategory
    matrix: tuple[tuple[QElem, ...], ...]  # matrix[i][j], i in dom, j in cod
    validated: bool = False  # True once the bimodule laws were checked

    def at(self, x: str, y: str) -> QElem:
        return self.matrix[self.dom.index(x)][self.cod.index(y)]

    def __repr__(self):
        tag = "VDistributor" if self.validated else "VRelation"
        return f"{tag}({self.dom.name} ⇸ {self.cod.name})"


def relation(dom, cod, matrix, validated=False) -> VRelation:
    if dom.quantale != cod.quantale:
        raise QuantaleMismatch(f"{dom.name} and {cod.name} live over different quantales")
    q = dom.quantale
    matrix = tuple(tuple(q.check(e) for e in row) for row in matrix)
    if len(matrix) != len(dom.objects) or any(
            len(row) != len(cod.objects) for row in matrix):
        raise ShapeMismatch(
            f"matrix must be {len(dom.objects)}x{len(cod.objects)} "
            f"for {dom.name} ⇸ {cod.name}")
    return VRelation(dom, cod, matrix, validated)


def leq(r: VRelation, s: VRelation) -> bool:
    """Pointwise 2-cell order on parallel relations."""
    _same_shape(r, s)
    q = r.dom.quantale
    return all(q.leq(a, b) for ra, rb in zip(r.matrix, s.matrix)
               for a, b in zip(ra, rb))


def first_violation(r: VRelation, s: VRelation):
    """First (x,y) where r(x,y) ≰ s(x,y), or None."""
    _same_shape(r, s)
    q = r.dom.quantale
    for i, (ra, rb) in enumerate(zip(r.matrix, s.matrix)):
        for j, (a, b) in enumerate(zip(ra, rb)):
            if not q.leq(a, b):
                return (r.dom.objects[i], r.cod.objects[j])
    return None


def _same_shape(r, s):
    if not (r.dom.same_shape(s.dom) and r.cod.same_shape(s.cod)):
        raise ShapeMismatch("relations are not parallel")


def compose(s: VRelation, r: VRelation) -> VRelation:
    """s·r for r: X ⇸ Y, s: Y ⇸ Z."""
    if not r.cod.same_shape(s.dom):
        raise ShapeMismatch(
            f"cannot compose: {r.dom.name} ⇸ {r.cod.name} then {s.dom.name} ⇸ {s.cod.name}")
    q = r.dom.quantale
    mid = range(len(r.cod.objects))
    matrix = tuple(
        tuple(q.join(q.tensor(r.matrix[i][y], s.matrix[y][j]) for y in mid)
              for j in range(len(s.cod.objects)))
        for i in range(len(r.dom.objects)))
    # distributors are closed under composition
    return VRelation(r.dom, s.cod, matrix, r.validated and s.validated)


def involution(r: VRelation) -> VRelation:
    matrix = tuple(tuple(r.matrix[i][j] for i in range(len(r.dom.objects)))
                   for j in range(len(r.cod.objects)))
    return VRelation(r.cod, r.dom, matrix)


def graph(f: VFunctor) -> VRelation:
    """f_∘: k where f(x) = y, ⊥ elsewhere."""
    q = f.dom.quantale
    matrix = tuple(
        tuple(q.unit if f(i) == j else q.bottom for j in range(len(f.cod.objects)))
        for i in range(len(f.dom.objects)))
    return VRelation(f.dom, f.cod, matrix)


def identity_relation(X: VCategory) -> VRelation:
    q = X.quantale
    n = len(X.objects)
    return VRelation(X, X, tuple(
        tuple(q.unit if i == j else q.bottom for j in range(n)) for i in range(n)))


def identity_distributor(X: VCategory) -> VRelation:
    """1_X in the distributor category is the hom structure itself."""
    return VRelation(X, X, X.hom, validated=True)


def validate_distributor(r: VRelation) -> VRelation:
    """Accept iff r absorbs both hom actions; witnesses the first escape."""
    X, Y = r.dom, r.cod
    ra = compose(r, identity_distributor(X))  # r·a
    w = first_violation(ra, r)
    if w is not None:
        raise RightActionFail(
            f"domain action escapes at {w}: (φ·a){w} = {ra.at(*w)} ≰ φ{w} = {r.at(*w)}")
    br = compose(identity_distributor(Y), r)  # b·r
    w = first_violation(br, r)
    if w is not None:
        raise LeftActionFail(
            f"codomain action escapes at {w}: (b·φ){w} = {br.at(*w)} ≰ φ{w} = {r.at(*w)}")
    return VRelation(X, Y, r.matrix, validated=True)


def is_distributor(r: VRelation) -> bool:
    try:
        validate_distributor(r)
        return True
    except (LeftActionFail, RightActionFail):
        return False


def functor_criterion(r: VRelation) -> bool:
    """Distributor test in functor form: a(x',x) ⊗ b(y,y') <= hom(r(x,y), r(x',y'))
    for all pairs — r as a map X^op ⊗ Y -> (V, hom)."""
    q = r.dom.quantale
    a, b, m = r.dom.hom, r.cod.hom, r.matrix
    for i in range(len(r.dom.objects)):
        for i2 in range(len(r.dom.objects)):
            for j in range(len(r.cod.objects)):
                for j2 in range(len(r.cod.objects)):
                    if not q.leq(q.tensor(a[i2][i], b[j][j2]),
                                 q.hom(m[i][j], m[i2][j2])):
                        return False
    return True


def star_lower(f: VFunctor) -> VRelation:
    """f_*: X ⇸ Y with f_*(x,y) = Y(f x, y)."""
    Y = f.cod
    matrix = tuple(tuple(Y.hom[f(i)][j] for j in range(len(Y.objects)))
                   for i in range(len(f.dom.objects)))
    return VRelation(f.dom, Y, matrix, validated=True)


def star_upper(f: VFunctor) -> VRelation:
    """f^*: Y ⇸ X with f^*(y,x) = Y(y, f x)."""
    Y = f.cod
    matrix = tuple(tuple(Y.hom[j][f(i)] for i in range(len(f.dom.objects)))
                   for j in range(len(Y.objects)))
    return VRelation(Y, f.dom, matrix, validated=True)


def check_adjoint_pair(psi: VRelation, phi: VRelation, identities: str = "hom"):
    """psi ⊣ phi for psi: Y ⇸ X, phi: X ⇸ Y.

    Unit: 1_Y <= phi·psi; counit: psi·phi <= 1_X.  The identities are the
    hom structures ("hom", distributor composition) or the k-diagonals
    ("diagonal", plain relations).  Returns (bool, unit w, counit w).
    """
    if not (psi.dom.same_shape(phi.cod) and psi.cod.same_shape(phi.dom)):
        raise ShapeMismatch("adjoint candidates must have opposite shapes")
    ident = identity_distributor if identities == "hom" else identity_relation
    unit_w = first_violation(ident(phi.cod), compose(phi, psi))
    counit_w = first_violation(compose(psi, phi), ident(phi.dom))
    return unit_w is None and counit_w is None, unit_w, counit_w


def right_extension(phi: VRelation, psi: VRelation) -> VRelation:
    """[φ,ψ]: Y ⇸ Z for φ: X ⇸ Y, ψ: X ⇸ Z, the value of the right
    adjoint to (−)·φ:  [φ,ψ](y,z) = ⋀_x hom(φ(x,y), ψ(x,z))."""
    if not phi.dom.same_shape(psi.dom):
        raise ShapeMismatch("right extension needs a common domain")
    q = phi.dom.quantale
    nx = len(phi.dom.objects)
    matrix = tuple(
        tuple(q.meet(q.hom(phi.matrix[x][y], psi.matrix[x][z]) for x in range(nx))
              for z in range(len(psi.cod.objects)))
        for y in range(len(phi.cod.objects)))
    return VRelation(phi.cod, psi.cod, matrix, phi.validated and psi.validated)


def point_row(X: VCategory, label: str) -> VRelation:
    """x_*: E ⇸ X, the row a(x,−)."""
    i = X.index(label)
    return VRelation(unit_category(X.quantale), X, (tuple(X.hom[i]),), validated=True)


def point_column(X: VCategory, label: str) -> VRelation:
    """x^*: X ⇸ E, the column a(−,x)."""
    i = X.index(label)
    matrix = tuple((row[i],) for row in X.hom)
    return VRelation(X, unit_category(X.quantale), matrix, validated=True)


def enumerate_distributors(X: VCategory, Y: VCategory,
                           budget: int = 10**6) -> tuple:
    """Every distributor X ⇸ Y, found by filtering all matrices."""
    q = X.quantale
    if Y.quantale != q:
        raise QuantaleMismatch(f"{X.name} and {Y.name} live over different quantales")
    if not q.enumerable:
        raise NotEnumerable(f"cannot enumerate matrices over {q.name}")
    cells = len(X.objects) * len(Y.objects)
    count = len(q.carrier) ** cells
    if count > budget:
        raise BudgetExceeded(f"{count} candidate matrices over budget {budget}")
    m = len(Y.objects)
    found = []
    for flat in itertools.product(q.carrier, repeat=cells):
        matrix = tuple(flat[i * m:(i + 1) * m] for i in range(len(X.objects)))
        if is_distributor(VRelation(X, Y, matrix)):
            found.append(VRelation(X, Y, matrix, validated=True))
    return tuple(found)
