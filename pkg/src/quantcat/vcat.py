"""Finite V-categories and V-functors.

A V-category is a finite object list with a hom matrix over a quantale,
satisfying reflexivity (k <= a(x,x)) and transitivity
(a(x,x') ⊗ a(x',x'') <= a(x,x'')).  Witnesses reported by the validators
are always the first violation in object-index order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NotAFunctor,
    NotEnumerable,
    QuantaleMismatch,
    ReflexivityFail,
    TransitivityFail,
)
from .quantale import QElem, Quantale


@dataclass(frozen=True)
class VCategory:
    name: str
    quantale: Quantale
    objects: tuple[str, ...]
    hom: tuple[tuple[QElem, ...], ...]

    def index(self, label: str) -> int:
        try:
            return self.objects.index(label)
        except ValueError:
            raise KeyError(f"{label!r} is not an object of {self.name}") from None

    def a(self, i: int, j: int) -> QElem:
        return self.hom[i][j]

    def same_shape(self, other: "VCategory") -> bool:
        """Structural identity: same quantale, objects, and hom matrix."""
        return (self.quantale == other.quantale and self.objects == other.objects
                and self.hom == other.hom)

    def __repr__(self):
        return f"VCategory({self.name}, {len(self.objects)} objects)"


@dataclass(frozen=True)
class VFunctor:
    name: str
    dom: VCategory
    cod: VCategory
    mapping: tuple[int, ...]  # dom object index -> cod object index
    validated: bool = True

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def on_label(self, label: str) -> str:
        return self.cod.objects[self.mapping[self.dom.index(label)]]

    def __repr__(self):
        return f"VFunctor({self.name}: {self.dom.name} -> {self.cod.name})"


def validate_category(name, quantale, objects, hom) -> VCategory:
    """Check (R) and (T) and freeze the category."""
    objects = tuple(objects)
    if len(set(objects)) != len(objects):
        raise ReflexivityFail(f"duplicate object labels in {name}")
    matrix = tuple(tuple(quantale.check(e) for e in row) for row in hom)
    n = len(objects)
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ReflexivityFail(f"hom matrix of {name} is not {n}x{n}")
    k = quantale.unit
    for i in range(n):
        if not quantale.leq(k, matrix[i][i]):
            raise ReflexivityFail(
                f"k ≰ a({objects[i]},{objects[i]}) = {matrix[i][i]} in {name}")
    for i in range(n):
        for j in range(n):
            for m in range(n):
                lhs = quantale.tensor(matrix[i][j], matrix[j][m])
                if not quantale.leq(lhs, matrix[i][m]):
                    raise TransitivityFail(
                        f"a({objects[i]},{objects[j]}) ⊗ a({objects[j]},{objects[m]}) "
                        f"= {lhs} ≰ a({objects[i]},{objects[m]}) = {matrix[i][m]} in {name}")
    return VCategory(name, quantale, objects, matrix)


def unit_category(quantale: Quantale) -> VCategory:
    """E = ({*}, k), the tensor unit."""
    return VCategory("E", quantale, ("*",), ((quantale.unit,),))


def opposite(X: VCategory) -> VCategory:
    n = len(X.objects)
    hom = tuple(tuple(X.hom[j][i] for j in range(n)) for i in range(n))
    name = X.name[:-3] if X.name.endswith("^op") else X.name + "^op"
    return VCategory(name, X.quantale, X.objects, hom)


def tensor_product(X: VCategory, Y: VCategory) -> VCategory:
    if X.quantale != Y.quantale:
        raise QuantaleMismatch(f"{X.name} and {Y.name} live over different quantales")
    q = X.quantale
    objects = tuple(f"({x},{y})" for x in X.objects for y in Y.objects)
    nY = len(Y.objects)
    pairs = [(i, j) for i in range(len(X.objects)) for j in range(nY)]
    hom = tuple(tuple(q.tensor(X.hom[i1][i2], Y.hom[j1][j2])
                      for (i2, j2) in pairs)
                for (i1, j1) in pairs)
    return VCategory(f"{X.name}⊗{Y.name}", q, objects, hom)


def is_separated(X: VCategory):
    """No two distinct objects are isomorphic; returns (bool, witness pair)."""
    q = X.quantale
    k = q.unit
    for i in range(len(X.objects)):
        for j in range(i + 1, len(X.objects)):
            if q.leq(k, X.hom[i][j]) and q.leq(k, X.hom[j][i]):
                return False, (X.objects[i], X.objects[j])
    return True, None


def hom_self_category(q: Quantale) -> VCategory:
    """The quantale as a category over itself, via its residuation."""
    if not q.enumerable:
        raise NotEnumerable(f"{q.name} has no finite carrier to enumerate")
    objects = tuple(str(e) for e in q.carrier)
    hom = tuple(tuple(q.hom(u, v) for v in q.carrier) for u in q.carrier)
    return VCategory(f"V({q.name})", q, objects, hom)


def validate_functor(name, dom, cod, mapping) -> VFunctor:
    """Check (C): a(x,x') <= b(f x, f x') for all pairs."""
    f = raw_functor(name, dom, cod, mapping)
    q = dom.quantale
    n = len(dom.objects)
    for i in range(n):
        for j in range(n):
            if not q.leq(dom.hom[i][j], cod.hom[f(i)][f(j)]):
                raise NotAFunctor(
                    f"{name}: a({dom.objects[i]},{dom.objects[j]}) = {dom.hom[i][j]} ≰ "
                    f"b({cod.objects[f(i)]},{cod.objects[f(j)]}) = {cod.hom[f(i)][f(j)]}")
    return VFunctor(name, dom, cod, f.mapping, validated=True)


def raw_functor(name, dom, cod, mapping) -> VFunctor:
    """Wrap an arbitrary object map without the (C) check."""
    if dom.quantale != cod.quantale:
        raise QuantaleMismatch(f"{dom.name} and {cod.name} live over different quantales")
    if isinstance(mapping, dict):
        mapping = tuple(cod.index(mapping[x]) for x in dom.objects)
    else:
        mapping = tuple(mapping)
    if len(mapping) != len(dom.objects) or any(
            not (0 <= i < len(cod.objects)) for i in mapping):
        raise NotAFunctor(f"{name}: mapping is not total on {dom.name}")
    return VFunctor(name, dom, cod, mapping, validated=False)


def is_functor(dom, cod, mapping) -> bool:
    try:
        validate_functor("_", dom, cod, mapping)
        return True
    except NotAFunctor:
        return False


def identity_functor(X: VCategory) -> VFunctor:
    return VFunctor(f"1_{X.name}", X, X, tuple(range(len(X.objects))))


def compose_functors(g: VFunctor, f: VFunctor) -> VFunctor:
    """g ∘ f, defined when cod(f) and dom(g) coincide structurally."""
    if not f.cod.same_shape(g.dom):
        raise NotAFunctor(f"cannot compose {g.name} ∘ {f.name}: middle categories differ")
    return VFunctor(f"{g.name}∘{f.name}", f.dom, g.cod,
                    tuple(g.mapping[i] for i in f.mapping),
                    validated=f.validated and g.validated)


def point_functor(X: VCategory, label: str) -> VFunctor:
    """The point x: E -> X."""
    return VFunctor(f"pt_{label}", unit_category(X.quantale), X, (X.index(label),))


def functor_leq(f: VFunctor, g: VFunctor) -> bool:
    """f <= g iff k <= b(f x, g x) for every x (parallel functors)."""
    _require_parallel(f, g)
    q = f.cod.quantale
    return all(q.leq(q.unit, f.cod.hom[f(i)][g(i)]) for i in range(len(f.dom.objects)))


def functor_simeq(f: VFunctor, g: VFunctor) -> bool:
    return functor_leq(f, g) and functor_leq(g, f)


def _require_parallel(f, g):
    if not (f.dom.same_shape(g.dom) and f.cod.same_shape(g.cod)):
        raise NotAFunctor(f"{f.name} and {g.name} are not parallel")


def is_fully_faithful(f: VFunctor):
    """a(x,x') = b(f x, f x') for all pairs; returns (bool, witness)."""
    for i in range(len(f.dom.objects)):
        for j in range(len(f.dom.objects)):
            if f.dom.hom[i][j] != f.cod.hom[f(i)][f(j)]:
                return False, (f.dom.objects[i], f.dom.objects[j])
    return True, None


def is_fully_dense(f: VFunctor):
    """b(y,y') = ⋁_x b(y, f x) ⊗ b(f x, y') for all pairs; returns (bool, witness)."""
    q = f.cod.quantale
    b = f.cod.hom
    for y in range(len(f.cod.objects)):
        for y2 in range(len(f.cod.objects)):
            via = q.join(q.tensor(b[y][f(i)], b[f(i)][y2])
                         for i in range(len(f.dom.objects)))
            if b[y][y2] != via:
                return False, (f.cod.objects[y], f.cod.objects[y2])
    return True, None


def check_adjunction(f: VFunctor, g: VFunctor):
    """f ⊣ g iff X(x, g y) = Y(f x, y) for all x, y.

    f and g may be raw maps: when the equality holds everywhere, both are
    automatically V-functors (this is re-asserted here).
    """
    X, Y = f.dom, f.cod
    if not (g.dom.same_shape(Y) and g.cod.same_shape(X)):
        raise NotAFunctor(f"{g.name} does not go back from {Y.name} to {X.name}")
    for i in range(len(X.objects)):
        for j in range(len(Y.objects)):
            if X.hom[i][g(j)] != Y.hom[f(i)][j]:
                return False, (X.objects[i], Y.objects[j])
    assert is_functor(X, Y, f.mapping) and is_functor(Y, X, g.mapping), \
        "adjunction equality held but a map failed functoriality"
    return True, None
