"""Right-adjoint presheaves by brute force: enumeration, completeness,
completion, and eventually constant Cauchy data over ext_real_plus.

Membership here is decided by searching every candidate vector for a
certifying left adjoint, independently of the extension shortcut used
elsewhere; the two routes agreeing is part of the test suite.
"""

import itertools
from dataclasses import dataclass

from .colimit import extension_row, find_representatives
from .dist import VRelation, point_column, point_row
from .errors import NotEventuallyConstant, NotIntegral, PreconditionFail
from .presheaf import (
    DEFAULT_BUDGET,
    PresheafCategory,
    presheaf_category,
    presheaf_hom,
    presheaf_label,
)
from .vcat import VCategory, VFunctor, is_fully_faithful, unit_category


@dataclass(frozen=True)
class AdjointPair:
    phi: VRelation  # X ⇸ E, the right adjoint
    psi: VRelation  # E ⇸ X, its certifying left adjoint
    unit: object    # the attained value of ⋁_x ψ(x)⊗φ(x), at least k


def _certifies(X, phi, psi):
    """ψ ⊣ φ: unit k ≤ ⋁ ψ(x)⊗φ(x), counit φ(x)⊗ψ(x') ≤ a(x,x')."""
    q = X.quantale
    n = len(X.objects)
    if not all(q.leq(q.tensor(phi[x], psi[y]), X.hom[x][y])
               for x in range(n) for y in range(n)):
        return None
    u = q.join(q.tensor(psi[x], phi[x]) for x in range(n))
    return u if q.leq(q.unit, u) else None


def enumerate_L(X: VCategory, budget: int = DEFAULT_BUDGET):
    """LX with one certified AdjointPair per member.

    Searches every carrier vector as a candidate left adjoint;
    adjoints are unique among distributors in the thin setting, so the
    certifying ψ kept for each member is canonical.
    """
    PX = presheaf_category(X, budget)
    q = X.quantale
    n = len(X.objects)
    E = unit_category(q)
    members, pairs = [], []
    for vals in PX.presheaves:
        for cand in itertools.product(q.carrier, repeat=n):
            # only distributor candidates: ⋁ ψ(y)⊗a(y,x) ≤ ψ(x)
            if not all(q.leq(q.tensor(cand[y], X.hom[y][x]), cand[x])
                       for x in range(n) for y in range(n)):
                continue
            u = _certifies(X, vals, cand)
            if u is not None:
                phi = VRelation(X, E, tuple((v,) for v in vals),
                                validated=True)
                psi = VRelation(E, X, (cand,), validated=True)
                members.append(vals)
                pairs.append(AdjointPair(phi, psi, u))
                break
    LX = PresheafCategory(
        f"L({X.name})", q, tuple(presheaf_label(v) for v in members),
        tuple(tuple(presheaf_hom(q, u, w) for w in members)
              for u in members),
        X, tuple(members))
    return LX, tuple(pairs)


def is_L_complete(X: VCategory, budget: int = DEFAULT_BUDGET):
    """Every right-adjoint presheaf equals x^* for some x; else a witness."""
    LX, _ = enumerate_L(X, budget)
    columns = {tuple(row[z] for row in X.hom) for z in range(len(X.objects))}
    for i, vals in enumerate(LX.presheaves):
        if tuple(vals) not in columns:
            return False, LX.objects[i]
    return True, None


def lawvere_completion(X: VCategory, budget: int = DEFAULT_BUDGET):
    """(LX, unit x ↦ x^*); the unit is an embedding, LX is complete."""
    LX, _ = enumerate_L(X, budget)
    idx = {v: i for i, v in enumerate(LX.presheaves)}
    mapping = []
    for z in range(len(X.objects)):
        column = tuple(row[z] for row in X.hom)
        assert column in idx, "a lower companion column failed membership"
        mapping.append(idx[column])
    unit = VFunctor(f"complete_{X.name}", X, LX, tuple(mapping))
    assert is_fully_faithful(unit)[0]
    assert is_L_complete(LX, budget)[0]
    return LX, unit


@dataclass(frozen=True)
class CauchySequenceSpec:
    points: tuple      # object labels
    stable_from: int   # index after which the sequence stays put


def cauchy_sequence(points, stable_from: int) -> CauchySequenceSpec:
    points = tuple(points)
    if not 0 <= stable_from < len(points):
        raise NotEventuallyConstant(
            f"stability index {stable_from} outside the sequence")
    tail = set(points[stable_from:])
    if len(tail) != 1:
        raise NotEventuallyConstant(
            f"sequence keeps moving after index {stable_from}: "
            f"{sorted(tail)}")
    return CauchySequenceSpec(points, stable_from)


def cauchy_pair(X: VCategory, seq: CauchySequenceSpec):
    """(AdjointPair, limit label) for an eventually constant sequence.

    The limit formulas φ = lim X(−,x_n) and ψ = lim X(x_n,−) collapse
    to the columns of the stable point, evaluated exactly; genuinely
    moving limits are out of reach of exact arithmetic.
    """
    q = X.quantale
    if q.kind != "ext_real_plus":
        raise PreconditionFail(
            f"Cauchy data is exposed over ext_real_plus only, not {q.name}")
    lim = X.index(seq.points[seq.stable_from])
    for label in seq.points:
        X.index(label)
    phi_vals = tuple(row[lim] for row in X.hom)
    psi_vals = tuple(X.hom[lim])
    unit = _certifies(X, phi_vals, psi_vals)
    assert unit is not None, "point columns must certify their own pair"
    pair = AdjointPair(point_column(X, X.objects[lim]),
                       point_row(X, X.objects[lim]), unit)
    reps = find_representatives(X, extension_row(X, phi_vals))
    assert lim in reps, "the stable point must represent its own weight"
    return pair, X.objects[lim]


def l_dense_point_check(X: VCategory, label: str) -> bool:
    """Over an integral quantale: the point is below every other one."""
    q = X.quantale
    if q.unit != q.top:
        raise NotIntegral(f"{q.name} has unit below top")
    y = X.index(label)
    return all(q.leq(q.unit, X.hom[y][x]) for x in range(len(X.objects)))
