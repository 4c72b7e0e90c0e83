"""Presheaf categories and their monad structure.

A presheaf on X is a distributor X ⇸ E, stored as a tuple of values
indexed by the objects of X; the law is a(x,x') ⊗ φ(x') <= φ(x).  PX
carries the hom ã(φ,ψ) = ⋀_x hom(φ x, ψ x) and is built by exhaustive
enumeration, so every constructor here is budget-gated.  The unit is the
Yoneda embedding x ↦ a(−,x) and the multiplication is sup-of-tensor
evaluation; law checking degrades from exhaustive to sampled to
unchecked as the towers grow.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded, NotEnumerable
from .quantale import show_value
from .vcat import VCategory, VFunctor, is_fully_faithful

DEFAULT_BUDGET = 10 ** 6
DEFAULT_SAMPLES = 200


@dataclass(frozen=True)
class PresheafCategory(VCategory):
    """PX; objects are labeled value tuples over the base category."""

    base: VCategory = None
    presheaves: tuple = ()  # value tuples, aligned with .objects


def presheaf_label(values) -> str:
    return "[" + ",".join(show_value(e.value) for e in values) + "]"


def is_presheaf(X: VCategory, values) -> bool:
    q = X.quantale
    n = len(X.objects)
    return all(q.leq(q.tensor(X.hom[i][j], values[j]), values[i])
               for i in range(n) for j in range(n))


def presheaf_hom(q, phi, psi):
    """ã(φ,ψ) = ⋀_x hom(φ x, ψ x); the empty meet is ⊤."""
    return q.meet(q.hom(u, w) for u, w in zip(phi, psi))


@lru_cache(maxsize=None)
def presheaf_category(X: VCategory, budget: int = DEFAULT_BUDGET) -> PresheafCategory:
    q = X.quantale
    n = len(X.objects)
    if n == 0:
        members = ((),)  # the empty presheaf is the only one
    else:
        if not q.enumerable:
            raise NotEnumerable(
                f"cannot enumerate presheaves on {X.name}: {q.name} is infinite")
        count = len(q.carrier) ** n
        if count > budget:
            raise BudgetExceeded(
                f"{count} candidate maps on {X.name} exceed the budget {budget}")
        members = tuple(vals for vals in itertools.product(q.carrier, repeat=n)
                        if is_presheaf(X, vals))
    objects = tuple(presheaf_label(v) for v in members)
    hom = tuple(tuple(presheaf_hom(q, u, w) for w in members) for u in members)
    return PresheafCategory(f"P({X.name})", q, objects, hom, X, members)


@lru_cache(maxsize=None)
def _member_index(PX: PresheafCategory):
    return {v: i for i, v in enumerate(PX.presheaves)}


def member_index(PX: PresheafCategory, values) -> int:
    """Index of a value tuple in PX; KeyError if it is not a presheaf."""
    return _member_index(PX)[tuple(values)]


def yoneda(X: VCategory, PX: PresheafCategory = None) -> VFunctor:
    """x ↦ x^* = a(−,x).  Fully faithful, asserted."""
    PX = PX or presheaf_category(X)
    idx = _member_index(PX)
    mapping = tuple(idx[tuple(row[i] for row in X.hom)]
                    for i in range(len(X.objects)))
    y = VFunctor(f"y_{X.name}", X, PX, mapping, validated=True)
    assert is_fully_faithful(y)[0]
    return y


def presheaf_map(f: VFunctor, PX=None, PY=None) -> VFunctor:
    """Pf: PX → PY, φ ↦ φ·f^*, i.e. y ↦ ⋁_x Y(y, f x) ⊗ φ(x)."""
    X, Y = f.dom, f.cod
    PX = PX or presheaf_category(X)
    PY = PY or presheaf_category(Y)
    q = X.quantale
    idx = _member_index(PY)
    ny = len(Y.objects)
    mapping = tuple(
        idx[tuple(q.join(q.tensor(Y.hom[j][f(i)], vals[i])
                         for i in range(len(X.objects))) for j in range(ny))]
        for vals in PX.presheaves)
    return VFunctor(f"P({f.name})", PX, PY, mapping, validated=True)


def q_map(f: VFunctor, PX=None, PY=None) -> VFunctor:
    """Qf: PY → PX, ψ ↦ ψ·f_*, i.e. x ↦ ⋁_y Y(f x, y) ⊗ ψ(y).

    Right adjoint to Pf."""
    X, Y = f.dom, f.cod
    PX = PX or presheaf_category(X)
    PY = PY or presheaf_category(Y)
    q = X.quantale
    idx = _member_index(PX)
    ny = len(Y.objects)
    mapping = tuple(
        idx[tuple(q.join(q.tensor(Y.hom[f(i)][j], vals[j]) for j in range(ny))
                  for i in range(len(X.objects)))]
        for vals in PY.presheaves)
    return VFunctor(f"Q({f.name})", PY, PX, mapping, validated=True)


def mult_values(PX: PresheafCategory, gamma):
    """m(Γ)(x) = ⋁_φ Γ(φ) ⊗ φ(x), for Γ given as values over PX."""
    q = PX.quantale
    return tuple(
        q.join(q.tensor(g, vals[i]) for g, vals in zip(gamma, PX.presheaves))
        for i in range(len(PX.base.objects)))


def multiplication(X: VCategory, PX=None, PPX=None,
                   budget: int = DEFAULT_BUDGET) -> VFunctor:
    """m_X: PPX → PX by sup-of-tensor evaluation."""
    PX = PX or presheaf_category(X, budget)
    PPX = PPX or presheaf_category(PX, budget)
    idx = _member_index(PX)
    mapping = tuple(idx[mult_values(PX, g)] for g in PPX.presheaves)
    return VFunctor(f"m_{X.name}", PPX, PX, mapping, validated=True)


def _sample_theta(PPX: PresheafCategory, rng: random.Random, kind: int):
    """A presheaf on PPX from one of three always-lawful sources:
    representables, images of the mapped Yoneda embedding, down-closures."""
    q = PPX.quantale
    npp = len(PPX.objects)
    if kind == 0:
        g = rng.randrange(npp)
        return tuple(PPX.hom[i][g] for i in range(npp))
    if kind == 1:
        PX = PPX.base
        np_ = len(PX.objects)
        idx = _member_index(PPX)
        yi = [idx[tuple(PX.hom[j][p] for j in range(np_))] for p in range(np_)]
        gv = PPX.presheaves[rng.randrange(npp)]
        return tuple(q.join(q.tensor(PPX.hom[i][yi[p]], gv[p]) for p in range(np_))
                     for i in range(npp))
    g = [rng.choice(q.carrier) for _ in range(npp)]
    return tuple(q.join(q.tensor(PPX.hom[i][j], g[j]) for j in range(npp))
                 for i in range(npp))


def verify_monad_laws(X: VCategory, budget: int = DEFAULT_BUDGET,
                      seed: int = 0, samples: int = DEFAULT_SAMPLES) -> dict:
    """Unit and associativity laws for the presheaf structure on X.

    Units are always exhaustive over PX.  Associativity is exhaustive
    when every presheaf on PPX fits the budget, sampled (seeded, from
    lawful sources) when only PPX itself does, and unchecked otherwise.
    """
    q = X.quantale
    PX = presheaf_category(X, budget)
    y = yoneda(X, PX)
    n, np_ = len(X.objects), len(PX.objects)
    report = {"category": X.name, "presheaf_count": np_}

    # m ∘ P(y) = 1:  P(y)(φ)(ψ) = ⋁_x ã(ψ, x^*) ⊗ φ(x)
    witness = None
    for vals in PX.presheaves:
        through = tuple(q.join(q.tensor(PX.hom[j][y(i)], vals[i]) for i in range(n))
                        for j in range(np_))
        if mult_values(PX, through) != vals:
            witness = presheaf_label(vals)
            break
    report["unit_mapped"] = {"ok": witness is None, "witness": witness}

    # m ∘ y_PX = 1:  y_PX(φ) = ã(−,φ)
    witness = None
    for pi, vals in enumerate(PX.presheaves):
        through = tuple(PX.hom[j][pi] for j in range(np_))
        if mult_values(PX, through) != vals:
            witness = presheaf_label(vals)
            break
    report["unit_pointed"] = {"ok": witness is None, "witness": witness}

    assoc = {"mode": "unchecked", "checked": 0, "ok": True, "witness": None}
    if q.enumerable and len(q.carrier) ** np_ <= budget:
        PPX = presheaf_category(PX, budget)
        npp = len(PPX.objects)
        mg = [mult_values(PX, g) for g in PPX.presheaves]
        amg = [[presheaf_hom(q, vals, m) for m in mg] for vals in PX.presheaves]

        def routes_agree(theta):
            # m_X ∘ m_PX vs m_X ∘ P(m_X)
            left = mult_values(PX, mult_values(PPX, theta))
            pm = tuple(q.join(q.tensor(amg[p][g], theta[g]) for g in range(npp))
                       for p in range(np_))
            return left == mult_values(PX, pm)

        if len(q.carrier) ** npp <= budget:
            assoc["mode"] = "exhaustive"
            for theta in itertools.product(q.carrier, repeat=npp):
                if not is_presheaf(PPX, theta):
                    continue
                assoc["checked"] += 1
                if not routes_agree(theta):
                    assoc.update(ok=False, witness=presheaf_label(theta))
                    break
        else:
            assoc["mode"] = "sampled"
            rng = random.Random(seed)
            for t in range(samples):
                theta = _sample_theta(PPX, rng, t % 3)
                assoc["checked"] += 1
                if not routes_agree(theta):
                    assoc.update(ok=False, witness=presheaf_label(theta))
                    break
    report["associativity"] = assoc
    return report
