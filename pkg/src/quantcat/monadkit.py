"""Commuting squares, Beck-Chevalley checks, and presheaf submonads.

A commuting square of functors passes the check when the distributor
square h^*·f_* <= l_*·g^* holds (the reverse inequality is automatic and
asserted).  On top of that sit: lax idempotency via three equivalent
routes, membership classes of distributors with their closure
conditions, submonads carved out of the presheaf construction, and the
canonical comparison into it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .dist import (
    VRelation,
    check_adjoint_pair,
    compose,
    enumerate_distributors,
    first_violation,
    identity_distributor,
    is_distributor,
    point_column,
    right_extension,
    star_lower,
    star_upper,
)
from .errors import (
    BudgetExceeded,
    MultiplicationEscapesT,
    NotCommuting,
    ShapeMismatch,
    SpecMismatch,
    UnitNotContained,
)
from .presheaf import (
    DEFAULT_BUDGET,
    PresheafCategory,
    is_presheaf,
    mult_values,
    multiplication,
    presheaf_category,
    presheaf_hom,
    presheaf_label,
    presheaf_map,
    yoneda,
)
from .quantale import show_value
from .vcat import (
    VCategory,
    VFunctor,
    check_adjunction,
    is_fully_faithful,
    opposite,
    unit_category,
)


# ------------------------------------------------------------------- squares

@dataclass(frozen=True)
class CommutingSquare:
    top: VFunctor     # l: W → Z
    left: VFunctor    # g: W → X
    bottom: VFunctor  # f: X → Y
    right: VFunctor   # h: Z → Y


def square(top, left, bottom, right) -> CommutingSquare:
    if not (top.dom.same_shape(left.dom) and bottom.dom.same_shape(left.cod)
            and right.dom.same_shape(top.cod) and bottom.cod.same_shape(right.cod)):
        raise ShapeMismatch("square corners do not line up")
    for i, w in enumerate(top.dom.objects):
        if bottom(left(i)) != right(top(i)):
            raise NotCommuting(
                f"square does not commute at {w}: "
                f"{bottom.cod.objects[bottom(left(i))]} vs {bottom.cod.objects[right(top(i))]}")
    return CommutingSquare(top, left, bottom, right)


def bc_star_square_check(sq: CommutingSquare):
    """h^*·f_* <= l_*·g^* on X ⇸ Z.  Returns (bool, witness)."""
    through_corner = compose(star_lower(sq.top), star_upper(sq.left))
    through_base = compose(star_upper(sq.right), star_lower(sq.bottom))
    # this direction holds for every commuting square
    assert first_violation(through_corner, through_base) is None
    w = first_violation(through_base, through_corner)
    return w is None, w


def dual_square(sq: CommutingSquare) -> CommutingSquare:
    """The square on the opposite categories with the roles of the
    horizontal and vertical arrows exchanged; passes the check iff the
    original does."""
    def op(f):
        return VFunctor(f.name, opposite(f.dom), opposite(f.cod),
                        f.mapping, f.validated)
    return CommutingSquare(top=op(sq.left), left=op(sq.top),
                           bottom=op(sq.right), right=op(sq.bottom))


def naturality_square(component_dom, mapped_dom, component_cod, mapped_cod):
    """The square α_Y ∘ Tf = T'f ∘ α_X for a transformation α: T → T'."""
    return square(top=component_dom, left=mapped_dom,
                  bottom=component_cod, right=mapped_cod)


# ------------------------------------------------------------------- monads

@dataclass(frozen=True)
class MonadInstance:
    """A monad on finite categories, given by its action on objects and
    maps together with unit and multiplication components."""

    name: str
    apply: Callable[[VCategory], VCategory]
    map: Callable[[VFunctor], VFunctor]
    unit: Callable[[VCategory], VFunctor]   # X → TX
    mult: Callable[[VCategory], VFunctor]   # TTX → TX


def presheaf_monad(budget: int = DEFAULT_BUDGET) -> MonadInstance:
    def apply(X):
        return presheaf_category(X, budget)

    return MonadInstance(
        name="presheaf",
        apply=apply,
        map=lambda f: presheaf_map(f, apply(f.dom), apply(f.cod)),
        unit=lambda X: yoneda(X, apply(X)),
        mult=lambda X: multiplication(X, budget=budget),
    )


def lax_idempotency_report(T: MonadInstance, X: VCategory) -> dict:
    """Three equivalent formulations, reported separately: the square
    (Tη, η_TX, μ, μ) passes the distributor check; Tη ⊣ μ; μ ⊣ η_TX."""
    TX = T.apply(X)
    t_eta = T.map(T.unit(X))
    eta_t = T.unit(TX)
    mu = T.mult(X)
    bc, _ = bc_star_square_check(square(t_eta, eta_t, mu, mu))
    adj_up, _ = check_adjunction(t_eta, mu)
    adj_down, _ = check_adjunction(mu, eta_t)
    return {
        "monad": T.name,
        "category": X.name,
        "bc_square": bc,
        "mapped_unit_adjoint_to_mult": adj_up,
        "mult_adjoint_to_unit": adj_down,
        "routes_agree": bc == adj_up == adj_down,
        "lax_idempotent": bc,
    }


# ----------------------------------------------------------- membership specs

@dataclass(frozen=True)
class SubmonadSpec:
    """A class of distributors cut down to presheaf membership.

    `member(X, values)` decides whether a presheaf on X belongs; the
    optional `dist_member` decides membership of a whole distributor
    independently of its columns (without it, membership is derived
    columnwise and the columnwise condition holds by construction).
    """

    name: str
    kind: str  # "all" | "right_adjoints" | "ball_image" | "user_table"
    member: Callable
    dist_member: Optional[Callable] = None


def _column_relation(X: VCategory, values) -> VRelation:
    return VRelation(X, unit_category(X.quantale),
                     tuple((v,) for v in values), validated=True)


def is_right_adjoint_distributor(phi: VRelation) -> bool:
    """Largest candidate ψ = [φ, 1] satisfies the counit by construction;
    φ is a right adjoint iff ψ also passes the unit."""
    psi = right_extension(phi, identity_distributor(phi.dom))
    return check_adjoint_pair(psi, phi)[0]


def submonad_all() -> SubmonadSpec:
    return SubmonadSpec("all", "all",
                        member=lambda X, values: is_presheaf(X, values),
                        dist_member=is_distributor)


def submonad_right_adjoints() -> SubmonadSpec:
    def member(X, values):
        return is_right_adjoint_distributor(_column_relation(X, values))
    return SubmonadSpec("right_adjoints", "right_adjoints",
                        member=member, dist_member=is_right_adjoint_distributor)


def submonad_user_table(name: str, table: dict) -> SubmonadSpec:
    """table: category name → collection of presheaf labels."""
    def member(X, values):
        try:
            allowed = table[X.name]
        except KeyError:
            raise SpecMismatch(f"no membership table for category {X.name}")
        return presheaf_label(values) in allowed
    return SubmonadSpec(name, "user_table", member=member)


def phi_membership(spec: SubmonadSpec, phi: VRelation) -> bool:
    """Distributor membership; columns are composed honestly as y^*·φ."""
    if spec.dist_member is not None:
        return bool(spec.dist_member(phi))
    for y in phi.cod.objects:
        col = compose(point_column(phi.cod, y), phi)
        if not spec.member(phi.dom, tuple(row[0] for row in col.matrix)):
            return False
    return True


# ------------------------------------------------------------------ submonads

def submonad_category(spec: SubmonadSpec, X: VCategory,
                      budget: int = DEFAULT_BUDGET) -> PresheafCategory:
    """The full subcategory of PX on the members of the class."""
    PX = presheaf_category(X, budget)
    q = X.quantale
    members = tuple(v for v in PX.presheaves if spec.member(X, v))
    objects = tuple(presheaf_label(v) for v in members)
    hom = tuple(tuple(presheaf_hom(q, u, w) for w in members) for u in members)
    return PresheafCategory(f"{spec.name}({X.name})", q, objects, hom, X, members)


def submonad_monad(spec: SubmonadSpec, budget: int = DEFAULT_BUDGET) -> MonadInstance:
    def apply(X):
        return submonad_category(spec, X, budget)

    def unit(X):
        TX = apply(X)
        idx = {v: i for i, v in enumerate(TX.presheaves)}
        mapping = []
        for i, x in enumerate(X.objects):
            rep = tuple(row[i] for row in X.hom)
            if rep not in idx:
                raise UnitNotContained(
                    f"{presheaf_label(rep)} = image of {x} is not a member of {TX.name}")
            mapping.append(idx[rep])
        return VFunctor(f"unit_{X.name}", X, TX, tuple(mapping), validated=True)

    def map_(f):
        TX, TY = apply(f.dom), apply(f.cod)
        q = f.dom.quantale
        Y = f.cod
        idx = {v: i for i, v in enumerate(TY.presheaves)}
        mapping = []
        for vals in TX.presheaves:
            img = tuple(q.join(q.tensor(Y.hom[j][f(i)], vals[i])
                               for i in range(len(f.dom.objects)))
                        for j in range(len(Y.objects)))
            if img not in idx:
                raise SpecMismatch(
                    f"image of {presheaf_label(vals)} under the mapped functor "
                    f"escapes {TY.name}")
            mapping.append(idx[img])
        return VFunctor(f"{spec.name}({f.name})", TX, TY, tuple(mapping),
                        validated=True)

    def mult(X):
        TX = apply(X)
        TTX = apply(TX)
        idx = {v: i for i, v in enumerate(TX.presheaves)}
        mapping = []
        for gamma in TTX.presheaves:
            out = mult_values(TX, gamma)
            if out not in idx:
                raise MultiplicationEscapesT(
                    f"multiplication of {presheaf_label(gamma)} lands at "
                    f"{presheaf_label(out)}, outside {TX.name}")
            mapping.append(idx[out])
        return VFunctor(f"mult_{X.name}", TTX, TX, tuple(mapping), validated=True)

    return MonadInstance(spec.name, apply, map_, unit, mult)


# --------------------------------------------------------------- admissibility

def _rel_desc(r: VRelation) -> str:
    rows = ";".join(
        ",".join(show_value(e.value) for e in row) for row in r.matrix)
    return f"{r.dom.name}⇸{r.cod.name}[{rows}]"


def admissible_class_check(spec: SubmonadSpec, categories, functors,
                           budget: int = DEFAULT_BUDGET) -> dict:
    """The four closure conditions for a class of distributors over a
    finite test universe: conjoints of functors belong; composition with
    conjoints on either side stays in the class; membership is decided
    columnwise; multiplication of a presheaf on PX whose restriction to
    the member subcategory belongs lands on a member."""
    report = {"spec": spec.name}

    w = None
    for f in functors:
        if not phi_membership(spec, star_upper(f)):
            w = f"{f.name}^*"
            break
    report["conjoints"] = {"ok": w is None, "witness": w}

    w = None
    for f in functors:
        X, Y = f.dom, f.cod
        for Z in categories:
            for psi in enumerate_distributors(X, Z, budget):
                if phi_membership(spec, psi) and \
                        not phi_membership(spec, compose(psi, star_upper(f))):
                    w = f"{_rel_desc(psi)}·{f.name}^*"
                    break
            else:
                for phi in enumerate_distributors(Z, Y, budget):
                    if phi_membership(spec, phi) and \
                            not phi_membership(spec, compose(star_upper(f), phi)):
                        w = f"{f.name}^*·{_rel_desc(phi)}"
                        break
                if w is None:
                    continue
            break
        if w is not None:
            break
    report["composites"] = {"ok": w is None, "witness": w}

    w = None
    for X in categories:
        for Y in categories:
            for phi in enumerate_distributors(X, Y, budget):
                whole = phi_membership(spec, phi)
                columns = all(
                    phi_membership(spec, compose(point_column(Y, y), phi))
                    for y in Y.objects)
                if whole != columns:
                    w = f"{_rel_desc(phi)} ({'in' if whole else 'out'} as a whole)"
                    break
            if w is not None:
                break
        if w is not None:
            break
    report["columnwise"] = {"ok": w is None, "witness": w,
                            "independent": spec.dist_member is not None}

    w = None
    unchecked = []
    for X in categories:
        try:
            PX = presheaf_category(X, budget)
            TX = submonad_category(spec, X, budget)
            PPX = presheaf_category(PX, budget)
        except BudgetExceeded:
            unchecked.append(X.name)
            continue
        keep = [i for i, v in enumerate(PX.presheaves) if spec.member(X, v)]
        for gamma in PPX.presheaves:
            restriction = tuple(gamma[i] for i in keep)
            if spec.member(TX, restriction) and \
                    not spec.member(X, mult_values(PX, gamma)):
                w = f"{presheaf_label(gamma)} on P({X.name})"
                break
        if w is not None:
            break
    report["multiplication"] = {"ok": w is None, "witness": w,
                                "unchecked": unchecked}

    report["admissible"] = all(report[k]["ok"] for k in
                               ("conjoints", "composites", "columnwise",
                                "multiplication"))
    return report


def t_embedding_check(spec: SubmonadSpec, h: VFunctor) -> dict:
    """Fully faithful and the companion h_* belongs to the class."""
    ff, ff_w = is_fully_faithful(h)
    member = phi_membership(spec, star_lower(h))
    return {"functor": h.name, "fully_faithful": ff,
            "companion_member": member, "t_embedding": ff and member,
            "witness": None if ff else str(ff_w)}


# ------------------------------------------------------------ monad morphisms

def canonical_comparison(T: MonadInstance, X: VCategory,
                         budget: int = DEFAULT_BUDGET) -> VFunctor:
    """σ_X: TX → PX, 𝔵 ↦ TX(η−, 𝔵)."""
    TX = T.apply(X)
    eta = T.unit(X)
    PX = presheaf_category(X, budget)
    idx = {v: i for i, v in enumerate(PX.presheaves)}
    mapping = tuple(
        idx[tuple(TX.hom[eta(i)][j] for i in range(len(X.objects)))]
        for j in range(len(TX.objects)))
    return VFunctor(f"sigma_{X.name}", TX, PX, mapping, validated=True)


def monad_morphism_check(T: MonadInstance, X: VCategory, f: VFunctor = None,
                         budget: int = DEFAULT_BUDGET) -> dict:
    """The canonical comparison at X: unit triangle, multiplication
    square (computed without presheaves on PX), naturality at f if
    given, and the pointwise embedding properties."""
    q = X.quantale
    TX = T.apply(X)
    TTX = T.apply(TX)
    PX = presheaf_category(X, budget)
    sigma = canonical_comparison(T, X, budget)
    y = yoneda(X, PX)
    eta = T.unit(X)
    mu = T.mult(X)
    n, nt = len(X.objects), len(TX.objects)

    unit_ok = tuple(sigma(eta(i)) for i in range(n)) == y.mapping

    # σ_X(μ Γ) vs m_X(Pσ_X(σ_TX Γ)), evaluated on value tuples over X
    sigma_vals = [PX.presheaves[sigma(j)] for j in range(nt)]
    eta_t = T.unit(TX)
    w = None
    for gi in range(len(TTX.objects)):
        left = sigma_vals[mu(gi)]
        # σ_TX(Γ)(t) = TTX(η_TX t, Γ), then P σ_X, then m
        psi = tuple(TTX.hom[eta_t(t)][gi] for t in range(nt))
        through = tuple(
            q.join(q.tensor(presheaf_hom(q, vals, sigma_vals[t]), psi[t])
                   for t in range(nt))
            for vals in PX.presheaves)
        if mult_values(PX, through) != left:
            w = TTX.objects[gi]
            break
    mult_report = {"ok": w is None, "witness": w}

    nat_report = None
    if f is not None:
        pf = presheaf_map(f, presheaf_category(f.dom, budget),
                          presheaf_category(f.cod, budget))
        tf = T.map(f)
        sigma_y = canonical_comparison(T, f.cod, budget)
        sig_dom = canonical_comparison(T, f.dom, budget)
        ok = tuple(pf(sig_dom(j)) for j in range(len(tf.dom.objects))) == \
            tuple(sigma_y(tf(j)) for j in range(len(tf.dom.objects)))
        nat_report = {"functor": f.name, "ok": ok}

    ff, _ = is_fully_faithful(sigma)
    injective = len(set(sigma.mapping)) == len(sigma.mapping)
    out = {
        "monad": T.name,
        "category": X.name,
        "unit_triangle": unit_ok,
        "multiplication_square": mult_report,
        "naturality": nat_report,
        "pointwise_fully_faithful": ff,
        "pointwise_injective": injective,
        "monad_morphism": unit_ok and mult_report["ok"]
        and (nat_report is None or nat_report["ok"]) and ff and injective,
    }
    return out
