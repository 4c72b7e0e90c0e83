"""Built-in verification battery behind `quantcat selftest`.

Twelve numbered checks (C1-C12) over fixed, deterministic universes of
small quantales and categories.  Each returns a result dict with a
pass/fail verdict, a witness on failure, and counters describing how
much ground was covered.  `run_selftest` runs them in order.

Everything here is exact: verdicts come from `==` on QElem values,
never from tolerances.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .ball import (
    ball_category,
    ball_monad,
    ball_algebra_check,
    b_embedding_check,
    cancellation_report,
    tensored_check,
    tensor_consequences,
)
from .colimit import (
    algebra_extract,
    cocompleteness_check,
    extension_row,
    injectivity_check,
    min_characterization,
    t_homomorphism_check,
)
from .dist import check_adjoint_pair
from .errors import NotCommuting
from .lawvere import cauchy_pair, cauchy_sequence, enumerate_L, is_L_complete, lawvere_completion
from .monadkit import (
    SubmonadSpec,
    admissible_class_check,
    bc_star_square_check,
    lax_idempotency_report,
    naturality_square,
    presheaf_monad,
    square,
    submonad_all,
    submonad_category,
    submonad_monad,
    submonad_right_adjoints,
    t_embedding_check,
)
from .presheaf import DEFAULT_BUDGET, presheaf_label, verify_monad_laws
from .quantale import builtin, make_finite_quantale, show_value
from .vcat import (
    VFunctor,
    check_adjunction,
    hom_self_category,
    identity_functor,
    is_fully_faithful,
    is_functor,
    unit_category,
    validate_category,
)

BOOL = builtin("boolean2")
LUK2 = builtin("lukasiewicz_chain", 2)

DEFAULT_SEED = 0


# ------------------------------------------------------------ small builders

def _cat(name, q, objects, rows):
    return validate_category(name, q, objects,
                             [[q.elem(v) for v in row] for row in rows])


def _chain_cat(q, n, name):
    """n objects ordered as a chain: hom is k on or above the diagonal."""
    k, bot = q.unit, q.bottom
    return validate_category(name, q, [f"c{i}" for i in range(n)],
                             [[k if i <= j else bot for j in range(n)]
                              for i in range(n)])


def _disc_cat(q, n, name):
    k, bot = q.unit, q.bottom
    return validate_category(name, q, [f"d{i}" for i in range(n)],
                             [[k if i == j else bot for j in range(n)]
                              for i in range(n)])


def _indisc2(q, name):
    k = q.unit
    return validate_category(name, q, ["p", "q"], [[k, k], [k, k]])


def _vee(name="vee"):
    return _cat(name, BOOL, ["d0", "d1", "t"],
                [[1, 0, 1], [0, 1, 1], [0, 0, 1]])


def _lat4(name="lat4"):
    # the four-element Boolean lattice o < a, b < t as an ordered set
    return _cat(name, BOOL, ["o", "a", "b", "t"],
                [[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]])


def _luk_sym(name="luk_sym"):
    return _cat(name, LUK2, ["p", "q"],
                [[1, Fraction(1, 2)], [Fraction(1, 2), 1]])


def _luk_asym(name="luk_asym"):
    return _cat(name, LUK2, ["p", "q"], [[1, Fraction(1, 2)], [0, 1]])


def _diamond_pair():
    """A two-object discrete category over the diamond locale."""
    q = make_finite_quantale(
        "diamond", ["o", "a", "b", "i"],
        [("o", "a"), ("o", "b"), ("a", "i"), ("b", "i")],
        [["o", "o", "o", "o"], ["o", "a", "o", "a"],
         ["o", "o", "b", "b"], ["o", "a", "b", "i"]],
        "i")
    return _cat("pair", q, ["u", "v"], [["i", "o"], ["o", "i"]])


def _all_functors(cats):
    """Every functor between members of `cats`, in enumeration order."""
    out = []
    for X in cats:
        for Y in cats:
            m = len(Y.objects)
            for num, mp in enumerate(
                    itertools.product(range(m), repeat=len(X.objects))):
                if is_functor(X, Y, mp):
                    out.append(VFunctor(f"{X.name}->{Y.name}#{num}",
                                        X, Y, mp, validated=True))
    return out


def _all_squares(functors):
    """Every commuting square with all four sides drawn from `functors`."""
    out = []
    for t in functors:
        for l in functors:
            if l.dom is not t.dom:
                continue
            for b in functors:
                if b.dom is not l.cod:
                    continue
                for r in functors:
                    if r.dom is not t.cod or r.cod is not b.cod:
                        continue
                    if all(b(l(i)) == r(t(i))
                           for i in range(len(t.dom.objects))):
                        out.append(square(t, l, b, r))
    return out


def _result(name, label, ok, witness=None, **detail):
    return {"name": name, "label": label,
            "verdict": "pass" if ok else "fail",
            "witness": None if witness is None else str(witness),
            "detail": detail}


# -------------------------------------------------------------- C1 quantales

def criterion_1(budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    """Lattice, tensor, and residuation axioms on every finite builtin."""
    qs = [builtin("boolean2")]
    for kind in ("goedel_chain", "lukasiewicz_chain"):
        qs += [builtin(kind, n) for n in (1, 2, 3, 4)]
    checked = 0
    for q in qs:
        c = q.carrier
        n = len(c)
        subsets = [[c[i] for i in range(n) if bits >> i & 1]
                   for bits in range(2 ** n)]
        for s in subsets:
            j, m = q.join(s), q.meet(s)
            if any(not q.leq(u, j) for u in s) or \
                    any(not q.leq(m, u) for u in s):
                return _result("C1", _C1_LABEL, False, f"{q.name}: bound")
            for u in c:  # least upper / greatest lower, not just bounds
                if all(q.leq(v, u) for v in s) and not q.leq(j, u):
                    return _result("C1", _C1_LABEL, False, f"{q.name}: lub")
                if all(q.leq(u, v) for v in s) and not q.leq(u, m):
                    return _result("C1", _C1_LABEL, False, f"{q.name}: glb")
            for u in c:  # tensor distributes over arbitrary joins
                if q.tensor(u, j) != q.join(q.tensor(u, v) for v in s):
                    return _result("C1", _C1_LABEL, False,
                                   f"{q.name}: {u} over a join")
            checked += len(subsets)
        for u in c:
            if q.tensor(u, q.unit) != u:
                return _result("C1", _C1_LABEL, False, f"{q.name}: unit {u}")
            for v in c:
                if q.tensor(u, v) != q.tensor(v, u):
                    return _result("C1", _C1_LABEL, False,
                                   f"{q.name}: {u}⊗{v} not symmetric")
                for w in c:
                    if q.tensor(q.tensor(u, v), w) != q.tensor(u, q.tensor(v, w)):
                        return _result("C1", _C1_LABEL, False,
                                       f"{q.name}: assoc at ({u},{v},{w})")
                    if q.leq(q.tensor(u, v), w) != q.leq(v, q.hom(u, w)):
                        return _result("C1", _C1_LABEL, False,
                                       f"{q.name}: residuation at ({u},{v},{w})")
                    checked += 2
    return _result("C1", _C1_LABEL, True,
                   quantales=len(qs), comparisons=checked)


_C1_LABEL = "builtin quantale axioms, exhaustively"


# ------------------------------------------------------------ C2 monad laws

def criterion_2(budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    """Presheaf unit and associativity laws; sampling kicks in exactly
    where enumerating presheaves on PPX would blow the budget."""
    cats = [_chain_cat(BOOL, 2, "chain2"), _chain_cat(BOOL, 3, "chain3"),
            _disc_cat(BOOL, 2, "disc2"), _disc_cat(BOOL, 3, "disc3"),
            _indisc2(BOOL, "indisc2"), _luk_sym(), _luk_asym()]
    modes = {}
    sampled = 0
    for X in cats:
        rep = verify_monad_laws(X, budget=budget, seed=seed)
        assoc = rep["associativity"]
        modes[X.name] = f"{assoc['mode']}:{assoc['checked']}"
        if assoc["mode"] == "sampled":
            sampled += 1
        if not (rep["unit_mapped"]["ok"] and rep["unit_pointed"]["ok"]):
            return _result("C2", _C2_LABEL, False, f"{X.name}: unit law")
        if assoc["mode"] == "unchecked" or not assoc["ok"]:
            return _result("C2", _C2_LABEL, False,
                           f"{X.name}: associativity {assoc['mode']}, "
                           f"witness {assoc['witness']}")
    return _result("C2", _C2_LABEL, True,
                   categories=len(cats), sampled_instances=sampled,
                   modes=modes)


_C2_LABEL = "presheaf monad laws, sampling where enumeration is too big"


# ---------------------------------------------------------------- C3 squares

def _square_family(tag):
    if tag == "boolean2":
        cats = [_chain_cat(BOOL, 2, "chain2"), _disc_cat(BOOL, 2, "disc2"),
                unit_category(BOOL)]
    else:
        cats = [_luk_sym(), _luk_asym(), unit_category(LUK2)]
    return _all_functors(cats)


def criterion_3(budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    """Square transfer: passing squares keep passing under the presheaf
    map, unit and multiplication squares are natural, and at least one
    square genuinely fails (with no requirement on its image)."""
    P = presheaf_monad(budget)
    detail = {}
    for tag in ("boolean2", "lukasiewicz_chain(2)"):
        fs = _square_family(tag)
        pmap = {id(f): P.map(f) for f in fs}
        sqs = _all_squares(fs)
        identity_squares = sum(
            1 for sq in sqs
            if sq.top.mapping == sq.left.mapping ==
            tuple(range(len(sq.top.dom.objects))) and sq.bottom is sq.right)
        passing = failing = 0
        for sq in sqs:
            ok, _ = bc_star_square_check(sq)
            if not ok:
                failing += 1
                continue  # image recorded by construction, nothing demanded
            passing += 1
            try:
                image = square(pmap[id(sq.top)], pmap[id(sq.left)],
                               pmap[id(sq.bottom)], pmap[id(sq.right)])
            except NotCommuting as e:
                return _result("C3", _C3_LABEL, False, f"{tag}: {e}")
            iok, iw = bc_star_square_check(image)
            if not iok:
                return _result(
                    "C3", _C3_LABEL, False,
                    f"{tag}: image of ({sq.top.name},{sq.left.name},"
                    f"{sq.bottom.name},{sq.right.name}) fails at {iw}")
        naturality = 0
        for f in fs:
            try:
                naturality_square(P.unit(f.dom), f, P.unit(f.cod), pmap[id(f)])
                naturality_square(P.mult(f.dom), P.map(pmap[id(f)]),
                                  P.mult(f.cod), pmap[id(f)])
            except NotCommuting as e:
                return _result("C3", _C3_LABEL, False, f"{tag}: {f.name}: {e}")
            naturality += 2
        if len(sqs) < 20 or failing == 0 or identity_squares < len(fs):
            return _result("C3", _C3_LABEL, False,
                           f"{tag}: family too thin ({len(sqs)} squares, "
                           f"{failing} failing, {identity_squares} identity)")
        detail[tag] = {"functors": len(fs), "squares": len(sqs),
                       "passing": passing, "failing": failing,
                       "identity_squares": identity_squares,
                       "naturality_squares": naturality}
    return _result("C3", _C3_LABEL, True, **detail)


_C3_LABEL = "square transfer and unit/multiplication naturality"


# --------------------------------------------------- C4 fully faithful squares

def criterion_4(budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    """Fully faithful coincides with the identity square passing."""
    agree = 0
    for tag in ("boolean2", "lukasiewicz_chain(2)"):
        for f in _square_family(tag):
            one = identity_functor(f.dom)
            ff = is_fully_faithful(f)[0]
            bc = bc_star_square_check(square(one, one, f, f))[0]
            if ff != bc:
                return _result("C4", _C4_LABEL, False, f.name)
            agree += 1
    return _result("C4", _C4_LABEL, True, functors=agree)


_C4_LABEL = "fully faithful = identity square passes"


# ------------------------------------------------------- C5 lax idempotency

def criterion_5(budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    """The square route and both adjunction routes give one verdict,
    for the presheaf monad and for both ball monads."""
    chain2 = _chain_cat(BOOL, 2, "chain2")
    disc2 = _disc_cat(BOOL, 2, "disc2")
    instances = [(presheaf_monad(budget), X)
                 for X in (chain2, disc2, _indisc2(BOOL, "indisc2"), _luk_sym())]
    instances += [(ball_monad(True), X) for X in (chain2, disc2, _luk_sym())]
    instances += [(ball_monad(False), X)
                  for X in (chain2, disc2,
                            hom_self_category(builtin("goedel_chain", 2)))]
    flags = {}
    for T, X in instances:
        rep = lax_idempotency_report(T, X)
        if not rep["routes_agree"]:
            return _result("C5", _C5_LABEL, False, f"{T.name} on {X.name}")
        flags[f"{T.name}({X.name})"] = rep["lax_idempotent"]
    return _result("C5", _C5_LABEL, True, instances=len(instances),
                   lax_idempotent=flags)


_C5_LABEL = "lax idempotency: square and adjunction routes coincide"


# --------------------------------------------------------- C6 admissibility

def criterion_6(budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    """Closure conditions hold for both distinguished classes and break
    columnwise for a class defined on whole distributors only."""
    chain2 = _chain_cat(BOOL, 2, "chain2")
    cats = [chain2, _disc_cat(BOOL, 2, "disc2")]
    funcs = _all_functors(cats)
    for spec in (submonad_all(), submonad_right_adjoints()):
        rep = admissible_class_check(spec, cats, funcs, budget)
        if not rep["admissible"]:
            return _result("C6", _C6_LABEL, False, f"{spec.name}")
        if rep["multiplication"]["unchecked"]:
            return _result("C6", _C6_LABEL, False,
                           f"{spec.name}: unexpectedly over budget")
    broken = SubmonadSpec("whole_only", "user_table",
                          member=lambda X, values: True,
                          dist_member=lambda phi: len(phi.cod.objects) != 1)
    rep = admissible_class_check(broken, [chain2], [identity_functor(chain2)],
                                 budget)
    if rep["columnwise"]["ok"] or rep["columnwise"]["witness"] is None:
        return _result("C6", _C6_LABEL, False,
                       "whole-distributor class slipped through columnwise")
    if rep["admissible"]:
        return _result("C6", _C6_LABEL, False, "broken class marked admissible")
    return _result("C6", _C6_LABEL, True,
                   specs=("all", "right_adjoints"), functors=len(funcs),
                   broken_witness=rep["columnwise"]["witness"])


_C6_LABEL = "admissibility closure holds; a non-columnwise class fails"


# ---------------------------------------------------------- C7 cancellation

def criterion_7(budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    """Cancellation, separation of the ball category of V, and
    preservation of separation stand or fall together."""
    outcomes = {}
    for kind, n, expected in (("lukasiewicz_chain", 2, True),
                              ("lukasiewicz_chain", 3, True),
                              ("goedel_chain", 2, False),
                              ("goedel_chain", 3, False)):
        q = builtin(kind, n)
        rep = cancellation_report(q, cats=(_chain_cat(q, 2, f"two({q.name})"),))
        if not rep["equivalent"]:
            return _result("C7", _C7_LABEL, False, f"{q.name}: routes split")
        if rep["cancellative"]["ok"] is not expected:
            return _result("C7", _C7_LABEL, False,
                           f"{q.name}: cancellative={rep['cancellative']['ok']}")
        outcomes[q.name] = rep["cancellative"]["ok"]
    return _result("C7", _C7_LABEL, True, outcomes=outcomes)


_C7_LABEL = "cancellation equivalences on lukasiewicz and goedel chains"


# ------------------------------------------------------------- C8 tensoring

def _c8_instances():
    quantales = [builtin("boolean2")]
    for kind in ("goedel_chain", "lukasiewicz_chain"):
        quantales += [builtin(kind, n) for n in (2, 3, 4)]
    instances = []
    for q in quantales:
        homself = hom_self_category(q)
        for ext in (True, False):
            instances.append((homself, ext, True))
            instances.append((_chain_cat(q, 2, f"chain2({q.name})"), ext, False))
            instances.append((_indisc2(q, f"indisc2({q.name})"), ext, False))
    # three-object chains where a failed search stays enumerable
    for q in (BOOL, builtin("goedel_chain", 2), builtin("goedel_chain", 3),
              builtin("goedel_chain", 4), LUK2):
        for ext in (True, False):
            instances.append((_chain_cat(q, 3, f"chain3({q.name})"), ext, False))
    for X in (_disc_cat(BOOL, 2, "disc2"), _disc_cat(BOOL, 3, "disc3"),
              _luk_sym(), _luk_asym()):
        for ext in (True, False):
            instances.append((X, ext, False))
    return instances


def _no_action_exists(X, BX):
    """Exhaust maps BX → X for one passing unit pointing, stepwise
    associativity, expansion, and functoriality all at once."""
    q = X.quantale
    nx = len(X.objects)
    pairs = BX.pairs
    idx = {p: j for j, p in enumerate(pairs)}
    radii = tuple(dict.fromkeys(r for _, r in pairs))
    for mp in itertools.product(range(nx), repeat=len(pairs)):
        if any(mp[idx[(i, q.unit)]] != i for i in range(nx)):
            continue
        if any(not q.leq(r, X.hom[i][mp[j]])
               for j, (i, r) in enumerate(pairs)):
            continue
        stepwise = all(
            mp[idx[(i, t)]] == mp[idx[(mp[j], s)]]
            for j, (i, r) in enumerate(pairs) for s in radii
            for t in (q.tensor(r, s),) if (i, t) in idx)
        if stepwise and is_functor(BX, X, mp):
            return False
    return True


def criterion_8(budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    """Tensored-ness found two ways; algebras verified four ways; on
    hom-categories the action is the tensor itself; non-tensored
    categories admit no algebra at all."""
    instances = _c8_instances()
    tensored_count = non_tensored = 0
    for X, ext, homself in instances:
        q = X.quantale
        by_search = tensored_check(X, ext, via="search")
        by_ext = tensored_check(X, ext, via="extension")
        if by_search["tensored"] != by_ext["tensored"]:
            return _result("C8", _C8_LABEL, False, f"{X.name}: routes split")
        if by_search["tensored"]:
            tensored_count += 1
            alpha = by_search["algebra"]
            if alpha.mapping != by_ext["algebra"].mapping:
                return _result("C8", _C8_LABEL, False,
                               f"{X.name}: representatives differ")
            rep = ball_algebra_check(alpha)
            if not (rep["algebra"] and rep["agree"]):
                return _result("C8", _C8_LABEL, False,
                               f"{X.name}: algebra conditions split")
            cons = tensor_consequences(X, alpha)
            bad = next((k for k, v in cons.items()
                        if isinstance(v, dict) and v.get("ok") is False), None)
            if bad is not None:
                return _result("C8", _C8_LABEL, False, f"{X.name}: {bad}")
            if homself:
                # on V itself the action must be x ⊕ r = x ⊗ r
                BX = alpha.dom
                pos = {e: i for i, e in enumerate(q.carrier)}
                for j, (i, r) in enumerate(BX.pairs):
                    if alpha(j) != pos[q.tensor(q.carrier[i], r)]:
                        return _result("C8", _C8_LABEL, False,
                                       f"{X.name}: action is not ⊗ at "
                                       f"{BX.objects[j]}")
        else:
            non_tensored += 1
            BX = ball_category(X, ext)
            if len(X.objects) ** len(BX.objects) > 20000:
                return _result("C8", _C8_LABEL, False,
                               f"{X.name}: counterexample search too big")
            if not _no_action_exists(X, BX):
                return _result("C8", _C8_LABEL, False,
                               f"{X.name}: not tensored yet an action exists")
    if len(instances) < 50 or non_tensored == 0:
        return _result("C8", _C8_LABEL, False,
                       f"battery too thin: {len(instances)} instances, "
                       f"{non_tensored} non-tensored")
    return _result("C8", _C8_LABEL, True, instances=len(instances),
                   tensored=tensored_count, non_tensored=non_tensored)


_C8_LABEL = "tensored two ways; ball algebras four ways"


# ----------------------------------------------------------- C9 b-embeddings

def _full_subchain(V, labels, name):
    idx = [V.objects.index(l) for l in labels]
    sub = validate_category(name, V.quantale, [V.objects[i] for i in idx],
                            [[V.hom[i][j] for j in idx] for i in idx])
    h = VFunctor(f"incl_{name}", sub, V, tuple(idx), validated=True)
    return sub, h


def _sharp_identities(h, escapes):
    """Find the right adjoint left inverse of Bh pointwise and verify
    the three identities it satisfies for any passing embedding.  The
    adjoint is partial: pairs whose value would need radius ⊥ have none,
    and must be exactly the recorded escapes."""
    X, Y = h.dom, h.cod
    q = Y.quantale
    BX = ball_category(X, extended=False)
    BY = ball_category(Y, extended=False)
    by_idx = {p: j for j, p in enumerate(BY.pairs)}
    embed = [by_idx[(h(i), r)] for i, r in BX.pairs]  # Bh on indices
    unit_checked = 0
    for j, (yi, r) in enumerate(BY.pairs):
        cand = next((b for b in range(len(BX.objects))
                     if all(BY.hom[embed[a]][j] == BX.hom[a][b]
                            for a in range(len(BX.objects)))), None)
        if cand is None:
            if BY.objects[j] not in escapes:
                return f"no adjoint value at {BY.objects[j]}, not an escape"
            continue
        xi, s = BX.pairs[cand]
        for a in range(len(BX.objects)):   # (1) same distance to (y,r)
            if BY.hom[embed[a]][j] != BY.hom[embed[a]][embed[cand]]:
                return f"distance splits at {BX.objects[a]} vs {BY.objects[j]}"
        if r == q.unit:
            unit_checked += 1
            if s != Y.hom[h(xi)][yi]:      # (2) radius is the distance
                return f"radius at {BY.objects[j]}"
            for a in range(len(X.objects)):  # (3) factorization through y_k
                lhs = Y.hom[h(a)][yi]
                if lhs != q.tensor(Y.hom[h(a)][h(xi)], Y.hom[h(xi)][yi]):
                    return f"factorization at ({X.objects[a]},{Y.objects[yi]})"
    if unit_checked == 0:
        return "no unit-radius pair survived to test"
    return None


def criterion_9(budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    """Interval sub-chains of the lukasiewicz four-chain embed; a gappy
    one does not; every passing embedding satisfies the adjoint-value
    identities."""
    V = hom_self_category(builtin("lukasiewicz_chain", 4))
    passing = []
    for name, labels in (("upper", ["1/2", "3/4", "1"]),
                         ("lower", ["0", "1/4", "1/2"]),
                         ("full", list(V.objects))):
        sub, h = _full_subchain(V, labels, name)
        rep = b_embedding_check(h)
        if not rep["b_embedding"]:
            return _result("C9", _C9_LABEL, False, f"{name}: {rep}")
        w = _sharp_identities(h, rep["escapes"])
        if w is not None:
            return _result("C9", _C9_LABEL, False, f"{name}: {w}")
        passing.append(name)
    _, gappy = _full_subchain(V, ["0", "1"], "gappy")
    rep = b_embedding_check(gappy)
    if rep["b_embedding"]:
        return _result("C9", _C9_LABEL, False, "gappy chain embeds")
    return _result("C9", _C9_LABEL, True, passing=passing,
                   gappy_witness=str(rep["pointing"]["witness"]))


_C9_LABEL = "interval sub-chains embed, with the adjoint-value identities"


# ----------------------------------------------- C10 algebras three ways

def criterion_10(budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    """Algebra extraction, cocompleteness, and the minimum description
    agree instance by instance; algebras are injective along the
    generated embeddings."""
    # separated carriers only: without separation the unit is not
    # injective and no strict section can exist, cocomplete or not
    bool_cats = [_chain_cat(BOOL, 2, "chain2"), _chain_cat(BOOL, 3, "chain3"),
                 _disc_cat(BOOL, 2, "disc2"), _vee(), hom_self_category(BOOL)]
    luk_cats = [_luk_sym(), _luk_asym(), hom_self_category(LUK2)]
    specs = (submonad_all(), submonad_right_adjoints())
    agreements = 0
    algebra_names = {spec.name: set() for spec in specs}
    for spec in specs:
        for X in bool_cats + luk_cats:
            a = algebra_extract(X, spec, budget)
            c = cocompleteness_check(X, spec, budget=budget)
            m = min_characterization(X, spec, budget)
            if not (a["ok"] == c["cocomplete"] == m["ok"]):
                return _result("C10", _C10_LABEL, False,
                               f"{spec.name} on {X.name}: verdicts split")
            if set(a["failures"]) != set(c["failures"]):
                return _result("C10", _C10_LABEL, False,
                               f"{spec.name} on {X.name}: failure sets differ")
            if a["ok"]:
                algebra_names[spec.name].add(id(X))
                alpha = a["algebra"].alpha
                for i, lab in enumerate(m["x_phi"]):
                    if X.hom[alpha(i)] != X.hom[X.objects.index(lab)]:
                        return _result("C10", _C10_LABEL, False,
                                       f"{spec.name} on {X.name}: "
                                       f"actions differ at {lab}")
            agreements += 1
    # injectivity along every generated embedding, per quantale
    emb_checked = 0
    for cats in (bool_cats, luk_cats):
        fam = [f for f in _all_functors(cats[:3])
               if is_fully_faithful(f)[0] and f.dom is not f.cod]
        for spec in specs:
            tembs = [h for h in fam
                     if t_embedding_check(spec, h)["t_embedding"]]
            for X in cats:
                if id(X) not in algebra_names[spec.name]:
                    continue
                for h in tembs:
                    if len(X.objects) ** len(h.cod.objects) > 10 ** 5:
                        continue
                    rep = injectivity_check(X, h)
                    if not rep["ok"]:
                        return _result("C10", _C10_LABEL, False,
                                       f"{spec.name}: {X.name} not injective "
                                       f"along {h.name} at {rep['witness']}")
                    emb_checked += 1
    if emb_checked == 0:
        return _result("C10", _C10_LABEL, False, "no embeddings generated")
    return _result("C10", _C10_LABEL, True, instances=agreements,
                   injectivity_instances=emb_checked)


_C10_LABEL = "extraction, cocompleteness, minima, and injectivity agree"


# ------------------------------------------------ C11 right-adjoint closure

def criterion_11(budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    """Brute-force adjoint enumeration matches the membership route;
    completion is complete, fully faithful, and idempotent; eventually
    constant sequences land on their stabilization point."""
    chain2 = _chain_cat(BOOL, 2, "chain2")
    pair = _diamond_pair()
    ra = submonad_right_adjoints()
    battery = [chain2, _luk_sym(), _luk_asym(), hom_self_category(BOOL),
               hom_self_category(builtin("goedel_chain", 2)), pair]
    for X in battery:
        LX, pairs = enumerate_L(X, budget)
        SX = submonad_category(ra, X, budget)
        if LX.objects != SX.objects:
            return _result("C11", _C11_LABEL, False, f"{X.name}: routes split")
        for p in pairs:
            if not check_adjoint_pair(p.psi, p.phi)[0]:
                return _result("C11", _C11_LABEL, False,
                               f"{X.name}: uncertified pair")
    completions = {}
    for X in (chain2, pair, _luk_asym()):
        LX, unit = lawvere_completion(X, budget)
        if not is_fully_faithful(unit)[0] or not is_L_complete(LX, budget)[0]:
            return _result("C11", _C11_LABEL, False, f"{X.name}: completion")
        _, unit2 = lawvere_completion(LX, budget)
        if sorted(unit2.mapping) != list(range(len(LX.objects))):
            return _result("C11", _C11_LABEL, False,
                           f"{X.name}: completing twice moved things")
        completions[X.name] = len(LX.objects)
    erp = builtin("ext_real_plus")

    def metric(name, labels, rows):
        return validate_category(name, erp, labels,
                                 [[erp.elem(v) for v in row] for row in rows])

    spaces = [metric("m2", ["a", "b"], [[0, 1], [1, 0]]),
              metric("m3", ["a", "b", "c"],
                     [[0, 1, 1], [1, 0, 1], [1, 1, 0]]),
              metric("line3", ["a", "b", "c"],
                     [[0, 1, 3], [1, 0, 2], [3, 2, 0]])]
    sequences = 0
    for M in spaces:
        for p in M.objects:
            seqs = [cauchy_sequence((p,) * 3, 0)]
            if p != M.objects[0]:
                seqs.append(cauchy_sequence((M.objects[0], p, p, p), 1))
            for seq in seqs:
                _, rep_label = cauchy_pair(M, seq)
                if rep_label != seq.points[seq.stable_from]:
                    return _result("C11", _C11_LABEL, False,
                                   f"{M.name}: landed on {rep_label}")
                sequences += 1
    if sequences < 10:
        return _result("C11", _C11_LABEL, False,
                       f"only {sequences} sequences generated")
    return _result("C11", _C11_LABEL, True, categories=len(battery),
                   completions=completions, sequences=sequences)


_C11_LABEL = "adjoint enumeration, completion, and stabilization"


# -------------------------------------------------------- C12 homomorphisms

def criterion_12(budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    """Between extracted algebras the lax inequality never fails and the
    two strictness routes agree; curated maps classify correctly."""
    spec = submonad_all()
    chain2 = _chain_cat(BOOL, 2, "chain2")
    chain3 = _chain_cat(BOOL, 3, "chain3")
    lat4 = _lat4()
    homv = hom_self_category(BOOL)
    carriers = [chain2, chain3, lat4, homv]
    algs = {id(X): algebra_extract(X, spec, budget)["algebra"]
            for X in carriers}
    if any(a is None for a in algs.values()):
        return _result("C12", _C12_LABEL, False, "carrier failed to extract")
    fam = _all_functors([chain2, chain3, lat4])
    if len(fam) < 20:
        return _result("C12", _C12_LABEL, False, f"only {len(fam)} functors")
    for f in fam:
        rep = t_homomorphism_check(f, algs[id(f.dom)], algs[id(f.cod)], budget)
        if rep["lax"] is not True or not rep["agree"]:
            return _result("C12", _C12_LABEL, False, f.name)
    curated = {}
    expect = {}
    curated["identity"] = identity_functor(chain3)
    expect["identity"] = True
    curated["crush"] = VFunctor("crush", lat4, chain2, (0, 0, 0, 1),
                                validated=True)
    expect["crush"] = False
    q = BOOL
    for c, tag, want in ((q.unit, "hom(k,-)", True), (q.bottom, "hom(0,-)", False)):
        mp = tuple(q.carrier.index(q.hom(c, v)) for v in q.carrier)
        curated[tag] = VFunctor(tag, homv, homv, mp, validated=True)
        expect[tag] = want
    strictness = {}
    for tag, f in curated.items():
        rep = t_homomorphism_check(f, algs[id(f.dom)], algs[id(f.cod)], budget)
        strictness[tag] = rep["strict"]["ok"]
        if rep["strict"]["ok"] is not expect[tag]:
            return _result("C12", _C12_LABEL, False,
                           f"{tag}: strict={rep['strict']['ok']}")
    if strictness["crush"] is False:
        rep = t_homomorphism_check(curated["crush"], algs[id(lat4)],
                                   algs[id(chain2)], budget)
        if rep["strict"]["witness"] != "[1,1,1,0]":
            return _result("C12", _C12_LABEL, False,
                           f"crush witness moved: {rep['strict']['witness']}")
    return _result("C12", _C12_LABEL, True, functors=len(fam),
                   strictness=strictness)


_C12_LABEL = "lax always holds; strictness classifies curated maps"


# -------------------------------------------------------------------- runner

CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
            criterion_11, criterion_12)


def run_selftest(budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    """All twelve checks, in order."""
    return [crit(budget, seed) for crit in CRITERIA]
