"""`quantcat`: run checks and constructions from a JSON workspace.

A workspace is a single JSON document with any of the sections
`quantales`, `categories`, `functors`, `relations`, `squares`,
`submonad_specs`, `sequences`; each section is a list of named records.
Values are exact: integers, rational strings like "3/4", "inf" (for the
extended-real quantale), or carrier labels of a finite quantale.  Hom
and weight matrices are row-major in declared object order.  Quantale
records never carry a "hom" table — residuation is derived, and
supplying one is rejected outright.

    {"quantales":  [{"name": "V", "kind": "lukasiewicz_chain", "n": 2},
                    {"name": "D", "carrier": ["o", "a", "b", "i"],
                     "leq": [["o","a"], ["o","b"], ["a","i"], ["b","i"]],
                     "tensor": [["o","o","o","o"], ["o","a","o","a"],
                                ["o","o","b","b"], ["o","a","b","i"]],
                     "unit": "i"}],
     "categories": [{"name": "X", "quantale": "V", "objects": ["x", "y"],
                     "hom": [["1", "1/2"], ["0", "1"]]}],
     "functors":   [{"name": "f", "dom": "X", "cod": "X",
                     "mapping": {"x": "x", "y": "x"}}],
     "relations":  [{"name": "w", "dom": "X", "cod": "X",
                     "matrix": [["1", "0"], ["0", "1"]]}],
     "squares":    [{"name": "sq", "top": "f", "left": "f",
                     "bottom": "f", "right": "f"}],
     "submonad_specs": [{"name": "all", "kind": "all"},
                        {"name": "tbl", "kind": "table",
                         "members": {"X": ["[1,0]", "[1,1]"]}}],
     "sequences":  [{"name": "s", "category": "X",
                     "points": ["x", "y", "y"], "stable_from": 1}]}

Commands: `validate`, `check <property>`, `compute <construction>`,
`complete lawvere`, `selftest`.  Reports echo the command, budget, and
seed, then list one verdict per check: pass, fail (with witness), or
unchecked (with reason — only a blown budget produces this).  Exit
codes: 0 all pass, 1 some check failed, 2 bad input or usage, 3 budget
exceeded with items left unchecked.  Output is deterministic for fixed
inputs, budget, and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .ball import (
    ball_algebra_check,
    b_embedding_check,
    ball_category,
    ball_monad,
    ball_unit,
    cancellation_report,
    tensored_check,
)
from .colimit import algebra_extract, t_homomorphism_check, weighted_colimit, weighted_diagram
from .dist import relation, validate_distributor
from .errors import (
    BudgetExceeded,
    ForeignElement,
    ParseError,
    PreconditionFail,
    QuantcatError,
    UnresolvedReference,
    UsageError,
    ValidationError,
)
from .lawvere import cauchy_pair, cauchy_sequence, is_L_complete, lawvere_completion
from .monadkit import (
    admissible_class_check,
    bc_star_square_check,
    lax_idempotency_report,
    presheaf_monad,
    square,
    submonad_all,
    submonad_category,
    submonad_monad,
    submonad_right_adjoints,
    submonad_user_table,
    t_embedding_check,
)
from .presheaf import DEFAULT_BUDGET, presheaf_category, yoneda
from .quantale import INF, QElem, Quantale, builtin, make_finite_quantale, show_value
from .selftest import run_selftest
from .vcat import (
    VFunctor,
    check_adjunction,
    is_fully_dense,
    is_fully_faithful,
    is_separated,
    validate_category,
    validate_functor,
)

PROPERTIES = ("separated", "fully-faithful", "fully-dense", "adjunction",
              "distributor", "bc-square", "lax-idempotent", "admissible",
              "t-embedding", "b-embedding", "tensored", "ball-algebra",
              "algebra", "homomorphism", "l-complete", "cancellative")

CONSTRUCTIONS = ("presheaf", "ball", "submonad", "colimit", "algebra",
                 "lawvere-completion", "cauchy-pair")

_SECTIONS = ("quantales", "categories", "functors", "relations", "squares",
             "submonad_specs", "sequences")


# ------------------------------------------------------------ value parsing

def _record_value(raw, q, where):
    """One JSON entry as an element of q: int, 'p/q', 'inf', or label."""
    if isinstance(raw, bool) or isinstance(raw, float):
        raise ParseError(f"{where}: {raw!r} is not exact; write '3/4'")
    candidates = []
    if isinstance(raw, int):
        candidates = [raw]
    elif isinstance(raw, str):
        if raw == "inf":
            candidates = [INF]
        else:
            try:
                candidates = [Fraction(raw), raw]
            except ValueError:
                candidates = [raw]
    else:
        raise ParseError(f"{where}: {raw!r} is not a value")
    for cand in candidates:
        try:
            return q.elem(cand)
        except ForeignElement:
            continue
    raise ValidationError(f"{where}: {raw!r} is not an element of {q.name}")


def _reject_floats(text):
    raise ParseError(f"floats are not exact; write {text!r} as a fraction")


# --------------------------------------------------------------- workspaces

class Workspace:
    """Parsed records by section and name, plus per-record failures."""

    def __init__(self, path):
        self.path = path
        self.sections = {s: {} for s in _SECTIONS}
        self.failures = {}     # (section, name) -> message
        self.order = []        # (section, name) in declaration order
        self.quantale_alias = {}   # id(Quantale) -> workspace name

    def _get(self, section, name, what):
        if name is None:
            raise UsageError(f"this command needs --{what}")
        if (section, name) in self.failures:
            raise ValidationError(
                f"{what} {name!r} failed validation: "
                f"{self.failures[(section, name)]}")
        if name not in self.sections[section]:
            raise UnresolvedReference(f"{what} {name!r} is not declared")
        return self.sections[section][name]

    def quantale(self, name) -> Quantale:
        return self._get("quantales", name, "quantale")

    def category(self, name):
        return self._get("categories", name, "category")

    def functor(self, name, what="functor"):
        return self._get("functors", name, what)

    def relation(self, name):
        return self._get("relations", name, "relation")

    def square(self, name):
        return self._get("squares", name, "square")

    def spec(self, name):
        return self._get("submonad_specs", name, "spec")

    def sequence(self, name):
        return self._get("sequences", name, "sequence")

    def alias_of(self, q: Quantale) -> str:
        return self.quantale_alias.get(id(q), q.name)


def _take(rec, where, required, optional=()):
    if not isinstance(rec, dict):
        raise ParseError(f"{where}: records are objects")
    known = set(required) | set(optional) | {"name"}
    for key in rec:
        if key not in known:
            raise ValidationError(f"{where}: unknown key {key!r}")
    for key in required:
        if key not in rec:
            raise ValidationError(f"{where}: missing key {key!r}")
    return [rec[k] for k in required]


def _build_quantale(rec, where):
    if "hom" in rec:
        raise ValidationError(
            f"{where}: a quantale record must not carry a hom table; "
            "residuation is derived from tensor and order")
    if "carrier" in rec:
        carrier, leq, tensor, unit = _take(
            rec, where, ("carrier", "leq", "tensor", "unit"))
        pairs = [tuple(p) for p in leq]
        if any(len(p) != 2 for p in pairs):
            raise ParseError(f"{where}: leq entries are [smaller, larger]")
        return make_finite_quantale(rec["name"], carrier, pairs, tensor, unit)
    (kind,) = _take(rec, where, ("kind",), optional=("n",))
    return builtin(kind, rec.get("n"))


def _build_spec(rec, ws, where):
    (kind,) = _take(rec, where, ("kind",), optional=("members",))
    if kind == "all":
        return submonad_all()
    if kind == "right_adjoints":
        return submonad_right_adjoints()
    if kind == "table":
        members = rec.get("members")
        if not isinstance(members, dict):
            raise ValidationError(f"{where}: table specs need members")
        return submonad_user_table(
            rec["name"], {k: tuple(v) for k, v in members.items()})
    raise ValidationError(f"{where}: unknown spec kind {kind!r}")


def parse_workspace(path) -> Workspace:
    """Read and structurally validate a workspace document.

    Undeclared names and malformed JSON abort with UnresolvedReference
    or ParseError; a record that parses but fails its own mathematics is
    kept as a failure, visible to `validate` and fatal to any command
    that touches it.
    """
    ws = Workspace(path)
    try:
        with open(path) as fh:
            doc = json.load(fh, parse_float=_reject_floats)
    except FileNotFoundError:
        raise ParseError(f"{path}: no such file")
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}:{e.lineno}:{e.colno}: {e.msg}")
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: the top level is an object")
    for section in doc:
        if section not in _SECTIONS:
            raise ValidationError(f"{path}: unknown section {section!r}")
        if not isinstance(doc[section], list):
            raise ParseError(f"{path}: section {section!r} is a list")

    def records(section):
        for i, rec in enumerate(doc.get(section, ())):
            where = f"{path}:{section}[{i}]"
            if not isinstance(rec, dict) or not isinstance(rec.get("name"), str) \
                    or not rec["name"]:
                raise ParseError(f"{where}: records need a nonempty name")
            name = rec["name"]
            if name in ws.sections[section]:
                raise ValidationError(f"{where}: duplicate name {name!r}")
            ws.order.append((section, name))
            yield rec, name, f"{where} ({name})"

    def keep(section, name, builder):
        try:
            ws.sections[section][name] = builder()
            return ws.sections[section][name]
        except (ParseError, UnresolvedReference):
            raise
        except QuantcatError as e:
            ws.failures[(section, name)] = str(e)
            return None

    for rec, name, where in records("quantales"):
        q = keep("quantales", name, lambda: _build_quantale(rec, where))
        if q is not None:
            ws.quantale_alias[id(q)] = name

    for rec, name, where in records("categories"):
        alias, objects, hom = _take(rec, where, ("quantale", "objects", "hom"))

        def build():
            q = ws.quantale(alias)
            if not isinstance(objects, list) or \
                    any(not isinstance(o, str) for o in objects):
                raise ParseError(f"{where}: objects are strings")
            rows = [[_record_value(v, q, where) for v in row] for row in hom]
            return validate_category(name, q, objects, rows)

        keep("categories", name, build)

    for rec, name, where in records("functors"):
        dom, cod, mapping = _take(rec, where, ("dom", "cod", "mapping"))

        def build():
            X, Y = ws.category(dom), ws.category(cod)
            if not isinstance(mapping, dict) or \
                    set(mapping) != set(X.objects):
                raise ValidationError(
                    f"{where}: mapping keys must be exactly the objects "
                    f"of {X.name}")
            try:
                mp = tuple(Y.index(mapping[x]) for x in X.objects)
            except KeyError as e:
                raise ValidationError(f"{where}: {e.args[0]}")
            return validate_functor(name, X, Y, mp)

        keep("functors", name, build)

    for rec, name, where in records("relations"):
        dom, cod, matrix = _take(rec, where, ("dom", "cod", "matrix"))

        def build():
            X, Y = ws.category(dom), ws.category(cod)
            rows = [[_record_value(v, X.quantale, where) for v in row]
                    for row in matrix]
            return relation(X, Y, rows)

        keep("relations", name, build)

    for rec, name, where in records("squares"):
        top, left, bottom, right = _take(
            rec, where, ("top", "left", "bottom", "right"))
        keep("squares", name,
             lambda: square(ws.functor(top), ws.functor(left),
                            ws.functor(bottom), ws.functor(right)))

    for rec, name, where in records("submonad_specs"):
        keep("submonad_specs", name, lambda: _build_spec(rec, ws, where))

    for rec, name, where in records("sequences"):
        alias, points, stable = _take(
            rec, where, ("category", "points", "stable_from"))

        def build():
            X = ws.category(alias)
            if not isinstance(points, list):
                raise ParseError(f"{where}: points is a list of objects")
            for p in points:
                if p not in X.objects:
                    raise ValidationError(
                        f"{where}: {p!r} is not an object of {X.name}")
            if isinstance(stable, bool) or not isinstance(stable, int):
                raise ParseError(f"{where}: stable_from is an integer")
            return (X, cauchy_sequence(points, stable))

        keep("sequences", name, build)

    return ws


# ----------------------------------------------------------------- emission

def _quantale_record(ws, q: Quantale):
    name = ws.alias_of(q)
    if q.kind != "finite":
        rec = {"name": name, "kind": q.kind}
        if q.param is not None:
            rec["n"] = q.param
        return rec
    labels = [show_value(e.value) for e in q.carrier]
    return {
        "name": name,
        "carrier": labels,
        "leq": [[labels[i], labels[j]]
                for i in range(len(labels)) for j in range(len(labels))
                if q.leq(q.carrier[i], q.carrier[j])],
        "tensor": [[show_value(q.tensor(u, v).value) for v in q.carrier]
                   for u in q.carrier],
        "unit": show_value(q.unit.value),
    }


def _category_record(ws, X):
    return {"name": X.name, "quantale": ws.alias_of(X.quantale),
            "objects": list(X.objects),
            "hom": [[show_value(v.value) for v in row] for row in X.hom]}


def _functor_record(f: VFunctor):
    return {"name": f.name, "dom": f.dom.name, "cod": f.cod.name,
            "mapping": {x: f.on_label(x) for x in f.dom.objects}}


def _fragment(ws, categories, functors):
    qs, seen = [], set()
    for X in categories:
        if id(X.quantale) not in seen:
            seen.add(id(X.quantale))
            qs.append(_quantale_record(ws, X.quantale))
    return {"quantales": qs,
            "categories": [_category_record(ws, X) for X in categories],
            "functors": [_functor_record(f) for f in functors]}


def _jsonable(v):
    if isinstance(v, QElem):
        return str(v)
    if isinstance(v, Fraction):
        return show_value(v)
    if v is INF:
        return "inf"
    if isinstance(v, dict):
        return {str(k): _jsonable(u) for k, u in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(u) for u in v]
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return str(v)


def _check(name, ok, witness=None, reason=None, detail=None):
    return {"name": name, "verdict": "pass" if ok else "fail",
            "witness": None if witness is None else str(witness),
            "reason": reason, "detail": _jsonable(detail) or None}


def _unchecked(name, reason):
    return {"name": name, "verdict": "unchecked", "witness": None,
            "reason": reason, "detail": None}


# ----------------------------------------------------------- check handlers

def _run_check(ws, args, cname):
    prop = args.property
    budget = args.budget
    if prop == "separated":
        ok, w = is_separated(ws.category(args.category))
        return [_check(cname, ok, w)], {}, None
    if prop == "fully-faithful":
        ok, w = is_fully_faithful(ws.functor(args.functor))
        return [_check(cname, ok, w)], {}, None
    if prop == "fully-dense":
        ok, w = is_fully_dense(ws.functor(args.functor))
        return [_check(cname, ok, w)], {}, None
    if prop == "adjunction":
        f = ws.functor(args.functor)
        g = ws.functor(args.adjoint, "adjoint")
        ok, w = check_adjunction(f, g)
        return [_check(cname, ok, w)], {}, None
    if prop == "distributor":
        r = ws.relation(args.relation)
        try:
            validate_distributor(r)
            return [_check(cname, True)], {}, None
        except QuantcatError as e:
            return [_check(cname, False, str(e))], {}, None
    if prop == "bc-square":
        ok, w = bc_star_square_check(ws.square(args.square))
        return [_check(cname, ok, w)], {}, None
    if prop == "lax-idempotent":
        X = ws.category(args.category)
        monad = args.monad or "presheaf"
        T = {"presheaf": lambda: presheaf_monad(budget),
             "ball": lambda: ball_monad(True),
             "ball-plain": lambda: ball_monad(False)}[monad]()
        rep = lax_idempotency_report(T, X)
        ok = rep["lax_idempotent"] and rep["routes_agree"]
        return [_check(cname, ok, detail=rep)], {}, None
    if prop == "admissible":
        spec = ws.spec(args.spec)
        cats = list(ws.sections["categories"].values())
        funs = list(ws.sections["functors"].values())
        if args.quantale:
            q = ws.quantale(args.quantale)
            cats = [X for X in cats if X.quantale is q]
            funs = [f for f in funs if f.dom.quantale is q]
        elif len({id(X.quantale) for X in cats}) > 1:
            raise ValidationError(
                "the workspace spans several quantales; pick the test "
                "universe with --quantale")
        rep = admissible_class_check(spec, cats, funs, budget)
        skipped = rep["multiplication"]["unchecked"]
        if not rep["admissible"]:
            w = next((rep[k]["witness"] for k in
                      ("conjoints", "composites", "columnwise", "multiplication")
                      if not rep[k]["ok"]), None)
            return [_check(cname, False, w, detail=rep)], {}, None
        if skipped:
            return [_unchecked(cname, "budget left categories unchecked: "
                               + ", ".join(skipped))], {}, None
        return [_check(cname, True, detail=rep)], {}, None
    if prop == "t-embedding":
        rep = t_embedding_check(ws.spec(args.spec), ws.functor(args.functor))
        return [_check(cname, rep["t_embedding"], rep["witness"], detail=rep)], {}, None
    if prop == "b-embedding":
        rep = b_embedding_check(ws.functor(args.functor))
        w = rep["ff_witness"] or rep["pointing"]["witness"] \
            or rep["scalar_identity"]["witness"]
        return [_check(cname, rep["b_embedding"],
                       None if rep["b_embedding"] else w, detail=rep)], {}, None
    if prop == "tensored":
        rep = tensored_check(ws.category(args.category), not args.plain)
        detail = dict(rep, algebra=None if rep["algebra"] is None
                      else _functor_record(rep["algebra"]))
        return [_check(cname, rep["tensored"], rep["witness"], detail=detail)], {}, None
    if prop == "ball-algebra":
        return _check_ball_algebra(ws, args, cname)
    if prop == "algebra":
        rep = algebra_extract(ws.category(args.category),
                              ws.spec(args.spec), budget)
        w = ", ".join(rep["failures"]) or None
        detail = dict(rep, algebra=None if rep["algebra"] is None
                      else _functor_record(rep["algebra"].alpha))
        return [_check(cname, rep["ok"], w, detail=detail)], {}, None
    if prop == "homomorphism":
        return _check_homomorphism(ws, args, cname)
    if prop == "l-complete":
        ok, w = is_L_complete(ws.category(args.category), budget)
        return [_check(cname, ok, w)], {}, None
    if prop == "cancellative":
        q = ws.quantale(args.quantale)
        cats = (ws.category(args.category),) if args.category else ()
        if any(X.quantale is not q for X in cats):
            raise ValidationError(
                f"{cats[0].name} is not enriched in {ws.alias_of(q)}")
        rep = cancellation_report(q, cats)
        return [_check(cname, rep["cancellative"]["ok"],
                       rep["cancellative"]["witness"], detail=rep)], {}, None
    raise UsageError(f"unknown property {prop!r}")


def _check_ball_algebra(ws, args, cname):
    f = ws.functor(args.functor)
    X = ws.category(args.category)
    BX = ball_category(X, not args.plain)
    variant = "ball" if args.plain else "extended ball"
    if f.dom.objects != BX.objects or f.dom.hom != BX.hom:
        raise ValidationError(
            f"{f.dom.name} is not the {variant} category of {X.name}; "
            f"compute ball emits the expected record")
    if not f.cod.same_shape(X):
        raise ValidationError(f"{f.name} must land in {X.name}")
    alpha = VFunctor(f.name, BX, X, f.mapping, validated=True)
    rep = ball_algebra_check(alpha)
    ok = rep["algebra"] and rep["agree"]
    w = rep["unit_pointing"]["witness"] or rep["associativity"]["witness"] \
        or rep["expansion"]["witness"] or rep["monad_laws"]["witness"]
    return [_check(cname, ok, None if ok else w, detail=rep)], {}, None


def _check_homomorphism(ws, args, cname):
    f = ws.functor(args.functor)
    spec = ws.spec(args.spec)
    algebras = []
    for X in (f.dom, f.cod):
        rep = algebra_extract(X, spec, args.budget)
        if not rep["ok"]:
            raise PreconditionFail(
                f"{X.name} does not carry a {spec.name} algebra")
        algebras.append(rep["algebra"])
    rep = t_homomorphism_check(f, *algebras, budget=args.budget)
    return [_check(cname, rep["homomorphism"], rep["strict"]["witness"],
                   detail=rep)], {}, None


# --------------------------------------------------------- compute handlers

def _run_compute(ws, args, cname):
    con = args.construction
    budget = args.budget
    if con == "presheaf":
        X = ws.category(args.category)
        PX = presheaf_category(X, budget)
        y = yoneda(X, PX)
        return ([_check(cname, True, detail={"objects": len(PX.objects)})],
                {"category": PX.name, "unit": y.name},
                _fragment(ws, [X, PX], [y]))
    if con == "ball":
        X = ws.category(args.category)
        BX = ball_category(X, not args.plain)
        unit = ball_unit(X, BX)
        return ([_check(cname, True, detail={"objects": len(BX.objects)})],
                {"category": BX.name, "unit": unit.name},
                _fragment(ws, [X, BX], [unit]))
    if con == "submonad":
        X = ws.category(args.category)
        spec = ws.spec(args.spec)
        TX = submonad_category(spec, X, budget)
        unit = submonad_monad(spec, budget).unit(X)
        return ([_check(cname, True, detail={"objects": len(TX.objects)})],
                {"category": TX.name, "unit": unit.name},
                _fragment(ws, [X, TX], [unit]))
    if con == "colimit":
        w = ws.relation(args.weight)
        f = ws.functor(args.diagram)
        try:
            validate_distributor(w)
        except QuantcatError as e:
            raise PreconditionFail(
                f"weight {args.weight!r} is not a distributor: {e}")
        d = weighted_diagram(w, f)
        try:
            g = weighted_colimit(d)
        except QuantcatError as e:
            return [_check(cname, False, str(e))], {}, None
        return ([_check(cname, True)],
                {"functor": g.name},
                _fragment(ws, [g.dom, g.cod], [g]))
    if con == "algebra":
        X = ws.category(args.category)
        spec = ws.spec(args.spec)
        rep = algebra_extract(X, spec, budget)
        if not rep["ok"]:
            w = ", ".join(rep["failures"]) or "unit laws failed"
            return [_check(cname, False, w, detail=dict(rep, algebra=None))], {}, None
        alpha = rep["algebra"].alpha
        return ([_check(cname, True, detail={"ambiguous": rep["ambiguous"]})],
                {"functor": alpha.name},
                _fragment(ws, [alpha.dom, X], [alpha]))
    if con == "lawvere-completion":
        X = ws.category(args.category)
        LX, unit = lawvere_completion(X, budget)
        return ([_check(cname, True, detail={"objects": len(LX.objects)})],
                {"category": LX.name, "unit": unit.name},
                _fragment(ws, [X, LX], [unit]))
    if con == "cauchy-pair":
        X, seq = ws.sequence(args.sequence)
        pair, label = cauchy_pair(X, seq)
        return ([_check(cname, True, detail={"representative": label})],
                {"representative": label,
                 "unit": str(pair.unit),
                 "phi": [str(row[0]) for row in pair.phi.matrix],
                 "psi": [str(v) for v in pair.psi.matrix[0]]},
                None)
    raise UsageError(f"unknown construction {con!r}")


_SINGULAR = {"quantales": "quantale", "categories": "category",
             "functors": "functor", "relations": "relation",
             "squares": "square", "submonad_specs": "spec",
             "sequences": "sequence"}


def _run_validate(ws):
    checks = []
    for section, name in ws.order:
        msg = ws.failures.get((section, name))
        checks.append(_check(f"{_SINGULAR[section]}:{name}", msg is None, msg))
    if not checks:
        checks.append(_check("workspace", True, detail={"records": 0}))
    return checks, {}, None


# ------------------------------------------------------------------ reports

def _render_text(report):
    lines = [report["command"]]
    for c in report["checks"]:
        line = f"{c['verdict'].upper():9s} {c['name']}"
        if c.get("witness"):
            line += f"  witness={c['witness']}"
        if c.get("reason"):
            line += f"  reason={c['reason']}"
        lines.append(line)
    for key, value in (report.get("outputs") or {}).items():
        lines.append(f"{key} = {value}")
    if "workspace" in report:
        n = sum(len(v) for v in report["workspace"].values())
        lines.append(f"emitted {n} records; use --format json to capture them")
    return "\n".join(lines)


def _exit_code(checks):
    verdicts = {c["verdict"] for c in checks}
    if "fail" in verdicts:
        return 1
    if "unchecked" in verdicts:
        return 3
    return 0


def _target_tokens(args):
    order = ("quantale", "category", "functor", "adjoint", "relation",
             "square", "spec", "weight", "diagram", "sequence")
    parts = [getattr(args, a) for a in order if getattr(args, a, None)]
    if getattr(args, "plain", False):
        parts.append("plain")
    return ",".join(parts)


def run(args, argv):
    """Dispatch one parsed command; returns (report, exit_code)."""
    command = " ".join(["quantcat"] + list(argv))
    report = {"command": command, "budget": args.budget, "seed": args.seed}
    outputs, fragment = {}, None
    if args.command == "selftest":
        checks = [{"name": r["name"], "verdict": r["verdict"],
                   "witness": r["witness"], "reason": None,
                   "detail": _jsonable(dict(r["detail"], label=r["label"]))}
                  for r in run_selftest(args.budget, args.seed)]
    else:
        if args.workspace is None:
            raise UsageError(f"{args.command} needs --workspace")
        ws = parse_workspace(args.workspace)
        if args.command == "validate":
            checks, outputs, fragment = _run_validate(ws)
        else:
            if args.command == "check":
                cname = f"{args.property}[{_target_tokens(args)}]"
                handler = lambda: _run_check(ws, args, cname)
            else:
                cname = f"{args.construction}[{_target_tokens(args)}]"
                handler = lambda: _run_compute(ws, args, cname)
            try:
                checks, outputs, fragment = handler()
            except BudgetExceeded as e:
                checks = [_unchecked(cname, str(e))]
    report["checks"] = checks
    if outputs:
        report["outputs"] = _jsonable(outputs)
    if fragment is not None:
        report["workspace"] = fragment
    return report, _exit_code(checks)


# --------------------------------------------------------------------- main

def _parser():
    p = argparse.ArgumentParser(
        prog="quantcat",
        description="exact checks and constructions for quantale-enriched "
                    "categories, from a JSON workspace")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--workspace", help="path to the JSON workspace")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="enumeration ceiling (default 10^6)")
        sp.add_argument("--seed", type=int, default=0,
                        help="seed for sampled law checks")

    def targets(sp):
        for flag in ("quantale", "category", "functor", "adjoint", "relation",
                     "square", "spec", "weight", "diagram", "sequence"):
            sp.add_argument(f"--{flag}")
        sp.add_argument("--plain", action="store_true",
                        help="plain ball variant (radii above bottom)")
        sp.add_argument("--monad", choices=("presheaf", "ball", "ball-plain"))

    common(sub.add_parser("validate", help="build and check every record"))
    sp = sub.add_parser("check", help="decide one property")
    sp.add_argument("property", choices=PROPERTIES)
    common(sp)
    targets(sp)
    sp = sub.add_parser("compute", help="emit one construction")
    sp.add_argument("construction", choices=CONSTRUCTIONS)
    common(sp)
    targets(sp)
    sp = sub.add_parser("complete", help="alias for compute lawvere-completion")
    sp.add_argument("what", choices=("lawvere",))
    common(sp)
    targets(sp)
    common(sub.add_parser("selftest", help="run the built-in battery"))
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = _parser().parse_args(argv)
    if args.command == "complete":
        args.command = "compute"
        args.construction = "lawvere-completion"
    try:
        report, code = run(args, argv)
    except QuantcatError as e:
        message = f"{type(e).__name__}: {e}"
        if getattr(args, "format", "text") == "json":
            print(json.dumps({"command": " ".join(["quantcat"] + argv),
                              "error": message}, indent=2, sort_keys=True))
        else:
            print(f"error: {message}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(_render_text(report))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
