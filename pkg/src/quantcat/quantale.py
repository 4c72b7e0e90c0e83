"""Commutative unital quantales with exact element arithmetic.

Finite quantales are validated exhaustively and store lookup tables for
tensor, residuation and the lattice operations.  Three infinite rational
families (extended nonnegative reals under truncated addition, the unit
interval under multiplication, and the unit interval under the Lukasiewicz
tensor) are provided with closed-form operations; they are flagged
non-enumerable and every downstream construction that would have to
enumerate the carrier refuses them.

No floating point is used anywhere: scalars are `fractions.Fraction`
values, opaque labels (user-supplied finite tables), or the single
infinity sentinel `INF`.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadParameter,
    ForeignElement,
    JoinsNotPreserved,
    NotALattice,
    NotEnumerable,
    NotUnital,
    TensorNotAssociative,
    TensorNotCommutative,
    UnitIsBottom,
)


class _Infinity:
    """The point at infinity of the extended nonnegative rationals.

    Compares strictly above every Fraction; adding anything to it gives
    it back.  A singleton, so identity comparison is safe.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def show_value(value) -> str:
    """Canonical display form: '3/4', '2', 'inf', or the opaque label."""
    if value is INF:
        return "inf"
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


@dataclass(frozen=True)
class QElem:
    """An element of a specific quantale.

    `owner` is a structural key of the owning quantale, so elements of two
    identically-built quantales are interchangeable, while mixing elements
    across genuinely different quantales raises ForeignElement.
    """

    owner: str
    value: object  # Fraction | INF | str label

    def __str__(self):
        return show_value(self.value)

    def __repr__(self):
        return f"QElem({show_value(self.value)})"


@dataclass(frozen=True)
class QuantaleFlags:
    integral: bool
    cancellative: bool
    method: str  # "exhaustive" | "analytic"
    witness: tuple | None = None  # (r, s) with r = s⊗r, s ≠ k, r ≠ ⊥


_RATIONAL_KINDS = ("ext_real_plus", "unit_interval_product", "lukasiewicz_rational")


class Quantale:
    """A validated commutative unital quantale.

    Immutable after construction; all operations are pure.  Use
    `make_finite_quantale` or `builtin` to obtain instances.
    """

    def __init__(self, *, name, kind, param, key, carrier_values, leq_set,
                 tensor_table, unit_value):
        self.name = name
        self.kind = kind
        self.param = param
        self.key = key
        self.enumerable = carrier_values is not None
        if self.enumerable:
            self.carrier = tuple(QElem(key, v) for v in carrier_values)
            self._index = {e: i for i, e in enumerate(self.carrier)}
            self._by_value = {e.value: e for e in self.carrier}
            self._leq = leq_set
            self._tensor = tensor_table
            self._validate_finite(unit_value)
        else:
            self.carrier = None
            self.unit = QElem(key, unit_value)
            self.bottom = QElem(key, INF if kind == "ext_real_plus" else Fraction(0))
            self.top = QElem(key, Fraction(0) if kind == "ext_real_plus" else Fraction(1))

    # ----- construction-time validation (finite kinds) -----

    def _validate_finite(self, unit_value):
        n = len(self.carrier)
        leq, tens = self._leq, self._tensor
        vals = [e.value for e in self.carrier]

        def disp(i):
            return show_value(vals[i])

        for i in range(n):
            for j in range(n):
                if i != j and (i, j) in leq and (j, i) in leq:
                    raise NotALattice(
                        f"order is not antisymmetric: {disp(i)} <= {disp(j)} <= {disp(i)}")

        # pairwise least upper / greatest lower bounds
        join_t = [[None] * n for _ in range(n)]
        meet_t = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                ubs = [m for m in range(n) if (i, m) in leq and (j, m) in leq]
                least = [u for u in ubs if all((u, m) in leq for m in ubs)]
                if not least:
                    raise NotALattice(f"no least upper bound for {{{disp(i)}, {disp(j)}}}")
                join_t[i][j] = least[0]
                lbs = [m for m in range(n) if (m, i) in leq and (m, j) in leq]
                greatest = [l for l in lbs if all((m, l) in leq for m in lbs)]
                if not greatest:
                    raise NotALattice(f"no greatest lower bound for {{{disp(i)}, {disp(j)}}}")
                meet_t[i][j] = greatest[0]
        self._join_t = join_t
        self._meet_t = meet_t

        bot = 0
        top = 0
        for m in range(n):
            bot = meet_t[bot][m]
            top = join_t[top][m]
        self._bottom_i, self._top_i = bot, top

        for i in range(n):
            for j in range(i + 1, n):
                if tens[i][j] != tens[j][i]:
                    raise TensorNotCommutative(
                        f"{disp(i)} ⊗ {disp(j)} = {disp(tens[i][j])} but "
                        f"{disp(j)} ⊗ {disp(i)} = {disp(tens[j][i])}")
        for i in range(n):
            for j in range(n):
                for m in range(n):
                    if tens[tens[i][j]][m] != tens[i][tens[j][m]]:
                        raise TensorNotAssociative(
                            f"({disp(i)} ⊗ {disp(j)}) ⊗ {disp(m)} ≠ "
                            f"{disp(i)} ⊗ ({disp(j)} ⊗ {disp(m)})")

        u = self._index[QElem(self.key, unit_value)]
        for i in range(n):
            if tens[i][u] != i:
                raise NotUnital(f"{disp(i)} ⊗ {disp(u)} = {disp(tens[i][u])} ≠ {disp(i)}")
        if u == bot:
            raise UnitIsBottom(f"unit {disp(u)} is the bottom element")
        self._unit_i = u

        for i in range(n):
            if tens[i][bot] != bot:
                raise JoinsNotPreserved(
                    f"{disp(i)} ⊗ ⊥ = {disp(tens[i][bot])} ≠ ⊥ (empty join)")
            for j in range(n):
                for m in range(n):
                    lhs = tens[i][join_t[j][m]]
                    rhs = join_t[tens[i][j]][tens[i][m]]
                    if lhs != rhs:
                        raise JoinsNotPreserved(
                            f"{disp(i)} ⊗ ({disp(j)} ∨ {disp(m)}) = {disp(lhs)} but "
                            f"({disp(i)} ⊗ {disp(j)}) ∨ ({disp(i)} ⊗ {disp(m)}) = {disp(rhs)}")

        # residuation, derived: hom(u,w) = ⋁ { v : u⊗v ≤ w }
        hom_t = [[None] * n for _ in range(n)]
        for i in range(n):
            for w in range(n):
                h = bot
                for v in range(n):
                    if (tens[i][v], w) in leq:
                        h = join_t[h][v]
                hom_t[i][w] = h
        self._hom_t = hom_t

        for i in range(n):
            for v in range(n):
                for w in range(n):
                    assert ((tens[i][v], w) in leq) == ((v, hom_t[i][w]) in leq), \
                        "residuation adjunction failed on a validated quantale"

        self.unit = self.carrier[u]
        self.bottom = self.carrier[bot]
        self.top = self.carrier[top]

    # ----- element handling -----

    def elem(self, value) -> QElem:
        """Wrap a raw value (or label) as an element of this quantale."""
        if self.enumerable:
            if isinstance(value, int) and not isinstance(value, bool):
                value = Fraction(value)
            e = self._by_value.get(value)
            if e is None:
                raise ForeignElement(f"{show_value(value)} is not in the carrier of {self.name}")
            return e
        if isinstance(value, int):
            value = Fraction(value)
        if value is INF:
            if self.kind != "ext_real_plus":
                raise ForeignElement(f"inf is not an element of {self.name}")
            return QElem(self.key, INF)
        if not isinstance(value, Fraction):
            raise ForeignElement(f"{value!r} is not an exact rational")
        if self.kind == "ext_real_plus":
            if value < 0:
                raise ForeignElement(f"{value} is negative")
        else:
            if not (0 <= value <= 1):
                raise ForeignElement(f"{value} is outside [0, 1]")
        return QElem(self.key, value)

    def check(self, e: QElem) -> QElem:
        if not isinstance(e, QElem) or e.owner != self.key:
            raise ForeignElement(f"{e!r} does not belong to quantale {self.name}")
        return e

    # ----- core operations -----

    def leq(self, u: QElem, v: QElem) -> bool:
        self.check(u), self.check(v)
        if self.enumerable:
            return (self._index[u], self._index[v]) in self._leq
        if self.kind == "ext_real_plus":
            return u.value >= v.value  # quantale order is reversed
        return u.value <= v.value

    def tensor(self, u: QElem, v: QElem) -> QElem:
        self.check(u), self.check(v)
        if self.enumerable:
            return self.carrier[self._tensor[self._index[u]][self._index[v]]]
        a, b = u.value, v.value
        if self.kind == "ext_real_plus":
            return QElem(self.key, a + b)
        if self.kind == "unit_interval_product":
            return QElem(self.key, a * b)
        s = a + b - 1  # lukasiewicz_rational
        return QElem(self.key, s if s > 0 else Fraction(0))

    def hom(self, u: QElem, w: QElem) -> QElem:
        self.check(u), self.check(w)
        if self.enumerable:
            return self.carrier[self._hom_t[self._index[u]][self._index[w]]]
        a, b = u.value, w.value
        if self.kind == "ext_real_plus":
            if a is INF:
                return QElem(self.key, Fraction(0))
            if b is INF:
                return QElem(self.key, INF)
            d = b - a
            return QElem(self.key, d if d > 0 else Fraction(0))
        if self.kind == "unit_interval_product":
            if a == 0:
                return QElem(self.key, Fraction(1))
            return QElem(self.key, min(Fraction(1), b / a))
        r = 1 - a + b  # lukasiewicz_rational
        return QElem(self.key, r if r < 1 else Fraction(1))

    def join2(self, u: QElem, v: QElem) -> QElem:
        self.check(u), self.check(v)
        if self.enumerable:
            return self.carrier[self._join_t[self._index[u]][self._index[v]]]
        if self.kind == "ext_real_plus":
            return u if u.value <= v.value else v  # numeric min
        return u if u.value >= v.value else v

    def meet2(self, u: QElem, v: QElem) -> QElem:
        self.check(u), self.check(v)
        if self.enumerable:
            return self.carrier[self._meet_t[self._index[u]][self._index[v]]]
        if self.kind == "ext_real_plus":
            return u if u.value >= v.value else v  # numeric max
        return u if u.value <= v.value else v

    def join(self, elems) -> QElem:
        """Join of a finite family; the empty join is the bottom element."""
        out = self.bottom
        for e in elems:
            out = self.join2(out, e)
        return out

    def meet(self, elems) -> QElem:
        """Meet of a finite family; the empty meet is the top element."""
        out = self.top
        for e in elems:
            out = self.meet2(out, e)
        return out

    # ----- predicates -----

    def flags(self) -> QuantaleFlags:
        integral = self.unit == self.top
        if self.enumerable:
            for r in self.carrier:
                if r == self.bottom:
                    continue
                for s in self.carrier:
                    if self.tensor(s, r) == r and s != self.unit:
                        return QuantaleFlags(integral, False, "exhaustive", (r, s))
            return QuantaleFlags(integral, True, "exhaustive")
        # each rational family is cancellative: r = s⊗r with r ≠ ⊥ forces
        # s + r = r (truncated addition, r finite), s·r = r (product, r > 0),
        # or s + r - 1 = r (Lukasiewicz, r > 0), hence s = k in every case
        return QuantaleFlags(integral, True, "analytic")

    # ----- identity, display -----

    def __eq__(self, other):
        return isinstance(other, Quantale) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Quantale({self.name})"


def _close_order(n, pairs):
    """Reflexive-transitive closure of index pairs, as a frozenset."""
    leq = {(i, i) for i in range(n)}
    leq.update(pairs)
    changed = True
    while changed:
        changed = False
        for (i, j) in list(leq):
            for (j2, m) in list(leq):
                if j == j2 and (i, m) not in leq:
                    leq.add((i, m))
                    changed = True
    return frozenset(leq)


def _structural_key(labels, leq_pairs, tensor_labels, unit_label):
    canon = repr((tuple(labels), tuple(sorted(leq_pairs)), tuple(tensor_labels), unit_label))
    return "finite:" + hashlib.sha256(canon.encode()).hexdigest()[:12]


def make_finite_quantale(name, carrier, leq, tensor, unit) -> Quantale:
    """Build and exhaustively validate a finite quantale.

    carrier: list of distinct labels (or rationals), in the order used by
             all tables.
    leq:     list of (smaller, larger) label pairs; the reflexive-transitive
             closure is taken, and the result must be a lattice order.
    tensor:  square table of labels, tensor[i][j] = carrier[i] ⊗ carrier[j].
    unit:    the label of the tensor unit.
    """
    if not carrier:
        raise BadParameter("carrier must be nonempty")
    labels = list(carrier)
    if len(set(labels)) != len(labels):
        raise BadParameter("carrier labels must be distinct")
    pos = {lab: i for i, lab in enumerate(labels)}

    def _pos(lab, where):
        if lab not in pos:
            raise BadParameter(f"unknown element {lab!r} in {where}")
        return pos[lab]

    pairs = {(_pos(a, "leq"), _pos(b, "leq")) for a, b in leq}
    if len(tensor) != len(labels) or any(len(row) != len(labels) for row in tensor):
        raise BadParameter("tensor table must be square over the carrier")
    table = tuple(tuple(_pos(v, "tensor table") for v in row) for row in tensor)
    unit_i = _pos(unit, "unit")

    key = _structural_key(labels, sorted(pairs),
                          tuple(v for row in tensor for v in row), unit)
    return Quantale(name=name, kind="finite", param=None, key=key,
                    carrier_values=labels, leq_set=_close_order(len(labels), pairs),
                    tensor_table=table, unit_value=labels[unit_i])


def _finite_from_ops(name, kind, param, values, tensor_fn, unit_value):
    n = len(values)
    idx = {v: i for i, v in enumerate(values)}
    pairs = {(i, j) for i in range(n) for j in range(n) if values[i] <= values[j]}
    table = tuple(tuple(idx[tensor_fn(values[i], values[j])] for j in range(n))
                  for i in range(n))
    key = f"{kind}({param})" if param is not None else kind
    return Quantale(name=name, kind=kind, param=param, key=key,
                    carrier_values=values, leq_set=frozenset(pairs),
                    tensor_table=table, unit_value=unit_value)


def builtin(kind: str, param: int | None = None) -> Quantale:
    """Return a named builtin quantale.

    Finite kinds: boolean2, goedel_chain(n), lukasiewicz_chain(n) — chains of
    n+1 equally spaced rationals in [0,1].  Infinite kinds: ext_real_plus
    (nonnegative rationals plus inf, order reversed, truncated addition),
    unit_interval_product, lukasiewicz_rational.
    """
    if kind == "boolean2":
        return _finite_from_ops("boolean2", "boolean2", None,
                                [Fraction(0), Fraction(1)], min, Fraction(1))
    if kind in ("goedel_chain", "lukasiewicz_chain"):
        if param is None or param < 1:
            raise BadParameter(f"{kind} requires a size parameter n >= 1")
        values = [Fraction(i, param) for i in range(param + 1)]
        if kind == "goedel_chain":
            fn = min
        else:
            def fn(u, v):
                s = u + v - 1
                return s if s > 0 else Fraction(0)
        return _finite_from_ops(f"{kind}({param})", kind, param, values, fn, Fraction(1))
    if kind in _RATIONAL_KINDS:
        if param is not None:
            raise BadParameter(f"{kind} takes no parameter")
        unit = Fraction(0) if kind == "ext_real_plus" else Fraction(1)
        return Quantale(name=kind, kind=kind, param=None, key=kind,
                        carrier_values=None, leq_set=None, tensor_table=None,
                        unit_value=unit)
    raise BadParameter(f"unknown builtin quantale kind {kind!r}")


def evaluate(q: Quantale, op: str, args):
    """Dispatch one named quantale operation on already-owned elements."""
    args = list(args)
    for e in args:
        q.check(e)
    if op == "tensor":
        if len(args) != 2:
            raise BadParameter("tensor takes exactly two arguments")
        return q.tensor(*args)
    if op == "hom":
        if len(args) != 2:
            raise BadParameter("hom takes exactly two arguments")
        return q.hom(*args)
    if op == "leq":
        if len(args) != 2:
            raise BadParameter("leq takes exactly two arguments")
        return q.leq(*args)
    if op in ("join", "meet"):
        if not args:
            raise BadParameter(f"{op} requires a nonempty argument list")
        return q.join(args) if op == "join" else q.meet(args)
    raise BadParameter(f"unknown operation {op!r}")
