"""The algebra of finitely supported K-valued functions on a finite carrier.

F0(X) has pointwise operations and basis {delta_x}. Its structure mirrors the
carrier exactly: nonzero homomorphisms to K are point evaluations, algebra
isomorphisms F0(Y) -> F0(X) come from bijections X -> Y, ideals are F0(A) for
subsets A, and partial actions on the carrier induce partial actions on the
algebra via alpha_t(f) = f o h_{t^-1} (and conversely).
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import PartialAction, validate_partial_action
from .errors import PreconditionError
from .fields import FieldSpec, Scalar
from .groups import GroupElement


class FunAlgElement:
    """Finite-support function carrier -> K, stored sparsely without zeros."""

    def __init__(self, field: FieldSpec, carrier, coeffs=None):
        self.field = field
        self.carrier = tuple(carrier)
        self._index = {x: i for i, x in enumerate(self.carrier)}
        self.coeffs: dict[str, Scalar] = {}
        for x, c in (coeffs or {}).items():
            if x not in self._index:
                raise PreconditionError("%s is not a carrier point" % x)
            if not c.is_zero():
                self.coeffs[x] = c

    @staticmethod
    def delta(field: FieldSpec, carrier, x: str) -> "FunAlgElement":
        return FunAlgElement(field, carrier, {x: field.one()})

    @staticmethod
    def zero(field: FieldSpec, carrier) -> "FunAlgElement":
        return FunAlgElement(field, carrier)

    def value(self, x: str) -> Scalar:
        return self.coeffs.get(x, self.field.zero())

    def support(self):
        return sorted(self.coeffs, key=self._index.__getitem__)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "FunAlgElement"):
        if self.field != other.field or self.carrier != other.carrier:
            raise PreconditionError("elements live over different carriers or fields")

    def __add__(self, other: "FunAlgElement") -> "FunAlgElement":
        self._check(other)
        out = dict(self.coeffs)
        for x, c in other.coeffs.items():
            out[x] = out[x] + c if x in out else c
        return FunAlgElement(self.field, self.carrier, out)

    def __neg__(self) -> "FunAlgElement":
        return FunAlgElement(self.field, self.carrier,
                             {x: -c for x, c in self.coeffs.items()})

    def __sub__(self, other: "FunAlgElement") -> "FunAlgElement":
        return self + (-other)

    def __mul__(self, other: "FunAlgElement") -> "FunAlgElement":
        self._check(other)
        out = {}
        for x, c in self.coeffs.items():
            if x in other.coeffs:
                out[x] = c * other.coeffs[x]
        return FunAlgElement(self.field, self.carrier, out)

    def scale(self, k: Scalar) -> "FunAlgElement":
        return FunAlgElement(self.field, self.carrier,
                             {x: k * c for x, c in self.coeffs.items()})

    def compose(self, mapping: dict[str, str], carrier=None) -> "FunAlgElement":
        """self o mapping as a function on the mapping's domain carrier."""
        carrier = self.carrier if carrier is None else carrier
        out = {x: self.coeffs[y] for x, y in mapping.items() if y in self.coeffs}
        return FunAlgElement(self.field, carrier, out)

    def __eq__(self, other):
        return (isinstance(other, FunAlgElement)
                and self.field == other.field
                and self.carrier == other.carrier
                and self.coeffs == other.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "0"
        return " + ".join("%s·δ_%s" % (c, x)
                          for x, c in sorted(self.coeffs.items(),
                                             key=lambda p: self._index[p[0]]))


class LinearMapOnBasis:
    """Linear map F0(source) -> F0(target), given by the images of delta_x."""

    def __init__(self, field: FieldSpec, source, target, columns):
        self.field = field
        self.source = tuple(source)
        self.target = tuple(target)
        self.columns: dict[str, FunAlgElement] = {}
        for x in self.source:
            col = columns[x]
            if col.carrier != self.target or col.field != field:
                raise PreconditionError("column for %s lives over the wrong carrier" % x)
            self.columns[x] = col

    def apply(self, f: FunAlgElement) -> FunAlgElement:
        if f.carrier != self.source or f.field != self.field:
            raise PreconditionError("argument lives over the wrong carrier")
        out = FunAlgElement.zero(self.field, self.target)
        for x, c in f.coeffs.items():
            out = out + self.columns[x].scale(c)
        return out

    def __eq__(self, other):
        return (isinstance(other, LinearMapOnBasis)
                and self.field == other.field
                and self.source == other.source
                and self.target == other.target
                and self.columns == other.columns)


@dataclass(frozen=True)
class HomClassification:
    verdict: str                  # "zero" | "evaluation" | "not-multiplicative"
    point: str | None = None      # evaluation point
    pair_witness: tuple[str, str] | None = None   # x != y with phi(dx)phi(dy) != 0
    idem_witness: str | None = None               # x with phi(dx)^2 != phi(dx)


def classify_linear_functional(field: FieldSpec, carrier, values) -> HomClassification:
    """Decide whether a linear functional on F0(X) is an algebra homomorphism.

    The only nonzero homomorphisms to K are the evaluations eps_x; anything
    else fails multiplicativity on a pair of basis vectors or on a single
    non-idempotent value. Witnesses are minimal in carrier order.
    """
    carrier = tuple(carrier)
    vals = {x: values[x] for x in carrier}
    support = [x for x in carrier if not vals[x].is_zero()]
    if not support:
        return HomClassification("zero")
    if len(support) >= 2:
        return HomClassification("not-multiplicative",
                                 pair_witness=(support[0], support[1]))
    x = support[0]
    if vals[x] * vals[x] != vals[x]:
        return HomClassification("not-multiplicative", idem_witness=x)
    return HomClassification("evaluation", point=x)


def psi_from_bijection(field: FieldSpec, h: dict[str, str], source_carrier,
                       target_carrier) -> LinearMapOnBasis:
    """psi_h: F0(Y) -> F0(X), f |-> f o h, for a bijection h: X -> Y.

    On the basis: psi_h(delta_y) = delta_{h^-1(y)}.
    """
    source_carrier = tuple(source_carrier)   # Y
    target_carrier = tuple(target_carrier)   # X
    if (set(h) != set(target_carrier) or set(h.values()) != set(source_carrier)
            or len(set(h.values())) != len(h)):
        raise PreconditionError("h is not a bijection between the carriers")
    hinv = {y: x for x, y in h.items()}
    columns = {y: FunAlgElement.delta(field, target_carrier, hinv[y])
               for y in source_carrier}
    return LinearMapOnBasis(field, source_carrier, target_carrier, columns)


def bijection_from_isomorphism(gamma: LinearMapOnBasis) -> dict[str, str]:
    """Recover the unique bijection h with gamma = psi_h.

    For each target point x, eps_x o gamma is a homomorphism F0(Y) -> K and
    must be an evaluation eps_y; set h(x) = y. The candidate is re-verified
    column by column before it is returned.
    """
    field = gamma.field
    h: dict[str, str] = {}
    for x in gamma.target:
        values = {y: gamma.columns[y].value(x) for y in gamma.source}
        cls = classify_linear_functional(field, gamma.source, values)
        if cls.verdict != "evaluation":
            raise PreconditionError(
                "eps_%s o gamma is not an evaluation (%s)" % (x, cls.verdict))
        h[x] = cls.point
    if len(set(h.values())) != len(gamma.source) or len(h) != len(gamma.source):
        raise PreconditionError("recovered map is not a bijection")
    if psi_from_bijection(field, h, gamma.source, gamma.target) != gamma:
        raise PreconditionError("map is not induced by any bijection")
    return h


def subset_of_ideal(generators) -> list[str]:
    """The subset A with <generators> = F0(A): points hit by some generator.

    The zero ideal corresponds to the empty set; this extends the nonzero
    ideal / nonempty subset bijection to a total lattice map.
    """
    if not generators:
        return []
    carrier = generators[0].carrier
    hit = set()
    for g in generators:
        hit.update(g.coeffs)
    return [x for x in carrier if x in hit]


class InducedAlgebraAction:
    """The partial action on F0(X) arising from a set-level partial action.

    D_t = F0(X_t) and alpha_t(f) = f o h_{t^-1}.
    """

    def __init__(self, field: FieldSpec, action: PartialAction, validate=True):
        if validate:
            report = validate_partial_action(action)
            if not report.ok:
                raise PreconditionError(
                    "underlying action is invalid: %s" % "; ".join(report.render()))
        self.field = field
        self.action = action
        self.carrier = action.carrier

    def domain_support(self, t: GroupElement):
        """Support set of D_t, i.e. X_t."""
        return self.action.subset(t)

    def apply(self, t: GroupElement, f: FunAlgElement) -> FunAlgElement:
        """alpha_t(f) = f o h_{t^-1}; requires support(f) within X_{t^-1}."""
        if f.carrier != self.carrier or f.field != self.field:
            raise PreconditionError("element lives over the wrong carrier or field")
        dom = self.action.subset(t.inverse())
        outside = [x for x in f.support() if x not in dom]
        if outside:
            raise PreconditionError(
                "support escapes X_{t^-1} at %s" % ",".join(outside))
        out = {}
        for x, c in f.coeffs.items():
            out[self.action.apply(t, x)] = c
        return FunAlgElement(self.field, self.carrier, out)

    def as_linear_map(self, t: GroupElement) -> LinearMapOnBasis:
        """alpha_t as a basis map F0(X_{t^-1}) -> F0(X_t) over subcarriers."""
        source = self.action.sort_labels(self.action.subset(t.inverse()))
        target = self.action.sort_labels(self.action.subset(t))
        columns = {}
        for x in source:
            columns[x] = FunAlgElement.delta(self.field, target, self.action.apply(t, x))
        return LinearMapOnBasis(self.field, source, target, columns)

    def __eq__(self, other):
        return (isinstance(other, InducedAlgebraAction)
                and self.field == other.field
                and self.action == other.action)


def induce_algebra_action(field: FieldSpec, theta: PartialAction) -> InducedAlgebraAction:
    return InducedAlgebraAction(field, theta)


def recover_set_action(field: FieldSpec, group, carrier, family) -> PartialAction:
    """Rebuild the set-level action from an algebra-level one.

    family: {GroupElement t: (X_t support labels, alpha_t as LinearMapOnBasis
    from F0(X_{t^-1}) to F0(X_t))}. Each alpha_t must be induced by a unique
    bijection h_{t^-1}: X_t -> X_{t^-1}; the recovered action is validated and
    must reproduce the family exactly.
    """
    carrier = tuple(carrier)
    e = group.identity()
    maps: dict[GroupElement, dict[str, str]] = {}
    for t, (support, alpha_t) in family.items():
        if t == e:
            continue
        if subset_of_ideal(list(alpha_t.columns.values())) != list(alpha_t.target):
            raise PreconditionError("columns of alpha_%s do not fill F0(X_t)" % t)
        h_tinv = bijection_from_isomorphism(alpha_t)   # X_t -> X_{t^-1}
        if set(h_tinv) != set(support):
            raise PreconditionError("alpha_%s is not defined on all of F0(X_{t^-1})" % t)
        maps[t] = {x: y for y, x in h_tinv.items()}    # h_t: X_{t^-1} -> X_t
    theta = PartialAction(group, carrier, maps)
    report = validate_partial_action(theta)
    if not report.ok:
        raise PreconditionError(
            "recovered family is not a partial action: %s" % "; ".join(report.render()))
    induced = InducedAlgebraAction(field, theta, validate=False)
    for t, (support, alpha_t) in family.items():
        if t == e:
            continue
        if induced.as_linear_map(t) != alpha_t:
            raise PreconditionError("recovered action does not reproduce alpha_%s" % t)
    return theta
