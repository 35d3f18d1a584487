"""The equivalence-relation algebra F0(R) and its ideal theory.

F0(R) carries the convolution (f * g)(x, z) = sum_{y in [x]} f(x, y) g(y, z).
For free actions it is isomorphic to the skew ring via Gamma, which sends
f delta_t to the function supported on pairs (x, h_{t^-1}(x)) with value f(x).
Ideals are exactly the F0((Z x Z) & R) for R-invariant subsets Z; a brute
force span closure over exact row reduction serves as the independent oracle.

Every operation here refuses non-free actions: with multiple witnesses the
pair-indexed convolution would double-count, a case the construction does
not define.
"""

from __future__ import annotations

from .actions import (Relation, invariant_closure, is_invariant, equivalence_classes,
                      witness)
from .errors import NotFreeError, PreconditionError
from .fields import FieldSpec, Scalar
from .funalg import FunAlgElement, InducedAlgebraAction
from .skew import SkewElement


def _require_free(rel: Relation):
    if not rel.is_free():
        raise NotFreeError("operation on F0(R) requires a free action")


class RelElement:
    """Finite-support function R -> K, stored sparsely on pairs of R."""

    def __init__(self, field: FieldSpec, relation: Relation, coeffs=None):
        self.field = field
        self.relation = relation
        self.coeffs: dict[tuple[str, str], Scalar] = {}
        for pair, c in (coeffs or {}).items():
            if pair not in relation:
                raise PreconditionError("pair (%s, %s) is not in R" % pair)
            if not c.is_zero():
                self.coeffs[pair] = c

    @staticmethod
    def delta(field: FieldSpec, relation: Relation, x: str, y: str) -> "RelElement":
        return RelElement(field, relation, {(x, y): field.one()})

    @staticmethod
    def zero(field: FieldSpec, relation: Relation) -> "RelElement":
        return RelElement(field, relation)

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self):
        idx = self.relation.index
        return sorted(self.coeffs, key=lambda p: (idx(p[0]), idx(p[1])))

    def _check(self, other: "RelElement"):
        if self.field != other.field or self.relation != other.relation:
            raise PreconditionError("elements over different relations or fields")

    def __add__(self, other: "RelElement") -> "RelElement":
        self._check(other)
        out = dict(self.coeffs)
        for pair, c in other.coeffs.items():
            out[pair] = out[pair] + c if pair in out else c
        return RelElement(self.field, self.relation, out)

    def __neg__(self) -> "RelElement":
        return RelElement(self.field, self.relation,
                          {p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other: "RelElement") -> "RelElement":
        return self + (-other)

    def scale(self, k: Scalar) -> "RelElement":
        return RelElement(self.field, self.relation,
                          {p: k * c for p, c in self.coeffs.items()})

    def __mul__(self, other: "RelElement") -> "RelElement":
        """Convolution: match middle coordinates over stored support only."""
        self._check(other)
        _require_free(self.relation)
        out: dict[tuple[str, str], Scalar] = {}
        for (x, y), c in self.coeffs.items():
            for (y2, z), d in other.coeffs.items():
                if y2 != y:
                    continue
                key = (x, z)
                prod = c * d
                out[key] = out[key] + prod if key in out else prod
        return RelElement(self.field, self.relation, out)

    def __eq__(self, other):
        return (isinstance(other, RelElement)
                and self.field == other.field
                and self.relation == other.relation
                and self.coeffs == other.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "0"
        return " + ".join("%s·δ_(%s,%s)" % (self.coeffs[p], p[0], p[1])
                          for p in self.support())


def gamma(rel: Relation, u: SkewElement) -> RelElement:
    """The isomorphism F0(X) x G -> F0(R): f delta_t |-> value f(x) at (x, h_{t^-1}(x))."""
    _require_free(rel)
    if not u.validate():
        raise PreconditionError("skew element has a term outside its D_t")
    action = u.action.action
    out: dict[tuple[str, str], Scalar] = {}
    for t, a in u.sorted_terms():
        tinv = t.inverse()
        for x, c in a.coeffs.items():
            pair = (x, action.apply(tinv, x))
            out[pair] = out[pair] + c if pair in out else c
    return RelElement(u.action.field, rel, out)


def gamma_inv(alpha: InducedAlgebraAction, f: RelElement) -> SkewElement:
    """Inverse of gamma: coefficient at (x, y) with witness s feeds the term
    at t = s^-1 with f_t(x) = f(x, h_{t^-1}(x))."""
    rel = f.relation
    _require_free(rel)
    terms: dict = {}
    for (x, y), c in f.coeffs.items():
        s = witness(rel, x, y)
        t = s.inverse()
        d = FunAlgElement(alpha.field, alpha.carrier, {x: c})
        terms[t] = terms[t] + d if t in terms else d
    return SkewElement(alpha, terms)


class RelIdeal:
    """Ideal F0((Z x Z) & R) for an R-invariant subset Z."""

    def __init__(self, relation: Relation, invariant_members):
        members = set(invariant_members)
        if not is_invariant(relation, members):
            raise PreconditionError("subset is not R-invariant")
        self.relation = relation
        self.invariant = [x for x in relation.carrier if x in members]
        self.basis = [p for p in relation.sorted_pairs()
                      if p[0] in members and p[1] in members]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        return (isinstance(other, RelIdeal)
                and self.relation == other.relation
                and self.invariant == other.invariant)


def ideal_from_invariant(rel: Relation, members) -> RelIdeal:
    return RelIdeal(rel, members)


def ideal_closure_of(f: RelElement) -> list[str]:
    """Invariant subset generating the same ideal as f: the class closure of
    the first coordinates of its support."""
    _require_free(f.relation)
    firsts = {x for (x, _y) in f.coeffs}
    return invariant_closure(f.relation, firsts)


def ideal_membership(g: RelElement, ideal: RelIdeal) -> bool:
    if g.relation != ideal.relation:
        raise PreconditionError("element and ideal over different relations")
    basis = set(ideal.basis)
    return all(p in basis for p in g.coeffs)


def count_ideals(rel: Relation) -> int:
    return 1 << len(equivalence_classes(rel))


class ExactRowSpace:
    """Row space over K in reduced echelon form; exact arithmetic throughout."""

    def __init__(self, field: FieldSpec, width: int):
        self.field = field
        self.width = width
        self.rows: list[list[Scalar]] = []   # kept reduced, sorted by pivot
        self.pivots: list[int] = []

    def _reduce(self, vec):
        vec = list(vec)
        for row, piv in zip(self.rows, self.pivots):
            c = vec[piv]
            if not c.is_zero():
                vec = [a - c * b for a, b in zip(vec, row)]
        return vec

    def contains(self, vec) -> bool:
        return all(c.is_zero() for c in self._reduce(vec))

    def add(self, vec) -> bool:
        """Insert a vector; returns True if the space grew."""
        vec = self._reduce(vec)
        piv = next((i for i, c in enumerate(vec) if not c.is_zero()), None)
        if piv is None:
            return False
        inv = vec[piv].inverse()
        vec = [inv * c for c in vec]
        # back-substitute into existing rows to keep the reduced form
        for i, row in enumerate(self.rows):
            c = row[piv]
            if not c.is_zero():
                self.rows[i] = [a - c * b for a, b in zip(row, vec)]
        self.rows.append(vec)
        self.pivots.append(piv)
        order = sorted(range(len(self.pivots)), key=self.pivots.__getitem__)
        self.rows = [self.rows[i] for i in order]
        self.pivots = [self.pivots[i] for i in order]
        return True

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return (isinstance(other, ExactRowSpace)
                and self.field == other.field
                and self.width == other.width
                and self.rows == other.rows)


def _to_vector(f: RelElement, basis_pairs):
    return [f.coeffs.get(p, f.field.zero()) for p in basis_pairs]


def brute_force_ideal_span(field: FieldSpec, rel: Relation, generators) -> ExactRowSpace:
    """Smallest subspace containing the generators and closed under left and
    right convolution by every delta pair of R; the oracle for the ideal
    classification. Iterates exact row reduction to a fixed point."""
    _require_free(rel)
    basis_pairs = rel.sorted_pairs()
    space = ExactRowSpace(field, len(basis_pairs))
    frontier = []
    for g in generators:
        if space.add(_to_vector(g, basis_pairs)):
            frontier.append(g)
    deltas = [RelElement.delta(field, rel, x, y) for (x, y) in basis_pairs]
    while frontier:
        new_frontier = []
        for f in frontier:
            for d in deltas:
                for prod in (d * f, f * d):
                    if not prod.is_zero() and space.add(_to_vector(prod, basis_pairs)):
                        new_frontier.append(prod)
        frontier = new_frontier
    return space


def span_of_ideal(field: FieldSpec, ideal: RelIdeal) -> ExactRowSpace:
    """Coefficient space of F0((Z x Z) & R), for comparison with the oracle."""
    basis_pairs = ideal.relation.sorted_pairs()
    space = ExactRowSpace(field, len(basis_pairs))
    for pair in ideal.basis:
        vec = [field.one() if p == pair else field.zero() for p in basis_pairs]
        space.add(vec)
    return space
