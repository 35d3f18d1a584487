"""Partial actions of a group on a finite set.

A partial action assigns to each group element t a subset X_t of the carrier
and a bijection h_t from X_{t^-1} onto X_t, subject to three axioms:

  (1) X_e is the whole carrier and h_e is the identity;
  (2) h_t(X_{t^-1} & X_s) = X_t & X_{ts};
  (3) h_t(h_s(x)) = h_{ts}(x) for x in X_{s^-1} & X_{s^-1 t^-1}.

Axiom (1) is unforgeable here: h_e is implicit and always the full identity.
The stored entry for t is h_t, given as pairs (x, h_t(x)); an inverse entry
h_{t^-1} is synthesized when missing. Unlisted group elements have empty X_t.

From a validated action we build the equivalence relation R of pairs
(x, h_t(x)), each pair carrying its group witnesses. For free actions the
witness is unique, which is what the relation-algebra layer relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError, StructureError
from .groups import INTEGERS, GroupElement, GroupSpec


class PartialAction:
    """Group, ordered finite carrier, and the family of partial bijections."""

    def __init__(self, group: GroupSpec, carrier, maps):
        """maps: {GroupElement t: {x label: h_t(x) label}}; e may be omitted."""
        self.group = group
        self.carrier = tuple(carrier)
        if len(set(self.carrier)) != len(self.carrier):
            raise StructureError("duplicate labels in carrier")
        self._index = {x: i for i, x in enumerate(self.carrier)}

        e = group.identity()
        normalized: dict[GroupElement, dict[str, str]] = {}
        for t, pairs in maps.items():
            if t.spec != group:
                raise StructureError("map keyed by element of a different group")
            pairs = dict(pairs)
            for x, y in pairs.items():
                if x not in self._index or y not in self._index:
                    raise StructureError("pair (%s, %s) leaves the carrier" % (x, y))
            if len(set(pairs.values())) != len(pairs):
                raise StructureError("h_%s is not injective" % t)
            if t == e:
                if pairs != {x: x for x in self.carrier}:
                    raise StructureError("h_e must be the identity on the whole carrier")
                continue
            if pairs:
                normalized[t] = pairs
        # Synthesize missing inverse entries; explicit ones are kept as given
        # so the validator can catch inconsistent documents.
        for t in list(normalized):
            ti = t.inverse()
            if ti not in normalized:
                normalized[ti] = {y: x for x, y in normalized[t].items()}
        self.maps = normalized

    @property
    def identity(self) -> GroupElement:
        return self.group.identity()

    def listed(self):
        """Non-identity elements with nonempty maps, in deterministic order."""
        return sorted(self.maps, key=GroupElement.sort_key)

    def subset(self, t: GroupElement):
        """X_t, the codomain of h_t, as a set of labels."""
        if t == self.identity:
            return set(self.carrier)
        entry = self.maps.get(t)
        return set(entry.values()) if entry else set()

    def apply(self, t: GroupElement, x: str) -> str:
        """h_t(x); x must lie in the domain X_{t^-1}."""
        if t == self.identity:
            if x not in self._index:
                raise PreconditionError("%s is not a carrier point" % x)
            return x
        entry = self.maps.get(t)
        if entry is None or x not in entry:
            raise PreconditionError("%s is not in the domain of h_%s" % (x, t))
        return entry[x]

    def index(self, x: str) -> int:
        return self._index[x]

    def sort_labels(self, labels):
        return sorted(labels, key=self._index.__getitem__)

    def check_elements(self):
        """Group elements over which the axioms are verified.

        Finite groups: everything. Integers: the closure set
        {t^-1 u : t, u in S+{e}} + S + {e} over the listed elements S,
        outside of which every X_t is empty.
        """
        if self.group.kind == INTEGERS:
            base = set(self.maps) | {self.identity}
            closure = {t.inverse() * u for t in base for u in base}
            return sorted(closure | base, key=GroupElement.sort_key)
        return sorted(self.group.elements(), key=GroupElement.sort_key)

    def __eq__(self, other):
        return (isinstance(other, PartialAction)
                and self.group == other.group
                and self.carrier == other.carrier
                and self.maps == other.maps)

    def __repr__(self):
        return "PartialAction(%s points, %d maps)" % (len(self.carrier), len(self.maps))


@dataclass(frozen=True)
class Violation:
    axiom: str           # "domain", "2" or "3"
    t: GroupElement
    s: GroupElement | None
    witness: str

    def render(self) -> str:
        at = "t=%s" % self.t if self.s is None else "(t,s)=(%s,%s)" % (self.t, self.s)
        return "axiom %s at %s: %s" % (self.axiom, at, self.witness)


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> list[str]:
        return [v.render() for v in self.violations]


def validate_partial_action(pa: PartialAction) -> ValidationReport:
    """Check axioms (2) and (3) over the relevant elements; (1) is structural."""
    report = ValidationReport()
    elems = pa.check_elements()

    # Coherence of the stored family: the domain of h_t must be X_{t^-1}.
    coherent = True
    for t in pa.listed():
        dom = set(pa.maps[t])
        expected = pa.subset(t.inverse())
        if dom != expected:
            diff = pa.sort_labels(dom ^ expected)
            report.violations.append(Violation(
                "domain", t, None,
                "domain of h_%s is %s but X_%s is %s (differ at {%s})"
                % (t, sorted(dom), t.inverse(), sorted(expected), ",".join(diff))))
            coherent = False
    if not coherent:
        return report

    for t in elems:
        x_t = pa.subset(t)
        x_tinv = pa.subset(t.inverse())
        for s in elems:
            x_s = pa.subset(s)
            ts = t * s
            # (2) h_t(X_{t^-1} & X_s) = X_t & X_{ts}
            lhs = {pa.apply(t, x) for x in x_tinv & x_s}
            rhs = x_t & pa.subset(ts)
            if lhs != rhs:
                report.violations.append(Violation(
                    "2", t, s,
                    "h_t(X_{t^-1} & X_s) = {%s} but X_t & X_{ts} = {%s}"
                    % (",".join(pa.sort_labels(lhs)), ",".join(pa.sort_labels(rhs)))))
            # (3) h_t(h_s(x)) = h_{ts}(x) on X_{s^-1} & X_{(ts)^-1}
            for x in pa.sort_labels(pa.subset(s.inverse()) & pa.subset(ts.inverse())):
                y = pa.apply(s, x)
                if y not in pa.subset(t.inverse()):
                    report.violations.append(Violation(
                        "3", t, s, "h_s(%s)=%s escapes the domain of h_t" % (x, y)))
                    continue
                if pa.apply(t, y) != pa.apply(ts, x):
                    report.violations.append(Violation(
                        "3", t, s,
                        "h_t(h_s(%s))=%s but h_{ts}(%s)=%s"
                        % (x, pa.apply(t, y), x, pa.apply(ts, x))))
    return report


@dataclass(frozen=True)
class FreenessReport:
    free: bool
    counterexample: tuple[GroupElement, str] | None = None


def check_free(pa: PartialAction) -> FreenessReport:
    """Free means h_t(x) = x forces t = e."""
    for t in pa.listed():
        for x, y in sorted(pa.maps[t].items(), key=lambda p: pa.index(p[0])):
            if x == y:
                return FreenessReport(False, (t, x))
    return FreenessReport(True)


class Relation:
    """The equivalence relation R = {(x, h_t(x))} with per-pair witnesses."""

    def __init__(self, carrier, pairs, action: PartialAction | None = None):
        """pairs: {(x, y): iterable of GroupElement witnesses}."""
        self.carrier = tuple(carrier)
        self._index = {x: i for i, x in enumerate(self.carrier)}
        self.action = action
        self.pairs = {
            key: tuple(sorted(set(wits), key=GroupElement.sort_key))
            for key, wits in pairs.items()
        }

    def __contains__(self, pair):
        return pair in self.pairs

    def index(self, x: str) -> int:
        return self._index[x]

    def sorted_pairs(self):
        return sorted(self.pairs, key=lambda p: (self._index[p[0]], self._index[p[1]]))

    def witnesses(self, x: str, y: str):
        return self.pairs.get((x, y), ())

    def is_free(self) -> bool:
        return all(len(w) == 1 for w in self.pairs.values())

    def __eq__(self, other):
        return (isinstance(other, Relation)
                and self.carrier == other.carrier
                and self.pairs == other.pairs)

    def __repr__(self):
        return "Relation(%d pairs on %d points)" % (len(self.pairs), len(self.carrier))


def build_relation(pa: PartialAction) -> Relation:
    """All pairs (x, h_t(x)) over listed t, plus the diagonal with witness e."""
    pairs: dict[tuple[str, str], list[GroupElement]] = {}
    for x in pa.carrier:
        pairs[(x, x)] = [pa.identity]
    for t in pa.listed():
        for x in pa.sort_labels(pa.maps[t]):
            pairs.setdefault((x, pa.maps[t][x]), []).append(t)
    return Relation(pa.carrier, pairs, action=pa)


def verify_equivalence(rel: Relation) -> bool:
    """Reflexive, symmetric and transitive on the (x, y) projection.

    When the underlying action is free this also re-checks that the witness
    of a composite pair is the product of the witnesses, i.e. the argument
    that transitivity follows from axiom (3).
    """
    for x in rel.carrier:
        if (x, x) not in rel.pairs:
            return False
    for (x, y) in rel.pairs:
        if (y, x) not in rel.pairs:
            return False
    check_witnesses = rel.action is not None and rel.is_free()
    for (x, y) in rel.pairs:
        for (y2, z) in rel.pairs:
            if y2 != y:
                continue
            if (x, z) not in rel.pairs:
                return False
            if check_witnesses:
                (t,) = rel.witnesses(x, y)
                (s,) = rel.witnesses(y, z)
                if rel.witnesses(x, z) != (s * t,):
                    return False
    return True


def equivalence_classes(rel: Relation) -> list[list[str]]:
    """R-classes as lists in carrier order, ordered by least member."""
    if not verify_equivalence(rel):
        raise PreconditionError("relation is not an equivalence relation")
    seen: set[str] = set()
    classes = []
    for x in rel.carrier:
        if x in seen:
            continue
        block = [y for y in rel.carrier if (x, y) in rel.pairs]
        seen.update(block)
        classes.append(block)
    return classes


def invariant_closure(rel: Relation, subset) -> list[str]:
    """Least R-invariant superset: union of classes meeting the subset."""
    subset = set(subset)
    for x in subset:
        if x not in rel._index:
            raise PreconditionError("%s is not a carrier point" % x)
    members = {y for x in subset for y in rel.carrier if (x, y) in rel.pairs}
    return [x for x in rel.carrier if x in members]


def enumerate_invariant_subsets(rel: Relation) -> list[list[str]]:
    """All 2^k unions of classes, in subset order on class index sets."""
    classes = equivalence_classes(rel)
    out = []
    for mask in range(1 << len(classes)):
        members = {x for i, block in enumerate(classes) if mask >> i & 1 for x in block}
        out.append([x for x in rel.carrier if x in members])
    return out


def is_invariant(rel: Relation, subset) -> bool:
    subset = set(subset)
    return all(y in subset for (z, y) in rel.pairs if z in subset)


def witness(rel: Relation, x: str, y: str) -> GroupElement:
    """The unique t with h_t(x) = y; free actions only."""
    wits = rel.witnesses(x, y)
    if not wits:
        raise PreconditionError("(%s, %s) is not in R" % (x, y))
    if len(wits) > 1 or not rel.is_free():
        raise PreconditionError("witness is ambiguous: the action is not free")
    return wits[0]
