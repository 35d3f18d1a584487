"""Group arithmetic for the three supported group kinds.

Cyclic groups Z_n, the integers (Z, +), and arbitrary finite groups given by
a Cayley table. Table groups are checked eagerly: closure, associativity,
identity and inverses are verified at construction, so a bad table never
becomes a latent state.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, StructureError

CYCLIC = "cyclic"
INTEGERS = "integers"
TABLE = "table"


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    order: int | None = None                       # cyclic only
    names: tuple[str, ...] | None = None           # table only
    identity_index: int | None = None              # table only
    table: tuple[tuple[int, ...], ...] | None = None  # table: table[i][j] = index of names[i]*names[j]

    @staticmethod
    def cyclic(n: int) -> "GroupSpec":
        if n < 1:
            raise StructureError("cyclic order must be >= 1")
        return GroupSpec(CYCLIC, order=n)

    @staticmethod
    def integers() -> "GroupSpec":
        return GroupSpec(INTEGERS)

    @staticmethod
    def from_table(names, identity, table) -> "GroupSpec":
        names = tuple(names)
        if len(set(names)) != len(names):
            raise StructureError("duplicate element names in table group")
        if identity not in names:
            raise StructureError("identity %r not among element names" % (identity,))
        n = len(names)
        pos = {name: i for i, name in enumerate(names)}
        rows = []
        for row in table:
            row = tuple(pos[name] if isinstance(name, str) else int(name) for name in row)
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise StructureError("Cayley table row has wrong shape or entries")
            rows.append(row)
        if len(rows) != n:
            raise StructureError("Cayley table must be %d x %d" % (n, n))
        tab = tuple(rows)
        e = pos[identity]
        for i in range(n):
            if tab[e][i] != i or tab[i][e] != i:
                raise StructureError("identity law fails at %r" % (names[i],))
        for i in range(n):
            if e not in tab[i]:
                raise StructureError("%r has no right inverse" % (names[i],))
            j = tab[i].index(e)
            if tab[j][i] != e:
                raise StructureError("%r has no two-sided inverse" % (names[i],))
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if tab[tab[i][j]][k] != tab[i][tab[j][k]]:
                        raise StructureError(
                            "associativity fails at (%r, %r, %r)"
                            % (names[i], names[j], names[k]))
        return GroupSpec(TABLE, names=names, identity_index=e, table=tab)

    def identity(self) -> "GroupElement":
        if self.kind == TABLE:
            return GroupElement(self, self.identity_index)
        return GroupElement(self, 0)

    def element(self, payload: int) -> "GroupElement":
        if self.kind == CYCLIC:
            return GroupElement(self, payload % self.order)
        if self.kind == TABLE and not 0 <= payload < len(self.names):
            raise StructureError("element index out of range")
        return GroupElement(self, payload)

    def elements(self):
        """All elements; finite groups only."""
        if self.kind == CYCLIC:
            return [GroupElement(self, i) for i in range(self.order)]
        if self.kind == TABLE:
            return [GroupElement(self, i) for i in range(len(self.names))]
        raise PreconditionError("the integers group is infinite")

    def parse(self, text: str) -> "GroupElement":
        if self.kind == TABLE:
            if text not in self.names:
                raise StructureError("unknown group element %r" % (text,))
            return GroupElement(self, self.names.index(text))
        try:
            return self.element(int(text))
        except ValueError as exc:
            raise StructureError("bad group element literal %r" % (text,)) from exc


@dataclass(frozen=True)
class GroupElement:
    spec: GroupSpec
    payload: int

    def _check(self, other: "GroupElement"):
        if self.spec != other.spec:
            raise PreconditionError("group elements from different groups")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        if self.spec.kind == CYCLIC:
            return GroupElement(self.spec, (self.payload + other.payload) % self.spec.order)
        if self.spec.kind == INTEGERS:
            return GroupElement(self.spec, self.payload + other.payload)
        return GroupElement(self.spec, self.spec.table[self.payload][other.payload])

    def inverse(self) -> "GroupElement":
        if self.spec.kind == CYCLIC:
            return GroupElement(self.spec, (-self.payload) % self.spec.order)
        if self.spec.kind == INTEGERS:
            return GroupElement(self.spec, -self.payload)
        return GroupElement(self.spec, self.spec.table[self.payload].index(self.spec.identity_index))

    def is_identity(self) -> bool:
        return self == self.spec.identity()

    def sort_key(self):
        """Identity first, then encoding order; total and deterministic."""
        return (0 if self.is_identity() else 1, self.payload)

    def __str__(self) -> str:
        if self.spec.kind == TABLE:
            return self.spec.names[self.payload]
        return str(self.payload)

    def __repr__(self) -> str:
        return "GroupElement(%s)" % self
