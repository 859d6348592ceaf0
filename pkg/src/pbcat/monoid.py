"""Symmetric inverse monoids, Cayley-table axiom checks, and the
Wagner-Preston embedding of a finite inverse semigroup into the partial
bijections of its own carrier set."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .core import (
    FinSet,
    InternalContradictionError,
    ObjectMismatchError,
    PBij,
    compose,
    enumerate_pbij,
    partial_identity,
)


class TableShapeError(ValueError):
    """Malformed multiplication table (wrong shape or out-of-range indices)."""


class NotInverseSemigroupError(ValueError):
    """The table fails the inverse-semigroup axioms; carries the report."""

    def __init__(self, report: "AxiomReport"):
        self.report = report
        failing = [name for name, ok in [
            ("associative", report.associative),
            ("regular", report.regular),
            ("idempotents-commute", report.idempotents_commute),
            ("unique-inverses", report.inverses_unique),
        ] if not ok]
        super().__init__(f"not an inverse semigroup: {', '.join(failing)} failed")


@dataclass(frozen=True)
class CayleyTable:
    """A finite magma: ordered element names plus an index-valued product table.

    Nothing algebraic is assumed; associativity and the rest are checked by
    :func:`verify_inverse_semigroup`.  ``product[i][j]`` is the index of
    ``elements[i] * elements[j]``.
    """

    elements: tuple[str, ...]
    product: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        elems = tuple(self.elements)
        table = tuple(tuple(row) for row in self.product)
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "product", table)
        n = len(elems)
        if len(set(elems)) != n:
            raise TableShapeError(f"duplicate element names in {elems!r}")
        if len(table) != n:
            raise TableShapeError(f"expected {n} rows, got {len(table)}")
        for i, row in enumerate(table):
            if len(row) != n:
                raise TableShapeError(f"row {i} has {len(row)} entries, expected {n}")
            for j, p in enumerate(row):
                if not isinstance(p, int) or not 0 <= p < n:
                    raise TableShapeError(f"entry ({i},{j}) = {p!r} is not a valid index")

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        return self.elements.index(name)

    def mul_index(self, i: int, j: int) -> int:
        return self.product[i][j]

    def mul(self, a: str, b: str) -> str:
        return self.elements[self.product[self.index(a)][self.index(b)]]

    @classmethod
    def from_operation(cls, elements: Sequence[str],
                       op: Callable[[str, str], str]) -> "CayleyTable":
        elems = tuple(elements)
        pos = {e: i for i, e in enumerate(elems)}
        table = tuple(tuple(pos[op(a, b)] for b in elems) for a in elems)
        return cls(elems, table)


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of the inverse-semigroup axiom sweep over a table.

    Every false flag is backed by at least one witness tuple in
    ``counterexamples``; ``inverse_map`` is present exactly when each
    element has one and only one generalized inverse.
    """

    associative: bool
    regular: bool
    idempotents_commute: bool
    inverses_unique: bool
    inverse_map: dict[str, str] | None = None
    counterexamples: tuple[tuple[str, ...], ...] = field(default=())


def verify_inverse_semigroup(table: CayleyTable) -> AxiomReport:
    """Check associativity, regularity, commuting idempotents, and inverse
    uniqueness by exhausting the table.

    Products in words like aba are taken left to right, which only matters
    while associativity is still in question.  If the table is associative
    and regular with commuting idempotents, unique inverses are forced; a
    table contradicting that is reported as an internal error rather than
    returned.
    """
    n = len(table)
    mul = table.mul_index
    name = table.elements
    witnesses: list[tuple[str, ...]] = []

    associative = True
    for i in range(n):
        for j in range(n):
            ij = mul(i, j)
            for k in range(n):
                if mul(ij, k) != mul(i, mul(j, k)):
                    associative = False
                    witnesses.append(("associativity", name[i], name[j], name[k]))

    def quasi_inverses(a: int) -> list[int]:
        return [b for b in range(n)
                if mul(mul(a, b), a) == a and mul(mul(b, a), b) == b]

    regular = True
    inverses_unique = True
    inverse_map: dict[str, str] = {}
    for a in range(n):
        invs = quasi_inverses(a)
        if not invs:
            regular = False
            inverses_unique = False
            witnesses.append(("regularity", name[a]))
        elif len(invs) > 1:
            inverses_unique = False
            witnesses.append(("unique-inverse", name[a], name[invs[0]], name[invs[1]]))
        else:
            inverse_map[name[a]] = name[invs[0]]

    idempotents = [i for i in range(n) if mul(i, i) == i]
    idempotents_commute = True
    for pos, e in enumerate(idempotents):
        for f in idempotents[pos + 1:]:
            if mul(e, f) != mul(f, e):
                idempotents_commute = False
                witnesses.append(("commuting-idempotents", name[e], name[f]))

    if associative and regular and idempotents_commute and not inverses_unique:
        raise InternalContradictionError(
            "regular + commuting idempotents must force unique inverses; "
            f"table over {list(name)} violates this")

    return AxiomReport(
        associative=associative,
        regular=regular,
        idempotents_commute=idempotents_commute,
        inverses_unique=inverses_unique,
        inverse_map=inverse_map if inverses_unique else None,
        counterexamples=tuple(witnesses),
    )


def symmetric_inverse_monoid(X: FinSet) -> list[PBij]:
    """All partial bijections X -> X, i.e. the symmetric inverse monoid I(X)."""
    return list(enumerate_pbij(X, X))


def idempotents_of(X: FinSet) -> list[PBij]:
    """The idempotents of I(X): exactly the partial identities, one per subset."""
    return [partial_identity(X, A) for A in X.subsets()]


def unique_inverse_check(elements: Sequence[PBij]) -> bool:
    """True iff each given endomorphism has exactly one generalized inverse
    within the full symmetric inverse monoid on its object."""
    elems = list(elements)
    if not elems:
        return True
    X = elems[0].source
    for f in elems:
        if f.source != X or f.target != X:
            raise ObjectMismatchError("all elements must live on one object X -> X")
    ambient = symmetric_inverse_monoid(X)
    for a in elems:
        found = [b for b in ambient
                 if compose(compose(a, b), a) == a and compose(compose(b, a), b) == b]
        if len(found) != 1:
            return False
    return True


def wagner_preston(table: CayleyTable) -> dict[str, PBij]:
    """Embed an inverse semigroup into the partial bijections of its carrier.

    Element a becomes the left translation x -> a*x restricted to a⁻¹S,
    which maps bijectively onto aS.  The result is an injective homomorphism
    for the apply-right-first composition used throughout; both properties
    are re-verified here on the constructed maps.
    """
    report = verify_inverse_semigroup(table)
    if not report.inverses_unique:
        raise NotInverseSemigroupError(report)
    assert report.inverse_map is not None
    carrier = FinSet(table.elements)
    theta: dict[str, PBij] = {}
    for a in table.elements:
        a_inv = report.inverse_map[a]
        dom = {table.mul(a_inv, s) for s in table.elements}
        pairs = [(x, table.mul(a, x)) for x in carrier if x in dom]
        theta[a] = PBij(carrier, carrier, pairs)

    for a in table.elements:
        for b in table.elements:
            if theta[table.mul(a, b)] != compose(theta[a], theta[b]):
                raise InternalContradictionError(
                    f"translation maps fail the homomorphism law at ({a}, {b})")
    if len(set(theta.values())) != len(table.elements):
        raise InternalContradictionError("translation maps are not injective")
    return theta
