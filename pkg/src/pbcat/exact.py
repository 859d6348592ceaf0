"""Short exact sequences, 3x3 grid completion, and the two Noether
isomorphism theorems.

Quotients are canonical here: the quotient of X by a subset X1 is the
literal set difference X - X1, and the quotient arrow is the corestricted
partial identity.  That makes every construction below emit a concrete,
comparable value, and turns both Noether theorems into set identities that
are checked element-wise alongside the categorical construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .baer import cokernel, kernel
from .core import (
    FinSet,
    InternalContradictionError,
    InvalidSubsetError,
    ObjectMismatchError,
    PBij,
    classify,
    compose,
    identity,
    inverse,
    partial_identity,
    zero_morphism,
)


class DiagramInvalidError(ValueError):
    """A sequence or grid violates exactness/commutativity; names the culprit."""


@dataclass(frozen=True)
class ShortExactSeq:
    """0 -> U --alpha--> V --beta--> W -> 0, validated on construction.

    alpha must be mono, beta epi, and alpha a kernel of beta: beta kills
    alpha and the image of alpha is exactly the complement of dom(beta).
    """

    U: FinSet
    V: FinSet
    W: FinSet
    alpha: PBij
    beta: PBij

    def __post_init__(self):
        if self.alpha.source != self.U or self.alpha.target != self.V:
            raise DiagramInvalidError("alpha does not run U -> V")
        if self.beta.source != self.V or self.beta.target != self.W:
            raise DiagramInvalidError("beta does not run V -> W")
        if not classify(self.alpha).is_mono:
            raise DiagramInvalidError("alpha is not a monomorphism")
        if not classify(self.beta).is_epi:
            raise DiagramInvalidError("beta is not an epimorphism")
        if not compose(self.beta, self.alpha).is_zero:
            raise DiagramInvalidError("beta∘alpha is not the zero morphism")
        if frozenset(self.alpha.im) != frozenset(self.V.difference(self.beta.dom)):
            raise DiagramInvalidError(
                "alpha is not a kernel of beta: im(alpha) differs from the "
                "complement of dom(beta)")

    @classmethod
    def from_arrows(cls, alpha: PBij, beta: PBij) -> "ShortExactSeq":
        return cls(alpha.source, alpha.target, beta.target, alpha, beta)


def make_ses(X: FinSet, X1: Iterable[str]) -> ShortExactSeq:
    """The canonical sequence 0 -> X1 -> X -> X - X1 -> 0 for X1 ⊆ X."""
    keep = frozenset(X1)
    if not keep <= X._as_set:
        stray = sorted(keep - X._as_set)
        raise InvalidSubsetError(f"{stray!r} not contained in {list(X.elements)!r}")
    U = X.intersection(keep)
    W = X.difference(keep)
    alpha = PBij(U, X, ((u, u) for u in U))
    beta = PBij(X, W, ((w, w) for w in W))
    return ShortExactSeq(U=U, V=X, W=W, alpha=alpha, beta=beta)


def is_kernel_of(alpha: PBij, beta: PBij) -> bool:
    """True iff alpha is a mono that beta kills, hitting exactly the
    complement of dom(beta)."""
    if alpha.target != beta.source:
        raise ObjectMismatchError("alpha.target must equal beta.source")
    if not classify(alpha).is_mono:
        return False
    if not compose(beta, alpha).is_zero:
        return False
    return frozenset(alpha.im) == frozenset(beta.source.difference(beta.dom))


@dataclass(frozen=True)
class Grid3x3:
    """Nine objects with row and column arrows; bottom-row arrows optional.

    ``objects[r][c]`` is the object at row r, column c (0-based).
    ``row_arrows[r]`` holds the two arrows of row r, left-to-right;
    ``row_arrows[2]`` may be None for a grid awaiting completion.
    ``col_arrows[s][c]`` is the column-c arrow from row s to row s+1.
    Construction only checks shape; :meth:`validate` checks the math.
    """

    objects: tuple[tuple[FinSet, FinSet, FinSet], ...]
    row_arrows: tuple[tuple[PBij, PBij] | None, ...]
    col_arrows: tuple[tuple[PBij, PBij, PBij], ...]

    def __post_init__(self):
        objects = tuple(tuple(row) for row in self.objects)
        rows = tuple(tuple(r) if r is not None else None for r in self.row_arrows)
        cols = tuple(tuple(c) for c in self.col_arrows)
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "row_arrows", rows)
        object.__setattr__(self, "col_arrows", cols)
        if len(objects) != 3 or any(len(r) != 3 for r in objects):
            raise DiagramInvalidError("grid needs a 3x3 array of objects")
        if len(rows) != 3 or any(r is not None and len(r) != 2 for r in rows):
            raise DiagramInvalidError("grid needs 3 rows of 2 arrows each")
        if rows[0] is None or rows[1] is None:
            raise DiagramInvalidError("rows 1 and 2 must carry their arrows")
        if len(cols) != 2 or any(len(c) != 3 for c in cols):
            raise DiagramInvalidError("grid needs 2 levels of 3 column arrows")

    @property
    def has_bottom_row(self) -> bool:
        return self.row_arrows[2] is not None

    def with_bottom_row(self, phi: PBij, psi: PBij) -> "Grid3x3":
        return Grid3x3(self.objects, (self.row_arrows[0], self.row_arrows[1], (phi, psi)),
                       self.col_arrows)

    def validate(self) -> None:
        """Check endpoints, commuting squares, and exactness of the rows and
        columns that are present; raises naming the failing piece."""
        for r, arrows in enumerate(self.row_arrows):
            if arrows is None:
                continue
            for c, arrow in enumerate(arrows):
                if arrow.source != self.objects[r][c] or arrow.target != self.objects[r][c + 1]:
                    raise DiagramInvalidError(
                        f"row {r + 1} arrow {c + 1} does not match its endpoint objects")
        for s, level in enumerate(self.col_arrows):
            for c, arrow in enumerate(level):
                if arrow.source != self.objects[s][c] or arrow.target != self.objects[s + 1][c]:
                    raise DiagramInvalidError(
                        f"column {c + 1} arrow {s + 1} does not match its endpoint objects")
        for s in range(2):
            upper = self.row_arrows[s]
            lower = self.row_arrows[s + 1]
            if upper is None or lower is None:
                continue
            for c in range(2):
                left = self.col_arrows[s][c]
                right = self.col_arrows[s][c + 1]
                if compose(right, upper[c]) != compose(lower[c], left):
                    raise DiagramInvalidError(
                        f"square at rows {s + 1}-{s + 2}, columns {c + 1}-{c + 2} "
                        f"does not commute")
        for r in range(3):
            arrows = self.row_arrows[r]
            if arrows is None:
                continue
            try:
                ShortExactSeq.from_arrows(arrows[0], arrows[1])
            except DiagramInvalidError as exc:
                raise DiagramInvalidError(f"row {r + 1} is not exact: {exc}") from None
        for c in range(3):
            try:
                ShortExactSeq.from_arrows(self.col_arrows[0][c], self.col_arrows[1][c])
            except DiagramInvalidError as exc:
                raise DiagramInvalidError(f"column {c + 1} is not exact: {exc}") from None


def complete_3x3(grid: Grid3x3) -> tuple[PBij, PBij]:
    """Fill in the bottom row of a validated grid.

    The middle-row arrows are conjugated down through the (invertible)
    column arrows: phi = c∘f∘c'⁻¹ and psi = c''∘g∘c⁻¹ with f, g the middle
    row and c', c, c'' the lower column arrows.  The completion is then
    re-validated as part of the full grid rather than trusted.
    """
    grid.validate()
    f_mid, g_mid = grid.row_arrows[1]
    c_left, c_mid, c_right = grid.col_arrows[1]
    phi = compose(c_mid, compose(f_mid, inverse(c_left)))
    psi = compose(c_right, compose(g_mid, inverse(c_mid)))
    completed = grid.with_bottom_row(phi, psi)
    completed.validate()
    return phi, psi


def build_noether_grid(X: FinSet, X1: Iterable[str], X2: Iterable[str]) -> Grid3x3:
    """The grid whose completion proves the first Noether theorem:
    top row X1 = X1 -> ∅, middle row X2 -> X -> X-X2, columns the three
    canonical quotient sequences.  Requires X1 ⊆ X2 ⊆ X."""
    ones = frozenset(X1)
    twos = frozenset(X2)
    if not twos <= X._as_set:
        raise InvalidSubsetError("X2 must be a subset of X")
    if not ones <= twos:
        raise InvalidSubsetError("X1 must be a subset of X2")
    x1 = X.intersection(ones)
    x2 = X.intersection(twos)
    empty = FinSet()

    middle = make_ses(X, x2)
    col_left = make_ses(x2, x1)
    col_mid = make_ses(X, x1)
    col_right = make_ses(middle.W, empty)

    objects = (
        (x1, x1, empty),
        (x2, X, middle.W),
        (col_left.W, col_mid.W, col_right.W),
    )
    row_arrows = (
        (identity(x1), zero_morphism(x1, empty)),
        (middle.alpha, middle.beta),
        None,
    )
    col_arrows = (
        (col_left.alpha, col_mid.alpha, col_right.alpha),
        (col_left.beta, col_mid.beta, col_right.beta),
    )
    return Grid3x3(objects=objects, row_arrows=row_arrows, col_arrows=col_arrows)


def noether_first(X: FinSet, X1: Iterable[str], X2: Iterable[str]) -> PBij:
    """(X-X1)-(X2-X1) equals X-X2, both as sets and via the grid completion.

    The completed bottom row is 0 -> X2-X1 -> X-X1 -> X-X2 -> 0; composing
    its epi with the inverse of the canonical quotient of its mono yields
    the isomorphism, which must be the identity relation on X-X2.
    """
    ones = frozenset(X1)
    twos = frozenset(X2)
    if not twos <= X._as_set:
        raise InvalidSubsetError("X2 must be a subset of X")
    if not ones <= twos:
        raise InvalidSubsetError("X1 must be a subset of X2")
    x1 = X.intersection(ones)
    x2 = X.intersection(twos)
    lhs = X.difference(x1).difference(x2.difference(x1))
    rhs = X.difference(x2)
    if lhs != rhs:
        raise InternalContradictionError(
            f"first quotient identity failed: {lhs!r} vs {rhs!r}")

    grid = build_noether_grid(X, x1, x2)
    phi, psi = complete_3x3(grid)
    quotient = cokernel(phi).arrow
    iso = compose(psi, inverse(quotient))
    if not classify(iso).is_iso or any(x != y for x, y in iso.graph):
        raise InternalContradictionError(
            f"grid route disagrees with the set identity: {iso!r}")
    return iso


def noether_second(X: FinSet, X1: Iterable[str], X2: Iterable[str]) -> PBij:
    """X2-(X1∩X2) equals (X1∪X2)-X1, both as sets and categorically.

    The categorical route restricts the quotient (X1∪X2) -> (X1∪X2)-X1 to
    X2; that composite is an epi whose kernel is X1∩X2, and dividing it by
    the canonical quotient of that kernel gives the isomorphism.
    """
    ones = frozenset(X1)
    twos = frozenset(X2)
    if not ones <= X._as_set:
        raise InvalidSubsetError("X1 must be a subset of X")
    if not twos <= X._as_set:
        raise InvalidSubsetError("X2 must be a subset of X")
    x1 = X.intersection(ones)
    x2 = X.intersection(twos)
    lhs = x2.difference(x1.intersection(x2))
    rhs = x1.union(x2).difference(x1)
    if lhs != rhs:
        raise InternalContradictionError(
            f"second quotient identity failed: {lhs!r} vs {rhs!r}")

    both = x1.union(x2)
    include = PBij(x2, both, ((x, x) for x in x2))
    gamma = compose(make_ses(both, x1).beta, include)
    ker = kernel(gamma)
    if frozenset(ker.object.elements) != frozenset(x1.intersection(x2).elements):
        raise InternalContradictionError("kernel of the restricted quotient is not X1∩X2")
    quotient = cokernel(ker.arrow).arrow
    iso = compose(gamma, inverse(quotient))
    if not classify(iso).is_iso or any(x != y for x, y in iso.graph):
        raise InternalContradictionError(
            f"categorical route disagrees with the set identity: {iso!r}")
    return iso
