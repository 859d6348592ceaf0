"""Finite sets and partial bijections.

A partial bijection f : X -> Y is an injective function from a subset of X
(its domain ``dom``) onto a subset of Y (its image ``im``).  Finite sets and
partial bijections form a category: objects are :class:`FinSet` values,
morphisms are :class:`PBij` values, composition applies the right factor
first, and every Hom(X, Y) contains the empty morphism 0.

Everything here is an immutable value; operations are pure functions.  The
enumeration helpers are the backbone of the exhaustive law checks in the
rest of the package, so iteration order is deterministic throughout: a
FinSet iterates in declaration order and enumerators respect it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator


class ObjectMismatchError(ValueError):
    """Two morphisms/objects that have to agree (e.g. for composition) do not."""


class InvalidSubsetError(ValueError):
    """A claimed subset contains elements outside its ambient set."""


class InternalContradictionError(RuntimeError):
    """A law the constructions guarantee came out false; indicates a bug."""


class FinSet:
    """A finite set of opaque string tokens with a fixed iteration order.

    Equality and hashing ignore order (a set is its elements); iteration,
    enumeration, and serialization use declaration order so that results
    are reproducible.
    """

    __slots__ = ("elements", "_as_set")

    def __init__(self, elements: Iterable[str] = ()):
        elems = tuple(elements)
        for e in elems:
            if not isinstance(e, str):
                raise TypeError(f"element tokens must be strings, got {e!r}")
        as_set = frozenset(elems)
        if len(as_set) != len(elems):
            raise ValueError(f"duplicate element tokens in {elems!r}")
        self.elements = elems
        self._as_set = as_set

    @classmethod
    def from_tokens(cls, text: str) -> "FinSet":
        """Build a FinSet from whitespace-separated tokens, e.g. ``"a b c"``."""
        return cls(text.split())

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, token: object) -> bool:
        return token in self._as_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinSet):
            return NotImplemented
        return self._as_set == other._as_set

    def __hash__(self) -> int:
        return hash(self._as_set)

    def __repr__(self) -> str:
        return f"FinSet({list(self.elements)!r})"

    def issubset(self, other: "FinSet") -> bool:
        return self._as_set <= other._as_set

    def intersection(self, other: Iterable[str]) -> "FinSet":
        keep = frozenset(other)
        return FinSet(e for e in self.elements if e in keep)

    def difference(self, other: Iterable[str]) -> "FinSet":
        drop = frozenset(other)
        return FinSet(e for e in self.elements if e not in drop)

    def union(self, other: "FinSet") -> "FinSet":
        extra = tuple(e for e in other if e not in self._as_set)
        return FinSet(self.elements + extra)

    def subsets(self) -> Iterator["FinSet"]:
        """All subsets, by size and then by position (deterministic)."""
        for k in range(len(self.elements) + 1):
            for combo in itertools.combinations(self.elements, k):
                yield FinSet(combo)


class PBij:
    """A partial bijection between two finite sets, given by its graph.

    ``graph`` is a set of (x, y) pairs with each x drawn from ``source`` at
    most once and each y drawn from ``target`` at most once.  Two morphisms
    are equal iff source, target, and graph all agree; Hom-sets over
    distinct object pairs are therefore disjoint.
    """

    __slots__ = ("source", "target", "graph", "dom", "im", "_map")

    def __init__(self, source: FinSet, target: FinSet,
                 pairs: Iterable[tuple[str, str]] = ()):
        graph = frozenset((x, y) for x, y in pairs)
        fwd: dict[str, str] = {}
        seen_y = set()
        for x, y in graph:
            if x not in source:
                raise ValueError(f"{x!r} is not in the source set")
            if y not in target:
                raise ValueError(f"{y!r} is not in the target set")
            if x in fwd:
                raise ValueError(f"{x!r} is mapped twice; not functional")
            if y in seen_y:
                raise ValueError(f"{y!r} is hit twice; not injective")
            fwd[x] = y
            seen_y.add(y)
        self.source = source
        self.target = target
        self.graph = graph
        self._map = fwd
        self.dom = tuple(x for x in source if x in fwd)
        self.im = tuple(y for y in target if y in seen_y)

    def __call__(self, x: str) -> str:
        """Apply to ``x``; raises KeyError outside the domain."""
        return self._map[x]

    def get(self, x: str, default: str | None = None) -> str | None:
        return self._map.get(x, default)

    def items(self) -> Iterator[tuple[str, str]]:
        """Graph pairs in source declaration order."""
        return ((x, self._map[x]) for x in self.dom)

    @property
    def is_zero(self) -> bool:
        return not self.graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PBij):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.graph == other.graph)

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.graph))

    def __mul__(self, other: "PBij") -> "PBij":
        # g * f is g after f, like g(f(x))
        return compose(self, other)

    def __invert__(self) -> "PBij":
        return inverse(self)

    def __repr__(self) -> str:
        pairs = ", ".join(f"{x}->{y}" for x, y in self.items())
        src = " ".join(self.source.elements)
        tgt = " ".join(self.target.elements)
        return f"PBij({src} -> {tgt}: {pairs})"


@dataclass(frozen=True)
class Classification:
    """Morphism flags; the idempotency flags need an endomorphism."""
    is_mono: bool
    is_epi: bool
    is_iso: bool
    is_idempotent: bool
    is_partial_identity: bool
    note: str | None = None


def compose(g: PBij, f: PBij) -> PBij:
    """g after f: graph {(x, g(f(x)))} over the x with f(x) in dom(g).

    If the image of f misses the domain of g entirely, the result is the
    zero morphism.
    """
    if f.target != g.source:
        raise ObjectMismatchError(
            f"cannot compose: intermediate objects differ "
            f"({list(f.target.elements)} vs {list(g.source.elements)})")
    pairs = []
    for x, fx in f.items():
        gy = g.get(fx)
        if gy is not None:
            pairs.append((x, gy))
    return PBij(f.source, g.target, pairs)


def inverse(f: PBij) -> PBij:
    """Transpose the graph; dom and im trade places."""
    return PBij(f.target, f.source, ((y, x) for x, y in f.graph))


def partial_identity(X: FinSet, A: Iterable[str]) -> PBij:
    """The identity on A viewed as a morphism X -> X; requires A ⊆ X."""
    keep = frozenset(A)
    if not keep <= X._as_set:
        stray = sorted(keep - X._as_set)
        raise InvalidSubsetError(f"{stray!r} not contained in {list(X.elements)!r}")
    return PBij(X, X, ((a, a) for a in X if a in keep))


def identity(X: FinSet) -> PBij:
    return partial_identity(X, X)


def zero_morphism(X: FinSet, Y: FinSet) -> PBij:
    return PBij(X, Y)


def classify(f: PBij) -> Classification:
    """Mono/epi/iso by the domain and image criteria; idempotency by squaring.

    In this category a morphism is mono iff its domain is all of the source
    and epi iff its image is all of the target; iso means both.
    """
    is_mono = len(f.dom) == len(f.source)
    is_epi = len(f.im) == len(f.target)
    if f.source == f.target:
        is_idem = compose(f, f) == f
        is_pid = all(x == y for x, y in f.graph)
        note = None
    else:
        is_idem = False
        is_pid = False
        note = "idempotency flags require source = target"
    return Classification(
        is_mono=is_mono,
        is_epi=is_epi,
        is_iso=is_mono and is_epi,
        is_idempotent=is_idem,
        is_partial_identity=is_pid,
        note=note,
    )


def enumerate_pbij(X: FinSet, Y: FinSet) -> Iterator[PBij]:
    """Yield every partial bijection X -> Y exactly once.

    Ordered by domain size, then domain position, then image arrangement.
    The count is sum over k of C(|X|,k) * C(|Y|,k) * k!, which grows
    super-exponentially; callers pick their sizes.
    """
    top = min(len(X), len(Y))
    for k in range(top + 1):
        for dom in itertools.combinations(X.elements, k):
            for img in itertools.permutations(Y.elements, k):
                yield PBij(X, Y, zip(dom, img))


def cancellation_oracle(f: PBij, side: str,
                        probe_objects: Iterable[FinSet]) -> bool:
    """Exhaustively test left/right cancellation of f against probe objects.

    side="left": f∘g1 = f∘g2 forces g1 = g2 for all g1, g2 in Hom(P, source).
    side="right": g1∘f = g2∘f forces g1 = g2 for all g1, g2 in Hom(target, P).
    Left cancellation is the categorical monomorphism property, right is epi.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    probes = list(probe_objects)
    if not probes:
        raise ValueError("at least one probe object is required")
    for P in probes:
        seen: dict[PBij, PBij] = {}
        if side == "left":
            candidates = enumerate_pbij(P, f.source)
            for g in candidates:
                key = compose(f, g)
                if key in seen and seen[key] != g:
                    return False
                seen[key] = g
        else:
            candidates = enumerate_pbij(f.target, P)
            for g in candidates:
                key = compose(g, f)
                if key in seen and seen[key] != g:
                    return False
                seen[key] = g
    return True
