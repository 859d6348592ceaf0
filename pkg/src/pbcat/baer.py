"""Annihilator structure and exactness constructions.

The inverse operation is an involution on partial bijections, and every
morphism f : X -> Y has an annihilator projection f' = 1 on (X - dom f):
the morphisms killed by f (f∘g = 0) are exactly those that factor through
f'.  Kernels, cokernels, and mono-epi factorizations all fall out of that
projection by taking literal set complements and inclusions, which keeps
every construction canonical and equality decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (
    FinSet,
    InternalContradictionError,
    ObjectMismatchError,
    PBij,
    classify,
    compose,
    enumerate_pbij,
    inverse,
    partial_identity,
    zero_morphism,
)


@dataclass(frozen=True)
class Factorization:
    """f = mono ∘ epi through the intermediate object ``via``."""
    mono: PBij
    epi: PBij
    via: FinSet


@dataclass(frozen=True)
class KernelPair:
    """The kernel object together with its inclusion arrow into the source."""
    object: FinSet
    arrow: PBij


@dataclass(frozen=True)
class CokernelPair:
    """The cokernel object together with the quotient arrow from the target."""
    object: FinSet
    arrow: PBij


@dataclass(frozen=True)
class ProjectionStatus:
    is_projection: bool
    is_closed: bool


@dataclass(frozen=True)
class NormalityReport:
    """normal_ok/conormal_ok are None when the respective flag does not apply."""
    normal_ok: bool | None
    conormal_ok: bool | None
    not_applicable: bool


def star(f: PBij) -> PBij:
    """The involution: contravariant, fixes objects, and here equals inverse."""
    return inverse(f)


def annihilator_projection(f: PBij) -> PBij:
    """The partial identity on source minus dom(f); generates {g | f∘g = 0}."""
    return partial_identity(f.source, f.source.difference(f.dom))


def projection_status(e: PBij) -> ProjectionStatus:
    """Projection means idempotent and self-star; closed means e'' = e.

    Every projection here is closed (double complement); a projection that
    failed to be closed would be a bug, not a result.
    """
    if e.source != e.target:
        raise ObjectMismatchError("projection status needs an endomorphism")
    c = classify(e)
    is_projection = c.is_idempotent and star(e) == e
    is_closed = annihilator_projection(annihilator_projection(e)) == e
    if is_projection and not is_closed:
        raise InternalContradictionError(f"projection {e!r} is not closed")
    return ProjectionStatus(is_projection=is_projection, is_closed=is_closed)


def baer_annihilator_check(f: PBij, probe_objects: Iterable[FinSet]) -> bool:
    """Two-sided check that f' generates exactly the class annihilated by f.

    Over each probe P: any g with f∘g = 0 must already factor as f'∘g, and
    anything of the form f'∘h must be annihilated by f.
    """
    probes = list(probe_objects)
    if not probes:
        raise ValueError("at least one probe object is required")
    f_prime = annihilator_projection(f)
    for P in probes:
        zero = zero_morphism(P, f.target)
        for g in enumerate_pbij(P, f.source):
            if compose(f, g) == zero:
                if compose(f_prime, g) != g:
                    return False
            generated = compose(f_prime, g)
            if compose(f, generated) != zero:
                return False
    return True


def factorize(f: PBij) -> Factorization:
    """Split f into an inclusion of its image after a corestriction onto it.

    ``epi`` keeps the graph of f but shrinks the target to im(f); ``mono``
    includes im(f) back into the original target.  mono ∘ epi = f.
    """
    via = FinSet(f.im)
    mono = PBij(via, f.target, ((y, y) for y in via))
    epi = PBij(f.source, via, f.items())
    return Factorization(mono=mono, epi=epi, via=via)


def kernel(f: PBij) -> KernelPair:
    """Kernel as the mono part of factorizing the annihilator projection.

    Concretely: the inclusion of (source - dom f) into the source.
    """
    fact = factorize(annihilator_projection(f))
    return KernelPair(object=fact.via, arrow=fact.mono)


def cokernel(f: PBij) -> CokernelPair:
    """Cokernel as the epi part of factorizing the annihilator of f⁻¹.

    Concretely: the corestricted identity from the target onto
    (target - im f).
    """
    fact = factorize(annihilator_projection(inverse(f)))
    return CokernelPair(object=fact.via, arrow=fact.epi)


def kernel_universal_check(f: PBij, probe_objects: Iterable[FinSet]) -> bool:
    """Every g killed by f factors through the kernel arrow exactly once."""
    probes = list(probe_objects)
    if not probes:
        raise ValueError("at least one probe object is required")
    ker = kernel(f)
    for P in probes:
        zero = zero_morphism(P, f.target)
        kernel_homs = list(enumerate_pbij(P, ker.object))
        for g in enumerate_pbij(P, f.source):
            if compose(f, g) != zero:
                continue
            through = [h for h in kernel_homs if compose(ker.arrow, h) == g]
            if len(through) != 1:
                return False
    return True


def normal_conormal_check(f: PBij) -> NormalityReport:
    """Monos must be kernels and epis must be cokernels, up to canonical iso.

    Subobjects here are literal subsets, so "up to canonical iso" means: a
    mono is compared by (target, image) with the kernel of the annihilator
    of its inverse; an epi by (source, domain) with the cokernel of its own
    annihilator.  Morphisms that are neither mono nor epi are out of scope.
    """
    c = classify(f)
    normal_ok: bool | None = None
    conormal_ok: bool | None = None
    if c.is_mono:
        k = kernel(annihilator_projection(inverse(f))).arrow
        normal_ok = (f.target == k.target
                     and frozenset(f.im) == frozenset(k.im))
    if c.is_epi:
        q = cokernel(annihilator_projection(f)).arrow
        conormal_ok = (f.source == q.source
                       and frozenset(f.dom) == frozenset(q.dom))
    return NormalityReport(
        normal_ok=normal_ok,
        conormal_ok=conormal_ok,
        not_applicable=not (c.is_mono or c.is_epi),
    )
