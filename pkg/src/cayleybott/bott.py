"""Bott-Borel-Weil cohomology of irreducible homogeneous bundles on G/P."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .parabolic import (
    ParabolicData,
    canonical_weight,
    dual_weight,
    require_levi_dominant,
    twist,
)
from .reptheory import Decomposition
from .roots import Weight, add, dual_dominant, sub, to_dominant, weyl_dimension


@dataclass(frozen=True)
class Acyclic:
    # first node with a zero coefficient on the walk from lam + rho
    wall: int = field(default=0, compare=False)
    trace: tuple[tuple[Weight, int], ...] = field(default=(), compare=False, repr=False)

    nonzero = False


@dataclass(frozen=True)
class NonZero:
    """H^degree(G/P, E_lam) = V^vee of ``g_dominant``; all other groups vanish."""

    degree: int
    g_dominant: Weight
    dim: int
    trace: tuple[tuple[Weight, int], ...] = field(default=(), compare=False, repr=False)

    nonzero = True


CohomologyResult = Acyclic | NonZero


def cohomology(P: ParabolicData, lam: Sequence[int], *, trace: bool = False) -> CohomologyResult:
    require_levi_dominant(P, lam)
    R = P.root_system
    res = to_dominant(R, add(lam, R.rho), trace=trace)
    if not res.is_regular:
        return Acyclic(res.node, res.trace)
    mu = sub(res.dominant, R.rho)
    return NonZero(res.length, mu, weyl_dimension(R, mu), res.trace)


@dataclass
class GradedCohomology:
    """Cohomology of a direct sum: degree -> [(g_dominant, multiplicity, dim)]."""

    degrees: dict[int, list[tuple[Weight, int, int]]] = field(default_factory=dict)
    # the bundle summand each entry came from, parallel to ``degrees``
    sources: dict[int, list[Weight]] = field(default_factory=dict, repr=False)

    def is_empty(self) -> bool:
        return not self.degrees

    def dimension(self, q: int) -> int:
        return sum(m * d for _, m, d in self.degrees.get(q, []))

    def dimensions(self) -> dict[int, int]:
        return {q: self.dimension(q) for q in self.degrees}

    def positive_part(self) -> dict[int, list[tuple[Weight, int, int]]]:
        return {q: v for q, v in self.degrees.items() if q > 0}

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * self.dimension(q) for q in self.degrees)


def cohomology_of_decomposition(P: ParabolicData, dec: Decomposition) -> GradedCohomology:
    by_degree: dict[int, list[tuple[Weight, int, int, Weight]]] = defaultdict(list)
    for w, m in dec:
        res = cohomology(P, w)
        if res.nonzero:
            by_degree[res.degree].append((res.g_dominant, m, res.dim, w))
    out = GradedCohomology()
    for q in sorted(by_degree):
        rows = sorted(by_degree[q])
        out.degrees[q] = [(g, m, d) for g, m, d, _ in rows]
        out.sources[q] = [w for *_, w in rows]
    return out


def acyclic_twist_range(
    P: ParabolicData, lam: Sequence[int], t_min: int, t_max: int
) -> list[tuple[int, NonZero]]:
    """Twists t in [t_min, t_max] (inclusive) where E_lam(t) is not acyclic."""
    require_levi_dominant(P, lam)
    hits = []
    for t in range(t_min, t_max + 1):
        res = cohomology(P, twist(P, lam, t))
        if res.nonzero:
            hits.append((t, res))
    return hits


def decomposition_twist_range(
    P: ParabolicData, dec: Decomposition, t_min: int, t_max: int
) -> list[tuple[int, Weight, NonZero]]:
    """``acyclic_twist_range`` over every summand of a decomposition."""
    hits = []
    for w, _ in dec:
        hits.extend((t, w, res) for t, res in acyclic_twist_range(P, w, t_min, t_max))
    return sorted(hits)


def full_dual(P: ParabolicData, mu: Sequence[int]) -> Weight:
    """-w0^G(mu) for the full group."""
    return dual_dominant(P.root_system, mu)


def serre_partner(P: ParabolicData, lam: Sequence[int]) -> Weight:
    """Highest weight of E_lam^vee tensor K."""
    return add(dual_weight(P, lam), canonical_weight(P))


def serre_check(P: ParabolicData, lam: Sequence[int]) -> bool:
    """Cross-validate ``cohomology`` against Serre duality on G/P."""
    P.crossed_node  # maximal parabolics only
    a = cohomology(P, lam)
    b = cohomology(P, serre_partner(P, lam))
    if not a.nonzero and not b.nonzero:
        return True
    if a.nonzero != b.nonzero:
        return False
    return (
        a.degree + b.degree == P.dimension
        and a.dim == b.dim
        and a.g_dominant == full_dual(P, b.g_dominant)
        and b.g_dominant == full_dual(P, a.g_dominant)
    )


def nonacyclic_summands(P: ParabolicData, weights: Iterable[Sequence[int]]) -> list[tuple[Weight, NonZero]]:
    out = []
    for w in weights:
        res = cohomology(P, w)
        if res.nonzero:
            out.append((tuple(w), res))
    return out
