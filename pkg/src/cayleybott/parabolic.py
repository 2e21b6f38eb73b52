"""Parabolic subgroups: Levi dominance, twists, duals and the canonical bundle."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .roots import (
    DominanceError,
    RootSystem,
    Weight,
    build_root_system,
    dual_dominant,
    fundamental,
)

_SPACE_RE = re.compile(r"^\s*([ADE])_?(\d+)\s*/\s*P_?(\d+(?:\s*,\s*\d+)*)\s*$", re.IGNORECASE)


class UnsupportedParabolicError(ValueError):
    pass


@dataclass(frozen=True)
class ParabolicData:
    root_system: RootSystem
    crossed: frozenset[int]
    levi_nodes: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        R = self.root_system
        if not self.crossed:
            raise UnsupportedParabolicError("a parabolic needs at least one crossed node")
        for c in self.crossed:
            R._check_node(c)
        levi = tuple(i for i in range(1, R.rank + 1) if i not in self.crossed)
        object.__setattr__(self, "levi_nodes", levi)

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def label(self) -> str:
        nodes = ",".join(str(c) for c in sorted(self.crossed))
        return f"{self.root_system.name}/P{nodes}"

    @property
    def crossed_node(self) -> int:
        """The unique crossed node of a maximal parabolic."""
        if len(self.crossed) != 1:
            raise UnsupportedParabolicError(f"{self.label} is not a maximal parabolic")
        return next(iter(self.crossed))

    @cached_property
    def _split_roots(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        crossed_idx = [c - 1 for c in self.crossed]
        nil, levi = [], []
        for k, coords in enumerate(self.root_system.positive_roots_root_coords):
            (nil if any(coords[c] for c in crossed_idx) else levi).append(k)
        return tuple(nil), tuple(levi)

    @property
    def nilradical_roots(self) -> tuple[Weight, ...]:
        return tuple(self.root_system.positive_roots[k] for k in self._split_roots[0])

    @property
    def levi_positive_roots(self) -> tuple[Weight, ...]:
        return tuple(self.root_system.positive_roots[k] for k in self._split_roots[1])

    @property
    def levi_positive_root_coords(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.root_system.positive_roots_root_coords[k] for k in self._split_roots[1])

    @property
    def dimension(self) -> int:
        """Dimension of G/P, the number of nilradical roots."""
        return len(self._split_roots[0])

    @property
    def rho_levi(self) -> Weight:
        return tuple(0 if i in self.crossed else 1 for i in range(1, self.rank + 1))

    def __hash__(self) -> int:
        return hash((self.root_system.name, self.crossed))


def make_parabolic(R: RootSystem, crossed: Iterable[int]) -> ParabolicData:
    return ParabolicData(R, frozenset(crossed))


def parse_space(label: str) -> ParabolicData:
    """Parse ``"E6/P1"`` style labels (``"A3/P2"``, ``"D5/P1"``, ...)."""
    m = _SPACE_RE.match(label)
    if not m:
        raise ValueError(f"cannot parse homogeneous space {label!r}; expected e.g. 'E6/P1'")
    R = build_root_system(m.group(1).upper(), int(m.group(2)))
    crossed = [int(x) for x in m.group(3).split(",")]
    return make_parabolic(R, crossed)


def is_levi_dominant(P: ParabolicData, lam: Sequence[int]) -> bool:
    return all(lam[i - 1] >= 0 for i in P.levi_nodes)


def require_levi_dominant(P: ParabolicData, lam: Sequence[int]) -> None:
    for i in P.levi_nodes:
        if lam[i - 1] < 0:
            raise DominanceError(
                f"weight {tuple(lam)} is not L-dominant for {P.label}: "
                f"coefficient {lam[i - 1]} on node {i}"
            )


def twist(P: ParabolicData, lam: Sequence[int], k: int) -> Weight:
    c = P.crossed_node
    return tuple(x + k if j == c - 1 else x for j, x in enumerate(lam))


def dual_weight(P: ParabolicData, lam: Sequence[int]) -> Weight:
    """Highest weight of the dual Levi module, -w0^L(lam), in ambient coordinates."""
    require_levi_dominant(P, lam)
    return dual_dominant(P.root_system, lam, P.levi_nodes)


def canonical_weight(P: ParabolicData) -> Weight:
    total = [0] * P.rank
    for root in P.nilradical_roots:
        for j, x in enumerate(root):
            total[j] += x
    return tuple(-x for x in total)


def index(P: ParabolicData) -> int:
    """Fano index: the crossed coefficient of the anticanonical weight."""
    return -canonical_weight(P)[P.crossed_node - 1]


def crossed_fundamental(P: ParabolicData) -> Weight:
    return fundamental(P.rank, P.crossed_node)
