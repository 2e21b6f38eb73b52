"""Exact arithmetic for simply-laced root systems in the fundamental-weight basis.

Weights are plain tuples of Python ints (Dynkin labels).  Nodes are numbered
from 1 in the public API, following Bourbaki; E6 is the chain 1-3-4-5-6 with
node 2 hanging off node 4.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

Weight = tuple[int, ...]

SIMPLY_LACED_TYPES = ("A", "D", "E")


class RootSystemError(ValueError):
    """Invalid Cartan type or rank."""


class NodeIndexError(IndexError):
    pass


class ChamberWalkError(RuntimeError):
    """The reflection walk overran its step budget (broken Cartan data)."""


class DominanceError(ValueError):
    pass


def weight(*coeffs: int) -> Weight:
    return tuple(int(c) for c in coeffs)


def add(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def sub(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def scale(k: int, a: Sequence[int]) -> Weight:
    return tuple(k * x for x in a)


def fundamental(rank: int, i: int) -> Weight:
    """The fundamental weight omega_i (1-based) as a coefficient vector."""
    return tuple(1 if j == i - 1 else 0 for j in range(rank))


def parse_weight(text: str) -> Weight:
    """Parse the toolkit's weight text format, e.g. ``"-3,0,0,0,0,6"``."""
    cleaned = text.strip().replace("−", "-")
    if cleaned.startswith("(") and cleaned.endswith(")"):
        cleaned = cleaned[1:-1]
    if not cleaned:
        raise ValueError("empty weight")
    try:
        return tuple(int(part) for part in cleaned.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse weight {text!r}: {exc}") from None


def format_weight(w: Sequence[int]) -> str:
    return ",".join(str(c) for c in w)


def _edges(type_label: str, rank: int) -> list[tuple[int, int]]:
    if type_label == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if type_label == "D":
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    # E_n, Bourbaki: 1-3-4-...-n, 2-4
    return [(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, rank)]


def _check_type(type_label: str, rank: int) -> None:
    ok = (
        (type_label == "A" and rank >= 1)
        or (type_label == "D" and rank >= 4)
        or (type_label == "E" and rank in (6, 7, 8))
    )
    if not ok:
        raise RootSystemError(f"unsupported simply-laced type {type_label}{rank}")


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    # positive roots in simple-root coordinates, sorted by height then lexicographically
    positive_roots_root_coords: tuple[tuple[int, ...], ...] = field(repr=False)
    positive_roots: tuple[Weight, ...] = field(repr=False)
    neighbors: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    @property
    def simple_roots(self) -> tuple[Weight, ...]:
        # alpha_i in weight coordinates is the i-th row of the Cartan matrix
        return self.cartan_matrix

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    def omega(self, i: int) -> Weight:
        self._check_node(i)
        return fundamental(self.rank, i)

    def _check_node(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise NodeIndexError(f"node {i} out of range 1..{self.rank} for {self.name}")

    def root_to_weight(self, root_coords: Sequence[int]) -> Weight:
        return tuple(
            sum(c * self.cartan_matrix[j][k] for j, c in enumerate(root_coords))
            for k in range(self.rank)
        )

    def highest_root(self) -> Weight:
        return self.positive_roots[-1]


def build_root_system(type_label: str, rank: int | None = None) -> RootSystem:
    """Build Cartan data and the positive roots for a simply-laced type.

    ``type_label`` is ``"A"``, ``"D"`` or ``"E"`` together with ``rank``; the
    combined forms ``"E6"`` or ``"A_3"`` are also accepted.
    """
    label = type_label.replace("_", "").strip().upper()
    if rank is None:
        if len(label) < 2 or not label[1:].isdigit():
            raise RootSystemError(f"cannot read type and rank from {type_label!r}")
        label, rank = label[0], int(label[1:])
    elif len(label) > 1:
        if label[1:] != str(rank):
            raise RootSystemError(f"type {type_label!r} does not match rank {rank}")
        label = label[0]
    if label not in SIMPLY_LACED_TYPES:
        raise RootSystemError(f"unsupported simply-laced type {label}{rank}")
    _check_type(label, rank)

    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    nbrs: list[list[int]] = [[] for _ in range(rank)]
    for a, b in _edges(label, rank):
        cartan[a - 1][b - 1] = cartan[b - 1][a - 1] = -1
        nbrs[a - 1].append(b - 1)
        nbrs[b - 1].append(a - 1)
    cartan_t = tuple(tuple(row) for row in cartan)

    def pairing(root: tuple[int, ...], i: int) -> int:
        return sum(c * cartan_t[j][i] for j, c in enumerate(root))

    simple = [fundamental(rank, i + 1) for i in range(rank)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for root in layer:
            for i in range(rank):
                # simply laced: beta + alpha_i is a root iff <beta, alpha_i^vee> = -1
                if pairing(root, i) < 0:
                    cand = tuple(c + (1 if j == i else 0) for j, c in enumerate(root))
                    if cand not in found:
                        found.add(cand)
                        nxt.append(cand)
        layer = nxt
    ordered = tuple(sorted(found, key=lambda r: (sum(r), r)))
    rs = RootSystem(
        type_label=label,
        rank=rank,
        cartan_matrix=cartan_t,
        positive_roots_root_coords=ordered,
        positive_roots=(),
        neighbors=tuple(tuple(n) for n in nbrs),
    )
    object.__setattr__(rs, "positive_roots", tuple(rs.root_to_weight(r) for r in ordered))
    return rs


def simple_reflection(R: RootSystem, lam: Sequence[int], i: int) -> Weight:
    """s_i(lam) = lam - lam_i * alpha_i."""
    R._check_node(i)
    k = i - 1
    c = lam[k]
    if c == 0:
        return tuple(lam)
    out = list(lam)
    out[k] = -c
    for j in R.neighbors[k]:
        out[j] += c
    return tuple(out)


@dataclass(frozen=True)
class Singular:
    # first node found with a zero coefficient; depends on the walk order
    node: int = field(compare=False)
    trace: tuple[tuple[Weight, int], ...] = field(default=(), compare=False, repr=False)

    @property
    def is_regular(self) -> bool:
        return False


@dataclass(frozen=True)
class Regular:
    length: int
    dominant: Weight
    trace: tuple[tuple[Weight, int], ...] = field(default=(), compare=False, repr=False)

    @property
    def is_regular(self) -> bool:
        return True


ChamberResult = Singular | Regular

NodeChooser = Callable[[list[int]], int]


def smallest(nodes: list[int]) -> int:
    return nodes[0]


def largest(nodes: list[int]) -> int:
    return nodes[-1]


def random_chooser(seed: int) -> NodeChooser:
    rng = random.Random(seed)
    return lambda nodes: rng.choice(nodes)


def _step_budget(R: RootSystem, lam: Sequence[int]) -> int:
    return len(R.positive_roots) + R.rank * max((abs(c) for c in lam), default=0) + 1


def to_dominant(
    R: RootSystem,
    lam: Sequence[int],
    *,
    nodes: Iterable[int] | None = None,
    choose: NodeChooser = smallest,
    trace: bool = False,
) -> ChamberResult:
    """Walk ``lam`` into the interior of the dominant chamber by simple reflections.

    Only the (1-based) ``nodes`` are examined and reflected at; by default all
    of them, which gives the full Weyl group.  Restricting to Levi nodes gives
    the walk for the Levi Weyl group used by Klimyk's formula.

    With ``trace=True`` the result carries the sequence of (weight, node)
    steps, ending with the final weight and node 0.
    """
    active = sorted(nodes) if nodes is not None else list(range(1, R.rank + 1))
    cur = tuple(lam)
    budget = _step_budget(R, cur)
    steps: list[tuple[Weight, int]] = []
    length = 0
    while True:
        for i in active:
            if cur[i - 1] == 0:
                if trace:
                    steps.append((cur, 0))
                return Singular(i, tuple(steps))
        negative = [i for i in active if cur[i - 1] < 0]
        if not negative:
            if trace:
                steps.append((cur, 0))
            return Regular(length, cur, tuple(steps))
        if length >= budget:
            raise ChamberWalkError(f"reflection walk on {R.name} exceeded {budget} steps from {lam}")
        i = choose(negative)
        if trace:
            steps.append((cur, i))
        cur = simple_reflection(R, cur, i)
        length += 1


def is_dominant(lam: Sequence[int]) -> bool:
    return all(c >= 0 for c in lam)


def coroot_pairing(R: RootSystem, lam: Sequence[int], root_coords: Sequence[int]) -> int:
    """<lam, alpha^vee> for the positive root with the given simple-root coordinates."""
    return sum(c * x for c, x in zip(root_coords, lam))


def weyl_dimension(R: RootSystem, lam: Sequence[int]) -> int:
    if not is_dominant(lam):
        raise DominanceError(f"weyl_dimension needs a dominant weight, got {tuple(lam)}")
    shifted = add(lam, R.rho)
    dim = Fraction(1)
    for root in R.positive_roots_root_coords:
        dim *= Fraction(coroot_pairing(R, shifted, root), sum(root))
    assert dim.denominator == 1
    return int(dim)


def weyl_orbit(R: RootSystem, lam: Sequence[int], nodes: Iterable[int] | None = None) -> set[Weight]:
    """Orbit of ``lam`` under the group generated by the given simple reflections."""
    active = list(nodes) if nodes is not None else list(range(1, R.rank + 1))
    start = tuple(lam)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in active:
            if w[i - 1] == 0:
                continue
            v = simple_reflection(R, w, i)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def dual_dominant(R: RootSystem, lam: Sequence[int], nodes: Iterable[int] | None = None) -> Weight:
    """-w0(lam): reflect until antidominant on ``nodes``, then negate."""
    active = sorted(nodes) if nodes is not None else list(range(1, R.rank + 1))
    cur = tuple(lam)
    budget = _step_budget(R, cur)
    for _ in range(budget + 1):
        positive = [i for i in active if cur[i - 1] > 0]
        if not positive:
            return tuple(-c for c in cur)
        cur = simple_reflection(R, cur, positive[0])
    raise ChamberWalkError(f"antidominant walk on {R.name} exceeded {budget} steps from {lam}")
