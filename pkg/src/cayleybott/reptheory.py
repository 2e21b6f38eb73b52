"""Characters of Levi modules in ambient weight coordinates.

Every weight here is a full-rank E-lattice weight.  Levi Weyl group actions
only touch Levi nodes, and crossed-node coefficients ride along, so a tensor
summand's twist falls out of the arithmetic.

Because the crossed fundamental weight is fixed by the Levi Weyl group,
``weight_system`` and ``klimyk_tensor`` are computed on weights with the
crossed coefficients zeroed and shifted back afterwards; this lets the caches
serve every twist of a bundle.
"""
from __future__ import annotations

import operator
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .parabolic import ParabolicData, is_levi_dominant, require_levi_dominant
from .roots import Weight, add, sub, to_dominant


class NegativeMultiplicityError(ArithmeticError):
    """Signed accumulation ended with a negative multiplicity (an internal bug)."""


class WeightSystem:
    """Weights of an irreducible Levi module, with multiplicities."""

    __slots__ = ("highest", "entries")

    def __init__(self, highest: Weight, entries: Mapping[Weight, int]):
        self.highest = highest
        self.entries = dict(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def dimension(self) -> int:
        return sum(self.entries.values())

    def shifted(self, delta: Weight) -> "WeightSystem":
        return WeightSystem(add(self.highest, delta), {add(w, delta): m for w, m in self.entries.items()})

    def __repr__(self) -> str:
        return f"WeightSystem(highest={self.highest}, weights={len(self.entries)}, dim={self.dimension()})"


class Decomposition:
    """A direct sum of irreducible Levi modules, as (highest weight -> multiplicity)."""

    __slots__ = ("summands",)

    def __init__(self, summands: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        items = summands.items() if isinstance(summands, Mapping) else summands
        acc: Counter[Weight] = Counter()
        for w, m in items:
            acc[tuple(w)] += m
        self.summands: dict[Weight, int] = {w: m for w, m in sorted(acc.items()) if m}

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Decomposition):
            return self.summands == other.summands
        return NotImplemented

    def __iter__(self):
        return iter(self.summands.items())

    def __len__(self) -> int:
        return len(self.summands)

    def __contains__(self, w: object) -> bool:
        return w in self.summands

    def __add__(self, other: "Decomposition") -> "Decomposition":
        return Decomposition(list(self.summands.items()) + list(other.summands.items()))

    def total(self) -> int:
        """Number of irreducible summands counted with multiplicity."""
        return sum(self.summands.values())

    def weights(self) -> list[Weight]:
        return list(self.summands)

    def shifted(self, delta: Weight) -> "Decomposition":
        return Decomposition({add(w, delta): m for w, m in self.summands.items()})

    def __repr__(self) -> str:
        return f"Decomposition({self.summands})"


def _split_crossed(P: ParabolicData, lam: Sequence[int]) -> tuple[Weight, Weight]:
    """(lam with crossed coefficients zeroed, the crossed part)."""
    base = tuple(0 if i in P.crossed else c for i, c in enumerate(lam, start=1))
    return base, sub(lam, base)


def levi_dimension(P: ParabolicData, lam: Sequence[int]) -> int:
    """Weyl dimension of the Levi module with highest weight lam."""
    require_levi_dominant(P, lam)
    dim = Fraction(1)
    for coords in P.levi_positive_root_coords:
        pairing = sum(c * (lam[j] + 1) for j, c in enumerate(coords))
        dim *= Fraction(pairing, sum(coords))
    return int(dim)


def weight_system(P: ParabolicData, lam: Sequence[int]) -> WeightSystem:
    require_levi_dominant(P, lam)
    base, shift = _split_crossed(P, lam)
    ws = _freudenthal(P, base)
    return ws.shifted(shift) if any(shift) else ws


@lru_cache(maxsize=4096)
def _freudenthal(P: ParabolicData, lam: Weight) -> WeightSystem:
    R = P.root_system
    levi = [i - 1 for i in P.levi_nodes]
    roots = [(R.root_to_weight(c), c) for c in P.levi_positive_root_coords]
    two_rho = tuple(2 if i in levi else 0 for i in range(R.rank))

    def norm_gap(depth: Sequence[int], mu: Weight) -> int:
        # (lam+rho, lam+rho) - (mu+rho, mu+rho) = (lam - mu, lam + mu + 2 rho)
        s = add(add(lam, mu), two_rho)
        return sum(k * s[j] for j, k in enumerate(depth))

    # only nonzero simple-root coordinates matter for the pairing
    supports = [(root_w, [(j, c) for j, c in enumerate(coords) if c]) for root_w, coords in roots]
    simple = [(i, R.simple_roots[i]) for i in levi]

    mult: dict[Weight, int] = {lam: 1}
    depth_of: dict[Weight, tuple[int, ...]] = {lam: (0,) * R.rank}
    layer = [lam]
    while layer:
        candidates: dict[Weight, tuple[int, ...]] = {}
        for mu in layer:
            for i, alpha in simple:
                nu = tuple(map(operator.sub, mu, alpha))
                if nu not in depth_of and nu not in candidates:
                    d = list(depth_of[mu])
                    d[i] += 1
                    candidates[nu] = tuple(d)
        layer = []
        for nu in sorted(candidates):
            total = 0
            for root_w, support in supports:
                # (nu + k alpha, alpha) = (nu, alpha) + 2k in the normalisation (alpha, alpha) = 2
                pairing = sum(c * nu[j] for j, c in support)
                up = tuple(map(operator.add, nu, root_w))
                m = mult.get(up)
                while m:
                    pairing += 2
                    total += m * pairing
                    up = tuple(map(operator.add, up, root_w))
                    m = mult.get(up)
            if total == 0:
                continue
            gap = norm_gap(candidates[nu], nu)
            m, rem = divmod(2 * total, gap)
            if rem:
                raise ArithmeticError(f"Freudenthal produced a non-integral multiplicity at {nu}")
            mult[nu] = m
            depth_of[nu] = candidates[nu]
            layer.append(nu)
    return WeightSystem(lam, mult)


def levi_walk(P: ParabolicData, lam: Sequence[int]):
    """Reflect lam into the strictly dominant Levi chamber (Levi nodes only)."""
    return to_dominant(P.root_system, lam, nodes=P.levi_nodes)


def klimyk_tensor(P: ParabolicData, lam: Sequence[int], mu: Sequence[int]) -> Decomposition:
    require_levi_dominant(P, lam)
    require_levi_dominant(P, mu)
    a, sa = _split_crossed(P, lam)
    b, sb = _split_crossed(P, mu)
    # iterate over the smaller weight system
    if len(_freudenthal(P, b)) > len(_freudenthal(P, a)):
        a, b = b, a
    dec = _klimyk(P, a, b)
    shift = add(sa, sb)
    return dec.shifted(shift) if any(shift) else dec


@lru_cache(maxsize=4096)
def _klimyk(P: ParabolicData, lam: Weight, mu: Weight) -> Decomposition:
    rho_l = P.rho_levi
    acc: Counter[Weight] = Counter()
    for nu, m in _freudenthal(P, mu).entries.items():
        res = levi_walk(P, add(add(lam, nu), rho_l))
        if not res.is_regular:
            continue
        acc[sub(res.dominant, rho_l)] += -m if res.length % 2 else m
    for w, m in acc.items():
        if m < 0:
            raise NegativeMultiplicityError(f"Klimyk left multiplicity {m} on {w}")
    return Decomposition(acc)


def _height_functional(P: ParabolicData) -> tuple[int, ...]:
    # w -> (w, 2 rho_L) is linear and strictly increases along Levi positive roots
    return tuple(
        sum(coords[j] for coords in P.levi_positive_root_coords) for j in range(P.rank)
    )


def peel(P: ParabolicData, character: Mapping[Weight, int]) -> Decomposition:
    """Decompose a Levi character (weight -> multiplicity) into irreducibles.

    Weights are visited once in decreasing height; when a weight is reached,
    everything above it has already been cancelled, so a positive remaining
    multiplicity there is the multiplicity of that highest weight.
    """
    char: Counter[Weight] = Counter({w: m for w, m in character.items() if m})
    h = _height_functional(P)
    order = sorted(
        (w for w in char if is_levi_dominant(P, w)),
        key=lambda w: (-sum(a * b for a, b in zip(h, w)), w),
    )
    out: Counter[Weight] = Counter()
    for top in order:
        m = char[top]
        if m == 0:
            continue
        if m < 0:
            raise NegativeMultiplicityError(f"character is not effective at {top}")
        out[top] = m
        for w, k in weight_system(P, top).entries.items():
            char[w] -= m * k
    leftover = {w: m for w, m in char.items() if m}
    if leftover:
        w = next(iter(leftover))
        raise NegativeMultiplicityError(f"character does not decompose: {leftover[w]} left at {w}")
    return Decomposition(out)


def _character_power(entries: Mapping[Weight, int], k: int) -> Counter[Weight]:
    out: Counter[Weight] = Counter()
    for w, m in entries.items():
        out[tuple(k * x for x in w)] += m
    return out


def _character_product(a: Mapping[Weight, int], b: Mapping[Weight, int]) -> Counter[Weight]:
    out: Counter[Weight] = Counter()
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            out[add(w1, w2)] += m1 * m2
    return out


def _exact_divide(char: Counter[Weight], n: int) -> dict[Weight, int]:
    out = {}
    for w, m in char.items():
        q, r = divmod(m, n)
        if r:
            raise ArithmeticError(f"character coefficient {m} at {w} not divisible by {n}")
        if q:
            out[w] = q
    return out


def sym_character(P: ParabolicData, lam: Sequence[int], k: int) -> dict[Weight, int]:
    chi = weight_system(P, lam).entries
    if k == 2:
        total = _character_product(chi, chi)
        total.update(_character_power(chi, 2))
        return _exact_divide(total, 2)
    if k == 3:
        sq = _character_product(chi, chi)
        total = _character_product(sq, chi)
        mixed = _character_product(chi, _character_power(chi, 2))
        for w, m in mixed.items():
            total[w] += 3 * m
        for w, m in _character_power(chi, 3).items():
            total[w] += 2 * m
        return _exact_divide(total, 6)
    raise ValueError(f"symmetric power {k} is not supported (only 2 and 3)")


def ext_character(P: ParabolicData, lam: Sequence[int], k: int) -> dict[Weight, int]:
    if k != 2:
        raise ValueError(f"exterior power {k} is not supported (only 2)")
    chi = weight_system(P, lam).entries
    total = _character_product(chi, chi)
    total.subtract(_character_power(chi, 2))
    return _exact_divide(total, 2)


def sym_power(P: ParabolicData, lam: Sequence[int], k: int) -> Decomposition:
    require_levi_dominant(P, lam)
    base, shift = _split_crossed(P, lam)
    return _power(P, base, k, True).shifted(tuple(k * x for x in shift))


def ext_power(P: ParabolicData, lam: Sequence[int], k: int) -> Decomposition:
    require_levi_dominant(P, lam)
    base, shift = _split_crossed(P, lam)
    return _power(P, base, k, False).shifted(tuple(k * x for x in shift))


@lru_cache(maxsize=1024)
def _power(P: ParabolicData, base: Weight, k: int, symmetric: bool) -> Decomposition:
    char = sym_character(P, base, k) if symmetric else ext_character(P, base, k)
    return peel(P, char)


def decomposition_dimension(P: ParabolicData, dec: Decomposition) -> int:
    return sum(m * levi_dimension(P, w) for w, m in dec)


def in_levi_root_lattice(P: ParabolicData, diff: Sequence[int]) -> bool:
    """Whether ``diff`` is an integer combination of the Levi simple roots.

    Solves C_L k = diff restricted to Levi nodes exactly, then checks that
    the solution is integral and reproduces the crossed coordinates.
    """
    R = P.root_system
    levi = [i - 1 for i in P.levi_nodes]
    n = len(levi)
    rows = [[Fraction(R.cartan_matrix[a][b]) for a in levi] + [Fraction(diff[b])] for b in levi]
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    coeffs = [rows[r][n] for r in range(n)]
    if any(c.denominator != 1 for c in coeffs):
        return False
    rebuilt = [0] * R.rank
    for c, a in zip(coeffs, levi):
        for j in range(R.rank):
            rebuilt[j] += int(c) * R.cartan_matrix[a][j]
    return tuple(rebuilt) == tuple(diff)
