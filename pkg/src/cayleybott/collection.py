"""Named bundles, Hom/Ext computations and exceptional-collection verification."""
from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .bott import GradedCohomology, cohomology_of_decomposition
from .parabolic import (
    ParabolicData,
    UnsupportedParabolicError,
    dual_weight,
    is_levi_dominant,
    parse_space,
    require_levi_dominant,
)
from .reptheory import Decomposition, klimyk_tensor
from .roots import Weight, add, weyl_orbit

CAYLEY_PLANE = "E6/P1"

# residual (crossed coefficient removed) Levi parts of the named E6/P1 bundles
_NAMED_E6P1: dict[str, tuple[Weight, int]] = {
    "O": ((0, 0, 0, 0, 0, 0), 0),
    "S": ((0, 0, 0, 0, 0, 1), 0),
    "S2": ((0, 0, 0, 0, 0, 2), 0),
    "S3": ((0, 0, 0, 0, 0, 3), 0),
    "T": ((0, 1, 0, 0, 0, 0), 0),
    # the cotangent bundle, T^vee; its highest weight is -alpha_1
    "Om": ((0, 0, 1, 0, 0, 0), -2),
}
# names used when printing, keyed by residual; Om prints as E_{w3}(k-2)
_PRINT_NAMES = {res: name for name, (res, shift) in _NAMED_E6P1.items() if shift == 0}

_NAME_RE = re.compile(
    r"""^\s*(?:
        (?P<named>O|S2|S3|S|T|Om)
      | E\[(?P<raw>[^\]]*)\]
      | E_\{(?P<pretty>[^}]*)\}
    )\s*(?:\(\s*(?P<twist>[+-]?\d+)\s*\))?\s*$""",
    re.VERBOSE,
)
_TERM_RE = re.compile(r"^([+-]?)(\d*)(?:ω|w)(\d+)$")


class BundleNameError(ValueError):
    pass


@dataclass(frozen=True)
class BundleRef:
    name: str
    weight: Weight


def _normalise(text: str) -> str:
    return text.replace("−", "-").replace("ω", "w").strip()


def _parse_pretty(body: str, rank: int) -> Weight:
    coeffs = [0] * rank
    body = _normalise(body).replace(" ", "")
    if body in ("", "0"):
        return tuple(coeffs)
    for term in re.findall(r"[+-]?[^+-]+", body):
        m = _TERM_RE.match(term)
        if not m:
            raise BundleNameError(f"cannot read weight term {term!r}")
        sign, k, node = m.groups()
        i = int(node)
        if not 1 <= i <= rank:
            raise BundleNameError(f"node {i} out of range in {term!r}")
        coeffs[i - 1] += (-1 if sign == "-" else 1) * (int(k) if k else 1)
    return tuple(coeffs)


def parse_bundle(text: str, P: ParabolicData | None = None) -> BundleRef:
    """Parse a bundle name such as ``S2(4)``, ``O(-1)``, ``E[-2,0,1,0,0,0]`` or ``E_{ω5+2ω6}(-2)``."""
    P = P or cayley_plane()
    m = _NAME_RE.match(_normalise(text))
    if not m:
        raise BundleNameError(f"cannot parse bundle name {text!r}")
    k = int(m.group("twist")) if m.group("twist") else 0
    if m.group("named"):
        name = m.group("named")
        if name != "O" and P.label != CAYLEY_PLANE:
            raise BundleNameError(f"bundle {name!r} is only defined on {CAYLEY_PLANE}")
        if name == "O":
            residual, shift = (0,) * P.rank, 0
        else:
            residual, shift = _NAMED_E6P1[name]
        w = list(residual)
        w[P.crossed_node - 1] += k + shift
        weight = tuple(w)
    elif m.group("raw") is not None:
        try:
            weight = tuple(int(x) for x in m.group("raw").replace(" ", "").split(","))
        except ValueError:
            raise BundleNameError(f"cannot parse raw weight in {text!r}") from None
        if len(weight) != P.rank:
            raise BundleNameError(f"weight {weight} has {len(weight)} entries, {P.label} needs {P.rank}")
        if k:
            weight = _add_twist(P, weight, k)
    else:
        weight = _parse_pretty(m.group("pretty"), P.rank)
        if k:
            weight = _add_twist(P, weight, k)
    if not is_levi_dominant(P, weight):
        bad = next(i for i in P.levi_nodes if weight[i - 1] < 0)
        raise BundleNameError(
            f"{text!r} has weight {weight}, not L-dominant: coefficient {weight[bad - 1]} on node {bad}"
        )
    return BundleRef(text.strip(), weight)


def _add_twist(P: ParabolicData, w: Weight, k: int) -> Weight:
    out = list(w)
    out[P.crossed_node - 1] += k
    return tuple(out)


def _fmt_twist(k: int, ascii_only: bool) -> str:
    if k == 0:
        return ""
    minus = "-" if ascii_only else "−"
    return f"({minus}{-k})" if k < 0 else f"({k})"


def _fmt_pretty(w: Sequence[int], ascii_only: bool) -> str:
    omega = "w" if ascii_only else "ω"
    minus = "-" if ascii_only else "−"
    parts = []
    for i, c in enumerate(w, start=1):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = minus if c < 0 else "+"
        parts.append((sign, f"{mag}{omega}{i}"))
    if not parts:
        return "0"
    text = "".join(s + t for s, t in parts)
    return text[1:] if text.startswith("+") else text


def bundle_name(P: ParabolicData, w: Sequence[int], *, ascii_only: bool = False) -> str:
    """Display name in E_λ(k) form; the crossed coefficient is factored out as a twist."""
    w = tuple(w)
    c = P.crossed_node - 1
    k = w[c]
    residual = tuple(0 if j == c else x for j, x in enumerate(w))
    tw = _fmt_twist(k, ascii_only)
    if not any(residual):
        return "O" + tw
    if P.label == CAYLEY_PLANE and residual in _PRINT_NAMES:
        return _PRINT_NAMES[residual] + tw
    return f"E_{{{_fmt_pretty(residual, ascii_only)}}}" + tw


def format_decomposition(P: ParabolicData, dec: Decomposition, *, ascii_only: bool = False) -> str:
    if not len(dec):
        return "0"
    c = P.crossed_node - 1
    items = sorted(dec, key=lambda wm: (wm[0][c], [-x for x in wm[0]]))
    terms = []
    for w, m in items:
        name = bundle_name(P, w, ascii_only=ascii_only)
        terms.append(name if m == 1 else f"{m}·{name}" if not ascii_only else f"{m}*{name}")
    return (" + " if ascii_only else " ⊕ ").join(terms)


@lru_cache(maxsize=None)
def cayley_plane() -> ParabolicData:
    return parse_space(CAYLEY_PLANE)


def named(name: str, k: int = 0) -> BundleRef:
    """Shorthand for the E6/P1 named bundles: ``named("S2", 3)``."""
    return parse_bundle(f"{name}({k})" if k else name)


def hom_bundle(a: BundleRef, b: BundleRef, P: ParabolicData | None = None) -> Decomposition:
    """Hom(E_a, E_b) = E_a^vee tensor E_b, decomposed into irreducibles."""
    P = P or cayley_plane()
    return klimyk_tensor(P, dual_weight(P, a.weight), b.weight)


def ext_groups(a: BundleRef, b: BundleRef, P: ParabolicData | None = None) -> GradedCohomology:
    P = P or cayley_plane()
    return cohomology_of_decomposition(P, hom_bundle(a, b, P))


@dataclass(frozen=True, order=True)
class ExtWitness:
    i: int  # 1-based collection positions
    j: int
    degree: int
    summand: Weight
    dim: int
    direction: str  # "self", "forward" (i < j) or "backward" (i > j)

    def describe(self, P: ParabolicData | None = None) -> str:
        P = P or cayley_plane()
        return (
            f"({self.i},{self.j}) {self.direction} q={self.degree} dim={self.dim} "
            f"summand={bundle_name(P, self.summand)}"
        )


def _witnesses(i: int, j: int, ext: GradedCohomology, *, strong: bool) -> list[ExtWitness]:
    out = []
    if i == j:
        direction = "self"
    else:
        direction = "forward" if i < j else "backward"
    for q, rows in ext.degrees.items():
        if i == j and q == 0 and ext.dimension(0) == 1:
            continue
        if i < j and (q == 0 or not strong):
            continue
        for (_g, m, d), src in zip(rows, ext.sources[q]):
            out.append(ExtWitness(i, j, q, src, m * d, direction))
    if i == j and 0 not in ext.degrees:
        # End with no global sections cannot happen for a bundle; flag it anyway
        out.append(ExtWitness(i, j, 0, (), 0, direction))
    return out


def is_exceptional(a: BundleRef, P: ParabolicData | None = None) -> tuple[bool, list[ExtWitness]]:
    P = P or cayley_plane()
    ws = _witnesses(1, 1, ext_groups(a, a, P), strong=True)
    return not ws, ws


@dataclass
class CollectionReport:
    verdict: str
    mode: str
    witnesses: list[ExtWitness]
    pair_count: int
    members: int
    wall_ms: int = field(compare=False)

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"


def verify_collection(
    bundles: Sequence[BundleRef], strong: bool, P: ParabolicData | None = None
) -> CollectionReport:
    """Check every ordered pair (i, j) of ``bundles`` and collect all witnesses."""
    P = P or cayley_plane()
    if not bundles:
        raise ValueError("cannot verify an empty collection")
    for b in bundles:
        require_levi_dominant(P, b.weight)
    start = time.perf_counter()
    witnesses: list[ExtWitness] = []
    pairs = 0
    for i, a in enumerate(bundles, start=1):
        for j, b in enumerate(bundles, start=1):
            pairs += 1
            if i < j and not strong:
                continue
            witnesses.extend(_witnesses(i, j, ext_groups(a, b, P), strong=strong))
    witnesses.sort()
    return CollectionReport(
        verdict="FAIL" if witnesses else "PASS",
        mode="strong" if strong else "exceptional",
        witnesses=witnesses,
        pair_count=pairs,
        members=len(bundles),
        wall_ms=int((time.perf_counter() - start) * 1000),
    )


def read_collection(source: str | Path | Iterable[str], P: ParabolicData | None = None) -> list[BundleRef]:
    """Read a collection file: one bundle name per line, ``#`` starts a comment."""
    if isinstance(source, (str, Path)):
        lines = Path(source).read_text(encoding="utf-8").splitlines()
    else:
        lines = list(source)
    out = []
    for lineno, line in enumerate(lines, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            out.append(parse_bundle(text, P))
        except BundleNameError as exc:
            raise BundleNameError(f"line {lineno}: {exc}") from None
    return out


def theorem2_collection() -> list[BundleRef]:
    """The 27-member strongly exceptional collection on the Cayley plane, in order."""
    text = resources.files("cayleybott").joinpath("data/theorem2.txt").read_text(encoding="utf-8")
    return read_collection(text.splitlines())


def schubert_rank(P: ParabolicData) -> int:
    """Number of Schubert classes of G/P for a maximal parabolic: |W . omega_c|.

    The stabiliser of a dominant weight is generated by the simple reflections
    fixing it, which for omega_c are exactly the Levi reflections.
    """
    if len(P.crossed) != 1:
        raise UnsupportedParabolicError(f"schubert_rank needs a maximal parabolic, got {P.label}")
    R = P.root_system
    return len(weyl_orbit(R, R.omega(P.crossed_node)))
