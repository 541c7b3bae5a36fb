"""Finite encodable structures: multicolored models and symbolic ordering descriptions.

A multicolored model is a finite sequence of points over colors 1..k. Each
point either carries a single color as an R-point (a singleton block in the
ordering it encodes) or a nonempty color set as an S-point (a dense shuffle of
the corresponding blocks). Every color may be used at most once in the whole
model. With ``adjacency_constrained`` set, two R-points may not be consecutive
(two adjacent singleton blocks would merge); without it, the same data encodes
a homogeneous k-colored ordering instead.

An ordering description is the block-level picture: a sequence of segments,
each a singleton block of some kind (a finite size, omega, omega*, or zeta) or
a shuffle of a set of kinds, with every kind used at most once overall and the
singleton adjacencies that would glue blocks together forbidden.

Validators return violation lists rather than raising; each violation carries
a machine-readable axiom identifier:

==============  =====================================================
``Tprime.2``    point carries no color (empty S-set)
``Tprime.3b``   consecutive R-points (adjacency-constrained models)
``Tprime.5``    color used by two R-points
``Tprime.6``    color used by two S-points
``Tprime.7``    color used by both an R-point and an S-point
``Tprime.range``  color outside 1..k
``T.4``         two consecutive finite singleton blocks
``T.5``         finite singleton block directly before an omega block
``T.6``         omega* singleton block directly before a finite block
``T.7``         omega* singleton block directly before an omega block
``T.disjoint``  block kind (or color) used twice across a description
``T.shuffle_empty``  shuffle of the empty set
``T.finite_size``    finite kind of size < 1
==============  =====================================================
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Union


# ---------------------------------------------------------------------------
# points and models


@dataclass(frozen=True)
class RPoint:
    """A point carrying exactly one color; encodes a singleton block of that size."""

    color: int


@dataclass(frozen=True)
class SPoint:
    """A point carrying a nonempty color set; encodes a shuffle of those block sizes."""

    colors: frozenset[int]

    def __init__(self, colors: Iterable[int]):
        object.__setattr__(self, "colors", frozenset(colors))


Point = Union[RPoint, SPoint]


@dataclass(frozen=True)
class MulticoloredModel:
    k: int
    points: tuple[Point, ...] = ()
    adjacency_constrained: bool = True

    def __init__(self, k: int, points: Iterable[Point] = (), adjacency_constrained: bool = True):
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "points", tuple(points))
        object.__setattr__(self, "adjacency_constrained", adjacency_constrained)

    def used_colors(self) -> frozenset[int]:
        used: set[int] = set()
        for p in self.points:
            if isinstance(p, RPoint):
                used.add(p.color)
            else:
                used.update(p.colors)
        return frozenset(used)


# ---------------------------------------------------------------------------
# block kinds, descriptions


@dataclass(frozen=True)
class Finite:
    """Block of finite size n >= 1."""

    size: int


class InfiniteKind(enum.Enum):
    OMEGA = "omega"
    OMEGA_STAR = "omega_star"
    ZETA = "zeta"


OMEGA = InfiniteKind.OMEGA
OMEGA_STAR = InfiniteKind.OMEGA_STAR
ZETA = InfiniteKind.ZETA

BlockKind = Union[Finite, InfiniteKind]


def kind_key(kind: BlockKind) -> tuple[int, int]:
    """Deterministic sort key: finite kinds by size, then omega < omega* < zeta."""
    if isinstance(kind, Finite):
        return (0, kind.size)
    return (1, [OMEGA, OMEGA_STAR, ZETA].index(kind))


@dataclass(frozen=True)
class SingletonBlock:
    kind: BlockKind


@dataclass(frozen=True)
class Shuffle:
    kinds: frozenset[BlockKind]

    def __init__(self, kinds: Iterable[BlockKind]):
        object.__setattr__(self, "kinds", frozenset(kinds))


Segment = Union[SingletonBlock, Shuffle]


@dataclass(frozen=True)
class OrderingDescription:
    segments: tuple[Segment, ...] = ()

    def __init__(self, segments: Iterable[Segment] = ()):
        object.__setattr__(self, "segments", tuple(segments))


@dataclass(frozen=True)
class ColorPoint:
    color: int


@dataclass(frozen=True)
class ColorShuffle:
    colors: frozenset[int]

    def __init__(self, colors: Iterable[int]):
        object.__setattr__(self, "colors", frozenset(colors))


ColorSegment = Union[ColorPoint, ColorShuffle]


@dataclass(frozen=True)
class ColoredDescription:
    segments: tuple[ColorSegment, ...] = ()

    def __init__(self, segments: Iterable[ColorSegment] = ()):
        object.__setattr__(self, "segments", tuple(segments))


@dataclass(frozen=True)
class FiniteColoredOrdering:
    """An explicit finite colored linear order: position i has color colors[i]."""

    colors: tuple[int, ...] = ()

    def __init__(self, colors: Iterable[int] = ()):
        object.__setattr__(self, "colors", tuple(colors))


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    axiom: str
    positions: tuple[int, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}


def validate_model(m: MulticoloredModel) -> ValidationReport:
    """Check every model invariant; violations are data, not failures."""
    out: list[Violation] = []
    seen: dict[int, tuple[int, str]] = {}  # color -> (position, tag)
    for i, p in enumerate(m.points):
        if isinstance(p, RPoint):
            tagged = [(p.color, "R")]
        else:
            if not p.colors:
                out.append(Violation("Tprime.2", (i,), f"point {i} carries no color"))
            tagged = [(c, "S") for c in sorted(p.colors)]
        for color, tag in tagged:
            if not 1 <= color <= m.k:
                out.append(
                    Violation(
                        "Tprime.range", (i,), f"color {color} at {i} outside 1..{m.k}"
                    )
                )
            if color in seen:
                j, other = seen[color]
                axiom = {("R", "R"): "Tprime.5", ("S", "S"): "Tprime.6"}.get(
                    (other, tag), "Tprime.7"
                )
                out.append(
                    Violation(axiom, (j, i), f"color {color} reused at {j} and {i}")
                )
            else:
                seen[color] = (i, tag)
    if m.adjacency_constrained:
        for i in range(len(m.points) - 1):
            if isinstance(m.points[i], RPoint) and isinstance(m.points[i + 1], RPoint):
                out.append(
                    Violation(
                        "Tprime.3b", (i, i + 1), f"consecutive R-points at {i},{i + 1}"
                    )
                )
    return ValidationReport(tuple(out))


_SINGLETON_ADJACENCY = {
    # (kind class of left, kind class of right) -> axiom, for forbidden pairs
    ("finite", "finite"): ("T.4", "adjacent finite blocks"),
    ("finite", "omega"): ("T.5", "finite block before omega"),
    ("omega_star", "finite"): ("T.6", "omega-star before finite"),
    ("omega_star", "omega"): ("T.7", "omega-star before omega"),
}


def _kind_class(kind: BlockKind) -> str:
    return "finite" if isinstance(kind, Finite) else kind.value


def validate_description(d: OrderingDescription) -> ValidationReport:
    out: list[Violation] = []
    seen: dict[BlockKind, int] = {}
    for i, seg in enumerate(d.segments):
        kinds = [seg.kind] if isinstance(seg, SingletonBlock) else sorted(seg.kinds, key=kind_key)
        if isinstance(seg, Shuffle) and not seg.kinds:
            out.append(Violation("T.shuffle_empty", (i,), f"empty shuffle at {i}"))
        for kind in kinds:
            if isinstance(kind, Finite) and kind.size < 1:
                out.append(
                    Violation("T.finite_size", (i,), f"finite kind of size {kind.size} at {i}")
                )
            if kind in seen:
                out.append(
                    Violation(
                        "T.disjoint",
                        (seen[kind], i),
                        f"kind {kind_to_json(kind)} reused at {seen[kind]} and {i}",
                    )
                )
            else:
                seen[kind] = i
    for i in range(len(d.segments) - 1):
        left, right = d.segments[i], d.segments[i + 1]
        if isinstance(left, SingletonBlock) and isinstance(right, SingletonBlock):
            pair = (_kind_class(left.kind), _kind_class(right.kind))
            if pair in _SINGLETON_ADJACENCY:
                axiom, label = _SINGLETON_ADJACENCY[pair]
                out.append(Violation(axiom, (i, i + 1), f"{label} at {i},{i + 1}"))
    return ValidationReport(tuple(out))


def validate_colored_description(d: ColoredDescription) -> ValidationReport:
    """Colored descriptions only require globally unique colors."""
    out: list[Violation] = []
    seen: dict[int, int] = {}
    for i, seg in enumerate(d.segments):
        colors = [seg.color] if isinstance(seg, ColorPoint) else sorted(seg.colors)
        if isinstance(seg, ColorShuffle) and not seg.colors:
            out.append(Violation("T.shuffle_empty", (i,), f"empty shuffle at {i}"))
        for color in colors:
            if color in seen:
                out.append(
                    Violation(
                        "T.disjoint",
                        (seen[color], i),
                        f"color {color} reused at {seen[color]} and {i}",
                    )
                )
            else:
                seen[color] = i
    return ValidationReport(tuple(out))


# ---------------------------------------------------------------------------
# canonical order


def point_key(p: Point) -> tuple[int, tuple[int, ...]]:
    """R-points before S-points; R by color, S by sorted color tuple."""
    if isinstance(p, RPoint):
        return (0, (p.color,))
    return (1, tuple(sorted(p.colors)))


def canonical_key(m: MulticoloredModel) -> tuple[int, tuple[tuple[int, tuple[int, ...]], ...]]:
    return (len(m.points), tuple(point_key(p) for p in m.points))


def canonical_compare(a: MulticoloredModel, b: MulticoloredModel) -> int:
    """Total order on same-k models: -1, 0, or 1. Shorter first, then pointwise."""
    if a.k != b.k:
        raise ValueError(f"cannot compare models with k={a.k} and k={b.k}")
    ka, kb = canonical_key(a), canonical_key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# JSON wire formats (bit-exact contracts; color sets are sorted lists, never bitmasks)


def model_to_dict(m: MulticoloredModel) -> dict:
    points = []
    for p in m.points:
        if isinstance(p, RPoint):
            points.append({"type": "R", "color": p.color})
        else:
            points.append({"type": "S", "colors": sorted(p.colors)})
    return {"k": m.k, "adjacency_constrained": m.adjacency_constrained, "points": points}


def model_from_dict(data: dict) -> MulticoloredModel:
    try:
        k = data["k"]
        constrained = data["adjacency_constrained"]
        points: list[Point] = []
        for entry in data["points"]:
            if entry["type"] == "R":
                points.append(RPoint(entry["color"]))
            elif entry["type"] == "S":
                points.append(SPoint(entry["colors"]))
            else:
                raise ValueError(f"unknown point type {entry['type']!r}")
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed model JSON: {exc}") from exc
    return MulticoloredModel(k, points, constrained)


def kind_to_json(kind: BlockKind):
    if isinstance(kind, Finite):
        return {"finite": kind.size}
    return kind.value


def kind_from_json(data) -> BlockKind:
    if isinstance(data, dict) and set(data) == {"finite"}:
        return Finite(data["finite"])
    if isinstance(data, str):
        for member in InfiniteKind:
            if member.value == data:
                return member
    raise ValueError(f"unknown block kind encoding {data!r}")


def description_to_dict(d: OrderingDescription) -> dict:
    segments = []
    for seg in d.segments:
        if isinstance(seg, SingletonBlock):
            segments.append({"type": "block", "kind": kind_to_json(seg.kind)})
        else:
            segments.append(
                {"type": "shuffle", "kinds": [kind_to_json(k) for k in sorted(seg.kinds, key=kind_key)]}
            )
    return {"segments": segments}


def description_from_dict(data: dict) -> OrderingDescription:
    try:
        segments: list[Segment] = []
        for entry in data["segments"]:
            if entry["type"] == "block":
                segments.append(SingletonBlock(kind_from_json(entry["kind"])))
            elif entry["type"] == "shuffle":
                segments.append(Shuffle(kind_from_json(k) for k in entry["kinds"]))
            else:
                raise ValueError(f"unknown segment type {entry['type']!r}")
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed description JSON: {exc}") from exc
    return OrderingDescription(segments)


def colored_description_to_dict(d: ColoredDescription) -> dict:
    segments = []
    for seg in d.segments:
        if isinstance(seg, ColorPoint):
            segments.append({"type": "block", "color": seg.color})
        else:
            segments.append({"type": "shuffle", "colors": sorted(seg.colors)})
    return {"segments": segments}


def colored_description_from_dict(data: dict) -> ColoredDescription:
    try:
        segments: list[ColorSegment] = []
        for entry in data["segments"]:
            if entry["type"] == "block":
                segments.append(ColorPoint(entry["color"]))
            elif entry["type"] == "shuffle":
                segments.append(ColorShuffle(entry["colors"]))
            else:
                raise ValueError(f"unknown segment type {entry['type']!r}")
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed colored description JSON: {exc}") from exc
    return ColoredDescription(segments)
