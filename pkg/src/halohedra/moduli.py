"""Marked bordered surfaces: stability, dimension and which moduli are polytopes."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import product

from .poset import FacePoset
from .polygons import poset as polygon_poset
from .tubings import associahedron_poset, halohedron_poset


class SignatureError(ValueError):
    pass


class CurveKind(Enum):
    ARC = "arc"
    ONE_LOOP = "1-loop"
    TWO_LOOP = "2-loop"


_WEIGHTS = {CurveKind.ARC: 1, CurveKind.ONE_LOOP: 1, CurveKind.TWO_LOOP: 2}


def curve_weight(c: CurveKind) -> int:
    return _WEIGHTS[c]


@dataclass(frozen=True)
class SurfaceSignature:
    """Genus g, h boundary circles, n punctures and m[i] marks on circle i."""

    g: int
    h: int
    n: int
    m: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(self.m))
        for name, value in (("g", self.g), ("h", self.h), ("n", self.n), *(("m", x) for x in self.m)):
            if not isinstance(value, int) or value < 0:
                raise SignatureError(f"{name} must be a non-negative integer, got {value!r}")
        if len(self.m) != self.h:
            raise SignatureError(f"expected {self.h} boundary mark counts, got {len(self.m)}")

    @property
    def total_marks(self) -> int:
        return sum(self.m)

    def __str__(self) -> str:
        marks = ",".join(map(str, self.m)) or "-"
        return f"({self.g},{self.h})({self.n},<{marks}>)"

    def to_json(self) -> dict:
        return {"g": self.g, "h": self.h, "n": self.n, "m": list(self.m)}


def is_stable(s: SurfaceSignature) -> bool:
    # hyperbolicity of the complex double
    if s.h == 0:
        return 2 * s.g - 2 + s.n > 0
    return 4 * s.g + 2 * s.h - 4 + 2 * s.n + s.total_marks > 0


def dimension(s: SurfaceSignature) -> int:
    if not is_stable(s):
        raise SignatureError(f"{s} is not stable")
    return 6 * s.g + 3 * s.h - 6 + 2 * s.n + s.total_marks


class Verdict(Enum):
    POLYTOPE = "polytope"
    NOT_POLYTOPE = "not_polytope"
    UNSTABLE = "unstable"


class Reason(Enum):
    POSITIVE_GENUS = "PositiveGenus"
    H_PLUS_N_GREATER_THAN_3 = "HPlusNGreaterThan3"
    H_PLUS_N_3_WITH_BOUNDARY_MARKS = "HPlusN3WithBoundaryMarks"
    TWO_MARKED_BOUNDARIES = "TwoMarkedBoundaries"


@dataclass(frozen=True)
class Family:
    """K_k (associahedron), W_k (cyclohedron) or Y_k (halohedron)."""

    letter: str
    index: int

    def __str__(self) -> str:
        return f"{self.letter}_{self.index}"

    @property
    def dimension(self) -> int:
        return {"K": self.index - 2, "W": self.index - 1, "Y": self.index}[self.letter]


@dataclass(frozen=True)
class PolytopalityResult:
    signature: SurfaceSignature
    verdict: Verdict
    family: Family | None = None
    reason: Reason | None = None

    def to_json(self) -> dict:
        stable = self.verdict is not Verdict.UNSTABLE
        return {
            "signature": self.signature.to_json(),
            "stable": stable,
            "dimension": dimension(self.signature) if stable else None,
            "verdict": self.verdict.value,
            "family": str(self.family) if self.family else None,
            "reason": self.reason.value if self.reason else None,
        }


def _family(s: SurfaceSignature) -> Family | None:
    if s.g != 0:
        return None
    m = tuple(sorted(s.m, reverse=True))
    key = (s.h, s.n)
    if key == (0, 3):
        return Family("K", 2)
    if key == (1, 2) and m == (0,):
        return Family("K", 3)
    if key == (2, 1) and m == (0, 0):
        return Family("K", 4)
    if key == (3, 0) and m == (0, 0, 0):
        return Family("K", 5)
    if key == (1, 0) and m[0] >= 3:
        return Family("K", m[0] - 1)
    if key == (1, 1) and m[0] >= 1:
        return Family("W", m[0])
    if key == (2, 0) and m[0] >= 1 and m[1] == 0:
        return Family("Y", m[0])
    return None


def _reason(s: SurfaceSignature) -> Reason | None:
    if s.g > 0:
        return Reason.POSITIVE_GENUS
    if s.h + s.n > 3:
        return Reason.H_PLUS_N_GREATER_THAN_3
    if s.h + s.n == 3 and any(x > 0 for x in s.m):
        return Reason.H_PLUS_N_3_WITH_BOUNDARY_MARKS
    if s.h == 2 and s.m[0] > 0 and s.m[1] > 0:
        return Reason.TWO_MARKED_BOUNDARIES
    return None


def classify_polytopality(s: SurfaceSignature) -> PolytopalityResult:
    if not is_stable(s):
        return PolytopalityResult(s, Verdict.UNSTABLE)
    family = _family(s)
    if family is not None:
        return PolytopalityResult(s, Verdict.POLYTOPE, family=family)
    reason = _reason(s)
    if reason is None:
        raise AssertionError(f"{s} matches no family and no obstruction")
    return PolytopalityResult(s, Verdict.NOT_POLYTOPE, reason=reason)


def family_poset(family: Family) -> FacePoset:
    if family.letter == "K":
        return associahedron_poset(family.index)
    if family.letter == "W":
        return polygon_poset("B", family.index)
    return halohedron_poset(family.index)


def strata_poset(s: SurfaceSignature) -> FacePoset:
    result = classify_polytopality(s)
    if result.verdict is Verdict.UNSTABLE:
        raise SignatureError(f"{s} is not stable")
    if result.verdict is Verdict.NOT_POLYTOPE:
        raise SignatureError(f"{s} is not a polytope: {result.reason.value}")
    return family_poset(result.family)


def admits_two_loop(s: SurfaceSignature) -> bool:
    """Does the surface carry an essential interior closed curve (weight two)?

    With positive genus a nonseparating curve works. In genus zero a curve
    splits the punctures and boundary circles into two sides; each side needs
    two or more of them, or exactly one boundary circle carrying marks (a lone
    puncture gives a trivial curve, a lone unmarked circle gives a 1-loop).
    """
    if s.g > 0:
        return True
    features = ["p"] * s.n + ["marked" if x > 0 else "bare" for x in s.m]

    def heavy(side: list[str]) -> bool:
        return len(side) >= 2 or side == ["marked"]

    for bits in product((0, 1), repeat=len(features)):
        left = [f for f, b in zip(features, bits) if b == 0]
        right = [f for f, b in zip(features, bits) if b == 1]
        if heavy(left) and heavy(right):
            return True
    return False


def signatures_up_to_dimension(max_dim: int) -> list[SurfaceSignature]:
    """All stable signatures with moduli dimension at most ``max_dim``."""
    out = []
    g = 0
    while 6 * g - 6 <= max_dim:
        h = 0
        while 6 * g + 3 * h - 6 <= max_dim:
            n = 0
            while 6 * g + 3 * h - 6 + 2 * n <= max_dim:
                budget = max_dim - (6 * g + 3 * h - 6 + 2 * n)
                for marks in product(range(budget + 1), repeat=h):
                    if sum(marks) > budget:
                        continue
                    s = SurfaceSignature(g, h, n, marks)
                    if is_stable(s):
                        out.append(s)
                n += 1
            h += 1
        g += 1
    return out
