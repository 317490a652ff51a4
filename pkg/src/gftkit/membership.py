"""Grid sampling of the disk and numerical class-membership verdicts.

Verdicts are grid-relative: HOLDS means the defining strict inequality
held with margin >= eps at every sample, FAILS means some sample
violated it outright (margin < 0), and the thin band [0, eps) as well
as any evaluation failure yields UNDECIDED.  Sampling cannot certify a
"for all |z| < 1" statement; reports carry margins, not proofs.

Margins are measured in the scale natural to each class: real-part
slack for the half-plane classes, radians for the sector classes, and
lam - sup|U - 1| for the bounded-deviation class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .core import AnalyticFunction, principal_arg
from .constants import Direction, RegionKind, RegionSpec, SlitSpec
from .errors import BadGridSpec, EvaluationError, OutOfRange
from .functionals import FunctionalSpec, evaluate_functional

# 18 evenly spaced rings plus a cluster near the boundary where the
# extremes of every bounded functional concentrate; 23 rings total.
DEFAULT_RADII: tuple[float, ...] = (
    0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45, 0.50,
    0.55, 0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90,
    0.925, 0.95, 0.975, 0.99, 0.995,
)
DEFAULT_ANGLES = 720


@dataclass(frozen=True)
class DiskGrid:
    """Deterministic sampling r * exp(2 pi i k/K) of the open disk, no origin."""

    radii: tuple[float, ...]
    angles_per_ring: int

    def __post_init__(self):
        if not self.radii:
            raise BadGridSpec("need at least one radius")
        if any(not 0 < r < 1 for r in self.radii):
            raise BadGridSpec(f"radii must lie in (0, 1), got {self.radii}")
        if self.angles_per_ring < 8:
            raise BadGridSpec(f"need at least 8 angles per ring, got {self.angles_per_ring}")
        object.__setattr__(self, "radii", tuple(sorted(self.radii)))
        k = np.arange(self.angles_per_ring)
        ring = np.exp(2j * np.pi * k / self.angles_per_ring)
        pts = (np.asarray(self.radii)[:, None] * ring[None, :]).ravel()
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    @property
    def size(self) -> int:
        return len(self.radii) * self.angles_per_ring


def sample_grid(radii: Sequence[float], angles_per_ring: int) -> DiskGrid:
    return DiskGrid(tuple(float(r) for r in radii), int(angles_per_ring))


@lru_cache(maxsize=1)
def default_grid() -> DiskGrid:
    return DiskGrid(DEFAULT_RADII, DEFAULT_ANGLES)


class Verdict(Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    UNDECIDED = "UNDECIDED"


def classify(margin: float, eps: float) -> Verdict:
    if math.isnan(margin):
        return Verdict.UNDECIDED
    if margin >= eps:
        return Verdict.HOLDS
    if margin < 0:
        return Verdict.FAILS
    return Verdict.UNDECIDED


@dataclass(frozen=True)
class MembershipReport:
    verdict: Verdict
    margin: float
    witness: Optional[complex]
    samples_checked: int

    def to_json(self) -> dict:
        w = None if self.witness is None else [self.witness.real, self.witness.imag]
        return {
            "verdict": self.verdict.value,
            "margin": None if math.isnan(self.margin) else self.margin,
            "witness": w,
            "samples": self.samples_checked,
        }


class ClassKind(Enum):
    G = "G"
    P_TILT = "P_TILT"
    U = "U"
    R = "R"
    STARLIKE = "STARLIKE"
    CONVEX = "CONVEX"
    STRONGLY_STARLIKE = "STRONGLY_STARLIKE"
    M_ALPHA = "M_ALPHA"


@dataclass(frozen=True)
class ClassSpec:
    """Which defining inequality to test, with its parameters."""

    kind: ClassKind
    alpha: float = 0.0
    beta: float = 0.0
    lam: float = 0.0

    def __post_init__(self):
        k = self.kind
        if k is ClassKind.G:
            for name, v in (("alpha", self.alpha), ("beta", self.beta)):
                if not -1 < v <= 1:
                    raise OutOfRange(f"sector order {name} must lie in (-1, 1], got {v}")
        elif k is ClassKind.STRONGLY_STARLIKE:
            if not 0 < self.alpha <= 1:
                raise OutOfRange(f"strong order must lie in (0, 1], got {self.alpha}")
        elif k is ClassKind.U:
            if not 0 < self.lam <= 1:
                raise OutOfRange(f"deviation bound must lie in (0, 1], got {self.lam}")
            if not 0 < self.alpha <= 1:
                raise OutOfRange(f"exponent order must lie in (0, 1], got {self.alpha}")
        elif k is ClassKind.P_TILT:
            if not abs(self.lam) < math.pi / 2:
                raise OutOfRange(f"tilt must lie in (-pi/2, pi/2), got {self.lam}")

    @classmethod
    def g(cls, alpha: float, beta: float):
        return cls(ClassKind.G, alpha=alpha, beta=beta)

    @classmethod
    def p_tilt(cls, lam: float):
        return cls(ClassKind.P_TILT, lam=lam)

    @classmethod
    def u(cls, lam: float, alpha: float):
        return cls(ClassKind.U, lam=lam, alpha=alpha)

    @classmethod
    def r(cls):
        return cls(ClassKind.R)

    @classmethod
    def starlike(cls):
        return cls(ClassKind.STARLIKE)

    @classmethod
    def convex(cls):
        return cls(ClassKind.CONVEX)

    @classmethod
    def strongly_starlike(cls, alpha: float):
        return cls(ClassKind.STRONGLY_STARLIKE, alpha=alpha)

    @classmethod
    def m_alpha(cls, alpha: float):
        return cls(ClassKind.M_ALPHA, alpha=alpha)


def sector_margins(values: np.ndarray, alpha: float, beta: float) -> np.ndarray:
    """Pointwise distance (radians) of arg(values) to the sector edges
    -beta*pi/2 and alpha*pi/2; negative where the sector is violated.

    Principal arguments, no unwrapping: for orders <= 1 the target sector
    never wraps, so a value on the negative real axis (arg = pi) is a
    genuine violation whenever the sector misses angle pi.
    """
    args = principal_arg(values)
    upper = alpha * math.pi / 2 - args
    lower = args + beta * math.pi / 2
    return np.minimum(upper, lower)


def _min_report(pointwise: np.ndarray, points: np.ndarray, eps: float) -> MembershipReport:
    idx = int(np.argmin(pointwise))
    margin = float(pointwise[idx])
    return MembershipReport(classify(margin, eps), margin, complex(points[idx]), points.size)


def check_membership(
    spec: ClassSpec,
    f: AnalyticFunction,
    grid: Optional[DiskGrid] = None,
    eps: float = 1e-9,
) -> MembershipReport:
    """Grid verdict for the defining inequality of the selected class."""
    grid = grid or default_grid()
    z = grid.points
    try:
        k = spec.kind
        if k is ClassKind.G:
            w = np.asarray(f.eval(z, 0), dtype=complex)
            return _min_report(sector_margins(w, spec.alpha, spec.beta), z, eps)
        if k is ClassKind.STRONGLY_STARLIKE:
            # definitional identity: the sector test applied to z f'/f
            w = np.asarray(evaluate_functional(FunctionalSpec.starlike(), f, z), dtype=complex)
            return _min_report(sector_margins(w, spec.alpha, spec.alpha), z, eps)
        if k is ClassKind.P_TILT:
            w = np.asarray(f.eval(z, 0), dtype=complex)
            vals = np.real(np.exp(1j * spec.lam) * w)
            return _min_report(vals, z, eps)
        if k is ClassKind.U:
            u = np.asarray(evaluate_functional(FunctionalSpec.u_func(spec.alpha), f, z), dtype=complex)
            dev = np.abs(u - 1)
            idx = int(np.argmax(dev))
            margin = float(spec.lam - dev[idx])
            return MembershipReport(classify(margin, eps), margin, complex(z[idx]), z.size)
        if k is ClassKind.R:
            w = np.asarray(f.eval(z, 0), dtype=complex) / z
            return _min_report(np.real(w), z, eps)
        if k is ClassKind.STARLIKE:
            w = np.asarray(evaluate_functional(FunctionalSpec.starlike(), f, z), dtype=complex)
            return _min_report(np.real(w), z, eps)
        if k is ClassKind.CONVEX:
            w = np.asarray(evaluate_functional(FunctionalSpec.convex(), f, z), dtype=complex)
            return _min_report(np.real(w), z, eps)
        if k is ClassKind.M_ALPHA:
            s = np.asarray(evaluate_functional(FunctionalSpec.starlike(), f, z), dtype=complex)
            c = np.asarray(evaluate_functional(FunctionalSpec.convex(), f, z), dtype=complex)
            vals = np.real(spec.alpha * c + (1 - spec.alpha) * s)
            return _min_report(vals, z, eps)
        raise OutOfRange(f"unknown class kind {k!r}")  # pragma: no cover
    except EvaluationError as exc:
        return MembershipReport(Verdict.UNDECIDED, math.nan, exc.witness, 0)


# ----------------------------------------------------------------------
# forbidden-set predicates


class SlitCheck(NamedTuple):
    avoided: bool
    min_distance: float
    witness: complex


class RegionCheck(NamedTuple):
    contained: bool
    margin: float
    witness: complex


def ray_distances(values: np.ndarray, anchor: complex, direction: Direction) -> np.ndarray:
    """Euclidean distance of each value to the closed vertical ray."""
    values = np.asarray(values, dtype=complex)
    t = direction.value * (values.imag - anchor.imag)
    horizontal = np.abs(values.real - anchor.real)
    to_anchor = np.abs(values - anchor)
    return np.where(t >= 0, horizontal, to_anchor)


def slit_avoidance(values: Sequence[complex], slit: SlitSpec, eps: float = 1e-9) -> SlitCheck:
    """Whether every value keeps distance > eps from every ray of the slit."""
    vals = np.asarray(values, dtype=complex).ravel()
    if vals.size == 0:
        raise BadGridSpec("no values supplied")
    if not slit.rays:
        return SlitCheck(True, math.inf, complex(vals[0]))
    dist = np.full(vals.shape, np.inf)
    for ray in slit.rays:
        dist = np.minimum(dist, ray_distances(vals, ray.anchor, ray.direction))
    idx = int(np.argmin(dist))
    d = float(dist[idx])
    return SlitCheck(d > eps, d, complex(vals[idx]))


def region_containment(values: Sequence[complex], region: RegionSpec, eps: float = 1e-9) -> RegionCheck:
    """Whether every value satisfies the region inequality with slack >= eps."""
    vals = np.asarray(values, dtype=complex).ravel()
    if vals.size == 0:
        raise BadGridSpec("no values supplied")
    k = region.kind
    if k is RegionKind.HALF_PLANE:
        margins = vals.real - region.x
    elif k is RegionKind.RECTANGLE:
        margins = np.minimum(region.x - np.abs(vals.real), region.y - np.abs(vals.imag))
    elif k is RegionKind.DISK:
        margins = region.radius - np.abs(vals - region.center)
    elif k is RegionKind.ELLIPSE:
        c = region.c
        if region.major_is_x:
            total = np.abs(vals - c) + np.abs(vals + c)
            margins = 2 * region.x - total
        else:
            total = np.abs(vals - 1j * c) + np.abs(vals + 1j * c)
            margins = 2 * region.y - total
    else:  # pragma: no cover
        raise OutOfRange(f"unknown region kind {k!r}")
    idx = int(np.argmin(margins))
    m = float(margins[idx])
    return RegionCheck(m >= eps, m, complex(vals[idx]))
