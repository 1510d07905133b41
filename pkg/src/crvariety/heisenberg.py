"""Heisenberg group arithmetic on the boundary of the complex hyperbolic plane.

The boundary is the one-point compactification of the Heisenberg group:
``C x R`` with the 2-step nilpotent product

    (z, t) * (w, s) = (z + w, t + s + 2 Im(z conj(w))),

together with the distinguished point at infinity.  The Koranyi gauge
``A(z, t) = |z|^2 - i t`` induces the Koranyi-Cygan metric
``d(p, q) = |A(q^-1 * p)|^(1/2)``, which is invariant under left
translations and rotations, scaled by dilations, and transformed by the
inversion R according to ``d(Rp, Rq) = d(p, q) / (d(p, o) d(q, o))``.

All operations are pure functions over immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import DomainError

#: default tolerance for floating comparisons (absolute near 0, else relative)
DEFAULT_TOL = 1e-9

#: points closer than this are treated as coincident by distinctness checks
DISTINCT_TOL = 1e-12


@dataclass(frozen=True)
class BoundaryPoint:
    """A point of the boundary: finite Heisenberg coordinates or infinity.

    Finite points carry a horizontal complex coordinate ``z`` and a vertical
    real coordinate ``t``; the point at infinity carries neither.
    """

    z: complex = 0j
    t: float = 0.0
    infinite: bool = False

    def __post_init__(self):
        if not self.infinite:
            if not (
                math.isfinite(self.z.real)
                and math.isfinite(self.z.imag)
                and math.isfinite(self.t)
            ):
                raise DomainError(f"non-finite components in boundary point {self!r}")
        else:
            object.__setattr__(self, "z", 0j)
            object.__setattr__(self, "t", 0.0)

    @staticmethod
    def finite(z: complex, t: float) -> "BoundaryPoint":
        return BoundaryPoint(complex(z), float(t))

    @staticmethod
    def infinity() -> "BoundaryPoint":
        return INFINITY

    @property
    def is_infinity(self) -> bool:
        return self.infinite

    def flat(self) -> tuple[complex, float, bool]:
        """Flattened ``(z, t, inf)`` form used by the scalar kernels."""
        return self.z, self.t, self.infinite

    def __repr__(self):
        if self.infinite:
            return "BoundaryPoint(inf)"
        return f"BoundaryPoint(z={self.z!r}, t={self.t!r})"


INFINITY = BoundaryPoint(infinite=True)
ORIGIN = BoundaryPoint(0j, 0.0)


def _require_finite(p: BoundaryPoint, op: str) -> None:
    if p.infinite:
        raise DomainError(f"{op} is undefined for the point at infinity")


def star(p: BoundaryPoint, q: BoundaryPoint) -> BoundaryPoint:
    """Heisenberg product p * q of two finite points."""
    _require_finite(p, "star")
    _require_finite(q, "star")
    z, t = kernels.star(p.z, p.t, q.z, q.t)
    return BoundaryPoint(z, t)


def inv(p: BoundaryPoint) -> BoundaryPoint:
    """Group inverse (z, t) -> (-z, -t)."""
    _require_finite(p, "inv")
    z, t = kernels.heis_inverse(p.z, p.t)
    return BoundaryPoint(z, t)


def gauge(p: BoundaryPoint) -> complex:
    """Koranyi gauge A(z, t) = |z|^2 - i t."""
    _require_finite(p, "gauge")
    return kernels.gauge(p.z, p.t)


def heis_norm(p: BoundaryPoint) -> float:
    """Heisenberg norm |A(p)|^(1/2)."""
    _require_finite(p, "heis_norm")
    return math.sqrt(abs(kernels.gauge(p.z, p.t)))


def kc_distance(p: BoundaryPoint, q: BoundaryPoint) -> float:
    """Koranyi-Cygan distance; ``inf`` if exactly one argument is infinite."""
    if p.infinite and q.infinite:
        return 0.0
    if p.infinite or q.infinite:
        return math.inf
    return kernels.kc_dist_fin(p.z, p.t, q.z, q.t)


def pairwise_distinct(points, tol: float = DISTINCT_TOL) -> bool:
    """True when all points are pairwise farther apart than ``tol``."""
    pts = list(points)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if kc_distance(pts[i], pts[j]) <= tol:
                return False
    return True


def translate(q: BoundaryPoint, p: BoundaryPoint) -> BoundaryPoint:
    """Left translation p -> q * p; fixes infinity."""
    _require_finite(q, "translate")
    if p.infinite:
        return INFINITY
    return star(q, p)


def rotate(phi: float, p: BoundaryPoint) -> BoundaryPoint:
    """Rotation (z, t) -> (z e^{i phi}, t); fixes infinity."""
    if p.infinite:
        return INFINITY
    return BoundaryPoint(p.z * complex(math.cos(phi), math.sin(phi)), p.t)


def dilate(r: float, p: BoundaryPoint) -> BoundaryPoint:
    """Dilation (z, t) -> (r z, r^2 t) for r > 0; fixes infinity."""
    if not r > 0.0:
        raise DomainError(f"dilation factor must be positive, got {r}")
    if p.infinite:
        return INFINITY
    return BoundaryPoint(r * p.z, r * r * p.t)


def inversion_R(p: BoundaryPoint) -> BoundaryPoint:
    """Inversion (z, t) -> (z / (-|z|^2 + it), -t / |-|z|^2 + it|^2).

    Swaps the origin and infinity.
    """
    if p.infinite:
        return ORIGIN
    if p.z == 0 and p.t == 0.0:
        return INFINITY
    denom = complex(-(p.z.real ** 2 + p.z.imag ** 2), p.t)
    return BoundaryPoint(p.z / denom, -p.t / (denom.real ** 2 + denom.imag ** 2))


def isclose(a: float, b: float, tol: float = DEFAULT_TOL) -> bool:
    """Tolerance comparison: absolute near zero, relative otherwise."""
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def points_close(p: BoundaryPoint, q: BoundaryPoint, tol: float = DEFAULT_TOL) -> bool:
    if p.infinite or q.infinite:
        return p.infinite and q.infinite
    return kc_distance(p, q) <= tol
