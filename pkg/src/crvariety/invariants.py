"""Cartan angular invariants and complex cross-ratios of boundary configurations.

For a quadruple p = (p1, p2, p3, p4) of pairwise distinct boundary points the
three dependent cross-ratios are

    X1 = X(p1,p2,p3,p4),  X2 = X(p1,p3,p2,p4),  X3 = X(p2,p3,p1,p4),

with X(q1,q2,q3,q4) = <q3,q1><q4,q2> / (<q4,q1><q3,q2>) through lifts, and
the four Cartan invariants are those of the sub-triples omitting one point,

    A1 = A(p2,p3,p4), A2 = A(p1,p3,p4), A3 = A(p1,p2,p4), A4 = A(p1,p2,p3).

Everything here is invariant under the diagonal boundary action of the
isometry group and under rescaling of lifts.  The angle identities

    arg X1 = A1 - A2,  arg X2 = -A2 - A4,  arg X3 = A4 - A1,
    A3 = A2 - A1 + A4          (all mod 2 pi)

and six modulus identities tie the two invariant families together.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import DomainError
from .heisenberg import DEFAULT_TOL, BoundaryPoint, gauge, inv, pairwise_distinct, star

#: pairwise Hermitian pairings smaller than this mark a degenerate quadruple
PAIRING_TOL = 1e-300


@dataclass(frozen=True)
class CrossRatios:
    """The dependent cross-ratio triple of a quadruple."""

    x1: complex
    x2: complex
    x3: complex

    def as_tuple(self) -> tuple[complex, complex, complex]:
        return self.x1, self.x2, self.x3


@dataclass(frozen=True)
class CartanQuad:
    """Cartan invariants of the four sub-triples, each in [-pi/2, pi/2]."""

    a1: float
    a2: float
    a3: float
    a4: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return self.a1, self.a2, self.a3, self.a4


def wrap_angle(a: float) -> float:
    """Fold an angle to the principal range (-pi, pi]."""
    w = math.fmod(a + math.pi, 2.0 * math.pi)
    if w <= 0.0:
        w += 2.0 * math.pi
    return w - math.pi


def angle_diff(a: float, b: float) -> float:
    """|a - b| measured on the circle (branch-cut safe)."""
    return abs(wrap_angle(a - b))


def _check_distinct(points, tol: float) -> None:
    if not pairwise_distinct(points, tol=tol):
        raise DomainError("points must be pairwise distinct")


def cartan(p1: BoundaryPoint, p2: BoundaryPoint, p3: BoundaryPoint,
           tol: float = 1e-12) -> float:
    """Cartan angular invariant arg(-<p1,p2><p2,p3><p3,p1>) in [-pi/2, pi/2]."""
    _check_distinct((p1, p2, p3), tol)
    return kernels.cartan(*p1.flat(), *p2.flat(), *p3.flat())


def cross_ratio(p1: BoundaryPoint, p2: BoundaryPoint, p3: BoundaryPoint,
                p4: BoundaryPoint, tol: float = 1e-12) -> complex:
    """Complex cross-ratio <p3,p1><p4,p2> / (<p4,p1><p3,p2>)."""
    _check_distinct((p1, p2, p3, p4), tol)
    x = kernels.cross_ratio(*p1.flat(), *p2.flat(), *p3.flat(), *p4.flat())
    if not (math.isfinite(x.real) and math.isfinite(x.imag)):
        raise DomainError("cross-ratio pairing vanished; configuration degenerate")
    return x


def cross_ratio_lifts(l1, l2, l3, l4) -> complex:
    """Cross-ratio from explicit (not necessarily standard) lifts."""
    from .frames import herm

    return (herm(l3, l1) * herm(l4, l2)) / (herm(l4, l1) * herm(l3, l2))


def cartan_lifts(l1, l2, l3) -> float:
    """Cartan invariant from explicit lifts."""
    from .frames import herm

    return cmath.phase(-herm(l1, l2) * herm(l2, l3) * herm(l3, l1))


def cross_ratio_koranyi(p1: BoundaryPoint, p2: BoundaryPoint, p3: BoundaryPoint,
                        p4: BoundaryPoint, tol: float = 1e-12) -> complex:
    """Gauge-based cross-ratio; independent oracle for :func:`cross_ratio`.

    Computed from Koranyi gauges of group differences as

        A(p2^-1 * p4) A(p1^-1 * p3) / (A(p1^-1 * p4) A(p2^-1 * p3)),

    with a factor pair dropped when one point is infinite.  This factor
    arrangement is the one that reproduces the lift-based cross-ratio
    exactly; it follows from <p, q> = -A(q^-1 * p) for standard lifts.
    """
    _check_distinct((p1, p2, p3, p4), tol)

    def factor(a: BoundaryPoint, b: BoundaryPoint) -> complex:
        # A(a^-1 * b); None marks a dropped infinite factor
        if a.infinite or b.infinite:
            return None
        return gauge(star(inv(a), b))

    num = [factor(p2, p4), factor(p1, p3)]
    den = [factor(p1, p4), factor(p2, p3)]
    x = 1.0 + 0j
    for f in num:
        if f is not None:
            x *= f
    for f in den:
        if f is not None:
            x /= f
    return x


def triple_cross_ratios(q, tol: float = 1e-12) -> CrossRatios:
    """The cross-ratio triple (X1, X2, X3) of a quadruple."""
    p1, p2, p3, p4 = q
    _check_distinct((p1, p2, p3, p4), tol)
    x1, x2, x3 = kernels.quad_cross_ratios(
        *p1.flat(), *p2.flat(), *p3.flat(), *p4.flat()
    )
    for x in (x1, x2, x3):
        if not (math.isfinite(x.real) and math.isfinite(x.imag)) or x == 0:
            raise DomainError("degenerate quadruple: cross-ratio vanished or diverged")
    return CrossRatios(x1, x2, x3)


def cartan_quad(q, tol: float = 1e-12) -> CartanQuad:
    """Cartan invariants of the four sub-triples of a quadruple."""
    p1, p2, p3, p4 = q
    _check_distinct((p1, p2, p3, p4), tol)
    a1, a2, a3, a4 = kernels.quad_cartans(
        *p1.flat(), *p2.flat(), *p3.flat(), *p4.flat()
    )
    return CartanQuad(a1, a2, a3, a4)


def angle_identity_residuals(x: CrossRatios, a: CartanQuad) -> tuple[float, float, float, float]:
    """Circle-distance residuals of the four angle identities.

    (arg X1 - (A1 - A2), arg X2 + A2 + A4, arg X3 - (A4 - A1),
     A3 - (A2 - A1 + A4)), all measured mod 2 pi.
    """
    return (
        angle_diff(cmath.phase(x.x1), a.a1 - a.a2),
        angle_diff(cmath.phase(x.x2), -a.a2 - a.a4),
        angle_diff(cmath.phase(x.x3), a.a4 - a.a1),
        angle_diff(a.a3, a.a2 - a.a1 + a.a4),
    )


def modulus_identity_residuals(x: CrossRatios, a: CartanQuad) -> tuple[float, ...]:
    """Absolute residuals of the six modulus identities linking X and A.

    |X1+X2-1|^2        = 4 |X1||X2| cos A1 cos A4
    |X1+conj(X2)-1|^2  = 4 |X1||X2| cos A2 cos A3
    |X3+1/X1-1|^2      = 4 (|X3|/|X1|) cos A2 cos A4
    |conj(X3)+1/X1-1|^2= 4 (|X3|/|X1|) cos A1 cos A3
    |1/X2+1/X3-1|^2    = 4 / (|X2||X3|) cos A3 cos A4
    |1/X2+1/conj(X3)-1|^2 = 4 / (|X2||X3|) cos A1 cos A2
    """
    x1, x2, x3 = x.as_tuple()
    m1, m2, m3 = abs(x1), abs(x2), abs(x3)
    c1, c2, c3, c4 = (math.cos(v) for v in a.as_tuple())
    pairs = (
        (abs(x1 + x2 - 1) ** 2, 4.0 * m1 * m2 * c1 * c4),
        (abs(x1 + x2.conjugate() - 1) ** 2, 4.0 * m1 * m2 * c2 * c3),
        (abs(x3 + 1 / x1 - 1) ** 2, 4.0 * (m3 / m1) * c2 * c4),
        (abs(x3.conjugate() + 1 / x1 - 1) ** 2, 4.0 * (m3 / m1) * c1 * c3),
        (abs(1 / x2 + 1 / x3 - 1) ** 2, (4.0 / (m2 * m3)) * c3 * c4),
        (abs(1 / x2 + 1 / x3.conjugate() - 1) ** 2, (4.0 / (m2 * m3)) * c1 * c2),
    )
    return tuple(abs(lhs - rhs) for lhs, rhs in pairs)


def alternative_description_residual(x: CrossRatios, a: CartanQuad) -> float:
    """Residual of the variety's description through moduli and Cartan angles.

    |X1|^2 + |X2|^2 = 2|X1||X2| cos(A1-A4) + 2|X1| cos(A2-A1)
                      + 2|X2| cos(A2+A4) - 1.
    """
    m1, m2 = abs(x.x1), abs(x.x2)
    rhs = (
        2.0 * m1 * m2 * math.cos(a.a1 - a.a4)
        + 2.0 * m1 * math.cos(a.a2 - a.a1)
        + 2.0 * m2 * math.cos(a.a2 + a.a4)
        - 1.0
    )
    return abs(m1 * m1 + m2 * m2 - rhs)


def modulus_law_residual(q) -> float:
    """Relative residual of |X|^(1/2) against the distance cross-ratio.

    For finite quadruples |X(p1..p4)|^(1/2) equals
    d(p4,p2) d(p3,p1) / (d(p4,p1) d(p3,p2)).
    """
    from .heisenberg import kc_distance

    p1, p2, p3, p4 = q
    x = cross_ratio(p1, p2, p3, p4)
    lhs = math.sqrt(abs(x))

    def d(a, b):
        v = kc_distance(a, b)
        return None if math.isinf(v) else v

    num = [d(p4, p2), d(p3, p1)]
    den = [d(p4, p1), d(p3, p2)]
    rhs = 1.0
    for f in num:
        if f is not None:
            rhs *= f
    for f in den:
        if f is not None:
            rhs /= f
    return abs(lhs - rhs) / max(1.0, abs(lhs))
