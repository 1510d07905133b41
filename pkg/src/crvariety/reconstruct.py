"""Passing between variety points and boundary quadruples.

Forward: a pairwise-distinct quadruple maps to its cross-ratio triple,
which lands on the variety.  Backward, off the complex singular set, the
projective-chart coordinates (z, w) pin down a representative quadruple

    p1 = (z1, t1), p2 = infinity, p3 = origin, p4 = (z4, t4),

with the gauge choice z4 = 1 (z1 = 1 on the z = infinity branch), the
vertical coordinates solving the two real linear equations hidden in
w = A(p4-part) / A(p1-part).  A second normal form places the quadruple
at explicit coordinates built from the Cartan invariants:

    p1 = (sqrt(cos A4) e^{-i A3}, sin A4),
    p4 = (-sqrt(cos A1) |X3|^(1/2) e^{2 i eta}, |X3| sin A1),

with 2 eta = arg(1 - X1 - X2).  Both representatives are equivalent under
the boundary isometry group.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, NotInXStar
from .heisenberg import INFINITY, ORIGIN, BoundaryPoint
from .invariants import (
    CartanQuad,
    CrossRatios,
    angle_diff,
    cartan_quad,
    triple_cross_ratios,
    wrap_angle,
)
from .variety import SET_TOL, VarietyPoint, is_on_variety
from .charts import XSTAR_TOL, to_chart_J

#: cos(Cartan) below this counts as a C-circle degeneracy for the normal form
COS_DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class NormalForm:
    """Quadruple in Cartan-invariant coordinates, p2 = infinity, p3 = origin."""

    points: tuple[BoundaryPoint, BoundaryPoint, BoundaryPoint, BoundaryPoint]
    eta: float
    cartans: CartanQuad
    x3_modulus: float


def quadruple_to_variety(q, on_tol: float = SET_TOL) -> VarietyPoint:
    """Cross-ratio triple of a quadruple, asserted to land on the variety."""
    x = triple_cross_ratios(q)
    v = VarietyPoint.from_cross_ratios(x)
    if not is_on_variety(v, tol=on_tol):
        raise DomainError("cross-ratio triple missed the variety; degenerate input")
    return v


def variety_to_quadruple(v: VarietyPoint, tol: float = XSTAR_TOL) -> tuple[BoundaryPoint, ...]:
    """Representative quadruple of a point off the complex singular set.

    Uses the projective-chart coordinates: with w = zeta3 and z the
    projective ratio, the finite branch takes z4 = 1, z1 = z and solves

        t1 = (1 - |z|^2 Re w) / Im w,   t4 = t1 Re w - |z|^2 Im w;

    on the z = infinity branch z1 = 1, z4 = 0 and

        t1 = -Re w / Im w,              t4 = t1 Re w - Im w.
    """
    c = to_chart_J(v, tol=tol)
    w = c.w
    if w.imag == 0.0:
        raise NotInXStar("reconstruction requires Im zeta3 != 0")
    if c.z_infinite:
        t1 = -w.real / w.imag
        t4 = t1 * w.real - w.imag
        p1 = BoundaryPoint(1.0 + 0j, t1)
        p4 = BoundaryPoint(0j, t4)
    else:
        z = c.z
        nsq = z.real * z.real + z.imag * z.imag
        t1 = (1.0 - nsq * w.real) / w.imag
        t4 = t1 * w.real - nsq * w.imag
        p1 = BoundaryPoint(z, t1)
        p4 = BoundaryPoint(1.0 + 0j, t4)
    return (p1, INFINITY, ORIGIN, p4)


def cartan_from_variety(v: VarietyPoint, tol: float = XSTAR_TOL) -> CartanQuad:
    """Cartan invariants of the configurations over a variety point.

    Reconstructs a representative quadruple and measures; robust and free
    of branch choices.  See :func:`cartan_from_variety_direct` for the
    closed-form route used for cross-validation.
    """
    return cartan_quad(variety_to_quadruple(v, tol=tol))


def cartan_from_variety_direct(v: VarietyPoint, tol: float = XSTAR_TOL) -> CartanQuad:
    """Closed-form Cartan recovery from the coordinates alone.

    With d = arg zeta3 and K = |1 - zeta1 - zeta2|^2 / (4 |zeta1||zeta2|),
    the sum s = A1 + A4 satisfies cos s = 2K - cos d while A4 - A1 = d.
    The sign of s is fixed by the modulus identity
    |X1 + conj(X2) - 1|^2 = 4 |X1||X2| cos A2 cos A3.
    """
    z1, z2, z3 = v.as_tuple()
    if abs(z3.imag) <= tol:
        raise NotInXStar("direct Cartan recovery requires Im zeta3 != 0")
    d = cmath.phase(z3)
    k = abs(1.0 - z1 - z2) ** 2 / (4.0 * abs(z1) * abs(z2))
    c = 2.0 * k - math.cos(d)
    if abs(c) > 1.0 + 1e-12:
        raise DomainError(f"Cartan sum equation has no solution (cos = {c})")
    c = min(1.0, max(-1.0, c))
    best = None
    best_res = math.inf
    half_pi = 0.5 * math.pi + 1e-9
    for s in (math.acos(c), -math.acos(c)):
        a1 = 0.5 * (s - d)
        a4 = 0.5 * (s + d)
        if abs(a1) > half_pi or abs(a4) > half_pi:
            continue
        a2 = wrap_angle(a1 - cmath.phase(z1))
        a3 = wrap_angle(a2 - a1 + a4)
        cand = CartanQuad(a1, a2, a3, a4)
        lhs = abs(z1 + z2.conjugate() - 1.0) ** 2
        rhs = 4.0 * abs(z1) * abs(z2) * math.cos(a2) * math.cos(a3)
        res = abs(lhs - rhs) + angle_diff(cmath.phase(z2), -a2 - a4)
        if res < best_res:
            best_res = res
            best = cand
    if best is None:
        raise DomainError("no Cartan branch matches the coordinates")
    return best


def eta_of(v: VarietyPoint) -> float:
    """Half the argument of 1 - zeta1 - zeta2, in (-pi/2, pi/2]."""
    w = 1.0 - v.zeta1 - v.zeta2
    if w == 0:
        raise DomainError("eta undefined where zeta1 + zeta2 = 1")
    return 0.5 * cmath.phase(w)


def normal_form(v: VarietyPoint, tol: float = XSTAR_TOL,
                cos_tol: float = COS_DEGENERATE_TOL) -> NormalForm:
    """Cartan-coordinate representative of a variety point.

    Requires cos A1 > 0 and cos A4 > 0 (neither leading nor trailing
    triple on a C-circle); the square roots in the coordinates vanish
    otherwise and the form degenerates.
    """
    a = cartan_from_variety(v, tol=tol)
    ca1 = math.cos(a.a1)
    ca4 = math.cos(a.a4)
    if ca1 <= cos_tol or ca4 <= cos_tol:
        raise DomainError(
            "normal form degenerates: a triple of the configuration lies on a C-circle"
        )
    eta = eta_of(v)
    m3 = abs(v.zeta3)
    phase1 = cmath.exp(-1j * a.a3)
    phase4 = cmath.exp(2j * eta)
    p1 = BoundaryPoint(math.sqrt(ca4) * phase1, math.sin(a.a4))
    p4 = BoundaryPoint(-math.sqrt(ca1) * math.sqrt(m3) * phase4, m3 * math.sin(a.a1))
    return NormalForm(points=(p1, INFINITY, ORIGIN, p4), eta=eta, cartans=a, x3_modulus=m3)


def normal_form_residual(v: VarietyPoint, tol: float = XSTAR_TOL) -> float:
    """Max componentwise distance between v and the cross-ratio triple of
    its normal form."""
    nf = normal_form(v, tol=tol)
    x = triple_cross_ratios(nf.points)
    return max(
        abs(x.x1 - v.zeta1), abs(x.x2 - v.zeta2), abs(x.x3 - v.zeta3)
    )


def eta_identities_residual(v: VarietyPoint) -> tuple[float, float]:
    """Residuals of the two eta identities:

    e^{2 i eta} = (1 - X1 - X2) / |1 - X1 - X2|   and
    2 |X1 X2|^(1/2) sqrt(cos A1 cos A4) = |1 - X1 - X2|.
    """
    a = cartan_from_variety(v)
    eta = eta_of(v)
    w = 1.0 - v.zeta1 - v.zeta2
    r1 = abs(cmath.exp(2j * eta) - w / abs(w))
    lhs = 2.0 * math.sqrt(abs(v.zeta1) * abs(v.zeta2))
    lhs *= math.sqrt(max(0.0, math.cos(a.a1) * math.cos(a.a4)))
    r2 = abs(lhs - abs(w))
    return r1, r2
