"""Chart systems on the smooth complex locus of the cross-ratio variety.

Away from the complex singular set (Im zeta3 = 0) the variety carries two
complex-manifold structures:

* the projective atlas with coordinates

      z = (zeta1 + zeta2/zeta3) / (zeta1 + zeta2 - 1),   w = zeta3,

  covering C P^1 x (C - R) with two charts (z near 0, 1/z near infinity);

* the graph atlas over the strictly pseudoconvex domain P, with
  coordinates (zeta1, zeta2) and a sign selecting the half Im zeta3 > 0
  or < 0; the third coordinate is recovered as

      zeta3 = (|zeta2|/|zeta1|) e^{+- i theta},
      theta = arccos( (|z1|^2+|z2|^2-2Re z1-2Re z2+1) / (2|z1||z2|) ).

The identity map between the two structures kills the conjugate-linear
part of its differential on a rank-1 subspace; this module verifies that
numerically (transition-map finite differences) and analytically (closed
forms for the partial derivatives of zeta3 along the graph chart).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import DomainNotInP, DomainError, NotInXStar
from .variety import (
    VarietyPoint,
    coordinate_scale,
    in_P,
    is_on_variety,
    SET_TOL,
)

#: membership threshold for the complex-singular-set complement
XSTAR_TOL = 1e-9

#: |z| above which the reciprocal projective chart is used
CHART_SWITCH = 1.0

#: default finite-difference step for transition-map derivatives
DEFAULT_H = 1e-5

#: generator norms below this flag a verification as ill-conditioned
ILL_CONDITIONED_TOL = 1e-8


@dataclass(frozen=True)
class ChartPointJ:
    """Projective-atlas coordinates: z on C P^1 (finite or infinite), w off R."""

    z: complex
    w: complex
    z_infinite: bool = False


@dataclass(frozen=True)
class ChartPointI:
    """Graph-atlas coordinates: (zeta1, zeta2) in P plus a half-space sign."""

    zeta1: complex
    zeta2: complex
    sign: int


def _require_xstar(v: VarietyPoint, tol: float) -> None:
    if abs(v.zeta3.imag) <= tol:
        raise NotInXStar("third coordinate is (numerically) real")


def to_chart_J(v: VarietyPoint, tol: float = XSTAR_TOL, on_tol: float = SET_TOL) -> ChartPointJ:
    """Projective-atlas coordinates of a point off the complex singular set.

    The ratio defining z degenerates to 0/0 exactly on the CR singular set,
    where the underlying configurations have z = 0 (first point of the
    normalized quadruple on the vertical axis); only the conjugate locus,
    where the numerator stays away from zero, sits at z = infinity.
    """
    if not is_on_variety(v, tol=on_tol):
        raise DomainError(f"{v} is not on the variety")
    _require_xstar(v, tol)
    z1, z2, z3 = v.as_tuple()
    denom = z1 + z2 - 1.0
    num = z1 + z2 / z3
    scale = coordinate_scale(v)
    if abs(denom) <= tol * scale:
        if abs(num) <= tol * scale:
            return ChartPointJ(0j, z3, z_infinite=False)
        return ChartPointJ(0j, z3, z_infinite=True)
    return ChartPointJ(num / denom, z3, z_infinite=False)


def to_chart_I(v: VarietyPoint, tol: float = XSTAR_TOL, on_tol: float = SET_TOL) -> ChartPointI:
    """Graph-atlas coordinates of a point off the complex singular set."""
    if not is_on_variety(v, tol=on_tol):
        raise DomainError(f"{v} is not on the variety")
    _require_xstar(v, tol)
    return ChartPointI(v.zeta1, v.zeta2, 1 if v.zeta3.imag > 0 else -1)


def theta_P(zeta1: complex, zeta2: complex) -> float:
    """The angle theta of the graph parametrization, in (0, pi) on P."""
    m1 = abs(zeta1)
    m2 = abs(zeta2)
    if m1 == 0.0 or m2 == 0.0:
        raise DomainNotInP("graph coordinates require nonzero zeta1, zeta2")
    arg = (m1 * m1 + m2 * m2 - 2.0 * (zeta1.real + zeta2.real) + 1.0) / (2.0 * m1 * m2)
    if not -1.0 < arg < 1.0:
        raise DomainNotInP(f"(zeta1, zeta2) outside the domain P (cos theta = {arg})")
    return math.acos(arg)


def from_chart_I(zeta1: complex, zeta2: complex, sign: int) -> VarietyPoint:
    """Variety point over (zeta1, zeta2) in P on the half selected by ``sign``."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    th = theta_P(zeta1, zeta2)
    z3 = (abs(zeta2) / abs(zeta1)) * cmath.exp(1j * sign * th)
    return VarietyPoint(zeta1, zeta2, z3)


def zeta3_partials(v: VarietyPoint, tol: float = XSTAR_TOL,
                   on_tol: float = SET_TOL) -> tuple[complex, complex, complex, complex]:
    """Closed-form graph-chart partials of the third coordinate.

    Returns (d conj(zeta3)/d zeta1, d conj(zeta3)/d zeta2,
             d zeta3/d zeta1,       d zeta3/d zeta2), with

        d conj(z3)/d z1 =  D31 / (2i Im z3 |z1|^4),
        d conj(z3)/d z2 = -D23 / (2i Im z3 |z1|^4),
        d z3/d z1       = -D31(conj slot) / (2i Im z3 |z1|^4),
        d z3/d z2       =  D23(conj slot) / (2i Im z3 |z1|^4),

    where the conjugate-slot minors are the closed forms evaluated at
    (zeta1, zeta2, conj(zeta3)).
    """
    if not is_on_variety(v, tol=on_tol):
        raise DomainError(f"{v} is not on the variety")
    _require_xstar(v, tol)
    z1, z2, z3 = v.as_tuple()
    d23, d31, _ = kernels.variety_minors(z1, z2, z3)
    d23c, d31c, _ = kernels.variety_minors(z1, z2, z3.conjugate())
    denom = 2j * z3.imag * abs(z1) ** 4
    return (d31 / denom, -d23 / denom, -d31c / denom, d23c / denom)


def pushforward_identity_residuals(v: VarietyPoint, tol: float = XSTAR_TOL) -> tuple[float, float, float, float]:
    """Residuals of the four closed-form identities tying the chart partials
    to the minors:

        (dz3/dz1) D23 + (dz3/dz2) D31               = D12,
        (dconj(z3)/dz1) D23 + (dconj(z3)/dz2) D31   = 0,
        (dz3/dz1) D23' + (dz3/dz2) D31'             = 0,
        (dconj(z3)/dz1) D23' + (dconj(z3)/dz2) D31' = D12,

    where primes denote conjugate-slot minors.
    """
    z1, z2, z3 = v.as_tuple()
    b1, b2, a1, a2 = zeta3_partials(v, tol=tol)
    d23, d31, d12 = kernels.variety_minors(z1, z2, z3)
    d23c, d31c, _ = kernels.variety_minors(z1, z2, z3.conjugate())
    return (
        abs(a1 * d23 + a2 * d31 - d12),
        abs(b1 * d23 + b2 * d31),
        abs(a1 * d23c + a2 * d31c),
        abs(b1 * d23c + b2 * d31c - d12),
    )


def _transition(v: VarietyPoint):
    """Fixed-chart transition map (zeta1, zeta2) -> (first J coordinate, w).

    The projective chart (z or 1/z) is chosen once at the base point and
    held fixed, so the closure is differentiable near it.
    """
    c = to_chart_I(v)
    base = to_chart_J(v)
    use_reciprocal = base.z_infinite or abs(base.z) > CHART_SWITCH

    def f(zeta1: complex, zeta2: complex) -> tuple[complex, complex]:
        w = from_chart_I(zeta1, zeta2, c.sign)
        z1, z2, z3 = w.as_tuple()
        num = z1 + z2 / z3
        den = z1 + z2 - 1.0
        if use_reciprocal:
            return den / num, z3
        return num / den, z3

    return f, c


def _wirtinger_block(f, zeta1, zeta2, h, conjugate_output):
    """2x2 block d out_j / d zeta_i (or of conj(out_j)) by central differences."""
    out = np.zeros((2, 2), dtype=complex)
    base = (zeta1, zeta2)
    for i in range(2):
        for step, weight in ((h, 0.5 / h), (1j * h, -0.5j / h)):
            args_p = list(base)
            args_m = list(base)
            args_p[i] += step
            args_m[i] -= step
            fp = f(*args_p)
            fm = f(*args_m)
            for j in range(2):
                vp, vm = fp[j], fm[j]
                if conjugate_output:
                    vp, vm = vp.conjugate(), vm.conjugate()
                out[j, i] += weight * (vp - vm)
    return out


@dataclass
class PscReport:
    """Numerical pseudoconformality check of the identity transition."""

    det_magnitude: float
    rank: int
    singular_values: tuple[float, float]
    generator_norm: float
    on_singular_set: bool
    ill_conditioned: bool
    h: float


def verify_psc(v: VarietyPoint, h: float = DEFAULT_H, tol_fd: float | None = None,
               tol: float = XSTAR_TOL) -> PscReport:
    """Differentiate the transition between the two atlases and test that the
    conjugate-linear block has vanishing determinant and rank one.

    On the CR singular set the horizontal generator vanishes and the
    structure degenerates; the report flags this (``on_singular_set``,
    ``ill_conditioned``) instead of raising.  Note the degeneracy shows in
    the generator norm, not in the block rank: the row of the projective
    coordinate stays nonzero across the singular set.
    """
    if tol_fd is None:
        tol_fd = h
    f, c = _transition(v)
    block = _wirtinger_block(f, c.zeta1, c.zeta2, h, conjugate_output=True)
    det = block[0, 0] * block[1, 1] - block[0, 1] * block[1, 0]
    s = np.linalg.svd(block, compute_uv=False)
    if s[0] <= tol_fd:
        rank = 0
    elif s[1] <= tol_fd * max(1.0, s[0]):
        rank = 1
    else:
        rank = 2
    d23, d31, _ = kernels.variety_minors(*v.as_tuple())
    gen_norm = math.hypot(abs(d23), abs(d31))
    scale = coordinate_scale(v)
    return PscReport(
        det_magnitude=float(abs(det)),
        rank=rank,
        singular_values=(float(s[0]), float(s[1])),
        generator_norm=gen_norm,
        on_singular_set=gen_norm <= SET_TOL * scale,
        ill_conditioned=gen_norm < ILL_CONDITIONED_TOL,
        h=h,
    )


@dataclass
class SpscReport:
    """Numerical check that the horizontal generator pushes forward
    holomorphically and the vertical one antiholomorphically."""

    horizontal_residual: float
    vertical_residual: float
    ill_conditioned: bool
    h: float


def verify_spsc_split(v: VarietyPoint, h: float = DEFAULT_H,
                      tol: float = XSTAR_TOL) -> SpscReport:
    """Push the horizontal generator (D23, D31) through the conjugate-linear
    block and the vertical generator (conjugate-slot minors) through the
    complex-linear block; both image norms vanish up to FD error.
    """
    f, c = _transition(v)
    z1, z2, z3 = v.as_tuple()
    d23, d31, _ = kernels.variety_minors(z1, z2, z3)
    d23c, d31c, _ = kernels.variety_minors(z1, z2, z3.conjugate())
    anti = _wirtinger_block(f, c.zeta1, c.zeta2, h, conjugate_output=True)
    holo = _wirtinger_block(f, c.zeta1, c.zeta2, h, conjugate_output=False)
    zi = np.array([d23, d31])
    wi = np.array([d23c, d31c])
    res_h = float(np.linalg.norm(anti @ zi))
    res_v = float(np.linalg.norm(holo @ wi))
    gen_norm = float(np.linalg.norm(zi))
    return SpscReport(
        horizontal_residual=res_h,
        vertical_residual=res_v,
        ill_conditioned=gen_norm < ILL_CONDITIONED_TOL,
        h=h,
    )


def verify_embedding_pushforward(v: VarietyPoint, tol: float = XSTAR_TOL) -> float:
    """Residual of the chain-rule pushforward of both generators into C^3.

    The horizontal generator must land on the full minor vector
    (D23, D31, D12) with vanishing conjugate component, and the vertical
    one on the conjugate-slot vector with vanishing holomorphic third
    component.  Returns the maximum componentwise residual.
    """
    z1, z2, z3 = v.as_tuple()
    b1, b2, a1, a2 = zeta3_partials(v, tol=tol)
    d23, d31, d12 = kernels.variety_minors(z1, z2, z3)
    d23c, d31c, _ = kernels.variety_minors(z1, z2, z3.conjugate())
    res = [
        abs(a1 * d23 + a2 * d31 - d12),  # third slot of the horizontal image
        abs(b1 * d23 + b2 * d31),        # conjugate slot of the horizontal image
        abs(a1 * d23c + a2 * d31c),      # third slot of the vertical image
        abs(b1 * d23c + b2 * d31c - d12),  # conjugate slot of the vertical image
    ]
    return max(res)


def chordal(a: complex | None, b: complex | None) -> float:
    """Chordal distance on C P^1; ``None`` stands for infinity."""
    if a is None and b is None:
        return 0.0
    if a is None:
        return 1.0 / math.sqrt(1.0 + abs(b) ** 2)
    if b is None:
        return 1.0 / math.sqrt(1.0 + abs(a) ** 2)
    return abs(a - b) / math.sqrt((1.0 + abs(a) ** 2) * (1.0 + abs(b) ** 2))


def involution_J_residual(v: VarietyPoint, tol: float = XSTAR_TOL) -> float:
    """Residual of the involution's projective-chart expression
    (z, w) -> (1/conj(w z), conj(w)), chordal in the first slot."""
    from .variety import involution_T

    c = to_chart_J(v, tol=tol)
    ct = to_chart_J(involution_T(v), tol=tol)
    lhs = None if ct.z_infinite else ct.z
    if c.z_infinite:
        expected = 0j
    elif c.z == 0:
        expected = None
    else:
        expected = 1.0 / (c.w.conjugate() * c.z.conjugate())
    return chordal(lhs, expected) + abs(ct.w - c.w.conjugate())
