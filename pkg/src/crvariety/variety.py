"""The cross-ratio variety in C^3: residuals, singular sets, involution, Levi form.

The variety X is cut out by the two real equations

    F1 = |z2|^2 - |z1|^2 |z3|^2 = 0,
    F2 = |z1|^2 + |z2|^2 - 2 Re(z1 + z2) + 1 - 2 |z1|^2 Re(z3) = 0,

and carries the triple (X1, X2, X3) of cross-ratios of a boundary
quadruple.  Its distinguished subsets:

* real singular set  X_R   : all coordinates real and z1 + z2 = 1,
  1/z2 + 1/z3 = 1, z3 + 1/z1 = 1 (configurations on one C-circle);
* CR singular set    X_CR  : the same three sum conditions without
  reality (first triple on a C-circle); the CR generator vanishes here;
* its conjugate      X_CR* : the sum conditions with z3 conjugated
  (last triple on a C-circle);
* complex singular set X_C : Im z3 = 0, the disjoint union of the
  branches (|z1|-|z2|)^2 = 2 Re(z1+z2) - 1 and
  (|z1|+|z2|)^2 = 2 Re(z1+z2) - 1.

The involution T conjugates the third coordinate; it maps X_CR onto
X_CR* and fixes X_C pointwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .errors import DomainError, LeviDegenerate

#: default absolute residual band for membership in a singular set
SET_TOL = 1e-8

#: default singular-value ratio below which a Jacobian rank drops
RANK_TOL = 1e-7

#: minor norms below this (relative to the coordinate scale) count as
#: lying on the CR singular set for Levi-form purposes
CR_DEGENERATE_TOL = 1e-10


@dataclass(frozen=True)
class VarietyPoint:
    """A candidate point (zeta1, zeta2, zeta3) of the cross-ratio variety."""

    zeta1: complex
    zeta2: complex
    zeta3: complex

    def as_tuple(self) -> tuple[complex, complex, complex]:
        return self.zeta1, self.zeta2, self.zeta3

    @staticmethod
    def from_cross_ratios(x) -> "VarietyPoint":
        return VarietyPoint(x.x1, x.x2, x.x3)


@dataclass
class SingularFlags:
    """Tolerance-based membership flags for the singular sets."""

    in_xr: bool
    in_xcr: bool
    in_xcr_star: bool
    in_xc: bool
    in_xc1: bool
    in_xc2: bool
    residuals: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CRGenerator:
    """The minor subdeterminants generating the CR structure."""

    d23: complex
    d31: complex
    d12: complex

    def as_vector(self) -> np.ndarray:
        return np.array([self.d23, self.d31, self.d12], dtype=complex)

    def norm(self) -> float:
        return float(np.linalg.norm(self.as_vector()))


def coordinate_scale(v: VarietyPoint) -> float:
    """Normalization scale 1 + |zeta|^2 used for residual comparisons."""
    z1, z2, z3 = v.as_tuple()
    return 1.0 + abs(z1) ** 2 + abs(z2) ** 2 + abs(z3) ** 2


def _check_nonzero(v: VarietyPoint) -> None:
    if v.zeta1 == 0 or v.zeta2 == 0 or v.zeta3 == 0:
        raise DomainError("variety coordinates must be nonzero")


def residuals(v: VarietyPoint) -> tuple[float, float]:
    """Defining residuals (F1, F2) at the candidate point."""
    _check_nonzero(v)
    return kernels.variety_residuals(*v.as_tuple())


def is_on_variety(v: VarietyPoint, tol: float = SET_TOL) -> bool:
    f1, f2 = residuals(v)
    scale = coordinate_scale(v)
    return abs(f1) <= tol * scale and abs(f2) <= tol * scale


def _require_on_variety(v: VarietyPoint, tol: float) -> None:
    if not is_on_variety(v, tol=tol):
        raise DomainError(f"point {v} is not on the variety (tol {tol})")


def set_residuals(v: VarietyPoint) -> dict:
    """Absolute residuals against each singular-set description."""
    z1, z2, z3 = v.as_tuple()
    _check_nonzero(v)
    sum12 = abs(z1 + z2 - 1.0)
    sum23 = abs(1.0 / z2 + 1.0 / z3 - 1.0)
    sum31 = abs(z3 + 1.0 / z1 - 1.0)
    sum23c = abs(1.0 / z2 + 1.0 / z3.conjugate() - 1.0)
    sum31c = abs(z3.conjugate() + 1.0 / z1 - 1.0)
    imag = max(abs(z1.imag), abs(z2.imag), abs(z3.imag))
    lhs = 2.0 * (z1.real + z2.real) - 1.0
    xc1 = abs((abs(z1) - abs(z2)) ** 2 - lhs)
    xc2 = abs((abs(z1) + abs(z2)) ** 2 - lhs)
    return {
        "XR": max(imag, sum12, sum23, sum31),
        "XCR": max(sum12, sum23, sum31),
        "XCR_star": max(sum12, sum23c, sum31c),
        "XC": abs(z3.imag),
        "XC1": xc1,
        "XC2": xc2,
    }


def classify(v: VarietyPoint, tol: float = SET_TOL, on_tol: float = SET_TOL) -> SingularFlags:
    """Singular-set membership of an on-variety point.

    A point belongs to a set when every defining residual is below ``tol``
    (absolute, coordinates normalized by 1 + |zeta|^2).  The complex
    singular set splits into two branches; the branch with the smaller
    residual is always marked, and both are marked when both fall inside
    the band.
    """
    _require_on_variety(v, on_tol)
    res = set_residuals(v)
    scale = coordinate_scale(v)
    band = tol * scale
    in_xcr = res["XCR"] <= band
    in_xcr_star = res["XCR_star"] <= band
    imag_ok = res["XR"] <= band
    in_xr = imag_ok and in_xcr and in_xcr_star
    in_xc = res["XC"] <= band
    in_xc1 = in_xc2 = False
    if in_xc:
        if res["XC1"] <= res["XC2"]:
            in_xc1 = True
            in_xc2 = res["XC2"] <= band
        else:
            in_xc2 = True
            in_xc1 = res["XC1"] <= band
    return SingularFlags(in_xr, in_xcr, in_xcr_star, in_xc, in_xc1, in_xc2, res)


def involution_T(v: VarietyPoint, on_tol: float = SET_TOL) -> VarietyPoint:
    """The involution conjugating the third coordinate; preserves the variety."""
    _require_on_variety(v, on_tol)
    return VarietyPoint(v.zeta1, v.zeta2, v.zeta3.conjugate())


def wirtinger_d10(v: VarietyPoint) -> np.ndarray:
    """Holomorphic Wirtinger Jacobian dF_i/dzeta_j (2 x 3, analytic)."""
    z1, z2, z3 = v.as_tuple()
    n1 = abs(z1) ** 2
    n3 = abs(z3) ** 2
    row1 = np.array([-z1.conjugate() * n3, z2.conjugate(), -n1 * z3.conjugate()])
    row2 = np.array(
        [
            z1.conjugate() * (1.0 - 2.0 * z3.real) - 1.0,
            z2.conjugate() - 1.0,
            -n1,
        ]
    )
    return np.vstack([row1, row2])


def real_jacobian(v: VarietyPoint) -> np.ndarray:
    """Real 2 x 6 Jacobian d(F1,F2)/d(x1,x2,x3,y1,y2,y3) from Wirtinger data."""
    d10 = wirtinger_d10(v)
    return np.hstack([2.0 * d10.real, -2.0 * d10.imag])


def jacobian_real_rank(v: VarietyPoint, tol: float = RANK_TOL,
                       on_tol: float = SET_TOL) -> int:
    """Numerical rank of the real Jacobian: 2 off X_R, below 2 on it."""
    _require_on_variety(v, on_tol)
    s = np.linalg.svd(real_jacobian(v), compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def minors(v: VarietyPoint, on_tol: float = SET_TOL) -> CRGenerator:
    """Closed-form minor subdeterminants (D23, D31, D12) at an on-variety point."""
    _require_on_variety(v, on_tol)
    return CRGenerator(*kernels.variety_minors(*v.as_tuple()))


def minors_conjugate_slot(v: VarietyPoint, on_tol: float = SET_TOL) -> CRGenerator:
    """Minors of the conjugated point: the pushforward of the generator
    under the involution, whose last slot attaches to conj(zeta3).

    Vanishes exactly on X_CR*.
    """
    _require_on_variety(v, on_tol)
    return CRGenerator(
        *kernels.variety_minors(v.zeta1, v.zeta2, v.zeta3.conjugate())
    )


def symmetric_condition_residual(v: VarietyPoint, on_tol: float = SET_TOL) -> float:
    """|D23/zeta1 - D31/zeta2 + D12/zeta3| (vanishes on the variety)."""
    g = minors(v, on_tol=on_tol)
    return abs(g.d23 / v.zeta1 - g.d31 / v.zeta2 + g.d12 / v.zeta3)


def levi(v: VarietyPoint, on_tol: float = SET_TOL,
         cr_tol: float = CR_DEGENERATE_TOL) -> tuple[float, float]:
    """Levi form (L1, L2) of the CR structure at an on-variety point.

    L1 vanishes identically on the variety and L2 equals
    |zeta1|^2 |zeta2 - zeta3 zeta1|^2 > 0.  On the CR singular set the
    generator vanishes and the form degenerates; ``LeviDegenerate`` is
    raised there.
    """
    g = minors(v, on_tol=on_tol)
    if g.norm() <= cr_tol * coordinate_scale(v):
        raise LeviDegenerate("Levi form degenerates on the CR singular set")
    return kernels.levi_forms(*v.as_tuple())


def levi_l2_closed(v: VarietyPoint) -> float:
    """The closed form |zeta1|^2 |zeta2 - zeta3 zeta1|^2 for L2."""
    z1, z2, z3 = v.as_tuple()
    return abs(z1) ** 2 * abs(z2 - z3 * z1) ** 2


def in_P(zeta1: complex, zeta2: complex) -> bool:
    """Strict membership test for the pseudoconvex domain P:
    (|zeta1| - |zeta2|)^2 < 2 Re(zeta1) + 2 Re(zeta2) - 1."""
    return (abs(zeta1) - abs(zeta2)) ** 2 < 2.0 * (zeta1.real + zeta2.real) - 1.0


def boundary_P_residual(zeta1: complex, zeta2: complex) -> float:
    """Defining function (|z1|-|z2|)^2 - 2 Re(z1+z2) + 1 of the boundary of P."""
    return (abs(zeta1) - abs(zeta2)) ** 2 - 2.0 * (zeta1.real + zeta2.real) + 1.0


def levi_P(zeta1: complex, zeta2: complex) -> float:
    """Levi value 1 + Re(zeta1 conj(zeta2)) / (|zeta1||zeta2|) of the
    boundary of P; positive away from the real locus zeta1 + zeta2 = 1."""
    if zeta1 == 0 or zeta2 == 0:
        raise DomainError("levi_P requires nonzero coordinates")
    return 1.0 + (zeta1 * zeta2.conjugate()).real / (abs(zeta1) * abs(zeta2))


def defining_system(analytic: bool = False):
    """The variety as a generic two-equation system on C^3.

    With ``analytic`` the system carries the closed-form Wirtinger
    derivatives; without it the generic machinery falls back to finite
    differences, giving an independent derivative oracle.
    """
    from .cr_generic import DefiningSystem

    def evaluate(point):
        z1, z2, z3 = (complex(c) for c in point)
        return np.array(kernels.variety_residuals(z1, z2, z3))

    wirt = None
    if analytic:
        def wirt(point):
            z1, z2, z3 = (complex(c) for c in point)
            return wirtinger_d10(VarietyPoint(z1, z2, z3))

    return DefiningSystem(n=3, k=2, eval=evaluate, wirtinger=wirt, name="cross-ratio variety")


def domain_P_system():
    """The boundary of the domain P as a one-equation system on C^2."""
    from .cr_generic import DefiningSystem

    def evaluate(point):
        z1, z2 = (complex(c) for c in point)
        return np.array([boundary_P_residual(z1, z2)])

    return DefiningSystem(n=2, k=1, eval=evaluate, name="boundary of P")


def c_circle_identity_report(x1: float, x2: float) -> dict:
    """Evaluate both candidate modulus identities for real-circle triples.

    Returns the absolute residuals of ``(x1-x2)^2 = 2 x1 + x2 - 1`` and
    ``(x1-x2)^2 = 2 (x1 + x2) - 1`` so sweeps can report which one holds;
    neither is hard-coded as an invariant.
    """
    lhs = (x1 - x2) ** 2
    return {
        "asymmetric": abs(lhs - (2.0 * x1 + x2 - 1.0)),
        "symmetric": abs(lhs - (2.0 * (x1 + x2) - 1.0)),
    }
