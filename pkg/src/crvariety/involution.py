"""Geometric realization of the third-coordinate involution by similarities.

The involution conjugating the third cross-ratio is not induced by any
permutation of the underlying points; instead, for configurations off the
complex singular set and away from C-circles it is realized by a pair of
Heisenberg similarities fixing the origin and infinity:

    g1 = (|X3|^(1/2),  pi + 2 eta + A3),
    g4 = (|X3|^(-1/2), pi - 2 eta - A2),

acting as (z, t) -> (r e^{i phi} z, r^2 t).  In the normalized frames of
the configuration and its involution image, g1 carries p1 to the image's
p4 and g4 carries p4 to the image's p1; the composition g1 g4 is the
rotation by arg X3, and g1 g4^{-1} is the dilation by |X3| followed by
the rotation by 2 arg((1 - X1 - X2) / (X1^(1/2) X2^(1/2))).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import HypothesisFailed
from .heisenberg import BoundaryPoint, kc_distance
from .invariants import CartanQuad, angle_diff, cartan_quad, triple_cross_ratios, wrap_angle
from .reconstruct import NormalForm, cartan_from_variety, eta_of, normal_form
from .variety import VarietyPoint, involution_T
from .charts import XSTAR_TOL


@dataclass(frozen=True)
class Similarity:
    """Dilation-rotation (z, t) -> (r e^{i phi} z, r^2 t) fixing origin and infinity."""

    scale: float
    angle: float

    def __post_init__(self):
        if not self.scale > 0.0:
            raise ValueError("similarity scale must be positive")

    def apply(self, p: BoundaryPoint) -> BoundaryPoint:
        if p.infinite:
            return p
        factor = self.scale * cmath.exp(1j * self.angle)
        return BoundaryPoint(factor * p.z, self.scale ** 2 * p.t)

    def compose(self, other: "Similarity") -> "Similarity":
        return Similarity(self.scale * other.scale, wrap_angle(self.angle + other.angle))

    def inverse(self) -> "Similarity":
        return Similarity(1.0 / self.scale, wrap_angle(-self.angle))

    def matrix(self):
        """Form-preserving matrix realization (dilation then rotation)."""
        from .frames import dilation_matrix, rotation_matrix

        return rotation_matrix(self.angle) @ dilation_matrix(self.scale)


def involution_similarities(v: VarietyPoint, tol: float = XSTAR_TOL) -> tuple[Similarity, Similarity]:
    """The similarity pair (g1, g4) realizing the involution over v."""
    a = cartan_from_variety(v, tol=tol)
    eta = eta_of(v)
    m3 = abs(v.zeta3)
    g1 = Similarity(math.sqrt(m3), wrap_angle(math.pi + 2.0 * eta + a.a3))
    g4 = Similarity(1.0 / math.sqrt(m3), wrap_angle(math.pi - 2.0 * eta - a.a2))
    return g1, g4


@dataclass
class InvolutionReport:
    """Residuals of the three similarity-realization conditions."""

    point_match_p1_to_p4: float
    point_match_p4_to_p1: float
    composition_scale_residual: float
    composition_angle_residual: float
    dilation_scale_residual: float
    dilation_angle_residual: float
    cartan_swap_residual: float
    passed: bool
    tol: float


def _hypotheses(v: VarietyPoint, im_margin: float, circle_margin: float) -> None:
    if abs(v.zeta3.imag) <= im_margin:
        raise HypothesisFailed("Im(X3) != 0", "third coordinate too close to real")
    if abs(1.0 - v.zeta1 - v.zeta2) <= circle_margin:
        raise HypothesisFailed(
            "configuration off C-circles",
            "1 - X1 - X2 vanishes; a triple lies on a C-circle",
        )


def verify_involution_similarities(
    v: VarietyPoint,
    tol: float = 1e-9,
    im_margin: float = 1e-12,
    circle_margin: float = 1e-12,
) -> InvolutionReport:
    """End-to-end verification of the similarity realization at v.

    Builds normal forms of v and of its involution image, the pair
    (g1, g4), and checks the point matches, the rotation law for g1 g4,
    and the dilation-rotation law for g1 g4^{-1}.
    """
    _hypotheses(v, im_margin, circle_margin)
    w = involution_T(v)
    nf = normal_form(v)
    nf_image = normal_form(w)
    g1, g4 = involution_similarities(v)

    p1, _, _, p4 = nf.points
    q1, _, _, q4 = nf_image.points
    r_p1 = kc_distance(g1.apply(p1), q4)
    r_p4 = kc_distance(g4.apply(p4), q1)

    comp = g1.compose(g4)
    r_cs = abs(comp.scale - 1.0)
    r_ca = angle_diff(comp.angle, cmath.phase(v.zeta3))

    dil = g1.compose(g4.inverse())
    m3 = abs(v.zeta3)
    r_ds = abs(dil.scale - m3) / max(1.0, m3)
    target = 2.0 * cmath.phase(
        (1.0 - v.zeta1 - v.zeta2) / (cmath.sqrt(v.zeta1) * cmath.sqrt(v.zeta2))
    )
    r_da = angle_diff(dil.angle, target)

    a, b = nf.cartans, nf_image.cartans
    r_swap = max(
        abs(a.a1 - b.a4), abs(a.a2 - b.a3), abs(a.a3 - b.a2), abs(a.a4 - b.a1)
    )

    residuals = (r_p1, r_p4, r_cs, r_ca, r_ds, r_da, r_swap)
    return InvolutionReport(
        point_match_p1_to_p4=r_p1,
        point_match_p4_to_p1=r_p4,
        composition_scale_residual=r_cs,
        composition_angle_residual=r_ca,
        dilation_scale_residual=r_ds,
        dilation_angle_residual=r_da,
        cartan_swap_residual=r_swap,
        passed=all(r < tol for r in residuals),
        tol=tol,
    )


@dataclass
class EquivalenceReport:
    """The three equivalent characterizations of an involution pair."""

    cond_coordinates: bool
    cond_moduli_cartans: bool
    cond_eta_cartans: bool
    residuals: dict


def involution_pair_equivalences(q, q_prime, tol: float = 1e-9) -> EquivalenceReport:
    """Evaluate, for two quadruples, the three equivalent conditions tying
    them as an involution pair:

    (i)   the cross-ratio triples match with third slot conjugated;
    (ii)  |X1|, |X2| match and the Cartan invariants swap
          (A1 <-> A4', A2 <-> A3', A3 <-> A2', A4 <-> A1');
    (iii) |X3| matches, eta matches mod pi, and the Cartan invariants swap.

    Diagnostic: returns the booleans without asserting agreement.
    """
    x = triple_cross_ratios(q)
    xp = triple_cross_ratios(q_prime)
    a = cartan_quad(q)
    ap = cartan_quad(q_prime)

    r_i = max(abs(x.x1 - xp.x1), abs(x.x2 - xp.x2), abs(x.x3.conjugate() - xp.x3))

    swap = max(
        abs(a.a1 - ap.a4), abs(a.a2 - ap.a3), abs(a.a3 - ap.a2), abs(a.a4 - ap.a1)
    )
    r_ii = max(abs(abs(x.x1) - abs(xp.x1)), abs(abs(x.x2) - abs(xp.x2)), swap)

    eta = 0.5 * cmath.phase(1.0 - x.x1 - x.x2)
    eta_p = 0.5 * cmath.phase(1.0 - xp.x1 - xp.x2)
    # eta is only defined mod pi; compare the doubled angles mod 2 pi
    r_eta = angle_diff(2.0 * eta, 2.0 * eta_p)
    r_iii = max(abs(abs(x.x3) - abs(xp.x3)), r_eta, swap)

    return EquivalenceReport(
        cond_coordinates=r_i < tol,
        cond_moduli_cartans=r_ii < tol,
        cond_eta_cartans=r_iii < tol,
        residuals={"coordinates": r_i, "moduli_cartans": r_ii, "eta_cartans": r_iii},
    )
