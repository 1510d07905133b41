"""Extended-precision verification of the similarity realization.

The similarity-realization conditions compare boundary points in the
Koranyi-Cygan metric, which scales like the square root of vertical
displacements.  Double-precision coordinate noise (~1e-16) therefore
floors the point-match residuals near sqrt(eps) ~ 1e-8 regardless of the
underlying identity being exact.  This module repeats the verification in
mpmath arithmetic on an exactly-on-variety sample (the third coordinate is
recomputed from (zeta1, zeta2, sign) at working precision), pushing the
residuals to the 10^-(dps-10) range and making a 1e-9 gate meaningful.

Only the involution suite uses this path; the double-precision
implementation in :mod:`crvariety.involution` remains the library surface.
"""

from __future__ import annotations

import mpmath
from mpmath import mp


def _conj(z):
    return mpmath.conj(z)


def _lift(p):
    z, t, inf = p
    if inf:
        return (mpmath.mpc(1), mpmath.mpc(0), mpmath.mpc(0))
    return (mpmath.mpc(-(z.real**2 + z.imag**2), t), mpmath.sqrt(2) * z, mpmath.mpc(1))


def _herm(a, b):
    return a[0] * _conj(b[2]) + a[1] * _conj(b[1]) + a[2] * _conj(b[0])


def _arg(z):
    return mpmath.atan2(z.imag, z.real)


def _cartan(l1, l2, l3):
    return _arg(-_herm(l1, l2) * _herm(l2, l3) * _herm(l3, l1))


def _quad_cartans(points):
    l = [_lift(p) for p in points]
    return (
        _cartan(l[1], l[2], l[3]),
        _cartan(l[0], l[2], l[3]),
        _cartan(l[0], l[1], l[3]),
        _cartan(l[0], l[1], l[2]),
    )


def _kc(p, q):
    (za, ta, fa), (zb, tb, fb) = p, q
    if fa and fb:
        return mpmath.mpf(0)
    if fa or fb:
        return mpmath.inf
    zd = za - zb
    td = ta - tb - 2 * (zb * _conj(za)).imag
    nsq = zd.real**2 + zd.imag**2
    return mpmath.sqrt(mpmath.hypot(nsq, td))


def _wrap(a):
    two_pi = 2 * mpmath.pi
    w = mpmath.fmod(a + mpmath.pi, two_pi)
    if w <= 0:
        w += two_pi
    return w - mpmath.pi


def _from_chart(z1, z2, sign):
    m1, m2 = abs(z1), abs(z2)
    arg = (m1**2 + m2**2 - 2 * (z1.real + z2.real) + 1) / (2 * m1 * m2)
    theta = mpmath.acos(arg)
    return (m2 / m1) * mpmath.exp(mpmath.mpc(0, sign * theta))


def _variety_to_quadruple(z1, z2, z3):
    w = z3
    z = (z1 + z2 / z3) / (z1 + z2 - 1)
    nsq = z.real**2 + z.imag**2
    t1 = (1 - nsq * w.real) / w.imag
    t4 = t1 * w.real - nsq * w.imag
    return (
        (z, t1, False),
        (mpmath.mpc(0), mpmath.mpf(0), True),
        (mpmath.mpc(0), mpmath.mpf(0), False),
        (mpmath.mpc(1), t4, False),
    )


def _normal_form(z1, z2, z3):
    a1, a2, a3, a4 = _quad_cartans(_variety_to_quadruple(z1, z2, z3))
    eta = _arg(1 - z1 - z2) / 2
    m3 = abs(z3)
    p1 = (
        mpmath.sqrt(mpmath.cos(a4)) * mpmath.exp(mpmath.mpc(0, -a3)),
        mpmath.sin(a4),
        False,
    )
    p4 = (
        -mpmath.sqrt(mpmath.cos(a1)) * mpmath.sqrt(m3) * mpmath.exp(mpmath.mpc(0, 2 * eta)),
        m3 * mpmath.sin(a1),
        False,
    )
    origin = (mpmath.mpc(0), mpmath.mpf(0), False)
    infinity = (mpmath.mpc(0), mpmath.mpf(0), True)
    return (p1, infinity, origin, p4), (a1, a2, a3, a4), eta


def _sim_apply(scale, angle, p):
    z, t, inf = p
    if inf:
        return p
    return (scale * mpmath.exp(mpmath.mpc(0, angle)) * z, scale**2 * t, False)


def verify_exact(zeta1: complex, zeta2: complex, sign: int, dps: int = 40) -> dict:
    """Residuals of the three similarity-realization conditions, computed at
    ``dps`` digits over the exactly-on-variety point above (zeta1, zeta2).

    Returns float residuals: the two point matches (Koranyi-Cygan), the
    rotation law of g1 g4, the dilation-rotation law of g1 g4^{-1}, and the
    Cartan swap defect.
    """
    with mp.workdps(dps):
        z1 = mpmath.mpc(zeta1)
        z2 = mpmath.mpc(zeta2)
        z3 = _from_chart(z1, z2, sign)
        z3c = _conj(z3)

        nf, cartans, eta = _normal_form(z1, z2, z3)
        nf_image, cartans_image, _ = _normal_form(z1, z2, z3c)
        a1, a2, a3, a4 = cartans
        b1, b2, b3, b4 = cartans_image

        m3 = abs(z3)
        g1 = (mpmath.sqrt(m3), _wrap(mpmath.pi + 2 * eta + a3))
        g4 = (1 / mpmath.sqrt(m3), _wrap(mpmath.pi - 2 * eta - a2))

        r_p1 = _kc(_sim_apply(g1[0], g1[1], nf[0]), nf_image[3])
        r_p4 = _kc(_sim_apply(g4[0], g4[1], nf[3]), nf_image[0])

        comp_scale = g1[0] * g4[0]
        comp_angle = _wrap(g1[1] + g4[1])
        r_cs = abs(comp_scale - 1)
        r_ca = abs(_wrap(comp_angle - _arg(z3)))

        dil_scale = g1[0] / g4[0]
        dil_angle = _wrap(g1[1] - g4[1])
        target = 2 * _arg((1 - z1 - z2) / (mpmath.sqrt(z1) * mpmath.sqrt(z2)))
        r_ds = abs(dil_scale - m3) / max(mpmath.mpf(1), m3)
        r_da = abs(_wrap(dil_angle - target))

        r_swap = max(
            abs(a1 - b4), abs(a2 - b3), abs(a3 - b2), abs(a4 - b1)
        )

        return {
            "point_match_p1_to_p4": float(r_p1),
            "point_match_p4_to_p1": float(r_p4),
            "composition_scale": float(r_cs),
            "composition_angle": float(r_ca),
            "dilation_scale": float(r_ds),
            "dilation_angle": float(r_da),
            "cartan_swap": float(r_swap),
        }
