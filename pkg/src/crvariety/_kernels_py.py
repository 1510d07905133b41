"""Scalar hot-path kernels, pure-Python implementation.

This module is the reference twin of the compiled extension
``crvariety._kernels_c``; both export the same functions with the same
argument conventions and ``crvariety._backend`` selects one at import time.

Conventions
-----------
* Boundary points enter flattened as ``(z, t, inf)``: horizontal complex
  coordinate, vertical real coordinate, and a flag that is truthy for the
  point at infinity (``z``/``t`` are ignored in that case).
* Kernels assume validated inputs (pairwise-distinct points, nonzero
  variety coordinates).  Argument checking lives in the public wrappers.
"""

import math

SQRT2 = math.sqrt(2.0)


def star(za, ta, zb, tb):
    """Heisenberg product (za,ta)*(zb,tb) = (za+zb, ta+tb+2 Im(za conj(zb)))."""
    return za + zb, ta + tb + 2.0 * (za * zb.conjugate()).imag


def heis_inverse(z, t):
    return -z, -t


def gauge(z, t):
    """Koranyi gauge |z|^2 - i t."""
    return complex(z.real * z.real + z.imag * z.imag, -t)


def kc_dist_fin(za, ta, zb, tb):
    """Koranyi-Cygan distance between two finite points."""
    zd = za - zb
    td = ta - tb - 2.0 * (zb * za.conjugate()).imag
    nsq = zd.real * zd.real + zd.imag * zd.imag
    return math.sqrt(math.hypot(nsq, td))


def _lift(z, t, inf):
    # null homogeneous representative in C^{2,1}
    if inf:
        return (1.0 + 0j, 0j, 0j)
    nsq = z.real * z.real + z.imag * z.imag
    return (complex(-nsq, t), SQRT2 * z, 1.0 + 0j)


def _herm(a, b):
    # signature (2,1) pairing <a,b> = a1 conj(b3) + a2 conj(b2) + a3 conj(b1)
    return a[0] * b[2].conjugate() + a[1] * b[1].conjugate() + a[2] * b[0].conjugate()


def herm_lifts(a1, a2, a3, b1, b2, b3):
    """Signature-(2,1) Hermitian pairing of two explicit 3-vectors."""
    return a1 * b3.conjugate() + a2 * b2.conjugate() + a3 * b1.conjugate()


def cartan(z1, t1, f1, z2, t2, f2, z3, t3, f3):
    """Cartan angular invariant arg(-<p1,p2><p2,p3><p3,p1>) of a triple."""
    l1 = _lift(z1, t1, f1)
    l2 = _lift(z2, t2, f2)
    l3 = _lift(z3, t3, f3)
    w = -_herm(l1, l2) * _herm(l2, l3) * _herm(l3, l1)
    return math.atan2(w.imag, w.real)


def cross_ratio(z1, t1, f1, z2, t2, f2, z3, t3, f3, z4, t4, f4):
    """Cross-ratio <p3,p1><p4,p2> / (<p4,p1><p3,p2>) through standard lifts."""
    l1 = _lift(z1, t1, f1)
    l2 = _lift(z2, t2, f2)
    l3 = _lift(z3, t3, f3)
    l4 = _lift(z4, t4, f4)
    return (_herm(l3, l1) * _herm(l4, l2)) / (_herm(l4, l1) * _herm(l3, l2))


def quad_cross_ratios(z1, t1, f1, z2, t2, f2, z3, t3, f3, z4, t4, f4):
    """The dependent cross-ratio triple (X1, X2, X3) of a quadruple.

    X1 = X(p1,p2,p3,p4), X2 = X(p1,p3,p2,p4), X3 = X(p2,p3,p1,p4).
    """
    l1 = _lift(z1, t1, f1)
    l2 = _lift(z2, t2, f2)
    l3 = _lift(z3, t3, f3)
    l4 = _lift(z4, t4, f4)
    h12 = _herm(l1, l2)
    h13 = _herm(l1, l3)
    h14 = _herm(l1, l4)
    h23 = _herm(l2, l3)
    h24 = _herm(l2, l4)
    h34 = _herm(l3, l4)
    x1 = (h13.conjugate() * h24.conjugate()) / (h14.conjugate() * h23.conjugate())
    x2 = (h12.conjugate() * h34.conjugate()) / (h14.conjugate() * h23)
    x3 = (h12 * h34.conjugate()) / (h24.conjugate() * h13)
    return x1, x2, x3


def quad_cartans(z1, t1, f1, z2, t2, f2, z3, t3, f3, z4, t4, f4):
    """Cartan invariants (A1, A2, A3, A4) of the four sub-triples.

    A1 = A(p2,p3,p4), A2 = A(p1,p3,p4), A3 = A(p1,p2,p4), A4 = A(p1,p2,p3).
    """
    l1 = _lift(z1, t1, f1)
    l2 = _lift(z2, t2, f2)
    l3 = _lift(z3, t3, f3)
    l4 = _lift(z4, t4, f4)
    h12 = _herm(l1, l2)
    h13 = _herm(l1, l3)
    h14 = _herm(l1, l4)
    h23 = _herm(l2, l3)
    h24 = _herm(l2, l4)
    h34 = _herm(l3, l4)
    w1 = -h23 * h34 * h24.conjugate()
    w2 = -h13 * h34 * h14.conjugate()
    w3 = -h12 * h24 * h14.conjugate()
    w4 = -h12 * h23 * h13.conjugate()
    return (
        math.atan2(w1.imag, w1.real),
        math.atan2(w2.imag, w2.real),
        math.atan2(w3.imag, w3.real),
        math.atan2(w4.imag, w4.real),
    )


def variety_residuals(x1, x2, x3):
    """Defining residuals (F1, F2) of the cross-ratio variety at (x1,x2,x3).

    F1 = |x2|^2 - |x1|^2 |x3|^2,
    F2 = |x1|^2 + |x2|^2 - 2 Re(x1+x2) + 1 - 2 |x1|^2 Re(x3).
    """
    n1 = x1.real * x1.real + x1.imag * x1.imag
    n2 = x2.real * x2.real + x2.imag * x2.imag
    n3 = x3.real * x3.real + x3.imag * x3.imag
    f1 = n2 - n1 * n3
    f2 = n1 + n2 - 2.0 * (x1.real + x2.real) + 1.0 - 2.0 * n1 * x3.real
    return f1, f2


def variety_minors(x1, x2, x3):
    """2x2 minor subdeterminants (D23, D31, D12) of the holomorphic Jacobian.

    Closed forms valid on the variety; all three vanish exactly on the
    CR singular set.
    """
    c1 = x1.conjugate()
    c2 = x2.conjugate()
    c3 = x3.conjugate()
    n1 = x1.real * x1.real + x1.imag * x1.imag
    n2 = x2.real * x2.real + x2.imag * x2.imag
    n3 = x3.real * x3.real + x3.imag * x3.imag
    d23 = (n2 / n3) * (c2 * c3 - c2 - c3)
    d31 = c3 * n1 * (1.0 + c1 * c3 - c1)
    d12 = (c2 / x1) * (1.0 - c1 - c2)
    return d23, d31, d12


def levi_forms(x1, x2, x3):
    """Levi form components (L1, L2) of the codimension-2 CR structure.

    Sandwich of the minor generator with the Wirtinger Hessians of the two
    defining functions; on the variety L1 vanishes identically and
    L2 = |x1|^2 |x2 - x3 x1|^2 > 0 away from the CR singular set.
    """
    d23, d31, d12 = variety_minors(x1, x2, x3)
    a = x1 * d12 + x3 * d23
    n31 = d31.real * d31.real + d31.imag * d31.imag
    n23 = d23.real * d23.real + d23.imag * d23.imag
    l1 = n31 - (a.real * a.real + a.imag * a.imag)
    l2 = (1.0 - 2.0 * x3.real) * n23 + n31 - 2.0 * (x1 * d12 * d23.conjugate()).real
    return l1, l2
