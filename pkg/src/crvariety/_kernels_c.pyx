# cython: language_level=3
"""Scalar hot-path kernels, compiled implementation.

Mirrors ``crvariety._kernels_py`` function for function; see that module
for the API contract.  Kept in lockstep by ``tests/test_backends.py``.
"""

from libc.math cimport atan2, hypot, sqrt

cdef double SQRT2 = sqrt(2.0)


cpdef tuple star(double complex za, double ta, double complex zb, double tb):
    """Heisenberg product (za,ta)*(zb,tb) = (za+zb, ta+tb+2 Im(za conj(zb)))."""
    return za + zb, ta + tb + 2.0 * (za * zb.conjugate()).imag


cpdef tuple heis_inverse(double complex z, double t):
    return -z, -t


cpdef double complex gauge(double complex z, double t):
    """Koranyi gauge |z|^2 - i t."""
    return complex(z.real * z.real + z.imag * z.imag, -t)


cpdef double kc_dist_fin(double complex za, double ta, double complex zb, double tb):
    """Koranyi-Cygan distance between two finite points."""
    cdef double complex zd = za - zb
    cdef double td = ta - tb - 2.0 * (zb * za.conjugate()).imag
    cdef double nsq = zd.real * zd.real + zd.imag * zd.imag
    return sqrt(hypot(nsq, td))


cdef inline void _lift(double complex z, double t, bint inf,
                       double complex *o1, double complex *o2, double complex *o3):
    cdef double nsq
    if inf:
        o1[0] = 1.0
        o2[0] = 0.0
        o3[0] = 0.0
    else:
        nsq = z.real * z.real + z.imag * z.imag
        o1[0] = complex(-nsq, t)
        o2[0] = SQRT2 * z
        o3[0] = 1.0


cdef inline double complex _herm(double complex a1, double complex a2, double complex a3,
                                 double complex b1, double complex b2, double complex b3):
    return a1 * b3.conjugate() + a2 * b2.conjugate() + a3 * b1.conjugate()


cpdef double complex herm_lifts(double complex a1, double complex a2, double complex a3,
                                double complex b1, double complex b2, double complex b3):
    """Signature-(2,1) Hermitian pairing of two explicit 3-vectors."""
    return _herm(a1, a2, a3, b1, b2, b3)


cpdef double cartan(double complex z1, double t1, bint f1,
                    double complex z2, double t2, bint f2,
                    double complex z3, double t3, bint f3):
    """Cartan angular invariant arg(-<p1,p2><p2,p3><p3,p1>) of a triple."""
    cdef double complex a1, a2, a3, b1, b2, b3, c1, c2, c3, w
    _lift(z1, t1, f1, &a1, &a2, &a3)
    _lift(z2, t2, f2, &b1, &b2, &b3)
    _lift(z3, t3, f3, &c1, &c2, &c3)
    w = -_herm(a1, a2, a3, b1, b2, b3) * _herm(b1, b2, b3, c1, c2, c3) \
        * _herm(c1, c2, c3, a1, a2, a3)
    return atan2(w.imag, w.real)


cpdef double complex cross_ratio(double complex z1, double t1, bint f1,
                                 double complex z2, double t2, bint f2,
                                 double complex z3, double t3, bint f3,
                                 double complex z4, double t4, bint f4):
    """Cross-ratio <p3,p1><p4,p2> / (<p4,p1><p3,p2>) through standard lifts."""
    cdef double complex a1, a2, a3, b1, b2, b3, c1, c2, c3, d1, d2, d3
    _lift(z1, t1, f1, &a1, &a2, &a3)
    _lift(z2, t2, f2, &b1, &b2, &b3)
    _lift(z3, t3, f3, &c1, &c2, &c3)
    _lift(z4, t4, f4, &d1, &d2, &d3)
    return (_herm(c1, c2, c3, a1, a2, a3) * _herm(d1, d2, d3, b1, b2, b3)) / \
           (_herm(d1, d2, d3, a1, a2, a3) * _herm(c1, c2, c3, b1, b2, b3))


cpdef tuple quad_cross_ratios(double complex z1, double t1, bint f1,
                              double complex z2, double t2, bint f2,
                              double complex z3, double t3, bint f3,
                              double complex z4, double t4, bint f4):
    """The dependent cross-ratio triple (X1, X2, X3) of a quadruple.

    X1 = X(p1,p2,p3,p4), X2 = X(p1,p3,p2,p4), X3 = X(p2,p3,p1,p4).
    """
    cdef double complex a1, a2, a3, b1, b2, b3, c1, c2, c3, d1, d2, d3
    cdef double complex h12, h13, h14, h23, h24, h34, x1, x2, x3
    _lift(z1, t1, f1, &a1, &a2, &a3)
    _lift(z2, t2, f2, &b1, &b2, &b3)
    _lift(z3, t3, f3, &c1, &c2, &c3)
    _lift(z4, t4, f4, &d1, &d2, &d3)
    h12 = _herm(a1, a2, a3, b1, b2, b3)
    h13 = _herm(a1, a2, a3, c1, c2, c3)
    h14 = _herm(a1, a2, a3, d1, d2, d3)
    h23 = _herm(b1, b2, b3, c1, c2, c3)
    h24 = _herm(b1, b2, b3, d1, d2, d3)
    h34 = _herm(c1, c2, c3, d1, d2, d3)
    x1 = (h13.conjugate() * h24.conjugate()) / (h14.conjugate() * h23.conjugate())
    x2 = (h12.conjugate() * h34.conjugate()) / (h14.conjugate() * h23)
    x3 = (h12 * h34.conjugate()) / (h24.conjugate() * h13)
    return x1, x2, x3


cpdef tuple quad_cartans(double complex z1, double t1, bint f1,
                         double complex z2, double t2, bint f2,
                         double complex z3, double t3, bint f3,
                         double complex z4, double t4, bint f4):
    """Cartan invariants (A1, A2, A3, A4) of the four sub-triples.

    A1 = A(p2,p3,p4), A2 = A(p1,p3,p4), A3 = A(p1,p2,p4), A4 = A(p1,p2,p3).
    """
    cdef double complex a1, a2, a3, b1, b2, b3, c1, c2, c3, d1, d2, d3
    cdef double complex h12, h13, h14, h23, h24, h34, w1, w2, w3, w4
    _lift(z1, t1, f1, &a1, &a2, &a3)
    _lift(z2, t2, f2, &b1, &b2, &b3)
    _lift(z3, t3, f3, &c1, &c2, &c3)
    _lift(z4, t4, f4, &d1, &d2, &d3)
    h12 = _herm(a1, a2, a3, b1, b2, b3)
    h13 = _herm(a1, a2, a3, c1, c2, c3)
    h14 = _herm(a1, a2, a3, d1, d2, d3)
    h23 = _herm(b1, b2, b3, c1, c2, c3)
    h24 = _herm(b1, b2, b3, d1, d2, d3)
    h34 = _herm(c1, c2, c3, d1, d2, d3)
    w1 = -h23 * h34 * h24.conjugate()
    w2 = -h13 * h34 * h14.conjugate()
    w3 = -h12 * h24 * h14.conjugate()
    w4 = -h12 * h23 * h13.conjugate()
    return (
        atan2(w1.imag, w1.real),
        atan2(w2.imag, w2.real),
        atan2(w3.imag, w3.real),
        atan2(w4.imag, w4.real),
    )


cpdef tuple variety_residuals(double complex x1, double complex x2, double complex x3):
    """Defining residuals (F1, F2) of the cross-ratio variety at (x1,x2,x3).

    F1 = |x2|^2 - |x1|^2 |x3|^2,
    F2 = |x1|^2 + |x2|^2 - 2 Re(x1+x2) + 1 - 2 |x1|^2 Re(x3).
    """
    cdef double n1 = x1.real * x1.real + x1.imag * x1.imag
    cdef double n2 = x2.real * x2.real + x2.imag * x2.imag
    cdef double n3 = x3.real * x3.real + x3.imag * x3.imag
    cdef double f1 = n2 - n1 * n3
    cdef double f2 = n1 + n2 - 2.0 * (x1.real + x2.real) + 1.0 - 2.0 * n1 * x3.real
    return f1, f2


cpdef tuple variety_minors(double complex x1, double complex x2, double complex x3):
    """2x2 minor subdeterminants (D23, D31, D12) of the holomorphic Jacobian.

    Closed forms valid on the variety; all three vanish exactly on the
    CR singular set.
    """
    cdef double complex c1 = x1.conjugate()
    cdef double complex c2 = x2.conjugate()
    cdef double complex c3 = x3.conjugate()
    cdef double n1 = x1.real * x1.real + x1.imag * x1.imag
    cdef double n2 = x2.real * x2.real + x2.imag * x2.imag
    cdef double n3 = x3.real * x3.real + x3.imag * x3.imag
    cdef double complex d23 = (n2 / n3) * (c2 * c3 - c2 - c3)
    cdef double complex d31 = c3 * n1 * (1.0 + c1 * c3 - c1)
    cdef double complex d12 = (c2 / x1) * (1.0 - c1 - c2)
    return d23, d31, d12


cpdef tuple levi_forms(double complex x1, double complex x2, double complex x3):
    """Levi form components (L1, L2) of the codimension-2 CR structure.

    Sandwich of the minor generator with the Wirtinger Hessians of the two
    defining functions; on the variety L1 vanishes identically and
    L2 = |x1|^2 |x2 - x3 x1|^2 > 0 away from the CR singular set.
    """
    cdef double complex d23, d31, d12, a
    d23, d31, d12 = variety_minors(x1, x2, x3)
    a = x1 * d12 + x3 * d23
    cdef double n31 = d31.real * d31.real + d31.imag * d31.imag
    cdef double n23 = d23.real * d23.real + d23.imag * d23.imag
    cdef double l1 = n31 - (a.real * a.real + a.imag * a.imag)
    cdef double l2 = (1.0 - 2.0 * x3.real) * n23 + n31 \
        - 2.0 * (x1 * d12 * d23.conjugate()).real
    return l1, l2
