"""Generic CR machinery for real subvarieties of C^n cut out by k equations.

Given smooth real-valued defining functions F_1..F_k on C^n, this module
computes the holomorphic Wirtinger Jacobian dF_i/dzeta_j, and for the
hypersurface-like case k = n - 1 the single generator of the maximal
complex tangent subbundle

    Z_j = (-1)^(j+1) det( dF/dzeta with column j removed ),

together with the Levi form values L_i = Z . Hess_i . conj(Z), where
Hess_i is the mixed Wirtinger Hessian d^2 F_i / dzeta dzeta_bar.

Derivatives default to second-order central finite differences on the 2n
real coordinates (Richardson-extrapolated for Hessians); analytic
callbacks take precedence when supplied.  Complex-step differentiation is
deliberately not used: defining functions depend on conjugate coordinates
and are not holomorphic.

This module serves as the independent numerical oracle for the closed
forms in :mod:`crvariety.variety`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DomainError

#: default finite-difference step
DEFAULT_H = 1e-5


@dataclass
class DefiningSystem:
    """k real equations on C^n with optional analytic first derivatives.

    ``eval`` maps a length-n complex sequence to k real values.
    ``wirtinger``, when given, maps a point to the k x n matrix of
    holomorphic Wirtinger derivatives.
    """

    n: int
    k: int
    eval: Callable[[Sequence[complex]], np.ndarray]
    wirtinger: Optional[Callable[[Sequence[complex]], np.ndarray]] = None
    name: str = ""

    def __call__(self, point) -> np.ndarray:
        out = np.asarray(self.eval(point), dtype=float)
        if out.shape != (self.k,):
            raise DomainError(
                f"defining system {self.name!r} returned shape {out.shape}, "
                f"expected ({self.k},)"
            )
        if not np.all(np.isfinite(out)):
            raise DomainError(f"defining system {self.name!r} evaluated non-finite")
        return out


def _to_real(point) -> np.ndarray:
    pt = np.asarray(point, dtype=complex)
    return np.concatenate([pt.real, pt.imag])


def _to_complex(x: np.ndarray, n: int) -> np.ndarray:
    return x[:n] + 1j * x[n:]


def d10_matrix(sys: DefiningSystem, point, h: float = DEFAULT_H) -> np.ndarray:
    """Holomorphic Wirtinger Jacobian dF_i/dzeta_j (k x n).

    Assembles 0.5 (d/dx_j - i d/dy_j) from central differences unless the
    system carries analytic callbacks.
    """
    if sys.wirtinger is not None:
        out = np.asarray(sys.wirtinger(point), dtype=complex)
        if out.shape != (sys.k, sys.n):
            raise DomainError("analytic wirtinger callback returned a bad shape")
        return out
    x0 = _to_real(point)
    n = sys.n

    def f(x):
        return sys(_to_complex(x, n))

    cols = []
    for j in range(2 * n):
        e = np.zeros(2 * n)
        e[j] = h
        cols.append((f(x0 + e) - f(x0 - e)) / (2.0 * h))
    dx = np.array(cols[:n]).T  # k x n
    dy = np.array(cols[n:]).T
    return 0.5 * (dx - 1j * dy)


def minor_generator(sys: DefiningSystem, point, h: float = DEFAULT_H) -> np.ndarray:
    """Generator of the maximal complex subbundle for k = n - 1.

    Cofactor-signed minors of the Wirtinger Jacobian; each row of
    ``d10_matrix`` annihilates the returned vector.
    """
    if sys.k != sys.n - 1:
        raise DomainError("minor generator requires exactly n - 1 equations")
    d10 = d10_matrix(sys, point, h=h)
    z = np.zeros(sys.n, dtype=complex)
    for j in range(sys.n):
        cols = [c for c in range(sys.n) if c != j]
        z[j] = (-1.0) ** j * np.linalg.det(d10[:, cols])
    return z


def _hessian_mixed_once(sys: DefiningSystem, i: int, point, h: float) -> np.ndarray:
    # d^2 F_i / dzeta_j dzeta_bar_k from real second partials at one step size
    x0 = _to_real(point)
    n = sys.n

    def f(x):
        return float(sys(_to_complex(x, n))[i])

    def d2(a, b):
        ea = np.zeros(2 * n)
        eb = np.zeros(2 * n)
        ea[a] = h
        eb[b] = h
        return (f(x0 + ea + eb) - f(x0 + ea - eb) - f(x0 - ea + eb) + f(x0 - ea - eb)) / (
            4.0 * h * h
        )

    out = np.zeros((n, n), dtype=complex)
    for j in range(n):
        for k in range(n):
            xx = d2(j, k)
            yy = d2(n + j, n + k)
            xy = d2(j, n + k)
            yx = d2(n + j, k)
            out[j, k] = 0.25 * ((xx + yy) + 1j * (xy - yx))
    return out


def hessian_mixed(sys: DefiningSystem, i: int, point, h: float = DEFAULT_H) -> np.ndarray:
    """Mixed Wirtinger Hessian of F_i, Richardson-extrapolated over (h, h/2)."""
    coarse = _hessian_mixed_once(sys, i, point, h)
    fine = _hessian_mixed_once(sys, i, point, h / 2.0)
    return (4.0 * fine - coarse) / 3.0


def levi_general(sys: DefiningSystem, point, h: float = DEFAULT_H) -> np.ndarray:
    """Levi form values (L_1 .. L_k) for a k = n - 1 system.

    Sandwiches each mixed Hessian between the minor generator and its
    conjugate; the results are real up to roundoff.
    """
    z = minor_generator(sys, point, h=h)
    out = np.zeros(sys.k)
    for i in range(sys.k):
        hess = hessian_mixed(sys, i, point, h=h)
        val = z @ hess @ z.conjugate()
        out[i] = val.real
    return out


def annihilation_residual(sys: DefiningSystem, point, h: float = DEFAULT_H) -> float:
    """max_i |(d10 . Z)_i|, which vanishes for exact derivatives."""
    d10 = d10_matrix(sys, point, h=h)
    z = minor_generator(sys, point, h=h)
    return float(np.max(np.abs(d10 @ z)))


def convergence_ratio(
    sys: DefiningSystem, point, reference: np.ndarray, h: float = 1e-3
) -> float:
    """Error contraction of the FD minors against a reference when h halves.

    Ratios near 4 confirm second-order convergence.
    """
    ref = np.asarray(reference, dtype=complex)
    e_coarse = np.linalg.norm(minor_generator(sys, point, h=h) - ref)
    e_fine = np.linalg.norm(minor_generator(sys, point, h=h / 2.0) - ref)
    if e_fine == 0.0:
        return math.inf
    return float(e_coarse / e_fine)
