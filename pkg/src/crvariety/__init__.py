"""Boundary geometry of the complex hyperbolic plane and the cross-ratio variety.

Subpackages by topic:

* :mod:`crvariety.heisenberg`  -- Heisenberg group, Koranyi gauge, metric;
* :mod:`crvariety.frames`      -- C^{2,1} lifts, form-preserving matrices,
  quadruple normalization;
* :mod:`crvariety.invariants`  -- Cartan invariants and cross-ratios;
* :mod:`crvariety.variety`     -- defining equations, singular sets,
  involution, Levi form;
* :mod:`crvariety.cr_generic`  -- generic CR machinery (finite-difference
  oracle);
* :mod:`crvariety.charts`      -- the two chart systems and the numerical
  pseudoconformality checks;
* :mod:`crvariety.reconstruct` -- variety point <-> quadruple;
* :mod:`crvariety.involution`  -- similarity realization of the involution;
* :mod:`crvariety.harness`     -- seeded verification suites;
* :mod:`crvariety.cli`         -- the ``crvariety`` command.

The hot scalar kernels run on a compiled extension when available; set
``CRVARIETY_KERNELS=py`` to force the pure-Python fallback.
"""

from ._backend import backend_name
from .heisenberg import INFINITY, ORIGIN, BoundaryPoint
from .invariants import CartanQuad, CrossRatios, cartan, cross_ratio, triple_cross_ratios
from .variety import VarietyPoint

__all__ = [
    "BoundaryPoint",
    "CartanQuad",
    "CrossRatios",
    "INFINITY",
    "ORIGIN",
    "VarietyPoint",
    "backend_name",
    "cartan",
    "cross_ratio",
    "triple_cross_ratios",
]

__version__ = "0.1.0"
