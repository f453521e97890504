"""Exact numerics for rank-2 instanton bundles on P(O + O(e)) over P².

Submodules:

* ``chow``       — the Chow ring Z[xi,f]/(f^3, xi^2 - e xi f), Chern-class
                   calculus, both Riemann-Roch routes;
* ``cohomology`` — closed-form cohomology of line bundles and Omega twists,
                   formal direct sums, exact-sequence utilities;
* ``beilinson``  — dual exceptional collections, orthogonality and
                   strongness verification, instanton tables and monads;
* ``instanton``  — vanishing regions, stability test region, curve and Ext
                   bookkeeping, the existence decision procedure;
* ``verification`` — the cross-check suites behind ``scrollcalc verify``;
* ``cli``        — the command-line interface.
"""

from . import beilinson, chow, cohomology, instanton, verification
from .chow import ChernData, ChowClass
from .cohomology import CohVector, FormalSheaf, Summand
from .instanton import ExistenceReport, InstantonParams

__version__ = "0.1.0"

__all__ = [
    "ChernData",
    "ChowClass",
    "CohVector",
    "ExistenceReport",
    "FormalSheaf",
    "InstantonParams",
    "Summand",
    "beilinson",
    "chow",
    "cohomology",
    "instanton",
    "verification",
]
