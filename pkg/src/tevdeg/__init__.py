"""Exact counts of pointed curves on low-degree hypersurfaces and P^r.

Four independent routes compute (or bound) the same counts:

* :mod:`tevdeg.engine` -- intersection theory on a projective bundle over
  the Jacobian, the general-purpose pipeline;
* :mod:`tevdeg.closed_forms` -- direct closed-form evaluation;
* :mod:`tevdeg.schubert` -- the Grassmannian integral for maps to the line
  (the oracle of record there);
* :mod:`tevdeg.quantum` -- the small quantum ring of P^r.

:mod:`tevdeg.enumerativity` certifies when the computed numbers count
honest maps, by a closed-form degree bound and an exhaustive audit of the
degeneration strata.  Everything is exact: arbitrary-precision integers
and rationals throughout, no floating point.
"""

from .closed_forms import (
    CPS_VS_SCHUBERT_DISCREPANCIES,
    AlphaList,
    HypClosedResult,
    alpha_coefficients,
    deg_T_insertions_closed,
    tev_p1_cps,
    vtev_hypersurface_closed,
    vtev_projective_closed,
)
from .engine import (
    HypParams,
    InsertionProfile,
    deg_T,
    integrate_theta,
    point_factor,
    pushforward_theta,
    step3_class,
    tev_hypersurface_engine,
)
from .enumerativity import (
    AuditReport,
    CertificationReport,
    StratumProfile,
    certify_enumerative,
    dims_check,
    enum_bound_closed,
    insertion_dims_check,
    stratum_audit,
)
from .errors import InvariantBreach, ParameterError
from .quantum import QPolyClass, qmul, quantum_euler, vtev_projective_qh
from .schubert import grassmann_integral, pieri_special, tev_p1_schubert
from .truncpoly import PolyRing, TruncPoly, UniPoly, binom

__version__ = "0.1.0"

__all__ = [
    "AlphaList",
    "AuditReport",
    "CertificationReport",
    "CPS_VS_SCHUBERT_DISCREPANCIES",
    "HypClosedResult",
    "HypParams",
    "InsertionProfile",
    "InvariantBreach",
    "ParameterError",
    "PolyRing",
    "QPolyClass",
    "StratumProfile",
    "TruncPoly",
    "UniPoly",
    "alpha_coefficients",
    "binom",
    "certify_enumerative",
    "deg_T",
    "deg_T_insertions_closed",
    "dims_check",
    "enum_bound_closed",
    "grassmann_integral",
    "insertion_dims_check",
    "integrate_theta",
    "pieri_special",
    "point_factor",
    "pushforward_theta",
    "qmul",
    "quantum_euler",
    "step3_class",
    "tev_hypersurface_engine",
    "tev_p1_cps",
    "tev_p1_schubert",
    "vtev_hypersurface_closed",
    "vtev_projective_closed",
    "vtev_projective_qh",
]
