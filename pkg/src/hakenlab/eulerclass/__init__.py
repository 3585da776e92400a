"""Euler numbers of surface-group representations and the doubling certificate."""

from .cocycle import (
    DEFAULT_CONTEXT,
    CocycleContext,
    RelationStatus,
    SurfaceTuple,
    commutator,
    ell,
    euler_cocycle_sum,
    euler_number,
    maximal_euler,
)
from .doubling import (
    Certificate,
    PairSystem,
    Verdict,
    certify_free_discrete,
    double_tuple,
    f_invariant,
    reflection_commuting,
)
from .pingpong import pingpong_arcs, pingpong_oracle
from .quasimorphism import (
    Lift,
    lifted_commutator_translation,
    rotation_quasimorphism_probe,
    translation_number,
)
from .twist import TwistFlowReport, goldman_discrete_twist, twist_flow_numeric

__all__ = [
    "DEFAULT_CONTEXT",
    "CocycleContext",
    "RelationStatus",
    "SurfaceTuple",
    "commutator",
    "ell",
    "euler_cocycle_sum",
    "euler_number",
    "maximal_euler",
    "Certificate",
    "PairSystem",
    "Verdict",
    "certify_free_discrete",
    "double_tuple",
    "f_invariant",
    "reflection_commuting",
    "pingpong_arcs",
    "pingpong_oracle",
    "Lift",
    "lifted_commutator_translation",
    "rotation_quasimorphism_probe",
    "translation_number",
    "TwistFlowReport",
    "goldman_discrete_twist",
    "twist_flow_numeric",
]
