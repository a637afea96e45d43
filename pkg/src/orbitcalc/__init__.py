"""Exact calculus of weighted orbit spaces for circle actions on 3- and 4-manifolds."""

from .classify3 import OrbitCase, SeifertOrbitData, raymond_classify, theoremA_lookup
from .classify4 import (
    SphereOnly,
    SpherePlusPoint,
    SpherePlusTwoPoints,
    TwoSpheres,
    admissible_groups,
    build_orbit_space,
    classify_config,
    classify_space,
    enumerate_arc_cases,
    euler_check,
    theoremB_lookup,
)
from .errors import (
    FixedPointFree,
    IllegalWeights,
    IncompatibleWeights,
    InternalInvariantError,
    InvariantRange,
    NoSuchCase,
    NoSuchSum,
    NotUnimodular,
    OrbitCalcError,
    UnsupportedConfiguration,
)
from .intforms import (
    IntSymMatrix,
    brute_force_congruent,
    classify,
    elementary_op,
    invariants,
    reduce_trace,
)
from .manifolds import Alternatives, ManifoldExpr, ManifoldFamily, Summand
from .orbit_data import (
    IsolatedFixedPoint,
    SeifertInvariant,
    WeightedArc,
    WeightedCircle,
    WeightedOrbitSpace,
    WeightedSphere,
    canonical_form,
    reverse_arc,
    reverse_circle,
    validate_legality,
)
from .plumbing import BundleBlock, PlumbingChain, assemble_chain, intersection_form, intersection_matrix

__version__ = "0.1.0"
