"""Exact cluster-algebra computations: mutation, unit specialisations, friezes."""

from .laurent import DivisionByZeroValue, LaurentPoly, NotExactlyDivisible
from .quiver import Quiver, kronecker_quiver, linear_quiver
from .cluster import (
    ClusterInventory,
    InconsistentSeedError,
    Seed,
    enumerate_seeds,
    exchange_binomial,
    initial_seed,
    laurent_check,
    mutate_seed,
    reachable_seeds,
)
from .specialize import (
    Gf2Solutions,
    Infeasible,
    Specialization,
    construct_specialization,
    enumerate_polyamorous,
    gf2_solve,
    is_polyamorous_algebra,
    is_polycule,
    oracle_polyamorous,
    polyamorous_vertices,
    sign_vector,
)
from .frieze import (
    Frieze,
    FriezeReport,
    NotPolyamorous,
    PolygonLabelling,
    Triangulation,
    classify_two_row_friezes,
    frieze_from_labelling,
    fundamental_domain,
    quiver_of_triangulation,
    solve_polygon,
    symbolic_frieze,
    verify_frieze,
)

__all__ = [
    "LaurentPoly",
    "NotExactlyDivisible",
    "DivisionByZeroValue",
    "Quiver",
    "linear_quiver",
    "kronecker_quiver",
    "Seed",
    "ClusterInventory",
    "InconsistentSeedError",
    "initial_seed",
    "mutate_seed",
    "exchange_binomial",
    "enumerate_seeds",
    "reachable_seeds",
    "laurent_check",
    "Specialization",
    "Infeasible",
    "Gf2Solutions",
    "is_polycule",
    "polyamorous_vertices",
    "is_polyamorous_algebra",
    "oracle_polyamorous",
    "construct_specialization",
    "gf2_solve",
    "enumerate_polyamorous",
    "sign_vector",
    "Triangulation",
    "PolygonLabelling",
    "Frieze",
    "FriezeReport",
    "NotPolyamorous",
    "quiver_of_triangulation",
    "solve_polygon",
    "symbolic_frieze",
    "frieze_from_labelling",
    "verify_frieze",
    "fundamental_domain",
    "classify_two_row_friezes",
]

__version__ = "0.1.0"
