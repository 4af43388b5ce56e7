"""orbitres: decision engine for classical nilpotent orbits.

Computes, purely from partition data, the Picard group of a nilpotent
orbit, (Q-)factoriality of its normalized closure, polarizability, and
whether the closure admits a symplectic resolution, with two independent
algorithms cross-validating every resolution verdict.
"""

from .enumeration import count_orbits, enumerate_orbits, partitions_desc
from .errors import (
    CrossCheckMismatch,
    InadmissibleQ,
    InvalidLabel,
    InvalidLieType,
    NonIntegralExponent,
    NonPositivePart,
    NotInDatabase,
    NotInImage,
    NotWeaklyDecreasing,
    OrbitresError,
    ParityMultiplicityViolation,
    ParseError,
    PartitionError,
    RankTooSmall,
    UnknownAlgebra,
    WrongFamily,
    WrongSum,
    ZeroOrbit,
)
from .hesselink import (
    NEG_INF,
    POS_INF,
    HesselinkContext,
    HesselinkReport,
    PolarizabilityResult,
    PolarizationWitness,
    N_P,
    admissible_reports,
    compute_B,
    compute_J,
    compute_j1_j0,
    compute_u,
    hesselink_report,
    in_image_Sq,
    is_admissible,
    polarizable,
    resolution_by_search,
)
from .orbits import (
    ClassicalOrbit,
    Family,
    LieType,
    Partition,
    PartitionProfile,
    VeryEvenLabel,
    is_even_orbit,
    minimal_orbit,
    orbit_dimension,
    parse_algebra,
    parse_partition,
    profile,
    validate_orbit,
)
from .picard import (
    AbelianGroupDescriptor,
    QFactorialCertificate,
    TRIVIAL_GROUP,
    UnresolvedExtension,
    is_factorial,
    picard,
    picard_bcd,
    picard_sl,
    q_factorial_certificate,
)
from .report import OrbitReport, build_report, report_json, report_text
from .resolution import (
    EXCEPTIONAL_TABLE,
    ExceptionalAlgebra,
    ExceptionalRecord,
    ResolutionVerdict,
    ResolutionWitness,
    Route,
    Verdict,
    admits_symplectic_resolution,
    closed_form_verdict,
    exceptional_table_json,
    exceptional_verdict,
    lookup_exceptional,
    springer_consistency,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupDescriptor",
    "ClassicalOrbit",
    "CrossCheckMismatch",
    "EXCEPTIONAL_TABLE",
    "ExceptionalAlgebra",
    "ExceptionalRecord",
    "Family",
    "HesselinkContext",
    "HesselinkReport",
    "InadmissibleQ",
    "InvalidLabel",
    "InvalidLieType",
    "LieType",
    "N_P",
    "NEG_INF",
    "NonIntegralExponent",
    "NonPositivePart",
    "NotInDatabase",
    "NotInImage",
    "NotWeaklyDecreasing",
    "OrbitReport",
    "OrbitresError",
    "POS_INF",
    "ParityMultiplicityViolation",
    "ParseError",
    "Partition",
    "PartitionError",
    "PartitionProfile",
    "PolarizabilityResult",
    "PolarizationWitness",
    "QFactorialCertificate",
    "RankTooSmall",
    "ResolutionVerdict",
    "ResolutionWitness",
    "Route",
    "TRIVIAL_GROUP",
    "UnknownAlgebra",
    "UnresolvedExtension",
    "Verdict",
    "VeryEvenLabel",
    "WrongFamily",
    "WrongSum",
    "ZeroOrbit",
    "admissible_reports",
    "admits_symplectic_resolution",
    "build_report",
    "closed_form_verdict",
    "compute_B",
    "compute_J",
    "compute_j1_j0",
    "compute_u",
    "count_orbits",
    "enumerate_orbits",
    "exceptional_table_json",
    "exceptional_verdict",
    "hesselink_report",
    "in_image_Sq",
    "is_admissible",
    "is_even_orbit",
    "is_factorial",
    "lookup_exceptional",
    "minimal_orbit",
    "orbit_dimension",
    "parse_algebra",
    "parse_partition",
    "partitions_desc",
    "picard",
    "picard_bcd",
    "picard_sl",
    "polarizable",
    "profile",
    "q_factorial_certificate",
    "report_json",
    "report_text",
    "resolution_by_search",
    "springer_consistency",
    "validate_orbit",
]
