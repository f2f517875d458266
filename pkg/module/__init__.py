from .verify import (
    MIN_ELL,
    ReducibilityConfig,
    UnramifiedWitness,
    IrreducibilityEvidence,
    VerificationReport,
    unramified_at,
    tate_trace_residues,
    reducibility_exceptions,
    is_irreducible,
    matching_traces,
    good_reduction_obstruction,
    prime_to_ell_conductor,
    verify_theorem
)
from .weil import (
    ExclusionBound,
    coefficient_bound,
    enumerate_trace_polys,
    excluded_prime_bound,
    dimension_growth_table
)
from .config import RunConfig
from .report import ReportWriter, report_to_dict, report_from_dict, report_to_json, report_from_json
from .sweep import Sweeper, WeilTabulator, run_count, run_exception_table
from .fixture import FixtureChecker, CALEGARI_CURVE
