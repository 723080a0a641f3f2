"""Branch-cut-correct complex elementary functions and a conformance suite."""

from ._ccbench import (
    CapabilityError,
    CcbenchError,
    DomainError,
    NanInputError,
    ParseError,
    PoleError,
    ProtocolError,
    TimeoutError,
    UsageError,
    VersionError,
    case_ids,
    classify,
    cross_map,
    decode_bits,
    encode_bits,
    evaluate,
    evaluate_bits,
    format_params,
    joukowski,
    joukowski_inverse,
    run_suite,
    supported_precisions,
    trace_cuts_csv,
    ulp_distance,
)

FUNCTIONS = ("log", "sqrt", "asin", "acos", "atan", "asinh", "acosh", "atanh")

__all__ = [
    "FUNCTIONS",
    "CapabilityError",
    "CcbenchError",
    "DomainError",
    "NanInputError",
    "ParseError",
    "PoleError",
    "ProtocolError",
    "TimeoutError",
    "UsageError",
    "VersionError",
    "case_ids",
    "classify",
    "cross_map",
    "decode_bits",
    "encode_bits",
    "evaluate",
    "evaluate_bits",
    "format_params",
    "joukowski",
    "joukowski_inverse",
    "run_suite",
    "supported_precisions",
    "trace_cuts_csv",
    "ulp_distance",
]
