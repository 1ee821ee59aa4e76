"""Trace-driven cache replacement simulator."""

from ._awrpsim import (
    DEFAULT_CAPACITIES,
    POLICIES,
    PRNG,
    AccessOutcome,
    CacheConfig,
    ComparisonTable,
    ConfigError,
    ContractViolation,
    ParseError,
    Policy,
    SimResult,
    Trace,
    awrp_weight,
    hit_ratio,
    load_trace,
    loop,
    make_policy,
    parse_csv,
    parse_trace,
    relative_gain,
    render,
    render_result,
    scan,
    simulate,
    sweep,
    zipf,
)

__all__ = [
    "DEFAULT_CAPACITIES",
    "POLICIES",
    "PRNG",
    "AccessOutcome",
    "CacheConfig",
    "ComparisonTable",
    "ConfigError",
    "ContractViolation",
    "ParseError",
    "Policy",
    "SimResult",
    "Trace",
    "awrp_weight",
    "hit_ratio",
    "load_trace",
    "loop",
    "make_policy",
    "parse_csv",
    "parse_trace",
    "relative_gain",
    "render",
    "render_result",
    "scan",
    "simulate",
    "sweep",
    "zipf",
]
