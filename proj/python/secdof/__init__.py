"""Jamming precoder synthesis and secure-degrees-of-freedom simulation.

Cooperative-jamming precoders (nullspace, aligned, hybrid, interference
alignment), Monte Carlo secrecy-rate sweeps with SDoF slope fits against
the closed-form bounds, and desk-scale Wyner random-binning codes with
exact equivocation. Everything is seeded and deterministic; see the
project README for the CLI and file formats.
"""

from secdof._core import (  # noqa: F401
    ChannelSet,
    DecodeResult,
    DiscreteChannel,
    Equivocation,
    Error,
    ExperimentConfig,
    GroupPlan,
    Kind,
    PowerPolicy,
    PrecoderBuild,
    PrecoderSet,
    RateCurve,
    RateDesign,
    RatePair,
    RatePoint,
    Regime,
    Scheme,
    SdofReport,
    SlopeFit,
    StreamAllocation,
    SweepResult,
    SystemConfig,
    WiretapCode,
    achievable_sdof,
    aligned_precoders,
    build_code,
    build_precoder_set,
    classify_regime,
    complement,
    decode,
    design_rates,
    encode,
    equivocation,
    hybrid_precoders,
    ic_precoders,
    ic_upper_bound,
    intersect,
    legitimate_precoders,
    logdet_psd,
    mac_upper_bound,
    mutual_information,
    nullspace,
    nullspace_precoder,
    orth,
    parse_config,
    plan_groups,
    power_grid,
    print_config,
    rank,
    receiver_zero_forcer,
    render_csv,
    sample_channels,
    sdof_slope,
    solve,
    sum_secrecy_rate,
    sweep,
    validate_config,
)

__version__ = "0.1.0"
