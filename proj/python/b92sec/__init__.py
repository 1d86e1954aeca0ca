"""Eavesdropper information for parity-announced linear codes on B92."""

from ._b92sec import (
    AttackGeometry,
    Block,
    BlockSpectrum,
    CodeError,
    CodeSpec,
    GeometryError,
    InfoReport,
    OracleReport,
    alpha_small_angle,
    block_information,
    block_spectrum,
    bms_closed_form,
    conjecture_check,
    enumerate_code_classes,
    failure_probability,
    geometry_from_alpha,
    geometry_from_error,
    hamming_bound,
    hamming_code,
    i_sum,
    i_sum_exact,
    load_code_file,
    load_code_string,
    measurement_sweep_info,
    normalized_error_rate,
    run_oracle,
    total_information,
    word_information_exact,
)

__all__ = [
    "AttackGeometry",
    "Block",
    "BlockSpectrum",
    "CodeError",
    "CodeSpec",
    "GeometryError",
    "InfoReport",
    "OracleReport",
    "alpha_small_angle",
    "block_information",
    "block_spectrum",
    "bms_closed_form",
    "conjecture_check",
    "enumerate_code_classes",
    "failure_probability",
    "geometry_from_alpha",
    "geometry_from_error",
    "hamming_bound",
    "hamming_code",
    "i_sum",
    "i_sum_exact",
    "load_code_file",
    "load_code_string",
    "measurement_sweep_info",
    "normalized_error_rate",
    "run_oracle",
    "total_information",
    "word_information_exact",
]
