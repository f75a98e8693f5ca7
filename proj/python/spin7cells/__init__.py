"""Octonion arithmetic, spin group cell charts, censuses and category bounds."""

from ._core import (
    attach_degrees,
    boundary_relations,
    cell_census,
    char_map,
    chart_projection,
    conj,
    cup_length,
    derive_mult_table,
    factorize,
    filtration_ledger,
    generator_matrix,
    invert_chart_numeric,
    invert_p0_phi7,
    inverse,
    is_g2,
    is_special_orthogonal,
    is_spin7,
    is_su4,
    join_ball_to_box,
    join_box_to_ball,
    ls_category_report,
    mult_table,
    norm,
    octonion_mul,
    poincare_polynomial,
    proj_p,
    proj_p0,
    run_verify,
    set_data_dir,
    sq2_check,
    ss_ledger_check,
    vector_rep,
    verify_boundaries_numeric,
    BoundaryError,
    ConfigError,
    InconsistencyError,
    NumericError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
