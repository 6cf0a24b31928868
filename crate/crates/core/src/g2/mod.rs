//! g2 in its faithful 7-dimensional representation: the Chevalley basis,
//! the generic nilpotent `X(a, .., f)`, the rank-sequence case analysis and
//! the resulting Kirillov polynomials.

mod basis;
mod cases;
mod census;
mod interpolate;
mod kernel;
mod springer;

pub use basis::{
    bracket, build_chevalley, verify_displayed_powers, EntryMismatch, G2Basis, IntMat,
    PowersReport, Root, SymMatrix, DIM, DISPLAYED_POWERS, DISPLAYED_X,
};
pub use cases::{
    case_count_polynomials, case_of, closed_form_case_counts, discriminant_structure, fmt_ranks,
    partition_of_ranks, predicted_rank_sequence, theorem1_complement, theorem1_polynomials,
    AuxCount, CaseKey, ClosedFormLabel, DiscriminantTally, G2Params, RankSeq, SEQ_20, SEQ_41,
    SEQ_42, SEQ_REGULAR, SEQ_ZERO,
};
pub use census::{g2_census, x_of, CensusReport};
pub use interpolate::{g2_interpolate, InterpolationMode, InterpolationReport, DEFAULT_ORDERS};
pub use springer::{springer_check, springer_table, SpringerCheck, SpringerRow};

/// Number of conjugacy classes of the Chevalley group `G2(q)`, `p > 3`.
/// Recorded for reference only.
pub fn group_class_count() -> crate::intpoly::IntPoly {
    crate::intpoly::IntPoly::from_i64s(&[-1, -1, 2, 1])
}
