//! Max-times (tropical) linear algebra and log-Chebyshev rating of
//! alternatives from pairwise comparison matrices.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod error;
mod matrix;
pub mod oracle;
mod radical;
mod rating;
mod scalar;
mod solvers;
mod spectral;

pub use error::{Error, Result};
pub use matrix::{columns_collinear, Matrix, Vector};
pub use radical::Radical;
pub use scalar::{float_close, rational_root, Scalar, FLOAT_RELATIVE_TOLERANCE};
pub use spectral::{cmp_cycle_means, spectral_radius, SpectralRadius};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use rating::{
    canonical_columns, column_contrasts, consistent_from_weights, contrast_ratio, is_consistent,
    least_differentiating, most_differentiating, objective, pivots, rate, score_family, validate,
    ComparisonMatrix, Ranking, RatingReport, Representative, ScoreFamily,
};
pub use solvers::{
    enumerate_row_selections, max_ratio_column_scores, merge_families, min_ratio_value,
    quadratic_objective, ratio_objective, same_span_columns, solve_max_ratio, solve_min_quadratic,
    solve_min_ratio, sparsify, Provenance, RowSelections, Selection, SelectionMatrix, SolveOutcome,
    SpanGenerators, DEFAULT_SELECTION_CAP,
};
