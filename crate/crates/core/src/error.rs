use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the algebra, the solvers and the rating layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operand shapes are incompatible for the named operation.
    Dimension {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// Matrices and vectors must have at least one row and one column.
    Empty,
    /// Entry count does not match the declared shape.
    Shape { expected: usize, found: usize },
    /// An operation that needs a nonzero matrix or vector got an all-zero one.
    ZeroOperand(&'static str),
    /// A vector that must be regular has a zero entry.
    IrregularVector { what: &'static str, index: usize },
    /// A row that must be nonzero is all zero.
    ZeroRow { row: usize },
    /// A column that must be regular has a zero entry.
    IrregularColumn { col: usize, row: usize },
    /// The tropical spectral radius is zero, so there is no finite optimum.
    ZeroSpectralRadius,
    /// A comparison matrix entry is not strictly positive.
    NonPositiveEntry { row: usize, col: usize },
    /// `a[i][j] * a[j][i] != 1` for the listed pairs (`i <= j`).
    Reciprocity { pairs: Vec<(usize, usize)> },
    /// Label list length does not match the number of alternatives.
    LabelCount { labels: usize, alternatives: usize },
    /// A scalar has no exact representation in the chosen realization.
    Unrepresentable(String),
    /// The supplied value disagrees with the value the operation requires.
    Precondition(String),
    /// A brute-force routine refused to run past its cost guard.
    CostGuard { points: u128, limit: u128 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension { op, left, right } => write!(
                f,
                "{op}: incompatible shapes {}x{} and {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NotSquare { rows, cols } => {
                write!(f, "expected a square matrix, got {rows}x{cols}")
            }
            Error::Empty => f.write_str("matrix or vector has no entries"),
            Error::Shape { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            Error::ZeroOperand(what) => write!(f, "{what} must be nonzero"),
            Error::IrregularVector { what, index } => {
                write!(f, "{what} must be regular, entry {} is zero", index + 1)
            }
            Error::ZeroRow { row } => write!(f, "row {} is zero", row + 1),
            Error::IrregularColumn { col, row } => {
                write!(f, "column {} has a zero entry in row {}", col + 1, row + 1)
            }
            Error::ZeroSpectralRadius => f.write_str("spectral radius is zero"),
            Error::NonPositiveEntry { row, col } => {
                write!(f, "entry ({}, {}) is not positive", row + 1, col + 1)
            }
            Error::Reciprocity { pairs } => {
                f.write_str("matrix is not symmetrically reciprocal at")?;
                for (k, (i, j)) in pairs.iter().enumerate() {
                    let sep = if k == 0 { " " } else { ", " };
                    write!(f, "{sep}({}, {})/({}, {})", i + 1, j + 1, j + 1, i + 1)?;
                }
                Ok(())
            }
            Error::LabelCount {
                labels,
                alternatives,
            } => write!(f, "{labels} labels given for {alternatives} alternatives"),
            Error::Unrepresentable(msg) => write!(f, "value not representable: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::CostGuard { points, limit } => {
                write!(f, "refusing to evaluate {points} points (limit {limit})")
            }
        }
    }
}

impl core::error::Error for Error {}
