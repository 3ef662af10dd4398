//! File formats, reports and the `rate` command for `tropical-rating`.

pub mod config;
pub mod parse;
pub mod report;

use std::io::Write;

use thiserror::Error;
use tropical_rating::{rate, validate, BigRational, Matrix, Radical, Scalar};

pub use config::{Arithmetic, CliConfig, InputFormat, OutputFormat};
pub use parse::{parse_matrix_csv, parse_matrix_json, parse_number, ParseError, ParsedMatrix};
pub use report::Report;

/// Everything `run` can fail with.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Invalid(tropical_rating::Error),
    #[error("internal limit: {0}")]
    Limit(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Limit(_) => 2,
            _ => 1,
        }
    }
}

/// Exit status of a successful run whose enumeration was cut short.
pub const EXIT_TRUNCATED: i32 = 2;

fn convert<S: Scalar>(raw: &Matrix<BigRational>) -> Result<Matrix<S>, CliError> {
    let (rows, cols) = raw.shape();
    let mut entries = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let v = S::from_rational(raw.get(i, j)).ok_or(CliError::Invalid(
                tropical_rating::Error::NonPositiveEntry { row: i, col: j },
            ))?;
            entries.push(v);
        }
    }
    Matrix::new(rows, cols, entries).map_err(CliError::Invalid)
}

fn pipeline<S: Scalar>(
    raw: &Matrix<BigRational>,
    labels: Option<Vec<String>>,
    config: &CliConfig,
) -> Result<Report, CliError> {
    let a = validate(convert::<S>(raw)?, labels.clone(), config.auto_symmetrize)
        .map_err(CliError::Invalid)?;
    let rating = rate(&a, config.selection_cap).map_err(|e| CliError::Limit(e.to_string()))?;
    Ok(Report::new(&rating, labels, config.arithmetic))
}

/// Reads, validates and rates the input described by `config`.
pub fn build_report(config: &CliConfig) -> Result<Report, CliError> {
    if config.selection_cap == 0 {
        return Err(CliError::Invalid(tropical_rating::Error::Precondition(
            "selection cap must be at least 1".into(),
        )));
    }
    let text = std::fs::read_to_string(&config.input_path).map_err(|source| CliError::Io {
        path: config.input_path.display().to_string(),
        source,
    })?;
    let parsed = match config.resolve_format(&text) {
        InputFormat::Json => parse_matrix_json(&text)?,
        _ => ParsedMatrix {
            matrix: parse_matrix_csv(&text)?,
            labels: None,
        },
    };
    let labels = config.labels.clone().or(parsed.labels);
    match config.arithmetic {
        Arithmetic::Rational => pipeline::<Radical>(&parsed.matrix, labels, config),
        Arithmetic::Float => pipeline::<f64>(&parsed.matrix, labels, config),
    }
}

/// Runs one command, writing the report to `out` and diagnostics to `err`,
/// and returns the process exit code.
pub fn run(config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match build_report(config) {
        Ok(report) => {
            let rendered = match config.output_format {
                OutputFormat::Json => report.to_json(),
                OutputFormat::Text => report.to_text(),
            };
            if let Err(e) = out
                .write_all(rendered.as_bytes())
                .and_then(|()| out.flush())
            {
                let _ = writeln!(err, "error: cannot write report: {e}");
                return 1;
            }
            if report.truncated {
                let _ = writeln!(
                    err,
                    "warning: selection cap {} reached; least differentiating families may be incomplete",
                    config.selection_cap
                );
                return EXIT_TRUNCATED;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
