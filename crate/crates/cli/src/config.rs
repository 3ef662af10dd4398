use std::path::{Path, PathBuf};

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Csv,
    Json,
    /// By file extension, then by content.
    #[default]
    Auto,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Arithmetic {
    #[default]
    Rational,
    Float,
}

impl Arithmetic {
    pub fn name(self) -> &'static str {
        match self {
            Arithmetic::Rational => "rational",
            Arithmetic::Float => "float",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub input_path: PathBuf,
    pub input_format: InputFormat,
    pub arithmetic: Arithmetic,
    pub output_format: OutputFormat,
    pub selection_cap: usize,
    pub auto_symmetrize: bool,
    /// Overrides labels found in the input.
    pub labels: Option<Vec<String>>,
}

impl CliConfig {
    pub fn new(input_path: impl Into<PathBuf>) -> Self {
        CliConfig {
            input_path: input_path.into(),
            input_format: InputFormat::Auto,
            arithmetic: Arithmetic::Rational,
            output_format: OutputFormat::Text,
            selection_cap: tropical_rating::DEFAULT_SELECTION_CAP,
            auto_symmetrize: false,
            labels: None,
        }
    }

    /// Resolves `Auto` from the extension of the input path, falling back
    /// on the first non-blank character of the content.
    pub fn resolve_format(&self, content: &str) -> InputFormat {
        match self.input_format {
            InputFormat::Auto => detect_format(&self.input_path, content),
            fixed => fixed,
        }
    }
}

fn detect_format(path: &Path, content: &str) -> InputFormat {
    match path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase)
        .as_deref()
    {
        Some("json") => InputFormat::Json,
        Some("csv") => InputFormat::Csv,
        _ if content.trim_start().starts_with('{') => InputFormat::Json,
        _ => InputFormat::Csv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_detection() {
        let mut c = CliConfig::new("a.JSON");
        assert_eq!(c.resolve_format("1"), InputFormat::Json);
        c.input_path = "a.csv".into();
        assert_eq!(c.resolve_format("{"), InputFormat::Csv);
        c.input_path = "matrix".into();
        assert_eq!(c.resolve_format("  {\"matrix\": []}"), InputFormat::Json);
        assert_eq!(c.resolve_format("1,2"), InputFormat::Csv);
        c.input_format = InputFormat::Csv;
        assert_eq!(c.resolve_format("{"), InputFormat::Csv);
    }
}
