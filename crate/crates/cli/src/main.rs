use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tropical_rating_cli::{run, Arithmetic, CliConfig, InputFormat, OutputFormat};

#[derive(Parser)]
#[command(
    name = "tropical-rating",
    version,
    about = "Rate alternatives from a pairwise comparison matrix"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the optimal score family and its extreme representatives.
    Rate(RateArgs),
}

#[derive(Args)]
struct RateArgs {
    /// CSV or JSON file holding the comparison matrix.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
    #[arg(long, value_enum, default_value_t = Arithmetic::Rational)]
    arith: Arithmetic,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    out: OutputFormat,
    /// Maximum number of row selections examined for the least
    /// differentiating vector.
    #[arg(long, default_value_t = tropical_rating::DEFAULT_SELECTION_CAP,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    cap: usize,
    /// Replace each lower-triangle entry by the reciprocal of its mirror.
    #[arg(long)]
    auto_symmetrize: bool,
    /// Comma-separated names, one per alternative.
    #[arg(long, value_delimiter = ',')]
    labels: Option<Vec<String>>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let Command::Rate(args) = cli.command;
    let config = CliConfig {
        input_path: args.input,
        input_format: args.format,
        arithmetic: args.arith,
        output_format: args.out,
        selection_cap: args.cap,
        auto_symmetrize: args.auto_symmetrize,
        labels: args.labels,
    };
    let code = run(
        &config,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
