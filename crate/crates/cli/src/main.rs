//! `algcoh`: derivations, first cohomology and triangular representations of
//! finite-dimensional algebras and their trivial extensions.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on an
//! input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use algcoh_core::algebra::Algebra;
use algcoh_core::bimodule::Bimodule;
use algcoh_core::cohomology::full_report;
use algcoh_core::field::{Field, FieldSpec, PrimeField, Rationals};
use algcoh_core::fixtures::{self, zero_one_vectors};
use algcoh_core::io;
use algcoh_core::report::{self, Format, Report, DEFAULT_MAX_ENUM};
use algcoh_core::trivext::{IdempotentSource, TrivialExtension};

#[derive(Parser, Debug)]
#[command(name = "algcoh", version, about = "Derivations and first cohomology of trivial extension algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient field: a prime p or `Q`. Defaults to the field declared
    /// in the algebra file (2 for fixtures).
    #[arg(long, global = true)]
    field: Option<String>,

    /// Largest number of elements enumerated in idempotent searches.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ENUM)]
    max_enum: u64,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Machine,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate an algebra and, optionally, a bimodule over it.
    Validate(Inputs),
    /// Center of the trivial extension, computed directly and by formula.
    Center(Inputs),
    /// Derivation spaces of (A, M).
    Derivations(Inputs),
    /// Cohomology report, exact sequence and all-inner criterion for A ⋉ M.
    Cohomology(Inputs),
    /// Triangular representation search and the triangularizing element c.
    Triangular(Inputs),
    /// Print A ⋉ M in the algebra file format.
    Export(Inputs),
    /// Run the full battery on a built-in fixture.
    Fixture {
        /// One of the registered fixture names.
        name: String,
    },
    /// Run every golden assertion.
    CheckPaper {
        /// Swap the left and right actions of this fixture's bimodule first.
        #[arg(long)]
        corrupt: Option<String>,
    },
}

#[derive(clap::Args, Debug)]
struct Inputs {
    /// Algebra presentation file.
    algebra: PathBuf,
    /// Bimodule presentation file; the regular bimodule when omitted.
    bimodule: Option<PathBuf>,
}

enum Outcome {
    Report(Report),
    Raw(String),
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_field(text: &str) -> Result<FieldSpec, String> {
    text.parse::<FieldSpec>().map_err(|e| format!("--field: {e}"))
}

fn load<F: Field>(field: &F, inputs: &Inputs) -> Result<(Arc<Algebra<F>>, Bimodule<F>), String> {
    let text = read(&inputs.algebra)?;
    let algebra = Arc::new(io::parse_algebra(&text, field).map_err(|e| format!("{}: {e}", inputs.algebra.display()))?);
    let module = match &inputs.bimodule {
        Some(path) => io::parse_bimodule(&read(path)?, algebra.clone()).map_err(|e| format!("{}: {e}", path.display()))?,
        None => Bimodule::regular(algebra.clone()),
    };
    Ok((algebra, module))
}

fn source_for<F: Field>(field: &F, dim: usize, cap: u64) -> IdempotentSource<F> {
    if field.order().is_some() {
        IdempotentSource::Exhaustive { cap }
    } else {
        IdempotentSource::Candidates(zero_one_vectors(field, dim))
    }
}

fn run_with<F: Field>(field: &F, cli: &Cli) -> Result<Outcome, String> {
    let cap = cli.max_enum;
    let extension = |inputs: &Inputs| -> Result<TrivialExtension<F>, String> {
        let (a, m) = load(field, inputs)?;
        TrivialExtension::new(a, m).map_err(|e| e.to_string())
    };
    Ok(match &cli.command {
        Command::Validate(inputs) => {
            let (a, m) = load(field, inputs)?;
            Outcome::Report(report::validate_report(&a, inputs.bimodule.as_ref().map(|_| &m)))
        }
        Command::Center(inputs) => Outcome::Report(report::center_report(&extension(inputs)?)),
        Command::Derivations(inputs) => {
            let (_, m) = load(field, inputs)?;
            Outcome::Report(report::derivations_report(&m))
        }
        Command::Cohomology(inputs) => {
            let ext = extension(inputs)?;
            Outcome::Report(report::cohomology_only(&ext, &full_report(&ext)))
        }
        Command::Triangular(inputs) => {
            let ext = extension(inputs)?;
            let source = source_for(field, ext.base_dim(), cap);
            Outcome::Report(report::triangular_report(&ext, &source).0)
        }
        Command::Export(inputs) => Outcome::Raw(io::export_extension(&extension(inputs)?)),
        Command::Fixture { name } => {
            let fx = fixtures::build(name, field).map_err(|e| e.to_string())?;
            Outcome::Report(report::fixture_battery(&fx, cap))
        }
        Command::CheckPaper { corrupt } => Outcome::Report(report::check_paper(corrupt.as_deref())?),
    })
}

fn field_spec(cli: &Cli) -> Result<FieldSpec, String> {
    if let Some(text) = &cli.field {
        return parse_field(text);
    }
    let path = match &cli.command {
        Command::Validate(i) | Command::Center(i) | Command::Derivations(i) | Command::Cohomology(i) | Command::Triangular(i) | Command::Export(i) => {
            &i.algebra
        }
        Command::Fixture { .. } | Command::CheckPaper { .. } => return Ok(FieldSpec::Prime(2)),
    };
    io::read_field_spec(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    match field_spec(cli)? {
        FieldSpec::Prime(p) => run_with(&PrimeField::new(p).map_err(|e| e.to_string())?, cli),
        FieldSpec::Rationals => run_with(&Rationals, cli),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Machine => Format::Machine,
    };
    let (text, code) = match run(&cli) {
        Ok(Outcome::Raw(text)) => (text, 0),
        Ok(Outcome::Report(r)) => {
            let failures: Vec<String> = r.failures().iter().map(|s| s.to_string()).collect();
            for f in &failures {
                eprintln!("check failed: {f}");
            }
            (r.render(format), u8::from(!failures.is_empty()))
        }
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    if let Err(message) = emit(&cli, &text) {
        eprintln!("error: {message}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
