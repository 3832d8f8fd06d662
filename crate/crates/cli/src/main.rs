use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ncsf_core::character::{irreducible_character, young_character};
use ncsf_core::descent::check_degree;
use ncsf_core::element::{transition, Basis, Element, GradedIndex};
use ncsf_core::serial::{SerializedClassFunction, SerializedElement, SerializedMatrix};
use ncsf_core::tableaux::{enumerate_syct, enumerate_syt};
use ncsf_core::verify::{run, Report, Suite};
use ncsf_core::{Composition, Error, NSymBasis, Partition, QSymBasis, SymBasis};

#[derive(Parser)]
#[command(
    name = "ncsf",
    version,
    about = "Exact symmetric, quasisymmetric and noncommutative symmetric functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand one basis element in another basis of the same space.
    Expand {
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Comma-separated parts; "0" is the empty index.
        #[arg(long)]
        index: String,
    },
    /// Print the degree-n transition matrix; column j expands the j-th source element.
    Matrix {
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Count or list standard composition tableaux or standard Young tableaux.
    #[command(group(ArgGroup::new("mode").required(true).args(["count", "list"])))]
    Tableaux {
        #[arg(value_enum)]
        kind: TableauKind,
        #[arg(long)]
        shape: String,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        list: bool,
    },
    /// Values of a Young or irreducible character on every conjugacy class.
    #[command(group(ArgGroup::new("kind").required(true).args(["young", "irreducible"])))]
    Char {
        #[arg(long, value_name = "COMPOSITION")]
        young: Option<String>,
        #[arg(long, value_name = "PARTITION")]
        irreducible: Option<String>,
    },
    /// Run a verification suite in degree n.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Space {
    Sym,
    Qsym,
    Nsym,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableauKind {
    Syct,
    Syt,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    MainTheorem,
    Duality,
    Solomon,
    Square,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::MainTheorem => vec![Suite::MainTheorem],
            SuiteArg::Duality => vec![Suite::Duality],
            SuiteArg::Solomon => vec![Suite::Solomon],
            SuiteArg::Square => vec![Suite::Square],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

enum Outcome {
    Success,
    VerificationFailed,
}

fn expand<B: Basis>(from: &str, to: &str, index: &str) -> Result<String, Error>
where
    B::Index: FromStr<Err = Error>,
{
    let from = B::parse(from)?;
    let to = B::parse(to)?;
    let index: B::Index = index.parse()?;
    let degree = index.degree();
    let x = Element::basis_element(from, index).convert(to)?;
    Ok(SerializedElement::from_element(&x, degree).to_json())
}

fn matrix<B: Basis>(from: &str, to: &str, n: usize, format: Format) -> Result<String, Error> {
    let from = B::parse(from)?;
    let to = B::parse(to)?;
    check_degree(n)?;
    let m = transition(from, to, n)?;
    let serialized = SerializedMatrix::new(from, to, n, &m);
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&serialized).expect("serializable"),
        Format::Csv => serialized.to_csv().trim_end().to_string(),
    })
}

fn tableaux(kind: TableauKind, shape: &str, list: bool) -> Result<String, Error> {
    let rows: Vec<serde_json::Value> = match kind {
        TableauKind::Syct => {
            let alpha: Composition = shape.parse()?;
            enumerate_syct(&alpha)
                .iter()
                .map(|t| json!({ "rows": t.rows(), "descent": t.descent_composition().parts() }))
                .collect()
        }
        TableauKind::Syt => {
            let lambda: Partition = shape.parse()?;
            enumerate_syt(&lambda)
                .iter()
                .map(|t| json!({ "rows": t.rows(), "descent": t.descent_composition().parts() }))
                .collect()
        }
    };
    Ok(if list {
        serde_json::to_string_pretty(&rows).expect("serializable")
    } else {
        rows.len().to_string()
    })
}

fn character(young: Option<&str>, irreducible: Option<&str>) -> Result<String, Error> {
    let serialized = match (young, irreducible) {
        (Some(index), _) => {
            let alpha: Composition = index.parse()?;
            SerializedClassFunction::new("young", alpha.parts(), &young_character(&alpha)?)
        }
        (None, Some(index)) => {
            let lambda: Partition = index.parse()?;
            SerializedClassFunction::new(
                "irreducible",
                lambda.parts(),
                &irreducible_character(&lambda)?,
            )
        }
        (None, None) => unreachable!("clap requires one of --young or --irreducible"),
    };
    Ok(serde_json::to_string_pretty(&serialized).expect("serializable"))
}

fn verify(suite: SuiteArg, n: usize, as_json: bool) -> Result<(String, Outcome), Error> {
    let reports = suite
        .suites()
        .into_iter()
        .map(|s| run(s, n))
        .collect::<Result<Vec<Report>, Error>>()?;
    let outcome = if reports.iter().all(Report::all_passed) {
        Outcome::Success
    } else {
        Outcome::VerificationFailed
    };
    let text = if as_json {
        serde_json::to_string_pretty(&reports).expect("serializable")
    } else {
        let mut lines = Vec::new();
        for report in &reports {
            lines.push(report.summary());
            for check in report.failures() {
                lines.push(format!(
                    "  FAIL {}: {}",
                    check.label,
                    check.witness.as_deref().unwrap_or("")
                ));
            }
        }
        lines.join("\n")
    };
    Ok((text, outcome))
}

fn execute(command: Command) -> Result<(String, Outcome), Error> {
    let ok = |s: String| Ok((s, Outcome::Success));
    match command {
        Command::Expand {
            space,
            from,
            to,
            index,
        } => ok(match space {
            Space::Sym => expand::<SymBasis>(&from, &to, &index)?,
            Space::Qsym => expand::<QSymBasis>(&from, &to, &index)?,
            Space::Nsym => expand::<NSymBasis>(&from, &to, &index)?,
        }),
        Command::Matrix {
            space,
            from,
            to,
            n,
            format,
        } => ok(match space {
            Space::Sym => matrix::<SymBasis>(&from, &to, n, format)?,
            Space::Qsym => matrix::<QSymBasis>(&from, &to, n, format)?,
            Space::Nsym => matrix::<NSymBasis>(&from, &to, n, format)?,
        }),
        Command::Tableaux {
            kind, shape, list, ..
        } => ok(tableaux(kind, &shape, list)?),
        Command::Char { young, irreducible } => {
            ok(character(young.as_deref(), irreducible.as_deref())?)
        }
        Command::Verify { suite, n, json } => verify(suite, n, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok((text, outcome)) => {
            println!("{text}");
            match outcome {
                Outcome::Success => ExitCode::SUCCESS,
                Outcome::VerificationFailed => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
