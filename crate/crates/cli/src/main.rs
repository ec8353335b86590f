//! `brauer`: Cartan matrices of Brauer configuration algebras from the command line.
//!
//! Exit codes: 0 success, 1 domain failure (invalid configuration, failed
//! check), 2 usage error. Failures print one `error: <kind>: <message>` line
//! on stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use brauer_core::document::{self, DocumentError};
use brauer_core::export;
use brauer_core::generator::{generate_random, GeneratorBounds};
use brauer_core::intervals::build_diagram;
use brauer_core::quiver::{build_quiver, generate_relations};
use brauer_core::{
    algebra_dimension, cartan_matrix, oracle_cartan_matrix, polygons_containing, validate,
    BrauerConfiguration, ExactCartanMatrix, ExactCount,
};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "brauer",
    version,
    about = "Brauer configuration algebras: quivers, relations and Cartan matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the configuration axioms; prints "ok" or one violation per line.
    Validate { file: PathBuf },
    /// Print the induced quiver.
    Quiver {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = QuiverFormat::Dot)]
        format: QuiverFormat,
    },
    /// Print the Cartan matrix.
    Cartan {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Table)]
        format: MatrixFormat,
    },
    /// Print the algebra dimension next to the Cartan entry sum.
    Dim { file: PathBuf },
    /// Print the defining relations grouped by type.
    Relations { file: PathBuf },
    /// Compare the closed-form Cartan matrix with the path-enumeration count.
    Check { file: PathBuf },
    /// Cross-check formulas and path enumeration on random configurations.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: u64,
        /// max_vertices,max_polygons,max_occ,max_mu
        #[arg(long, default_value = "5,5,3,3")]
        bounds: Bounds,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum QuiverFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug)]
struct Bounds {
    vertices: usize,
    polygons: usize,
    occ: u64,
    mu: u64,
}

impl FromStr for Bounds {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [v, p, o, m] = parts.as_slice() else {
            return Err(format!("expected four comma-separated bounds, got `{s}`"));
        };
        let num = |x: &str| -> Result<u64, String> {
            match x.parse::<u64>() {
                Ok(0) | Err(_) => Err(format!("bound `{x}` is not a positive integer")),
                Ok(n) => Ok(n),
            }
        };
        Ok(Bounds {
            vertices: num(v)? as usize,
            polygons: num(p)? as usize,
            occ: num(o)?,
            mu: num(m)?,
        })
    }
}

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn domain(kind: &'static str, message: impl Into<String>) -> Self {
        Self {
            code: 1,
            kind,
            message: message.into(),
        }
    }
}

impl From<brauer_core::Error> for Failure {
    fn from(e: brauer_core::Error) -> Self {
        let kind = match e {
            brauer_core::Error::InvalidConfiguration(_) => "invalid",
            brauer_core::Error::Overflow(_) => "overflow",
            brauer_core::Error::OracleLimit { .. } => "oracle-limit",
            _ => "domain",
        };
        Failure::domain(kind, e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        kind: "io",
        message: format!("{}: {e}", path.display()),
    })
}

fn syntax_failure(e: DocumentError) -> Failure {
    match e {
        DocumentError::Syntax { .. } => Failure::domain("syntax", e.to_string()),
        DocumentError::Semantic(_) => Failure::domain("invalid", e.to_string()),
    }
}

fn load(path: &Path) -> Result<BrauerConfiguration, Failure> {
    document::parse(&read(path)?).map_err(syntax_failure)
}

fn exact_matrix(config: &BrauerConfiguration) -> Result<ExactCartanMatrix, Failure> {
    Ok(cartan_matrix::<ExactCount>(config)?)
}

fn cmd_validate(file: &Path) -> CmdResult {
    let config = document::parse_unchecked(&read(file)?).map_err(syntax_failure)?;
    let violations = validate(&config);
    if violations.is_empty() {
        println!("ok");
        return Ok(());
    }
    for v in &violations {
        println!("{v}");
    }
    Err(Failure::domain(
        "invalid",
        format!("{} violation(s)", violations.len()),
    ))
}

fn cmd_quiver(file: &Path, format: QuiverFormat) -> CmdResult {
    let quiver = build_quiver(&load(file)?)?;
    let text = match format {
        QuiverFormat::Dot => export::quiver_dot(&quiver),
        QuiverFormat::Json => export::quiver_json(&quiver),
    };
    print!("{text}");
    Ok(())
}

fn cmd_cartan(file: &Path, format: MatrixFormat) -> CmdResult {
    let m = exact_matrix(&load(file)?)?;
    let text = match format {
        MatrixFormat::Table => export::cartan_table(&m),
        MatrixFormat::Csv => export::cartan_csv(&m),
        MatrixFormat::Json => export::cartan_json(&m),
    };
    print!("{text}");
    Ok(())
}

fn cmd_dim(file: &Path) -> CmdResult {
    let config = load(file)?;
    let dim = algebra_dimension::<ExactCount>(&config)?;
    let sum = exact_matrix(&config)?.entry_sum()?;
    if dim == sum {
        println!("dim={dim} cartan_sum={sum} ok");
        Ok(())
    } else {
        println!("dim={dim} cartan_sum={sum} mismatch");
        Err(Failure::domain(
            "mismatch",
            format!("algebra dimension {dim} differs from Cartan entry sum {sum}"),
        ))
    }
}

fn cmd_relations(file: &Path) -> CmdResult {
    let config = load(file)?;
    let quiver = build_quiver(&config)?;
    let relations = generate_relations(&config, &quiver)?;
    print!("{}", export::relations_text(&quiver, &relations));
    Ok(())
}

/// First disagreement between the closed forms and the path count, if any.
fn compare(config: &BrauerConfiguration) -> Result<Option<String>, Failure> {
    let formula = exact_matrix(config)?;
    let oracle = oracle_cartan_matrix(config)?.map(|&x| ExactCount::from(x));
    Ok(formula.first_difference(&oracle).map(|(i, j)| {
        format!(
            "entry ({},{}): formula={} oracle={}",
            formula.labels()[i],
            formula.labels()[j],
            formula.get(i, j),
            oracle.get(i, j)
        )
    }))
}

fn cmd_check(file: &Path) -> CmdResult {
    match compare(&load(file)?)? {
        None => {
            println!("ok");
            Ok(())
        }
        Some(diff) => {
            println!("mismatch at {diff}");
            Err(Failure::domain("mismatch", diff))
        }
    }
}

fn fuzz_one(bounds: &GeneratorBounds) -> Result<(), String> {
    let config = generate_random(bounds).map_err(|e| e.to_string())?;
    if let Some(diff) = compare(&config).map_err(|f| f.message)? {
        return Err(format!("oracle {diff}"));
    }
    let m = exact_matrix(&config).map_err(|f| f.message)?;
    if !m.is_symmetric() {
        return Err("asymmetric Cartan matrix".into());
    }
    let sum = m.entry_sum().map_err(|e| e.to_string())?;
    let dim = algebra_dimension::<ExactCount>(&config).map_err(|e| e.to_string())?;
    if sum != dim {
        return Err(format!("entry sum {sum} != dimension {dim}"));
    }
    let quiver = build_quiver(&config).map_err(|e| e.to_string())?;
    for a in config.nontruncated_vertices() {
        for v in polygons_containing(&config, a).map_err(|e| e.to_string())? {
            let d = build_diagram(&config, &quiver, a, &v).map_err(|e| e.to_string())?;
            for w in config.polygons().iter().filter(|w| w.id != v) {
                let total: usize = d
                    .occurrences(&quiver, &w.id)
                    .map_err(|e| e.to_string())?
                    .iter()
                    .sum();
                let expected = config.occ(a, &w.id).map_err(|e| e.to_string())?;
                if total as u64 != expected {
                    return Err(format!(
                        "interval sum for ({a}, {v}, {}) is {total}, expected {expected}",
                        w.id
                    ));
                }
            }
        }
    }
    Ok(())
}

fn cmd_fuzz(seed: u64, count: u64, bounds: Bounds) -> CmdResult {
    let base = GeneratorBounds::new(
        seed,
        bounds.vertices,
        bounds.polygons,
        bounds.occ,
        bounds.mu,
    );
    let mut failures = Vec::new();
    for k in 0..count {
        let s = seed.wrapping_add(k);
        if let Err(why) = fuzz_one(&base.with_seed(s)) {
            failures.push((s, why));
        }
    }
    println!(
        "fuzz seed={seed} count={count} bounds={},{},{},{} passed={} failed={}",
        bounds.vertices,
        bounds.polygons,
        bounds.occ,
        bounds.mu,
        count - failures.len() as u64,
        failures.len()
    );
    match failures.first() {
        None => Ok(()),
        Some((s, why)) => Err(Failure::domain(
            "fuzz",
            format!("{} failing seed(s), first {s}: {why}", failures.len()),
        )),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate { file } => cmd_validate(file),
        Command::Quiver { file, format } => cmd_quiver(file, *format),
        Command::Cartan { file, format } => cmd_cartan(file, *format),
        Command::Dim { file } => cmd_dim(file),
        Command::Relations { file } => cmd_relations(file),
        Command::Check { file } => cmd_check(file),
        Command::Fuzz {
            seed,
            count,
            bounds,
        } => cmd_fuzz(*seed, *count, *bounds),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}: {}", f.kind, f.message.replace('\n', " "));
            ExitCode::from(f.code)
        }
    }
}
