//! Command-line adapter over the `partition_gini` library.
//!
//! [`run`] does all the work and returns what should be written to stdout
//! and stderr, so tests can drive the exact same path as the binary.

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partition_gini as pg;
use partition_gini::{
    CharacterKind, DihedralCharacter, DominantWeight, Error, GlGini, Partition, Tableau, Word,
};
use serde_json::{json, Value};

/// Environment fallback for `--threads`.
pub const THREADS_ENV: &str = "PARTITION_GINI_THREADS";

#[derive(Debug, Parser)]
#[command(name = "partition-gini", version, about = "Exact Gini-index computations on integer partitions")]
struct Cli {
    /// Worker threads for parallel kernels (default: PARTITION_GINI_THREADS, else all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct PartitionArg {
    /// Comma-separated parts, e.g. 4,3,1,1.
    #[arg(long)]
    partition: String,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long)]
    lam: String,
    #[arg(long)]
    mu: String,
}

#[derive(Debug, Args)]
struct ShapeWeight {
    #[arg(long)]
    shape: String,
    #[arg(long)]
    weight: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CharName {
    Chi1,
    Chi2,
    Chi3,
    Chi4,
    Rho,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Gini index g(λ) = C(n,2) - b(λ).
    Gini(PartitionArg),
    /// Generalised Gini index for nk dollars among n people.
    GiniNk {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Second elementary symmetric function at the parts.
    E2(PartitionArg),
    /// Conjugate (transposed) partition.
    Conjugate(PartitionArg),
    /// Whether lam dominates mu.
    Dominates(PairArgs),
    /// Whether lam covers mu in the dominance order.
    Covers(PairArgs),
    /// Lorenz curve breakpoints as CSV.
    Lorenz {
        #[arg(long)]
        partition: String,
        /// Population (defaults to the partition size).
        #[arg(long)]
        n: Option<usize>,
        /// Dollars per person (defaults to 1).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Kostka number.
    Kostka(ShapeWeight),
    /// Kostka-Foulkes polynomial by charge.
    KostkaFoulkes {
        #[command(flatten)]
        sw: ShapeWeight,
        /// Also compute through the Hall-Littlewood transition matrix and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Charge of a word or of a tableau.
    Charge {
        /// Word such as 2111423 or 2,1,1,1,4,2,3.
        #[arg(long, conflicts_with = "tableau", required_unless_present = "tableau")]
        word: Option<String>,
        /// Rows separated by '/', entries by ',', e.g. 1,1,1,2/2,4/3.
        #[arg(long)]
        tableau: Option<String>,
    },
    /// Semistandard tableaux of a shape and weight.
    Ssyt(ShapeWeight),
    /// Number of standard tableaux by the hook-length formula.
    StandardCount {
        #[arg(long)]
        shape: String,
    },
    /// Coefficients of x^1..x^n in the Gini generating function.
    Genfun {
        #[arg(long)]
        n: usize,
    },
    /// Largest level set of g on P_n and the antichain lower bound.
    LevelSet {
        #[arg(long)]
        n: usize,
    },
    /// Exact expected value of the normalised Gini index.
    ExpectedValue {
        #[arg(long)]
        n: usize,
        /// Emit a CSV table for step, 2*step, ..., n.
        #[arg(long, conflicts_with = "trend")]
        table: bool,
        /// Report E(g, P_m) on a grid up to n and whether it increases throughout.
        #[arg(long)]
        trend: bool,
        #[arg(long, default_value_t = 5)]
        step: usize,
    },
    /// Graded multiplicity of a dihedral irrep.
    Dihedral {
        #[arg(long)]
        n: usize,
        #[arg(long = "char", value_enum)]
        character: CharName,
        /// Index for rho.
        #[arg(long)]
        j: Option<usize>,
    },
    /// Graded multiplicity of a Specht module and its degree.
    SymGini(PartitionArg),
    /// Graded multiplicity of a GL_n irrep in the harmonics and its degree.
    GlGini {
        /// Dominant weight such as 2,1,0,-3.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
}

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

/// Structured result. A string payload is CSV and is printed verbatim;
/// anything else is printed as compact JSON.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub elapsed_ms: u128,
}

/// Everything the binary prints, plus its exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Invocation {
    pub result: CommandResult,
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    /// The stdout rendering of the payload.
    pub fn render(&self) -> String {
        match &self.payload {
            Value::String(text) => text.clone(),
            other => format!("{}\n", other),
        }
    }
}

pub fn error_payload(e: &Error) -> Value {
    json!({"error": {"code": e.code(), "message": e.to_string()}})
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let start = Instant::now();
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let informational = !e.use_stderr();
            let result = CommandResult {
                status: if informational { Status::Ok } else { Status::Error },
                payload: json!({"error": {"code": "usage", "message": text.trim_end()}}),
                elapsed_ms: start.elapsed().as_millis(),
            };
            return if informational {
                Invocation { result, exit_code: 0, stdout: text, stderr: String::new() }
            } else {
                Invocation { result, exit_code: 1, stdout: String::new(), stderr: text }
            };
        }
    };

    let threads = match resolve_threads(cli.threads) {
        Ok(t) => t,
        Err(msg) => {
            let result = CommandResult {
                status: Status::Error,
                payload: json!({"error": {"code": "usage", "message": msg}}),
                elapsed_ms: start.elapsed().as_millis(),
            };
            return Invocation { result, exit_code: 1, stdout: String::new(), stderr: format!("error: {}\n", msg) };
        }
    };

    let outcome = match threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli.command)),
            Err(e) => Err(Error::Domain(format!("cannot start thread pool: {}", e))),
        },
        None => execute(&cli.command),
    };
    let elapsed_ms = start.elapsed().as_millis();

    match outcome {
        Ok(payload) => {
            let result = CommandResult { status: Status::Ok, payload, elapsed_ms };
            Invocation {
                stdout: result.render(),
                stderr: format!("elapsed_ms={}\n", elapsed_ms),
                result,
                exit_code: 0,
            }
        }
        Err(e) => {
            let result = CommandResult { status: Status::Error, payload: error_payload(&e), elapsed_ms };
            Invocation {
                stdout: result.render(),
                stderr: format!("error: {}\n", e),
                result,
                exit_code: 2,
            }
        }
    }
}

fn resolve_threads(flag: Option<usize>) -> Result<Option<usize>, String> {
    let value = match flag {
        Some(n) => n,
        None => match std::env::var(THREADS_ENV) {
            Ok(s) if !s.trim().is_empty() => s
                .trim()
                .parse()
                .map_err(|_| format!("{} must be a positive integer, got {:?}", THREADS_ENV, s))?,
            _ => return Ok(None),
        },
    };
    if value == 0 {
        return Err("thread count must be positive".into());
    }
    Ok(Some(value))
}

fn partition(s: &str) -> pg::Result<Partition> {
    s.parse()
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialise")
}

fn int(v: &pg::BigInt) -> Value {
    pg::json::bigint(v)
}

fn parse_tableau(s: &str) -> pg::Result<Tableau> {
    let rows = s
        .split('/')
        .map(|row| {
            row.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Domain(format!("bad tableau entry {:?} in {:?}", tok, s)))
                })
                .collect::<pg::Result<Vec<_>>>()
        })
        .collect::<pg::Result<Vec<_>>>()?;
    Tableau::new(rows)
}

fn dihedral_character(n: usize, name: CharName, j: Option<usize>) -> pg::Result<DihedralCharacter> {
    let kind = match (name, j) {
        (CharName::Rho, Some(j)) => CharacterKind::Rho(j),
        (CharName::Rho, None) => {
            return Err(Error::InvalidCharacter("rho needs --j".into()));
        }
        (_, Some(_)) => {
            return Err(Error::InvalidCharacter("--j applies to rho only".into()));
        }
        (CharName::Chi1, None) => CharacterKind::Chi1,
        (CharName::Chi2, None) => CharacterKind::Chi2,
        (CharName::Chi3, None) => CharacterKind::Chi3,
        (CharName::Chi4, None) => CharacterKind::Chi4,
    };
    DihedralCharacter::new(n, kind)
}

fn execute(cmd: &Command) -> pg::Result<Value> {
    Ok(match cmd {
        Command::Gini(a) => json!({"gini": int(&pg::gini(&partition(&a.partition)?))}),
        Command::GiniNk { partition: p, n, k } => {
            json!({"gini_nk": int(&pg::gini_nk(&partition(p)?, *n, *k)?)})
        }
        Command::E2(a) => json!({"e2": int(&pg::e2(&partition(&a.partition)?))}),
        Command::Conjugate(a) => json!({"conjugate": to_value(&pg::conjugate(&partition(&a.partition)?))}),
        Command::Dominates(a) => {
            json!({"dominates": pg::dominates(&partition(&a.lam)?, &partition(&a.mu)?)?})
        }
        Command::Covers(a) => json!({"covers": pg::covers(&partition(&a.lam)?, &partition(&a.mu)?)?}),
        Command::Lorenz { partition: p, n, k } => {
            let lam = partition(p)?;
            let n = n.unwrap_or(lam.size());
            let k = k.unwrap_or(1);
            Value::String(pg::lorenz_points(&lam, n, k)?.to_csv())
        }
        Command::Kostka(sw) => {
            json!({"kostka": int(&pg::kostka_number(&partition(&sw.shape)?, &partition(&sw.weight)?)?)})
        }
        Command::KostkaFoulkes { sw, oracle } => {
            let (shape, weight) = (partition(&sw.shape)?, partition(&sw.weight)?);
            let k = pg::kostka_foulkes(&shape, &weight)?;
            if *oracle {
                let bound = k.degree().unwrap_or(0);
                let other = pg::kostka_foulkes_via_transition(&shape, &weight, bound)?;
                if other != k {
                    return Err(Error::Inconsistent(format!(
                        "charge gives {} but the transition matrix gives {}",
                        k, other
                    )));
                }
            }
            to_value(&k)
        }
        Command::Charge { word, tableau } => {
            let c = match (word, tableau) {
                (Some(w), _) => pg::charge(&Word::parse(w)?)?,
                (None, Some(t)) => pg::charge_tableau(&parse_tableau(t)?)?,
                (None, None) => unreachable!("clap requires one of --word, --tableau"),
            };
            json!({"charge": c})
        }
        Command::Ssyt(sw) => {
            let tableaux = pg::enumerate_ssyt(&partition(&sw.shape)?, &partition(&sw.weight)?)?;
            json!({"count": tableaux.len(), "tableaux": to_value(&tableaux)})
        }
        Command::StandardCount { shape } => {
            json!({"count": int(&pg::standard_count(&partition(shape)?))})
        }
        Command::Genfun { n } => {
            if *n == 0 {
                return Err(Error::Domain("genfun needs n >= 1".into()));
            }
            let table = pg::series::genfun_table(*n);
            let rows: Vec<Value> = (1..=*n)
                .map(|m| json!({"n": m, "coeffs": to_value(&table[m])["coeffs"].clone()}))
                .collect();
            json!({"genfun": rows})
        }
        Command::LevelSet { n } => {
            let size = pg::max_level_set_size(*n)?;
            let bound = match pg::antichain_lower_bound(*n) {
                Ok(b) => pg::json::rational(&b),
                Err(_) => Value::Null,
            };
            json!({"n": n, "max_level_set_size": int(&size), "antichain_lower_bound": bound})
        }
        Command::ExpectedValue { n, table, trend, step } => {
            if *step == 0 {
                return Err(Error::Domain("--step must be positive".into()));
            }
            if *table {
                let ns: Vec<usize> = (1..=*n / step).map(|i| i * step).filter(|&m| m >= 2).collect();
                Value::String(pg::expected_value_csv(&pg::expected_value_rows(&ns)?))
            } else if *trend {
                trend_report(*n, *step)?
            } else {
                let value = pg::expected_value_normalized(*n)?;
                json!({
                    "n": n,
                    "value": pg::json::rational(&value),
                    "decimal": pg::format_decimal(&value, 4),
                })
            }
        }
        Command::Dihedral { n, character, j } => {
            let chi = dihedral_character(*n, *character, *j)?;
            let poly = pg::dihedral_graded_multiplicity(*n, &chi)?;
            let gini = poly.degree().expect("nonzero multiplicity");
            json!({"poly": to_value(&poly), "gini": gini})
        }
        Command::SymGini(a) => {
            let lam = partition(&a.partition)?;
            let poly = pg::sym_graded_multiplicity(&lam)?;
            json!({"poly": to_value(&poly), "gini": pg::sym_gini(&lam)?})
        }
        Command::GlGini { alpha } => {
            let alpha: DominantWeight = alpha.parse()?;
            let gini = pg::gl_gini(&alpha)?;
            let poly = match gini {
                GlGini::NegInfinity => Value::Null,
                GlGini::Finite(_) => to_value(&pg::gl_graded_multiplicity(&alpha)?),
            };
            json!({"poly": poly, "gini": to_value(&gini)})
        }
    })
}

/// E(g, P_m) for m = step, 2·step, ..., n, plus the first m in 2..=n at which
/// the sequence fails to increase. The limit is not asserted.
fn trend_report(n: usize, step: usize) -> pg::Result<Value> {
    if n < 3 {
        return Err(Error::Domain("trend needs n >= 3".into()));
    }
    let mut ns: Vec<usize> = (1..=n / step).map(|i| i * step).filter(|&m| m >= 2).collect();
    if ns.last() != Some(&n) {
        ns.push(n);
    }
    let rows = pg::expected_value_rows(&ns)?;
    let samples: Vec<Value> = rows.iter().map(|r| json!({"n": r.n, "decimal": r.decimal})).collect();
    let violation = pg::first_monotonicity_violation(2, n)?;
    Ok(json!({
        "from": 2,
        "to": n,
        "monotone_increasing": violation.is_none(),
        "first_violation": violation,
        "samples": samples,
    }))
}
