//! `orbitclass`: JSON front end for the orbit-closure library.
//!
//! Every run prints one JSON document on stdout. Failures print
//! `{"code": ..., "message": ...}` and exit 1, or 2 when a resource cap was hit.

mod commands;
mod job;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use job::{InputSpec, JobOptions, JobSpec};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] orbitclass::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Json(_) => "json",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(orbitclass::Error::ResourceLimit(_)) => 2,
            _ => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "orbitclass",
    version,
    about = "K-classes, cohomology classes and tensor characters of matrix orbit closures"
)]
struct Cli {
    /// Read the whole job (subcommand, input, options) from a JSON file.
    #[arg(long, value_name = "FILE")]
    json_job: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args, Debug, Default)]
struct InputArgs {
    /// Uniform matroid of rank R on N elements (realized by a Vandermonde matrix).
    #[arg(long, num_args = 2, value_names = ["R", "N"])]
    uniform: Option<Vec<usize>>,
    /// Rank and column count; shorthand for `--uniform R N`.
    #[arg(long, requires = "n")]
    r: Option<usize>,
    #[arg(long, requires = "r")]
    n: Option<usize>,
    /// Rank-2 parallelism partition, e.g. `2,1,1`.
    #[arg(long, value_delimiter = ',')]
    mu: Option<Vec<u32>>,
    /// Zero columns appended to `--mu`.
    #[arg(long, requires = "mu", default_value_t = 0)]
    zeros: usize,
    /// Matrix JSON: {"rows":..,"cols":..,"entries":[["p/q",..],..]}.
    #[arg(long, value_name = "FILE")]
    matrix: Option<PathBuf>,
    /// Matroid JSON: {"n":..,"rank":..,"bases":[[1,2],..]}.
    #[arg(long, value_name = "FILE")]
    matroid: Option<PathBuf>,
}

#[derive(Args, Debug, Default)]
struct Opts {
    #[command(flatten)]
    input: InputArgs,
    /// Column multiplicities, e.g. `1,1,1,1`.
    #[arg(long, value_delimiter = ',')]
    beta: Option<Vec<u32>>,
    /// Hook index.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Buchberger step cap (default from ORBITCLASS_CAP_STEPS, else 50000).
    #[arg(long)]
    cap_steps: Option<usize>,
    /// Add the literal transcriptions of the printed formulas and their discrepancy reports.
    #[arg(long)]
    as_printed: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// K-polynomial of the orbit closure.
    Kclass(Opts),
    /// Multidegree, uniform class and fixed-point localizations.
    Cohom(Opts),
    /// Tensor-module character, with the symmetric-group oracle when small enough.
    Tensor(Opts),
    /// Tutte polynomial, nbc counts, rank partition and faces.
    Matroid {
        #[command(flatten)]
        opts: Opts,
        /// Flag of subsets for a face, e.g. `1,2/1,2,3`.
        #[arg(long)]
        flag: Option<String>,
    },
    /// Hook multiplicities from the dependency enumerator.
    Hooks(Opts),
    /// Ideal generators, Groebner basis size, K-polynomial and dimension.
    Ideal {
        #[command(flatten)]
        opts: Opts,
        /// iprime | idoubleprime | minors
        #[arg(long, default_value = "iprime")]
        kind: String,
        /// Minor size for `--kind minors`.
        #[arg(long)]
        size: Option<usize>,
    },
    /// Whether W lies in the orbit closure of V.
    Member {
        #[arg(long, value_name = "FILE")]
        v: PathBuf,
        #[arg(long, value_name = "FILE")]
        w: PathBuf,
    },
    /// Run the acceptance suite.
    Verify {
        #[arg(long, default_value = "full", value_parser = ["fast", "full"])]
        level: String,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn input_spec(a: &InputArgs) -> Result<Option<InputSpec>, CliError> {
    let mut found = Vec::new();
    if let Some(u) = &a.uniform {
        found.push(InputSpec::Uniform([u[0], u[1]]));
    }
    if let (Some(r), Some(n)) = (a.r, a.n) {
        found.push(InputSpec::Uniform([r, n]));
    }
    if let Some(parts) = &a.mu {
        found.push(InputSpec::Mu {
            parts: parts.clone(),
            zeros: a.zeros,
        });
    }
    if let Some(p) = &a.matrix {
        found.push(InputSpec::Matrix(job::read_matrix(p)?));
    }
    if let Some(p) = &a.matroid {
        found.push(InputSpec::Matroid(job::read_matroid(p)?));
    }
    if found.len() > 1 {
        return Err(CliError::Usage("give exactly one input object".into()));
    }
    Ok(found.pop())
}

fn options(o: &Opts) -> JobOptions {
    JobOptions {
        beta: o.beta.clone(),
        k: o.k,
        seed: o.seed,
        cap_steps: o.cap_steps,
        as_printed: o.as_printed,
        ..JobOptions::default()
    }
}

fn parse_flag(s: &str) -> Result<Vec<Vec<usize>>, CliError> {
    s.split('/')
        .map(|set| {
            set.split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| {
                    x.trim()
                        .parse()
                        .map_err(|_| CliError::Usage(format!("bad flag entry `{x}`")))
                })
                .collect()
        })
        .collect()
}

fn job_from_command(cmd: Command) -> Result<JobSpec, CliError> {
    let with = |name: &str, o: &Opts| -> Result<JobSpec, CliError> {
        Ok(JobSpec {
            subcommand: name.into(),
            input: input_spec(&o.input)?,
            options: options(o),
        })
    };
    Ok(match cmd {
        Command::Kclass(o) => with("kclass", &o)?,
        Command::Cohom(o) => with("cohom", &o)?,
        Command::Tensor(o) => with("tensor", &o)?,
        Command::Hooks(o) => with("hooks", &o)?,
        Command::Matroid { opts, flag } => {
            let mut job = with("matroid", &opts)?;
            job.options.flag = flag.as_deref().map(parse_flag).transpose()?;
            job
        }
        Command::Ideal { opts, kind, size } => {
            let mut job = with("ideal", &opts)?;
            job.options.kind = Some(kind);
            job.options.size = size;
            job
        }
        Command::Member { v, w } => JobSpec {
            subcommand: "member".into(),
            input: None,
            options: JobOptions {
                v: Some(job::read_matrix(&v)?),
                w: Some(job::read_matrix(&w)?),
                ..JobOptions::default()
            },
        },
        Command::Verify { level, seed } => JobSpec {
            subcommand: "verify".into(),
            input: None,
            options: JobOptions {
                level: Some(level),
                seed,
                ..JobOptions::default()
            },
        },
    })
}

fn print_json(v: &serde_json::Value) {
    use std::io::Write;
    let text = serde_json::to_string_pretty(v).unwrap_or_else(|_| v.to_string());
    // A closed pipe (e.g. `| head`) is not an error worth a panic.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn fail(e: &CliError) -> ExitCode {
    print_json(&serde_json::json!({"code": e.code(), "message": e.to_string()}));
    ExitCode::from(e.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // --help / --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&CliError::Usage(e.render().to_string().trim().to_string())),
    };
    let job = match (cli.json_job, cli.command) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "--json-job replaces the subcommand; give one or the other".into(),
        )),
        (Some(path), None) => JobSpec::from_file(&path),
        (None, Some(cmd)) => job_from_command(cmd),
        (None, None) => Err(CliError::Usage(
            "expected a subcommand or --json-job FILE".into(),
        )),
    };
    match job.and_then(|j| commands::run(&j)) {
        Ok(out) => {
            print_json(&out.doc);
            if out.failed {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => fail(&e),
    }
}
