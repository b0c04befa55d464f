//! The `pfunc` command line: one JSON document per job on standard output.
//!
//! Matrices and vectors are JSON arrays whose entries are integers or exact
//! rational strings such as `"-3/4"`. Residues mod `pᴺ` are printed as
//! decimal integers next to `p` and `N`.
//!
//! Exit codes: 0 success, 1 domain error (an `{"error": …}` object is
//! printed), 2 usage error, 3 the computation needs more precision.

mod commands;
mod json;

use std::io::Read;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Parser, Subcommand, ValueEnum};

use crate::Error;

pub use json::to_compact;

/// Environment variable overriding the default precision.
pub const PRECISION_ENV: &str = "PFUNC_PRECISION";
pub const MAX_PRECISION: u32 = 4096;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One line
    #[default]
    Json,
    /// Indented
    Pretty,
}

/// A parsed invocation.
#[derive(Clone, Debug, Parser)]
#[command(name = "pfunc", version, about = "p-adic functionals of stationary torsion-free abelian groups")]
pub struct JobSpec {
    /// Output layout
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Cross-check the answer with an independent iteration oracle
    #[arg(long, global = true)]
    pub verify: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Characteristic polynomial, leading coefficient first
    Charpoly { matrix: String },
    /// Whether the group is p-divisible, with the least power of A vanishing mod p
    Divisible {
        matrix: String,
        #[arg(short = 'p')]
        p: u64,
    },
    /// Unit-root and ideal-root factors of a matrix's characteristic polynomial or of a monic polynomial
    UnitSplit {
        input: String,
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'N')]
        precision: Option<u32>,
    },
    /// Howell basis of the p-adic functionals mod p^N
    Functionals {
        matrix: String,
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'N')]
        precision: Option<u32>,
    },
    /// Divisibility distance d_p(g, h)
    Dp {
        matrix: String,
        g: String,
        h: String,
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'N')]
        precision: Option<u32>,
    },
    /// Membership in the group, with the least n making A^n v integral
    Member {
        matrix: String,
        vector: String,
        #[arg(short = 'N')]
        precision: Option<u32>,
    },
    /// Z_p-rank of the pro-p completion
    Corank {
        matrix: String,
        #[arg(short = 'p')]
        p: u64,
    },
    /// Stage-n approximation of the functionals of an inductive prefix
    LimitApprox {
        matrices: String,
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'N')]
        precision: Option<u32>,
        #[arg(short = 'n')]
        stage: usize,
    },
    /// First k > l with B^k = B^l mod m
    PowerCongruence {
        matrix: String,
        #[arg(short = 'm')]
        modulus: String,
    },
    /// Stationary presentation of the group generated by G and a vector
    Adjoin {
        presentation: String,
        vector: String,
        #[arg(short = 'N')]
        precision: Option<u32>,
    },
    /// Stationary presentation of a group quasi-isomorphic to a stationary one
    QuasiRebuild {
        h: String,
        quasi_data: String,
        reps: Vec<String>,
        #[arg(short = 'N')]
        precision: Option<u32>,
    },
    /// Runs JSON argument arrays read from standard input, one per line
    Batch {
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// What a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: message }
    }
}

/// Runs `pfunc` on `argv` (without the program name), reading standard
/// input only for `batch`.
pub fn run(argv: &[String], stdin: &mut dyn Read) -> Outcome {
    let spec = match JobSpec::try_parse_from(std::iter::once("pfunc".to_string()).chain(argv.iter().cloned())) {
        Ok(spec) => spec,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let default_precision = match default_precision() {
        Ok(n) => n,
        Err(msg) => return Outcome::usage(msg + "\n"),
    };
    if let Command::Batch { jobs } = spec.command {
        let mut input = String::new();
        if let Err(e) = stdin.read_to_string(&mut input) {
            return Outcome::usage(format!("cannot read standard input: {e}"));
        }
        return run_batch(&input, jobs);
    }
    run_job(&spec, default_precision)
}

fn default_precision() -> Result<u32, String> {
    match std::env::var(PRECISION_ENV) {
        Ok(s) => s
            .trim()
            .parse::<u32>()
            .ok()
            .filter(|n| (1..=MAX_PRECISION).contains(n))
            .ok_or_else(|| format!("{PRECISION_ENV} must be an integer in 1..={MAX_PRECISION}, got {s:?}")),
        Err(_) => Ok(crate::DEFAULT_PRECISION),
    }
}

fn run_job(spec: &JobSpec, default_precision: u32) -> Outcome {
    let render = |v: &serde_json::Value| match spec.format {
        Format::Json => json::to_compact(v) + "\n",
        Format::Pretty => json::to_pretty(v) + "\n",
    };
    match commands::execute(spec, default_precision) {
        Ok(v) => Outcome { code: EXIT_OK, stdout: render(&v), stderr: String::new() },
        Err(commands::Failure::Usage(msg)) => Outcome::usage(msg + "\n"),
        Err(commands::Failure::Domain(e)) => {
            let code = if matches!(e, Error::RaisePrecision(_)) { EXIT_PRECISION } else { EXIT_DOMAIN };
            Outcome { code, stdout: render(&json::error_value(&e)), stderr: format!("pfunc: {e}\n") }
        }
    }
}

/// Each input line is a JSON array of argument strings. Jobs run on up to
/// `jobs` threads; outputs keep input order and the exit code is the largest
/// one seen.
fn run_batch(input: &str, jobs: usize) -> Outcome {
    let lines: Vec<&str> = input.lines().filter(|l| !l.trim().is_empty()).collect();
    let results: Vec<Mutex<Option<Outcome>>> = lines.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = jobs.clamp(1, lines.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(line) = lines.get(i) else { break };
                let outcome = batch_line(line);
                *results[i].lock().expect("no worker panics while holding the lock") = Some(outcome);
            });
        }
    });
    let mut all = Outcome { code: EXIT_OK, stdout: String::new(), stderr: String::new() };
    for r in results {
        let o = r.into_inner().expect("workers finished").expect("every job ran");
        all.code = all.code.max(o.code);
        all.stdout.push_str(&o.stdout);
        all.stderr.push_str(&o.stderr);
    }
    all
}

fn batch_line(line: &str) -> Outcome {
    let argv: Vec<String> = match serde_json::from_str(line) {
        Ok(v) => v,
        Err(e) => return Outcome::usage(format!("batch line is not a JSON array of strings: {e}\n")),
    };
    if argv.first().map(String::as_str) == Some("batch") {
        return Outcome::usage("batch jobs cannot nest\n".into());
    }
    let mut empty = std::io::empty();
    let mut o = run(&argv, &mut empty);
    if o.code == EXIT_USAGE && o.stdout.is_empty() {
        // keep one output line per job
        let err = json::object([(
            "error",
            json::object([("kind", "usage".into()), ("message", o.stderr.trim().into())]),
        )]);
        o.stdout = json::to_compact(&err) + "\n";
    }
    o
}
