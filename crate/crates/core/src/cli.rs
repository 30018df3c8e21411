//! Command-line front end.
//!
//! Every command prints one JSON document (or, for `oracle-emit`, the
//! netlist text) on stdout. Failures print
//! `{"status":"error","error_message":...}` on stdout and a diagnostic on
//! stderr. Exit codes: 0 ok, 1 domain or usage error, 2 resource limit.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::boolfn::{BoolFn, FunctionSpec};
use crate::error::Error;
use crate::grover::{self, Iterations, RunOptions};
use crate::memory;
use crate::oracle;
use crate::statevec::{InitPattern, StateVector, DEFAULT_QUBIT_CAP};

const PATTERN_HELP: &str =
    "Pattern letters, one per qubit, first letter = most significant bit:\n  \
Z = (1 0)   O = (0 1)   B = (1 1)\n\
Example: ZZB encodes (1 0)⊗(1 0)⊗(1 1) = (1 1 0 0 0 0 0 0).\n\n\
Function specs: expr:<expression> | minterms:<i,j,...> | needle:<k>\n  \
Expressions: postfix ' = NOT, juxtaposition = AND, + = OR, parentheses, 0, 1.\n  \
Default variable names are a, b, c, ... (first = most significant).";

const DEFAULT_GROVER_SHOTS: usize = 100;

#[derive(Debug, Parser)]
#[command(name = "qcam", version, about = "State vectors as RAM/CAM memory words", after_help = PATTERN_HELP)]
pub struct Cli {
    /// Amplitudes with magnitude at or below this count as zero.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tolerance: f64,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for sampling.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Number of measurement samples to draw.
    #[arg(long, global = true)]
    pub shots: Option<usize>,

    /// Largest register any command will allocate.
    #[arg(long, global = true, default_value_t = DEFAULT_QUBIT_CAP)]
    pub max_qubits: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the distinct words n qubits can hold.
    Capacity { n: usize },

    /// Encode a Z/O/B pattern as a state vector.
    Encode { pattern: String },

    /// Read one address of a stored word.
    Read { state: PathBuf, address: usize },

    /// Match a stored word against a Boolean function.
    Cam {
        state: PathBuf,
        function: String,
        /// Comma-separated variable names for expr: specs.
        #[arg(long)]
        vars: Option<String>,
    },

    /// Run Grover search for a Boolean function.
    Grover {
        function: String,
        #[arg(short = 'n', long = "qubits")]
        n: usize,
        /// AUTO or a fixed iteration count.
        #[arg(long, default_value = "AUTO")]
        iters: String,
        #[arg(long)]
        vars: Option<String>,
    },

    /// Emit the oracle netlist for a Boolean function.
    OracleEmit {
        function: String,
        #[arg(short = 'n', long = "qubits")]
        n: usize,
        #[arg(long)]
        vars: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Usage,
    Domain,
    Resource,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        Self {
            kind: ErrorKind::Usage,
            message: msg.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = if e.is_resource_limit() {
            ErrorKind::Resource
        } else {
            ErrorKind::Domain
        };
        Self {
            kind,
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Json(Value),
    Text(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

/// Outcome of one invocation. Exit code is 0 iff `status` is `Ok`.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Option<Payload>,
    pub error_message: Option<String>,
    pub exit_code: i32,
}

impl CommandResult {
    fn ok(payload: Payload) -> Self {
        Self {
            status: Status::Ok,
            payload: Some(payload),
            error_message: None,
            exit_code: 0,
        }
    }

    fn failed(err: CliError) -> Self {
        let exit_code = match err.kind {
            ErrorKind::Resource => 2,
            ErrorKind::Usage | ErrorKind::Domain => 1,
        };
        Self {
            status: Status::Error,
            payload: None,
            error_message: Some(err.message),
            exit_code,
        }
    }

    /// Text for stdout.
    pub fn stdout(&self) -> String {
        match (&self.payload, &self.error_message) {
            (Some(Payload::Json(v)), _) => format!("{v}\n"),
            (Some(Payload::Text(t)), _) => t.clone(),
            (None, msg) => format!(
                "{}\n",
                json!({"status": "error", "error_message": msg.clone().unwrap_or_default()})
            ),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                CommandResult::ok(Payload::Text(e.to_string()))
            }
            _ => CommandResult::failed(CliError::usage(e.to_string().trim_end().to_owned())),
        },
    }
}

/// Runs a parsed command; `--out` is honored here.
pub fn execute(cli: &Cli) -> CommandResult {
    let result = dispatch(cli).and_then(|payload| match &cli.out {
        Some(path) => {
            let body = CommandResult::ok(payload.clone()).stdout();
            fs::write(path, body)
                .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(Payload::Text(String::new()))
        }
        None => Ok(payload),
    });
    match result {
        Ok(p) => CommandResult::ok(p),
        Err(e) => CommandResult::failed(e),
    }
}

fn check_qubits(cli: &Cli, what: &'static str, n: usize) -> Result<(), CliError> {
    if n > cli.max_qubits {
        return Err(Error::ResourceLimit {
            what,
            requested: n,
            cap: cli.max_qubits,
        }
        .into());
    }
    Ok(())
}

fn load_state(cli: &Cli, path: &Path) -> Result<StateVector<f64>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    // check n against the cap before building the vector
    let header: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("{}: invalid JSON: {e}", path.display())))?;
    if let Some(n) = header.get("n").and_then(Value::as_u64) {
        check_qubits(cli, "state file", n as usize)?;
    }
    serde_json::from_value(header)
        .map_err(|e| CliError::usage(format!("{}: not a state vector: {e}", path.display())))
}

fn build_function(cli: &Cli, spec: &str, n: usize, vars: Option<&str>) -> Result<BoolFn, CliError> {
    check_qubits(cli, "function", n)?;
    let spec: FunctionSpec = spec.parse()?;
    let names: Option<Vec<String>> =
        vars.map(|v| v.split(',').map(|s| s.trim().to_owned()).collect());
    Ok(spec.build(n, names.as_deref())?)
}

fn bit_samples(p: f64, cli: &Cli) -> Option<Value> {
    let shots = cli.shots.unwrap_or(0);
    if shots == 0 {
        return None;
    }
    let seed = cli.seed.unwrap_or(0);
    let counts = grover::sample_counts(&[1.0 - p, p], shots, seed);
    Some(json!({
        "seed": seed,
        "rng": grover::RNG_NAME,
        "counts": {
            "0": counts.get(&0).copied().unwrap_or(0),
            "1": counts.get(&1).copied().unwrap_or(0),
        }
    }))
}

fn dispatch(cli: &Cli) -> Result<Payload, CliError> {
    if !(cli.tolerance > 0.0 && cli.tolerance.is_finite()) {
        return Err(CliError::usage("--tolerance must be a positive number"));
    }
    let eps = cli.tolerance;
    match &cli.command {
        Command::Capacity { n } => {
            let report = memory::capacity(*n);
            Ok(Payload::Json(
                serde_json::to_value(report).expect("serializable"),
            ))
        }
        Command::Encode { pattern } => {
            let pattern: InitPattern = pattern.parse()?;
            let psi = StateVector::<f64>::encode_with_cap(&pattern, cli.max_qubits)?;
            Ok(Payload::Json(
                serde_json::to_value(psi).expect("serializable"),
            ))
        }
        Command::Read { state, address } => {
            let psi = load_state(cli, state)?;
            let read = memory::ram_read(&psi, *address, eps)?;
            let mut out = json!({
                "address": address,
                "bit": u8::from(read.bit),
                "probability": read.probability,
            });
            if let Some(s) = bit_samples(read.probability, cli) {
                out["samples"] = s;
            }
            Ok(Payload::Json(out))
        }
        Command::Cam {
            state,
            function,
            vars,
        } => {
            let psi = load_state(cli, state)?;
            let f = build_function(cli, function, psi.n(), vars.as_deref())?;
            let probability = memory::cam_match(&psi, &f)?;
            let recognizes = memory::recognizes(&f, &psi, eps)?;
            let mut out = json!({"probability": probability, "recognizes": recognizes});
            if let Some(s) = bit_samples(probability, cli) {
                out["samples"] = s;
            }
            Ok(Payload::Json(out))
        }
        Command::Grover {
            function,
            n,
            iters,
            vars,
        } => {
            let f = build_function(cli, function, *n, vars.as_deref())?;
            let iterations: Iterations = iters.parse()?;
            let opts = RunOptions {
                iterations,
                seed: cli.seed,
                shots: cli.shots.unwrap_or(DEFAULT_GROVER_SHOTS),
            };
            let report = grover::run::<f64>(&f, &opts)?;
            Ok(Payload::Json(
                serde_json::to_value(report).expect("serializable"),
            ))
        }
        Command::OracleEmit { function, n, vars } => {
            let f = build_function(cli, function, *n, vars.as_deref())?;
            Ok(Payload::Text(oracle::emit_circuit(&f).to_string()))
        }
    }
}
