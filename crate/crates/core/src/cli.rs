//! Command-line front end.
//!
//! Every report is `{"config": <RunConfig>, "result": <payload>}` and holds
//! no timestamps, so identical invocations give byte-identical output.
//! `amplify` and `build` write an ordinary Hamiltonian file with the config
//! as an extra key.
//!
//! Exit codes: 0 ok, 1 usage, 2 input error, 3 capacity error,
//! 4 verification failure (including failed internal numeric checks).
//!
//! `PAULI_GAP_DENSE_LIMIT` and `PAULI_GAP_TERM_CAP` override the defaults in
//! [`Limits`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::amplify::{self, AmplifyParams, NormCheck};
use crate::error::Error;
use crate::game;
use crate::hamiltonian::{Hamiltonian, Limits};
use crate::io::{self, HamiltonianFile, StateFile};
use crate::models::{self, Model};
use crate::spectra::{self, EigOptions, StateVector};
use crate::sparsify::{self, SparsifyParams};

pub const ENV_DENSE_LIMIT: &str = "PAULI_GAP_DENSE_LIMIT";
pub const ENV_TERM_CAP: &str = "PAULI_GAP_TERM_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "pauli-gap", version, about = "Pauli 1-norm, energy games and gap amplification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    HadamardPower,
    XxzzChain,
    RandomLocal,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct Output {
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Subcommand, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Command {
    /// Write a model Hamiltonian.
    Build {
        #[arg(long, value_enum)]
        model: ModelKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        locality: usize,
        #[arg(long, default_value_t = 8)]
        terms: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Pauli 1-norm and operator norm.
    Norms {
        #[arg(long)]
        ham: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Extremal eigenvalues.
    Spectrum {
        #[arg(long)]
        ham: PathBuf,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 100_000)]
        max_iters: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Apply 2((I+H)/2)^{⊗k} - I.
    Amplify {
        #[arg(long)]
        ham: PathBuf,
        #[arg(long)]
        k: usize,
        /// Skip the ‖H‖ ≤ 1 check.
        #[arg(long)]
        assume_bounded: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Amplify and check every bound; exits 4 if any fails.
    VerifyLemma {
        #[arg(long)]
        ham: PathBuf,
        /// YES parameter; `inf` for λ_max = 1.
        #[arg(long, value_parser = parse_extended)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Simulate the energy-measurement game.
    Game {
        #[arg(long)]
        ham: PathBuf,
        /// A state file, or `top-eig` for the dense top eigenvector.
        #[arg(long)]
        state: String,
        #[arg(long)]
        shots: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Randomized term restriction against the Chernoff tail.
    Sparsify {
        #[arg(long)]
        ham: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

fn parse_extended(text: &str) -> Result<f64, String> {
    amplify::extended_real::parse(text)
}

impl Command {
    pub fn output(&self) -> &Output {
        match self {
            Command::Build { output, .. }
            | Command::Norms { output, .. }
            | Command::Spectrum { output, .. }
            | Command::Amplify { output, .. }
            | Command::VerifyLemma { output, .. }
            | Command::Game { output, .. }
            | Command::Sparsify { output, .. } => output,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Build { .. } => "build",
            Command::Norms { .. } => "norms",
            Command::Spectrum { .. } => "spectrum",
            Command::Amplify { .. } => "amplify",
            Command::VerifyLemma { .. } => "verify-lemma",
            Command::Game { .. } => "game",
            Command::Sparsify { .. } => "sparsify",
        }
    }
}

/// Everything that determines a run's output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    pub limits: Limits,
}

/// Rendered primary output plus whether verification failed.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub body: String,
    pub verification_failed: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{module}: {source}")]
    Module {
        module: &'static str,
        #[source]
        source: Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Module { source, .. } => match source {
                Error::Capacity { .. } => EXIT_CAPACITY,
                Error::Internal(_) | Error::ImaginaryResidue { .. } | Error::NotConverged { .. } => {
                    EXIT_VERIFICATION
                }
                _ => EXIT_INPUT,
            },
        }
    }
}

fn in_module(module: &'static str) -> impl Fn(Error) -> CliError {
    move |source| CliError::Module { module, source }
}

/// Limits from the environment, falling back to defaults.
pub fn limits_from_env() -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    let read = |key: &str| -> Result<Option<usize>, CliError> {
        match std::env::var(key) {
            Ok(v) => v
                .trim()
                .parse()
                .map(Some)
                .map_err(|_| CliError::Usage(format!("{key}={v:?} is not a non-negative integer"))),
            Err(_) => Ok(None),
        }
    };
    if let Some(v) = read(ENV_DENSE_LIMIT)? {
        limits.dense_limit = v;
    }
    if let Some(v) = read(ENV_TERM_CAP)? {
        limits.term_cap = v;
    }
    Ok(limits)
}

fn report(config: &RunConfig, result: Value) -> Result<String, CliError> {
    let doc = json!({ "config": config, "result": result });
    serde_json::to_string_pretty(&doc)
        .map(|s| s + "\n")
        .map_err(|e| in_module("cli")(e.into()))
}

fn hamiltonian_doc(config: &RunConfig, h: &Hamiltonian) -> Result<String, CliError> {
    let mut doc = serde_json::to_value(HamiltonianFile::from_hamiltonian(h)).map_err(|e| in_module("cli")(e.into()))?;
    doc["config"] = serde_json::to_value(config).map_err(|e| in_module("cli")(e.into()))?;
    serde_json::to_string_pretty(&doc)
        .map(|s| s + "\n")
        .map_err(|e| in_module("cli")(e.into()))
}

fn load(path: &PathBuf) -> Result<Hamiltonian, CliError> {
    io::load_hamiltonian(path).map_err(in_module("cli"))
}

fn json_only(config: &RunConfig) -> Result<(), CliError> {
    if config.command.output().format == Format::Csv {
        return Err(CliError::Usage(format!(
            "{} has no tabular output; use --format json",
            config.command.name()
        )));
    }
    Ok(())
}

/// Executes one subcommand and renders its primary output.
pub fn run(config: &RunConfig) -> Result<RunOutput, CliError> {
    let limits = &config.limits;
    let ok = |body: String| Ok(RunOutput {
        body,
        verification_failed: false,
    });
    match &config.command {
        Command::Build {
            model,
            n,
            locality,
            terms,
            seed,
            ..
        } => {
            json_only(config)?;
            let model = match model {
                ModelKind::HadamardPower => Model::HadamardPower { n: *n },
                ModelKind::XxzzChain => Model::XxzzChain { n: *n },
                ModelKind::RandomLocal => Model::RandomLocal {
                    n: *n,
                    locality: *locality,
                    terms: *terms,
                    seed: *seed,
                },
            };
            let h = models::build_model(&model).map_err(in_module("models"))?;
            ok(hamiltonian_doc(config, &h)?)
        }
        Command::Norms { ham, .. } => {
            json_only(config)?;
            let h = load(ham)?;
            let operator_norm = spectra::operator_norm(&h, limits).map_err(in_module("spectra"))?;
            let result = json!({
                "n": h.n(),
                "terms": h.len(),
                "locality": h.locality(),
                "pauli_1_norm": h.pauli_1_norm(),
                "operator_norm": operator_norm,
            });
            ok(report(config, result)?)
        }
        Command::Spectrum {
            ham, tol, max_iters, ..
        } => {
            json_only(config)?;
            let h = load(ham)?;
            let opts = EigOptions {
                tol: *tol,
                max_iters: *max_iters,
            };
            let r = spectra::extremal_eigs(&h, &opts, limits).map_err(in_module("spectra"))?;
            let result = json!({
                "lambda_max": r.lambda_max,
                "lambda_min": r.lambda_min,
                "operator_norm": r.operator_norm(),
                "method": r.method,
                "iterations": r.iterations,
                "residual": r.residual,
                "eigvec_max": r.eigvec_max.as_ref().map(StateFile::from_state),
            });
            ok(report(config, result)?)
        }
        Command::Amplify {
            ham, k, assume_bounded, ..
        } => {
            json_only(config)?;
            let h = load(ham)?;
            let check = if *assume_bounded { NormCheck::Assume } else { NormCheck::Auto };
            let out = amplify::amplify(&h, *k, check, limits).map_err(in_module("amplify"))?;
            ok(hamiltonian_doc(config, &out)?)
        }
        Command::VerifyLemma { ham, p, q, k, .. } => {
            json_only(config)?;
            let h = load(ham)?;
            let params = AmplifyParams::new(*k, *p, *q).map_err(in_module("amplify"))?;
            let r = amplify::verify_amplification(&h, &params, limits).map_err(in_module("amplify"))?;
            let failed = !r.all_bounds_hold;
            let value = serde_json::to_value(&r).map_err(|e| in_module("cli")(e.into()))?;
            Ok(RunOutput {
                body: report(config, value)?,
                verification_failed: failed,
            })
        }
        Command::Game {
            ham,
            state,
            shots,
            seed,
            output,
        } => {
            let h = load(ham)?;
            let psi = resolve_state(&h, state, limits)?;
            let t = game::simulate(&h, &psi, *shots, *seed).map_err(in_module("game"))?;
            match output.format {
                Format::Json => {
                    let value = serde_json::to_value(&t).map_err(|e| in_module("cli")(e.into()))?;
                    ok(report(config, value)?)
                }
                Format::Csv => ok(game_csv(&t)),
            }
        }
        Command::Sparsify {
            ham,
            m,
            delta,
            trials,
            seed,
            output,
        } => {
            let h = load(ham)?;
            let params = SparsifyParams {
                m: *m,
                delta: *delta,
                seed: *seed,
                trials: *trials,
            };
            let r = sparsify::empirical_deviation(&h, &params, limits).map_err(in_module("sparsify"))?;
            match output.format {
                Format::Json => {
                    let value = serde_json::to_value(&r).map_err(|e| in_module("cli")(e.into()))?;
                    ok(report(config, value)?)
                }
                Format::Csv => {
                    let mut s = String::from("trial,deviation,failed\n");
                    for (i, d) in r.deviations.iter().enumerate() {
                        s += &format!("{i},{d},{}\n", *d >= r.delta);
                    }
                    ok(s)
                }
            }
        }
    }
}

fn resolve_state(h: &Hamiltonian, state: &str, limits: &Limits) -> Result<StateVector, CliError> {
    if state != "top-eig" {
        return io::load_state(state).map_err(in_module("cli"));
    }
    if h.n() > limits.dense_limit {
        return Err(CliError::Module {
            module: "game",
            source: Error::InvalidParam(format!(
                "top-eig needs the dense path but n = {} exceeds the dense limit {}; pass --state <file>",
                h.n(),
                limits.dense_limit
            )),
        });
    }
    spectra::extremal_eigs(h, &EigOptions::default(), limits)
        .map_err(in_module("spectra"))?
        .eigvec_max
        .ok_or_else(|| CliError::Module {
            module: "spectra",
            source: Error::Internal("dense path returned no eigenvector".into()),
        })
}

fn game_csv(t: &game::GameTranscript) -> String {
    if t.rounds_elided {
        return format!(
            "shots,accepted,accept_frequency,std_error,exact_probability,seed\n{},{},{},{},{},{}\n",
            t.shots, t.accepted, t.accept_frequency, t.std_error, t.exact_probability, t.seed
        );
    }
    let mut s = String::from("round,term,coeff_sign,outcome,accepted\n");
    for (i, r) in t.rounds.iter().enumerate() {
        s += &format!("{i},{},{},{},{}\n", r.sampled_term, r.coeff_sign, r.outcome, r.accepted);
    }
    s
}

/// Parses `args`, runs, writes output, and returns the process exit code.
pub fn execute<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let result = limits_from_env().and_then(|limits| {
        let config = RunConfig {
            command: cli.command,
            limits,
        };
        let out = run(&config)?;
        write_output(&config, &out.body)?;
        Ok(out)
    });
    match result {
        Ok(out) if out.verification_failed => {
            eprintln!("error: verification failed (all_bounds_hold = false)");
            EXIT_VERIFICATION
        }
        Ok(_) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn write_output(config: &RunConfig, body: &str) -> Result<(), CliError> {
    match &config.command.output().out {
        Some(path) => std::fs::write(path, body).map_err(|e| in_module("cli")(e.into())),
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| in_module("cli")(e.into())),
    }
}
