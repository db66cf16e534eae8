//! Command-line frontend: checks a specification against a structure and
//! reports coverage, causes, and degrees of responsibility per state, plus
//! direct drivers for the circuit, compilation, clique, and causal-model
//! analyses.
//!
//! Exit codes: 0 on success (and satisfied specs), 1 when a checked
//! specification does not hold (or the clique oracles disagree), 2 on
//! usage, parse, or validation errors.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use respcov::causal::{self, Variant};
use respcov::circuit::{
    parse_assignment, parse_circuit, resp_binsearch, resp_bounded, resp_brute, resp_readonce,
    serialize_assignment, serialize_circuit, BoundedResp,
};
use respcov::cliquebench::{brute_max_clique, max_clique_via_resp, parse_graph, random_graph};
use respcov::compile::compile;
use respcov::coverage::{
    build_report, covered_prime_states, covered_states, is_cause_state, trans_q, Engine,
};
use respcov::ctl::{self, CtlFormula};
use respcov::kripke::{parse_structure, KripkeStructure};

#[derive(Parser)]
#[command(
    name = "respcov",
    version,
    about = "Coverage, causality, and responsibility analysis for model checking"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether the structure satisfies the specification.
    Check {
        /// Structure file (JSON).
        model: PathBuf,
        /// CTL formula, or @FILE to read it from a file.
        spec: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Per-state coverage / cause / responsibility report.
    Coverage {
        model: PathBuf,
        /// CTL formula, or @FILE to read it from a file.
        spec: String,
        /// Atomic proposition to mutate.
        #[arg(short, long)]
        q: String,
        /// What to report.
        #[arg(long, value_enum, default_value_t = Mode::Resp)]
        mode: Mode,
        /// Responsibility engine: direct, circuit, or bounded:K.
        #[arg(long, default_value = "direct")]
        engine: String,
        /// Worker threads for the per-state sweep.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Responsibility of one input variable in a circuit file.
    CircuitResp {
        circuit: PathBuf,
        assignment: PathBuf,
        /// The queried input variable.
        #[arg(long)]
        var: String,
        /// Algorithm: brute, bounded:K, binsearch, or readonce.
        #[arg(long, default_value = "brute")]
        algo: String,
        /// Restrict contingency flips to these variables (comma-separated;
        /// brute and bounded only).
        #[arg(long)]
        mutable: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Compile the product of a structure and a specification to a circuit.
    Compile {
        model: PathBuf,
        /// CTL formula, or @FILE to read it from a file.
        spec: String,
        /// Where to write the circuit document.
        #[arg(long)]
        out: PathBuf,
        /// Also write the label assignment of the structure.
        #[arg(long)]
        assignment_out: Option<PathBuf>,
        #[command(flatten)]
        format: OutputOpts,
    },
    /// Maximum clique via the responsibility reduction, cross-checked
    /// against brute force.
    Clique {
        /// Graph file (JSON); omit when generating with --random.
        graph: Option<PathBuf>,
        /// Generate a random graph with this many vertices instead.
        #[arg(long)]
        random: Option<usize>,
        /// Edge probability for --random.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Seed for --random.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Actual cause and responsibility in a binary causal model.
    CausalResp {
        /// Model file (JSON).
        model: PathBuf,
        /// Context, e.g. "u_st=1,u_bt=1".
        #[arg(long)]
        context: String,
        /// The candidate cause variable.
        #[arg(long)]
        var: String,
        /// Its value in the candidate cause event.
        #[arg(long)]
        value: u8,
        /// Event formula, e.g. "BS=1".
        #[arg(long)]
        phi: String,
        /// Witness condition variant.
        #[arg(long, value_enum, default_value_t = VariantArg::Def2)]
        variant: VariantArg,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Args)]
struct OutputOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable text.
    Table,
    /// Stable machine-readable JSON.
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Resp,
    Covered,
    Cause,
    CoverPrime,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Def2,
    Ac2prime,
}

/// A failure that should surface as exit code 2 with a diagnostic.
struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Check { model, spec, out } => cmd_check(&model, &spec, out.format),
        Command::Coverage {
            model,
            spec,
            q,
            mode,
            engine,
            jobs,
            out,
        } => cmd_coverage(&model, &spec, &q, mode, &engine, jobs, out.format),
        Command::CircuitResp {
            circuit,
            assignment,
            var,
            algo,
            mutable,
            out,
        } => cmd_circuit_resp(
            &circuit,
            &assignment,
            &var,
            &algo,
            mutable.as_deref(),
            out.format,
        ),
        Command::Compile {
            model,
            spec,
            out,
            assignment_out,
            format,
        } => cmd_compile(
            &model,
            &spec,
            &out,
            assignment_out.as_deref(),
            format.format,
        ),
        Command::Clique {
            graph,
            random,
            p,
            seed,
            out,
        } => cmd_clique(graph.as_deref(), random, p, seed, out.format),
        Command::CausalResp {
            model,
            context,
            var,
            value,
            phi,
            variant,
            out,
        } => cmd_causal_resp(&model, &context, &var, value, &phi, variant, out.format),
    }
}

fn load_model(path: &std::path::Path) -> Result<KripkeStructure, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError(format!("reading {}: {e}", path.display())))?;
    Ok(parse_structure(&text)?)
}

/// A spec argument is a formula, or `@path` to read formulas from a file,
/// one per non-empty line.
fn load_specs(arg: &str) -> Result<Vec<CtlFormula>, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text =
                fs::read_to_string(path).map_err(|e| CliError(format!("reading {path}: {e}")))?;
            let mut out = Vec::new();
            for line in text.lines() {
                let line = line.trim();
                if !line.is_empty() {
                    out.push(ctl::parse(line)?);
                }
            }
            if out.is_empty() {
                return Err(CliError(format!("{path} contains no formulas")));
            }
            Ok(out)
        }
        None => Ok(vec![ctl::parse(arg.trim())?]),
    }
}

/// For the commands that analyze a single specification.
fn load_spec(arg: &str) -> Result<CtlFormula, CliError> {
    let mut specs = load_specs(arg)?;
    if specs.len() > 1 {
        return Err(CliError(
            "this command takes exactly one formula, but the file has several".into(),
        ));
    }
    Ok(specs.pop().expect("load_specs rejects empty files"))
}

fn emit<T: Serialize>(format: Format, table: impl FnOnce() -> String, value: &T) {
    match format {
        Format::Table => print!("{}", table()),
        Format::Structured => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("report types serialize")
        ),
    }
}

fn cmd_check(model: &std::path::Path, spec: &str, format: Format) -> Result<ExitCode, CliError> {
    let k = load_model(model)?;
    let specs = load_specs(spec)?;
    let mut results = Vec::with_capacity(specs.len());
    for phi in &specs {
        results.push((phi, ctl::satisfies(&k, phi)?));
    }
    let all_satisfied = results.iter().all(|(_, s)| *s);

    #[derive(Serialize)]
    struct VerdictOut {
        spec: String,
        satisfied: bool,
    }
    #[derive(Serialize)]
    struct CheckOut<'a> {
        command: &'a str,
        initial: &'a str,
        results: Vec<VerdictOut>,
        satisfied: bool,
    }
    emit(
        format,
        || {
            results
                .iter()
                .map(|(phi, s)| {
                    format!(
                        "{}: {} at {}\n",
                        if *s { "satisfied" } else { "not satisfied" },
                        phi,
                        k.initial()
                    )
                })
                .collect()
        },
        &CheckOut {
            command: "check",
            initial: k.initial(),
            results: results
                .iter()
                .map(|(phi, s)| VerdictOut {
                    spec: phi.to_string(),
                    satisfied: *s,
                })
                .collect(),
            satisfied: all_satisfied,
        },
    );
    Ok(if all_satisfied {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn parse_engine(text: &str) -> Result<Engine, CliError> {
    match text {
        "direct" => Ok(Engine::Direct),
        "circuit" => Ok(Engine::Circuit),
        _ => match text.strip_prefix("bounded:") {
            Some(k) => {
                let k: usize = k
                    .parse()
                    .map_err(|_| CliError(format!("invalid bound in engine `{text}`")))?;
                if k == 0 {
                    return Err(CliError("engine bound must be at least 1".into()));
                }
                Ok(Engine::Bounded(k))
            }
            None => Err(CliError(format!(
                "unknown engine `{text}` (expected direct, circuit, or bounded:K)"
            ))),
        },
    }
}

fn cmd_coverage(
    model: &std::path::Path,
    spec: &str,
    q: &str,
    mode: Mode,
    engine: &str,
    jobs: usize,
    format: Format,
) -> Result<ExitCode, CliError> {
    let k = load_model(model)?;
    let phi = load_spec(spec)?;
    let engine = parse_engine(engine)?;
    if matches!(engine, Engine::Bounded(_)) && mode != Mode::Resp {
        return Err(CliError(
            "a bounded engine only applies to --mode resp".into(),
        ));
    }
    if mode == Mode::CoverPrime && engine != Engine::Direct {
        return Err(CliError(
            "--mode cover-prime evaluates the transformed specification directly; \
             drop the --engine flag"
                .into(),
        ));
    }
    if jobs == 0 || jobs > 256 {
        return Err(CliError("--jobs must be between 1 and 256".into()));
    }

    // The spec-not-satisfied precondition surfaces as exit 1, not 2.
    let not_satisfied = |e: respcov::coverage::CoverageError| -> Result<ExitCode, CliError> {
        if matches!(e, respcov::coverage::CoverageError::SpecNotSatisfied) {
            eprintln!("error: {e}");
            Ok(ExitCode::from(1))
        } else {
            Err(e.into())
        }
    };

    #[derive(Serialize)]
    struct SetOut<'a> {
        command: &'a str,
        mode: &'a str,
        spec: String,
        q: &'a str,
        #[serde(skip_serializing_if = "Option::is_none")]
        transformed_spec: Option<String>,
        states: Vec<String>,
    }

    match mode {
        Mode::Resp => {
            let report = match build_report(&k, &phi, q, engine, jobs) {
                Ok(r) => r,
                Err(e) => return not_satisfied(e),
            };
            emit(format, || report.to_table(), &report);
        }
        Mode::Covered | Mode::Cause => {
            // The direct engine uses the definitional checks; the circuit
            // engine derives the sets from a compiled-product report.
            let states: Vec<String> = match (engine, mode) {
                (Engine::Circuit, _) => {
                    let report = match build_report(&k, &phi, q, engine, jobs) {
                        Ok(r) => r,
                        Err(e) => return not_satisfied(e),
                    };
                    let set = if mode == Mode::Covered {
                        report.covered_set()
                    } else {
                        report.cause_set()
                    };
                    set.into_iter().map(str::to_string).collect()
                }
                (_, Mode::Covered) => match covered_states(&k, &phi, q) {
                    Ok(s) => s.into_iter().collect(),
                    Err(e) => return not_satisfied(e),
                },
                _ => {
                    let mut out = Vec::new();
                    for w in k.states() {
                        match is_cause_state(&k, &phi, q, w) {
                            Ok(true) => out.push(w.clone()),
                            Ok(false) => {}
                            Err(e) => return not_satisfied(e),
                        }
                    }
                    out
                }
            };
            let (mode_name, heading) = if mode == Mode::Covered {
                ("covered", format!("{q}-covered states"))
            } else {
                ("cause", format!("cause states w.r.t. {q}"))
            };
            emit(
                format,
                || format!("{heading}: {}\n", render_set(&states)),
                &SetOut {
                    command: "coverage",
                    mode: mode_name,
                    spec: phi.to_string(),
                    q,
                    transformed_spec: None,
                    states: states.clone(),
                },
            );
        }
        Mode::CoverPrime => {
            let (transformed, _fresh) = trans_q(&phi, q)?;
            let set = match covered_prime_states(&k, &phi, q) {
                Ok(s) => s,
                Err(e) => return not_satisfied(e),
            };
            let states: Vec<String> = set.into_iter().collect();
            emit(
                format,
                || {
                    format!(
                        "{q}-covered' states: {}\ntransformed spec: {}\n",
                        render_set(&states),
                        transformed
                    )
                },
                &SetOut {
                    command: "coverage",
                    mode: "cover-prime",
                    spec: phi.to_string(),
                    q,
                    transformed_spec: Some(transformed.to_string()),
                    states: states.clone(),
                },
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn render_set(states: &[String]) -> String {
    if states.is_empty() {
        "{}".to_string()
    } else {
        format!("{{{}}}", states.join(", "))
    }
}

#[derive(Serialize)]
struct RespOut<'a> {
    command: &'a str,
    var: &'a str,
    algo: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    dr: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    below: Option<String>,
    witness_size: Option<usize>,
    witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_queries: Option<usize>,
}

fn resp_table(out: &RespOut) -> String {
    let mut line = match (&out.dr, &out.below) {
        (Some(dr), _) => format!("dr({}) = {dr}", out.var),
        (None, Some(b)) => format!("dr({}) < {b}", out.var),
        _ => unreachable!(),
    };
    if let Some(w) = &out.witness {
        line.push_str(&format!("  witness {}", render_set(w)));
    }
    if let Some(q) = out.oracle_queries {
        line.push_str(&format!("  oracle queries: {q}"));
    }
    line.push_str(&format!("  [{}]", out.algo));
    line.push('\n');
    line
}

fn cmd_circuit_resp(
    circuit_path: &std::path::Path,
    assignment_path: &std::path::Path,
    var: &str,
    algo: &str,
    mutable: Option<&str>,
    format: Format,
) -> Result<ExitCode, CliError> {
    let circuit = parse_circuit(
        &fs::read_to_string(circuit_path)
            .map_err(|e| CliError(format!("reading {}: {e}", circuit_path.display())))?,
    )?;
    let f = parse_assignment(
        &fs::read_to_string(assignment_path)
            .map_err(|e| CliError(format!("reading {}: {e}", assignment_path.display())))?,
    )?;
    let mutable_set = match mutable {
        None => circuit.inputs().iter().cloned().collect(),
        Some(list) => {
            if !(algo == "brute" || algo.starts_with("bounded:")) {
                return Err(CliError(
                    "--mutable only applies to the brute and bounded algorithms".into(),
                ));
            }
            list.split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect()
        }
    };

    let (result, queries) = match algo {
        "brute" => (
            BoundedResp::Exact(resp_brute(
                &circuit,
                var,
                circuit.output(),
                &f,
                &mutable_set,
            )?),
            None,
        ),
        "binsearch" => {
            let (r, q) = resp_binsearch(&circuit, var, &f)?;
            (BoundedResp::Exact(r), Some(q))
        }
        "readonce" => (BoundedResp::Exact(resp_readonce(&circuit, var, &f)?), None),
        _ => match algo.strip_prefix("bounded:") {
            Some(k) => {
                let k: usize = k
                    .parse()
                    .map_err(|_| CliError(format!("invalid bound in algo `{algo}`")))?;
                (resp_bounded(&circuit, var, &f, &mutable_set, k)?, None)
            }
            None => {
                return Err(CliError(format!(
                    "unknown algorithm `{algo}` (expected brute, bounded:K, binsearch, or readonce)"
                )))
            }
        },
    };

    let out = match &result {
        BoundedResp::Exact(r) => RespOut {
            command: "circuit-resp",
            var,
            algo,
            dr: Some(r.responsibility().to_string()),
            below: None,
            witness_size: r.witness_size(),
            witness: r.witness().map(|w| w.iter().cloned().collect()),
            oracle_queries: queries,
        },
        BoundedResp::BelowThreshold { threshold } => RespOut {
            command: "circuit-resp",
            var,
            algo,
            dr: None,
            below: Some(format!("1/{threshold}")),
            witness_size: None,
            witness: None,
            oracle_queries: queries,
        },
    };
    emit(format, || resp_table(&out), &out);
    Ok(ExitCode::SUCCESS)
}

fn cmd_compile(
    model: &std::path::Path,
    spec: &str,
    out_path: &std::path::Path,
    assignment_out: Option<&std::path::Path>,
    format: Format,
) -> Result<ExitCode, CliError> {
    let k = load_model(model)?;
    let phi = load_spec(spec)?;
    let product = compile(&k, &phi)?;
    fs::write(out_path, serialize_circuit(product.circuit()))
        .map_err(|e| CliError(format!("writing {}: {e}", out_path.display())))?;
    if let Some(path) = assignment_out {
        fs::write(path, serialize_assignment(&product.leaf_assignment(&k)))
            .map_err(|e| CliError(format!("writing {}: {e}", path.display())))?;
    }

    #[derive(Serialize)]
    struct CompileOut<'a> {
        command: &'a str,
        spec: String,
        gates: usize,
        inputs: usize,
        out: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        assignment_out: Option<String>,
    }
    let summary = CompileOut {
        command: "compile",
        spec: phi.to_string(),
        gates: product.circuit().gate_count(),
        inputs: product.circuit().inputs().len(),
        out: out_path.display().to_string(),
        assignment_out: assignment_out.map(|p| p.display().to_string()),
    };
    emit(
        format,
        || {
            format!(
                "wrote {} gates over {} inputs to {}{}\n",
                summary.gates,
                summary.inputs,
                summary.out,
                summary
                    .assignment_out
                    .as_deref()
                    .map(|p| format!(", labels to {p}"))
                    .unwrap_or_default()
            )
        },
        &summary,
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_clique(
    graph_path: Option<&std::path::Path>,
    random: Option<usize>,
    p: f64,
    seed: u64,
    format: Format,
) -> Result<ExitCode, CliError> {
    let graph = match (graph_path, random) {
        (Some(path), None) => parse_graph(
            &fs::read_to_string(path)
                .map_err(|e| CliError(format!("reading {}: {e}", path.display())))?,
        )?,
        (None, Some(n)) => random_graph(n, p, seed)?,
        _ => {
            return Err(CliError(
                "pass exactly one of a graph file or --random N".into(),
            ))
        }
    };
    let via_resp = max_clique_via_resp(&graph);
    let brute = brute_max_clique(&graph)?;
    let agree = via_resp == brute;

    #[derive(Serialize)]
    struct CliqueOut<'a> {
        command: &'a str,
        vertices: usize,
        edges: usize,
        omega_responsibility: usize,
        omega_brute: usize,
        agree: bool,
    }
    emit(
        format,
        || {
            format!(
                "ω = {via_resp} (responsibility) / {brute} (brute force): {}\n",
                if agree { "AGREE" } else { "DISAGREE" }
            )
        },
        &CliqueOut {
            command: "clique",
            vertices: graph.vertices().len(),
            edges: graph.edge_count(),
            omega_responsibility: via_resp,
            omega_brute: brute,
            agree,
        },
    );
    Ok(if agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn parse_context(text: &str) -> Result<causal::Context, CliError> {
    let mut values = BTreeMap::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (name, bit) = part
            .split_once('=')
            .ok_or_else(|| CliError(format!("context entry `{part}` is not name=bit")))?;
        let bit = match bit.trim() {
            "0" => false,
            "1" => true,
            other => return Err(CliError(format!("context value `{other}` must be 0 or 1"))),
        };
        values.insert(name.trim().to_string(), bit);
    }
    Ok(causal::Context::new(values))
}

fn cmd_causal_resp(
    model_path: &std::path::Path,
    context: &str,
    var: &str,
    value: u8,
    phi: &str,
    variant: VariantArg,
    format: Format,
) -> Result<ExitCode, CliError> {
    let model = causal::parse_model(
        &fs::read_to_string(model_path)
            .map_err(|e| CliError(format!("reading {}: {e}", model_path.display())))?,
    )?;
    let u = parse_context(context)?;
    let x_val = match value {
        0 => false,
        1 => true,
        other => return Err(CliError(format!("--value must be 0 or 1, got {other}"))),
    };
    let phi = causal::parse_event_formula(phi)?;
    let variant = match variant {
        VariantArg::Def2 => Variant::Def2,
        VariantArg::Ac2prime => Variant::Ac2Prime,
    };

    let cause = causal::is_cause(&model, &u, var, x_val, &phi, variant)?;
    let resp = causal::responsibility(&model, &u, var, x_val, &phi, variant)?;

    #[derive(Serialize)]
    struct CausalOut<'a> {
        command: &'a str,
        var: &'a str,
        value: u8,
        phi: String,
        variant: &'a str,
        cause: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<Vec<String>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        setting: Option<BTreeMap<String, u8>>,
        dr: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        ac1_violated: Option<String>,
    }

    let variant_name = match variant {
        Variant::Def2 => "def2",
        Variant::Ac2Prime => "ac2prime",
    };
    let out = match (&cause, &resp) {
        (causal::CauseOutcome::Ac1Violated { reason }, _) => CausalOut {
            command: "causal-resp",
            var,
            value,
            phi: phi.to_string(),
            variant: variant_name,
            cause: false,
            witness: None,
            setting: None,
            dr: None,
            ac1_violated: Some(reason.clone()),
        },
        (causal::CauseOutcome::Cause { witness, setting }, r) => CausalOut {
            command: "causal-resp",
            var,
            value,
            phi: phi.to_string(),
            variant: variant_name,
            cause: true,
            witness: Some(witness.iter().cloned().collect()),
            setting: Some(
                setting
                    .iter()
                    .map(|(k, v)| (k.clone(), u8::from(*v)))
                    .collect(),
            ),
            dr: r.as_exact().map(|r| r.responsibility().to_string()),
            ac1_violated: None,
        },
        (causal::CauseOutcome::NotACause, r) => CausalOut {
            command: "causal-resp",
            var,
            value,
            phi: phi.to_string(),
            variant: variant_name,
            cause: false,
            witness: None,
            setting: None,
            dr: r.as_exact().map(|r| r.responsibility().to_string()),
            ac1_violated: None,
        },
    };
    emit(
        format,
        || match (&out.ac1_violated, out.cause) {
            (Some(reason), _) => {
                format!("{var}={value} fails the factuality condition for {phi}: {reason}\n")
            }
            (None, true) => {
                let setting = out
                    .setting
                    .as_ref()
                    .map(|s| {
                        s.iter()
                            .map(|(k, v)| format!("{k}={v}"))
                            .collect::<Vec<_>>()
                            .join(", ")
                    })
                    .unwrap_or_default();
                format!(
                    "{var}={value} is a cause of {phi} ({variant_name}): witness {{{setting}}}, dr = {}\n",
                    out.dr.as_deref().unwrap_or("?")
                )
            }
            (None, false) => {
                format!("{var}={value} is not a cause of {phi} ({variant_name}); dr = 0\n")
            }
        },
        &out,
    );
    Ok(ExitCode::SUCCESS)
}
