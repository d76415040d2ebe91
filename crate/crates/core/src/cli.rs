//! Command-line front end. Exit codes: 0 all checks pass, 1 mathematical
//! rejection, 2 internal-consistency failure, 3 usage or parse error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::algebra::Field;
use crate::analysis::{analyze, AnalysisError, Flat, Value};
use crate::detrep::SymDetRep;
use crate::examples::{build_example, ExampleError};
use crate::fourfold::{brute_force_oracle, OracleError};
use crate::lattice::ns2_gram;
use crate::repfile::{parse_repfile, write_repfile, RepFileError};
use crate::spin::{build_dual_graph, config_predicates, graph_stats, spin_subsets, theta_counts, Config};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cubicplane", version, about = "Cubic fourfolds containing a plane, from symmetric determinantal sextics")]
struct Cli {
    /// Worker threads for finite-field enumeration.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Full invariant report for a representation file.
    Analyze {
        file: PathBuf,
        /// Work over this field instead of the file's (`rational` or `fp:Q`).
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate Sing(X)(F_Q) point by point and compare with the assembly.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        prime: u64,
    },
    /// Build a named example, analyze it and compare with its expected values.
    Example {
        name: String,
        /// Parameter `KEY=VALUE`; repeatable.
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        /// Also write the representation file here.
        #[arg(long)]
        emit: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Dual-graph and theta-characteristic bookkeeping for a sextic configuration.
    Spin {
        /// e.g. `lines=6` or `line,quintic:nodes=5`.
        #[arg(long)]
        config: String,
        /// Number of nodes to remove.
        #[arg(long, default_value_t = 10)]
        k: usize,
        /// List every witness instead of the first.
        #[arg(long)]
        all: bool,
    },
    /// Gram matrix of the plane classes for M couples.
    Lattice {
        #[arg(long)]
        couples: usize,
    },
}

struct Failure(i32, String);

impl From<RepFileError> for Failure {
    fn from(e: RepFileError) -> Self {
        match e {
            RepFileError::Syntax { .. } => Failure(EXIT_USAGE, e.to_string()),
            RepFileError::Invalid(_) => Failure(EXIT_REJECTED, format!("rejected: {e}")),
        }
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Rejected(_) => Failure(EXIT_REJECTED, e.to_string()),
            AnalysisError::Internal(_) => Failure(EXIT_INTERNAL, e.to_string()),
        }
    }
}

impl From<ExampleError> for Failure {
    fn from(e: ExampleError) -> Self {
        match e {
            ExampleError::UnknownName(_) | ExampleError::UnknownParam { .. } | ExampleError::BadParam { .. } => {
                Failure(EXIT_USAGE, e.to_string())
            }
            _ => Failure(EXIT_REJECTED, format!("rejected: {e}")),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

fn load(path: &PathBuf, field: Option<&str>) -> Result<SymDetRep, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let rep = parse_repfile(&text).map_err(|e| match e {
        RepFileError::Syntax { .. } => usage(format!("{}: {e}", path.display())),
        other => Failure::from(other),
    })?;
    match field {
        None => Ok(rep),
        Some(f) => {
            let target: Field = f.parse().map_err(|e| usage(format!("--field: {e}")))?;
            rep.reduce(target)
                .map_err(|e| Failure(EXIT_REJECTED, format!("rejected: cannot pass to {target}: {e}")))
        }
    }
}

fn emit(out: &mut dyn Write, flat: &Flat, json: bool) {
    let text = if json { flat.to_json() } else { flat.to_text() };
    let _ = out.write_all(text.as_bytes());
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    if let Some(n) = cli.threads {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match cli.cmd {
        Cmd::Analyze { file, field, json } => {
            let rep = load(&file, field.as_deref())?;
            let report = analyze(&rep)?;
            emit(out, &report.flat(), json);
            Ok(if report.diagnostics.is_empty() { EXIT_OK } else { EXIT_REJECTED })
        }
        Cmd::Oracle { file, prime } => {
            let rep = load(&file, None)?;
            let found = brute_force_oracle(&rep, prime).map_err(|e| match e {
                OracleError::Reduction { .. } => Failure(EXIT_REJECTED, format!("rejected: {e}")),
                other => usage(other.to_string()),
            })?;
            let reduced = rep
                .reduce(Field::prime(prime).map_err(|e| usage(e.to_string()))?)
                .map_err(|e| Failure(EXIT_REJECTED, format!("rejected: {e}")))?;
            let assembled = analyze(&reduced)?.sing_x.points();
            let mut a: Vec<String> = assembled.iter().map(|p| p.to_string()).collect();
            let mut b: Vec<String> = found.iter().map(|p| p.to_string()).collect();
            a.sort();
            b.sort();
            let matches = a == b;
            let mut flat = Flat::default();
            flat.push("field", Value::Text(format!("fp:{prime}")));
            flat.push("oracle_count", Value::Int(b.len() as i64));
            flat.push("oracle_points", Value::List(b));
            flat.push("assembly_count", Value::Int(a.len() as i64));
            flat.push("assembly_points", Value::List(a));
            flat.push("oracle_matches_assembly", Value::Bool(matches));
            emit(out, &flat, false);
            Ok(if matches { EXIT_OK } else { EXIT_INTERNAL })
        }
        Cmd::Example { name, params, emit: path, json } => {
            let kv = params
                .iter()
                .map(|p| {
                    p.split_once('=')
                        .map(|(k, v)| (k.trim().to_string(), v.to_string()))
                        .ok_or_else(|| usage(format!("--param {p:?}: expected KEY=VALUE")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let ex = build_example(&name, &kv)?;
            if let Some(path) = path {
                let comment = std::iter::once(format!("example {}", ex.name))
                    .chain(ex.params.iter().map(|(k, v)| format!("{k} = {v}")))
                    .collect::<Vec<_>>()
                    .join("\n");
                std::fs::write(&path, write_repfile(&ex.rep, Some(&comment)))
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            let report = analyze(&ex.rep)?;
            let flat = report.flat();
            emit(out, &flat, json);
            let bad = ex.mismatches(&flat);
            if json {
                return Ok(if bad.is_empty() { EXIT_OK } else { EXIT_INTERNAL });
            }
            let _ = writeln!(out, "example = {}", ex.name);
            for (k, v) in &ex.params {
                let _ = writeln!(out, "param {k} = {v}");
            }
            for n in &ex.notes {
                let _ = writeln!(out, "note: {n}");
            }
            if ex.expected.is_empty() {
                let _ = writeln!(out, "expected = none (non-default parameters)");
            }
            for (k, want, got) in &bad {
                let _ = writeln!(out, "MISMATCH {k}: expected {want}, got {got}");
            }
            let _ = writeln!(out, "expected_matches = {}", bad.is_empty());
            Ok(if bad.is_empty() { EXIT_OK } else { EXIT_INTERNAL })
        }
        Cmd::Spin { config, k, all } => {
            let cfg: Config = config.parse().map_err(|e: crate::spin::SpinError| usage(e.to_string()))?;
            let g = build_dual_graph(&cfg.components, true).map_err(|e| Failure(EXIT_REJECTED, format!("rejected: {e}")))?;
            let pred = config_predicates(&cfg).map_err(|e| Failure(EXIT_REJECTED, format!("rejected: {e}")))?;
            let (even, b1) = graph_stats(&g);
            let pa = g.arithmetic_genus();
            let mut flat = Flat::default();
            flat.push("config", Value::Text(cfg.to_string()));
            flat.push("vertices", Value::Int(g.vertices.len() as i64));
            flat.push("cross_edges", Value::Int(g.cross_edge_count() as i64));
            flat.push("loops", Value::Int(g.loop_count() as i64));
            flat.push("arithmetic_genus", Value::Int(pa));
            flat.push("graph_even", Value::Bool(even));
            flat.push("b1", Value::Int(b1 as i64));
            if (0..=63).contains(&pa) {
                let (t, e, o) = theta_counts(pa as u32);
                flat.push("smooth_theta_total", Value::BigInt(t.to_string()));
                flat.push("smooth_theta_even", Value::BigInt(e.to_string()));
                flat.push("smooth_theta_odd", Value::BigInt(o.to_string()));
            }
            let subsets = spin_subsets(&g, k, all);
            flat.push("k", Value::Int(k as i64));
            flat.push("is_even_residual_witness", Value::Bool(!subsets.is_empty()));
            if all {
                flat.push("witness_count", Value::Int(subsets.len() as i64));
            }
            if let Some(w) = subsets.first() {
                flat.push("witness_removed", Value::List(w.removed.iter().map(|i| g.edges[*i].to_string()).collect()));
                flat.push(
                    "witness_residual_genera",
                    Value::List(w.residual_genera.iter().map(i64::to_string).collect()),
                );
                flat.push("witness_genus_one_component", Value::Bool(w.has_genus_one_component()));
                flat.push("witness_odd_choices", Value::BigInt(w.odd_choices.to_string()));
            }
            flat.push("satisfies_prop41i", Value::Bool(pred.satisfies_prop41i));
            flat.push("in_remark41_list", Value::Bool(pred.in_remark41_list));
            flat.push("admits_ten_node_witness", Value::Bool(pred.admits_ten_node_witness));
            flat.push("all_components_rational", Value::Bool(pred.all_components_rational));
            emit(out, &flat, false);
            Ok(EXIT_OK)
        }
        Cmd::Lattice { couples } => {
            let r = ns2_gram(couples).map_err(|e| Failure(EXIT_REJECTED, format!("rejected: {e}")))?;
            let mut flat = Flat::default();
            flat.push("ns2_m", Value::Int(r.m as i64));
            flat.push("ns2_class_count", Value::Int(r.class_count as i64));
            flat.push("ns2_det", Value::BigInt(r.det.to_string()));
            flat.push("ns2_rank", Value::Int(r.rank as i64));
            flat.push("ns2_rank_lower_bound", Value::Int(r.rank_lower_bound as i64));
            let rows = r
                .gram
                .iter()
                .map(|row| row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            flat.push("ns2_gram", Value::List(rows));
            emit(out, &flat, false);
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line `args` (program name first), writing the report to
/// `out` and errors to `err`; returns the exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
