//! `bgue`: enumerate graphs, build the compact generator, evolve pattern
//! coefficients, evaluate correlators and run verification suites.
//!
//! Exit status: 0 on success, 1 when a verification suite fails, 2 for usage
//! and input errors.

mod io;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use bgue::category::discover;
use bgue::graph::{counts_by_p, enumerate_graphs, expected_count};
use bgue::liouvillian::{build_m, GeneratorMatrix};
use bgue::observable::{correlator, multi_time_correlator, CorrelatorValue, MultiTimeSetup};
use bgue::par::with_threads;
use bgue::{EvolutionSolution, DEFAULT_DENSE_BUDGET};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::io::{complex_json, fail, parse_grid, parse_three, read_ops, read_spectrum, CliResult, Sink};
use crate::verify::{Suite, VerifyConfig};

#[derive(Parser)]
#[command(name = "bgue", version, about = "Replica superoperators of the Brownian GUE")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest dense dimension D^(2n) any command may allocate.
    #[arg(long, global = true, default_value_t = DEFAULT_DENSE_BUDGET)]
    budget: usize,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Model {
    /// Number of replicas.
    #[arg(long)]
    n: usize,
    /// Hilbert-space dimension.
    #[arg(long = "D", alias = "d")]
    d: usize,
    /// Coupling rate.
    #[arg(long = "J", alias = "j", default_value_t = 1.0, allow_negative_numbers = true)]
    j: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Count the distinct graphs, in total and per number of pairs.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the categories with their sizes and members.
    Categories {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Emit the compact generator M and M_J (exact, or numeric at a given D).
    Matrix {
        #[arg(long)]
        n: usize,
        /// Evaluate M_J numerically at this dimension.
        #[arg(long = "numeric-D", alias = "numeric-d")]
        numeric_d: Option<f64>,
        #[arg(long = "J", alias = "j", default_value_t = 1.0, allow_negative_numbers = true)]
        j: f64,
    },
    /// Eigenvalues of M_J at numeric D and J.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long = "D", alias = "d")]
        d: f64,
        #[arg(long = "J", alias = "j", default_value_t = 1.0, allow_negative_numbers = true)]
        j: f64,
    },
    /// Pattern coefficients f_a(t) on a time grid, as CSV.
    Evolve {
        #[arg(long)]
        n: usize,
        #[arg(long = "D", alias = "d")]
        d: f64,
        #[arg(long = "J", alias = "j", default_value_t = 1.0, allow_negative_numbers = true)]
        j: f64,
        /// Time grid `t0:t1:steps`.
        #[arg(long)]
        times: String,
        /// Spectrum file `{"E": [..]}`; it only contributes the common phase
        /// e^{-iEt}, which is not part of f_a, so it is validated only.
        #[arg(long)]
        spectrum: Option<PathBuf>,
    },
    /// Correlator E Tr(O1(t) O2 ... O_{2n-1}(t) O_{2n}).
    Correlate {
        #[command(flatten)]
        model: Model,
        /// Operator file `{"ops": [[[re, im], ...], ...]}` (row-major).
        #[arg(long)]
        ops: PathBuf,
        /// Evolution time.
        #[arg(long)]
        t: f64,
        /// Spectrum file `{"E": [...]}` (default: E = 0).
        #[arg(long)]
        spectrum: Option<PathBuf>,
    },
    /// Three-time correlator E Tr(O1(t1) O2 O3(t2) O4 O5(t3) O6).
    CorrelateMulti {
        #[arg(long = "D", alias = "d")]
        d: usize,
        #[arg(long = "J", alias = "j", default_value_t = 1.0, allow_negative_numbers = true)]
        j: f64,
        #[arg(long)]
        ops: PathBuf,
        /// `t1,t2,t3` with 0 ≤ t1 ≤ t2 ≤ t3.
        #[arg(long)]
        times: String,
        /// Spectrum file `{"E": [...]}` (default: E = 0).
        #[arg(long)]
        spectrum: Option<PathBuf>,
    },
    /// Check a stage against exact expectations or the dense oracle.
    Verify {
        #[command(flatten)]
        model: Model,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Seed for randomized suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Tolerance for numeric deviations.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

fn check_n(n: usize) -> CliResult<()> {
    if n == 0 {
        return fail("n must be at least 1");
    }
    if n > 4 {
        return fail(format!("n={n} is beyond the supported range 1..=4"));
    }
    Ok(())
}

fn check_d(d: f64) -> CliResult<()> {
    if !(d.is_finite() && d > 0.0) {
        return fail(format!("D must be a positive number, got {d}"));
    }
    Ok(())
}

fn check_j(j: f64) -> CliResult<()> {
    if !j.is_finite() {
        return fail(format!("J must be finite, got {j}"));
    }
    Ok(())
}

fn integer_d(d: f64) -> CliResult<usize> {
    if d.fract() != 0.0 || d < 1.0 {
        return fail(format!("this command needs an integer D ≥ 1, got {d}"));
    }
    Ok(d as usize)
}

fn enumerate(n: usize, format: Format) -> CliResult<String> {
    check_n(n)?;
    let graphs = enumerate_graphs(n);
    let by_p = counts_by_p(&graphs, n);
    let expected: Vec<usize> = (0..=n).map(|p| expected_count(n, p)).collect();
    Ok(match format {
        Format::Text => {
            let mut s = format!("{}\n", graphs.len());
            for (p, c) in by_p.iter().enumerate() {
                s.push_str(&format!("p={p} {c}\n"));
            }
            s
        }
        Format::Json => json_text(&json!({
            "n": n,
            "total": graphs.len(),
            "by_p": by_p,
            "expected_by_p": expected,
        }))?,
    })
}

fn json_text(v: &Value) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn categories(n: usize, format: Format) -> CliResult<String> {
    check_n(n)?;
    let basis = discover(n)?;
    Ok(match format {
        Format::Text => {
            let mut s = format!("{} categories, {} graphs\n", basis.len(), basis.total_members());
            for (k, (c, r)) in basis.categories().iter().zip(basis.ranks()).enumerate() {
                s.push_str(&format!(
                    "{:>3}  rank {r}  size {:>4}  {}\n",
                    k + 1,
                    c.members.len(),
                    c.label
                ));
            }
            s
        }
        Format::Json => json_text(&json!({
            "n": n,
            "count": basis.len(),
            "total_members": basis.total_members(),
            "categories": basis.categories().iter().zip(basis.ranks()).enumerate().map(|(k, (c, r))| json!({
                "index": k + 1,
                "label": c.label.to_string(),
                "p": c.label.p,
                "rank": r,
                "size": c.members.len(),
                "members": c.members.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        }))?,
    })
}

fn labels(gm: &GeneratorMatrix) -> Vec<String> {
    gm.basis().categories().iter().map(|c| c.label.to_string()).collect()
}

fn matrix(n: usize, numeric_d: Option<f64>, j: f64) -> CliResult<String> {
    check_n(n)?;
    check_j(j)?;
    let gm = build_m(n)?;
    let exact = |rows: &[Vec<bgue::Coeff>]| -> Vec<Vec<String>> {
        rows.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect()
    };
    let mut out = json!({
        "n": n,
        "labels": labels(&gm),
        "M": exact(gm.entries()),
        "M_J": exact(&gm.m_j()),
    });
    if let Some(d) = numeric_d {
        check_d(d)?;
        let m = gm.m_j_numeric(d, j);
        out["numeric"] = json!({
            "D": d,
            "J": j,
            "M_J": m.rows().into_iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
        });
    }
    json_text(&out)
}

fn spectrum(n: usize, d: f64, j: f64) -> CliResult<String> {
    check_n(n)?;
    check_d(d)?;
    check_j(j)?;
    let gm = build_m(n)?;
    let sol = EvolutionSolution::new(&gm, d, j)?;
    let spec = sol.spectrum();
    let max_re = spec.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    json_text(&json!({
        "n": n,
        "D": d,
        "J": j,
        "eigenvalues": spec.iter().map(|z| complex_json(*z)).collect::<Vec<_>>(),
        "max_real_part": max_re,
        "eigenvector_condition": sol.condition(),
        "direct_exponential_fallback": sol.uses_fallback(),
    }))
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn evolve(n: usize, d: f64, j: f64, times: &str, spectrum: Option<PathBuf>) -> CliResult<String> {
    check_n(n)?;
    check_d(d)?;
    check_j(j)?;
    let grid = parse_grid(times)?;
    if spectrum.is_some() {
        read_spectrum(spectrum.as_deref(), integer_d(d)?)?;
    }
    let gm = build_m(n)?;
    let sol = EvolutionSolution::new(&gm, d, j)?;
    if sol.uses_fallback() {
        eprintln!(
            "warning: M_J is near-defective at D={d} (eigenvector condition {:.1e}); using the direct matrix exponential",
            sol.condition()
        );
    }
    let mut s = String::from("t");
    for l in labels(&gm) {
        s.push(',');
        s.push_str(&csv_quote(&format!("re {l}")));
        s.push(',');
        s.push_str(&csv_quote(&format!("im {l}")));
    }
    s.push('\n');
    let rows = bgue::par::map(&grid, |&t| sol.f(t));
    for (t, row) in grid.iter().zip(rows) {
        s.push_str(&format!("{t:?}"));
        for z in row? {
            s.push_str(&format!(",{:?},{:?}", z.re, z.im));
        }
        s.push('\n');
    }
    Ok(s)
}

fn correlator_json(labels: Vec<String>, v: &CorrelatorValue, extra: Value) -> CliResult<String> {
    let mut out = json!({
        "value": complex_json(v.value),
        "per_category": labels.into_iter().zip(&v.per_category).map(|(l, z)| json!({
            "label": l,
            "value": complex_json(*z),
        })).collect::<Vec<_>>(),
    });
    if let (Some(o), Value::Object(e)) = (out.as_object_mut(), extra) {
        o.extend(e);
    }
    json_text(&out)
}

fn correlate(model: &Model, ops: PathBuf, t: f64, spectrum: Option<PathBuf>) -> CliResult<String> {
    check_n(model.n)?;
    check_j(model.j)?;
    if !(t.is_finite() && t >= 0.0) {
        return fail(format!("t must be a non-negative number, got {t}"));
    }
    let ops = read_ops(&ops)?;
    if ops.dim() != model.d {
        return fail(format!("operators are {0}x{0} but D={1}", ops.dim(), model.d));
    }
    if ops.len() != 2 * model.n {
        return fail(format!(
            "{} operators supplied, n={} needs {}",
            ops.len(),
            model.n,
            2 * model.n
        ));
    }
    let e = read_spectrum(spectrum.as_deref(), model.d)?;
    let gm = build_m(model.n)?;
    let sol = EvolutionSolution::new(&gm, model.d as f64, model.j)?;
    let v = correlator(gm.basis(), &sol, &ops, &e, t)?;
    correlator_json(
        labels(&gm),
        &v,
        json!({"n": model.n, "D": model.d, "J": model.j, "t": t}),
    )
}

fn correlate_multi(d: usize, j: f64, ops: PathBuf, times: &str, spectrum: Option<PathBuf>) -> CliResult<String> {
    check_j(j)?;
    let times = parse_three(times)?;
    let ops = read_ops(&ops)?;
    if ops.dim() != d {
        return fail(format!("operators are {0}x{0} but D={d}", ops.dim()));
    }
    if ops.len() != 6 {
        return fail(format!(
            "{} operators supplied, the three-time correlator needs 6",
            ops.len()
        ));
    }
    let e = read_spectrum(spectrum.as_deref(), d)?;
    let gms = [build_m(1)?, build_m(2)?, build_m(3)?];
    let sols = [
        EvolutionSolution::new(&gms[0], d as f64, j)?,
        EvolutionSolution::new(&gms[1], d as f64, j)?,
        EvolutionSolution::new(&gms[2], d as f64, j)?,
    ];
    let setup = MultiTimeSetup {
        bases: [gms[0].basis(), gms[1].basis(), gms[2].basis()],
        solutions: [&sols[0], &sols[1], &sols[2]],
    };
    let v = multi_time_correlator(&setup, &ops, &e, times)?;
    correlator_json(labels(&gms[2]), &v, json!({"n": 3, "D": d, "J": j, "times": times}))
}

/// Runs a command; `Ok(false)` means a verification suite failed.
fn dispatch(cli: Cli) -> CliResult<bool> {
    let sink = Sink::new(cli.out.clone());
    let budget = cli.budget;
    let text = match cli.command {
        Command::Enumerate { n, format } => enumerate(n, format)?,
        Command::Categories { n, format } => categories(n, format)?,
        Command::Matrix { n, numeric_d, j } => matrix(n, numeric_d, j)?,
        Command::Spectrum { n, d, j } => spectrum(n, d, j)?,
        Command::Evolve {
            n,
            d,
            j,
            times,
            spectrum,
        } => evolve(n, d, j, &times, spectrum)?,
        Command::Correlate {
            model,
            ops,
            t,
            spectrum,
        } => correlate(&model, ops, t, spectrum)?,
        Command::CorrelateMulti {
            d,
            j,
            ops,
            times,
            spectrum,
        } => correlate_multi(d, j, ops, &times, spectrum)?,
        Command::Verify {
            model,
            suite,
            seed,
            tol,
        } => {
            check_n(model.n)?;
            check_j(model.j)?;
            let cfg = VerifyConfig {
                suite,
                n: model.n,
                d: model.d,
                j: model.j,
                seed,
                tol,
                budget,
            };
            let (pass, report) = verify::run(&cfg)?;
            sink.json(&report)?;
            return Ok(pass);
        }
    };
    sink.emit(&text)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads == Some(0) {
        eprintln!("error: --threads must be at least 1");
        return ExitCode::from(2);
    }
    let threads = cli.threads;
    match with_threads(threads, || dispatch(cli)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
