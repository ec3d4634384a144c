//! Verification suites: each compares a stage of the compact machinery
//! against exact expectations or the dense oracle and reports the largest
//! deviation per check.

use bgue::category::Basis;
use bgue::evolution::{EvolutionSolution, SpectrumE};
use bgue::graph::{counts_by_p, enumerate_graphs, expected_count};
use bgue::liouvillian::{build_m, GeneratorMatrix};
use bgue::observable::{correlator, multi_time_correlator, MultiTimeSetup, OperatorSet};
use bgue::oracle::{
    build_dense, check_unitary_symmetry, contract_dense, dense_expm, embed_last_replicas, evolution_deviation,
    exact_generator_check, spectrum_containment, unitary_commutator_norm, Ensemble,
};
use clap::ValueEnum;
use ndarray::Array2;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::io::CliResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Counts,
    Matrix,
    Spectrum,
    Evolution,
    Observables,
    Symmetry,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Matrix => "matrix",
            Suite::Spectrum => "spectrum",
            Suite::Evolution => "evolution",
            Suite::Observables => "observables",
            Suite::Symmetry => "symmetry",
        }
    }
}

pub struct VerifyConfig {
    pub suite: Suite,
    pub n: usize,
    pub d: usize,
    pub j: f64,
    pub seed: u64,
    pub tol: f64,
    pub budget: usize,
}

struct Check {
    name: String,
    deviation: f64,
    tolerance: f64,
    detail: Value,
}

impl Check {
    fn new(name: impl Into<String>, deviation: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            deviation,
            tolerance,
            detail: Value::Null,
        }
    }

    fn with(mut self, detail: Value) -> Self {
        self.detail = detail;
        self
    }

    fn pass(&self) -> bool {
        self.deviation <= self.tolerance
    }
}

/// Runs a suite and returns `(passed, report)`.
pub fn run(cfg: &VerifyConfig) -> CliResult<(bool, Value)> {
    if cfg.n == 0 {
        return crate::io::fail("n must be at least 1");
    }
    if cfg.d < 1 {
        return crate::io::fail("D must be at least 1");
    }
    if cfg.tol.is_nan() || cfg.tol < 0.0 {
        return crate::io::fail("tolerance must be non-negative");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let checks = match cfg.suite {
        Suite::Counts => counts(cfg),
        Suite::Matrix => matrix(cfg)?,
        Suite::Spectrum => spectrum(cfg)?,
        Suite::Evolution => evolution(cfg, &mut rng)?,
        Suite::Observables => observables(cfg, &mut rng)?,
        Suite::Symmetry => symmetry(cfg, &mut rng)?,
    };
    let pass = checks.iter().all(Check::pass);
    let max_dev = checks.iter().map(|c| c.deviation).fold(0.0, f64::max);
    let report = json!({
        "suite": cfg.suite.name(),
        "n": cfg.n,
        "D": cfg.d,
        "J": cfg.j,
        "seed": cfg.seed,
        "tolerance": cfg.tol,
        "pass": pass,
        "max_deviation": max_dev,
        "checks": checks.iter().map(|c| {
            let mut v = json!({
                "name": c.name,
                "deviation": c.deviation,
                "tolerance": c.tolerance,
                "pass": c.pass(),
            });
            if !c.detail.is_null() {
                v["detail"] = c.detail.clone();
            }
            v
        }).collect::<Vec<_>>(),
    });
    Ok((pass, report))
}

fn counts(cfg: &VerifyConfig) -> Vec<Check> {
    let graphs = enumerate_graphs(cfg.n);
    let got = counts_by_p(&graphs, cfg.n);
    let want: Vec<usize> = (0..=cfg.n).map(|p| expected_count(cfg.n, p)).collect();
    let mismatched = got.iter().zip(&want).filter(|(a, b)| a != b).count();
    let total: usize = want.iter().sum();
    vec![
        Check::new("per-p counts", mismatched as f64, 0.0).with(json!({"got": got, "expected": want})),
        Check::new("total", graphs.len().abs_diff(total) as f64, 0.0)
            .with(json!({"got": graphs.len(), "expected": total})),
    ]
}

fn matrix(cfg: &VerifyConfig) -> CliResult<Vec<Check>> {
    let gm = build_m(cfg.n)?;
    let mismatches = exact_generator_check(&gm, cfg.d, cfg.budget)?;
    Ok(vec![
        Check::new("dense action of every column (exact)", mismatches as f64, 0.0)
            .with(json!({"categories": gm.dim()})),
        Check::new(
            "spectral term is w times identity",
            if gm.spectral_part_is_scalar() { 0.0 } else { 1.0 },
            0.0,
        ),
    ])
}

fn solve(gm: &GeneratorMatrix, cfg: &VerifyConfig) -> CliResult<EvolutionSolution> {
    Ok(EvolutionSolution::new(gm, cfg.d as f64, cfg.j)?)
}

fn spectrum(cfg: &VerifyConfig) -> CliResult<Vec<Check>> {
    let gm = build_m(cfg.n)?;
    let sol = solve(&gm, cfg)?;
    let spec = sol.spectrum();
    let scale = spec.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let max_re = spec.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    // A defective M_J (eigenvector condition ~1/ε) only pins its eigenvalues
    // down to about √ε, so that is the finest meaningful tolerance there.
    let defective = sol.uses_fallback();
    let re_tol = if defective {
        cfg.tol.max(f64::EPSILON.sqrt())
    } else {
        cfg.tol
    } * scale;
    let mut checks = vec![Check::new("max real part of M_J eigenvalues", max_re.max(0.0), re_tol)
        .with(json!({"max_real_part": max_re, "eigenvector_condition": sol.condition(), "defective": defective}))];
    match spectrum_containment(gm.basis(), &sol, cfg.d, cfg.budget)? {
        Some(dist) => checks.push(Check::new(
            "M_J eigenvalues lie in the dense spectrum",
            dist,
            cfg.tol * scale,
        )),
        None => checks.push(
            Check::new("M_J eigenvalues lie in the dense spectrum", 0.0, 0.0)
                .with(json!({"skipped": "category sums are linearly dependent at this D"})),
        ),
    }
    Ok(checks)
}

fn time_points(j: f64) -> Vec<f64> {
    let scale = if j == 0.0 { 1.0 } else { j.abs() };
    [0.25, 1.0, 4.0].iter().map(|x| x / scale).collect()
}

fn evolution<R: Rng>(cfg: &VerifyConfig, rng: &mut R) -> CliResult<Vec<Check>> {
    let gm = build_m(cfg.n)?;
    let sol = solve(&gm, cfg)?;
    let random_e = SpectrumE::random(cfg.d, rng);
    let mut checks = Vec::new();
    for (name, e) in [("E=0", SpectrumE::zero(cfg.d)), ("E random", random_e)] {
        for t in time_points(cfg.j) {
            let dev = evolution_deviation(&gm, &sol, cfg.d, &e, t, cfg.budget)?;
            checks.push(Check::new(
                format!("assembled vs dense expm, {name}, t={t}"),
                dev,
                cfg.tol,
            ));
        }
    }
    Ok(checks)
}

/// Random operators with entries uniform in `[-½, ½] + i[-½, ½]`.
pub fn random_ops<R: Rng>(count: usize, d: usize, rng: &mut R) -> CliResult<OperatorSet> {
    let ops = (0..count)
        .map(|_| {
            Array2::from_shape_fn((d, d), |_| {
                Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
            })
        })
        .collect();
    Ok(OperatorSet::new(ops)?)
}

fn relative(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

fn observables<R: Rng>(cfg: &VerifyConfig, rng: &mut R) -> CliResult<Vec<Check>> {
    let gm = build_m(cfg.n)?;
    let sol = solve(&gm, cfg)?;
    let ops = random_ops(2 * cfg.n, cfg.d, rng)?;
    let e = SpectrumE::random(cfg.d, rng);
    let dense = build_dense(cfg.n, cfg.d, Ensemble::Gue, cfg.j, &e, cfg.budget)?;
    let mut checks = Vec::new();
    for t in time_points(cfg.j) {
        let got = correlator(gm.basis(), &sol, &ops, &e, t)?.value;
        let want = contract_dense(&dense_expm(&dense, t)?, &ops, cfg.n)?;
        checks.push(
            Check::new(format!("correlator vs dense, t={t}"), relative(got, want), cfg.tol)
                .with(json!({"value": [got.re, got.im], "dense": [want.re, want.im]})),
        );
    }
    if cfg.n == 3 {
        let scale = if cfg.j == 0.0 { 1.0 } else { cfg.j.abs() };
        let times = [0.3 / scale, 0.7 / scale, 1.1 / scale];
        let (got, want) = multi_time_pair(&gm, &sol, cfg, &ops, &e, times)?;
        checks.push(
            Check::new(
                format!("multi-time correlator vs composed dense, t={times:?}"),
                relative(got, want),
                cfg.tol,
            )
            .with(json!({"value": [got.re, got.im], "dense": [want.re, want.im]})),
        );
    }
    Ok(checks)
}

fn multi_time_pair(
    gm3: &GeneratorMatrix,
    sol3: &EvolutionSolution,
    cfg: &VerifyConfig,
    ops: &OperatorSet,
    e: &SpectrumE,
    times: [f64; 3],
) -> CliResult<(Complex64, Complex64)> {
    let gm1 = build_m(1)?;
    let gm2 = build_m(2)?;
    let sol1 = solve(&gm1, cfg)?;
    let sol2 = solve(&gm2, cfg)?;
    let bases: [&Basis; 3] = [gm1.basis(), gm2.basis(), gm3.basis()];
    let setup = MultiTimeSetup {
        bases,
        solutions: [&sol1, &sol2, sol3],
    };
    let got = multi_time_correlator(&setup, ops, e, times)?.value;
    let [t1, t2, t3] = times;
    let stage = |k: usize, t: f64| -> CliResult<_> {
        let g = build_dense(k, cfg.d, Ensemble::Gue, cfg.j, e, cfg.budget)?;
        Ok(embed_last_replicas(&dense_expm(&g, t)?, 3, k, cfg.d)?)
    };
    let w = stage(1, t3 - t2)?.dot(&stage(2, t2 - t1)?).dot(&stage(3, t1)?);
    let want = contract_dense(&w, ops, 3)?;
    Ok((got, want))
}

fn symmetry<R: Rng>(cfg: &VerifyConfig, rng: &mut R) -> CliResult<Vec<Check>> {
    const TRIALS: usize = 20;
    let g = build_dense(cfg.n, cfg.d, Ensemble::Gue, cfg.j, &SpectrumE::zero(cfg.d), cfg.budget)?;
    let norm = check_unitary_symmetry(&g, TRIALS, rng)?;
    let e = SpectrumE::random(cfg.d, rng);
    let broken = build_dense(cfg.n, cfg.d, Ensemble::Gue, cfg.j, &e, cfg.budget)?;
    let control = unitary_commutator_norm(&broken, TRIALS, rng)?;
    // The control must register a clear violation; a tiny value would mean
    // the commutator test is blind.
    let control_gap = if control > 1e-3 { 0.0 } else { 1e-3 - control };
    Ok(vec![
        Check::new(
            format!("relative commutator with V⊗V*, {TRIALS} Haar unitaries"),
            norm,
            cfg.tol,
        ),
        Check::new("negative control (random E) detects broken symmetry", control_gap, 0.0)
            .with(json!({"commutator": control})),
    ])
}
