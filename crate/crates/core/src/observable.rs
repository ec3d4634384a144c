//! Correlators from category expansions by loop walking.
//!
//! Contracting `𝓤ₙ(t)` with operators `O₁ … O_{2n}` gives
//! `𝔼 Tr(O₁(t) O₂ O₃(t) O₄ ⋯)`, with `O(t) = U†OU`. In index form, every
//! operator is a bridge between two endpoints of the diagram:
//! - `O_{2i−1}[J_i, I_i]` joins the row endpoints `J_i → I_i`;
//! - `O_{2i}[I'_i, J'_{i+1}]` joins the column endpoints `I'_i → J'_{i+1}`.
//!
//! Together with the graph's deltas (free paths) the bridges form closed
//! loops. Each loop contributes the trace of the ordered product of its
//! operators, transposed where a bridge is traversed backwards.
//! A spectrum `E` only dresses the row bridges:
//! `O_{2i−1} → e^{iHt} O_{2i−1} e^{−iHt}` with `H = diag(E)`.

use ndarray::Array2;
use num_complex::Complex64;

use crate::category::Basis;
use crate::error::{Error, Result};
use crate::evolution::{EvolutionSolution, SpectrumE};
use crate::graph::Graph;
use crate::linalg::CMatrix;
use crate::par;

/// Operators `O₁ … O_{2n}`, all `D × D`.
#[derive(Clone, Debug)]
pub struct OperatorSet {
    ops: Vec<CMatrix>,
}

impl OperatorSet {
    pub fn new(ops: Vec<CMatrix>) -> Result<Self> {
        let d = ops.first().map(|o| o.nrows()).unwrap_or(0);
        if d == 0 {
            return Err(Error::Domain("operator set is empty".into()));
        }
        for (k, o) in ops.iter().enumerate() {
            if o.nrows() != d || o.ncols() != d {
                return Err(Error::Size(format!(
                    "operator {} is {}x{}, expected {d}x{d}",
                    k + 1,
                    o.nrows(),
                    o.ncols()
                )));
            }
            if o.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::Domain(format!("operator {} has non-finite entries", k + 1)));
            }
        }
        Ok(Self { ops })
    }

    pub fn ops(&self) -> &[CMatrix] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.ops[0].nrows()
    }

    /// Row bridges Heisenberg-evolved: `O_{2i−1} → e^{iHt_i} O e^{−iHt_i}`
    /// with replica-dependent times.
    fn dressed(&self, e: &SpectrumE, times: &[f64]) -> Vec<CMatrix> {
        self.ops
            .iter()
            .enumerate()
            .map(|(k, o)| {
                if k % 2 == 1 || e.is_zero() {
                    return o.clone();
                }
                let t = times[k / 2];
                Array2::from_shape_fn(o.raw_dim(), |(a, b)| {
                    o[[a, b]] * Complex64::from_polar(1.0, t * (e.energy(a) - e.energy(b)))
                })
            })
            .collect()
    }
}

/// Bridge endpoints: `(first, second)` index points of operator `k`.
fn bridge(n: usize, k: usize) -> (usize, usize) {
    let r = k / 2;
    if k % 2 == 0 {
        (2 * r + 1, 2 * r)
    } else {
        (2 * n + 2 * r, 2 * n + 2 * ((r + 1) % n) + 1)
    }
}

/// Loop-walk contraction of one graph with prepared operators.
fn walk(g: &Graph, ops: &[CMatrix]) -> Complex64 {
    let n = g.n();
    let m = g.matching();
    let mut owner = vec![(0usize, false); 4 * n];
    for k in 0..2 * n {
        let (f, s) = bridge(n, k);
        owner[f] = (k, true);
        owner[s] = (k, false);
    }
    let mut used = vec![false; 2 * n];
    let mut value = Complex64::new(1.0, 0.0);
    for start in 0..2 * n {
        if used[start] {
            continue;
        }
        used[start] = true;
        let (start_point, mut at) = bridge(n, start);
        let mut prod = ops[start].clone();
        loop {
            let y = m[at];
            if y == start_point {
                break;
            }
            let (k, forward) = owner[y];
            used[k] = true;
            let (f, s) = bridge(n, k);
            if forward {
                prod = prod.dot(&ops[k]);
                at = s;
            } else {
                prod = prod.dot(&ops[k].t());
                at = f;
            }
        }
        value *= prod.diag().sum();
    }
    value
}

fn check_ops(n: usize, ops: &OperatorSet, e: &SpectrumE) -> Result<()> {
    if ops.len() != 2 * n {
        return Err(Error::Size(format!(
            "{} operators for n={n} (need {})",
            ops.len(),
            2 * n
        )));
    }
    e.check(ops.dim())
}

/// `F[O₁, …, O_{2n}]` for one graph, with `e^{−i𝖤t}` absorbed into the
/// row bridges.
pub fn contract_graph(g: &Graph, ops: &OperatorSet, e: &SpectrumE, t: f64) -> Result<Complex64> {
    let n = g.n();
    check_ops(n, ops, e)?;
    Ok(walk(g, &ops.dressed(e, &vec![t; n])))
}

/// Sum of [`contract_graph`] over all members of each category.
pub fn contract_categories(basis: &Basis, ops: &OperatorSet, e: &SpectrumE, t: f64) -> Result<Vec<Complex64>> {
    let n = basis.n();
    check_ops(n, ops, e)?;
    let dressed = ops.dressed(e, &vec![t; n]);
    Ok(par::map(basis.categories(), |c| {
        c.members.iter().map(|g| walk(g, &dressed)).sum()
    }))
}

/// A correlator value with its per-category contributions `f_a · F_a[O]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrelatorValue {
    pub value: Complex64,
    pub per_category: Vec<Complex64>,
}

/// `𝔼 Tr(O₁(t) O₂ ⋯ O_{2n−1}(t) O_{2n})` from the category expansion.
pub fn correlator(
    basis: &Basis,
    sol: &EvolutionSolution,
    ops: &OperatorSet,
    e: &SpectrumE,
    t: f64,
) -> Result<CorrelatorValue> {
    if sol.n() != basis.n() || (sol.d() - ops.dim() as f64).abs() > 0.0 {
        return Err(Error::Size(format!(
            "solution for (n={}, D={}) with basis n={} and operators of size {}",
            sol.n(),
            sol.d(),
            basis.n(),
            ops.dim()
        )));
    }
    let f = sol.f(t)?;
    let per: Vec<Complex64> = contract_categories(basis, ops, e, t)?
        .into_iter()
        .zip(&f)
        .map(|(c, fa)| c * fa)
        .collect();
    Ok(CorrelatorValue {
        value: per.iter().sum(),
        per_category: per,
    })
}

/// Everything needed for the three-time correlator on `n = 3`.
pub struct MultiTimeSetup<'a> {
    pub bases: [&'a Basis; 3],
    pub solutions: [&'a EvolutionSolution; 3],
}

/// `𝔼 Tr(O₁(t₁) O₂ O₃(t₂) O₄ O₅(t₃) O₆)` for `t₁ ≤ t₂ ≤ t₃`, from
/// `[𝟙⊗𝟙⊗𝓤₁(t₃−t₂)] · [𝟙⊗𝓤₂(t₂−t₁)] · 𝓤₃(t₁)`, i.e. `𝓤₂` acts on
/// replicas 2–3 and `𝓤₁` on replica 3. Contributions are grouped by the
/// `n = 3` category of the earliest stage `𝓤₃(t₁)`.
pub fn multi_time_correlator(
    setup: &MultiTimeSetup<'_>,
    ops: &OperatorSet,
    e: &SpectrumE,
    times: [f64; 3],
) -> Result<CorrelatorValue> {
    let [t1, t2, t3] = times;
    if !(0.0 <= t1 && t1 <= t2 && t2 <= t3) {
        return Err(Error::Domain(format!(
            "times must satisfy 0 ≤ t1 ≤ t2 ≤ t3, got {times:?}"
        )));
    }
    for (k, (b, s)) in setup.bases.iter().zip(&setup.solutions).enumerate() {
        if b.n() != k + 1 || s.n() != k + 1 || (s.d() - ops.dim() as f64).abs() > 0.0 {
            return Err(Error::Domain(format!(
                "setup slot {k} must hold n={} data at D={}",
                k + 1,
                ops.dim()
            )));
        }
    }
    check_ops(3, ops, e)?;
    let d = ops.dim() as f64;
    let f1 = setup.solutions[0].f(t3 - t2)?;
    let f2 = setup.solutions[1].f(t2 - t1)?;
    let f3 = setup.solutions[2].f(t1)?;
    let dressed = ops.dressed(e, &times);

    let mut late: Vec<(Graph, Complex64)> = Vec::new();
    for (c1, fc) in setup.bases[0].categories().iter().zip(&f1) {
        for g1 in &c1.members {
            let e1 = g1.embed(3, 2)?;
            for (c2, fb) in setup.bases[1].categories().iter().zip(&f2) {
                for g2 in &c2.members {
                    let (g, loops) = e1.compose(&g2.embed(3, 1)?)?;
                    late.push((g.into_inner(), fc * fb * d.powi(loops as i32)));
                }
            }
        }
    }
    let per_category = par::map(setup.bases[2].categories(), |c| -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for g3 in &c.members {
            for (gl, w) in &late {
                let (g, loops) = gl.compose(g3)?;
                acc += w * d.powi(loops as i32) * walk(&g, &dressed);
            }
        }
        Ok(acc)
    })
    .into_iter()
    .zip(&f3)
    .map(|(acc, fa)| acc.map(|a| a * fa))
    .collect::<Result<Vec<_>>>()?;
    Ok(CorrelatorValue {
        value: per_category.iter().sum(),
        per_category,
    })
}
