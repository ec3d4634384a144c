//! Brute-force dense ground truth.
//!
//! Generators are assembled entry by entry from dense pairing and exchange
//! operators on the `2n` contours, using the same index packing as
//! [`Graph::to_dense`](crate::graph::Graph::to_dense). The oracle is
//! intentionally independent of the graph machinery.

use std::collections::HashMap;

use ndarray::Array2;
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::Zero;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::category::Basis;
use crate::error::{Error, Result};
use crate::evolution::{assemble_u, EvolutionSolution, SpectrumE};
use crate::graph::dense_dim;
use crate::linalg::{self, CMatrix};
use crate::liouvillian::GeneratorMatrix;
use crate::observable::OperatorSet;

/// Random-matrix ensemble of the Brownian Hamiltonian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ensemble {
    Gue,
    Goe,
    Gse,
}

/// One of the `2n` contours: `U(i)` carries `U`, `B(i)` carries `U*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contour {
    U(usize),
    B(usize),
}

impl Contour {
    /// Digit position in the packed index.
    fn digit(self) -> usize {
        match self {
            Contour::U(i) => 2 * i,
            Contour::B(i) => 2 * i + 1,
        }
    }
}

fn digits(mut x: usize, d: usize, len: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % d);
        x /= d;
    }
    out
}

fn pack(ds: &[usize], d: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &v| acc * d + v)
}

/// Unnormalized pairing `P_{xy}`: `δ(row_x, row_y) δ(col_x, col_y)` with the
/// identity on every other contour.
pub fn dense_pairing(n: usize, d: usize, x: Contour, y: Contour, budget: usize) -> Result<CMatrix> {
    let dim = dense_dim(n, d, budget)?;
    let (px, py) = (x.digit(), y.digit());
    let mut m = Array2::zeros((dim, dim));
    for row in 0..dim {
        let mut ds = digits(row, d, 2 * n);
        if ds[px] != ds[py] {
            continue;
        }
        for v in 0..d {
            ds[px] = v;
            ds[py] = v;
            m[[row, pack(&ds, d)]] = Complex64::new(1.0, 0.0);
        }
    }
    Ok(m)
}

/// Exchange `X_{xy}`: `δ(row_x, col_y) δ(row_y, col_x)`, identity elsewhere.
pub fn dense_exchange(n: usize, d: usize, x: Contour, y: Contour, budget: usize) -> Result<CMatrix> {
    let dim = dense_dim(n, d, budget)?;
    let (px, py) = (x.digit(), y.digit());
    let mut m = Array2::zeros((dim, dim));
    for row in 0..dim {
        let mut ds = digits(row, d, 2 * n);
        ds.swap(px, py);
        m[[row, pack(&ds, d)]] = Complex64::new(1.0, 0.0);
    }
    Ok(m)
}

/// A dense generator `𝓛ₙ` together with its parameters.
#[derive(Clone, Debug)]
pub struct DenseGenerator {
    pub n: usize,
    pub d: usize,
    pub ensemble: Ensemble,
    pub j: f64,
    pub e: SpectrumE,
    pub matrix: CMatrix,
}

/// Sums of the building blocks that appear in the three generators.
struct Blocks {
    /// `Σ_{i, j̄} P_{i j̄}`
    p_ub: CMatrix,
    /// `Σ_{i<j} (P_{ij} + P_{ī j̄})`
    p_same: CMatrix,
    /// `Σ_{i<j} (X_{ij} + X_{ī j̄})`
    x_same: CMatrix,
    /// `Σ_{i, j̄} X_{i j̄}`
    x_ub: CMatrix,
}

fn blocks(n: usize, d: usize, budget: usize, need_extra: bool) -> Result<Blocks> {
    let dim = dense_dim(n, d, budget)?;
    let z = || Array2::<Complex64>::zeros((dim, dim));
    let (mut p_ub, mut p_same, mut x_same, mut x_ub) = (z(), z(), z(), z());
    for i in 0..n {
        for j in 0..n {
            p_ub = p_ub + dense_pairing(n, d, Contour::U(i), Contour::B(j), budget)?;
            if need_extra {
                x_ub = x_ub + dense_exchange(n, d, Contour::U(i), Contour::B(j), budget)?;
            }
        }
        for j in i + 1..n {
            x_same = x_same
                + dense_exchange(n, d, Contour::U(i), Contour::U(j), budget)?
                + dense_exchange(n, d, Contour::B(i), Contour::B(j), budget)?;
            if need_extra {
                p_same = p_same
                    + dense_pairing(n, d, Contour::U(i), Contour::U(j), budget)?
                    + dense_pairing(n, d, Contour::B(i), Contour::B(j), budget)?;
            }
        }
    }
    Ok(Blocks {
        p_ub,
        p_same,
        x_same,
        x_ub,
    })
}

/// Dense `𝓛ₙ` for the chosen ensemble.
///
/// - GUE: `−i𝖤 − nJ + (J/D) Σ P_{i j̄} − (J/D) Σ_{i<j} (X_{ij} + X_{ī j̄})`.
/// - GOE: `−JD/(D+1)·[n + Σ(P_{ij} + P_{ī j̄}) − Σ P_{i j̄}] − J/(D+1)·[n + Σ(X_{ij} + X_{ī j̄}) − Σ X_{i j̄}]`.
/// - GSE: `−J/(D−1)·[2n(D−1) − D Σ(P_{ij} + P_{ī j̄}) − 2D Σ P_{i j̄} + 4 Σ(X_{ij} + X_{ī j̄}) + 2 Σ X_{i j̄}]`.
///
/// In the GOE and GSE formulas the pairings are the normalized projectors
/// `P/D`; with unnormalized pairings neither preserves the trace. Even so,
/// the GSE formula is consistent only for `n = 1`: for `n ≥ 2` it neither
/// annihilates the identity pairing nor has a non-positive spectrum. The
/// spectral term `−i𝖤` is added to every ensemble.
pub fn build_dense(
    n: usize,
    d: usize,
    ensemble: Ensemble,
    j: f64,
    e: &SpectrumE,
    budget: usize,
) -> Result<DenseGenerator> {
    e.check(d)?;
    if ensemble == Ensemble::Gse && d % 2 == 1 {
        return Err(Error::Domain(format!("GSE requires even D, got {d}")));
    }
    let dim = dense_dim(n, d, budget)?;
    let df = d as f64;
    let nf = n as f64;
    let b = blocks(n, d, budget, ensemble != Ensemble::Gue)?;
    let eye: CMatrix = Array2::eye(dim);
    let c = |x: f64| Complex64::new(x, 0.0);
    let mut m = match ensemble {
        Ensemble::Gue => &eye * c(-nf * j) + (&b.p_ub - &b.x_same) * c(j / df),
        Ensemble::Goe => {
            let pre = -j / (df + 1.0);
            (&eye * c(nf * df) + &b.p_same - &b.p_ub) * c(pre) + (&eye * c(nf) + &b.x_same - &b.x_ub) * c(pre)
        }
        Ensemble::Gse => {
            let pre = -j / (df - 1.0);
            (&eye * c(2.0 * nf * (df - 1.0)) - &b.p_same - &b.p_ub * c(2.0) + &b.x_same * c(4.0) + &b.x_ub * c(2.0))
                * c(pre)
        }
    };
    if !e.is_zero() {
        for r in 0..dim {
            m[[r, r]] += Complex64::new(0.0, -e.row_energy(n, d, r));
        }
    }
    Ok(DenseGenerator {
        n,
        d,
        ensemble,
        j,
        e: e.clone(),
        matrix: m,
    })
}

/// `e^{𝓛ₙ t}`.
pub fn dense_expm(g: &DenseGenerator, t: f64) -> Result<CMatrix> {
    if t < 0.0 {
        return Err(Error::Domain(format!("negative time {t}")));
    }
    linalg::expm(&g.matrix.mapv(|z| z * t))
}

/// Haar-random `D × D` unitary (QR of a Ginibre matrix with phase fix).
pub fn haar_unitary<R: Rng>(d: usize, rng: &mut R) -> CMatrix {
    let mut a: CMatrix = Array2::from_shape_fn((d, d), |_| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    // Modified Gram–Schmidt on columns.
    for k in 0..d {
        for i in 0..k {
            let proj: Complex64 = (0..d).map(|r| a[[r, i]].conj() * a[[r, k]]).sum();
            for r in 0..d {
                let v = a[[r, i]];
                a[[r, k]] -= proj * v;
            }
        }
        let norm = (0..d).map(|r| a[[r, k]].norm_sqr()).sum::<f64>().sqrt();
        for r in 0..d {
            a[[r, k]] /= norm;
        }
    }
    a
}

/// `V^{⊗n} ⊗ V^{*⊗n}` in packed form.
pub fn replica_unitary(v: &CMatrix, n: usize, budget: usize) -> Result<CMatrix> {
    let d = v.nrows();
    let dim = dense_dim(n, d, budget)?;
    let vc = v.mapv(|z| z.conj());
    Ok(Array2::from_shape_fn((dim, dim), |(r, c)| {
        let (rd, cd) = (digits(r, d, 2 * n), digits(c, d, 2 * n));
        (0..n).fold(Complex64::new(1.0, 0.0), |acc, i| {
            acc * v[[rd[2 * i], cd[2 * i]]] * vc[[rd[2 * i + 1], cd[2 * i + 1]]]
        })
    }))
}

/// Largest `max|[𝓛ₙ, V^{⊗n}⊗V^{*⊗n}]| / max|𝓛ₙ|` over random unitaries,
/// regardless of the spectrum.
pub fn unitary_commutator_norm<R: Rng>(g: &DenseGenerator, trials: usize, rng: &mut R) -> Result<f64> {
    let scale = linalg::max_abs(&g.matrix);
    if scale == 0.0 {
        return Ok(0.0);
    }
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let w = replica_unitary(&haar_unitary(g.d, rng), g.n, usize::MAX)?;
        let comm = g.matrix.dot(&w) - w.dot(&g.matrix);
        worst = worst.max(linalg::max_abs(&comm) / scale);
    }
    Ok(worst)
}

/// Unitary-invariance check; only meaningful for a trivial spectrum.
pub fn check_unitary_symmetry<R: Rng>(g: &DenseGenerator, trials: usize, rng: &mut R) -> Result<f64> {
    if !g.e.is_zero() {
        return Err(Error::Domain("unitary symmetry requires E = 0".into()));
    }
    unitary_commutator_norm(g, trials, rng)
}

/// Places a `D^{2k}`-dimensional superoperator on the last `k` of `n`
/// replicas (identity on the first `n − k`).
pub fn embed_last_replicas(a: &CMatrix, n: usize, k: usize, d: usize) -> Result<CMatrix> {
    let low = d.pow(2 * (n - k) as u32);
    let high = a.nrows();
    if high != d.pow(2 * k as u32) {
        return Err(Error::Size(format!("matrix of size {high} is not D^(2k)")));
    }
    let dim = low * high;
    let mut out = Array2::zeros((dim, dim));
    for h in 0..high {
        for h2 in 0..high {
            let v = a[[h, h2]];
            if v == Complex64::new(0.0, 0.0) {
                continue;
            }
            for l in 0..low {
                out[[h * low + l, h2 * low + l]] = v;
            }
        }
    }
    Ok(out)
}

/// Direct contraction `Σ W[(I,J),(I',J')] Π_i O_{2i−1}[J_i, I_i] O_{2i}[I'_i, J'_{i+1}]`,
/// equal to `𝔼 Tr(O₁(t)O₂ ⋯ O_{2n−1}(t)O_{2n})` when `W = 𝓤ₙ(t)`.
pub fn contract_dense(w: &CMatrix, ops: &OperatorSet, n: usize) -> Result<Complex64> {
    let d = ops.dim();
    if ops.len() != 2 * n {
        return Err(Error::Size(format!("{} operators for n={n}", ops.len())));
    }
    let dim = d.pow(2 * n as u32);
    if w.nrows() != dim || w.ncols() != dim {
        return Err(Error::Size(format!("matrix of size {} for D^(2n)={dim}", w.nrows())));
    }
    let o = ops.ops();
    let row_w: Vec<Complex64> = (0..dim)
        .map(|r| {
            let ds = digits(r, d, 2 * n);
            (0..n).fold(Complex64::new(1.0, 0.0), |acc, i| {
                acc * o[2 * i][[ds[2 * i + 1], ds[2 * i]]]
            })
        })
        .collect();
    let col_w: Vec<Complex64> = (0..dim)
        .map(|c| {
            let ds = digits(c, d, 2 * n);
            (0..n).fold(Complex64::new(1.0, 0.0), |acc, i| {
                acc * o[2 * i + 1][[ds[2 * i], ds[2 * ((i + 1) % n) + 1]]]
            })
        })
        .collect();
    let mut total = Complex64::new(0.0, 0.0);
    for (r, rw) in row_w.iter().enumerate() {
        if *rw == Complex64::new(0.0, 0.0) {
            continue;
        }
        let row: Complex64 = w.row(r).iter().zip(&col_w).map(|(a, b)| a * b).sum();
        total += rw * row;
    }
    Ok(total)
}

/// Applies `Σ_{i,j̄} P_{i j̄} − Σ_{i<j}(X_{ij} + X_{ī j̄})` to a sparse integer
/// matrix given as `(row, col) → value`, using the dense index semantics.
fn apply_coupling(s: &HashMap<(usize, usize), i64>, n: usize, d: usize) -> HashMap<(usize, usize), i64> {
    let mut out: HashMap<(usize, usize), i64> = HashMap::new();
    for (&(r, c), &v) in s {
        let ds = digits(r, d, 2 * n);
        for i in 0..n {
            for j in 0..n {
                let (pi, pj) = (2 * i, 2 * j + 1);
                if ds[pi] != ds[pj] {
                    continue;
                }
                let mut e = ds.clone();
                for x in 0..d {
                    e[pi] = x;
                    e[pj] = x;
                    *out.entry((pack(&e, d), c)).or_insert(0) += v;
                }
            }
            for k in i + 1..n {
                for (a, b) in [(2 * i, 2 * k), (2 * i + 1, 2 * k + 1)] {
                    let mut e = ds.clone();
                    e.swap(a, b);
                    *out.entry((pack(&e, d), c)).or_insert(0) -= v;
                }
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Exact check that every column of `M` reproduces the dense action of
/// `𝓛ₙ` on the corresponding category sum at integer `D`. The `w` part and
/// the coupling part are compared separately in integer arithmetic. Returns
/// the number of mismatching `(column, entry)` positions (0 means exact
/// agreement).
pub fn exact_generator_check(gm: &GeneratorMatrix, d: usize, budget: usize) -> Result<usize> {
    let n = gm.n();
    dense_dim(n, d, budget)?;
    let basis = gm.basis();
    let sums: Vec<HashMap<(usize, usize), i64>> = crate::par::map(basis.categories(), |c| {
        let mut m = HashMap::new();
        for g in &c.members {
            for rc in g.nonzeros(d) {
                *m.entry(rc).or_insert(0i64) += 1;
            }
        }
        m
    });
    let di = d as i64;
    let mismatches = crate::par::map_range(basis.len(), |alpha| -> Result<usize> {
        let lhs = apply_coupling(&sums[alpha], n, d);
        let mut rhs: HashMap<(usize, usize), Rational64> = HashMap::new();
        let mut w_rhs: HashMap<(usize, usize), Rational64> = HashMap::new();
        let mut bad = 0usize;
        for (beta, sum) in sums.iter().enumerate() {
            let c = gm.entry(beta, alpha);
            if !c.c0.is_zero() {
                bad += 1;
            }
            let k = c.coupling_times_d(di);
            for (&rc, &v) in sum {
                if !k.is_zero() {
                    *rhs.entry(rc).or_insert_with(Rational64::zero) += k * v;
                }
                if !c.w.is_zero() {
                    *w_rhs.entry(rc).or_insert_with(Rational64::zero) += c.w * v;
                }
            }
        }
        rhs.retain(|_, v| !v.is_zero());
        w_rhs.retain(|_, v| !v.is_zero());
        let cmp = |a: &HashMap<(usize, usize), i64>, b: &HashMap<(usize, usize), Rational64>| {
            let mut bad = a
                .iter()
                .filter(|(rc, v)| b.get(rc).copied().unwrap_or_else(Rational64::zero) != Rational64::from_integer(**v))
                .count();
            bad += b.keys().filter(|rc| !a.contains_key(rc)).count();
            bad
        };
        bad += cmp(&lhs, &rhs);
        bad += cmp(&sums[alpha], &w_rhs);
        Ok(bad)
    });
    mismatches.into_iter().sum()
}

/// `max|assemble_U(t) − e^{𝓛ₙt}|` at integer `D`, GUE.
pub fn evolution_deviation(
    gm: &GeneratorMatrix,
    sol: &EvolutionSolution,
    d: usize,
    e: &SpectrumE,
    t: f64,
    budget: usize,
) -> Result<f64> {
    let dense = build_dense(gm.n(), d, Ensemble::Gue, sol.j(), e, budget)?;
    let want = dense_expm(&dense, t)?;
    let got = assemble_u(gm.basis(), sol, d, e, t, budget)?;
    Ok(linalg::max_abs_diff(&got, &want))
}

/// Gram matrix `⟨F_a, F_b⟩` of the dense category sums at integer `D`.
pub fn category_gram(basis: &Basis, d: usize, budget: usize) -> Result<Array2<f64>> {
    dense_dim(basis.n(), d, budget)?;
    let sums: Vec<HashMap<(usize, usize), f64>> = crate::par::map(basis.categories(), |c| {
        let mut m = HashMap::new();
        for g in &c.members {
            for rc in g.nonzeros(d) {
                *m.entry(rc).or_insert(0.0) += 1.0;
            }
        }
        m
    });
    let k = sums.len();
    Ok(Array2::from_shape_fn((k, k), |(a, b)| {
        sums[a]
            .iter()
            .map(|(rc, v)| v * sums[b].get(rc).copied().unwrap_or(0.0))
            .sum()
    }))
}

/// Whether the category sums are linearly independent at integer `D`.
/// Below `D = 2n` the graph tensors can satisfy linear relations.
pub fn categories_independent(basis: &Basis, d: usize, budget: usize) -> Result<bool> {
    let gram = linalg::complexify(&category_gram(basis, d, budget)?);
    let ev = linalg::eigenvalues(&gram)?;
    let top = ev.iter().map(|z| z.norm()).fold(0.0, f64::max);
    Ok(ev.iter().all(|z| z.re > 1e-9 * top))
}

/// Largest distance from an eigenvalue of `M_J` to the dense spectrum of
/// `𝓛ₙ` (GUE, `E = 0`). The compact spectrum is only guaranteed to be a
/// subset when the category sums are independent; otherwise `None`.
pub fn spectrum_containment(basis: &Basis, sol: &EvolutionSolution, d: usize, budget: usize) -> Result<Option<f64>> {
    if !categories_independent(basis, d, budget)? {
        return Ok(None);
    }
    let dense = build_dense(sol.n(), d, Ensemble::Gue, sol.j(), &SpectrumE::zero(d), budget)?;
    let full = linalg::eigenvalues(&dense.matrix)?;
    Ok(Some(
        sol.spectrum()
            .iter()
            .map(|l| full.iter().map(|m| (l - m).norm()).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max),
    ))
}
