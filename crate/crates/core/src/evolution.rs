//! Solving `𝓤ₙ(t) = e^{−i𝖤t} Σ_a f_a(t) F_a` from the compact matrix `M_J`.
//!
//! `f(t) = e^{M_J t} e₁`, where `e₁` selects `F_{0,I} = c[I]` (since
//! `𝓤ₙ(0) = 𝟙`). The default path diagonalizes `M_J` at numeric `D`. When the
//! eigenvector matrix is too ill-conditioned (near-defective `M_J`), it
//! falls back to a direct matrix exponential.

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::category::Basis;
use crate::error::{Error, Result};
use crate::graph::{dense_dim, Graph};
use crate::linalg::{self, CMatrix};
use crate::liouvillian::GeneratorMatrix;

/// Eigenvector condition number above which the eigen path is abandoned.
pub const CONDITION_LIMIT: f64 = 1e12;

/// The intrinsic spectrum `E₁ … E_D` (units of `J`). Empty means all zero.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SpectrumE {
    pub e: Vec<f64>,
}

impl SpectrumE {
    pub fn zero(d: usize) -> Self {
        Self { e: vec![0.0; d] }
    }

    pub fn new(e: Vec<f64>) -> Result<Self> {
        if e.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("spectrum contains non-finite energies".into()));
        }
        Ok(Self { e })
    }

    /// Independent standard-normal energies.
    pub fn random<R: Rng>(d: usize, rng: &mut R) -> Self {
        Self {
            e: (0..d).map(|_| rng.sample::<f64, _>(StandardNormal)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|&x| x == 0.0)
    }

    /// `E_k`, treating an empty spectrum as all zeros.
    #[inline]
    pub fn energy(&self, k: usize) -> f64 {
        self.e.get(k).copied().unwrap_or(0.0)
    }

    /// Checks compatibility with dimension `d`.
    pub fn check(&self, d: usize) -> Result<()> {
        if !self.e.is_empty() && self.e.len() != d {
            return Err(Error::Size(format!("spectrum has {} energies for D={d}", self.e.len())));
        }
        Ok(())
    }

    /// `Σ_j (E_{I_j} − E_{J_j})` for packed row index `row`.
    pub fn row_energy(&self, n: usize, d: usize, row: usize) -> f64 {
        let mut x = row;
        let mut s = 0.0;
        for _ in 0..n {
            s += self.energy(x % d);
            x /= d;
            s -= self.energy(x % d);
            x /= d;
        }
        s
    }

    /// Diagonal of `e^{−i𝖤t}` on packed indices.
    pub fn phases(&self, n: usize, d: usize, t: f64) -> Vec<Complex64> {
        let dim = d.pow(2 * n as u32);
        (0..dim)
            .map(|r| Complex64::from_polar(1.0, -t * self.row_energy(n, d, r)))
            .collect()
    }
}

/// How `f(t)` is evaluated.
#[derive(Clone, Debug)]
enum Method {
    Eigen { vecs: CMatrix, weights: Array1<Complex64> },
    Expm,
}

/// Numeric solution for `f_a(t)` at fixed `D` and `J`.
#[derive(Clone, Debug)]
pub struct EvolutionSolution {
    n: usize,
    d: f64,
    j: f64,
    init: usize,
    m_j: CMatrix,
    eigenvalues: Vec<Complex64>,
    condition: f64,
    method: Method,
}

impl EvolutionSolution {
    /// Diagonalizes `M_J(D, J)`.
    pub fn new(gm: &GeneratorMatrix, d: f64, j: f64) -> Result<Self> {
        if d.is_nan() || d <= 0.0 || !j.is_finite() {
            return Err(Error::Domain(format!("need D > 0 and finite J (got D={d}, J={j})")));
        }
        let init = identity_category(gm.basis())?;
        let m_j = linalg::complexify(&gm.m_j_numeric(d, j));
        let (vals, vecs) = linalg::eig(&m_j)?;
        let (condition, method) = match linalg::inverse(&vecs) {
            Ok(inv) => {
                let cond = linalg::norm1(&vecs) * linalg::norm1(&inv);
                if cond.is_finite() && cond <= CONDITION_LIMIT {
                    let weights = inv.column(init).to_owned();
                    (cond, Method::Eigen { vecs, weights })
                } else {
                    (cond, Method::Expm)
                }
            }
            Err(_) => (f64::INFINITY, Method::Expm),
        };
        Ok(Self {
            n: gm.n(),
            d,
            j,
            init,
            m_j,
            eigenvalues: vals,
            condition,
            method,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn j(&self) -> f64 {
        self.j
    }

    pub fn dim(&self) -> usize {
        self.m_j.nrows()
    }

    /// Eigenvalues of `M_J`, sorted by real then imaginary part (descending).
    pub fn spectrum(&self) -> Vec<Complex64> {
        let mut v = self.eigenvalues.clone();
        v.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
        v
    }

    /// Eigenvector condition number `‖V‖₁‖V⁻¹‖₁`.
    pub fn condition(&self) -> f64 {
        self.condition
    }

    /// Whether the direct-exponential fallback is in use.
    pub fn uses_fallback(&self) -> bool {
        matches!(self.method, Method::Expm)
    }

    pub fn m_j(&self) -> &CMatrix {
        &self.m_j
    }

    /// `f(t)`.
    pub fn f(&self, t: f64) -> Result<Vec<Complex64>> {
        match &self.method {
            Method::Eigen { vecs, weights } => {
                let scaled: Array1<Complex64> = weights
                    .iter()
                    .zip(&self.eigenvalues)
                    .map(|(w, l)| w * (l * t).exp())
                    .collect();
                Ok(vecs.dot(&scaled).to_vec())
            }
            Method::Expm => self.f_expm(t),
        }
    }

    /// `f(t)` by a direct Padé exponential of `M_J t`.
    pub fn f_expm(&self, t: f64) -> Result<Vec<Complex64>> {
        let e = linalg::expm(&self.m_j.mapv(|z| z * t))?;
        Ok(e.column(self.init).to_vec())
    }

    /// Truncated Taylor series `Σ_{r ≤ R} (M_J t)^r / r! e₁`.
    pub fn f_series(&self, t: f64, order: usize) -> Vec<Complex64> {
        let mut term: Array1<Complex64> = Array1::zeros(self.dim());
        term[self.init] = Complex64::new(1.0, 0.0);
        let mut sum = term.clone();
        for r in 1..=order {
            term = self.m_j.dot(&term).mapv(|z| z * (t / r as f64));
            sum += &term;
        }
        sum.to_vec()
    }

    /// `‖series − f(t)‖∞`.
    pub fn series_check(&self, t: f64, order: usize) -> Result<f64> {
        let f = self.f(t)?;
        Ok(self
            .f_series(t, order)
            .iter()
            .zip(&f)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// Index of the category containing `c[I]`.
pub fn identity_category(basis: &Basis) -> Result<usize> {
    basis
        .category_of(&Graph::identity(basis.n()))
        .ok_or_else(|| Error::Consistency("basis lacks the identity graph".into()))
}

/// Nonzero positions of every category's dense sum.
pub fn category_nonzeros(basis: &Basis, d: usize) -> Vec<Vec<(usize, usize)>> {
    crate::par::map(basis.categories(), |c| {
        c.members.iter().flat_map(|g| g.nonzeros(d)).collect()
    })
}

/// Dense `𝓤ₙ(t) = Σ_a f_a(t) e^{−i𝖤t} F_a` at integer `D`.
pub fn assemble_u(
    basis: &Basis,
    sol: &EvolutionSolution,
    d: usize,
    e: &SpectrumE,
    t: f64,
    budget: usize,
) -> Result<CMatrix> {
    let n = basis.n();
    let dim = dense_dim(n, d, budget)?;
    e.check(d)?;
    if (sol.d() - d as f64).abs() > 0.0 || sol.n() != n {
        return Err(Error::Domain(format!(
            "solution for (n={}, D={}) used with (n={n}, D={d})",
            sol.n(),
            sol.d()
        )));
    }
    let f = sol.f(t)?;
    let mut out: CMatrix = Array2::zeros((dim, dim));
    for (fa, nz) in f.iter().zip(category_nonzeros(basis, d)) {
        for (r, c) in nz {
            out[[r, c]] += fa;
        }
    }
    if !e.is_zero() {
        let ph = e.phases(n, d, t);
        for (mut row, p) in out.rows_mut().into_iter().zip(ph) {
            row.mapv_inplace(|z| z * p);
        }
    }
    Ok(out)
}
