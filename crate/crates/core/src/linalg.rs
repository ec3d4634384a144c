//! Dense linear-algebra utilities: Padé scaling-and-squaring `expm`, linear
//! solves, and norms. Matrices are `ndarray` arrays; LU factorizations and
//! eigendecompositions are delegated to `faer`.

use faer::linalg::solvers::Solve;
use faer::Mat;
use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = Array2<Complex64>;

fn to_faer(a: &CMatrix) -> Mat<Complex64> {
    Mat::from_fn(a.nrows(), a.ncols(), |i, j| a[[i, j]])
}

fn from_faer(m: faer::MatRef<'_, Complex64>) -> CMatrix {
    Array2::from_shape_fn((m.nrows(), m.ncols()), |(i, j)| m[(i, j)])
}

/// Induced 1-norm (maximum absolute column sum).
pub fn norm1(a: &CMatrix) -> f64 {
    a.columns()
        .into_iter()
        .map(|c| c.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Largest entrywise modulus.
pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest entrywise modulus of `a − b`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Frobenius norm.
pub fn frobenius(a: &CMatrix) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Solves `A X = B` with partial-pivoting LU.
pub fn solve(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    if a.nrows() != a.ncols() || a.nrows() != b.nrows() {
        return Err(Error::Size(format!(
            "cannot solve {}x{} system with {} right-hand rows",
            a.nrows(),
            a.ncols(),
            b.nrows()
        )));
    }
    let lu = to_faer(a).partial_piv_lu();
    let x = lu.solve(to_faer(b));
    if x.col_iter()
        .any(|c| c.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()))
    {
        return Err(Error::Numerical("singular system".into()));
    }
    Ok(from_faer(x.as_ref()))
}

/// Inverse via LU.
pub fn inverse(a: &CMatrix) -> Result<CMatrix> {
    solve(a, &Array2::eye(a.nrows()))
}

/// Eigenvalues and right eigenvectors (columns) of a general complex matrix.
pub fn eig(a: &CMatrix) -> Result<(Vec<Complex64>, CMatrix)> {
    let evd = to_faer(a)
        .eigen()
        .map_err(|e| Error::Numerical(format!("eigendecomposition failed: {e:?}")))?;
    let vals = evd.S().column_vector().iter().copied().collect();
    Ok((vals, from_faer(evd.U())))
}

/// Eigenvalues of a general complex matrix.
pub fn eigenvalues(a: &CMatrix) -> Result<Vec<Complex64>> {
    to_faer(a)
        .eigenvalues()
        .map_err(|e| Error::Numerical(format!("eigenvalue computation failed: {e:?}")))
}

const THETA: [(usize, f64); 5] = [
    (3, 1.495_585_217_958_292e-2),
    (5, 2.539_398_330_063_23e-1),
    (7, 9.504_178_996_162_932e-1),
    (9, 2.097_847_961_257_068),
    (13, 5.371_920_351_148_152),
];

fn pade_coefficients(m: usize) -> &'static [f64] {
    match m {
        3 => &[120.0, 60.0, 12.0, 1.0],
        5 => &[30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0],
        7 => &[17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0],
        9 => &[
            17643225600.0,
            8821612800.0,
            2075673600.0,
            302702400.0,
            30270240.0,
            2162160.0,
            110880.0,
            3960.0,
            90.0,
            1.0,
        ],
        _ => &[
            64764752532480000.0,
            32382376266240000.0,
            7771770303897600.0,
            1187353796428800.0,
            129060195264000.0,
            10559470521600.0,
            670442572800.0,
            33522128640.0,
            1323241920.0,
            40840800.0,
            960960.0,
            16380.0,
            182.0,
            1.0,
        ],
    }
}

fn scaled(a: &CMatrix, s: f64) -> CMatrix {
    a.mapv(|z| z * s)
}

/// Matrix exponential by scaling and squaring with a diagonal Padé
/// approximant of degree 3–13, choosing degree and scaling from the 1-norm.
pub fn expm(a: &CMatrix) -> Result<CMatrix> {
    let n = a.nrows();
    if n != a.ncols() {
        return Err(Error::Size(format!("expm of a {}x{} matrix", n, a.ncols())));
    }
    let eye: CMatrix = Array2::eye(n);
    let norm = norm1(a);
    if !norm.is_finite() {
        return Err(Error::Numerical("non-finite matrix in expm".into()));
    }
    if norm == 0.0 {
        return Ok(eye);
    }
    for &(m, theta) in &THETA[..4] {
        if norm <= theta {
            let (u, v) = pade_low(a, m, &eye);
            return solve(&(&v - &u), &(&v + &u));
        }
    }
    let theta13 = THETA[4].1;
    let s = (norm / theta13).log2().ceil().max(0.0) as i32;
    let a = scaled(a, 0.5f64.powi(s));
    let b = pade_coefficients(13);
    let a2 = a.dot(&a);
    let a4 = a2.dot(&a2);
    let a6 = a4.dot(&a2);
    let cf = |k: usize| Complex64::new(b[k], 0.0);
    let inner_u = &a6 * cf(13) + &a4 * cf(11) + &a2 * cf(9);
    let u = a.dot(&(a6.dot(&inner_u) + &a6 * cf(7) + &a4 * cf(5) + &a2 * cf(3) + &eye * cf(1)));
    let inner_v = &a6 * cf(12) + &a4 * cf(10) + &a2 * cf(8);
    let v = a6.dot(&inner_v) + &a6 * cf(6) + &a4 * cf(4) + &a2 * cf(2) + &eye * cf(0);
    let mut r = solve(&(&v - &u), &(&v + &u))?;
    for _ in 0..s {
        r = r.dot(&r);
    }
    Ok(r)
}

fn pade_low(a: &CMatrix, m: usize, eye: &CMatrix) -> (CMatrix, CMatrix) {
    let b = pade_coefficients(m);
    let a2 = a.dot(a);
    let mut powers = vec![eye.clone()];
    for k in 1..=m / 2 {
        let next = powers[k - 1].dot(&a2);
        powers.push(next);
    }
    let mut u_inner = Array2::zeros(a.raw_dim());
    let mut v = Array2::zeros(a.raw_dim());
    for (k, pk) in powers.iter().enumerate() {
        v = v + pk * Complex64::new(b[2 * k], 0.0);
        u_inner = u_inner + pk * Complex64::new(b[2 * k + 1], 0.0);
    }
    (a.dot(&u_inner), v)
}

/// Real matrix promoted to complex.
pub fn complexify(a: &Array2<f64>) -> CMatrix {
    a.mapv(|x| Complex64::new(x, 0.0))
}
