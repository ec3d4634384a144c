//! The generator `𝓛ₙ = w·𝟙 + (J/D) Σ_{i,j̄} P_{i j̄} − (J/D) Σ_{i<j} (X_{ij} + X_{ī j̄})`
//! acting on graphs and on categories, and its compact matrix `M`.
//!
//! `w = −i𝖤 − nJ` is carried as one commuting symbol. `D` stays symbolic, so
//! every matrix entry is an exact [`Coeff`].

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use ndarray::Array2;
use num_rational::Rational64;

use crate::category::{discover, Basis};
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::graph::{CanonicalGraph, Graph};
use crate::par;
use crate::perm::{Perm, Side};

/// A finite linear combination of canonical graphs with exact coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphCombo {
    terms: BTreeMap<CanonicalGraph, Coeff>,
}

impl GraphCombo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, g: CanonicalGraph, c: Coeff) {
        match self.terms.entry(g) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
        }
    }

    pub fn merge(&mut self, other: &GraphCombo) {
        for (g, c) in &other.terms {
            self.add(g.clone(), *c);
        }
    }

    pub fn terms(&self) -> &BTreeMap<CanonicalGraph, Coeff> {
        &self.terms
    }

    pub fn get(&self, g: &CanonicalGraph) -> Coeff {
        self.terms.get(g).copied().unwrap_or(Coeff::ZERO)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

fn check_index(n: usize, i: usize, what: &str) -> Result<()> {
    if i >= n {
        return Err(Error::Domain(format!("{what} index {i} out of range for n={n}")));
    }
    Ok(())
}

/// `P_{i j̄} F` (0-based `i`, `j`). The result is a single graph times
/// `D^k`; the returned `u32` is `k` (1 only when `(i, j̄)` is already a pair).
pub fn act_p(i: usize, j: usize, g: &Graph) -> Result<(CanonicalGraph, u32)> {
    let n = g.n();
    check_index(n, i, "unbarred")?;
    check_index(n, j, "barred")?;
    let id = Perm::identity(n);
    let out = match (g.partner_of_unbarred(i), g.partner_of_barred(j)) {
        (None, None) => {
            let mut pairs = g.pairs();
            pairs.push((i, j));
            (Graph::new(n, &pairs, g.sigma1().clone(), g.sigma2().clone())?, 0)
        }
        (Some(b1), None) => (g.act_perms(&id, &Perm::transposition(n, j, b1)), 0),
        (None, Some(a1)) => (g.act_perms(&Perm::transposition(n, i, a1), &id), 0),
        (Some(b1), Some(_)) if b1 == j => (g.clone(), 1),
        (Some(_), Some(a2)) => (g.act_perms(&Perm::transposition(n, i, a2), &id), 0),
    };
    Ok((out.0.canonicalize(), out.1))
}

/// `X_{ij} F` or `X_{ī j̄} F`; always equal to the star action `X * F`.
pub fn act_x(side: Side, i: usize, j: usize, g: &Graph) -> Result<CanonicalGraph> {
    let n = g.n();
    check_index(n, i, "exchange")?;
    check_index(n, j, "exchange")?;
    let x = Perm::transposition(n, i, j);
    let id = Perm::identity(n);
    Ok(match side {
        Side::Unbarred => g.act_perms(&x, &id),
        Side::Barred => g.act_perms(&id, &x),
    }
    .canonicalize())
}

/// `𝓛ₙ F` assembled term by term from the `P` and `X` actions.
pub fn act_l(g: &Graph) -> GraphCombo {
    let n = g.n();
    let mut out = GraphCombo::new();
    out.add(g.canonicalize(), Coeff::w(1));
    for i in 0..n {
        for j in 0..n {
            let (h, k) = act_p(i, j, g).expect("indices in range");
            // (J/D)·D^k: k = 1 turns J/D into J.
            out.add(h, if k == 1 { Coeff::j(1) } else { Coeff::j_over_d(1) });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for side in [Side::Unbarred, Side::Barred] {
                out.add(act_x(side, i, j, g).expect("indices in range"), Coeff::j_over_d(-1));
            }
        }
    }
    out
}

/// `𝓛ₙ F` from the reduced master formula
/// `(w + pJ)F + (J/D)Σ_{u∩C=∅} c_u F − (J/D)Σ_{e∩C=∅} F[σX_e] − (J/D)Σ_{ē∩C=∅} F[σX_ē]`,
/// where the exclusions use the flattened contour labels of the pairs.
/// Independent of [`act_l`]; the two must agree.
pub fn act_l_reduced(g: &Graph) -> GraphCombo {
    let n = g.n();
    let p = g.p() as i64;
    let mut out = GraphCombo::new();
    out.add(g.canonicalize(), Coeff::w(1) + Coeff::j(p));
    let pairs = g.pairs();
    let used_a: Vec<bool> = (0..n).map(|i| pairs.iter().any(|q| q.0 == i)).collect();
    let used_b: Vec<bool> = (0..n).map(|j| pairs.iter().any(|q| q.1 == j)).collect();
    for i in (0..n).filter(|&i| !used_a[i]) {
        for j in (0..n).filter(|&j| !used_b[j]) {
            let mut with = pairs.clone();
            with.push((i, j));
            let h = Graph::new(n, &with, g.sigma1().clone(), g.sigma2().clone()).expect("free contours");
            out.add(h.canonicalize(), Coeff::j_over_d(1));
        }
    }
    for (used, side) in [(&used_a, Side::Unbarred), (&used_b, Side::Barred)] {
        for i in (0..n).filter(|&i| !used[i]) {
            for j in (i + 1..n).filter(|&j| !used[j]) {
                let x = Perm::transposition(n, i, j);
                let (s1, s2) = match side {
                    Side::Unbarred => (g.sigma1().compose_unchecked(&x), g.sigma2().clone()),
                    Side::Barred => (g.sigma1().clone(), g.sigma2().compose_unchecked(&x)),
                };
                let h = Graph::new(n, &pairs, s1, s2).expect("same pairs");
                out.add(h.canonicalize(), Coeff::j_over_d(-1));
            }
        }
    }
    out
}

/// `𝓛ₙ` applied to the sum of all members of category `alpha`, expanded
/// over the basis: entry `β` is `M_{βα}`. Errors if a produced graph lies
/// outside the basis, or if the coefficient is not constant across the
/// members of some target category (the grouping would not be closed).
pub fn act_on_category(basis: &Basis, alpha: usize) -> Result<Vec<Coeff>> {
    let members = &basis.categories()[alpha].members;
    let partial = par::map(members, |g| act_l(g));
    let mut total = GraphCombo::new();
    for c in &partial {
        total.merge(c);
    }
    let mut col = vec![None::<Coeff>; basis.len()];
    let mut hits = vec![0usize; basis.len()];
    for (h, c) in total.terms() {
        let beta = basis
            .category_of(h)
            .ok_or_else(|| Error::Consistency(format!("𝓛 produced {h}, which belongs to no category")))?;
        match col[beta] {
            None => col[beta] = Some(*c),
            Some(prev) if prev == *c => {}
            Some(prev) => {
                return Err(Error::Consistency(format!(
                    "category {} receives unequal coefficients {prev} and {c} from category {}",
                    basis.categories()[beta].label,
                    basis.categories()[alpha].label
                )))
            }
        }
        hits[beta] += 1;
    }
    col.iter()
        .zip(&hits)
        .enumerate()
        .map(|(beta, (c, &k))| match c {
            None => Ok(Coeff::ZERO),
            Some(c) if k == basis.categories()[beta].members.len() => Ok(*c),
            Some(_) => Err(Error::Consistency(format!(
                "category {} is only partially reached from category {}",
                basis.categories()[beta].label,
                basis.categories()[alpha].label
            ))),
        })
        .collect()
}

/// The compact matrix of `𝓛ₙ` over a category basis.
#[derive(Clone, Debug)]
pub struct GeneratorMatrix {
    basis: Basis,
    /// `entries[β][α] = M_{βα}`.
    entries: Vec<Vec<Coeff>>,
}

impl GeneratorMatrix {
    /// Assembles `M` column by column from [`act_on_category`].
    pub fn from_basis(basis: Basis) -> Result<Self> {
        let cols = par::map_range(basis.len(), |a| act_on_category(&basis, a));
        let cols: Vec<Vec<Coeff>> = cols.into_iter().collect::<Result<_>>()?;
        let dim = basis.len();
        let entries = (0..dim).map(|b| (0..dim).map(|a| cols[a][b]).collect()).collect();
        Ok(Self { basis, entries })
    }

    /// Wraps externally supplied entries (`entries[β][α]`) over `basis`.
    pub fn from_entries(basis: Basis, entries: Vec<Vec<Coeff>>) -> Result<Self> {
        let dim = basis.len();
        if entries.len() != dim || entries.iter().any(|r| r.len() != dim) {
            return Err(Error::Size(format!("generator entries are not {dim}x{dim}")));
        }
        Ok(Self { basis, entries })
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    /// `M_{βα}` (0-based).
    pub fn entry(&self, beta: usize, alpha: usize) -> Coeff {
        self.entries[beta][alpha]
    }

    pub fn entries(&self) -> &[Vec<Coeff>] {
        &self.entries
    }

    /// `M_J`: `M` with `w = −nJ`, so that `M = −i𝖤·𝟙 + M_J`.
    pub fn m_j(&self) -> Vec<Vec<Coeff>> {
        let n = self.n();
        self.entries
            .iter()
            .map(|row| row.iter().map(|c| c.without_spectral(n)).collect())
            .collect()
    }

    /// `M_J` evaluated at numeric `D` and `J`.
    pub fn m_j_numeric(&self, d: f64, j: f64) -> Array2<f64> {
        let mj = self.m_j();
        Array2::from_shape_fn((self.dim(), self.dim()), |(b, a)| mj[b][a].eval_real(j, d))
    }

    /// Whether the `w` dependence is exactly `w·𝟙`, i.e. `𝖤` factors out.
    pub fn spectral_part_is_scalar(&self) -> bool {
        let one = Rational64::from_integer(1);
        (0..self.dim()).all(|b| {
            (0..self.dim()).all(|a| {
                let w = self.entries[b][a].w;
                if a == b {
                    w == one
                } else {
                    w == Rational64::from_integer(0)
                }
            })
        })
    }
}

impl fmt::Display for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(Coeff::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Discovers the basis for `n` and assembles `M`.
pub fn build_m(n: usize) -> Result<GeneratorMatrix> {
    GeneratorMatrix::from_basis(discover(n)?)
}
