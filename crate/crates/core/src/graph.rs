//! Individual diagrams `F = ∏ c_{a_i b̄_i} c[σ₁ ⊗ σ₂]`.
//!
//! A graph is a Kronecker-delta wiring of `4n` endpoints: the row indices
//! `I_i, J_i` and the column indices `I'_i, J'_i` of a `D^{2n} × D^{2n}`
//! matrix. Unpaired unbarred contours carry `δ(I_i, I'_{σ₁(i)})`, unpaired
//! barred contours carry `δ(J_j, J'_{σ₂(j)})`, and a pair `(a, b̄)` carries
//! `δ(I_a, J_b) δ(I'_{σ₁(a)}, J'_{σ₂(b)})`.
//!
//! Dense packing: a row index is `Σ_k x_k D^k` with digits
//! `(x_0, x_1, …) = (I_1, J_1, I_2, J_2, …, I_n, J_n)`, so `I_1` varies
//! fastest. Column indices pack `(I'_1, J'_1, …)` the same way.
//!
//! Endpoint numbering used by [`Graph::matching`]: row digit `k` is point
//! `k`, column digit `k` is point `2n + k`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use itertools::Itertools;
use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::par;
use crate::perm::{all_perms, factorial, Perm};

/// One diagram. Pairs are 0-based `(a, b̄)` contour indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    pairs: Vec<(u8, u8)>,
    sigma1: Perm,
    sigma2: Perm,
}

/// A graph in the canonical form of its gauge orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalGraph(Graph);

impl Deref for CanonicalGraph {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.0
    }
}

impl CanonicalGraph {
    pub fn into_inner(self) -> Graph {
        self.0
    }
}

impl Graph {
    pub fn new(n: usize, pairs: &[(usize, usize)], sigma1: Perm, sigma2: Perm) -> Result<Self> {
        if sigma1.n() != n || sigma2.n() != n {
            return Err(Error::Size(format!(
                "permutations on {}/{} points for n={n}",
                sigma1.n(),
                sigma2.n()
            )));
        }
        if pairs.len() > n {
            return Err(Error::Domain(format!("{} pairs exceed n={n}", pairs.len())));
        }
        let mut seen_a = vec![false; n];
        let mut seen_b = vec![false; n];
        for &(a, b) in pairs {
            if a >= n || b >= n || seen_a[a] || seen_b[b] {
                return Err(Error::Domain(format!("invalid pair list {pairs:?} for n={n}")));
            }
            seen_a[a] = true;
            seen_b[b] = true;
        }
        Ok(Self {
            n: n as u8,
            pairs: pairs.iter().map(|&(a, b)| (a as u8, b as u8)).collect(),
            sigma1,
            sigma2,
        })
    }

    /// `c[I]` on `n` replicas.
    pub fn identity(n: usize) -> Self {
        Self {
            n: n as u8,
            pairs: Vec::new(),
            sigma1: Perm::identity(n),
            sigma2: Perm::identity(n),
        }
    }

    /// `P_{i j̄}` viewed as a graph: `c_{i j̄} c[I]`.
    pub fn pairing(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::new(n, &[(i, j)], Perm::identity(n), Perm::identity(n))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn p(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.pairs.iter().map(|&(a, b)| (a as usize, b as usize)).collect()
    }

    pub fn sigma1(&self) -> &Perm {
        &self.sigma1
    }

    pub fn sigma2(&self) -> &Perm {
        &self.sigma2
    }

    /// Partner of unbarred contour `a` if it is paired.
    pub fn partner_of_unbarred(&self, a: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.0 as usize == a).map(|p| p.1 as usize)
    }

    /// Partner of barred contour `b` if it is paired.
    pub fn partner_of_barred(&self, b: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.1 as usize == b).map(|p| p.0 as usize)
    }

    /// Left multiplication by the side permutations `(x₁, x₂)`: pairs map to
    /// `(x₁ a, x₂ b)` and `σ → σ ∘ x`. With `x` generated by
    /// `X_{a_i a_j} ⊗ X_{b̄_i b̄_j}` this is the gauge action; with a single
    /// transposition on one side it is the exchange operator's action.
    pub(crate) fn act_perms(&self, x1: &Perm, x2: &Perm) -> Graph {
        Graph {
            n: self.n,
            pairs: self
                .pairs
                .iter()
                .map(|&(a, b)| (x1.apply(a as usize) as u8, x2.apply(b as usize) as u8))
                .collect(),
            sigma1: self.sigma1.compose_unchecked(x1),
            sigma2: self.sigma2.compose_unchecked(x2),
        }
    }

    /// The side permutations induced by `tau ∈ S_p`: `a_i ↦ a_{τ(i)}`,
    /// `b̄_i ↦ b̄_{τ(i)}`, identity on unpaired contours.
    fn gauge_perms(&self, tau: &[usize]) -> (Perm, Perm) {
        let n = self.n();
        let mut g1: Vec<usize> = (0..n).collect();
        let mut g2: Vec<usize> = (0..n).collect();
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            g1[a as usize] = self.pairs[tau[i]].0 as usize;
            g2[b as usize] = self.pairs[tau[i]].1 as usize;
        }
        (
            Perm::from_images(&g1).expect("gauge images form a bijection"),
            Perm::from_images(&g2).expect("gauge images form a bijection"),
        )
    }

    /// `σ' * F` for the gauge element `σ'` induced by `tau ∈ S_p`.
    pub fn gauge_act(&self, tau: &Perm) -> Result<Graph> {
        if tau.n() != self.p() {
            return Err(Error::Size(format!(
                "gauge element acts on {} pairs, graph has {}",
                tau.n(),
                self.p()
            )));
        }
        let (g1, g2) = self.gauge_perms(&tau.images());
        Ok(self.act_perms(&g1, &g2))
    }

    /// Lexicographic minimum over the gauge orbit, after sorting the pair
    /// list by unbarred label (the pair list is a set, so sorting is free).
    pub fn canonicalize(&self) -> CanonicalGraph {
        let mut base = self.clone();
        base.pairs.sort_unstable();
        if base.p() < 2 {
            return CanonicalGraph(base);
        }
        let mut best: Option<Graph> = None;
        for tau in (0..base.p()).permutations(base.p()) {
            let (g1, g2) = base.gauge_perms(&tau);
            let cand = Graph {
                n: base.n,
                pairs: base.pairs.clone(),
                sigma1: base.sigma1.compose_unchecked(&g1),
                sigma2: base.sigma2.compose_unchecked(&g2),
            };
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
        CanonicalGraph(best.expect("S_p is non-empty"))
    }

    /// Partner of every endpoint under the graph's deltas (`4n` entries).
    pub fn matching(&self) -> Vec<usize> {
        let n = self.n();
        let col = 2 * n;
        let mut m = vec![usize::MAX; 4 * n];
        let mut link = |x: usize, y: usize| {
            m[x] = y;
            m[y] = x;
        };
        let mut paired_a = vec![false; n];
        let mut paired_b = vec![false; n];
        for &(a, b) in &self.pairs {
            let (a, b) = (a as usize, b as usize);
            paired_a[a] = true;
            paired_b[b] = true;
            link(2 * a, 2 * b + 1);
            link(col + 2 * self.sigma1.apply(a), col + 2 * self.sigma2.apply(b) + 1);
        }
        for i in 0..n {
            if !paired_a[i] {
                link(2 * i, col + 2 * self.sigma1.apply(i));
            }
            if !paired_b[i] {
                link(2 * i + 1, col + 2 * self.sigma2.apply(i) + 1);
            }
        }
        m
    }

    /// Rebuilds a graph from a perfect matching of the `4n` endpoints.
    /// Fails if the matching is not of walled-Brauer form (row–row and
    /// column–column edges must join an unbarred and a barred endpoint;
    /// row–column edges must stay on one side).
    pub fn from_matching(n: usize, m: &[usize]) -> Result<Graph> {
        if m.len() != 4 * n {
            return Err(Error::Size(format!("matching of {} points for n={n}", m.len())));
        }
        let col = 2 * n;
        let bad = || Error::Domain("matching is not a walled-Brauer diagram".into());
        let mut pairs = Vec::new();
        let mut bottom = Vec::new();
        let mut s1 = vec![usize::MAX; n];
        let mut s2 = vec![usize::MAX; n];
        for x in 0..4 * n {
            let y = m[x];
            if y >= 4 * n || m[y] != x || x == y {
                return Err(bad());
            }
            if x > y {
                continue;
            }
            let (x_top, y_top) = (x < col, y < col);
            let (xd, yd) = (x % col, y % col);
            match (x_top, y_top) {
                (true, true) | (false, false) => {
                    if xd % 2 == yd % 2 {
                        return Err(bad());
                    }
                    let (u, b) = if xd % 2 == 0 {
                        (xd / 2, yd / 2)
                    } else {
                        (yd / 2, xd / 2)
                    };
                    if x_top {
                        pairs.push((u, b));
                    } else {
                        bottom.push((u, b));
                    }
                }
                _ => {
                    let (t, c) = if x_top { (xd, yd) } else { (yd, xd) };
                    if t % 2 != c % 2 {
                        return Err(bad());
                    }
                    if t % 2 == 0 {
                        s1[t / 2] = c / 2;
                    } else {
                        s2[t / 2] = c / 2;
                    }
                }
            }
        }
        if pairs.len() != bottom.len() {
            return Err(bad());
        }
        pairs.sort_unstable();
        for (&(a, b), &(x, y)) in pairs.iter().zip(&bottom) {
            s1[a] = x;
            s2[b] = y;
        }
        Graph::new(n, &pairs, Perm::from_images(&s1)?, Perm::from_images(&s2)?)
    }

    /// Matrix product `self · rhs` in the diagram algebra: returns the
    /// resulting graph and the number of closed loops (each worth a factor
    /// `D`).
    pub fn compose(&self, rhs: &Graph) -> Result<(CanonicalGraph, u32)> {
        if self.n != rhs.n {
            return Err(Error::Size(format!(
                "cannot multiply graphs on {} and {} replicas",
                self.n, rhs.n
            )));
        }
        let n = self.n();
        let col = 2 * n;
        let a = self.matching();
        let b = rhs.matching();
        // Outer points: 0..2n are the rows of `self`, 2n..4n the columns of
        // `rhs`. Middle digit k joins column k of `self` with row k of `rhs`.
        let mut out = vec![usize::MAX; 4 * n];
        let mut mid_seen = vec![false; col];
        let walk = |start_in_a: bool, start: usize, mid_seen: &mut Vec<bool>| -> usize {
            // Returns the outer endpoint reached (same numbering as `out`).
            let (mut in_a, mut x) = (start_in_a, start);
            loop {
                if in_a {
                    let y = a[x];
                    if y < col {
                        return y;
                    }
                    mid_seen[y - col] = true;
                    in_a = false;
                    x = y - col;
                } else {
                    let y = b[x];
                    if y >= col {
                        return y;
                    }
                    mid_seen[y] = true;
                    in_a = true;
                    x = y + col;
                }
            }
        };
        for x in 0..col {
            if out[x] == usize::MAX {
                let y = walk(true, x, &mut mid_seen);
                out[x] = y;
                out[y] = x;
            }
        }
        for x in col..2 * col {
            if out[x] == usize::MAX {
                let y = walk(false, x, &mut mid_seen);
                out[x] = y;
                out[y] = x;
            }
        }
        // Whatever middle points remain form closed loops.
        let mut loops = 0;
        for k in 0..col {
            if mid_seen[k] {
                continue;
            }
            loops += 1;
            let mut x = k;
            loop {
                mid_seen[x] = true;
                let y = b[x];
                mid_seen[y] = true;
                let z = a[y + col] - col;
                if mid_seen[z] {
                    break;
                }
                x = z;
            }
        }
        Ok((Graph::from_matching(n, &out)?.canonicalize(), loops))
    }

    /// Places this graph on replicas `offset .. offset + n` of an
    /// `n_total`-replica system, with the identity on the other replicas.
    pub fn embed(&self, n_total: usize, offset: usize) -> Result<Graph> {
        let n = self.n();
        if offset + n > n_total {
            return Err(Error::Size(format!(
                "cannot embed {n} replicas at offset {offset} into {n_total}"
            )));
        }
        let shift = |p: &Perm| {
            let mut img: Vec<usize> = (0..n_total).collect();
            for i in 0..n {
                img[offset + i] = offset + p.apply(i);
            }
            Perm::from_images(&img)
        };
        let pairs: Vec<(usize, usize)> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| (a + offset, b + offset))
            .collect();
        Graph::new(n_total, &pairs, shift(&self.sigma1)?, shift(&self.sigma2)?)
    }

    /// Dense transpose: rows and columns exchanged.
    pub fn transpose(&self) -> Graph {
        Graph {
            n: self.n,
            pairs: self
                .pairs
                .iter()
                .map(|&(a, b)| (self.sigma1.apply(a as usize) as u8, self.sigma2.apply(b as usize) as u8))
                .collect(),
            sigma1: self.sigma1.inverse(),
            sigma2: self.sigma2.inverse(),
        }
    }

    /// Exchange of the unbarred and barred contour families.
    pub fn bar_swap(&self) -> Graph {
        Graph {
            n: self.n,
            pairs: self.pairs.iter().map(|&(a, b)| (b, a)).collect(),
            sigma1: self.sigma2.clone(),
            sigma2: self.sigma1.clone(),
        }
    }

    /// Relabels unbarred contours by `pi` and barred contours by `rho`.
    pub fn relabel(&self, pi: &Perm, rho: &Perm) -> Graph {
        Graph {
            n: self.n,
            pairs: self
                .pairs
                .iter()
                .map(|&(a, b)| (pi.apply(a as usize) as u8, rho.apply(b as usize) as u8))
                .collect(),
            sigma1: self.sigma1.conjugate_by(pi),
            sigma2: self.sigma2.conjugate_by(rho),
        }
    }

    /// All `(row, col)` positions of the `D^{2n}` unit entries.
    pub fn nonzeros(&self, d: usize) -> Vec<(usize, usize)> {
        let n = self.n();
        let m = self.matching();
        let col = 2 * n;
        let edges: Vec<(usize, usize)> = (0..4 * n).filter(|&x| x < m[x]).map(|x| (x, m[x])).collect();
        let place = |x: usize| -> (bool, usize) {
            if x < col {
                (true, d.pow(x as u32))
            } else {
                (false, d.pow((x - col) as u32))
            }
        };
        let weights: Vec<[(bool, usize); 2]> = edges.iter().map(|&(x, y)| [place(x), place(y)]).collect();
        let total = d.pow(col as u32);
        let mut out = Vec::with_capacity(total);
        let mut digits = vec![0usize; edges.len()];
        for _ in 0..total {
            let (mut r, mut c) = (0usize, 0usize);
            for (v, w) in digits.iter().zip(&weights) {
                for &(is_row, stride) in w {
                    if is_row {
                        r += v * stride;
                    } else {
                        c += v * stride;
                    }
                }
            }
            out.push((r, c));
            for v in digits.iter_mut() {
                *v += 1;
                if *v < d {
                    break;
                }
                *v = 0;
            }
        }
        out
    }

    /// The `D^{2n} × D^{2n}` 0/1 matrix of the graph.
    pub fn to_dense(&self, d: usize, budget: usize) -> Result<Array2<Complex64>> {
        let dim = dense_dim(self.n(), d, budget)?;
        let mut out = Array2::zeros((dim, dim));
        for (r, c) in self.nonzeros(d) {
            out[[r, c]] = Complex64::new(1.0, 0.0);
        }
        Ok(out)
    }

    /// Conventional notation such as `c₁₁̄c[(1 2)⊗(1̄ 2̄)]`, 1-based.
    pub fn pretty(&self) -> String {
        let bar = |s: String| s.chars().map(|c| format!("{c}\u{0304}")).collect::<String>();
        let mut s = String::new();
        for &(a, b) in &self.pairs {
            s += &format!("c{}{}", a + 1, bar((b + 1).to_string()));
        }
        let s2 = if self.sigma2.is_identity() {
            "I".to_string()
        } else {
            self.sigma2
                .cycles()
                .iter()
                .map(|c| format!("({})", c.iter().map(|x| bar((x + 1).to_string())).join(" ")))
                .collect()
        };
        s + &format!("c[{}⊗{}]", self.sigma1, s2)
    }
}

impl fmt::Display for Graph {
    /// Compact text form `p:[(a,b)…];s1:[…];s2:[…]`, 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs = self
            .pairs
            .iter()
            .map(|&(a, b)| format!("({},{})", a + 1, b + 1))
            .join(",");
        let s1 = self.sigma1.images().iter().map(|x| x + 1).join(",");
        let s2 = self.sigma2.images().iter().map(|x| x + 1).join(",");
        write!(f, "p:[{pairs}];s1:[{s1}];s2:[{s2}]")
    }
}

impl fmt::Display for CanonicalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Graph> {
        let bad = || Error::Domain(format!("cannot parse graph `{s}`"));
        let mut fields = s.trim().split(';');
        let mut take = |prefix: &str| -> Result<String> {
            let f = fields.next().ok_or_else(bad)?.trim();
            let body = f.strip_prefix(prefix).ok_or_else(bad)?;
            let body = body
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(bad)?;
            Ok(body.to_string())
        };
        let pairs_s = take("p:")?;
        let s1_s = take("s1:")?;
        let s2_s = take("s2:")?;
        let nums = |t: &str| -> Result<Vec<usize>> {
            t.split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .ok()
                        .and_then(|v| v.checked_sub(1))
                        .ok_or_else(bad)
                })
                .collect()
        };
        let flat = nums(&pairs_s.replace(['(', ')'], ""))?;
        if flat.len() % 2 != 0 {
            return Err(bad());
        }
        let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|c| (c[0], c[1])).collect();
        let s1 = Perm::from_images(&nums(&s1_s)?)?;
        let s2 = Perm::from_images(&nums(&s2_s)?)?;
        Graph::new(s1.n(), &pairs, s1, s2)
    }
}

/// `D^{2n}`, checked against the memory budget.
pub fn dense_dim(n: usize, d: usize, budget: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::Domain("dimension D must be positive".into()));
    }
    let dim = (d as u128).pow(2 * n as u32);
    if dim > budget as u128 {
        return Err(Error::Resource(format!(
            "D^(2n) = {dim} exceeds the dense budget of {budget} rows"
        )));
    }
    Ok(dim as usize)
}

/// `(n! · C(n, p))²`: the number of distinct graphs with `p` pairs.
pub fn expected_count(n: usize, p: usize) -> usize {
    let binom = factorial(n) / (factorial(p) * factorial(n - p));
    let x = factorial(n) * binom;
    x * x
}

/// Every distinct graph on `n` replicas, in canonical form and sorted.
pub fn enumerate_graphs(n: usize) -> Vec<CanonicalGraph> {
    let perms = all_perms(n);
    let mut pair_sets: Vec<Vec<(usize, usize)>> = Vec::new();
    for p in 0..=n {
        for a in (0..n).combinations(p) {
            for b in (0..n).permutations(p) {
                pair_sets.push(a.iter().copied().zip(b).collect());
            }
        }
    }
    let chunks = par::map(&pair_sets, |pairs| {
        let mut local = Vec::with_capacity(perms.len() * perms.len());
        for s1 in &perms {
            for s2 in &perms {
                let g = Graph::new(n, pairs, s1.clone(), s2.clone()).expect("valid by construction");
                local.push(g.canonicalize());
            }
        }
        local.sort_unstable();
        local.dedup();
        local
    });
    let mut all: Vec<CanonicalGraph> = chunks.into_iter().flatten().collect();
    all.sort_unstable();
    all.dedup();
    all
}

/// Graph counts split by pair number.
pub fn counts_by_p(graphs: &[CanonicalGraph], n: usize) -> Vec<usize> {
    let mut out = vec![0; n + 1];
    for g in graphs {
        out[g.p()] += 1;
    }
    out
}
