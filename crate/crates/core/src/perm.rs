//! Exact arithmetic on the symmetric group `S_n`.
//!
//! Permutations are stored in one-line notation over `0..n`. Composition
//! follows the functional convention `(p ∘ q)(i) = p(q(i))`. User-facing
//! text (`Display`) is 1-based so that `X₁₂` prints as `(1 2)`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Which family of contours an index refers to: unbarred contours carry `U`,
/// barred contours carry `U*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Unbarred,
    Barred,
}

/// A bijection on `{0, …, n-1}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from its one-line images, checking bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || seen[x] {
                return Err(Error::Domain(format!("{images:?} is not a permutation of 0..{n}")));
            }
            seen[x] = true;
        }
        Ok(Self {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// The transposition exchanging `i` and `j` (identity when `i == j`).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, j);
        p
    }

    /// The cycle `c[0] → c[1] → … → c[0]`.
    pub fn cycle(n: usize, c: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for (k, &x) in c.iter().enumerate() {
            if x >= n {
                return Err(Error::Domain(format!("cycle entry {x} out of range for n={n}")));
            }
            images[x] = c[(k + 1) % c.len()];
        }
        Self::from_images(&images)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.n() != other.n() {
            return Err(Error::Size(format!(
                "cannot compose permutations on {} and {} points",
                self.n(),
                other.n()
            )));
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&q| self.images[q as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Perm { images }
    }

    /// `π ∘ self ∘ π⁻¹`.
    pub fn conjugate_by(&self, pi: &Perm) -> Perm {
        pi.compose_unchecked(&self.compose_unchecked(&pi.inverse()))
    }

    /// Disjoint cycles of length > 1, each starting at its smallest element,
    /// ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { n: self.n(), lengths }
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.apply(i) != i).collect()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation, 1-based; the identity prints as `I`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "I");
        }
        for c in cycles {
            write!(f, "({})", c.iter().map(|x| x + 1).join(" "))?;
        }
        Ok(())
    }
}

/// A conjugacy class label: the non-increasing cycle lengths greater than one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    n: usize,
    lengths: Vec<usize>,
}

impl CycleType {
    pub fn new(n: usize, lengths: &[usize]) -> Result<Self> {
        let mut sorted = lengths.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.iter().any(|&l| l < 2) || sorted.iter().sum::<usize>() > n {
            return Err(Error::Domain(format!(
                "{lengths:?} is not a restricted partition of {n}"
            )));
        }
        Ok(Self { n, lengths: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> usize {
        self.n - self.lengths.iter().sum::<usize>()
    }

    /// `n! / ∏ (l^{m_l} m_l!)` over all parts, fixed points included.
    pub fn class_size(&self) -> usize {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &l in &self.lengths {
            *counts.entry(l).or_default() += 1;
        }
        *counts.entry(1).or_default() += self.fixed_points();
        let denom: usize = counts.iter().map(|(&l, &m)| l.pow(m as u32) * factorial(m)).product();
        factorial(self.n) / denom
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lengths.is_empty() {
            write!(f, "I")
        } else {
            write!(f, "[{}]", self.lengths.iter().join(","))
        }
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// All of `S_n` in lexicographic one-line order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    (0..n)
        .permutations(n)
        .map(|v| Perm {
            images: v.into_iter().map(|x| x as u8).collect(),
        })
        .collect()
}

/// Restricted partitions of `n` (parts ≥ 2), i.e. the conjugacy classes of `S_n`,
/// starting from the identity class and growing in moved points.
pub fn conjugacy_classes(n: usize) -> Vec<CycleType> {
    fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for l in (2..=max.min(remaining)).rev() {
            cur.push(l);
            rec(remaining - l, l, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(n, n, &mut Vec::new(), &mut raw);
    let mut classes: Vec<CycleType> = raw.into_iter().map(|lengths| CycleType { n, lengths }).collect();
    classes.sort_by_key(|c| {
        (
            c.lengths.iter().sum::<usize>(),
            std::cmp::Reverse(c.lengths.len()),
            c.lengths.clone(),
        )
    });
    classes
}

/// Every permutation with the given cycle type.
pub fn class_members(n: usize, ct: &CycleType) -> Result<Vec<Perm>> {
    if ct.n != n {
        return Err(Error::Domain(format!("cycle type {ct} is for n={}, not n={n}", ct.n)));
    }
    Ok(all_perms(n).into_iter().filter(|p| p.cycle_type() == *ct).collect())
}

/// Members of a conjugacy class sorted by which pair contours they touch:
/// the `j`-th signature bit is `true` iff the permutation moves the contour
/// that pair `j` occupies on `side`. Pairs are `(a, b̄)` tuples, 0-based.
pub fn conditioned_class(
    n: usize,
    ct: &CycleType,
    pairs: &[(usize, usize)],
    side: Side,
    signature: &[bool],
) -> Result<Vec<Perm>> {
    if pairs.len() != signature.len() {
        return Err(Error::Size(format!(
            "signature has {} bits for {} pairs",
            signature.len(),
            pairs.len()
        )));
    }
    let anchors: Vec<usize> = pairs
        .iter()
        .map(|&(a, b)| match side {
            Side::Unbarred => a,
            Side::Barred => b,
        })
        .collect();
    Ok(class_members(n, ct)?
        .into_iter()
        .filter(|p| anchors.iter().zip(signature).all(|(&u, &bit)| (p.apply(u) != u) == bit))
        .collect())
}

/// `X^{(α)}`: two-cycles classified by which pairs they touch.
pub fn conditioned_two_cycles(n: usize, pairs: &[(usize, usize)], side: Side, signature: &[bool]) -> Result<Vec<Perm>> {
    let two = CycleType::new(n, &[2])?;
    conditioned_class(n, &two, pairs, side, signature)
}

/// The multiset product `{a ∘ b : a ∈ A, b ∈ B}` with multiplicities.
pub fn set_product(a: &[Perm], b: &[Perm]) -> Result<BTreeMap<Perm, i64>> {
    let mut out = BTreeMap::new();
    for x in a {
        for y in b {
            *out.entry(x.compose(y)?).or_insert(0) += 1;
        }
    }
    Ok(out)
}
