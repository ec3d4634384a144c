//! Graph categories: disjoint sets of graphs that `𝓛ₙ` maps into
//! combinations of each other.
//!
//! Two graphs belong to the same category exactly when they are related by
//! the symmetries of `𝓛ₙ`:
//! - independent relabelings of the unbarred and barred contours (`S_n × S_n`);
//! - the exchange of the barred and unbarred families;
//! - the dense transpose.
//!
//! The classifier computes these orbits by union–find over the generators.
//! Discovery then grows the basis rank by rank from the three seed
//! categories `F₀`, `F₁`, `F_{0,X+X̄}`, applying `𝓛ₙ` and adding the orbit of
//! every new graph it meets. Closure (lumpability) of the resulting partition
//! is checked when `M` is assembled.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, CanonicalGraph, Graph};
use crate::liouvillian::act_l;
use crate::par;
use crate::perm::{CycleType, Perm};

/// Human-readable category label: pair count, permutation class and
/// condition signature (possibly empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub p: usize,
    pub perm_class: String,
    pub signature: String,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{{{},{}}}", self.p, self.perm_class)?;
        if !self.signature.is_empty() {
            write!(f, "^({})", self.signature)?;
        }
        Ok(())
    }
}

/// One category: its label and its (sorted) canonical members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Category {
    pub label: Label,
    pub members: Vec<CanonicalGraph>,
}

impl Category {
    pub fn p(&self) -> usize {
        self.label.p
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Symmetry orbits of all graphs on `n` replicas.
#[derive(Clone, Debug)]
pub struct Classifier {
    n: usize,
    orbit_of: HashMap<CanonicalGraph, usize>,
    orbits: Vec<Vec<CanonicalGraph>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Classifier {
    pub fn new(n: usize) -> Self {
        let graphs = enumerate_graphs(n);
        let index: HashMap<CanonicalGraph, usize> = graphs.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        let id = Perm::identity(n);
        let adjacent: Vec<Perm> = (0..n.saturating_sub(1))
            .map(|i| Perm::transposition(n, i, i + 1))
            .collect();
        let images = par::map(&graphs, |g| {
            let mut out: Vec<Graph> = Vec::with_capacity(2 * adjacent.len() + 2);
            for t in &adjacent {
                out.push(g.relabel(t, &id));
                out.push(g.relabel(&id, t));
            }
            out.push(g.bar_swap());
            out.push(g.transpose());
            out.into_iter()
                .map(|h| index[&h.canonicalize()])
                .collect::<Vec<usize>>()
        });
        let mut parent: Vec<usize> = (0..graphs.len()).collect();
        for (i, imgs) in images.iter().enumerate() {
            for &j in imgs {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
        // Graphs are sorted, so the root (smallest index) is the minimum
        // member; orbit ids follow (p, minimum member).
        let roots: Vec<usize> = (0..graphs.len()).map(|i| find(&mut parent, i)).collect();
        let mut order: Vec<usize> = roots.clone();
        order.sort_unstable();
        order.dedup();
        order.sort_by_key(|&r| (graphs[r].p(), r));
        let rank: HashMap<usize, usize> = order.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        let mut orbits = vec![Vec::new(); order.len()];
        let mut orbit_of = HashMap::with_capacity(graphs.len());
        for (i, g) in graphs.into_iter().enumerate() {
            let o = rank[&roots[i]];
            orbits[o].push(g.clone());
            orbit_of.insert(g, o);
        }
        Self { n, orbit_of, orbits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_orbits(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit(&self, id: usize) -> &[CanonicalGraph] {
        &self.orbits[id]
    }

    pub fn orbit_of(&self, g: &Graph) -> Option<usize> {
        self.orbit_of.get(&g.canonicalize()).copied()
    }

    /// A descriptive label for an orbit, derived from its minimal member:
    /// cycle types of `σ₁`, `σ₂` and a running index among orbits that share
    /// them.
    pub fn auto_label(&self, id: usize) -> Label {
        let rep = &self.orbits[id][0];
        let class = |g: &Graph| format!("{}|{}", g.sigma1().cycle_type(), g.sigma2().cycle_type());
        let key = (rep.p(), class(rep));
        let index = (0..id)
            .filter(|&k| {
                let r = &self.orbits[k][0];
                (r.p(), class(r)) == key
            })
            .count();
        Label {
            p: rep.p(),
            perm_class: key.1,
            signature: format!("#{}", index + 1),
        }
    }
}

/// Label of a graph's category under the default (automatic) labeling.
pub fn classify_graph(classifier: &Classifier, g: &Graph) -> Result<Label> {
    if g.n() != classifier.n() {
        return Err(Error::Size(format!(
            "graph on {} replicas, classifier for n={}",
            g.n(),
            classifier.n()
        )));
    }
    let id = classifier
        .orbit_of(g)
        .ok_or_else(|| Error::Consistency(format!("graph {g} was not enumerated")))?;
    Ok(classifier.auto_label(id))
}

/// An ordered set of categories partitioning (a closed subset of) the graphs.
#[derive(Clone, Debug)]
pub struct Basis {
    n: usize,
    categories: Vec<Category>,
    ranks: Vec<usize>,
    index: HashMap<CanonicalGraph, usize>,
}

impl Basis {
    pub fn new(n: usize, categories: Vec<Category>, ranks: Vec<usize>) -> Result<Self> {
        let mut index = HashMap::new();
        for (k, c) in categories.iter().enumerate() {
            for g in &c.members {
                if g.n() != n {
                    return Err(Error::Size(format!("member {g} is not on {n} replicas")));
                }
                if index.insert(g.clone(), k).is_some() {
                    return Err(Error::Consistency(format!("graph {g} lies in two categories")));
                }
            }
        }
        Ok(Self {
            n,
            categories,
            ranks,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.categories.len()
    }

    pub fn is_empty(&self) -> bool {
        self.categories.is_empty()
    }

    pub fn categories(&self) -> &[Category] {
        &self.categories
    }

    /// Discovery rank of each category (1 for the seeds).
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn category_of(&self, g: &Graph) -> Option<usize> {
        self.index.get(&g.canonicalize()).copied()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.categories.iter().map(Category::len).collect()
    }

    pub fn total_members(&self) -> usize {
        self.index.len()
    }

    pub fn position(&self, label: &Label) -> Option<usize> {
        self.categories.iter().position(|c| &c.label == label)
    }
}

/// `F₀ = c[I]`, `F₁ = Σ_u c_u c[I]`, `F_{0,X+X̄} = Σ_e c[X_e] + Σ_ē c[X_ē]`.
/// The last is empty (and omitted) for `n = 1`.
pub fn seed_categories(n: usize) -> Vec<Category> {
    let id = Perm::identity(n);
    let f0 = vec![Graph::identity(n).canonicalize()];
    let mut f1: Vec<CanonicalGraph> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| Graph::pairing(n, i, j).expect("in range").canonicalize())
        .collect();
    f1.sort();
    let mut fx = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let x = Perm::transposition(n, i, j);
            fx.push(Graph::new(n, &[], x.clone(), id.clone()).expect("valid").canonicalize());
            fx.push(Graph::new(n, &[], id.clone(), x).expect("valid").canonicalize());
        }
    }
    fx.sort();
    let label = |p: usize, class: &str| Label {
        p,
        perm_class: class.to_string(),
        signature: String::new(),
    };
    let mut out = vec![
        Category {
            label: label(0, "I"),
            members: f0,
        },
        Category {
            label: label(1, "I"),
            members: f1,
        },
    ];
    if !fx.is_empty() {
        out.push(Category {
            label: label(0, "X+X̄"),
            members: fx,
        });
    }
    out
}

/// Representatives and labels of the conventional orderings for `n = 2, 3`,
/// in the compact text form.
fn conventional_order(n: usize) -> Option<Vec<(&'static str, usize, &'static str, &'static str)>> {
    match n {
        2 => Some(vec![
            ("p:[];s1:[1,2];s2:[1,2]", 0, "I", ""),
            ("p:[(1,1)];s1:[1,2];s2:[1,2]", 1, "I", ""),
            ("p:[];s1:[2,1];s2:[1,2]", 0, "X+X̄", ""),
            ("p:[(1,1)];s1:[2,1];s2:[1,2]", 1, "X+X̄", ""),
            ("p:[(1,1),(2,2)];s1:[1,2];s2:[1,2]", 2, "I", ""),
            ("p:[];s1:[2,1];s2:[2,1]", 0, "XX̄", ""),
            ("p:[(1,1),(2,2)];s1:[2,1];s2:[1,2]", 2, "X+X̄", ""),
            ("p:[(1,1)];s1:[2,1];s2:[2,1]", 1, "XX̄", ""),
        ]),
        3 => Some(vec![
            ("p:[];s1:[1,2,3];s2:[1,2,3]", 0, "I", ""),
            ("p:[];s1:[1,2,3];s2:[1,3,2]", 0, "X+X̄", ""),
            ("p:[];s1:[1,3,2];s2:[1,3,2]", 0, "XX̄", ""),
            ("p:[];s1:[1,2,3];s2:[2,3,1]", 0, "XX+X̄X̄", ""),
            ("p:[];s1:[1,3,2];s2:[2,3,1]", 0, "XXX̄+X̄X̄X", ""),
            ("p:[];s1:[2,3,1];s2:[2,3,1]", 0, "XXX̄X̄", ""),
            ("p:[(1,1)];s1:[1,2,3];s2:[1,2,3]", 1, "I", ""),
            ("p:[(1,1)];s1:[1,2,3];s2:[1,3,2]", 1, "X+X̄", "e"),
            ("p:[(1,1)];s1:[1,2,3];s2:[2,1,3]", 1, "X+X̄", "i"),
            ("p:[(1,1)];s1:[1,3,2];s2:[1,3,2]", 1, "XX̄", "ee"),
            ("p:[(1,1)];s1:[1,3,2];s2:[2,1,3]", 1, "XX̄", "ei"),
            ("p:[(1,1)];s1:[2,1,3];s2:[2,1,3]", 1, "XX̄", "ii"),
            ("p:[(1,1)];s1:[1,2,3];s2:[2,3,1]", 1, "XX+X̄X̄", ""),
            ("p:[(1,1)];s1:[1,3,2];s2:[2,3,1]", 1, "XXX̄+X̄X̄X", "e"),
            ("p:[(1,1)];s1:[2,1,3];s2:[2,3,1]", 1, "XXX̄+X̄X̄X", "i"),
            ("p:[(1,1)];s1:[2,3,1];s2:[2,3,1]", 1, "XXX̄X̄", ""),
            ("p:[(1,1),(2,2)];s1:[1,2,3];s2:[1,2,3]", 2, "I", ""),
            ("p:[(1,1),(2,2)];s1:[1,2,3];s2:[1,3,2]", 2, "X+X̄", "ei"),
            ("p:[(1,1),(2,2)];s1:[1,2,3];s2:[2,1,3]", 2, "X+X̄", "ii"),
            ("p:[(1,1),(2,2)];s1:[1,3,2];s2:[1,3,2]", 2, "XX̄", "ei,ei"),
            ("p:[(1,1),(2,2)];s1:[1,3,2];s2:[3,2,1]", 2, "XX̄", "ei,ie"),
            ("p:[(1,1),(2,2)];s1:[1,2,3];s2:[2,3,1]", 2, "XX̄", "ei,ii"),
            ("p:[(1,1),(2,2)];s1:[1,3,2];s2:[2,3,1]", 2, "XXX̄+X̄X̄X", ""),
            ("p:[(1,1),(2,2),(3,3)];s1:[1,2,3];s2:[1,2,3]", 3, "I", ""),
            ("p:[(1,1),(2,2),(3,3)];s1:[1,2,3];s2:[1,3,2]", 3, "X+X̄", ""),
            ("p:[(1,1),(2,2),(3,3)];s1:[1,2,3];s2:[2,3,1]", 3, "XX+X̄X̄", ""),
        ]),
        _ => None,
    }
}

/// Discovery options.
#[derive(Clone, Debug)]
pub struct DiscoverOptions {
    /// Reorder and relabel to the conventional tables when available (`n ≤ 3`).
    pub conventional_order: bool,
    /// Permute the seed list before the search (order-independence checks).
    pub seed_order: Option<Vec<usize>>,
    /// Abort after this many ranks.
    pub max_ranks: usize,
}

impl Default for DiscoverOptions {
    fn default() -> Self {
        Self {
            conventional_order: true,
            seed_order: None,
            max_ranks: 64,
        }
    }
}

/// Rank-by-rank closure from the seed categories, with default options.
pub fn discover(n: usize) -> Result<Basis> {
    discover_with(n, &DiscoverOptions::default())
}

pub fn discover_with(n: usize, opts: &DiscoverOptions) -> Result<Basis> {
    let classifier = Classifier::new(n);
    discover_using(&classifier, opts)
}

pub fn discover_using(classifier: &Classifier, opts: &DiscoverOptions) -> Result<Basis> {
    let n = classifier.n();
    let mut seeds = seed_categories(n);
    if let Some(order) = &opts.seed_order {
        if order.len() != seeds.len() {
            return Err(Error::Size(format!(
                "seed order of length {} for {} seeds",
                order.len(),
                seeds.len()
            )));
        }
        seeds = order.iter().map(|&k| seeds[k].clone()).collect();
    }
    // Each seed must coincide with one symmetry orbit.
    let mut found: Vec<(usize, Label, usize)> = Vec::new(); // (orbit, label, rank)
    let mut have = vec![false; classifier.num_orbits()];
    for s in &seeds {
        let o = classifier
            .orbit_of(&s.members[0])
            .ok_or_else(|| Error::Consistency("seed graph not enumerated".into()))?;
        if classifier.orbit(o) != s.members.as_slice() {
            return Err(Error::Consistency(format!("seed {} is not a symmetry orbit", s.label)));
        }
        have[o] = true;
        found.push((o, s.label.clone(), 1));
    }
    let mut frontier: Vec<usize> = found.iter().map(|f| f.0).collect();
    let mut rank = 1;
    while !frontier.is_empty() {
        if rank >= opts.max_ranks {
            return Err(Error::Consistency(format!("no closure after {rank} ranks")));
        }
        rank += 1;
        let mut new = Vec::new();
        for &o in &frontier {
            let images = par::map(classifier.orbit(o), |g| act_l(g));
            for combo in &images {
                for h in combo.terms().keys() {
                    let t = classifier
                        .orbit_of(h)
                        .ok_or_else(|| Error::Consistency(format!("graph {h} was not enumerated")))?;
                    if !have[t] {
                        have[t] = true;
                        new.push(t);
                    }
                }
            }
        }
        new.sort_unstable();
        for &t in &new {
            found.push((t, classifier.auto_label(t), rank));
        }
        frontier = new;
    }

    let mut cats: Vec<(Category, usize)> = found
        .into_iter()
        .map(|(o, label, r)| {
            (
                Category {
                    label,
                    members: classifier.orbit(o).to_vec(),
                },
                r,
            )
        })
        .collect();

    if opts.conventional_order {
        if let Some(table) = conventional_order(n) {
            if table.len() == cats.len() {
                let mut ordered = Vec::with_capacity(cats.len());
                for (rep, p, class, sig) in table {
                    let g: Graph = rep.parse()?;
                    let g = g.canonicalize();
                    let k = cats
                        .iter()
                        .position(|(c, _)| c.members.binary_search(&g).is_ok())
                        .ok_or_else(|| Error::Consistency(format!("reference representative {rep} not discovered")))?;
                    let (mut c, r) = cats.swap_remove(k);
                    if c.p() != p {
                        return Err(Error::Consistency(format!(
                            "representative {rep} has the wrong pair count"
                        )));
                    }
                    c.label = Label {
                        p,
                        perm_class: class.to_string(),
                        signature: sig.to_string(),
                    };
                    ordered.push((c, r));
                }
                cats = ordered;
            }
        }
    }
    let ranks = cats.iter().map(|c| c.1).collect();
    Basis::new(n, cats.into_iter().map(|c| c.0).collect(), ranks)
}

/// Number of orbits per pair count and the orbit sizes, for reporting.
pub fn orbit_summary(classifier: &Classifier) -> Vec<(usize, Vec<usize>)> {
    let n = classifier.n();
    (0..=n)
        .map(|p| {
            let sizes: Vec<usize> = (0..classifier.num_orbits())
                .filter(|&o| classifier.orbit(o)[0].p() == p)
                .map(|o| classifier.orbit(o).len())
                .collect();
            (p, sizes)
        })
        .collect()
}

/// Cycle-type pair `{ct(σ₁), ct(σ₂)}` (unordered) of a `p = 0` graph.
pub fn p0_class(g: &Graph) -> (CycleType, CycleType) {
    let (a, b) = (g.sigma1().cycle_type(), g.sigma2().cycle_type());
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}
