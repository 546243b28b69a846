//! Exact sparing numbers.
//!
//! An edge satisfies the weak condition exactly when one of its endpoints
//! carries a singleton label. So a weak IASI is determined, up to the choice
//! of concrete integers, by the set of vertices that carry larger labels,
//! and that set must be independent. Injectivity can always be arranged
//! afterwards (see [`realize_labeling`]). The sparing number is therefore
//!
//! ```text
//! min over independent S of |{uv ∈ E : u ∉ S, v ∉ S}|
//! ```
//!
//! and since an independent `S` covers exactly `Σ deg(v)` edges, this is a
//! maximum-weight independent set problem with degrees as weights.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{complement, Edge, Graph, VertexId};
use crate::label::{is_weak_iasi, mono_indexed_edges, LabelError, LabelSet, Labeling};

/// Largest graph the enumerating routines accept.
pub const ORACLE_LIMIT: usize = 24;
/// Largest graph the branch-and-bound solver accepts.
pub const SOLVER_LIMIT: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SparingError {
    #[error("pattern vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("pattern is not independent: edge {0} has both endpoints expanded")]
    InfeasiblePattern(Edge),
    #[error("graph has {size} vertices; this routine handles at most {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("labels for vertex index {0} do not fit in 64 bits")]
    Overflow(usize),
    #[error("certificate failed verification: {0}")]
    Unsound(String),
    #[error(transparent)]
    Label(#[from] LabelError),
}

/// Vertices designated to carry non-singleton labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    pub expanded: BTreeSet<VertexId>,
}

impl Pattern {
    pub fn new(expanded: impl IntoIterator<Item = impl Into<VertexId>>) -> Self {
        Pattern {
            expanded: expanded.into_iter().map(Into::into).collect(),
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.expanded.len()
    }

    pub fn is_empty(&self) -> bool {
        self.expanded.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.expanded.contains(&v)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.expanded.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparingCertificate {
    pub value: usize,
    pub pattern: Pattern,
    pub labeling: Labeling,
    pub mono_edges: Vec<Edge>,
}

impl SparingCertificate {
    /// `{"value":..,"expanded":[..],"labeling":{..},"mono_edges":[[u,v],..]}`
    pub fn to_json(&self) -> String {
        let expanded: Vec<u32> = self.pattern.expanded.iter().map(|v| v.0).collect();
        let mono: Vec<[u32; 2]> = self
            .mono_edges
            .iter()
            .map(|e| [e.lo().0, e.hi().0])
            .collect();
        format!(
            "{{\"value\":{},\"expanded\":{},\"labeling\":{},\"mono_edges\":{}}}",
            self.value,
            serde_json::to_string(&expanded).unwrap(),
            serde_json::to_string(&self.labeling.to_json_map()).unwrap(),
            serde_json::to_string(&mono).unwrap(),
        )
    }
}

fn check_pattern(g: &Graph, p: &Pattern) -> Result<Option<Edge>, SparingError> {
    if let Some(&v) = p.expanded.iter().find(|&&v| !g.contains_vertex(v)) {
        return Err(SparingError::UnknownVertex(v));
    }
    Ok(g.edges().find(|e| p.contains(e.lo()) && p.contains(e.hi())))
}

/// True when no edge has both endpoints expanded.
pub fn pattern_feasible(g: &Graph, p: &Pattern) -> Result<bool, SparingError> {
    Ok(check_pattern(g, p)?.is_none())
}

/// Number of edges with neither endpoint expanded.
pub fn pattern_mono_count(g: &Graph, p: &Pattern) -> Result<usize, SparingError> {
    if let Some(e) = check_pattern(g, p)? {
        return Err(SparingError::InfeasiblePattern(e));
    }
    Ok(g.edges()
        .filter(|e| !p.contains(e.lo()) && !p.contains(e.hi()))
        .count())
}

/// Deterministic witness labeling for a feasible pattern.
///
/// The vertex at position `i` in ascending id order gets base `b = 3^(i+1)`
/// and label `{b}`, or `{b, b + 1}` when expanded. Every label has its
/// base as minimum and the sum of two distinct powers of three identifies
/// the pair, so vertex labels and edge labels are pairwise distinct.
pub fn realize_labeling(g: &Graph, p: &Pattern) -> Result<Labeling, SparingError> {
    if let Some(e) = check_pattern(g, p)? {
        return Err(SparingError::InfeasiblePattern(e));
    }
    let mut f = Labeling::new();
    let mut tops = [0u64; 2];
    for (i, v) in g.vertices().enumerate() {
        let base = u32::try_from(i + 1)
            .ok()
            .and_then(|e| 3u64.checked_pow(e))
            .ok_or(SparingError::Overflow(i))?;
        let label = if p.contains(v) {
            let top = base.checked_add(1).ok_or(SparingError::Overflow(i))?;
            LabelSet::from_ascending(vec![base, top])?
        } else {
            LabelSet::singleton(base)
        };
        tops = [*label.elements().last().unwrap(), tops[0]];
        f.insert(v, label);
    }
    // no sumset element exceeds the two largest maxima added together
    if tops[0].checked_add(tops[1]).is_none() {
        return Err(SparingError::Overflow(g.vertex_count() - 1));
    }
    Ok(f)
}

/// Dense bitmask view of a graph: vertex `i` is the `i`-th smallest id.
pub(crate) struct Dense {
    pub ids: Vec<VertexId>,
    pub adj: Vec<u64>,
    pub edges: Vec<(usize, usize)>,
}

impl Dense {
    pub fn new(g: &Graph, limit: usize) -> Result<Self, SparingError> {
        let n = g.vertex_count();
        if n > limit {
            return Err(SparingError::TooLarge { size: n, limit });
        }
        let ids: Vec<VertexId> = g.vertices().collect();
        let index = |v: VertexId| ids.binary_search(&v).unwrap();
        let mut adj = vec![0u64; n];
        let mut edges = Vec::with_capacity(g.edge_count());
        for e in g.edges() {
            let (a, b) = (index(e.lo()), index(e.hi()));
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            edges.push((a, b));
        }
        Ok(Dense { ids, adj, edges })
    }

    pub fn pattern(&self, mask: u64) -> Pattern {
        Pattern::new(bits(mask).map(|i| self.ids[i]))
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}

/// Objective of the independent-set search: covered edges first, then
/// number of expanded vertices. Larger is better.
type Key = (u32, u32);

struct Search<'a> {
    adj: &'a [u64],
    weight: &'a [u32],
    best: Option<Key>,
    best_set: u64,
}

impl Search<'_> {
    // Greedy clique cover of `cand`, heaviest first. Each clique contributes
    // its heaviest vertex to the weight bound and one to the size bound.
    fn bound(&self, cand: u64) -> Key {
        let mut order: Vec<usize> = bits(cand).collect();
        order.sort_by(|&a, &b| self.weight[b].cmp(&self.weight[a]).then(a.cmp(&b)));
        let mut cliques: Vec<u64> = Vec::new();
        let mut w = 0;
        for v in order {
            match cliques.iter_mut().find(|c| **c & !self.adj[v] == 0) {
                Some(c) => *c |= 1 << v,
                None => {
                    cliques.push(1 << v);
                    w += self.weight[v];
                }
            }
        }
        (w, cliques.len() as u32)
    }

    fn run(&mut self, set: u64, key: Key, cand: u64) {
        if cand == 0 {
            if self.best.is_none_or(|b| key > b) {
                self.best = Some(key);
                self.best_set = set;
            }
            return;
        }
        if let Some((bw, bs)) = self.best {
            let (uw, us) = self.bound(cand);
            let w = key.0 + uw;
            if w < bw || (w == bw && key.1 + us <= bs) {
                return;
            }
        }
        let v = bits(cand)
            .max_by(|&a, &b| self.weight[a].cmp(&self.weight[b]).then(b.cmp(&a)))
            .unwrap();
        let bit = 1u64 << v;
        self.run(
            set | bit,
            (key.0 + self.weight[v], key.1 + 1),
            cand & !bit & !self.adj[v],
        );
        self.run(set, key, cand & !bit);
    }
}

/// Best key over independent sets `S` with `required ⊆ S ⊆ allowed`, or
/// `None` when `required` is not independent.
fn best_with(adj: &[u64], weight: &[u32], required: u64, allowed: u64) -> Option<(Key, u64)> {
    let mut key = (0, 0);
    let mut blocked = 0u64;
    for v in bits(required) {
        if adj[v] & required != 0 {
            return None;
        }
        key.0 += weight[v];
        key.1 += 1;
        blocked |= adj[v];
    }
    let mut s = Search {
        adj,
        weight,
        best: None,
        best_set: 0,
    };
    s.run(required, key, allowed & !required & !blocked);
    s.best.map(|k| (k, s.best_set))
}

/// Optimal pattern under the deterministic tie-break: fewest mono-indexed
/// edges, then most expanded vertices, then the lexicographically smallest
/// ascending id list. Isolated vertices are never expanded.
fn optimal_mask(d: &Dense) -> u64 {
    let n = d.ids.len();
    let weight: Vec<u32> = d.adj.iter().map(|a| a.count_ones()).collect();
    let allowed: u64 = (0..n).filter(|&i| weight[i] > 0).fold(0, |m, i| m | 1 << i);
    let (target, _) = best_with(&d.adj, &weight, 0, allowed).expect("empty set is independent");

    // Smallest-first greedy over ids yields the lexicographically smallest
    // optimal set among those of maximum size.
    let mut chosen = 0u64;
    let mut open = allowed;
    for i in 0..n {
        let bit = 1u64 << i;
        if open & bit == 0 {
            continue;
        }
        match best_with(&d.adj, &weight, chosen | bit, open) {
            Some((key, _)) if key == target => {
                chosen |= bit;
                open &= !d.adj[i];
            }
            _ => open &= !bit,
        }
    }
    chosen
}

/// Exact sparing number with a verified witness labeling.
pub fn sparing_exact(g: &Graph) -> Result<SparingCertificate, SparingError> {
    let d = Dense::new(g, SOLVER_LIMIT)?;
    let pattern = d.pattern(optimal_mask(&d));
    certify(g, pattern)
}

/// Builds and checks the certificate for a given feasible pattern.
pub fn certify(g: &Graph, pattern: Pattern) -> Result<SparingCertificate, SparingError> {
    let value = pattern_mono_count(g, &pattern)?;
    let labeling = realize_labeling(g, &pattern)?;
    let report = is_weak_iasi(g, &labeling)?;
    if !report.verdict() {
        return Err(SparingError::Unsound(format!("{:?}", report.violations)));
    }
    let mono_edges = mono_indexed_edges(g, &labeling)?;
    if mono_edges.len() != value {
        return Err(SparingError::Unsound(format!(
            "{} mono-indexed edges under the labeling, pattern predicts {value}",
            mono_edges.len()
        )));
    }
    Ok(SparingCertificate {
        value,
        pattern,
        labeling,
        mono_edges,
    })
}

/// Visits every vertex subset of a graph with at most [`ORACLE_LIMIT`]
/// vertices, passing the subset and the count of edges it leaves uncovered.
fn for_each_subset(g: &Graph, mut visit: impl FnMut(u64, bool, usize)) -> Result<(), SparingError> {
    let d = Dense::new(g, ORACLE_LIMIT)?;
    let n = d.ids.len();
    for mask in 0u64..(1u64 << n) {
        let independent = d
            .edges
            .iter()
            .all(|&(a, b)| mask >> a & 1 == 0 || mask >> b & 1 == 0);
        let uncovered = d
            .edges
            .iter()
            .filter(|&&(a, b)| mask >> a & 1 == 0 && mask >> b & 1 == 0)
            .count();
        visit(mask, independent, uncovered);
    }
    Ok(())
}

/// Brute-force sparing number: scans all `2^n` vertex subsets.
pub fn sparing_oracle(g: &Graph) -> Result<usize, SparingError> {
    let mut best = usize::MAX;
    for_each_subset(g, |_, independent, uncovered| {
        if independent {
            best = best.min(uncovered);
        }
    })?;
    Ok(if best == usize::MAX { 0 } else { best })
}

/// Every achievable mono-indexed edge count, ascending.
pub fn mono_count_spectrum(g: &Graph) -> Result<BTreeSet<usize>, SparingError> {
    let mut out = BTreeSet::new();
    for_each_subset(g, |_, independent, uncovered| {
        if independent {
            out.insert(uncovered);
        }
    })?;
    Ok(out)
}

/// All patterns feasible in both `g` and its complement, by enumeration.
pub fn concurrent_patterns(g: &Graph) -> Result<Vec<Pattern>, SparingError> {
    let d = Dense::new(g, ORACLE_LIMIT)?;
    let c = Dense::new(&complement(g), ORACLE_LIMIT)?;
    let mut out = Vec::new();
    for_each_subset(g, |mask, independent, _| {
        if independent
            && c.adj
                .iter()
                .enumerate()
                .all(|(i, a)| mask >> i & 1 == 0 || a & mask == 0)
        {
            out.push(d.pattern(mask));
        }
    })?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcurrentOptimum {
    pub mono_in_graph: usize,
    pub mono_in_complement: usize,
    pub pattern: Pattern,
}

/// Best labeling pattern that is weak for both `g` and its complement.
///
/// Any two vertices are adjacent in one of the two graphs, so such a
/// pattern expands at most one vertex. Minimizes the complement count, then
/// the count in `g`; the empty pattern wins ties, then the lowest id.
pub fn concurrent_min_mono(g: &Graph) -> ConcurrentOptimum {
    let total = g.edge_count();
    let n = g.vertex_count();
    let total_c = n * n.saturating_sub(1) / 2 - total;
    let mut best = ConcurrentOptimum {
        mono_in_graph: total,
        mono_in_complement: total_c,
        pattern: Pattern::empty(),
    };
    let degrees = g.degrees();
    for (&v, &deg) in &degrees {
        let cand = (total_c - (n - 1 - deg), total - deg);
        if cand < (best.mono_in_complement, best.mono_in_graph) {
            best = ConcurrentOptimum {
                mono_in_graph: cand.1,
                mono_in_complement: cand.0,
                pattern: Pattern::new([v]),
            };
        }
    }
    best
}
