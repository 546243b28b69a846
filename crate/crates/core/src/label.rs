//! Set-labels, sumsets and the IASI / weak-IASI checks.
//!
//! A vertex labeling assigns each vertex a finite nonempty set of
//! non-negative integers. The edge `uv` is then labeled with the sumset
//! `f(u) + f(v)`. The labeling is an IASI when both the vertex labels and
//! the induced edge labels are pairwise distinct, and a *weak* IASI when in
//! addition every edge label is exactly as large as the larger endpoint
//! label.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::graph::{complement, Edge, Graph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelError {
    #[error("label sets must be nonempty")]
    Empty,
    #[error("label elements must be strictly ascending")]
    NotAscending,
    #[error("sumset element {0} + {1} overflows 64 bits")]
    Overflow(u64, u64),
    #[error("vertex {0} has no label")]
    IncompleteLabeling(VertexId),
    #[error("element {0} is not labeled")]
    Unlabeled(String),
    #[error("malformed labeling file: {0}")]
    Format(String),
}

/// Finite nonempty set of non-negative integers, kept in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelSet(Vec<u64>);

impl LabelSet {
    /// Builds a set from arbitrary elements, sorting and deduplicating.
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Result<Self, LabelError> {
        let mut v: Vec<u64> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(LabelError::Empty);
        }
        Ok(LabelSet(v))
    }

    /// Accepts only strictly ascending, nonempty input.
    pub fn from_ascending(elements: Vec<u64>) -> Result<Self, LabelError> {
        if elements.is_empty() {
            return Err(LabelError::Empty);
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LabelError::NotAscending);
        }
        Ok(LabelSet(elements))
    }

    pub fn singleton(x: u64) -> Self {
        LabelSet(vec![x])
    }

    /// The set-indexing number of whatever carries this label.
    // never empty by construction
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_singleton(&self) -> bool {
        self.0.len() == 1
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn min(&self) -> u64 {
        self.0[0]
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// `{x + y : x ∈ a, y ∈ b}`. Overflow is reported, never wrapped.
pub fn sumset(a: &LabelSet, b: &LabelSet) -> Result<LabelSet, LabelError> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a.elements() {
        for &y in b.elements() {
            out.push(x.checked_add(y).ok_or(LabelError::Overflow(x, y))?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(LabelSet(out))
}

/// Vertex labeling. Totality over a particular graph and injectivity are
/// not enforced here; the verifiers below diagnose both.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labeling(BTreeMap<VertexId, LabelSet>);

impl Labeling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: impl Into<VertexId>, label: LabelSet) -> Option<LabelSet> {
        self.0.insert(v.into(), label)
    }

    pub fn get(&self, v: VertexId) -> Option<&LabelSet> {
        self.0.get(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &LabelSet)> {
        self.0.iter().map(|(&v, l)| (v, l))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Set-indexing number of a vertex.
    pub fn set_indexing_number(&self, v: VertexId) -> Result<usize, LabelError> {
        self.0
            .get(&v)
            .map(LabelSet::len)
            .ok_or_else(|| LabelError::Unlabeled(format!("vertex {v}")))
    }

    fn label(&self, v: VertexId) -> Result<&LabelSet, LabelError> {
        self.0.get(&v).ok_or(LabelError::IncompleteLabeling(v))
    }

    fn check_total(&self, g: &Graph) -> Result<(), LabelError> {
        match g.vertices().find(|v| !self.0.contains_key(v)) {
            Some(v) => Err(LabelError::IncompleteLabeling(v)),
            None => Ok(()),
        }
    }

    /// Labeling file text, e.g. `{"0":[3],"1":[9,10],"2":[27]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_map()).expect("labeling serializes")
    }

    pub(crate) fn to_json_map(&self) -> BTreeMap<u32, Vec<u64>> {
        self.0.iter().map(|(v, l)| (v.0, l.0.clone())).collect()
    }

    pub fn from_json(text: &str) -> Result<Self, LabelError> {
        let raw: BTreeMap<u32, Vec<u64>> =
            serde_json::from_str(text).map_err(|e| LabelError::Format(e.to_string()))?;
        let mut out = Labeling::new();
        for (v, elements) in raw {
            let label = LabelSet::from_ascending(elements)
                .map_err(|e| LabelError::Format(format!("vertex {v}: {e}")))?;
            out.insert(v, label);
        }
        Ok(out)
    }
}

impl FromIterator<(VertexId, LabelSet)> for Labeling {
    fn from_iter<T: IntoIterator<Item = (VertexId, LabelSet)>>(iter: T) -> Self {
        Labeling(iter.into_iter().collect())
    }
}

/// Induced edge labels `g_f(uv) = f(u) + f(v)`, one per edge.
pub fn induced_edge_labels(
    g: &Graph,
    f: &Labeling,
) -> Result<BTreeMap<Edge, LabelSet>, LabelError> {
    f.check_total(g)?;
    g.edges()
        .map(|e| Ok((e, sumset(f.label(e.lo())?, f.label(e.hi())?)?)))
        .collect()
}

pub fn edge_set_indexing_number(g: &Graph, f: &Labeling, e: Edge) -> Result<usize, LabelError> {
    if !g.contains_edge(&e) {
        return Err(LabelError::Unlabeled(format!("edge {e}")));
    }
    Ok(sumset(f.label(e.lo())?, f.label(e.hi())?)?.len())
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    VertexLabelCollision(VertexId, VertexId),
    EdgeLabelCollision(Edge, Edge),
    /// `|f(u) + f(v)| > max(|f(u)|, |f(v)|)` on this edge.
    WeakConditionFailed(Edge),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexLabelCollision(u, v) => {
                write!(f, "vertex-label-collision: vertices {u} and {v}")
            }
            Violation::EdgeLabelCollision(a, b) => {
                write!(f, "edge-label-collision: edges {a} and {b}")
            }
            Violation::WeakConditionFailed(e) => write!(f, "weak-condition-failed: edge {e}"),
        }
    }
}

/// Every violation found, in a deterministic order. `verdict()` is true
/// exactly when the list is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn verdict(&self) -> bool {
        self.violations.is_empty()
    }
}

fn colliding_pairs<K: Eq + std::hash::Hash, T: Copy + Ord>(
    items: impl Iterator<Item = (K, T)>,
) -> Vec<(T, T)> {
    let mut groups: HashMap<K, Vec<T>> = HashMap::new();
    for (key, item) in items {
        groups.entry(key).or_default().push(item);
    }
    let mut pairs = Vec::new();
    for members in groups.values().filter(|m| m.len() > 1) {
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                pairs.push((a.min(b), a.max(b)));
            }
        }
    }
    pairs.sort_unstable();
    pairs
}

pub fn is_iasi(g: &Graph, f: &Labeling) -> Result<VerificationReport, LabelError> {
    let edge_labels = induced_edge_labels(g, f)?;
    let mut violations: Vec<Violation> = colliding_pairs(g.vertices().map(|v| (&f.0[&v], v)))
        .into_iter()
        .map(|(u, v)| Violation::VertexLabelCollision(u, v))
        .collect();
    violations.extend(
        colliding_pairs(edge_labels.iter().map(|(&e, l)| (l, e)))
            .into_iter()
            .map(|(a, b)| Violation::EdgeLabelCollision(a, b)),
    );
    Ok(VerificationReport { violations })
}

pub fn is_weak_iasi(g: &Graph, f: &Labeling) -> Result<VerificationReport, LabelError> {
    let mut report = is_iasi(g, f)?;
    for e in g.edges() {
        let (a, b) = (f.label(e.lo())?, f.label(e.hi())?);
        if sumset(a, b)?.len() != a.len().max(b.len()) {
            report.violations.push(Violation::WeakConditionFailed(e));
        }
    }
    Ok(report)
}

/// Edges whose label is a singleton, ascending.
pub fn mono_indexed_edges(g: &Graph, f: &Labeling) -> Result<Vec<Edge>, LabelError> {
    Ok(induced_edge_labels(g, f)?
        .into_iter()
        .filter(|(_, l)| l.is_singleton())
        .map(|(e, _)| e)
        .collect())
}

/// The labeling restricted to the vertices of `h`.
pub fn restrict(f: &Labeling, h: &Graph) -> Result<Labeling, LabelError> {
    h.vertices().map(|v| Ok((v, f.label(v)?.clone()))).collect()
}

/// Weak IASI for both `g` and its complement. Vertex collisions are
/// reported once.
pub fn is_concurrent_weak(g: &Graph, f: &Labeling) -> Result<VerificationReport, LabelError> {
    let mut report = is_weak_iasi(g, f)?;
    let other = is_weak_iasi(&complement(g), f)?;
    report.violations.extend(
        other
            .violations
            .into_iter()
            .filter(|v| !matches!(v, Violation::VertexLabelCollision(..))),
    );
    Ok(report)
}
