//! Simple undirected graphs with stable vertex ids, the standard families,
//! and the binary/unary operations used when building larger instances.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("join operands share vertex {0}; relabel one side first")]
    DisjointnessViolation(VertexId),
    #[error("not a subgraph: {0}")]
    NotASubgraph(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex name {0:?} is already used by another vertex")]
    DuplicateName(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
}

/// Stable, non-negative vertex identifier.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(id: u32) -> Self {
        VertexId(id)
    }
}

/// Unordered vertex pair, stored with the smaller id first.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    pub fn new(u: impl Into<VertexId>, v: impl Into<VertexId>) -> Result<Self, GraphError> {
        let (u, v) = (u.into(), v.into());
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge(u, v)),
            std::cmp::Ordering::Greater => Ok(Edge(v, u)),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(u)),
        }
    }

    pub fn lo(&self) -> VertexId {
        self.0
    }

    pub fn hi(&self) -> VertexId {
        self.1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A simple, finite, undirected graph.
///
/// Vertices are kept in ascending id order and may be isolated. Optional
/// names are unique within one graph and carried through every operation
/// that keeps the vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<Edge>,
    names: BTreeMap<VertexId, String>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(n: u32, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut g = Graph::new();
        for v in 0..n {
            g.add_vertex(VertexId(v));
        }
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::UnknownVertex(VertexId(u)));
            }
            if v >= n {
                return Err(GraphError::UnknownVertex(VertexId(v)));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: impl Into<VertexId>) -> bool {
        self.vertices.insert(v.into())
    }

    /// Inserts the edge, adding missing endpoints. Returns false if the edge
    /// was already present.
    pub fn add_edge(
        &mut self,
        u: impl Into<VertexId>,
        v: impl Into<VertexId>,
    ) -> Result<bool, GraphError> {
        let e = Edge::new(u, v)?;
        self.vertices.insert(e.0);
        self.vertices.insert(e.1);
        Ok(self.edges.insert(e))
    }

    pub fn set_name(&mut self, v: VertexId, name: impl Into<String>) -> Result<(), GraphError> {
        if !self.vertices.contains(&v) {
            return Err(GraphError::UnknownVertex(v));
        }
        let name = name.into();
        if self.names.iter().any(|(&w, n)| w != v && *n == name) {
            return Err(GraphError::DuplicateName(name));
        }
        self.names.insert(v, name);
        Ok(())
    }

    pub fn name(&self, v: VertexId) -> Option<&str> {
        self.names.get(&v).map(String::as_str)
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.names.iter().find(|(_, n)| *n == name).map(|(&v, _)| v)
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn has_edge(&self, u: impl Into<VertexId>, v: impl Into<VertexId>) -> bool {
        Edge::new(u, v).is_ok_and(|e| self.edges.contains(&e))
    }

    pub fn max_id(&self) -> Option<VertexId> {
        self.vertices.last().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().values().copied().max().unwrap_or(0)
    }

    /// Degree of every vertex, isolated vertices included.
    pub fn degrees(&self) -> BTreeMap<VertexId, usize> {
        let mut deg: BTreeMap<VertexId, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for e in &self.edges {
            *deg.get_mut(&e.0).unwrap() += 1;
            *deg.get_mut(&e.1).unwrap() += 1;
        }
        deg
    }

    pub fn neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.0 == v {
                    Some(e.1)
                } else if e.1 == v {
                    Some(e.0)
                } else {
                    None
                }
            })
            .collect()
    }

    /// True when `self` is a subgraph of `g` (vertex and edge containment).
    pub fn is_subgraph_of(&self, g: &Graph) -> bool {
        self.vertices.is_subset(&g.vertices) && self.edges.is_subset(&g.edges)
    }

    /// Copy with every id increased by `offset`.
    pub fn shifted(&self, offset: u32) -> Result<Graph, GraphError> {
        let shift = |v: VertexId| {
            v.0.checked_add(offset)
                .map(VertexId)
                .ok_or_else(|| GraphError::InvalidParameter(format!("id {v} + {offset} overflows")))
        };
        let mut out = Graph::new();
        for &v in &self.vertices {
            out.vertices.insert(shift(v)?);
        }
        for e in &self.edges {
            out.edges.insert(Edge(shift(e.0)?, shift(e.1)?));
        }
        for (&v, n) in &self.names {
            out.names.insert(shift(v)?, n.clone());
        }
        Ok(out)
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.first() else {
            return true;
        };
        let adj = self.adjacency();
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[&v] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    pub(crate) fn adjacency(&self) -> BTreeMap<VertexId, Vec<VertexId>> {
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for e in &self.edges {
            adj.get_mut(&e.0).unwrap().push(e.1);
            adj.get_mut(&e.1).unwrap().push(e.0);
        }
        adj
    }

    // Names from `other` are merged only where they do not clash.
    fn merge_names(&mut self, other: &Graph) {
        for (&v, n) in &other.names {
            if self.vertices.contains(&v)
                && !self.names.contains_key(&v)
                && !self.names.values().any(|m| m == n)
            {
                self.names.insert(v, n.clone());
            }
        }
    }

    fn drop_isolated(&mut self) {
        let touched: BTreeSet<VertexId> = self.edges.iter().flat_map(|e| [e.0, e.1]).collect();
        self.vertices = touched;
        let vertices = &self.vertices;
        self.names.retain(|v, _| vertices.contains(v));
    }
}

/// Path on `k` vertices `0..k` (and `k - 1` edges).
pub fn make_path(k: u32) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidParameter(
            "path needs at least 1 vertex".into(),
        ));
    }
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::from_edges(k, &edges)
}

/// Cycle of length `k` on vertices `0..k`.
pub fn make_cycle(k: u32) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {k}"
        )));
    }
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::from_edges(k, &edges)
}

pub fn make_complete(k: u32) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidParameter(
            "complete graph needs at least 1 vertex".into(),
        ));
    }
    let edges: Vec<_> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    Graph::from_edges(k, &edges)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn make_complete_bipartite(a: u32, b: u32) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(GraphError::InvalidParameter(format!(
            "complete bipartite parts must be nonempty, got ({a},{b})"
        )));
    }
    let edges: Vec<_> = (0..a)
        .flat_map(|i| (a..a + b).map(move |j| (i, j)))
        .collect();
    Graph::from_edges(a + b, &edges)
}

/// Fan `P_k + K_1`: path on `0..k`, hub `k`.
pub fn make_fan(k: u32) -> Result<Graph, GraphError> {
    join_with_hub(make_path(k)?)
}

/// Wheel `C_k + K_1`: rim on `0..k`, hub `k`.
pub fn make_wheel(k: u32) -> Result<Graph, GraphError> {
    join_with_hub(make_cycle(k)?)
}

fn join_with_hub(rim: Graph) -> Result<Graph, GraphError> {
    let hub = rim.max_id().map_or(0, |v| v.0 + 1);
    graph_join(&rim, &make_complete(1)?.shifted(hub)?)
}

/// Circulant `r`-regular graph on `0..n`: each vertex is joined to the
/// `r / 2` nearest vertices on either side, plus the antipodal vertex when
/// `r` is odd.
pub fn make_circulant_regular(n: u32, r: u32) -> Result<Graph, GraphError> {
    if r >= n || (n * r) % 2 == 1 {
        return Err(GraphError::InvalidParameter(format!(
            "no {r}-regular graph on {n} vertices"
        )));
    }
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    for v in 0..n {
        for step in 1..=r / 2 {
            g.add_edge(v, (v + step) % n)?;
        }
        if r % 2 == 1 {
            g.add_edge(v, (v + n / 2) % n)?;
        }
    }
    Ok(g)
}

/// `V1 ∪ V2`, `E1 ∪ E2`, vertices identified by id.
pub fn graph_union(g1: &Graph, g2: &Graph) -> Graph {
    let mut out = g1.clone();
    out.vertices.extend(g2.vertices.iter().copied());
    out.edges.extend(g2.edges.iter().copied());
    out.merge_names(g2);
    out
}

pub fn graph_intersection(g1: &Graph, g2: &Graph) -> Graph {
    let mut out = Graph {
        vertices: g1.vertices.intersection(&g2.vertices).copied().collect(),
        edges: g1.edges.intersection(&g2.edges).copied().collect(),
        names: BTreeMap::new(),
    };
    out.names = g1
        .names
        .iter()
        .filter(|(v, _)| out.vertices.contains(v))
        .map(|(&v, n)| (v, n.clone()))
        .collect();
    out.merge_names(g2);
    out
}

/// Union plus every edge between the two vertex sets. The operands must
/// not share a vertex id.
pub fn graph_join(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    if let Some(&shared) = g1.vertices.intersection(&g2.vertices).next() {
        return Err(GraphError::DisjointnessViolation(shared));
    }
    let mut out = graph_union(g1, g2);
    for &u in &g1.vertices {
        for &v in &g2.vertices {
            out.edges.insert(Edge::new(u, v)?);
        }
    }
    Ok(out)
}

/// Symmetric difference of the edge sets; vertices left without an edge
/// are removed.
pub fn ring_sum(g1: &Graph, g2: &Graph) -> Graph {
    let mut out = graph_union(g1, g2);
    out.edges = g1.edges.symmetric_difference(&g2.edges).copied().collect();
    out.drop_isolated();
    out
}

/// Same vertex set, complementary edge set. Isolated vertices are kept so
/// that the operation is an involution.
pub fn complement(g: &Graph) -> Graph {
    let vs: Vec<VertexId> = g.vertices.iter().copied().collect();
    let mut edges = BTreeSet::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            let e = Edge(u, v);
            if !g.edges.contains(&e) {
                edges.insert(e);
            }
        }
    }
    Graph {
        vertices: g.vertices.clone(),
        edges,
        names: g.names.clone(),
    }
}

/// `G - H` for a subgraph `H` of `G`: the ring sum `G ⊕ H`.
pub fn subgraph_complement(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    if let Some(v) = h.vertices.difference(&g.vertices).next() {
        return Err(GraphError::NotASubgraph(format!(
            "vertex {v} is not in the host graph"
        )));
    }
    if let Some(e) = h.edges.difference(&g.edges).next() {
        return Err(GraphError::NotASubgraph(format!(
            "edge {e} is not in the host graph"
        )));
    }
    Ok(ring_sum(g, h))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    /// A proper 2-colouring; every vertex is in exactly one side.
    Bipartite {
        left: BTreeSet<VertexId>,
        right: BTreeSet<VertexId>,
    },
    /// Vertices of an odd cycle in traversal order.
    OddCycle(Vec<VertexId>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let adj = g.adjacency();
    let mut side: BTreeMap<VertexId, bool> = BTreeMap::new();
    let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut depth: BTreeMap<VertexId, usize> = BTreeMap::new();

    for &root in &g.vertices {
        if side.contains_key(&root) {
            continue;
        }
        side.insert(root, false);
        depth.insert(root, 0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[&u] {
                match side.get(&w) {
                    None => {
                        side.insert(w, !side[&u]);
                        parent.insert(w, u);
                        depth.insert(w, depth[&u] + 1);
                        queue.push_back(w);
                    }
                    Some(&s) if s == side[&u] => {
                        return Bipartiteness::OddCycle(odd_cycle(u, w, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }

    let (left, right) = side.into_iter().partition::<Vec<_>, _>(|&(_, s)| !s);
    Bipartiteness::Bipartite {
        left: left.into_iter().map(|(v, _)| v).collect(),
        right: right.into_iter().map(|(v, _)| v).collect(),
    }
}

// Walks both endpoints of a same-coloured edge up the BFS tree to their
// common ancestor.
fn odd_cycle(
    u: VertexId,
    w: VertexId,
    parent: &BTreeMap<VertexId, VertexId>,
    depth: &BTreeMap<VertexId, usize>,
) -> Vec<VertexId> {
    let (mut a, mut b) = (u, w);
    let mut up = vec![a];
    let mut down = vec![b];
    while depth[&a] > depth[&b] {
        a = parent[&a];
        up.push(a);
    }
    while depth[&b] > depth[&a] {
        b = parent[&b];
        down.push(b);
    }
    while a != b {
        a = parent[&a];
        b = parent[&b];
        up.push(a);
        down.push(b);
    }
    down.pop();
    up.extend(down.into_iter().rev());
    up
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4_on(ids: [u32; 4]) -> Graph {
        let mut g = Graph::new();
        for i in 0..4 {
            g.add_edge(ids[i], ids[(i + 1) % 4]).unwrap();
        }
        g
    }

    #[test]
    fn generator_sizes() {
        let p1 = make_path(1).unwrap();
        assert_eq!((p1.vertex_count(), p1.edge_count()), (1, 0));
        assert_eq!(make_path(2).unwrap().edge_count(), 1);
        let p5 = make_path(5).unwrap();
        assert_eq!((p5.vertex_count(), p5.edge_count()), (5, 4));

        assert_eq!(make_cycle(3).unwrap(), make_complete(3).unwrap());
        let c4 = make_cycle(4).unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        assert!(is_bipartite(&c4).is_bipartite());
        assert!(!is_bipartite(&make_cycle(5).unwrap()).is_bipartite());

        assert_eq!(make_complete(1).unwrap().edge_count(), 0);
        assert_eq!(make_complete(4).unwrap().edge_count(), 6);
        assert_eq!(make_complete(5).unwrap().edge_count(), 10);

        assert_eq!(make_complete_bipartite(1, 1).unwrap().edge_count(), 1);
        assert_eq!(make_complete_bipartite(2, 3).unwrap().edge_count(), 6);
        assert_eq!(make_complete_bipartite(3, 3).unwrap().edge_count(), 9);
    }

    #[test]
    fn generator_errors() {
        assert!(matches!(make_path(0), Err(GraphError::InvalidParameter(_))));
        assert!(matches!(
            make_cycle(2),
            Err(GraphError::InvalidParameter(_))
        ));
        assert!(matches!(
            make_complete(0),
            Err(GraphError::InvalidParameter(_))
        ));
        assert!(matches!(
            make_complete_bipartite(0, 3),
            Err(GraphError::InvalidParameter(_))
        ));
        assert!(matches!(
            make_complete_bipartite(2, 0),
            Err(GraphError::InvalidParameter(_))
        ));
    }

    #[test]
    fn union_cases() {
        let p2 = make_path(2).unwrap();
        assert_eq!(graph_union(&p2, &p2), p2);

        let a = make_cycle(3).unwrap();
        let b = a.shifted(3).unwrap();
        let u = graph_union(&a, &b);
        assert_eq!((u.vertex_count(), u.edge_count()), (6, 6));
        assert!(!u.is_connected());

        let u = graph_union(&c4_on([0, 1, 2, 3]), &c4_on([2, 3, 4, 5]));
        assert_eq!((u.vertex_count(), u.edge_count()), (6, 7));
    }

    #[test]
    fn intersection_cases() {
        let g = make_wheel(5).unwrap();
        assert_eq!(graph_intersection(&g, &g), g);

        let i = graph_intersection(&c4_on([0, 1, 2, 3]), &c4_on([2, 3, 4, 5]));
        assert_eq!(
            i.edges().collect::<Vec<_>>(),
            vec![Edge::new(2, 3).unwrap()]
        );
        assert_eq!(i.vertex_count(), 2);

        let a = make_cycle(3).unwrap();
        let i = graph_intersection(&a, &a.shifted(10).unwrap());
        assert!(i.is_empty());
        assert_eq!(i.edge_count(), 0);
    }

    #[test]
    fn join_cases() {
        let k1 = make_complete(1).unwrap();
        let fan = graph_join(&make_path(5).unwrap(), &k1.shifted(5).unwrap()).unwrap();
        assert_eq!(fan.edge_count(), 9);
        assert_eq!(fan, make_fan(5).unwrap());

        let wheel = graph_join(&k1, &make_cycle(5).unwrap().shifted(1).unwrap()).unwrap();
        assert_eq!(wheel.edge_count(), 10);

        let c3 = make_cycle(3).unwrap();
        assert_eq!(
            graph_join(&c3, &c3.shifted(3).unwrap())
                .unwrap()
                .edge_count(),
            15
        );

        assert_eq!(
            graph_join(&c3, &c3),
            Err(GraphError::DisjointnessViolation(VertexId(0)))
        );
    }

    #[test]
    fn ring_sum_cases() {
        let g = make_complete(4).unwrap();
        let r = ring_sum(&g, &g);
        assert!(r.is_empty());

        let r = ring_sum(&c4_on([0, 1, 2, 3]), &c4_on([2, 3, 4, 5]));
        assert_eq!((r.vertex_count(), r.edge_count()), (6, 6));
        assert!(r.degrees().values().all(|&d| d == 2));
        assert!(r.is_connected());
        assert!(!r.has_edge(2, 3));

        let a = make_cycle(3).unwrap();
        let b = make_path(4).unwrap().shifted(2).unwrap();
        assert_eq!(ring_sum(&a, &b), graph_union(&a, &b));
    }

    #[test]
    fn complement_cases() {
        let c = complement(&make_complete(4).unwrap());
        assert_eq!((c.vertex_count(), c.edge_count()), (4, 0));

        let c5 = make_cycle(5).unwrap();
        let cc5 = complement(&c5);
        assert_eq!(cc5.edge_count(), 5);
        assert!(cc5.degrees().values().all(|&d| d == 2));
        assert!(cc5.is_connected());

        let c = complement(&make_cycle(4).unwrap());
        assert_eq!(
            c.edges().collect::<Vec<_>>(),
            vec![Edge::new(0, 2).unwrap(), Edge::new(1, 3).unwrap()]
        );
    }

    #[test]
    fn subgraph_complement_cases() {
        let g = make_cycle(5).unwrap();
        assert!(subgraph_complement(&g, &g).unwrap().is_empty());

        let c4 = make_cycle(4).unwrap();
        let mut one = Graph::new();
        one.add_edge(3, 0).unwrap();
        let p = subgraph_complement(&c4, &one).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (4, 3));
        assert!(is_bipartite(&p).is_bipartite() && p.is_connected());

        let k4 = make_complete(4).unwrap();
        let r = subgraph_complement(&k4, &c4).unwrap();
        assert_eq!(
            r.edges().collect::<Vec<_>>(),
            vec![Edge::new(0, 2).unwrap(), Edge::new(1, 3).unwrap()]
        );

        let mut foreign = Graph::new();
        foreign.add_edge(0, 2).unwrap();
        assert!(matches!(
            subgraph_complement(&c4, &foreign),
            Err(GraphError::NotASubgraph(_))
        ));
    }

    #[test]
    fn bipartite_witnesses() {
        match is_bipartite(&make_cycle(4).unwrap()) {
            Bipartiteness::Bipartite { left, right } => {
                assert_eq!(left, BTreeSet::from([VertexId(0), VertexId(2)]));
                assert_eq!(right, BTreeSet::from([VertexId(1), VertexId(3)]));
            }
            other => panic!("{other:?}"),
        }
        match is_bipartite(&make_cycle(5).unwrap()) {
            Bipartiteness::OddCycle(cycle) => {
                assert_eq!(cycle.len(), 5);
                let g = make_cycle(5).unwrap();
                for i in 0..cycle.len() {
                    assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                }
            }
            other => panic!("{other:?}"),
        }
        match is_bipartite(&make_complete(1).unwrap()) {
            Bipartiteness::Bipartite { left, right } => {
                assert_eq!(left.len(), 1);
                assert!(right.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn names_are_unique_and_survive_complement() {
        let mut g = make_path(3).unwrap();
        g.set_name(VertexId(0), "a").unwrap();
        assert_eq!(
            g.set_name(VertexId(1), "a"),
            Err(GraphError::DuplicateName("a".into()))
        );
        assert_eq!(g.vertex_by_name("a"), Some(VertexId(0)));
        assert_eq!(complement(&complement(&g)), g);
        assert_eq!(
            g.set_name(VertexId(9), "z"),
            Err(GraphError::UnknownVertex(VertexId(9)))
        );
    }

    #[test]
    fn circulant_is_regular() {
        for (n, r) in [(5, 2), (6, 3), (7, 4), (8, 5)] {
            let g = make_circulant_regular(n, r).unwrap();
            assert!(
                g.degrees().values().all(|&d| d == r as usize),
                "n={n} r={r}"
            );
        }
        assert!(make_circulant_regular(5, 3).is_err());
        assert!(make_circulant_regular(4, 4).is_err());
    }
}
