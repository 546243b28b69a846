//! Closed-form sparing claims, checked against the exact solver.
//!
//! Each [`TheoremId`] names one published claim. [`paper_formula`] evaluates
//! the claim exactly as printed, [`check`] builds the instance and compares
//! against the solver, and [`sweep`] does that over a parameter grid.
//!
//! Printed formulas are kept verbatim even where they disagree with the
//! solver; the verdict column is where disagreements show up.
//!
//! Path sizes are ambiguous: `P_n` is sometimes `n` vertices
//! and sometimes length `n`. Ids that build paths are evaluated under a
//! [`Convention`]; the printed formula (including its parity case split) is
//! always evaluated on the printed parameters, and only the instance
//! changes. Cycles have as many vertices as edges, so ids that only build
//! cycles carry no convention.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{
    complement, graph_intersection, graph_join, graph_union, make_circulant_regular, make_complete,
    make_complete_bipartite, make_cycle, make_path, ring_sum, Graph, GraphError,
};
use crate::label::{is_concurrent_weak, LabelError};
use crate::sparing::{
    bits, certify, concurrent_min_mono, concurrent_patterns, mono_count_spectrum,
    pattern_mono_count, realize_labeling, sparing_exact, Dense, Pattern, SparingCertificate,
    SparingError, ORACLE_LIMIT,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("{id} is missing parameter {name}")]
    MissingParam { id: TheoremId, name: &'static str },
    #[error("{id} has no parameter {name:?}")]
    UnknownParam { id: TheoremId, name: String },
    #[error("parameter out of schema: {0}")]
    InvalidParameter(String),
    #[error("instance has {0} vertices; checks are limited to {ORACLE_LIMIT}")]
    InstanceTooLarge(usize),
    #[error("unknown convention {0:?} (expected vertices, length or both)")]
    UnknownConvention(String),
    #[error(transparent)]
    Solver(#[from] SparingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Label(#[from] LabelError),
}

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal, [$($param:literal),*], $conv:literal, $claim:literal;)*) => {
        #[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name,)*
                }
            }

            /// Parameter names accepted by [`check`] and [`sweep`], in row
            /// order.
            pub fn params(self) -> &'static [&'static str] {
                match self {
                    $(TheoremId::$variant => &[$($param),*],)*
                }
            }

            /// Whether the instance depends on the path-size convention.
            pub fn uses_convention(self) -> bool {
                match self {
                    $(TheoremId::$variant => $conv,)*
                }
            }

            /// The claim in formula form.
            pub fn claim(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $claim,)*
                }
            }
        }
    };
}

theorem_ids! {
    BipartiteZero => "BIPARTITE_ZERO", ["a", "b"], false, "phi(G) = 0 for bipartite G (instance K_{a,b})";
    OddCycleOne => "ODD_CYCLE_ONE", ["n"], false, "phi(C_n) = 1 for odd n";
    CycleParity => "CYCLE_PARITY", ["n"], false, "every achievable mono-edge count of C_n has the parity of n";
    CompleteGraph => "COMPLETE_GRAPH", ["n"], false, "phi(K_n) = (n-1)(n-2)/2";
    UnionAdditivity => "UNION_ADDITIVITY", ["m", "n", "t"], false, "phi(G1 u G2) = phi(G1) + phi(G2) - phi(G1 n G2) (cycles C_m, C_n sharing a t-edge path)";
    FanSparing => "FAN_SPARING", ["n"], true, "phi(P_n + K_1) = ceil((n-1)/2)";
    WheelSparing => "WHEEL_SPARING", ["n"], false, "phi(C_n + K_1) = ceil((n-1)/2)";
    JoinPpSparing => "JOIN_PP_SPARING", ["m", "n"], true, "m < n: phi(P_m + P_n) = m/2(n+2) if n even, m/2(n+1) if n odd";
    JoinCcSparing => "JOIN_CC_SPARING", ["m", "n"], false, "m < n: phi(C_m + C_n) = m/2(n+2) if n even, 1+m/2(n+3) if n odd";
    JoinPcSparing => "JOIN_PC_SPARING", ["m", "n"], true, "phi(P_m + C_n): m < n as JOIN_CC; m > n: n/2(m+2) if m even, n/2(m+1) if m odd";
    JoinOneUniformLaw => "JOIN_ONE_UNIFORM_LAW", ["m", "n"], false, "in any weak IASI of C_m + C_n all non-singleton vertices lie on one side";
    RingsumParity => "RINGSUM_PARITY", ["m", "n", "t"], false, "C_m (+) C_n sharing a t-edge path: phi = 0 if m, n have equal parity, else 1 (odd mono count)";
    ComplementCycle => "COMPLEMENT_CYCLE", ["n"], false, "concurrent labelings of C_n expand at most one vertex; complement then needs n(n-3)/2 mono edges";
    ComplementRregBound => "COMPLEMENT_RREG_BOUND", ["n", "r"], false, "r-regular G (or max degree r): complement has at least ((n-1)(n-2) - 2r)/2 mono edges";
    SelfComplRegular => "SELF_COMPL_REGULAR", ["n"], false, "self-complementary r-regular G: G and its complement have at least r(2r-1)/2 mono edges";
    SelfComplCount => "SELF_COMPL_COUNT", ["n"], false, "self-complementary G with l mono edges: complement has n-l-1";
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| CatalogError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Convention {
    /// `P_n` has `n` vertices.
    Vertices,
    /// `P_n` has length `n`, i.e. `n + 1` vertices.
    Length,
}

impl Convention {
    pub fn path_vertices(self, n: u32) -> u32 {
        match self {
            Convention::Vertices => n,
            Convention::Length => n + 1,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Vertices => "vertices",
            Convention::Length => "length",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ConventionChoice {
    Vertices,
    Length,
    Both,
}

impl ConventionChoice {
    fn conventions(self) -> &'static [Convention] {
        match self {
            ConventionChoice::Vertices => &[Convention::Vertices],
            ConventionChoice::Length => &[Convention::Length],
            ConventionChoice::Both => &[Convention::Vertices, Convention::Length],
        }
    }
}

impl FromStr for ConventionChoice {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vertices" => Ok(ConventionChoice::Vertices),
            "length" => Ok(ConventionChoice::Length),
            "both" => Ok(ConventionChoice::Both),
            _ => Err(CatalogError::UnknownConvention(s.to_string())),
        }
    }
}

/// Hypothesis variant for COMPLEMENT_RREG_BOUND.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// `r`-regular instance.
    Regular,
    /// Connected instance with maximum degree `r` that is not regular.
    MaxDegree,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Regular => "regular",
            Mode::MaxDegree => "maxdeg",
        })
    }
}

/// Named integer parameters in schema order, plus the optional mode.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub values: Vec<(String, u32)>,
    pub mode: Option<Mode>,
}

impl Params {
    pub fn new(values: &[(&str, u32)]) -> Self {
        Params {
            values: values.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            mode: None,
        }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = Some(mode);
        self
    }

    pub fn get(&self, name: &str) -> Option<u32> {
        self.values.iter().find(|(k, _)| k == name).map(|&(_, v)| v)
    }

    fn require(&self, id: TheoremId, name: &'static str) -> Result<u32, CatalogError> {
        self.get(name)
            .ok_or(CatalogError::MissingParam { id, name })
    }

    fn validate(&self, id: TheoremId, extra: &[&str]) -> Result<(), CatalogError> {
        for (k, _) in &self.values {
            if !id.params().contains(&k.as_str()) && !extra.contains(&k.as_str()) {
                return Err(CatalogError::UnknownParam {
                    id,
                    name: k.clone(),
                });
            }
        }
        for name in id.params() {
            self.require(id, name)?;
        }
        Ok(())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{k}={v}")?;
        }
        if let Some(mode) = self.mode {
            write!(f, ";mode={mode}")?;
        }
        Ok(())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(x: u64) -> Self {
        if x.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// What a printed claim predicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prediction {
    Exact(i64),
    AtLeast(i64),
    /// Every achievable count has this parity.
    Parity(Parity),
    /// The admissibility statement holds.
    Holds,
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prediction::Exact(x) => write!(f, "{x}"),
            Prediction::AtLeast(x) => write!(f, ">={x}"),
            Prediction::Parity(p) => write!(f, "{p}"),
            Prediction::Holds => f.write_str("true"),
        }
    }
}

/// What the solver found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Observation {
    Count(i64),
    /// Common parity of a spectrum; `None` when it mixes parities.
    Parity(Option<Parity>),
    Holds(bool),
}

impl fmt::Display for Observation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Observation::Count(x) => write!(f, "{x}"),
            Observation::Parity(Some(p)) => write!(f, "{p}"),
            Observation::Parity(None) => f.write_str("mixed"),
            Observation::Holds(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Confirmed,
    Refuted,
    NotApplicable,
}

impl Verdict {
    fn judge(prediction: Option<&Prediction>, observed: &Observation) -> Verdict {
        let Some(prediction) = prediction else {
            return Verdict::NotApplicable;
        };
        let agrees = match (prediction, observed) {
            (Prediction::Exact(x), Observation::Count(y)) => x == y,
            (Prediction::AtLeast(x), Observation::Count(y)) => y >= x,
            (Prediction::Parity(p), Observation::Parity(q)) => Some(*p) == *q,
            (Prediction::Holds, Observation::Holds(b)) => *b,
            _ => false,
        };
        if agrees {
            Verdict::Confirmed
        } else {
            Verdict::Refuted
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "CONFIRMED",
            Verdict::Refuted => "REFUTED",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        })
    }
}

/// One claim at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub id: TheoremId,
    pub params: Params,
    pub convention: Option<Convention>,
    /// `None` when the claim's hypotheses do not cover this point.
    pub paper_value: Option<Prediction>,
    /// `None` when there is no instance to solve.
    pub oracle_value: Option<Observation>,
    pub verdict: Verdict,
    pub witness: String,
    pub remarks: Option<&'static str>,
}

impl TheoremReport {
    fn new(
        id: TheoremId,
        params: &Params,
        convention: Option<Convention>,
        paper_value: Option<Prediction>,
        oracle_value: Option<Observation>,
        witness: String,
    ) -> Self {
        let verdict = match &oracle_value {
            Some(o) => Verdict::judge(paper_value.as_ref(), o),
            None => Verdict::NotApplicable,
        };
        TheoremReport {
            id,
            params: params.clone(),
            convention,
            paper_value,
            oracle_value,
            verdict,
            witness,
            remarks: remarks(id),
        }
    }
}

fn remarks(id: TheoremId) -> Option<&'static str> {
    match id {
        TheoremId::JoinCcSparing | TheoremId::JoinPcSparing => {
            Some("odd-cycle case is also printed as 1+m/2(n+1) in the derivation; the displayed 1+m/2(n+3) is used")
        }
        TheoremId::ComplementRregBound => {
            Some("the same expression is also stated with r = maximum degree; both hypotheses are reported")
        }
        TheoremId::SelfComplCount => Some("n-l-1 combines a vertex count with an edge count"),
        _ => None,
    }
}

fn ceil_half(x: i64) -> i64 {
    x.div_euclid(2) + x.rem_euclid(2)
}

/// `a/2 * b` for printed formulas whose case split makes the product even.
fn half_product(a: i64, b: i64) -> i64 {
    debug_assert_eq!((a * b) % 2, 0);
    a * b / 2
}

/// The printed value of a claim at `params`, or `None` where the claim's
/// hypotheses exclude the point.
///
/// SELF_COMPL_COUNT additionally needs `l`, the number of mono-indexed
/// edges in `G`.
pub fn paper_formula(id: TheoremId, params: &Params) -> Result<Option<Prediction>, CatalogError> {
    let extra: &[&str] = if id == TheoremId::SelfComplCount {
        &["l"]
    } else {
        &[]
    };
    params.validate(id, extra)?;
    let p = |name: &'static str| params.require(id, name).map(i64::from);
    use Prediction::*;
    Ok(match id {
        TheoremId::BipartiteZero => Some(Exact(0)),
        TheoremId::OddCycleOne => (p("n")? % 2 == 1).then_some(Exact(1)),
        TheoremId::CycleParity => Some(Parity(self::Parity::of(p("n")? as u64))),
        TheoremId::CompleteGraph => {
            let n = p("n")?;
            Some(Exact((n - 1) * (n - 2) / 2))
        }
        // phi of a cycle is its length mod 2; the shared part is a path or empty
        TheoremId::UnionAdditivity => Some(Exact(p("m")? % 2 + p("n")? % 2)),
        TheoremId::FanSparing | TheoremId::WheelSparing => Some(Exact(ceil_half(p("n")? - 1))),
        TheoremId::JoinPpSparing => {
            let (m, n) = (p("m")?, p("n")?);
            (m < n).then(|| {
                if n % 2 == 0 {
                    Exact(half_product(m, n + 2))
                } else {
                    Exact(half_product(m, n + 1))
                }
            })
        }
        TheoremId::JoinCcSparing => {
            let (m, n) = (p("m")?, p("n")?);
            (m < n).then(|| cycle_join_formula(m, n))
        }
        TheoremId::JoinPcSparing => {
            let (m, n) = (p("m")?, p("n")?);
            match m.cmp(&n) {
                std::cmp::Ordering::Less => Some(cycle_join_formula(m, n)),
                std::cmp::Ordering::Greater if m % 2 == 0 => Some(Exact(half_product(n, m + 2))),
                std::cmp::Ordering::Greater => Some(Exact(half_product(n, m + 1))),
                std::cmp::Ordering::Equal => None,
            }
        }
        TheoremId::JoinOneUniformLaw => Some(Holds),
        TheoremId::RingsumParity => Some(Exact(i64::from((p("m")? - p("n")?) % 2 != 0))),
        TheoremId::ComplementCycle => {
            let n = p("n")?;
            Some(Exact(n * (n - 3) / 2))
        }
        TheoremId::ComplementRregBound => {
            let (n, r) = (p("n")?, p("r")?);
            Some(AtLeast(((n - 1) * (n - 2) - 2 * r) / 2))
        }
        TheoremId::SelfComplRegular => {
            // self-complementary and r-regular forces 2r = n - 1
            let n = p("n")?;
            (n % 2 == 1).then(|| {
                let r = (n - 1) / 2;
                AtLeast(r * (2 * r - 1) / 2)
            })
        }
        TheoremId::SelfComplCount => Some(Exact(p("n")? - p("l")? - 1)),
    })
}

fn cycle_join_formula(m: i64, n: i64) -> Prediction {
    if n % 2 == 0 {
        Prediction::Exact(half_product(m, n + 2))
    } else {
        Prediction::Exact(1 + half_product(m, n + 3))
    }
}

fn checked_instance(g: Graph) -> Result<Graph, CatalogError> {
    if g.vertex_count() > ORACLE_LIMIT {
        return Err(CatalogError::InstanceTooLarge(g.vertex_count()));
    }
    Ok(g)
}

fn solve(g: &Graph) -> Result<SparingCertificate, CatalogError> {
    if g.vertex_count() > ORACLE_LIMIT {
        return Err(CatalogError::InstanceTooLarge(g.vertex_count()));
    }
    // sparing_exact already verifies the witness labeling
    Ok(sparing_exact(g)?)
}

fn count(x: usize) -> Observation {
    Observation::Count(x as i64)
}

fn expanded_witness(cert: &SparingCertificate) -> String {
    format!("expanded={}", cert.pattern)
}

fn join_disjoint(g1: &Graph, g2: &Graph) -> Result<Graph, CatalogError> {
    let offset = g1.max_id().map_or(0, |v| v.0 + 1);
    Ok(graph_join(g1, &g2.shifted(offset)?)?)
}

/// Two cycles `C_m` and `C_n` sharing the path `0-1-..-t` (vertex-disjoint
/// when `t = 0`).
pub fn overlapping_cycles(m: u32, n: u32, t: u32) -> Result<(Graph, Graph), CatalogError> {
    if m < 3 || n < 3 {
        return Err(CatalogError::InvalidParameter(format!(
            "cycles need length >= 3, got m={m} n={n}"
        )));
    }
    if t == 0 {
        return Ok((make_cycle(m)?, make_cycle(n)?.shifted(m)?));
    }
    if t >= m.min(n) {
        return Err(CatalogError::InvalidParameter(format!(
            "shared path t={t} must be shorter than both cycles"
        )));
    }
    if m == t + 1 && n == t + 1 {
        return Err(CatalogError::InvalidParameter(format!(
            "C_{m} and C_{n} sharing {t} edges coincide"
        )));
    }
    let closing = |len: u32, first: u32| -> Result<Graph, GraphError> {
        // t -> first -> first+1 -> ... -> 0 with len - t - 1 fresh vertices
        let fresh: Vec<u32> = (first..first + len - t - 1).collect();
        let mut g = make_path(t + 1)?;
        let mut prev = t;
        for &v in &fresh {
            g.add_edge(prev, v)?;
            prev = v;
        }
        g.add_edge(prev, 0)?;
        Ok(g)
    };
    let a = closing(m, t + 1)?;
    let b = closing(n, t + 1 + (m - t - 1))?;
    Ok((a, b))
}

/// Builds the instance for `id` at one point. `Ok(Err(reason))` marks a
/// grid point with no instance, e.g. a shared path longer than a cycle.
fn instance(
    id: TheoremId,
    params: &Params,
    convention: Option<Convention>,
) -> Result<Result<Graph, String>, CatalogError> {
    let overlap = |m, n, t| match overlapping_cycles(m, n, t) {
        Ok(pair) => Ok(Ok(pair)),
        Err(CatalogError::InvalidParameter(reason)) if m >= 3 && n >= 3 => Ok(Err(reason)),
        Err(e) => Err(e),
    };
    let p = |name: &'static str| params.require(id, name);
    let conv = || {
        convention.ok_or_else(|| {
            CatalogError::InvalidParameter(format!("{id} requires a path convention"))
        })
    };
    let g = match id {
        TheoremId::BipartiteZero => make_complete_bipartite(p("a")?, p("b")?)?,
        TheoremId::OddCycleOne | TheoremId::CycleParity | TheoremId::ComplementCycle => {
            make_cycle(p("n")?)?
        }
        TheoremId::CompleteGraph => make_complete(p("n")?)?,
        TheoremId::FanSparing => join_disjoint(
            &make_path(conv()?.path_vertices(p("n")?))?,
            &make_complete(1)?,
        )?,
        TheoremId::WheelSparing => join_disjoint(&make_cycle(p("n")?)?, &make_complete(1)?)?,
        TheoremId::JoinPpSparing => {
            let c = conv()?;
            join_disjoint(
                &make_path(c.path_vertices(p("m")?))?,
                &make_path(c.path_vertices(p("n")?))?,
            )?
        }
        TheoremId::JoinCcSparing | TheoremId::JoinOneUniformLaw => {
            join_disjoint(&make_cycle(p("m")?)?, &make_cycle(p("n")?)?)?
        }
        TheoremId::JoinPcSparing => join_disjoint(
            &make_path(conv()?.path_vertices(p("m")?))?,
            &make_cycle(p("n")?)?,
        )?,
        TheoremId::UnionAdditivity => {
            let (a, b) = match overlap(p("m")?, p("n")?, p("t")?)? {
                Ok(pair) => pair,
                Err(reason) => return Ok(Err(reason)),
            };
            graph_union(&a, &b)
        }
        TheoremId::RingsumParity => {
            let (a, b) = match overlap(p("m")?, p("n")?, p("t")?)? {
                Ok(pair) => pair,
                Err(reason) => return Ok(Err(reason)),
            };
            ring_sum(&a, &b)
        }
        TheoremId::ComplementRregBound => {
            let (n, r) = (p("n")?, p("r")?);
            let Ok(mut g) = make_circulant_regular(n, r) else {
                return Ok(Err(format!("no {r}-regular graph on {n} vertices")));
            };
            if params.mode == Some(Mode::MaxDegree) {
                let mut h = Graph::new();
                for v in g.vertices() {
                    h.add_vertex(v);
                }
                for e in g.edges().filter(|e| (e.lo().0, e.hi().0) != (0, 1)) {
                    h.add_edge(e.lo(), e.hi())?;
                }
                if r < 2 || !h.is_connected() || h.max_degree() != r as usize {
                    return Ok(Err(format!(
                        "no connected irregular instance with max degree {r}"
                    )));
                }
                g = h;
            }
            g
        }
        TheoremId::SelfComplRegular | TheoremId::SelfComplCount => match p("n")? {
            4 => make_path(4)?,
            5 => make_cycle(5)?,
            n => {
                return Err(CatalogError::InvalidParameter(format!(
                    "{id} is checked on P_4 (n=4) and C_5 (n=5) only, got n={n}"
                )))
            }
        },
    };
    checked_instance(g).map(Ok)
}

/// Checks one claim at one point.
pub fn check(
    id: TheoremId,
    params: &Params,
    convention: Option<Convention>,
) -> Result<TheoremReport, CatalogError> {
    params.validate(id, &[])?;
    let convention = if id.uses_convention() {
        Some(convention.unwrap_or(Convention::Vertices))
    } else {
        None
    };
    if id == TheoremId::ComplementRregBound && params.mode.is_none() {
        return check(id, &params.clone().with_mode(Mode::Regular), convention);
    }
    let g = match instance(id, params, convention)? {
        Ok(g) => g,
        Err(reason) => {
            let witness = format!("no instance: {reason}");
            return Ok(TheoremReport::new(
                id, params, convention, None, None, witness,
            ));
        }
    };
    let paper = paper_formula(id, params);
    let report = |paper: Option<Prediction>, observed: Observation, witness: String| {
        TheoremReport::new(id, params, convention, paper, Some(observed), witness)
    };

    Ok(match id {
        TheoremId::CycleParity => {
            let spectrum = mono_count_spectrum(&g)?;
            let cert = solve(&g)?;
            if spectrum.iter().next() != Some(&cert.value) {
                return Err(SparingError::Unsound(
                    "spectrum minimum disagrees with the solver".into(),
                )
                .into());
            }
            let parities: Vec<Parity> = spectrum.iter().map(|&x| Parity::of(x as u64)).collect();
            let common = parities
                .first()
                .copied()
                .filter(|p| parities.iter().all(|q| q == p));
            let listed: Vec<String> = spectrum.iter().map(usize::to_string).collect();
            report(
                paper?,
                Observation::Parity(common),
                format!("spectrum={{{}}}", listed.join(" ")),
            )
        }
        TheoremId::JoinOneUniformLaw => {
            let m = params.require(id, "m")?;
            let left = |v: crate::graph::VertexId| v.0 < m;
            let (holds, witness) = one_sided_patterns(&g, left)?;
            let cert = solve(&g)?;
            let sides: Vec<bool> = cert.pattern.expanded.iter().map(|&v| left(v)).collect();
            if sides.windows(2).any(|w| w[0] != w[1]) {
                return Err(
                    SparingError::Unsound("optimal pattern spans both sides".into()).into(),
                );
            }
            let witness = witness.unwrap_or_else(|| expanded_witness(&cert));
            report(paper?, Observation::Holds(holds), witness)
        }
        TheoremId::RingsumParity => {
            let (m, n, t) = (
                params.require(id, "m")?,
                params.require(id, "n")?,
                params.require(id, "t")?,
            );
            let len = (m + n - 2 * t) as usize;
            let is_cycle = g.is_connected()
                && g.vertex_count() == len
                && g.degrees().values().all(|&d| d == 2);
            if !is_cycle {
                return Err(CatalogError::InvalidParameter(format!(
                    "ring sum is not a {len}-cycle"
                )));
            }
            let cert = solve(&g)?;
            report(
                paper?,
                count(cert.value),
                format!("C{len} {}", expanded_witness(&cert)),
            )
        }
        TheoremId::ComplementCycle | TheoremId::ComplementRregBound => {
            let (opt, _) = concurrent_optimum(&g)?;
            report(
                paper?,
                count(opt.mono_in_complement),
                format!("expanded={} mono_in_g={}", opt.pattern, opt.mono_in_graph),
            )
        }
        TheoremId::SelfComplRegular => {
            let (opt, patterns) = concurrent_optimum(&g)?;
            let cg = complement(&g);
            let mut least = usize::MAX;
            for p in &patterns {
                least = least
                    .min(pattern_mono_count(&g, p)?)
                    .min(pattern_mono_count(&cg, p)?);
            }
            let regular = g.degrees().values().all(|&d| d == g.max_degree());
            let paper = if regular { paper? } else { None };
            report(paper, count(least), format!("expanded={}", opt.pattern))
        }
        TheoremId::SelfComplCount => {
            let (opt, patterns) = concurrent_optimum(&g)?;
            let cg = complement(&g);
            let n = g.vertex_count() as u32;
            let mut chosen = None;
            for p in patterns.iter().chain(std::iter::once(&opt.pattern)) {
                let l = pattern_mono_count(&g, p)?;
                let actual = pattern_mono_count(&cg, p)?;
                let predicted = paper_formula(id, &Params::new(&[("n", n), ("l", l as u32)]))?;
                let hit = Verdict::judge(predicted.as_ref(), &count(actual));
                chosen = Some((predicted, actual, p.clone(), l));
                if hit == Verdict::Refuted {
                    break;
                }
            }
            let (predicted, actual, p, l) = chosen.expect("at least the empty pattern");
            report(predicted, count(actual), format!("expanded={p} l={l}"))
        }
        _ => {
            let cert = solve(&g)?;
            report(paper?, count(cert.value), expanded_witness(&cert))
        }
    })
}

/// Concurrent optimum plus every concurrent pattern, with the cap and the
/// optimum's labeling verified.
fn concurrent_optimum(
    g: &Graph,
) -> Result<(crate::sparing::ConcurrentOptimum, Vec<Pattern>), CatalogError> {
    let patterns = concurrent_patterns(g)?;
    if g.vertex_count() >= 2 {
        if let Some(p) = patterns.iter().find(|p| p.len() > 1) {
            return Err(SparingError::Unsound(format!(
                "concurrent pattern {p} expands more than one vertex"
            ))
            .into());
        }
    }
    let opt = concurrent_min_mono(g);
    let f = realize_labeling(g, &opt.pattern)?;
    let report = is_concurrent_weak(g, &f)?;
    if !report.verdict() {
        return Err(SparingError::Unsound(format!("{:?}", report.violations)).into());
    }
    Ok((opt, patterns))
}

/// Enumerates every feasible pattern and reports whether all of them keep
/// their expanded vertices on one side; the witness is the first
/// counterexample.
fn one_sided_patterns(
    g: &Graph,
    left: impl Fn(crate::graph::VertexId) -> bool,
) -> Result<(bool, Option<String>), CatalogError> {
    let d = Dense::new(g, ORACLE_LIMIT)?;
    let left_mask: u64 = d
        .ids
        .iter()
        .enumerate()
        .filter(|(_, &v)| left(v))
        .fold(0, |m, (i, _)| m | 1 << i);
    let n = d.ids.len();
    for mask in 0u64..(1u64 << n) {
        if bits(mask).any(|i| d.adj[i] & mask != 0) {
            continue;
        }
        if mask & left_mask != 0 && mask & !left_mask != 0 {
            return Ok((false, Some(format!("expanded={}", d.pattern(mask)))));
        }
    }
    Ok((true, None))
}

/// Exhaustive version of the one-sided law for an arbitrary disjoint pair:
/// every feasible pattern of `g1 + g2` expands vertices of one operand only.
pub fn join_law_holds(g1: &Graph, g2: &Graph) -> Result<bool, CatalogError> {
    let g = checked_instance(graph_join(g1, g2)?)?;
    Ok(one_sided_patterns(&g, |v| g1.contains_vertex(v))?.0)
}

/// UNION_ADDITIVITY for an arbitrary pair, with every term computed by the
/// solver.
pub fn check_union_pair(g1: &Graph, g2: &Graph) -> Result<TheoremReport, CatalogError> {
    let union = graph_union(g1, g2);
    let meet = graph_intersection(g1, g2);
    let [a, b, c, u] = [g1, g2, &meet, &union].map(solve);
    let predicted = a?.value as i64 + b?.value as i64 - c?.value as i64;
    let u = u?;
    let params = Params::new(&[
        ("n1", g1.vertex_count() as u32),
        ("m1", g1.edge_count() as u32),
        ("n2", g2.vertex_count() as u32),
        ("m2", g2.edge_count() as u32),
        ("shared", meet.vertex_count() as u32),
    ]);
    Ok(TheoremReport::new(
        TheoremId::UnionAdditivity,
        &params,
        None,
        Some(Prediction::Exact(predicted)),
        Some(count(u.value)),
        expanded_witness(&u),
    ))
}

/// The RINGSUM_PARITY check at `(m, n, t)`.
pub fn ringsum_cycle_case(m: u32, n: u32, t: u32) -> Result<TheoremReport, CatalogError> {
    if t == 0 {
        return Err(CatalogError::InvalidParameter(
            "ring-sum case needs a shared path (t >= 1)".into(),
        ));
    }
    check(
        TheoremId::RingsumParity,
        &Params::new(&[("m", m), ("n", n), ("t", t)]),
        None,
    )
}

/// Certificate check used by tests and the acceptance suite.
pub fn certificate_is_sound(g: &Graph, cert: &SparingCertificate) -> bool {
    certify(g, cert.pattern.clone()).is_ok_and(|c| c == *cert)
}

/// A row of a sweep: a report, or the error that stopped that point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Row {
    Report(TheoremReport),
    Failed {
        id: TheoremId,
        params: Params,
        convention: Option<Convention>,
        error: String,
    },
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub confirmed: usize,
    pub refuted: usize,
    pub not_applicable: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReportTable {
    pub rows: Vec<Row>,
}

pub const CSV_HEADER: &str = "theorem,params,convention,paper_value,oracle_value,verdict,witness";

fn csv_field(s: &str) -> String {
    s.replace(',', ";").replace('\n', " ")
}

fn convention_cell(c: Option<Convention>) -> String {
    c.map_or_else(|| "-".to_string(), |c| c.to_string())
}

impl ReportTable {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for row in &self.rows {
            match row {
                Row::Report(r) => match r.verdict {
                    Verdict::Confirmed => s.confirmed += 1,
                    Verdict::Refuted => s.refuted += 1,
                    Verdict::NotApplicable => s.not_applicable += 1,
                },
                Row::Failed { .. } => s.failed += 1,
            }
        }
        s
    }

    pub fn reports(&self) -> impl Iterator<Item = &TheoremReport> {
        self.rows.iter().filter_map(|r| match r {
            Row::Report(r) => Some(r),
            Row::Failed { .. } => None,
        })
    }

    fn cells(row: &Row) -> [String; 8] {
        match row {
            Row::Report(r) => [
                r.id.to_string(),
                r.params.to_string(),
                convention_cell(r.convention),
                r.paper_value
                    .as_ref()
                    .map_or_else(|| "-".to_string(), ToString::to_string),
                r.oracle_value
                    .as_ref()
                    .map_or_else(|| "-".to_string(), ToString::to_string),
                r.verdict.to_string(),
                r.witness.clone(),
                r.remarks.unwrap_or("").to_string(),
            ],
            Row::Failed {
                id,
                params,
                convention,
                error,
            } => [
                id.to_string(),
                params.to_string(),
                convention_cell(*convention),
                "-".into(),
                "-".into(),
                "ERROR".into(),
                error.clone(),
                String::new(),
            ],
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            let cells = Self::cells(row);
            let line: Vec<String> = cells[..7].iter().map(|c| csv_field(c)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from(
            "| theorem | params | convention | paper | oracle | verdict | witness | remarks |\n\
             |---|---|---|---|---|---|---|---|\n",
        );
        for row in &self.rows {
            let cells = Self::cells(row).map(|c| c.replace('|', "\\|"));
            out.push_str(&format!("| {} |\n", cells.join(" | ")));
        }
        let s = self.summary();
        out.push_str(&format!(
            "\n{} confirmed, {} refuted, {} not applicable, {} failed\n",
            s.confirmed, s.refuted, s.not_applicable, s.failed
        ));
        out
    }
}

/// Checks `id` at every point of the grid. Rows are ordered by parameter
/// tuple (schema order), then convention, then mode; errors are recorded
/// per row.
pub fn sweep(
    id: TheoremId,
    ranges: &[(&str, RangeInclusive<u32>)],
    convention: ConventionChoice,
) -> Result<ReportTable, CatalogError> {
    for (name, _) in ranges {
        if !id.params().contains(name) {
            return Err(CatalogError::UnknownParam {
                id,
                name: name.to_string(),
            });
        }
    }
    let mut grid: Vec<Vec<(&str, u32)>> = vec![Vec::new()];
    for &name in id.params() {
        let range = ranges
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, r)| r.clone())
            .ok_or(CatalogError::MissingParam { id, name })?;
        grid = grid
            .into_iter()
            .flat_map(|prefix| {
                range.clone().map(move |v| {
                    let mut point = prefix.clone();
                    point.push((name, v));
                    point
                })
            })
            .collect();
    }

    let conventions: Vec<Option<Convention>> = if id.uses_convention() {
        convention.conventions().iter().copied().map(Some).collect()
    } else {
        vec![None]
    };
    let modes: Vec<Option<Mode>> = if id == TheoremId::ComplementRregBound {
        vec![Some(Mode::Regular), Some(Mode::MaxDegree)]
    } else {
        vec![None]
    };

    let mut jobs = Vec::new();
    for point in &grid {
        for &conv in &conventions {
            for &mode in &modes {
                let mut params = Params::new(point);
                params.mode = mode;
                jobs.push((params, conv));
            }
        }
    }

    let rows = jobs
        .into_par_iter()
        .map(|(params, conv)| match check(id, &params, conv) {
            Ok(r) => Row::Report(r),
            Err(e) => Row::Failed {
                id,
                params,
                convention: conv,
                error: e.to_string(),
            },
        })
        .collect();
    Ok(ReportTable { rows })
}
