//! Mixed graphs: vertices `1..=n`, each unordered pair carrying at most one
//! of an un-oriented edge, an arc `i -> j` or an arc `j -> i`.

mod cycles;
mod elementary;
mod enumerate;
mod format;

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cycles::{enumerate_cycles, Cycle};
pub use elementary::{
    enumerate_elementary_subgraphs, for_each_elementary_subgraph, Component, ElementarySubgraph,
};
pub use enumerate::{
    enumerate_mixed_graphs, graph_from_state_index, mixed_graph_count, sample_mixed_graphs, state_index,
    EnumerationOptions, PairState, DEFAULT_ENUMERATION_CAP,
};
pub use format::{parse_graph, serialize_graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeKind {
    Unoriented,
    /// Oriented from `tail` to `head`.
    Arc,
}

/// One edge of a mixed graph. Un-oriented edges are stored with `tail < head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub tail: usize,
    pub head: usize,
    pub kind: EdgeKind,
}

impl EdgeRecord {
    pub fn unoriented(u: usize, v: usize) -> Self {
        let (tail, head) = if u <= v { (u, v) } else { (v, u) };
        EdgeRecord {
            tail,
            head,
            kind: EdgeKind::Unoriented,
        }
    }

    pub fn arc(from: usize, to: usize) -> Self {
        EdgeRecord {
            tail: from,
            head: to,
            kind: EdgeKind::Arc,
        }
    }

    /// The unordered endpoint pair, smaller label first.
    pub fn pair(&self) -> (usize, usize) {
        (self.tail.min(self.head), self.tail.max(self.head))
    }

    pub fn is_arc(&self) -> bool {
        self.kind == EdgeKind::Arc
    }

    pub fn touches(&self, v: usize) -> bool {
        self.tail == v || self.head == v
    }
}

impl fmt::Display for EdgeRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            EdgeKind::Unoriented => write!(f, "{} -- {}", self.tail, self.head),
            EdgeKind::Arc => write!(f, "{} -> {}", self.tail, self.head),
        }
    }
}

/// How vertex `i` relates to vertex `j`, read from `i`'s side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Unoriented,
    /// `i -> j`
    Out,
    /// `j -> i`
    In,
}

#[derive(Clone)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<EdgeRecord>,
    // slot[(i-1)*n + (j-1)] = index into `edges`
    slot: Vec<Option<u32>>,
}

impl MixedGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooFewVertices {
                required: 1,
                actual: 0,
            });
        }
        Ok(MixedGraph {
            n,
            edges: Vec::new(),
            slot: vec![None; n * n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = EdgeRecord>,
    {
        let mut g = MixedGraph::new(n)?;
        for e in edges {
            g.add_edge(e)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, e: EdgeRecord) -> Result<()> {
        for v in [e.tail, e.head] {
            if v == 0 || v > self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        if e.tail == e.head {
            return Err(Error::SelfLoop(e.tail));
        }
        let e = match e.kind {
            EdgeKind::Unoriented => EdgeRecord::unoriented(e.tail, e.head),
            EdgeKind::Arc => e,
        };
        let (a, b) = e.pair();
        if self.slot[self.idx(a, b)].is_some() {
            return Err(Error::DuplicatePair(a, b));
        }
        let id = Some(self.edges.len() as u32);
        let (ab, ba) = (self.idx(a, b), self.idx(b, a));
        self.slot[ab] = id;
        self.slot[ba] = id;
        self.edges.push(e);
        Ok(())
    }

    pub fn add_unoriented(&mut self, u: usize, v: usize) -> Result<()> {
        self.add_edge(EdgeRecord::unoriented(u, v))
    }

    pub fn add_arc(&mut self, from: usize, to: usize) -> Result<()> {
        self.add_edge(EdgeRecord::arc(from, to))
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.n + (j - 1)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges (un-oriented plus arcs).
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[EdgeRecord] {
        &self.edges
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<&EdgeRecord> {
        if u == 0 || v == 0 || u > self.n || v > self.n {
            return None;
        }
        self.slot[self.idx(u, v)].map(|k| &self.edges[k as usize])
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u == 0 || v == 0 || u > self.n || v > self.n {
            return None;
        }
        self.slot[self.idx(u, v)].map(|k| k as usize)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn relation(&self, i: usize, j: usize) -> Option<Relation> {
        self.edge_between(i, j).map(|e| match e.kind {
            EdgeKind::Unoriented => Relation::Unoriented,
            EdgeKind::Arc if e.tail == i => Relation::Out,
            EdgeKind::Arc => Relation::In,
        })
    }

    /// Neighbours of `v` in the underlying graph, ascending.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = (v - 1) * self.n;
        (1..=self.n).filter(move |&u| self.slot[row + u - 1].is_some())
    }

    pub fn degrees(&self) -> DegreeVector {
        let mut d = vec![0usize; self.n];
        for e in &self.edges {
            d[e.tail - 1] += 1;
            d[e.head - 1] += 1;
        }
        DegreeVector(d)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().0.into_iter().min().unwrap_or(0)
    }

    /// First isolated vertex, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.degrees()
            .0
            .iter()
            .position(|&d| d == 0)
            .map(|i| i + 1)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![1usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u) {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// A proper 2-colouring of the underlying graph (`colour[v-1]`), or `None`
    /// when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut colour: Vec<Option<u8>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 1..=self.n {
            if colour[s - 1].is_some() {
                continue;
            }
            colour[s - 1] = Some(0);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u - 1].unwrap();
                for w in self.neighbors(u) {
                    match colour[w - 1] {
                        None => {
                            colour[w - 1] = Some(1 - cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True when the underlying graph has no cycle.
    pub fn is_forest(&self) -> bool {
        // a forest has exactly n - (#components) edges
        let mut comp = 0;
        let mut seen = vec![false; self.n];
        for s in 1..=self.n {
            if seen[s - 1] {
                continue;
            }
            comp += 1;
            seen[s - 1] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        stack.push(w);
                    }
                }
            }
        }
        self.edges.len() + comp == self.n
    }

    /// The graph with the edge on `{u, v}` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<MixedGraph> {
        let k = self.edge_index(u, v).ok_or(Error::MissingEdge(u, v))?;
        MixedGraph::from_edges(
            self.n,
            self.edges
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, e)| *e),
        )
    }

    /// The underlying graph with every arc replaced by an un-oriented edge.
    pub fn underlying(&self) -> MixedGraph {
        MixedGraph::from_edges(
            self.n,
            self.edges.iter().map(|e| EdgeRecord::unoriented(e.tail, e.head)),
        )
        .expect("underlying graph of a valid mixed graph is valid")
    }

    /// Relabel vertex `v` as `perm[v-1]`. `perm` must be a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<MixedGraph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                actual: perm.len(),
            });
        }
        MixedGraph::from_edges(
            self.n,
            self.edges.iter().map(|e| EdgeRecord {
                tail: perm[e.tail - 1],
                head: perm[e.head - 1],
                kind: e.kind,
            }),
        )
    }

    /// Edges sorted by endpoint pair; the order-independent identity of the graph.
    pub fn canonical_edges(&self) -> Vec<EdgeRecord> {
        let mut es = self.edges.clone();
        es.sort_by_key(|e| (e.pair(), e.tail, e.kind));
        es
    }

    /// General Randić index `sum over edges {u,v} of (d_u d_v)^alpha` of the
    /// underlying graph. Exact for integer `alpha`.
    pub fn general_randic_index(&self, alpha: Rational64) -> Result<RandicIndexValue> {
        if self.edges.is_empty() {
            return Err(Error::EmptyEdgeSet);
        }
        let d = self.degrees();
        let value = if alpha.is_integer() {
            let p = alpha.to_integer();
            let mut acc = BigRational::zero();
            for e in &self.edges {
                let prod = BigInt::from((d.get(e.tail) * d.get(e.head)) as u64);
                let base = BigRational::from_integer(prod);
                let term = if p >= 0 {
                    num_traits::pow(base, p as usize)
                } else {
                    BigRational::one() / num_traits::pow(base, p.unsigned_abs() as usize)
                };
                acc += term;
            }
            RandicValue::Exact(acc)
        } else {
            let a = alpha.to_f64().unwrap_or(f64::NAN);
            RandicValue::Real(
                self.edges
                    .iter()
                    .map(|e| ((d.get(e.tail) * d.get(e.head)) as f64).powf(a))
                    .sum(),
            )
        };
        Ok(RandicIndexValue { alpha, value })
    }

    /// `R^(-1)` of the underlying graph as an exact rational.
    pub fn randic_inverse_index(&self) -> Result<BigRational> {
        match self.general_randic_index(Rational64::from_integer(-1))?.value {
            RandicValue::Exact(r) => Ok(r),
            RandicValue::Real(_) => unreachable!("integer exponent yields an exact value"),
        }
    }
}

impl PartialEq for MixedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.canonical_edges() == other.canonical_edges()
    }
}

impl Eq for MixedGraph {}

impl fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedGraph(n={}, [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

/// Vertex degrees of the underlying graph, indexed by label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVector(Vec<usize>);

impl DegreeVector {
    /// Degree of vertex `v` (1-based).
    pub fn get(&self, v: usize) -> usize {
        self.0[v - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RandicValue {
    Exact(BigRational),
    Real(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RandicIndexValue {
    pub alpha: Rational64,
    pub value: RandicValue,
}

impl RandicIndexValue {
    pub fn to_f64(&self) -> f64 {
        match &self.value {
            RandicValue::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            RandicValue::Real(x) => *x,
        }
    }

    pub fn is_positive(&self) -> bool {
        match &self.value {
            RandicValue::Exact(r) => r.is_positive(),
            RandicValue::Real(x) => *x > 0.0,
        }
    }
}
