//! Elementary subgraphs: vertex-disjoint unions of single edges and cycles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{enumerate_cycles, Cycle, EdgeRecord, MixedGraph};
use crate::gain::{gain_view, CycleGainClass};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Component {
    Edge(EdgeRecord),
    Cycle { cycle: Cycle, class: CycleGainClass },
}

impl Component {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Component::Edge(e) => vec![e.tail, e.head],
            Component::Cycle { cycle, .. } => cycle.vertices().to_vec(),
        }
    }
}

/// An elementary subgraph of a host graph together with the counters that
/// enter the coefficient formula. `q` is `prod 1/d_v` over covered vertices,
/// with degrees taken in the host graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ElementarySubgraph {
    pub components: Vec<Component>,
    /// number of covered vertices
    pub order: usize,
    /// number of components
    pub c: usize,
    /// `order - c`
    pub r: usize,
    /// cycles of length >= 3
    pub s: usize,
    pub l_p: usize,
    pub l_n: usize,
    pub l_sp: usize,
    pub l_sn: usize,
    pub q: BigRational,
}

impl ElementarySubgraph {
    fn new(components: Vec<Component>, degrees: &[usize]) -> Self {
        let mut order = 0;
        let mut denom = BigInt::one();
        let (mut s, mut l_p, mut l_n, mut l_sp, mut l_sn) = (0, 0, 0, 0, 0);
        for comp in &components {
            let vs = comp.vertices();
            order += vs.len();
            for v in vs {
                denom *= degrees[v - 1];
            }
            if let Component::Cycle { class, .. } = comp {
                s += 1;
                match class {
                    CycleGainClass::Positive => l_p += 1,
                    CycleGainClass::Negative => l_n += 1,
                    CycleGainClass::SemiPositive => l_sp += 1,
                    CycleGainClass::SemiNegative => l_sn += 1,
                }
            }
        }
        let c = components.len();
        ElementarySubgraph {
            components,
            order,
            c,
            r: order - c,
            s,
            l_p,
            l_n,
            l_sp,
            l_sn,
            q: BigRational::new(BigInt::one(), denom),
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.components.iter().flat_map(|c| c.vertices()).collect();
        vs.sort_unstable();
        vs
    }
}

struct Search<'a> {
    g: &'a MixedGraph,
    degrees: Vec<usize>,
    // cycles indexed by their smallest vertex
    cycles_from: Vec<Vec<(Cycle, CycleGainClass)>>,
    used: Vec<bool>,
    stack: Vec<Component>,
    covered: usize,
}

impl Search<'_> {
    fn run<F: FnMut(ElementarySubgraph)>(&mut self, v: usize, target: Option<usize>, visit: &mut F) {
        let n = self.g.order();
        if let Some(k) = target {
            if self.covered > k || self.covered + (n + 1 - v) < k {
                return;
            }
        }
        if v > n {
            if target.is_none_or(|k| k == self.covered) {
                visit(ElementarySubgraph::new(self.stack.clone(), &self.degrees));
            }
            return;
        }
        if self.used[v] {
            self.run(v + 1, target, visit);
            return;
        }

        // v left uncovered
        self.run(v + 1, target, visit);

        // v covered by a single edge to a later vertex
        let later: Vec<usize> = self.g.neighbors(v).filter(|&u| u > v && !self.used[u]).collect();
        for u in later {
            let e = *self.g.edge_between(v, u).unwrap();
            self.used[v] = true;
            self.used[u] = true;
            self.covered += 2;
            self.stack.push(Component::Edge(e));
            self.run(v + 1, target, visit);
            self.stack.pop();
            self.covered -= 2;
            self.used[v] = false;
            self.used[u] = false;
        }

        // v covered by a cycle whose smallest vertex is v
        for idx in 0..self.cycles_from[v].len() {
            let (cycle, class) = self.cycles_from[v][idx].clone();
            if cycle.vertices().iter().any(|&w| self.used[w]) {
                continue;
            }
            for &w in cycle.vertices() {
                self.used[w] = true;
            }
            self.covered += cycle.len();
            let len = cycle.len();
            self.stack.push(Component::Cycle { cycle, class });
            self.run(v + 1, target, visit);
            let Some(Component::Cycle { cycle, .. }) = self.stack.pop() else {
                unreachable!()
            };
            self.covered -= len;
            for &w in cycle.vertices() {
                self.used[w] = false;
            }
        }
    }
}

fn search(g: &MixedGraph) -> Search<'_> {
    let view = gain_view(g);
    let mut cycles_from = vec![Vec::new(); g.order() + 1];
    for cycle in enumerate_cycles(g) {
        let class = view
            .classify_cycle(cycle.vertices())
            .expect("enumerated cycles are cycles of the graph");
        cycles_from[cycle.vertices()[0]].push((cycle, class));
    }
    Search {
        g,
        degrees: g.degrees().as_slice().to_vec(),
        cycles_from,
        used: vec![false; g.order() + 1],
        stack: Vec::new(),
        covered: 0,
    }
}

/// Visit every elementary subgraph of `g` (every order, including the empty
/// one) exactly once.
pub fn for_each_elementary_subgraph<F: FnMut(ElementarySubgraph)>(g: &MixedGraph, mut visit: F) {
    search(g).run(1, None, &mut visit);
}

/// All elementary subgraphs of `g` covering exactly `k` vertices. `k = n`
/// gives the spanning ones; `k = 0` gives the single empty subgraph.
pub fn enumerate_elementary_subgraphs(g: &MixedGraph, k: usize) -> Vec<ElementarySubgraph> {
    let mut out = Vec::new();
    if k > g.order() {
        return out;
    }
    search(g).run(1, Some(k), &mut |x| out.push(x));
    out
}
