//! Exhaustive and sampled enumeration of labeled mixed graphs.
//!
//! A mixed graph on `n` vertices is an assignment of one of four states to
//! each of the `C(n,2)` vertex pairs. Pairs are ordered lexicographically
//! `(1,2), (1,3), …, (n-1,n)` and the state vector is read as a base-4
//! number with the first pair as the least significant digit; enumeration
//! order is ascending state index.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{EdgeRecord, EdgeKind, MixedGraph};
use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_CAP: usize = 6;
/// State indices must fit in a `u64`.
const MAX_INDEXABLE_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairState {
    Absent,
    Unoriented,
    /// arc from the smaller to the larger label
    Forward,
    /// arc from the larger to the smaller label
    Backward,
}

impl PairState {
    fn from_digit(d: u64) -> PairState {
        match d {
            0 => PairState::Absent,
            1 => PairState::Unoriented,
            2 => PairState::Forward,
            _ => PairState::Backward,
        }
    }

    fn digit(self) -> u64 {
        match self {
            PairState::Absent => 0,
            PairState::Unoriented => 1,
            PairState::Forward => 2,
            PairState::Backward => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub connected_only: bool,
    pub min_degree: usize,
    /// largest `n` accepted for exhaustive enumeration
    pub cap: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            connected_only: false,
            min_degree: 0,
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl EnumerationOptions {
    pub fn connected() -> Self {
        EnumerationOptions {
            connected_only: true,
            ..Default::default()
        }
    }

    pub fn accepts(&self, g: &MixedGraph) -> bool {
        (!self.connected_only || g.is_connected()) && g.min_degree() >= self.min_degree
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// `4^C(n,2)`: the number of labeled mixed graphs on `n` vertices.
pub fn mixed_graph_count(n: usize) -> Result<u64> {
    if n == 0 || n > MAX_INDEXABLE_ORDER {
        return Err(Error::CapExceeded {
            what: "indexable graph order",
            n,
            cap: MAX_INDEXABLE_ORDER,
        });
    }
    let m = (n * (n - 1) / 2) as u32;
    Ok(4u64.checked_pow(m).unwrap_or(u64::MAX))
}

pub fn graph_from_state_index(n: usize, index: u64) -> Result<MixedGraph> {
    mixed_graph_count(n)?;
    let mut g = MixedGraph::new(n)?;
    let mut rest = index;
    for (i, j) in pairs(n) {
        match PairState::from_digit(rest % 4) {
            PairState::Absent => {}
            PairState::Unoriented => g.add_edge(EdgeRecord::unoriented(i, j))?,
            PairState::Forward => g.add_edge(EdgeRecord::arc(i, j))?,
            PairState::Backward => g.add_edge(EdgeRecord::arc(j, i))?,
        }
        rest /= 4;
    }
    Ok(g)
}

/// Inverse of [`graph_from_state_index`].
pub fn state_index(g: &MixedGraph) -> u64 {
    let mut index = 0u64;
    let mut place = 1u64;
    for (i, j) in pairs(g.order()) {
        let state = match g.edge_between(i, j) {
            None => PairState::Absent,
            Some(e) if e.kind == EdgeKind::Unoriented => PairState::Unoriented,
            Some(e) if e.tail == i => PairState::Forward,
            Some(_) => PairState::Backward,
        };
        index += state.digit() * place;
        place = place.wrapping_mul(4);
    }
    index
}

/// Every labeled mixed graph on `n` vertices accepted by `opts`, in
/// ascending state-index order.
pub fn enumerate_mixed_graphs(
    n: usize,
    opts: EnumerationOptions,
) -> Result<impl Iterator<Item = MixedGraph>> {
    if n > opts.cap {
        return Err(Error::CapExceeded {
            what: "enumeration",
            n,
            cap: opts.cap,
        });
    }
    let total = mixed_graph_count(n)?;
    Ok((0..total).filter_map(move |idx| {
        let g = graph_from_state_index(n, idx).expect("index below total");
        opts.accepts(&g).then_some(g)
    }))
}

/// Up to `count` distinct graphs accepted by `opts`, drawn uniformly over
/// state vectors with a seeded generator and returned in ascending
/// state-index order. The enumeration cap does not apply.
pub fn sample_mixed_graphs(
    n: usize,
    opts: EnumerationOptions,
    count: usize,
    seed: u64,
) -> Result<Vec<MixedGraph>> {
    let total = mixed_graph_count(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = BTreeSet::new();
    let mut rejected = BTreeSet::new();
    // generous attempt budget; small populations are exhausted long before it
    let budget = count.saturating_mul(1000).max(100_000);
    for _ in 0..budget {
        if chosen.len() == count || (chosen.len() + rejected.len()) as u64 == total {
            break;
        }
        let idx = rng.gen_range(0..total);
        if chosen.contains(&idx) || rejected.contains(&idx) {
            continue;
        }
        if opts.accepts(&graph_from_state_index(n, idx)?) {
            chosen.insert(idx);
        } else {
            rejected.insert(idx);
        }
    }
    chosen
        .into_iter()
        .map(|idx| graph_from_state_index(n, idx))
        .collect()
}
