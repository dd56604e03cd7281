#![allow(dead_code)]

use randic_core::graph::{enumerate_mixed_graphs, sample_mixed_graphs, EnumerationOptions};
use randic_core::{parse_graph, MixedGraph};

pub const SAMPLE_SEED: u64 = 20240601;

pub fn graph(text: &str) -> MixedGraph {
    parse_graph(&format!("mixedgraph v1\n{text}")).unwrap()
}

/// Every labeled mixed graph on `n` vertices.
pub fn all(n: usize) -> Vec<MixedGraph> {
    enumerate_mixed_graphs(n, EnumerationOptions::default()).unwrap().collect()
}

/// Connected mixed graphs on `n` vertices.
pub fn connected(n: usize) -> Vec<MixedGraph> {
    enumerate_mixed_graphs(n, EnumerationOptions::connected()).unwrap().collect()
}

/// Graphs without isolated vertices.
pub fn no_isolated(n: usize) -> Vec<MixedGraph> {
    let opts = EnumerationOptions {
        min_degree: 1,
        ..Default::default()
    };
    enumerate_mixed_graphs(n, opts).unwrap().collect()
}

pub fn sampled_connected(n: usize, count: usize) -> Vec<MixedGraph> {
    sample_mixed_graphs(n, EnumerationOptions::connected(), count, SAMPLE_SEED + n as u64).unwrap()
}

/// Connected graphs: exhaustive for `n <= 4`, 500 seeded samples for 5 and 6.
pub fn standard_population() -> Vec<MixedGraph> {
    let mut out = Vec::new();
    for n in 2..=4 {
        out.extend(connected(n));
    }
    for n in 5..=6 {
        out.extend(sampled_connected(n, 500));
    }
    out
}
