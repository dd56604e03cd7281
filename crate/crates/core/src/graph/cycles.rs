use std::fmt;

use super::MixedGraph;

/// A simple cycle of the underlying graph in canonical form: smallest vertex
/// first, and the smaller of its two cycle neighbours second.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    /// Canonicalise a vertex sequence (no repeated closing vertex). Does not
    /// check adjacency.
    pub fn canonical(seq: &[usize]) -> Cycle {
        let len = seq.len();
        if len == 0 {
            return Cycle(Vec::new());
        }
        let start = (0..len).min_by_key(|&i| seq[i]).unwrap();
        let fwd = seq[(start + 1) % len];
        let back = seq[(start + len - 1) % len];
        let out = if fwd <= back {
            (0..len).map(|k| seq[(start + k) % len]).collect()
        } else {
            (0..len).map(|k| seq[(start + len - k) % len]).collect()
        };
        Cycle(out)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Consecutive vertex pairs including the closing pair.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let len = self.0.len();
        (0..len).map(move |k| (self.0[k], self.0[(k + 1) % len]))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// All simple cycles (length >= 3) of the underlying graph, each once, in
/// canonical form, sorted by (smallest vertex, then DFS order).
pub fn enumerate_cycles(g: &MixedGraph) -> Vec<Cycle> {
    let n = g.order();
    let mut out = Vec::new();
    let mut on_path = vec![false; n + 1];
    let mut path = Vec::with_capacity(n);
    for s in 1..=n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        extend(g, s, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
    }
    out
}

fn extend(
    g: &MixedGraph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().unwrap();
    for w in g.neighbors(last) {
        if w == start {
            // each cycle is seen twice; keep the direction with the smaller second vertex
            if path.len() >= 3 && path[1] < last {
                out.push(Cycle(path.clone()));
            }
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend(g, start, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeRecord;

    fn complete(n: usize) -> MixedGraph {
        let mut g = MixedGraph::new(n).unwrap();
        for i in 1..=n {
            for j in i + 1..=n {
                g.add_unoriented(i, j).unwrap();
            }
        }
        g
    }

    #[test]
    fn canonical_form() {
        assert_eq!(Cycle::canonical(&[3, 1, 2]).vertices(), &[1, 2, 3]);
        assert_eq!(Cycle::canonical(&[2, 1, 3]).vertices(), &[1, 2, 3]);
        assert_eq!(Cycle::canonical(&[4, 3, 2, 1]).vertices(), &[1, 2, 3, 4]);
        assert_eq!(Cycle::canonical(&[1, 4, 2, 3]).vertices(), &[1, 3, 2, 4]);
    }

    #[test]
    fn triangle_tree_and_k4() {
        let c3 = complete(3);
        let cs = enumerate_cycles(&c3);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].vertices(), &[1, 2, 3]);

        let tree = MixedGraph::from_edges(
            4,
            [EdgeRecord::unoriented(1, 2), EdgeRecord::arc(2, 3), EdgeRecord::arc(4, 2)],
        )
        .unwrap();
        assert!(enumerate_cycles(&tree).is_empty());

        let k4 = enumerate_cycles(&complete(4));
        assert_eq!(k4.len(), 7);
        assert_eq!(k4.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(k4.iter().filter(|c| c.len() == 4).count(), 3);
        for c in &k4 {
            assert_eq!(Cycle::canonical(c.vertices()), *c);
        }
    }

    #[test]
    fn complete_graph_cycle_counts() {
        // number of simple cycles of K_n: sum_{k>=3} C(n,k) (k-1)!/2
        let expected = |n: u64| -> u64 {
            let mut total = 0;
            for k in 3..=n {
                let choose = (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
                let fact: u64 = (1..k).product();
                total += choose * fact / 2;
            }
            total
        };
        for n in 3..=6 {
            assert_eq!(enumerate_cycles(&complete(n)).len() as u64, expected(n as u64));
        }
    }
}
