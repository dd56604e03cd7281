mod common;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use randic_core::graph::{enumerate_cycles, EdgeRecord};
use randic_core::matrix::{build_hermitian_adjacency, build_randic, HermitianMatrix};
use randic_core::spectral::{
    char_poly_combinatorial, char_poly_numeric, determinant_combinatorial, eigen_decompose,
    CharPoly,
};
use randic_core::MixedGraph;

/// Eigenvalues through the real symmetric embedding `[[Re, -Im], [Im, Re]]`,
/// whose spectrum is that of the Hermitian matrix with every value doubled.
fn oracle_eigenvalues(h: &HermitianMatrix) -> Vec<f64> {
    let n = h.dim();
    let m = DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let z = h[(i % n, j % n)];
        match (i < n, j < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    });
    let mut e: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    e.sort_by(f64::total_cmp);
    e.into_iter().step_by(2).collect()
}

#[test]
fn eigenvalues_match_nalgebra_oracle() {
    let pop = common::standard_population();
    pop.par_iter().for_each(|g| {
        let r = build_randic(g).unwrap();
        let ours = eigen_decompose(&r).unwrap();
        let theirs = oracle_eigenvalues(&r);
        for (a, b) in ours.eigenvalues.iter().zip(&theirs) {
            assert!((a - b).abs() <= 1e-10, "{g:?}: {:?} vs {theirs:?}", ours.eigenvalues);
        }
    });
}

#[test]
fn two_routes_agree() {
    let pop = common::standard_population();
    pop.par_iter().for_each(|g| {
        let exact = char_poly_combinatorial(g).unwrap();
        let numeric = char_poly_numeric(&build_randic(g).unwrap()).unwrap();
        assert!(exact.max_discrepancy(&numeric) <= 1e-8, "{g:?}");
        let c = exact.exact().unwrap();
        assert!(c[1].is_zero());
        let det = determinant_combinatorial(g).unwrap();
        let n = g.order();
        let an = if n % 2 == 0 { c[n].clone() } else { -c[n].clone() };
        assert_eq!(det, an);
        let prod = eigen_decompose(&build_randic(g).unwrap()).unwrap().product();
        assert!((det.to_f64().unwrap() - prod).abs() <= 1e-9);
    });
}

#[test]
fn second_coefficient_is_minus_randic_inverse() {
    // sum λ^2 = a_1^2 - 2 a_2 = -2 a_2 = 2 R^(-1), exactly on the rational side
    for g in common::connected(4).into_iter().chain(common::sampled_connected(5, 500)) {
        let c = char_poly_combinatorial(&g).unwrap();
        let a2 = c.exact().unwrap()[2].clone();
        assert_eq!(-a2, g.randic_inverse_index().unwrap());
    }
}

fn q(p: i64, r: i64) -> BigRational {
    BigRational::new(p.into(), r.into())
}

#[test]
fn determinant_examples_are_exact() {
    let cases = [
        ("vertices 2\n1 -- 2", q(-1, 1)),
        ("vertices 3\n1 -- 2\n2 -- 3\n1 -- 3", q(1, 4)),
        ("vertices 3\n1 -> 2\n2 -> 3\n3 -> 1", q(-1, 4)),
        ("vertices 3\n1 -> 2\n2 -- 3\n1 -- 3", q(1, 8)),
    ];
    for (text, det) in cases {
        assert_eq!(determinant_combinatorial(&common::graph(text)).unwrap(), det);
    }
}

/// Coefficients of a forest from its matchings alone:
/// `a_{2j} = (-1)^j Σ_{j-matchings} Π 1/d`, odd coefficients vanish.
fn forest_coefficients(g: &MixedGraph) -> Vec<BigRational> {
    let n = g.order();
    let d = g.degrees();
    let edges = g.edges();
    let mut a = vec![BigRational::zero(); n + 1];
    for mask in 0u32..(1 << edges.len()) {
        let chosen: Vec<&EdgeRecord> = (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| &edges[i]).collect();
        let mut used = vec![false; n + 1];
        let mut ok = true;
        let mut w = BigRational::from_integer(1.into());
        for e in &chosen {
            for v in [e.tail, e.head] {
                ok &= !used[v];
                used[v] = true;
                w /= BigInt::from(d.get(v));
            }
        }
        if ok {
            let j = chosen.len();
            a[2 * j] += if j.is_multiple_of(2) { w } else { -w };
        }
    }
    a
}

/// Every orientation state (un-oriented, forward, backward) of each edge.
fn all_orientations(n: usize, pairs: &[(usize, usize)]) -> Vec<MixedGraph> {
    let total = 3usize.pow(pairs.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut g = MixedGraph::new(n).unwrap();
            for &(u, v) in pairs {
                let e = match code % 3 {
                    0 => EdgeRecord::unoriented(u, v),
                    1 => EdgeRecord::arc(u, v),
                    _ => EdgeRecord::arc(v, u),
                };
                code /= 3;
                g.add_edge(e).unwrap();
            }
            g
        })
        .collect()
}

/// Edge list of the labeled tree with the given Prüfer sequence.
fn prufer_tree(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n + 1];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (1..=n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

#[test]
fn trees_only_see_matchings() {
    for n in 2usize..=6 {
        let codes = n.pow(n as u32 - 2);
        let trees: Vec<MixedGraph> = (0..codes)
            .flat_map(|mut c| {
                let seq: Vec<usize> = (0..n - 2)
                    .map(|_| {
                        let x = c % n + 1;
                        c /= n;
                        x
                    })
                    .collect();
                all_orientations(n, &prufer_tree(n, &seq))
            })
            .collect();
        trees.par_iter().for_each(|g| {
            assert!(g.is_forest() && g.is_connected());
            let c = char_poly_combinatorial(g).unwrap();
            assert_eq!(c.exact().unwrap(), forest_coefficients(g).as_slice(), "{g:?}");
        });
    }
}

fn permutations(items: Vec<usize>) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.clone();
        let x = rest.remove(i);
        for mut p in permutations(rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

#[test]
fn cycles_scale_by_powers_of_two() {
    // for a 2-regular graph R = H/2, so a_k(R) = a_k(H) / 2^k
    for n in 3..=6 {
        for tail in permutations((2..=n).collect()) {
            // each undirected cycle once: fix 1 first and 2nd < last
            if tail[0] > tail[n - 2] {
                continue;
            }
            let mut order = vec![1];
            order.extend(tail);
            let pairs: Vec<(usize, usize)> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
            for g in all_orientations(n, &pairs) {
                let exact = char_poly_combinatorial(&g).unwrap().to_f64();
                let h = char_poly_numeric(&build_hermitian_adjacency(&g)).unwrap().to_f64();
                for k in 0..=n {
                    assert!((exact[k] - h[k] / 2f64.powi(k as i32)).abs() <= 1e-9, "{g:?}");
                }
            }
        }
    }
}

#[test]
fn orienting_one_edge_of_a_positive_even_cycle() {
    // 2^{l_p} = 2 for the positive spanning cycle; a single arc makes it
    // semi-positive (ω + ω̄ = 1) and removes exactly one Q from that term
    for len in [4usize, 6] {
        let mut plain = MixedGraph::new(len).unwrap();
        let mut arc = MixedGraph::new(len).unwrap();
        for v in 1..=len {
            let w = v % len + 1;
            plain.add_unoriented(v, w).unwrap();
            if v == 1 {
                arc.add_arc(v, w).unwrap();
            } else {
                arc.add_unoriented(v, w).unwrap();
            }
        }
        assert_eq!(enumerate_cycles(&arc).len(), 1);
        let q = BigRational::new(1.into(), BigInt::from(2u32.pow(len as u32)));
        let sign = if (len - 1) % 2 == 0 { q.clone() } else { -q.clone() };
        let d0 = determinant_combinatorial(&plain).unwrap();
        let d1 = determinant_combinatorial(&arc).unwrap();
        assert_eq!(d0 - d1.clone(), sign);
        let numeric = eigen_decompose(&build_randic(&arc).unwrap()).unwrap().product();
        assert!((d1.to_f64().unwrap() - numeric).abs() <= 1e-12);
        let both = char_poly_combinatorial(&arc)
            .unwrap()
            .max_discrepancy(&char_poly_numeric(&build_randic(&arc).unwrap()).unwrap());
        assert!(both <= 1e-10);
    }
}

#[test]
fn numeric_expansion_is_monic() {
    let g = common::graph("vertices 4\n1 -> 2\n2 -> 3\n3 -- 4\n4 -> 1\n1 -- 3");
    let CharPoly::Numeric(c) = char_poly_numeric(&build_randic(&g).unwrap()).unwrap() else {
        panic!("numeric route returns doubles");
    };
    assert_eq!(c[0], 1.0);
    assert!(c[1].abs() <= 1e-9);
}
