mod common;

use proptest::prelude::*;

use randic_core::bounds::energy_bounds_report;
use randic_core::graph::graph_from_state_index;
use randic_core::run_theorem_suite;
use randic_core::spectral::char_poly_combinatorial;

fn close(a: f64, b: f64) -> bool {
    (a.is_nan() && b.is_nan()) || (a - b).abs() <= 1e-12
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn relabeling_changes_nothing(
        (n, p) in (2usize..=5).prop_flat_map(|n| (Just(n), Just((1..=n).collect::<Vec<_>>()).prop_shuffle())),
        index in any::<u64>(),
    ) {
        let total = 4u64.pow((n * (n - 1) / 2) as u32);
        let g = graph_from_state_index(n, index % total).unwrap();
        prop_assume!(g.is_connected());
        let h = g.relabel(&p).unwrap();

        let (a, b) = (energy_bounds_report(&g).unwrap(), energy_bounds_report(&h).unwrap());
        prop_assert!(close(a.meta.energy, b.meta.energy) && close(a.meta.det, b.meta.det));
        prop_assert_eq!(a.meta.k, b.meta.k);
        for (x, y) in a.bounds.iter().zip(&b.bounds) {
            prop_assert_eq!(x.name, y.name);
            prop_assert_eq!(x.skipped, y.skipped);
            prop_assert!(close(x.lhs, y.lhs) && close(x.rhs, y.rhs), "{:?} vs {:?}", x, y);
        }
        prop_assert_eq!(char_poly_combinatorial(&g).unwrap(), char_poly_combinatorial(&h).unwrap());

        let (sa, sb) = (run_theorem_suite(&g).unwrap(), run_theorem_suite(&h).unwrap());
        let status = |r: &randic_core::SuiteReport| {
            let mut v: Vec<_> = r
                .records
                .iter()
                .filter(|x| !x.id.starts_with("interlacing:"))
                .map(|x| (x.id.clone(), x.status))
                .collect();
            v.sort_by(|p, q| p.0.cmp(&q.0));
            v
        };
        prop_assert_eq!(status(&sa), status(&sb));
    }
}
