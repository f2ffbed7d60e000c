use gevrey::asympt::{estimate_k, painleve_residual, richardson_from, transseries_residual};
use gevrey::numeric::scalar::{int, rat};
use gevrey::ribbon::{canonical_form, parse_ribbon_graph, write_ribbon_graph, RibbonGraph};
use gevrey::{BigFloat, Rational};
use proptest::prelude::*;

/// Random trivalent graph on `6n` darts with the standard rotation at each vertex.
fn ribbon_graph(max_degree: usize) -> impl Strategy<Value = RibbonGraph> {
    (1..=max_degree)
        .prop_flat_map(|n| Just((0..6 * n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|order| {
            let darts = order.len();
            let mut alpha = vec![0; darts];
            for pair in order.chunks(2) {
                alpha[pair[0]] = pair[1];
                alpha[pair[1]] = pair[0];
            }
            let sigma = (0..darts)
                .map(|d| if d % 3 == 2 { d - 2 } else { d + 1 })
                .collect();
            RibbonGraph::new(alpha, sigma).expect("valid by construction")
        })
}

fn graph_and_marking(max_degree: usize) -> impl Strategy<Value = (RibbonGraph, Vec<bool>)> {
    ribbon_graph(max_degree).prop_flat_map(|g| {
        let v = g.vertex_count();
        (Just(g), proptest::collection::vec(any::<bool>(), v))
    })
}

fn relabeling(darts: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..darts).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn euler_characteristic_is_consistent((g, m) in graph_and_marking(4)) {
        prop_assume!(g.is_connected());
        let s = g.classify_marking(&m).unwrap();
        let b = g.boundary_cycles(&m).unwrap().len() as i64;
        let n = g.degree() as i64;
        // V − E + F = 2n − 3n + b
        prop_assert_eq!(2 - 2 * s.genus as i64, b - n);
        prop_assert!(b >= 1 && b <= n + 2);
    }

    #[test]
    fn flipping_every_vertex_is_the_mirror((g, m) in graph_and_marking(4)) {
        prop_assume!(g.is_connected());
        let flipped: Vec<bool> = m.iter().map(|x| !x).collect();
        prop_assert_eq!(g.classify_marking(&m).unwrap(), g.classify_marking(&flipped).unwrap());
    }

    #[test]
    fn weight_is_a_graph_invariant((g, perm) in ribbon_graph(3).prop_flat_map(|g| {
        let darts = g.darts();
        (Just(g), relabeling(darts))
    })) {
        prop_assume!(g.is_connected());
        let w = g.weight_gl_n().unwrap();
        prop_assert_eq!(&g.mirror().weight_gl_n().unwrap(), &w);
        let h = g.relabel(&perm);
        prop_assert_eq!(h.weight_gl_n().unwrap(), w.clone());
        prop_assert_eq!(canonical_form(&h), canonical_form(&g));
        // p(0) = 0 and the N-degree is bounded by the face count n + 2
        prop_assert!(w.eval(0) == 0.into());
        prop_assert!(w.degree() <= g.degree() + 2);
    }

    #[test]
    fn text_format_round_trips(g in ribbon_graph(4)) {
        let back = parse_ribbon_graph(&write_ribbon_graph(&g)).unwrap();
        prop_assert_eq!(canonical_form(&back), canonical_form(&g));
    }

    #[test]
    fn richardson_removes_inverse_powers(
        c in proptest::collection::vec(-20i64..20, 1..5),
        extra in 0usize..3,
        first in 1u64..5,
    ) {
        let depth = c.len() - 1 + extra;
        let len = depth + 6;
        let seq: Vec<BigFloat> = (0..len as u64)
            .map(|i| {
                let g = (first + i) as i64;
                let mut x = Rational::from_integer(0.into());
                for (k, ck) in c.iter().enumerate() {
                    x += int(*ck) * rat(1, g.pow(k as u32));
                }
                BigFloat::from_rational(&x, 256)
            })
            .collect();
        let est = richardson_from(&seq, first, depth.max(1)).unwrap();
        let want = BigFloat::from_int(c[0], 256);
        prop_assert!((est.value - want).abs().to_f64() < 1e-50);
    }
}

#[test]
fn painleve_vanishes_for_all_small_orders() {
    for g_max in 1..=30 {
        assert!(
            painleve_residual(g_max).unwrap().is_zero(),
            "g_max = {g_max}"
        );
    }
}

#[test]
fn transseries_vanishes_across_orders() {
    for l_max in 0..=10 {
        let r = transseries_residual(l_max / 2 + 1, l_max).unwrap();
        assert!(r.is_zero(), "l_max = {l_max}");
    }
}

#[test]
fn k_estimate_stable_under_precision_doubling() {
    let lo = estimate_k(120, 8, 256).unwrap().value;
    let hi = estimate_k(120, 8, 512).unwrap().value;
    let diff = (lo.with_precision(512) - hi).abs().to_f64();
    assert!(diff < 1e-10, "{diff}");
}
