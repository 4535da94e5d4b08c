use fragpd_core::fragile::{expected_value_coeffs, expected_value_poly, prob_all_observed_poly};
use fragpd_core::poly::binomial_big;
use fragpd_core::propagation::{is_local_cover, is_power_dominating, observed_set};
use fragpd_core::{BigInt, BigRational, Graph, Limits, Placement, Poly};
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Graph plus a nonempty vertex subset of size at most `max_s`.
fn graph_and_set(max_n: usize, max_s: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(move |g| {
        let n = g.n();
        let set = prop::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=max_s.min(n));
        (Just(g), set)
    })
}

/// Sweeps the vertices in a fixed order, applying the forcing rule wherever
/// it fires, until a sweep changes nothing.
fn naive_observed(g: &Graph, seeds: &[usize], order: &[usize]) -> Vec<usize> {
    let mut obs = vec![false; g.n()];
    for &s in seeds {
        obs[s] = true;
        for &w in g.neighbors(s) {
            obs[w] = true;
        }
    }
    loop {
        let mut changed = false;
        for &v in order {
            if !obs[v] {
                continue;
            }
            let white: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| !obs[u])
                .collect();
            if white.len() == 1 {
                obs[white[0]] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (0..g.n()).filter(|&v| obs[v]).collect()
}

fn grid() -> Vec<BigRational> {
    (0..=100)
        .map(|i| BigRational::new(BigInt::from(i), BigInt::from(100)))
        .collect()
}

fn lim() -> Limits {
    Limits::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closure_is_order_independent(
        (g, s, order) in graph_and_set(10, 4).prop_flat_map(|(g, s)| {
            let order = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
            (Just(g), Just(s), order)
        })
    ) {
        let fast = observed_set(&g, &s).unwrap().observed;
        prop_assert_eq!(fast, naive_observed(&g, &s, &order));
    }

    #[test]
    fn routes_agree((g, s) in graph_and_set(10, 5)) {
        let p = Placement::from_vertices(s);
        prop_assert_eq!(
            expected_value_poly(&g, &p, &lim()).unwrap(),
            expected_value_coeffs(&g, &p, &lim()).unwrap()
        );
    }

    #[test]
    fn adding_a_pmu_never_hurts(
        ((g, s), extra) in graph_and_set(9, 4).prop_flat_map(|(g, s)| {
            let n = g.n();
            (Just((g, s)), 0..n)
        })
    ) {
        let small = Placement::from_vertices(s.iter().copied());
        let big = small.clone().with(extra, 1);
        let e_small = expected_value_poly(&g, &small, &lim()).unwrap();
        let e_big = expected_value_poly(&g, &big, &lim()).unwrap();
        for q in grid() {
            prop_assert!(e_small.eval(&q) <= e_big.eval(&q), "q = {}", q);
        }
    }

    #[test]
    fn floors_and_ceiling((g, s) in graph_and_set(9, 4)) {
        let n = g.n();
        let p = Placement::from_vertices(s.iter().copied());
        let e = expected_value_poly(&g, &p, &lim()).unwrap();
        let whole = expected_value_poly(&g, &Placement::from_vertices(0..n), &lim()).unwrap();
        let pds_floor = is_power_dominating(&g, &s).unwrap().then(|| {
            Poly::one_minus_q_pow(s.len()).scale(&BigInt::from(n))
        });
        let cover_floor = is_local_cover(&g, &s).unwrap().then(|| {
            let obs = observed_set(&g, &s).unwrap().len();
            Poly::one_minus_q_pow(1).scale(&BigInt::from(obs))
        });
        for q in grid() {
            let v = e.eval(&q);
            prop_assert!(v <= whole.eval(&q));
            if let Some(f) = &pds_floor {
                prop_assert!(v >= f.eval(&q));
            }
            if let Some(f) = &cover_floor {
                prop_assert!(v >= f.eval(&q));
            }
        }
    }

    #[test]
    fn components_add(
        (g1, s1) in graph_and_set(5, 3),
        (g2, s2) in graph_and_set(5, 3),
    ) {
        let g = g1.disjoint_union(&g2);
        let shift = g1.n();
        let joint = Placement::from_vertices(s1.iter().copied().chain(s2.iter().map(|v| v + shift)));
        let e = expected_value_poly(&g, &joint, &lim()).unwrap();
        let e1 = expected_value_poly(&g1, &Placement::from_vertices(s1), &lim()).unwrap();
        let e2 = expected_value_poly(&g2, &Placement::from_vertices(s2), &lim()).unwrap();
        prop_assert_eq!(e, e1 + e2);
    }

    #[test]
    fn full_probability_is_a_probability((g, s) in graph_and_set(8, 4)) {
        let p = Placement::from_vertices(s);
        let prob = prob_all_observed_poly(&g, &p, &lim()).unwrap();
        let zero = BigRational::from_integer(BigInt::from(0));
        let one = BigRational::from_integer(BigInt::from(1));
        for q in grid() {
            let v = prob.eval(&q);
            prop_assert!(v >= zero && v <= one);
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(
        a in prop::collection::vec(-50i64..50, 0..6),
        b in prop::collection::vec(-50i64..50, 0..6),
        num in 0i64..=20,
    ) {
        let q = BigRational::new(BigInt::from(num), BigInt::from(20));
        let (pa, pb) = (Poly::from_i64s(&a), Poly::from_i64s(&b));
        prop_assert_eq!((&pa + &pb).eval(&q), pa.eval(&q) + pb.eval(&q));
        prop_assert_eq!((&pa * &pb).eval(&q), pa.eval(&q) * pb.eval(&q));
    }
}

#[test]
fn binomial_identities() {
    for n in 0..=30usize {
        let unity: Poly = (0..=n)
            .map(|k| Poly::bernstein(binomial_big(n, k), n - k, k))
            .sum();
        assert_eq!(unity, Poly::one(), "partition of unity, n = {n}");

        let mean: Poly = (0..=n)
            .map(|k| Poly::bernstein(binomial_big(n, k) * BigInt::from(k), n - k, k))
            .sum();
        assert_eq!(
            mean,
            Poly::one_minus_q_pow(1).scale(&BigInt::from(n)),
            "mean, n = {n}"
        );

        if n >= 1 {
            let alt: BigInt = (0..=n)
                .map(|k| {
                    if k % 2 == 0 {
                        binomial_big(n, k)
                    } else {
                        -binomial_big(n, k)
                    }
                })
                .sum();
            assert_eq!(alt, BigInt::from(0), "alternating sum, n = {n}");
        }
    }
}
