use cluster_core::cli::parse_element;
use cluster_core::explore::explore_exchange_graph;
use cluster_core::locality::{
    acyclic_a_membership, build_isolated_cover, exchange_identity_check, find_sink, freeze, freeze_in_order,
    freezing_commutes_check, is_acyclic, localized_a_membership, upper_membership_bounded, UpperTest,
};
use cluster_core::{LaurentPoly, Monomial, MutationWord, Registry, Seed, TropMonomial, VarId};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::subsequence;

fn registry() -> Registry {
    Registry::with_names(&["x1", "x2", "x3"], &["u"]).unwrap()
}

fn monomial(max: i32, nvars: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(-max..=max, nvars as usize)
        .prop_map(|es| Monomial::from_pairs(es.into_iter().enumerate().map(|(i, e)| (VarId(i as u32), e))))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((monomial(2, 4), -5i64..=5), 0..5)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn tropical() -> impl Strategy<Value = TropMonomial> {
    monomial(3, 4).prop_map(TropMonomial::new)
}

/// Skew-symmetrizable `B = C·D` pattern: `B_ij = c_ij d_j`, `B_ji = −c_ij d_i`.
/// With `acyclic`, every arrow points from a later to an earlier position of
/// a random order, so there is no directed cycle. Cyclic matrices keep
/// `|c_ij| ≤ 1` so that long mutation words stay small.
fn matrix(n: usize, acyclic: bool) -> impl Strategy<Value = Vec<Vec<i64>>> {
    let c_max: i64 = if acyclic { 2 } else { 1 };
    let pairs = n * (n.saturating_sub(1)) / 2;
    (
        prop::collection::vec(1i64..=2, n),
        prop::collection::vec(-c_max..=c_max, pairs),
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
    )
        .prop_map(move |(d, c, order)| {
            let mut b = vec![vec![0; n]; n];
            let mut k = 0;
            for p in 0..n {
                for q in p + 1..n {
                    let (i, j) = (order[p], order[q]);
                    let cij = if acyclic { c[k].abs() } else { c[k] };
                    b[i][j] = cij * d[j];
                    b[j][i] = -cij * d[i];
                    k += 1;
                }
            }
            b
        })
}

/// Initial seed of rank `1..=max_rank` with frozen `u1, u2` and random
/// tropical coefficients.
fn seed(max_rank: usize, acyclic: bool) -> impl Strategy<Value = Seed> {
    (1..=max_rank)
        .prop_flat_map(move |n| (matrix(n, acyclic), prop::collection::vec((-2i32..=2, -2i32..=2), n)))
        .prop_map(|(b, ys)| {
            let n = b.len();
            let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
            let reg = Registry::with_names(&names, &["u1".to_string(), "u2".to_string()]).unwrap();
            let coeffs = ys
                .into_iter()
                .map(|(a, c)| {
                    TropMonomial::new(Monomial::from_pairs([(VarId(n as u32), a), (VarId(n as u32 + 1), c)]))
                })
                .collect();
            Seed::initial(reg, coeffs, &b).unwrap()
        })
}

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = MutationWord> {
    prop::collection::vec(0..rank, 0..=max_len).prop_map(MutationWord)
}

fn seed_and_word(max_rank: usize, acyclic: bool, max_len: usize) -> impl Strategy<Value = (Seed, MutationWord)> {
    seed(max_rank, acyclic).prop_flat_map(move |s| {
        let n = s.rank();
        (Just(s), word(n, max_len))
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn division_round_trip(a in laurent(), b in nonzero_laurent()) {
        let product = &a * &b;
        prop_assert_eq!(product.exact_div(&b).unwrap(), a);
        prop_assert!(b.divides(&product));
    }

    #[test]
    fn quotient_times_divisor_is_dividend(a in laurent(), b in nonzero_laurent()) {
        match a.exact_div(&b) {
            Ok(q) => prop_assert_eq!(&q * &b, a),
            Err(_) => prop_assert!(!b.divides(&a)),
        }
    }

    #[test]
    fn adding_a_unit_breaks_divisibility(a in laurent(), m in monomial(2, 4)) {
        // b = x1 + 2 is not a unit, so b·a + m is never a multiple of b.
        let b = &LaurentPoly::var(VarId(0)) + &LaurentPoly::constant(2);
        let n = &(&b * &a) + &LaurentPoly::monomial(m);
        prop_assert!(!b.divides(&n));
    }

    #[test]
    fn tropical_semifield_laws(a in tropical(), b in tropical(), c in tropical()) {
        prop_assert_eq!(a.oplus(&b), b.oplus(&a));
        prop_assert_eq!(a.oplus(&b).oplus(&c), a.oplus(&b.oplus(&c)));
        prop_assert_eq!(a.mul(&b.oplus(&c)), a.mul(&b).oplus(&a.mul(&c)));
        prop_assert_eq!(a.oplus(&a), a.clone());
        prop_assert!(a.mul(&a.inv()).is_one());
    }

    #[test]
    fn parse_inverts_format(p in laurent()) {
        let reg = registry();
        prop_assert_eq!(parse_element(&p.format(&reg), &reg).unwrap(), p);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in laurent(), b in laurent()) {
        // x1 -> x1 * u, an invertible substitution.
        let images = [(VarId(0), LaurentPoly::monomial(Monomial::from_pairs([(VarId(0), 1), (VarId(3), 1)])))]
            .into_iter()
            .collect();
        let s = |p: &LaurentPoly| p.substitute(&images).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn mutation_is_an_involution((s, w) in seed_and_word(4, false, 3), k in 0usize..4) {
        let t = s.mutate_word(&w).unwrap();
        let k = k % t.rank();
        prop_assert_eq!(t.mutate(k).unwrap().mutate(k).unwrap(), t);
    }

    #[test]
    fn mutation_preserves_the_symmetrizer((s, w) in seed_and_word(4, false, 4)) {
        let t = s.mutate_word(&w).unwrap();
        let d = s.matrix().symmetrizer();
        let b = t.matrix();
        for i in 0..t.rank() {
            for j in 0..t.rank() {
                prop_assert_eq!(d[i] * b.get(i, j), -d[j] * b.get(j, i));
            }
        }
    }

    #[test]
    fn canonical_key_ignores_labeling((s, w) in seed_and_word(4, false, 2), perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle()) {
        let t = s.mutate_word(&w).unwrap();
        let perm: Vec<usize> = perm.into_iter().filter(|&i| i < t.rank()).collect();
        prop_assert_eq!(t.permute(&perm).canonical_key(), t.canonical_key());
        let c = t.canonical_form();
        prop_assert_eq!(t.permute(&c.perm), c.seed);
    }

    #[test]
    fn freezing_is_order_independent(s in seed(4, false), order in Just(vec![0usize, 1, 2, 3]).prop_shuffle(), len in 0usize..=4) {
        let order: Vec<usize> = order.into_iter().filter(|&i| i < s.rank()).take(len).collect();
        prop_assert_eq!(freeze_in_order(&s, &order).unwrap(), freeze(&s, &order).unwrap());
    }

    #[test]
    fn freezing_commutes_with_mutation(s in seed(4, true), i in 0usize..4, j in 0usize..4) {
        prop_assume!(s.rank() >= 2);
        let (i, j) = (i % s.rank(), j % s.rank());
        prop_assume!(i != j);
        prop_assert!(freezing_commutes_check(&s, i, j).unwrap());
    }

    #[test]
    fn freezing_preserves_acyclicity(s in seed(4, true), set in subsequence(vec![0usize, 1, 2, 3], 0..=4)) {
        let set: Vec<usize> = set.into_iter().filter(|&i| i < s.rank()).collect();
        prop_assert!(is_acyclic(freeze(&s, &set).unwrap().seed().matrix()));
    }

    #[test]
    fn cover_leaves_are_isolated(s in seed(4, true)) {
        for leaf in build_isolated_cover(&s).unwrap() {
            prop_assert!(leaf.frozen.seed().matrix().is_zero());
            prop_assert!(is_acyclic(leaf.frozen.seed().matrix()));
        }
    }

    #[test]
    fn exchange_identity_at_sinks(s in seed(4, true)) {
        let b = s.matrix();
        let sinks: Vec<usize> = (0..s.rank()).filter(|&i| (0..s.rank()).all(|j| b.get(j, i) <= 0)).collect();
        prop_assert_eq!(sinks.first().copied(), find_sink(b));
        for i in sinks {
            prop_assert!(exchange_identity_check(&s, i).unwrap());
        }
    }

    #[test]
    fn reversed_word_returns_to_start((s, w) in seed_and_word(3, false, 5)) {
        prop_assert_eq!(s.mutate_word(&w).unwrap().mutate_word(&w.reversed()).unwrap(), s);
    }
}

/// Finite type acyclic seeds used for the containment chain.
fn finite_type_seed() -> impl Strategy<Value = Seed> {
    prop_oneof![
        Just(vec![vec![0, -1], vec![1, 0]]),
        Just(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]),
        Just(vec![vec![0, -1], vec![2, 0]]),
        Just(vec![vec![0, 0], vec![0, 0]]),
    ]
    .prop_map(|b| Seed::with_trivial_coefficients(&b).unwrap())
}

/// A random element of the freezing at `set`: an integer combination of
/// products of its cluster variables times powers of the frozen variables
/// in `-2..=2`, plus an optional Laurent perturbation.
fn element_for(s: &Seed, set: &[usize], picks: &[(i64, usize, usize, i32)], perturb: Option<(i64, Monomial)>) -> LaurentPoly {
    let f = freeze(s, set).unwrap();
    let vars = explore_exchange_graph(f.seed(), 12, 200).unwrap().collect_cluster_variables().polys();
    let frozen = f.frozen_vars();
    let mut a = LaurentPoly::zero();
    for &(c, p, q, e) in picks {
        let mut t = LaurentPoly::constant(c);
        if !vars.is_empty() {
            t = &(&t * &vars[p % vars.len()]) * &vars[q % vars.len()];
        }
        let unit = Monomial::from_pairs(frozen.iter().map(|&v| (v, e)));
        a = &a + &t.mul_monomial(&unit);
    }
    if let Some((c, m)) = perturb {
        a = &a + &LaurentPoly::term(c, m);
    }
    a
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn containment_chain(
        s in finite_type_seed(),
        set in subsequence(vec![0usize, 1, 2], 0..=2),
        picks in prop::collection::vec((-3i64..=3, 0usize..20, 0usize..20, -2i32..=2), 1..3),
        perturb in prop::option::of((-2i64..=2, monomial(1, 3))),
    ) {
        let set: Vec<usize> = set.into_iter().filter(|&i| i < s.rank()).collect();
        let perturb = perturb.map(|(c, m)| (c, Monomial::from_pairs(m.iter().filter(|(v, _)| v.index() < s.rank()))));
        let a = element_for(&s, &set, &picks, perturb.clone());
        let f = freeze(&s, &set).unwrap();

        let in_frozen_a = acyclic_a_membership(f.seed(), &a).unwrap().member;
        if perturb.is_none() {
            prop_assert!(in_frozen_a);
        }
        if in_frozen_a {
            prop_assert!(localized_a_membership(&s, &set, &a, 2 * set.len() as u32 + 4).unwrap());
        }

        let in_a = acyclic_a_membership(&s, &a).unwrap().member;
        if in_a {
            for d in 0..3 {
                prop_assert!(upper_membership_bounded(&s, &a, d).unwrap().member);
            }
        }

        let upper = UpperTest::new(&s, 12).unwrap();
        prop_assert!(upper.is_exhaustive());
        let in_u = upper.check(&a).unwrap().member;
        prop_assert_eq!(in_a, in_u);
        if in_u {
            let frozen_upper = UpperTest::new(f.seed(), 12).unwrap();
            prop_assert!(frozen_upper.check(&a).unwrap().member);
        }
    }
}
