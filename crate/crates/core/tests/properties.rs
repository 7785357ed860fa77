use loccoh_core::bott::{bott, BottResult};
use loccoh_core::characters::{
    dim_schur, ideal_character, jxp_character, space_character, witness_weight, SimpleLabel,
};
use loccoh_core::extmult::ExtRoute;
use loccoh_core::loccoh::{hpq, hpq_from_ext, lcd, top_module_support};
use loccoh_core::qseries::{binomial, gauss};
use loccoh_core::{DominantWeight, LaurentPoly, Partition, Space};
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_weight(rank: usize, lo: i64, hi: i64) -> impl Strategy<Value = DominantWeight> {
    proptest::collection::vec(lo..=hi, rank).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        DominantWeight::new(v).unwrap()
    })
}

fn arb_space() -> impl Strategy<Value = Space> {
    prop_oneof![
        (1usize..=8).prop_map(|n| Space::skew(n).unwrap()),
        (1usize..=7).prop_map(|n| Space::symm(n).unwrap()),
    ]
}

fn arb_space_with_p() -> impl Strategy<Value = (Space, usize)> {
    arb_space()
        .prop_filter("needs a valid p", |s| s.p_limit() > 0)
        .prop_flat_map(|s| (Just(s), 0..s.p_limit()))
}

fn arb_bott_input() -> impl Strategy<Value = (usize, DominantWeight, DominantWeight)> {
    (1usize..=6)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, k)| (Just(n), arb_weight(k, -6, 6), arb_weight(n - k, -6, 6)))
}

proptest! {
    #[test]
    fn gauss_pascal_rule(a in 1i64..12, b in 0i64..12, v in prop_oneof![Just(1i64), Just(2), Just(4), Just(-4)]) {
        let lhs = gauss(a, b, v).unwrap();
        let mut rhs = gauss(a - 1, b - 1, v).unwrap();
        rhs += &gauss(a - 1, b, v).unwrap().shift(v * b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gauss_at_one_is_the_binomial(a in 0i64..14, b in 0i64..14) {
        let total: BigInt = gauss(a, b, 1).unwrap().terms().map(|(_, c)| c.clone()).sum();
        prop_assert_eq!(total, BigInt::from(binomial(a, b)));
    }

    #[test]
    fn bott_output_shape((n, alpha, beta) in arb_bott_input()) {
        let k = alpha.rank();
        if let BottResult::Cohomology { degree, weight } = bott(&alpha, &beta, n).unwrap() {
            prop_assert!(degree <= k * (n - k));
            prop_assert_eq!(weight.rank(), n);
            prop_assert_eq!(weight.size(), alpha.size() + beta.size());
        }
    }

    #[test]
    fn bott_commutes_with_determinant_twist((n, alpha, beta) in arb_bott_input(), c in -3i64..3) {
        let twisted = bott(&alpha.shifted(c), &beta.shifted(c), n).unwrap();
        let expected = match bott(&alpha, &beta, n).unwrap() {
            BottResult::Zero => BottResult::Zero,
            BottResult::Cohomology { degree, weight } => BottResult::Cohomology { degree, weight: weight.shifted(c) },
        };
        prop_assert_eq!(twisted, expected);
    }

    #[test]
    fn schur_dimension_is_twist_and_dual_invariant(w in (1usize..6).prop_flat_map(|r| arb_weight(r, -5, 5)), c in -4i64..4) {
        let d = dim_schur(&w);
        prop_assert!(d >= BigInt::from(1));
        prop_assert_eq!(dim_schur(&w.shifted(c)), d.clone());
        prop_assert_eq!(dim_schur(&w.dual()), d);
    }

    #[test]
    fn witness_lies_in_its_own_set(space in arb_space()) {
        for label in SimpleLabel::all(space).unwrap() {
            prop_assert!(label.contains(&witness_weight(&label)), "{}", label);
        }
    }

    #[test]
    fn hpq_is_nonnegative_and_tops_at_lcd((space, p) in arb_space_with_p()) {
        let h = hpq(&space, p).unwrap();
        prop_assert!(!h.is_empty());
        prop_assert!(h.terms().all(|(s, f)| s <= p && f.has_nonnegative_coefficients()));
        prop_assert_eq!(h.top_degree(), Some(lcd(&space, p).unwrap()));
        let top = top_module_support(&space, p).unwrap();
        prop_assert!(top.modules.iter().all(|s| h.coefficient(*s).top_degree() == h.top_degree()));
    }

    #[test]
    fn enum_route_reassembles_hpq((space, p) in arb_space_with_p()) {
        prop_assert_eq!(hpq_from_ext(&space, p, ExtRoute::Enum).unwrap(), hpq(&space, p).unwrap());
    }

    #[test]
    fn ideals_are_subsets_of_the_ring(space in arb_space(), z in proptest::collection::vec(0u32..3, 0..3), bound in 0u64..12) {
        let rows = match space { Space::Skew { n } => n / 2, _ => space.n() };
        let mut z = z;
        z.truncate(rows);
        z.sort_unstable_by(|a, b| b.cmp(a));
        let z = Partition::new(z).unwrap();
        let ring = space_character(&space, bound).unwrap();
        let ideal = ideal_character(&space, &z, bound).unwrap();
        prop_assert!(ideal.keys().all(|l| ring.contains_key(l) && l.size() <= bound));
        if z.is_empty() {
            prop_assert_eq!(ideal, ring);
        }
    }

    #[test]
    fn jxp_starts_at_x((space, p) in arb_space_with_p(), c in 0u32..3, bound in 0u64..14) {
        // x constant on the first p + 1 (symm) or 2p + 2 (skew) rows
        let rows = match space { Space::Skew { .. } => 2 * p + 2, _ => p + 1 };
        let x = Partition::new(vec![c; rows.min(space.n())]).unwrap();
        let set = jxp_character(&space, &x, p, bound).unwrap();
        prop_assert_eq!(set.contains_key(&x), x.size() <= bound);
        prop_assert!(set.keys().all(|l| l.dominance_ge(&x) && l.size() <= bound));
    }

    #[test]
    fn laurent_json_round_trip(terms in proptest::collection::vec((-20i64..20, -9i64..9), 0..8)) {
        let f = LaurentPoly::from_terms(terms);
        prop_assert_eq!(LaurentPoly::from_json(&f.to_json()).unwrap(), f);
    }
}
