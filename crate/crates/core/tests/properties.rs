use itertools::Itertools;
use proptest::prelude::*;
use proptest::sample::subsequence;

use deephole::codes::generator_is_mds;
use deephole::deepholes::{
    build_family_word, is_deep_hole_mds_extension, is_deep_hole_oracle, is_deep_hole_oracle_with,
    thm14_criterion, thm15_criterion, validate_mds_witness, validate_thm14_witness,
    validate_thm15_witness,
};
use deephole::polynomial::expand_shifted_power;
use deephole::verify::exclusion_sets;
use deephole::{
    Budget, DistanceStrategy, FieldElement, FiniteField, GprsCode, Mode, Polynomial, Witness,
    WordFamilySpec,
};

fn codes_of(q: u64) -> Vec<GprsCode> {
    let field = FiniteField::with_order(q).unwrap();
    let mut out = Vec::new();
    for l in 1..=q as usize - 3 {
        for set in exclusion_sets(q, l, usize::MAX, 0) {
            let ex: Vec<FieldElement> = set
                .iter()
                .map(|&e| field.element(e as u64).unwrap())
                .collect();
            for k in 2..=q as usize - l - 1 {
                out.push(GprsCode::new(field, &ex, k).unwrap());
            }
        }
    }
    out
}

#[test]
fn every_generator_is_mds_up_to_q9() {
    for q in [4, 5, 7, 8, 9] {
        for code in codes_of(q) {
            assert!(generator_is_mds(&code).unwrap(), "{code:?}");
        }
    }
}

#[test]
fn minimum_distance_formula_where_enumerable() {
    let b = Budget::default();
    for q in [4u64, 5, 7, 8, 9, 11] {
        for code in codes_of(q) {
            if (q as u128).pow(code.k() as u32) > 10_000 {
                continue;
            }
            assert_eq!(
                code.minimum_distance(Mode::Formula, &b).unwrap(),
                code.minimum_distance(Mode::BruteForce, &b).unwrap(),
                "{code:?}"
            );
        }
    }
}

#[test]
fn zero_distance_iff_codeword() {
    let b = Budget::default();
    for code in codes_of(4).into_iter().chain(codes_of(5)) {
        for (idx, &d) in code.all_error_distances(&b).unwrap().iter().enumerate() {
            assert_eq!(
                d == 0,
                code.is_codeword(&code.word_at_index(idx)),
                "{code:?} word {idx}"
            );
        }
    }
}

/// A random valid code over an odd field of order at most 9, plus a seed for words.
fn odd_code() -> impl Strategy<Value = GprsCode> {
    prop_oneof![Just(5u64), Just(7u64), Just(9u64)]
        .prop_flat_map(|q| {
            let all: Vec<u32> = (0..q as u32).collect();
            (Just(q), subsequence(all, 1..=(q as usize - 3)))
        })
        .prop_flat_map(|(q, excluded)| {
            let kmax = q as usize - excluded.len() - 1;
            (Just(q), Just(excluded), 2..=kmax)
        })
        .prop_map(|(q, excluded, k)| {
            let f = FiniteField::with_order(q).unwrap();
            let ex: Vec<FieldElement> = excluded
                .iter()
                .map(|&e| f.element(e as u64).unwrap())
                .collect();
            GprsCode::new(f, &ex, k).unwrap()
        })
}

/// Exhaustive search while q^k stays small, information sets beyond that.
fn oracle_strategy(code: &GprsCode) -> DistanceStrategy {
    if (code.field().order() as u128).pow(code.k() as u32) <= 10_000 {
        DistanceStrategy::Exhaustive
    } else {
        DistanceStrategy::InformationSet
    }
}

fn low_poly(field: FiniteField, coeffs: &[u32], len: usize) -> Polynomial {
    let q = field.order();
    let c = coeffs
        .iter()
        .take(len)
        .map(|&v| field.element((v % q) as u64).unwrap())
        .collect();
    Polynomial::from_coeffs(field, c).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn deg_k_criterion_matches_oracles(code in odd_code(), lambda in 1u32..81, nu in 0u32..81, low in prop::collection::vec(0u32..81, 8)) {
        let field = code.field();
        let q = field.order();
        prop_assume!(code.k() + 3 <= q as usize);
        let spec = WordFamilySpec::DegreeK {
            lambda: field.element((lambda % (q - 1) + 1) as u64).unwrap(),
            nu: field.element((nu % q) as u64).unwrap(),
            low: low_poly(field, &low, code.k() - 1),
        };
        let u = build_family_word(&code, &spec).unwrap();
        let crit = thm14_criterion(&code).unwrap();
        let oracle = is_deep_hole_oracle(&code, &u, &Budget::default()).unwrap();
        let mds = is_deep_hole_mds_extension(&code, &u).unwrap();
        prop_assert_eq!(crit.is_deep_hole, oracle.is_deep_hole);
        prop_assert_eq!(crit.is_deep_hole, mds.is_deep_hole);
        prop_assert_eq!(crit.witness.is_some(), !crit.is_deep_hole);
        if let Some(Witness::Subset(s)) = &crit.witness {
            prop_assert!(validate_thm14_witness(&code, s));
        }
        if let Some(Witness::Columns(c)) = &mds.witness {
            prop_assert!(validate_mds_witness(&code, &u, c).unwrap());
        }
    }

    #[test]
    fn shifted_criterion_matches_oracle(code in odd_code(), pick in 0usize..16, lambda in 1u32..81, nu in 0u32..81, low in prop::collection::vec(0u32..81, 8)) {
        let field = code.field();
        let q = field.order();
        let a = code.excluded()[pick % code.excluded().len()];
        let spec = WordFamilySpec::ShiftedInverse {
            lambda: field.element((lambda % (q - 1) + 1) as u64).unwrap(),
            nu: field.element((nu % q) as u64).unwrap(),
            pole: a,
            low: low_poly(field, &low, code.k() - 1),
        };
        let u = build_family_word(&code, &spec).unwrap();
        let crit = thm15_criterion(&code, a).unwrap();
        let oracle = is_deep_hole_oracle_with(&code, &u, oracle_strategy(&code), &Budget::default()).unwrap();
        let mds = is_deep_hole_mds_extension(&code, &u).unwrap();
        prop_assert_eq!(crit.is_deep_hole, oracle.is_deep_hole);
        prop_assert_eq!(crit.is_deep_hole, mds.is_deep_hole);
        if let Some(Witness::Subset(s)) = &crit.witness {
            prop_assert!(validate_thm15_witness(&code, a, s));
        }
    }

    #[test]
    fn shifted_power_vanishes_at_its_root(q in prop_oneof![Just(5u64), Just(7), Just(9), Just(11), Just(13), Just(25)], a in 0u64..25, m in 1usize..30) {
        let field = FiniteField::with_order(q).unwrap();
        let a = field.element(a % q).unwrap();
        let p = expand_shifted_power(field, a, m).unwrap();
        prop_assert!(p.eval(a).unwrap().is_zero());
        for x in field.elements(false) {
            prop_assert_eq!(p.eval(x).unwrap(), (x - a).powu(m as u64));
        }
    }

    #[test]
    fn mds_witness_columns_are_sorted_and_in_range(code in odd_code(), seed in any::<u64>()) {
        let field = code.field();
        let q = field.order() as u64;
        let coords: Vec<FieldElement> = (0..code.length())
            .map(|i| field.element((seed.rotate_left(i as u32 * 7) ^ i as u64) % q).unwrap())
            .collect();
        let u = code.word(coords).unwrap();
        let v = is_deep_hole_mds_extension(&code, &u).unwrap();
        if let Some(Witness::Columns(c)) = v.witness {
            prop_assert_eq!(c.len(), code.k() + 1);
            prop_assert!(c.iter().tuple_windows().all(|(a, b)| a < b));
            prop_assert!(*c.last().unwrap() < code.length());
        }
    }
}
