mod common;

use std::collections::HashMap;

use common::*;
use covtype::search::factorizations;
use covtype::{wct, FactorSpec, Generator, Justification, MonomialAlgebra, WeightAssignment, WeightedSequence};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn dp_matches_brute_force(e in entries()) {
        check_oracle(&e)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn permutation_invariance(
        (e, order) in entries().prop_flat_map(|e| {
            let n = e.len();
            (Just(e), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        check_permutation(&e, &order)?;
    }

    #[test]
    fn all_ones_reduces_to_unweighted(e in entries()) {
        check_all_ones(&e)?;
    }

    #[test]
    fn dmax_is_monotone(e in entries()) {
        check_monotone(&e)?;
    }

    #[test]
    fn sandwich_bounds(e in entries()) {
        check_sandwich(&e)?;
    }

    #[test]
    fn witnesses_are_nonzero_submultisets(e in entries()) {
        check_closure(&e)?;
    }

    #[test]
    fn splitting_never_lowers_the_estimate(d in 1u32..=6, w in 1u32..=3, k in 2u32..=5) {
        let w = w.min(d);
        let algebra = MonomialAlgebra::new(2, vec![Generator::new("u", d, k + 1)], None).unwrap();
        let weights = WeightAssignment::new(&algebra, [("u", w, Justification::Manual)]).unwrap();
        let merged = WeightedSequence::build(
            &algebra,
            &weights,
            &[FactorSpec::weighted(format!("u^{k}"), 1, w * k)],
        ).unwrap();
        let split = WeightedSequence::build(&algebra, &weights, &[FactorSpec::new("u", k)]).unwrap();
        prop_assert_eq!(merged.weight(), split.weight());
        prop_assert!(wct(&split).base_value >= wct(&merged).base_value);
    }
}

/// A small algebra with mixed truncations over `F_2`.
fn algebra_and_exponents() -> impl Strategy<Value = (MonomialAlgebra, Vec<Vec<u32>>)> {
    prop::collection::vec((1u32..=4, 2u32..=4), 1..=3).prop_flat_map(|gens| {
        let algebra = MonomialAlgebra::new(
            2,
            gens.iter()
                .enumerate()
                .map(|(i, &(d, e))| Generator::new(format!("a{i}"), d, e))
                .collect(),
            None,
        )
        .unwrap();
        let vec = gens.iter().map(|&(_, e)| 0..e).collect::<Vec<_>>();
        (Just(algebra), prop::collection::vec(vec, 3))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn multiplication_laws((a, vs) in algebra_and_exponents()) {
        let ms: Vec<_> = vs.iter().map(|v| a.monomial(v).unwrap().unwrap()).collect();
        let (x, y, z) = (&ms[0], &ms[1], &ms[2]);
        prop_assert_eq!(a.mul(x, y).unwrap(), a.mul(y, x).unwrap());
        let left = a.mul(x, y).unwrap().and_then(|xy| a.mul(&xy, z).unwrap());
        let right = a.mul(y, z).unwrap().and_then(|yz| a.mul(x, &yz).unwrap());
        prop_assert_eq!(&left, &right);
        if let Some(xy) = a.mul(x, y).unwrap() {
            prop_assert_eq!(xy.degree(), x.degree() + y.degree());
        }
        prop_assert_eq!(a.mul(x, &a.unit()).unwrap(), Some(x.clone()));
    }

    #[test]
    fn nonzero_products_have_nonzero_divisors((a, vs) in algebra_and_exponents(), mask in 0u8..8) {
        let ms: Vec<_> = vs.iter().map(|v| a.monomial(v).unwrap().unwrap()).collect();
        let mut full = Some(a.unit());
        for m in &ms {
            full = full.and_then(|f| a.mul(&f, m).unwrap());
        }
        if full.is_some() {
            let mut part = Some(a.unit());
            for (i, m) in ms.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    part = part.and_then(|p| a.mul(&p, m).unwrap());
                }
            }
            prop_assert!(part.is_some());
        }
    }

    #[test]
    fn build_sequence_invariants(
        (a, vs) in algebra_and_exponents(),
        copies in prop::collection::vec(0u32..=3, 3),
        weights in prop::collection::vec(prop::option::of(1u32..=6), 3),
    ) {
        let wa = WeightAssignment::unit(&a);
        let specs: Vec<FactorSpec> = vs
            .iter()
            .zip(&copies)
            .zip(&weights)
            .filter(|((v, _), _)| v.iter().any(|&e| e > 0))
            .map(|((v, &c), &w)| {
                let text = a.format(&a.monomial(v).unwrap().unwrap());
                FactorSpec { factor: text, copies: c, weight: w }
            })
            .collect();
        if let Ok(s) = WeightedSequence::build(&a, &wa, &specs) {
            let w: u64 = s.factors().iter().map(|f| u64::from(f.weight) * u64::from(f.copies)).sum();
            prop_assert_eq!(s.weight(), w);
            let deg: u64 = s.factors().iter().map(|f| u64::from(f.monomial.degree()) * u64::from(f.copies)).sum();
            let expected = if s.factors().is_empty() { -1 } else { deg as i64 };
            prop_assert_eq!(s.product_dimension(), expected);
            for f in s.factors() {
                prop_assert!(f.copies >= 1);
                prop_assert!(1 <= f.weight && f.weight <= f.monomial.degree());
            }
        }
    }

    #[test]
    fn factorization_count_matches_partition_count(v in prop::collection::vec(0u32..=3, 1..=3)) {
        prop_assume!(v.iter().any(|&e| e > 0));
        let a = MonomialAlgebra::new(
            2,
            v.iter().enumerate().map(|(i, &e)| Generator::new(format!("a{i}"), 1, e.max(1) + 1)).collect(),
            None,
        ).unwrap();
        let m = a.monomial(&v).unwrap().unwrap();
        let all = factorizations(&a, &m);
        prop_assert_eq!(all.len() as u64, vector_partitions(&v));
        for parts in &all {
            let mut prod = a.unit();
            for p in parts {
                prod = a.mul(&prod, p).unwrap().unwrap();
            }
            prop_assert_eq!(&prod, &m);
        }
    }
}

/// Number of multisets of nonzero vectors summing to `target`, counted by
/// processing the candidate parts one at a time (coin-change style).
fn vector_partitions(target: &[u32]) -> u64 {
    let mut parts: Vec<Vec<u32>> = vec![vec![]];
    for &e in target {
        parts = parts
            .into_iter()
            .flat_map(|p| (0..=e).map(move |x| [p.clone(), vec![x]].concat()))
            .collect();
    }
    parts.retain(|p| p.iter().any(|&x| x > 0));
    let mut ways: HashMap<Vec<u32>, u64> = HashMap::new();
    ways.insert(vec![0; target.len()], 1);
    for part in &parts {
        let before = ways.clone();
        for (state, &count) in &before {
            let mut next = state.clone();
            loop {
                for (n, p) in next.iter_mut().zip(part) {
                    *n += p;
                }
                if next.iter().zip(target).any(|(n, t)| n > t) {
                    break;
                }
                *ways.entry(next.clone()).or_default() += count;
            }
        }
    }
    ways.get(target).copied().unwrap_or(0)
}
