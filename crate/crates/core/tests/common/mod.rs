//! Random sequences and the invariant checks shared by the property suite
//! and the acceptance target.
#![allow(dead_code)]

use covtype::estimate::nonweighted_ct;
use covtype::oracle::brute_force_dmax;
use covtype::{
    wct, FactorSpec, Generator, Justification, MonomialAlgebra, WeightAssignment, WeightedSequence,
};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

/// `(dimension, weight, copies)` per entry.
pub type Entry = (u32, u32, u32);

pub const MAX_COPIES: u32 = 18;

/// Entries with dimensions ≤ 9, weights ≤ min(5, dimension) and at most
/// 18 copies in total.
pub fn entries() -> impl Strategy<Value = Vec<Entry>> {
    prop::collection::vec(
        (1u32..=9, 1u32..=5, 1u32..=4).prop_map(|(d, w, c)| (d, w.min(d), c)),
        1..=8,
    )
    .prop_map(|mut v| {
        let mut total = 0;
        v.retain(|&(_, _, c)| {
            total += c;
            total <= MAX_COPIES
        });
        v
    })
    .prop_filter("nonempty", |v| !v.is_empty())
}

/// One truncated generator per entry over `F_2`, nilpotent just above its
/// copy count, so every sub-multiset of the sequence is nonzero.
pub fn sequence_from(entries: &[Entry]) -> WeightedSequence {
    let gens = entries
        .iter()
        .enumerate()
        .map(|(i, &(d, _, c))| Generator::new(format!("g{i}"), d, c + 1))
        .collect();
    let algebra = MonomialAlgebra::new(2, gens, None).unwrap();
    let mut weights = WeightAssignment::unit(&algebra);
    for (i, &(_, w, _)) in entries.iter().enumerate() {
        weights = weights
            .with(&algebra, &format!("g{i}"), w, Justification::Manual)
            .unwrap();
    }
    let specs: Vec<FactorSpec> = entries
        .iter()
        .enumerate()
        .map(|(i, &(_, _, c))| FactorSpec::new(format!("g{i}"), c))
        .collect();
    WeightedSequence::build(&algebra, &weights, &specs).unwrap()
}

fn dims(s: &WeightedSequence) -> Vec<i64> {
    wct(s).dmax_table.iter().map(|r| r.dimension).collect()
}

pub fn check_oracle(entries: &[Entry]) -> Result<(), TestCaseError> {
    let s = sequence_from(entries);
    let brute = brute_force_dmax(&s.items()).unwrap();
    prop_assert_eq!(dims(&s), brute);
    Ok(())
}

pub fn check_permutation(entries: &[Entry], order: &[usize]) -> Result<(), TestCaseError> {
    let s = sequence_from(entries);
    let p = s.permuted(order);
    prop_assert_eq!(wct(&s).base_value, wct(&p).base_value);
    prop_assert_eq!(dims(&s), dims(&p));
    Ok(())
}

pub fn check_all_ones(entries: &[Entry]) -> Result<(), TestCaseError> {
    let s = sequence_from(entries).with_unit_weights();
    prop_assert_eq!(wct(&s).base_value, nonweighted_ct(&s));
    Ok(())
}

pub fn check_monotone(entries: &[Entry]) -> Result<(), TestCaseError> {
    let d = dims(&sequence_from(entries));
    prop_assert!(d.windows(2).all(|w| w[0] <= w[1]), "{:?}", d);
    prop_assert_eq!(*d.last().unwrap(), sequence_from(entries).product_dimension());
    Ok(())
}

pub fn check_sandwich(entries: &[Entry]) -> Result<(), TestCaseError> {
    let s = sequence_from(entries);
    let value = wct(&s).base_value;
    let top = s.product_dimension();
    let w = s.weight() as i64;
    prop_assert!(top + 2 <= value, "{} + 2 > {}", top, value);
    prop_assert!(value <= 1 + w + w * top, "{} > 1 + {} + {}·{}", value, w, w, top);
    Ok(())
}

/// Every witness in the table is a nonzero sub-multiset of the right
/// weight and dimension.
pub fn check_closure(entries: &[Entry]) -> Result<(), TestCaseError> {
    let s = sequence_from(entries);
    let algebra = s.algebra();
    for row in &wct(&s).dmax_table {
        if row.witness.factors.is_empty() {
            prop_assert_eq!(row.dimension, -1);
            continue;
        }
        let product = algebra.parse_monomial(&row.witness.product).unwrap();
        prop_assert_eq!(i64::from(product.degree()), row.dimension);
        let mut weight = 0u64;
        for wf in &row.witness.factors {
            let f = s
                .factors()
                .iter()
                .find(|f| algebra.format(&f.monomial) == wf.factor)
                .unwrap();
            prop_assert!(wf.copies <= f.copies);
            weight += u64::from(f.weight) * u64::from(wf.copies);
        }
        prop_assert!(weight <= row.k);
    }
    Ok(())
}
