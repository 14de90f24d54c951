//! Exhaustive maximization of the estimate over monomial factor sequences.

use crate::algebra::{Monomial, MonomialAlgebra};
use crate::error::{Error, Result};
use crate::estimate::wct_of_items;
use crate::weights::{Factor, WeightAssignment, WeightedSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest product degree considered.
    pub max_total_degree: u32,
    /// Largest number of factor copies in a sequence.
    pub max_factors: u32,
    /// Permutation-equivalent sequences are always visited once; kept for
    /// callers that record the setting.
    pub dedup_equivalent: bool,
}

impl SearchBudget {
    pub fn new(max_total_degree: u32, max_factors: u32) -> Result<Self> {
        if max_total_degree == 0 {
            return Err(Error::BadBudget("max_total_degree must be at least 1".into()));
        }
        if max_factors == 0 {
            return Err(Error::BadBudget("max_factors must be at least 1".into()));
        }
        Ok(SearchBudget {
            max_total_degree,
            max_factors,
            dedup_equivalent: true,
        })
    }

    /// Top degree of the algebra, and enough factors to split every
    /// monomial down to generators.
    pub fn for_algebra(algebra: &MonomialAlgebra, weights: &WeightAssignment) -> Result<Self> {
        let top = algebra.top_degree().ok_or(Error::UnboundedAlgebra)?;
        Self::with_degree(algebra, weights, top)
    }

    /// Default factor bound for an explicit degree bound.
    pub fn with_degree(
        algebra: &MonomialAlgebra,
        weights: &WeightAssignment,
        max_total_degree: u32,
    ) -> Result<Self> {
        let max_factors = algebra
            .nonzero_monomials(max_total_degree)
            .iter()
            .map(|m| weights.factor_weight(m))
            .max()
            .unwrap_or(1);
        Self::new(max_total_degree.max(1), max_factors)
    }
}

/// Calls `visit` once per multiset of non-unit monomials whose product is
/// `m`, with at most `max_parts` parts. Parts arrive in non-increasing
/// exponent-vector order, which is the canonical form of the multiset.
pub fn visit_factorizations(
    algebra: &MonomialAlgebra,
    m: &Monomial,
    max_parts: usize,
    mut visit: impl FnMut(&[Monomial]),
) {
    let mut parts: Vec<Vec<u32>> = Vec::new();
    let mut emit = |raw: &[Vec<u32>]| {
        let monomials: Vec<Monomial> = raw
            .iter()
            .map(|e| {
                algebra
                    .monomial(e)
                    .expect("rank matches")
                    .expect("divisor of a nonzero monomial is nonzero")
            })
            .collect();
        visit(&monomials);
    };
    split(m.exponents().to_vec(), None, max_parts, &mut parts, &mut emit);
}

fn split(
    remaining: Vec<u32>,
    bound: Option<&[u32]>,
    max_parts: usize,
    parts: &mut Vec<Vec<u32>>,
    emit: &mut dyn FnMut(&[Vec<u32>]),
) {
    if remaining.iter().all(|&e| e == 0) {
        emit(parts);
        return;
    }
    if parts.len() == max_parts {
        return;
    }
    for part in divisors_descending(&remaining) {
        if bound.is_some_and(|b| part.as_slice() > b) {
            continue;
        }
        let rest: Vec<u32> = remaining.iter().zip(&part).map(|(r, p)| r - p).collect();
        parts.push(part);
        let last = parts.last().cloned().expect("just pushed");
        split(rest, Some(&last), max_parts, parts, emit);
        parts.pop();
    }
}

/// Nonzero exponent vectors below `v`, largest first in lexicographic order.
fn divisors_descending(v: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(v.len())];
    for &e in v {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=e).rev().map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out.pop(); // the zero vector sorts last
    out
}

/// Every factorization of `m` into non-unit monomials, one per
/// permutation class.
pub fn factorizations(algebra: &MonomialAlgebra, m: &Monomial) -> Vec<Vec<Monomial>> {
    let mut out = Vec::new();
    visit_factorizations(algebra, m, usize::MAX, |parts| out.push(parts.to_vec()));
    out
}

/// Groups a canonical factor list into sequence entries.
fn sequence_from_parts(
    algebra: &MonomialAlgebra,
    weights: &WeightAssignment,
    parts: &[Monomial],
) -> Result<WeightedSequence> {
    let mut factors: Vec<Factor> = Vec::new();
    for part in parts {
        match factors.last_mut() {
            Some(f) if &f.monomial == part => f.copies += 1,
            _ => factors.push(Factor {
                monomial: part.clone(),
                weight: weights.factor_weight(part),
                copies: 1,
            }),
        }
    }
    WeightedSequence::new(algebra.clone(), factors, weights.is_strict())
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub value: i64,
    pub witness: WeightedSequence,
    /// Number of permutation classes of sequences evaluated.
    pub classes_examined: u64,
}

/// Maximum of the estimate over all monomial sequences within `budget`,
/// each factor weighted by [`WeightAssignment::factor_weight`].
///
/// Ties go to the smaller canonical factor list, so the witness does not
/// depend on enumeration order.
pub fn swct_lower(
    algebra: &MonomialAlgebra,
    weights: &WeightAssignment,
    budget: SearchBudget,
) -> Result<SearchOutcome> {
    if !weights.is_strict() {
        return Err(Error::NotStrict);
    }
    let mut best: Option<(i64, Vec<Monomial>)> = None;
    let mut examined = 0u64;
    for m in algebra.nonzero_monomials(budget.max_total_degree) {
        visit_factorizations(algebra, &m, budget.max_factors as usize, |parts| {
            examined += 1;
            let items = parts
                .iter()
                .map(|p| (weights.factor_weight(p), p.degree()))
                .collect();
            let value = wct_of_items(items);
            let better = match &best {
                None => true,
                Some((v, w)) => value > *v || (value == *v && parts < w.as_slice()),
            };
            if better {
                best = Some((value, parts.to_vec()));
            }
        });
    }
    let (value, parts) = best.ok_or(Error::EmptySearchSpace)?;
    Ok(SearchOutcome {
        value,
        witness: sequence_from_parts(algebra, weights, &parts)?,
        classes_examined: examined,
    })
}
