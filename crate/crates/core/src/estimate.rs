//! The weighted covering-type estimate of a factor sequence.
//!
//! For a sequence `s` of total weight `W` the estimate is
//! `1 + W + Σ_{k=1..W} dmax(k)`, where `dmax(k)` is the largest dimension of
//! a sub-multiset of `s` with weight at most `k` (−1 when only the empty
//! sub-multiset fits). Every sub-multiset of a nonzero monomial product is
//! itself nonzero, so `dmax` is a plain 0/1 knapsack over factor copies.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::WeightedSequence;

/// The covering invariant a bound applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum BoundTarget {
    /// Strict covering type; any weight estimator.
    Sct,
    /// Covering type; strict estimators only.
    Ct,
}

impl BoundTarget {
    pub fn label(self) -> &'static str {
        match self {
            BoundTarget::Sct => "sct",
            BoundTarget::Ct => "ct",
        }
    }
}

impl fmt::Display for BoundTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RefinementKind {
    Hdim,
    IndependentMinWeight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppliedRefinement {
    pub name: RefinementKind,
    pub delta: i64,
    pub rationale: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFactor {
    pub factor: String,
    pub copies: u32,
}

/// A sub-multiset of the sequence and its product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub factors: Vec<WitnessFactor>,
    /// Product monomial, `1` for the empty sub-multiset.
    pub product: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DmaxRow {
    pub k: u64,
    pub dimension: i64,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WctReport {
    pub total_weight: u64,
    pub dmax_table: Vec<DmaxRow>,
    pub base_value: i64,
    pub refinements_applied: Vec<AppliedRefinement>,
    pub final_value: i64,
    pub bound_target: BoundTarget,
    /// The value also bounds the vertex count of any triangulation.
    pub delta_applies: bool,
}

impl WctReport {
    /// Dimension of the full product (the last table row), −1 if empty.
    pub fn product_dimension(&self) -> i64 {
        self.dmax_table.last().map_or(-1, |r| r.dimension)
    }
}

/// Suffix knapsack table over the expanded factor copies.
///
/// `best[i][c]` is the largest dimension sum of a subset of items `i..`
/// with weight at most `c`, the empty subset counting 0. Dimensions are
/// positive, so 0 means "nothing nonempty fits".
struct SubproductTable {
    items: Vec<(u32, u32)>,
    best: Vec<Vec<u64>>,
}

impl SubproductTable {
    fn new(items: Vec<(u32, u32)>, capacity: usize) -> Self {
        let n = items.len();
        let mut best = vec![vec![0u64; capacity + 1]; n + 1];
        for i in (0..n).rev() {
            let (w, d) = (items[i].0 as usize, u64::from(items[i].1));
            for c in 0..=capacity {
                let skip = best[i + 1][c];
                best[i][c] = if w <= c {
                    skip.max(d + best[i + 1][c - w])
                } else {
                    skip
                };
            }
        }
        SubproductTable { items, best }
    }

    fn capacity(&self) -> usize {
        self.best[0].len() - 1
    }

    /// Chosen item indices for capacity `c`. Skipping an item whenever the
    /// remainder still attains the optimum yields the lexicographically
    /// smallest vector of per-entry counts.
    fn witness(&self, c: usize) -> Vec<usize> {
        let mut c = c.min(self.capacity());
        let mut chosen = Vec::new();
        for i in 0..self.items.len() {
            if self.best[i + 1][c] == self.best[i][c] {
                continue;
            }
            chosen.push(i);
            c -= self.items[i].0 as usize;
        }
        chosen
    }

    fn dimension(&self, c: usize) -> i64 {
        match self.best[0][c.min(self.capacity())] {
            0 => -1,
            d => d as i64,
        }
    }
}

fn witness_for(s: &WeightedSequence, owners: &[usize], chosen: &[usize]) -> Witness {
    let algebra = s.algebra();
    let mut counts = vec![0u32; s.factors().len()];
    for &i in chosen {
        counts[owners[i]] += 1;
    }
    let mut exponents = vec![0u32; algebra.rank()];
    let mut factors = Vec::new();
    for (f, &n) in s.factors().iter().zip(&counts) {
        if n == 0 {
            continue;
        }
        for (acc, e) in exponents.iter_mut().zip(f.monomial.exponents()) {
            *acc += e * n;
        }
        factors.push(WitnessFactor {
            factor: algebra.format(&f.monomial),
            copies: n,
        });
    }
    let product = algebra
        .monomial(&exponents)
        .expect("exponent vector has the algebra's rank")
        .expect("sub-multiset of a nonzero product is nonzero");
    Witness {
        factors,
        product: algebra.format(&product),
    }
}

/// Largest dimension of a sub-multiset with weight at most `k`, and the
/// canonical sub-multiset attaining it.
pub fn max_dim_subproduct(s: &WeightedSequence, k: u64) -> (i64, Witness) {
    let capacity = k.min(s.weight()) as usize;
    let table = SubproductTable::new(s.items(), capacity);
    let chosen = table.witness(capacity);
    (table.dimension(capacity), witness_for(s, &s.item_owners(), &chosen))
}

/// The estimate with its full table; no refinements.
pub fn wct(s: &WeightedSequence) -> WctReport {
    let total = s.weight();
    let table = SubproductTable::new(s.items(), total as usize);
    let owners = s.item_owners();
    let dmax_table: Vec<DmaxRow> = (1..=total)
        .map(|k| DmaxRow {
            k,
            dimension: table.dimension(k as usize),
            witness: witness_for(s, &owners, &table.witness(k as usize)),
        })
        .collect();
    let base_value = 1 + total as i64 + dmax_table.iter().map(|r| r.dimension).sum::<i64>();
    WctReport {
        total_weight: total,
        dmax_table,
        base_value,
        refinements_applied: Vec::new(),
        final_value: base_value,
        bound_target: if s.is_strict() {
            BoundTarget::Ct
        } else {
            BoundTarget::Sct
        },
        delta_applies: true,
    }
}

/// Just the base value, without building witnesses.
pub fn wct_value(s: &WeightedSequence) -> i64 {
    wct_of_items(s.items())
}

/// Base value for bare `(weight, dimension)` copies.
pub fn wct_of_items(items: Vec<(u32, u32)>) -> i64 {
    let total: usize = items.iter().map(|&(w, _)| w as usize).sum();
    let table = SubproductTable::new(items, total);
    1 + total as i64 + (1..=total).map(|k| table.dimension(k)).sum::<i64>()
}

/// Unweighted estimate `n + 1 + Σ k·|u_k|` over copies sorted by dimension.
pub fn nonweighted_ct(s: &WeightedSequence) -> i64 {
    let mut dims: Vec<i64> = s.items().iter().map(|&(_, d)| i64::from(d)).collect();
    dims.sort_unstable();
    let n = dims.len() as i64;
    n + 1 + dims.iter().zip(1..).map(|(d, k)| k * d).sum::<i64>()
}

/// Covering-type bound `cat·(cat+1)/2` from Lusternik–Schnirelmann category
/// (unnormalized).
pub fn cat_lower_bound(cat: u64) -> u64 {
    cat * (cat + 1) / 2
}

/// Optional improvements on top of the base value.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refinements {
    /// Homotopy dimension of the space, if it exceeds the product's.
    pub hdim: Option<i64>,
    /// Claim the +1 for two independent factors of minimal weight.
    pub indep: bool,
}

pub fn apply_refinements(
    report: &WctReport,
    s: &WeightedSequence,
    refinements: Refinements,
) -> Result<WctReport> {
    let mut out = report.clone();
    if let Some(hdim) = refinements.hdim {
        let top = s.product_dimension();
        if hdim < top {
            return Err(Error::HdimBelowTopClass { hdim, top });
        }
        out.refinements_applied.push(AppliedRefinement {
            name: RefinementKind::Hdim,
            delta: hdim - top,
            rationale: format!(
                "homotopy dimension {hdim} exceeds the product dimension {top} by {}",
                hdim - top
            ),
        });
    }
    if refinements.indep {
        let min_weight = s
            .factors()
            .iter()
            .map(|f| f.weight)
            .min()
            .ok_or(Error::IndependenceNotWitnessed)?;
        let mut distinct = Vec::new();
        for f in s.factors().iter().filter(|f| f.weight == min_weight) {
            if !distinct.contains(&&f.monomial) {
                distinct.push(&f.monomial);
            }
        }
        if distinct.len() < 2 {
            return Err(Error::IndependenceNotWitnessed);
        }
        let algebra = s.algebra();
        out.refinements_applied.push(AppliedRefinement {
            name: RefinementKind::IndependentMinWeight,
            delta: 1,
            rationale: format!(
                "`{}` and `{}` are distinct basis monomials of minimal weight {min_weight}",
                algebra.format(distinct[0]),
                algebra.format(distinct[1])
            ),
        });
    }
    out.final_value = out.base_value + out.refinements_applied.iter().map(|r| r.delta).sum::<i64>();
    Ok(out)
}
