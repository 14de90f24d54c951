//! Space families with known ring presentations and published bounds.
//!
//! Each constructor encodes a cohomology ring, a weight assignment and a
//! distinguished factor sequence (or a search / category method), together
//! with the expected value. Where a published formula disagrees with what
//! the estimate actually gives, the entry keeps both numbers and carries a
//! discrepancy note instead of silently choosing one.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{is_prime, Generator, MonomialAlgebra};
use crate::error::{Error, Result};
use crate::estimate::{
    apply_refinements, cat_lower_bound, wct, wct_value, BoundTarget, Refinements, WctReport,
};
use crate::search::{swct_lower, SearchBudget};
use crate::weights::{FactorSpec, Justification, WeightAssignment, WeightedSequence};

/// How an entry turns its ring into a number.
#[derive(Debug, Clone)]
pub enum Method {
    /// Evaluate a fixed sequence, then apply refinements.
    Sequence {
        sequence: WeightedSequence,
        refinements: Refinements,
    },
    /// Maximize over all monomial sequences.
    Search { budget: SearchBudget },
    /// Category bound `cat·(cat+1)/2`; the sequence is kept for comparison.
    Category {
        cat: u64,
        sequence: WeightedSequence,
    },
}

/// A published value next to this crate's recomputation of the same
/// quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrintedValue {
    pub label: String,
    pub printed: i64,
    pub recomputed: i64,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub algebra: MonomialAlgebra,
    pub weights: WeightAssignment,
    pub method: Method,
    pub expected: Option<i64>,
    pub expected_source: String,
    pub printed: Vec<PrintedValue>,
    pub discrepancy_note: Option<String>,
    /// Conventions the entry fixes (prime choice, skeleton offsets, ...).
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    /// Computed value equals the expected value.
    Pass,
    /// Computed value equals the expected value, but a published number
    /// for the same quantity disagrees.
    Flagged,
    /// Computed value differs from the expected value.
    Fail,
    /// Nothing to compare against.
    Unreferenced,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Flagged => "FLAGGED",
            Status::Fail => "FAIL",
            Status::Unreferenced => "UNREFERENCED",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Evaluation {
    pub computed: i64,
    pub bound_target: BoundTarget,
    /// Table of the evaluated (or best found) sequence.
    pub report: WctReport,
    pub sequence: WeightedSequence,
    pub classes_examined: Option<u64>,
    pub status: Status,
}

impl CatalogEntry {
    pub fn evaluate(&self) -> Result<Evaluation> {
        let (computed, bound_target, report, sequence, classes_examined) = match &self.method {
            Method::Sequence {
                sequence,
                refinements,
            } => {
                let report = apply_refinements(&wct(sequence), sequence, *refinements)?;
                (report.final_value, report.bound_target, report, sequence.clone(), None)
            }
            Method::Search { budget } => {
                let out = swct_lower(&self.algebra, &self.weights, *budget)?;
                let report = wct(&out.witness);
                (out.value, BoundTarget::Ct, report, out.witness, Some(out.classes_examined))
            }
            Method::Category { cat, sequence } => (
                cat_lower_bound(*cat) as i64,
                BoundTarget::Ct,
                wct(sequence),
                sequence.clone(),
                None,
            ),
        };
        let status = match self.expected {
            Some(e) if e != computed => Status::Fail,
            _ if self.discrepancy_note.is_some() => Status::Flagged,
            None => Status::Unreferenced,
            Some(_) => Status::Pass,
        };
        Ok(Evaluation {
            computed,
            bound_target,
            report,
            sequence,
            classes_examined,
            status,
        })
    }

    fn new(
        name: &str,
        params: Vec<(&str, String)>,
        algebra: MonomialAlgebra,
        weights: WeightAssignment,
        method: Method,
    ) -> Self {
        CatalogEntry {
            name: name.to_string(),
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            algebra,
            weights,
            method,
            expected: None,
            expected_source: String::new(),
            printed: Vec::new(),
            discrepancy_note: None,
            notes: Vec::new(),
        }
    }

    fn expect(mut self, value: i64, source: &str) -> Self {
        self.expected = Some(value);
        self.expected_source = source.to_string();
        self
    }

    fn printed(mut self, label: &str, printed: i64, recomputed: i64) -> Self {
        self.printed.push(PrintedValue {
            label: label.to_string(),
            printed,
            recomputed,
        });
        self
    }

    fn note(mut self, note: &str) -> Self {
        self.notes.push(note.to_string());
        self
    }

    /// Sets the discrepancy note when some printed value disagrees.
    fn finish(mut self, explanation: &str) -> Self {
        let mismatches: Vec<String> = self
            .printed
            .iter()
            .filter(|p| p.printed != p.recomputed)
            .map(|p| format!("{}: printed {}, recomputed {}", p.label, p.printed, p.recomputed))
            .collect();
        if !mismatches.is_empty() {
            self.discrepancy_note = Some(format!("{explanation} ({})", mismatches.join("; ")));
        }
        self
    }
}

/// Largest integer parameter [`build`] accepts.
pub const MAX_PARAM: u32 = 200;

/// Largest skeleton or projective dimension for search-based entries.
pub const MAX_SEARCH_DIMENSION: u32 = 40;

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParam(msg.into())
}

fn require_odd_prime(p: u32) -> Result<()> {
    if p % 2 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(bad(format!("p = {p} must be an odd prime")))
    }
}

fn is_power_of(s: u64, p: u64) -> bool {
    let mut v = s;
    if v < p {
        return false;
    }
    while v % p == 0 {
        v /= p;
    }
    v == 1
}

/// `∧(x) ⊗ F_p[y]/(y^trunc) ⊗ ∧(z...)` with `|x| = 1`, `|y| = 2 = w(y)`,
/// and the sequence `(x, y×(trunc−1), z...)`. `y` is dropped when
/// `trunc = 1`.
fn bockstein_ring(
    p: u32,
    trunc: u32,
    zs: &[(String, u32)],
) -> Result<(MonomialAlgebra, WeightAssignment, WeightedSequence)> {
    let mut gens = vec![Generator::exterior("x", 1)];
    if trunc >= 2 {
        gens.push(Generator::new("y", 2, trunc));
    }
    gens.extend(zs.iter().map(|(name, d)| Generator::exterior(name.clone(), *d)));
    let algebra = MonomialAlgebra::new(p, gens, None)?;
    let mut weights = WeightAssignment::unit(&algebra);
    let mut spec = vec![FactorSpec::new("x", 1)];
    if trunc >= 2 {
        weights = weights.with(&algebra, "y", 2, Justification::Bockstein)?;
        spec.push(FactorSpec::new("y", trunc - 1));
    }
    spec.extend(zs.iter().map(|(name, _)| FactorSpec::new(name.clone(), 1)));
    let sequence = WeightedSequence::build(&algebra, &weights, &spec)?;
    Ok((algebra, weights, sequence))
}

fn sequence_method(sequence: WeightedSequence, indep: bool) -> Method {
    Method::Sequence {
        sequence,
        refinements: Refinements { hdim: None, indep },
    }
}

/// Lens space `L^{2n+1}(p)`: `(n+1)(2n+3)`.
pub fn lens(n: u32, p: u32) -> Result<CatalogEntry> {
    if n == 0 {
        return Err(bad("n must be at least 1"));
    }
    require_odd_prime(p)?;
    let (algebra, weights, sequence) = bockstein_ring(p, n + 1, &[])?;
    let n = i64::from(n);
    let value = (n + 1) * (2 * n + 3);
    let cat = 2 * n as u64 + 2;
    Ok(CatalogEntry::new(
        "lens",
        vec![("n", n.to_string()), ("p", p.to_string())],
        algebra,
        weights,
        sequence_method(sequence, false),
    )
    .expect(value, "weighted lens-space estimate (n+1)(2n+3) for the product x·y^n")
    .printed("category bound cat(cat+1)/2 with cat = 2n+2", value, cat_lower_bound(cat) as i64)
    .finish("lens-space value"))
}

/// `L^{2n+1}(p) × S^m`: `(n+1)(2m+2n+3) + 2`, using the +1 for the two
/// minimal-weight factors `x` and `z`.
pub fn lens_times_sphere(n: u32, m: u32, p: u32) -> Result<CatalogEntry> {
    if n == 0 || m == 0 {
        return Err(bad("n and m must be at least 1"));
    }
    require_odd_prime(p)?;
    let (algebra, weights, sequence) = bockstein_ring(p, n + 1, &[("z".into(), m)])?;
    let (n, m) = (i64::from(n), i64::from(m));
    Ok(CatalogEntry::new(
        "lens_times_sphere",
        vec![("n", n.to_string()), ("m", m.to_string()), ("p", p.to_string())],
        algebra,
        weights,
        sequence_method(sequence, true),
    )
    .expect(
        (n + 1) * (2 * m + 2 * n + 3) + 2,
        "lens space times sphere, (n+1)(2m+2n+3)+2 via x·y^n·z plus the independent-minimal-weight +1",
    ))
}

/// Orbit spaces of free `Z_d` actions on connected sums of
/// `S^{2n+1} × S^{2n+1}`; they reduce to `L^{2n+1} × S^{2n+1}`.
pub fn highly_connected(n: u32, p: u32) -> Result<CatalogEntry> {
    let mut entry = lens_times_sphere(n, 2 * n + 1, p)?;
    let k = i64::from(n);
    let value = entry.expected.expect("set by lens_times_sphere");
    entry.name = "highly_connected".into();
    entry.params = vec![("n".into(), n.to_string()), ("p".into(), p.to_string())];
    let mut entry = entry.printed("6n²+11n+7", 6 * k * k + 11 * k + 7, value);
    if n == 1 {
        entry = entry.printed("six-dimensional case", 24, value);
    }
    Ok(entry
        .note("the quotient maps onto L^{2n+1}(d) × S^{2n+1} with a degree-one map")
        .finish("highly connected quotient"))
}

/// Skeleton `BZ_m^{(cap)}` of the classifying space of a cyclic group,
/// evaluated by exhaustive search over `H*(BZ_m; F_p)` truncated at `cap`.
pub fn bg_cyclic_skeleton(cap: u32, m: u32, p: u32) -> Result<CatalogEntry> {
    if cap == 0 {
        return Err(bad("skeleton dimension must be at least 1"));
    }
    require_search_size(cap)?;
    if m < 2 {
        return Err(bad("m must be at least 2"));
    }
    if !is_prime(p) || m % p != 0 {
        return Err(bad(format!("p = {p} must be a prime dividing m = {m}")));
    }
    let params = vec![
        ("n", cap.to_string()),
        ("m", m.to_string()),
        ("p", p.to_string()),
    ];
    let c = i64::from(cap);
    if p == 2 && m == 2 {
        let algebra = MonomialAlgebra::new(2, vec![Generator::polynomial("x", 1)], Some(cap))?;
        let weights = WeightAssignment::new(&algebra, [("x", 1, Justification::PullbackFromBg)])?;
        let budget = SearchBudget::for_algebra(&algebra, &weights)?;
        let value = (c + 1) * (c + 2) / 2;
        return Ok(CatalogEntry::new("bg_cyclic_skeleton", params, algebra, weights, Method::Search { budget })
            .expect(value, "skeleton of BZ_2 = RP^∞: (n+1)(n+2)/2")
            .note("H*(BZ_2; F_2) = F_2[x]; the n-skeleton is RP^n")
            .finish("real projective skeleton"));
    }
    if p == 2 && m % 4 != 0 {
        return Err(Error::UnsupportedCoefficients(format!(
            "H*(BZ_{m}; F_2) is not an exterior-times-polynomial algebra when m ≡ 2 mod 4"
        )));
    }
    let mut gens = vec![Generator::exterior("x", 1)];
    if cap >= 2 {
        gens.push(Generator::polynomial("y", 2));
    }
    let algebra = MonomialAlgebra::new(p, gens, Some(cap))?;
    let mut weights = WeightAssignment::new(&algebra, [("x", 1, Justification::PullbackFromBg)])?;
    if cap >= 2 {
        weights = weights.with(&algebra, "y", 2, Justification::PullbackFromBg)?;
    }
    let budget = SearchBudget::for_algebra(&algebra, &weights)?;
    let a = c / 2;
    // acyclicity n = cap − 1: the n-acyclic quotient sees BG^{(n+1)}
    let n = c - 1;
    let (value, source, printed) = if cap % 2 == 1 {
        (
            (a + 1) * (2 * a + 3),
            "odd skeleton 2a+1: lens value (a+1)(2a+3) from x·y^a",
            (n + 2) * (n + 3) / 2,
        )
    } else {
        (
            2 * a * (a + 1),
            "even skeleton 2a: 2a(a+1) from the sequence (y×a)",
            (n + 1) * (n + 2) / 2,
        )
    };
    Ok(
        CatalogEntry::new("bg_cyclic_skeleton", params, algebra, weights, Method::Search { budget })
            .expect(value, source)
            .printed("parity bound for an (n−1)-acyclic space, n = skeleton dimension", printed, value)
            .note("skeleton dimension n corresponds to acyclicity n−1 of the covering space")
            .note("classes of degree equal to the skeleton dimension are kept")
            .finish(
                "the printed parity bound is valid but below what the y-power sequence gives on an even skeleton",
            ),
    )
}

/// `RP^n` with `Z_2` coefficients, by exhaustive search.
pub fn real_projective(n: u32) -> Result<CatalogEntry> {
    if n == 0 {
        return Err(bad("n must be at least 1"));
    }
    require_search_size(n)?;
    let algebra = MonomialAlgebra::new(2, vec![Generator::new("x", 1, n + 1)], None)?;
    let weights = WeightAssignment::new(&algebra, [("x", 1, Justification::PullbackFromBg)])?;
    let budget = SearchBudget::for_algebra(&algebra, &weights)?;
    let n = i64::from(n);
    Ok(CatalogEntry::new(
        "real_projective",
        vec![("n", n.to_string())],
        algebra,
        weights,
        Method::Search { budget },
    )
    .expect((n + 1) * (n + 2) / 2, "swct(RP^n) = (n+1)(n+2)/2"))
}

/// `S^n`, by exhaustive search: `n + 2`.
pub fn sphere(n: u32) -> Result<CatalogEntry> {
    if n == 0 {
        return Err(bad("n must be at least 1"));
    }
    let algebra = MonomialAlgebra::new(3, vec![Generator::exterior("x", n)], None)?;
    let weights = WeightAssignment::unit(&algebra);
    let budget = SearchBudget::for_algebra(&algebra, &weights)?;
    Ok(CatalogEntry::new(
        "sphere",
        vec![("n", n.to_string())],
        algebra,
        weights,
        Method::Search { budget },
    )
    .expect(i64::from(n) + 2, "ct(S^n) = n+2"))
}

/// `Sp(2)`, cohomology `∧(x_3, x_7)`.
///
/// Weighted: `w(y) = cwgt(y) = 2`, a non-strict estimator, so the 24 bounds
/// strict covering type only. Unweighted: 20, or 21 with the independence
/// refinement, bounding covering type.
pub fn sp2(weighted: bool, indep: bool) -> Result<CatalogEntry> {
    let algebra = MonomialAlgebra::new(
        3,
        vec![Generator::exterior("x", 3), Generator::exterior("y", 7)],
        None,
    )?;
    let weights = if weighted {
        WeightAssignment::new(&algebra, [("y", 2, Justification::LiteratureCwgt)])?
    } else {
        WeightAssignment::unit(&algebra)
    };
    let sequence =
        WeightedSequence::build(&algebra, &weights, &[FactorSpec::new("x", 1), FactorSpec::new("y", 1)])?;
    let (value, source) = match (weighted, indep) {
        (true, false) => (24, "weighted estimate 1 + w(xy) + (|x|+|y|+|xy|) = 24 on sct"),
        (true, true) => {
            return Err(bad(
                "the weighted sequence has a single minimal-weight factor, so indep cannot apply",
            ))
        }
        (false, false) => (20, "unweighted estimate 1+2+(3+2·7) = 20"),
        (false, true) => (21, "unweighted estimate with independence refinement, 21 on ct"),
    };
    Ok(CatalogEntry::new(
        "sp2",
        vec![
            ("weighted", u8::from(weighted).to_string()),
            ("indep", u8::from(indep).to_string()),
        ],
        algebra,
        weights,
        sequence_method(sequence, indep),
    )
    .expect(value, source))
}

/// The abstract product `x²yz` with `|x| = 2, |y| = 3, |z| = 5` and weights
/// `(2, 2, 3)`: 70.
pub fn abstract_product() -> Result<CatalogEntry> {
    let algebra = MonomialAlgebra::new(
        3,
        vec![
            Generator::new("x", 2, 3),
            Generator::exterior("y", 3),
            Generator::exterior("z", 5),
        ],
        None,
    )?;
    let weights = WeightAssignment::new(
        &algebra,
        [
            ("x", 2, Justification::Manual),
            ("y", 2, Justification::Manual),
            ("z", 3, Justification::Manual),
        ],
    )?;
    let sequence = WeightedSequence::build(
        &algebra,
        &weights,
        &[FactorSpec::new("x", 2), FactorSpec::new("y", 1), FactorSpec::new("z", 1)],
    )?;
    Ok(CatalogEntry::new(
        "abstract_product",
        Vec::new(),
        algebra,
        weights,
        sequence_method(sequence, false),
    )
    .expect(70, "worked table for x²yz: 1+9+(−1+3+5+5+8+8+10+10+12) = 70"))
}

/// Free `Z_p` quotient of a manifold `p`-equivalent to `S^m × S^n`.
///
/// `tau_trivial` selects the ring: trivial transgression gives
/// `F_p[x,y,z]/(x², y^{(m+1)/2}, z²)` with `|z| = n`, otherwise
/// `y^{(n+1)/2}` and `|z| = m`.
pub fn two_spheres_quotient(m: u32, n: u32, p: u32, tau_trivial: bool) -> Result<CatalogEntry> {
    if m % 2 == 0 || n % 2 == 0 || m < 3 || m > n {
        return Err(bad("need odd 3 ≤ m ≤ n"));
    }
    require_odd_prime(p)?;
    let (trunc, zdeg) = if tau_trivial {
        ((m + 1) / 2, n)
    } else {
        ((n + 1) / 2, m)
    };
    let (algebra, weights, sequence) = bockstein_ring(p, trunc, &[("z".into(), zdeg)])?;
    let lens_value = |t: i64, z: i64| t * (2 * z + 2 * (t - 1) + 3) + 2;
    let (mi, ni) = (i64::from(m), i64::from(n));
    let trivial = lens_value((mi + 1) / 2, ni);
    let nontrivial = lens_value((ni + 1) / 2, mi);
    let printed_trivial = (ni + 1) * (2 * mi + ni + 2) / 2 + 2;
    let printed_nontrivial = (mi + 1) * (2 * ni + mi + 2) / 2 + 2;
    let value = if tau_trivial { trivial } else { nontrivial };
    Ok(CatalogEntry::new(
        "two_spheres_quotient",
        vec![
            ("m", m.to_string()),
            ("n", n.to_string()),
            ("p", p.to_string()),
            ("tau", u8::from(!tau_trivial).to_string()),
        ],
        algebra,
        weights,
        sequence_method(sequence, true),
    )
    .expect(value, "lens-times-sphere value for the ring selected by the transgression")
    .printed("printed case τ_m = 0: (n+1)(2m+n+2)/2+2", printed_trivial, trivial)
    .printed("printed case τ_m ≠ 0: (m+1)(2n+m+2)/2+2", printed_nontrivial, nontrivial)
    .finish("the printed case labels are swapped relative to the ring identifications"))
}

/// Quotient of a manifold `p`-equivalent to `S^{m_1} × … × S^{m_n}`, with
/// the transgression nontrivial on the `i`-th sphere (1-based).
pub fn product_of_spheres_quotient(dims: &[u32], i: usize, p: u32) -> Result<CatalogEntry> {
    let n = dims.len();
    if n < 2 {
        return Err(bad("need at least two spheres"));
    }
    if dims.iter().any(|d| d % 2 == 0) || dims.windows(2).any(|w| w[0] > w[1]) {
        return Err(bad("dimensions must be odd and non-decreasing"));
    }
    if dims[1..].iter().any(|&d| d < 3) {
        return Err(bad("all but the first dimension must be at least 3"));
    }
    if dims[0] + dims[1] <= dims[n - 1] {
        return Err(bad("need m_1 + m_2 > m_n"));
    }
    if i == 0 || i > n {
        return Err(bad(format!("i must lie in 1..={n}")));
    }
    require_odd_prime(p)?;
    let zs: Vec<(String, u32)> = dims
        .iter()
        .enumerate()
        .filter(|&(k, _)| k + 1 != i)
        .map(|(k, &d)| (format!("z{}", k + 1), d))
        .collect();
    let (algebra, weights, sequence) = bockstein_ring(p, (dims[i - 1] + 1) / 2, &zs)?;
    let list = dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
    let mut entry = CatalogEntry::new(
        "product_of_spheres_quotient",
        vec![("dims", list), ("i", i.to_string()), ("p", p.to_string())],
        algebra,
        weights,
        sequence_method(sequence, false),
    );
    if i == 1 {
        let value = general_sphere_product_formula(dims);
        entry = entry.expect(
            value,
            "[m_1+2m_2+…+n·m_n+(n+1)] + (m_1−1)(dim M+1−m_1/2)",
        );
    }
    if dims == [9, 11, 13] {
        let value = wct_value(match &entry.method {
            Method::Sequence { sequence, .. } => sequence,
            _ => unreachable!(),
        });
        let printed = match i {
            1 => Some(310),
            3 => Some(398),
            _ => None,
        };
        if let Some(printed) = printed {
            entry.expected = Some(printed);
            entry.expected_source = "quotient of the Stiefel manifold V_3(C^7)".into();
            entry = entry.printed("V_3(C^7) quotient", printed, value);
        }
    }
    Ok(entry.finish("published value for this product of spheres"))
}

/// `[Σ k·m_k + (n+1)] + (m_1−1)(dim M + 1 − m_1/2)`, exactly.
pub fn general_sphere_product_formula(dims: &[u32]) -> i64 {
    let n = dims.len() as i64;
    let weighted: i64 = dims.iter().zip(1..).map(|(&d, k)| k * i64::from(d)).sum();
    let dim: i64 = dims.iter().map(|&d| i64::from(d)).sum();
    let m1 = i64::from(dims[0]);
    // m_1 is odd, so (m_1 − 1) is even and the half is exact
    weighted + n + 1 + (m1 - 1) * (2 * (dim + 1) - m1) / 2
}

/// Stiefel manifold `V_k(C^n)`: exterior on degrees `2(n−k)+1, …, 2n−1`.
pub fn stiefel_dims(k: u32, n: u32) -> Result<Vec<u32>> {
    if k == 0 || k > n {
        return Err(bad("need 1 ≤ k ≤ n"));
    }
    Ok((n - k + 1..=n).map(|j| 2 * j - 1).collect())
}

/// Closed form `n/6·(4n² + 3n(4k−5) + 5) − 3(k−1)²` for `SU(n)/C`.
pub fn su_closed_form(n: i64, k: i64) -> i64 {
    let numerator = n * (4 * n * n + 3 * n * (4 * k - 5) + 5) - 18 * (k - 1) * (k - 1);
    debug_assert_eq!(numerator % 6, 0);
    numerator / 6
}

/// Prime-power special case `8/3·n(n−1)² − (n²−25n+18)/6`.
pub fn su_prime_power_form(n: i64) -> i64 {
    (16 * n * (n - 1) * (n - 1) - (n * n - 25 * n + 18)) / 6
}

/// `SU(n)` modulo its centre, with `F_p` coefficients where `p^r | n`.
pub fn su_quotient(n: u32, p: u32, r: u32) -> Result<CatalogEntry> {
    if n < 2 {
        return Err(bad("n must be at least 2"));
    }
    if !is_prime(p) {
        return Err(bad(format!("p = {p} is not prime")));
    }
    if r == 0 || (p == 2 && r < 2) {
        return Err(bad("need r ≥ 1, and r ≥ 2 when p = 2"));
    }
    let k = p
        .checked_pow(r)
        .filter(|k| n % k == 0)
        .ok_or_else(|| bad(format!("{p}^{r} does not divide {n}")))?;
    let zs: Vec<(String, u32)> = (2..=n)
        .filter(|&i| i != k)
        .map(|i| (format!("z{i}"), 2 * i - 1))
        .collect();
    let (algebra, weights, sequence) = bockstein_ring(p, k, &zs)?;
    let value = su_closed_form(i64::from(n), i64::from(k));
    let mut entry = CatalogEntry::new(
        "su_quotient",
        vec![("n", n.to_string()), ("p", p.to_string()), ("r", r.to_string())],
        algebra,
        weights,
        sequence_method(sequence, false),
    )
    .expect(value, "n/6·(4n²+3n(4k−5)+5) − 3(k−1)² with k = p^r");
    if k == n {
        entry = entry.printed(
            "prime-power form 8/3·n(n−1)² − (n²−25n+18)/6",
            su_prime_power_form(i64::from(n)),
            value,
        );
    }
    Ok(entry.finish("SU(n) quotient closed form"))
}

/// True when the `SU(n)` closed form does not decrease along the
/// prime-power divisors of `n`, taken in increasing order.
pub fn su_monotonicity_check(n: u32) -> bool {
    let values: Vec<i64> = (2..=n)
        .filter(|&k| n % k == 0 && is_prime_power(k))
        .map(|k| su_closed_form(i64::from(n), i64::from(k)))
        .collect();
    values.windows(2).all(|w| w[0] <= w[1])
}

fn is_prime_power(k: u32) -> bool {
    (2..=k).find(|d| k % d == 0).is_some_and(|p| is_power_of(u64::from(k), u64::from(p)))
}

/// Which exterior generator the quotient ring drops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Omission {
    /// The `i`-th generator (1-based); `(|z_i|+1)/2` must be a power of `p`.
    Index(usize),
    /// Whichever choice gives the smallest value, a bound that holds no
    /// matter which transgression is nontrivial.
    Minimal,
}

/// Quotient of a simply connected Lie group with `H*(G; F_p)` exterior on
/// odd generators of the given degrees, by a central cyclic subgroup.
pub fn lie_quotient(dims: &[u32], omission: Omission, p: u32) -> Result<CatalogEntry> {
    if dims.is_empty() {
        return Err(bad("need at least one generator"));
    }
    if dims.iter().any(|&d| d % 2 == 0 || d < 3) {
        return Err(bad("generator degrees must be odd and at least 3"));
    }
    require_odd_prime(p)?;
    let build = |i: usize| {
        let zs: Vec<(String, u32)> = dims
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(k, &d)| (format!("z{}", k + 1), d))
            .collect();
        bockstein_ring(p, (dims[i] + 1) / 2, &zs)
    };
    let index = match omission {
        Omission::Index(i) => {
            if i == 0 || i > dims.len() {
                return Err(bad(format!("i must lie in 1..={}", dims.len())));
            }
            let s = (dims[i - 1] + 1) / 2;
            if !is_power_of(u64::from(s), u64::from(p)) {
                return Err(bad(format!("truncation height {s} is not a power of {p}")));
            }
            i - 1
        }
        Omission::Minimal => {
            let mut best: Option<(i64, usize)> = None;
            for i in 0..dims.len() {
                let value = wct_value(&build(i)?.2);
                if best.is_none_or(|(v, _)| value < v) {
                    best = Some((value, i));
                }
            }
            best.expect("dims is nonempty").1
        }
    };
    let (algebra, weights, sequence) = build(index)?;
    let list = dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
    let mut entry = CatalogEntry::new(
        "lie_quotient",
        vec![
            ("dims", list),
            ("i", (index + 1).to_string()),
            ("p", p.to_string()),
        ],
        algebra,
        weights,
        sequence_method(sequence.clone(), false),
    );
    if omission == Omission::Minimal {
        entry = entry.note("omitted generator chosen to minimize the value over all choices");
    }
    let mut sorted = dims.to_vec();
    sorted.sort_unstable();
    if sorted == [3, 3, 5, 5, 7] && omission == Omission::Minimal {
        entry = entry
            .expect(130, "group locally isomorphic to SU(3)×SU(4) with π_1 = Z_12")
            .printed("SU(3)×SU(4) quotient", 130, wct_value(&sequence));
    }
    Ok(entry.finish("published value for this Lie group"))
}

/// `M × N` with `M` symplectically aspherical of dimension `2m` and `N`
/// symplectic of dimension `2n`: sequence `(ω×m, τ×n)`, `w(ω) = 2`.
pub fn symplectic_product(m: u32, n: u32) -> Result<CatalogEntry> {
    if m == 0 || n == 0 {
        return Err(bad("m and n must be at least 1"));
    }
    let algebra = MonomialAlgebra::new(
        3,
        vec![Generator::new("omega", 2, m + 1), Generator::new("tau", 2, n + 1)],
        None,
    )?;
    let weights = WeightAssignment::new(&algebra, [("omega", 2, Justification::LiteratureSwgt)])?;
    let sequence = WeightedSequence::build(
        &algebra,
        &weights,
        &[FactorSpec::new("omega", m), FactorSpec::new("tau", n)],
    )?;
    let (mi, ni) = (i64::from(m), i64::from(n));
    let value = 2 * mi * (mi + 2 * ni + 1) + (ni + 1) * (ni + 1);
    let printed = 2 * mi * (2 * mi + 2 * ni + 1) + (ni + 1) * (ni + 1);
    Ok(CatalogEntry::new(
        "symplectic_product",
        vec![("m", m.to_string()), ("n", n.to_string())],
        algebra,
        weights,
        sequence_method(sequence, false),
    )
    .expect(value, "summing the maximal subproducts τ,…,τ^n, τ^{n−1}ω, τ^nω, …, τ^nω^m")
    .printed("printed closed form 2m(2m+2n+1)+(n+1)²", printed, value)
    .finish("the printed closed form exceeds the sum of its own table by 2m²"))
}

/// Symplectically aspherical `M^{2m}`: category `2m+1`, bound
/// `(2m+1)(m+1)`; the weighted estimate of `ω^m` is kept for comparison.
pub fn symplectically_aspherical(m: u32) -> Result<CatalogEntry> {
    if m == 0 {
        return Err(bad("m must be at least 1"));
    }
    let algebra = MonomialAlgebra::new(3, vec![Generator::new("omega", 2, m + 1)], None)?;
    let weights = WeightAssignment::new(&algebra, [("omega", 2, Justification::LiteratureSwgt)])?;
    let sequence = WeightedSequence::build(&algebra, &weights, &[FactorSpec::new("omega", m)])?;
    let mi = i64::from(m);
    let cat = 2 * u64::from(m) + 1;
    let comparison = wct_value(&sequence);
    Ok(CatalogEntry::new(
        "symplectically_aspherical",
        vec![("m", m.to_string())],
        algebra,
        weights,
        Method::Category { cat, sequence },
    )
    .expect((2 * mi + 1) * (mi + 1), "category bound with cat = 2m+1: (2m+1)(m+1)")
    .printed("weighted comparison wct(ω^m) = 2m(m+1)+1", 2 * mi * (mi + 1) + 1, comparison)
    .finish("the weight-1 row contributes −1, so the weighted comparison value is 2m(m+1)"))
}

/// Dold manifold `P(r, s)` with `Z_2` coefficients, all weights 1.
pub fn dold(r: u32, s: u32) -> Result<CatalogEntry> {
    if r == 0 && s == 0 {
        return Err(bad("r and s cannot both be 0"));
    }
    let mut gens = Vec::new();
    let mut spec = Vec::new();
    if r > 0 {
        gens.push(Generator::new("x", 1, r + 1));
        spec.push(FactorSpec::new("x", r));
    }
    if s > 0 {
        gens.push(Generator::new("y", 2, s + 1));
        spec.push(FactorSpec::new("y", s));
    }
    let algebra = MonomialAlgebra::new(2, gens, None)?;
    let weights = WeightAssignment::unit(&algebra);
    let sequence = WeightedSequence::build(&algebra, &weights, &spec)?;
    let (r, s) = (i64::from(r), i64::from(s));
    let triangular = r * (r + 1) / 2;
    let value = 1 + (r + s) + triangular + s * (2 * r + s + 1);
    let intermediate = 1 + (r + 2 * s) + triangular + s * (2 * r + s + 1);
    let closed = 1 + (s + r) * (s + r + 1) - triangular;
    Ok(CatalogEntry::new(
        "dold",
        vec![("r", r.to_string()), ("s", s.to_string())],
        algebra,
        weights,
        sequence_method(sequence, false),
    )
    .expect(value, "unweighted estimate 1+(r+s)+[r(r+1)/2 + s(2r+s+1)] for x^r·y^s")
    .printed("printed intermediate sum 1+(r+2s)+Σi+Σ2i", intermediate, value)
    .printed("printed closed form 1+(s+r)(s+r+1)−r(r+1)/2", closed, value)
    .finish("the printed expressions do not match the unweighted estimate of x^r·y^s"))
}

/// `key=value` parameters for [`build`].
#[derive(Debug, Clone, Default)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn parse<'a>(pairs: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for pair in pairs {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got `{pair}`")))?;
            if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
                return Err(bad(format!("parameter `{k}` given twice")));
            }
        }
        Ok(Params(map))
    }

    fn take(&mut self, key: &str) -> Option<String> {
        self.0.remove(key)
    }

    fn int(&mut self, key: &str) -> Result<Option<u32>> {
        self.take(key).map(|v| parse_bounded(key, &v)).transpose()
    }

    fn req(&mut self, key: &str) -> Result<u32> {
        self.int(key)?.ok_or_else(|| bad(format!("missing parameter `{key}`")))
    }

    fn flag(&mut self, key: &str, default: bool) -> Result<bool> {
        match self.int(key)? {
            None => Ok(default),
            Some(0) => Ok(false),
            Some(1) => Ok(true),
            Some(v) => Err(bad(format!("`{key}` must be 0 or 1, got {v}"))),
        }
    }

    fn list(&mut self, key: &str) -> Result<Option<Vec<u32>>> {
        self.take(key)
            .map(|v| {
                let dims: Vec<u32> = v
                    .split(',')
                    .map(|d| parse_bounded(key, d.trim()))
                    .collect::<Result<_>>()?;
                if dims.len() > MAX_PARAM as usize {
                    return Err(bad(format!("`{key}` has more than {MAX_PARAM} entries")));
                }
                Ok(dims)
            })
            .transpose()
    }

    fn finish(self) -> Result<()> {
        match self.0.keys().next() {
            Some(k) => Err(bad(format!("unknown parameter `{k}`"))),
            None => Ok(()),
        }
    }
}

fn parse_bounded(key: &str, v: &str) -> Result<u32> {
    match v.parse::<u32>() {
        Ok(n) if n <= MAX_PARAM => Ok(n),
        Ok(_) => Err(bad(format!("`{key}` = {v} exceeds the limit {MAX_PARAM}"))),
        Err(_) => Err(bad(format!("`{key}` must be a non-negative integer, got `{v}`"))),
    }
}

fn require_search_size(n: u32) -> Result<()> {
    if n > MAX_SEARCH_DIMENSION {
        return Err(bad(format!(
            "dimension {n} is above the search limit {MAX_SEARCH_DIMENSION}"
        )));
    }
    Ok(())
}

/// Entry names accepted by [`build`].
pub const ENTRY_NAMES: &[&str] = &[
    "abstract_product",
    "lens",
    "lens_times_sphere",
    "highly_connected",
    "bg_cyclic_skeleton",
    "real_projective",
    "sphere",
    "sp2",
    "two_spheres_quotient",
    "product_of_spheres_quotient",
    "stiefel",
    "su_quotient",
    "lie_quotient",
    "symplectic_product",
    "symplectically_aspherical",
    "dold",
];

const DEFAULT_ODD_PRIME: u32 = 3;

/// Builds an entry by name. Omitted primes default to 3.
pub fn build(name: &str, mut params: Params) -> Result<CatalogEntry> {
    let p = |params: &mut Params| -> Result<u32> { Ok(params.int("p")?.unwrap_or(DEFAULT_ODD_PRIME)) };
    let entry = match name {
        "abstract_product" => abstract_product()?,
        "lens" => lens(params.req("n")?, p(&mut params)?)?,
        "lens_times_sphere" => lens_times_sphere(params.req("n")?, params.req("m")?, p(&mut params)?)?,
        "highly_connected" => highly_connected(params.req("n")?, p(&mut params)?)?,
        "bg_cyclic_skeleton" => {
            let n = params.req("n")?;
            let m = params.req("m")?;
            let prime = match params.int("p")? {
                Some(v) => v,
                None => (2..=m).find(|&d| m % d == 0 && is_prime(d) && d % 2 == 1).unwrap_or(2),
            };
            bg_cyclic_skeleton(n, m, prime)?
        }
        "real_projective" => real_projective(params.req("n")?)?,
        "sphere" => sphere(params.req("n")?)?,
        "sp2" => sp2(params.flag("weighted", true)?, params.flag("indep", false)?)?,
        "two_spheres_quotient" => {
            let (m, n, prime) = (params.req("m")?, params.req("n")?, p(&mut params)?);
            two_spheres_quotient(m, n, prime, !params.flag("tau", false)?)?
        }
        "product_of_spheres_quotient" | "stiefel" => {
            let dims = match params.list("dims")? {
                Some(d) => d,
                None if name == "stiefel" => stiefel_dims(params.req("k")?, params.req("n")?)?,
                None => return Err(bad("missing parameter `dims`")),
            };
            let i = params.int("i")?.unwrap_or(1) as usize;
            let mut entry = product_of_spheres_quotient(&dims, i, p(&mut params)?)?;
            if name == "stiefel" {
                entry.name = "stiefel".into();
            }
            entry
        }
        "su_quotient" => su_quotient(params.req("n")?, params.req("p")?, params.req("r")?)?,
        "lie_quotient" => {
            let dims = params.list("dims")?.ok_or_else(|| bad("missing parameter `dims`"))?;
            let omission = match params.int("i")? {
                Some(i) => Omission::Index(i as usize),
                None => Omission::Minimal,
            };
            lie_quotient(&dims, omission, p(&mut params)?)?
        }
        "symplectic_product" => symplectic_product(params.req("m")?, params.req("n")?)?,
        "symplectically_aspherical" => symplectically_aspherical(params.req("m")?)?,
        "dold" => dold(params.req("r")?, params.req("s")?)?,
        other => return Err(bad(format!("unknown catalog entry `{other}`"))),
    };
    params.finish()?;
    Ok(entry)
}

/// The full grid exercised by `catalog --all` and the acceptance suite.
pub fn standard_grid() -> Vec<(String, Vec<String>)> {
    let mut grid: Vec<(String, Vec<String>)> = Vec::new();
    let mut add = |name: &str, params: Vec<String>| grid.push((name.to_string(), params));
    add("abstract_product", vec![]);
    for p in [3, 5, 7] {
        for n in 1..=10 {
            add("lens", vec![format!("n={n}"), format!("p={p}")]);
        }
    }
    for n in 1..=6 {
        for m in 1..=9 {
            add("lens_times_sphere", vec![format!("n={n}"), format!("m={m}")]);
        }
    }
    for n in 1..=10 {
        add("highly_connected", vec![format!("n={n}")]);
    }
    for (w, i) in [(1, 0), (0, 0), (0, 1)] {
        add("sp2", vec![format!("weighted={w}"), format!("indep={i}")]);
    }
    for n in 1..=6 {
        add("real_projective", vec![format!("n={n}")]);
    }
    for n in 1..=8 {
        add("sphere", vec![format!("n={n}")]);
    }
    for (m, p) in [(3, 3), (5, 5), (4, 2), (2, 2)] {
        for n in 1..=8 {
            add("bg_cyclic_skeleton", vec![format!("n={n}"), format!("m={m}"), format!("p={p}")]);
        }
    }
    for n in 2..=8u32 {
        for p in [2u32, 3, 5, 7] {
            for r in 1..=3 {
                let k = p.pow(r);
                if n % k == 0 && !(p == 2 && r < 2) {
                    add("su_quotient", vec![format!("n={n}"), format!("p={p}"), format!("r={r}")]);
                }
            }
        }
    }
    add("stiefel", vec!["dims=9,11,13".into(), "i=1".into()]);
    add("stiefel", vec!["dims=9,11,13".into(), "i=3".into()]);
    let odd: Vec<u32> = (3..=15).step_by(2).collect();
    for &a in &odd {
        for &b in odd.iter().filter(|&&b| b >= a) {
            for &c in odd.iter().filter(|&&c| c >= b && a + b > c) {
                add("product_of_spheres_quotient", vec![format!("dims={a},{b},{c}"), "i=1".into()]);
            }
        }
    }
    for m in (3..=9).step_by(2) {
        for n in (m..=11).step_by(2) {
            for tau in 0..=1 {
                add(
                    "two_spheres_quotient",
                    vec![format!("m={m}"), format!("n={n}"), format!("tau={tau}")],
                );
            }
        }
    }
    add("lie_quotient", vec!["dims=3,5,3,5,7".into()]);
    for m in 1..=4 {
        for n in 1..=4 {
            add("symplectic_product", vec![format!("m={m}"), format!("n={n}")]);
        }
    }
    for m in 1..=5 {
        add("symplectically_aspherical", vec![format!("m={m}")]);
    }
    for r in 0..=4 {
        for s in 0..=4 {
            if r + s > 0 {
                add("dold", vec![format!("r={r}"), format!("s={s}")]);
            }
        }
    }
    grid
}
