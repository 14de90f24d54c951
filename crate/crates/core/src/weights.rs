//! Weight estimators and weighted factor sequences.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, MonomialAlgebra};
use crate::error::{Error, Result};

/// Why a generator carries its weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Justification {
    /// Weight 1, valid for every nonzero class.
    DefaultOne,
    /// Mod-p Bockstein of a degree-one class: weight 2.
    Bockstein,
    /// Pulled back from a classifying space, where weight equals degree.
    PullbackFromBg,
    /// A category-weight value taken from the literature; not strict.
    LiteratureCwgt,
    /// A strict category-weight value taken from the literature.
    LiteratureSwgt,
    Manual,
}

impl Justification {
    /// Whether this tag certifies a lower bound for strict category weight.
    pub fn is_strict(self) -> bool {
        self != Justification::LiteratureCwgt
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Justification::DefaultOne => "DEFAULT_ONE",
            Justification::Bockstein => "BOCKSTEIN",
            Justification::PullbackFromBg => "PULLBACK_FROM_BG",
            Justification::LiteratureCwgt => "LITERATURE_CWGT",
            Justification::LiteratureSwgt => "LITERATURE_SWGT",
            Justification::Manual => "MANUAL",
        }
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-generator weights. Unannotated generators get weight 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment {
    weights: Vec<u32>,
    justifications: Vec<Justification>,
}

impl WeightAssignment {
    /// Every generator at weight 1.
    pub fn unit(algebra: &MonomialAlgebra) -> Self {
        WeightAssignment {
            weights: vec![1; algebra.rank()],
            justifications: vec![Justification::DefaultOne; algebra.rank()],
        }
    }

    pub fn new<'a>(
        algebra: &MonomialAlgebra,
        entries: impl IntoIterator<Item = (&'a str, u32, Justification)>,
    ) -> Result<Self> {
        let mut wa = Self::unit(algebra);
        for (name, weight, justification) in entries {
            wa = wa.with(algebra, name, weight, justification)?;
        }
        Ok(wa)
    }

    /// Sets the weight of one generator.
    pub fn with(
        mut self,
        algebra: &MonomialAlgebra,
        name: &str,
        weight: u32,
        justification: Justification,
    ) -> Result<Self> {
        let index = algebra
            .generator_index(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        let degree = algebra.generators()[index].degree;
        if weight == 0 || weight > degree {
            return Err(Error::WeightExceedsDegree {
                class: name.to_string(),
                weight,
                degree,
            });
        }
        let bad = |reason: &str| Error::BadJustification {
            class: name.to_string(),
            justification: justification.to_string(),
            reason: reason.to_string(),
        };
        match justification {
            Justification::Bockstein if weight != 2 || degree != 2 => {
                return Err(bad("a Bockstein class has degree 2 and weight 2"));
            }
            Justification::DefaultOne if weight != 1 => {
                return Err(bad("the default weight is 1"));
            }
            _ => {}
        }
        self.weights[index] = weight;
        self.justifications[index] = justification;
        Ok(self)
    }

    pub fn weight(&self, generator: usize) -> u32 {
        self.weights[generator]
    }

    pub fn justification(&self, generator: usize) -> Justification {
        self.justifications[generator]
    }

    /// True when no weight relies on a non-strict category-weight value.
    pub fn is_strict(&self) -> bool {
        self.justifications.iter().all(|j| j.is_strict())
    }

    /// Superadditive weight of a monomial: sum of its generators' weights
    /// counted with multiplicity.
    pub fn factor_weight(&self, m: &Monomial) -> u32 {
        m.exponents()
            .iter()
            .zip(&self.weights)
            .map(|(e, w)| e * w)
            .sum()
    }
}

/// One entry of a sequence: `copies` equal factors of the given weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub monomial: Monomial,
    pub weight: u32,
    pub copies: u32,
}

/// Textual form of a factor, as found in problem documents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    pub factor: String,
    #[serde(default = "one")]
    pub copies: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<u32>,
}

fn one() -> u32 {
    1
}

impl FactorSpec {
    pub fn new(factor: impl Into<String>, copies: u32) -> Self {
        FactorSpec {
            factor: factor.into(),
            copies,
            weight: None,
        }
    }

    pub fn weighted(factor: impl Into<String>, copies: u32, weight: u32) -> Self {
        FactorSpec {
            factor: factor.into(),
            copies,
            weight: Some(weight),
        }
    }
}

/// A multiset of weighted factors whose total product is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSequence {
    algebra: MonomialAlgebra,
    factors: Vec<Factor>,
    strict: bool,
    product: Monomial,
}

impl WeightedSequence {
    pub fn new(algebra: MonomialAlgebra, factors: Vec<Factor>, strict: bool) -> Result<Self> {
        let mut product = algebra.unit();
        for f in &factors {
            let text = algebra.format(&f.monomial);
            if f.copies == 0 {
                return Err(Error::ZeroCopies(text));
            }
            if f.weight == 0 || f.weight > f.monomial.degree() {
                return Err(Error::WeightExceedsDegree {
                    class: text,
                    weight: f.weight,
                    degree: f.monomial.degree(),
                });
            }
            let power = algebra.pow(&f.monomial, f.copies)?.ok_or(Error::ZeroProduct)?;
            product = algebra.mul(&product, &power)?.ok_or(Error::ZeroProduct)?;
        }
        Ok(WeightedSequence {
            algebra,
            factors,
            strict,
            product,
        })
    }

    /// Parses factor texts; omitted weights fall back to
    /// [`WeightAssignment::factor_weight`].
    pub fn build(
        algebra: &MonomialAlgebra,
        weights: &WeightAssignment,
        entries: &[FactorSpec],
    ) -> Result<Self> {
        let factors = entries
            .iter()
            .map(|e| {
                let monomial = algebra.parse_monomial(&e.factor)?;
                let weight = e.weight.unwrap_or_else(|| weights.factor_weight(&monomial));
                Ok(Factor {
                    monomial,
                    weight,
                    copies: e.copies,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra.clone(), factors, weights.is_strict())
    }

    pub fn algebra(&self) -> &MonomialAlgebra {
        &self.algebra
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// Total weight, copies included; 0 for the empty sequence.
    pub fn weight(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| u64::from(f.weight) * u64::from(f.copies))
            .sum()
    }

    pub fn product(&self) -> &Monomial {
        &self.product
    }

    /// Dimension of the product, −1 for the empty sequence.
    pub fn product_dimension(&self) -> i64 {
        if self.factors.is_empty() {
            -1
        } else {
            i64::from(self.product.degree())
        }
    }

    pub fn copy_count(&self) -> usize {
        self.factors.iter().map(|f| f.copies as usize).sum()
    }

    /// Every copy as a `(weight, dimension)` item, in declaration order.
    pub fn items(&self) -> Vec<(u32, u32)> {
        self.factors
            .iter()
            .flat_map(|f| std::iter::repeat_n((f.weight, f.monomial.degree()), f.copies as usize))
            .collect()
    }

    /// Index of the entry owning each expanded copy.
    pub fn item_owners(&self) -> Vec<usize> {
        self.factors
            .iter()
            .enumerate()
            .flat_map(|(i, f)| std::iter::repeat_n(i, f.copies as usize))
            .collect()
    }

    /// The same factors, all at weight 1 (always a strict estimator).
    pub fn with_unit_weights(&self) -> Self {
        WeightedSequence {
            algebra: self.algebra.clone(),
            factors: self
                .factors
                .iter()
                .map(|f| Factor { weight: 1, ..f.clone() })
                .collect(),
            strict: true,
            product: self.product.clone(),
        }
    }

    /// Reorders entries by the given permutation of entry indices.
    pub fn permuted(&self, order: &[usize]) -> Self {
        WeightedSequence {
            factors: order.iter().map(|&i| self.factors[i].clone()).collect(),
            ..self.clone()
        }
    }

    /// Short text like `(x, y×3, z)`.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|f| {
                let text = self.algebra.format(&f.monomial);
                if f.copies == 1 {
                    text
                } else {
                    format!("{text}×{}", f.copies)
                }
            })
            .collect();
        format!("({})", parts.join(", "))
    }
}
