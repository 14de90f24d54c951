//! JSON problem documents.

use std::collections::BTreeMap;
use std::fmt;

use covtype::{
    FactorSpec, Generator, Justification, MonomialAlgebra, Nilpotency, Refinements,
    WeightAssignment, WeightedSequence,
};
use serde::Deserialize;
use serde_json::Value;

/// Guards against documents whose tables would not fit in memory.
pub const MAX_TOP_DEGREE: u64 = 100_000;
const MAX_COPIES: u64 = 1_000;
const MAX_TOTAL_WEIGHT: u64 = 5_000;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub prime: u32,
    pub generators: Vec<GeneratorDoc>,
    #[serde(default)]
    pub degree_cap: Option<u32>,
    #[serde(default)]
    pub weights: BTreeMap<String, WeightDoc>,
    #[serde(default)]
    pub sequence: Vec<FactorSpec>,
    #[serde(default)]
    pub hdim: Option<i64>,
    #[serde(default)]
    pub refinements: RefinementFlags,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub name: String,
    pub degree: u32,
    /// A positive integer or the string `"unbounded"`.
    pub nilpotency: Value,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightDoc {
    pub weight: u32,
    #[serde(default = "manual")]
    pub justification: Justification,
}

fn manual() -> Justification {
    Justification::Manual
}

#[derive(Debug, Default, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RefinementFlags {
    #[serde(default)]
    pub hdim: bool,
    #[serde(default)]
    pub indep: bool,
}

/// An input error with the place in the document it came from.
#[derive(Debug)]
pub struct InputError {
    pub code: String,
    pub location: Option<String>,
    pub message: String,
}

impl InputError {
    pub fn new(code: &str, location: Option<String>, message: impl Into<String>) -> Self {
        InputError {
            code: code.to_string(),
            location,
            message: message.into(),
        }
    }

    pub fn at(location: impl Into<String>) -> impl FnOnce(covtype::Error) -> InputError {
        let location = location.into();
        move |e| InputError::new(e.code(), Some(location), e.to_string())
    }
}

impl From<covtype::Error> for InputError {
    fn from(e: covtype::Error) -> Self {
        InputError::new(e.code(), None, e.to_string())
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.location {
            Some(loc) => write!(f, "{} at {}: {}", self.code, loc, self.message),
            None => write!(f, "{}: {}", self.code, self.message),
        }
    }
}

/// A validated document.
#[derive(Debug)]
pub struct Problem {
    pub algebra: MonomialAlgebra,
    pub weights: WeightAssignment,
    pub sequence: Option<WeightedSequence>,
    pub hdim: Option<i64>,
    pub refinements: RefinementFlags,
}

impl Problem {
    pub fn parse(text: &str) -> Result<Problem, InputError> {
        let doc: ProblemDocument = serde_json::from_str(text).map_err(|e| {
            InputError::new(
                "PARSE_ERROR",
                Some(format!("line {}, column {}", e.line(), e.column())),
                e.to_string(),
            )
        })?;
        doc.validate()
    }

    /// Refinement settings after merging command-line requests.
    pub fn refinements(&self, hdim: bool, indep: bool) -> Result<Refinements, InputError> {
        let want_hdim = hdim || self.refinements.hdim;
        let hdim = match (want_hdim, self.hdim) {
            (false, _) => None,
            (true, Some(h)) => Some(h),
            (true, None) => {
                return Err(InputError::new(
                    "BAD_PARAM",
                    Some("hdim".into()),
                    "the hdim refinement needs an `hdim` value in the document",
                ))
            }
        };
        Ok(Refinements {
            hdim,
            indep: indep || self.refinements.indep,
        })
    }
}

impl ProblemDocument {
    fn validate(self) -> Result<Problem, InputError> {
        let mut generators = Vec::with_capacity(self.generators.len());
        for (i, g) in self.generators.iter().enumerate() {
            let loc = format!("generators[{i}].nilpotency");
            let nilpotency = match &g.nilpotency {
                Value::String(s) if s == "unbounded" => Nilpotency::Unbounded,
                Value::Number(n) => match n.as_u64().and_then(|v| u32::try_from(v).ok()) {
                    Some(v) => Nilpotency::Bounded(v),
                    None => {
                        return Err(InputError::new("BAD_NILPOTENCY", Some(loc), format!("`{n}` is not a valid nilpotency")))
                    }
                },
                other => {
                    return Err(InputError::new(
                        "BAD_NILPOTENCY",
                        Some(loc),
                        format!("expected an integer or \"unbounded\", got {other}"),
                    ))
                }
            };
            generators.push(Generator {
                name: g.name.clone(),
                degree: g.degree,
                nilpotency,
            });
        }
        let size: u64 = match self.degree_cap {
            Some(cap) => u64::from(cap),
            None => generators
                .iter()
                .map(|g| {
                    let e = g.nilpotency.max_exponent().map_or(0, u64::from);
                    e.saturating_mul(u64::from(g.degree))
                })
                .fold(0u64, u64::saturating_add),
        };
        if size > MAX_TOP_DEGREE {
            return Err(InputError::new(
                "BAD_PARAM",
                Some("generators".into()),
                format!("algebra reaches degree {size}; the limit is {MAX_TOP_DEGREE}"),
            ));
        }
        let algebra = MonomialAlgebra::new(self.prime, generators, self.degree_cap)
            .map_err(InputError::at("generators"))?;

        let mut weights = WeightAssignment::unit(&algebra);
        for (name, w) in &self.weights {
            weights = weights
                .with(&algebra, name, w.weight, w.justification)
                .map_err(InputError::at(format!("weights.{name}")))?;
        }

        let sequence = if self.sequence.is_empty() {
            None
        } else {
            let copies: u64 = self.sequence.iter().map(|f| u64::from(f.copies)).sum();
            if copies > MAX_COPIES {
                return Err(InputError::new(
                    "BAD_PARAM",
                    Some("sequence".into()),
                    format!("{copies} factor copies; the limit is {MAX_COPIES}"),
                ));
            }
            for (i, spec) in self.sequence.iter().enumerate() {
                WeightedSequence::build(&algebra, &weights, std::slice::from_ref(spec))
                    .map_err(InputError::at(format!("sequence[{i}]")))?;
            }
            let seq = WeightedSequence::build(&algebra, &weights, &self.sequence)
                .map_err(InputError::at("sequence"))?;
            if seq.weight() > MAX_TOTAL_WEIGHT {
                return Err(InputError::new(
                    "BAD_PARAM",
                    Some("sequence".into()),
                    format!("total weight {}; the limit is {MAX_TOTAL_WEIGHT}", seq.weight()),
                ));
            }
            Some(seq)
        };

        Ok(Problem {
            algebra,
            weights,
            sequence,
            hdim: self.hdim,
            refinements: self.refinements,
        })
    }
}
