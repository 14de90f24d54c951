//! Monomial presentations of graded-commutative algebras over a prime field.
//!
//! An algebra is a tensor product of truncated polynomial algebras
//! `F_p[g]/(g^e)` (exterior algebras being the case `e = 2`), optionally
//! truncated above a fixed degree. In such an algebra a product of monomials
//! is either zero or a monomial with unit coefficient, so deciding
//! non-vanishing reduces to exponent bookkeeping.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Least exponent at which a generator vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Nilpotency {
    Bounded(u32),
    Unbounded,
}

impl Nilpotency {
    /// Largest exponent that is still nonzero, `None` when unbounded.
    pub fn max_exponent(self) -> Option<u32> {
        match self {
            Nilpotency::Bounded(e) => Some(e - 1),
            Nilpotency::Unbounded => None,
        }
    }
}

impl fmt::Display for Nilpotency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nilpotency::Bounded(e) => write!(f, "{e}"),
            Nilpotency::Unbounded => f.write_str("unbounded"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub nilpotency: Nilpotency,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32, nilpotency: u32) -> Self {
        Generator {
            name: name.into(),
            degree,
            nilpotency: Nilpotency::Bounded(nilpotency),
        }
    }

    /// A generator with vanishing square.
    pub fn exterior(name: impl Into<String>, degree: u32) -> Self {
        Self::new(name, degree, 2)
    }

    pub fn polynomial(name: impl Into<String>, degree: u32) -> Self {
        Generator {
            name: name.into(),
            degree,
            nilpotency: Nilpotency::Unbounded,
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = u64::from(n);
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A validated presentation `H*(X; F_p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialAlgebra {
    prime: u32,
    generators: Vec<Generator>,
    degree_cap: Option<u32>,
    fingerprint: u64,
}

impl MonomialAlgebra {
    pub fn new(prime: u32, generators: Vec<Generator>, degree_cap: Option<u32>) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::NonPrime(prime));
        }
        for (i, g) in generators.iter().enumerate() {
            if !is_identifier(&g.name) {
                return Err(Error::Parse {
                    text: g.name.clone(),
                    pos: 0,
                    reason: "generator names must be identifiers".into(),
                });
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
            if g.degree == 0 {
                return Err(Error::BadDegree(g.name.clone()));
            }
            if let Nilpotency::Bounded(e) = g.nilpotency {
                if e < 2 {
                    return Err(Error::BadNilpotency {
                        name: g.name.clone(),
                        reason: format!("nilpotency {e} is below 2"),
                    });
                }
            }
            if prime != 2 && g.degree % 2 == 1 && g.nilpotency != Nilpotency::Bounded(2) {
                return Err(Error::OddDegreeNotSquareZero(g.name.clone()));
            }
            if let Some(cap) = degree_cap {
                if cap < g.degree {
                    return Err(Error::BadDegreeCap {
                        cap,
                        name: g.name.clone(),
                        degree: g.degree,
                    });
                }
            }
        }
        let mut hasher = DefaultHasher::new();
        (prime, &generators, degree_cap).hash(&mut hasher);
        Ok(MonomialAlgebra {
            prime,
            generators,
            degree_cap,
            fingerprint: hasher.finish(),
        })
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn degree_cap(&self) -> Option<u32> {
        self.degree_cap
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn unit(&self) -> Monomial {
        Monomial {
            algebra: self.fingerprint,
            exponents: vec![0; self.rank()],
            degree: 0,
        }
    }

    /// The class of the `index`-th generator.
    pub fn generator(&self, index: usize) -> Monomial {
        let mut exponents = vec![0; self.rank()];
        exponents[index] = 1;
        Monomial {
            algebra: self.fingerprint,
            exponents,
            degree: self.generators[index].degree,
        }
    }

    fn degree_of(&self, exponents: &[u32]) -> u64 {
        exponents
            .iter()
            .zip(&self.generators)
            .map(|(&e, g)| u64::from(e) * u64::from(g.degree))
            .sum()
    }

    fn exponents_nonzero(&self, exponents: &[u32], degree: u64) -> bool {
        let within_nilpotency = exponents
            .iter()
            .zip(&self.generators)
            .all(|(&e, g)| g.nilpotency.max_exponent().is_none_or(|m| e <= m));
        within_nilpotency && self.degree_cap.is_none_or(|cap| degree <= u64::from(cap))
    }

    /// Monomial with the given exponent vector, `None` when it vanishes.
    pub fn monomial(&self, exponents: &[u32]) -> Result<Option<Monomial>> {
        if exponents.len() != self.rank() {
            return Err(Error::AlgebraMismatch);
        }
        let degree = self.degree_of(exponents);
        if !self.exponents_nonzero(exponents, degree) {
            return Ok(None);
        }
        if degree > u64::from(u32::MAX) {
            return Err(Error::DegreeOverflow(degree));
        }
        Ok(Some(Monomial {
            algebra: self.fingerprint,
            exponents: exponents.to_vec(),
            degree: degree as u32,
        }))
    }

    fn check(&self, m: &Monomial) -> Result<()> {
        if m.algebra == self.fingerprint {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Cup product of two monomials; `None` is the zero class.
    pub fn mul(&self, a: &Monomial, b: &Monomial) -> Result<Option<Monomial>> {
        self.check(a)?;
        self.check(b)?;
        let exponents: Vec<u32> = a
            .exponents
            .iter()
            .zip(&b.exponents)
            .map(|(x, y)| x + y)
            .collect();
        self.monomial(&exponents)
    }

    /// `m^k`, `None` when it vanishes.
    pub fn pow(&self, m: &Monomial, k: u32) -> Result<Option<Monomial>> {
        self.check(m)?;
        let exponents: Vec<u32> = m.exponents.iter().map(|e| e * k).collect();
        self.monomial(&exponents)
    }

    /// Parses `name(^int)?(*name(^int)?)*`; repeated names accumulate.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let exponents = parse_exponents(text, |name| self.generator_index(name), self.rank())?;
        self.monomial(&exponents)?
            .ok_or_else(|| Error::ZeroMonomial(text.trim().to_string()))
    }

    pub fn format(&self, m: &Monomial) -> String {
        if m.is_unit() {
            return "1".to_string();
        }
        m.exponents
            .iter()
            .zip(&self.generators)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, g)| {
                if e == 1 {
                    g.name.clone()
                } else {
                    format!("{}^{}", g.name, e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Largest degree carried by a nonzero monomial, `None` if unbounded.
    pub fn top_degree(&self) -> Option<u32> {
        let bound = match self.degree_cap {
            Some(cap) => u64::from(cap),
            None => {
                let mut total = 0u64;
                for g in &self.generators {
                    total += u64::from(g.nilpotency.max_exponent()?) * u64::from(g.degree);
                }
                total
            }
        } as usize;
        let mut reachable = vec![false; bound + 1];
        reachable[0] = true;
        for g in &self.generators {
            let d = g.degree as usize;
            let max_e = g.nilpotency.max_exponent().map_or(bound / d, |m| m as usize);
            let prev = reachable.clone();
            for (base, _) in prev.iter().enumerate().filter(|(_, &r)| r) {
                for e in 1..=max_e {
                    let t = base + e * d;
                    if t > bound {
                        break;
                    }
                    reachable[t] = true;
                }
            }
        }
        reachable.iter().rposition(|&r| r).map(|d| d as u32)
    }

    /// All nonzero non-unit monomials of degree at most `max_degree`,
    /// ordered by degree and then by exponent vector, larger vectors first.
    pub fn nonzero_monomials(&self, max_degree: u32) -> Vec<Monomial> {
        let limit = self.degree_cap.map_or(max_degree, |c| c.min(max_degree));
        let mut out = Vec::new();
        let mut current = vec![0u32; self.rank()];
        self.collect_monomials(0, 0, limit, &mut current, &mut out);
        out.sort_by(|a, b| {
            a.degree
                .cmp(&b.degree)
                .then_with(|| b.exponents.cmp(&a.exponents))
        });
        out
    }

    fn collect_monomials(
        &self,
        index: usize,
        degree: u32,
        limit: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if index == self.rank() {
            if degree > 0 {
                out.push(Monomial {
                    algebra: self.fingerprint,
                    exponents: current.clone(),
                    degree,
                });
            }
            return;
        }
        let g = &self.generators[index];
        let by_degree = (limit - degree) / g.degree;
        let max_e = g.nilpotency.max_exponent().map_or(by_degree, |m| m.min(by_degree));
        for e in 0..=max_e {
            current[index] = e;
            self.collect_monomials(index + 1, degree + e * g.degree, limit, current, out);
        }
        current[index] = 0;
    }
}

/// Shared tokenizer for the monomial grammar.
pub(crate) fn parse_exponents(
    text: &str,
    lookup: impl Fn(&str) -> Option<usize>,
    rank: usize,
) -> Result<Vec<u32>> {
    let err = |pos: usize, reason: &str| Error::Parse {
        text: text.to_string(),
        pos,
        reason: reason.to_string(),
    };
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let mut exponents = vec![0u32; rank];
    loop {
        skip_ws(&mut pos);
        let start = pos;
        if pos < bytes.len() && (bytes[pos].is_ascii_alphabetic() || bytes[pos] == b'_') {
            pos += 1;
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                pos += 1;
            }
        } else {
            return Err(err(start, "expected a generator name"));
        }
        let name = &text[start..pos];
        let index = lookup(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        skip_ws(&mut pos);
        let mut exponent = 1u32;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            skip_ws(&mut pos);
            let digits = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if digits == pos {
                return Err(err(digits, "expected an exponent"));
            }
            exponent = text[digits..pos]
                .parse()
                .map_err(|_| err(digits, "exponent out of range"))?;
            if exponent == 0 {
                return Err(err(digits, "exponent must be positive"));
            }
            skip_ws(&mut pos);
        }
        exponents[index] = exponents[index]
            .checked_add(exponent)
            .ok_or_else(|| err(start, "exponent out of range"))?;
        if pos == bytes.len() {
            return Ok(exponents);
        }
        if bytes[pos] != b'*' {
            return Err(err(pos, "expected `*` or end of input"));
        }
        pos += 1;
    }
}

/// A nonzero monomial of a particular algebra.
///
/// Only the owning [`MonomialAlgebra`] constructs these, so a `Monomial`
/// in hand is always nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    algebra: u64,
    exponents: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_unit(&self) -> bool {
        self.degree == 0
    }

    /// Number of generator factors counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.exponents.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lens7() -> MonomialAlgebra {
        MonomialAlgebra::new(
            3,
            vec![Generator::exterior("x", 1), Generator::new("y", 2, 4)],
            None,
        )
        .unwrap()
    }

    fn rp(n: u32) -> MonomialAlgebra {
        MonomialAlgebra::new(2, vec![Generator::new("x", 1, n + 1)], None).unwrap()
    }

    #[test]
    fn make_algebra_examples() {
        assert_eq!(lens7().rank(), 2);
        assert_eq!(lens7().top_degree(), Some(7));
        let err = MonomialAlgebra::new(3, vec![Generator::new("x", 1, 3)], None).unwrap_err();
        assert_eq!(err.code(), "ODD_DEGREE_NOT_SQUARE_ZERO");
        assert_eq!(rp(5).top_degree(), Some(5));
    }

    #[test]
    fn make_algebra_rejections() {
        let e = MonomialAlgebra::new(4, vec![], None).unwrap_err();
        assert_eq!(e.code(), "NON_PRIME");
        let e = MonomialAlgebra::new(
            2,
            vec![Generator::new("x", 1, 2), Generator::new("x", 2, 2)],
            None,
        )
        .unwrap_err();
        assert_eq!(e.code(), "DUPLICATE_GENERATOR");
        let e = MonomialAlgebra::new(2, vec![Generator::new("x", 1, 1)], None).unwrap_err();
        assert_eq!(e.code(), "BAD_NILPOTENCY");
        let e = MonomialAlgebra::new(5, vec![Generator::polynomial("x", 3)], None).unwrap_err();
        assert_eq!(e.code(), "ODD_DEGREE_NOT_SQUARE_ZERO");
        let e = MonomialAlgebra::new(3, vec![Generator::polynomial("y", 2)], Some(1)).unwrap_err();
        assert_eq!(e.code(), "BAD_DEGREE_CAP");
        // even characteristic allows odd polynomial generators
        assert!(MonomialAlgebra::new(2, vec![Generator::polynomial("x", 1)], Some(4)).is_ok());
    }

    #[test]
    fn multiplication() {
        let a = lens7();
        let x = a.parse_monomial("x").unwrap();
        let y = a.parse_monomial("y").unwrap();
        let xy = a.mul(&x, &y).unwrap().unwrap();
        assert_eq!(xy.degree(), 3);
        assert_eq!(a.format(&xy), "x*y");
        let y3 = a.parse_monomial("y^3").unwrap();
        assert_eq!(a.mul(&y3, &y).unwrap(), None);

        let r = rp(3);
        let x = r.parse_monomial("x").unwrap();
        let x2 = r.parse_monomial("x^2").unwrap();
        let x3 = r.mul(&x2, &x).unwrap().unwrap();
        assert_eq!(r.format(&x3), "x^3");
        assert_eq!(r.mul(&x3, &x).unwrap(), None);
    }

    #[test]
    fn mismatched_algebras() {
        let x = lens7().parse_monomial("x").unwrap();
        let z = rp(3).parse_monomial("x").unwrap();
        assert_eq!(lens7().mul(&x, &z), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn degrees() {
        let a = lens7();
        assert_eq!(a.parse_monomial("x*y^2").unwrap().degree(), 5);
        assert_eq!(a.unit().degree(), 0);
        let sp2 = MonomialAlgebra::new(
            2,
            vec![Generator::exterior("x", 3), Generator::exterior("y", 7)],
            None,
        )
        .unwrap();
        assert_eq!(sp2.parse_monomial("x").unwrap().degree(), 3);
    }

    #[test]
    fn parsing() {
        let a = lens7();
        assert_eq!(a.parse_monomial("x*y^2").unwrap().exponents(), &[1, 2]);
        assert_eq!(a.parse_monomial(" y * y ").unwrap().exponents(), &[0, 2]);
        assert_eq!(a.parse_monomial("x^2").unwrap_err().code(), "ZERO_MONOMIAL");
        assert_eq!(a.parse_monomial("q").unwrap_err().code(), "UNKNOWN_GENERATOR");
        for bad in ["", "x*", "x^", "x^0", "x y", "2x", "x**y", "x^-1"] {
            assert_eq!(a.parse_monomial(bad).unwrap_err().code(), "PARSE_ERROR", "{bad}");
        }
    }

    #[test]
    fn degree_cap_keeps_top_class() {
        let a = MonomialAlgebra::new(
            3,
            vec![Generator::exterior("x", 1), Generator::polynomial("y", 2)],
            Some(4),
        )
        .unwrap();
        assert!(a.parse_monomial("y^2").is_ok());
        assert_eq!(a.parse_monomial("x*y^2").unwrap_err().code(), "ZERO_MONOMIAL");
        assert_eq!(a.top_degree(), Some(4));
        let unbounded = MonomialAlgebra::new(3, vec![Generator::polynomial("y", 2)], None).unwrap();
        assert_eq!(unbounded.top_degree(), None);
    }

    #[test]
    fn enumeration() {
        let names = |a: &MonomialAlgebra, d| {
            a.nonzero_monomials(d)
                .iter()
                .map(|m| a.format(m))
                .collect::<Vec<_>>()
        };
        assert_eq!(names(&rp(3), 3), ["x", "x^2", "x^3"]);
        assert_eq!(names(&lens7(), 3), ["x", "y", "x*y"]);
        let sp2 = MonomialAlgebra::new(
            2,
            vec![Generator::exterior("x", 3), Generator::exterior("y", 7)],
            None,
        )
        .unwrap();
        assert_eq!(names(&sp2, 10), ["x", "y", "x*y"]);
    }
}
