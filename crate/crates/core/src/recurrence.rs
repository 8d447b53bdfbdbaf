//! Linear recurrences with polynomial coefficients, evaluated exactly.
//!
//! A [`PolyRecurrence`] encodes
//! `sum_{h=0}^{order} C_h(n) y(n + shift + h) = 0`
//! for a sequence indexed from 1. Each new term is obtained by exact division
//! by the leading coefficient; a nonzero remainder means the coefficients or
//! seeds are wrong.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{parse_int_poly, PolyParseError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error("a recurrence needs at least two coefficient polynomials")]
    TooFewCoefficients,
    #[error("{got} seeds given, at least {order} needed")]
    TooFewSeeds { got: usize, order: usize },
    #[error("term {index} does not divide exactly by the leading coefficient")]
    InexactDivision { index: usize },
    #[error("leading coefficient vanishes at n = {n}")]
    LeadingZero { n: i64 },
    #[error("seed y({index}) = {given} disagrees with the recurrence value {computed}")]
    SeedMismatch {
        index: usize,
        given: BigInt,
        computed: BigInt,
    },
    #[error(transparent)]
    Parse(#[from] PolyParseError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRecurrence {
    coeffs: Vec<Polynomial<BigInt>>,
    seeds: Vec<BigInt>,
    shift: i64,
}

impl PolyRecurrence {
    /// Seeds beyond the first `order` are checked against the recurrence.
    pub fn new(
        coeffs: Vec<Polynomial<BigInt>>,
        seeds: Vec<BigInt>,
        shift: i64,
    ) -> Result<Self, RecurrenceError> {
        if coeffs.len() < 2 {
            return Err(RecurrenceError::TooFewCoefficients);
        }
        let order = coeffs.len() - 1;
        if seeds.len() < order {
            return Err(RecurrenceError::TooFewSeeds {
                got: seeds.len(),
                order,
            });
        }
        let rec = PolyRecurrence { coeffs, seeds, shift };
        let computed = rec.run(rec.seeds.len(), order)?;
        for (idx, (given, computed)) in rec.seeds.iter().zip(&computed).enumerate().skip(order) {
            if given != computed {
                return Err(RecurrenceError::SeedMismatch {
                    index: idx + 1,
                    given: given.clone(),
                    computed: computed.clone(),
                });
            }
        }
        Ok(rec)
    }

    /// Parses `c_0, c_1, ..., c_order`, comma separated integer polynomials in `n`.
    pub fn parse(coefficients: &str, seeds: Vec<BigInt>, shift: i64) -> Result<Self, RecurrenceError> {
        let coeffs = split_top_level(coefficients)
            .into_iter()
            .map(parse_int_poly)
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(coeffs, seeds, shift)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial<BigInt>] {
        &self.coeffs
    }

    pub fn seeds(&self) -> &[BigInt] {
        &self.seeds
    }

    /// The sequence term multiplied by `C_0(n)` is `y(n + shift)`.
    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// The first `count` terms `y(1), ..., y(count)`.
    pub fn evaluate(&self, count: usize) -> Result<Vec<BigInt>, RecurrenceError> {
        self.run(count, self.seeds.len())
    }

    fn run(&self, count: usize, seeded: usize) -> Result<Vec<BigInt>, RecurrenceError> {
        let order = self.order();
        let mut terms: Vec<BigInt> = self.seeds.iter().take(seeded.min(count)).cloned().collect();
        while terms.len() < count {
            // index of the new term, 1-based
            let index = terms.len() + 1;
            let n = index as i64 - self.shift - order as i64;
            let at = BigInt::from(n);
            let lead = self.coeffs[order].eval(&at);
            if lead.is_zero() {
                return Err(RecurrenceError::LeadingZero { n });
            }
            let mut sum = BigInt::zero();
            for h in 0..order {
                let term = &terms[index - 1 - order + h];
                sum += self.coeffs[h].eval(&at) * term;
            }
            let (q, r) = (-sum).div_rem(&lead);
            if !r.is_zero() {
                return Err(RecurrenceError::InexactDivision { index });
            }
            terms.push(q);
        }
        Ok(terms)
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// Coefficients of the recurrence for 2-regular 3-noncrossing partitions,
/// in the literal format accepted by [`PolyRecurrence::parse`].
pub const P32_COEFFICIENTS: &str =
    "8*(n+2)*(n+3)*(n+1), 3*(n+2)*(5*n^2+47*n+104), 3*(n+4)*(2*n+11)*(n+7), -(n+9)*(n+8)*(n+7)";

/// `p(n+1), ..., p(n+4)` related for `n >= 0`, seeded with `p(1..4) = 1, 1, 2, 5`.
pub fn p32_recurrence() -> PolyRecurrence {
    let seeds = [1, 1, 2, 5].map(BigInt::from).to_vec();
    PolyRecurrence::parse(P32_COEFFICIENTS, seeds, 1).expect("fixed recurrence is well formed")
}

/// Consecutive terms strictly increase from `from` (1-based) on.
pub fn is_increasing_from(terms: &[BigInt], from: usize) -> bool {
    terms[from.saturating_sub(1)..].windows(2).all(|w| w[0] < w[1])
}

/// Geometric recurrence `y(n+1) - ratio * y(n) = 0` with `y(1) = first`.
pub fn geometric(ratio: i64, first: i64) -> PolyRecurrence {
    PolyRecurrence::new(
        vec![
            Polynomial::constant(BigInt::from(-ratio)),
            Polynomial::constant(BigInt::one()),
        ],
        vec![BigInt::from(first)],
        0,
    )
    .expect("geometric recurrence is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn p32_coefficients() {
        let rec = p32_recurrence();
        assert_eq!(rec.order(), 3);
        let zero = BigInt::zero();
        let at0: Vec<BigInt> = rec.coeffs().iter().map(|c| c.eval(&zero)).collect();
        assert_eq!(at0, ints(&[48, 624, 924, -504]));
        // 48*1 + 624*1 + 924*2 - 504*5 = 0
        let lhs: BigInt = at0.iter().zip(ints(&[1, 1, 2, 5])).map(|(c, p)| c * p).sum();
        assert!(lhs.is_zero());
        assert_eq!(rec.seeds(), &ints(&[1, 1, 2, 5])[..]);
    }

    #[test]
    fn p32_terms() {
        let rec = p32_recurrence();
        assert_eq!(rec.evaluate(7).unwrap(), ints(&[1, 1, 2, 5, 15, 51, 191]));
        let twelve = rec.evaluate(12).unwrap();
        assert_eq!(twelve[11], BigInt::from(348889));
        assert!(is_increasing_from(&twelve, 2));
        assert_eq!(rec.evaluate(2).unwrap(), ints(&[1, 1]));
    }

    #[test]
    fn doubling() {
        assert_eq!(geometric(2, 1).evaluate(5).unwrap(), ints(&[1, 2, 4, 8, 16]));
    }

    #[test]
    fn error_paths() {
        let bad_seed = PolyRecurrence::parse(P32_COEFFICIENTS, ints(&[1, 1, 2, 6]), 1);
        assert!(matches!(bad_seed, Err(RecurrenceError::SeedMismatch { index: 4, .. })));
        // y(n+1) = y(n) / 2 is not integral
        let halving = PolyRecurrence::parse("1, -2", ints(&[1]), 0).unwrap();
        assert_eq!(halving.evaluate(3), Err(RecurrenceError::InexactDivision { index: 2 }));
        let identity = PolyRecurrence::parse("-(n+1), n", ints(&[1]), 0).unwrap();
        assert_eq!(identity.evaluate(4).unwrap(), ints(&[1, 2, 3, 4]));
        let early = PolyRecurrence::parse("1, n-1", ints(&[1]), 0).unwrap();
        assert_eq!(early.evaluate(3), Err(RecurrenceError::LeadingZero { n: 1 }));
        assert_eq!(
            PolyRecurrence::parse("1", ints(&[1]), 0),
            Err(RecurrenceError::TooFewCoefficients)
        );
        assert!(matches!(
            PolyRecurrence::parse("1, 2, 3", ints(&[1]), 0),
            Err(RecurrenceError::TooFewSeeds { got: 1, order: 2 })
        ));
        assert!(matches!(
            PolyRecurrence::parse("1, n+", ints(&[1]), 0),
            Err(RecurrenceError::Parse(_))
        ));
    }
}
