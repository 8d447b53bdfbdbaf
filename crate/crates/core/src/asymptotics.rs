//! Formal series solutions of polynomial-coefficient recurrences in the
//! restricted setting `y(n + shift) ~ K lambda^n n^theta (1 + c_1/n + ...)`.
//!
//! Substituting the ansatz into `sum_h C_h(n) u(n + h) = 0`, dividing by
//! `lambda^n n^theta n^d` (all `C_h` of degree `d`) and by the leading
//! coefficient of `C_0`, gives a series in `1/n` that must vanish term by
//! term:
//!
//! * order 0 is the characteristic polynomial in `lambda`;
//! * order 1 is linear in `theta` and free of the `c_j`;
//! * order `j + 1` is linear in `c_j` once `c_1 .. c_{j-1}` are known.
//!
//! All of this runs over exact rationals. Floats enter only when a constant
//! `K` is fitted against an exact sequence.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, One, Pow, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::Polynomial;
use crate::recurrence::PolyRecurrence;
use crate::scalar::{ratio_to_f64, rational_to_f64};
use crate::series::TruncatedSeries;
use crate::{Rational, RationalPoly, RationalSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsymptoticError {
    #[error("coefficient polynomials have unequal degrees")]
    UnequalDegrees,
    #[error("characteristic polynomial has no dominant positive rational root")]
    NoDominantRationalRoot,
    #[error("dominant root {0} is not simple")]
    NonSimpleRoot(Rational),
    #[error("coefficient of c_{0} vanishes")]
    SingularSystem(usize),
    #[error("need {needed} terms, have {got}")]
    InsufficientTerms { needed: usize, got: usize },
}

/// `P(X) = sum_h (lc(C_h) / lc(C_0)) X^h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly(pub RationalPoly);

impl CharPoly {
    /// All rational roots with multiplicity, plus the cofactor without
    /// rational roots.
    pub fn rational_roots(&self) -> (Vec<(Rational, usize)>, RationalPoly) {
        let mut rest = self.0.clone();
        let mut roots: Vec<(Rational, usize)> = Vec::new();
        while rest.degree().is_some_and(|d| d > 0) {
            let found = if rest.coeff(0).is_zero() {
                Some(Rational::zero())
            } else {
                rational_root_candidates(&rest)
                    .into_iter()
                    .find(|r| rest.eval(r).is_zero())
            };
            let Some(root) = found else { break };
            rest = rest.deflate(&root).0;
            match roots.iter_mut().find(|(r, _)| *r == root) {
                Some((_, mult)) => *mult += 1,
                None => roots.push((root, 1)),
            }
        }
        (roots, rest)
    }

    /// The unique root of largest modulus, required to be positive, rational,
    /// and simple.
    pub fn dominant_root(&self) -> Result<Rational, AsymptoticError> {
        let (mut roots, rest) = self.rational_roots();
        roots.sort_by(|a, b| b.0.abs().cmp(&a.0.abs()));
        let Some((top, mult)) = roots.first().cloned() else {
            return Err(AsymptoticError::NoDominantRationalRoot);
        };
        let tie = roots.get(1).is_some_and(|(r, _)| r.abs() == top.abs());
        // every root of the cofactor lies within its Cauchy bound
        let beaten = rest.degree().is_some_and(|d| d > 0) && cauchy_bound(&rest) >= top.abs();
        if !top.is_positive() || tie || beaten {
            return Err(AsymptoticError::NoDominantRationalRoot);
        }
        if mult > 1 {
            return Err(AsymptoticError::NonSimpleRoot(top));
        }
        Ok(top)
    }
}

fn cauchy_bound(p: &RationalPoly) -> Rational {
    let lead = p.leading().expect("nonzero").abs();
    let deg = p.degree().expect("nonzero");
    let max = (0..deg)
        .map(|i| p.coeff(i).abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    Rational::one() + max
}

fn divisors(x: &BigInt) -> Vec<BigInt> {
    let x = x.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= x {
        if (&x % &d).is_zero() {
            small.push(d.clone());
            let other = &x / &d;
            if other != d {
                large.push(other);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn rational_root_candidates(p: &RationalPoly) -> Vec<Rational> {
    // clear denominators to get an integer polynomial
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * &lcm).to_integer()).collect();
    let constant = &ints[0];
    let lead = ints.last().expect("nonzero");
    let mut out = Vec::new();
    for num in divisors(constant) {
        for den in divisors(lead) {
            let r = Rational::new(num.clone(), den);
            out.push(r.clone());
            out.push(-r);
        }
    }
    out
}

/// Which corner of the general theory is in force: no factorial growth
/// (`mu_0 = 0`), integer powers of `1/n` (`rho = 1`), and no subexponential
/// factor `exp(alpha n^beta)` (`beta = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    pub mu0: Rational,
    pub rho: u32,
    pub beta: Rational,
}

impl Default for Specialization {
    fn default() -> Self {
        Specialization {
            mu0: Rational::zero(),
            rho: 1,
            beta: Rational::zero(),
        }
    }
}

/// `y(n + shift) ~ K lambda^n n^theta (1 + sum_j c_j n^-j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticExpansion {
    pub lambda: Rational,
    pub theta: Rational,
    pub corrections: Vec<Rational>,
    pub k: Option<f64>,
    pub shift: i64,
    pub specialization: Specialization,
}

impl AsymptoticExpansion {
    pub fn new(lambda: Rational, theta: Rational, corrections: Vec<Rational>, shift: i64) -> Self {
        AsymptoticExpansion {
            lambda,
            theta,
            corrections,
            k: None,
            shift,
            specialization: Specialization::default(),
        }
    }

    pub fn with_k(mut self, k: f64) -> Self {
        self.k = Some(k);
        self
    }

    /// Keeps only `c_1 .. c_m`.
    pub fn truncated(&self, m: usize) -> Self {
        let mut out = self.clone();
        out.corrections.truncate(m);
        out
    }

    /// `1 + c_1/n + ... + c_m/n^m`.
    pub fn correction_factor<T: Float + FromPrimitive>(&self, n: T) -> T {
        let inv = T::one() / n;
        self.corrections
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| (acc + from_rational::<T>(c)) * inv)
            + T::one()
    }

    /// `K n^theta (1 + c_1/n + ...)`, the factor left after removing
    /// `lambda^n`. `None` until `K` is known.
    pub fn subexponential<T: Float + FromPrimitive>(&self, n: T) -> Option<T> {
        let k = T::from_f64(self.k?)?;
        Some(k * n.powf(from_rational::<T>(&self.theta)) * self.correction_factor(n))
    }
}

fn from_rational<T: Float + FromPrimitive>(q: &Rational) -> T {
    T::from_f64(rational_to_f64(q)).expect("finite rational")
}

fn uniform_degree(rec: &PolyRecurrence) -> Result<usize, AsymptoticError> {
    let degrees: Vec<Option<usize>> = rec.coeffs().iter().map(Polynomial::degree).collect();
    match degrees[0] {
        Some(d) if degrees.iter().all(|&x| x == Some(d)) => Ok(d),
        _ => Err(AsymptoticError::UnequalDegrees),
    }
}

fn rational_coeffs(rec: &PolyRecurrence) -> Vec<RationalPoly> {
    rec.coeffs()
        .iter()
        .map(|p| p.map(|c| Rational::from_integer(c.clone())))
        .collect()
}

pub fn char_poly(rec: &PolyRecurrence) -> Result<CharPoly, AsymptoticError> {
    uniform_degree(rec)?;
    let coeffs = rational_coeffs(rec);
    let base = coeffs[0].leading().expect("nonzero").clone();
    Ok(CharPoly(Polynomial::new(
        coeffs.iter().map(|c| c.leading().expect("nonzero") / &base).collect(),
    )))
}

/// The normalized expansion of the recurrence under the ansatz, to `order`.
/// It vanishes identically exactly when the ansatz is a formal solution.
pub fn residual_series(
    rec: &PolyRecurrence,
    lambda: &Rational,
    theta: &Rational,
    corrections: &[Rational],
    order: usize,
) -> Result<RationalSeries, AsymptoticError> {
    uniform_degree(rec)?;
    let coeffs = rational_coeffs(rec);
    let base = coeffs[0].leading().expect("nonzero").clone();
    let mut total = TruncatedSeries::zero(order);
    let mut lambda_pow = Rational::one();
    for (h, c) in coeffs.iter().enumerate() {
        let shift = Rational::from_integer(BigInt::from(h));
        let poly = TruncatedSeries::from_poly_over_leading_power(c, order).scale(&(lambda_pow.clone() / &base));
        let growth = TruncatedSeries::binomial_power(&shift, theta, order);
        // S(n + h) = 1 + sum_j c_j n^-j (1 + h/n)^-j
        let mut shifted = TruncatedSeries::one(order);
        for (j, cj) in corrections.iter().enumerate() {
            let j = j + 1;
            if cj.is_zero() || j > order {
                continue;
            }
            let minus_j = Rational::from_integer(BigInt::from(-(j as i64)));
            let term = TruncatedSeries::binomial_power(&shift, &minus_j, order).shift(j).scale(cj);
            shifted = &shifted + &term;
        }
        total = &total + &(&(&poly * &growth) * &shifted);
        lambda_pow *= lambda;
    }
    Ok(total)
}

/// `(lambda, theta)` for the dominant formal series solution.
pub fn solve_growth(rec: &PolyRecurrence) -> Result<(Rational, Rational), AsymptoticError> {
    let lambda = char_poly(rec)?.dominant_root()?;
    let at = |theta: Rational| -> Result<Rational, AsymptoticError> {
        Ok(residual_series(rec, &lambda, &theta, &[], 1)?.coeff(1).clone())
    };
    let r0 = at(Rational::zero())?;
    let slope = at(Rational::one())? - &r0;
    if slope.is_zero() {
        return Err(AsymptoticError::SingularSystem(0));
    }
    Ok((lambda, -r0 / slope))
}

/// `c_1 .. c_m`, each from the coefficient of `n^-(j+1)`.
pub fn solve_corrections(
    rec: &PolyRecurrence,
    lambda: &Rational,
    theta: &Rational,
    m: usize,
) -> Result<Vec<Rational>, AsymptoticError> {
    let mut cs: Vec<Rational> = Vec::with_capacity(m);
    for j in 1..=m {
        let mut trial = cs.clone();
        trial.push(Rational::zero());
        let r0 = residual_series(rec, lambda, theta, &trial, j + 1)?.coeff(j + 1).clone();
        *trial.last_mut().expect("pushed") = Rational::one();
        let r1 = residual_series(rec, lambda, theta, &trial, j + 1)?.coeff(j + 1).clone();
        let slope = r1 - &r0;
        if slope.is_zero() {
            return Err(AsymptoticError::SingularSystem(j));
        }
        cs.push(-r0 / slope);
    }
    Ok(cs)
}

/// `lambda`, `theta`, and `c_1 .. c_m` for a recurrence, `K` still unknown.
pub fn expand(rec: &PolyRecurrence, m: usize) -> Result<AsymptoticExpansion, AsymptoticError> {
    let (lambda, theta) = solve_growth(rec)?;
    let corrections = solve_corrections(rec, &lambda, &theta, m)?;
    Ok(AsymptoticExpansion::new(lambda, theta, corrections, rec.shift()))
}

/// `y(n + shift) / lambda^n` as a float, computed from the exact integers.
/// `seq` holds `y(1), y(2), ...`.
pub fn normalized_term(seq: &[BigInt], exp: &AsymptoticExpansion, n: usize) -> Result<f64, AsymptoticError> {
    let index = n as i64 + exp.shift;
    let needed = index.max(1) as usize;
    if index < 1 || seq.len() < needed {
        return Err(AsymptoticError::InsufficientTerms {
            needed,
            got: seq.len(),
        });
    }
    let lambda_n: Rational = Pow::pow(&exp.lambda, n);
    let value = Rational::from_integer(seq[needed - 1].clone()) / lambda_n;
    Ok(ratio_to_f64(value.numer(), value.denom()))
}

/// `K_n = y(n + shift) lambda^-n n^-theta / (1 + c_1/n + ...)`.
pub fn fit_k(seq: &[BigInt], exp: &AsymptoticExpansion, n_fit: usize) -> Result<f64, AsymptoticError> {
    let ratio = normalized_term(seq, exp, n_fit)?;
    let n = n_fit as f64;
    Ok(ratio / (n.powf(rational_to_f64(&exp.theta)) * exp.correction_factor(n)))
}

/// `|y(n + shift) / (lambda^n g(n)) - 1|`, the relative error of the
/// expansion with its own `K`.
pub fn relative_error(seq: &[BigInt], exp: &AsymptoticExpansion, n: usize) -> Result<f64, AsymptoticError> {
    let ratio = normalized_term(seq, exp, n)?;
    let g = exp
        .subexponential(n as f64)
        .expect("relative error needs a fitted K");
    Ok((ratio / g - 1.0).abs())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubexpRow {
    pub n: usize,
    /// `y(n + shift) / lambda^n` from the exact sequence.
    pub exact_ratio: f64,
    /// `K n^theta (1 + c_1/n + ...)`.
    pub g: f64,
}

impl SubexpRow {
    pub fn relative_gap(&self) -> f64 {
        (self.exact_ratio / self.g - 1.0).abs()
    }
}

/// Exact normalized terms next to the fitted subexponential factor.
pub fn subexp_table(
    seq: &[BigInt],
    exp: &AsymptoticExpansion,
    ns: &[usize],
) -> Result<Vec<SubexpRow>, AsymptoticError> {
    ns.iter()
        .map(|&n| {
            Ok(SubexpRow {
                n,
                exact_ratio: normalized_term(seq, exp, n)?,
                g: exp
                    .subexponential(n as f64)
                    .expect("subexponential table needs a fitted K"),
            })
        })
        .collect()
}

/// The same rows labelled by sequence index `N`: term `y(N)` sits at
/// `n = N - shift`, so each row compares `y(N) / lambda^(N - shift)` with
/// `g(N - shift)`.
pub fn subexp_table_by_term(
    seq: &[BigInt],
    exp: &AsymptoticExpansion,
    terms: &[usize],
) -> Result<Vec<(usize, SubexpRow)>, AsymptoticError> {
    let ns = terms
        .iter()
        .map(|&t| {
            usize::try_from(t as i64 - exp.shift)
                .ok()
                .filter(|&n| n > 0)
                .ok_or(AsymptoticError::InsufficientTerms { needed: t, got: seq.len() })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(terms.iter().copied().zip(subexp_table(seq, exp, &ns)?).collect())
}

/// Renders a float in scientific notation with four significant figures,
/// e.g. `6.507e-18`.
pub fn sci4(x: f64) -> String {
    format!("{x:.3e}")
}

/// Parses a rational written as `a` or `a/b`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let num: BigInt = a.trim().parse().ok()?;
            let den: BigInt = b.trim().parse().ok()?;
            (den.sign() != Sign::NoSign).then(|| Rational::new(num, den))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// Nearest float to a rational, for display.
pub fn approx(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| rational_to_f64(q))
}

/// Converts an `f64` to the nearest rational with denominator `2^k`.
pub fn exact_from_f64(x: f64) -> Option<Rational> {
    BigRational::from_f64(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::{geometric, p32_recurrence};

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    fn identity_recurrence() -> PolyRecurrence {
        // n y(n+1) - (n+1) y(n) = 0, y(n) = n
        PolyRecurrence::parse("-(n+1), n", vec![BigInt::one()], 0).unwrap()
    }

    #[test]
    fn characteristic_polynomial() {
        let p = char_poly(&p32_recurrence()).unwrap();
        assert_eq!(p.0.coeffs(), &[q(1, 1), q(15, 8), q(3, 4), q(-1, 8)]);
        let (roots, rest) = p.rational_roots();
        assert_eq!(rest.degree(), Some(0));
        assert!(roots.contains(&(q(8, 1), 1)));
        assert!(roots.contains(&(q(-1, 1), 2)));
        assert_eq!(p.dominant_root().unwrap(), q(8, 1));

        let g = char_poly(&geometric(2, 1)).unwrap();
        assert_eq!(g.0.coeffs(), &[q(1, 1), q(-1, 2)]);
        assert_eq!(g.dominant_root().unwrap(), q(2, 1));
    }

    #[test]
    fn dominant_root_failures() {
        let cp = |xs: &[(i64, i64)]| CharPoly(Polynomial::new(xs.iter().map(|&(a, b)| q(a, b)).collect()));
        // (X - 2)(X + 2)
        assert_eq!(cp(&[(-4, 1), (0, 1), (1, 1)]).dominant_root(), Err(AsymptoticError::NoDominantRationalRoot));
        // (X - 3)^2
        assert_eq!(cp(&[(9, 1), (-6, 1), (1, 1)]).dominant_root(), Err(AsymptoticError::NonSimpleRoot(q(3, 1))));
        // X^2 + 1
        assert_eq!(cp(&[(1, 1), (0, 1), (1, 1)]).dominant_root(), Err(AsymptoticError::NoDominantRationalRoot));
        // (X + 5)(X - 1)
        assert_eq!(cp(&[(-5, 1), (4, 1), (1, 1)]).dominant_root(), Err(AsymptoticError::NoDominantRationalRoot));
        // (X - 10)(X^2 - 2): sqrt 2 is well inside
        assert_eq!(cp(&[(20, 1), (-2, 1), (-10, 1), (1, 1)]).dominant_root(), Ok(q(10, 1)));
    }

    #[test]
    fn unequal_degrees_are_refused() {
        let rec = PolyRecurrence::parse("-2, n", vec![BigInt::one()], 0).unwrap();
        assert_eq!(char_poly(&rec), Err(AsymptoticError::UnequalDegrees));
    }

    #[test]
    fn growth() {
        assert_eq!(solve_growth(&p32_recurrence()).unwrap(), (q(8, 1), q(-7, 1)));
        assert_eq!(solve_growth(&geometric(2, 1)).unwrap(), (q(2, 1), q(0, 1)));
        assert_eq!(solve_growth(&identity_recurrence()).unwrap(), (q(1, 1), q(1, 1)));
    }

    #[test]
    fn corrections() {
        let rec = p32_recurrence();
        let cs = solve_corrections(&rec, &q(8, 1), &q(-7, 1), 3).unwrap();
        assert_eq!(cs, vec![q(-28, 1), q(4102, 9), q(-457744, 81)]);
        let id = identity_recurrence();
        assert_eq!(solve_corrections(&id, &q(1, 1), &q(1, 1), 3).unwrap(), vec![q(0, 1); 3]);
        let g = geometric(2, 1);
        assert_eq!(solve_corrections(&g, &q(2, 1), &q(0, 1), 2).unwrap(), vec![q(0, 1); 2]);
    }

    #[test]
    fn residual_vanishes() {
        let rec = p32_recurrence();
        let exp = expand(&rec, 3).unwrap();
        let r = residual_series(&rec, &exp.lambda, &exp.theta, &exp.corrections, 4).unwrap();
        assert!(r.is_zero());
        // perturbing c_3 breaks the order-4 coefficient only
        let mut bad = exp.corrections.clone();
        bad[2] += q(1, 1);
        let r = residual_series(&rec, &exp.lambda, &exp.theta, &bad, 4).unwrap();
        assert!(r.coeffs()[..4].iter().all(Zero::is_zero));
        assert!(!r.coeff(4).is_zero());
    }

    #[test]
    fn fitted_constants() {
        // y(n) = 3 * 2^n and the n+1 convention: K = 6
        let seq: Vec<BigInt> = (1..=40).map(|n| BigInt::from(3) * BigInt::from(2).pow(n as u32)).collect();
        let exp = AsymptoticExpansion::new(q(2, 1), q(0, 1), vec![], 1);
        assert_eq!(fit_k(&seq, &exp, 10).unwrap(), 6.0);
        assert_eq!(fit_k(&seq, &exp, 39).unwrap(), 6.0);
        assert!(matches!(fit_k(&seq, &exp, 40), Err(AsymptoticError::InsufficientTerms { .. })));

        let seq: Vec<BigInt> = (1..=120).map(BigInt::from).collect();
        let exp = expand(&identity_recurrence(), 3).unwrap();
        assert!((fit_k(&seq, &exp, 100).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn tables() {
        let seq: Vec<BigInt> = (1..=20).map(|n| BigInt::from(3) * BigInt::from(2).pow(n as u32)).collect();
        let exp = AsymptoticExpansion::new(q(2, 1), q(0, 1), vec![], 1).with_k(6.0);
        let rows = subexp_table(&seq, &exp, &[1, 4]).unwrap();
        assert_eq!(rows[0], SubexpRow { n: 1, exact_ratio: 6.0, g: 6.0 });
        assert_eq!(rows[1].relative_gap(), 0.0);
        let by_term = subexp_table_by_term(&seq, &exp, &[5]).unwrap();
        assert_eq!(by_term, vec![(5, SubexpRow { n: 4, exact_ratio: 6.0, g: 6.0 })]);
        assert!(subexp_table_by_term(&seq, &exp, &[1]).is_err());
    }

    #[test]
    fn generic_evaluation() {
        let exp = AsymptoticExpansion::new(q(8, 1), q(-7, 1), vec![q(-28, 1), q(4102, 9)], 1).with_k(2.0);
        let f64_value: f64 = exp.correction_factor(100.0);
        let f32_value: f32 = exp.correction_factor(100.0f32);
        assert!((f64_value - (1.0 - 0.28 + 4102.0 / 9.0 / 1e4)).abs() < 1e-12);
        assert!((f32_value as f64 - f64_value).abs() < 1e-6);
        assert_eq!(AsymptoticExpansion::new(q(1, 1), q(0, 1), vec![], 0).subexponential(5.0f64), None);
        assert!((exp.subexponential(10.0f64).unwrap() - 2.0e-7 * exp.correction_factor(10.0)).abs() < 1e-18);
    }

    #[test]
    fn formatting_helpers() {
        assert_eq!(sci4(6.50712e-18), "6.507e-18");
        assert_eq!(sci4(0.125), "1.250e-1");
        assert_eq!(parse_rational("4102/9"), Some(q(4102, 9)));
        assert_eq!(parse_rational("-7"), Some(q(-7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(approx(&q(-457744, 81)), -457744.0 / 81.0);
        assert_eq!(exact_from_f64(0.5), Some(q(1, 2)));
    }
}
