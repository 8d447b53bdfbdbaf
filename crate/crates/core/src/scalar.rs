use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, ToPrimitive};

/// Coefficient type for polynomials and truncated series: exact integers,
/// exact rationals, or IEEE floats.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive {
    fn from_int(x: i64) -> Self {
        Self::from_i64(x).expect("every scalar represents small integers")
    }
}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive {}

/// Nearest `f64` to `num / den`, even when both overflow `f64` on their own.
pub fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    BigRational::new(num.clone(), den.clone())
        .to_f64()
        .expect("rational to float conversion")
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    ratio_to_f64(x.numer(), x.denom())
}

#[cfg(test)]
mod tests {
    use num_traits::{One, Pow};

    use super::*;

    #[test]
    fn huge_ratios_convert() {
        let big = BigInt::from(2u32).pow(3000u32);
        let num = &big * BigInt::from(3) + BigInt::one();
        assert_eq!(ratio_to_f64(&num, &big), 3.0);
        let tiny = ratio_to_f64(&BigInt::from(5), &BigInt::from(8u32).pow(60u32));
        assert!((tiny / (5.0 * 8f64.powi(-60)) - 1.0).abs() < 1e-15);
    }
}
