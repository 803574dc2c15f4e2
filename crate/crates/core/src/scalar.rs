//! Scalar abstractions.
//!
//! Density arithmetic (2-density, `d_k`, the η/ζ extremals, partition
//! windows) is written against [`ExactScalar`] so the same code runs on
//! `Ratio<i64>`, `BigRational` or, with the usual caveats about equality
//! tests, on `f64`. The probabilistic bound evaluators use [`RealScalar`].

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Float, FromPrimitive, Num, ToPrimitive};

/// Ordered field elements constructible from integers.
pub trait ExactScalar: Num + Clone + PartialOrd + Debug + FromPrimitive + ToPrimitive {
    fn from_int(x: i64) -> Self {
        Self::from_i64(x).expect("integer representable in scalar")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

impl<T> ExactScalar for T where T: Num + Clone + PartialOrd + Debug + FromPrimitive + ToPrimitive {}

/// Floating-point scalars for bound evaluation.
pub trait RealScalar: Float + FromPrimitive + Debug {
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts")
    }

    fn of_usize(x: usize) -> Self {
        Self::from_usize(x).expect("usize converts")
    }
}

impl<T> RealScalar for T where T: Float + FromPrimitive + Debug {}

/// Converts an exact `Ratio<i64>` into a `BigRational`.
pub fn to_big(r: &Ratio<i64>) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// Serde adapter writing `Ratio<i64>` as `{"num": .., "den": ..}`.
pub mod ratio_json {
    use num_rational::Ratio;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct NumDen {
        num: i64,
        den: i64,
    }

    pub fn serialize<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
        NumDen {
            num: *r.numer(),
            den: *r.denom(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<i64>, D::Error> {
        let nd = NumDen::deserialize(d)?;
        if nd.den == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Ratio::new(nd.num, nd.den))
    }
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> num_bigint::BigUint {
    use num_traits::One;
    if k > n {
        return num_bigint::BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = num_bigint::BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}
