//! Letter frequency estimates from incidence matrices.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::abelian::AbelianVector;
use crate::directive::Directive;
use crate::error::{Error, Result};
use crate::matrix::incidence_of;

/// A positive rational triple summing to one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FrequencyVector(pub [BigRational; 3]);

impl FrequencyVector {
    /// Normalizes a nonzero nonnegative integer triple to sum one.
    pub fn from_weights(v: &AbelianVector) -> Result<FrequencyVector> {
        if v.0.iter().any(|x| !x.is_positive()) {
            return Err(Error::InvalidInput(format!("frequency weights must be positive, got {v}")));
        }
        let total = v.sum();
        Ok(FrequencyVector(v.0.clone().map(|x| BigRational::new(x, total.clone()))))
    }

    pub fn from_rationals(v: [BigRational; 3]) -> Result<FrequencyVector> {
        let sum: BigRational = v.iter().sum();
        if v.iter().any(|x| !x.is_positive()) || sum != BigRational::from_integer(BigInt::from(1)) {
            return Err(Error::InvalidInput("frequencies must be positive and sum to 1".into()));
        }
        Ok(FrequencyVector(v))
    }

    pub fn to_f64(&self) -> [f64; 3] {
        self.0.clone().map(|x| x.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact `p/q` renderings.
    pub fn to_strings(&self) -> [String; 3] {
        self.0.clone().map(|x| x.to_string())
    }

    /// `sup_i |f_i - g_i|` in floating point.
    pub fn sup_distance(&self, g: [f64; 3]) -> f64 {
        self.to_f64().iter().zip(g).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    pub fn dot(&self, l: &AbelianVector) -> BigRational {
        self.0.iter().zip(&l.0).map(|(f, x)| f * x).fold(BigRational::zero(), |acc, t| acc + t)
    }
}

impl fmt::Debug for FrequencyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.to_f64();
        write!(f, "({a:.10}, {b:.10}, {c:.10})")
    }
}

impl Serialize for FrequencyVector {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("FrequencyVector", 2)?;
        st.serialize_field("exact", &self.to_strings())?;
        st.serialize_field("float", &self.to_f64())?;
        st.end()
    }
}

/// Normalization of `(1,1,1) * M_{s_{d-1}} * ... * M_{s_0}`, the relative
/// letter counts of the three words `s_0 o ... o s_{d-1}(b)` taken together.
pub fn frequency_estimate(directive: &Directive, depth: usize) -> Result<FrequencyVector> {
    let m = incidence_of(&directive.take(depth)?);
    FrequencyVector::from_weights(&AbelianVector::from_i64([1, 1, 1]).mul_matrix(&m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn depth_zero_is_uniform() {
        let f = frequency_estimate(&"123*".parse().unwrap(), 0).unwrap();
        assert_eq!(f.0, [r(1, 3), r(1, 3), r(1, 3)]);
    }

    #[test]
    fn tribonacci_at_depth_60() {
        let f = frequency_estimate(&"123*".parse().unwrap(), 60).unwrap();
        assert!(f.sup_distance([0.5436890126920764, 0.2955977425220848, 0.16071324478583884]) < 1e-6);
    }

    #[test]
    fn sigma1_power_tends_to_first_letter() {
        let d: Directive = "1*".parse().unwrap();
        let f = frequency_estimate(&d, 10).unwrap();
        // (1,1,1) M1^10 = (21, 1, 1)
        assert_eq!(f.0, [r(21, 23), r(1, 23), r(1, 23)]);
        let g = frequency_estimate(&d, 1000).unwrap().to_f64();
        assert!(g[1] < 1e-3 && g[2] < 1e-3);
    }

    #[test]
    fn serializes_exact_and_float() {
        let f = frequency_estimate(&"1".parse().unwrap(), 1).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"exact":["3/5","1/5","1/5"],"float":[0.6,0.2,0.2]}"#);
    }

    #[test]
    fn finite_directive_too_short() {
        assert!(frequency_estimate(&"12".parse().unwrap(), 3).is_err());
    }
}
