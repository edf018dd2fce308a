//! Integer triples: Parikh vectors and, more generally, vertices of `Z^3`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::matrix::IncidenceMatrix;
use crate::serde_big;
use crate::word::Letter;

/// A signed integer triple `(n1, n2, n3)` with arbitrary precision entries.
///
/// Parikh vectors of words are nonnegative; differences of them, and the
/// vertices of the difference graph, are arbitrary.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianVector(pub [BigInt; 3]);

impl AbelianVector {
    pub fn zero() -> AbelianVector {
        AbelianVector::default()
    }

    pub fn from_i64(v: [i64; 3]) -> AbelianVector {
        AbelianVector(v.map(BigInt::from))
    }

    pub fn from_counts(c: [u64; 3]) -> AbelianVector {
        AbelianVector(c.map(BigInt::from))
    }

    /// The unit vector of a letter.
    pub fn unit(letter: Letter) -> AbelianVector {
        let mut v = AbelianVector::zero();
        v.0[letter.index()] = BigInt::from(1);
        v
    }

    pub fn entries(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// `max |n_i|`.
    pub fn sup_norm(&self) -> BigInt {
        self.0.iter().map(BigInt::abs).max().unwrap_or_default()
    }

    /// Row-vector action `self * m`.
    pub fn mul_matrix(&self, m: &IncidenceMatrix) -> AbelianVector {
        AbelianVector(std::array::from_fn(|j| (0..3).map(|k| &self.0[k] * &m.0[k][j]).sum()))
    }

    pub fn to_i64(&self) -> Option<[i64; 3]> {
        Some([self.0[0].to_i64()?, self.0[1].to_i64()?, self.0[2].to_i64()?])
    }
}

impl Index<usize> for AbelianVector {
    type Output = BigInt;

    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl IndexMut<usize> for AbelianVector {
    fn index_mut(&mut self, i: usize) -> &mut BigInt {
        &mut self.0[i]
    }
}

impl Index<Letter> for AbelianVector {
    type Output = BigInt;

    fn index(&self, l: Letter) -> &BigInt {
        &self.0[l.index()]
    }
}

impl Add for &AbelianVector {
    type Output = AbelianVector;

    fn add(self, rhs: &AbelianVector) -> AbelianVector {
        AbelianVector(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &AbelianVector {
    type Output = AbelianVector;

    fn sub(self, rhs: &AbelianVector) -> AbelianVector {
        AbelianVector(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &AbelianVector {
    type Output = AbelianVector;

    fn neg(self) -> AbelianVector {
        AbelianVector(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl fmt::Display for AbelianVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for AbelianVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `a,b,c`, optionally wrapped in parentheses or brackets.
impl FromStr for AbelianVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<AbelianVector, Error> {
        let bad = || Error::InvalidInput(format!("expected three integers a,b,c, got {s:?}"));
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut out = AbelianVector::zero();
        for (slot, p) in out.0.iter_mut().zip(parts) {
            *slot = p.parse().map_err(|_| bad())?;
        }
        Ok(out)
    }
}

impl Serialize for AbelianVector {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        serde_big::serialize_triple(&self.0, ser)
    }
}

impl<'de> Deserialize<'de> for AbelianVector {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<AbelianVector, D::Error> {
        serde_big::deserialize_triple(de).map(AbelianVector)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triples() {
        let v: AbelianVector = "1,-1,1".parse().unwrap();
        assert_eq!(v, AbelianVector::from_i64([1, -1, 1]));
        let v: AbelianVector = "(0, -1, 0)".parse().unwrap();
        assert_eq!(v, AbelianVector::from_i64([0, -1, 0]));
        assert!("1,2".parse::<AbelianVector>().is_err());
        assert!("1,x,2".parse::<AbelianVector>().is_err());
    }

    #[test]
    fn json_integers_round_trip_beyond_i64() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let v = AbelianVector([big.clone(), BigInt::from(-3), BigInt::from(0)]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, "[123456789012345678901234567890,-3,0]");
        let back: AbelianVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn norms() {
        let v = AbelianVector::from_i64([2, -7, 3]);
        assert_eq!(v.sup_norm(), BigInt::from(7));
        assert_eq!(v.sum(), BigInt::from(-2));
        assert_eq!(&v - &v, AbelianVector::zero());
        assert_eq!(-&v, AbelianVector::from_i64([-2, 7, -3]));
    }
}
