//! 3x3 integer matrices, in particular incidence matrices of substitutions.
//!
//! Row `i` of the incidence matrix of `s` is the Parikh vector of the image of
//! letter `i`, so that `ab(s(u)) = ab(u) * M_s` with row vectors.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::abelian::AbelianVector;
use crate::serde_big;
use crate::word::Letter;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IncidenceMatrix(pub [[BigInt; 3]; 3]);

impl IncidenceMatrix {
    pub fn identity() -> IncidenceMatrix {
        IncidenceMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { BigInt::one() } else { BigInt::zero() })
        }))
    }

    pub fn from_i64(rows: [[i64; 3]; 3]) -> IncidenceMatrix {
        IncidenceMatrix(rows.map(|r| r.map(BigInt::from)))
    }

    /// Incidence matrix of the Arnoux-Rauzy substitution `sigma_i`:
    /// the identity plus a column of ones at `i`.
    pub fn ar(letter: Letter) -> IncidenceMatrix {
        let mut m = IncidenceMatrix::identity();
        for row in m.0.iter_mut() {
            row[letter.index()] = BigInt::one();
        }
        m
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.0[i][j]
    }

    pub fn transpose(&self) -> IncidenceMatrix {
        IncidenceMatrix(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i].clone())))
    }

    pub fn determinant(&self) -> BigInt {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// Integer inverse, defined when the determinant is `1` or `-1`.
    pub fn inverse(&self) -> Option<IncidenceMatrix> {
        let det = self.determinant();
        if !det.abs().is_one() {
            return None;
        }
        let m = &self.0;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0];
        // adjugate = transposed cofactor matrix
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        Some(IncidenceMatrix(adj.map(|row| row.map(|x| x * &det))))
    }

    /// Column-vector action `self * v^T`.
    pub fn mul_column(&self, v: &AbelianVector) -> AbelianVector {
        AbelianVector(std::array::from_fn(|i| (0..3).map(|k| &self.0[i][k] * &v.0[k]).sum()))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().flatten().all(|x| !x.is_negative())
    }
}

impl Mul for &IncidenceMatrix {
    type Output = IncidenceMatrix;

    fn mul(self, rhs: &IncidenceMatrix) -> IncidenceMatrix {
        IncidenceMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..3).map(|k| &self.0[i][k] * &rhs.0[k][j]).sum())
        }))
    }
}

impl fmt::Debug for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.0.iter().map(|r| format!("({},{},{})", r[0], r[1], r[2])).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl Serialize for IncidenceMatrix {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        struct Row<'a>(&'a [BigInt; 3]);
        impl Serialize for Row<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
                serde_big::serialize_triple(self.0, ser)
            }
        }
        let mut seq = ser.serialize_seq(Some(3))?;
        for row in &self.0 {
            seq.serialize_element(&Row(row))?;
        }
        seq.end()
    }
}

/// Incidence matrix of the composition `s_0 o s_1 o ... o s_{n-1}`:
/// `M = M_{s_{n-1}} * ... * M_{s_0}`, so that `ab(s_0(...s_{n-1}(u))) = ab(u) * M`.
pub fn incidence_of(directive: &[Letter]) -> IncidenceMatrix {
    let mut m = IncidenceMatrix::identity();
    for &s in directive {
        m = &IncidenceMatrix::ar(s) * &m;
    }
    m
}
