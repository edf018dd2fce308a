//! Spread of column vectors pushed through incidence matrices.
//!
//! This module uses the column convention: `l_{m+1} = M_{s_m} * l_m`, so
//! `M_1 (a,b,c)^T = (a, a+b, a+c)`, `M_2 (a,b,c)^T = (a+b, b, c+b)` and
//! `M_3 (a,b,c)^T = (a+c, b+c, c)`. If `f` is a frequency vector with
//! `f . l_0 = 0`, the entries of `l_m` keep opposite extreme signs and the
//! spread `max - min` cannot grow.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::abelian::AbelianVector;
use crate::directive::Directive;
use crate::error::{Error, Result};
use crate::frequency::frequency_estimate;
use crate::matrix::IncidenceMatrix;

/// `max entry - min entry`.
pub fn spread(l: &AbelianVector) -> BigInt {
    let max = l.0.iter().max().expect("three entries");
    let min = l.0.iter().min().expect("three entries");
    max - min
}

/// The largest entry is positive and the smallest negative.
pub fn sign_condition(l: &AbelianVector) -> bool {
    l.0.iter().any(Signed::is_positive) && l.0.iter().any(Signed::is_negative)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpreadTrace {
    pub vectors: Vec<AbelianVector>,
    pub spreads: Vec<BigInt>,
}

/// `l_0, ..., l_steps` under the column action of the directive.
pub fn spread_sequence(directive: &Directive, l0: &AbelianVector, steps: usize) -> Result<SpreadTrace> {
    if l0.is_zero() {
        return Err(Error::InvalidInput("l0 must be nonzero".into()));
    }
    let letters = directive.take(steps)?;
    let mut vectors = Vec::with_capacity(steps + 1);
    let mut l = l0.clone();
    vectors.push(l.clone());
    for s in letters {
        l = IncidenceMatrix::ar(s).mul_column(&l);
        vectors.push(l.clone());
    }
    let spreads = vectors.iter().map(spread).collect();
    Ok(SpreadTrace { vectors, spreads })
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeCandidate {
    pub l0: AbelianVector,
    /// Exact `f . l0` as `p/q`.
    pub product: String,
    pub product_float: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DependenceReport {
    pub directive: Directive,
    pub bound: i64,
    pub depth: usize,
    pub frequency: crate::frequency::FrequencyVector,
    pub candidates: Vec<ProbeCandidate>,
    /// Candidate with the smallest `|f . l0|`, first in scan order on ties.
    pub argmin: AbelianVector,
    pub min_abs: String,
    pub min_abs_float: f64,
    pub zero_products: usize,
}

/// `f . l0` for every nonzero `l0` with entries in `[-bound, bound]`, with
/// `f` the frequency estimate at `depth`.
pub fn dependence_probe(directive: &Directive, bound: i64, depth: usize) -> Result<DependenceReport> {
    if bound < 1 {
        return Err(Error::InvalidInput("bound must be at least 1".into()));
    }
    let f = frequency_estimate(directive, depth)?;
    let range: Vec<i64> = (-bound..=bound).collect();
    let mut vectors = Vec::new();
    for &a in &range {
        for &b in &range {
            for &c in &range {
                if (a, b, c) != (0, 0, 0) {
                    vectors.push(AbelianVector::from_i64([a, b, c]));
                }
            }
        }
    }
    let products: Vec<BigRational> = vectors.par_iter().map(|l| f.dot(l)).collect();
    let (argmin, min) = vectors
        .iter()
        .zip(&products)
        .map(|(l, p)| (l, p.abs()))
        .reduce(|best, cur| if cur.1 < best.1 { cur } else { best })
        .expect("bound >= 1 gives candidates");
    let zero_products = products.iter().filter(|p| p.is_zero()).count();
    let candidates = vectors
        .iter()
        .zip(&products)
        .map(|(l, p)| ProbeCandidate {
            l0: l.clone(),
            product: p.to_string(),
            product_float: p.to_f64().unwrap_or(f64::NAN),
        })
        .collect();
    Ok(DependenceReport {
        directive: directive.clone(),
        bound,
        depth,
        frequency: f,
        candidates,
        argmin: argmin.clone(),
        min_abs_float: min.to_f64().unwrap_or(f64::NAN),
        min_abs: min.to_string(),
        zero_products,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: [i64; 3]) -> AbelianVector {
        AbelianVector::from_i64(x)
    }

    #[test]
    fn spread_examples() {
        assert_eq!(spread(&v([1, -1, 0])), BigInt::from(2));
        assert_eq!(spread(&v([4, 4, 4])), BigInt::from(0));
        assert_eq!(spread(&v([2, 3, -5])), BigInt::from(8));
    }

    #[test]
    fn sign_examples() {
        assert!(sign_condition(&v([1, -1, 0])));
        assert!(!sign_condition(&v([1, 2, 3])));
        assert!(!sign_condition(&v([0, 0, 0])));
    }

    #[test]
    fn sequence_examples() {
        let t = spread_sequence(&"1".parse().unwrap(), &v([1, -1, 0]), 1).unwrap();
        assert_eq!(t.vectors[1], v([1, 0, 1]));
        assert_eq!(t.spreads, [BigInt::from(2), BigInt::from(1)]);
        let t = spread_sequence(&"2".parse().unwrap(), &v([1, -1, 0]), 1).unwrap();
        assert_eq!(t.vectors[1], v([0, -1, -1]));
        assert_eq!(t.spreads, [BigInt::from(2), BigInt::from(1)]);
        assert!(spread_sequence(&"1".parse().unwrap(), &v([0, 0, 0]), 1).is_err());
    }

    #[test]
    fn probe_bound_one() {
        let r = dependence_probe(&"123*".parse().unwrap(), 1, 10).unwrap();
        assert_eq!(r.candidates.len(), 26);
        assert!(r.candidates.iter().all(|c| !c.l0.is_zero()));
        let c = r.candidates.iter().find(|c| c.l0 == v([1, -1, 0])).unwrap();
        let expected = &r.frequency.0[0] - &r.frequency.0[1];
        assert_eq!(c.product, expected.to_string());
    }
}
