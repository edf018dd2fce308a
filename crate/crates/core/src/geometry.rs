//! Broken lines, projections onto `x + y + z = 0`, discrepancy, imbalance and
//! distances to planes.
//!
//! Everything is exact: frequencies are rational estimates and distances are
//! compared as squared rationals.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::abelian::AbelianVector;
use crate::directive::Directive;
use crate::error::{Error, Result};
use crate::frequency::{frequency_estimate, FrequencyVector};
use crate::standard::standard_prefix;
use crate::word::Word;

pub type Rational3 = [BigRational; 3];

pub fn rational3(v: &AbelianVector) -> Rational3 {
    v.0.clone().map(BigRational::from_integer)
}

fn counts3(c: [u64; 3]) -> Rational3 {
    c.map(|x| BigRational::from_integer(BigInt::from(x)))
}

fn dot(a: &Rational3, b: &Rational3) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).fold(BigRational::zero(), |s, t| s + t)
}

fn cross(a: &Rational3, b: &Rational3) -> Rational3 {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

pub fn to_f64(v: &Rational3) -> [f64; 3] {
    v.clone().map(|x| x.to_f64().unwrap_or(f64::NAN))
}

/// A point of the plane `x + y + z = 0`, with the prefix length it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Delta0Point {
    pub index: usize,
    pub coords: Rational3,
}

impl Delta0Point {
    pub fn sup_norm(&self) -> BigRational {
        self.coords.iter().map(Signed::abs).max().unwrap_or_else(BigRational::zero)
    }
}

/// `x - (x1 + x2 + x3) f`, the projection along `f` onto the sum-zero plane.
pub fn project_delta0(x: &Rational3, f: &FrequencyVector) -> Rational3 {
    let s: BigRational = x.iter().sum();
    std::array::from_fn(|i| &x[i] - &s * &f.0[i])
}

/// Parikh vectors of the prefixes `p_0, ..., p_len` of `w`.
pub fn broken_line(w: &Word) -> Vec<[u64; 3]> {
    let mut out = Vec::with_capacity(w.len() + 1);
    let mut c = [0u64; 3];
    out.push(c);
    for l in w.letters() {
        c[l.index()] += 1;
        out.push(c);
    }
    out
}

/// A finite approximation of the Rauzy fractal.
#[derive(Debug, Clone)]
pub struct FractalCloud {
    pub freq_depth: usize,
    pub frequency: FrequencyVector,
    /// `ab(p_k)` for `k = 0..=length`.
    pub broken_line: Vec<[u64; 3]>,
    pub points: Vec<Delta0Point>,
}

/// Projected broken line of the first `length` letters of the standard word.
pub fn fractal_cloud(directive: &Directive, length: usize, freq_depth: usize) -> Result<FractalCloud> {
    let w = standard_prefix(directive, length)?;
    let f = frequency_estimate(directive, freq_depth)?;
    let line = broken_line(&w);
    let points = line
        .par_iter()
        .enumerate()
        .map(|(k, c)| Delta0Point { index: k, coords: project_delta0(&counts3(*c), &f) })
        .collect();
    Ok(FractalCloud { freq_depth, frequency: f, broken_line: line, points })
}

/// `max_a | |p_n|_a - n f_a |` for `n = 0..=length`.
pub fn discrepancy_series(directive: &Directive, length: usize, freq_depth: usize) -> Result<Vec<BigRational>> {
    let w = standard_prefix(directive, length)?;
    let f = frequency_estimate(directive, freq_depth)?;
    Ok(discrepancy_of(&w, &f))
}

/// The discrepancy series of a given word against `f`.
pub fn discrepancy_of(w: &Word, f: &FrequencyVector) -> Vec<BigRational> {
    broken_line(w)
        .par_iter()
        .enumerate()
        .map(|(n, c)| {
            let n = BigRational::from_integer(BigInt::from(n));
            (0..3)
                .map(|a| (BigRational::from_integer(BigInt::from(c[a])) - &n * &f.0[a]).abs())
                .max()
                .expect("three letters")
        })
        .collect()
}

/// Entry `n` is the largest `|u|_a - |v|_a` over letters `a` and factors `u`,
/// `v` of length `n`, for `n = 0..=max_len`.
pub fn imbalance_scan(w: &Word, max_len: usize) -> Result<Vec<u64>> {
    if max_len > w.len() {
        return Err(Error::InvalidInput(format!("window length {max_len} exceeds word length {}", w.len())));
    }
    let prefix = broken_line(w);
    Ok((0..=max_len)
        .into_par_iter()
        .map(|n| {
            let mut lo = [u64::MAX; 3];
            let mut hi = [0u64; 3];
            for i in 0..=w.len() - n {
                for a in 0..3 {
                    let c = prefix[i + n][a] - prefix[i][a];
                    lo[a] = lo[a].min(c);
                    hi[a] = hi[a].max(c);
                }
            }
            (0..3).map(|a| hi[a] - lo[a]).max().unwrap_or(0)
        })
        .collect())
}

/// Two factors of a word with `ab(u) - ab(v)` equal to a target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferenceWitness {
    pub u: Word,
    pub v: Word,
    pub positions: [usize; 2],
}

/// Searches `w` for factors `u`, `v` with `ab(u) - ab(v) = target`.
///
/// Lengths satisfy `|u| - |v| = sum(target)`. Nonempty `u` are tried by
/// increasing length first, then `u` empty. `None` only means that this word
/// has no such pair.
pub fn find_difference_witness(w: &Word, target: &AbelianVector) -> Option<DifferenceWitness> {
    let t = target.to_i64()?;
    if t == [0, 0, 0] {
        return Some(DifferenceWitness { u: Word::new(), v: Word::new(), positions: [0, 0] });
    }
    let s: i64 = t.iter().sum();
    let len = w.len() as i64;
    let prefix = broken_line(w);
    let window = |i: usize, n: usize| -> [i64; 3] { std::array::from_fn(|a| (prefix[i + n][a] - prefix[i][a]) as i64) };
    let lengths = (s.max(1)..=len).chain((s <= 0).then_some(0));
    for n in lengths {
        let m = n - s;
        if m < 0 || m > len {
            continue;
        }
        let (n, m) = (n as usize, m as usize);
        let mut first: HashMap<[i64; 3], usize> = HashMap::new();
        for j in 0..=w.len() - m {
            first.entry(window(j, m)).or_insert(j);
        }
        for i in 0..=w.len() - n {
            let a = window(i, n);
            let need = [a[0] - t[0], a[1] - t[1], a[2] - t[2]];
            if let Some(&j) = first.get(&need) {
                return Some(DifferenceWitness { u: w.factor(i, n), v: w.factor(j, m), positions: [i, j] });
            }
        }
    }
    None
}

/// A plane through the origin, given by a nonzero normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plane {
    normal: Rational3,
}

impl Plane {
    pub fn new(normal: Rational3) -> Result<Plane> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::InvalidInput("plane normal is zero".into()));
        }
        Ok(Plane { normal })
    }

    /// The plane spanned by two independent vectors.
    pub fn spanned_by(a: &Rational3, b: &Rational3) -> Result<Plane> {
        Plane::new(cross(a, b))
    }

    pub fn normal(&self) -> &Rational3 {
        &self.normal
    }

    /// Squared euclidean distance from `p` to the plane.
    pub fn squared_distance(&self, p: &Rational3) -> BigRational {
        let d = dot(&self.normal, p);
        &d * &d / dot(&self.normal, &self.normal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneProbe {
    pub max_squared: BigRational,
    pub argmax: usize,
}

impl PlaneProbe {
    pub fn distance(&self) -> f64 {
        self.max_squared.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

/// Largest distance from `points` to `plane`, first index on ties.
pub fn plane_distance_probe(points: &[Rational3], plane: &Plane) -> Option<PlaneProbe> {
    points
        .par_iter()
        .enumerate()
        .map(|(k, p)| PlaneProbe { max_squared: plane.squared_distance(p), argmax: k })
        .reduce_with(|a, b| {
            if b.max_squared > a.max_squared || (b.max_squared == a.max_squared && b.argmax < a.argmax) {
                b
            } else {
                a
            }
        })
}

/// Number of planes in [`plane_fan`].
pub const FAN_SIZE: usize = 12;
const FAN_SCALE: f64 = 1e6;

/// Integer directions of the sum-zero plane at `k * 15` degrees, measured from
/// `(1,-1,0)` towards `(1,1,-2)`, scaled by `10^6` and rounded with an exact
/// zero sum.
pub fn fan_directions() -> Vec<[i64; 3]> {
    let (ra, rb) = (2f64.sqrt(), 6f64.sqrt());
    (0..FAN_SIZE)
        .map(|k| {
            let th = (k as f64 * 15.0).to_radians();
            let (c, s) = (th.cos(), th.sin());
            let x = (FAN_SCALE * (c / ra + s / rb)).round() as i64;
            let y = (FAN_SCALE * (-c / ra + s / rb)).round() as i64;
            [x, y, -x - y]
        })
        .collect()
}

/// The planes spanned by `f` and each of [`fan_directions`].
pub fn plane_fan(f: &FrequencyVector) -> Vec<Plane> {
    fan_directions()
        .into_iter()
        .map(|d| {
            Plane::spanned_by(&f.0, &rational3(&AbelianVector::from_i64(d))).expect("f is not in the sum-zero plane")
        })
        .collect()
}

/// Whether the broken line reaches distance `dist(d, plane) / 4`, as it must
/// when `d = ab(u) - ab(v)` for factors `u`, `v` inside the prefix: writing
/// `u` and `v` as differences of prefix vectors, one of the four prefix points
/// carries a quarter of the distance.
pub fn geom_bound_holds(probe: &PlaneProbe, d: &AbelianVector, plane: &Plane) -> bool {
    BigRational::from_integer(BigInt::from(16)) * &probe.max_squared >= plane.squared_distance(&rational3(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn v(x: [i64; 3]) -> AbelianVector {
        AbelianVector::from_i64(x)
    }

    #[test]
    fn projection_examples() {
        let f = FrequencyVector::from_rationals([q(1, 2), q(1, 4), q(1, 4)]).unwrap();
        assert_eq!(project_delta0(&[q(1, 1), q(0, 1), q(0, 1)], &f), [q(1, 2), q(-1, 4), q(-1, 4)]);
        assert_eq!(project_delta0(&f.0, &f), [q(0, 1), q(0, 1), q(0, 1)]);
        let x = [q(3, 1), q(-1, 1), q(-2, 1)];
        assert_eq!(project_delta0(&x, &f), x);
    }

    #[test]
    fn imbalance_examples() {
        assert_eq!(imbalance_scan(&w("1111"), 4).unwrap(), [0, 0, 0, 0, 0]);
        assert_eq!(imbalance_scan(&w("121"), 1).unwrap()[1], 1);
        assert!(imbalance_scan(&w("12"), 3).is_err());
    }

    #[test]
    fn difference_examples() {
        let d = find_difference_witness(&w("221"), &v([0, -1, 0])).unwrap();
        assert_eq!((d.u.to_string(), d.v.to_string()), ("2".into(), "22".into()));
        let d = find_difference_witness(&w("1213"), &v([0, 0, 0])).unwrap();
        assert!(d.u.is_empty() && d.v.is_empty());
        assert!(find_difference_witness(&w("121"), &v([5, 0, 0])).is_none());
        let d = find_difference_witness(&w("1"), &v([-1, 0, 0])).unwrap();
        assert_eq!((d.u.to_string(), d.v.to_string()), ("".into(), "1".into()));
    }

    #[test]
    fn plane_examples() {
        let x_eq_0 = Plane::new([q(1, 1), q(0, 1), q(0, 1)]).unwrap();
        let p = plane_distance_probe(&[[q(1, 1), q(-1, 1), q(0, 1)]], &x_eq_0).unwrap();
        assert_eq!(p.max_squared, q(1, 1));
        let on = plane_distance_probe(&[[q(0, 1), q(5, 1), q(-2, 1)], [q(0, 1), q(0, 1), q(0, 1)]], &x_eq_0).unwrap();
        assert_eq!(on.max_squared, q(0, 1));
        assert_eq!(on.argmax, 0);
        assert!(Plane::new([q(0, 1), q(0, 1), q(0, 1)]).is_err());
    }

    #[test]
    fn fan_is_in_sum_zero_plane() {
        let dirs = fan_directions();
        assert_eq!(dirs.len(), 12);
        assert_eq!(dirs[0], [707107, -707107, 0]);
        assert!(dirs.iter().all(|d| d.iter().sum::<i64>() == 0));
        let f = frequency_estimate(&"123*".parse().unwrap(), 20).unwrap();
        for plane in plane_fan(&f) {
            assert!(dot(plane.normal(), &f.0).is_zero());
        }
    }

    #[test]
    fn discrepancy_starts_at_zero() {
        let s = discrepancy_series(&"123*".parse().unwrap(), 10, 20).unwrap();
        assert_eq!(s.len(), 11);
        assert!(s[0].is_zero());
    }

    #[test]
    fn cloud_of_length_zero() {
        let c = fractal_cloud(&"123*".parse().unwrap(), 0, 10).unwrap();
        assert_eq!(c.points.len(), 1);
        assert!(c.points[0].coords.iter().all(Zero::is_zero));
    }
}
