//! The difference graph on `Z^3`.
//!
//! Edge `(i, d)` sends `x` to the triple whose coordinate `i` is replaced by
//! `x1 + x2 + x3 + d`, with `d` in `-2..=2`. Every vertex is reachable from
//! the origin; [`accessibility_path`] builds such a path explicitly.
//!
//! The construction goes through the anchors `(a, -a, -a)`, reached by a
//! recurrence followed by a symmetry. From the anchor a ramp of `d = +1`
//! edges reaches one of the terminal forms `(a, b, -a)`, `(a, -a, c)` or
//! `(a, c, c)`, and `d = 0` edges then climb to the target. Written with
//! `d = 0`, the ramp would stay put: `(2, 0)` fixes `(a, -a, -a)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::abelian::AbelianVector;
use crate::error::{Error, Result};
use crate::word::Letter;

/// Largest sup-norm for which [`accessibility_path`] materializes a path;
/// beyond it the path has more than `2^24` edges.
pub const MAX_PATH_NORM: i64 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub i: Letter,
    pub delta: i8,
}

impl Edge {
    pub fn new(i: u8, delta: i64) -> Result<Edge> {
        let letter = Letter::new(i).ok_or(Error::InvalidEdge { letter: i, delta })?;
        if !(-2..=2).contains(&delta) {
            return Err(Error::InvalidEdge { letter: i, delta });
        }
        Ok(Edge { i: letter, delta: delta as i8 })
    }

    fn of(i: usize, delta: i8) -> Edge {
        Edge { i: Letter::from_index(i - 1), delta }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.delta)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        (self.i.value(), self.delta).serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Edge, D::Error> {
        let (i, delta) = <(u8, i64)>::deserialize(de)?;
        Edge::new(i, delta).map_err(D::Error::custom)
    }
}

/// A finite edge sequence, implicitly starting at the origin.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(pub Vec<Edge>);

impl Path {
    pub fn new() -> Path {
        Path::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.0
    }

    fn push_n(&mut self, e: Edge, n: i64) {
        self.0.extend(std::iter::repeat_n(e, n as usize));
    }
}

impl FromIterator<Edge> for Path {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Path {
        Path(iter.into_iter().collect())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// A signed coordinate permutation.
///
/// `perm[j]` is the image of letter `j + 1`. Acting on a path, edge `(i, d)`
/// becomes `(perm(i), +-d)`; the endpoint `x` becomes `y` with
/// `y[perm(j)] = +-x[j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetryTransform {
    pub negate: bool,
    pub perm: [Letter; 3],
}

impl SymmetryTransform {
    pub const IDENTITY: SymmetryTransform = SymmetryTransform { negate: false, perm: Letter::ALL };

    pub fn new(negate: bool, perm: [Letter; 3]) -> Result<SymmetryTransform> {
        let mut seen = [false; 3];
        for l in perm {
            seen[l.index()] = true;
        }
        if seen.contains(&false) {
            return Err(Error::InvalidInput(format!("not a permutation: {perm:?}")));
        }
        Ok(SymmetryTransform { negate, perm })
    }

    pub fn negation() -> SymmetryTransform {
        SymmetryTransform { negate: true, ..SymmetryTransform::IDENTITY }
    }

    /// Exchanges letters `i` and `j`.
    pub fn swap(i: Letter, j: Letter) -> SymmetryTransform {
        let mut perm = Letter::ALL;
        perm.swap(i.index(), j.index());
        SymmetryTransform { negate: false, perm }
    }

    pub fn with_negation(self, negate: bool) -> SymmetryTransform {
        SymmetryTransform { negate, ..self }
    }

    pub fn inverse(self) -> SymmetryTransform {
        let mut perm = Letter::ALL;
        for (j, l) in self.perm.iter().enumerate() {
            perm[l.index()] = Letter::from_index(j);
        }
        SymmetryTransform { negate: self.negate, perm }
    }

    /// The endpoint map matching [`transform_path`].
    pub fn apply_vertex(&self, x: &AbelianVector) -> AbelianVector {
        let mut y = AbelianVector::zero();
        for j in 0..3 {
            let v = &x.0[j];
            y.0[self.perm[j].index()] = if self.negate { -v } else { v.clone() };
        }
        y
    }
}

/// `x` with coordinate `e.i` replaced by `x1 + x2 + x3 + e.delta`.
pub fn apply_edge(x: &AbelianVector, e: Edge) -> AbelianVector {
    let mut y = x.clone();
    y.0[e.i.index()] = x.sum() + BigInt::from(e.delta);
    y
}

/// Endpoint of `p` started at the origin.
pub fn simulate(p: &Path) -> AbelianVector {
    // exact small-integer fast path; falls back to big integers on overflow
    let mut x = [0i64; 3];
    for (k, e) in p.0.iter().enumerate() {
        let s = x[0].checked_add(x[1]).and_then(|s| s.checked_add(x[2])).and_then(|s| s.checked_add(e.delta.into()));
        match s {
            Some(s) => x[e.i.index()] = s,
            None => {
                let mut big = AbelianVector::from_i64(x);
                for &e in &p.0[k..] {
                    big = apply_edge(&big, e);
                }
                return big;
            }
        }
    }
    AbelianVector::from_i64(x)
}

/// All vertices visited by `p`, starting with the origin.
pub fn trace(p: &Path) -> Vec<AbelianVector> {
    let mut out = Vec::with_capacity(p.len() + 1);
    let mut x = AbelianVector::zero();
    out.push(x.clone());
    for &e in &p.0 {
        x = apply_edge(&x, e);
        out.push(x.clone());
    }
    out
}

pub fn transform_path(p: &Path, t: &SymmetryTransform) -> Path {
    p.0.iter().map(|e| Edge { i: t.perm[e.i.index()], delta: if t.negate { -e.delta } else { e.delta } }).collect()
}

/// A path from the origin to `(a, -a, -a)` with `a^2 + 2a` edges.
///
/// From `(k, -k, -k)` the edges `(2,-1)`, `(3,2)^(2k+1)`, `(1,1)` reach
/// `(k+1, -k-1, k+1)`; negating and exchanging letters 1 and 2 turns that
/// into the next anchor.
pub fn anchor_path(a: u64) -> Path {
    let t = SymmetryTransform::swap(Letter::ONE, Letter::TWO).with_negation(true);
    let mut p = Path::new();
    for k in 0..a as i64 {
        p.0.push(Edge::of(2, -1));
        p.push_n(Edge::of(3, 2), 2 * k + 1);
        p.0.push(Edge::of(1, 1));
        p = transform_path(&p, &t);
    }
    p
}

/// Lower bound on the length of [`accessibility_path`] for a target of
/// sup-norm `a`: the anchor part alone has `a^2 + 2a` edges.
pub fn path_length_lower_bound(a: &BigInt) -> BigInt {
    a * a + 2 * a
}

/// Normalizing transform: moves the first coordinate of largest absolute
/// value to position 1, then negates if it is negative. The transform is its
/// own inverse.
fn normalization(t: &[i64; 3]) -> (SymmetryTransform, [i64; 3]) {
    let mut j = 0;
    for k in 1..3 {
        if t[k].abs() > t[j].abs() {
            j = k;
        }
    }
    let swap = SymmetryTransform::swap(Letter::ONE, Letter::from_index(j));
    let mut x = *t;
    x.swap(0, j);
    let negate = x[0] < 0;
    if negate {
        x = x.map(|v| -v);
    }
    (swap.with_negation(negate), x)
}

/// The anchor path for `a` followed by runs of `d = +1` (or a final `d = 0`) edges.
fn ramp(a: i64, runs: &[(Edge, i64)]) -> Path {
    let mut p = anchor_path(a as u64);
    for &(e, n) in runs {
        p.push_n(e, n);
    }
    p
}

/// An explicit path from the origin to `target`.
///
/// Fails with [`Error::TargetTooLarge`] when the sup-norm exceeds
/// [`MAX_PATH_NORM`].
pub fn accessibility_path(target: &AbelianVector) -> Result<Path> {
    let t = target
        .to_i64()
        .filter(|v| v.iter().all(|x| x.abs() <= MAX_PATH_NORM))
        .ok_or_else(|| Error::TargetTooLarge { target: target.to_string() })?;
    if t == [0, 0, 0] {
        return Ok(Path::new());
    }
    let (norm, [a, mut b, mut c]) = normalization(&t);

    // Descend with inverse (2,0) / (3,0) edges until a terminal form appears.
    // Each step lowers b or c while keeping both in [-a, a].
    let mut descent = Vec::new();
    let guard = 10 * a * a + 100;
    let mut head = loop {
        if b == 0 && c == 0 && a <= 2 {
            // one edge away from the origin
            break Path(vec![Edge::of(1, a as i8)]);
        }
        if c == -a {
            break ramp(a, &[(Edge::of(2, 1), a + b)]);
        }
        if b == -a && c == a {
            // (a, -a, a) is the anchor recurrence's own intermediate point
            let mut p = anchor_path(a as u64 - 1);
            p.0.push(Edge::of(2, -1));
            p.push_n(Edge::of(3, 2), 2 * a - 1);
            p.0.push(Edge::of(1, 1));
            break p;
        }
        if b == -a {
            break ramp(a, &[(Edge::of(3, 1), a + c)]);
        }
        if b == c {
            break ramp(a, &[(Edge::of(3, 1), a + c), (Edge::of(2, 0), 1)]);
        }
        if b > c {
            b = b - a - c;
            descent.push(Edge::of(2, 0));
        } else {
            c = c - a - b;
            descent.push(Edge::of(3, 0));
        }
        if descent.len() as i64 > guard {
            return Err(Error::Invariant(format!("descent from {target} did not terminate")));
        }
    };

    head.0.extend(descent.into_iter().rev());
    let p = transform_path(&head, &norm);
    if &simulate(&p) != target {
        return Err(Error::Invariant(format!("path for {target} reaches {}", simulate(&p))));
    }
    Ok(p)
}

/// `accessibility_path` length for targets that fit; otherwise the lower bound.
pub fn estimated_path_length(target: &AbelianVector) -> BigInt {
    let a = target.sup_norm();
    match a.to_i64() {
        Some(n) if n <= MAX_PATH_NORM => {
            accessibility_path(target).map(|p| BigInt::from(p.len())).unwrap_or_else(|_| path_length_lower_bound(&a))
        }
        _ => path_length_lower_bound(&a.abs()),
    }
}
