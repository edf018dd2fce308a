//! Lifting a difference-graph path to two factors of one Arnoux-Rauzy word.
//!
//! For a path `(i_0, d_0) ... (i_{n-1}, d_{n-1})` start from the seed
//! `sigma_2^{2n-1}(1) = 2^{2n-1} 1` with `u = v = 2^n`. Step `l` applies
//! `sigma_{i_l}` to the host and to both factors and then adjusts them:
//!
//! | d  | u                    | v                    |
//! |----|----------------------|----------------------|
//! | 0  |                      |                      |
//! | 1  | append `i`           |                      |
//! | -1 |                      | append `i`           |
//! | 2  | append `i`           | remove initial `i`   |
//! | -2 | remove initial `i`   | append `i`           |
//!
//! Every image under `sigma_i` starts with `i`, so appending `i` to a factor
//! followed by at least one letter stays a factor, and the image of a factor
//! starts with `i`, so removing it is always possible. The Parikh vectors
//! follow `ab <- ab * M_i +- e_i`, which is exactly the edge map: the
//! difference stays equal to the current vertex of the path.

use num_bigint::BigInt;
use serde::Serialize;

use crate::abelian::AbelianVector;
use crate::directive::Directive;
use crate::error::{Error, Result};
use crate::graph::{simulate, Path};
use crate::matrix::{incidence_of, IncidenceMatrix};
use crate::serde_big;
use crate::substitution::apply_ar;
use crate::word::{find_factor, Letter, Word};

/// Default materialization cap, in letters.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Explicit,
    Symbolic,
}

/// A factor, either materialized or known through its Parikh vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum FactorRecord {
    Explicit(Word),
    Symbolic {
        abelian: AbelianVector,
        #[serde(serialize_with = "serde_big::serialize_int")]
        length: BigInt,
    },
}

impl FactorRecord {
    pub fn abelian(&self) -> AbelianVector {
        match self {
            FactorRecord::Explicit(w) => w.abelianize(),
            FactorRecord::Symbolic { abelian, .. } => abelian.clone(),
        }
    }

    pub fn word(&self) -> Option<&Word> {
        match self {
            FactorRecord::Explicit(w) => Some(w),
            FactorRecord::Symbolic { .. } => None,
        }
    }
}

/// Two factors `u`, `v` of the word `host_directive(1)` with
/// `ab(u) - ab(v) = target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessPair {
    pub target: AbelianVector,
    pub path: Path,
    pub host_directive: Directive,
    #[serde(serialize_with = "serde_big::serialize_int")]
    pub host_length: BigInt,
    pub mode: Mode,
    pub u: FactorRecord,
    pub v: FactorRecord,
    /// Occurrence positions of `u` and `v` tracked through the lift.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub positions: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
}

impl WitnessPair {
    pub fn difference(&self) -> AbelianVector {
        &self.u.abelian() - &self.v.abelian()
    }

    /// The host word, when it fits under `cap`.
    pub fn host_word(&self, cap: usize) -> Option<Word> {
        if self.host_length > BigInt::from(cap) {
            return None;
        }
        let mut w: Word = std::iter::once(Letter::ONE).collect();
        for &s in self.host_directive.indices().iter().rev() {
            w = apply_ar(s, &w);
        }
        Some(w)
    }
}

/// Host composition `sigma_{i_{n-1}} ... sigma_{i_0} sigma_2^{2n-1}`, outermost
/// letter first. Empty for the empty path.
pub fn lifted_directive(p: &Path) -> Vec<Letter> {
    let n = p.len();
    let mut letters: Vec<Letter> = p.edges().iter().rev().map(|e| e.i).collect();
    if n > 0 {
        letters.extend(std::iter::repeat_n(Letter::TWO, 2 * n - 1));
    }
    letters
}

fn word_length(ab: &AbelianVector) -> BigInt {
    ab.sum()
}

fn symbolic_lift(p: &Path) -> (AbelianVector, AbelianVector) {
    let n = p.len() as i64;
    let mut au = AbelianVector::from_i64([0, n, 0]);
    let mut av = au.clone();
    for e in p.edges() {
        let m = IncidenceMatrix::ar(e.i);
        au = au.mul_matrix(&m);
        av = av.mul_matrix(&m);
        let unit = AbelianVector::unit(e.i);
        match e.delta {
            1 => au = &au + &unit,
            -1 => av = &av + &unit,
            2 => {
                au = &au + &unit;
                av = &av - &unit;
            }
            -2 => {
                au = &au - &unit;
                av = &av + &unit;
            }
            _ => {}
        }
    }
    (au, av)
}

/// Number of letters different from `i` in `w[..end]`.
fn count_other(w: &Word, end: usize, i: Letter) -> usize {
    let iv = i.value();
    w.as_bytes()[..end].iter().filter(|&&c| c != iv).count()
}

fn strip(w: &mut Word, i: Letter, step: usize) -> Result<()> {
    if w.first() != Some(i) {
        return Err(Error::StripFailed { step, letter: i.value() });
    }
    w.strip_first();
    Ok(())
}

struct Explicit {
    host: Word,
    u: Word,
    v: Word,
    pu: usize,
    pv: usize,
}

fn explicit_lift(p: &Path) -> Result<Explicit> {
    let n = p.len();
    let mut host = Word::with_capacity(2 * n);
    let mut u = Word::new();
    for _ in 0..(2 * n).saturating_sub(1) {
        host.push(Letter::TWO);
    }
    host.push(Letter::ONE);
    for _ in 0..n {
        u.push(Letter::TWO);
    }
    let mut st = Explicit { host, v: u.clone(), u, pu: 0, pv: 0 };

    for (l, e) in p.edges().iter().enumerate() {
        let i = e.i;
        st.pu += count_other(&st.host, st.pu, i);
        st.pv += count_other(&st.host, st.pv, i);
        st.host = apply_ar(i, &st.host);
        st.u = apply_ar(i, &st.u);
        st.v = apply_ar(i, &st.v);
        match e.delta {
            1 => st.u.push(i),
            -1 => st.v.push(i),
            2 => {
                st.u.push(i);
                strip(&mut st.v, i, l)?;
                st.pv += 1;
            }
            -2 => {
                strip(&mut st.u, i, l)?;
                st.pu += 1;
                st.v.push(i);
            }
            _ => {}
        }
        // each factor sits at its tracked position and keeps n - l - 1
        // letters after it for the remaining appends
        let spare = n - l - 1;
        for (w, pos) in [(&st.u, st.pu), (&st.v, st.pv)] {
            let end = pos + w.len();
            if end + spare > st.host.len() || st.host.as_bytes()[pos..end] != *w.as_bytes() {
                return Err(Error::Invariant(format!(
                    "step {l}: factor {w} not followed by {spare} letters at position {pos}"
                )));
            }
        }
    }
    Ok(st)
}

/// Lifts `p` to a witness pair. The host word is materialized when its length
/// is at most `cap`; otherwise only Parikh vectors are tracked.
pub fn lift_path_to_factors(p: &Path, cap: usize) -> Result<WitnessPair> {
    let target = simulate(p);
    let host_directive = lifted_directive(p);
    let host_length = word_length(&AbelianVector::unit(Letter::ONE).mul_matrix(&incidence_of(&host_directive)));
    let (au, av) = symbolic_lift(p);
    if &au - &av != target {
        return Err(Error::Invariant(format!("symbolic lift of {p} gives {} not {target}", &au - &av)));
    }

    let host_directive = Directive::finite(host_directive);
    if host_length > BigInt::from(cap) {
        let notice = format!("host length {host_length} exceeds cap {cap}; symbolic verification only");
        return Ok(WitnessPair {
            target,
            path: p.clone(),
            host_directive,
            host_length,
            mode: Mode::Symbolic,
            u: FactorRecord::Symbolic { length: word_length(&au), abelian: au },
            v: FactorRecord::Symbolic { length: word_length(&av), abelian: av },
            positions: None,
            notice: Some(notice),
        });
    }

    let st = explicit_lift(p)?;
    if BigInt::from(st.host.len()) != host_length {
        return Err(Error::Invariant(format!("host has {} letters, expected {host_length}", st.host.len())));
    }
    if st.u.abelianize() != au || st.v.abelianize() != av {
        return Err(Error::Invariant(format!("explicit and symbolic lifts of {p} disagree")));
    }
    for (w, pos) in [(&st.u, st.pu), (&st.v, st.pv)] {
        let found = find_factor(w, &st.host).unwrap_or_default();
        if !found.contains(&pos) {
            return Err(Error::Invariant(format!("substring search misses {w} at {pos}")));
        }
    }
    Ok(WitnessPair {
        target,
        path: p.clone(),
        host_directive,
        host_length,
        mode: Mode::Explicit,
        u: FactorRecord::Explicit(st.u),
        v: FactorRecord::Explicit(st.v),
        positions: Some([st.pu, st.pv]),
        notice: None,
    })
}
