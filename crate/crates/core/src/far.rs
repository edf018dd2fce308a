//! The Arnoux-Rauzy continued fraction map `F_AR`.
//!
//! On a triple where `x_i >= x_j + x_k`, one step emits `i` and replaces
//! `x_i` by `x_i - x_j - x_k`. Conditions are tested for `i = 1, 2, 3` in
//! order and equality counts as satisfied.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::Letter;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FarHalt {
    /// The selected step would subtract zero: at least two entries vanished.
    ZeroEntry,
    /// No entry dominates the sum of the two others.
    NoCondition,
    MaxSteps,
}

impl FarHalt {
    pub fn as_str(self) -> &'static str {
        match self {
            FarHalt::ZeroEntry => "zero entry",
            FarHalt::NoCondition => "no condition",
            FarHalt::MaxSteps => "max steps",
        }
    }
}

impl fmt::Display for FarHalt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for FarHalt {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarExpansion {
    pub letters: Vec<Letter>,
    pub remainder: [BigRational; 3],
    pub halt: FarHalt,
}

impl Serialize for FarExpansion {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("FarExpansion", 3)?;
        st.serialize_field("letters", &self.letters)?;
        st.serialize_field("remainder", &self.remainder.clone().map(|x| x.to_string()))?;
        st.serialize_field("halt", &self.halt)?;
        st.end()
    }
}

/// Iterates `F_AR` on `v` with exact rationals for at most `max_steps` steps.
pub fn far_expand(v: &[BigRational; 3], max_steps: usize) -> Result<FarExpansion> {
    if v.iter().any(Signed::is_negative) {
        return Err(Error::InvalidInput("far_expand needs nonnegative entries".into()));
    }
    let mut x = v.clone();
    let mut letters = Vec::new();
    let halt = loop {
        let selected = (0..3).find(|&i| {
            let others = &x[(i + 1) % 3] + &x[(i + 2) % 3];
            x[i] >= others
        });
        let Some(i) = selected else {
            break FarHalt::NoCondition;
        };
        let others = &x[(i + 1) % 3] + &x[(i + 2) % 3];
        if others.is_zero() {
            break FarHalt::ZeroEntry;
        }
        if letters.len() >= max_steps {
            break FarHalt::MaxSteps;
        }
        x[i] -= others;
        letters.push(Letter::from_index(i));
    };
    Ok(FarExpansion { letters, remainder: x, halt })
}
