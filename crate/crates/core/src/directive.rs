//! Directive sequences: finite prefixes, optionally repeated forever.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::Letter;

/// A finite sequence of substitution indices, `k` standing for `sigma_k`.
///
/// With `periodic` set the finite part is repeated forever. Text form is a
/// string over `1`, `2`, `3` with an optional trailing `*`, e.g. `"123*"`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Directive {
    indices: Vec<Letter>,
    periodic: bool,
}

impl Directive {
    pub fn finite(indices: Vec<Letter>) -> Directive {
        Directive { indices, periodic: false }
    }

    /// A periodic directive; the period must be nonempty.
    pub fn periodic(indices: Vec<Letter>) -> Result<Directive> {
        if indices.is_empty() {
            return Err(Error::InvalidDirective("*".into()));
        }
        Ok(Directive { indices, periodic: true })
    }

    pub fn indices(&self) -> &[Letter] {
        &self.indices
    }

    pub fn is_periodic(&self) -> bool {
        self.periodic
    }

    /// Number of available substitutions, `None` when unbounded.
    pub fn available(&self) -> Option<usize> {
        (!self.periodic).then_some(self.indices.len())
    }

    pub fn get(&self, k: usize) -> Option<Letter> {
        if self.periodic {
            Some(self.indices[k % self.indices.len()])
        } else {
            self.indices.get(k).copied()
        }
    }

    /// The first `n` substitutions, expanding a periodic tail as needed.
    pub fn take(&self, n: usize) -> Result<Vec<Letter>> {
        match self.available() {
            Some(len) if len < n => Err(Error::DirectiveExhausted { needed: n, available: len }),
            _ => Ok((0..n).map(|k| self.get(k).expect("within range")).collect()),
        }
    }

    /// The finite part repeated forever.
    pub fn as_periodic(&self) -> Result<Directive> {
        Directive::periodic(self.indices.clone())
    }
}

impl FromStr for Directive {
    type Err = Error;

    fn from_str(s: &str) -> Result<Directive> {
        let t = s.trim();
        let (body, periodic) = match t.strip_suffix('*') {
            Some(b) => (b, true),
            None => (t, false),
        };
        let indices = body
            .chars()
            .map(|c| Letter::try_from(c).map_err(|_| Error::InvalidDirective(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        if periodic {
            Directive::periodic(indices).map_err(|_| Error::InvalidDirective(s.to_string()))
        } else {
            Ok(Directive::finite(indices))
        }
    }
}

impl fmt::Display for Directive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.indices {
            write!(f, "{l}")?;
        }
        if self.periodic {
            f.write_str("*")?;
        }
        Ok(())
    }
}

impl Serialize for Directive {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Directive {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Directive, D::Error> {
        String::deserialize(de)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let d: Directive = "123*".parse().unwrap();
        assert!(d.is_periodic());
        assert_eq!(d.to_string(), "123*");
        assert_eq!(d.get(4), Some(Letter::TWO));
        assert_eq!(d.take(5).unwrap().len(), 5);

        let d: Directive = "12".parse().unwrap();
        assert_eq!(d.get(2), None);
        assert_eq!(d.take(3), Err(Error::DirectiveExhausted { needed: 3, available: 2 }));

        assert!("*".parse::<Directive>().is_err());
        assert!("14".parse::<Directive>().is_err());
        assert_eq!("".parse::<Directive>().unwrap().available(), Some(0));
    }
}
