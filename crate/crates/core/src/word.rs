//! Letters of the alphabet `{1, 2, 3}` and finite words over it.

use std::fmt;
use std::str::FromStr;

use memchr::memmem;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::abelian::AbelianVector;
use crate::error::{Error, Result};

/// A letter of the alphabet `{1, 2, 3}`, serialized as its integer value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter(u8);

impl Letter {
    pub const ONE: Letter = Letter(1);
    pub const TWO: Letter = Letter(2);
    pub const THREE: Letter = Letter(3);
    pub const ALL: [Letter; 3] = [Letter::ONE, Letter::TWO, Letter::THREE];

    pub fn new(value: u8) -> Option<Letter> {
        (1..=3).contains(&value).then_some(Letter(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Zero-based coordinate index of the letter.
    pub fn index(self) -> usize {
        usize::from(self.0 - 1)
    }

    pub fn from_index(index: usize) -> Letter {
        assert!(index < 3, "letter index out of range: {index}");
        Letter(index as u8 + 1)
    }

    pub fn to_char(self) -> char {
        char::from(b'0' + self.0)
    }
}

impl TryFrom<char> for Letter {
    type Error = Error;

    fn try_from(c: char) -> Result<Letter> {
        match c {
            '1' => Ok(Letter::ONE),
            '2' => Ok(Letter::TWO),
            '3' => Ok(Letter::THREE),
            other => Err(Error::InvalidLetter(other)),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word, stored as a flat array of letter values.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn new() -> Word {
        Word::default()
    }

    pub fn with_capacity(capacity: usize) -> Word {
        Word { letters: Vec::with_capacity(capacity) }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<Letter> {
        self.letters.get(index).map(|&v| Letter(v))
    }

    pub fn first(&self) -> Option<Letter> {
        self.get(0)
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        self.letters.iter().map(|&v| Letter(v))
    }

    /// Raw letter values, each in `1..=3`.
    pub fn as_bytes(&self) -> &[u8] {
        &self.letters
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter.0);
    }

    pub fn extend_from_word(&mut self, other: &Word) {
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn truncate(&mut self, len: usize) {
        self.letters.truncate(len);
    }

    /// The prefix of length `min(n, len)`.
    pub fn prefix(&self, n: usize) -> Word {
        Word { letters: self.letters[..n.min(self.len())].to_vec() }
    }

    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word { letters: self.letters[start..start + len].to_vec() }
    }

    /// Drops the first letter.
    pub fn strip_first(&mut self) -> Option<Letter> {
        if self.letters.is_empty() {
            None
        } else {
            Some(Letter(self.letters.remove(0)))
        }
    }

    /// Letter counts `(|u|_1, |u|_2, |u|_3)`.
    pub fn counts(&self) -> [u64; 3] {
        let mut c = [0u64; 3];
        for &v in &self.letters {
            c[usize::from(v - 1)] += 1;
        }
        c
    }

    pub fn abelianize(&self) -> AbelianVector {
        AbelianVector::from_counts(self.counts())
    }

    pub(crate) fn from_raw(letters: Vec<u8>) -> Word {
        debug_assert!(letters.iter().all(|v| (1..=3).contains(v)));
        Word { letters }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word { letters: iter.into_iter().map(|l| l.0).collect() }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.chars().map(Letter::try_from).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.letters().map(Letter::to_char).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parikh vector of `u`.
pub fn abelianize(u: &Word) -> AbelianVector {
    u.abelianize()
}

/// All starting positions of `u` in `host`, overlapping occurrences included.
///
/// Returns `None` when `u` does not occur. The empty word occurs at every
/// position `0..=host.len()`.
pub fn find_factor(u: &Word, host: &Word) -> Option<Vec<usize>> {
    if u.len() > host.len() {
        return None;
    }
    if u.is_empty() {
        return Some((0..=host.len()).collect());
    }
    let finder = memmem::Finder::new(u.as_bytes());
    let haystack = host.as_bytes();
    let mut positions = Vec::new();
    let mut from = 0;
    while let Some(offset) = finder.find(&haystack[from..]) {
        positions.push(from + offset);
        from += offset + 1;
        if from + u.len() > haystack.len() {
            break;
        }
    }
    (!positions.is_empty()).then_some(positions)
}
