//! Nonerasing substitutions over `{1, 2, 3}`.

use crate::error::{Error, Result};
use crate::matrix::IncidenceMatrix;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    images: [Word; 3],
}

impl Substitution {
    /// Builds a substitution from the images of `1`, `2`, `3`.
    pub fn new(images: [Word; 3]) -> Result<Substitution> {
        if let Some(i) = images.iter().position(Word::is_empty) {
            return Err(Error::InvalidInput(format!("image of letter {} is empty", i + 1)));
        }
        Ok(Substitution { images })
    }

    /// The Arnoux-Rauzy substitution `sigma_i`: `i -> i`, `j -> ij`.
    pub fn ar(i: Letter) -> Substitution {
        let images = Letter::ALL.map(|j| {
            let mut w = Word::with_capacity(2);
            w.push(i);
            if j != i {
                w.push(j);
            }
            w
        });
        Substitution { images }
    }

    pub fn image(&self, letter: Letter) -> &Word {
        &self.images[letter.index()]
    }

    pub fn apply(&self, u: &Word) -> Word {
        let mut out = Word::with_capacity(u.len() * 2);
        for l in u.letters() {
            out.extend_from_word(self.image(l));
        }
        out
    }

    pub fn incidence(&self) -> IncidenceMatrix {
        IncidenceMatrix(self.images.clone().map(|w| w.abelianize().0))
    }
}

/// `s(u)`: concatenation of the letter images in order.
pub fn apply_substitution(s: &Substitution, u: &Word) -> Word {
    s.apply(u)
}

/// `sigma_i(u)` truncated to its first `cap` letters.
///
/// A prefix of `u` maps to a prefix of `sigma_i(u)`, so only as many letters
/// of `u` are read as needed.
pub(crate) fn apply_ar_truncated(i: Letter, u: &Word, cap: usize) -> Word {
    let iv = i.value();
    let mut out = Vec::with_capacity(cap.min(u.len() * 2));
    for &v in u.as_bytes() {
        if out.len() >= cap {
            break;
        }
        out.push(iv);
        if v != iv {
            out.push(v);
        }
    }
    out.truncate(cap);
    Word::from_raw(out)
}

/// `sigma_i(u)` for an AR substitution, without the generic image table.
pub(crate) fn apply_ar(i: Letter, u: &Word) -> Word {
    apply_ar_truncated(i, u, usize::MAX)
}
