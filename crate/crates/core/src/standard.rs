//! Prefixes of standard Arnoux-Rauzy words.
//!
//! For a directive `s_0 s_1 ...` the words `s_0 o ... o s_{n-1}(b)` converge
//! to the same infinite word for every seed letter `b`. At depth `n` the limit
//! is `s_0 o ... o s_{n-1}(w_n)` for some tail word `w_n`. If `w_n` starts
//! with `b`, its second letter maps under `s_{n-1}` to a word starting with
//! `i_{n-1}`, so the limit starts with `img(b) . Q` where
//! `Q = s_0 o ... o s_{n-2}(i_{n-1}) = img(i_{n-1})`. The common prefix of
//! these three words is therefore determined whatever the continuation is.

use crate::directive::Directive;
use crate::error::{Error, Result};
use crate::substitution::apply_ar_truncated;
use crate::word::{Letter, Word};

/// `s_0 o ... o s_{n-1}(b)` truncated to `cap` letters, built innermost-out.
fn truncated_image(letters: &[Letter], seed: Letter, cap: usize) -> Word {
    let mut w: Word = std::iter::once(seed).collect();
    for &s in letters.iter().rev() {
        w = apply_ar_truncated(s, &w, cap);
    }
    w
}

fn common_prefix_len(words: &[Vec<u8>]) -> usize {
    let shortest = words.iter().map(Vec::len).min().unwrap_or(0);
    (0..shortest).take_while(|&k| words.iter().all(|w| w[k] == words[0][k])).count()
}

/// The letters of the limit word (at most `budget`) that are certain once the
/// first `letters.len()` substitutions are fixed.
fn certain_prefix(letters: &[Letter], budget: usize) -> Word {
    let Some(&last) = letters.last() else {
        return Word::new();
    };
    let q = truncated_image(letters, last, budget);
    let candidates: Vec<Vec<u8>> = Letter::ALL
        .iter()
        .map(|&b| {
            let mut w = truncated_image(letters, b, budget);
            if w.len() < budget {
                w.extend_from_word(&q);
                w.truncate(budget);
            }
            w.as_bytes().to_vec()
        })
        .collect();
    let n = common_prefix_len(&candidates);
    Word::from_raw(candidates[0][..n].to_vec())
}

/// The first `budget` letters of the standard word of `directive`.
///
/// The depth is doubled until `budget` letters are certain. A finite
/// directive that runs out first, or a periodic one that stops making
/// progress, gives [`Error::Unstabilized`].
pub fn standard_prefix(directive: &Directive, budget: usize) -> Result<Word> {
    if budget == 0 {
        return Ok(Word::new());
    }
    let limit = directive.available();
    if limit == Some(0) {
        return Err(Error::Unstabilized { budget, stable: 0, depth: 0 });
    }
    let mut depth = 1usize;
    let mut last_stable = 0usize;
    let mut stalled_rounds = 0usize;
    loop {
        let letters = directive.take(depth)?;
        let prefix = certain_prefix(&letters, budget);
        if prefix.len() >= budget {
            return Ok(prefix);
        }
        if limit == Some(depth) {
            return Err(Error::Unstabilized { budget, stable: prefix.len(), depth });
        }
        // a periodic period contributes at least one letter per few periods
        // when every substitution occurs in it; otherwise the word may freeze
        if prefix.len() <= last_stable && depth >= 2 * directive.indices().len() {
            stalled_rounds += 1;
            if stalled_rounds >= 2 {
                return Err(Error::Unstabilized { budget, stable: prefix.len(), depth });
            }
        } else {
            stalled_rounds = 0;
        }
        last_stable = last_stable.max(prefix.len());
        depth = match limit {
            Some(len) => (depth * 2).min(len),
            None => depth * 2,
        };
    }
}
