//! Brute-force reference implementations shared by the integration tests.
//! None of them reuse the library's algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use arwords::{Letter, Word};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_letters<R: Rng>(rng: &mut R, len: usize) -> Vec<Letter> {
    (0..len).map(|_| Letter::new(rng.gen_range(1..=3)).unwrap()).collect()
}

pub fn word(s: &str) -> Word {
    s.parse().unwrap()
}

pub fn bytes(w: &Word) -> Vec<u8> {
    w.as_bytes().to_vec()
}

fn count(w: &[u8]) -> [i64; 3] {
    let mut c = [0; 3];
    for &x in w {
        c[usize::from(x - 1)] += 1;
    }
    c
}

/// Every start position by direct comparison.
pub fn naive_find(u: &[u8], host: &[u8]) -> Vec<usize> {
    if u.len() > host.len() {
        return Vec::new();
    }
    (0..=host.len() - u.len()).filter(|&i| &host[i..i + u.len()] == u).collect()
}

/// Largest `max_a ||u|_a - |v|_a|` over pairs of factors of length `n`,
/// comparing every pair of distinct Parikh vectors.
pub fn naive_imbalance(w: &[u8], n: usize) -> i64 {
    let set: BTreeSet<[i64; 3]> = (0..=w.len() - n).map(|i| count(&w[i..i + n])).collect();
    let mut best = 0;
    for a in &set {
        for b in &set {
            for k in 0..3 {
                best = best.max((a[k] - b[k]).abs());
            }
        }
    }
    best
}

/// Whether some pair of factors (empty ones included) has difference `t`.
pub fn naive_has_difference(w: &[u8], t: [i64; 3]) -> bool {
    let mut factors = BTreeSet::new();
    for i in 0..=w.len() {
        for j in i..=w.len() {
            factors.insert(count(&w[i..j]));
        }
    }
    factors.iter().any(|a| factors.contains(&[a[0] - t[0], a[1] - t[1], a[2] - t[2]]))
}

/// Letter frequencies of the Tribonacci word, `(b^-1, b^-2, b^-3)` for the
/// real root `b` of `x^3 = x^2 + x + 1`, located by bisection.
pub fn tribonacci_frequencies() -> [f64; 3] {
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    for _ in 0..200 {
        let mid = (lo + hi) / 2.0;
        if mid * mid * mid - mid * mid - mid - 1.0 < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let b = (lo + hi) / 2.0;
    [1.0 / b, 1.0 / (b * b), 1.0 / (b * b * b)]
}

/// `sigma_i` applied letter by letter from its definition.
pub fn naive_sigma(i: u8, w: &[u8]) -> Vec<u8> {
    let mut out = Vec::new();
    for &c in w {
        out.push(i);
        if c != i {
            out.push(c);
        }
    }
    out
}

/// `s_0 o ... o s_{n-1}(u)`.
pub fn naive_compose(directive: &[u8], u: &[u8]) -> Vec<u8> {
    let mut w = u.to_vec();
    for &s in directive.iter().rev() {
        w = naive_sigma(s, &w);
    }
    w
}
