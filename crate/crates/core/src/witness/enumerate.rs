//! An explicit bijection `N -> Z^3`: sup-norm shells in increasing order,
//! lexicographic inside a shell.

use crate::abelian::AbelianVector;

fn cube(r: u64) -> u64 {
    r * r * r
}

/// Number of triples of sup-norm `r` whose first coordinate is `x`.
fn count_with_first(r: i64, x: i64) -> u64 {
    let side = (2 * r + 1) as u64;
    if x.abs() == r {
        side * side
    } else {
        8 * r as u64
    }
}

/// Triple number `j` (0-based, lexicographic) of the shell of sup-norm `r`.
fn shell_element(r: i64, mut j: u64) -> [i64; 3] {
    if r == 0 {
        return [0, 0, 0];
    }
    for x in -r..=r {
        let cx = count_with_first(r, x);
        if j >= cx {
            j -= cx;
            continue;
        }
        for y in -r..=r {
            let zs: Vec<i64> = if x.abs() == r || y.abs() == r { (-r..=r).collect() } else { vec![-r, r] };
            if j >= zs.len() as u64 {
                j -= zs.len() as u64;
                continue;
            }
            return [x, y, zs[j as usize]];
        }
    }
    unreachable!("index within shell size")
}

/// The `k`-th triple of the enumeration.
pub fn enumerate_z3(k: u64) -> AbelianVector {
    if k == 0 {
        return AbelianVector::zero();
    }
    // shell r holds indices (2r-1)^3 .. (2r+1)^3
    let mut r = 1u64;
    while cube(2 * r + 1) <= k {
        r += 1;
    }
    AbelianVector::from_i64(shell_element(r as i64, k - cube(2 * r - 1)))
}

/// The enumeration as an iterator, walking shells without index arithmetic.
#[derive(Debug, Clone, Default)]
pub struct Z3Enumeration {
    r: i64,
    buffer: std::vec::IntoIter<[i64; 3]>,
}

impl Z3Enumeration {
    pub fn new() -> Z3Enumeration {
        Z3Enumeration { r: -1, buffer: Vec::new().into_iter() }
    }
}

impl Iterator for Z3Enumeration {
    type Item = AbelianVector;

    fn next(&mut self) -> Option<AbelianVector> {
        loop {
            if let Some(t) = self.buffer.next() {
                return Some(AbelianVector::from_i64(t));
            }
            self.r += 1;
            let r = self.r;
            let mut shell = Vec::new();
            for x in -r..=r {
                for y in -r..=r {
                    for z in -r..=r {
                        if x.abs().max(y.abs()).max(z.abs()) == r {
                            shell.push([x, y, z]);
                        }
                    }
                }
            }
            self.buffer = shell.into_iter();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values() {
        let first: Vec<_> = (0..6).map(|k| enumerate_z3(k).to_i64().unwrap()).collect();
        assert_eq!(first, [[0, 0, 0], [-1, -1, -1], [-1, -1, 0], [-1, -1, 1], [-1, 0, -1], [-1, 0, 0]]);
    }

    #[test]
    fn first_27_are_the_unit_cube() {
        let mut seen: Vec<_> = (0..27).map(|k| enumerate_z3(k).to_i64().unwrap()).collect();
        assert!(seen.iter().all(|t| t.iter().all(|x| x.abs() <= 1)));
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 27);
    }

    #[test]
    fn closed_form_matches_iterator() {
        for (k, t) in Z3Enumeration::new().take(5000).enumerate() {
            assert_eq!(enumerate_z3(k as u64), t, "index {k}");
        }
    }
}
