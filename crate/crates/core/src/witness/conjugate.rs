use crate::abelian::AbelianVector;
use crate::matrix::incidence_of;
use crate::word::Letter;

/// `target * M_p^{-1}`: the difference to realize after the prefix `p` so
/// that mapping through `p` gives `target`. Integer because `det M_p = 1`.
pub fn conjugate_target(p: &[Letter], target: &AbelianVector) -> AbelianVector {
    let inv = incidence_of(p).inverse().expect("AR incidence matrices are unimodular");
    target.mul_matrix(&inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: [i64; 3]) -> AbelianVector {
        AbelianVector::from_i64(x)
    }

    #[test]
    fn examples() {
        assert_eq!(conjugate_target(&[], &v([4, -1, 2])), v([4, -1, 2]));
        assert_eq!(conjugate_target(&[Letter::ONE], &v([5, 2, 1])), v([2, 2, 1]));
        let c = conjugate_target(&[Letter::ONE], &v([1, 1, 1]));
        assert_eq!(c, v([-1, 1, 1]));
        assert_eq!(c.mul_matrix(&incidence_of(&[Letter::ONE])), v([1, 1, 1]));
    }
}
