//! Invariants of quartic maps of `P^4` and `P^5`.

use serde::{Deserialize, Serialize};

use super::MultiDegree;
use crate::arith::{as_integer, frac, int, Rational};

/// Surface invariants forced on the base locus of a quarto-quartic map of
/// `P^4` onto a complete intersection of codimension `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticP4Invariants {
    pub holomorphic_euler: Rational,
    pub genus: Rational,
    pub canonical_square: Rational,
    pub topological_euler: Rational,
    pub segre1_h: Rational,
    pub segre2: Rational,
    /// Image degree forced by the top projective degree.
    pub required_image_degree: Rational,
}

impl QuarticP4Invariants {
    /// `(K², c2, Δ)` when all three are integers.
    pub fn integral_core(&self) -> Option<(i64, i64, i64)> {
        Some((
            as_integer(&self.canonical_square)?,
            as_integer(&self.topological_euler)?,
            as_integer(&self.required_image_degree)?,
        ))
    }
}

pub fn quartic_p4_invariants(degree: i64, codim: i64) -> QuarticP4Invariants {
    let l = int(degree);
    let l2 = &l * &l;
    let a = int(codim);
    QuarticP4Invariants {
        holomorphic_euler: int(6) * &l + int(3) * &a - int(55),
        genus: int(4) * &l + &a - int(29),
        canonical_square: frac(1, 2) * &l2 + frac(27, 2) * &l + int(13) * &a - int(180),
        topological_euler: -frac(1, 2) * &l2 + frac(117, 2) * &l + int(23) * &a - int(480),
        segre1_h: int(-12) * &l - int(2) * &a + int(60),
        segre2: -frac(1, 2) * &l2 + frac(217, 2) * &l + int(33) * &a - int(780),
        required_image_degree: frac(1, 2) * &l2 - frac(25, 2) * &l - &a + int(76),
    }
}

/// Relations satisfied by a quartic map of `P^5` with a threefold base locus
/// of degree `degree` and inverse of degree `inverse_degree`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticP5Invariants {
    pub genus: i64,
    /// `(1, 4, 16-λ, Δd², Δd, Δ)`
    pub multidegree: MultiDegree,
    /// `(1, 4, 16-λ, 2a-4ε+6, Δd, Δ)`
    pub multidegree_from_codim: MultiDegree,
    /// `2a = Δd² + 4ε - 6`
    pub codim_relation_holds: bool,
    /// `λ² - 2Δd - 25λ - 2a + 16ε + 150`, zero on admissible data.
    pub surface_relation: i64,
}

pub fn quartic_p5_invariants(
    degree: i64,
    inverse_degree: i64,
    image_degree: i64,
    codim: i64,
) -> QuarticP5Invariants {
    let (l, d, big_d, a) = (degree, inverse_degree, image_degree, codim);
    let e = i64::from(d == 1);
    QuarticP5Invariants {
        genus: 4 * l - 2 * e + a - 28,
        multidegree: MultiDegree(vec![1, 4, 16 - l, big_d * d * d, big_d * d, big_d]),
        multidegree_from_codim: MultiDegree(vec![
            1,
            4,
            16 - l,
            2 * a - 4 * e + 6,
            big_d * d,
            big_d,
        ]),
        codim_relation_holds: 2 * a == big_d * d * d + 4 * e - 6,
        surface_relation: l * l - 2 * big_d * d - 25 * l - 2 * a + 16 * e + 150,
    }
}

/// For a linear inverse, the image degree and codimension forced by `λ`:
/// `Δ = (λ² - 25λ + 168)/3`, `a = Δ/2 - 1`, when both are integers.
pub fn quartic_p5_linear_solution(degree: i64) -> Option<(i64, i64)> {
    let l = int(degree);
    let big_d = frac(1, 3) * &l * &l - frac(25, 3) * &l + int(56);
    let a = frac(1, 6) * &l * &l - frac(25, 6) * &l + int(27);
    Some((as_integer(&big_d)?, as_integer(&a)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_row() {
        let q = quartic_p4_invariants(9, 1);
        assert_eq!(q.genus, int(8));
        assert_eq!(q.holomorphic_euler, int(2));
        assert_eq!(q.integral_core(), Some((-5, 29, 3)));
        assert_eq!(
            q.canonical_square + q.topological_euler,
            q.holomorphic_euler * int(12)
        );
    }

    #[test]
    fn second_root() {
        assert_eq!(quartic_p4_invariants(16, 1).required_image_degree, int(3));
    }

    #[test]
    fn no_root_for_codim_two() {
        assert_eq!(quartic_p4_invariants(10, 2).required_image_degree, int(-1));
    }

    #[test]
    fn determinantal_row_fits_formulas() {
        let q = quartic_p4_invariants(10, 0);
        assert_eq!(q.genus, int(11));
        assert_eq!(q.required_image_degree, int(1));
    }

    #[test]
    fn p5_survivor() {
        assert_eq!(quartic_p5_linear_solution(9), Some((8, 3)));
        let q = quartic_p5_invariants(9, 1, 8, 3);
        assert_eq!(q.genus, 9);
        assert_eq!(q.multidegree.0, vec![1, 4, 7, 8, 8, 8]);
        assert_eq!(q.multidegree, q.multidegree_from_codim);
        assert!(q.codim_relation_holds);
        assert_eq!(q.surface_relation, 0);
    }

    #[test]
    fn p5_first_case() {
        assert_eq!(quartic_p5_linear_solution(6), Some((18, 8)));
        assert_eq!(quartic_p5_invariants(6, 1, 18, 8).genus, 2);
        assert_eq!(quartic_p5_linear_solution(8), None);
    }

    #[test]
    fn p5_quadratic_inverse_is_impossible() {
        let q = quartic_p5_invariants(10, 2, 2, 1);
        assert!(q.codim_relation_holds);
        assert!((1..=64).all(|l| quartic_p5_invariants(l, 2, 2, 1).surface_relation != 0));
    }
}
