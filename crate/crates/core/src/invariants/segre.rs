//! Projective degrees of a map from the Segre classes of its base locus.

use super::MultiDegree;
use crate::arith::binomial;

/// Multidegree of a map of `P^n` given by forms of degree `d1` whose base
/// locus has dimension `r`, degree `deg`, and normal-bundle Segre degrees
/// `segre[i] = s_{r-i}·H^i` for `i = 0..r`.
pub fn segre_multidegree(n: i64, d1: i64, r: i64, deg: i64, segre: &[i64]) -> MultiDegree {
    assert_eq!(segre.len() as i64, r, "expected one Segre degree per i < r");
    let mut out = vec![0; (n + 1) as usize];
    for k in 0..=n {
        let mut value = d1.pow((n - k) as u32);
        if r >= k {
            value -= binomial(n - k, r - k) * d1.pow((r - k) as u32) * deg;
        }
        for i in k..r {
            value -= binomial(n - k, i - k) * d1.pow((i - k) as u32) * segre[i as usize];
        }
        out[(n - k) as usize] = value;
    }
    MultiDegree(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_entry_is_one() {
        assert_eq!(segre_multidegree(6, 3, 3, 14, &[0, 0, 0]).0[0], 1);
    }

    #[test]
    fn pfaffian_cubo_quintic() {
        let c1h2 = 0;
        let c2h = -29 * 14 + 16 * 15 - 5 + 227;
        let c3 = 230 * 14 - 102 * 15 + 11 * 5 - 1 - 1842;
        let s1 = c1h2 - 7 * 14;
        let s2 = c2h - 21 * 14 - 7 * s1;
        let s3 = c3 - 35 * 14 - 21 * s1 - 7 * s2;
        assert_eq!((s1, s2), (-98, 448));
        let md = segre_multidegree(6, 3, 3, 14, &[s3, s2, s1]);
        assert_eq!(md.0, vec![1, 3, 9, 13, 11, 5, 1]);
    }

    #[test]
    fn plane_curve_quadratic_map() {
        // Quadro-quadric map of P^2 with three base points: (1, 2, 1).
        let md = segre_multidegree(2, 2, 0, 3, &[]);
        assert_eq!(md.0, vec![1, 2, 1]);
    }
}
