//! Closed-form invariants of a cubo-cubic or cubo-`d` map of `P^6` with a
//! three-dimensional base locus.

use serde::{Deserialize, Serialize};

use super::{MultiDegree, TransformationProfile};
use crate::arith::binomial;

/// Intersection numbers `K^i·H^(3-i)` of a polarized threefold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThreefoldDegrees {
    pub kh2: i64,
    pub k2h: i64,
    pub k3: i64,
    pub h3: i64,
}

impl ThreefoldDegrees {
    /// Degrees on the reduction obtained by contracting `nu` exceptional planes.
    pub fn reduce(&self, nu: i64) -> Self {
        ThreefoldDegrees {
            kh2: self.kh2 - 2 * nu,
            k2h: self.k2h + 4 * nu,
            k3: self.k3 - 8 * nu,
            h3: self.h3 + nu,
        }
    }

    /// `K^i·H^(3-i)` for `0 <= i <= 3`.
    fn mixed(&self, i: i64) -> i64 {
        match i {
            0 => self.h3,
            1 => self.kh2,
            2 => self.k2h,
            3 => self.k3,
            _ => unreachable!("mixed degree index out of range"),
        }
    }

    /// `(xK + yH)^j · H^(3-j)`.
    pub fn adjoint_power(&self, x: i64, y: i64, j: u32) -> i64 {
        let j = i64::from(j);
        (0..=j)
            .map(|i| binomial(j, i) * x.pow(i as u32) * y.pow((j - i) as u32) * self.mixed(i))
            .sum()
    }

    pub fn pluridegrees(&self) -> Pluridegrees {
        Pluridegrees {
            d0: self.adjoint_power(1, 1, 0),
            d1: self.adjoint_power(1, 1, 1),
            d2: self.adjoint_power(1, 1, 2),
            d3: self.adjoint_power(1, 1, 3),
        }
    }
}

/// Canonical, Chern and normal-bundle Segre degrees of the base threefold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalDegrees {
    pub kh2: i64,
    pub k2h: i64,
    pub k3: i64,
    pub h3: i64,
    pub c1h2: i64,
    pub c2h: i64,
    pub c3: i64,
    pub s1h2: i64,
    pub s2h: i64,
    pub s3: i64,
}

impl CanonicalDegrees {
    pub fn threefold(&self) -> ThreefoldDegrees {
        ThreefoldDegrees {
            kh2: self.kh2,
            k2h: self.k2h,
            k3: self.k3,
            h3: self.h3,
        }
    }

    /// Segre degrees `s_{3-i}·H^i` for `i = 0, 1, 2`.
    pub fn segre_sequence(&self) -> [i64; 3] {
        [self.s3, self.s2h, self.s1h2]
    }

    /// Checks `c(T_P6|B) = c(T_B)·c(N)` in degrees one to three.
    pub fn whitney_holds(&self) -> bool {
        self.c1h2 == -self.kh2
            && self.c1h2 == 7 * self.h3 + self.s1h2
            && self.c2h == 21 * self.h3 + 7 * self.s1h2 + self.s2h
            && self.c3 == 35 * self.h3 + 21 * self.s1h2 + 7 * self.s2h + self.s3
    }
}

/// Invariants of a smooth hyperplane section surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSectionInvariants {
    pub canonical_hyperplane: i64,
    pub canonical_square: i64,
    pub holomorphic_euler: i64,
    pub topological_euler: i64,
}

impl SurfaceSectionInvariants {
    pub fn noether_holds(&self) -> bool {
        self.canonical_square + self.topological_euler == 12 * self.holomorphic_euler
    }
}

/// The values `d_j = (K + H)^j · H^(3-j)` on the minimal reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pluridegrees {
    pub d0: i64,
    pub d1: i64,
    pub d2: i64,
    pub d3: i64,
}

impl Pluridegrees {
    /// `d1² - d2·d0`
    pub fn first_gap(&self) -> i64 {
        self.d1 * self.d1 - self.d2 * self.d0
    }

    /// `d2² - d3·d1`
    pub fn second_gap(&self) -> i64 {
        self.d2 * self.d2 - self.d3 * self.d1
    }

    pub fn as_array(&self) -> [i64; 4] {
        [self.d0, self.d1, self.d2, self.d3]
    }
}

pub fn cubic_invariants(p: &TransformationProfile) -> (CanonicalDegrees, SurfaceSectionInvariants) {
    debug_assert!(p.is_cubic_sextic());
    let (l, g, big_d, d, a) = p.five_tuple();
    let e = p.eps();
    let dd = big_d * d;

    let kh2 = -2 * l + 2 * g - 2;
    let k2h = -39 * l + 14 * g + dd - 12 * a + 12 * e + 331;
    let k3 = l * l - 77 * l + 14 * g - 3 * dd - big_d - 12 * a + 60 * e + 688;
    let c1h2 = 2 * l - 2 * g + 2;
    let c2h = -29 * l + 16 * g - dd + 227;
    let c3 = 230 * l - 102 * g + 11 * dd - big_d - 1842;

    let s1h2 = c1h2 - 7 * l;
    let s2h = c2h - 21 * l - 7 * s1h2;
    let s3 = c3 - 35 * l - 21 * s1h2 - 7 * s2h;

    let canonical = CanonicalDegrees {
        kh2,
        k2h,
        k3,
        h3: l,
        c1h2,
        c2h,
        c3,
        s1h2,
        s2h,
        s3,
    };
    let surface = SurfaceSectionInvariants {
        canonical_hyperplane: -l + 2 * g - 2,
        canonical_square: -42 * l + 18 * g + dd - 12 * a + 12 * e + 327,
        holomorphic_euler: -6 * l + 3 * g - a + e + 46,
        topological_euler: -30 * l + 18 * g - dd + 225,
    };
    (canonical, surface)
}

pub fn cubic_multidegree(p: &TransformationProfile) -> MultiDegree {
    let (l, g, big_d, d, _) = p.five_tuple();
    MultiDegree(vec![1, 3, 9, 27 - l, -7 * l + 2 * g + 79, big_d * d, big_d])
}

pub fn pluridegrees(cd: &CanonicalDegrees, nu: i64) -> Pluridegrees {
    cd.threefold().reduce(nu).pluridegrees()
}

/// Discriminant of the divisor of special cubic fourfolds containing a
/// hyperplane section of the base locus.
pub fn delta_invariant(p: &TransformationProfile) -> i64 {
    let (l, g, big_d, d, a) = p.five_tuple();
    -l * l + 6 * big_d * d - 27 * l + 18 * g - 36 * a + 36 * p.eps() + 288
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic(l: i64, g: i64, big_d: i64, d: i64, a: i64) -> TransformationProfile {
        TransformationProfile::cubic(l, g, big_d, d, a)
    }

    #[test]
    fn pfaffian_has_trivial_canonical_class() {
        let (cd, s) = cubic_invariants(&cubic(14, 15, 1, 5, 0));
        assert_eq!((cd.kh2, cd.k2h, cd.k3), (0, 0, 0));
        assert!(cd.whitney_holds());
        assert!(s.noether_holds());
        assert_eq!(cd.s1h2, -98);
        assert_eq!(cd.s2h, 448);
        assert_eq!(pluridegrees(&cd, 0).as_array(), [14, 14, 14, 14]);
    }

    #[test]
    fn mukai_candidate_degrees() {
        let (cd, _) = cubic_invariants(&cubic(11, 8, 4, 3, 2));
        assert_eq!((cd.kh2, cd.k2h, cd.k3), (-8, 2, 10));
    }

    #[test]
    fn conic_bundle_surface() {
        let (cd, s) = cubic_invariants(&cubic(13, 12, 1, 5, 0));
        assert_eq!(s.holomorphic_euler, 4);
        assert_eq!((cd.kh2, cd.k2h, cd.k3), (-4, -3, 8));
        assert_eq!(pluridegrees(&cd, 0).as_array(), [13, 9, 2, 0]);
    }

    #[test]
    fn del_pezzo_fibration_pluridegrees() {
        let (cd, _) = cubic_invariants(&cubic(12, 10, 3, 3, 1));
        assert_eq!(pluridegrees(&cd, 0).as_array(), [12, 6, 0, 0]);
    }

    #[test]
    fn second_reduction_survivor_gaps() {
        let (cd, _) = cubic_invariants(&cubic(18, 28, 3, 3, 1));
        let p = pluridegrees(&cd, 0);
        assert_eq!(p.as_array(), [18, 36, 72, 102]);
        assert_eq!(p.first_gap(), 0);
        // 72² − 102·36, by hand.
        assert_eq!(p.second_gap(), 5184 - 3672);
    }

    #[test]
    fn reduction_shifts_degrees() {
        let t = ThreefoldDegrees {
            kh2: 1,
            k2h: 2,
            k3: 3,
            h3: 4,
        }
        .reduce(2);
        assert_eq!(
            t,
            ThreefoldDegrees {
                kh2: -3,
                k2h: 10,
                k3: -13,
                h3: 6
            }
        );
    }

    #[test]
    fn adjoint_power_expansion() {
        let t = ThreefoldDegrees {
            kh2: -8,
            k2h: 2,
            k3: 10,
            h3: 11,
        };
        // (K + 2H)^3 = K3 + 6 K2H + 12 KH2 + 8 H3
        assert_eq!(t.adjoint_power(1, 2, 3), 10 + 12 - 96 + 88);
        // (2K + 3H)^2 H = 4 K2H + 12 KH2 + 9 H3
        assert_eq!(t.adjoint_power(2, 3, 2), 8 - 96 + 99);
    }

    #[test]
    fn multidegree_examples() {
        assert_eq!(
            cubic_multidegree(&cubic(14, 15, 1, 5, 0)).0,
            vec![1, 3, 9, 13, 11, 5, 1]
        );
        assert_eq!(
            cubic_multidegree(&cubic(18, 28, 3, 3, 1)).0,
            vec![1, 3, 9, 9, 9, 9, 3]
        );
        assert_eq!(
            cubic_multidegree(&cubic(15, 19, 12, 1, 3)).0,
            vec![1, 3, 9, 12, 12, 12, 12]
        );
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_invariant(&cubic(14, 15, 1, 5, 0)), 14);
        assert_eq!(delta_invariant(&cubic(12, 10, 3, 3, 1)), 18);
        assert_eq!(delta_invariant(&cubic(10, 6, 8, 2, 3)), 14);
    }
}
