//! Inequality systems bounding the invariants of a cubic map of `P^6`.

use crate::arith::{floor_i64, frac, int, Rational};
use crate::invariants::TransformationProfile;

/// Castelnuovo's bound on the genus of a non-degenerate curve of degree `degree` in `P^4`.
pub fn castelnuovo_bound_p4(degree: i64) -> Rational {
    let m = (degree - 2).div_euclid(3);
    int(m) * (int(degree - 4) - int(m - 1) * frac(3, 2))
}

/// Hodge-index and Bogomolov-type inequalities on the surface section.
pub fn hodge_check(degree: i64, genus: i64, image_degree: i64, inverse_degree: i64) -> bool {
    let (l, g, big_d) = (degree, genus, image_degree);
    let dd = big_d * inverse_degree;
    2 * l - g + 1 >= 0
        && -21 * l + 6 * g - dd + 237 >= 0
        && l * l + 9 * l - 18 * g + 18 >= 0
        && 49 * l * l - 28 * l * g + 4 * g * g + (dd - 1106) * l + 316 * g - 27 * dd + 6241 >= 0
        && 7 * big_d * l - 2 * big_d * g + dd * dd - 79 * big_d >= 0
}

/// The four adjunction inequalities on a threefold in `P^6`.
pub fn livorni_sommese_check(
    degree: i64,
    genus: i64,
    image_degree: i64,
    inverse_degree: i64,
    codim: i64,
    eps: i64,
) -> bool {
    let (l, g, big_d, a, e) = (degree, genus, image_degree, codim, eps);
    let dd = big_d * inverse_degree;
    l * l + 7 * l - 10 * g - 2 * dd + 12 * a - 12 * e - 92 >= 0
        && -10 * l + 8 * g + 2 * dd - 12 * a + 12 * e + 94 >= 0
        && -290 * l + 140 * g - 13 * dd + big_d + 2290 >= 0
        && -147 * l + 74 * g + 12 * dd - big_d - 84 * a + 108 * e + 1183 >= 0
}

/// Range of the codimension allowed by the adjunction inequalities, which are
/// linear in `a`: the first bounds it below, the second and fourth above.
pub(crate) fn codim_range(
    degree: i64,
    genus: i64,
    image_degree: i64,
    inverse_degree: i64,
    eps: i64,
) -> std::ops::RangeInclusive<i64> {
    use num_integer::Integer;
    let (l, g, big_d, e) = (degree, genus, image_degree, eps);
    let dd = big_d * inverse_degree;
    let lower = Integer::div_ceil(&(-(l * l + 7 * l - 10 * g - 2 * dd - 12 * e - 92)), &12);
    let upper_second = Integer::div_floor(&(-10 * l + 8 * g + 2 * dd + 12 * e + 94), &12);
    let upper_fourth =
        Integer::div_floor(&(-147 * l + 74 * g + 12 * dd - big_d + 108 * e + 1183), &84);
    lower..=upper_second.min(upper_fourth)
}

/// Le Barz's count of 4-secant lines, an upper bound for the number of
/// exceptional planes of the base locus.
pub fn le_barz_bound(
    degree: i64,
    genus: i64,
    image_degree: i64,
    inverse_degree: i64,
    codim: i64,
) -> Rational {
    let (l, g, a) = (int(degree), int(genus), int(codim));
    let dd = int(image_degree * inverse_degree);
    let l2 = &l * &l;
    frac(1, 8) * &l2 * &l2 - frac(1, 2) * &l2 * &dd + frac(1, 2) * &dd * &dd + frac(3, 4) * &l2 * &l
        - int(3) * &l2 * &g
        + frac(1, 2) * &l * &dd
        + int(5) * &g * &dd
        + int(3) * &l2 * &a
        - int(6) * &dd * &a
        - frac(433, 8) * &l2
        + int(20) * &l * &g
        + int(13) * &g * &g
        + frac(25, 2) * &dd
        - int(7) * &l * &a
        - int(30) * &g * &a
        + int(18) * &a * &a
        + frac(2825, 4) * &l
        - int(98) * &g
        - int(21) * &a
        - int(2969)
}

pub fn le_barz_max_nu(
    degree: i64,
    genus: i64,
    image_degree: i64,
    inverse_degree: i64,
    codim: i64,
) -> i64 {
    floor_i64(&le_barz_bound(
        degree,
        genus,
        image_degree,
        inverse_degree,
        codim,
    ))
}

/// The quantities `d1 - 1`, `d2 - 1`, `d3 - 1` and `d1² - d2·d0` of the
/// minimal reduction, as polynomials in `(λ, g, ν, Δ, d, a)`.
pub fn reduction_quantities(p: &TransformationProfile) -> [i64; 4] {
    let (l, g, nu, big_d, d, a) = p.six_tuple();
    let dd = big_d * d;
    [
        -l + 2 * g - nu - 3,
        dd - 42 * l + 18 * g + nu - 12 * a + 326,
        l * l - 199 * l + 62 * g - nu - big_d - 48 * a + 1674,
        -l * dd - nu * dd + 43 * l * l - 22 * l * g + 4 * g * g + 43 * l * nu - 22 * g * nu
            + 12 * l * a
            + 12 * nu * a
            - 323 * l
            - 8 * g
            - 323 * nu
            + 4,
    ]
}

/// Nefness and bigness of `K + H` on the reduction, and Hodge index for it.
pub fn reduction_check(p: &TransformationProfile) -> bool {
    reduction_quantities(p).iter().all(|&q| q >= 0)
}
