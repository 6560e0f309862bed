//! Exact arithmetic helpers shared by the invariant formulas.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Floor of an exact rational, as `i64`. Panics only if the value does not fit.
pub fn floor_i64(q: &Rational) -> i64 {
    q.floor()
        .to_integer()
        .to_i64()
        .expect("rational floor out of i64 range")
}

/// The integer value of `q` when it has denominator one.
pub fn as_integer(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// Exact quotient `num / den` when `den` divides `num`.
pub fn exact_div(num: i64, den: i64) -> Option<i64> {
    if den == 0 {
        return None;
    }
    let (q, r) = num.div_rem(&den);
    (r == 0).then_some(q)
}

/// Binomial coefficient, extended by zero outside `0 <= j <= m`.
pub fn binomial(m: i64, j: i64) -> i64 {
    if j < 0 || m < 0 || j > m {
        return 0;
    }
    let j = j.min(m - j);
    let mut acc: i128 = 1;
    for i in 0..j {
        acc = acc * (m - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(acc).expect("binomial coefficient out of i64 range")
}

pub fn factorial(k: u32) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, i| acc * int(i))
}

/// Ceiling of `(d2 - 1) / d2` for a positive degree: zero iff `d2 == 1`.
pub fn ceil_ratio_minus_one(d2: i64) -> i64 {
    debug_assert!(d2 >= 1);
    Integer::div_ceil(&(d2 - 1), &d2)
}

/// Exact integer square root when `v` is a perfect square.
pub fn exact_sqrt(v: i64) -> Option<i64> {
    if v < 0 {
        return None;
    }
    let r = (v as f64).sqrt() as i64;
    (r.saturating_sub(1)..=r + 1).find(|&s| s >= 0 && s * s == v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_is_zero_outside_range() {
        assert_eq!(binomial(5, -1), 0);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(9, 3), 84);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(-2, 1), 0);
    }

    #[test]
    fn floors_are_exact() {
        assert_eq!(floor_i64(&frac(-1, 2)), -1);
        assert_eq!(floor_i64(&frac(7, 2)), 3);
        assert_eq!(floor_i64(&int(-4)), -4);
    }

    #[test]
    fn ceiling_term() {
        assert_eq!(ceil_ratio_minus_one(1), 0);
        assert_eq!(ceil_ratio_minus_one(2), 1);
        assert_eq!(ceil_ratio_minus_one(5), 1);
    }

    #[test]
    fn square_roots() {
        assert_eq!(exact_sqrt(49), Some(7));
        assert_eq!(exact_sqrt(41), None);
        assert_eq!(exact_sqrt(0), Some(0));
    }
}
