//! Conditions on the Hilbert polynomial of a base locus, and their exact solution.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, ceil_ratio_minus_one, factorial, int, Rational};
use crate::error::{Error, Result};

/// Required values `χ(O_B(t)) = chi` at pairwise distinct arguments `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertConditions(pub Vec<(i64, i64)>);

impl HilbertConditions {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(i64, i64)> {
        self.0.iter()
    }
}

/// Values of `χ(O_B(t))` forced for a map of type `(d1, d2)` from `P^n` onto a
/// linearly normal image in `P^(n+a)`, whose inverse has base locus of
/// dimension `r_prime`.
pub fn hilbert_conditions(n: i64, d1: i64, d2: i64, a: i64, r_prime: i64) -> HilbertConditions {
    let big_n = n + a;
    let mut conds = vec![
        (d1, binomial(n + d1, d1) - big_n - 1),
        (
            d1 - 1,
            binomial(n + d1 - 1, d1 - 1) + ceil_ratio_minus_one(d2) - 1,
        ),
    ];
    if r_prime <= n - 3 {
        for j in 2..=(n - r_prime - 1) {
            conds.push((d1 - j, binomial(n + d1 - j, d1 - j)));
        }
    }
    HilbertConditions(conds)
}

/// A numerical polynomial `χ(t) = Σ c_k t^k` of degree at most `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coeffs: Vec<Rational>,
}

impl HilbertPolynomial {
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, t: i64) -> Rational {
        let t = int(t);
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * &t + c)
    }

    /// Degree of the base locus: `r!` times the leading coefficient.
    pub fn degree(&self) -> Rational {
        factorial(self.dim() as u32) * self.coeffs[self.dim()].clone()
    }

    /// Sectional genus: `1 - P_C(0)` where `P_C` is the Hilbert polynomial of a
    /// curve section, the `(r-1)`-fold backward difference of `χ`.
    pub fn sectional_genus(&self) -> Rational {
        let r = self.dim() as i64;
        if r == 0 {
            return Rational::zero();
        }
        let curve_at_zero = (0..r).fold(Rational::zero(), |acc, k| {
            let term = int(binomial(r - 1, k)) * self.eval(-k);
            if k % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        });
        Rational::one() - curve_at_zero
    }
}

/// Interpolates the degree-`r` polynomial through the first `r + 1` conditions
/// and checks the remaining ones.
pub fn hilbert_polynomial_solve(conds: &HilbertConditions, r: usize) -> Result<HilbertPolynomial> {
    if conds.len() < r + 1 {
        return Err(Error::Precondition(format!(
            "need at least {} Hilbert conditions, got {}",
            r + 1,
            conds.len()
        )));
    }
    let pts: Vec<(Rational, Rational)> = conds.0[..=r]
        .iter()
        .map(|&(t, v)| (int(t), int(v)))
        .collect();

    // Lagrange basis expanded into monomial coefficients.
    let mut coeffs = vec![Rational::zero(); r + 1];
    for (i, (xi, yi)) in pts.iter().enumerate() {
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, (xj, _)) in pts.iter().enumerate() {
            if i == j {
                continue;
            }
            if xi == xj {
                return Err(Error::Precondition(
                    "Hilbert arguments must be distinct".into(),
                ));
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let scale = yi / denom;
        for (k, b) in basis.iter().enumerate() {
            coeffs[k] += b * &scale;
        }
    }
    let poly = HilbertPolynomial { coeffs };
    for &(t, v) in &conds.0[r + 1..] {
        if poly.eval(t) != int(v) {
            return Err(Error::InconsistentHilbert { at: t });
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubo_quintic_conditions() {
        let c = hilbert_conditions(6, 3, 5, 0, 4);
        assert_eq!(c.0, vec![(3, 77), (2, 28)]);
    }

    #[test]
    fn cubo_linear_curve_conditions() {
        let c = hilbert_conditions(3, 3, 1, 2, 1);
        assert_eq!(c.0, vec![(3, 14), (2, 9)]);
    }

    #[test]
    fn linear_inverse_drops_ceiling_term() {
        let c = hilbert_conditions(6, 2, 1, 0, 4);
        assert_eq!(c.0[1], (1, binomial(7, 1) - 1));
    }

    #[test]
    fn curve_solution() {
        let p = hilbert_polynomial_solve(&HilbertConditions(vec![(3, 14), (2, 9)]), 1).unwrap();
        assert_eq!(p.coefficients(), &[int(-1), int(5)]);
        assert_eq!(p.degree(), int(5));
        assert_eq!(p.sectional_genus(), int(2));
    }

    #[test]
    fn inconsistent_overdetermined() {
        let conds = HilbertConditions(vec![(3, 14), (2, 9), (1, 5)]);
        assert!(matches!(
            hilbert_polynomial_solve(&conds, 1),
            Err(Error::InconsistentHilbert { at: 1 })
        ));
        let ok = HilbertConditions(vec![(3, 14), (2, 9), (1, 4)]);
        assert!(hilbert_polynomial_solve(&ok, 1).is_ok());
    }

    #[test]
    fn surface_genus_from_known_polynomial() {
        // Plane in P^3: χ(t) = (t+1)(t+2)/2, degree 1, sectional genus 0.
        let conds = HilbertConditions((0..3).map(|t| (t, (t + 1) * (t + 2) / 2)).collect());
        let p = hilbert_polynomial_solve(&conds, 2).unwrap();
        assert_eq!(p.degree(), int(1));
        assert_eq!(p.sectional_genus(), int(0));
        // Smooth cubic surface: χ(t) = 3t²/2 + 3t/2 + 1, sectional genus 1.
        let cubic = HilbertConditions((0..3).map(|t| (t, (3 * t * t + 3 * t) / 2 + 1)).collect());
        let p = hilbert_polynomial_solve(&cubic, 2).unwrap();
        assert_eq!(p.degree(), int(3));
        assert_eq!(p.sectional_genus(), int(1));
    }

    #[test]
    fn too_few_conditions() {
        let conds = HilbertConditions(vec![(3, 77), (2, 28)]);
        assert!(matches!(
            hilbert_polynomial_solve(&conds, 3),
            Err(Error::Precondition(_))
        ));
    }
}
