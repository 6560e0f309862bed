//! Per-row audit of a classification row against every applicable constraint.

use serde::{Deserialize, Serialize};

use super::row::ClassificationRow;
use crate::arith::as_integer;
use crate::enumerate::{ci_compatible, ci_degree_options, hodge_check, livorni_sommese_check};
use crate::invariants::{
    cubic_multidegree, delta_invariant, dimension_solve, hilbert_conditions,
    hilbert_polynomial_solve, quartic_p4_invariants, quartic_p5_invariants,
    quartic_p5_linear_solution,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub row: String,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, id: &str, passed: bool, value: impl Into<String>) {
        self.checks.push(Check {
            id: id.to_string(),
            passed,
            value: value.into(),
        });
    }
}

pub fn validate_row(row: &ClassificationRow) -> ValidationReport {
    let mut report = ValidationReport {
        row: row.id(),
        checks: Vec::new(),
    };
    let p = &row.profile;
    let (n, d1, d2) = (p.ambient_dim, p.forward_degree, p.inverse_degree);
    let (a, big_d, l, g) = (p.codim, p.image_degree, p.degree, p.genus);
    let dims = row.dims;

    report.push(
        "profile-invariants",
        p.check_invariants().is_ok(),
        p.check_invariants().err().unwrap_or_default(),
    );

    match dimension_solve(n, d1, d2, dims.c) {
        Ok(solved) => report.push(
            "dimension",
            solved == dims,
            format!("r={} r'={} c={}", solved.r, solved.r_prime, solved.c),
        ),
        Err(e) => report.push("dimension", false, e.to_string()),
    }

    let options: Vec<i64> = ci_degree_options(a, dims.c).into_iter().collect();
    report.push(
        "complete-intersection",
        ci_compatible(a, dims.c, big_d),
        format!("a={a} c={} degrees={options:?}", dims.c),
    );

    let conds = hilbert_conditions(n, d1, d2, a, dims.r_prime);
    if conds.len() > dims.r as usize {
        match hilbert_polynomial_solve(&conds, dims.r as usize) {
            Ok(poly) => {
                let (deg, genus) = (poly.degree(), poly.sectional_genus());
                let ok = as_integer(&deg) == Some(l) && as_integer(&genus) == Some(g);
                report.push("hilbert", ok, format!("lambda={deg} g={genus}"));
            }
            Err(e) => report.push("hilbert", false, e.to_string()),
        }
    }

    if p.is_cubic_sextic() && dims.r == 3 {
        let md = cubic_multidegree(p);
        report.push("multidegree-positive", md.is_positive(), md.to_string());
        report.push(
            "multidegree-hodge",
            md.satisfies_hodge(),
            md.first_hodge_violation()
                .map(|i| format!("fails at {i}"))
                .unwrap_or_else(|| md.to_string()),
        );
        report.push("hodge-inequalities", hodge_check(l, g, big_d, d2), "");
        report.push(
            "livorni-sommese",
            livorni_sommese_check(l, g, big_d, d2, a, p.eps()),
            "",
        );
        let delta = delta_invariant(p);
        let ok = row.delta.is_none_or(|d| d == delta) && matches!(delta.rem_euclid(6), 0 | 2);
        report.push("delta", ok, format!("delta={delta}"));
    }

    if n == 4 && d1 == 4 && d2 > 1 {
        let q = quartic_p4_invariants(l, a);
        report.push(
            "quartic-genus",
            as_integer(&q.genus) == Some(g),
            format!("g={}", q.genus),
        );
        report.push(
            "quartic-image-degree",
            as_integer(&q.required_image_degree) == Some(big_d),
            format!("Delta={}", q.required_image_degree),
        );
        report.push(
            "quartic-integrality",
            q.integral_core().is_some(),
            format!("K2={} c2={}", q.canonical_square, q.topological_euler),
        );
    }

    if n == 5 && d1 == 4 && dims.r == 3 {
        let q = quartic_p5_invariants(l, d2, big_d, a);
        report.push("quartic-genus", q.genus == g, format!("g={}", q.genus));
        report.push("quartic-codim", q.codim_relation_holds, "");
        report.push(
            "quartic-surface",
            q.surface_relation == 0,
            format!("{}", q.surface_relation),
        );
        if d2 == 1 {
            report.push(
                "quartic-linear-solution",
                quartic_p5_linear_solution(l) == Some((big_d, a)),
                format!("{:?}", quartic_p5_linear_solution(l)),
            );
            report.push(
                "multidegree-hodge",
                q.multidegree.satisfies_hodge(),
                q.multidegree.to_string(),
            );
        }
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::row::RowSource;
    use crate::invariants::TransformationProfile;

    /// A row from its key `(r, n, d1, d2, a, λ, g, Δ)`.
    fn row([r, n, d1, d2, a, l, g, big_d]: [i64; 8]) -> ClassificationRow {
        ClassificationRow::new(
            0,
            "t",
            TransformationProfile::new(n, d1, d2, a, big_d, l, g),
            r,
            "",
            RowSource::Reference,
        )
    }

    #[test]
    fn quintic_linear_row() {
        let rep = validate_row(&row([3, 5, 5, 1, 4, 14, 23, 16]));
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn quadro_quintic_row() {
        let r = row([3, 8, 2, 5, 0, 13, 8, 1]);
        assert_eq!((r.dims.r, r.dims.r_prime), (3, 6));
        assert!(validate_row(&r).passed());
    }

    #[test]
    fn wrong_image_degree_fails_ci() {
        // n = 6, d1 = 3, d2 = 1 gives c = 4; a = 2 allows degrees 8 and 9 only.
        let rep = validate_row(&row([3, 6, 3, 1, 2, 15, 19, 5]));
        let ci = rep
            .checks
            .iter()
            .find(|c| c.id == "complete-intersection")
            .unwrap();
        assert!(!ci.passed);
    }

    #[test]
    fn wrong_genus_fails_hilbert() {
        let rep = validate_row(&row([1, 3, 3, 1, 2, 5, 3, 4]));
        assert!(rep.failures().any(|c| c.id == "hilbert"));
    }

    #[test]
    fn cubic_row_checks_present() {
        let rep = validate_row(&row([3, 6, 3, 5, 0, 14, 15, 1]));
        assert!(rep.passed());
        for id in ["multidegree-hodge", "livorni-sommese", "delta"] {
            assert!(rep.checks.iter().any(|c| c.id == id));
        }
    }
}
