//! Adjunction-theoretic case systems, evaluated on the reduction of each candidate.

use crate::enumerate::{reduction_quantities, CandidateSet};
use crate::invariants::{cubic_invariants, Pluridegrees, ThreefoldDegrees, TransformationProfile};

/// A named integer quantity of a candidate.
#[derive(Clone, Copy)]
pub struct Quantity {
    pub label: &'static str,
    pub eval: fn(&TransformationProfile) -> i64,
}

impl std::fmt::Debug for Quantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label)
    }
}

/// Equalities required to vanish and inequalities required to be non-negative.
#[derive(Debug, Clone)]
pub struct CaseSystem {
    pub name: &'static str,
    pub equalities: Vec<Quantity>,
    pub inequalities: Vec<Quantity>,
}

impl CaseSystem {
    pub fn holds(&self, p: &TransformationProfile) -> bool {
        self.equalities.iter().all(|q| (q.eval)(p) == 0)
            && self.inequalities.iter().all(|q| (q.eval)(p) >= 0)
    }
}

pub fn solve_case_system(system: &CaseSystem, candidates: &CandidateSet) -> CandidateSet {
    candidates.filter(system.name, system.name, |p| system.holds(p))
}

/// Intersection degrees on the reduction; the base locus itself when `ν` is absent.
pub fn reduced_degrees(p: &TransformationProfile) -> ThreefoldDegrees {
    cubic_invariants(p).0.threefold().reduce(p.nu.unwrap_or(0))
}

pub fn reduced_pluridegrees(p: &TransformationProfile) -> Pluridegrees {
    reduced_degrees(p).pluridegrees()
}

macro_rules! q {
    ($label:literal, |$p:ident| $body:expr) => {
        Quantity {
            label: $label,
            eval: |$p: &TransformationProfile| $body,
        }
    };
}

/// `K + 3H` is not base-point free: the threefold is a scroll over a curve.
pub fn scroll_over_curve() -> CaseSystem {
    CaseSystem {
        name: "scroll-over-curve",
        equalities: vec![
            q!("(K+3H)^3", |p| reduced_degrees(p).adjoint_power(1, 3, 3)),
            q!("(K+3H)^2.H", |p| reduced_degrees(p).adjoint_power(1, 3, 2)),
        ],
        inequalities: vec![],
    }
}

/// `K = -2H`.
pub fn del_pezzo() -> CaseSystem {
    CaseSystem {
        name: "del-pezzo",
        equalities: vec![
            q!("K.H^2+2H^3", |p| {
                let t = reduced_degrees(p);
                t.kh2 + 2 * t.h3
            }),
            q!("K^2.H+2K.H^2", |p| {
                let t = reduced_degrees(p);
                t.k2h + 2 * t.kh2
            }),
            q!("K^3+2K^2.H", |p| {
                let t = reduced_degrees(p);
                t.k3 + 2 * t.k2h
            }),
        ],
        inequalities: vec![],
    }
}

pub fn quadric_fibration() -> CaseSystem {
    CaseSystem {
        name: "quadric-fibration",
        equalities: vec![
            q!("(K+2H)^3", |p| reduced_degrees(p).adjoint_power(1, 2, 3)),
            q!("(K+2H)^2.H", |p| reduced_degrees(p).adjoint_power(1, 2, 2)),
        ],
        inequalities: vec![],
    }
}

pub fn scroll_over_surface() -> CaseSystem {
    CaseSystem {
        name: "scroll-over-surface",
        equalities: vec![q!("(K+2H)^3", |p| reduced_degrees(p).adjoint_power(1, 2, 3))],
        inequalities: vec![],
    }
}

/// `K + H` nef and big on the reduction, with the Hodge index inequality.
pub fn reduction() -> CaseSystem {
    CaseSystem {
        name: "reduction",
        equalities: vec![],
        inequalities: vec![
            q!("d1-1", |p| reduction_quantities(p)[0]),
            q!("d2-1", |p| reduction_quantities(p)[1]),
            q!("d3-1", |p| reduction_quantities(p)[2]),
            q!("d1^2-d2.d0", |p| reduction_quantities(p)[3]),
        ],
    }
}

/// `(P^3, O(2))` reductions.
pub fn veronese() -> CaseSystem {
    CaseSystem {
        name: "veronese",
        equalities: vec![
            q!("(2K+3H)^3", |p| reduced_degrees(p).adjoint_power(2, 3, 3)),
            q!("(2K+3H)^2.H", |p| reduced_degrees(p).adjoint_power(2, 3, 2)),
        ],
        inequalities: vec![],
    }
}

/// `K = -H` on the reduction.
pub fn mukai() -> CaseSystem {
    CaseSystem {
        name: "mukai",
        equalities: vec![
            q!("K^3+H^3", |p| {
                let t = reduced_degrees(p);
                t.k3 + t.h3
            }),
            q!("K^2.H-H^3", |p| {
                let t = reduced_degrees(p);
                t.k2h - t.h3
            }),
            q!("K.H^2+H^3", |p| {
                let t = reduced_degrees(p);
                t.kh2 + t.h3
            }),
        ],
        inequalities: vec![],
    }
}

pub fn del_pezzo_fibration() -> CaseSystem {
    CaseSystem {
        name: "del-pezzo-fibration",
        equalities: vec![
            q!("d3", |p| reduced_pluridegrees(p).d3),
            q!("d2", |p| reduced_pluridegrees(p).d2),
        ],
        inequalities: vec![q!("d1-1", |p| reduced_pluridegrees(p).d1 - 1)],
    }
}

pub fn conic_bundle() -> CaseSystem {
    CaseSystem {
        name: "conic-bundle",
        equalities: vec![q!("d3", |p| reduced_pluridegrees(p).d3)],
        inequalities: vec![
            q!("d2-1", |p| reduced_pluridegrees(p).d2 - 1),
            q!("d1^2-d2.d0", |p| reduced_pluridegrees(p).first_gap()),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::Columns;

    fn set(ps: Vec<TransformationProfile>) -> CandidateSet {
        CandidateSet::new("t", Columns::Six, vec![], ps)
    }

    #[test]
    fn mukai_accepts_blown_up_grassmannian_section() {
        let p = TransformationProfile::cubic_with_nu(11, 8, 3, 4, 3, 2);
        assert!(mukai().holds(&p));
        assert!(!mukai().holds(&p.with_nu(2)));
    }

    #[test]
    fn reduction_system_matches_check() {
        let s = set(vec![
            TransformationProfile::cubic_with_nu(14, 15, 0, 1, 5, 0),
            TransformationProfile::cubic_with_nu(13, 12, 0, 1, 5, 0),
        ]);
        let out = solve_case_system(&reduction(), &s);
        assert_eq!(out.len(), 1);
        assert_eq!(out.provenance(), &["reduction".to_string()]);
    }

    #[test]
    fn fibrations() {
        assert!(
            del_pezzo_fibration().holds(&TransformationProfile::cubic_with_nu(12, 10, 0, 3, 3, 1))
        );
        assert!(conic_bundle().holds(&TransformationProfile::cubic_with_nu(13, 12, 0, 1, 5, 0)));
        assert!(!conic_bundle().holds(&TransformationProfile::cubic_with_nu(12, 10, 0, 3, 3, 1)));
    }

    #[test]
    fn scroll_over_surface_tuple() {
        assert!(scroll_over_surface().holds(&TransformationProfile::cubic(10, 6, 8, 2, 3)));
        assert!(!quadric_fibration().holds(&TransformationProfile::cubic(10, 6, 8, 2, 3)));
    }
}
