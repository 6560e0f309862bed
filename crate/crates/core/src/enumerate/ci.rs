//! Degrees of complete intersections of given codimension and coindex.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

/// Degrees `e_1 <= … <= e_a`, each at least 2, of the hypersurfaces cutting
/// out a complete intersection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CIType(Vec<i64>);

impl CIType {
    pub fn new(mut degrees: Vec<i64>) -> Option<Self> {
        if degrees.iter().any(|&e| e < 2) {
            return None;
        }
        degrees.sort_unstable();
        Some(CIType(degrees))
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn codim(&self) -> i64 {
        self.0.len() as i64
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().product()
    }

    /// `Σ e_i - a`
    pub fn coindex(&self) -> i64 {
        self.0.iter().sum::<i64>() - self.codim()
    }
}

/// All complete-intersection types of codimension `codim` and coindex `coindex`.
pub fn ci_types(codim: i64, coindex: i64) -> Vec<CIType> {
    fn rec(left: i64, rest: i64, min: i64, acc: &mut Vec<i64>, out: &mut Vec<CIType>) {
        if left == 0 {
            if rest == 0 {
                out.push(CIType(acc.clone()));
            }
            return;
        }
        let mut e = min;
        while e * left <= rest {
            acc.push(e);
            rec(left - 1, rest - e, e, acc, out);
            acc.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    if codim >= 1 {
        rec(codim, codim + coindex, 2, &mut Vec::new(), &mut out);
    }
    out
}

/// Degrees of factorial complete intersections of codimension `codim` and coindex `coindex`.
pub fn ci_degree_options(codim: i64, coindex: i64) -> BTreeSet<i64> {
    ci_types(codim, coindex)
        .iter()
        .map(CIType::degree)
        .collect()
}

/// Whether an image of codimension `codim`, degree `image_degree` and coindex
/// `coindex` can be a complete intersection (a linear space when `codim = 0`).
pub fn ci_compatible(codim: i64, coindex: i64, image_degree: i64) -> bool {
    if codim == 0 {
        image_degree == 1 && coindex == 0
    } else {
        ci_degree_options(codim, coindex).contains(&image_degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn options() {
        assert_eq!(ci_degree_options(2, 4), BTreeSet::from([8, 9]));
        assert_eq!(ci_degree_options(4, 4), BTreeSet::from([16]));
        assert_eq!(ci_degree_options(3, 3), BTreeSet::from([8]));
        assert_eq!(ci_degree_options(1, 3), BTreeSet::from([4]));
        assert!(ci_degree_options(3, 2).is_empty());
    }

    #[test]
    fn cubo_linear_pairs() {
        let pairs: Vec<(i64, i64)> = (1..=4)
            .flat_map(|a| ci_degree_options(a, 4).into_iter().map(move |d| (d, a)))
            .collect();
        assert_eq!(pairs, vec![(5, 1), (8, 2), (9, 2), (12, 3), (16, 4)]);
    }

    #[test]
    fn types_respect_sum_and_product() {
        for t in ci_types(3, 4) {
            assert_eq!(t.codim(), 3);
            assert_eq!(t.coindex(), 4);
        }
        assert_eq!(ci_types(2, 4).len(), 2);
        assert!(CIType::new(vec![1, 3]).is_none());
        assert_eq!(CIType::new(vec![3, 2]).unwrap().degrees(), &[2, 3]);
    }

    #[test]
    fn compatibility() {
        assert!(ci_compatible(0, 0, 1));
        assert!(!ci_compatible(0, 1, 1));
        assert!(!ci_compatible(1, 3, 5));
    }
}
