use serde::{Deserialize, Serialize};

/// Discrete signature of a candidate transformation `P^n --> Z ⊂ P^(n+a)`.
///
/// `forward_degree` is the degree of the defining forms, `inverse_degree` the
/// degree of the forms defining the inverse; `image_degree` and `codim`
/// describe the image, `degree` and `genus` the base locus. `nu` is the number
/// of points blown up on the minimal reduction, when known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "ProfileRecord", into = "ProfileRecord")]
pub struct TransformationProfile {
    pub ambient_dim: i64,
    pub forward_degree: i64,
    pub inverse_degree: i64,
    pub codim: i64,
    pub image_degree: i64,
    pub degree: i64,
    pub genus: i64,
    pub nu: Option<i64>,
    linear_inverse: bool,
}

impl TransformationProfile {
    pub fn new(
        ambient_dim: i64,
        forward_degree: i64,
        inverse_degree: i64,
        codim: i64,
        image_degree: i64,
        degree: i64,
        genus: i64,
    ) -> Self {
        TransformationProfile {
            ambient_dim,
            forward_degree,
            inverse_degree,
            codim,
            image_degree,
            degree,
            genus,
            nu: None,
            linear_inverse: inverse_degree == 1,
        }
    }

    /// A cubic transformation of `P^6` given by the 5-tuple `(λ, g, Δ, d, a)`.
    pub fn cubic(
        degree: i64,
        genus: i64,
        image_degree: i64,
        inverse_degree: i64,
        codim: i64,
    ) -> Self {
        Self::new(6, 3, inverse_degree, codim, image_degree, degree, genus)
    }

    /// The 6-tuple `(λ, g, ν, Δ, d, a)` of the cubic analysis.
    pub fn cubic_with_nu(
        degree: i64,
        genus: i64,
        nu: i64,
        image_degree: i64,
        inverse_degree: i64,
        codim: i64,
    ) -> Self {
        Self::cubic(degree, genus, image_degree, inverse_degree, codim).with_nu(nu)
    }

    pub fn with_nu(mut self, nu: i64) -> Self {
        self.nu = Some(nu);
        self
    }

    /// ε(d): 1 when the inverse is defined by linear forms, 0 otherwise.
    pub fn eps(&self) -> i64 {
        i64::from(self.linear_inverse)
    }

    pub fn is_cubic_sextic(&self) -> bool {
        self.ambient_dim == 6 && self.forward_degree == 3
    }

    /// Checks the structural invariants relating ε, Δ and a.
    pub fn check_invariants(&self) -> Result<(), String> {
        if self.linear_inverse != (self.inverse_degree == 1) {
            return Err("eps must be 1 exactly when the inverse degree is 1".into());
        }
        match self.image_degree {
            1 if self.codim != 0 => Err("image degree 1 forces codimension 0".into()),
            2 if self.codim != 1 => Err("image degree 2 forces codimension 1".into()),
            d if d >= 3 && self.codim < 1 => {
                Err("image degree >= 3 forces codimension >= 1".into())
            }
            d if d < 1 => Err("image degree must be positive".into()),
            _ => Ok(()),
        }
    }

    /// Canonical ordering key `(λ, g, Δ, d, a, ν)`.
    pub fn sort_key(&self) -> (i64, i64, i64, i64, i64, i64) {
        (
            self.degree,
            self.genus,
            self.image_degree,
            self.inverse_degree,
            self.codim,
            self.nu.unwrap_or(-1),
        )
    }

    /// `(λ, g, Δ, d, a)`
    pub fn five_tuple(&self) -> (i64, i64, i64, i64, i64) {
        (
            self.degree,
            self.genus,
            self.image_degree,
            self.inverse_degree,
            self.codim,
        )
    }

    /// `(λ, g, ν, Δ, d, a)`; `ν` reads as 0 when absent.
    pub fn six_tuple(&self) -> (i64, i64, i64, i64, i64, i64) {
        (
            self.degree,
            self.genus,
            self.nu.unwrap_or(0),
            self.image_degree,
            self.inverse_degree,
            self.codim,
        )
    }

    /// `(λ, g, Δ, a)`
    pub fn four_tuple(&self) -> (i64, i64, i64, i64) {
        (self.degree, self.genus, self.image_degree, self.codim)
    }
}

#[derive(Serialize, Deserialize)]
struct ProfileRecord {
    ambient_dim: i64,
    forward_degree: i64,
    inverse_degree: i64,
    codim: i64,
    image_degree: i64,
    degree: i64,
    genus: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nu: Option<i64>,
    #[serde(default)]
    eps: i64,
}

impl From<ProfileRecord> for TransformationProfile {
    fn from(r: ProfileRecord) -> Self {
        let p = TransformationProfile::new(
            r.ambient_dim,
            r.forward_degree,
            r.inverse_degree,
            r.codim,
            r.image_degree,
            r.degree,
            r.genus,
        );
        match r.nu {
            Some(nu) => p.with_nu(nu),
            None => p,
        }
    }
}

impl From<TransformationProfile> for ProfileRecord {
    fn from(p: TransformationProfile) -> Self {
        ProfileRecord {
            ambient_dim: p.ambient_dim,
            forward_degree: p.forward_degree,
            inverse_degree: p.inverse_degree,
            codim: p.codim,
            image_degree: p.image_degree,
            degree: p.degree,
            genus: p.genus,
            nu: p.nu,
            eps: p.eps(),
        }
    }
}

/// Dimensions of the base loci of a map and of its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimensionPair {
    pub r: i64,
    pub r_prime: i64,
    pub c: i64,
}

/// The projective degrees `(δ_0, …, δ_n)` of a map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn ambient_dim(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&d| d > 0)
    }

    /// Log-concavity `δ_i² ≥ δ_{i-1} δ_{i+1}` for every interior index.
    pub fn satisfies_hodge(&self) -> bool {
        self.first_hodge_violation().is_none()
    }

    /// The first interior index where log-concavity fails.
    pub fn first_hodge_violation(&self) -> Option<usize> {
        self.0
            .windows(3)
            .position(|w| w[1] * w[1] < w[0] * w[2])
            .map(|i| i + 1)
    }

    /// `(δ_{n-1}, δ_n)` read as `(d·Δ, Δ)`; returns `d` when divisible.
    pub fn inverse_degree(&self) -> Option<i64> {
        let n = self.0.len();
        if n < 2 || self.0[n - 1] == 0 {
            return None;
        }
        crate::arith::exact_div(self.0[n - 2], self.0[n - 1])
    }
}

impl std::fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_follows_inverse_degree() {
        assert_eq!(TransformationProfile::cubic(14, 15, 1, 5, 0).eps(), 0);
        assert_eq!(TransformationProfile::cubic(15, 19, 12, 1, 3).eps(), 1);
    }

    #[test]
    fn image_degree_codim_rules() {
        assert!(TransformationProfile::cubic(14, 15, 1, 5, 0)
            .check_invariants()
            .is_ok());
        assert!(TransformationProfile::cubic(14, 15, 1, 5, 1)
            .check_invariants()
            .is_err());
        assert!(TransformationProfile::cubic(12, 10, 2, 4, 0)
            .check_invariants()
            .is_err());
        assert!(TransformationProfile::cubic(12, 10, 3, 3, 0)
            .check_invariants()
            .is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = TransformationProfile::cubic_with_nu(12, 10, 1, 2, 4, 1);
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.contains("\"eps\":0"));
        assert_eq!(
            serde_json::from_str::<TransformationProfile>(&s).unwrap(),
            p
        );
    }

    #[test]
    fn hodge_violation_index() {
        let md = MultiDegree(vec![1, 4, 3, 4, 4, 4]);
        assert_eq!(md.first_hodge_violation(), Some(2));
        assert!(MultiDegree(vec![1, 4, 7, 8, 8, 8]).satisfies_hodge());
    }
}
