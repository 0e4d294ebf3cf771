//! Descriptors of split super-schemes over projective space: the base
//! dimension plus the multiset of twists of the defining bundle. All
//! derived quantities are exact integers.

use crate::error::{Error, Result};
use crate::sheafcalc::{Base, BundleSum};

/// A split super-scheme over P^m, determined by a sum of line bundles V:
/// the scheme is the relative spectrum of the exterior algebra of V.
/// Bases other than projective space are not represented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitScheme {
    m: u32,
    bundle: BundleSum,
}

impl SplitScheme {
    pub fn new(m: u32, twists: Vec<i64>) -> Result<Self> {
        if twists.len() > u32::MAX as usize {
            return Err(Error::InvalidTarget {
                input: format!("split m={m}"),
                message: "too many twists".into(),
            });
        }
        Ok(SplitScheme {
            m,
            bundle: BundleSum::new(twists, Base::Pm(m)),
        })
    }

    /// Projective super-space P^{p|q}: base P^p with q twists of -1.
    pub fn projective_superspace(p: u32, q: u32) -> Self {
        SplitScheme::new(p, vec![-1; q as usize]).expect("twist count fits")
    }

    pub fn base_dimension(&self) -> u32 {
        self.m
    }

    pub fn bundle(&self) -> &BundleSum {
        &self.bundle
    }

    pub fn rank(&self) -> usize {
        self.bundle.rank()
    }

    /// True when this is P^{p|q} for some p, q (all twists equal -1).
    pub fn is_projective_superspace(&self) -> bool {
        self.bundle.twists().iter().all(|&a| a == -1)
    }

    /// Super-dimension: base dimension minus the bundle rank.
    pub fn sdim(&self) -> i64 {
        self.m as i64 - self.rank() as i64
    }

    /// Bosonic truncation: the bundle is forgotten. Idempotent.
    pub fn tau_b(&self) -> SplitScheme {
        SplitScheme::new(self.m, Vec::new()).expect("no twists")
    }

    /// Twist multisets of the graded pieces of the structure sheaf: the
    /// k-th exterior power of the bundle for k = 0..rank.
    pub fn structure_sheaf_terms(&self) -> Vec<(usize, BundleSum)> {
        (0..=self.rank())
            .map(|k| (k, self.bundle.exterior_power(k).expect("k is within rank")))
            .collect()
    }

    /// Degree of the dualizing sheaf on the line class:
    /// -(m+1) - sum of twists (canonical of the base twisted by the
    /// determinant of the dual bundle). For P^{p|q} this is q - p - 1.
    pub fn canonical_degree(&self) -> i64 {
        let twist_sum: i64 = self.bundle.twists().iter().sum();
        -(self.m as i64 + 1) - twist_sum
    }

    /// Berezinian degree zero; for P^{p|q} this is the condition
    /// p = q - 1.
    pub fn is_super_calabi_yau(&self) -> bool {
        self.canonical_degree() == 0
    }

    /// True always for a split descriptor: the odd part of the structure
    /// sheaf is built from a finite-rank bundle. Exists so reports can
    /// state the hypothesis explicitly.
    pub fn ffp_check(&self) -> bool {
        true
    }
}

impl std::fmt::Display for SplitScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_projective_superspace() {
            write!(f, "P^({}|{})", self.m, self.rank())
        } else {
            let twists: Vec<String> = self.bundle.twists().iter().map(i64::to_string).collect();
            write!(f, "split(m={}, V=[{}])", self.m, twists.join(","))
        }
    }
}

/// Calabi-Yau test for a degree-s hypersurface in P^{p|q}: the condition
/// is p + 1 - q = s. Degenerate degrees (s < 1) are rejected.
pub fn hypersurface_cy(p: u32, q: u32, s: i64) -> Result<bool> {
    if s < 1 {
        return Err(Error::InvalidHypersurfaceDegree(s));
    }
    Ok(p as i64 + 1 - q as i64 == s)
}
