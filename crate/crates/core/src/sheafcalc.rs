//! Cohomology bookkeeping for sums of line bundles on genus-zero curves
//! and their pullbacks along degree-d maps.
//!
//! Sign convention: projective super-space P^{p|q} is defined by q twists
//! of -1, and its fermionic directions are counted by sections of the
//! pulled-back *dual*, so a degree-d map contributes q(d+1). Both sign
//! conventions for the defining bundle appear in the literature; this
//! crate fixes this one everywhere.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::superscheme::SplitScheme;

/// Base space a bundle sum lives on: the genus-zero curve, or projective
/// space of the given dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Base {
    P1,
    Pm(u32),
}

impl std::fmt::Display for Base {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Base::P1 => write!(f, "P^1"),
            Base::Pm(m) => write!(f, "P^{m}"),
        }
    }
}

/// A direct sum of line bundles, encoded by the multiset of its twists.
/// Twists are kept sorted so equal multisets compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleSum {
    twists: Vec<i64>,
    base: Base,
}

impl BundleSum {
    pub fn new(mut twists: Vec<i64>, base: Base) -> Self {
        twists.sort_unstable();
        BundleSum { twists, base }
    }

    pub fn on_curve(twists: Vec<i64>) -> Self {
        Self::new(twists, Base::P1)
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// Negate every twist.
    pub fn dualize(&self) -> BundleSum {
        BundleSum::new(self.twists.iter().map(|a| -a).collect(), self.base)
    }

    /// Pull back along a degree-d map from the curve: each twist a
    /// becomes a*d.
    pub fn pullback(&self, map: MapDatum) -> BundleSum {
        let d = map.degree as i64;
        BundleSum::new(self.twists.iter().map(|a| a * d).collect(), Base::P1)
    }

    /// The k-th exterior power: twists are the k-element subset sums.
    pub fn exterior_power(&self, k: usize) -> Result<BundleSum> {
        if k > self.rank() {
            return Err(Error::ExteriorOutOfRange {
                k,
                rank: self.rank(),
            });
        }
        let twists = (0..self.rank())
            .combinations(k)
            .map(|subset| subset.iter().map(|&i| self.twists[i]).sum())
            .collect();
        Ok(BundleSum::new(twists, self.base))
    }
}

/// The only datum of a map needed here: its degree on the line class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapDatum {
    pub degree: u64,
}

/// Cohomology of O(k) on the genus-zero curve: h0 = max(k+1, 0) and
/// h1 = max(-k-1, 0), so h0 - h1 = k + 1.
pub fn h0_h1(twist: i64) -> (u64, u64) {
    let h0 = (twist + 1).max(0) as u64;
    let h1 = (-twist - 1).max(0) as u64;
    (h0, h1)
}

/// Rank of the fermionic direction sheaf at an irreducible genus-zero
/// fiber of degree d: the sum of h0 of the pulled-back duals of the
/// target's twists. For twists {-1}^q this is q(d+1).
pub fn q_rank(target: &SplitScheme, map: MapDatum) -> u64 {
    target
        .bundle()
        .dualize()
        .pullback(map)
        .twists()
        .iter()
        .map(|&k| h0_h1(k).0)
        .sum()
}

/// Outcome of the obstruction check for a degree-d genus-zero map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvexityReport {
    /// First cohomology of the pulled-back tangent sheaf of the base
    /// vanishes. Via the Euler sequence (m+1 copies of O(d) with kernel
    /// O) this holds for every d >= 0.
    pub bosonic_ok: bool,
    /// First cohomology of the pulled-back dual of the twist bundle
    /// vanishes summand by summand.
    pub fermionic_ok: bool,
}

/// Check both vanishing conditions for maps of the given degree into a
/// split target over projective space.
pub fn convexity_check(target: &SplitScheme, map: MapDatum) -> ConvexityReport {
    let d = map.degree as i64;
    // Euler sequence roots on the base pull back to m+1 copies of O(d);
    // H^1 of the quotient is a quotient of their H^1 on a curve.
    let bosonic_ok = h0_h1(d).1 == 0;
    let fermionic_ok = target
        .bundle()
        .dualize()
        .pullback(map)
        .twists()
        .iter()
        .all(|&k| h0_h1(k).1 == 0);
    ConvexityReport {
        bosonic_ok,
        fermionic_ok,
    }
}
