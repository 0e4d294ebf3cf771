//! Stable-map moduli bookkeeping: dual-graph stability and surgery, the
//! expected-dimension formulas, the coefficient-space parametrization
//! count, and consistency of the bosonic truncation.

mod enumerate;
mod graph;
mod stabilize;

pub use enumerate::{canonical_tree_key, enumerate_genus_zero, vertex_bound, ENUMERATION_LIMIT};
pub use graph::{DualGraph, StabilityReport, VertexData};
pub use stabilize::{forget_point, stabilize_curve};

use crate::error::{Error, Result};
use crate::superscheme::SplitScheme;

/// A stable-map moduli problem: source genus and markings, a split target
/// over projective space, and the map degree on the line class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliProblem {
    pub genus: u32,
    pub markings: u32,
    pub target: SplitScheme,
    pub degree: u64,
}

impl ModuliProblem {
    pub fn new(genus: u32, markings: u32, target: SplitScheme, degree: u64) -> Self {
        ModuliProblem {
            genus,
            markings,
            target,
            degree,
        }
    }

    /// Virtual super-dimension:
    /// (1 - g)(sdim X - 3) - d * deg(omega_X) + n.
    pub fn vsdim(&self) -> i64 {
        let g = self.genus as i64;
        let n = self.markings as i64;
        let d = self.degree as i64;
        (1 - g) * (self.target.sdim() - 3) - d * self.target.canonical_degree() + n
    }

    /// Stability of a candidate dual graph for this problem.
    pub fn is_stable_map_graph(&self, graph: &DualGraph) -> StabilityReport {
        graph.stability_report(self.genus, self.markings, self.degree)
    }

    /// The same problem with the target truncated to its bosonic base.
    pub fn truncated(&self) -> ModuliProblem {
        ModuliProblem {
            target: self.target.tau_b(),
            ..self.clone()
        }
    }
}

/// Dimensions of the coefficient-space chart for irreducible genus-zero
/// degree-d maps into projective super-space: (p+1)(d+1) even and q(d+1)
/// odd coefficients, minus the scaling and the automorphisms of the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WittenCount {
    pub bosonic: i64,
    pub fermionic: u64,
}

impl WittenCount {
    pub fn sdim(&self) -> i64 {
        self.bosonic - self.fermionic as i64
    }
}

/// Parametrization count for the dense open chart of irreducible maps:
/// bosonic = (p+1)(d+1) - 1 - 3, fermionic = q(d+1). The chart
/// degenerates for p = 0 or d = 0.
pub fn witten_count(p: u32, q: u32, d: u64) -> Result<WittenCount> {
    if p == 0 || d == 0 {
        return Err(Error::DegenerateChart { p, d });
    }
    let bosonic = (p as i64 + 1) * (d as i64 + 1) - 1 - 3;
    let fermionic = q as u64 * (d + 1);
    Ok(WittenCount { bosonic, fermionic })
}

/// Bookkeeping comparison of a problem against its bosonic truncation:
/// the even part of the super count must equal the classical expected
/// dimension for the truncated target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationReport {
    pub super_vsdim: i64,
    pub bosonic_part: i64,
    pub fermionic_part: i64,
    pub truncated_vsdim: i64,
    pub consistent: bool,
}

/// Split the expected dimension into even and odd contributions and check
/// the even part against the truncated problem.
pub fn taub_consistency(problem: &ModuliProblem) -> TruncationReport {
    let super_vsdim = problem.vsdim();
    let truncated_vsdim = problem.truncated().vsdim();
    // the bundle contributes (1-g) * rank V - d * sum(twists) with a sign
    let g = problem.genus as i64;
    let d = problem.degree as i64;
    let rank = problem.target.rank() as i64;
    let twist_sum: i64 = problem.target.bundle().twists().iter().sum();
    let fermionic_part = (1 - g) * rank - d * twist_sum;
    let bosonic_part = super_vsdim + fermionic_part;
    TruncationReport {
        super_vsdim,
        bosonic_part,
        fermionic_part,
        truncated_vsdim,
        consistent: bosonic_part == truncated_vsdim,
    }
}

/// The natural maps out of a moduli problem, as metadata: the n
/// evaluation maps, the stabilization functor to the moduli of marked
/// curves (defined when n + 2g >= 3), and the map forgetting the last
/// marked point (defined when source and target problems are nonempty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalMaps {
    pub evaluation_arity: u32,
    pub evaluation_target: String,
    pub curve_functor_defined: bool,
    pub curve_functor_target: (u32, u32),
    pub forgetful_defined: bool,
    pub forgetful_target: Option<(u32, u32)>,
}

pub fn natural_maps(problem: &ModuliProblem) -> NaturalMaps {
    let g = problem.genus;
    let n = problem.markings;
    let nonempty = |n: u32| problem.degree > 0 || n + 2 * g >= 3;
    let forgetful_defined = n >= 1 && nonempty(n) && nonempty(n - 1);
    NaturalMaps {
        evaluation_arity: n,
        evaluation_target: problem.target.to_string(),
        curve_functor_defined: n + 2 * g >= 3,
        curve_functor_target: (g, n),
        forgetful_defined,
        forgetful_target: if n >= 1 { Some((g, n - 1)) } else { None },
    }
}
