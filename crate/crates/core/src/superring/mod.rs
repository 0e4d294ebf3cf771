//! Free graded-commutative polynomial rings C[x_1..x_m | t_1..t_n].
//!
//! Even variables commute, odd variables anticommute and square to zero.
//! Every element is kept in a canonical normal form (odd factors ascending,
//! signs absorbed into exact rational coefficients), so equality is
//! coefficient-map equality.

mod hom;
mod monomial;
mod parse;
mod poly;

pub use hom::{tensor, RingHom, TensorRename};
pub use monomial::Monomial;
pub use parse::{infer_ring, parse_in_ring, parse_polynomial};
pub use poly::{Parity, SuperPolynomial};

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Shared, immutable ring descriptor. All polynomial values hang on to one
/// of these; operations require the specs to be equal by content.
pub type Ring = Arc<RingSpec>;

/// A free super-polynomial ring, given by its ordered even and odd
/// variable names. The order is part of the data: it fixes the sign
/// convention for reordering odd factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    even: Vec<String>,
    odd: Vec<String>,
}

/// A generator position within a [`RingSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Even(usize),
    Odd(usize),
}

impl RingSpec {
    /// Build a ring from variable name lists. Names must be pairwise
    /// distinct across both lists; at most 64 odd variables.
    pub fn new(even: Vec<String>, odd: Vec<String>) -> Result<Ring> {
        if odd.len() > 64 {
            return Err(Error::TooManyOddVariables(odd.len()));
        }
        let mut seen = BTreeSet::new();
        for name in even.iter().chain(odd.iter()) {
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(RingSpec { even, odd }))
    }

    /// Ring with names `x1..xm` and `t1..tn`, matching the expression grammar.
    pub fn standard(m: usize, n: usize) -> Ring {
        let even = (1..=m).map(|i| format!("x{i}")).collect();
        let odd = (1..=n).map(|i| format!("t{i}")).collect();
        RingSpec::new(even, odd).expect("generated names are distinct")
    }

    pub fn even_vars(&self) -> &[String] {
        &self.even
    }

    pub fn odd_vars(&self) -> &[String] {
        &self.odd
    }

    pub fn num_even(&self) -> usize {
        self.even.len()
    }

    pub fn num_odd(&self) -> usize {
        self.odd.len()
    }

    pub fn is_bosonic(&self) -> bool {
        self.odd.is_empty()
    }

    /// The even subring spec: same even variables, no odd ones.
    pub fn bosonic(&self) -> Ring {
        RingSpec::new(self.even.clone(), Vec::new()).expect("names stay distinct")
    }

    /// Look up a variable name.
    pub fn generator(&self, name: &str) -> Option<Generator> {
        if let Some(i) = self.even.iter().position(|v| v == name) {
            return Some(Generator::Even(i));
        }
        self.odd.iter().position(|v| v == name).map(Generator::Odd)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C[{}|{}]", self.even.join(","), self.odd.join(","))
    }
}

pub(crate) fn ensure_same_ring(a: &RingSpec, b: &RingSpec) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}
