//! Homogeneous ideals in free super-polynomial rings, with membership and
//! normal forms relative to a total-degree truncation.
//!
//! Membership is decided by exact linear elimination over the monomial
//! basis up to the bound: `p` lies in the ideal up to degree `D` iff it is
//! a rational combination of the products `m * g` (generator `g`, monomial
//! `m`) of degree at most `D`. A positive answer is an exact certificate;
//! a negative answer is only valid relative to the bound, which callers
//! are expected to report alongside it.
//!
//! Primality of ideals is not decided here: the spectrum identification
//! is exercised through [`SuperIdeal::spec_reduce`] on presentations, not
//! by testing whether an ideal is prime.

use std::collections::BTreeMap;

use itertools::Itertools;
use num::{BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::superring::{ensure_same_ring, Monomial, Parity, Ring, SuperPolynomial};

/// Total-degree cap for the truncated membership engine. Each odd factor
/// counts as degree one. Must dominate every generator degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationBound(pub usize);

/// A finitely generated Z2-homogeneous ideal. Generators are stored
/// parity-split: the even and odd parts of every given generator are both
/// generators, which is forced by homogeneity of super-ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperIdeal {
    ring: Ring,
    generators: Vec<SuperPolynomial>,
}

impl SuperIdeal {
    pub fn new(ring: &Ring, given: Vec<SuperPolynomial>) -> Result<Self> {
        let mut generators = Vec::new();
        for g in given {
            ensure_same_ring(g.ring(), ring)?;
            let (even, odd) = g.parity_decompose();
            if !even.is_zero() {
                generators.push(even);
            }
            if !odd.is_zero() {
                generators.push(odd);
            }
        }
        Ok(SuperIdeal {
            ring: ring.clone(),
            generators,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The stored (parity-split) generator set.
    pub fn generators(&self) -> &[SuperPolynomial] {
        &self.generators
    }

    pub fn max_generator_degree(&self) -> usize {
        self.generators
            .iter()
            .filter_map(SuperPolynomial::degree)
            .max()
            .unwrap_or(0)
    }

    /// Parity-split generator lists `(even, odd)`. Asserts, through the
    /// membership engine, that each part indeed lies in the ideal.
    pub fn z2_split(&self) -> (Vec<SuperPolynomial>, Vec<SuperPolynomial>) {
        if !self.generators.is_empty() {
            let bound = TruncationBound(self.max_generator_degree());
            let echelon = self
                .echelon(bound)
                .expect("bound dominates generator degrees");
            for g in &self.generators {
                assert!(
                    echelon.reduce(terms_of(g)).is_empty(),
                    "split part `{g}` escaped its own ideal"
                );
            }
        }
        self.generators
            .iter()
            .cloned()
            .partition(|g| g.is_homogeneous(Parity::Even))
    }

    /// Truncated membership test. Sound and complete up to the bound: a
    /// `true` is an exact certificate, a `false` only rules out
    /// combinations of degree at most `bound.0`.
    pub fn membership(&self, p: &SuperPolynomial, bound: TruncationBound) -> Result<bool> {
        Ok(self.normal_form(p, bound)?.is_zero())
    }

    /// Canonical representative of `p` modulo the degree-truncated ideal:
    /// the reduction of `p` against the reduced echelon form of the
    /// generator span. Zero iff `membership` holds; idempotent.
    pub fn normal_form(
        &self,
        p: &SuperPolynomial,
        bound: TruncationBound,
    ) -> Result<SuperPolynomial> {
        ensure_same_ring(p.ring(), &self.ring)?;
        let degree = p.degree().unwrap_or(0);
        if degree > bound.0 {
            return Err(Error::DegreeOverflow {
                degree,
                bound: bound.0,
            });
        }
        let echelon = self.echelon(bound)?;
        let reduced = echelon.reduce(terms_of(p));
        Ok(SuperPolynomial::from_terms(&self.ring, reduced))
    }

    /// Generators of the bosonic ideal: the image of the ideal, together
    /// with all odd variables, under the bosonic truncation. Realizes the
    /// identification of the spectrum with the spectrum of the even part
    /// on presentations; idempotent on bosonic ideals.
    pub fn spec_reduce(&self) -> Vec<SuperPolynomial> {
        self.generators
            .iter()
            .map(SuperPolynomial::tau_b)
            .filter(|g| !g.is_zero())
            .collect()
    }

    fn echelon(&self, bound: TruncationBound) -> Result<Echelon> {
        let max_gen = self.max_generator_degree();
        if bound.0 < max_gen {
            return Err(Error::DegreeOverflow {
                degree: max_gen,
                bound: bound.0,
            });
        }
        let multipliers = monomials_up_to(&self.ring, bound.0);
        let one = BigRational::one();
        let mut echelon = Echelon::default();
        for g in &self.generators {
            for m in &multipliers {
                let product = g.mul_term(m, &one);
                if product.is_zero() {
                    continue;
                }
                if product.degree().unwrap_or(0) <= bound.0 {
                    echelon.insert(terms_of(&product));
                }
            }
        }
        Ok(echelon)
    }
}

fn terms_of(p: &SuperPolynomial) -> BTreeMap<Monomial, BigRational> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// All monomials of the ring with total degree at most `max_degree`,
/// ascending in the graded-lexicographic pivot order.
pub fn monomials_up_to(ring: &Ring, max_degree: usize) -> Vec<Monomial> {
    let mut evens: Vec<Vec<u32>> = Vec::new();
    let mut current = vec![0u32; ring.num_even()];
    collect_even(&mut evens, &mut current, 0, max_degree);
    let odd_count = ring.num_odd();
    let mut out = Vec::new();
    for even in &evens {
        let even_degree: usize = even.iter().map(|&e| e as usize).sum();
        let room = max_degree - even_degree;
        for k in 0..=room.min(odd_count) {
            for combo in (0..odd_count).combinations(k) {
                out.push(Monomial::new(even.clone(), &combo));
            }
        }
    }
    out.sort();
    out
}

fn collect_even(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, index: usize, remaining: usize) {
    if index == current.len() {
        out.push(current.clone());
        return;
    }
    for e in 0..=remaining {
        current[index] = e as u32;
        collect_even(out, current, index + 1, remaining - e);
    }
    current[index] = 0;
}

/// Reduced row echelon form over the monomial basis. Rows are kept sorted
/// by pivot (the graded-lex largest monomial of the row) in descending
/// order, with pivot coefficient one and each pivot eliminated from every
/// other row, so a single descending reduction pass is canonical.
#[derive(Default)]
struct Echelon {
    rows: Vec<(Monomial, BTreeMap<Monomial, BigRational>)>,
}

impl Echelon {
    fn reduce(&self, mut v: BTreeMap<Monomial, BigRational>) -> BTreeMap<Monomial, BigRational> {
        for (pivot, row) in &self.rows {
            if let Some(c) = v.get(pivot).cloned() {
                subtract_scaled(&mut v, row, &c);
            }
        }
        v
    }

    fn insert(&mut self, v: BTreeMap<Monomial, BigRational>) {
        let mut v = self.reduce(v);
        let Some(pivot) = v.keys().next_back().cloned() else {
            return;
        };
        let lead = v[&pivot].clone();
        for coeff in v.values_mut() {
            *coeff = &*coeff / &lead;
        }
        for (_, row) in &mut self.rows {
            if let Some(c) = row.get(&pivot).cloned() {
                subtract_scaled(row, &v, &c);
            }
        }
        let at = self.rows.partition_point(|(existing, _)| *existing > pivot);
        self.rows.insert(at, (pivot, v));
    }
}

fn subtract_scaled(
    v: &mut BTreeMap<Monomial, BigRational>,
    row: &BTreeMap<Monomial, BigRational>,
    scale: &BigRational,
) {
    if scale.is_zero() {
        return;
    }
    for (m, c) in row {
        let delta = -(c * scale);
        match v.entry(m.clone()) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(delta);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &delta;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }
}
