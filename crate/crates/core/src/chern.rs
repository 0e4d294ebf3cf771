//! Chern and Todd class arithmetic in the cohomology ring of projective
//! space: exact rational coefficient vectors in the hyperplane class h,
//! truncated at h^{m+1}.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::sheafcalc::{Base, BundleSum};

/// An element of Q[h]/(h^{m+1}): the coefficients of h^0 .. h^m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohClass {
    m: usize,
    coeffs: Vec<BigRational>,
}

impl CohClass {
    /// Build from coefficients (ascending powers), truncating or zero-
    /// padding to length m + 1.
    pub fn new(m: usize, mut coeffs: Vec<BigRational>) -> Self {
        coeffs.resize(m + 1, BigRational::zero());
        CohClass { m, coeffs }
    }

    pub fn zero(m: usize) -> Self {
        Self::new(m, Vec::new())
    }

    pub fn one(m: usize) -> Self {
        Self::new(m, vec![BigRational::one()])
    }

    /// The class c * h^k.
    pub fn monomial(m: usize, k: usize, c: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); m + 1];
        if k <= m {
            coeffs[k] = c;
        }
        CohClass { m, coeffs }
    }

    pub fn base_dimension(&self) -> usize {
        self.m
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &CohClass) -> CohClass {
        assert_eq!(self.m, other.m, "cohomology classes on different bases");
        CohClass::new(
            self.m,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn neg(&self) -> CohClass {
        CohClass::new(self.m, self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn sub(&self, other: &CohClass) -> CohClass {
        self.add(&other.neg())
    }

    /// Truncated product.
    pub fn mul(&self, other: &CohClass) -> CohClass {
        assert_eq!(self.m, other.m, "cohomology classes on different bases");
        let mut coeffs = vec![BigRational::zero(); self.m + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > self.m {
                    break;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        CohClass { m: self.m, coeffs }
    }

    /// Multiplicative inverse in the truncated ring; requires a nonzero
    /// constant term.
    pub fn invert(&self) -> Result<CohClass> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonInvertible);
        }
        let mut inv = vec![BigRational::zero(); self.m + 1];
        inv[0] = self.coeffs[0].recip();
        for k in 1..=self.m {
            let acc = inv[..k]
                .iter()
                .enumerate()
                .fold(BigRational::zero(), |acc, (j, g)| {
                    acc + g * &self.coeffs[k - j]
                });
            inv[k] = -(acc / &self.coeffs[0]);
        }
        Ok(CohClass {
            m: self.m,
            coeffs: inv,
        })
    }

    /// Pairing with the fundamental class of the base: the coefficient of
    /// h^m.
    pub fn integrate(&self) -> BigRational {
        self.coeffs[self.m].clone()
    }
}

fn base_dim(bundle: &BundleSum) -> Result<usize> {
    match bundle.base() {
        Base::Pm(m) => Ok(m as usize),
        Base::P1 => Err(Error::WrongBase {
            expected: "P^m".into(),
            got: "P^1".into(),
        }),
    }
}

/// Total Chern class of a twist sum: the product of 1 + a_i h.
pub fn total_chern(bundle: &BundleSum) -> Result<CohClass> {
    let m = base_dim(bundle)?;
    let mut acc = CohClass::one(m);
    for &a in bundle.twists() {
        let factor = CohClass::new(
            m,
            vec![BigRational::one(), BigRational::from_integer(a.into())],
        );
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// Total Chern class of the k-th exterior power, via the k-subset sums of
/// the twist roots.
pub fn chern_exterior(bundle: &BundleSum, k: usize) -> Result<CohClass> {
    total_chern(&bundle.exterior_power(k)?)
}

/// Coefficients of t/(1 - e^{-t}) up to t^order, from the Bernoulli
/// recurrence: coefficient of t^k is (-1)^k B_k / k!.
pub fn todd_series(order: usize) -> Vec<BigRational> {
    let bernoulli = bernoulli_numbers(order);
    let mut factorial = BigInt::one();
    (0..=order)
        .map(|k| {
            if k > 0 {
                factorial *= BigInt::from(k);
            }
            let value = &bernoulli[k] / BigRational::from_integer(factorial.clone());
            if k % 2 == 0 {
                value
            } else {
                -value
            }
        })
        .collect()
}

fn bernoulli_numbers(order: usize) -> Vec<BigRational> {
    // B_0 = 1, sum_{j<=n} C(n+1, j) B_j = 0 for n >= 1 (so B_1 = -1/2)
    let mut bernoulli = vec![BigRational::one()];
    for n in 1..=order {
        let mut acc = BigRational::zero();
        for (j, b) in bernoulli.iter().enumerate() {
            acc = &acc + &(BigRational::from_integer(binomial(n + 1, j)) * b);
        }
        bernoulli.push(-acc / BigRational::from_integer(BigInt::from(n as u64 + 1)));
    }
    bernoulli
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut value = BigInt::one();
    for i in 0..k {
        value = value * BigInt::from((n - i) as u64) / BigInt::from(i as u64 + 1);
    }
    value
}

/// Todd class of a twist sum: the product over the twists of the Todd
/// series evaluated at a_i h.
pub fn todd(bundle: &BundleSum) -> Result<CohClass> {
    let m = base_dim(bundle)?;
    let series = todd_series(m);
    let mut acc = CohClass::one(m);
    for &a in bundle.twists() {
        let mut power = BigRational::one();
        let coeffs = series
            .iter()
            .map(|c| {
                let value = c * &power;
                power = &power * BigRational::from_integer(a.into());
                value
            })
            .collect();
        acc = acc.mul(&CohClass::new(m, coeffs));
    }
    Ok(acc)
}

/// Euler-sequence roots of the tangent sheaf of P^m: m + 1 twists of 1,
/// the trivial summand dropped.
pub fn tangent_bundle(m: u32) -> BundleSum {
    BundleSum::new(vec![1; m as usize + 1], Base::Pm(m))
}

/// Todd class of the tangent sheaf of P^m.
pub fn todd_tangent(m: u32) -> CohClass {
    todd(&tangent_bundle(m)).expect("tangent roots live on P^m")
}

/// The fundamental-class-shaped expression for a split structure sheaf,
/// evaluated formally on P^m: the alternating sum over k of the total
/// Chern classes of the exterior powers of the given bundle, capped with
/// the inverse Todd class of the tangent sheaf. This is a demonstration
/// of the shape of the formula on a projective-space stand-in, not a
/// class on any moduli space; in particular the Todd class used is that
/// of the stand-in base itself, and whatever Todd contribution a real
/// moduli space would carry is not modeled.
pub fn formal_fundamental_class(bundle: &BundleSum) -> Result<CohClass> {
    let m = base_dim(bundle)?;
    let mut graded = CohClass::zero(m);
    for k in 0..=bundle.rank() {
        let term = chern_exterior(bundle, k)?;
        graded = if k % 2 == 0 {
            graded.add(&term)
        } else {
            graded.sub(&term)
        };
    }
    Ok(graded.mul(&todd_tangent(m as u32).invert()?))
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "h")?;
                    } else {
                        write!(f, "h^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
