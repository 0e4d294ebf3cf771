//! Parity-preserving algebra homomorphisms and tensor products of ring specs.

use std::collections::BTreeMap;

use super::poly::Parity;
use super::{ensure_same_ring, Generator, Ring, RingSpec, SuperPolynomial};
use crate::error::{Error, Result};

/// The unique algebra map extending a choice of generator images. Images
/// must preserve parity: even generators map to homogeneous even elements,
/// odd generators to homogeneous odd ones.
#[derive(Debug, Clone)]
pub struct RingHom {
    source: Ring,
    target: Ring,
    even_images: Vec<SuperPolynomial>,
    odd_images: Vec<SuperPolynomial>,
}

impl RingHom {
    pub fn new(
        source: &Ring,
        target: &Ring,
        images: &BTreeMap<String, SuperPolynomial>,
    ) -> Result<Self> {
        let mut even_images = Vec::with_capacity(source.num_even());
        let mut odd_images = Vec::with_capacity(source.num_odd());
        for name in source.even_vars() {
            let img = lookup(images, name, target)?;
            if !img.is_homogeneous(Parity::Even) {
                return Err(Error::ParityViolation {
                    generator: name.clone(),
                    expected: "even".into(),
                });
            }
            even_images.push(img);
        }
        for name in source.odd_vars() {
            let img = lookup(images, name, target)?;
            if !img.is_homogeneous(Parity::Odd) {
                return Err(Error::ParityViolation {
                    generator: name.clone(),
                    expected: "odd".into(),
                });
            }
            odd_images.push(img);
        }
        Ok(RingHom {
            source: source.clone(),
            target: target.clone(),
            even_images,
            odd_images,
        })
    }

    /// The identity map of a ring.
    pub fn identity(ring: &Ring) -> Self {
        let images = ring
            .even_vars()
            .iter()
            .chain(ring.odd_vars())
            .map(|name| {
                (
                    name.clone(),
                    SuperPolynomial::variable(ring, name).expect("generator exists"),
                )
            })
            .collect();
        Self::new(ring, ring, &images).expect("identity preserves parity")
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn image_of(&self, gen: Generator) -> &SuperPolynomial {
        match gen {
            Generator::Even(i) => &self.even_images[i],
            Generator::Odd(i) => &self.odd_images[i],
        }
    }

    /// Apply the map to an element of the source ring.
    pub fn apply(&self, p: &SuperPolynomial) -> Result<SuperPolynomial> {
        ensure_same_ring(p.ring(), &self.source)?;
        let mut acc = SuperPolynomial::zero(&self.target);
        for (mono, coeff) in p.terms() {
            let mut term = SuperPolynomial::constant(&self.target, coeff.clone());
            for (i, &e) in mono.even_exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&self.even_images[i].pow(e)?)?;
                }
            }
            // Odd factors are substituted in ascending source order; the
            // target multiplication supplies any reordering signs.
            for i in mono.odd_indices() {
                term = term.mul(&self.odd_images[i])?;
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Composite map `other . self` (apply `self` first).
    pub fn then(&self, other: &RingHom) -> Result<RingHom> {
        ensure_same_ring(&self.target, &other.source)?;
        let mut even_images = Vec::with_capacity(self.even_images.len());
        for img in &self.even_images {
            even_images.push(other.apply(img)?);
        }
        let mut odd_images = Vec::with_capacity(self.odd_images.len());
        for img in &self.odd_images {
            odd_images.push(other.apply(img)?);
        }
        Ok(RingHom {
            source: self.source.clone(),
            target: other.target.clone(),
            even_images,
            odd_images,
        })
    }

    /// The induced map on even subrings, sending each even generator to
    /// the truncation of its image. For a bosonic target this is the
    /// factorization of `self` through the truncation of its source.
    pub fn bosonic(&self) -> Result<RingHom> {
        let source = self.source.bosonic();
        let target = self.target.bosonic();
        let images = source
            .even_vars()
            .iter()
            .enumerate()
            .map(|(i, name)| (name.clone(), self.even_images[i].tau_b()))
            .collect();
        RingHom::new(&source, &target, &images)
    }
}

fn lookup(
    images: &BTreeMap<String, SuperPolynomial>,
    name: &str,
    target: &Ring,
) -> Result<SuperPolynomial> {
    let img = images
        .get(name)
        .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
    ensure_same_ring(img.ring(), target)?;
    Ok(img.clone())
}

/// How a variable was renamed while forming a tensor product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorRename {
    /// 1 for the left factor, 2 for the right.
    pub factor: u8,
    pub from: String,
    pub to: String,
}

/// Tensor product of free rings over the ground field: concatenated
/// variable lists. Colliding names are renamed deterministically by
/// suffixing the factor ordinal; the renames are reported back.
pub fn tensor(a: &Ring, b: &Ring) -> (Ring, Vec<TensorRename>) {
    let mut renames = Vec::new();
    let taken: std::collections::BTreeSet<&String> = a
        .even_vars()
        .iter()
        .chain(a.odd_vars())
        .chain(b.even_vars())
        .chain(b.odd_vars())
        .collect();
    let mut rename = |factor: u8, name: &String, used: &mut Vec<String>| -> String {
        let collides = match factor {
            1 => b.even_vars().contains(name) || b.odd_vars().contains(name),
            _ => a.even_vars().contains(name) || a.odd_vars().contains(name),
        };
        if !collides {
            used.push(name.clone());
            return name.clone();
        }
        let mut candidate = format!("{name}_{factor}");
        while taken.contains(&candidate) || used.contains(&candidate) {
            candidate = format!("{candidate}_{factor}");
        }
        renames.push(TensorRename {
            factor,
            from: name.clone(),
            to: candidate.clone(),
        });
        used.push(candidate.clone());
        candidate
    };

    let mut used = Vec::new();
    let mut even = Vec::new();
    for name in a.even_vars() {
        even.push(rename(1, name, &mut used));
    }
    for name in b.even_vars() {
        even.push(rename(2, name, &mut used));
    }
    let mut odd = Vec::new();
    for name in a.odd_vars() {
        odd.push(rename(1, name, &mut used));
    }
    for name in b.odd_vars() {
        odd.push(rename(2, name, &mut used));
    }
    let ring = RingSpec::new(even, odd).expect("renaming keeps names distinct");
    (ring, renames)
}

impl SuperPolynomial {
    /// Substitute generator images, i.e. apply the unique algebra map they
    /// determine. Convenience wrapper around [`RingHom`].
    pub fn hom_apply(
        &self,
        target: &Ring,
        images: &BTreeMap<String, SuperPolynomial>,
    ) -> Result<SuperPolynomial> {
        RingHom::new(self.ring(), target, images)?.apply(self)
    }
}
