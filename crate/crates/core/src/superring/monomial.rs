//! Monomials with squarefree odd part and the Koszul sign of products.

use std::cmp::Ordering;

/// A monomial x^e * t_{i1}..t_{ik} with i1 < .. < ik. The odd part is a
/// bitset (bit i = odd variable i), which makes the squarefree invariant
/// structural: t_i^2 cannot be represented.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    even: Vec<u32>,
    odd: u64,
}

impl Monomial {
    /// The unit monomial of a ring with `m` even variables.
    pub fn one(num_even: usize) -> Self {
        Monomial {
            even: vec![0; num_even],
            odd: 0,
        }
    }

    pub fn new(even: Vec<u32>, odd_indices: &[usize]) -> Self {
        let mut odd = 0u64;
        for &i in odd_indices {
            debug_assert!(i < 64);
            odd |= 1 << i;
        }
        Monomial { even, odd }
    }

    pub(crate) fn from_bits(even: Vec<u32>, odd: u64) -> Self {
        Monomial { even, odd }
    }

    pub fn even_exponents(&self) -> &[u32] {
        &self.even
    }

    pub fn odd_bits(&self) -> u64 {
        self.odd
    }

    /// Odd variable indices, ascending.
    pub fn odd_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(move |i| self.odd & (1 << i) != 0)
    }

    /// Total degree: even exponents plus one per odd factor.
    pub fn total_degree(&self) -> usize {
        self.even.iter().map(|&e| e as usize).sum::<usize>() + self.odd.count_ones() as usize
    }

    /// Parity of the monomial: even iff the odd part has even size.
    pub fn is_even(&self) -> bool {
        self.odd.count_ones().is_multiple_of(2)
    }

    /// Product with the Koszul sign, or `None` when an odd factor repeats.
    pub fn mul(&self, other: &Monomial) -> Option<(Monomial, i8)> {
        debug_assert_eq!(self.even.len(), other.even.len());
        if self.odd & other.odd != 0 {
            return None;
        }
        let even = self
            .even
            .iter()
            .zip(&other.even)
            .map(|(a, b)| a + b)
            .collect();
        // Sign of the permutation sorting (self.odd asc, other.odd asc)
        // into one ascending list: one transposition per pair i > j with
        // i in self, j in other.
        let mut inversions = 0u32;
        let mut rhs = other.odd;
        while rhs != 0 {
            let j = rhs.trailing_zeros();
            rhs &= rhs - 1;
            if j < 63 {
                inversions += (self.odd >> (j + 1)).count_ones();
            }
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((
            Monomial {
                even,
                odd: self.odd | other.odd,
            },
            sign,
        ))
    }

    /// Erase the odd part (used by the bosonic truncation).
    pub fn even_part_only(&self) -> Monomial {
        Monomial {
            even: self.even.clone(),
            odd: 0,
        }
    }
}

// Graded lexicographic order, even variables before odd: compare total
// degree, then the even exponent vector, then the odd part as a 0/1
// exponent vector (earlier variable with a factor wins).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.even.cmp(&other.even))
            .then_with(|| {
                if self.odd == other.odd {
                    Ordering::Equal
                } else {
                    let first_diff = (self.odd ^ other.odd).trailing_zeros();
                    if self.odd & (1 << first_diff) != 0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    }
                }
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
