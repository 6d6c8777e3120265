//! Exponent vectors for sparse Laurent monomials.

use std::cmp::Ordering;

/// A Laurent monomial: one signed exponent per ambient variable.
///
/// Ordered graded-lexicographically (total degree first, then lexicographic
/// on the exponent vector). This is the canonical term order fixed for all
/// serialized output.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The monomial `x_idx` (0-based index).
    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of monomials: componentwise sum of exponents.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Quotient of monomials: componentwise difference. Always defined for
    /// Laurent exponents.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| -e).collect())
    }

    /// True when every exponent is nonnegative (an ordinary monomial).
    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Componentwise minimum with another exponent vector.
    pub fn min_with(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let a = Monomial(vec![1, 1, 1]); // deg 3
        let b = Monomial(vec![2, 0, 0]); // deg 2
        let c = Monomial(vec![0, 1, 1]); // deg 2
        assert!(a > b);
        assert!(b > c); // same degree, lex on exponents
        assert!(Monomial(vec![1, 0, 0]) > Monomial(vec![0, 1, 0]));
    }

    #[test]
    fn negative_exponents_ordered_by_degree_first() {
        let a = Monomial(vec![-1, 0]); // deg -1
        let b = Monomial(vec![0, 0]); // deg 0
        assert!(b > a);
    }
}
