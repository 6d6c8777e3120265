//! The commutative-ring contract shared by every carrier in this crate.
//!
//! All higher-level algorithms (frieze generation, continuants, cluster
//! mutation) are generic over [`Ring`]. The contract is deliberately small:
//! ring operations, equality through `PartialEq` on elements, and a *partial*
//! exact division. `exact_div` either returns the unique `q` with `q * b == a`
//! or reports that no such element exists; it never rounds.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision signed integer, the base scalar everywhere.
pub type Int = BigInt;

/// Convenience constructor for [`Int`] values in tests and fixtures.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Errors raised by partial ring operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("exponent vector of length {got}, expected {expected}")]
    BadExponentLength { got: usize, expected: usize },
    #[error("specialization failed: {0}")]
    Specialization(String),
}

/// A commutative ring with identity and an exact-division probe.
///
/// The ring value itself carries ambient context (for Laurent polynomials,
/// the variable count and print names), so operations take `&self`.
pub trait Ring: Clone + Debug {
    type Element: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn neg(&self, a: &Self::Element) -> Self::Element;
    fn is_zero(&self, a: &Self::Element) -> bool;

    /// Exact division: the unique `q` with `q * b == a`, if it exists.
    fn exact_div(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element, RingError>;

    /// The element `1 + 1`, used as the seed of growth sequences.
    fn two(&self) -> Self::Element {
        self.add(&self.one(), &self.one())
    }

    fn from_int(&self, v: &Int) -> Self::Element;

    /// Render an element using the ring's ambient print context.
    fn format(&self, a: &Self::Element) -> String;
}

/// The ring of arbitrary-precision integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Element = Int;

    fn zero(&self) -> Int {
        Int::zero()
    }

    fn one(&self) -> Int {
        Int::one()
    }

    fn add(&self, a: &Int, b: &Int) -> Int {
        a + b
    }

    fn sub(&self, a: &Int, b: &Int) -> Int {
        a - b
    }

    fn mul(&self, a: &Int, b: &Int) -> Int {
        a * b
    }

    fn neg(&self, a: &Int) -> Int {
        -a
    }

    fn is_zero(&self, a: &Int) -> bool {
        a.is_zero()
    }

    fn exact_div(&self, a: &Int, b: &Int) -> Result<Int, RingError> {
        if b.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let (q, r) = num_integer::Integer::div_rem(a, b);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(RingError::NotDivisible)
        }
    }

    fn from_int(&self, v: &Int) -> Int {
        v.clone()
    }

    fn format(&self, a: &Int) -> String {
        a.to_string()
    }
}

/// True when `a` is strictly positive. Used by the CLI positivity validator.
pub fn int_is_positive(a: &Int) -> bool {
    a.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_exact_div() {
        let z = IntegerRing;
        assert_eq!(z.exact_div(&int(15), &int(5)), Ok(int(3)));
        assert_eq!(z.exact_div(&int(-15), &int(5)), Ok(int(-3)));
        assert_eq!(z.exact_div(&int(7), &int(2)), Err(RingError::NotDivisible));
        assert_eq!(z.exact_div(&int(7), &int(0)), Err(RingError::DivisionByZero));
        assert_eq!(z.exact_div(&int(0), &int(3)), Ok(int(0)));
    }

    #[test]
    fn two_is_one_plus_one() {
        let z = IntegerRing;
        assert_eq!(z.two(), int(2));
    }
}
