//! Exact computation with periodic infinite friezes and their growth
//! coefficients.
//!
//! The crate is organized around a small commutative-ring abstraction with an
//! exact-division probe ([`ring::Ring`]), carried by arbitrary-precision
//! integers and by sparse multivariate Laurent polynomials over the integers.
//! On top of it sit:
//!
//! * [`frieze`] — r-periodic infinite friezes generated from a quiddity row,
//!   growth coefficients, and the Chebyshev three-term recursion;
//! * [`universal`] — the universal frieze over `Z[z_j]`: continuants, their
//!   matching-based monomial expansions, and symbolic growth coefficients;
//! * [`cluster`] — coefficient-free cluster algebra seeds and mutation,
//!   d-vectors, exchange-graph search, tube friezes, the theta element
//!   `X_delta` and its powers, and the identity checks tying tube friezes to
//!   a common growth coefficient.

pub mod cluster;
pub mod frieze;
pub mod laurent;
pub mod monomial;
pub mod ring;
pub mod universal;

pub use frieze::{Frieze, GrowthSequence, Quiddity};
pub use laurent::{LaurentPolynomial, LaurentRing};
pub use monomial::Monomial;
pub use ring::{Int, IntegerRing, Ring, RingError};
