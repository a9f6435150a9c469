//! Prime-order cyclic group abstraction with two backends: secp256k1 for
//! realistic key material and a tiny Schnorr group (p = 2q + 1) whose discrete
//! logs are brute-forceable, used to verify security properties exhaustively.

use std::fmt::Debug;

use rand::RngCore;
use thiserror::Error;

mod curve;
mod toy;

pub use curve::CurveGroup;
pub use toy::{ToyElement, ToyGroup, ToyScalar};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    /// Scalar inversion of zero or other domain violation.
    #[error("invalid input: {0}")]
    InvalidInput(&'static str),
    /// Byte string does not decode to a group element or scalar.
    #[error("invalid encoding: {0}")]
    InvalidEncoding(&'static str),
    /// Exhaustive search found no discrete log (element outside the subgroup).
    #[error("discrete log not found")]
    NotFound,
}

/// Operations of a prime-order cyclic group and its scalar field.
///
/// All methods are pure given their inputs; implementations hold no RNG state,
/// so a single instance may be shared freely across threads. Element and
/// scalar encodings are canonical and fixed-width per backend, which the
/// challenge construction relies on for injective framing.
pub trait Group: Clone + Send + Sync {
    type Scalar: Clone + PartialEq + Eq + Debug + Send + Sync;
    type Element: Clone + PartialEq + Eq + Debug + Send + Sync;

    /// Short stable name used in config files and key files.
    fn backend_name(&self) -> &'static str;

    fn generator(&self) -> Self::Element;
    fn identity(&self) -> Self::Element;
    fn is_identity(&self, e: &Self::Element) -> bool {
        *e == self.identity()
    }

    /// Group exponentiation `base^exponent`. Constant-time on the curve
    /// backend; the toy backend makes no timing claims.
    fn exp(&self, base: &Self::Element, exponent: &Self::Scalar) -> Self::Element;

    /// Group law `a * b`.
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn scalar_zero(&self) -> Self::Scalar;
    fn scalar_from_u64(&self, value: u64) -> Self::Scalar;
    fn scalar_add(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn scalar_sub(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn scalar_mul(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn scalar_neg(&self, a: &Self::Scalar) -> Self::Scalar;

    /// Multiplicative inverse mod q. Zero has none.
    fn scalar_invert(&self, a: &Self::Scalar) -> Result<Self::Scalar, GroupError>;

    /// Uniform scalar in `[0, q)` by rejection sampling from ceil(log2 q)-bit
    /// draws, so no modulo bias enters the forking-lemma statistics.
    fn scalar_random(&self, rng: &mut dyn RngCore) -> Self::Scalar;

    /// Interprets a 32-byte digest as a big-endian integer reduced mod q.
    fn scalar_from_digest(&self, digest: &[u8; 32]) -> Self::Scalar;

    /// Canonical fixed-width element encoding (33 bytes compressed SEC1 on
    /// the curve backend, 8-byte big-endian residue on the toy backend).
    fn element_bytes(&self, e: &Self::Element) -> Vec<u8>;
    fn element_from_bytes(&self, bytes: &[u8]) -> Result<Self::Element, GroupError>;
    fn element_len(&self) -> usize;

    /// Canonical fixed-width big-endian scalar encoding (32 / 8 bytes).
    fn scalar_bytes(&self, s: &Self::Scalar) -> Vec<u8>;
    fn scalar_from_bytes(&self, bytes: &[u8]) -> Result<Self::Scalar, GroupError>;
    fn scalar_len(&self) -> usize;
}
