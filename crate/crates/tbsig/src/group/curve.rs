//! secp256k1 backend. Point and scalar arithmetic is delegated to the `k256`
//! crate, which gives constant-time exponentiation; this module pins the
//! canonical encodings (33-byte compressed points, 32-byte big-endian
//! scalars) that the challenge framing and wire formats depend on.

use k256::elliptic_curve::ops::Reduce;
use k256::elliptic_curve::sec1::{FromEncodedPoint, ToEncodedPoint};
use k256::elliptic_curve::PrimeField;
use k256::{EncodedPoint, ProjectivePoint, Scalar, U256};
use rand::RngCore;

use super::{Group, GroupError};

/// Prime-order group of secp256k1 points (cofactor 1, so every on-curve
/// point is in the subgroup).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CurveGroup;

/// The identity has no 33-byte SEC1 form, so it is encoded as 33 zero bytes.
/// The first byte 0x00 cannot collide with the 0x02/0x03 compressed tags.
const IDENTITY_ENCODING: [u8; 33] = [0u8; 33];

impl Group for CurveGroup {
    type Scalar = Scalar;
    type Element = ProjectivePoint;

    fn backend_name(&self) -> &'static str {
        "curve"
    }

    fn generator(&self) -> ProjectivePoint {
        ProjectivePoint::GENERATOR
    }

    fn identity(&self) -> ProjectivePoint {
        ProjectivePoint::IDENTITY
    }

    fn exp(&self, base: &ProjectivePoint, exponent: &Scalar) -> ProjectivePoint {
        base * exponent
    }

    fn mul(&self, a: &ProjectivePoint, b: &ProjectivePoint) -> ProjectivePoint {
        a + b
    }

    fn scalar_zero(&self) -> Scalar {
        Scalar::ZERO
    }

    fn scalar_from_u64(&self, value: u64) -> Scalar {
        Scalar::from(value)
    }

    fn scalar_add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }

    fn scalar_sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a - b
    }

    fn scalar_mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }

    fn scalar_neg(&self, a: &Scalar) -> Scalar {
        -*a
    }

    fn scalar_invert(&self, a: &Scalar) -> Result<Scalar, GroupError> {
        Option::<Scalar>::from(a.invert())
            .ok_or(GroupError::InvalidInput("zero has no inverse"))
    }

    fn scalar_random(&self, rng: &mut dyn RngCore) -> Scalar {
        // Rejection sampling on 256-bit draws: from_repr only accepts
        // canonical (< q) encodings.
        loop {
            let mut bytes = [0u8; 32];
            rng.fill_bytes(&mut bytes);
            if let Some(scalar) = Option::<Scalar>::from(Scalar::from_repr(bytes.into())) {
                return scalar;
            }
        }
    }

    fn scalar_from_digest(&self, digest: &[u8; 32]) -> Scalar {
        <Scalar as Reduce<U256>>::reduce(U256::from_be_slice(digest))
    }

    fn element_bytes(&self, e: &ProjectivePoint) -> Vec<u8> {
        if self.is_identity(e) {
            return IDENTITY_ENCODING.to_vec();
        }
        e.to_encoded_point(true).as_bytes().to_vec()
    }

    fn element_from_bytes(&self, bytes: &[u8]) -> Result<ProjectivePoint, GroupError> {
        if bytes.len() != 33 {
            return Err(GroupError::InvalidEncoding("curve point must be 33 bytes"));
        }
        if bytes == IDENTITY_ENCODING {
            return Ok(ProjectivePoint::IDENTITY);
        }
        let encoded = EncodedPoint::from_bytes(bytes)
            .map_err(|_| GroupError::InvalidEncoding("not a SEC1 compressed point"))?;
        Option::<ProjectivePoint>::from(ProjectivePoint::from_encoded_point(&encoded))
            .ok_or(GroupError::InvalidEncoding("point not on the curve"))
    }

    fn element_len(&self) -> usize {
        33
    }

    fn scalar_bytes(&self, s: &Scalar) -> Vec<u8> {
        s.to_bytes().to_vec()
    }

    fn scalar_from_bytes(&self, bytes: &[u8]) -> Result<Scalar, GroupError> {
        let arr: [u8; 32] = bytes
            .try_into()
            .map_err(|_| GroupError::InvalidEncoding("curve scalar must be 32 bytes"))?;
        Option::<Scalar>::from(Scalar::from_repr(arr.into()))
            .ok_or(GroupError::InvalidEncoding("scalar not reduced mod q"))
    }

    fn scalar_len(&self) -> usize {
        32
    }
}
