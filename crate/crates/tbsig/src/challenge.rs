//! Fiat–Shamir challenge construction shared by the vanilla and time-bound
//! schemes: `c = SHA-256(tag ‖ ser(R) ‖ ser(Y) ‖ len(m) ‖ m [‖ t_e ‖ flag])`
//! reduced mod q.
//!
//! The framing is prefix-free: domain tags are distinct ASCII strings, the
//! message carries an 8-byte big-endian length prefix, and the expiry height
//! and time-check flag are fixed-width (8 bytes and 1 byte), so no two
//! distinct input tuples serialize identically. The byte layout is frozen by
//! the test vectors in `tests/vectors/challenge_vectors.json`.

use sha2::{Digest, Sha256};

use crate::group::Group;

pub const VANILLA_TAG: &[u8] = b"TBSIG/v1/vanilla";
pub const TIME_BOUND_TAG: &[u8] = b"TBSIG/v1/timebound";

/// Which scheme the challenge is for, plus the time fields for the
/// time-bound variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChallengeVariant {
    Vanilla,
    TimeBound {
        expiry_height: u64,
        /// Output of the time-check function at the verifier's height.
        /// Signers always set this to 1.
        time_ok: bool,
    },
}

/// Serializes the challenge input tuple into the canonical preimage bytes.
///
/// The harness keys its programmable oracle on these bytes, so the encoding
/// is the single definition of "the same oracle point" across the crate.
pub fn challenge_preimage<G: Group>(
    group: &G,
    commitment: &G::Element,
    public_key: &G::Element,
    message: &[u8],
    variant: ChallengeVariant,
) -> Vec<u8> {
    let tag = match variant {
        ChallengeVariant::Vanilla => VANILLA_TAG,
        ChallengeVariant::TimeBound { .. } => TIME_BOUND_TAG,
    };
    let mut out = Vec::with_capacity(tag.len() + 2 * group.element_len() + 17 + message.len());
    out.extend_from_slice(tag);
    out.extend_from_slice(&group.element_bytes(commitment));
    out.extend_from_slice(&group.element_bytes(public_key));
    out.extend_from_slice(&(message.len() as u64).to_be_bytes());
    out.extend_from_slice(message);
    if let ChallengeVariant::TimeBound {
        expiry_height,
        time_ok,
    } = variant
    {
        out.extend_from_slice(&expiry_height.to_be_bytes());
        out.push(time_ok as u8);
    }
    out
}

/// Hashes the preimage with SHA-256 and reduces the digest mod q.
pub fn compute_challenge<G: Group>(
    group: &G,
    commitment: &G::Element,
    public_key: &G::Element,
    message: &[u8],
    variant: ChallengeVariant,
) -> G::Scalar {
    let preimage = challenge_preimage(group, commitment, public_key, message, variant);
    let digest: [u8; 32] = Sha256::digest(&preimage).into();
    group.scalar_from_digest(&digest)
}
