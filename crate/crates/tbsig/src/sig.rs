//! Key generation plus the vanilla and time-bound Schnorr schemes.
//!
//! The time-bound variant appends an expiry block height `t_e` to the
//! signature tuple and feeds both `t_e` and the time-check bit into the
//! challenge. Verifiers recompute the bit from their own view of the chain
//! height, never from the wire, which is what makes expiry self-enforcing:
//! once the height passes `t_e` the recomputed challenge no longer matches
//! the one the signer committed to.

use rand::RngCore;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::challenge::{compute_challenge, ChallengeVariant};
use crate::group::Group;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SignError {
    /// Signing demands a strictly-future expiry so the transaction has at
    /// least one block of life.
    #[error("expiry height {expiry_height} is not after current height {current_height}")]
    ExpiryNotInFuture {
        current_height: u64,
        expiry_height: u64,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecodeError {
    #[error("signature wire format has wrong length (got {got}, want {want})")]
    Length { got: usize, want: usize },
    #[error("bad commitment encoding")]
    Commitment,
    #[error("bad response encoding")]
    Response,
}

/// Time check function: 1 while the chain has not passed the expiry height.
pub fn time_check(current_height: u64, expiry_height: u64) -> bool {
    current_height <= expiry_height
}

/// Schnorr keypair `(s, Y = g^s)`.
#[derive(Debug, Clone)]
pub struct KeyPair<G: Group> {
    secret: G::Scalar,
    public: G::Element,
}

impl<G: Group> KeyPair<G> {
    pub fn generate(group: &G, rng: &mut dyn RngCore) -> Self {
        Self::from_secret(group, group.scalar_random(rng))
    }

    /// Builds the pair from a known secret. Also the test hook for forcing
    /// specific keys in worked examples.
    pub fn from_secret(group: &G, secret: G::Scalar) -> Self {
        let public = group.exp(&group.generator(), &secret);
        KeyPair { secret, public }
    }

    pub fn secret(&self) -> &G::Scalar {
        &self.secret
    }

    pub fn public(&self) -> &G::Element {
        &self.public
    }
}

/// Vanilla Schnorr signature `(R, z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanillaSignature<G: Group> {
    pub commitment: G::Element,
    pub response: G::Scalar,
}

/// Time-bound signature `(R, z, t_e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeBoundSignature<G: Group> {
    pub commitment: G::Element,
    pub response: G::Scalar,
    pub expiry_height: u64,
}

/// Hex debug form of a time-bound signature, for CLI output and logs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignatureDebug {
    #[serde(rename = "R")]
    pub commitment: String,
    pub z: String,
    pub t_e: u64,
}

fn sample_nonce<G: Group>(group: &G, rng: &mut dyn RngCore) -> (G::Scalar, G::Element) {
    // Resample k = 0: an identity commitment is rejected by verifiers.
    loop {
        let k = group.scalar_random(rng);
        let commitment = group.exp(&group.generator(), &k);
        if !group.is_identity(&commitment) {
            return (k, commitment);
        }
    }
}

/// Response `z = k + s*c mod q`.
fn response<G: Group>(group: &G, nonce: &G::Scalar, secret: &G::Scalar, c: &G::Scalar) -> G::Scalar {
    group.scalar_add(nonce, &group.scalar_mul(secret, c))
}

/// Recomputes `R' = g^z * Y^(-c)` and accepts iff it matches a non-identity
/// commitment.
fn commitment_matches<G: Group>(
    group: &G,
    public: &G::Element,
    commitment: &G::Element,
    response: &G::Scalar,
    c: &G::Scalar,
) -> bool {
    if group.is_identity(commitment) {
        return false;
    }
    let recomputed = group.mul(
        &group.exp(&group.generator(), response),
        &group.exp(public, &group.scalar_neg(c)),
    );
    recomputed == *commitment
}

pub fn schnorr_sign<G: Group>(
    group: &G,
    keypair: &KeyPair<G>,
    message: &[u8],
    rng: &mut dyn RngCore,
) -> VanillaSignature<G> {
    let (k, commitment) = sample_nonce(group, rng);
    let c = compute_challenge(group, &commitment, keypair.public(), message, ChallengeVariant::Vanilla);
    VanillaSignature {
        response: response(group, &k, keypair.secret(), &c),
        commitment,
    }
}

pub fn schnorr_verify<G: Group>(
    group: &G,
    public: &G::Element,
    message: &[u8],
    sig: &VanillaSignature<G>,
) -> bool {
    let c = compute_challenge(group, &sig.commitment, public, message, ChallengeVariant::Vanilla);
    commitment_matches(group, public, &sig.commitment, &sig.response, &c)
}

/// Signs `message` so the signature verifies only while the chain height is
/// at most `expiry_height`. The time-check flag is fixed to 1 here: a
/// signature minted with flag 0 could never verify, so the API forbids it.
pub fn tb_sign<G: Group>(
    group: &G,
    keypair: &KeyPair<G>,
    message: &[u8],
    current_height: u64,
    expiry_height: u64,
    rng: &mut dyn RngCore,
) -> Result<TimeBoundSignature<G>, SignError> {
    if current_height >= expiry_height {
        return Err(SignError::ExpiryNotInFuture {
            current_height,
            expiry_height,
        });
    }
    let (k, commitment) = sample_nonce(group, rng);
    let c = compute_challenge(
        group,
        &commitment,
        keypair.public(),
        message,
        ChallengeVariant::TimeBound {
            expiry_height,
            time_ok: true,
        },
    );
    Ok(TimeBoundSignature {
        response: response(group, &k, keypair.secret(), &c),
        commitment,
        expiry_height,
    })
}

/// Verifies at the given chain height. The flag entering the challenge is
/// recomputed from `current_height`, so an expired signature fails the
/// `R = R'` check rather than any explicit height comparison.
pub fn tb_verify<G: Group>(
    group: &G,
    public: &G::Element,
    message: &[u8],
    sig: &TimeBoundSignature<G>,
    current_height: u64,
) -> bool {
    let c = compute_challenge(
        group,
        &sig.commitment,
        public,
        message,
        ChallengeVariant::TimeBound {
            expiry_height: sig.expiry_height,
            time_ok: time_check(current_height, sig.expiry_height),
        },
    );
    commitment_matches(group, public, &sig.commitment, &sig.response, &c)
}

impl<G: Group> VanillaSignature<G> {
    /// `ser(R) ‖ ser(z)`.
    pub fn to_bytes(&self, group: &G) -> Vec<u8> {
        let mut out = group.element_bytes(&self.commitment);
        out.extend_from_slice(&group.scalar_bytes(&self.response));
        out
    }

    pub fn from_bytes(group: &G, bytes: &[u8]) -> Result<Self, DecodeError> {
        let want = group.element_len() + group.scalar_len();
        if bytes.len() != want {
            return Err(DecodeError::Length { got: bytes.len(), want });
        }
        let (elem, rest) = bytes.split_at(group.element_len());
        Ok(VanillaSignature {
            commitment: group.element_from_bytes(elem).map_err(|_| DecodeError::Commitment)?,
            response: group.scalar_from_bytes(rest).map_err(|_| DecodeError::Response)?,
        })
    }
}

impl<G: Group> TimeBoundSignature<G> {
    /// `ser(R) ‖ ser(z) ‖ 8-byte big-endian t_e`: exactly 8 bytes more than
    /// the vanilla form, so the variant is recognizable from size alone
    /// (73 bytes on the curve backend).
    pub fn to_bytes(&self, group: &G) -> Vec<u8> {
        let mut out = group.element_bytes(&self.commitment);
        out.extend_from_slice(&group.scalar_bytes(&self.response));
        out.extend_from_slice(&self.expiry_height.to_be_bytes());
        out
    }

    pub fn from_bytes(group: &G, bytes: &[u8]) -> Result<Self, DecodeError> {
        let want = group.element_len() + group.scalar_len() + 8;
        if bytes.len() != want {
            return Err(DecodeError::Length { got: bytes.len(), want });
        }
        let (elem, rest) = bytes.split_at(group.element_len());
        let (scalar, height) = rest.split_at(group.scalar_len());
        Ok(TimeBoundSignature {
            commitment: group.element_from_bytes(elem).map_err(|_| DecodeError::Commitment)?,
            response: group.scalar_from_bytes(scalar).map_err(|_| DecodeError::Response)?,
            expiry_height: u64::from_be_bytes(height.try_into().expect("split is 8 bytes")),
        })
    }

    pub fn debug_form(&self, group: &G) -> SignatureDebug {
        SignatureDebug {
            commitment: hex::encode(group.element_bytes(&self.commitment)),
            z: hex::encode(group.scalar_bytes(&self.response)),
            t_e: self.expiry_height,
        }
    }
}

/// Wire-level verification: any undecodable byte string is a rejection, not
/// an error.
pub fn tb_verify_bytes<G: Group>(
    group: &G,
    public: &G::Element,
    message: &[u8],
    sig_bytes: &[u8],
    current_height: u64,
) -> bool {
    match TimeBoundSignature::from_bytes(group, sig_bytes) {
        Ok(sig) => tb_verify(group, public, message, &sig, current_height),
        Err(_) => false,
    }
}
