//! Validates the challenge construction against the frozen vectors in
//! `tests/vectors/challenge_vectors.json`, which were produced with an
//! independent SHA-256 / secp256k1 implementation.

use serde::Deserialize;
use sha2::{Digest, Sha256};
use tbsig::challenge::{challenge_preimage, compute_challenge, ChallengeVariant};
use tbsig::group::{CurveGroup, Group, ToyGroup};

#[derive(Deserialize)]
struct VectorFile {
    vectors: Vec<Vector>,
}

#[derive(Deserialize)]
struct Vector {
    name: String,
    backend: String,
    commitment: String,
    public_key: String,
    message: String,
    variant: String,
    expiry_height: Option<u64>,
    flag: Option<u8>,
    preimage: String,
    digest: String,
    challenge: String,
}

fn check_vector<G: Group>(group: &G, v: &Vector) {
    let commitment = group
        .element_from_bytes(&hex::decode(&v.commitment).unwrap())
        .unwrap_or_else(|e| panic!("{}: bad commitment: {e}", v.name));
    let public_key = group
        .element_from_bytes(&hex::decode(&v.public_key).unwrap())
        .unwrap();
    let message = hex::decode(&v.message).unwrap();
    let variant = match v.variant.as_str() {
        "vanilla" => ChallengeVariant::Vanilla,
        "timebound" => ChallengeVariant::TimeBound {
            expiry_height: v.expiry_height.unwrap(),
            time_ok: v.flag.unwrap() == 1,
        },
        other => panic!("unknown variant {other}"),
    };

    let preimage = challenge_preimage(group, &commitment, &public_key, &message, variant);
    assert_eq!(hex::encode(&preimage), v.preimage, "{}: preimage mismatch", v.name);

    let digest: [u8; 32] = Sha256::digest(&preimage).into();
    assert_eq!(hex::encode(digest), v.digest, "{}: digest mismatch", v.name);

    // The vectors store challenges as decimal strings (up to 256 bits);
    // fold the digits into a 32-byte big-endian integer.
    let expected = {
        let mut acc = [0u8; 32];
        for ch in v.challenge.bytes() {
            assert!(ch.is_ascii_digit());
            let mut carry = (ch - b'0') as u32;
            for byte in acc.iter_mut().rev() {
                let val = *byte as u32 * 10 + carry;
                *byte = (val & 0xff) as u8;
                carry = val >> 8;
            }
            assert_eq!(carry, 0, "challenge does not fit 256 bits");
        }
        acc
    };
    let got = compute_challenge(group, &commitment, &public_key, &message, variant);
    let mut got_bytes = [0u8; 32];
    let raw = group.scalar_bytes(&got);
    got_bytes[32 - raw.len()..].copy_from_slice(&raw);
    assert_eq!(got_bytes, expected, "{}: reduced challenge mismatch", v.name);
}

#[test]
fn frozen_vectors_match() {
    let file: VectorFile = serde_json::from_str(include_str!("vectors/challenge_vectors.json")).unwrap();
    assert!(file.vectors.len() >= 8);
    let toy = ToyGroup::default();
    let curve = CurveGroup;
    for v in &file.vectors {
        match v.backend.as_str() {
            "toy" => check_vector(&toy, v),
            "curve" => check_vector(&curve, v),
            other => panic!("unknown backend {other}"),
        }
    }
}
