//! Schnorr group over a small safe prime, sized so the whole key space can be
//! enumerated and discrete logs recovered by exhaustive search.

use rand::RngCore;

use super::{Group, GroupError};

/// Multiplicative subgroup of order `q` inside `Z_p^*`, with `p = 2q + 1`.
///
/// The default instance (p = 23, q = 11, g = 2) is small enough that tests can
/// sweep every key, message height, and challenge value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToyGroup {
    modulus: u64,
    order: u64,
    generator: u64,
}

/// Residue mod q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ToyScalar(u64);

/// Residue mod p, restricted to the order-q subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ToyElement(u64);

impl ToyScalar {
    pub fn value(self) -> u64 {
        self.0
    }
}

impl ToyElement {
    pub fn residue(self) -> u64 {
        self.0
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, modulus);
        }
        base = mulmod(base, base, modulus);
        exp >>= 1;
    }
    acc
}

fn mulmod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

impl Default for ToyGroup {
    fn default() -> Self {
        ToyGroup::new(23, 11, 2).expect("default parameters are valid")
    }
}

impl ToyGroup {
    /// Builds a toy group, checking that `p` and `q` are prime, `p = 2q + 1`,
    /// and `g` generates the order-`q` subgroup.
    pub fn new(modulus: u64, order: u64, generator: u64) -> Result<Self, GroupError> {
        if !is_prime(modulus) || !is_prime(order) {
            return Err(GroupError::InvalidInput("p and q must be prime"));
        }
        if modulus != 2 * order + 1 {
            return Err(GroupError::InvalidInput("p must equal 2q + 1"));
        }
        if generator <= 1 || generator >= modulus {
            return Err(GroupError::InvalidInput("generator out of range"));
        }
        if mod_pow(generator, order, modulus) != 1 {
            return Err(GroupError::InvalidInput("generator does not have order q"));
        }
        Ok(ToyGroup {
            modulus,
            order,
            generator,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// All scalars `0..q`, for exhaustive sweeps.
    pub fn scalars(&self) -> impl Iterator<Item = ToyScalar> {
        (0..self.order).map(ToyScalar)
    }

    /// All subgroup elements `g^0 .. g^(q-1)`.
    pub fn elements(&self) -> impl Iterator<Item = ToyElement> + '_ {
        (0..self.order).map(|e| ToyElement(mod_pow(self.generator, e, self.modulus)))
    }

    fn in_subgroup(&self, residue: u64) -> bool {
        residue >= 1 && residue < self.modulus && mod_pow(residue, self.order, self.modulus) == 1
    }

    /// Recovers `x` with `g^x = y` by exhaustive search over `[0, q)`.
    pub fn dlog_bruteforce(&self, y: &ToyElement) -> Result<ToyScalar, GroupError> {
        let mut acc = 1u64;
        for x in 0..self.order {
            if acc == y.0 {
                return Ok(ToyScalar(x));
            }
            acc = mulmod(acc, self.generator, self.modulus);
        }
        Err(GroupError::NotFound)
    }
}

impl Group for ToyGroup {
    type Scalar = ToyScalar;
    type Element = ToyElement;

    fn backend_name(&self) -> &'static str {
        "toy"
    }

    fn generator(&self) -> ToyElement {
        ToyElement(self.generator)
    }

    fn identity(&self) -> ToyElement {
        ToyElement(1)
    }

    fn exp(&self, base: &ToyElement, exponent: &ToyScalar) -> ToyElement {
        ToyElement(mod_pow(base.0, exponent.0, self.modulus))
    }

    fn mul(&self, a: &ToyElement, b: &ToyElement) -> ToyElement {
        ToyElement(mulmod(a.0, b.0, self.modulus))
    }

    fn scalar_zero(&self) -> ToyScalar {
        ToyScalar(0)
    }

    fn scalar_from_u64(&self, value: u64) -> ToyScalar {
        ToyScalar(value % self.order)
    }

    fn scalar_add(&self, a: &ToyScalar, b: &ToyScalar) -> ToyScalar {
        ToyScalar((a.0 + b.0) % self.order)
    }

    fn scalar_sub(&self, a: &ToyScalar, b: &ToyScalar) -> ToyScalar {
        ToyScalar((a.0 + self.order - b.0) % self.order)
    }

    fn scalar_mul(&self, a: &ToyScalar, b: &ToyScalar) -> ToyScalar {
        ToyScalar(mulmod(a.0, b.0, self.order))
    }

    fn scalar_neg(&self, a: &ToyScalar) -> ToyScalar {
        ToyScalar((self.order - a.0) % self.order)
    }

    fn scalar_invert(&self, a: &ToyScalar) -> Result<ToyScalar, GroupError> {
        if a.0 == 0 {
            return Err(GroupError::InvalidInput("zero has no inverse"));
        }
        // q is prime, so a^(q-2) = a^-1.
        Ok(ToyScalar(mod_pow(a.0, self.order - 2, self.order)))
    }

    fn scalar_random(&self, rng: &mut dyn RngCore) -> ToyScalar {
        let bits = 64 - (self.order - 1).leading_zeros();
        let mask = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
        loop {
            let draw = rng.next_u64() & mask;
            if draw < self.order {
                return ToyScalar(draw);
            }
        }
    }

    fn scalar_from_digest(&self, digest: &[u8; 32]) -> ToyScalar {
        let mut acc: u64 = 0;
        for byte in digest {
            acc = ((acc as u128 * 256 + *byte as u128) % self.order as u128) as u64;
        }
        ToyScalar(acc)
    }

    fn element_bytes(&self, e: &ToyElement) -> Vec<u8> {
        e.0.to_be_bytes().to_vec()
    }

    fn element_from_bytes(&self, bytes: &[u8]) -> Result<ToyElement, GroupError> {
        let arr: [u8; 8] = bytes
            .try_into()
            .map_err(|_| GroupError::InvalidEncoding("toy element must be 8 bytes"))?;
        let residue = u64::from_be_bytes(arr);
        if !self.in_subgroup(residue) {
            return Err(GroupError::InvalidEncoding("residue outside the subgroup"));
        }
        Ok(ToyElement(residue))
    }

    fn element_len(&self) -> usize {
        8
    }

    fn scalar_bytes(&self, s: &ToyScalar) -> Vec<u8> {
        s.0.to_be_bytes().to_vec()
    }

    fn scalar_from_bytes(&self, bytes: &[u8]) -> Result<ToyScalar, GroupError> {
        let arr: [u8; 8] = bytes
            .try_into()
            .map_err(|_| GroupError::InvalidEncoding("toy scalar must be 8 bytes"))?;
        let value = u64::from_be_bytes(arr);
        if value >= self.order {
            return Err(GroupError::InvalidEncoding("scalar not reduced mod q"));
        }
        Ok(ToyScalar(value))
    }

    fn scalar_len(&self) -> usize {
        8
    }
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    use super::*;

    #[test]
    fn default_parameters_validate() {
        let g = ToyGroup::default();
        assert_eq!(g.modulus(), 23);
        assert_eq!(g.order(), 11);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(ToyGroup::new(22, 11, 2).is_err());
        assert!(ToyGroup::new(23, 11, 5).is_err()); // 5 is a non-residue mod 23, order 22 not 11
        assert!(ToyGroup::new(23, 7, 2).is_err());
    }

    #[test]
    fn exp_matches_hand_computation() {
        let g = ToyGroup::default();
        let base = g.generator();
        assert_eq!(g.exp(&base, &g.scalar_from_u64(0)), g.identity());
        assert_eq!(g.exp(&base, &g.scalar_from_u64(3)).residue(), 8);
        assert_eq!(g.exp(&base, &g.scalar_from_u64(11)).residue(), 1);
    }

    #[test]
    fn scalar_field_ops() {
        let g = ToyGroup::default();
        assert_eq!(g.scalar_add(&g.scalar_from_u64(10), &g.scalar_from_u64(5)), g.scalar_from_u64(4));
        // 3 * 4 = 12 = 1 mod 11
        let inv = g.scalar_invert(&g.scalar_from_u64(3)).unwrap();
        assert_eq!(inv, g.scalar_from_u64(4));
        assert_eq!(g.scalar_invert(&g.scalar_zero()), Err(GroupError::InvalidInput("zero has no inverse")));
        for a in g.scalars() {
            if a.value() == 0 {
                continue;
            }
            let inv = g.scalar_invert(&a).unwrap();
            assert_eq!(g.scalar_mul(&a, &inv), g.scalar_from_u64(1));
        }
    }

    #[test]
    fn homomorphism_exhaustive() {
        let g = ToyGroup::default();
        let gen = g.generator();
        for a in g.scalars() {
            for b in g.scalars() {
                let lhs = g.exp(&gen, &g.scalar_add(&a, &b));
                let rhs = g.mul(&g.exp(&gen, &a), &g.exp(&gen, &b));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn mul_identity_law() {
        let g = ToyGroup::default();
        for x in g.elements() {
            assert_eq!(g.mul(&x, &g.identity()), x);
        }
    }

    #[test]
    fn serialization_roundtrip_exhaustive() {
        let g = ToyGroup::default();
        for x in g.elements() {
            let bytes = g.element_bytes(&x);
            assert_eq!(bytes.len(), g.element_len());
            assert_eq!(g.element_from_bytes(&bytes).unwrap(), x);
        }
        for s in g.scalars() {
            assert_eq!(g.scalar_from_bytes(&g.scalar_bytes(&s)).unwrap(), s);
        }
    }

    #[test]
    fn element_decode_rejects_non_subgroup() {
        let g = ToyGroup::default();
        // 5 is not a quadratic residue mod 23, so it lies outside the order-11 subgroup.
        assert!(g.element_from_bytes(&5u64.to_be_bytes()).is_err());
        assert!(g.element_from_bytes(&0u64.to_be_bytes()).is_err());
        assert!(g.element_from_bytes(&23u64.to_be_bytes()).is_err());
        assert!(g.element_from_bytes(&[0u8; 4]).is_err());
    }

    #[test]
    fn dlog_bruteforce_inverts_exp() {
        let g = ToyGroup::default();
        assert_eq!(g.dlog_bruteforce(&g.identity()).unwrap().value(), 0);
        let eight = g.element_from_bytes(&8u64.to_be_bytes()).unwrap();
        assert_eq!(g.dlog_bruteforce(&eight).unwrap().value(), 3);
        for s in g.scalars() {
            let y = g.exp(&g.generator(), &s);
            assert_eq!(g.dlog_bruteforce(&y).unwrap(), s);
        }
    }

    #[test]
    fn scalar_random_is_deterministic_and_in_range() {
        let g = ToyGroup::default();
        let mut a = ChaCha20Rng::seed_from_u64(1);
        let mut b = ChaCha20Rng::seed_from_u64(1);
        for _ in 0..64 {
            let x = g.scalar_random(&mut a);
            assert_eq!(x, g.scalar_random(&mut b));
            assert!(x.value() < g.order());
        }
    }

    #[test]
    fn scalar_random_uniform_within_5_sigma() {
        let g = ToyGroup::default();
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        let n = 10_000usize;
        let mut counts = [0u32; 11];
        for _ in 0..n {
            counts[g.scalar_random(&mut rng).value() as usize] += 1;
        }
        let p = 1.0 / 11.0;
        let mean = n as f64 * p;
        let sigma = (n as f64 * p * (1.0 - p)).sqrt();
        for (residue, count) in counts.iter().enumerate() {
            let dev = (*count as f64 - mean).abs();
            assert!(
                dev <= 5.0 * sigma,
                "residue {residue} occurred {count} times, {dev:.1} from mean {mean:.1}"
            );
        }
    }

    #[test]
    fn scalar_from_digest_reduces_big_endian() {
        let g = ToyGroup::default();
        let mut digest = [0u8; 32];
        digest[31] = 25; // 25 mod 11 = 3
        assert_eq!(g.scalar_from_digest(&digest), g.scalar_from_u64(3));
        digest = [0xff; 32];
        let expected = {
            let mut acc: u64 = 0;
            for _ in 0..32 {
                acc = (acc * 256 + 0xff) % 11;
            }
            acc
        };
        assert_eq!(g.scalar_from_digest(&digest).value(), expected);
    }
}
