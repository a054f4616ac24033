//! Arithmetic in prime fields GF(p): primality, modular powers and
//! quadratic residues. Enough to build Paley graphs, nothing more.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Field arithmetic multiplies two residues in `u64`, so moduli stay below 2^31.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Witness set for Miller–Rabin. Testing against the first twelve primes is
/// exact for every n < 3.3 * 10^24, which covers all of `u64`.
const MILLER_RABIN_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for any `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MILLER_RABIN_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }

    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MILLER_RABIN_BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// An odd prime p < 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 {
            return Err(Error::ModulusTooSmall(p, 3));
        }
        if p >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Whether -1 is a square, i.e. p = 1 (mod 4).
    pub fn minus_one_is_square(self) -> bool {
        self.0 % 4 == 1
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `base^exp mod p`. `base` is reduced first, so any value is accepted.
pub fn mod_pow(base: u64, exp: u64, m: PrimeModulus) -> u64 {
    let p = m.get();
    let mut acc = 1;
    let mut base = base % p;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Euler's criterion: a nonzero `a` is a square iff a^((p-1)/2) = 1.
pub fn is_quadratic_residue(a: u64, m: PrimeModulus) -> Result<bool> {
    let a = a % m.get();
    if a == 0 {
        return Err(Error::ZeroResidue);
    }
    Ok(mod_pow(a, (m.get() - 1) / 2, m) == 1)
}

/// The nonzero squares modulo p.
pub fn residue_set(m: PrimeModulus) -> BTreeSet<u64> {
    let p = m.get();
    // x and p - x square to the same value
    (1..=(p - 1) / 2).map(|x| x * x % p).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    fn squares_by_brute_force(p: u64) -> BTreeSet<u64> {
        (1..p).map(|x| x * x % p).collect()
    }

    fn modulus(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn small_primes() {
        assert!(is_prime(13));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(is_prime(2));
        assert!(!is_prime(561));
        assert!(!trial_division(561));
    }

    #[test]
    fn agrees_with_trial_division() {
        for n in 0..20_000 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_and_large_values() {
        // strong pseudoprimes to several small bases
        for n in [2047, 1_373_653, 25_326_001, 3_215_031_751, 3_825_123_056_546_413_051] {
            assert!(!is_prime(n), "{n}");
        }
        assert!(is_prime((1 << 31) - 1));
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(u64::MAX));
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(((1 << 31) - 1) * ((1 << 31) - 1)));
    }

    #[test]
    fn modulus_validation() {
        assert_eq!(PrimeModulus::new(2), Err(Error::ModulusTooSmall(2, 3)));
        assert_eq!(PrimeModulus::new(9), Err(Error::NotPrime(9)));
        assert_eq!(
            PrimeModulus::new(2_147_483_659),
            Err(Error::ModulusTooLarge(2_147_483_659))
        );
        assert_eq!(modulus(2_147_483_647).get(), 2_147_483_647);
    }

    #[test]
    fn mod_pow_examples() {
        let m = modulus(13);
        assert_eq!(mod_pow(2, 12, m), 1);
        assert_eq!(mod_pow(4, 1, m), 4);
        let repeated = (0..6).fold(1, |acc, _| acc * 3 % 13);
        assert_eq!(repeated, 1);
        assert_eq!(mod_pow(3, 6, m), repeated);
        assert_eq!(mod_pow(5, 0, m), 1);
    }

    #[test]
    fn mod_pow_near_limit_does_not_overflow() {
        let m = modulus(2_147_483_647);
        let a = 2_147_483_646;
        assert_eq!(mod_pow(a, 2, m), 1);
        assert_eq!(mod_pow(a, m.get() - 1, m), 1);
    }

    #[test]
    fn residue_examples() {
        let m = modulus(13);
        assert!(is_quadratic_residue(1, m).unwrap());
        assert!(!is_quadratic_residue(2, m).unwrap());
        assert!(is_quadratic_residue(3, m).unwrap());
        assert_eq!(is_quadratic_residue(0, m), Err(Error::ZeroResidue));
        assert_eq!(is_quadratic_residue(13, m), Err(Error::ZeroResidue));

        let r13: Vec<u64> = residue_set(m).into_iter().collect();
        assert_eq!(r13, vec![1, 3, 4, 9, 10, 12]);
        assert_eq!(residue_set(modulus(5)).into_iter().collect::<Vec<_>>(), vec![1, 4]);
        assert_eq!(residue_set(modulus(3)).into_iter().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn euler_criterion_matches_brute_force_below_200() {
        for p in (3..200).filter(|&p| trial_division(p)) {
            let m = modulus(p);
            let oracle = squares_by_brute_force(p);
            let set = residue_set(m);
            assert_eq!(set, oracle, "p = {p}");
            assert_eq!(set.len() as u64, (p - 1) / 2);
            for a in 1..p {
                assert_eq!(is_quadratic_residue(a, m).unwrap(), oracle.contains(&a));
                assert_eq!(mod_pow(a, p - 1, m), 1);
            }
            if m.minus_one_is_square() {
                for &a in &set {
                    assert!(set.contains(&(p - a)));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn fermat_little_theorem(idx in 0usize..500, a in 1u64..u64::MAX) {
            let p = (3..).filter(|&n| is_prime(n)).nth(idx).unwrap();
            let m = modulus(p);
            let a = a % p;
            prop_assume!(a != 0);
            prop_assert_eq!(mod_pow(a, p - 1, m), 1);
        }
    }
}
