//! Canonical residue arithmetic in Z/pZ and Z/p²Z.
//!
//! A [`Modulus`] pins down an odd prime p > 3 together with the exponent
//! (1 or 2); a [`Residue`] is the least nonnegative representative of a
//! class mod p^exponent. Mixing residues from different moduli is a
//! programming error and panics immediately rather than coercing.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Deterministic Miller-Rabin valid for every u64 input.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        e >>= 1;
    }
    acc
}

/// Primes in the inclusive range [lo, hi] by a segmented sieve; the engine
/// never trusts callers to supply primes.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || hi < lo {
        return Vec::new();
    }
    let root = (hi as f64).sqrt() as u64 + 1;
    let mut base_is_comp = vec![false; (root + 1) as usize];
    let mut base = Vec::new();
    for n in 2..=root {
        if !base_is_comp[n as usize] {
            base.push(n);
            let mut j = n * n;
            while j <= root {
                base_is_comp[j as usize] = true;
                j += n;
            }
        }
    }
    let lo = lo.max(2);
    let mut seg = vec![true; (hi - lo + 1) as usize];
    for &q in &base {
        // first multiple of q in range, never q itself
        let mut j = q.max(lo.div_ceil(q)) * q;
        while j <= hi {
            if j >= lo {
                seg[(j - lo) as usize] = false;
            }
            j += q;
        }
    }
    (lo..=hi).filter(|&n| seg[(n - lo) as usize]).collect()
}

/// An odd prime p > 3 together with its power p or p².
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct Modulus {
    p: u64,
    exponent: u8,
    m: u64,
}

impl Modulus {
    /// Validates primality and range; `exponent` must be 1 or 2.
    pub fn new(p: u64, exponent: u8) -> Result<Modulus> {
        if exponent != 1 && exponent != 2 {
            return Err(Error::BadExponent(exponent));
        }
        if p <= 3 {
            return Err(Error::PrimeTooSmall(p));
        }
        if p >= 1 << 31 {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let m = if exponent == 1 { p } else { p * p };
        Ok(Modulus { p, exponent, m })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u8 {
        self.exponent
    }

    /// The modulus value M = p^exponent.
    pub fn value(&self) -> u64 {
        self.m
    }

    /// The exponent-1 view of the same prime.
    pub fn prime_view(&self) -> Modulus {
        Modulus { p: self.p, exponent: 1, m: self.p }
    }

    /// Canonical residue of an unsigned integer.
    pub fn residue(&self, v: u64) -> Residue {
        Residue { value: v % self.m, modulus: *self }
    }

    /// Canonical residue of a signed integer.
    pub fn residue_signed(&self, v: i64) -> Residue {
        let r = v.rem_euclid(self.m as i64) as u64;
        Residue { value: r, modulus: *self }
    }

    pub fn zero(&self) -> Residue {
        self.residue(0)
    }

    pub fn one(&self) -> Residue {
        self.residue(1)
    }
}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Modulus({}^{})", self.p, self.exponent)
    }
}

/// Canonical element of Z/MZ for M = p or p².
#[derive(Copy, Clone, PartialEq, Eq)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Modular inverse by extended Euclid.
    pub fn inverse(&self) -> Result<Residue> {
        if self.value % self.modulus.p == 0 {
            return Err(Error::NotInvertible { value: self.value, modulus: self.modulus.m });
        }
        let m = self.modulus.m as i128;
        let (mut t, mut t1) = (0i128, 1i128);
        let (mut r, mut r1) = (m, self.value as i128);
        while r1 != 0 {
            let q = r / r1;
            (t, t1) = (t1, t - q * t1);
            (r, r1) = (r1, r - q * r1);
        }
        debug_assert_eq!(r, 1);
        Ok(self.modulus.residue(t.rem_euclid(m) as u64))
    }

    /// Binary exponentiation; e = 0 yields 1.
    pub fn pow(&self, mut e: u64) -> Residue {
        let m = self.modulus.m as u128;
        let mut base = self.value as u128;
        let mut acc = 1u128 % m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        self.modulus.residue(acc as u64)
    }

    /// Reduction from Z/p²Z to Z/pZ (identity on exponent-1 residues).
    pub fn reduce_to_prime(&self) -> Residue {
        let m = self.modulus.prime_view();
        m.residue(self.value)
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus.m)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn check_same_modulus(a: &Residue, b: &Residue) {
    assert_eq!(a.modulus, b.modulus, "mixed-modulus residue arithmetic");
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        check_same_modulus(&self, &rhs);
        let mut v = self.value + rhs.value;
        if v >= self.modulus.m {
            v -= self.modulus.m;
        }
        Residue { value: v, modulus: self.modulus }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        check_same_modulus(&self, &rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.modulus.m - rhs.value
        };
        Residue { value: v, modulus: self.modulus }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        check_same_modulus(&self, &rhs);
        let v = (self.value as u128 * rhs.value as u128 % self.modulus.m as u128) as u64;
        Residue { value: v, modulus: self.modulus }
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        if self.value == 0 {
            self
        } else {
            Residue { value: self.modulus.m - self.value, modulus: self.modulus }
        }
    }
}

impl AddAssign for Residue {
    fn add_assign(&mut self, rhs: Residue) {
        *self = *self + rhs;
    }
}

impl SubAssign for Residue {
    fn sub_assign(&mut self, rhs: Residue) {
        *self = *self - rhs;
    }
}

impl MulAssign for Residue {
    fn mul_assign(&mut self, rhs: Residue) {
        *self = *self * rhs;
    }
}

/// Canonical residue of an arbitrary-precision integer.
pub fn reduce_bigint(z: &BigInt, modulus: Modulus) -> Residue {
    let m = BigInt::from(modulus.value());
    let r = z.mod_floor(&m);
    let (_, digits) = r.to_u64_digits();
    modulus.residue(if digits.is_empty() { 0 } else { digits[0] })
}

/// Ring homomorphism from p-integral rationals onto Z/MZ:
/// num · den⁻¹ mod M. Fails when p divides the denominator, which
/// signals a congruence that is not p-integrally meaningful.
pub fn reduce_rational(q: &BigRational, modulus: Modulus) -> Result<Residue> {
    let den = reduce_bigint(q.denom(), modulus);
    if den.value % modulus.p == 0 {
        return Err(Error::PDividesDenominator { p: modulus.p, value: q.to_string() });
    }
    let num = reduce_bigint(q.numer(), modulus);
    Ok(num * den.inverse().expect("denominator checked coprime"))
}

/// All inverses 1..p-1 with O(p) multiplications and one extended-Euclid
/// call via the prefix-product trick. Index 0 of the returned table is a
/// zero placeholder; index k holds k⁻¹ mod M.
pub fn batch_inverses(modulus: Modulus) -> Vec<Residue> {
    let p = modulus.p() as usize;
    // prefix[k] = 1 * 2 * ... * k
    let mut prefix = Vec::with_capacity(p);
    prefix.push(modulus.one());
    for k in 1..p {
        let prev = *prefix.last().unwrap();
        prefix.push(prev * modulus.residue(k as u64));
    }
    let mut table = vec![modulus.zero(); p];
    // running = (1 * 2 * ... * k)^{-1}, walked down from k = p-1
    let mut running = prefix[p - 1].inverse().expect("factorial of units is a unit");
    for k in (1..p).rev() {
        table[k] = running * prefix[k - 1];
        running = running * modulus.residue(k as u64);
    }
    table
}
