//! Exact rational arithmetic: binomial coefficients, Bernoulli numbers,
//! generalized harmonic numbers and Faulhaber power sums.
//!
//! Everything here is computed in arbitrary precision and serves as the
//! independent oracle against which the fast residue pipeline is checked.
//! All values are immutable after construction and safe to share across
//! threads.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Binomial coefficient C(n, k) as an exact integer.
///
/// Out-of-range k (negative or larger than n) yields 0, so sums like
/// `sum C(n-1, k-1)` can run over their natural index range without
/// special-casing vanishing terms.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        // exact at every step: the running value is C(n-k+i, i)
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// The integer s(n) = C(6n+1, 2n-1) + n.
///
/// First values: s(1) = 8, s(2) = 288, s(3) = 11631, s(4) = 480704.
pub fn s_coefficient(n: u64) -> BigInt {
    assert!(n >= 1, "s_coefficient requires n >= 1");
    binomial(6 * n + 1, (2 * n - 1) as i64) + BigInt::from(n)
}

/// Generalized harmonic number H_{n,m} = sum_{0 < k <= n} 1/k^m.
///
/// H_{0,m} = 0 and m = 1 gives the ordinary harmonic number H_n.
pub fn harmonic_exact(n: u64, m: u32) -> BigRational {
    assert!(m >= 1, "harmonic order m must be >= 1");
    let mut acc = BigRational::zero();
    for k in 1..=n {
        acc += BigRational::new(BigInt::one(), BigInt::from(k).pow(m));
    }
    acc
}

/// Bernoulli numbers B_0..B_cap as exact rationals, with B_1 = -1/2.
#[derive(Debug, Clone)]
pub struct BernoulliSeq {
    values: Vec<BigRational>,
}

impl BernoulliSeq {
    /// Largest index held.
    pub fn cap(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, j: usize) -> &BigRational {
        &self.values[j]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

/// Bernoulli numbers via the defining recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0 solved for B_m, starting from B_0 = 1.
pub fn bernoulli_exact(cap: usize) -> BernoulliSeq {
    let mut values: Vec<BigRational> = Vec::with_capacity(cap + 1);
    values.push(BigRational::one());
    for m in 1..=cap {
        let mut acc = BigRational::zero();
        for (j, bj) in values.iter().enumerate() {
            acc += BigRational::from_integer(binomial(m as u64 + 1, j as i64)) * bj;
        }
        let bm = -acc / BigRational::from_integer(BigInt::from(m as u64 + 1));
        values.push(bm);
    }
    BernoulliSeq { values }
}

/// Power sum sum_{j=0}^{k-1} j^n via the Bernoulli polynomial expansion
/// (1/(n+1)) sum_{j=0}^{n} C(n+1, j) B_j k^{n+1-j}.
pub fn faulhaber_sum(k: u64, n: u32, bern: &BernoulliSeq) -> BigRational {
    assert!(k >= 1, "faulhaber_sum requires k >= 1");
    assert!(
        bern.cap() >= n as usize,
        "Bernoulli cap {} insufficient for exponent {}",
        bern.cap(),
        n
    );
    let big_k = BigInt::from(k);
    let mut acc = BigRational::zero();
    for j in 0..=n {
        let term = BigRational::from_integer(binomial(n as u64 + 1, j as i64))
            * bern.value(j as usize)
            * BigRational::from_integer(big_k.pow(n + 1 - j));
        acc += term;
    }
    acc / BigRational::from_integer(BigInt::from(n + 1))
}

/// Outcome of evaluating both sides of an exact identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Hockey-stick identity: sum_{n=1}^{m} C(n-1, k-1) = C(m, k),
/// evaluated exactly on both sides.
pub fn identity_hockey_stick(m: u64, k: u64) -> IdentityCheck {
    assert!(m >= 1 && k >= 1);
    let mut lhs = BigInt::zero();
    for n in 1..=m {
        lhs += binomial(n - 1, k as i64 - 1);
    }
    IdentityCheck {
        lhs: BigRational::from_integer(lhs),
        rhs: BigRational::from_integer(binomial(m, k as i64)),
    }
}

/// Alternating binomial-harmonic identity:
/// sum_{k=1}^{n} C(n,k) ((-1)^{k-1} / k) H_k = H_{n,2}.
pub fn identity_binomial_harmonic(n: u64) -> IdentityCheck {
    assert!(n >= 1);
    let mut lhs = BigRational::zero();
    let mut h = BigRational::zero();
    for k in 1..=n {
        h += BigRational::new(BigInt::one(), BigInt::from(k));
        let sign = if k % 2 == 1 { 1 } else { -1 };
        lhs += BigRational::new(BigInt::from(sign), BigInt::from(k))
            * BigRational::from_integer(binomial(n, k as i64))
            * &h;
    }
    IdentityCheck {
        lhs,
        rhs: harmonic_exact(n, 2),
    }
}

/// Squarefree product of the primes q with (q-1) | 2k — the denominator
/// of B_{2k} asserted by the von Staudt-Clausen theorem.
pub fn von_staudt_clausen_denominator(two_k: u64) -> BigInt {
    assert!(two_k >= 2 && two_k % 2 == 0);
    let mut den = BigInt::one();
    for q in 2..=(two_k + 1) {
        if crate::residue::is_prime(q) && two_k % (q - 1) == 0 {
            den *= BigInt::from(q);
        }
    }
    den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(7, 0), BigInt::from(1));
        assert_eq!(binomial(13, 3), BigInt::from(286));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
    }

    #[test]
    fn binomial_matches_pascal_recurrence() {
        for n in 1..40u64 {
            for k in 0..=n as i64 {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "Pascal mismatch at ({n}, {k})"
                );
            }
        }
    }

    #[test]
    fn s_coefficient_initial_values() {
        assert_eq!(s_coefficient(1), BigInt::from(8));
        assert_eq!(s_coefficient(2), BigInt::from(288));
        assert_eq!(s_coefficient(3), BigInt::from(11631));
        assert_eq!(s_coefficient(4), BigInt::from(480704));
    }

    #[test]
    #[should_panic]
    fn s_coefficient_rejects_zero() {
        s_coefficient(0);
    }

    #[test]
    fn harmonic_base_values() {
        assert_eq!(harmonic_exact(0, 1), BigRational::zero());
        assert_eq!(harmonic_exact(4, 1), rat(25, 12));
        assert_eq!(harmonic_exact(4, 2), rat(205, 144));
        assert_eq!(harmonic_exact(6, 2), rat(5369, 3600));
    }

    #[test]
    #[should_panic]
    fn harmonic_rejects_order_zero() {
        harmonic_exact(3, 0);
    }

    #[test]
    fn harmonic_recurrence() {
        for m in 1..=4u32 {
            let mut prev = BigRational::zero();
            for n in 1..=100u64 {
                let cur = harmonic_exact(n, m);
                let step = &cur - &prev;
                assert_eq!(step, BigRational::new(BigInt::one(), BigInt::from(n).pow(m)));
                prev = cur;
            }
        }
    }

    #[test]
    fn bernoulli_base_and_recurrence_values() {
        let b = bernoulli_exact(12);
        assert_eq!(*b.value(0), BigRational::one());
        assert_eq!(*b.value(1), rat(-1, 2));
        assert_eq!(*b.value(2), rat(1, 6));
        assert_eq!(*b.value(3), BigRational::zero());
        assert_eq!(*b.value(4), rat(-1, 30));
        assert_eq!(*b.value(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_invariants_to_60() {
        let b = bernoulli_exact(60);
        // odd indices >= 3 vanish
        for j in (3..=59).step_by(2) {
            assert!(b.value(j).is_zero(), "B_{j} should vanish");
        }
        // defining recurrence restated as a checkable identity
        for m in 1..=59u64 {
            let mut acc = BigRational::zero();
            for j in 0..=m {
                acc += BigRational::from_integer(binomial(m + 1, j as i64)) * b.value(j as usize);
            }
            assert!(acc.is_zero(), "recurrence fails at m = {m}");
        }
        // von Staudt-Clausen: denominator of B_{2k} is the squarefree
        // product of primes q with (q-1) | 2k
        for k in 1..=30u64 {
            let den = b.value(2 * k as usize).denom().clone();
            assert_eq!(den, von_staudt_clausen_denominator(2 * k), "VSC at 2k = {}", 2 * k);
        }
    }

    #[test]
    fn bernoulli_12_denominator_factors() {
        // 2730 = 2 * 3 * 5 * 7 * 13
        let b = bernoulli_exact(12);
        assert_eq!(*b.value(12).denom(), BigInt::from(2730));
    }

    #[test]
    fn faulhaber_small_values() {
        let b = bernoulli_exact(12);
        assert_eq!(faulhaber_sum(5, 0, &b), BigRational::from_integer(BigInt::from(5)));
        assert_eq!(faulhaber_sum(4, 2, &b), BigRational::from_integer(BigInt::from(14)));
        assert_eq!(faulhaber_sum(10, 3, &b), BigRational::from_integer(BigInt::from(2025)));
    }

    #[test]
    fn faulhaber_matches_direct_summation() {
        let b = bernoulli_exact(12);
        for k in 1..=50u64 {
            for n in 0..=12u32 {
                let direct: BigInt = (0..k).map(|j| BigInt::from(j).pow(n)).sum();
                assert_eq!(
                    faulhaber_sum(k, n, &b),
                    BigRational::from_integer(direct),
                    "mismatch at k={k}, n={n}"
                );
            }
        }
    }

    #[test]
    #[should_panic]
    fn faulhaber_rejects_insufficient_cap() {
        let b = bernoulli_exact(3);
        faulhaber_sum(10, 5, &b);
    }

    #[test]
    fn hockey_stick_examples() {
        let c = identity_hockey_stick(4, 2);
        assert!(c.holds());
        assert_eq!(c.lhs, BigRational::from_integer(BigInt::from(6)));
        assert!(identity_hockey_stick(1, 1).holds());
        let vanish = identity_hockey_stick(3, 5);
        assert!(vanish.holds());
        assert!(vanish.lhs.is_zero());
    }

    #[test]
    fn binomial_harmonic_examples() {
        let c1 = identity_binomial_harmonic(1);
        assert!(c1.holds());
        assert_eq!(c1.lhs, BigRational::one());
        let c2 = identity_binomial_harmonic(2);
        assert!(c2.holds());
        assert_eq!(c2.lhs, rat(5, 4));
        let c6 = identity_binomial_harmonic(6);
        assert!(c6.holds());
        assert_eq!(c6.rhs, rat(5369, 3600));
    }

    #[test]
    fn identities_hold_to_60() {
        for m in 1..=60u64 {
            for k in 1..=m {
                assert!(identity_hockey_stick(m, k).holds(), "hockey stick ({m}, {k})");
            }
        }
        for n in 1..=60u64 {
            assert!(identity_binomial_harmonic(n).holds(), "binomial-harmonic {n}");
        }
    }
}
