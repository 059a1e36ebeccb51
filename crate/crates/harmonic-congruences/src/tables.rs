//! Per-prime precomputation: inverse tables, harmonic prefix tables mod p²,
//! geometric weight tables and Bernoulli residues mod p. With a built
//! [`PrimeContext`] every congruence case evaluates in O(p) ring operations.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::residue::{batch_inverses, Modulus, Residue};

/// Immutable per-prime tables shared by all case evaluators.
pub struct PrimeContext {
    mod2: Modulus,
    mod1: Modulus,
    /// k⁻¹ mod p² for k = 1..p-1; index 0 is a zero placeholder.
    inv: Vec<Residue>,
    /// order m -> (H_{k,m} mod p² for k = 0..p-1)
    harmonic: BTreeMap<u32, Vec<Residue>>,
    /// 2^{-k} mod p² for k = 0..p-1
    pow_half: Vec<Residue>,
    /// B_j mod p for j = 0..p-3; odd entries are 0
    bern: Vec<Residue>,
}

impl PrimeContext {
    /// Builds all tables for prime `p` with harmonic tables for the given
    /// orders. Total cost is O(p·(|orders| + 1)) ring operations plus the
    /// O(p²) Bernoulli recurrence.
    pub fn build(p: u64, orders: &BTreeSet<u32>) -> Result<PrimeContext> {
        let mod2 = Modulus::new(p, 2)?;
        let mod1 = Modulus::new(p, 1)?;
        let inv = batch_inverses(mod2);

        let mut harmonic = BTreeMap::new();
        for &m in orders {
            assert!(m >= 1, "harmonic order must be >= 1");
            let mut table = Vec::with_capacity(p as usize);
            table.push(mod2.zero());
            for k in 1..p as usize {
                let step = inv[k].pow(m as u64);
                table.push(table[k - 1] + step);
            }
            harmonic.insert(m, table);
        }

        let half = mod2.residue(2).inverse().expect("2 is a unit for p > 3");
        let mut pow_half = Vec::with_capacity(p as usize);
        pow_half.push(mod2.one());
        for k in 1..p as usize {
            pow_half.push(pow_half[k - 1] * half);
        }

        let bern = bernoulli_mod_p(p)?;

        Ok(PrimeContext { mod2, mod1, inv, harmonic, pow_half, bern })
    }

    pub fn p(&self) -> u64 {
        self.mod2.p()
    }

    pub fn mod2(&self) -> Modulus {
        self.mod2
    }

    pub fn mod1(&self) -> Modulus {
        self.mod1
    }

    /// k⁻¹ mod p² for 1 <= k <= p-1.
    pub fn inv(&self, k: usize) -> Residue {
        debug_assert!(k >= 1 && k < self.p() as usize);
        self.inv[k]
    }

    /// The order-m harmonic table, or MissingOrder if it was not requested
    /// at build time.
    pub fn harmonic_table(&self, m: u32) -> Result<&[Residue]> {
        self.harmonic
            .get(&m)
            .map(|v| v.as_slice())
            .ok_or(Error::MissingOrder(m))
    }

    /// 2^{-k} mod p².
    pub fn pow_half(&self, k: usize) -> Residue {
        self.pow_half[k]
    }

    /// (-1)^k mod p².
    pub fn neg_pow(&self, k: usize) -> Residue {
        if k % 2 == 0 {
            self.mod2.one()
        } else {
            -self.mod2.one()
        }
    }

    /// B_j mod p for 0 <= j <= p-3 (odd entries are 0).
    pub fn bernoulli(&self, j: usize) -> Residue {
        self.bern[j]
    }
}

/// Bernoulli residues B_j mod p for j = 0..p-3, computed by the defining
/// recurrence carried out entirely in Z/pZ. Valid for j <= p-3 because the
/// von Staudt-Clausen denominators there are coprime to p. Odd entries
/// beyond B_1 vanish; index 1 holds -1/2 mod p.
pub fn bernoulli_mod_p(p: u64) -> Result<Vec<Residue>> {
    let md = Modulus::new(p, 1)?;
    let cap = (p - 3) as usize;
    let mut bern = Vec::with_capacity(cap + 1);
    bern.push(md.one());
    // row[j] = C(m+1, j) mod p, updated incrementally per m
    let mut row = vec![md.zero(); cap + 2];
    row[0] = md.one();
    row[1] = md.one();
    for m in 1..=cap {
        // advance Pascal row from C(m, ·) to C(m+1, ·)
        for j in (1..=m + 1).rev() {
            row[j] = row[j] + row[j - 1];
        }
        let mut acc = md.zero();
        for j in 0..m {
            acc += row[j] * bern[j];
        }
        let bm = -(acc * row[m].inverse().expect("C(m+1, m) = m+1 < p is a unit"));
        bern.push(bm);
    }
    Ok(bern)
}
