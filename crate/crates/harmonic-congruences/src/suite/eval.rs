//! Fast O(p) evaluators for the sum shapes that appear on the left-hand
//! sides, and the Bernoulli-multiple builder for right-hand sides.
//!
//! All arithmetic runs in Z/p²Z; callers reduce to Z/pZ afterwards when a
//! case is stated mod p. Double and triple sums are folded into prefix
//! sums so no evaluator ever runs a nested loop.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::residue::{reduce_rational, Residue};
use crate::suite::registry::{CaseShapes, LhsShape, RhsShape};
use crate::tables::PrimeContext;

/// Per-term weight of a single sum over k.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Weight {
    One,
    /// (-1)^k
    AltSign,
    /// 2^{-k}
    HalfPow,
    /// 2^k
    TwoPow,
}

/// sum_k weight(k) · k^{k_power} · H_{k,order}^{exp} over the full range
/// 1..p-1 or the half range 1..(p-1)/2.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct SingleSumSpec {
    pub weight: Weight,
    /// Signed power of k in the term: -a means 1/k^a, +a means k^a.
    pub k_power: i32,
    /// Optional harmonic factor (order, exponent) with exponent 1 or 2.
    pub harmonic: Option<(u32, u32)>,
    pub half_range: bool,
}

impl SingleSumSpec {
    pub fn full(weight: Weight, k_power: i32, harmonic: Option<(u32, u32)>) -> Self {
        SingleSumSpec { weight, k_power, harmonic, half_range: false }
    }

    pub fn half(weight: Weight, k_power: i32) -> Self {
        SingleSumSpec { weight, k_power, harmonic: None, half_range: true }
    }
}

pub fn lhs_single_sum(ctx: &PrimeContext, spec: &SingleSumSpec) -> Result<Residue> {
    let p = ctx.p() as usize;
    let bound = if spec.half_range { (p - 1) / 2 } else { p - 1 };
    let mod2 = ctx.mod2();
    let harmonic = match spec.harmonic {
        Some((order, _)) => Some(ctx.harmonic_table(order)?),
        None => None,
    };
    let half = ctx.pow_half(1);
    let two = mod2.residue(2);
    let mut weight = mod2.one();
    let mut acc = mod2.zero();
    for k in 1..=bound {
        match spec.weight {
            Weight::One => {}
            Weight::AltSign => weight = -weight,
            Weight::HalfPow => weight = weight * half,
            Weight::TwoPow => weight = weight * two,
        }
        let mut term = weight;
        if spec.k_power < 0 {
            term = term * ctx.inv(k).pow((-spec.k_power) as u64);
        } else if spec.k_power > 0 {
            term = term * mod2.residue(k as u64).pow(spec.k_power as u64);
        }
        if let Some((_, exp)) = spec.harmonic {
            term = term * harmonic.unwrap()[k].pow(exp as u64);
        }
        acc += term;
    }
    Ok(acc)
}

/// sum over pairs of weight(j) / (j^{j_power} k^{k_power}), with the pair
/// range 1 <= j < k <= p-1 (strict) or 1 <= j <= k <= p-1 (weak).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoubleSumSpec {
    /// Include the geometric weight 2^j on the inner index.
    pub pow2_weight: bool,
    pub j_power: u32,
    pub k_power: u32,
    pub strict: bool,
}

/// Prefix-sum evaluation: accumulate A_k = sum_{j<=k (or <k)} w_j/j^a,
/// then sum A_k/k^b over k. Equals the naive double loop.
pub fn lhs_double_sum(ctx: &PrimeContext, spec: &DoubleSumSpec) -> Residue {
    let p = ctx.p() as usize;
    let mod2 = ctx.mod2();
    let two = mod2.residue(2);
    let mut pow2 = mod2.one();
    let mut prefix = mod2.zero();
    let mut acc = mod2.zero();
    for k in 1..p {
        let mut inner = ctx.inv(k).pow(spec.j_power as u64);
        if spec.pow2_weight {
            pow2 = pow2 * two;
            inner = inner * pow2;
        }
        let outer = ctx.inv(k).pow(spec.k_power as u64);
        if spec.strict {
            acc += prefix * outer;
            prefix += inner;
        } else {
            prefix += inner;
            acc += prefix * outer;
        }
    }
    acc
}

/// The per-i weight sequence of a triple sum.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum TripleWeight {
    /// 2^i - (-1)^i
    TwoPowMinusAltSign,
    /// x^i for a fixed residue x (canonical value mod p)
    XPow(u64),
}

/// sum over triples of weight(i) / (i j k), ordered i < j < k (strict) or
/// i <= j <= k (weak), all indices in 1..p-1.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct TripleSumSpec {
    pub weight: TripleWeight,
    pub strict: bool,
}

/// Nested prefix sums: A_j = sum_i w_i/i, B_k = sum_j A_j/j, then
/// sum_k B_k/k, with shift-by-one prefixes for the strict ordering.
/// Equals the naive triple loop.
pub fn lhs_triple_sum(ctx: &PrimeContext, spec: &TripleSumSpec) -> Residue {
    let p = ctx.p() as usize;
    let mod2 = ctx.mod2();
    let two = mod2.residue(2);
    let base = match spec.weight {
        TripleWeight::XPow(x) => mod2.residue(x),
        TripleWeight::TwoPowMinusAltSign => mod2.zero(),
    };
    let mut pow2 = mod2.one();
    let mut sign = mod2.one();
    let mut xpow = mod2.one();
    let (mut a, mut b) = (mod2.zero(), mod2.zero());
    let mut acc = mod2.zero();
    for k in 1..p {
        let w = match spec.weight {
            TripleWeight::TwoPowMinusAltSign => {
                pow2 = pow2 * two;
                sign = -sign;
                pow2 - sign
            }
            TripleWeight::XPow(_) => {
                xpow = xpow * base;
                xpow
            }
        };
        let inv_k = ctx.inv(k);
        if spec.strict {
            // consume prefixes before extending them
            acc += b * inv_k;
            b += a * inv_k;
            a += w * inv_k;
        } else {
            a += w * inv_k;
            b += a * inv_k;
            acc += b * inv_k;
        }
    }
    acc
}

/// RHS of the form coeff · p^{p_factor} · B_{p-1-index_offset}, lifted into
/// Z/p²Z. The rational coefficient is multiplied by the explicit p power
/// before reduction, so coefficients like 4/5 at p = 5 stay p-integral.
/// The Bernoulli residue is only known mod p; the explicit p factor (or a
/// mod-p target) makes the lift exact.
pub fn rhs_bernoulli_multiple(
    ctx: &PrimeContext,
    coeff: &BigRational,
    index_offset: u32,
    p_factor: u8,
) -> Result<Residue> {
    let p = ctx.p();
    debug_assert!(index_offset as u64 <= p - 1);
    let index = (p - 1 - index_offset as u64) as usize;
    let mut exact = coeff.clone();
    if p_factor == 1 {
        exact *= BigRational::from_integer(BigInt::from(p));
    }
    let c = reduce_rational(&exact, ctx.mod2())?;
    let lifted = ctx.mod2().residue(ctx.bernoulli(index).value());
    Ok(c * lifted)
}

/// Evaluates both sides of a case in Z/p²Z through the fast kernels.
pub fn eval_sides(ctx: &PrimeContext, shapes: &CaseShapes) -> Result<(Residue, Residue)> {
    if matches!(shapes.lhs, LhsShape::HarmonicSymmetry) {
        return harmonic_symmetry_sides(ctx);
    }
    Ok((eval_lhs(ctx, &shapes.lhs)?, eval_rhs(ctx, &shapes.rhs)?))
}

fn eval_lhs(ctx: &PrimeContext, shape: &LhsShape) -> Result<Residue> {
    match shape {
        LhsShape::Single(spec) => lhs_single_sum(ctx, spec),
        LhsShape::Doubles(terms) => {
            let mut acc = ctx.mod2().zero();
            for (c, spec) in terms {
                acc += ctx.mod2().residue_signed(*c) * lhs_double_sum(ctx, spec);
            }
            Ok(acc)
        }
        LhsShape::Triple(spec) => Ok(lhs_triple_sum(ctx, spec)),
        LhsShape::HarmonicSymmetry => unreachable!("handled in eval_sides"),
    }
}

fn eval_rhs(ctx: &PrimeContext, shape: &RhsShape) -> Result<Residue> {
    let mod2 = ctx.mod2();
    match shape {
        RhsShape::Zero => Ok(mod2.zero()),
        RhsShape::Bernoulli { coeff, index_offset, p_factor } => {
            rhs_bernoulli_multiple(ctx, coeff, *index_offset, *p_factor)
        }
        RhsShape::NegPAt(q) => Ok(if ctx.p() == *q { -mod2.residue(*q) } else { mod2.zero() }),
        RhsShape::NegOneIfOrderDivides(n) => {
            Ok(if (*n as u64) % (ctx.p() - 1) == 0 { -mod2.one() } else { mod2.zero() })
        }
        RhsShape::Single(spec) => lhs_single_sum(ctx, spec),
        RhsShape::SingleDiff(a, b) => Ok(lhs_single_sum(ctx, a)? - lhs_single_sum(ctx, b)?),
        RhsShape::Triple(spec) => Ok(lhs_triple_sum(ctx, spec)),
        RhsShape::HarmonicSymmetry => unreachable!("handled in eval_sides"),
    }
}

/// H_{p-k} vs H_k - 1/k mod p across all k. Passing instances report
/// (0, 0); a failing one reports the first mismatching pair so the record
/// stays diagnosable.
fn harmonic_symmetry_sides(ctx: &PrimeContext) -> Result<(Residue, Residue)> {
    let p = ctx.p() as usize;
    let table = ctx.harmonic_table(1)?;
    for k in 1..p {
        let lhs = table[p - k].reduce_to_prime();
        let rhs = (table[k] - ctx.inv(k)).reduce_to_prime();
        if lhs != rhs {
            // lift back into Z/p²Z; the final reduction restores the pair
            return Ok((ctx.mod2().residue(lhs.value()), ctx.mod2().residue(rhs.value())));
        }
    }
    Ok((ctx.mod2().zero(), ctx.mod2().zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residue::reduce_rational;
    use crate::tables::PrimeContext;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn ctx(p: u64, orders: &[u32]) -> PrimeContext {
        PrimeContext::build(p, &orders.iter().copied().collect()).unwrap()
    }

    #[test]
    fn single_sum_theorem_1_1_spec_at_p5() {
        // sum H_k/(k 2^k) = 1835/2304 = 15 mod 25
        let c = ctx(5, &[1]);
        let spec = SingleSumSpec::full(Weight::HalfPow, -1, Some((1, 1)));
        assert_eq!(lhs_single_sum(&c, &spec).unwrap().value(), 15);
    }

    #[test]
    fn single_sum_half_range_at_p5() {
        // sum_{k<=2} 1/k^2 = 5/4 = 20 mod 25
        let c = ctx(5, &[]);
        let spec = SingleSumSpec::half(Weight::One, -2);
        assert_eq!(lhs_single_sum(&c, &spec).unwrap().value(), 20);
    }

    #[test]
    fn single_sum_positive_powers() {
        // sum_{k=1}^{4} k^3 = 100 = 0 mod 25
        let c = ctx(5, &[]);
        let spec = SingleSumSpec::full(Weight::One, 3, None);
        assert_eq!(lhs_single_sum(&c, &spec).unwrap().value(), 0);
    }

    #[test]
    fn single_sum_missing_order_is_an_error() {
        let c = ctx(5, &[1]);
        let spec = SingleSumSpec::full(Weight::One, -1, Some((2, 1)));
        assert!(lhs_single_sum(&c, &spec).is_err());
    }

    #[test]
    fn double_sum_weak_equals_harmonic_over_k() {
        // sum_{j<=k} 1/(jk) = sum H_k/k = 415/144 = 10 mod 25
        let c = ctx(5, &[]);
        let spec = DoubleSumSpec { pow2_weight: false, j_power: 1, k_power: 1, strict: false };
        assert_eq!(lhs_double_sum(&c, &spec).value(), 10);
    }

    #[test]
    fn double_sum_strict_drops_the_diagonal() {
        // weak - strict = diagonal = sum 1/k^{a+b}
        let c = ctx(13, &[]);
        for (a, b) in [(1u32, 1u32), (2, 4), (4, 2), (2, 1)] {
            let weak = lhs_double_sum(&c, &DoubleSumSpec { pow2_weight: false, j_power: a, k_power: b, strict: false });
            let strict = lhs_double_sum(&c, &DoubleSumSpec { pow2_weight: false, j_power: a, k_power: b, strict: true });
            let diagonal = lhs_single_sum(&c, &SingleSumSpec::full(Weight::One, -((a + b) as i32), None)).unwrap();
            assert_eq!(weak - strict, diagonal, "a={a} b={b}");
        }
    }

    #[test]
    fn triple_sum_strict_small_enumeration() {
        // p=5, strict: only triples (1,2,3),(1,2,4),(1,3,4),(2,3,4)
        let c = ctx(5, &[]);
        let got = lhs_triple_sum(&c, &TripleSumSpec { weight: TripleWeight::XPow(1), strict: true });
        let q = BigRational::new(BigInt::from(1), BigInt::from(6))
            + BigRational::new(BigInt::from(1), BigInt::from(8))
            + BigRational::new(BigInt::from(1), BigInt::from(12))
            + BigRational::new(BigInt::from(1), BigInt::from(24));
        let want = reduce_rational(&q, c.mod2()).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn triple_sum_x_zero_vanishes() {
        // weights 0^i vanish for i >= 1, so the whole sum is 0
        let c = ctx(11, &[]);
        let got = lhs_triple_sum(&c, &TripleSumSpec { weight: TripleWeight::XPow(0), strict: true });
        assert!(got.is_zero());
    }

    #[test]
    fn bernoulli_multiple_spec_values() {
        // (7/24) p B_{p-3} at p=5 is 35/144 = 15 mod 25
        let c = ctx(5, &[]);
        let coeff = BigRational::new(BigInt::from(7), BigInt::from(24));
        assert_eq!(rhs_bernoulli_multiple(&c, &coeff, 2, 1).unwrap().value(), 15);
        // zero coefficient
        let zero = BigRational::new(BigInt::from(0), BigInt::from(1));
        assert_eq!(rhs_bernoulli_multiple(&c, &zero, 2, 1).unwrap().value(), 0);
        // (8/7) * 11 * B_4 mod 121
        let c11 = ctx(11, &[]);
        let coeff = BigRational::new(BigInt::from(8), BigInt::from(7));
        let want = reduce_rational(
            &(BigRational::new(BigInt::from(8 * 11), BigInt::from(7))
                * BigRational::new(BigInt::from(-1), BigInt::from(30))),
            c11.mod2(),
        )
        .unwrap();
        assert_eq!(rhs_bernoulli_multiple(&c11, &coeff, 6, 1).unwrap(), want);
    }

    #[test]
    fn bernoulli_multiple_p_in_denominator_cancels_against_p_factor() {
        // 4/5 * 5 * B_0 = 4 at p = 5
        let c = ctx(5, &[]);
        let coeff = BigRational::new(BigInt::from(4), BigInt::from(5));
        assert_eq!(rhs_bernoulli_multiple(&c, &coeff, 4, 1).unwrap().value(), 4);
        // without the p factor the same coefficient is rejected
        assert!(rhs_bernoulli_multiple(&c, &coeff, 4, 0).is_err());
    }
}
