//! The congruence case registry: one entry per verified congruence, with
//! applicability predicates, required harmonic orders and the declarative
//! sum shapes both evaluation paths interpret.
//!
//! A case describes *what* to sum ([`CaseShapes`]); the fast path folds the
//! shapes into O(p) prefix kernels while the oracle replays them as literal
//! loops in exact rational arithmetic. Keeping one shape definition means
//! the two paths can only disagree when one of them computes wrongly.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exact::{binomial, s_coefficient};
use crate::suite::eval::{DoubleSumSpec, SingleSumSpec, TripleSumSpec, TripleWeight, Weight};

/// A congruence case bound to its concrete parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseInstance {
    /// sum H_k/(k 2^k) == (7/24) p B_{p-3}  (mod p²)
    T11,
    /// sum H_{k,2}/(k 2^k) == -(3/8) B_{p-3}  (mod p)
    T12,
    /// sum H_{k,2n}²/k^{2n} == 0  (mod p), (p-1) not dividing 6n
    T13 { n: u32 },
    /// sum H_{k,2n}²/k^{2n} == (s(n)/(6n+1)) p B_{p-1-6n}  (mod p²), p > 6n+1
    T14 { n: u32 },
    /// sum (-1)^k/k² == (p/2) B_{p-3}  (mod p²)
    L21a,
    /// sum (-1)^k/k³ == -B_{p-3}/2  (mod p)
    L21b,
    /// sum H_k/k == (p/3) B_{p-3}  (mod p²)
    L21c,
    /// sum (-1)^k H_k/k² == -B_{p-3}/4  (mod p)
    L21d,
    /// sum_{j<=k} 2^j (j+k)/(j²k²) == sum (-1)^k/k³  (mod p)
    L23a,
    /// sum_{i<=j<=k} (2^i - (-1)^i)/(ijk) == sum ((-1)^k - 2^k)/k³  (mod p)
    L23b,
    /// sum_{j<k} (1/(j^m k^{2m}) + 1/(j^{2m} k^m)) == 0  (mod p)
    L31a { m: u32 },
    /// same LHS == -p (3m/(3m+1)) B_{p-1-3m}  (mod p²), p > 3m+1
    L31b { m: u32 },
    /// sum_{j<k} (1/(j^m k^{2m}) - 1/(j^{2m} k^m)) == 0  (mod p)
    L32a { m: u32 },
    /// same LHS == p m C(3m,m) B_{p-1-3m} / ((m+1)(2m+1))  (mod p²), p > 3m+1
    L32b { m: u32 },
    /// sum_{j<k} (1/(j^{2m} k^{m+1}) + 2/(j^{2m+1} k^m))
    /// == C(3m,m) B_{p-1-3m} / ((m+1)(2m+1))  (mod p)
    L32c { m: u32 },
    /// H_{p-1} == 0  (mod p²)
    KfWolstenholme,
    /// sum H_k/(k 2^k) == 0  (mod p), p > 5
    KfSu1,
    /// sum H_k²/k² == 0  (mod p), p > 5
    KfSu2,
    /// sum H_k²/k² == (4/5) p B_{p-5}  (mod p²), with B_0 at p = 5
    KfMestrovic,
    /// sum 1/k² == (2/3) p B_{p-3}  (mod p²)
    KfS1,
    /// sum 1/k³ == -p when p = 5, else 0  (mod p²)
    KfS2,
    /// sum_{k<=(p-1)/2} 1/k² == (7/3) p B_{p-3}  (mod p²)
    KfS3,
    /// sum_{k<=(p-1)/2} 1/k³ == -2 B_{p-3}  (mod p)
    KfS4,
    /// sum_{j<k} 1/(jk) == -(p/3) B_{p-3}  (mod p²)
    KfS5,
    /// sum H_k/k² == B_{p-3}  (mod p)
    KfSt,
    /// sum_{i<j<k} (1-x)^i/(ijk) == sum_{i<j<k} x^i/(ijk)  (mod p)
    KfZs { x: u64 },
    /// sum 1/k^n == (pn/(n+1)) B_{p-1-n}  (mod p²) for 2 <= n <= p-3,
    /// and == 0 (mod p) whenever (p-1) does not divide n
    KfPsum { n: u32 },
    /// sum k^n == -1 (mod p) if (p-1) | n, else == 0 (mod p)
    KfPowmod { n: u32 },
    /// H_{p-k} == H_k - 1/k  (mod p) for every k = 1..p-1
    KfHsym,
}

/// What evaluation a case calls for at a given prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CasePlan {
    Run { exponent: u8 },
    Skip { reason: &'static str },
}

/// Left-hand side of a case, as data.
#[derive(Clone, Debug)]
pub enum LhsShape {
    Single(SingleSumSpec),
    /// Integer-weighted combination of double sums.
    Doubles(Vec<(i64, DoubleSumSpec)>),
    Triple(TripleSumSpec),
    /// The per-k harmonic symmetry scan H_{p-k} vs H_k - 1/k.
    HarmonicSymmetry,
}

/// Right-hand side of a case, as data.
#[derive(Clone, Debug)]
pub enum RhsShape {
    Zero,
    /// coeff · p^{p_factor} · B_{p-1-index_offset}
    Bernoulli { coeff: BigRational, index_offset: u32, p_factor: u8 },
    /// -p when p equals the marked prime, else 0 (mod p²)
    NegPAt(u64),
    /// -1 when (p-1) divides n, else 0
    NegOneIfOrderDivides(u32),
    Single(SingleSumSpec),
    /// difference of two single sums
    SingleDiff(SingleSumSpec, SingleSumSpec),
    Triple(TripleSumSpec),
    /// paired with LhsShape::HarmonicSymmetry
    HarmonicSymmetry,
}

/// Both sides of one case at one prime.
#[derive(Clone, Debug)]
pub struct CaseShapes {
    pub lhs: LhsShape,
    pub rhs: RhsShape,
}

use CaseInstance::*;

impl CaseInstance {
    pub fn id(&self) -> &'static str {
        match self {
            T11 => "T1.1",
            T12 => "T1.2",
            T13 { .. } => "T1.3",
            T14 { .. } => "T1.4",
            L21a => "L2.1a",
            L21b => "L2.1b",
            L21c => "L2.1c",
            L21d => "L2.1d",
            L23a => "L2.3a",
            L23b => "L2.3b",
            L31a { .. } => "L3.1a",
            L31b { .. } => "L3.1b",
            L32a { .. } => "L3.2a",
            L32b { .. } => "L3.2b",
            L32c { .. } => "L3.2c",
            KfWolstenholme => "KF.wolstenholme",
            KfSu1 => "KF.su1",
            KfSu2 => "KF.su2",
            KfMestrovic => "KF.mestrovic",
            KfS1 => "KF.s1",
            KfS2 => "KF.s2",
            KfS3 => "KF.s3",
            KfS4 => "KF.s4",
            KfS5 => "KF.s5",
            KfSt => "KF.st",
            KfZs { .. } => "KF.zs",
            KfPsum { .. } => "KF.psum",
            KfPowmod { .. } => "KF.powmod",
            KfHsym => "KF.hsym",
        }
    }

    /// Canonical parameter rendering for reports ("" when unparameterized).
    pub fn params(&self) -> String {
        match self {
            T13 { n } | T14 { n } => format!("n={n}"),
            KfPsum { n } | KfPowmod { n } => format!("n={n}"),
            L31a { m } | L31b { m } | L32a { m } | L32b { m } | L32c { m } => format!("m={m}"),
            KfZs { x } => format!("x={x}"),
            _ => String::new(),
        }
    }

    /// Numeric sort key for deterministic report ordering.
    pub fn params_key(&self) -> i64 {
        match self {
            T13 { n } | T14 { n } | KfPsum { n } | KfPowmod { n } => *n as i64,
            L31a { m } | L31b { m } | L32a { m } | L32b { m } | L32c { m } => *m as i64,
            KfZs { x } => *x as i64,
            _ => 0,
        }
    }

    /// Modulus exponent reported for skipped instances.
    pub fn nominal_exponent(&self) -> u8 {
        match self {
            T11 | T14 { .. } | L21a | L21c | L31b { .. } | L32b { .. } | KfWolstenholme
            | KfMestrovic | KfS1 | KfS2 | KfS3 | KfS5 => 2,
            _ => 1,
        }
    }

    /// Applicability at prime p: run at an exponent, or skip with a reason.
    pub fn plan(&self, p: u64) -> CasePlan {
        let run = |exponent| CasePlan::Run { exponent };
        let skip = |reason| CasePlan::Skip { reason };
        match self {
            T13 { n } => {
                if (6 * *n as u64) % (p - 1) == 0 {
                    skip("(p-1) divides 6n")
                } else {
                    run(1)
                }
            }
            T14 { n } => {
                if p <= 6 * *n as u64 + 1 {
                    skip("p <= 6n+1")
                } else if (6 * *n as u64 + 1) % p == 0 {
                    skip("p divides 6n+1")
                } else {
                    run(2)
                }
            }
            L31a { m } => {
                if m % 2 == 1 {
                    skip("m is odd")
                } else if (3 * *m as u64) % (p - 1) == 0 {
                    skip("(p-1) divides 3m")
                } else {
                    run(1)
                }
            }
            L31b { m } | L32b { m } => {
                if m % 2 == 1 {
                    skip("m is odd")
                } else if p <= 3 * *m as u64 + 1 {
                    skip("p <= 3m+1")
                } else {
                    run(2)
                }
            }
            L32a { m } => {
                if m % 2 == 1 {
                    skip("m is odd")
                } else {
                    run(1)
                }
            }
            L32c { m } => {
                if m % 2 == 1 {
                    skip("m is odd")
                } else if p <= 3 * *m as u64 + 1 {
                    skip("p <= 3m+1")
                } else {
                    run(1)
                }
            }
            KfSu1 | KfSu2 => {
                if p <= 5 {
                    skip("p <= 5")
                } else {
                    run(1)
                }
            }
            KfPsum { n } => {
                if *n < 2 {
                    skip("n < 2")
                } else if *n as u64 <= p - 3 {
                    run(2)
                } else if (*n as u64) % (p - 1) != 0 {
                    run(1)
                } else {
                    skip("(p-1) divides n")
                }
            }
            _ => run(self.nominal_exponent()),
        }
    }

    /// Harmonic table orders this case reads from the prime context.
    pub fn required_orders(&self) -> Vec<u32> {
        match self {
            T11 | L21c | L21d | KfSu1 | KfSu2 | KfMestrovic | KfSt | KfHsym => vec![1],
            T12 => vec![2],
            T13 { n } | T14 { n } => vec![2 * n],
            _ => vec![],
        }
    }

    /// Both sides of the congruence as declarative sum shapes.
    pub fn shapes(&self, p: u64) -> CaseShapes {
        let rat = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        let single = |w, e, h| LhsShape::Single(SingleSumSpec::full(w, e, h));
        let bern = |coeff, index_offset, p_factor| RhsShape::Bernoulli { coeff, index_offset, p_factor };
        let strict = |j_power, k_power| DoubleSumSpec { pow2_weight: false, j_power, k_power, strict: true };
        let (lhs, rhs) = match self {
            T11 => (
                single(Weight::HalfPow, -1, Some((1, 1))),
                bern(rat(7, 24), 2, 1),
            ),
            T12 => (
                single(Weight::HalfPow, -1, Some((2, 1))),
                bern(rat(-3, 8), 2, 0),
            ),
            T13 { n } => (
                single(Weight::One, -(2 * *n as i32), Some((2 * n, 2))),
                RhsShape::Zero,
            ),
            T14 { n } => (
                single(Weight::One, -(2 * *n as i32), Some((2 * n, 2))),
                bern(
                    BigRational::new(s_coefficient(*n as u64), BigInt::from(6 * n + 1)),
                    6 * n,
                    1,
                ),
            ),
            L21a => (single(Weight::AltSign, -2, None), bern(rat(1, 2), 2, 1)),
            L21b => (single(Weight::AltSign, -3, None), bern(rat(-1, 2), 2, 0)),
            L21c => (single(Weight::One, -1, Some((1, 1))), bern(rat(1, 3), 2, 1)),
            L21d => (single(Weight::AltSign, -2, Some((1, 1))), bern(rat(-1, 4), 2, 0)),
            L23a => (
                // 2^j (j+k)/(j²k²) splits into 2^j/(jk²) + 2^j/(j²k)
                LhsShape::Doubles(vec![
                    (1, DoubleSumSpec { pow2_weight: true, j_power: 1, k_power: 2, strict: false }),
                    (1, DoubleSumSpec { pow2_weight: true, j_power: 2, k_power: 1, strict: false }),
                ]),
                RhsShape::Single(SingleSumSpec::full(Weight::AltSign, -3, None)),
            ),
            L23b => (
                LhsShape::Triple(TripleSumSpec {
                    weight: TripleWeight::TwoPowMinusAltSign,
                    strict: false,
                }),
                RhsShape::SingleDiff(
                    SingleSumSpec::full(Weight::AltSign, -3, None),
                    SingleSumSpec::full(Weight::TwoPow, -3, None),
                ),
            ),
            L31a { m } => (
                LhsShape::Doubles(vec![(1, strict(*m, 2 * m)), (1, strict(2 * m, *m))]),
                RhsShape::Zero,
            ),
            L31b { m } => (
                LhsShape::Doubles(vec![(1, strict(*m, 2 * m)), (1, strict(2 * m, *m))]),
                bern(rat(-(3 * *m as i64), 3 * *m as i64 + 1), 3 * m, 1),
            ),
            L32a { m } => (
                LhsShape::Doubles(vec![(1, strict(*m, 2 * m)), (-1, strict(2 * m, *m))]),
                RhsShape::Zero,
            ),
            L32b { m } => (
                LhsShape::Doubles(vec![(1, strict(*m, 2 * m)), (-1, strict(2 * m, *m))]),
                bern(
                    BigRational::new(
                        BigInt::from(*m) * binomial(3 * *m as u64, *m as i64),
                        BigInt::from((m + 1) * (2 * m + 1)),
                    ),
                    3 * m,
                    1,
                ),
            ),
            L32c { m } => (
                LhsShape::Doubles(vec![(1, strict(2 * m, m + 1)), (2, strict(2 * m + 1, *m))]),
                bern(
                    BigRational::new(
                        binomial(3 * *m as u64, *m as i64),
                        BigInt::from((m + 1) * (2 * m + 1)),
                    ),
                    3 * m,
                    0,
                ),
            ),
            KfWolstenholme => (single(Weight::One, -1, None), RhsShape::Zero),
            KfSu1 => (single(Weight::HalfPow, -1, Some((1, 1))), RhsShape::Zero),
            KfSu2 => (single(Weight::One, -2, Some((1, 2))), RhsShape::Zero),
            KfMestrovic => (single(Weight::One, -2, Some((1, 2))), bern(rat(4, 5), 4, 1)),
            KfS1 => (single(Weight::One, -2, None), bern(rat(2, 3), 2, 1)),
            KfS2 => (single(Weight::One, -3, None), RhsShape::NegPAt(5)),
            KfS3 => (
                LhsShape::Single(SingleSumSpec::half(Weight::One, -2)),
                bern(rat(7, 3), 2, 1),
            ),
            KfS4 => (
                LhsShape::Single(SingleSumSpec::half(Weight::One, -3)),
                bern(rat(-2, 1), 2, 0),
            ),
            KfS5 => (LhsShape::Doubles(vec![(1, strict(1, 1))]), bern(rat(-1, 3), 2, 1)),
            KfSt => (single(Weight::One, -2, Some((1, 1))), bern(rat(1, 1), 2, 0)),
            KfZs { x } => (
                LhsShape::Triple(TripleSumSpec {
                    weight: TripleWeight::XPow((p + 1 - x) % p),
                    strict: true,
                }),
                RhsShape::Triple(TripleSumSpec { weight: TripleWeight::XPow(*x), strict: true }),
            ),
            KfPsum { n } => (
                single(Weight::One, -(*n as i32), None),
                if *n as u64 <= p - 3 {
                    bern(rat(*n as i64, *n as i64 + 1), *n, 1)
                } else {
                    RhsShape::Zero
                },
            ),
            KfPowmod { n } => (
                single(Weight::One, *n as i32, None),
                RhsShape::NegOneIfOrderDivides(*n),
            ),
            KfHsym => (LhsShape::HarmonicSymmetry, RhsShape::HarmonicSymmetry),
        };
        CaseShapes { lhs, rhs }
    }
}

/// One registry row for `list-cases`: the statement a case verifies and
/// when it applies.
pub struct FamilyInfo {
    pub id: &'static str,
    pub statement: &'static str,
    pub modulus: &'static str,
    pub predicate: &'static str,
    pub parameter: Option<&'static str>,
}

/// Every case family, in registry order.
pub fn registry() -> Vec<FamilyInfo> {
    vec![
        FamilyInfo {
            id: "T1.1",
            statement: "sum(k=1..p-1) H_k/(k 2^k) == (7/24) p B_{p-3}",
            modulus: "p^2",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "T1.2",
            statement: "sum(k=1..p-1) H_{k,2}/(k 2^k) == -(3/8) B_{p-3}",
            modulus: "p",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "T1.3",
            statement: "sum(k=1..p-1) H_{k,2n}^2/k^{2n} == 0",
            modulus: "p",
            predicate: "(p-1) does not divide 6n",
            parameter: Some("n >= 1"),
        },
        FamilyInfo {
            id: "T1.4",
            statement: "sum(k=1..p-1) H_{k,2n}^2/k^{2n} == (s(n)/(6n+1)) p B_{p-1-6n}, s(n) = C(6n+1,2n-1)+n",
            modulus: "p^2",
            predicate: "p > 6n+1",
            parameter: Some("n >= 1"),
        },
        FamilyInfo {
            id: "L2.1a",
            statement: "sum(k=1..p-1) (-1)^k/k^2 == (p/2) B_{p-3}",
            modulus: "p^2",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "L2.1b",
            statement: "sum(k=1..p-1) (-1)^k/k^3 == -B_{p-3}/2",
            modulus: "p",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "L2.1c",
            statement: "sum(k=1..p-1) H_k/k == (p/3) B_{p-3}",
            modulus: "p^2",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "L2.1d",
            statement: "sum(k=1..p-1) (-1)^k H_k/k^2 == -B_{p-3}/4",
            modulus: "p",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "L2.3a",
            statement: "sum(1<=j<=k<=p-1) 2^j (j+k)/(j^2 k^2) == sum(k=1..p-1) (-1)^k/k^3",
            modulus: "p",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "L2.3b",
            statement: "sum(1<=i<=j<=k<=p-1) (2^i-(-1)^i)/(ijk) == sum(k=1..p-1) ((-1)^k-2^k)/k^3",
            modulus: "p",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "L3.1a",
            statement: "sum(1<=j<k<=p-1) (1/(j^m k^{2m}) + 1/(j^{2m} k^m)) == 0",
            modulus: "p",
            predicate: "m even, (p-1) does not divide 3m",
            parameter: Some("m even >= 2"),
        },
        FamilyInfo {
            id: "L3.1b",
            statement: "sum(1<=j<k<=p-1) (1/(j^m k^{2m}) + 1/(j^{2m} k^m)) == -p (3m/(3m+1)) B_{p-1-3m}",
            modulus: "p^2",
            predicate: "m even, p > 3m+1",
            parameter: Some("m even >= 2"),
        },
        FamilyInfo {
            id: "L3.2a",
            statement: "sum(1<=j<k<=p-1) (1/(j^m k^{2m}) - 1/(j^{2m} k^m)) == 0",
            modulus: "p",
            predicate: "m even",
            parameter: Some("m even >= 2"),
        },
        FamilyInfo {
            id: "L3.2b",
            statement: "sum(1<=j<k<=p-1) (1/(j^m k^{2m}) - 1/(j^{2m} k^m)) == p m C(3m,m) B_{p-1-3m}/((m+1)(2m+1))",
            modulus: "p^2",
            predicate: "m even, p > 3m+1",
            parameter: Some("m even >= 2"),
        },
        FamilyInfo {
            id: "L3.2c",
            statement: "sum(1<=j<k<=p-1) (1/(j^{2m} k^{m+1}) + 2/(j^{2m+1} k^m)) == C(3m,m) B_{p-1-3m}/((m+1)(2m+1))",
            modulus: "p",
            predicate: "m even, p > 3m+1",
            parameter: Some("m even >= 2"),
        },
        FamilyInfo {
            id: "KF.wolstenholme",
            statement: "H_{p-1} == 0",
            modulus: "p^2",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "KF.su1",
            statement: "sum(k=1..p-1) H_k/(k 2^k) == 0",
            modulus: "p",
            predicate: "p > 5",
            parameter: None,
        },
        FamilyInfo {
            id: "KF.su2",
            statement: "sum(k=1..p-1) H_k^2/k^2 == 0",
            modulus: "p",
            predicate: "p > 5",
            parameter: None,
        },
        FamilyInfo {
            id: "KF.mestrovic",
            statement: "sum(k=1..p-1) H_k^2/k^2 == (4/5) p B_{p-5}  (B_0 when p = 5)",
            modulus: "p^2",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "KF.s1",
            statement: "sum(k=1..p-1) 1/k^2 == (2/3) p B_{p-3}",
            modulus: "p^2",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "KF.s2",
            statement: "sum(k=1..p-1) 1/k^3 == -p when p = 5, else 0",
            modulus: "p^2",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "KF.s3",
            statement: "sum(k=1..(p-1)/2) 1/k^2 == (7/3) p B_{p-3}",
            modulus: "p^2",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "KF.s4",
            statement: "sum(k=1..(p-1)/2) 1/k^3 == -2 B_{p-3}",
            modulus: "p",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "KF.s5",
            statement: "sum(1<=j<k<=p-1) 1/(jk) == -(p/3) B_{p-3}",
            modulus: "p^2",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "KF.st",
            statement: "sum(k=1..p-1) H_k/k^2 == B_{p-3}",
            modulus: "p",
            predicate: "p > 3",
            parameter: None,
        },
        FamilyInfo {
            id: "KF.zs",
            statement: "sum(1<=i<j<k<=p-1) (1-x)^i/(ijk) == sum(1<=i<j<k<=p-1) x^i/(ijk)",
            modulus: "p",
            predicate: "p > 3",
            parameter: Some("x in 0..p-1 (every residue is swept)"),
        },
        FamilyInfo {
            id: "KF.psum",
            statement: "sum(k=1..p-1) 1/k^n == (pn/(n+1)) B_{p-1-n} mod p^2 for 2 <= n <= p-3; == 0 mod p when (p-1) does not divide n",
            modulus: "p^2 or p",
            predicate: "skip only when n > p-3 and (p-1) | n",
            parameter: Some("n >= 2"),
        },
        FamilyInfo {
            id: "KF.powmod",
            statement: "sum(k=1..p-1) k^n == -1 if (p-1) | n, else 0",
            modulus: "p",
            predicate: "p > 3",
            parameter: Some("n >= 1"),
        },
        FamilyInfo {
            id: "KF.hsym",
            statement: "H_{p-k} == H_k - 1/k for every k = 1..p-1",
            modulus: "p",
            predicate: "p > 3",
            parameter: None,
        },
    ]
}

/// All valid family identifiers, in registry order.
pub fn family_ids() -> Vec<&'static str> {
    registry().iter().map(|f| f.id).collect()
}

/// Parameter bounds for the parameterized families.
#[derive(Clone, Debug)]
pub struct ParamBounds {
    /// Largest n for T1.3/T1.4.
    pub max_n: u32,
    /// Largest (even) m for the L3.x families.
    pub max_m: u32,
}

impl Default for ParamBounds {
    fn default() -> Self {
        ParamBounds { max_n: 4, max_m: 8 }
    }
}

/// Power-sum exponents swept by KF.psum.
pub const PSUM_EXPONENTS: std::ops::RangeInclusive<u32> = 2..=10;
/// Exponents swept by KF.powmod.
pub const POWMOD_EXPONENTS: std::ops::RangeInclusive<u32> = 1..=12;

/// Expands one family id into its concrete instances at prime p.
pub fn expand_family(id: &str, p: u64, bounds: &ParamBounds) -> Vec<CaseInstance> {
    match id {
        "T1.1" => vec![T11],
        "T1.2" => vec![T12],
        "T1.3" => (1..=bounds.max_n).map(|n| T13 { n }).collect(),
        "T1.4" => (1..=bounds.max_n).map(|n| T14 { n }).collect(),
        "L2.1a" => vec![L21a],
        "L2.1b" => vec![L21b],
        "L2.1c" => vec![L21c],
        "L2.1d" => vec![L21d],
        "L2.3a" => vec![L23a],
        "L2.3b" => vec![L23b],
        "L3.1a" => even_ms(bounds).map(|m| L31a { m }).collect(),
        "L3.1b" => even_ms(bounds).map(|m| L31b { m }).collect(),
        "L3.2a" => even_ms(bounds).map(|m| L32a { m }).collect(),
        "L3.2b" => even_ms(bounds).map(|m| L32b { m }).collect(),
        "L3.2c" => even_ms(bounds).map(|m| L32c { m }).collect(),
        "KF.wolstenholme" => vec![KfWolstenholme],
        "KF.su1" => vec![KfSu1],
        "KF.su2" => vec![KfSu2],
        "KF.mestrovic" => vec![KfMestrovic],
        "KF.s1" => vec![KfS1],
        "KF.s2" => vec![KfS2],
        "KF.s3" => vec![KfS3],
        "KF.s4" => vec![KfS4],
        "KF.s5" => vec![KfS5],
        "KF.st" => vec![KfSt],
        "KF.zs" => (0..p).map(|x| KfZs { x }).collect(),
        "KF.psum" => PSUM_EXPONENTS.map(|n| KfPsum { n }).collect(),
        "KF.powmod" => POWMOD_EXPONENTS.map(|n| KfPowmod { n }).collect(),
        "KF.hsym" => vec![KfHsym],
        other => panic!("unknown case family {other}"),
    }
}

fn even_ms(bounds: &ParamBounds) -> impl Iterator<Item = u32> {
    (1..=bounds.max_m / 2).map(|h| 2 * h)
}
