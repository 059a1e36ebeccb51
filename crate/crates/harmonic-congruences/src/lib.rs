//! Verification engine for harmonic-number and Bernoulli-number
//! congruences modulo p and p².
//!
//! The library checks, for every prime in a range, a registry of
//! congruences such as Wolstenholme's `H_{p-1} == 0 (mod p^2)` or
//! `sum H_k/(k 2^k) == (7/24) p B_{p-3} (mod p^2)`. Each congruence is
//! evaluated twice: through a fast O(p) residue pipeline built on
//! per-prime prefix tables, and (for small primes) through an independent
//! exact-rational oracle that sums the same terms literally. A scan
//! passes only when every case agrees on both sides and both paths.
//!
//! ## Examples
//!
//! The `examples/` directory is the best starting point; each file is a
//! runnable tour of one capability:
//!
//! - **`verify_theorems`** - scan the two headline congruence families
//!   across a prime range
//! - **`scan_all_cases`** - run the whole registry and summarize verdicts
//! - **`bernoulli_numbers`** - exact Bernoulli values, residues mod p and
//!   the von Staudt-Clausen denominator check
//! - **`wolstenholme`** - watch H_{p-1} vanish mod p² prime by prime
//! - **`oracle_crosscheck`** - fast path vs exact oracle, report by report
//! - **`triple_sum_symmetry`** - the x <-> 1-x mirror of the triple-sum
//!   congruence swept over every residue
//! - **`exact_identities`** - the two exact binomial identities the
//!   congruence proofs lean on
//!
//! ```bash
//! cargo run --release --example verify_theorems
//! cargo run --release --example scan_all_cases
//! cargo run --release --example bernoulli_numbers
//! cargo run --release --example wolstenholme
//! cargo run --release --example oracle_crosscheck
//! cargo run --release --example triple_sum_symmetry
//! cargo run --release --example exact_identities
//! ```
//!
//! ## Library tour
//!
//! - [`exact`] - arbitrary-precision rationals: harmonic numbers,
//!   Bernoulli numbers, binomials, Faulhaber power sums
//! - [`residue`] - canonical residues mod p and p², batch inversion,
//!   rational reduction
//! - [`tables`] - per-prime prefix tables so every case evaluates in O(p)
//! - [`suite`] - the case registry, fast evaluators, the exact oracle and
//!   the multi-prime scan driver
//! - [`cli`] - the `hc` binary's argument parsing and report writers
//!
//! ```
//! use harmonic_congruences::{run_suite, CaseSelection, SuiteParams, Verdict};
//!
//! let mut params = SuiteParams::new(5, 97);
//! params.selection = CaseSelection::Ids(vec!["KF.wolstenholme".into()]);
//! let reports = run_suite(&params).unwrap();
//! assert!(reports.iter().all(|r| r.verdict == Verdict::Pass));
//! ```
//!
//! The `hc` binary exposes the same engine as `verify`, `list-cases` and
//! `bernoulli` subcommands with JSON-lines, CSV and human output.

pub mod cli;
pub mod error;
pub mod exact;
pub mod residue;
pub mod suite;
pub mod tables;

pub use error::{Error, Result};
pub use exact::{
    bernoulli_exact, binomial, faulhaber_sum, harmonic_exact, identity_binomial_harmonic,
    identity_hockey_stick, s_coefficient, BernoulliSeq, IdentityCheck,
};
pub use residue::{
    batch_inverses, is_prime, primes_in_range, reduce_rational, Modulus, Residue,
};
pub use suite::{
    evaluate_case, run_suite, CaseInstance, CasePlan, CaseSelection, CongruenceReport, Oracle,
    ParamBounds, SuiteParams, Verdict,
};
pub use tables::{bernoulli_mod_p, PrimeContext};
