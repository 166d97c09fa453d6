//! Exact computational engine for excludant statistics on integer partitions.
//!
//! Three mutually independent pillars back every claim the crate checks:
//!
//! 1. **Brute-force enumeration** ([`partitions`], [`statistics`]) — partitions of
//!    `n` are listed exhaustively and each statistic is read off the definition.
//! 2. **Truncated formal q-series** ([`qseries`], [`bivariate`], [`identities`]) —
//!    generating functions are expanded with exact big-integer coefficients and
//!    compared coefficient by coefficient.
//! 3. **Tauberian asymptotics** ([`asymptotics`]) — main terms of the shape
//!    `α/(2√π) · C^{(2β+1)/4} · e^{2√(Cn)} / n^{(2β+3)/4}` are evaluated in
//!    extended precision and measured against the exact sequences.
//!
//! The [`bijection`] module carries the constructive staircase map between
//! partitions with distinct odd parts and two-colored distinct partitions.
//!
//! Everything outside [`asymptotics`] is exact integer arithmetic; no floating
//! point is used in the combinatorial or series pillars.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod asymptotics;
pub mod bijection;
pub mod bivariate;
pub mod identities;
pub mod partitions;
pub mod qseries;
pub mod statistics;

use alloc::string::String;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Reciprocal of a series whose constant term is not `+1` or `-1`
    /// cannot be taken in exact integer arithmetic.
    #[error("non-unit constant term: exact series reciprocal needs constant coefficient +1 or -1")]
    NonUnitConstantTerm,

    /// A sum of `q^{Q(n)}/(...)_n` terms only terminates when the exponent
    /// polynomial eventually increases.
    #[error("non-terminating sum: term exponent must eventually increase")]
    NonTerminatingSum,

    /// The maximal excludant is read below the largest part, so it needs one.
    #[error("maximal excludant is undefined for the empty partition")]
    EmptyPartition,

    /// Enumeration cost grows super-polynomially; large n must go through the
    /// series pipeline instead.
    #[error("enumeration budget exceeded: n = {n} > {budget}; use the series engine for large n")]
    BudgetExceeded { n: u32, budget: u32 },

    /// Only statistics with a proven asymptotic main term can be predicted.
    #[error("no asymptotic law available for statistic `{0}`")]
    NoAsymptoticLaw(&'static str),

    /// A convergence checkpoint lies beyond the order of the supplied series.
    #[error("series order {order} insufficient for checkpoint n = {checkpoint}")]
    OrderTooSmall { order: usize, checkpoint: usize },

    /// Tauberian reasoning needs a weakly increasing sequence.
    #[error("sequence is not weakly increasing on [{from}, {to}]: drop at n = {at}")]
    NotWeaklyIncreasing { from: usize, to: usize, at: usize },

    /// The truncated product used to evaluate `1/(e^{-t};e^{-t})_inf` needs
    /// roughly `140/t` factors; refuse silently inaccurate answers.
    #[error("t too small for the product budget: need about {needed} factors, limit is {limit}")]
    ProductBudget { needed: u64, limit: u64 },

    /// Colored-partition input that breaks the distinctness or coloring rules.
    #[error("malformed colored partition: {0}")]
    MalformedColored(String),

    /// A partition failed the class restriction required by an operation.
    #[error("partition violates class constraint: {0}")]
    ClassViolation(String),

    /// Weight bookkeeping failure in the staircase bijection.
    #[error("weight mismatch: expected {expected}, got {got}")]
    WeightMismatch { expected: u64, got: u64 },
}

pub type Result<T> = core::result::Result<T, Error>;
