//! Truncated formal power series over arbitrary-precision integers.
//!
//! A [`TruncatedSeries`] holds the exact coefficients `c_0 .. c_N` of a series
//! in `q`, and every operation stays in integer arithmetic: addition, Cauchy
//! products, reciprocals of unit series, q-Pochhammer products, the two Gauss
//! theta series, and the Nahm-type sums
//!
//! ```text
//! sigma(q)  = sum_{n>=0} q^{n(n+1)/2} / (-q;q)_n
//! sigma*(q) = 2 sum_{n>=1} (-1)^n q^{n^2} / (q;q^2)_n
//! v2(q)     = sum_{n>=0} q^{2n^2-n} / (-q;q^2)_n
//! nu(q)     = sum_{n>=0} q^{n(n+1)} / (-q;q^2)_{n+1}
//! ```
//!
//! Operations on series of different orders truncate to the smaller order.
//! Pochhammer symbols follow the convention `(a;q)_n = prod_{k=0}^{n-1} (1 - a q^k)`
//! specialized to `a = ±q^offset`, so `(a;q)_0 = 1` and infinite products are
//! exact up to the truncation order.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact integer-coefficient power series in `q`, truncated at a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![BigInt::zero(); order + 1] }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// `coeff * q^exp`, or zero if the exponent exceeds the order.
    pub fn monomial(order: usize, exp: usize, coeff: i64) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = BigInt::from(coeff);
        }
        s
    }

    /// Build a series from explicit low-order coefficients, zero-padded.
    pub fn from_coeffs(order: usize, low: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (n, &c) in low.iter().enumerate().take(order + 1) {
            s.coeffs[n] = BigInt::from(c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n` (zero beyond the order).
    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Overwrite the coefficient of `q^n`; ignored beyond the order.
    pub fn set_coeff(&mut self, n: usize, c: BigInt) {
        if n < self.coeffs.len() {
            self.coeffs[n] = c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Copy truncated to a (smaller or larger) order; new high coefficients
    /// are zero and carry no information.
    pub fn truncated(&self, order: usize) -> Self {
        let mut s = Self::zero(order);
        let take = core::cmp::min(order, self.order());
        s.coeffs[..=take].clone_from_slice(&self.coeffs[..=take]);
        s
    }

    /// Coefficientwise sum, truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let order = core::cmp::min(self.order(), other.order());
        let mut s = Self::zero(order);
        for n in 0..=order {
            s.coeffs[n] = &self.coeffs[n] + &other.coeffs[n];
        }
        s
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = core::cmp::min(self.order(), other.order());
        let mut s = Self::zero(order);
        for n in 0..=order {
            s.coeffs[n] = &self.coeffs[n] - &other.coeffs[n];
        }
        s
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        Self { coeffs: self.coeffs.iter().map(|c| c * &k).collect() }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = core::cmp::min(self.order(), other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self { coeffs: out }
    }

    /// Multiply by `q^k` in place, dropping coefficients past the order.
    pub fn shift_up(&mut self, k: usize) {
        if k == 0 {
            return;
        }
        let n = self.coeffs.len();
        for i in (0..n).rev() {
            self.coeffs[i] = if i >= k { self.coeffs[i - k].clone() } else { BigInt::zero() };
        }
    }

    /// Multiply in place by the sparse factor `(1 + c*q^e)`.
    pub fn mul_factor(&mut self, e: usize, c: i64) {
        if e == 0 {
            let f = BigInt::from(1 + c);
            for x in &mut self.coeffs {
                *x *= &f;
            }
            return;
        }
        let c = BigInt::from(c);
        for i in (0..self.coeffs.len().saturating_sub(e)).rev() {
            let add = &self.coeffs[i] * &c;
            self.coeffs[i + e] += add;
        }
    }

    /// Divide in place by the sparse factor `(1 + c*q^e)`, `e >= 1`.
    ///
    /// Forward substitution: the quotient satisfies `out[i] = in[i] - c*out[i-e]`.
    pub fn div_factor(&mut self, e: usize, c: i64) {
        assert!(e >= 1, "cannot divide by a constant-term factor this way");
        let c = BigInt::from(c);
        for i in e..self.coeffs.len() {
            let sub = &self.coeffs[i - e] * &c;
            self.coeffs[i] -= sub;
        }
    }

    /// Exact reciprocal by forward substitution.
    ///
    /// Needs constant term `+1` or `-1`; otherwise integer coefficients are lost.
    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(Error::NonUnitConstantTerm);
        }
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];
        out[0] = c0.clone();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k];
                }
            }
            // c0 = ±1, so dividing by it is multiplying by it
            out[n] = -acc * c0;
        }
        Ok(Self { coeffs: out })
    }

    /// Index of the first coefficient where the two series differ, up to the
    /// smaller order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = core::cmp::min(self.order(), other.order());
        (0..=order).find(|&n| self.coeffs[n] != other.coeffs[n])
    }
}

/// Sign of the Pochhammer base: `(q^a;q^b)` vs `(-q^a;q^b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductSign {
    Plus,
    Minus,
}

impl ProductSign {
    /// Coefficient `c` in the factor `(1 + c*q^e)` contributed by each index.
    fn factor_coeff(self) -> i64 {
        match self {
            ProductSign::Plus => -1,
            ProductSign::Minus => 1,
        }
    }
}

/// Description of `(±q^offset; q^step)_length`, `length = None` meaning infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PochhammerSpec {
    pub sign: ProductSign,
    pub offset: u64,
    pub step: u64,
    pub length: Option<u64>,
}

impl PochhammerSpec {
    pub fn infinite(sign: ProductSign, offset: u64, step: u64) -> Self {
        assert!(step >= 1);
        Self { sign, offset, step, length: None }
    }

    pub fn finite(sign: ProductSign, offset: u64, step: u64, length: u64) -> Self {
        assert!(step >= 1);
        Self { sign, offset, step, length: Some(length) }
    }
}

/// Expand `(±q^a; q^b)_m` as a truncated series.
///
/// Infinite products stop once the factor's exponent exceeds the order, which
/// is exact: later factors are `1 + O(q^{order+1})`.
pub fn pochhammer(spec: &PochhammerSpec, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    let c = spec.sign.factor_coeff();
    let mut k = 0u64;
    loop {
        if let Some(m) = spec.length {
            if k >= m {
                break;
            }
        }
        let e = spec.offset + k * spec.step;
        if e > order as u64 {
            break;
        }
        s.mul_factor(e as usize, c);
        k += 1;
    }
    s
}

/// Divide by `(±q^a;q^b)_m`: the incremental counterpart of [`pochhammer`].
///
/// All factors have constant term 1, so the quotient is again integral.
pub fn div_pochhammer(s: &mut TruncatedSeries, spec: &PochhammerSpec) {
    let c = spec.sign.factor_coeff();
    let order = s.order() as u64;
    let mut k = 0u64;
    loop {
        if let Some(m) = spec.length {
            if k >= m {
                break;
            }
        }
        let e = spec.offset + k * spec.step;
        if e > order {
            break;
        }
        s.div_factor(e as usize, c);
        k += 1;
    }
}

/// Formal substitution `q -> ±q^k` (`k >= 1`), truncated at the original order.
///
/// `negate` additionally flips the sign of odd-index source coefficients,
/// i.e. computes `s(-q^k)`.
pub fn substitute_q_power(s: &TruncatedSeries, k: u32, negate: bool) -> TruncatedSeries {
    assert!(k >= 1, "substitution power must be at least 1");
    let order = s.order();
    let mut out = TruncatedSeries::zero(order);
    for n in 0..=order {
        let target = n.checked_mul(k as usize);
        match target {
            Some(t) if t <= order => {
                let mut c = s.coeffs[n].clone();
                if negate && n % 2 == 1 {
                    c = -c;
                }
                out.coeffs[t] = c;
            }
            _ => break,
        }
    }
    out
}

/// The two classical Gauss theta series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaKind {
    /// `sum_{n in Z} (-1)^n q^{n^2}`
    AlternatingSquares,
    /// `sum_{n >= 0} q^{n(n+1)/2}`
    Triangular,
}

pub fn theta_gauss(kind: ThetaKind, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    match kind {
        ThetaKind::AlternatingSquares => {
            s.coeffs[0] = BigInt::one();
            let mut n = 1u64;
            while (n * n) as usize <= order {
                // n and -n contribute together
                let c = if n.is_multiple_of(2) { BigInt::from(2) } else { BigInt::from(-2) };
                s.coeffs[(n * n) as usize] = c;
                n += 1;
            }
        }
        ThetaKind::Triangular => {
            let mut n = 0u64;
            while (n * (n + 1) / 2) as usize <= order {
                s.coeffs[(n * (n + 1) / 2) as usize] = BigInt::one();
                n += 1;
            }
        }
    }
    s
}

/// Exponent polynomial `Q(n) = (n2*n^2 + n1*n)/2 + n0` of a Nahm-type term.
///
/// The half-integer encoding admits triangular exponents like `n(n+1)/2`;
/// `n2*n^2 + n1*n` must stay even for every n (i.e. `n2` and `n1` have equal
/// parity), which all library kinds satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermExponent {
    pub n2: i64,
    pub n1: i64,
    pub n0: i64,
}

impl TermExponent {
    fn eval(&self, n: u64) -> i64 {
        let n = n as i64;
        (self.n2 * n * n + self.n1 * n) / 2 + self.n0
    }

    fn eventually_increasing(&self) -> bool {
        self.n2 > 0 || (self.n2 == 0 && self.n1 > 0)
    }
}

/// Denominator pattern `(±q^offset; q^step)_{n + len_offset}` indexed by the
/// summation variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermDenominator {
    pub sign: ProductSign,
    pub offset: u64,
    pub step: u64,
    /// Pochhammer length is `n + len_offset` (clamped at zero).
    pub len_offset: i64,
}

/// Full description of `scale * sum_{n>=start} (±1)^n q^{Q(n)} / (denom)_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NahmSpec {
    pub scale: i64,
    pub start: u64,
    pub alternating: bool,
    pub exponent: TermExponent,
    pub denominator: TermDenominator,
}

/// The named Nahm-type sums used throughout, plus a custom escape hatch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NahmKind {
    /// `sigma(q) = sum q^{n(n+1)/2}/(-q;q)_n`
    SigmaRamanujan,
    /// `sigma*(q) = 2 sum_{n>=1} (-1)^n q^{n^2}/(q;q^2)_n`
    SigmaStarCohen,
    /// `v2(q) = sum q^{2n^2-n}/(-q;q^2)_n`
    V2Andrews,
    /// `nu(q) = sum q^{n(n+1)}/(-q;q^2)_{n+1}`
    NuMockTheta,
    Custom(NahmSpec),
}

impl NahmKind {
    fn spec(self) -> NahmSpec {
        match self {
            NahmKind::SigmaRamanujan => NahmSpec {
                scale: 1,
                start: 0,
                alternating: false,
                exponent: TermExponent { n2: 1, n1: 1, n0: 0 },
                denominator: TermDenominator {
                    sign: ProductSign::Minus,
                    offset: 1,
                    step: 1,
                    len_offset: 0,
                },
            },
            NahmKind::SigmaStarCohen => NahmSpec {
                scale: 2,
                start: 1,
                alternating: true,
                exponent: TermExponent { n2: 2, n1: 0, n0: 0 },
                denominator: TermDenominator {
                    sign: ProductSign::Plus,
                    offset: 1,
                    step: 2,
                    len_offset: 0,
                },
            },
            NahmKind::V2Andrews => NahmSpec {
                scale: 1,
                start: 0,
                alternating: false,
                exponent: TermExponent { n2: 4, n1: -2, n0: 0 },
                denominator: TermDenominator {
                    sign: ProductSign::Minus,
                    offset: 1,
                    step: 2,
                    len_offset: 0,
                },
            },
            NahmKind::NuMockTheta => NahmSpec {
                scale: 1,
                start: 0,
                alternating: false,
                exponent: TermExponent { n2: 2, n1: 2, n0: 0 },
                denominator: TermDenominator {
                    sign: ProductSign::Minus,
                    offset: 1,
                    step: 2,
                    len_offset: 1,
                },
            },
            NahmKind::Custom(spec) => spec,
        }
    }
}

/// Expand a Nahm-type sum exactly to the given order.
///
/// Terms are accumulated with an incrementally maintained `1/(denom)_n`
/// (each new factor is divided in by forward substitution), and the sum stops
/// once the term's minimal exponent `Q(n)` exceeds the order — exact because
/// every denominator has constant term 1.
pub fn nahm_sum(kind: NahmKind, order: usize) -> Result<TruncatedSeries> {
    let spec = kind.spec();
    if !spec.exponent.eventually_increasing() {
        return Err(Error::NonTerminatingSum);
    }
    // Past the parabola's vertex Q is increasing, so once a term exponent
    // leaves the truncation window no later term can re-enter it.
    let vertex: u64 = if spec.exponent.n2 > 0 && spec.exponent.n1 < 0 {
        ((-spec.exponent.n1) as u64).div_ceil(2 * spec.exponent.n2 as u64)
    } else {
        0
    };
    let mut total = TruncatedSeries::zero(order);
    let mut inv_den = TruncatedSeries::one(order);
    let mut depth: u64 = 0;
    let c = spec.denominator.sign.factor_coeff();
    let mut n = spec.start;
    loop {
        let q_exp = spec.exponent.eval(n);
        if q_exp < 0 || q_exp as usize > order {
            if q_exp >= 0 && n >= vertex {
                break;
            }
            n += 1;
            continue;
        }
        let need = (n as i64 + spec.denominator.len_offset).max(0) as u64;
        while depth < need {
            let e = spec.denominator.offset + depth * spec.denominator.step;
            if e <= order as u64 {
                inv_den.div_factor(e as usize, c);
            }
            depth += 1;
        }
        let q_exp = q_exp as usize;
        let mut w = BigInt::from(spec.scale);
        if spec.alternating && n % 2 == 1 {
            w = -w;
        }
        if !w.is_zero() {
            for i in 0..=(order - q_exp) {
                if !inv_den.coeffs[i].is_zero() {
                    let add = &inv_den.coeffs[i] * &w;
                    total.coeffs[i + q_exp] += add;
                }
            }
        }
        n += 1;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recip_of_geometric() {
        // 1/(1-q) = 1 + q + q^2 + ...
        let mut s = TruncatedSeries::one(10);
        s.mul_factor(1, -1);
        let r = s.recip().unwrap();
        for n in 0..=10 {
            assert_eq!(r.coeff(n), BigInt::one(), "coefficient {n}");
        }
    }

    #[test]
    fn recip_rejects_non_unit() {
        let s = TruncatedSeries::from_coeffs(5, &[2, 1]);
        assert_eq!(s.recip(), Err(Error::NonUnitConstantTerm));
        let z = TruncatedSeries::zero(5);
        assert_eq!(z.recip(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn pochhammer_small_product() {
        // (-q;q^2)_2 = (1+q)(1+q^3) = 1 + q + q^3 + q^4
        let s = pochhammer(&PochhammerSpec::finite(ProductSign::Minus, 1, 2, 2), 8);
        assert_eq!(s, TruncatedSeries::from_coeffs(8, &[1, 1, 0, 1, 1]));
        // (a;q)_0 = 1
        let e = pochhammer(&PochhammerSpec::finite(ProductSign::Plus, 1, 1, 0), 8);
        assert_eq!(e, TruncatedSeries::one(8));
    }

    #[test]
    fn difference_of_products() {
        // (1+q)(1-q) = 1 - q^2
        let mut s = TruncatedSeries::one(6);
        s.mul_factor(1, 1);
        s.mul_factor(1, -1);
        assert_eq!(s, TruncatedSeries::from_coeffs(6, &[1, 0, -1]));
    }

    #[test]
    fn substitution_negates_odd_coefficients() {
        let s = TruncatedSeries::from_coeffs(6, &[1, 1]);
        let t = substitute_q_power(&s, 1, true);
        assert_eq!(t, TruncatedSeries::from_coeffs(6, &[1, -1]));
        let u = substitute_q_power(&s, 2, false);
        assert_eq!(u, TruncatedSeries::from_coeffs(6, &[1, 0, 1]));
    }

    #[test]
    fn nahm_constant_terms() {
        // sigma, v2, nu have constant term 1; sigma* starts at q
        assert_eq!(nahm_sum(NahmKind::SigmaRamanujan, 0).unwrap().coeff(0), BigInt::one());
        assert_eq!(nahm_sum(NahmKind::V2Andrews, 0).unwrap().coeff(0), BigInt::one());
        assert_eq!(nahm_sum(NahmKind::NuMockTheta, 0).unwrap().coeff(0), BigInt::one());
        assert_eq!(nahm_sum(NahmKind::SigmaStarCohen, 0).unwrap().coeff(0), BigInt::zero());
    }

    #[test]
    fn nahm_rejects_non_increasing_exponent() {
        let spec = NahmSpec {
            scale: 1,
            start: 0,
            alternating: false,
            exponent: TermExponent { n2: 0, n1: 0, n0: 1 },
            denominator: TermDenominator {
                sign: ProductSign::Minus,
                offset: 1,
                step: 1,
                len_offset: 0,
            },
        };
        assert_eq!(nahm_sum(NahmKind::Custom(spec), 10), Err(Error::NonTerminatingSum));
    }

    #[test]
    fn theta_triangular_first_terms() {
        let t = theta_gauss(ThetaKind::Triangular, 12);
        assert_eq!(t, TruncatedSeries::from_coeffs(12, &[1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]));
    }

    #[test]
    fn mismatched_orders_truncate_to_min() {
        let a = TruncatedSeries::one(10);
        let b = TruncatedSeries::one(4);
        assert_eq!(a.add(&b).order(), 4);
        assert_eq!(a.mul(&b).order(), 4);
    }

    #[test]
    fn zero_is_additive_identity() {
        let s = TruncatedSeries::from_coeffs(8, &[3, -1, 0, 7]);
        assert_eq!(s.add(&TruncatedSeries::zero(8)), s);
    }

    #[test]
    fn truncation_keeps_low_coefficients() {
        let s = TruncatedSeries::from_coeffs(8, &[1, 2, 3, 4, 5]);
        let t = s.truncated(2);
        assert_eq!(t, TruncatedSeries::from_coeffs(2, &[1, 2, 3]));
        let u = s.truncated(10);
        assert_eq!(u.coeff(4), BigInt::from(5));
        assert_eq!(u.coeff(10), BigInt::ZERO);
    }

    #[test]
    fn div_pochhammer_inverts_pochhammer() {
        let spec = PochhammerSpec::infinite(ProductSign::Minus, 1, 2);
        let mut s = pochhammer(&spec, 40);
        div_pochhammer(&mut s, &spec);
        assert_eq!(s, TruncatedSeries::one(40));
    }
}
