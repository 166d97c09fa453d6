//! Doubly truncated series in `w` and `q` with exact integer coefficients.
//!
//! Coefficients are stored per q-degree as polynomials in `w`, which makes the
//! reciprocal a degree-by-degree forward substitution in `q` whose scalar
//! steps are `w`-polynomial multiplications. The only reciprocals the crate
//! needs have a plain unit constant term (`c_{0,0} = ±1` and no other `w`
//! content at `q^0`), so exact integer arithmetic is preserved.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::qseries::TruncatedSeries;
use crate::{Error, Result};

/// Exact series `sum c_{j,n} w^j q^n`, truncated at `q_order` and `w_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    q_order: usize,
    w_order: usize,
    /// `coeffs[n][j]` is the coefficient of `w^j q^n`.
    coeffs: Vec<Vec<BigInt>>,
}

impl BivariateSeries {
    pub fn zero(q_order: usize, w_order: usize) -> Self {
        Self {
            q_order,
            w_order,
            coeffs: vec![vec![BigInt::zero(); w_order + 1]; q_order + 1],
        }
    }

    pub fn one(q_order: usize, w_order: usize) -> Self {
        let mut s = Self::zero(q_order, w_order);
        s.coeffs[0][0] = BigInt::one();
        s
    }

    /// Lift a univariate series to `w`-degree zero.
    pub fn from_univariate(u: &TruncatedSeries, w_order: usize) -> Self {
        Self::from_w_monomial(u, 0, w_order)
    }

    /// Place a univariate series at the given `w`-degree: `u(q) * w^j`.
    pub fn from_w_monomial(u: &TruncatedSeries, j: usize, w_order: usize) -> Self {
        let mut s = Self::zero(u.order(), w_order);
        if j <= w_order {
            for n in 0..=u.order() {
                s.coeffs[n][j] = u.coeff(n);
            }
        }
        s
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    pub fn w_order(&self) -> usize {
        self.w_order
    }

    /// Coefficient of `w^j q^n` (zero outside the window).
    pub fn coeff(&self, n: usize, j: usize) -> BigInt {
        self.coeffs
            .get(n)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// The univariate slice at a fixed `w`-degree.
    pub fn w_slice(&self, j: usize) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.q_order);
        for n in 0..=self.q_order {
            out.set_coeff(n, self.coeff(n, j));
        }
        out
    }

    /// Sum of the coefficients over all `w`-degrees at fixed `n`
    /// (the `w = 1` specialization).
    pub fn w_marginal(&self, n: usize) -> BigInt {
        self.coeffs[n].iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let q_order = core::cmp::min(self.q_order, other.q_order);
        let w_order = core::cmp::min(self.w_order, other.w_order);
        let mut out = Self::zero(q_order, w_order);
        for n in 0..=q_order {
            for j in 0..=w_order {
                out.coeffs[n][j] = &self.coeffs[n][j] + &other.coeffs[n][j];
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let q_order = core::cmp::min(self.q_order, other.q_order);
        let w_order = core::cmp::min(self.w_order, other.w_order);
        let mut out = Self::zero(q_order, w_order);
        for na in 0..=q_order {
            for ja in 0..=w_order {
                let a = &self.coeffs[na][ja];
                if a.is_zero() {
                    continue;
                }
                for nb in 0..=(q_order - na) {
                    for jb in 0..=(w_order - ja) {
                        let b = &other.coeffs[nb][jb];
                        if !b.is_zero() {
                            out.coeffs[na + nb][ja + jb] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Multiply in place by the sparse factor `(1 + c * w * q^e)`.
    pub fn mul_w_factor(&mut self, e: usize, c: i64) {
        let c = BigInt::from(c);
        for n in (0..self.coeffs.len().saturating_sub(e)).rev() {
            for j in (0..self.w_order).rev() {
                if !self.coeffs[n][j].is_zero() {
                    let add = &self.coeffs[n][j] * &c;
                    self.coeffs[n + e][j + 1] += add;
                }
            }
        }
    }

    /// Divide in place by `(1 + c * w * q^e)`, `e >= 1`.
    pub fn div_w_factor(&mut self, e: usize, c: i64) {
        assert!(e >= 1);
        let c = BigInt::from(c);
        for n in e..self.coeffs.len() {
            for j in 1..=self.w_order {
                if !self.coeffs[n - e][j - 1].is_zero() {
                    let sub = &self.coeffs[n - e][j - 1] * &c;
                    self.coeffs[n][j] -= sub;
                }
            }
        }
    }

    /// Exact reciprocal, degree by degree in `q`.
    ///
    /// Requires `c_{0,0} = ±1` and no other `w`-content at `q^0`.
    pub fn recip(&self) -> Result<Self> {
        let head = &self.coeffs[0];
        let unit = head[0].is_one() || (-&head[0]).is_one();
        if !unit || head[1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::NonUnitConstantTerm);
        }
        let c0 = head[0].clone();
        let mut out = Self::zero(self.q_order, self.w_order);
        out.coeffs[0][0] = c0.clone();
        for n in 1..=self.q_order {
            // acc = sum_{k=1..n} A_k * X_{n-k} as w-polynomials
            let mut acc = vec![BigInt::zero(); self.w_order + 1];
            for k in 1..=n {
                for ja in 0..=self.w_order {
                    let a = &self.coeffs[k][ja];
                    if a.is_zero() {
                        continue;
                    }
                    for jb in 0..=(self.w_order - ja) {
                        let b = &out.coeffs[n - k][jb];
                        if !b.is_zero() {
                            acc[ja + jb] += a * b;
                        }
                    }
                }
            }
            for (j, a) in acc.iter().enumerate() {
                out.coeffs[n][j] = -a * &c0;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{pochhammer, PochhammerSpec, ProductSign};

    #[test]
    fn recip_of_w_factor_is_geometric() {
        // 1/(1 - w q^2) = sum_j w^j q^{2j}
        let mut s = BivariateSeries::one(10, 5);
        s.mul_w_factor(2, -1);
        let r = s.recip().unwrap();
        for j in 0..=5usize {
            for n in 0..=10usize {
                let expect = if n == 2 * j { BigInt::one() } else { BigInt::zero() };
                assert_eq!(r.coeff(n, j), expect, "w^{j} q^{n}");
            }
        }
    }

    #[test]
    fn w_slice_zero_matches_univariate_part() {
        // 1/((q;q^2)_inf (w q^4;q^4)_inf) at w-degree 0 equals 1/(q;q^2)_inf
        let order = 24;
        let mut den = BivariateSeries::from_univariate(
            &pochhammer(&PochhammerSpec::infinite(ProductSign::Plus, 1, 2), order),
            8,
        );
        let mut e = 4;
        while e <= order {
            den.mul_w_factor(e, -1);
            e += 4;
        }
        let inv = den.recip().unwrap();
        let odd_inv = pochhammer(&PochhammerSpec::infinite(ProductSign::Plus, 1, 2), order)
            .recip()
            .unwrap();
        assert_eq!(inv.w_slice(0), odd_inv);
    }

    #[test]
    fn recip_requires_plain_unit_head() {
        let mut s = BivariateSeries::one(4, 2);
        s.coeffs[0][1] = BigInt::one();
        assert!(s.recip().is_err());
    }
}
