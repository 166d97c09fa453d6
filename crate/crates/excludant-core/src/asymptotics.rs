//! Tauberian main terms and empirical convergence of the exact sequences.
//!
//! For a series with weakly increasing non-negative coefficients whose value
//! at `q = e^{-t}` grows like `alpha t^beta e^{C/t}` as `t -> 0+`, the
//! coefficients satisfy
//!
//! ```text
//! a(n) ~ alpha/(2 sqrt(pi)) * C^{(2beta+1)/4} * e^{2 sqrt(Cn)} / n^{(2beta+3)/4}
//! ```
//!
//! All real evaluation happens in extended-precision binary floating point
//! (50 decimal digits by default): `e^{pi sqrt(2000)}` overflows an `f64`,
//! and the ratio tests need headroom.
//!
//! The three statistics with proven main terms share `C = pi^2/8`; their
//! `(alpha, beta)` pairs are `(1/sqrt(pi), 1/2)`, `(4/sqrt(pi), 3/2)`, and
//! `(3/sqrt(pi), 1/2)`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;

use crate::qseries::TruncatedSeries;
use crate::statistics::StatisticId;
use crate::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

/// Default significant decimal digits for real evaluation.
pub const DEFAULT_PRECISION_DIGITS: usize = 50;

/// Parameters `(alpha, beta, C)` of the Tauberian main term.
#[derive(Debug, Clone)]
pub struct TauberianParams {
    pub alpha: BigFloat,
    pub beta: BigFloat,
    pub c: BigFloat,
}

/// One row of a convergence table.
#[derive(Debug, Clone)]
pub struct ConvergencePoint {
    pub n: u64,
    pub exact: BigInt,
    pub predicted: BigFloat,
    pub ratio: BigFloat,
}

/// Exact-versus-predicted comparison for one statistic.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub statistic: StatisticId,
    pub points: Vec<ConvergencePoint>,
}

/// Result of evaluating the truncated product `1/(e^{-t};e^{-t})_inf`
/// against `sqrt(t/2pi) e^{pi^2/(6t)}`.
#[derive(Debug, Clone)]
pub struct EtaCuspReport {
    pub t: f64,
    pub product_side: BigFloat,
    pub main_term: BigFloat,
    pub ratio: BigFloat,
}

/// Shared precision and cached constants for all real evaluation.
pub struct AsymContext {
    bits: usize,
    cc: Consts,
}

impl AsymContext {
    /// Context carrying roughly `decimal_digits` significant digits.
    pub fn new(decimal_digits: usize) -> Self {
        // log2(10) with a generous guard for intermediate rounding
        let bits = decimal_digits * 3322 / 1000 + 64;
        Self { bits, cc: Consts::new().expect("constants cache") }
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.bits, RM)
    }

    pub fn from_u64(&self, v: u64) -> BigFloat {
        BigFloat::from_u64(v, self.bits)
    }

    /// Exact integer to float, through its decimal expansion.
    pub fn from_bigint(&mut self, v: &BigInt) -> BigFloat {
        BigFloat::parse(&v.to_string(), Radix::Dec, self.bits, RM, &mut self.cc)
    }

    /// Parse a decimal literal at context precision.
    pub fn parse(&mut self, s: &str) -> BigFloat {
        BigFloat::parse(s, Radix::Dec, self.bits, RM, &mut self.cc)
    }

    /// Tauberian parameters of the statistics with proven main terms.
    ///
    /// All three use `C = pi^2/8`; alpha carries the factors `1`, `4`, `3`
    /// of `1/sqrt(pi)` and beta is `1/2`, `3/2`, `1/2` respectively.
    pub fn params_for(&mut self, stat: StatisticId) -> Result<TauberianParams> {
        let (num, beta_halves): (u64, u64) = match stat {
            StatisticId::AOodd => (1, 1),
            StatisticId::AOeven => (4, 3),
            StatisticId::SigmaOdMoex => (3, 1),
            other => return Err(Error::NoAsymptoticLaw(other.name())),
        };
        let p = self.bits;
        let pi = self.pi();
        let sqrt_pi = pi.sqrt(p, RM);
        let alpha = self.from_u64(num).div(&sqrt_pi, p, RM);
        let beta = self.from_u64(beta_halves).div(&self.from_u64(2), p, RM);
        let c = pi.mul(&pi, p, RM).div(&self.from_u64(8), p, RM);
        Ok(TauberianParams { alpha, beta, c })
    }

    /// `alpha/(2 sqrt(pi)) * C^{(2beta+1)/4} * e^{2 sqrt(Cn)} / n^{(2beta+3)/4}`
    pub fn ingham_main_term(&mut self, params: &TauberianParams, n: u64) -> BigFloat {
        let p = self.bits;
        let pi = self.pi();
        let two = self.from_u64(2);
        let four = self.from_u64(4);
        let nf = self.from_u64(n);

        let front = params.alpha.div(&two.mul(&pi.sqrt(p, RM), p, RM), p, RM);
        let two_beta = params.beta.mul(&two, p, RM);
        let e1 = two_beta.add(&self.from_u64(1), p, RM).div(&four, p, RM);
        let e2 = two_beta.add(&self.from_u64(3), p, RM).div(&four, p, RM);
        let c_pow = params.c.pow(&e1, p, RM, &mut self.cc);
        let growth = params
            .c
            .mul(&nf, p, RM)
            .sqrt(p, RM)
            .mul(&two, p, RM)
            .exp(p, RM, &mut self.cc);
        let n_pow = nf.pow(&e2, p, RM, &mut self.cc);
        front.mul(&c_pow, p, RM).mul(&growth, p, RM).div(&n_pow, p, RM)
    }

    /// Main term of a statistic with a proven asymptotic law.
    pub fn predicted(&mut self, stat: StatisticId, n: u64) -> Result<BigFloat> {
        let params = self.params_for(stat)?;
        Ok(self.ingham_main_term(&params, n))
    }

    /// Evaluate `1/(e^{-t};e^{-t})_inf` (truncated where factors stop
    /// mattering at context precision) against its cusp main term.
    pub fn eta_cusp_expansion_check(&mut self, t: f64) -> Result<EtaCuspReport> {
        assert!(t > 0.0 && t <= 1.0, "t must lie in (0, 1]");
        let p = self.bits;
        // factors (1 - e^{-tk}) are within 2^-(bits+16) of 1 once tk exceeds
        // (bits+16) ln 2
        let needed = (((self.bits + 16) as f64) * core::f64::consts::LN_2 / t).ceil() as u64 + 1;
        const LIMIT: u64 = 4_000_000;
        if needed > LIMIT {
            return Err(Error::ProductBudget { needed, limit: LIMIT });
        }
        let tf = BigFloat::from_f64(t, p);
        let mut product = self.from_u64(1);
        let one = self.from_u64(1);
        for k in 1..=needed {
            let e = tf.mul(&self.from_u64(k), p, RM).neg().exp(p, RM, &mut self.cc);
            product = product.mul(&one.sub(&e, p, RM), p, RM);
        }
        let product_side = one.div(&product, p, RM);

        let pi = self.pi();
        let two_pi = pi.mul(&self.from_u64(2), p, RM);
        let root = tf.div(&two_pi, p, RM).sqrt(p, RM);
        let six_t = tf.mul(&self.from_u64(6), p, RM);
        let main_term = pi.mul(&pi, p, RM).div(&six_t, p, RM).exp(p, RM, &mut self.cc).mul(&root, p, RM);

        let ratio = product_side.div(&main_term, p, RM);
        Ok(EtaCuspReport { t, product_side, main_term, ratio })
    }

    /// Exact coefficients against the predicted main term at each checkpoint.
    ///
    /// The exact sequence must be weakly increasing between the smallest and
    /// largest checkpoint — the hypothesis the Tauberian conclusion rests on
    /// — and the series must reach every checkpoint.
    pub fn convergence_report(
        &mut self,
        stat: StatisticId,
        checkpoints: &[u64],
        series: &TruncatedSeries,
    ) -> Result<ConvergenceReport> {
        let params = self.params_for(stat)?;
        for &cp in checkpoints {
            if cp as usize > series.order() {
                return Err(Error::OrderTooSmall { order: series.order(), checkpoint: cp as usize });
            }
        }
        if let (Some(&lo), Some(&hi)) =
            (checkpoints.iter().min(), checkpoints.iter().max())
        {
            for n in (lo as usize)..(hi as usize) {
                if series.coeff(n + 1) < series.coeff(n) {
                    return Err(Error::NotWeaklyIncreasing {
                        from: lo as usize,
                        to: hi as usize,
                        at: n,
                    });
                }
            }
        }
        let p = self.bits;
        let mut points = Vec::with_capacity(checkpoints.len());
        for &n in checkpoints {
            let exact = series.coeff(n as usize);
            let predicted = self.ingham_main_term(&params, n);
            let exact_f = self.from_bigint(&exact);
            let ratio = exact_f.div(&predicted, p, RM);
            points.push(ConvergencePoint { n, exact, predicted, ratio });
        }
        Ok(ConvergenceReport { statistic: stat, points })
    }

    /// Decimal scientific form with the given number of significant digits,
    /// e.g. `1.2345e+10`.
    pub fn format_scientific(&mut self, x: &BigFloat, sig_digits: usize) -> String {
        if x.is_zero() {
            return String::from("0");
        }
        let (sign, digits, exp) = x
            .convert_to_radix(Radix::Dec, RM, &mut self.cc)
            .expect("finite value");
        let mut out = String::new();
        if sign == Sign::Neg {
            out.push('-');
        }
        let rounded = round_digits(&digits, sig_digits);
        let (digits, exp) = match rounded {
            Rounded::Same(d) => (d, exp),
            Rounded::CarryOver(d) => (d, exp + 1),
        };
        out.push((b'0' + digits[0]) as char);
        if sig_digits > 1 {
            out.push('.');
            for i in 1..sig_digits {
                out.push((b'0' + digits.get(i).copied().unwrap_or(0)) as char);
            }
        }
        // convert_to_radix normalizes to 0.d1d2... * 10^exp
        let e10 = exp as i64 - 1;
        if e10 >= 0 {
            out.push_str("e+");
        } else {
            out.push_str("e-");
        }
        let mut mag = alloc::format!("{}", e10.abs());
        if mag.len() < 2 {
            mag.insert(0, '0');
        }
        out.push_str(&mag);
        out
    }

    /// Fixed-point decimal form with the given number of fractional digits.
    ///
    /// Intended for quantities of moderate size such as ratios near 1.
    pub fn format_fixed(&mut self, x: &BigFloat, decimals: usize) -> String {
        if x.is_zero() {
            let mut out = String::from("0.");
            for _ in 0..decimals {
                out.push('0');
            }
            return out;
        }
        let (sign, digits, exp) = x
            .convert_to_radix(Radix::Dec, RM, &mut self.cc)
            .expect("finite value");
        let int_len = exp.max(0) as usize;
        let keep = int_len + decimals;
        let rounded = round_digits(&digits, keep.max(1));
        let (digits, int_len) = match rounded {
            Rounded::Same(d) => (d, int_len),
            Rounded::CarryOver(d) => (d, int_len + 1),
        };
        let mut out = String::new();
        if sign == Sign::Neg {
            out.push('-');
        }
        if int_len == 0 {
            out.push('0');
        } else {
            for i in 0..int_len {
                out.push((b'0' + digits.get(i).copied().unwrap_or(0)) as char);
            }
        }
        out.push('.');
        let lead_zeros = (-(exp as i64)).max(0) as usize;
        for i in 0..decimals {
            if i < lead_zeros {
                out.push('0');
            } else {
                let idx = int_len + i - lead_zeros;
                out.push((b'0' + digits.get(idx).copied().unwrap_or(0)) as char);
            }
        }
        out
    }
}

enum Rounded {
    Same(Vec<u8>),
    /// Rounding rippled past the leading digit (e.g. 0.999 -> 1.00).
    CarryOver(Vec<u8>),
}

/// Round a digit string to `keep` digits, half-up.
fn round_digits(digits: &[u8], keep: usize) -> Rounded {
    let mut out: Vec<u8> = digits.iter().copied().take(keep).collect();
    while out.len() < keep {
        out.push(0);
    }
    let round_up = digits.get(keep).map(|&d| d >= 5).unwrap_or(false);
    if round_up {
        let mut i = keep;
        loop {
            if i == 0 {
                let mut new = alloc::vec![1u8];
                new.extend_from_slice(&out[..keep.saturating_sub(1)]);
                return Rounded::CarryOver(new);
            }
            i -= 1;
            if out[i] == 9 {
                out[i] = 0;
            } else {
                out[i] += 1;
                break;
            }
        }
    }
    Rounded::Same(out)
}
