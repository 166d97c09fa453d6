//! Shared test oracles and lemma-specialization builders.

#![allow(dead_code)]

use excludant_core::bivariate::BivariateSeries;
use excludant_core::qseries::{pochhammer, PochhammerSpec, ProductSign, TruncatedSeries};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `p(0..=n_max)` by the pentagonal-number recurrence
/// `p(n) = sum_k (-1)^{k-1} (p(n - k(3k-1)/2) + p(n - k(3k+1)/2))`.
pub fn partition_numbers(n_max: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n_max + 1];
    p[0] = BigInt::one();
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 > n && g2 > n {
                break;
            }
            let positive = k % 2 == 1;
            for g in [g1, g2] {
                if g <= n {
                    if positive {
                        acc += &p[n - g];
                    } else {
                        acc -= &p[n - g];
                    }
                }
            }
            k += 1;
        }
        p[n] = acc;
    }
    p
}

/// Both sides of Heine's transformation at the specialization used for the
/// bivariate mod-4 refinement:
/// `(-q;q^2)_inf/(wq^4;q^2)_inf sum_m q^{m(m+1)} (wq^4;q^2)_m/(q^2;q^2)_m`
/// versus `(-q;q)_inf sum_m (wq^4)^m/((-q^2;q^2)_m (q^2;q^2)_m)`.
pub fn heine_specialization_sides(
    q_order: usize,
    w_order: usize,
) -> (BivariateSeries, BivariateSeries) {
    let mut lhs = BivariateSeries::zero(q_order, w_order);
    let mut m = 0usize;
    while m * (m + 1) <= q_order {
        let mut t = BivariateSeries::one(q_order, w_order);
        for k in 0..m {
            if 4 + 2 * k <= q_order {
                t.mul_w_factor(4 + 2 * k, -1);
            }
        }
        let mut uni = TruncatedSeries::monomial(q_order, m * (m + 1), 1);
        for k in 1..=m {
            if 2 * k <= q_order {
                uni.div_factor(2 * k, -1);
            }
        }
        lhs = lhs.add(&t.mul(&BivariateSeries::from_univariate(&uni, w_order)));
        m += 1;
    }
    let mut w_inf = BivariateSeries::one(q_order, w_order);
    let mut e = 4;
    while e <= q_order {
        w_inf.mul_w_factor(e, -1);
        e += 2;
    }
    let odd = pochhammer(&PochhammerSpec::infinite(ProductSign::Minus, 1, 2), q_order);
    let lhs = lhs
        .mul(&w_inf.recip().unwrap())
        .mul(&BivariateSeries::from_univariate(&odd, w_order));

    let mut rhs = BivariateSeries::zero(q_order, w_order);
    let mut den = TruncatedSeries::one(q_order); // (-q^2;q^2)_m (q^2;q^2)_m
    let mut m = 0usize;
    while 4 * m <= q_order && m <= w_order {
        if m >= 1 && 2 * m <= q_order {
            den.mul_factor(2 * m, 1);
            den.mul_factor(2 * m, -1);
        }
        let mut inv = den.recip().unwrap();
        inv.shift_up(4 * m);
        rhs = rhs.add(&BivariateSeries::from_w_monomial(&inv, m, w_order));
        m += 1;
    }
    let distinct = pochhammer(&PochhammerSpec::infinite(ProductSign::Minus, 1, 1), q_order);
    let rhs = rhs.mul(&BivariateSeries::from_univariate(&distinct, w_order));
    (lhs, rhs)
}

/// Both sides of Andrews' transformation at the odd-max proof
/// specialization:
/// `sum_n (q^2;q^2)_n q^{2n}/((q;q^2)_n(-q^3;q^2)_n)` versus
/// `q(q^2;q^2)_inf/((q;q^2)_inf(-q^3;q^2)_inf) sum_m q^{m^2+3m}/(q^3;q^2)_{m+1}
///  + (1+q) sum_m (q;q^2)_{m+1}(-q)^m/(q^3;q^2)_{m+1}`.
pub fn andrews_specialization_sides(order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let mut lhs = TruncatedSeries::zero(order);
    let mut prod = TruncatedSeries::one(order);
    let mut n = 0usize;
    while 2 * n <= order {
        if n >= 1 {
            if 2 * n <= order {
                prod.mul_factor(2 * n, -1);
            }
            if 2 * n - 1 <= order {
                prod.div_factor(2 * n - 1, -1);
            }
            if 2 * n < order {
                prod.div_factor(2 * n + 1, 1);
            }
        }
        let mut t = prod.clone();
        t.shift_up(2 * n);
        lhs = lhs.add(&t);
        n += 1;
    }

    let mut sum1 = TruncatedSeries::zero(order);
    let mut den = TruncatedSeries::one(order); // 1/(q^3;q^2)_{m+1}
    let mut m = 0usize;
    while m * m + 3 * m <= order {
        if 2 * m + 3 <= order {
            den.div_factor(2 * m + 3, -1);
        }
        let mut t = den.clone();
        t.shift_up(m * m + 3 * m);
        sum1 = sum1.add(&t);
        m += 1;
    }
    let mut front = pochhammer(&PochhammerSpec::infinite(ProductSign::Plus, 2, 2), order);
    let mut e = 1;
    while e <= order {
        front.div_factor(e, -1); // /(q;q^2)_inf
        e += 2;
    }
    let mut e = 3;
    while e <= order {
        front.div_factor(e, 1); // /(-q^3;q^2)_inf
        e += 2;
    }
    let mut term1 = front.mul(&sum1);
    term1.shift_up(1);

    let mut sum2 = TruncatedSeries::zero(order);
    let mut ratio = TruncatedSeries::one(order); // (q;q^2)_{m+1}/(q^3;q^2)_{m+1} = (1-q)/(1-q^{2m+3})
    ratio.mul_factor(1, -1);
    let mut m = 0usize;
    while m <= order {
        let mut t = ratio.clone();
        if 2 * m + 3 <= order {
            t.div_factor(2 * m + 3, -1);
        }
        t.shift_up(m);
        if m % 2 == 1 {
            t = t.neg();
        }
        sum2 = sum2.add(&t);
        m += 1;
    }
    let mut term2 = sum2;
    term2.mul_factor(1, 1); // (1+q)

    (lhs, term1.add(&term2))
}

/// Dense i64 polynomial arithmetic, deliberately separate from the library's
/// big-integer series type. Good enough for low-order oracle expansions.
pub mod poly {
    /// Multiply truncated to `order`.
    pub fn mul(a: &[i64], b: &[i64], order: usize) -> Vec<i64> {
        let mut out = vec![0i64; order + 1];
        for (i, &x) in a.iter().enumerate().take(order + 1) {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate().take(order + 1 - i) {
                out[i + j] += x * y;
            }
        }
        out
    }

    /// Reciprocal of a unit-constant polynomial, truncated to `order`.
    pub fn recip(a: &[i64], order: usize) -> Vec<i64> {
        assert!(a[0] == 1 || a[0] == -1);
        let mut out = vec![0i64; order + 1];
        out[0] = a[0];
        for n in 1..=order {
            let mut acc = 0i64;
            for k in 1..=n {
                acc += a.get(k).copied().unwrap_or(0) * out[n - k];
            }
            out[n] = -acc * a[0];
        }
        out
    }

    /// `1 + c q^e` as a vector.
    pub fn factor(e: usize, c: i64, order: usize) -> Vec<i64> {
        let mut f = vec![0i64; order + 1];
        f[0] = 1;
        if e <= order {
            f[e] += c;
        }
        f
    }
}
