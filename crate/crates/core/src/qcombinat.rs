//! q-integers, Gaussian binomials at `w`, composition sums and the power
//! series that generates them.
//!
//! Three independent routes to the same numbers live here:
//!
//! * [`composition_sum`] enumerates compositions directly,
//! * [`beta_coefficients`] multiplies truncated geometric series,
//! * [`gaussian_binomial`] runs the division-free q-Pascal recurrence,
//!
//! with [`product_coefficients`] and [`gaussian_binomial_product_form`] as the
//! product-formula cross-checks that need inverses.

use crate::check::CaseResult;
use crate::cyclotomic::{CycContext, CycScalar};
use crate::error::{Error, Result};

/// `(m)_w = 1 + w + ... + w^(m-1)`; `(0)_w = 0`.
pub fn q_integer(ctx: &CycContext, m: usize) -> CycScalar {
    let mut acc = ctx.zero();
    for j in 0..m {
        acc += ctx.omega_pow(j as i64);
    }
    acc
}

/// Rows `0..=max_m` of the q-Pascal triangle at `w`.
///
/// `rows[m][k]` is `C_w(m, k)`, built from
/// `C(m, k) = C(m-1, k-1) + w^k C(m-1, k)`.
pub fn gaussian_binomial_table(ctx: &CycContext, max_m: usize) -> Vec<Vec<CycScalar>> {
    let mut rows: Vec<Vec<CycScalar>> = Vec::with_capacity(max_m + 1);
    rows.push(vec![ctx.one()]);
    for m in 1..=max_m {
        let prev = &rows[m - 1];
        let mut row = Vec::with_capacity(m + 1);
        row.push(ctx.one());
        for k in 1..m {
            row.push(&prev[k - 1] + &(ctx.omega_pow(k as i64) * &prev[k]));
        }
        row.push(ctx.one());
        rows.push(row);
    }
    rows
}

/// `C_w(m, k)` by the q-Pascal recurrence; zero when `k > m` or `k < 0`.
pub fn gaussian_binomial(ctx: &CycContext, m: usize, k: i64) -> CycScalar {
    if k < 0 || k as usize > m {
        return ctx.zero();
    }
    let k = k as usize;
    // only the band of width k+1 is needed
    let mut row = vec![ctx.zero(); k + 1];
    row[0] = ctx.one();
    for i in 1..=m {
        for j in (1..=k.min(i)).rev() {
            let shifted = ctx.omega_pow(j as i64) * &row[j];
            row[j] = &row[j - 1] + &shifted;
        }
    }
    row.swap_remove(k)
}

/// `prod_{j=1}^{k} (1 - w^(s+j)) / (1 - w^j)`, which is `C_w(k+s, k)`.
///
/// Fails when `k >= n`, where some `1 - w^j` in the denominator is zero.
pub fn gaussian_binomial_product_form(ctx: &CycContext, k: usize, s: usize) -> Result<CycScalar> {
    let n = ctx.order();
    if k >= n {
        return Err(Error::DenominatorVanishes { k, n });
    }
    let mut num = ctx.one();
    let mut den = ctx.one();
    for j in 1..=k {
        num *= ctx.one() - ctx.omega_pow((s + j) as i64);
        den *= ctx.one() - ctx.omega_pow(j as i64);
    }
    num.try_div(&den)
}

/// Lexicographic enumeration of the compositions of `total` into `parts`
/// nonnegative parts.
///
/// The first composition is `(0, ..., 0, total)` and the last is
/// `(total, 0, ..., 0)`. There are `C(total + parts - 1, parts - 1)` of them.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Vec<usize>,
    done: bool,
}

impl Compositions {
    pub fn new(total: usize, parts: usize) -> Self {
        if parts == 0 {
            return Self { current: Vec::new(), done: total != 0 };
        }
        let mut current = vec![0; parts];
        current[parts - 1] = total;
        Self { current, done: false }
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let p = self.current.len();
        // find the rightmost position before the last with something to its right
        let mut advanced = false;
        if p >= 2 {
            let mut i = p - 2;
            loop {
                let tail: usize = self.current[i + 1..].iter().sum();
                if tail > 0 {
                    self.current[i] += 1;
                    for c in &mut self.current[i + 1..] {
                        *c = 0;
                    }
                    self.current[p - 1] = tail - 1;
                    advanced = true;
                    break;
                }
                if i == 0 {
                    break;
                }
                i -= 1;
            }
        }
        if !advanced {
            self.done = true;
        }
        Some(out)
    }
}

/// Exponent `sum_{j>=2} i_j (j - 1)` attached to a composition `(i_1, i_2, ...)`.
pub fn composition_weight(parts: &[usize]) -> usize {
    parts.iter().enumerate().map(|(j, &i)| i * j).sum()
}

/// `sum w^{sum_{j>=2} i_j (j-1)}` over compositions of `k` into `parts` parts.
///
/// Weights are accumulated as an exponent histogram mod `n` and folded into a
/// scalar once at the end.
pub fn composition_sum_parts(ctx: &CycContext, k: usize, parts: usize) -> CycScalar {
    let n = ctx.order();
    let mut hist = vec![0u64; n];
    for c in Compositions::new(k, parts) {
        hist[composition_weight(&c) % n] += 1;
    }
    ctx.from_omega_histogram(&hist)
}

/// The left side of the main identity: compositions of `k` into `s + 1` parts.
pub fn composition_sum(ctx: &CycContext, k: usize, s: usize) -> CycScalar {
    composition_sum_parts(ctx, k, s + 1)
}

/// A power series in `z` over `Q(w)`, truncated after `z^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    ctx: CycContext,
    coeffs: Vec<CycScalar>,
}

impl TruncatedSeries {
    pub fn zero(ctx: &CycContext, order: usize) -> Self {
        Self { ctx: ctx.clone(), coeffs: vec![ctx.zero(); order + 1] }
    }

    pub fn one(ctx: &CycContext, order: usize) -> Self {
        let mut s = Self::zero(ctx, order);
        s.coeffs[0] = ctx.one();
        s
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn from_coeffs(ctx: &CycContext, order: usize, coeffs: Vec<CycScalar>) -> Self {
        let mut s = Self::zero(ctx, order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// `1 / (1 - r z) = sum r^k z^k`.
    pub fn geometric(ctx: &CycContext, order: usize, ratio: &CycScalar) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut p = ctx.one();
        for _ in 0..=order {
            coeffs.push(p.clone());
            p = &p * ratio;
        }
        Self { ctx: ctx.clone(), coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[CycScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &CycScalar {
        &self.coeffs[k]
    }

    pub fn into_coeffs(self) -> Vec<CycScalar> {
        self.coeffs
    }

    fn check(&self, other: &Self) -> Result<usize> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(self.order().min(other.order()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let k = self.check(other)?;
        let coeffs = (0..=k).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        Ok(Self { ctx: self.ctx.clone(), coeffs })
    }

    /// Cauchy product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let order = self.check(other)?;
        let mut out = Self::zero(&self.ctx, order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                out.coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        Ok(out)
    }

    /// Truncated inverse; needs an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0].inverse()?;
        let order = self.order();
        let mut h = Self::zero(&self.ctx, order);
        h.coeffs[0] = c0_inv.clone();
        for k in 1..=order {
            let mut acc = self.ctx.zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &h.coeffs[k - i];
            }
            h.coeffs[k] = -(acc * &c0_inv);
        }
        Ok(h)
    }
}

/// Default truncation degree: `2n - 2` covers every `(k, s)` with `k, s < n`.
pub fn default_truncation(n: usize) -> usize {
    2 * n - 2
}

/// The truncated series of `1 / ((1 - z)(1 - z w) ... (1 - z w^s))`.
pub fn beta_series(ctx: &CycContext, s: usize, order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(ctx, order);
    for l in 0..=s {
        let factor = TruncatedSeries::geometric(ctx, order, &ctx.omega_pow(l as i64));
        acc = acc.mul(&factor).expect("shared context");
    }
    acc
}

/// `beta_0, ..., beta_order` for the product of `s + 1` geometric series.
pub fn beta_coefficients(ctx: &CycContext, s: usize, order: usize) -> Vec<CycScalar> {
    beta_series(ctx, s, order).into_coeffs()
}

/// The explicit coefficients `prod_{j=1}^{k} (1 - w^(s+j)) / (1 - w^j)` for
/// `k = 0..=order`. Requires `order < n`.
pub fn product_coefficients(ctx: &CycContext, s: usize, order: usize) -> Result<Vec<CycScalar>> {
    let n = ctx.order();
    if order >= n {
        return Err(Error::DenominatorVanishes { k: order, n });
    }
    let mut out = Vec::with_capacity(order + 1);
    let mut cur = ctx.one();
    out.push(cur.clone());
    for j in 1..=order {
        let num = ctx.one() - ctx.omega_pow((s + j) as i64);
        let den = ctx.one() - ctx.omega_pow(j as i64);
        cur = (cur * num).try_div(&den)?;
        out.push(cur.clone());
    }
    Ok(out)
}

/// `composition_sum(k, s)`, the series coefficient `beta_k` for `s + 1`
/// factors, and the explicit product coefficient, for all `0 <= k, s < n`.
/// When `k + s < n` the Gaussian binomial `C_w(k+s, k)` joins the comparison.
pub fn three_way_oracle_check(ctx: &CycContext) -> Vec<CaseResult> {
    let n = ctx.order();
    let mut out = Vec::with_capacity(n * n);
    let beta: Vec<_> = (0..n).map(|s| beta_coefficients(ctx, s, n - 1)).collect();
    let prod: Vec<_> = (0..n).map(|s| product_coefficients(ctx, s, n - 1).expect("order below n")).collect();
    for k in 0..n {
        for s in 0..n {
            let (beta, prod) = (&beta[s], &prod[s]);
            let lhs = composition_sum(ctx, k, s);
            let mut pass = lhs == beta[k] && lhs == prod[k];
            if k + s < n {
                pass &= lhs == gaussian_binomial(ctx, k + s, k as i64);
            }
            out.push(
                CaseResult::new(format!("oracle/n={n}/k={k}/s={s}"), pass)
                    .param("k", k)
                    .param("s", s)
                    .param("value", lhs.render("w"))
                    .detail_on_failure(|| {
                        format!("series = {}; product = {}", beta[k].render("w"), prod[k].render("w"))
                    }),
            );
        }
    }
    out
}

/// The product form against the recurrence wherever the product is defined.
pub fn product_form_check(ctx: &CycContext) -> Vec<CaseResult> {
    let n = ctx.order();
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        for s in 0..n {
            let prod = gaussian_binomial_product_form(ctx, k, s).expect("k below n");
            let rec = gaussian_binomial(ctx, k + s, k as i64);
            out.push(CaseResult::new(format!("qbinom_product/n={n}/k={k}/s={s}"), prod == rec));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize) -> CycContext {
        CycContext::new(n).unwrap()
    }

    fn binom(a: usize, b: usize) -> usize {
        (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
    }

    #[test]
    fn q_integer_examples() {
        for n in 2..=8 {
            let c = ctx(n);
            assert!(q_integer(&c, 0).is_zero());
            assert!(q_integer(&c, 1).is_one());
            assert!(q_integer(&c, n).is_zero());
        }
    }

    #[test]
    fn gaussian_binomial_examples() {
        for n in 2..=7 {
            let c = ctx(n);
            for m in 0..10 {
                assert!(gaussian_binomial(&c, m, 0).is_one());
                assert!(gaussian_binomial(&c, m, m as i64).is_one());
                assert!(gaussian_binomial(&c, m, m as i64 + 1).is_zero());
                assert!(gaussian_binomial(&c, m, -1).is_zero());
            }
            assert_eq!(gaussian_binomial(&c, 2, 1), c.one() + c.omega());
            let w = |k| c.omega_pow(k);
            let expect = (c.one() + w(2)) * (c.one() + w(1) + w(2));
            assert_eq!(gaussian_binomial(&c, 4, 2), expect, "n={n}");
        }
        assert!(gaussian_binomial(&ctx(2), 2, 1).is_zero());
    }

    #[test]
    fn table_matches_banded_recurrence() {
        let c = ctx(6);
        let t = gaussian_binomial_table(&c, 12);
        for (m, row) in t.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(*v, gaussian_binomial(&c, m, k as i64));
            }
        }
    }

    #[test]
    fn pascal_recurrences_and_symmetry() {
        for n in 2..=7 {
            let c = ctx(n);
            let t = gaussian_binomial_table(&c, 14);
            for m in 1..=14 {
                for k in 1..m {
                    let first = &t[m - 1][k - 1] + &(c.omega_pow(k as i64) * &t[m - 1][k]);
                    let second =
                        c.omega_pow((m - k) as i64) * &t[m - 1][k - 1] + &t[m - 1][k];
                    assert_eq!(t[m][k], first);
                    assert_eq!(t[m][k], second, "n={n} m={m} k={k}");
                    assert_eq!(t[m][k], t[m][m - k]);
                }
            }
        }
    }

    #[test]
    fn product_form_examples() {
        let c3 = ctx(3);
        assert!(gaussian_binomial_product_form(&c3, 0, 5).unwrap().is_one());
        assert_eq!(
            gaussian_binomial_product_form(&c3, 1, 1).unwrap(),
            c3.one() + c3.omega()
        );
        assert!(gaussian_binomial_product_form(&ctx(2), 1, 1).unwrap().is_zero());
        assert_eq!(
            gaussian_binomial_product_form(&c3, 3, 0),
            Err(Error::DenominatorVanishes { k: 3, n: 3 })
        );
        for n in 2..=7 {
            let c = ctx(n);
            for k in 0..n {
                for s in 0..2 * n {
                    assert_eq!(
                        gaussian_binomial_product_form(&c, k, s).unwrap(),
                        gaussian_binomial(&c, k + s, k as i64)
                    );
                }
            }
        }
    }

    #[test]
    fn composition_enumeration_is_lexicographic_and_complete() {
        let all: Vec<_> = Compositions::new(2, 3).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 0, 2],
                vec![0, 1, 1],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![1, 1, 0],
                vec![2, 0, 0],
            ]
        );
        for total in 0..7 {
            for parts in 1..6 {
                let v: Vec<_> = Compositions::new(total, parts).collect();
                assert_eq!(v.len(), binom(total + parts - 1, parts - 1));
                assert!(v.windows(2).all(|w| w[0] < w[1]));
                assert!(v.iter().all(|c| c.iter().sum::<usize>() == total));
            }
        }
        assert_eq!(Compositions::new(0, 0).count(), 1);
        assert_eq!(Compositions::new(3, 0).count(), 0);
    }

    #[test]
    fn composition_sum_examples() {
        for n in 2..=6 {
            let c = ctx(n);
            for s in 0..n {
                assert!(composition_sum(&c, 0, s).is_one());
            }
            for k in 0..n {
                assert!(composition_sum(&c, k, 0).is_one());
            }
        }
        let c3 = ctx(3);
        assert_eq!(composition_sum(&c3, 1, 1), c3.one() + c3.omega());
        assert!(composition_sum(&ctx(2), 1, 1).is_zero());
    }

    #[test]
    fn series_examples() {
        let c3 = ctx(3);
        for s in 0..4 {
            assert!(beta_coefficients(&c3, s, 4)[0].is_one());
        }
        assert!(beta_coefficients(&c3, 0, 6).iter().all(CycScalar::is_one));
        assert_eq!(beta_coefficients(&c3, 1, 2)[1], c3.one() + c3.omega());
        assert_eq!(default_truncation(5), 8);
    }

    #[test]
    fn series_inverse_matches_geometric_product() {
        let c = ctx(5);
        let order = default_truncation(5);
        // prod (1 - z w^l), l = 0..=2, as a polynomial series
        let mut poly = TruncatedSeries::one(&c, order);
        for l in 0..=2 {
            let f = TruncatedSeries::from_coeffs(&c, order, vec![c.one(), -c.omega_pow(l)]);
            poly = poly.mul(&f).unwrap();
        }
        let inv = poly.inverse().unwrap();
        assert_eq!(inv, beta_series(&c, 2, order));
        assert_eq!(poly.mul(&inv).unwrap(), TruncatedSeries::one(&c, order));
    }

    #[test]
    fn truncation_is_prefix_stable() {
        let c = ctx(4);
        let long = beta_coefficients(&c, 3, 9);
        let short = beta_coefficients(&c, 3, 4);
        assert_eq!(&long[..5], &short[..]);
    }

    #[test]
    fn product_coefficient_examples() {
        let c3 = ctx(3);
        assert!(product_coefficients(&c3, 4, 2).unwrap()[0].is_one());
        assert_eq!(product_coefficients(&c3, 1, 1).unwrap()[1], c3.one() + c3.omega());
        assert!(product_coefficients(&ctx(2), 1, 1).unwrap()[1].is_zero());
        assert_eq!(
            product_coefficients(&c3, 0, 3),
            Err(Error::DenominatorVanishes { k: 3, n: 3 })
        );
    }
}
