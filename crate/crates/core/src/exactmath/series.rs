//! Truncated formal power series with exact coefficients.
//!
//! A series is a coefficient slice `s` standing for `sum_j s[j] w^j`.

use num_traits::{One, Zero};

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Expands `numer / denom` around `z = infinity`.
///
/// Returns `a_0 ..= a_order` with `numer/denom = sum_j a_j z^(1-j)`, so
/// `a_0` is the coefficient of `z`, `a_1` of `z^0`, `a_2` of `z^-1`, and so
/// on. The denominator must be monic and `deg numer <= deg denom + 1`;
/// this covers both a Cauchy transform (`deg numer = deg denom - 1`) and
/// its reciprocal (`deg numer = deg denom + 1`).
pub fn series_expand_at_infinity(
    numer: &UniPoly,
    denom: &UniPoly,
    order: usize,
) -> Result<Vec<Rational>> {
    let d = denom
        .degree()
        .ok_or_else(|| Error::InvalidInput("zero denominator".into()))?;
    if !denom.is_monic() {
        return Err(Error::InvalidInput(format!(
            "denominator {denom} is not monic"
        )));
    }
    if let Some(e) = numer.degree() {
        if e > d + 1 {
            return Err(Error::InvalidInput(format!(
                "numerator degree {e} exceeds denominator degree {d} + 1"
            )));
        }
    }
    // With w = 1/z: numer/denom = z * N(w) / D(w), where
    // N(w) = w^(d+1) numer(1/w) and D(w) = w^d denom(1/w), D(0) = 1.
    let len = order + 1;
    let mut n_series = vec![Rational::zero(); len];
    for (i, c) in numer.coeffs().iter().enumerate() {
        let pow = d + 1 - i;
        if pow < len {
            n_series[pow] = c.clone();
        }
    }
    let mut d_series = vec![Rational::zero(); len];
    for (i, c) in denom.coeffs().iter().enumerate() {
        let pow = d - i;
        if pow < len {
            d_series[pow] = c.clone();
        }
    }
    Ok(series_div_unit(&n_series, &d_series, len))
}

/// Quotient of two series when the divisor has constant term 1.
fn series_div_unit(num: &[Rational], den: &[Rational], len: usize) -> Vec<Rational> {
    debug_assert!(den.first().is_some_and(One::is_one));
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    for j in 0..len {
        let mut acc = num.get(j).cloned().unwrap_or_else(Rational::zero);
        for i in 1..=j.min(den.len().saturating_sub(1)) {
            if !den[i].is_zero() {
                acc -= &den[i] * &out[j - i];
            }
        }
        out.push(acc);
    }
    out
}

/// Product of two series truncated to `len` coefficients.
pub fn series_mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Multiplicative inverse of a series with nonzero constant term.
pub fn series_reciprocal(a: &[Rational], len: usize) -> Result<Vec<Rational>> {
    let a0 = a
        .first()
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::InvalidInput("series has zero constant term".into()))?;
    let inv0 = a0.recip();
    let normalized: Vec<Rational> = a.iter().map(|c| c * &inv0).collect();
    let mut one = vec![Rational::zero(); len];
    if len > 0 {
        one[0] = Rational::one();
    }
    Ok(series_div_unit(&one, &normalized, len)
        .into_iter()
        .map(|c| c * &inv0)
        .collect())
}

/// Compositional inverse of `f = f_1 w + f_2 w^2 + ...` (`f_0 = 0`,
/// `f_1 != 0`), solved one order at a time: returns `g_0 ..= g_order` with
/// `f(g(w)) = w + O(w^(order+1))`.
pub fn series_reversion(f: &[Rational], order: usize) -> Result<Vec<Rational>> {
    if f.first().is_some_and(|c| !c.is_zero()) {
        return Err(Error::InvalidInput(
            "series reversion needs a zero constant term".into(),
        ));
    }
    let f1 = f
        .get(1)
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::InvalidInput("series reversion needs f_1 != 0".into()))?;
    let len = order + 1;
    let mut g = vec![Rational::zero(); len];
    if order >= 1 {
        g[1] = f1.recip();
    }
    for n in 2..len {
        // coefficient of w^n in f(g) with g_n still zero; g_n enters only
        // through f_1 g_n.
        let mut power = g.clone(); // g^1
        let mut coeff_n = Rational::zero();
        for fk in f.iter().take(n + 1).skip(1) {
            if !fk.is_zero() {
                coeff_n += fk * &power[n];
            }
            power = series_mul(&power, &g, len);
        }
        g[n] = -coeff_n / f1;
    }
    Ok(g)
}
