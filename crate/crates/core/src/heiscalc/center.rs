use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::combinatorics::Partition;
use crate::exactmath::{GradedPolynomial, Monomial, Rational, VarFamily};
use crate::observables::boolean_cumulants;

/// Element of the center: a polynomial in the bubbles `c_0, c_1, ...`
/// (`c_k` is the `k`-dotted bubble, of degree `k`). The ring is free, so
/// the polynomial is the normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CenterElement(GradedPolynomial);

impl CenterElement {
    pub fn zero() -> Self {
        CenterElement(GradedPolynomial::zero(VarFamily::C))
    }

    pub fn one() -> Self {
        CenterElement(GradedPolynomial::one(VarFamily::C))
    }

    pub fn c(k: u32) -> Self {
        CenterElement(GradedPolynomial::var(VarFamily::C, k))
    }

    pub fn integer(v: impl Into<BigInt>) -> Self {
        CenterElement(GradedPolynomial::constant(
            VarFamily::C,
            Rational::from_integer(v.into()),
        ))
    }

    /// Product of bubbles with the given dot counts.
    pub fn bubbles(dots: &[u32]) -> Self {
        CenterElement(GradedPolynomial::monomial(
            VarFamily::C,
            Monomial::new(dots.to_vec()),
            Rational::from_integer(1.into()),
        ))
    }

    pub fn from_polynomial(p: GradedPolynomial) -> Self {
        assert_eq!(
            p.family(),
            VarFamily::C,
            "center elements live in the c-family"
        );
        CenterElement(p)
    }

    pub fn polynomial(&self) -> &GradedPolynomial {
        &self.0
    }

    pub fn into_polynomial(self) -> GradedPolynomial {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        CenterElement(self.0.scale(&Rational::from_integer(c.clone())))
    }

    /// `(-1)^sign_power · p(c_j ↦ -y_j)`: the y-polynomial attached to a
    /// center element.
    pub fn to_y_polynomial(&self, sign_power: usize) -> GradedPolynomial {
        let p = self.0.relabel(VarFamily::Y, |i| (i, true));
        if sign_power % 2 == 1 {
            -&p
        } else {
            p
        }
    }
}

/// Substitutes `c_k ↦ B_(k+2)(λ)`.
pub fn evaluate_center(e: &CenterElement, lambda: &Partition) -> Rational {
    let top = e.0.variables().last().map_or(0, |&k| k as usize + 2);
    let b = boolean_cumulants(lambda, top.max(1));
    e.0.evaluate(|k| b.get(k as usize + 2).clone())
}

impl fmt::Display for CenterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Add for &CenterElement {
    type Output = CenterElement;
    fn add(self, rhs: &CenterElement) -> CenterElement {
        CenterElement(&self.0 + &rhs.0)
    }
}

impl Sub for &CenterElement {
    type Output = CenterElement;
    fn sub(self, rhs: &CenterElement) -> CenterElement {
        CenterElement(&self.0 - &rhs.0)
    }
}

impl Mul for &CenterElement {
    type Output = CenterElement;
    fn mul(self, rhs: &CenterElement) -> CenterElement {
        CenterElement(&self.0 * &rhs.0)
    }
}

impl Neg for &CenterElement {
    type Output = CenterElement;
    fn neg(self) -> CenterElement {
        CenterElement(-&self.0)
    }
}
