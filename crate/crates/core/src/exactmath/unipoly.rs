use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;

/// Dense univariate polynomial; `coeffs[i]` multiplies `z^i`.
///
/// Trailing zeros are never stored, so the zero polynomial has no
/// coefficients and [`UniPoly::degree`] returns `None` for it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monic polynomial `z`.
    pub fn z() -> Self {
        UniPoly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `prod (z - r)` over the given roots.
    pub fn from_roots<I>(roots: I) -> Self
    where
        I: IntoIterator<Item = Rational>,
    {
        roots.into_iter().fold(UniPoly::one(), |acc, r| {
            &acc * &UniPoly::new(vec![-r, Rational::one()])
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * z + c)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}z", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}z^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(UniPoly::new(vec![int(0), int(0)]).degree(), None);
        assert_eq!(UniPoly::one().degree(), Some(0));
    }

    #[test]
    fn roots_product() {
        let p = UniPoly::from_roots([int(-1), int(1)]);
        assert_eq!(p, UniPoly::new(vec![int(-1), int(0), int(1)]));
        assert!(p.is_monic());
        assert_eq!(p.to_string(), "z^2 - 1");
        assert_eq!(p.eval(&int(3)), int(8));
    }

    #[test]
    fn arithmetic() {
        let a = UniPoly::new(vec![int(1), int(2)]);
        let b = UniPoly::new(vec![int(-1), int(0), int(3)]);
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!((&a * &b).degree(), Some(3));
        assert!((&a - &a).is_zero());
        assert_eq!((-&a).coeff(1), int(-2));
    }
}
