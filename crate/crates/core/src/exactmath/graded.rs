use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;

/// Indexed variable family a polynomial lives in.
///
/// * `X`: `x_2, x_3, ...` with `deg x_i = i - 2` (Boolean Kerov polynomials)
/// * `Y`: `y_0, y_1, ...` with `deg y_i = i` (dotted alpha reductions)
/// * `C`: `c_0, c_1, ...` with `deg c_i = i` (bubble generators of the center)
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VarFamily {
    X,
    Y,
    C,
}

impl VarFamily {
    pub fn weight(self, index: u32) -> i64 {
        match self {
            VarFamily::X => i64::from(index) - 2,
            VarFamily::Y | VarFamily::C => i64::from(index),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            VarFamily::X => "x",
            VarFamily::Y => "y",
            VarFamily::C => "c",
        }
    }
}

/// A monomial as a sorted multiset of variable indices; `[]` is the
/// constant monomial and `x_2^2 x_3` is `[2, 2, 3]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut indices: Vec<u32>) -> Self {
        indices.sort_unstable();
        Monomial(indices)
    }

    pub fn var(index: u32) -> Self {
        Monomial(vec![index])
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    /// Number of variable factors, with multiplicity.
    pub fn total_degree(&self) -> usize {
        self.0.len()
    }

    pub fn index_sum(&self) -> u64 {
        self.0.iter().map(|&i| u64::from(i)).sum()
    }

    pub fn weighted_degree(&self, family: VarFamily) -> i64 {
        self.0.iter().map(|&i| family.weight(i)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        // merge of two sorted lists
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `(index, exponent)` pairs in increasing index order.
    pub fn powers(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &i in &self.0 {
            match out.last_mut() {
                Some((j, e)) if *j == i => *e += 1,
                _ => out.push((i, 1)),
            }
        }
        out
    }

    fn write(&self, family: VarFamily, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = family.symbol();
        for (k, (i, e)) in self.powers().into_iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{sym}{i}")?;
            } else {
                write!(f, "{sym}{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial over one [`VarFamily`] with exact
/// rational coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedPolynomial {
    family: VarFamily,
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPolynomial {
    pub fn zero(family: VarFamily) -> Self {
        GradedPolynomial {
            family,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(family: VarFamily) -> Self {
        Self::constant(family, Rational::one())
    }

    pub fn constant(family: VarFamily, c: Rational) -> Self {
        Self::from_terms(family, [(Monomial::one(), c)])
    }

    pub fn var(family: VarFamily, index: u32) -> Self {
        Self::from_terms(family, [(Monomial::var(index), Rational::one())])
    }

    pub fn monomial(family: VarFamily, m: Monomial, c: Rational) -> Self {
        Self::from_terms(family, [(m, c)])
    }

    /// Sums duplicate monomials and drops zeros.
    pub fn from_terms<I>(family: VarFamily, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(family);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn family(&self) -> VarFamily {
        self.family
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in storage order (ascending index sequence).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in canonical output order: weighted degree descending, then
    /// index sequence descending.
    pub fn ordered_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| self.output_cmp(a, b));
        v
    }

    fn output_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        b.weighted_degree(self.family)
            .cmp(&a.weighted_degree(self.family))
            .then_with(|| b.cmp(a))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.family);
        }
        GradedPolynomial {
            family: self.family,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Highest weighted degree among the terms; `None` for zero.
    pub fn weighted_degree(&self) -> Option<i64> {
        self.terms
            .keys()
            .map(|m| m.weighted_degree(self.family))
            .max()
    }

    /// Set of variable indices that occur.
    pub fn variables(&self) -> BTreeSet<u32> {
        self.terms
            .keys()
            .flat_map(|m| m.indices().iter().copied())
            .collect()
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Evaluates with `value(i)` substituted for the variable of index `i`.
    pub fn evaluate<F>(&self, mut value: F) -> Rational
    where
        F: FnMut(u32) -> Rational,
    {
        let mut cache: BTreeMap<u32, Rational> = BTreeMap::new();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &i in m.indices() {
                let v = cache.entry(i).or_insert_with(|| value(i));
                t *= &*v;
            }
            total += t;
        }
        total
    }

    /// Substitutes `var_i -> sign(i) * target_var_{index(i)}` in another
    /// family. Used for `c_j -> -y_j` and `y_j -> x_{j+2}`.
    pub fn relabel<F>(&self, target: VarFamily, mut map: F) -> Self
    where
        F: FnMut(u32) -> (u32, bool),
    {
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut negate = false;
            let mut idx = Vec::with_capacity(m.total_degree());
            for &i in m.indices() {
                let (j, neg) = map(i);
                negate ^= neg;
                idx.push(j);
            }
            out.add_term(Monomial::new(idx), if negate { -c } else { c.clone() });
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.family), |acc, _| &acc * self)
    }
}

/// `x_k -> (-1)^k x_k`: each coefficient is multiplied by `(-1)` raised to
/// the index sum of its monomial.
pub fn apply_iota(p: &GradedPolynomial) -> GradedPolynomial {
    GradedPolynomial {
        family: p.family,
        terms: p
            .terms
            .iter()
            .map(|(m, c)| {
                let v = if m.index_sum() % 2 == 1 {
                    -c
                } else {
                    c.clone()
                };
                (m.clone(), v)
            })
            .collect(),
    }
}

impl Add for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        assert_eq!(
            self.family, rhs.family,
            "adding polynomials of different families"
        );
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn sub(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        assert_eq!(
            self.family, rhs.family,
            "subtracting polynomials of different families"
        );
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        assert_eq!(
            self.family, rhs.family,
            "multiplying polynomials of different families"
        );
        let mut out = GradedPolynomial::zero(self.family);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.ordered_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k == 0, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            if m.total_degree() == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                m.write(self.family, f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn x(i: u32) -> GradedPolynomial {
        GradedPolynomial::var(VarFamily::X, i)
    }

    #[test]
    fn iota_examples() {
        assert_eq!(apply_iota(&x(2)), x(2));
        assert_eq!(apply_iota(&x(3)), -&x(3));
        let p = &(&x(2) * &x(2)) + &x(2);
        assert_eq!(apply_iota(&p), p);
    }

    #[test]
    fn display_order_and_zero() {
        assert_eq!(GradedPolynomial::zero(VarFamily::X).to_string(), "0");
        let p = &(&x(4) + &(&x(2) * &x(2))) + &x(2);
        assert_eq!(p.to_string(), "x4 + x2^2 + x2");
        let q = &(&x(3).scale(&int(3)) - &GradedPolynomial::one(VarFamily::X)) + &(&x(2) * &x(3));
        assert_eq!(q.to_string(), "3*x3 + x2*x3 - 1");
    }

    #[test]
    fn weighted_degree_and_support() {
        let p = &(&x(4) * &x(2)) + &x(3);
        assert_eq!(p.weighted_degree(), Some(2));
        assert_eq!(p.variables().into_iter().collect::<Vec<_>>(), vec![2, 3, 4]);
        let y = GradedPolynomial::var(VarFamily::Y, 2);
        assert_eq!(y.weighted_degree(), Some(2));
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = &x(3) - &x(3);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn relabel_and_evaluate() {
        let c = &GradedPolynomial::var(VarFamily::C, 0) * &GradedPolynomial::var(VarFamily::C, 1);
        let y = c.relabel(VarFamily::Y, |i| (i, true));
        assert_eq!(y.coeff(&Monomial::new(vec![0, 1])), int(1));
        let v = y.evaluate(|i| int(i as i64 + 2));
        assert_eq!(v, int(6));
    }
}
