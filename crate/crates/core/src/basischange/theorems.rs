use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::basis::MonomialBasis;
use super::evaluation::{solve_over_diagrams, EvaluationReport};
use crate::combinatorics::{partitions_up_to, Partition};
use crate::error::{Error, Result};
use crate::exactmath::{int, to_integer, GradedPolynomial, Rational, VarFamily};
use crate::observables::{boolean_cumulants, normalized_character};

/// Which sign the `x_j` variables are evaluated with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CumulantSign {
    /// `x_j ↦ B̂_j = -B_j`, the correct convention.
    #[default]
    Twisted,
    /// `x_j ↦ B_j`; only useful to show the tests notice a sign error.
    Plain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChangeOptions {
    pub sign: CumulantSign,
    /// Maximal number of variable factors per monomial; `None` means `|π|`.
    pub degree_cap: Option<usize>,
    /// Number of extra diagram sizes used only for verification.
    pub holdout_sizes: u32,
    /// Give up (rank deficiency) once diagrams of this size are exhausted.
    pub max_size: u32,
    /// Restrict the character support of a Boolean cumulant expansion to
    /// the predicted parity class.
    pub restrict_parity: bool,
}

impl Default for BasisChangeOptions {
    fn default() -> Self {
        BasisChangeOptions {
            sign: CumulantSign::Twisted,
            degree_cap: None,
            holdout_sizes: 2,
            max_size: 24,
            restrict_parity: true,
        }
    }
}

/// `P_π` with the evaluation bookkeeping behind it.
#[derive(Clone, Debug)]
pub struct KerovSolution {
    pub polynomial: GradedPolynomial,
    pub report: EvaluationReport,
}

/// `P_π` with `(-1)^ℓ(π) Σ_π = P_π(B̂_2, B̂_3, ...)` on all diagrams.
pub fn boolean_kerov_polynomial(pi: &Partition) -> Result<GradedPolynomial> {
    Ok(boolean_kerov_polynomial_with(pi, &BasisChangeOptions::default())?.polynomial)
}

pub fn boolean_kerov_polynomial_with(
    pi: &Partition,
    opts: &BasisChangeOptions,
) -> Result<KerovSolution> {
    if pi.is_empty() {
        return Err(Error::InvalidInput("P_π needs |π| >= 1".into()));
    }
    let d = pi.reflection_length();
    let cap = opts.degree_cap.unwrap_or(pi.size() as usize);
    let basis = MonomialBasis::new(d, cap, None);
    let top = basis.max_index() as usize;
    let sign = if pi.len().is_multiple_of(2) { 1 } else { -1 };
    let (coeffs, report) =
        solve_over_diagrams(basis.len(), opts.holdout_sizes, opts.max_size, |lambda| {
            let b = boolean_cumulants(lambda, top);
            let x = |j: u32| -> Rational {
                let v = b.get(j as usize).clone();
                match opts.sign {
                    CumulantSign::Twisted => -v,
                    CumulantSign::Plain => v,
                }
            };
            let row = basis
                .monomials()
                .iter()
                .map(|m| m.indices().iter().map(|&j| x(j)).product())
                .collect();
            let rhs = Rational::from_integer(normalized_character(pi, lambda) * sign);
            (row, rhs)
        })?;
    let polynomial =
        GradedPolynomial::from_terms(VarFamily::X, basis.monomials().iter().cloned().zip(coeffs));
    Ok(KerovSolution { polynomial, report })
}

/// Candidate characters in the expansion of `B_k`: `|π| - ℓ(π) <= k - 2`,
/// `|π| <= k - 1`, and with `parity`, `|π| - ℓ(π) ≡ k (mod 2)`. The empty
/// partition (`Σ_∅ = 1`) is a candidate too.
pub fn boolean_support_candidates(k: u32, parity: bool) -> Vec<Partition> {
    partitions_up_to(k - 1)
        .into_iter()
        .filter(|p| p.reflection_length() + 2 <= k)
        .filter(|p| !parity || (p.reflection_length() + k).is_multiple_of(2))
        .collect()
}

/// Exact coefficients `m^k_π` of `B_k = Σ_π m^k_π Σ_π`, possibly zero or
/// non-integral if something is wrong upstream.
#[derive(Clone, Debug)]
pub struct BooleanSolution {
    pub coefficients: BTreeMap<Partition, Rational>,
    pub report: EvaluationReport,
}

pub fn boolean_in_characters_with(k: u32, opts: &BasisChangeOptions) -> Result<BooleanSolution> {
    if k < 2 {
        return Err(Error::InvalidInput(format!("k = {k}, need k >= 2")));
    }
    let support = boolean_support_candidates(k, opts.restrict_parity);
    let (coeffs, report) =
        solve_over_diagrams(support.len(), opts.holdout_sizes, opts.max_size, |lambda| {
            let row = support
                .iter()
                .map(|p| Rational::from_integer(normalized_character(p, lambda)))
                .collect();
            let rhs = boolean_cumulants(lambda, k as usize)
                .get(k as usize)
                .clone();
            (row, rhs)
        })?;
    let coefficients = support
        .into_iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(BooleanSolution {
        coefficients,
        report,
    })
}

/// `m^k_π` for the nonzero coefficients; non-integral values are an error.
pub fn boolean_in_characters(k: u32) -> Result<BTreeMap<Partition, BigInt>> {
    let sol = boolean_in_characters_with(k, &BasisChangeOptions::default())?;
    sol.coefficients
        .into_iter()
        .map(|(p, c)| {
            to_integer(&c).map(|v| (p.clone(), v)).ok_or_else(|| {
                Error::InvariantViolation(format!("m^{k}_{p} = {c} is not an integer"))
            })
        })
        .collect()
}

/// Character-table order used for display: larger `|π|` first, then
/// reverse lexicographic.
pub fn display_order(a: &Partition, b: &Partition) -> std::cmp::Ordering {
    b.size().cmp(&a.size()).then_with(|| b.cmp(a))
}

/// Evaluates `Σ_π c_π Σ_π(λ)`.
pub fn evaluate_character_combination(
    coeffs: &BTreeMap<Partition, BigInt>,
    lambda: &Partition,
) -> Rational {
    coeffs
        .iter()
        .map(|(p, c)| Rational::from_integer(c * normalized_character(p, lambda)))
        .fold(int(0), |a, b| a + b)
}
