use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use super::theorems::{
    boolean_in_characters_with, boolean_kerov_polynomial_with, BasisChangeOptions,
};
use crate::combinatorics::{partitions_up_to, Partition};
use crate::exactmath::{apply_iota, to_integer, GradedPolynomial};

/// One named property check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub group: String,
    pub subject: String,
    pub property: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Solved tables: `P_π` per `π` and `m^k_π` per `k`.
#[derive(Clone, Debug, Default)]
pub struct ExpansionTable {
    pub kerov: BTreeMap<Partition, GradedPolynomial>,
    pub boolean: BTreeMap<u32, BTreeMap<Partition, BigInt>>,
}

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub table: ExpansionTable,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// `(group, passed, total)` per check group, in first-seen order.
    pub fn summary(&self) -> Vec<(String, usize, usize)> {
        let mut out: Vec<(String, usize, usize)> = Vec::new();
        for c in &self.checks {
            let pos = match out.iter().position(|(g, _, _)| *g == c.group) {
                Some(p) => p,
                None => {
                    out.push((c.group.clone(), 0, 0));
                    out.len() - 1
                }
            };
            out[pos].2 += 1;
            if c.passed {
                out[pos].1 += 1;
            }
        }
        out
    }

    fn push(&mut self, group: &str, subject: String, property: &str, witness: Option<String>) {
        self.checks.push(Check {
            group: group.to_string(),
            subject,
            property: property.to_string(),
            passed: witness.is_none(),
            witness,
        });
    }
}

pub const KEROV_GROUP: &str = "boolean-kerov-polynomials";
pub const EXPANSION_GROUP: &str = "boolean-cumulant-expansion";

/// Properties of `P_π` that must hold for every `π`.
pub fn check_kerov_polynomial(
    pi: &Partition,
    p: &GradedPolynomial,
) -> Vec<(String, Option<String>)> {
    let d = i64::from(pi.reflection_length());
    let mut out = Vec::new();
    let non_int = p.terms().find(|(_, c)| !c.is_integer());
    out.push((
        "integer coefficients".to_string(),
        non_int.map(|(m, c)| format!("coefficient {c} at {m:?}")),
    ));
    let neg = p.terms().find(|(_, c)| c.is_negative());
    out.push((
        "non-negative coefficients".to_string(),
        neg.map(|(m, c)| format!("coefficient {c} at {m:?}")),
    ));
    let deg = p.weighted_degree();
    out.push((
        format!("weighted degree <= {d}"),
        deg.filter(|&g| g > d).map(|g| format!("degree {g}")),
    ));
    let bad_var = p
        .variables()
        .into_iter()
        .find(|&i| i < 2 || i64::from(i) > d + 2);
    out.push((
        format!("variables within x2..x{}", d + 2),
        bad_var.map(|i| format!("x{i} occurs")),
    ));
    let expected = if d % 2 == 0 { p.clone() } else { -p };
    let iota = apply_iota(p);
    out.push((
        format!("iota eigenvalue {}", if d % 2 == 0 { "+1" } else { "-1" }),
        (iota != expected).then(|| format!("iota(P) = {iota}")),
    ));
    out
}

/// Properties of the coefficients `m^k_π`.
pub fn check_boolean_expansion(
    k: u32,
    coeffs: &BTreeMap<Partition, crate::exactmath::Rational>,
) -> Vec<(String, Option<String>)> {
    let mut out = Vec::new();
    let non_int = coeffs.iter().find(|(_, c)| !c.is_integer());
    out.push((
        "integer coefficients".to_string(),
        non_int.map(|(p, c)| format!("m_{p} = {c}")),
    ));
    let neg = coeffs.iter().find(|(_, c)| c.is_negative());
    out.push((
        "non-negative coefficients".to_string(),
        neg.map(|(p, c)| format!("m_{p} = {c}")),
    ));
    let bad_support = coeffs
        .keys()
        .find(|p| p.reflection_length() + 2 > k || p.size() + 1 > k);
    out.push((
        format!("support |π|-ℓ(π) <= {} and |π| <= {}", k - 2, k - 1),
        bad_support.map(|p| format!("{p} occurs")),
    ));
    let bad_parity = coeffs
        .keys()
        .find(|p| !(p.reflection_length() + k).is_multiple_of(2));
    out.push((
        format!("parity |π|-ℓ(π) ≡ {} (mod 2)", k % 2),
        bad_parity.map(|p| format!("{p} occurs")),
    ));
    out
}

/// Solves `P_π` for `1 <= |π| <= max_pi_size` and `m^k_π` for
/// `2 <= k <= max_k`, checking every structural property. With
/// `cross_check_parity`, the expansions are solved a second time without
/// the parity restriction and compared.
pub fn verify_theorems(
    max_pi_size: u32,
    max_k: u32,
    opts: &BasisChangeOptions,
    cross_check_parity: bool,
) -> VerificationReport {
    let mut report = VerificationReport::default();
    for pi in partitions_up_to(max_pi_size)
        .into_iter()
        .filter(|p| !p.is_empty())
    {
        match boolean_kerov_polynomial_with(&pi, opts) {
            Ok(sol) => {
                for (prop, witness) in check_kerov_polynomial(&pi, &sol.polynomial) {
                    report.push(KEROV_GROUP, pi.to_string(), &prop, witness);
                }
                report.table.kerov.insert(pi.clone(), sol.polynomial);
            }
            Err(e) => report.push(KEROV_GROUP, pi.to_string(), "solvable", Some(e.to_string())),
        }
    }
    for k in 2..=max_k {
        let subject = format!("k={k}");
        match boolean_in_characters_with(k, opts) {
            Ok(sol) => {
                for (prop, witness) in check_boolean_expansion(k, &sol.coefficients) {
                    report.push(EXPANSION_GROUP, subject.clone(), &prop, witness);
                }
                if cross_check_parity {
                    let free = BasisChangeOptions {
                        restrict_parity: false,
                        ..opts.clone()
                    };
                    let witness = match boolean_in_characters_with(k, &free) {
                        Ok(other) if other.coefficients == sol.coefficients => None,
                        Ok(other) => Some(format!(
                            "unrestricted run gives {} nonzero coefficients",
                            other.coefficients.len()
                        )),
                        Err(e) => Some(e.to_string()),
                    };
                    report.push(
                        EXPANSION_GROUP,
                        subject.clone(),
                        "parity restriction does not change the answer",
                        witness,
                    );
                }
                let ints: Option<BTreeMap<Partition, BigInt>> = sol
                    .coefficients
                    .iter()
                    .map(|(p, c)| to_integer(c).map(|v| (p.clone(), v)))
                    .collect();
                if let Some(ints) = ints {
                    report.table.boolean.insert(k, ints);
                }
            }
            Err(e) => report.push(EXPANSION_GROUP, subject, "solvable", Some(e.to_string())),
        }
    }
    report
}
