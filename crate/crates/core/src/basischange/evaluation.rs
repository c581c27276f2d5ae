use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{enumerate_partitions, Partition};
use crate::error::{Error, Result};
use crate::exactmath::{modular_rank, solve_exact, Rational, RationalMatrix};

/// How a coefficient vector was pinned down.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvaluationReport {
    pub unknowns: usize,
    /// Diagrams of sizes `0..=fit_max_size` were used for solving.
    pub fit_max_size: u32,
    pub fit_rows: usize,
    /// Diagrams of sizes `fit_max_size+1..=holdout_max_size` were only checked.
    pub holdout_max_size: u32,
    pub holdout_rows: usize,
}

/// Solves `row(λ) · c = rhs(λ)` over all diagrams of sizes `0, 1, 2, ...`,
/// adding whole sizes until the system has full column rank, then checks
/// the solution exactly on `holdout` further sizes.
pub(crate) fn solve_over_diagrams<F>(
    unknowns: usize,
    holdout: u32,
    max_size: u32,
    row: F,
) -> Result<(Vec<Rational>, EvaluationReport)>
where
    F: Fn(&Partition) -> (Vec<Rational>, Rational) + Sync,
{
    let eval_size = |n: u32| -> Vec<(Partition, Vec<Rational>, Rational)> {
        enumerate_partitions(n)
            .into_par_iter()
            .map(|l| {
                let (r, b) = row(&l);
                debug_assert_eq!(r.len(), unknowns);
                (l, r, b)
            })
            .collect()
    };

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    let mut n = 0;
    loop {
        for (_, r, b) in eval_size(n) {
            rows.push(r);
            rhs.push(b);
        }
        if rows.len() >= unknowns
            && modular_rank(&RationalMatrix::from_rows(rows.clone())) == unknowns
        {
            break;
        }
        if n >= max_size {
            // let the exact solver give the definitive rank verdict
            break;
        }
        n += 1;
    }
    let fit_max_size = n;
    let a = RationalMatrix::from_rows(rows);
    let x = solve_exact(&a, &rhs)?;

    let mut holdout_rows = 0;
    for m in fit_max_size + 1..=fit_max_size + holdout {
        for (lambda, r, b) in eval_size(m) {
            let lhs: Rational = r.iter().zip(&x).map(|(p, q)| p * q).sum();
            if lhs != b {
                return Err(Error::InvariantViolation(format!(
                    "held-out diagram {lambda}: fitted value {lhs} but expected {b}"
                )));
            }
            holdout_rows += 1;
        }
    }
    let report = EvaluationReport {
        unknowns,
        fit_max_size,
        fit_rows: a.rows(),
        holdout_max_size: fit_max_size + holdout,
        holdout_rows,
    };
    Ok((x, report))
}
