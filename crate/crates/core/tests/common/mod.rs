//! Independent closure oracle: evaluates nested closed arcs of an
//! identity box, with bubbles floating between them, as functions of a
//! Young diagram. A clockwise circle with `d` dots around a region `f`
//! acts on `λ` as `(|λ| / dim λ) Σ_(μ = λ - □) dim μ · c(□)^d · f(μ)`;
//! a free bubble with `j` dots is `B_(j+2)`.
#![allow(dead_code)]

use boolean_kerov::combinatorics::Partition;
use boolean_kerov::exactmath::Rational;
use boolean_kerov::heiscalc::{Configuration, DiagramState};
use boolean_kerov::observables::{boolean_cumulants, dimension};
use num_bigint::BigInt;
use num_traits::Zero;

/// `(μ, content of λ/μ)` over removable boxes.
pub fn removals(lambda: &Partition) -> Vec<(Partition, i64)> {
    let p = lambda.parts();
    let mut out = Vec::new();
    for i in 0..p.len() {
        if i + 1 == p.len() || p[i] > p[i + 1] {
            let mut q = p.to_vec();
            q[i] -= 1;
            out.push((Partition::new(q), i64::from(p[i]) - 1 - i as i64));
        }
    }
    out
}

fn bubble(j: u32, lambda: &Partition) -> Rational {
    boolean_cumulants(lambda, j as usize + 2)
        .get(j as usize + 2)
        .clone()
}

fn circle(d: u32, lambda: &Partition, inner: &dyn Fn(&Partition) -> Rational) -> Rational {
    let mut acc = Rational::zero();
    for (mu, c) in removals(lambda) {
        let w = Rational::from_integer(dimension(&mu) * BigInt::from(c).pow(d));
        acc += w * inner(&mu);
    }
    acc * Rational::from_integer(BigInt::from(lambda.size()))
        / Rational::from_integer(dimension(lambda))
}

/// Value of a configuration on `λ`.
pub fn close_configuration(conf: &Configuration, lambda: &Partition) -> Rational {
    fn level(conf: &Configuration, p: usize, lambda: &Partition) -> Rational {
        let mut v = Rational::from_integer(1.into());
        for &(j, q) in &conf.bubbles {
            if q == p {
                v *= bubble(j, lambda);
            }
        }
        if p == 0 {
            return v;
        }
        let d = conf.arcs[p - 1];
        v * circle(d, lambda, &|mu| level(conf, p - 1, mu))
    }
    level(conf, conf.arcs.len(), lambda)
}

pub fn close_state(state: &DiagramState, lambda: &Partition) -> Rational {
    state
        .terms()
        .map(|(c, v)| close_configuration(c, lambda) * Rational::from_integer(v.clone()))
        .fold(Rational::zero(), |a, b| a + b)
}
