use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Signed;

use super::center::CenterElement;
use super::diagram::{extract_bubbles, Configuration, DiagramState, ExtractionOrder};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exactmath::{GradedPolynomial, VarFamily};

/// Reduces the closed diagrams `α_π(i)` (a `π`-box whose strands carry
/// `i_1, ..., i_|π|` dots, outermost first, all closed by nested arcs) to
/// polynomials in the bubbles, following the induction on `|π|`:
///
/// * `α_(1)(i) = c_i`;
/// * a single cycle is opened at its innermost curl: the dots slide over
///   the crossing, leaving a shorter cycle with merged dots plus bubble
///   terms, whose bubbles are then extracted;
/// * several cycles: the innermost cycle reduces to a polynomial in the
///   bubbles, which are extracted across the remaining arcs.
#[derive(Debug)]
pub struct AlphaReducer {
    curl_dot_increment: u32,
    order: ExtractionOrder,
    memo: HashMap<(Partition, Vec<u32>), CenterElement>,
}

impl Default for AlphaReducer {
    fn default() -> Self {
        Self::new()
    }
}

impl AlphaReducer {
    pub fn new() -> Self {
        AlphaReducer {
            curl_dot_increment: 1,
            order: ExtractionOrder::InnermostFirst,
            memo: HashMap::new(),
        }
    }

    pub fn with_order(order: ExtractionOrder) -> Self {
        AlphaReducer {
            order,
            ..Self::new()
        }
    }

    /// Extra dot produced when the innermost curl is resolved (1 in the
    /// genuine relation). Exposed only so tests can break it on purpose.
    pub fn with_curl_dot_increment(mut self, inc: u32) -> Self {
        self.curl_dot_increment = inc;
        self.memo.clear();
        self
    }

    /// `α_π(i)` as a center element.
    pub fn alpha(&mut self, pi: &Partition, dots: &[u32]) -> Result<CenterElement> {
        if dots.len() != pi.size() as usize {
            return Err(Error::InvalidInput(format!(
                "{} dot counts for |π| = {}",
                dots.len(),
                pi.size()
            )));
        }
        Ok(self.alpha_inner(pi, dots))
    }

    fn alpha_inner(&mut self, pi: &Partition, dots: &[u32]) -> CenterElement {
        if pi.is_empty() {
            return CenterElement::one();
        }
        let key = (pi.clone(), dots.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = if pi.len() == 1 {
            self.single_cycle(pi.size(), dots)
        } else {
            self.several_cycles(pi, dots)
        };
        self.memo.insert(key, v.clone());
        v
    }

    fn single_cycle(&mut self, n: u32, dots: &[u32]) -> CenterElement {
        if n == 1 {
            return CenterElement::c(dots[0]);
        }
        let m = dots.len();
        let (head, tail) = dots.split_at(m - 2);
        let (a, b) = (tail[0], tail[1]);
        let shorter = Partition::row(n - 1);

        let mut merged = head.to_vec();
        merged.push(a + b + self.curl_dot_increment);
        let mut total = self.alpha_inner(&shorter, &merged);

        // - sum_(s=0)^(b-1) [shorter cycle, innermost dots a+b-s-1, o_s inside]
        let mut state = DiagramState::new();
        for s in 0..b {
            let mut outer_first = head.to_vec();
            outer_first.push(a + b - s - 1);
            state.add(
                Configuration::new(innermost_first(&outer_first), vec![(s, 0)]),
                BigInt::from(1),
            );
        }
        let bubbles = self.close_state(&shorter, &state);
        total = &total - &bubbles;
        total
    }

    fn several_cycles(&mut self, pi: &Partition, dots: &[u32]) -> CenterElement {
        let parts = pi.parts();
        let last = *parts.last().expect("non-empty");
        let outer = Partition::new(parts[..parts.len() - 1].to_vec());
        let k = outer.size() as usize;
        let inner = self.alpha_inner(&Partition::row(last), &dots[k..]);
        let arcs = innermost_first(&dots[..k]);
        let mut state = DiagramState::new();
        for (mono, coeff) in inner.polynomial().terms() {
            let c = coeff.to_integer();
            let bubbles = mono.indices().iter().map(|&j| (j, 0)).collect();
            state.add(Configuration::new(arcs.clone(), bubbles), c);
        }
        self.close_state(&outer, &state)
    }

    /// Closes a state whose arcs belong to a `box_type` box: bubbles are
    /// extracted, then each configuration becomes
    /// `prod c_(bubble) · α_box(arc dots)`.
    pub fn close_state(&mut self, box_type: &Partition, state: &DiagramState) -> CenterElement {
        let reduced = extract_bubbles(state, self.order);
        let mut total = CenterElement::zero();
        for (conf, coeff) in reduced.terms() {
            let outer_first: Vec<u32> = conf.arcs.iter().rev().copied().collect();
            let base = self.alpha_inner(box_type, &outer_first);
            let dots: Vec<u32> = conf.bubbles.iter().map(|&(d, _)| d).collect();
            let term = &CenterElement::bubbles(&dots) * &base;
            total = &total + &term.scale(coeff);
        }
        total
    }

    /// `P_(π,i)(y) = (-1)^ℓ(π) α_π(i)` with `c_j ↦ -y_j`, checked to have
    /// non-negative integer coefficients and y-degree at most
    /// `|π| - ℓ(π) + |i|`.
    pub fn reduce_alpha(&mut self, pi: &Partition, dots: &[u32]) -> Result<GradedPolynomial> {
        let alpha = self.alpha(pi, dots)?;
        let p = alpha.to_y_polynomial(pi.len());
        let bound =
            i64::from(pi.reflection_length()) + dots.iter().map(|&d| i64::from(d)).sum::<i64>();
        if let Some((m, c)) = p.terms().find(|(_, c)| c.is_negative() || !c.is_integer()) {
            return Err(Error::InvariantViolation(format!(
                "P_{pi},{dots:?} has coefficient {c} at y-monomial {:?}; α = {alpha}",
                m.indices()
            )));
        }
        if let Some(d) = p.weighted_degree().filter(|&d| d > bound) {
            return Err(Error::InvariantViolation(format!(
                "P_{pi},{dots:?} has degree {d} > {bound}; P = {p}"
            )));
        }
        Ok(p)
    }
}

fn innermost_first(outer_first: &[u32]) -> Vec<u32> {
    outer_first.iter().rev().copied().collect()
}

/// Convenience wrapper with the default reducer.
pub fn reduce_alpha(pi: &Partition, dots: &[u32]) -> Result<GradedPolynomial> {
    AlphaReducer::new().reduce_alpha(pi, dots)
}

/// `y_j ↦ x_(j+2)`.
pub fn y_to_x(p: &GradedPolynomial) -> GradedPolynomial {
    assert_eq!(p.family(), VarFamily::Y);
    p.relabel(VarFamily::X, |j| (j + 2, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn examples() {
        assert_eq!(reduce_alpha(&part(&[1]), &[3]).unwrap().to_string(), "y3");
        assert_eq!(
            reduce_alpha(&part(&[1, 1]), &[0, 0]).unwrap().to_string(),
            "y0^2 + y0"
        );
        assert_eq!(
            reduce_alpha(&part(&[2]), &[0, 0]).unwrap().to_string(),
            "y1"
        );
        assert_eq!(
            reduce_alpha(&part(&[3]), &[0, 0, 0]).unwrap().to_string(),
            "y2 + y0^2 + y0"
        );
    }

    #[test]
    fn single_row_with_inner_dot() {
        let mut r = AlphaReducer::new();
        let a = r.alpha(&part(&[2]), &[0, 1]).unwrap();
        assert_eq!(a.to_string(), "c2 - c0^2 + c0");
    }

    #[test]
    fn wrong_dot_count_is_rejected() {
        assert!(reduce_alpha(&part(&[2]), &[0]).is_err());
    }
}
