use crate::exactmath::{Monomial, VarFamily};

/// Every monomial in `x_2, ..., x_(D+2)` of weighted degree at most `D`
/// (`deg x_i = i - 2`) and at most `cap` variable factors, optionally
/// restricted to weighted degree `≡ parity (mod 2)`.
///
/// Since `deg x_2 = 0`, the weight bound alone would allow unbounded
/// powers of `x_2`; `cap` bounds them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    max_weight: u32,
    cap: usize,
    parity: Option<u32>,
    monomials: Vec<Monomial>,
}

impl MonomialBasis {
    pub fn new(max_weight: u32, cap: usize, parity: Option<u32>) -> Self {
        let mut monomials = Vec::new();
        let mut cur = Vec::new();
        enumerate(2, max_weight + 2, max_weight, cap, &mut cur, &mut monomials);
        if let Some(p) = parity {
            monomials.retain(|m| m.weighted_degree(VarFamily::X).rem_euclid(2) == i64::from(p % 2));
        }
        // weight ascending, then index sequence ascending
        monomials.sort_by(|a, b| {
            a.weighted_degree(VarFamily::X)
                .cmp(&b.weighted_degree(VarFamily::X))
                .then_with(|| a.cmp(b))
        });
        MonomialBasis {
            max_weight,
            cap,
            parity,
            monomials,
        }
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn parity(&self) -> Option<u32> {
        self.parity
    }

    /// Largest variable index that can occur.
    pub fn max_index(&self) -> u32 {
        self.max_weight + 2
    }
}

fn enumerate(
    min_index: u32,
    max_index: u32,
    weight_left: u32,
    factors_left: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    out.push(Monomial::new(cur.clone()));
    if factors_left == 0 {
        return;
    }
    for i in min_index..=max_index {
        let w = i - 2;
        if w > weight_left {
            break;
        }
        cur.push(i);
        enumerate(i, max_index, weight_left - w, factors_left - 1, cur, out);
        cur.pop();
    }
}
