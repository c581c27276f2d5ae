use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::combinatorics::{cycle_type, Partition, Permutation};
use crate::error::{Error, Result};

/// `Σ m_σ [σ-diagram]`: for `σ ∈ S_n`, the `σ`-box whose strand 1 stays
/// open while strands `2..n` are closed by nested arcs.
///
/// Diagrams that differ by relabeling the closed strands are equal, so each
/// `σ` is stored in a canonical form: the cycle through 1 is
/// `(1 2 ... a)` and the remaining cycles follow on consecutive letters in
/// decreasing length.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PermDiagramExpansion {
    terms: BTreeMap<Permutation, BigInt>,
}

impl PermDiagramExpansion {
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, sigma: &Permutation) -> BigInt {
        self.terms
            .get(&canonical_open(sigma))
            .cloned()
            .unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&mut self, sigma: &Permutation, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = canonical_open(sigma);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }
}

/// Relabels the closed letters of `σ` into the canonical form described on
/// [`PermDiagramExpansion`].
pub fn canonical_open(sigma: &Permutation) -> Permutation {
    let cycles = sigma.cycles();
    let open_len = cycles[0].len() as u32; // cycles()[0] starts at letter 1
    let rest = Partition::new(cycles[1..].iter().map(|c| c.len() as u32).collect());
    block_permutation(open_len, &rest)
}

/// `(1 .. a)(a+1 .. a+r_1)(...)`.
fn block_permutation(first: u32, rest: &Partition) -> Permutation {
    let mut images = Vec::new();
    let mut start = 1;
    for len in std::iter::once(first).chain(rest.parts().iter().copied()) {
        for i in 0..len {
            images.push(start + (i + 1) % len);
        }
        start += len;
    }
    Permutation::from_images(images).expect("block permutation")
}

/// How an open `σ`-diagram absorbs a closed `ρ`-diagram sitting to the
/// right of the open strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CollisionRule {
    /// Only the juxtaposition `σ ⊕ ρ`.
    Disjoint,
    /// `σ ⊕ ρ` plus every way of identifying letters of `ρ` with closed
    /// letters of `σ` (the cap-cup corrections), all with coefficient `+1`.
    #[default]
    WithOverlaps,
}

/// `curl(τ) = s_1 ∘ (1 ⊕ τ)`: the old open strand becomes closed strand 2
/// and the new open strand enters its cycle.
pub fn curl(tau: &Permutation) -> Permutation {
    let n = tau.degree();
    let mut images = vec![1];
    images.extend(tau.images().iter().map(|&v| v + 1));
    let shifted = Permutation::from_images(images).expect("shifted permutation");
    Permutation::transposition(n + 1, 1, 2).compose(&shifted)
}

/// All products `σ ∘ ρ_φ`, where `ρ`'s letters are injected into the
/// closed letters of `σ` (partially, per `rule`) and new letters.
pub fn collide(sigma: &Permutation, rho: &Permutation, rule: CollisionRule) -> Vec<Permutation> {
    let mut c = Collider {
        sigma,
        rho,
        rule,
        assign: vec![None; rho.degree() as usize],
        used: vec![false; sigma.degree() as usize + 1],
        out: Vec::new(),
    };
    c.rec(0);
    c.out
}

struct Collider<'a> {
    sigma: &'a Permutation,
    rho: &'a Permutation,
    rule: CollisionRule,
    assign: Vec<Option<u32>>,
    used: Vec<bool>,
    out: Vec<Permutation>,
}

impl Collider<'_> {
    fn rec(&mut self, i: usize) {
        let p = self.sigma.degree();
        if i == self.assign.len() {
            // unmatched letters of ρ become p+1, p+2, ... in order
            let mut next = p;
            let label: Vec<u32> = self
                .assign
                .iter()
                .map(|a| {
                    a.unwrap_or_else(|| {
                        next += 1;
                        next
                    })
                })
                .collect();
            let total = next;
            let mut images: Vec<u32> = (1..=total).collect();
            for (j, &l) in label.iter().enumerate() {
                images[l as usize - 1] = label[self.rho.images()[j] as usize - 1];
            }
            let rho_phi = Permutation::from_images(images).expect("relabelled ρ");
            self.out.push(self.sigma.extend(total).compose(&rho_phi));
            return;
        }
        self.assign[i] = None;
        self.rec(i + 1);
        if self.rule == CollisionRule::WithOverlaps {
            for t in 2..=p {
                if !self.used[t as usize] {
                    self.used[t as usize] = true;
                    self.assign[i] = Some(t);
                    self.rec(i + 1);
                    self.used[t as usize] = false;
                    self.assign[i] = None;
                }
            }
        }
    }
}

/// Expansions of the `k`-dotted open strand for `k = 0..=max_k`:
///
/// `E(0) = [id_1]`, `E(k+1) = curl(E(k)) + Σ_(b=0)^(k-1) E(b) · close(E(k-1-b))`.
pub fn expand_dotted_strands(max_k: u32, rule: CollisionRule) -> Vec<PermDiagramExpansion> {
    let mut e: Vec<PermDiagramExpansion> = Vec::new();
    let mut first = PermDiagramExpansion::default();
    first.add(&Permutation::identity(1), BigInt::from(1));
    e.push(first);
    // closed bubbles only depend on cycle type
    let mut closed: Vec<BTreeMap<Partition, BigInt>> = vec![aggregate_by_cycle_type(&e[0])];
    for k in 0..max_k {
        let mut next = PermDiagramExpansion::default();
        for (tau, c) in e[k as usize].terms() {
            next.add(&curl(tau), c.clone());
        }
        for b in 0..k {
            let bubble = &closed[(k - 1 - b) as usize];
            for (sigma, cs) in e[b as usize].terms() {
                for (rho_type, cr) in bubble {
                    let rho = block_permutation_full(rho_type);
                    let w = cs * cr;
                    for prod in collide(sigma, &rho, rule) {
                        next.add(&prod, w.clone());
                    }
                }
            }
        }
        closed.push(aggregate_by_cycle_type(&next));
        e.push(next);
    }
    e
}

fn block_permutation_full(pi: &Partition) -> Permutation {
    match pi.parts().split_first() {
        Some((&first, rest)) => block_permutation(first, &Partition::new(rest.to_vec())),
        None => Permutation::identity(0),
    }
}

/// The `k`-dotted strand expansion, checked for non-negative coefficients
/// and `ℓ(σ) ≤ k`, `ℓ(σ) ≡ k (mod 2)` on its support.
pub fn expand_dotted_strand(k: u32) -> Result<PermDiagramExpansion> {
    let e = expand_dotted_strands(k, CollisionRule::WithOverlaps)
        .pop()
        .expect("non-empty");
    check_expansion(k, &e)?;
    Ok(e)
}

pub fn check_expansion(k: u32, e: &PermDiagramExpansion) -> Result<()> {
    for (sigma, c) in e.terms() {
        let l = crate::combinatorics::reflection_length(sigma);
        if c.is_negative() || l > k || !(l + k).is_multiple_of(2) {
            return Err(Error::InvariantViolation(format!(
                "dotted strand k={k}: m_{sigma} = {c} with ℓ(σ) = {l} in S_{}",
                sigma.degree()
            )));
        }
    }
    Ok(())
}

/// `m_π = Σ_(σ ∼ π) m_σ`, with `π` the full cycle type (fixed points
/// included) of `σ ∈ S_n`.
pub fn aggregate_by_cycle_type(e: &PermDiagramExpansion) -> BTreeMap<Partition, BigInt> {
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (sigma, c) in e.terms() {
        *out.entry(cycle_type(sigma).partition().clone())
            .or_default() += c;
    }
    out.retain(|_, v| !v.is_zero());
    out
}
