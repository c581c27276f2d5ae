use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::Error;

/// Permutation of the letters `1..=n`; `images[i-1] = σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// One-line notation `[σ(1), ..., σ(n)]`.
    pub fn from_images(images: Vec<u32>) -> crate::Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let i = (v as usize).wrapping_sub(1);
            if i >= n || seen[i] {
                return Err(Error::InvalidInput(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `1..=n` from disjoint cycles.
    pub fn from_cycles(n: u32, cycles: &[&[u32]]) -> crate::Result<Self> {
        let mut images: Vec<u32> = (1..=n).collect();
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::InvalidInput(format!("letter out of range in {c:?}")));
                }
                images[a as usize - 1] = b;
            }
        }
        Self::from_images(images)
    }

    /// Transposition `(a b)` in `S_n`.
    pub fn transposition(n: u32, a: u32, b: u32) -> Self {
        let mut images: Vec<u32> = (1..=n).collect();
        images.swap(a as usize - 1, b as usize - 1);
        Permutation { images }
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    /// `(self ∘ other)(i) = self(other(i))`; the shorter one is extended by
    /// fixed points.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.degree().max(other.degree());
        let a = self.extend(n);
        let b = other.extend(n);
        Permutation {
            images: (1..=n).map(|i| a.apply(b.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    /// Adds fixed points `degree+1..=n`.
    pub fn extend(&self, n: u32) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.degree() + 1..=n);
        Permutation { images }
    }

    /// Cycles including fixed points, each starting at its smallest letter,
    /// ordered by that letter.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut c = vec![start];
            seen[start as usize - 1] = true;
            let mut j = self.apply(start);
            while j != start {
                seen[j as usize - 1] = true;
                c.push(j);
                j = self.apply(j);
            }
            out.push(c);
        }
        out
    }

    pub fn sign(&self) -> i32 {
        if reflection_length(self).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// Cycle type of a permutation, fixed points included as parts equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleType {
    partition: Partition,
}

impl CycleType {
    pub fn new(partition: Partition) -> Self {
        CycleType { partition }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn ambient(&self) -> u32 {
        self.partition.size()
    }

    /// `π` with its parts equal to 1 removed (the class label used for
    /// normalized characters).
    pub fn reduced(&self) -> Partition {
        Partition::new(
            self.partition
                .parts()
                .iter()
                .copied()
                .filter(|&p| p > 1)
                .collect(),
        )
    }
}

pub fn cycle_type(sigma: &Permutation) -> CycleType {
    CycleType::new(Partition::new(
        sigma.cycles().iter().map(|c| c.len() as u32).collect(),
    ))
}

/// `n` minus the number of cycles: the minimal number of transpositions
/// whose product is `σ`.
pub fn reflection_length(sigma: &Permutation) -> u32 {
    sigma.degree() - sigma.cycles().len() as u32
}

/// Centralizer order `z_π = Π m^(a_m) a_m!`.
pub fn centralizer_order(pi: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (m, a) in pi.multiplicities() {
        for i in 1..=a {
            z *= BigInt::from(m) * BigInt::from(i);
        }
    }
    z
}

/// `n! / z_π`.
pub fn conjugacy_class_size(ct: &CycleType) -> BigInt {
    let mut fact = BigInt::one();
    for i in 1..=ct.ambient() {
        fact *= BigInt::from(i);
    }
    fact / centralizer_order(ct.partition())
}

/// All permutations of `1..=n` in lexicographic one-line order.
pub fn all_permutations(n: u32) -> Vec<Permutation> {
    fn rec(n: u32, cur: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if cur.len() == n as usize {
            out.push(Permutation {
                images: cur.clone(),
            });
            return;
        }
        for v in 1..=n {
            if !used[v as usize] {
                used[v as usize] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v as usize] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(
        n,
        &mut Vec::new(),
        &mut vec![false; n as usize + 1],
        &mut out,
    );
    out
}
