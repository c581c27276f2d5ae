use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// One basis configuration: `m` nested strand arcs and floating bubbles.
///
/// `arcs[p]` is the dot count of arc `p + 1`, innermost first. A bubble
/// `(dots, p)` floats between arc `p` and arc `p + 1`: position `0` is
/// inside every arc and position `m` is fully outside.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    pub arcs: Vec<u32>,
    /// Sorted `(dots, position)` pairs.
    pub bubbles: Vec<(u32, usize)>,
}

impl Configuration {
    pub fn new(arcs: Vec<u32>, mut bubbles: Vec<(u32, usize)>) -> Self {
        bubbles.sort_unstable();
        Configuration { arcs, bubbles }
    }

    /// The empty configuration, standing for the scalar `1`.
    pub fn unit() -> Self {
        Configuration::new(Vec::new(), Vec::new())
    }

    pub fn is_fully_reduced(&self) -> bool {
        let m = self.arcs.len();
        self.bubbles.iter().all(|&(_, p)| p == m)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "arcs{:?}", self.arcs)?;
        for (d, p) in &self.bubbles {
            write!(f, " o{d}@{p}")?;
        }
        Ok(())
    }
}

/// Formal integer combination of configurations.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DiagramState {
    terms: BTreeMap<Configuration, BigInt>,
}

impl DiagramState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(c: Configuration) -> Self {
        let mut s = Self::new();
        s.add(c, BigInt::one());
        s
    }

    pub fn add(&mut self, c: Configuration, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(c.clone()).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Configuration, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, c: &Configuration) -> BigInt {
        self.terms.get(c).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_fully_reduced(&self) -> bool {
        self.terms.keys().all(Configuration::is_fully_reduced)
    }
}

impl fmt::Display for DiagramState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(
                f,
                "{}{} [{c}]",
                if v.is_negative() { "-" } else { "+" },
                v.abs()
            )?;
        }
        Ok(())
    }
}

/// One application of the single-strand bubble move to a `k`-dotted
/// bubble just inside an undotted arc (`m = 1`):
///
/// `[o_k inside] = [o_k outside] - (k+1)[arc k] + sum_(b=0)^(k-2) (b+1)[arc b, o_(k-2-b) inside]`.
pub fn bubble_move_step(k: u32) -> DiagramState {
    let mut s = DiagramState::new();
    s.add(Configuration::new(vec![0], vec![(k, 1)]), BigInt::one());
    s.add(Configuration::new(vec![k], vec![]), -BigInt::from(k + 1));
    for b in 0..k.saturating_sub(1) {
        s.add(
            Configuration::new(vec![b], vec![(k - 2 - b, 0)]),
            BigInt::from(b + 1),
        );
    }
    s
}

/// Fully reduced coefficients of moving a `k`-dotted bubble out across one
/// strand: `sum m_ij [o_i outside, arc j] - sum n_l [arc l]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BubbleMove {
    pub m: BTreeMap<(u32, u32), BigInt>,
    pub n: BTreeMap<u32, BigInt>,
}

impl BubbleMove {
    /// The same move written as a diagram state with `m = 1`.
    pub fn to_state(&self) -> DiagramState {
        let mut s = DiagramState::new();
        for (&(i, j), v) in &self.m {
            s.add(Configuration::new(vec![j], vec![(i, 1)]), v.clone());
        }
        for (&l, v) in &self.n {
            s.add(Configuration::new(vec![l], vec![]), -v.clone());
        }
        s
    }
}

/// Iterates [`bubble_move_step`] on the residual inside bubbles; each round
/// lowers their dot count by at least two, so this terminates.
pub fn bubble_move_full(k: u32) -> BubbleMove {
    let mut pending: BTreeMap<(u32, u32), BigInt> = BTreeMap::new(); // (bubble, arc dots)
    pending.insert((k, 0), BigInt::one());
    let mut out = BubbleMove {
        m: BTreeMap::new(),
        n: BTreeMap::new(),
    };
    while let Some(((bubble, arc), coeff)) = pending.pop_last() {
        for (c, v) in bubble_move_step(bubble).terms() {
            let w = &coeff * v;
            let arc_dots = arc + c.arcs[0];
            match c.bubbles.first() {
                Some(&(i, 1)) => *out.m.entry((i, arc_dots)).or_default() += w,
                Some(&(i, _)) => *pending.entry((i, arc_dots)).or_default() += w,
                None => *out.n.entry(arc_dots).or_default() -= w,
            }
        }
    }
    out.m.retain(|_, v| !v.is_zero());
    out.n.retain(|_, v| !v.is_zero());
    out
}

/// Which inside bubble is moved first during extraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExtractionOrder {
    /// The bubble at the lowest position (deepest inside).
    #[default]
    InnermostFirst,
    /// The inside bubble at the highest position.
    OutermostFirst,
}

/// Moves every bubble of `state` across all arcs with [`bubble_move_full`],
/// returning a fully reduced state.
pub fn extract_bubbles(state: &DiagramState, order: ExtractionOrder) -> DiagramState {
    let mut cache: BTreeMap<u32, BubbleMove> = BTreeMap::new();
    let mut done = DiagramState::new();
    let mut work: Vec<(Configuration, BigInt)> =
        state.terms().map(|(c, v)| (c.clone(), v.clone())).collect();
    while let Some((conf, coeff)) = work.pop() {
        let m = conf.arcs.len();
        let inside = conf.bubbles.iter().enumerate().filter(|(_, &(_, p))| p < m);
        let pick = match order {
            ExtractionOrder::InnermostFirst => inside.min_by_key(|(_, &(_, p))| p),
            ExtractionOrder::OutermostFirst => inside.max_by_key(|(_, &(_, p))| p),
        };
        let Some((idx, &(k, p))) = pick else {
            done.add(conf, coeff);
            continue;
        };
        let mv = cache.entry(k).or_insert_with(|| bubble_move_full(k));
        let mut rest = conf.bubbles.clone();
        rest.remove(idx);
        for (&(i, j), v) in &mv.m {
            let mut arcs = conf.arcs.clone();
            arcs[p] += j;
            let mut bubbles = rest.clone();
            bubbles.push((i, p + 1));
            work.push((Configuration::new(arcs, bubbles), &coeff * v));
        }
        for (&l, v) in &mv.n {
            let mut arcs = conf.arcs.clone();
            arcs[p] += l;
            work.push((Configuration::new(arcs, rest.clone()), -(&coeff * v)));
        }
    }
    done
}
