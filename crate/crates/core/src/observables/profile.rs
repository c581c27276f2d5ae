use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::exactmath::{int, Rational, UniPoly};

/// Local minima `x_1 < ... < x_n` and maxima `y_1 < ... < y_(n-1)` of the
/// Russian-convention profile of a Young diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub minima: Vec<i64>,
    pub maxima: Vec<i64>,
}

impl Profile {
    /// Interlacing and equal sums.
    pub fn is_valid(&self) -> bool {
        if self.minima.len() != self.maxima.len() + 1 {
            return false;
        }
        let interlaced = self
            .maxima
            .iter()
            .enumerate()
            .all(|(i, &y)| self.minima[i] < y && y < self.minima[i + 1]);
        interlaced && self.minima.iter().sum::<i64>() == self.maxima.iter().sum::<i64>()
    }

    /// `prod (z - x_i)`.
    pub fn minima_polynomial(&self) -> UniPoly {
        UniPoly::from_roots(self.minima.iter().map(|&x| int(x)))
    }

    /// `prod (z - y_j)`.
    pub fn maxima_polynomial(&self) -> UniPoly {
        UniPoly::from_roots(self.maxima.iter().map(|&y| int(y)))
    }
}

/// Minima are the contents of the addable cells, maxima the contents of the
/// removable cells (content of cell `(i, j)` is `j - i`).
pub fn profile_coordinates(lambda: &Partition) -> Profile {
    let parts: Vec<i64> = lambda.parts().iter().map(|&p| i64::from(p)).collect();
    let l = parts.len();
    let part = |i: usize| -> i64 {
        if i < l {
            parts[i]
        } else {
            0
        }
    };
    let mut minima = Vec::new();
    let mut maxima = Vec::new();
    for i in 0..=l {
        let row = i as i64 + 1;
        if i == 0 || part(i - 1) > part(i) {
            minima.push(part(i) - row + 1);
        }
        if i < l && part(i) > part(i + 1) {
            maxima.push(part(i) - row);
        }
    }
    minima.sort_unstable();
    maxima.sort_unstable();
    Profile { minima, maxima }
}

/// Atoms `(x_i, μ_i)` of the transition measure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMeasure {
    pub atoms: Vec<(i64, Rational)>,
}

impl TransitionMeasure {
    pub fn total_mass(&self) -> Rational {
        self.atoms.iter().map(|(_, w)| w.clone()).sum()
    }

    pub fn mean(&self) -> Rational {
        self.atoms.iter().map(|(x, w)| int(*x) * w).sum()
    }

    /// `sum μ_i x_i^k`.
    pub fn moment(&self, k: u32) -> Rational {
        self.atoms
            .iter()
            .map(|(x, w)| {
                let mut p = Rational::one();
                for _ in 0..k {
                    p *= int(*x);
                }
                p * w
            })
            .sum()
    }
}

/// Weight at `x_i` is the residue `prod_j (x_i - y_j) / prod_(j != i) (x_i - x_j)`.
pub fn transition_measure(lambda: &Partition) -> TransitionMeasure {
    let p = profile_coordinates(lambda);
    let atoms = p
        .minima
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let mut num = Rational::one();
            for &y in &p.maxima {
                num *= int(x - y);
            }
            let mut den = Rational::one();
            for (j, &x2) in p.minima.iter().enumerate() {
                if j != i {
                    den *= int(x - x2);
                }
            }
            debug_assert!(!den.is_zero());
            (x, num / den)
        })
        .collect();
    TransitionMeasure { atoms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn figure_one_profile() {
        let p = profile_coordinates(&part(&[5, 3, 2, 2, 1]));
        assert_eq!(p.minima, vec![-5, -3, 0, 2, 5]);
        assert_eq!(p.maxima, vec![-4, -2, 1, 4]);
        assert!(p.is_valid());
    }

    #[test]
    fn small_profiles() {
        let e = profile_coordinates(&Partition::empty());
        assert_eq!((e.minima, e.maxima), (vec![0], vec![]));
        let one = profile_coordinates(&part(&[1]));
        assert_eq!((one.minima, one.maxima), (vec![-1, 1], vec![0]));
    }

    #[test]
    fn transition_examples() {
        assert_eq!(
            transition_measure(&Partition::empty()).atoms,
            vec![(0, int(1))]
        );
        assert_eq!(
            transition_measure(&part(&[1])).atoms,
            vec![(-1, rat(1, 2)), (1, rat(1, 2))]
        );
        // residues of (z+1)(z-1)/((z+2)z(z-2)); equivalently dim(λ+□)/(4 dim λ)
        // over the three diagrams (3,1), (2,2), (2,1,1)
        assert_eq!(
            transition_measure(&part(&[2, 1])).atoms,
            vec![(-2, rat(3, 8)), (0, rat(1, 4)), (2, rat(3, 8))]
        );
    }
}
