use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::profile::profile_coordinates;
use crate::combinatorics::Partition;
use crate::exactmath::{series_expand_at_infinity, series_reciprocal, series_reversion, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObservableKind {
    Moment,
    Boolean,
    TwistedBoolean,
    Free,
}

impl fmt::Display for ObservableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObservableKind::Moment => "moment",
            ObservableKind::Boolean => "boolean",
            ObservableKind::TwistedBoolean => "twisted-boolean",
            ObservableKind::Free => "free",
        })
    }
}

/// Values `v_1 ..= v_K` of one observable family; `values[k - 1]` is `v_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObservableVector {
    pub kind: ObservableKind,
    pub values: Vec<Rational>,
}

impl ObservableVector {
    /// `v_k` for `k >= 1`; zero past the computed range is not assumed,
    /// so this panics there.
    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Coefficients `a_j` of `G_λ = sum_j a_j z^(1-j)`, `j = 0..=order`.
fn cauchy_series(lambda: &Partition, order: usize) -> Vec<Rational> {
    let p = profile_coordinates(lambda);
    series_expand_at_infinity(&p.maxima_polynomial(), &p.minima_polynomial(), order)
        .expect("minima polynomial is monic")
}

/// Coefficients of `H_λ = 1/G_λ` in the same alignment.
fn reciprocal_cauchy_series(lambda: &Partition, order: usize) -> Vec<Rational> {
    let p = profile_coordinates(lambda);
    series_expand_at_infinity(&p.minima_polynomial(), &p.maxima_polynomial(), order)
        .expect("maxima polynomial is monic")
}

/// `M_1 ..= M_K`: `M_k` is the coefficient of `z^(-k-1)` in `G_λ`.
pub fn moments(lambda: &Partition, k_max: usize) -> ObservableVector {
    let a = cauchy_series(lambda, k_max + 2);
    ObservableVector {
        kind: ObservableKind::Moment,
        values: (1..=k_max).map(|k| a[k + 2].clone()).collect(),
    }
}

/// `B_1 ..= B_K` from `H_λ(z) = z - sum_k B_k z^(1-k)`.
pub fn boolean_cumulants(lambda: &Partition, k_max: usize) -> ObservableVector {
    let a = reciprocal_cauchy_series(lambda, k_max);
    ObservableVector {
        kind: ObservableKind::Boolean,
        values: (1..=k_max).map(|k| -a[k].clone()).collect(),
    }
}

/// `B̂_k = -B_k`.
pub fn twisted_boolean_cumulants(lambda: &Partition, k_max: usize) -> ObservableVector {
    let b = boolean_cumulants(lambda, k_max);
    ObservableVector {
        kind: ObservableKind::TwistedBoolean,
        values: b.values.into_iter().map(|v| -v).collect(),
    }
}

/// `R_1 ..= R_K` from the compositional inverse `K_λ(w) = 1/w + sum R_k w^(k-1)`
/// of `G_λ`. `R_1 = M_1 = 0` is included so indices line up with the other
/// families.
pub fn free_cumulants(lambda: &Partition, k_max: usize) -> ObservableVector {
    // g(u) = G(1/u) = sum_(k>=0) M_k u^(k+1)
    let a = cauchy_series(lambda, k_max + 2);
    let g: Vec<Rational> = (0..=k_max + 1)
        .map(|i| {
            if i == 0 {
                Rational::zero()
            } else {
                a[i + 1].clone()
            }
        })
        .collect();
    let u = series_reversion(&g, k_max + 1).expect("g has unit linear term");
    // w / u(w) = 1 / (u(w) / w)
    let u_over_w: Vec<Rational> = u[1..].to_vec();
    let r = series_reciprocal(&u_over_w, k_max + 1).expect("u has unit linear term");
    ObservableVector {
        kind: ObservableKind::Free,
        values: (1..=k_max).map(|k| r[k].clone()).collect(),
    }
}

pub fn observable(lambda: &Partition, kind: ObservableKind, k_max: usize) -> ObservableVector {
    match kind {
        ObservableKind::Moment => moments(lambda, k_max),
        ObservableKind::Boolean => boolean_cumulants(lambda, k_max),
        ObservableKind::TwistedBoolean => twisted_boolean_cumulants(lambda, k_max),
        ObservableKind::Free => free_cumulants(lambda, k_max),
    }
}

/// Checks `M_(k+1) = sum_(i=0)^(k-1) M_i B_(k+1-i)` (with `M_0 = 1`) for
/// `1 <= k < K`, the coefficientwise form of `G_λ H_λ = 1`.
pub fn moment_cumulant_check(lambda: &Partition, k_max: usize) -> bool {
    let m = moments(lambda, k_max);
    let b = boolean_cumulants(lambda, k_max);
    let mom = |i: usize| {
        if i == 0 {
            Rational::one()
        } else {
            m.get(i).clone()
        }
    };
    (1..k_max).all(|k| {
        let rhs: Rational = (0..k).map(|i| mom(i) * b.get(k + 1 - i)).sum();
        mom(k + 1) == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn ints(v: &ObservableVector) -> Vec<i64> {
        v.values
            .iter()
            .map(|x| {
                assert!(x.is_integer());
                i64::try_from(x.numer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn moment_examples() {
        assert_eq!(ints(&moments(&Partition::empty(), 4)), vec![0, 0, 0, 0]);
        assert_eq!(ints(&moments(&part(&[1]), 4)), vec![0, 1, 0, 1]);
        assert_eq!(ints(&moments(&part(&[2]), 3)), vec![0, 2, 2]);
    }

    #[test]
    fn boolean_examples() {
        assert_eq!(ints(&boolean_cumulants(&part(&[1]), 4)), vec![0, 1, 0, 0]);
        assert_eq!(ints(&boolean_cumulants(&part(&[2]), 4)), vec![0, 2, 2, 2]);
        assert_eq!(
            ints(&boolean_cumulants(&part(&[1, 1]), 4)),
            vec![0, 2, -2, 2]
        );
        assert_eq!(
            ints(&boolean_cumulants(&part(&[2, 1]), 4)),
            vec![0, 3, 0, 3]
        );
        assert_eq!(
            ints(&twisted_boolean_cumulants(&part(&[2, 1]), 4)),
            vec![0, -3, 0, -3]
        );
    }

    #[test]
    fn free_examples() {
        assert_eq!(
            ints(&free_cumulants(&Partition::empty(), 4)),
            vec![0, 0, 0, 0]
        );
        assert_eq!(ints(&free_cumulants(&part(&[1]), 3)), vec![0, 1, 0]);
        assert_eq!(ints(&free_cumulants(&part(&[2]), 3)), vec![0, 2, 2]);
        assert_eq!(free_cumulants(&part(&[2]), 1).values, vec![int(0)]);
    }

    #[test]
    fn moment_cumulant_examples() {
        assert!(moment_cumulant_check(&part(&[1]), 6));
        assert!(moment_cumulant_check(&Partition::empty(), 6));
        assert!(moment_cumulant_check(&part(&[5, 3, 2, 2, 1]), 10));
        assert!(moment_cumulant_check(&part(&[3]), 1));
    }
}
