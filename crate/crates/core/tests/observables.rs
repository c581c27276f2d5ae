use boolean_kerov::combinatorics::{
    conjugacy_class_size, enumerate_partitions, partitions_up_to, CycleType, Partition,
};
use boolean_kerov::exactmath::{falling_factorial, int, Rational};
use boolean_kerov::observables::{
    boolean_cumulants, dimension, free_cumulants, mn_character, mn_character_unnormalized,
    moment_cumulant_check, moments, normalized_character, profile_coordinates, transition_measure,
    twisted_boolean_cumulants,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

#[test]
fn profile_and_measure_invariants() {
    for lambda in partitions_up_to(10) {
        let p = profile_coordinates(&lambda);
        assert!(p.is_valid(), "{lambda}");
        assert_eq!(p.minima.len(), p.maxima.len() + 1);
        assert_eq!(p.minima.iter().sum::<i64>(), p.maxima.iter().sum::<i64>());
        let tm = transition_measure(&lambda);
        assert!(tm.atoms.iter().all(|(_, w)| w.is_positive()));
        assert_eq!(tm.total_mass(), int(1));
        let m = moments(&lambda, 12);
        let b = boolean_cumulants(&lambda, 12);
        assert!(m.get(1).is_zero() && b.get(1).is_zero());
        for k in 1..=12 {
            assert!(
                m.get(k).is_integer() && b.get(k).is_integer(),
                "{lambda} k={k}"
            );
            assert_eq!(*m.get(k), tm.moment(k as u32), "{lambda} k={k}");
        }
        assert_eq!(*b.get(2), int(i64::from(lambda.size())));
        assert!(moment_cumulant_check(&lambda, 12));
    }
}

#[test]
fn transpose_flips_odd_orders() {
    for lambda in partitions_up_to(10) {
        let t = lambda.transpose();
        let (m, mt) = (moments(&lambda, 10), moments(&t, 10));
        let (b, bt) = (boolean_cumulants(&lambda, 10), boolean_cumulants(&t, 10));
        for k in 1..=10 {
            let s = if k % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(*mt.get(k), m.get(k) * &s);
            assert_eq!(*bt.get(k), b.get(k) * &s);
        }
    }
}

/// Boolean cumulants from moments through `M(z) = 1 / (1 - B(z))`.
fn boolean_from_moments(m: &[Rational]) -> Vec<Rational> {
    // m[k] = sum_(j=1..k) b[j] m[k-j], m[0] = 1
    let mut full = vec![int(1)];
    full.extend_from_slice(m);
    let mut b = vec![Rational::zero(); full.len()];
    for k in 1..full.len() {
        let mut acc = full[k].clone();
        for j in 1..k {
            acc -= &b[j] * &full[k - j];
        }
        b[k] = acc;
    }
    b[1..].to_vec()
}

#[test]
fn boolean_cumulants_match_moment_recursion() {
    for lambda in partitions_up_to(8) {
        let m = moments(&lambda, 10);
        let b = boolean_cumulants(&lambda, 10);
        assert_eq!(boolean_from_moments(&m.values), b.values, "{lambda}");
        let bh = twisted_boolean_cumulants(&lambda, 10);
        for k in 1..=10 {
            assert_eq!(*bh.get(k), -b.get(k).clone());
        }
    }
}

#[test]
fn free_cumulants_of_small_diagrams() {
    // R_2 = |λ| and R_(k+1) is the top-degree part of Σ_k
    for lambda in partitions_up_to(8) {
        let r = free_cumulants(&lambda, 6);
        assert!(r.get(1).is_zero());
        assert_eq!(*r.get(2), int(i64::from(lambda.size())));
        // Σ_(2) = R_3 exactly
        assert_eq!(
            *r.get(3),
            Rational::from_integer(normalized_character(&Partition::row(2), &lambda))
        );
    }
}

#[test]
fn character_tables_are_orthogonal() {
    for n in 1..=7u32 {
        let parts = enumerate_partitions(n);
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        let table: Vec<Vec<BigInt>> = parts
            .iter()
            .map(|l| {
                parts
                    .iter()
                    .map(|c| mn_character_unnormalized(l, c).unwrap())
                    .collect()
            })
            .collect();
        // columns: sum_λ χ^λ(π) χ^λ(ρ) = δ z_π
        for (i, pi) in parts.iter().enumerate() {
            for (j, _) in parts.iter().enumerate() {
                let s: BigInt = table.iter().map(|row| &row[i] * &row[j]).sum();
                let expected = if i == j {
                    &fact / conjugacy_class_size(&CycleType::new(pi.clone()))
                } else {
                    BigInt::zero()
                };
                assert_eq!(s, expected, "n={n}");
            }
        }
        let dims: BigInt = parts.iter().map(|l| dimension(l) * dimension(l)).sum();
        assert_eq!(dims, fact);
    }
}

#[test]
fn dimensions_match_hook_lengths() {
    for n in 0..=8 {
        for lambda in enumerate_partitions(n) {
            assert_eq!(
                dimension(&lambda),
                lambda.hook_length_dimension(),
                "{lambda}"
            );
        }
    }
}

#[test]
fn normalized_characters_vanish_on_small_diagrams() {
    let pi = Partition::new(vec![3, 1]);
    for lambda in partitions_up_to(3) {
        assert!(normalized_character(&pi, &lambda).is_zero());
    }
}

proptest! {
    #[test]
    fn normalized_character_definition(
        pi in prop::collection::vec(1u32..=3, 1..=3).prop_map(Partition::new),
        lambda in prop::collection::vec(1u32..=4, 0..=4).prop_map(Partition::new),
    ) {
        let (n, k) = (lambda.size(), pi.size());
        let value = normalized_character(&pi, &lambda);
        if n < k {
            prop_assert!(value.is_zero());
        } else {
            let padded = pi.pad_to(n).unwrap();
            let chi = mn_character(&lambda, &padded).unwrap();
            let expected = chi * Rational::from_integer(falling_factorial(u64::from(n), u64::from(k)));
            prop_assert_eq!(Rational::from_integer(value), expected);
        }
    }
}
