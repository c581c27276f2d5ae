use boolean_kerov::combinatorics::{
    all_permutations, conjugacy_class_size, cycle_type, enumerate_partitions, reflection_length,
    CycleType, Permutation,
};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Euler's pentagonal recurrence.
fn partition_numbers(n: usize) -> Vec<u64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n as i64 {
        let mut acc = 0i64;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[(m - g1) as usize];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                acc += sign * p[(m - g2) as usize];
            }
        }
        p[m as usize] = acc;
    }
    p.into_iter().map(|v| v as u64).collect()
}

#[test]
fn partition_counts_follow_euler() {
    let expected = partition_numbers(30);
    for n in 0..=30u32 {
        assert_eq!(
            enumerate_partitions(n).len() as u64,
            expected[n as usize],
            "n = {n}"
        );
    }
}

#[test]
fn class_sizes_sum_to_factorial() {
    for n in 0..=8u32 {
        let total: BigInt = enumerate_partitions(n)
            .into_iter()
            .map(|p| conjugacy_class_size(&CycleType::new(p)))
            .sum();
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        assert_eq!(total, fact, "n = {n}");
    }
}

#[test]
fn class_sizes_match_enumeration() {
    for n in 1..=6u32 {
        for p in enumerate_partitions(n) {
            let count = all_permutations(n)
                .iter()
                .filter(|s| cycle_type(s).partition() == &p)
                .count();
            assert_eq!(
                conjugacy_class_size(&CycleType::new(p.clone())),
                BigInt::from(count),
                "{p}"
            );
        }
    }
}

#[test]
fn cycle_type_is_conjugation_invariant() {
    for n in 1..=5u32 {
        let perms = all_permutations(n);
        for s in &perms {
            let t = cycle_type(s);
            for r in &perms {
                assert_eq!(cycle_type(&r.compose(s).compose(&r.inverse())), t);
            }
        }
    }
}

fn arb_permutation(n: u32) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn reflection_length_parity_is_additive(
        (s, t) in (1u32..=6).prop_flat_map(|n| (arb_permutation(n), arb_permutation(n)))
    ) {
        let lhs = reflection_length(&s.compose(&t)) % 2;
        let rhs = (reflection_length(&s) + reflection_length(&t)) % 2;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sign_matches_reflection_length(s in (1u32..=7).prop_flat_map(arb_permutation)) {
        let expected = if reflection_length(&s).is_multiple_of(2) { 1 } else { -1 };
        prop_assert_eq!(s.sign(), expected);
    }
}
