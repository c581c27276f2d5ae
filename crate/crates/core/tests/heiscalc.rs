mod common;

use std::collections::BTreeMap;

use boolean_kerov::basischange::{boolean_in_characters, boolean_kerov_polynomial};
use boolean_kerov::combinatorics::{enumerate_partitions, partitions_up_to, Partition};
use boolean_kerov::heiscalc::{
    aggregate_by_cycle_type, bubble_move_full, bubble_move_step, check_expansion, evaluate_center,
    expand_dotted_strand, expand_dotted_strands, extract_bubbles, reduce_alpha, y_to_x,
    AlphaReducer, CenterElement, CollisionRule, Configuration, DiagramState, ExtractionOrder,
};
use boolean_kerov::observables::boolean_cumulants;
use num_bigint::BigInt;
use proptest::prelude::*;

fn diagrams(max_n: u32) -> Vec<Partition> {
    partitions_up_to(max_n)
}

#[test]
fn circle_oracle_reproduces_bubbles() {
    for lambda in diagrams(7) {
        let b = boolean_cumulants(&lambda, 10);
        for d in 0..=8 {
            let conf = Configuration::new(vec![d], vec![]);
            assert_eq!(
                common::close_configuration(&conf, &lambda),
                *b.get(d as usize + 2),
                "λ = {lambda}, d = {d}"
            );
        }
    }
}

#[test]
fn bubble_moves_hold_after_closure() {
    let lambdas = diagrams(6);
    for k in 0..=6 {
        let lhs = Configuration::new(vec![0], vec![(k, 0)]);
        let step = bubble_move_step(k);
        let full = bubble_move_full(k).to_state();
        for lambda in &lambdas {
            let v = common::close_configuration(&lhs, lambda);
            assert_eq!(
                v,
                common::close_state(&step, lambda),
                "step k={k} λ={lambda}"
            );
            assert_eq!(
                v,
                common::close_state(&full, lambda),
                "full k={k} λ={lambda}"
            );
        }
    }
}

#[test]
fn column_boxes_match_nested_circles() {
    let lambdas = diagrams(6);
    for m in 1..=3u32 {
        for dots in dot_vectors(m as usize, 3) {
            let alpha = AlphaReducer::new()
                .alpha(&Partition::column(m), &dots)
                .unwrap();
            let arcs: Vec<u32> = dots.iter().rev().copied().collect();
            let conf = Configuration::new(arcs, vec![]);
            for lambda in &lambdas {
                assert_eq!(
                    evaluate_center(&alpha, lambda),
                    common::close_configuration(&conf, lambda),
                    "dots {dots:?}, λ = {lambda}"
                );
            }
        }
    }
}

fn dot_vectors(len: usize, max_total: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=max_total {
        for mut rest in dot_vectors(len - 1, max_total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn closed_diagrams_match_solver_polynomials() {
    for n in 1..=5 {
        for pi in enumerate_partitions(n) {
            let dots = vec![0; n as usize];
            let p = y_to_x(&reduce_alpha(&pi, &dots).unwrap());
            assert_eq!(p, boolean_kerov_polynomial(&pi).unwrap(), "π = {pi}");
        }
    }
}

#[test]
fn dotted_reductions_obey_degree_and_positivity() {
    for n in 1..=4 {
        for pi in enumerate_partitions(n) {
            for dots in dot_vectors(n as usize, 3) {
                // reduce_alpha enforces both bounds itself
                reduce_alpha(&pi, &dots).unwrap();
            }
        }
    }
}

#[test]
fn extraction_order_does_not_matter() {
    for n in 1..=4 {
        for pi in enumerate_partitions(n) {
            for dots in dot_vectors(n as usize, 2) {
                let a = AlphaReducer::with_order(ExtractionOrder::InnermostFirst)
                    .alpha(&pi, &dots)
                    .unwrap();
                let b = AlphaReducer::with_order(ExtractionOrder::OutermostFirst)
                    .alpha(&pi, &dots)
                    .unwrap();
                assert_eq!(a, b, "π = {pi}, dots = {dots:?}");
            }
        }
    }
}

#[test]
fn bubble_move_coefficients_are_non_negative() {
    for k in 0..=12 {
        let mv = bubble_move_full(k);
        assert!(mv
            .m
            .iter()
            .all(|(&(i, j), v)| *v > BigInt::from(0) && i + j <= k));
        assert!(mv.n.iter().all(|(&l, v)| *v > BigInt::from(0) && l <= k));
    }
}

#[test]
fn strand_expansion_matches_character_expansion() {
    for k in 0..=6 {
        let strand = aggregate_by_cycle_type(&expand_dotted_strand(k).unwrap());
        let chars: BTreeMap<Partition, BigInt> = boolean_in_characters(k + 2).unwrap();
        assert_eq!(strand, chars, "k = {k}");
    }
}

#[test]
fn disjoint_collisions_are_not_enough() {
    let e = expand_dotted_strands(3, CollisionRule::Disjoint);
    assert!(check_expansion(3, &e[3]).is_ok());
    assert_ne!(
        aggregate_by_cycle_type(&e[3]),
        boolean_in_characters(5).unwrap()
    );
}

#[test]
fn center_evaluation_is_a_ring_map() {
    let a = &CenterElement::c(1) + &CenterElement::bubbles(&[0, 2]);
    let b = &CenterElement::c(3) - &CenterElement::integer(2);
    for lambda in diagrams(5) {
        assert_eq!(
            evaluate_center(&(&a * &b), &lambda),
            evaluate_center(&a, &lambda) * evaluate_center(&b, &lambda)
        );
    }
}

fn arb_configuration() -> impl Strategy<Value = Configuration> {
    (1usize..=3).prop_flat_map(|m| {
        (
            prop::collection::vec(0u32..=2, m),
            prop::collection::vec((0u32..=3, 0usize..=m), 0..=2),
        )
            .prop_map(|(arcs, bubbles)| Configuration::new(arcs, bubbles))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn extraction_preserves_closure(conf in arb_configuration()) {
        let state = DiagramState::single(conf.clone());
        for order in [ExtractionOrder::InnermostFirst, ExtractionOrder::OutermostFirst] {
            let reduced = extract_bubbles(&state, order);
            prop_assert!(reduced.is_fully_reduced());
            for lambda in diagrams(5) {
                prop_assert_eq!(
                    common::close_state(&state, &lambda),
                    common::close_state(&reduced, &lambda)
                );
            }
        }
    }
}
