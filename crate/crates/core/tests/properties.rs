use natord::partition::all_partitions;
use natord::relation::{max_left_solution, max_right_solution};
use natord::relation_orders::{mitsch_le, mitsch_le_oracle_unguarded};
use natord::{Partition, Relation};
use proptest::prelude::*;

fn relation(n: usize) -> impl Strategy<Value = Relation> {
    proptest::collection::vec(any::<bool>(), n * n)
        .prop_map(move |bits| Relation::from_fn(n, |i, j| bits[i * n + j]))
}

fn relation_any(max_n: usize) -> impl Strategy<Value = Relation> {
    (0..=max_n).prop_flat_map(relation)
}

fn relation_triple(max_n: usize) -> impl Strategy<Value = (Relation, Relation, Relation)> {
    (0..=max_n).prop_flat_map(|n| (relation(n), relation(n), relation(n)))
}

fn partition(n: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..2 * n.max(1), 2 * n)
        .prop_map(move |labels| Partition::from_labels(n, &labels).unwrap())
}

fn partition_triple(max_n: usize) -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (0..=max_n).prop_flat_map(|n| (partition(n), partition(n), partition(n)))
}

proptest! {
    #[test]
    fn relation_composition_is_associative((a, b, c) in relation_triple(70)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn converse_reverses_products((a, b, _c) in relation_triple(70)) {
        prop_assert_eq!((&a * &b).converse(), &b.converse() * &a.converse());
        prop_assert_eq!(a.converse().converse(), a.clone());
        prop_assert_eq!(a.complement().complement(), a);
    }

    #[test]
    fn relation_text_round_trips(a in relation_any(70)) {
        prop_assert_eq!(a.to_string().parse::<Relation>().unwrap(), a.clone());
        prop_assert_eq!(Relation::from_compact(&a.to_compact()).unwrap(), a);
    }

    #[test]
    fn right_residual_characterises_solutions((b, a, x) in relation_triple(4)) {
        let r = max_right_solution(&b, &a).unwrap();
        prop_assert_eq!((&b * &x).is_subset(&a).unwrap(), x.is_subset(&r).unwrap());
        prop_assert!((&b * &r).is_subset(&a).unwrap());
    }

    #[test]
    fn left_residual_characterises_solutions((b, a, y) in relation_triple(4)) {
        let l = max_left_solution(&b, &a).unwrap();
        prop_assert_eq!((&y * &b).is_subset(&a).unwrap(), y.is_subset(&l).unwrap());
    }

    #[test]
    fn mitsch_criterion_matches_definition_on_b3((a, b) in (relation(3), relation(3))) {
        prop_assert_eq!(mitsch_le(&a, &b).unwrap(), mitsch_le_oracle_unguarded(&a, &b));
    }

    #[test]
    fn partition_composition_is_associative((a, b, c) in partition_triple(6)) {
        let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
        let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn star_is_a_regular_involutive_antihomomorphism((a, b, _c) in partition_triple(6)) {
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!(a.compose(&b).unwrap().star(), b.star().compose(&a.star()).unwrap());
        prop_assert_eq!(a.compose(&a.star()).unwrap().compose(&a).unwrap(), a.clone());
        prop_assert_eq!(a.compose(&Partition::identity(a.n())).unwrap(), a);
    }

    #[test]
    fn partition_text_round_trips(a in (0..=6usize).prop_flat_map(partition)) {
        prop_assert_eq!(a.to_string().parse::<Partition>().unwrap(), a);
    }

    #[test]
    fn refinement_is_compatible_with_products((a, b, c) in partition_triple(5)) {
        if a.refinement_le(&b).unwrap() {
            prop_assert!(a.compose(&c).unwrap().refinement_le(&b.compose(&c).unwrap()).unwrap());
            prop_assert!(c.compose(&a).unwrap().refinement_le(&c.compose(&b).unwrap()).unwrap());
        }
    }
}

#[test]
fn mitsch_criterion_matches_definition_on_sampled_b4() {
    use rand::{RngExt, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
    for _ in 0..8 {
        let b = Relation::from_code(4, rng.random_range(0..1u64 << 16));
        // Half the pairs restrict the rows of b, so both verdicts occur often.
        let a = if rng.random_range(0..2) == 0 {
            Relation::from_code(4, rng.random_range(0..1u64 << 16))
        } else {
            let e = Relation::from_fn(4, |i, j| i == j && rng.random_range(0..2) == 0);
            &e * &b
        };
        assert_eq!(
            mitsch_le(&a, &b).unwrap(),
            mitsch_le_oracle_unguarded(&a, &b),
            "{a:?} <= {b:?}"
        );
    }
}

#[test]
fn bell_numbers_count_partitions() {
    let counts: Vec<usize> = (0..=3).map(|n| all_partitions(n).len()).collect();
    assert_eq!(counts, [1, 2, 15, 203]);
}
