use natord::lattice_lab::{
    closure_join, compose_preorders, intersect_preorders, standard_sublattice, NamedOrder,
    UniverseTable,
};
use natord::relation_orders::mitsch_le_oracle;
use natord::{Partition, Relation};

#[test]
fn relation_catalogue_matches_direct_predicates() {
    let t = UniverseTable::<Relation>::new(2).unwrap();
    let mitsch = t.materialise(NamedOrder::Mitsch);
    let incl = t.materialise(NamedOrder::Incl);
    for i in 0..t.len() {
        for j in 0..t.len() {
            let (a, b) = t.pair((i, j));
            assert_eq!(mitsch.get(i, j), mitsch_le_oracle(a, b).unwrap());
            assert_eq!(incl.get(i, j), a.is_subset(b).unwrap());
        }
    }
    let meet = intersect_preorders(&mitsch, &incl).unwrap();
    assert_eq!(meet.bits(), t.materialise(NamedOrder::MitschAndIncl).bits());
}

#[test]
fn composites_are_the_joins() {
    let t = UniverseTable::<Relation>::new(2).unwrap();
    let mitsch = t.materialise(NamedOrder::Mitsch);
    for (inclusion, composite) in [
        (NamedOrder::Incl, NamedOrder::InclThenMitsch),
        (NamedOrder::Rincl, NamedOrder::RinclThenMitsch),
    ] {
        let inc = t.materialise(inclusion);
        let expected = t.materialise(composite);
        assert_eq!(
            compose_preorders(&inc, &mitsch).unwrap().bits(),
            expected.bits()
        );
        assert_eq!(closure_join(&inc, &mitsch).unwrap().bits(), expected.bits());
    }
    assert!(t.materialise(NamedOrder::RinclThenMitsch).is_all());
}

#[test]
fn sublattices_contain_the_catalogue_and_are_closed() {
    let r = standard_sublattice(&UniverseTable::<Relation>::new(2).unwrap()).unwrap();
    let p = standard_sublattice(&UniverseTable::<Partition>::new(2).unwrap()).unwrap();
    for lattice in [&r, &p] {
        assert!(lattice.is_closed().unwrap());
        for order in NamedOrder::ALL {
            let node = lattice.node(order.name()).unwrap();
            assert_eq!(node.is_order, order.is_order(), "{}", order.name());
        }
        let eq = lattice.node("eq").unwrap();
        assert!(eq.matrix.is_identity());
        let dot = lattice.to_dot();
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("style=filled") && dot.contains("style=solid"));
    }
    assert!(r.node("rincl_then_mitsch").unwrap().matrix.is_all());
    assert!(!p.node("rincl_then_mitsch").unwrap().matrix.is_all());
    assert!(!p.node("incl_then_mitsch").unwrap().matrix.is_all());
}

#[test]
fn degenerate_universes_collapse() {
    let t = UniverseTable::<Relation>::new(0).unwrap();
    assert_eq!(t.len(), 1);
    let lattice = standard_sublattice(&t).unwrap();
    assert!(lattice.is_closed().unwrap());
    assert_eq!(lattice.nodes.len(), 1);
}
