use ngraph::*;
use proptest::prelude::*;

fn catalog() -> Vec<CatalogType> {
    let mut v: Vec<CatalogType> = (4..=9).map(CatalogType::AffineD).collect();
    for (a, b, c) in [(1, 1, 1), (3, 3, 3), (2, 4, 4), (2, 3, 6), (4, 2, 5)] {
        v.push(CatalogType::Tripod(a, b, c));
    }
    v
}

#[test]
fn every_single_mutation_is_equivariant() {
    for t in catalog() {
        let (g, b) = build_initial(t).unwrap();
        let q = intersection_quiver(&g, &b).unwrap();
        for i in 0..b.len() {
            let kind = classify_cycle(&g, &b.cycles[i].edges).unwrap();
            match mutate_cycle(&g, &b, i) {
                Ok((g2, b2)) => {
                    assert_eq!(g2.validate(), vec![], "{t:?} at {i}");
                    assert_eq!(g2.boundary_word(0).unwrap(), g.boundary_word(0).unwrap());
                    let q2 = intersection_quiver(&g2, &b2).unwrap();
                    assert_eq!(q2, q.mutate(i).unwrap(), "{t:?} at {i}");
                }
                Err(e) => {
                    assert!(!matches!(kind, CycleKind::I | CycleKind::YUpper), "{t:?} at {i}: {e}");
                    assert_eq!(e, NGraphError::NotMutableKind(i));
                }
            }
        }
    }
}

#[test]
fn y_mutation_swaps_the_tag_and_grows_the_patch() {
    let (g, b) = build_initial(CatalogType::Tripod(3, 3, 3)).unwrap();
    let (g2, b2) = mutate_cycle(&g, &b, 0).unwrap();
    assert_eq!(b2.cycles[0].kind, CycleKind::YLower);
    assert_eq!(g2.vertices.len(), g.vertices.len() + 3);
    // leaves of the old Y are now reached through the new hexagonal points
    for (j, c) in b2.cycles.iter().enumerate().skip(1) {
        let want = if j % 2 == 1 { CycleKind::LongI } else { CycleKind::I };
        assert_eq!(c.kind, want, "cycle {j}");
    }
    let (_, b3) = mutate_cycle(&g2, &b2, 0).unwrap();
    assert_eq!(b3.cycles[0].kind, CycleKind::YUpper);
}

#[test]
fn i_mutation_twice_is_isomorphic() {
    for t in catalog() {
        let (g, b) = build_initial(t).unwrap();
        for i in 0..b.len() {
            if b.cycles[i].kind != CycleKind::I {
                continue;
            }
            let (g1, b1) = mutate_cycle(&g, &b, i).unwrap();
            let (g2, b2) = mutate_cycle(&g1, &b1, i).unwrap();
            let iso = isomorphism(&g, &g2).unwrap_or_else(|| panic!("{t:?} at {i}"));
            // the isomorphism carries every cycle onto itself
            for (c, c2) in b.cycles.iter().zip(&b2.cycles) {
                let mut image: Vec<usize> = c.edges.iter().map(|e| iso.edges[e].0).collect();
                let mut want = c2.edges.clone();
                image.sort();
                want.sort();
                assert_eq!(image, want);
            }
            assert_eq!(intersection_quiver(&g2, &b2).unwrap(), intersection_quiver(&g, &b).unwrap());
            // one flip alone changes the map
            if b.len() > 1 {
                assert!(intersection_quiver(&g1, &b1).unwrap() != intersection_quiver(&g, &b).unwrap());
            }
        }
    }
}

#[test]
fn y_mutation_twice_restores_the_quiver() {
    for t in catalog() {
        let (g, b) = build_initial(t).unwrap();
        for i in 0..b.len() {
            if !b.cycles[i].kind.is_y() {
                continue;
            }
            let (g1, b1) = mutate_cycle(&g, &b, i).unwrap();
            let (g2, b2) = mutate_cycle(&g1, &b1, i).unwrap();
            assert_eq!(g2.validate(), vec![]);
            assert_eq!(intersection_quiver(&g2, &b2).unwrap(), intersection_quiver(&g, &b).unwrap());
        }
    }
}

#[test]
fn long_cycles_are_not_mutable() {
    let (g, b) = build_initial(CatalogType::Tripod(3, 3, 3)).unwrap();
    let (g2, b2) = mutate_cycle(&g, &b, 0).unwrap();
    assert_eq!(b2.cycles[1].kind, CycleKind::LongI);
    assert_eq!(mutate_cycle(&g2, &b2, 1), Err(NGraphError::NotMutableKind(1)));
    assert_eq!(mutate_cycle(&g, &b, 99), Err(NGraphError::IndexOutOfRange(99)));
    let (g, b) = build_initial(CatalogType::AffineD(4)).unwrap();
    assert_eq!(mutate_cycle(&g, &b, 0), Err(NGraphError::NotMutableKind(0)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Random walks of realisable mutations keep the map valid and the
    /// quiver equal to the mutated matrix.
    #[test]
    fn mutation_walks_stay_equivariant(t in 0usize..11, steps in prop::collection::vec(0usize..16, 1..8)) {
        let (mut g, mut b) = build_initial(catalog()[t]).unwrap();
        let mut q = intersection_quiver(&g, &b).unwrap();
        for s in steps {
            let i = s % b.len();
            match mutate_cycle(&g, &b, i) {
                Ok((g2, b2)) => {
                    prop_assert_eq!(g2.validate(), vec![]);
                    q = q.mutate(i).unwrap();
                    prop_assert_eq!(intersection_quiver(&g2, &b2).unwrap(), q.clone());
                    g = g2;
                    b = b2;
                }
                Err(NGraphError::NotMutableKind(_)) => {}
                Err(e) => prop_assert!(false, "{e}"),
            }
        }
    }
}
