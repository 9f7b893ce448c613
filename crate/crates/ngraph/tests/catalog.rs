use braid::fixtures::{ngraph_word_affine_d, ngraph_word_tripod};
use exchange_core::{cartan_counterpart, classify_cartan, DynkinType, ExchangeMatrix, Family};
use ngraph::*;

/// 1-based arrows as printed in the tables.
fn arrows(n: usize, a: &[(usize, usize)]) -> ExchangeMatrix {
    let zero: Vec<(usize, usize)> = a.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
    ExchangeMatrix::from_arrows(n, &zero)
}

/// Tripod: the Y cycle feeds the first cycle of each arm, arms alternate.
fn tripod_oracle(a: usize, b: usize, c: usize) -> ExchangeMatrix {
    let mut out = Vec::new();
    let mut next = 1;
    for x in [a, b, c] {
        let ids: Vec<usize> = (next..next + x - 1).collect();
        next += x - 1;
        if let Some(&first) = ids.first() {
            out.push((0, first));
        }
        for (j, w) in ids.windows(2).enumerate() {
            out.push(if j % 2 == 0 { (w[1], w[0]) } else { (w[0], w[1]) });
        }
    }
    ExchangeMatrix::from_arrows(a + b + c - 2, &out)
}

/// D~n: the tree of the diagram oriented bipartitely with cycle 1 a sink.
fn affine_d_oracle(n: usize) -> ExchangeMatrix {
    let mut tree = vec![(0, 1), (0, 2)];
    if n == 4 {
        tree.extend([(0, 3), (0, 4)]);
    } else {
        tree.push((0, 3));
        tree.extend((3..n - 2).map(|i| (i, i + 1)));
        tree.extend([(n - 2, n - 1), (n - 2, n)]);
    }
    let mut dist = vec![usize::MAX; n + 1];
    dist[0] = 0;
    for _ in 0..=n {
        for &(u, v) in &tree {
            dist[v] = dist[v].min(dist[u].saturating_add(1));
            dist[u] = dist[u].min(dist[v].saturating_add(1));
        }
    }
    let oriented: Vec<(usize, usize)> =
        tree.iter().map(|&(u, v)| if dist[u] % 2 == 1 { (u, v) } else { (v, u) }).collect();
    ExchangeMatrix::from_arrows(n + 1, &oriented)
}

#[test]
fn catalog_graphs_validate_with_the_expected_boundary() {
    for n in 4..=10 {
        let (g, b) = build_initial(CatalogType::AffineD(n)).unwrap();
        assert_eq!(g.validate(), vec![], "D~{n}");
        assert_eq!(g.euler_characteristic(), 1);
        assert_eq!(g.boundary_word(0).unwrap(), ngraph_word_affine_d(n), "D~{n}");
        assert_eq!(b.len(), n + 1);
    }
    for (a, b, c) in [(1, 1, 1), (3, 3, 3), (2, 4, 4), (2, 3, 6), (4, 2, 5)] {
        let (g, cy) = build_initial(CatalogType::Tripod(a, b, c)).unwrap();
        assert_eq!(g.validate(), vec![], "({a},{b},{c})");
        assert_eq!(g.boundary_word(0).unwrap(), ngraph_word_tripod(a, b, c));
        assert_eq!(cy.len(), a + b + c - 2);
    }
    assert!(build_initial(CatalogType::AffineD(3)).is_err());
    assert!(build_initial(CatalogType::Tripod(0, 1, 1)).is_err());
}

#[test]
fn table_quivers() {
    let q = |t| {
        let (g, b) = build_initial(t).unwrap();
        intersection_quiver(&g, &b).unwrap()
    };
    assert_eq!(q(CatalogType::AffineD(4)), arrows(5, &[(2, 1), (3, 1), (4, 1), (5, 1)]));
    assert_eq!(q(CatalogType::AffineD(5)), arrows(6, &[(2, 1), (3, 1), (4, 1), (4, 5), (4, 6)]));
    assert_eq!(q(CatalogType::AffineD(6)), arrows(7, &[(2, 1), (3, 1), (4, 1), (4, 5), (6, 5), (7, 5)]));
    assert_eq!(
        q(CatalogType::AffineD(7)),
        arrows(8, &[(2, 1), (3, 1), (4, 1), (4, 5), (6, 5), (6, 7), (6, 8)])
    );
    assert_eq!(q(CatalogType::Tripod(3, 3, 3)), arrows(7, &[(1, 2), (3, 2), (1, 4), (5, 4), (1, 6), (7, 6)]));
    assert_eq!(
        q(CatalogType::Tripod(2, 4, 4)),
        arrows(8, &[(1, 2), (1, 3), (4, 3), (4, 5), (1, 6), (7, 6), (7, 8)])
    );
    assert_eq!(
        q(CatalogType::Tripod(2, 3, 6)),
        arrows(9, &[(1, 2), (1, 3), (4, 3), (1, 5), (6, 5), (6, 7), (8, 7), (8, 9)])
    );
}

#[test]
fn quivers_match_the_oracles_and_types() {
    for n in 4..=12 {
        let (g, b) = build_initial(CatalogType::AffineD(n)).unwrap();
        let q = intersection_quiver(&g, &b).unwrap();
        assert_eq!(q, affine_d_oracle(n), "D~{n}");
        if n <= 11 {
            let class = classify_cartan(&cartan_counterpart(&q)).unwrap();
            assert!(class.is_affine_of(DynkinType::new(Family::AffD, n)));
        }
    }
    for (a, b, c) in [(1, 1, 1), (3, 3, 3), (2, 4, 4), (2, 3, 6), (4, 2, 5), (1, 5, 2)] {
        let (g, cy) = build_initial(CatalogType::Tripod(a, b, c)).unwrap();
        assert_eq!(intersection_quiver(&g, &cy).unwrap(), tripod_oracle(a, b, c), "({a},{b},{c})");
    }
    for (k, t) in [(6, (3, 3, 3)), (7, (2, 4, 4)), (8, (2, 3, 6))] {
        let cat = CatalogType::from_dynkin(DynkinType::new(Family::AffE, k)).unwrap();
        assert_eq!(cat, CatalogType::Tripod(t.0, t.1, t.2));
        let (g, cy) = build_initial(cat).unwrap();
        let q = intersection_quiver(&g, &cy).unwrap();
        assert!(classify_cartan(&cartan_counterpart(&q)).unwrap().is_affine_of(DynkinType::new(Family::AffE, k)));
    }
}

#[test]
fn cycle_kinds() {
    let (g, b) = build_initial(CatalogType::Tripod(3, 3, 3)).unwrap();
    let kinds: Vec<CycleKind> = b.cycles.iter().map(|c| classify_cycle(&g, &c.edges).unwrap()).collect();
    assert_eq!(kinds[0], CycleKind::YUpper);
    assert!(kinds[1..].iter().all(|&k| k == CycleKind::I));
    let (g, b) = build_initial(CatalogType::AffineD(4)).unwrap();
    assert_eq!(classify_cycle(&g, &b.cycles[0].edges), Some(CycleKind::Tree));
    let (g, b) = build_initial(CatalogType::AffineD(6)).unwrap();
    assert_eq!(classify_cycle(&g, &b.cycles[0].edges), Some(CycleKind::YUpper));
    assert_eq!(classify_cycle(&g, &b.cycles[4].edges), Some(CycleKind::YUpper));
    // an edge to the boundary is not a cycle
    let leg = g.boundary[0][0].0;
    assert_eq!(classify_cycle(&g, &[leg]), None);
}

#[test]
fn disjoint_cycles_do_not_interact() {
    let (g, b) = build_initial(CatalogType::Tripod(3, 3, 3)).unwrap();
    // the outer I-cycles of two arms share no vertex
    let set = CycleSet { cycles: vec![b.cycles[2].clone(), b.cycles[4].clone()] };
    assert_eq!(intersection_quiver(&g, &set).unwrap(), ExchangeMatrix::zero(2, 2));
    let twice = CycleSet { cycles: vec![b.cycles[1].clone(), b.cycles[1].clone()] };
    assert_eq!(intersection_quiver(&g, &twice), Err(NGraphError::CyclesShareEdge(0, 1)));
}
