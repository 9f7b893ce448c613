use std::collections::{BTreeSet, HashMap, HashSet};

use cluster_pattern::{coxeter_mutation, LaurentPoly, Seed};
use exchange_core::ExchangeMatrix;
use exchange_graph::*;

fn d4_affine() -> ExchangeMatrix {
    ExchangeMatrix::from_arrows(5, &[(1, 0), (2, 0), (3, 0), (4, 0)])
}

/// Depth-first oracle keyed by the unordered cluster; for finite type the
/// cluster determines the seed.
fn count_clusters_dfs(b: ExchangeMatrix) -> usize {
    let mut seen: HashSet<BTreeSet<String>> = HashSet::new();
    let mut stack = vec![Seed::initial(b)];
    while let Some(s) = stack.pop() {
        let key: BTreeSet<String> = s.cluster().iter().map(|x| x.to_string()).collect();
        if !seen.insert(key) {
            continue;
        }
        for k in (0..s.n()).rev() {
            stack.push(s.mutate(k).unwrap());
        }
    }
    seen.len()
}

#[test]
fn finite_counts_match_dfs_oracle() {
    let a3 = ExchangeMatrix::from_arrows(3, &[(0, 1), (2, 1)]);
    let d4 = ExchangeMatrix::from_arrows(4, &[(1, 0), (2, 0), (3, 0)]);
    for (b, expected) in [(a3, 14), (d4, 50)] {
        let g = explore(&Seed::initial(b.clone()), 30, DEFAULT_NODE_CAP).unwrap();
        assert!(g.complete);
        assert_eq!(g.node_count(), expected);
        assert_eq!(count_clusters_dfs(b.clone()), expected);
        // regular and connected
        assert!((0..g.node_count()).all(|u| g.degree(u) == b.n()));
        assert!(g.is_connected());
        // same sets with a different thread count
        let h = explore_with_jobs(&Seed::initial(b), 30, DEFAULT_NODE_CAP, Some(1)).unwrap();
        let hs: HashSet<_> = h.nodes.iter().map(|c| c.hash.clone()).collect();
        assert!(g.nodes.iter().all(|c| hs.contains(&c.hash)));
    }
}

#[test]
fn affine_d4_depth_two() {
    let g = explore(&Seed::initial(d4_affine()), 2, DEFAULT_NODE_CAP).unwrap();
    // 1 + 5 + all 20 ordered pairs j != k give distinct classes except commuting leaf pairs
    let depth1 = g.depths.iter().filter(|&&d| d == 1).count();
    let depth2 = g.depths.iter().filter(|&&d| d == 2).count();
    assert_eq!(depth1, 5);
    // commuting pairs (two leaves) meet once; any pair with the center does not commute
    assert_eq!(depth2, 6 + 8);
    for u in 0..g.node_count() {
        if g.depths[u] < 2 {
            assert_eq!(g.degree(u), 5);
        }
    }
}

#[test]
fn coxeter_belt_is_infinite_on_d4_affine() {
    let s0 = Seed::initial(d4_affine());
    let mut hashes = HashSet::new();
    for r in 0..=8 {
        let s = coxeter_mutation(&s0, r).unwrap();
        assert_eq!(s.matrix, s0.matrix);
        assert!(hashes.insert(canonical_form(&s).hash));
    }
}

/// Walks every mutation sequence up to `depth` in both patterns and checks
/// that the induced map between classes is a bijection preserving labeled edges.
fn same_labeled_graph(b1: &ExchangeMatrix, b2: &ExchangeMatrix, depth: usize) -> bool {
    let (s1, s2) = (Seed::initial(b1.clone()), Seed::initial(b2.clone()));
    let mut fwd: HashMap<String, String> = HashMap::new();
    let mut bwd: HashMap<String, String> = HashMap::new();
    let mut edges1 = HashSet::new();
    let mut edges2 = HashSet::new();
    let mut level = vec![(s1, s2)];
    for d in 0..=depth {
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for (a, b) in level {
            let (ha, hb) = (canonical_form(&a).hash, canonical_form(&b).hash);
            if fwd.get(&ha).is_some_and(|x| *x != hb) || bwd.get(&hb).is_some_and(|x| *x != ha) {
                return false;
            }
            fwd.insert(ha.clone(), hb.clone());
            bwd.insert(hb.clone(), ha.clone());
            if d == depth || !seen.insert(ha.clone()) {
                continue;
            }
            for k in 0..a.n() {
                let (a2, b2) = (a.mutate(k).unwrap(), b.mutate(k).unwrap());
                let (ka, kb) = (canonical_form(&a2).hash, canonical_form(&b2).hash);
                edges1.insert(BTreeSet::from([ha.clone(), ka]));
                edges2.insert(BTreeSet::from([hb.clone(), kb]));
                next.push((a2, b2));
            }
        }
        level = next;
    }
    fwd.len() == bwd.len() && edges1.len() == edges2.len()
}

#[test]
fn coefficients_do_not_change_the_graph() {
    let b = d4_affine();
    assert!(same_labeled_graph(&b, &b.with_principal_coefficients(), 3));
    // and the explored slices have matching sizes
    let g1 = explore(&Seed::initial(b.clone()), 3, DEFAULT_NODE_CAP).unwrap();
    let g2 = explore(&Seed::initial(b.with_principal_coefficients()), 3, DEFAULT_NODE_CAP).unwrap();
    assert_eq!((g1.node_count(), g1.edge_count()), (g2.node_count(), g2.edge_count()));
}

#[test]
fn oracle_detects_different_graphs() {
    let a2 = ExchangeMatrix::from_arrows(2, &[(0, 1)]);
    let a1a1 = ExchangeMatrix::zero(2, 2);
    assert!(!same_labeled_graph(&a2, &a1a1, 4));
}

/// Seeds of D~4 containing a leaf variable: each one is, after moving the
/// leaf to a frozen slot, a seed of the restricted D4 pattern.
#[test]
fn fixing_a_leaf_gives_the_restricted_pattern() {
    let b = d4_affine();
    let g = explore(&Seed::initial(b.clone()), 3, DEFAULT_NODE_CAP).unwrap();
    let leaf = 4;
    let h = g.induced_subgraph_fixing(&LaurentPoly::var(5, leaf)).unwrap();

    // restricted pattern: mutable 0..4, leaf frozen at row 4
    let mut rows = b.to_rows();
    for r in rows.iter_mut() {
        r.truncate(4);
    }
    let restricted = Seed::initial(ExchangeMatrix::from_rows(rows, 4).unwrap());
    let r = explore(&restricted, 30, DEFAULT_NODE_CAP).unwrap();
    assert!(r.complete);
    assert_eq!(r.node_count(), 50);
    let lift = |s: &Seed| -> String {
        let mut full = ExchangeMatrix::zero(5, 5);
        for i in 0..5 {
            for j in 0..4 {
                full.set(i, j, s.matrix.get(i, j));
            }
        }
        for i in 0..4 {
            full.set(i, 4, -s.matrix.get(4, i));
        }
        canonical_form(&Seed { variables: s.variables.clone(), matrix: full }).hash
    };
    let lifted: HashSet<String> = r.nodes.iter().map(|c| lift(&c.seed)).collect();
    assert!(h.nodes.iter().all(|c| lifted.contains(&c.hash)));
    let near: Vec<&SeedClass> = r.nodes.iter().zip(&r.depths).filter(|(_, &d)| d <= 3).map(|(c, _)| c).collect();
    for c in near {
        assert!(h.index_of_hash(&lift(&c.seed)).is_some());
    }
    assert!(h.is_connected());
}

#[test]
fn normal_forms_replay_on_a_sample() {
    let s0 = Seed::initial(d4_affine());
    let targets = [vec![0, 1, 2], vec![1, 0, 3, 0], vec![2, 3, 0, 1, 4], vec![0, 2, 0, 4, 0]];
    for path in targets {
        let t = s0.mutate_path(&path).unwrap();
        let nf = normal_form_decompose(&t, &s0, 6, 6).unwrap();
        assert!(!nf.seq.contains(&nf.ell));
        assert_eq!(canonical_form(&nf.replay(&s0).unwrap()), canonical_form(&t), "{path:?} -> {nf:?}");
    }
}
