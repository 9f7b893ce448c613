use exchange_core::{DynkinType, ExchangeMatrix, Family};
use serde::Serialize;

use crate::{FoldError, GroupAction};

#[derive(Clone, Debug, Serialize)]
pub struct FoldingTriple {
    pub name: String,
    pub source: DynkinType,
    pub matrix: ExchangeMatrix,
    pub action: GroupAction,
    pub target: DynkinType,
}

/// Bipartite D~n (n >= 4), 0-based. For n = 4 a star with centre 0 and
/// leaves 1..4. Otherwise branch vertex 0 carries leaves 1, 2; the spine is
/// 0, 3, 4, ..., n-2 and the last spine vertex carries leaves n-1, n.
/// Vertex 0 is a sink.
pub fn affine_d_quiver(n: usize) -> ExchangeMatrix {
    assert!(n >= 4);
    if n == 4 {
        return ExchangeMatrix::from_arrows(5, &[(1, 0), (2, 0), (3, 0), (4, 0)]);
    }
    let spine = d_spine(n);
    let last = *spine.last().unwrap();
    let mut edges: Vec<(usize, usize)> = vec![(1, 0), (2, 0)];
    for w in spine.windows(2) {
        edges.push((w[1], w[0]));
    }
    edges.push((n - 1, last));
    edges.push((n, last));
    bipartite_from_tree(n + 1, &edges, 0)
}

fn d_spine(n: usize) -> Vec<usize> {
    let mut s = vec![0];
    s.extend(3..=n - 2);
    s
}

/// Orients a tree so that vertices at even distance from `sink` are sinks.
fn bipartite_from_tree(m: usize, edges: &[(usize, usize)], sink: usize) -> ExchangeMatrix {
    let mut dist = vec![usize::MAX; m];
    dist[sink] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for &(u, v) in edges {
            for (a, b) in [(u, v), (v, u)] {
                if dist[a] != usize::MAX && dist[b] == usize::MAX {
                    dist[b] = dist[a] + 1;
                    changed = true;
                }
            }
        }
    }
    let arrows: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| if dist[u] % 2 == 1 { (u, v) } else { (v, u) }).collect();
    ExchangeMatrix::from_arrows(m, &arrows)
}

/// Bipartite E~6, E~7, E~8 with the tripod numbering: centre 0, arms listed
/// outward. E~6 arms (1,2), (3,4), (5,6); E~7 arms (1), (2,3,4), (5,6,7);
/// E~8 arms (1), (2,3), (4,5,6,7,8). The centre is a source.
pub fn affine_e_quiver(k: usize) -> ExchangeMatrix {
    let arms: Vec<Vec<usize>> = match k {
        6 => vec![vec![1, 2], vec![3, 4], vec![5, 6]],
        7 => vec![vec![1], vec![2, 3, 4], vec![5, 6, 7]],
        8 => vec![vec![1], vec![2, 3], vec![4, 5, 6, 7, 8]],
        _ => panic!("E~{k} is not affine"),
    };
    let mut edges = Vec::new();
    for arm in &arms {
        let mut prev = 0;
        for &v in arm {
            edges.push((prev, v));
            prev = v;
        }
    }
    // centre source: vertices at odd distance are sinks
    let b = bipartite_from_tree(k + 1, &edges, 0);
    negate(&b)
}

fn negate(b: &ExchangeMatrix) -> ExchangeMatrix {
    let rows = b.to_rows().into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect();
    ExchangeMatrix::from_rows(rows, b.n()).expect("same shape")
}

/// The 2n-cycle with alternating orientation, even vertices sources.
pub fn affine_a_cycle(n: usize) -> ExchangeMatrix {
    let m = 2 * n;
    let arrows: Vec<(usize, usize)> = (0..m)
        .map(|i| {
            let j = (i + 1) % m;
            if i % 2 == 0 {
                (i, j)
            } else {
                (j, i)
            }
        })
        .collect();
    ExchangeMatrix::from_arrows(m, &arrows)
}

fn transpositions(pairs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    pairs.iter().map(|&(a, b)| vec![a, b]).collect()
}

fn action(m: usize, gens: Vec<Vec<Vec<usize>>>) -> GroupAction {
    GroupAction::from_cycles(m, &gens).expect("catalog action is valid")
}

fn dt(family: Family, rank: usize) -> DynkinType {
    DynkinType::new(family, rank)
}

fn triple(name: String, source: DynkinType, matrix: ExchangeMatrix, action: GroupAction, target: DynkinType) -> FoldingTriple {
    FoldingTriple { name, source, matrix, action, target }
}

/// Every catalog triple, including the parametrised D~ and A~ rows for small ranks.
pub fn all_triples() -> Vec<FoldingTriple> {
    use Family::*;
    let mut out = Vec::new();

    let e6 = affine_e_quiver(6);
    out.push(triple("E6t-Z3-G2t".into(), dt(AffE, 6), e6.clone(), action(7, vec![vec![vec![1, 3, 5], vec![2, 4, 6]]]), dt(AffG, 2)));
    out.push(triple("E6t-Z2-E6(2)".into(), dt(AffE, 6), e6, action(7, vec![vec![vec![3, 5], vec![4, 6]]]), dt(E6Twisted, 6)));
    out.push(triple(
        "E7t-Z2-F4t".into(),
        dt(AffE, 7),
        affine_e_quiver(7),
        action(8, vec![vec![vec![2, 5], vec![3, 6], vec![4, 7]]]),
        dt(AffF, 4),
    ));

    let d4 = affine_d_quiver(4);
    out.push(triple("D4t-Z3-D4(3)".into(), dt(AffD, 4), d4.clone(), action(5, vec![vec![vec![1, 2, 3]]]), dt(D4Twisted, 4)));
    out.push(triple(
        "D4t-Z2xZ2-A2(2)".into(),
        dt(AffD, 4),
        d4,
        action(5, vec![vec![vec![1, 2], vec![3, 4]], vec![vec![1, 3], vec![2, 4]]]),
        dt(A2Twisted, 2),
    ));

    for n in 4..=10 {
        let b = affine_d_quiver(n);
        let (f1, f2) = if n == 4 { ((1, 2), (3, 4)) } else { ((1, 2), (n - 1, n)) };
        out.push(triple(
            format!("D{n}t-Z2-C{}t", n - 2),
            dt(AffD, n),
            b.clone(),
            action(n + 1, vec![transpositions(&[f1, f2])]),
            dt(AffC, n - 2),
        ));
        out.push(triple(
            format!("D{n}t-Z2-A{}(2)", 2 * n - 3),
            dt(AffD, n),
            b,
            action(n + 1, vec![transpositions(&[f1])]),
            dt(A2OddTwisted, 2 * n - 3),
        ));
    }

    for k in 3..=5 {
        let n = 2 * k;
        let b = affine_d_quiver(n);
        let spine = d_spine(n);
        let mut flip: Vec<(usize, usize)> = (0..spine.len() / 2).map(|t| (spine[t], spine[spine.len() - 1 - t])).collect();
        flip.push((1, n - 1));
        flip.push((2, n));
        let swap = vec![(1, 2), (n - 1, n)];
        out.push(triple(format!("D{n}t-Z2-B{k}t"), dt(AffD, n), b.clone(), action(n + 1, vec![transpositions(&flip)]), dt(AffB, k)));
        out.push(triple(
            format!("D{n}t-Z2xZ2-A{}(2)", 2 * k - 2),
            dt(AffD, n),
            b,
            action(n + 1, vec![transpositions(&flip), transpositions(&swap)]),
            dt(A2Twisted, 2 * k - 2),
        ));
    }

    out.push(triple("A2,2t-Z2-A1t".into(), dt(AffA, 3), affine_a_cycle(2), action(4, vec![vec![vec![0, 2], vec![1, 3]]]), dt(AffA, 1)));
    for n in 2..=6 {
        let m = 2 * n;
        let refl: Vec<(usize, usize)> = (1..n).map(|i| (i, m - i)).collect();
        out.push(triple(
            format!("A{n},{n}t-Z2-D{}(2)", n + 1),
            dt(AffA, m - 1),
            affine_a_cycle(n),
            action(m, vec![transpositions(&refl)]),
            dt(D2Twisted, n + 1),
        ));
    }
    out
}

pub fn catalog_names() -> Vec<String> {
    all_triples().into_iter().map(|t| t.name).collect()
}

pub fn catalog_triple(name: &str) -> Result<FoldingTriple, FoldError> {
    all_triples().into_iter().find(|t| t.name == name).ok_or_else(|| FoldError::UnknownTriple(name.to_string()))
}

/// The triples exercised by the global foldability checks.
pub const PRINCIPAL_TRIPLES: [&str; 4] = ["E6t-Z3-G2t", "E6t-Z2-E6(2)", "E7t-Z2-F4t", "D6t-Z2-B3t"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_quivers_match_the_table_numbering() {
        // D~5: 2->1, 3->1, 4->1, 4->5, 4->6 in 1-based labels
        let d5 = affine_d_quiver(5);
        assert_eq!(d5, ExchangeMatrix::from_arrows(6, &[(1, 0), (2, 0), (3, 0), (3, 4), (3, 5)]));
        let d7 = affine_d_quiver(7);
        let expect = ExchangeMatrix::from_arrows(8, &[(1, 0), (2, 0), (3, 0), (3, 4), (5, 4), (5, 6), (5, 7)]);
        assert_eq!(d7, expect);
    }

    #[test]
    fn e_quivers() {
        let e6 = ExchangeMatrix::from_arrows(7, &[(0, 1), (2, 1), (0, 3), (4, 3), (0, 5), (6, 5)]);
        assert_eq!(affine_e_quiver(6), e6);
        let e7 = ExchangeMatrix::from_arrows(8, &[(0, 1), (0, 2), (3, 2), (3, 4), (0, 5), (6, 5), (6, 7)]);
        assert_eq!(affine_e_quiver(7), e7);
    }

    #[test]
    fn names_are_unique() {
        let names = catalog_names();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert!(matches!(catalog_triple("nope"), Err(FoldError::UnknownTriple(_))));
    }
}
