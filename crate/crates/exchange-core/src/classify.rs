use serde::{Deserialize, Serialize};

use crate::cartan::{determinant, rank};
use crate::{CartanMatrix, CoreError, DynkinType};

/// Result of classifying a generalized Cartan matrix. Decomposable matrices
/// list one type per connected component, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CartanClass {
    Finite(Vec<DynkinType>),
    Affine(Vec<DynkinType>),
    Indefinite,
}

impl CartanClass {
    /// True iff the matrix is indecomposable affine of type `t`.
    pub fn is_affine_of(&self, t: DynkinType) -> bool {
        matches!(self, CartanClass::Affine(v) if v.as_slice() == [t])
    }

    pub fn is_finite_of(&self, t: DynkinType) -> bool {
        matches!(self, CartanClass::Finite(v) if v.as_slice() == [t])
    }
}

impl std::fmt::Display for CartanClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[DynkinType]| v.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" x ");
        match self {
            CartanClass::Finite(v) => write!(f, "Finite({})", join(v)),
            CartanClass::Affine(v) => write!(f, "Affine({})", join(v)),
            CartanClass::Indefinite => write!(f, "Indefinite"),
        }
    }
}

enum Definiteness {
    Positive,
    SemiCorank1,
    Other,
}

fn definiteness(c: &CartanMatrix) -> Definiteness {
    let Some(s) = c.symmetrized() else { return Definiteness::Other };
    let n = s.len();
    let leading_positive = (1..=n).all(|k| {
        let m: Vec<Vec<i128>> = s[..k].iter().map(|r| r[..k].to_vec()).collect();
        determinant(&m) > 0
    });
    if leading_positive {
        return Definiteness::Positive;
    }
    // Semidefinite iff every principal minor is nonnegative.
    for mask in 1u32..(1u32 << n) {
        let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let m: Vec<Vec<i128>> = idx.iter().map(|&i| idx.iter().map(|&j| s[i][j]).collect()).collect();
        if determinant(&m) < 0 {
            return Definiteness::Other;
        }
    }
    if n - rank(&s) == 1 {
        Definiteness::SemiCorank1
    } else {
        Definiteness::Other
    }
}

/// Finds a permutation `p` with `a.get(p[i], p[j]) == b.get(i, j)`, by
/// backtracking with degree-profile pruning.
pub fn find_isomorphism(a: &CartanMatrix, b: &CartanMatrix) -> Option<Vec<usize>> {
    let n = a.size();
    if b.size() != n {
        return None;
    }
    let profile = |c: &CartanMatrix, i: usize| {
        let mut row: Vec<(i64, i64)> = (0..n).filter(|&j| j != i).map(|j| (c.get(i, j), c.get(j, i))).collect();
        row.sort_unstable();
        row
    };
    let pa: Vec<_> = (0..n).map(|i| profile(a, i)).collect();
    let pb: Vec<_> = (0..n).map(|i| profile(b, i)).collect();
    let mut p = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn go(
        i: usize,
        a: &CartanMatrix,
        b: &CartanMatrix,
        pa: &[Vec<(i64, i64)>],
        pb: &[Vec<(i64, i64)>],
        p: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = p.len();
        if i == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || pa[cand] != pb[i] {
                continue;
            }
            let ok = (0..i).all(|j| a.get(cand, p[j]) == b.get(i, j) && a.get(p[j], cand) == b.get(j, i));
            if !ok {
                continue;
            }
            p[i] = cand;
            used[cand] = true;
            if go(i + 1, a, b, pa, pb, p, used) {
                return true;
            }
            used[cand] = false;
        }
        false
    }

    if go(0, a, b, &pa, &pb, &mut p, &mut used) {
        Some(p)
    } else {
        None
    }
}

fn name_component(c: &CartanMatrix, affine: bool) -> Result<DynkinType, CoreError> {
    for t in DynkinType::catalog_with_nodes(c.size()) {
        if t.is_affine() != affine {
            continue;
        }
        if find_isomorphism(&t.cartan().unwrap(), c).is_some() {
            return Ok(t);
        }
    }
    Err(CoreError::UnknownDiagram(c.to_string()))
}

/// Classifies a generalized Cartan matrix as finite, affine or indefinite
/// and names it against the catalogs.
pub fn classify_cartan(c: &CartanMatrix) -> Result<CartanClass, CoreError> {
    if c.size() > 12 {
        return Err(CoreError::TooLarge(c.size()));
    }
    let mut finite = Vec::new();
    let mut affine = Vec::new();
    for comp in c.components() {
        let sub = c.submatrix(&comp);
        match definiteness(&sub) {
            Definiteness::Positive => finite.push(name_component(&sub, false)?),
            Definiteness::SemiCorank1 => affine.push(name_component(&sub, true)?),
            Definiteness::Other => return Ok(CartanClass::Indefinite),
        }
    }
    finite.sort();
    match affine.len() {
        0 => Ok(CartanClass::Finite(finite)),
        1 => {
            let mut all = affine;
            all.extend(finite);
            all.sort();
            Ok(CartanClass::Affine(all))
        }
        _ => Ok(CartanClass::Indefinite),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Family;

    fn cm(rows: Vec<Vec<i64>>) -> CartanMatrix {
        CartanMatrix::new(rows).unwrap()
    }

    #[test]
    fn spec_examples() {
        let a2 = cm(vec![vec![2, -1], vec![-1, 2]]);
        assert!(classify_cartan(&a2).unwrap().is_finite_of(DynkinType::new(Family::A, 2)));
        let g2t = cm(vec![vec![2, -1, 0], vec![-3, 2, -1], vec![0, -1, 2]]);
        assert!(classify_cartan(&g2t).unwrap().is_affine_of(DynkinType::new(Family::AffG, 2)));
        let a22 = cm(vec![vec![2, -4], vec![-1, 2]]);
        assert!(classify_cartan(&a22).unwrap().is_affine_of(DynkinType::new(Family::A2Twisted, 2)));
    }

    #[test]
    fn catalog_self_classification() {
        for nodes in 1..=10 {
            for t in DynkinType::catalog_with_nodes(nodes) {
                let c = t.cartan().unwrap();
                let got = classify_cartan(&c).unwrap();
                let want = if t.is_affine() { CartanClass::Affine(vec![t]) } else { CartanClass::Finite(vec![t]) };
                assert_eq!(got, want, "{t}");
            }
        }
    }

    #[test]
    fn catalog_entries_pairwise_non_isomorphic() {
        for nodes in 1..=9 {
            let cat = DynkinType::catalog_with_nodes(nodes);
            for (i, s) in cat.iter().enumerate() {
                for t in &cat[i + 1..] {
                    let (a, b) = (s.cartan().unwrap(), t.cartan().unwrap());
                    assert!(find_isomorphism(&a, &b).is_none(), "{s} ~ {t}");
                }
            }
        }
    }

    #[test]
    fn products_and_indefinite() {
        let z = cm(vec![vec![2, 0], vec![0, 2]]);
        let a1 = DynkinType::new(Family::A, 1);
        assert_eq!(classify_cartan(&z).unwrap(), CartanClass::Finite(vec![a1, a1]));
        let hyper = cm(vec![vec![2, -3], vec![-3, 2]]);
        assert_eq!(classify_cartan(&hyper).unwrap(), CartanClass::Indefinite);
        let nonsym = cm(vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]]);
        assert_eq!(classify_cartan(&nonsym).unwrap(), CartanClass::Indefinite);
    }
}
