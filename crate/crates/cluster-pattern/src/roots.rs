use std::collections::HashSet;

use exchange_core::{classify_cartan, CartanClass, CartanMatrix};
use serde::{Deserialize, Serialize};

use crate::PatternError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootKind {
    RealRoot,
    ImaginaryRoot,
    NotARoot,
}

/// Real roots of bounded height plus the null root, for repeated membership queries.
///
/// Reflections use s_i(v) = v - (sum_j c_ij v_j) e_i, i.e. c_ij is read as
/// the pairing of the i-th simple coroot with the j-th simple root.
#[derive(Clone, Debug)]
pub struct RootSystem {
    positive_real: HashSet<Vec<i64>>,
    null_root: Option<Vec<i64>>,
    height_bound: u32,
}

impl RootSystem {
    pub fn new(c: &CartanMatrix, height_bound: u32) -> Result<RootSystem, PatternError> {
        let class = classify_cartan(c)?;
        let null_root = match class {
            CartanClass::Finite(_) => None,
            CartanClass::Affine(_) => c.null_root(),
            CartanClass::Indefinite => return Err(PatternError::IndefiniteType),
        };
        let n = c.size();
        let mut positive_real = HashSet::new();
        let mut frontier: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        for v in &frontier {
            positive_real.insert(v.clone());
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for i in 0..n {
                    let pairing: i64 = (0..n).map(|j| c.get(i, j) * v[j]).sum();
                    if pairing >= 0 {
                        continue;
                    }
                    let mut w = v.clone();
                    w[i] -= pairing;
                    let h: i64 = w.iter().sum();
                    if h <= height_bound as i64 && positive_real.insert(w.clone()) {
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        Ok(RootSystem { positive_real, null_root, height_bound })
    }

    pub fn positive_real_roots(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.positive_real.iter()
    }

    pub fn null_root(&self) -> Option<&[i64]> {
        self.null_root.as_deref()
    }

    pub fn height_bound(&self) -> u32 {
        self.height_bound
    }

    pub fn classify(&self, v: &[i64]) -> RootKind {
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        if self.positive_real.contains(v) || self.positive_real.contains(&neg) {
            return RootKind::RealRoot;
        }
        if let Some(delta) = &self.null_root {
            if v.iter().any(|&x| x != 0) && v.len() == delta.len() {
                let k = v[0] / delta[0];
                if k != 0 && v.iter().zip(delta).all(|(a, d)| *a == k * d) {
                    return RootKind::ImaginaryRoot;
                }
            }
        }
        RootKind::NotARoot
    }
}

/// Classifies v as a real root, a nonzero multiple of the null root, or
/// neither, searching real roots up to the given height.
pub fn root_membership(c: &CartanMatrix, v: &[i64], height_bound: u32) -> Result<RootKind, PatternError> {
    Ok(RootSystem::new(c, height_bound)?.classify(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cm(rows: Vec<Vec<i64>>) -> CartanMatrix {
        CartanMatrix::new(rows).unwrap()
    }

    #[test]
    fn finite_a2() {
        let a2 = cm(vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(root_membership(&a2, &[1, 1], 10).unwrap(), RootKind::RealRoot);
        assert_eq!(root_membership(&a2, &[2, 0], 10).unwrap(), RootKind::NotARoot);
        assert_eq!(root_membership(&a2, &[-1, 0], 10).unwrap(), RootKind::RealRoot);
        let rs = RootSystem::new(&a2, 10).unwrap();
        assert_eq!(rs.positive_real_roots().count(), 3);
    }

    #[test]
    fn finite_counts() {
        // |Phi+| for B3 and G2
        let b3 = exchange_core::DynkinType::new(exchange_core::Family::B, 3).cartan().unwrap();
        assert_eq!(RootSystem::new(&b3, 40).unwrap().positive_real_roots().count(), 9);
        let g2 = exchange_core::DynkinType::new(exchange_core::Family::G, 2).cartan().unwrap();
        assert_eq!(RootSystem::new(&g2, 40).unwrap().positive_real_roots().count(), 6);
    }

    #[test]
    fn affine_d4_null_root() {
        let mut rows = vec![vec![0i64; 5]; 5];
        for i in 0..5 {
            rows[i][i] = 2;
        }
        for l in 1..5 {
            rows[0][l] = -1;
            rows[l][0] = -1;
        }
        let c = cm(rows);
        assert_eq!(root_membership(&c, &[2, 1, 1, 1, 1], 30).unwrap(), RootKind::ImaginaryRoot);
        assert_eq!(root_membership(&c, &[4, 2, 2, 2, 2], 30).unwrap(), RootKind::ImaginaryRoot);
        // delta + alpha_2 is real
        assert_eq!(root_membership(&c, &[2, 2, 1, 1, 1], 30).unwrap(), RootKind::RealRoot);
        assert_eq!(root_membership(&c, &[1, 1, 1, 1, 1], 30).unwrap(), RootKind::RealRoot);
        assert_eq!(root_membership(&c, &[1, 2, 0, 0, 0], 30).unwrap(), RootKind::NotARoot);
    }

    #[test]
    fn indefinite_rejected() {
        let c = cm(vec![vec![2, -3], vec![-3, 2]]);
        assert!(matches!(root_membership(&c, &[1, 0], 5), Err(PatternError::IndefiniteType)));
    }
}
