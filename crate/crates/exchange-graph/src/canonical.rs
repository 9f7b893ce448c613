use std::fmt;

use cluster_pattern::Seed;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// A seed up to permutation of its mutable indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedClass {
    pub seed: Seed,
    pub hash: String,
}

impl SeedClass {
    pub fn short_hash(&self) -> &str {
        &self.hash[..12]
    }
}

impl fmt::Display for SeedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (", self.short_hash())?;
        for (i, x) in self.seed.cluster().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Applies sigma to the mutable indices: x'_i = x_{sigma(i)}, b'_ij = b_{sigma(i) sigma(j)}.
pub fn permute_seed(s: &Seed, sigma: &[usize]) -> Seed {
    let n = s.n();
    let mut variables = s.variables.clone();
    for i in 0..n {
        variables[i] = s.variables[sigma[i]].clone();
    }
    Seed { variables, matrix: s.matrix.permute(sigma) }
}

/// Sorts the cluster into decreasing order of Laurent polynomials, so an
/// initial seed keeps x1, x2, ... in place. Equal variables are broken by the
/// lexicographically smallest matrix.
pub fn canonical_form(s: &Seed) -> SeedClass {
    let n = s.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| s.variables[b].cmp(&s.variables[a]));

    // groups of equal variables in sorted order
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match groups.last_mut() {
            Some(g) if s.variables[g[0]] == s.variables[i] => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    let seed = if groups.iter().all(|g| g.len() == 1) {
        permute_seed(s, &order)
    } else {
        let mut best: Option<Seed> = None;
        tie_break(s, &groups, 0, &mut Vec::new(), &mut best);
        best.expect("at least one permutation")
    };
    let hash = hex::encode(Sha256::digest(serde_json::to_vec(&seed).expect("seed serializes")));
    SeedClass { seed, hash }
}

fn tie_break(s: &Seed, groups: &[Vec<usize>], g: usize, prefix: &mut Vec<usize>, best: &mut Option<Seed>) {
    if g == groups.len() {
        let cand = permute_seed(s, prefix);
        if best.as_ref().is_none_or(|b| cand.matrix.entries() < b.matrix.entries()) {
            *best = Some(cand);
        }
        return;
    }
    let mut group = groups[g].clone();
    permutations(&mut group, 0, &mut |p| {
        let len = prefix.len();
        prefix.extend_from_slice(p);
        tie_break(s, groups, g + 1, prefix, best);
        prefix.truncate(len);
    });
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cluster_pattern::LaurentPoly;
    use exchange_core::ExchangeMatrix;

    #[test]
    fn a2_endpoints_agree() {
        let t0 = Seed::initial(ExchangeMatrix::square(vec![vec![0, 1], vec![-1, 0]]).unwrap());
        let t5 = Seed {
            variables: vec![LaurentPoly::var(2, 1), LaurentPoly::var(2, 0)],
            matrix: ExchangeMatrix::square(vec![vec![0, -1], vec![1, 0]]).unwrap(),
        };
        assert_eq!(canonical_form(&t0), canonical_form(&t5));
        assert_eq!(canonical_form(&t0).seed, t0);
    }

    #[test]
    fn frozen_part_is_untouched() {
        let b = ExchangeMatrix::from_arrows(2, &[(0, 1)]).with_principal_coefficients();
        let mut s = Seed::initial(b);
        s.variables[2] = s.variables[3].clone();
        let c = canonical_form(&s);
        assert_eq!(c.seed.variables[2], s.variables[3]);
        assert_eq!(c.seed.variables[3], s.variables[3]);
    }

    #[test]
    fn equal_variables_pick_smallest_matrix() {
        let x = LaurentPoly::var(2, 0);
        let s = Seed { variables: vec![x.clone(), x], matrix: ExchangeMatrix::square(vec![vec![0, 1], vec![-1, 0]]).unwrap() };
        let c = canonical_form(&s);
        assert_eq!(c.seed.matrix.to_rows(), vec![vec![0, -1], vec![1, 0]]);
    }
}
