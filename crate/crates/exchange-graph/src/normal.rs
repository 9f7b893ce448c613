use std::collections::{HashSet, VecDeque};

use cluster_pattern::{coxeter_mutation, Seed};
use serde::{Deserialize, Serialize};

use crate::{canonical_form, GraphError};

/// Certificate: target ~ mu_{seq[L-1]} ... mu_{seq[0]} (mu_Q^r (S0)), with no entry equal to `ell`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalForm {
    pub r: i64,
    pub ell: usize,
    pub seq: Vec<usize>,
}

impl NormalForm {
    pub fn replay(&self, s0: &Seed) -> Result<Seed, GraphError> {
        Ok(coxeter_mutation(s0, self.r)?.mutate_path(&self.seq)?)
    }
}

/// Searches |r| ascending (r before -r), then for each ell a breadth-first
/// search over sequences avoiding ell, up to `seq_bound` steps.
pub fn normal_form_decompose(target: &Seed, s0: &Seed, r_bound: u32, seq_bound: usize) -> Result<NormalForm, GraphError> {
    let goal = canonical_form(target).hash;
    let n = s0.n();
    let mut rs = vec![0i64];
    for r in 1..=r_bound as i64 {
        rs.push(r);
        rs.push(-r);
    }
    for r in rs {
        let base = coxeter_mutation(s0, r)?;
        for ell in 0..n {
            if let Some(seq) = search(&base, ell, seq_bound, &goal)? {
                return Ok(NormalForm { r, ell, seq });
            }
        }
    }
    Err(GraphError::NotFoundWithinBounds)
}

fn search(base: &Seed, ell: usize, bound: usize, goal: &str) -> Result<Option<Vec<usize>>, GraphError> {
    // labeled seeds, not classes: the constraint on ell refers to positions
    let mut seen: HashSet<Seed> = HashSet::from([base.clone()]);
    let mut queue = VecDeque::from([(base.clone(), Vec::new())]);
    while let Some((s, path)) = queue.pop_front() {
        if canonical_form(&s).hash == goal {
            return Ok(Some(path));
        }
        if path.len() == bound {
            continue;
        }
        for k in (0..s.n()).filter(|&k| k != ell) {
            let t = s.mutate(k)?;
            if seen.insert(t.clone()) {
                let mut p = path.clone();
                p.push(k);
                queue.push_back((t, p));
            }
        }
    }
    Ok(None)
}
