use std::collections::{HashSet, VecDeque};

use exchange_core::ExchangeMatrix;
use serde::{Deserialize, Serialize};

use crate::{FoldError, GroupAction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Admissibility {
    Admissible,
    FailsMutabilityUniformity,
    FailsOrbitZero(usize, usize),
    FailsSignCoherence(usize, usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Foldability {
    OkToDepth,
    /// Orbit indices (positions in `GroupAction::orbits`) leading to a non-admissible matrix.
    CounterexamplePath(Vec<usize>),
}

fn check_degree(b: &ExchangeMatrix, a: &GroupAction) -> Result<(), FoldError> {
    if a.degree() != b.m() {
        return Err(FoldError::DegreeMismatch { expected: b.m(), got: a.degree() });
    }
    Ok(())
}

fn splits_mutability(b: &ExchangeMatrix, a: &GroupAction) -> bool {
    let n = b.n();
    a.generators().iter().all(|g| (0..g.len()).all(|i| (i < n) == (g[i] < n)))
}

/// b_{g(i), g(j)} = b_{i,j} for every generator (hence every element).
pub fn check_invariant(b: &ExchangeMatrix, a: &GroupAction) -> Result<bool, FoldError> {
    check_degree(b, a)?;
    if !splits_mutability(b, a) {
        return Ok(false);
    }
    Ok(a.generators().iter().all(|g| (0..b.m()).all(|i| (0..b.n()).all(|j| b.get(g[i], g[j]) == b.get(i, j)))))
}

pub fn check_admissible(b: &ExchangeMatrix, a: &GroupAction) -> Result<Admissibility, FoldError> {
    check_degree(b, a)?;
    if !splits_mutability(b, a) {
        return Ok(Admissibility::FailsMutabilityUniformity);
    }
    if !check_invariant(b, a)? {
        return Err(FoldError::NotInvariant);
    }
    let n = b.n();
    let orbits = a.orbits();
    for orbit in &orbits {
        for (t, &i) in orbit.iter().enumerate() {
            for &i2 in &orbit[t + 1..] {
                if i < n && b.get(i, i2) != 0 {
                    return Ok(Admissibility::FailsOrbitZero(i, i2));
                }
                for j in 0..n {
                    if b.get(i, j) * b.get(i2, j) < 0 {
                        return Ok(Admissibility::FailsSignCoherence(i, i2, j));
                    }
                }
            }
        }
    }
    Ok(Admissibility::Admissible)
}

fn require_admissible(b: &ExchangeMatrix, a: &GroupAction) -> Result<(), FoldError> {
    match check_admissible(b, a)? {
        Admissibility::Admissible => Ok(()),
        v => Err(FoldError::NotAdmissible(v)),
    }
}

/// b^G_{I,J} = sum over i in I of b_{i,j}, j any member of J. Rows are all
/// orbits, columns the mutable orbits, both ordered by least element.
pub fn fold(b: &ExchangeMatrix, a: &GroupAction) -> Result<ExchangeMatrix, FoldError> {
    require_admissible(b, a)?;
    let orbits = a.orbits();
    let mutable: Vec<&Vec<usize>> = orbits.iter().filter(|o| o[0] < b.n()).collect();
    let rows = orbits
        .iter()
        .map(|oi| mutable.iter().map(|oj| oi.iter().map(|&i| b.get(i, oj[0])).sum()).collect())
        .collect();
    Ok(ExchangeMatrix::from_rows(rows, mutable.len())?)
}

/// mu_I: mutates at every member of the orbit, in ascending order.
pub fn orbit_mutate(b: &ExchangeMatrix, a: &GroupAction, orbit: &[usize]) -> Result<ExchangeMatrix, FoldError> {
    require_admissible(b, a)?;
    let mut sorted = orbit.to_vec();
    sorted.sort_unstable();
    if sorted.is_empty() || !a.orbits().contains(&sorted) {
        return Err(FoldError::NotAnOrbit);
    }
    if sorted[0] >= b.n() {
        return Err(FoldError::NotAnOrbit);
    }
    let mut out = b.clone();
    for &i in &sorted {
        out = out.mutate(i)?;
    }
    let mut rev = b.clone();
    for &i in sorted.iter().rev() {
        rev = rev.mutate(i)?;
    }
    assert_eq!(out, rev, "orbit mutation depends on order");
    Ok(out)
}

/// Breadth-first search over orbit-mutation sequences; every matrix reached
/// within `depth` steps must stay admissible.
pub fn verify_globally_foldable(b: &ExchangeMatrix, a: &GroupAction, depth: usize) -> Result<Foldability, FoldError> {
    let mut bad = None;
    orbit_walk(b, a, depth, |path, m| {
        if bad.is_none() && !matches!(check_admissible(m, a), Ok(Admissibility::Admissible)) {
            bad = Some(path.to_vec());
        }
    })?;
    Ok(match bad {
        None => Foldability::OkToDepth,
        Some(p) => Foldability::CounterexamplePath(p),
    })
}

/// Visits every distinct matrix reachable by at most `depth` orbit mutations,
/// with one path (orbit indices) to it. Non-admissible matrices are visited
/// but not expanded.
pub fn orbit_walk(
    b: &ExchangeMatrix,
    a: &GroupAction,
    depth: usize,
    mut visit: impl FnMut(&[usize], &ExchangeMatrix),
) -> Result<usize, FoldError> {
    require_admissible(b, a)?;
    let orbits = a.orbits();
    let mutable: Vec<usize> = (0..orbits.len()).filter(|&k| orbits[k][0] < b.n()).collect();
    let mut seen = HashSet::from([b.clone()]);
    let mut queue = VecDeque::from([(b.clone(), Vec::new())]);
    while let Some((m, path)) = queue.pop_front() {
        visit(&path, &m);
        if path.len() == depth || !matches!(check_admissible(&m, a)?, Admissibility::Admissible) {
            continue;
        }
        for &k in &mutable {
            let next = orbit_mutate(&m, a, &orbits[k])?;
            if seen.insert(next.clone()) {
                let mut p = path.clone();
                p.push(k);
                queue.push_back((next, p));
            }
        }
    }
    Ok(seen.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e6_star() -> ExchangeMatrix {
        ExchangeMatrix::from_arrows(7, &[(0, 1), (2, 1), (0, 3), (4, 3), (0, 5), (6, 5)])
    }

    fn z3() -> GroupAction {
        GroupAction::from_cycles(7, &[vec![vec![1, 3, 5], vec![2, 4, 6]]]).unwrap()
    }

    #[test]
    fn e6_z3_example() {
        let b = e6_star();
        assert!(check_invariant(&b, &z3()).unwrap());
        assert_eq!(check_admissible(&b, &z3()).unwrap(), Admissibility::Admissible);
        assert_eq!(fold(&b, &z3()).unwrap().to_rows(), vec![vec![0, 1, 0], vec![-3, 0, -1], vec![0, 1, 0]]);
    }

    #[test]
    fn broken_arrow_is_not_invariant() {
        let bad = GroupAction::from_cycles(7, &[vec![vec![1, 2]]]).unwrap();
        assert!(!check_invariant(&e6_star(), &bad).unwrap());
        assert!(check_invariant(&e6_star(), &GroupAction::trivial(7)).unwrap());
        assert_eq!(check_admissible(&e6_star(), &bad).unwrap_err(), FoldError::NotInvariant);
    }

    #[test]
    fn admissibility_witnesses() {
        // a 3-cycle inside one orbit
        let b = ExchangeMatrix::from_arrows(3, &[(0, 1), (1, 2), (2, 0)]);
        let a = GroupAction::from_cycles(3, &[vec![vec![0, 1, 2]]]).unwrap();
        assert_eq!(check_admissible(&b, &a).unwrap(), Admissibility::FailsOrbitZero(0, 1));
        // frozen/mutable mixed orbit
        let b = ExchangeMatrix::from_rows(vec![vec![0], vec![0]], 1).unwrap();
        let a = GroupAction::from_cycles(2, &[vec![vec![0, 1]]]).unwrap();
        assert_eq!(check_admissible(&b, &a).unwrap(), Admissibility::FailsMutabilityUniformity);
    }

    #[test]
    fn sign_coherence_failure() {
        // frozen rows 2 and 3 swap along with the mutable columns 0 and 1
        let b = ExchangeMatrix::from_rows(vec![vec![0, 0], vec![0, 0], vec![1, -1], vec![-1, 1]], 2).unwrap();
        let a = GroupAction::from_cycles(4, &[vec![vec![0, 1], vec![2, 3]]]).unwrap();
        assert!(check_invariant(&b, &a).unwrap());
        assert_eq!(check_admissible(&b, &a).unwrap(), Admissibility::FailsSignCoherence(2, 3, 0));
    }

    #[test]
    fn trivial_action_folds_to_itself() {
        let b = e6_star();
        assert_eq!(fold(&b, &GroupAction::trivial(7)).unwrap(), b);
        assert_eq!(verify_globally_foldable(&b, &GroupAction::trivial(7), 2).unwrap(), Foldability::OkToDepth);
    }

    #[test]
    fn orbit_mutation_is_three_single_mutations() {
        let b = e6_star();
        let m = orbit_mutate(&b, &z3(), &[5, 1, 3]).unwrap();
        let by_hand = b.mutate(5).unwrap().mutate(3).unwrap().mutate(1).unwrap();
        assert_eq!(m, by_hand);
        assert_eq!(orbit_mutate(&b, &z3(), &[1, 3]).unwrap_err(), FoldError::NotAnOrbit);
        assert_eq!(orbit_mutate(&b, &z3(), &[0]).unwrap(), b.mutate(0).unwrap());
    }
}
