use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::FoldError;

pub const MAX_GROUP_ORDER: usize = 12;

/// A permutation group on 0..degree given by generators (image lists).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ActionJson", into = "ActionJson")]
pub struct GroupAction {
    degree: usize,
    generators: Vec<Vec<usize>>,
    elements: Vec<Vec<usize>>,
}

/// Wire format: 1-based image lists.
#[derive(Serialize, Deserialize)]
struct ActionJson {
    degree: usize,
    generators: Vec<Vec<usize>>,
}

impl TryFrom<ActionJson> for GroupAction {
    type Error = FoldError;
    fn try_from(j: ActionJson) -> Result<Self, FoldError> {
        let gens = j
            .generators
            .into_iter()
            .map(|g| g.into_iter().map(|x| x.checked_sub(1).ok_or(FoldError::NotAPermutation)).collect())
            .collect::<Result<Vec<Vec<usize>>, _>>()?;
        GroupAction::new(j.degree, gens)
    }
}

impl From<GroupAction> for ActionJson {
    fn from(a: GroupAction) -> Self {
        ActionJson { degree: a.degree, generators: a.generators.iter().map(|g| g.iter().map(|x| x + 1).collect()).collect() }
    }
}

impl GroupAction {
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self, FoldError> {
        for g in &generators {
            if g.len() != degree {
                return Err(FoldError::DegreeMismatch { expected: degree, got: g.len() });
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x >= degree || seen[x] {
                    return Err(FoldError::NotAPermutation);
                }
                seen[x] = true;
            }
        }
        let elements = closure(degree, &generators)?;
        Ok(GroupAction { degree, generators, elements })
    }

    pub fn trivial(degree: usize) -> Self {
        GroupAction::new(degree, Vec::new()).expect("trivial group")
    }

    /// Builds a generator from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<Vec<usize>>]) -> Result<Self, FoldError> {
        let gens = cycles
            .iter()
            .map(|cs| {
                let mut p: Vec<usize> = (0..degree).collect();
                for c in cs {
                    for (t, &x) in c.iter().enumerate() {
                        p[x] = c[(t + 1) % c.len()];
                    }
                }
                p
            })
            .collect();
        GroupAction::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Orbits sorted by their least element, each sorted ascending.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit: Vec<usize> = self.elements.iter().map(|g| g[start]).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &x in &orbit {
                seen[x] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn orbit_of(&self, i: usize) -> Vec<usize> {
        self.orbits().into_iter().find(|o| o.contains(&i)).expect("every point has an orbit")
    }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a after b)
    b.iter().map(|&x| a[x]).collect()
}

fn closure(degree: usize, gens: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, FoldError> {
    let id: Vec<usize> = (0..degree).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(g, &x);
            if seen.insert(y.clone()) {
                if seen.len() > MAX_GROUP_ORDER {
                    return Err(FoldError::GroupTooLarge);
                }
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(out)
}
