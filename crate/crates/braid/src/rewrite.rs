use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::{BraidError, BraidWord};

/// Positions are 0-based letter offsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// s_i s_j -> s_j s_i with |i - j| >= 2.
    Comm { i: usize, j: usize, pos: usize },
    /// s_i s_{i+1} s_i <-> s_{i+1} s_i s_{i+1}, whichever side matches.
    BraidRel { i: usize, pos: usize },
    /// Moves the first k letters to the end.
    CyclicRotate(usize),
}

impl Rule {
    pub fn inverse(self, len: usize) -> Rule {
        match self {
            Rule::Comm { i, j, pos } => Rule::Comm { i: j, j: i, pos },
            Rule::BraidRel { .. } => self,
            Rule::CyclicRotate(k) => Rule::CyclicRotate(if len == 0 { 0 } else { (len - k % len) % len }),
        }
    }
}

pub fn apply_relation(w: &BraidWord, rule: Rule) -> Result<BraidWord, BraidError> {
    let l = &w.letters;
    let mut out = w.clone();
    match rule {
        Rule::Comm { i, j, pos } => {
            if pos + 1 >= l.len() || l[pos] != i || l[pos + 1] != j || i.abs_diff(j) < 2 {
                return Err(BraidError::PatternMismatch(pos));
            }
            out.letters.swap(pos, pos + 1);
        }
        Rule::BraidRel { i, pos } => {
            if pos + 2 >= l.len() {
                return Err(BraidError::PatternMismatch(pos));
            }
            let (a, b) = match l[pos..pos + 3] {
                [x, y, z] if x == i && y == i + 1 && z == i => (i + 1, i),
                [x, y, z] if x == i + 1 && y == i && z == i + 1 => (i, i + 1),
                _ => return Err(BraidError::PatternMismatch(pos)),
            };
            out.letters[pos..pos + 3].copy_from_slice(&[a, b, a]);
        }
        Rule::CyclicRotate(k) => out = w.rotate(k),
    }
    Ok(out)
}

/// Applies a rule list in order.
pub fn replay(w: &BraidWord, rules: &[Rule]) -> Result<BraidWord, BraidError> {
    rules.iter().try_fold(w.clone(), |acc, &r| apply_relation(&acc, r))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Equivalence {
    /// Rules that rewrite w1 into w2.
    Equivalent(Vec<Rule>),
    Unknown,
}

/// Rules matching at `pos` of `l` (at most one of each kind).
fn rules_at(l: &[usize], pos: usize) -> Vec<Rule> {
    let mut out = Vec::new();
    if pos + 1 < l.len() && l[pos].abs_diff(l[pos + 1]) >= 2 {
        out.push(Rule::Comm { i: l[pos], j: l[pos + 1], pos });
    }
    if pos + 2 < l.len() && l[pos] == l[pos + 2] && l[pos].abs_diff(l[pos + 1]) == 1 {
        out.push(Rule::BraidRel { i: l[pos].min(l[pos + 1]), pos });
    }
    out
}

/// Least rotation and the shift producing it.
fn least_rotation(l: &[usize]) -> (Vec<usize>, usize) {
    let mut best = l.to_vec();
    let mut shift = 0;
    for k in 1..l.len() {
        let mut r = l.to_vec();
        r.rotate_left(k);
        if r < best {
            best = r;
            shift = k;
        }
    }
    (best, shift)
}

struct Search {
    strands: usize,
    cyclic: bool,
}

impl Search {
    fn normalize(&self, l: &[usize]) -> (Vec<usize>, usize) {
        if self.cyclic {
            least_rotation(l)
        } else {
            (l.to_vec(), 0)
        }
    }

    /// Neighbouring states with the rules leading to them. In cyclic mode a
    /// state is a least rotation; each move rotates, rewrites at 0 and
    /// rotates back to the least representative.
    fn neighbours(&self, l: &[usize]) -> Vec<(Vec<usize>, Vec<Rule>)> {
        let mut out = Vec::new();
        let word = BraidWord { strands: self.strands, letters: l.to_vec() };
        if self.cyclic {
            for p in 0..l.len() {
                let r = word.rotate(p);
                for rule in rules_at(&r.letters, 0) {
                    let x = apply_relation(&r, rule).expect("rule matched");
                    let (c, q) = least_rotation(&x.letters);
                    out.push((c, vec![Rule::CyclicRotate(p), rule, Rule::CyclicRotate(q)]));
                }
            }
        } else {
            for pos in 0..l.len() {
                for rule in rules_at(l, pos) {
                    out.push((apply_relation(&word, rule).expect("rule matched").letters, vec![rule]));
                }
            }
        }
        out
    }
}

type Parents = HashMap<Vec<usize>, Option<(Vec<usize>, Vec<Rule>)>>;

/// Rules from the root of `parents` down to `node`.
fn path_from_root(parents: &Parents, node: &[usize]) -> Vec<Rule> {
    let mut chunks = Vec::new();
    let mut cur = node.to_vec();
    while let Some(Some((p, steps))) = parents.get(&cur) {
        chunks.push(steps.clone());
        cur = p.clone();
    }
    chunks.into_iter().rev().flatten().collect()
}

/// Merges adjacent rotations and drops trivial ones.
fn tidy(rules: Vec<Rule>, len: usize) -> Vec<Rule> {
    let mut out: Vec<Rule> = Vec::new();
    for r in rules {
        match (out.last_mut(), r) {
            (Some(Rule::CyclicRotate(a)), Rule::CyclicRotate(b)) => *a = (*a + b) % len.max(1),
            _ => out.push(r),
        }
        if matches!(out.last(), Some(Rule::CyclicRotate(0))) {
            out.pop();
        }
    }
    out
}

/// Bidirectional breadth-first search over relation applications (and
/// rotations when `cyclic`). `budget` bounds the number of expanded words.
pub fn equivalent_bounded(w1: &BraidWord, w2: &BraidWord, budget: usize, cyclic: bool) -> Result<Equivalence, BraidError> {
    if w1.strands != w2.strands || w1.len() != w2.len() {
        return Err(BraidError::LengthMismatch(w1.len(), w2.len()));
    }
    if w1 == w2 {
        return Ok(Equivalence::Equivalent(Vec::new()));
    }
    let len = w1.len();
    let s = Search { strands: w1.strands, cyclic };
    let (c1, r1) = s.normalize(&w1.letters);
    let (c2, r2) = s.normalize(&w2.letters);

    let witness = |fwd: &Parents, bwd: &Parents, meet: &[usize]| {
        let mut rules = vec![Rule::CyclicRotate(r1)];
        rules.extend(path_from_root(fwd, meet));
        let back = path_from_root(bwd, meet);
        rules.extend(back.into_iter().rev().map(|r| r.inverse(len)));
        rules.push(Rule::CyclicRotate((len - r2) % len.max(1)));
        tidy(rules, len)
    };

    let mut fwd: Parents = HashMap::from([(c1.clone(), None)]);
    let mut bwd: Parents = HashMap::from([(c2.clone(), None)]);
    if c1 == c2 {
        return Ok(Equivalence::Equivalent(witness(&fwd, &bwd, &c1)));
    }
    let mut front_f = vec![c1];
    let mut front_b = vec![c2];
    let mut expanded = 0usize;
    let mut meet = None;
    'search: while !front_f.is_empty() && !front_b.is_empty() {
        let forward = front_f.len() <= front_b.len();
        let (front, mine, other) = if forward { (&mut front_f, &mut fwd, &bwd) } else { (&mut front_b, &mut bwd, &fwd) };
        let mut next = Vec::new();
        for node in std::mem::take(front) {
            if expanded >= budget {
                return Ok(Equivalence::Unknown);
            }
            expanded += 1;
            for (child, steps) in s.neighbours(&node) {
                if mine.contains_key(&child) {
                    continue;
                }
                mine.insert(child.clone(), Some((node.clone(), steps)));
                if other.contains_key(&child) {
                    meet = Some(child);
                    break 'search;
                }
                next.push(child);
            }
        }
        *front = next;
    }
    if let Some(m) = meet {
        return Ok(Equivalence::Equivalent(witness(&fwd, &bwd, &m)));
    }
    Ok(Equivalence::Unknown)
}
