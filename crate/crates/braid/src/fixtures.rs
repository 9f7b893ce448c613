//! The braid words attached to the affine D and tripod (E) families.

use crate::{half_twist, BraidWord, Rule};

fn word(strands: usize, letters: Vec<usize>) -> BraidWord {
    BraidWord::new(strands, letters).expect("fixture letters are in range")
}

fn pow(g: usize, e: usize) -> impl Iterator<Item = usize> {
    std::iter::repeat_n(g, e)
}

/// beta(D~n) = s3 s2 s2 s3 s2^(n-4) s1 s2 s2 s1 on 4 strands.
pub fn beta_affine_d(n: usize) -> BraidWord {
    assert!(n >= 4);
    let mut l = vec![3, 2, 2, 3];
    l.extend(pow(2, n - 4));
    l.extend([1, 2, 2, 1]);
    word(4, l)
}

/// D4 beta(D~n) D4.
pub fn beta_hat_affine_d(n: usize) -> BraidWord {
    let d = half_twist(4).unwrap();
    d.concat(&beta_affine_d(n)).concat(&d)
}

/// Boundary word of the D~n N-graph:
/// s2^k s1 s2^3 s1 s2^3 s1 s2^l s3 s2 s1^2 s2^2 s3 s2^3 s3, k = (n-3)/2, l = (n-4)/2.
pub fn ngraph_word_affine_d(n: usize) -> BraidWord {
    assert!(n >= 4);
    let (k, l) = ((n - 3) / 2, (n - 4) / 2);
    let mut v: Vec<usize> = pow(2, k).collect();
    v.push(1);
    v.extend(pow(2, 3));
    v.push(1);
    v.extend(pow(2, 3));
    v.push(1);
    v.extend(pow(2, l));
    v.extend([3, 2, 1, 1, 2, 2, 3, 2, 2, 2, 3]);
    word(4, v)
}

/// beta(a,b,c) = s1 s2^a s1^(b-1) s2^c on 3 strands.
pub fn beta_tripod(a: usize, b: usize, c: usize) -> BraidWord {
    assert!(a >= 1 && b >= 1 && c >= 1);
    let mut l = vec![1];
    l.extend(pow(2, a));
    l.extend(pow(1, b - 1));
    l.extend(pow(2, c));
    word(3, l)
}

/// D3 beta(a,b,c) D3.
pub fn beta_hat_tripod(a: usize, b: usize, c: usize) -> BraidWord {
    let d = half_twist(3).unwrap();
    d.concat(&beta_tripod(a, b, c)).concat(&d)
}

/// s2 s1^(a+1) s2 s1^(b+1) s2 s1^(c+1).
pub fn ngraph_word_tripod(a: usize, b: usize, c: usize) -> BraidWord {
    let mut l = Vec::new();
    for e in [a, b, c] {
        l.push(2);
        l.extend(pow(1, e + 1));
    }
    word(3, l)
}

/// Rules taking `beta_hat_tripod(a,b,c)` to `ngraph_word_tripod(a,b,c)`:
/// s2 s1 s2^a -> s1^a s2 s1 at the front, then s2^c s2 s1 s2 -> s1 s2 s1^(c+1)
/// at the back, one braid relation per letter.
pub fn tripod_derivation(a: usize, b: usize, c: usize) -> Vec<Rule> {
    let len = 3 + 1 + a + (b - 1) + c + 3;
    let mut rules: Vec<Rule> = (0..a).map(|t| Rule::BraidRel { i: 1, pos: 2 + t }).collect();
    rules.extend((0..=c).map(|t| Rule::BraidRel { i: 1, pos: len - 3 - t }));
    rules
}

/// The D~4 chain of words related by single relations and one rotation,
/// starting and ending at the N-graph boundary word.
pub fn affine_d4_chain() -> Vec<BraidWord> {
    [
        [1, 2, 2, 2, 1, 2, 2, 2, 1, 3, 2, 1, 1, 2, 2, 3, 2, 2, 2, 3],
        [1, 2, 2, 1, 2, 1, 2, 2, 1, 3, 2, 1, 1, 2, 3, 2, 3, 2, 2, 3],
        [1, 2, 1, 2, 1, 1, 2, 2, 1, 3, 2, 1, 1, 3, 2, 3, 3, 2, 2, 3],
        [1, 2, 1, 2, 1, 1, 2, 2, 1, 3, 2, 3, 1, 1, 2, 3, 3, 2, 2, 3],
        [2, 1, 2, 2, 1, 1, 2, 2, 1, 2, 3, 2, 1, 1, 2, 3, 3, 2, 2, 3],
        [1, 2, 2, 1, 1, 2, 1, 2, 1, 3, 2, 1, 1, 2, 3, 3, 2, 3, 2, 3],
        [1, 2, 2, 1, 2, 1, 2, 2, 1, 3, 2, 1, 1, 2, 3, 2, 3, 2, 2, 3],
        [1, 2, 2, 2, 1, 2, 2, 2, 1, 3, 2, 1, 1, 2, 2, 3, 2, 2, 2, 3],
    ]
    .into_iter()
    .map(|l| word(4, l.to_vec()))
    .collect()
}

/// The general D~n chain: nine words, consecutive ones related by braid
/// moves, the fifth to sixth by rotating one letter. First and last agree.
pub fn affine_d_chain(n: usize) -> Vec<BraidWord> {
    assert!(n >= 4);
    let (k, l) = ((n - 3) / 2, (n - 4) / 2);
    let rows: [(usize, &[usize], usize, &[usize]); 9] = [
        (k, &[1, 2, 2, 2, 1, 2, 2, 2, 1], l, &[3, 2, 1, 1, 2, 2, 3, 2, 2, 2, 3]),
        (k, &[1, 2, 2, 1, 2, 1, 2, 2, 1], l, &[3, 2, 1, 1, 2, 3, 2, 3, 2, 2, 3]),
        (k, &[1, 2, 1, 2, 1, 1, 2, 2, 1], l, &[3, 2, 1, 1, 3, 2, 3, 3, 2, 2, 3]),
        (k, &[2, 1, 2, 2, 1, 1, 2, 2, 1], l, &[3, 2, 3, 1, 1, 2, 3, 3, 2, 2, 3]),
        (k + 1, &[1, 2, 2, 1, 1, 2, 2, 1], l + 1, &[3, 2, 1, 1, 2, 3, 3, 2, 2, 3]),
        (k, &[1, 2, 2, 1, 1, 2, 2, 1, 2], l, &[3, 2, 1, 1, 2, 3, 3, 2, 2, 3, 2]),
        (k, &[1, 2, 2, 1, 1, 2, 1, 2, 1], l, &[3, 2, 1, 1, 2, 3, 3, 2, 3, 2, 3]),
        (k, &[1, 2, 2, 1, 2, 1, 2, 2, 1], l, &[3, 2, 1, 1, 2, 3, 2, 3, 2, 2, 3]),
        (k, &[1, 2, 2, 2, 1, 2, 2, 2, 1], l, &[3, 2, 1, 1, 2, 2, 3, 2, 2, 2, 3]),
    ];
    rows.iter()
        .map(|&(k, mid, l, tail)| {
            let mut v: Vec<usize> = pow(2, k).collect();
            v.extend_from_slice(mid);
            v.extend(pow(2, l));
            v.extend_from_slice(tail);
            word(4, v)
        })
        .collect()
}

/// The moves realising `affine_d_chain(n)` row by row: twelve braid
/// relations, two commutations and the rotation, grouped per step.
pub fn affine_d_chain_moves(n: usize) -> Vec<Vec<Rule>> {
    assert!(n >= 4);
    let (k, l) = ((n - 3) / 2, (n - 4) / 2);
    let (p, t) = (k, k + 9 + l);
    let rel = |i, pos| Rule::BraidRel { i, pos };
    vec![
        vec![rel(1, p + 3), rel(2, t + 5)],
        vec![rel(1, p + 2), rel(2, t + 4)],
        vec![rel(1, p), Rule::Comm { i: 1, j: 3, pos: t + 3 }, Rule::Comm { i: 1, j: 3, pos: t + 2 }],
        vec![rel(2, t)],
        vec![Rule::CyclicRotate(1)],
        vec![rel(1, p + 6), rel(2, t + 8)],
        vec![rel(1, p + 4), rel(2, t + 6)],
        vec![rel(1, p + 3), rel(2, t + 5)],
    ]
}
