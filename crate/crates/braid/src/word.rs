use std::fmt;

use serde::{Deserialize, Serialize};

use crate::BraidError;

/// A positive braid word; letters are generator indices 1..strands-1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::Unsupported(format!("{strands} strands")));
        }
        if let Some(&g) = letters.iter().find(|&&g| g == 0 || g >= strands) {
            return Err(BraidError::GeneratorOutOfRange { generator: g, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation; panics on mismatched strand counts.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    /// Moves the first k letters to the end.
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Image in the symmetric group: position p ends at perm[p].
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            at.swap(g - 1, g);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    pub fn count(&self, g: usize) -> usize {
        self.letters.iter().filter(|&&x| x == g).count()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let g = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == g {
                j += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if j - i == 1 {
                write!(f, "s{g}")?;
            } else {
                write!(f, "s{g}^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Parses `term+` with `term := "s" INT ("^" INT)?`, terms separated by whitespace.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord, BraidError> {
    let mut letters = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    let number = |i: &mut usize| -> Option<usize> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        text[start..*i].parse().ok()
    };
    skip_ws(&mut i);
    if i == bytes.len() {
        return Err(BraidError::SyntaxError(i));
    }
    while i < bytes.len() {
        if bytes[i] != b's' {
            return Err(BraidError::SyntaxError(i));
        }
        i += 1;
        let g = number(&mut i).ok_or(BraidError::SyntaxError(i))?;
        let mut e = 1;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            let at = i;
            e = number(&mut i).filter(|&e| e >= 1).ok_or(BraidError::SyntaxError(at))?;
        }
        if i < bytes.len() && !bytes[i].is_ascii_whitespace() {
            return Err(BraidError::SyntaxError(i));
        }
        if g == 0 || g >= strands {
            return Err(BraidError::GeneratorOutOfRange { generator: g, strands });
        }
        letters.extend(std::iter::repeat_n(g, e));
        skip_ws(&mut i);
    }
    BraidWord::new(strands, letters)
}

/// Half twist on N strands. N = 3 uses s2 s1 s2; otherwise
/// s1 (s2 s1) (s3 s2 s1) ... (s_{N-1} ... s1).
pub fn half_twist(strands: usize) -> Result<BraidWord, BraidError> {
    if !(2..=6).contains(&strands) {
        return Err(BraidError::Unsupported(format!("half twist on {strands} strands")));
    }
    if strands == 3 {
        return BraidWord::new(3, vec![2, 1, 2]);
    }
    let mut letters = Vec::new();
    for top in 1..strands {
        letters.extend((1..=top).rev());
    }
    BraidWord::new(strands, letters)
}
