use serde::{Deserialize, Serialize};

use crate::CartanMatrix;

/// Diagram family. Finite, untwisted affine (`Aff*`) and twisted affine.
///
/// Twisted families carry the conventional subscript in [`DynkinType::rank`]:
/// `A2Twisted` with rank 2k is A_{2k}^(2), `A2OddTwisted` with rank 2k-1 is
/// A_{2k-1}^(2), `D2Twisted` with rank k+1 is D_{k+1}^(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    AffA,
    AffB,
    AffC,
    AffD,
    AffE,
    AffF,
    AffG,
    A2Twisted,
    A2OddTwisted,
    D2Twisted,
    E6Twisted,
    D4Twisted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub const fn new(family: Family, rank: usize) -> Self {
        DynkinType { family, rank }
    }

    pub fn is_affine(&self) -> bool {
        !matches!(
            self.family,
            Family::A | Family::B | Family::C | Family::D | Family::E | Family::F | Family::G
        )
    }

    /// Number of diagram nodes.
    pub fn nodes(&self) -> usize {
        use Family::*;
        match self.family {
            A | B | C | D | E | F | G => self.rank,
            AffA | AffB | AffC | AffD | AffE | AffF | AffG => self.rank + 1,
            A2Twisted => self.rank / 2 + 1,
            A2OddTwisted => (self.rank + 1) / 2 + 1,
            D2Twisted => self.rank,
            E6Twisted => 5,
            D4Twisted => 3,
        }
    }

    /// Whether (family, rank) names a diagram in the catalogs.
    pub fn is_valid(&self) -> bool {
        use Family::*;
        let r = self.rank;
        match self.family {
            A => r >= 1,
            B => r >= 2,
            C => r >= 3,
            D => r >= 4,
            E => (6..=8).contains(&r),
            F => r == 4,
            G => r == 2,
            AffA => r >= 1,
            AffB => r >= 3,
            AffC => r >= 2,
            AffD => r >= 4,
            AffE => (6..=8).contains(&r),
            AffF => r == 4,
            AffG => r == 2,
            A2Twisted => r >= 2 && r % 2 == 0,
            A2OddTwisted => r >= 5 && r % 2 == 1,
            D2Twisted => r >= 3,
            E6Twisted => r == 6,
            D4Twisted => r == 4,
        }
    }

    /// The Cartan matrix of the catalog diagram.
    ///
    /// Bond reading: a bond drawn from i towards j with multiplicity k gives
    /// c_ij = -k and c_ji = -1.
    pub fn cartan(&self) -> Option<CartanMatrix> {
        if !self.is_valid() {
            return None;
        }
        use Family::*;
        let k = self.nodes();
        let mut b = Builder::new(k);
        let r = self.rank;
        match self.family {
            A => b.chain(0, k),
            B => {
                b.chain(0, k);
                b.set(k - 2, k - 1, 2);
            }
            C => {
                b.chain(0, k);
                b.set(k - 1, k - 2, 2);
            }
            D => {
                b.chain(0, k - 1);
                b.bond(k - 3, k - 1);
            }
            E => {
                // 0-1-2-...-(r-2) with node r-1 attached to node 2
                b.chain(0, r - 1);
                b.bond(2, r - 1);
            }
            F => {
                b.chain(0, 4);
                b.set(1, 2, 2);
            }
            G => b.set(0, 1, 3),
            AffA => {
                if r == 1 {
                    b.c[1] = -2;
                    b.c[2] = -2;
                } else {
                    b.chain(0, k);
                    b.bond(k - 1, 0);
                }
            }
            AffB => {
                b.fork_chain(k);
                b.set(k - 2, k - 1, 2);
            }
            AffC => {
                b.chain(0, k);
                b.set(0, 1, 2);
                b.set(k - 1, k - 2, 2);
            }
            AffD => {
                if r == 4 {
                    for l in 1..5 {
                        b.bond(0, l);
                    }
                } else {
                    b.fork_chain(k - 1);
                    b.bond(k - 3, k - 1);
                }
            }
            AffE => match r {
                6 => {
                    // center 0 with arms (1,2), (3,4), (5,6)
                    for a in [1, 3, 5] {
                        b.bond(0, a);
                        b.bond(a, a + 1);
                    }
                }
                7 => {
                    b.chain(0, 7);
                    b.bond(3, 7);
                }
                _ => {
                    b.chain(0, 8);
                    b.bond(5, 8);
                }
            },
            AffF => {
                b.chain(0, 5);
                b.set(2, 3, 2);
            }
            AffG => {
                b.chain(0, 3);
                b.set(1, 2, 3);
            }
            A2Twisted => {
                if k == 2 {
                    b.set(0, 1, 4);
                } else {
                    b.chain(0, k);
                    b.set(0, 1, 2);
                    b.set(k - 2, k - 1, 2);
                }
            }
            A2OddTwisted => {
                b.fork_chain(k);
                b.set(k - 1, k - 2, 2);
            }
            D2Twisted => {
                b.chain(0, k);
                b.set(1, 0, 2);
                b.set(k - 2, k - 1, 2);
            }
            E6Twisted => {
                b.chain(0, 5);
                b.set(3, 2, 2);
            }
            D4Twisted => {
                b.chain(0, 3);
                b.set(2, 1, 3);
            }
        }
        Some(b.finish())
    }

    /// Every catalog diagram with exactly `nodes` nodes, finite ones first.
    pub fn catalog_with_nodes(nodes: usize) -> Vec<DynkinType> {
        use Family::*;
        let mut out = Vec::new();
        for fam in [A, B, C, D, E, F, G, AffA, AffB, AffC, AffD, AffE, AffF, AffG, A2Twisted, A2OddTwisted, D2Twisted, E6Twisted, D4Twisted] {
            for r in 1..=2 * nodes + 2 {
                let t = DynkinType::new(fam, r);
                if t.is_valid() && t.nodes() == nodes {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl std::fmt::Display for DynkinType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use Family::*;
        let r = self.rank;
        match self.family {
            A => write!(f, "A{r}"),
            B => write!(f, "B{r}"),
            C => write!(f, "C{r}"),
            D => write!(f, "D{r}"),
            E => write!(f, "E{r}"),
            F => write!(f, "F{r}"),
            G => write!(f, "G{r}"),
            AffA => write!(f, "A~{r}"),
            AffB => write!(f, "B~{r}"),
            AffC => write!(f, "C~{r}"),
            AffD => write!(f, "D~{r}"),
            AffE => write!(f, "E~{r}"),
            AffF => write!(f, "F~{r}"),
            AffG => write!(f, "G~{r}"),
            A2Twisted | A2OddTwisted | D2Twisted | E6Twisted => {
                let letter = match self.family {
                    D2Twisted => "D",
                    E6Twisted => "E",
                    _ => "A",
                };
                write!(f, "{letter}{r}^(2)")
            }
            D4Twisted => write!(f, "D4^(3)"),
        }
    }
}

impl std::str::FromStr for DynkinType {
    type Err = String;

    /// Parses the names produced by `Display`, e.g. `D~4`, `E6^(2)`, `A3`.
    fn from_str(s: &str) -> Result<Self, String> {
        use Family::*;
        let s = s.trim();
        let bad = || format!("unknown Dynkin type {s:?}");
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let rest: String = chars.collect();
        let (affine, rest) = match rest.strip_prefix('~') {
            Some(r) => (true, r.to_string()),
            None => (false, rest),
        };
        let (digits, twist) = match rest.find('^') {
            Some(p) => (rest[..p].to_string(), Some(rest[p..].to_string())),
            None => (rest.clone(), None),
        };
        let r: usize = digits.parse().map_err(|_| bad())?;
        let fam = match (letter, affine, twist.as_deref()) {
            ('A', false, None) => A,
            ('B', false, None) => B,
            ('C', false, None) => C,
            ('D', false, None) => D,
            ('E', false, None) => E,
            ('F', false, None) => F,
            ('G', false, None) => G,
            ('A', true, None) => AffA,
            ('B', true, None) => AffB,
            ('C', true, None) => AffC,
            ('D', true, None) => AffD,
            ('E', true, None) => AffE,
            ('F', true, None) => AffF,
            ('G', true, None) => AffG,
            ('A', false, Some("^(2)")) if r % 2 == 0 => A2Twisted,
            ('A', false, Some("^(2)")) => A2OddTwisted,
            ('D', false, Some("^(2)")) => D2Twisted,
            ('E', false, Some("^(2)")) => E6Twisted,
            ('D', false, Some("^(3)")) => D4Twisted,
            _ => return Err(bad()),
        };
        let t = DynkinType::new(fam, r);
        if t.is_valid() {
            Ok(t)
        } else {
            Err(bad())
        }
    }
}

struct Builder {
    k: usize,
    c: Vec<i64>,
}

impl Builder {
    fn new(k: usize) -> Self {
        let mut c = vec![0; k * k];
        for i in 0..k {
            c[i * k + i] = 2;
        }
        Builder { k, c }
    }

    /// c_ij = -mult, c_ji = -1.
    fn set(&mut self, i: usize, j: usize, mult: i64) {
        self.c[i * self.k + j] = -mult;
        self.c[j * self.k + i] = -1;
    }

    fn bond(&mut self, i: usize, j: usize) {
        self.set(i, j, 1);
    }

    /// Simple bonds lo - lo+1 - ... - hi-1.
    fn chain(&mut self, lo: usize, hi: usize) {
        for i in lo..hi.saturating_sub(1) {
            self.bond(i, i + 1);
        }
    }

    /// Nodes 0 and 1 both attached to 2, then a chain 2 - 3 - ... - (k-1).
    fn fork_chain(&mut self, k: usize) {
        self.bond(0, 2);
        self.chain(1, k);
    }

    fn finish(self) -> CartanMatrix {
        CartanMatrix::from_flat(self.k, self.c)
    }
}
