use serde::{Deserialize, Serialize};

use crate::CoreError;

/// An m x n integer matrix. Rows 0..n are mutable, rows n..m are frozen.
///
/// Indices are 0-based throughout the library; the CLI converts from the
/// 1-based numbering used when talking about quivers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct ExchangeMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
}

impl TryFrom<MatrixJson> for ExchangeMatrix {
    type Error = CoreError;
    fn try_from(j: MatrixJson) -> Result<Self, CoreError> {
        if j.entries.len() != j.rows || j.entries.iter().any(|r| r.len() != j.cols) {
            return Err(CoreError::Shape(format!(
                "declared {}x{} but entries do not match",
                j.rows, j.cols
            )));
        }
        ExchangeMatrix::from_rows(j.entries, j.cols)
    }
}

impl From<ExchangeMatrix> for MatrixJson {
    fn from(b: ExchangeMatrix) -> Self {
        MatrixJson { rows: b.rows, cols: b.cols, entries: b.to_rows() }
    }
}

impl ExchangeMatrix {
    /// Builds a matrix from row vectors. `n` is the number of mutable columns;
    /// every row must have exactly `n` entries and there must be at least `n` rows.
    pub fn from_rows(rows: Vec<Vec<i64>>, n: usize) -> Result<Self, CoreError> {
        let m = rows.len();
        if m < n {
            return Err(CoreError::Shape(format!("{m} rows but {n} mutable columns")));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(CoreError::Shape(format!("row {bad} has length {}", rows[bad].len())));
        }
        let b = ExchangeMatrix { rows: m, cols: n, entries: rows.into_iter().flatten().collect() };
        for i in 0..n {
            if b.get(i, i) != 0 {
                return Err(CoreError::NonZeroDiagonal(i));
            }
        }
        Ok(b)
    }

    /// Square matrix with no frozen rows.
    pub fn square(rows: Vec<Vec<i64>>) -> Result<Self, CoreError> {
        let n = rows.len();
        Self::from_rows(rows, n)
    }

    pub fn zero(m: usize, n: usize) -> Self {
        assert!(m >= n);
        ExchangeMatrix { rows: m, cols: n, entries: vec![0; m * n] }
    }

    /// Quiver matrix from a list of arrows `(i, j)` meaning i -> j, b[i][j] = +1.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Self {
        let mut b = Self::zero(n, n);
        for &(i, j) in arrows {
            b.add(i, j, 1);
            b.add(j, i, -1);
        }
        b
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of mutable indices.
    pub fn n(&self) -> usize {
        self.cols
    }

    /// Total number of variables (mutable and frozen).
    pub fn m(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.cols + j] = v;
    }

    fn add(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.cols + j] += v;
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(|r| r.to_vec()).collect()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// The n x n principal part.
    pub fn principal(&self) -> ExchangeMatrix {
        let n = self.cols;
        let mut out = Self::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(i, j));
            }
        }
        out
    }

    /// Appends an identity block below the principal part (principal coefficients).
    pub fn with_principal_coefficients(&self) -> ExchangeMatrix {
        let n = self.cols;
        let mut rows = self.principal().to_rows();
        for i in 0..n {
            let mut r = vec![0; n];
            r[i] = 1;
            rows.push(r);
        }
        ExchangeMatrix { rows: 2 * n, cols: n, entries: rows.into_iter().flatten().collect() }
    }

    /// Matrix mutation at `k`.
    pub fn mutate(&self, k: usize) -> Result<ExchangeMatrix, CoreError> {
        if k >= self.cols {
            return Err(CoreError::IndexOutOfRange { index: k, n: self.cols });
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = if i == k || j == k {
                    -self.get(i, j)
                } else {
                    let bik = self.get(i, k);
                    let bkj = self.get(k, j);
                    self.get(i, j) + (bik.abs() * bkj + bik * bkj.abs()) / 2
                };
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    /// Relabels mutable indices: entry (i, j) of the result is entry
    /// (perm[i], perm[j]) of `self`. Frozen rows keep their position and only
    /// have their columns permuted.
    pub fn permute(&self, perm: &[usize]) -> ExchangeMatrix {
        assert_eq!(perm.len(), self.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            let src_i = if i < self.cols { perm[i] } else { i };
            for j in 0..self.cols {
                out.set(i, j, self.get(src_i, perm[j]));
            }
        }
        out
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let n = self.cols;
        (0..n).all(|i| (0..n).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    /// True iff the principal quiver has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm on arrows i -> j where b[i][j] > 0.
        let n = self.cols;
        let mut indeg = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j) > 0 {
                    indeg[j] += 1;
                }
            }
        }
        let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(i) = stack.pop() {
            seen += 1;
            for j in 0..n {
                if self.get(i, j) > 0 {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        stack.push(j);
                    }
                }
            }
        }
        seen == n
    }

    /// Sign of each mutable vertex when the principal quiver is bipartite:
    /// `+1` for sources (all b[i][j] >= 0), `-1` for sinks. Isolated vertices
    /// count as sources. Returns `None` if some vertex is neither.
    pub fn bipartite_signs(&self) -> Option<Vec<i8>> {
        let n = self.cols;
        let mut signs = Vec::with_capacity(n);
        for i in 0..n {
            let row = (0..n).map(|j| self.get(i, j));
            let pos = row.clone().any(|v| v > 0);
            let neg = row.clone().any(|v| v < 0);
            match (pos, neg) {
                (true, true) => return None,
                (false, true) => signs.push(-1),
                _ => signs.push(1),
            }
        }
        Some(signs)
    }

    /// Smallest positive d with d_i b_ij = -d_j b_ji on the principal part.
    pub fn skew_symmetrizer(&self) -> Option<Vec<u64>> {
        let n = self.cols;
        symmetrizer(n, |i, j| self.get(i, j), -1)
    }

    /// Connected components of the principal part's underlying graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.cols;
        components(n, |i, j| self.get(i, j) != 0 || self.get(j, i) != 0)
    }
}

impl std::fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

pub(crate) fn components(n: usize, adj: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut head = 0;
        while head < members.len() {
            let u = members[head];
            head += 1;
            for v in 0..n {
                if comp[v] == usize::MAX && adj(u, v) {
                    comp[v] = id;
                    members.push(v);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Solves d_i a_ij = sign * d_j a_ji with positive integers d, normalized to
/// gcd 1 on each connected component. `sign = -1` gives skew-symmetrizers,
/// `sign = +1` symmetrizers.
pub(crate) fn symmetrizer(n: usize, a: impl Fn(usize, usize) -> i64, sign: i64) -> Option<Vec<u64>> {
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (a(i, j), a(j, i));
            if i != j && (x == 0) != (y == 0) {
                return None;
            }
            // d_i x = sign d_j y with d > 0 forces sign(x) = sign * sign(y).
            if i != j && x != 0 && x.signum() != sign * y.signum() {
                return None;
            }
        }
    }
    // Rational weights as (num, den) relative to the component root.
    let mut w: Vec<Option<(u64, u64)>> = vec![None; n];
    let mut d = vec![0u64; n];
    for comp in components(n, |i, j| a(i, j) != 0) {
        let root = comp[0];
        w[root] = Some((1, 1));
        let mut queue = vec![root];
        let mut head = 0;
        while head < queue.len() {
            let i = queue[head];
            head += 1;
            let (pn, pd) = w[i].unwrap();
            for j in 0..n {
                let x = a(i, j);
                if j == i || x == 0 {
                    continue;
                }
                // d_j = d_i * |a_ij| / |a_ji|
                let y = a(j, i);
                let num = pn * x.unsigned_abs();
                let den = pd * y.unsigned_abs();
                let g = gcd(num, den);
                let cand = (num / g, den / g);
                match w[j] {
                    None => {
                        w[j] = Some(cand);
                        queue.push(j);
                    }
                    Some(existing) if existing != cand => return None,
                    _ => {}
                }
            }
        }
        let lcm_den = comp.iter().fold(1u64, |acc, &i| {
            let den = w[i].unwrap().1;
            acc / gcd(acc, den) * den
        });
        let vals: Vec<u64> = comp.iter().map(|&i| {
            let (p, q) = w[i].unwrap();
            p * (lcm_den / q)
        }).collect();
        let g = vals.iter().fold(0u64, |acc, &v| gcd(acc, v));
        for (&i, v) in comp.iter().zip(vals) {
            d[i] = v / g;
        }
    }
    Some(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExchangeMatrix {
        ExchangeMatrix::square(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn symmetrizer_examples() {
        assert_eq!(m(&[&[0, 1], &[-3, 0]]).skew_symmetrizer(), Some(vec![3, 1]));
        assert_eq!(m(&[&[0, 1], &[-1, 0]]).skew_symmetrizer(), Some(vec![1, 1]));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).skew_symmetrizer(), None);
    }

    #[test]
    fn symmetrizer_rejects_inconsistent_cycle() {
        // ratios around the triangle multiply to 2, not 1
        let b = m(&[&[0, 2, -1], &[-1, 0, 1], &[1, -1, 0]]);
        assert_eq!(b.skew_symmetrizer(), None);
    }

    #[test]
    fn disconnected_components_normalized_separately() {
        let b = m(&[&[0, 2, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 3], &[0, 0, -1, 0]]);
        assert_eq!(b.skew_symmetrizer(), Some(vec![1, 2, 1, 3]));
    }

    #[test]
    fn mutation_rank2_and_involution() {
        let b = m(&[&[0, 1], &[-3, 0]]);
        let b1 = b.mutate(0).unwrap();
        assert_eq!(b1, m(&[&[0, -1], &[3, 0]]));
        assert_eq!(b1.mutate(0).unwrap(), b);
        assert!(b.mutate(2).is_err());
    }

    #[test]
    fn acyclicity() {
        let star = ExchangeMatrix::from_arrows(5, &[(1, 0), (2, 0), (3, 0), (4, 0)]);
        assert!(star.is_acyclic());
        let tri = ExchangeMatrix::from_arrows(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(!tri.is_acyclic());
        assert!(m(&[&[0, 1], &[-3, 0]]).is_acyclic());
    }

    #[test]
    fn json_round_trip() {
        let b = ExchangeMatrix::from_arrows(3, &[(0, 1), (2, 1)]).with_principal_coefficients();
        let s = serde_json::to_string(&b).unwrap();
        assert!(s.contains("\"rows\":6"));
        let back: ExchangeMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn permute_keeps_frozen_rows() {
        let b = ExchangeMatrix::from_arrows(2, &[(0, 1)]).with_principal_coefficients();
        let p = b.permute(&[1, 0]);
        assert_eq!(p.to_rows(), vec![vec![0, -1], vec![1, 0], vec![0, 1], vec![1, 0]]);
    }
}
