use serde::{Deserialize, Serialize};

use crate::matrix::{components, symmetrizer};
use crate::{CoreError, ExchangeMatrix};

/// Generalized Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct CartanMatrix {
    n: usize,
    c: Vec<i64>,
}

impl TryFrom<Vec<Vec<i64>>> for CartanMatrix {
    type Error = CoreError;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self, CoreError> {
        CartanMatrix::new(rows)
    }
}

impl From<CartanMatrix> for Vec<Vec<i64>> {
    fn from(c: CartanMatrix) -> Self {
        c.to_rows()
    }
}

impl CartanMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, CoreError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(CoreError::Shape("Cartan matrix must be square".into()));
        }
        let c = CartanMatrix { n, c: rows.into_iter().flatten().collect() };
        for i in 0..n {
            if c.get(i, i) != 2 {
                return Err(CoreError::InvalidCartan(format!("c[{i}][{i}] != 2")));
            }
            for j in 0..n {
                if i != j {
                    if c.get(i, j) > 0 {
                        return Err(CoreError::InvalidCartan(format!("c[{i}][{j}] > 0")));
                    }
                    if (c.get(i, j) == 0) != (c.get(j, i) == 0) {
                        return Err(CoreError::InvalidCartan(format!("zero pattern at ({i},{j})")));
                    }
                }
            }
        }
        Ok(c)
    }

    pub(crate) fn from_flat(n: usize, c: Vec<i64>) -> Self {
        CartanMatrix { n, c }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.c[i * self.n + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn transpose(&self) -> CartanMatrix {
        let n = self.n;
        CartanMatrix { n, c: (0..n * n).map(|k| self.get(k % n, k / n)).collect() }
    }

    /// Entry (i, j) of the result is entry (perm[i], perm[j]) of `self`.
    pub fn permute(&self, perm: &[usize]) -> CartanMatrix {
        let n = self.n;
        CartanMatrix { n, c: (0..n * n).map(|k| self.get(perm[k / n], perm[k % n])).collect() }
    }

    pub fn submatrix(&self, idx: &[usize]) -> CartanMatrix {
        let k = idx.len();
        CartanMatrix { n: k, c: (0..k * k).map(|t| self.get(idx[t / k], idx[t % k])).collect() }
    }

    /// Positive d with d_i c_ij = d_j c_ji, gcd 1 per component.
    pub fn symmetrizer(&self) -> Option<Vec<u64>> {
        symmetrizer(self.n, |i, j| if i == j { 0 } else { self.get(i, j) }, 1)
    }

    /// diag(d) * C, symmetric when d is a symmetrizer.
    pub fn symmetrized(&self) -> Option<Vec<Vec<i128>>> {
        let d = self.symmetrizer()?;
        Some(
            (0..self.n)
                .map(|i| (0..self.n).map(|j| d[i] as i128 * self.get(i, j) as i128).collect())
                .collect(),
        )
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        components(self.n, |i, j| i != j && self.get(i, j) != 0)
    }

    /// Positive integer generator of the kernel, if the kernel is one-dimensional
    /// and spanned by a vector with entries of a single sign.
    pub fn null_root(&self) -> Option<Vec<i64>> {
        let k = kernel_basis(&self.to_rows());
        if k.len() != 1 {
            return None;
        }
        let mut v = k.into_iter().next().unwrap();
        if v.iter().all(|&x| x <= 0) {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        if v.iter().all(|&x| x > 0) {
            Some(v)
        } else {
            None
        }
    }
}

/// Cartan counterpart: 2 on the diagonal and -|b_ij| off it.
pub fn cartan_counterpart(b: &ExchangeMatrix) -> CartanMatrix {
    let n = b.n();
    let c = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            if i == j {
                2
            } else {
                -b.get(i, j).abs()
            }
        })
        .collect();
    CartanMatrix::from_flat(n, c)
}

impl std::fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &[Vec<i128>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = a.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Rank over Q via fraction-free elimination.
pub fn rank(a: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = a.to_vec();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let g = gcd_i128(a, b);
                for j in 0..cols {
                    m[i][j] = m[i][j] * (a / g) - m[r][j] * (b / g);
                }
                normalize_row(&mut m[i]);
            }
        }
        r += 1;
    }
    r
}

/// Integer basis of the rational kernel of an integer matrix, each vector primitive.
pub fn kernel_basis(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let g = gcd_i128(a, b);
                for j in 0..cols {
                    m[i][j] = m[i][j] * (a / g) - m[r][j] * (b / g);
                }
                normalize_row(&mut m[i]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        // Row t reads m[t][p_t] x_{p_t} + m[t][f] x_f = 0 for this basis vector.
        let mut scale = 1i128;
        for (t, &p) in pivots.iter().enumerate() {
            if m[t][f] != 0 {
                scale = lcm_i128(scale, m[t][p].abs());
            }
        }
        let mut v = vec![0i128; cols];
        v[f] = scale;
        for (t, &p) in pivots.iter().enumerate() {
            v[p] = -m[t][f] * scale / m[t][p];
        }
        normalize_row(&mut v);
        basis.push(v.into_iter().map(|x| x as i64).collect());
    }
    basis
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

fn lcm_i128(a: i128, b: i128) -> i128 {
    a / gcd_i128(a, b) * b
}

fn normalize_row(r: &mut [i128]) {
    let g = r.iter().fold(0i128, |acc, &x| if acc == 0 { x.abs() } else { gcd_i128(acc, x) });
    if g > 1 {
        r.iter_mut().for_each(|x| *x /= g);
    }
}
