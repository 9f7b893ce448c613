use serde::{Deserialize, Serialize};

use exchange_core::ExchangeMatrix;

use crate::{Fraction, LaurentPoly, PatternError};

/// Cluster variables (mutable ones first, then frozen) with their exchange matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed {
    pub variables: Vec<LaurentPoly>,
    pub matrix: ExchangeMatrix,
}

impl Seed {
    /// The initial seed: x_i is the i-th generator of the ambient field.
    pub fn initial(matrix: ExchangeMatrix) -> Seed {
        let m = matrix.m();
        Seed { variables: (0..m).map(|i| LaurentPoly::var(m, i)).collect(), matrix }
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn m(&self) -> usize {
        self.matrix.m()
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.variables[..self.n()]
    }

    pub fn mutate(&self, k: usize) -> Result<Seed, PatternError> {
        mutate_seed(self, k)
    }

    /// Applies mutations left to right.
    pub fn mutate_path(&self, path: &[usize]) -> Result<Seed, PatternError> {
        path.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }
}

pub fn mutate_matrix(b: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix, PatternError> {
    Ok(b.mutate(k)?)
}

/// Seed mutation at k: x'_k x_k = prod_{b_jk > 0} x_j^{b_jk} + prod_{b_jk < 0} x_j^{-b_jk}.
pub fn mutate_seed(s: &Seed, k: usize) -> Result<Seed, PatternError> {
    let b = &s.matrix;
    if k >= b.n() {
        return Err(PatternError::IndexOutOfRange { index: k, n: b.n() });
    }
    let nv = s.variables[0].nvars();
    let mut pos = LaurentPoly::one(nv);
    let mut neg = LaurentPoly::one(nv);
    for j in 0..b.m() {
        let e = b.get(j, k);
        if e > 0 {
            pos = pos.mul(&s.variables[j].pow(e as u32));
        } else if e < 0 {
            neg = neg.mul(&s.variables[j].pow((-e) as u32));
        }
    }
    let xk = pos.add(&neg).div_exact(&s.variables[k])?;
    let mut variables = s.variables.clone();
    variables[k] = xk;
    Ok(Seed { variables, matrix: b.mutate(k)? })
}

/// Sources (`I_+`) and sinks (`I_-`) of a bipartite principal quiver.
/// Isolated vertices are counted as sources.
pub fn bipartition(b: &ExchangeMatrix) -> Result<(Vec<usize>, Vec<usize>), PatternError> {
    let signs = b.bipartite_signs().ok_or(PatternError::NotBipartite)?;
    let plus = (0..b.n()).filter(|&i| signs[i] > 0).collect();
    let minus = (0..b.n()).filter(|&i| signs[i] < 0).collect();
    Ok((plus, minus))
}

/// mu_Q^r with mu_Q = mu_- mu_+ (sources first, then sinks); negative r
/// applies (mu_+ mu_-)^{-r}.
pub fn coxeter_mutation(s: &Seed, r: i64) -> Result<Seed, PatternError> {
    let (plus, minus) = bipartition(&s.matrix)?;
    let step: Vec<usize> = if r >= 0 {
        plus.iter().chain(&minus).copied().collect()
    } else {
        minus.iter().chain(&plus).copied().collect()
    };
    let mut cur = s.clone();
    for _ in 0..r.unsigned_abs() {
        cur = cur.mutate_path(&step)?;
    }
    debug_assert_eq!(cur.matrix, s.matrix);
    Ok(cur)
}

/// Denominator vector: d_i = -(minimum exponent of x_i), for i < n.
pub fn denominator_vector(z: &LaurentPoly, n: usize) -> Result<Vec<i64>, PatternError> {
    if z.is_zero() {
        return Err(PatternError::ZeroPolynomial);
    }
    Ok(z.min_exponents()[..n].iter().map(|&e| -(e as i64)).collect())
}

/// Y-seed: n reduced fractions with an exchange matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct YSeed {
    pub yvars: Vec<Fraction>,
    pub matrix: ExchangeMatrix,
}

impl YSeed {
    /// y_1..y_n as independent generators.
    pub fn generators(matrix: ExchangeMatrix) -> YSeed {
        let n = matrix.n();
        YSeed { yvars: (0..n).map(|i| Fraction::from_laurent(LaurentPoly::var(n, i))).collect(), matrix }
    }

    /// y_j = prod_i x_i^{b_ij} over all rows, read from a seed's variables.
    pub fn from_seed(s: &Seed) -> YSeed {
        let b = &s.matrix;
        let nv = s.variables[0].nvars();
        let yvars = (0..b.n())
            .map(|j| {
                let mut f = Fraction::one(nv);
                for i in 0..b.m() {
                    let e = b.get(i, j);
                    if e != 0 {
                        f = f.mul(&Fraction::from_laurent(s.variables[i].clone()).pow(e));
                    }
                }
                f
            })
            .collect();
        YSeed { yvars, matrix: b.clone() }
    }

    pub fn mutate(&self, k: usize) -> Result<YSeed, PatternError> {
        mutate_yseed(self, k)
    }
}

/// y'_k = 1/y_k and y'_i = y_i y_k^{max(b_ki, 0)} (1 + y_k)^{-b_ki} otherwise.
pub fn mutate_yseed(y: &YSeed, k: usize) -> Result<YSeed, PatternError> {
    let b = &y.matrix;
    if k >= b.n() {
        return Err(PatternError::IndexOutOfRange { index: k, n: b.n() });
    }
    let yk = &y.yvars[k];
    let one_plus = yk.add(&Fraction::one(yk.nvars()));
    let yvars = (0..b.n())
        .map(|i| {
            if i == k {
                return yk.inv();
            }
            let bki = b.get(k, i);
            let mut f = y.yvars[i].clone();
            if bki > 0 {
                f = f.mul(&yk.pow(bki));
            }
            if bki != 0 {
                f = f.mul(&one_plus.pow(-bki));
            }
            f
        })
        .collect();
    Ok(YSeed { yvars, matrix: b.mutate(k)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_laurent;

    #[test]
    fn rank_two_example() {
        let b = ExchangeMatrix::square(vec![vec![0, 1], vec![-3, 0]]).unwrap();
        let s1 = Seed::initial(b).mutate(0).unwrap();
        assert_eq!(s1.variables[0], parse_laurent("(1 + x2^3)/x1", 2).unwrap());
        assert_eq!(s1.matrix.to_rows(), vec![vec![0, -1], vec![3, 0]]);
        let s2 = s1.mutate(1).unwrap();
        assert_eq!(s2.variables[1], parse_laurent("(1 + x1 + x2^3)/(x1*x2)", 2).unwrap());
    }

    #[test]
    fn yseed_example() {
        let b = ExchangeMatrix::square(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        let y = YSeed::generators(b).mutate(0).unwrap();
        let one = LaurentPoly::one(2);
        let y1 = LaurentPoly::var(2, 0);
        let y2 = LaurentPoly::var(2, 1);
        assert_eq!(y.yvars[0], Fraction::new(one.clone(), y1.clone()));
        assert_eq!(y.yvars[1], Fraction::new(y1.mul(&y2), one.add(&y1)));
    }

    #[test]
    fn denominator_vectors() {
        let z = parse_laurent("(1 + x2)/x1", 2).unwrap();
        assert_eq!(denominator_vector(&z, 2).unwrap(), vec![1, 0]);
        assert_eq!(denominator_vector(&LaurentPoly::var(2, 0), 2).unwrap(), vec![-1, 0]);
        assert!(denominator_vector(&LaurentPoly::zero(2), 2).is_err());
    }
}
