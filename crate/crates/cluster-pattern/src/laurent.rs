use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::PatternError;

/// Exponent vector ordered graded-lexicographically: total degree first, then
/// lexicographic on the entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate Laurent polynomial with integer coefficients.
///
/// Terms are kept sorted by descending [`Monomial`] order with no zero
/// coefficients, so derived equality is structural equality. Coefficient
/// arithmetic is checked and panics on i128 overflow.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: Vec<(Monomial, i128)>,
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nvars.cmp(&other.nvars).then_with(|| {
            for (a, b) in self.terms.iter().zip(&other.terms) {
                let c = a.0.cmp(&b.0).then(a.1.cmp(&b.1));
                if c != Ordering::Equal {
                    return c;
                }
            }
            self.terms.len().cmp(&other.terms.len())
        })
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn checked(v: Option<i128>) -> i128 {
    v.expect("Laurent coefficient overflowed i128")
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: i128) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The variable x_i (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, 1)
    }

    pub fn monomial(nvars: usize, exps: Vec<i32>, coef: i128) -> Self {
        assert_eq!(exps.len(), nvars);
        if coef == 0 {
            return Self::zero(nvars);
        }
        LaurentPoly { nvars, terms: vec![(Monomial(exps), coef)] }
    }

    /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i32>, i128)>) -> Self {
        let mut map: BTreeMap<Monomial, i128> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            let slot = map.entry(Monomial(e)).or_insert(0);
            *slot = checked(slot.checked_add(c));
        }
        let terms = map.into_iter().rev().filter(|(_, c)| *c != 0).collect();
        LaurentPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1 == 1 && self.terms[0].0 .0.iter().all(|&e| e == 0)
    }

    /// Terms in descending order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i32], i128)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&[i32], i128)> {
        self.terms.first().map(|(m, c)| (m.0.as_slice(), *c))
    }

    /// Single term with coefficient one, or None.
    pub fn as_monomial(&self) -> Option<&[i32]> {
        match self.terms.as_slice() {
            [(m, 1)] => Some(&m.0),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.0.iter().all(|&e| e == 0))
    }

    pub fn constant_term(&self) -> i128 {
        self.terms.iter().find(|(m, _)| m.0.iter().all(|&e| e == 0)).map_or(0, |t| t.1)
    }

    /// Componentwise minimum exponent over all terms; zero vector for the zero polynomial.
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut out = match self.terms.first() {
            Some((m, _)) => m.0.clone(),
            None => return vec![0; self.nvars],
        };
        for (m, _) in &self.terms {
            for (o, &e) in out.iter_mut().zip(&m.0) {
                *o = (*o).min(e);
            }
        }
        out
    }

    pub fn max_exponents(&self) -> Vec<i32> {
        let mut out = match self.terms.first() {
            Some((m, _)) => m.0.clone(),
            None => return vec![0; self.nvars],
        };
        for (m, _) in &self.terms {
            for (o, &e) in out.iter_mut().zip(&m.0) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// Multiplies by the monomial x^shift.
    pub fn shift(&self, shift: &[i32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial(m.0.iter().zip(shift).map(|(a, b)| a + b).collect()), *c))
            .collect();
        // a common shift preserves the order
        LaurentPoly { nvars: self.nvars, terms }
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.0.iter().all(|&e| e >= 0))
    }

    pub fn coefficients_nonnegative(&self) -> bool {
        self.terms.iter().all(|(_, c)| *c > 0)
    }

    pub fn content(&self) -> i128 {
        self.terms.iter().fold(0, |g, (_, c)| gcd_i128(g, *c))
    }

    pub fn scale(&self, k: i128) -> Self {
        if k == 0 {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), checked(c.checked_mul(k)))).collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    /// Exact division of every coefficient by k.
    pub fn div_scalar(&self, k: i128) -> Option<Self> {
        if k == 0 || self.terms.iter().any(|(_, c)| c % k != 0) {
            return None;
        }
        Some(LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c / k)).collect() })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = checked(self.terms[i].1.checked_add(other.terms[j].1));
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        LaurentPoly { nvars: self.nvars, terms: out }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut map: BTreeMap<Monomial, i128> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = Monomial(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect());
                let slot = map.entry(e).or_insert(0);
                *slot = checked(slot.checked_add(checked(ca.checked_mul(*cb))));
            }
        }
        LaurentPoly { nvars: self.nvars, terms: map.into_iter().rev().filter(|(_, c)| *c != 0).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / other`, or `NonLaurentResult` when the quotient
    /// is not a Laurent polynomial.
    pub fn div_exact(&self, other: &Self) -> Result<Self, PatternError> {
        if other.is_zero() {
            return Err(PatternError::NonLaurentResult("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        if let [(m, c)] = other.terms.as_slice() {
            let neg: Vec<i32> = m.0.iter().map(|e| -e).collect();
            return self
                .div_scalar(*c)
                .map(|q| q.shift(&neg))
                .ok_or_else(|| PatternError::NonLaurentResult("coefficient not divisible".into()));
        }
        // Strip monomial factors so both sides are polynomials with no
        // variable dividing them, then run grlex division.
        let a = other.min_exponents();
        let b = self.min_exponents();
        let g0 = other.shift(&a.iter().map(|e| -e).collect::<Vec<_>>());
        let mut r = self.shift(&b.iter().map(|e| -e).collect::<Vec<_>>());
        let (lm, lc) = (g0.terms[0].0.clone(), g0.terms[0].1);
        let mut q: Vec<(Vec<i32>, i128)> = Vec::new();
        while let Some((rm, rc)) = r.terms.first().cloned() {
            let e: Vec<i32> = rm.0.iter().zip(&lm.0).map(|(x, y)| x - y).collect();
            if e.iter().any(|&x| x < 0) || rc % lc != 0 {
                return Err(PatternError::NonLaurentResult("nonzero remainder".into()));
            }
            let t = LaurentPoly::monomial(self.nvars, e.clone(), rc / lc);
            r = r.sub(&t.mul(&g0));
            q.push((e, rc / lc));
        }
        let shift: Vec<i32> = b.iter().zip(&a).map(|(x, y)| x - y).collect();
        Ok(LaurentPoly::from_terms(self.nvars, q).shift(&shift))
    }

    /// Substitutes values for variables: each variable x_i becomes `vals[i]`,
    /// which must be a monomial when x_i appears with a negative exponent.
    pub fn evaluate_i128(&self, vals: &[i128]) -> Option<(i128, i128)> {
        // returns numerator/denominator of the rational value
        let mut num = 0i128;
        let mut den = 1i128;
        for (m, c) in &self.terms {
            let mut tn = *c;
            let mut td = 1i128;
            for (&e, &v) in m.0.iter().zip(vals) {
                if e >= 0 {
                    tn = tn.checked_mul(v.checked_pow(e as u32)?)?;
                } else {
                    td = td.checked_mul(v.checked_pow((-e) as u32)?)?;
                }
            }
            if td == 0 {
                return None;
            }
            num = num.checked_mul(td)?.checked_add(tn.checked_mul(den)?)?;
            den = den.checked_mul(td)?;
            let g = gcd_i128(num, den);
            if g > 1 {
                num /= g;
                den /= g;
            }
        }
        Some((num, den))
    }

    /// Appends `extra` new variables with exponent zero.
    pub fn extend_vars(&self, extra: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.extend(std::iter::repeat(0).take(extra));
                (Monomial(e), *c)
            })
            .collect();
        LaurentPoly { nvars: self.nvars + extra, terms }
    }

    /// Drops the last variables, setting them to one.
    pub fn specialize_tail_to_one(&self, keep: usize) -> Self {
        LaurentPoly::from_terms(keep, self.terms.iter().map(|(m, c)| (m.0[..keep].to_vec(), *c)))
    }
}

pub(crate) fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    /// Prints as `(numerator)/(denominator monomial)` with variables x1, x2, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mins = self.min_exponents();
        let den: Vec<i32> = mins.iter().map(|&e| (-e).max(0)).collect();
        let num = self.shift(&den);
        let mut parts = Vec::new();
        for (m, c) in num.terms.iter().rev() {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            let body = mono.join("*");
            let s = match (body.is_empty(), *c) {
                (true, c) => c.to_string(),
                (false, 1) => body,
                (false, -1) => format!("-{body}"),
                (false, c) => format!("{c}*{body}"),
            };
            parts.push(s);
        }
        let mut numer = parts.join(" + ").replace("+ -", "- ");
        let den_str: Vec<String> = den
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
            .collect();
        if den_str.is_empty() {
            write!(f, "{numer}")
        } else {
            if parts.len() > 1 {
                numer = format!("({numer})");
            }
            let d = den_str.join("*");
            if den_str.len() > 1 {
                write!(f, "{numer}/({d})")
            } else {
                write!(f, "{numer}/{d}")
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<i32>,
    coef: i128,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson { terms: self.terms.iter().map(|(m, c)| TermJson { exp: m.0.clone(), coef: *c }).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        let nvars = j.terms.first().map_or(0, |t| t.exp.len());
        if j.terms.iter().any(|t| t.exp.len() != nvars) {
            return Err(serde::de::Error::custom("terms have differing exponent lengths"));
        }
        Ok(LaurentPoly::from_terms(nvars, j.terms.into_iter().map(|t| (t.exp, t.coef))))
    }
}

/// Parses polynomials written like `(1 + x2^3)/x1` or `x1*x2^-1 + 2`.
pub fn parse_laurent(text: &str, nvars: usize) -> Result<LaurentPoly, PatternError> {
    Parser { s: text.as_bytes(), pos: 0, nvars }.parse_all()
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PatternError {
        PatternError::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<LaurentPoly, PatternError> {
        let p = self.expr()?;
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<LaurentPoly, PatternError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly, PatternError> {
        let mut acc = self.factor()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                b'/' => {
                    self.pos += 1;
                    let d = self.factor()?;
                    acc = acc.div_exact(&d)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn int(&mut self) -> Result<i64, PatternError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.s.len() && self.s[self.pos] == b'-' {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| self.err("expected integer"))
    }

    fn factor(&mut self) -> Result<LaurentPoly, PatternError> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                e
            }
            Some(b'x') => {
                self.pos += 1;
                let i = self.int()?;
                if i < 1 || i as usize > self.nvars {
                    return Err(self.err("variable index out of range"));
                }
                LaurentPoly::var(self.nvars, i as usize - 1)
            }
            Some(b'-') => {
                self.pos += 1;
                return Ok(self.factor()?.neg());
            }
            Some(c) if c.is_ascii_digit() => LaurentPoly::constant(self.nvars, self.int()? as i128),
            _ => return Err(self.err("unexpected token")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.int()?;
            if e >= 0 {
                return Ok(base.pow(e as u32));
            }
            return LaurentPoly::one(self.nvars).div_exact(&base.pow((-e) as u32));
        }
        Ok(base)
    }
}
