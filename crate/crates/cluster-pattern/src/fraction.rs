use std::fmt;

use serde::{Deserialize, Serialize};

use crate::laurent::gcd_i128;
use crate::LaurentPoly;

/// Polynomial gcd over Z, normalized to a positive leading coefficient.
///
/// Inputs must be genuine polynomials (no negative exponents). Uses recursive
/// content and primitive pseudo-remainder sequences, eliminating the highest
/// occurring variable first.
pub fn poly_gcd(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    debug_assert!(f.is_polynomial() && g.is_polynomial());
    let n = f.nvars();
    if f.is_zero() {
        return normalize_sign(g.clone());
    }
    if g.is_zero() {
        return normalize_sign(f.clone());
    }
    let var = (0..n).rev().find(|&v| occurs(f, v) || occurs(g, v));
    let Some(v) = var else {
        return LaurentPoly::constant(n, gcd_i128(f.constant_term(), g.constant_term()));
    };
    let cf = coeffs_in(f, v);
    let cg = coeffs_in(g, v);
    let cont_f = content_of(&cf);
    let cont_g = content_of(&cg);
    let c = poly_gcd(&cont_f, &cont_g);
    let mut a = primitive(&cf, &cont_f);
    let mut b = primitive(&cg, &cont_g);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.len() == 1 {
            // constant in v after removing content
            return normalize_sign(c);
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            let pb = from_coeffs(&b, v);
            return normalize_sign(c.mul(&pb));
        }
        let cr = content_of(&r);
        a = b;
        b = primitive(&r, &cr);
    }
}

fn occurs(f: &LaurentPoly, v: usize) -> bool {
    f.terms().any(|(e, _)| e[v] != 0)
}

/// Coefficients of f as a polynomial in x_v, lowest degree first.
fn coeffs_in(f: &LaurentPoly, v: usize) -> Vec<LaurentPoly> {
    let n = f.nvars();
    let deg = f.terms().map(|(e, _)| e[v]).max().unwrap_or(0) as usize;
    let mut buckets: Vec<Vec<(Vec<i32>, i128)>> = vec![Vec::new(); deg + 1];
    for (e, c) in f.terms() {
        let mut e2 = e.to_vec();
        let d = e2[v] as usize;
        e2[v] = 0;
        buckets[d].push((e2, c));
    }
    buckets.into_iter().map(|t| LaurentPoly::from_terms(n, t)).collect()
}

fn from_coeffs(c: &[LaurentPoly], v: usize) -> LaurentPoly {
    let n = c[0].nvars();
    let mut acc = LaurentPoly::zero(n);
    for (d, p) in c.iter().enumerate() {
        let mut s = vec![0; n];
        s[v] = d as i32;
        acc = acc.add(&p.shift(&s));
    }
    acc
}

fn content_of(c: &[LaurentPoly]) -> LaurentPoly {
    let mut g = LaurentPoly::zero(c[0].nvars());
    for p in c {
        g = poly_gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive(c: &[LaurentPoly], cont: &LaurentPoly) -> Vec<LaurentPoly> {
    let mut out: Vec<LaurentPoly> = c.iter().map(|p| p.div_exact(cont).expect("content divides")).collect();
    trim(&mut out);
    out
}

fn trim(c: &mut Vec<LaurentPoly>) {
    while c.last().is_some_and(|p| p.is_zero()) {
        c.pop();
    }
}

/// Pseudo-remainder of a by b as univariate polynomials with polynomial coefficients.
fn prem(a: &[LaurentPoly], b: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let mut r: Vec<LaurentPoly> = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        if let Some(q) = lr.div_exact(&lb).ok().filter(|q| q.is_polynomial()) {
            // exact step keeps coefficients small
            for (i, bc) in b.iter().enumerate() {
                r[i + dr - db] = r[i + dr - db].sub(&bc.mul(&q));
            }
        } else {
            // r <- lb * r - lr * x^(dr-db) * b
            for p in r.iter_mut() {
                *p = p.mul(&lb);
            }
            for (i, bc) in b.iter().enumerate() {
                let t = bc.mul(&lr);
                r[i + dr - db] = r[i + dr - db].sub(&t);
            }
        }
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn normalize_sign(p: LaurentPoly) -> LaurentPoly {
    match p.leading() {
        Some((_, c)) if c < 0 => p.neg(),
        _ => p,
    }
}

/// A reduced quotient of Laurent polynomials.
///
/// Normal form: all monomial factors live in the numerator, the denominator
/// is a polynomial divisible by no variable, numerator and denominator are
/// coprime over Z, and the denominator's leading coefficient is positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Fraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let n = num.nvars();
        if num.is_zero() {
            return Fraction { num, den: LaurentPoly::one(n) };
        }
        let a = num.min_exponents();
        let b = den.min_exponents();
        let neg = |v: &[i32]| v.iter().map(|e| -e).collect::<Vec<_>>();
        let num0 = num.shift(&neg(&a));
        let den0 = den.shift(&neg(&b));
        let g = poly_gcd(&num0, &den0);
        let mut num1 = num0.div_exact(&g).expect("gcd divides");
        let mut den1 = den0.div_exact(&g).expect("gcd divides");
        if den1.leading().unwrap().1 < 0 {
            num1 = num1.neg();
            den1 = den1.neg();
        }
        let shift: Vec<i32> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        Fraction { num: num1.shift(&shift), den: den1 }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        let n = p.nvars();
        Fraction { num: p, den: LaurentPoly::one(n) }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn mul(&self, o: &Fraction) -> Fraction {
        Fraction::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn add(&self, o: &Fraction) -> Fraction {
        Fraction::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Fraction {
        Fraction::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i64) -> Fraction {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let e = k.unsigned_abs() as u32;
        // powers of coprime parts stay coprime
        Fraction { num: base.num.pow(e), den: base.den.pow(e) }
    }

    pub fn one(n: usize) -> Fraction {
        Fraction::from_laurent(LaurentPoly::one(n))
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_laurent;

    fn p(s: &str) -> LaurentPoly {
        parse_laurent(s, 3).unwrap()
    }

    #[test]
    fn gcd_of_products() {
        let a = p("1 + x1*x2 + x3^2");
        let b = p("2 + x1");
        let c = p("x2 - x3");
        let g = poly_gcd(&a.mul(&b), &a.mul(&c));
        assert_eq!(g, a);
        let g2 = poly_gcd(&a.mul(&b).scale(6), &b.mul(&c).scale(4));
        assert_eq!(g2, b.scale(2));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        assert!(poly_gcd(&p("1 + x1"), &p("1 + x2")).is_one());
        assert!(poly_gcd(&p("x1^2 - 1"), &p("x1^2 + 1")).is_one());
    }

    #[test]
    fn fraction_reduces() {
        let f = Fraction::new(p("x1^2 - 1").shift(&[0, 1, 0]), p("-x1 - 1").shift(&[0, 0, 2]));
        assert_eq!(f.num(), &p("1 - x1").shift(&[0, 1, -2]));
        assert!(f.den().is_one());
        let g = Fraction::new(p("1"), p("1 + x2"));
        let h = g.mul(&Fraction::from_laurent(p("1 + x2")));
        assert_eq!(h, Fraction::one(3));
    }
}
