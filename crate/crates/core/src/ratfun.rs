//! Rational functions `num/den` over a polynomial ring, kept in lowest terms
//! via exact multivariate GCDs (recursive content / primitive PRS).
//!
//! Canonical form: `gcd(num, den) = 1` and the leading coefficient of `den`
//! under grevlex is 1.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn zero(ring: &Ring) -> Self {
        RationalFunction { num: ring.zero(), den: ring.one() }
    }

    pub fn one(ring: &Ring) -> Self {
        RationalFunction { num: ring.one(), den: ring.one() }
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        RationalFunction { num: ring.constant(c), den: ring.one() }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let den = p.ring().one();
        RationalFunction { num: p, den }
    }

    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero(num.ring());
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (exact_div(&num, &g).expect("gcd divides"), exact_div(&den, &g).expect("gcd divides"))
            }
        };
        let (_, lc) = den.leading_term(&MonomialOrder::GrevLex).expect("nonzero denominator");
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn ring(&self) -> &Ring {
        self.num.ring()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num == self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The polynomial this function equals, if its denominator is constant.
    pub fn as_polynomial(&self) -> Option<Polynomial> {
        if self.den.is_constant() {
            Some(self.num.scale(&self.den.constant_coefficient().inv().ok()?))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalized(&self.num + &other.num, self.den.clone());
        }
        Self::normalized(&(&self.num * &other.den) + &(&other.num * &self.den), &self.den * &other.den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring());
        }
        Self::normalized(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            let s = p.to_string();
            if p.len() > 1 || s.starts_with('-') {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_constant() {
            let inv = self.den.constant_coefficient().inv().expect("nonzero");
            return write!(f, "{}", self.num.scale(&inv));
        }
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

/// `a / b` when `b` divides `a` exactly.
pub fn exact_div(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    if b.is_zero() {
        return None;
    }
    let order = MonomialOrder::Lex;
    let (lm_b, lc_b) = b.leading_term(&order).ok()?;
    let lc_inv = lc_b.inv().ok()?;
    let mut rem = a.clone();
    let mut quot = a.ring().zero();
    while !rem.is_zero() {
        let (lm, lc) = rem.leading_term(&order).expect("nonzero");
        if !lm_b.divides(&lm) {
            return None;
        }
        let m = lm.div(&lm_b);
        let c = &lc * &lc_inv;
        rem -= &b.mul_monomial(&m, &c);
        quot += &a.ring().term(m, c);
    }
    Some(quot)
}

/// Coefficients of `p` viewed as a polynomial in variable `v`.
fn coefficients_in(p: &Polynomial, v: usize) -> BTreeMap<u32, Polynomial> {
    let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
    let ring = p.ring();
    for (m, c) in p.terms() {
        let e = m.exponent(v);
        let mut rest = m.exponents().to_vec();
        rest[v] = 0;
        *out.entry(e).or_insert_with(|| ring.zero()) += &ring.term(Monomial::new(rest), c.clone());
    }
    out
}

fn var_power(ring: &Ring, v: usize, e: u32) -> Monomial {
    let mut x = vec![0; ring.nvars()];
    x[v] = e;
    Monomial::new(x)
}

fn content_in(p: &Polynomial, v: usize) -> Polynomial {
    coefficients_in(p, v).values().fold(p.ring().zero(), |acc, c| gcd(&acc, c))
}

fn normalize_gcd(p: Polynomial) -> Polynomial {
    p.monic(&MonomialOrder::Lex)
}

/// Greatest common divisor, monic under lex (`gcd(0, 0) = 0`).
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return normalize_gcd(b.clone());
    }
    if b.is_zero() {
        return normalize_gcd(a.clone());
    }
    if a.is_constant() || b.is_constant() {
        return a.ring().one();
    }
    let va = a.variables();
    let vb = b.variables();
    let v = *va.iter().chain(&vb).min().expect("nonconstant");
    match (va.contains(&v), vb.contains(&v)) {
        (true, false) => return gcd(&content_in(a, v), b),
        (false, true) => return gcd(a, &content_in(b, v)),
        _ => {}
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let mut p = exact_div(a, &ca).expect("content divides");
    let mut q = exact_div(b, &cb).expect("content divides");
    if q.total_degree_in(v) > p.total_degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() && q.total_degree_in(v) > 0 {
        let r = pseudo_remainder(&p, &q, v);
        p = q;
        q = if r.is_zero() { r } else { exact_div(&r, &content_in(&r, v)).expect("content divides") };
    }
    let g = if q.is_zero() { p } else { a.ring().one() };
    normalize_gcd(&c * &g)
}

fn pseudo_remainder(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let ring = a.ring();
    let bc = coefficients_in(b, v);
    let (&n, lead_b) = bc.iter().next_back().expect("nonzero");
    let mut r = a.clone();
    loop {
        let rc = coefficients_in(&r, v);
        let Some((&m, lead_r)) = rc.iter().next_back() else {
            break;
        };
        if r.is_zero() || m < n {
            break;
        }
        let shift = var_power(ring, v, m - n);
        r = &(lead_b * &r) - &(lead_r * b).mul_monomial(&shift, &ring.field().one());
    }
    r
}

impl Polynomial {
    pub(crate) fn total_degree_in(&self, v: usize) -> u32 {
        self.terms().map(|(m, _)| m.exponent(v)).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn ring() -> Ring {
        Ring::new(Field::rationals(), vec!["a".into(), "b".into(), "c".into()]).unwrap()
    }

    #[test]
    fn gcd_of_products() {
        let r = ring();
        let g = r.parse("a*b - c^2 + 1").unwrap();
        let p = &g * &r.parse("a + b^2").unwrap();
        let q = &g * &r.parse("3*a*c - 2").unwrap();
        assert_eq!(gcd(&p, &q), g.monic(&MonomialOrder::Lex));
        assert!(gcd(&r.parse("a + 1").unwrap(), &r.parse("b").unwrap()).is_one());
    }

    #[test]
    fn gcd_with_content() {
        let r = ring();
        let p = r.parse("(b + 1)*(a^2 - c)").unwrap();
        let q = r.parse("(b + 1)*(b - 2)*(a + c)").unwrap();
        assert_eq!(gcd(&p, &q), r.parse("b + 1").unwrap());
    }

    #[test]
    fn canonical_form() {
        let r = ring();
        let x = RationalFunction::new(r.parse("a^2 - b^2").unwrap(), r.parse("2*a + 2*b").unwrap()).unwrap();
        assert_eq!(x.denominator(), &r.one());
        assert_eq!(x.numerator(), &r.parse("a/2 - b/2").unwrap());
        let y = RationalFunction::new(r.parse("1").unwrap(), r.parse("-a").unwrap()).unwrap();
        assert_eq!(y.denominator(), &r.parse("a").unwrap());
        let sum = y.add(&RationalFunction::new(r.one(), r.parse("a").unwrap()).unwrap());
        assert!(sum.is_zero());
        let prod = x.mul(&x.inv().unwrap());
        assert!(prod.is_one());
    }

    #[test]
    fn exact_division_rejects_non_multiples() {
        let r = ring();
        assert!(exact_div(&r.parse("a^2 + 1").unwrap(), &r.parse("a + 1").unwrap()).is_none());
        assert_eq!(
            exact_div(&r.parse("a^2 - 1").unwrap(), &r.parse("a + 1").unwrap()).unwrap(),
            r.parse("a - 1").unwrap()
        );
    }
}
