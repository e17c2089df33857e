//! Sparse multivariate polynomials over an exact [`Field`].

mod order;
mod parse;
mod series;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use order::{BaseOrder, MonomialOrder};
pub use series::PowerSeries;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Matrix;

/// Ordered, duplicate-free variable names of a ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    pub fn new(names: Vec<String>) -> Result<Self> {
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().next().unwrap().is_alphabetic() && !n.starts_with('_') {
                return Err(Error::Parse(format!("invalid variable name '{n}'")));
            }
            if names[..i].contains(n) {
                return Err(Error::Parse(format!("duplicate variable name '{n}'")));
            }
        }
        Ok(VariableContext { names })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A name starting with `base` that is not yet taken.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (0..).map(|i| format!("{base}_{i}")).find(|n| self.index_of(n).is_none()).unwrap()
    }
}

#[derive(Debug)]
struct RingInner {
    field: Field,
    vars: VariableContext,
}

/// A polynomial ring `K[v1, ..., vn]`; cheap to clone.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.vars == other.0.vars && self.0.field == other.0.field)
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.field, self.0.vars.names.join(", "))
    }
}

impl Ring {
    pub fn new(field: Field, names: Vec<String>) -> Result<Self> {
        let vars = VariableContext::new(names)?;
        if let Some(g) = field.generator_name() {
            if vars.index_of(g).is_some() {
                return Err(Error::Parse(format!("variable '{g}' clashes with the field generator")));
            }
        }
        Ok(Ring(Arc::new(RingInner { field, vars })))
    }

    /// Ring with variables `prefix1, ..., prefixn`.
    pub fn with_indexed(field: Field, prefix: &str, n: usize) -> Result<Self> {
        Self::new(field, (1..=n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn context(&self) -> &VariableContext {
        &self.0.vars
    }

    pub fn names(&self) -> &[String] {
        &self.0.vars.names
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.vars.index_of(name)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn term(&self, m: Monomial, c: Scalar) -> Polynomial {
        assert_eq!(m.len(), self.nvars(), "monomial length does not match the ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: self.clone(), terms }
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        self.term(m, self.field().one())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.monomial(Monomial::unit(self.nvars(), i))
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse::parse_polynomial(self, text)
    }

    /// All monomials of total degree `d`, ascending under `order`.
    pub fn monomials_of_degree(&self, d: u32, order: &MonomialOrder) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.nvars()];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 >= cur.len() {
                if let Some(last) = cur.last_mut() {
                    *last = left;
                    out.push(Monomial::new(cur.clone()));
                } else if left == 0 {
                    out.push(Monomial::new(Vec::new()));
                }
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| order.cmp(a, b));
        out
    }

    /// Names derived from `bases` that clash neither with this ring's
    /// variables nor with each other.
    pub fn fresh_names(&self, bases: &[String]) -> Vec<String> {
        let mut taken = self.names().to_vec();
        taken.extend(self.field().generator_name().map(str::to_string));
        if let Some(params) = self.field().parameters() {
            taken.extend(params.names().iter().cloned());
        }
        let mut out = Vec::with_capacity(bases.len());
        for b in bases {
            let ctx = VariableContext { names: taken.clone() };
            let name = ctx.fresh_name(b);
            taken.push(name.clone());
            out.push(name);
        }
        out
    }

    /// A ring over the same field with extra variables appended.
    pub fn extended(&self, extra: &[String]) -> Result<Ring> {
        let mut names = self.names().to_vec();
        names.extend(extra.iter().cloned());
        Ring::new(self.field().clone(), names)
    }
}

/// Exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; the caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    pub fn format(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A polynomial: a map from monomials to nonzero scalars of one field.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl Polynomial {
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = ring.zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field().zero())
    }

    pub fn constant_coefficient(&self) -> Scalar {
        self.coefficient(&Monomial::one(self.ring.nvars()))
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_coefficient().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Greatest term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Monomial, Scalar)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Scales so the leading coefficient under `order` is 1 (zero stays zero).
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Ok((_, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Nonzero homogeneous components, by ascending degree.
    pub fn homogeneous_components(&self) -> Vec<Polynomial> {
        let mut by_degree: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_degree.entry(m.degree()).or_insert_with(|| self.ring.zero()).terms.insert(m.clone(), c.clone());
        }
        by_degree.into_values().collect()
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch { expected: self.ring.nvars(), got: point.len() });
        }
        if point.iter().any(|s| !self.field().contains(s)) {
            return Err(Error::FieldMismatch);
        }
        let mut acc = self.field().zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = &t * &v.pow(e);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Ring homomorphism sending variable `i` to `images[i]`; all images
    /// must live in one target ring over the same field.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch { expected: self.ring.nvars(), got: images.len() });
        }
        let Some(target) = images.first().map(|p| p.ring.clone()) else {
            return Ok(self.clone());
        };
        if images.iter().any(|p| p.ring != target) || target.field() != self.field() {
            return Err(Error::ContextMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(target.one());
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &images[i];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Moves the polynomial into `target`, sending variable `i` to variable
    /// `map[i]` of the target.
    pub fn rename_into(&self, target: &Ring, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.nvars());
        assert!(target.field() == self.field(), "field mismatch when moving between rings");
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    if x > 0 {
                        e[map[i]] += x;
                    }
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial { ring: target.clone(), terms }
    }

    /// Moves the polynomial into `target` matching variables by name.
    pub fn rename_by_name(&self, target: &Ring) -> Result<Polynomial> {
        let map = self
            .ring
            .names()
            .iter()
            .map(|n| target.index_of(n).ok_or_else(|| Error::Parse(format!("variable '{n}' missing in target ring"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.rename_into(target, &map))
    }

    /// Indices of variables occurring in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for m in self.terms.keys() {
            for i in m.support() {
                used[i] = true;
            }
        }
        used.iter().enumerate().filter(|(_, u)| **u).map(|(i, _)| i).collect()
    }

    pub fn involves_only(&self, allowed: &[usize]) -> bool {
        self.terms.keys().all(|m| m.support().all(|i| allowed.contains(&i)))
    }

    /// `sigma(x_i) = sum_j a[i][j] x_j` on the first `a.rows()` variables;
    /// the remaining variables are fixed.
    pub fn apply_linear_map(&self, a: &Matrix) -> Result<Polynomial> {
        if !a.is_square() || a.rows() > self.ring.nvars() {
            return Err(Error::LengthMismatch { expected: self.ring.nvars(), got: a.rows() });
        }
        if a.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        if a.rank() < a.rows() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.apply_linear_map_unchecked(a))
    }

    pub(crate) fn apply_linear_map_unchecked(&self, a: &Matrix) -> Polynomial {
        let images = linear_images(&self.ring, a);
        self.substitute(&images).expect("images share the ring")
    }

    /// Formats with terms descending under `order`.
    pub fn format_with(&self, order: &MonomialOrder) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let names = self.ring.names();
        let mut out = String::new();
        for (m, c) in self.sorted_terms(order) {
            let text = c.to_string();
            let compound = c.is_compound();
            let (neg, body) = if !compound && text.starts_with('-') { (true, &text[1..]) } else { (false, &text[..]) };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff = if compound { format!("({body})") } else { body.to_string() };
            if m.is_one() {
                out.push_str(&coeff);
            } else if coeff == "1" {
                out.push_str(&m.format(names));
            } else {
                out.push_str(&coeff);
                out.push('*');
                out.push_str(&m.format(names));
            }
        }
        out
    }
}

/// Images `sigma(x_i)` of the variables under the matrix `a`.
pub(crate) fn linear_images(ring: &Ring, a: &Matrix) -> Vec<Polynomial> {
    (0..ring.nvars())
        .map(|i| {
            if i < a.rows() {
                let mut p = ring.zero();
                for j in 0..a.cols() {
                    p.add_term(Monomial::unit(ring.nvars(), j), a.get(i, j));
                }
                p
            } else {
                ring.var(i)
            }
        })
        .collect()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&MonomialOrder::GrevLex))
    }
}

impl std::ops::AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert!(self.ring == rhs.ring, "polynomials from different rings");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl std::ops::SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        assert!(self.ring == rhs.ring, "polynomials from different rings");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &-c);
        }
    }
}

impl std::ops::Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl std::ops::Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl std::ops::Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.ring == rhs.ring, "polynomials from different rings");
        let mut out = self.ring.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_xorshift::XorShiftRng;

    fn qxy() -> Ring {
        Ring::new(Field::rationals(), vec!["x".into(), "y".into()]).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = qxy();
        let p = r.parse("x + y").unwrap();
        let q = r.parse("x - y").unwrap();
        assert_eq!(&p * &q, r.parse("x^2 - y^2").unwrap());
        assert_eq!(&p + &r.zero(), p);
        assert_eq!(p.pow(2), r.parse("x^2 + 2*x*y + y^2").unwrap());
    }

    #[test]
    fn context_mismatch() {
        let r = qxy();
        let s = Ring::new(Field::rationals(), vec!["x".into(), "z".into()]).unwrap();
        assert_eq!(r.var(0).checked_add(&s.var(0)), Err(Error::ContextMismatch));
    }

    #[test]
    fn leading_monomials() {
        let r = qxy();
        let p = r.parse("x^2 + x*y^2").unwrap();
        assert_eq!(p.leading_monomial(&MonomialOrder::Lex).unwrap(), Monomial::new(vec![2, 0]));
        assert_eq!(p.leading_monomial(&MonomialOrder::GrevLex).unwrap(), Monomial::new(vec![1, 2]));
        let (m, c) = r.parse("3*x").unwrap().leading_term(&MonomialOrder::Lex).unwrap();
        assert_eq!((m, c), (Monomial::new(vec![1, 0]), r.field().from_i64(3)));
        assert_eq!(r.zero().leading_term(&MonomialOrder::Lex), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn d8_generators_act() {
        let f = Field::from_spec(&FieldSpec::SimpleExtension { minimal_poly: "w^2 - 2".into(), generator: "w".into() })
            .unwrap();
        let r = Ring::new(f.clone(), vec!["x".into(), "y".into()]).unwrap();
        let tau = Matrix::parse(&f, &[vec!["1", "0"], vec!["0", "-1"]]).unwrap();
        let sigma = Matrix::parse(&f, &[vec!["w/2", "-w/2"], vec!["w/2", "w/2"]]).unwrap();
        assert_eq!(r.parse("x*y").unwrap().apply_linear_map(&tau).unwrap(), r.parse("-x*y").unwrap());
        assert_eq!(r.parse("x").unwrap().apply_linear_map(&sigma).unwrap(), r.parse("(x - y)/w").unwrap());
        let id = Matrix::identity(&f, 2);
        let p = r.parse("x^3 - w*y + 1").unwrap();
        assert_eq!(p.apply_linear_map(&id).unwrap(), p);
        let singular = Matrix::parse(&f, &[vec!["1", "1"], vec!["1", "1"]]).unwrap();
        assert_eq!(p.apply_linear_map(&singular), Err(Error::SingularMatrix));
    }

    #[test]
    fn homogeneous_parts() {
        let r = qxy();
        let p = r.parse("x^2 + x + 1").unwrap();
        assert_eq!(p.homogeneous_component(1), r.parse("x").unwrap());
        assert!(p.homogeneous_component(3).is_zero());
        let h = r.parse("x^2 - 3*x*y").unwrap();
        assert_eq!(h.homogeneous_component(2), h);
        let sum = p.homogeneous_components().iter().fold(r.zero(), |acc, c| &acc + c);
        assert_eq!(sum, p);
    }

    #[test]
    fn evaluation() {
        let r = qxy();
        let f = r.field();
        let v = |a: &str| f.parse_scalar(a).unwrap();
        assert_eq!(r.parse("x^2 + y^2").unwrap().evaluate(&[v("1"), v("2")]).unwrap(), v("5"));
        assert_eq!(r.parse("x*y").unwrap().evaluate(&[v("1/2"), v("2/3")]).unwrap(), v("1/3"));
        let p = r.parse("x^5 - 7*y + 3").unwrap();
        assert_eq!(p.evaluate(&[v("0"), v("0")]).unwrap(), p.constant_coefficient());
        assert_eq!(p.evaluate(&[v("1")]), Err(Error::LengthMismatch { expected: 2, got: 1 }));
    }

    #[test]
    fn monomial_enumeration() {
        let r = qxy();
        let ms = r.monomials_of_degree(2, &MonomialOrder::GrevLex);
        let shown: Vec<String> = ms.iter().map(|m| m.format(r.names())).collect();
        assert_eq!(shown, ["y^2", "x*y", "x^2"]);
        let r3 = Ring::with_indexed(Field::rationals(), "x", 3).unwrap();
        assert_eq!(r3.monomials_of_degree(0, &MonomialOrder::Lex), vec![Monomial::one(3)]);
        assert_eq!(r3.monomials_of_degree(1, &MonomialOrder::Lex).len(), 3);
        assert_eq!(r3.monomials_of_degree(4, &MonomialOrder::Lex).len(), 15);
    }

    #[test]
    fn display_round_trip() {
        let f = Field::from_spec(&FieldSpec::SimpleExtension { minimal_poly: "w^2 - 2".into(), generator: "w".into() })
            .unwrap();
        let r = Ring::new(f, vec!["x".into(), "y".into()]).unwrap();
        for text in ["(1 + w)*x^2 - w*y + 1/2", "-x", "-w*x*y + 3", "0", "-1/3*w*y^2"] {
            let p = r.parse(text).unwrap();
            assert_eq!(r.parse(&p.to_string()).unwrap(), p, "{text} -> {p}");
        }
    }

    fn random_poly(r: &Ring, rng: &mut XorShiftRng) -> Polynomial {
        let mut p = r.zero();
        for _ in 0..rng.random_range(1..5) {
            let e: Vec<u32> = (0..r.nvars()).map(|_| rng.random_range(0..3)).collect();
            p.add_term(Monomial::new(e), &r.field().from_i64(rng.random_range(-5..=5)));
        }
        p
    }

    fn random_matrix(f: &Field, n: usize, rng: &mut XorShiftRng) -> Matrix {
        loop {
            let rows: Vec<Vec<Scalar>> =
                (0..n).map(|_| (0..n).map(|_| f.from_i64(rng.random_range(-3..=3))).collect()).collect();
            let m = Matrix::from_rows(f, rows);
            if m.rank() == n {
                return m;
            }
        }
    }

    #[test]
    fn linear_maps_compose_contravariantly() {
        let r = Ring::with_indexed(Field::rationals(), "x", 3).unwrap();
        let mut rng = XorShiftRng::seed_from_u64(7);
        for _ in 0..50 {
            let a = random_matrix(r.field(), 3, &mut rng);
            let b = random_matrix(r.field(), 3, &mut rng);
            let p = random_poly(&r, &mut rng);
            let lhs = p.apply_linear_map(&b).unwrap().apply_linear_map(&a).unwrap();
            assert_eq!(lhs, p.apply_linear_map(&b.mul(&a)).unwrap());
        }
    }

    proptest! {
        #[test]
        fn evaluation_is_multiplicative(seed in any::<u64>()) {
            let r = Ring::with_indexed(Field::rationals(), "x", 3).unwrap();
            let mut rng = XorShiftRng::seed_from_u64(seed);
            let p = random_poly(&r, &mut rng);
            let q = random_poly(&r, &mut rng);
            let v: Vec<Scalar> = (0..3).map(|_| r.field().from_i64(rng.random_range(-4..=4))).collect();
            let lhs = (&p * &q).evaluate(&v).unwrap();
            prop_assert_eq!(lhs, &p.evaluate(&v).unwrap() * &q.evaluate(&v).unwrap());
        }

        #[test]
        fn linear_map_is_a_ring_homomorphism(seed in any::<u64>()) {
            let r = Ring::with_indexed(Field::rationals(), "x", 2).unwrap();
            let mut rng = XorShiftRng::seed_from_u64(seed);
            let a = random_matrix(r.field(), 2, &mut rng);
            let p = random_poly(&r, &mut rng);
            let q = random_poly(&r, &mut rng);
            let lhs = (&p * &q).apply_linear_map(&a).unwrap();
            prop_assert_eq!(lhs, &p.apply_linear_map(&a).unwrap() * &q.apply_linear_map(&a).unwrap());
        }
    }
}
