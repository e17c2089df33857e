//! Exact ground fields: the rationals, prime fields and simple algebraic
//! extensions `Q[t]/(m(t))`.
//!
//! A [`Field`] is a cheap, clonable handle. Scalars of the rationals and of
//! prime fields are plain values; scalars of an extension carry a shared
//! pointer to the extension data so arithmetic needs no outside context.
//! Rational function fields over one of these (used for invariant fields)
//! are a fourth, internal kind built by [`Field::rational_functions`].

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Ring;
use crate::ratfun::RationalFunction;

/// User-facing description of a ground field, as it appears in input files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
    Rationals,
    Prime {
        p: u64,
    },
    SimpleExtension {
        /// Monic univariate polynomial in `generator`, e.g. `"w^2 - 2"`.
        minimal_poly: String,
        generator: String,
    },
}

#[derive(Debug)]
pub(crate) struct ExtensionData {
    /// Ascending coefficients of the monic minimal polynomial.
    modulus: Vec<BigRational>,
    generator: String,
}

#[derive(Debug)]
pub(crate) struct FunctionData {
    params: Ring,
}

#[derive(Debug)]
enum FieldKind {
    Rationals,
    Prime(u64),
    Extension(Arc<ExtensionData>),
    Functions(Arc<FunctionData>),
}

#[derive(Debug)]
struct FieldInner {
    kind: FieldKind,
    warnings: Vec<String>,
}

/// Handle to a ground field.
#[derive(Debug, Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (&self.0.kind, &other.0.kind) {
            (FieldKind::Rationals, FieldKind::Rationals) => true,
            (FieldKind::Prime(p), FieldKind::Prime(q)) => p == q,
            (FieldKind::Extension(a), FieldKind::Extension(b)) => a.modulus == b.modulus && a.generator == b.generator,
            (FieldKind::Functions(a), FieldKind::Functions(b)) => a.params == b.params,
            _ => false,
        }
    }
}

impl Eq for Field {}

impl Field {
    fn from_kind(kind: FieldKind, warnings: Vec<String>) -> Self {
        Field(Arc::new(FieldInner { kind, warnings }))
    }

    pub fn rationals() -> Self {
        Self::from_kind(FieldKind::Rationals, Vec::new())
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Self::from_kind(FieldKind::Prime(p), Vec::new()))
    }

    /// Builds `Q[t]/(m(t))` from ascending rational coefficients of `m`.
    ///
    /// `m` must be monic of degree at least 2 and squarefree. Irreducibility is
    /// checked completely up to degree 4 and only reported as a warning above.
    pub fn extension(modulus: Vec<BigRational>, generator: &str) -> Result<Self> {
        let modulus = upoly::trimmed(modulus);
        if modulus.len() < 3 {
            return Err(Error::InvalidField("minimal polynomial must have degree >= 2".into()));
        }
        if !modulus.last().unwrap().is_one() {
            return Err(Error::InvalidField("minimal polynomial must be monic".into()));
        }
        let derivative = upoly::derivative(&modulus);
        if upoly::gcd(&modulus, &derivative).len() > 1 {
            return Err(Error::InvalidField("minimal polynomial is not squarefree".into()));
        }
        let mut warnings = Vec::new();
        match upoly::irreducibility(&modulus) {
            Irreducibility::Irreducible => {}
            Irreducibility::Reducible(reason) => {
                let msg = format!("minimal polynomial is reducible ({reason}); the quotient has zero divisors");
                log::warn!("{msg}");
                warnings.push(msg);
            }
            Irreducibility::Unchecked => {
                let msg =
                    format!("irreducibility of the degree-{} minimal polynomial was not verified", modulus.len() - 1);
                log::warn!("{msg}");
                warnings.push(msg);
            }
        }
        let data = ExtensionData { modulus, generator: generator.to_string() };
        Ok(Self::from_kind(FieldKind::Extension(Arc::new(data)), warnings))
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Self> {
        match spec {
            FieldSpec::Rationals => Ok(Self::rationals()),
            FieldSpec::Prime { p } => Self::prime(*p),
            FieldSpec::SimpleExtension { minimal_poly, generator } => {
                let ring = Ring::new(Field::rationals(), vec![generator.clone()])?;
                let m = ring.parse(minimal_poly)?;
                let mut coeffs = vec![BigRational::zero(); m.total_degree().unwrap_or(0) as usize + 1];
                for (mono, c) in m.terms() {
                    coeffs[mono.exponent(0) as usize] = c.as_rational().expect("rational coefficient").clone();
                }
                Self::extension(coeffs, generator)
            }
        }
    }

    /// The field of rational functions in the variables of `params`.
    pub fn rational_functions(params: Ring) -> Self {
        Self::from_kind(FieldKind::Functions(Arc::new(FunctionData { params })), Vec::new())
    }

    pub fn characteristic(&self) -> u64 {
        match &self.0.kind {
            FieldKind::Prime(p) => *p,
            FieldKind::Functions(f) => f.params.field().characteristic(),
            _ => 0,
        }
    }

    /// Construction-time warnings (e.g. an unverified minimal polynomial).
    pub fn warnings(&self) -> &[String] {
        &self.0.warnings
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.0.kind, FieldKind::Prime(_))
    }

    pub fn generator_name(&self) -> Option<&str> {
        match &self.0.kind {
            FieldKind::Extension(e) => Some(&e.generator),
            _ => None,
        }
    }

    /// The adjoined generator of an extension field.
    pub fn generator(&self) -> Option<Scalar> {
        match &self.0.kind {
            FieldKind::Extension(e) => {
                Some(Scalar::Algebraic(AlgebraicNumber::new(vec![BigRational::zero(), BigRational::one()], e.clone())))
            }
            _ => None,
        }
    }

    /// Parameter ring of a rational function field.
    pub fn parameters(&self) -> Option<&Ring> {
        match &self.0.kind {
            FieldKind::Functions(f) => Some(&f.params),
            _ => None,
        }
    }

    pub fn spec(&self) -> Option<FieldSpec> {
        match &self.0.kind {
            FieldKind::Rationals => Some(FieldSpec::Rationals),
            FieldKind::Prime(p) => Some(FieldSpec::Prime { p: *p }),
            FieldKind::Extension(e) => Some(FieldSpec::SimpleExtension {
                minimal_poly: upoly::format(&e.modulus, &e.generator),
                generator: e.generator.clone(),
            }),
            FieldKind::Functions(_) => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match &self.0.kind {
            FieldKind::Rationals => Scalar::Rational(BigRational::zero()),
            FieldKind::Prime(p) => Scalar::Modular { value: 0, modulus: *p },
            FieldKind::Extension(e) => Scalar::Algebraic(AlgebraicNumber::new(Vec::new(), e.clone())),
            FieldKind::Functions(f) => Scalar::Function(RationalFunction::zero(&f.params)),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_rational(&BigRational::from_integer(BigInt::from(n))).expect("integer embeds in every field")
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        self.from_rational(&BigRational::from_integer(n.clone())).expect("integer embeds in every field")
    }

    /// Image of a rational number; fails in characteristic `p` when `p` divides the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        Ok(match &self.0.kind {
            FieldKind::Rationals => Scalar::Rational(q.clone()),
            FieldKind::Prime(p) => {
                let num = residue(q.numer(), *p);
                let den = residue(q.denom(), *p);
                if den == 0 {
                    return Err(Error::DivisionByZero);
                }
                Scalar::Modular { value: mul_mod(num, inv_mod(den, *p), *p), modulus: *p }
            }
            FieldKind::Extension(e) => Scalar::Algebraic(AlgebraicNumber::new(vec![q.clone()], e.clone())),
            FieldKind::Functions(f) => {
                let c = f.params.field().from_rational(q)?;
                Scalar::Function(RationalFunction::constant(&f.params, c))
            }
        })
    }

    /// Checks that `s` is an element of this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (&self.0.kind, s) {
            (FieldKind::Rationals, Scalar::Rational(_)) => true,
            (FieldKind::Prime(p), Scalar::Modular { modulus, .. }) => p == modulus,
            (FieldKind::Extension(e), Scalar::Algebraic(a)) => Arc::ptr_eq(e, &a.ext) || e.modulus == a.ext.modulus,
            (FieldKind::Functions(f), Scalar::Function(r)) => *r.ring() == f.params,
            _ => false,
        }
    }

    /// Parses a scalar literal (`-3/4`, `(3*w^2 - 1)/2`, ...).
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let ring = Ring::new(self.clone(), Vec::new())?;
        let p = ring.parse(text)?;
        Ok(p.constant_coefficient())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            FieldKind::Rationals => write!(f, "QQ"),
            FieldKind::Prime(p) => write!(f, "GF({p})"),
            FieldKind::Extension(e) => {
                write!(f, "QQ[{}]/({})", e.generator, upoly::format(&e.modulus, &e.generator))
            }
            FieldKind::Functions(r) => write!(f, "Frac({})", r.params),
        }
    }
}

/// Element of `Q[t]/(m(t))`, stored reduced with trimmed ascending coefficients.
#[derive(Debug, Clone)]
pub struct AlgebraicNumber {
    coeffs: Vec<BigRational>,
    ext: Arc<ExtensionData>,
}

impl AlgebraicNumber {
    fn new(coeffs: Vec<BigRational>, ext: Arc<ExtensionData>) -> Self {
        let coeffs = upoly::trimmed(upoly::rem(coeffs, &ext.modulus));
        AlgebraicNumber { coeffs, ext }
    }

    /// Ascending coefficients in the generator.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }
}

/// An element of some [`Field`].
///
/// The arithmetic operators panic when the operands come from different
/// fields (which the polynomial layer rules out); the `checked_*` methods
/// report [`Error::FieldMismatch`] instead.
#[derive(Debug, Clone)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
    Algebraic(AlgebraicNumber),
    Function(RationalFunction),
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) => a == b && p == q,
            (Scalar::Algebraic(a), Scalar::Algebraic(b)) => {
                a.coeffs == b.coeffs && (Arc::ptr_eq(&a.ext, &b.ext) || a.ext.modulus == b.ext.modulus)
            }
            (Scalar::Function(a), Scalar::Function(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Scalar::Rational(q) => q.hash(state),
            Scalar::Modular { value, .. } => value.hash(state),
            Scalar::Algebraic(a) => a.coeffs.hash(state),
            Scalar::Function(r) => r.to_string().hash(state),
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
            Scalar::Algebraic(a) => a.coeffs.is_empty(),
            Scalar::Function(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
            Scalar::Algebraic(a) => a.coeffs.len() == 1 && a.coeffs[0].is_one(),
            Scalar::Function(r) => r.is_one(),
        }
    }

    /// The rational value, if this scalar lies in the prime field of a
    /// characteristic-0 field.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Algebraic(a) if a.coeffs.len() <= 1 => a.coeffs.first().or(Some(&ZERO_Q)),
            _ => None,
        }
    }

    /// Whether the scalar is (the image of) a rational number.
    pub fn is_rational(&self) -> bool {
        match self {
            Scalar::Function(r) => r.is_constant(),
            Scalar::Algebraic(a) => a.coeffs.len() <= 1,
            _ => true,
        }
    }

    pub fn same_field(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => true,
            (Scalar::Modular { modulus: p, .. }, Scalar::Modular { modulus: q, .. }) => p == q,
            (Scalar::Algebraic(a), Scalar::Algebraic(b)) => {
                Arc::ptr_eq(&a.ext, &b.ext) || a.ext.modulus == b.ext.modulus
            }
            (Scalar::Function(a), Scalar::Function(b)) => a.ring() == b.ring(),
            _ => false,
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self * &other.inv()?)
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: inv_mod(*value, *modulus), modulus: *modulus }
            }
            Scalar::Algebraic(a) => {
                let inv = upoly::inverse_mod(&a.coeffs, &a.ext.modulus).ok_or(Error::DivisionByZero)?;
                Scalar::Algebraic(AlgebraicNumber::new(inv, a.ext.clone()))
            }
            Scalar::Function(r) => Scalar::Function(r.inv()?),
        })
    }

    pub fn pow(&self, mut exp: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = match self {
            Scalar::Rational(_) => Scalar::Rational(BigRational::one()),
            Scalar::Modular { modulus, .. } => Scalar::Modular { value: 1 % modulus, modulus: *modulus },
            Scalar::Algebraic(a) => Scalar::Algebraic(AlgebraicNumber::new(vec![BigRational::one()], a.ext.clone())),
            Scalar::Function(r) => Scalar::Function(RationalFunction::one(r.ring())),
        };
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Canonical text form, parseable by [`Field::parse_scalar`].
    pub fn format(&self) -> String {
        self.to_string()
    }

    /// True when printing needs parentheses inside a product.
    pub(crate) fn is_compound(&self) -> bool {
        match self {
            Scalar::Algebraic(a) => {
                a.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
                    || a.coeffs.last().is_some_and(|c| a.coeffs.len() > 1 && !c.abs().is_one())
            }
            Scalar::Function(r) => !r.is_constant(),
            _ => false,
        }
    }
}

static ZERO_Q: std::sync::LazyLock<BigRational> = std::sync::LazyLock::new(BigRational::zero);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
            Scalar::Algebraic(a) => write!(f, "{}", upoly::format(&a.coeffs, &a.ext.generator)),
            Scalar::Function(r) => write!(f, "{r}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $q:expr, $m:expr, $a:expr, $r:expr) => {
        impl std::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($q(a, b)),
                    (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) => {
                        assert_eq!(p, q, "scalars from different prime fields");
                        Scalar::Modular { value: $m(*a, *b, *p), modulus: *p }
                    }
                    (Scalar::Algebraic(a), Scalar::Algebraic(b)) => {
                        Scalar::Algebraic(AlgebraicNumber::new($a(&a.coeffs, &b.coeffs), a.ext.clone()))
                    }
                    (Scalar::Function(a), Scalar::Function(b)) => Scalar::Function($r(a, b)),
                    _ => panic!("scalars from different fields: {self} and {rhs}"),
                }
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, add_mod, upoly::add, |a: &RationalFunction, b| a.add(b));
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, sub_mod, upoly::sub, |a: &RationalFunction, b| a.sub(b));
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, mul_mod, upoly::mul, |a: &RationalFunction, b| a.mul(b));

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: (modulus - value) % modulus, modulus: *modulus }
            }
            Scalar::Algebraic(a) => {
                Scalar::Algebraic(AlgebraicNumber { coeffs: a.coeffs.iter().map(|c| -c).collect(), ext: a.ext.clone() })
            }
            Scalar::Function(r) => Scalar::Function(r.neg()),
        }
    }
}

impl std::ops::Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] to handle it.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero")
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + p as u128 - b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(p as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p as i128) as u64
}

fn residue(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

enum Irreducibility {
    Irreducible,
    Reducible(String),
    Unchecked,
}

/// Dense univariate polynomials over the rationals (ascending coefficients).
pub(crate) mod upoly {
    use super::*;

    pub fn trimmed(mut v: Vec<BigRational>) -> Vec<BigRational> {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }

    pub fn add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let z = BigRational::zero();
        trimmed((0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect())
    }

    pub fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let z = BigRational::zero();
        trimmed((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
    }

    pub fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trimmed(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let b = trimmed(b.to_vec());
        let mut r = trimmed(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = b[db].recip();
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![BigRational::zero(); r.len() - db];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = r.last().unwrap() * &lead_inv;
            for (i, bc) in b.iter().enumerate() {
                r[shift + i] -= &c * bc;
            }
            q[shift] = c;
            r.pop();
            r = trimmed(r);
        }
        (trimmed(q), r)
    }

    pub fn rem(a: Vec<BigRational>, m: &[BigRational]) -> Vec<BigRational> {
        if a.len() < m.len() {
            return a;
        }
        div_rem(&a, m).1
    }

    pub fn monic(a: Vec<BigRational>) -> Vec<BigRational> {
        match a.last() {
            Some(l) if !l.is_one() => {
                let inv = l.recip();
                a.iter().map(|c| c * &inv).collect()
            }
            _ => a,
        }
    }

    pub fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut x = trimmed(a.to_vec());
        let mut y = trimmed(b.to_vec());
        while !y.is_empty() {
            let r = div_rem(&x, &y).1;
            x = y;
            y = r;
        }
        monic(x)
    }

    pub fn derivative(a: &[BigRational]) -> Vec<BigRational> {
        trimmed(a.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect())
    }

    /// Inverse of `a` modulo `m`, or `None` when they share a factor.
    pub fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
        // Extended Euclid tracking only the coefficient of `a`.
        let (mut r0, mut r1) = (m.to_vec(), trimmed(a.to_vec()));
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = div_rem(&r0, &r1);
            let s = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.len() != 1 {
            return None;
        }
        let inv = r0[0].recip();
        Some(rem(s0.iter().map(|c| c * &inv).collect(), m))
    }

    pub fn eval(a: &[BigRational], x: &BigRational) -> BigRational {
        a.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn format(a: &[BigRational], var: &str) -> String {
        if a.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in a.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }

    fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
        let n = n.abs().to_u64()?;
        if n > 1 << 40 {
            return None;
        }
        let mut ds = Vec::new();
        let mut d = 1u64;
        while d * d <= n {
            if n % d == 0 {
                ds.push(BigInt::from(d));
                if d * d != n {
                    ds.push(BigInt::from(n / d));
                }
            }
            d += 1;
        }
        Some(ds.into_iter().flat_map(|d| [d.clone(), -d]).collect())
    }

    /// Rescales a monic rational polynomial `m(t)` to the monic integer
    /// polynomial `D^deg * m(u/D)`.
    fn integer_model(m: &[BigRational]) -> Vec<BigInt> {
        let lcm = m.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let deg = m.len() - 1;
        (0..=deg)
            .map(|i| {
                let scale = num_traits::pow(lcm.clone(), deg - i);
                (&m[i] * BigRational::from_integer(scale)).to_integer()
            })
            .collect()
    }

    pub(super) fn irreducibility(m: &[BigRational]) -> Irreducibility {
        let deg = m.len() - 1;
        if deg > 4 {
            return Irreducibility::Unchecked;
        }
        let ints = integer_model(m);
        let Some(roots) = (if ints[0].is_zero() { Some(vec![BigInt::zero()]) } else { divisors(&ints[0]) }) else {
            return Irreducibility::Unchecked;
        };
        let qi: Vec<BigRational> = ints.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        for r in &roots {
            if eval(&qi, &BigRational::from_integer(r.clone())).is_zero() {
                return Irreducibility::Reducible(format!("rational root {}", r));
            }
        }
        if deg == 4 {
            // (u^2 + p u + q)(u^2 + r u + s) with q s = c0.
            let [c0, c1, c2, c3, _] = [&ints[0], &ints[1], &ints[2], &ints[3], &ints[4]];
            for q in &roots {
                let s = c0 / q;
                if s != q.clone() {
                    let num = c1 - q * c3;
                    let den = &s - q;
                    if !(&num % &den).is_zero() {
                        continue;
                    }
                    let p = &num / &den;
                    let r = c3 - &p;
                    if &(q + &s + &p * &r) == c2 {
                        return Irreducibility::Reducible("quadratic factor".into());
                    }
                } else {
                    if &(q * c3) != c1 {
                        continue;
                    }
                    // p + r = c3, p r = c2 - 2q
                    let disc = c3 * c3 - BigInt::from(4) * (c2 - BigInt::from(2) * q);
                    if !disc.is_negative() {
                        let root = disc.sqrt();
                        if &root * &root == disc && ((c3 + &root) % BigInt::from(2)).is_zero() {
                            return Irreducibility::Reducible("quadratic factor".into());
                        }
                    }
                }
            }
        }
        Irreducibility::Irreducible
    }
}
