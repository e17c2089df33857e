//! Finite matrix groups: closure, Reynolds operator, relative traces,
//! element classification and the Molien series.
//!
//! A matrix `A` acts on polynomials by `x_i -> sum_j A[i][j] x_j` and on
//! points by `v -> A v`, so that `f(A v) = (A.f)(v)`. Acting by `A` and then
//! by `B` is the action of `A B`.

use std::collections::{HashMap, HashSet, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Matrix;
use crate::poly::{Polynomial, PowerSeries};

pub const DEFAULT_CAP: usize = 100_000;

#[derive(Debug, Clone)]
pub struct FiniteMatrixGroup {
    field: Field,
    dimension: usize,
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
}

/// The subgroup `H` together with representatives `g` of the sets `H g`,
/// on each of which the action on an `H`-invariant is constant.
#[derive(Debug, Clone)]
pub struct CosetDecomposition {
    pub subgroup: Vec<Matrix>,
    pub representatives: Vec<Matrix>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    Identity,
    Reflection,
    Bireflection,
    Other,
}

/// Codimension of the fixed space and the strongest applicable label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ElementClass {
    pub codimension: usize,
    pub kind: ElementKind,
}

pub fn classify_element(sigma: &Matrix) -> ElementClass {
    let id = Matrix::identity(sigma.field(), sigma.rows());
    let codimension = sigma.sub(&id).rank();
    let kind = match codimension {
        0 => ElementKind::Identity,
        1 => ElementKind::Reflection,
        2 => ElementKind::Bireflection,
        _ => ElementKind::Other,
    };
    ElementClass { codimension, kind }
}

fn closure(field: &Field, dimension: usize, gens: &[Matrix], cap: usize) -> Result<Vec<Matrix>> {
    let id = Matrix::identity(field, dimension);
    let mut seen: HashSet<Matrix> = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.mul(s);
            if seen.insert(h.clone()) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                elements.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(elements)
}

impl FiniteMatrixGroup {
    /// Enumerates the group generated by `generators` breadth-first from the
    /// identity, multiplying by the generators in the given order.
    pub fn close(field: &Field, dimension: usize, generators: Vec<Matrix>, cap: usize) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.field() != field {
                return Err(Error::FieldMismatch);
            }
            if g.rows() != dimension || g.cols() != dimension {
                return Err(Error::LengthMismatch { expected: dimension, got: g.rows().max(g.cols()) });
            }
            if g.rank() < dimension {
                return Err(Error::SingularGenerator(i));
            }
        }
        let elements = closure(field, dimension, &generators, cap)?;
        let index = elements.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(FiniteMatrixGroup { field: field.clone(), dimension, generators, elements, index })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.index.contains_key(m)
    }

    /// Whether the characteristic divides the group order.
    pub fn is_modular(&self) -> bool {
        let p = self.field.characteristic();
        p != 0 && (self.order() as u64).is_multiple_of(p)
    }

    pub fn check_nonmodular(&self) -> Result<()> {
        if self.is_modular() {
            return Err(Error::ModularCase { prime: self.field.characteristic(), order: self.order() });
        }
        Ok(())
    }

    fn check_ring(&self, f: &Polynomial) -> Result<()> {
        if f.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if f.ring().nvars() < self.dimension {
            return Err(Error::LengthMismatch { expected: self.dimension, got: f.ring().nvars() });
        }
        Ok(())
    }

    /// `sigma . f` (acting on the first `dimension` variables).
    pub fn act(&self, sigma: &Matrix, f: &Polynomial) -> Polynomial {
        f.apply_linear_map_unchecked(sigma)
    }

    /// `sigma v`.
    pub fn act_on_point(sigma: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
        (0..sigma.rows())
            .map(|i| (0..sigma.cols()).fold(sigma.field().zero(), |acc, j| &acc + &(sigma.get(i, j) * &v[j])))
            .collect()
    }

    /// Whether every generator fixes `f`.
    pub fn is_invariant(&self, f: &Polynomial) -> bool {
        self.generators.iter().all(|s| self.act(s, f) == *f)
    }

    fn sum_of_images(&self, f: &Polynomial, elements: &[Matrix]) -> Polynomial {
        let images: Vec<Polynomial> = elements.par_iter().map(|s| self.act(s, f)).collect();
        images.iter().fold(f.ring().zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }

    /// Averages `f` over the group.
    pub fn reynolds(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_nonmodular()?;
        self.check_ring(f)?;
        let inv = self.field.from_i64(self.order() as i64).inv()?;
        Ok(self.sum_of_images(f, &self.elements).scale(&inv))
    }

    /// Checks that `subgroup` is a subgroup and decomposes the group into
    /// sets `H g`.
    pub fn cosets(&self, subgroup: &[Matrix]) -> Result<CosetDecomposition> {
        let members: HashSet<&Matrix> = subgroup.iter().collect();
        if subgroup.is_empty() || !subgroup.iter().all(|h| self.contains(h)) {
            return Err(Error::NotASubgroup);
        }
        for a in subgroup {
            for b in subgroup {
                if !members.contains(&a.mul(b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        let mut covered = vec![false; self.order()];
        let mut representatives = Vec::new();
        for (i, g) in self.elements.iter().enumerate() {
            if covered[i] {
                continue;
            }
            for h in subgroup {
                covered[self.index[&h.mul(g)]] = true;
            }
            representatives.push(g.clone());
        }
        Ok(CosetDecomposition { subgroup: subgroup.to_vec(), representatives })
    }

    /// `sum over representatives sigma of sigma . f` for an `H`-invariant `f`.
    pub fn relative_trace(&self, f: &Polynomial, subgroup: &[Matrix]) -> Result<Polynomial> {
        let cosets = self.cosets(subgroup)?;
        self.relative_trace_with(f, &cosets)
    }

    pub fn relative_trace_with(&self, f: &Polynomial, cosets: &CosetDecomposition) -> Result<Polynomial> {
        self.check_ring(f)?;
        if cosets.subgroup.iter().any(|h| self.act(h, f) != *f) {
            return Err(Error::NotHInvariant);
        }
        Ok(self.sum_of_images(f, &cosets.representatives))
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, sigma: &Matrix) -> usize {
        let mut power = sigma.clone();
        let mut k = 1;
        while !power.is_identity() && k <= self.order() {
            power = power.mul(sigma);
            k += 1;
        }
        k
    }

    /// Whether the elements satisfying `predicate` generate the whole group.
    pub fn generated_by<F: Fn(&Matrix) -> bool + Sync>(&self, predicate: F) -> bool {
        let chosen: Vec<Matrix> = self.elements.iter().filter(|m| predicate(m)).cloned().collect();
        closure(&self.field, self.dimension, &chosen, self.order() + 1).is_ok_and(|e| e.len() == self.order())
    }

    pub fn is_reflection_group(&self) -> bool {
        self.generated_by(|m| classify_element(m).codimension == 1)
    }

    pub fn is_bireflection_group(&self) -> bool {
        self.generated_by(|m| classify_element(m).codimension <= 2)
    }

    /// Generation by `p'`-elements and bireflections, necessary for the
    /// invariant ring to be Cohen-Macaulay.
    pub fn cm_necessary_condition(&self) -> bool {
        let p = self.field.characteristic() as usize;
        if p == 0 {
            return true;
        }
        self.generated_by(|m| !self.element_order(m).is_multiple_of(p) || classify_element(m).codimension <= 2)
    }

    /// `(1/|G|) sum 1/det(I - t sigma)` up to `t^truncation`.
    pub fn molien_series(&self, truncation: usize) -> Result<PowerSeries> {
        let p = self.field.characteristic();
        if p != 0 {
            return Err(Error::PositiveCharacteristic(p));
        }
        let terms: Vec<PowerSeries> = self
            .elements
            .par_iter()
            .map(|s| {
                // det(I - t A) has the characteristic coefficients in reverse.
                let c = s.charpoly_coefficients()?;
                PowerSeries::from_coefficients(&self.field, &c, truncation).inverse()
            })
            .collect::<Result<_>>()?;
        let sum = terms.iter().fold(PowerSeries::zero(&self.field, truncation), |acc, t| acc.add(t));
        Ok(sum.scale(&self.field.from_i64(self.order() as i64).inv()?))
    }
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_xorshift::XorShiftRng;

    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::{Monomial, Ring};

    fn sqrt2() -> Field {
        Field::from_spec(&FieldSpec::SimpleExtension { minimal_poly: "w^2 - 2".into(), generator: "w".into() }).unwrap()
    }

    fn mat(f: &Field, rows: &[&[&str]]) -> Matrix {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        Matrix::parse(f, &rows).unwrap()
    }

    fn d8() -> FiniteMatrixGroup {
        let f = sqrt2();
        let tau = mat(&f, &[&["1", "0"], &["0", "-1"]]);
        let sigma = mat(&f, &[&["w/2", "-w/2"], &["w/2", "w/2"]]);
        FiniteMatrixGroup::close(&f, 2, vec![tau, sigma], DEFAULT_CAP).unwrap()
    }

    fn swap(f: &Field) -> FiniteMatrixGroup {
        FiniteMatrixGroup::close(f, 2, vec![mat(f, &[&["0", "1"], &["1", "0"]])], DEFAULT_CAP).unwrap()
    }

    fn ring(f: &Field) -> Ring {
        Ring::new(f.clone(), vec!["x".into(), "y".into()]).unwrap()
    }

    #[test]
    fn closure_orders() {
        let g = d8();
        assert_eq!(g.order(), 16);
        assert!(g.generators().iter().all(|s| g.contains(s)));
        let q = Field::rationals();
        assert_eq!(FiniteMatrixGroup::close(&q, 2, vec![Matrix::identity(&q, 2)], DEFAULT_CAP).unwrap().order(), 1);
        assert_eq!(
            FiniteMatrixGroup::close(&q, 2, vec![mat(&q, &[&["-1", "0"], &["0", "-1"]])], 10).unwrap().order(),
            2
        );
        let infinite = mat(&q, &[&["1", "1"], &["0", "1"]]);
        assert_eq!(FiniteMatrixGroup::close(&q, 2, vec![infinite], 50).unwrap_err(), Error::CapExceeded(50));
        let singular = mat(&q, &[&["1", "1"], &["1", "1"]]);
        assert_eq!(
            FiniteMatrixGroup::close(&q, 2, vec![Matrix::identity(&q, 2), singular], 50).unwrap_err(),
            Error::SingularGenerator(1)
        );
    }

    #[test]
    fn d8_reynolds() {
        let g = d8();
        let r = ring(g.field());
        assert_eq!(g.reynolds(&r.parse("y^2").unwrap()).unwrap(), r.parse("(x^2 + y^2)/2").unwrap());
        assert!(g.reynolds(&r.parse("x*y").unwrap()).unwrap().is_zero());
        let inv = r.parse("x^2 + y^2").unwrap();
        assert_eq!(g.reynolds(&inv).unwrap(), inv);
    }

    #[test]
    fn reynolds_is_a_projection() {
        let g = d8();
        let r = ring(g.field());
        let mut rng = XorShiftRng::seed_from_u64(3);
        for _ in 0..100 {
            let mut p = r.zero();
            for _ in 0..rng.random_range(1..4) {
                let e: Vec<u32> = (0..2).map(|_| rng.random_range(0..3)).collect();
                p += &r.term(Monomial::new(e), r.field().from_i64(rng.random_range(-3..=3)));
            }
            let q = g.reynolds(&p).unwrap();
            assert!(g.is_invariant(&q));
            assert_eq!(g.reynolds(&q).unwrap(), q);
        }
    }

    #[test]
    fn modular_reynolds_fails() {
        let f = Field::prime(2).unwrap();
        let g = swap(&f);
        let r = ring(&f);
        assert_eq!(g.reynolds(&r.parse("x").unwrap()).unwrap_err(), Error::ModularCase { prime: 2, order: 2 });
    }

    #[test]
    fn relative_traces() {
        let f = Field::prime(2).unwrap();
        let g = swap(&f);
        let r = ring(&f);
        let trivial = vec![Matrix::identity(&f, 2)];
        assert_eq!(g.relative_trace(&r.parse("x").unwrap(), &trivial).unwrap(), r.parse("x + y").unwrap());
        let x = r.parse("x").unwrap();
        assert_eq!(g.relative_trace(&x, g.elements()).unwrap_err(), Error::NotHInvariant);
        let s = r.parse("x*y").unwrap();
        assert_eq!(g.relative_trace(&s, g.elements()).unwrap(), s);

        let d = d8();
        let rd = ring(d.field());
        let t = rd.parse("x^3*y + 2*y^2").unwrap();
        let full = d.relative_trace(&t, &[Matrix::identity(d.field(), 2)]).unwrap();
        assert_eq!(full, d.reynolds(&t).unwrap().scale(&d.field().from_i64(16)));
        assert_eq!(d.relative_trace(&t, &[d.generators()[0].clone()]).unwrap_err(), Error::NotASubgroup);
    }

    #[test]
    fn relative_trace_independent_of_representatives() {
        let d = d8();
        let r = ring(d.field());
        let tau = d.generators()[0].clone();
        let h = vec![Matrix::identity(d.field(), 2), tau];
        let f = r.parse("x^3 + x*y^2 + y^4").unwrap();
        let cosets = d.cosets(&h).unwrap();
        assert_eq!(cosets.representatives.len() * h.len(), d.order());
        let base = d.relative_trace_with(&f, &cosets).unwrap();
        assert!(d.is_invariant(&base));
        let mut rng = XorShiftRng::seed_from_u64(5);
        for _ in 0..5 {
            let shuffled: Vec<Matrix> =
                cosets.representatives.iter().map(|g| h[rng.random_range(0..2)].mul(g)).collect();
            let other = CosetDecomposition { subgroup: h.clone(), representatives: shuffled };
            assert_eq!(d.relative_trace_with(&f, &other).unwrap(), base);
        }
    }

    #[test]
    fn classification() {
        let q = Field::rationals();
        assert_eq!(classify_element(&Matrix::identity(&q, 2)).kind, ElementKind::Identity);
        let tau = classify_element(&mat(&q, &[&["1", "0"], &["0", "-1"]]));
        assert_eq!((tau.codimension, tau.kind), (1, ElementKind::Reflection));
        let minus = classify_element(&mat(&q, &[&["-1", "0"], &["0", "-1"]]));
        assert_eq!((minus.codimension, minus.kind), (2, ElementKind::Bireflection));
    }

    #[test]
    fn generation_predicates() {
        let d = d8();
        assert!(d.is_reflection_group());
        assert!(d.generated_by(|_| true));
        let q = Field::rationals();
        let pm = FiniteMatrixGroup::close(&q, 2, vec![mat(&q, &[&["-1", "0"], &["0", "-1"]])], 10).unwrap();
        assert!(!pm.is_reflection_group());
        assert!(pm.is_bireflection_group());
        assert!(pm.cm_necessary_condition());
        assert_eq!(d.element_order(&d.generators()[1]), 8);
    }

    #[test]
    fn molien() {
        let q = Field::rationals();
        let trivial = FiniteMatrixGroup::close(&q, 3, vec![], 10).unwrap();
        // 1/(1-t)^3: binomial(k+2, 2)
        let s = trivial.molien_series(5).unwrap();
        let expect: Vec<Scalar> = [1, 3, 6, 10, 15, 21].iter().map(|&c| q.from_i64(c)).collect();
        assert_eq!(s.coefficients(), &expect[..]);
        let pm = FiniteMatrixGroup::close(&q, 1, vec![mat(&q, &[&["-1"]])], 10).unwrap();
        let expect: Vec<Scalar> = [1, 0, 1, 0, 1, 0].iter().map(|&c| q.from_i64(c)).collect();
        assert_eq!(pm.molien_series(5).unwrap().coefficients(), &expect[..]);
        let d = d8().molien_series(8).unwrap();
        let f = sqrt2();
        let expect: Vec<Scalar> = [1, 0, 1, 0, 1, 0, 1, 0, 2].iter().map(|&c| f.from_i64(c)).collect();
        assert_eq!(d.coefficients(), &expect[..]);
        let gf = swap(&Field::prime(3).unwrap());
        assert_eq!(gf.molien_series(3).unwrap_err(), Error::PositiveCharacteristic(3));
    }
}
