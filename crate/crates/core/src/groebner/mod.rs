//! Groebner bases: Buchberger's algorithm (optionally degree-truncated),
//! normal forms, reduced bases, elimination, dimension and membership tests.

mod engine;

use std::cmp::Ordering;

pub use engine::GroebnerEngine;
use engine::{OrderedPoly, Reducer};

use crate::error::{Error, Result};
use crate::poly::{BaseOrder, MonomialOrder, Polynomial, Ring};

/// A Groebner basis, or a `d`-truncated one when `truncation` is set.
///
/// Generators are monic. A reduced basis lists its elements by ascending
/// leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    generators: Vec<Polynomial>,
    truncation: Option<u32>,
    reduced: bool,
    reducer: Reducer,
}

/// Krull dimension of `K[x]/I`, or `Empty` when `I` is the unit ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealDimension {
    Empty,
    Dimension(usize),
}

impl GroebnerBasis {
    fn from_parts(
        ring: &Ring,
        order: MonomialOrder,
        generators: Vec<Polynomial>,
        truncation: Option<u32>,
        reduced: bool,
    ) -> Self {
        let mut reducer = Reducer::new(order);
        for g in &generators {
            reducer.push(OrderedPoly::from_polynomial(g, &order));
        }
        GroebnerBasis { ring: ring.clone(), generators, truncation, reduced, reducer }
    }

    pub(crate) fn from_engine(engine: &GroebnerEngine) -> Self {
        Self::from_parts(engine.ring(), *engine.order(), engine.generators(), engine.truncation(), false)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.reducer.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<crate::poly::Monomial> {
        self.reducer.polys.iter().map(|p| p.leading_monomial().clone()).collect()
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant())
    }

    /// Remainder of full reduction by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::ContextMismatch);
        }
        if let (Some(d), Some(deg)) = (self.truncation, f.total_degree()) {
            if deg > d {
                return Err(Error::TruncationInsufficient { truncation: d, degree: deg });
            }
        }
        Ok(self.reducer.normal_form(f))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// The unique reduced basis of the same ideal.
    pub fn reduce(&self) -> Result<GroebnerBasis> {
        if self.truncation.is_some() {
            return Err(Error::TruncatedBasis);
        }
        if self.reduced {
            return Ok(self.clone());
        }
        let order = *self.order();
        let lms = self.leading_monomials();
        // Minimal basis: drop elements whose leading monomial is divisible by
        // another's (keeping the first of equal ones).
        let keep: Vec<usize> = (0..lms.len())
            .filter(|&i| !(0..lms.len()).any(|j| j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i)))
            .collect();
        let mut out = Vec::with_capacity(keep.len());
        for &i in &keep {
            let mut others = Reducer::new(order);
            for &j in keep.iter().filter(|&&j| j != i) {
                others.push(self.reducer.polys[j].clone());
            }
            out.push(others.normal_form(&self.generators[i]).monic(&order));
        }
        out.sort_by(|a, b| cmp_leading(a, b, &order));
        Ok(Self::from_parts(&self.ring, order, out, None, true))
    }

    /// Largest set of variables no leading monomial is supported in.
    pub fn dimension(&self) -> Result<IdealDimension> {
        if self.truncation.is_some() {
            return Err(Error::TruncatedBasis);
        }
        if self.is_unit_ideal() {
            return Ok(IdealDimension::Empty);
        }
        let n = self.ring.nvars();
        let supports: Vec<Vec<usize>> = self.leading_monomials().iter().map(|m| m.support().collect()).collect();
        let mut chosen = vec![false; n];
        let mut best = 0;
        independent_sets(0, 0, &supports, &mut chosen, &mut best);
        Ok(IdealDimension::Dimension(best))
    }
}

fn independent_sets(i: usize, size: usize, supports: &[Vec<usize>], chosen: &mut Vec<bool>, best: &mut usize) {
    if size + (chosen.len() - i) <= *best {
        return;
    }
    if i == chosen.len() {
        *best = size;
        return;
    }
    chosen[i] = true;
    // Only supports containing i can become newly covered.
    let ok = supports.iter().all(|s| !s.contains(&i) || !s.iter().all(|&v| chosen[v]));
    if ok {
        independent_sets(i + 1, size + 1, supports, chosen, best);
    }
    chosen[i] = false;
    independent_sets(i + 1, size, supports, chosen, best);
}

fn cmp_leading(a: &Polynomial, b: &Polynomial, order: &MonomialOrder) -> Ordering {
    let la = a.leading_monomial(order).expect("nonzero");
    let lb = b.leading_monomial(order).expect("nonzero");
    order.cmp(&la, &lb)
}

fn check_ring(ring: &Ring, gens: &[Polynomial]) -> Result<()> {
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(Error::ContextMismatch);
    }
    Ok(())
}

/// Groebner basis of the ideal generated by `gens` (all in `ring`); with
/// `truncate = Some(d)` only s-pairs of degree at most `d` are treated.
pub fn buchberger(
    ring: &Ring,
    gens: &[Polynomial],
    order: MonomialOrder,
    truncate: Option<u32>,
) -> Result<GroebnerBasis> {
    check_ring(ring, gens)?;
    let mut engine = GroebnerEngine::new(ring, order);
    for g in gens {
        engine.add_generator(g);
    }
    match truncate {
        Some(d) => engine.complete_to(d),
        None => engine.complete(),
    }
    Ok(GroebnerBasis::from_engine(&engine))
}

/// Reduced Groebner basis.
pub fn reduced_basis(ring: &Ring, gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger(ring, gens, order, None)?.reduce()
}

pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    basis.normal_form(f)
}

pub fn reduce_basis(basis: &GroebnerBasis) -> Result<GroebnerBasis> {
    basis.reduce()
}

pub fn ideal_dimension(basis: &GroebnerBasis) -> Result<IdealDimension> {
    basis.dimension()
}

pub fn ideal_membership(f: &Polynomial, basis: &GroebnerBasis) -> Result<bool> {
    basis.contains(f)
}

/// Reduced Groebner basis of `(gens) ∩ K[kept variables]`, in the original
/// ring, under grevlex restricted to the kept variables.
pub fn elimination_ideal(ring: &Ring, gens: &[Polynomial], eliminate: &[usize]) -> Result<Vec<Polynomial>> {
    check_ring(ring, gens)?;
    let n = ring.nvars();
    if let Some(&bad) = eliminate.iter().find(|&&v| v >= n) {
        return Err(Error::LengthMismatch { expected: n, got: bad + 1 });
    }
    let mut perm: Vec<usize> = (0..n).filter(|v| eliminate.contains(v)).collect();
    let k = perm.len();
    perm.extend((0..n).filter(|v| !eliminate.contains(v)));
    // perm[new] = old
    let names: Vec<String> = perm.iter().map(|&i| ring.names()[i].clone()).collect();
    let work = Ring::new(ring.field().clone(), names)?;
    let mut to_new = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        to_new[old] = new;
    }
    let moved: Vec<Polynomial> = gens.iter().map(|g| g.rename_into(&work, &to_new)).collect();
    let order = MonomialOrder::BlockElimination { front: k, inner: BaseOrder::GrevLex };
    let basis = reduced_basis(&work, &moved, order)?;
    let kept: Vec<usize> = (k..n).collect();
    Ok(basis.generators().iter().filter(|g| g.involves_only(&kept)).map(|g| g.rename_into(ring, &perm)).collect())
}

/// Whether `f` vanishes on the variety of `gens` (Rabinowitsch trick).
pub fn radical_membership(ring: &Ring, f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    check_ring(ring, gens)?;
    check_ring(ring, std::slice::from_ref(f))?;
    if f.is_zero() {
        return Ok(true);
    }
    let u = ring.fresh_names(&["u".to_string()]);
    let big = ring.extended(&u)?;
    let map: Vec<usize> = (0..ring.nvars()).collect();
    let mut moved: Vec<Polynomial> = gens.iter().map(|g| g.rename_into(&big, &map)).collect();
    let uf = &big.var(ring.nvars()) * &f.rename_into(&big, &map);
    moved.push(&big.one() - &uf);
    let basis = buchberger(&big, &moved, MonomialOrder::GrevLex, None)?;
    Ok(basis.is_unit_ideal())
}

/// Membership oracle for the subalgebra `K[g_1, ..., g_k]`.
///
/// Holds a Groebner basis of `(T_i - g_i)` in `K[x, T]` under a block order
/// eliminating `x`; `f` lies in the subalgebra iff its normal form involves
/// only the tags, and that normal form expresses `f` in the `g_i`.
#[derive(Debug, Clone)]
pub struct SubalgebraOracle {
    ring: Ring,
    big: Ring,
    tags: Ring,
    basis: GroebnerBasis,
}

impl SubalgebraOracle {
    pub fn new(ring: &Ring, gens: &[Polynomial]) -> Result<Self> {
        check_ring(ring, gens)?;
        let n = ring.nvars();
        let bases: Vec<String> = (1..=gens.len()).map(|i| format!("T{i}")).collect();
        let names = ring.fresh_names(&bases);
        let big = ring.extended(&names)?;
        let tags = Ring::new(ring.field().clone(), names)?;
        let map: Vec<usize> = (0..n).collect();
        let rels: Vec<Polynomial> =
            gens.iter().enumerate().map(|(i, g)| &big.var(n + i) - &g.rename_into(&big, &map)).collect();
        let order = MonomialOrder::BlockElimination { front: n, inner: BaseOrder::GrevLex };
        let basis = buchberger(&big, &rels, order, None)?;
        Ok(SubalgebraOracle { ring: ring.clone(), big, tags, basis })
    }

    /// Ring `K[T_1, ..., T_k]` in which witnesses are expressed.
    pub fn tag_ring(&self) -> &Ring {
        &self.tags
    }

    /// A polynomial `w` in the tags with `w(g_1, ..., g_k) = f`, if any.
    pub fn witness(&self, f: &Polynomial) -> Result<Option<Polynomial>> {
        check_ring(&self.ring, std::slice::from_ref(f))?;
        let n = self.ring.nvars();
        let map: Vec<usize> = (0..n).collect();
        let nf = self.basis.normal_form(&f.rename_into(&self.big, &map))?;
        let tag_vars: Vec<usize> = (n..self.big.nvars()).collect();
        if !nf.involves_only(&tag_vars) {
            return Ok(None);
        }
        let back: Vec<usize> = (0..self.big.nvars()).map(|i| i.saturating_sub(n)).collect();
        Ok(Some(nf.rename_into(&self.tags, &back)))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.witness(f)?.is_some())
    }
}

pub fn subalgebra_membership(ring: &Ring, f: &Polynomial, gens: &[Polynomial]) -> Result<Option<Polynomial>> {
    SubalgebraOracle::new(ring, gens)?.witness(f)
}

#[cfg(test)]
mod tests;
