//! Invariants of finite matrix groups: homogeneous invariant bases, King's
//! algorithm for minimal generating sets, Noether's separating set and its
//! reduction to at most `2n + 1` elements, Dade's primary invariants, and
//! degree bounds.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::groebner::{self, GroebnerEngine, IdealDimension, SubalgebraOracle};
use crate::group::FiniteMatrixGroup;
use crate::linalg::Matrix;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::sampling;

fn check_ring(group: &FiniteMatrixGroup, ring: &Ring) -> Result<()> {
    if ring.field() != group.field() {
        return Err(Error::FieldMismatch);
    }
    if ring.nvars() != group.dimension() {
        return Err(Error::LengthMismatch { expected: group.dimension(), got: ring.nvars() });
    }
    Ok(())
}

/// Basis of the homogeneous invariants of degree `d`, from the linear system
/// `sigma(f) = f` over the generators. Works in the modular case as well.
///
/// Unknowns are the monomials in descending grevlex order; each basis vector
/// has a 1 at its own free monomial and 0 at the others.
pub fn invariant_basis(group: &FiniteMatrixGroup, ring: &Ring, d: u32) -> Result<Vec<Polynomial>> {
    check_ring(group, ring)?;
    let mut monos = ring.monomials_of_degree(d, &MonomialOrder::GrevLex);
    monos.reverse();
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let n = monos.len();
    let field = ring.field();
    let mut system = Matrix::zeros(field, group.generators().len() * n, n);
    let images: Vec<Vec<Polynomial>> = group
        .generators()
        .par_iter()
        .map(|s| monos.iter().map(|m| group.act(s, &ring.monomial(m.clone()))).collect())
        .collect();
    for (g, imgs) in images.iter().enumerate() {
        for (j, img) in imgs.iter().enumerate() {
            for (m, c) in img.terms() {
                let i = index[m];
                system.set(g * n + i, j, c.clone());
            }
            let diag = system.get(g * n + j, j) - &field.one();
            system.set(g * n + j, j, diag);
        }
    }
    Ok(system
        .nullspace()
        .into_iter()
        .map(|v| Polynomial::from_terms(ring, monos.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero())))
        .collect())
}

/// Output of a generating-set computation.
#[derive(Debug, Clone)]
pub struct GeneratingSetResult {
    pub generators: Vec<Polynomial>,
    pub degrees: Vec<u32>,
    /// Pass at which no monomial remained to be treated (King only).
    pub termination_degree: Option<u32>,
    pub minimal: bool,
}

impl GeneratingSetResult {
    fn new(generators: Vec<Polynomial>, termination_degree: Option<u32>, minimal: bool) -> Self {
        let degrees = generators.iter().map(|g| g.total_degree().unwrap_or(0)).collect();
        GeneratingSetResult { generators, degrees, termination_degree, minimal }
    }

    /// The same set with every generator scaled to leading coefficient 1.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        GeneratingSetResult { generators: self.generators.iter().map(|g| g.monic(order)).collect(), ..self.clone() }
    }
}

/// King's algorithm: a minimal homogeneous generating set of the invariant
/// ring of a nonmodular finite group.
///
/// Pass `d` completes a `d`-truncated Groebner basis of the ideal generated
/// so far, then walks the degree-`d` monomials that are not leading-monomial
/// multiples in ascending order. A Reynolds image with nonzero normal form
/// `h` becomes a new generator; `h` joins the basis and `LM(h)` is skipped.
/// The run stops at the first pass whose monomial set is empty.
pub fn king_generators(group: &FiniteMatrixGroup, ring: &Ring, order: MonomialOrder) -> Result<GeneratingSetResult> {
    group.check_nonmodular()?;
    check_ring(group, ring)?;
    let mut engine = GroebnerEngine::new(ring, order);
    let mut generators = Vec::new();
    for d in 1.. {
        engine.complete_to(d);
        let todo: Vec<Monomial> =
            ring.monomials_of_degree(d, &order).into_iter().filter(|m| !engine.is_reducible(m)).collect();
        log::debug!("king: pass {d}, {} monomials", todo.len());
        if todo.is_empty() {
            return Ok(GeneratingSetResult::new(generators, Some(d), true));
        }
        let mut removed: HashSet<Monomial> = HashSet::new();
        for t in todo {
            if removed.contains(&t) {
                continue;
            }
            let f = group.reynolds(&ring.monomial(t))?;
            let h = engine.normal_form(&f);
            if !h.is_zero() {
                removed.insert(h.leading_monomial(&order)?);
                engine.adjoin_reduced(&h);
                generators.push(f);
            }
        }
    }
    unreachable!()
}

/// First Reynolds image of a monomial of degree at most `max_degree` that is
/// not a polynomial in `gens`.
pub fn reynolds_image_outside(
    group: &FiniteMatrixGroup,
    ring: &Ring,
    gens: &[Polynomial],
    max_degree: u32,
) -> Result<Option<Polynomial>> {
    let oracle = SubalgebraOracle::new(ring, gens)?;
    for d in 0..=max_degree {
        let images: Vec<Polynomial> = ring
            .monomials_of_degree(d, &MonomialOrder::GrevLex)
            .into_par_iter()
            .map(|m| group.reynolds(&ring.monomial(m)))
            .collect::<Result<_>>()?;
        for f in images {
            if !f.is_zero() && !oracle.contains(&f)? {
                return Ok(Some(f));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Serialize)]
pub struct NoetherHilbertReport {
    pub group_order: usize,
    pub max_degree: u32,
    /// Every generator has degree at most `|G|`.
    pub degree_bound: bool,
    /// Every monomial of degree `|G|` lies in the ideal of the generators.
    pub hilbert_monomials: bool,
    /// Every Reynolds image up to the checked degree is a polynomial in the generators.
    pub reynolds_in_subalgebra: bool,
    pub checked_degree: u32,
}

impl NoetherHilbertReport {
    pub fn passed(&self) -> bool {
        self.degree_bound && self.hilbert_monomials && self.reynolds_in_subalgebra
    }
}

pub fn verify_noether_and_hilbert(
    group: &FiniteMatrixGroup,
    ring: &Ring,
    result: &GeneratingSetResult,
) -> Result<NoetherHilbertReport> {
    group.check_nonmodular()?;
    check_ring(group, ring)?;
    let order = group.order();
    let max_degree = result.degrees.iter().copied().max().unwrap_or(0);
    let basis = groebner::buchberger(ring, &result.generators, MonomialOrder::GrevLex, None)?;
    let mut hilbert_monomials = true;
    for m in ring.monomials_of_degree(order as u32, &MonomialOrder::GrevLex) {
        if !basis.contains(&ring.monomial(m))? {
            hilbert_monomials = false;
            break;
        }
    }
    let checked_degree = result.termination_degree.unwrap_or(order as u32);
    let outside = reynolds_image_outside(group, ring, &result.generators, checked_degree)?;
    Ok(NoetherHilbertReport {
        group_order: order,
        max_degree,
        degree_bound: max_degree as usize <= order,
        hilbert_monomials,
        reynolds_in_subalgebra: outside.is_none(),
        checked_degree,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Noether,
    Reduced,
}

#[derive(Debug, Clone)]
pub struct SeparatingSetResult {
    pub invariants: Vec<Polynomial>,
    pub homogeneous: bool,
    pub provenance: Provenance,
    /// Coefficient vectors used by each reduction step.
    pub alphas: Vec<Vec<i64>>,
}

/// Coefficients (in `x`) of `F(t, y) = prod_sigma (y - sum_i sigma(x_i) t^(i-1))`,
/// without constants and without repeats up to scalars.
pub fn noether_separating_set(group: &FiniteMatrixGroup, ring: &Ring) -> Result<SeparatingSetResult> {
    check_ring(group, ring)?;
    let n = ring.nvars();
    let extra = ring.fresh_names(&["t".to_string(), "y".to_string()]);
    let big = ring.extended(&extra)?;
    let (t, y) = (big.var(n), big.var(n + 1));
    let xs: Vec<Polynomial> = (0..n).map(|i| big.var(i)).collect();
    let factors: Vec<Polynomial> = group
        .elements()
        .iter()
        .map(|s| {
            let mut linear = big.zero();
            let mut tp = big.one();
            for i in 0..n {
                for (j, x) in xs.iter().enumerate() {
                    let c = s.get(i, j);
                    if !c.is_zero() {
                        linear += &(x * &tp).scale(c);
                    }
                }
                tp = &tp * &t;
            }
            &y - &linear
        })
        .collect();
    let product = factors.iter().fold(big.one(), |acc, f| &acc * f);

    let mut coefficients: BTreeMap<(u32, u32), Polynomial> = BTreeMap::new();
    for (m, c) in product.terms() {
        let key = (m.exponent(n), m.exponent(n + 1));
        let rest = Monomial::new(m.exponents()[..n].to_vec());
        *coefficients.entry(key).or_insert_with(|| ring.zero()) += &ring.term(rest, c.clone());
    }
    let mut seen: HashSet<Polynomial> = HashSet::new();
    let mut invariants = Vec::new();
    for c in coefficients.into_values() {
        if c.is_constant() {
            continue;
        }
        if seen.insert(c.monic(&MonomialOrder::GrevLex)) {
            invariants.push(c);
        }
    }
    Ok(SeparatingSetResult { invariants, homogeneous: true, provenance: Provenance::Noether, alphas: Vec::new() })
}

/// Integer tuples of length `k` with nonzero first entry, by increasing
/// max-norm, lexicographic within a norm over the value order
/// `1, 0, -1, 2, -2, ...`.
pub fn alpha_candidates(k: usize) -> impl Iterator<Item = Vec<i64>> {
    // ranks: 0 -> 1, 1 -> 0, 2 -> -1, 3 -> 2, 4 -> -2, ...
    fn value(rank: usize) -> i64 {
        match rank {
            0 => 1,
            1 => 0,
            r if r % 2 == 1 => (r as i64 + 1) / 2,
            r => -(r as i64) / 2,
        }
    }
    (1usize..).flat_map(move |norm| {
        let ranks = 2 * norm + 1;
        let total = ranks.pow(k as u32);
        (0..total).filter_map(move |mut code| {
            let mut tuple = vec![0usize; k];
            for slot in tuple.iter_mut().rev() {
                *slot = code % ranks;
                code /= ranks;
            }
            let alpha: Vec<i64> = tuple.iter().map(|&r| value(r)).collect();
            let max = alpha.iter().map(|a| a.abs()).max().unwrap_or(0) as usize;
            (max == norm && alpha[0] != 0).then_some(alpha)
        })
    })
}

/// Least element (grevlex on the tags) of the reduced basis of the relation
/// ideal of `t (f_i(x) - f_i(y))`, as a polynomial in `T_1, ..., T_k`.
fn separating_relation(ring: &Ring, fs: &[Polynomial]) -> Result<(Ring, Polynomial)> {
    let n = ring.nvars();
    let k = fs.len();
    let mut bases: Vec<String> = ring.names().iter().map(|x| format!("{x}_")).collect();
    bases.push("t".into());
    bases.extend((1..=k).map(|i| format!("T{i}")));
    let fresh = ring.fresh_names(&bases);
    let big = ring.extended(&fresh)?;
    let to_x: Vec<usize> = (0..n).collect();
    let to_y: Vec<usize> = (n..2 * n).collect();
    let t = big.var(2 * n);
    let rels: Vec<Polynomial> = fs
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let g = &t * &(&f.rename_into(&big, &to_x) - &f.rename_into(&big, &to_y));
            &big.var(2 * n + 1 + i) - &g
        })
        .collect();
    let eliminate: Vec<usize> = (0..=2 * n).collect();
    let relations = groebner::elimination_ideal(&big, &rels, &eliminate)?;
    let h = relations.into_iter().next().expect("more than 2n+1 functions are algebraically dependent");
    let tags = Ring::new(ring.field().clone(), fresh[n + 1..].to_vec())?;
    let back: Vec<usize> = (0..big.nvars()).map(|i| i.saturating_sub(2 * n + 1)).collect();
    Ok((tags.clone(), h.rename_into(&tags, &back)))
}

/// Shrinks a separating set to at most `2n + 1` elements by repeatedly
/// replacing `f_1, ..., f_k` with `alpha_1 f_i - alpha_i f_1` (`i >= 2`),
/// where `H(alpha) != 0` for a relation `H` among `t (f_i(x) - f_i(y))`.
///
/// The relation is sought among the first `2n + 2` elements only; the
/// remaining `alpha_i` are 0.
pub fn reduce_separating_set(ring: &Ring, set: &[Polynomial]) -> Result<SeparatingSetResult> {
    if ring.field().characteristic() != 0 {
        return Err(Error::FieldTooSmall);
    }
    let n = ring.nvars();
    let limit = 2 * n + 1;
    let mut fs = set.to_vec();
    let mut alphas = Vec::new();
    while fs.len() > limit {
        let m = limit + 1;
        let (_, h) = separating_relation(ring, &fs[..m])?;
        let field = ring.field();
        let alpha = alpha_candidates(m)
            .find(|a| {
                let point: Vec<Scalar> = a.iter().map(|&v| field.from_i64(v)).collect();
                !h.evaluate(&point).expect("tag ring point").is_zero()
            })
            .expect("a nonzero polynomial does not vanish on all integer points");
        let mut full = alpha.clone();
        full.resize(fs.len(), 0);
        let a1 = field.from_i64(full[0]);
        let next: Vec<Polynomial> = (1..fs.len())
            .map(|i| &fs[i].scale(&a1) - &fs[0].scale(&field.from_i64(full[i])))
            .filter(|p| !p.is_zero())
            .collect();
        log::debug!("reduce: alpha {:?}, {} -> {}", full, fs.len(), next.len());
        alphas.push(full);
        fs = next;
    }
    let homogeneous = alphas.is_empty() && fs.iter().all(|f| f.is_homogeneous());
    Ok(SeparatingSetResult {
        invariants: fs,
        homogeneous,
        provenance: if alphas.is_empty() { Provenance::Noether } else { Provenance::Reduced },
        alphas,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SeparationFailure {
    /// `same_orbit_differs` or `distinct_orbits_agree`.
    pub kind: &'static str,
    pub v: Vec<String>,
    pub w: Vec<String>,
}

/// Sampled separation check. Passing is evidence, not proof.
#[derive(Debug, Clone, Serialize)]
pub struct SeparationReport {
    pub seed: u64,
    pub bound: i64,
    pub same_orbit_pairs: usize,
    pub distinct_orbit_pairs: usize,
    pub failures: Vec<SeparationFailure>,
}

impl SeparationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn values(set: &[Polynomial], v: &[Scalar]) -> Result<Vec<Scalar>> {
    set.iter().map(|f| f.evaluate(v)).collect()
}

fn render(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Draws `pairs` points `v`; compares `v` against a random `sigma v` (values
/// must agree) and against a random point `w` (values must differ unless
/// `w` lies in the orbit of `v`).
pub fn verify_separation_samples(
    set: &[Polynomial],
    group: &FiniteMatrixGroup,
    pairs: usize,
    bound: i64,
    seed: u64,
) -> Result<SeparationReport> {
    let field = group.field();
    let n = group.dimension();
    let mut rng = sampling::rng(seed);
    let mut report =
        SeparationReport { seed, bound, same_orbit_pairs: 0, distinct_orbit_pairs: 0, failures: Vec::new() };
    for _ in 0..pairs {
        let v = sampling::integer_point(&mut rng, field, n, bound);
        let sigma = &group.elements()[sampling::index(&mut rng, group.order())];
        let w = FiniteMatrixGroup::act_on_point(sigma, &v);
        let other = sampling::integer_point(&mut rng, field, n, bound);
        let fv = values(set, &v)?;
        for w in [w, other] {
            let same = group.elements().iter().any(|s| FiniteMatrixGroup::act_on_point(s, &v) == w);
            let equal = values(set, &w)? == fv;
            if same {
                report.same_orbit_pairs += 1;
                if !equal {
                    report.failures.push(SeparationFailure {
                        kind: "same_orbit_differs",
                        v: render(&v),
                        w: render(&w),
                    });
                }
            } else {
                report.distinct_orbit_pairs += 1;
                if equal {
                    report.failures.push(SeparationFailure {
                        kind: "distinct_orbits_agree",
                        v: render(&v),
                        w: render(&w),
                    });
                }
            }
        }
    }
    Ok(report)
}

fn dimension_of(ring: &Ring, fs: &[Polynomial]) -> Result<IdealDimension> {
    if fs.iter().any(|f| f.is_constant() || !f.is_homogeneous()) {
        return Err(Error::NonHomogeneousInput);
    }
    groebner::buchberger(ring, fs, MonomialOrder::GrevLex, None)?.dimension()
}

/// `n` homogeneous polynomials whose common zero set is the origin.
pub fn is_hsop(ring: &Ring, fs: &[Polynomial]) -> Result<bool> {
    Ok(fs.len() == ring.nvars() && dimension_of(ring, fs)? == IdealDimension::Dimension(0))
}

/// `k <= n` homogeneous polynomials cutting out a variety of dimension `n - k`.
pub fn is_phsop(ring: &Ring, fs: &[Polynomial]) -> Result<bool> {
    let n = ring.nvars();
    if fs.len() > n {
        return Ok(false);
    }
    if fs.is_empty() {
        return Ok(true);
    }
    Ok(dimension_of(ring, fs)? == IdealDimension::Dimension(n - fs.len()))
}

#[derive(Debug, Clone)]
pub struct DadeResult {
    pub invariants: Vec<Polynomial>,
    pub linear_forms: Vec<Polynomial>,
    pub seed: u64,
    /// Rejected forms over all slots.
    pub retries: usize,
}

pub const DADE_RETRIES: usize = 50;
const DADE_COEFFICIENT_BOUND: i64 = 3;

/// Product of the distinct images of `l` under the group.
pub fn orbit_product(group: &FiniteMatrixGroup, l: &Polynomial) -> Polynomial {
    let mut images: Vec<Polynomial> = Vec::new();
    for s in group.elements() {
        let img = group.act(s, l);
        if !images.contains(&img) {
            images.push(img);
        }
    }
    images.iter().fold(l.ring().one(), |acc, p| &acc * p)
}

/// Primary invariants as orbit products of seeded random linear forms, each
/// accepted only if the list so far is a partial hsop.
pub fn dade_primary_invariants(group: &FiniteMatrixGroup, ring: &Ring, seed: u64) -> Result<DadeResult> {
    check_ring(group, ring)?;
    if ring.field().is_finite() {
        return Err(Error::FieldTooSmall);
    }
    let n = ring.nvars();
    let mut rng = sampling::rng(seed);
    let mut invariants = Vec::new();
    let mut linear_forms = Vec::new();
    let mut retries = 0;
    for _ in 0..n {
        let mut accepted = false;
        for _ in 0..DADE_RETRIES {
            let coeffs: Vec<i64> = (0..n).map(|_| sampling::integer(&mut rng, DADE_COEFFICIENT_BOUND)).collect();
            if coeffs.iter().all(|&c| c == 0) {
                retries += 1;
                continue;
            }
            let l = Polynomial::from_terms(
                ring,
                coeffs.iter().enumerate().map(|(i, &c)| (Monomial::unit(n, i), ring.field().from_i64(c))),
            );
            let p = orbit_product(group, &l);
            invariants.push(p);
            if is_phsop(ring, &invariants)? {
                linear_forms.push(l);
                accepted = true;
                break;
            }
            invariants.pop();
            retries += 1;
        }
        if !accepted {
            return Err(Error::RetryLimitExceeded(DADE_RETRIES));
        }
    }
    debug_assert!(is_hsop(ring, &invariants)?);
    Ok(DadeResult { invariants, linear_forms, seed, retries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    /// `sum (d_i - 1)` over the primary degrees: bound for secondary invariants.
    pub symonds: u32,
    /// `n (|G| - 1)`.
    pub coarse: usize,
    /// `|G|`, valid in the nonmodular case only.
    pub noether: usize,
    pub noether_applies: bool,
}

pub fn degree_bound_report(n: usize, group_order: usize, primary_degrees: &[u32], modular: bool) -> BoundReport {
    BoundReport {
        symonds: primary_degrees.iter().map(|d| d.saturating_sub(1)).sum(),
        coarse: n * group_order.saturating_sub(1),
        noether: group_order,
        noether_applies: !modular,
    }
}
