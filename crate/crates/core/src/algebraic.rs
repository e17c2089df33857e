//! Linear algebraic groups given by equations: Derksen ideals, Derksen's
//! algorithm, invariant fields and separating varieties.
//!
//! A group is a variety `V(g_1, ..., g_l)` in the coordinates `z`; a point
//! `sigma` acts by `x_i -> f_i(sigma, x)`. The graph ideal lives in
//! `K[z, y, x]`, the Derksen ideal in `K[y, x]`.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::groebner::{self, GroebnerBasis};
use crate::invariants::GeneratingSetResult;
use crate::linalg::Matrix;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::ratfun::RationalFunction;

#[derive(Debug, Clone)]
pub enum ActionInput {
    /// `f_i = sum_j a_ij x_j` with `a_ij` in `K[z]`.
    Matrix(Vec<Vec<String>>),
    /// `f_i` in `K[z, x]`.
    Polynomials(Vec<String>),
}

#[derive(Debug, Clone)]
pub struct AlgebraicGroupSpec {
    z_ring: Ring,
    zx_ring: Ring,
    graph_ring: Ring,
    xy_ring: Ring,
    x_ring: Ring,
    ideal: Vec<Polynomial>,
    ideal_basis: GroebnerBasis,
    /// Action polynomials in `K[z, x]`.
    action: Vec<Polynomial>,
    linear: bool,
    linear_reductive: bool,
}

fn y_name(x: &str) -> String {
    match x.strip_prefix('x') {
        Some(rest) if !rest.is_empty() => format!("y{rest}"),
        _ => format!("y_{x}"),
    }
}

#[derive(Debug, Clone)]
pub struct DerksenIdealResult {
    /// Ring `K[y, x]`.
    pub ring: Ring,
    pub generators: Vec<Polynomial>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl AlgebraicGroupSpec {
    pub fn new(
        field: &Field,
        group_vars: Vec<String>,
        variables: Vec<String>,
        ideal: &[String],
        action: &ActionInput,
        linear_reductive: bool,
    ) -> Result<Self> {
        let n = variables.len();
        let r = group_vars.len();
        let z_ring = Ring::new(field.clone(), group_vars.clone())?;
        let zx_ring = z_ring.extended(&variables)?;
        let bases: Vec<String> = variables.iter().map(|x| y_name(x)).collect();
        let ys = zx_ring.fresh_names(&bases);
        let mut graph_names = group_vars.clone();
        graph_names.extend(ys.iter().cloned());
        graph_names.extend(variables.iter().cloned());
        let graph_ring = Ring::new(field.clone(), graph_names)?;
        let mut xy_names = ys.clone();
        xy_names.extend(variables.iter().cloned());
        let xy_ring = Ring::new(field.clone(), xy_names)?;
        let x_ring = Ring::new(field.clone(), variables)?;

        let ideal = ideal.iter().map(|g| z_ring.parse(g)).collect::<Result<Vec<_>>>()?;
        let ideal_basis = groebner::reduced_basis(&z_ring, &ideal, MonomialOrder::GrevLex)?;
        if ideal_basis.is_unit_ideal() {
            return Err(Error::InvalidSpec("the group ideal contains 1".into()));
        }
        let (action, linear) = match action {
            ActionInput::Matrix(rows) => {
                if rows.len() != n || rows.iter().any(|row| row.len() != n) {
                    return Err(Error::InvalidSpec(format!("action matrix must be {n}x{n}")));
                }
                let zx_map: Vec<usize> = (0..r).collect();
                let mut fs = Vec::with_capacity(n);
                for row in rows {
                    let mut f = zx_ring.zero();
                    for (j, entry) in row.iter().enumerate() {
                        let a = z_ring.parse(entry)?.rename_into(&zx_ring, &zx_map);
                        f += &(&a * &zx_ring.var(r + j));
                    }
                    fs.push(f);
                }
                (fs, true)
            }
            ActionInput::Polynomials(texts) => {
                if texts.len() != n {
                    return Err(Error::InvalidSpec(format!("expected {n} action polynomials")));
                }
                let fs = texts.iter().map(|t| zx_ring.parse(t)).collect::<Result<Vec<_>>>()?;
                let linear = fs.iter().all(|f| f.terms().all(|(m, _)| m.exponents()[r..].iter().sum::<u32>() == 1));
                (fs, linear)
            }
        };
        Ok(AlgebraicGroupSpec {
            z_ring,
            zx_ring,
            graph_ring,
            xy_ring,
            x_ring,
            ideal,
            ideal_basis,
            action,
            linear,
            linear_reductive,
        })
    }

    /// A finite matrix group as the variety of its elements: group coordinates
    /// are idempotents `z_sigma` summing to 1 and `f = sum_sigma z_sigma sigma x`.
    pub fn from_finite_group(group: &crate::group::FiniteMatrixGroup, variables: Vec<String>) -> Result<Self> {
        let k = group.order();
        let zs: Vec<String> = (1..=k).map(|i| format!("z{i}")).collect();
        let mut ideal: Vec<String> = zs.iter().map(|z| format!("{z}^2 - {z}")).collect();
        ideal.push(format!("{} - 1", zs.join(" + ")));
        for i in 0..k {
            for j in i + 1..k {
                ideal.push(format!("{}*{}", zs[i], zs[j]));
            }
        }
        let n = group.dimension();
        let rows: Vec<Vec<String>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let terms: Vec<String> = group
                            .elements()
                            .iter()
                            .zip(&zs)
                            .filter(|(m, _)| !m.get(i, j).is_zero())
                            .map(|(m, z)| format!("({})*{z}", m.get(i, j)))
                            .collect();
                        if terms.is_empty() {
                            "0".to_string()
                        } else {
                            terms.join(" + ")
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(group.field(), zs, variables, &ideal, &ActionInput::Matrix(rows), true)
    }

    pub fn field(&self) -> &Field {
        self.z_ring.field()
    }

    pub fn group_ring(&self) -> &Ring {
        &self.z_ring
    }

    /// `K[z, y, x]`.
    pub fn graph_ring(&self) -> &Ring {
        &self.graph_ring
    }

    /// `K[y, x]`.
    pub fn xy_ring(&self) -> &Ring {
        &self.xy_ring
    }

    /// `K[x]`.
    pub fn x_ring(&self) -> &Ring {
        &self.x_ring
    }

    pub fn action(&self) -> &[Polynomial] {
        &self.action
    }

    pub fn ideal(&self) -> &[Polynomial] {
        &self.ideal
    }

    pub fn is_linear(&self) -> bool {
        self.linear
    }

    pub fn linear_reductive(&self) -> bool {
        self.linear_reductive
    }

    fn r(&self) -> usize {
        self.z_ring.nvars()
    }

    fn n(&self) -> usize {
        self.x_ring.nvars()
    }

    /// `(g_1, ..., g_l, f_1 - y_1, ..., f_n - y_n)` in `K[z, y, x]`.
    pub fn build_d_hat(&self) -> Vec<Polynomial> {
        let (r, n) = (self.r(), self.n());
        let z_map: Vec<usize> = (0..r).collect();
        // zx ring: z then x; graph ring: z, y, x
        let zx_map: Vec<usize> = (0..r).chain(r + n..r + 2 * n).collect();
        let mut out: Vec<Polynomial> = self.ideal.iter().map(|g| g.rename_into(&self.graph_ring, &z_map)).collect();
        for (i, f) in self.action.iter().enumerate() {
            out.push(&f.rename_into(&self.graph_ring, &zx_map) - &self.graph_ring.var(r + i));
        }
        out
    }

    /// `K[y, x] ∩ D_hat`, reduced under grevlex with `y > x`.
    pub fn derksen_ideal(&self) -> Result<DerksenIdealResult> {
        let (r, n) = (self.r(), self.n());
        let eliminate: Vec<usize> = (0..r).collect();
        let gens = groebner::elimination_ideal(&self.graph_ring, &self.build_d_hat(), &eliminate)?;
        let back: Vec<usize> = (0..r + 2 * n).map(|i| i.saturating_sub(r)).collect();
        let generators = gens.iter().map(|g| g.rename_into(&self.xy_ring, &back)).collect();
        Ok(DerksenIdealResult { ring: self.xy_ring.clone(), generators, order: MonomialOrder::GrevLex, reduced: true })
    }

    /// Homogeneous components of the Derksen ideal generators at `y = 0`:
    /// generators of the Hilbert ideal for linearly reductive groups.
    pub fn hilbert_ideal_generators(&self, derksen: &DerksenIdealResult) -> Vec<Polynomial> {
        let n = self.n();
        let mut zero_y: Vec<Polynomial> = vec![self.x_ring.zero(); n];
        zero_y.extend((0..n).map(|i| self.x_ring.var(i)));
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in &derksen.generators {
            for part in g.homogeneous_components() {
                let h = part.substitute(&zero_y).expect("same field");
                if !h.is_constant() && seen.insert(h.monic(&MonomialOrder::GrevLex)) {
                    out.push(h);
                }
            }
        }
        out
    }

    /// Derksen's algorithm: a (usually not minimal) generating set of the
    /// invariant ring from bases of the invariants in the degrees of the
    /// Hilbert ideal generators.
    pub fn derksen_generators(&self) -> Result<GeneratingSetResult> {
        if !self.linear_reductive {
            return Err(Error::NotDeclaredReductive);
        }
        let derksen = self.derksen_ideal()?;
        let hilbert = self.hilbert_ideal_generators(&derksen);
        let degrees: BTreeSet<u32> = hilbert.iter().filter_map(|h| h.total_degree()).collect();
        let mut generators = Vec::new();
        for d in degrees {
            generators.extend(self.algebraic_invariant_basis(d)?);
        }
        let degrees = generators.iter().map(|g| g.total_degree().unwrap_or(0)).collect();
        Ok(GeneratingSetResult { generators, degrees, termination_degree: None, minimal: false })
    }

    /// Basis of the homogeneous invariants of degree `d`: a generic form `f`
    /// is invariant iff every `z`-coefficient of `f(sigma x) - f(x)` reduces
    /// to 0 modulo the group ideal.
    pub fn algebraic_invariant_basis(&self, d: u32) -> Result<Vec<Polynomial>> {
        let (r, n) = (self.r(), self.n());
        let mut monos = self.x_ring.monomials_of_degree(d, &MonomialOrder::GrevLex);
        monos.reverse();
        let x_in_zx: Vec<usize> = (r..r + n).collect();
        let zx = &self.zx_ring;
        let mut images: Vec<Polynomial> = (0..r).map(|i| zx.var(i)).collect();
        images.extend(self.action.iter().cloned());
        // rows keyed by (x-monomial, z-monomial)
        let mut rows: Vec<(Monomial, Monomial)> = Vec::new();
        let mut columns: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(monos.len());
        for m in &monos {
            let f = self.x_ring.monomial(m.clone()).rename_into(zx, &x_in_zx);
            let diff = &f.substitute(&images)? - &f;
            let mut column = Vec::new();
            for (xm, zc) in split_by_x(&diff, r, &self.z_ring) {
                let residue = self.ideal_basis.normal_form(&zc)?;
                for (zm, c) in residue.terms() {
                    let key = (xm.clone(), zm.clone());
                    let row = match rows.iter().position(|k| *k == key) {
                        Some(i) => i,
                        None => {
                            rows.push(key);
                            rows.len() - 1
                        }
                    };
                    column.push((row, c.clone()));
                }
            }
            columns.push(column);
        }
        let mut system = Matrix::zeros(self.field(), rows.len(), monos.len());
        for (j, column) in columns.into_iter().enumerate() {
            for (i, c) in column {
                system.set(i, j, c);
            }
        }
        Ok(system
            .nullspace()
            .into_iter()
            .map(|v| Polynomial::from_terms(&self.x_ring, monos.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero())))
            .collect())
    }

    /// Whether `f` in `K[x]` is invariant: `f(sigma x) - f(x)` lies in the
    /// group ideal (coefficientwise in `x`).
    pub fn is_invariant(&self, f: &Polynomial) -> Result<bool> {
        let (r, n) = (self.r(), self.n());
        let x_in_zx: Vec<usize> = (r..r + n).collect();
        let zx = &self.zx_ring;
        let mut images: Vec<Polynomial> = (0..r).map(|i| zx.var(i)).collect();
        images.extend(self.action.iter().cloned());
        let g = f.rename_into(zx, &x_in_zx);
        let diff = &g.substitute(&images)? - &g;
        for (_, zc) in split_by_x(&diff, r, &self.z_ring) {
            if !self.ideal_basis.contains(&zc)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Generators of the invariant field `K(x)^G`: the nonconstant
    /// coefficients of the reduced Groebner basis of the Derksen ideal over
    /// `L = K(x)`, each scaled so its numerator has leading coefficient 1.
    pub fn invariant_field_generators(&self) -> Result<Vec<RationalFunction>> {
        let (r, n) = (self.r(), self.n());
        let big_l = Field::rational_functions(self.x_ring.clone());
        let mut names = self.z_ring.names().to_vec();
        names.extend(self.xy_ring.names()[..n].iter().cloned());
        let ring = Ring::new(big_l.clone(), names)?;
        let z_map: Vec<usize> = (0..r).collect();
        let lift = |p: &Polynomial| -> Polynomial {
            // K[z, x] into L[z, y]; x-parts become coefficients.
            let mut out = ring.zero();
            for (m, c) in p.terms() {
                let e = m.exponents();
                let mut zexp = vec![0; r + n];
                zexp[..r].copy_from_slice(&e[..r]);
                let xmono = e[r..].to_vec();
                let coeff = RationalFunction::from_polynomial(self.x_ring.term(Monomial::new(xmono), c.clone()));
                out += &ring.term(Monomial::new(zexp), Scalar::Function(coeff));
            }
            out
        };
        let mut gens: Vec<Polynomial> =
            self.ideal.iter().map(|g| lift(&g.rename_into(&self.zx_ring, &z_map))).collect();
        for (i, f) in self.action.iter().enumerate() {
            gens.push(&lift(f) - &ring.var(r + i));
        }
        let eliminate: Vec<usize> = (0..r).collect();
        let basis = groebner::elimination_ideal(&ring, &gens, &eliminate)?;
        let mut seen: HashSet<RationalFunction> = HashSet::new();
        let mut out = Vec::new();
        for g in &basis {
            for m in
                g.sorted_terms(&MonomialOrder::GrevLex).into_iter().rev().map(|(m, _)| m.clone()).collect::<Vec<_>>()
            {
                let Scalar::Function(c) = g.coefficient(&m) else { unreachable!("coefficients lie in L") };
                if c.is_constant() {
                    continue;
                }
                let c = normalize_generator(&c);
                if seen.insert(c.clone()) {
                    out.push(c);
                }
            }
        }
        Ok(out)
    }

    /// `K[x, y] ∩ (D(x, u), D(y, u))` with `u` a block of fresh variables,
    /// in `K[y, x]`: pairs of points not separated by invariants.
    pub fn separating_variety(&self) -> Result<Vec<Polynomial>> {
        let n = self.n();
        let derksen = self.derksen_ideal()?;
        let bases: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
        let us = self.xy_ring.fresh_names(&bases);
        let mut names = us.clone();
        names.extend(self.xy_ring.names().iter().cloned());
        let ring = Ring::new(self.field().clone(), names)?;
        // derksen ring [y, x]; target [u, y, x]
        let as_xu: Vec<usize> = (0..n).chain(2 * n..3 * n).collect();
        let as_yu: Vec<usize> = (0..n).chain(n..2 * n).collect();
        let mut gens = Vec::new();
        for g in &derksen.generators {
            gens.push(g.rename_into(&ring, &as_xu));
            gens.push(g.rename_into(&ring, &as_yu));
        }
        let eliminate: Vec<usize> = (0..n).collect();
        let out = groebner::elimination_ideal(&ring, &gens, &eliminate)?;
        let back: Vec<usize> = (0..3 * n).map(|i| i.saturating_sub(n)).collect();
        Ok(out.iter().map(|g| g.rename_into(&self.xy_ring, &back)).collect())
    }

    /// `f(x) - f(y)` in `K[y, x]`.
    pub fn difference(&self, f: &Polynomial) -> Polynomial {
        let n = self.n();
        let to_x: Vec<usize> = (n..2 * n).collect();
        let to_y: Vec<usize> = (0..n).collect();
        &f.rename_into(&self.xy_ring, &to_x) - &f.rename_into(&self.xy_ring, &to_y)
    }

    /// Homogeneous invariants of degrees `1, 2, ...` until their differences
    /// cut out the separating variety (up to radical).
    pub fn separating_subalgebra(&self, variety: &[Polynomial], max_degree: u32) -> Result<Vec<Polynomial>> {
        let mut invariants: Vec<Polynomial> = Vec::new();
        for d in 1..=max_degree {
            invariants.extend(self.algebraic_invariant_basis(d)?);
            let diffs: Vec<Polynomial> = invariants.iter().map(|f| self.difference(f)).collect();
            let mut done = true;
            for g in variety {
                if !groebner::radical_membership(&self.xy_ring, g, &diffs)? {
                    done = false;
                    break;
                }
            }
            if done {
                debug_assert!(diffs
                    .iter()
                    .all(|f| groebner::radical_membership(&self.xy_ring, f, variety).unwrap_or(false)));
                return Ok(invariants);
            }
        }
        Err(Error::MaxDegreeExceeded { max_degree, found: invariants.len() })
    }
}

/// Splits a polynomial in `K[z, x]` (z = first `r` variables) into its
/// `z`-coefficients, keyed by the `x`-monomial.
fn split_by_x(p: &Polynomial, r: usize, z_ring: &Ring) -> Vec<(Monomial, Polynomial)> {
    let mut parts: std::collections::BTreeMap<Monomial, Polynomial> = std::collections::BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.exponents();
        let xm = Monomial::new(e[r..].to_vec());
        let zm = Monomial::new(e[..r].to_vec());
        *parts.entry(xm).or_insert_with(|| z_ring.zero()) += &z_ring.term(zm, c.clone());
    }
    parts.into_iter().collect()
}

fn normalize_generator(c: &RationalFunction) -> RationalFunction {
    let (_, lc) = c.numerator().leading_term(&MonomialOrder::GrevLex).expect("nonzero");
    let ring = c.ring();
    c.mul(&RationalFunction::constant(ring, lc.inv().expect("nonzero")))
}
