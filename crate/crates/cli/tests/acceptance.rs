//! One line per acceptance criterion. Every check is exact.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{cases, fixture, run_json};
use invar_core::algebraic::AlgebraicGroupSpec;
use invar_core::groebner::{self, subalgebra_membership};
use invar_core::group::{FiniteMatrixGroup, DEFAULT_CAP};
use invar_core::input::{GroupSpecFile, LoadedGroup};
use invar_core::invariants::{
    dade_primary_invariants, degree_bound_report, invariant_basis, is_hsop, king_generators, noether_separating_set,
    reduce_separating_set, reynolds_image_outside, verify_separation_samples,
};
use invar_core::{MonomialOrder, Polynomial, Ring};

const GREVLEX: MonomialOrder = MonomialOrder::GrevLex;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn finite(name: &str) -> (FiniteMatrixGroup, Ring) {
    match GroupSpecFile::read(&fixture(name)).unwrap().build(DEFAULT_CAP).unwrap() {
        LoadedGroup::Finite { group, ring } => (group, ring),
        _ => panic!("{name} is not finite"),
    }
}

fn algebraic(name: &str) -> AlgebraicGroupSpec {
    match GroupSpecFile::read(&fixture(name)).unwrap().build(DEFAULT_CAP).unwrap() {
        LoadedGroup::Algebraic(spec) => spec,
        _ => panic!("{name} is not algebraic"),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn parse(ring: &Ring, ps: &[&str]) -> Vec<Polynomial> {
    ps.iter().map(|p| ring.parse(p).unwrap()).collect()
}

/// Each side lies in the ideal generated by the other.
fn same_ideal(ring: &Ring, a: &[Polynomial], b: &[Polynomial]) -> bool {
    let ga = groebner::buchberger(ring, a, GREVLEX, None).unwrap();
    let gb = groebner::buchberger(ring, b, GREVLEX, None).unwrap();
    a.iter().all(|p| gb.contains(p).unwrap()) && b.iter().all(|p| ga.contains(p).unwrap())
}

fn c1_d8_golden() -> Check {
    let (g, ring) = finite("d8");
    let res = king_generators(&g, &ring, GREVLEX).map_err(|e| e.to_string())?;
    ensure(res.degrees == [2, 8], || format!("degrees {:?}", res.degrees))?;
    let f8 = ring.parse("1/32*(9*x^8 + 28*x^6*y^2 + 70*x^4*y^4 + 28*x^2*y^6 + 9*y^8)").unwrap();
    ensure(res.generators[1] == f8, || format!("degree 8 generator {}", res.generators[1]))?;
    ensure(res.termination_degree == Some(9), || format!("termination {:?}", res.termination_degree))
}

fn c2_hilbert_monomials() -> Check {
    for name in ["d8", "c2-swap", "s3-natural"] {
        let (g, ring) = finite(name);
        let res = king_generators(&g, &ring, GREVLEX).unwrap();
        let basis = groebner::buchberger(&ring, &res.generators, GREVLEX, None).unwrap();
        for m in ring.monomials_of_degree(g.order() as u32, &GREVLEX) {
            let p = ring.monomial(m);
            ensure(basis.contains(&p).unwrap(), || format!("{name}: {p} not in the Hilbert ideal"))?;
        }
    }
    Ok(())
}

fn c3_cyclic_scalar() -> Check {
    for n in [3u32, 4, 5] {
        let (g, ring) = finite(&format!("c{n}-scalar"));
        let res = king_generators(&g, &ring, GREVLEX).unwrap();
        ensure(res.generators.len() == n as usize + 1 && res.degrees.iter().all(|&d| d == n), || {
            format!("C{n}: degrees {:?}", res.degrees)
        })?;
    }
    Ok(())
}

fn c4_oracle_equivalence() -> Check {
    for name in ["d8", "c2-swap", "s3-natural", "c3-scalar", "c4-scalar", "c5-scalar", "pm-identity", "trivial"] {
        let (g, ring) = finite(name);
        let bound = g.order() as u32;
        let gens = king_generators(&g, &ring, GREVLEX).unwrap().generators;
        if let Some(p) = reynolds_image_outside(&g, &ring, &gens, bound).unwrap() {
            return Err(format!("{name}: {p} not generated"));
        }
        for i in 0..gens.len() {
            let mut fewer = gens.clone();
            fewer.remove(i);
            let outside = reynolds_image_outside(&g, &ring, &fewer, bound).unwrap();
            ensure(outside.is_some(), || format!("{name}: generator {} is redundant", i + 1))?;
        }
    }
    Ok(())
}

fn c5_separating() -> Check {
    for name in ["c2-swap", "s3-natural"] {
        let (g, ring) = finite(name);
        let set = noether_separating_set(&g, &ring).unwrap();
        let max = set.invariants.iter().filter_map(|p| p.total_degree()).max().unwrap_or(0);
        ensure(max as usize <= g.order(), || format!("{name}: degree {max} exceeds |G|"))?;
        let report = verify_separation_samples(&set.invariants, &g, 100, 10, 0).unwrap();
        ensure(report.passed() && report.same_orbit_pairs == 100 && report.distinct_orbit_pairs == 100, || {
            format!("{name}: {:?}", report.failures)
        })?;
    }
    for n in [3, 4, 5] {
        let name = format!("c{n}-scalar");
        let (g, ring) = finite(&name);
        let noether = noether_separating_set(&g, &ring).unwrap();
        let reduced = reduce_separating_set(&ring, &noether.invariants).unwrap();
        ensure(reduced.invariants.len() <= 5, || format!("{name}: {} invariants", reduced.invariants.len()))?;
        let report = verify_separation_samples(&reduced.invariants, &g, 100, 10, 0).unwrap();
        ensure(report.passed(), || format!("{name}: {:?}", report.failures))?;
    }
    Ok(())
}

fn c6_molien() -> Check {
    for name in ["d8", "trivial", "c2-swap", "s3-natural"] {
        let (g, ring) = finite(name);
        let series = g.molien_series(12).unwrap();
        for e in 0..=12u32 {
            let dim = invariant_basis(&g, &ring, e).unwrap().len() as i64;
            let c = series.coefficient(e as usize);
            ensure(*c == g.field().from_i64(dim), || format!("{name}: degree {e}: series {c}, dimension {dim}"))?;
        }
    }
    let (g, _) = finite("d8");
    let series = g.molien_series(8).unwrap();
    for (e, want) in [(0, 1), (2, 1), (4, 1), (6, 1), (8, 2)] {
        ensure(*series.coefficient(e) == g.field().from_i64(want), || format!("D8 coefficient {e}"))?;
    }
    Ok(())
}

fn c7_derksen_goldens() -> Check {
    let g = algebraic("gm");
    let d = g.derksen_ideal().unwrap();
    ensure(d.generators == parse(g.xy_ring(), &["y1*y2 - x1*x2"]), || format!("Derksen basis {:?}", d.generators))?;
    let field: Vec<String> = g.invariant_field_generators().unwrap().iter().map(|c| c.to_string()).collect();
    ensure(field == ["x1*x2"], || format!("field generators {field:?}"))?;
    let gens = g.derksen_generators().unwrap().generators;
    ensure(gens == parse(g.x_ring(), &["x1*x2"]), || format!("invariants {gens:?}"))
}

fn c8_variety_consistency() -> Check {
    let v = algebraic("c2-variety");
    let d = v.derksen_ideal().unwrap();
    let hilbert = v.hilbert_ideal_generators(&d);
    let (g, ring) = finite("c2-swap");
    let king = king_generators(&g, &ring, GREVLEX).unwrap().generators;
    // both rings are Q[x1, x2]; move the King output across by name
    let king: Vec<Polynomial> = king.iter().map(|p| v.x_ring().parse(&p.to_string()).unwrap()).collect();
    ensure(same_ideal(v.x_ring(), &hilbert, &king), || format!("Hilbert ideal {hilbert:?} vs King {king:?}"))
}

fn c9_sl2() -> Check {
    let start = Instant::now();
    let g = algebraic("sl2-binary-quadratic");
    let ring = g.x_ring();
    ensure(g.algebraic_invariant_basis(1).unwrap().is_empty(), || "degree 1 invariants".into())?;
    ensure(g.algebraic_invariant_basis(2).unwrap().len() == 1, || "degree 2 dimension".into())?;
    let disc = ring.parse("b^2 - 4*a*c").unwrap();
    let gens = g.derksen_generators().unwrap().generators;
    for p in &gens {
        ensure(subalgebra_membership(ring, p, std::slice::from_ref(&disc)).unwrap().is_some(), || {
            format!("{p} not in Q[disc]")
        })?;
    }
    ensure(subalgebra_membership(ring, &disc, &gens).unwrap().is_some(), || "disc not generated".into())?;
    ensure(start.elapsed() < Duration::from_secs(60), || format!("took {:?}", start.elapsed()))
}

fn c10_dade_bounds() -> Check {
    for name in ["s3-natural", "d8"] {
        let (g, ring) = finite(name);
        let res = dade_primary_invariants(&g, &ring, 0).unwrap();
        ensure(res.invariants.len() == ring.nvars() && is_hsop(&ring, &res.invariants).unwrap(), || {
            format!("{name}: not an hsop")
        })?;
        for f in &res.invariants {
            ensure(g.is_invariant(f), || format!("{name}: {f} not invariant"))?;
        }
    }
    let b = degree_bound_report(2, 16, &[2, 8], false);
    ensure((b.symonds, b.coarse, b.noether) == (8, 30, 16), || format!("{b:?}"))
}

fn c11_classification() -> Check {
    let (d8, _) = finite("d8");
    ensure(d8.is_reflection_group(), || "D8 not reflection-generated".into())?;
    let (pm, _) = finite("pm-identity");
    ensure(!pm.is_reflection_group() && pm.is_bireflection_group(), || "{+-I} misclassified".into())?;
    for name in ["d8", "c2-swap", "s3-natural", "c3-scalar", "c4-scalar", "c5-scalar", "pm-identity", "trivial"] {
        let (g, _) = finite(name);
        ensure(g.cm_necessary_condition(), || format!("{name}: CM condition false"))?;
    }
    Ok(())
}

fn c12_determinism() -> Check {
    for (name, args) in cases() {
        let first = run_json(&args, name);
        let second = run_json(&args, name);
        ensure(first == second, || format!("{name} {args:?} differs between runs"))?;
        ensure(!first.1.is_empty(), || format!("{name} {args:?} printed nothing"))?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("D8 golden run", c1_d8_golden),
        ("Hilbert ideal contains all monomials of degree |G|", c2_hilbert_monomials),
        ("Cn scalar: n+1 generators of degree n", c3_cyclic_scalar),
        ("Reynolds oracle equivalence and minimality", c4_oracle_equivalence),
        ("separating sets pass sampled checks", c5_separating),
        ("Molien series matches invariant dimensions", c6_molien),
        ("Derksen goldens for the torus", c7_derksen_goldens),
        ("finite group as a variety matches King", c8_variety_consistency),
        ("SL2 binary quadratics give the discriminant", c9_sl2),
        ("Dade primary invariants and degree bounds", c10_dade_bounds),
        ("reflection and bireflection classification", c11_classification),
        ("byte-identical JSON across runs", c12_determinism),
    ];
    // written to the raw handle so the lines show without --nocapture
    let mut out = std::io::stderr().lock();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => writeln!(out, "criterion {:2}: PASS  {name} ({secs:.2}s)", i + 1).unwrap(),
            Err(e) => {
                failed += 1;
                writeln!(out, "criterion {:2}: FAIL  {name} ({secs:.2}s): {e}", i + 1).unwrap();
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
