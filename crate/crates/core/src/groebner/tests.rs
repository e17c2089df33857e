use rand::{Rng, SeedableRng};
use rand_xorshift::XorShiftRng;

use super::*;
use crate::field::Field;
use crate::poly::Monomial;

fn ring(names: &[&str]) -> Ring {
    Ring::new(Field::rationals(), names.iter().map(|s| s.to_string()).collect()).unwrap()
}

fn polys(r: &Ring, texts: &[&str]) -> Vec<Polynomial> {
    texts.iter().map(|t| r.parse(t).unwrap()).collect()
}

fn random_poly(r: &Ring, rng: &mut XorShiftRng, max_exp: u32) -> Polynomial {
    let mut p = r.zero();
    for _ in 0..rng.random_range(1..4) {
        let e: Vec<u32> = (0..r.nvars()).map(|_| rng.random_range(0..=max_exp)).collect();
        p.add_term(Monomial::new(e), &r.field().from_i64(rng.random_range(-4..=4)));
    }
    p
}

fn s_pairs_reduce_to_zero(b: &GroebnerBasis) -> bool {
    let order = *b.order();
    let g = b.generators();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let (mi, ci) = g[i].leading_term(&order).unwrap();
            let (mj, cj) = g[j].leading_term(&order).unwrap();
            let l = mi.lcm(&mj);
            let s = &g[i].mul_monomial(&l.div(&mi), &ci.inv().unwrap())
                - &g[j].mul_monomial(&l.div(&mj), &cj.inv().unwrap());
            if !b.normal_form(&s).unwrap().is_zero() {
                return false;
            }
        }
    }
    true
}

#[test]
fn simple_lex_basis() {
    let r = ring(&["x", "y"]);
    let b = buchberger(&r, &polys(&r, &["x^2 - y", "y"]), MonomialOrder::Lex, None).unwrap();
    let mut lms: Vec<String> = b.reduce().unwrap().leading_monomials().iter().map(|m| m.format(r.names())).collect();
    lms.sort();
    assert_eq!(lms, vec!["x^2", "y"]);
    assert!(s_pairs_reduce_to_zero(&b));
}

#[test]
fn gm_elimination() {
    let r = ring(&["z1", "z2", "y1", "y2", "x1", "x2"]);
    let gens = polys(&r, &["z1*z2 - 1", "z1*x1 - y1", "z2*x2 - y2"]);
    let elim = elimination_ideal(&r, &gens, &[0, 1]).unwrap();
    assert_eq!(elim, polys(&r, &["y1*y2 - x1*x2"]));
    let order = MonomialOrder::BlockElimination { front: 2, inner: BaseOrder::GrevLex };
    let b = reduced_basis(&r, &gens, order).unwrap();
    assert!(b.generators().contains(&r.parse("y1*y2 - x1*x2").unwrap()));
}

#[test]
fn single_generator_is_made_monic() {
    let r = ring(&["x", "y"]);
    let b = buchberger(&r, &polys(&r, &["3*x*y - 6"]), MonomialOrder::GrevLex, None).unwrap();
    assert_eq!(b.generators(), &polys(&r, &["x*y - 2"])[..]);
    let empty = buchberger(&r, &[r.zero()], MonomialOrder::GrevLex, None).unwrap();
    assert!(empty.generators().is_empty());
}

#[test]
fn normal_forms() {
    let r = ring(&["x", "y"]);
    let b = buchberger(&r, &polys(&r, &["x^2 + y^2"]), MonomialOrder::GrevLex, None).unwrap();
    assert!(b.normal_form(&r.parse("(x^2 + y^2)*(x^2 - y^2)").unwrap()).unwrap().is_zero());
    assert_eq!(b.normal_form(&r.one()).unwrap(), r.one());
    assert_eq!(b.normal_form(&r.parse("x^2").unwrap()).unwrap(), r.parse("-y^2").unwrap());
}

#[test]
fn truncation_is_enforced() {
    let r = ring(&["x", "y"]);
    let b = buchberger(&r, &polys(&r, &["x^2 + y^2"]), MonomialOrder::GrevLex, Some(3)).unwrap();
    assert_eq!(b.truncation(), None, "nothing left in the queue means the basis is complete");
    let b = buchberger(&r, &polys(&r, &["x^2 - y", "x*y - 1"]), MonomialOrder::GrevLex, Some(2)).unwrap();
    assert_eq!(b.truncation(), Some(2));
    assert!(matches!(
        b.normal_form(&r.parse("x^3").unwrap()),
        Err(Error::TruncationInsufficient { truncation: 2, degree: 3 })
    ));
    assert_eq!(b.reduce().unwrap_err(), Error::TruncatedBasis);
    assert_eq!(b.dimension().unwrap_err(), Error::TruncatedBasis);
}

#[test]
fn reduction_examples() {
    let r = ring(&["x", "y"]);
    let b = buchberger(&r, &polys(&r, &["x^2", "x^2 + y"]), MonomialOrder::GrevLex, None).unwrap();
    assert_eq!(b.reduce().unwrap().generators(), &polys(&r, &["y", "x^2"])[..]);
    let once = b.reduce().unwrap();
    assert_eq!(once.reduce().unwrap().generators(), once.generators());
    let b = reduced_basis(&r, &polys(&r, &["2*x"]), MonomialOrder::Lex).unwrap();
    assert_eq!(b.generators(), &polys(&r, &["x"])[..]);
}

#[test]
fn elimination_examples() {
    let r = ring(&["z", "x", "y"]);
    assert_eq!(elimination_ideal(&r, &polys(&r, &["z - x", "z - y"]), &[0]).unwrap(), polys(&r, &["x - y"]));
    let free = polys(&r, &["x^2 - y", "x*y"]);
    let direct = reduced_basis(&r, &free, MonomialOrder::GrevLex).unwrap();
    assert_eq!(elimination_ideal(&r, &free, &[0]).unwrap(), direct.generators());
}

#[test]
fn dimensions() {
    let r = ring(&["x", "y"]);
    let dim = |t: &[&str]| reduced_basis(&r, &polys(&r, t), MonomialOrder::GrevLex).unwrap().dimension().unwrap();
    assert_eq!(dim(&["x", "y"]), IdealDimension::Dimension(0));
    assert_eq!(dim(&["x^2 - y"]), IdealDimension::Dimension(1));
    assert_eq!(dim(&["1"]), IdealDimension::Empty);
    assert_eq!(dim(&["0"]), IdealDimension::Dimension(2));
    let r3 = ring(&["x", "y", "z"]);
    let b = reduced_basis(&r3, &polys(&r3, &["x*y", "x*z"]), MonomialOrder::GrevLex).unwrap();
    assert_eq!(b.dimension().unwrap(), IdealDimension::Dimension(2));
}

#[test]
fn membership() {
    let r = ring(&["x", "y"]);
    let b = buchberger(&r, &polys(&r, &["x"]), MonomialOrder::GrevLex, None).unwrap();
    assert!(b.contains(&r.parse("x").unwrap()).unwrap());
    assert!(!b.contains(&r.one()).unwrap());
    assert!(b.contains(&r.parse("x^2").unwrap()).unwrap());

    let x2 = polys(&r, &["x^2"]);
    assert!(radical_membership(&r, &r.parse("x").unwrap(), &x2).unwrap());
    assert!(!radical_membership(&r, &r.parse("y").unwrap(), &x2).unwrap());
    assert!(radical_membership(&r, &r.zero(), &x2).unwrap());
}

#[test]
fn subalgebra_witnesses() {
    let r = ring(&["x", "y"]);
    let gens = polys(&r, &["x + y", "x*y"]);
    let oracle = SubalgebraOracle::new(&r, &gens).unwrap();
    let w = oracle.witness(&r.parse("x^2 + y^2").unwrap()).unwrap().unwrap();
    assert_eq!(w, oracle.tag_ring().parse("T1^2 - 2*T2").unwrap());
    assert_eq!(oracle.witness(&gens[1]).unwrap().unwrap(), oracle.tag_ring().parse("T2").unwrap());
    assert_eq!(subalgebra_membership(&r, &r.parse("x").unwrap(), &polys(&r, &["x^2"])).unwrap(), None);
    // tag names avoid clashes with ring variables
    let r2 = ring(&["T1", "x"]);
    let o2 = SubalgebraOracle::new(&r2, &polys(&r2, &["T1*x"])).unwrap();
    assert_eq!(o2.tag_ring().names(), &["T1_0".to_string()]);
}

#[test]
fn random_ideal_elements_reduce_to_zero() {
    let r = ring(&["x", "y", "z"]);
    let mut rng = XorShiftRng::seed_from_u64(7);
    for order in [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::GradedLex] {
        let gens = polys(&r, &["x^2 + y*z - 1", "x*y - z^2", "y^3 - x"]);
        let b = buchberger(&r, &gens, order, None).unwrap();
        assert!(s_pairs_reduce_to_zero(&b));
        for _ in 0..200 / 3 + 1 {
            let mut f = r.zero();
            for g in &gens {
                f += &(&random_poly(&r, &mut rng, 2) * g);
            }
            assert!(b.normal_form(&f).unwrap().is_zero());
            let h = random_poly(&r, &mut rng, 3);
            let nf = b.normal_form(&h).unwrap();
            assert_eq!(b.normal_form(&nf).unwrap(), nf);
            let lms = b.leading_monomials();
            assert!(nf.terms().all(|(m, _)| lms.iter().all(|l| !l.divides(m))));
            assert!(b.contains(&(&h - &nf)).unwrap());
        }
    }
}

#[test]
fn reduced_basis_is_permutation_invariant() {
    let r = ring(&["x", "y", "z"]);
    let mut gens = polys(&r, &["x^2 + y*z - 1", "x*y - z^2", "y^3 - x", "x*z + y"]);
    let first = reduced_basis(&r, &gens, MonomialOrder::GrevLex).unwrap();
    let mut rng = XorShiftRng::seed_from_u64(11);
    for _ in 0..5 {
        for i in (1..gens.len()).rev() {
            gens.swap(i, rng.random_range(0..=i));
        }
        let again = reduced_basis(&r, &gens, MonomialOrder::GrevLex).unwrap();
        assert_eq!(again.generators(), first.generators());
    }
}

#[test]
fn truncated_continuation_matches_full() {
    let r = ring(&["x", "y", "z"]);
    let gens = polys(&r, &["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"]);
    let full = reduced_basis(&r, &gens, MonomialOrder::GrevLex).unwrap();
    let mut engine = GroebnerEngine::new(&r, MonomialOrder::GrevLex);
    for g in &gens {
        engine.add_generator(g);
    }
    for d in 0..=10 {
        engine.complete_to(d);
        if engine.truncation().is_none() {
            break;
        }
        assert!(engine.truncation().unwrap() >= d);
    }
    let incremental = GroebnerBasis::from_engine(&engine).reduce().unwrap();
    assert_eq!(incremental.generators(), full.generators());
    let high = buchberger(&r, &gens, MonomialOrder::GrevLex, Some(20)).unwrap().reduce().unwrap();
    assert_eq!(high.generators(), full.generators());
}

#[test]
fn zero_dimensional_elimination_vanishes_on_points() {
    // V = {(a, a^2 - 1, a + 2) : a in {1, 2, 3}}
    let r = ring(&["x", "y", "z"]);
    let gens = polys(&r, &["(x - 1)*(x - 2)*(x - 3)", "y - x^2 + 1", "z - x - 2"]);
    let lex = reduced_basis(&r, &gens, MonomialOrder::Lex).unwrap();
    assert_eq!(lex.dimension().unwrap(), IdealDimension::Dimension(0));
    let elim = elimination_ideal(&r, &gens, &[0]).unwrap();
    assert!(!elim.is_empty());
    let f = r.field().clone();
    for a in 1..=3 {
        let point = [f.from_i64(a), f.from_i64(a * a - 1), f.from_i64(a + 2)];
        for g in &elim {
            assert!(g.evaluate(&point).unwrap().is_zero());
        }
    }
}
