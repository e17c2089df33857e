//! Shared inputs for the criterion benchmarks.

use invar_core::algebraic::{ActionInput, AlgebraicGroupSpec};
use invar_core::group::{FiniteMatrixGroup, DEFAULT_CAP};
use invar_core::{Field, FieldSpec, Matrix, Polynomial, Ring};

/// Generators of the cyclic-`n` ideal over the rationals.
pub fn cyclic(n: usize) -> Vec<Polynomial> {
    let ring = Ring::with_indexed(Field::rationals(), "x", n).expect("valid names");
    let vars: Vec<Polynomial> = (0..n).map(|i| ring.var(i)).collect();
    let mut gens = Vec::with_capacity(n);
    for len in 1..n {
        let mut p = ring.zero();
        for start in 0..n {
            let mut t = ring.one();
            for k in 0..len {
                t = &t * &vars[(start + k) % n];
            }
            p += &t;
        }
        gens.push(p);
    }
    let all = vars.iter().fold(ring.one(), |acc, v| &acc * v);
    gens.push(&all - &ring.one());
    gens
}

/// The dihedral group of order 16 over Q(sqrt 2), with its ring Q(sqrt 2)[x, y].
pub fn d8() -> (FiniteMatrixGroup, Ring) {
    let field = Field::from_spec(&FieldSpec::SimpleExtension { minimal_poly: "w^2 - 2".into(), generator: "w".into() })
        .expect("irreducible");
    let gens = [
        Matrix::parse(&field, &[vec!["1", "0"], vec!["0", "-1"]]),
        Matrix::parse(&field, &[vec!["w/2", "-w/2"], vec!["w/2", "w/2"]]),
    ]
    .into_iter()
    .collect::<invar_core::Result<Vec<_>>>()
    .expect("valid matrices");
    let group = FiniteMatrixGroup::close(&field, 2, gens, DEFAULT_CAP).expect("finite");
    let ring = Ring::new(field, vec!["x".into(), "y".into()]).expect("valid names");
    (group, ring)
}

/// The torus acting with weights 1 and -1 on the plane.
pub fn torus() -> AlgebraicGroupSpec {
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    AlgebraicGroupSpec::new(
        &Field::rationals(),
        s(&["z1", "z2"]),
        s(&["x1", "x2"]),
        &s(&["z1*z2 - 1"]),
        &ActionInput::Matrix(vec![s(&["z1", "0"]), s(&["0", "z2"])]),
        true,
    )
    .expect("valid spec")
}
