use std::path::Path;

use invar_core::algebraic::AlgebraicGroupSpec;
use invar_core::groebner::{self, IdealDimension};
use invar_core::group::{classify_element, FiniteMatrixGroup};
use invar_core::input::{GroupSpecFile, LoadedGroup};
use invar_core::invariants::{self as inv, GeneratingSetResult};
use invar_core::{Error, Field, MonomialOrder, Polynomial, Ring};
use serde_json::{json, Value};

use crate::report::{Failure, Input, RunReport};
use crate::{Algorithm, Method, OrderArg};

type Outcome = Result<RunReport, Failure>;

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grevlex => MonomialOrder::GrevLex,
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Gradedlex => MonomialOrder::GradedLex,
        }
    }
}

struct Loaded {
    input: Input,
    group: LoadedGroup,
    warnings: Vec<String>,
}

fn load(command: &'static str, path: &Path, cap: usize) -> Result<Loaded, Failure> {
    let fail = |e| Failure::new(command, e);
    let mut input = Input::read(path)?;
    let file = GroupSpecFile::from_json(&input.text).map_err(fail)?;
    input.label = file.label().map(str::to_string);
    let group = file.build(cap).map_err(fail)?;
    let field = match &group {
        LoadedGroup::Finite { ring, .. } => ring.field().clone(),
        LoadedGroup::Algebraic(spec) => spec.field().clone(),
    };
    let mut warnings = field.warnings().to_vec();
    if let LoadedGroup::Algebraic(spec) = &group {
        if spec.linear_reductive() {
            warnings.push("linear_reductive is taken from the input and not checked".into());
        }
    }
    Ok(Loaded { input, group, warnings })
}

fn finite(command: &'static str, path: &Path, cap: usize) -> Result<(RunReport, FiniteMatrixGroup, Ring), Failure> {
    let l = load(command, path, cap)?;
    match l.group {
        LoadedGroup::Finite { group, ring } => {
            let mut r = RunReport::new(command, &l.input);
            r.warnings = l.warnings;
            Ok((r, group, ring))
        }
        LoadedGroup::Algebraic(_) => {
            Err(Failure::new(command, Error::InvalidSpec(format!("{command} needs a finite_matrix group"))))
        }
    }
}

fn algebraic(command: &'static str, path: &Path, cap: usize) -> Result<(RunReport, AlgebraicGroupSpec), Failure> {
    let l = load(command, path, cap)?;
    match l.group {
        LoadedGroup::Algebraic(spec) => {
            let mut r = RunReport::new(command, &l.input);
            r.warnings = l.warnings;
            Ok((r, spec))
        }
        LoadedGroup::Finite { .. } => {
            Err(Failure::new(command, Error::InvalidSpec(format!("{command} needs an algebraic group"))))
        }
    }
}

fn render(ps: &[Polynomial], order: &MonomialOrder) -> Vec<String> {
    ps.iter().map(|p| p.format_with(order)).collect()
}

fn degrees(ps: &[Polynomial]) -> Vec<u32> {
    ps.iter().map(|p| p.total_degree().unwrap_or(0)).collect()
}

fn list_lines(r: &mut RunReport, items: &[String]) {
    for (i, s) in items.iter().enumerate() {
        r.line(format!("  [{}] {s}", i + 1));
    }
}

fn generating_set_json(res: &GeneratingSetResult, order: &MonomialOrder) -> Value {
    json!({
        "generators": render(&res.generators, order),
        "degrees": res.degrees,
        "termination_degree": res.termination_degree,
        "minimal": res.minimal,
    })
}

pub fn generators(
    path: &Path,
    cap: usize,
    algorithm: Algorithm,
    order: OrderArg,
    monic: bool,
    verify: bool,
) -> Outcome {
    const CMD: &str = "generators";
    let order = MonomialOrder::from(order);
    let fail = |e| Failure::new(CMD, e);
    match algorithm {
        Algorithm::King => {
            let (mut r, group, ring) = finite(CMD, path, cap)?;
            let mut res = inv::king_generators(&group, &ring, order).map_err(fail)?;
            if monic {
                res = res.monic(&order);
            }
            let mut out = generating_set_json(&res, &order);
            out["algorithm"] = json!("king");
            out["order"] = json!(order.to_string());
            out["group_order"] = json!(group.order());
            r.line(format!("group order: {}", group.order()));
            r.line(format!("{} generators, degrees {:?}", res.generators.len(), res.degrees));
            if let Some(d) = res.termination_degree {
                r.line(format!("terminated at degree {d}"));
            }
            list_lines(&mut r, &render(&res.generators, &order));
            if verify {
                let v = inv::verify_noether_and_hilbert(&group, &ring, &res).map_err(fail)?;
                r.line(format!("verification: {}", if v.passed() { "passed" } else { "FAILED" }));
                out["verification"] = json!({ "passed": v.passed(), "details": v });
            }
            r.result = out;
            Ok(r)
        }
        Algorithm::Derksen => {
            let (mut r, spec) = algebraic(CMD, path, cap)?;
            let mut res = spec.derksen_generators().map_err(fail)?;
            if monic {
                res = res.monic(&order);
            }
            let mut out = generating_set_json(&res, &order);
            out["algorithm"] = json!("derksen");
            out["order"] = json!(order.to_string());
            r.line(format!("{} generators, degrees {:?}", res.generators.len(), res.degrees));
            list_lines(&mut r, &render(&res.generators, &order));
            if verify {
                let v = derksen_consistency(&spec, &res.generators).map_err(fail)?;
                let passed = v.values().all(|x| x.as_bool() == Some(true));
                r.line(format!("verification: {}", if passed { "passed" } else { "FAILED" }));
                out["verification"] = json!({ "passed": passed, "details": Value::Object(v) });
            }
            r.result = out;
            Ok(r)
        }
    }
}

/// Output is invariant and generates the same ideal as the y = 0
/// specialisation of the Derksen ideal.
fn derksen_consistency(
    spec: &AlgebraicGroupSpec,
    gens: &[Polynomial],
) -> invar_core::Result<serde_json::Map<String, Value>> {
    let ring = spec.x_ring();
    let d = spec.derksen_ideal()?;
    let hilbert = spec.hilbert_ideal_generators(&d);
    let order = MonomialOrder::GrevLex;
    let hb = groebner::buchberger(ring, &hilbert, order, None)?;
    let gb = groebner::buchberger(ring, gens, order, None)?;
    let mut forward = true;
    for g in gens {
        forward &= hb.contains(g)?;
    }
    let mut backward = true;
    for h in &hilbert {
        backward &= gb.contains(h)?;
    }
    let mut invariant = true;
    for g in gens {
        invariant &= spec.is_invariant(g)?;
    }
    let mut m = serde_json::Map::new();
    m.insert("invariant".into(), json!(invariant));
    m.insert("generators_in_hilbert_ideal".into(), json!(forward));
    m.insert("hilbert_ideal_in_generated_ideal".into(), json!(backward));
    Ok(m)
}

pub fn separating(path: &Path, cap: usize, method: Method, samples: usize, seed: u64, bound: i64) -> Outcome {
    const CMD: &str = "separating";
    let fail = |e| Failure::new(CMD, e);
    let (mut r, group, ring) = finite(CMD, path, cap)?;
    let noether = inv::noether_separating_set(&group, &ring).map_err(fail)?;
    let set = match method {
        Method::Noether => noether,
        Method::Reduce => inv::reduce_separating_set(&ring, &noether.invariants).map_err(fail)?,
    };
    let order = MonomialOrder::GrevLex;
    let degs = degrees(&set.invariants);
    let mut out = json!({
        "method": match method { Method::Noether => "noether", Method::Reduce => "reduce" },
        "group_order": group.order(),
        "size": set.invariants.len(),
        "invariants": render(&set.invariants, &order),
        "degrees": degs,
        "homogeneous": set.homogeneous,
        "provenance": set.provenance,
        "alphas": set.alphas,
    });
    r.line(format!("{} invariants, degrees {:?}", set.invariants.len(), degs));
    list_lines(&mut r, &render(&set.invariants, &order));
    if samples > 0 {
        r.seed = Some(seed);
        let v = inv::verify_separation_samples(&set.invariants, &group, samples, bound, seed).map_err(fail)?;
        r.line(format!(
            "sampled check ({} same-orbit, {} distinct-orbit pairs): {}",
            v.same_orbit_pairs,
            v.distinct_orbit_pairs,
            if v.passed() { "passed" } else { "FAILED" }
        ));
        out["verification"] = json!({ "passed": v.passed(), "details": v });
    }
    r.result = out;
    Ok(r)
}

pub fn molien(path: &Path, cap: usize, degree: usize) -> Outcome {
    const CMD: &str = "molien";
    let (mut r, group, _) = finite(CMD, path, cap)?;
    let s = group.molien_series(degree).map_err(|e| Failure::new(CMD, e))?;
    let coeffs: Vec<String> = s.coefficients().iter().map(|c| c.format()).collect();
    r.line(format!("coefficients of t^0..t^{degree}: {}", coeffs.join(", ")));
    r.result = json!({ "degree": degree, "coefficients": coeffs });
    Ok(r)
}

pub fn classify(path: &Path, cap: usize) -> Outcome {
    const CMD: &str = "classify";
    let (mut r, group, _) = finite(CMD, path, cap)?;
    let elements: Vec<Value> = group
        .elements()
        .iter()
        .map(|m| {
            let c = classify_element(m);
            let rows: Vec<Vec<String>> =
                m.to_rows().iter().map(|row| row.iter().map(|s| s.format()).collect()).collect();
            json!({ "matrix": rows, "order": group.element_order(m), "codimension": c.codimension, "kind": c.kind })
        })
        .collect();
    let count = |k: &str| elements.iter().filter(|e| e["kind"] == k).count();
    let refl = group.is_reflection_group();
    let birefl = group.is_bireflection_group();
    let cm = group.cm_necessary_condition();
    r.line(format!("group order: {}", group.order()));
    r.line(format!(
        "identity 1, reflections {}, bireflections {}, other {}",
        count("reflection"),
        count("bireflection"),
        count("other")
    ));
    r.line(format!("reflection-generated: {refl}"));
    r.line(format!("bireflection-generated: {birefl}"));
    r.line(format!("Cohen-Macaulay necessary condition: {cm}"));
    r.result = json!({
        "group_order": group.order(),
        "modular": group.is_modular(),
        "reflection_generated": refl,
        "bireflection_generated": birefl,
        "cm_necessary_condition": cm,
        "elements": elements,
    });
    Ok(r)
}

pub fn primary(path: &Path, cap: usize, seed: u64) -> Outcome {
    const CMD: &str = "primary";
    let fail = |e| Failure::new(CMD, e);
    let (mut r, group, ring) = finite(CMD, path, cap)?;
    r.seed = Some(seed);
    let res = inv::dade_primary_invariants(&group, &ring, seed).map_err(fail)?;
    let hsop = inv::is_hsop(&ring, &res.invariants).map_err(fail)?;
    let order = MonomialOrder::GrevLex;
    let degs = degrees(&res.invariants);
    r.line(format!("{} primary invariants, degrees {:?}, hsop verified: {hsop}", res.invariants.len(), degs));
    r.line(format!("linear forms: {}", render(&res.linear_forms, &order).join(", ")));
    list_lines(&mut r, &render(&res.invariants, &order));
    r.result = json!({
        "invariants": render(&res.invariants, &order),
        "degrees": degs,
        "linear_forms": render(&res.linear_forms, &order),
        "retries": res.retries,
        "hsop": hsop,
    });
    Ok(r)
}

pub fn bounds(path: &Path, cap: usize, primary_degrees: Option<&[u32]>, seed: u64) -> Outcome {
    const CMD: &str = "bounds";
    let fail = |e| Failure::new(CMD, e);
    let (mut r, group, ring) = finite(CMD, path, cap)?;
    let degs = match primary_degrees {
        Some(d) => d.to_vec(),
        None => {
            r.seed = Some(seed);
            degrees(&inv::dade_primary_invariants(&group, &ring, seed).map_err(fail)?.invariants)
        }
    };
    let b = inv::degree_bound_report(group.dimension(), group.order(), &degs, group.is_modular());
    r.line(format!("primary degrees {degs:?}"));
    r.line(format!("secondary degree bound: {}", b.symonds));
    r.line(format!("generator degree bound: {}", b.coarse));
    r.line(format!("Noether bound |G|: {} (applies: {})", b.noether, b.noether_applies));
    r.result = json!({ "primary_degrees": degs, "bounds": b });
    Ok(r)
}

pub fn field(path: &Path, cap: usize) -> Outcome {
    const CMD: &str = "field";
    let (mut r, spec) = algebraic(CMD, path, cap)?;
    let gens = spec.invariant_field_generators().map_err(|e| Failure::new(CMD, e))?;
    let rendered: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    r.line(format!("{} field generators", rendered.len()));
    list_lines(&mut r, &rendered);
    r.result = json!({ "generators": rendered });
    Ok(r)
}

pub fn derksen_ideal(path: &Path, cap: usize) -> Outcome {
    const CMD: &str = "derksen-ideal";
    let (mut r, spec) = algebraic(CMD, path, cap)?;
    let d = spec.derksen_ideal().map_err(|e| Failure::new(CMD, e))?;
    let rendered: Vec<String> = d.generators.iter().map(|g| g.to_string()).collect();
    r.line(format!("ring: {}", d.ring.names().join(", ")));
    r.line(format!("{} generators", rendered.len()));
    list_lines(&mut r, &rendered);
    r.result = json!({
        "variables": d.ring.names(),
        "order": d.order.to_string(),
        "reduced": d.reduced,
        "generators": rendered,
    });
    Ok(r)
}

pub fn separating_variety(path: &Path, cap: usize) -> Outcome {
    const CMD: &str = "separating-variety";
    let (mut r, spec) = algebraic(CMD, path, cap)?;
    let gens = spec.separating_variety().map_err(|e| Failure::new(CMD, e))?;
    let rendered: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    r.line(format!("ring: {}", spec.xy_ring().names().join(", ")));
    list_lines(&mut r, &rendered);
    r.result = json!({ "variables": spec.xy_ring().names(), "generators": rendered });
    Ok(r)
}

pub fn groebner(vars: &str, order: OrderArg, prime: Option<u64>, polys: &[String]) -> Outcome {
    const CMD: &str = "groebner";
    let fail = |e| Failure::new(CMD, e);
    let order = MonomialOrder::from(order);
    let mut r = RunReport::new(CMD, &Input::from_text(format!("{vars}\n{order}\n{prime:?}\n{}", polys.join("\n"))));
    let field = match prime {
        Some(p) => Field::prime(p).map_err(fail)?,
        None => Field::rationals(),
    };
    let names: Vec<String> = vars.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    let ring = Ring::new(field, names).map_err(fail)?;
    let gens = polys.iter().map(|p| ring.parse(p)).collect::<invar_core::Result<Vec<_>>>().map_err(fail)?;
    let basis = groebner::reduced_basis(&ring, &gens, order).map_err(fail)?;
    let rendered = render(basis.generators(), &order);
    let dim = match basis.dimension().map_err(fail)? {
        IdealDimension::Empty => Value::Null,
        IdealDimension::Dimension(d) => json!(d),
    };
    r.line(format!("{} elements, order {order}", rendered.len()));
    r.line(format!("dimension: {}", dim.as_u64().map_or("empty variety".to_string(), |d| d.to_string())));
    list_lines(&mut r, &rendered);
    r.result = json!({ "order": order.to_string(), "basis": rendered, "dimension": dim });
    Ok(r)
}
