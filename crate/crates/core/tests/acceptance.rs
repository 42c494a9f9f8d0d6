//! Acceptance criteria. Runs as a plain binary and prints one line per
//! criterion; exits non-zero if any fails.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use moncat::category::{
    binary_product, check_isomorphism, product_category, Category, Evaluate, FinCategory, FiniteCategory,
    FunctorData, IndexCategory, Product, Scope,
};
use moncat::cob::{
    cob_square, enumerate_classes, pairs_scope, ClassBounds, CobClass, CobPairs, Decompose, Paste, SphereClass,
};
use moncat::finvect::{self, FinVect, LinMap, Swap, VectObj};
use moncat::induced::{
    check_image_conditions, dual_in_product, induce_tensor_from_base, induce_tensor_on_image, transfer_dual,
    validate_base, Base, LaxMonoidalFunctor, Witness,
};
use moncat::linalg::{q, Matrix, Q};
use moncat::loopspace::{finvect_line, Constants, Lift, Loop, LoopCat, Mode};
use moncat::monoidal::samples::{cyclic_group, max_chain};
use moncat::monoidal::{
    check_bifunctoriality, check_hexagon, check_pentagon_triangle, check_zigzag, trace, Monoidal,
};
use moncat::report::{all_passed, Report};
use moncat::Result;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn failing(reports: &[Report]) -> String {
    reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} ({} failures)", r.law, r.failures.len()))
        .collect::<Vec<_>>()
        .join(", ")
}

fn lift_err<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

const LOOP_TRACE_BUDGET: Duration = Duration::from_secs(5);
const COHERENCE_BUDGET: Duration = Duration::from_secs(60);

fn loop_trace() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for modes in [0usize, 1, 4] {
        let cat = LoopCat::new(modes);
        let probes: Vec<Loop> = [
            vec![(Mode::Constant, q(1))],
            vec![(Mode::Cos(1), q(1))],
            vec![(Mode::Cos(1), q(1)), (Mode::Sin(3), q(2))],
        ]
        .iter()
        .filter_map(|terms| Loop::scalar(modes, terms).ok())
        .collect();
        for n in 1..=5 {
            let id = lift_err(cat.identity(&cat.obj(n)))?;
            for probe in &probes {
                let out = lift_err(cat.loop_trace(&id, probe))?;
                let expected = probe.scale(&q(n as i64));
                ensure(out == expected, || format!("n={n} N={modes} probe {probe}: got {out}"))?;
                for u in common::sample_points(modes) {
                    let lhs = common::eval_loop(&out, &u);
                    let rhs: Vec<Q> = common::eval_loop(probe, &u).iter().map(|x| x * q(n as i64)).collect();
                    ensure(lhs == rhs, || format!("pointwise mismatch at tan(t/2)={u}"))?;
                }
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < LOOP_TRACE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} probe/dimension/mode cases exact, {elapsed:.2?}"))
}

fn random_matrix(runner: &mut TestRunner, n: usize) -> Vec<Vec<Q>> {
    let entry = (-9i64..=9, 1i64..=5).prop_map(|(a, b)| Q::new(a.into(), b.into()));
    let strat = proptest::collection::vec(proptest::collection::vec(entry, n), n);
    strat.new_tree(runner).unwrap().current()
}

fn finvect_duals() -> Outcome {
    for n in 0..=6 {
        let reports = lift_err(check_zigzag(&FinVect, &FinVect.duality(n)))?;
        ensure(all_passed(&reports), || format!("zigzag for R^{n}: {}", failing(&reports)))?;
    }
    let mut runner = TestRunner::deterministic();
    let dim = (1usize..=5).boxed();
    for i in 0..200 {
        let n = dim.new_tree(&mut runner).unwrap().current();
        let m = random_matrix(&mut runner, n);
        let expected = common::diag_sum(&m);
        let f = LinMap::from_matrix(lift_err(Matrix::from_rows(m, n))?);
        let t = lift_err(trace(&FinVect, &Swap, &FinVect.duality(n), &f))?;
        let got = t.as_scalar().cloned();
        ensure(got.as_ref() == Some(&expected), || {
            format!("sample {i}: trace {got:?}, diagonal sum {expected}")
        })?;
    }
    Ok("zigzag exact for n=0..6; 200/200 traces equal diagonal sums".into())
}

fn coherence() -> Outcome {
    let start = Instant::now();
    let scope = finvect::scope(&[1, 2, 3]);
    let mut reports = lift_err(check_bifunctoriality(&FinVect, &scope))?;
    reports.extend(lift_err(check_pentagon_triangle(&FinVect, &scope))?);
    reports.extend(lift_err(check_hexagon(&FinVect, &Swap, &scope))?);
    ensure(all_passed(&reports), || failing(&reports))?;
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    let elapsed = start.elapsed();
    ensure(elapsed < COHERENCE_BUDGET, || format!("took {elapsed:?}"))?;

    let fv = finvect::scope(&[1, 2]);
    let small: Scope<common::Corrupted> = Scope::new(fv.objects, fv.morphisms);
    let bad_assoc = common::Corrupted {
        associator_at: Some((2, 1, 2)),
        tensor_at: None,
    };
    let r = lift_err(check_pentagon_triangle(&bad_assoc, &small))?;
    ensure(!all_passed(&r), || "corrupted associator went unnoticed".into())?;
    let id2 = LinMap::identity(2);
    let bad_tensor = common::Corrupted {
        associator_at: None,
        tensor_at: Some((id2.clone(), id2)),
    };
    let r = lift_err(check_bifunctoriality(&bad_tensor, &small))?;
    ensure(!all_passed(&r), || "corrupted tensor went unnoticed".into())?;
    Ok(format!("{checked} instances, 0 mismatches, {elapsed:.2?}; both mutations detected"))
}

fn projection_pipeline() -> Outcome {
    let d = max_chain(3);
    let c = Product::new(d.clone(), IndexCategory::range(2));
    let ev = Evaluate { position: 0 };
    let scope = Scope::all(&c);
    let conditions = lift_err(check_image_conditions(&ev, &c, &d, &scope))?;
    ensure(all_passed(&conditions), || failing(&conditions))?;
    let induced = lift_err(induce_tensor_on_image(&ev, &c, &d, &scope))?;
    let (objs, mors) = (d.objects(), d.morphisms());
    let total = objs.len().pow(2) + mors.len().pow(2);
    let mut equal = 0;
    for x in &objs {
        for y in &objs {
            equal += usize::from(induced.tensor.tensor_obj(x, y).ok() == d.tensor_obj(x, y).ok());
        }
    }
    for f in &mors {
        for g in &mors {
            equal += usize::from(induced.tensor.tensor_mor(f, g).ok() == d.tensor_mor(f, g).ok());
        }
    }
    ensure(equal == total, || format!("{equal}/{total} pairs agree"))?;
    Ok(format!("conditions pass; {equal}/{total} object and morphism pairs equal"))
}

fn cobordisms() -> Outcome {
    let mut by_type: Vec<Vec<Vec<CobClass>>> = vec![vec![Vec::new(); 4]; 4];
    for s in 0..=3 {
        for d in 0..=3 - s {
            by_type[s][d] = enumerate_classes(s, d, 1, 1);
        }
    }
    let mut identities = 0;
    for (s, row) in by_type.iter().enumerate() {
        for (d, classes) in row.iter().enumerate() {
            for c in classes {
                let left = lift_err(CobClass::cylinder(s).glue(c))?;
                let right = lift_err(c.glue(&CobClass::cylinder(d)))?;
                ensure(left == *c && right == *c, || format!("cylinder law fails at {c}"))?;
                identities += 1;
            }
        }
    }
    let mut triples = 0usize;
    let mut pairs = 0usize;
    for a in 0..=3 {
        for b in 0..=3 - a {
            for f in &by_type[a][b] {
                for c in 0..=3 - b {
                    for g in &by_type[b][c] {
                        let fg = lift_err(f.glue(g))?;
                        ensure(common::euler(&fg) == common::euler(f) + common::euler(g), || {
                            format!("Euler characteristic not additive for {f} then {g}")
                        })?;
                        ensure(fg.open().len() + fg.closed().len() == common::glued_components(f, g), || {
                            format!("component count wrong for {f} then {g}")
                        })?;
                        pairs += 1;
                        for e in 0..=3 - c {
                            for h in &by_type[c][e] {
                                let lhs = lift_err(fg.glue(h))?;
                                let rhs = lift_err(f.glue(&lift_err(g.glue(h))?))?;
                                ensure(lhs == rhs, || format!("associativity fails at {f} ; {g} ; {h}"))?;
                                triples += 1;
                            }
                        }
                    }
                }
            }
        }
    }

    ensure(lift_err(CobClass::disk(true).glue(&CobClass::disk(false)))? == CobClass::sphere(), || {
        "disk then disk is not the sphere".into()
    })?;
    let torus = lift_err(CobClass::pants().glue(&CobClass::copants()))?;
    ensure(
        torus.open().len() == 1 && torus.open()[0].genus == 1 && torus.open()[0].boundary.len() == 2,
        || format!("pants then copants gave {torus}"),
    )?;
    let four = lift_err(CobClass::copants().glue(&CobClass::pants()))?;
    ensure(
        four.open().len() == 1 && four.open()[0].genus == 0 && four.open()[0].boundary.len() == 4,
        || format!("copants then pants gave {four}"),
    )?;

    let square = cob_square();
    let base = Base {
        product: &square,
        target: &CobPairs,
        star: Paste,
        decompose: Decompose,
        witness: Witness::Equality,
    };
    let bounds = ClassBounds {
        max_circles: 1,
        genus_cap: 0,
        closed_cap: 0,
    };
    let scope = lift_err(pairs_scope(bounds, 100_000))?;
    let pscope = lift_err(base.product_scope(&scope))?;
    let induced = lift_err(induce_tensor_from_base(&base, &scope, &pscope))?;
    let unit = induced.tensor.unit();
    ensure(unit == SphereClass::new(0, 0) && unit.class() == CobClass::sphere(), || {
        format!("induced unit is {unit}")
    })?;
    Ok(format!(
        "{identities} cylinder checks, {pairs} gluings against Euler oracle, {triples} associativity triples; unit {unit}"
    ))
}

fn bases() -> Outcome {
    let dims = [1usize, 2, 3, 4];
    let mut objects_checked = 0;

    let trivial = Product::new(FinVect, IndexCategory::range(1));
    let tbase = Base {
        product: &trivial,
        target: &FinVect,
        star: Evaluate { position: 0 },
        decompose: moncat::category::Diagonal { arity: 1 },
        witness: Witness::Equality,
    };
    let scope = Scope::new(
        dims.iter().map(|&d| VectObj::new(d)).collect(),
        finvect::basis_morphisms(&[1, 2]),
    );
    let pscope = lift_err(tbase.product_scope(&scope))?;
    let r = lift_err(validate_base(&tbase, &scope, &pscope))?;
    ensure(all_passed(&r), || format!("trivial base: {}", failing(&r)))?;
    let induced = lift_err(induce_tensor_from_base(&tbase, &scope, &pscope))?;
    for x in &scope.objects {
        for y in &scope.objects {
            ensure(induced.tensor.tensor_obj(x, y).ok() == FinVect.tensor_obj(x, y).ok(), || {
                format!("trivial base differs at {x:?}, {y:?}")
            })?;
            objects_checked += 1;
        }
    }
    for f in &scope.morphisms {
        for g in &scope.morphisms {
            ensure(induced.tensor.tensor_mor(f, g).ok() == FinVect.tensor_mor(f, g).ok(), || {
                "trivial base differs on morphisms".into()
            })?;
        }
    }

    let line = finvect_line();
    let cat = LoopCat::new(1);
    let lbase = Base {
        product: &line,
        target: &cat,
        star: Lift { modes: 1 },
        decompose: Constants,
        witness: Witness::Equality,
    };
    let lscope = Scope::new(
        dims.iter().map(|&d| cat.obj(d)).collect(),
        cat.scope(&[1, 2]).morphisms,
    );
    let lpscope = lift_err(lbase.product_scope(&lscope))?;
    let r = lift_err(validate_base(&lbase, &lscope, &lpscope))?;
    ensure(all_passed(&r), || format!("loop-space base: {}", failing(&r)))?;
    let induced = lift_err(induce_tensor_from_base(&lbase, &lscope, &lpscope))?;
    for &a in &dims {
        for &b in &dims {
            let got = lift_err(induced.tensor.tensor_obj(&cat.obj(a), &cat.obj(b)))?;
            ensure(got == cat.obj(a * b), || format!("L(R^{a})⊗L(R^{b}) = {got}"))?;
            objects_checked += 1;
        }
    }
    for f in &lscope.morphisms {
        for g in &lscope.morphisms {
            let got = lift_err(induced.tensor.tensor_mor(f, g))?;
            let want = cat.lift(lift_err(FinVect.tensor_mor(f.extract(), g.extract()))?);
            ensure(got == want, || format!("{f} ⊗ {g} is not the lifted Kronecker product"))?;
        }
    }
    Ok(format!("both bases validate; {objects_checked} object pairs reproduced"))
}

fn transfer() -> Outcome {
    let mut count = 0;
    for modes in [0usize, 1, 4] {
        let cat = LoopCat::new(modes);
        let l = lift_err(LaxMonoidalFunctor::with_identity_comparisons(Lift { modes }, &FinVect, &cat))?;
        for n in 1..=4 {
            let d = lift_err(transfer_dual(&l, &FinVect, &cat, &FinVect.duality(n)))?;
            let r = lift_err(check_zigzag(&cat, &d))?;
            ensure(all_passed(&r) && d.dual == cat.obj(n), || format!("LR^{n} with {modes} modes: {}", failing(&r)))?;
            count += 1;
        }
    }

    let product = Product::new(FinVect, IndexCategory::range(2));
    let x = vec![VectObj::new(2), VectObj::new(3)];
    let dual = lift_err(dual_in_product(&product, &x, |v| Some(FinVect.duality(v.dim))))?;
    let r = lift_err(check_zigzag(&product, &dual))?;
    ensure(all_passed(&r), || format!("componentwise duals: {}", failing(&r)))?;
    for position in 0..2 {
        let ev = Evaluate { position };
        let l = lift_err(LaxMonoidalFunctor::with_identity_comparisons(ev, &product, &FinVect))?;
        let d = lift_err(transfer_dual(&l, &product, &FinVect, &dual))?;
        let expected = FinVect.duality(x[position].dim);
        ensure(d == expected, || format!("EV at index {} did not recover the component dual", position + 1))?;
        count += 1;
    }
    Ok(format!("{count} transferred duals pass zigzag exactly"))
}

fn walking_arrow() -> FinCategory {
    FinCategory::from_parts(
        vec!["a".into(), "b".into()],
        vec![
            ("ia".into(), "a".into(), "a".into()),
            ("ib".into(), "b".into(), "b".into()),
            ("f".into(), "a".into(), "b".into()),
        ],
        vec![("a".into(), "ia".into()), ("b".into(), "ib".into())],
        vec![
            ("ia".into(), "ia".into(), "ia".into()),
            ("ib".into(), "ib".into(), "ib".into()),
            ("f".into(), "ia".into(), "f".into()),
            ("ib".into(), "f".into(), "f".into()),
        ],
    )
    .expect("walking arrow")
}

fn products() -> Outcome {
    let fixtures: Vec<(&str, Arc<FinCategory>)> = vec![
        ("walking arrow", Arc::new(walking_arrow())),
        ("Z/2", cyclic_group(2).category().clone()),
        ("chain 0<=1<=2", max_chain(3).category().clone()),
    ];
    let mut checked = 0;
    for (name, b) in &fixtures {
        ensure(b.morphism_count() <= 6, || format!("{name} is too large"))?;
        for k in 1..=3u32 {
            let p = lift_err(product_category(b.clone(), &IndexCategory::range(k as usize), 1 << 20))?;
            let (o, m) = (p.category.object_count(), p.category.morphism_count());
            let (eo, em) = (b.object_count().pow(k), b.morphism_count().pow(k));
            ensure(o == eo && m == em, || format!("{name}^{k}: {o} objects, {m} morphisms; want {eo}, {em}"))?;
            checked += 1;
        }
        let p = lift_err(product_category(b.clone(), &IndexCategory::range(2), 1 << 20))?;
        let bb = Arc::new(lift_err(binary_product(b, b))?);
        let iso = lift_err(FunctorData::from_fns(
            p.category.clone(),
            bb.clone(),
            |x| bb.object(p.category.obj_name(x)),
            |f| bb.morphism(p.category.mor_name(f)),
        ))?;
        let r = check_isomorphism(&iso);
        ensure(all_passed(&r), || format!("{name}: {}", failing(&r)))?;
    }
    Ok(format!("{checked} product counts match; 3 isomorphisms with B×B verified"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("loop-space trace equals dimension", loop_trace),
        ("finvect duals and trace oracle", finvect_duals),
        ("finvect coherence and mutation detection", coherence),
        ("induced tensor along projection", projection_pipeline),
        ("cobordism gluing and induced unit", cobordisms),
        ("trivial and loop-space bases", bases),
        ("dualizability transfer", transfer),
        ("product category counts and B×B", products),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {} [{name}]: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL ({detail})", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
