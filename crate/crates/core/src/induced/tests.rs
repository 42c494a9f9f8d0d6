use std::sync::Arc;

use super::*;
use crate::category::{
    Category, CategoryFile, CategoryRef, Diagonal, Evaluate, FinCategory, FiniteCategory, Functor, FunctorData,
    IdentityFunctor, IndexCategory, MorphismEntry, Product, Scope,
};
use crate::error::{Error, Result};
use crate::finvect::{self, FinVect, LinMap, Swap, VectObj};
use crate::linalg::Matrix;
use crate::monoidal::samples::max_chain;
use crate::monoidal::{check_hexagon, check_zigzag, FinMonoidal, Monoidal, MonoidalFile};
use crate::report::{all_passed, Report, Status};

fn law<'a>(reports: &'a [Report], name: &str) -> &'a Report {
    reports.iter().find(|r| r.law == name).unwrap_or_else(|| panic!("no report for {name}"))
}

/// `Z/n` as a discrete monoidal category: objects `0..n`, only identities.
fn discrete_monoid(n: usize) -> FinMonoidal {
    let o = |i: usize| (i % n).to_string();
    let id = |i: usize| format!("i{}", i % n);
    let mut tensor_obj = Vec::new();
    let mut tensor_mor = Vec::new();
    let mut associator = Vec::new();
    let mut braiding = Vec::new();
    for a in 0..n {
        for b in 0..n {
            tensor_obj.push([o(a), o(b), o(a + b)]);
            tensor_mor.push([id(a), id(b), id(a + b)]);
            braiding.push([o(a), o(b), id(a + b)]);
            for c in 0..n {
                associator.push([o(a), o(b), o(c), id(a + b + c)]);
            }
        }
    }
    let unitors: Vec<[String; 2]> = (0..n).map(|a| [o(a), id(a)]).collect();
    let file = MonoidalFile {
        category: CategoryRef::Inline(CategoryFile {
            objects: (0..n).map(o).collect(),
            morphisms: (0..n)
                .map(|a| MorphismEntry {
                    id: id(a),
                    src: o(a),
                    dst: o(a),
                })
                .collect(),
            identity: (0..n).map(|a| (o(a), id(a))).collect(),
            composition: (0..n).map(|a| [id(a), id(a), id(a)]).collect(),
        }),
        unit: o(0),
        strict: true,
        tensor_obj,
        tensor_mor,
        associator,
        left_unitor: unitors.clone(),
        right_unitor: unitors,
        braiding: Some(braiding),
        symmetric: true,
    };
    FinMonoidal::from_file(&file, |_| unreachable!()).unwrap()
}

fn discrete(names: &[&str]) -> FinCategory {
    FinCategory::from_parts(
        names.iter().map(|s| s.to_string()).collect(),
        names.iter().map(|s| (format!("i{s}"), s.to_string(), s.to_string())).collect(),
        names.iter().map(|s| (s.to_string(), format!("i{s}"))).collect(),
        names.iter().map(|s| (format!("i{s}"), format!("i{s}"), format!("i{s}"))).collect(),
    )
    .unwrap()
}

#[test]
fn identity_functor_induces_the_same_tensor() {
    let m = max_chain(3);
    let scope = Scope::all(&m);
    let reports = check_image_conditions(&IdentityFunctor, &m, &m, &scope).unwrap();
    assert_eq!(law(&reports, "image-tensor-objects").checked, 9);
    assert!(all_passed(&reports));
    let induced = induce_tensor_on_image(&IdentityFunctor, &m, &m, &scope).unwrap();
    for x in m.objects() {
        for y in m.objects() {
            assert_eq!(induced.tensor.tensor_obj(&x, &y).unwrap(), m.tensor_obj(&x, &y).unwrap());
        }
    }
    let b = m.braiding().unwrap();
    let ib = ImageBraiding::new(&b);
    assert!(all_passed(&check_hexagon(&induced.tensor, &ib, &induced.scope).unwrap()));
}

#[test]
fn projection_from_product_reproduces_target_tensor() {
    let d = max_chain(3);
    let c = Product::new(d.clone(), IndexCategory::range(2));
    let ev = Evaluate { position: 0 };
    let scope = Scope::all(&c);
    assert!(all_passed(&check_image_conditions(&ev, &c, &d, &scope).unwrap()));
    let induced = induce_tensor_on_image(&ev, &c, &d, &scope).unwrap();
    let mut equal = 0;
    for f in d.morphisms() {
        for g in d.morphisms() {
            if induced.tensor.tensor_mor(&f, &g).unwrap() == d.tensor_mor(&f, &g).unwrap() {
                equal += 1;
            }
        }
    }
    assert_eq!(equal, d.morphisms().len().pow(2));
    // least preimage of "1<=2" is the tuple with the smallest display string
    assert_eq!(induced.provenance.morphisms["1<=2"], "(1<=2,0<=0)");
}

#[test]
fn collapsing_functor_gives_counterexample() {
    let c = discrete_monoid(4);
    let d = discrete(&["p", "q"]);
    let cat = c.category().clone();
    let target = Arc::new(d);
    let f = FunctorData::from_fns(cat.clone(), target.clone(), |x| {
        let n: usize = cat.obj_name(x).parse().unwrap();
        target.object(if n < 2 { "p" } else { "q" })
    }, |g| {
        let n: usize = cat.mor_name(g)[1..].parse().unwrap();
        target.morphism(if n < 2 { "ip" } else { "iq" })
    })
    .unwrap();
    let scope = Scope::all(&c);
    let reports = check_image_conditions(&f, &c, &*target, &scope).unwrap();
    let objs = law(&reports, "image-tensor-objects");
    assert_eq!(objs.status, Status::Fail);
    assert!(objs
        .failures
        .iter()
        .any(|w| w.witness == vec!["0", "1", "0", "1"] && w.lhs == "p" && w.rhs == "q"));
    match induce_tensor_on_image(&f, &c, &*target, &scope) {
        Err(Error::Refused { reports, .. }) => assert!(!all_passed(&reports)),
        _ => panic!("expected refusal"),
    }
}

#[test]
fn identity_comparisons_are_strong() {
    let scope = finvect::scope(&[1, 2]);
    let l = LaxMonoidalFunctor::with_identity_comparisons(IdentityFunctor, &FinVect, &FinVect).unwrap();
    let v = verify_lax_monoidal(&l, &FinVect, &FinVect, &scope).unwrap();
    assert!(v.lax && v.normal && v.strong, "{:?}", v.reports);
    let d = FinVect.duality(3);
    assert_eq!(transfer_dual(&l, &FinVect, &FinVect, &d).unwrap(), d);
}

#[test]
fn zero_comparison_is_not_strong_and_blocks_transfer() {
    let l = LaxMonoidalFunctor::new(
        IdentityFunctor,
        |m: &VectObj, n: &VectObj| {
            let k = m.dim * n.dim;
            Ok(if m.dim == 2 && n.dim == 2 {
                LinMap::from_matrix(Matrix::zeros(k, k))
            } else {
                LinMap::identity(k)
            })
        },
        LinMap::identity(1),
    );
    let v = verify_lax_monoidal(&l, &FinVect, &FinVect, &finvect::scope(&[1, 2])).unwrap();
    assert!(!v.strong);
    let inv = law(&v.reports, "comparison-invertible");
    assert_eq!(inv.failures.len(), 1);
    assert_eq!(inv.failures[0].witness, vec!["R^2", "R^2"]);
    assert!(matches!(
        transfer_dual(&l, &FinVect, &FinVect, &FinVect.duality(2)),
        Err(Error::Refused { .. })
    ));
}

#[test]
fn product_of_finvect_is_coherent_and_duals_are_componentwise() {
    let p = Product::new(FinVect, IndexCategory::range(2));
    assert_eq!(p.unit(), vec![VectObj::new(1), VectObj::new(1)]);
    let objs: Vec<Vec<VectObj>> = [1, 2]
        .iter()
        .flat_map(|&a| [1, 2].iter().map(move |&b| vec![VectObj::new(a), VectObj::new(b)]))
        .collect();
    let reports = crate::monoidal::check_pentagon_triangle(&p, &Scope::objects_only(objs)).unwrap();
    assert!(all_passed(&reports));

    let x = vec![VectObj::new(2), VectObj::new(3)];
    let d = dual_in_product(&p, &x, |v| Some(FinVect.duality(v.dim))).unwrap();
    assert!(all_passed(&check_zigzag(&p, &d).unwrap()));

    let ev = Evaluate { position: 1 };
    let l = LaxMonoidalFunctor::with_identity_comparisons(ev, &p, &FinVect).unwrap();
    assert_eq!(transfer_dual(&l, &p, &FinVect, &d).unwrap(), FinVect.duality(3));

    match dual_in_product(&p, &x, |v| (v.dim != 3).then(|| FinVect.duality(v.dim))) {
        Err(Error::Refused { reason, .. }) => assert!(reason.contains("component 2"), "{reason}"),
        other => panic!("expected refusal, got {other:?}"),
    }
}

fn trivial_base<M: Monoidal>(m: &M) -> (Product<M>, Witness<'static, M>)
where
    M: Clone,
{
    (Product::new(m.clone(), IndexCategory::range(1)), Witness::Equality)
}

#[test]
fn trivial_base_induces_the_base_tensor() {
    let m = max_chain(3);
    let (p, witness) = trivial_base(&m);
    let base = Base {
        product: &p,
        target: &m,
        star: Evaluate { position: 0 },
        decompose: Diagonal { arity: 1 },
        witness,
    };
    let scope = Scope::all(&m);
    let pscope = base.product_scope(&scope).unwrap();
    assert!(all_passed(&validate_base(&base, &scope, &pscope).unwrap()));
    let induced = induce_tensor_from_base(&base, &scope, &pscope).unwrap();
    for f in m.morphisms() {
        for g in m.morphisms() {
            assert_eq!(induced.tensor.tensor_mor(&f, &g).unwrap(), m.tensor_mor(&f, &g).unwrap());
        }
    }
    assert_eq!(induced.tensor.unit(), m.unit());
}

#[test]
fn trivial_finvect_base_with_braiding() {
    let (p, witness) = trivial_base(&FinVect);
    let base = Base {
        product: &p,
        target: &FinVect,
        star: Evaluate { position: 0 },
        decompose: Diagonal { arity: 1 },
        witness,
    };
    let scope = finvect::scope(&[1, 2]);
    let pscope = base.product_scope(&scope).unwrap();
    let induced = induce_tensor_from_base(&base, &scope, &pscope).unwrap();
    let pb = ProductBraiding(Swap);
    let b = ImageBraiding::new(&pb);
    assert!(all_passed(&check_hexagon(&induced.tensor, &b, &induced.scope).unwrap()));
}

/// Sends `R^2` to `(R^4)`, off the section of the projection.
struct BadSection;

impl Functor<FinVect, Product<FinVect>> for BadSection {
    fn map_obj(&self, x: &VectObj) -> Result<Vec<VectObj>> {
        Ok(vec![if x.dim == 2 { VectObj::new(4) } else { *x }])
    }
    fn map_mor(&self, f: &LinMap) -> Result<Vec<LinMap>> {
        Ok(vec![f.clone()])
    }
}

#[test]
fn section_mutation_reported_with_witness() {
    let p = Product::new(FinVect, IndexCategory::range(1));
    let base = Base {
        product: &p,
        target: &FinVect,
        star: Evaluate { position: 0 },
        decompose: BadSection,
        witness: Witness::Equality,
    };
    let scope = finvect::scope(&[1, 2]);
    let pscope = base.product_scope(&scope).unwrap();
    let reports = validate_base(&base, &scope, &pscope).unwrap();
    let round = law(&reports, "roundtrip-objects");
    assert_eq!(round.failures.len(), 1);
    assert_eq!(round.failures[0].witness, vec!["R^2"]);
    assert!(induce_tensor_from_base(&base, &scope, &pscope).is_err());
}

#[test]
fn iso_witness_validates_but_does_not_induce() {
    let p = Product::new(FinVect, IndexCategory::range(1));
    let base = Base {
        product: &p,
        target: &FinVect,
        star: Evaluate { position: 0 },
        decompose: Diagonal { arity: 1 },
        witness: Witness::Components(Box::new(|x: &VectObj| Ok(LinMap::identity(x.dim)))),
    };
    let scope = finvect::scope(&[1, 2]);
    let pscope = base.product_scope(&scope).unwrap();
    let reports = validate_base(&base, &scope, &pscope).unwrap();
    assert!(all_passed(&reports));
    assert_eq!(law(&reports, "witness-naturality").checked, scope.morphisms.len());
    assert!(matches!(induce_tensor_from_base(&base, &scope, &pscope), Err(Error::Refused { .. })));
}

#[test]
fn image_of_symmetric_braiding_is_symmetric() {
    let c = discrete_monoid(3);
    let b = c.braiding().unwrap();
    let induced = induce_tensor_on_image(&IdentityFunctor, &c, &c, &Scope::all(&c)).unwrap();
    let ib = ImageBraiding::new(&b);
    let reports = check_hexagon(&induced.tensor, &ib, &induced.scope).unwrap();
    assert_eq!(law(&reports, "symmetry").status, Status::Pass);
    let _ = Category::show_obj(&induced.tensor, &c.unit());
}
