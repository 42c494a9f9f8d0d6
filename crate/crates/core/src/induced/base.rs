use crate::category::{check_functor_laws, compose_chain, has_type, Category, Functor, Product, Scope};
use crate::error::{Error, Result};
use crate::monoidal::Monoidal;
use crate::report::{all_passed, Failure, Report, Tally};

use super::image::{check_image_conditions, postcondition, ImageTensor, InducedTensor, Provenance, SectionPreimage};

/// How `*∘G ≅ Id_D` is witnessed.
pub enum Witness<'a, D: Category> {
    /// `*(G(X)) = X` and `*(G(f)) = f` on the nose.
    Equality,
    /// Components `w_X: *(G(X)) → X`.
    Components(Box<dyn Fn(&D::Obj) -> Result<D::Mor> + 'a>),
}

/// A base for `D`: a product `Π_Λ(B)`, a pasting functor `*: Π_Λ(B) → D`
/// and a decomposition functor `G: D → Π_Λ(B)` with `*∘G ≅ Id_D`.
pub struct Base<'a, B: Category, D: Category, S, G> {
    pub product: &'a Product<B>,
    pub target: &'a D,
    pub star: S,
    pub decompose: G,
    pub witness: Witness<'a, D>,
}

impl<B, D, S, G> Base<'_, B, D, S, G>
where
    B: Category,
    D: Category,
    S: Functor<Product<B>, D>,
    G: Functor<D, Product<B>>,
{
    /// The image of a scope of `D` under `G`, without repeats.
    pub fn product_scope(&self, scope: &Scope<D>) -> Result<Scope<Product<B>>> {
        let mut out = Scope::new(Vec::new(), Vec::new());
        for x in &scope.objects {
            let gx = self.decompose.map_obj(x)?;
            if !out.objects.contains(&gx) {
                out.objects.push(gx);
            }
        }
        for f in &scope.morphisms {
            let gf = self.decompose.map_mor(f)?;
            if !out.morphisms.contains(&gf) {
                out.morphisms.push(gf);
            }
        }
        Ok(out)
    }
}

fn prefixed(prefix: &str, reports: Vec<Report>) -> Vec<Report> {
    reports
        .into_iter()
        .map(|mut r| {
            r.law = format!("{prefix}-{}", r.law);
            r
        })
        .collect()
}

/// Functor laws for `*` (on `product_scope`) and `G` (on `scope`), and
/// `*∘G ≅ Id_D` on `scope` through the witness.
pub fn validate_base<B, D, S, G>(
    base: &Base<'_, B, D, S, G>,
    scope: &Scope<D>,
    product_scope: &Scope<Product<B>>,
) -> Result<Vec<Report>>
where
    B: Category,
    D: Category,
    S: Functor<Product<B>, D>,
    G: Functor<D, Product<B>>,
{
    let d = base.target;
    let mut reports = prefixed("pasting", check_functor_laws(&base.star, base.product, d, product_scope)?);
    reports.extend(prefixed(
        "decomposition",
        check_functor_laws(&base.decompose, d, base.product, scope)?,
    ));
    let round = |x: &D::Obj| -> Result<D::Obj> { base.star.map_obj(&base.decompose.map_obj(x)?) };
    let round_mor = |f: &D::Mor| -> Result<D::Mor> { base.star.map_mor(&base.decompose.map_mor(f)?) };

    match &base.witness {
        Witness::Equality => {
            let mut objs = Tally::new("roundtrip-objects");
            for x in &scope.objects {
                let back = round(x)?;
                objs.check(back == *x, || Failure::new(vec![d.show_obj(x)], d.show_obj(&back), d.show_obj(x)));
            }
            let mut mors = Tally::new("roundtrip-morphisms");
            for f in &scope.morphisms {
                let back = round_mor(f)?;
                mors.check(back == *f, || Failure::new(vec![d.show_mor(f)], d.show_mor(&back), d.show_mor(f)));
            }
            reports.push(objs.finish());
            reports.push(mors.finish());
        }
        Witness::Components(w) => {
            let mut iso = Tally::new("witness-isos");
            for x in &scope.objects {
                let wx = w(x)?;
                let src = round(x)?;
                iso.check(has_type(d, &wx, &src, x) && d.inverse(&wx).is_some(), || {
                    Failure::new(
                        vec![d.show_obj(x)],
                        format!("{} -> {}", d.show_obj(&d.source(&wx)), d.show_obj(&d.target(&wx))),
                        format!("invertible {} -> {}", d.show_obj(&src), d.show_obj(x)),
                    )
                });
            }
            let mut nat = Tally::new("witness-naturality");
            for f in &scope.morphisms {
                let lhs = (|| compose_chain(d, &[("w_X", w(&d.source(f))?), ("f", f.clone())]))();
                let rhs = (|| compose_chain(d, &[("*G(f)", round_mor(f)?), ("w_Y", w(&d.target(f))?)]))();
                crate::monoidal::compare(d, &mut nat, || vec![d.show_mor(f)], lhs, rhs)?;
            }
            reports.push(iso.finish());
            reports.push(nat.finish());
        }
    }
    Ok(reports)
}

pub type BaseTensor<'a, B, D, S, G> = ImageTensor<'a, Product<B>, D, S, SectionPreimage<'a, D, S, G>>;

/// The tensor on `D` induced by a base: `X⊗Y = *(G(X)⊗′G(Y))`, `f⊗g =
/// *(G(f)⊗′G(g))`, unit `*(I′)` and structure maps `*(a′)`, `*(λ′)`,
/// `*(ρ′)`, where `⊗′` is the componentwise tensor of the product.
///
/// Refuses when the base fails validation, when `*` violates the image
/// conditions on `product_scope`, when the witness is not an equality, or
/// when the result fails the monoidal laws on `scope`.
pub fn induce_tensor_from_base<'a, B, D, S, G>(
    base: &'a Base<'a, B, D, S, G>,
    scope: &Scope<D>,
    product_scope: &Scope<Product<B>>,
) -> Result<InducedTensor<BaseTensor<'a, B, D, S, G>>>
where
    B: Monoidal,
    D: Category,
    S: Functor<Product<B>, D>,
    G: Functor<D, Product<B>>,
{
    let mut reports = validate_base(base, scope, product_scope)?;
    if !all_passed(&reports) {
        return Err(Error::Refused {
            reason: "not a base on the given scope".into(),
            reports,
        });
    }
    if matches!(base.witness, Witness::Components(_)) {
        return Err(Error::Refused {
            reason: "inducing a tensor needs *∘G = Id on the nose; the base only supplies an isomorphism".into(),
            reports: Vec::new(),
        });
    }
    let conditions = check_image_conditions(&base.star, base.product, base.target, product_scope)?;
    if !all_passed(&conditions) {
        return Err(Error::Refused {
            reason: "pasting functor does not respect tensors of equal images".into(),
            reports: conditions,
        });
    }
    reports.extend(conditions);

    let d = base.target;
    let tensor = ImageTensor::new(
        base.product,
        d,
        &base.star,
        SectionPreimage {
            section: &base.decompose,
            functor: &base.star,
            target: d,
        },
    )?;
    let mut provenance = Provenance::default();
    for x in &scope.objects {
        let gx = base.decompose.map_obj(x)?;
        provenance.objects.insert(d.show_obj(x), base.product.show_obj(&gx));
    }
    for f in &scope.morphisms {
        let gf = base.decompose.map_mor(f)?;
        provenance.morphisms.insert(d.show_mor(f), base.product.show_mor(&gf));
    }
    let scope = Scope::new(scope.objects.clone(), scope.morphisms.clone());
    reports.extend(postcondition(&tensor, &scope, "tensor induced from the base")?);
    Ok(InducedTensor {
        tensor,
        scope,
        reports,
        provenance,
    })
}
