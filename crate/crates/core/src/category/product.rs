use std::collections::HashMap;
use std::sync::Arc;

use super::{validate_functor, Category, FinCategory, FiniteCategory, Functor, FunctorData, IndexCategory, MorId, ObjId};
use crate::error::{Error, Result};
use crate::report::{Failure, Report, Tally};

/// The product of a carrier over a finite index category: objects are
/// functors `Λ → C` and morphisms natural transformations between them.
/// Since `Λ` is discrete both are plain tuples ordered by `Λ`, and
/// composition is componentwise.
#[derive(Clone, Debug)]
pub struct Product<C> {
    pub base: C,
    pub index: IndexCategory,
}

impl<C> Product<C> {
    pub fn new(base: C, index: IndexCategory) -> Self {
        Product { base, index }
    }

    pub fn arity(&self) -> usize {
        self.index.len()
    }
}

impl<C: Category> Product<C> {
    fn check_arity<T>(&self, v: &[T], what: &str) -> Result<()> {
        if v.len() == self.arity() {
            Ok(())
        } else {
            Err(Error::Shape(format!("{what} has {} components, index has {}", v.len(), self.arity())))
        }
    }

    fn show_tuple<T>(items: &[T], show: impl Fn(&T) -> String) -> String {
        let parts: Vec<String> = items.iter().map(show).collect();
        format!("({})", parts.join(","))
    }
}

impl<C: Category> Category for Product<C> {
    type Obj = Vec<C::Obj>;
    type Mor = Vec<C::Mor>;

    fn source(&self, f: &Self::Mor) -> Self::Obj {
        f.iter().map(|c| self.base.source(c)).collect()
    }

    fn target(&self, f: &Self::Mor) -> Self::Obj {
        f.iter().map(|c| self.base.target(c)).collect()
    }

    fn identity(&self, x: &Self::Obj) -> Result<Self::Mor> {
        self.check_arity(x, "object")?;
        x.iter().map(|c| self.base.identity(c)).collect()
    }

    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.check_arity(f, "morphism")?;
        self.check_arity(g, "morphism")?;
        f.iter().zip(g).map(|(a, b)| self.base.compose(a, b)).collect()
    }

    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor> {
        f.iter().map(|c| self.base.inverse(c)).collect()
    }

    fn contains_object(&self, x: &Self::Obj) -> bool {
        x.len() == self.arity() && x.iter().all(|c| self.base.contains_object(c))
    }

    fn show_obj(&self, x: &Self::Obj) -> String {
        Self::show_tuple(x, |c| self.base.show_obj(c))
    }

    fn show_mor(&self, f: &Self::Mor) -> String {
        Self::show_tuple(f, |c| self.base.show_mor(c))
    }
}

/// All tuples of length `n` over `items`, first position varying slowest.
pub(crate) fn tuples<T: Clone>(items: &[T], n: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * items.len());
        for prefix in &out {
            for it in items {
                let mut t = prefix.clone();
                t.push(it.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

impl<C: FiniteCategory> FiniteCategory for Product<C> {
    fn objects(&self) -> Vec<Self::Obj> {
        tuples(&self.base.objects(), self.arity())
    }

    fn morphisms(&self) -> Vec<Self::Mor> {
        tuples(&self.base.morphisms(), self.arity())
    }
}

/// Projection `EV_λ: Π_Λ(C) → C`, `F ↦ F(λ)`, `η ↦ η_λ`.
#[derive(Clone, Copy, Debug)]
pub struct Evaluate {
    pub position: usize,
}

impl<C: Category> Functor<Product<C>, C> for Evaluate {
    fn map_obj(&self, x: &Vec<C::Obj>) -> Result<C::Obj> {
        x.get(self.position).cloned().ok_or_else(|| Error::Index(self.position.to_string()))
    }

    fn map_mor(&self, f: &Vec<C::Mor>) -> Result<C::Mor> {
        f.get(self.position).cloned().ok_or_else(|| Error::Index(self.position.to_string()))
    }
}

/// Constant tuples `x ↦ (x, …, x)`.
#[derive(Clone, Copy, Debug)]
pub struct Diagonal {
    pub arity: usize,
}

impl<C: Category> Functor<C, Product<C>> for Diagonal {
    fn map_obj(&self, x: &C::Obj) -> Result<Vec<C::Obj>> {
        Ok(vec![x.clone(); self.arity])
    }

    fn map_mor(&self, f: &C::Mor) -> Result<Vec<C::Mor>> {
        Ok(vec![f.clone(); self.arity])
    }
}

/// A product category written out as a [`FinCategory`], remembering the
/// tuple behind every identifier. Identifiers are `(x1,…,xn)`.
#[derive(Clone, Debug)]
pub struct ProductCategory {
    pub category: Arc<FinCategory>,
    pub base: Arc<FinCategory>,
    pub index: IndexCategory,
    obj_tuples: Vec<Vec<ObjId>>,
    mor_tuples: Vec<Vec<MorId>>,
    obj_lookup: HashMap<Vec<ObjId>, ObjId>,
    mor_lookup: HashMap<Vec<MorId>, MorId>,
}

impl ProductCategory {
    pub fn obj_tuple(&self, x: ObjId) -> &[ObjId] {
        &self.obj_tuples[x.0 as usize]
    }

    pub fn mor_tuple(&self, f: MorId) -> &[MorId] {
        &self.mor_tuples[f.0 as usize]
    }

    pub fn obj_of(&self, t: &[ObjId]) -> Result<ObjId> {
        self.obj_lookup
            .get(t)
            .copied()
            .ok_or_else(|| Error::UnknownObject(format!("{t:?}")))
    }

    pub fn mor_of(&self, t: &[MorId]) -> Result<MorId> {
        self.mor_lookup
            .get(t)
            .copied()
            .ok_or_else(|| Error::UnknownMorphism(format!("{t:?}")))
    }
}

fn tuple_name(parts: impl Iterator<Item = String>) -> String {
    let v: Vec<String> = parts.collect();
    format!("({})", v.join(","))
}

/// Writes out `Π_Λ(B)`. Object count is `|Ob B|^|Λ|`, morphism count
/// `|Mor B|^|Λ|`; the call is refused when the tables would exceed `cap`
/// entries.
pub fn product_category(base: Arc<FinCategory>, index: &IndexCategory, cap: usize) -> Result<ProductCategory> {
    let n = index.len() as u32;
    let composable = base
        .morphism_ids()
        .flat_map(|f| base.morphism_ids().map(move |g| (f, g)))
        .filter(|&(f, g)| base.dst(f) == base.src(g))
        .count() as u128;
    let pow = |b: u128| b.checked_pow(n).unwrap_or(u128::MAX);
    let needed = pow(base.object_count() as u128)
        .saturating_add(pow(base.morphism_count() as u128))
        .saturating_add(pow(composable));
    if needed > cap as u128 {
        return Err(Error::SizeCap {
            what: format!("product category over {} indices", index.len()),
            needed,
            cap: cap as u128,
        });
    }

    let generic = Product::new((*base).clone(), index.clone());
    let obj_tuples = generic.objects();
    let mor_tuples = generic.morphisms();
    let oname = |t: &Vec<ObjId>| tuple_name(t.iter().map(|&x| base.obj_name(x).to_string()));
    let mname = |t: &Vec<MorId>| tuple_name(t.iter().map(|&f| base.mor_name(f).to_string()));

    let objects: Vec<String> = obj_tuples.iter().map(oname).collect();
    let morphisms = mor_tuples
        .iter()
        .map(|t| (mname(t), oname(&generic.source(t)), oname(&generic.target(t))))
        .collect();
    let identity = obj_tuples
        .iter()
        .map(|t| Ok((oname(t), mname(&generic.identity(t)?))))
        .collect::<Result<Vec<_>>>()?;
    let mut composition = Vec::new();
    for f in &mor_tuples {
        for g in &mor_tuples {
            if f.iter().zip(g).all(|(&a, &b)| base.dst(a) == base.src(b)) {
                composition.push((mname(g), mname(f), mname(&generic.compose(f, g)?)));
            }
        }
    }
    let category = FinCategory::from_parts_with_cap(objects, morphisms, identity, composition, cap)?;
    let obj_lookup = obj_tuples.iter().enumerate().map(|(i, t)| (t.clone(), ObjId(i as u32))).collect();
    let mor_lookup = mor_tuples.iter().enumerate().map(|(i, t)| (t.clone(), MorId(i as u32))).collect();
    Ok(ProductCategory {
        category: Arc::new(category),
        base,
        index: index.clone(),
        obj_tuples,
        mor_tuples,
        obj_lookup,
        mor_lookup,
    })
}

/// `EV_λ` on a written-out product, as explicit functor data into the base.
pub fn ev_functor(product: &ProductCategory, lambda: &str) -> Result<FunctorData> {
    let pos = product.index.position(lambda)?;
    FunctorData::from_fns(
        product.category.clone(),
        product.base.clone(),
        |x| Ok(product.obj_tuple(x)[pos]),
        |f| Ok(product.mor_tuple(f)[pos]),
    )
}

/// Inclusion of the base as constant tuples.
pub fn diagonal_functor(product: &ProductCategory) -> Result<FunctorData> {
    let n = product.index.len();
    FunctorData::from_fns(
        product.base.clone(),
        product.category.clone(),
        |x| product.obj_of(&vec![x; n]),
        |f| product.mor_of(&vec![f; n]),
    )
}

/// `B1 × B2` built directly from pairs, independent of [`product_category`].
pub fn binary_product(b1: &FinCategory, b2: &FinCategory) -> Result<FinCategory> {
    let pair = |a: &str, b: &str| format!("({a},{b})");
    let mut objects = Vec::new();
    for x in b1.object_ids() {
        for y in b2.object_ids() {
            objects.push(pair(b1.obj_name(x), b2.obj_name(y)));
        }
    }
    let mut morphisms = Vec::new();
    for f in b1.morphism_ids() {
        for g in b2.morphism_ids() {
            morphisms.push((
                pair(b1.mor_name(f), b2.mor_name(g)),
                pair(b1.obj_name(b1.src(f)), b2.obj_name(b2.src(g))),
                pair(b1.obj_name(b1.dst(f)), b2.obj_name(b2.dst(g))),
            ));
        }
    }
    let mut identity = Vec::new();
    for x in b1.object_ids() {
        for y in b2.object_ids() {
            if let (Some(i), Some(j)) = (b1.identity_of(x), b2.identity_of(y)) {
                identity.push((pair(b1.obj_name(x), b2.obj_name(y)), pair(b1.mor_name(i), b2.mor_name(j))));
            }
        }
    }
    let mut composition = Vec::new();
    for f1 in b1.morphism_ids() {
        for g1 in b1.morphism_ids() {
            let Some(c1) = b1.table(g1, f1).filter(|_| b1.dst(f1) == b1.src(g1)) else { continue };
            for f2 in b2.morphism_ids() {
                for g2 in b2.morphism_ids() {
                    let Some(c2) = b2.table(g2, f2).filter(|_| b2.dst(f2) == b2.src(g2)) else { continue };
                    composition.push((
                        pair(b1.mor_name(g1), b2.mor_name(g2)),
                        pair(b1.mor_name(f1), b2.mor_name(f2)),
                        pair(b1.mor_name(c1), b2.mor_name(c2)),
                    ));
                }
            }
        }
    }
    FinCategory::from_parts(objects, morphisms, identity, composition)
}

/// Functor laws plus bijectivity on objects and on morphisms.
pub fn check_isomorphism(func: &FunctorData) -> Vec<Report> {
    let mut reports = validate_functor(func);
    let (src, dst) = (&*func.source, &*func.target);

    let mut objs = Tally::new("bijective-objects");
    let mut hit = vec![0usize; dst.object_count()];
    for x in src.object_ids() {
        if let Some(y) = func.obj(x) {
            hit[y.0 as usize] += 1;
        }
    }
    for y in dst.object_ids() {
        let n = hit[y.0 as usize];
        objs.check(n == 1, || Failure::new(vec![dst.obj_name(y).into()], format!("{n} preimages"), "1 preimage"));
    }

    let mut mors = Tally::new("bijective-morphisms");
    let mut hit = vec![0usize; dst.morphism_count()];
    for f in src.morphism_ids() {
        if let Some(g) = func.mor(f) {
            hit[g.0 as usize] += 1;
        }
    }
    for g in dst.morphism_ids() {
        let n = hit[g.0 as usize];
        mors.check(n == 1, || Failure::new(vec![dst.mor_name(g).into()], format!("{n} preimages"), "1 preimage"));
    }
    reports.push(objs.finish());
    reports.push(mors.finish());
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::fin::tests::chain3;
    use crate::category::{image_subcategory, DEFAULT_SIZE_CAP};

    fn discrete2() -> FinCategory {
        let s = |x: &str| x.to_string();
        FinCategory::from_parts(
            vec![s("p"), s("q")],
            vec![(s("1p"), s("p"), s("p")), (s("1q"), s("q"), s("q"))],
            vec![(s("p"), s("1p")), (s("q"), s("1q"))],
            vec![(s("1p"), s("1p"), s("1p")), (s("1q"), s("1q"), s("1q"))],
        )
        .unwrap()
    }

    #[test]
    fn discrete_square_has_four_identities() {
        let p = product_category(Arc::new(discrete2()), &IndexCategory::range(2), DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(p.category.object_count(), 4);
        assert_eq!(p.category.morphism_count(), 4);
        assert!(p.category.validate().iter().all(Report::passed));
    }

    #[test]
    fn single_index_is_a_copy_of_the_base() {
        let b = Arc::new(chain3());
        let p = product_category(b.clone(), &IndexCategory::range(1), DEFAULT_SIZE_CAP).unwrap();
        let ev = ev_functor(&p, "1").unwrap();
        assert!(check_isomorphism(&ev).iter().all(Report::passed));
    }

    #[test]
    fn ev_after_diagonal_is_identity() {
        let b = Arc::new(chain3());
        let p = product_category(b.clone(), &IndexCategory::range(3), DEFAULT_SIZE_CAP).unwrap();
        let diag = diagonal_functor(&p).unwrap();
        for lam in ["1", "2", "3"] {
            let ev = ev_functor(&p, lam).unwrap();
            for x in b.object_ids() {
                assert_eq!(ev.obj(diag.obj(x).unwrap()), Some(x));
            }
            for f in b.morphism_ids() {
                assert_eq!(ev.mor(diag.mor(f).unwrap()), Some(f));
            }
        }
    }

    #[test]
    fn second_projection_matches_enumeration() {
        let b = Arc::new(chain3());
        let p = product_category(b.clone(), &IndexCategory::range(2), DEFAULT_SIZE_CAP).unwrap();
        let ev2 = ev_functor(&p, "2").unwrap();
        assert!(validate_functor(&ev2).iter().all(Report::passed));
        // Direct enumeration: object "(x,y)" goes to y.
        for x in b.object_ids() {
            for y in b.object_ids() {
                let name = format!("({},{})", b.obj_name(x), b.obj_name(y));
                let id = p.category.object(&name).unwrap();
                assert_eq!(ev2.obj(id), Some(y));
            }
        }
        let img = image_subcategory(&ev2).unwrap();
        assert_eq!(img.to_file(), b.to_file());
    }

    #[test]
    fn ev_rejects_unknown_index() {
        let p = product_category(Arc::new(chain3()), &IndexCategory::range(2), DEFAULT_SIZE_CAP).unwrap();
        assert!(matches!(ev_functor(&p, "7"), Err(Error::Index(_))));
    }

    #[test]
    fn product_respects_size_cap() {
        let err = product_category(Arc::new(chain3()), &IndexCategory::range(3), 100);
        assert!(matches!(err, Err(Error::SizeCap { .. })));
    }
}
