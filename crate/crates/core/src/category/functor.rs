use std::collections::{BTreeMap, BTreeSet};
use std::marker::PhantomData;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Category, CategoryFile, FinCategory, Functor, MorId, ObjId, Scope};
use crate::error::{Error, Result};
use crate::report::{Failure, Report, Tally};

/// A functor between finite categories, stored as explicit maps.
///
/// Entries may be missing (`None`) when loaded from a file; such gaps are
/// reported by [`validate_functor`] rather than rejected at load time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorData {
    pub source: Arc<FinCategory>,
    pub target: Arc<FinCategory>,
    object_map: Vec<Option<ObjId>>,
    morphism_map: Vec<Option<MorId>>,
}

/// Either an inline category or a path to a category file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CategoryRef {
    Path(String),
    Inline(CategoryFile),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorFile {
    pub source: CategoryRef,
    pub target: CategoryRef,
    pub object_map: BTreeMap<String, String>,
    pub morphism_map: BTreeMap<String, String>,
}

/// Parses a functor file whose categories are inline. Path references are
/// rejected here; use [`FunctorData::from_file`] with a resolver for those.
pub fn parse_functor(text: &str) -> Result<FunctorData> {
    let file: FunctorFile = serde_json::from_str(text)?;
    FunctorData::from_file(&file, |p| Err(Error::Parse(format!("category path {p} cannot be resolved here"))))
}

impl FunctorData {
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        object_map: Vec<Option<ObjId>>,
        morphism_map: Vec<Option<MorId>>,
    ) -> Result<Self> {
        if object_map.len() != source.object_count() || morphism_map.len() != source.morphism_count() {
            return Err(Error::Invalid("functor maps do not match the source category's size".into()));
        }
        if object_map.iter().flatten().any(|x| !target.contains_object(x))
            || morphism_map
                .iter()
                .flatten()
                .any(|f| f.0 as usize >= target.morphism_count())
        {
            return Err(Error::Invalid("functor maps into identifiers the target does not have".into()));
        }
        Ok(FunctorData {
            source,
            target,
            object_map,
            morphism_map,
        })
    }

    /// Builds a total functor from closures over identifiers.
    pub fn from_fns(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        obj: impl Fn(ObjId) -> Result<ObjId>,
        mor: impl Fn(MorId) -> Result<MorId>,
    ) -> Result<Self> {
        let object_map = source.object_ids().map(|x| obj(x).map(Some)).collect::<Result<_>>()?;
        let morphism_map = source.morphism_ids().map(|f| mor(f).map(Some)).collect::<Result<_>>()?;
        Self::new(source, target, object_map, morphism_map)
    }

    pub fn identity(cat: Arc<FinCategory>) -> Self {
        let object_map = cat.object_ids().map(Some).collect();
        let morphism_map = cat.morphism_ids().map(Some).collect();
        FunctorData {
            source: cat.clone(),
            target: cat,
            object_map,
            morphism_map,
        }
    }

    pub fn from_file(file: &FunctorFile, resolve: impl Fn(&str) -> Result<FinCategory>) -> Result<Self> {
        let load = |r: &CategoryRef| match r {
            CategoryRef::Inline(c) => FinCategory::from_file(c),
            CategoryRef::Path(p) => resolve(p),
        };
        let source = Arc::new(load(&file.source)?);
        let target = Arc::new(load(&file.target)?);
        let mut object_map = vec![None; source.object_count()];
        for (k, v) in &file.object_map {
            object_map[source.object(k)?.0 as usize] = Some(target.object(v)?);
        }
        let mut morphism_map = vec![None; source.morphism_count()];
        for (k, v) in &file.morphism_map {
            morphism_map[source.morphism(k)?.0 as usize] = Some(target.morphism(v)?);
        }
        Self::new(source, target, object_map, morphism_map)
    }

    pub fn to_file(&self) -> FunctorFile {
        let object_map = self
            .source
            .object_ids()
            .filter_map(|x| {
                self.object_map[x.0 as usize]
                    .map(|y| (self.source.obj_name(x).to_string(), self.target.obj_name(y).to_string()))
            })
            .collect();
        let morphism_map = self
            .source
            .morphism_ids()
            .filter_map(|f| {
                self.morphism_map[f.0 as usize]
                    .map(|g| (self.source.mor_name(f).to_string(), self.target.mor_name(g).to_string()))
            })
            .collect();
        FunctorFile {
            source: CategoryRef::Inline(self.source.to_file()),
            target: CategoryRef::Inline(self.target.to_file()),
            object_map,
            morphism_map,
        }
    }

    pub fn obj(&self, x: ObjId) -> Option<ObjId> {
        self.object_map.get(x.0 as usize).copied().flatten()
    }

    pub fn mor(&self, f: MorId) -> Option<MorId> {
        self.morphism_map.get(f.0 as usize).copied().flatten()
    }

    /// Replaces one morphism image. Intended for mutation testing.
    pub fn with_morphism(&self, f: MorId, image: MorId) -> FunctorData {
        let mut out = self.clone();
        out.morphism_map[f.0 as usize] = Some(image);
        out
    }

    /// Replaces one object image. Intended for mutation testing.
    pub fn with_object(&self, x: ObjId, image: ObjId) -> FunctorData {
        let mut out = self.clone();
        out.object_map[x.0 as usize] = Some(image);
        out
    }
}

impl Functor<FinCategory, FinCategory> for FunctorData {
    fn map_obj(&self, x: &ObjId) -> Result<ObjId> {
        self.obj(*x)
            .ok_or_else(|| Error::Lookup(format!("functor has no image for object {}", self.source.show_obj(x))))
    }

    fn map_mor(&self, f: &MorId) -> Result<MorId> {
        self.mor(*f)
            .ok_or_else(|| Error::Lookup(format!("functor has no image for morphism {}", self.source.show_mor(f))))
    }
}

/// Exhaustive functor-law check for finite functor data.
pub fn validate_functor(func: &FunctorData) -> Vec<Report> {
    let (src, dst) = (&*func.source, &*func.target);
    let mut total = Tally::new("functor-total");
    for x in src.object_ids() {
        total.check(func.obj(x).is_some(), || {
            Failure::new(vec![src.obj_name(x).into()], "unmapped", "mapped")
        });
    }
    for f in src.morphism_ids() {
        total.check(func.mor(f).is_some(), || {
            Failure::new(vec![src.mor_name(f).into()], "unmapped", "mapped")
        });
    }

    let mut typing = Tally::new("functor-typing");
    for f in src.morphism_ids() {
        let (Some(ff), Some(fx), Some(fy)) = (func.mor(f), func.obj(src.src(f)), func.obj(src.dst(f))) else {
            continue;
        };
        typing.check(dst.src(ff) == fx && dst.dst(ff) == fy, || {
            Failure::new(
                vec![src.mor_name(f).into(), dst.mor_name(ff).into()],
                format!("{} -> {}", dst.obj_name(dst.src(ff)), dst.obj_name(dst.dst(ff))),
                format!("{} -> {}", dst.obj_name(fx), dst.obj_name(fy)),
            )
        });
    }

    let mut ident = Tally::new("functor-identity");
    for x in src.object_ids() {
        let (Some(idx), Some(fx)) = (src.identity_of(x), func.obj(x)) else { continue };
        let Some(fid) = func.mor(idx) else { continue };
        match dst.identity_of(fx) {
            Some(idfx) => ident.check(fid == idfx, || {
                Failure::new(vec![src.obj_name(x).into()], dst.mor_name(fid), dst.mor_name(idfx))
            }),
            None => ident.fail(Failure::new(vec![src.obj_name(x).into()], dst.mor_name(fid), "<no identity>")),
        }
    }

    let mut comp = Tally::new("functor-composition");
    for f in src.morphism_ids() {
        for g in src.morphism_ids() {
            if src.dst(f) != src.src(g) {
                continue;
            }
            let Some(gf) = src.table(g, f) else { continue };
            let (Some(ff), Some(fg), Some(fgf)) = (func.mor(f), func.mor(g), func.mor(gf)) else {
                continue;
            };
            let rhs = if dst.dst(ff) == dst.src(fg) { dst.table(fg, ff) } else { None };
            comp.check(rhs == Some(fgf), || {
                Failure::new(
                    vec![src.mor_name(g).into(), src.mor_name(f).into()],
                    dst.mor_name(fgf),
                    rhs.map(|r| dst.mor_name(r).to_string())
                        .unwrap_or_else(|| "<not composable>".into()),
                )
            });
        }
    }
    vec![total.finish(), typing.finish(), ident.finish(), comp.finish()]
}

/// The subcategory of the target spanned by the functor's image: image
/// objects, image morphisms, and every composite of image morphisms (so the
/// table is closed). Identifiers are the target's.
pub fn image_subcategory(func: &FunctorData) -> Result<FinCategory> {
    let dst = &*func.target;
    let objs: BTreeSet<ObjId> = func.source.object_ids().filter_map(|x| func.obj(x)).collect();
    let mut mors: BTreeSet<MorId> = func.source.morphism_ids().filter_map(|f| func.mor(f)).collect();
    for &x in &objs {
        if let Some(id) = dst.identity_of(x) {
            mors.insert(id);
        }
    }
    loop {
        let mut added = Vec::new();
        for &f in &mors {
            for &g in &mors {
                if dst.dst(f) == dst.src(g) {
                    let gf = dst.compose(&f, &g)?;
                    if !mors.contains(&gf) {
                        added.push(gf);
                    }
                }
            }
        }
        if added.is_empty() {
            break;
        }
        mors.extend(added);
    }
    let objects: Vec<String> = objs.iter().map(|&x| dst.obj_name(x).to_string()).collect();
    let morphisms = mors
        .iter()
        .map(|&f| {
            (
                dst.mor_name(f).to_string(),
                dst.obj_name(dst.src(f)).to_string(),
                dst.obj_name(dst.dst(f)).to_string(),
            )
        })
        .collect();
    let identity = objs
        .iter()
        .filter_map(|&x| dst.identity_of(x).map(|i| (dst.obj_name(x).to_string(), dst.mor_name(i).to_string())))
        .collect();
    let mut composition = Vec::new();
    for &f in &mors {
        for &g in &mors {
            if dst.dst(f) == dst.src(g) {
                let gf = dst.compose(&f, &g)?;
                composition.push((
                    dst.mor_name(g).to_string(),
                    dst.mor_name(f).to_string(),
                    dst.mor_name(gf).to_string(),
                ));
            }
        }
    }
    FinCategory::from_parts(objects, morphisms, identity, composition)
}

/// Functor laws on a scope, for any pair of carriers: typing, identities
/// and composites of composable scope pairs are preserved.
pub fn check_functor_laws<A, B, F>(func: &F, a: &A, b: &B, scope: &Scope<A>) -> Result<Vec<Report>>
where
    A: Category,
    B: Category,
    F: Functor<A, B>,
{
    let mut ident = Tally::new("functor-identity");
    for x in &scope.objects {
        let lhs = func.map_mor(&a.identity(x)?)?;
        let rhs = b.identity(&func.map_obj(x)?)?;
        ident.check(lhs == rhs, || Failure::new(vec![a.show_obj(x)], b.show_mor(&lhs), b.show_mor(&rhs)));
    }
    let mut typing = Tally::new("functor-typing");
    for f in &scope.morphisms {
        let ff = func.map_mor(f)?;
        let (fx, fy) = (func.map_obj(&a.source(f))?, func.map_obj(&a.target(f))?);
        typing.check(b.source(&ff) == fx && b.target(&ff) == fy, || {
            Failure::new(
                vec![a.show_mor(f)],
                format!("{} -> {}", b.show_obj(&b.source(&ff)), b.show_obj(&b.target(&ff))),
                format!("{} -> {}", b.show_obj(&fx), b.show_obj(&fy)),
            )
        });
    }
    let mut comp = Tally::new("functor-composition");
    for f in &scope.morphisms {
        for g in &scope.morphisms {
            if a.target(f) != a.source(g) {
                continue;
            }
            let lhs = func.map_mor(&a.compose(f, g)?)?;
            let (ff, fg) = (func.map_mor(f)?, func.map_mor(g)?);
            match b.compose(&ff, &fg) {
                Ok(rhs) => comp.check(lhs == rhs, || {
                    Failure::new(vec![a.show_mor(g), a.show_mor(f)], b.show_mor(&lhs), b.show_mor(&rhs))
                }),
                Err(e) => comp.fail(Failure::new(vec![a.show_mor(g), a.show_mor(f)], b.show_mor(&lhs), e.to_string())),
            }
        }
    }
    Ok(vec![ident.finish(), typing.finish(), comp.finish()])
}

/// The identity functor on any carrier.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdentityFunctor;

impl<C: Category> Functor<C, C> for IdentityFunctor {
    fn map_obj(&self, x: &C::Obj) -> Result<C::Obj> {
        Ok(x.clone())
    }
    fn map_mor(&self, f: &C::Mor) -> Result<C::Mor> {
        Ok(f.clone())
    }
}

/// `second ∘ first`, passing through the carrier `M`.
pub struct Composite<F1, F2, M> {
    pub first: F1,
    pub second: F2,
    _mid: PhantomData<fn() -> M>,
}

impl<F1, F2, M> Composite<F1, F2, M> {
    pub fn new(first: F1, second: F2) -> Self {
        Composite {
            first,
            second,
            _mid: PhantomData,
        }
    }
}

impl<A, M, B, F1, F2> Functor<A, B> for Composite<F1, F2, M>
where
    A: Category,
    M: Category,
    B: Category,
    F1: Functor<A, M>,
    F2: Functor<M, B>,
{
    fn map_obj(&self, x: &A::Obj) -> Result<B::Obj> {
        self.second.map_obj(&self.first.map_obj(x)?)
    }
    fn map_mor(&self, f: &A::Mor) -> Result<B::Mor> {
        self.second.map_mor(&self.first.map_mor(f)?)
    }
}

/// Groups scope elements by image; each group lists preimages in scope order.
pub(crate) fn group_by_image<T: Clone, I: Clone + PartialEq>(items: &[T], image: impl Fn(&T) -> Result<I>) -> Result<Vec<(I, Vec<T>)>> {
    let mut groups: Vec<(I, Vec<T>)> = Vec::new();
    for it in items {
        let img = image(it)?;
        match groups.iter_mut().find(|(i, _)| *i == img) {
            Some((_, g)) => g.push(it.clone()),
            None => groups.push((img, vec![it.clone()])),
        }
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::super::fin::tests::chain3;
    use super::*;

    fn s(x: &str) -> String {
        x.to_string()
    }

    #[test]
    fn identity_functor_is_valid() {
        let c = Arc::new(chain3());
        let id = FunctorData::identity(c.clone());
        assert!(validate_functor(&id).iter().all(Report::passed));
        let img = image_subcategory(&id).unwrap();
        assert_eq!(img.to_file(), c.to_file());
    }

    /// chain3 plus a second arrow h: a→c parallel to g∘f.
    fn chain3_with_parallel() -> Arc<FinCategory> {
        let mut file = chain3().to_file();
        file.morphisms.push(crate::category::MorphismEntry { id: s("h"), src: s("a"), dst: s("c") });
        file.composition.push([s("h"), s("1a"), s("h")]);
        file.composition.push([s("1c"), s("h"), s("h")]);
        Arc::new(FinCategory::from_file(&file).unwrap())
    }

    #[test]
    fn broken_composition_is_reported_once() {
        let c = Arc::new(chain3());
        let t = chain3_with_parallel();
        let tt = t.clone();
        let cc = c.clone();
        let incl = FunctorData::from_fns(
            c.clone(),
            t.clone(),
            |x| tt.object(cc.obj_name(x)),
            |f| tt.morphism(cc.mor_name(f)),
        )
        .unwrap();
        assert!(validate_functor(&incl).iter().all(Report::passed));
        let bad = incl.with_morphism(c.morphism("gf").unwrap(), t.morphism("h").unwrap());
        let fails: Vec<_> = validate_functor(&bad).into_iter().filter(|r| !r.passed()).collect();
        assert_eq!(fails.len(), 1);
        assert_eq!(fails[0].law, "functor-composition");
        assert_eq!(fails[0].failures.len(), 1);
        assert_eq!(fails[0].failures[0].witness, vec![s("g"), s("f")]);
    }

    /// Objects x1, x2 → y; the two arrows u: x1→t, v: x2→t collapse.
    fn collapse_pair() -> (Arc<FinCategory>, Arc<FinCategory>) {
        let src = FinCategory::from_parts(
            vec![s("x1"), s("x2"), s("t")],
            vec![
                (s("1x1"), s("x1"), s("x1")),
                (s("1x2"), s("x2"), s("x2")),
                (s("1t"), s("t"), s("t")),
                (s("u"), s("x1"), s("t")),
                (s("v"), s("x2"), s("t")),
            ],
            vec![(s("x1"), s("1x1")), (s("x2"), s("1x2")), (s("t"), s("1t"))],
            vec![
                (s("1x1"), s("1x1"), s("1x1")),
                (s("1x2"), s("1x2"), s("1x2")),
                (s("1t"), s("1t"), s("1t")),
                (s("u"), s("1x1"), s("u")),
                (s("1t"), s("u"), s("u")),
                (s("v"), s("1x2"), s("v")),
                (s("1t"), s("v"), s("v")),
            ],
        )
        .unwrap();
        let dst = FinCategory::from_parts(
            vec![s("y"), s("t")],
            vec![(s("1y"), s("y"), s("y")), (s("1t"), s("t"), s("t")), (s("w"), s("y"), s("t"))],
            vec![(s("y"), s("1y")), (s("t"), s("1t"))],
            vec![
                (s("1y"), s("1y"), s("1y")),
                (s("1t"), s("1t"), s("1t")),
                (s("w"), s("1y"), s("w")),
                (s("1t"), s("w"), s("w")),
            ],
        )
        .unwrap();
        (Arc::new(src), Arc::new(dst))
    }

    #[test]
    fn collapsing_functor_has_smaller_closed_image() {
        let (src, dst) = collapse_pair();
        let d = dst.clone();
        let func = FunctorData::from_fns(
            src.clone(),
            dst.clone(),
            |x| d.object(if src.obj_name(x) == "t" { "t" } else { "y" }),
            |f| {
                d.morphism(match src.mor_name(f) {
                    "1x1" | "1x2" => "1y",
                    "1t" => "1t",
                    _ => "w",
                })
            },
        )
        .unwrap();
        assert!(validate_functor(&func).iter().all(Report::passed));
        let img = image_subcategory(&func).unwrap();
        assert_eq!(img.object_count(), 2);
        assert!(img.object_count() < src.object_count());
        // Closure: every composable pair of the image has its entry.
        assert!(img.validate().iter().all(Report::passed));
    }

    #[test]
    fn functor_file_round_trip() {
        let c = Arc::new(chain3());
        let id = FunctorData::identity(c);
        let text = serde_json::to_string(&id.to_file()).unwrap();
        let back = parse_functor(&text).unwrap();
        assert_eq!(back, id);
    }

    #[test]
    fn functor_file_with_unknown_ids_fails() {
        let c = chain3().to_file();
        let file = FunctorFile {
            source: CategoryRef::Inline(c.clone()),
            target: CategoryRef::Inline(c),
            object_map: [(s("a"), s("nope"))].into_iter().collect(),
            morphism_map: BTreeMap::new(),
        };
        let text = serde_json::to_string(&file).unwrap();
        assert!(matches!(parse_functor(&text), Err(Error::UnknownObject(_))));
    }
}
