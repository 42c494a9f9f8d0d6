//! On-disk forms for the finite inputs of the constructions in this module:
//! functors out of a tabulated monoidal category, lax monoidal functors,
//! duality data and bases.
//!
//! Categories and monoidal categories may be given inline or by path.
//! Paths are handed to a resolver that returns the referenced file's text;
//! the `parse_*` entry points reject paths.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::base::{Base, Witness};
use super::lax::LaxMonoidalFunctor;
use crate::category::{
    product_category, Category, CategoryFile, CategoryRef, FinCategory, Functor, FunctorData, IndexCategory, MorId,
    ObjId, Product, ProductCategory, Scope, DEFAULT_SIZE_CAP,
};
use crate::error::{Error, Result};
use crate::monoidal::{DualityData, FinMonoidal, Monoidal, MonoidalFile};

/// Either an inline monoidal category or a path to a monoidal file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonoidalRef {
    Path(String),
    Inline(Box<MonoidalFile>),
}

/// Object and morphism maps by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub object_map: BTreeMap<String, String>,
    pub morphism_map: BTreeMap<String, String>,
}

/// A functor out of a monoidal category into a plain one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImageFile {
    pub source: MonoidalRef,
    pub target: CategoryRef,
    pub functor: MapFile,
}

/// A functor between monoidal categories with comparison maps. Missing
/// `comparison` means identities; missing `unit_map` means the identity
/// of `F(I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaxFile {
    pub source: MonoidalRef,
    pub target: MonoidalRef,
    pub functor: MapFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_map: Option<String>,
}

/// `ev: X*⊗X → I` and `coev: I → X⊗X*` in a tabulated monoidal category.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualityFile {
    pub monoidal: MonoidalRef,
    pub object: String,
    pub dual: String,
    pub ev: String,
    pub coev: String,
}

/// A base: a monoidal `B`, a target `D`, an index set, the pasting functor
/// on the written-out product (objects named `(x1,…,xn)`) and the
/// decomposition functor back. Without `witness` the round trip must be
/// the identity on the nose; with it, `witness` names `w_X: *(G(X)) → X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseFile {
    pub base: MonoidalRef,
    pub target: CategoryRef,
    pub index: Vec<String>,
    pub pasting: MapFile,
    pub decomposition: MapFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, String>>,
}

/// Returns the text of the file at a path.
pub type Resolver<'a> = &'a dyn Fn(&str) -> Result<String>;

fn no_paths(p: &str) -> Result<String> {
    Err(Error::Parse(format!("path {p} cannot be resolved here")))
}

pub fn load_category(r: &CategoryRef, resolve: Resolver<'_>, cap: usize) -> Result<FinCategory> {
    match r {
        CategoryRef::Inline(c) => FinCategory::from_file_with_cap(c, cap),
        CategoryRef::Path(p) => {
            let file: CategoryFile = serde_json::from_str(&resolve(p)?)?;
            FinCategory::from_file_with_cap(&file, cap)
        }
    }
}

pub fn load_monoidal(r: &MonoidalRef, resolve: Resolver<'_>, cap: usize) -> Result<FinMonoidal> {
    let file = match r {
        MonoidalRef::Inline(m) => (**m).clone(),
        MonoidalRef::Path(p) => serde_json::from_str(&resolve(p)?)?,
    };
    FinMonoidal::from_file_with_cap(&file, |p| load_category(&CategoryRef::Path(p.into()), resolve, cap), cap)
}

fn functor_from_map(source: Arc<FinCategory>, target: Arc<FinCategory>, map: &MapFile) -> Result<FunctorData> {
    let mut object_map = vec![None; source.object_count()];
    for (k, v) in &map.object_map {
        object_map[source.object(k)?.0 as usize] = Some(target.object(v)?);
    }
    let mut morphism_map = vec![None; source.morphism_count()];
    for (k, v) in &map.morphism_map {
        morphism_map[source.morphism(k)?.0 as usize] = Some(target.morphism(v)?);
    }
    FunctorData::new(source, target, object_map, morphism_map)
}

/// Every object and morphism of a tabulated category.
pub fn full_scope<C: Category<Obj = ObjId, Mor = MorId>>(cat: &FinCategory) -> Scope<C> {
    Scope::new(cat.object_ids().collect(), cat.morphism_ids().collect())
}

/// A functor from a tabulated monoidal category.
#[derive(Clone, Debug)]
pub struct FinImage {
    pub source: FinMonoidal,
    pub target: Arc<FinCategory>,
    pub functor: FunctorData,
}

impl FinImage {
    pub fn from_file(file: &ImageFile, resolve: Resolver<'_>, cap: usize) -> Result<Self> {
        let source = load_monoidal(&file.source, resolve, cap)?;
        let target = Arc::new(load_category(&file.target, resolve, cap)?);
        let functor = functor_from_map(source.category().clone(), target.clone(), &file.functor)?;
        Ok(FinImage { source, target, functor })
    }
}

pub fn parse_image(text: &str) -> Result<FinImage> {
    FinImage::from_file(&serde_json::from_str(text)?, &no_paths, DEFAULT_SIZE_CAP)
}

/// A lax monoidal functor between tabulated monoidal categories.
#[derive(Clone, Debug)]
pub struct FinLax {
    pub source: FinMonoidal,
    pub target: FinMonoidal,
    pub functor: FunctorData,
    comparison: Option<HashMap<(ObjId, ObjId), MorId>>,
    unit_map: Option<MorId>,
}

impl FinLax {
    pub fn from_file(file: &LaxFile, resolve: Resolver<'_>, cap: usize) -> Result<Self> {
        let source = load_monoidal(&file.source, resolve, cap)?;
        let target = load_monoidal(&file.target, resolve, cap)?;
        let functor = functor_from_map(source.category().clone(), target.category().clone(), &file.functor)?;
        let comparison = match &file.comparison {
            None => None,
            Some(rows) => {
                let mut table = HashMap::new();
                for [m, n, c] in rows {
                    let key = (source.category().object(m)?, source.category().object(n)?);
                    if table.insert(key, target.category().morphism(c)?).is_some() {
                        return Err(Error::Invalid(format!("comparison at {m}, {n} given twice")));
                    }
                }
                Some(table)
            }
        };
        let unit_map = file.unit_map.as_deref().map(|i| target.category().morphism(i)).transpose()?;
        Ok(FinLax {
            source,
            target,
            functor,
            comparison,
            unit_map,
        })
    }

    pub fn lax(&self) -> Result<LaxMonoidalFunctor<'_, FinMonoidal, FinMonoidal, &FunctorData>> {
        let (mc, md) = (&self.source, &self.target);
        let f = &self.functor;
        let unit_map = match self.unit_map {
            Some(i) => i,
            None => md.identity(&Functor::<FinMonoidal, FinMonoidal>::map_obj(f, &mc.unit())?)?,
        };
        let table = self.comparison.as_ref();
        Ok(LaxMonoidalFunctor::new(
            f,
            move |m: &ObjId, n: &ObjId| match table {
                Some(t) => t.get(&(*m, *n)).copied().ok_or_else(|| {
                    Error::Lookup(format!("no comparison at {}, {}", mc.show_obj(m), mc.show_obj(n)))
                }),
                None => {
                    let fm = Functor::<FinMonoidal, FinMonoidal>::map_obj(f, m)?;
                    let fn_ = Functor::<FinMonoidal, FinMonoidal>::map_obj(f, n)?;
                    md.identity(&md.tensor_obj(&fm, &fn_)?)
                }
            },
            unit_map,
        ))
    }
}

pub fn parse_lax(text: &str) -> Result<FinLax> {
    FinLax::from_file(&serde_json::from_str(text)?, &no_paths, DEFAULT_SIZE_CAP)
}

/// Duality data in a tabulated monoidal category.
#[derive(Clone, Debug)]
pub struct FinDuality {
    pub monoidal: FinMonoidal,
    pub data: DualityData<FinMonoidal>,
}

impl FinDuality {
    pub fn from_file(file: &DualityFile, resolve: Resolver<'_>, cap: usize) -> Result<Self> {
        let monoidal = load_monoidal(&file.monoidal, resolve, cap)?;
        let c = monoidal.category();
        let data = DualityData::new(
            c.object(&file.object)?,
            c.object(&file.dual)?,
            c.morphism(&file.ev)?,
            c.morphism(&file.coev)?,
        );
        Ok(FinDuality { monoidal, data })
    }
}

pub fn parse_duality(text: &str) -> Result<FinDuality> {
    FinDuality::from_file(&serde_json::from_str(text)?, &no_paths, DEFAULT_SIZE_CAP)
}

/// A base given by finite tables.
#[derive(Clone, Debug)]
pub struct FinBase {
    pub product: Product<FinMonoidal>,
    pub written: ProductCategory,
    pub target: Arc<FinCategory>,
    pub pasting: FunctorData,
    pub decomposition: FunctorData,
    witness: Option<HashMap<ObjId, MorId>>,
}

/// The pasting functor read on tuples.
#[derive(Clone, Copy, Debug)]
pub struct Pasting<'a> {
    written: &'a ProductCategory,
    data: &'a FunctorData,
}

impl Functor<Product<FinMonoidal>, FinCategory> for Pasting<'_> {
    fn map_obj(&self, x: &Vec<ObjId>) -> Result<ObjId> {
        Functor::<FinCategory, FinCategory>::map_obj(self.data, &self.written.obj_of(x)?)
    }
    fn map_mor(&self, f: &Vec<MorId>) -> Result<MorId> {
        Functor::<FinCategory, FinCategory>::map_mor(self.data, &self.written.mor_of(f)?)
    }
}

/// The decomposition functor read into tuples.
#[derive(Clone, Copy, Debug)]
pub struct Decomposing<'a> {
    written: &'a ProductCategory,
    data: &'a FunctorData,
}

impl Functor<FinCategory, Product<FinMonoidal>> for Decomposing<'_> {
    fn map_obj(&self, x: &ObjId) -> Result<Vec<ObjId>> {
        let y = Functor::<FinCategory, FinCategory>::map_obj(self.data, x)?;
        Ok(self.written.obj_tuple(y).to_vec())
    }
    fn map_mor(&self, f: &MorId) -> Result<Vec<MorId>> {
        let g = Functor::<FinCategory, FinCategory>::map_mor(self.data, f)?;
        Ok(self.written.mor_tuple(g).to_vec())
    }
}

impl FinBase {
    pub fn from_file(file: &BaseFile, resolve: Resolver<'_>, cap: usize) -> Result<Self> {
        let base = load_monoidal(&file.base, resolve, cap)?;
        let target = Arc::new(load_category(&file.target, resolve, cap)?);
        let index = IndexCategory::new(file.index.clone())?;
        let written = product_category(base.category().clone(), &index, cap)?;
        let pasting = functor_from_map(written.category.clone(), target.clone(), &file.pasting)?;
        let decomposition = functor_from_map(target.clone(), written.category.clone(), &file.decomposition)?;
        let witness = match &file.witness {
            None => None,
            Some(w) => Some(
                w.iter()
                    .map(|(x, m)| Ok((target.object(x)?, target.morphism(m)?)))
                    .collect::<Result<HashMap<_, _>>>()?,
            ),
        };
        Ok(FinBase {
            product: Product::new(base, index),
            written,
            target,
            pasting,
            decomposition,
            witness,
        })
    }

    pub fn base(&self) -> Base<'_, FinMonoidal, FinCategory, Pasting<'_>, Decomposing<'_>> {
        let witness = match &self.witness {
            None => Witness::Equality,
            Some(w) => {
                let t = &self.target;
                Witness::Components(Box::new(move |x: &ObjId| {
                    w.get(x)
                        .copied()
                        .ok_or_else(|| Error::Lookup(format!("no witness component at {}", t.obj_name(*x))))
                }))
            }
        };
        Base {
            product: &self.product,
            target: &self.target,
            star: Pasting {
                written: &self.written,
                data: &self.pasting,
            },
            decompose: Decomposing {
                written: &self.written,
                data: &self.decomposition,
            },
            witness,
        }
    }

    /// The whole target.
    pub fn scope(&self) -> Scope<FinCategory> {
        full_scope(&self.target)
    }

    /// The whole product, as tuples.
    pub fn product_scope(&self) -> Scope<Product<FinMonoidal>> {
        let w = &self.written;
        Scope::new(
            w.category.object_ids().map(|x| w.obj_tuple(x).to_vec()).collect(),
            w.category.morphism_ids().map(|f| w.mor_tuple(f).to_vec()).collect(),
        )
    }
}

pub fn parse_base(text: &str) -> Result<FinBase> {
    FinBase::from_file(&serde_json::from_str(text)?, &no_paths, DEFAULT_SIZE_CAP)
}

/// Writes an induced tensor out as a monoidal file over `category`, whose
/// names must match the tensor's display strings.
pub fn tabulate_on<T: Monoidal>(tensor: &T, category: &FinCategory, scope: &Scope<T>) -> Result<MonoidalFile> {
    let on = |x: &T::Obj| tensor.show_obj(x);
    let mn = |f: &T::Mor| tensor.show_mor(f);
    let mut tensor_obj = Vec::new();
    let mut associator = Vec::new();
    let mut left_unitor = Vec::new();
    let mut right_unitor = Vec::new();
    for x in &scope.objects {
        for y in &scope.objects {
            tensor_obj.push([on(x), on(y), on(&tensor.tensor_obj(x, y)?)]);
            for z in &scope.objects {
                associator.push([on(x), on(y), on(z), mn(&tensor.associator(x, y, z)?)]);
            }
        }
        left_unitor.push([on(x), mn(&tensor.left_unitor(x)?)]);
        right_unitor.push([on(x), mn(&tensor.right_unitor(x)?)]);
    }
    let mut tensor_mor = Vec::new();
    for f in &scope.morphisms {
        for g in &scope.morphisms {
            tensor_mor.push([mn(f), mn(g), mn(&tensor.tensor_mor(f, g)?)]);
        }
    }
    tensor_obj.sort();
    tensor_mor.sort();
    associator.sort();
    left_unitor.sort();
    right_unitor.sort();
    Ok(MonoidalFile {
        category: CategoryRef::Inline(category.to_file()),
        unit: on(&tensor.unit()),
        strict: tensor.is_strict(),
        tensor_obj,
        tensor_mor,
        associator,
        left_unitor,
        right_unitor,
        braiding: None,
        symmetric: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::induced::{induce_tensor_from_base, validate_base, verify_lax_monoidal};
    use crate::monoidal::samples::{cyclic_group, max_chain};
    use crate::report::all_passed;

    fn inline(m: &FinMonoidal) -> MonoidalRef {
        MonoidalRef::Inline(Box::new(m.to_file()))
    }

    fn trivial_base(n: usize) -> BaseFile {
        let m = max_chain(n);
        let c = m.category();
        let mut pasting = MapFile::default();
        let mut decomposition = MapFile::default();
        for x in c.object_ids() {
            let name = c.obj_name(x).to_string();
            pasting.object_map.insert(format!("({name})"), name.clone());
            decomposition.object_map.insert(name.clone(), format!("({name})"));
        }
        for f in c.morphism_ids() {
            let name = c.mor_name(f).to_string();
            pasting.morphism_map.insert(format!("({name})"), name.clone());
            decomposition.morphism_map.insert(name.clone(), format!("({name})"));
        }
        BaseFile {
            base: inline(&m),
            target: CategoryRef::Inline(c.to_file()),
            index: vec!["1".into()],
            pasting,
            decomposition,
            witness: None,
        }
    }

    #[test]
    fn trivial_base_loads_and_induces_the_base_tensor() {
        let text = serde_json::to_string(&trivial_base(3)).unwrap();
        let fb = parse_base(&text).unwrap();
        let base = fb.base();
        assert!(all_passed(&validate_base(&base, &fb.scope(), &fb.product_scope()).unwrap()));
        let induced = induce_tensor_from_base(&base, &fb.scope(), &fb.product_scope()).unwrap();
        let table = tabulate_on(&induced.tensor, &fb.target, &induced.scope).unwrap();
        let own = max_chain(3).to_file();
        assert_eq!(table.tensor_obj, own.tensor_obj);
        assert_eq!(table.tensor_mor, own.tensor_mor);
    }

    #[test]
    fn identity_witness_components_are_accepted() {
        let mut file = trivial_base(2);
        let c = max_chain(2);
        let cat = c.category();
        file.witness = Some(
            cat.object_ids()
                .map(|x| (cat.obj_name(x).to_string(), cat.mor_name(cat.identity_of(x).unwrap()).to_string()))
                .collect(),
        );
        let fb = parse_base(&serde_json::to_string(&file).unwrap()).unwrap();
        let base = fb.base();
        let reports = validate_base(&base, &fb.scope(), &fb.product_scope()).unwrap();
        assert!(reports.iter().any(|r| r.law == "witness-naturality"));
        assert!(all_passed(&reports));
        assert!(induce_tensor_from_base(&base, &fb.scope(), &fb.product_scope()).is_err());
    }

    #[test]
    fn identity_comparisons_make_a_strong_functor() {
        let m = cyclic_group(3);
        let c = m.category();
        let functor = MapFile {
            object_map: [("*".to_string(), "*".to_string())].into_iter().collect(),
            morphism_map: c.morphism_ids().map(|f| (c.mor_name(f).into(), c.mor_name(f).into())).collect(),
        };
        let file = LaxFile {
            source: inline(&m),
            target: inline(&m),
            functor,
            comparison: None,
            unit_map: None,
        };
        let fl = parse_lax(&serde_json::to_string(&file).unwrap()).unwrap();
        let l = fl.lax().unwrap();
        let v = verify_lax_monoidal(&l, &fl.source, &fl.target, &full_scope(fl.source.category())).unwrap();
        assert!(v.strong);

        let mut twisted = file.clone();
        twisted.comparison = Some(vec![["*".into(), "*".into(), "g1".into()]]);
        let fl = parse_lax(&serde_json::to_string(&twisted).unwrap()).unwrap();
        let l = fl.lax().unwrap();
        let v = verify_lax_monoidal(&l, &fl.source, &fl.target, &full_scope(fl.source.category())).unwrap();
        assert!(!v.lax);
    }

    #[test]
    fn duality_files_resolve_names() {
        let m = cyclic_group(2);
        let file = DualityFile {
            monoidal: inline(&m),
            object: "*".into(),
            dual: "*".into(),
            ev: "g1".into(),
            coev: "g1".into(),
        };
        let d = parse_duality(&serde_json::to_string(&file).unwrap()).unwrap();
        assert!(all_passed(&crate::monoidal::check_zigzag(&d.monoidal, &d.data).unwrap()));
        let mut bad = file;
        bad.ev = "g7".into();
        assert!(parse_duality(&serde_json::to_string(&bad).unwrap()).is_err());
    }

    #[test]
    fn parse_entry_points_reject_paths_and_unknown_fields() {
        let file = ImageFile {
            source: MonoidalRef::Path("elsewhere.json".into()),
            target: CategoryRef::Path("elsewhere.json".into()),
            functor: MapFile::default(),
        };
        let err = parse_image(&serde_json::to_string(&file).unwrap()).unwrap_err();
        assert!(err.to_string().contains("cannot be resolved"));
        assert!(parse_lax(r#"{"source": "a", "target": "b", "functor": {"object_map": {}, "morphism_map": {}}, "extra": 1}"#).is_err());
    }
}
