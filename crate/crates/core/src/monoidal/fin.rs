use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Braiding, Monoidal};
use crate::category::{
    Category, CategoryRef, FinCategory, FiniteCategory, Functor, FunctorData, MorId, ObjId, DEFAULT_SIZE_CAP,
};
use crate::error::{Error, Result};

/// A monoidal structure on a [`FinCategory`] given by explicit tables.
///
/// Construction requires every table to be total; the monoidal laws are
/// left to the checkers.
#[derive(Clone, Debug)]
pub struct FinMonoidal {
    cat: Arc<FinCategory>,
    unit: ObjId,
    strict: bool,
    tensor_obj: HashMap<(ObjId, ObjId), ObjId>,
    tensor_mor: HashMap<(MorId, MorId), MorId>,
    associator: HashMap<(ObjId, ObjId, ObjId), MorId>,
    left_unitor: HashMap<ObjId, MorId>,
    right_unitor: HashMap<ObjId, MorId>,
    braiding: Option<HashMap<(ObjId, ObjId), MorId>>,
    symmetric: bool,
}

/// On-disk form of a [`FinMonoidal`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalFile {
    pub category: CategoryRef,
    pub unit: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub strict: bool,
    pub tensor_obj: Vec<[String; 3]>,
    pub tensor_mor: Vec<[String; 3]>,
    pub associator: Vec<[String; 4]>,
    pub left_unitor: Vec<[String; 2]>,
    pub right_unitor: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub symmetric: bool,
}

/// Parses a monoidal file with an inline category.
pub fn parse_monoidal(text: &str) -> Result<FinMonoidal> {
    let file: MonoidalFile = serde_json::from_str(text)?;
    FinMonoidal::from_file(&file, |p| Err(Error::Parse(format!("category path {p} cannot be resolved here"))))
}

fn insert_once<K: std::hash::Hash + Eq, V>(map: &mut HashMap<K, V>, k: K, v: V, what: impl FnOnce() -> String) -> Result<()> {
    if map.insert(k, v).is_some() {
        return Err(Error::Invalid(format!("{} given twice", what())));
    }
    Ok(())
}

impl FinMonoidal {
    pub fn from_file(file: &MonoidalFile, resolve: impl Fn(&str) -> Result<FinCategory>) -> Result<Self> {
        Self::from_file_with_cap(file, resolve, DEFAULT_SIZE_CAP)
    }

    pub fn from_file_with_cap(
        file: &MonoidalFile,
        resolve: impl Fn(&str) -> Result<FinCategory>,
        cap: usize,
    ) -> Result<Self> {
        let entries = file.tensor_obj.len() + file.tensor_mor.len() + file.associator.len();
        if entries > cap {
            return Err(Error::SizeCap {
                what: "monoidal tables".into(),
                needed: entries as u128,
                cap: cap as u128,
            });
        }
        let cat = match &file.category {
            CategoryRef::Inline(c) => FinCategory::from_file_with_cap(c, cap)?,
            CategoryRef::Path(p) => resolve(p)?,
        };
        let o = |n: &str| cat.object(n);
        let m = |n: &str| cat.morphism(n);

        let mut tensor_obj = HashMap::new();
        for [x, y, xy] in &file.tensor_obj {
            insert_once(&mut tensor_obj, (o(x)?, o(y)?), o(xy)?, || format!("tensor of objects {x}, {y}"))?;
        }
        let mut tensor_mor = HashMap::new();
        for [f, g, fg] in &file.tensor_mor {
            insert_once(&mut tensor_mor, (m(f)?, m(g)?), m(fg)?, || format!("tensor of morphisms {f}, {g}"))?;
        }
        let mut associator = HashMap::new();
        for [x, y, z, a] in &file.associator {
            insert_once(&mut associator, (o(x)?, o(y)?, o(z)?), m(a)?, || format!("associator at {x}, {y}, {z}"))?;
        }
        let mut left_unitor = HashMap::new();
        for [x, l] in &file.left_unitor {
            insert_once(&mut left_unitor, o(x)?, m(l)?, || format!("left unitor at {x}"))?;
        }
        let mut right_unitor = HashMap::new();
        for [x, r] in &file.right_unitor {
            insert_once(&mut right_unitor, o(x)?, m(r)?, || format!("right unitor at {x}"))?;
        }
        let braiding = match &file.braiding {
            None => None,
            Some(rows) => {
                let mut b = HashMap::new();
                for [x, y, c] in rows {
                    insert_once(&mut b, (o(x)?, o(y)?), m(c)?, || format!("braiding at {x}, {y}"))?;
                }
                Some(b)
            }
        };
        let unit = o(&file.unit)?;
        let out = FinMonoidal {
            cat: Arc::new(cat),
            unit,
            strict: file.strict,
            tensor_obj,
            tensor_mor,
            associator,
            left_unitor,
            right_unitor,
            braiding,
            symmetric: file.symmetric,
        };
        out.ensure_total()?;
        Ok(out)
    }

    fn ensure_total(&self) -> Result<()> {
        let c = &*self.cat;
        let objs = c.objects();
        let mors = c.morphisms();
        let missing = |what: String| Err(Error::Invalid(format!("table is not total: missing {what}")));
        for &x in &objs {
            for &y in &objs {
                if !self.tensor_obj.contains_key(&(x, y)) {
                    return missing(format!("tensor of objects {}, {}", c.obj_name(x), c.obj_name(y)));
                }
                if let Some(b) = &self.braiding {
                    if !b.contains_key(&(x, y)) {
                        return missing(format!("braiding at {}, {}", c.obj_name(x), c.obj_name(y)));
                    }
                }
                for &z in &objs {
                    if !self.associator.contains_key(&(x, y, z)) {
                        return missing(format!(
                            "associator at {}, {}, {}",
                            c.obj_name(x),
                            c.obj_name(y),
                            c.obj_name(z)
                        ));
                    }
                }
            }
            if !self.left_unitor.contains_key(&x) {
                return missing(format!("left unitor at {}", c.obj_name(x)));
            }
            if !self.right_unitor.contains_key(&x) {
                return missing(format!("right unitor at {}", c.obj_name(x)));
            }
        }
        for &f in &mors {
            for &g in &mors {
                if !self.tensor_mor.contains_key(&(f, g)) {
                    return missing(format!("tensor of morphisms {}, {}", c.mor_name(f), c.mor_name(g)));
                }
            }
        }
        Ok(())
    }

    /// Tabulates any finite monoidal carrier. Objects and morphisms are
    /// named by the carrier's `show_obj` / `show_mor`, which must be
    /// injective.
    pub fn tabulate<M, B>(m: &M, braiding: Option<&B>) -> Result<Self>
    where
        M: Monoidal + FiniteCategory,
        B: Braiding<M>,
    {
        let objs = m.objects();
        let mors = m.morphisms();
        let needed = (mors.len() as u128).pow(2) + (objs.len() as u128).pow(3);
        if needed > DEFAULT_SIZE_CAP as u128 {
            return Err(Error::SizeCap {
                what: "tabulated monoidal category".into(),
                needed,
                cap: DEFAULT_SIZE_CAP as u128,
            });
        }
        let obj_name = |x: &M::Obj| m.show_obj(x);
        let mor_name = |f: &M::Mor| m.show_mor(f);

        let mut composition = Vec::new();
        for f in &mors {
            for g in &mors {
                if m.target(f) == m.source(g) {
                    composition.push((mor_name(g), mor_name(f), mor_name(&m.compose(f, g)?)));
                }
            }
        }
        let cat = FinCategory::from_parts(
            objs.iter().map(obj_name).collect(),
            mors.iter()
                .map(|f| (mor_name(f), obj_name(&m.source(f)), obj_name(&m.target(f))))
                .collect(),
            objs.iter()
                .map(|x| Ok((obj_name(x), mor_name(&m.identity(x)?))))
                .collect::<Result<_>>()?,
            composition,
        )?;

        let oid = |x: &M::Obj| cat.object(&obj_name(x));
        let mid = |f: &M::Mor| cat.morphism(&mor_name(f));
        let mut tensor_obj = HashMap::new();
        let mut associator = HashMap::new();
        let mut left_unitor = HashMap::new();
        let mut right_unitor = HashMap::new();
        let mut braid = braiding.map(|_| HashMap::new());
        for x in &objs {
            for y in &objs {
                tensor_obj.insert((oid(x)?, oid(y)?), oid(&m.tensor_obj(x, y)?)?);
                if let (Some(b), Some(t)) = (braiding, braid.as_mut()) {
                    t.insert((oid(x)?, oid(y)?), mid(&b.component(m, x, y)?)?);
                }
                for z in &objs {
                    associator.insert((oid(x)?, oid(y)?, oid(z)?), mid(&m.associator(x, y, z)?)?);
                }
            }
            left_unitor.insert(oid(x)?, mid(&m.left_unitor(x)?)?);
            right_unitor.insert(oid(x)?, mid(&m.right_unitor(x)?)?);
        }
        let mut tensor_mor = HashMap::new();
        for f in &mors {
            for g in &mors {
                tensor_mor.insert((mid(f)?, mid(g)?), mid(&m.tensor_mor(f, g)?)?);
            }
        }
        let unit = oid(&m.unit())?;
        Ok(FinMonoidal {
            cat: Arc::new(cat),
            unit,
            strict: m.is_strict(),
            tensor_obj,
            tensor_mor,
            associator,
            left_unitor,
            right_unitor,
            braiding: braid,
            symmetric: braiding.is_some_and(|b| b.is_symmetric()),
        })
    }

    pub fn to_file(&self) -> MonoidalFile {
        let c = &*self.cat;
        let on = |x: &ObjId| c.obj_name(*x).to_string();
        let mn = |f: &MorId| c.mor_name(*f).to_string();
        let mut tensor_obj: Vec<[String; 3]> = self.tensor_obj.iter().map(|((x, y), z)| [on(x), on(y), on(z)]).collect();
        let mut tensor_mor: Vec<[String; 3]> = self.tensor_mor.iter().map(|((f, g), h)| [mn(f), mn(g), mn(h)]).collect();
        let mut associator: Vec<[String; 4]> = self
            .associator
            .iter()
            .map(|((x, y, z), a)| [on(x), on(y), on(z), mn(a)])
            .collect();
        let mut left_unitor: Vec<[String; 2]> = self.left_unitor.iter().map(|(x, l)| [on(x), mn(l)]).collect();
        let mut right_unitor: Vec<[String; 2]> = self.right_unitor.iter().map(|(x, r)| [on(x), mn(r)]).collect();
        let braiding = self.braiding.as_ref().map(|b| {
            let mut rows: Vec<[String; 3]> = b.iter().map(|((x, y), c)| [on(x), on(y), mn(c)]).collect();
            rows.sort();
            rows
        });
        tensor_obj.sort();
        tensor_mor.sort();
        associator.sort();
        left_unitor.sort();
        right_unitor.sort();
        MonoidalFile {
            category: CategoryRef::Inline(c.to_file()),
            unit: on(&self.unit),
            strict: self.strict,
            tensor_obj,
            tensor_mor,
            associator,
            left_unitor,
            right_unitor,
            braiding,
            symmetric: self.symmetric,
        }
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    /// The tabulated braiding, if the file supplied one.
    pub fn braiding(&self) -> Option<FinBraiding> {
        self.braiding.as_ref().map(|_| FinBraiding { symmetric: self.symmetric })
    }

    /// Replaces one entry of the morphism tensor table.
    pub fn with_tensor_mor(&self, f: MorId, g: MorId, fg: MorId) -> Self {
        let mut out = self.clone();
        out.tensor_mor.insert((f, g), fg);
        out
    }

    pub fn with_associator(&self, x: ObjId, y: ObjId, z: ObjId, a: MorId) -> Self {
        let mut out = self.clone();
        out.associator.insert((x, y, z), a);
        out
    }

    pub fn with_braiding(&self, x: ObjId, y: ObjId, c: MorId) -> Self {
        let mut out = self.clone();
        out.braiding.get_or_insert_with(HashMap::new).insert((x, y), c);
        out
    }
}

impl Category for FinMonoidal {
    type Obj = ObjId;
    type Mor = MorId;

    fn source(&self, f: &MorId) -> ObjId {
        self.cat.source(f)
    }
    fn target(&self, f: &MorId) -> ObjId {
        self.cat.target(f)
    }
    fn identity(&self, x: &ObjId) -> Result<MorId> {
        self.cat.identity(x)
    }
    fn compose(&self, f: &MorId, g: &MorId) -> Result<MorId> {
        self.cat.compose(f, g)
    }
    fn inverse(&self, f: &MorId) -> Option<MorId> {
        self.cat.inverse(f)
    }
    fn contains_object(&self, x: &ObjId) -> bool {
        self.cat.contains_object(x)
    }
    fn show_obj(&self, x: &ObjId) -> String {
        self.cat.show_obj(x)
    }
    fn show_mor(&self, f: &MorId) -> String {
        self.cat.show_mor(f)
    }
}

impl FiniteCategory for FinMonoidal {
    fn objects(&self) -> Vec<ObjId> {
        self.cat.objects()
    }
    fn morphisms(&self) -> Vec<MorId> {
        self.cat.morphisms()
    }
}

impl Monoidal for FinMonoidal {
    fn unit(&self) -> ObjId {
        self.unit
    }

    fn tensor_obj(&self, x: &ObjId, y: &ObjId) -> Result<ObjId> {
        self.tensor_obj.get(&(*x, *y)).copied().ok_or_else(|| {
            Error::Lookup(format!("no tensor for objects {}, {}", self.show_obj(x), self.show_obj(y)))
        })
    }

    fn tensor_mor(&self, f: &MorId, g: &MorId) -> Result<MorId> {
        self.tensor_mor.get(&(*f, *g)).copied().ok_or_else(|| {
            Error::Lookup(format!("no tensor for morphisms {}, {}", self.show_mor(f), self.show_mor(g)))
        })
    }

    fn associator(&self, x: &ObjId, y: &ObjId, z: &ObjId) -> Result<MorId> {
        self.associator.get(&(*x, *y, *z)).copied().ok_or_else(|| {
            Error::Lookup(format!(
                "no associator at {}, {}, {}",
                self.show_obj(x),
                self.show_obj(y),
                self.show_obj(z)
            ))
        })
    }

    fn left_unitor(&self, x: &ObjId) -> Result<MorId> {
        self.left_unitor
            .get(x)
            .copied()
            .ok_or_else(|| Error::Lookup(format!("no left unitor at {}", self.show_obj(x))))
    }

    fn right_unitor(&self, x: &ObjId) -> Result<MorId> {
        self.right_unitor
            .get(x)
            .copied()
            .ok_or_else(|| Error::Lookup(format!("no right unitor at {}", self.show_obj(x))))
    }

    fn is_strict(&self) -> bool {
        self.strict
    }
}

/// Reads braiding components from a [`FinMonoidal`]'s table.
#[derive(Clone, Copy, Debug)]
pub struct FinBraiding {
    pub symmetric: bool,
}

impl Braiding<FinMonoidal> for FinBraiding {
    fn component(&self, cat: &FinMonoidal, x: &ObjId, y: &ObjId) -> Result<MorId> {
        cat.braiding
            .as_ref()
            .and_then(|b| b.get(&(*x, *y)).copied())
            .ok_or_else(|| Error::Lookup(format!("no braiding at {}, {}", cat.show_obj(x), cat.show_obj(y))))
    }

    fn is_symmetric(&self) -> bool {
        self.symmetric
    }
}

macro_rules! table_functor {
    ($a:ty, $b:ty) => {
        impl Functor<$a, $b> for FunctorData {
            fn map_obj(&self, x: &ObjId) -> Result<ObjId> {
                <FunctorData as Functor<FinCategory, FinCategory>>::map_obj(self, x)
            }
            fn map_mor(&self, f: &MorId) -> Result<MorId> {
                <FunctorData as Functor<FinCategory, FinCategory>>::map_mor(self, f)
            }
        }
    };
}

table_functor!(FinMonoidal, FinCategory);
table_functor!(FinCategory, FinMonoidal);
table_functor!(FinMonoidal, FinMonoidal);
