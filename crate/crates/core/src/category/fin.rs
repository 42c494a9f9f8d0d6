use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{Category, FiniteCategory};
use crate::error::{Error, Result};
use crate::report::{Failure, Report, Tally};

/// Default bound on table entries accepted by finite constructors.
pub const DEFAULT_SIZE_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorId(pub u32);

#[derive(Clone, Debug, PartialEq, Eq)]
struct MorData {
    name: String,
    src: ObjId,
    dst: ObjId,
}

/// A finitely presented category: explicit objects, morphisms, identities
/// and a composition table keyed by `(g, f) ↦ g∘f`.
///
/// Construction only checks that every identifier resolves; the category
/// laws are checked by [`FinCategory::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    obj_index: HashMap<String, ObjId>,
    morphisms: Vec<MorData>,
    mor_index: HashMap<String, MorId>,
    identity: Vec<Option<MorId>>,
    composition: HashMap<(MorId, MorId), MorId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismEntry {
    pub id: String,
    pub src: String,
    pub dst: String,
}

/// On-disk form of a [`FinCategory`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismEntry>,
    pub identity: BTreeMap<String, String>,
    pub composition: Vec<[String; 3]>,
}

pub fn parse_category(text: &str) -> Result<FinCategory> {
    let file: CategoryFile = serde_json::from_str(text)?;
    FinCategory::from_file(&file)
}

impl FinCategory {
    pub fn from_file(file: &CategoryFile) -> Result<Self> {
        Self::from_file_with_cap(file, DEFAULT_SIZE_CAP)
    }

    pub fn from_file_with_cap(file: &CategoryFile, cap: usize) -> Result<Self> {
        let mors: Vec<_> = file
            .morphisms
            .iter()
            .map(|m| (m.id.clone(), m.src.clone(), m.dst.clone()))
            .collect();
        let ids: Vec<_> = file.identity.iter().map(|(o, m)| (o.clone(), m.clone())).collect();
        let comp: Vec<_> = file
            .composition
            .iter()
            .map(|[g, f, gf]| (g.clone(), f.clone(), gf.clone()))
            .collect();
        Self::from_parts_with_cap(file.objects.clone(), mors, ids, comp, cap)
    }

    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<(String, String, String)>,
        identity: Vec<(String, String)>,
        composition: Vec<(String, String, String)>,
    ) -> Result<Self> {
        Self::from_parts_with_cap(objects, morphisms, identity, composition, DEFAULT_SIZE_CAP)
    }

    /// `composition` entries are `(g, f, g∘f)`.
    pub fn from_parts_with_cap(
        objects: Vec<String>,
        morphisms: Vec<(String, String, String)>,
        identity: Vec<(String, String)>,
        composition: Vec<(String, String, String)>,
        cap: usize,
    ) -> Result<Self> {
        let entries = objects.len() + morphisms.len() + composition.len();
        if entries > cap {
            return Err(Error::SizeCap {
                what: "finite category".into(),
                needed: entries as u128,
                cap: cap as u128,
            });
        }
        let mut obj_index = HashMap::with_capacity(objects.len());
        for (i, name) in objects.iter().enumerate() {
            if obj_index.insert(name.clone(), ObjId(i as u32)).is_some() {
                return Err(Error::Invalid(format!("duplicate object id {name}")));
            }
        }
        let lookup_obj = |name: &str| {
            obj_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownObject(name.to_string()))
        };
        let mut mor_index = HashMap::with_capacity(morphisms.len());
        let mut mor_data = Vec::with_capacity(morphisms.len());
        for (i, (name, src, dst)) in morphisms.into_iter().enumerate() {
            let src = lookup_obj(&src)?;
            let dst = lookup_obj(&dst)?;
            if mor_index.insert(name.clone(), MorId(i as u32)).is_some() {
                return Err(Error::Invalid(format!("duplicate morphism id {name}")));
            }
            mor_data.push(MorData { name, src, dst });
        }
        let lookup_mor = |name: &str| {
            mor_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownMorphism(name.to_string()))
        };
        let mut ids = vec![None; objects.len()];
        for (o, m) in identity {
            let o = lookup_obj(&o)?;
            let m = lookup_mor(&m)?;
            if ids[o.0 as usize].replace(m).is_some() {
                return Err(Error::Invalid(format!("object {} has two identities", objects[o.0 as usize])));
            }
        }
        let mut table = HashMap::with_capacity(composition.len());
        for (g, f, gf) in composition {
            let key = (lookup_mor(&g)?, lookup_mor(&f)?);
            if table.insert(key, lookup_mor(&gf)?).is_some() {
                return Err(Error::Invalid(format!("composition of ({g}, {f}) given twice")));
            }
        }
        Ok(FinCategory {
            objects,
            obj_index,
            morphisms: mor_data,
            mor_index,
            identity: ids,
            composition: table,
        })
    }

    pub fn to_file(&self) -> CategoryFile {
        let mut comp: Vec<_> = self.composition.iter().map(|(&(g, f), &gf)| (g, f, gf)).collect();
        comp.sort();
        CategoryFile {
            objects: self.objects.clone(),
            morphisms: self
                .morphisms
                .iter()
                .map(|m| MorphismEntry {
                    id: m.name.clone(),
                    src: self.objects[m.src.0 as usize].clone(),
                    dst: self.objects[m.dst.0 as usize].clone(),
                })
                .collect(),
            identity: self
                .identity
                .iter()
                .enumerate()
                .filter_map(|(o, m)| m.map(|m| (self.objects[o].clone(), self.mor_name(m).to_string())))
                .collect(),
            composition: comp
                .into_iter()
                .map(|(g, f, gf)| {
                    [
                        self.mor_name(g).to_string(),
                        self.mor_name(f).to_string(),
                        self.mor_name(gf).to_string(),
                    ]
                })
                .collect(),
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_ids(&self) -> impl Iterator<Item = ObjId> + '_ {
        (0..self.objects.len() as u32).map(ObjId)
    }

    pub fn morphism_ids(&self) -> impl Iterator<Item = MorId> + '_ {
        (0..self.morphisms.len() as u32).map(MorId)
    }

    pub fn object(&self, name: &str) -> Result<ObjId> {
        self.obj_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn morphism(&self, name: &str) -> Result<MorId> {
        self.mor_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownMorphism(name.to_string()))
    }

    pub fn obj_name(&self, x: ObjId) -> &str {
        &self.objects[x.0 as usize]
    }

    pub fn mor_name(&self, f: MorId) -> &str {
        &self.morphisms[f.0 as usize].name
    }

    pub fn src(&self, f: MorId) -> ObjId {
        self.morphisms[f.0 as usize].src
    }

    pub fn dst(&self, f: MorId) -> ObjId {
        self.morphisms[f.0 as usize].dst
    }

    pub fn identity_of(&self, x: ObjId) -> Option<MorId> {
        self.identity[x.0 as usize]
    }

    /// Raw table lookup of `g∘f`, without checking composability.
    pub fn table(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.composition.get(&(g, f)).copied()
    }

    pub fn composition_len(&self) -> usize {
        self.composition.len()
    }

    /// Morphisms `x → y`, in identifier order.
    pub fn hom(&self, x: ObjId, y: ObjId) -> Vec<MorId> {
        self.morphism_ids()
            .filter(|&f| self.src(f) == x && self.dst(f) == y)
            .collect()
    }

    /// Composes by name; `g ∘ f`.
    pub fn compose_named(&self, f: &str, g: &str) -> Result<MorId> {
        let f = self.morphism(f)?;
        let g = self.morphism(g)?;
        self.compose(&f, &g)
    }

    /// Replaces one composition entry. Intended for mutation testing.
    pub fn with_entry(&self, g: MorId, f: MorId, gf: MorId) -> FinCategory {
        let mut out = self.clone();
        out.composition.insert((g, f), gf);
        out
    }

    /// Checks every category law exhaustively. One report per law; the
    /// category is valid iff all of them pass.
    pub fn validate(&self) -> Vec<Report> {
        let name = |f: MorId| self.mor_name(f).to_string();
        let oname = |x: ObjId| self.obj_name(x).to_string();

        let mut identity = Tally::new("identity-exists");
        for x in self.object_ids() {
            match self.identity_of(x) {
                None => identity.fail(Failure::new(vec![oname(x)], "no identity", "identity")),
                Some(i) => identity.check(self.src(i) == x && self.dst(i) == x, || {
                    Failure::new(
                        vec![oname(x), name(i)],
                        format!("{} -> {}", oname(self.src(i)), oname(self.dst(i))),
                        format!("{} -> {}", oname(x), oname(x)),
                    )
                }),
            }
        }

        let mut total = Tally::new("composition-total");
        let mut domain = Tally::new("composition-domain");
        let mut src_law = Tally::new("composition-source");
        let mut dst_law = Tally::new("composition-target");
        for f in self.morphism_ids() {
            for g in self.morphism_ids() {
                let composable = self.dst(f) == self.src(g);
                match (composable, self.table(g, f)) {
                    (true, None) => total.fail(Failure::new(vec![name(g), name(f)], "undefined", "defined")),
                    (true, Some(gf)) => {
                        total.pass();
                        src_law.check(self.src(gf) == self.src(f), || {
                            Failure::new(vec![name(g), name(f), name(gf)], oname(self.src(gf)), oname(self.src(f)))
                        });
                        dst_law.check(self.dst(gf) == self.dst(g), || {
                            Failure::new(vec![name(g), name(f), name(gf)], oname(self.dst(gf)), oname(self.dst(g)))
                        });
                    }
                    (false, Some(gf)) => domain.fail(Failure::new(
                        vec![name(g), name(f), name(gf)],
                        "defined",
                        "undefined (not composable)",
                    )),
                    (false, None) => {}
                }
            }
        }

        // A composite is usable in the remaining laws only when it is well
        // typed; ill-typed entries were reported above.
        let typed = |g: MorId, f: MorId| -> Option<MorId> {
            let gf = self.table(g, f)?;
            (self.dst(f) == self.src(g) && self.src(gf) == self.src(f) && self.dst(gf) == self.dst(g)).then_some(gf)
        };

        let mut left = Tally::new("left-identity");
        let mut right = Tally::new("right-identity");
        for f in self.morphism_ids() {
            if let Some(id) = self.identity_of(self.dst(f)) {
                if let Some(r) = self.table(id, f) {
                    left.check(r == f, || Failure::new(vec![name(id), name(f)], name(r), name(f)));
                }
            }
            if let Some(id) = self.identity_of(self.src(f)) {
                if let Some(r) = self.table(f, id) {
                    right.check(r == f, || Failure::new(vec![name(f), name(id)], name(r), name(f)));
                }
            }
        }

        let mut assoc = Tally::new("associativity");
        let mut outgoing: HashMap<ObjId, Vec<MorId>> = HashMap::new();
        for f in self.morphism_ids() {
            outgoing.entry(self.src(f)).or_default().push(f);
        }
        let empty = Vec::new();
        for f in self.morphism_ids() {
            for &g in outgoing.get(&self.dst(f)).unwrap_or(&empty) {
                let Some(gf) = typed(g, f) else { continue };
                for &h in outgoing.get(&self.dst(g)).unwrap_or(&empty) {
                    let Some(hg) = typed(h, g) else { continue };
                    let (Some(l), Some(r)) = (typed(h, gf), typed(hg, f)) else {
                        continue;
                    };
                    assoc.check(l == r, || Failure::new(vec![name(h), name(g), name(f)], name(l), name(r)));
                }
            }
        }

        vec![
            identity.finish(),
            total.finish(),
            domain.finish(),
            src_law.finish(),
            dst_law.finish(),
            left.finish(),
            right.finish(),
            assoc.finish(),
        ]
    }

    /// Checks the laws and returns the category only if all of them hold.
    pub fn validated(self) -> Result<Self> {
        let reports = self.validate();
        if reports.iter().all(Report::passed) {
            Ok(self)
        } else {
            Err(Error::Refused {
                reason: "category laws violated".into(),
                reports,
            })
        }
    }
}

impl Category for FinCategory {
    type Obj = ObjId;
    type Mor = MorId;

    fn source(&self, f: &MorId) -> ObjId {
        self.src(*f)
    }

    fn target(&self, f: &MorId) -> ObjId {
        self.dst(*f)
    }

    fn identity(&self, x: &ObjId) -> Result<MorId> {
        if !self.contains_object(x) {
            return Err(Error::UnknownObject(format!("{x:?}")));
        }
        self.identity_of(*x)
            .ok_or_else(|| Error::Lookup(format!("object {} has no identity", self.obj_name(*x))))
    }

    fn compose(&self, f: &MorId, g: &MorId) -> Result<MorId> {
        if self.dst(*f) != self.src(*g) {
            return Err(Error::NotComposable {
                f: self.mor_name(*f).into(),
                g: self.mor_name(*g).into(),
                f_target: self.obj_name(self.dst(*f)).into(),
                g_source: self.obj_name(self.src(*g)).into(),
            });
        }
        self.table(*g, *f).ok_or_else(|| {
            Error::Lookup(format!(
                "composition table has no entry for ({}, {})",
                self.mor_name(*g),
                self.mor_name(*f)
            ))
        })
    }

    fn inverse(&self, f: &MorId) -> Option<MorId> {
        let (x, y) = (self.src(*f), self.dst(*f));
        let (idx, idy) = (self.identity_of(x)?, self.identity_of(y)?);
        self.hom(y, x)
            .into_iter()
            .find(|&g| self.table(g, *f) == Some(idx) && self.table(*f, g) == Some(idy))
    }

    fn contains_object(&self, x: &ObjId) -> bool {
        (x.0 as usize) < self.objects.len()
    }

    fn show_obj(&self, x: &ObjId) -> String {
        self.objects
            .get(x.0 as usize)
            .cloned()
            .unwrap_or_else(|| format!("<object #{}>", x.0))
    }

    fn show_mor(&self, f: &MorId) -> String {
        self.morphisms
            .get(f.0 as usize)
            .map(|m| m.name.clone())
            .unwrap_or_else(|| format!("<morphism #{}>", f.0))
    }
}

impl FiniteCategory for FinCategory {
    fn objects(&self) -> Vec<ObjId> {
        self.object_ids().collect()
    }

    fn morphisms(&self) -> Vec<MorId> {
        self.morphism_ids().collect()
    }
}
