use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::category::{Category, Functor, Scope};
use crate::error::{Error, Result};
use crate::monoidal::{check_bifunctoriality, check_pentagon_triangle, Braiding, Monoidal};
use crate::report::{all_passed, Failure, Report, Tally};

fn group<T: Clone, I: Clone + PartialEq>(items: &[T], image: impl Fn(&T) -> Result<I>) -> Result<Vec<Vec<T>>> {
    Ok(crate::category::group_by_image(items, image)?
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

/// Checks that tensoring preimages gives preimages of a single image:
/// whenever `F(a1) = F(a2)` and `F(a3) = F(a4)` in scope, `F(a1⊗a3) =
/// F(a2⊗a4)`, and likewise for morphisms.
///
/// Each class of equal images is compared against its first member, so an
/// injective functor is checked on diagonal pairs only.
pub fn check_image_conditions<C, D, F>(functor: &F, mc: &C, d: &D, scope: &Scope<C>) -> Result<Vec<Report>>
where
    C: Monoidal,
    D: Category,
    F: Functor<C, D>,
{
    scope.ensure_known(mc)?;
    let obj_groups = group(&scope.objects, |x| functor.map_obj(x))?;
    let mut objs = Tally::new("image-tensor-objects");
    for g1 in &obj_groups {
        for g2 in &obj_groups {
            let (a1, a3) = (&g1[0], &g2[0]);
            let reference = functor.map_obj(&mc.tensor_obj(a1, a3)?)?;
            for a2 in g1 {
                for a4 in g2 {
                    let img = functor.map_obj(&mc.tensor_obj(a2, a4)?)?;
                    objs.check(img == reference, || {
                        Failure::new(
                            vec![mc.show_obj(a1), mc.show_obj(a2), mc.show_obj(a3), mc.show_obj(a4)],
                            d.show_obj(&reference),
                            d.show_obj(&img),
                        )
                    });
                }
            }
        }
    }

    let mor_groups = group(&scope.morphisms, |f| functor.map_mor(f))?;
    let mut mors = Tally::new("image-tensor-morphisms");
    for g1 in &mor_groups {
        for g2 in &mor_groups {
            let (f, g) = (&g1[0], &g2[0]);
            let reference = functor.map_mor(&mc.tensor_mor(f, g)?)?;
            for f2 in g1 {
                for g2 in g2 {
                    let img = functor.map_mor(&mc.tensor_mor(f2, g2)?)?;
                    mors.check(img == reference, || {
                        Failure::new(
                            vec![mc.show_mor(f), mc.show_mor(f2), mc.show_mor(g), mc.show_mor(g2)],
                            d.show_mor(&reference),
                            d.show_mor(&img),
                        )
                    });
                }
            }
        }
    }
    Ok(vec![objs.finish(), mors.finish()])
}

/// Picks a preimage for elements of a functor's image.
pub trait Preimage<C: Category, D: Category> {
    fn obj(&self, b: &D::Obj) -> Result<C::Obj>;
    fn mor(&self, g: &D::Mor) -> Result<C::Mor>;
}

/// For each image element, the preimage in scope with the least display
/// string.
#[derive(Clone, Debug)]
pub struct LeastPreimage<C: Category> {
    objects: HashMap<String, (String, C::Obj)>,
    morphisms: HashMap<String, (String, C::Mor)>,
}

/// Which preimage was used for each image element, by display string.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub objects: BTreeMap<String, String>,
    pub morphisms: BTreeMap<String, String>,
}

impl<C: Category> LeastPreimage<C> {
    /// Returns the table together with the image scope, in order of first
    /// appearance.
    pub fn build<D: Category, F: Functor<C, D>>(
        functor: &F,
        c: &C,
        d: &D,
        scope: &Scope<C>,
    ) -> Result<(Self, Scope<D>)> {
        let mut image = Scope::new(Vec::new(), Vec::new());
        let mut objects: HashMap<String, (String, C::Obj)> = HashMap::new();
        for a in &scope.objects {
            let b = functor.map_obj(a)?;
            let (kb, ka) = (d.show_obj(&b), c.show_obj(a));
            match objects.get_mut(&kb) {
                Some(slot) => {
                    if ka < slot.0 {
                        *slot = (ka, a.clone());
                    }
                }
                None => {
                    objects.insert(kb, (ka, a.clone()));
                    image.objects.push(b);
                }
            }
        }
        let mut morphisms: HashMap<String, (String, C::Mor)> = HashMap::new();
        for f in &scope.morphisms {
            let g = functor.map_mor(f)?;
            let (kg, kf) = (d.show_mor(&g), c.show_mor(f));
            match morphisms.get_mut(&kg) {
                Some(slot) => {
                    if kf < slot.0 {
                        *slot = (kf, f.clone());
                    }
                }
                None => {
                    morphisms.insert(kg, (kf, f.clone()));
                    image.morphisms.push(g);
                }
            }
        }
        Ok((LeastPreimage { objects, morphisms }, image))
    }

    pub fn provenance(&self) -> Provenance {
        Provenance {
            objects: self.objects.iter().map(|(k, (v, _))| (k.clone(), v.clone())).collect(),
            morphisms: self.morphisms.iter().map(|(k, (v, _))| (k.clone(), v.clone())).collect(),
        }
    }
}

/// A [`LeastPreimage`] paired with the target carrier for display.
pub struct TablePreimage<'a, C: Category, D> {
    pub table: LeastPreimage<C>,
    pub target: &'a D,
}

impl<C: Category, D: Category> Preimage<C, D> for TablePreimage<'_, C, D> {
    fn obj(&self, b: &D::Obj) -> Result<C::Obj> {
        let key = self.target.show_obj(b);
        self.table
            .objects
            .get(&key)
            .map(|(_, a)| a.clone())
            .ok_or_else(|| Error::Lookup(format!("object {key} has no preimage in scope")))
    }

    fn mor(&self, g: &D::Mor) -> Result<C::Mor> {
        let key = self.target.show_mor(g);
        self.table
            .morphisms
            .get(&key)
            .map(|(_, f)| f.clone())
            .ok_or_else(|| Error::Lookup(format!("morphism {key} has no preimage in scope")))
    }
}

/// Preimages through a section `G` of the functor, checked on every use:
/// `F(G(b)) = b`.
pub struct SectionPreimage<'a, D, F, G> {
    pub section: &'a G,
    pub functor: &'a F,
    pub target: &'a D,
}

impl<C, D, F, G> Preimage<C, D> for SectionPreimage<'_, D, F, G>
where
    C: Category,
    D: Category,
    F: Functor<C, D>,
    G: Functor<D, C>,
{
    fn obj(&self, b: &D::Obj) -> Result<C::Obj> {
        let a = self.section.map_obj(b)?;
        if self.functor.map_obj(&a)? != *b {
            return Err(Error::Invalid(format!(
                "section does not split the functor at object {}",
                self.target.show_obj(b)
            )));
        }
        Ok(a)
    }

    fn mor(&self, g: &D::Mor) -> Result<C::Mor> {
        let f = self.section.map_mor(g)?;
        if self.functor.map_mor(&f)? != *g {
            return Err(Error::Invalid(format!(
                "section does not split the functor at morphism {}",
                self.target.show_mor(g)
            )));
        }
        Ok(f)
    }
}

/// The tensor induced on a functor's image: `b1 ⊗_F b2 = F(a1⊗a2)` for
/// chosen preimages, unit `F(I)`, structure maps `F(a)`, `F(λ)`, `F(ρ)`.
/// Composition and identities are the target's.
pub struct ImageTensor<'a, C: Monoidal, D: Category, F, P> {
    source: &'a C,
    target: &'a D,
    functor: &'a F,
    preimage: P,
    unit: D::Obj,
}

impl<'a, C, D, F, P> ImageTensor<'a, C, D, F, P>
where
    C: Monoidal,
    D: Category,
    F: Functor<C, D>,
    P: Preimage<C, D>,
{
    pub fn new(source: &'a C, target: &'a D, functor: &'a F, preimage: P) -> Result<Self> {
        let unit = functor.map_obj(&source.unit())?;
        Ok(ImageTensor {
            source,
            target,
            functor,
            preimage,
            unit,
        })
    }

    pub fn preimage(&self) -> &P {
        &self.preimage
    }

    pub fn source(&self) -> &C {
        self.source
    }

    pub fn target(&self) -> &D {
        self.target
    }
}

impl<C, D, F, P> Category for ImageTensor<'_, C, D, F, P>
where
    C: Monoidal,
    D: Category,
{
    type Obj = D::Obj;
    type Mor = D::Mor;

    fn source(&self, f: &D::Mor) -> D::Obj {
        self.target.source(f)
    }
    fn target(&self, f: &D::Mor) -> D::Obj {
        self.target.target(f)
    }
    fn identity(&self, x: &D::Obj) -> Result<D::Mor> {
        self.target.identity(x)
    }
    fn compose(&self, f: &D::Mor, g: &D::Mor) -> Result<D::Mor> {
        self.target.compose(f, g)
    }
    fn inverse(&self, f: &D::Mor) -> Option<D::Mor> {
        self.target.inverse(f)
    }
    fn contains_object(&self, x: &D::Obj) -> bool {
        self.target.contains_object(x)
    }
    fn show_obj(&self, x: &D::Obj) -> String {
        self.target.show_obj(x)
    }
    fn show_mor(&self, f: &D::Mor) -> String {
        self.target.show_mor(f)
    }
}

impl<C, D, F, P> Monoidal for ImageTensor<'_, C, D, F, P>
where
    C: Monoidal,
    D: Category,
    F: Functor<C, D>,
    P: Preimage<C, D>,
{
    fn unit(&self) -> D::Obj {
        self.unit.clone()
    }

    fn tensor_obj(&self, x: &D::Obj, y: &D::Obj) -> Result<D::Obj> {
        let (a, b) = (self.preimage.obj(x)?, self.preimage.obj(y)?);
        self.functor.map_obj(&self.source.tensor_obj(&a, &b)?)
    }

    fn tensor_mor(&self, f: &D::Mor, g: &D::Mor) -> Result<D::Mor> {
        let (a, b) = (self.preimage.mor(f)?, self.preimage.mor(g)?);
        self.functor.map_mor(&self.source.tensor_mor(&a, &b)?)
    }

    fn associator(&self, x: &D::Obj, y: &D::Obj, z: &D::Obj) -> Result<D::Mor> {
        let a = self
            .source
            .associator(&self.preimage.obj(x)?, &self.preimage.obj(y)?, &self.preimage.obj(z)?)?;
        self.functor.map_mor(&a)
    }

    fn left_unitor(&self, x: &D::Obj) -> Result<D::Mor> {
        self.functor.map_mor(&self.source.left_unitor(&self.preimage.obj(x)?)?)
    }

    fn right_unitor(&self, x: &D::Obj) -> Result<D::Mor> {
        self.functor.map_mor(&self.source.right_unitor(&self.preimage.obj(x)?)?)
    }

    fn is_strict(&self) -> bool {
        self.source.is_strict()
    }
}

/// The image of a braiding: components `F(s_{a1,a2})` at chosen preimages.
pub struct ImageBraiding<'a, B> {
    pub braiding: &'a B,
}

impl<'a, B> ImageBraiding<'a, B> {
    pub fn new(braiding: &'a B) -> Self {
        ImageBraiding { braiding }
    }
}

impl<C, D, F, P, B> Braiding<ImageTensor<'_, C, D, F, P>> for ImageBraiding<'_, B>
where
    C: Monoidal,
    D: Category,
    F: Functor<C, D>,
    P: Preimage<C, D>,
    B: Braiding<C>,
{
    fn component(&self, cat: &ImageTensor<'_, C, D, F, P>, x: &D::Obj, y: &D::Obj) -> Result<D::Mor> {
        let (a, b) = (cat.preimage.obj(x)?, cat.preimage.obj(y)?);
        cat.functor.map_mor(&self.braiding.component(cat.source, &a, &b)?)
    }

    fn is_symmetric(&self) -> bool {
        self.braiding.is_symmetric()
    }
}

/// An induced monoidal structure together with the scope it was checked
/// on, the reports of those checks and the preimage choices.
pub struct InducedTensor<T: Monoidal> {
    pub tensor: T,
    pub scope: Scope<T>,
    pub reports: Vec<Report>,
    pub provenance: Provenance,
}

pub(crate) fn postcondition<T: Monoidal>(tensor: &T, scope: &Scope<T>, what: &str) -> Result<Vec<Report>> {
    let mut reports = check_bifunctoriality(tensor, scope)?;
    reports.extend(check_pentagon_triangle(tensor, scope)?);
    if !all_passed(&reports) {
        return Err(Error::Refused {
            reason: format!("{what} fails the monoidal laws on its scope"),
            reports,
        });
    }
    Ok(reports)
}

pub type InducedOnImage<'a, C, D, F> = InducedTensor<ImageTensor<'a, C, D, F, TablePreimage<'a, C, D>>>;

/// Builds `⊗_F` on the image of `functor` restricted to `scope`.
///
/// Refuses with the counterexample reports when the image conditions fail,
/// and when the result fails bifunctoriality, pentagon or triangle.
pub fn induce_tensor_on_image<'a, C, D, F>(
    functor: &'a F,
    mc: &'a C,
    d: &'a D,
    scope: &Scope<C>,
) -> Result<InducedOnImage<'a, C, D, F>>
where
    C: Monoidal,
    D: Category,
    F: Functor<C, D>,
{
    let conditions = check_image_conditions(functor, mc, d, scope)?;
    if !all_passed(&conditions) {
        return Err(Error::Refused {
            reason: "tensor is not well defined on the image: equal images have preimages with different tensors".into(),
            reports: conditions,
        });
    }
    let (table, image) = LeastPreimage::build(functor, mc, d, scope)?;
    let provenance = table.provenance();
    let tensor = ImageTensor::new(mc, d, functor, TablePreimage { table, target: d })?;
    let image = Scope::new(image.objects, image.morphisms);
    let mut reports = conditions;
    reports.extend(postcondition(&tensor, &image, "induced tensor")?);
    Ok(InducedTensor {
        tensor,
        scope: image,
        reports,
        provenance,
    })
}
