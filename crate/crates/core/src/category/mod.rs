//! Categories, functors and the finite machinery behind every generic check.
//!
//! The [`Category`] trait is the common carrier interface: finite
//! categories given by explicit tables ([`FinCategory`]) implement it, and
//! so do the parametrized backends (vector spaces, cobordism classes, loop
//! spaces), which have unboundedly many objects. Checkers never enumerate a
//! carrier themselves; they work over an explicit [`Scope`].

mod fin;
mod functor;
mod index;
mod product;

use std::fmt::Debug;

pub use fin::{parse_category, CategoryFile, FinCategory, MorId, MorphismEntry, ObjId, DEFAULT_SIZE_CAP};
pub use functor::{
    check_functor_laws, image_subcategory, parse_functor, validate_functor, CategoryRef, Composite,
    FunctorData, FunctorFile, IdentityFunctor,
};
pub use index::{IndexCategory, NatTransform};
pub(crate) use functor::group_by_image;
pub use product::{
    binary_product, check_isomorphism, ev_functor, diagonal_functor, product_category, Diagonal,
    Evaluate, Product, ProductCategory,
};

use crate::error::{Error, Result};

pub trait Category {
    type Obj: Clone + PartialEq + Debug;
    type Mor: Clone + PartialEq + Debug;

    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Result<Self::Mor>;

    /// Returns `g ∘ f`. Fails unless `target(f) = source(g)`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    /// A two-sided inverse, if one exists.
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor>;

    fn contains_object(&self, _x: &Self::Obj) -> bool {
        true
    }

    fn show_obj(&self, x: &Self::Obj) -> String {
        format!("{x:?}")
    }

    fn show_mor(&self, f: &Self::Mor) -> String {
        format!("{f:?}")
    }
}

/// A category whose objects and morphisms can be listed.
pub trait FiniteCategory: Category {
    fn objects(&self) -> Vec<Self::Obj>;
    fn morphisms(&self) -> Vec<Self::Mor>;
}

pub trait Functor<A: Category, B: Category> {
    fn map_obj(&self, x: &A::Obj) -> Result<B::Obj>;
    fn map_mor(&self, f: &A::Mor) -> Result<B::Mor>;
}

impl<A: Category, B: Category, F: Functor<A, B> + ?Sized> Functor<A, B> for &F {
    fn map_obj(&self, x: &A::Obj) -> Result<B::Obj> {
        (**self).map_obj(x)
    }
    fn map_mor(&self, f: &A::Mor) -> Result<B::Mor> {
        (**self).map_mor(f)
    }
}

/// The finite portion of a carrier a checker is asked to examine.
#[derive(Clone, Debug)]
pub struct Scope<C: Category> {
    pub objects: Vec<C::Obj>,
    pub morphisms: Vec<C::Mor>,
}

impl<C: Category> Scope<C> {
    pub fn new(objects: Vec<C::Obj>, morphisms: Vec<C::Mor>) -> Self {
        Scope { objects, morphisms }
    }

    pub fn objects_only(objects: Vec<C::Obj>) -> Self {
        Scope {
            objects,
            morphisms: Vec::new(),
        }
    }

    pub fn all(cat: &C) -> Self
    where
        C: FiniteCategory,
    {
        Scope {
            objects: cat.objects(),
            morphisms: cat.morphisms(),
        }
    }

    /// Fails with a lookup error if the scope names an object the carrier
    /// does not have.
    pub fn ensure_known(&self, cat: &C) -> Result<()> {
        for x in &self.objects {
            if !cat.contains_object(x) {
                return Err(Error::UnknownObject(cat.show_obj(x)));
            }
        }
        for f in &self.morphisms {
            if !cat.contains_object(&cat.source(f)) || !cat.contains_object(&cat.target(f)) {
                return Err(Error::UnknownMorphism(cat.show_mor(f)));
            }
        }
        Ok(())
    }
}

/// Composes `stages` left to right (first stage applied first). A typing
/// mismatch is reported as a wiring error naming the offending stage.
pub fn compose_chain<C: Category>(cat: &C, stages: &[(&str, C::Mor)]) -> Result<C::Mor> {
    let mut iter = stages.iter();
    let Some((_, first)) = iter.next() else {
        return Err(Error::Wiring {
            stage: "<empty>".into(),
            detail: "no stages to compose".into(),
        });
    };
    let mut acc = first.clone();
    for (name, next) in iter {
        if cat.target(&acc) != cat.source(next) {
            return Err(Error::Wiring {
                stage: (*name).to_string(),
                detail: format!(
                    "expects source {}, previous stage ends at {}",
                    cat.show_obj(&cat.source(next)),
                    cat.show_obj(&cat.target(&acc))
                ),
            });
        }
        acc = cat.compose(&acc, next)?;
    }
    Ok(acc)
}

/// Checks that `f` has the given source and target.
pub fn has_type<C: Category>(cat: &C, f: &C::Mor, src: &C::Obj, dst: &C::Obj) -> bool {
    cat.source(f) == *src && cat.target(f) == *dst
}
