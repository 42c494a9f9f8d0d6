//! Monoidal structure, braidings, duality data and the generic law checkers.
//!
//! Checkers take an explicit [`Scope`](crate::category::Scope) and return one
//! [`Report`](crate::report::Report) per law. They are pure: the same inputs
//! give the same reports.

mod checks;
mod fin;
pub mod samples;

pub(crate) use checks::compare;
pub use checks::{check_bifunctoriality, check_hexagon, check_pentagon_triangle, check_zigzag, trace};
pub use fin::{parse_monoidal, FinBraiding, FinMonoidal, MonoidalFile};

use crate::category::{compose_chain, Category};
use crate::error::{Error, Result};

/// Tensor, unit and structural isomorphisms on a carrier.
pub trait Monoidal: Category {
    fn unit(&self) -> Self::Obj;
    fn tensor_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Obj>;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    /// `a_{X,Y,Z}: (X⊗Y)⊗Z → X⊗(Y⊗Z)`
    fn associator(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<Self::Mor>;
    /// `λ_X: I⊗X → X`
    fn left_unitor(&self, x: &Self::Obj) -> Result<Self::Mor>;
    /// `ρ_X: X⊗I → X`
    fn right_unitor(&self, x: &Self::Obj) -> Result<Self::Mor>;

    fn associator_inv(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<Self::Mor> {
        invert(self, &self.associator(x, y, z)?)
    }

    fn left_unitor_inv(&self, x: &Self::Obj) -> Result<Self::Mor> {
        invert(self, &self.left_unitor(x)?)
    }

    fn right_unitor_inv(&self, x: &Self::Obj) -> Result<Self::Mor> {
        invert(self, &self.right_unitor(x)?)
    }

    /// Strict carriers have identity associators and unitors; checkers then
    /// compare objects instead of composing structural maps.
    fn is_strict(&self) -> bool {
        false
    }
}

pub(crate) fn invert<C: Category + ?Sized>(cat: &C, f: &C::Mor) -> Result<C::Mor> {
    cat.inverse(f).ok_or_else(|| Error::NotInvertible(cat.show_mor(f)))
}

/// A family `C_{X,Y}: X⊗Y → Y⊗X`.
pub trait Braiding<C: Monoidal> {
    fn component(&self, cat: &C, x: &C::Obj, y: &C::Obj) -> Result<C::Mor>;
    fn is_symmetric(&self) -> bool;
}

/// Duality data for an object `X`: `ev: X*⊗X → I` and `coev: I → X⊗X*`.
#[derive(Clone, Debug)]
pub struct DualityData<C: Category> {
    pub object: C::Obj,
    pub dual: C::Obj,
    pub ev: C::Mor,
    pub coev: C::Mor,
}

impl<C: Category> PartialEq for DualityData<C> {
    fn eq(&self, other: &Self) -> bool {
        self.object == other.object && self.dual == other.dual && self.ev == other.ev && self.coev == other.coev
    }
}

impl<C: Monoidal> DualityData<C> {
    pub fn new(object: C::Obj, dual: C::Obj, ev: C::Mor, coev: C::Mor) -> Self {
        DualityData { object, dual, ev, coev }
    }

    /// Adapter for carriers that supply evaluation on `X⊗X*`: the stored
    /// evaluation is `ev_right ∘ C_{X*,X}`.
    pub fn from_right_evaluation<B: Braiding<C>>(
        cat: &C,
        braiding: &B,
        object: C::Obj,
        dual: C::Obj,
        ev_right: C::Mor,
        coev: C::Mor,
    ) -> Result<Self> {
        let swap = braiding.component(cat, &dual, &object)?;
        let ev = compose_chain(cat, &[("C_{X*,X}", swap), ("ev on X⊗X*", ev_right)])?;
        Ok(DualityData { object, dual, ev, coev })
    }
}
