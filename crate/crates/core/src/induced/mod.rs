//! Tensors induced along functors and from bases, lax monoidal functors,
//! and transport of duals.
//!
//! Every construction here runs the relevant checks itself and refuses
//! (with [`Error::Refused`](crate::Error::Refused) carrying the failing
//! reports) instead of returning a structure that breaks a law on its
//! scope.

mod base;
mod files;
mod image;
mod lax;
mod product;

pub use base::{induce_tensor_from_base, validate_base, Base, BaseTensor, Witness};
pub use files::{
    full_scope, load_category, load_monoidal, parse_base, parse_duality, parse_image, parse_lax, tabulate_on, BaseFile,
    Decomposing, DualityFile, FinBase, FinDuality, FinImage, FinLax, ImageFile, LaxFile, MapFile, MonoidalRef, Pasting,
    Resolver,
};
pub use image::{
    check_image_conditions, induce_tensor_on_image, ImageBraiding, ImageTensor, InducedOnImage, InducedTensor,
    LeastPreimage, Preimage, Provenance, SectionPreimage, TablePreimage,
};
pub use lax::{transfer_dual, verify_lax_monoidal, LaxMonoidalFunctor, LaxVerdict};
pub use product::{dual_in_product, ProductBraiding};

#[cfg(test)]
mod tests;
