//! Exact kernel for monoidal categories.
//!
//! The crate checks coherence laws on explicit finite scopes, builds tensor
//! products induced along functors and from monoidal bases, transfers duals
//! along strong monoidal functors, and ships three concrete carriers:
//! exact finite-dimensional vector spaces ([`finvect`]), oriented 2-d
//! cobordism classes ([`cob`]) and truncated-Fourier loop spaces
//! ([`loopspace`]).
//!
//! No comparison anywhere in the laws uses a floating tolerance: morphism
//! equality is identifier equality, exact rational equality, or canonical
//! form equality, depending on the carrier.

pub mod category;
pub mod cob;
pub mod error;
pub mod finvect;
pub mod induced;
pub mod linalg;
pub mod loopspace;
pub mod monoidal;
pub mod report;

pub use error::{Error, Result};
pub use report::{Failure, Report, Status};
