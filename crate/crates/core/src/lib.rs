//! Finite commutative semirings, their k-ideals, and constructive primary
//! decomposition of k-ideals, together with bounded certificates in `N` and
//! `N[x]`.

pub mod catalog;
pub mod classify;
pub mod decompose;
pub mod elemset;
pub mod enumerate;
pub mod error;
pub mod ideal;
pub mod natpoly;
pub mod par;
pub mod semiring;
pub mod srs;
pub mod verify;

pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use ideal::{Ideal, KIdeal};
pub use semiring::{Elem, FiniteSemiring, StructuralFlags};
