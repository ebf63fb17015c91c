//! Exact verification kernel for the Taft Hopf algebra `T_{n^2}(w)` and its
//! comodule algebra `A_n(w) = k[z]/(z^n - w)`.
//!
//! All scalars live in the cyclotomic field `Q(w)` and every check is an exact
//! equality of canonical forms.

pub mod check;
pub mod comodule;
pub mod cyclotomic;
pub mod dual_pairing;
mod error;
pub mod linalg;
pub mod poly;
pub mod qcombinat;
pub mod quantum_plane_a;
pub mod taft_hopf;
pub mod yetter_drinfeld;

pub use check::CaseResult;
pub use comodule::Coaction;
pub use cyclotomic::{CycContext, CycScalar};
pub use dual_pairing::{DualElement, Pairing};
pub use error::{Error, Result};
pub use quantum_plane_a::AElement;
pub use taft_hopf::{TaftElement, TaftMonomial, TensorElement};

// The guide's snippets run as doctests of this crate.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/q-binomials.md")]
    mod q_binomials {}
    #[doc = include_str!("../../../book/src/taft-algebra.md")]
    mod taft_algebra {}
    #[doc = include_str!("../../../book/src/coaction.md")]
    mod coaction {}
    #[doc = include_str!("../../../book/src/yetter-drinfeld.md")]
    mod yetter_drinfeld {}
    #[doc = include_str!("../../../book/src/duality.md")]
    mod duality {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
