//! Exact symbolic computation in the ring `D` of differential operators on an
//! affine monomial curve `A = k[Γ]`, where `Γ` is a numerical semigroup.
//!
//! Everything is computed over the rationals with exact arithmetic: no
//! floating point anywhere. The main entry points are
//!
//! - [`semigroup::NumericalSemigroup`]: gaps, the sets `Ω(w)`, the counting
//!   function `σ(w)`, and the plane semigroup `Γ'` of the associated graded
//!   ring,
//! - [`opalgebra::LaurentWeylOperator`]: normal-form arithmetic in
//!   `Diff(T) = k[t,t⁻¹]⟨∂⟩`, the graded division algorithm, and membership
//!   tests for `D` and the bimodules `D(A,B)`, `D(B,A)`,
//! - [`diffring`]: the minimal-order operators `P_w`, the generator set of
//!   `D`, bases of the graded pieces `D_w`, and principal symbols,
//! - [`hilbert`]: the Bernstein filtration, Hilbert functions of cyclic
//!   modules, quasi-polynomial fitting, dimension and multiplicity,
//! - [`modules`]: explicit graded models (`A`, `T/A`, `N_α`, `M_α`, `M_∞`,
//!   cyclic quotients) with simplicity and localization certificates,
//! - [`ext`]: degree-zero Ext¹ groups between the simple graded modules,
//! - [`indecomp`]: alternating-word modules over the Weyl algebra,
//!   composition series, and indecomposability certificates.
//!
//! The `dmod-curve` binary exposes the same functionality as subcommands;
//! `dmod-curve verify` runs the full verification suite. The `examples/`
//! directory has one runnable walkthrough per capability.

pub mod cli;
pub mod diffring;
pub mod error;
pub mod ext;
pub mod hilbert;
pub mod indecomp;
pub mod linalg;
pub mod modules;
pub mod opalgebra;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod semigroup;
pub mod verify;

pub use error::{Error, Result};
pub use opalgebra::LaurentWeylOperator;
pub use rat::Rat;
pub use semigroup::NumericalSemigroup;
