//! Exact equivariant Schubert calculus on flag manifolds.
//!
//! Structure constants of equivariant cohomology (`c`) and equivariant
//! K-theory (`a`, `a∘`) are computed from subword sums over a word for the
//! target Weyl group element, each summand an operator product applied to
//! the constant `1`. The crate also carries the operator algebras in which
//! these formulas live, Bott-Samelson constants and restrictions, and
//! independent oracles (double Schubert polynomials, localization solves,
//! fixed-point pairings) used to cross-check them.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod error;
pub mod hecke_ops;
pub mod hpoly;
pub mod kring;
pub mod oracle;
pub mod ring;
pub mod root_weyl;
pub mod schubert;

pub use error::{Error, Result};
pub use hpoly::{HPoly, Poly, QPoly};
pub use kring::KElem;
pub use root_weyl::{CartanData, Subword, Weight, WeylElement, Word};
