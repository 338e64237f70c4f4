//! Exact computation in quantum Weyl algebras of classical Lie algebras:
//! Laurent coefficients in fractional powers of `q`, weight lattices and Weyl
//! groups, normal-ordered operator algebras acting on lattice functions,
//! Poisson and Goldman brackets, and Groebner-basis ideal membership for the
//! rank-one character variety of the torus.

pub mod charvariety;
pub mod cli;
pub mod error;
pub mod ideals;
pub mod knotdata;
pub mod parse;
pub mod properties;
pub mod qlaurent;
pub mod qweyl_algebra;
pub mod rootdata;
pub mod verify;

pub use error::{Error, Result};
pub use qlaurent::{quantum_integer, Exponent, HJet, LaurentQ, Rational};
pub use qweyl_algebra::{AlgebraElement, CommPoly};
pub use rootdata::{Family, RootData, Weight, WeylElement};
