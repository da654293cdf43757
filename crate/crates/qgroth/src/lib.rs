//! Exact computer algebra for the reduced Grothendieck ring of finite-dimensional
//! modules over the queer Lie superalgebra q(n).
//!
//! The library works with three interlocking models of the same ring and checks them
//! against each other:
//!
//! - [`cartan`]: the Grothendieck ring of the Cartan subalgebra's module category with
//!   its parity involution, the reduced quotient in the `[C(λ)]` basis, and exact
//!   `{0, ±1}` structure constants.
//! - [`invariant`]: the Weyl-invariant subring in the orbit-sum `a_ν` basis, with its
//!   closed-form product and the wedge-model isomorphism.
//! - [`clifford`]: a ground-truth engine that realizes every `C(λ)` as explicit matrices
//!   over an exact multi-quadratic number type and extracts multiplicities by
//!   supertraces. Structure constants computed symbolically are validated against it.
//!
//! On top of these sit [`supercharacter`] (Verma-module supercharacters via the
//! `0/±1` coefficient law and the rank-2 irreducible table), [`ds`] (Duflo–Serganova
//! maps as weight reindexing / exterior-algebra truncation), [`exterior`] (the spoiled
//! wedge algebra both models embed into), [`wire`] (JSON formats), and [`verify`]
//! (the exhaustive verification suites behind `qgroth verify` and the acceptance tests).

pub mod cartan;
pub mod clifford;
pub mod ds;
pub mod error;
pub mod exterior;
pub mod invariant;
pub mod matrix;
pub mod quad;
pub mod supercharacter;
pub mod verify;
pub mod wire;
pub mod weight;

pub use error::QError;
pub use quad::QuadNum;
pub use weight::Weight;
