//! Bloch-vector geometry of qutrit (three-level) quantum states.
//!
//! A qutrit density matrix is written as `ρ = (1/3)(I + √3 n·λ)` where `λ` are the
//! eight Gell-Mann matrices and `n` is a real 8-vector. This crate provides:
//!
//! - [`gellmann`]: the Gell-Mann basis and the `f`/`d` structure tensors,
//! - [`bloch`]: dot, wedge and star products on 8-vectors and the closed-form
//!   pure/mixed-state tests,
//! - [`density`]: conversion between Bloch vectors and density matrices, spectra,
//!   characteristic-polynomial coefficients and the base-3 entropy of mixing,
//! - [`adjoint`]: the adjoint maps `SU(2) → SO(3)` and `SU(3) → SO(8)`, Haar sampling
//!   and unitary orbits,
//! - [`triangle`]: the `(n₃, n₈)` plane of diagonal states, its eigenvalue triangle and
//!   equi-entropy contours,
//! - [`cli`]: the command-line front end used by the `qutrit` binary.

pub mod adjoint;
pub mod bloch;
pub mod cli;
pub mod density;
mod error;
pub mod gellmann;
pub mod matrix;
pub mod triangle;

pub use adjoint::{
    adjoint_su2, adjoint_su3, haar_random_su2, haar_random_su3, orbit_sample, Adjoint3, Adjoint8,
    Unitary2, Unitary3,
};
pub use bloch::{Vec8, DEFAULT_TOL};
pub use density::{Density3, Spectrum3};
pub use error::{Constraint, Error, Result};
pub use gellmann::{GellMannBasis, StructureTensors};
pub use matrix::CMat3;
pub use triangle::{DiagPoint, TriangleRegion};

/// `√3`, used throughout the parametrization.
pub(crate) fn sqrt3() -> f64 {
    3f64.sqrt()
}
