use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// One of the two inequalities characterizing Bloch vectors of density matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// `0 ≤ |n|² ≤ 1`
    NormSquared,
    /// `0 ≤ 3|n|² − 2 n·(n⋆n) ≤ 1`
    Cubic,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::NormSquared => write!(f, "0 <= |n|^2 <= 1"),
            Constraint::Cubic => write!(f, "0 <= 3|n|^2 - 2 n.(n*n) <= 1"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("non-finite component {value} at position {position}")]
    NonFinite { position: usize, value: f64 },

    #[error("not a density matrix Bloch vector: constraint {constraint} violated (value {value})")]
    InvalidBloch { constraint: Constraint, value: f64 },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("trace is {trace}, expected 1")]
    WrongTrace { trace: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("matrix is not unitary (max deviation of U^dagger U from I: {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("determinant is {re}{im:+}i, expected 1")]
    NotSpecial { re: f64, im: f64 },

    #[error("{argument} argument is not a pure state")]
    NotPure { argument: &'static str },

    #[error("level {level} outside the open interval (0, 1)")]
    InvalidLevel { level: f64 },

    #[error("grid resolution {resolution} must be at least 2")]
    InvalidResolution { resolution: usize },

    #[error("no contour found at level {level}")]
    EmptyContour { level: f64 },
}
