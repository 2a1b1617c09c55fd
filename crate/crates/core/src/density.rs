//! Qutrit density matrices `ρ = (1/3)(I + √3 n·λ)`.
//!
//! The inverse map is `nⱼ = (√3/2) Tr(ρλⱼ)`, which follows from `Tr(λᵢλⱼ) = 2δᵢⱼ`.

use crate::bloch::{Vec8, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::gellmann::basis;
use crate::matrix::CMat3;
use crate::sqrt3;

/// Entrywise Hermiticity and trace tolerance for raw matrices.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Lowest eigenvalue accepted as non-negative.
pub const POSITIVITY_TOL: f64 = 1e-10;

/// A validated 3×3 density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Density3(CMat3);

/// Eigenvalues of a density matrix, sorted `x₁ ≥ x₂ ≥ x₃`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spectrum3(pub [f64; 3]);

impl Density3 {
    /// Validates a raw matrix.
    pub fn from_matrix(m: CMat3) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NotHermitian {
                deviation: f64::INFINITY,
            });
        }
        let deviation = m.hermiticity_deviation();
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = m.trace().re;
        if (trace - 1.0).abs() > HERMITIAN_TOL {
            return Err(Error::WrongTrace { trace });
        }
        let min_eigenvalue = m.hermitian_eigenvalues()[2];
        if min_eigenvalue < -POSITIVITY_TOL {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(Self(m))
    }

    /// `(1/3)(I + √3 n·λ)`, rejecting vectors outside the state space by [`DEFAULT_TOL`].
    pub fn from_bloch(n: &Vec8) -> Result<Self> {
        Self::from_bloch_with_tol(n, DEFAULT_TOL)
    }

    pub fn from_bloch_with_tol(n: &Vec8, tol: f64) -> Result<Self> {
        if let Some((constraint, value)) = n.mixed_state_violation(tol) {
            return Err(Error::InvalidBloch { constraint, value });
        }
        Ok(Self(bloch_matrix(n)))
    }

    /// Diagonal state `diag(x₁, x₂, x₃)`.
    pub fn diagonal(x: [f64; 3]) -> Result<Self> {
        Self::from_matrix(CMat3::diag(x))
    }

    pub fn maximally_mixed() -> Self {
        Self(CMat3::IDENTITY.scale(1.0 / 3.0))
    }

    pub fn matrix(&self) -> &CMat3 {
        &self.0
    }

    /// `nⱼ = (√3/2) Tr(ρλⱼ)`.
    pub fn to_bloch(&self) -> Vec8 {
        let half_s3 = sqrt3() / 2.0;
        let comps = basis()
            .matrices()
            .map(|l| half_s3 * (self.0 * l).trace().re);
        Vec8::new(comps).expect("finite matrix gives finite components")
    }

    pub fn spectrum(&self) -> Spectrum3 {
        Spectrum3(self.0.hermitian_eigenvalues())
    }

    /// Coefficients `(c₁, c₂, c₃)` of `ρ³ − c₁ρ² + c₂ρ − c₃I = 0`.
    ///
    /// `c₁ = Tr ρ`, `c₂ = (Tr(ρ)² − Tr ρ²)/2` and `c₃ = det ρ`, computed from the matrix
    /// entries rather than the spectrum.
    pub fn char_poly_coeffs(&self) -> (f64, f64, f64) {
        let c1 = self.0.trace().re;
        let c2 = 0.5 * (c1 * c1 - (self.0 * self.0).trace().re);
        let c3 = self.0.det().re;
        (c1, c2, c3)
    }

    /// Largest entry of `ρ³ − c₁ρ² + c₂ρ − c₃I`.
    pub fn cayley_hamilton_residual(&self) -> f64 {
        let (c1, c2, c3) = self.char_poly_coeffs();
        let r = self.0;
        let r2 = r * r;
        let lhs = r2 * r - r2.scale(c1) + r.scale(c2) - CMat3::IDENTITY.scale(c3);
        lhs.max_abs_diff(&CMat3::ZERO)
    }

    /// Base-3 entropy of mixing, in `[0, 1]`.
    pub fn entropy_of_mixing(&self) -> f64 {
        self.spectrum().entropy()
    }

    /// `UρU†` for any unitary `u`.
    pub fn conjugate(&self, u: &CMat3) -> Self {
        Self(*u * self.0 * u.adjoint())
    }
}

impl Spectrum3 {
    pub fn values(&self) -> [f64; 3] {
        self.0
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    /// `x₁x₂ + x₂x₃ + x₁x₃`
    pub fn pair_sum(&self) -> f64 {
        let [a, b, c] = self.0;
        a * b + b * c + a * c
    }

    /// `x₁x₂x₃`
    pub fn product(&self) -> f64 {
        self.0.iter().product()
    }

    /// `−Σ xᵢ log₃ xᵢ` with `0·log 0 = 0`; round-off negatives count as zero.
    pub fn entropy(&self) -> f64 {
        entropy_base3(&self.0)
    }
}

/// `−Σ xᵢ log₃ xᵢ` over non-positive-safe eigenvalues.
pub(crate) fn entropy_base3(x: &[f64]) -> f64 {
    let ln3 = 3f64.ln();
    let h: f64 = x.iter().filter(|&&v| v > 0.0).map(|&v| -v * v.ln()).sum();
    (h / ln3).max(0.0)
}

/// `(1/3)(I + √3 n·λ)` without validation.
pub(crate) fn bloch_matrix(n: &Vec8) -> CMat3 {
    let generator = basis().combine(n.as_array()).scale(sqrt3());
    (CMat3::IDENTITY + generator).scale(1.0 / 3.0)
}

pub fn from_bloch(n: &Vec8) -> Result<Density3> {
    Density3::from_bloch(n)
}

pub fn to_bloch(rho: &Density3) -> Vec8 {
    rho.to_bloch()
}

pub fn spectrum(rho: &Density3) -> Spectrum3 {
    rho.spectrum()
}

pub fn char_poly_coeffs(rho: &Density3) -> (f64, f64, f64) {
    rho.char_poly_coeffs()
}

pub fn entropy_of_mixing(rho: &Density3) -> f64 {
    rho.entropy_of_mixing()
}

/// `(1/3)(I + √3 n·λ)` for any finite vector, valid state or not.
///
/// Used to inspect the eigenvalues of vectors outside the state space.
pub fn unchecked_matrix(n: &Vec8) -> CMat3 {
    bloch_matrix(n)
}
