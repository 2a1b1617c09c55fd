//! Adjoint action of `SU(2)` and `SU(3)` on Bloch vectors.
//!
//! Conjugation `ρ ↦ UρU†` acts on the Bloch vector of `ρ` as the real matrix
//! `Ad(U)ᵢⱼ = ½ Tr(λᵢ U λⱼ U†)`, which is orthogonal with unit determinant. For qubits
//! the same formula with Pauli matrices gives the familiar rotation of the Bloch sphere.
//!
//! Random unitaries are drawn from the Haar measure by orthonormalizing the columns of a
//! complex Gaussian matrix (equivalently, QR with a positive real `R` diagonal) and then
//! dividing out the cube root of the determinant. The generator is ChaCha8 seeded with
//! [`rand::SeedableRng::seed_from_u64`], so a seed fixes the output on every platform.

use std::ops::Mul;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::bloch::{Vec8, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::gellmann::basis;
use crate::matrix::CMat3;

/// Tolerance on `U†U = I` and `det U = 1`.
pub const UNITARY_TOL: f64 = 1e-12;

/// A special unitary 3×3 matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Unitary3(CMat3);

impl Unitary3 {
    pub fn new(m: CMat3) -> Result<Self> {
        let deviation = (m.adjoint() * m).max_abs_diff(&CMat3::IDENTITY);
        if !(deviation <= UNITARY_TOL) {
            return Err(Error::NotUnitary { deviation });
        }
        let det = m.det();
        if (det - Complex64::new(1.0, 0.0)).norm() > UNITARY_TOL {
            return Err(Error::NotSpecial {
                re: det.re,
                im: det.im,
            });
        }
        Ok(Self(m))
    }

    pub fn identity() -> Self {
        Self(CMat3::IDENTITY)
    }

    /// `diag(e^{ia}, e^{ib}, e^{−i(a+b)})`
    pub fn diagonal_phases(a: f64, b: f64) -> Self {
        let p = |t: f64| Complex64::from_polar(1.0, t);
        let mut m = CMat3::ZERO;
        m.m[0][0] = p(a);
        m.m[1][1] = p(b);
        m.m[2][2] = p(-(a + b));
        Self(m)
    }

    pub fn matrix(&self) -> &CMat3 {
        &self.0
    }
}

impl Mul for Unitary3 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

/// A special unitary 2×2 matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Unitary2([[Complex64; 2]; 2]);

impl Unitary2 {
    pub fn new(m: [[Complex64; 2]; 2]) -> Result<Self> {
        let prod = mul2(&adjoint2(&m), &m);
        let deviation = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| (prod[i][j] - if i == j { 1.0 } else { 0.0 }).norm())
            .fold(0.0, f64::max);
        if !(deviation <= UNITARY_TOL) {
            return Err(Error::NotUnitary { deviation });
        }
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if (det - Complex64::new(1.0, 0.0)).norm() > UNITARY_TOL {
            return Err(Error::NotSpecial {
                re: det.re,
                im: det.im,
            });
        }
        Ok(Self(m))
    }

    pub fn identity() -> Self {
        let (z, o) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        Self([[o, z], [z, o]])
    }

    /// `exp(−iθ σ·axis / 2)` for a unit `axis`.
    pub fn rotation(axis: [f64; 3], theta: f64) -> Result<Self> {
        let norm = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
        let [x, y, z] = axis.map(|a| a / norm);
        let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        Self::new([
            [Complex64::new(c, -s * z), Complex64::new(-s * y, -s * x)],
            [Complex64::new(s * y, -s * x), Complex64::new(c, s * z)],
        ])
    }

    pub fn matrix(&self) -> &[[Complex64; 2]; 2] {
        &self.0
    }
}

/// Image of a `SU(3)` element in `SO(8)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Adjoint8(pub [[f64; 8]; 8]);

/// Image of a `SU(2)` element in `SO(3)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Adjoint3(pub [[f64; 3]; 3]);

impl Adjoint8 {
    pub fn identity() -> Self {
        Self(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { 1.0 } else { 0.0 })
        }))
    }

    pub fn apply(&self, n: &Vec8) -> Vec8 {
        let v = n.as_array();
        let out = self
            .0
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum());
        Vec8::new(out).expect("finite rotation of a finite vector")
    }

    pub fn transpose(&self) -> Self {
        Self(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[j][i])
        }))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        max_diff(self.0.as_flattened(), other.0.as_flattened())
    }

    /// Largest entry of `AᵀA − I`.
    pub fn orthogonality_deviation(&self) -> f64 {
        (self.transpose() * *self).max_abs_diff(&Self::identity())
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> f64 {
        let mut a = self.0;
        let mut det = 1.0;
        for col in 0..8 {
            let pivot = (col..8)
                .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
                .unwrap();
            if a[pivot][col] == 0.0 {
                return 0.0;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= a[col][col];
            for row in col + 1..8 {
                let factor = a[row][col] / a[col][col];
                for k in col..8 {
                    a[row][k] -= factor * a[col][k];
                }
            }
        }
        det
    }
}

impl Mul for Adjoint8 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..8).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
        }))
    }
}

impl Adjoint3 {
    pub fn identity() -> Self {
        Self([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn apply(&self, v: [f64; 3]) -> [f64; 3] {
        self.0
            .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
    }

    pub fn transpose(&self) -> Self {
        Self(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[j][i])
        }))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        max_diff(self.0.as_flattened(), other.0.as_flattened())
    }

    pub fn orthogonality_deviation(&self) -> f64 {
        (self.transpose() * *self).max_abs_diff(&Self::identity())
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }
}

impl Mul for Adjoint3 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..3).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
        }))
    }
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// `Ad(U)ᵢⱼ = ½ Tr(λᵢ U λⱼ U†)`, evaluated entry by entry.
pub fn adjoint_su3(u: &Unitary3) -> Adjoint8 {
    let l = basis().matrices();
    let ud = u.0.adjoint();
    let conj: [CMat3; 8] = std::array::from_fn(|j| u.0 * l[j] * ud);
    Adjoint8(std::array::from_fn(|i| {
        std::array::from_fn(|j| 0.5 * (l[i] * conj[j]).trace().re)
    }))
}

/// `Ad(U)ᵢⱼ = ½ Tr(σᵢ U σⱼ U†)`.
pub fn adjoint_su2(u: &Unitary2) -> Adjoint3 {
    let s = pauli();
    let ud = adjoint2(&u.0);
    let conj: [[[Complex64; 2]; 2]; 3] = std::array::from_fn(|j| mul2(&mul2(&u.0, &s[j]), &ud));
    Adjoint3(std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let p = mul2(&s[i], &conj[j]);
            0.5 * (p[0][0] + p[1][1]).re
        })
    }))
}

/// Haar-random element of `SU(3)`, fixed by `seed`.
pub fn haar_random_su3(seed: u64) -> Unitary3 {
    haar_random_su3_with(&mut ChaCha8Rng::seed_from_u64(seed))
}

/// Haar-random element of `SU(3)` drawn from `rng`.
pub fn haar_random_su3_with<R: Rng + ?Sized>(rng: &mut R) -> Unitary3 {
    loop {
        let mut cols: [[Complex64; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| gaussian(rng)));
        if !orthonormalize(&mut cols) {
            continue;
        }
        let mut m = CMat3::ZERO;
        for (j, col) in cols.iter().enumerate() {
            for i in 0..3 {
                m.m[i][j] = col[i];
            }
        }
        let phase = Complex64::from_polar(1.0, -m.det().arg() / 3.0);
        if let Ok(u) = Unitary3::new(m.scale_complex(phase)) {
            return u;
        }
    }
}

/// Haar-random element of `SU(2)`, fixed by `seed`.
pub fn haar_random_su2(seed: u64) -> Unitary2 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        // Uniform point on S³ ⊂ C² gives (a, b) with U = [[a, −b*], [b, a*]].
        let (a, b) = (gaussian(&mut rng), gaussian(&mut rng));
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if norm < 1e-8 {
            continue;
        }
        let (a, b) = (a / norm, b / norm);
        if let Ok(u) = Unitary2::new([[a, -b.conj()], [b, a.conj()]]) {
            return u;
        }
    }
}

/// `count` points `Ad(Uᵢ)·n` with independent Haar-random `Uᵢ`, all drawn from one
/// generator seeded with `seed`.
pub fn orbit_sample(n: &Vec8, count: usize, seed: u64) -> Result<Vec<Vec8>> {
    if let Some((constraint, value)) = n.mixed_state_violation(DEFAULT_TOL) {
        return Err(Error::InvalidBloch { constraint, value });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| adjoint_su3(&haar_random_su3_with(&mut rng)).apply(n))
        .collect())
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Gram–Schmidt with one re-orthogonalization pass. Returns false on a rank-deficient draw.
fn orthonormalize(cols: &mut [[Complex64; 3]; 3]) -> bool {
    for j in 0..3 {
        for _pass in 0..2 {
            for k in 0..j {
                let proj: Complex64 = (0..3).map(|i| cols[k][i].conj() * cols[j][i]).sum();
                for i in 0..3 {
                    let sub = proj * cols[k][i];
                    cols[j][i] -= sub;
                }
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-8 {
            return false;
        }
        cols[j].iter_mut().for_each(|z| *z /= norm);
    }
    true
}

fn pauli() -> [[[Complex64; 2]; 2]; 3] {
    let z = Complex64::new(0.0, 0.0);
    let o = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    [[[z, o], [o, z]], [[z, -i], [i, z]], [[o, z], [z, -o]]]
}

fn mul2(a: &[[Complex64; 2]; 2], b: &[[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]))
}

fn adjoint2(a: &[[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].conj()))
}
