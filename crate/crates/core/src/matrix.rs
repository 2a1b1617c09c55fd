//! Small dense complex 3×3 matrices.
//!
//! Row-major storage: `m[row][col]`.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMat3 {
    pub m: [[Complex64; 3]; 3],
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

impl CMat3 {
    pub const ZERO: Self = Self { m: [[ZERO; 3]; 3] };

    pub const IDENTITY: Self = Self {
        m: [[ONE, ZERO, ZERO], [ZERO, ONE, ZERO], [ZERO, ZERO, ONE]],
    };

    pub fn new(m: [[Complex64; 3]; 3]) -> Self {
        Self { m }
    }

    pub fn from_real(rows: [[f64; 3]; 3]) -> Self {
        let mut r = Self::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                r.m[i][j] = Complex64::new(rows[i][j], 0.0);
            }
        }
        r
    }

    pub fn diag(d: [f64; 3]) -> Self {
        let mut r = Self::ZERO;
        for (i, &x) in d.iter().enumerate() {
            r.m[i][i] = Complex64::new(x, 0.0);
        }
        r
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut r = Self::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                r.m[i][j] = self.m[j][i].conj();
            }
        }
        r
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.m;
        let a = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
        let b = m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
        let c = m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        a - b + c
    }

    pub fn scale(&self, s: f64) -> Self {
        self.scale_complex(Complex64::new(s, 0.0))
    }

    pub fn scale_complex(&self, s: Complex64) -> Self {
        let mut r = *self;
        r.m.iter_mut().flatten().for_each(|z| *z *= s);
        r
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self − self†`.
    pub fn hermiticity_deviation(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_finite(&self) -> bool {
        self.m
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Eigenvalues of a Hermitian matrix, sorted descending.
    ///
    /// The eigenvalue farthest from `Tr/3` comes from the closed-form trigonometric
    /// solution of the shifted and scaled characteristic cubic. The other two come from
    /// the 2×2 restriction to the orthogonal complement of its eigenvector, which keeps
    /// repeated eigenvalues accurate to round-off (the cubic alone only resolves them to
    /// about `√ε`). Only the Hermitian part of `self` is read.
    pub fn hermitian_eigenvalues(&self) -> [f64; 3] {
        let a = &self.m;
        let (a00, a11, a22) = (a[0][0].re, a[1][1].re, a[2][2].re);
        let (a01, a02, a12) = (a[0][1], a[0][2], a[1][2]);

        let q = (a00 + a11 + a22) / 3.0;
        let off = a01.norm_sqr() + a02.norm_sqr() + a12.norm_sqr();
        let (b00, b11, b22) = (a00 - q, a11 - q, a22 - q);
        let spread = b00 * b00 + b11 * b11 + b22 * b22 + 2.0 * off;
        if spread == 0.0 {
            return [q; 3];
        }
        let p = (spread / 6.0).sqrt();

        // det(A − qI), written with real arithmetic only.
        let det = b00 * b11 * b22 + 2.0 * (a01 * a12 * a02.conj()).re
            - b00 * a12.norm_sqr()
            - b11 * a02.norm_sqr()
            - b22 * a01.norm_sqr();
        let r = (det / (2.0 * p * p * p)).clamp(-1.0, 1.0);
        let phi = r.acos() / 3.0;
        let extreme = if r >= 0.0 {
            q + 2.0 * p * phi.cos()
        } else {
            q + 2.0 * p * (phi + 2.0 * PI / 3.0).cos()
        };

        let h = self.hermitian_part();
        let mut x = match h.null_vector(extreme) {
            Some(v) => {
                let (u, w) = complement(&v);
                let (d0, d1, c) = (h.form(&u, &u).re, h.form(&w, &w).re, h.form(&u, &w));
                let mean = 0.5 * (d0 + d1);
                let rad = (0.5 * (d0 - d1)).hypot(c.norm());
                [extreme, mean + rad, mean - rad]
            }
            None => {
                let x1 = q + 2.0 * p * phi.cos();
                let x3 = q + 2.0 * p * (phi + 2.0 * PI / 3.0).cos();
                [x1, 3.0 * q - x1 - x3, x3]
            }
        };
        x.sort_by(|a, b| b.total_cmp(a));
        x
    }

    /// Hermitian matrix built from the real diagonal and the upper triangle.
    fn hermitian_part(&self) -> Self {
        let mut h = *self;
        for i in 0..3 {
            h.m[i][i].im = 0.0;
            for j in 0..i {
                h.m[i][j] = h.m[j][i].conj();
            }
        }
        h
    }

    /// `⟨u, A w⟩`
    fn form(&self, u: &[Complex64; 3], w: &[Complex64; 3]) -> Complex64 {
        (0..3)
            .map(|i| u[i].conj() * (0..3).map(|k| self.m[i][k] * w[k]).sum::<Complex64>())
            .sum()
    }

    /// Unit vector spanning the kernel of `A − xI`, from the largest cross product of
    /// two of its rows. `None` if `A − xI` has rank below two.
    fn null_vector(&self, x: f64) -> Option<[Complex64; 3]> {
        let mut rows = self.m;
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] -= Complex64::new(x, 0.0);
        }
        let best = [(0, 1), (0, 2), (1, 2)]
            .into_iter()
            .map(|(i, j)| cross(&rows[i], &rows[j]))
            .max_by(|a, b| norm3(a).total_cmp(&norm3(b)))?;
        let n = norm3(&best);
        (n > 0.0 && n.is_finite()).then(|| best.map(|z| z / n))
    }
}

fn cross(a: &[Complex64; 3], b: &[Complex64; 3]) -> [Complex64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm3(v: &[Complex64; 3]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Orthonormal basis `(u, w)` of the complement of the unit vector `v`.
fn complement(v: &[Complex64; 3]) -> ([Complex64; 3], [Complex64; 3]) {
    let u = if v[0].norm() >= v[2].norm() || v[1].norm() >= v[2].norm() {
        [-v[1].conj(), v[0].conj(), ZERO]
    } else {
        [ZERO, -v[2].conj(), v[1].conj()]
    };
    let nu = norm3(&u);
    let u = u.map(|z| z / nu);
    let w = cross(v, &u).map(|z| z.conj());
    let nw = norm3(&w);
    (u, w.map(|z| z / nw))
}

impl Mul for CMat3 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut r = Self::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                let mut s = ZERO;
                for k in 0..3 {
                    s += self.m[i][k] * rhs.m[k][j];
                }
                r.m[i][j] = s;
            }
        }
        r
    }
}

impl Add for CMat3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut r = self;
        for i in 0..3 {
            for j in 0..3 {
                r.m[i][j] += rhs.m[i][j];
            }
        }
        r
    }
}

impl Sub for CMat3 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for CMat3 {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}
