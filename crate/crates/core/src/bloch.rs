//! Real 8-vectors and their `su(3)` products.
//!
//! For Bloch vectors `a`, `b`:
//!
//! ```text
//! a·b     = Σₖ aₖbₖ
//! (a∧b)ⱼ  = √3 Σₖₗ fⱼₖₗ aₖbₗ
//! (a⋆b)ⱼ  = √3 Σₖₗ dⱼₖₗ aₖbₗ
//! ```
//!
//! `n` is the Bloch vector of a density matrix iff `0 ≤ |n|² ≤ 1` and
//! `0 ≤ 3|n|² − 2 n·(n⋆n) ≤ 1`; it is pure iff additionally `|n|² = 1` and `n⋆n = n`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Constraint, Error, Result};
use crate::gellmann::tensors;
use crate::sqrt3;

/// Default slack for all state predicates.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A real 8-vector with finite components.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Vec8([f64; 8]);

impl Vec8 {
    pub const ZERO: Self = Self([0.0; 8]);

    pub fn new(components: [f64; 8]) -> Result<Self> {
        match components.iter().position(|x| !x.is_finite()) {
            Some(position) => Err(Error::NonFinite {
                position: position + 1,
                value: components[position],
            }),
            None => Ok(Self(components)),
        }
    }

    /// Builds from a slice that must hold exactly eight finite numbers.
    pub fn from_slice(values: &[f64]) -> Result<Self> {
        let arr: [f64; 8] = values.try_into().map_err(|_| Error::IndexOutOfRange {
            index: values.len(),
            max: 8,
        })?;
        Self::new(arr)
    }

    /// Unit vector `eᵢ`, `i` in `1..=8`.
    pub fn unit(i: usize) -> Result<Self> {
        if !(1..=8).contains(&i) {
            return Err(Error::IndexOutOfRange { index: i, max: 8 });
        }
        let mut c = [0.0; 8];
        c[i - 1] = 1.0;
        Ok(Self(c))
    }

    /// The vector `(0, 0, n₃, 0, 0, 0, 0, n₈)` of a diagonal state.
    pub fn diagonal(n3: f64, n8: f64) -> Result<Self> {
        Self::new([0.0, 0.0, n3, 0.0, 0.0, 0.0, 0.0, n8])
    }

    pub fn as_array(&self) -> &[f64; 8] {
        &self.0
    }

    /// Component `nᵢ`, `i` in `1..=8`.
    pub fn get(&self, i: usize) -> Option<f64> {
        i.checked_sub(1).and_then(|k| self.0.get(k).copied())
    }

    pub fn n3(&self) -> f64 {
        self.0[2]
    }

    pub fn n8(&self) -> f64 {
        self.0[7]
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Antisymmetric product built from the `f` tensor.
    pub fn wedge(&self, other: &Self) -> Self {
        contract(tensors().f_expanded(), self, other)
    }

    /// Symmetric product built from the `d` tensor.
    pub fn star(&self, other: &Self) -> Self {
        contract(tensors().d_expanded(), self, other)
    }

    /// The two constraint values `(|n|², 3|n|² − 2 n·(n⋆n))`.
    pub fn constraint_values(&self) -> (f64, f64) {
        let q1 = self.norm_sqr();
        let q2 = 3.0 * q1 - 2.0 * self.dot(&self.star(self));
        (q1, q2)
    }

    /// The first violated constraint and its value, if any.
    pub fn mixed_state_violation(&self, tol: f64) -> Option<(Constraint, f64)> {
        let (q1, q2) = self.constraint_values();
        let outside = |q: f64| q < -tol || q > 1.0 + tol;
        if outside(q1) {
            Some((Constraint::NormSquared, q1))
        } else if outside(q2) {
            Some((Constraint::Cubic, q2))
        } else {
            None
        }
    }

    /// Whether `self` is the Bloch vector of a (possibly mixed) density matrix.
    pub fn is_mixed_state(&self, tol: f64) -> bool {
        self.mixed_state_violation(tol).is_none()
    }

    /// Whether `self` is the Bloch vector of a pure state: `|n|² = 1` and `n⋆n = n`.
    pub fn is_pure(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol && self.star(self).max_abs_diff(self) <= tol
    }
}

/// `(a, b) ↦ √3 Σ T_{jkl} a_k b_l` over the expanded nonzero entries of `T`.
fn contract(entries: impl Iterator<Item = ([usize; 3], f64)>, a: &Vec8, b: &Vec8) -> Vec8 {
    let mut out = [0.0; 8];
    for ([j, k, l], v) in entries {
        out[j] += v * a.0[k] * b.0[l];
    }
    let s = sqrt3();
    Vec8(out.map(|x| s * x))
}

pub fn dot(a: &Vec8, b: &Vec8) -> f64 {
    a.dot(b)
}

pub fn wedge(a: &Vec8, b: &Vec8) -> Vec8 {
    a.wedge(b)
}

pub fn star(a: &Vec8, b: &Vec8) -> Vec8 {
    a.star(b)
}

pub fn is_pure(n: &Vec8, tol: f64) -> bool {
    n.is_pure(tol)
}

pub fn is_mixed_state(n: &Vec8, tol: f64) -> bool {
    n.is_mixed_state(tol)
}

/// Angle `arccos(n·m)` between two pure-state Bloch vectors, in radians.
///
/// Orthogonal pure states sit at `2π/3`. Both arguments are checked with
/// [`DEFAULT_TOL`].
pub fn geodesic_distance(n: &Vec8, m: &Vec8) -> Result<f64> {
    if !n.is_pure(DEFAULT_TOL) {
        return Err(Error::NotPure { argument: "first" });
    }
    if !m.is_pure(DEFAULT_TOL) {
        return Err(Error::NotPure { argument: "second" });
    }
    Ok(n.dot(m).clamp(-1.0, 1.0).acos())
}

impl Add for Vec8 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut r = self.0;
        r.iter_mut().zip(rhs.0).for_each(|(a, b)| *a += b);
        Self(r)
    }
}

impl Sub for Vec8 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Vec8 {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|x| -x))
    }
}

impl Mul<f64> for Vec8 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self(self.0.map(|x| s * x))
    }
}

impl From<Vec8> for [f64; 8] {
    fn from(v: Vec8) -> Self {
        v.0
    }
}
