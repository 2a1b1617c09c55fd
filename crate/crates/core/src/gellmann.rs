//! Gell-Mann matrices and the `su(3)` structure tensors.
//!
//! Indices in the public API run over `1..=8`, matching the usual physics labelling
//! `λ₁ … λ₈`. The tensors are stored as the short tables of independent nonzero entries
//! and extended to all index orders by (anti)symmetry on lookup.
//!
//! The product of two basis matrices expands as
//!
//! ```text
//! λⱼλₖ = (2/3)δⱼₖ I + Σₗ dⱼₖₗ λₗ + i Σₗ fⱼₖₗ λₗ
//! ```

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::CMat3;
use crate::sqrt3;

/// The eight Gell-Mann matrices `λ₁ … λ₈`.
#[derive(Clone, Debug)]
pub struct GellMannBasis {
    matrices: [CMat3; 8],
}

impl GellMannBasis {
    pub fn new() -> Self {
        let z = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let s = 1.0 / sqrt3();
        let r = |x: f64| Complex64::new(x, 0.0);
        let matrices = [
            CMat3::new([[z, one, z], [one, z, z], [z, z, z]]),
            CMat3::new([[z, -i, z], [i, z, z], [z, z, z]]),
            CMat3::new([[one, z, z], [z, -one, z], [z, z, z]]),
            CMat3::new([[z, z, one], [z, z, z], [one, z, z]]),
            CMat3::new([[z, z, -i], [z, z, z], [i, z, z]]),
            CMat3::new([[z, z, z], [z, z, one], [z, one, z]]),
            CMat3::new([[z, z, z], [z, z, -i], [z, i, z]]),
            CMat3::new([[r(s), z, z], [z, r(s), z], [z, z, r(-2.0 * s)]]),
        ];
        Self { matrices }
    }

    /// `λᵢ` for `i` in `1..=8`.
    pub fn get(&self, i: usize) -> Result<&CMat3> {
        check_index(i)?;
        Ok(&self.matrices[i - 1])
    }

    /// The matrices in order `λ₁ … λ₈`.
    pub fn matrices(&self) -> &[CMat3; 8] {
        &self.matrices
    }

    /// `Σᵢ cᵢ λᵢ` for real coefficients.
    pub fn combine(&self, coeffs: &[f64; 8]) -> CMat3 {
        self.matrices
            .iter()
            .zip(coeffs)
            .fold(CMat3::ZERO, |acc, (l, &c)| acc + l.scale(c))
    }
}

impl Default for GellMannBasis {
    fn default() -> Self {
        Self::new()
    }
}

/// Shared, lazily built basis.
pub fn basis() -> &'static GellMannBasis {
    static BASIS: OnceLock<GellMannBasis> = OnceLock::new();
    BASIS.get_or_init(GellMannBasis::new)
}

/// Shared, lazily built structure tensors.
pub fn tensors() -> &'static StructureTensors {
    static TENSORS: OnceLock<StructureTensors> = OnceLock::new();
    TENSORS.get_or_init(StructureTensors::new)
}

/// `λᵢ` for `i` in `1..=8`.
pub fn lambda(i: usize) -> Result<CMat3> {
    basis().get(i).copied()
}

/// Totally antisymmetric structure constant `f_{jkl}`.
pub fn f_symbol(j: usize, k: usize, l: usize) -> Result<f64> {
    tensors().f(j, k, l)
}

/// Totally symmetric tensor `d_{jkl}`.
pub fn d_symbol(j: usize, k: usize, l: usize) -> Result<f64> {
    tensors().d(j, k, l)
}

/// `λⱼλₖ` rebuilt from the structure tensors.
pub fn product_expansion(j: usize, k: usize) -> Result<CMat3> {
    let t = tensors();
    let b = basis();
    let mut out = if j == k {
        CMat3::IDENTITY.scale(2.0 / 3.0)
    } else {
        check_index(j)?;
        check_index(k)?;
        CMat3::ZERO
    };
    for l in 1..=8 {
        let coeff = Complex64::new(t.d(j, k, l)?, t.f(j, k, l)?);
        if coeff != Complex64::new(0.0, 0.0) {
            out = out + b.get(l)?.scale_complex(coeff);
        }
    }
    Ok(out)
}

/// One independent tensor entry with 1-based indices sorted ascending.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TensorEntry {
    pub indices: [usize; 3],
    pub value: f64,
}

/// The `f` and `d` tensors of `su(3)`.
#[derive(Clone, Debug)]
pub struct StructureTensors {
    f: Vec<TensorEntry>,
    d: Vec<TensorEntry>,
}

impl StructureTensors {
    pub fn new() -> Self {
        let s3 = sqrt3();
        let half = 0.5;
        // Tables as conventionally listed; entries are canonicalized below.
        let f_table: [([usize; 3], f64); 9] = [
            ([1, 2, 3], 1.0),
            ([4, 5, 8], s3 / 2.0),
            ([6, 7, 8], s3 / 2.0),
            ([1, 4, 7], half),
            ([2, 4, 6], half),
            ([2, 5, 7], half),
            ([3, 4, 5], half),
            ([5, 1, 6], half),
            ([6, 3, 7], half),
        ];
        let d_table: [([usize; 3], f64); 16] = [
            ([1, 1, 8], 1.0 / s3),
            ([2, 2, 8], 1.0 / s3),
            ([3, 3, 8], 1.0 / s3),
            ([8, 8, 8], -1.0 / s3),
            ([4, 4, 8], -1.0 / (2.0 * s3)),
            ([5, 5, 8], -1.0 / (2.0 * s3)),
            ([6, 6, 8], -1.0 / (2.0 * s3)),
            ([7, 7, 8], -1.0 / (2.0 * s3)),
            ([1, 4, 6], half),
            ([1, 5, 7], half),
            ([2, 4, 7], -half),
            ([2, 5, 6], half),
            ([3, 4, 4], half),
            ([3, 5, 5], half),
            ([3, 6, 6], -half),
            ([3, 7, 7], -half),
        ];
        let canon = |(idx, v): ([usize; 3], f64), antisym: bool| {
            let (sorted, odd) = sort_with_parity(idx);
            let sign = if antisym && odd { -1.0 } else { 1.0 };
            TensorEntry {
                indices: sorted,
                value: sign * v,
            }
        };
        let mut f: Vec<_> = f_table.into_iter().map(|e| canon(e, true)).collect();
        let mut d: Vec<_> = d_table.into_iter().map(|e| canon(e, false)).collect();
        f.sort_by_key(|e| e.indices);
        d.sort_by_key(|e| e.indices);
        Self { f, d }
    }

    /// Independent nonzero `f` entries, indices ascending.
    pub fn f_entries(&self) -> &[TensorEntry] {
        &self.f
    }

    /// Independent nonzero `d` entries, indices ascending.
    pub fn d_entries(&self) -> &[TensorEntry] {
        &self.d
    }

    pub fn f(&self, j: usize, k: usize, l: usize) -> Result<f64> {
        let idx = [j, k, l];
        idx.iter().try_for_each(|&i| check_index(i))?;
        let (sorted, odd) = sort_with_parity(idx);
        if sorted[0] == sorted[1] || sorted[1] == sorted[2] {
            return Ok(0.0);
        }
        let v = lookup(&self.f, sorted);
        Ok(if odd { -v } else { v })
    }

    pub fn d(&self, j: usize, k: usize, l: usize) -> Result<f64> {
        let idx = [j, k, l];
        idx.iter().try_for_each(|&i| check_index(i))?;
        Ok(lookup(&self.d, sort_with_parity(idx).0))
    }

    /// Every nonzero `f_{jkl}` over all index orders, 0-based.
    pub fn f_expanded(&self) -> impl Iterator<Item = ([usize; 3], f64)> + '_ {
        expand(&self.f, true)
    }

    /// Every nonzero `d_{jkl}` over all index orders, 0-based.
    pub fn d_expanded(&self) -> impl Iterator<Item = ([usize; 3], f64)> + '_ {
        expand(&self.d, false)
    }
}

impl Default for StructureTensors {
    fn default() -> Self {
        Self::new()
    }
}

fn check_index(i: usize) -> Result<()> {
    if (1..=8).contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i, max: 8 })
    }
}

fn lookup(entries: &[TensorEntry], sorted: [usize; 3]) -> f64 {
    entries
        .binary_search_by_key(&sorted, |e| e.indices)
        .map_or(0.0, |pos| entries[pos].value)
}

/// Sorts three indices ascending, reporting whether the permutation was odd.
fn sort_with_parity(mut idx: [usize; 3]) -> ([usize; 3], bool) {
    let mut odd = false;
    for (a, b) in [(0, 1), (1, 2), (0, 1)] {
        if idx[a] > idx[b] {
            idx.swap(a, b);
            odd = !odd;
        }
    }
    (idx, odd)
}

const PERMUTATIONS: [([usize; 3], bool); 6] = [
    ([0, 1, 2], false),
    ([1, 2, 0], false),
    ([2, 0, 1], false),
    ([1, 0, 2], true),
    ([0, 2, 1], true),
    ([2, 1, 0], true),
];

fn expand(entries: &[TensorEntry], antisym: bool) -> impl Iterator<Item = ([usize; 3], f64)> + '_ {
    entries.iter().flat_map(move |e| {
        let idx = e.indices.map(|i| i - 1);
        let mut seen: Vec<[usize; 3]> = Vec::with_capacity(6);
        PERMUTATIONS
            .iter()
            .filter_map(|&(p, odd)| {
                let perm = [idx[p[0]], idx[p[1]], idx[p[2]]];
                if seen.contains(&perm) {
                    return None;
                }
                seen.push(perm);
                let sign = if antisym && odd { -1.0 } else { 1.0 };
                Some((perm, sign * e.value))
            })
            .collect::<Vec<_>>()
    })
}
