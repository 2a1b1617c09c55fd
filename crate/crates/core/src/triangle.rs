//! Diagonal qutrit states in the `(n₃, n₈)` plane.
//!
//! A diagonal state `ρ = (1/3)(I + √3(n₃λ₃ + n₈λ₈))` has eigenvalues
//!
//! ```text
//! x₁ = (1 + √3n₃ + n₈)/3,  x₂ = (1 − √3n₃ + n₈)/3,  x₃ = (1 − 2n₈)/3
//! ```
//!
//! and the state space is the equilateral triangle with the pure states
//! `R = (√3/2, 1/2)`, `B = (−√3/2, 1/2)` and `G = (0, −1)` at its vertices. The
//! eigenvalues are the barycentric coordinates of the point with respect to `R, B, G`.
//!
//! Midpoints of the edges are labelled `M_RB`, `M_RG` and `M_BG`. The `B`–`G` midpoint
//! is `(−√3/4, −1/4)`, the Bloch image of `(1/2)diag(0, 1, 1)`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::bloch::{Vec8, DEFAULT_TOL};
use crate::density::{entropy_base3, Density3};
use crate::error::{Error, Result};
use crate::sqrt3;

/// A point `(n₃, n₈)` in the plane of diagonal states.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiagPoint {
    pub n3: f64,
    pub n8: f64,
}

impl DiagPoint {
    pub fn new(n3: f64, n8: f64) -> Result<Self> {
        if !n3.is_finite() {
            return Err(Error::NonFinite {
                position: 3,
                value: n3,
            });
        }
        if !n8.is_finite() {
            return Err(Error::NonFinite {
                position: 8,
                value: n8,
            });
        }
        Ok(Self { n3, n8 })
    }

    pub fn to_vec8(&self) -> Vec8 {
        Vec8::diagonal(self.n3, self.n8).expect("DiagPoint components are finite")
    }

    /// Diagonal entries of the density matrix, in matrix order (not sorted).
    pub fn eigenvalues(&self) -> [f64; 3] {
        let s = sqrt3() * self.n3;
        [
            (1.0 + s + self.n8) / 3.0,
            (1.0 - s + self.n8) / 3.0,
            (1.0 - 2.0 * self.n8) / 3.0,
        ]
    }

    /// Rotation by 120° about the origin, carrying `R → B → G → R`.
    pub fn rotate_120(&self) -> Self {
        let (c, s) = (-0.5, sqrt3() / 2.0);
        Self {
            n3: c * self.n3 - s * self.n8,
            n8: s * self.n3 + c * self.n8,
        }
    }

    pub fn mirror_n3(&self) -> Self {
        Self {
            n3: -self.n3,
            n8: self.n8,
        }
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (self.n3 - other.n3).hypot(self.n8 - other.n8)
    }
}

/// The triangle of diagonal states.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleRegion {
    pub vertices: [DiagPoint; 3],
}

impl TriangleRegion {
    pub fn new() -> Self {
        let h = sqrt3() / 2.0;
        Self {
            vertices: [
                DiagPoint { n3: h, n8: 0.5 },
                DiagPoint { n3: -h, n8: 0.5 },
                DiagPoint { n3: 0.0, n8: -1.0 },
            ],
        }
    }

    /// `(n₃_min, n₃_max, n₈_min, n₈_max)` of the bounding box.
    pub fn bounding_box(&self) -> (f64, f64, f64, f64) {
        let h = sqrt3() / 2.0;
        (-h, h, -1.0, 0.5)
    }

    pub fn area(&self) -> f64 {
        let [a, b, c] = self.vertices;
        0.5 * ((b.n3 - a.n3) * (c.n8 - a.n8) - (c.n3 - a.n3) * (b.n8 - a.n8)).abs()
    }

    /// Barycentric coordinates with respect to `R, B, G`.
    pub fn barycentric(&self, p: &DiagPoint) -> [f64; 3] {
        let [a, b, c] = self.vertices;
        let det = (b.n8 - c.n8) * (a.n3 - c.n3) + (c.n3 - b.n3) * (a.n8 - c.n8);
        let l1 = ((b.n8 - c.n8) * (p.n3 - c.n3) + (c.n3 - b.n3) * (p.n8 - c.n8)) / det;
        let l2 = ((c.n8 - a.n8) * (p.n3 - c.n3) + (a.n3 - c.n3) * (p.n8 - c.n8)) / det;
        [l1, l2, 1.0 - l1 - l2]
    }

    pub fn contains(&self, p: &DiagPoint, tol: f64) -> bool {
        self.barycentric(p).iter().all(|&l| l >= -tol)
    }
}

impl Default for TriangleRegion {
    fn default() -> Self {
        Self::new()
    }
}

/// The constraint values `(n₃² + n₈², 2n₈³ − 6n₃²n₈ + 3n₃² + 3n₈²)`.
///
/// A diagonal point is a state iff both lie in `[0, 1]`.
pub fn diag_constraints(p: &DiagPoint) -> (f64, f64) {
    let (a, b) = (p.n3 * p.n3, p.n8 * p.n8);
    let q1 = a + b;
    let q2 = 2.0 * b * p.n8 - 6.0 * a * p.n8 + 3.0 * a + 3.0 * b;
    (q1, q2)
}

pub fn in_triangle(p: &DiagPoint, tol: f64) -> bool {
    let (q1, q2) = diag_constraints(p);
    let ok = |q: f64| (-tol..=1.0 + tol).contains(&q);
    ok(q1) && ok(q2)
}

/// Entropy of mixing at a diagonal point, or `None` outside the triangle.
pub fn diag_entropy(p: &DiagPoint) -> Option<f64> {
    in_triangle(p, DEFAULT_TOL).then(|| entropy_base3(&p.eigenvalues()))
}

/// A labelled point of the triangle with its density matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedPoint {
    pub label: &'static str,
    pub point: DiagPoint,
    pub density: Density3,
}

/// Vertices `R, B, G`, edge midpoints `M_RB, M_RG, M_BG` and the centre `O`.
pub fn named_points() -> Vec<NamedPoint> {
    let (h, q) = (sqrt3() / 2.0, sqrt3() / 4.0);
    let table: [(&'static str, f64, f64, [f64; 3]); 7] = [
        ("R", h, 0.5, [1.0, 0.0, 0.0]),
        ("B", -h, 0.5, [0.0, 1.0, 0.0]),
        ("G", 0.0, -1.0, [0.0, 0.0, 1.0]),
        ("M_RB", 0.0, 0.5, [0.5, 0.5, 0.0]),
        ("M_RG", q, -0.25, [0.5, 0.0, 0.5]),
        ("M_BG", -q, -0.25, [0.0, 0.5, 0.5]),
        ("O", 0.0, 0.0, [1.0 / 3.0; 3]),
    ];
    table
        .into_iter()
        .map(|(label, n3, n8, diag)| NamedPoint {
            label,
            point: DiagPoint { n3, n8 },
            density: Density3::diagonal(diag).expect("tabulated diagonal states are valid"),
        })
        .collect()
}

pub fn named_point(label: &str) -> Option<NamedPoint> {
    named_points().into_iter().find(|p| p.label == label)
}

/// One node of an [`EntropyGrid`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSample {
    pub point: DiagPoint,
    pub q1: f64,
    pub q2: f64,
    /// Entropy for nodes inside the triangle, `None` outside.
    pub entropy: Option<f64>,
}

impl GridSample {
    pub fn in_region(&self) -> bool {
        self.entropy.is_some()
    }
}

/// Uniform `resolution × resolution` grid over the bounding box of the triangle.
///
/// Rows run over `n₈` ascending, columns over `n₃` ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct EntropyGrid {
    pub resolution: usize,
    pub samples: Vec<GridSample>,
}

impl EntropyGrid {
    pub fn at(&self, col: usize, row: usize) -> &GridSample {
        &self.samples[row * self.resolution + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[GridSample]> {
        self.samples.chunks(self.resolution)
    }

    pub fn in_region_fraction(&self) -> f64 {
        self.samples.iter().filter(|s| s.in_region()).count() as f64 / self.samples.len() as f64
    }
}

/// Grid node coordinate; exact at both ends and antisymmetric in `n₃`.
fn axis(resolution: usize) -> (Vec<f64>, Vec<f64>) {
    let last = (resolution - 1) as f64;
    let h = sqrt3() / 2.0;
    let n3 = (0..resolution)
        .map(|i| h * (2.0 * i as f64 - last) / last)
        .collect();
    let n8 = (0..resolution)
        .map(|j| {
            if j + 1 == resolution {
                0.5
            } else {
                -1.0 + 1.5 * j as f64 / last
            }
        })
        .collect();
    (n3, n8)
}

fn sample(point: DiagPoint) -> GridSample {
    let (q1, q2) = diag_constraints(&point);
    GridSample {
        point,
        q1,
        q2,
        entropy: diag_entropy(&point),
    }
}

/// Entropy of mixing sampled on the bounding-box grid; rows are evaluated in parallel.
pub fn entropy_grid(resolution: usize) -> Result<EntropyGrid> {
    if resolution < 2 {
        return Err(Error::InvalidResolution { resolution });
    }
    let (xs, ys) = axis(resolution);
    let samples = ys
        .par_iter()
        .flat_map_iter(|&n8| xs.iter().map(move |&n3| sample(DiagPoint { n3, n8 })))
        .collect();
    Ok(EntropyGrid {
        resolution,
        samples,
    })
}

/// Sequential reference for [`entropy_grid`].
pub fn entropy_grid_sequential(resolution: usize) -> Result<EntropyGrid> {
    if resolution < 2 {
        return Err(Error::InvalidResolution { resolution });
    }
    let (xs, ys) = axis(resolution);
    let samples = ys
        .iter()
        .flat_map(|&n8| xs.iter().map(move |&n3| sample(DiagPoint { n3, n8 })))
        .collect();
    Ok(EntropyGrid {
        resolution,
        samples,
    })
}

/// An ordered piece of a level curve.
#[derive(Clone, Debug, PartialEq)]
pub struct Polyline {
    pub points: Vec<DiagPoint>,
    /// The last point connects back to the first.
    pub closed: bool,
}

/// Grid resolution used by [`equi_entropy_contour`].
pub const DEFAULT_CONTOUR_RESOLUTION: usize = 401;

/// Level curve `E = level` inside the triangle at [`DEFAULT_CONTOUR_RESOLUTION`].
pub fn equi_entropy_contour(level: f64, tol: f64) -> Result<Vec<Polyline>> {
    let grid = entropy_grid(DEFAULT_CONTOUR_RESOLUTION)?;
    contour_on_grid(&grid, level, tol)
}

pub fn equi_entropy_contour_with_resolution(
    level: f64,
    resolution: usize,
    tol: f64,
) -> Result<Vec<Polyline>> {
    let grid = entropy_grid(resolution)?;
    contour_on_grid(&grid, level, tol)
}

/// Grid edge carrying a contour crossing: horizontal from node `(i, j)` to `(i+1, j)` or
/// vertical from `(i, j)` to `(i, j+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum EdgeKey {
    H(usize, usize),
    V(usize, usize),
}

/// Marching squares over `grid`, with every crossing refined by bisection on the exact
/// entropy until it is within `tol` of `level`.
///
/// Nodes outside the triangle take the entropy of their clamped eigenvalues (negative
/// ones set to zero) so that curves run continuously up to the edges; the polylines are
/// then clipped to the triangle. Curves that reach an edge end as open polylines.
pub fn contour_on_grid(grid: &EntropyGrid, level: f64, tol: f64) -> Result<Vec<Polyline>> {
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::InvalidLevel { level });
    }
    let r = grid.resolution;
    let value = |i: usize, j: usize| {
        let s = grid.at(i, j);
        s.entropy.unwrap_or_else(|| clamped_entropy(&s.point))
    };

    let mut segments: Vec<(EdgeKey, EdgeKey)> = Vec::new();
    for j in 0..r - 1 {
        for i in 0..r - 1 {
            let (bl, br, tr, tl) = (
                value(i, j),
                value(i + 1, j),
                value(i + 1, j + 1),
                value(i, j + 1),
            );
            let above = [bl >= level, br >= level, tr >= level, tl >= level];
            let bottom = EdgeKey::H(i, j);
            let right = EdgeKey::V(i + 1, j);
            let top = EdgeKey::H(i, j + 1);
            let left = EdgeKey::V(i, j);
            let crossed: Vec<EdgeKey> = [(bottom, 0, 1), (right, 1, 2), (top, 3, 2), (left, 0, 3)]
                .into_iter()
                .filter(|&(_, a, b)| above[a] != above[b])
                .map(|(e, _, _)| e)
                .collect();
            match crossed.len() {
                2 => segments.push((crossed[0], crossed[1])),
                4 => {
                    // Saddle: the centre value decides which corners are connected.
                    let centre = (bl + br + tr + tl) / 4.0 >= level;
                    if centre == above[0] {
                        segments.push((bottom, right));
                        segments.push((top, left));
                    } else {
                        segments.push((bottom, left));
                        segments.push((top, right));
                    }
                }
                _ => {}
            }
        }
    }
    let chains = stitch(&segments);
    let xs_ys = |i: usize, j: usize| grid.at(i, j).point;
    let locate = |e: EdgeKey| -> DiagPoint {
        let (a, b) = match e {
            EdgeKey::H(i, j) => (xs_ys(i, j), xs_ys(i + 1, j)),
            EdgeKey::V(i, j) => (xs_ys(i, j), xs_ys(i, j + 1)),
        };
        refine_crossing(a, b, level, tol)
    };
    let lines: Vec<Polyline> = chains
        .into_iter()
        .flat_map(|(keys, closed)| clip(keys.into_iter().map(locate).collect(), closed))
        .collect();
    if lines.is_empty() {
        return Err(Error::EmptyContour { level });
    }
    Ok(lines)
}

/// Entropy of the eigenvalues with negative ones replaced by zero; continuous across
/// the edges of the triangle and equal to the entropy inside it.
fn clamped_entropy(p: &DiagPoint) -> f64 {
    entropy_base3(&p.eigenvalues())
}

/// Splits a polyline into the maximal runs of points inside the triangle.
fn clip(points: Vec<DiagPoint>, closed: bool) -> Vec<Polyline> {
    let inside: Vec<bool> = points.iter().map(|p| in_triangle(p, DEFAULT_TOL)).collect();
    let Some(first_out) = inside.iter().position(|&b| !b) else {
        return if points.len() >= 2 {
            vec![Polyline { points, closed }]
        } else {
            Vec::new()
        };
    };
    // A closed curve is walked starting just after an outside point so no run wraps.
    let order: Vec<usize> = if closed {
        (1..=points.len())
            .map(|k| (first_out + k) % points.len())
            .collect()
    } else {
        (0..points.len()).collect()
    };
    let mut runs = Vec::new();
    let mut run: Vec<DiagPoint> = Vec::new();
    for idx in order {
        if inside[idx] {
            run.push(points[idx]);
        } else if !run.is_empty() {
            runs.push(std::mem::take(&mut run));
        }
    }
    if !run.is_empty() {
        runs.push(run);
    }
    runs.into_iter()
        .filter(|r| r.len() >= 2)
        .map(|points| Polyline {
            points,
            closed: false,
        })
        .collect()
}

/// Joins segments sharing an edge key into chains; open chains first, each in
/// deterministic key order.
fn stitch(segments: &[(EdgeKey, EdgeKey)]) -> Vec<(Vec<EdgeKey>, bool)> {
    let mut adjacency: BTreeMap<EdgeKey, Vec<usize>> = BTreeMap::new();
    for (idx, &(a, b)) in segments.iter().enumerate() {
        adjacency.entry(a).or_default().push(idx);
        adjacency.entry(b).or_default().push(idx);
    }
    let mut used = vec![false; segments.len()];
    let mut chains = Vec::new();

    let walk = |start: EdgeKey, used: &mut Vec<bool>| -> (Vec<EdgeKey>, bool) {
        let mut chain = vec![start];
        let mut current = start;
        loop {
            let next_seg = adjacency[&current].iter().copied().find(|&s| !used[s]);
            let Some(s) = next_seg else { break };
            used[s] = true;
            let (a, b) = segments[s];
            current = if a == current { b } else { a };
            if current == start {
                return (chain, true);
            }
            chain.push(current);
        }
        (chain, false)
    };

    let ends: Vec<EdgeKey> = adjacency
        .iter()
        .filter(|(_, s)| s.len() == 1)
        .map(|(k, _)| *k)
        .collect();
    for start in ends {
        if adjacency[&start].iter().all(|&s| used[s]) {
            continue;
        }
        chains.push(walk(start, &mut used));
    }
    let keys: Vec<EdgeKey> = adjacency.keys().copied().collect();
    for start in keys {
        if adjacency[&start].iter().all(|&s| used[s]) {
            continue;
        }
        chains.push(walk(start, &mut used));
    }
    chains
}

/// Point on segment `a → b` where the entropy equals `level`.
///
/// The endpoints bracket the level; starts from the linear interpolant and bisects
/// on the exact entropy.
fn refine_crossing(a: DiagPoint, b: DiagPoint, level: f64, tol: f64) -> DiagPoint {
    let at = |t: f64| DiagPoint {
        n3: a.n3 + t * (b.n3 - a.n3),
        n8: a.n8 + t * (b.n8 - a.n8),
    };
    let f = |t: f64| entropy_base3(&at(t).eigenvalues()) - level;
    let (fa, fb) = (f(0.0), f(1.0));
    let (mut lo, mut hi) = (0.0, 1.0);
    let mut t = if fa != fb {
        (fa / (fa - fb)).clamp(0.0, 1.0)
    } else {
        0.5
    };
    for _ in 0..200 {
        let ft = f(t);
        if ft.abs() <= tol {
            break;
        }
        if (ft >= 0.0) == (fa >= 0.0) {
            lo = t;
        } else {
            hi = t;
        }
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        t = mid;
    }
    at(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::unchecked_matrix;
    use crate::matrix::CMat3;

    fn p(n3: f64, n8: f64) -> DiagPoint {
        DiagPoint::new(n3, n8).unwrap()
    }

    #[test]
    fn vertices_form_an_equilateral_triangle() {
        let t = TriangleRegion::new();
        let [r, b, g] = t.vertices;
        for d in [r.distance(&b), b.distance(&g), g.distance(&r)] {
            assert!((d - 3f64.sqrt()).abs() < 1e-15);
        }
        assert!((t.area() - 3.0 * 3f64.sqrt() / 4.0).abs() < 1e-15);
        assert!(r.rotate_120().distance(&b) < 1e-15);
        assert!(b.rotate_120().distance(&g) < 1e-15);
    }

    #[test]
    fn constraint_examples() {
        assert_eq!(diag_constraints(&p(0.0, 0.0)), (0.0, 0.0));
        let (q1, q2) = diag_constraints(&p(3f64.sqrt() / 2.0, 0.5));
        assert!((q1 - 1.0).abs() < 1e-15 && (q2 - 1.0).abs() < 1e-15);
        assert_eq!(diag_constraints(&p(0.0, 0.5)), (0.25, 1.0));
        // Cross-check against det ρ = (1 − q₂)/27 on (1/2, 1/2, 0).
        let [x1, x2, x3] = p(0.0, 0.5).eigenvalues();
        assert_eq!(x1 * x2 * x3, 0.0);
    }

    #[test]
    fn membership_examples() {
        assert!(in_triangle(&p(0.0, 0.0), DEFAULT_TOL));
        assert!(!in_triangle(&p(0.0, 0.6), DEFAULT_TOL));
        assert!(p(0.0, 0.6).eigenvalues()[2] < 0.0);
        assert!(in_triangle(&p(3f64.sqrt() / 2.0, 0.5), DEFAULT_TOL));
        assert!(DiagPoint::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn barycentric_coordinates_are_the_eigenvalues() {
        let t = TriangleRegion::new();
        for (n3, n8) in [(0.1, 0.2), (-0.4, -0.3), (0.9, 0.9), (0.0, -1.0)] {
            let pt = p(n3, n8);
            let bary = t.barycentric(&pt);
            for (a, b) in bary.iter().zip(pt.eigenvalues()) {
                assert!((a - b).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn named_point_table() {
        let pts = named_points();
        let labels: Vec<_> = pts.iter().map(|p| p.label).collect();
        assert_eq!(labels, ["R", "B", "G", "M_RB", "M_RG", "M_BG", "O"]);
        for np in &pts {
            let n = np.density.to_bloch();
            assert!(n.max_abs_diff(&np.point.to_vec8()) < 1e-14, "{}", np.label);
            let rho = Density3::from_bloch(&np.point.to_vec8()).unwrap();
            assert!(
                rho.matrix().max_abs_diff(np.density.matrix()) < 1e-14,
                "{}",
                np.label
            );
        }
        let bg = named_point("M_BG").unwrap();
        assert!((bg.point.n3 + 3f64.sqrt() / 4.0).abs() < 1e-15);
        assert!(
            bg.density
                .matrix()
                .max_abs_diff(&CMat3::diag([0.0, 0.5, 0.5]))
                < 1e-15
        );
        assert!(named_point("X").is_none());
    }

    #[test]
    fn grid_examples() {
        assert!(matches!(
            entropy_grid(1),
            Err(Error::InvalidResolution { resolution: 1 })
        ));
        let g = entropy_grid(3).unwrap();
        assert_eq!(g.samples.len(), 9);
        // Corner (−√3/2, −1) is outside; R, B, G and O are inside.
        assert!(!g.at(0, 0).in_region());
        assert!(!g.at(2, 0).in_region());
        assert_eq!(g.at(1, 0).entropy.map(|e| e.abs() < 1e-12), Some(true));
        assert_eq!(g.at(2, 2).entropy.map(|e| e.abs() < 1e-12), Some(true));
        assert_eq!(g.at(0, 2).entropy.map(|e| e.abs() < 1e-12), Some(true));
        assert_eq!(
            g.at(1, 2)
                .entropy
                .map(|e| (e - 2f64.ln() / 3f64.ln()).abs() < 1e-12),
            Some(true)
        );

        let g = entropy_grid(201).unwrap();
        assert_eq!(g.at(100, 0).point, p(0.0, -1.0));
        let g = entropy_grid(7).unwrap();
        assert_eq!(g.at(3, 4).point, p(0.0, 0.0));
        assert!((g.at(3, 4).entropy.unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn parallel_grid_equals_sequential() {
        assert_eq!(
            entropy_grid(64).unwrap(),
            entropy_grid_sequential(64).unwrap()
        );
    }

    #[test]
    fn three_membership_tests_agree() {
        let g = entropy_grid(200).unwrap();
        let t = TriangleRegion::new();
        for s in &g.samples {
            let poly = in_triangle(&s.point, DEFAULT_TOL);
            let bary = t.contains(&s.point, DEFAULT_TOL);
            let min_eig = unchecked_matrix(&s.point.to_vec8()).hermitian_eigenvalues()[2];
            let eig = min_eig >= -DEFAULT_TOL;
            let band = t.barycentric(&s.point).iter().any(|l| l.abs() <= 1e-9);
            if !band {
                assert_eq!(poly, bary, "{:?}", s.point);
                assert_eq!(poly, eig, "{:?}", s.point);
            }
        }
    }

    #[test]
    fn entropy_extremes_and_rotation() {
        let g = entropy_grid(301).unwrap();
        let (max, min) = g
            .samples
            .iter()
            .filter_map(|s| s.entropy.map(|e| (e, s.point)))
            .fold(
                ((f64::MIN, p(0.0, 0.0)), (f64::MAX, p(0.0, 0.0))),
                |(mx, mn), (e, pt)| {
                    (
                        if e > mx.0 { (e, pt) } else { mx },
                        if e < mn.0 { (e, pt) } else { mn },
                    )
                },
            );
        assert!(max.0 <= 1.0 + 1e-12);
        assert!(max.1.distance(&p(0.0, 0.0)) < 0.01, "{:?}", max.1);
        assert!(min.0.abs() < 1e-12);
        assert!(TriangleRegion::new()
            .vertices
            .iter()
            .any(|v| v.distance(&min.1) < 1e-12));

        for s in g.samples.iter().filter(|s| s.in_region()) {
            let e = s.entropy.unwrap();
            let rotated = entropy_base3(&s.point.rotate_120().eigenvalues());
            assert!((e - rotated).abs() < 1e-10);
        }
    }

    #[test]
    fn contour_points_lie_on_the_level_set() {
        for level in [0.2, 0.5, 0.63, 0.8, 0.95] {
            let lines = equi_entropy_contour_with_resolution(level, 151, 1e-12).unwrap();
            assert!(!lines.is_empty());
            for line in &lines {
                for pt in &line.points {
                    let e = diag_entropy(pt).expect("contour stays inside the triangle");
                    assert!((e - level).abs() <= 1e-12, "level {level}: {e}");
                }
            }
        }
    }

    #[test]
    fn high_level_contour_is_a_small_closed_loop_around_the_origin() {
        let lines = equi_entropy_contour(0.999, 1e-12).unwrap();
        assert_eq!(lines.len(), 1);
        assert!(lines[0].closed);
        // E ≈ 1 − r²/ln 3 near the centre.
        let r_expected = (0.001 * 3f64.ln()).sqrt();
        for pt in &lines[0].points {
            let r = pt.distance(&p(0.0, 0.0));
            assert!((r - r_expected).abs() < 0.002, "{r}");
        }
    }

    #[test]
    fn low_level_contour_has_three_open_arcs() {
        let lines = equi_entropy_contour_with_resolution(0.3, 201, 1e-12).unwrap();
        assert_eq!(lines.len(), 3);
        assert!(lines.iter().all(|l| !l.closed));
    }

    #[test]
    fn contour_is_mirror_symmetric() {
        let res = 151;
        let spacing = 3f64.sqrt() / (res - 1) as f64;
        let lines = equi_entropy_contour_with_resolution(0.7, res, 1e-12).unwrap();
        let all: Vec<DiagPoint> = lines
            .iter()
            .flat_map(|l| l.points.iter().copied())
            .collect();
        for pt in &all {
            let m = pt.mirror_n3();
            let nearest = all.iter().map(|q| q.distance(&m)).fold(f64::MAX, f64::min);
            assert!(nearest < 1e-9 * spacing.max(1.0), "{pt:?}: {nearest}");
        }
    }

    #[test]
    fn contour_errors() {
        assert!(matches!(
            equi_entropy_contour(0.0, 1e-9),
            Err(Error::InvalidLevel { .. })
        ));
        assert!(matches!(
            equi_entropy_contour(1.0, 1e-9),
            Err(Error::InvalidLevel { .. })
        ));
        assert!(matches!(
            equi_entropy_contour(f64::NAN, 1e-9),
            Err(Error::InvalidLevel { .. })
        ));
        // Coarse grid: the maximum node entropy is below 0.99999.
        assert!(matches!(
            equi_entropy_contour_with_resolution(0.99999, 4, 1e-9),
            Err(Error::EmptyContour { .. })
        ));
    }
}
