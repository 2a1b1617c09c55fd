// Equi-entropy curves in the (n₃, n₈) plane.

use qutrit::triangle::{diag_entropy, equi_entropy_contour_with_resolution};

fn main() {
    for level in [0.3, 0.5, 0.7, 0.9, 0.999] {
        let lines = equi_entropy_contour_with_resolution(level, 301, 1e-12).unwrap();
        let points: usize = lines.iter().map(|l| l.points.len()).sum();
        let worst = lines
            .iter()
            .flat_map(|l| &l.points)
            .map(|p| (diag_entropy(p).unwrap() - level).abs())
            .fold(0.0, f64::max);
        let closed = lines.iter().filter(|l| l.closed).count();
        println!(
            "E = {level:<5}: {} polyline(s), {closed} closed, {points} points, max |E − level| = {worst:.1e}",
            lines.len()
        );
    }
}
