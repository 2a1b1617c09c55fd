// The triangle of diagonal states: named points, membership and a coarse text
// rendering of the entropy of mixing.

use qutrit::triangle::{entropy_grid, named_points, TriangleRegion};

fn main() {
    for p in named_points() {
        let d = p.density.matrix();
        println!(
            "{:>4}: (n₃, n₈) = ({:+.6}, {:+.6})  ρ = diag({:.3}, {:.3}, {:.3})",
            p.label, p.point.n3, p.point.n8, d.m[0][0].re, d.m[1][1].re, d.m[2][2].re
        );
    }

    let region = TriangleRegion::new();
    let (x0, x1, y0, y1) = region.bounding_box();
    println!(
        "\nanalytic area ratio: {:.6}",
        region.area() / ((x1 - x0) * (y1 - y0))
    );
    let grid = entropy_grid(200).unwrap();
    println!(
        "in-region fraction at resolution 200: {:.6}",
        grid.in_region_fraction()
    );

    let coarse = entropy_grid(41).unwrap();
    let shades = [' ', '.', ':', '-', '=', '+', '*', '#', '%', '@'];
    println!();
    for row in coarse.rows().collect::<Vec<_>>().into_iter().rev() {
        let line: String = row
            .iter()
            .map(|s| match s.entropy {
                None => ' ',
                Some(e) => shades[((e * 9.0).round() as usize).min(9)],
            })
            .collect();
        println!("{line}");
    }
}
