// Dot, wedge and star products on Bloch vectors, the pure-state test and the
// angle between orthogonal pure states.

use qutrit::bloch::{geodesic_distance, Vec8, DEFAULT_TOL};
use qutrit::triangle::named_point;

fn main() {
    let r = named_point("R").unwrap().point.to_vec8();
    let b = named_point("B").unwrap().point.to_vec8();
    let g = named_point("G").unwrap().point.to_vec8();

    for (name, n) in [("R", r), ("B", b), ("G", g)] {
        let (q1, q2) = n.constraint_values();
        println!(
            "{name}: |n|² = {q1:.12}, 3|n|² − 2n·(n⋆n) = {q2:.12}, |n⋆n − n| = {:.1e}, pure = {}",
            n.star(&n).max_abs_diff(&n),
            n.is_pure(DEFAULT_TOL)
        );
    }
    println!(
        "R·B = {:.15}, B·G = {:.15}, R·G = {:.15}",
        r.dot(&b),
        b.dot(&g),
        r.dot(&g)
    );
    let angle = geodesic_distance(&r, &b).unwrap();
    println!(
        "arccos(R·B) = {angle:.15} (2π/3 = {:.15})",
        2.0 * std::f64::consts::PI / 3.0
    );

    let e1 = Vec8::unit(1).unwrap();
    let e2 = Vec8::unit(2).unwrap();
    println!("e₁ ∧ e₂ = {:?}", e1.wedge(&e2).as_array());
    let e8 = Vec8::unit(8).unwrap();
    println!(
        "e₈ ⋆ e₈ = {:?}  (not pure: {})",
        e8.star(&e8).as_array(),
        !e8.is_pure(DEFAULT_TOL)
    );

    let inside = Vec8::new([0.1, 0.0, 0.2, -0.1, 0.0, 0.05, 0.0, 0.1]).unwrap();
    let outside = inside * 4.0;
    println!(
        "{:?} is a state: {}",
        inside.as_array(),
        inside.is_mixed_state(DEFAULT_TOL)
    );
    println!(
        "4× that vector violates: {:?}",
        outside.mixed_state_violation(DEFAULT_TOL)
    );
}
