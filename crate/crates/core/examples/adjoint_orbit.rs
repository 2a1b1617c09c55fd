// The adjoint maps SU(2) → SO(3) and SU(3) → SO(8), and Haar-random orbits of
// diagonal states.

use qutrit::adjoint::{adjoint_su2, adjoint_su3, haar_random_su2, haar_random_su3, orbit_sample};
use qutrit::bloch::{Vec8, DEFAULT_TOL};
use qutrit::density::Density3;

fn main() {
    let u = haar_random_su3(2024);
    let ad = adjoint_su3(&u);
    println!(
        "Ad(U): |AᵀA − I| = {:.1e}, det = {:.15}",
        ad.orthogonality_deviation(),
        ad.det()
    );

    let v = haar_random_su3(7);
    let hom = adjoint_su3(&(u * v)).max_abs_diff(&(ad * adjoint_su3(&v)));
    println!("|Ad(UV) − Ad(U)Ad(V)| = {hom:.1e}");

    let a = Vec8::new([0.3, 0.1, -0.2, 0.0, 0.4, 0.1, -0.1, 0.2]).unwrap();
    let b = Vec8::new([-0.1, 0.2, 0.3, 0.1, 0.0, -0.3, 0.2, 0.1]).unwrap();
    let cov = ad
        .apply(&a.star(&b))
        .max_abs_diff(&ad.apply(&a).star(&ad.apply(&b)));
    println!("star covariance error: {cov:.1e}");

    let r2 = adjoint_su2(&haar_random_su2(3));
    println!(
        "SU(2) image: |RᵀR − I| = {:.1e}, det = {:.15}",
        r2.orthogonality_deviation(),
        r2.det()
    );

    let vertex = Vec8::diagonal(3f64.sqrt() / 2.0, 0.5).unwrap();
    let orbit = orbit_sample(&vertex, 5, 1).unwrap();
    println!("\norbit of vertex R (pure states):");
    for p in &orbit {
        println!(
            "  |n| = {:.15}, pure = {}",
            p.norm(),
            p.is_pure(DEFAULT_TOL)
        );
    }

    let mid = Vec8::diagonal(0.0, 0.5).unwrap();
    println!(
        "orbit of M_RB, entropy should stay log₃2 = {:.12}:",
        2f64.ln() / 3f64.ln()
    );
    for p in orbit_sample(&mid, 5, 2).unwrap() {
        println!(
            "  E = {:.12}",
            Density3::from_bloch(&p).unwrap().entropy_of_mixing()
        );
    }
}
