// Bloch vector ↔ density matrix, spectrum, Cayley–Hamilton coefficients and the
// base-3 entropy of mixing.

use qutrit::bloch::Vec8;
use qutrit::density::Density3;

fn main() {
    let n = Vec8::new([0.12, -0.05, 0.3, 0.02, 0.1, -0.08, 0.04, -0.2]).unwrap();
    let rho = Density3::from_bloch(&n).unwrap();
    println!("ρ =");
    for row in &rho.matrix().m {
        let cells: Vec<String> = row
            .iter()
            .map(|z| format!("{:+.4}{:+.4}i", z.re, z.im))
            .collect();
        println!("  [{}]", cells.join(", "));
    }
    let back = rho.to_bloch();
    println!("round trip error: {:.1e}", back.max_abs_diff(&n));

    let spec = rho.spectrum();
    let (c1, c2, c3) = rho.char_poly_coeffs();
    println!("eigenvalues: {:?} (sum {:.15})", spec.values(), spec.sum());
    println!("c₁ = {c1:.12}, c₂ = {c2:.12} (bound 1/3), c₃ = {c3:.12} (bound 1/27)");
    println!("(1 − |n|²)/3 = {:.12}", (1.0 - n.norm_sqr()) / 3.0);
    println!(
        "Cayley–Hamilton residual: {:.1e}",
        rho.cayley_hamilton_residual()
    );
    println!("entropy of mixing: {:.12}", rho.entropy_of_mixing());

    for (label, diag) in [
        ("(1/3)I", [1.0 / 3.0; 3]),
        ("diag(1,0,0)", [1.0, 0.0, 0.0]),
        ("(1/2)diag(1,1,0)", [0.5, 0.5, 0.0]),
    ] {
        let e = Density3::diagonal(diag).unwrap().entropy_of_mixing();
        println!("E({label}) = {e:.15}");
    }

    match Density3::from_bloch(&Vec8::diagonal(0.0, 0.7).unwrap()) {
        Ok(_) => unreachable!(),
        Err(e) => println!("(0, 0.7) rejected: {e}"),
    }
}
