// Prints the Gell-Mann matrices and the nonzero structure constants, then checks
// that every product λⱼλₖ is rebuilt exactly from the f and d tensors.

use qutrit::gellmann::{lambda, product_expansion, tensors};

fn main() {
    for i in 1..=8 {
        let l = lambda(i).unwrap();
        println!("λ{i}:");
        for row in &l.m {
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("{:>6.3}{:+.3}i", z.re, z.im))
                .collect();
            println!("  [{}]", cells.join(", "));
        }
    }

    let t = tensors();
    println!("\nf entries (antisymmetric):");
    for e in t.f_entries() {
        println!("  f{:?} = {:.6}", e.indices, e.value);
    }
    println!("d entries (symmetric):");
    for e in t.d_entries() {
        println!("  d{:?} = {:.6}", e.indices, e.value);
    }

    let mut worst = 0.0f64;
    for j in 1..=8 {
        for k in 1..=8 {
            let direct = lambda(j).unwrap() * lambda(k).unwrap();
            worst = worst.max(product_expansion(j, k).unwrap().max_abs_diff(&direct));
        }
    }
    println!("\nmax |expansion − λⱼλₖ| over 64 pairs: {worst:e}");
    assert!(worst <= 1e-14);
}
