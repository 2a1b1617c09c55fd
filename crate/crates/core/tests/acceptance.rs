//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p qutrit --test acceptance`. The process exits non-zero if any
//! criterion fails.

mod common;

use std::f64::consts::PI;
use std::process::ExitCode;

use num_complex::Complex64;
use qutrit::adjoint::{adjoint_su2, adjoint_su3, haar_random_su2, haar_random_su3_with};
use qutrit::bloch::geodesic_distance;
use qutrit::density::unchecked_matrix;
use qutrit::gellmann::{d_symbol, f_symbol, lambda, product_expansion};
use qutrit::triangle::named_points;
use qutrit::{CMat3, Density3, Vec8, DEFAULT_TOL};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{n_b, n_g, n_r, random_pure, random_state, random_vec8};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn structure_constants() -> Outcome {
    let quarter_i = Complex64::new(0.0, -0.25);
    let mut worst = 0.0f64;
    for j in 1..=8 {
        for k in 1..=8 {
            let (lj, lk) = (lambda(j).unwrap(), lambda(k).unwrap());
            let (comm, anti) = (lj * lk - lk * lj, lj * lk + lk * lj);
            for l in 1..=8 {
                let ll = lambda(l).unwrap();
                let f = quarter_i * (comm * ll).trace();
                let d = 0.25 * (anti * ll).trace();
                worst = worst
                    .max((f.re - f_symbol(j, k, l).unwrap()).abs())
                    .max(f.im.abs())
                    .max((d.re - d_symbol(j, k, l).unwrap()).abs())
                    .max(d.im.abs());
            }
        }
    }
    ensure(worst <= 1e-14, || {
        format!("trace oracle deviation {worst:.3e} > 1e-14")
    })?;

    let mut worst_product = 0.0f64;
    for j in 1..=8 {
        for k in 1..=8 {
            let direct = lambda(j).unwrap() * lambda(k).unwrap();
            worst_product =
                worst_product.max(product_expansion(j, k).unwrap().max_abs_diff(&direct));
        }
    }
    ensure(worst_product <= 1e-14, || {
        format!("product expansion deviation {worst_product:.3e}")
    })?;
    Ok(format!(
        "512 triples, max deviation {worst:.1e}; 64 products, max deviation {worst_product:.1e}"
    ))
}

fn pure_states() -> Outcome {
    for (name, n) in [("R", n_r()), ("B", n_b()), ("G", n_g())] {
        let (norm, star) = ((n.norm_sqr() - 1.0).abs(), n.star(&n).max_abs_diff(&n));
        ensure(norm <= 1e-12 && star <= 1e-12, || {
            format!("vertex {name}: |n|^2-1 = {norm:.3e}, |n*n-n| = {star:.3e}")
        })?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut pure, mut disagreements) = (0, 0);
    for k in 0..10_000 {
        let n = match k % 4 {
            0 => random_pure(&mut rng),
            1 => random_state(&mut rng),
            2 => random_pure(&mut rng) * 0.999,
            _ => random_vec8(&mut rng, 1.5),
        };
        let m = unchecked_matrix(&n);
        let idempotent = (m * m).max_abs_diff(&m) <= 1e-10;
        pure += usize::from(idempotent);
        disagreements += usize::from(n.is_pure(DEFAULT_TOL) != idempotent);
    }
    ensure(disagreements == 0, || {
        format!("{disagreements} disagreements in 10^4 samples")
    })?;
    Ok(format!(
        "vertices exact; 10^4 samples ({pure} pure), 0 disagreements"
    ))
}

fn mixed_state_constraints() -> Outcome {
    const BAND: f64 = 1e-9;
    let (mut checked, mut banded, mut disagreements) = (0, 0, 0);
    let mut judge = |n: &Vec8| {
        let min_eig = unchecked_matrix(n).hermitian_eigenvalues()[2];
        if min_eig.abs() <= BAND {
            banded += 1;
            return;
        }
        checked += 1;
        disagreements += usize::from(n.is_mixed_state(DEFAULT_TOL) != (min_eig > 0.0));
    };

    let res = 200;
    let h = 3f64.sqrt() / 2.0;
    for row in 0..res {
        for col in 0..res {
            let n3 = -h + 2.0 * h * col as f64 / (res - 1) as f64;
            let n8 = -1.0 + 1.5 * row as f64 / (res - 1) as f64;
            judge(&Vec8::diagonal(n3, n8).unwrap());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10_000 {
        judge(&random_vec8(&mut rng, 1.2));
    }
    ensure(disagreements == 0, || {
        format!("{disagreements} disagreements among {checked} points")
    })?;
    Ok(format!(
        "{checked} points checked ({banded} inside the 1e-9 band), 0 disagreements"
    ))
}

fn named_point_table() -> Outcome {
    let s = 3f64.sqrt();
    let expected: [(&str, f64, f64, [f64; 3]); 7] = [
        ("R", s / 2.0, 0.5, [1.0, 0.0, 0.0]),
        ("B", -s / 2.0, 0.5, [0.0, 1.0, 0.0]),
        ("G", 0.0, -1.0, [0.0, 0.0, 1.0]),
        ("M_RB", 0.0, 0.5, [0.5, 0.5, 0.0]),
        ("M_RG", s / 4.0, -0.25, [0.5, 0.0, 0.5]),
        ("M_BG", -s / 4.0, -0.25, [0.0, 0.5, 0.5]),
        ("O", 0.0, 0.0, [1.0 / 3.0; 3]),
    ];
    let table = named_points();
    ensure(table.len() == expected.len(), || {
        format!("{} named points", table.len())
    })?;
    let mut worst = 0.0f64;
    for (point, (label, n3, n8, diag)) in table.iter().zip(expected) {
        ensure(point.label == label, || {
            format!("expected {label}, found {}", point.label)
        })?;
        let coords = (point.point.n3 - n3).abs().max((point.point.n8 - n8).abs());
        let oracle = CMat3::diag(diag);
        // matrix → Bloch, Bloch → matrix, and the tabulated density itself
        let to_bloch = Density3::from_matrix(oracle)
            .unwrap()
            .to_bloch()
            .max_abs_diff(&Vec8::diagonal(n3, n8).unwrap());
        let from_bloch = Density3::from_bloch(&point.point.to_vec8())
            .unwrap()
            .matrix()
            .max_abs_diff(&oracle);
        let stored = point.density.matrix().max_abs_diff(&oracle);
        let dev = coords.max(to_bloch).max(from_bloch).max(stored);
        ensure(dev <= 1e-14, || format!("{label}: deviation {dev:.3e}"))?;
        worst = worst.max(dev);
    }
    Ok(format!(
        "7 points, max deviation {worst:.1e}; M_BG = (-sqrt3/4, -1/4)"
    ))
}

fn geodesics() -> Outcome {
    let (r, b, g) = (n_r(), n_b(), n_g());
    for (name, x, y) in [("R.B", &r, &b), ("B.G", &b, &g), ("R.G", &r, &g)] {
        let dot = x.dot(y);
        ensure((dot + 0.5).abs() <= 1e-14, || format!("{name} = {dot}"))?;
        let angle = geodesic_distance(x, y).map_err(|e| e.to_string())?;
        ensure((angle - 2.0 * PI / 3.0).abs() <= 1e-12, || {
            format!("arccos({name}) = {angle}")
        })?;
    }
    Ok("vertex dots = -1/2, angles = 2pi/3".to_owned())
}

fn adjoint_representation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = [0.0f64; 5];
    for _ in 0..100 {
        let (u, v) = (
            haar_random_su3_with(&mut rng),
            haar_random_su3_with(&mut rng),
        );
        let (au, av) = (adjoint_su3(&u), adjoint_su3(&v));
        worst[0] = worst[0]
            .max(au.orthogonality_deviation())
            .max((au.det() - 1.0).abs());
        worst[1] = worst[1].max(adjoint_su3(&(u * v)).max_abs_diff(&(au * av)));

        let n = random_state(&mut rng);
        let rho = Density3::from_bloch(&n).unwrap();
        worst[2] = worst[2].max(
            rho.conjugate(u.matrix())
                .to_bloch()
                .max_abs_diff(&au.apply(&n)),
        );

        let (a, b) = (random_vec8(&mut rng, 1.0), random_vec8(&mut rng, 1.0));
        worst[3] = worst[3].max(
            au.apply(&a.star(&b))
                .max_abs_diff(&au.apply(&a).star(&au.apply(&b))),
        );
    }
    for seed in 0..100 {
        let r = adjoint_su2(&haar_random_su2(seed));
        worst[4] = worst[4]
            .max(r.orthogonality_deviation())
            .max((r.det() - 1.0).abs());
    }
    let limits = [1e-10, 1e-10, 1e-10, 1e-9, 1e-10];
    let names = [
        "SO(8) membership",
        "homomorphism",
        "equivariance",
        "star covariance",
        "SO(3) membership",
    ];
    for ((w, limit), name) in worst.iter().zip(limits).zip(names) {
        ensure(*w <= limit, || format!("{name}: {w:.3e} > {limit:e}"))?;
    }
    Ok(format!(
        "100 Haar samples; max deviations {}",
        names
            .iter()
            .zip(worst)
            .map(|(n, w)| format!("{n} {w:.1e}"))
            .collect::<Vec<_>>()
            .join(", ")
    ))
}

fn entropy() -> Outcome {
    let cases = [
        ("(1/3)I", Density3::maximally_mixed(), 1.0),
        ("pure", Density3::diagonal([1.0, 0.0, 0.0]).unwrap(), 0.0),
        (
            "(1/2)diag(1,1,0)",
            Density3::diagonal([0.5, 0.5, 0.0]).unwrap(),
            2f64.ln() / 3f64.ln(),
        ),
    ];
    for (name, rho, want) in &cases {
        let e = rho.entropy_of_mixing();
        ensure((e - want).abs() <= 1e-12, || {
            format!("E({name}) = {e}, expected {want}")
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let rho = Density3::from_bloch(&random_state(&mut rng)).unwrap();
        let u = haar_random_su3_with(&mut rng);
        worst = worst
            .max((rho.entropy_of_mixing() - rho.conjugate(u.matrix()).entropy_of_mixing()).abs());
    }
    ensure(worst <= 1e-10, || {
        format!("unitary invariance deviation {worst:.3e}")
    })?;
    Ok(format!(
        "exact values within 1e-12; invariance over 100 conjugations {worst:.1e}"
    ))
}

fn cayley_hamilton() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0.0f64;
    for k in 0..1_000 {
        let n = if k % 10 == 0 {
            random_pure(&mut rng)
        } else {
            random_state(&mut rng)
        };
        let rho = Density3::from_bloch(&n).unwrap();
        worst = worst.max(rho.cayley_hamilton_residual());
        let (_, c2, c3) = rho.char_poly_coeffs();
        // Pure states sit on the lower bounds, so allow round-off there.
        ensure((-1e-12..=1.0 / 3.0 + 1e-12).contains(&c2), || {
            format!("c2 = {c2} out of [0, 1/3]")
        })?;
        ensure((-1e-12..=1.0 / 27.0 + 1e-12).contains(&c3), || {
            format!("c3 = {c3} out of [0, 1/27]")
        })?;
    }
    ensure(worst <= 1e-10, || format!("residual {worst:.3e}"))?;
    Ok(format!(
        "10^3 states, max residual {worst:.1e}; c2, c3 within bounds"
    ))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = qutrit::cli::run(
        std::iter::once("qutrit").chain(args.iter().copied()),
        &mut std::io::empty(),
        &mut out,
        &mut err,
    );
    ensure(code == 0, || {
        format!("{args:?} exited {code}: {}", String::from_utf8_lossy(&err))
    })?;
    Ok(out)
}

fn cli_determinism() -> Outcome {
    let orbit = [
        "orbit", "--count", "25", "--seed", "2024", "0.1", "0", "0.3", "0", "0", "0.2", "0", "0.4",
    ];
    ensure(run_cli(&orbit)? == run_cli(&orbit)?, || {
        "orbit output differs between runs".to_owned()
    })?;

    let out = run_cli(&["triangle", "--resolution", "200"])?;
    let v: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let rows = v["payload"]["rows"].as_array().ok_or("missing rows")?;
    ensure(rows.len() == 200 * 200, || {
        format!("{} grid rows", rows.len())
    })?;
    let inside = rows.iter().filter(|r| r[4].as_bool() == Some(true)).count();
    let fraction = inside as f64 / rows.len() as f64;
    ensure((fraction - 0.5).abs() <= 0.01, || {
        format!("in-region fraction {fraction}")
    })?;
    Ok(format!(
        "orbit byte-identical; triangle in-region fraction {fraction:.4}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("structure constants", structure_constants),
        ("pure-state characterization", pure_states),
        ("mixed-state constraints", mixed_state_constraints),
        ("named-point table", named_point_table),
        ("orthogonality and geodesics", geodesics),
        ("adjoint representation", adjoint_representation),
        ("entropy", entropy),
        ("Cayley-Hamilton", cayley_hamilton),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] {}. {name}: {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {reason}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
