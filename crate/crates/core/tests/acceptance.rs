//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use selfcomm::bounds::{
    check_conjecture1, evaluate_bounds, fuzz_conjectures, random_matrix, Ensemble, FuzzConfig, FuzzSummary,
};
use selfcomm::convexgeom::{
    ellipse_min_width_product, min_width_product as polygon_min_width_product, polygon_area, reuleaux_triangle,
    width_ratio, ConvexPolygon, EllipseSpec, Point, DEFAULT_ANGLES, DEFAULT_REFINE_TOL,
};
use selfcomm::gallery::{
    bergman_eigenvalues, bergman_weights, example_lk, mobius_selfcommutator, partial_sums, rank_one_matrix,
    rearrange_zero_sum, shift_from_partial_sums, tridiag_toeplitz_matrix, volterra_area, volterra_matrix,
    wang_du_matrix, WeightedShift,
};
use selfcomm::linalg::{hermitian_norm, operator_norm, self_commutator};
use selfcomm::numrange::{area_corrected, boundary, min_shift_distance};
use selfcomm::Matrix;

type Outcome = Result<String, String>;

/// Printed values for the Volterra operator's numerical range.
const VOLTERRA_AREA_PRINTED: f64 = 0.262_884_419_87;
const VOLTERRA_FOUR_OVER_PI_AREA_PRINTED: f64 = 0.334_714_839_07;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn close(label: &str, got: f64, want: f64, tol: f64) -> Result<(), String> {
    let err = (got - want).abs();
    if err <= tol {
        Ok(())
    } else {
        Err(format!("{label}: got {got:.12e}, want {want:.12e} (error {err:.3e} > {tol:.1e})"))
    }
}

fn holds(label: &str, ok: bool) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(label.to_string())
    }
}

fn comm_norm(a: &Matrix) -> f64 {
    hermitian_norm(&self_commutator(a)).expect("Hermitian")
}

fn area_of(a: &Matrix, angles: usize) -> f64 {
    area_corrected(&boundary(a, angles).expect("boundary"))
}

fn width_product_example() -> Outcome {
    let a = wang_du_matrix();
    let r = evaluate_bounds(&a, 1024).map_err(|e| e.to_string())?;
    let root5 = 5f64.sqrt();
    let half_root3 = 3f64.sqrt() / 2.0;
    close("|C(A)|", r.comm_norm, root5, 1e-10)?;
    close("min width product", r.width_product, root5, 1e-6)?;
    close("inf |H - x|", r.inf_h, half_root3, 1e-10)?;
    close("inf |J - y|", r.inf_j, half_root3, 1e-10)?;
    close("4 infH infJ", r.wang_du, 3.0, 1e-9)?;
    holds("width product not sharper than 4 infH infJ", r.width_product < r.wang_du)?;
    Ok(format!("|C| = {:.12}, width product = {:.9}, 4 infH infJ = {:.10}", r.comm_norm, r.width_product, r.wang_du))
}

fn commuting_pair() -> Outcome {
    let (l, k) = example_lk();
    close("|L - K|", operator_norm(&l.checked_sub(&k).map_err(|e| e.to_string())?), 1.0, 1e-12)?;
    let m = min_shift_distance(&l, 1e-10).map_err(|e| e.to_string())?;
    let golden = 0.5 * (1.0 + 5f64.sqrt());
    holds(&format!("m(L) = {} below golden ratio", m.distance), m.distance >= golden - 1e-6)?;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..20 {
        let mu = c(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        let probe = operator_norm(&l.shift(mu));
        holds(&format!("m(L) exceeds |L - {mu}I| = {probe}"), m.distance <= probe + 1e-12)?;
    }
    Ok(format!("m(L) = {:.12}", m.distance))
}

fn toeplitz_example() -> Outcome {
    let a = tridiag_toeplitz_matrix(5, c(2.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).map_err(|e| e.to_string())?;
    let comm = comm_norm(&a);
    close("|C|", comm, 3.0, 1e-12)?;
    let area = area_of(&a, 1024);
    close("area", area, 9.0 * PI / 4.0, 1e-3)?;
    close("(4/pi)S - |C|", 4.0 / PI * area - comm, 6.0, 5e-3)?;
    Ok(format!("|C| = {comm:.15}, area = {area:.10}"))
}

fn volterra_example() -> Outcome {
    let area = volterra_area();
    close("area", area, VOLTERRA_AREA_PRINTED, 1e-8)?;
    close("(4/pi)S", 4.0 / PI * area, VOLTERRA_FOUR_OVER_PI_AREA_PRINTED, 1e-7)?;
    let target = 3f64.sqrt() / 6.0;
    let mut errs = Vec::new();
    for n in [100, 200, 500] {
        let v = volterra_matrix(n).map_err(|e| e.to_string())?;
        errs.push((n, (comm_norm(&v) - target).abs()));
    }
    holds(&format!("error not decreasing: {errs:?}"), errs.windows(2).all(|w| w[1].1 < w[0].1))?;
    let (_, err500) = errs[2];
    holds(&format!("n = 500 error {err500:.3e} above 1e-2"), err500 <= 1e-2)?;
    Ok(format!("area = {area:.11}, |C(V_500)| error = {err500:.2e}"))
}

fn two_by_two_closed_form() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut draw = || c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
    let (mut worst_norm, mut worst_area) = (0.0f64, 0.0f64);
    for _ in 0..500 {
        let (l1, l2, l3) = (draw(), draw(), draw());
        let a = Matrix::from_rows(&[vec![l1, l3], vec![c(0.0, 0.0), l2]]).map_err(|e| e.to_string())?;
        let expected = l3.norm() * ((l2 - l1).norm_sqr() + l3.norm_sqr()).sqrt();
        let got = comm_norm(&a);
        close("|C|", got, expected, 1e-10 * expected.max(1.0))?;
        let four_s = 4.0 / PI * area_of(&a, 1024);
        close("4S/pi", four_s, got, 1e-4)?;
        worst_norm = worst_norm.max((got - expected).abs());
        worst_area = worst_area.max((four_s - got).abs());
    }
    Ok(format!("max |C| error {worst_norm:.1e}, max 4S/pi error {worst_area:.1e}"))
}

fn unit_column(a: &Matrix, j: usize) -> Vec<Complex64> {
    let col: Vec<Complex64> = (0..a.dim()).map(|i| a.get(i, j)).collect();
    let n = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    col.into_iter().map(|z| z / n).collect()
}

fn rank_one_pairs() -> Outcome {
    let mut worst_slack = f64::INFINITY;
    for trial in 0..500u64 {
        let n = 2 + (trial % 5) as usize;
        let g = random_matrix(Ensemble::ComplexGaussian, n, 40_000 + trial);
        let (a, b) = (unit_column(&g, 0), unit_column(&g, 1));
        let m = rank_one_matrix(&a, &b).map_err(|e| e.to_string())?;
        let inner: Complex64 = a.iter().zip(&b).map(|(x, y)| x * y.conj()).sum();
        close("|C|", comm_norm(&m), (1.0 - inner.norm_sqr()).max(0.0).sqrt(), 1e-10)?;
        let slack = check_conjecture1(&m).map_err(|e| e.to_string())?;
        holds(&format!("trial {trial}: conjecture-1 slack {slack:e}"), slack >= -1e-9)?;
        worst_slack = worst_slack.min(slack);
    }
    Ok(format!("min conjecture-1 slack {worst_slack:.3e}"))
}

fn mobius_identity() -> Outcome {
    let mut worst = 0.0f64;
    for k in 0..100 {
        let r = 0.999 * k as f64 / 99.0;
        let l = -(1.0 - r * r).ln();
        let comm = (l * l + 4.0 * l).sqrt();
        let area = PI / 4.0 * (4.0 + l).sqrt() * l.sqrt();
        let gap = comm - 4.0 * area / PI;
        close(&format!("|a| = {r}"), gap, 0.0, 1e-12)?;
        let e = mobius_selfcommutator(r).map_err(|e| e.to_string())?;
        holds(&format!("gallery checks at |a| = {r}"), e.passed())?;
        close("gallery area", e.closed_form_value("area").unwrap_or(f64::NAN), area, 1e-12 * area.max(1.0))?;
        worst = worst.max(gap.abs());
    }
    Ok(format!("max gap {worst:.1e}"))
}

fn random_hull(rng: &mut ChaCha8Rng) -> Option<ConvexPolygon> {
    let count = rng.random_range(5..=40);
    let pts: Vec<Point> = (0..count)
        .map(|_| Point::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let p = ConvexPolygon::from_points(&pts).ok()?;
    (!p.is_degenerate() && polygon_area(&p) > 1e-6).then_some(p)
}

fn convex_suite() -> Outcome {
    let ratio = |p: &ConvexPolygon| width_ratio(p).map_err(|e| e.to_string());
    let rect = ConvexPolygon::rectangle(3.0, 1.0).map_err(|e| e.to_string())?;
    close("rectangle ratio", ratio(&rect)?, 1.0, 1e-9)?;
    let tri = ConvexPolygon::equilateral_triangle(1.0).map_err(|e| e.to_string())?;
    let (_, tri_product) = polygon_min_width_product(&tri, DEFAULT_ANGLES, DEFAULT_REFINE_TOL).map_err(|e| e.to_string())?;
    close("triangle product", tri_product, 1.5 * 3f64.sqrt(), 1e-6)?;
    close("triangle ratio", ratio(&tri)?, 2.0, 1e-6)?;
    let e = EllipseSpec::canonical(2.0, 1.0).map_err(|e| e.to_string())?;
    let (_, e_product) = ellipse_min_width_product(&e, DEFAULT_ANGLES, DEFAULT_REFINE_TOL).map_err(|e| e.to_string())?;
    close("ellipse product", e_product, 8.0, 1e-9)?;
    let disk = ConvexPolygon::regular(720, 1.0).map_err(|e| e.to_string())?;
    close("disk proxy ratio", ratio(&disk)?, 4.0 / PI, 1e-2)?;
    let reuleaux = reuleaux_triangle(1.0, 200).map_err(|e| e.to_string())?;
    let r_ratio = ratio(&reuleaux)?;
    close("Reuleaux ratio", r_ratio, 2.0 / (PI - 3f64.sqrt()), 5e-3)?;

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut tested = 0;
    while tested < 1000 {
        let Some(p) = random_hull(&mut rng) else { continue };
        let (_, v) = polygon_min_width_product(&p, DEFAULT_ANGLES, DEFAULT_REFINE_TOL).map_err(|e| e.to_string())?;
        let area = polygon_area(&p);
        holds(&format!("hull {tested}: product {v} > 2 area {}", 2.0 * area), v <= 2.0 * area + 1e-9)?;
        tested += 1;
    }
    Ok(format!("Reuleaux ratio {r_ratio:.9}, {tested} random hulls"))
}

fn theorem_fuzz() -> Outcome {
    let mut lines = Vec::new();
    for ensemble in [Ensemble::ComplexGaussian, Ensemble::UpperTriangular] {
        for n in [3, 4] {
            let out = fuzz_conjectures(&FuzzConfig::new(ensemble, n, 10_000, 3)).map_err(|e| e.to_string())?;
            let s = &out.summary;
            if let Some(v) = s.theorem_violations.first() {
                return Err(format!(
                    "{ensemble} n={n}: {} violations, worst seed {} relative slack {:e}",
                    s.theorem_violations.len(),
                    v.seed,
                    v.slack
                ));
            }
            let worst = s.min_theorem.first().map_or(f64::NAN, |x| x.slack);
            holds(&format!("{ensemble} n={n}: relative slack {worst:e}"), worst >= -1e-6)?;
            lines.push(format!("{ensemble}/{n}: {worst:.1e}"));
        }
    }
    Ok(format!("40000 trials, min relative slack {}", lines.join(", ")))
}

fn reproduce_argmin(s: &FuzzSummary) -> Result<(), String> {
    for (label, best, pick) in [
        ("conjecture 1", s.min_conj1[0], (|r: &selfcomm::bounds::BoundReport| r.conj1_slack) as fn(&_) -> f64),
        ("conjecture 2", s.min_conj2[0], |r| r.conj2_slack),
    ] {
        let a = random_matrix(s.ensemble, s.n, best.seed);
        let r = evaluate_bounds(&a, 1024).map_err(|e| e.to_string())?;
        close(&format!("{label} slack from seed {}", best.seed), pick(&r), best.slack, 1e-12 * r.scale())?;
    }
    Ok(())
}

fn conjecture_reporting() -> Outcome {
    let out = fuzz_conjectures(&FuzzConfig::new(Ensemble::ComplexGaussian, 2, 5000, 9)).map_err(|e| e.to_string())?;
    let min2 = out.records.iter().map(|r| r.conj2_slack / r.scale).fold(f64::INFINITY, f64::min);
    holds(&format!("2x2 conjecture-2 relative slack {min2:e}"), min2 >= -1e-6)?;
    let mut lines = vec![format!("2x2 conj2 min {min2:.1e}")];
    for n in [3, 4] {
        let cfg = FuzzConfig::new(Ensemble::ComplexGaussian, n, 500, 11);
        let first = fuzz_conjectures(&cfg).map_err(|e| e.to_string())?.summary;
        let again = fuzz_conjectures(&cfg).map_err(|e| e.to_string())?.summary;
        holds(
            "summary not reproducible",
            serde_json::to_string(&first).ok() == serde_json::to_string(&again).ok(),
        )?;
        reproduce_argmin(&first)?;
        lines.push(format!(
            "n={n} conj1 min {:.3e} (seed {}), conj2 min {:.3e} (seed {})",
            first.min_conj1[0].slack, first.min_conj1[0].seed, first.min_conj2[0].slack, first.min_conj2[0].seed
        ));
    }
    Ok(lines.join("; "))
}

/// Whether some ordering of `values` keeps every proper partial sum in
/// `[0, bound]`, by exhaustive search.
fn exists_admissible(values: &mut Vec<f64>, k: usize, bound: f64) -> bool {
    if k == values.len() {
        return true;
    }
    for i in k..values.len() {
        values.swap(k, i);
        let s: f64 = values[..=k].iter().sum();
        let ok = k + 1 == values.len() || (s >= -1e-12 && s <= bound + 1e-12);
        if ok && exists_admissible(values, k + 1, bound) {
            values.swap(k, i);
            return true;
        }
        values.swap(k, i);
    }
    false
}

fn rearrangement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..500 {
        let n = rng.random_range(2..=8);
        let mut values: Vec<f64> = (0..n - 1).map(|_| rng.random_range(-4.0..4.0)).collect();
        values.push(-values.iter().sum::<f64>());
        let m = values.iter().map(|v| v.abs()).fold(0.0, f64::max);
        holds(&format!("trial {trial}: oracle finds no order"), exists_admissible(&mut values.clone(), 0, 2.0 * m))?;
        let out = rearrange_zero_sum(&values).map_err(|e| format!("trial {trial}: {e}"))?;
        let (mut x, mut y) = (out.clone(), values.clone());
        x.sort_by(f64::total_cmp);
        y.sort_by(f64::total_cmp);
        holds(&format!("trial {trial}: output is not a permutation"), x == y)?;
        let sums = partial_sums(&out);
        holds(
            &format!("trial {trial}: partial sums {sums:?} leave [0, {}]", 2.0 * m),
            sums[..n - 1].iter().all(|&s| s >= -1e-12 && s <= 2.0 * m + 1e-12),
        )?;
        let b = shift_from_partial_sums(&out).map_err(|e| e.to_string())?.matrix();
        let cm = self_commutator(&b);
        for (k, v) in out.iter().enumerate() {
            close(&format!("trial {trial}: C_{k}{k}"), cm.get(k, k).re, *v, 1e-12)?;
        }
        let norm = operator_norm(&b);
        holds(&format!("trial {trial}: |B|² = {} > 2 max|λ|", norm * norm), norm * norm <= 2.0 * m * (1.0 + 1e-12))?;
    }
    Ok("500 lists".into())
}

fn bergman() -> Outcome {
    for (m, s) in partial_sums(&bergman_eigenvalues(1000)).iter().enumerate() {
        close(&format!("prefix {m}"), *s, 1.0 - 1.0 / (m as f64 + 2.0), 1e-15)?;
    }
    for n in [2, 8, 16, 50] {
        let shift = WeightedShift::new(bergman_weights(n).into_iter().map(|w| c(w, 0.0)).collect());
        close(&format!("|M_{n}|"), operator_norm(&shift.matrix()), (n as f64 / (n as f64 + 1.0)).sqrt(), 1e-12)?;
    }
    Ok("1000 prefixes, N in {2, 8, 16, 50}".into())
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 12] = [
        ("width product beats the Cartesian bound", 1, width_product_example),
        ("commuting pair far from scalars", 1, commuting_pair),
        ("tridiagonal Toeplitz ellipse", 5, toeplitz_example),
        ("Volterra operator", 60, volterra_example),
        ("2x2 closed form", 30, two_by_two_closed_form),
        ("rank-one operators", 10, rank_one_pairs),
        ("Dirichlet-space composition identity", 1, mobius_identity),
        ("planar width functionals", 60, convex_suite),
        ("theorem fuzz", 600, theorem_fuzz),
        ("conjecture reporting", 300, conjecture_reporting),
        ("zero-sum rearrangement", 30, rearrangement),
        ("Bergman shift closed forms", 1, bergman),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > Duration::from_secs(budget) => {
                Err(format!("{detail}; took {:.1} s, budget {budget} s", elapsed.as_secs_f64()))
            }
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{:.2} s]", k + 1, elapsed.as_secs_f64()),
            Err(reason) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {reason} [{:.2} s]", k + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
