//! Derivative-free one- and two-dimensional minimizers.

const INV_PHI: f64 = 0.618_033_988_749_894_8; // 1/φ

/// Golden-section search for a minimum of `f` on `[lo, hi]`.
///
/// Stops once the bracket is no wider than `tol`. Returns the best abscissa
/// evaluated and its value; for a non-unimodal `f` this is still a valid
/// upper bound on the minimum over the bracket.
pub fn golden_section_min(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut best = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    let tol = tol.max(f64::EPSILON * (a.abs() + b.abs()));
    while b - a > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
            if f1 < best.1 {
                best = (x1, f1);
            }
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
            if f2 < best.1 {
                best = (x2, f2);
            }
        }
    }
    best
}

/// Scans `f` on `n` equally spaced points of `[lo, lo + span)` and refines
/// the three best grid cells by golden section. Returns the minimizing
/// abscissa and value; ties go to the smaller abscissa.
pub fn scan_min(
    mut f: impl FnMut(f64) -> f64,
    lo: f64,
    span: f64,
    n: usize,
    refine_tol: f64,
) -> (f64, f64) {
    let step = span / n as f64;
    let grid: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let t = lo + step * k as f64;
            (t, f(t))
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| grid[a].1.total_cmp(&grid[b].1).then(a.cmp(&b)));

    let mut best = grid[order[0]];
    for &k in order.iter().take(3) {
        let center = grid[k].0;
        let (t, v) = golden_section_min(&mut f, center - step, center + step, refine_tol);
        if v < best.1 || (v == best.1 && t < best.0) {
            best = (t, v);
        }
    }
    // fold back into [lo, lo + span)
    let t = lo + (best.0 - lo).rem_euclid(span);
    (t, best.1)
}

/// Settings for [`nelder_mead_2d`].
#[derive(Clone, Copy, Debug)]
pub struct NelderMeadOptions {
    /// Edge length of the initial simplex.
    pub initial_step: f64,
    /// Stop when the simplex diameter is below this.
    pub xtol: f64,
    /// ... and the spread of function values is below this.
    pub ftol: f64,
    pub max_evals: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct Minimum2d {
    pub x: [f64; 2],
    pub value: f64,
    pub evals: usize,
    pub converged: bool,
}

/// Nelder–Mead simplex search in the plane with standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
pub fn nelder_mead_2d(
    mut f: impl FnMut([f64; 2]) -> f64,
    start: [f64; 2],
    opts: NelderMeadOptions,
) -> Minimum2d {
    let h = opts.initial_step;
    let mut simplex = [
        start,
        [start[0] + h, start[1]],
        [start[0] + 0.5 * h, start[1] + 0.866_025_403_784_438_6 * h],
    ];
    let mut values = [f(simplex[0]), f(simplex[1]), f(simplex[2])];
    let mut evals = 3;

    let lerp =
        |a: [f64; 2], b: [f64; 2], t: f64| [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
    let dist = |a: [f64; 2], b: [f64; 2]| (a[0] - b[0]).hypot(a[1] - b[1]);

    let mut converged = false;
    while evals < opts.max_evals {
        // order best..worst
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
        simplex = [simplex[idx[0]], simplex[idx[1]], simplex[idx[2]]];
        values = [values[idx[0]], values[idx[1]], values[idx[2]]];

        let diameter = dist(simplex[0], simplex[1]).max(dist(simplex[0], simplex[2]));
        if diameter <= opts.xtol && values[2] - values[0] <= opts.ftol {
            converged = true;
            break;
        }

        let centroid = lerp(simplex[0], simplex[1], 0.5);
        let reflected = lerp(centroid, simplex[2], -1.0);
        let fr = f(reflected);
        evals += 1;
        if fr < values[0] {
            let expanded = lerp(centroid, simplex[2], -2.0);
            let fe = f(expanded);
            evals += 1;
            if fe < fr {
                simplex[2] = expanded;
                values[2] = fe;
            } else {
                simplex[2] = reflected;
                values[2] = fr;
            }
        } else if fr < values[1] {
            simplex[2] = reflected;
            values[2] = fr;
        } else {
            let (candidate, fc) = if fr < values[2] {
                let outside = lerp(centroid, simplex[2], -0.5);
                (outside, f(outside))
            } else {
                let inside = lerp(centroid, simplex[2], 0.5);
                (inside, f(inside))
            };
            evals += 1;
            if fc < values[2].min(fr) {
                simplex[2] = candidate;
                values[2] = fc;
            } else {
                for k in 1..3 {
                    simplex[k] = lerp(simplex[0], simplex[k], 0.5);
                    values[k] = f(simplex[k]);
                }
                evals += 2;
            }
        }
    }

    let best = (0..3)
        .min_by(|&i, &j| values[i].total_cmp(&values[j]))
        .unwrap();
    Minimum2d {
        x: simplex[best],
        value: values[best],
        evals,
        converged,
    }
}
