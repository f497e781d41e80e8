//! Shared test oracles: adaptive quadrature, oscillation-aware half-line
//! integration with Euler acceleration, Maclaurin series for Si/Ci, and
//! small regression helpers. Everything here is independent of the
//! library's own evaluation paths.
#![allow(dead_code)]

use num_complex::Complex64;

/// Adaptive Simpson on [a, b] with absolute tolerance, complex-valued.
pub fn adaptive_simpson<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, tol: f64) -> Complex64 {
    fn simpson(fa: Complex64, fm: Complex64, fb: Complex64, h: f64) -> Complex64 {
        (fa + 4.0 * fm + fb) * (h / 6.0)
    }
    fn recurse<F: Fn(f64) -> Complex64>(
        f: &F,
        a: f64,
        b: f64,
        fa: Complex64,
        fm: Complex64,
        fb: Complex64,
        whole: Complex64,
        tol: f64,
        depth: u32,
    ) -> Complex64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        if depth == 0 || delta.norm() < 15.0 * tol {
            return left + right + delta / 15.0;
        }
        recurse(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1)
            + recurse(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1)
    }
    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let whole = simpson(fa, fm, fb, b - a);
    recurse(f, a, b, fa, fm, fb, whole, tol, 48)
}

pub fn adaptive_simpson_real<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    adaptive_simpson(&|x| Complex64::new(f(x), 0.0), a, b, tol).re
}

/// ∫₀^∞ g(x) dx for oscillatory g: integrate between consecutive
/// boundaries (zeros of the oscillation), sum the first `head` pieces
/// directly, then apply iterated averaging (Euler transformation, 30
/// levels) to the alternating tail of partial sums.
pub fn oscillatory_halfline<F: Fn(f64) -> Complex64>(
    g: &F,
    boundaries: &[f64],
    head: usize,
    tol: f64,
) -> Complex64 {
    const LEVELS: usize = 30;
    let need = head + LEVELS + 12;
    assert!(boundaries.len() >= need + 1, "not enough oscillation pieces");
    let mut pieces = Vec::with_capacity(need);
    for w in boundaries.windows(2).take(need) {
        pieces.push(adaptive_simpson(g, w[0], w[1], tol));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for p in &pieces[..head] {
        sum += p;
    }
    let mut partials: Vec<Complex64> = Vec::new();
    let mut s = sum;
    for p in &pieces[head..] {
        s += p;
        partials.push(s);
    }
    for _ in 0..LEVELS {
        for i in 0..partials.len() - 1 {
            partials[i] = 0.5 * (partials[i] + partials[i + 1]);
        }
        partials.pop();
    }
    partials[0]
}

/// Maclaurin series Si(z) = Σ (−1)^k z^{2k+1}/((2k+1)(2k+1)!).
pub fn si_maclaurin(z: Complex64) -> Complex64 {
    let z2 = z * z;
    let mut term = z; // (−1)^k z^{2k+1}/(2k+1)!
    let mut sum = z;
    for k in 1..120 {
        term *= -z2 / ((2 * k) as f64 * (2 * k + 1) as f64);
        let add = term / (2 * k + 1) as f64;
        sum += add;
        if add.norm() <= 1e-18 * sum.norm() {
            break;
        }
    }
    sum
}

/// Maclaurin-based Ci(z) = γ + log z + Σ (−1)^k z^{2k}/((2k)(2k)!).
pub fn ci_maclaurin(z: Complex64) -> Complex64 {
    let z2 = z * z;
    let mut term = Complex64::new(1.0, 0.0); // (−1)^k z^{2k}/(2k)!
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..120 {
        term *= -z2 / ((2 * k - 1) as f64 * (2 * k) as f64);
        let add = term / (2 * k) as f64;
        sum += add;
        if add.norm() <= 1e-18 * sum.norm().max(1e-30) {
            break;
        }
    }
    oscq_core::EULER_GAMMA + z.ln() + sum
}

/// Path-quadrature Si(z) = ∫₀¹ sin(zτ)/τ dτ along the straight segment.
pub fn si_path_quadrature(z: Complex64, tol: f64) -> Complex64 {
    adaptive_simpson(
        &|tau| {
            if tau == 0.0 {
                z
            } else {
                (z * tau).sin() / tau
            }
        },
        0.0,
        1.0,
        tol,
    )
}

/// Path-quadrature Ci(z) = γ + log z + ∫₀¹ (cos(zτ) − 1)/τ dτ.
pub fn ci_path_quadrature(z: Complex64, tol: f64) -> Complex64 {
    let integral = adaptive_simpson(
        &|tau| {
            if tau == 0.0 {
                Complex64::new(0.0, 0.0)
            } else {
                ((z * tau).cos() - 1.0) / tau
            }
        },
        0.0,
        1.0,
        tol,
    );
    oscq_core::EULER_GAMMA + z.ln() + integral
}

/// Least-squares slope of y against x.
pub fn regression_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let xb = xs.iter().sum::<f64>() / n;
    let yb = ys.iter().sum::<f64>() / n;
    let num: f64 = xs.iter().zip(ys).map(|(x, y)| (x - xb) * (y - yb)).sum();
    let den: f64 = xs.iter().map(|x| (x - xb) * (x - xb)).sum();
    num / den
}

/// Brute-force oracle for ∫₀^∞ sin(tx)/((x−a)²+b²) dx: split at the
/// zeros kπ/t of sin(tx), Euler-accelerate the alternating tail.
pub fn lorentzian_sine_oracle(a: f64, b: f64, t: f64) -> f64 {
    let pieces = 220;
    let boundaries: Vec<f64> = (0..=pieces).map(|k| k as f64 * std::f64::consts::PI / t).collect();
    let g = |x: f64| Complex64::new((t * x).sin() / ((x - a) * (x - a) + b * b), 0.0);
    oscillatory_halfline(&g, &boundaries, 120, 2e-14).re
}

/// Oracle for ∫₀^∞ cos(xy)/(a+x) dx with complex a: split at the zeros
/// of cos(xy).
pub fn halfline_cosine_oracle(a: Complex64, y: f64) -> Complex64 {
    let pieces = 200;
    let mut boundaries = vec![0.0];
    boundaries.extend((0..pieces).map(|k| (0.5 + k as f64) * std::f64::consts::PI / y));
    let g = |x: f64| Complex64::new((x * y).cos(), 0.0) / (a + x);
    oscillatory_halfline(&g, &boundaries, 100, 1e-13)
}

/// Oracle for ∫₀^∞ sin(xy)/(a+x) dx with complex a.
pub fn halfline_sine_oracle(a: Complex64, y: f64) -> Complex64 {
    let pieces = 200;
    let boundaries: Vec<f64> = (0..=pieces).map(|k| k as f64 * std::f64::consts::PI / y).collect();
    let g = |x: f64| Complex64::new((x * y).sin(), 0.0) / (a + x);
    oscillatory_halfline(&g, &boundaries, 100, 1e-13)
}

/// Oracle for ∫₀^∞ cos(tx)/((x−a)²+b²) dx.
pub fn lorentzian_cosine_oracle(a: f64, b: f64, t: f64) -> f64 {
    let pieces = 220;
    let mut boundaries = vec![0.0];
    boundaries.extend((0..pieces).map(|k| (0.5 + k as f64) * std::f64::consts::PI / t));
    let g = |x: f64| Complex64::new((t * x).cos() / ((x - a) * (x - a) + b * b), 0.0);
    oscillatory_halfline(&g, &boundaries, 120, 2e-14).re
}
