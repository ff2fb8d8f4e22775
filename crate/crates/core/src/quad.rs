//! Quadrature rules used throughout the crate: Gauss-Legendre panels for
//! compactly supported (possibly oscillatory) integrands, Gauss-Laguerre for
//! exponentially damped half-line integrals, and adaptive Simpson as an
//! independent cross-check rule.

use num_complex::Complex64 as C64;

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
pub fn legendre_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_eval(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 5e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
        let (_, d) = legendre_eval(n, 0.0);
        weights[n / 2] = 2.0 / (d * d);
    }
    (nodes, weights)
}

// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre_eval(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for j in 1..n {
        let p2 = ((2 * j + 1) as f64 * x * p1 - j as f64 * p0) / (j + 1) as f64;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Nodes and weights of an n-point Gauss-Laguerre rule for
/// `integral_0^inf e^{-x} f(x) dx ~= sum w_i f(x_i)`.
pub fn laguerre_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    let mut z = 0.0;
    for i in 0..n {
        // Stroud & Secrest initial guesses.
        z = match i {
            0 => 3.0 / (1.0 + 2.4 * nf),
            1 => z + 15.0 / (1.0 + 2.5 * nf),
            _ => {
                let ai = (i - 1) as f64;
                z + ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - nodes[i - 2])
            }
        };
        for _ in 0..200 {
            let (p, d) = laguerre_eval(n, z);
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-15 * z.max(1.0) {
                break;
            }
        }
        nodes[i] = z;
        // w_i = x_i / ((n+1)^2 [L_{n+1}(x_i)]^2)
        let lnp1 = laguerre_value(n + 1, z);
        weights[i] = z / ((n + 1) as f64 * lnp1).powi(2);
    }
    (nodes, weights)
}

fn laguerre_value(n: usize, x: f64) -> f64 {
    let mut p0 = 1.0;
    let mut p1 = 1.0 - x;
    if n == 0 {
        return p0;
    }
    for j in 1..n {
        let jf = j as f64;
        let p2 = ((2.0 * jf + 1.0 - x) * p1 - jf * p0) / (jf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    p1
}

fn laguerre_eval(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = 1.0 - x;
    for j in 1..n {
        let jf = j as f64;
        let p2 = ((2.0 * jf + 1.0 - x) * p1 - jf * p0) / (jf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (p1 - p0) / x;
    (p1, d)
}

/// Composite Gauss-Legendre integration of a complex integrand over [a, b].
pub fn panel_integrate<F>(a: f64, b: f64, panels: usize, order: usize, f: F) -> C64
where
    F: Fn(f64) -> C64,
{
    let (nodes, weights) = legendre_rule(order);
    let h = (b - a) / panels as f64;
    let mut acc = C64::new(0.0, 0.0);
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        let half = 0.5 * h;
        let mut panel = C64::new(0.0, 0.0);
        for (x, w) in nodes.iter().zip(&weights) {
            panel += f(mid + half * x) * *w;
        }
        acc += panel * half;
    }
    acc
}

/// Panel count so a 16-point Gauss-Legendre panel never sees more than
/// ~6 radians of phase at the given oscillation rate (rad per unit length).
pub fn panels_for_rate(a: f64, b: f64, max_rate: f64) -> usize {
    let span = (b - a).abs();
    let phase = max_rate.abs() * span;
    ((phase / 6.0).ceil() as usize).max(1)
}

/// Composite GL-16 rule sized for an oscillatory integrand of bounded rate.
pub fn oscillatory_integrate<F>(a: f64, b: f64, max_rate: f64, f: F) -> C64
where
    F: Fn(f64) -> C64,
{
    panel_integrate(a, b, panels_for_rate(a, b, max_rate), 16, f)
}

/// Adaptive Simpson quadrature for complex integrands. Independent of the
/// Gauss panel machinery; used as a cross-check rule.
pub fn adaptive_simpson<F>(f: &F, a: f64, b: f64, tol: f64) -> C64
where
    F: Fn(f64) -> C64,
{
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_rec(f, a, b, fa, fb, fm, whole, tol, 50)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: C64,
    fb: C64,
    fm: C64,
    whole: C64,
    tol: f64,
    depth: u32,
) -> C64
where
    F: Fn(f64) -> C64,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.norm() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_rec(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1)
            + simpson_rec(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn legendre_low_order_nodes() {
        let (x, w) = legendre_rule(2);
        assert_abs_diff_eq!(x[0], -(1.0f64 / 3.0).sqrt(), epsilon = 1e-14);
        assert_abs_diff_eq!(x[1], (1.0f64 / 3.0).sqrt(), epsilon = 1e-14);
        assert_abs_diff_eq!(w[0], 1.0, epsilon = 1e-14);
        let (x, w) = legendre_rule(5);
        assert_abs_diff_eq!(x[2], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(w[2], 128.0 / 225.0, epsilon = 1e-14);
    }

    #[test]
    fn legendre_integrates_polynomials_exactly() {
        // GL-8 is exact through degree 15.
        let (nodes, weights) = legendre_rule(8);
        for k in 0..=15usize {
            let got: f64 = nodes
                .iter()
                .zip(&weights)
                .map(|(x, w)| w * x.powi(k as i32))
                .sum();
            let exact = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
            assert_abs_diff_eq!(got, exact, epsilon = 1e-13);
        }
    }

    #[test]
    fn laguerre_two_point_rule_matches_closed_form() {
        let (x, w) = laguerre_rule(2);
        assert_abs_diff_eq!(x[0], 2.0 - std::f64::consts::SQRT_2, epsilon = 1e-12);
        assert_abs_diff_eq!(x[1], 2.0 + std::f64::consts::SQRT_2, epsilon = 1e-12);
        assert_abs_diff_eq!(w[0], (2.0 + std::f64::consts::SQRT_2) / 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(w[1], (2.0 - std::f64::consts::SQRT_2) / 4.0, epsilon = 1e-12);
    }

    #[test]
    fn laguerre_moments() {
        let (nodes, weights) = laguerre_rule(64);
        // integral_0^inf e^{-x} x^k dx = k!
        let mut fact = 1.0;
        for k in 0..12usize {
            if k > 0 {
                fact *= k as f64;
            }
            let got: f64 = nodes
                .iter()
                .zip(&weights)
                .map(|(x, w)| w * x.powi(k as i32))
                .sum();
            assert!(
                (got - fact).abs() / fact < 1e-12,
                "moment {k}: got {got}, want {fact}"
            );
        }
    }

    #[test]
    fn laguerre_damped_oscillation() {
        // integral_0^inf e^{-x} cos(a x) dx = 1/(1+a^2)
        let (nodes, weights) = laguerre_rule(64);
        let a = 1.3;
        let got: f64 = nodes
            .iter()
            .zip(&weights)
            .map(|(x, w)| w * (a * x).cos())
            .sum();
        assert_abs_diff_eq!(got, 1.0 / (1.0 + a * a), epsilon = 1e-12);
    }

    #[test]
    fn oscillatory_panels_resolve_fast_phase() {
        let k = 43.7;
        let got = oscillatory_integrate(0.0, 1.0, k, |x| C64::new(0.0, k * x).exp());
        let exact = (C64::new(0.0, k).exp() - 1.0) / C64::new(0.0, k);
        assert!((got - exact).norm() < 1e-12);
    }

    #[test]
    fn adaptive_simpson_gaussian() {
        let got = adaptive_simpson(&|x: f64| C64::new((-x * x).exp(), 0.0), -8.0, 8.0, 1e-12);
        assert_abs_diff_eq!(got.re, std::f64::consts::PI.sqrt(), epsilon = 1e-10);
        assert_abs_diff_eq!(got.im, 0.0, epsilon = 1e-14);
    }
}
