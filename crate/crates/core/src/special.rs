//! Faddeeva function w(z) and the scaled complementary error function
//! erfcx(z) for complex arguments.
//!
//! The rational approximation follows Weideman's method: a single set of
//! series coefficients computed once gives w(z) uniformly in the closed
//! upper half-plane. A Laplace continued fraction takes over for large |z|,
//! where it is both cheaper and more accurate.

use num_complex::Complex64 as C64;
use std::f64::consts::PI;
use std::sync::OnceLock;

const INV_SQRT_PI: f64 = 0.5641895835477562869480794515607726; // 1/sqrt(pi)
const WEIDEMAN_N: usize = 64;

fn weideman_coeffs() -> &'static (f64, Vec<f64>) {
    static COEFFS: OnceLock<(f64, Vec<f64>)> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let n = WEIDEMAN_N;
        let m = 2 * n;
        let m2 = 2 * m;
        let l = (n as f64 / std::f64::consts::SQRT_2).sqrt();
        // Sample f(theta) = exp(-t^2) (L^2 + t^2), t = L tan(theta/2), on the
        // Fourier grid, then take the leading DFT bins as the polynomial
        // coefficients in the mapped variable Z = (L+iz)/(L-iz).
        let mut samples = vec![0.0; m2];
        for (idx, s) in samples.iter_mut().enumerate() {
            // fftshift ordering: samples[j] = f_k with k = j for j < m,
            // and k = j - m2 for j >= m (the j == m slot is the prepended 0).
            let k = if idx < m {
                idx as i64
            } else {
                idx as i64 - m2 as i64
            };
            if k == -(m as i64) {
                *s = 0.0;
                continue;
            }
            let theta = k as f64 * PI / m as f64;
            let t = l * (0.5 * theta).tan();
            *s = (-t * t).exp() * (l * l + t * t);
        }
        let mut coeffs = vec![0.0; n];
        for (bin, c) in coeffs.iter_mut().enumerate() {
            let nbin = bin + 1;
            let mut acc = 0.0;
            for (j, s) in samples.iter().enumerate() {
                acc += s * (2.0 * PI * (j * nbin) as f64 / m2 as f64).cos();
            }
            *c = acc / m2 as f64;
        }
        (l, coeffs)
    })
}

/// Faddeeva function w(z) = e^{-z^2} erfc(-iz) for Im(z) >= 0.
pub fn faddeeva_w(z: C64) -> C64 {
    debug_assert!(z.im >= -1e-14, "faddeeva_w defined for Im(z) >= 0");
    if z.norm_sqr() > 144.0 {
        return faddeeva_cf(z);
    }
    let (l, coeffs) = weideman_coeffs();
    let iz = C64::new(-z.im, z.re);
    let denom = l - iz;
    let zz = (l + iz) / denom;
    // Horner evaluation: highest bin first.
    let mut p = C64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        p = p * zz + c;
    }
    (2.0 * p / denom + INV_SQRT_PI) / denom
}

// Laplace continued fraction, accurate for |z| >~ 8 in the upper half-plane.
fn faddeeva_cf(z: C64) -> C64 {
    let mut r = C64::new(0.0, 0.0);
    for k in (1..=24u32).rev() {
        r = 0.5 * k as f64 / (z - r);
    }
    C64::new(0.0, INV_SQRT_PI) / (z - r)
}

/// Scaled complementary error function erfcx(z) = e^{z^2} erfc(z) for
/// Re(z) >= 0 (maps to the Faddeeva function in the upper half-plane).
pub fn erfcx(z: C64) -> C64 {
    debug_assert!(z.re >= -1e-14, "erfcx evaluated for Re(z) >= 0");
    faddeeva_w(C64::new(-z.im, z.re))
}
