//! Thin cache around rustfft plus the spectral primitives built on it:
//! Fourier multipliers and exact fractional shifts on grid-sampled fields.

use crate::grid::{ComplexField1D, Grid1D};
use num_complex::Complex64 as C64;
use rustfft::{Fft, FftPlanner};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

type PlanKey = (usize, bool);

fn plan(n: usize, forward: bool) -> Arc<dyn Fft<f64>> {
    static PLANS: OnceLock<Mutex<HashMap<PlanKey, Arc<dyn Fft<f64>>>>> = OnceLock::new();
    let plans = PLANS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = plans.lock().unwrap();
    guard
        .entry((n, forward))
        .or_insert_with(|| {
            let mut planner = FftPlanner::new();
            if forward {
                planner.plan_fft_forward(n)
            } else {
                planner.plan_fft_inverse(n)
            }
        })
        .clone()
}

/// In-place unnormalized forward DFT.
pub fn fft_forward(data: &mut [C64]) {
    plan(data.len(), true).process(data);
}

/// In-place inverse DFT, normalized by 1/n.
pub fn fft_inverse(data: &mut [C64]) {
    let n = data.len();
    plan(n, false).process(data);
    let scale = 1.0 / n as f64;
    for z in data.iter_mut() {
        *z *= scale;
    }
}

/// Apply a diagonal-in-k multiplier to grid samples in place.
///
/// Exactly unitary whenever |m(k)| = 1.
pub fn apply_multiplier(grid: &Grid1D, data: &mut [C64], mult: impl Fn(f64) -> C64) {
    debug_assert_eq!(grid.len(), data.len());
    fft_forward(data);
    for (j, z) in data.iter_mut().enumerate() {
        *z *= mult(grid.wavenumber(j));
    }
    fft_inverse(data);
}

/// Periodic band-limited translation: returns samples of f(x + shift).
pub fn fractional_shift(grid: &Grid1D, data: &mut [C64], shift: f64) {
    apply_multiplier(grid, data, |k| C64::new(0.0, k * shift).exp());
}

/// Continuous-convention Fourier transform of a sampled field:
/// `h~(k_m) = (2 pi)^{-1/2} h_spacing e^{-i k_m x_min} FFT[h]_m`,
/// returned on the conjugate k-grid in ascending order.
pub fn continuum_transform(field: &ComplexField1D) -> ComplexField1D {
    let n = field.grid.len();
    let dx = field.grid.spacing();
    let mut work = field.data.clone();
    fft_forward(&mut work);
    let dk = field.grid.k_spacing();
    let k_grid = Grid1D::new(
        -(n as f64 / 2.0).floor() * dk,
        ((n as f64) - (n as f64 / 2.0).floor()) * dk,
        n,
    )
    .expect("conjugate grid");
    let pref = dx / (std::f64::consts::TAU).sqrt();
    let mut out = ComplexField1D::zeros(k_grid);
    for m in 0..n {
        // ascending order: bin for k_grid.point(m)
        let bin = (m + n - n / 2) % n;
        let k = k_grid.point(m);
        let phase = C64::new(0.0, -k * field.grid.min()).exp();
        out.data[m] = work[bin] * phase * pref;
    }
    out
}
