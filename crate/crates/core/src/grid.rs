//! Uniform grids and complex-valued fields sampled on them.
//!
//! Grids are FFT-style: `n` points `x_j = min + j h` with `h = (max - min)/n`,
//! so the right endpoint is excluded and the conjugate wavenumber grid is
//! `k_m = 2 pi m / (n h)`. 2D fields use `(r, R)` axis order: axis 0 is the
//! light/relative coordinate (r or x1), axis 1 the heavy/center-of-mass
//! coordinate (R or x2).

use crate::error::{Result, SimError};
use ndarray::Array2;
use num_complex::Complex64 as C64;
use std::f64::consts::TAU;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    min: f64,
    max: f64,
    n: usize,
    spacing: f64,
}

impl Grid1D {
    pub fn new(min: f64, max: f64, n: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite()) || max <= min {
            return Err(SimError::validation(format!(
                "grid bounds must be finite with max > min, got [{min}, {max}]"
            )));
        }
        if n < 2 {
            return Err(SimError::validation(format!(
                "grid needs at least 2 points, got {n}"
            )));
        }
        let spacing = (max - min) / n as f64;
        Ok(Grid1D {
            min,
            max,
            n,
            spacing,
        })
    }

    /// Symmetric grid on [-half_width, half_width) with `n` points.
    pub fn symmetric(half_width: f64, n: usize) -> Result<Self> {
        Self::new(-half_width, half_width, n)
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn point(&self, j: usize) -> f64 {
        self.min + j as f64 * self.spacing
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |j| self.point(j))
    }

    /// Wavenumber of FFT bin `j` in natural (unshifted) order.
    pub fn wavenumber(&self, j: usize) -> f64 {
        let jj = if 2 * j < self.n {
            j as f64
        } else {
            j as f64 - self.n as f64
        };
        TAU * jj / (self.n as f64 * self.spacing)
    }

    /// Largest |k| representable on this grid (Nyquist).
    pub fn k_nyquist(&self) -> f64 {
        std::f64::consts::PI / self.spacing
    }

    /// Wavenumber grid spacing 2 pi / (n h).
    pub fn k_spacing(&self) -> f64 {
        TAU / (self.n as f64 * self.spacing)
    }

    /// Whether the grid is symmetric about 0 and contains x = 0 exactly.
    pub fn contains_origin(&self) -> bool {
        (self.min + self.max).abs() < 1e-12 * self.spacing && self.n % 2 == 0
    }

    /// Index of x = 0 for symmetric grids.
    pub fn origin_index(&self) -> Option<usize> {
        self.contains_origin().then_some(self.n / 2)
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.min && x < self.max
    }

    /// Nearest sample index for x, clamped to the grid.
    pub fn nearest_index(&self, x: f64) -> usize {
        let j = ((x - self.min) / self.spacing).round();
        (j.max(0.0) as usize).min(self.n - 1)
    }

    pub fn describe(&self) -> String {
        format!("[{}, {}) x {}", self.min, self.max, self.n)
    }
}

#[derive(Debug, Clone)]
pub struct ComplexField1D {
    pub grid: Grid1D,
    pub data: Vec<C64>,
}

impl ComplexField1D {
    pub fn zeros(grid: Grid1D) -> Self {
        ComplexField1D {
            data: vec![C64::new(0.0, 0.0); grid.len()],
            grid,
        }
    }

    pub fn from_fn(grid: Grid1D, f: impl Fn(f64) -> C64) -> Self {
        let data = grid.points().map(f).collect();
        ComplexField1D { grid, data }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>() * self.grid.spacing()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// L2 pairing, conjugate-linear in `self`.
    pub fn inner(&self, other: &ComplexField1D) -> Result<C64> {
        check_same_grid(&self.grid, &other.grid)?;
        let s: C64 = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum();
        Ok(s * self.grid.spacing())
    }

    pub fn scale(&mut self, c: C64) {
        for z in &mut self.data {
            *z *= c;
        }
    }

    pub fn l2_distance(&self, other: &ComplexField1D) -> Result<f64> {
        check_same_grid(&self.grid, &other.grid)?;
        let s: f64 = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        Ok((s * self.grid.spacing()).sqrt())
    }
}

/// Coordinate representation of a 2D field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordRep {
    /// Lab coordinates (r, R).
    Lab,
    /// Relative / center-of-mass coordinates (x1, x2).
    Com,
}

#[derive(Debug, Clone)]
pub struct ComplexField2D {
    /// Axis 0: light coordinate r (Lab) or relative coordinate x1 (Com).
    pub grid0: Grid1D,
    /// Axis 1: heavy coordinate R (Lab) or center-of-mass coordinate x2 (Com).
    pub grid1: Grid1D,
    pub rep: CoordRep,
    /// Shape (grid0.len(), grid1.len()).
    pub data: Array2<C64>,
}

impl ComplexField2D {
    pub fn zeros(grid0: Grid1D, grid1: Grid1D, rep: CoordRep) -> Self {
        ComplexField2D {
            data: Array2::zeros((grid0.len(), grid1.len())),
            grid0,
            grid1,
            rep,
        }
    }

    pub fn from_fn(grid0: Grid1D, grid1: Grid1D, rep: CoordRep, f: impl Fn(f64, f64) -> C64) -> Self {
        let mut field = Self::zeros(grid0, grid1, rep);
        for (i, x0) in field.grid0.points().enumerate() {
            for (j, x1) in field.grid1.points().enumerate() {
                field.data[[i, j]] = f(x0, x1);
            }
        }
        field
    }

    pub fn cell_area(&self) -> f64 {
        self.grid0.spacing() * self.grid1.spacing()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>() * self.cell_area()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn inner(&self, other: &ComplexField2D) -> Result<C64> {
        self.check_compatible(other)?;
        let s: C64 = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a.conj() * b)
            .sum();
        Ok(s * self.cell_area())
    }

    pub fn l2_distance(&self, other: &ComplexField2D) -> Result<f64> {
        self.check_compatible(other)?;
        let s: f64 = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        Ok((s * self.cell_area()).sqrt())
    }

    pub fn scale(&mut self, c: C64) {
        self.data.mapv_inplace(|z| z * c);
    }

    pub fn check_compatible(&self, other: &ComplexField2D) -> Result<()> {
        if self.rep != other.rep {
            return Err(SimError::GridMismatch {
                expected: format!("{:?} representation", self.rep),
                got: format!("{:?} representation", other.rep),
            });
        }
        check_same_grid(&self.grid0, &other.grid0)?;
        check_same_grid(&self.grid1, &other.grid1)
    }
}

pub fn check_same_grid(a: &Grid1D, b: &Grid1D) -> Result<()> {
    if a != b {
        return Err(SimError::GridMismatch {
            expected: a.describe(),
            got: b.describe(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn grid_points_and_spacing() {
        let g = Grid1D::new(-2.0, 2.0, 8).unwrap();
        assert_abs_diff_eq!(g.spacing(), 0.5);
        assert_abs_diff_eq!(g.point(0), -2.0);
        assert_abs_diff_eq!(g.point(7), 1.5);
        assert_eq!(g.origin_index(), Some(4));
        assert_abs_diff_eq!(g.point(4), 0.0);
    }

    #[test]
    fn wavenumbers_natural_order() {
        let g = Grid1D::new(0.0, 8.0, 8).unwrap();
        assert_abs_diff_eq!(g.wavenumber(0), 0.0);
        assert_abs_diff_eq!(g.wavenumber(1), TAU / 8.0);
        assert_abs_diff_eq!(g.wavenumber(7), -TAU / 8.0);
        assert_abs_diff_eq!(g.wavenumber(4), -4.0 * TAU / 8.0);
    }

    #[test]
    fn inner_is_conjugate_linear_in_first_argument() {
        let g = Grid1D::new(-1.0, 1.0, 16).unwrap();
        let a = ComplexField1D::from_fn(g, |x| C64::new(x, 0.3));
        let b = ComplexField1D::from_fn(g, |x| C64::new(0.1, -x));
        let c = C64::new(0.7, -1.2);
        let mut ca = a.clone();
        ca.scale(c);
        let lhs = ca.inner(&b).unwrap();
        let rhs = c.conj() * a.inner(&b).unwrap();
        assert!((lhs - rhs).norm() < 1e-14);
        // inner(psi, psi) = ||psi||^2
        let n2 = a.inner(&a).unwrap();
        assert_abs_diff_eq!(n2.re, a.norm_sqr(), epsilon = 1e-14);
        assert_abs_diff_eq!(n2.im, 0.0, epsilon = 1e-16);
    }

    #[test]
    fn mismatched_grids_error() {
        let a = ComplexField1D::zeros(Grid1D::new(-1.0, 1.0, 16).unwrap());
        let b = ComplexField1D::zeros(Grid1D::new(-1.0, 1.0, 32).unwrap());
        assert!(matches!(
            a.inner(&b),
            Err(SimError::GridMismatch { .. })
        ));
    }
}
