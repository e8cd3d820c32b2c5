use alloc::vec::Vec;

use super::{LaplacianMatrix, SpectrumError};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiConfig {
    /// Stop once every off-diagonal entry is at most this in absolute value.
    pub tolerance: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiConfig {
    fn default() -> Self {
        Self {
            tolerance: DEFAULT_TOLERANCE,
            max_sweeps: DEFAULT_MAX_SWEEPS,
        }
    }
}

/// Eigenvalues of `l`, ascending, by cyclic Jacobi rotations.
pub fn numeric_spectrum(l: &LaplacianMatrix, tolerance: f64) -> Result<Vec<f64>, SpectrumError> {
    numeric_spectrum_with(
        l,
        JacobiConfig {
            tolerance,
            ..JacobiConfig::default()
        },
    )
}

pub fn numeric_spectrum_with(
    l: &LaplacianMatrix,
    config: JacobiConfig,
) -> Result<Vec<f64>, SpectrumError> {
    let n = l.order();
    let mut a = l.to_f64();
    let mut sweeps = 0;
    loop {
        let off = max_off_diagonal(&a, n);
        if off <= config.tolerance {
            break;
        }
        if sweeps == config.max_sweeps {
            return Err(SpectrumError::NoConvergence {
                sweeps,
                off_diagonal: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

fn max_off_diagonal(a: &[f64], n: usize) -> f64 {
    let mut m = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            m = m.max(libm::fabs(a[i * n + j]));
        }
    }
    m
}

/// Zeroes `a[p][q]` with a symmetric rotation in the `(p, q)` plane.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // Smaller root of t² + 2θt − 1 = 0; for huge θ this tends to 1/(2θ).
    let t = if libm::fabs(theta) > 1e150 {
        0.5 / theta
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0))
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}
