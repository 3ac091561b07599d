//! Zernike polynomial basis in Noll ordering and phase-mask synthesis.
//!
//! Modes are indexed by Noll's single index j (1-based):
//!
//! | j | 1 | 2 | 3 | 4 |  5 | 6 |  7 | 8 |  9 | 10 | 11 | 12 |  13 | 14 |  15 |
//! | n | 0 | 1 | 1 | 2 |  2 | 2 |  3 | 3 |  3 |  3 |  4 |  4 |   4 |  4 |   4 |
//! | m | 0 | 1 |-1 | 0 | -2 | 2 | -1 | 1 | -3 |  3 |  0 |  2 |  -2 |  4 |  -4 |
//!
//! Even j carries the cosine term (m > 0), odd j the sine term (m < 0).
//! Each mode includes the Noll normalization sqrt(n+1) (m = 0) or
//! sqrt(2(n+1)) (m != 0), so coefficients are comparable across modes.
//! A phase mask is the linear combination phi = sum_j beta_j Q_j, with beta
//! in micrometers of surface height.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::UnitDiskGrid;
use crate::par;

/// A validated Noll index with its radial order and azimuthal frequency.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NollIndex {
    pub j: u32,
    pub n: u32,
    /// Signed azimuthal frequency; negative means the sine term.
    pub m: i32,
}

impl NollIndex {
    pub fn new(j: u32) -> Result<Self> {
        let (n, m) = noll_to_nm(j)?;
        Ok(NollIndex { j, n, m })
    }
}

/// Map a Noll index to its unique (n, m) pair.
///
/// Walks radial orders upward, handing out index pairs per |m| with the
/// even-j-cosine / odd-j-sine rule.
pub fn noll_to_nm(j: u32) -> Result<(u32, i32)> {
    if j < 1 {
        return Err(Error::invalid_argument("Noll index j must be >= 1"));
    }
    let mut next = 1u32;
    for n in 0u32.. {
        let m_start = n % 2;
        for m_abs in (m_start..=n).step_by(2) {
            if m_abs == 0 {
                if next == j {
                    return Ok((n, 0));
                }
                next += 1;
            } else {
                // Two consecutive indices share |m|; the even one is cosine.
                if j == next || j == next + 1 {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    return Ok((n, sign * m_abs as i32));
                }
                next += 2;
            }
        }
    }
    unreachable!()
}

fn factorial(n: u32) -> f64 {
    (2..=u64::from(n)).map(|k| k as f64).product()
}

/// Radial polynomial R_n^m(rho) as the explicit factorial series.
pub fn radial_polynomial(n: u32, m_abs: u32, rho: f64) -> Result<f64> {
    if m_abs > n {
        return Err(Error::invalid_argument(format!(
            "radial polynomial requires m <= n, got n={n}, m={m_abs}"
        )));
    }
    if (n - m_abs) % 2 != 0 {
        return Err(Error::invalid_argument(format!(
            "radial polynomial requires n - m even, got n={n}, m={m_abs}"
        )));
    }
    let half_diff = (n - m_abs) / 2;
    let half_sum = (n + m_abs) / 2;
    let mut acc = 0.0;
    for k in 0..=half_diff {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let num = factorial(n - k);
        let den = factorial(k) * factorial(half_sum - k) * factorial(half_diff - k);
        acc += sign * num / den * rho.powi((n - 2 * k) as i32);
    }
    Ok(acc)
}

/// Evaluate the j-th Zernike mode at one normalized pupil point.
pub fn evaluate_at(index: NollIndex, u: f64, v: f64) -> f64 {
    let rho2 = u * u + v * v;
    if rho2 > 1.0 {
        return 0.0;
    }
    let rho = rho2.sqrt();
    let m_abs = index.m.unsigned_abs();
    let radial = radial_polynomial(index.n, m_abs, rho)
        .expect("NollIndex guarantees a valid (n, m) pair");
    if index.m == 0 {
        return ((index.n + 1) as f64).sqrt() * radial;
    }
    let theta = v.atan2(u);
    let norm = (2.0 * (index.n + 1) as f64).sqrt();
    let angular = if index.m > 0 {
        (f64::from(m_abs) * theta).cos()
    } else {
        (f64::from(m_abs) * theta).sin()
    };
    norm * radial * angular
}

/// Sample the j-th Zernike mode on a grid; exactly zero outside the aperture.
pub fn evaluate_basis(j: u32, grid: &UnitDiskGrid) -> Result<Vec<f64>> {
    let index = NollIndex::new(j)?;
    let n = grid.resolution();
    let mut values = vec![0.0; n * n];
    par::for_each_chunk_mut(&mut values, n, |row, out| {
        for (col, slot) in out.iter_mut().enumerate() {
            if grid.inside(row, col) {
                let (u, v) = grid.coords(row, col);
                *slot = evaluate_at(index, u, v);
            }
        }
    });
    Ok(values)
}

/// Lens surface-sag amplitudes, one per Noll mode starting at j = 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZernikeCoefficients {
    beta: Vec<f64>,
}

impl ZernikeCoefficients {
    /// Wrap a coefficient vector; entry i drives Noll mode j = i + 1.
    pub fn new(beta: Vec<f64>) -> Result<Self> {
        if beta.is_empty() {
            return Err(Error::invalid_argument(
                "coefficient vector must have at least one entry",
            ));
        }
        if beta.iter().any(|b| !b.is_finite()) {
            return Err(Error::NonFinite("Zernike coefficients".into()));
        }
        Ok(ZernikeCoefficients { beta })
    }

    pub fn zeros(p: usize) -> Self {
        ZernikeCoefficients {
            beta: vec![0.0; p.max(1)],
        }
    }

    /// Build from sparse (j, beta) pairs, zero-filling up to `p` modes.
    pub fn from_pairs(p: usize, pairs: &[(u32, f64)]) -> Result<Self> {
        let mut beta = vec![0.0; p.max(1)];
        for &(j, value) in pairs {
            if j < 1 || j as usize > beta.len() {
                return Err(Error::invalid_argument(format!(
                    "coefficient index j={j} outside 1..={p}"
                )));
            }
            beta[j as usize - 1] = value;
        }
        Self::new(beta)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.beta.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.beta.is_empty()
    }

    /// Coefficient of Noll mode j (1-based); zero when j exceeds p.
    #[inline]
    pub fn get(&self, j: u32) -> f64 {
        self.beta.get(j as usize - 1).copied().unwrap_or(0.0)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.beta
    }

    pub fn to_vec(&self) -> Vec<f64> {
        self.beta.clone()
    }
}

/// Phase mask: surface height in micrometers over a unit-disk grid.
#[derive(Debug, Clone)]
pub struct PhaseMask {
    phi: Vec<f64>,
    resolution: usize,
}

impl PhaseMask {
    #[inline]
    pub fn resolution(&self) -> usize {
        self.resolution
    }

    #[inline]
    pub fn value(&self, row: usize, col: usize) -> f64 {
        self.phi[row * self.resolution + col]
    }

    pub fn values(&self) -> &[f64] {
        &self.phi
    }
}

/// Synthesize phi = sum_j beta_j Q_j on the grid.
pub fn synthesize_phase(beta: &ZernikeCoefficients, grid: &UnitDiskGrid) -> Result<PhaseMask> {
    let n = grid.resolution();
    let active: Vec<NollIndex> = (1..=beta.len() as u32)
        .filter(|j| beta.get(*j) != 0.0)
        .map(NollIndex::new)
        .collect::<Result<_>>()?;
    let mut phi = vec![0.0; n * n];
    par::for_each_chunk_mut(&mut phi, n, |row, out| {
        for (col, slot) in out.iter_mut().enumerate() {
            if grid.inside(row, col) {
                let (u, v) = grid.coords(row, col);
                *slot = active
                    .iter()
                    .map(|idx| beta.get(idx.j) * evaluate_at(*idx, u, v))
                    .sum();
            }
        }
    });
    Ok(PhaseMask {
        phi,
        resolution: n,
    })
}
