//! Discretization of the unit-disk pupil plane.

use crate::error::{Error, Result};

/// Square sampling of normalized pupil coordinates (u, v) in [-1, 1]².
///
/// For even resolution the pixel (N/2, N/2) sits exactly at (0, 0), which
/// lines up with the FFT origin after shifting. The aperture mask marks
/// pixels with u² + v² <= 1.
#[derive(Debug, Clone)]
pub struct UnitDiskGrid {
    resolution: usize,
    mask: Vec<bool>,
}

impl UnitDiskGrid {
    pub fn new(resolution: usize) -> Result<Self> {
        if resolution < 2 {
            return Err(Error::invalid_argument(format!(
                "grid resolution must be at least 2, got {resolution}"
            )));
        }
        let mut mask = vec![false; resolution * resolution];
        for row in 0..resolution {
            for col in 0..resolution {
                let (u, v) = Self::coords_at(resolution, row, col);
                mask[row * resolution + col] = u * u + v * v <= 1.0;
            }
        }
        Ok(UnitDiskGrid { resolution, mask })
    }

    #[inline]
    fn coords_at(resolution: usize, row: usize, col: usize) -> (f64, f64) {
        let half = (resolution / 2) as f64;
        let scale = 2.0 / resolution as f64;
        // v runs along rows, u along columns; both in [-1, 1 - 2/N].
        let v = (row as f64 - half) * scale;
        let u = (col as f64 - half) * scale;
        (u, v)
    }

    #[inline]
    pub fn resolution(&self) -> usize {
        self.resolution
    }

    /// Normalized (u, v) at a pixel.
    #[inline]
    pub fn coords(&self, row: usize, col: usize) -> (f64, f64) {
        Self::coords_at(self.resolution, row, col)
    }

    /// True where the pixel lies inside the aperture.
    #[inline]
    pub fn inside(&self, row: usize, col: usize) -> bool {
        self.mask[row * self.resolution + col]
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn aperture_pixels(&self) -> usize {
        self.mask.iter().filter(|m| **m).count()
    }
}
