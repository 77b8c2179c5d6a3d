//! Dense 3x3 real matrices, the weights carried by groupoid arrows.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default threshold on `|det|` below which a matrix is treated as singular.
pub const SINGULAR_THRESHOLD: f64 = 1e-12;

/// A row-major 3x3 matrix of `f64`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 9]", from = "[f64; 9]")]
pub struct Mat3(pub [[f64; 3]; 3]);

impl Mat3 {
    pub const fn zero() -> Mat3 {
        Mat3([[0.0; 3]; 3])
    }

    pub const fn identity() -> Mat3 {
        Mat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    pub const fn diag(a: f64, b: f64, c: f64) -> Mat3 {
        Mat3([[a, 0.0, 0.0], [0.0, b, 0.0], [0.0, 0.0, c]])
    }

    /// Rotation by `degrees` about the z axis.
    pub fn rotation_z(degrees: f64) -> Mat3 {
        // exact values at quarter turns so that cyclic groups close without drift
        let (s, c) = match degrees.rem_euclid(360.0) {
            0.0 => (0.0, 1.0),
            90.0 => (1.0, 0.0),
            180.0 => (0.0, -1.0),
            270.0 => (-1.0, 0.0),
            d => d.to_radians().sin_cos(),
        };
        Mat3([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn from_row_major(values: [f64; 9]) -> Mat3 {
        Mat3([
            [values[0], values[1], values[2]],
            [values[3], values[4], values[5]],
            [values[6], values[7], values[8]],
        ])
    }

    pub fn to_row_major(&self) -> [f64; 9] {
        let m = &self.0;
        [
            m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2],
        ]
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[2][1] * m[1][2]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn transpose(&self) -> Mat3 {
        let m = &self.0;
        Mat3([
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ])
    }

    pub fn is_invertible(&self) -> bool {
        self.determinant().abs() > SINGULAR_THRESHOLD
    }

    /// Inverse through the adjugate. Fails when `|det|` is at or below
    /// [`SINGULAR_THRESHOLD`].
    pub fn inverse(&self) -> Result<Mat3> {
        let det = self.determinant();
        if det.abs() <= SINGULAR_THRESHOLD || !det.is_finite() {
            return Err(Error::Singular { det });
        }
        Ok(self.adjugate_inverse(det))
    }

    /// Inverse without the singularity threshold; `None` only for an exactly
    /// zero or non-finite determinant. Used on accumulated products, whose
    /// determinant may legitimately drift below the threshold.
    pub fn try_inverse(&self) -> Option<Mat3> {
        let det = self.determinant();
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        Some(self.adjugate_inverse(det)).filter(Mat3::is_finite)
    }

    fn adjugate_inverse(&self, det: f64) -> Mat3 {
        let m = &self.0;
        let inv_det = 1.0 / det;
        let mut out = Mat3::zero();
        out.0[0][0] = (m[1][1] * m[2][2] - m[2][1] * m[1][2]) * inv_det;
        out.0[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) * inv_det;
        out.0[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) * inv_det;
        out.0[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) * inv_det;
        out.0[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) * inv_det;
        out.0[1][2] = (m[1][0] * m[0][2] - m[0][0] * m[1][2]) * inv_det;
        out.0[2][0] = (m[1][0] * m[2][1] - m[2][0] * m[1][1]) * inv_det;
        out.0[2][1] = (m[2][0] * m[0][1] - m[0][0] * m[2][1]) * inv_det;
        out.0[2][2] = (m[0][0] * m[1][1] - m[1][0] * m[0][1]) * inv_det;
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn scale(&self, factor: f64) -> Mat3 {
        let mut out = *self;
        out.0.iter_mut().flatten().for_each(|x| *x *= factor);
        out
    }

    pub fn sub(&self, other: &Mat3) -> Mat3 {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().flatten().zip(other.0.iter().flatten()) {
            *a -= b;
        }
        out
    }

    /// Relative Frobenius distance `|a - b| / max(|a|, |b|)`; zero when both
    /// matrices vanish.
    pub fn relative_distance(&self, other: &Mat3) -> f64 {
        let scale = self.frobenius_norm().max(other.frobenius_norm());
        if scale == 0.0 {
            return 0.0;
        }
        self.sub(other).frobenius_norm() / scale
    }

    pub fn approx_eq(&self, other: &Mat3, tol: f64) -> bool {
        self.relative_distance(other) <= tol
    }

    /// `|self - I|_F / sqrt(3)`, the distance from the identity relative to
    /// the identity's own norm.
    pub fn identity_deviation(&self) -> f64 {
        self.sub(&Mat3::identity()).frobenius_norm() / 3f64.sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_finite())
    }
}

impl Default for Mat3 {
    fn default() -> Mat3 {
        Mat3::identity()
    }
}

impl From<[f64; 9]> for Mat3 {
    fn from(values: [f64; 9]) -> Mat3 {
        Mat3::from_row_major(values)
    }
}

impl From<Mat3> for [f64; 9] {
    fn from(m: Mat3) -> [f64; 9] {
        m.to_row_major()
    }
}

impl Index<(usize, usize)> for Mat3 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat3 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.0[i][j]
    }
}

impl Mul<Mat3> for Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: Mat3) -> Mat3 {
        &self * &rhs
    }
}

impl Mul<&Mat3> for &Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: &Mat3) -> Mat3 {
        let mut out = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = (0..3).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        out
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| format!("[{}, {}, {}]", r[0], r[1], r[2]))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
