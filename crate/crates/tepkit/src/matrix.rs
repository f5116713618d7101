//! Dense complex matrices and the tolerance policy shared by every predicate.
//!
//! `CMatrix` is an immutable row-major matrix over `Complex64`. All arithmetic
//! returns fresh values; shape mismatches in operator position are programmer
//! errors and panic, while the user-facing comparison entry points return
//! `Result` so contract violations surface as errors rather than `false`.

use std::fmt;
use std::ops::{Add, Index, Mul, Sub};

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense complex matrix, row-major storage.
///
/// Zero-dimensional matrices (0 rows or 0 columns) are representable so that
/// block partitions with empty blocks stay well-defined; the JSON wire format
/// used by the CLI only accepts nonempty matrices.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    /// Builds a matrix from row-major data, validating length and finiteness.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::BadDataLength {
                rows,
                cols,
                len: data.len(),
            });
        }
        for (k, z) in data.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite {
                    row: if cols > 0 { k / cols } else { 0 },
                    col: if cols > 0 { k % cols } else { 0 },
                });
            }
        }
        Ok(CMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn diag_real(values: &[f64]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m.data[i * n + i] = Complex64::new(v, 0.0);
        }
        m
    }

    pub fn diag_complex(values: &[Complex64]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m.data[i * n + i] = v;
        }
        m
    }

    /// Convenience constructor for real-valued test matrices.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| Complex64::new(x, 0.0)));
        }
        CMatrix { rows: r, cols: c, data }
    }

    pub(crate) fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.data[i * self.cols + j] = z;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn conj_transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    pub fn fro_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, c: Complex64) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    /// Copies the half-open block `[r0, r1) x [c0, c1)`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> CMatrix {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols);
        CMatrix::from_fn(r1 - r0, c1 - c0, |i, j| self.at(r0 + i, c0 + j))
    }

    /// Writes `block` into `self` with its top-left corner at `(i0, j0)`.
    pub fn place(&mut self, i0: usize, j0: usize, block: &CMatrix) {
        assert!(i0 + block.rows <= self.rows && j0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(i0 + i, j0 + j, block.at(i, j));
            }
        }
    }

    /// Horizontal concatenation `[self other]`.
    pub fn hcat(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.rows, other.rows, "hcat: row count mismatch");
        let mut out = CMatrix::zeros(self.rows, self.cols + other.cols);
        out.place(0, 0, self);
        out.place(0, self.cols, other);
        out
    }

    /// Embeds `self` as the leading block of an `rows x cols` zero matrix.
    pub fn pad_to(&self, rows: usize, cols: usize) -> CMatrix {
        let mut out = CMatrix::zeros(rows, cols);
        out.place(0, 0, self);
        out
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self.at(i, j);
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.shape(), rhs.shape(), "add: shape mismatch");
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.shape(), rhs.shape(), "sub: shape mismatch");
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "mul: inner dimension mismatch");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.at(i, k);
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.at(i, j) + aik * rhs.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixWire {
    rows: usize,
    cols: usize,
    data: Vec<[f64; 2]>,
}

impl Serialize for CMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = MatrixWire {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| [z.re, z.im]).collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = MatrixWire::deserialize(deserializer)?;
        let data = wire
            .data
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        CMatrix::new(wire.rows, wire.cols, data).map_err(D::Error::custom)
    }
}

/// Comparison policy: a relative cutoff for numerical rank plus the absolute
/// floor and relative factor used by every matrix-equality residual test.
///
/// The stated defaults are `eq_atol = 1e-12`, `eq_rtol = 1e-10`, and
/// `rank_rtol = max(rows, cols) * eps` for a known shape (`for_dims`). The
/// shape-free `Default` uses `64 * eps`, which dominates the per-shape value
/// at desk scale (dimensions <= 64).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Tolerance {
    pub rank_rtol: f64,
    pub eq_atol: f64,
    pub eq_rtol: f64,
}

impl Tolerance {
    pub const DEFAULT_EQ_ATOL: f64 = 1e-12;
    pub const DEFAULT_EQ_RTOL: f64 = 1e-10;

    pub fn for_dims(rows: usize, cols: usize) -> Self {
        Tolerance {
            rank_rtol: rows.max(cols) as f64 * f64::EPSILON,
            eq_atol: Self::DEFAULT_EQ_ATOL,
            eq_rtol: Self::DEFAULT_EQ_RTOL,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("rank_rtol", self.rank_rtol),
            ("eq_atol", self.eq_atol),
            ("eq_rtol", self.eq_rtol),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::BadTolerance {
                    reason: format!("{name} must be finite and nonnegative, got {v}"),
                });
            }
        }
        Ok(())
    }

    /// Threshold for an equality residual between operands of the given norms.
    pub fn eq_threshold(&self, scale: f64) -> f64 {
        self.eq_atol + self.eq_rtol * scale
    }

    pub(crate) fn eq_ok(&self, residual: f64, scale: f64) -> bool {
        residual <= self.eq_threshold(scale)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rank_rtol: 64.0 * f64::EPSILON,
            eq_atol: Self::DEFAULT_EQ_ATOL,
            eq_rtol: Self::DEFAULT_EQ_RTOL,
        }
    }
}

pub(crate) fn check_same_shape(op: &'static str, a: &CMatrix, b: &CMatrix) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch {
            op,
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        });
    }
    Ok(())
}

/// Frobenius-norm equality test: `||a - b|| <= eq_atol + eq_rtol * max(||a||, ||b||)`.
///
/// A shape mismatch is a contract violation and reported as an error, never
/// as `false`.
pub fn approx_eq(a: &CMatrix, b: &CMatrix, tol: &Tolerance) -> Result<bool> {
    check_same_shape("approx_eq", a, b)?;
    let residual = (a - b).fro_norm();
    Ok(tol.eq_ok(residual, a.fro_norm().max(b.fro_norm())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conj_transpose_of_e2_matrix() {
        let a = CMatrix::from_real_rows(&[&[0., 1., 1.], &[0., 0., 0.], &[0., 1., 1.]]);
        let expect = CMatrix::from_real_rows(&[&[0., 0., 0.], &[1., 0., 1.], &[1., 0., 1.]]);
        assert_eq!(a.conj_transpose(), expect);
    }

    #[test]
    fn conj_transpose_fixed_points_and_scalars() {
        let id = CMatrix::identity(3);
        assert_eq!(id.conj_transpose(), id);
        let i = CMatrix::new(1, 1, vec![Complex64::new(0.0, 1.0)]).unwrap();
        assert_eq!(i.conj_transpose().at(0, 0), Complex64::new(0.0, -1.0));
    }

    #[test]
    fn conj_transpose_is_bit_exact_involution() {
        let a = CMatrix::from_fn(4, 3, |i, j| Complex64::new(i as f64 * 0.3 - 1.0, j as f64 * 0.7));
        assert_eq!(a.conj_transpose().conj_transpose(), a);
    }

    #[test]
    fn approx_eq_basics() {
        let tol = Tolerance::default();
        let a = CMatrix::from_real_rows(&[&[1., 2.], &[3., 4.]]);
        assert!(approx_eq(&a, &a, &tol).unwrap());

        let mut nearly_zero = CMatrix::zeros(3, 3);
        nearly_zero.set(1, 2, Complex64::new(1e-13, 0.0));
        assert!(approx_eq(&CMatrix::zeros(3, 3), &nearly_zero, &tol).unwrap());

        let id = CMatrix::identity(2);
        let twice = id.scale(Complex64::new(2.0, 0.0));
        assert!(!approx_eq(&id, &twice, &tol).unwrap());
    }

    #[test]
    fn approx_eq_shape_mismatch_is_error() {
        let tol = Tolerance::default();
        let a = CMatrix::zeros(2, 2);
        let b = CMatrix::zeros(2, 3);
        assert!(matches!(
            approx_eq(&a, &b, &tol),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn new_rejects_bad_data() {
        assert!(matches!(
            CMatrix::new(2, 2, vec![Complex64::new(1.0, 0.0); 3]),
            Err(Error::BadDataLength { .. })
        ));
        assert!(matches!(
            CMatrix::new(1, 2, vec![Complex64::new(f64::NAN, 0.0), Complex64::new(0.0, 0.0)]),
            Err(Error::NonFinite { row: 0, col: 0 })
        ));
    }

    #[test]
    fn json_round_trip() {
        let a = CMatrix::from_fn(2, 3, |i, j| Complex64::new(i as f64, j as f64 - 1.0));
        let s = serde_json::to_string(&a).unwrap();
        let b: CMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        assert!(s.contains("\"rows\":2") && s.contains("\"cols\":3"));
    }

    #[test]
    fn fro_norm_matches_adjoint_norm() {
        let a = CMatrix::from_fn(3, 5, |i, j| Complex64::new(0.1 * i as f64, -0.2 * j as f64));
        assert!((a.fro_norm() - a.conj_transpose().fro_norm()).abs() <= 1e-12);
    }
}
