//! Matrix file format and JSON serialization helpers.
//!
//! A matrix travels as `{"dim": n, "re": [[..]], "im": [[..]]}` with
//! row-major n x n blocks of real and imaginary parts. Hermiticity,
//! trace and positivity checks are applied when a file is lifted into
//! one of the domain types, with the same tolerances the constructors
//! use everywhere else.

use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix, Observable};

/// On-disk matrix representation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        let n = m.dim();
        let row = |part: fn(Complex64) -> f64| -> Vec<Vec<f64>> {
            (0..n)
                .map(|i| (0..n).map(|j| part(m.get(i, j))).collect())
                .collect()
        };
        Self {
            dim: n,
            re: row(|z| z.re),
            im: row(|z| z.im),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        let n = self.dim;
        let shape_ok = |block: &Vec<Vec<f64>>| block.len() == n && block.iter().all(|r| r.len() == n);
        if !shape_ok(&self.re) || !shape_ok(&self.im) {
            return Err(Error::invalid(
                "matrix",
                format!("re/im blocks must both be {n}x{n}"),
            ));
        }
        let m = ComplexMatrix::from_fn(n, |i, j| Complex64::new(self.re[i][j], self.im[i][j]));
        if !m.is_finite() {
            return Err(Error::NonFiniteEntries);
        }
        Ok(m)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|e| Error::MalformedFile {
            path: path.display().to_string(),
            reason: e.to_string(),
        })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let mut text = to_json_string(self);
        text.push('\n');
        std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })
    }
}

/// Load a Hermitian observable from a matrix file.
pub fn load_observable(path: impl AsRef<Path>) -> Result<Observable> {
    Observable::new(MatrixFile::load(path)?.to_matrix()?)
}

/// Load a density matrix from a matrix file, enforcing unit trace and
/// the eigenvalue floor.
pub fn load_density(path: impl AsRef<Path>, eigen_floor: f64) -> Result<DensityMatrix> {
    DensityMatrix::with_floor(MatrixFile::load(path)?.to_matrix()?, eigen_floor)
}

/// serde_json formatter that writes every float with 17 significant
/// digits, which round-trips f64 exactly and keeps emitted reports
/// byte-stable across runs.
struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serialize to JSON with 17-significant-digit floats.
pub fn to_json_string(value: &impl Serialize) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SciFormatter);
    value
        .serialize(&mut ser)
        .expect("in-memory JSON serialization cannot fail");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// Format one float the same way the JSON and CSV emitters do.
pub fn format_f64(value: f64) -> String {
    format!("{value:.16e}")
}
