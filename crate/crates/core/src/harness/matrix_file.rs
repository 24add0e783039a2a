//! Matrix files.
//!
//! JSON: `{"rows": n, "cols": n, "data": [[re, im], ...]}` with `data` in
//! row-major order. CSV: `n²` lines of `re,im`, row-major, no header.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::ComplexSquareMatrix;

#[derive(Debug, Error)]
pub enum MatrixFileError {
    #[error("i/o error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON matrix: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid CSV matrix: {0}")]
    Csv(#[from] csv::Error),
    #[error("invalid matrix file: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    Json,
    Csv,
}

impl MatrixFormat {
    /// `.csv` selects CSV; anything else is JSON.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => MatrixFormat::Csv,
            _ => MatrixFormat::Json,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<[f64; 2]>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ComplexSquareMatrix) -> Self {
        let n = m.dim();
        Self { rows: n, cols: n, data: m.to_row_major().into_iter().map(|z| [z.re, z.im]).collect() }
    }

    pub fn validate(&self) -> Result<(), MatrixFileError> {
        if self.rows != self.cols {
            return Err(MatrixFileError::Invalid(format!("matrix must be square, got {}x{}", self.rows, self.cols)));
        }
        if self.rows == 0 {
            return Err(MatrixFileError::Invalid("matrix must be non-empty".into()));
        }
        if self.data.len() != self.rows * self.cols {
            return Err(MatrixFileError::Invalid(format!(
                "expected {} entries, found {}",
                self.rows * self.cols,
                self.data.len()
            )));
        }
        if self.data.iter().flatten().any(|x| !x.is_finite()) {
            return Err(MatrixFileError::Invalid("entries must be finite".into()));
        }
        Ok(())
    }

    pub fn to_matrix(&self) -> Result<ComplexSquareMatrix, MatrixFileError> {
        self.validate()?;
        let entries: Vec<Complex64> = self.data.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        ComplexSquareMatrix::from_row_slice(self.rows, &entries).map_err(|e| MatrixFileError::Invalid(e.to_string()))
    }

    pub fn parse_json(text: &str) -> Result<Self, MatrixFileError> {
        let file: MatrixFile = serde_json::from_str(text)?;
        file.validate()?;
        Ok(file)
    }

    pub fn parse_csv(text: &str) -> Result<Self, MatrixFileError> {
        let mut reader = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(text.as_bytes());
        let mut data = Vec::new();
        for record in reader.deserialize::<(f64, f64)>() {
            let (re, im) = record?;
            data.push([re, im]);
        }
        let n = (data.len() as f64).sqrt().round() as usize;
        if n * n != data.len() {
            return Err(MatrixFileError::Invalid(format!("{} entries is not a perfect square", data.len())));
        }
        let file = Self { rows: n, cols: n, data };
        file.validate()?;
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix files always serialize")
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
        for &[re, im] in &self.data {
            writer.serialize((re, im)).expect("writing to memory");
        }
        String::from_utf8(writer.into_inner().expect("flush to memory")).expect("csv output is UTF-8")
    }

    pub fn read(path: &Path) -> Result<Self, MatrixFileError> {
        let text = fs::read_to_string(path)
            .map_err(|source| MatrixFileError::Io { path: path.display().to_string(), source })?;
        match MatrixFormat::from_path(path) {
            MatrixFormat::Csv => Self::parse_csv(&text),
            MatrixFormat::Json => Self::parse_json(&text),
        }
    }

    pub fn write(&self, path: &Path) -> Result<(), MatrixFileError> {
        let text = match MatrixFormat::from_path(path) {
            MatrixFormat::Csv => self.to_csv(),
            MatrixFormat::Json => self.to_json(),
        };
        fs::write(path, text).map_err(|source| MatrixFileError::Io { path: path.display().to_string(), source })
    }
}

/// Reads and converts in one step.
pub fn read_matrix(path: &Path) -> Result<ComplexSquareMatrix, MatrixFileError> {
    MatrixFile::read(path)?.to_matrix()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_json() {
        let f = MatrixFile::parse_json(r#"{"rows": 2, "cols": 2, "data": [[1, 2], [3, 0], [-3, 0], [0, 4]]}"#).unwrap();
        let m = f.to_matrix().unwrap();
        assert_eq!(m.get(0, 0), Complex64::new(1.0, 2.0));
        assert_eq!(m.get(1, 0), Complex64::new(-3.0, 0.0));
    }

    #[test]
    fn parses_csv() {
        let f = MatrixFile::parse_csv("1,2\n3,0\n-3, 0\n0,4\n").unwrap();
        assert_eq!(f.rows, 2);
        assert_eq!(f.data[2], [-3.0, 0.0]);
        assert_eq!(MatrixFile::parse_csv(&f.to_csv()).unwrap(), f);
    }

    #[test]
    fn rejects_malformed() {
        assert!(MatrixFile::parse_json(r#"{"rows": 2, "cols": 3, "data": []}"#).is_err());
        assert!(MatrixFile::parse_json(r#"{"rows": 2, "cols": 2, "data": [[1, 0]]}"#).is_err());
        assert!(MatrixFile::parse_json(r#"{"rows": 1, "cols": 1}"#).is_err());
        assert!(MatrixFile::parse_csv("1,0\n2,0\n3,0\n").is_err());
        assert!(MatrixFile::parse_csv("1,x\n").is_err());
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let m = ComplexSquareMatrix::from_parts(2, &[0.1, 1.0 / 3.0, 2.5, -7.0], &[1e-300, 0.0, -0.7, 3.0]).unwrap();
        for name in ["m.json", "m.csv"] {
            let path = dir.path().join(name);
            MatrixFile::from_matrix(&m).write(&path).unwrap();
            assert_eq!(read_matrix(&path).unwrap(), m, "{name}");
        }
    }
}
