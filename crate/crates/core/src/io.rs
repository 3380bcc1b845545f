//! JSON matrix files with exact rational entries.
//!
//! A matrix is `{"rows":R,"cols":C,"entries":[["re","im"],...]}`, row-major, each part a
//! rational string `"p"` or `"p/q"`. The canonical form is the compact serialization
//! with reduced rationals followed by a newline.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{format_rational, parse_rational, GaussianRational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<[String; 2]>,
}

impl MatrixFile {
    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.entries.len() != self.rows * self.cols {
            return Err(Error::InvalidArgument(format!(
                "{} entries for a {}x{} matrix",
                self.entries.len(),
                self.rows,
                self.cols
            )));
        }
        let parse = |s: &str| {
            parse_rational(s).ok_or_else(|| Error::InvalidArgument(format!("bad rational `{s}`")))
        };
        let data = self
            .entries
            .iter()
            .map(|[re, im]| Ok(GaussianRational::new(parse(re)?, parse(im)?)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(self.rows, self.cols, data)
    }
}

impl From<&Matrix> for MatrixFile {
    fn from(m: &Matrix) -> Self {
        MatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            entries: m
                .entries()
                .iter()
                .map(|z| [format_rational(z.re()), format_rational(z.im())])
                .collect(),
        }
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixFile::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        MatrixFile::deserialize(d)?
            .to_matrix()
            .map_err(serde::de::Error::custom)
    }
}

/// Parses a matrix file.
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let file: MatrixFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidArgument(format!("matrix file: {e}")))?;
    file.to_matrix()
}

/// Canonical text of `m`.
pub fn serialize_matrix(m: &Matrix) -> String {
    let mut s = serde_json::to_string(&MatrixFile::from(m)).expect("plain data");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let text = "{\"rows\":1,\"cols\":2,\"entries\":[[\"1/2\",\"0\"],[\"-3\",\"2/3\"]]}\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(serialize_matrix(&m), text);
        assert_eq!(parse_matrix(&serialize_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn non_canonical_input_is_normalized() {
        let m = parse_matrix("{ \"rows\": 1, \"cols\": 1, \"entries\": [[\"2/4\", \"0/7\"]] }")
            .unwrap();
        assert_eq!(
            serialize_matrix(&m),
            "{\"rows\":1,\"cols\":1,\"entries\":[[\"1/2\",\"0\"]]}\n"
        );
    }

    #[test]
    fn rejects_bad_files() {
        assert!(parse_matrix("{\"rows\":1,\"cols\":1,\"entries\":[[\"1/0\",\"0\"]]}").is_err());
        assert!(parse_matrix("{\"rows\":1,\"cols\":2,\"entries\":[[\"1\",\"0\"]]}").is_err());
        assert!(parse_matrix("{\"rows\":1,\"cols\":1,\"entries\":[[\"1.5\",\"0\"]]}").is_err());
        assert!(parse_matrix("[1]").is_err());
    }
}
