//! Dense matrices over an arbitrary numeric type.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{Num, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Row-major dense matrix with at least one row and one column.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Num> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "empty {rows}x{cols} matrix"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Every entry non-zero.
    pub fn is_strictly_positive(&self) -> bool {
        self.data.iter().all(|x| !x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "power of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / cols, k % cols, v))
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: fmt::Display> Matrix<T> {
    /// Right-aligned rows, one per line.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .map(ToString::to_string)
                    .collect()
            })
            .collect();
        crate::text::align(&cells)
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_text().trim_end())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, v) in self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .enumerate()
            {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        f.write_str("]")
    }
}

pub type NonNegIntMatrix = Matrix<BigUint>;

impl NonNegIntMatrix {
    pub fn from_u64_rows(rows: &[&[u64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigUint::from(v)).collect())
                .collect(),
        )
    }

    /// Entries above `u64::MAX` are written as decimal strings.
    pub fn entries_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array(self.row(i).iter().map(biguint_json).collect()))
                .collect(),
        )
    }

    /// `{rows, cols, entries}`.
    pub fn to_json(&self) -> Value {
        json!({ "rows": self.rows, "cols": self.cols, "entries": self.entries_json() })
    }

    /// Accepts `{rows, cols, entries}`, `{entries}` or a bare array of rows.
    /// Entries are non-negative integers or decimal strings.
    pub fn from_json(v: &Value) -> Result<Self> {
        let entries = match v {
            Value::Array(_) => v,
            Value::Object(o) => o
                .get("entries")
                .ok_or_else(|| Error::Parse("matrix object has no \"entries\"".into()))?,
            _ => {
                return Err(Error::Parse(
                    "expected a matrix object or array of rows".into(),
                ))
            }
        };
        let rows = entries
            .as_array()
            .ok_or_else(|| Error::Parse("\"entries\" must be an array of rows".into()))?;
        let mut parsed = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Parse(format!("row {i} is not an array")))?;
            let mut out = Vec::with_capacity(row.len());
            for (j, x) in row.iter().enumerate() {
                out.push(parse_entry(x).ok_or_else(|| {
                    Error::Parse(format!(
                        "entry ({i},{j}) = {x} is not a non-negative integer"
                    ))
                })?);
            }
            parsed.push(out);
        }
        let m = Self::from_rows(parsed)?;
        if let Value::Object(o) = v {
            for (key, expected) in [("rows", m.rows), ("cols", m.cols)] {
                if let Some(given) = o.get(key) {
                    if given.as_u64() != Some(expected as u64) {
                        return Err(Error::DimensionMismatch(format!(
                            "\"{key}\" is {given} but entries have {expected}"
                        )));
                    }
                }
            }
        }
        Ok(m)
    }
}

fn parse_entry(x: &Value) -> Option<BigUint> {
    match x {
        Value::Number(n) => n.as_u64().map(BigUint::from),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

pub(crate) fn biguint_json(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(x) => Value::from(x),
        None => Value::from(v.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u64]]) -> NonNegIntMatrix {
        NonNegIntMatrix::from_u64_rows(rows).unwrap()
    }

    #[test]
    fn products_and_powers() {
        let s = m(&[&[2, 1], &[1, 2]]);
        assert_eq!(s.pow(3).unwrap(), m(&[&[14, 13], &[13, 14]]));
        assert_eq!(s.pow(0).unwrap(), NonNegIntMatrix::identity(2));
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(a.mul(&a.transpose()).unwrap(), s);
        assert!(a.mul(&a).is_err());
        assert!(a.pow(2).is_err());
    }

    #[test]
    fn shape_checks() {
        assert!(NonNegIntMatrix::from_rows(vec![]).is_err());
        assert!(NonNegIntMatrix::from_rows(vec![vec![BigUint::from(1u8)], vec![]]).is_err());
        assert!(NonNegIntMatrix::new(2, 2, vec![BigUint::zero(); 3]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        let v = a.to_json();
        assert_eq!(
            v,
            json!({"rows": 2, "cols": 3, "entries": [[1, 0, 1], [0, 1, 1]]})
        );
        assert_eq!(NonNegIntMatrix::from_json(&v).unwrap(), a);
        assert_eq!(
            NonNegIntMatrix::from_json(&json!([[1, 0, 1], [0, 1, 1]])).unwrap(),
            a
        );
        let huge = m(&[&[u64::MAX]]).pow(2).unwrap();
        let hv = huge.to_json();
        assert!(hv["entries"][0][0].is_string());
        assert_eq!(NonNegIntMatrix::from_json(&hv).unwrap(), huge);
        assert!(NonNegIntMatrix::from_json(&json!([[1, -1]])).is_err());
        assert!(NonNegIntMatrix::from_json(&json!([[1.5]])).is_err());
        assert!(NonNegIntMatrix::from_json(&json!({"rows": 3, "entries": [[1]]})).is_err());
    }

    #[test]
    fn text_layout() {
        assert_eq!(m(&[&[14, 1], &[3, 2]]).to_text(), "14  1\n 3  2\n");
    }
}
