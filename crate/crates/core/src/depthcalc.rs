//! Depth of a subalgebra pair from its inclusion matrix alone.
//!
//! With `S = M Mᵗ`, the pair has depth `2m+1` when every zero of `S^m` is a
//! zero of `S^{m+1}`, and depth `2m` when every zero of `S^{m-1} M` is a zero
//! of `S^m M`. Any such support containment yields an inequality `X ≤ qY`;
//! the least `q` is reported alongside.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::NonNegIntMatrix;

pub const DEFAULT_CAP: u32 = 24;

/// First `(i, j)` with `Y(i,j) = 0 < X(i,j)`.
pub fn first_violation(x: &NonNegIntMatrix, y: &NonNegIntMatrix) -> Result<Option<(usize, usize)>> {
    x.same_shape(y)?;
    Ok(x.entries()
        .find(|&(i, j, v)| !v.is_zero() && y.get(i, j).is_zero())
        .map(|(i, j, _)| (i, j)))
}

/// `X ≤ nY` for some `n`, i.e. every zero of `Y` is a zero of `X`.
pub fn support_dominated(x: &NonNegIntMatrix, y: &NonNegIntMatrix) -> Result<bool> {
    Ok(first_violation(x, y)?.is_none())
}

/// Least `q` with `X ≤ qY`.
pub fn minimal_multiplier(x: &NonNegIntMatrix, y: &NonNegIntMatrix) -> Result<BigUint> {
    if let Some((row, col)) = first_violation(x, y)? {
        return Err(Error::NotDominated { row, col });
    }
    if x.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    Ok(x.entries()
        .filter(|&(i, j, _)| !y.get(i, j).is_zero())
        .map(|(i, j, v)| v.div_ceil(y.get(i, j)))
        .max()
        .expect("X is non-zero, so some Y entry is positive"))
}

pub fn s_matrix(m: &NonNegIntMatrix) -> NonNegIntMatrix {
    m.mul(&m.transpose()).expect("M times its transpose")
}

fn power_label(k: u32, with_m: bool) -> String {
    let s = match k {
        0 => String::new(),
        1 => "S".to_string(),
        _ => format!("S^{k}"),
    };
    match (s.is_empty(), with_m) {
        (true, true) => "M".to_string(),
        (true, false) => "I".to_string(),
        (false, true) => format!("{s} M"),
        (false, false) => s,
    }
}

/// Powers `S^k` and `S^k M`, computed once and extended on demand.
#[derive(Clone, Debug)]
pub struct DepthEngine {
    m: NonNegIntMatrix,
    s_powers: Vec<NonNegIntMatrix>,
    sm_powers: Vec<NonNegIntMatrix>,
}

/// Outcome of the depth-`n` test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthTest {
    pub depth: u32,
    pub holds: bool,
    /// `X ≤ qY` in words, e.g. `S^2 M <= q S M`.
    pub inequality: String,
    pub multiplier: Option<BigUint>,
    /// A coordinate with `Y = 0 < X` when the test fails.
    pub failure: Option<(usize, usize)>,
}

impl DepthEngine {
    pub fn new(m: &NonNegIntMatrix) -> Self {
        let s = s_matrix(m);
        Self {
            m: m.clone(),
            s_powers: vec![NonNegIntMatrix::identity(s.rows()), s],
            sm_powers: vec![m.clone()],
        }
    }

    pub fn inclusion(&self) -> &NonNegIntMatrix {
        &self.m
    }

    pub fn s(&self) -> &NonNegIntMatrix {
        &self.s_powers[1]
    }

    pub fn s_power(&mut self, k: u32) -> &NonNegIntMatrix {
        while self.s_powers.len() <= k as usize {
            let next = self
                .s_powers
                .last()
                .expect("non-empty")
                .mul(&self.s_powers[1])
                .expect("square");
            self.s_powers.push(next);
        }
        &self.s_powers[k as usize]
    }

    pub fn s_power_m(&mut self, k: u32) -> &NonNegIntMatrix {
        while self.sm_powers.len() <= k as usize {
            let next = self.s_powers[1]
                .mul(self.sm_powers.last().expect("non-empty"))
                .expect("S times M");
            self.sm_powers.push(next);
        }
        &self.sm_powers[k as usize]
    }

    /// The pair `(X, Y)` whose support containment defines depth `n`.
    pub fn sides(&mut self, n: u32) -> Result<(NonNegIntMatrix, NonNegIntMatrix, String)> {
        if n < 2 {
            return Err(Error::InvalidDepth(n));
        }
        let m = n / 2;
        Ok(if n % 2 == 1 {
            let x = self.s_power(m + 1).clone();
            let y = self.s_power(m).clone();
            (
                x,
                y,
                format!(
                    "{} <= q {}",
                    power_label(m + 1, false),
                    power_label(m, false)
                ),
            )
        } else {
            let x = self.s_power_m(m).clone();
            let y = self.s_power_m(m - 1).clone();
            (
                x,
                y,
                format!("{} <= q {}", power_label(m, true), power_label(m - 1, true)),
            )
        })
    }

    pub fn is_depth_n(&mut self, n: u32) -> Result<DepthTest> {
        let (x, y, inequality) = self.sides(n)?;
        let failure = first_violation(&x, &y)?;
        let multiplier = match failure {
            None if !x.is_zero() => Some(minimal_multiplier(&x, &y)?),
            _ => None,
        };
        Ok(DepthTest {
            depth: n,
            holds: failure.is_none(),
            inequality,
            multiplier,
            failure,
        })
    }

    pub fn minimal_depth(&mut self, cap: u32) -> Result<DepthReport> {
        if cap < 2 {
            return Err(Error::InvalidDepth(cap));
        }
        let mut failures = Vec::new();
        for n in 2..=cap {
            let t = self.is_depth_n(n)?;
            if t.holds {
                return Ok(DepthReport {
                    cap,
                    minimal_depth: Some(n),
                    witness: Some(t),
                    failures,
                });
            }
            let (row, col) = t.failure.expect("failed test has a coordinate");
            let (x, _, _) = self.sides(n)?;
            failures.push(DepthFailure {
                depth: n,
                row,
                col,
                lhs: x.get(row, col).clone(),
            });
        }
        Ok(DepthReport {
            cap,
            minimal_depth: None,
            witness: None,
            failures,
        })
    }
}

/// Coordinate where the depth-`depth` support test fails: the right side is
/// zero there and the left side is `lhs > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthFailure {
    pub depth: u32,
    pub row: usize,
    pub col: usize,
    pub lhs: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthReport {
    pub cap: u32,
    /// `None` when no depth up to `cap` holds.
    pub minimal_depth: Option<u32>,
    pub witness: Option<DepthTest>,
    pub failures: Vec<DepthFailure>,
}

impl DepthReport {
    pub fn exceeds_cap(&self) -> bool {
        self.minimal_depth.is_none()
    }

    /// Recomputes the witness inequality and every failure coordinate.
    pub fn verify(&self, m: &NonNegIntMatrix) -> Result<bool> {
        let mut engine = DepthEngine::new(m);
        if let Some(w) = &self.witness {
            let (x, y, _) = engine.sides(w.depth)?;
            if !support_dominated(&x, &y)? {
                return Ok(false);
            }
            if let Some(q) = &w.multiplier {
                let ok = x.entries().all(|(i, j, v)| *v <= q * y.get(i, j));
                if !ok || minimal_multiplier(&x, &y)? != *q {
                    return Ok(false);
                }
            }
        }
        for f in &self.failures {
            let (x, y, _) = engine.sides(f.depth)?;
            if x.get(f.row, f.col).is_zero()
                || !y.get(f.row, f.col).is_zero()
                || *x.get(f.row, f.col) != f.lhs
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "minimal_depth": self.minimal_depth,
            "exceeds_cap": self.exceeds_cap(),
            "cap": self.cap,
            "witness": self.witness.as_ref().map(|w| json!({
                "depth": w.depth,
                "inequality": w.inequality,
                "multiplier": w.multiplier.as_ref().map(crate::matrix::biguint_json),
            })),
            "failures": self.failures.iter().map(|f| json!({
                "depth": f.depth,
                "row": f.row,
                "col": f.col,
                "lhs": crate::matrix::biguint_json(&f.lhs),
                "rhs": 0,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.failures {
            out.push_str(&format!(
                "depth {}: fails at ({}, {}), left side {} over a zero\n",
                f.depth,
                f.row + 1,
                f.col + 1,
                f.lhs
            ));
        }
        match (&self.minimal_depth, &self.witness) {
            (Some(d), Some(w)) => {
                let q = w
                    .multiplier
                    .as_ref()
                    .map_or("-".to_string(), ToString::to_string);
                out.push_str(&format!(
                    "minimal depth: {d}\nwitness: {} with q = {q}\n",
                    w.inequality
                ));
            }
            _ => out.push_str(&format!("minimal depth: exceeds cap {}\n", self.cap)),
        }
        out
    }
}

pub fn is_depth_n(m: &NonNegIntMatrix, n: u32) -> Result<DepthTest> {
    DepthEngine::new(m).is_depth_n(n)
}

pub fn minimal_depth(m: &NonNegIntMatrix, cap: u32) -> Result<DepthReport> {
    DepthEngine::new(m).minimal_depth(cap)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerTest {
    pub holds: bool,
    pub multiplier: Option<BigUint>,
    pub failure: Option<(usize, usize)>,
}

/// `N M Mᵗ M ≤ q N M` for `C ⊆ B ⊆ A` with inclusion matrices `N` (C in B)
/// and `M` (B in A).
pub fn tower_is_d3(n: &NonNegIntMatrix, m: &NonNegIntMatrix) -> Result<TowerTest> {
    let nm = n.mul(m)?;
    let x = nm.mul(&m.transpose())?.mul(m)?;
    let failure = first_violation(&x, &nm)?;
    let multiplier = match failure {
        None if !x.is_zero() => Some(minimal_multiplier(&x, &nm)?),
        _ => None,
    };
    Ok(TowerTest {
        holds: failure.is_none(),
        multiplier,
        failure,
    })
}

/// Least `m ≤ max_m` with `S^m` free of zeros.
pub fn strictly_positive_power(s: &NonNegIntMatrix, max_m: u32) -> Result<Option<u32>> {
    if !s.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} is not square",
            s.rows(),
            s.cols()
        )));
    }
    let mut p = s.clone();
    for m in 1..=max_m {
        if p.is_strictly_positive() {
            return Ok(Some(m));
        }
        // only the support matters, so clamp entries to keep them small
        p = p.mul(s)?.map(|v| {
            if v.is_zero() {
                BigUint::zero()
            } else {
                BigUint::from(1u8)
            }
        });
    }
    Ok(None)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Bratteli diagram in Graphviz syntax: row nodes along the bottom, column
/// nodes along the top, `m_ij` parallel edges between row `i` and column `j`.
pub fn bratteli_dot(
    m: &NonNegIntMatrix,
    row_labels: &[String],
    col_labels: &[String],
) -> Result<String> {
    if row_labels.len() != m.rows() || col_labels.len() != m.cols() {
        return Err(Error::DimensionMismatch(format!(
            "{} row and {} column labels for a {}x{} matrix",
            row_labels.len(),
            col_labels.len(),
            m.rows(),
            m.cols()
        )));
    }
    let mut out = String::from("graph bratteli {\n  rankdir=BT;\n  node [shape=circle];\n");
    out.push_str("  { rank=same;");
    for (i, l) in row_labels.iter().enumerate() {
        out.push_str(&format!(" r{i} [label=\"{}\"];", dot_escape(l)));
    }
    out.push_str(" }\n  { rank=same;");
    for (j, l) in col_labels.iter().enumerate() {
        out.push_str(&format!(" c{j} [label=\"{}\"];", dot_escape(l)));
    }
    out.push_str(" }\n");
    for (i, j, v) in m.entries() {
        let mut k = BigUint::zero();
        while &k < v {
            out.push_str(&format!("  r{i} -- c{j};\n"));
            k += 1u8;
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u64]]) -> NonNegIntMatrix {
        NonNegIntMatrix::from_u64_rows(rows).unwrap()
    }

    #[test]
    fn labels() {
        assert_eq!(power_label(0, true), "M");
        assert_eq!(power_label(1, true), "S M");
        assert_eq!(power_label(3, false), "S^3");
    }

    #[test]
    fn multiplier_basics() {
        let s = m(&[&[2, 1], &[1, 2]]);
        let s3 = s.pow(3).unwrap();
        assert_eq!(minimal_multiplier(&s3, &s).unwrap(), BigUint::from(13u8));
        assert_eq!(minimal_multiplier(&s, &s).unwrap(), BigUint::from(1u8));
        let zero = m(&[&[0, 0], &[0, 0]]);
        assert!(support_dominated(&zero, &s).unwrap());
        assert!(matches!(
            minimal_multiplier(&zero, &s),
            Err(Error::ZeroMatrix)
        ));
        assert!(matches!(
            minimal_multiplier(&s, &zero),
            Err(Error::NotDominated { row: 0, col: 0 })
        ));
        assert!(support_dominated(&s, &m(&[&[1]])).is_err());
    }

    #[test]
    fn depth_one_rejected() {
        assert!(matches!(
            is_depth_n(&m(&[&[1]]), 1),
            Err(Error::InvalidDepth(1))
        ));
        assert!(minimal_depth(&m(&[&[1]]), 1).is_err());
    }

    #[test]
    fn dot_edges() {
        let dot = bratteli_dot(
            &m(&[&[1, 0, 1], &[0, 1, 1]]),
            &["ψ1".into(), "ψ2".into()],
            &["χ1".into(), "χ2".into(), "χ3".into()],
        )
        .unwrap();
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert!(!dot.contains("r0 -- c1"));
        assert!(bratteli_dot(&m(&[&[1]]), &[], &["a".into()]).is_err());
    }
}
