//! Exact irreducible character tables.
//!
//! [`character_table`] is the production path (Dixon's modular method).
//! [`symmetric`] and [`float`] are independent oracles used to cross-check it.

mod dixon;
pub mod float;
pub(crate) mod modp;
pub mod symmetric;

use std::cmp::Reverse;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::permgroup::{ClassPartition, PermGroup};

pub use crate::CyclotomicInt;

/// A class function: one cyclotomic value per conjugacy class of a fixed group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    values: Vec<CyclotomicInt>,
}

impl ClassFunction {
    pub fn new(values: Vec<CyclotomicInt>) -> Self {
        Self { values }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Self {
            values: values
                .iter()
                .map(|&v| CyclotomicInt::from_integer(1, BigInt::from(v)))
                .collect(),
        }
    }

    pub fn zero(classes: usize) -> Self {
        Self {
            values: vec![CyclotomicInt::zero(1); classes],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[CyclotomicInt] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &CyclotomicInt {
        &self.values[class]
    }

    /// Value on the identity class, as an integer when rational.
    pub fn degree(&self) -> Option<BigInt> {
        self.values.first().and_then(Cyclotomic::as_rational)
    }

    /// Values as plain integers, when all are rational.
    pub fn as_integers(&self) -> Option<Vec<BigInt>> {
        self.values.iter().map(Cyclotomic::as_rational).collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::IndexMismatch(self.len(), other.len()));
        }
        Ok(Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            values: self.values.iter().map(|v| v.scale(k)).collect(),
        }
    }
}

/// Exact inner product `(1/|G|) Σ_C |C| α(C) conj(β(C))`.
pub fn inner_product(
    classes: &ClassPartition,
    alpha: &ClassFunction,
    beta: &ClassFunction,
) -> Result<BigRational> {
    if alpha.len() != classes.len() {
        return Err(Error::IndexMismatch(alpha.len(), classes.len()));
    }
    if beta.len() != classes.len() {
        return Err(Error::IndexMismatch(beta.len(), classes.len()));
    }
    let mut acc = CyclotomicInt::zero(1);
    let mut order = 0usize;
    for c in 0..classes.len() {
        let size = classes.size(c);
        order += size;
        let term = (alpha.value(c) * &beta.value(c).conj()).scale(&BigInt::from(size));
        acc = &acc + &term;
    }
    let total = acc
        .as_rational()
        .ok_or_else(|| Error::NotRational(acc.to_string()))?;
    Ok(BigRational::new(total, BigInt::from(order)))
}

/// Irreducible characters of a finite group, exact.
///
/// Columns follow the group's [`ClassPartition`]. Rows are sorted by degree;
/// the trivial character comes first and ties are broken by descending
/// lexicographic order of the value vectors.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: PermGroup,
    exponent: u64,
    prime: u64,
    rows: Vec<ClassFunction>,
    degrees: Vec<u64>,
}

/// Exact character table by Dixon's method.
pub fn character_table(g: &PermGroup) -> Result<CharacterTable> {
    let out = dixon::dixon(g)?;
    let mut rows: Vec<(u64, Vec<CyclotomicInt>)> = out.degrees.into_iter().zip(out.rows).collect();
    let one = CyclotomicInt::one(out.exponent);
    rows.sort_by(|a, b| {
        let trivial_a = a.1.iter().all(|v| *v == one);
        let trivial_b = b.1.iter().all(|v| *v == one);
        (a.0, !trivial_a, Reverse(&a.1)).cmp(&(b.0, !trivial_b, Reverse(&b.1)))
    });
    Ok(CharacterTable {
        group: g.clone(),
        exponent: out.exponent,
        prime: out.prime,
        degrees: rows.iter().map(|r| r.0).collect(),
        rows: rows.into_iter().map(|r| ClassFunction::new(r.1)).collect(),
    })
}

impl CharacterTable {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &ClassPartition {
        self.group
            .conjugacy_classes()
            .expect("classes were computed when the table was built")
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// The prime used for the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.rows
    }

    pub fn character(&self, i: usize) -> &ClassFunction {
        &self.rows[i]
    }

    pub fn value(&self, row: usize, class: usize) -> &CyclotomicInt {
        self.rows[row].value(class)
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().all(|r| r.as_integers().is_some())
    }

    /// `⟨χ_i, χ_j⟩ = δ_ij` for all rows.
    pub fn rows_orthonormal(&self) -> Result<bool> {
        let classes = self.classes();
        for i in 0..self.len() {
            for j in i..self.len() {
                let ip = inner_product(classes, &self.rows[i], &self.rows[j])?;
                let expected = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                if ip != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `Σ_χ χ(g_a) conj(χ(g_b)) = δ_ab |C_G(g_a)|`.
    pub fn columns_orthogonal(&self) -> Result<bool> {
        let classes = self.classes();
        let order = self.group.size()?;
        let r = classes.len();
        for a in 0..r {
            for b in a..r {
                let mut acc = CyclotomicInt::zero(1);
                for row in &self.rows {
                    acc = &acc + &(row.value(a) * &row.value(b).conj());
                }
                let expected = if a == b {
                    (order / classes.size(a)) as i64
                } else {
                    0
                };
                if acc.as_rational() != Some(BigInt::from(expected)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// JSON document `{order, exponent, class_sizes, class_reps, rows}`.
    /// Integer tables carry plain integers; otherwise each value is its
    /// coefficient vector on `1, ζ, …, ζ^{φ(e)-1}`.
    pub fn to_json(&self) -> Value {
        let classes = self.classes();
        let integral = self.is_integral();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Array(
                    row.values()
                        .iter()
                        .map(|v| {
                            if integral {
                                bigint_json(&v.as_rational().expect("integral"))
                            } else {
                                Value::Array(
                                    v.lift(self.exponent)
                                        .coefficients()
                                        .iter()
                                        .map(bigint_json)
                                        .collect(),
                                )
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        json!({
            "order": self.group.order().to_string().parse::<u64>().map(Value::from).unwrap_or_else(|_| Value::from(self.group.order().to_string())),
            "exponent": self.exponent,
            "class_sizes": classes.sizes(),
            "class_reps": classes.representatives().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "rows": rows,
        })
    }

    /// Aligned text rendering, one row per character.
    pub fn to_text(&self) -> String {
        let classes = self.classes();
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend(classes.representatives().iter().map(|p| p.to_string()));
        cells.push(header);
        let mut sizes = vec!["size".to_string()];
        sizes.extend(classes.sizes().iter().map(|s| s.to_string()));
        cells.push(sizes);
        for (i, row) in self.rows.iter().enumerate() {
            let mut line = vec![format!("X.{}", i + 1)];
            line.extend(row.values().iter().map(|v| v.to_string()));
            cells.push(line);
        }
        crate::text::align(&cells)
    }
}

pub(crate) fn bigint_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::from(v.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(
            n,
            gens.iter()
                .map(|s| Permutation::parse_cycles(s, n).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn int_rows(t: &CharacterTable) -> Vec<Vec<i64>> {
        t.rows()
            .iter()
            .map(|r| {
                r.as_integers()
                    .unwrap()
                    .iter()
                    .map(|v| v.to_i64().unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn s3_table() {
        let t = character_table(&grp(3, &["(1 2)", "(1 2 3)"])).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2]);
        assert_eq!(
            int_rows(&t),
            vec![vec![1, 1, 1], vec![1, -1, 1], vec![2, 0, -1]]
        );
    }

    #[test]
    fn c2_table() {
        let t = character_table(&grp(2, &["(1 2)"])).unwrap();
        assert_eq!(int_rows(&t), vec![vec![1, 1], vec![1, -1]]);
    }

    #[test]
    fn trivial_group_table() {
        let t = character_table(&PermGroup::trivial(1)).unwrap();
        assert_eq!(int_rows(&t), vec![vec![1]]);
    }

    #[test]
    fn s4_table() {
        let t = character_table(&grp(4, &["(1 2 3 4)", "(1 2)"])).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2, 3, 3]);
        assert!(t.rows_orthonormal().unwrap());
        assert!(t.columns_orthogonal().unwrap());
        // the standard representation comes before its sign twist
        assert_eq!(int_rows(&t)[3], vec![3, 1, -1, 0, -1]);
    }

    #[test]
    fn c3_has_irrational_values() {
        let t = character_table(&grp(3, &["(1 2 3)"])).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1]);
        assert!(!t.is_integral());
        assert!(t.rows_orthonormal().unwrap());
        assert!(t.columns_orthogonal().unwrap());
        assert_eq!(int_rows_opt(&t)[0], Some(vec![1, 1, 1]));
    }

    fn int_rows_opt(t: &CharacterTable) -> Vec<Option<Vec<i64>>> {
        t.rows()
            .iter()
            .map(|r| {
                r.as_integers()
                    .map(|v| v.iter().map(|x| x.to_i64().unwrap()).collect())
            })
            .collect()
    }

    #[test]
    fn orthogonality_on_assorted_groups() {
        let groups = [
            grp(4, &["(1 2 3 4)", "(1 3)"]),
            grp(4, &["(1 2 3)", "(1 2)(3 4)"]),
            grp(5, &["(1 2 3 4 5)", "(2 3 5 4)"]),
            grp(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]),
            grp(5, &["(1 2 3)", "(3 4 5)"]),
            grp(7, &["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"]),
            grp(6, &["(1 2 3 4 5 6)"]),
        ];
        for g in &groups {
            let t = character_table(g).unwrap();
            let order = g.size().unwrap() as u64;
            assert!(t.rows_orthonormal().unwrap(), "{g:?}");
            assert!(t.columns_orthogonal().unwrap(), "{g:?}");
            assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), order);
            assert!(t.degrees().iter().all(|d| order % d == 0));
            assert_eq!(t.degrees()[0], 1);
        }
    }

    #[test]
    fn json_document() {
        let t = character_table(&grp(3, &["(1 2)", "(1 2 3)"])).unwrap();
        let v = t.to_json();
        assert_eq!(v["order"], 6);
        assert_eq!(v["class_sizes"], json!([1, 3, 2]));
        assert_eq!(v["class_reps"], json!(["()", "(2 3)", "(1 2 3)"]));
        assert_eq!(v["rows"], json!([[1, 1, 1], [1, -1, 1], [2, 0, -1]]));
        let c3 = character_table(&grp(3, &["(1 2 3)"])).unwrap().to_json();
        assert_eq!(c3["rows"][0][1], json!([1, 0]));
    }
}
