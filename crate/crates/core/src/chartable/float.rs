//! Floating-point character tables, for cross-checking only.
//!
//! Structure constants give class-sum operators that are simultaneously
//! diagonalised by the central characters. After a similarity by
//! `diag(√|C_i|)` they are normal, so a random Hermitian combination has the
//! irreducible characters as eigenvectors with (generically) simple
//! eigenvalues.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CharacterTable;
use crate::error::{Error, Result};
use crate::permgroup::PermGroup;

pub const MAX_CLASSES: usize = 60;
const ATTEMPTS: u64 = 16;

#[derive(Clone, Debug)]
pub struct FloatTable {
    class_sizes: Vec<usize>,
    rows: Vec<Vec<Complex64>>,
}

/// `a[i][j][k]` = number of pairs `(x, y) ∈ C_i × C_j` with `xy = z_k`.
fn structure_constants(g: &PermGroup) -> Result<Vec<Vec<Vec<f64>>>> {
    let classes = g.conjugacy_classes()?;
    let elems = g.elements()?;
    let r = classes.len();
    let mut a = vec![vec![vec![0.0; r]; r]; r];
    for k in 0..r {
        let z = classes.representative(k);
        for (xi, x) in elems.iter().enumerate() {
            let y = &x.inverse() * z;
            let i = classes.class_of_index(xi);
            let j = classes.class_of_index(g.index_of(&y)?.expect("closed"));
            a[i][j][k] += 1.0;
        }
    }
    Ok(a)
}

pub fn character_table_float(g: &PermGroup) -> Result<FloatTable> {
    let classes = g.conjugacy_classes()?;
    let r = classes.len();
    if r > MAX_CLASSES {
        return Err(Error::OutOfRange(format!(
            "float oracle handles at most {MAX_CLASSES} classes, got {r}"
        )));
    }
    let order = g.size()? as f64;
    let sizes: Vec<f64> = classes.sizes().iter().map(|&s| s as f64).collect();
    let a = structure_constants(g)?;
    // t[j][i][k] = a_{jik} √(|C_k| / |C_i|)
    let t: Vec<DMatrix<f64>> = (0..r)
        .map(|j| DMatrix::from_fn(r, r, |i, k| a[j][i][k] * (sizes[k] / sizes[i]).sqrt()))
        .collect();

    for seed in 0..ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut re = DMatrix::<f64>::zeros(r, r);
        let mut im = DMatrix::<f64>::zeros(r, r);
        for tj in &t {
            let c: f64 = rng.random_range(-1.0..1.0);
            let d: f64 = rng.random_range(-1.0..1.0);
            let tt = tj.transpose();
            re += (tj + &tt) * c;
            im += (tj - &tt) * d;
        }
        let n = 2 * r;
        let big = DMatrix::from_fn(n, n, |p, q| match (p < r, q < r) {
            (true, true) => re[(p, q)],
            (true, false) => -im[(p, q - r)],
            (false, true) => im[(p - r, q)],
            (false, false) => re[(p - r, q - r)],
        });
        let eig = SymmetricEigen::new(big);
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&x, &y| eig.eigenvalues[x].total_cmp(&eig.eigenvalues[y]));
        let scale = eig.eigenvalues.amax().max(1.0);
        let separated = (0..r).all(|m| {
            let lo = eig.eigenvalues[idx[2 * m]];
            let hi = eig.eigenvalues[idx[2 * m + 1]];
            let paired = (hi - lo).abs() < 1e-8 * scale;
            let gap = m + 1 == r || eig.eigenvalues[idx[2 * m + 2]] - hi > 1e-4 * scale;
            paired && gap
        });
        if !separated {
            continue;
        }
        let mut rows = Vec::with_capacity(r);
        for m in 0..r {
            let col = eig.eigenvectors.column(idx[2 * m]);
            let v: Vec<Complex64> = (0..r).map(|k| Complex64::new(col[k], col[k + r])).collect();
            let omega: Vec<Complex64> = v.iter().zip(&sizes).map(|(vk, s)| vk * s.sqrt()).collect();
            let omega0 = omega[0];
            let omega: Vec<Complex64> = omega.iter().map(|w| w / omega0).collect();
            let norm: f64 = omega
                .iter()
                .zip(&sizes)
                .map(|(w, s)| w.norm_sqr() / s)
                .sum();
            let degree = (order / norm).sqrt();
            rows.push(
                omega
                    .iter()
                    .zip(&sizes)
                    .map(|(w, s)| w * degree / s)
                    .collect(),
            );
        }
        rows.sort_by(|x: &Vec<Complex64>, y: &Vec<Complex64>| x[0].re.total_cmp(&y[0].re));
        return Ok(FloatTable {
            class_sizes: classes.sizes(),
            rows,
        });
    }
    Err(Error::SplitFailure(format!(
        "no well-separated Hermitian combination after {ATTEMPTS} attempts"
    )))
}

impl FloatTable {
    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Rows in ascending order of degree.
    pub fn rows(&self) -> &[Vec<Complex64>] {
        &self.rows
    }

    pub fn rounded_degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r[0].re.round() as u64).collect()
    }

    /// Whether every row is within `tol` of a distinct row of `exact`,
    /// entrywise on the shared class ordering.
    pub fn matches(&self, exact: &CharacterTable, tol: f64) -> bool {
        if exact.len() != self.rows.len() || exact.classes().sizes() != self.class_sizes {
            return false;
        }
        let targets: Vec<Vec<Complex64>> = exact
            .rows()
            .iter()
            .map(|row| row.values().iter().map(|v| v.to_complex()).collect())
            .collect();
        let mut used = vec![false; targets.len()];
        for row in &self.rows {
            let hit = targets.iter().enumerate().position(|(i, t)| {
                !used[i] && t.iter().zip(row).all(|(a, b)| (a - b).norm() < tol)
            });
            match hit {
                Some(i) => used[i] = true,
                None => return false,
            }
        }
        true
    }
}
