//! Characters of symmetric groups by the Murnaghan–Nakayama rule.
//!
//! Independent of the group machinery: rows are partitions, columns are cycle
//! types, values come from rim-hook removal on beta-sets.

use num_traits::ToPrimitive;

use super::CharacterTable;
use crate::error::{Error, Result};

pub const MAX_N: usize = 8;

/// Integer character table of `S_n` indexed by partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricTable {
    partitions: Vec<Vec<usize>>,
    cycle_types: Vec<Vec<usize>>,
    values: Vec<Vec<i64>>,
}

/// Partitions of `n`, non-increasing parts, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `χ^λ(μ)` for partitions `λ`, `μ` of the same size.
pub fn mn_character(lambda: &[usize], mu: &[usize]) -> i64 {
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut parts = mu.to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    remove_hooks(&beta, &parts)
}

fn remove_hooks(beta: &[usize], parts: &[usize]) -> i64 {
    let Some((&k, rest)) = parts.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next[idx] = target;
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * remove_hooks(&next, rest);
    }
    total
}

/// `n! / Π hook lengths`.
pub fn hook_length_degree(lambda: &[usize]) -> u64 {
    let n: usize = lambda.iter().sum();
    let mut num: u64 = (1..=n as u64).product();
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = lambda[i + 1..].iter().filter(|&&r| r > j).count();
            num /= (arm + leg + 1) as u64;
        }
    }
    num
}

pub fn character_table_sn(n: usize) -> Result<SymmetricTable> {
    if !(1..=MAX_N).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "symmetric oracle needs 1 ≤ n ≤ {MAX_N}, got {n}"
        )));
    }
    let partitions = partitions(n);
    let cycle_types: Vec<Vec<usize>> = partitions.iter().rev().cloned().collect();
    let values = partitions
        .iter()
        .map(|l| cycle_types.iter().map(|m| mn_character(l, m)).collect())
        .collect();
    Ok(SymmetricTable {
        partitions,
        cycle_types,
        values,
    })
}

impl SymmetricTable {
    /// Row labels, starting with the trivial character `(n)`.
    pub fn partitions(&self) -> &[Vec<usize>] {
        &self.partitions
    }

    /// Column labels, starting with the identity `1^n`.
    pub fn cycle_types(&self) -> &[Vec<usize>] {
        &self.cycle_types
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn row(&self, lambda: &[usize]) -> Option<&[i64]> {
        self.partitions
            .iter()
            .position(|p| p == lambda)
            .map(|i| self.values[i].as_slice())
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.values.iter().map(|r| r[0] as u64).collect()
    }

    /// Whether `table` (of a symmetric group on `n` points) has the same rows
    /// up to permutation, once its classes are matched by cycle type.
    pub fn agrees_with(&self, table: &CharacterTable) -> bool {
        let classes = table.classes();
        let n: usize = self.partitions[0].iter().sum();
        if classes.len() != self.partitions.len() || table.group().degree() != n {
            return false;
        }
        let mut column = Vec::with_capacity(classes.len());
        for rep in classes.representatives() {
            match self.cycle_types.iter().position(|p| *p == rep.cycle_type()) {
                Some(c) => column.push(c),
                None => return false,
            }
        }
        let mut theirs = Vec::with_capacity(table.len());
        for row in table.rows() {
            let Some(ints) = row.as_integers() else {
                return false;
            };
            let mut v = vec![0i64; ints.len()];
            for (x, &c) in ints.iter().zip(&column) {
                match x.to_i64() {
                    Some(x) => v[c] = x,
                    None => return false,
                }
            }
            theirs.push(v);
        }
        let mut ours = self.values.clone();
        ours.sort();
        theirs.sort();
        ours == theirs
    }
}
