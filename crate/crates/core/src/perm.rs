//! Permutations of `{0, …, n-1}` and disjoint-cycle notation.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A permutation stored as its image array.
///
/// Products act on the left: `(a * b)(x) = a(b(x))`, so `b` is applied first.
/// The derived ordering is lexicographic on the image array, which is the
/// canonical element order used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::Parse(format!(
                    "image array {images:?} is not a bijection of 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::Parse(format!(
                        "point {} exceeds degree {degree}",
                        p + 1
                    )));
                }
                if used[p] {
                    return Err(Error::Parse(format!("point {} repeated", p + 1)));
                }
                used[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Self { images })
    }

    /// Parses 1-based disjoint-cycle notation such as `"(1 2 3)(4 5)"`.
    ///
    /// Points may be separated by spaces or commas; `"()"` and the empty
    /// string denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(inner) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected '(' in {text:?}")));
            };
            let Some(close) = inner.find(')') else {
                return Err(Error::Parse(format!("unbalanced parenthesis in {text:?}")));
            };
            let body = &inner[..close];
            if body.contains('(') {
                return Err(Error::Parse(format!("nested parenthesis in {text:?}")));
            }
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {tok:?} in {text:?}")))?;
                if p == 0 {
                    return Err(Error::Parse("points are 1-based".into()));
                }
                cycle.push(p - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = inner[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &p)| i == p as usize)
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Self {
            images: other
                .images
                .iter()
                .map(|&p| self.images[p as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as u32;
        }
        Self { images }
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        // (g s g⁻¹)(g(i)) = g(s(i))
        let mut images = vec![0; self.images.len()];
        for (i, &s) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[s as usize];
        }
        Self { images }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Non-trivial cycles, each starting at its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Least point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &p)| *i != p as usize)
            .map(|(i, _)| i)
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn pad(&self, degree: usize) -> Result<Self> {
        if degree < self.degree() {
            if self.images[degree..]
                .iter()
                .enumerate()
                .all(|(k, &p)| p as usize == degree + k)
            {
                return Ok(Self {
                    images: self.images[..degree].to_vec(),
                });
            }
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: self.degree(),
            });
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Ok(Self { images })
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

/// 1-based disjoint-cycle notation; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_transposition() {
        let p = Permutation::parse_cycles("(1 2)", 3).unwrap();
        assert_eq!(p.images(), &[1, 0, 2]);
    }

    #[test]
    fn parse_identity() {
        let p = Permutation::parse_cycles("()", 4).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.degree(), 4);
        assert!(Permutation::parse_cycles("", 2).unwrap().is_identity());
    }

    #[test]
    fn parse_two_cycles() {
        let p = Permutation::parse_cycles("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
    }

    #[test]
    fn parse_errors() {
        assert!(Permutation::parse_cycles("(1 2", 3).is_err());
        assert!(Permutation::parse_cycles("1 2)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycles("(0 1)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 x)", 3).is_err());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::parse_cycles("(1 2)", 3).unwrap();
        let b = Permutation::parse_cycles("(2 3)", 3).unwrap();
        // 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
        assert_eq!((&a * &b).to_string(), "(1 2 3)");
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let s = Permutation::parse_cycles("(1 2)", 4).unwrap();
        let g = Permutation::parse_cycles("(2 3 4)", 4).unwrap();
        assert_eq!(s.conjugate_by(&g), &(&g * &s) * &g.inverse());
        assert_eq!(s.conjugate_by(&g).to_string(), "(1 3)");
    }

    #[test]
    fn cycle_type_and_order() {
        let p = Permutation::parse_cycles("(1 2 3)(4 5)", 6).unwrap();
        assert_eq!(p.cycle_type(), vec![3, 2, 1]);
        assert_eq!(p.order(), 6);
        assert!(!p.is_even());
        assert!(p.pow(6).is_identity());
    }

    #[test]
    fn pad_and_shrink() {
        let p = Permutation::parse_cycles("(1 2)", 2).unwrap();
        let q = p.pad(4).unwrap();
        assert_eq!(q.images(), &[1, 0, 2, 3]);
        assert_eq!(q.pad(2).unwrap(), p);
        assert!(Permutation::parse_cycles("(3 4)", 4)
            .unwrap()
            .pad(2)
            .is_err());
    }
}
