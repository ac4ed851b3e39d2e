//! Named permutation groups and a small text syntax for groups.
//!
//! Accepted forms: `S<n>`, `A<n>`, `C<n>`, `D<n>` (dihedral of order `2n`),
//! `F20`, `V4`, `Q8`, or an explicit generator list such as
//! `deg=4;gens=(1 2 3 4),(1 3)`. The `deg=` part is optional; without it the
//! degree is the largest point mentioned.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

fn cycle(degree: usize, points: &[usize]) -> Permutation {
    Permutation::from_cycles(degree, &[points.iter().map(|p| p - 1).collect()])
        .expect("valid cycle")
}

fn cycles(degree: usize, cs: &[&[usize]]) -> Permutation {
    let cs: Vec<Vec<usize>> = cs
        .iter()
        .map(|c| c.iter().map(|p| p - 1).collect())
        .collect();
    Permutation::from_cycles(degree, &cs).expect("valid cycles")
}

fn build(degree: usize, gens: Vec<Permutation>) -> PermGroup {
    let mut kept: Vec<Permutation> = Vec::new();
    for g in gens {
        if !g.is_identity() && !kept.contains(&g) {
            kept.push(g);
        }
    }
    let gens = kept;
    PermGroup::new(degree, gens).expect("generators share the degree")
}

/// `S_n = ⟨(1 2), (1 2 … n)⟩`.
pub fn symmetric(n: usize) -> PermGroup {
    let n = n.max(1);
    let full: Vec<usize> = (1..=n).collect();
    let gens = if n < 2 {
        vec![]
    } else {
        vec![cycle(n, &[1, 2]), cycle(n, &full)]
    };
    build(n, gens)
}

/// `A_n`, generated by `(1 2 3)` and `(3 … n)` or `(1 2)(3 … n)`.
pub fn alternating(n: usize) -> PermGroup {
    let n = n.max(1);
    if n < 3 {
        return PermGroup::trivial(n);
    }
    let tail: Vec<usize> = (3..=n).collect();
    let second = if n % 2 == 1 {
        cycle(n, &tail)
    } else {
        cycles(n, &[&[1, 2], &tail])
    };
    build(n, vec![cycle(n, &[1, 2, 3]), second])
}

/// `C_n = ⟨(1 2 … n)⟩`.
pub fn cyclic(n: usize) -> PermGroup {
    let n = n.max(1);
    let full: Vec<usize> = (1..=n).collect();
    build(n, vec![cycle(n, &full)])
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon;
/// `D_2` is the Klein four-group on four points.
pub fn dihedral(n: usize) -> PermGroup {
    match n {
        0 | 1 => cyclic(2),
        2 => klein_four(),
        _ => {
            let full: Vec<usize> = (1..=n).collect();
            let pairs: Vec<Vec<usize>> = (2..=n)
                .take_while(|&i| i < n + 2 - i)
                .map(|i| vec![i - 1, n + 1 - i])
                .collect();
            let reflection = Permutation::from_cycles(n, &pairs).expect("disjoint transpositions");
            build(n, vec![cycle(n, &full), reflection])
        }
    }
}

/// Frobenius group of order 20, `⟨(1 2 3 4 5), (2 3 5 4)⟩`.
pub fn frobenius20() -> PermGroup {
    build(5, vec![cycle(5, &[1, 2, 3, 4, 5]), cycle(5, &[2, 3, 5, 4])])
}

/// `⟨(1 2)(3 4), (1 3)(2 4)⟩`.
pub fn klein_four() -> PermGroup {
    build(
        4,
        vec![
            cycles(4, &[&[1, 2], &[3, 4]]),
            cycles(4, &[&[1, 3], &[2, 4]]),
        ],
    )
}

/// Quaternion group in its regular representation on eight points.
pub fn quaternion() -> PermGroup {
    build(
        8,
        vec![
            cycles(8, &[&[1, 2, 3, 4], &[5, 6, 7, 8]]),
            cycles(8, &[&[1, 5, 3, 7], &[2, 8, 4, 6]]),
        ],
    )
}

/// Splits on `sep` outside parentheses.
fn split_top(text: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

fn named(spec: &str) -> Option<Result<PermGroup>> {
    let upper = spec.to_ascii_uppercase();
    match upper.as_str() {
        "F20" => return Some(Ok(frobenius20())),
        "V4" => return Some(Ok(klein_four())),
        "Q8" => return Some(Ok(quaternion())),
        _ => {}
    }
    let (family, digits) = upper.split_at(1);
    let n: usize = digits.parse().ok()?;
    if n == 0 {
        return Some(Err(Error::Parse(format!(
            "{spec:?}: the parameter must be positive"
        ))));
    }
    let g = match family {
        "S" => symmetric(n),
        "A" => alternating(n),
        "C" => cyclic(n),
        "D" => dihedral(n),
        _ => return None,
    };
    Some(Ok(g))
}

/// Parses a group in the syntax described at module level.
pub fn parse_group(spec: &str) -> Result<PermGroup> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::Parse("empty group description".into()));
    }
    if !spec.contains('(') && !spec.contains('=') {
        return named(spec).unwrap_or_else(|| Err(Error::Parse(format!("unknown group {spec:?}"))));
    }
    let mut degree = None;
    let mut gens_text = None;
    for part in split_top(spec, ';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        if let Some(v) = part.strip_prefix("deg=") {
            let d: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree {v:?}")))?;
            if d == 0 {
                return Err(Error::Parse("degree must be positive".into()));
            }
            degree = Some(d);
        } else if let Some(v) = part.strip_prefix("gens=") {
            gens_text = Some(v);
        } else if part.starts_with('(') {
            gens_text = Some(part);
        } else {
            return Err(Error::Parse(format!(
                "unexpected {part:?} in group description"
            )));
        }
    }
    let gens_text = gens_text.unwrap_or("");
    let pieces: Vec<&str> = split_top(gens_text, ',')
        .into_iter()
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let max_point = pieces
        .iter()
        .flat_map(|p| p.split(|c: char| !c.is_ascii_digit()))
        .filter_map(|t| t.parse::<usize>().ok())
        .max()
        .unwrap_or(1);
    let degree = match degree {
        Some(d) if d < max_point => {
            return Err(Error::Parse(format!(
                "point {max_point} exceeds degree {d}"
            )));
        }
        Some(d) => d,
        None => max_point,
    };
    let gens = pieces
        .iter()
        .map(|p| Permutation::parse_cycles(p, degree))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(degree, gens)
}

/// Parses a subgroup of `parent`, padding its generators to the parent's
/// degree and checking containment.
pub fn parse_subgroup(parent: &PermGroup, spec: &str) -> Result<PermGroup> {
    let h = parse_group(spec)?;
    if h.degree() > parent.degree() {
        return Err(Error::NotSubgroup(format!(
            "degree {} exceeds the parent's degree {}",
            h.degree(),
            parent.degree()
        )));
    }
    let gens = h
        .generators()
        .iter()
        .map(|g| g.pad(parent.degree()))
        .collect::<Result<Vec<_>>>()?;
    let h = parent.subgroup(gens)?;
    if let Some(x) = h.generators().iter().find(|x| !parent.contains(x)) {
        return Err(Error::NotSubgroup(format!(
            "{x} is not in the parent group"
        )));
    }
    Ok(h)
}
