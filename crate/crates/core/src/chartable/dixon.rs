//! Dixon's modular method for exact character tables.
//!
//! Class matrices act on the central characters `ω_χ(C_i) = |C_i| χ(g_i) / χ(1)`
//! as common eigenvectors. Over `F_p` with `p ≡ 1 (mod exp G)` and `p > 2|G|`
//! every eigenvalue lies in the field, so splitting eigenspaces by successive
//! class matrices isolates each character. Exact values are recovered from
//! the power maps by a discrete Fourier transform over eigenvalue multiplicities.

use num_bigint::BigInt;

use super::modp::{prime_above, Field};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::permgroup::PermGroup;

pub(crate) struct DixonOutput {
    pub exponent: u64,
    pub prime: u64,
    pub rows: Vec<Vec<Cyclotomic<BigInt>>>,
    pub degrees: Vec<u64>,
}

/// `coeff[j][i][k]`: number of `x ∈ C_i` with `x⁻¹ z_k ∈ C_j`, for a fixed
/// `z_k ∈ C_k`. Fixing `j`, this is the matrix of multiplication by the class
/// sum `C_j` acting on central-character vectors.
fn class_matrices(g: &PermGroup) -> Result<Vec<Vec<Vec<u64>>>> {
    let classes = g.conjugacy_classes()?;
    let elems = g.elements()?;
    let r = classes.len();
    let inverses: Vec<_> = elems.iter().map(|x| x.inverse()).collect();
    let mut coeff = vec![vec![vec![0u64; r]; r]; r];
    for k in 0..r {
        let z = classes.representative(k);
        for (xi, xinv) in inverses.iter().enumerate() {
            let i = classes.class_of_index(xi);
            let y = xinv * z;
            let j = classes.class_of_index(g.index_of(&y)?.expect("closed"));
            coeff[j][i][k] += 1;
        }
    }
    Ok(coeff)
}

pub(crate) fn dixon(g: &PermGroup) -> Result<DixonOutput> {
    let classes = g.conjugacy_classes()?;
    let order = g.size()? as u64;
    let r = classes.len();
    let exponent = g.exponent()?;
    let p = prime_above(exponent, 2 * order);
    let f = Field { p };

    let coeff = class_matrices(g)?;
    let mats: Vec<Vec<Vec<u64>>> = coeff
        .iter()
        .map(|m| {
            m.iter()
                .map(|row| row.iter().map(|&v| v % p).collect())
                .collect()
        })
        .collect();

    // each space is an RREF basis (rows) with its pivot columns
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for a in mats.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            next.extend(split_space(f, a, basis));
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s.len() != 1) {
        return Err(Error::SplitFailure(format!(
            "a common eigenspace of dimension {} survived all class matrices",
            s.len()
        )));
    }
    if spaces.len() != r {
        return Err(Error::SplitFailure(format!(
            "found {} common eigenvectors for {r} classes",
            spaces.len()
        )));
    }

    let elems = g.elements()?;
    let inverse_class: Vec<usize> = (0..r)
        .map(|c| {
            let inv = classes.representative(c).inverse();
            classes.class_of_index(g.index_of(&inv).ok().flatten().expect("closed"))
        })
        .collect();
    // power_map[c][l] = class of rep_c^l, for l < element order
    let power_map: Vec<Vec<usize>> = (0..r)
        .map(|c| {
            let x = classes.representative(c);
            let o = classes.element_order(c);
            let mut y = crate::perm::Permutation::identity(g.degree());
            (0..o)
                .map(|_| {
                    let idx = g.index_of(&y).ok().flatten().expect("closed");
                    y = &y * x;
                    classes.class_of_index(idx)
                })
                .collect()
        })
        .collect();
    debug_assert_eq!(elems.len() as u64, order);

    let sizes: Vec<u64> = classes.sizes().iter().map(|&s| s as u64).collect();
    let z = f.pow(f.primitive_root(), (p - 1) / exponent);
    let mut rows = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for basis in spaces {
        let v = &basis[0];
        if v[0] == 0 {
            return Err(Error::SplitFailure(
                "eigenvector vanishes on the identity class".into(),
            ));
        }
        let scale = f.inv(v[0]);
        let w: Vec<u64> = v.iter().map(|&x| f.mul(x, scale)).collect();
        // χ(1)² = |G| / Σ_i ω_i ω_{i'} / |C_i|
        let mut s = 0;
        for i in 0..r {
            let t = f.mul(f.mul(w[i], w[inverse_class[i]]), f.inv(sizes[i] % p));
            s = f.add(s, t);
        }
        let d2 = f.mul(order % p, f.inv(s));
        let degree = (1..)
            .take_while(|d: &u64| d * d <= order)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| {
                Error::SplitFailure(format!("no integer degree with square {d2} mod {p}"))
            })?;
        let chi_mod: Vec<u64> = (0..r)
            .map(|i| f.mul(f.mul(degree, w[i]), f.inv(sizes[i] % p)))
            .collect();
        let mut row = Vec::with_capacity(r);
        for c in 0..r {
            row.push(lift_value(f, z, exponent, degree, &power_map[c], &chi_mod)?);
        }
        rows.push(row);
        degrees.push(degree);
    }
    Ok(DixonOutput {
        exponent,
        prime: p,
        rows,
        degrees,
    })
}

/// Splits an `a`-invariant subspace into eigenspaces of `a`.
fn split_space(f: Field, a: &[Vec<u64>], basis: Vec<Vec<u64>>) -> Vec<Vec<Vec<u64>>> {
    let r = a.len();
    let d = basis.len();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|b| {
            b.iter()
                .position(|&x| x != 0)
                .expect("non-zero basis vector")
        })
        .collect();
    // restricted operator: column t holds coordinates of a · basis[t]
    let mut restricted = vec![vec![0u64; d]; d];
    for (t, b) in basis.iter().enumerate() {
        for (s, &pc) in pivots.iter().enumerate() {
            let mut acc = 0;
            for k in 0..r {
                if b[k] != 0 {
                    acc = f.add(acc, f.mul(a[pc][k], b[k]));
                }
            }
            restricted[s][t] = acc;
        }
    }
    let roots = f.roots(&f.charpoly(&restricted));
    let mut out = Vec::with_capacity(roots.len());
    for lambda in roots {
        let mut shifted = restricted.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = f.sub(row[i], lambda);
        }
        let mut vecs: Vec<Vec<u64>> = f
            .kernel(&shifted)
            .into_iter()
            .map(|c| {
                let mut v = vec![0u64; r];
                for (t, &ct) in c.iter().enumerate() {
                    if ct != 0 {
                        for k in 0..r {
                            v[k] = f.add(v[k], f.mul(ct, basis[t][k]));
                        }
                    }
                }
                v
            })
            .collect();
        f.rref(&mut vecs);
        if !vecs.is_empty() {
            out.push(vecs);
        }
    }
    out
}

/// Recovers `χ(x)` as a cyclotomic integer from `χ` mod `p` on the powers of `x`.
fn lift_value(
    f: Field,
    z: u64,
    exponent: u64,
    degree: u64,
    powers: &[usize],
    chi_mod: &[u64],
) -> Result<Cyclotomic<BigInt>> {
    let o = powers.len() as u64;
    let step = exponent / o;
    let o_inv = f.inv(o % f.p);
    let mut raw = vec![BigInt::from(0); exponent as usize];
    let mut total = 0u64;
    for s in 0..o {
        // multiplicity of eigenvalue ζ^{step·s}
        let mut acc = 0u64;
        for (l, &cls) in powers.iter().enumerate() {
            let expo = (exponent - (step * s * l as u64) % exponent) % exponent;
            acc = f.add(acc, f.mul(chi_mod[cls], f.pow(z, expo)));
        }
        let m = f.mul(acc, o_inv);
        if m > degree {
            return Err(Error::SplitFailure(format!(
                "eigenvalue multiplicity {m} exceeds degree {degree}"
            )));
        }
        total += m;
        raw[(step * s) as usize] = BigInt::from(m);
    }
    if total != degree {
        return Err(Error::SplitFailure(format!(
            "eigenvalue multiplicities sum to {total}, expected degree {degree}"
        )));
    }
    Ok(Cyclotomic::reduce(exponent, raw))
}
