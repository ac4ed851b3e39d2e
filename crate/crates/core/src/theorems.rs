//! Group-theoretic statements about depth, checked on concrete groups.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::depthcalc::tower_is_d3;
use crate::error::{Error, Result};
use crate::indres::SubgroupPair;
use crate::perm::Permutation;
use crate::permgroup::{
    double_cosets, ensure_subgroup, is_normal, left_transversal, normal_core, PermGroup,
};

#[derive(Clone, Debug)]
pub struct FrobeniusPairReport {
    pub is_frobenius: bool,
    /// `G` minus the conjugates of `H − {e}`, when that is a normal subgroup
    /// complementing `H`.
    pub kernel: Option<PermGroup>,
    /// Number of `(H, H)` double cosets.
    pub double_cosets: usize,
    /// An `x ∉ H` with `H ∩ x⁻¹Hx` non-trivial, if any.
    pub intersection_witness: Option<Permutation>,
    pub s_formula_ok: bool,
}

impl FrobeniusPairReport {
    pub fn to_json(&self) -> Value {
        json!({
            "is_frobenius": self.is_frobenius,
            "kernel": self.kernel.as_ref().map(|k| json!({
                "order": k.order().to_u64(),
                "generators": k.generators().iter().map(ToString::to_string).collect::<Vec<_>>(),
            })),
            "double_cosets": self.double_cosets,
            "intersection_witness": self.intersection_witness.as_ref().map(ToString::to_string),
            "s_formula_ok": self.s_formula_ok,
        })
    }
}

fn frobenius_structure(g: &PermGroup, h: &PermGroup) -> Result<FrobeniusPairReport> {
    ensure_subgroup(g, h)?;
    if h.order() == g.order() || h.order() == &BigUint::from(1u8) {
        return Err(Error::InvalidInput(
            "need a proper non-trivial subgroup".into(),
        ));
    }
    let h_elems = h.elements()?;
    let reps = left_transversal(g, h)?;
    let mut witness = None;
    // x⁻¹Hx depends only on the right coset Hx, and the inverses of a left
    // transversal form a right transversal
    for t in reps.iter().skip(1) {
        let meets = h_elems
            .iter()
            .filter(|y| !y.is_identity())
            .any(|y| h.contains(&y.conjugate_by(t)));
        if meets {
            witness = Some(t.inverse());
            break;
        }
    }
    let n = double_cosets(g, h, h)?.len();
    let mut kernel = None;
    if witness.is_none() {
        let mut covered: BTreeSet<Permutation> = BTreeSet::new();
        for t in &reps {
            for y in h_elems.iter().filter(|y| !y.is_identity()) {
                covered.insert(y.conjugate_by(t));
            }
        }
        let candidate: Vec<Permutation> = g
            .elements()?
            .iter()
            .filter(|x| !covered.contains(x))
            .cloned()
            .collect();
        let closed = candidate.iter().all(|a| {
            candidate
                .iter()
                .all(|b| candidate.binary_search(&(a * b)).is_ok())
        });
        if closed {
            let k = g.subgroup_from_elements(&candidate)?;
            if is_normal(g, &k)? && k.order() * h.order() == *g.order() {
                kernel = Some(k);
            }
        }
    }
    Ok(FrobeniusPairReport {
        is_frobenius: kernel.is_some(),
        kernel,
        double_cosets: n,
        intersection_witness: witness,
        s_formula_ok: false,
    })
}

/// Checks that `H` is a Frobenius complement in `G` and, if so, the value
/// formula for `S`.
pub fn verify_frobenius_pair(g: &PermGroup, h: &PermGroup) -> Result<FrobeniusPairReport> {
    let mut report = frobenius_structure(g, h)?;
    if report.is_frobenius {
        report.s_formula_ok = s_formula_holds(g, h, report.double_cosets)?;
    }
    Ok(report)
}

fn s_formula_holds(g: &PermGroup, h: &PermGroup, n: usize) -> Result<bool> {
    let pair = SubgroupPair::new(g, h)?;
    let m = pair.inclusion_matrix()?.into_entries();
    let s = crate::depthcalc::s_matrix(&m);
    let degrees = pair.subgroup_table().degrees();
    let n = n as u64 - 1;
    let ok = s.entries().all(|(i, j, v)| {
        let expected = n * degrees[i] * degrees[j] + u64::from(i == j);
        *v == BigUint::from(expected)
    });
    Ok(ok)
}

/// `S_{ψχ} = (n−1) deg ψ deg χ + δ_{ψχ}` with `n = |H\G/H|`.
pub fn frobenius_s_formula_check(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    let report = frobenius_structure(g, h)?;
    if !report.is_frobenius {
        return Err(Error::NotFrobenius(match report.intersection_witness {
            Some(x) => format!("H meets its conjugate by {x} non-trivially"),
            None => "the complement of the conjugates of H is not a normal subgroup".into(),
        }));
    }
    s_formula_holds(g, h, report.double_cosets)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerCoreReport {
    /// `N M Mᵗ M ≤ q N M` on inclusion matrices.
    pub matrix_d3: bool,
    /// `H ⊆ core_G(N)`.
    pub core_contains: bool,
    pub core_order: BigUint,
    pub multiplier: Option<BigUint>,
}

impl TowerCoreReport {
    pub fn agree(&self) -> bool {
        self.matrix_d3 == self.core_contains
    }

    pub fn to_json(&self) -> Value {
        json!({
            "matrix_d3": self.matrix_d3,
            "core_contains": self.core_contains,
            "core_order": crate::matrix::biguint_json(&self.core_order),
            "multiplier": self.multiplier.as_ref().map(crate::matrix::biguint_json),
            "agree": self.agree(),
        })
    }
}

/// Decides depth three of `H ≤ G` through `N` twice: once from inclusion
/// matrices, once from the normal core of `N`.
pub fn tower_core_equivalence(
    g: &PermGroup,
    n: &PermGroup,
    h: &PermGroup,
) -> Result<TowerCoreReport> {
    ensure_subgroup(g, n)?;
    ensure_subgroup(n, h)?;
    let m_ng = SubgroupPair::new(g, n)?.inclusion_matrix()?.into_entries();
    let m_hn = SubgroupPair::new(n, h)?.inclusion_matrix()?.into_entries();
    let t = tower_is_d3(&m_hn, &m_ng)?;
    let core = normal_core(g, n)?;
    Ok(TowerCoreReport {
        matrix_d3: t.holds,
        core_contains: h.generators().iter().all(|x| core.contains(x)),
        core_order: core.order().clone(),
        multiplier: t.multiplier,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharCriterionReport {
    pub holds: bool,
    /// `(ψ, χ)` with `⟨(↓↑)²ψ | χ⟩ > 0 = ⟨↓↑ψ | χ⟩`.
    pub failure: Option<(usize, usize)>,
    pub twice: Option<BigUint>,
}

/// Depth three from characters: `⟨Res Ind Res Ind ψ | χ⟩ ≤ q ⟨Res Ind ψ | χ⟩`
/// for all irreducible `ψ`, `χ` of `H`.
pub fn d3_char_criterion(g: &PermGroup, h: &PermGroup) -> Result<CharCriterionReport> {
    let pair = SubgroupPair::new(g, h)?;
    for psi in 0..pair.subgroup_table().len() {
        let once = pair.res_ind_decompose(psi, 1)?;
        let twice = pair.res_ind_decompose(psi, 2)?;
        if let Some(chi) = (0..once.len()).find(|&c| once[c].is_zero() && !twice[c].is_zero()) {
            return Ok(CharCriterionReport {
                holds: false,
                failure: Some((psi, chi)),
                twice: Some(twice[chi].clone()),
            });
        }
    }
    Ok(CharCriterionReport {
        holds: true,
        failure: None,
        twice: None,
    })
}
