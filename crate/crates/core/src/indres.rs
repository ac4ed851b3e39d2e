//! Restriction and induction of characters along `H ≤ G`, and the inclusion
//! matrix `M` with `m_ij = ⟨ψ_i, χ_j↓_H⟩`.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::chartable::{self, character_table, CharacterTable, ClassFunction};
use crate::error::{Error, Result};
use crate::matrix::NonNegIntMatrix;
use crate::perm::Permutation;
use crate::permgroup::{double_cosets, ensure_subgroup, intersection, left_transversal, PermGroup};
use crate::CyclotomicInt;

/// Class of `G` containing each class of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionMap {
    map: Vec<usize>,
    target_classes: usize,
}

impl FusionMap {
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn get(&self, class: usize) -> usize {
        self.map[class]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Number of classes of the larger group.
    pub fn target_classes(&self) -> usize {
        self.target_classes
    }
}

/// Checks every element of every class of `H`, not just representatives.
pub fn class_fusion(g: &PermGroup, h: &PermGroup) -> Result<FusionMap> {
    ensure_subgroup(g, h)?;
    let gc = g.conjugacy_classes()?;
    let hc = h.conjugacy_classes()?;
    let h_elems = h.elements()?;
    let mut map = Vec::with_capacity(hc.len());
    for c in 0..hc.len() {
        let mut target = None;
        for &k in hc.class(c) {
            let idx = g.index_of(&h_elems[k])?.ok_or_else(|| {
                Error::NotSubgroup(format!("{} is not in the parent group", h_elems[k]))
            })?;
            let tc = gc.class_of_index(idx);
            match target {
                None => target = Some(tc),
                Some(t) if t != tc => {
                    return Err(Error::InvalidInput(format!(
                        "class {c} of the subgroup meets classes {t} and {tc} of the group"
                    )))
                }
                Some(_) => {}
            }
        }
        map.push(target.expect("classes are non-empty"));
    }
    debug_assert_eq!(map[0], 0);
    Ok(FusionMap {
        map,
        target_classes: gc.len(),
    })
}

pub fn restrict(chi: &ClassFunction, fusion: &FusionMap) -> Result<ClassFunction> {
    if chi.len() != fusion.target_classes {
        return Err(Error::IndexMismatch(chi.len(), fusion.target_classes));
    }
    Ok(ClassFunction::new(
        fusion.map.iter().map(|&c| chi.value(c).clone()).collect(),
    ))
}

/// `ψ^G(x) = Σ_i ψ°(t_i⁻¹ x t_i)` over a left transversal, `ψ°` vanishing off `H`.
pub fn induce(psi: &ClassFunction, g: &PermGroup, h: &PermGroup) -> Result<ClassFunction> {
    let transversal = left_transversal(g, h)?;
    induce_with(psi, g, h, &transversal)
}

fn induce_with(
    psi: &ClassFunction,
    g: &PermGroup,
    h: &PermGroup,
    transversal: &[Permutation],
) -> Result<ClassFunction> {
    let hc = h.conjugacy_classes()?;
    if psi.len() != hc.len() {
        return Err(Error::IndexMismatch(psi.len(), hc.len()));
    }
    let gc = g.conjugacy_classes()?;
    let inverses: Vec<Permutation> = transversal.iter().map(Permutation::inverse).collect();
    let mut values = Vec::with_capacity(gc.len());
    for x in gc.representatives() {
        let mut acc = CyclotomicInt::zero(1);
        for (t, tinv) in transversal.iter().zip(&inverses) {
            let y = &(tinv * x) * t;
            if let Some(c) = h.class_of(&y)? {
                acc = &acc + psi.value(c);
            }
        }
        values.push(acc);
    }
    Ok(ClassFunction::new(values))
}

/// `(1/|H|) Σ_C |C| α(C) conj(β(C))` over the classes of `H`.
pub fn inner_product(
    h: &PermGroup,
    alpha: &ClassFunction,
    beta: &ClassFunction,
) -> Result<BigRational> {
    chartable::inner_product(h.conjugacy_classes()?, alpha, beta)
}

fn multiplicity(
    h: &PermGroup,
    alpha: &ClassFunction,
    beta: &ClassFunction,
    at: (usize, usize),
) -> Result<BigUint> {
    let ip = inner_product(h, alpha, beta)?;
    if !ip.is_integer() || ip.is_negative() {
        return Err(Error::NonIntegralMultiplicity {
            row: at.0,
            col: at.1,
            value: ip.to_string(),
        });
    }
    Ok(ip.to_integer().to_biguint().expect("non-negative"))
}

/// The inclusion matrix of `H ≤ G` with its character labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionMatrix {
    entries: NonNegIntMatrix,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl InclusionMatrix {
    pub fn new(
        entries: NonNegIntMatrix,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
    ) -> Result<Self> {
        if row_labels.len() != entries.rows() || col_labels.len() != entries.cols() {
            return Err(Error::DimensionMismatch(format!(
                "{} row and {} column labels for a {}x{} matrix",
                row_labels.len(),
                col_labels.len(),
                entries.rows(),
                entries.cols()
            )));
        }
        Ok(Self {
            entries,
            row_labels,
            col_labels,
        })
    }

    pub fn entries(&self) -> &NonNegIntMatrix {
        &self.entries
    }

    pub fn into_entries(self) -> NonNegIntMatrix {
        self.entries
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn has_zero_row_or_column(&self) -> bool {
        let m = &self.entries;
        (0..m.rows()).any(|i| m.row(i).iter().all(Zero::is_zero))
            || (0..m.cols()).any(|j| (0..m.rows()).all(|i| m.get(i, j).is_zero()))
    }

    /// `{rows, cols, entries, row_labels, col_labels}`.
    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.entries.rows(),
            "cols": self.entries.cols(),
            "entries": self.entries.entries_json(),
            "row_labels": self.row_labels,
            "col_labels": self.col_labels,
        })
    }

    /// Induction-restriction table: subgroup characters down the side,
    /// group characters across the top.
    pub fn to_text(&self, corner: &str) -> String {
        let mut cells = Vec::with_capacity(self.entries.rows() + 1);
        let mut header = vec![corner.to_string(), "|".to_string()];
        header.extend(self.col_labels.iter().cloned());
        cells.push(header);
        for i in 0..self.entries.rows() {
            let mut line = vec![self.row_labels[i].clone(), "|".to_string()];
            line.extend(self.entries.row(i).iter().map(ToString::to_string));
            cells.push(line);
        }
        let text = crate::text::align(&cells);
        let mut lines = text.lines();
        let head = lines.next().unwrap_or_default().to_string();
        let mut out = format!("{head}\n{}\n", "-".repeat(head.chars().count()));
        for l in lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}

/// `H ≤ G` with both character tables, the fusion map and a left transversal.
#[derive(Clone, Debug)]
pub struct SubgroupPair {
    g: PermGroup,
    h: PermGroup,
    g_table: CharacterTable,
    h_table: CharacterTable,
    fusion: FusionMap,
    transversal: Vec<Permutation>,
}

impl SubgroupPair {
    pub fn new(g: &PermGroup, h: &PermGroup) -> Result<Self> {
        let fusion = class_fusion(g, h)?;
        Ok(Self {
            g: g.clone(),
            h: h.clone(),
            g_table: character_table(g)?,
            h_table: character_table(h)?,
            fusion,
            transversal: left_transversal(g, h)?,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.g
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.h
    }

    pub fn group_table(&self) -> &CharacterTable {
        &self.g_table
    }

    pub fn subgroup_table(&self) -> &CharacterTable {
        &self.h_table
    }

    pub fn fusion(&self) -> &FusionMap {
        &self.fusion
    }

    pub fn transversal(&self) -> &[Permutation] {
        &self.transversal
    }

    pub fn index(&self) -> usize {
        self.transversal.len()
    }

    pub fn restrict(&self, chi: &ClassFunction) -> Result<ClassFunction> {
        restrict(chi, &self.fusion)
    }

    pub fn induce(&self, psi: &ClassFunction) -> Result<ClassFunction> {
        induce_with(psi, &self.g, &self.h, &self.transversal)
    }

    /// Multiplicities of the irreducibles of `H` in `f`.
    pub fn decompose_on_subgroup(&self, f: &ClassFunction) -> Result<Vec<BigUint>> {
        self.h_table
            .rows()
            .iter()
            .enumerate()
            .map(|(i, psi)| multiplicity(&self.h, f, psi, (i, 0)))
            .collect()
    }

    /// Multiplicities of the irreducibles of `G` in `f`.
    pub fn decompose_on_group(&self, f: &ClassFunction) -> Result<Vec<BigUint>> {
        self.g_table
            .rows()
            .iter()
            .enumerate()
            .map(|(j, chi)| multiplicity(&self.g, f, chi, (0, j)))
            .collect()
    }

    /// Entries from restriction, checked against the same entries from
    /// induction.
    pub fn inclusion_matrix(&self) -> Result<InclusionMatrix> {
        let r = self.h_table.len();
        let s = self.g_table.len();
        let restricted: Vec<ClassFunction> = self
            .g_table
            .rows()
            .iter()
            .map(|chi| self.restrict(chi))
            .collect::<Result<_>>()?;
        let mut entries = NonNegIntMatrix::zeros(r, s);
        for (i, psi) in self.h_table.rows().iter().enumerate() {
            let induced = self.induce(psi)?;
            for (j, chi) in self.g_table.rows().iter().enumerate() {
                let down = multiplicity(&self.h, psi, &restricted[j], (i, j))?;
                let up = multiplicity(&self.g, &induced, chi, (i, j))?;
                if down != up {
                    return Err(Error::InvalidInput(format!(
                        "reciprocity fails at ({i},{j}): {down} by restriction, {up} by induction"
                    )));
                }
                entries.set(i, j, down);
            }
        }
        InclusionMatrix::new(
            entries,
            (1..=r).map(|i| format!("ψ{i}")).collect(),
            (1..=s).map(|j| format!("χ{j}")).collect(),
        )
    }

    /// Multiplicities of `(↓↑)^k ψ_index` over `Irr(H)`; `k ≥ 1`.
    pub fn res_ind_decompose(&self, index: usize, k: u32) -> Result<Vec<BigUint>> {
        if k == 0 {
            return Err(Error::InvalidInput(
                "need at least one induction-restriction round".into(),
            ));
        }
        let mut f = self
            .h_table
            .rows()
            .get(index)
            .ok_or_else(|| Error::OutOfRange(format!("no irreducible {index} of the subgroup")))?
            .clone();
        for _ in 0..k {
            f = self.restrict(&self.induce(&f)?)?;
        }
        self.decompose_on_subgroup(&f)
    }
}

pub fn inclusion_matrix(g: &PermGroup, h: &PermGroup) -> Result<InclusionMatrix> {
    SubgroupPair::new(g, h)?.inclusion_matrix()
}

pub fn res_ind_decompose(
    g: &PermGroup,
    h: &PermGroup,
    index: usize,
    k: u32,
) -> Result<Vec<BigUint>> {
    SubgroupPair::new(g, h)?.res_ind_decompose(index, k)
}

#[derive(Clone, Debug)]
pub struct MackeyReport {
    pub holds: bool,
    pub double_cosets: usize,
    /// `(ψ^G)↓_N`
    pub lhs: ClassFunction,
    /// `Σ_{NgH} ((^gψ)↓_{N ∩ gHg⁻¹})^N`
    pub rhs: ClassFunction,
}

/// Compares `(ψ^G)↓_N` with the double-coset sum, evaluated pointwise on
/// the classes of `N`.
pub fn mackey_check(
    g: &PermGroup,
    n: &PermGroup,
    h: &PermGroup,
    psi: &ClassFunction,
) -> Result<MackeyReport> {
    ensure_subgroup(g, n)?;
    ensure_subgroup(g, h)?;
    let hc = h.conjugacy_classes()?;
    if psi.len() != hc.len() {
        return Err(Error::IndexMismatch(psi.len(), hc.len()));
    }
    let lhs = restrict(&induce(psi, g, h)?, &class_fusion(g, n)?)?;

    let cosets = double_cosets(g, n, h)?;
    let nc = n.conjugacy_classes()?;
    let mut rhs = vec![CyclotomicInt::zero(1); nc.len()];
    for dc in &cosets {
        let x = &dc.rep;
        let xinv = x.inverse();
        let conj = g.subgroup(h.generators().iter().map(|y| y.conjugate_by(x)).collect())?;
        let k = intersection(n, &conj)?;
        let k_elems = k.elements()?;
        let reps = left_transversal(n, &k)?;
        for (c, z) in nc.representatives().iter().enumerate() {
            for t in &reps {
                let w = &(&t.inverse() * z) * t;
                if k_elems.binary_search(&w).is_ok() {
                    let back = &(&xinv * &w) * x;
                    let hcls = h.class_of(&back)?.expect("conjugate lands in H");
                    rhs[c] = &rhs[c] + psi.value(hcls);
                }
            }
        }
    }
    let rhs = ClassFunction::new(rhs);
    Ok(MackeyReport {
        holds: lhs == rhs,
        double_cosets: cosets.len(),
        lhs,
        rhs,
    })
}
