//! Group algebras `k[H] ⊆ k[G]` as a Frobenius extension.
//!
//! Fix a left transversal `t_1 = 1, …, t_n` (`G = ⊔ t_j H`). Then `k[G]` is
//! free as a right `k[H]`-module on the `t_j`, so every element of
//! `A ⊗_B A` has a unique expansion `Σ c · t_j ⊗ g` and every element of
//! `A ⊗_B A ⊗_B A` a unique expansion `Σ c · t_j ⊗ t_k ⊗ g`. Equality of
//! tensors is coefficient equality in these forms.
//!
//! The Frobenius map `F` keeps the part supported on `H`. Its dual bases are
//! `x_i = t_i`, `y_i = t_i⁻¹`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Num;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::{ensure_subgroup, left_transversal, PermGroup};

/// Finitely supported `Σ c_g g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement<T> {
    terms: BTreeMap<Permutation, T>,
}

pub type RationalElement = GroupAlgebraElement<BigRational>;

fn add_term<K: Ord, T: Clone + Num>(map: &mut BTreeMap<K, T>, key: K, c: T) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get().clone() + c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

impl<T: Clone + Num> GroupAlgebraElement<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(g: &Permutation) -> Self {
        Self::term(g, T::one())
    }

    pub fn term(g: &Permutation, c: T) -> Self {
        let mut out = Self::zero();
        add_term(&mut out.terms, g.clone(), c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Permutation, T)>) -> Self {
        let mut out = Self::zero();
        for (g, c) in terms {
            add_term(&mut out.terms, g, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, T> {
        &self.terms
    }

    pub fn coefficient(&self, g: &Permutation) -> T {
        self.terms.get(g).cloned().unwrap_or_else(T::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            add_term(&mut out.terms, g.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            add_term(&mut out.terms, g.clone(), T::zero() - c.clone());
        }
        out
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(g, c)| (g.clone(), c.clone() * k.clone())),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                add_term(&mut out.terms, a * b, c.clone() * d.clone());
            }
        }
        out
    }

    /// Every element of the support lies in `g`.
    pub fn supported_in(&self, g: &PermGroup) -> bool {
        self.terms.keys().all(|x| g.contains(x))
    }
}

/// `F(Σ c_g g) = Σ_{h ∈ H} c_h h`.
pub fn frobenius_hom<T: Clone + Num>(
    a: &GroupAlgebraElement<T>,
    h: &PermGroup,
) -> GroupAlgebraElement<T> {
    GroupAlgebraElement::from_terms(
        a.terms
            .iter()
            .filter(|(g, _)| h.contains(g))
            .map(|(g, c)| (g.clone(), c.clone())),
    )
}

/// `Σ c · t_j ⊗ g`, keyed by `(j, g)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElement2<T> {
    terms: BTreeMap<(usize, Permutation), T>,
}

/// `Σ c · t_j ⊗ t_k ⊗ g`, keyed by `(j, k, g)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElement3<T> {
    terms: BTreeMap<(usize, usize, Permutation), T>,
}

impl<T: Clone + Num> TensorElement2<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, Permutation), T> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_term(&mut out.terms, k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            add_term(&mut out.terms, k.clone(), c.clone() * s.clone());
        }
        out
    }
}

impl<T: Clone + Num> TensorElement3<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize, Permutation), T> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_term(&mut out.terms, k.clone(), c.clone());
        }
        out
    }
}

/// `k[H] ⊆ k[G]` with a fixed left transversal.
#[derive(Clone, Debug)]
pub struct FrobeniusExtension {
    g: PermGroup,
    h: PermGroup,
    reps: Vec<Permutation>,
    rep_inverses: Vec<Permutation>,
    /// `x ↦ (j, h)` with `x = t_j h`
    split: HashMap<Permutation, (usize, Permutation)>,
}

impl FrobeniusExtension {
    pub fn new(g: &PermGroup, h: &PermGroup) -> Result<Self> {
        ensure_subgroup(g, h)?;
        let reps = left_transversal(g, h)?;
        let h_elems = h.elements()?;
        let mut split = HashMap::with_capacity(g.size()?);
        for (j, t) in reps.iter().enumerate() {
            for y in h_elems {
                split.insert(t * y, (j, y.clone()));
            }
        }
        Ok(Self {
            g: g.clone(),
            h: h.clone(),
            rep_inverses: reps.iter().map(Permutation::inverse).collect(),
            reps,
            split,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.g
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.h
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn transversal(&self) -> &[Permutation] {
        &self.reps
    }

    /// `(j, h)` with `x = t_j h`.
    pub fn decompose(&self, x: &Permutation) -> Result<(usize, Permutation)> {
        self.split
            .get(x)
            .cloned()
            .ok_or_else(|| Error::InvalidInput(format!("{x} is not in the group")))
    }

    pub fn frobenius_hom<T: Clone + Num>(
        &self,
        a: &GroupAlgebraElement<T>,
    ) -> GroupAlgebraElement<T> {
        frobenius_hom(a, &self.h)
    }

    /// `x_i = t_i`.
    pub fn x(&self, i: usize) -> &Permutation {
        &self.reps[i]
    }

    /// `y_i = t_i⁻¹`.
    pub fn y(&self, i: usize) -> &Permutation {
        &self.rep_inverses[i]
    }

    /// `x ⊗ y` in canonical form.
    pub fn tensor2<T: Clone + Num>(
        &self,
        x: &GroupAlgebraElement<T>,
        y: &GroupAlgebraElement<T>,
    ) -> Result<TensorElement2<T>> {
        let mut out = TensorElement2::zero();
        for (a, c) in &x.terms {
            let (j, hh) = self.decompose(a)?;
            for (b, d) in &y.terms {
                add_term(&mut out.terms, (j, &hh * b), c.clone() * d.clone());
            }
        }
        Ok(out)
    }

    /// `x ⊗ y ⊗ z` in canonical form.
    pub fn tensor3<T: Clone + Num>(
        &self,
        x: &GroupAlgebraElement<T>,
        y: &GroupAlgebraElement<T>,
        z: &GroupAlgebraElement<T>,
    ) -> Result<TensorElement3<T>> {
        let mut out = TensorElement3::zero();
        for (a, c) in &x.terms {
            let (j, h1) = self.decompose(a)?;
            for (b, d) in &y.terms {
                let (k, h2) = self.decompose(&(&h1 * b))?;
                for (e, f) in &z.terms {
                    add_term(
                        &mut out.terms,
                        (j, k, &h2 * e),
                        c.clone() * d.clone() * f.clone(),
                    );
                }
            }
        }
        Ok(out)
    }

    pub fn left_mul2<T: Clone + Num>(
        &self,
        a: &GroupAlgebraElement<T>,
        t: &TensorElement2<T>,
    ) -> Result<TensorElement2<T>> {
        let mut out = TensorElement2::zero();
        for ((j, g), c) in &t.terms {
            for (x, d) in &a.terms {
                let (k, hh) = self.decompose(&(x * &self.reps[*j]))?;
                add_term(&mut out.terms, (k, &hh * g), d.clone() * c.clone());
            }
        }
        Ok(out)
    }

    pub fn right_mul2<T: Clone + Num>(
        &self,
        t: &TensorElement2<T>,
        a: &GroupAlgebraElement<T>,
    ) -> TensorElement2<T> {
        let mut out = TensorElement2::zero();
        for ((j, g), c) in &t.terms {
            for (x, d) in &a.terms {
                add_term(&mut out.terms, (*j, g * x), c.clone() * d.clone());
            }
        }
        out
    }

    pub fn left_mul3<T: Clone + Num>(
        &self,
        a: &GroupAlgebraElement<T>,
        t: &TensorElement3<T>,
    ) -> Result<TensorElement3<T>> {
        let mut out = TensorElement3::zero();
        for ((j, k, g), c) in &t.terms {
            for (x, d) in &a.terms {
                let (j2, h1) = self.decompose(&(x * &self.reps[*j]))?;
                let (k2, h2) = self.decompose(&(&h1 * &self.reps[*k]))?;
                add_term(&mut out.terms, (j2, k2, &h2 * g), d.clone() * c.clone());
            }
        }
        Ok(out)
    }

    pub fn right_mul3<T: Clone + Num>(
        &self,
        t: &TensorElement3<T>,
        a: &GroupAlgebraElement<T>,
    ) -> TensorElement3<T> {
        let mut out = TensorElement3::zero();
        for ((j, k, g), c) in &t.terms {
            for (x, d) in &a.terms {
                add_term(&mut out.terms, (*j, *k, g * x), c.clone() * d.clone());
            }
        }
        out
    }

    /// Multiplication map `x ⊗ y ↦ xy`.
    pub fn mu<T: Clone + Num>(&self, t: &TensorElement2<T>) -> GroupAlgebraElement<T> {
        GroupAlgebraElement::from_terms(
            t.terms
                .iter()
                .map(|((j, g), c)| (&self.reps[*j] * g, c.clone())),
        )
    }

    /// Simple tensors `(c, t_j, g)` making up `t`.
    fn simple2<'a, T: Clone + Num>(
        &'a self,
        t: &'a TensorElement2<T>,
    ) -> impl Iterator<Item = (T, &'a Permutation, &'a Permutation)> + 'a {
        t.terms
            .iter()
            .map(move |((j, g), c)| (c.clone(), &self.reps[*j], g))
    }

    fn simple3<'a, T: Clone + Num>(
        &'a self,
        t: &'a TensorElement3<T>,
    ) -> impl Iterator<Item = (T, &'a Permutation, &'a Permutation, &'a Permutation)> + 'a {
        t.terms
            .iter()
            .map(move |((j, k, g), c)| (c.clone(), &self.reps[*j], &self.reps[*k], g))
    }

    fn group_basis(&self) -> Result<&[Permutation]> {
        self.g.elements()
    }
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn basis(g: &Permutation) -> RationalElement {
    RationalElement::basis(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSystemReport {
    pub holds: bool,
    /// A group element `a` for which `Σ F(a x_i) y_i = a` or
    /// `Σ x_i F(y_i a) = a` fails.
    pub counterexample: Option<Permutation>,
}

/// `Σ F(a x_i) y_i = a = Σ x_i F(y_i a)` for every group element `a`.
pub fn check_frobenius_system(g: &PermGroup, h: &PermGroup) -> Result<FrobeniusSystemReport> {
    let ext = FrobeniusExtension::new(g, h)?;
    for a in ext.group_basis()? {
        let a_el = basis(a);
        let mut right = RationalElement::zero();
        let mut left = RationalElement::zero();
        for i in 0..ext.index() {
            right = right.add(
                &ext.frobenius_hom(&a_el.mul(&basis(ext.x(i))))
                    .mul(&basis(ext.y(i))),
            );
            left = left.add(&basis(ext.x(i)).mul(&ext.frobenius_hom(&basis(ext.y(i)).mul(&a_el))));
        }
        if right != a_el || left != a_el {
            return Ok(FrobeniusSystemReport {
                holds: false,
                counterexample: Some(a.clone()),
            });
        }
    }
    Ok(FrobeniusSystemReport {
        holds: true,
        counterexample: None,
    })
}

/// `e = (1/n) Σ x_i ⊗ y_i`.
pub fn separability_element(ext: &FrobeniusExtension) -> Result<TensorElement2<BigRational>> {
    let n = rational(1, ext.index() as i64);
    let mut e = TensorElement2::zero();
    for i in 0..ext.index() {
        e = e.add(&ext.tensor2(&basis(ext.x(i)), &basis(ext.y(i)))?);
    }
    Ok(e.scale(&n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparabilityReport {
    pub element: TensorElement2<BigRational>,
    pub central: bool,
    pub multiplies_to_one: bool,
    /// A group element not commuting with `e`.
    pub counterexample: Option<Permutation>,
}

impl SeparabilityReport {
    pub fn holds(&self) -> bool {
        self.central && self.multiplies_to_one
    }
}

/// Builds the separability element and checks `ae = ea` and `μ(e) = 1`.
pub fn check_separability(g: &PermGroup, h: &PermGroup) -> Result<SeparabilityReport> {
    let ext = FrobeniusExtension::new(g, h)?;
    let e = separability_element(&ext)?;
    let one = basis(&Permutation::identity(g.degree()));
    let multiplies_to_one = ext.mu(&e) == one;
    let mut counterexample = None;
    for a in ext.group_basis()? {
        let a_el = basis(a);
        if ext.left_mul2(&a_el, &e)? != ext.right_mul2(&e, &a_el) {
            counterexample = Some(a.clone());
            break;
        }
    }
    Ok(SeparabilityReport {
        element: e,
        central: counterexample.is_none(),
        multiplies_to_one,
        counterexample,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiBasesReport {
    /// The tensor identity over every pair of group elements.
    pub identity: bool,
    /// Each quasi-basis tensor commutes with `B`.
    pub central: bool,
    /// Each map is a `B`-`B`-bimodule map (always true for the D3 check).
    pub bimodule: bool,
    pub pairs_checked: usize,
    /// First pair `(x, y)` where the identity fails.
    pub counterexample: Option<(Permutation, Permutation)>,
    /// First `(i, b)` where centrality of the `i`-th tensor fails.
    pub central_failure: Option<(usize, Permutation)>,
    /// First `(i, b, b', a)` where `γ_i(b a b') ≠ b γ_i(a) b'`.
    pub bimodule_failure: Option<(usize, Permutation, Permutation, Permutation)>,
}

impl QuasiBasesReport {
    pub fn holds(&self) -> bool {
        self.identity && self.central && self.bimodule
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pass": self.holds(),
            "identity": self.identity,
            "central": self.central,
            "bimodule": self.bimodule,
            "pairs_checked": self.pairs_checked,
            "counterexample": self.counterexample.as_ref().map(|(x, y)| json!([x.to_string(), y.to_string()])),
            "central_failure": self.central_failure.as_ref().map(|(i, b)| json!({"index": i, "b": b.to_string()})),
            "bimodule_failure": self.bimodule_failure.as_ref().map(|(i, b, c, a)| json!({
                "index": i, "b": b.to_string(), "b_prime": c.to_string(), "a": a.to_string(),
            })),
        })
    }
}

/// D2 quasi-bases `u_i = x_i ⊗ y_i`, `γ_i(a) = F(a x_i) y_i`, checked against
/// `x ⊗ y = Σ x γ_i(y) u_i`, `B`-centrality of `u_i` and the bimodule
/// property of `γ_i`. All three hold exactly when `H` is normal.
pub fn verify_d2_quasibases(g: &PermGroup, n: &PermGroup) -> Result<QuasiBasesReport> {
    let ext = FrobeniusExtension::new(g, n)?;
    let idx = ext.index();
    let u: Vec<TensorElement2<BigRational>> = (0..idx)
        .map(|i| ext.tensor2(&basis(ext.x(i)), &basis(ext.y(i))))
        .collect::<Result<_>>()?;
    let gamma = |i: usize, a: &RationalElement| {
        ext.frobenius_hom(&a.mul(&basis(ext.x(i))))
            .mul(&basis(ext.y(i)))
    };
    let elems = ext.group_basis()?;

    let mut counterexample = None;
    let mut pairs = 0;
    'outer: for x in elems {
        let xe = basis(x);
        for y in elems {
            pairs += 1;
            let ye = basis(y);
            let lhs = ext.tensor2(&xe, &ye)?;
            let mut rhs = TensorElement2::zero();
            for (i, ui) in u.iter().enumerate() {
                rhs = rhs.add(&ext.left_mul2(&xe.mul(&gamma(i, &ye)), ui)?);
            }
            if lhs != rhs {
                counterexample = Some((x.clone(), y.clone()));
                break 'outer;
            }
        }
    }

    let b_gens = n.generators();
    let mut central_failure = None;
    'central: for (i, ui) in u.iter().enumerate() {
        for b in b_gens {
            let be = basis(b);
            if ext.left_mul2(&be, ui)? != ext.right_mul2(ui, &be) {
                central_failure = Some((i, b.clone()));
                break 'central;
            }
        }
    }

    let mut bimodule_failure = None;
    'bimodule: for i in 0..idx {
        for b in b_gens {
            for c in b_gens {
                for a in elems {
                    let (be, ce, ae) = (basis(b), basis(c), basis(a));
                    if gamma(i, &be.mul(&ae).mul(&ce)) != be.mul(&gamma(i, &ae)).mul(&ce) {
                        bimodule_failure = Some((i, b.clone(), c.clone(), a.clone()));
                        break 'bimodule;
                    }
                }
            }
        }
    }

    Ok(QuasiBasesReport {
        identity: counterexample.is_none(),
        central: central_failure.is_none(),
        bimodule: bimodule_failure.is_none(),
        pairs_checked: pairs,
        counterexample,
        central_failure,
        bimodule_failure,
    })
}

/// D3 quasi-bases built from left D2 quasi-bases `t_i = x_i ⊗ y_i`,
/// `β_i(a) = x_i F(y_i a)`:
///
/// `u_i = Σ_k β_i(x_k) ⊗ y_k`, `t'_i = Σ_j t_i¹ ⊗ t_i² x_j ⊗ y_j`,
/// `u'_i = Σ_j x_j ⊗ y_j u_i¹ ⊗ u_i²`,
///
/// checked against `x ⊗ y = Σ_i t'¹_i ⊗ t'²_i F(t'³_i u'¹_i F(u'²_i F(u'³_i x) y))`
/// and `B`-centrality of every `t'_i`, `u'_i`. The extension is free over
/// `B`, which the construction needs.
pub fn verify_d3_from_d2(g: &PermGroup, n: &PermGroup) -> Result<QuasiBasesReport> {
    let ext = FrobeniusExtension::new(g, n)?;
    let idx = ext.index();
    let beta = |i: usize, a: &RationalElement| {
        basis(ext.x(i)).mul(&ext.frobenius_hom(&basis(ext.y(i)).mul(a)))
    };
    let t: Vec<TensorElement2<BigRational>> = (0..idx)
        .map(|i| ext.tensor2(&basis(ext.x(i)), &basis(ext.y(i))))
        .collect::<Result<_>>()?;
    let mut u = Vec::with_capacity(idx);
    for i in 0..idx {
        let mut ui = TensorElement2::zero();
        for k in 0..idx {
            ui = ui.add(&ext.tensor2(&beta(i, &basis(ext.x(k))), &basis(ext.y(k)))?);
        }
        u.push(ui);
    }
    let mut t3 = Vec::with_capacity(idx);
    let mut u3 = Vec::with_capacity(idx);
    for i in 0..idx {
        let mut tp = TensorElement3::zero();
        let mut up = TensorElement3::zero();
        for j in 0..idx {
            let (xj, yj) = (basis(ext.x(j)), basis(ext.y(j)));
            for (c, a1, a2) in ext.simple2(&t[i]) {
                let first = basis(a1).scale(&c);
                tp = tp.add(&ext.tensor3(&first, &basis(a2).mul(&xj), &yj)?);
            }
            for (c, b1, b2) in ext.simple2(&u[i]) {
                let last = basis(b2).scale(&c);
                up = up.add(&ext.tensor3(&xj, &yj.mul(&basis(b1)), &last)?);
            }
        }
        t3.push(tp);
        u3.push(up);
    }

    let elems = ext.group_basis()?;
    let mut counterexample = None;
    let mut pairs = 0;
    'outer: for x in elems {
        let xe = basis(x);
        for y in elems {
            pairs += 1;
            let ye = basis(y);
            let lhs = ext.tensor2(&xe, &ye)?;
            let mut rhs = TensorElement2::zero();
            for i in 0..idx {
                for (c, a1, a2, a3) in ext.simple3(&t3[i]) {
                    for (d, b1, b2, b3) in ext.simple3(&u3[i]) {
                        let inner = ext.frobenius_hom(&basis(b3).mul(&xe));
                        let mid = ext.frobenius_hom(&basis(b2).mul(&inner).mul(&ye));
                        let outer = ext.frobenius_hom(&basis(a3).mul(&basis(b1)).mul(&mid));
                        if outer.is_zero() {
                            continue;
                        }
                        let coeff = c.clone() * d.clone();
                        rhs = rhs
                            .add(&ext.tensor2(&basis(a1).scale(&coeff), &basis(a2).mul(&outer))?);
                    }
                }
            }
            if lhs != rhs {
                counterexample = Some((x.clone(), y.clone()));
                break 'outer;
            }
        }
    }

    let mut central_failure = None;
    'central: for i in 0..idx {
        for b in n.generators() {
            let be = basis(b);
            let bad_t = ext.left_mul3(&be, &t3[i])? != ext.right_mul3(&t3[i], &be);
            let bad_u = ext.left_mul3(&be, &u3[i])? != ext.right_mul3(&u3[i], &be);
            if bad_t || bad_u {
                central_failure = Some((i, b.clone()));
                break 'central;
            }
        }
    }

    Ok(QuasiBasesReport {
        identity: counterexample.is_none(),
        central: central_failure.is_none(),
        bimodule: true,
        pairs_checked: pairs,
        counterexample,
        central_failure,
        bimodule_failure: None,
    })
}

impl FrobeniusSystemReport {
    pub fn to_json(&self) -> Value {
        json!({
            "pass": self.holds,
            "counterexample": self.counterexample.as_ref().map(ToString::to_string),
        })
    }
}

impl SeparabilityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "pass": self.holds(),
            "central": self.central,
            "multiplies_to_one": self.multiplies_to_one,
            "counterexample": self.counterexample.as_ref().map(ToString::to_string),
        })
    }
}
