//! Finite permutation groups.
//!
//! A [`PermGroup`] carries a base and strong generating set built by the
//! deterministic Schreier–Sims algorithm; order and membership come from the
//! stabiliser chain. Everything that needs explicit elements (classes,
//! cosets, fusion) enumerates the group once, in lexicographic order on image
//! arrays, subject to an enumeration bound.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the number of elements a group may have before explicit
/// enumeration is refused.
pub const DEFAULT_MAX_ORDER: u64 = 100_000;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(degree: usize, base_point: usize, gens: Vec<Permutation>) -> Self {
        let mut level = Self {
            base_point,
            gens,
            transversal: vec![None; degree],
            orbit: Vec::new(),
        };
        level.rebuild_orbit();
        level
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.base_point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.base_point];
        let mut k = 0;
        while k < self.orbit.len() {
            let b = self.orbit[k];
            let ub = self.transversal[b]
                .clone()
                .expect("orbit point has a transversal");
            for s in &self.gens {
                let c = s.apply(b);
                if self.transversal[c].is_none() {
                    self.transversal[c] = Some(s * &ub);
                    self.orbit.push(c);
                }
            }
            k += 1;
        }
    }
}

/// Base and strong generating set.
#[derive(Clone, Debug)]
struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    fn build(degree: usize, generators: &[Permutation]) -> Self {
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();

        let mut base: Vec<usize> = Vec::new();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved().expect("non-identity moves a point"));
            }
        }
        let mut levels: Vec<Level> = (0..base.len())
            .map(|l| {
                let fixing = gens
                    .iter()
                    .filter(|g| base[..l].iter().all(|&b| g.apply(b) == b))
                    .cloned()
                    .collect();
                Level::new(degree, base[l], fixing)
            })
            .collect();

        let mut i = levels.len() as isize - 1;
        'outer: while i >= 0 {
            let l = i as usize;
            let orbit = levels[l].orbit.clone();
            let level_gens = levels[l].gens.clone();
            for &b in &orbit {
                let ub = levels[l].transversal[b].clone().expect("orbit point");
                for s in &level_gens {
                    let usb = levels[l].transversal[s.apply(b)]
                        .clone()
                        .expect("orbit closed");
                    let schreier = &(&usb.inverse() * s) * &ub;
                    let (h, j) = strip(&levels, schreier, l + 1);
                    if j < levels.len() || !h.is_identity() {
                        if j == levels.len() {
                            let point = h.first_moved().expect("non-identity residue");
                            levels.push(Level::new(degree, point, Vec::new()));
                        }
                        for level in &mut levels[l + 1..=j] {
                            level.gens.push(h.clone());
                            level.rebuild_orbit();
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
        Self { degree, levels }
    }

    fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = strip(&self.levels, g.clone(), 0);
        j == self.levels.len() && h.is_identity()
    }

    /// All elements as products `u_0 u_1 ⋯ u_{k-1}` of transversal elements.
    fn enumerate(&self) -> Vec<Permutation> {
        let mut elems = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for &b in &level.orbit {
                let u = level.transversal[b].as_ref().expect("orbit point");
                next.extend(elems.iter().map(|e| u * e));
            }
            elems = next;
        }
        elems
    }
}

/// Sifts `g` through levels `start..`; returns the residue and the index of
/// the first level where sifting stopped (`levels.len()` if it went through).
fn strip(levels: &[Level], mut g: Permutation, start: usize) -> (Permutation, usize) {
    for (j, level) in levels.iter().enumerate().skip(start) {
        let b = g.apply(level.base_point);
        match &level.transversal[b] {
            Some(u) => g = &u.inverse() * &g,
            None => return (g, j),
        }
    }
    (g, levels.len())
}

struct ElementIndex {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

/// Conjugacy classes of an enumerated group.
///
/// The identity class comes first; the rest are ordered by the element order
/// of their members, then by their least element.
#[derive(Clone, Debug)]
pub struct ClassPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    reps: Vec<Permutation>,
    element_orders: Vec<u64>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Element indices (into [`PermGroup::elements`]) of class `c`, ascending.
    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    /// Least element of each class.
    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn representative(&self, c: usize) -> &Permutation {
        &self.reps[c]
    }

    pub fn element_order(&self, c: usize) -> u64 {
        self.element_orders[c]
    }

    /// Class index of the element with the given element index.
    pub fn class_of_index(&self, element: usize) -> usize {
        self.class_of[element]
    }
}

struct GroupInner {
    degree: usize,
    generators: Vec<Permutation>,
    bsgs: Bsgs,
    order: BigUint,
    max_order: u64,
    elements: OnceLock<ElementIndex>,
    classes: OnceLock<ClassPartition>,
}

/// A finite permutation group. Cheap to clone; immutable once built.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<GroupInner>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(order {}, gens [", self.inner.order)?;
        for (k, g) in self.inner.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_bound(degree, generators, DEFAULT_MAX_ORDER)
    }

    fn with_bound(degree: usize, generators: Vec<Permutation>, max_order: u64) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        let bsgs = Bsgs::build(degree, &generators);
        let order = bsgs.order();
        Ok(Self {
            inner: Arc::new(GroupInner {
                degree,
                generators,
                bsgs,
                order,
                max_order,
                elements: OnceLock::new(),
                classes: OnceLock::new(),
            }),
        })
    }

    /// Group generated by a non-empty list of same-degree permutations.
    pub fn from_generators(generators: Vec<Permutation>) -> Result<Self> {
        let degree = generators
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| Error::InvalidInput("empty generator list without a degree".into()))?;
        Self::new(degree, generators)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("no generators")
    }

    /// Same group with a different enumeration bound.
    pub fn with_max_order(&self, max_order: u64) -> Self {
        Self {
            inner: Arc::new(GroupInner {
                degree: self.inner.degree,
                generators: self.inner.generators.clone(),
                bsgs: self.inner.bsgs.clone(),
                order: self.inner.order.clone(),
                max_order,
                elements: OnceLock::new(),
                classes: OnceLock::new(),
            }),
        }
    }

    /// Subgroup generated by `gens`, sharing this group's degree and bound.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<Self> {
        Self::with_bound(self.inner.degree, gens, self.inner.max_order)
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.inner.order
    }

    pub fn max_order(&self) -> u64 {
        self.inner.max_order
    }

    pub fn base(&self) -> Vec<usize> {
        self.inner
            .bsgs
            .levels
            .iter()
            .map(|l| l.base_point)
            .collect()
    }

    /// Distinct strong generators across all stabiliser-chain levels.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let set: BTreeSet<Permutation> = self
            .inner
            .bsgs
            .levels
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect();
        set.into_iter().collect()
    }

    /// Fundamental orbit lengths; their product is the order.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.inner
            .bsgs
            .levels
            .iter()
            .map(|l| l.orbit.len())
            .collect()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.inner.bsgs.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.contains(g))
    }

    /// Fails with [`Error::OrderBound`] if the order exceeds the bound.
    pub fn check_bound(&self) -> Result<usize> {
        match self.inner.order.to_u64() {
            Some(n) if n <= self.inner.max_order => Ok(n as usize),
            _ => Err(Error::OrderBound {
                order: self.inner.order.to_string(),
                bound: self.inner.max_order,
            }),
        }
    }

    fn element_index(&self) -> Result<&ElementIndex> {
        if let Some(idx) = self.inner.elements.get() {
            return Ok(idx);
        }
        self.check_bound()?;
        let mut elements = self.inner.bsgs.enumerate();
        elements.sort_unstable();
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, e)| (e.clone(), k))
            .collect();
        Ok(self
            .inner
            .elements
            .get_or_init(|| ElementIndex { elements, index }))
    }

    /// All elements in lexicographic order; the identity is first.
    pub fn elements(&self) -> Result<&[Permutation]> {
        Ok(&self.element_index()?.elements)
    }

    /// Number of elements, enumerating if needed.
    pub fn size(&self) -> Result<usize> {
        Ok(self.element_index()?.elements.len())
    }

    pub fn index_of(&self, g: &Permutation) -> Result<Option<usize>> {
        Ok(self.element_index()?.index.get(g).copied())
    }

    pub fn conjugacy_classes(&self) -> Result<&ClassPartition> {
        if let Some(c) = self.inner.classes.get() {
            return Ok(c);
        }
        let part = self.compute_classes()?;
        Ok(self.inner.classes.get_or_init(|| part))
    }

    /// Class index of `g`, or `None` if `g` is not in the group.
    pub fn class_of(&self, g: &Permutation) -> Result<Option<usize>> {
        let classes = self.conjugacy_classes()?;
        Ok(self.index_of(g)?.map(|k| classes.class_of[k]))
    }

    fn compute_classes(&self) -> Result<ClassPartition> {
        let idx = self.element_index()?;
        let n = idx.elements.len();
        let mut assigned = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if assigned[start] != usize::MAX {
                continue;
            }
            let c = raw.len();
            assigned[start] = c;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(k) = queue.pop_front() {
                for g in self.generators() {
                    let y = idx.elements[k].conjugate_by(g);
                    let j = idx.index[&y];
                    if assigned[j] == usize::MAX {
                        assigned[j] = c;
                        members.push(j);
                        queue.push_back(j);
                    }
                }
            }
            members.sort_unstable();
            raw.push(members);
        }
        // raw[0] is the identity class; the others are sorted by element order, then least element
        let mut order: Vec<usize> = (0..raw.len()).collect();
        let elem_order: Vec<u64> = raw.iter().map(|m| idx.elements[m[0]].order()).collect();
        order.sort_by_key(|&c| (elem_order[c], raw[c][0]));
        let mut class_of = vec![0; n];
        let mut classes = Vec::with_capacity(raw.len());
        let mut reps = Vec::with_capacity(raw.len());
        let mut element_orders = Vec::with_capacity(raw.len());
        for (new, &old) in order.iter().enumerate() {
            for &k in &raw[old] {
                class_of[k] = new;
            }
            reps.push(idx.elements[raw[old][0]].clone());
            element_orders.push(elem_order[old]);
            classes.push(std::mem::take(&mut raw[old]));
        }
        Ok(ClassPartition {
            classes,
            class_of,
            reps,
            element_orders,
        })
    }

    /// Subgroup whose elements are exactly `elements`, which must be closed
    /// under multiplication; generators are picked greedily in the given order.
    pub fn subgroup_from_elements(&self, elements: &[Permutation]) -> Result<PermGroup> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = self.subgroup(Vec::new())?;
        for e in elements {
            if !current.contains(e) {
                gens.push(e.clone());
                current = self.subgroup(gens.clone())?;
            }
        }
        let expected = BigUint::from(elements.iter().collect::<BTreeSet<_>>().len());
        if *current.order() != expected {
            return Err(Error::InvalidInput(format!(
                "element set of size {expected} is not closed (generates order {})",
                current.order()
            )));
        }
        Ok(current)
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> Result<u64> {
        let classes = self.conjugacy_classes()?;
        Ok(classes
            .element_orders
            .iter()
            .fold(1, |acc, &o| num_integer::lcm(acc, o)))
    }
}

pub(crate) fn ensure_subgroup(g: &PermGroup, h: &PermGroup) -> Result<()> {
    if g.degree() != h.degree() {
        return Err(Error::NotSubgroup(format!(
            "degree {} vs degree {}",
            h.degree(),
            g.degree()
        )));
    }
    if let Some(x) = h.generators().iter().find(|x| !g.contains(x)) {
        return Err(Error::NotSubgroup(format!(
            "generator {x} is not in the parent group"
        )));
    }
    Ok(())
}

/// Representatives `g_1 = 1, g_2, …` with `G = ⊔ g_i H`, each the least
/// element of its coset.
pub fn left_transversal(g: &PermGroup, h: &PermGroup) -> Result<Vec<Permutation>> {
    ensure_subgroup(g, h)?;
    let elems = g.elements()?;
    let h_elems = h.elements()?;
    let mut covered = vec![false; elems.len()];
    let mut reps = Vec::new();
    for (k, x) in elems.iter().enumerate() {
        if covered[k] {
            continue;
        }
        reps.push(x.clone());
        for y in h_elems {
            let j = g.index_of(&(x * y))?.expect("coset inside G");
            covered[j] = true;
        }
    }
    Ok(reps)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    pub rep: Permutation,
    pub size: usize,
}

/// Double cosets `H r K` partitioning `G`, in order of least element; the
/// one containing the identity comes first.
pub fn double_cosets(g: &PermGroup, h: &PermGroup, k: &PermGroup) -> Result<Vec<DoubleCoset>> {
    ensure_subgroup(g, h)?;
    ensure_subgroup(g, k)?;
    let elems = g.elements()?;
    let h_elems = h.elements()?;
    let k_elems = k.elements()?;
    let mut covered = vec![false; elems.len()];
    let mut out = Vec::new();
    for (idx, x) in elems.iter().enumerate() {
        if covered[idx] {
            continue;
        }
        let xk: Vec<Permutation> = k_elems.iter().map(|y| x * y).collect();
        let mut size = 0;
        for a in h_elems {
            for b in &xk {
                let j = g.index_of(&(a * b))?.expect("double coset inside G");
                if !covered[j] {
                    covered[j] = true;
                    size += 1;
                }
            }
        }
        out.push(DoubleCoset {
            rep: x.clone(),
            size,
        });
    }
    Ok(out)
}

/// `H ∩ K` for two subgroups of a common group.
pub fn intersection(h: &PermGroup, k: &PermGroup) -> Result<PermGroup> {
    if h.degree() != k.degree() {
        return Err(Error::DegreeMismatch {
            expected: h.degree(),
            found: k.degree(),
        });
    }
    let (small, large) = if h.order() <= k.order() {
        (h, k)
    } else {
        (k, h)
    };
    let common: Vec<Permutation> = small
        .elements()?
        .iter()
        .filter(|x| large.contains(x))
        .cloned()
        .collect();
    small.subgroup_from_elements(&common)
}

/// Largest subgroup of `H` normal in `G`: the intersection of all conjugates `gHg⁻¹`.
pub fn normal_core(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let reps = left_transversal(g, h)?;
    let core: Vec<Permutation> = h
        .elements()?
        .iter()
        .filter(|x| {
            reps.iter()
                .all(|t| h.contains(&x.conjugate_by(&t.inverse())))
        })
        .cloned()
        .collect();
    h.subgroup_from_elements(&core)
}

/// Smallest normal subgroup of `G` containing `H`.
pub fn normal_closure(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    ensure_subgroup(g, h)?;
    let mut gens: Vec<Permutation> = h.generators().to_vec();
    let mut closure = g.subgroup(gens.clone())?;
    loop {
        let mut grew = false;
        for n in gens.clone() {
            for x in g.generators() {
                let c = n.conjugate_by(x);
                if !closure.contains(&c) {
                    gens.push(c);
                    closure = g.subgroup(gens.clone())?;
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(closure);
        }
    }
}

/// `gHg⁻¹ = H` for every generator `g` of `G`.
pub fn is_normal(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    ensure_subgroup(g, h)?;
    Ok(g.generators().iter().all(|x| {
        h.generators()
            .iter()
            .all(|y| h.contains(&y.conjugate_by(x)))
    }))
}

/// Every subgroup of `G`, found by joining cyclic subgroups until no new
/// subgroup appears. Sorted by order, then by element set.
pub fn all_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let elems = g.elements()?;
    let n = elems.len();
    let mul = |a: usize, b: usize| -> usize {
        g.index_of(&(&elems[a] * &elems[b]))
            .expect("enumerated")
            .expect("closed")
    };
    let closure = |gens: &[usize]| -> Vec<usize> {
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut members = vec![0usize];
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            for &s in gens {
                let y = mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        members
    };

    let mut found: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut cyclic: Vec<(usize, Vec<usize>)> = Vec::new();
    for x in 0..n {
        let set = closure(&[x]);
        if !found.contains_key(&set) {
            found.insert(set.clone(), if x == 0 { vec![] } else { vec![x] });
            cyclic.push((x, set));
        }
    }
    let mut frontier: Vec<Vec<usize>> = found.keys().cloned().collect();
    frontier.sort();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for set in &frontier {
            let gens = found[set].clone();
            for (x, cset) in &cyclic {
                if cset.iter().all(|c| set.binary_search(c).is_ok()) {
                    continue;
                }
                let mut joined_gens = gens.clone();
                joined_gens.push(*x);
                let joined = closure(&joined_gens);
                if !found.contains_key(&joined) {
                    found.insert(joined.clone(), joined_gens);
                    next.push(joined);
                }
            }
        }
        next.sort();
        frontier = next;
    }

    let mut subgroups: Vec<(Vec<usize>, Vec<usize>)> = found.into_iter().collect();
    subgroups.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    subgroups
        .into_iter()
        .map(|(_, gens)| g.subgroup(gens.iter().map(|&k| elems[k].clone()).collect()))
        .collect()
}
