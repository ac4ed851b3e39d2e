//! Elements of `Z[ζ_e]` (or `Q(ζ_e)` with rational coefficients).
//!
//! An element is a coefficient vector on the power basis `1, ζ, …, ζ^{φ(e)-1}`
//! obtained by reducing modulo the cyclotomic polynomial `Φ_e`. The basis is
//! genuine, so equality is coefficient equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

/// Coefficient ring for [`Cyclotomic`].
pub trait Coefficient:
    Clone + Ord + Num + Signed + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display
{
}

impl<T> Coefficient for T where
    T: Clone + Ord + Num + Signed + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display
{
}

fn poly_cache() -> &'static RwLock<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    if let Some(p) = poly_cache().read().expect("poly cache").get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_polynomial(d);
            num = exact_div(&num, &den);
        }
    }
    let p = Arc::new(num);
    poly_cache()
        .write()
        .expect("poly cache")
        .insert(n, p.clone());
    p
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// An element of the `e`-th cyclotomic ring with coefficients in `T`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic<T> {
    order: u64,
    coeffs: Vec<T>,
}

impl<T: Coefficient> Cyclotomic<T> {
    pub fn zero(order: u64) -> Self {
        Self {
            order,
            coeffs: vec![T::zero(); euler_phi(order) as usize],
        }
    }

    pub fn from_integer(order: u64, value: T) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = value;
        z
    }

    pub fn one(order: u64) -> Self {
        Self::from_integer(order, T::one())
    }

    /// `ζ_e^k`.
    pub fn root_power(order: u64, k: i64) -> Self {
        let mut raw = vec![T::zero(); order as usize];
        raw[k.rem_euclid(order as i64) as usize] = T::one();
        Self::reduce(order, raw)
    }

    /// Reduces an arbitrary coefficient vector on powers of `ζ_e` to normal form.
    pub fn reduce(order: u64, raw: Vec<T>) -> Self {
        let e = order as usize;
        let mut folded = vec![T::zero(); e];
        for (k, c) in raw.into_iter().enumerate() {
            let slot = &mut folded[k % e];
            *slot = slot.clone() + c;
        }
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        for k in (deg..e).rev() {
            let c = std::mem::replace(&mut folded[k], T::zero());
            if c.is_zero() {
                continue;
            }
            for (j, &pj) in phi[..deg].iter().enumerate() {
                if pj != 0 {
                    let t = T::from_i64(pj).expect("small coefficient") * c.clone();
                    folded[k - deg + j] = folded[k - deg + j].clone() - t;
                }
            }
        }
        folded.truncate(deg);
        Self {
            order,
            coeffs: folded,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as an element of `T`, when it is rational.
    pub fn as_rational(&self) -> Option<T> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the element in the `target`-th cyclotomic ring
    /// (`ζ_e = ζ_target^{target/e}`). `target` must be a multiple of the order.
    pub fn lift(&self, target: u64) -> Self {
        assert!(
            target % self.order == 0,
            "cannot lift order {} to {target}",
            self.order
        );
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut raw = vec![T::zero(); target as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[k * step] = c.clone();
        }
        Self::reduce(target, raw)
    }

    /// Galois action `ζ ↦ ζ^a` for `a` coprime to the order.
    pub fn galois(&self, a: i64) -> Self {
        let e = self.order as i64;
        let mut raw = vec![T::zero(); self.order as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            let idx = (k as i64 * a).rem_euclid(e) as usize;
            raw[idx] = raw[idx].clone() + c.clone();
        }
        Self::reduce(self.order, raw)
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let e = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let angle = 2.0 * std::f64::consts::PI * k as f64 / e;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let l = num_integer::lcm(a.order, b.order);
        (a.lift(l), b.lift(l))
    }

    fn mul_same(&self, other: &Self) -> Self {
        let e = self.order as usize;
        let mut raw = vec![T::zero(); e];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % e;
                raw[k] = raw[k].clone() + a.clone() * b.clone();
            }
        }
        Self::reduce(self.order, raw)
    }
}

impl<T: Coefficient> Add for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn add(self, rhs: Self) -> Cyclotomic<T> {
        let (a, b) = Cyclotomic::common(self, rhs);
        Cyclotomic {
            order: a.order,
            coeffs: a
                .coeffs
                .into_iter()
                .zip(b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }
}

impl<T: Coefficient> Sub for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn sub(self, rhs: Self) -> Cyclotomic<T> {
        let (a, b) = Cyclotomic::common(self, rhs);
        Cyclotomic {
            order: a.order,
            coeffs: a
                .coeffs
                .into_iter()
                .zip(b.coeffs)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }
}

impl<T: Coefficient> Mul for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn mul(self, rhs: Self) -> Cyclotomic<T> {
        let (a, b) = Cyclotomic::common(self, rhs);
        a.mul_same(&b)
    }
}

impl<T: Coefficient> Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

/// Orders by ring order, then lexicographically by coefficient vector.
impl<T: Coefficient> PartialOrd for Cyclotomic<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Coefficient> Ord for Cyclotomic<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

/// Integers print plainly; other values as sums of `E(e)^k` terms.
impl<T: Coefficient> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "E({})^{k}", self.order)?,
                (_, false) => write!(f, "{mag}*E({})^{k}", self.order)?,
            }
        }
        Ok(())
    }
}

impl<T: Coefficient> fmt::Debug for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
