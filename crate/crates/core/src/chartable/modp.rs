//! Arithmetic, linear algebra and polynomial root finding over `F_p`.

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Least prime `p ≡ 1 (mod modulus)` with `p > lower`.
pub(crate) fn prime_above(modulus: u64, lower: u64) -> u64 {
    let mut p = lower.div_ceil(modulus) * modulus + 1;
    while !is_prime(p) {
        p += modulus;
    }
    p
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }
    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }
    #[cfg(test)]
    pub fn from_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    pub fn primitive_root(self) -> u64 {
        let n = self.p - 1;
        let mut factors = Vec::new();
        let mut m = n;
        let mut d = 2;
        while d * d <= m {
            if m % d == 0 {
                factors.push(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, n / q) != 1))
            .expect("prime field has a primitive root")
    }

    /// Row-reduces `rows` in place; returns pivot columns.
    pub fn rref(self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
                continue;
            };
            rows.swap(r, k);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for k in 0..rows.len() {
                if k != r && rows[k][c] != 0 {
                    let f = rows[k][c];
                    for j in 0..ncols {
                        let t = self.mul(f, rows[r][j]);
                        rows[k][j] = self.sub(rows[k][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of the right kernel `{c : m c = 0}` of a square matrix.
    pub fn kernel(self, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = m.first().map_or(0, Vec::len);
        let mut rows = m.to_vec();
        let pivots = self.rref(&mut rows);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; n];
                v[f] = 1;
                for (row, &pc) in rows.iter().zip(&pivots) {
                    v[pc] = self.sub(0, row[f]);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI - m)`, lowest degree first
    /// (Faddeev–LeVerrier; needs `p > n`).
    pub fn charpoly(self, m: &[Vec<u64>]) -> Vec<u64> {
        let n = m.len();
        let mut coeffs = vec![0u64; n + 1];
        coeffs[n] = 1;
        let mut mk = vec![vec![0u64; n]; n];
        for k in 1..=n {
            // mk = m * mk_prev + c_{n-k+1} I
            let mut next = vec![vec![0u64; n]; n];
            for i in 0..n {
                for l in 0..n {
                    if m[i][l] == 0 {
                        continue;
                    }
                    for j in 0..n {
                        next[i][j] = self.add(next[i][j], self.mul(m[i][l], mk[l][j]));
                    }
                }
                next[i][i] = self.add(next[i][i], coeffs[n - k + 1]);
            }
            mk = next;
            let mut tr = 0;
            for i in 0..n {
                for l in 0..n {
                    tr = self.add(tr, self.mul(m[i][l], mk[l][i]));
                }
            }
            let kinv = self.inv(k as u64);
            coeffs[n - k] = self.sub(0, self.mul(tr, kinv));
        }
        coeffs
    }

    fn trim(v: &mut Vec<u64>) {
        while v.len() > 1 && *v.last().expect("non-empty") == 0 {
            v.pop();
        }
    }

    fn poly_rem(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut r = a.to_vec();
        Self::trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = self.inv(b[db]);
        while r.len() > db && !(r.len() == 1 && r[0] == 0) {
            let dr = r.len() - 1;
            let f = self.mul(r[dr], lead_inv);
            for j in 0..=db {
                let t = self.mul(f, b[j]);
                r[dr - db + j] = self.sub(r[dr - db + j], t);
            }
            r.pop();
            Self::trim(&mut r);
            if db == 0 {
                return vec![0];
            }
        }
        r
    }

    fn poly_div(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        if r.len() <= db {
            return vec![0];
        }
        let lead_inv = self.inv(b[db]);
        let mut q = vec![0u64; r.len() - db];
        for k in (0..q.len()).rev() {
            let f = self.mul(r[k + db], lead_inv);
            q[k] = f;
            for j in 0..=db {
                let t = self.mul(f, b[j]);
                r[k + j] = self.sub(r[k + j], t);
            }
        }
        q
    }

    fn poly_mulmod(self, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = self.add(prod[i + j], self.mul(x, y));
            }
        }
        self.poly_rem(&prod, m)
    }

    fn poly_powmod(self, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
        let mut result = vec![1u64];
        let mut b = self.poly_rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                result = self.poly_mulmod(&result, &b, m);
            }
            b = self.poly_mulmod(&b, &b, m);
            e >>= 1;
        }
        result
    }

    fn poly_gcd(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        Self::trim(&mut a);
        Self::trim(&mut b);
        while !(b.len() == 1 && b[0] == 0) {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        let lead = self.inv(*a.last().expect("non-empty"));
        a.iter().map(|&x| self.mul(x, lead)).collect()
    }

    /// Distinct roots in `F_p` of `f`, ascending.
    pub fn roots(self, f: &[u64]) -> Vec<u64> {
        let mut f = f.to_vec();
        Self::trim(&mut f);
        if f.len() <= 1 {
            return Vec::new();
        }
        // g = gcd(f, x^p - x) is the product of (x - r) over distinct roots
        let xp = self.poly_powmod(&[0, 1], self.p, &f);
        let mut xp_minus_x = xp.clone();
        xp_minus_x.resize(xp_minus_x.len().max(2), 0);
        xp_minus_x[1] = self.sub(xp_minus_x[1], 1);
        let g = self.poly_gcd(&f, &xp_minus_x);
        let mut out = Vec::new();
        self.split(g, &mut out);
        out.sort_unstable();
        out
    }

    fn split(self, g: Vec<u64>, out: &mut Vec<u64>) {
        match g.len() {
            0 | 1 => {}
            2 => out.push(self.sub(0, self.mul(g[0], self.inv(g[1])))),
            _ => {
                for a in 0..self.p {
                    let h = self.poly_powmod(&[a, 1], (self.p - 1) / 2, &g);
                    let mut h1 = h.clone();
                    h1[0] = self.sub(h1[0], 1);
                    let d = self.poly_gcd(&g, &h1);
                    if d.len() > 1 && d.len() < g.len() {
                        let rest = self.poly_div(&g, &d);
                        self.split(d, out);
                        self.split(rest, out);
                        return;
                    }
                }
                unreachable!("squarefree split polynomial failed to factor");
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert_eq!(prime_above(1, 2), 3);
        assert_eq!(prime_above(2, 12), 13);
        assert_eq!(prime_above(60, 1440), 1621);
        assert!(is_prime(1621));
    }

    #[test]
    fn roots_of_split_polynomial() {
        let f = Field { p: 101 };
        // (x-3)^2 (x-7)(x-50)
        let mut poly = vec![1u64];
        for r in [3u64, 3, 7, 50] {
            let mut next = vec![0u64; poly.len() + 1];
            for (i, &c) in poly.iter().enumerate() {
                next[i + 1] = f.add(next[i + 1], c);
                next[i] = f.sub(next[i], f.mul(c, r));
            }
            poly = next;
        }
        assert_eq!(f.roots(&poly), vec![3, 7, 50]);
        // 2 is a non-residue mod 101
        assert!(f.roots(&[99, 0, 1]).is_empty());
    }

    #[test]
    fn charpoly_and_kernel() {
        let f = Field { p: 13 };
        let m = vec![vec![2, 1], vec![1, 2]];
        // x^2 - 4x + 3
        assert_eq!(f.charpoly(&m), vec![3, f.from_i64(-4), 1]);
        let k = f.kernel(&[vec![f.sub(2, 3), 1], vec![1, f.sub(2, 3)]]);
        assert_eq!(k, vec![vec![1, 1]]);
    }
}
