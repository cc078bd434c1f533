//! Dense polynomials over a small prime field `F_p`, just enough for
//! Berlekamp factorization and Hensel lifting. Coefficients ascend.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::IntPolynomial;

pub(crate) type PolyP = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn reduce(&self, f: &IntPolynomial) -> PolyP {
        let m = BigInt::from(self.p);
        let mut out: PolyP = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&m).to_u64().expect("reduced below p"))
            .collect();
        trim(&mut out);
        out
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        acc
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> PolyP {
        let mut out: PolyP = (0..a.len().max(b.len()))
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        trim(&mut out);
        out
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> PolyP {
        let mut out: PolyP = (0..a.len().max(b.len()))
            .map(|i| {
                (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0)) % self.p
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(&mut out);
        out
    }

    pub fn scale(&self, a: &[u64], c: u64) -> PolyP {
        let mut out: PolyP = a.iter().map(|&x| x * (c % self.p) % self.p).collect();
        trim(&mut out);
        out
    }

    /// Division with remainder; `b` must be nonzero.
    pub fn div_rem(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        let db = b.len() - 1;
        let inv_lead = self.inv(b[db]);
        let mut rem = a.to_vec();
        trim(&mut rem);
        if rem.len() <= db {
            return (Vec::new(), rem);
        }
        let mut quot = vec![0u64; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = rem[k + db] * inv_lead % self.p;
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (i, &y) in b.iter().enumerate() {
                rem[k + i] = (rem[k + i] + self.p - c * y % self.p) % self.p;
            }
        }
        trim(&mut rem);
        trim(&mut quot);
        (quot, rem)
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> PolyP {
        self.div_rem(a, b).1
    }

    pub fn monic(&self, a: &[u64]) -> PolyP {
        match a.last() {
            Some(&lead) => self.scale(a, self.inv(lead)),
            None => Vec::new(),
        }
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(s, t)` with `s·a + t·b = 1`, assuming `gcd(a, b) = 1`.
    pub fn bezout(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1): (PolyP, PolyP) = (vec![1], Vec::new());
        let (mut t0, mut t1): (PolyP, PolyP) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s2);
            t0 = core::mem::replace(&mut t1, t2);
        }
        // r0 is a nonzero constant
        let inv = self.inv(r0[0]);
        (self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn derivative(&self, a: &[u64]) -> PolyP {
        let mut out: PolyP = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| (k as u64 % self.p) * c % self.p)
            .collect();
        trim(&mut out);
        out
    }

    pub fn is_squarefree(&self, a: &[u64]) -> bool {
        let d = self.derivative(a);
        !d.is_empty() && self.gcd(a, &d).len() == 1
    }

    /// Complete factorization of a monic squarefree polynomial into monic
    /// irreducibles (Berlekamp). Output is sorted.
    pub fn berlekamp(&self, f: &[u64]) -> Vec<PolyP> {
        let n = f.len() - 1;
        if n <= 1 {
            return vec![f.to_vec()];
        }
        // Column i of the Berlekamp matrix holds x^(i·p) mod f.
        let xp = self.powmod(&[0, 1], self.p, f);
        let mut cols: Vec<PolyP> = Vec::with_capacity(n);
        let mut cur: PolyP = vec![1];
        for _ in 0..n {
            cols.push(cur.clone());
            cur = self.rem(&self.mul(&cur, &xp), f);
        }
        // matrix rows = coefficient index, columns = i; subtract identity
        let mut m: Vec<Vec<u64>> = (0..n)
            .map(|row| {
                (0..n)
                    .map(|col| {
                        let v = cols[col].get(row).copied().unwrap_or(0);
                        if row == col {
                            (v + self.p - 1) % self.p
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        let basis = self.nullspace(&mut m, n);
        let r = basis.len();
        let mut factors = vec![f.to_vec()];
        for v in basis.iter() {
            if factors.len() == r {
                break;
            }
            if v.len() <= 1 {
                continue;
            }
            let mut next = Vec::new();
            for g in factors.drain(..) {
                if g.len() <= 2 {
                    next.push(g);
                    continue;
                }
                let mut g = g;
                for s in 0..self.p {
                    if g.len() <= 2 {
                        break;
                    }
                    let shifted = self.sub(v, &[s]);
                    let d = self.gcd(&g, &shifted);
                    if d.len() > 1 && d.len() < g.len() {
                        g = self.div_rem(&g, &d).0;
                        next.push(d);
                    }
                }
                next.push(g);
            }
            factors = next;
        }
        debug_assert_eq!(factors.len(), r);
        let mut factors: Vec<PolyP> = factors.into_iter().map(|g| self.monic(&g)).collect();
        factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        factors
    }

    fn powmod(&self, base: &[u64], mut e: u64, f: &[u64]) -> PolyP {
        let mut acc: PolyP = vec![1];
        let mut b = self.rem(base, f);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &b), f);
            }
            b = self.rem(&self.mul(&b, &b), f);
            e >>= 1;
        }
        acc
    }

    fn nullspace(&self, m: &mut [Vec<u64>], n: usize) -> Vec<PolyP> {
        let mut pivot_col_of_row = Vec::new();
        let mut row = 0;
        let mut is_pivot = vec![false; n];
        for col in 0..n {
            let Some(pr) = (row..n).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(row, pr);
            let inv = self.inv(m[row][col]);
            for x in m[row].iter_mut() {
                *x = *x * inv % self.p;
            }
            for r in 0..n {
                if r != row && m[r][col] != 0 {
                    let c = m[r][col];
                    for k in 0..n {
                        m[r][k] = (m[r][k] + self.p - c * m[row][k] % self.p) % self.p;
                    }
                }
            }
            is_pivot[col] = true;
            pivot_col_of_row.push(col);
            row += 1;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (r, &pc) in pivot_col_of_row.iter().enumerate() {
                v[pc] = (self.p - m[r][free]) % self.p;
            }
            trim(&mut v);
            basis.push(v);
        }
        basis.sort_by_key(|v| v.len());
        basis
    }
}

pub(crate) fn trim(a: &mut PolyP) {
    while a.last() == Some(&0) {
        a.pop();
    }
}
