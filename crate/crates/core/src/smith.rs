//! Smith normal form over `Z` and over `Z/N`.
//!
//! Both variants share one elimination routine. Over `Z/N` the entries are
//! kept as representatives in `[0, N)` and every transformation has
//! determinant 1, so the result is the Smith form of the integer lift with
//! the relations `N e_i` appended.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Ring operations needed by the elimination.
trait SnfRing {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Size used for pivot selection; smaller is preferred.
    fn size(&self, a: &Self::E) -> u128;
    /// Returns `(g, s, t, alpha, beta)` with `g = s a + t b`, `a = alpha g`,
    /// `b = beta g` and `s alpha + t beta = 1`. When `a` divides `b` it must
    /// return `s = 1, t = 0`.
    fn xgcd(&self, a: &Self::E, b: &Self::E) -> (Self::E, Self::E, Self::E, Self::E, Self::E);
    /// Whether `a` divides `b` in the sense of the invariant factor chain.
    fn chain_divides(&self, a: &Self::E, b: &Self::E) -> bool;
}

struct Integers;

impl SnfRing for Integers {
    type E = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn size(&self, a: &BigInt) -> u128 {
        let bits = a.bits();
        if bits < 120 {
            u128::try_from(a.abs()).unwrap_or(u128::MAX)
        } else {
            u128::MAX
        }
    }
    fn xgcd(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt, BigInt, BigInt) {
        if (b % a).is_zero() {
            return (a.clone(), BigInt::one(), BigInt::zero(), BigInt::one(), b / a);
        }
        let e = a.extended_gcd(b);
        let g = e.gcd;
        (g.clone(), e.x, e.y, a / &g, b / &g)
    }
    fn chain_divides(&self, a: &BigInt, b: &BigInt) -> bool {
        if a.is_zero() {
            return b.is_zero();
        }
        (b % a).is_zero()
    }
}

struct ModN(u64);

impl ModN {
    fn red(&self, x: i128) -> u64 {
        x.rem_euclid(self.0 as i128) as u64
    }
}

impl SnfRing for ModN {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.0 as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a % self.0) % self.0
    }
    fn size(&self, a: &u64) -> u128 {
        *a as u128
    }
    fn xgcd(&self, a: &u64, b: &u64) -> (u64, u64, u64, u64, u64) {
        let (a, b) = (*a, *b);
        if b % a == 0 {
            return (a, 1, 0, 1, b / a);
        }
        let (g, s, t) = xgcd_i128(a as i128, b as i128);
        (g as u64, self.red(s), self.red(t), a / g as u64, b / g as u64)
    }
    fn chain_divides(&self, a: &u64, b: &u64) -> bool {
        let ga = gcd_u64(*a, self.0);
        let gb = gcd_u64(*b, self.0);
        gb.is_multiple_of(ga)
    }
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

fn xgcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Working state of one elimination.
struct Elim<'r, R: SnfRing> {
    r: &'r R,
    a: Vec<Vec<R::E>>,
    u: Option<Vec<Vec<R::E>>>,
    v: Option<Vec<Vec<R::E>>>,
    vinv: Option<Vec<Vec<R::E>>>,
}

impl<R: SnfRing> Elim<'_, R> {
    fn rows(&self) -> usize {
        self.a.len()
    }
    fn cols(&self) -> usize {
        self.a.first().map_or(0, |r| r.len())
    }

    /// rows (i, j) <- (s r_i + t r_j, -beta r_i + alpha r_j)
    fn row_op(&mut self, i: usize, j: usize, c: &(R::E, R::E, R::E, R::E, R::E)) {
        let r = self.r;
        let (_, s, t, al, be) = c;
        let nbe = r.neg(be);
        let comb = |m: &mut Vec<Vec<R::E>>| {
            for k in 0..m[i].len() {
                let x = m[i][k].clone();
                let y = m[j][k].clone();
                if r.is_zero(&x) && r.is_zero(&y) {
                    continue;
                }
                m[i][k] = r.add(&r.mul(s, &x), &r.mul(t, &y));
                m[j][k] = r.add(&r.mul(&nbe, &x), &r.mul(al, &y));
            }
        };
        comb(&mut self.a);
        if let Some(u) = self.u.as_mut() {
            comb(u);
        }
    }

    /// cols (i, j) <- (s c_i + t c_j, -beta c_i + alpha c_j)
    fn col_op(&mut self, i: usize, j: usize, c: &(R::E, R::E, R::E, R::E, R::E)) {
        let r = self.r;
        let (_, s, t, al, be) = c;
        let nbe = r.neg(be);
        let comb = |m: &mut Vec<Vec<R::E>>| {
            for row in m.iter_mut() {
                let x = row[i].clone();
                let y = row[j].clone();
                if r.is_zero(&x) && r.is_zero(&y) {
                    continue;
                }
                row[i] = r.add(&r.mul(s, &x), &r.mul(t, &y));
                row[j] = r.add(&r.mul(&nbe, &x), &r.mul(al, &y));
            }
        };
        comb(&mut self.a);
        if let Some(v) = self.v.as_mut() {
            comb(v);
        }
        if let Some(vi) = self.vinv.as_mut() {
            // The inverse of [[s, -beta], [t, alpha]] is [[alpha, beta], [-t, s]],
            // applied to rows i, j of V^{-1}.
            let nt = r.neg(t);
            for k in 0..vi[i].len() {
                let x = vi[i][k].clone();
                let y = vi[j][k].clone();
                if r.is_zero(&x) && r.is_zero(&y) {
                    continue;
                }
                vi[i][k] = r.add(&r.mul(al, &x), &r.mul(be, &y));
                vi[j][k] = r.add(&r.mul(&nt, &x), &r.mul(s, &y));
            }
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(u) = self.u.as_mut() {
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        if let Some(v) = self.v.as_mut() {
            for row in v.iter_mut() {
                row.swap(i, j);
            }
        }
        if let Some(vi) = self.vinv.as_mut() {
            vi.swap(i, j);
        }
    }

    /// Clears row and column `t` assuming `a[t][t]` is nonzero.
    fn clear(&mut self, t: usize) {
        let (m, n) = (self.rows(), self.cols());
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if !self.r.is_zero(&self.a[i][t]) {
                    let c = self.r.xgcd(&self.a[t][t], &self.a[i][t]);
                    self.row_op(t, i, &c);
                }
            }
            for j in t + 1..n {
                if !self.r.is_zero(&self.a[t][j]) {
                    let c = self.r.xgcd(&self.a[t][t], &self.a[t][j]);
                    self.col_op(t, j, &c);
                }
            }
            for i in t + 1..m {
                if !self.r.is_zero(&self.a[i][t]) {
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
    }

    fn run(&mut self) {
        let (m, n) = (self.rows(), self.cols());
        let k = m.min(n);
        for t in 0..k {
            let mut best: Option<(u128, usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let e = &self.a[i][j];
                    if !self.r.is_zero(e) {
                        let s = self.r.size(e);
                        if best.is_none_or(|b| s < b.0) {
                            best = Some((s, i, j));
                        }
                    }
                }
            }
            let Some((_, i, j)) = best else { break };
            self.swap_rows(t, i);
            self.swap_cols(t, j);
            self.clear(t);
        }
        // Enforce the divisibility chain.
        loop {
            let mut changed = false;
            for i in 0..k {
                for j in i + 1..k {
                    let (di, dj) = (self.a[i][i].clone(), self.a[j][j].clone());
                    if self.r.chain_divides(&di, &dj) {
                        continue;
                    }
                    if self.r.is_zero(&di) {
                        self.swap_rows(i, j);
                        self.swap_cols(i, j);
                    } else {
                        // row_i += row_j, then re-eliminate.
                        let one = self.r.one();
                        let zero = self.r.zero();
                        // (s, t, alpha, beta) = (1, 1, 1, 0): row_i <- row_i + row_j.
                        let c = (one.clone(), one.clone(), one.clone(), one, zero);
                        self.row_op(i, j, &c);
                        self.clear(i);
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }
}

fn identity<R: SnfRing>(r: &R, n: usize) -> Vec<Vec<R::E>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { r.one() } else { r.zero() }).collect())
        .collect()
}

/// `U A V = D` over the integers, with `U`, `V` unimodular and `D` diagonal
/// with nonnegative entries `d_1 | d_2 | ...`.
#[derive(Clone, Debug, PartialEq)]
pub struct SmithDecomposition {
    pub u: Vec<Vec<BigInt>>,
    pub d: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
}

impl SmithDecomposition {
    /// Diagonal entries, including zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.len().min(self.d.first().map_or(0, |r| r.len()));
        (0..k).map(|i| self.d[i][i].clone()).collect()
    }

    /// Nonzero diagonal entries different from 1.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect()
    }
}

/// Smith normal form of an integer matrix.
pub fn smith_normal_form(a: &[Vec<BigInt>]) -> SmithDecomposition {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let r = Integers;
    let mut e = Elim {
        r: &r,
        a: a.to_vec(),
        u: Some(identity(&r, m)),
        v: Some(identity(&r, n)),
        vinv: None,
    };
    e.run();
    let mut u = e.u.take().unwrap();
    let mut d = e.a;
    for i in 0..m.min(n) {
        if d[i][i].is_negative() {
            d[i][i] = -d[i][i].clone();
            for x in u[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    SmithDecomposition { u, d, v: e.v.unwrap() }
}

/// Smith form over `Z/N`: `U A V = diag(d)` with every `d_i` a divisor of
/// `N` (so `d_i = N` stands for the zero entry).
#[derive(Clone, Debug)]
pub struct ModSmith {
    pub modulus: u64,
    /// Diagonal entries, each a divisor of the modulus, length `min(m, n)`.
    pub diag: Vec<u64>,
    pub u: Option<Vec<Vec<u64>>>,
    pub v: Vec<Vec<u64>>,
    pub v_inv: Vec<Vec<u64>>,
}

/// Smith form of a matrix with entries in `[0, n)`.
pub fn smith_mod(a: Vec<Vec<u64>>, n: u64, track_u: bool) -> ModSmith {
    assert!(n >= 1);
    let m = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    if n == 1 {
        return ModSmith {
            modulus: 1,
            diag: vec![1; m.min(cols)],
            u: track_u.then(|| vec![vec![0; m]; m]),
            v: vec![vec![0; cols]; cols],
            v_inv: vec![vec![0; cols]; cols],
        };
    }
    let r = ModN(n);
    let mut e = Elim {
        r: &r,
        a,
        u: track_u.then(|| identity(&r, m)),
        v: Some(identity(&r, cols)),
        vinv: Some(identity(&r, cols)),
    };
    e.run();
    let k = m.min(cols);
    let mut diag = Vec::with_capacity(k);
    for i in 0..k {
        let d = e.a[i][i];
        let g = gcd_u64(d, n);
        // d = unit * g; rescale row i of U by the inverse unit.
        if d != 0 && d != g {
            let unit = unit_part(d, g, n);
            let inv = inverse_mod(unit, n).expect("unit is invertible");
            if let Some(u) = e.u.as_mut() {
                for x in u[i].iter_mut() {
                    *x = r.mul(x, &inv);
                }
            }
        }
        diag.push(g);
    }
    ModSmith { modulus: n, diag, u: e.u, v: e.v.unwrap(), v_inv: e.vinv.unwrap() }
}

/// A unit `u` modulo `n` with `u g = d (mod n)`, where `g = gcd(d, n)`.
fn unit_part(d: u64, g: u64, n: u64) -> u64 {
    let a = d / g;
    let step = n / g;
    let mut u = a % n;
    loop {
        if gcd_u64(u, n) == 1 {
            return u;
        }
        u = (u + step) % n;
    }
}

pub(crate) fn inverse_mod(a: u64, n: u64) -> Option<u64> {
    let (g, s, _) = xgcd_i128((a % n) as i128, n as i128);
    (g == 1).then(|| s.rem_euclid(n as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        let (m, k, n) = (a.len(), b.len(), b[0].len());
        (0..m)
            .map(|i| (0..n).map(|j| (0..k).map(|l| &a[i][l] * &b[l][j]).sum()).collect())
            .collect()
    }

    #[test]
    fn small_examples() {
        let s = smith_normal_form(&big(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        let s = smith_normal_form(&big(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(s.diagonal(), [2, 6, 12].map(BigInt::from).to_vec());
    }

    #[test]
    fn decomposition_identity() {
        let a = big(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5], &[3, 5, 8]]);
        let s = smith_normal_form(&a);
        assert_eq!(matmul(&matmul(&s.u, &a), &s.v), s.d);
    }

    #[test]
    fn modular_transforms_invert() {
        let a = vec![vec![2, 4, 6], vec![1, 3, 5], vec![0, 2, 4]];
        let s = smith_mod(a, 8, true);
        let n = 8u64;
        let v = &s.v;
        let vi = &s.v_inv;
        for i in 0..3 {
            for j in 0..3 {
                let x: u64 = (0..3).map(|k| v[i][k] * vi[k][j]).sum::<u64>() % n;
                assert_eq!(x, (i == j) as u64);
            }
        }
    }
}
