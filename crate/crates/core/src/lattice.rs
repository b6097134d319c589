//! Subgroups and subquotients of finite abelian groups `Z/n_1 + ... + Z/n_a`.
//!
//! A subgroup is stored as a full-rank integer lattice in `Z^a` that contains
//! `N Z^a`, where `N` is a common multiple of all moduli in play. The lattice
//! is kept in upper triangular form with diagonal entries dividing `N`;
//! all other entries are reduced modulo `N`.

use num_bigint::BigUint;
use num_traits::One;

use crate::smith::{gcd_u64, inverse_mod, smith_mod};

#[inline]
fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

#[inline]
fn addmod(a: u64, b: u64, n: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % n as u128) as u64
}

fn signed_mod(x: i128, n: u64) -> u64 {
    x.rem_euclid(n as i128) as u64
}

fn xgcd(a: u64, b: u64) -> (u64, i128, i128) {
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 as u64, s0, t0)
}

/// Triangular basis of a lattice `L` with `N Z^a <= L <= Z^a`.
#[derive(Clone, Debug)]
pub struct ModLattice {
    n: u64,
    diag: Vec<u64>,
    /// `rows[c][j]` for `j > c`; entries before `c` are zero and the entry at
    /// `c` is `diag[c]`.
    rows: Vec<Vec<u64>>,
}

impl ModLattice {
    /// The lattice `N Z^dim`.
    pub fn new(n: u64, dim: usize) -> ModLattice {
        assert!(n >= 1);
        ModLattice { n, diag: vec![n; dim], rows: vec![vec![0; dim]; dim] }
    }

    /// The lattice `n_1 Z + ... + n_a Z`, i.e. the zero subgroup of the
    /// group with these moduli.
    pub fn from_moduli(n: u64, moduli: &[u64]) -> ModLattice {
        let mut l = ModLattice::new(n, moduli.len());
        for (i, &m) in moduli.iter().enumerate() {
            assert!(n.is_multiple_of(m), "modulus {m} does not divide {n}");
            l.diag[i] = m;
        }
        l
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diagonal(&self) -> &[u64] {
        &self.diag
    }

    /// Basis row `c` as a full vector (the entry at `c` is reduced mod `N`).
    pub fn basis_row(&self, c: usize) -> Vec<u64> {
        let mut r = self.rows[c].clone();
        r[c] = self.diag[c] % self.n;
        r
    }

    /// Index `[Z^a : L]`.
    pub fn index(&self) -> BigUint {
        self.diag.iter().fold(BigUint::one(), |acc, &d| acc * BigUint::from(d))
    }

    /// Adds a generator; the vector may have arbitrary entries below `N`.
    pub fn insert(&mut self, v: &[u64]) {
        let n = self.n;
        let dim = self.dim();
        let mut v: Vec<u64> = v.iter().map(|&x| x % n).collect();
        for c in 0..dim {
            let b = v[c];
            if b == 0 {
                continue;
            }
            let a = self.diag[c];
            if b.is_multiple_of(a) {
                let q = b / a;
                v[c] = 0;
                let row = &self.rows[c];
                for j in c + 1..dim {
                    if row[j] != 0 {
                        v[j] = (v[j] + n - mulmod(q, row[j], n)) % n;
                    }
                }
                continue;
            }
            let (g, s, t) = xgcd(a, b);
            let alpha = a / g;
            let beta = b / g;
            let (s, t) = (signed_mod(s, n), signed_mod(t, n));
            let row = &mut self.rows[c];
            for j in c + 1..dim {
                let (x, y) = (row[j], v[j]);
                if x == 0 && y == 0 {
                    continue;
                }
                row[j] = addmod(mulmod(s, x, n), mulmod(t, y, n), n);
                v[j] = addmod(mulmod(n - beta % n, x, n), mulmod(alpha, y, n), n);
            }
            self.diag[c] = g;
            v[c] = 0;
        }
    }

    /// Reduces `v` modulo the lattice: the result is the lexicographically
    /// smallest vector (entries in `[0, diag)`) congruent to `v`.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        self.reduce_tracking(v).0
    }

    /// As [`reduce`](Self::reduce), also returning the multipliers `q_c` with
    /// `v = reduced + sum q_c row_c (mod N)`.
    pub fn reduce_tracking(&self, v: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let n = self.n;
        let dim = self.dim();
        let mut v: Vec<u64> = v.iter().map(|&x| x % n).collect();
        let mut q = vec![0u64; dim];
        for c in 0..dim {
            let a = self.diag[c];
            let qc = v[c] / a;
            if qc == 0 {
                continue;
            }
            q[c] = qc;
            v[c] -= qc * a;
            let row = &self.rows[c];
            for j in c + 1..dim {
                if row[j] != 0 {
                    v[j] = (v[j] + n - mulmod(qc, row[j], n)) % n;
                }
            }
        }
        (v, q)
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// The basis as a dense square matrix over `Z/N`.
    pub fn dense(&self) -> Vec<Vec<u64>> {
        (0..self.dim()).map(|c| self.basis_row(c)).collect()
    }
}

/// Accumulates linear equations `c . x = 0 (mod m)` on the group
/// `Z/n_1 + ... + Z/n_a` and solves for the kernel.
pub struct KernelBuilder {
    n: u64,
    moduli: Vec<u64>,
    constraints: ModLattice,
}

impl KernelBuilder {
    /// `n` must be a common multiple of the source moduli and of every
    /// equation modulus.
    pub fn new(n: u64, moduli: &[u64]) -> KernelBuilder {
        for &m in moduli {
            assert!(n.is_multiple_of(m));
        }
        KernelBuilder {
            n,
            moduli: moduli.to_vec(),
            constraints: ModLattice::new(n, moduli.len()),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// Adds the equation `sum_i coeff_i x_i = 0 (mod m)`.
    pub fn add_equation(&mut self, coeffs: &[u64], m: u64) {
        assert!(self.n.is_multiple_of(m));
        let scale = self.n / m;
        let row: Vec<u64> = coeffs.iter().map(|&c| mulmod(c % m, scale, self.n)).collect();
        if row.iter().any(|&x| x != 0) {
            self.constraints.insert(&row);
        }
    }

    /// Adds the equation given by sparse `(index, coefficient)` pairs.
    pub fn add_sparse_equation(&mut self, terms: &[(usize, u64)], m: u64) {
        let mut row = vec![0u64; self.moduli.len()];
        for &(i, c) in terms {
            row[i] = (row[i] + c % m) % m;
        }
        self.add_equation(&row, m);
    }

    pub fn finish(self) -> Kernel {
        let n = self.n;
        let dim = self.moduli.len();
        let s = smith_mod(self.constraints.dense(), n, false);
        let mut lattice = ModLattice::from_moduli(n, &self.moduli);
        for i in 0..dim {
            let g = s.diag[i];
            let scale = n / g;
            let col: Vec<u64> = (0..dim).map(|r| mulmod(s.v[r][i], scale, n)).collect();
            lattice.insert(&col);
        }
        let scales: Vec<u64> = s.diag.iter().map(|&g| n / g).collect();
        Kernel { n, moduli: self.moduli, lattice, v: s.v, v_inv: s.v_inv, g: s.diag, scales }
    }
}

/// Kernel of a system of equations, with coordinates `phi` identifying
/// `K / N Z^a` with `sum_i Z/g_i`.
#[derive(Clone, Debug)]
pub struct Kernel {
    n: u64,
    moduli: Vec<u64>,
    lattice: ModLattice,
    v: Vec<Vec<u64>>,
    v_inv: Vec<Vec<u64>>,
    g: Vec<u64>,
    scales: Vec<u64>,
}

impl Kernel {
    pub fn lattice(&self) -> &ModLattice {
        &self.lattice
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// Order of the kernel as a subgroup of the source group.
    pub fn order(&self) -> BigUint {
        let ambient = self.moduli.iter().fold(BigUint::one(), |a, &m| a * BigUint::from(m));
        ambient / self.lattice.index()
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        self.lattice.contains(x)
    }

    /// `phi(x)` for an element of the kernel.
    fn phi(&self, x: &[u64]) -> Vec<u64> {
        let n = self.n;
        let dim = self.moduli.len();
        (0..dim)
            .map(|i| {
                let mut acc = 0u64;
                for (j, &xj) in x.iter().enumerate() {
                    if xj != 0 {
                        acc = addmod(acc, mulmod(self.v_inv[i][j], xj, n), n);
                    }
                }
                debug_assert_eq!(acc % self.scales[i], 0);
                (acc / self.scales[i]) % self.g[i]
            })
            .collect()
    }

    /// Inverse of `phi`, reduced to the source moduli.
    fn phi_inv(&self, u: &[u64]) -> Vec<u64> {
        let n = self.n;
        let dim = self.moduli.len();
        let y: Vec<u64> = (0..dim).map(|i| mulmod(u[i] % self.g[i], self.scales[i], n)).collect();
        (0..dim)
            .map(|r| {
                let mut acc = 0u64;
                for (i, &yi) in y.iter().enumerate() {
                    if yi != 0 {
                        acc = addmod(acc, mulmod(self.v[r][i], yi, n), n);
                    }
                }
                acc % self.moduli[r]
            })
            .collect()
    }

    /// A generating set of the kernel, in source coordinates.
    pub fn generators(&self) -> Vec<Vec<u64>> {
        let dim = self.moduli.len();
        (0..dim)
            .filter(|&i| self.g[i] > 1)
            .map(|i| {
                let mut u = vec![0u64; dim];
                u[i] = 1;
                self.phi_inv(&u)
            })
            .collect()
    }
}

/// The subquotient `K / B` where `B <= K`, presented by invariant factors.
#[derive(Clone, Debug)]
pub struct Subquotient {
    kernel: Kernel,
    image: ModLattice,
    /// Indices `i` with `g_i > 1`.
    retained: Vec<usize>,
    /// Column transform of the relation matrix and its inverse.
    q: Vec<Vec<u64>>,
    q_inv: Vec<Vec<u64>>,
    /// All diagonal entries of the relation matrix (divisors of `N`).
    e: Vec<u64>,
    /// Positions in `e` whose entry exceeds 1, i.e. the factors of the group.
    factor_pos: Vec<usize>,
}

impl Subquotient {
    /// Builds `kernel / <relations>`; each relation must lie in the kernel.
    pub fn new(kernel: Kernel, relations: &[Vec<u64>]) -> Subquotient {
        let n = kernel.n;
        let mut image = ModLattice::from_moduli(n, &kernel.moduli);
        for r in relations {
            image.insert(r);
        }
        let retained: Vec<usize> = (0..kernel.g.len()).filter(|&i| kernel.g[i] > 1).collect();
        let s = retained.len();
        let mut rel: Vec<Vec<u64>> = Vec::new();
        for (k, &i) in retained.iter().enumerate() {
            let mut row = vec![0u64; s];
            row[k] = kernel.g[i] % n;
            rel.push(row);
        }
        for c in 0..image.dim() {
            let b = image.basis_row(c);
            let ph = kernel.phi(&b);
            let row: Vec<u64> = retained.iter().map(|&i| ph[i]).collect();
            if row.iter().any(|&x| x != 0) {
                rel.push(row);
            }
        }
        let (q, q_inv, e) = if s == 0 {
            (Vec::new(), Vec::new(), Vec::new())
        } else {
            // Reduce the relations to a square triangular basis first.
            let mut tri = ModLattice::new(n, s);
            for r in &rel {
                tri.insert(r);
            }
            let sm = smith_mod(tri.dense(), n, false);
            (sm.v, sm.v_inv, sm.diag)
        };
        let factor_pos = (0..e.len()).filter(|&k| e[k] > 1).collect();
        Subquotient { kernel, image, retained, q, q_inv, e, factor_pos }
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn image(&self) -> &ModLattice {
        &self.image
    }

    /// Invariant factors `d_1 | d_2 | ...`, all greater than 1.
    pub fn invariant_factors(&self) -> Vec<u64> {
        self.factor_pos.iter().map(|&k| self.e[k]).collect()
    }

    pub fn order(&self) -> BigUint {
        self.invariant_factors().iter().fold(BigUint::one(), |a, &d| a * BigUint::from(d))
    }

    /// Order of the relation subgroup inside the source group.
    pub fn image_order(&self) -> BigUint {
        let ambient = self.kernel.moduli.iter().fold(BigUint::one(), |a, &m| a * BigUint::from(m));
        ambient / self.image.index()
    }

    /// Lexicographically smallest element of the coset `x + B`.
    pub fn coset_min(&self, x: &[u64]) -> Vec<u64> {
        self.image.reduce(x)
    }

    pub fn in_image(&self, x: &[u64]) -> bool {
        self.image.contains(x)
    }

    /// Generator of the `k`-th cyclic factor, lexicographically minimal in
    /// its coset.
    pub fn generator(&self, k: usize) -> Vec<u64> {
        let pos = self.factor_pos[k];
        let u_ret: Vec<u64> = self.q_inv[pos].clone();
        let mut u = vec![0u64; self.kernel.g.len()];
        for (idx, &i) in self.retained.iter().enumerate() {
            u[i] = u_ret[idx];
        }
        let x = self.kernel.phi_inv(&u);
        self.coset_min(&x)
    }

    /// Coordinates of the class of `x` (which must lie in the kernel) with
    /// respect to the generators.
    pub fn class_of(&self, x: &[u64]) -> Option<Vec<u64>> {
        if !self.kernel.contains(x) {
            return None;
        }
        let n = self.kernel.n;
        let ph = self.kernel.phi(x);
        let u: Vec<u64> = self.retained.iter().map(|&i| ph[i]).collect();
        Some(
            self.factor_pos
                .iter()
                .map(|&k| {
                    let mut acc = 0u64;
                    for (idx, &ui) in u.iter().enumerate() {
                        if ui != 0 {
                            acc = addmod(acc, mulmod(ui, self.q[idx][k], n), n);
                        }
                    }
                    acc % self.e[k]
                })
                .collect(),
        )
    }

    /// Element `sum_k c_k gen_k`, reduced to its lexicographically minimal
    /// coset representative.
    pub fn element(&self, coords: &[u64]) -> Vec<u64> {
        let dim = self.kernel.moduli.len();
        let mut x = vec![0u64; dim];
        for (k, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let g = self.generator(k);
            for (j, gj) in g.iter().enumerate() {
                let m = self.kernel.moduli[j];
                x[j] = (x[j] + c % m * gj) % m;
            }
        }
        self.coset_min(&x)
    }
}

/// Fixed points and similar kernels of an endomorphism-like map between
/// groups of the form `sum Z/n_i`, given as a row-convention matrix
/// (`x -> x A`, with column `j` reduced mod `target[j]`).
pub fn hom_kernel(source: &[u64], target: &[u64], a: &[Vec<u64>]) -> Kernel {
    let n = source.iter().chain(target.iter()).fold(1u64, |acc, &m| crate::smith::lcm_u64(acc, m));
    let mut kb = KernelBuilder::new(n, source);
    for (j, &m) in target.iter().enumerate() {
        let col: Vec<u64> = a.iter().map(|row| row[j] % m).collect();
        kb.add_equation(&col, m);
    }
    kb.finish()
}

/// Solves `x A = t` for `x` (row convention, mixed moduli) or returns `None`
/// if `t` is not in the image.
pub fn solve_row(source: &[u64], target: &[u64], a: &[Vec<u64>], t: &[u64]) -> Option<Vec<u64>> {
    let n = source.iter().chain(target.iter()).fold(1u64, |acc, &m| crate::smith::lcm_u64(acc, m));
    let (sa, ta) = (source.len(), target.len());
    // Lattice in Z^{ta + sa}: rows (x A, x) for generators, plus the moduli.
    let mut lat = ModLattice::new(n, ta + sa);
    for (j, &m) in target.iter().enumerate() {
        let mut row = vec![0u64; ta + sa];
        row[j] = m % n;
        lat.insert(&row);
    }
    for (i, &m) in source.iter().enumerate() {
        let mut row = vec![0u64; ta + sa];
        for j in 0..ta {
            row[j] = a[i][j] % target[j];
        }
        row[ta + i] = 1;
        lat.insert(&row);
        let mut row = vec![0u64; ta + sa];
        row[ta + i] = m % n;
        lat.insert(&row);
    }
    let mut v = vec![0u64; ta + sa];
    v[..ta].copy_from_slice(t);
    let red = lat.reduce(&v);
    if red[..ta].iter().any(|&x| x != 0) {
        return None;
    }
    // v - red = (x A, x) with red = (0, -x).
    Some((0..sa).map(|i| (n - red[ta + i]) % n % source[i]).collect())
}

/// Number of elements in the subgroup generated by `gens` inside the group
/// with the given moduli.
pub fn span_order(moduli: &[u64], gens: &[Vec<u64>]) -> BigUint {
    let n = moduli.iter().fold(1u64, |acc, &m| crate::smith::lcm_u64(acc, m));
    let mut lat = ModLattice::from_moduli(n, moduli);
    for g in gens {
        lat.insert(g);
    }
    let ambient = moduli.iter().fold(BigUint::one(), |a, &m| a * BigUint::from(m));
    ambient / lat.index()
}

/// Normalizes a list of cyclic orders into invariant factors `d_1 | d_2 | ...`
/// (dropping 1's).
pub fn normalize_factors(orders: &[u64]) -> Vec<u64> {
    use std::collections::BTreeMap;
    let mut primes: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &o in orders {
        if o == 0 {
            continue;
        }
        for p in crate::field::prime_factors(o) {
            let mut pk = 1;
            let mut t = o;
            while t % p == 0 {
                t /= p;
                pk *= p;
            }
            primes.entry(p).or_default().push(pk);
        }
    }
    let len = primes.values().map(|v| v.len()).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for (_, mut v) in primes {
        v.sort_unstable();
        let off = len - v.len();
        for (i, pk) in v.into_iter().enumerate() {
            out[off + i] *= pk;
        }
    }
    out.into_iter().filter(|&d| d > 1).collect()
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn inv_mod(a: u64, n: u64) -> Option<u64> {
    inverse_mod(a, n)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    gcd_u64(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_doubling_on_z8() {
        // x -> 2x on Z/8 has kernel {0, 4}.
        let k = hom_kernel(&[8], &[8], &[vec![2]]);
        assert_eq!(k.order(), BigUint::from(2u32));
        assert!(k.contains(&[4]));
        assert!(!k.contains(&[2]));
    }

    #[test]
    fn subquotient_of_z4_by_2() {
        let k = hom_kernel(&[4], &[4], &[vec![0]]);
        let sq = Subquotient::new(k, &[vec![2]]);
        assert_eq!(sq.invariant_factors(), vec![2]);
        assert_eq!(sq.class_of(&[1]).unwrap(), vec![1]);
        assert_eq!(sq.class_of(&[2]).unwrap(), vec![0]);
    }

    #[test]
    fn mixed_moduli_kernel() {
        // Z/2 + Z/4 -> Z/4, (a, b) -> 2a + b.
        let k = hom_kernel(&[2, 4], &[4], &[vec![2], vec![1]]);
        assert_eq!(k.order(), BigUint::from(2u32));
        assert!(k.contains(&[1, 2]));
    }

    #[test]
    fn solving_rows() {
        let x = solve_row(&[4, 4], &[4], &[vec![2], vec![0]], &[2]).unwrap();
        assert_eq!((x[0] * 2) % 4, 2);
        assert!(solve_row(&[4, 4], &[4], &[vec![2], vec![0]], &[1]).is_none());
    }

    #[test]
    fn factor_normalization() {
        assert_eq!(normalize_factors(&[2, 3, 4]), vec![2, 12]);
        assert_eq!(normalize_factors(&[1, 6, 1]), vec![6]);
    }

    #[test]
    fn lexmin_reduction() {
        let mut l = ModLattice::from_moduli(2, &[2, 2, 2]);
        l.insert(&[1, 1, 0]);
        assert_eq!(l.reduce(&[1, 0, 1]), vec![0, 1, 1]);
    }
}
