//! Finite modules `Z/n_1 + ... + Z/n_r` over a finite group.
//!
//! Elements are row vectors and a group element `g` acts by `x -> x A(g)`.
//! The action is a left action, so `A(gh) = A(h) A(g)`; the matrix of an
//! element with word `s_1 ... s_k` is `A(s_k) ... A(s_1)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::group::{gl23_index, FiniteGroup, Subgroup};
use crate::lattice::{hom_kernel, Subquotient};
use crate::smith::lcm_u64;
use crate::zmod::ZModMatrix;

#[derive(Clone)]
pub struct GModule {
    group: Arc<FiniteGroup>,
    moduli: Vec<u64>,
    n: u64,
    gens: Vec<ZModMatrix>,
    elements: Vec<ZModMatrix>,
}

impl fmt::Debug for GModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GModule(moduli {:?} over {})", self.moduli, self.group.name())
    }
}

fn reduce_columns(m: &ZModMatrix, moduli: &[u64], n: u64) -> ZModMatrix {
    let mut out = ZModMatrix::zero(n, m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.set(i, j, m.get(i, j) % n % moduli[j]);
        }
    }
    out
}

impl GModule {
    /// Builds a module from one matrix per group generator and validates it
    /// against the full multiplication table.
    pub fn new(group: Arc<FiniteGroup>, moduli: &[u64], generator_matrices: &[ZModMatrix]) -> Result<GModule> {
        let r = moduli.len();
        if moduli.iter().any(|&m| m < 1) {
            return Err(Error::InvalidModule("moduli must be positive".into()));
        }
        if generator_matrices.len() != group.generators().len() {
            return Err(Error::InvalidModule(format!(
                "{} matrices for {} generators",
                generator_matrices.len(),
                group.generators().len()
            )));
        }
        let n = moduli.iter().fold(1u64, |a, &m| lcm_u64(a, m));
        let mut gens = Vec::with_capacity(generator_matrices.len());
        for (k, a) in generator_matrices.iter().enumerate() {
            if a.rows() != r || a.cols() != r {
                return Err(Error::InvalidModule(format!("matrix {k} is not {r}x{r}")));
            }
            if n % a.modulus() != 0 && a.modulus() % n != 0 {
                return Err(Error::InvalidModule(format!("matrix {k} has modulus {}", a.modulus())));
            }
            // Entries are read as integers; a matrix given modulo a multiple of
            // N is reduced, one given modulo a divisor of N is lifted.
            let lifted = ZModMatrix::from_rows(
                n,
                &a.to_rows().iter().map(|row| row.iter().map(|&x| x as i64).collect()).collect::<Vec<_>>(),
            )?;
            let a = reduce_columns(&lifted, moduli, n);
            for i in 0..r {
                for j in 0..r {
                    if !(a.get(i, j) as u128 * moduli[i] as u128).is_multiple_of(moduli[j] as u128) {
                        return Err(Error::InvalidModule(format!(
                            "matrix {k}: entry ({i},{j}) does not define a homomorphism Z/{} -> Z/{}",
                            moduli[i], moduli[j]
                        )));
                    }
                }
            }
            let rows = a.to_rows();
            if hom_kernel(moduli, moduli, &rows).order() != BigUint::one() {
                return Err(Error::InvalidModule(format!("matrix {k} is not invertible")));
            }
            gens.push(a);
        }
        let order = group.order();
        let mut elements = vec![ZModMatrix::identity(n, r); order];
        for g in 1..order {
            let (p, s) = group.tree_parent(g).unwrap();
            elements[g] = reduce_columns(&(&gens[s] * &elements[p]), moduli, n);
        }
        let m = GModule { group, moduli: moduli.to_vec(), n, gens, elements };
        m.check_well_defined()?;
        Ok(m)
    }

    /// The module `Z/n_1 + ... ` with trivial action.
    pub fn trivial(group: Arc<FiniteGroup>, moduli: &[u64]) -> Result<GModule> {
        let n = moduli.iter().fold(1u64, |a, &m| lcm_u64(a, m));
        let id = ZModMatrix::identity(n, moduli.len());
        let mats = vec![id; group.generators().len()];
        GModule::new(group, moduli, &mats)
    }

    fn check_well_defined(&self) -> Result<()> {
        let g = &self.group;
        for a in 0..g.order() {
            for b in 0..g.order() {
                let ab = g.mul(a, b);
                let lhs = reduce_columns(&(&self.elements[b] * &self.elements[a]), &self.moduli, self.n);
                if lhs != self.elements[ab] {
                    return Err(Error::ActionNotWellDefined(format!(
                        "{} * {} = {}",
                        g.label(a),
                        g.label(b),
                        g.label(ab)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// Common modulus of all coordinates.
    pub fn exponent_bound(&self) -> u64 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> BigUint {
        self.moduli.iter().fold(BigUint::one(), |a, &m| a * BigUint::from(m))
    }

    /// Order as a machine integer, if it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.moduli.iter().try_fold(1u64, |a, &m| a.checked_mul(m))
    }

    pub fn generator_matrices(&self) -> &[ZModMatrix] {
        &self.gens
    }

    /// Action matrix of a group element.
    pub fn matrix(&self, g: usize) -> &ZModMatrix {
        &self.elements[g]
    }

    pub fn reduce(&self, x: &[u64]) -> Vec<u64> {
        x.iter().zip(&self.moduli).map(|(&a, &m)| a % m).collect()
    }

    pub fn act(&self, g: usize, x: &[u64]) -> Vec<u64> {
        let y = self.elements[g].apply_row(x);
        self.reduce(&y)
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).zip(&self.moduli).map(|((&a, &b), &m)| (a + b) % m).collect()
    }

    pub fn sub(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).zip(&self.moduli).map(|((&a, &b), &m)| (a % m + m - b % m) % m).collect()
    }

    pub fn neg(&self, x: &[u64]) -> Vec<u64> {
        x.iter().zip(&self.moduli).map(|(&a, &m)| (m - a % m) % m).collect()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.dim()]
    }

    /// All elements in lexicographic order; only for small modules.
    pub fn enumerate(&self) -> Result<Vec<Vec<u64>>> {
        let size = self.order_u64().filter(|&s| s <= 1 << 24).ok_or_else(|| {
            Error::InstanceTooLarge(format!("module of order {} cannot be enumerated", self.order()))
        })?;
        let mut out = Vec::with_capacity(size as usize);
        let mut x = vec![0u64; self.dim()];
        for _ in 0..size {
            out.push(x.clone());
            for c in (0..x.len()).rev() {
                x[c] += 1;
                if x[c] < self.moduli[c] {
                    break;
                }
                x[c] = 0;
            }
        }
        Ok(out)
    }

    /// The matrix of `x -> (x (A(s) - 1))_s` over all generators `s`.
    fn fixed_point_system(&self, elems: &[usize]) -> (Vec<u64>, Vec<Vec<u64>>) {
        let r = self.dim();
        let mut target = Vec::new();
        let mut rows = vec![Vec::new(); r];
        for &g in elems {
            let a = &self.elements[g];
            for (j, &m) in self.moduli.iter().enumerate() {
                target.push(m);
                for (i, row) in rows.iter_mut().enumerate() {
                    let d = if i == j { 1 } else { 0 };
                    row.push((a.get(i, j) % m + m - d % m) % m);
                }
            }
        }
        (target, rows)
    }

    /// Fixed points of the whole group.
    pub fn invariants(&self) -> Invariants {
        let gens: Vec<usize> = self.group.generators().to_vec();
        self.fixed_points_of(&gens)
    }

    /// Fixed points of the listed group elements.
    pub fn fixed_points_of(&self, elems: &[usize]) -> Invariants {
        let (target, rows) = self.fixed_point_system(elems);
        let kernel = if target.is_empty() {
            hom_kernel(&self.moduli, &[1], &vec![vec![0]; self.dim()])
        } else {
            hom_kernel(&self.moduli, &target, &rows)
        };
        let sq = Subquotient::new(kernel, &[]);
        let factors = sq.invariant_factors();
        let generators = (0..factors.len()).map(|k| sq.generator(k)).collect();
        Invariants { factors, generators, sq }
    }

    /// The same abelian group viewed as a module over a subgroup.
    pub fn restrict(&self, sub: &Subgroup) -> Result<GModule> {
        if !Arc::ptr_eq(sub.parent(), &self.group) {
            return Err(Error::InvalidModule("subgroup of a different group".into()));
        }
        let mats: Vec<ZModMatrix> =
            sub.group().generators().iter().map(|&h| self.elements[sub.to_parent(h)].clone()).collect();
        GModule::new(sub.group().clone(), &self.moduli, &mats)
    }

    /// The submodule on a contiguous block of coordinates, which must be
    /// stable under the action.
    pub fn block(&self, start: usize, len: usize) -> Result<GModule> {
        let r = self.dim();
        if start + len > r {
            return Err(Error::DimensionMismatch(format!("block {start}+{len} in dimension {r}")));
        }
        let inside = |i: usize| i >= start && i < start + len;
        for a in &self.gens {
            for i in (0..r).filter(|&i| inside(i)) {
                for j in (0..r).filter(|&j| !inside(j)) {
                    if a.get(i, j) != 0 {
                        return Err(Error::InvalidModule(format!("coordinates {start}..{} are not stable", start + len)));
                    }
                }
            }
        }
        let moduli = &self.moduli[start..start + len];
        let n = moduli.iter().fold(1u64, |a, &m| lcm_u64(a, m));
        let mats: Vec<ZModMatrix> = self
            .gens
            .iter()
            .map(|a| {
                let mut b = ZModMatrix::zero(n, len, len);
                for i in 0..len {
                    for j in 0..len {
                        b.set(i, j, a.get(start + i, start + j));
                    }
                }
                b
            })
            .collect();
        GModule::new(self.group.clone(), moduli, &mats)
    }

    /// Whether both modules have the same group, moduli and action.
    pub fn same_action(&self, other: &GModule) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.moduli == other.moduli && self.elements == other.elements
    }

    /// Whether the row-convention matrix `f` (from `self` to `other`) is a
    /// homomorphism of modules over the same group.
    pub fn is_equivariant_map(&self, other: &GModule, f: &ZModMatrix) -> bool {
        if !Arc::ptr_eq(&self.group, &other.group) || f.rows() != self.dim() || f.cols() != other.dim() {
            return false;
        }
        let apply = |x: &[u64]| -> Vec<u64> {
            let y = f.apply_row(x);
            other.reduce(&y)
        };
        for &s in self.group.generators() {
            for i in 0..self.dim() {
                let mut e = vec![0u64; self.dim()];
                e[i] = 1;
                if apply(&self.act(s, &e)) != other.act(s, &apply(&e)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Fixed-point subgroup of a module.
#[derive(Clone, Debug)]
pub struct Invariants {
    pub factors: Vec<u64>,
    /// Generators, one per invariant factor.
    pub generators: Vec<Vec<u64>>,
    sq: Subquotient,
}

impl Invariants {
    pub fn order(&self) -> BigUint {
        self.sq.order()
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        self.sq.kernel().contains(x)
    }

    /// All fixed points in lexicographic order.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.factors {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for c in &out {
                for t in 0..d {
                    let mut c2: Vec<u64> = c.clone();
                    c2.push(t);
                    next.push(c2);
                }
            }
            out = next;
        }
        let mut elems: Vec<Vec<u64>> = out.iter().map(|c| self.sq.element(c)).collect();
        elems.sort();
        elems
    }
}

/// `Ind_H^G N = Hom_H(Z[G], N)` with `(g phi)(x) = phi(x g)`, for `H = sub`
/// normal in `G`. Coordinates are the values `phi(r)` at the representatives
/// `reps` in the given order.
pub fn induce(n: &GModule, sub: &Subgroup, reps: &[usize]) -> Result<GModule> {
    if !Arc::ptr_eq(n.group(), sub.group()) {
        return Err(Error::InvalidModule("module is not over the subgroup".into()));
    }
    if !sub.is_normal() {
        return Err(Error::ConjugationLeavesSubgroup("induction needs a normal subgroup".into()));
    }
    sub.check_right_transversal(reps)?;
    let g = sub.parent();
    let t = reps.len();
    let r = n.dim();
    let moduli: Vec<u64> = (0..t).flat_map(|_| n.moduli().iter().copied()).collect();
    let big_n = n.exponent_bound();
    let mats: Vec<ZModMatrix> = g
        .generators()
        .iter()
        .map(|&s| {
            let mut a = ZModMatrix::zero(big_n, t * r, t * r);
            // (s phi)(r_a) = phi(r_a s) = h_a . phi(r_b) with r_a s = h_a r_b.
            for (pa, &ra) in reps.iter().enumerate() {
                let (h, pb) = sub.decompose(g.mul(ra, s), reps);
                let block = n.matrix(h);
                for i in 0..r {
                    for j in 0..r {
                        a.set(pb * r + i, pa * r + j, block.get(i, j));
                    }
                }
            }
            a
        })
        .collect();
    GModule::new(g.clone(), &moduli, &mats)
}

/// Column-convention matrices `T_g` (so that `g . v = T_g v`) on a
/// three-dimensional module over `SL_2(3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct N1Table {
    pub m2: ZModMatrix,
    pub i: ZModMatrix,
    pub j: ZModMatrix,
    pub k: ZModMatrix,
}

pub fn n1_action_table(n1: &GModule) -> Result<N1Table> {
    let g = n1.group();
    let idx = |name: &str| {
        gl23_index(g, name).ok_or_else(|| Error::ActionTableMismatch(format!("element {name} not in the group")))
    };
    let t = |name: &str| -> Result<ZModMatrix> { Ok(n1.matrix(idx(name)?).transpose()) };
    let table = N1Table { m2: t("M2")?, i: t("i")?, j: t("j")?, k: t("k")? };
    let id = ZModMatrix::identity(n1.exponent_bound(), n1.dim());
    let checks = [
        ("T_{-e}", t("-e")?),
        ("T_i^2", &table.i * &table.i),
        ("T_j^2", &table.j * &table.j),
        ("T_k^2", &table.k * &table.k),
    ];
    for (name, m) in checks {
        if reduce_columns(&m, n1.moduli(), n1.exponent_bound()) != id {
            return Err(Error::ActionTableMismatch(format!("{name} is not the identity")));
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(4).unwrap())
    }

    #[test]
    fn trivial_module_invariants() {
        let m = GModule::trivial(c4(), &[6]).unwrap();
        let inv = m.invariants();
        assert_eq!(inv.factors, vec![6]);
        assert_eq!(inv.elements().len(), 6);
    }

    #[test]
    fn induced_from_index_two() {
        let g = c4();
        let sub = Subgroup::generated_by(&g, &[2], "C2").unwrap();
        let n = GModule::trivial(sub.group().clone(), &[2]).unwrap();
        let reps = sub.right_coset_reps();
        let ind = induce(&n, &sub, &reps).unwrap();
        assert_eq!(ind.dim(), 2);
        assert_eq!(ind.act(1, &[1, 0]), vec![0, 1]);
        assert_eq!(ind.act(2, &[1, 0]), vec![1, 0]);
    }

    #[test]
    fn rejects_bad_action() {
        // -1 has order 2 and cannot represent a generator of Z/3.
        let g = Arc::new(FiniteGroup::cyclic(3).unwrap());
        let m = ZModMatrix::from_rows(3, &[vec![-1]]).unwrap();
        assert!(matches!(GModule::new(g, &[3], &[m]), Err(Error::ActionNotWellDefined(_))));
    }

    #[test]
    fn mixed_moduli_homomorphism_check() {
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        // (a, b) in Z/2 + Z/4 -> (a, b + 2a) is an involution.
        let m = ZModMatrix::from_rows(4, &[vec![1, 2], vec![0, 1]]).unwrap();
        let module = GModule::new(g.clone(), &[2, 4], &[m]).unwrap();
        assert_eq!(module.act(1, &[1, 1]), vec![1, 3]);
        let bad = ZModMatrix::from_rows(4, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(matches!(GModule::new(g, &[2, 4], &[bad]), Err(Error::InvalidModule(_))));
    }
}
