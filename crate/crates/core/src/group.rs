//! Finite groups given by generators, with full multiplication tables.
//!
//! Elements are numbered in breadth-first order from the identity: the queue
//! is processed in discovery order and each element is multiplied on the
//! right by the generators in list order. Index 0 is always the identity and
//! every element carries the word (in generator indices) along that tree.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::smith::gcd_u64;
use crate::zmod::ZModMatrix;

/// Default limit on the number of elements produced by a closure.
pub const MAX_GROUP_ORDER: usize = 10_000;

/// Concrete label of a group element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Element {
    /// Square matrix over `Z/p`, entries row by row.
    Matrix { p: u64, n: usize, entries: Vec<u64> },
    /// `(a, b)` in `Z/m x| Z/n`.
    Pair(u64, u64),
    Cyclic(u64),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Matrix { n, entries, .. } => {
                let rows: Vec<String> = entries
                    .chunks(*n)
                    .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                    .collect();
                write!(f, "[{}]", rows.join(","))
            }
            Element::Pair(a, b) => write!(f, "({a},{b})"),
            Element::Cyclic(a) => write!(f, "{a}"),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Element {
    pub fn matrix(m: &ZModMatrix) -> Element {
        Element::Matrix {
            p: m.modulus(),
            n: m.rows(),
            entries: m.to_rows().concat(),
        }
    }

    pub fn as_matrix(&self) -> Option<ZModMatrix> {
        match self {
            Element::Matrix { p, n, entries } => {
                let rows: Vec<Vec<i64>> = entries.chunks(*n).map(|r| r.iter().map(|&x| x as i64).collect()).collect();
                ZModMatrix::from_rows(*p, &rows).ok()
            }
            _ => None,
        }
    }
}

pub struct FiniteGroup {
    name: String,
    labels: Vec<Element>,
    index: HashMap<Element, usize>,
    table: Vec<u32>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    words: Vec<Vec<usize>>,
    tree: Vec<Option<(usize, usize)>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order())
    }
}

/// Breadth-first closure of `gens` under `mul`.
fn closure<T: Clone + Eq + Hash>(
    identity: T,
    gens: &[T],
    mul: impl Fn(&T, &T) -> T,
    cap: usize,
) -> Result<(Vec<T>, Vec<Option<(usize, usize)>>)> {
    let mut elems = vec![identity.clone()];
    let mut seen: HashMap<T, usize> = HashMap::new();
    seen.insert(identity, 0);
    let mut tree = vec![None];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (gi, g) in gens.iter().enumerate() {
            let h = mul(&elems[i], g);
            if !seen.contains_key(&h) {
                if elems.len() >= cap {
                    return Err(Error::GroupTooLarge(cap));
                }
                seen.insert(h.clone(), elems.len());
                elems.push(h);
                tree.push(Some((i, gi)));
                queue.push_back(elems.len() - 1);
            }
        }
    }
    Ok((elems, tree))
}

impl FiniteGroup {
    fn build<T: Clone + Eq + Hash>(
        name: String,
        identity: T,
        gens: &[T],
        mul: impl Fn(&T, &T) -> T,
        label: impl Fn(&T) -> Element,
        cap: usize,
    ) -> Result<FiniteGroup> {
        let (elems, tree) = closure(identity, gens, &mul, cap)?;
        let n = elems.len();
        let pos: HashMap<T, usize> = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = pos[&mul(&elems[i], &elems[j])] as u32;
            }
        }
        let labels: Vec<Element> = elems.iter().map(label).collect();
        let index = labels.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut inverse = vec![0usize; n];
        for i in 0..n {
            inverse[i] = (0..n).find(|&j| table[i * n + j] == 0).expect("finite group element has an inverse");
        }
        let generators = gens.iter().map(|g| pos[g]).collect();
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 1..n {
            let (p, g) = tree[i].unwrap();
            let mut w = words[p].clone();
            w.push(g);
            words[i] = w;
        }
        Ok(FiniteGroup { name, labels, index, table, inverse, generators, words, tree })
    }

    /// Closure of invertible square matrices over `Z/p`.
    pub fn matrix_group_closure(p: u64, gens: &[ZModMatrix]) -> Result<FiniteGroup> {
        Self::matrix_group_closure_capped(p, gens, MAX_GROUP_ORDER)
    }

    pub fn matrix_group_closure_capped(p: u64, gens: &[ZModMatrix], cap: usize) -> Result<FiniteGroup> {
        if !is_prime(p) {
            return Err(Error::InvalidGroup(format!("{p} is not prime")));
        }
        if gens.is_empty() {
            return Err(Error::InvalidGroup("no generators".into()));
        }
        let n = gens[0].rows();
        for (i, g) in gens.iter().enumerate() {
            if g.rows() != n || g.cols() != n || g.modulus() != p {
                return Err(Error::InvalidGroup(format!("generator {i} has the wrong shape or modulus")));
            }
            if g.det() == 0 {
                return Err(Error::SingularGenerator(i));
            }
        }
        FiniteGroup::build(
            format!("<{} matrices over F_{p}>", gens.len()),
            ZModMatrix::identity(p, n),
            gens,
            |a, b| a * b,
            Element::matrix,
            cap,
        )
    }

    /// `GL_2(F_p)` with generators `[[1,0],[-1,1]]`, `[[0,-1],[1,0]]` and
    /// `diag(1, g)` for the least primitive root `g`. For `p = 3` these are
    /// `M2, i, M1` in that order.
    pub fn gl2(p: u64) -> Result<FiniteGroup> {
        if !is_prime(p) {
            return Err(Error::InvalidGroup(format!("{p} is not prime")));
        }
        let g = if p == 2 {
            1
        } else {
            let fac = crate::field::prime_factors(p - 1);
            (2..p)
                .find(|&g| fac.iter().all(|&l| crate::field::pow_mod(g, (p - 1) / l, p) != 1))
                .unwrap()
        };
        let m = |r: [[i64; 2]; 2]| ZModMatrix::from_rows(p, &[r[0].to_vec(), r[1].to_vec()]).unwrap();
        let gens = [m([[1, 0], [-1, 1]]), m([[0, -1], [1, 0]]), m([[1, 0], [0, g as i64]])];
        let mut grp = FiniteGroup::matrix_group_closure(p, &gens)?;
        grp.name = format!("GL2({p})");
        Ok(grp)
    }

    /// `Z/m x| Z/n` with `(a1, b1)(a2, b2) = (a1 + r^{b1} a2, b1 + b2)`,
    /// generated by `(1, 0)` and `(0, 1)`.
    pub fn semidirect_cyclic(m: u64, n: u64, r: u64) -> Result<FiniteGroup> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidGroup("orders must be positive".into()));
        }
        if gcd_u64(r % m.max(1), m) != 1 && m > 1 {
            return Err(Error::InvalidGroup(format!("{r} is not a unit mod {m}")));
        }
        if crate::field::pow_mod(r, n, m) != 1 % m {
            return Err(Error::InvalidGroup(format!("{r}^{n} != 1 mod {m}")));
        }
        let pw: Vec<u64> = (0..n).map(|b| crate::field::pow_mod(r, b, m)).collect();
        let mul = |x: &(u64, u64), y: &(u64, u64)| ((x.0 + pw[x.1 as usize] * y.0) % m, (x.1 + y.1) % n);
        FiniteGroup::build(
            format!("Z/{m} x| Z/{n} (r={r})"),
            (0, 0),
            &[(1 % m, 0), (0, 1 % n)],
            mul,
            |x| Element::Pair(x.0, x.1),
            MAX_GROUP_ORDER,
        )
    }

    /// The cyclic group `Z/n` generated by 1.
    pub fn cyclic(n: u64) -> Result<FiniteGroup> {
        if n == 0 || n as usize > MAX_GROUP_ORDER {
            return Err(Error::InvalidGroup(format!("cyclic group of order {n}")));
        }
        FiniteGroup::build(
            format!("Z/{n}"),
            0u64,
            &[1 % n],
            |a, b| (a + b) % n,
            |&a| Element::Cyclic(a),
            MAX_GROUP_ORDER,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g h g^{-1}`.
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Word in generator indices with `g = s_{w_1} s_{w_2} ...`.
    pub fn word(&self, g: usize) -> &[usize] {
        &self.words[g]
    }

    /// Parent in the breadth-first tree: `g = parent * generator`.
    pub fn tree_parent(&self, g: usize) -> Option<(usize, usize)> {
        self.tree[g]
    }

    pub fn label(&self, g: usize) -> &Element {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[Element] {
        &self.labels
    }

    pub fn find(&self, e: &Element) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// The element with the given matrix entries (for matrix groups).
    pub fn find_matrix(&self, rows: &[Vec<i64>]) -> Option<usize> {
        let p = match self.labels.first()? {
            Element::Matrix { p, .. } => *p,
            _ => return None,
        };
        let m = ZModMatrix::from_rows(p, rows).ok()?;
        self.find(&Element::matrix(&m))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// A subgroup `H` of a parent group `G`, carried as a group in its own right
/// (elements numbered by its own generators) plus the embedding into `G`.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    group: Arc<FiniteGroup>,
    embedding: Vec<usize>,
    membership: HashMap<usize, usize>,
    normal: bool,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {} in {})", self.group.order(), self.parent.name())
    }
}

impl Subgroup {
    /// The subgroup generated by the given parent elements.
    pub fn generated_by(parent: &Arc<FiniteGroup>, gens: &[usize], name: &str) -> Result<Subgroup> {
        let p = parent.clone();
        let mut grp = FiniteGroup::build(
            name.to_string(),
            0usize,
            gens,
            |a, b| p.mul(*a, *b),
            |&a| p.label(a).clone(),
            MAX_GROUP_ORDER,
        )?;
        grp.name = name.to_string();
        let embedding: Vec<usize> = grp.labels.iter().map(|l| parent.find(l).unwrap()).collect();
        let membership = embedding.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let mut sub = Subgroup {
            parent: parent.clone(),
            group: Arc::new(grp),
            embedding,
            membership,
            normal: false,
        };
        sub.normal = (0..parent.order()).all(|g| sub.embedding.iter().all(|&h| sub.contains(parent.conj(g, h))));
        Ok(sub)
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    /// Parent index of a subgroup element.
    pub fn to_parent(&self, h: usize) -> usize {
        self.embedding[h]
    }

    /// Subgroup index of a parent element, if it lies in the subgroup.
    pub fn from_parent(&self, g: usize) -> Option<usize> {
        self.membership.get(&g).copied()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.membership.contains_key(&g)
    }

    pub fn elements(&self) -> &[usize] {
        &self.embedding
    }

    /// Canonical right transversal: the least parent index in each coset `H g`.
    pub fn right_coset_reps(&self) -> Vec<usize> {
        let n = self.parent.order();
        let mut seen = vec![false; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            reps.push(g);
            for &h in &self.embedding {
                seen[self.parent.mul(h, g)] = true;
            }
        }
        reps
    }

    /// Checks that `reps` is a right transversal, i.e. `G` is the disjoint
    /// union of the cosets `H r`.
    pub fn check_right_transversal(&self, reps: &[usize]) -> Result<()> {
        let n = self.parent.order();
        if reps.len() * self.order() != n {
            return Err(Error::InvalidCosetReps(format!(
                "{} representatives for index {}",
                reps.len(),
                self.index()
            )));
        }
        let mut seen = vec![false; n];
        for &r in reps {
            for &h in &self.embedding {
                let x = self.parent.mul(h, r);
                if seen[x] {
                    return Err(Error::InvalidCosetReps(format!("representative {} repeats a coset", self.parent.label(r))));
                }
                seen[x] = true;
            }
        }
        Ok(())
    }

    /// Writes `g = h r` with `h` in the subgroup (returned as a subgroup
    /// index) and `r` one of `reps` (returned as a position in `reps`).
    pub fn decompose(&self, g: usize, reps: &[usize]) -> (usize, usize) {
        for (pos, &r) in reps.iter().enumerate() {
            let h = self.parent.mul(g, self.parent.inv(r));
            if let Some(hs) = self.from_parent(h) {
                return (hs, pos);
            }
        }
        panic!("representatives do not cover the group")
    }
}

/// `GL_2(3) > SL_2(3) > Q_8` with chosen coset representatives.
#[derive(Clone, Debug)]
pub struct Filtration {
    pub sl: Subgroup,
    pub q8: Subgroup,
    /// `Q_8` as a subgroup of `SL_2(3)`.
    pub q8_in_sl: Subgroup,
    /// `{e, M1}` for `GL_2(3) / SL_2(3)`.
    pub gl_over_sl: Vec<usize>,
    /// `{e, M2, M2^2}` for `SL_2(3) / Q_8`, as indices in `SL_2(3)`.
    pub sl_over_q8: Vec<usize>,
}

/// Names used for the distinguished elements of `GL_2(3)`.
pub fn gl23_element(name: &str) -> Option<[[i64; 2]; 2]> {
    let m = match name {
        "e" => [[1, 0], [0, 1]],
        "-e" => [[-1, 0], [0, -1]],
        "M1" => [[1, 0], [0, -1]],
        "M2" => [[1, 0], [-1, 1]],
        "i" => [[0, -1], [1, 0]],
        "j" => [[-1, -1], [-1, 1]],
        "k" => [[1, -1], [-1, -1]],
        "-i" => [[0, 1], [-1, 0]],
        "-j" => [[1, 1], [1, -1]],
        "-k" => [[-1, 1], [1, 1]],
        _ => return None,
    };
    Some(m)
}

/// Index of a named element in a copy of `GL_2(3)` (or any group containing
/// it as matrices mod 3).
pub fn gl23_index(g: &FiniteGroup, name: &str) -> Option<usize> {
    let m = gl23_element(name)?;
    g.find_matrix(&[m[0].to_vec(), m[1].to_vec()])
}

/// The eight elements of `Q_8` in the order `e, -e, i, -i, j, -j, k, -k`.
pub const Q8_NAMES: [&str; 8] = ["e", "-e", "i", "-i", "j", "-j", "k", "-k"];

pub fn identify_filtration(g: &Arc<FiniteGroup>) -> Result<Filtration> {
    let is_gl23 = g.order() == 48
        && g.labels().iter().all(|l| matches!(l, Element::Matrix { p: 3, n: 2, .. }));
    if !is_gl23 {
        return Err(Error::NotGl23(format!("{} of order {}", g.name(), g.order())));
    }
    let idx = |n: &str| gl23_index(g, n).ok_or_else(|| Error::NotGl23(format!("missing {n}")));
    let (i, j, m1, m2) = (idx("i")?, idx("j")?, idx("M1")?, idx("M2")?);
    let sl = Subgroup::generated_by(g, &[i, m2], "SL2(3)")?;
    let det_one: Vec<usize> = (0..g.order())
        .filter(|&x| g.label(x).as_matrix().map(|m| m.det()) == Some(1))
        .collect();
    if sl.order() != 24 || !det_one.iter().all(|&x| sl.contains(x)) {
        return Err(Error::NotGl23("determinant-one subgroup has the wrong shape".into()));
    }
    let q8 = Subgroup::generated_by(g, &[i, j], "Q8")?;
    let q8_set: Vec<usize> = Q8_NAMES.iter().map(|n| idx(n)).collect::<Result<_>>()?;
    if q8.order() != 8 || !q8_set.iter().all(|&x| q8.contains(x)) {
        return Err(Error::NotGl23("quaternion subgroup has the wrong shape".into()));
    }
    let slg = sl.group().clone();
    let i_s = sl.from_parent(i).unwrap();
    let j_s = sl.from_parent(j).unwrap();
    let q8_in_sl = Subgroup::generated_by(&slg, &[i_s, j_s], "Q8")?;
    let gl_over_sl = vec![g.identity(), m1];
    sl.check_right_transversal(&gl_over_sl)?;
    let m2s = sl.from_parent(m2).unwrap();
    let sl_over_q8 = vec![0, m2s, slg.mul(m2s, m2s)];
    q8_in_sl.check_right_transversal(&sl_over_q8)?;
    Ok(Filtration { sl, q8, q8_in_sl, gl_over_sl, sl_over_q8 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl23_order_and_words() {
        let g = FiniteGroup::gl2(3).unwrap();
        assert_eq!(g.order(), 48);
        for x in 0..g.order() {
            let w = g.word(x);
            let y = w.iter().fold(0, |acc, &s| g.mul(acc, g.generators()[s]));
            assert_eq!(x, y);
        }
        assert_eq!(g.label(g.generators()[0]).to_string(), "[[1,0],[2,1]]");
    }

    #[test]
    fn semidirect_examples() {
        let g = FiniteGroup::semidirect_cyclic(3, 4, 2).unwrap();
        assert_eq!(g.order(), 12);
        assert!(!g.is_abelian());
        let c = FiniteGroup::semidirect_cyclic(1, 4, 1).unwrap();
        assert_eq!(c.order(), 4);
        assert!(FiniteGroup::semidirect_cyclic(3, 4, 0).is_err());
    }

    #[test]
    fn filtration_of_gl23() {
        let g = Arc::new(FiniteGroup::gl2(3).unwrap());
        let f = identify_filtration(&g).unwrap();
        assert_eq!(f.sl.order(), 24);
        assert_eq!(f.q8.order(), 8);
        assert!(f.sl.is_normal() && f.q8.is_normal() && f.q8_in_sl.is_normal());
    }

    #[test]
    fn filtration_rejects_other_groups() {
        let g = Arc::new(FiniteGroup::cyclic(48).unwrap());
        assert!(matches!(identify_filtration(&g), Err(Error::NotGl23(_))));
    }

    #[test]
    fn singular_generator() {
        let s = ZModMatrix::from_rows(3, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(matches!(FiniteGroup::matrix_group_closure(3, &[s]), Err(Error::SingularGenerator(0))));
    }

    #[test]
    fn cap_is_enforced() {
        let g = FiniteGroup::gl2(3).unwrap();
        let gens: Vec<ZModMatrix> = g.generators().iter().map(|&x| g.label(x).as_matrix().unwrap()).collect();
        assert!(matches!(
            FiniteGroup::matrix_group_closure_capped(3, &gens, 20),
            Err(Error::GroupTooLarge(20))
        ));
    }
}
