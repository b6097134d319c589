//! Inhomogeneous cochains and group cohomology in degrees 0, 1 and 2.
//!
//! A cochain of degree `i` is a table of module values indexed by `G^i`;
//! the tuple `(g_1, ..., g_i)` sits at position `g_1 n^{i-1} + ... + g_i`
//! with `n = |G|`, and within a position the module coordinates follow in
//! order. All linear algebra treats a cochain as a vector in
//! `(Z/n_1 + ... + Z/n_r)^{|G|^i}` in exactly that layout.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::group::{FiniteGroup, Subgroup};
use crate::lattice::{hom_kernel, normalize_factors, solve_row, Kernel, KernelBuilder, Subquotient};
use crate::smith::gcd_u64;
use crate::zmod::ZModMatrix;

/// Largest number of cochain coordinates the linear-algebra engine accepts.
pub const MAX_SOURCE_COORDINATES: usize = 2048;
/// Largest number of scalar equations the engine will generate.
pub const MAX_EQUATIONS: usize = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cochain {
    degree: usize,
    order: usize,
    dim: usize,
    values: Vec<u64>,
}

fn tuple_count(order: usize, degree: usize) -> usize {
    order.pow(degree as u32)
}

/// Decodes a tuple index into group elements.
pub fn tuple_of(order: usize, degree: usize, mut index: usize) -> Vec<usize> {
    let mut t = vec![0; degree];
    for k in (0..degree).rev() {
        t[k] = index % order;
        index /= order;
    }
    t
}

pub fn tuple_index(order: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &g| acc * order + g)
}

impl Cochain {
    pub fn zero(module: &GModule, degree: usize) -> Cochain {
        let order = module.group().order();
        Cochain { degree, order, dim: module.dim(), values: vec![0; tuple_count(order, degree) * module.dim()] }
    }

    /// The cochain `t -> f(t)`, reduced into the module.
    pub fn from_fn(module: &GModule, degree: usize, mut f: impl FnMut(&[usize]) -> Vec<u64>) -> Cochain {
        let mut c = Cochain::zero(module, degree);
        let order = c.order;
        for t in 0..tuple_count(order, degree) {
            let v = module.reduce(&f(&tuple_of(order, degree, t)));
            c.values[t * c.dim..(t + 1) * c.dim].copy_from_slice(&v);
        }
        c
    }

    /// A cochain from its flat value table.
    pub fn from_values(module: &GModule, degree: usize, values: Vec<u64>) -> Result<Cochain> {
        let order = module.group().order();
        let expected = tuple_count(order, degree) * module.dim();
        if values.len() != expected {
            return Err(Error::DimensionMismatch(format!("{} values, expected {expected}", values.len())));
        }
        let dim = module.dim();
        let values = values.chunks(dim.max(1)).flat_map(|v| module.reduce(v)).collect();
        Ok(Cochain { degree, order, dim, values })
    }

    pub fn random<R: Rng + ?Sized>(module: &GModule, degree: usize, rng: &mut R) -> Cochain {
        let moduli = module.moduli().to_vec();
        Cochain::from_fn(module, degree, |_| moduli.iter().map(|&m| rng.gen_range(0..m)).collect())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value_at(&self, index: usize) -> &[u64] {
        &self.values[index * self.dim..(index + 1) * self.dim]
    }

    pub fn value(&self, tuple: &[usize]) -> &[u64] {
        assert_eq!(tuple.len(), self.degree);
        self.value_at(tuple_index(self.order, tuple))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&x| x == 0)
    }

    fn check_module(&self, module: &GModule) -> Result<()> {
        if self.order != module.group().order() || self.dim != module.dim() {
            return Err(Error::DimensionMismatch("cochain does not belong to this module".into()));
        }
        Ok(())
    }
}

/// One term `coeff * (A . f(src))` of a linear expression in cochain values,
/// where the optional matrix acts on the value before it is scaled.
struct Term<'a> {
    src: usize,
    mat: Option<&'a ZModMatrix>,
    coeff: i64,
}

/// Terms of `(d_i f)(t)` for the tuple `t` of length `i + 1`.
fn differential_terms<'a>(module: &'a GModule, t: &[usize]) -> Vec<Term<'a>> {
    let g = module.group();
    let n = g.order();
    let i = t.len() - 1;
    let mut terms = Vec::with_capacity(i + 2);
    terms.push(Term { src: tuple_index(n, &t[1..]), mat: Some(module.matrix(t[0])), coeff: 1 });
    for k in 0..i {
        let mut s: Vec<usize> = Vec::with_capacity(i);
        s.extend_from_slice(&t[..k]);
        s.push(g.mul(t[k], t[k + 1]));
        s.extend_from_slice(&t[k + 2..]);
        let sign = if (k + 1) % 2 == 0 { 1 } else { -1 };
        terms.push(Term { src: tuple_index(n, &s), mat: None, coeff: sign });
    }
    let sign = if (i + 1).is_multiple_of(2) { 1 } else { -1 };
    terms.push(Term { src: tuple_index(n, &t[..i]), mat: None, coeff: sign });
    terms
}

fn eval_terms(module: &GModule, c: &Cochain, terms: &[Term]) -> Vec<u64> {
    let mut acc = module.zero();
    for term in terms {
        let v = c.value_at(term.src);
        let v = match term.mat {
            Some(a) => module.reduce(&a.apply_row(v)),
            None => v.to_vec(),
        };
        for (j, (&m, x)) in module.moduli().iter().zip(v).enumerate() {
            let s = (term.coeff.rem_euclid(m as i64) as u64) * x % m;
            acc[j] = (acc[j] + s) % m;
        }
    }
    acc
}

/// Adds the equations `sum of terms = 0` (one per coordinate) to `kb`.
fn add_term_equations(kb: &mut KernelBuilder, module: &GModule, terms: &[Term]) {
    let r = module.dim();
    for (j, &m) in module.moduli().iter().enumerate() {
        let mut sparse: Vec<(usize, u64)> = Vec::new();
        for term in terms {
            let c = term.coeff.rem_euclid(m as i64) as u64;
            match term.mat {
                Some(a) => {
                    for i in 0..r {
                        let e = a.get(i, j) % m * c % m;
                        if e != 0 {
                            sparse.push((term.src * r + i, e));
                        }
                    }
                }
                None => {
                    if c != 0 {
                        sparse.push((term.src * r + j, c));
                    }
                }
            }
        }
        if !sparse.is_empty() {
            kb.add_sparse_equation(&sparse, m);
        }
    }
}

/// `d_i c` with the standard bar-resolution formula.
pub fn differential(module: &GModule, c: &Cochain) -> Result<Cochain> {
    if c.degree > 2 {
        return Err(Error::DegreeOutOfRange(c.degree));
    }
    c.check_module(module)?;
    Ok(Cochain::from_fn(module, c.degree + 1, |t| eval_terms(module, c, &differential_terms(module, t))))
}

fn coordinate_moduli(module: &GModule, degree: usize) -> Vec<u64> {
    let count = tuple_count(module.group().order(), degree);
    (0..count).flat_map(|_| module.moduli().iter().copied()).collect()
}

fn check_size(module: &GModule, degree: usize) -> Result<()> {
    let n = module.group().order();
    let source = n.checked_pow(degree as u32).and_then(|c| c.checked_mul(module.dim()));
    let eqs = n.checked_pow(degree as u32 + 1).and_then(|c| c.checked_mul(module.dim()));
    match (source, eqs) {
        (Some(s), Some(e)) if s <= MAX_SOURCE_COORDINATES && e <= MAX_EQUATIONS => Ok(()),
        _ => Err(Error::InstanceTooLarge(format!(
            "degree {degree} over a group of order {n} with {} coordinates",
            module.dim()
        ))),
    }
}

/// Kernel of `d_i` as a subgroup of `C^i`.
fn cocycle_kernel(module: &GModule, degree: usize, extra: impl Fn(&mut KernelBuilder)) -> Kernel {
    let n = module.group().order();
    let moduli = coordinate_moduli(module, degree);
    let mut kb = KernelBuilder::new(module.exponent_bound(), &moduli);
    for t in 0..tuple_count(n, degree + 1) {
        let tuple = tuple_of(n, degree + 1, t);
        let terms = differential_terms(module, &tuple);
        add_term_equations(&mut kb, module, &terms);
    }
    extra(&mut kb);
    kb.finish()
}

/// Images of the standard generators of `C^{i-1}` under `d_{i-1}`.
fn coboundary_generators(module: &GModule, degree: usize) -> Vec<Vec<u64>> {
    if degree == 0 {
        return Vec::new();
    }
    let n = module.group().order();
    let r = module.dim();
    let mut out = Vec::new();
    for t in 0..tuple_count(n, degree - 1) {
        for i in 0..r {
            let mut c = Cochain::zero(module, degree - 1);
            c.values[t * r + i] = 1;
            let d = differential(module, &c).expect("degree checked");
            if !d.is_zero() {
                out.push(d.values);
            }
        }
    }
    out
}

/// `H^i(G, M)` with chosen representatives and a class map.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    degree: usize,
    module: GModule,
    sq: Subquotient,
    representatives: Vec<Cochain>,
}

impl CohomologyGroup {
    fn from_parts(module: &GModule, degree: usize, kernel: Kernel, relations: &[Vec<u64>]) -> CohomologyGroup {
        let sq = Subquotient::new(kernel, relations);
        let representatives = (0..sq.invariant_factors().len())
            .map(|k| Cochain::from_values(module, degree, sq.generator(k)).expect("layout"))
            .collect();
        CohomologyGroup { degree, module: module.clone(), sq, representatives }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn invariant_factors(&self) -> Vec<u64> {
        self.sq.invariant_factors()
    }

    pub fn order(&self) -> BigUint {
        self.sq.order()
    }

    /// Order of the group of cocycles.
    pub fn cocycle_order(&self) -> BigUint {
        self.sq.kernel().order()
    }

    /// Order of the group of coboundaries.
    pub fn coboundary_order(&self) -> BigUint {
        self.sq.image_order()
    }

    /// Representative cocycles, one per invariant factor, each the
    /// lexicographically smallest table in its class.
    pub fn representatives(&self) -> &[Cochain] {
        &self.representatives
    }

    pub fn is_cocycle(&self, c: &Cochain) -> bool {
        c.degree == self.degree && self.sq.kernel().contains(&c.values)
    }

    pub fn is_coboundary(&self, c: &Cochain) -> bool {
        c.degree == self.degree && self.sq.in_image(&c.values)
    }

    /// Coordinates of the class of `c` with respect to the representatives.
    pub fn class_of(&self, c: &Cochain) -> Result<Vec<u64>> {
        c.check_module(&self.module)?;
        if c.degree != self.degree {
            return Err(Error::DegreeOutOfRange(c.degree));
        }
        self.sq.class_of(&c.values).ok_or_else(|| Error::NotACocycle("class requested for a non-cocycle".into()))
    }

    /// The canonical representative of the class with the given coordinates.
    pub fn class_element(&self, coords: &[u64]) -> Cochain {
        Cochain::from_values(&self.module, self.degree, self.sq.element(coords)).expect("layout")
    }

    /// Lexicographically smallest cochain cohomologous to `c`.
    pub fn canonical(&self, c: &Cochain) -> Cochain {
        Cochain::from_values(&self.module, self.degree, self.sq.coset_min(&c.values)).expect("layout")
    }

    /// All classes, each given by its canonical representative.
    pub fn all_classes(&self) -> Result<Vec<Cochain>> {
        let factors = self.invariant_factors();
        let total = factors.iter().try_fold(1u64, |a, &d| a.checked_mul(d)).filter(|&t| t <= 1 << 16);
        let total = total.ok_or_else(|| Error::InstanceTooLarge("too many classes to list".into()))?;
        let mut out = Vec::with_capacity(total as usize);
        let mut coords = vec![0u64; factors.len()];
        for _ in 0..total {
            out.push(self.class_element(&coords));
            for k in (0..coords.len()).rev() {
                coords[k] += 1;
                if coords[k] < factors[k] {
                    break;
                }
                coords[k] = 0;
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "degree": self.degree,
            "invariant_factors": self.invariant_factors(),
            "representatives": self.representatives.iter().map(|c| c.values.clone()).collect::<Vec<_>>(),
        })
    }
}

/// `H^i(G, M)` for `i <= 2` via the kernel and image of the differentials.
pub fn cohomology(module: &GModule, degree: usize) -> Result<CohomologyGroup> {
    if degree > 2 {
        return Err(Error::DegreeOutOfRange(degree));
    }
    check_size(module, degree)?;
    let kernel = cocycle_kernel(module, degree, |_| {});
    let relations = coboundary_generators(module, degree);
    Ok(CohomologyGroup::from_parts(module, degree, kernel, &relations))
}

/// Solves `d_{i-1} x = c`. For degree 1 this is `g.m - m = c(g)` for all `g`.
pub fn coboundary_witness(module: &GModule, c: &Cochain) -> Result<Option<Cochain>> {
    c.check_module(module)?;
    if c.degree == 0 || c.degree > 2 {
        return Err(Error::DegreeOutOfRange(c.degree));
    }
    let degree = c.degree;
    check_size(module, degree)?;
    let source = coordinate_moduli(module, degree - 1);
    let target = coordinate_moduli(module, degree);
    let r = module.dim();
    let n = module.group().order();
    let mut rows = Vec::with_capacity(source.len());
    for t in 0..tuple_count(n, degree - 1) {
        for i in 0..r {
            let mut e = Cochain::zero(module, degree - 1);
            e.values[t * r + i] = 1;
            rows.push(differential(module, &e)?.values);
        }
    }
    Ok(solve_row(&source, &target, &rows, &c.values)
        .map(|x| Cochain::from_values(module, degree - 1, x).expect("layout")))
}

/// Coefficient data for the closed form: `sum Z/d + Z^f (+ D)` for a
/// uniquely divisible `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientGroup {
    pub factors: Vec<u64>,
    pub free_rank: usize,
    pub divisible: bool,
}

/// `H^i(Z/m, A)` for trivial action: `A` in degree 0, `A/mA` in positive
/// even degrees and `A[m]` in odd degrees. The result of degree 0 is `A`
/// itself; in positive degrees only invariant factors remain.
pub fn cyclic_cohomology_closed_form(m: u64, a: &CoefficientGroup, degree: usize) -> CoefficientGroup {
    if degree == 0 {
        return CoefficientGroup { factors: normalize_factors(&a.factors), ..a.clone() };
    }
    let mut orders: Vec<u64> = a.factors.iter().map(|&d| gcd_u64(d, m)).collect();
    if degree.is_multiple_of(2) {
        orders.extend(std::iter::repeat_n(m, a.free_rank));
    }
    CoefficientGroup { factors: normalize_factors(&orders), free_rank: 0, divisible: false }
}

/// `(g f)(h_1, ..., h_i) = g . f(g^{-1} h_1 g, ..., g^{-1} h_i g)` for a
/// cochain on the subgroup `sub` and `g` in the parent group; `module` is a
/// module over the parent.
pub fn act_on_cochain(module: &GModule, sub: &Subgroup, g: usize, c: &Cochain) -> Result<Cochain> {
    if !Arc::ptr_eq(module.group(), sub.parent()) {
        return Err(Error::InvalidModule("module is not over the parent group".into()));
    }
    let conj = conjugation_map(sub, g)?;
    let h = sub.group().order();
    if c.order != h || c.dim != module.dim() {
        return Err(Error::DimensionMismatch("cochain is not on the subgroup".into()));
    }
    let a = module.matrix(g);
    let mut out = c.clone();
    for t in 0..tuple_count(h, c.degree) {
        let tuple = tuple_of(h, c.degree, t);
        let src: Vec<usize> = tuple.iter().map(|&x| conj[x]).collect();
        let v = module.reduce(&a.apply_row(c.value(&src)));
        out.values[t * c.dim..(t + 1) * c.dim].copy_from_slice(&v);
    }
    Ok(out)
}

/// `h -> g^{-1} h g` on subgroup indices.
fn conjugation_map(sub: &Subgroup, g: usize) -> Result<Vec<usize>> {
    let p = sub.parent();
    let gi = p.inv(g);
    (0..sub.order())
        .map(|h| {
            let x = p.mul(p.mul(gi, sub.to_parent(h)), g);
            sub.from_parent(x).ok_or_else(|| {
                Error::ConjugationLeavesSubgroup(format!("{} does not normalize the subgroup", p.label(g)))
            })
        })
        .collect()
}

/// Smallest `k >= 1` with `g^k` in the subgroup.
pub fn coset_order(sub: &Subgroup, g: usize) -> u64 {
    let p = sub.parent();
    let mut x = g;
    let mut k = 1;
    while !sub.contains(x) {
        x = p.mul(x, g);
        k += 1;
    }
    k
}

/// Degree-one classes computed on the `sigma`-invariant subcomplex
/// `C^0(H,N)^sigma -> C^1(H,N)^sigma -> C^2(H,N)^sigma`, together with the
/// direct computation of `H^1(H, N)^sigma` it must agree with.
#[derive(Clone, Debug)]
pub struct InvariantClasses {
    pub sigma_order: u64,
    /// `ker(d_1^sigma) / im(d_0^sigma)`.
    pub classes: CohomologyGroup,
    /// `H^1(H, N)` computed without invariants.
    pub full: CohomologyGroup,
    /// Matrix of `sigma` on `H^1(H, N)` in the coordinates of `full`.
    pub sigma_on_classes: Vec<Vec<u64>>,
    /// Invariant factors of the `sigma`-fixed subgroup of `full`.
    pub fixed_factors: Vec<u64>,
}

impl InvariantClasses {
    pub fn kernel_order(&self) -> BigUint {
        self.classes.cocycle_order()
    }

    pub fn image_order(&self) -> BigUint {
        self.classes.coboundary_order()
    }
}

/// See [`InvariantClasses`]. `module` is a module over the parent group of
/// `sub`, and `sigma` an element of the parent.
pub fn invariant_cocycle_classes(module: &GModule, sub: &Subgroup, sigma: usize) -> Result<InvariantClasses> {
    let sigma_order = coset_order(sub, sigma);
    let size = module.order_u64().ok_or_else(|| Error::InstanceTooLarge("module order".into()))?;
    if gcd_u64(sigma_order, size) != 1 {
        return Err(Error::AveragingUnavailable { order: sigma_order, module_size: size });
    }
    let conj = conjugation_map(sub, sigma)?;
    let n = module.restrict(sub)?;
    check_size(&n, 1)?;
    let h = sub.order();
    let a_sigma = module.matrix(sigma);
    let kernel = cocycle_kernel(&n, 1, |kb| {
        for x in 0..h {
            let terms =
                [Term { src: conj[x], mat: Some(a_sigma), coeff: 1 }, Term { src: x, mat: None, coeff: -1 }];
            add_term_equations(kb, &n, &terms);
        }
    });
    let fixed = module.fixed_points_of(&[sigma]);
    let relations: Vec<Vec<u64>> = fixed
        .generators
        .iter()
        .map(|v| {
            let c = Cochain::from_fn(&n, 0, |_| v.clone());
            differential(&n, &c).map(|d| d.values)
        })
        .collect::<Result<_>>()?;
    let classes = CohomologyGroup::from_parts(&n, 1, kernel, &relations);

    let full = cohomology(&n, 1)?;
    let factors = full.invariant_factors();
    let mut sigma_on_classes = Vec::new();
    for rep in full.representatives() {
        sigma_on_classes.push(full.class_of(&act_on_cochain(module, sub, sigma, rep)?)?);
    }
    let minus_id: Vec<Vec<u64>> = sigma_on_classes
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter().enumerate().map(|(j, &x)| if i == j { (x + factors[j] - 1) % factors[j] } else { x }).collect()
        })
        .collect();
    let fixed_factors = if factors.is_empty() {
        Vec::new()
    } else {
        Subquotient::new(hom_kernel(&factors, &factors, &minus_id), &[]).invariant_factors()
    };
    if classes.invariant_factors() != fixed_factors {
        return Err(Error::Internal(format!(
            "invariant subcomplex gives {:?} but the fixed classes are {:?}",
            classes.invariant_factors(),
            fixed_factors
        )));
    }
    let to_full = ClassMap::compute(&classes, &full, |c| Ok(c.clone()))?;
    if !to_full.injective {
        return Err(Error::Internal("invariant classes do not inject into H^1".into()));
    }
    Ok(InvariantClasses { sigma_order, classes, full, sigma_on_classes, fixed_factors })
}

fn check_section(sub: &Subgroup, reps: &[usize]) -> Result<()> {
    let p = sub.parent();
    sub.check_right_transversal(reps).map_err(|e| Error::NotSemidirect(e.to_string()))?;
    for &a in reps {
        for &b in reps {
            if !reps.contains(&p.mul(a, b)) {
                return Err(Error::NotSemidirect("representatives are not closed under multiplication".into()));
            }
        }
    }
    Ok(())
}

fn check_cocycle(module: &GModule, c: &Cochain, what: &str) -> Result<()> {
    if !differential(module, c)?.is_zero() {
        return Err(Error::NotACocycle(what.to_string()));
    }
    Ok(())
}

/// Restricts a cochain on the parent group to the subgroup.
pub fn restrict_cochain(target: &GModule, sub: &Subgroup, c: &Cochain, projection: Option<&ZModMatrix>) -> Cochain {
    let pn = sub.parent().order();
    Cochain::from_fn(target, c.degree, |t| {
        let parent_tuple: Vec<usize> = t.iter().map(|&h| sub.to_parent(h)).collect();
        let v = c.value_at(tuple_index(pn, &parent_tuple));
        match projection {
            Some(p) => p.apply_row(v),
            None => v.to_vec(),
        }
    })
}

/// Extends a 1-cocycle `f` on `H` to `G = H x| Sigma` by `f(h s) = f(h)`,
/// with values in the same module (a module over `G`). The result is a
/// cocycle exactly when `f` is fixed by `Sigma`; otherwise this fails.
pub fn invariant_extend(module: &GModule, sub: &Subgroup, reps: &[usize], f: &Cochain) -> Result<Cochain> {
    check_section(sub, reps)?;
    let n = module.restrict(sub)?;
    f.check_module(&n)?;
    if f.degree != 1 {
        return Err(Error::DegreeOutOfRange(f.degree));
    }
    check_cocycle(&n, f, "input is not a cocycle on the subgroup")?;
    let ext = Cochain::from_fn(module, 1, |t| {
        let (h, _) = sub.decompose(t[0], reps);
        f.value_at(h).to_vec()
    });
    check_cocycle(module, &ext, "extension is not a cocycle; the input is not invariant")?;
    Ok(ext)
}

/// Extends a 1-cocycle `f : H -> N` to a 1-cocycle `s : G -> Ind_H^G N` by
/// `s(h sigma)([xi]) = f(xi h xi^{-1})`, where `reps` is a complement
/// `Sigma` of `H`. Returns the induced module (coordinates indexed by
/// `reps`) and the extension.
pub fn shapiro_extend(n: &GModule, sub: &Subgroup, reps: &[usize], f: &Cochain) -> Result<(GModule, Cochain)> {
    check_section(sub, reps)?;
    if f.degree != 1 {
        return Err(Error::DegreeOutOfRange(f.degree));
    }
    f.check_module(n)?;
    check_cocycle(n, f, "input is not a cocycle on the subgroup")?;
    let ind = crate::gmodule::induce(n, sub, reps)?;
    let g = sub.parent();
    let r = n.dim();
    let s = Cochain::from_fn(&ind, 1, |t| {
        let (h, _) = sub.decompose(t[0], reps);
        let hp = sub.to_parent(h);
        let mut v = Vec::with_capacity(reps.len() * r);
        for &xi in reps {
            let c = g.mul(g.mul(xi, hp), g.inv(xi));
            v.extend_from_slice(f.value_at(sub.from_parent(c).expect("normal subgroup")));
        }
        v
    });
    check_cocycle(&ind, &s, "Shapiro extension is not a cocycle")?;
    let e = reps.iter().position(|&x| x == g.identity()).ok_or_else(|| {
        Error::NotSemidirect("representatives do not contain the identity".into())
    })?;
    for h in 0..sub.order() {
        if s.value_at(sub.to_parent(h))[e * r..(e + 1) * r] != *f.value_at(h) {
            return Err(Error::Internal("Shapiro extension does not restrict to the input".into()));
        }
    }
    Ok((ind, s))
}

/// A homomorphism between cohomology groups in invariant-factor coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct ClassMap {
    /// Row `k` is the image of the `k`-th source generator.
    pub matrix: Vec<Vec<u64>>,
    pub source_factors: Vec<u64>,
    pub target_factors: Vec<u64>,
    pub kernel_order: u64,
    pub image_order: u64,
    pub injective: bool,
    pub surjective: bool,
}

impl ClassMap {
    /// The map induced by a cochain map `f`, evaluated on representatives.
    pub fn compute(
        src: &CohomologyGroup,
        tgt: &CohomologyGroup,
        f: impl Fn(&Cochain) -> Result<Cochain>,
    ) -> Result<ClassMap> {
        let sf = src.invariant_factors();
        let tf = tgt.invariant_factors();
        let mut matrix = Vec::new();
        for rep in src.representatives() {
            let img = f(rep)?;
            matrix.push(tgt.class_of(&img)?);
        }
        let src_order = src.order().to_u64().ok_or_else(|| Error::InstanceTooLarge("class group".into()))?;
        let tgt_order = tgt.order().to_u64().ok_or_else(|| Error::InstanceTooLarge("class group".into()))?;
        let kernel_order = if sf.is_empty() {
            1
        } else if tf.is_empty() {
            src_order
        } else {
            hom_kernel(&sf, &tf, &matrix).order().to_u64().unwrap()
        };
        let image_order = src_order / kernel_order;
        Ok(ClassMap {
            matrix,
            source_factors: sf,
            target_factors: tf,
            kernel_order,
            image_order,
            injective: kernel_order == 1,
            surjective: image_order == tgt_order,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.image_order == 1
    }

    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Restriction `H^i(G, M) -> H^i(H, N)`, optionally followed by an
/// `H`-equivariant coordinate map `M -> N` (row convention).
pub fn restriction_map(
    src: &CohomologyGroup,
    tgt: &CohomologyGroup,
    sub: &Subgroup,
    projection: Option<&ZModMatrix>,
) -> Result<ClassMap> {
    if !Arc::ptr_eq(src.module().group(), sub.parent()) || !Arc::ptr_eq(tgt.module().group(), sub.group()) {
        return Err(Error::Incompatible("groups do not match the subgroup".into()));
    }
    if src.degree() != tgt.degree() {
        return Err(Error::Incompatible("degrees differ".into()));
    }
    let restricted = src.module().restrict(sub)?;
    let id;
    let proj = match projection {
        Some(p) => p,
        None => {
            id = ZModMatrix::identity(restricted.exponent_bound().max(tgt.module().exponent_bound()), restricted.dim());
            &id
        }
    };
    if !restricted.is_equivariant_map(tgt.module(), proj) {
        return Err(Error::Incompatible("coordinate map is not equivariant".into()));
    }
    ClassMap::compute(src, tgt, |c| Ok(restrict_cochain(tgt.module(), sub, c, Some(proj))))
}

/// The map on cohomology induced by a module homomorphism (row convention).
pub fn coefficient_map(src: &CohomologyGroup, tgt: &CohomologyGroup, f: &ZModMatrix) -> Result<ClassMap> {
    if !src.module().is_equivariant_map(tgt.module(), f) {
        return Err(Error::Incompatible("coefficient map is not equivariant".into()));
    }
    if src.degree() != tgt.degree() {
        return Err(Error::Incompatible("degrees differ".into()));
    }
    ClassMap::compute(src, tgt, |c| {
        let n = c.order;
        Ok(Cochain::from_fn(tgt.module(), c.degree, |t| f.apply_row(c.value_at(tuple_index(n, t)))))
    })
}

/// Result of the exhaustive degree-one enumeration.
#[derive(Clone, Debug)]
pub struct BruteForce {
    pub cocycle_count: u64,
    pub cocycles: Vec<Cochain>,
    pub invariant_count: u64,
    pub coboundary_count: u64,
    pub h1_order: u64,
}

/// Limit on `|M|^{#generators}` for [`brute_force_cocycles`].
pub const BRUTE_FORCE_LIMIT: u64 = 1 << 20;
/// Limit on `|M|` for [`brute_force_cocycles`], which tabulates addition.
pub const BRUTE_FORCE_MODULE_LIMIT: u64 = 1 << 12;

/// Enumerates all assignments of module values to the generators, extends
/// each along the breadth-first words by `f(g s) = f(g) + g . f(s)` and
/// keeps those satisfying the cocycle identity on the whole multiplication
/// table. Fixed points are counted by enumerating the module.
pub fn brute_force_cocycles(module: &GModule, degree: usize) -> Result<BruteForce> {
    if degree != 1 {
        return Err(Error::DegreeOutOfRange(degree));
    }
    let g: &FiniteGroup = module.group();
    let k = g.generators().len();
    let size = module.order_u64().filter(|&s| s <= BRUTE_FORCE_MODULE_LIMIT).ok_or_else(|| {
        Error::InstanceTooLarge(format!("module larger than {BRUTE_FORCE_MODULE_LIMIT} elements"))
    })?;
    let assignments = size.checked_pow(k as u32).filter(|&a| a <= BRUTE_FORCE_LIMIT).ok_or_else(|| {
        Error::InstanceTooLarge(format!("{size}^{k} generator assignments exceed {BRUTE_FORCE_LIMIT}"))
    })?;
    let elems = module.enumerate()?;
    let pos: std::collections::HashMap<&Vec<u64>, u32> =
        elems.iter().enumerate().map(|(i, x)| (x, i as u32)).collect();
    let order = g.order();
    let sz = size as usize;
    let act: Vec<u32> = (0..order)
        .flat_map(|h| elems.iter().map(move |x| (h, x)))
        .map(|(h, x)| pos[&module.act(h, x)])
        .collect();
    let pos = &pos;
    let add: Vec<u32> = elems.iter().flat_map(|x| elems.iter().map(move |y| pos[&module.add(x, y)])).collect();
    let act_on = |h: usize, x: u32| act[h * sz + x as usize];
    let plus = |x: u32, y: u32| add[x as usize * sz + y as usize];
    let mut cocycles = Vec::new();
    let mut f = vec![0u32; order];
    let mut choice = vec![0u32; k];
    'outer: for a in 0..assignments {
        let mut rest = a;
        for c in choice.iter_mut() {
            *c = (rest % size) as u32;
            rest /= size;
        }
        for x in 1..order {
            let (p, s) = g.tree_parent(x).unwrap();
            f[x] = plus(f[p], act_on(p, choice[s]));
        }
        // Edge condition for every element and generator first, then the
        // full table for the survivors.
        for x in 0..order {
            for (si, &s) in g.generators().iter().enumerate() {
                if f[g.mul(x, s)] != plus(f[x], act_on(x, choice[si])) {
                    continue 'outer;
                }
            }
        }
        for x in 0..order {
            for y in 0..order {
                if f[g.mul(x, y)] != plus(f[x], act_on(x, f[y])) {
                    continue 'outer;
                }
            }
        }
        let values: Vec<u64> = f.iter().flat_map(|&v| elems[v as usize].iter().copied()).collect();
        cocycles.push(Cochain::from_values(module, 1, values)?);
    }
    let invariant_count = (0..sz as u32).filter(|&x| g.generators().iter().all(|&s| act_on(s, x) == x)).count() as u64;
    let coboundary_count = size / invariant_count;
    let cocycle_count = cocycles.len() as u64;
    Ok(BruteForce { cocycle_count, cocycles, invariant_count, coboundary_count, h1_order: cocycle_count / coboundary_count })
}

/// Product of invariant factors as a machine integer.
pub fn factors_order(factors: &[u64]) -> BigUint {
    factors.iter().fold(BigUint::one(), |a, &d| a * BigUint::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cyclic(n: u64) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n).unwrap())
    }

    #[test]
    fn cyclic_trivial_coefficients() {
        let m = GModule::trivial(cyclic(2), &[2]).unwrap();
        assert_eq!(cohomology(&m, 1).unwrap().invariant_factors(), vec![2]);
        let m = GModule::trivial(cyclic(4), &[4]).unwrap();
        assert_eq!(cohomology(&m, 2).unwrap().invariant_factors(), vec![4]);
        let m = GModule::trivial(cyclic(4), &[2]).unwrap();
        assert_eq!(cohomology(&m, 2).unwrap().invariant_factors(), vec![2]);
        assert_eq!(cohomology(&m, 0).unwrap().invariant_factors(), vec![2]);
    }

    #[test]
    fn coprime_vanishing() {
        let m = GModule::trivial(cyclic(3), &[4]).unwrap();
        for d in 1..=2 {
            assert!(cohomology(&m, d).unwrap().invariant_factors().is_empty());
        }
    }

    #[test]
    fn degree_three_rejected() {
        let m = GModule::trivial(cyclic(2), &[2]).unwrap();
        let c = Cochain::zero(&m, 3);
        assert_eq!(differential(&m, &c), Err(Error::DegreeOutOfRange(3)));
        assert!(matches!(cohomology(&m, 3), Err(Error::DegreeOutOfRange(3))));
    }

    #[test]
    fn dd_is_zero_on_random_cochains() {
        let g = Arc::new(FiniteGroup::semidirect_cyclic(3, 2, 2).unwrap());
        let a = ZModMatrix::from_rows(4, &[vec![3]]).unwrap();
        let b = ZModMatrix::from_rows(4, &[vec![1]]).unwrap();
        let m = GModule::new(g, &[4], &[b, a]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for d in 0..2 {
            let c = Cochain::random(&m, d, &mut rng);
            let dd = differential(&m, &differential(&m, &c).unwrap()).unwrap();
            assert!(dd.is_zero());
        }
    }

    #[test]
    fn closed_form_examples() {
        let g = CoefficientGroup { factors: vec![], free_rank: 2, divisible: true };
        assert_eq!(cyclic_cohomology_closed_form(2, &g, 2).factors, vec![2, 2]);
        let z8 = CoefficientGroup { factors: vec![8], free_rank: 0, divisible: false };
        assert_eq!(cyclic_cohomology_closed_form(4, &z8, 1).factors, vec![4]);
    }

    #[test]
    fn brute_force_trivial() {
        let m = GModule::trivial(cyclic(2), &[2]).unwrap();
        let b = brute_force_cocycles(&m, 1).unwrap();
        assert_eq!((b.cocycle_count, b.coboundary_count), (2, 1));
    }

    #[test]
    fn witness_for_coboundary() {
        let g = Arc::new(FiniteGroup::cyclic(3).unwrap());
        let perm = ZModMatrix::from_rows(2, &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]).unwrap();
        let m = GModule::new(g, &[2, 2, 2], &[perm]).unwrap();
        let c = differential(&m, &Cochain::from_fn(&m, 0, |_| vec![1, 0, 0])).unwrap();
        let w = coboundary_witness(&m, &c).unwrap().unwrap();
        assert_eq!(differential(&m, &w).unwrap(), c);
    }
}
