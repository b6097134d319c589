//! Units of `F_q[nu, 1/prod(nu - rho_j)]` modulo `m`-th powers, Möbius
//! substitutions on their classes and the six-dimensional module over
//! `GL_2(3)` built from two copies of `F_4[nu, 1/(nu^3 - 1)]`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Fq};
use crate::gmodule::GModule;
use crate::group::{gl23_index, FiniteGroup};
use crate::lattice::normalize_factors;
use crate::poly::Poly;
use crate::smith::gcd_u64;
use crate::zmod::ZModMatrix;

/// `F_q[nu, 1/prod_j (nu - rho_j)]` for distinct `rho_j` in `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedLine {
    field: Field,
    roots: Vec<Fq>,
}

impl LocalizedLine {
    pub fn new(field: Field, roots: &[Fq]) -> Result<LocalizedLine> {
        for (i, r) in roots.iter().enumerate() {
            if r.field() != field {
                return Err(Error::FieldMismatch);
            }
            if roots[..i].contains(r) {
                return Err(Error::InvalidParameter(format!("root {r} repeated")));
            }
        }
        Ok(LocalizedLine { field, roots: roots.to_vec() })
    }

    /// The localization inverting a polynomial with the given roots, which
    /// may repeat.
    pub fn inverting(field: Field, roots: &[Fq]) -> Result<LocalizedLine> {
        let mut distinct: Vec<Fq> = Vec::new();
        for &r in roots {
            if !distinct.contains(&r) {
                distinct.push(r);
            }
        }
        LocalizedLine::new(field, &distinct)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn roots(&self) -> &[Fq] {
        &self.roots
    }

    pub fn root_index(&self, r: Fq) -> Option<usize> {
        self.roots.iter().position(|&x| x == r)
    }

    /// Order of `F_q^x / (F_q^x)^m`.
    pub fn constant_class_order(&self, m: u64) -> u64 {
        gcd_u64(m, self.field.order() - 1)
    }

    /// Class of a nonzero constant in `F_q^x / (F_q^x)^m`, as an exponent of
    /// the primitive element modulo the class order.
    pub fn constant_class(&self, c: Fq, m: u64) -> Result<u64> {
        if c.is_zero() {
            return Err(Error::NotAUnit("zero constant".into()));
        }
        let g = self.constant_class_order(m);
        if g == 1 {
            return Ok(0);
        }
        let e = (self.field.order() - 1) / g;
        let target = c.pow(e);
        let base = self.field.primitive_element().pow(e);
        let mut x = self.field.one();
        for k in 0..g {
            if x == target {
                return Ok(k);
            }
            x *= base;
        }
        Err(Error::Internal("discrete logarithm not found".into()))
    }

    pub fn unit(&self, m: u64) -> UnitClass {
        UnitClass { m, constant_order: self.constant_class_order(m), constant: 0, exponents: vec![0; self.roots.len()] }
    }

    /// The class of `nu - rho_j`.
    pub fn generator(&self, j: usize, m: u64) -> UnitClass {
        let mut u = self.unit(m);
        u.exponents[j] = 1 % m;
        u
    }
}

/// A class in `units / units^m`: a constant class and exponents of the
/// `nu - rho_j` modulo `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct UnitClass {
    pub m: u64,
    pub constant_order: u64,
    pub constant: u64,
    pub exponents: Vec<u64>,
}

impl UnitClass {
    pub fn mul(&self, other: &UnitClass) -> UnitClass {
        assert_eq!((self.m, self.exponents.len()), (other.m, other.exponents.len()));
        UnitClass {
            m: self.m,
            constant_order: self.constant_order,
            constant: (self.constant + other.constant) % self.constant_order,
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| (a + b) % self.m).collect(),
        }
    }

    pub fn inverse(&self) -> UnitClass {
        UnitClass {
            m: self.m,
            constant_order: self.constant_order,
            constant: (self.constant_order - self.constant) % self.constant_order,
            exponents: self.exponents.iter().map(|&a| (self.m - a) % self.m).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.constant == 0 && self.exponents.iter().all(|&e| e == 0)
    }
}

/// Structure of `units / units^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitGroupDescription {
    pub m: u64,
    /// Order of the constant part; 1 when every constant is an `m`-th power.
    pub constant_order: u64,
    /// One generator `nu - rho_j` per root.
    pub rank: usize,
    pub invariant_factors: Vec<u64>,
    pub generators: Vec<String>,
}

pub fn unit_group_mod_powers(line: &LocalizedLine, m: u64) -> Result<UnitGroupDescription> {
    if m < 2 {
        return Err(Error::InvalidParameter("m must be at least 2".into()));
    }
    let constant_order = line.constant_class_order(m);
    let mut orders = vec![m; line.roots.len()];
    let mut generators: Vec<String> = line.roots.iter().map(|r| format!("nu - {r}")).collect();
    if constant_order > 1 {
        orders.push(constant_order);
        generators.insert(0, format!("{}", line.field.primitive_element()));
    }
    Ok(UnitGroupDescription {
        m,
        constant_order,
        rank: line.roots.len(),
        invariant_factors: normalize_factors(&orders),
        generators,
    })
}

/// A quotient of polynomials in `nu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: Poly) -> RationalFunction {
        let one = Poly::constant(p.field().one());
        RationalFunction { num: p, den: one }
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    /// `f((a nu + b) / (c nu + d))` by homogeneous composition.
    pub fn substitute_moebius(&self, m: &Moebius) -> RationalFunction {
        let f = self.num.field();
        let top = Poly::linear(m.a, m.b);
        let bottom = Poly::linear(m.c, m.d);
        let hom = |p: &Poly| -> (Poly, usize) {
            let deg = p.degree().unwrap_or(0);
            let mut acc = Poly::zero(f);
            for (k, &coef) in p.coeffs().iter().enumerate() {
                let term = &top.pow(k as u32) * &bottom.pow((deg - k) as u32);
                acc = &acc + &term.scale(coef);
            }
            (acc, deg)
        };
        let (n, dn) = hom(&self.num);
        let (d, dd) = hom(&self.den);
        if dd >= dn {
            RationalFunction { num: &n * &bottom.pow((dd - dn) as u32), den: d }
        } else {
            RationalFunction { num: n, den: &d * &bottom.pow((dn - dd) as u32) }
        }
    }
}

/// Splits off all factors `nu - rho_j`; returns the exponents and the
/// remaining polynomial.
fn strip_roots(line: &LocalizedLine, p: &Poly) -> Result<(Vec<i64>, Poly)> {
    if p.is_zero() {
        return Err(Error::NotAUnit("zero".into()));
    }
    let f = line.field;
    let mut rest = p.clone();
    let mut exps = vec![0i64; line.roots.len()];
    for (j, &r) in line.roots.iter().enumerate() {
        let lin = Poly::linear(f.one(), -r);
        while let Some(q) = rest.div_exact(&lin)? {
            rest = q;
            exps[j] += 1;
        }
    }
    Ok((exps, rest))
}

/// The class of a unit of the localized ring modulo `m`-th powers.
pub fn factor_unit(line: &LocalizedLine, f: &RationalFunction, m: u64) -> Result<UnitClass> {
    let (en, rn) = strip_roots(line, &f.num)?;
    let (ed, rd) = strip_roots(line, &f.den)?;
    if rn.degree() != Some(0) || rd.degree() != Some(0) {
        return Err(Error::NotAUnit("not a unit of the localized ring".into()));
    }
    let c = rn.leading() / rd.leading();
    let mut u = line.unit(m);
    u.constant = line.constant_class(c, m)?;
    for j in 0..en.len() {
        u.exponents[j] = (en[j] - ed[j]).rem_euclid(m as i64) as u64;
    }
    Ok(u)
}

/// `nu -> (a nu + b) / (c nu + d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Moebius {
    pub a: Fq,
    pub b: Fq,
    pub c: Fq,
    pub d: Fq,
}

impl Moebius {
    pub fn new(a: Fq, b: Fq, c: Fq, d: Fq) -> Result<Moebius> {
        if (a * d - b * c).is_zero() {
            return Err(Error::SingularMoebius);
        }
        Ok(Moebius { a, b, c, d })
    }

    pub fn identity(f: Field) -> Moebius {
        Moebius { a: f.one(), b: f.zero(), c: f.zero(), d: f.one() }
    }

    pub fn inverse(&self) -> Moebius {
        Moebius { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// `self` after `other`: `nu -> self(other(nu))`.
    pub fn compose(&self, other: &Moebius) -> Moebius {
        Moebius {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }
}

/// Class of `(alpha nu + beta)`, requiring the root to be a localized one.
fn linear_class(line: &LocalizedLine, alpha: Fq, beta: Fq, m: u64) -> Result<UnitClass> {
    let mut u = line.unit(m);
    if alpha.is_zero() {
        u.constant = line.constant_class(beta, m)?;
        return Ok(u);
    }
    let root = -(beta / alpha);
    let j = line
        .root_index(root)
        .ok_or_else(|| Error::NotAUnit("substitution not unit-preserving".into()))?;
    u.constant = line.constant_class(alpha, m)?;
    u.exponents[j] = 1 % m;
    Ok(u)
}

/// Pulls a unit class back along a Möbius map, one factor at a time:
/// `nu - rho` becomes `((a - rho c) nu + (b - rho d)) / (c nu + d)`.
pub fn moebius_pullback(line: &LocalizedLine, map: &Moebius, u: &UnitClass) -> Result<UnitClass> {
    let map = Moebius::new(map.a, map.b, map.c, map.d)?;
    let m = u.m;
    let den = linear_class(line, map.c, map.d, m)?;
    let mut acc = line.unit(m);
    acc.constant = u.constant;
    for (j, &e) in u.exponents.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let rho = line.roots[j];
        let num = linear_class(line, map.a - rho * map.c, map.b - rho * map.d, m)?;
        let factor = num.mul(&den.inverse());
        for _ in 0..e {
            acc = acc.mul(&factor);
        }
    }
    Ok(acc)
}

/// The three generators of `GL_2(3)` used for the module, in the order
/// of [`FiniteGroup::gl2`].
pub const GENERATOR_NAMES: [&str; 3] = ["M2", "i", "M1"];

/// Generator matrices of the module in row form, in the order of
/// [`GENERATOR_NAMES`].
pub const REFERENCE_MATRICES: [[[u8; 6]; 6]; 3] = [
    [
        [0, 0, 1, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 1, 0, 0],
    ],
    [
        [1, 0, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0],
        [1, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0, 1],
        [0, 0, 0, 1, 1, 0],
    ],
    [
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
    ],
];

/// Coordinate labels of the module: `(nu_c - xi^j)` for blocks `c = 1, 2`.
pub const BASIS_LABELS: [&str; 6] = ["nu1-1", "nu1-xi", "nu1-xi^2", "nu2-1", "nu2-xi", "nu2-xi^2"];

/// Action of a generator on `k[mu, omega, 1/(mu^3 - 1)] / (omega^2 + omega + 1)`:
/// `mu -> (a mu + b) / (c mu + d)` with coefficients depending on `omega`,
/// and `omega -> omega^e`.
struct RingAction {
    coefficients: fn(Fq) -> [Fq; 4],
    omega_exponent: u64,
}

fn generator_actions() -> [RingAction; 3] {
    [
        RingAction {
            coefficients: |w| {
                let f = w.field();
                [w, f.zero(), f.zero(), f.one()]
            },
            omega_exponent: 1,
        },
        RingAction {
            coefficients: |w| {
                let f = w.field();
                [f.one(), f.from_int(2), f.one(), f.from_int(-1)]
            },
            omega_exponent: 1,
        },
        RingAction { coefficients: |w| [w.field().one(), w.field().zero(), w.field().zero(), w.field().one()], omega_exponent: 2 },
    ]
}

/// The cube roots of unity `[1, xi, xi^2]` with `xi` the field's chosen
/// primitive cube root.
fn cube_roots(field: Field) -> Result<[Fq; 3]> {
    let xi = field
        .primitive_cube_root()?
        .ok_or_else(|| Error::InvalidParameter("the field has no primitive cube root".into()))?;
    Ok([field.one(), xi, xi * xi])
}

/// A derived module together with the matrices it was built from.
#[derive(Clone, Debug)]
pub struct DerivedModule {
    pub module: GModule,
    /// Row-form generator matrices in the order of [`GENERATOR_NAMES`].
    pub matrices: Vec<ZModMatrix>,
}

impl DerivedModule {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "basis": BASIS_LABELS,
            "generators": GENERATOR_NAMES,
            "matrices": self.matrices.iter().map(|m| m.to_rows()).collect::<Vec<_>>(),
        })
    }
}

/// Derives the action matrices of the generators on the classes of
/// `nu_c - xi^j` by splitting `k[mu, omega]` into the two factors
/// `omega = xi` and `omega = xi^2`, substituting, and factoring the results.
pub fn derive_action_matrices(field: Field) -> Result<Vec<ZModMatrix>> {
    if field.characteristic() == 3 {
        return Err(Error::CharacteristicThree);
    }
    if field.characteristic() != 2 {
        return Err(Error::InvalidParameter("the module is built in characteristic 2".into()));
    }
    let roots = cube_roots(field)?;
    let line = LocalizedLine::new(field, &roots)?;
    let xi = roots[1];
    let omega_at = |c: usize| xi.pow(c as u64 + 1);
    let mut out = Vec::new();
    for action in generator_actions() {
        let mut mat = ZModMatrix::zero(2, 6, 6);
        for c0 in 0..2 {
            for j in 0..3 {
                // The element with component c0 equal to nu - xi^j and the
                // other component 1.
                for c in 0..2 {
                    let target = omega_at(c).pow(action.omega_exponent);
                    let source = (0..2).find(|&s| omega_at(s) == target).expect("cube root");
                    if source != c0 {
                        continue;
                    }
                    let [a, b, cc, d] = (action.coefficients)(omega_at(c));
                    let map = Moebius::new(a, b, cc, d)?;
                    let f = RationalFunction::from_poly(Poly::linear(field.one(), -roots[j]));
                    let image = factor_unit(&line, &f.substitute_moebius(&map), 2)?;
                    let direct = moebius_pullback(&line, &map, &line.generator(j, 2))?;
                    if image != direct {
                        return Err(Error::Internal("substitution and factorwise pullback disagree".into()));
                    }
                    for (k, &e) in image.exponents.iter().enumerate() {
                        mat.set(3 * c0 + j, 3 * c + k, e);
                    }
                }
            }
        }
        out.push(mat);
    }
    Ok(out)
}

pub fn reference_matrices() -> Vec<ZModMatrix> {
    REFERENCE_MATRICES
        .iter()
        .map(|m| {
            let rows: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
            ZModMatrix::from_rows(2, &rows).expect("square literal")
        })
        .collect()
}

/// Builds the module over a fresh `GL_2(3)` and checks the derived table
/// against [`REFERENCE_MATRICES`].
pub fn build_unit_class_module(field: Field) -> Result<DerivedModule> {
    let group = Arc::new(FiniteGroup::gl2(3)?);
    build_module_over(&group, field)
}

/// As [`build_unit_class_module`] over a given copy of `GL_2(3)`.
pub fn build_module_over(group: &Arc<FiniteGroup>, field: Field) -> Result<DerivedModule> {
    let matrices = derive_action_matrices(field)?;
    let reference = reference_matrices();
    for (k, (d, r)) in matrices.iter().zip(&reference).enumerate() {
        if d != r {
            return Err(Error::DerivedTableMismatch(format!(
                "derived action table disagrees with the reference matrices for {}",
                GENERATOR_NAMES[k]
            )));
        }
    }
    let mut ordered = Vec::new();
    for &g in group.generators() {
        let pos = GENERATOR_NAMES
            .iter()
            .position(|name| gl23_index(group, name) == Some(g))
            .ok_or_else(|| Error::NotGl23("generators are not M2, i, M1".into()))?;
        ordered.push(matrices[pos].clone());
    }
    let module = GModule::new(group.clone(), &[2; 6], &ordered)?;
    Ok(DerivedModule { module, matrices })
}

/// The permutation matrix of Frobenius on the module,
/// `(nu_c - rho) -> (nu_{3-c} - rho^2)`, checked to commute with the action
/// of every group element.
pub fn galois_lambda_action(module: &GModule) -> Result<ZModMatrix> {
    let field = Field::new(2, 2)?;
    let roots = cube_roots(field)?;
    let mut lambda = ZModMatrix::zero(2, 6, 6);
    for c in 0..2 {
        for j in 0..3 {
            let k = roots.iter().position(|&r| r == roots[j].frobenius()).expect("closed under Frobenius");
            lambda.set(3 * c + j, 3 * (1 - c) + k, 1);
        }
    }
    if module.dim() != 6 || module.moduli() != [2; 6] {
        return Err(Error::GaloisIncompatible("module has the wrong shape".into()));
    }
    for g in 0..module.group().order() {
        let a = module.matrix(g);
        if &lambda * a != a * &lambda {
            return Err(Error::GaloisIncompatible("semilinearity check failed".into()));
        }
    }
    if &lambda * &lambda != ZModMatrix::identity(2, 6) {
        return Err(Error::GaloisIncompatible("lambda is not an involution".into()));
    }
    Ok(lambda)
}

/// `s_1(mu) omega + s_0(mu)` as `(s_0, s_1)`.
pub type OmegaPoly = (Poly, Poly);

/// `s_1 omega + s_0 -> (s_1 xi + s_0, s_1 xi^2 + s_0)`.
pub fn crt_split(xi: Fq, s: &OmegaPoly) -> (Poly, Poly) {
    let (s0, s1) = s;
    (&s1.scale(xi) + s0, &s1.scale(xi * xi) + s0)
}

/// `f_1 (omega/(xi - xi^2) + xi/(xi - 1)) + f_2 (-omega/(xi - xi^2) - 1/(xi - 1))`.
pub fn crt_join(xi: Fq, f: &(Poly, Poly)) -> OmegaPoly {
    let (f1, f2) = f;
    let alpha = (xi - xi * xi).inv().expect("distinct roots");
    let beta = (xi - xi.field().one()).inv().expect("distinct roots");
    let s1 = (f1 - f2).scale(alpha);
    let s0 = &f1.scale(xi * beta) - &f2.scale(beta);
    (s0, s1)
}

/// Checks both composites of splitting and joining on `{1, omega} x mu^e`
/// and on `{(nu^e, 0), (0, nu^e)}` for `e <= max_degree`; returns the
/// number of basis elements checked.
pub fn crt_roundtrip_check(field: Field, max_degree: u32) -> Result<usize> {
    let xi = cube_roots(field)?[1];
    let zero = Poly::zero(field);
    let mut checked = 0;
    for e in 0..=max_degree {
        let mono = Poly::x(field).pow(e);
        for basis in [(mono.clone(), zero.clone()), (zero.clone(), mono.clone())] {
            if crt_join(xi, &crt_split(xi, &basis)) != basis {
                return Err(Error::Internal(format!("join after split fails on degree {e}")));
            }
            if crt_split(xi, &crt_join(xi, &basis)) != basis {
                return Err(Error::Internal(format!("split after join fails on degree {e}")));
            }
            checked += 2;
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4_line() -> (Field, LocalizedLine) {
        let f = Field::new(2, 2).unwrap();
        let r = cube_roots(f).unwrap();
        (f, LocalizedLine::new(f, &r).unwrap())
    }

    #[test]
    fn unit_groups() {
        let (_, line) = f4_line();
        assert_eq!(unit_group_mod_powers(&line, 2).unwrap().invariant_factors, vec![2, 2, 2]);
        let f2 = Field::new(2, 1).unwrap();
        let l = LocalizedLine::inverting(f2, &[f2.zero(), f2.from_int(1728)]).unwrap();
        assert_eq!(unit_group_mod_powers(&l, 2).unwrap().invariant_factors, vec![2]);
        let f7 = Field::new(7, 1).unwrap();
        let l = LocalizedLine::inverting(f7, &[f7.zero(), f7.from_int(1728)]).unwrap();
        let d = unit_group_mod_powers(&l, 2).unwrap();
        assert_eq!((d.rank, d.constant_order), (2, 2));
    }

    #[test]
    fn factor_examples() {
        let (f, line) = f4_line();
        let r = line.roots().to_vec();
        let three = Poly::constant(f.from_int(3));
        let g = RationalFunction::new(three, Poly::linear(f.one(), -r[0])).unwrap();
        assert_eq!(factor_unit(&line, &g, 2).unwrap().exponents, vec![1, 0, 0]);
        let p = &Poly::linear(f.one(), -r[2]) * &Poly::linear(f.one(), -r[0]);
        assert_eq!(factor_unit(&line, &RationalFunction::from_poly(p), 2).unwrap().exponents, vec![1, 0, 1]);
        let bad = RationalFunction::from_poly(Poly::linear(f.one(), f.zero()));
        assert!(matches!(factor_unit(&line, &bad, 2), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn pullback_examples() {
        let (f, line) = f4_line();
        let map = Moebius::new(f.one(), f.from_int(2), f.one(), f.from_int(-1)).unwrap();
        assert_eq!(moebius_pullback(&line, &map, &line.generator(0, 2)).unwrap().exponents, vec![1, 0, 0]);
        assert_eq!(moebius_pullback(&line, &map, &line.generator(1, 2)).unwrap().exponents, vec![1, 0, 1]);
        let id = Moebius::identity(f);
        assert_eq!(moebius_pullback(&line, &id, &line.generator(2, 2)).unwrap(), line.generator(2, 2));
    }

    #[test]
    fn derived_module_matches_reference() {
        let f = Field::new(2, 2).unwrap();
        let d = build_unit_class_module(f).unwrap();
        assert_eq!(d.matrices, reference_matrices());
        let f16 = Field::new(2, 4).unwrap();
        assert!(build_unit_class_module(f16).is_ok());
        assert!(build_unit_class_module(Field::new(2, 3).unwrap()).is_err());
    }

    #[test]
    fn lambda_is_the_expected_permutation() {
        let d = build_unit_class_module(Field::new(2, 2).unwrap()).unwrap();
        let l = galois_lambda_action(&d.module).unwrap();
        let perm = [3, 5, 4, 0, 2, 1];
        for (a, &p) in perm.iter().enumerate() {
            for b in 0..6 {
                assert_eq!(l.get(a, b), (b == p) as u64);
            }
        }
    }

    #[test]
    fn crt_roundtrip() {
        assert_eq!(crt_roundtrip_check(Field::new(2, 2).unwrap(), 6).unwrap(), 28);
    }
}
