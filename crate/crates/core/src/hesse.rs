//! Curves `X^3 + Y^3 + Z^3 = 3 mu XYZ` over finite fields: the group law,
//! the full level-3 structure and the action of `GL_2(3)` on presentations.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Fq};
use crate::group::FiniteGroup;

/// Homogeneous polynomial in `X, Y, Z`, keyed by the exponents of `X`
/// and `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPoly {
    field: Field,
    degree: u32,
    terms: BTreeMap<(u32, u32), Fq>,
}

impl HomPoly {
    pub fn zero(field: Field, degree: u32) -> HomPoly {
        HomPoly { field, degree, terms: BTreeMap::new() }
    }

    /// The linear form `a X + b Y + c Z`.
    pub fn linear(field: Field, l: [Fq; 3]) -> HomPoly {
        let mut p = HomPoly::zero(field, 1);
        p.add_term((1, 0), l[0]);
        p.add_term((0, 1), l[1]);
        p.add_term((0, 0), l[2]);
        p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, x: u32, y: u32) -> Fq {
        self.terms.get(&(x, y)).copied().unwrap_or(self.field.zero())
    }

    pub fn add_term(&mut self, key: (u32, u32), c: Fq) {
        assert!(key.0 + key.1 <= self.degree);
        let v = self.coeff(key.0, key.1) + c;
        if v.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, v);
        }
    }

    pub fn add(&self, other: &HomPoly) -> HomPoly {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (&k, &c) in &other.terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn scale(&self, c: Fq) -> HomPoly {
        let mut out = HomPoly::zero(self.field, self.degree);
        for (&k, &v) in &self.terms {
            out.add_term(k, v * c);
        }
        out
    }

    pub fn mul(&self, other: &HomPoly) -> HomPoly {
        let mut out = HomPoly::zero(self.field, self.degree + other.degree);
        for (&(a, b), &u) in &self.terms {
            for (&(c, d), &v) in &other.terms {
                out.add_term((a + c, b + d), u * v);
            }
        }
        out
    }

    pub fn eval(&self, v: [Fq; 3]) -> Fq {
        let mut acc = self.field.zero();
        for (&(a, b), &c) in &self.terms {
            let k = self.degree - a - b;
            acc += c * v[0].pow(a as u64) * v[1].pow(b as u64) * v[2].pow(k as u64);
        }
        acc
    }

    /// `p(L v)` where row `r` of `l` gives the `r`-th old coordinate as a
    /// linear form in the new ones.
    pub fn substitute(&self, l: &Matrix3) -> HomPoly {
        let forms: Vec<HomPoly> = l.iter().map(|row| HomPoly::linear(self.field, *row)).collect();
        let power = |f: &HomPoly, e: u32| {
            let mut acc = HomPoly::zero(self.field, 0);
            acc.add_term((0, 0), self.field.one());
            for _ in 0..e {
                acc = acc.mul(f);
            }
            acc
        };
        let mut out = HomPoly::zero(self.field, self.degree);
        for (&(a, b), &c) in &self.terms {
            let k = self.degree - a - b;
            let t = power(&forms[0], a).mul(&power(&forms[1], b)).mul(&power(&forms[2], k));
            out = out.add(&t.scale(c));
        }
        out
    }

    /// The scalar `lambda` with `self = lambda * other`, if any.
    pub fn proportionality(&self, other: &HomPoly) -> Option<Fq> {
        if self.degree != other.degree {
            return None;
        }
        let (&k, &v) = other.terms.iter().next()?;
        let lambda = self.coeff(k.0, k.1) / v;
        (other.scale(lambda) == *self).then_some(lambda)
    }
}

/// A 3x3 matrix over a field, acting on column vectors.
pub type Matrix3 = [[Fq; 3]; 3];

pub fn mat3_apply(m: &Matrix3, v: [Fq; 3]) -> [Fq; 3] {
    [0, 1, 2].map(|i| m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2])
}

pub fn mat3_mul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    [0, 1, 2].map(|i| [0, 1, 2].map(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j]))
}

pub fn mat3_identity(f: Field) -> Matrix3 {
    [0, 1, 2].map(|i| [0, 1, 2].map(|j| if i == j { f.one() } else { f.zero() }))
}

/// Scales a nonzero vector so its first nonzero coordinate is 1.
pub fn normalize(v: [Fq; 3]) -> Option<[Fq; 3]> {
    let lead = v.iter().find(|c| !c.is_zero())?;
    let inv = lead.inv().ok()?;
    Some(v.map(|c| c * inv))
}

pub fn projectively_equal(a: [Fq; 3], b: [Fq; 3]) -> bool {
    normalize(a).is_some() && normalize(a) == normalize(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HesseCurve {
    field: Field,
    mu: Fq,
}

impl HesseCurve {
    pub fn new(mu: Fq) -> Result<HesseCurve> {
        let field = mu.field();
        if field.characteristic() == 3 {
            return Err(Error::CharacteristicThree);
        }
        if mu.pow(3).is_one() {
            return Err(Error::SingularCurve(format!("mu = {mu} has mu^3 = 1")));
        }
        Ok(HesseCurve { field, mu })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn mu(&self) -> Fq {
        self.mu
    }

    /// `X^3 + Y^3 + Z^3 - 3 mu XYZ`.
    pub fn equation(&self) -> HomPoly {
        hesse_form(self.mu)
    }

    pub fn contains(&self, v: [Fq; 3]) -> bool {
        let [x, y, z] = v;
        (x.pow(3) + y.pow(3) + z.pow(3) - self.field.from_int(3) * self.mu * x * y * z).is_zero()
    }

    pub fn point(&self, v: [Fq; 3]) -> Result<HessePoint> {
        let coords = normalize(v).ok_or_else(|| Error::InvalidParameter("[0:0:0] is not a point".into()))?;
        if !self.contains(coords) {
            return Err(Error::NotOnCurve(format!("{} is not on the curve with mu = {}", fmt_point(coords), self.mu)));
        }
        Ok(HessePoint { curve: *self, coords })
    }

    pub fn identity(&self) -> HessePoint {
        let f = self.field;
        HessePoint { curve: *self, coords: [f.one(), -f.one(), f.zero()] }
    }

    /// All points, by solving for `Z` over each `[X:Y]` (small fields only).
    pub fn points(&self) -> Vec<HessePoint> {
        let f = self.field;
        let mut out = Vec::new();
        let mut push = |v: [Fq; 3]| {
            if self.contains(v) {
                out.push(HessePoint { curve: *self, coords: v });
            }
        };
        for x in f.elements() {
            for y in f.elements() {
                push([f.one(), x, y]);
            }
        }
        for y in f.elements() {
            push([f.zero(), f.one(), y]);
        }
        push([f.zero(), f.zero(), f.one()]);
        out
    }

    fn make(&self, v: [Fq; 3], what: &str) -> Result<HessePoint> {
        let coords = normalize(v).ok_or_else(|| Error::Internal(format!("degenerate {what}")))?;
        if !self.contains(coords) {
            return Err(Error::Internal(format!("{what} left the curve")));
        }
        Ok(HessePoint { curve: *self, coords })
    }
}

/// `X^3 + Y^3 + Z^3 - 3 mu XYZ` as a form.
pub fn hesse_form(mu: Fq) -> HomPoly {
    let f = mu.field();
    let mut p = HomPoly::zero(f, 3);
    p.add_term((3, 0), f.one());
    p.add_term((0, 3), f.one());
    p.add_term((0, 0), f.one());
    p.add_term((1, 1), -(f.from_int(3) * mu));
    p
}

fn fmt_point(v: [Fq; 3]) -> String {
    format!("[{}:{}:{}]", v[0], v[1], v[2])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HessePoint {
    curve: HesseCurve,
    coords: [Fq; 3],
}

impl fmt::Display for HessePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_point(self.coords))
    }
}

impl Serialize for HessePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl HessePoint {
    pub fn curve(&self) -> HesseCurve {
        self.curve
    }

    pub fn coords(&self) -> [Fq; 3] {
        self.coords
    }

    pub fn is_identity(&self) -> bool {
        *self == self.curve.identity()
    }

    pub fn neg(&self) -> HessePoint {
        let [x, y, z] = self.coords;
        self.curve.make([y, x, z], "negation").expect("negation stays on the curve")
    }

    /// `x' = y(z^3 - x^3)`, `y' = x(y^3 - z^3)`, `z' = z(x^3 - y^3)`.
    pub fn double(&self) -> Result<HessePoint> {
        let [x, y, z] = self.coords;
        let (x3, y3, z3) = (x.pow(3), y.pow(3), z.pow(3));
        self.curve.make([y * (z3 - x3), x * (y3 - z3), z * (x3 - y3)], "doubling")
    }

    fn chord(p: [Fq; 3], q: [Fq; 3]) -> [Fq; 3] {
        let [x1, y1, z1] = p;
        let [x2, y2, z2] = q;
        [
            x2 * y1 * y1 * z2 - x1 * y2 * y2 * z1,
            x1 * x1 * y2 * z2 - x2 * x2 * y1 * z1,
            x2 * y2 * z1 * z1 - x1 * y1 * z2 * z2,
        ]
    }

    /// The chord formula for distinct points.
    pub fn add(&self, other: &HessePoint) -> Result<HessePoint> {
        self.check_same_curve(other)?;
        if self == other {
            return Err(Error::InvalidParameter("use doubling for equal points".into()));
        }
        self.curve.make(HessePoint::chord(self.coords, other.coords), "addition")
    }

    /// The second addition chart, used where the chord formula vanishes.
    fn add_second_chart(&self, other: &HessePoint) -> Option<[Fq; 3]> {
        let [z1, y1, x1] = self.coords;
        let [z2, y2, x2] = other.coords;
        let x3 = z2 * z2 * x1 * z1 - y1 * y1 * x2 * y2;
        let y3 = y2 * y2 * y1 * z1 - x1 * x1 * x2 * z2;
        let z3 = x2 * x2 * x1 * y1 - z1 * z1 * y2 * z2;
        normalize([z3, y3, x3])
    }

    /// Total addition: doubling for equal points, the chord formula
    /// otherwise, and a second chart where the chord formula vanishes.
    pub fn add_total(&self, other: &HessePoint) -> Result<HessePoint> {
        self.check_same_curve(other)?;
        if self == other {
            return self.double();
        }
        let s = HessePoint::chord(self.coords, other.coords);
        if normalize(s).is_some() {
            return self.curve.make(s, "addition");
        }
        let r = self.add_second_chart(other).ok_or_else(|| Error::Internal("degenerate addition".into()))?;
        self.curve.make(r, "addition")
    }

    pub fn mul_scalar(&self, n: i64) -> Result<HessePoint> {
        let mut acc = self.curve.identity();
        let base = if n < 0 { self.neg() } else { *self };
        for _ in 0..n.unsigned_abs() {
            acc = acc.add_total(&base)?;
        }
        Ok(acc)
    }

    fn check_same_curve(&self, other: &HessePoint) -> Result<()> {
        if self.curve != other.curve {
            return Err(Error::Incompatible("points on different curves".into()));
        }
        Ok(())
    }
}

/// `xi(a, b)` for the structure with `xi(1, 0) = [-1:0:1]` and
/// `xi(0, 1) = [1:-omega:0]`: with `w = omega^b`, the points are
/// `[1:-w:0]`, `[-w:0:1]`, `[0:1:-w]` for `a = 0, 1, 2`.
pub fn reference_torsion_point(omega: Fq, a: u64, b: u64) -> [Fq; 3] {
    let f = omega.field();
    let w = omega.pow(b % 3);
    match a % 3 {
        0 => [f.one(), -w, f.zero()],
        1 => [-w, f.zero(), f.one()],
        _ => [f.zero(), f.one(), -w],
    }
}

/// The level-3 structure `(a, b) -> a P + b Q`.
#[derive(Clone, Debug, Serialize)]
pub struct Level3Structure {
    #[serde(skip)]
    curve: HesseCurve,
    pub omega: String,
    /// `table[a][b] = a P + b Q`.
    pub table: [[HessePoint; 3]; 3],
}

impl Level3Structure {
    pub fn curve(&self) -> HesseCurve {
        self.curve
    }

    pub fn point(&self, a: u64, b: u64) -> HessePoint {
        self.table[(a % 3) as usize][(b % 3) as usize]
    }
}

fn check_cube_root(omega: Fq) -> Result<()> {
    if omega.is_one() || !omega.pow(3).is_one() {
        return Err(Error::InvalidParameter(format!("{omega} is not a primitive cube root of unity")));
    }
    Ok(())
}

/// Builds the table from `P` and `Q` by the group law, compares it with
/// [`reference_torsion_point`] and checks additivity on all pairs.
pub fn level3_table(curve: &HesseCurve, omega: Fq) -> Result<Level3Structure> {
    check_cube_root(omega)?;
    let p = curve.point(reference_torsion_point(omega, 1, 0))?;
    let q = curve.point(reference_torsion_point(omega, 0, 1))?;
    let id = curve.identity();
    let mut table = [[id; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            table[a][b] = p.mul_scalar(a as i64)?.add_total(&q.mul_scalar(b as i64)?)?;
            let expect = curve.point(reference_torsion_point(omega, a as u64, b as u64))?;
            if table[a][b] != expect {
                return Err(Error::DerivedTableMismatch(format!(
                    "level-3 table disagrees with the reference at ({a},{b}): {} vs {}",
                    table[a][b], expect
                )));
            }
        }
    }
    for v in 0..9 {
        for w in 0..9 {
            let (a1, b1, a2, b2) = (v / 3, v % 3, w / 3, w % 3);
            let sum = table[a1][b1].add_total(&table[a2][b2])?;
            if sum != table[(a1 + a2) % 3][(b1 + b2) % 3] {
                return Err(Error::DerivedTableMismatch(format!(
                    "level-3 map is not additive at ({a1},{b1}) + ({a2},{b2})"
                )));
            }
        }
        let pt = table[v / 3][v % 3];
        if !pt.mul_scalar(3)?.is_identity() {
            return Err(Error::DerivedTableMismatch(format!("{pt} is not 3-torsion")));
        }
    }
    Ok(Level3Structure { curve: *curve, omega: omega.to_string(), table })
}

/// A Hesse presentation: a parameter `mu` together with the chosen cube
/// root `omega` that fixes the level structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub mu: Fq,
    pub omega: Fq,
}

impl Presentation {
    pub fn new(mu: Fq, omega: Fq) -> Result<Presentation> {
        check_cube_root(omega)?;
        HesseCurve::new(mu)?;
        Ok(Presentation { mu, omega })
    }

    pub fn curve(&self) -> HesseCurve {
        HesseCurve::new(self.mu).expect("checked on construction")
    }

    pub fn torsion_point(&self, v: [u64; 2]) -> [Fq; 3] {
        reference_torsion_point(self.omega, v[0], v[1])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Gl23Generator {
    M1,
    M2,
    I,
}

impl Gl23Generator {
    pub const ALL: [Gl23Generator; 3] = [Gl23Generator::M2, Gl23Generator::I, Gl23Generator::M1];

    pub fn name(&self) -> &'static str {
        match self {
            Gl23Generator::M1 => "M1",
            Gl23Generator::M2 => "M2",
            Gl23Generator::I => "i",
        }
    }

    /// The matrix mod 3 acting on column vectors.
    pub fn matrix(&self) -> [[u64; 2]; 2] {
        match self {
            Gl23Generator::M1 => [[1, 0], [0, 2]],
            Gl23Generator::M2 => [[1, 0], [2, 1]],
            Gl23Generator::I => [[0, 2], [1, 0]],
        }
    }

    pub fn apply(&self, v: [u64; 2]) -> [u64; 2] {
        let m = self.matrix();
        [(m[0][0] * v[0] + m[0][1] * v[1]) % 3, (m[1][0] * v[0] + m[1][1] * v[1]) % 3]
    }
}

/// The transformed presentation.
pub fn beta(sigma: Gl23Generator, p: &Presentation) -> Result<Presentation> {
    let f = p.mu.field();
    let (mu, omega) = match sigma {
        Gl23Generator::M1 => (p.mu, p.omega * p.omega),
        Gl23Generator::M2 => (p.omega * p.mu, p.omega),
        Gl23Generator::I => ((p.mu + f.from_int(2)) / (p.mu - f.one()), p.omega),
    };
    Presentation::new(mu, omega).map_err(|e| Error::Internal(format!("presentation left the smooth locus: {e}")))
}

/// The isomorphism from the curve of `p` to the curve of `beta(sigma, p)`.
pub fn alpha(sigma: Gl23Generator, p: &Presentation) -> Matrix3 {
    let f = p.mu.field();
    let (o, w) = (f.one(), p.omega);
    match sigma {
        Gl23Generator::M1 => mat3_identity(f),
        Gl23Generator::M2 => [[o, f.zero(), f.zero()], [f.zero(), o, f.zero()], [f.zero(), f.zero(), w * w]],
        Gl23Generator::I => [[w, w * w, o], [w * w, w, o], [o, o, o]],
    }
}

/// Outcome of checking one generator on one presentation.
#[derive(Clone, Debug, Serialize)]
pub struct TransportCheck {
    pub generator: &'static str,
    pub mu: String,
    pub new_mu: String,
    /// `H_new(alpha v) = scalar * H_old(v)`.
    pub scalar: String,
}

/// Checks that `alpha` carries the curve of `p` onto that of `beta(sigma, p)`
/// up to a scalar and that `alpha(xi_p(sigma v))` is `xi_new(v)` projectively.
pub fn check_transport(sigma: Gl23Generator, p: &Presentation) -> Result<TransportCheck> {
    let q = beta(sigma, p)?;
    let a = alpha(sigma, p);
    let pulled = hesse_form(q.mu).substitute(&a);
    let scalar = pulled
        .proportionality(&hesse_form(p.mu))
        .filter(|s| !s.is_zero())
        .ok_or_else(|| Error::Internal(format!("{} does not map the curve onto its image", sigma.name())))?;
    for x in 0..3 {
        for y in 0..3 {
            let image = mat3_apply(&a, p.torsion_point(sigma.apply([x, y])));
            if !projectively_equal(image, q.torsion_point([x, y])) {
                return Err(Error::Internal(format!(
                    "{} does not transport the level structure at ({x},{y})",
                    sigma.name()
                )));
            }
        }
    }
    Ok(TransportCheck { generator: sigma.name(), mu: p.mu.to_string(), new_mu: q.mu.to_string(), scalar: scalar.to_string() })
}

/// Applies the generator word of a group element, first letter first.
pub fn beta_word(group: &FiniteGroup, names: &[Gl23Generator], g: usize, p: &Presentation) -> Result<Presentation> {
    let mut q = *p;
    for &s in group.word(g) {
        q = beta(names[s], &q)?;
    }
    Ok(q)
}

/// Checks `beta_h(beta_g(p)) = beta_{gh}(p)` for all `g, h` in the group,
/// where `names[k]` is the generator matching the group's `k`-th generator.
/// Returns the number of pairs checked.
pub fn check_composition_law(group: &FiniteGroup, names: &[Gl23Generator], p: &Presentation) -> Result<usize> {
    let n = group.order();
    let images: Vec<Presentation> = (0..n).map(|g| beta_word(group, names, g, p)).collect::<Result<_>>()?;
    for g in 0..n {
        for h in 0..n {
            let lhs = beta_word(group, names, h, &images[g])?;
            if lhs != images[group.mul(g, h)] {
                return Err(Error::Internal(format!("composition law fails for mu = {}", p.mu)));
            }
        }
    }
    Ok(n * n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FlexCase {
    HorizontalLine,
    VerticalLine,
    UnitProduct,
    NegativeSquare,
}

/// For a flex tangent `a x + b y + c = 0` of `x^3 + y^3 + beta = 3 x y`
/// with `a^3 != b^3`, returns `r` with `r^3 = beta` and the case used.
pub fn flex_cube_root(a: Fq, b: Fq, c: Fq, beta: Fq) -> Result<(Fq, FlexCase)> {
    let f = a.field();
    if f.characteristic() == 3 {
        return Err(Error::CharacteristicThree);
    }
    if a.pow(3) == b.pow(3) {
        return Err(Error::ExcludedSlope);
    }
    check_flex(a, b, c, beta)?;
    let (r, case) = if a.is_zero() {
        (c / b, FlexCase::HorizontalLine)
    } else if b.is_zero() {
        (c / a, FlexCase::VerticalLine)
    } else {
        // Normalize to y = a' x + c'.
        let a1 = -(a / b);
        let c1 = -(c / b);
        if (a1 * c1).is_one() {
            (-c1, FlexCase::UnitProduct)
        } else if c1 == -(a1 * a1) {
            (-a1, FlexCase::NegativeSquare)
        } else {
            return Err(Error::NotAFlexLine("no case of the flex condition applies".into()));
        }
    };
    if r.pow(3) != beta {
        return Err(Error::Internal("cube root check failed".into()));
    }
    Ok((r, case))
}

/// The restriction of the cubic to the line must be a nonzero multiple of
/// a cube of a linear polynomial.
fn check_flex(a: Fq, b: Fq, c: Fq, beta: Fq) -> Result<()> {
    use crate::poly::Poly;
    let f = a.field();
    // Parameterize by the coordinate whose coefficient is not forced to vanish.
    let (s, t) = if b.is_zero() { (b, a) } else { (a, b) };
    // Free variable u, dependent v = -(s u + c)/t; curve symmetric in x, y.
    let u = Poly::x(f);
    let v = Poly::linear(-(s / t), -(c / t));
    let cubic = &(&(&u.pow(3) + &v.pow(3)) + &Poly::constant(beta)) - &(&u * &v).scale(f.from_int(3));
    if cubic.degree() != Some(3) {
        return Err(Error::NotAFlexLine("line meets the curve in fewer than three points".into()));
    }
    let lc = cubic.leading();
    let ell = cubic.coeff(2) / (f.from_int(3) * lc);
    let cube = Poly::linear(f.one(), ell).pow(3).scale(lc);
    if cube != cubic {
        return Err(Error::NotAFlexLine("the line is not a flex tangent".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> (Field, Fq) {
        let f = Field::new(2, 2).unwrap();
        let w = f.primitive_cube_root().unwrap().unwrap();
        (f, w)
    }

    #[test]
    fn doubling_examples() {
        let (f, w) = f4();
        let c = HesseCurve::new(f.zero()).unwrap();
        let p = c.point(reference_torsion_point(w, 1, 0)).unwrap();
        assert_eq!(p.double().unwrap().coords(), normalize(reference_torsion_point(w, 2, 0)).unwrap());
        assert!(c.identity().double().unwrap().is_identity());
        let q = c.point(reference_torsion_point(w, 0, 1)).unwrap();
        assert_eq!(q.double().unwrap(), c.point(reference_torsion_point(w, 0, 2)).unwrap());
    }

    #[test]
    fn addition_examples() {
        let (f, w) = f4();
        let c = HesseCurve::new(f.zero()).unwrap();
        let p = c.point(reference_torsion_point(w, 1, 0)).unwrap();
        let q = c.point(reference_torsion_point(w, 0, 1)).unwrap();
        assert_eq!(c.identity().add(&p).unwrap(), p);
        assert_eq!(p.add(&q).unwrap(), c.point(reference_torsion_point(w, 1, 1)).unwrap());
        assert!(p.neg().add_total(&p).unwrap().is_identity());
        assert!(p.add(&p).is_err());
    }

    #[test]
    fn table_over_f4_and_f16() {
        for k in [2, 4] {
            let f = Field::new(2, k).unwrap();
            let w = f.primitive_cube_root().unwrap().unwrap();
            for mu in f.elements().filter(|m| !m.pow(3).is_one()) {
                let t = level3_table(&HesseCurve::new(mu).unwrap(), w).unwrap();
                assert_eq!(t.point(2, 1).coords(), normalize(reference_torsion_point(w, 2, 1)).unwrap());
            }
        }
    }

    #[test]
    fn generators_transport() {
        let f16 = Field::new(2, 4).unwrap();
        let w16 = f16.primitive_cube_root().unwrap().unwrap();
        for mu in f16.elements().filter(|m| !m.pow(3).is_one()) {
            let p = Presentation::new(mu, w16).unwrap();
            for s in Gl23Generator::ALL {
                check_transport(s, &p).unwrap();
            }
        }
    }

    #[test]
    fn group_law_exhaustive_small_fields() {
        for (p, k) in [(2, 2), (2, 4), (7, 1), (5, 2), (13, 1)] {
            let f = Field::new(p, k).unwrap();
            for mu in f.elements().filter(|m| !m.pow(3).is_one()) {
                let c = HesseCurve::new(mu).unwrap();
                let pts = c.points();
                for a in &pts {
                    assert_eq!(a.add_total(&c.identity()).unwrap(), *a);
                    assert!(a.add_total(&a.neg()).unwrap().is_identity());
                    for b in pts.iter().take(12) {
                        let ab = a.add_total(b).unwrap();
                        assert_eq!(ab, b.add_total(a).unwrap());
                        for d in pts.iter().take(5) {
                            assert_eq!(ab.add_total(d).unwrap(), a.add_total(&b.add_total(d).unwrap()).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn flex_cases() {
        let f = Field::new(7, 1).unwrap();
        // y = a x + c with a c = 1: beta = -c^3.
        let (a, c) = (f.from_int(2), f.from_int(4));
        let (r, case) = flex_cube_root(a, -f.one(), c, -(c.pow(3))).unwrap();
        assert_eq!((r, case), (-c, FlexCase::UnitProduct));
        // c = -a^2: beta = -a^3.
        let a = f.from_int(2);
        let (r, case) = flex_cube_root(a, -f.one(), -(a * a), -(a.pow(3))).unwrap();
        assert_eq!((r, case), (-a, FlexCase::NegativeSquare));
        assert_eq!(flex_cube_root(f.one(), f.one(), f.zero(), f.zero()), Err(Error::ExcludedSlope));
        assert!(matches!(
            flex_cube_root(f.from_int(2), -f.one(), f.one(), f.one()),
            Err(Error::NotAFlexLine(_))
        ));
    }
}
