//! The Weierstrass family `Y^2 Z + a_1 XYZ + a_3 YZ^2 = X^3` parameterized
//! by the quadric `C^2 + 3BC + 3B^2 = 0`, its coordinate change to Hesse
//! form, and the `j`-invariant of the family over the `j`-line.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Fq};
use crate::hesse::{hesse_form, mat3_apply, mat3_identity, mat3_mul, normalize, projectively_equal, HomPoly, Matrix3};

/// Integer polynomials in `B, C`, keyed by `(deg_B, deg_C)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly(BTreeMap<(u32, u32), i128>);

impl BiPoly {
    pub fn constant(c: i128) -> BiPoly {
        let mut p = BiPoly::default();
        p.add_term((0, 0), c);
        p
    }

    pub fn b() -> BiPoly {
        let mut p = BiPoly::default();
        p.add_term((1, 0), 1);
        p
    }

    pub fn c() -> BiPoly {
        let mut p = BiPoly::default();
        p.add_term((0, 1), 1);
        p
    }

    fn add_term(&mut self, k: (u32, u32), v: i128) {
        let e = self.0.entry(k).or_insert(0);
        *e += v;
        if *e == 0 {
            self.0.remove(&k);
        }
    }

    pub fn add(&self, o: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, &v) in &o.0 {
            out.add_term(k, v);
        }
        out
    }

    pub fn scale(&self, c: i128) -> BiPoly {
        let mut out = BiPoly::default();
        for (&k, &v) in &self.0 {
            out.add_term(k, v * c);
        }
        out
    }

    pub fn sub(&self, o: &BiPoly) -> BiPoly {
        self.add(&o.scale(-1))
    }

    pub fn mul(&self, o: &BiPoly) -> BiPoly {
        let mut out = BiPoly::default();
        for (&(a, b), &u) in &self.0 {
            for (&(c, d), &v) in &o.0 {
                out.add_term((a + c, b + d), u * v);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        (0..e).fold(BiPoly::constant(1), |acc, _| acc.mul(self))
    }

    /// Normal form modulo `C^2 + 3BC + 3B^2`: `C`-degree at most one.
    pub fn reduce_quadric(&self) -> BiPoly {
        let mut p = self.clone();
        while let Some((&(i, j), &v)) = p.0.iter().find(|((_, j), _)| *j >= 2) {
            p.0.remove(&(i, j));
            p.add_term((i + 1, j - 1), -3 * v);
            p.add_term((i + 2, j - 2), -3 * v);
        }
        p
    }

    pub fn eval(&self, b: Fq, c: Fq) -> Fq {
        let f = b.field();
        self.0
            .iter()
            .fold(f.zero(), |acc, (&(i, j), &v)| acc + f.from_int((v % f.characteristic() as i128) as i64) * b.pow(i as u64) * c.pow(j as u64))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.0.iter().map(|(&(i, j), &v)| format!("{v}*B^{i}*C^{j}")).collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `a_1 = 3C - 1`.
pub fn a1_poly() -> BiPoly {
    BiPoly::c().scale(3).sub(&BiPoly::constant(1))
}

/// `a_3 = -3C^2 - B - 3BC`.
pub fn a3_poly() -> BiPoly {
    let (b, c) = (BiPoly::b(), BiPoly::c());
    c.mul(&c).scale(-3).sub(&b).sub(&b.mul(&c).scale(3))
}

/// Outcome of the two exact identities.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolicIdentities {
    pub discriminant_cube: bool,
    pub a3_factorization: bool,
}

/// Checks `a_1^3 - 27 a_3 = (3C + 9B - 1)^3` and `a_3 = B(6C + 9B - 1)`
/// in `Z[B, C] / (C^2 + 3BC + 3B^2)`.
pub fn symbolic_identities() -> SymbolicIdentities {
    let (b, c) = (BiPoly::b(), BiPoly::c());
    let one = BiPoly::constant(1);
    let lhs = a1_poly().pow(3).sub(&a3_poly().scale(27)).reduce_quadric();
    let rhs = c.scale(3).add(&b.scale(9)).sub(&one).pow(3).reduce_quadric();
    let lhs2 = a3_poly().reduce_quadric();
    let rhs2 = b.mul(&c.scale(6).add(&b.scale(9)).sub(&one)).reduce_quadric();
    SymbolicIdentities { discriminant_cube: lhs == rhs, a3_factorization: lhs2 == rhs2 }
}

/// A point `(B, C)` on the quadric away from the excluded locus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeierstrassParams {
    pub b: Fq,
    pub c: Fq,
}

impl WeierstrassParams {
    pub fn new(b: Fq, c: Fq) -> Result<WeierstrassParams> {
        let f = b.field();
        if matches!(f.characteristic(), 2 | 3) {
            return Err(Error::InvalidParameter("characteristic 2 and 3 are not supported here".into()));
        }
        let three = f.from_int(3);
        if !(c * c + three * b * c + three * b * b).is_zero() {
            return Err(Error::InvalidParameter("(B, C) is not on the quadric".into()));
        }
        let p = WeierstrassParams { b, c };
        let excluded = [
            ("C", c),
            ("B", b),
            ("3C+9B-1", p.d9()),
            ("6C+9B-1", f.from_int(6) * c + f.from_int(9) * b - f.one()),
            ("a3", p.a3()),
        ];
        if let Some((name, _)) = excluded.iter().find(|(_, v)| v.is_zero()) {
            return Err(Error::InvalidParameter(format!("{name} vanishes")));
        }
        Ok(p)
    }

    pub fn a1(&self) -> Fq {
        self.c.field().from_int(3) * self.c - self.c.field().one()
    }

    pub fn a3(&self) -> Fq {
        let f = self.c.field();
        -(f.from_int(3) * self.c * self.c) - self.b - f.from_int(3) * self.b * self.c
    }

    /// `3C + 9B - 1`.
    fn d9(&self) -> Fq {
        let f = self.c.field();
        f.from_int(3) * self.c + f.from_int(9) * self.b - f.one()
    }

    /// `Y^2 Z + a_1 XYZ + a_3 YZ^2 - X^3`.
    pub fn equation(&self) -> HomPoly {
        let f = self.c.field();
        let mut p = HomPoly::zero(f, 3);
        p.add_term((0, 2), f.one());
        p.add_term((1, 1), self.a1());
        p.add_term((0, 1), self.a3());
        p.add_term((3, 0), -f.one());
        p
    }

    /// `omega = (C + B)/B`, a primitive cube root of unity.
    pub fn omega(&self) -> Fq {
        (self.c + self.b) / self.b
    }

    /// `mu = (3C - 1)/(3C + 9B - 1)`.
    pub fn mu(&self) -> Fq {
        self.a1() / self.d9()
    }

    /// The change of coordinates taking Hesse coordinates to Weierstrass
    /// coordinates.
    pub fn transformation(&self) -> Matrix3 {
        let f = self.c.field();
        let (w, d, a3) = (self.omega(), self.d9(), self.a3());
        let u = self.a1() / f.from_int(3);
        let three = f.from_int(3);
        [
            [f.zero(), f.zero(), -three / d],
            [w, w * w, three * u / d],
            [w * w / a3, w / a3, three * u / (a3 * d)],
        ]
    }

    pub fn transformation_inverse(&self) -> Matrix3 {
        let f = self.c.field();
        let (b, c) = (self.b, self.c);
        let three = f.from_int(3);
        let m = -self.a1() / three;
        [
            [m, b / c, (-f.from_int(9) * c * b - f.from_int(18) * b * b - c) / three],
            [m, -b / (c + three * b), (-f.from_int(9) * c * b - f.from_int(9) * b * b + c + three * b) / three],
            [-self.d9() / three, f.zero(), f.zero()],
        ]
    }

    /// The three sections `[0:1:0]`, `[0:0:1]`, `[C:B+C:1]`.
    pub fn sections(&self) -> [[Fq; 3]; 3] {
        let f = self.c.field();
        [[f.zero(), f.one(), f.zero()], [f.zero(), f.zero(), f.one()], [self.c, self.b + self.c, f.one()]]
    }
}

/// `(mu, omega) -> (B, C)` with `B = (mu - 1)/(3(omega + 2)(mu - omega))` and
/// `C = (omega - 1)(mu - 1)/(3(omega + 2)(mu - omega))`.
pub fn hesse_to_weierstrass(mu: Fq, omega: Fq) -> Result<(Fq, Fq)> {
    let f = mu.field();
    let den = f.from_int(3) * (omega + f.from_int(2)) * (mu - omega);
    if den.is_zero() {
        return Err(Error::InvalidParameter("denominator vanishes".into()));
    }
    Ok(((mu - f.one()) / den, (omega - f.one()) * (mu - f.one()) / den))
}

/// Aggregate of the random-point checks at one prime.
#[derive(Clone, Debug, Serialize)]
pub struct CoordinateChangeReport {
    pub prime: u64,
    pub points_checked: usize,
    pub points_rejected: usize,
    pub inverse_points_checked: usize,
    pub both_roots_used: bool,
}

fn fail(p: &WeierstrassParams, what: &str) -> Error {
    Error::VerificationFailed(format!("coordinate change verification failed ({what}) at B = {}, C = {}", p.b, p.c))
}

/// All checks at one valid point of the quadric.
pub fn check_point(p: &WeierstrassParams) -> Result<()> {
    let f = p.b.field();
    let ids = [
        (a1_poly().pow(3).sub(&a3_poly().scale(27)), {
            let (b, c) = (BiPoly::b(), BiPoly::c());
            c.scale(3).add(&b.scale(9)).sub(&BiPoly::constant(1)).pow(3)
        }),
        (a3_poly(), BiPoly::b().mul(&BiPoly::c().scale(6).add(&BiPoly::b().scale(9)).sub(&BiPoly::constant(1)))),
    ];
    for (l, r) in &ids {
        if l.eval(p.b, p.c) != r.eval(p.b, p.c) {
            return Err(fail(p, "ring identity"));
        }
    }
    let w = p.omega();
    if !(w * w + w + f.one()).is_zero() {
        return Err(fail(p, "omega is not a cube root of unity"));
    }
    let mu = p.mu();
    if mu.pow(3).is_one() {
        return Err(Error::InvalidParameter("mu^3 = 1".into()));
    }
    let (b, c) = hesse_to_weierstrass(mu, w).map_err(|_| fail(p, "inverse map undefined"))?;
    if (b, c) != (p.b, p.c) {
        return Err(fail(p, "round trip through (mu, omega)"));
    }
    let x = p.transformation();
    let xi = p.transformation_inverse();
    if mat3_mul(&x, &xi) != mat3_identity(f) || mat3_mul(&xi, &x) != mat3_identity(f) {
        return Err(fail(p, "transformation is not inverted"));
    }
    let targets = [[f.one(), -w, f.zero()], [f.one(), -(w * w), f.zero()], [-f.one(), f.zero(), f.one()]];
    let eq = p.equation();
    for (s, t) in p.sections().iter().zip(targets) {
        if !eq.eval(*s).is_zero() {
            return Err(fail(p, "section not on the Weierstrass curve"));
        }
        if !projectively_equal(mat3_apply(&xi, *s), t) {
            return Err(fail(p, "section not carried to the expected Hesse point"));
        }
    }
    let pulled = eq.substitute(&x);
    if pulled.proportionality(&hesse_form(mu)).is_none_or(|s| s.is_zero()) {
        return Err(fail(p, "curve not carried to the Hesse curve"));
    }
    Ok(())
}

/// A quadric point `C = B(-3 + s)/2` with `s^2 = -3`, using the given sign.
pub fn quadric_point(b: Fq, sign: bool) -> Result<Option<WeierstrassParams>> {
    let f = b.field();
    let s = f.from_int(-3).sqrt().ok_or_else(|| Error::InvalidParameter("-3 is not a square".into()))?;
    let s = if sign { s } else { -s };
    let c = b * (f.from_int(-3) + s) / f.from_int(2);
    Ok(WeierstrassParams::new(b, c).ok().filter(|p| !p.mu().pow(3).is_one()))
}

/// Random-point verification at the prime `p`, alternating the two square
/// roots of `-3`; also checks `phi_21 . phi_12 = id` at random `(mu, omega)`.
pub fn verify_coordinate_change<R: Rng + ?Sized>(prime: u64, trials: usize, rng: &mut R) -> Result<CoordinateChangeReport> {
    if prime % 3 != 1 {
        return Err(Error::InvalidParameter(format!("{prime} is not 1 mod 3")));
    }
    let f = Field::new(prime, 1)?;
    let mut checked = 0;
    let mut rejected = 0;
    let mut signs = [false; 2];
    let mut attempts = 0;
    while checked < trials {
        attempts += 1;
        if attempts > 100 * trials + 1000 {
            return Err(Error::InvalidParameter(format!("too few valid points over F_{prime}")));
        }
        let sign = attempts % 2 == 0;
        match quadric_point(f.random_nonzero(rng), sign)? {
            Some(p) => {
                check_point(&p)?;
                signs[sign as usize] = true;
                checked += 1;
            }
            None => rejected += 1,
        }
    }
    let omegas = [f.primitive_cube_root()?.expect("p = 1 mod 3"), f.primitive_cube_root()?.unwrap().pow(2)];
    let mut inverse_checked = 0;
    for k in 0..trials {
        let mu = f.random(rng);
        let omega = omegas[k % 2];
        let Ok((b, c)) = hesse_to_weierstrass(mu, omega) else { continue };
        let Ok(p) = WeierstrassParams::new(b, c) else { continue };
        if p.omega() != omega || p.mu() != mu {
            return Err(fail(&p, "round trip through (B, C)"));
        }
        inverse_checked += 1;
    }
    Ok(CoordinateChangeReport {
        prime,
        points_checked: checked,
        points_rejected: rejected,
        inverse_points_checked: inverse_checked,
        both_roots_used: signs[0] && signs[1],
    })
}

/// Invariants of `Y^2 Z + XYZ = X^3 - (36/(t - 1728)) XZ^2 - (1/(t - 1728)) Z^3`.
#[derive(Clone, Debug, Serialize)]
pub struct JInvariantReport {
    pub t: String,
    pub discriminant: String,
    pub j: String,
    pub discriminant_matches: bool,
    pub j_matches: bool,
}

/// Standard invariants `b_2, b_4, b_6, b_8, c_4, Delta, j` of a general
/// Weierstrass equation.
pub fn weierstrass_invariants(a: [Fq; 5]) -> (Fq, Fq) {
    let [a1, a2, a3, a4, a6] = a;
    let f = a1.field();
    let n = |k: i64| f.from_int(k);
    let b2 = a1 * a1 + n(4) * a2;
    let b4 = n(2) * a4 + a1 * a3;
    let b6 = a3 * a3 + n(4) * a6;
    let b8 = a1 * a1 * a6 + n(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    let c4 = b2 * b2 - n(24) * b4;
    let delta = -(b2 * b2 * b8) - n(8) * b4.pow(3) - n(27) * b6 * b6 + n(9) * b2 * b4 * b6;
    (delta, c4.pow(3))
}

pub fn j_invariant_check(t: Fq) -> Result<JInvariantReport> {
    let f = t.field();
    if matches!(f.characteristic(), 2 | 3) {
        return Err(Error::InvalidParameter("characteristic 2 and 3 are not supported here".into()));
    }
    let s = t - f.from_int(1728);
    if t.is_zero() || s.is_zero() {
        return Err(Error::InvalidParameter("t(t - 1728) must be nonzero".into()));
    }
    let a4 = -(f.from_int(36) / s);
    let a6 = -(f.one() / s);
    let (delta, c4_cubed) = weierstrass_invariants([f.one(), f.zero(), f.zero(), a4, a6]);
    if delta.is_zero() {
        return Err(Error::VerificationFailed("curve check failed: singular fibre".into()));
    }
    let j = c4_cubed / delta;
    let expected_delta = t * t / s.pow(3);
    Ok(JInvariantReport {
        t: t.to_string(),
        discriminant: delta.to_string(),
        j: j.to_string(),
        discriminant_matches: delta == expected_delta,
        j_matches: j == t,
    })
}

/// Normalized image of a point under a coordinate change.
pub fn transform_point(m: &Matrix3, v: [Fq; 3]) -> Option<[Fq; 3]> {
    normalize(mat3_apply(m, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identities_hold_symbolically() {
        let s = symbolic_identities();
        assert!(s.discriminant_cube && s.a3_factorization);
    }

    #[test]
    fn coordinate_change_small_primes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [7, 13, 31, 43] {
            let r = verify_coordinate_change(p, 20, &mut rng).unwrap();
            assert_eq!(r.points_checked, 20);
        }
    }

    #[test]
    fn j_examples() {
        let f7 = Field::new(7, 1).unwrap();
        let r = j_invariant_check(f7.one()).unwrap();
        assert!(r.j_matches && r.discriminant_matches);
        assert_eq!(r.j, "1");
        let f13 = Field::new(13, 1).unwrap();
        let r = j_invariant_check(f13.from_int(2)).unwrap();
        assert!(r.j_matches && r.discriminant_matches);
    }
}
