//! Finite fields `F_{p^k}` as `F_p[x]/(f)` with `f` taken from a fixed table.
//!
//! Fields are interned: constructing the same `(p, k)` twice yields the same
//! handle, so the defining polynomial never changes within a process.
//! Elements are small `Copy` values and support the usual operators.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use rand::Rng;

use crate::error::{Error, Result};
use crate::field_table::DEFINING_POLYNOMIALS;

/// Largest extension degree that is supported.
pub const MAX_DEGREE: u32 = 16;

#[derive(Debug)]
pub struct FieldDesc {
    p: u64,
    k: u32,
    order: u64,
    /// Coefficients of `x^0 .. x^{k-1}` of the monic defining polynomial.
    modulus: Vec<u64>,
}

/// Handle to an interned finite field.
#[derive(Clone, Copy)]
pub struct Field(&'static FieldDesc);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.order())
    }
}

fn registry() -> &'static Mutex<HashMap<(u64, u32), &'static FieldDesc>> {
    static REG: OnceLock<Mutex<HashMap<(u64, u32), &'static FieldDesc>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Modular exponentiation on machine integers.
pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    r
}

/// Prime factors of `n` (with no multiplicity), by trial division.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    /// Returns `F_{p^k}`. Prime fields are available for every prime below
    /// `2^32`; extensions only for the `(p, k)` pairs in the shipped table.
    pub fn new(p: u64, k: u32) -> Result<Field> {
        if k == 0 || k > MAX_DEGREE || !is_prime(p) {
            return Err(Error::UnsupportedField { p, k });
        }
        let modulus = if k == 1 {
            if p >= 1 << 32 {
                return Err(Error::UnsupportedField { p, k });
            }
            vec![0]
        } else {
            DEFINING_POLYNOMIALS
                .iter()
                .find(|(pp, kk, _)| *pp == p && *kk == k)
                .map(|(_, _, c)| c.to_vec())
                .ok_or(Error::UnsupportedField { p, k })?
        };
        let mut reg = registry().lock().expect("field registry poisoned");
        if let Some(d) = reg.get(&(p, k)) {
            return Ok(Field(d));
        }
        let desc: &'static FieldDesc = Box::leak(Box::new(FieldDesc {
            p,
            k,
            order: p.pow(k),
            modulus,
        }));
        reg.insert((p, k), desc);
        Ok(Field(desc))
    }

    /// Field of order `q`, where `q` is a prime power.
    pub fn with_order(q: u64) -> Result<Field> {
        let f = prime_factors(q);
        if f.len() != 1 {
            return Err(Error::UnsupportedField { p: q, k: 0 });
        }
        let p = f[0];
        let mut k = 0;
        let mut t = q;
        while t > 1 {
            t /= p;
            k += 1;
        }
        Field::new(p, k)
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Defining polynomial as coefficients `x^0 .. x^k` (the last one is 1).
    pub fn defining_polynomial(&self) -> Vec<u64> {
        let mut c = self.0.modulus.clone();
        if self.0.k == 1 {
            c = vec![0];
        }
        c.push(1);
        c
    }

    pub fn zero(&self) -> Fq {
        Fq { field: *self, repr: 0 }
    }

    pub fn one(&self) -> Fq {
        Fq { field: *self, repr: 1 }
    }

    /// The class of `x` in `F_p[x]/(f)`; for prime fields this is 0.
    pub fn generator(&self) -> Fq {
        if self.0.k == 1 {
            self.zero()
        } else {
            Fq { field: *self, repr: self.0.p }
        }
    }

    /// Element with the given index in the canonical enumeration
    /// (`sum c_i p^i` for the coefficient vector `c`).
    pub fn element(&self, repr: u64) -> Fq {
        assert!(repr < self.0.order, "element index out of range");
        Fq { field: *self, repr }
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> Fq {
        let p = self.0.p as i128;
        let r = ((n as i128 % p) + p) % p;
        Fq { field: *self, repr: r as u64 }
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Fq {
        assert!(coeffs.len() <= self.0.k as usize);
        let mut repr = 0u64;
        for &c in coeffs.iter().rev() {
            repr = repr * self.0.p + c % self.0.p;
        }
        Fq { field: *self, repr }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> + '_ {
        let f = *self;
        (0..self.0.order).map(move |r| Fq { field: f, repr: r })
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fq {
        Fq { field: *self, repr: rng.gen_range(0..self.0.order) }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Fq {
        Fq { field: *self, repr: rng.gen_range(1..self.0.order) }
    }

    /// The primitive cube root of unity that comes first in the canonical
    /// enumeration, or `None` when `3` does not divide `q - 1`.
    pub fn primitive_cube_root(&self) -> Result<Option<Fq>> {
        if self.0.p == 3 {
            return Err(Error::CharacteristicThree);
        }
        let q = self.0.order;
        if !(q - 1).is_multiple_of(3) {
            return Ok(None);
        }
        let e = (q - 1) / 3;
        for r in 2..q {
            let w = self.element(r).pow(e);
            if !w.is_one() {
                let w2 = w * w;
                return Ok(Some(if w.repr <= w2.repr { w } else { w2 }));
            }
        }
        unreachable!("cyclic group of order divisible by 3 has elements of order 3")
    }

    /// A generator of the multiplicative group (first one in enumeration).
    pub fn primitive_element(&self) -> Fq {
        let q = self.0.order;
        let fac = prime_factors(q - 1);
        for r in 1..q {
            let a = self.element(r);
            if fac.iter().all(|&l| !a.pow((q - 1) / l).is_one()) {
                return a;
            }
        }
        unreachable!()
    }

    fn check(&self, other: &Field) {
        assert!(self == other, "field elements belong to different fields");
    }
}

/// An element of a finite field.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fq {
    field: Field,
    repr: u64,
}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.0.p, self.0.k).hash(state)
    }
}

impl Fq {
    pub fn field(&self) -> Field {
        self.field
    }

    /// Index in the canonical enumeration of the field.
    pub fn repr(&self) -> u64 {
        self.repr
    }

    pub fn is_zero(&self) -> bool {
        self.repr == 0
    }

    pub fn is_one(&self) -> bool {
        self.repr == 1
    }

    /// Coefficients of the polynomial representative, `x^0` first.
    pub fn coeffs(&self) -> Vec<u64> {
        let d = self.field.0;
        let mut r = self.repr;
        (0..d.k)
            .map(|_| {
                let c = r % d.p;
                r /= d.p;
                c
            })
            .collect()
    }

    pub fn pow(self, mut e: u64) -> Fq {
        let mut base = self;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Power with a signed exponent; panics on `0^negative`.
    pub fn powi(self, e: i64) -> Fq {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inv().expect("negative power of zero").pow(e.unsigned_abs())
        }
    }

    pub fn inv(self) -> Result<Fq> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.field.0.order - 2))
    }

    pub fn checked_div(self, rhs: Fq) -> Result<Fq> {
        self.field.check(&rhs.field);
        Ok(self * rhs.inv()?)
    }

    /// The `p`-power Frobenius.
    pub fn frobenius(self) -> Fq {
        self.pow(self.field.0.p)
    }

    pub fn is_square(self) -> bool {
        if self.is_zero() || self.field.0.p == 2 {
            return true;
        }
        self.pow((self.field.0.order - 1) / 2).is_one()
    }

    /// A square root, if one exists (Tonelli-Shanks in odd characteristic).
    pub fn sqrt(self) -> Option<Fq> {
        let f = self.field;
        if self.is_zero() {
            return Some(self);
        }
        let q = f.0.order;
        if f.0.p == 2 {
            return Some(self.pow(q / 2));
        }
        if !self.is_square() {
            return None;
        }
        let mut s = 0u32;
        let mut t = q - 1;
        while t.is_multiple_of(2) {
            t /= 2;
            s += 1;
        }
        let z = (2..q)
            .map(|r| f.element(r))
            .find(|z| !z.is_square())
            .expect("odd field has a non-square");
        let mut m = s;
        let mut c = z.pow(t);
        let mut x = self.pow(t.div_ceil(2));
        let mut b = self.pow(t);
        while !b.is_one() {
            let mut i = 0;
            let mut bb = b;
            while !bb.is_one() {
                bb = bb * bb;
                i += 1;
            }
            let mut g = c;
            for _ in 0..(m - i - 1) {
                g = g * g;
            }
            x *= g;
            c = g * g;
            b *= c;
            m = i;
        }
        Some(x)
    }

    fn raw_mul(self, rhs: Fq) -> u64 {
        let d = self.field.0;
        let p = d.p;
        if d.k == 1 {
            return ((self.repr as u128 * rhs.repr as u128) % p as u128) as u64;
        }
        let k = d.k as usize;
        let a = self.coeffs();
        let b = rhs.coeffs();
        let mut prod = [0u64; 2 * MAX_DEGREE as usize];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % p;
            }
        }
        for deg in (k..2 * k - 1).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &m) in d.modulus.iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + (p - c) * m) % p;
            }
        }
        let mut repr = 0u64;
        for &c in prod[..k].iter().rev() {
            repr = repr * p + c;
        }
        repr
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.0.k == 1 {
            return write!(f, "{}", self.repr);
        }
        let c = self.coeffs();
        let mut terms = Vec::new();
        for (i, &ci) in c.iter().enumerate().rev() {
            if ci == 0 {
                continue;
            }
            let coef = if ci == 1 && i > 0 { String::new() } else { ci.to_string() };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl Add for Fq {
    type Output = Fq;
    fn add(self, rhs: Fq) -> Fq {
        self.field.check(&rhs.field);
        let d = self.field.0;
        if d.p == 2 {
            return Fq { field: self.field, repr: self.repr ^ rhs.repr };
        }
        if d.k == 1 {
            return Fq { field: self.field, repr: (self.repr + rhs.repr) % d.p };
        }
        let (mut a, mut b, mut out, mut scale) = (self.repr, rhs.repr, 0u64, 1u64);
        for _ in 0..d.k {
            out += ((a % d.p + b % d.p) % d.p) * scale;
            a /= d.p;
            b /= d.p;
            scale = scale.wrapping_mul(d.p);
        }
        Fq { field: self.field, repr: out }
    }
}

impl Neg for Fq {
    type Output = Fq;
    fn neg(self) -> Fq {
        let d = self.field.0;
        if d.p == 2 {
            return self;
        }
        if d.k == 1 {
            return Fq { field: self.field, repr: (d.p - self.repr) % d.p };
        }
        let (mut a, mut out, mut scale) = (self.repr, 0u64, 1u64);
        for _ in 0..d.k {
            out += ((d.p - a % d.p) % d.p) * scale;
            a /= d.p;
            scale = scale.wrapping_mul(d.p);
        }
        Fq { field: self.field, repr: out }
    }
}

impl Sub for Fq {
    type Output = Fq;
    fn sub(self, rhs: Fq) -> Fq {
        self + (-rhs)
    }
}

impl Mul for Fq {
    type Output = Fq;
    fn mul(self, rhs: Fq) -> Fq {
        self.field.check(&rhs.field);
        Fq { field: self.field, repr: self.raw_mul(rhs) }
    }
}

impl Div for Fq {
    type Output = Fq;
    /// Panics on division by zero; use [`Fq::checked_div`] otherwise.
    fn div(self, rhs: Fq) -> Fq {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl AddAssign for Fq {
    fn add_assign(&mut self, rhs: Fq) {
        *self = *self + rhs;
    }
}
impl SubAssign for Fq {
    fn sub_assign(&mut self, rhs: Fq) {
        *self = *self - rhs;
    }
}
impl MulAssign for Fq {
    fn mul_assign(&mut self, rhs: Fq) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_polynomial_and_cube_root() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.defining_polynomial(), vec![1, 1, 1]);
        let w = f.primitive_cube_root().unwrap().unwrap();
        assert_eq!(w.repr(), 2);
        assert!(w.pow(3).is_one());
        assert_eq!(w * w + w + f.one(), f.zero());
    }

    #[test]
    fn interning_is_stable() {
        let a = Field::new(2, 5).unwrap();
        let b = Field::new(2, 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.defining_polynomial(), b.defining_polynomial());
    }

    #[test]
    fn cube_roots_by_field() {
        assert!(matches!(Field::new(3, 2).unwrap().primitive_cube_root(), Err(Error::CharacteristicThree)));
        assert!(Field::new(2, 3).unwrap().primitive_cube_root().unwrap().is_none());
        let f7 = Field::new(7, 1).unwrap();
        assert_eq!(f7.primitive_cube_root().unwrap().unwrap().repr(), 2);
    }

    #[test]
    fn unsupported() {
        assert!(Field::new(4, 1).is_err());
        assert!(Field::new(2, 17).is_err());
        assert!(Field::new(47, 15).is_err());
    }

    #[test]
    fn defining_polynomials_are_irreducible() {
        // x must generate a field of degree exactly k.
        for &(p, k, _) in DEFINING_POLYNOMIALS.iter().filter(|(p, k, _)| p.pow(*k) <= 1 << 20) {
            let f = Field::new(p, k).unwrap();
            let x = f.generator();
            let mut y = x;
            for i in 1..=k {
                y = y.pow(p);
                assert_eq!(y == x, i == k, "p={p} k={k} i={i}");
            }
        }
    }

    #[test]
    fn sqrt_prime_fields() {
        for p in [7u64, 13, 31, 43] {
            let f = Field::new(p, 1).unwrap();
            let r = f.from_int(-3).sqrt().unwrap();
            assert_eq!(r * r, f.from_int(-3));
        }
        let f = Field::new(5, 2).unwrap();
        for a in f.elements() {
            if let Some(r) = a.sqrt() {
                assert_eq!(r * r, a);
            }
        }
    }
}
