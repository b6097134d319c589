use m11_brauer::field::{Field, Fq};
use m11_brauer::kummer::{crt_join, crt_split, factor_unit, moebius_pullback, LocalizedLine, Moebius, RationalFunction};
use m11_brauer::poly::Poly;
use m11_brauer::smith::{smith_mod, smith_normal_form};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn supported_orders() -> Vec<u64> {
    (2..=256).filter(|&q| Field::with_order(q).is_ok()).collect()
}

fn elem(f: Field, x: u64) -> Fq {
    f.element(x % f.order())
}

fn unit_fields() -> Vec<Field> {
    [4u64, 5, 7, 8, 9, 13, 16].iter().map(|&q| Field::with_order(q).unwrap()).collect()
}

/// `c * prod (nu - rho_j)^{e_j}` over every element `rho_j` of the field.
fn unit(f: Field, c: u64, exps: &[i64]) -> RationalFunction {
    let c = f.element(1 + c % (f.order() - 1));
    let mut num = Poly::constant(c);
    let mut den = Poly::constant(f.one());
    for (rho, &e) in f.elements().zip(exps) {
        let lin = Poly::linear(f.one(), -rho);
        if e > 0 {
            num = &num * &lin.pow(e as u32);
        } else if e < 0 {
            den = &den * &lin.pow((-e) as u32);
        }
    }
    RationalFunction::new(num, den).unwrap()
}

fn full_line(f: Field) -> LocalizedLine {
    LocalizedLine::new(f, &f.elements().collect::<Vec<_>>()).unwrap()
}

fn moebius(f: Field, v: [u64; 4]) -> Option<Moebius> {
    Moebius::new(elem(f, v[0]), elem(f, v[1]), elem(f, v[2]), elem(f, v[3])).ok()
}

fn det(a: &[Vec<BigInt>]) -> BigInt {
    // Fraction-free elimination.
    let n = a.len();
    let mut m = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else { return BigInt::zero() };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    (0..a.len())
        .map(|i| (0..b[0].len()).map(|j| (0..b.len()).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn field_axioms(qi in any::<usize>(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let orders = supported_orders();
        let f = Field::with_order(orders[qi % orders.len()]).unwrap();
        let (a, b, c) = (elem(f, a), elem(f, b), elem(f, c));
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a - a, f.zero());
        prop_assert_eq!(a * f.one(), a);
        if !a.is_zero() {
            prop_assert_eq!(a * a.inv().unwrap(), f.one());
            prop_assert_eq!(a.pow(f.order() - 1), f.one());
        }
        prop_assert_eq!((a + b).frobenius(), a.frobenius() + b.frobenius());
    }

    #[test]
    fn factor_unit_is_multiplicative(
        fi in 0usize..7, m in prop::sample::select(vec![2u64, 3, 4, 6]),
        c1 in any::<u64>(), c2 in any::<u64>(),
        e1 in prop::collection::vec(-3i64..4, 16), e2 in prop::collection::vec(-3i64..4, 16),
    ) {
        let f = unit_fields()[fi];
        let line = full_line(f);
        let (u, v) = (unit(f, c1, &e1), unit(f, c2, &e2));
        let fu = factor_unit(&line, &u, m).unwrap();
        let fv = factor_unit(&line, &v, m).unwrap();
        prop_assert_eq!(factor_unit(&line, &u.mul(&v), m).unwrap(), fu.mul(&fv));
        for (j, &e) in e1.iter().take(f.order() as usize).enumerate() {
            prop_assert_eq!(fu.exponents[j], e.rem_euclid(m as i64) as u64);
        }
        // The constant is an m-th power exactly when its class vanishes.
        let c = u.num.leading() / u.den.leading();
        let g = m.gcd(&(f.order() - 1));
        prop_assert_eq!(fu.constant == 0, c.pow((f.order() - 1) / g).is_one());
    }

    #[test]
    fn moebius_pullback_matches_substitution(
        fi in 0usize..7, m in prop::sample::select(vec![2u64, 3, 4]),
        c in any::<u64>(), e in prop::collection::vec(-2i64..3, 16),
        phi in any::<[u64; 4]>(), psi in any::<[u64; 4]>(),
    ) {
        let f = unit_fields()[fi];
        let line = full_line(f);
        let (Some(phi), Some(psi)) = (moebius(f, phi), moebius(f, psi)) else { return Ok(()) };
        let u = unit(f, c, &e);
        let cls = factor_unit(&line, &u, m).unwrap();
        let pulled = moebius_pullback(&line, &phi, &cls).unwrap();
        prop_assert_eq!(&factor_unit(&line, &u.substitute_moebius(&phi), m).unwrap(), &pulled);
        prop_assert_eq!(moebius_pullback(&line, &phi.inverse(), &pulled).unwrap(), cls.clone());
        prop_assert_eq!(moebius_pullback(&line, &Moebius::identity(f), &cls).unwrap(), cls.clone());
        let composed = moebius_pullback(&line, &phi.compose(&psi), &cls).unwrap();
        prop_assert_eq!(composed, moebius_pullback(&line, &psi, &pulled).unwrap());
        let v = factor_unit(&line, &unit(f, c / 3, &e.iter().rev().copied().collect::<Vec<_>>()), m).unwrap();
        prop_assert_eq!(
            moebius_pullback(&line, &phi, &cls.mul(&v)).unwrap(),
            pulled.mul(&moebius_pullback(&line, &phi, &v).unwrap())
        );
    }

    #[test]
    fn crt_round_trips(k in prop::sample::select(vec![2u32, 4, 6]), s0 in prop::collection::vec(any::<u64>(), 0..6), s1 in prop::collection::vec(any::<u64>(), 0..6)) {
        let f = Field::new(2, k).unwrap();
        let xi = f.primitive_cube_root().unwrap().unwrap();
        let poly = |v: &[u64]| Poly::new(f, v.iter().map(|&x| elem(f, x)).collect());
        let s = (poly(&s0), poly(&s1));
        prop_assert_eq!(crt_join(xi, &crt_split(xi, &s)), s.clone());
        let pair = (poly(&s1), poly(&s0));
        prop_assert_eq!(crt_split(xi, &crt_join(xi, &pair)), pair);
    }

    #[test]
    fn smith_form_is_a_valid_decomposition(rows in 1usize..5, cols in 1usize..5, entries in prop::collection::vec(-20i64..21, 16), n in 2u64..40) {
        let a: Vec<Vec<BigInt>> = (0..rows).map(|i| (0..cols).map(|j| BigInt::from(entries[i * 4 + j])).collect()).collect();
        let s = smith_normal_form(&a);
        prop_assert_eq!(matmul(&matmul(&s.u, &a), &s.v), s.d.clone());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
            prop_assert!(!w[0].is_negative());
        }
        if rows == cols {
            let prod: BigInt = diag.iter().product();
            prop_assert_eq!(prod, det(&a).abs());
        }
        let reduced: Vec<Vec<u64>> = (0..rows).map(|i| (0..cols).map(|j| entries[i * 4 + j].rem_euclid(n as i64) as u64).collect()).collect();
        let sm = smith_mod(reduced, n, true);
        let expected: Vec<u64> = diag.iter().map(|d| {
            let g = d.gcd(&BigInt::from(n));
            u64::try_from(g).unwrap()
        }).collect();
        let mut got = sm.diag.clone();
        got.sort();
        let mut want = expected;
        want.sort();
        prop_assert_eq!(got, want);
    }
}
