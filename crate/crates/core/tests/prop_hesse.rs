use m11_brauer::field::{Field, Fq};
use m11_brauer::hesse::{level3_table, HesseCurve, HessePoint};
use m11_brauer::weierstrass::{j_invariant_check, verify_coordinate_change};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fields() -> [Field; 4] {
    [Field::new(2, 2).unwrap(), Field::new(2, 4).unwrap(), Field::new(5, 2).unwrap(), Field::new(7, 1).unwrap()]
}

/// A nonsingular curve over field `fi` with parameter index `mi`, and its points.
fn curve(fi: usize, mi: u64) -> Option<(HesseCurve, Vec<HessePoint>)> {
    let f = fields()[fi % 4];
    let mu = f.element(mi % f.order());
    if mu.pow(3).is_one() {
        return None;
    }
    let c = HesseCurve::new(mu).unwrap();
    let pts = c.points();
    Some((c, pts))
}

fn pick(pts: &[HessePoint], i: usize) -> HessePoint {
    pts[i % pts.len()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn addition_is_associative(fi in 0usize..4, mi in any::<u64>(), i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
        let Some((_, pts)) = curve(fi, mi) else { return Ok(()) };
        let (p, q, r) = (pick(&pts, i), pick(&pts, j), pick(&pts, k));
        prop_assert_eq!(p.add_total(&q).unwrap().add_total(&r).unwrap(), p.add_total(&q.add_total(&r).unwrap()).unwrap());
    }

    #[test]
    fn addition_is_commutative_with_identity_and_inverses(fi in 0usize..4, mi in any::<u64>(), i in any::<usize>(), j in any::<usize>()) {
        let Some((c, pts)) = curve(fi, mi) else { return Ok(()) };
        let (p, q) = (pick(&pts, i), pick(&pts, j));
        prop_assert_eq!(p.add_total(&q).unwrap(), q.add_total(&p).unwrap());
        prop_assert_eq!(p.add_total(&c.identity()).unwrap(), p);
        prop_assert!(p.add_total(&p.neg()).unwrap().is_identity());
        prop_assert!(c.contains(p.add_total(&q).unwrap().coords()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn point_count_obeys_hasse_and_lagrange(fi in 0usize..4, mi in any::<u64>(), i in any::<usize>()) {
        let Some((c, pts)) = curve(fi, mi) else { return Ok(()) };
        let q = c.field().order() as f64;
        let n = pts.len() as f64;
        prop_assert!((n - (q + 1.0)).abs() <= 2.0 * q.sqrt());
        prop_assert!(pick(&pts, i).mul_scalar(pts.len() as i64).unwrap().is_identity());
        if c.field().primitive_cube_root().unwrap().is_some() {
            prop_assert_eq!(pts.len() % 9, 0);
        }
    }

    #[test]
    fn level3_tables_are_homomorphic(k in prop::sample::select(vec![2u32, 4, 6]), mi in any::<u64>()) {
        let f = Field::new(2, k).unwrap();
        let mu = f.element(mi % f.order());
        if mu.pow(3).is_one() { return Ok(()) }
        let c = HesseCurve::new(mu).unwrap();
        let t = level3_table(&c, f.primitive_cube_root().unwrap().unwrap()).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                prop_assert!(t.point(a, b).mul_scalar(3).unwrap().is_identity());
                for a2 in 0..3 {
                    for b2 in 0..3 {
                        prop_assert_eq!(t.point(a, b).add_total(&t.point(a2, b2)).unwrap(), t.point(a + a2, b + b2));
                    }
                }
            }
        }
    }

    #[test]
    fn coordinate_change_holds(p in prop::sample::select(vec![7u64, 13, 19, 31, 37, 43]), seed in any::<u64>()) {
        let r = verify_coordinate_change(p, 20, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert!(r.points_checked >= 20);
    }

    #[test]
    fn j_invariant_is_the_parameter(p in prop::sample::select(vec![5u64, 7, 11, 13, 31]), t in any::<u64>()) {
        let f = Field::new(p, 1).unwrap();
        let t: Fq = f.element(t % p);
        if t.is_zero() || t == f.from_int(1728) { return Ok(()) }
        let r = j_invariant_check(t).unwrap();
        prop_assert!(r.j_matches && r.discriminant_matches);
    }
}
