use std::sync::Arc;

use m11_brauer::brauer::ModuleSetup;
use m11_brauer::cohomology::{act_on_cochain, brute_force_cocycles, cohomology, differential, Cochain, CohomologyGroup};
use m11_brauer::gmodule::GModule;
use m11_brauer::group::FiniteGroup;
use m11_brauer::zmod::ZModMatrix;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// The regular permutation module of `Z/n` over `Z/m`, shifted by `k`.
fn shifted_regular(n: u64, m: u64, k: u64) -> GModule {
    let g = Arc::new(FiniteGroup::cyclic(n).unwrap());
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| ((i + k) % n == j) as i64).collect()).collect();
    GModule::new(g, &vec![m; n as usize], &[ZModMatrix::from_rows(m, &rows).unwrap()]).unwrap()
}

fn setup() -> &'static ModuleSetup {
    static SETUP: std::sync::OnceLock<ModuleSetup> = std::sync::OnceLock::new();
    SETUP.get_or_init(|| ModuleSetup::new().unwrap())
}

fn h1() -> &'static CohomologyGroup {
    static H1: std::sync::OnceLock<CohomologyGroup> = std::sync::OnceLock::new();
    H1.get_or_init(|| setup().h1().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_squared_vanishes_on_the_unit_class_module(seed in any::<u64>(), degree in 0usize..2) {
        let m = &setup().module;
        let c = Cochain::random(m, degree, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(differential(m, &differential(m, &c).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn d_squared_vanishes_on_permutation_modules(n in 2u64..6, m in 2u64..7, k in 0u64..6, seed in any::<u64>(), degree in 0usize..2) {
        let module = shifted_regular(n, m, k % n);
        let c = Cochain::random(&module, degree, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(differential(&module, &differential(&module, &c).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn differential_commutes_with_conjugation(seed in any::<u64>(), degree in 0usize..2, gen in 0usize..3) {
        let s = setup();
        let n = s.module.restrict(&s.filtration.sl).unwrap();
        let c = Cochain::random(&n, degree, &mut ChaCha8Rng::seed_from_u64(seed));
        let g = s.module.group().generators()[gen];
        let lhs = differential(&n, &act_on_cochain(&s.module, &s.filtration.sl, g, &c).unwrap()).unwrap();
        let rhs = act_on_cochain(&s.module, &s.filtration.sl, g, &differential(&n, &c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cyclic_trivial_cohomology_is_gcd(n in 1u64..9, m in 2u64..13, degree in 0usize..3) {
        let g = Arc::new(FiniteGroup::cyclic(n).unwrap());
        let module = GModule::trivial(g, &[m]).unwrap();
        let h = cohomology(&module, degree).unwrap();
        let order = h.order().to_u64().unwrap();
        let expected = if degree == 0 { m } else { gcd(n, m) };
        prop_assert_eq!(order, expected);
    }

    #[test]
    fn engine_agrees_with_enumeration(n in 2u64..5, m in 2u64..4, k in 0u64..4) {
        let module = shifted_regular(n, m, k % n);
        let b = brute_force_cocycles(&module, 1).unwrap();
        let h = cohomology(&module, 1).unwrap();
        prop_assert_eq!(h.order().to_u64().unwrap(), b.h1_order);
        prop_assert_eq!(h.cocycle_order().to_u64().unwrap(), b.cocycle_count);
    }

    #[test]
    fn classes_are_independent_of_coboundaries(seed in any::<u64>(), coeffs in proptest::collection::vec(0u64..2, 2)) {
        let m = &setup().module;
        let h = h1();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let reps = h.representatives();
        let mut values = vec![0u64; reps[0].values().len()];
        for (r, &a) in reps.iter().zip(&coeffs) {
            for (v, x) in values.iter_mut().zip(r.values()) {
                *v = (*v + a * x) % 2;
            }
        }
        let b = differential(m, &Cochain::random(m, 0, &mut rng)).unwrap();
        for (v, x) in values.iter_mut().zip(b.values()) {
            *v = (*v + x) % 2;
        }
        let z = Cochain::from_values(m, 1, values).unwrap();
        prop_assert!(h.is_cocycle(&z));
        prop_assert_eq!(h.class_of(&z).unwrap(), coeffs);
    }
}

#[test]
fn latin_squares_and_associativity() {
    for g in [
        FiniteGroup::gl2(2).unwrap(),
        FiniteGroup::gl2(3).unwrap(),
        FiniteGroup::semidirect_cyclic(3, 4, 2).unwrap(),
        FiniteGroup::semidirect_cyclic(7, 3, 2).unwrap(),
    ] {
        let o = g.order();
        for a in 0..o {
            let mut row: Vec<usize> = (0..o).map(|b| g.mul(a, b)).collect();
            let mut col: Vec<usize> = (0..o).map(|b| g.mul(b, a)).collect();
            row.sort();
            col.sort();
            assert_eq!(row, (0..o).collect::<Vec<_>>());
            assert_eq!(col, (0..o).collect::<Vec<_>>());
            for b in 0..o {
                for c in 0..o {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }
}
