use m11_brauer::cohomology::{brute_force_cocycles, cohomology};
use m11_brauer::field::Field;
use m11_brauer::kummer::build_unit_class_module;

#[test]
fn h1_of_the_six_dimensional_module() {
    let d = build_unit_class_module(Field::new(2, 2).unwrap()).unwrap();
    let h1 = cohomology(&d.module, 1).unwrap();
    assert_eq!(h1.invariant_factors(), vec![2, 2]);
    assert_eq!(h1.cocycle_order(), 128u32.into());
    assert_eq!(h1.coboundary_order(), 32u32.into());
    let b = brute_force_cocycles(&d.module, 1).unwrap();
    assert_eq!((b.cocycle_count, b.coboundary_count, b.invariant_count), (128, 32, 2));
}
