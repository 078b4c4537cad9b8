use gsym_core::{make_field, root_of_unity, Field, Rat, Scalar};
use proptest::prelude::*;

const CONDUCTORS: [u32; 6] = [1, 3, 4, 5, 8, 12];

fn scalar(f: &Field, c: &[(i64, i64)]) -> Scalar {
    let coeffs = (0..f.degree).map(|k| c.get(k).map_or(Rat::zero(), |&(n, d)| Rat::new(n, d))).collect();
    Scalar::from_coeffs(f, coeffs)
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 0..8)
}

proptest! {
    #[test]
    fn ring_axioms_hold(k in 0usize..CONDUCTORS.len(), a in coeffs(), b in coeffs(), c in coeffs()) {
        let f = make_field(CONDUCTORS[k]).unwrap();
        let (x, y, z) = (scalar(&f, &a), scalar(&f, &b), scalar(&f, &c));
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.sub(&x), Scalar::zero(&f));
        prop_assert_eq!(x.mul(&Scalar::one(&f)), x.clone());
    }

    #[test]
    fn nonzero_elements_invert(k in 0usize..CONDUCTORS.len(), a in coeffs()) {
        let f = make_field(CONDUCTORS[k]).unwrap();
        let x = scalar(&f, &a);
        match x.inv() {
            Some(y) => prop_assert!(x.mul(&y).is_one()),
            None => prop_assert!(x.is_zero()),
        }
    }
}

#[test]
fn roots_of_unity_have_exact_order() {
    for m in CONDUCTORS {
        let f = make_field(m).unwrap();
        let z = root_of_unity(&f, m, 1).unwrap();
        assert!(z.pow(m as u64).is_one());
        for d in 1..m {
            assert!(!z.pow(d as u64).is_one(), "zeta_{m}^{d} = 1");
        }
    }
}

#[test]
fn roots_of_order_dividing_the_conductor_exist() {
    let f = make_field(12).unwrap();
    for k in [1, 2, 3, 4, 6, 12] {
        assert!(root_of_unity(&f, k, 1).unwrap().pow(k as u64).is_one());
    }
    assert!(root_of_unity(&f, 5, 1).is_err());
}

#[test]
fn imaginary_unit_squares_to_minus_one() {
    let f = make_field(4).unwrap();
    let i = root_of_unity(&f, 4, 1).unwrap();
    assert_eq!(i.mul(&i), Scalar::int(&f, -1));
}

#[test]
fn literals_are_readable() {
    let f = make_field(1).unwrap();
    assert_eq!(Scalar::frac(&f, -3, 6).to_literal(), "-1/2");
}
