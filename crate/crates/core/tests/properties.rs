use binoshift::exactnum::Scalar;
use binoshift::recurrence::{apply_char_operator, shift_characteristic, unroll, CharPoly, Recurrence};
use binoshift::series::{prefix_from_series, series_compose_geometric, series_from_prefix, SeriesKind};
use binoshift::transform::{apply_transform, compose_transforms, inverse_transform, SequencePrefix};
use binoshift::Domain;
use proptest::prelude::*;

fn int() -> impl Strategy<Value = Scalar> {
    (-1000i64..1000).prop_map(Scalar::int)
}

fn rat() -> impl Strategy<Value = Scalar> {
    (-60i64..60, 1i64..25).prop_map(|(n, d)| Scalar::rat(n, d))
}

fn poly() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(-9i64..9, 0..5).prop_map(|c| Scalar::poly(&c))
}

fn quad5() -> impl Strategy<Value = Scalar> {
    ((-20i64..20, 1i64..7), (-20i64..20, 1i64..7)).prop_map(|(a, b)| Scalar::quad(a, b, 5).unwrap())
}

fn shift() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=4).prop_map(|(n, d)| Scalar::rat(n, d))
}

fn rat_prefix(len: usize) -> impl Strategy<Value = SequencePrefix> {
    prop::collection::vec(rat(), len).prop_map(|v| SequencePrefix::new(v).unwrap())
}

fn monic(max_degree: usize) -> impl Strategy<Value = CharPoly> {
    prop::collection::vec(rat(), 1..=max_degree).prop_map(|tail| {
        let mut c = vec![Scalar::rat(1, 1)];
        c.extend(tail);
        CharPoly::new(c).unwrap()
    })
}

macro_rules! ring_laws {
    ($name:ident, $arb:expr, $domain:expr) => {
        mod $name {
            use super::*;

            proptest! {
                #[test]
                fn add_associative(x in $arb, y in $arb, z in $arb) {
                    prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
                }

                #[test]
                fn add_commutative(x in $arb, y in $arb) {
                    prop_assert_eq!(&x + &y, &y + &x);
                }

                #[test]
                fn mul_associative(x in $arb, y in $arb, z in $arb) {
                    prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
                }

                #[test]
                fn mul_commutative(x in $arb, y in $arb) {
                    prop_assert_eq!(&x * &y, &y * &x);
                }

                #[test]
                fn distributive(x in $arb, y in $arb, z in $arb) {
                    prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
                }

                #[test]
                fn identities(x in $arb) {
                    prop_assert_eq!(&x + &Scalar::zero($domain), x.clone());
                    prop_assert_eq!(&x * &Scalar::one($domain), x.clone());
                    prop_assert!((&x - &x).is_zero());
                    prop_assert!((&x + &(-&x)).is_zero());
                }

                #[test]
                fn pow_is_repeated_product(x in $arb, n in 0u64..7) {
                    let naive = (0..n).fold(Scalar::one($domain), |acc, _| &acc * &x);
                    prop_assert_eq!(x.pow(n), naive);
                }

                #[test]
                fn text_roundtrip(x in $arb) {
                    prop_assert_eq!(Scalar::parse(&x.to_string(), $domain).unwrap(), x);
                }
            }
        }
    };
}

ring_laws!(int_ring, int(), Domain::Int);
ring_laws!(rat_ring, rat(), Domain::Rat);
ring_laws!(poly_ring, poly(), Domain::PolyRat);
ring_laws!(quad_ring, quad5(), Domain::Quad(5));

proptest! {
    #[test]
    fn rationals_are_canonical(n in -60i64..60, d in 1i64..25, k in 1i64..9) {
        prop_assert_eq!(Scalar::rat(n, d), Scalar::rat(k * n, k * d));
        prop_assert_eq!(Scalar::rat(n, d), Scalar::rat(-n, -d));
    }

    #[test]
    fn field_inverses(x in rat(), y in quad5()) {
        prop_assume!(!x.is_zero() && !y.is_zero());
        prop_assert!((&x * &x.inv().unwrap()).is_one());
        prop_assert!((&y * &y.inv().unwrap()).is_one());
    }

    #[test]
    fn quad_norm_is_multiplicative(x in quad5(), y in quad5()) {
        let (Scalar::Quad(a), Scalar::Quad(b)) = (&x, &y) else { unreachable!() };
        let Scalar::Quad(ab) = &x * &y else { unreachable!() };
        prop_assert_eq!(ab.norm(), a.norm() * b.norm());
    }

    #[test]
    fn promotion_is_a_homomorphism(x in int(), y in int()) {
        for target in [Domain::Rat, Domain::PolyRat, Domain::Quad(2)] {
            let (px, py) = (x.promote(target).unwrap(), y.promote(target).unwrap());
            prop_assert_eq!((&x * &y).promote(target).unwrap(), &px * &py);
            prop_assert_eq!((&x + &y).promote(target).unwrap(), &px + &py);
        }
    }

    #[test]
    fn transform_semigroup(a in rat_prefix(10), r in shift(), s in shift()) {
        let two = apply_transform(&apply_transform(&a, &s, 9).unwrap(), &r, 9).unwrap();
        prop_assert_eq!(&two, &apply_transform(&a, &(&r + &s), 9).unwrap());
        prop_assert_eq!(&two, &compose_transforms(&a, &r, &s, 9).unwrap());
    }

    #[test]
    fn transform_inverse(a in rat_prefix(10), r in shift()) {
        let b = apply_transform(&a, &r, 9).unwrap();
        prop_assert_eq!(&inverse_transform(&b, &r, 9).unwrap(), &a);
        prop_assert_eq!(&apply_transform(&a, &Scalar::rat(0, 1), 9).unwrap(), &a);
    }

    #[test]
    fn transform_prefix_stability(a in rat_prefix(10), r in shift(), m in 0usize..10) {
        // b_0..b_m depend only on a_0..a_m
        let short = apply_transform(&a.truncate(m).unwrap(), &r, m).unwrap();
        prop_assert_eq!(short, apply_transform(&a, &r, 9).unwrap().truncate(m).unwrap());
    }

    #[test]
    fn ogf_route_matches(a in rat_prefix(9), r in shift()) {
        let f = series_compose_geometric(&series_from_prefix(&a, SeriesKind::Ogf), &r).unwrap();
        prop_assert_eq!(prefix_from_series(&f), apply_transform(&a, &r, 8).unwrap());
    }

    #[test]
    fn root_shift_annihilates(p in monic(4), seed in prop::collection::vec(rat(), 4), r in shift()) {
        let d = p.degree();
        let rec = Recurrence::new(p.clone(), seed[..d].to_vec()).unwrap();
        let b = apply_transform(&unroll(&rec, 20), &r, 20).unwrap();
        let residual = apply_char_operator(&shift_characteristic(&p, &r).unwrap(), &b).unwrap();
        prop_assert!(residual.values().iter().all(Scalar::is_zero));
    }

    #[test]
    fn root_shift_additive(p in monic(6), r in shift(), s in shift()) {
        let twice = shift_characteristic(&shift_characteristic(&p, &r).unwrap(), &s).unwrap();
        prop_assert_eq!(twice, shift_characteristic(&p, &(&r + &s)).unwrap());
        let back = shift_characteristic(&shift_characteristic(&p, &r).unwrap(), &(-&r)).unwrap();
        prop_assert_eq!(back, p);
    }
}
