// Property tests for the carrier arithmetic, the element encoding and the
// identity checker. Oracles below are written against plain integers.

use ggl_core::identities::{holds_exhaustively, witness_violates};
use ggl_core::structure::{is_left_ideal, is_right_ideal, subsets_where};
use ggl_core::*;
use proptest::prelude::*;

fn carriers(n: u64) -> Vec<Carrier> {
    let mut v = vec![Carrier::modular(n).unwrap(), Carrier::pure_neutrosophic(n).unwrap()];
    if n * n <= 64 {
        v.push(Carrier::mixed_neutrosophic(n).unwrap());
    }
    v
}

/// (a + bI)(c + dI) = ac + (ad + bc + bd)I, computed by hand.
fn mixed_mul(n: u64, (a, b): (u64, u64), (c, d): (u64, u64)) -> (u64, u64) {
    ((a * c) % n, (a * d + b * c + b * d) % n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn carrier_ring_laws(n in 2u64..9) {
        for c in carriers(n) {
            let vals = c.enumerate().unwrap();
            for x in &vals {
                prop_assert_eq!(c.value_at(c.index_of(x).unwrap()), *x);
                for y in &vals {
                    prop_assert_eq!(c.add(x, y).unwrap(), c.add(y, x).unwrap());
                    prop_assert_eq!(c.mul(x, y).unwrap(), c.mul(y, x).unwrap());
                    for z in vals.iter().step_by(3) {
                        let l = c.mul(x, &c.add(y, z).unwrap()).unwrap();
                        let r = c.add(&c.mul(x, y).unwrap(), &c.mul(x, z).unwrap()).unwrap();
                        prop_assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn mixed_product_matches_hand_formula(n in 2u64..12, a in 0u64..12, b in 0u64..12, c in 0u64..12, d in 0u64..12) {
        let car = Carrier::mixed_neutrosophic(n).unwrap();
        let (a, b, c, d) = (a % n, b % n, c % n, d % n);
        let got = car.mul(&Value::mixed(a, b), &Value::mixed(c, d)).unwrap();
        let (p, q) = mixed_mul(n, (a, b), (c, d));
        prop_assert_eq!(got, Value::mixed(p, q));
    }

    #[test]
    fn scalar_table_is_linear_form(n in 2u64..20, t in 0u64..20, u in 0u64..20) {
        let (t, u) = (t % n, u % n);
        prop_assume!(t != 0 || u != 0);
        let g = Groupoid::build(GroupoidSpec::modular(n, t, u).unwrap()).unwrap();
        for i in 0..n as usize {
            for j in 0..n as usize {
                prop_assert_eq!(g.mul(i, j) as u64, (t * i as u64 + u * j as u64) % n);
            }
        }
    }

    #[test]
    fn element_index_round_trip(n in 2u64..5, idx in 0u64..10_000) {
        let c = Carrier::modular(n).unwrap();
        let space = ElementSpace::new(c, Shape::matrix(2, 3).unwrap(), 1 << 20).unwrap();
        let idx = idx % space.count().unwrap();
        let e = space.element_at(idx);
        prop_assert_eq!(space.index_of(&e).unwrap(), idx);
        let text = e.to_string();
        prop_assert_eq!(Element::parse(c, e.shape(), &text).unwrap(), e);
    }

    #[test]
    fn closed_forms_agree_with_brute_force(n in 2u64..13, t in 0u64..13, u in 0u64..13) {
        let (t, u) = (t % n, u % n);
        prop_assume!(t != 0 || u != 0);
        let g = Groupoid::build(GroupoidSpec::modular(n, t, u).unwrap()).unwrap();
        // oracle: quantify directly over integers
        let m = |x: u64, y: u64| (t * x + u * y) % n;
        let idem = (0..n).all(|x| m(x, x) == x);
        let assoc = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| m(m(x, y), z) == m(x, m(y, z)))));
        let p = (0..n).all(|x| (0..n).all(|y| m(m(x, y), x) == m(x, m(y, x))));
        prop_assert_eq!(holds_exhaustively(&g, IdentityId::Idempotent), idem);
        prop_assert_eq!(holds_exhaustively(&g, IdentityId::Associative), assoc);
        prop_assert_eq!(holds_exhaustively(&g, IdentityId::PIdentity), p);
        prop_assert_eq!(closed_form(ClosedFormPredicate::IdempotentIff, n, t, u), idem);
        prop_assert_eq!(closed_form(ClosedFormPredicate::SemigroupIff, n, t, u), assoc);
    }

    #[test]
    fn witnesses_really_violate(n in 2u64..10, t in 0u64..10, u in 0u64..10) {
        let (t, u) = (t % n, u % n);
        prop_assume!(t != 0 || u != 0);
        let g = Groupoid::build(GroupoidSpec::modular(n, t, u).unwrap()).unwrap();
        for id in IdentityId::ALL {
            let v = check_identity(&g, id, CheckMode::Exhaustive).unwrap();
            match &v.witness_indices {
                Some(w) => prop_assert!(witness_violates(&g, id, w)),
                None => prop_assert!(v.holds()),
            }
        }
    }

    #[test]
    fn ideal_duality(n in 3u64..8, t in 0u64..8, u in 0u64..8) {
        let (t, u) = (t % n, u % n);
        prop_assume!(t != 0 || u != 0);
        let b = Budget::default();
        let g = Groupoid::build(GroupoidSpec::modular(n, t, u).unwrap()).unwrap();
        let h = Groupoid::build(GroupoidSpec::modular(n, u, t).unwrap()).unwrap();
        let l = subsets_where(&g, &b, |s| is_left_ideal(&g, s)).unwrap();
        let r = subsets_where(&h, &b, |s| is_right_ideal(&h, s)).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn lifting_is_sound(t in 0u64..3, u in 0u64..3) {
        prop_assume!(t != 0 || u != 0);
        let spec = GroupoidSpec::modular(3, t, u).unwrap();
        let scalar = Groupoid::build(spec.clone()).unwrap();
        let row = Groupoid::build(spec.with_shape(Shape::matrix(1, 2).unwrap())).unwrap();
        for id in IdentityId::ALL {
            let s = holds_exhaustively(&scalar, id);
            let direct = check_identity(&row, id, CheckMode::Exhaustive).unwrap();
            let lifted = check_identity(&row, id, CheckMode::Auto).unwrap();
            prop_assert_eq!(direct.holds(), s);
            prop_assert_eq!(lifted.holds(), s);
        }
    }

    #[test]
    fn sampling_is_reproducible(seed in any::<u64>()) {
        let spec = GroupoidSpec::modular(4, 2, 3).unwrap().with_shape(Shape::matrix(5, 7).unwrap());
        let g = Groupoid::build(spec).unwrap();
        let mode = CheckMode::Sampled { trials: 200, seed };
        let a = check_identity(&g, IdentityId::Bol, mode).unwrap();
        let b = check_identity(&g, IdentityId::Bol, mode).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn neutrosophic_values_need_neutrosophic_carriers() {
    let c = Carrier::modular(5).unwrap();
    assert!(!c.admits_param(&Value::indeterminate(1)));
    assert!(GroupoidSpec::new(c, Shape::Scalar, Value::indeterminate(1), Value::residue(2)).is_err());
}
