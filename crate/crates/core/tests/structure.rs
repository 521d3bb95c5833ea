use ggl_core::structure::*;
use ggl_core::theorems::{run_suite, SuiteConfig};
use ggl_core::*;

fn zn(n: u64, t: u64, u: u64) -> Groupoid {
    Groupoid::build(GroupoidSpec::modular(n, t, u).unwrap()).unwrap()
}

/// Closed subsets by brute force over integer masks.
fn closed_masks(n: u64, t: u64, u: u64) -> Vec<u64> {
    (1u64..1 << n)
        .filter(|&m| (m.count_ones() as u64) < n)
        .filter(|&m| {
            (0..n).filter(|i| m >> i & 1 == 1).all(|x| {
                (0..n)
                    .filter(|i| m >> i & 1 == 1)
                    .all(|y| m >> ((t * x + u * y) % n) & 1 == 1)
            })
        })
        .collect()
}

#[test]
fn power_set_enumeration_matches_oracle() {
    let b = Budget::default();
    for n in 3..=9 {
        for t in 0..n {
            for u in 0..n {
                if t == 0 && u == 0 {
                    continue;
                }
                let g = zn(n, t, u);
                let mut got: Vec<u64> = enumerate_subgroupoids(&g, Strategy::PowerSet, &b)
                    .unwrap()
                    .iter()
                    .map(|s| s.mask().unwrap())
                    .collect();
                let mut want = closed_masks(n, t, u);
                got.sort_unstable();
                want.sort_unstable();
                assert_eq!(got, want, "Z_{n} ({t},{u})");
            }
        }
    }
}

#[test]
fn z8_normal_subgroupoids() {
    let g = zn(8, 2, 6);
    let v = is_simple(&g).unwrap();
    assert!(!v.simple);
    let order4: Vec<_> = enumerate_subgroupoids(&g, Strategy::PowerSet, &Budget::default())
        .unwrap()
        .into_iter()
        .filter(|s| s.len() == 4)
        .collect();
    assert_eq!(order4.len(), 1);
    assert_eq!(order4[0].indices(), vec![0, 2, 4, 6]);
    assert!(!is_normal_subgroupoid(&g, &order4[0]));
    let four = SubsetHandle::from_indices(8, [0, 4]).unwrap();
    assert!(is_normal_subgroupoid(&g, &four));
}

#[test]
fn neutrosophic_right_ideal() {
    let c = Carrier::pure_neutrosophic(4).unwrap();
    let g = Groupoid::build(GroupoidSpec::new(c, Shape::Scalar, Value::residue(3), Value::residue(2)).unwrap()).unwrap();
    let p = SubsetHandle::from_indices(4, [0, 2]).unwrap();
    // x*a for a in P, x in G lands outside P; a*x stays inside
    assert!(!is_left_ideal(&g, &p));
    assert!(is_right_ideal(&g, &p));
}

#[test]
fn report_serializes() {
    let g = zn(6, 1, 5);
    let r = structure_report(&g, 6, &Budget::default()).unwrap();
    let j = serde_json::to_value(&r).unwrap();
    assert_eq!(j["order"], 6);
    assert!(j["subgroupoids"].is_array());
}

#[test]
fn default_suite_is_green_and_deterministic() {
    let cfg = SuiteConfig::default_suite(7);
    let a = run_suite(&cfg).unwrap();
    assert!(a.success, "{:#?}", a.checks.iter().filter(|c| c.blocks()).collect::<Vec<_>>());
    let b = run_suite(&cfg).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}
