//! Brute-force oracles: exhaustive group enumeration, cofactor determinants
//! and the homomorphism property of substitution maps.

mod common;

use noetherlab::{det_exact, snf, Catalog, ExponentMatrix, GpdSpec};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn orders_match_enumeration() {
    let c = Catalog::standard();
    let mut compared = 0;
    for g in c.groups() {
        let Some(group) = &g.group else { continue };
        match common::enumerate(group, 2000) {
            Some(n) => {
                assert_eq!(group.order(), n as u128, "G({})", g.id);
                compared += 1;
            }
            None => assert!(group.order() > 2000, "G({}) enumerates past 2000", g.id),
        }
    }
    assert_eq!(compared, 33);
    for name in ["N7", "N49", "N8", "N16", "N64"] {
        let g = c.named_group(name).unwrap();
        assert_eq!(
            Some(g.order() as usize),
            common::enumerate(&g, 2000),
            "{name}"
        );
    }
    for (p, d, a) in [(5, 4, 2), (7, 6, 3), (11, 10, 2), (13, 4, 2)] {
        let g = noetherlab::catalog::gpd(&GpdSpec::new(p, d, a).unwrap());
        assert_eq!(common::enumerate(&g, 2000), Some(p * d));
    }
}

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-20i64..=20, n), n))
}

proptest! {
    #[test]
    fn det_matches_cofactor_expansion(m in square(5)) {
        let d = det_exact(&ExponentMatrix::new(m.clone()).unwrap()).unwrap();
        prop_assert_eq!(d, common::cofactor_det(&m).into());
    }

    #[test]
    fn smith_factors_multiply_to_det(m in square(5)) {
        let d = common::cofactor_det(&m);
        let s = snf(&ExponentMatrix::new(m.clone()).unwrap());
        if d == 0 {
            prop_assert!(s.rank < m.len());
        } else {
            prop_assert_eq!(s.rank, m.len());
            let prod: num_bigint::BigInt = s.factors.iter().product();
            prop_assert_eq!(prod, d.abs().into());
            for w in s.factors.windows(2) {
                prop_assert_eq!(&w[1] % &w[0], 0.into());
            }
        }
    }
}

#[test]
fn substitution_is_a_homomorphism() {
    let maps = common::catalog_maps();
    assert!(maps.len() > 50);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (name, m) in &maps {
        if let Err(e) = common::homomorphism_samples(m, &mut rng, 500) {
            panic!("{name}: {e}");
        }
    }
}
