//! Algebraic laws checked on random inputs.

mod common;

use noetherlab::catalog::map_to_permutation;
use noetherlab::lattice::monomial_subfield_index;
use noetherlab::symfield::{format_rational, parse_rational};
use noetherlab::{
    det_exact, parse_cycles, print_cycles, ExponentMatrix, Field, LatticeIndex, PermGroup,
    Permutation, RationalFunction, SubstitutionMap, VariableSpace,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images0(v).unwrap())
}

fn perms(count: usize) -> impl Strategy<Value = Vec<Permutation>> {
    (1usize..=9).prop_flat_map(move |n| prop::collection::vec(perm(n), count))
}

fn field() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![0i64, 2, 3, 5, 7, 11, 101]).prop_map(|c| Field::new(c).unwrap())
}

proptest! {
    #[test]
    fn composition_applies_right_first(ps in perms(3)) {
        let (a, b, c) = (&ps[0], &ps[1], &ps[2]);
        let ab = a.compose(b).unwrap();
        for i in 1..=a.degree() {
            prop_assert_eq!(ab.image(i), a.image(b.image(i)));
        }
        prop_assert_eq!(ab.compose(c).unwrap(), a.compose(&b.compose(c).unwrap()).unwrap());
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert_eq!(a.pow(-1), a.inverse());
        prop_assert!(a.pow(a.order() as i64).is_identity());
    }

    #[test]
    fn cycle_notation_round_trips(p in (1usize..=20).prop_flat_map(perm)) {
        let text = print_cycles(&p);
        prop_assert_eq!(parse_cycles(&text, p.degree()).unwrap(), p);
    }

    #[test]
    fn maps_compose_like_permutations(a in perm(14), b in perm(14)) {
        let space = VariableSpace::indexed("x", 1, 14);
        let f = Field::new(7).unwrap();
        let ma = SubstitutionMap::from_permutation(&space, f, &a).unwrap();
        let mb = SubstitutionMap::from_permutation(&space, f, &b).unwrap();
        prop_assert_eq!(map_to_permutation(&ma.compose(&mb).unwrap()).unwrap(), a.compose(&b).unwrap());
        let x = RationalFunction::var(&space, f, 0);
        let direct = ma.apply(&mb.apply(&x).unwrap()).unwrap();
        prop_assert_eq!(ma.compose(&mb).unwrap().apply(&x).unwrap(), direct);
    }

    #[test]
    fn subgroup_orders_divide(ps in perms(3)) {
        let g = PermGroup::new(ps.clone()).unwrap();
        let h = PermGroup::new(vec![ps[0].clone()]).unwrap();
        prop_assert_eq!(h.order(), ps[0].order() as u128);
        prop_assert_eq!(g.order() % h.order(), 0);
        let n = g.degree() as u128;
        prop_assert_eq!((1..=n).product::<u128>() % g.order(), 0);
        for p in &ps {
            prop_assert!(g.contains(p));
        }
        prop_assert!(h.is_subgroup_of(&g));
        prop_assert!(g.derived_subgroup().is_normal_in(&g));
    }

    #[test]
    fn field_axioms(f in field(), a in -50i64..50, b in -50i64..50, c in -50i64..50) {
        let (x, y, z) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
        prop_assert_eq!(f.from_i64(a * b), &x * &y);
    }

    #[test]
    fn rational_functions_form_a_field(f in field(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let space = VariableSpace::indexed("x", 1, 3);
        let a = common::random_ratfunc(&mut rng, &space, f);
        let b = common::random_ratfunc(&mut rng, &space, f);
        let c = common::random_ratfunc(&mut rng, &space, f);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
        }
        prop_assert_eq!(parse_rational(&space, f, &format_rational(&a)).unwrap(), a);
    }

    #[test]
    fn lattice_index_is_abs_det(m in (1usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-6i64..=6, n), n))) {
        let em = ExponentMatrix::new(m).unwrap();
        let d = det_exact(&em).unwrap();
        let expected = if d == 0.into() { LatticeIndex::Infinite } else { LatticeIndex::Finite(d.magnitude().clone().into()) };
        prop_assert_eq!(monomial_subfield_index(&em), expected);
    }
}
