use ehrhart_core::characters::{display_order, phi_at_one_from_series};
use ehrhart_core::combinatorics::factorial;
use ehrhart_core::{
    class_size, decompose, irreducible_character, partitions_of, phi_at_one_formula, phi_data,
    CharacterTable, ClassFunction, CycleType,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

#[test]
fn character_table_is_orthonormal() {
    for n in 1..=7 {
        let table = CharacterTable::new(n).unwrap();
        let irreps = partitions_of(n).unwrap();
        let order = factorial(n);
        for mu in &irreps {
            for nu in &irreps {
                let inner: BigInt = table
                    .classes()
                    .iter()
                    .map(|c| class_size(c) * table.value(mu, c) * table.value(nu, c))
                    .sum();
                let expected = if mu == nu { order.clone() } else { BigInt::zero() };
                assert_eq!(inner, expected, "n = {n}, {mu} vs {nu}");
            }
        }
    }
}

#[test]
fn dimensions_are_positive_and_square_sum_to_order() {
    for n in 1..=8 {
        let identity = CycleType::identity(n).unwrap();
        let mut total = BigInt::zero();
        for mu in partitions_of(n).unwrap() {
            let d = irreducible_character(&mu, &identity).unwrap();
            assert!(d > BigInt::zero(), "{mu}");
            total += &d * &d;
        }
        assert_eq!(total, factorial(n));
    }
}

#[test]
fn display_order_lists_every_irrep_once() {
    for n in 1..=7 {
        let mut order = display_order(n);
        assert_eq!(order[0], CycleType::new(vec![n]).unwrap());
        order.sort();
        let mut all = partitions_of(n).unwrap();
        all.sort();
        assert_eq!(order, all);
    }
}

#[test]
fn decompositions_reconstruct_their_class_function() {
    for n in 1..=5 {
        let data = phi_data(n).unwrap();
        for i in 0..=data.tail_start + 2 {
            let f = data.coefficient(i);
            let d = data.decomposition(i).unwrap();
            assert_eq!(d.reconstruct(data.table()), f, "n = {n}, phi_{i}");
        }
    }
}

#[test]
fn constant_term_is_trivial() {
    for n in 1..=6 {
        let data = phi_data(n).unwrap();
        let d = data.decomposition(0).unwrap();
        let nonzero: Vec<_> = d.multiplicities().iter().filter(|(_, m)| !m.is_zero()).collect();
        assert_eq!(nonzero.len(), 1, "n = {n}");
        assert_eq!(d.trivial_multiplicity(), BigInt::one());
    }
}

#[test]
fn value_at_one_matches_closed_form() {
    for n in 1..=7 {
        for lambda in partitions_of(n).unwrap() {
            let closed = phi_at_one_formula(&lambda).unwrap();
            assert_eq!(
                phi_at_one_from_series(&lambda).unwrap(),
                BigRational::from_integer(closed.clone()),
                "{lambda}"
            );
        }
        let data = phi_data(n).unwrap();
        if let Some(at_one) = data.phi_at_one() {
            for (c, v) in at_one.values() {
                assert_eq!(v, &phi_at_one_formula(c).unwrap());
            }
        }
    }
}

#[test]
fn h_star_is_identity_column() {
    for n in 1..=6 {
        let data = phi_data(n).unwrap();
        let h = data.h_star();
        let identity = CycleType::identity(n).unwrap();
        for i in 0..n as usize {
            assert_eq!(
                &h.coeff(i),
                data.coefficient(i).value(&identity),
                "n = {n}, i = {i}"
            );
        }
        // Normalized volume of Pi_n is n^(n-2) (n-1)!.
        let normalized = BigInt::from(n).pow(n.saturating_sub(2)) * factorial(n - 1);
        let sum: BigInt = h.coeffs().iter().sum();
        if n >= 2 {
            assert_eq!(sum, normalized, "n = {n}");
        }
    }
}

proptest! {
    #[test]
    fn decompose_inverts_reconstruct(n in 1u32..=6, seed in prop::collection::vec(-5i64..=5, 11)) {
        let table = CharacterTable::new(n).unwrap();
        let irreps = partitions_of(n).unwrap();
        // A random virtual character.
        let f = ClassFunction::from_fn(n, |c| {
            irreps
                .iter()
                .zip(&seed)
                .map(|(mu, &k)| table.value(mu, c) * k)
                .sum()
        })
        .unwrap();
        let d = decompose(&f).unwrap();
        for (mu, &k) in irreps.iter().zip(&seed) {
            prop_assert_eq!(d.multiplicity(mu), BigInt::from(k));
        }
        prop_assert_eq!(d.reconstruct(&table), f);
    }
}
