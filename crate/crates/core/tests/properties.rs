use std::collections::HashSet;

use mosaic_core::matrix::{mat_mul, mat_pow, BigMatrix, PowerStrategy};
use mosaic_core::{count_frontier, count_transfer, enumerate, BigUint, Mosaic};
use proptest::prelude::*;

fn mosaic_strategy(max: usize) -> impl Strategy<Value = Mosaic> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(0u8..11, r * c)
            .prop_map(move |idx| Mosaic::from_indices(r, c, &idx).unwrap())
    })
}

fn matrix_strategy() -> impl Strategy<Value = BigMatrix> {
    (1usize..=4).prop_flat_map(|d| {
        proptest::collection::vec(0u64..50, d * d).prop_map(|v| {
            BigMatrix::from_entries(v.into_iter().map(BigUint::from).collect()).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn parse_inverts_render(m in mosaic_strategy(8)) {
        prop_assert_eq!(Mosaic::parse(&m.render(false)).unwrap(), m);
    }

    #[test]
    fn transpose_is_involution_preserving_predicates(m in mosaic_strategy(6)) {
        let t = m.transpose();
        prop_assert_eq!((t.rows(), t.cols()), (m.cols(), m.rows()));
        prop_assert_eq!(t.transpose(), m.clone());
        prop_assert_eq!(t.is_suitably_connected(), m.is_suitably_connected());
        prop_assert_eq!(t.is_knot_mosaic(), m.is_knot_mosaic());
    }

    #[test]
    fn power_laws(a in matrix_strategy(), s in 0u64..5, t in 0u64..5) {
        let lhs = mat_pow(&a, s + t, PowerStrategy::Iterated);
        let rhs = mat_mul(
            &mat_pow(&a, s, PowerStrategy::Iterated),
            &mat_pow(&a, t, PowerStrategy::Binary),
        ).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs, mat_pow(&a, s + t, PowerStrategy::Binary));
    }

    #[test]
    fn concatenation_preserves_knots(i in 0usize..22, j in 0usize..22, k in 0usize..22) {
        let pieces = enumerate(3, 3, None).unwrap();
        let (a, b, c) = (&pieces[i], &pieces[j], &pieces[k]);
        let h = a.concat_horizontal(b).unwrap();
        let v = a.concat_vertical(c).unwrap();
        prop_assert!(h.is_knot_mosaic());
        prop_assert!(v.is_knot_mosaic());
        // Distinct pairs give distinct results.
        prop_assert_eq!(h == a.concat_horizontal(c).unwrap(), b == c);
        prop_assert_eq!(v == b.concat_vertical(c).unwrap(), a == b);
    }
}

#[test]
fn concatenation_is_injective_on_all_pairs() {
    let pieces = enumerate(2, 3, None).unwrap();
    let mut seen = HashSet::new();
    for a in &pieces {
        for b in &pieces {
            assert!(seen.insert(a.concat_horizontal(b).unwrap()));
        }
    }
    assert_eq!(seen.len(), pieces.len() * pieces.len());
}

#[test]
fn enumeration_matches_counts_without_duplicates() {
    for (m, n) in [(1, 5), (2, 4), (3, 4), (4, 4), (2, 8)] {
        let all = enumerate(m, n, None).unwrap();
        assert_eq!(
            BigUint::from(all.len()),
            count_frontier(m, n).unwrap(),
            "{m}x{n}"
        );
        assert!(all.iter().all(Mosaic::is_knot_mosaic));
        let unique: HashSet<_> = all.iter().collect();
        assert_eq!(unique.len(), all.len());
    }
}

#[test]
fn transfer_is_symmetric() {
    for m in 3..=9 {
        for n in m + 1..=9 {
            assert_eq!(
                count_transfer(m, n).unwrap(),
                count_transfer(n, m).unwrap(),
                "{m}x{n}"
            );
        }
    }
}

#[test]
fn transfer_with_two_columns_is_power_of_two() {
    for m in 3..=10 {
        assert_eq!(
            count_transfer(m, 2).unwrap(),
            BigUint::from(1u32) << (m - 1)
        );
    }
}

#[test]
fn frontier_is_symmetric_and_even() {
    for m in 1..=10 {
        for n in 1..=10 {
            let d = count_frontier(m, n).unwrap();
            assert_eq!(d, count_frontier(n, m).unwrap());
            if m >= 2 && n >= 2 {
                assert_eq!(&d % 2u32, BigUint::default(), "{m}x{n}");
            }
        }
    }
}

#[test]
fn transfer_spot_values() {
    assert_eq!(
        count_transfer(9, 9).unwrap(),
        "23054099362200397056093750003442"
            .parse::<BigUint>()
            .unwrap()
    );
    assert_eq!(count_transfer(4, 5).unwrap(), count_frontier(4, 5).unwrap());
    assert_eq!(
        count_transfer(7, 7).unwrap(),
        "38572794946976686".parse::<BigUint>().unwrap()
    );
}
