//! Randomized property tests for the core algebraic invariants.
//!
//! These complement the named verification suites: instead of fixed seeds and
//! curated grids, proptest shrinks arbitrary inputs against the same laws.
//! Every property here is an algebraic identity that must hold exactly, so a
//! single counterexample is a hard bug, never noise.

use proptest::prelude::*;

use satogr::partition::Partition;
use satogr::poly::{GenTable, GradedPoly};
use satogr::rational::Rat;
use satogr::reference;
use satogr::schubert::SchubertClass;
use satogr::symfunc;
use satogr::taut::{ch_from_chern, chern_from_ch, ChernData};

/// Partitions with at most `max_rows` rows, each part at most `max_part`.
fn partition(max_rows: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=max_part, 0..=max_rows).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted positive parts")
    })
}

/// Small exact rationals, including zero and negatives.
fn rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rat::new(n, d).expect("nonzero denominator"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugate_is_an_involution(p in partition(6, 6)) {
        let conj = p.conjugate();
        prop_assert_eq!(conj.conjugate(), p.clone());
        prop_assert_eq!(conj.size(), p.size());
        prop_assert_eq!(conj.len(), p.part(0) as usize);
    }

    #[test]
    fn maya_roundtrip(p in partition(6, 6), d in -6i64..=6) {
        let maya = p.to_maya(d);
        prop_assert_eq!(maya.d(), d);
        prop_assert_eq!(maya.codimension(), p.size());
        prop_assert_eq!(maya.to_partition(), p);
    }

    #[test]
    fn lr_product_is_symmetric_and_graded(a in partition(3, 4), b in partition(3, 4)) {
        let ab = symfunc::lr_coefficients(&a, &b);
        let ba = symfunc::lr_coefficients(&b, &a);
        prop_assert_eq!(&ab, &ba);
        let total = a.size() + b.size();
        for (nu, coeff) in &ab {
            prop_assert_eq!(nu.size(), total);
            prop_assert!(*coeff >= 1);
        }
        let by_unit = symfunc::lr_coefficients(&a, &Partition::empty());
        prop_assert_eq!(by_unit.len(), 1);
        prop_assert_eq!(by_unit.get(&a).copied(), Some(1));
    }

    #[test]
    fn schubert_ring_axioms(
        a in partition(2, 3),
        b in partition(2, 3),
        c in partition(2, 3),
    ) {
        let sa = SchubertClass::sigma(0, a);
        let sb = SchubertClass::sigma(0, b);
        let sc = SchubertClass::sigma(0, c);
        prop_assert_eq!(sa.mul(&sb), sb.mul(&sa));
        prop_assert_eq!(sa.mul(&sb).mul(&sc), sa.mul(&sb.mul(&sc)));
        prop_assert_eq!(sa.mul(&sb.add(&sc)), sa.mul(&sb).add(&sa.mul(&sc)));
        prop_assert_eq!(sa.mul(&SchubertClass::unit(0)), sa.clone());
        prop_assert_eq!(sa.sub(&sa).is_zero(), true);
    }

    #[test]
    fn newton_conversions_invert_each_other(
        rank in 1i64..=6,
        coeffs in prop::collection::vec(rat(), 4),
    ) {
        let table = GenTable::graded_prefix("a", 1);
        let components: Vec<GradedPoly> = coeffs
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let mut poly = GradedPoly::zero(&table, None);
                poly.add_term(vec![(i + 1) as u32], t.clone());
                poly
            })
            .collect();
        let chern = ChernData::new(rank, components)?;
        let ch = ch_from_chern(&chern)?;
        let back = chern_from_ch(&ch)?;
        prop_assert_eq!(back.rank(), chern.rank());
        prop_assert_eq!(back.components(), chern.components());
        let ch_again = ch_from_chern(&back)?;
        prop_assert_eq!(ch_again.components(), ch.components());
    }

    #[test]
    fn complete_and_elementary_are_dual(alphabet in prop::collection::vec(rat(), 0..=6)) {
        for m in 1..=6usize {
            let mut acc = Rat::zero();
            for i in 0..=m {
                let term = symfunc::eval_e(i, &alphabet) * symfunc::eval_h(m - i, &alphabet);
                acc = if i % 2 == 0 { acc + term } else { acc - term };
            }
            prop_assert_eq!(acc, Rat::zero());
        }
        for m in 0..=4usize {
            prop_assert_eq!(symfunc::eval_h(m, &alphabet), reference::h_enum(m, &alphabet));
            prop_assert_eq!(symfunc::eval_e(m, &alphabet), reference::e_enum(m, &alphabet));
        }
    }
}
