//! Property tests for the algebraic invariants the rest of the crate leans
//! on: canonical forms, duality, Schur monotonicity, shortening/puncturing
//! duality, and coset closure.

mod common;

use common::random_csst_pair;
use csst::code::BinaryCode;
use csst::cyclic::{minimal_cosets, CosetSet};
use csst::gf2::{BinaryMatrix, BinaryVector};
use csst::pair::{extension_space, one_orthogonal_to_cube, verify_csst};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BinaryMatrix> {
    (1..=max_cols).prop_flat_map(move |c| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), c), 0..=max_rows)
            .prop_map(move |rows| {
                BinaryMatrix::new(c, rows.into_iter().map(BinaryVector::from_bits).collect())
                    .unwrap()
            })
    })
}

fn arb_code(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BinaryCode> {
    arb_matrix(max_rows, max_cols).prop_map(|m| BinaryCode::from_matrix(&m))
}

fn arb_code_pair(max_rows: usize, max_cols: usize) -> impl Strategy<Value = (BinaryCode, BinaryCode)> {
    (1..=max_cols).prop_flat_map(move |c| {
        let one = prop::collection::vec(prop::collection::vec(any::<bool>(), c), 0..=max_rows)
            .prop_map(move |rows| {
                BinaryCode::from_rows(c, rows.into_iter().map(BinaryVector::from_bits).collect())
                    .unwrap()
            });
        (one.clone(), one)
    })
}

proptest! {
    #[test]
    fn rref_idempotent_and_rank_nullity(m in arb_matrix(12, 24)) {
        let r = m.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        prop_assert_eq!(r.rank() + m.kernel().n_rows(), m.n_cols());
        for row in m.rows() {
            prop_assert!(r.contains(row));
        }
    }

    #[test]
    fn dual_involution((a, _) in arb_code_pair(10, 24)) {
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!(a.dim() + a.dual().dim(), a.len());
    }

    #[test]
    fn sum_intersect_demorgan((a, b) in arb_code_pair(8, 20)) {
        prop_assert_eq!(a.intersect(&b).unwrap().dual(), a.dual().sum(&b.dual()).unwrap());
        prop_assert!(a.sum(&b).unwrap().contains(&a).unwrap());
        prop_assert!(a.contains(&a.intersect(&b).unwrap()).unwrap());
    }

    #[test]
    fn schur_commutative_and_monotone((a, b) in arb_code_pair(6, 16)) {
        let ab = a.schur(&b).unwrap();
        prop_assert_eq!(ab.clone(), b.schur(&a).unwrap());
        // monotone: A ⊆ A' implies A ⋆ B ⊆ A' ⋆ B, with A' = A + B
        let bigger = a.sum(&b).unwrap();
        prop_assert!(bigger.schur(&b).unwrap().contains(&ab).unwrap());
        // chain C ⊆ C^{⋆2} ⊆ C^{⋆3}
        let s2 = a.schur_power(2).unwrap();
        let s3 = a.schur_power(3).unwrap();
        prop_assert!(s2.contains(&a).unwrap());
        prop_assert!(s3.contains(&s2).unwrap());
    }

    #[test]
    fn shorten_puncture_duality(c in arb_code(8, 16), coords in prop::collection::btree_set(0usize..16, 1..6)) {
        let coords: Vec<usize> = coords.into_iter().filter(|&i| i < c.len()).collect();
        prop_assume!(coords.len() < c.len());
        let lhs = c.puncture(&coords).unwrap().dual();
        let rhs = c.dual().shorten(&coords).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coset_sums_stay_closed(seed in any::<u64>()) {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        use rand::Rng;
        let n = [15u32, 31, 63][rng.gen_range(0..3)];
        let cosets = minimal_cosets(n).unwrap();
        let mut a = CosetSet::empty(n, false);
        let mut b = CosetSet::empty(n, false);
        for c in &cosets {
            if rng.gen_bool(0.4) { a = a.union(c).unwrap(); }
            if rng.gen_bool(0.4) { b = b.union(c).unwrap(); }
        }
        prop_assume!(!a.is_empty() && !b.is_empty());
        // closure is asserted inside minkowski_sum; negation is an involution
        let s = a.minkowski_sum(&b).unwrap();
        prop_assert!(!s.is_empty());
        prop_assert_eq!(a.negate().unwrap().negate().unwrap(), a.clone());
    }
}

#[test]
fn verified_pairs_satisfy_structural_consequences() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x90);
    for _ in 0..200 {
        let (c1, c2) = random_csst_pair(&mut rng, 10, 4);
        let report = verify_csst(&c1, &c2, true).unwrap();
        assert!(report.is_pair());
        assert!(c2.is_self_orthogonal());
        assert!(c2.is_even());
        assert!(one_orthogonal_to_cube(&c2).unwrap());
        // the extension space always contains C1 for a pair
        let space = extension_space(&c1, &c2).unwrap();
        assert!(space.contains(&c1).unwrap());
    }
}
