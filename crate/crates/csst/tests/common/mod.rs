//! Shared helpers for the integration suites: literal code constructors and
//! a seeded generator of candidate pairs with a controllable positive rate.
//!
//! Each test binary compiles its own copy, so some helpers are unused in
//! some binaries.
#![allow(dead_code)]

use csst::code::BinaryCode;
use csst::gf2::{BinaryMatrix, BinaryVector};
use rand::Rng;
use rand_chacha::ChaCha12Rng;

pub fn code(n: usize, rows: &[&[u8]]) -> BinaryCode {
    BinaryCode::from_matrix(
        &BinaryMatrix::from_bit_rows(n, rows.iter().map(|r| r.iter().copied())).unwrap(),
    )
}

pub fn random_code(rng: &mut ChaCha12Rng, n: usize, max_rows: usize) -> BinaryCode {
    let r = rng.gen_range(0..=max_rows);
    let rows = (0..r)
        .map(|_| BinaryVector::from_bits((0..n).map(|_| rng.gen_bool(0.5))))
        .collect();
    BinaryCode::from_rows(n, rows).unwrap()
}

/// Span of up to `max_rows` random combinations of the generators of `c`.
pub fn random_subcode(rng: &mut ChaCha12Rng, c: &BinaryCode, max_rows: usize) -> BinaryCode {
    if c.is_zero_code() {
        return BinaryCode::zero(c.len());
    }
    let picks = rng.gen_range(0..=max_rows);
    let rows: Vec<BinaryVector> = (0..picks)
        .map(|_| {
            let coeffs = BinaryVector::from_bits((0..c.dim()).map(|_| rng.gen_bool(0.5)));
            c.generator().combine(&coeffs)
        })
        .filter(|v| !v.is_zero())
        .collect();
    BinaryCode::from_rows(c.len(), rows).unwrap()
}

/// Candidate pairs mixing three regimes: subcodes of `C1 ∩ (C1^{⋆2})^⊥`
/// (valid by construction), subcodes of C1 (often invalid), and unrelated
/// random codes (almost always invalid). C2 is always nonzero.
pub fn random_candidate_pair(
    rng: &mut ChaCha12Rng,
    n: usize,
    k2_cap: usize,
) -> (BinaryCode, BinaryCode) {
    loop {
        let c1 = random_code(rng, n, n.min(8));
        let mode = rng.gen_range(0..10);
        let c2 = if mode < 4 {
            let meet = c1
                .intersect(&c1.schur_power(2).unwrap().dual())
                .unwrap();
            random_subcode(rng, &meet, k2_cap.max(1))
        } else if mode < 7 {
            random_subcode(rng, &c1, k2_cap)
        } else {
            random_code(rng, n, k2_cap)
        };
        if !c2.is_zero_code() {
            return (c1, c2);
        }
    }
}

/// Seeded CSS-T pair with nonzero C2 (retries until one appears).
pub fn random_csst_pair(rng: &mut ChaCha12Rng, n: usize, k2_cap: usize) -> (BinaryCode, BinaryCode) {
    loop {
        let c1 = random_code(rng, n, n.min(8));
        let meet = c1
            .intersect(&c1.schur_power(2).unwrap().dual())
            .unwrap();
        let c2 = random_subcode(rng, &meet, k2_cap);
        if !c2.is_zero_code() {
            return (c1, c2);
        }
    }
}
