//! Algebra of binary linear codes for building quantum codes that support a
//! transversal T gate.
//!
//! A pair of binary codes `(C1, C2)` with `C2 ⊆ C1` yields such a quantum
//! code exactly when `C2 ⊆ C1 ∩ (C1^{⋆2})^⊥`, where `⋆` is the
//! coordinate-wise (Schur) product. This crate decides that criterion,
//! computes the quantum parameters `[[n, k1-k2, d]]`, walks the inclusion
//! poset of such pairs (minimal/maximal elements, one-step extensions, the
//! dimension-raising propagation rule), and constructs concrete families:
//! Reed-Muller pairs, cyclic and extended cyclic pairs from cyclotomic
//! cosets, and greedy coset searches that reproduce published parameter
//! tables.
//!
//! Modules:
//! - [`gf2`]: bit-packed vectors/matrices, RREF, kernels, membership.
//! - [`field`]: GF(2^s) tables and minimal polynomials.
//! - [`code`]: [`code::BinaryCode`] and the code-level algebra.
//! - [`pair`]: CSS-T verification, parameters, poset predicates.
//! - [`cyclic`]: cyclotomic cosets, cyclic/extended codes, greedy search.
//! - [`rm`]: binary Reed-Muller codes and their punctured/shortened pairs.

pub mod code;
pub mod cyclic;
pub mod error;
pub mod field;
pub mod gf2;
pub mod pair;
pub mod rm;

pub use code::{
    BinaryCode, MinWeightOptions, MinWeightOutcome, DEFAULT_BUDGET, DEFAULT_EXACT_THRESHOLD,
    DEFAULT_SEED,
};
pub use error::{Error, Result};
pub use gf2::{BinaryMatrix, BinaryVector};
