//! CSS-T pair verification and the poset machinery: the four equivalent
//! acceptance conditions, quantum parameters, maximality in each slot,
//! one-step extensions and the propagation rule, strong non-extendability,
//! triorthogonality checks, and the distillation scaling exponent.

use crate::code::{BinaryCode, MinWeightOptions};
use crate::error::{Error, Result};
use crate::gf2::{BinaryMatrix, BinaryVector};

pub use crate::code::{DEFAULT_BUDGET, DEFAULT_EXACT_THRESHOLD, DEFAULT_SEED};

/// Cap on codeword enumerations used by the cross-check and
/// non-extendability predicates.
pub const ENUMERATION_CAP_LOG2: usize = 20;

/// Outcome of a pair verification. `TrivialC2` marks the discarded pairs
/// `(C1, {0})`, which are excluded from the poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsstStatus {
    Pair,
    NotPair,
    TrivialC2,
}

/// Truth values of the four equivalent conditions. Condition (3), the two
/// containments, is always evaluated and is the production decision path.
/// Conditions (2) and (4) are computed only under `cross_check`; condition
/// (1) is decided through its equivalence with (2), so the two entries
/// always agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditionResults {
    pub cond1: Option<bool>,
    pub cond2: Option<bool>,
    pub cond3: bool,
    pub cond4: Option<bool>,
}

/// Quantum parameters `[[n, k, d]]` certified for a pair: `d_lower` is a
/// proven bound (BCH/amplitude, or exhaustive), `d_upper` comes from an
/// explicit witness in `C2^⊥ \ C1^⊥`, and `d_exact` marks agreement.
#[derive(Clone, Debug)]
pub struct QuantumParams {
    pub n: usize,
    pub k: usize,
    pub d_lower: usize,
    pub d_upper: Option<usize>,
    pub d_exact: bool,
    pub witness: Option<BinaryVector>,
}

/// Full verification report for a candidate pair.
#[derive(Clone, Debug)]
pub struct CssTReport {
    pub status: CsstStatus,
    pub conditions: ConditionResults,
    /// A generator of C2 violating one of the two containments of
    /// condition (3), when the pair is rejected.
    pub failing_witness: Option<BinaryVector>,
    pub params: Option<QuantumParams>,
    pub maximal_in_c1: Option<bool>,
    pub maximal_in_c2: Option<bool>,
    pub maximal: Option<bool>,
    pub triorthogonal_c2: Option<bool>,
}

impl CssTReport {
    pub fn is_pair(&self) -> bool {
        self.status == CsstStatus::Pair
    }
}

/// Decide whether `(c1, c2)` is a CSS-T pair.
///
/// The decision is condition (3): `C2 ⊆ C1` and `C2 ⊆ (C1^{⋆2})^⊥`. With
/// `cross_check` set, conditions (2) and (4) are evaluated independently
/// (condition (2) enumerates the codewords of C2 and tests evenness together
/// with self-orthogonality of the punctured C1) and any disagreement is an
/// internal error. A verified pair must have self-orthogonal C2; that
/// consequence is asserted as well.
pub fn verify_csst(c1: &BinaryCode, c2: &BinaryCode, cross_check: bool) -> Result<CssTReport> {
    if c1.len() != c2.len() {
        return Err(Error::LengthMismatch {
            left: c1.len(),
            right: c2.len(),
        });
    }
    if c2.is_zero_code() {
        return Ok(CssTReport {
            status: CsstStatus::TrivialC2,
            conditions: ConditionResults {
                cond1: None,
                cond2: None,
                cond3: true,
                cond4: None,
            },
            failing_witness: None,
            params: None,
            maximal_in_c1: None,
            maximal_in_c2: None,
            maximal: None,
            triorthogonal_c2: None,
        });
    }

    let mut failing_witness = None;
    let in_c1 = c1.contains(c2)?;
    if !in_c1 {
        failing_witness = c1.first_row_outside(c2)?;
    }
    let square_dual = c1.schur_power(2)?.dual();
    let orth = square_dual.contains(c2)?;
    if in_c1 && !orth {
        failing_witness = square_dual.first_row_outside(c2)?;
    }
    let cond3 = in_c1 && orth;

    let (cond2, cond4) = if cross_check {
        let c2_even = c2.is_even();
        let mut cond2 = in_c1 && c2_even;
        if cond2 {
            for x in c2.nonzero_codewords(ENUMERATION_CAP_LOG2)? {
                if x.weight() % 2 != 0 {
                    cond2 = false;
                    break;
                }
                let z = x.zero_positions();
                let punctured = c1.puncture(&z)?;
                if !punctured.is_self_orthogonal() {
                    cond2 = false;
                    break;
                }
            }
        }
        let rhs = c1.dual().sum(&c1.schur_power(2)?)?;
        let cond4 = c2.dual().contains(&rhs)?;
        if cond2 != cond3 || cond4 != cond3 {
            return Err(Error::Inconsistency(format!(
                "equivalent conditions disagree: (2)={cond2} (3)={cond3} (4)={cond4}"
            )));
        }
        (Some(cond2), Some(cond4))
    } else {
        (None, None)
    };

    if cond3 && !c2.is_self_orthogonal() {
        return Err(Error::Inconsistency(
            "verified pair has a non-self-orthogonal C2".into(),
        ));
    }

    Ok(CssTReport {
        status: if cond3 {
            CsstStatus::Pair
        } else {
            CsstStatus::NotPair
        },
        conditions: ConditionResults {
            cond1: cond2,
            cond2,
            cond3,
            cond4,
        },
        failing_witness,
        params: None,
        maximal_in_c1: None,
        maximal_in_c2: None,
        maximal: None,
        triorthogonal_c2: None,
    })
}

/// Quantum parameters of a verified pair. `d_lower` may carry a bound the
/// caller has certified (e.g. from the BCH/amplitude bound); the distance
/// witness is searched in `dual(C2)` and must lie outside `dual(C1)`.
pub fn quantum_params(
    c1: &BinaryCode,
    c2: &BinaryCode,
    d_lower: Option<usize>,
    opts: &MinWeightOptions,
) -> Result<QuantumParams> {
    if c1.len() != c2.len() {
        return Err(Error::LengthMismatch {
            left: c1.len(),
            right: c2.len(),
        });
    }
    let n = c1.len();
    let k1 = c1.dim();
    let k2 = c2.dim();
    if k2 > k1 {
        return Err(Error::NotCsstPair);
    }
    let d2 = c2.dual();
    let d1 = c1.dual();
    let search_opts = MinWeightOptions {
        lower_bound: d_lower.unwrap_or(1),
        ..opts.clone()
    };
    let out = d2.min_weight_excluding(Some(&d1), &search_opts)?;
    Ok(QuantumParams {
        n,
        k: k1 - k2,
        d_lower: if out.exact {
            out.upper.unwrap_or(out.lower)
        } else {
            out.lower
        },
        d_upper: out.upper,
        d_exact: out.exact,
        witness: out.witness,
    })
}

/// The space `C2^⊥ ∩ (C1 ⋆ C2)^⊥` of admissible one-step extensions of C1.
/// For a CSS-T pair it contains C1; that containment is asserted.
pub fn extension_space(c1: &BinaryCode, c2: &BinaryCode) -> Result<BinaryCode> {
    let space = c2.dual().intersect(&c1.schur(c2)?.dual())?;
    if !space.contains(c1)? {
        return Err(Error::Inconsistency(
            "extension space does not contain C1; the input is not a CSS-T pair".into(),
        ));
    }
    Ok(space)
}

/// Repeatedly extend C1 by an extension-space basis vector outside it until
/// the pair is maximal in C1. Each step raises the quantum dimension by one
/// and keeps the distance bound. Returns the successive extensions (empty
/// when the input is already maximal in C1) and the parameters of the final
/// pair.
///
/// The candidate taken at each step is the last RREF generator row of the
/// extension space that lies outside C1 (the escape vector with the largest
/// pivot), so the walk is deterministic. Adding y shrinks the space to
/// `E ∩ (y ⋆ C2)^⊥`, which is how the loop updates it.
pub fn propagate(
    c1: &BinaryCode,
    c2: &BinaryCode,
    d_lower: Option<usize>,
    opts: &MinWeightOptions,
) -> Result<(Vec<BinaryCode>, QuantumParams)> {
    let report = verify_csst(c1, c2, false)?;
    if !report.is_pair() {
        return Err(Error::NotCsstPair);
    }
    let n = c1.len();
    let mut current = c1.clone();
    let mut chain = Vec::new();
    let mut space = extension_space(&current, c2)?;
    while space != current {
        let mut escape = None;
        for y in space.generator().rows().iter().rev() {
            if !current.contains_vector(y)? {
                escape = Some(y.clone());
                break;
            }
        }
        let y = escape.ok_or_else(|| {
            Error::Inconsistency("extension space exceeds C1 but no basis vector escapes it".into())
        })?;
        let y_schur_c2 = BinaryCode::from_rows(n, vec![y.clone()])?.schur(c2)?;
        let next_space = space.intersect(&y_schur_c2.dual())?;
        current = current.sum(&BinaryCode::from_rows(n, vec![y])?)?;
        chain.push(current.clone());
        space = next_space;
        if !space.contains(&current)? {
            return Err(Error::Inconsistency(
                "extension space lost the current C1 during propagation".into(),
            ));
        }
    }
    let params = quantum_params(&current, c2, d_lower, opts)?;
    Ok((chain, params))
}

/// Maximal in the C2 slot: no even extension of C2 keeps the pair valid,
/// which happens exactly when `C2 = C1 ∩ (C1^{⋆2})^⊥`.
pub fn is_maximal_in_c2(c1: &BinaryCode, c2: &BinaryCode) -> Result<bool> {
    Ok(*c2 == c1.intersect(&c1.schur_power(2)?.dual())?)
}

/// Maximal in the C1 slot: `C1 = C2^⊥ ∩ (C1 ⋆ C2)^⊥`.
pub fn is_maximal_in_c1(c1: &BinaryCode, c2: &BinaryCode) -> Result<bool> {
    Ok(*c1 == c2.dual().intersect(&c1.schur(c2)?.dual())?)
}

/// Maximal in the poset: `C1^⊥ = C1 ⋆ C2` and `C2^⊥ = C1^{⋆2}`. The
/// equivalence with slot-wise maximality is asserted.
pub fn is_maximal(c1: &BinaryCode, c2: &BinaryCode) -> Result<bool> {
    let by_duals = c1.dual() == c1.schur(c2)? && c2.dual() == c1.schur_power(2)?;
    let by_slots = is_maximal_in_c1(c1, c2)? && is_maximal_in_c2(c1, c2)?;
    if by_duals != by_slots {
        return Err(Error::Inconsistency(format!(
            "maximality checks disagree: dual-equalities={by_duals} slot-wise={by_slots}"
        )));
    }
    Ok(by_duals)
}

/// Special-case maximality tests for the diagonal pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpecialCases {
    /// `(C, C)` is maximal iff `C^{⋆2} = C^⊥`.
    pub diagonal_maximal: bool,
    /// `(C, C^⊥)` is maximal iff `C^{⋆2} = C`; only applicable when
    /// `C^⊥ ⊆ C`, reported as `None` otherwise.
    pub dual_pair_maximal: Option<bool>,
}

pub fn special_case_checks(c: &BinaryCode) -> Result<SpecialCases> {
    let square = c.schur_power(2)?;
    let diagonal_maximal = square == c.dual();
    let dual_pair_maximal = if c.contains(&c.dual())? {
        Some(square == *c)
    } else {
        None
    };
    Ok(SpecialCases {
        diagonal_maximal,
        dual_pair_maximal,
    })
}

/// No pair `(D1, D2)` in the poset has `C1 ⊊ D1`: every nonzero
/// `y ∈ C1 ∩ (C1^{⋆2})^⊥` must satisfy `C1 ⋆ y = C1^⊥`. Vacuously true when
/// the intersection is zero.
pub fn strong_nonextendability_c1(c1: &BinaryCode) -> Result<bool> {
    let meet = c1.intersect(&c1.schur_power(2)?.dual())?;
    if meet.is_zero_code() {
        return Ok(true);
    }
    let dual = c1.dual();
    for y in meet.nonzero_codewords(ENUMERATION_CAP_LOG2)? {
        let line = BinaryCode::from_rows(c1.len(), vec![y])?;
        if c1.schur(&line)? != dual {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No pair `(D1, D2)` in the poset has `C2 ⊊ D2`: `(C2, C2)` must itself be
/// maximal, i.e. `C2^{⋆2} = C2^⊥`.
pub fn strong_nonextendability_c2(c2: &BinaryCode) -> Result<bool> {
    Ok(c2.schur_power(2)? == c2.dual())
}

/// Consequence every CSS-T pair satisfies: the all-ones vector is orthogonal
/// to `C2^{⋆3}`.
pub fn one_orthogonal_to_cube(c2: &BinaryCode) -> Result<bool> {
    let cube = c2.schur_power(3)?;
    let one = BinaryVector::ones(c2.len());
    Ok(cube.generator().rows().iter().all(|r| !r.dot(&one)))
}

/// Triorthogonality of a raw matrix: all pairwise and triple coordinate-wise
/// row products have even weight.
pub fn is_triorthogonal_matrix(g: &BinaryMatrix) -> bool {
    let rows = g.rows();
    for a in 0..rows.len() {
        for b in (a + 1)..rows.len() {
            let ab = rows[a].and(&rows[b]);
            if !ab.weight().is_multiple_of(2) {
                return false;
            }
            for rc in rows.iter().skip(b + 1) {
                if !ab.and(rc).weight().is_multiple_of(2) {
                    return false;
                }
            }
        }
    }
    true
}

/// Distillation scaling exponent `log2(n/k) / log2(d)`; lower is better.
pub fn scaling_exponent(n: usize, k: usize, d: usize) -> Result<f64> {
    if k < 1 || d < 2 {
        return Err(Error::Parameter(format!(
            "scaling exponent needs k >= 1 and d >= 2, got k={k}, d={d}"
        )));
    }
    Ok((n as f64 / k as f64).log2() / (d as f64).log2())
}
