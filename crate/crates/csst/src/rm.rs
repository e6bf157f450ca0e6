//! Binary Reed-Muller codes by monomial evaluation, with the point order
//! fixed so the origin sits in coordinate 0. Supplies the punctured /
//! shortened pair behind the [[15,1,3]] code and the Schur-product order
//! identity used by the diagonal maximality examples.

use crate::code::BinaryCode;
use crate::error::{Error, Result};
use crate::gf2::BinaryVector;

/// Evaluations over F2^m of all monomials of degree at most d. Point j is
/// the coordinate vector of the integer j, so the origin is first.
/// Dimension is the binomial partial sum, asserted after reduction.
pub fn rm_code(m: u32, d: u32) -> Result<BinaryCode> {
    if !(1..=20).contains(&m) || d + 1 > m {
        return Err(Error::Parameter(format!(
            "Reed-Muller needs 1 <= m, 0 <= d <= m-1, got m={m}, d={d}"
        )));
    }
    let n = 1usize << m;
    let mut rows = Vec::new();
    for vars in 0u32..(1 << m) {
        if vars.count_ones() > d {
            continue;
        }
        let row = BinaryVector::from_bits((0..n).map(|p| (p as u32) & vars == vars));
        rows.push(row);
    }
    let code = BinaryCode::from_rows(n, rows)?;
    let expect: usize = (0..=d).map(|i| binomial(m, i)).sum();
    if code.dim() != expect {
        return Err(Error::Inconsistency(format!(
            "RM({m},{d}) has dimension {} instead of {expect}",
            code.dim()
        )));
    }
    Ok(code)
}

fn binomial(n: u32, k: u32) -> usize {
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) as usize / (i + 1) as usize;
    }
    acc
}

/// The motivating pair: C1 punctures RM_4(1) at the origin ([15,5]) and C2
/// shortens it there (the [15,4] simplex code).
pub fn rm_motivating_pair() -> (BinaryCode, BinaryCode) {
    let rm = rm_code(4, 1).expect("RM_4(1) is in range");
    let c1 = rm.puncture(&[0]).expect("origin is a valid coordinate");
    let c2 = rm.shorten(&[0]).expect("origin is a valid coordinate");
    (c1, c2)
}

/// `RM(d1) ⋆ RM(d2) = RM(d1 + d2)`, the evaluation identity for products of
/// monomials; stated for `d1 + d2 <= m - 1`.
pub fn rm_schur_identity_holds(m: u32, d1: u32, d2: u32) -> Result<bool> {
    if d1 + d2 + 1 > m {
        return Err(Error::Parameter(format!(
            "Schur identity check needs d1 + d2 <= m - 1, got {d1}+{d2} vs m={m}"
        )));
    }
    let lhs = rm_code(m, d1)?.schur(&rm_code(m, d2)?)?;
    Ok(lhs == rm_code(m, d1 + d2)?)
}

/// Search the Reed-Muller pairs `(RM(d1), RM(d2))` that form CSS-T pairs
/// (`d2 <= d1` and `2*d1 + d2 <= m - 1`) for one whose quantum parameters are
/// `[[2^m, k, d]]`; the distance of such a pair is `2^(d2+1)`.
pub fn find_rm_pair_for_params(m: u32, k: usize, d: usize) -> Option<(u32, u32)> {
    for d2 in 1..m {
        for d1 in d2..m {
            if 2 * d1 + d2 > m - 1 {
                continue;
            }
            let dim1: usize = (0..=d1).map(|i| binomial(m, i)).sum();
            let dim2: usize = (0..=d2).map(|i| binomial(m, i)).sum();
            if dim1 - dim2 == k && (1usize << (d2 + 1)) == d {
                return Some((d1, d2));
            }
        }
    }
    None
}
