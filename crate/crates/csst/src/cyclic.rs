//! Cyclotomic cosets and the cyclic / extended-cyclic code machinery: coset
//! arithmetic (Minkowski sums, negation, amplitude and BCH-run bounds),
//! code construction from generating sets, the coset-level pair criterion
//! and maximality tests, restricted weights, and the greedy table search.
//!
//! Residue convention: `Z_n = {1, ..., n}` with `n` standing for the residue
//! zero. Only the extended setting introduces a genuine symbol `0`, which is
//! the exponent of the extra evaluation point.

use crate::code::BinaryCode;
use crate::error::{Error, Result};
use crate::field::ExtField;
use crate::gf2::{BinaryMatrix, BinaryVector};
use std::collections::BTreeSet;
use std::fmt;

/// A subset of `{1, ..., n}` closed under doubling mod n, optionally
/// augmented with the symbol `0` in the extended setting.
#[derive(Clone, PartialEq, Eq)]
pub struct CosetSet {
    n: u32,
    extended: bool,
    elems: BTreeSet<u32>,
}

fn double_mod(a: u32, n: u32) -> u32 {
    if a == 0 {
        return 0;
    }
    let r = (2 * a) % n;
    if r == 0 {
        n
    } else {
        r
    }
}

impl CosetSet {
    pub fn new<I: IntoIterator<Item = u32>>(n: u32, extended: bool, elems: I) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(Error::EvenModulus(n));
        }
        let elems: BTreeSet<u32> = elems.into_iter().collect();
        for &a in &elems {
            if a > n || (a == 0 && !extended) {
                return Err(Error::BadResidue { a, n });
            }
            let d = double_mod(a, n);
            if !elems.contains(&d) {
                return Err(Error::NotDoublingClosed {
                    n,
                    elem: a,
                    missing: d,
                });
            }
        }
        Ok(Self { n, extended, elems })
    }

    pub fn empty(n: u32, extended: bool) -> Self {
        Self {
            n,
            extended,
            elems: BTreeSet::new(),
        }
    }

    /// Union of the doubling orbits of the given leaders. Each leader must be
    /// the smallest element of its orbit (`0` is only valid when extended).
    pub fn from_leaders(n: u32, leaders: &[u32], extended: bool) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(Error::EvenModulus(n));
        }
        let mut elems = BTreeSet::new();
        for &l in leaders {
            if l == 0 {
                if !extended {
                    return Err(Error::BadResidue { a: 0, n });
                }
                elems.insert(0);
                continue;
            }
            if l > n {
                return Err(Error::BadResidue { a: l, n });
            }
            let orbit = orbit_of(l, n);
            if *orbit.iter().min().unwrap() != l {
                return Err(Error::InvalidLeader {
                    leader: l,
                    n,
                    valid: coset_leaders(n),
                });
            }
            elems.extend(orbit);
        }
        Ok(Self { n, extended, elems })
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, a: u32) -> bool {
        self.elems.contains(&a)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        self.elems.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.elems.iter().copied().collect()
    }

    /// Smallest element; the orbit of `n` is labeled `n` itself.
    pub fn leader(&self) -> Option<u32> {
        self.elems.first().copied()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.extended != other.extended {
            return Err(Error::CosetMismatch);
        }
        Ok(())
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.elems.is_subset(&other.elems))
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            n: self.n,
            extended: self.extended,
            elems: self.elems.union(&other.elems).copied().collect(),
        })
    }

    /// Adjoin the orbit `{n}`, the generating set of the all-ones word.
    pub fn with_n(&self) -> Self {
        let mut elems = self.elems.clone();
        elems.insert(self.n);
        Self {
            n: self.n,
            extended: self.extended,
            elems,
        }
    }

    /// Adjoin the symbol `0` (extended sets only).
    pub fn with_zero(&self) -> Result<Self> {
        if !self.extended {
            return Err(Error::BadResidue { a: 0, n: self.n });
        }
        let mut elems = self.elems.clone();
        elems.insert(0);
        Ok(Self {
            n: self.n,
            extended: self.extended,
            elems,
        })
    }

    /// Minkowski sum. In the extended setting `0 + 0 = 0` and every other
    /// sum is reduced in `Z_n`. The result is doubling-closed; that is
    /// asserted.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.n;
        let mut elems = BTreeSet::new();
        for &a in &self.elems {
            for &b in &other.elems {
                if self.extended && a == 0 && b == 0 {
                    elems.insert(0);
                    continue;
                }
                let r = (a % n + b % n) % n;
                elems.insert(if r == 0 { n } else { r });
            }
        }
        let out = Self {
            n,
            extended: self.extended,
            elems,
        };
        for &a in &out.elems {
            let d = double_mod(a, n);
            if !out.elems.contains(&d) {
                return Err(Error::Inconsistency(format!(
                    "Minkowski sum lost doubling closure at {a} mod {n}"
                )));
            }
        }
        Ok(out)
    }

    /// `-I = {n - i}` with the residue zero written as `n`. Non-extended only.
    pub fn negate(&self) -> Result<Self> {
        if self.extended {
            return Err(Error::Parameter(
                "negation is only defined for non-extended cosets".into(),
            ));
        }
        let n = self.n;
        Ok(Self {
            n,
            extended: false,
            elems: self
                .elems
                .iter()
                .map(|&a| if a == n { n } else { n - a })
                .collect(),
        })
    }

    /// Complement in `Z_n` (or in `{0} ∪ Z_n` when extended).
    pub fn complement(&self) -> Self {
        let mut elems: BTreeSet<u32> = (1..=self.n).filter(|a| !self.elems.contains(a)).collect();
        if self.extended && !self.elems.contains(&0) {
            elems.insert(0);
        }
        Self {
            n: self.n,
            extended: self.extended,
            elems,
        }
    }

    fn residues(&self) -> BTreeSet<u32> {
        self.elems.iter().map(|&a| a % self.n).collect()
    }

    /// Length of the shortest cyclic interval containing the set.
    /// Non-extended and nonempty only.
    pub fn amplitude(&self) -> Result<u32> {
        if self.extended {
            return Err(Error::Parameter(
                "amplitude is only defined for non-extended cosets".into(),
            ));
        }
        if self.elems.is_empty() {
            return Err(Error::EmptySet);
        }
        let res: Vec<u32> = self.residues().into_iter().collect();
        let m = res.len();
        let mut max_gap = res[0] + self.n - res[m - 1];
        for i in 0..m - 1 {
            max_gap = max_gap.max(res[i + 1] - res[i]);
        }
        Ok(self.n - max_gap + 1)
    }

    /// Longest run of cyclically consecutive residues in the set (the usual
    /// BCH count). Extended sets map the symbol 0 to the residue 0.
    pub fn bch_delta(&self) -> u32 {
        let res = self.residues();
        if res.is_empty() {
            return 0;
        }
        if res.len() as u32 == self.n {
            return self.n;
        }
        let mut best = 0u32;
        for &r in &res {
            let prev = (r + self.n - 1) % self.n;
            if res.contains(&prev) {
                continue;
            }
            let mut len = 1u32;
            while res.contains(&((r + len) % self.n)) {
                len += 1;
            }
            best = best.max(len);
        }
        best
    }

    /// BCH-type lower bound on the minimum weight of the primal code built
    /// from this generating set: `n - Amp(I) + 1` for cyclic sets,
    /// `n - max(I) + 1` for extended ones.
    pub fn primal_distance_bound(&self) -> Result<u32> {
        if self.extended {
            if self.elems.is_empty() {
                return Err(Error::EmptySet);
            }
            Ok(self.n - self.elems.last().copied().unwrap() + 1)
        } else {
            Ok(self.n - self.amplitude()? + 1)
        }
    }
}

impl fmt::Debug for CosetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CosetSet(n={}{}, {:?})",
            self.n,
            if self.extended { ", extended" } else { "" },
            self.elems
        )
    }
}

fn orbit_of(a: u32, n: u32) -> BTreeSet<u32> {
    let mut orbit = BTreeSet::new();
    let mut x = a;
    while orbit.insert(x) {
        x = double_mod(x, n);
    }
    orbit
}

/// Leaders of the minimal cosets mod n, ascending; the orbit of `n` is last.
pub fn coset_leaders(n: u32) -> Vec<u32> {
    minimal_cosets_unchecked(n)
        .into_iter()
        .map(|o| *o.iter().min().unwrap())
        .collect()
}

fn minimal_cosets_unchecked(n: u32) -> Vec<BTreeSet<u32>> {
    let mut seen = vec![false; (n + 1) as usize];
    let mut out = Vec::new();
    for a in 1..=n {
        if seen[a as usize] {
            continue;
        }
        let orbit = orbit_of(a, n);
        for &x in &orbit {
            seen[x as usize] = true;
        }
        out.push(orbit);
    }
    out.sort_by_key(|o| *o.iter().min().unwrap());
    out
}

/// Partition of `{1, ..., n}` into doubling orbits, sorted by leader.
pub fn minimal_cosets(n: u32) -> Result<Vec<CosetSet>> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenModulus(n));
    }
    Ok(minimal_cosets_unchecked(n)
        .into_iter()
        .map(|elems| CosetSet {
            n,
            extended: false,
            elems,
        })
        .collect())
}

/// Cyclic code with generating set `I`: the shifts of the generator
/// polynomial `g = prod of the minimal polynomials covering the defining
/// set J = Z_n \ I`. Coordinates are the coefficients of `x^0 .. x^{n-1}`.
pub fn cyclic_code(field: &ExtField, i_set: &CosetSet) -> Result<BinaryCode> {
    if i_set.is_extended() {
        return Err(Error::Parameter(
            "cyclic_code takes a non-extended generating set".into(),
        ));
    }
    let n = i_set.modulus();
    field.nth_root(n)?;
    let j_set = i_set.complement();
    // g = product over the minimal cosets inside J
    let mut g = vec![0u64; (n as usize + 1).div_ceil(64)];
    g[0] = 1;
    let mut deg = 0usize;
    for orbit in minimal_cosets_unchecked(n) {
        let leader = *orbit.iter().min().unwrap();
        if !j_set.contains(leader) {
            continue;
        }
        let m = field.minimal_polynomial(n, leader)?;
        poly_mul_mask(&mut g, m);
        deg += orbit.len();
    }
    debug_assert_eq!(deg, j_set.len());
    let k = i_set.len();
    let mut rows = Vec::with_capacity(k);
    for shift in 0..k {
        let mut row = BinaryVector::zeros(n as usize);
        for j in 0..=deg {
            if (g[j / 64] >> (j % 64)) & 1 == 1 {
                row.set(shift + j, true);
            }
        }
        rows.push(row);
    }
    let code = BinaryCode::from_rows(n as usize, rows)?;
    if code.dim() != k {
        return Err(Error::Inconsistency(format!(
            "cyclic code dimension {} differs from |I| = {k}",
            code.dim()
        )));
    }
    Ok(code)
}

/// Independent construction of the same code as `cyclic_code`, through the
/// parity system of the evaluation code: a binary vector lies in C(I) iff
/// its polynomial vanishes at `beta^b` for every b in the defining set, and
/// each GF(2^s) constraint expands into s binary parity rows.
pub fn cyclic_code_parity_route(field: &ExtField, i_set: &CosetSet) -> Result<BinaryCode> {
    if i_set.is_extended() {
        return Err(Error::Parameter(
            "the parity route takes a non-extended generating set".into(),
        ));
    }
    let n = i_set.modulus();
    let beta = field.nth_root(n)?;
    let s = field.degree() as usize;
    let j_set = i_set.complement();
    let mut parity_rows = Vec::with_capacity(j_set.len() * s);
    for b in j_set.elements() {
        let mut gf_row = Vec::with_capacity(n as usize);
        for j in 0..n as u64 {
            gf_row.push(field.pow(beta, j * b as u64));
        }
        expand_gf_row_binary(&gf_row, s, &mut parity_rows);
    }
    let parity = BinaryMatrix::new(n as usize, parity_rows)?;
    let code = BinaryCode::from_matrix(&parity.kernel());
    if code.dim() != i_set.len() {
        return Err(Error::Inconsistency(format!(
            "parity-route cyclic code dimension {} differs from |I| = {}",
            code.dim(),
            i_set.len()
        )));
    }
    Ok(code)
}

/// Extended cyclic code of length n+1: the binary evaluation vectors of the
/// monomials `x^i`, `i in I`, over the point 0 followed by the n-th roots of
/// unity, with `0^0 = 1`. Built through the binary expansion of the
/// evaluation parity system.
pub fn extended_cyclic_code(field: &ExtField, i_set: &CosetSet) -> Result<BinaryCode> {
    if !i_set.is_extended() {
        return Err(Error::Parameter(
            "extended_cyclic_code takes an extended generating set".into(),
        ));
    }
    let n = i_set.modulus();
    let beta = field.nth_root(n)?;
    let s = field.degree() as usize;
    let len = n as usize + 1;
    let mut parity_rows = Vec::new();

    // residue constraints for a in 1..n-1 outside I
    for a in 1..n {
        if i_set.contains(a) {
            continue;
        }
        let mut gf_row = Vec::with_capacity(len);
        gf_row.push(0);
        for j in 0..n as u64 {
            gf_row.push(field.pow(beta, j * (n - a) as u64));
        }
        expand_gf_row_binary(&gf_row, s, &mut parity_rows);
    }

    // the residue-zero story depends on which of the exponents 0 and n are
    // present: x^0 and x^n agree on the roots of unity but differ at 0
    let has_zero = i_set.contains(0);
    let has_n = i_set.contains(n);
    let mut all_ones_root_part = vec![1u32; len];
    all_ones_root_part[0] = 0;
    let mut point_zero = vec![0u32; len];
    point_zero[0] = 1;
    match (has_zero, has_n) {
        (false, false) => {
            expand_gf_row_binary(&all_ones_root_part, s, &mut parity_rows);
            expand_gf_row_binary(&point_zero, s, &mut parity_rows);
        }
        (true, false) => {
            let mut row = vec![1u32; len];
            row[0] = 1;
            expand_gf_row_binary(&row, s, &mut parity_rows);
        }
        (false, true) => {
            expand_gf_row_binary(&point_zero, s, &mut parity_rows);
        }
        (true, true) => {}
    }

    let parity = BinaryMatrix::new(len, parity_rows)?;
    let code = BinaryCode::from_matrix(&parity.kernel());
    if code.dim() != i_set.len() {
        return Err(Error::Inconsistency(format!(
            "extended cyclic code dimension {} differs from |I| = {}",
            code.dim(),
            i_set.len()
        )));
    }
    Ok(code)
}

/// Each GF(2^s) parity row expands into s binary rows, one per coordinate of
/// the polynomial basis.
fn expand_gf_row_binary(gf_row: &[u32], s: usize, out: &mut Vec<BinaryVector>) {
    for bit in 0..s {
        let row = BinaryVector::from_bits(gf_row.iter().map(|&e| (e >> bit) & 1 == 1));
        if !row.is_zero() {
            out.push(row);
        }
    }
}

fn poly_mul_mask(acc: &mut [u64], mask: u32) {
    let snapshot = acc.to_vec();
    for w in acc.iter_mut() {
        *w = 0;
    }
    for bit in 0..32 {
        if (mask >> bit) & 1 == 0 {
            continue;
        }
        // acc ^= snapshot << bit
        let word_shift = bit / 64;
        let bit_shift = bit % 64;
        for i in (0..snapshot.len()).rev() {
            let mut v = snapshot[i];
            let dst = i + word_shift;
            if dst < acc.len() {
                acc[dst] ^= v << bit_shift;
            }
            if bit_shift > 0 && dst + 1 < acc.len() {
                v = snapshot[i] >> (64 - bit_shift);
                acc[dst + 1] ^= v;
            }
        }
    }
}

/// Coset-level CSS-T criterion and the certified parameters.
#[derive(Clone, Debug)]
pub struct CyclicCheck {
    pub ok: bool,
    /// condition (1): I2 is a subset of I1
    pub subset: bool,
    /// condition (2): n is not in I1 + I1 + I2
    pub triple_sum_free: bool,
    /// block length of the constructed codes (n, or n+1 when extended)
    pub length: usize,
    pub k: Option<usize>,
    pub d_lower: Option<usize>,
}

/// Decide the pair criterion on generating sets: `I2 ⊆ I1` and
/// `n ∉ I1 + I1 + I2`. For non-extended sets the equivalent containment
/// `I1 + I1 ⊆ -J2` is evaluated as a consistency cross-check, and the
/// distance bound is the amplitude form `n - Amp(J2) + 1`; extended sets use
/// the BCH-run bound `delta(I2) + 1` directly.
pub fn csst_cyclic_check(i1: &CosetSet, i2: &CosetSet) -> Result<CyclicCheck> {
    if i1.modulus() != i2.modulus() || i1.is_extended() != i2.is_extended() {
        return Err(Error::CosetMismatch);
    }
    let n = i1.modulus();
    let subset = i2.is_subset_of(i1)?;
    let triple = i1.minkowski_sum(i1)?.minkowski_sum(i2)?;
    let triple_sum_free = !triple.contains(n);

    if !i1.is_extended() {
        let neg_j2 = i2.complement().negate()?;
        let variant = i1.minkowski_sum(i1)?.is_subset_of(&neg_j2)?;
        if variant != triple_sum_free {
            return Err(Error::Inconsistency(format!(
                "coset criteria disagree: triple-sum-free={triple_sum_free}, I1+I1 in -J2={variant}"
            )));
        }
    }

    let ok = subset && triple_sum_free;
    let (k, d_lower) = if ok {
        let d = if i1.is_extended() {
            i2.bch_delta() + 1
        } else {
            let j2 = i2.complement();
            n - j2.amplitude()? + 1
        };
        (Some(i1.len() - i2.len()), Some(d as usize))
    } else {
        (None, None)
    };
    Ok(CyclicCheck {
        ok,
        subset,
        triple_sum_free,
        length: if i1.is_extended() {
            n as usize + 1
        } else {
            n as usize
        },
        k,
        d_lower,
    })
}

/// Coset-level maximality of a verified pair (non-extended).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycMaximality {
    pub in_c1: bool,
    pub in_c2: bool,
    pub full: bool,
}

pub fn cyc_maximality(i1: &CosetSet, i2: &CosetSet) -> Result<CycMaximality> {
    if i1.is_extended() || i2.is_extended() {
        return Err(Error::Parameter(
            "coset-level maximality is stated for non-extended sets".into(),
        ));
    }
    let check = csst_cyclic_check(i1, i2)?;
    if !check.ok {
        return Err(Error::NotCsstPair);
    }
    let neg_j1 = i1.complement().negate()?;
    let neg_j2 = i2.complement().negate()?;
    let i1_i2 = i1.minkowski_sum(i2)?;
    let i1_i1 = i1.minkowski_sum(i1)?;
    let in_c1 = neg_j1 == i2.union(&i1_i2)?;
    let in_c2 = neg_j2 == neg_j1.union(&i1_i1)?;
    let full = neg_j1 == i1_i2 && neg_j2 == i1_i1;
    Ok(CycMaximality { in_c1, in_c2, full })
}

/// Maximum number of ones in any window of `t` cyclically consecutive binary
/// digits of `a`, read in `s` positions.
pub fn restricted_weight(a: u32, t: u32, s: u32) -> Result<u32> {
    if !(1..=s).contains(&t) || s > 32 {
        return Err(Error::Parameter(format!(
            "restricted weight needs 1 <= t <= s, got t={t}, s={s}"
        )));
    }
    if a >> s != 0 {
        return Err(Error::BadResidue {
            a,
            n: (1u32 << s) - 1,
        });
    }
    let mut best = 0;
    for i in 0..s {
        let mut sum = 0;
        for j in 0..t {
            sum += (a >> ((i + j) % s)) & 1;
        }
        best = best.max(sum);
    }
    Ok(best)
}

/// The set `{a : restricted weight of a <= mu}` mod `2^s - 1`. Extended sets
/// additionally carry the symbol 0, whose restricted weight is zero.
pub fn coset_by_restricted_weight(t: u32, mu: u32, s: u32, extended: bool) -> Result<CosetSet> {
    if mu > t {
        return Err(Error::Parameter(format!("mu={mu} exceeds t={t}")));
    }
    if mu == 0 && !extended {
        return Err(Error::Parameter(
            "mu = 0 is only allowed for extended sets".into(),
        ));
    }
    let n = (1u32 << s) - 1;
    let mut elems: Vec<u32> = Vec::new();
    if extended {
        elems.push(0);
    }
    for a in 1..=n {
        if restricted_weight(a, t, s)? <= mu {
            elems.push(a);
        }
    }
    CosetSet::new(n, extended, elems)
}

/// Restricted-weight pair construction.
#[derive(Clone, Debug)]
pub struct RestrictedOutcome {
    pub ok: bool,
    pub i1: CosetSet,
    pub i2: CosetSet,
}

/// Builds `(I^t_{<=mu1}, I^t_{<=mu2})` and applies the floor-sum criterion
/// `2*floor(mu1*s/t) + floor(mu2*s/t) <= s - 1`. When the criterion holds,
/// the coset-level pair check is asserted to pass.
pub fn restricted_csst(t: u32, mu1: u32, mu2: u32, s: u32, extended: bool) -> Result<RestrictedOutcome> {
    let i1 = coset_by_restricted_weight(t, mu1, s, extended)?;
    let i2 = coset_by_restricted_weight(t, mu2, s, extended)?;
    let bound = 2 * ((mu1 * s) / t) + (mu2 * s) / t;
    let ok = mu2 <= mu1 && bound < s;
    if ok {
        let check = csst_cyclic_check(&i1, &i2)?;
        if !check.ok {
            return Err(Error::Inconsistency(format!(
                "restricted-weight criterion accepted (t={t}, mu1={mu1}, mu2={mu2}, s={s}) but the coset criterion rejects"
            )));
        }
    }
    Ok(RestrictedOutcome { ok, i1, i2 })
}

/// Result of the greedy coset search.
#[derive(Clone, Debug)]
pub struct GreedyOutcome {
    pub i1: CosetSet,
    pub i2: CosetSet,
    pub n: u32,
    /// block length (n, or n+1 when extended)
    pub length: usize,
    pub k: usize,
    pub d_lower: usize,
}

/// Greedy construction at n = 2^s - 1: seed I2 with the first `t` minimal
/// cosets (plus the symbol 0 when extended), then sweep the remaining cosets
/// in leader order, keeping each one that preserves `n ∉ I1 + I1 + I2`.
/// Skipped cosets stay skipped. Non-extended runs finally adjoin `{n}`,
/// which always preserves the criterion.
pub fn greedy_search(s: u32, t: usize, extended: bool) -> Result<GreedyOutcome> {
    if !(2..=16).contains(&s) {
        return Err(Error::DegreeOutOfRange(s));
    }
    if t == 0 {
        return Err(Error::Parameter("greedy needs t >= 1".into()));
    }
    let n = (1u32 << s) - 1;
    let cosets = minimal_cosets(n)?;
    // every minimal coset except the orbit {n} of the all-ones exponent
    let regular: Vec<&CosetSet> = cosets.iter().filter(|c| c.leader() != Some(n)).collect();
    if t > regular.len() {
        return Err(Error::Parameter(format!(
            "t={t} exceeds the {} minimal cosets mod {n}",
            regular.len()
        )));
    }
    let mut i2 = CosetSet::empty(n, extended);
    for c in &regular[..t] {
        i2 = i2.union(&c.promote(extended))?;
    }
    if extended {
        i2 = i2.with_zero()?;
    }
    let seed_triple = i2.minkowski_sum(&i2)?.minkowski_sum(&i2)?;
    if seed_triple.contains(n) {
        return Err(Error::GreedySeed { t });
    }
    let mut i1 = i2.clone();
    for c in &regular[t..] {
        let trial = i1.union(&c.promote(extended))?;
        let triple = trial.minkowski_sum(&trial)?.minkowski_sum(&i2)?;
        if !triple.contains(n) {
            i1 = trial;
        }
    }
    if !extended {
        i1 = i1.with_n();
    }
    let check = csst_cyclic_check(&i1, &i2)?;
    if !check.ok {
        return Err(Error::Inconsistency(
            "greedy output fails the coset criterion".into(),
        ));
    }
    Ok(GreedyOutcome {
        n,
        length: check.length,
        k: check.k.unwrap(),
        d_lower: check.d_lower.unwrap(),
        i1,
        i2,
    })
}

impl CosetSet {
    /// Same elements, reinterpreted with the given extension flag.
    fn promote(&self, extended: bool) -> Self {
        Self {
            n: self.n,
            extended,
            elems: self.elems.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn set(n: u32, elems: &[u32]) -> CosetSet {
        CosetSet::new(n, false, elems.iter().copied()).unwrap()
    }

    #[test]
    fn minimal_cosets_mod_15() {
        let cosets = minimal_cosets(15).unwrap();
        let got: Vec<Vec<u32>> = cosets.iter().map(|c| c.to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![1, 2, 4, 8],
                vec![3, 6, 9, 12],
                vec![5, 10],
                vec![7, 11, 13, 14],
                vec![15],
            ]
        );
    }

    #[test]
    fn minimal_cosets_mod_3_and_127() {
        let got: Vec<Vec<u32>> = minimal_cosets(3)
            .unwrap()
            .iter()
            .map(|c| c.to_vec())
            .collect();
        assert_eq!(got, vec![vec![1, 2], vec![3]]);

        let cosets = minimal_cosets(127).unwrap();
        assert_eq!(cosets.len(), 19);
        assert_eq!(cosets.iter().filter(|c| c.len() == 7).count(), 18);
        assert_eq!(cosets.last().unwrap().to_vec(), vec![127]);
        let total: usize = cosets.iter().map(|c| c.len()).sum();
        assert_eq!(total, 127);
        assert!(minimal_cosets(6).is_err());
    }

    #[test]
    fn doubling_closure_is_validated() {
        assert!(CosetSet::new(15, false, [1, 2]).is_err());
        assert!(CosetSet::new(15, false, [1, 2, 4, 8]).is_ok());
        assert!(CosetSet::new(15, false, [0]).is_err());
        assert!(CosetSet::new(15, true, [0]).is_ok());
    }

    #[test]
    fn minkowski_sum_of_the_15_example() {
        let i1 = set(15, &[1, 2, 4, 8, 15]);
        let i2 = set(15, &[1, 2, 4, 8]);
        let sum = i1.minkowski_sum(&i2).unwrap();
        assert_eq!(sum.to_vec(), vec![1, 2, 3, 4, 5, 6, 8, 9, 10, 12]);
        let i1_i1 = i1.minkowski_sum(&i1).unwrap();
        assert_eq!(i1_i1, sum.union(&set(15, &[15])).unwrap());
        // {n} is the additive identity under the representative convention
        let id = set(15, &[15]);
        assert_eq!(i1.minkowski_sum(&id).unwrap(), i1);
    }

    #[test]
    fn minkowski_closure_on_random_coset_pairs() {
        let mut rng = ChaCha12Rng::seed_from_u64(0xC0);
        for &n in &[15u32, 31, 63, 127] {
            let cosets = minimal_cosets(n).unwrap();
            for _ in 0..250 {
                let mut a = CosetSet::empty(n, false);
                let mut b = CosetSet::empty(n, false);
                for c in &cosets {
                    if rng.gen_bool(0.4) {
                        a = a.union(c).unwrap();
                    }
                    if rng.gen_bool(0.4) {
                        b = b.union(c).unwrap();
                    }
                }
                if a.is_empty() || b.is_empty() {
                    continue;
                }
                // minkowski_sum itself asserts closure
                let _ = a.minkowski_sum(&b).unwrap();
            }
        }
    }

    #[test]
    fn amplitude_and_delta() {
        assert_eq!(set(15, &[5, 10]).amplitude().unwrap(), 6);
        let single = CosetSet::new(15, false, [15]).unwrap();
        assert_eq!(single.amplitude().unwrap(), 1);
        // J2 for the motivating example: bound = 15 - Amp + 1 = 3
        let i2 = set(15, &[1, 2, 4, 8]);
        let j2 = i2.complement();
        assert_eq!(15 - j2.amplitude().unwrap() + 1, 3);
        assert_eq!(i2.bch_delta(), 2);
    }

    #[test]
    fn amplitude_matches_naive_window_scan() {
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        for _ in 0..400 {
            let n = [15u32, 31, 63][rng.gen_range(0..3)];
            let m = rng.gen_range(1..=n);
            let elems: BTreeSet<u32> = (0..m).map(|_| rng.gen_range(1..=n)).collect();
            let res: BTreeSet<u32> = elems.iter().map(|&a| a % n).collect();
            // naive: try every window start and length
            let mut naive = n;
            'outer: for len in 1..=n {
                for start in 0..n {
                    if res.iter().all(|&r| (r + n - start) % n < len) {
                        naive = len;
                        break 'outer;
                    }
                }
            }
            let s = CosetSet {
                n,
                extended: false,
                elems,
            };
            assert_eq!(s.amplitude().unwrap(), naive);
        }
    }

    #[test]
    fn delta_amplitude_identity() {
        // n - Amp(J) + 1 == delta(I) + 1 for complementary sets
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = 63u32;
            let cosets = minimal_cosets(n).unwrap();
            let mut i = CosetSet::empty(n, false);
            for c in &cosets {
                if rng.gen_bool(0.5) {
                    i = i.union(c).unwrap();
                }
            }
            let j = i.complement();
            if i.is_empty() || j.is_empty() {
                continue;
            }
            assert_eq!(n - j.amplitude().unwrap() + 1, i.bch_delta() + 1);
            assert_eq!(j.amplitude().unwrap(), j.negate().unwrap().amplitude().unwrap());
        }
    }

    #[test]
    fn cyclic_code_of_unity_orbit_is_repetition() {
        let f = ExtField::new(4).unwrap();
        let i = set(15, &[15]);
        assert_eq!(cyclic_code(&f, &i).unwrap(), BinaryCode::repetition(15));
        assert_eq!(
            cyclic_code_parity_route(&f, &i).unwrap(),
            BinaryCode::repetition(15)
        );
    }

    #[test]
    fn cyclic_code_dimensions_at_15() {
        let f = ExtField::new(4).unwrap();
        let c1 = cyclic_code(&f, &set(15, &[1, 2, 4, 8, 15])).unwrap();
        assert_eq!((c1.len(), c1.dim()), (15, 5));
        let c2 = cyclic_code(&f, &set(15, &[1, 2, 4, 8])).unwrap();
        assert_eq!((c2.len(), c2.dim()), (15, 4));
        // simplex: all nonzero words have weight 8
        for w in c2.nonzero_codewords(8).unwrap() {
            assert_eq!(w.weight(), 8);
        }
    }

    #[test]
    fn route_a_equals_route_b_at_15_and_31() {
        for s in [4u32, 5] {
            let f = ExtField::new(s).unwrap();
            let n = (1 << s) - 1;
            let cosets = minimal_cosets(n).unwrap();
            // all unions of minimal cosets
            for mask in 0..(1u32 << cosets.len()) {
                let mut i = CosetSet::empty(n, false);
                for (b, c) in cosets.iter().enumerate() {
                    if (mask >> b) & 1 == 1 {
                        i = i.union(c).unwrap();
                    }
                }
                assert_eq!(
                    cyclic_code(&f, &i).unwrap(),
                    cyclic_code_parity_route(&f, &i).unwrap(),
                    "I = {i:?}"
                );
            }
        }
    }

    #[test]
    fn dual_identity_on_coset_unions_at_15() {
        let f = ExtField::new(4).unwrap();
        let cosets = minimal_cosets(15).unwrap();
        for mask in 0..(1u32 << cosets.len()) {
            let mut i = CosetSet::empty(15, false);
            for (b, c) in cosets.iter().enumerate() {
                if (mask >> b) & 1 == 1 {
                    i = i.union(c).unwrap();
                }
            }
            let lhs = cyclic_code(&f, &i).unwrap().dual();
            let rhs = cyclic_code(&f, &i.complement().negate().unwrap()).unwrap();
            assert_eq!(lhs, rhs, "I = {i:?}");
        }
    }

    #[test]
    fn extended_code_of_zero_is_repetition() {
        let f = ExtField::new(4).unwrap();
        let i = CosetSet::new(15, true, [0]).unwrap();
        assert_eq!(extended_cyclic_code(&f, &i).unwrap(), BinaryCode::repetition(16));
    }

    #[test]
    fn extended_dimension_on_random_cosets() {
        let mut rng = ChaCha12Rng::seed_from_u64(0xE);
        for s in [4u32, 5] {
            let f = ExtField::new(s).unwrap();
            let n = (1 << s) - 1;
            let cosets = minimal_cosets(n).unwrap();
            for _ in 0..25 {
                let mut elems: Vec<u32> = Vec::new();
                for c in &cosets {
                    if rng.gen_bool(0.4) {
                        elems.extend(c.elements());
                    }
                }
                if rng.gen_bool(0.5) {
                    elems.push(0);
                }
                let i = CosetSet::new(n, true, elems).unwrap();
                // dimension |I| is asserted inside the constructor
                let _ = extended_cyclic_code(&f, &i).unwrap();
            }
        }
    }

    #[test]
    fn extended_minkowski_zero_rules() {
        let n = 15;
        let zero = CosetSet::new(n, true, [0]).unwrap();
        let unity = CosetSet::new(n, true, [n]).unwrap();
        let orbit1 = CosetSet::new(n, true, [1, 2, 4, 8]).unwrap();
        // 0 + 0 = 0, but any sum with a nonzero term reduces in Z_n
        assert_eq!(zero.minkowski_sum(&zero).unwrap().to_vec(), vec![0]);
        assert_eq!(zero.minkowski_sum(&unity).unwrap().to_vec(), vec![n]);
        assert_eq!(zero.minkowski_sum(&orbit1).unwrap(), orbit1);
        assert_eq!(unity.minkowski_sum(&unity).unwrap().to_vec(), vec![n]);
    }

    #[test]
    fn extended_schur_identity() {
        // C^(I1) * C^(I2) = C^(I1 + I2) with the extended sum rule
        let mut rng = ChaCha12Rng::seed_from_u64(0x5c);
        for s in [4u32, 5] {
            let f = ExtField::new(s).unwrap();
            let n = (1 << s) - 1;
            let cosets = minimal_cosets(n).unwrap();
            for _ in 0..20 {
                let mut build = || {
                    let mut elems: Vec<u32> = Vec::new();
                    for c in &cosets {
                        if rng.gen_bool(0.35) {
                            elems.extend(c.elements());
                        }
                    }
                    if rng.gen_bool(0.5) {
                        elems.push(0);
                    }
                    CosetSet::new(n, true, elems).unwrap()
                };
                let i1 = build();
                let i2 = build();
                if i1.is_empty() || i2.is_empty() {
                    continue;
                }
                let lhs = extended_cyclic_code(&f, &i1)
                    .unwrap()
                    .schur(&extended_cyclic_code(&f, &i2).unwrap())
                    .unwrap();
                let rhs = extended_cyclic_code(&f, &i1.minkowski_sum(&i2).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "I1={i1:?} I2={i2:?}");
            }
        }
    }

    #[test]
    fn extended_restricted_weight_family_matches_reed_muller() {
        // C^(I^4_{<=1} u {0}) at n=15 has the weight distribution of RM_4(1)
        let f = ExtField::new(4).unwrap();
        let i = coset_by_restricted_weight(4, 1, 4, true).unwrap();
        assert_eq!(i.to_vec(), vec![0, 1, 2, 4, 8]);
        let ext = extended_cyclic_code(&f, &i).unwrap();
        let rm = crate::rm::rm_code(4, 1).unwrap();
        assert_eq!((ext.len(), ext.dim()), (rm.len(), rm.dim()));
        let spectrum = |c: &BinaryCode| {
            let mut counts = vec![0usize; c.len() + 1];
            for w in c.nonzero_codewords(16).unwrap() {
                counts[w.weight()] += 1;
            }
            counts
        };
        assert_eq!(spectrum(&ext), spectrum(&rm));
    }

    #[test]
    fn criterion_on_the_15_example() {
        let i1 = set(15, &[1, 2, 4, 8, 15]);
        let i2 = set(15, &[1, 2, 4, 8]);
        let check = csst_cyclic_check(&i1, &i2).unwrap();
        assert!(check.ok);
        assert_eq!((check.length, check.k, check.d_lower), (15, Some(1), Some(3)));
        // the triple sum is exactly {1, ..., 14}
        let triple = i1
            .minkowski_sum(&i1)
            .unwrap()
            .minkowski_sum(&i2)
            .unwrap();
        assert_eq!(triple.to_vec(), (1..=14).collect::<Vec<u32>>());

        // maximality at the coset level
        let m = cyc_maximality(&i1, &i2).unwrap();
        assert!(m.in_c1 && m.in_c2 && m.full);
    }

    #[test]
    fn criterion_rejects_unity_diagonal() {
        let i = set(15, &[15]);
        let check = csst_cyclic_check(&i, &i).unwrap();
        assert!(!check.ok);
        assert!(check.subset);
        assert!(!check.triple_sum_free);
        assert!(cyc_maximality(&i, &i).is_err());
    }

    #[test]
    fn restricted_weight_values() {
        assert_eq!(restricted_weight(15, 4, 4).unwrap(), 4);
        assert_eq!(restricted_weight(15, 2, 4).unwrap(), 2);
        // I^4_{<=1} at s=4 is the orbit of 1
        let i = coset_by_restricted_weight(4, 1, 4, false).unwrap();
        assert_eq!(i.to_vec(), vec![1, 2, 4, 8]);
        assert_eq!(i.with_n().to_vec(), vec![1, 2, 4, 8, 15]);
    }

    #[test]
    fn restricted_weight_subadditive_and_doubling_invariant() {
        for s in [4u32, 5, 6] {
            let n = (1u32 << s) - 1;
            for t in 1..=s {
                for a in 1..=n {
                    let w = restricted_weight(a, t, s).unwrap();
                    let d = double_mod(a, n);
                    assert_eq!(w, restricted_weight(d, t, s).unwrap());
                }
            }
            // subadditivity over all pairs for the full window
            for a in 1..=n {
                for b in 1..=n {
                    let c = (a + b) % n;
                    let c = if c == 0 { n } else { c };
                    let wc = restricted_weight(c, s, s).unwrap();
                    let bound =
                        restricted_weight(a, s, s).unwrap() + restricted_weight(b, s, s).unwrap();
                    assert!(wc <= bound, "s={s} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn restricted_criterion_cases() {
        let out = restricted_csst(4, 1, 1, 4, false).unwrap();
        assert!(out.ok);
        assert!(!restricted_csst(4, 1, 2, 4, false).unwrap().ok);
        // every accepted (s <= 8) combination passes the coset criterion;
        // restricted_csst asserts that internally
        for s in 2..=8u32 {
            for t in 1..=s {
                for mu1 in 1..=t {
                    for mu2 in 1..=mu1 {
                        let _ = restricted_csst(t, mu1, mu2, s, false).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn greedy_matches_motivating_parameters() {
        let out = greedy_search(4, 1, false).unwrap();
        assert_eq!((out.length, out.k, out.d_lower), (15, 1, 3));
        assert_eq!(out.i2.to_vec(), vec![1, 2, 4, 8]);
        assert_eq!(out.i1.to_vec(), vec![1, 2, 4, 8, 15]);
    }

    #[test]
    fn greedy_rejects_bad_seed() {
        // at s=4 the first two cosets already trip the triple-sum condition
        assert!(matches!(
            greedy_search(4, 2, false),
            Err(Error::GreedySeed { t: 2 })
        ));
    }

    #[test]
    fn invalid_leader_reports_valid_ones() {
        let err = CosetSet::from_leaders(15, &[2], false).unwrap_err();
        match err {
            Error::InvalidLeader { leader, valid, .. } => {
                assert_eq!(leader, 2);
                assert_eq!(valid, vec![1, 3, 5, 7, 15]);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
