//! Binary linear codes in canonical form, and the code-level algebra: duals,
//! sums, intersections, Schur products and powers, shortening, puncturing,
//! weight predicates, and minimum-weight search.

use crate::error::{Error, Result};
use crate::gf2::{BinaryMatrix, BinaryVector};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use std::collections::HashSet;

/// A linear subspace of F2^n, held as its unique reduced-row-echelon
/// generator matrix. Two values compare equal exactly when they are the same
/// code, so set-level identities become plain `==` checks.
///
/// The empty generator (k = 0) is a first-class value: the zero code, which
/// shortening and intersection can legitimately produce.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryCode {
    n: usize,
    gen: BinaryMatrix,
    pivots: Vec<usize>,
}

impl BinaryCode {
    /// Span of the given rows.
    pub fn from_rows(n: usize, rows: Vec<BinaryVector>) -> Result<Self> {
        Ok(Self::from_matrix(&BinaryMatrix::new(n, rows)?))
    }

    pub fn from_matrix(m: &BinaryMatrix) -> Self {
        let r = m.rref();
        Self {
            n: m.n_cols(),
            gen: r.matrix,
            pivots: r.pivots,
        }
    }

    /// Trusted constructor for matrices already in RREF (kernel output).
    fn from_rref(m: BinaryMatrix) -> Self {
        let pivots = m
            .rows()
            .iter()
            .map(|r| r.first_set_bit().expect("RREF rows are nonzero"))
            .collect();
        Self {
            n: m.n_cols(),
            gen: m,
            pivots,
        }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            gen: BinaryMatrix::empty(n),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self::from_rref(BinaryMatrix::identity(n))
    }

    /// The repetition code, spanned by the all-ones vector.
    pub fn repetition(n: usize) -> Self {
        Self::from_rref(BinaryMatrix::new(n, vec![BinaryVector::ones(n)]).unwrap())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.gen.n_rows()
    }

    pub fn is_zero_code(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical (RREF) generator matrix.
    pub fn generator(&self) -> &BinaryMatrix {
        &self.gen
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Reduce `v` by the generator rows; the residue is zero iff `v` belongs
    /// to the code.
    pub fn contains_vector(&self, v: &BinaryVector) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: v.len(),
            });
        }
        let mut w = v.clone();
        for (r, &p) in self.pivots.iter().enumerate() {
            if w.get(p) {
                w.xor_assign(self.gen.row(r));
            }
        }
        Ok(w.is_zero())
    }

    /// True iff `other` is a subcode of `self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        for row in other.gen.rows() {
            if !self.contains_vector(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First generator row of `other` outside `self`, if any.
    pub fn first_row_outside(&self, other: &Self) -> Result<Option<BinaryVector>> {
        self.check_len(other)?;
        for row in other.gen.rows() {
            if !self.contains_vector(row)? {
                return Ok(Some(row.clone()));
            }
        }
        Ok(None)
    }

    /// Orthogonal complement under the Euclidean inner product.
    pub fn dual(&self) -> Self {
        Self::from_rref(self.gen.kernel())
    }

    /// Span of the union.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let mut rows = self.gen.rows().to_vec();
        rows.extend_from_slice(other.gen.rows());
        Self::from_rows(self.n, rows)
    }

    /// Intersection, computed through the duals.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// Schur product: span of all coordinate-wise products of generator rows.
    pub fn schur(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let symmetric = self == other;
        let mut products: HashSet<BinaryVector> = HashSet::new();
        for (i, a) in self.gen.rows().iter().enumerate() {
            let start = if symmetric { i } else { 0 };
            for b in &other.gen.rows()[start..] {
                let p = a.and(b);
                if !p.is_zero() {
                    products.insert(p);
                }
            }
        }
        Self::from_rows(self.n, products.into_iter().collect())
    }

    /// t-fold Schur power, with an early exit once the chain stabilizes.
    pub fn schur_power(&self, t: usize) -> Result<Self> {
        if t < 1 {
            return Err(Error::Parameter("Schur power needs t >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..t {
            let next = acc.schur(self)?;
            if next == acc {
                break;
            }
            acc = next;
        }
        Ok(acc)
    }

    fn normalize_coords(&self, coords: &[usize]) -> Result<Vec<usize>> {
        let mut s = coords.to_vec();
        s.sort_unstable();
        s.dedup();
        if let Some(&bad) = s.iter().find(|&&i| i >= self.n) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: self.n,
            });
        }
        if s.len() == self.n {
            return Err(Error::Parameter(
                "cannot remove every coordinate of a code".into(),
            ));
        }
        Ok(s)
    }

    /// Keep codewords that vanish on `coords`, then delete those coordinates.
    pub fn shorten(&self, coords: &[usize]) -> Result<Self> {
        let s = self.normalize_coords(coords)?;
        if s.is_empty() {
            return Ok(self.clone());
        }
        // coefficient vectors x with x * G restricted to the dropped columns = 0
        let restricted: Vec<BinaryVector> = self
            .gen
            .rows()
            .iter()
            .map(|r| BinaryVector::from_bits(s.iter().map(|&i| r.get(i))))
            .collect();
        let restr = BinaryMatrix::new(s.len(), restricted)?;
        let coeffs = restr.transpose().kernel();
        let rows = coeffs
            .rows()
            .iter()
            .map(|x| self.gen.combine(x).delete_coords(&s))
            .collect();
        Self::from_rows(self.n - s.len(), rows)
    }

    /// Delete the coordinates outright.
    pub fn puncture(&self, coords: &[usize]) -> Result<Self> {
        let s = self.normalize_coords(coords)?;
        if s.is_empty() {
            return Ok(self.clone());
        }
        let rows = self
            .gen
            .rows()
            .iter()
            .map(|r| r.delete_coords(&s))
            .collect();
        Self::from_rows(self.n - s.len(), rows)
    }

    /// True iff every codeword has even Hamming weight. Over F2 the weight of
    /// a sum has the parity of the sum of weights, so generator rows decide.
    pub fn is_even(&self) -> bool {
        self.gen.rows().iter().all(|r| r.weight() % 2 == 0)
    }

    /// True iff the code is contained in its dual, i.e. G * G^T = 0.
    pub fn is_self_orthogonal(&self) -> bool {
        let rows = self.gen.rows();
        for i in 0..rows.len() {
            for j in i..rows.len() {
                if rows[i].dot(&rows[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Gray-code enumeration of the nonzero codewords, one row XOR per step.
    /// Refuses dimensions above `cap_log2`.
    pub fn nonzero_codewords(&self, cap_log2: usize) -> Result<CodewordIter<'_>> {
        if self.dim() > cap_log2 {
            return Err(Error::CapacityExceeded {
                dim: self.dim(),
                cap: cap_log2,
            });
        }
        Ok(CodewordIter {
            rows: self.gen.rows(),
            current: BinaryVector::zeros(self.n),
            index: 0,
            count: 1u64 << self.dim(),
        })
    }

    pub fn min_weight(&self, opts: &MinWeightOptions) -> Result<MinWeightOutcome> {
        self.min_weight_excluding(None, opts)
    }

    /// Minimum weight over the codewords of `self` that lie outside
    /// `exclude`. Exhaustive (Gray-code) when the dimension is at most
    /// `opts.exact_threshold`; otherwise a seeded information-set search
    /// bounded by `opts.budget` iterations.
    pub fn min_weight_excluding(
        &self,
        exclude: Option<&BinaryCode>,
        opts: &MinWeightOptions,
    ) -> Result<MinWeightOutcome> {
        if self.is_zero_code() {
            return Err(Error::ZeroCode);
        }
        if let Some(e) = exclude {
            self.check_len(e)?;
        }
        if self.dim() <= opts.exact_threshold.min(62) {
            return self.min_weight_exhaustive(exclude, opts);
        }
        self.min_weight_search(exclude, opts)
    }

    fn min_weight_exhaustive(
        &self,
        exclude: Option<&BinaryCode>,
        opts: &MinWeightOptions,
    ) -> Result<MinWeightOutcome> {
        let k = self.dim();
        let mut best: Option<(usize, BinaryVector)> = None;
        let mut cur = BinaryVector::zeros(self.n);
        for i in 1u64..(1u64 << k) {
            let j = i.trailing_zeros() as usize;
            cur.xor_assign(self.gen.row(j));
            let w = cur.weight();
            if best.as_ref().is_none_or(|(b, _)| w < *b) {
                let valid = match exclude {
                    Some(e) => !e.contains_vector(&cur)?,
                    None => true,
                };
                if valid {
                    best = Some((w, cur.clone()));
                }
            }
        }
        Ok(match best {
            Some((w, witness)) => {
                if w < opts.lower_bound {
                    return Err(Error::Inconsistency(format!(
                        "exhaustive minimum {w} beats the supplied lower bound {}",
                        opts.lower_bound
                    )));
                }
                MinWeightOutcome {
                    lower: w,
                    upper: Some(w),
                    exact: true,
                    witness: Some(witness),
                }
            }
            None => MinWeightOutcome {
                lower: opts.lower_bound,
                upper: None,
                exact: true,
                witness: None,
            },
        })
    }

    fn min_weight_search(
        &self,
        exclude: Option<&BinaryCode>,
        opts: &MinWeightOptions,
    ) -> Result<MinWeightOutcome> {
        let n = self.n;
        let k = self.dim();
        let dual = self.dual();
        let r = dual.dim();
        debug_assert_eq!(r, n - k);

        if r == 0 {
            // full space: the cheapest words are the unit vectors
            for j in 0..n {
                let e = BinaryVector::unit(n, j);
                let valid = match exclude {
                    Some(ex) => !ex.contains_vector(&e)?,
                    None => true,
                };
                if valid {
                    return Ok(MinWeightOutcome {
                        lower: opts.lower_bound,
                        upper: Some(1),
                        exact: opts.lower_bound >= 1,
                        witness: Some(e),
                    });
                }
            }
        }

        let mut rng = ChaCha12Rng::seed_from_u64(opts.seed);
        let mut col_order: Vec<usize> = (0..n).collect();
        let mut best: Option<(usize, BinaryVector)> = None;

        for _ in 0..opts.budget {
            col_order.shuffle(&mut rng);
            let found = if r <= k {
                self.search_round_parity(&dual, &col_order, exclude, &best)?
            } else {
                self.search_round_generator(&col_order, exclude, &best)?
            };
            if let Some((w, witness)) = found {
                if w < opts.lower_bound {
                    return Err(Error::Inconsistency(format!(
                        "search found weight {w} below the supplied lower bound {}",
                        opts.lower_bound
                    )));
                }
                let done = w == opts.lower_bound;
                best = Some((w, witness));
                if done {
                    break;
                }
            }
        }

        Ok(match best {
            Some((w, witness)) => MinWeightOutcome {
                lower: opts.lower_bound,
                upper: Some(w),
                exact: w == opts.lower_bound,
                witness: Some(witness),
            },
            None => MinWeightOutcome {
                lower: opts.lower_bound,
                upper: None,
                exact: false,
                witness: None,
            },
        })
    }

    /// One information-set round on the parity-check side: systematize the
    /// dual generator on a random column set, then scan the codewords whose
    /// support meets the non-pivot columns in at most two places. Syndromes
    /// are r-bit, so the pair scan is a word-XOR plus popcount.
    fn search_round_parity(
        &self,
        dual: &BinaryCode,
        col_order: &[usize],
        exclude: Option<&BinaryCode>,
        best: &Option<(usize, BinaryVector)>,
    ) -> Result<Option<(usize, BinaryVector)>> {
        let n = self.n;
        let r = dual.dim();
        let words = r.div_ceil(64).max(1);
        let mut rows = dual.generator().rows().to_vec();
        let pivots = systematize(&mut rows, col_order);
        debug_assert_eq!(pivots.len(), r);

        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let non_pivots: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();

        // syndrome of column j: the bits of that column across the r rows
        let mut syndromes = vec![0u64; non_pivots.len() * words];
        for (jj, &j) in non_pivots.iter().enumerate() {
            for (i, row) in rows.iter().enumerate() {
                if row.get(j) {
                    syndromes[jj * words + i / 64] |= 1u64 << (i % 64);
                }
            }
        }
        let weight_of = |buf: &[u64]| -> usize { buf.iter().map(|w| w.count_ones() as usize).sum() };

        let mut round_best: Option<(usize, BinaryVector)> = None;
        let mut current_cap = best.as_ref().map(|(w, _)| *w);

        let consider = |support_outside: &[usize],
                            syndrome: &[u64],
                            round_best: &mut Option<(usize, BinaryVector)>,
                            current_cap: &mut Option<usize>|
         -> Result<()> {
            let w = support_outside.len() + weight_of(syndrome);
            if current_cap.is_some_and(|c| w >= c) {
                return Ok(());
            }
            let mut v = BinaryVector::zeros(n);
            for &j in support_outside {
                v.set(j, true);
            }
            for (i, &p) in pivots.iter().enumerate() {
                if (syndrome[i / 64] >> (i % 64)) & 1 == 1 {
                    v.set(p, true);
                }
            }
            debug_assert_eq!(v.weight(), w);
            let valid = match exclude {
                Some(e) => !e.contains_vector(&v)?,
                None => true,
            };
            if valid {
                *current_cap = Some(w);
                *round_best = Some((w, v));
            }
            Ok(())
        };

        let mut buf = vec![0u64; words];
        for (jj, &j) in non_pivots.iter().enumerate() {
            consider(
                &[j],
                &syndromes[jj * words..(jj + 1) * words],
                &mut round_best,
                &mut current_cap,
            )?;
        }
        for a in 0..non_pivots.len() {
            let sa = &syndromes[a * words..(a + 1) * words];
            for b in (a + 1)..non_pivots.len() {
                let sb = &syndromes[b * words..(b + 1) * words];
                let mut w = 2usize;
                for t in 0..words {
                    buf[t] = sa[t] ^ sb[t];
                    w += buf[t].count_ones() as usize;
                }
                if current_cap.is_some_and(|c| w >= c) {
                    continue;
                }
                consider(
                    &[non_pivots[a], non_pivots[b]],
                    &buf.clone(),
                    &mut round_best,
                    &mut current_cap,
                )?;
            }
        }
        Ok(round_best)
    }

    /// One information-set round on the generator side: systematize the
    /// generator on a random column set and scan single rows and row pairs.
    fn search_round_generator(
        &self,
        col_order: &[usize],
        exclude: Option<&BinaryCode>,
        best: &Option<(usize, BinaryVector)>,
    ) -> Result<Option<(usize, BinaryVector)>> {
        let mut rows = self.gen.rows().to_vec();
        systematize(&mut rows, col_order);
        let mut round_best: Option<(usize, BinaryVector)> = None;
        let mut current_cap = best.as_ref().map(|(w, _)| *w);

        let consider = |v: BinaryVector,
                            round_best: &mut Option<(usize, BinaryVector)>,
                            current_cap: &mut Option<usize>|
         -> Result<()> {
            let w = v.weight();
            if w == 0 || current_cap.is_some_and(|c| w >= c) {
                return Ok(());
            }
            let valid = match exclude {
                Some(e) => !e.contains_vector(&v)?,
                None => true,
            };
            if valid {
                *current_cap = Some(w);
                *round_best = Some((w, v));
            }
            Ok(())
        };

        for row in &rows {
            consider(row.clone(), &mut round_best, &mut current_cap)?;
        }
        for i in 0..rows.len() {
            for j in (i + 1)..rows.len() {
                let mut v = rows[i].clone();
                v.xor_assign(&rows[j]);
                consider(v, &mut round_best, &mut current_cap)?;
            }
        }
        Ok(round_best)
    }
}

impl std::fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BinaryCode[{}, {}] {:?}", self.n, self.dim(), self.gen)
    }
}

/// Gray-code walk over the nonzero codewords of a code.
pub struct CodewordIter<'a> {
    rows: &'a [BinaryVector],
    current: BinaryVector,
    index: u64,
    count: u64,
}

impl Iterator for CodewordIter<'_> {
    type Item = BinaryVector;

    fn next(&mut self) -> Option<BinaryVector> {
        self.index += 1;
        if self.index >= self.count {
            return None;
        }
        let j = self.index.trailing_zeros() as usize;
        self.current.xor_assign(&self.rows[j]);
        Some(self.current.clone())
    }
}

/// Controls for `min_weight`: the exhaustive/search crossover, the search
/// budget in information-set rounds, the RNG seed, and a certified lower
/// bound the search may stop at.
#[derive(Clone, Debug)]
pub struct MinWeightOptions {
    pub exact_threshold: usize,
    pub budget: u64,
    pub seed: u64,
    pub lower_bound: usize,
}

pub const DEFAULT_EXACT_THRESHOLD: usize = 26;
pub const DEFAULT_BUDGET: u64 = 20_000;
/// Fixed default seed so reports are reproducible run to run.
pub const DEFAULT_SEED: u64 = 0xC557;

impl Default for MinWeightOptions {
    fn default() -> Self {
        Self {
            exact_threshold: DEFAULT_EXACT_THRESHOLD,
            budget: DEFAULT_BUDGET,
            seed: DEFAULT_SEED,
            lower_bound: 1,
        }
    }
}

impl MinWeightOptions {
    pub fn with_lower_bound(mut self, lower: usize) -> Self {
        self.lower_bound = lower;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Result of a minimum-weight computation. `exact` means `upper` is the true
/// minimum (exhaustive enumeration, or a witness meeting the lower bound).
#[derive(Clone, Debug)]
pub struct MinWeightOutcome {
    pub lower: usize,
    pub upper: Option<usize>,
    pub exact: bool,
    pub witness: Option<BinaryVector>,
}

/// Eliminate in place choosing pivot columns in the given order; returns the
/// pivot column of each row.
fn systematize(rows: &mut Vec<BinaryVector>, col_order: &[usize]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for &c in col_order {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(r, pr);
        let pivot_row = rows[r].clone();
        for (j, row) in rows.iter_mut().enumerate() {
            if j != r && row.get(c) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}
