//! Bit-packed vectors and matrices over F2, with reduced row echelon form,
//! kernel bases, and row-space membership. Everything else in the crate sits
//! on top of these three operations.

use crate::error::{Error, Result};
use std::fmt;

const WORD_BITS: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A fixed-length vector over F2, packed into machine words.
///
/// Bits past `len` are kept zero so that word-level operations (XOR, AND,
/// popcount) never need per-bit masking.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryVector {
    len: usize,
    words: Vec<u64>,
}

impl BinaryVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// The all-ones vector.
    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![!0u64; words_for(len)],
        };
        v.mask_tail();
        v
    }

    /// The standard basis vector with a single one at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.iter().enumerate() {
            if *b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        debug_assert!(index < self.len);
        (self.words[index / WORD_BITS] >> (index % WORD_BITS)) & 1 != 0
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        let mask = 1u64 << (index % WORD_BITS);
        if value {
            self.words[index / WORD_BITS] |= mask;
        } else {
            self.words[index / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Coordinate-wise product, i.e. the Schur product of two vectors.
    pub fn and(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        Self {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parity of the coordinate-wise product: the Euclidean inner product.
    pub fn dot(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_set_bit(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    /// Positions of the zero coordinates.
    pub fn zero_positions(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| !self.get(i)).collect()
    }

    /// Copy of the vector with the coordinates in `drop` removed. `drop` must
    /// be sorted and deduplicated.
    pub(crate) fn delete_coords(&self, drop: &[usize]) -> Self {
        let mut out = Self::zeros(self.len - drop.len());
        let mut d = 0;
        let mut j = 0;
        for i in 0..self.len {
            if d < drop.len() && drop[d] == i {
                d += 1;
                continue;
            }
            if self.get(i) {
                out.set(j, true);
            }
            j += 1;
        }
        out
    }

    fn mask_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryVector({self})")
    }
}

/// A list of equal-length rows over F2. The column count is explicit so that
/// matrices with zero rows still carry their width.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    n_cols: usize,
    rows: Vec<BinaryVector>,
}

impl BinaryMatrix {
    pub fn new(n_cols: usize, rows: Vec<BinaryVector>) -> Result<Self> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n_cols {
                return Err(Error::RaggedRows {
                    row: i,
                    expected: n_cols,
                    got: r.len(),
                });
            }
        }
        Ok(Self { n_cols, rows })
    }

    pub fn empty(n_cols: usize) -> Self {
        Self {
            n_cols,
            rows: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n_cols: n,
            rows: (0..n).map(|i| BinaryVector::unit(n, i)).collect(),
        }
    }

    /// Build from 0/1 iterables; handy in tests.
    pub fn from_bit_rows<R, Rows>(n_cols: usize, rows: Rows) -> Result<Self>
    where
        R: IntoIterator<Item = u8>,
        Rows: IntoIterator<Item = R>,
    {
        let rows: Vec<BinaryVector> = rows
            .into_iter()
            .map(|r| BinaryVector::from_bits(r.into_iter().map(|b| b != 0)))
            .collect();
        Self::new(n_cols, rows)
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> &BinaryVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BinaryVector] {
        &self.rows
    }

    pub fn push_row(&mut self, row: BinaryVector) -> Result<()> {
        if row.len() != self.n_cols {
            return Err(Error::RaggedRows {
                row: self.rows.len(),
                expected: self.n_cols,
                got: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![BinaryVector::zeros(self.rows.len()); self.n_cols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, out) in rows.iter_mut().enumerate() {
                if r.get(j) {
                    out.set(i, true);
                }
            }
        }
        Self {
            n_cols: self.rows.len(),
            rows,
        }
    }

    /// XOR of the rows selected by `coeffs` (one bit per row).
    pub fn combine(&self, coeffs: &BinaryVector) -> BinaryVector {
        debug_assert_eq!(coeffs.len(), self.rows.len());
        let mut out = BinaryVector::zeros(self.n_cols);
        for (i, r) in self.rows.iter().enumerate() {
            if coeffs.get(i) {
                out.xor_assign(r);
            }
        }
        out
    }

    /// Reduced row echelon form. Zero rows are dropped, so the result has
    /// exactly `rank` rows and strictly increasing pivot columns.
    pub fn rref(&self) -> RrefForm {
        let mut rows = self.rows.clone();
        let pivots = rref_in_place(&mut rows, self.n_cols);
        RrefForm {
            matrix: Self {
                n_cols: self.n_cols,
                rows,
            },
            pivots,
        }
    }

    /// Basis (in RREF) of the right kernel `{ v : M v = 0 }`.
    pub fn kernel(&self) -> Self {
        let reduced = self.rref();
        let n = self.n_cols;
        let pivots = &reduced.pivots;
        let mut is_pivot = vec![false; n];
        for &p in pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::with_capacity(n - pivots.len());
        for (f, _) in is_pivot.iter().enumerate().filter(|(_, p)| !**p) {
            let mut v = BinaryVector::zeros(n);
            v.set(f, true);
            for (r, &p) in pivots.iter().enumerate() {
                if reduced.matrix.rows[r].get(f) {
                    v.set(p, true);
                }
            }
            rows.push(v);
        }
        let mut kern = Self { n_cols: n, rows };
        let piv = rref_in_place(&mut kern.rows, n);
        debug_assert_eq!(piv.len(), kern.rows.len());
        kern
    }

    /// True iff `v` is an F2-combination of the rows.
    pub fn in_rowspace(&self, v: &BinaryVector) -> Result<bool> {
        if v.len() != self.n_cols {
            return Err(Error::LengthMismatch {
                left: self.n_cols,
                right: v.len(),
            });
        }
        Ok(self.rref().contains(v))
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{} [", self.rows.len(), self.n_cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Outcome of `BinaryMatrix::rref`: the canonical matrix plus its pivots.
#[derive(Clone, Debug)]
pub struct RrefForm {
    pub matrix: BinaryMatrix,
    pub pivots: Vec<usize>,
}

impl RrefForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `v` against the echelon rows in place; the residue is zero iff
    /// `v` lies in the row space.
    pub fn reduce(&self, v: &mut BinaryVector) {
        for (r, &p) in self.pivots.iter().enumerate() {
            if v.get(p) {
                v.xor_assign(&self.matrix.rows[r]);
            }
        }
    }

    pub fn contains(&self, v: &BinaryVector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }
}

/// In-place RREF over F2; returns the pivot columns and truncates zero rows.
fn rref_in_place(rows: &mut Vec<BinaryVector>, n_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n_cols {
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
