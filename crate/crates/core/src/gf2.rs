//! Dense exact linear algebra over F2 on bit-packed vectors and matrices.
//!
//! Vectors pack their coordinates into 64-bit words so that the hot loops
//! (weight, dot, componentwise product, row elimination) run word-parallel.
//! All values are immutable in practice: operations return new values and
//! never mutate shared state, so everything here is safe to share across
//! threads.
//!
//! The canonical order on vectors, used everywhere a deterministic choice
//! is needed, is lexicographic on the bit string read left to right
//! (coordinate 0 is the most significant).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitXor, Mul};
use std::str::FromStr;

const WORD_BITS: usize = 64;

/// A length-`n` vector over F2, bit-packed into 64-bit words.
///
/// Coordinate `i` lives in word `i / 64` at bit `i % 64`. Unused high bits
/// of the last word are always zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    /// The all-zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    /// The all-ones vector of the given length.
    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for w in &mut v.words {
            *w = u64::MAX;
        }
        v.mask_tail();
        v
    }

    /// The standard basis vector with a single 1 at `index`.
    ///
    /// # Panics
    ///
    /// Panics if `index >= len`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    /// Builds a vector from an iterator of coordinates.
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// # Panics
    ///
    /// Panics if `index >= len`.
    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        self.words[index / WORD_BITS] >> (index % WORD_BITS) & 1 == 1
    }

    /// # Panics
    ///
    /// Panics if `index >= len`.
    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        let mask = 1u64 << (index % WORD_BITS);
        if value {
            self.words[index / WORD_BITS] |= mask;
        } else {
            self.words[index / WORD_BITS] &= !mask;
        }
    }

    /// Hamming weight: the number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Weight modulo 2; equals `dot(self, self)`.
    pub fn parity(&self) -> bool {
        self.weight() % 2 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Dot product over F2: the parity of the common support.
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot on vectors of different length");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    /// Componentwise (Schur) product.
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn schur(&self, other: &Self) -> Self {
        self & other
    }

    /// Adds `other` into `self` (XOR in place).
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor on vectors of different length");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Iterates over the coordinates in order.
    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// The indices of the nonzero coordinates, in increasing order.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
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

impl BitXor for &BitVector {
    type Output = BitVector;

    fn bitxor(self, rhs: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl BitAnd for &BitVector {
    type Output = BitVector;

    fn bitand(self, rhs: &BitVector) -> BitVector {
        assert_eq!(self.len, rhs.len, "schur on vectors of different length");
        let words = self.words.iter().zip(&rhs.words).map(|(a, b)| a & b).collect();
        BitVector { len: self.len, words }
    }
}

impl PartialOrd for BitVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BitVector {
    /// Lexicographic on the bit string, coordinate 0 most significant.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                // reverse_bits makes coordinate order match integer order
                let ord = a.reverse_bits().cmp(&b.reverse_bits());
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter_bits() {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Error parsing a bit string.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid symbol {symbol:?} at position {position}; expected '0' or '1'")]
pub struct BitParseError {
    pub position: usize,
    pub symbol: char,
}

impl FromStr for BitVector {
    type Err = BitParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = Vec::with_capacity(s.len());
        for (position, symbol) in s.chars().enumerate() {
            match symbol {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(BitParseError { position, symbol }),
            }
        }
        Ok(BitVector::from_bits(bits))
    }
}

/// The result of reduced row echelon form: the reduced matrix with zero
/// rows dropped, plus the strictly increasing pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: BitMatrix,
    pub pivots: Vec<usize>,
}

/// An ordered list of equal-length rows over F2.
///
/// Row order is significant: matrix-level predicates quantify over rows by
/// index, and duplicate rows are permitted at this level.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    /// A matrix with zero rows (generates the zero code).
    pub fn empty(cols: usize) -> Self {
        BitMatrix { cols, rows: Vec::new() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            cols,
            rows: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        BitMatrix {
            cols: n,
            rows: (0..n).map(|i| BitVector::unit(n, i)).collect(),
        }
    }

    /// # Panics
    ///
    /// Panics if any row's length differs from `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Self {
        for row in &rows {
            assert_eq!(row.len(), cols, "row length differs from column count");
        }
        BitMatrix { cols, rows }
    }

    /// Convenience constructor from bit strings, mostly for tests.
    ///
    /// # Panics
    ///
    /// Panics on symbols other than '0'/'1' or on ragged rows.
    pub fn from_bit_strings(rows: &[&str]) -> Self {
        let parsed: Vec<BitVector> = rows
            .iter()
            .map(|s| s.parse().expect("invalid bit string"))
            .collect();
        let cols = parsed.first().map_or(0, BitVector::len);
        Self::from_rows(cols, parsed)
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    /// # Panics
    ///
    /// Panics if `index` is out of range.
    pub fn row(&self, index: usize) -> &BitVector {
        &self.rows[index]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &BitVector> {
        self.rows.iter()
    }

    /// # Panics
    ///
    /// Panics if the row's length differs from the column count.
    pub fn push_row(&mut self, row: BitVector) {
        assert_eq!(row.len(), self.cols, "row length differs from column count");
        self.rows.push(row);
    }

    /// Stacks `top` over `bottom`.
    ///
    /// # Panics
    ///
    /// Panics if the column counts differ.
    pub fn stack(top: &BitMatrix, bottom: &BitMatrix) -> BitMatrix {
        assert_eq!(top.cols, bottom.cols, "stack on different column counts");
        let mut rows = top.rows.clone();
        rows.extend(bottom.rows.iter().cloned());
        BitMatrix { cols: top.cols, rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    /// Reduced row echelon form with zero rows dropped.
    pub fn rref(&self) -> Rref {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        Rref {
            matrix: BitMatrix { cols: self.cols, rows },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().matrix.row_count()
    }

    /// A basis of the right null space `{x : M xᵗ = 0}`, one row per free
    /// column of the echelon form; `row_count = cols − rank`.
    pub fn kernel(&self) -> BitMatrix {
        let Rref { matrix, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVector::zeros(self.cols);
                v.set(free, true);
                for (i, &p) in pivots.iter().enumerate() {
                    if matrix.row(i).get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        BitMatrix { cols: self.cols, rows }
    }

    pub fn transposed(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            for j in 0..self.cols {
                if row.get(j) {
                    out.rows[j].set(i, true);
                }
            }
        }
        out
    }

    /// Decides membership of `v` in the row space by elimination against
    /// the echelon form.
    ///
    /// # Panics
    ///
    /// Panics if `v.len()` differs from the column count.
    pub fn rowspace_contains(&self, v: &BitVector) -> bool {
        assert_eq!(v.len(), self.cols, "vector length differs from column count");
        let Rref { matrix, pivots } = self.rref();
        let mut x = v.clone();
        for (i, &p) in pivots.iter().enumerate() {
            if x.get(p) {
                x.xor_assign(matrix.row(i));
            }
        }
        x.is_zero()
    }

    /// True iff the matrix is square with exactly one 1 per row and column.
    pub fn is_permutation(&self) -> bool {
        if self.rows.len() != self.cols {
            return false;
        }
        let mut seen = vec![false; self.cols];
        for row in &self.rows {
            if row.weight() != 1 {
                return false;
            }
            let col = row.support()[0];
            if seen[col] {
                return false;
            }
            seen[col] = true;
        }
        true
    }

    /// The submatrix with the given rows, in the given order.
    ///
    /// # Panics
    ///
    /// Panics if any index is out of range.
    pub fn select_rows(&self, indices: &[usize]) -> BitMatrix {
        BitMatrix {
            cols: self.cols,
            rows: indices.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }

    /// The contiguous block with rows in `rows` and columns in `cols`.
    ///
    /// # Panics
    ///
    /// Panics if a range end exceeds the matrix shape.
    pub fn block(
        &self,
        rows: std::ops::Range<usize>,
        cols: std::ops::Range<usize>,
    ) -> BitMatrix {
        assert!(rows.end <= self.rows.len() && cols.end <= self.cols);
        let width = cols.len();
        let out_rows = self.rows[rows]
            .iter()
            .map(|row| BitVector::from_bits(cols.clone().map(|c| row.get(c))))
            .collect();
        BitMatrix {
            cols: width,
            rows: out_rows,
        }
    }
}

impl Mul for &BitMatrix {
    type Output = BitMatrix;

    /// Matrix product over F2.
    ///
    /// # Panics
    ///
    /// Panics if the inner dimensions disagree.
    fn mul(self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(
            self.cols,
            rhs.row_count(),
            "product on incompatible shapes"
        );
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(rhs.cols);
                for j in 0..self.cols {
                    if row.get(j) {
                        acc.xor_assign(rhs.row(j));
                    }
                }
                acc
            })
            .collect();
        BitMatrix { cols: rhs.cols, rows }
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}
