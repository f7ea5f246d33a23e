//! Subspace-level arithmetic on binary linear codes.
//!
//! A [`LinearCode`] is stored canonically as a reduced-row-echelon basis,
//! so structural equality coincides with subspace equality. All set-like
//! operations (dual, sum, intersection, hulls, Schur products) return
//! canonical codes.

use crate::error::Error;
use crate::gf2::{BitMatrix, BitVector, Rref};
use std::cmp::Ordering;
use std::fmt;

/// Default cap on the number of codewords `min_distance` will enumerate.
pub const DEFAULT_DISTANCE_BUDGET: u64 = 1 << 28;

/// A binary linear code: a subspace of F2^n in canonical reduced-basis
/// form. Dimension 0 encodes the zero code.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    length: usize,
    basis: BitMatrix,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// The canonical code spanned by the rows of `generators`; dependent
    /// and duplicate rows are allowed and collapse in the echelon form.
    pub fn from_generators(generators: &BitMatrix) -> Self {
        let Rref { matrix, pivots } = generators.rref();
        LinearCode {
            length: generators.col_count(),
            basis: matrix,
            pivots,
        }
    }

    /// The zero code of the given length.
    pub fn zero(length: usize) -> Self {
        LinearCode {
            length,
            basis: BitMatrix::empty(length),
            pivots: Vec::new(),
        }
    }

    /// The full space F2^n.
    pub fn full(length: usize) -> Self {
        LinearCode {
            length,
            basis: BitMatrix::identity(length),
            pivots: (0..length).collect(),
        }
    }

    /// Convenience constructor from bit strings, mostly for tests.
    pub fn from_bit_strings(rows: &[&str]) -> Self {
        Self::from_generators(&BitMatrix::from_bit_strings(rows))
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.basis.row_count()
    }

    pub fn is_zero_code(&self) -> bool {
        self.dimension() == 0
    }

    /// The canonical reduced-echelon basis.
    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    /// Reduces `v` against the basis, returning the canonical
    /// representative of the coset `v + C`. The representative is the
    /// lexicographically least element of the coset.
    ///
    /// # Panics
    ///
    /// Panics if `v.len()` differs from the code length.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.length, "vector length differs from code length");
        let mut x = v.clone();
        for (i, &p) in self.pivots.iter().enumerate() {
            if x.get(p) {
                x.xor_assign(self.basis.row(i));
            }
        }
        x
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_code(&self, other: &LinearCode) -> bool {
        other.basis.rows().all(|row| self.contains(row))
    }

    /// The dual code `C⊥`; `dim = n − k`, and `dual` is an involution.
    pub fn dual(&self) -> LinearCode {
        LinearCode::from_generators(&self.basis.kernel())
    }

    /// The sum `C + D` of two codes of the same length.
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn sum(&self, other: &LinearCode) -> LinearCode {
        assert_eq!(self.length, other.length, "sum on codes of different length");
        LinearCode::from_generators(&BitMatrix::stack(&self.basis, &other.basis))
    }

    /// The intersection `C ∩ D`, computed by double dualization.
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn intersect(&self, other: &LinearCode) -> LinearCode {
        assert_eq!(
            self.length, other.length,
            "intersection on codes of different length"
        );
        self.dual().sum(&other.dual()).dual()
    }

    /// The relative hull `C ∩ D⊥` of `self` with respect to `other`.
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn relative_hull(&self, other: &LinearCode) -> LinearCode {
        self.intersect(&other.dual())
    }

    /// The hull `C ∩ C⊥`.
    pub fn hull(&self) -> LinearCode {
        self.relative_hull(self)
    }

    /// The Schur product `C ⋆ D`: the span of all componentwise products
    /// of codewords. By bilinearity it suffices to span the pairwise
    /// products of basis rows.
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn schur_product(&self, other: &LinearCode) -> LinearCode {
        assert_eq!(
            self.length, other.length,
            "schur product on codes of different length"
        );
        let mut products = BitMatrix::empty(self.length);
        for a in self.basis.rows() {
            for b in other.basis.rows() {
                products.push_row(a.schur(b));
            }
        }
        LinearCode::from_generators(&products)
    }

    /// The Schur square `C⋆2`. For binary codes `C ⊆ C⋆2` since each
    /// basis row is its own square.
    pub fn schur_square(&self) -> LinearCode {
        let mut products = BitMatrix::empty(self.length);
        let rows: Vec<&BitVector> = self.basis.rows().collect();
        for i in 0..rows.len() {
            for j in i..rows.len() {
                products.push_row(rows[i].schur(rows[j]));
            }
        }
        LinearCode::from_generators(&products)
    }

    /// The iterated Schur power `C⋆i` for `i ≥ 1`.
    ///
    /// # Panics
    ///
    /// Panics if `exponent == 0`.
    pub fn schur_power(&self, exponent: usize) -> LinearCode {
        assert!(exponent >= 1, "schur power requires a positive exponent");
        let mut acc = self.clone();
        for _ in 1..exponent {
            acc = acc.schur_product(self);
        }
        acc
    }

    /// Exact minimum Hamming weight of a nonzero codeword, by Gray-code
    /// traversal of all `2^k − 1` nonzero codewords.
    ///
    /// Fails with [`Error::ZeroCode`] on the zero code and with
    /// [`Error::DistanceBudget`] when `2^k` exceeds `budget`.
    pub fn min_distance(&self, budget: u64) -> Result<usize, Error> {
        let k = self.dimension();
        if k == 0 {
            return Err(Error::ZeroCode);
        }
        if k >= 64 || (1u64 << k) > budget {
            return Err(Error::DistanceBudget { dimension: k, budget });
        }
        let mut current = BitVector::zeros(self.length);
        let mut best = usize::MAX;
        for i in 1..(1u64 << k) {
            // consecutive Gray codes differ in exactly the bit that is the
            // number of trailing zeros of i
            let j = i.trailing_zeros() as usize;
            current.xor_assign(self.basis.row(j));
            best = best.min(current.weight());
        }
        Ok(best)
    }

    /// True iff every codeword has even weight; by linearity of the weight
    /// parity it suffices to test the basis rows.
    pub fn is_even(&self) -> bool {
        self.basis.rows().all(|row| !row.parity())
    }

    /// True iff the code contains a vector of odd weight.
    pub fn has_odd_vectors(&self) -> bool {
        !self.is_even()
    }

    /// A basis of a complement of `inner` in `self`: rows spanning a
    /// subspace `B` with `B ∩ inner = 0` and `B + inner = self`, each row
    /// reduced modulo `inner`.
    ///
    /// # Panics
    ///
    /// Panics in debug builds if `inner` is not contained in `self`.
    pub fn complement_basis(&self, inner: &LinearCode) -> BitMatrix {
        debug_assert!(self.contains_code(inner));
        let mut reduced = BitMatrix::empty(self.length);
        for row in self.basis.rows() {
            let r = inner.reduce(row);
            if !r.is_zero() {
                reduced.push_row(r);
            }
        }
        reduced.rref().matrix
    }
}

impl PartialOrd for LinearCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LinearCode {
    /// Canonical order: by length, then dimension, then basis rows
    /// lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.dimension().cmp(&other.dimension()))
            .then_with(|| self.basis.cmp(&other.basis))
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] code", self.length, self.dimension())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(rows: &[&str]) -> LinearCode {
        LinearCode::from_bit_strings(rows)
    }

    fn paper_code() -> LinearCode {
        code(&["11000", "01100", "00011"])
    }

    #[test]
    fn from_generators_examples() {
        assert_eq!(paper_code().dimension(), 3);
        assert_eq!(paper_code().length(), 5);
        assert_eq!(LinearCode::zero(4).dimension(), 0);
        assert_eq!(code(&["11", "11"]).dimension(), 1);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(paper_code().dual(), code(&["11100", "00011"]));
        assert_eq!(LinearCode::full(3).dual(), LinearCode::zero(3));
        let c = code(&["1110000"]);
        let d = c.dual();
        assert_eq!(d.dimension(), 6);
        for row in d.basis().rows() {
            assert!(!row.dot(c.basis().row(0)));
        }
    }

    #[test]
    fn dual_is_involution() {
        for c in [paper_code(), code(&["111", "110"]), LinearCode::zero(4)] {
            assert_eq!(c.dual().dual(), c);
        }
    }

    #[test]
    fn sum_and_intersect_examples() {
        let c = paper_code();
        assert_eq!(c.sum(&c.dual()), c.schur_square());
        assert_eq!(c.intersect(&c), c);
        assert_eq!(c.intersect(&LinearCode::zero(5)), LinearCode::zero(5));
        let d = code(&["111", "110"]);
        assert_eq!(
            c.sum(&c.dual()).dimension() + c.intersect(&c.dual()).dimension(),
            c.dimension() + c.dual().dimension()
        );
        assert_eq!(
            d.sum(&d.dual()).dimension() + d.intersect(&d.dual()).dimension(),
            3
        );
    }

    #[test]
    fn hull_examples() {
        assert_eq!(paper_code().hull(), code(&["00011"]));
        assert_eq!(code(&["111", "110"]).hull(), code(&["110"]));
        assert_eq!(LinearCode::full(4).hull(), LinearCode::zero(4));
    }

    #[test]
    fn relative_hull_of_self_is_hull() {
        let c = paper_code();
        assert_eq!(c.relative_hull(&c), c.hull());
    }

    #[test]
    fn schur_square_examples() {
        assert_eq!(
            paper_code().schur_square(),
            code(&["10000", "01000", "00100", "00011"])
        );
        let c = code(&["111", "110"]);
        assert_eq!(c.schur_square(), c);
        assert_eq!(LinearCode::zero(4).schur_square(), LinearCode::zero(4));
    }

    #[test]
    fn schur_power_iterates() {
        let c = paper_code();
        assert_eq!(c.schur_power(1), c);
        assert_eq!(c.schur_power(2), c.schur_square());
        assert_eq!(c.schur_power(3), c.schur_square().schur_product(&c));
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(paper_code().min_distance(DEFAULT_DISTANCE_BUDGET), Ok(2));
        assert_eq!(code(&["111111"]).min_distance(1 << 10), Ok(6));
        assert_eq!(LinearCode::full(4).min_distance(1 << 10), Ok(1));
        assert_eq!(LinearCode::zero(4).min_distance(1 << 10), Err(Error::ZeroCode));
        assert_eq!(
            LinearCode::full(8).min_distance(16),
            Err(Error::DistanceBudget { dimension: 8, budget: 16 })
        );
    }

    #[test]
    fn parity_examples() {
        assert!(paper_code().is_even());
        assert!(!code(&["111"]).is_even());
        assert!(LinearCode::zero(3).is_even());
        assert!(code(&["111"]).has_odd_vectors());
    }

    #[test]
    fn reduce_gives_lex_least_coset_representative() {
        let c = code(&["111", "110"]);
        // coset of 011: {011, 100, 101, 010}; least is 010
        let r = c.reduce(&"011".parse().unwrap());
        assert_eq!(r, "010".parse().unwrap());
        assert!(!c.contains(&"011".parse().unwrap()) || r.is_zero());
    }

    #[test]
    fn complement_basis_splits_dimension() {
        let c = paper_code();
        let h = c.hull();
        let comp = c.complement_basis(&h);
        assert_eq!(comp.row_count(), c.dimension() - h.dimension());
        for row in comp.rows() {
            assert!(c.contains(row));
            assert!(!h.contains(row) || row.is_zero());
        }
    }
}
