//! Triorthogonality of matrices and codes.
//!
//! A binary matrix is triorthogonal when the Schur product of every pair
//! of distinct rows and of every triple of distinct rows has even weight.
//! A code is triorthogonal when some generator matrix is. The two notions
//! interact through the normal form: any triorthogonal generator splits
//! into odd-weight rows `G1` over even-weight rows `G0`, and the span of
//! `G0` is always the hull of the code, independent of the generator.

use crate::codes::LinearCode;
use crate::error::Error;
use crate::gf2::{BitMatrix, BitVector};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Default node budget for the backtracking search in
/// [`decide_triorthogonal`]. Ample for lengths up to 14 while bounding
/// runaway searches.
pub const DEFAULT_SEARCH_LIMIT: u64 = 10_000_000;

/// A certificate that a matrix fails the triorthogonality predicate.
/// Row indices are 0-based; re-evaluating the cited rows reproduces the
/// odd Schur-product weight or the duplication.
///
/// Duplicate rows are rejected outright: with `u = v` formally "distinct"
/// rows, the pair condition would degenerate to the parity of `u` itself,
/// so no verdict on such a matrix is meaningful.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "row_indices", rename_all = "kebab-case")]
pub enum ViolationWitness {
    DuplicateRow(usize, usize),
    OddPair(usize, usize),
    OddTriple(usize, usize, usize),
}

impl fmt::Display for ViolationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationWitness::DuplicateRow(i, j) => {
                write!(f, "rows {} and {} are identical", i + 1, j + 1)
            }
            ViolationWitness::OddPair(i, j) => {
                write!(f, "rows {} and {} have a Schur product of odd weight", i + 1, j + 1)
            }
            ViolationWitness::OddTriple(i, j, l) => write!(
                f,
                "rows {}, {} and {} have a Schur product of odd weight",
                i + 1,
                j + 1,
                l + 1
            ),
        }
    }
}

/// Checks the matrix-level triorthogonality predicate, returning the first
/// violation in a deterministic scan order: duplicates, then pairs, then
/// triples, each by increasing row indices.
pub fn check_triorthogonal(matrix: &BitMatrix) -> Result<(), ViolationWitness> {
    let rows: Vec<&BitVector> = matrix.rows().collect();
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            if rows[i] == rows[j] {
                return Err(ViolationWitness::DuplicateRow(i, j));
            }
        }
    }
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            if rows[i].schur(rows[j]).parity() {
                return Err(ViolationWitness::OddPair(i, j));
            }
        }
    }
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            let pair = rows[i].schur(rows[j]);
            for l in (j + 1)..rows.len() {
                if pair.schur(rows[l]).parity() {
                    return Err(ViolationWitness::OddTriple(i, j, l));
                }
            }
        }
    }
    Ok(())
}

/// Convenience wrapper around [`check_triorthogonal`].
pub fn is_triorthogonal(matrix: &BitMatrix) -> bool {
    check_triorthogonal(matrix).is_ok()
}

/// The Gram matrix `G·Gᵗ`. For a triorthogonal matrix in normal form this
/// is the block matrix `(I 0; 0 0)`.
pub fn gram(matrix: &BitMatrix) -> BitMatrix {
    let rows: Vec<&BitVector> = matrix.rows().collect();
    let out_rows = rows
        .iter()
        .map(|a| BitVector::from_bits(rows.iter().map(|b| a.dot(b))))
        .collect();
    BitMatrix::from_rows(rows.len(), out_rows)
}

/// A certified triorthogonal generator matrix in normal form: odd-weight
/// rows `G1` stacked over even-weight rows `G0`, where `Rowsp(G0)` equals
/// the hull of the generated code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriorthogonalForm {
    code: LinearCode,
    hull: LinearCode,
    g1: BitMatrix,
    g0: BitMatrix,
}

impl TriorthogonalForm {
    /// Certifies a triorthogonal generator matrix of full row rank and
    /// splits it into the normal form by a stable parity partition.
    ///
    /// Fails when the matrix is not triorthogonal (with a witness), when
    /// it is rank deficient, or when it generates the zero code. A failure
    /// of the hull identity `Rowsp(G0) = hull(C)` would contradict the
    /// normal-form theory and reports an internal error.
    pub fn normal_form(matrix: &BitMatrix) -> Result<Self, Error> {
        if matrix.row_count() == 0 {
            return Err(Error::ZeroCode);
        }
        if matrix.rank() != matrix.row_count() {
            return Err(Error::RankDeficient);
        }
        check_triorthogonal(matrix).map_err(Error::NotTriorthogonal)?;
        let n = matrix.col_count();
        let mut g1 = BitMatrix::empty(n);
        let mut g0 = BitMatrix::empty(n);
        for row in matrix.rows() {
            if row.parity() {
                g1.push_row(row.clone());
            } else {
                g0.push_row(row.clone());
            }
        }
        let code = LinearCode::from_generators(matrix);
        let hull = code.hull();
        if LinearCode::from_generators(&g0) != hull {
            return Err(Error::Internal(
                "even-row span of a triorthogonal matrix differs from the hull".into(),
            ));
        }
        Ok(TriorthogonalForm { code, hull, g1, g0 })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// The hull of the code; equals the span of `G0`.
    pub fn hull(&self) -> &LinearCode {
        &self.hull
    }

    /// The odd-weight rows.
    pub fn g1(&self) -> &BitMatrix {
        &self.g1
    }

    /// The even-weight rows.
    pub fn g0(&self) -> &BitMatrix {
        &self.g0
    }

    pub fn k1(&self) -> usize {
        self.g1.row_count()
    }

    pub fn k0(&self) -> usize {
        self.g0.row_count()
    }

    pub fn length(&self) -> usize {
        self.code.length()
    }

    /// The full generator `(G1; G0)`.
    pub fn stacked(&self) -> BitMatrix {
        BitMatrix::stack(&self.g1, &self.g0)
    }
}

/// Outcome of the code-level decision procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Triorthogonal(TriorthogonalForm),
    NotTriorthogonal,
}

impl Decision {
    pub fn form(&self) -> Option<&TriorthogonalForm> {
        match self {
            Decision::Triorthogonal(form) => Some(form),
            Decision::NotTriorthogonal => None,
        }
    }

    pub fn is_triorthogonal(&self) -> bool {
        matches!(self, Decision::Triorthogonal(_))
    }
}

/// Decides whether a code admits a triorthogonal generator matrix and
/// produces one in normal form when it does.
///
/// The search works in the quotient modulo the hull `H`:
///
/// 1. If `H ⊄ (C⋆2)⊥` the code cannot be triorthogonal (the even-row span
///    of any triorthogonal generator equals the hull and is orthogonal to
///    the Schur square), so the answer is immediate.
/// 2. Otherwise every pair or triple condition involving a hull element
///    holds automatically, and the conditions on odd rows are invariant
///    under adding hull elements. It therefore suffices to pick one
///    canonical representative per coset of `H` in `C`, keep the odd ones,
///    and search for `dim C − dim H` representatives that are pairwise
///    orthogonal with even triple products. Orthonormality makes any such
///    set independent modulo the hull, so the found rows together with a
///    basis of `H` generate `C`.
///
/// Candidates are visited in canonical vector order, so the result is
/// deterministic; the returned form is re-certified from scratch. Fails
/// with [`Error::SearchLimit`] when more than `search_limit` candidate
/// placements are examined, and with [`Error::ZeroCode`] on the zero code.
pub fn decide_triorthogonal(code: &LinearCode, search_limit: u64) -> Result<Decision, Error> {
    decide_with_order(code, search_limit, false)
}

pub(crate) fn decide_with_order(
    code: &LinearCode,
    search_limit: u64,
    reverse_candidates: bool,
) -> Result<Decision, Error> {
    if code.is_zero_code() {
        return Err(Error::ZeroCode);
    }
    let hull = code.hull();
    let square_dual = code.schur_square().dual();
    if !square_dual.contains_code(&hull) {
        return Ok(Decision::NotTriorthogonal);
    }
    let k1 = code.dimension() - hull.dimension();
    let mut candidates = odd_coset_representatives(code, &hull);
    candidates.sort();
    if reverse_candidates {
        candidates.reverse();
    }

    let mut search = Search {
        nodes: 0,
        limit: search_limit,
        candidates: &candidates,
        chosen: Vec::with_capacity(k1),
    };
    if !search.run(0, k1)? {
        return Ok(Decision::NotTriorthogonal);
    }
    let mut generator = BitMatrix::from_rows(code.length(), search.chosen);
    for row in hull.basis().rows() {
        generator.push_row(row.clone());
    }
    let form = TriorthogonalForm::normal_form(&generator)?;
    debug_assert_eq!(form.code(), code);
    Ok(Decision::Triorthogonal(form))
}

/// One canonical (hull-reduced) representative for each odd coset of the
/// hull in the code.
fn odd_coset_representatives(code: &LinearCode, hull: &LinearCode) -> Vec<BitVector> {
    let complement = code.complement_basis(hull);
    let mut reps = Vec::new();
    let mut current = BitVector::zeros(code.length());
    for i in 1u64..(1 << complement.row_count()) {
        let j = i.trailing_zeros() as usize;
        current.xor_assign(complement.row(j));
        if current.parity() {
            reps.push(current.clone());
        }
    }
    reps
}

struct Search<'a> {
    nodes: u64,
    limit: u64,
    candidates: &'a [BitVector],
    chosen: Vec<BitVector>,
}

impl Search<'_> {
    fn run(&mut self, start: usize, needed: usize) -> Result<bool, Error> {
        if self.chosen.len() == needed {
            return Ok(true);
        }
        for i in start..self.candidates.len() {
            if self.candidates.len() - i < needed - self.chosen.len() {
                break;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::SearchLimit { nodes: self.nodes });
            }
            if self.compatible(&self.candidates[i]) {
                self.chosen.push(self.candidates[i].clone());
                if self.run(i + 1, needed)? {
                    return Ok(true);
                }
                self.chosen.pop();
            }
        }
        Ok(false)
    }

    fn compatible(&self, candidate: &BitVector) -> bool {
        for s in &self.chosen {
            if candidate.dot(s) {
                return false;
            }
        }
        for (a, s) in self.chosen.iter().enumerate() {
            for t in &self.chosen[a + 1..] {
                if candidate.schur(s).schur(t).parity() {
                    return false;
                }
            }
        }
        true
    }
}

/// The admissible shape of a transform between triorthogonal generator
/// matrices: `(P M2; 0 M4)` with `P` a permutation and `M4` nonsingular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTransform {
    p: BitMatrix,
    m2: BitMatrix,
    m4: BitMatrix,
}

impl BlockTransform {
    /// Validates the block shapes: `P` a `k1×k1` permutation, `M2` of
    /// shape `k1×k0`, `M4` a nonsingular `k0×k0` matrix.
    pub fn new(p: BitMatrix, m2: BitMatrix, m4: BitMatrix) -> Result<Self, Error> {
        let k1 = p.row_count();
        let k0 = m4.row_count();
        if p.col_count() != k1 || !p.is_permutation() {
            return Err(Error::SizeMismatch {
                expected_rows: k1,
                expected_cols: k1,
                found_rows: p.row_count(),
                found_cols: p.col_count(),
            });
        }
        if m2.row_count() != k1 || m2.col_count() != k0 || m4.col_count() != k0 {
            return Err(Error::SizeMismatch {
                expected_rows: k1,
                expected_cols: k0,
                found_rows: m2.row_count(),
                found_cols: m2.col_count(),
            });
        }
        if m4.rank() != k0 {
            return Err(Error::Singular);
        }
        Ok(BlockTransform { p, m2, m4 })
    }

    pub fn p(&self) -> &BitMatrix {
        &self.p
    }

    pub fn m2(&self) -> &BitMatrix {
        &self.m2
    }

    pub fn m4(&self) -> &BitMatrix {
        &self.m4
    }

    /// Assembles the full `(k1+k0)×(k1+k0)` matrix `(P M2; 0 M4)`.
    pub fn assemble(&self) -> BitMatrix {
        let k1 = self.p.row_count();
        let k0 = self.m4.row_count();
        let k = k1 + k0;
        let mut rows = Vec::with_capacity(k);
        for i in 0..k1 {
            let bits = (0..k1)
                .map(|c| self.p.row(i).get(c))
                .chain((0..k0).map(|c| self.m2.row(i).get(c)));
            rows.push(BitVector::from_bits(bits));
        }
        for i in 0..k0 {
            let bits = (0..k1)
                .map(|_| false)
                .chain((0..k0).map(|c| self.m4.row(i).get(c)));
            rows.push(BitVector::from_bits(bits));
        }
        BitMatrix::from_rows(k, rows)
    }
}

/// Classifies a nonsingular transform `M` against the normal form:
/// `M·(G1;G0)` is triorthogonal exactly when, after the stable odd/even
/// re-partition of the product's rows, `M` has the block shape
/// `(P M2; 0 M4)` with `P` a permutation and `M4` nonsingular.
///
/// The classification goes through the block shape, not through the
/// matrix-level predicate, so the two routes can be checked against each
/// other. Fails on a non-square or wrongly sized `M` and on singular `M`.
pub fn check_transform(
    form: &TriorthogonalForm,
    m: &BitMatrix,
) -> Result<Option<BlockTransform>, Error> {
    let k = form.k1() + form.k0();
    if m.row_count() != k || m.col_count() != k {
        return Err(Error::SizeMismatch {
            expected_rows: k,
            expected_cols: k,
            found_rows: m.row_count(),
            found_cols: m.col_count(),
        });
    }
    if m.rank() != k {
        return Err(Error::Singular);
    }
    let product = m * &form.stacked();
    let mut order: Vec<usize> = (0..k).filter(|&i| product.row(i).parity()).collect();
    let odd_count = order.len();
    if odd_count != form.k1() {
        return Ok(None);
    }
    order.extend((0..k).filter(|&i| !product.row(i).parity()));
    let permuted = m.select_rows(&order);
    let k1 = form.k1();
    let m1 = permuted.block(0..k1, 0..k1);
    let m2 = permuted.block(0..k1, k1..k);
    let m3 = permuted.block(k1..k, 0..k1);
    let m4 = permuted.block(k1..k, k1..k);
    if !m3.is_zero() || !m1.is_permutation() || m4.rank() != form.k0() {
        return Ok(None);
    }
    Ok(Some(BlockTransform { p: m1, m2, m4 }))
}
