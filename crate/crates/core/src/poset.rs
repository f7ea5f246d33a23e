//! The poset of triorthogonal codes of a fixed length, ordered by
//! simultaneous inclusion of code and hull, together with the extension
//! rule that moves up the poset: adjoining any `v ∈ (C⋆2)⊥` to a
//! triorthogonal code yields a triorthogonal code. Odd `v` preserves the
//! hull and raises the logical dimension; even `v` grows the hull.

use crate::codes::LinearCode;
use crate::error::Error;
use crate::gf2::{BitMatrix, BitVector};
use crate::triortho::{decide_triorthogonal, TriorthogonalForm, DEFAULT_SEARCH_LIMIT};

/// Maximum block length supported by exhaustive enumeration.
pub const MAX_ENUMERATION_LENGTH: usize = 7;

/// A triorthogonal code as an element of the poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetNode {
    form: TriorthogonalForm,
    hull_dim: usize,
    code_dim: usize,
}

impl PosetNode {
    pub fn new(form: TriorthogonalForm) -> Self {
        let hull_dim = form.hull().dimension();
        let code_dim = form.code().dimension();
        PosetNode {
            form,
            hull_dim,
            code_dim,
        }
    }

    pub fn form(&self) -> &TriorthogonalForm {
        &self.form
    }

    pub fn code(&self) -> &LinearCode {
        self.form.code()
    }

    pub fn hull(&self) -> &LinearCode {
        self.form.hull()
    }

    pub fn hull_dim(&self) -> usize {
        self.hull_dim
    }

    pub fn code_dim(&self) -> usize {
        self.code_dim
    }
}

/// The partial order: `A ≤ B` iff `code(A) ⊆ code(B)` and
/// `hull(A) ⊆ hull(B)`.
///
/// # Panics
///
/// Panics if the lengths differ.
pub fn leq(a: &PosetNode, b: &PosetNode) -> bool {
    assert_eq!(
        a.code().length(),
        b.code().length(),
        "poset comparison across different lengths"
    );
    b.code().contains_code(a.code()) && b.hull().contains_code(a.hull())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// Predicted effect of extending by a candidate vector: an odd vector
/// keeps the hull and raises the logical dimension by one, an even vector
/// grows the hull by one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionEffect {
    KeepsHull,
    GrowsHull,
}

/// A certified way to grow the code: a canonical representative of a
/// nonzero coset of `C` inside `(C⋆2)⊥ + C`, guaranteed to lie in
/// `(C⋆2)⊥` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionCandidate {
    pub vector: BitVector,
    pub parity: Parity,
    pub predicted_effect: ExtensionEffect,
}

/// All extension candidates of a form, one canonical representative per
/// coset of `C` in `(C⋆2)⊥ + C` excluding `C` itself, sorted canonically.
///
/// The cosets of `C` in `(C⋆2)⊥ + C` correspond to the cosets of
/// `E = C ∩ (C⋆2)⊥` in `(C⋆2)⊥`; each representative is reduced modulo
/// `E`, which makes it the least element of its coset's intersection with
/// `(C⋆2)⊥`. Every candidate is re-certified by running the matrix-level
/// predicate on the extended generator.
pub fn extension_candidates(form: &TriorthogonalForm) -> Vec<ExtensionCandidate> {
    let code = form.code();
    let square_dual = code.schur_square().dual();
    let inner = code.intersect(&square_dual);
    let complement = square_dual.complement_basis(&inner);
    let mut vectors = Vec::new();
    let mut current = BitVector::zeros(code.length());
    for i in 1u64..(1 << complement.row_count()) {
        let j = i.trailing_zeros() as usize;
        current.xor_assign(complement.row(j));
        vectors.push(current.clone());
    }
    vectors.sort();
    vectors
        .into_iter()
        .map(|vector| {
            let extended = extended_generator(form, &vector);
            debug_assert!(
                crate::triortho::is_triorthogonal(&extended),
                "extension candidate failed certification"
            );
            let parity = if vector.parity() { Parity::Odd } else { Parity::Even };
            let predicted_effect = match parity {
                Parity::Odd => ExtensionEffect::KeepsHull,
                Parity::Even => ExtensionEffect::GrowsHull,
            };
            ExtensionCandidate {
                vector,
                parity,
                predicted_effect,
            }
        })
        .collect()
}

/// The generator of `C + ⟨v⟩` built by prepending `v` to the block of its
/// own parity.
fn extended_generator(form: &TriorthogonalForm, v: &BitVector) -> BitMatrix {
    let n = form.length();
    let mut rows = Vec::with_capacity(form.k1() + form.k0() + 1);
    if v.parity() {
        rows.push(v.clone());
        rows.extend(form.g1().rows().cloned());
        rows.extend(form.g0().rows().cloned());
    } else {
        rows.extend(form.g1().rows().cloned());
        rows.push(v.clone());
        rows.extend(form.g0().rows().cloned());
    }
    BitMatrix::from_rows(n, rows)
}

/// Extends the form by `v ∈ (C⋆2)⊥ \ C`, returning the certified form of
/// `C + ⟨v⟩`. Odd `v` joins the odd block (hull unchanged, `k1 + 1`);
/// even `v` joins the even block (hull dimension grows by one).
///
/// # Panics
///
/// Panics if `v.len()` differs from the code length.
pub fn extend(form: &TriorthogonalForm, v: &BitVector) -> Result<TriorthogonalForm, Error> {
    assert_eq!(v.len(), form.length(), "vector length differs from code length");
    let code = form.code();
    if code.contains(v) {
        return Err(Error::AlreadyInCode);
    }
    if !code.schur_square().dual().contains(v) {
        return Err(Error::NotInSquareDual);
    }
    TriorthogonalForm::normal_form(&extended_generator(form, v))
}

/// Deletes the odd row at `index` from `G1`; the remaining rows still
/// form a triorthogonal generator of a code of dimension `k − 1`.
pub fn shrink(form: &TriorthogonalForm, index: usize) -> Result<TriorthogonalForm, Error> {
    if index >= form.k1() {
        return Err(Error::RowIndex {
            index,
            count: form.k1(),
        });
    }
    if form.k1() + form.k0() == 1 {
        return Err(Error::ZeroCode);
    }
    let rows = form
        .g1()
        .rows()
        .enumerate()
        .filter(|(i, _)| *i != index)
        .map(|(_, r)| r.clone())
        .chain(form.g0().rows().cloned())
        .collect();
    TriorthogonalForm::normal_form(&BitMatrix::from_rows(form.length(), rows))
}

/// True iff the code is maximal in the poset: `(C⋆2)⊥ = hull(C)`.
pub fn is_maximal(form: &TriorthogonalForm) -> bool {
    form.code().schur_square().dual() == *form.hull()
}

/// True iff no element of `ground` lies strictly below the form under the
/// poset order. Fails when the form's code is not in `ground`.
pub fn is_minimal_in(form: &TriorthogonalForm, ground: &[PosetNode]) -> Result<bool, Error> {
    let node = PosetNode::new(form.clone());
    if !ground.iter().any(|g| g.code() == node.code()) {
        return Err(Error::NotInGround);
    }
    Ok(!ground
        .iter()
        .any(|g| g.code() != node.code() && leq(g, &node)))
}

/// The closed-form minimality characterization: the code is
/// one-dimensional and even. Computed minimality over an enumerated
/// ground set can disagree (a one-dimensional odd code also has nothing
/// strictly below it once the zero code is excluded); callers report both
/// and surface any disagreement instead of failing.
pub fn paper_minimal_predicate(form: &TriorthogonalForm) -> bool {
    form.code().dimension() == 1 && form.code().is_even()
}

/// True iff the all-ones vector lies in `C⋆2`, in which case every
/// extension candidate is even and any extension grows the hull.
pub fn obstruction_all_ones(form: &TriorthogonalForm) -> bool {
    form.code()
        .schur_square()
        .contains(&BitVector::ones(form.length()))
}

/// Iterates over every subspace of F2^n exactly once, in canonical order:
/// by dimension, then by pivot-column set, then by the free entries of
/// the reduced echelon basis. The zero subspace is included.
pub fn subspaces(n: usize) -> impl Iterator<Item = LinearCode> {
    SubspaceIter::new(n)
}

struct SubspaceIter {
    n: usize,
    k: usize,
    pivots: Vec<usize>,
    mask: u64,
    free_count: u32,
    done: bool,
}

impl SubspaceIter {
    fn new(n: usize) -> Self {
        let mut it = SubspaceIter {
            n,
            k: 0,
            pivots: Vec::new(),
            mask: 0,
            free_count: 0,
            done: false,
        };
        it.free_count = it.count_free();
        it
    }

    fn count_free(&self) -> u32 {
        let mut free = 0;
        for (i, &p) in self.pivots.iter().enumerate() {
            let later_pivots = self.pivots.len() - i - 1;
            free += self.n - p - 1 - later_pivots;
        }
        free as u32
    }

    /// Advances `pivots` to the next k-combination of `0..n` in
    /// lexicographic order; false when exhausted.
    fn next_combination(&mut self) -> bool {
        let k = self.pivots.len();
        if k == 0 {
            return false;
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < self.n - (k - i) {
                self.pivots[i] += 1;
                for j in (i + 1)..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn build(&self) -> LinearCode {
        let mut rows = Vec::with_capacity(self.k);
        let mut consumed = 0;
        for &p in &self.pivots {
            let mut row = BitVector::zeros(self.n);
            row.set(p, true);
            for c in (p + 1)..self.n {
                if self.pivots.contains(&c) {
                    continue;
                }
                if self.mask >> consumed & 1 == 1 {
                    row.set(c, true);
                }
                consumed += 1;
            }
            rows.push(row);
        }
        LinearCode::from_generators(&BitMatrix::from_rows(self.n, rows))
    }
}

impl Iterator for SubspaceIter {
    type Item = LinearCode;

    fn next(&mut self) -> Option<LinearCode> {
        if self.done {
            return None;
        }
        let out = self.build();
        self.mask += 1;
        if self.mask >> self.free_count != 0 {
            self.mask = 0;
            if !self.next_combination() {
                self.k += 1;
                if self.k > self.n {
                    self.done = true;
                } else {
                    self.pivots = (0..self.k).collect();
                }
            }
            self.free_count = self.count_free();
        }
        Some(out)
    }
}

/// The result of exhaustively enumerating the triorthogonal codes of a
/// given length: the poset elements in canonical order, plus the number
/// of subspaces visited (including the skipped zero subspace), which must
/// match the Gaussian-binomial total.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub length: usize,
    pub subspaces_visited: u64,
    pub nodes: Vec<PosetNode>,
}

/// Visits every subspace of F2^n of dimension ≥ 1 exactly once and keeps
/// those that admit a triorthogonal generator matrix.
pub fn enumerate_triorthogonal(n: usize) -> Result<Enumeration, Error> {
    if n == 0 || n > MAX_ENUMERATION_LENGTH {
        return Err(Error::LengthRange {
            length: n,
            max: MAX_ENUMERATION_LENGTH,
        });
    }
    let mut visited = 0;
    let mut nodes = Vec::new();
    for code in subspaces(n) {
        visited += 1;
        if code.is_zero_code() {
            continue;
        }
        if let Some(form) = decide_triorthogonal(&code, DEFAULT_SEARCH_LIMIT)?.form() {
            nodes.push(PosetNode::new(form.clone()));
        }
    }
    nodes.sort_by(|a, b| {
        a.code_dim()
            .cmp(&b.code_dim())
            .then_with(|| a.code().basis().cmp(b.code().basis()))
    });
    Ok(Enumeration {
        length: n,
        subspaces_visited: visited,
        nodes,
    })
}

/// Repeatedly extends until the code is maximal, preferring odd
/// candidates (which keep the hull and raise the logical dimension) and
/// breaking ties by canonical vector order. Returns the full chain,
/// strictly increasing under the poset order, ending at a maximal
/// element.
pub fn saturate(form: &TriorthogonalForm) -> Vec<TriorthogonalForm> {
    let mut chain = vec![form.clone()];
    loop {
        let last = chain.last().expect("chain is nonempty");
        let candidates = extension_candidates(last);
        let pick = candidates
            .iter()
            .find(|c| c.parity == Parity::Odd)
            .or_else(|| candidates.first());
        match pick {
            None => break,
            Some(candidate) => {
                let next = extend(last, &candidate.vector)
                    .expect("certified candidate must extend");
                chain.push(next);
            }
        }
    }
    chain
}
