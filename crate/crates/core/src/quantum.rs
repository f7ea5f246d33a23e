//! CSS and CSS-T pair verification and quantum code parameters.
//!
//! A nested pair `C2 ⊆ C1` defines a CSS code with parameters
//! `[[n, k1 − k2, ≥ min{d1, d2⊥}]]`. The pair additionally supports a
//! transversal-T-induced logical operation exactly when
//! `C2 ⊆ C1 ∩ (C1⋆2)⊥`, in which case the sharper bound `d2⊥` applies.
//! For a triorthogonal code the pair `(C, hull(C))` is always of this
//! kind, with parameters `[[n, dim C − dim hull(C), ≥ d(C + C⊥)]]`.

use crate::codes::LinearCode;
use crate::error::Error;
use crate::triortho::TriorthogonalForm;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which distance bound a [`QuantumParams`] value reports, so reports
/// never mix the generic CSS bound with the sharper CSS-T bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// `min{d1, d2⊥}` for a merely nested pair.
    CssGeneric,
    /// `d2⊥` for a verified CSS-T pair.
    Csst,
    /// `d(C + C⊥)` for the pair `(C, hull(C))` of a triorthogonal code.
    Triorthogonal,
}

/// Parameters `[[n, k, ≥ d]]` of a CSS code.
///
/// `d_bound` is the exact minimum distance of the classical code backing
/// the bound; the true quantum distance may exceed it and is not
/// computed. `d_exact`, when requested, records that same classical value
/// and is labeled as such.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumParams {
    pub n: usize,
    pub k: usize,
    pub d_bound: usize,
    pub d_exact: Option<usize>,
    pub bound_kind: BoundKind,
}

impl QuantumParams {
    /// Records the exact minimum distance of the bound-achieving classical
    /// code (numerically equal to `d_bound`, which is already exhaustive).
    pub fn with_exact_distance(mut self) -> Self {
        self.d_exact = Some(self.d_bound);
        self
    }
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}, >={}]]", self.n, self.k, self.d_bound)
    }
}

/// A nested pair of codes `C2 ⊆ C1`; `verified` records whether the
/// CSS-T condition `C2 ⊆ C1 ∩ (C1⋆2)⊥` has been established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CssTPair {
    c1: LinearCode,
    c2: LinearCode,
    verified: bool,
}

impl CssTPair {
    /// Builds an unverified (generic CSS) pair; `None` when `C2 ⊄ C1`.
    ///
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn nested(c1: LinearCode, c2: LinearCode) -> Option<Self> {
        assert_eq!(c1.length(), c2.length(), "pair of codes of different length");
        c1.contains_code(&c2).then_some(CssTPair {
            c1,
            c2,
            verified: false,
        })
    }

    pub fn c1(&self) -> &LinearCode {
        &self.c1
    }

    pub fn c2(&self) -> &LinearCode {
        &self.c2
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }
}

/// Why a pair of codes fails to be CSS-T.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsstFailure {
    /// `C2 ⊄ C1`.
    NotNested,
    /// `C2 ⊄ (C1⋆2)⊥`.
    SquareDualCondition,
}

impl fmt::Display for CsstFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CsstFailure::NotNested => write!(f, "C2 is not contained in C1"),
            CsstFailure::SquareDualCondition => {
                write!(f, "C2 is not orthogonal to the Schur square of C1")
            }
        }
    }
}

/// Verifies the CSS-T condition: `C2 ⊆ C1` and `C2 ⊆ C1 ∩ (C1⋆2)⊥`.
/// The failure reason distinguishes broken nesting from a broken
/// square-dual condition.
///
/// # Panics
///
/// Panics if the lengths differ.
pub fn csst_check(c1: &LinearCode, c2: &LinearCode) -> Result<CssTPair, CsstFailure> {
    assert_eq!(c1.length(), c2.length(), "pair of codes of different length");
    if !c1.contains_code(c2) {
        return Err(CsstFailure::NotNested);
    }
    if !c1.schur_square().dual().contains_code(c2) {
        return Err(CsstFailure::SquareDualCondition);
    }
    Ok(CssTPair {
        c1: c1.clone(),
        c2: c2.clone(),
        verified: true,
    })
}

/// Parameters of the CSS code `Q(C1, C2)`.
///
/// For a verified pair the bound is `d2⊥`; for a merely nested pair it is
/// the generic `min{d1, d2⊥}`. Distance enumeration errors propagate.
pub fn css_params(pair: &CssTPair, budget: u64) -> Result<QuantumParams, Error> {
    let n = pair.c1.length();
    let k = pair.c1.dimension() - pair.c2.dimension();
    let d2_perp = pair.c2.dual().min_distance(budget)?;
    let (d_bound, bound_kind) = if pair.verified {
        (d2_perp, BoundKind::Csst)
    } else {
        let d1 = pair.c1.min_distance(budget)?;
        (d1.min(d2_perp), BoundKind::CssGeneric)
    };
    Ok(QuantumParams {
        n,
        k,
        d_bound,
        d_exact: None,
        bound_kind,
    })
}

/// Parameters of the quantum code of a triorthogonal form:
/// `n` the length, `k = k1 = dim C − dim hull(C)`, and the distance bound
/// `d(C + C⊥)`. Agrees with [`css_params`] on `(C, hull(C))` because
/// `hull(C)⊥ = C + C⊥`.
pub fn tri_quantum_params(form: &TriorthogonalForm, budget: u64) -> Result<QuantumParams, Error> {
    let code = form.code();
    let d_bound = code.sum(&code.dual()).min_distance(budget)?;
    Ok(QuantumParams {
        n: code.length(),
        k: form.k1(),
        d_bound,
        d_exact: None,
        bound_kind: BoundKind::Triorthogonal,
    })
}

/// The X and Z stabilizer generators of the quantum code of a
/// triorthogonal form: `hull(C)` and `C⊥` respectively. The X side is
/// always contained in the Z side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerView {
    pub x_stabilizers: LinearCode,
    pub z_stabilizers: LinearCode,
}

pub fn stabilizer_view(form: &TriorthogonalForm) -> StabilizerView {
    StabilizerView {
        x_stabilizers: form.hull().clone(),
        z_stabilizers: form.code().dual(),
    }
}
