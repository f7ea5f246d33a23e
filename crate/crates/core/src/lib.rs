//! Exact computation for binary triorthogonal codes.
//!
//! This crate decides whether a binary matrix or linear code is
//! triorthogonal, verifies CSS-T conditions, computes the parameters of
//! the associated quantum codes, applies the extension rule that grows a
//! triorthogonal code inside the dual of its Schur square, and
//! exhaustively enumerates the poset of triorthogonal codes at small
//! block lengths. All arithmetic is exact over F2.
//!
//! # Layout
//!
//! - [`gf2`] — bit-packed vectors and matrices with word-parallel
//!   elimination; the substrate for everything else.
//! - [`codes`] — canonical linear codes: duals, hulls, Schur products,
//!   sums, intersections, exact minimum distance.
//! - [`triortho`] — the triorthogonality predicate with violation
//!   witnesses, the `(G1; G0)` normal form, the code-level decision
//!   procedure, and the classification of admissible transforms.
//! - [`quantum`] — CSS-T pair verification and quantum code parameters.
//! - [`poset`] — the partial order on triorthogonal codes, extension and
//!   shrinking, minimal/maximal elements, saturation, and exhaustive
//!   enumeration.
//! - [`oracle`] — deliberately slow brute-force references used to
//!   validate the fast paths in tests.
//!
//! # Example
//!
//! ```
//! use tricode::codes::LinearCode;
//! use tricode::triortho::{decide_triorthogonal, DEFAULT_SEARCH_LIMIT};
//!
//! let code = LinearCode::from_bit_strings(&["1110000", "0001000"]);
//! let decision = decide_triorthogonal(&code, DEFAULT_SEARCH_LIMIT).unwrap();
//! let form = decision.form().expect("this code is triorthogonal");
//! assert_eq!(form.k1(), 2);
//! assert_eq!(form.hull().dimension(), 0);
//! ```

pub mod codes;
mod error;
pub mod gf2;
pub mod oracle;
pub mod poset;
pub mod quantum;
pub mod triortho;

pub use error::Error;
