//! Report types for machine-readable output and their text rendering.
//!
//! Machine mode emits one JSON object per invocation (one object per line
//! in full enumeration mode); every report round-trips losslessly through
//! serde.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use tricode::quantum::QuantumParams;
use tricode::triortho::ViolationWitness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionSummary {
    pub odd_count: usize,
    pub even_count: usize,
}

/// The code-level analysis of one input matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub k: usize,
    pub hull_dim: usize,
    pub is_even: bool,
    pub is_triorthogonal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triorthogonal_generator: Option<Vec<String>>,
    pub csst_verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quantum: Option<QuantumParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal: Option<bool>,
    pub paper_minimal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed_minimal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension_summary: Option<ExtensionSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_ones_obstruction: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation_witness: Option<ViolationWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget_exceeded: Option<String>,
    /// True when C⋆2 = C + C⊥; holds for every triorthogonal code but not
    /// only for those.
    pub square_equals_sum: bool,
}

/// The matrix-level verdict of `check`, with the code-level analysis
/// reported alongside.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub matrix_triorthogonal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation_witness: Option<ViolationWitness>,
    pub analysis: AnalysisReport,
}

/// One step of an extension chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendStep {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub added_vector: Option<String>,
    pub generator: Vec<String>,
    pub hull_dim: usize,
    pub quantum: QuantumParams,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendReport {
    pub n: usize,
    pub steps: Vec<ExtendStep>,
}

/// Census counts grouped by (dim, hull_dim, maximal, minimal).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusGroup {
    pub dim: usize,
    pub hull_dim: usize,
    pub maximal: bool,
    pub minimal: bool,
    pub count: u64,
}

/// Verdicts of the cross-checks run over the enumerated poset: whether
/// the maximal elements coincide with the square-dual characterization,
/// whether every one-dimensional even code is minimal, and which computed
/// minimal elements fall outside the one-dimensional-even shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossChecks {
    pub maximal_matches_characterization: bool,
    pub one_dimensional_even_all_minimal: bool,
    pub minimal_outside_characterization: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    pub subspaces_visited: u64,
    pub triorthogonal_count: u64,
    pub groups: Vec<CensusGroup>,
    pub cross_checks: CrossChecks,
}

/// One record of the full enumeration stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub basis: Vec<String>,
    pub dim: usize,
    pub hull_dim: usize,
    pub maximal: bool,
    pub minimal: bool,
    pub paper_minimal: bool,
    pub quantum: QuantumParams,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl AnalysisReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "length n:             {}", self.n);
        let _ = writeln!(out, "dimension k:          {}", self.k);
        let _ = writeln!(out, "hull dimension:       {}", self.hull_dim);
        let _ = writeln!(out, "even code:            {}", yes_no(self.is_even));
        let _ = writeln!(out, "triorthogonal:        {}", yes_no(self.is_triorthogonal));
        if let Some(generator) = &self.triorthogonal_generator {
            let _ = writeln!(out, "normal form (G1; G0):");
            for row in generator {
                let _ = writeln!(out, "  {row}");
            }
        }
        if let Some(witness) = &self.violation_witness {
            let _ = writeln!(out, "violation (canonical basis): {witness}");
        }
        let _ = writeln!(
            out,
            "CSS-T pair (C, hull C): {}",
            if self.csst_verified { "verified" } else { "not CSS-T" }
        );
        if self.square_equals_sum && !self.is_triorthogonal {
            let _ = writeln!(
                out,
                "note: C*2 = C + C_perp holds although the code is not triorthogonal"
            );
        }
        if let Some(q) = &self.quantum {
            let _ = writeln!(out, "quantum parameters:   {q} ({})", bound_kind_name(q));
            if let Some(d) = q.d_exact {
                let _ = writeln!(out, "bound code distance:  {d} (exact)");
            }
        }
        if let Some(maximal) = self.maximal {
            let _ = writeln!(out, "maximal:              {}", yes_no(maximal));
        }
        let _ = writeln!(
            out,
            "minimal (1-dim even): {}",
            yes_no(self.paper_minimal)
        );
        if let Some(minimal) = self.computed_minimal {
            let _ = writeln!(out, "minimal (computed):   {}", yes_no(minimal));
        }
        if let Some(summary) = &self.extension_summary {
            let _ = writeln!(
                out,
                "extension candidates: {} odd, {} even",
                summary.odd_count, summary.even_count
            );
        }
        if let Some(obstruction) = self.all_ones_obstruction {
            let _ = writeln!(out, "all-ones obstruction: {}", yes_no(obstruction));
        }
        if let Some(marker) = &self.budget_exceeded {
            let _ = writeln!(out, "budget exceeded:      {marker}");
        }
        out
    }
}

fn bound_kind_name(q: &QuantumParams) -> &'static str {
    match q.bound_kind {
        tricode::quantum::BoundKind::CssGeneric => "generic CSS bound",
        tricode::quantum::BoundKind::Csst => "CSS-T bound",
        tricode::quantum::BoundKind::Triorthogonal => "triorthogonal bound",
    }
}

impl CheckReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "matrix triorthogonal: {}",
            yes_no(self.matrix_triorthogonal)
        );
        if let Some(witness) = &self.violation_witness {
            let _ = writeln!(out, "violation: {witness}");
        }
        let _ = writeln!(out, "--- code-level analysis ---");
        out.push_str(&self.analysis.render_text());
        out
    }
}

impl ExtendReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (i, step) in self.steps.iter().enumerate() {
            match &step.added_vector {
                None => {
                    let _ = writeln!(out, "start: {} (hull dim {})", step.quantum, step.hull_dim);
                }
                Some(v) => {
                    let _ = writeln!(
                        out,
                        "step {i}: + {v} -> {} (hull dim {})",
                        step.quantum, step.hull_dim
                    );
                }
            }
        }
        out
    }
}

impl CensusReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "length n:            {}", self.n);
        let _ = writeln!(out, "subspaces visited:   {}", self.subspaces_visited);
        let _ = writeln!(out, "triorthogonal codes: {}", self.triorthogonal_count);
        let _ = writeln!(out, "dim  hull_dim  maximal  minimal  count");
        for g in &self.groups {
            let _ = writeln!(
                out,
                "{:<4} {:<9} {:<8} {:<8} {}",
                g.dim,
                g.hull_dim,
                yes_no(g.maximal),
                yes_no(g.minimal),
                g.count
            );
        }
        let _ = writeln!(
            out,
            "maximal elements match (C*2)_perp = hull(C): {}",
            yes_no(self.cross_checks.maximal_matches_characterization)
        );
        let _ = writeln!(
            out,
            "every 1-dim even code is minimal: {}",
            yes_no(self.cross_checks.one_dimensional_even_all_minimal)
        );
        if self.cross_checks.minimal_outside_characterization.is_empty() {
            let _ = writeln!(out, "minimal elements outside the 1-dim-even shape: none");
        } else {
            let _ = writeln!(
                out,
                "minimal elements outside the 1-dim-even shape ({} — documented discrepancy, not a failure):",
                self.cross_checks.minimal_outside_characterization.len()
            );
            for basis in &self.cross_checks.minimal_outside_characterization {
                let _ = writeln!(out, "  {}", basis.join(" "));
            }
        }
        out
    }
}

impl CodeRecord {
    pub fn render_text(&self) -> String {
        format!(
            "[{}] dim {} hull {} {} maximal={} minimal={} paper_minimal={}",
            self.basis.join(" "),
            self.dim,
            self.hull_dim,
            self.quantum,
            yes_no(self.maximal),
            yes_no(self.minimal),
            yes_no(self.paper_minimal)
        )
    }
}
