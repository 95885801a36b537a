//! Structured command results. The machine rendering (JSON) and the human
//! rendering (text) are produced from the same data.

use std::fmt;

use serde::Serialize;

use crate::input::RelationDocument;

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Report {
    Check(CheckReport),
    Approx(ApproxReport),
    Lattice(LatticeReport),
    Exact(ExactReport),
    Alpha(AlphaReport),
    /// Emitted by any command other than `check` when the relation fails
    /// validation for the requested t-norm.
    InvalidRelation(InvalidRelationReport),
}

impl Report {
    /// Drives the exit code: true iff every verification the command ran
    /// came out true.
    pub fn verified(&self) -> bool {
        match self {
            Report::Check(r) => r.t_equivalence,
            Report::Approx(r) => {
                r.core_bridge_verified
                    && r.support_bridge_verified.unwrap_or(true)
                    && r.saturation_invariance
            }
            Report::Lattice(r) => {
                r.isomorphism_verified
                    && r.is_lattice
                    && r.is_distributive
                    && r.stone_identity
                    && r.dual_stone_identity
                    && r.is_regular
                    && r.subset_bounds_complete.unwrap_or(true)
            }
            Report::Exact(r) => r.verdicts_agree && r.exact_memberships_indicator,
            Report::Alpha(r) => r.upper_identity_holds && r.lower_identity_holds,
            Report::InvalidRelation(_) => false,
        }
    }

    pub fn to_machine(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("plain data serializes");
        text.push('\n');
        text
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub universe: Vec<String>,
    /// The parsed relation in canonical form: reduced rational degrees.
    pub relation: RelationDocument,
    pub tnorm: String,
    pub tnorm_positive: bool,
    pub reflexive: bool,
    pub symmetric: bool,
    pub t_transitive: bool,
    pub t_equivalence: bool,
    pub violations: Vec<String>,
    pub spectrum: Vec<String>,
    pub core_classes: Option<Vec<Vec<String>>>,
    pub support_classes: Option<Vec<Vec<String>>>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ApproxReport {
    pub tnorm: String,
    pub universe: Vec<String>,
    pub set: Vec<String>,
    /// Fuzzy lower approximation, one degree per universe element.
    pub lower: Vec<String>,
    /// Fuzzy upper approximation, one degree per universe element.
    pub upper: Vec<String>,
    /// Crisp approximations over the core classes.
    pub core_lower_set: Vec<String>,
    pub core_upper_set: Vec<String>,
    /// Crisp approximations over the support classes; absent when the
    /// support side was skipped for a non-positive t-norm.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support_lower_set: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support_upper_set: Option<Vec<String>>,
    /// Core-side correspondence: the crisp approximations over the core
    /// equal the core/support of the fuzzy approximations.
    pub core_bridge_verified: bool,
    /// Support-side correspondence, when applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support_bridge_verified: Option<bool>,
    /// Fuzzy approximations unchanged when the reference set is replaced by
    /// its crisp approximations over the core.
    pub saturation_invariance: bool,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeReport {
    pub tnorm: String,
    pub fuzzy_elements: usize,
    pub crisp_elements: usize,
    pub cover_edges: usize,
    pub isomorphism_verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isomorphism_counterexample: Option<String>,
    pub is_lattice: bool,
    pub is_distributive: bool,
    pub stone_identity: bool,
    pub dual_stone_identity: bool,
    pub is_regular: bool,
    pub stone_counterexamples: Vec<String>,
    /// Exhaustive all-subsets bounds check; absent when the lattice exceeds
    /// the cap for it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset_bounds_complete: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dot_path: Option<String>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactReport {
    pub tnorm: String,
    pub subsets_scanned: usize,
    pub exact_sets: Vec<Vec<String>>,
    /// Fuzzy exactness coincides with crisp exactness over the support
    /// relation on every subset.
    pub verdicts_agree: bool,
    /// Every exact membership function is 0/1-valued, i.e. the indicator of
    /// its reference set.
    pub exact_memberships_indicator: bool,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlphaReport {
    pub tnorm: String,
    pub alpha: String,
    pub set: Vec<String>,
    pub cut_classes: Vec<Vec<String>>,
    pub cut_lower_set: Vec<String>,
    pub cut_upper_set: Vec<String>,
    pub upper_identity_holds: bool,
    pub lower_identity_holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvalidRelationReport {
    pub attempted_command: String,
    pub tnorm: String,
    pub reflexive: bool,
    pub symmetric: bool,
    pub t_transitive: bool,
    pub violations: Vec<String>,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn set_text(labels: &[String]) -> String {
    if labels.is_empty() {
        "{}".to_string()
    } else {
        format!("{{{}}}", labels.join(","))
    }
}

fn classes_text(classes: &[Vec<String>]) -> String {
    classes
        .iter()
        .map(|c| set_text(c))
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Report::Check(r) => {
                if let Some(name) = &r.name {
                    writeln!(f, "relation: {name}")?;
                }
                writeln!(f, "universe: {}", set_text(&r.universe))?;
                writeln!(f, "matrix (canonical):")?;
                for (label, row) in r.universe.iter().zip(&r.relation.mu) {
                    writeln!(f, "  {label}: {}", row.join(" "))?;
                }
                writeln!(
                    f,
                    "t-norm: {}{}",
                    r.tnorm,
                    if r.tnorm_positive { "" } else { " (not positive)" }
                )?;
                writeln!(f, "reflexive: {}", yes_no(r.reflexive))?;
                writeln!(f, "symmetric: {}", yes_no(r.symmetric))?;
                writeln!(f, "t-transitive: {}", yes_no(r.t_transitive))?;
                writeln!(f, "t-equivalence: {}", yes_no(r.t_equivalence))?;
                for v in &r.violations {
                    writeln!(f, "  violation: {v}")?;
                }
                writeln!(f, "spectrum: {}", r.spectrum.join(" "))?;
                match &r.core_classes {
                    Some(classes) => writeln!(f, "core classes: {}", classes_text(classes))?,
                    None => writeln!(f, "core classes: (core is not an equivalence)")?,
                }
                match &r.support_classes {
                    Some(classes) => writeln!(f, "support classes: {}", classes_text(classes))?,
                    None => writeln!(f, "support classes: (support is not an equivalence)")?,
                }
                for w in &r.warnings {
                    writeln!(f, "warning: {w}")?;
                }
                Ok(())
            }
            Report::Approx(r) => {
                writeln!(f, "t-norm: {}", r.tnorm)?;
                writeln!(f, "universe: {}", set_text(&r.universe))?;
                writeln!(f, "reference set: {}", set_text(&r.set))?;
                writeln!(f, "fuzzy lower: {}", r.lower.join(" "))?;
                writeln!(f, "fuzzy upper: {}", r.upper.join(" "))?;
                writeln!(
                    f,
                    "core approximations: lower {} upper {}",
                    set_text(&r.core_lower_set),
                    set_text(&r.core_upper_set)
                )?;
                match (&r.support_lower_set, &r.support_upper_set) {
                    (Some(lower), Some(upper)) => writeln!(
                        f,
                        "support approximations: lower {} upper {}",
                        set_text(lower),
                        set_text(upper)
                    )?,
                    _ => writeln!(f, "support approximations: skipped")?,
                }
                writeln!(
                    f,
                    "core/support bridge: core side {}, support side {}",
                    yes_no(r.core_bridge_verified),
                    r.support_bridge_verified.map_or("skipped", yes_no)
                )?;
                writeln!(
                    f,
                    "saturation invariance: {}",
                    yes_no(r.saturation_invariance)
                )?;
                for w in &r.warnings {
                    writeln!(f, "warning: {w}")?;
                }
                Ok(())
            }
            Report::Lattice(r) => {
                writeln!(f, "t-norm: {}", r.tnorm)?;
                writeln!(
                    f,
                    "{} elements ({} cover edges); crisp counterpart: {} elements",
                    r.fuzzy_elements, r.cover_edges, r.crisp_elements
                )?;
                writeln!(
                    f,
                    "isomorphism with the crisp lattice over the core: {}",
                    if r.isomorphism_verified {
                        "verified".to_string()
                    } else {
                        format!(
                            "FAILED ({})",
                            r.isomorphism_counterexample.as_deref().unwrap_or("?")
                        )
                    }
                )?;
                writeln!(
                    f,
                    "lattice: {}; distributive: {}; Stone identity: {}; dual Stone identity: {}; regular: {}",
                    yes_no(r.is_lattice),
                    yes_no(r.is_distributive),
                    yes_no(r.stone_identity),
                    yes_no(r.dual_stone_identity),
                    yes_no(r.is_regular)
                )?;
                writeln!(
                    f,
                    "distributive regular double Stone: {}",
                    yes_no(
                        r.is_lattice
                            && r.is_distributive
                            && r.stone_identity
                            && r.dual_stone_identity
                            && r.is_regular
                    )
                )?;
                for c in &r.stone_counterexamples {
                    writeln!(f, "  counterexample: {c}")?;
                }
                match r.subset_bounds_complete {
                    Some(ok) => writeln!(f, "all subset bounds exist: {}", yes_no(ok))?,
                    None => writeln!(f, "all subset bounds exist: not checked (lattice too large)")?,
                }
                if let Some(path) = &r.dot_path {
                    writeln!(f, "DOT written to {path}")?;
                }
                for w in &r.warnings {
                    writeln!(f, "warning: {w}")?;
                }
                Ok(())
            }
            Report::Exact(r) => {
                writeln!(f, "t-norm: {}", r.tnorm)?;
                writeln!(f, "subsets scanned: {}", r.subsets_scanned)?;
                writeln!(f, "exact sets ({}):", r.exact_sets.len())?;
                for s in &r.exact_sets {
                    writeln!(f, "  {}", set_text(s))?;
                }
                writeln!(
                    f,
                    "fuzzy exactness matches support exactness: {}",
                    yes_no(r.verdicts_agree)
                )?;
                writeln!(
                    f,
                    "exact memberships are indicator functions: {}",
                    yes_no(r.exact_memberships_indicator)
                )?;
                for w in &r.warnings {
                    writeln!(f, "warning: {w}")?;
                }
                Ok(())
            }
            Report::Alpha(r) => {
                writeln!(f, "t-norm: {}", r.tnorm)?;
                writeln!(f, "alpha: {}", r.alpha)?;
                writeln!(f, "reference set: {}", set_text(&r.set))?;
                writeln!(f, "cut classes: {}", classes_text(&r.cut_classes))?;
                writeln!(
                    f,
                    "cut approximations: lower {} upper {}",
                    set_text(&r.cut_lower_set),
                    set_text(&r.cut_upper_set)
                )?;
                writeln!(
                    f,
                    "upper identity (cut upper = degrees >= alpha): {}",
                    yes_no(r.upper_identity_holds)
                )?;
                writeln!(
                    f,
                    "lower identity (cut lower = degrees > 1 - alpha): {}",
                    yes_no(r.lower_identity_holds)
                )?;
                Ok(())
            }
            Report::InvalidRelation(r) => {
                writeln!(
                    f,
                    "cannot run `{}`: the relation is not a T-equivalence for t-norm {}",
                    r.attempted_command, r.tnorm
                )?;
                writeln!(f, "reflexive: {}", yes_no(r.reflexive))?;
                writeln!(f, "symmetric: {}", yes_no(r.symmetric))?;
                writeln!(f, "t-transitive: {}", yes_no(r.t_transitive))?;
                for v in &r.violations {
                    writeln!(f, "  violation: {v}")?;
                }
                Ok(())
            }
        }
    }
}
