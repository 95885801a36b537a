//! The subcommand implementations: load, validate, compute, report.

use std::path::Path;
use std::sync::Arc;

use anyhow::{anyhow, Context, Result};

use frl_core::approx::{core_support_bridge, crisp_approx, fuzzy_rough_pair};
use frl_core::exactness::{alpha_identities, exactness_scan};
use frl_core::lattice::{
    enumerate_crisp, enumerate_fuzzy, stone_verify, verify_order_isomorphism, COMPLETE_CHECK_CAP,
};
use frl_core::relation::ValidationWitness;
use frl_core::set::FuzzySet as GenericFuzzySet;
use frl_core::{
    CrispSet, Degree, Error, FuzzyRelation, Partition, TNorm, Universe, ValidationReport,
};

use crate::input::{parse_relation, parse_set, RelationDocument};
use crate::report::{
    AlphaReport, ApproxReport, CheckReport, ExactReport, InvalidRelationReport, LatticeReport,
    Report,
};

fn load(path: &Path) -> Result<(FuzzyRelation, Option<String>)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    parse_relation(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn labels_of(set: &CrispSet) -> Vec<String> {
    set.member_labels().iter().map(|s| s.to_string()).collect()
}

fn degrees_of(set: &GenericFuzzySet<frl_core::Rational>) -> Vec<String> {
    set.degrees().iter().map(|d| d.to_string()).collect()
}

fn classes_of(partition: &Partition) -> Vec<Vec<String>> {
    partition.blocks().iter().map(labels_of).collect()
}

fn describe_witness(witness: &ValidationWitness<frl_core::Rational>, u: &Universe) -> String {
    match witness {
        ValidationWitness::Reflexivity { x, degree } => {
            format!("mu({0},{0}) = {1}, expected 1", u.label(*x), degree)
        }
        ValidationWitness::Symmetry {
            x,
            y,
            forward,
            backward,
        } => format!(
            "mu({0},{1}) = {2} but mu({1},{0}) = {3}",
            u.label(*x),
            u.label(*y),
            forward,
            backward
        ),
        ValidationWitness::Transitivity {
            x,
            y,
            z,
            composed,
            actual,
        } => format!(
            "T(mu({0},{1}), mu({1},{2})) = {3} > {4} = mu({0},{2})",
            u.label(*x),
            u.label(*y),
            u.label(*z),
            composed,
            actual
        ),
    }
}

fn witness_strings(report: &ValidationReport, u: &Universe) -> Vec<String> {
    report
        .witnesses
        .iter()
        .map(|w| describe_witness(w, u))
        .collect()
}

fn non_positive_warning(tnorm: TNorm) -> Option<String> {
    (!tnorm.is_positive()).then(|| {
        format!(
            "t-norm {tnorm} is not positive; support-based results are not guaranteed"
        )
    })
}

/// Validation gate shared by every command except `check`.
fn validated(
    relation: &FuzzyRelation,
    tnorm: TNorm,
    command: &str,
) -> std::result::Result<(), Box<Report>> {
    let report = relation.validate(tnorm);
    if report.is_t_equivalence() {
        Ok(())
    } else {
        Err(Box::new(Report::InvalidRelation(InvalidRelationReport {
            attempted_command: command.to_string(),
            tnorm: tnorm.to_string(),
            reflexive: report.reflexive,
            symmetric: report.symmetric,
            t_transitive: report.t_transitive,
            violations: witness_strings(&report, relation.universe()),
        })))
    }
}

pub fn check(path: &Path, tnorm: TNorm) -> Result<Report> {
    let (relation, name) = load(path)?;
    let u = Arc::clone(relation.universe());
    let validation = relation.validate(tnorm);
    let mut warnings = Vec::new();
    if let Some(w) = non_positive_warning(tnorm) {
        warnings.push(w);
    }
    let core_classes = relation.core_relation().classes().ok();
    let support_classes = relation.support_relation().classes().ok();
    Ok(Report::Check(CheckReport {
        name,
        universe: u.labels().to_vec(),
        relation: RelationDocument::from_relation(&relation, None),
        tnorm: tnorm.to_string(),
        tnorm_positive: tnorm.is_positive(),
        reflexive: validation.reflexive,
        symmetric: validation.symmetric,
        t_transitive: validation.t_transitive,
        t_equivalence: validation.is_t_equivalence(),
        violations: witness_strings(&validation, &u),
        spectrum: relation
            .spectrum()
            .iter()
            .map(|d| d.to_string())
            .collect(),
        core_classes: core_classes.as_ref().map(classes_of),
        support_classes: support_classes.as_ref().map(classes_of),
        warnings,
    }))
}

pub fn approx(path: &Path, set_spec: &str, tnorm: TNorm) -> Result<Report> {
    let (relation, _) = load(path)?;
    let set = parse_set(relation.universe(), set_spec)?;
    if let Err(report) = validated(&relation, tnorm, "approx") {
        return Ok(*report);
    }
    let u = Arc::clone(relation.universe());
    let pair = fuzzy_rough_pair(&set, &relation)?;
    let mut warnings = Vec::new();
    if let Some(w) = non_positive_warning(tnorm) {
        warnings.push(w);
    }

    let core_partition = relation.core_relation().classes().map_err(|e| anyhow!(e))?;
    let over_core = crisp_approx(&set, &core_partition)?;
    let core_bridge_verified =
        over_core.upper == pair.upper.core() && over_core.lower == pair.lower.support();

    // the support side needs the support relation to be an equivalence,
    // which only a positive t-norm guarantees
    let mut support_lower_set = None;
    let mut support_upper_set = None;
    let mut support_bridge_verified = None;
    match core_support_bridge(&set, &relation) {
        Ok(bridge) => {
            support_lower_set = Some(labels_of(&bridge.support_lower));
            support_upper_set = Some(labels_of(&bridge.support_upper));
            support_bridge_verified = Some(bridge.verified);
        }
        Err(Error::NotAnEquivalence { reason }) => {
            warnings.push(format!("support side skipped: {reason}"));
        }
        Err(other) => return Err(other.into()),
    }

    let saturation = frl_core::approx::saturation_invariance(&set, &relation)?;

    Ok(Report::Approx(ApproxReport {
        tnorm: tnorm.to_string(),
        universe: u.labels().to_vec(),
        set: labels_of(&set),
        lower: degrees_of(&pair.lower),
        upper: degrees_of(&pair.upper),
        core_lower_set: labels_of(&over_core.lower),
        core_upper_set: labels_of(&over_core.upper),
        support_lower_set,
        support_upper_set,
        core_bridge_verified,
        support_bridge_verified,
        saturation_invariance: saturation,
        warnings,
    }))
}

pub fn lattice(path: &Path, dot: Option<&Path>, tnorm: TNorm) -> Result<Report> {
    let (relation, _) = load(path)?;
    if let Err(report) = validated(&relation, tnorm, "lattice") {
        return Ok(*report);
    }
    let mut warnings = Vec::new();
    if let Some(w) = non_positive_warning(tnorm) {
        warnings.push(w);
    }
    let fuzzy = enumerate_fuzzy(&relation).map_err(|e| anyhow!(e))?;
    let crisp_partition = relation.core_relation().classes().map_err(|e| anyhow!(e))?;
    let crisp = enumerate_crisp(&crisp_partition).map_err(|e| anyhow!(e))?;
    let witness = verify_order_isomorphism(&relation).map_err(|e| anyhow!(e))?;
    let stone = stone_verify(&fuzzy);
    let subset_bounds_complete = if fuzzy.len() <= COMPLETE_CHECK_CAP {
        Some(fuzzy.verify_subset_bounds().is_ok())
    } else {
        None
    };
    let dot_path = match dot {
        Some(path) => {
            std::fs::write(path, fuzzy.to_dot())
                .with_context(|| format!("cannot write {}", path.display()))?;
            Some(path.display().to_string())
        }
        None => None,
    };
    Ok(Report::Lattice(LatticeReport {
        tnorm: tnorm.to_string(),
        fuzzy_elements: fuzzy.len(),
        crisp_elements: crisp.len(),
        cover_edges: fuzzy.covers().len(),
        isomorphism_verified: witness.holds(),
        isomorphism_counterexample: witness.counterexample,
        is_lattice: stone.is_lattice,
        is_distributive: stone.is_distributive,
        stone_identity: stone.stone_identity,
        dual_stone_identity: stone.dual_stone_identity,
        is_regular: stone.is_regular,
        stone_counterexamples: stone
            .counterexamples
            .iter()
            .map(|c| c.to_string())
            .collect(),
        subset_bounds_complete,
        dot_path,
        warnings,
    }))
}

pub fn exact(path: &Path, tnorm: TNorm) -> Result<Report> {
    let (relation, _) = load(path)?;
    if let Err(report) = validated(&relation, tnorm, "exact") {
        return Ok(*report);
    }
    let mut warnings = Vec::new();
    if let Some(w) = non_positive_warning(tnorm) {
        warnings.push(w);
    }
    let records = exactness_scan(&relation).map_err(|e| anyhow!(e))?;
    let subsets_scanned = records.len();
    let verdicts_agree = records.iter().all(|r| r.agree);
    let mut exact_sets = Vec::new();
    let mut indicator = true;
    for record in &records {
        if record.fuzzy_exact {
            let pair = fuzzy_rough_pair(&record.set, &relation)?;
            if pair.lower != GenericFuzzySet::indicator(&record.set) {
                indicator = false;
            }
            exact_sets.push(labels_of(&record.set));
        }
    }
    Ok(Report::Exact(ExactReport {
        tnorm: tnorm.to_string(),
        subsets_scanned,
        exact_sets,
        verdicts_agree,
        exact_memberships_indicator: indicator,
        warnings,
    }))
}

pub fn alpha(path: &Path, set_spec: &str, alpha_spec: &str, tnorm: TNorm) -> Result<Report> {
    let (relation, _) = load(path)?;
    let set = parse_set(relation.universe(), set_spec)?;
    let alpha: Degree = alpha_spec
        .parse()
        .with_context(|| format!("invalid alpha {alpha_spec:?}"))?;
    if alpha.is_zero() {
        return Err(Error::InvalidAlpha.into());
    }
    if let Err(report) = validated(&relation, tnorm, "alpha") {
        return Ok(*report);
    }
    let report = alpha_identities(&relation, &set, &alpha).map_err(|e| anyhow!(e))?;
    let cut = relation.alpha_cut(&alpha);
    let cut_partition = cut.classes().map_err(|e| anyhow!(e))?;
    let over_cut = crisp_approx(&set, &cut_partition)?;
    Ok(Report::Alpha(AlphaReport {
        tnorm: tnorm.to_string(),
        alpha: alpha.to_string(),
        set: labels_of(&set),
        cut_classes: classes_of(&cut_partition),
        cut_lower_set: labels_of(&over_cut.lower),
        cut_upper_set: labels_of(&over_cut.upper),
        upper_identity_holds: report.upper_holds,
        lower_identity_holds: report.lower_holds,
    }))
}
