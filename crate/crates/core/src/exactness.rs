//! Exact-set analysis, the three-valued uncertainty shortcut, and the
//! identities relating alpha-cut approximation to threshold sets of the
//! fuzzy approximations.

use std::sync::Arc;

use crate::approx::{crisp_approx, fuzzy_rough_pair, FuzzyRoughPair};
use crate::degree::{Degree, DegreeValue};
use crate::error::Error;
use crate::lattice::ENUMERATION_CAP;
use crate::relation::{CrispRelation, FuzzyRelation};
use crate::set::{CrispSet, FuzzySet};

/// Exactness verdicts for one reference set.
///
/// `fuzzy_exact` means the fuzzy lower and upper approximations coincide
/// pointwise; `s_exact` means the crisp approximations over the support
/// relation coincide. On a relation validated under a positive t-norm the
/// two verdicts always agree, making the exact sets precisely the unions of
/// support classes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactnessRecord {
    pub set: CrispSet,
    pub fuzzy_exact: bool,
    pub s_exact: bool,
    pub agree: bool,
}

/// One [`ExactnessRecord`] per reference subset, in mask order.
pub fn exactness_scan<V: DegreeValue>(
    r: &FuzzyRelation<V>,
) -> Result<Vec<ExactnessRecord>, Error> {
    let universe = Arc::clone(r.universe());
    let n = universe.len();
    if n > ENUMERATION_CAP.min(63) {
        return Err(Error::UniverseTooLarge {
            size: n,
            cap: ENUMERATION_CAP,
        });
    }
    let support_partition = r.support_relation().classes()?;
    let mut records = Vec::with_capacity(1 << n);
    for mask in 0..1u64 << n {
        let set = CrispSet::from_mask(&universe, mask);
        let pair = fuzzy_rough_pair(&set, r)?;
        let fuzzy_exact = pair.lower == pair.upper;
        let over_support = crisp_approx(&set, &support_partition)?;
        let s_exact = over_support.lower == over_support.upper;
        records.push(ExactnessRecord {
            set,
            fuzzy_exact,
            s_exact,
            agree: fuzzy_exact == s_exact,
        });
    }
    Ok(records)
}

/// The exact reference sets of a relation, in mask order.
pub fn exact_sets<V: DegreeValue>(r: &FuzzyRelation<V>) -> Result<Vec<CrispSet>, Error> {
    Ok(exactness_scan(r)?
        .into_iter()
        .filter(|rec| rec.fuzzy_exact)
        .map(|rec| rec.set)
        .collect())
}

/// Fuzzy rough approximation under three-valued uncertainty: pairs are
/// certainly related (`certain`), possibly related (`possible`), or
/// certainly unrelated.
///
/// The pair is computed two ways — by the case formulas over the crisp
/// approximations for `certain` and `possible`, and by the general
/// operators on the induced relation (degree 1 on `certain`, 1/2 on
/// `possible \ certain`, 0 elsewhere) — and the routes must agree.
///
/// Requires `certain` to be contained in `possible` and both to be
/// equivalences; the induced relation is then automatically a fuzzy
/// equivalence for the minimum t-norm.
pub fn three_valued_approx<V: DegreeValue>(
    certain: &CrispRelation,
    possible: &CrispRelation,
    a: &CrispSet,
) -> Result<FuzzyRoughPair<V>, Error> {
    let universe = Arc::clone(certain.universe());
    if possible.universe() != &universe || a.universe() != &universe {
        return Err(Error::UniverseMismatch);
    }
    if !certain.is_subrelation(possible) {
        return Err(Error::PreconditionViolated {
            reason: "certain relation must be contained in the possible relation".to_string(),
        });
    }
    for (relation, name) in [(certain, "certain"), (possible, "possible")] {
        if let Some(reason) = relation.equivalence_violation() {
            return Err(Error::PreconditionViolated {
                reason: format!("{name} relation is not an equivalence: {reason}"),
            });
        }
    }
    let n = universe.len();

    // route one: case formulas over the crisp approximations
    let over_certain = crisp_approx(a, &certain.classes()?)?;
    let over_possible = crisp_approx(a, &possible.classes()?)?;
    let half = Degree::<V>::half();
    let by_cases = |full: &CrispSet, partial: &CrispSet| -> FuzzySet<V> {
        let degrees = (0..n)
            .map(|x| {
                if full.contains(x) {
                    Degree::one()
                } else if partial.contains(x) {
                    half.clone()
                } else {
                    Degree::zero()
                }
            })
            .collect();
        FuzzySet::new(Arc::clone(&universe), degrees).expect("degree per element")
    };
    // lower: 1 on the possible-lower approximation, 1/2 on the rest of the
    // certain-lower approximation; upper: 1 on the certain-upper, 1/2 on the
    // rest of the possible-upper
    let case_pair = FuzzyRoughPair {
        lower: by_cases(&over_possible.lower, &over_certain.lower),
        upper: by_cases(&over_certain.upper, &over_possible.upper),
    };

    // route two: the general operators on the induced relation
    let rows = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    if certain.related(x, y) {
                        Degree::one()
                    } else if possible.related(x, y) {
                        half.clone()
                    } else {
                        Degree::zero()
                    }
                })
                .collect()
        })
        .collect();
    let induced = FuzzyRelation::new(Arc::clone(&universe), rows)?;
    let general_pair = fuzzy_rough_pair(a, &induced)?;

    if case_pair != general_pair {
        return Err(Error::CrossCheckFailed {
            detail: format!(
                "three-valued case formulas disagree with the general operators for {a}"
            ),
        });
    }
    Ok(general_pair)
}

/// Verdicts for the two alpha-cut approximation identities.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AlphaIdentityReport {
    /// Upper approximation over the alpha-cut equals `{ x | upper(x) >= alpha }`.
    pub upper_holds: bool,
    /// Lower approximation over the alpha-cut equals `{ x | lower(x) > 1 - alpha }`.
    pub lower_holds: bool,
}

impl AlphaIdentityReport {
    pub fn both_hold(&self) -> bool {
        self.upper_holds && self.lower_holds
    }
}

/// Compares the crisp approximations of `a` over the alpha-cut of `r` with
/// the threshold sets of the fuzzy approximations. Requires `0 < alpha <= 1`;
/// the inequality in the lower identity is strict, exactly as stated.
pub fn alpha_identities<V: DegreeValue>(
    r: &FuzzyRelation<V>,
    a: &CrispSet,
    alpha: &Degree<V>,
) -> Result<AlphaIdentityReport, Error> {
    if alpha.is_zero() {
        return Err(Error::InvalidAlpha);
    }
    if a.universe() != r.universe() {
        return Err(Error::UniverseMismatch);
    }
    let universe = Arc::clone(r.universe());
    let n = universe.len();
    let cut_partition = r.alpha_cut(alpha).classes()?;
    let over_cut = crisp_approx(a, &cut_partition)?;
    let pair = fuzzy_rough_pair(a, r)?;

    let threshold = alpha.complement(); // 1 - alpha
    let mut upper_set = CrispSet::empty(Arc::clone(&universe));
    let mut lower_set = CrispSet::empty(Arc::clone(&universe));
    let mut upper_indices = Vec::new();
    let mut lower_indices = Vec::new();
    for x in 0..n {
        if pair.upper.degree(x) >= alpha {
            upper_indices.push(x);
        }
        if pair.lower.degree(x) > &threshold {
            lower_indices.push(x);
        }
    }
    if !upper_indices.is_empty() {
        upper_set = CrispSet::from_indices(Arc::clone(&universe), upper_indices)?;
    }
    if !lower_indices.is_empty() {
        lower_set = CrispSet::from_indices(Arc::clone(&universe), lower_indices)?;
    }

    Ok(AlphaIdentityReport {
        upper_holds: over_cut.upper == upper_set,
        lower_holds: over_cut.lower == lower_set,
    })
}

/// The alpha values worth testing: every nonzero spectrum value plus the
/// midpoint of each consecutive spectrum pair. The threshold sets are
/// piecewise constant in alpha and only change at spectrum values, so this
/// sweep is exhaustive over behaviours.
pub fn alpha_sweep<V: DegreeValue>(r: &FuzzyRelation<V>) -> Vec<Degree<V>> {
    let spectrum = r.spectrum();
    let mut sweep = Vec::new();
    for (i, value) in spectrum.iter().enumerate() {
        if !value.is_zero() {
            sweep.push(value.clone());
        }
        if let Some(next) = spectrum.get(i + 1) {
            sweep.push(value.midpoint(next));
        }
    }
    sweep.sort();
    sweep.dedup();
    sweep
}
