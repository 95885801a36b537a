//! Rough approximation operators: crisp approximation with respect to an
//! equivalence, fuzzy lower/upper approximation of a crisp set with respect
//! to a fuzzy relation, and the verified bridges between the two.

use std::sync::Arc;

use crate::degree::{Degree, DegreeValue};
use crate::error::Error;
use crate::relation::{FuzzyRelation, Partition};
use crate::set::{CrispSet, FuzzySet};

/// Lower and upper crisp approximations of a reference set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RoughPair {
    pub lower: CrispSet,
    pub upper: CrispSet,
}

/// Lower and upper fuzzy approximations of a crisp reference set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FuzzyRoughPair<V: DegreeValue> {
    pub lower: FuzzySet<V>,
    pub upper: FuzzySet<V>,
}

/// Crisp rough approximation: the lower approximation is the union of the
/// blocks contained in `a`, the upper the union of the blocks meeting `a`.
pub fn crisp_approx(a: &CrispSet, partition: &Partition) -> Result<RoughPair, Error> {
    if a.universe() != partition.universe() {
        return Err(Error::UniverseMismatch);
    }
    let mut lower = CrispSet::empty(Arc::clone(a.universe()));
    let mut upper = CrispSet::empty(Arc::clone(a.universe()));
    for block in partition.blocks() {
        if block.is_subset(a) {
            lower = lower.union(block)?;
        }
        if block.intersects(a) {
            upper = upper.union(block)?;
        }
    }
    Ok(RoughPair { lower, upper })
}

/// Fuzzy lower approximation: `x -> min { 1 - mu(x,y) | y not in a }`.
///
/// The minimum over an empty complement is 1, so the lower approximation of
/// the full universe is constantly one.
pub fn fuzzy_lower<V: DegreeValue>(
    a: &CrispSet,
    r: &FuzzyRelation<V>,
) -> Result<FuzzySet<V>, Error> {
    if a.universe() != r.universe() {
        return Err(Error::UniverseMismatch);
    }
    let n = a.universe().len();
    let complement = a.complement();
    let degrees = (0..n)
        .map(|x| {
            // 1 - max over the complement; the max is attained because the
            // universe (hence the spectrum) is finite
            let mut worst: Option<&Degree<V>> = None;
            for y in complement.iter() {
                let d = r.degree(x, y);
                if worst.is_none_or(|w| d > w) {
                    worst = Some(d);
                }
            }
            match worst {
                Some(d) => d.complement(),
                None => Degree::one(),
            }
        })
        .collect();
    FuzzySet::new(Arc::clone(a.universe()), degrees)
}

/// Fuzzy upper approximation: `x -> max { mu(x,y) | y in a }`.
///
/// The maximum over an empty set is 0, so the upper approximation of the
/// empty set is constantly zero.
pub fn fuzzy_upper<V: DegreeValue>(
    a: &CrispSet,
    r: &FuzzyRelation<V>,
) -> Result<FuzzySet<V>, Error> {
    if a.universe() != r.universe() {
        return Err(Error::UniverseMismatch);
    }
    let n = a.universe().len();
    let degrees = (0..n)
        .map(|x| {
            let mut best: Option<&Degree<V>> = None;
            for y in a.iter() {
                let d = r.degree(x, y);
                if best.is_none_or(|b| d > b) {
                    best = Some(d);
                }
            }
            best.cloned().unwrap_or_else(Degree::zero)
        })
        .collect();
    FuzzySet::new(Arc::clone(a.universe()), degrees)
}

/// Both fuzzy approximations of `a` bundled as a pair.
pub fn fuzzy_rough_pair<V: DegreeValue>(
    a: &CrispSet,
    r: &FuzzyRelation<V>,
) -> Result<FuzzyRoughPair<V>, Error> {
    Ok(FuzzyRoughPair {
        lower: fuzzy_lower(a, r)?,
        upper: fuzzy_upper(a, r)?,
    })
}

/// The crisp approximations of `a` with respect to the core and support of
/// `r`, computed two independent ways.
///
/// `verified` holds when the partition route (crisp approximation over the
/// quotient of the core/support relation) agrees with the fuzzy route (core
/// and support of the fuzzy approximations) on all four sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoreSupportBridge {
    /// Upper approximation w.r.t. the core relation; equals the core of the
    /// fuzzy upper approximation.
    pub core_upper: CrispSet,
    /// Lower approximation w.r.t. the core relation; equals the support of
    /// the fuzzy lower approximation.
    pub core_lower: CrispSet,
    /// Upper approximation w.r.t. the support relation; equals the support
    /// of the fuzzy upper approximation.
    pub support_upper: CrispSet,
    /// Lower approximation w.r.t. the support relation; equals the core of
    /// the fuzzy lower approximation.
    pub support_lower: CrispSet,
    pub verified: bool,
}

/// Computes the four crisp approximations of `a` over the core and support
/// of `r` via partitions, recomputes them as cores/supports of the fuzzy
/// approximations, and reports whether the two routes agree.
///
/// Requires the core and support of `r` to be equivalences, which holds for
/// any relation validated under a positive t-norm.
pub fn core_support_bridge<V: DegreeValue>(
    a: &CrispSet,
    r: &FuzzyRelation<V>,
) -> Result<CoreSupportBridge, Error> {
    if a.universe() != r.universe() {
        return Err(Error::UniverseMismatch);
    }
    let core_partition = r.core_relation().classes()?;
    let support_partition = r.support_relation().classes()?;
    let over_core = crisp_approx(a, &core_partition)?;
    let over_support = crisp_approx(a, &support_partition)?;
    let pair = fuzzy_rough_pair(a, r)?;
    let verified = over_core.upper == pair.upper.core()
        && over_core.lower == pair.lower.support()
        && over_support.upper == pair.upper.support()
        && over_support.lower == pair.lower.core();
    Ok(CoreSupportBridge {
        core_upper: over_core.upper,
        core_lower: over_core.lower,
        support_upper: over_support.upper,
        support_lower: over_support.lower,
        verified,
    })
}

/// Whether the fuzzy approximations of `a` are invariant under replacing
/// `a` by its crisp approximations over the core relation: the upper
/// approximation of `a` must equal that of its core-upper approximation,
/// and the lower approximation of `a` that of its core-lower approximation.
pub fn saturation_invariance<V: DegreeValue>(
    a: &CrispSet,
    r: &FuzzyRelation<V>,
) -> Result<bool, Error> {
    if a.universe() != r.universe() {
        return Err(Error::UniverseMismatch);
    }
    let partition = r.core_relation().classes()?;
    let over_core = crisp_approx(a, &partition)?;
    Ok(fuzzy_upper(a, r)? == fuzzy_upper(&over_core.upper, r)?
        && fuzzy_lower(a, r)? == fuzzy_lower(&over_core.lower, r)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{crisp, degrees, five_relation, four_relation};

    fn five_partition() -> (Arc<crate::Universe>, Partition) {
        let r = five_relation();
        let u = Arc::clone(r.universe());
        let p = r.core_relation().classes().unwrap();
        (u, p)
    }

    fn fset(u: &Arc<crate::Universe>, entries: &[&str]) -> FuzzySet<crate::Rational> {
        FuzzySet::new(Arc::clone(u), degrees(entries)).unwrap()
    }

    #[test]
    fn crisp_approximation_over_reference_partition() {
        let (u, p) = five_partition();
        let a = crisp(&u, &["a"]);
        let pair = crisp_approx(&a, &p).unwrap();
        assert!(pair.lower.is_empty());
        assert_eq!(pair.upper, crisp(&u, &["a", "b"]));

        let cde = crisp(&u, &["c", "d", "e"]);
        let pair = crisp_approx(&cde, &p).unwrap();
        assert_eq!(pair.lower, cde);
        assert_eq!(pair.upper, cde);

        let full = CrispSet::full(Arc::clone(&u));
        let pair = crisp_approx(&full, &p).unwrap();
        assert_eq!(pair.lower, full);
        assert_eq!(pair.upper, full);
    }

    #[test]
    fn crisp_approximation_checks_universes() {
        let (_, p) = five_partition();
        let w = crate::Universe::new(["x"]).unwrap();
        let a = CrispSet::full(w);
        assert!(matches!(
            crisp_approx(&a, &p),
            Err(Error::UniverseMismatch)
        ));
    }

    #[test]
    fn fuzzy_lower_examples() {
        let r = five_relation();
        let u = Arc::clone(r.universe());
        assert_eq!(
            fuzzy_lower(&crisp(&u, &["a", "b"]), &r).unwrap(),
            fset(&u, &["1/2", "1/2", "0", "0", "0"])
        );
        assert_eq!(
            fuzzy_lower(&crisp(&u, &["a", "b", "c"]), &r).unwrap(),
            fset(&u, &["1", "1", "1", "0", "0"])
        );
        assert_eq!(
            fuzzy_lower(&CrispSet::empty(Arc::clone(&u)), &r).unwrap(),
            FuzzySet::zeros(Arc::clone(&u))
        );
        assert_eq!(
            fuzzy_lower(&CrispSet::full(Arc::clone(&u)), &r).unwrap(),
            FuzzySet::ones(Arc::clone(&u))
        );
    }

    #[test]
    fn fuzzy_upper_examples() {
        let r = five_relation();
        let u = Arc::clone(r.universe());
        assert_eq!(
            fuzzy_upper(&crisp(&u, &["a"]), &r).unwrap(),
            fset(&u, &["1", "1", "1/2", "0", "0"])
        );
        assert_eq!(
            fuzzy_upper(&crisp(&u, &["c", "d"]), &r).unwrap(),
            fset(&u, &["1/2", "1/2", "1", "1", "1"])
        );
        assert_eq!(
            fuzzy_upper(&CrispSet::empty(Arc::clone(&u)), &r).unwrap(),
            FuzzySet::zeros(Arc::clone(&u))
        );
        assert_eq!(
            fuzzy_upper(&CrispSet::full(Arc::clone(&u)), &r).unwrap(),
            FuzzySet::ones(Arc::clone(&u))
        );
    }

    #[test]
    fn paired_approximations() {
        let r = five_relation();
        let u = Arc::clone(r.universe());
        let de = fuzzy_rough_pair(&crisp(&u, &["d", "e"]), &r).unwrap();
        assert_eq!(de.lower, fset(&u, &["0", "0", "0", "1", "1"]));
        assert_eq!(de.upper, fset(&u, &["0", "0", "0", "1", "1"]));

        let acd = fuzzy_rough_pair(&crisp(&u, &["a", "c", "d"]), &r).unwrap();
        assert_eq!(acd.lower, fset(&u, &["0", "0", "1/2", "0", "0"]));
        assert_eq!(acd.upper, FuzzySet::ones(Arc::clone(&u)));

        let empty = fuzzy_rough_pair(&CrispSet::empty(Arc::clone(&u)), &r).unwrap();
        assert_eq!(empty.lower, FuzzySet::zeros(Arc::clone(&u)));
        assert_eq!(empty.upper, FuzzySet::zeros(Arc::clone(&u)));
    }

    #[test]
    fn bridge_on_reference_relations() {
        let r = five_relation();
        let u = Arc::clone(r.universe());
        let ad = core_support_bridge(&crisp(&u, &["a", "d"]), &r).unwrap();
        assert!(ad.verified);
        assert!(ad.core_lower.is_empty());
        assert_eq!(ad.core_upper, crisp(&u, &["a", "b", "d", "e"]));

        let r4 = four_relation();
        let u4 = Arc::clone(r4.universe());
        let d = core_support_bridge(&crisp(&u4, &["d"]), &r4).unwrap();
        assert!(d.verified);
        assert_eq!(d.support_lower, crisp(&u4, &["d"]));
        assert_eq!(d.support_upper, crisp(&u4, &["d"]));

        let full = CrispSet::full(Arc::clone(&u));
        let b = core_support_bridge(&full, &r).unwrap();
        assert!(b.verified);
        assert_eq!(b.core_upper, full);
        assert_eq!(b.core_lower, full);
        assert_eq!(b.support_upper, full);
        assert_eq!(b.support_lower, full);
    }

    #[test]
    fn bridge_exhaustive_on_reference_relation() {
        let r = five_relation();
        let u = Arc::clone(r.universe());
        for mask in 0u64..1 << u.len() {
            let a = CrispSet::from_mask(&u, mask);
            assert!(core_support_bridge(&a, &r).unwrap().verified, "failed for {a}");
        }
    }

    #[test]
    fn saturation_invariance_examples() {
        let r = five_relation();
        let u = Arc::clone(r.universe());
        // upper approx of {a} equals upper approx of {a,b}
        assert!(saturation_invariance(&crisp(&u, &["a"]), &r).unwrap());
        // lower approx of {c,d} equals lower approx of {c}
        assert!(saturation_invariance(&crisp(&u, &["c", "d"]), &r).unwrap());
        assert!(saturation_invariance(&CrispSet::empty(Arc::clone(&u)), &r).unwrap());
        assert_eq!(
            fuzzy_upper(&crisp(&u, &["a"]), &r).unwrap(),
            fuzzy_upper(&crisp(&u, &["a", "b"]), &r).unwrap()
        );
        assert_eq!(
            fuzzy_lower(&crisp(&u, &["c", "d"]), &r).unwrap(),
            fuzzy_lower(&crisp(&u, &["c"]), &r).unwrap()
        );
    }

    #[test]
    fn containment_chain_holds_exhaustively() {
        for r in [five_relation(), four_relation()] {
            let u = Arc::clone(r.universe());
            for mask in 0u64..1 << u.len() {
                let a = CrispSet::from_mask(&u, mask);
                let pair = fuzzy_rough_pair(&a, &r).unwrap();
                assert!(pair.lower.core().is_subset(&pair.lower.support()));
                assert!(pair.lower.support().is_subset(&a));
                assert!(a.is_subset(&pair.upper.core()));
                assert!(pair.upper.core().is_subset(&pair.upper.support()));
                assert!(pair.lower.pointwise_le(&pair.upper));
            }
        }
    }

    #[test]
    fn approximations_are_monotone() {
        let r = five_relation();
        let u = Arc::clone(r.universe());
        for a_mask in 0u64..1 << u.len() {
            for b_mask in 0u64..1 << u.len() {
                if a_mask & !b_mask != 0 {
                    continue;
                }
                let a = CrispSet::from_mask(&u, a_mask);
                let b = CrispSet::from_mask(&u, b_mask);
                assert!(fuzzy_lower(&a, &r)
                    .unwrap()
                    .pointwise_le(&fuzzy_lower(&b, &r).unwrap()));
                assert!(fuzzy_upper(&a, &r)
                    .unwrap()
                    .pointwise_le(&fuzzy_upper(&b, &r).unwrap()));
            }
        }
    }

    #[test]
    fn lower_is_below_upper_from_reflexivity() {
        let (u, p) = five_partition();
        for mask in 0u64..1 << u.len() {
            let a = CrispSet::from_mask(&u, mask);
            let pair = crisp_approx(&a, &p).unwrap();
            assert!(pair.lower.is_subset(&pair.upper));
        }
    }
}
