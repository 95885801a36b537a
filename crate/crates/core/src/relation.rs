//! Fuzzy relations over a universe, their crisp sections, and validation.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_rational::BigRational;
use rand::Rng;

use crate::bits::Bits;
use crate::degree::{Degree, DegreeValue};
use crate::error::Error;
use crate::set::CrispSet;
use crate::tnorm::TNorm;
use crate::universe::Universe;

/// Validation stores at most this many violation witnesses; the boolean
/// verdicts always reflect the full scan.
pub const MAX_WITNESSES: usize = 16;

/// A fuzzy binary relation: an `n x n` matrix of membership degrees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FuzzyRelation<V: DegreeValue> {
    universe: Arc<Universe>,
    mu: Vec<Degree<V>>, // row-major
}

impl<V: DegreeValue> FuzzyRelation<V> {
    pub fn new(
        universe: impl Into<Arc<Universe>>,
        rows: Vec<Vec<Degree<V>>>,
    ) -> Result<Self, Error> {
        let universe = universe.into();
        let n = universe.len();
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        let mut mu = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            mu.extend(row);
        }
        Ok(FuzzyRelation { universe, mu })
    }

    /// The crisp equality relation viewed as a fuzzy relation.
    pub fn identity(universe: impl Into<Arc<Universe>>) -> Self {
        let universe = universe.into();
        let n = universe.len();
        let mut mu = vec![Degree::zero(); n * n];
        for x in 0..n {
            mu[x * n + x] = Degree::one();
        }
        FuzzyRelation { universe, mu }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    fn n(&self) -> usize {
        self.universe.len()
    }

    pub fn degree(&self, x: usize, y: usize) -> &Degree<V> {
        &self.mu[x * self.n() + y]
    }

    /// Checks reflexivity, symmetry and T-transitivity, collecting up to
    /// [`MAX_WITNESSES`] violations. Never fails; it reports.
    pub fn validate(&self, tnorm: TNorm) -> ValidationReport<V> {
        let n = self.n();
        let mut report = ValidationReport {
            reflexive: true,
            symmetric: true,
            t_transitive: true,
            witnesses: Vec::new(),
            // finite universe, so the spectrum is finite and every nonempty
            // subset of it has a maximum
            spectrum_dually_well_ordered: true,
        };
        for x in 0..n {
            if !self.degree(x, x).is_one() {
                report.reflexive = false;
                if report.witnesses.len() < MAX_WITNESSES {
                    report.witnesses.push(ValidationWitness::Reflexivity {
                        x,
                        degree: self.degree(x, x).clone(),
                    });
                }
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if self.degree(x, y) != self.degree(y, x) {
                    report.symmetric = false;
                    if report.witnesses.len() < MAX_WITNESSES {
                        report.witnesses.push(ValidationWitness::Symmetry {
                            x,
                            y,
                            forward: self.degree(x, y).clone(),
                            backward: self.degree(y, x).clone(),
                        });
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let composed = tnorm.apply(self.degree(x, y), self.degree(y, z));
                    if &composed > self.degree(x, z) {
                        report.t_transitive = false;
                        if report.witnesses.len() < MAX_WITNESSES {
                            report.witnesses.push(ValidationWitness::Transitivity {
                                x,
                                y,
                                z,
                                composed,
                                actual: self.degree(x, z).clone(),
                            });
                        }
                    }
                }
            }
        }
        report
    }

    /// The sorted distinct degrees occurring in the matrix.
    pub fn spectrum(&self) -> Vec<Degree<V>> {
        let set: BTreeSet<&Degree<V>> = self.mu.iter().collect();
        set.into_iter().cloned().collect()
    }

    /// The crisp relation of pairs with degree at least `alpha`.
    pub fn alpha_cut(&self, alpha: &Degree<V>) -> CrispRelation {
        let n = self.n();
        let rows = (0..n)
            .map(|x| {
                let mut row = Bits::new(n);
                for y in 0..n {
                    if self.degree(x, y) >= alpha {
                        row.set(y);
                    }
                }
                row
            })
            .collect();
        CrispRelation {
            universe: Arc::clone(&self.universe),
            rows,
        }
    }

    /// The crisp relation of pairs with degree exactly 1 (the cut at 1).
    pub fn core_relation(&self) -> CrispRelation {
        self.alpha_cut(&Degree::one())
    }

    /// The crisp relation of pairs with degree strictly above 0.
    pub fn support_relation(&self) -> CrispRelation {
        let n = self.n();
        let rows = (0..n)
            .map(|x| {
                let mut row = Bits::new(n);
                for y in 0..n {
                    if !self.degree(x, y).is_zero() {
                        row.set(y);
                    }
                }
                row
            })
            .collect();
        CrispRelation {
            universe: Arc::clone(&self.universe),
            rows,
        }
    }

    fn is_reflexive_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| self.degree(x, x).is_one())
            && (0..n).all(|x| (x + 1..n).all(|y| self.degree(x, y) == self.degree(y, x)))
    }

    pub(crate) fn check_reflexive_symmetric(&self) -> Result<(), Error> {
        if self.is_reflexive_symmetric() {
            Ok(())
        } else {
            Err(Error::PreconditionViolated {
                reason: "relation must be reflexive and symmetric".to_string(),
            })
        }
    }

    /// One max-min composition step: `mu'(x,z) = max_y min(mu(x,y), mu(y,z))`.
    fn max_min_step(&self) -> FuzzyRelation<V> {
        let n = self.n();
        let mut mu = Vec::with_capacity(n * n);
        for x in 0..n {
            for z in 0..n {
                let mut best = self.degree(x, z).clone();
                for y in 0..n {
                    let through = self.degree(x, y).min(self.degree(y, z)).clone();
                    if through > best {
                        best = through;
                    }
                }
                mu.push(best);
            }
        }
        FuzzyRelation {
            universe: Arc::clone(&self.universe),
            mu,
        }
    }

    /// The least min-transitive relation above `self`, computed by iterating
    /// the max-min composition step to a fixpoint.
    ///
    /// Requires a reflexive and symmetric input; the result then validates
    /// as a T-equivalence for the minimum t-norm.
    pub fn min_transitive_closure(&self) -> Result<FuzzyRelation<V>, Error> {
        self.check_reflexive_symmetric()?;
        let mut current = self.clone();
        loop {
            let next = current.max_min_step();
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }
}

impl FuzzyRelation<BigRational> {
    /// Builds a relation from whitespace-separated degree strings, e.g.
    /// `FuzzyRelation::from_rows(&["a", "b"], &["1 1/2", "1/2 1"])`.
    pub fn from_rows(labels: &[&str], rows: &[&str]) -> Result<Self, Error> {
        let universe = Universe::new(labels.iter().copied())?;
        let mut parsed = Vec::with_capacity(rows.len());
        for row in rows {
            let degrees: Result<Vec<Degree<BigRational>>, Error> =
                row.split_whitespace().map(str::parse).collect();
            parsed.push(degrees?);
        }
        FuzzyRelation::new(universe, parsed)
    }
}

/// Outcome of validating a fuzzy relation against the T-equivalence axioms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport<V: DegreeValue> {
    pub reflexive: bool,
    pub symmetric: bool,
    pub t_transitive: bool,
    pub witnesses: Vec<ValidationWitness<V>>,
    pub spectrum_dually_well_ordered: bool,
}

impl<V: DegreeValue> ValidationReport<V> {
    pub fn is_t_equivalence(&self) -> bool {
        self.reflexive && self.symmetric && self.t_transitive
    }
}

/// A concrete axiom violation found during validation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ValidationWitness<V: DegreeValue> {
    Reflexivity {
        x: usize,
        degree: Degree<V>,
    },
    Symmetry {
        x: usize,
        y: usize,
        forward: Degree<V>,
        backward: Degree<V>,
    },
    /// `T(mu(x,y), mu(y,z)) = composed > actual = mu(x,z)`.
    Transitivity {
        x: usize,
        y: usize,
        z: usize,
        composed: Degree<V>,
        actual: Degree<V>,
    },
}

/// A crisp binary relation as a boolean matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrispRelation {
    universe: Arc<Universe>,
    rows: Vec<Bits>,
}

impl CrispRelation {
    pub fn identity(universe: impl Into<Arc<Universe>>) -> Self {
        let universe = universe.into();
        let n = universe.len();
        let rows = (0..n)
            .map(|x| {
                let mut row = Bits::new(n);
                row.set(x);
                row
            })
            .collect();
        CrispRelation { universe, rows }
    }

    pub fn complete(universe: impl Into<Arc<Universe>>) -> Self {
        let universe = universe.into();
        let n = universe.len();
        let rows = (0..n).map(|_| Bits::full(n)).collect();
        CrispRelation { universe, rows }
    }

    /// The equivalence whose classes are the blocks of a partition.
    pub fn from_partition(partition: &Partition) -> Self {
        let universe = Arc::clone(partition.universe());
        let n = universe.len();
        let mut rows = vec![Bits::new(n); n];
        for block in partition.blocks() {
            for x in block.iter() {
                rows[x] = block.bits().clone();
            }
        }
        CrispRelation { universe, rows }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.rows[x].get(y)
    }

    /// The set of elements related to `x`.
    pub fn neighbors(&self, x: usize) -> CrispSet {
        CrispSet::from_bits(&self.universe, self.rows[x].clone())
    }

    /// Pointwise containment of the boolean matrices.
    pub fn is_subrelation(&self, other: &CrispRelation) -> bool {
        self.universe == other.universe
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(a, b)| a.is_subset(b))
    }

    /// Why this relation fails to be an equivalence, if it does.
    ///
    /// For a reflexive and symmetric relation, transitivity is equivalent to
    /// related elements having identical rows, which is what gets checked.
    pub fn equivalence_violation(&self) -> Option<String> {
        let n = self.universe.len();
        for x in 0..n {
            if !self.related(x, x) {
                return Some(format!("not reflexive at {}", self.universe.label(x)));
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if self.related(x, y) != self.related(y, x) {
                    return Some(format!(
                        "not symmetric at ({},{})",
                        self.universe.label(x),
                        self.universe.label(y)
                    ));
                }
            }
        }
        for x in 0..n {
            for y in self.rows[x].ones() {
                if self.rows[x] != self.rows[y] {
                    return Some(format!(
                        "not transitive: {} and {} are related but have different classes",
                        self.universe.label(x),
                        self.universe.label(y)
                    ));
                }
            }
        }
        None
    }

    pub fn is_equivalence(&self) -> bool {
        self.equivalence_violation().is_none()
    }

    /// The quotient partition of an equivalence relation.
    pub fn classes(&self) -> Result<Partition, Error> {
        if let Some(reason) = self.equivalence_violation() {
            return Err(Error::NotAnEquivalence { reason });
        }
        let n = self.universe.len();
        let mut seen = Bits::new(n);
        let mut blocks = Vec::new();
        for x in 0..n {
            if !seen.get(x) {
                seen.union_in_place(&self.rows[x]);
                blocks.push(CrispSet::from_bits(&self.universe, self.rows[x].clone()));
            }
        }
        Ok(Partition {
            universe: Arc::clone(&self.universe),
            blocks,
        })
    }
}

/// A partition of the universe into disjoint nonempty blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    universe: Arc<Universe>,
    blocks: Vec<CrispSet>,
}

impl Partition {
    pub fn from_blocks(
        universe: impl Into<Arc<Universe>>,
        blocks: Vec<CrispSet>,
    ) -> Result<Self, Error> {
        let universe = universe.into();
        let mut covered = Bits::new(universe.len());
        for block in &blocks {
            if block.universe() != &universe {
                return Err(Error::UniverseMismatch);
            }
            if block.is_empty() {
                return Err(Error::PreconditionViolated {
                    reason: "partition blocks must be nonempty".to_string(),
                });
            }
            if covered.intersects(block.bits()) {
                return Err(Error::PreconditionViolated {
                    reason: "partition blocks must be disjoint".to_string(),
                });
            }
            covered.union_in_place(block.bits());
        }
        if covered != Bits::full(universe.len()) {
            return Err(Error::PreconditionViolated {
                reason: "partition blocks must cover the universe".to_string(),
            });
        }
        Ok(Partition { universe, blocks })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn blocks(&self) -> &[CrispSet] {
        &self.blocks
    }

    pub fn block_of(&self, index: usize) -> &CrispSet {
        self.blocks
            .iter()
            .find(|b| b.contains(index))
            .expect("partition covers the universe")
    }
}

/// Draws a random fuzzy equivalence for the minimum t-norm: symmetric
/// entries from the grid `{0, 1/4, 1/2, 3/4, 1}` with a unit diagonal,
/// then min-transitively closed. Closure only shuffles existing values,
/// so the spectrum stays inside the grid and lattices stay small.
pub fn random_min_equivalence<V: DegreeValue, R: Rng + ?Sized>(
    universe: impl Into<Arc<Universe>>,
    rng: &mut R,
) -> FuzzyRelation<V> {
    let universe = universe.into();
    let n = universe.len();
    let quarter = {
        let two = V::one() + V::one();
        V::one() / (two.clone() * two)
    };
    let grid: Vec<Degree<V>> = (0..=4)
        .map(|k| {
            let mut value = V::zero();
            for _ in 0..k {
                value = value + quarter.clone();
            }
            Degree::new_unchecked(value)
        })
        .collect();
    let mut rows = vec![vec![Degree::zero(); n]; n];
    for x in 0..n {
        rows[x][x] = Degree::one();
        for y in x + 1..n {
            let pick = grid[rng.random_range(0..grid.len())].clone();
            rows[x][y] = pick.clone();
            rows[y][x] = pick;
        }
    }
    FuzzyRelation::new(universe, rows)
        .expect("square by construction")
        .min_transitive_closure()
        .expect("reflexive and symmetric by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{crisp, degree, five_relation, five_universe, four_relation};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn block_labels(p: &Partition) -> Vec<Vec<String>> {
        p.blocks()
            .iter()
            .map(|b| b.member_labels().iter().map(|s| s.to_string()).collect())
            .collect()
    }

    #[test]
    fn reference_relation_is_a_min_equivalence() {
        let r = five_relation();
        let report = r.validate(TNorm::Minimum);
        assert!(report.reflexive && report.symmetric && report.t_transitive);
        assert!(report.witnesses.is_empty());
        assert!(report.spectrum_dually_well_ordered);
        assert!(report.is_t_equivalence());
    }

    #[test]
    fn identity_validates_under_every_tnorm() {
        let u = five_universe();
        let r = FuzzyRelation::<crate::Rational>::identity(u);
        for t in [TNorm::Minimum, TNorm::Product, TNorm::Lukasiewicz] {
            assert!(r.validate(t).is_t_equivalence());
        }
    }

    #[test]
    fn perturbed_relation_fails_transitivity_with_witness() {
        // raise the a-c entry of the five-element relation to 0.9
        let r = FuzzyRelation::from_rows(
            &["a", "b", "c", "d", "e"],
            &[
                "1 1 0.9 0 0",
                "1 1 0.5 0 0",
                "0.9 0.5 1 0 0",
                "0 0 0 1 1",
                "0 0 0 1 1",
            ],
        )
        .unwrap();
        let report = r.validate(TNorm::Minimum);
        assert!(report.reflexive && report.symmetric);
        assert!(!report.t_transitive);
        assert!(!report.witnesses.is_empty());
        // min(mu(c,a), mu(a,b)) = 0.9 > 0.5 = mu(c,b)
        let expected = ValidationWitness::Transitivity {
            x: 2,
            y: 0,
            z: 1,
            composed: degree("9/10"),
            actual: degree("1/2"),
        };
        assert!(report.witnesses.contains(&expected));
        // brute-force cross-check: every reported witness is a real violation
        for w in &report.witnesses {
            if let ValidationWitness::Transitivity { x, y, z, composed, actual } = w {
                assert_eq!(composed, &TNorm::Minimum.apply(r.degree(*x, *y), r.degree(*y, *z)));
                assert_eq!(actual, r.degree(*x, *z));
                assert!(composed > actual);
            }
        }
    }

    #[test]
    fn witness_list_is_capped() {
        let u = Universe::new(["a", "b", "c", "d", "e"]).unwrap();
        let n = u.len();
        let mut rows = vec![vec![Degree::zero(); n]; n];
        for (x, row) in rows.iter_mut().enumerate() {
            row[x] = Degree::zero(); // every diagonal entry violates reflexivity
        }
        let r = FuzzyRelation::<crate::Rational>::new(u, rows).unwrap();
        let report = r.validate(TNorm::Minimum);
        assert!(!report.reflexive);
        assert!(report.witnesses.len() <= MAX_WITNESSES);
    }

    #[test]
    fn spectra() {
        assert_eq!(
            five_relation().spectrum(),
            vec![degree("0"), degree("1/2"), degree("1")]
        );
        assert_eq!(
            four_relation().spectrum(),
            vec![degree("0"), degree("3/10"), degree("1")]
        );
        let u = Universe::new(["x", "y"]).unwrap();
        assert_eq!(
            FuzzyRelation::<crate::Rational>::identity(u).spectrum(),
            vec![degree("0"), degree("1")]
        );
    }

    #[test]
    fn alpha_cuts_of_reference_relation() {
        let r = five_relation();
        let at_one = r.alpha_cut(&degree("1"));
        assert_eq!(
            block_labels(&at_one.classes().unwrap()),
            vec![vec!["a", "b"], vec!["c"], vec!["d", "e"]]
        );
        let at_half = r.alpha_cut(&degree("1/2"));
        assert_eq!(
            block_labels(&at_half.classes().unwrap()),
            vec![vec!["a", "b", "c"], vec!["d", "e"]]
        );
        let at_zero = r.alpha_cut(&degree("0"));
        assert_eq!(at_zero, CrispRelation::complete(Arc::clone(r.universe())));
    }

    #[test]
    fn core_and_support_relations() {
        let r5 = five_relation();
        assert_eq!(r5.core_relation(), r5.alpha_cut(&degree("1")));
        assert_eq!(
            block_labels(&r5.support_relation().classes().unwrap()),
            vec![vec!["a", "b", "c"], vec!["d", "e"]]
        );

        let r4 = four_relation();
        assert_eq!(
            block_labels(&r4.core_relation().classes().unwrap()),
            vec![vec!["a", "b"], vec!["c"], vec!["d"]]
        );
        assert_eq!(
            block_labels(&r4.support_relation().classes().unwrap()),
            vec![vec!["a", "b", "c"], vec!["d"]]
        );

        let id = FuzzyRelation::<crate::Rational>::identity(five_universe());
        assert_eq!(id.core_relation(), id.support_relation());
        assert_eq!(id.core_relation().classes().unwrap().blocks().len(), 5);
    }

    #[test]
    fn cut_monotonicity_on_reference_relation() {
        let r = five_relation();
        let spectrum = r.spectrum();
        for (i, lo) in spectrum.iter().enumerate() {
            for hi in &spectrum[i..] {
                assert!(r.alpha_cut(hi).is_subrelation(&r.alpha_cut(lo)));
            }
        }
        assert!(r.core_relation().is_subrelation(&r.support_relation()));
    }

    #[test]
    fn classes_rejects_non_equivalences() {
        let u = Arc::new(Universe::new(["a", "b", "c"]).unwrap());
        // reflexive, symmetric, not transitive: a-b, b-c, but not a-c
        let r = FuzzyRelation::from_rows(
            &["a", "b", "c"],
            &["1 1 0", "1 1 1", "0 1 1"],
        )
        .unwrap();
        let cut = r.alpha_cut(&degree("1"));
        assert!(matches!(
            cut.classes(),
            Err(Error::NotAnEquivalence { .. })
        ));
        drop(u);
    }

    #[test]
    fn complete_relation_has_one_block() {
        let u = Arc::new(five_universe());
        let c = CrispRelation::complete(Arc::clone(&u));
        let p = c.classes().unwrap();
        assert_eq!(p.blocks().len(), 1);
        assert_eq!(p.blocks()[0], CrispSet::full(Arc::clone(&u)));
    }

    #[test]
    fn partition_round_trips_through_relation() {
        let u = Arc::new(five_universe());
        let p = Partition::from_blocks(
            Arc::clone(&u),
            vec![crisp(&u, &["a", "b"]), crisp(&u, &["c"]), crisp(&u, &["d", "e"])],
        )
        .unwrap();
        let rel = CrispRelation::from_partition(&p);
        assert!(rel.is_equivalence());
        assert_eq!(rel.classes().unwrap(), p);
        assert_eq!(p.block_of(0), &crisp(&u, &["a", "b"]));
        assert_eq!(p.block_of(2), &crisp(&u, &["c"]));
    }

    #[test]
    fn partition_invariants_enforced() {
        let u = Arc::new(five_universe());
        let overlap = Partition::from_blocks(
            Arc::clone(&u),
            vec![crisp(&u, &["a", "b"]), crisp(&u, &["b", "c", "d", "e"])],
        );
        assert!(overlap.is_err());
        let gap = Partition::from_blocks(Arc::clone(&u), vec![crisp(&u, &["a", "b"])]);
        assert!(gap.is_err());
    }

    #[test]
    fn closure_is_identity_on_already_transitive_input() {
        let r = five_relation();
        assert_eq!(r.min_transitive_closure().unwrap(), r);
        let id = FuzzyRelation::<crate::Rational>::identity(five_universe());
        assert_eq!(id.min_transitive_closure().unwrap(), id);
    }

    #[test]
    fn closure_lifts_missing_edge() {
        let r = FuzzyRelation::from_rows(
            &["a", "b", "c"],
            &["1 0.8 0", "0.8 1 0.6", "0 0.6 1"],
        )
        .unwrap();
        let closed = r.min_transitive_closure().unwrap();
        assert_eq!(closed.degree(0, 2), &degree("0.6"));
        assert_eq!(closed.degree(2, 0), &degree("0.6"));
        assert_eq!(closed.degree(0, 1), &degree("0.8"));
        assert!(closed.validate(TNorm::Minimum).is_t_equivalence());
        // fixpoint: one more composition step changes nothing
        assert_eq!(closed.max_min_step(), closed);
    }

    #[test]
    fn closure_requires_reflexive_symmetric() {
        let r = FuzzyRelation::from_rows(&["a", "b"], &["1 1/2", "1/4 1"]).unwrap();
        assert!(matches!(
            r.min_transitive_closure(),
            Err(Error::PreconditionViolated { .. })
        ));
    }

    #[test]
    fn random_instances_validate_and_pointwise_dominate_seed() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.random_range(2..=6);
            let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
            let u = Universe::new(labels).unwrap();
            let r: FuzzyRelation<crate::Rational> = random_min_equivalence(u, &mut rng);
            assert!(r.validate(TNorm::Minimum).is_t_equivalence());
        }
    }

    #[test]
    fn related_elements_are_indistinguishable_from_outside() {
        // for a validated relation: y in the class of x under the core
        // implies mu(z,x) = mu(z,y) for every z
        for r in [five_relation(), four_relation()] {
            let n = r.universe().len();
            let core = r.core_relation();
            for x in 0..n {
                for y in 0..n {
                    if core.related(x, y) {
                        for z in 0..n {
                            assert_eq!(r.degree(z, x), r.degree(z, y));
                        }
                    }
                }
            }
        }
    }
}
