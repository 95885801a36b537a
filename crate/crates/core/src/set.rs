//! Crisp and fuzzy subsets of a universe.

use std::fmt;
use std::sync::Arc;

use crate::bits::Bits;
use crate::degree::{Degree, DegreeValue};
use crate::error::Error;
use crate::universe::Universe;

/// A crisp subset, stored as an index set. Equality is extensional.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CrispSet {
    universe: Arc<Universe>,
    bits: Bits,
}

impl CrispSet {
    pub fn empty(universe: impl Into<Arc<Universe>>) -> Self {
        let universe = universe.into();
        let bits = Bits::new(universe.len());
        CrispSet { universe, bits }
    }

    pub fn full(universe: impl Into<Arc<Universe>>) -> Self {
        let universe = universe.into();
        let bits = Bits::full(universe.len());
        CrispSet { universe, bits }
    }

    pub fn from_indices<I>(universe: impl Into<Arc<Universe>>, indices: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = usize>,
    {
        let universe = universe.into();
        let mut bits = Bits::new(universe.len());
        for i in indices {
            if i >= universe.len() {
                return Err(Error::DimensionMismatch {
                    expected: universe.len(),
                    found: i + 1,
                });
            }
            bits.set(i);
        }
        Ok(CrispSet { universe, bits })
    }

    pub fn from_labels<'a, I>(universe: impl Into<Arc<Universe>>, labels: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let universe = universe.into();
        let mut bits = Bits::new(universe.len());
        for label in labels {
            match universe.index_of(label) {
                Some(i) => bits.set(i),
                None => return Err(Error::UnknownLabel(label.to_string())),
            }
        }
        Ok(CrispSet { universe, bits })
    }

    /// Builds the subset whose members are the set bits of `mask`.
    pub(crate) fn from_mask(universe: &Arc<Universe>, mask: u64) -> Self {
        debug_assert!(universe.len() <= 64);
        let mut bits = Bits::new(universe.len());
        for i in 0..universe.len() {
            if mask >> i & 1 == 1 {
                bits.set(i);
            }
        }
        CrispSet {
            universe: Arc::clone(universe),
            bits,
        }
    }

    pub(crate) fn from_bits(universe: &Arc<Universe>, bits: Bits) -> Self {
        debug_assert_eq!(bits.len(), universe.len());
        CrispSet {
            universe: Arc::clone(universe),
            bits,
        }
    }

    pub(crate) fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn contains(&self, index: usize) -> bool {
        self.bits.get(index)
    }

    pub fn cardinality(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn member_labels(&self) -> Vec<&str> {
        self.iter().map(|i| self.universe.label(i)).collect()
    }

    /// Subset test; sets over different universes are never comparable.
    pub fn is_subset(&self, other: &CrispSet) -> bool {
        self.universe == other.universe && self.bits.is_subset(&other.bits)
    }

    pub fn intersects(&self, other: &CrispSet) -> bool {
        self.universe == other.universe && self.bits.intersects(&other.bits)
    }

    pub fn union(&self, other: &CrispSet) -> Result<CrispSet, Error> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        let mut bits = self.bits.clone();
        bits.union_in_place(&other.bits);
        Ok(CrispSet {
            universe: Arc::clone(&self.universe),
            bits,
        })
    }

    pub fn intersection(&self, other: &CrispSet) -> Result<CrispSet, Error> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        Ok(CrispSet {
            universe: Arc::clone(&self.universe),
            bits: self.bits.intersection(&other.bits),
        })
    }

    pub fn complement(&self) -> CrispSet {
        CrispSet {
            universe: Arc::clone(&self.universe),
            bits: self.bits.complement(),
        }
    }
}

impl fmt::Display for CrispSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        write!(f, "{{{}}}", self.member_labels().join(","))
    }
}

/// A fuzzy subset: one membership degree per universe element.
///
/// The derived `Ord` is lexicographic and exists for deterministic sorting
/// and deduplication; the pointwise order used by approximation lattices is
/// [`FuzzySet::pointwise_le`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FuzzySet<V: DegreeValue> {
    universe: Arc<Universe>,
    degrees: Vec<Degree<V>>,
}

impl<V: DegreeValue> FuzzySet<V> {
    pub fn new(
        universe: impl Into<Arc<Universe>>,
        degrees: Vec<Degree<V>>,
    ) -> Result<Self, Error> {
        let universe = universe.into();
        if degrees.len() != universe.len() {
            return Err(Error::DimensionMismatch {
                expected: universe.len(),
                found: degrees.len(),
            });
        }
        Ok(FuzzySet { universe, degrees })
    }

    pub fn constant(universe: impl Into<Arc<Universe>>, degree: Degree<V>) -> Self {
        let universe = universe.into();
        let degrees = vec![degree; universe.len()];
        FuzzySet { universe, degrees }
    }

    pub fn zeros(universe: impl Into<Arc<Universe>>) -> Self {
        Self::constant(universe, Degree::zero())
    }

    pub fn ones(universe: impl Into<Arc<Universe>>) -> Self {
        Self::constant(universe, Degree::one())
    }

    /// The characteristic function of a crisp set.
    pub fn indicator(set: &CrispSet) -> Self {
        let universe = Arc::clone(set.universe());
        let degrees = (0..universe.len())
            .map(|i| if set.contains(i) { Degree::one() } else { Degree::zero() })
            .collect();
        FuzzySet { universe, degrees }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn degree(&self, index: usize) -> &Degree<V> {
        &self.degrees[index]
    }

    pub fn degrees(&self) -> &[Degree<V>] {
        &self.degrees
    }

    /// The elements with membership degree exactly 1.
    pub fn core(&self) -> CrispSet {
        let mut bits = Bits::new(self.universe.len());
        for (i, d) in self.degrees.iter().enumerate() {
            if d.is_one() {
                bits.set(i);
            }
        }
        CrispSet::from_bits(&self.universe, bits)
    }

    /// The elements with membership degree strictly above 0.
    pub fn support(&self) -> CrispSet {
        let mut bits = Bits::new(self.universe.len());
        for (i, d) in self.degrees.iter().enumerate() {
            if !d.is_zero() {
                bits.set(i);
            }
        }
        CrispSet::from_bits(&self.universe, bits)
    }

    /// Pointwise comparison; false for sets over different universes.
    pub fn pointwise_le(&self, other: &FuzzySet<V>) -> bool {
        self.universe == other.universe
            && self
                .degrees
                .iter()
                .zip(&other.degrees)
                .all(|(a, b)| a <= b)
    }
}

impl<V: DegreeValue> fmt::Display for FuzzySet<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}
