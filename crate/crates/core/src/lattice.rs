//! Enumeration of rough approximation lattices and verification of their
//! order structure.
//!
//! Both the crisp family (pairs of crisp approximations over an equivalence)
//! and the fuzzy family (pairs of fuzzy approximations over a fuzzy
//! relation) are enumerated by iterating every reference subset,
//! deduplicating the resulting pairs, and building the component-wise order
//! explicitly. Meets and joins are read off the enumerated order by scan;
//! no closed-form formula on pairs is assumed, brute force is sound at this
//! scale.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::approx::{crisp_approx, fuzzy_rough_pair, FuzzyRoughPair, RoughPair};
use crate::bits::Bits;
use crate::degree::DegreeValue;
use crate::error::Error;
use crate::relation::{FuzzyRelation, Partition};
use crate::set::CrispSet;

/// Default cap on the universe size for subset enumeration.
pub const ENUMERATION_CAP: usize = 16;

/// Cap on the lattice size for the exhaustive all-subsets bounds check.
pub const COMPLETE_CHECK_CAP: usize = 20;

/// An approximation pair that can live in a [`RoughLattice`].
///
/// `Ord` is any total order used for deterministic deduplication and
/// storage; `pair_le` is the component-wise approximation order.
pub trait ApproxPair: Clone + Ord {
    fn pair_le(&self, other: &Self) -> bool;

    /// Rows for diagram labels: upper approximation first, then lower.
    fn dot_rows(&self) -> (String, String);
}

impl ApproxPair for RoughPair {
    fn pair_le(&self, other: &Self) -> bool {
        self.lower.is_subset(&other.lower) && self.upper.is_subset(&other.upper)
    }

    fn dot_rows(&self) -> (String, String) {
        let indicator = |set: &CrispSet| {
            (0..set.universe().len())
                .map(|i| if set.contains(i) { "1" } else { "0" })
                .collect::<Vec<_>>()
                .join(" ")
        };
        (indicator(&self.upper), indicator(&self.lower))
    }
}

impl<V: DegreeValue> ApproxPair for FuzzyRoughPair<V> {
    fn pair_le(&self, other: &Self) -> bool {
        self.lower.pointwise_le(&other.lower) && self.upper.pointwise_le(&other.upper)
    }

    fn dot_rows(&self) -> (String, String) {
        (self.upper.to_string(), self.lower.to_string())
    }
}

/// A deduplicated family of approximation pairs with its component-wise
/// order, cover relation, and one witness reference set per element.
#[derive(Clone, Debug)]
pub struct RoughLattice<P: ApproxPair> {
    elements: Vec<P>,
    representatives: Vec<CrispSet>,
    up: Vec<Bits>,   // up[i] = { j | i <= j }, including i
    down: Vec<Bits>, // down[j] = { i | i <= j }, including j
    covers: Vec<(usize, usize)>,
}

impl<P: ApproxPair> RoughLattice<P> {
    /// Builds the order structure over the given pairs, deduplicating exact
    /// duplicates and keeping the first representative of each element.
    pub fn from_elements(pairs: Vec<(P, CrispSet)>) -> Self {
        let mut dedup: BTreeMap<P, CrispSet> = BTreeMap::new();
        for (pair, representative) in pairs {
            dedup.entry(pair).or_insert(representative);
        }
        let (elements, representatives): (Vec<P>, Vec<CrispSet>) = dedup.into_iter().unzip();
        let n = elements.len();
        let mut up = vec![Bits::new(n); n];
        let mut down = vec![Bits::new(n); n];
        for i in 0..n {
            for j in 0..n {
                if elements[i].pair_le(&elements[j]) {
                    up[i].set(j);
                    down[j].set(i);
                }
            }
        }
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && up[i].get(j) {
                    let mut between = up[i].intersection(&down[j]);
                    between.unset(i);
                    between.unset(j);
                    if between.is_empty() {
                        covers.push((i, j));
                    }
                }
            }
        }
        RoughLattice {
            elements,
            representatives,
            up,
            down,
            covers,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, index: usize) -> &P {
        &self.elements[index]
    }

    pub fn elements(&self) -> &[P] {
        &self.elements
    }

    /// One reference set whose approximations equal this element.
    pub fn representative(&self, index: usize) -> &CrispSet {
        &self.representatives[index]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].get(j)
    }

    /// The cover relation `(lower, upper)`: the transitive reduction of the
    /// order.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, pair: &P) -> Option<usize> {
        self.elements.binary_search(pair).ok()
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.up[i].count() == self.len())
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.down[i].count() == self.len())
    }

    fn greatest_of(&self, mask: &Bits) -> Option<usize> {
        mask.ones().find(|&m| mask.is_subset(&self.down[m]))
    }

    fn least_of(&self, mask: &Bits) -> Option<usize> {
        mask.ones().find(|&m| mask.is_subset(&self.up[m]))
    }

    fn meet_of(&self, i: usize, j: usize) -> Option<usize> {
        self.greatest_of(&self.down[i].intersection(&self.down[j]))
    }

    fn join_of(&self, i: usize, j: usize) -> Option<usize> {
        self.least_of(&self.up[i].intersection(&self.up[j]))
    }

    /// The meet and join of two elements, found by scanning the order.
    ///
    /// Fails with [`Error::NotALattice`] if the common lower bounds have no
    /// unique maximum or the common upper bounds no unique minimum.
    pub fn bounds(&self, i: usize, j: usize) -> Result<BinaryBounds, Error> {
        let meet = self.meet_of(i, j).ok_or_else(|| Error::NotALattice {
            reason: format!("elements {i} and {j} have no greatest common lower bound"),
        })?;
        let join = self.join_of(i, j).ok_or_else(|| Error::NotALattice {
            reason: format!("elements {i} and {j} have no least common upper bound"),
        })?;
        Ok(BinaryBounds { meet, join })
    }

    /// Exhaustively checks that every subset of elements has a least upper
    /// bound and a greatest lower bound, i.e. completeness beyond binary
    /// meets and joins. Capped at [`COMPLETE_CHECK_CAP`] elements.
    pub fn verify_subset_bounds(&self) -> Result<(), Error> {
        let n = self.len();
        if n > COMPLETE_CHECK_CAP {
            return Err(Error::LatticeTooLarge {
                size: n,
                cap: COMPLETE_CHECK_CAP,
            });
        }
        let up: Vec<u64> = self.up.iter().map(Bits::low_word).collect();
        let down: Vec<u64> = self.down.iter().map(Bits::low_word).collect();
        let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
        for subset in 0..=full {
            // common upper bounds of the subset, then its least element
            let mut ub = full;
            let mut lb = full;
            for i in 0..n {
                if subset >> i & 1 == 1 {
                    ub &= up[i];
                    lb &= down[i];
                }
            }
            let has_least = (0..n).any(|m| ub >> m & 1 == 1 && ub & !up[m] == 0);
            if !has_least {
                return Err(Error::NotALattice {
                    reason: format!("element subset {subset:#x} has no least upper bound"),
                });
            }
            let has_greatest = (0..n).any(|m| lb >> m & 1 == 1 && lb & !down[m] == 0);
            if !has_greatest {
                return Err(Error::NotALattice {
                    reason: format!("element subset {subset:#x} has no greatest lower bound"),
                });
            }
        }
        Ok(())
    }

    /// Length of the longest chain from a minimal element up to each node.
    fn ranks(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.down[i].count());
        let mut rank = vec![0usize; n];
        for &i in &order {
            for &(lo, hi) in &self.covers {
                if hi == i {
                    rank[i] = rank[i].max(rank[lo] + 1);
                }
            }
        }
        rank
    }

    /// Renders the Hasse diagram as Graphviz DOT text.
    ///
    /// Each node is a two-row record, upper approximation on top. Nodes are
    /// emitted sorted by (rank, label) and edges by node id, so the output
    /// is byte-stable across runs and platforms.
    pub fn to_dot(&self) -> String {
        let n = self.len();
        let ranks = self.ranks();
        let labels: Vec<String> = self
            .elements
            .iter()
            .map(|p| {
                let (upper, lower) = p.dot_rows();
                format!("{{{upper}|{lower}}}")
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| (ranks[a], &labels[a]).cmp(&(ranks[b], &labels[b])));
        let mut id = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            id[old] = new;
        }
        let mut out = String::from("digraph rough_lattice {\n  rankdir=BT;\n  node [shape=record];\n");
        for &old in &order {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", id[old], labels[old]));
        }
        let mut edges: Vec<(usize, usize)> = self
            .covers
            .iter()
            .map(|&(lo, hi)| (id[lo], id[hi]))
            .collect();
        edges.sort_unstable();
        for (a, b) in edges {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Indices of the meet and join of a pair of elements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BinaryBounds {
    pub meet: usize,
    pub join: usize,
}

/// Enumerates the crisp rough-set lattice of a partition over all `2^n`
/// reference subsets. See [`enumerate_crisp_capped`] for the cap.
pub fn enumerate_crisp(partition: &Partition) -> Result<RoughLattice<RoughPair>, Error> {
    enumerate_crisp_capped(partition, ENUMERATION_CAP)
}

pub fn enumerate_crisp_capped(
    partition: &Partition,
    cap: usize,
) -> Result<RoughLattice<RoughPair>, Error> {
    let universe = Arc::clone(partition.universe());
    let n = universe.len();
    if n > cap.min(63) {
        return Err(Error::UniverseTooLarge { size: n, cap });
    }
    let mut pairs = Vec::with_capacity(1 << n);
    for mask in 0..1u64 << n {
        let a = CrispSet::from_mask(&universe, mask);
        let pair = crisp_approx(&a, partition).expect("same universe");
        pairs.push((pair, a));
    }
    Ok(RoughLattice::from_elements(pairs))
}

/// Enumerates the fuzzy rough-set family of a relation over all `2^n`
/// reference subsets, deduplicated by exact vector-pair equality.
///
/// The relation must be reflexive and symmetric; transitivity for the
/// caller's t-norm is their obligation (check with
/// [`FuzzyRelation::validate`]).
pub fn enumerate_fuzzy<V: DegreeValue>(
    r: &FuzzyRelation<V>,
) -> Result<RoughLattice<FuzzyRoughPair<V>>, Error> {
    enumerate_fuzzy_capped(r, ENUMERATION_CAP)
}

pub fn enumerate_fuzzy_capped<V: DegreeValue>(
    r: &FuzzyRelation<V>,
    cap: usize,
) -> Result<RoughLattice<FuzzyRoughPair<V>>, Error> {
    r.check_reflexive_symmetric()?;
    let universe = Arc::clone(r.universe());
    let n = universe.len();
    if n > cap.min(63) {
        return Err(Error::UniverseTooLarge { size: n, cap });
    }
    let mut pairs = Vec::with_capacity(1 << n);
    for mask in 0..1u64 << n {
        let a = CrispSet::from_mask(&universe, mask);
        let pair = fuzzy_rough_pair(&a, r).expect("same universe");
        pairs.push((pair, a));
    }
    Ok(RoughLattice::from_elements(pairs))
}

/// Witness for the order isomorphism between the crisp lattice over the
/// core of a relation and the fuzzy lattice of the relation itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsomorphismWitness {
    /// For each crisp element index, the matching fuzzy element index.
    pub mapping: Vec<usize>,
    pub order_preserving_both_ways: bool,
    /// Populated when any check fails; never expected on validated input.
    pub counterexample: Option<String>,
}

impl IsomorphismWitness {
    pub fn holds(&self) -> bool {
        self.order_preserving_both_ways && self.counterexample.is_none()
    }
}

/// Builds both lattices for `r` and checks that mapping each crisp pair to
/// the fuzzy pair of the same reference set is well-defined, bijective, and
/// order-preserving in both directions.
pub fn verify_order_isomorphism<V: DegreeValue>(
    r: &FuzzyRelation<V>,
) -> Result<IsomorphismWitness, Error> {
    let partition = r.core_relation().classes()?;
    let crisp = enumerate_crisp(&partition)?;
    let fuzzy = enumerate_fuzzy(r)?;
    let universe = r.universe();
    let n = universe.len();

    let failure = |detail: String| IsomorphismWitness {
        mapping: Vec::new(),
        order_preserving_both_ways: false,
        counterexample: Some(detail),
    };

    let mut mapping: Vec<Option<usize>> = vec![None; crisp.len()];
    for mask in 0..1u64 << n {
        let a = CrispSet::from_mask(universe, mask);
        let crisp_pair = crisp_approx(&a, &partition)?;
        let fuzzy_pair = fuzzy_rough_pair(&a, r)?;
        let ci = crisp.index_of(&crisp_pair).expect("pair was enumerated");
        let fi = fuzzy.index_of(&fuzzy_pair).expect("pair was enumerated");
        match mapping[ci] {
            None => mapping[ci] = Some(fi),
            Some(previous) if previous != fi => {
                return Ok(failure(format!(
                    "map is not well-defined: reference set {a} maps element {ci} to both {previous} and {fi}"
                )));
            }
            Some(_) => {}
        }
    }
    let mapping: Vec<usize> = mapping
        .into_iter()
        .map(|m| m.expect("every enumerated element has a representative"))
        .collect();

    if crisp.len() != fuzzy.len() {
        return Ok(failure(format!(
            "families differ in size: {} crisp vs {} fuzzy",
            crisp.len(),
            fuzzy.len()
        )));
    }
    let mut hit = vec![false; fuzzy.len()];
    for &fi in &mapping {
        if hit[fi] {
            return Ok(failure(format!("map is not injective at fuzzy element {fi}")));
        }
        hit[fi] = true;
    }
    for i in 0..crisp.len() {
        for j in 0..crisp.len() {
            if crisp.leq(i, j) != fuzzy.leq(mapping[i], mapping[j]) {
                return Ok(failure(format!(
                    "order disagrees on crisp elements {i} and {j}"
                )));
            }
        }
    }
    Ok(IsomorphismWitness {
        mapping,
        order_preserving_both_ways: true,
        counterexample: None,
    })
}

/// Outcome of checking a finite lattice for the bounded distributive
/// double Stone structure with regularity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StoneReport {
    pub is_lattice: bool,
    pub is_distributive: bool,
    pub stone_identity: bool,
    pub dual_stone_identity: bool,
    pub is_regular: bool,
    pub counterexamples: Vec<StoneCounterexample>,
}

impl StoneReport {
    pub fn all_hold(&self) -> bool {
        self.is_lattice
            && self.is_distributive
            && self.stone_identity
            && self.dual_stone_identity
            && self.is_regular
    }
}

/// First failure found by each check in [`stone_verify`], by element index.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StoneCounterexample {
    MissingBottom,
    MissingTop,
    MissingMeet { a: usize, b: usize },
    MissingJoin { a: usize, b: usize },
    /// `x /\ (y \/ z) != (x /\ y) \/ (x /\ z)`.
    Distributivity { x: usize, y: usize, z: usize },
    MissingPseudocomplement { a: usize },
    /// `a* \/ a** != top`.
    StoneIdentity { a: usize },
    MissingDualPseudocomplement { a: usize },
    /// `a+ /\ a++ != bottom`.
    DualStoneIdentity { a: usize },
    /// Distinct elements sharing both the pseudocomplement and the dual
    /// pseudocomplement.
    Regularity { a: usize, b: usize },
}

impl std::fmt::Display for StoneCounterexample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use StoneCounterexample::*;
        match self {
            MissingBottom => write!(f, "no least element"),
            MissingTop => write!(f, "no greatest element"),
            MissingMeet { a, b } => write!(f, "elements {a}, {b} have no meet"),
            MissingJoin { a, b } => write!(f, "elements {a}, {b} have no join"),
            Distributivity { x, y, z } => {
                write!(f, "distributivity fails on elements {x}, {y}, {z}")
            }
            MissingPseudocomplement { a } => write!(f, "element {a} has no pseudocomplement"),
            StoneIdentity { a } => write!(f, "a* v a** is not the top for element {a}"),
            MissingDualPseudocomplement { a } => {
                write!(f, "element {a} has no dual pseudocomplement")
            }
            DualStoneIdentity { a } => write!(f, "a+ ^ a++ is not the bottom for element {a}"),
            Regularity { a, b } => write!(
                f,
                "elements {a}, {b} share pseudocomplement and dual pseudocomplement"
            ),
        }
    }
}

/// Checks that the lattice is a bounded distributive double Stone lattice
/// and regular. Report-based: failures (including on deliberately broken
/// fixtures) are recorded as counterexamples, never raised as errors.
pub fn stone_verify<P: ApproxPair>(l: &RoughLattice<P>) -> StoneReport {
    let n = l.len();
    let mut report = StoneReport {
        is_lattice: true,
        is_distributive: true,
        stone_identity: true,
        dual_stone_identity: true,
        is_regular: true,
        counterexamples: Vec::new(),
    };

    let bottom = l.bottom();
    let top = l.top();
    if bottom.is_none() {
        report.is_lattice = false;
        report.counterexamples.push(StoneCounterexample::MissingBottom);
    }
    if top.is_none() {
        report.is_lattice = false;
        report.counterexamples.push(StoneCounterexample::MissingTop);
    }

    let mut meet = vec![None; n * n];
    let mut join = vec![None; n * n];
    let mut missing_meet = None;
    let mut missing_join = None;
    for a in 0..n {
        for b in 0..n {
            meet[a * n + b] = l.meet_of(a, b);
            join[a * n + b] = l.join_of(a, b);
            if meet[a * n + b].is_none() && missing_meet.is_none() {
                missing_meet = Some((a, b));
            }
            if join[a * n + b].is_none() && missing_join.is_none() {
                missing_join = Some((a, b));
            }
        }
    }
    if let Some((a, b)) = missing_meet {
        report.is_lattice = false;
        report.counterexamples.push(StoneCounterexample::MissingMeet { a, b });
    }
    if let Some((a, b)) = missing_join {
        report.is_lattice = false;
        report.counterexamples.push(StoneCounterexample::MissingJoin { a, b });
    }

    // x /\ (y \/ z) = (x /\ y) \/ (x /\ z) on all triples; triples with a
    // missing bound were already reported above
    'distributivity: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = join[y * n + z].and_then(|yz| meet[x * n + yz]);
                let rhs = match (meet[x * n + y], meet[x * n + z]) {
                    (Some(xy), Some(xz)) => join[xy * n + xz],
                    _ => None,
                };
                if let (Some(lhs), Some(rhs)) = (lhs, rhs) {
                    if lhs != rhs {
                        report.is_distributive = false;
                        report
                            .counterexamples
                            .push(StoneCounterexample::Distributivity { x, y, z });
                        break 'distributivity;
                    }
                }
            }
        }
    }

    // a* = greatest x with x /\ a = bottom; a+ = least x with x \/ a = top
    let mut star = vec![None; n];
    let mut dual = vec![None; n];
    if let (Some(bottom), Some(top)) = (bottom, top) {
        for a in 0..n {
            let mut disjoint = Bits::new(n);
            let mut covering = Bits::new(n);
            for x in 0..n {
                if meet[x * n + a] == Some(bottom) {
                    disjoint.set(x);
                }
                if join[x * n + a] == Some(top) {
                    covering.set(x);
                }
            }
            star[a] = l.greatest_of(&disjoint);
            dual[a] = l.least_of(&covering);
        }

        for a in 0..n {
            match star[a] {
                None => {
                    report.stone_identity = false;
                    report
                        .counterexamples
                        .push(StoneCounterexample::MissingPseudocomplement { a });
                    break;
                }
                Some(s) => {
                    let ss = star[s].expect("pseudocomplement scan covered all elements");
                    if join[s * n + ss] != Some(top) {
                        report.stone_identity = false;
                        report
                            .counterexamples
                            .push(StoneCounterexample::StoneIdentity { a });
                        break;
                    }
                }
            }
        }
        for a in 0..n {
            match dual[a] {
                None => {
                    report.dual_stone_identity = false;
                    report
                        .counterexamples
                        .push(StoneCounterexample::MissingDualPseudocomplement { a });
                    break;
                }
                Some(d) => {
                    let dd = dual[d].expect("dual scan covered all elements");
                    if meet[d * n + dd] != Some(bottom) {
                        report.dual_stone_identity = false;
                        report
                            .counterexamples
                            .push(StoneCounterexample::DualStoneIdentity { a });
                        break;
                    }
                }
            }
        }
    } else {
        report.stone_identity = false;
        report.dual_stone_identity = false;
    }

    // (a*, a+) must determine a
    'regularity: for a in 0..n {
        for b in a + 1..n {
            if let (Some(sa), Some(sb), Some(da), Some(db)) = (star[a], star[b], dual[a], dual[b]) {
                if sa == sb && da == db {
                    report.is_regular = false;
                    report
                        .counterexamples
                        .push(StoneCounterexample::Regularity { a, b });
                    break 'regularity;
                }
            }
        }
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{crisp, five_relation, four_relation};
    use crate::universe::Universe;
    use crate::TNorm;
    use std::collections::BTreeSet;

    /// Independent oracle: enumerate distinct (lower, upper) pairs of a
    /// partition using plain sorted index vectors.
    fn oracle_crisp_pairs(partition: &Partition) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
        let n = partition.universe().len();
        let blocks: Vec<Vec<usize>> = partition
            .blocks()
            .iter()
            .map(|b| b.iter().collect())
            .collect();
        let mut seen = BTreeSet::new();
        for mask in 0..1u64 << n {
            let a: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let mut lower = Vec::new();
            let mut upper = Vec::new();
            for block in &blocks {
                if block.iter().all(|x| a.contains(x)) {
                    lower.extend(block.iter().copied());
                }
                if block.iter().any(|x| a.contains(x)) {
                    upper.extend(block.iter().copied());
                }
            }
            lower.sort_unstable();
            upper.sort_unstable();
            seen.insert((lower, upper));
        }
        seen
    }

    fn five_partition() -> Partition {
        five_relation().core_relation().classes().unwrap()
    }

    fn singleton_partition(n: usize) -> Partition {
        let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let u = std::sync::Arc::new(Universe::new(labels).unwrap());
        let blocks = (0..n)
            .map(|i| CrispSet::from_indices(std::sync::Arc::clone(&u), [i]).unwrap())
            .collect();
        Partition::from_blocks(u, blocks).unwrap()
    }

    /// Bottom, three pairwise-incomparable atoms, top: the standard
    /// nondistributive five-element lattice, realized as exact pairs.
    fn m3_fixture() -> RoughLattice<RoughPair> {
        let u = std::sync::Arc::new(Universe::new(["p", "q", "r"]).unwrap());
        let sets = [
            CrispSet::empty(std::sync::Arc::clone(&u)),
            crisp(&u, &["p"]),
            crisp(&u, &["q"]),
            crisp(&u, &["r"]),
            CrispSet::full(std::sync::Arc::clone(&u)),
        ];
        let pairs = sets
            .into_iter()
            .map(|s| {
                (
                    RoughPair {
                        lower: s.clone(),
                        upper: s.clone(),
                    },
                    s,
                )
            })
            .collect();
        RoughLattice::from_elements(pairs)
    }

    #[test]
    fn crisp_enumeration_matches_oracle() {
        let p = five_partition();
        let lattice = enumerate_crisp(&p).unwrap();
        assert_eq!(lattice.len(), oracle_crisp_pairs(&p).len());
        assert_eq!(lattice.len(), 18);
        // class sizes 2, 1, 2 -> 3 * 2 * 3 distinct pairs
        assert_eq!(lattice.len(), 3 * 2 * 3);
    }

    #[test]
    fn crisp_enumeration_small_cases() {
        let one = singleton_partition(1);
        assert_eq!(enumerate_crisp(&one).unwrap().len(), 2);

        let singles = singleton_partition(3);
        let lattice = enumerate_crisp(&singles).unwrap();
        assert_eq!(lattice.len(), 8);
        assert_eq!(lattice.len(), oracle_crisp_pairs(&singles).len());
        // every reference set is exact here
        for i in 0..lattice.len() {
            let pair = lattice.element(i);
            assert_eq!(pair.lower, pair.upper);
        }
    }

    #[test]
    fn fuzzy_enumeration_counts() {
        let lattice = enumerate_fuzzy(&five_relation()).unwrap();
        assert_eq!(lattice.len(), 18);
        assert_eq!(lattice.covers().len(), 33);

        let id2 = FuzzyRelation::<crate::Rational>::identity(Universe::new(["x", "y"]).unwrap());
        assert_eq!(enumerate_fuzzy(&id2).unwrap().len(), 4);

        let r4 = four_relation();
        let fuzzy = enumerate_fuzzy(&r4).unwrap();
        let crisp = enumerate_crisp(&r4.core_relation().classes().unwrap()).unwrap();
        assert_eq!(fuzzy.len(), crisp.len());
        assert_eq!(fuzzy.len(), 12);
        assert_eq!(crisp.len(), 3 * 2 * 2);
    }

    #[test]
    fn enumeration_respects_cap() {
        let p = singleton_partition(4);
        assert!(matches!(
            enumerate_crisp_capped(&p, 3),
            Err(Error::UniverseTooLarge { size: 4, cap: 3 })
        ));
    }

    #[test]
    fn representatives_reproduce_their_elements() {
        let r = five_relation();
        let lattice = enumerate_fuzzy(&r).unwrap();
        for i in 0..lattice.len() {
            let a = lattice.representative(i);
            let pair = crate::approx::fuzzy_rough_pair(a, &r).unwrap();
            assert_eq!(&pair, lattice.element(i));
        }
    }

    #[test]
    fn dedup_is_exact() {
        // two reference sets land on the same element iff their pairs are
        // equal; check against a direct scan
        let r = five_relation();
        let u = std::sync::Arc::clone(r.universe());
        let lattice = enumerate_fuzzy(&r).unwrap();
        for a_mask in 0..1u64 << u.len() {
            for b_mask in a_mask..1u64 << u.len() {
                let a = CrispSet::from_mask(&u, a_mask);
                let b = CrispSet::from_mask(&u, b_mask);
                let pa = crate::approx::fuzzy_rough_pair(&a, &r).unwrap();
                let pb = crate::approx::fuzzy_rough_pair(&b, &r).unwrap();
                let same_element = lattice.index_of(&pa) == lattice.index_of(&pb);
                assert_eq!(same_element, pa == pb);
            }
        }
    }

    #[test]
    fn covers_are_the_transitive_reduction() {
        let lattice = enumerate_fuzzy(&five_relation()).unwrap();
        let n = lattice.len();
        // reachability closure of the cover relation must reproduce leq
        let mut reach = vec![vec![false; n]; n];
        for i in 0..n {
            reach[i][i] = true;
        }
        for _ in 0..n {
            for &(lo, hi) in lattice.covers() {
                for k in 0..n {
                    if reach[k][lo] {
                        reach[k][hi] = true;
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                assert_eq!(reach[i][j], lattice.leq(i, j), "mismatch at ({i},{j})");
            }
        }
        // and no cover edge is redundant
        for &(lo, hi) in lattice.covers() {
            let strictly_between = (0..n)
                .any(|k| k != lo && k != hi && lattice.leq(lo, k) && lattice.leq(k, hi));
            assert!(!strictly_between);
        }
    }

    #[test]
    fn bounds_basics() {
        let lattice = enumerate_fuzzy(&five_relation()).unwrap();
        let bottom = lattice.bottom().unwrap();
        let top = lattice.top().unwrap();
        for x in 0..lattice.len() {
            let b = lattice.bounds(bottom, x).unwrap();
            assert_eq!(b.meet, bottom);
            assert_eq!(b.join, x);
            let s = lattice.bounds(x, x).unwrap();
            assert_eq!(s.meet, x);
            assert_eq!(s.join, x);
            let t = lattice.bounds(x, top).unwrap();
            assert_eq!(t.meet, x);
            assert_eq!(t.join, top);
        }
    }

    #[test]
    fn meet_of_incomparable_atoms_pairs_is_bottom() {
        let r = five_relation();
        let u = std::sync::Arc::clone(r.universe());
        let lattice = enumerate_fuzzy(&r).unwrap();
        // the elements reached from {a,b} and {d,e}
        let ab = crate::approx::fuzzy_rough_pair(&crisp(&u, &["a", "b"]), &r).unwrap();
        let de = crate::approx::fuzzy_rough_pair(&crisp(&u, &["d", "e"]), &r).unwrap();
        let i = lattice.index_of(&ab).unwrap();
        let j = lattice.index_of(&de).unwrap();
        let bounds = lattice.bounds(i, j).unwrap();
        assert_eq!(bounds.meet, lattice.bottom().unwrap());
    }

    #[test]
    fn isomorphism_on_reference_relation() {
        let witness = verify_order_isomorphism(&five_relation()).unwrap();
        assert!(witness.holds());
        assert_eq!(witness.mapping.len(), 18);
    }

    #[test]
    fn isomorphism_on_identity_relation() {
        let id = FuzzyRelation::<crate::Rational>::identity(Universe::new(["x", "y", "z"]).unwrap());
        let witness = verify_order_isomorphism(&id).unwrap();
        assert!(witness.holds());
        assert_eq!(witness.mapping.len(), 8);
    }

    #[test]
    fn stone_report_on_reference_lattice() {
        let lattice = enumerate_fuzzy(&five_relation()).unwrap();
        let report = stone_verify(&lattice);
        assert!(report.all_hold(), "{:?}", report.counterexamples);
        assert!(lattice.verify_subset_bounds().is_ok());
    }

    #[test]
    fn stone_report_on_two_chain() {
        let one = singleton_partition(1);
        let lattice = enumerate_crisp(&one).unwrap();
        assert_eq!(lattice.len(), 2);
        let report = stone_verify(&lattice);
        assert!(report.all_hold());
        assert!(lattice.verify_subset_bounds().is_ok());
    }

    #[test]
    fn nondistributive_fixture_fails_distributivity() {
        let m3 = m3_fixture();
        assert_eq!(m3.len(), 5);
        let report = stone_verify(&m3);
        assert!(report.is_lattice);
        assert!(!report.is_distributive);
        assert!(report
            .counterexamples
            .iter()
            .any(|c| matches!(c, StoneCounterexample::Distributivity { .. })));
        // atoms have no pseudocomplement here
        assert!(!report.stone_identity);
        assert!(report
            .counterexamples
            .iter()
            .any(|c| matches!(c, StoneCounterexample::MissingPseudocomplement { .. })));
        assert!(!report.all_hold());
        // binary meets and joins all exist, even though subsets fail nothing
        assert!(m3.verify_subset_bounds().is_ok());
    }

    #[test]
    fn subset_bounds_check_is_capped() {
        let singles = singleton_partition(5);
        let lattice = enumerate_crisp(&singles).unwrap();
        assert_eq!(lattice.len(), 32);
        assert!(matches!(
            lattice.verify_subset_bounds(),
            Err(Error::LatticeTooLarge { size: 32, cap: COMPLETE_CHECK_CAP })
        ));
    }

    #[test]
    fn dot_output_shape() {
        let one = singleton_partition(1);
        let lattice = enumerate_crisp(&one).unwrap();
        let dot = lattice.to_dot();
        assert_eq!(dot.matches("[label=").count(), 2);
        assert_eq!(dot.matches(" -> ").count(), 1);
        assert!(dot.starts_with("digraph rough_lattice {"));

        let big = enumerate_fuzzy(&five_relation()).unwrap().to_dot();
        assert_eq!(big.matches("[label=").count(), 18);
        assert_eq!(big.matches(" -> ").count(), 33);
        // upper row first, canonical reduced rationals
        assert!(big.contains("{1 1 1/2 0 0|0 0 0 0 0}"));
    }

    #[test]
    fn dot_output_is_reproducible() {
        let lattice = enumerate_fuzzy(&five_relation()).unwrap();
        assert_eq!(lattice.to_dot(), lattice.to_dot());
        let again = enumerate_fuzzy(&five_relation()).unwrap();
        assert_eq!(lattice.to_dot(), again.to_dot());
    }

    #[test]
    fn random_instances_isomorphic_and_stone() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..15 {
            let n = rand::Rng::random_range(&mut rng, 2..=5);
            let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
            let u = Universe::new(labels).unwrap();
            let r: FuzzyRelation<crate::Rational> =
                crate::relation::random_min_equivalence(u, &mut rng);
            assert!(r.validate(TNorm::Minimum).is_t_equivalence());
            let witness = verify_order_isomorphism(&r).unwrap();
            assert!(witness.holds());
            let lattice = enumerate_fuzzy(&r).unwrap();
            assert!(stone_verify(&lattice).all_hold());
        }
    }
}
