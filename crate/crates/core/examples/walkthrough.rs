//! A small tour: validate a relation, approximate a set, enumerate the
//! lattice, and verify its structure.

use std::sync::Arc;

use frl_core::approx::fuzzy_rough_pair;
use frl_core::lattice::{enumerate_fuzzy, stone_verify, verify_order_isomorphism};
use frl_core::{CrispSet, FuzzyRelation, TNorm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = FuzzyRelation::from_rows(&["a", "b", "c"], &["1 1/2 0", "1/2 1 0", "0 0 1"])?;
    assert!(r.validate(TNorm::Minimum).is_t_equivalence());

    let a = CrispSet::from_labels(Arc::clone(r.universe()), ["a"])?;
    let pair = fuzzy_rough_pair(&a, &r)?;
    println!("lower: {}   upper: {}", pair.lower, pair.upper);

    let lattice = enumerate_fuzzy(&r)?;
    println!("{} distinct approximation pairs", lattice.len());
    assert!(verify_order_isomorphism(&r)?.holds());
    assert!(stone_verify(&lattice).all_hold());
    print!("{}", lattice.to_dot());
    Ok(())
}
