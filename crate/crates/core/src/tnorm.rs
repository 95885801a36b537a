//! Triangular norms on membership degrees.

use std::fmt;
use std::str::FromStr;

use crate::degree::{Degree, DegreeValue};
use crate::error::Error;

/// The built-in t-norms.
///
/// Minimum and product are positive (nonzero on nonzero inputs); the
/// Lukasiewicz norm is not, which matters wherever results lean on the
/// support of a relation being an equivalence.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TNorm {
    Minimum,
    Product,
    Lukasiewicz,
}

impl TNorm {
    pub fn apply<V: DegreeValue>(self, x: &Degree<V>, y: &Degree<V>) -> Degree<V> {
        match self {
            TNorm::Minimum => x.min(y).clone(),
            TNorm::Product => x.product(y),
            TNorm::Lukasiewicz => x.bounded_excess(y),
        }
    }

    /// Whether `T(x, y) > 0` holds for all `x, y > 0`.
    pub fn is_positive(self) -> bool {
        !matches!(self, TNorm::Lukasiewicz)
    }

    pub fn name(self) -> &'static str {
        match self {
            TNorm::Minimum => "min",
            TNorm::Product => "product",
            TNorm::Lukasiewicz => "lukasiewicz",
        }
    }
}

impl fmt::Display for TNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TNorm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "min" | "minimum" => Ok(TNorm::Minimum),
            "product" | "prod" => Ok(TNorm::Product),
            "lukasiewicz" | "luk" => Ok(TNorm::Lukasiewicz),
            other => Err(Error::PreconditionViolated {
                reason: format!("unknown t-norm {other:?}"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn d(s: &str) -> Degree<Rational> {
        s.parse().unwrap()
    }

    fn grid() -> Vec<Degree<Rational>> {
        ["0", "1/4", "1/3", "1/2", "2/3", "3/4", "1"]
            .iter()
            .map(|s| d(s))
            .collect()
    }

    #[test]
    fn evaluates_each_norm() {
        assert_eq!(TNorm::Minimum.apply(&d("1"), &d("3/10")), d("3/10"));
        assert_eq!(TNorm::Product.apply(&d("1/2"), &d("1/2")), d("1/4"));
        assert_eq!(TNorm::Lukasiewicz.apply(&d("7/10"), &d("6/10")), d("3/10"));
        assert_eq!(TNorm::Lukasiewicz.apply(&d("1/4"), &d("1/2")), d("0"));
    }

    #[test]
    fn axioms_hold_on_grid() {
        let grid = grid();
        for x in &grid {
            assert_eq!(TNorm::Minimum.apply(&Degree::one(), x), *x);
            assert_eq!(TNorm::Product.apply(&Degree::one(), x), *x);
            assert_eq!(TNorm::Lukasiewicz.apply(&Degree::one(), x), *x);
            for y in &grid {
                for t in [TNorm::Minimum, TNorm::Product, TNorm::Lukasiewicz] {
                    assert_eq!(t.apply(x, y), t.apply(y, x));
                    for z in &grid {
                        assert_eq!(t.apply(x, &t.apply(y, z)), t.apply(&t.apply(x, y), z));
                        // monotone in the first argument
                        if x <= y {
                            assert!(t.apply(x, z) <= t.apply(y, z));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn norms_are_pointwise_ordered() {
        let grid = grid();
        for x in &grid {
            for y in &grid {
                let min = TNorm::Minimum.apply(x, y);
                let prod = TNorm::Product.apply(x, y);
                let luk = TNorm::Lukasiewicz.apply(x, y);
                assert!(min >= prod && prod >= luk);
            }
        }
    }

    #[test]
    fn positivity_flags() {
        assert!(TNorm::Minimum.is_positive());
        assert!(TNorm::Product.is_positive());
        assert!(!TNorm::Lukasiewicz.is_positive());
        // witness for the non-positive case
        assert!(TNorm::Lukasiewicz.apply(&d("1/2"), &d("1/2")).is_zero());
    }

    #[test]
    fn parses_names() {
        assert_eq!("min".parse::<TNorm>().unwrap(), TNorm::Minimum);
        assert_eq!("Product".parse::<TNorm>().unwrap(), TNorm::Product);
        assert_eq!("lukasiewicz".parse::<TNorm>().unwrap(), TNorm::Lukasiewicz);
        assert!("hamacher".parse::<TNorm>().is_err());
    }
}
