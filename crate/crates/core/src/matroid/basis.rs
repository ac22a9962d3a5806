use crate::{ElementSet, Error, Result};

use super::{check_base_axiom, Matroid};

/// A matroid given by the explicit list of its bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisMatroid {
    n: usize,
    bases: Vec<ElementSet>,
}

impl BasisMatroid {
    /// Builds the matroid and validates the base-exchange axiom.
    pub fn new(n: usize, bases: Vec<ElementSet>) -> Result<Self> {
        Self::build(n, bases, true)
    }

    /// Builds the matroid without the exchange-axiom check, which costs
    /// `O(|family|^2 * r)` lookups. Sizes and ranges are still checked.
    pub fn new_unvalidated(n: usize, bases: Vec<ElementSet>) -> Result<Self> {
        Self::build(n, bases, false)
    }

    fn build(n: usize, mut bases: Vec<ElementSet>, validate: bool) -> Result<Self> {
        bases.sort();
        bases.dedup();
        if validate {
            let check = check_base_axiom(n, &bases)?;
            if !check.is_valid() {
                return Err(Error::AxiomViolated(check.to_string()));
            }
        } else {
            if bases.is_empty() {
                return Err(Error::Invalid("empty basis family".into()));
            }
            if let Some(&element) = bases.iter().flat_map(|b| b.iter()).find(|&&e| e >= n) {
                return Err(Error::ElementOutOfRange { element, ground: n });
            }
            if bases.iter().any(|b| b.len() != bases[0].len()) {
                return Err(Error::Invalid("bases have different sizes".into()));
            }
        }
        Ok(Self { n, bases })
    }

    /// The stored bases, sorted and deduplicated.
    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }
}

impl Matroid for BasisMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        self.bases
            .iter()
            .any(|b| set.iter().all(|&e| b.contains(e)))
    }

    fn full_rank(&self) -> usize {
        self.bases[0].len()
    }
}
