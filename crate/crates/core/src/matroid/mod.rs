//! Matroids in the independence-oracle model.
//!
//! Every matroid is a ground set `0..n` plus a yes/no independence query.
//! Rank, bases, and everything built on top go through that query only.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::{ElementSet, Error, Result};

mod basis;
mod graphic;
mod linear;
mod restriction;
mod slot;
mod spec;
mod uniform;

pub use basis::BasisMatroid;
pub use graphic::GraphicMatroid;
pub(crate) use linear::is_prime as linear_is_prime;
pub use linear::LinearMatroid;
pub use restriction::{restrict, Restriction};
pub use slot::{disjoint_copies, Slot, SlotMatroid};
pub use spec::{AnyMatroid, MatroidSpec};
pub use uniform::UniformMatroid;

/// Default ground-size cap for operations that enumerate subsets.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

/// Shared handle to a matroid. Matroids are immutable once built.
pub type MatroidRef = Arc<dyn Matroid>;

/// An independence oracle over the ground set `0..ground_size()`.
pub trait Matroid: fmt::Debug + Send + Sync {
    fn ground_size(&self) -> usize;

    /// Independence query. `set` holds distinct ids below `ground_size()` in
    /// any order; the checked entry points below validate this.
    fn is_independent(&self, set: &[usize]) -> bool;

    /// Rank of the whole ground set.
    fn full_rank(&self) -> usize {
        self.greedy_basis_of(&(0..self.ground_size()).collect::<Vec<_>>())
            .len()
    }

    /// Scans `set` in the given order and keeps every element that preserves
    /// independence. The result is a maximal independent subset of `set`.
    fn greedy_basis_of(&self, set: &[usize]) -> Vec<usize> {
        let mut kept = Vec::new();
        for &e in set {
            kept.push(e);
            if !self.is_independent(&kept) {
                kept.pop();
            }
        }
        kept
    }

    fn check_elements(&self, set: &[usize]) -> Result<()> {
        let ground = self.ground_size();
        match set.iter().find(|&&e| e >= ground) {
            Some(&element) => Err(Error::ElementOutOfRange { element, ground }),
            None => Ok(()),
        }
    }

    fn independent(&self, set: &ElementSet) -> Result<bool> {
        self.check_elements(set)?;
        Ok(self.is_independent(set))
    }

    /// Rank of `set`, computed greedily in ascending id order.
    fn rank(&self, set: &ElementSet) -> Result<usize> {
        self.check_elements(set)?;
        Ok(self.greedy_basis_of(set).len())
    }

    fn is_basis(&self, set: &ElementSet) -> Result<bool> {
        self.check_elements(set)?;
        Ok(set.len() == self.full_rank() && self.is_independent(set))
    }
}

impl<M: Matroid + ?Sized> Matroid for Arc<M> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        (**self).is_independent(set)
    }

    fn full_rank(&self) -> usize {
        (**self).full_rank()
    }
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        (**self).is_independent(set)
    }

    fn full_rank(&self) -> usize {
        (**self).full_rank()
    }
}

/// All bases of `m` in lexicographic order.
pub fn enumerate_bases<M: Matroid + ?Sized>(m: &M, cap: usize) -> Result<Vec<ElementSet>> {
    let n = m.ground_size();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    let r = m.full_rank();
    Ok((0..n)
        .combinations(r)
        .filter(|c| m.is_independent(c))
        .map(ElementSet::from)
        .collect())
}

/// Outcome of [`check_base_axiom`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomCheck {
    Valid,
    /// Two members of the family have different cardinalities.
    UnequalSizes {
        first: ElementSet,
        other: ElementSet,
    },
    /// No `e2` in `b2 \ b1` makes `(b1 \ e1) + e2` a member of the family.
    Exchange {
        b1: ElementSet,
        b2: ElementSet,
        e1: usize,
    },
}

impl AxiomCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, AxiomCheck::Valid)
    }
}

impl fmt::Display for AxiomCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomCheck::Valid => write!(f, "valid"),
            AxiomCheck::UnequalSizes { first, other } => {
                write!(f, "bases {first} and {other} have different sizes")
            }
            AxiomCheck::Exchange { b1, b2, e1 } => {
                write!(f, "B1={b1} B2={b2} e1={e1}: no exchange element in B2\\B1")
            }
        }
    }
}

/// Checks the base-exchange axiom on `family` over the ground set `0..n`.
///
/// Pairs are scanned in family order and `e1` in ascending order, so the
/// reported violation is the first one in that order.
pub fn check_base_axiom(n: usize, family: &[ElementSet]) -> Result<AxiomCheck> {
    let Some(first) = family.first() else {
        return Err(Error::Invalid("empty basis family".into()));
    };
    for b in family {
        if let Some(&element) = b.iter().find(|&&e| e >= n) {
            return Err(Error::ElementOutOfRange { element, ground: n });
        }
    }
    if let Some(other) = family.iter().find(|b| b.len() != first.len()) {
        return Ok(AxiomCheck::UnequalSizes {
            first: first.clone(),
            other: other.clone(),
        });
    }
    let members: HashSet<&ElementSet> = family.iter().collect();
    for b1 in family {
        for b2 in family {
            for &e1 in b1.difference(b2).iter() {
                let ok = b2.difference(b1).iter().any(|&e2| {
                    let mut swapped = b1.clone();
                    swapped.remove(e1);
                    swapped.insert(e2);
                    members.contains(&swapped)
                });
                if !ok {
                    return Ok(AxiomCheck::Exchange {
                        b1: b1.clone(),
                        b2: b2.clone(),
                        e1,
                    });
                }
            }
        }
    }
    Ok(AxiomCheck::Valid)
}
