use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

/// A finite set of element ids kept in ascending order without duplicates.
///
/// Serialized as an ascending integer array; deserializing rejects arrays that
/// are not strictly ascending.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "AscendingIds")]
pub struct ElementSet(Vec<usize>);

impl ElementSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Builds the set from arbitrary ids, sorting and removing duplicates.
    pub fn from_unsorted(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        Self(ids)
    }

    /// Builds the set from a strictly ascending list, or returns the list back.
    pub fn from_ascending(ids: Vec<usize>) -> Result<Self, Vec<usize>> {
        if ids.windows(2).all(|w| w[0] < w[1]) {
            Ok(Self(ids))
        } else {
            Err(ids)
        }
    }

    pub fn range(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn insert(&mut self, e: usize) -> bool {
        match self.0.binary_search(&e) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, e);
                true
            }
        }
    }

    pub fn remove(&mut self, e: usize) -> bool {
        match self.0.binary_search(&e) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.iter().all(|&e| other.contains(e))
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            if a < b {
                out.push(a);
                i += 1;
            } else if b < a {
                out.push(b);
                j += 1;
            } else {
                out.push(a);
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        ElementSet(out)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet(
            self.0
                .iter()
                .copied()
                .filter(|&e| other.contains(e))
                .collect(),
        )
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        ElementSet(
            self.0
                .iter()
                .copied()
                .filter(|&e| !other.contains(e))
                .collect(),
        )
    }

    /// Largest id plus one, or zero for the empty set.
    pub fn bound(&self) -> usize {
        self.0.last().map_or(0, |&e| e + 1)
    }
}

impl Deref for ElementSet {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_unsorted(iter.into_iter().collect())
    }
}

impl From<Vec<usize>> for ElementSet {
    fn from(ids: Vec<usize>) -> Self {
        Self::from_unsorted(ids)
    }
}

impl From<ElementSet> for Vec<usize> {
    fn from(set: ElementSet) -> Self {
        set.0
    }
}

#[derive(Deserialize)]
#[serde(transparent)]
struct AscendingIds(Vec<usize>);

impl TryFrom<AscendingIds> for ElementSet {
    type Error = String;

    fn try_from(AscendingIds(ids): AscendingIds) -> Result<Self, String> {
        Self::from_ascending(ids)
            .map_err(|ids| format!("element set {ids:?} is not strictly ascending"))
    }
}

impl<const N: usize> From<[usize; N]> for ElementSet {
    fn from(ids: [usize; N]) -> Self {
        Self::from_unsorted(ids.to_vec())
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
