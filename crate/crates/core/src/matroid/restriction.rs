use crate::{ElementSet, Result};

use super::{Matroid, MatroidRef};

/// `M | C`: the matroid `M` restricted to `C`, re-indexed densely.
///
/// Local element `j` stands for `id_map()[j]` in the parent matroid.
#[derive(Debug, Clone)]
pub struct Restriction {
    parent: MatroidRef,
    id_map: Vec<usize>,
    rank: usize,
}

/// Restricts `m` to the elements of `subset`.
pub fn restrict(m: MatroidRef, subset: &ElementSet) -> Result<Restriction> {
    m.check_elements(subset)?;
    let rank = m.greedy_basis_of(subset).len();
    Ok(Restriction {
        parent: m,
        id_map: subset.to_vec(),
        rank,
    })
}

impl Restriction {
    pub fn id_map(&self) -> &[usize] {
        &self.id_map
    }

    pub fn parent(&self) -> &MatroidRef {
        &self.parent
    }

    /// Local id of a parent element, if it lies in the restriction.
    pub fn local_id(&self, parent_element: usize) -> Option<usize> {
        self.id_map.binary_search(&parent_element).ok()
    }

    pub fn to_parent(&self, set: &[usize]) -> Vec<usize> {
        set.iter().map(|&e| self.id_map[e]).collect()
    }
}

impl Matroid for Restriction {
    fn ground_size(&self) -> usize {
        self.id_map.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        self.parent.is_independent(&self.to_parent(set))
    }

    fn full_rank(&self) -> usize {
        self.rank
    }
}
