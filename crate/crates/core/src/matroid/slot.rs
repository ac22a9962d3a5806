use crate::{ElementSet, Error, Result};

use super::{Matroid, MatroidRef};

/// One parallel copy: element `element` of the inner matroid, taken as a
/// member of basis number `base` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub base: usize,
    pub element: usize,
}

/// The inner matroid with one parallel copy of each element per basis it
/// belongs to, so that the given bases become pairwise disjoint.
///
/// Slots are numbered densely, grouped by basis in input order and ascending
/// by element within a basis. Two slots over the same inner element are
/// parallel, so a slot set is independent iff its projection has no repeats
/// and is independent in the inner matroid.
#[derive(Debug, Clone)]
pub struct SlotMatroid {
    inner: MatroidRef,
    slots: Vec<Slot>,
    offsets: Vec<usize>,
}

/// Lifts `bases` of `m` to pairwise disjoint copies.
pub fn disjoint_copies(m: MatroidRef, bases: &[ElementSet]) -> Result<SlotMatroid> {
    for (index, b) in bases.iter().enumerate() {
        if !m.is_basis(b)? {
            return Err(Error::NotABasis { index });
        }
    }
    let mut slots = Vec::with_capacity(bases.iter().map(|b| b.len()).sum());
    let mut offsets = Vec::with_capacity(bases.len() + 1);
    for (base, b) in bases.iter().enumerate() {
        offsets.push(slots.len());
        slots.extend(b.iter().map(|&element| Slot { base, element }));
    }
    offsets.push(slots.len());
    Ok(SlotMatroid {
        inner: m,
        slots,
        offsets,
    })
}

impl SlotMatroid {
    pub fn inner(&self) -> &MatroidRef {
        &self.inner
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn base_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Slot ids holding the copy of basis `base`.
    pub fn base_slots(&self, base: usize) -> std::ops::Range<usize> {
        self.offsets[base]..self.offsets[base + 1]
    }

    /// Inverse of the slot map.
    pub fn slot_of(&self, base: usize, element: usize) -> Option<usize> {
        let range = self.base_slots(base);
        self.slots[range.clone()]
            .binary_search_by_key(&element, |s| s.element)
            .ok()
            .map(|i| range.start + i)
    }

    /// Lifts a subset of basis `base` to its slots. Elements not in the basis
    /// are reported as an error.
    pub fn lift(&self, base: usize, set: &ElementSet) -> Result<ElementSet> {
        set.iter()
            .map(|&e| self.slot_of(base, e).ok_or(Error::NotInBasis(e)))
            .collect()
    }

    /// Inner elements under the given slots, in slot order (may repeat).
    pub fn project(&self, set: &[usize]) -> Vec<usize> {
        set.iter().map(|&s| self.slots[s].element).collect()
    }
}

impl Matroid for SlotMatroid {
    fn ground_size(&self) -> usize {
        self.slots.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        let mut projected = self.project(set);
        projected.sort_unstable();
        if projected.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        self.inner.is_independent(&projected)
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::matroid::{GraphicMatroid, UniformMatroid};

    #[test]
    fn overlapping_bases_lift() {
        let u: MatroidRef = Arc::new(UniformMatroid::new(3, 2).unwrap());
        let lift = disjoint_copies(u, &[[0, 1].into(), [0, 2].into()]).unwrap();
        assert_eq!(lift.ground_size(), 4);
        let expect = [(0, 0), (0, 1), (1, 0), (1, 2)];
        for (slot, (base, element)) in lift.slots().iter().zip(expect) {
            assert_eq!(*slot, Slot { base, element });
        }
        let (a, b) = (lift.slot_of(0, 0).unwrap(), lift.slot_of(1, 0).unwrap());
        assert!(!lift.is_independent(&[a, b]));
        assert!(lift.is_basis(&[0, 1].into()).unwrap());
        assert!(lift.is_basis(&[2, 3].into()).unwrap());
        assert_eq!(lift.full_rank(), 2);
    }

    #[test]
    fn disjoint_lift_matches_inner_independence() {
        let k4: MatroidRef = Arc::new(
            GraphicMatroid::new(4, vec![[0, 1], [1, 2], [2, 3], [0, 2], [1, 3], [0, 3]]).unwrap(),
        );
        let lift = disjoint_copies(k4.clone(), &[[0, 1, 2].into(), [3, 4, 5].into()]).unwrap();
        for mask in 0u32..64 {
            let slots: Vec<usize> = (0..6).filter(|i| mask >> i & 1 == 1).collect();
            let inner: Vec<usize> = lift.project(&slots);
            assert_eq!(lift.is_independent(&slots), k4.is_independent(&inner));
        }
    }

    #[test]
    fn rejects_non_basis_with_index() {
        let u: MatroidRef = Arc::new(UniformMatroid::new(4, 2).unwrap());
        let err = disjoint_copies(u, &[[0, 1].into(), [2].into()]).unwrap_err();
        assert_eq!(err, Error::NotABasis { index: 1 });
    }

    #[test]
    fn lift_rejects_foreign_elements() {
        let u: MatroidRef = Arc::new(UniformMatroid::new(4, 2).unwrap());
        let lift = disjoint_copies(u, &[[0, 1].into()]).unwrap();
        assert_eq!(lift.lift(0, &[1].into()).unwrap(), ElementSet::from([1]));
        assert_eq!(lift.lift(0, &[3].into()), Err(Error::NotInBasis(3)));
    }
}
