use itertools::Itertools;

use crate::exchange::ExchangeInstance;
use crate::matroid::Matroid;
use crate::{ElementSet, Error, Result};

/// Largest total basis size `sum |B_i|` the brute-force oracle accepts.
pub const DEFAULT_BRUTE_FORCE_GATE: usize = 16;

/// Every `(A_2, .., A_k)` with `A_i ⊆ B_i`, `|A_i| = |A_1|`, in lexicographic
/// order of the per-basis combinations.
fn candidate_tuples(bases: &[ElementSet], size: usize) -> Vec<Vec<ElementSet>> {
    bases[1..]
        .iter()
        .map(|b| {
            b.iter()
                .copied()
                .combinations(size)
                .map(ElementSet::from)
                .collect::<Vec<_>>()
        })
        .multi_cartesian_product()
        .collect()
}

/// True iff `(B_i \ A_i) ∪ A_{i-shift}` is a basis for every `i` (mod `k`).
fn shift_holds<M: Matroid + ?Sized>(
    m: &M,
    rank: usize,
    bases: &[ElementSet],
    parts: &[ElementSet],
    shift: usize,
) -> bool {
    let k = bases.len();
    (0..k).all(|i| {
        let prev = &parts[(i + k - shift % k) % k];
        let mut set: Vec<usize> = bases[i]
            .iter()
            .copied()
            .filter(|&e| !parts[i].contains(e))
            .chain(prev.iter().copied())
            .collect();
        set.sort_unstable();
        set.dedup();
        set.len() == rank && m.is_independent(&set)
    })
}

/// All `(A_2, .., A_k)` making every shift-by-one set a basis, by exhaustive
/// enumeration over subsets of the bases.
pub fn brute_force_cyclic_exchange(
    instance: &ExchangeInstance,
    gate: usize,
) -> Result<Vec<Vec<ElementSet>>> {
    let bases = instance.bases();
    if bases.len() < 2 {
        return Err(Error::Invalid(
            "brute force needs at least two bases".into(),
        ));
    }
    let total: usize = bases.iter().map(|b| b.len()).sum();
    if total > gate {
        return Err(Error::CapExceeded {
            size: total,
            cap: gate,
        });
    }
    let m = instance.matroid();
    let rank = m.full_rank();
    let seed = instance.seed();
    Ok(candidate_tuples(bases, seed.len())
        .into_iter()
        .filter(|tuple| {
            let parts: Vec<ElementSet> = std::iter::once(seed.clone())
                .chain(tuple.iter().cloned())
                .collect();
            shift_holds(m, rank, bases, &parts, 1)
        })
        .collect())
}

/// Tuple counts for one `(bases, A_1)` choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ShiftCounts {
    /// Number of `(A_2, .., A_k)` tuples enumerated.
    pub tuples: usize,
    /// Tuples whose shift-by-one sets are all bases.
    pub shift_one: usize,
    /// Tuples whose shift-by-one and shift-by-two sets are all bases.
    pub joint: usize,
}

/// Counts solutions of the shift-by-one and joint shift-by-one/two patterns
/// by full enumeration. The bases are assumed to be bases of `m`.
pub fn count_shift_solutions<M: Matroid + ?Sized>(
    m: &M,
    bases: &[ElementSet],
    seed: &ElementSet,
) -> ShiftCounts {
    let rank = m.full_rank();
    let mut counts = ShiftCounts::default();
    for tuple in candidate_tuples(bases, seed.len()) {
        counts.tuples += 1;
        let parts: Vec<ElementSet> = std::iter::once(seed.clone()).chain(tuple).collect();
        if shift_holds(m, rank, bases, &parts, 1) {
            counts.shift_one += 1;
            if shift_holds(m, rank, bases, &parts, 2) {
                counts.joint += 1;
            }
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::matroid::{GraphicMatroid, MatroidRef, UniformMatroid};

    fn k4() -> MatroidRef {
        Arc::new(
            GraphicMatroid::new(4, vec![[0, 1], [1, 2], [2, 3], [0, 2], [1, 3], [0, 3]]).unwrap(),
        )
    }

    #[test]
    fn uniform_has_all_four() {
        let m: MatroidRef = Arc::new(UniformMatroid::new(6, 2).unwrap());
        let inst = ExchangeInstance::new(
            m,
            vec![[0, 1].into(), [2, 3].into(), [4, 5].into()],
            [0].into(),
        )
        .unwrap();
        assert_eq!(brute_force_cyclic_exchange(&inst, 16).unwrap().len(), 4);
    }

    #[test]
    fn k4_has_unique_answer() {
        // The three singletons of B_2 = {3,4,5}: {3} closes the cycle 0-1-3
        // with B_2 - 3 + 0, {4} leaves vertex 0 isolated in B_1 - 0 + 4, and
        // {5} gives spanning trees both ways.
        let inst =
            ExchangeInstance::new(k4(), vec![[0, 1, 2].into(), [3, 4, 5].into()], [0].into())
                .unwrap();
        assert_eq!(
            brute_force_cyclic_exchange(&inst, 16).unwrap(),
            vec![vec![ElementSet::from([5])]]
        );
    }

    #[test]
    fn empty_seed_has_only_empty_tuple() {
        let inst = ExchangeInstance::new(
            k4(),
            vec![[0, 1, 2].into(), [3, 4, 5].into(), [0, 2, 3].into()],
            ElementSet::new(),
        )
        .unwrap();
        assert_eq!(
            brute_force_cyclic_exchange(&inst, 16).unwrap(),
            vec![vec![ElementSet::new(), ElementSet::new()]]
        );
    }

    #[test]
    fn gate_and_arity() {
        let inst = ExchangeInstance::new(
            k4(),
            vec![[0, 1, 2].into(), [3, 4, 5].into(), [0, 2, 3].into()],
            [0].into(),
        )
        .unwrap();
        assert_eq!(
            brute_force_cyclic_exchange(&inst, 8).unwrap_err(),
            Error::CapExceeded { size: 9, cap: 8 }
        );
        let one = ExchangeInstance::new(k4(), vec![[0, 1, 2].into()], [0].into()).unwrap();
        assert!(brute_force_cyclic_exchange(&one, 16).is_err());
    }
}
