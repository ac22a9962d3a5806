use crate::partition::{Partition, PartitionProblem};
use crate::{ElementSet, Error, Result};

/// Largest `k^n` assignment count [`brute_force_partition`] will enumerate.
pub const DEFAULT_ASSIGNMENT_GATE: usize = 1 << 20;

/// Tries all `k^n` assignments of universe elements to arms and returns the
/// first (in odometer order, element 0 least significant) that is a valid
/// partition.
pub fn brute_force_partition(problem: &PartitionProblem, gate: usize) -> Result<Option<Partition>> {
    let n = problem.universe();
    let k = problem.arms().len();
    let total = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(k));
    let total = match total {
        Some(t) if t <= gate => t,
        _ => return Err(Error::CapExceeded { size: n, cap: gate }),
    };
    let mut assignment = vec![0usize; n];
    for _ in 0..total {
        let parts: Vec<ElementSet> = (0..k)
            .map(|i| (0..n).filter(|&e| assignment[e] == i).collect())
            .collect();
        let ok = parts
            .iter()
            .zip(problem.arms())
            .all(|(part, arm)| part.is_subset(arm.allowed()) && arm.is_independent(part));
        if ok {
            return Ok(Some(Partition { parts }));
        }
        for slot in assignment.iter_mut() {
            *slot += 1;
            if *slot < k {
                break;
            }
            *slot = 0;
        }
    }
    Ok(None)
}
