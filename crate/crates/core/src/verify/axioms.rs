use crate::matroid::Matroid;
use crate::{ElementSet, Error, Result};

/// Largest ground set [`exhaustive_axiom_check`] accepts.
pub const EXHAUSTIVE_AXIOM_CAP: usize = 12;

/// Which matroid properties held over every subset of the ground set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomReport {
    pub empty_independent: bool,
    pub hereditary: bool,
    pub augmentation: bool,
    /// `r(A ∪ B) + r(A ∩ B) <= r(A) + r(B)` for all pairs.
    pub submodular: bool,
    /// `r(∅) = 0`, `r(S) <= |S|`, and `r` is monotone.
    pub rank_bounds: bool,
    /// The greedy rank agrees with the rank computed by subset recursion.
    pub greedy_rank_agrees: bool,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.empty_independent
            && self.hereditary
            && self.augmentation
            && self.submodular
            && self.rank_bounds
            && self.greedy_rank_agrees
    }
}

fn members(mask: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

/// Tabulates the oracle on all `2^n` subsets and checks the matroid axioms
/// and rank properties by direct enumeration.
pub fn exhaustive_axiom_check<M: Matroid + ?Sized>(m: &M) -> Result<AxiomReport> {
    let n = m.ground_size();
    if n > EXHAUSTIVE_AXIOM_CAP {
        return Err(Error::CapExceeded {
            size: n,
            cap: EXHAUSTIVE_AXIOM_CAP,
        });
    }
    let full = 1usize << n;
    let indep: Vec<bool> = (0..full)
        .map(|s| m.is_independent(&members(s, n)))
        .collect();

    // rank by recursion over one-element deletions, never via greedy
    let mut rank = vec![0usize; full];
    for s in 1..full {
        rank[s] = if indep[s] {
            s.count_ones() as usize
        } else {
            (0..n)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| rank[s & !(1 << i)])
                .max()
                .unwrap_or(0)
        };
    }

    let hereditary = (0..full)
        .filter(|&s| indep[s])
        .all(|s| (0..n).all(|i| s >> i & 1 == 0 || indep[s & !(1 << i)]));

    let independents: Vec<usize> = (0..full).filter(|&s| indep[s]).collect();
    let augmentation = independents.iter().all(|&i| {
        independents.iter().all(|&j| {
            i.count_ones() >= j.count_ones()
                || (0..n).any(|e| ((j & !i) >> e) & 1 == 1 && indep[i | 1 << e])
        })
    });

    let submodular =
        (0..full).all(|a| (0..full).all(|b| rank[a | b] + rank[a & b] <= rank[a] + rank[b]));

    let rank_bounds = rank[0] == 0
        && (0..full).all(|s| {
            rank[s] <= s.count_ones() as usize && (0..n).all(|i| rank[s & !(1 << i)] <= rank[s])
        });

    let greedy_rank_agrees = (0..full).all(|s| {
        m.rank(&ElementSet::from(members(s, n)))
            .is_ok_and(|r| r == rank[s])
    });

    Ok(AxiomReport {
        empty_independent: indep[0],
        hereditary,
        augmentation,
        submodular,
        rank_bounds,
        greedy_rank_agrees,
    })
}
