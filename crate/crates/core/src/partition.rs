//! Matroid partition: split a universe into sets `D_i`, each independent in
//! its own matroid `M_i` over an allowed subset `C_i`, or prove it impossible.
//!
//! Elements are inserted one at a time in ascending id. Each insertion runs a
//! breadth-first search in the exchange digraph from the new element:
//!
//! * `x -> sink_i` when `x` is in `C_i` and `D_i + x` is independent in `M_i`;
//! * `x -> y` when `y` is in `D_i`, `x` is in `C_i \ D_i`, and `D_i - y + x`
//!   is independent in `M_i`.
//!
//! A shortest path to a sink is applied as a chain of swaps. When no sink is
//! reachable, the reached set `R` satisfies `sum_i r_i(R ∩ C_i) = |R| - 1`,
//! which is returned as a deficiency certificate.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::matroid::{restrict, Matroid, MatroidRef};
use crate::{ElementSet, Error, Result};

/// One side of a partition problem: a matroid living on the allowed set.
///
/// Local element `j` of `matroid` stands for `allowed[j]`.
#[derive(Debug, Clone)]
pub struct Arm {
    allowed: ElementSet,
    matroid: MatroidRef,
}

impl Arm {
    /// `matroid` must have exactly `allowed.len()` elements.
    pub fn new(allowed: ElementSet, matroid: MatroidRef) -> Result<Self> {
        if matroid.ground_size() != allowed.len() {
            return Err(Error::Invalid(format!(
                "arm matroid has {} elements but its allowed set has {}",
                matroid.ground_size(),
                allowed.len()
            )));
        }
        Ok(Self { allowed, matroid })
    }

    /// Restricts a matroid on the whole universe to `allowed`.
    pub fn restricted(universe_matroid: MatroidRef, allowed: ElementSet) -> Result<Self> {
        let r = restrict(universe_matroid, &allowed)?;
        Self::new(allowed, std::sync::Arc::new(r))
    }

    pub fn allowed(&self) -> &ElementSet {
        &self.allowed
    }

    pub fn matroid(&self) -> &MatroidRef {
        &self.matroid
    }

    fn local(&self, e: usize) -> Option<usize> {
        self.allowed.binary_search(&e).ok()
    }

    /// Independence of a set of universe ids; false if any lies outside the arm.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut local = Vec::with_capacity(set.len());
        for &e in set {
            match self.local(e) {
                Some(j) => local.push(j),
                None => return false,
            }
        }
        self.matroid.is_independent(&local)
    }

    /// `r_i(set ∩ C_i)`.
    pub fn rank_of(&self, set: &[usize]) -> usize {
        let local: Vec<usize> = set.iter().filter_map(|&e| self.local(e)).collect();
        self.matroid.greedy_basis_of(&local).len()
    }
}

/// A universe `0..universe` and the arms it must be split across.
#[derive(Debug, Clone)]
pub struct PartitionProblem {
    universe: usize,
    arms: Vec<Arm>,
}

impl PartitionProblem {
    pub fn new(universe: usize, arms: Vec<Arm>) -> Result<Self> {
        if arms.is_empty() {
            return Err(Error::Invalid(
                "a partition problem needs at least one arm".into(),
            ));
        }
        for arm in &arms {
            if let Some(&element) = arm.allowed.iter().find(|&&e| e >= universe) {
                return Err(Error::ElementOutOfRange {
                    element,
                    ground: universe,
                });
            }
        }
        Ok(Self { universe, arms })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn arms(&self) -> &[Arm] {
        &self.arms
    }

    /// Per-arm ranks `r_i(set ∩ C_i)`.
    pub fn rank_ledger(&self, set: &[usize]) -> Vec<usize> {
        self.arms.iter().map(|a| a.rank_of(set)).collect()
    }
}

/// Disjoint sets `D_1..D_k`, `D_i` independent in arm `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Partition {
    pub parts: Vec<ElementSet>,
}

/// A set `A` with `sum_i r_i(A ∩ C_i) < |A|`; no full partition exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeficiencyCertificate {
    pub witness: ElementSet,
    /// `r_i(witness ∩ C_i)` per arm.
    pub ranks: Vec<usize>,
    pub rank_sum: usize,
    pub size: usize,
}

impl DeficiencyCertificate {
    /// Recomputes the ranks from the problem's oracles.
    pub fn verify(&self, problem: &PartitionProblem) -> bool {
        let ranks = problem.rank_ledger(&self.witness);
        let sum: usize = ranks.iter().sum();
        ranks == self.ranks
            && sum == self.rank_sum
            && self.size == self.witness.len()
            && sum < self.size
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionOutcome {
    Complete(Partition),
    Deficient(DeficiencyCertificate),
}

/// True iff the parts are pairwise disjoint, allowed, independent in their
/// arms, and cover the universe.
pub fn verify_partition(problem: &PartitionProblem, partition: &Partition) -> bool {
    if partition.parts.len() != problem.arms.len() {
        return false;
    }
    let mut seen = vec![false; problem.universe];
    for (part, arm) in partition.parts.iter().zip(&problem.arms) {
        for &e in part.iter() {
            if e >= problem.universe || seen[e] {
                return false;
            }
            seen[e] = true;
        }
        if !part.is_subset(&arm.allowed) || !arm.is_independent(part) {
            return false;
        }
    }
    seen.into_iter().all(|s| s)
}

/// Runs the augmenting-path partition algorithm.
///
/// Returns `Err(Error::Internal)` only if a certificate fails its own
/// re-verification, which would indicate a bug.
pub fn matroid_partition(problem: &PartitionProblem) -> Result<PartitionOutcome> {
    let mut state = State::new(problem);
    for e in 0..problem.universe {
        if let Some(cert) = state.insert(e) {
            if !cert.verify(problem) {
                return Err(Error::Internal(format!(
                    "deficiency certificate for {} failed verification",
                    cert.witness
                )));
            }
            return Ok(PartitionOutcome::Deficient(cert));
        }
        debug_assert!(
            state.invariant_holds(),
            "partition invariant broken after inserting {e}"
        );
    }
    let partition = Partition { parts: state.parts };
    debug_assert!(verify_partition(problem, &partition));
    Ok(PartitionOutcome::Complete(partition))
}

struct State<'a> {
    problem: &'a PartitionProblem,
    parts: Vec<ElementSet>,
    owner: Vec<Option<usize>>,
    /// arms whose allowed set contains each element, ascending
    arms_of: Vec<Vec<usize>>,
}

impl<'a> State<'a> {
    fn new(problem: &'a PartitionProblem) -> Self {
        let mut arms_of = vec![Vec::new(); problem.universe];
        for (i, arm) in problem.arms.iter().enumerate() {
            for &e in arm.allowed.iter() {
                arms_of[e].push(i);
            }
        }
        Self {
            problem,
            parts: vec![ElementSet::new(); problem.arms.len()],
            owner: vec![None; problem.universe],
            arms_of,
        }
    }

    fn with_added(&self, arm: usize, x: usize) -> bool {
        let mut set = self.parts[arm].to_vec();
        set.push(x);
        self.problem.arms[arm].is_independent(&set)
    }

    fn with_swapped(&self, arm: usize, out: usize, x: usize) -> bool {
        let mut set: Vec<usize> = self.parts[arm]
            .iter()
            .copied()
            .filter(|&y| y != out)
            .collect();
        set.push(x);
        self.problem.arms[arm].is_independent(&set)
    }

    /// Covers `source`, or returns the certificate built from the reached set.
    fn insert(&mut self, source: usize) -> Option<DeficiencyCertificate> {
        let n = self.problem.universe;
        // pred[y] = (x, arm): y leaves D_arm and x takes its place
        let mut pred: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut visited = vec![false; n];
        visited[source] = true;
        let mut queue = VecDeque::from([source]);

        while let Some(x) = queue.pop_front() {
            let candidate_arms: Vec<usize> = self.arms_of[x]
                .iter()
                .copied()
                .filter(|&i| self.owner[x] != Some(i))
                .collect();
            if let Some(&sink) = candidate_arms.iter().find(|&&i| self.with_added(i, x)) {
                self.augment(x, sink, &pred);
                return None;
            }
            let mut next: Vec<(usize, usize)> = Vec::new();
            for &i in &candidate_arms {
                for &y in self.parts[i].iter() {
                    if !visited[y] && self.with_swapped(i, y, x) {
                        next.push((y, i));
                    }
                }
            }
            next.sort_unstable();
            for (y, i) in next {
                visited[y] = true;
                pred[y] = Some((x, i));
                queue.push_back(y);
            }
        }

        let witness: ElementSet = (0..n).filter(|&e| visited[e]).collect();
        let ranks = self.problem.rank_ledger(&witness);
        Some(DeficiencyCertificate {
            rank_sum: ranks.iter().sum(),
            size: witness.len(),
            witness,
            ranks,
        })
    }

    fn augment(&mut self, last: usize, sink: usize, pred: &[Option<(usize, usize)>]) {
        // collect moves (element, from, to) walking back from the sink
        let mut moves = vec![(last, self.owner[last], sink)];
        let mut y = last;
        while let Some((x, arm)) = pred[y] {
            moves.push((x, self.owner[x], arm));
            y = x;
        }
        for &(e, from, _) in &moves {
            if let Some(from) = from {
                self.parts[from].remove(e);
            }
        }
        for &(e, _, to) in &moves {
            self.parts[to].insert(e);
            self.owner[e] = Some(to);
        }
    }

    fn invariant_holds(&self) -> bool {
        let mut seen = vec![false; self.problem.universe];
        self.parts
            .iter()
            .zip(&self.problem.arms)
            .all(|(part, arm)| {
                part.iter().all(|&e| !std::mem::replace(&mut seen[e], true))
                    && arm.is_independent(part)
            })
    }
}
