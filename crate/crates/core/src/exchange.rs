//! Multiple cyclic exchange.
//!
//! Given bases `B_1..B_k` and `A_1 ⊆ B_1`, find `A_i ⊆ B_i` such that every
//! `(B_i \ A_i) ∪ A_{i-1}` (indices mod `k`) is a basis.
//!
//! The bases are lifted to disjoint parallel copies, each copy gets a list
//! of allowed colors, and a matroid partition of all slots into the color
//! classes is computed. The part with color `i` is exactly the shifted set
//! `i`, and `A_i` is what basis `i` contributes to color `i + 1`.
//!
//! Indices in this module are 0-based: basis `j` and color `j` correspond to
//! `B_{j+1}` and color `j+1` in the usual 1-based statement.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::matroid::{disjoint_copies, restrict, Matroid, MatroidRef, Restriction, SlotMatroid};
use crate::partition::{matroid_partition, Arm, Partition, PartitionOutcome, PartitionProblem};
use crate::{ElementSet, Error, Result};

/// Bases `B_1..B_k` of one matroid and the seed `A_1 ⊆ B_1`.
#[derive(Debug, Clone)]
pub struct ExchangeInstance {
    matroid: MatroidRef,
    bases: Vec<ElementSet>,
    seed: ElementSet,
}

impl ExchangeInstance {
    /// Checks that every `B_i` is a basis and that the seed lies in `B_1`.
    pub fn new(matroid: MatroidRef, bases: Vec<ElementSet>, seed: ElementSet) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::Invalid("at least one basis is required".into()));
        }
        for (index, b) in bases.iter().enumerate() {
            if !matroid.is_basis(b)? {
                return Err(Error::NotABasis { index });
            }
        }
        if !seed.is_subset(&bases[0]) {
            return Err(Error::SeedNotSubset);
        }
        Ok(Self {
            matroid,
            bases,
            seed,
        })
    }

    pub fn matroid(&self) -> &MatroidRef {
        &self.matroid
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn seed(&self) -> &ElementSet {
        &self.seed
    }

    pub fn k(&self) -> usize {
        self.bases.len()
    }

    /// `(B_i \ A_i) ∪ A_{i-1}` for every `i`, given all parts `A_1..A_k`.
    pub fn shifted_sets(&self, parts: &[ElementSet]) -> Vec<ElementSet> {
        shifted_by(&self.bases, parts, 1)
    }
}

/// `(B_i \ A_i) ∪ A_{i-s}` with indices mod `k`.
pub fn shifted_by(bases: &[ElementSet], parts: &[ElementSet], shift: usize) -> Vec<ElementSet> {
    let k = bases.len();
    (0..k)
        .map(|i| {
            bases[i]
                .difference(&parts[i])
                .union(&parts[(i + k - shift % k) % k])
        })
        .collect()
}

/// The color classes over the lifted slots.
#[derive(Debug, Clone)]
pub struct ColorClasses {
    lift: Arc<SlotMatroid>,
    classes: Vec<ElementSet>,
    lists: Vec<Vec<usize>>,
    restricted: Vec<Restriction>,
}

impl ColorClasses {
    pub fn lift(&self) -> &SlotMatroid {
        &self.lift
    }

    /// `C_1..C_k` as slot sets.
    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    /// Allowed colors per slot, ascending.
    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }

    /// `M_i`: the lift restricted to `C_i`.
    pub fn restricted(&self) -> &[Restriction] {
        &self.restricted
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn partition_problem(&self) -> PartitionProblem {
        let arms = self
            .classes
            .iter()
            .zip(&self.restricted)
            .map(|(c, r)| Arm::new(c.clone(), Arc::new(r.clone())))
            .collect::<Result<Vec<_>>>()
            .expect("restriction sizes match their classes");
        PartitionProblem::new(self.lift.ground_size(), arms)
            .expect("color classes lie inside the lifted universe")
    }
}

/// Per-color ranks `r_i(A ∩ C_i)` for a slot set `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankLedger {
    pub terms: Vec<usize>,
    pub sum: usize,
    pub size: usize,
}

impl RankLedger {
    pub fn holds(&self) -> bool {
        self.sum >= self.size
    }
}

/// Assigns color lists to the lifted slots and builds `C_i` and `M_i`.
///
/// Basis 0 outside the seed gets `{0}`, the seed gets `{1}`, basis `j` for
/// `1 <= j <= k-2` gets `{j, j+1}`, and the last basis gets `{0, k-1}`.
pub fn build_color_classes(instance: &ExchangeInstance) -> Result<ColorClasses> {
    let k = instance.k();
    if k < 2 {
        return Err(Error::Invalid(
            "color classes need at least two bases".into(),
        ));
    }
    let lift = Arc::new(disjoint_copies(instance.matroid.clone(), &instance.bases)?);
    let seed_slots = lift
        .lift(0, &instance.seed)
        .map_err(|_| Error::SeedNotSubset)?;

    let mut lists = vec![Vec::new(); lift.ground_size()];
    for j in 0..k {
        for s in lift.base_slots(j) {
            lists[s] = if j == 0 {
                vec![if seed_slots.contains(s) { 1 } else { 0 }]
            } else if j == k - 1 {
                vec![0, k - 1]
            } else {
                vec![j, j + 1]
            };
        }
    }
    let classes: Vec<ElementSet> = (0..k)
        .map(|c| {
            (0..lists.len())
                .filter(|&s| lists[s].contains(&c))
                .collect()
        })
        .collect();
    let lift_ref: MatroidRef = lift.clone();
    let restricted = classes
        .iter()
        .map(|c| restrict(lift_ref.clone(), c))
        .collect::<Result<Vec<_>>>()?;
    Ok(ColorClasses {
        lift,
        classes,
        lists,
        restricted,
    })
}

/// Evaluates `sum_i r_i(A ∩ C_i)` against `|A|` for a slot set `A`.
pub fn check_rank_inequality(classes: &ColorClasses, set: &ElementSet) -> RankLedger {
    let terms: Vec<usize> = classes
        .classes
        .iter()
        .map(|c| classes.lift.greedy_basis_of(&set.intersection(c)).len())
        .collect();
    RankLedger {
        sum: terms.iter().sum(),
        size: set.len(),
        terms,
    }
}

/// Output of [`cyclic_exchange`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeResult {
    /// `A_1..A_k`, each a subset of the matching input basis.
    pub parts: Vec<ElementSet>,
    /// `(B_i \ A_i) ∪ A_{i-1}` for every `i`.
    pub shifted: Vec<ElementSet>,
    /// Slot partition `D_1..D_k`; absent when `k = 1`.
    pub partition: Option<Partition>,
}

/// JSON shape of an exchange result: `{"A":[...],"shifted":[...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExchangeReport {
    #[serde(rename = "A")]
    pub parts: Vec<ElementSet>,
    pub shifted: Vec<ElementSet>,
}

impl From<&ExchangeResult> for ExchangeReport {
    fn from(r: &ExchangeResult) -> Self {
        Self {
            parts: r.parts.clone(),
            shifted: r.shifted.clone(),
        }
    }
}

/// Computes `A_2..A_k` for the instance and verifies every shifted set.
pub fn cyclic_exchange(instance: &ExchangeInstance) -> Result<ExchangeResult> {
    let k = instance.k();
    if k == 1 {
        return Ok(ExchangeResult {
            parts: vec![instance.seed.clone()],
            shifted: vec![instance.bases[0].clone()],
            partition: None,
        });
    }

    let classes = build_color_classes(instance)?;
    let problem = classes.partition_problem();
    let partition = match matroid_partition(&problem)? {
        PartitionOutcome::Complete(p) => p,
        PartitionOutcome::Deficient(cert) => {
            return Err(Error::Internal(format!(
                "color classes admit no partition (witness {}, rank sum {} < {})",
                cert.witness, cert.rank_sum, cert.size
            )))
        }
    };

    let lift = &classes.lift;
    let d = &partition.parts;
    // A_j is what basis j contributes to color j+1; for j = 0 this is the seed
    let parts: Vec<ElementSet> = (0..k)
        .map(|j| {
            let slots = lift.base_slots(j);
            d[(j + 1) % k]
                .iter()
                .filter(|s| slots.contains(s))
                .map(|&s| lift.slots()[s].element)
                .collect()
        })
        .collect();
    if parts[0] != instance.seed {
        return Err(Error::Internal(format!(
            "color 2 meets the first basis in {} instead of the seed {}",
            parts[0], instance.seed
        )));
    }

    let shifted = instance.shifted_sets(&parts);
    for (i, (set, part)) in shifted.iter().zip(d).enumerate() {
        let projected = ElementSet::from(lift.project(part));
        if projected != *set || projected.len() != part.len() {
            return Err(Error::Internal(format!(
                "shifted set {i} does not match the projection of part {i}"
            )));
        }
        if !instance.matroid.is_basis(set)? {
            return Err(Error::Internal(format!("shifted set {i} is not a basis")));
        }
    }

    Ok(ExchangeResult {
        parts,
        shifted,
        partition: Some(partition),
    })
}

/// For bases `B_1, B_2` and `A_1 ⊆ B_1`, returns `A_2 ⊆ B_2` with both
/// `(B_1 \ A_1) ∪ A_2` and `(B_2 \ A_2) ∪ A_1` bases.
pub fn multiple_symmetric_exchange(
    matroid: MatroidRef,
    b1: &ElementSet,
    b2: &ElementSet,
    a1: &ElementSet,
) -> Result<ElementSet> {
    let instance = ExchangeInstance::new(matroid, vec![b1.clone(), b2.clone()], a1.clone())?;
    let mut result = cyclic_exchange(&instance)?;
    Ok(result.parts.swap_remove(1))
}

/// Single-element symmetric exchange: `e2 ∈ B_2` with both
/// `B_1 - e1 + e2` and `B_2 - e2 + e1` bases.
pub fn symmetric_exchange_single(
    matroid: MatroidRef,
    b1: &ElementSet,
    b2: &ElementSet,
    e1: usize,
) -> Result<usize> {
    if !b1.contains(e1) {
        return Err(Error::NotInBasis(e1));
    }
    if b2.contains(e1) {
        for (index, b) in [b1, b2].into_iter().enumerate() {
            if !matroid.is_basis(b)? {
                return Err(Error::NotABasis { index });
            }
        }
        return Ok(e1);
    }
    let a2 = multiple_symmetric_exchange(matroid, b1, b2, &[e1].into())?;
    match a2.as_slice() {
        [e2] => Ok(*e2),
        _ => Err(Error::Internal(format!(
            "single exchange produced {a2} instead of one element"
        ))),
    }
}
