//! Search for rank-3 instances where no choice of `A_2..A_k` makes both the
//! shift-by-one and the shift-by-two sets bases.
//!
//! Candidates are visited in a fixed order: every ordered `k`-tuple of bases
//! of each catalog matroid, then random rank-3 linear matroids over GF(2),
//! GF(3) and GF(5). A candidate is a matroid plus `B_1..B_k`; every
//! `A_1 ⊆ B_1` is tried for it.

use std::sync::Arc;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::brute::{count_shift_solutions, ShiftCounts};
use super::generate::{random_bases, random_matroid, MatroidClass};
use crate::matroid::{
    enumerate_bases, AnyMatroid, GraphicMatroid, LinearMatroid, Matroid, MatroidSpec,
    UniformMatroid, DEFAULT_ENUMERATION_CAP,
};
use crate::{ElementSet, Error, Result};

pub const DEFAULT_SEARCH_BUDGET: usize = 100_000;

const CHUNK: usize = 512;
const RANDOM_PRIMES: [u32; 3] = [2, 3, 5];
const RANDOM_MAX_N: usize = 12;

const INTERPRETATIONS: [&str; 2] = [
    "existential: some A_1 in B_1 admits no (A_2..A_k) satisfying shift-by-one and shift-by-two",
    "universal: every A_1 other than the empty set and B_1 admits none",
];

fn interpretations() -> Vec<String> {
    INTERPRETATIONS.iter().map(|s| s.to_string()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub k: usize,
    /// Maximum number of candidates examined.
    pub budget: usize,
    pub seed: u64,
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            k: 3,
            budget: DEFAULT_SEARCH_BUDGET,
            seed: 0,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    Catalog,
    Random,
}

/// Where a candidate came from, enough to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CandidateOrigin {
    pub stage: Stage,
    pub name: String,
    /// Position in the global candidate order.
    pub index: usize,
    pub search_seed: u64,
}

/// A rank-3 matroid, bases `B_1..B_k`, and `A_1` such that some `(A_2..A_k)`
/// satisfies shift-by-one but none also satisfies shift-by-two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Shift2Witness {
    pub k: usize,
    pub matroid: MatroidSpec,
    pub bases: Vec<ElementSet>,
    #[serde(rename = "A1")]
    pub seed_set: ElementSet,
    /// Number of `(A_2..A_k)` tuples enumerated for `A_1`.
    pub tuples_checked: usize,
    /// How many of them satisfy shift-by-one.
    pub shift_one_solutions: usize,
    /// Whether the failure also holds for every `A_1` except `∅` and `B_1`.
    pub every_nontrivial_seed_fails: bool,
    pub origin: CandidateOrigin,
    pub interpretations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExhaustionReport {
    pub k: usize,
    pub budget: usize,
    pub seed: u64,
    pub candidates_examined: usize,
    pub catalog_candidates: usize,
    pub random_candidates: usize,
    pub seed_sets_checked: usize,
    pub tuples_checked: usize,
    pub interpretations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum SearchOutcome {
    Witness(Shift2Witness),
    Exhausted(ExhaustionReport),
}

/// Result of examining one candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateVerdict {
    pub seed_sets_checked: usize,
    pub tuples_checked: usize,
    /// First `A_1` (by size, then lexicographically) with no joint solution.
    pub failing_seed: Option<(ElementSet, ShiftCounts)>,
}

/// Tries every `A_1 ⊆ B_1` until one admits no joint solution.
pub fn evaluate_candidate<M: Matroid + ?Sized>(m: &M, bases: &[ElementSet]) -> CandidateVerdict {
    let b1 = &bases[0];
    let mut verdict = CandidateVerdict {
        seed_sets_checked: 0,
        tuples_checked: 0,
        failing_seed: None,
    };
    for size in 0..=b1.len() {
        for seed in b1.iter().copied().combinations(size) {
            let seed = ElementSet::from(seed);
            let counts = count_shift_solutions(m, bases, &seed);
            verdict.seed_sets_checked += 1;
            verdict.tuples_checked += counts.tuples;
            if counts.joint == 0 {
                verdict.failing_seed = Some((seed, counts));
                return verdict;
            }
        }
    }
    verdict
}

/// The structured rank-3 matroids searched first, in search order.
pub fn catalog() -> Vec<(&'static str, AnyMatroid)> {
    let k4_edges = vec![[0, 1], [1, 2], [2, 3], [0, 2], [1, 3], [0, 3]];
    let mut k4_parallel = k4_edges.clone();
    k4_parallel.push([0, 1]);
    let points: Vec<Vec<u32>> = (1u32..8)
        .map(|v| vec![v & 1, (v >> 1) & 1, (v >> 2) & 1])
        .collect();
    let build = || -> Result<Vec<(&'static str, AnyMatroid)>> {
        Ok(vec![
            ("M(K4)", GraphicMatroid::new(4, k4_edges)?.into()),
            (
                "M(K4) with a doubled edge",
                GraphicMatroid::new(4, k4_parallel)?.into(),
            ),
            ("F7", LinearMatroid::new(2, 3, points.clone())?.into()),
            ("F7-", LinearMatroid::new(3, 3, points)?.into()),
            ("U(3,6)", UniformMatroid::new(6, 3)?.into()),
        ])
    };
    build().expect("catalog matroids are well formed")
}

struct Candidate {
    origin: CandidateOrigin,
    matroid: Arc<AnyMatroid>,
    bases: Vec<ElementSet>,
}

fn mix(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64)
        .wrapping_add(1)
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Lazily yields candidates in the fixed search order.
fn candidates(k: usize, seed: u64) -> impl Iterator<Item = Candidate> {
    let catalog: Vec<(&'static str, Arc<AnyMatroid>, Vec<ElementSet>)> = catalog()
        .into_iter()
        .map(|(name, m)| {
            let bases = enumerate_bases(&m, DEFAULT_ENUMERATION_CAP).expect("catalog is small");
            (name, Arc::new(m), bases)
        })
        .collect();
    let structured = catalog.into_iter().flat_map(move |(name, m, bases)| {
        (0..k)
            .map(|_| 0..bases.len())
            .multi_cartesian_product()
            .map(move |ix| {
                (
                    name,
                    m.clone(),
                    ix.iter().map(|&i| bases[i].clone()).collect(),
                )
            })
    });
    let random = (0..).map(move |t: usize| {
        let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, t));
        let prime = RANDOM_PRIMES[rng.gen_range(0..RANDOM_PRIMES.len())];
        let n = rng.gen_range(4..=RANDOM_MAX_N);
        let class = MatroidClass::Linear { prime, rows: 3, n };
        let m = random_matroid(&class, &mut rng).expect("random linear class is valid");
        let bases = random_bases(&m, k, &mut rng);
        ("random linear", Arc::new(m), bases)
    });
    structured
        .map(|c| (Stage::Catalog, c))
        .chain(random.map(|c| (Stage::Random, c)))
        .enumerate()
        .map(move |(index, (stage, (name, matroid, bases)))| Candidate {
            origin: CandidateOrigin {
                stage,
                name: name.to_string(),
                index,
                search_seed: seed,
            },
            matroid,
            bases,
        })
}

fn nontrivial_seeds_all_fail<M: Matroid + ?Sized>(m: &M, bases: &[ElementSet]) -> bool {
    let b1 = &bases[0];
    (1..b1.len()).all(|size| {
        b1.iter()
            .copied()
            .combinations(size)
            .all(|s| count_shift_solutions(m, bases, &ElementSet::from(s)).joint == 0)
    })
}

/// Runs the layered search. Output depends only on `k`, `budget` and `seed`,
/// never on `threads`.
pub fn search_shift2_counterexample(config: &SearchConfig) -> Result<SearchOutcome> {
    if config.k < 3 {
        return Err(Error::Invalid(format!(
            "shift-by-two search needs k >= 3, got {}",
            config.k
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads.max(1))
        .build()
        .map_err(|e| Error::Invalid(format!("cannot start worker pool: {e}")))?;

    let mut report = ExhaustionReport {
        k: config.k,
        budget: config.budget,
        seed: config.seed,
        candidates_examined: 0,
        catalog_candidates: 0,
        random_candidates: 0,
        seed_sets_checked: 0,
        tuples_checked: 0,
        interpretations: interpretations(),
    };
    let mut stream = candidates(config.k, config.seed).take(config.budget);
    loop {
        let chunk: Vec<Candidate> = stream.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return Ok(SearchOutcome::Exhausted(report));
        }
        let verdicts: Vec<CandidateVerdict> = pool.install(|| {
            chunk
                .par_iter()
                .map(|c| evaluate_candidate(c.matroid.as_ref(), &c.bases))
                .collect()
        });
        for (candidate, verdict) in chunk.into_iter().zip(verdicts) {
            report.candidates_examined += 1;
            match candidate.origin.stage {
                Stage::Catalog => report.catalog_candidates += 1,
                Stage::Random => report.random_candidates += 1,
            }
            report.seed_sets_checked += verdict.seed_sets_checked;
            report.tuples_checked += verdict.tuples_checked;
            let Some((seed_set, counts)) = verdict.failing_seed else {
                continue;
            };
            if counts.shift_one == 0 {
                return Err(Error::Internal(format!(
                    "candidate {} has no shift-by-one solution for A_1 = {seed_set}",
                    candidate.origin.index
                )));
            }
            let m = candidate.matroid.as_ref();
            if m.full_rank() != 3 {
                // only rank-3 candidates count as witnesses
                continue;
            }
            let witness = Shift2Witness {
                k: config.k,
                matroid: m.to_spec(),
                every_nontrivial_seed_fails: nontrivial_seeds_all_fail(m, &candidate.bases),
                bases: candidate.bases,
                seed_set,
                tuples_checked: counts.tuples,
                shift_one_solutions: counts.shift_one,
                origin: candidate.origin,
                interpretations: interpretations(),
            };
            if !verify_witness(&witness) {
                return Err(Error::Internal(format!(
                    "witness at candidate {} failed re-verification",
                    witness.origin.index
                )));
            }
            return Ok(SearchOutcome::Witness(witness));
        }
    }
}

/// Rebuilds the witness from its description and re-checks every claim by
/// exhaustive enumeration.
pub fn verify_witness(w: &Shift2Witness) -> bool {
    let Ok(m) = w.matroid.build() else {
        return false;
    };
    if m.full_rank() != 3 || w.k < 3 || w.bases.len() != w.k {
        return false;
    }
    if !w.bases.iter().all(|b| m.is_basis(b).unwrap_or(false)) {
        return false;
    }
    if !w.seed_set.is_subset(&w.bases[0]) {
        return false;
    }
    let counts = count_shift_solutions(&m, &w.bases, &w.seed_set);
    counts.tuples == w.tuples_checked
        && counts.shift_one == w.shift_one_solutions
        && counts.shift_one > 0
        && counts.joint == 0
}
