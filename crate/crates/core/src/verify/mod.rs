//! Brute-force oracles, seeded instance generation, and the search for
//! instances where shift-by-one and shift-by-two cannot hold together.

mod axioms;
mod brute;
mod generate;
mod partition_oracle;
mod shift2;

pub use axioms::{exhaustive_axiom_check, AxiomReport, EXHAUSTIVE_AXIOM_CAP};
pub use brute::{
    brute_force_cyclic_exchange, count_shift_solutions, ShiftCounts, DEFAULT_BRUTE_FORCE_GATE,
};
pub use generate::{random_bases, random_instance, random_matroid, InstanceGenSpec, MatroidClass};
pub use partition_oracle::{brute_force_partition, DEFAULT_ASSIGNMENT_GATE};
pub use shift2::{
    catalog, evaluate_candidate, search_shift2_counterexample, verify_witness, CandidateOrigin,
    CandidateVerdict, ExhaustionReport, SearchConfig, SearchOutcome, Shift2Witness,
    DEFAULT_SEARCH_BUDGET,
};
