//! Matroid base-exchange algorithms in the independence-oracle model.
//!
//! The centerpiece is [`cyclic_exchange`]: given bases `B_1..B_k` of a
//! matroid and `A_1 ⊆ B_1`, it finds `A_i ⊆ B_i` such that every
//! `(B_i \ A_i) ∪ A_{i-1}` is again a basis. It is built from
//!
//! * [`matroid`]: oracle trait, concrete classes, restriction, and the
//!   disjoint-copies lift;
//! * [`partition`]: matroid partition by shortest augmenting paths;
//! * [`exchange`]: color classes and the readout of the exchange sets;
//! * [`verify`]: brute-force oracles, generators, and the shift-by-two search.

pub mod error;
pub mod exchange;
pub mod matroid;
pub mod partition;
mod set;
pub mod verify;

pub use error::{Error, Result};
pub use exchange::{
    build_color_classes, check_rank_inequality, cyclic_exchange, multiple_symmetric_exchange,
    symmetric_exchange_single, ColorClasses, ExchangeInstance, ExchangeReport, ExchangeResult,
    RankLedger,
};
pub use matroid::{
    check_base_axiom, disjoint_copies, enumerate_bases, restrict, AnyMatroid, AxiomCheck,
    BasisMatroid, GraphicMatroid, LinearMatroid, Matroid, MatroidRef, MatroidSpec, Restriction,
    SlotMatroid, UniformMatroid,
};
pub use partition::{
    matroid_partition, verify_partition, Arm, DeficiencyCertificate, Partition, PartitionOutcome,
    PartitionProblem,
};
pub use set::ElementSet;
