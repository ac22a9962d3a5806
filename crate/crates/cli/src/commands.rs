use std::path::Path;
use std::sync::Arc;

use matex::matroid::DEFAULT_ENUMERATION_CAP;
use matex::verify::{
    brute_force_cyclic_exchange, search_shift2_counterexample, SearchConfig, SearchOutcome,
    DEFAULT_BRUTE_FORCE_GATE,
};
use matex::{
    check_base_axiom, cyclic_exchange, enumerate_bases, matroid_partition, AnyMatroid, Arm,
    AxiomCheck, ElementSet, ExchangeInstance, Matroid, MatroidRef, MatroidSpec, PartitionOutcome,
    PartitionProblem,
};
use serde::Serialize;

use crate::exit::{Code, Failure};
use crate::formats::{
    parse_json, read_json, BasesFile, BasesOutput, ExchangeOutput, PartitionOutput, ProblemFile,
    Verification,
};

/// What a subcommand produced: a document for stdout (or `--output`) and the
/// exit code to finish with.
pub struct Output {
    pub body: String,
    pub code: Code,
}

impl Output {
    fn json<T: Serialize>(value: &T, code: Code) -> Self {
        let body = serde_json::to_string(value).expect("output types serialize");
        Self { body, code }
    }
}

fn build(spec: &MatroidSpec) -> Result<AnyMatroid, Failure> {
    Ok(spec.build()?)
}

pub fn check(path: &Path, cap: Option<usize>) -> Result<Output, Failure> {
    let spec: MatroidSpec = read_json(path)?;
    if let MatroidSpec::Bases { n, bases } = &spec {
        let verdict = check_base_axiom(*n, bases)?;
        if let AxiomCheck::Exchange { b1, b2, e1 } = &verdict {
            return Err(Failure::new(
                Code::Invalid,
                format!("exchange axiom violated: B1={b1} B2={b2} e1={e1}"),
            ));
        }
        if !verdict.is_valid() {
            return Err(Failure::new(Code::Invalid, verdict.to_string()));
        }
    }
    let m = build(&spec)?;
    let (rank, n) = (m.full_rank(), m.ground_size());
    let cap = cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
    let body = match enumerate_bases(&m, cap) {
        Ok(bases) => format!("rank {rank}, {n} elements, {} bases", bases.len()),
        Err(_) => {
            format!("rank {rank}, {n} elements, bases not counted (more than {cap} elements)")
        }
    };
    Ok(Output {
        body,
        code: Code::Ok,
    })
}

pub fn enumerate(path: &Path, cap: Option<usize>) -> Result<Output, Failure> {
    let m = build(&read_json(path)?)?;
    let bases = enumerate_bases(&m, cap.unwrap_or(DEFAULT_ENUMERATION_CAP))?;
    Ok(Output::json(
        &BasesOutput {
            rank: m.full_rank(),
            bases,
        },
        Code::Ok,
    ))
}

pub fn exchange(
    matroid: &Path,
    bases: &Path,
    a1: &str,
    verify: bool,
    cap: Option<usize>,
) -> Result<Output, Failure> {
    let m: MatroidRef = Arc::new(build(&read_json(matroid)?)?);
    let BasesFile { bases } = read_json(bases)?;
    let seed: ElementSet = parse_json(a1).map_err(|msg| Failure::parse(format!("--a1: {msg}")))?;
    let instance = ExchangeInstance::new(m, bases, seed)?;
    let result = cyclic_exchange(&instance)?;

    let verified = if verify && instance.k() >= 2 {
        let solutions =
            brute_force_cyclic_exchange(&instance, cap.unwrap_or(DEFAULT_BRUTE_FORCE_GATE))?;
        let member = solutions.iter().any(|t| t[..] == result.parts[1..]);
        if !member {
            return Err(Failure::new(
                Code::Internal,
                "constructed exchange is missing from the brute-force solution list",
            ));
        }
        Some(Verification {
            member,
            solutions: solutions.len(),
        })
    } else if verify {
        Some(Verification {
            member: true,
            solutions: 1,
        })
    } else {
        None
    };

    Ok(Output::json(
        &ExchangeOutput {
            parts: result.parts,
            shifted: result.shifted,
            verified,
        },
        Code::Ok,
    ))
}

pub fn partition(path: &Path) -> Result<Output, Failure> {
    let file: ProblemFile = read_json(path)?;
    let arms = file
        .arms
        .iter()
        .map(|arm| {
            let m: MatroidRef = Arc::new(build(&arm.matroid)?);
            Ok(Arm::new(arm.allowed.clone(), m)?)
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    let problem = PartitionProblem::new(file.universe, arms)?;
    Ok(match matroid_partition(&problem)? {
        PartitionOutcome::Complete(p) => Output::json(&PartitionOutput::Parts(p.parts), Code::Ok),
        PartitionOutcome::Deficient(cert) => {
            Output::json(&PartitionOutput::Certificate(cert), Code::Infeasible)
        }
    })
}

pub fn search_shift2(
    k: usize,
    budget: usize,
    seed: u64,
    threads: usize,
) -> Result<Output, Failure> {
    if k < 3 {
        return Err(Failure::parse(format!(
            "search-shift2 needs --k of at least 3, got {k}"
        )));
    }
    let config = SearchConfig {
        k,
        budget,
        seed,
        threads,
    };
    let outcome = search_shift2_counterexample(&config)?;
    let code = match outcome {
        SearchOutcome::Witness(_) => Code::Ok,
        SearchOutcome::Exhausted(_) => Code::Exhausted,
    };
    Ok(Output::json(&outcome, code))
}
