use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exchange::ExchangeInstance;
use crate::matroid::{
    enumerate_bases, AnyMatroid, BasisMatroid, GraphicMatroid, LinearMatroid, Matroid,
    UniformMatroid, DEFAULT_ENUMERATION_CAP,
};
use crate::{ElementSet, Error, Result};

const MAX_ATTEMPTS: usize = 64;

/// Matroid class and size parameters for random generation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidClass {
    Uniform {
        n: usize,
        rank: usize,
    },
    /// `edges` random endpoint pairs; loops and parallel edges may occur.
    Graphic {
        vertices: usize,
        edges: usize,
    },
    /// `n` random columns in GF(prime)^rows, redrawn until they span.
    Linear {
        prime: u32,
        rows: usize,
        n: usize,
    },
    /// The explicit basis family of a random linear matroid.
    Bases {
        prime: u32,
        rows: usize,
        n: usize,
    },
}

/// Everything needed to replay a random exchange instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceGenSpec {
    pub matroid: MatroidClass,
    pub k: usize,
    pub seed: u64,
}

impl MatroidClass {
    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Invalid(msg));
        match *self {
            MatroidClass::Uniform { n, rank } if rank > n => {
                bad(format!("uniform rank {rank} exceeds n = {n}"))
            }
            MatroidClass::Graphic { vertices: 0, edges } if edges > 0 => {
                bad("graphic class needs at least one vertex".into())
            }
            MatroidClass::Linear { prime, .. } | MatroidClass::Bases { prime, .. }
                if prime >= 1 << 16 || !crate::matroid::linear_is_prime(prime) =>
            {
                bad(format!("{prime} is not a prime below 65536"))
            }
            MatroidClass::Bases { n, .. } if n > DEFAULT_ENUMERATION_CAP => bad(format!(
                "bases class needs n <= {DEFAULT_ENUMERATION_CAP}, got {n}"
            )),
            _ => Ok(()),
        }
    }
}

fn random_columns<R: Rng>(prime: u32, rows: usize, n: usize, rng: &mut R) -> Result<LinearMatroid> {
    let target = rows.min(n);
    let mut last = None;
    for _ in 0..MAX_ATTEMPTS {
        let cols: Vec<Vec<u32>> = (0..n)
            .map(|_| (0..rows).map(|_| rng.gen_range(0..prime)).collect())
            .collect();
        let m = LinearMatroid::new(prime, rows, cols)?;
        if m.full_rank() == target {
            return Ok(m);
        }
        last = Some(m);
    }
    // a spanning column set was never drawn; keep the last draw
    Ok(last.expect("MAX_ATTEMPTS is positive"))
}

/// Draws one matroid of the given class.
pub fn random_matroid<R: Rng>(class: &MatroidClass, rng: &mut R) -> Result<AnyMatroid> {
    class.validate()?;
    Ok(match *class {
        MatroidClass::Uniform { n, rank } => UniformMatroid::new(n, rank)?.into(),
        MatroidClass::Graphic { vertices, edges } => {
            let list = (0..edges)
                .map(|_| [rng.gen_range(0..vertices), rng.gen_range(0..vertices)])
                .collect();
            GraphicMatroid::new(vertices, list)?.into()
        }
        MatroidClass::Linear { prime, rows, n } => random_columns(prime, rows, n, rng)?.into(),
        MatroidClass::Bases { prime, rows, n } => {
            let lin = random_columns(prime, rows, n, rng)?;
            let bases = enumerate_bases(&lin, DEFAULT_ENUMERATION_CAP)?;
            BasisMatroid::new(n, bases)?.into()
        }
    })
}

/// `k` bases, each the greedy completion along a fresh random element order.
pub fn random_bases<M: Matroid + ?Sized, R: Rng>(m: &M, k: usize, rng: &mut R) -> Vec<ElementSet> {
    (0..k)
        .map(|_| {
            let mut order: Vec<usize> = (0..m.ground_size()).collect();
            order.shuffle(rng);
            ElementSet::from(m.greedy_basis_of(&order))
        })
        .collect()
}

/// Builds a random exchange instance, deterministically from `spec.seed`.
///
/// Matroids of rank zero are redrawn, up to a fixed number of attempts.
pub fn random_instance(spec: &InstanceGenSpec) -> Result<ExchangeInstance> {
    if spec.k == 0 {
        return Err(Error::Invalid("k must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..MAX_ATTEMPTS {
        let m = random_matroid(&spec.matroid, &mut rng)?;
        if m.full_rank() == 0 {
            continue;
        }
        let bases = random_bases(&m, spec.k, &mut rng);
        let seed: ElementSet = bases[0]
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        return ExchangeInstance::new(Arc::new(m), bases, seed);
    }
    Err(Error::Generation {
        attempts: MAX_ATTEMPTS,
        reason: "every drawn matroid had rank 0".into(),
    })
}
