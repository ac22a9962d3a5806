use crate::{Error, Result};

use super::Matroid;

/// `U(r, n)`: every set of at most `r` elements is independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformMatroid {
    n: usize,
    rank: usize,
}

impl UniformMatroid {
    pub fn new(n: usize, rank: usize) -> Result<Self> {
        if rank > n {
            return Err(Error::Invalid(format!(
                "uniform matroid rank {rank} exceeds ground size {n}"
            )));
        }
        Ok(Self { n, rank })
    }

    pub fn rank_bound(&self) -> usize {
        self.rank
    }
}

impl Matroid for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        set.len() <= self.rank
    }

    fn full_rank(&self) -> usize {
        self.rank
    }
}
