use crate::{Error, Result};

use super::Matroid;

/// Column matroid of a matrix over the prime field GF(p), `p < 2^16`.
///
/// Element `i` is column `i`; independence is decided by exact row
/// reduction mod `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMatroid {
    prime: u32,
    rows: usize,
    columns: Vec<Vec<u32>>,
    rank: usize,
}

impl LinearMatroid {
    pub fn new(prime: u32, rows: usize, columns: Vec<Vec<u32>>) -> Result<Self> {
        if prime >= 1 << 16 || !is_prime(prime) {
            return Err(Error::Invalid(format!(
                "field characteristic {prime} is not a prime below 65536"
            )));
        }
        for (i, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Invalid(format!(
                    "column {i} has length {} but the matrix has {rows} rows",
                    col.len()
                )));
            }
            if let Some(&x) = col.iter().find(|&&x| x >= prime) {
                return Err(Error::Invalid(format!(
                    "column {i} has entry {x} outside GF({prime})"
                )));
            }
        }
        let mut m = Self {
            prime,
            rows,
            columns,
            rank: 0,
        };
        let all: Vec<usize> = (0..m.columns.len()).collect();
        m.rank = m.column_rank(&all);
        Ok(m)
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// Rank of the selected columns.
    pub fn column_rank(&self, set: &[usize]) -> usize {
        let p = u64::from(self.prime);
        // one row per selected column; reduce to echelon form
        let mut mat: Vec<Vec<u64>> = set
            .iter()
            .map(|&c| self.columns[c].iter().map(|&x| u64::from(x)).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.rows {
            let Some(pivot) = (rank..mat.len()).find(|&r| mat[r][col] != 0) else {
                continue;
            };
            mat.swap(rank, pivot);
            let inv = mod_pow(mat[rank][col], p - 2, p);
            for x in mat[rank].iter_mut() {
                *x = *x * inv % p;
            }
            let pivot_row = mat[rank].clone();
            for (r, row) in mat.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let factor = row[col];
                    for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                        *x = (*x + p - factor * y % p) % p;
                    }
                }
            }
            rank += 1;
            if rank == mat.len() {
                break;
            }
        }
        rank
    }
}

impl Matroid for LinearMatroid {
    fn ground_size(&self) -> usize {
        self.columns.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        set.len() <= self.rank && self.column_rank(set) == set.len()
    }

    fn full_rank(&self) -> usize {
        self.rank
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(LinearMatroid::new(4, 1, vec![vec![1]]).is_err());
        assert!(LinearMatroid::new(65537, 1, vec![vec![1]]).is_err());
        assert!(LinearMatroid::new(3, 2, vec![vec![1]]).is_err());
        assert!(LinearMatroid::new(3, 1, vec![vec![3]]).is_err());
    }

    #[test]
    fn characteristic_matters() {
        // (1,1,0), (1,0,1), (0,1,1) sum to zero in characteristic 2 only
        let cols = vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
        let gf2 = LinearMatroid::new(2, 3, cols.clone()).unwrap();
        let gf3 = LinearMatroid::new(3, 3, cols).unwrap();
        assert!(!gf2.is_independent(&[0, 1, 2]));
        assert!(gf3.is_independent(&[0, 1, 2]));
    }

    #[test]
    fn zero_column_is_a_loop() {
        let m = LinearMatroid::new(5, 2, vec![vec![0, 0], vec![2, 3]]).unwrap();
        assert!(!m.is_independent(&[0]));
        assert_eq!(m.full_rank(), 1);
    }

    #[test]
    fn large_prime_arithmetic() {
        let p = 65521;
        let m = LinearMatroid::new(p, 2, vec![vec![p - 1, 2], vec![1, p - 2], vec![3, 7]]).unwrap();
        // column 1 = -column 0
        assert!(!m.is_independent(&[0, 1]));
        assert!(m.is_independent(&[0, 2]));
    }
}
