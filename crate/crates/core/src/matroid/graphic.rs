use crate::{Error, Result};

use super::Matroid;

/// Cycle matroid of a multigraph. Element `i` is edge `i`; a set is
/// independent iff its edges form a forest. Self-loops are dependent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicMatroid {
    vertices: usize,
    edges: Vec<[usize; 2]>,
    rank: usize,
}

impl GraphicMatroid {
    pub fn new(vertices: usize, edges: Vec<[usize; 2]>) -> Result<Self> {
        if let Some(bad) = edges.iter().find(|[u, v]| *u >= vertices || *v >= vertices) {
            return Err(Error::Invalid(format!(
                "edge {bad:?} has an endpoint outside 0..{vertices}"
            )));
        }
        let mut dsu = DisjointSets::new(vertices);
        let rank = edges.iter().filter(|&&[u, v]| dsu.union(u, v)).count();
        Ok(Self {
            vertices,
            edges,
            rank,
        })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }
}

impl Matroid for GraphicMatroid {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        if set.len() > self.rank {
            return false;
        }
        let mut dsu = DisjointSets::new(self.vertices);
        set.iter().all(|&e| {
            let [u, v] = self.edges[e];
            dsu.union(u, v)
        })
    }

    fn full_rank(&self) -> usize {
        self.rank
    }
}

/// Union-find with path compression and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`; false if they were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}
