use serde::{Deserialize, Serialize};

use crate::{ElementSet, Result};

use super::{BasisMatroid, GraphicMatroid, LinearMatroid, Matroid, UniformMatroid};

/// On-disk description of a matroid, one JSON object per file.
///
/// ```json
/// {"type":"uniform","n":6,"rank":2}
/// {"type":"graphic","vertices":4,"edges":[[0,1],[1,2]]}
/// {"type":"linear","prime":2,"rows":3,"columns":[[1,0,0],[0,1,0]]}
/// {"type":"bases","n":4,"bases":[[0,1],[0,2]]}
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidSpec {
    Uniform {
        n: usize,
        rank: usize,
    },
    Graphic {
        vertices: usize,
        edges: Vec<[usize; 2]>,
    },
    Linear {
        prime: u32,
        rows: usize,
        columns: Vec<Vec<u32>>,
    },
    Bases {
        n: usize,
        bases: Vec<ElementSet>,
    },
}

impl MatroidSpec {
    /// Constructs the matroid, running every construction check including
    /// the exchange axiom for basis families.
    pub fn build(&self) -> Result<AnyMatroid> {
        Ok(match self {
            MatroidSpec::Uniform { n, rank } => UniformMatroid::new(*n, *rank)?.into(),
            MatroidSpec::Graphic { vertices, edges } => {
                GraphicMatroid::new(*vertices, edges.clone())?.into()
            }
            MatroidSpec::Linear {
                prime,
                rows,
                columns,
            } => LinearMatroid::new(*prime, *rows, columns.clone())?.into(),
            MatroidSpec::Bases { n, bases } => BasisMatroid::new(*n, bases.clone())?.into(),
        })
    }
}

/// Any of the concrete matroid classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyMatroid {
    Uniform(UniformMatroid),
    Graphic(GraphicMatroid),
    Linear(LinearMatroid),
    Bases(BasisMatroid),
}

impl AnyMatroid {
    pub fn to_spec(&self) -> MatroidSpec {
        match self {
            AnyMatroid::Uniform(m) => MatroidSpec::Uniform {
                n: m.ground_size(),
                rank: m.rank_bound(),
            },
            AnyMatroid::Graphic(m) => MatroidSpec::Graphic {
                vertices: m.vertices(),
                edges: m.edges().to_vec(),
            },
            AnyMatroid::Linear(m) => MatroidSpec::Linear {
                prime: m.prime(),
                rows: m.rows(),
                columns: m.columns().to_vec(),
            },
            AnyMatroid::Bases(m) => MatroidSpec::Bases {
                n: m.ground_size(),
                bases: m.bases().to_vec(),
            },
        }
    }

    fn inner(&self) -> &dyn Matroid {
        match self {
            AnyMatroid::Uniform(m) => m,
            AnyMatroid::Graphic(m) => m,
            AnyMatroid::Linear(m) => m,
            AnyMatroid::Bases(m) => m,
        }
    }
}

impl Matroid for AnyMatroid {
    fn ground_size(&self) -> usize {
        self.inner().ground_size()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        self.inner().is_independent(set)
    }

    fn full_rank(&self) -> usize {
        self.inner().full_rank()
    }
}

macro_rules! any_from {
    ($($variant:ident($ty:ty)),*) => {$(
        impl From<$ty> for AnyMatroid {
            fn from(m: $ty) -> Self {
                AnyMatroid::$variant(m)
            }
        }
    )*};
}

any_from!(
    Uniform(UniformMatroid),
    Graphic(GraphicMatroid),
    Linear(LinearMatroid),
    Bases(BasisMatroid)
);
