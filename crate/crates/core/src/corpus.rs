//! Graphs on which the BFS girth is cross-checked against the exhaustive
//! oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::construction::{build_h, standalone_circulant};
use crate::field::{FieldContext, PrimePower};
use crate::geometry::{build_projective_incidence_graph, build_semiplane_l};
use crate::graph::{
    girth_oracle, mixed_girth, random_mixed_graph, Girth, GraphError, MixedGraph, ORACLE_MAX_ORDER,
};

/// Largest circulant in the corpus.
pub const MAX_CIRCULANT_ORDER: usize = 40;
/// Random graphs in the corpus.
pub const RANDOM_GRAPHS: usize = 50;
/// Largest random graph in the corpus.
pub const MAX_RANDOM_ORDER: usize = 30;
pub const DEFAULT_SEED: u64 = 0x006d_6978_6361_6765;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: MixedGraph<usize>,
}

/// Builds the corpus:
/// - every circulant `C_n(1, 3, ..., 2I - 1)` with `n <= 40`, `I <= 4` and
///   all jumps below `n / 2` (the jump sets the construction uses);
/// - the plane incidence graphs, semiplanes `G_q` and forced `H_{q,p}` for
///   prime powers `q <= max_q` small enough for the oracle;
/// - `RANDOM_GRAPHS` random simple mixed graphs on at most 30 vertices.
pub fn oracle_corpus(max_q: u32, seed: u64) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 3..=MAX_CIRCULANT_ORDER {
        for count in 1..=4 {
            let jumps: Vec<usize> = (1..=count).map(|i| 2 * i - 1).collect();
            if 2 * jumps[count - 1] >= n {
                break;
            }
            out.push(CorpusEntry {
                name: format!("circulant n={n} jumps={jumps:?}"),
                graph: standalone_circulant(n, &jumps).expect("jumps are below n/2"),
            });
        }
    }

    for n in 2..=u64::from(max_q) {
        let Ok(q) = PrimePower::new(n) else { continue };
        let ctx = FieldContext::new(q).expect("small field");
        let plane = build_projective_incidence_graph(&ctx);
        if plane.order() <= ORACLE_MAX_ORDER {
            out.push(CorpusEntry {
                name: format!("plane incidence graph q={n}"),
                graph: plane.to_indexed(),
            });
        }
        if n >= 3 {
            let semiplane = build_semiplane_l(&ctx);
            if semiplane.order() <= ORACLE_MAX_ORDER {
                out.push(CorpusEntry {
                    name: format!("semiplane q={n}"),
                    graph: semiplane.to_indexed(),
                });
            }
        }
        if let Ok(h) = build_h(q, true) {
            if h.graph.order() <= ORACLE_MAX_ORDER {
                out.push(CorpusEntry {
                    name: format!("mixed construction q={n} (forced)"),
                    graph: h.graph.to_indexed(),
                });
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..RANDOM_GRAPHS {
        let n = rng.gen_range(3..=MAX_RANDOM_ORDER);
        let density = rng.gen_range(0.05..0.3);
        out.push(CorpusEntry {
            name: format!("random #{i} n={n} density={density:.3}"),
            graph: random_mixed_graph(&mut rng, n, density),
        });
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossCheck {
    pub name: String,
    pub order: usize,
    pub bfs: Girth,
    pub oracle: Girth,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.bfs == self.oracle
    }
}

pub fn cross_check(entry: &CorpusEntry) -> Result<CrossCheck, GraphError> {
    Ok(CrossCheck {
        name: entry.name.clone(),
        order: entry.graph.order(),
        bfs: mixed_girth(&entry.graph, None),
        oracle: girth_oracle(&entry.graph)?,
    })
}
