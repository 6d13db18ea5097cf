//! Measured properties of a mixed graph against claimed `[z,r;g]` values.

use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use super::{
    directed_girth, is_mixed_cycle, shortest_cycle, shortest_cycle_parallel, DegreeTriple, Girth,
    MixedGraph, Regularity,
};

/// Expected order and `[z,r;g]` parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphClaims {
    pub order: usize,
    pub z: usize,
    pub r: usize,
    pub girth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RegularityWitness {
    Regular {
        z: usize,
        r: usize,
    },
    Irregular {
        vertex: String,
        degree: DegreeTriple,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub order: usize,
    pub regularity: RegularityWitness,
    /// Shortest cycle length, searched up to `claims.girth + 1`.
    pub mixed_girth: Girth,
    /// A cycle realising `mixed_girth`, as vertex labels.
    pub girth_witness: Option<Vec<String>>,
    pub directed_girth: Girth,
    pub bipartite: bool,
    pub claims: GraphClaims,
    pub claims_pass: bool,
}

impl GraphReport {
    /// Measures `g`. The girth search is truncated at `claims.girth + 1`:
    /// a witness of length `claims.girth` together with the exhausted search
    /// below it certifies the girth exactly.
    pub fn measure<V>(
        g: &MixedGraph<V>,
        claims: GraphClaims,
        side_of: impl Fn(&V) -> bool,
        label: impl Fn(&V) -> String,
        parallel: bool,
    ) -> Self
    where
        V: Clone + Eq + Hash + Debug + Sync,
    {
        let regularity = match g.is_totally_regular(claims.z, claims.r) {
            Regularity::Regular { z, r } => RegularityWitness::Regular { z, r },
            Regularity::Irregular { vertex, degree } => RegularityWitness::Irregular {
                vertex: label(&vertex),
                degree,
            },
        };
        let bound = Some(claims.girth + 1);
        let witness = if parallel {
            shortest_cycle_parallel(g, bound)
        } else {
            shortest_cycle(g, bound)
        };
        let mixed_girth = match &witness {
            Some(c) if is_mixed_cycle(g, c) => Girth::Finite(c.len()),
            Some(_) => panic!("girth search produced an invalid cycle"),
            None => Girth::Acyclic,
        };
        let bipartite = g.bipartition_check(side_of);
        let claims_pass = g.order() == claims.order
            && matches!(regularity, RegularityWitness::Regular { .. })
            && mixed_girth == Girth::Finite(claims.girth);
        Self {
            order: g.order(),
            regularity,
            mixed_girth,
            girth_witness: witness.map(|c| c.iter().map(&label).collect()),
            directed_girth: directed_girth(g),
            bipartite,
            claims,
            claims_pass,
        }
    }
}
