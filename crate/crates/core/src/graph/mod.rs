//! Simple mixed graphs: undirected edges and directed arcs on one vertex set.
//!
//! A vertex pair carries at most one connection. An edge `{u,v}`, an arc
//! `(u,v)` and an arc `(v,u)` are mutually exclusive, so the graph never has
//! cycles of length 1 or 2.

mod export;
mod girth;
mod oracle;
mod report;

use std::collections::{HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;
use thiserror::Error;

pub use export::{GraphDocument, GraphFormat};
pub use girth::{
    directed_girth, is_mixed_cycle, mixed_girth, mixed_girth_parallel, shortest_cycle,
    shortest_cycle_parallel, Girth,
};
pub use oracle::{girth_oracle, random_mixed_graph, ORACLE_MAX_ORDER};
pub use report::{GraphClaims, GraphReport, RegularityWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(String),
    #[error("vertex {0} already exists")]
    DuplicateVertex(String),
    #[error("self-loop at {0}")]
    SelfLoop(String),
    #[error("simplicity violation: {u} and {v} are already joined by {existing}")]
    SimplicityViolation {
        u: String,
        v: String,
        existing: Connection,
    },
    #[error("girth oracle is limited to {limit} vertices, graph has {order}")]
    TooLargeForOracle { order: usize, limit: usize },
}

/// How an existing vertex pair is joined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Connection {
    Edge,
    /// Arc from the lower-indexed vertex of the pair to the higher.
    ArcForward,
    ArcBackward,
}

impl std::fmt::Display for Connection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Connection::Edge => write!(f, "an edge"),
            Connection::ArcForward | Connection::ArcBackward => write!(f, "an arc"),
        }
    }
}

/// In-arcs, out-arcs and undirected edges at a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeTriple {
    pub in_arcs: usize,
    pub out_arcs: usize,
    pub edge_degree: usize,
}

/// Outcome of a total-regularity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regularity<V> {
    Regular { z: usize, r: usize },
    Irregular { vertex: V, degree: DegreeTriple },
}

impl<V> Regularity<V> {
    pub fn holds(&self) -> bool {
        matches!(self, Regularity::Regular { .. })
    }
}

#[derive(Debug, Clone)]
pub struct MixedGraph<V> {
    vertices: Vec<V>,
    index: HashMap<V, usize>,
    edges: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
    pub(crate) edge_adj: Vec<Vec<usize>>,
    pub(crate) out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    pairs: HashMap<(usize, usize), Connection>,
}

impl<V> Default for MixedGraph<V> {
    fn default() -> Self {
        Self {
            vertices: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
            arcs: Vec::new(),
            edge_adj: Vec::new(),
            out_adj: Vec::new(),
            in_adj: Vec::new(),
            pairs: HashMap::new(),
        }
    }
}

impl<V> MixedGraph<V> {
    pub(crate) fn edge_indices(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub(crate) fn arc_indices(&self) -> &[(usize, usize)] {
        &self.arcs
    }
}

impl<V: Clone + Eq + Hash + Debug> MixedGraph<V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(vertices: impl IntoIterator<Item = V>) -> Result<Self, GraphError> {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: V) -> Result<usize, GraphError> {
        if self.index.contains_key(&v) {
            return Err(GraphError::DuplicateVertex(format!("{v:?}")));
        }
        let i = self.vertices.len();
        self.index.insert(v.clone(), i);
        self.vertices.push(v);
        self.edge_adj.push(Vec::new());
        self.out_adj.push(Vec::new());
        self.in_adj.push(Vec::new());
        Ok(i)
    }

    pub fn add_edge(&mut self, u: &V, v: &V) -> Result<(), GraphError> {
        let (a, b) = self.claim_pair(u, v, |_, _| Connection::Edge)?;
        self.edges.push((a, b));
        self.edge_adj[a].push(b);
        self.edge_adj[b].push(a);
        Ok(())
    }

    pub fn add_arc(&mut self, from: &V, to: &V) -> Result<(), GraphError> {
        let (a, b) = self.claim_pair(from, to, |a, b| {
            if a < b {
                Connection::ArcForward
            } else {
                Connection::ArcBackward
            }
        })?;
        self.arcs.push((a, b));
        self.out_adj[a].push(b);
        self.in_adj[b].push(a);
        Ok(())
    }

    fn claim_pair(
        &mut self,
        u: &V,
        v: &V,
        kind: impl Fn(usize, usize) -> Connection,
    ) -> Result<(usize, usize), GraphError> {
        let a = self.require(u)?;
        let b = self.require(v)?;
        if a == b {
            return Err(GraphError::SelfLoop(format!("{u:?}")));
        }
        let key = (a.min(b), a.max(b));
        if let Some(&existing) = self.pairs.get(&key) {
            return Err(GraphError::SimplicityViolation {
                u: format!("{u:?}"),
                v: format!("{v:?}"),
                existing,
            });
        }
        self.pairs.insert(key, kind(a, b));
        Ok((a, b))
    }

    fn require(&self, v: &V) -> Result<usize, GraphError> {
        self.index
            .get(v)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(format!("{v:?}")))
    }

    /// Builds a graph from explicit parts, validating every invariant.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = V>,
        edges: impl IntoIterator<Item = (V, V)>,
        arcs: impl IntoIterator<Item = (V, V)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::with_vertices(vertices)?;
        for (u, v) in edges {
            g.add_edge(&u, &v)?;
        }
        for (u, v) in arcs {
            g.add_arc(&u, &v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn contains(&self, v: &V) -> bool {
        self.index.contains_key(v)
    }

    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&V, &V)> + '_ {
        self.edges
            .iter()
            .map(|&(a, b)| (&self.vertices[a], &self.vertices[b]))
    }

    pub fn arcs(&self) -> impl Iterator<Item = (&V, &V)> + '_ {
        self.arcs
            .iter()
            .map(|&(a, b)| (&self.vertices[a], &self.vertices[b]))
    }

    pub fn edge_neighbors(&self, v: &V) -> Result<impl Iterator<Item = &V> + '_, GraphError> {
        let i = self.require(v)?;
        Ok(self.edge_adj[i].iter().map(|&j| &self.vertices[j]))
    }

    pub fn out_neighbors(&self, v: &V) -> Result<impl Iterator<Item = &V> + '_, GraphError> {
        let i = self.require(v)?;
        Ok(self.out_adj[i].iter().map(|&j| &self.vertices[j]))
    }

    pub fn in_neighbors(&self, v: &V) -> Result<impl Iterator<Item = &V> + '_, GraphError> {
        let i = self.require(v)?;
        Ok(self.in_adj[i].iter().map(|&j| &self.vertices[j]))
    }

    /// The connection joining `u` and `v`, oriented from `u`'s point of view:
    /// `ArcForward` means an arc `u -> v`.
    pub fn connection(&self, u: &V, v: &V) -> Option<Connection> {
        let (a, b) = (self.index_of(u)?, self.index_of(v)?);
        let c = *self.pairs.get(&(a.min(b), a.max(b)))?;
        Some(match c {
            Connection::Edge => Connection::Edge,
            _ if self.out_adj[a].contains(&b) => Connection::ArcForward,
            _ => Connection::ArcBackward,
        })
    }

    pub fn degree(&self, v: &V) -> Result<DegreeTriple, GraphError> {
        let i = self.require(v)?;
        Ok(self.degree_at(i))
    }

    fn degree_at(&self, i: usize) -> DegreeTriple {
        DegreeTriple {
            in_arcs: self.in_adj[i].len(),
            out_arcs: self.out_adj[i].len(),
            edge_degree: self.edge_adj[i].len(),
        }
    }

    /// Checks that every vertex has `z` in-arcs, `z` out-arcs and `r` edges.
    /// The first offending vertex (in vertex order) is returned as witness.
    pub fn is_totally_regular(&self, z: usize, r: usize) -> Regularity<V> {
        let target = DegreeTriple {
            in_arcs: z,
            out_arcs: z,
            edge_degree: r,
        };
        for (i, v) in self.vertices.iter().enumerate() {
            let d = self.degree_at(i);
            if d != target {
                return Regularity::Irregular {
                    vertex: v.clone(),
                    degree: d,
                };
            }
        }
        Regularity::Regular { z, r }
    }

    /// The sub-mixed-graph induced by `subset`, keeping this graph's vertex
    /// order.
    pub fn induced_subgraph<'a>(
        &self,
        subset: impl IntoIterator<Item = &'a V>,
    ) -> Result<Self, GraphError>
    where
        V: 'a,
    {
        let mut keep = vec![false; self.order()];
        for v in subset {
            keep[self.require(v)?] = true;
        }
        self.filtered(|i| keep[i], true)
    }

    /// The same vertices with every undirected edge dropped.
    pub fn arc_subgraph(&self) -> Self {
        self.filtered(|_| true, false)
            .expect("a subgraph of a simple graph is simple")
    }

    fn filtered(&self, keep: impl Fn(usize) -> bool, with_edges: bool) -> Result<Self, GraphError> {
        let mut g = Self::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if keep(i) {
                g.add_vertex(v.clone())?;
            }
        }
        if with_edges {
            for &(a, b) in &self.edges {
                if keep(a) && keep(b) {
                    g.add_edge(&self.vertices[a], &self.vertices[b])?;
                }
            }
        }
        for &(a, b) in &self.arcs {
            if keep(a) && keep(b) {
                g.add_arc(&self.vertices[a], &self.vertices[b])?;
            }
        }
        Ok(g)
    }

    /// Relabels vertices; `f` must be injective.
    pub fn map_vertices<W: Clone + Eq + Hash + Debug>(
        &self,
        f: impl Fn(&V) -> W,
    ) -> Result<MixedGraph<W>, GraphError> {
        let labels: Vec<W> = self.vertices.iter().map(&f).collect();
        MixedGraph::from_parts(
            labels.iter().cloned(),
            self.edges
                .iter()
                .map(|&(a, b)| (labels[a].clone(), labels[b].clone())),
            self.arcs
                .iter()
                .map(|&(a, b)| (labels[a].clone(), labels[b].clone())),
        )
    }

    /// Relabels vertices by their position.
    pub fn to_indexed(&self) -> MixedGraph<usize> {
        let mut g = MixedGraph::with_vertices(0..self.order()).expect("indices are distinct");
        for &(a, b) in &self.edges {
            g.add_edge(&a, &b).expect("source graph is simple");
        }
        for &(a, b) in &self.arcs {
            g.add_arc(&a, &b).expect("source graph is simple");
        }
        g
    }

    /// Rebuilds the graph with vertices in ascending order and edge/arc
    /// lists sorted by endpoint position.
    pub fn canonical(&self) -> Self
    where
        V: Ord,
    {
        let mut vertices = self.vertices.clone();
        vertices.sort();
        let mut g = Self::with_vertices(vertices).expect("vertices are distinct");
        let pos = |i: usize| g.index[&self.vertices[i]];
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (pos(a), pos(b));
                (a.min(b), a.max(b))
            })
            .collect();
        let mut arcs: Vec<(usize, usize)> =
            self.arcs.iter().map(|&(a, b)| (pos(a), pos(b))).collect();
        edges.sort_unstable();
        arcs.sort_unstable();
        for (a, b) in edges {
            let (u, v) = (g.vertices[a].clone(), g.vertices[b].clone());
            g.add_edge(&u, &v).expect("source graph is simple");
        }
        for (a, b) in arcs {
            let (u, v) = (g.vertices[a].clone(), g.vertices[b].clone());
            g.add_arc(&u, &v).expect("source graph is simple");
        }
        g
    }

    /// True iff every edge and every arc joins vertices on opposite sides.
    pub fn bipartition_check(&self, side_of: impl Fn(&V) -> bool) -> bool {
        let sides: Vec<bool> = self.vertices.iter().map(side_of).collect();
        self.edges
            .iter()
            .chain(self.arcs.iter())
            .all(|&(a, b)| sides[a] != sides[b])
    }
}

impl<V: Eq + Hash> PartialEq for MixedGraph<V> {
    /// Equality as labelled graphs, independent of insertion order.
    fn eq(&self, other: &Self) -> bool {
        if self.vertices.len() != other.vertices.len()
            || self.edges.len() != other.edges.len()
            || self.arcs.len() != other.arcs.len()
        {
            return false;
        }
        if !self.vertices.iter().all(|v| other.index.contains_key(v)) {
            return false;
        }
        fn edge_set<V: Eq + Hash>(g: &MixedGraph<V>) -> HashSet<(&V, &V)> {
            g.edges
                .iter()
                .flat_map(|&(a, b)| {
                    let (u, v) = (&g.vertices[a], &g.vertices[b]);
                    [(u, v), (v, u)]
                })
                .collect()
        }
        fn arc_set<V: Eq + Hash>(g: &MixedGraph<V>) -> HashSet<(&V, &V)> {
            g.arcs
                .iter()
                .map(|&(a, b)| (&g.vertices[a], &g.vertices[b]))
                .collect()
        }
        edge_set(self) == edge_set(other) && arc_set(self) == arc_set(other)
    }
}

impl<V: Eq + Hash> Eq for MixedGraph<V> {}


#[cfg(test)]
mod tests {
    use super::fixtures::cycle;
    use super::*;

    #[test]
    fn edge_then_arc_on_same_pair_is_rejected() {
        let mut g = MixedGraph::with_vertices(["u", "v"]).unwrap();
        g.add_edge(&"u", &"v").unwrap();
        let err = g.add_arc(&"u", &"v").unwrap_err();
        assert!(matches!(
            err,
            GraphError::SimplicityViolation {
                existing: Connection::Edge,
                ..
            }
        ));
    }

    #[test]
    fn antiparallel_and_parallel_arcs_are_rejected() {
        let mut g = MixedGraph::with_vertices(["u", "v"]).unwrap();
        g.add_arc(&"u", &"v").unwrap();
        assert!(g.add_arc(&"u", &"v").is_err());
        assert!(g.add_arc(&"v", &"u").is_err());
        assert!(g.add_edge(&"v", &"u").is_err());
        assert_eq!(g.arc_count(), 1);
        assert_eq!(g.connection(&"u", &"v"), Some(Connection::ArcForward));
        assert_eq!(g.connection(&"v", &"u"), Some(Connection::ArcBackward));
    }

    #[test]
    fn loops_and_unknown_vertices() {
        let mut g = MixedGraph::with_vertices([1, 2]).unwrap();
        assert_eq!(g.add_edge(&1, &1), Err(GraphError::SelfLoop("1".into())));
        assert_eq!(
            g.add_arc(&1, &3),
            Err(GraphError::UnknownVertex("3".into()))
        );
        assert_eq!(
            g.add_vertex(2),
            Err(GraphError::DuplicateVertex("2".into()))
        );
        assert!(g.degree(&7).is_err());
    }

    #[test]
    fn isolated_vertex_has_zero_degrees() {
        let g = MixedGraph::with_vertices([0]).unwrap();
        assert_eq!(
            g.degree(&0).unwrap(),
            DegreeTriple {
                in_arcs: 0,
                out_arcs: 0,
                edge_degree: 0
            }
        );
    }

    #[test]
    fn induced_subgraph_identity_and_independent_set() {
        let c6 = cycle(6);
        assert_eq!(c6.induced_subgraph(c6.vertices()).unwrap(), c6);
        let alt = c6.induced_subgraph(&[0, 2, 4]).unwrap();
        assert_eq!(alt.order(), 3);
        assert_eq!(alt.edge_count() + alt.arc_count(), 0);
    }

    #[test]
    fn regularity_of_cycle() {
        let c6 = cycle(6);
        assert!(c6.is_totally_regular(0, 2).holds());
        match c6.is_totally_regular(1, 2) {
            Regularity::Irregular { vertex, degree } => {
                assert_eq!(vertex, 0);
                assert_eq!(degree.edge_degree, 2);
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn bipartition() {
        let c6 = cycle(6);
        assert!(c6.bipartition_check(|v| v % 2 == 0));
        let triangle = cycle(3);
        for mask in 0..8u32 {
            assert!(!triangle.bipartition_check(|&v| mask >> v & 1 == 1));
        }
    }

    #[test]
    fn canonical_sorts_and_preserves_structure() {
        let g = MixedGraph::from_parts([3, 1, 2], [(3, 1)], [(2, 3)]).unwrap();
        let c = g.canonical();
        assert_eq!(c.vertices(), &[1, 2, 3]);
        assert_eq!(c, g);
    }
}
