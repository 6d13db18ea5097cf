//! Mixed girth by per-connection breadth-first search.
//!
//! Every cycle of a simple mixed graph either contains an arc or consists of
//! edges only. For an arc `(v, u)` the shortest cycle through it has length
//! `1 + d(u, v)`. For an edge `{a, b}` the shortest cycle through it is
//! `1 + d(b, a)` in the graph without that edge; an all-edge cycle can be
//! traversed either way so one orientation suffices. Distances follow arcs
//! forwards and edges both ways.

use std::fmt;
use std::hash::Hash;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::MixedGraph;

/// Length of a shortest cycle, or the absence of any cycle within the
/// searched bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn value(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => write!(f, "acyclic"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.value().serialize(s)
    }
}

/// Compressed mixed out-adjacency: out-arcs plus edge neighbours.
struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Adjacency {
    fn new<V>(g: &MixedGraph<V>) -> Self {
        let n = g.out_adj.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for i in 0..n {
            targets.extend(g.out_adj[i].iter().map(|&j| j as u32));
            targets.extend(g.edge_adj[i].iter().map(|&j| j as u32));
            offsets.push(targets.len());
        }
        Self { offsets, targets }
    }

    fn order(&self) -> usize {
        self.offsets.len() - 1
    }

    fn successors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// One connection to close a cycle through: search `start -> target`,
/// ignoring the undirected edge `skip` if set.
#[derive(Debug, Clone, Copy)]
struct Probe {
    start: u32,
    target: u32,
    skip: Option<(u32, u32)>,
}

fn probes<V>(g: &MixedGraph<V>) -> Vec<Probe> {
    let arcs = g.arc_indices().iter().map(|&(v, u)| Probe {
        start: u as u32,
        target: v as u32,
        skip: None,
    });
    let edges = g.edge_indices().iter().map(|&(a, b)| Probe {
        start: b as u32,
        target: a as u32,
        skip: Some((a as u32, b as u32)),
    });
    arcs.chain(edges).collect()
}

const UNSEEN: u32 = u32::MAX;

/// Reusable BFS buffers; `stamp` avoids clearing between searches.
struct Searcher {
    stamp: Vec<u32>,
    generation: u32,
    parent: Vec<u32>,
    frontier: Vec<u32>,
    next: Vec<u32>,
}

impl Searcher {
    fn new(n: usize) -> Self {
        Self {
            stamp: vec![0; n],
            generation: 0,
            parent: vec![UNSEEN; n],
            frontier: Vec::new(),
            next: Vec::new(),
        }
    }

    /// Shortest path length from `probe.start` to `probe.target`, if it is at
    /// most `max_len`.
    fn distance(&mut self, adj: &Adjacency, probe: Probe, max_len: usize) -> Option<usize> {
        if max_len == 0 {
            return None;
        }
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.fill(0);
            self.generation = 1;
        }
        let generation = self.generation;
        self.frontier.clear();
        self.frontier.push(probe.start);
        self.stamp[probe.start as usize] = generation;
        self.parent[probe.start as usize] = UNSEEN;

        for depth in 1..=max_len {
            self.next.clear();
            for &u in &self.frontier {
                for &w in adj.successors(u as usize) {
                    if let Some((a, b)) = probe.skip {
                        if (u == a && w == b) || (u == b && w == a) {
                            continue;
                        }
                    }
                    if self.stamp[w as usize] == generation {
                        continue;
                    }
                    self.stamp[w as usize] = generation;
                    self.parent[w as usize] = u;
                    if w == probe.target {
                        return Some(depth);
                    }
                    self.next.push(w);
                }
            }
            if self.next.is_empty() {
                return None;
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
        None
    }

    /// Vertices of the path found by the last successful `distance` call.
    fn last_path(&self, probe: Probe) -> Vec<usize> {
        let mut path = vec![probe.target as usize];
        let mut v = probe.target;
        while v != probe.start {
            v = self.parent[v as usize];
            path.push(v as usize);
        }
        path.reverse();
        path
    }
}

fn max_cycle_len(n: usize, depth_bound: Option<usize>) -> usize {
    depth_bound.map_or(n, |d| d.min(n))
}

/// Finds the earliest probe (in probe order) whose cycle has minimum length.
fn search(adj: &Adjacency, probes: &[Probe], limit: usize) -> Option<(usize, Vec<usize>)> {
    let mut searcher = Searcher::new(adj.order());
    let mut best: Option<(usize, Probe)> = None;
    let mut limit = limit;
    for &probe in probes {
        if limit < 3 {
            break;
        }
        if let Some(d) = searcher.distance(adj, probe, limit - 1) {
            best = Some((d + 1, probe));
            limit = d;
        }
    }
    let (len, probe) = best?;
    searcher.distance(adj, probe, len - 1);
    Some((len, searcher.last_path(probe)))
}

/// Length of a shortest mixed cycle, considering only cycles of length at
/// most `depth_bound` when one is given.
pub fn mixed_girth<V>(g: &MixedGraph<V>, depth_bound: Option<usize>) -> Girth {
    let adj = Adjacency::new(g);
    let limit = max_cycle_len(adj.order(), depth_bound);
    match search(&adj, &probes(g), limit) {
        Some((len, _)) => Girth::Finite(len),
        None => Girth::Acyclic,
    }
}

/// A shortest mixed cycle as a vertex sequence `v_0, ..., v_{k-1}`; the
/// closing step runs from `v_{k-1}` back to `v_0`.
///
/// Among all shortest cycles the one found through the first connection
/// (arcs in insertion order, then edges) is returned, so the witness is
/// deterministic.
pub fn shortest_cycle<V: Clone>(g: &MixedGraph<V>, depth_bound: Option<usize>) -> Option<Vec<V>> {
    let adj = Adjacency::new(g);
    let limit = max_cycle_len(adj.order(), depth_bound);
    let (_, path) = search(&adj, &probes(g), limit)?;
    Some(path.into_iter().map(|i| g.vertices[i].clone()).collect())
}

/// Parallel [`mixed_girth`] on the current rayon pool. Probes share the
/// best length found so far for pruning; the minimum does not depend on
/// scheduling, so the result equals the sequential one.
pub fn mixed_girth_parallel<V: Sync>(g: &MixedGraph<V>, depth_bound: Option<usize>) -> Girth {
    let adj = Adjacency::new(g);
    let limit = max_cycle_len(adj.order(), depth_bound);
    // `best` holds the smallest cycle length seen, or limit + 1.
    let best = AtomicUsize::new(limit + 1);
    probes(g).par_iter().for_each_init(
        || Searcher::new(adj.order()),
        |searcher, &probe| {
            let current = best.load(Ordering::Relaxed);
            if current <= 3 {
                return;
            }
            // Only strictly shorter cycles are of interest.
            if let Some(d) = searcher.distance(&adj, probe, current - 2) {
                best.fetch_min(d + 1, Ordering::Relaxed);
            }
        },
    );
    match best.into_inner() {
        len if len <= limit => Girth::Finite(len),
        _ => Girth::Acyclic,
    }
}

/// Parallel [`shortest_cycle`]: the girth comes from
/// [`mixed_girth_parallel`], the witness from a sequential scan for the first
/// connection closing a cycle of that length. This is the same witness the
/// sequential search returns.
pub fn shortest_cycle_parallel<V: Clone + Sync>(
    g: &MixedGraph<V>,
    depth_bound: Option<usize>,
) -> Option<Vec<V>> {
    let len = mixed_girth_parallel(g, depth_bound).value()?;
    let adj = Adjacency::new(g);
    let mut searcher = Searcher::new(adj.order());
    let probe = probes(g)
        .into_iter()
        .find(|&probe| searcher.distance(&adj, probe, len - 1).is_some())?;
    Some(
        searcher
            .last_path(probe)
            .into_iter()
            .map(|i| g.vertices[i].clone())
            .collect(),
    )
}

/// Girth of the arc-only subgraph.
pub fn directed_girth<V: Clone + Eq + Hash + fmt::Debug>(g: &MixedGraph<V>) -> Girth {
    mixed_girth(&g.arc_subgraph(), None)
}

/// Checks that `cycle` is a simple mixed cycle of `g`: at least three
/// distinct vertices, consecutive ones (cyclically) joined by an edge or an
/// arc in the direction of travel.
pub fn is_mixed_cycle<V: Clone + Eq + Hash + fmt::Debug>(g: &MixedGraph<V>, cycle: &[V]) -> bool {
    use super::Connection;
    if cycle.len() < 3 {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !cycle.iter().all(|v| seen.insert(v)) {
        return false;
    }
    (0..cycle.len()).all(|i| {
        let (u, v) = (&cycle[i], &cycle[(i + 1) % cycle.len()]);
        matches!(
            g.connection(u, v),
            Some(Connection::Edge | Connection::ArcForward)
        )
    })
}
