//! Exhaustive cycle enumeration, used to cross-check the BFS girth.
//!
//! Cycles are enumerated by iterative deepening: for each length `L` and each
//! start vertex `s`, a depth-first search looks for a simple path of `L`
//! vertices through vertices ranked above `s` that closes back to `s`. Every
//! simple cycle is found from its lowest-ranked vertex, so the first `L` that
//! succeeds is the girth.

use std::collections::VecDeque;
use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng;

use super::{Girth, GraphError, MixedGraph};

/// Largest graph the oracle will accept.
pub const ORACLE_MAX_ORDER: usize = 60;

struct Enumerator {
    succ: Vec<Vec<usize>>,
    on_path: Vec<bool>,
    // Backward distance to the current start within vertices >= start; used
    // only to prune paths that cannot close in time.
    to_start: Vec<usize>,
}

impl Enumerator {
    fn reverse_distances(&mut self, pred: &[Vec<usize>], s: usize) {
        self.to_start.fill(usize::MAX);
        self.to_start[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in &pred[v] {
                if u >= s && self.to_start[u] == usize::MAX {
                    self.to_start[u] = self.to_start[v] + 1;
                    queue.push_back(u);
                }
            }
        }
    }

    /// Is there a closed walk of exactly `len` distinct vertices from `s`,
    /// given that `path_len` vertices ending in `v` are already placed?
    fn closes(&mut self, s: usize, v: usize, path_len: usize, len: usize) -> bool {
        if path_len == len {
            return self.succ[v].contains(&s);
        }
        for i in 0..self.succ[v].len() {
            let w = self.succ[v][i];
            if w <= s || self.on_path[w] {
                continue;
            }
            // After adding w there are len - path_len - 1 more vertices and one
            // closing step, so w must reach s within len - path_len steps.
            if self.to_start[w] > len - path_len {
                continue;
            }
            self.on_path[w] = true;
            let found = self.closes(s, w, path_len + 1, len);
            self.on_path[w] = false;
            if found {
                return true;
            }
        }
        false
    }
}

/// Exact girth by exhaustive enumeration of simple mixed cycles.
pub fn girth_oracle<V: Clone + Eq + Hash + Debug>(g: &MixedGraph<V>) -> Result<Girth, GraphError> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(GraphError::TooLargeForOracle {
            order: n,
            limit: ORACLE_MAX_ORDER,
        });
    }
    let mut succ = vec![Vec::new(); n];
    let mut pred = vec![Vec::new(); n];
    for &(a, b) in g.edge_indices() {
        succ[a].push(b);
        succ[b].push(a);
        pred[a].push(b);
        pred[b].push(a);
    }
    for &(a, b) in g.arc_indices() {
        succ[a].push(b);
        pred[b].push(a);
    }
    let mut e = Enumerator {
        succ,
        on_path: vec![false; n],
        to_start: vec![usize::MAX; n],
    };
    for len in 3..=n {
        for s in 0..n {
            e.reverse_distances(&pred, s);
            e.on_path[s] = true;
            let found = e.closes(s, s, 1, len);
            e.on_path[s] = false;
            if found {
                return Ok(Girth::Finite(len));
            }
        }
    }
    Ok(Girth::Acyclic)
}

/// A random simple mixed graph on `n` vertices: each unordered pair is joined
/// with probability `density`, by an edge or by an arc in either direction
/// with equal odds.
pub fn random_mixed_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> MixedGraph<usize> {
    let mut g = MixedGraph::with_vertices(0..n).expect("indices are distinct");
    for a in 0..n {
        for b in a + 1..n {
            if !rng.gen_bool(density) {
                continue;
            }
            match rng.gen_range(0..3) {
                0 => g.add_edge(&a, &b),
                1 => g.add_arc(&a, &b),
                _ => g.add_arc(&b, &a),
            }
            .expect("each pair is visited once");
        }
    }
    g
}
