//! Mixed graphs of girth 6 built from elliptic semiplanes of type L.
//!
//! Two copies of the semiplane incidence graph `G_q` are joined by circulant
//! arc layers indexed by powers of a primitive element of GF(q). The result
//! is a `[z, q; 6]`-mixed graph on `4q^2 - 4` vertices, which bounds the order
//! of the corresponding mixed cages from above.
//!
//! - [`field`]: GF(p^k) arithmetic with exp/log tables.
//! - [`geometry`]: PG(2,q), its incidence graph and the semiplane `G_q`.
//! - [`graph`]: the mixed-graph type, girth algorithms and export formats.
//! - [`construction`]: the mixed graph `H_{q,p}` and its verification.
//! - [`bounds`]: the resulting upper bounds and the reference table.
//! - [`corpus`]: graphs used to cross-check the girth search.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod construction;
pub mod corpus;
pub mod field;
pub mod geometry;
pub mod graph;

pub use construction::{
    build_h, build_h_with, derive_params, verify_construction, ArcRule, Construction,
};
pub use field::{FieldContext, FieldElement, PrimePower};
pub use graph::{Girth, MixedGraph};
