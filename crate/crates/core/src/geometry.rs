//! The Desarguesian projective plane PG(2,q), its incidence graph, and the
//! elliptic semiplane of type L obtained by deleting the antiflag formed by
//! the vertical line `x = 0` and the point at infinity of slope 0.

use std::fmt;

use crate::field::{Exponent, FieldContext, FieldElement};
use crate::graph::MixedGraph;

/// A point or line of PG(2,q).
///
/// Lines `[m,b]` are `y = m x + b`; `Vertical(i)` is the line `x = i`;
/// `Slope(m)` is the point at infinity shared by all lines of slope `m`; the
/// line at infinity holds every `Slope(m)` and the vertical direction
/// `PointAtInfinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaneVertex {
    Point(FieldElement, FieldElement),
    Line(FieldElement, FieldElement),
    Vertical(FieldElement),
    Slope(FieldElement),
    LineAtInfinity,
    PointAtInfinity,
}

impl PlaneVertex {
    pub fn is_line(&self) -> bool {
        matches!(
            self,
            PlaneVertex::Line(..) | PlaneVertex::Vertical(_) | PlaneVertex::LineAtInfinity
        )
    }

    pub fn label(&self, ctx: &FieldContext) -> String {
        let r = |a: &FieldElement| ctx.render(*a);
        match self {
            PlaneVertex::Point(x, y) => format!("P({},{})", r(x), r(y)),
            PlaneVertex::Line(m, b) => format!("L[{},{}]", r(m), r(b)),
            PlaneVertex::Vertical(i) => format!("Linf({})", r(i)),
            PlaneVertex::Slope(i) => format!("Pinf({})", r(i)),
            PlaneVertex::LineAtInfinity => "Linf".to_string(),
            PlaneVertex::PointAtInfinity => "Pinf".to_string(),
        }
    }
}

/// Incidence graph of PG(2,q): `2q^2 + 2q + 2` vertices, `(q+1)`-regular.
pub fn build_projective_incidence_graph(ctx: &FieldContext) -> MixedGraph<PlaneVertex> {
    let elems: Vec<FieldElement> = ctx.elements().collect();
    let mut vertices = Vec::with_capacity(2 * elems.len() * (elems.len() + 1) + 2);
    for &x in &elems {
        for &y in &elems {
            vertices.push(PlaneVertex::Point(x, y));
            vertices.push(PlaneVertex::Line(x, y));
        }
        vertices.push(PlaneVertex::Vertical(x));
        vertices.push(PlaneVertex::Slope(x));
    }
    vertices.push(PlaneVertex::LineAtInfinity);
    vertices.push(PlaneVertex::PointAtInfinity);
    vertices.sort();

    let mut g = MixedGraph::with_vertices(vertices).expect("plane vertices are distinct");
    let mut join = |u: PlaneVertex, v: PlaneVertex| {
        g.add_edge(&u, &v).expect("each incidence is added once");
    };
    for &m in &elems {
        for &b in &elems {
            let line = PlaneVertex::Line(m, b);
            for &x in &elems {
                join(line, PlaneVertex::Point(x, ctx.add(ctx.mul(m, x), b)));
            }
            join(line, PlaneVertex::Slope(m));
        }
    }
    for &i in &elems {
        for &j in &elems {
            join(PlaneVertex::Vertical(i), PlaneVertex::Point(i, j));
        }
        join(PlaneVertex::Vertical(i), PlaneVertex::PointAtInfinity);
        join(PlaneVertex::LineAtInfinity, PlaneVertex::Slope(i));
    }
    join(PlaneVertex::LineAtInfinity, PlaneVertex::PointAtInfinity);
    g.canonical()
}

/// What a semiplane vertex is, with its first coordinate kept as an exponent
/// of the primitive element (it is never zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    AffinePoint { x: Exponent, y: FieldElement },
    AffineLine { m: Exponent, b: FieldElement },
    VerticalLine(Exponent),
    SlopePoint(Exponent),
}

/// A vertex of `G_q` (`copy == false`) or of its copy `G'_q`.
///
/// The derived order is the canonical vertex order: kind, then exponent of
/// the first coordinate, then the second coordinate, then the copy flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub kind: VertexKind,
    pub copy: bool,
}

impl Vertex {
    pub fn original(kind: VertexKind) -> Self {
        Self { kind, copy: false }
    }

    pub fn copied(self) -> Self {
        Self { copy: true, ..self }
    }

    /// Exponent of the first coordinate.
    pub fn exponent(&self) -> Exponent {
        match self.kind {
            VertexKind::AffinePoint { x, .. } => x,
            VertexKind::AffineLine { m, .. } => m,
            VertexKind::VerticalLine(i) | VertexKind::SlopePoint(i) => i,
        }
    }

    /// Lines side of the incidence bipartition.
    pub fn is_line(&self) -> bool {
        matches!(
            self.kind,
            VertexKind::AffineLine { .. } | VertexKind::VerticalLine(_)
        )
    }

    /// Canonical label, e.g. `P(x^3,0)`, `L'[x^2,1]`, `Linf(x)`.
    pub fn label(&self, ctx: &FieldContext) -> String {
        let mark = if self.copy { "'" } else { "" };
        let e = |e: Exponent| ctx.render_exponent(e);
        match self.kind {
            VertexKind::AffinePoint { x, y } => format!("P{mark}({},{})", e(x), ctx.render(y)),
            VertexKind::AffineLine { m, b } => format!("L{mark}[{},{}]", e(m), ctx.render(b)),
            VertexKind::VerticalLine(i) => format!("Linf{mark}({})", e(i)),
            VertexKind::SlopePoint(i) => format!("Pinf{mark}({})", e(i)),
        }
    }

    /// The plane point or line this vertex stands for (copy flag dropped).
    pub fn plane_vertex(&self, ctx: &FieldContext) -> PlaneVertex {
        match self.kind {
            VertexKind::AffinePoint { x, y } => PlaneVertex::Point(ctx.exp(x), y),
            VertexKind::AffineLine { m, b } => PlaneVertex::Line(ctx.exp(m), b),
            VertexKind::VerticalLine(i) => PlaneVertex::Vertical(ctx.exp(i)),
            VertexKind::SlopePoint(i) => PlaneVertex::Slope(ctx.exp(i)),
        }
    }
}

/// One of the `2(q+1)` parts that carry a circulant in the mixed
/// construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartId {
    PointRow(FieldElement),
    LinePencil(FieldElement),
    LinfPart,
    PinfPart,
}

impl PartId {
    pub fn label(&self, ctx: &FieldContext) -> String {
        match self {
            PartId::PointRow(y) => format!("P(*,{})", ctx.render(*y)),
            PartId::LinePencil(b) => format!("L[*,{}]", ctx.render(*b)),
            PartId::LinfPart => "Linf(*)".to_string(),
            PartId::PinfPart => "Pinf(*)".to_string(),
        }
    }

    pub fn is_valid(&self, ctx: &FieldContext) -> bool {
        match self {
            PartId::PointRow(a) | PartId::LinePencil(a) => a.packed() < ctx.q(),
            PartId::LinfPart | PartId::PinfPart => true,
        }
    }
}

impl fmt::Display for PartId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

pub fn part_of(v: &Vertex) -> PartId {
    match v.kind {
        VertexKind::AffinePoint { y, .. } => PartId::PointRow(y),
        VertexKind::AffineLine { b, .. } => PartId::LinePencil(b),
        VertexKind::VerticalLine(_) => PartId::LinfPart,
        VertexKind::SlopePoint(_) => PartId::PinfPart,
    }
}

/// All parts in canonical order.
pub fn all_parts(ctx: &FieldContext) -> Vec<PartId> {
    let mut parts: Vec<PartId> = ctx
        .elements()
        .flat_map(|a| [PartId::PointRow(a), PartId::LinePencil(a)])
        .collect();
    parts.push(PartId::LinfPart);
    parts.push(PartId::PinfPart);
    parts.sort();
    parts
}

fn semiplane_vertex(ctx: &FieldContext, v: &PlaneVertex) -> Option<Vertex> {
    let log = |a: &FieldElement| ctx.log(*a).ok();
    let kind = match v {
        PlaneVertex::Point(x, y) => VertexKind::AffinePoint { x: log(x)?, y: *y },
        PlaneVertex::Line(m, b) => VertexKind::AffineLine { m: log(m)?, b: *b },
        PlaneVertex::Vertical(i) => VertexKind::VerticalLine(log(i)?),
        PlaneVertex::Slope(i) => VertexKind::SlopePoint(log(i)?),
        PlaneVertex::LineAtInfinity | PlaneVertex::PointAtInfinity => return None,
    };
    Some(Vertex::original(kind))
}

/// `G_q`: the incidence graph of the plane induced on the points and lines
/// with nonzero first coordinate. `2(q-1)(q+1)` vertices, `q`-regular.
pub fn build_semiplane_l(ctx: &FieldContext) -> MixedGraph<Vertex> {
    let plane = build_projective_incidence_graph(ctx);
    semiplane_from_plane(ctx, &plane)
}

pub(crate) fn semiplane_from_plane(
    ctx: &FieldContext,
    plane: &MixedGraph<PlaneVertex>,
) -> MixedGraph<Vertex> {
    let kept: Vec<PlaneVertex> = plane
        .vertices()
        .iter()
        .filter(|v| semiplane_vertex(ctx, v).is_some())
        .copied()
        .collect();
    plane
        .induced_subgraph(&kept)
        .expect("kept vertices belong to the plane")
        .map_vertices(|v| semiplane_vertex(ctx, v).expect("filtered above"))
        .expect("relabelling is injective")
        .canonical()
}
