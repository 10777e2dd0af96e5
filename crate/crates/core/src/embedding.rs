//! Integer-coordinate drawings of planar and outerplanar generalized ladders,
//! and an exact crossing verifier.
//!
//! The planar drawing puts the first path on the line `x = 0` and the second
//! on `x = mn`. Cross edges are split into four classes by which quadrant is
//! empty; three classes are routed as three-segment polylines through anchor
//! lattices to the right of, above, and below the drawing, the fourth is drawn
//! straight.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::decision::{is_outerplanar, OuterCondition};
use crate::error::{Error, Result};
use crate::geometry::{contact, on_segment, Contact, Point};
use crate::ladder::{CrossEdge, GeneralizedLadder, Side, VertexRef};
use crate::quadrant::QuadrantIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeClass {
    /// Empty up-down quadrant; routed around the right.
    X,
    /// Empty up-up quadrant (and not X); routed over the top.
    Y,
    /// Empty down-up quadrant (and not X or Y); routed under the bottom.
    Z,
    /// Only the down-down quadrant is empty; drawn straight.
    W,
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Assigns each cross edge the first class whose quadrant is empty.
pub fn classify_edges(g: &GeneralizedLadder) -> Result<Vec<(CrossEdge, EdgeClass)>> {
    let idx = QuadrantIndex::build(g);
    g.cross()
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let f = idx.flags_at(i, e);
            let class = if !f.up_down {
                EdgeClass::X
            } else if !f.up_up {
                EdgeClass::Y
            } else if !f.down_up {
                EdgeClass::Z
            } else if !f.down_down {
                EdgeClass::W
            } else {
                return Err(Error::NotPlanar(e));
            };
            Ok((e, class))
        })
        .collect()
}

/// An edge of the ladder graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GraphEdge {
    /// Path edge between positions `index` and `index + 1` of one path.
    Path {
        side: Side,
        index: usize,
    },
    Cross(CrossEdge),
}

impl GraphEdge {
    pub fn endpoints(self) -> (VertexRef, VertexRef) {
        match self {
            GraphEdge::Path { side, index } => (VertexRef { side, index }, VertexRef { side, index: index + 1 }),
            GraphEdge::Cross(e) => (e.left(), e.right()),
        }
    }

    fn has_endpoint(self, v: VertexRef) -> bool {
        let (a, b) = self.endpoints();
        a == v || b == v
    }
}

/// All edges of `g`: first-path edges, second-path edges, then cross edges.
pub fn graph_edges(g: &GeneralizedLadder) -> Vec<GraphEdge> {
    (1..g.m())
        .map(|index| GraphEdge::Path { side: Side::G1, index })
        .chain((1..g.n()).map(|index| GraphEdge::Path { side: Side::G2, index }))
        .chain(g.cross().iter().map(|&e| GraphEdge::Cross(e)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddedEdge {
    pub edge: GraphEdge,
    pub class: Option<EdgeClass>,
    /// Polyline from the first endpoint to the second, endpoints included.
    pub polyline: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub vertices: BTreeMap<VertexRef, Point>,
    pub edges: Vec<EmbeddedEdge>,
}

impl Embedding {
    pub fn vertex(&self, v: VertexRef) -> Option<Point> {
        self.vertices.get(&v).copied()
    }

    pub fn polyline(&self, edge: GraphEdge) -> Option<&[Point]> {
        self.edges
            .iter()
            .find(|e| e.edge == edge)
            .map(|e| e.polyline.as_slice())
    }
}

/// Anchor points of the planar drawing for an `(m, n)` instance.
#[derive(Debug, Clone, Copy)]
pub struct Anchors {
    m: i64,
    n: i64,
}

impl Anchors {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        let overflow = Error::CoordinateOverflow { m, n };
        (m as i64)
            .checked_mul(n as i64)
            .filter(|&mn| mn <= crate::geometry::COORD_LIMIT / 4)
            .ok_or(overflow)?;
        Ok(Anchors {
            m: m as i64,
            n: n as i64,
        })
    }

    fn mn(&self) -> i64 {
        self.m * self.n
    }

    pub fn u(&self, i: usize) -> Point {
        Point::new(0, self.n * i as i64)
    }

    pub fn v(&self, j: usize) -> Point {
        Point::new(self.mn(), self.mn() - self.m * j as i64)
    }

    /// `n·l + r`, the quantity every anchor is built from.
    fn key(&self, e: CrossEdge) -> i64 {
        self.n * e.l as i64 + e.r as i64
    }

    pub fn x1(&self, e: CrossEdge) -> Point {
        Point::new(self.mn(), self.mn() - self.n + self.key(e))
    }

    pub fn x2(&self, e: CrossEdge) -> Point {
        let t = self.mn() - self.n + self.key(e);
        Point::new(t, t)
    }

    pub fn y1(&self, e: CrossEdge) -> Point {
        let lr = self.n * e.l as i64 - e.r as i64;
        Point::new(-2 * self.mn() + lr, 3 * self.mn() - lr)
    }

    pub fn y2(&self, e: CrossEdge) -> Point {
        let t = 3 * self.mn() - self.n * e.l as i64 + e.r as i64;
        Point::new(t, t)
    }

    pub fn z1(&self, e: CrossEdge) -> Point {
        let t = self.n - self.key(e);
        Point::new(t, t)
    }

    pub fn z2(&self, e: CrossEdge) -> Point {
        Point::new(0, self.n - self.key(e))
    }

    pub fn route(&self, e: CrossEdge, class: EdgeClass) -> Vec<Point> {
        let (start, end) = (self.u(e.l), self.v(e.r));
        let mut line = match class {
            EdgeClass::X => vec![start, self.x1(e), self.x2(e), end],
            EdgeClass::Y => vec![start, self.y1(e), self.y2(e), end],
            EdgeClass::Z => vec![start, self.z1(e), self.z2(e), end],
            EdgeClass::W => vec![start, end],
        };
        line.dedup();
        line
    }
}

fn path_polylines(g: &GeneralizedLadder, place: impl Fn(VertexRef) -> Point) -> Vec<EmbeddedEdge> {
    graph_edges(g)
        .into_iter()
        .filter(|e| matches!(e, GraphEdge::Path { .. }))
        .map(move |edge| {
            let (a, b) = edge.endpoints();
            EmbeddedEdge {
                edge,
                class: None,
                polyline: vec![place(a), place(b)],
            }
        })
        .collect()
}

/// Planar drawing of a planar instance.
pub fn planar_embedding(g: &GeneralizedLadder) -> Result<Embedding> {
    let classes = classify_edges(g)?;
    let anchors = Anchors::new(g.m(), g.n())?;
    let place = |v: VertexRef| match v.side {
        Side::G1 => anchors.u(v.index),
        Side::G2 => anchors.v(v.index),
    };
    let vertices = g.vertices().map(|v| (v, place(v))).collect();
    let mut edges: Vec<EmbeddedEdge> = path_polylines(g, place);
    edges.extend(classes.into_iter().map(|(e, class)| EmbeddedEdge {
        edge: GraphEdge::Cross(e),
        class: Some(class),
        polyline: anchors.route(e, class),
    }));
    Ok(Embedding { vertices, edges })
}

/// Two-column straight-line drawing of an outerplanar instance. Every vertex
/// lies on `x = 0` or `x = 1`.
pub fn outerplanar_embedding(g: &GeneralizedLadder) -> Result<Embedding> {
    let report = is_outerplanar(g);
    let condition = report.outerplanar_condition.ok_or(Error::NotOuterplanar)?;
    let n = g.n() as i64;
    // Clause ii makes cross edges weakly increasing in both coordinates, so
    // both paths run upward. Under clause i they are weakly decreasing and
    // the second path is drawn downward instead.
    let place = |v: VertexRef| match (v.side, condition) {
        (Side::G1, _) => Point::new(0, v.index as i64),
        (Side::G2, OuterCondition::II) => Point::new(1, v.index as i64),
        (Side::G2, OuterCondition::I) => Point::new(1, n - v.index as i64 + 1),
    };
    let vertices = g.vertices().map(|v| (v, place(v))).collect();
    let mut edges: Vec<EmbeddedEdge> = path_polylines(g, place);
    edges.extend(g.cross().iter().map(|&e| EmbeddedEdge {
        edge: GraphEdge::Cross(e),
        class: None,
        polyline: vec![place(e.left()), place(e.right())],
    }));
    Ok(Embedding { vertices, edges })
}

struct Segment {
    edge: usize,
    index: usize,
    a: Point,
    b: Point,
}

/// Exact check that `emb` is a crossing-free drawing of `g`.
///
/// Errors only when `emb` lacks a vertex or edge of `g`, or when coordinates
/// are too large for exact arithmetic; every other defect yields `false`.
pub fn verify_embedding(g: &GeneralizedLadder, emb: &Embedding) -> Result<bool> {
    for v in g.vertices() {
        if !emb.vertices.contains_key(&v) {
            return Err(Error::IncompleteEmbedding(format!("vertex {v} missing")));
        }
    }
    let expected = graph_edges(g);
    let present: HashSet<GraphEdge> = emb.edges.iter().map(|e| e.edge).collect();
    if let Some(missing) = expected.iter().find(|e| !present.contains(e)) {
        return Err(Error::IncompleteEmbedding(format!("edge {missing:?} missing")));
    }
    if emb.vertices.len() != g.num_vertices() || emb.edges.len() != expected.len() || present.len() != expected.len() {
        return Ok(false);
    }
    let all_points = emb
        .vertices
        .values()
        .chain(emb.edges.iter().flat_map(|e| e.polyline.iter()));
    if !all_points.into_iter().all(|p| p.in_range()) {
        return Err(Error::CoordinateOverflow { m: g.m(), n: g.n() });
    }

    let mut vertex_at: HashMap<Point, VertexRef> = HashMap::new();
    for (&v, &p) in &emb.vertices {
        if vertex_at.insert(p, v).is_some() {
            return Ok(false);
        }
    }

    let mut segments = Vec::new();
    let mut polylines = Vec::with_capacity(emb.edges.len());
    for (k, e) in emb.edges.iter().enumerate() {
        let (s, t) = e.edge.endpoints();
        let mut line = e.polyline.clone();
        line.dedup();
        if line.len() < 2 || line.first() != Some(&emb.vertices[&s]) || line.last() != Some(&emb.vertices[&t]) {
            return Ok(false);
        }
        for (index, w) in line.windows(2).enumerate() {
            segments.push(Segment {
                edge: k,
                index,
                a: w[0],
                b: w[1],
            });
        }
        polylines.push(line);
    }

    // no vertex point on a segment except at that edge's own ends
    for (&p, &w) in &vertex_at {
        for s in &segments {
            if on_segment(s.a, s.b, p) {
                let line = &polylines[s.edge];
                let is_end = (s.index == 0 && p == line[0]) || (s.index + 2 == line.len() && p == line[line.len() - 1]);
                if !is_end || !emb.edges[s.edge].edge.has_endpoint(w) {
                    return Ok(false);
                }
            }
        }
    }

    for (i, s) in segments.iter().enumerate() {
        for t in &segments[i + 1..] {
            if !bboxes_meet(s, t) {
                continue;
            }
            let c = contact(s.a, s.b, t.a, t.b);
            let ok = if s.edge == t.edge {
                if t.index == s.index + 1 {
                    c == Contact::Touch(s.b)
                } else {
                    c == Contact::Disjoint
                }
            } else {
                match c {
                    Contact::Disjoint => true,
                    Contact::Cross | Contact::Overlap => false,
                    Contact::Touch(p) => {
                        let shared = vertex_at.get(&p).is_some_and(|&w| {
                            emb.edges[s.edge].edge.has_endpoint(w) && emb.edges[t.edge].edge.has_endpoint(w)
                        });
                        shared && (p == s.a || p == s.b) && (p == t.a || p == t.b)
                    }
                }
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn bboxes_meet(s: &Segment, t: &Segment) -> bool {
    s.a.x.min(s.b.x) <= t.a.x.max(t.b.x)
        && t.a.x.min(t.b.x) <= s.a.x.max(s.b.x)
        && s.a.y.min(s.b.y) <= t.a.y.max(t.b.y)
        && t.a.y.min(t.b.y) <= s.a.y.max(s.b.y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::fixtures::*;

    fn class_set(classes: &[(CrossEdge, EdgeClass)], c: EdgeClass) -> Vec<(usize, usize)> {
        classes.iter().filter(|x| x.1 == c).map(|x| (x.0.l, x.0.r)).collect()
    }

    #[test]
    fn fig1_classes() {
        let classes = classify_edges(&fig1()).unwrap();
        assert_eq!(
            class_set(&classes, EdgeClass::X),
            vec![(7, 1), (8, 3), (8, 5), (12, 6), (13, 7), (15, 8)]
        );
        assert_eq!(
            class_set(&classes, EdgeClass::Y),
            vec![(9, 13), (10, 12), (11, 12), (14, 10)]
        );
        assert_eq!(
            class_set(&classes, EdgeClass::Z),
            vec![(1, 5), (2, 6), (5, 7), (5, 9), (6, 10), (6, 11), (9, 11)]
        );
        assert_eq!(class_set(&classes, EdgeClass::W), vec![(3, 3), (3, 4), (4, 2)]);
    }

    #[test]
    fn ladder_is_all_x() {
        let classes = classify_edges(&ladder3()).unwrap();
        assert!(classes.iter().all(|c| c.1 == EdgeClass::X));
        assert_eq!(classify_edges(&k33()), Err(Error::NotPlanar(CrossEdge::new(2, 2))));
    }

    #[test]
    fn fig1_coordinates() {
        let emb = planar_embedding(&fig1()).unwrap();
        assert_eq!(emb.vertex(VertexRef::u(1)), Some(Point::new(0, 13)));
        assert_eq!(emb.vertex(VertexRef::v(1)), Some(Point::new(195, 180)));
        assert_eq!(
            emb.polyline(GraphEdge::Cross(CrossEdge::new(7, 1))).unwrap(),
            &[
                Point::new(0, 91),
                Point::new(195, 274),
                Point::new(274, 274),
                Point::new(195, 180)
            ]
        );
        assert!(verify_embedding(&fig1(), &emb).unwrap());
    }

    #[test]
    fn fig1_perturbed_embedding_fails() {
        let g = fig1();
        let mut emb = planar_embedding(&g).unwrap();
        let a = CrossEdge::new(7, 1);
        let b = CrossEdge::new(8, 3);
        let ia = emb.edges.iter().position(|e| e.edge == GraphEdge::Cross(a)).unwrap();
        let ib = emb.edges.iter().position(|e| e.edge == GraphEdge::Cross(b)).unwrap();
        let ya = emb.edges[ia].polyline[1].y;
        let yb = emb.edges[ib].polyline[1].y;
        emb.edges[ia].polyline[1].y = yb;
        emb.edges[ib].polyline[1].y = ya;
        assert!(!verify_embedding(&g, &emb).unwrap());
    }

    #[test]
    fn smallest_instance() {
        let g = GeneralizedLadder::new(1, 1, [(1, 1)]).unwrap();
        let emb = planar_embedding(&g).unwrap();
        assert_eq!(emb.vertex(VertexRef::u(1)), Some(Point::new(0, 1)));
        assert_eq!(emb.vertex(VertexRef::v(1)), Some(Point::new(1, 0)));
        assert_eq!(
            emb.polyline(GraphEdge::Cross(CrossEdge::new(1, 1))).unwrap(),
            &[Point::new(0, 1), Point::new(1, 2), Point::new(2, 2), Point::new(1, 0)]
        );
        assert!(verify_embedding(&g, &emb).unwrap());
    }

    #[test]
    fn nonplanar_has_no_embedding() {
        assert!(matches!(planar_embedding(&k33()), Err(Error::NotPlanar(_))));
        assert!(matches!(outerplanar_embedding(&k4()), Err(Error::NotOuterplanar)));
    }

    #[test]
    fn outerplanar_fixtures() {
        for g in [fan3(), ladder3()] {
            let emb = outerplanar_embedding(&g).unwrap();
            assert!(verify_embedding(&g, &emb).unwrap());
            assert!(emb.vertices.values().all(|p| p.x == 0 || p.x == 1));
            assert!(emb.edges.iter().all(|e| e.polyline.len() == 2));
        }
        let emb = outerplanar_embedding(&fan3()).unwrap();
        assert_eq!(emb.vertex(VertexRef::v(3)), Some(Point::new(1, 1)));
    }

    #[test]
    fn fan_drawn_with_upward_second_path_crosses() {
        let g = fan3();
        let mut emb = outerplanar_embedding(&g).unwrap();
        for j in 1..=3 {
            emb.vertices.insert(VertexRef::v(j), Point::new(1, j as i64));
        }
        for e in &mut emb.edges {
            let (a, b) = e.edge.endpoints();
            e.polyline = vec![emb.vertices[&a], emb.vertices[&b]];
        }
        assert!(!verify_embedding(&g, &emb).unwrap());
    }

    #[test]
    fn incomplete_embedding_is_an_error() {
        let g = ladder3();
        let mut emb = outerplanar_embedding(&g).unwrap();
        emb.edges.pop();
        assert!(matches!(verify_embedding(&g, &emb), Err(Error::IncompleteEmbedding(_))));
        let mut emb = outerplanar_embedding(&g).unwrap();
        emb.vertices.remove(&VertexRef::u(2));
        assert!(matches!(verify_embedding(&g, &emb), Err(Error::IncompleteEmbedding(_))));
    }

    #[test]
    fn verifier_rejects_defects() {
        let g = ladder3();
        let base = outerplanar_embedding(&g).unwrap();

        // polyline not ending at its vertex
        let mut emb = base.clone();
        emb.edges.last_mut().unwrap().polyline[1] = Point::new(1, 7);
        assert!(!verify_embedding(&g, &emb).unwrap());

        // coincident vertices
        let mut emb = base.clone();
        emb.vertices.insert(VertexRef::u(3), Point::new(0, 2));
        assert!(!verify_embedding(&g, &emb).unwrap());

        // edge passing through a foreign vertex
        let mut emb = base.clone();
        let e = emb
            .edges
            .iter_mut()
            .find(|e| e.edge == GraphEdge::Cross(CrossEdge::new(1, 1)))
            .unwrap();
        e.polyline = vec![Point::new(0, 1), Point::new(0, 3), Point::new(1, 1)];
        assert!(!verify_embedding(&g, &emb).unwrap());

        // a polyline folding back over itself
        let mut emb = base.clone();
        let e = emb
            .edges
            .iter_mut()
            .find(|e| e.edge == GraphEdge::Cross(CrossEdge::new(2, 2)))
            .unwrap();
        e.polyline = vec![Point::new(0, 2), Point::new(0, 0), Point::new(0, 1), Point::new(1, 2)];
        assert!(!verify_embedding(&g, &emb).unwrap());

        // self-crossing polyline
        let mut emb = base;
        let e = emb
            .edges
            .iter_mut()
            .find(|e| e.edge == GraphEdge::Cross(CrossEdge::new(3, 3)))
            .unwrap();
        e.polyline = vec![
            Point::new(0, 3),
            Point::new(5, 10),
            Point::new(5, 5),
            Point::new(2, 8),
            Point::new(1, 3),
        ];
        assert!(!verify_embedding(&g, &emb).unwrap());
    }

    #[test]
    fn overflow_is_reported() {
        let big = 1usize << 31;
        assert!(matches!(Anchors::new(big, big), Err(Error::CoordinateOverflow { .. })));
        assert!(Anchors::new(1 << 20, 1 << 20).is_ok());
    }

    #[test]
    fn x_anchor_order_matches_edge_order() {
        let g = fig1();
        let anchors = Anchors::new(g.m(), g.n()).unwrap();
        for &e in g.cross() {
            for &f in g.cross() {
                let above = anchors.x1(e).y > anchors.x1(f).y;
                assert_eq!(above, anchors.x2(e).y > anchors.x2(f).y);
                assert_eq!(above, e != f && (e.l > f.l || (e.l == f.l && e.r > f.r)));
            }
        }
    }
}
