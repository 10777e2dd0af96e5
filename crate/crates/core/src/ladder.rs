//! Generalized ladder graphs: two paths `u_1 … u_m` and `v_1 … v_n` joined by
//! cross edges `u_l v_r`.
//!
//! All indices are 1-based. Path edges are implicit; only cross edges are
//! stored, sorted lexicographically by `(l, r)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which of the two paths a vertex lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    /// The first path, vertices `u_1 … u_m`.
    G1,
    /// The second path, vertices `v_1 … v_n`.
    G2,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::G1 => Side::G2,
            Side::G2 => Side::G1,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::G1 => "u",
            Side::G2 => "v",
        })
    }
}

/// A vertex addressed by its path and 1-based position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexRef {
    pub side: Side,
    pub index: usize,
}

impl VertexRef {
    pub const fn u(index: usize) -> Self {
        VertexRef { side: Side::G1, index }
    }

    pub const fn v(index: usize) -> Self {
        VertexRef { side: Side::G2, index }
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side, self.index)
    }
}

/// A cross edge `u_l v_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CrossEdge {
    pub l: usize,
    pub r: usize,
}

impl CrossEdge {
    pub const fn new(l: usize, r: usize) -> Self {
        CrossEdge { l, r }
    }

    pub fn left(self) -> VertexRef {
        VertexRef::u(self.l)
    }

    pub fn right(self) -> VertexRef {
        VertexRef::v(self.r)
    }
}

impl fmt::Display for CrossEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.l, self.r)
    }
}

impl From<(usize, usize)> for CrossEdge {
    fn from((l, r): (usize, usize)) -> Self {
        CrossEdge { l, r }
    }
}

/// A generalized `(m, n)`-ladder graph in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedLadder {
    m: usize,
    n: usize,
    cross: Vec<CrossEdge>,
}

impl GeneralizedLadder {
    /// Builds the canonical instance, rejecting out-of-range and repeated
    /// cross edges.
    pub fn new<I, E>(m: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<CrossEdge>,
    {
        if m == 0 || n == 0 {
            return Err(Error::InvalidDimension { m, n });
        }
        let mut cross = Vec::new();
        for e in edges {
            let e = e.into();
            if e.l == 0 || e.l > m || e.r == 0 || e.r > n {
                return Err(Error::IndexOutOfRange { l: e.l, r: e.r, m, n });
            }
            cross.push(e);
        }
        cross.sort_unstable();
        if let Some(w) = cross.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        Ok(GeneralizedLadder { m, n, cross })
    }

    /// The functigraph `C(P_n, f)`, with `f` given as `f(1), …, f(n)`.
    pub fn from_functigraph(values: &[usize]) -> Result<Self> {
        let n = values.len();
        Self::new(
            n,
            n,
            values.iter().enumerate().map(|(i, &fi)| CrossEdge::new(i + 1, fi)),
        )
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cross edges, strictly increasing in `(l, r)`.
    pub fn cross(&self) -> &[CrossEdge] {
        &self.cross
    }

    pub fn num_cross(&self) -> usize {
        self.cross.len()
    }

    pub fn contains_edge(&self, e: CrossEdge) -> bool {
        self.position(e).is_some()
    }

    /// Index of `e` in [`cross`](Self::cross).
    pub fn position(&self, e: CrossEdge) -> Option<usize> {
        self.cross.binary_search(&e).ok()
    }

    pub fn contains_vertex(&self, v: VertexRef) -> bool {
        v.index >= 1 && v.index <= self.path_len(v.side)
    }

    pub fn path_len(&self, side: Side) -> usize {
        match side {
            Side::G1 => self.m,
            Side::G2 => self.n,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexRef> + '_ {
        (1..=self.m).map(VertexRef::u).chain((1..=self.n).map(VertexRef::v))
    }

    pub fn num_vertices(&self) -> usize {
        self.m + self.n
    }

    pub fn num_edges(&self) -> usize {
        self.m - 1 + self.n - 1 + self.cross.len()
    }

    /// Whether `a` and `b` are joined by a path edge or a cross edge.
    pub fn adjacent(&self, a: VertexRef, b: VertexRef) -> bool {
        if !self.contains_vertex(a) || !self.contains_vertex(b) {
            return false;
        }
        match (a.side, b.side) {
            (Side::G1, Side::G1) | (Side::G2, Side::G2) => a.index.abs_diff(b.index) == 1,
            (Side::G1, Side::G2) => self.contains_edge(CrossEdge::new(a.index, b.index)),
            (Side::G2, Side::G1) => self.contains_edge(CrossEdge::new(b.index, a.index)),
        }
    }

    /// The isomorphic instance obtained by one of the three relabelings.
    pub fn apply_symmetry(&self, which: Symmetry) -> GeneralizedLadder {
        let (m, n) = which.image_dims(self.m, self.n);
        let mut cross: Vec<CrossEdge> = self.cross.iter().map(|&e| which.map_edge(e, self.m, self.n)).collect();
        cross.sort_unstable();
        GeneralizedLadder { m, n, cross }
    }
}

/// The three relabelings that carry a generalized ladder onto an isomorphic
/// one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symmetry {
    /// Reverse the first path: `u_i ↦ u_{m-i+1}`.
    ReverseFirst,
    /// Reverse the second path: `v_j ↦ v_{n-j+1}`.
    ReverseSecond,
    /// Exchange the two paths: `u_i ↦ v_i`, `v_j ↦ u_j`, `(m, n) ↦ (n, m)`.
    Swap,
}

impl Symmetry {
    pub const ALL: [Symmetry; 3] = [Symmetry::ReverseFirst, Symmetry::ReverseSecond, Symmetry::Swap];

    /// Path lengths of the image of an `(m, n)` instance.
    pub fn image_dims(self, m: usize, n: usize) -> (usize, usize) {
        match self {
            Symmetry::Swap => (n, m),
            _ => (m, n),
        }
    }

    /// Image of a cross edge of an `(m, n)` instance.
    pub fn map_edge(self, e: CrossEdge, m: usize, n: usize) -> CrossEdge {
        match self {
            Symmetry::ReverseFirst => CrossEdge::new(m - e.l + 1, e.r),
            Symmetry::ReverseSecond => CrossEdge::new(e.l, n - e.r + 1),
            Symmetry::Swap => CrossEdge::new(e.r, e.l),
        }
    }

    /// Image of a vertex of an `(m, n)` instance.
    pub fn map_vertex(self, v: VertexRef, m: usize, n: usize) -> VertexRef {
        match (self, v.side) {
            (Symmetry::ReverseFirst, Side::G1) => VertexRef::u(m - v.index + 1),
            (Symmetry::ReverseSecond, Side::G2) => VertexRef::v(n - v.index + 1),
            (Symmetry::Swap, side) => VertexRef {
                side: side.other(),
                index: v.index,
            },
            _ => v,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Symmetry::ReverseFirst => 'L',
            Symmetry::ReverseSecond => 'R',
            Symmetry::Swap => 'S',
        }
    }
}

impl std::str::FromStr for Symmetry {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "L" | "l" => Ok(Symmetry::ReverseFirst),
            "R" | "r" => Ok(Symmetry::ReverseSecond),
            "S" | "s" => Ok(Symmetry::Swap),
            _ => Err(format!("unknown symmetry `{s}` (expected L, R or S)")),
        }
    }
}

/// A sequence of symmetries applied left to right, remembering every
/// intermediate instance so vertices and edges can be pulled back.
#[derive(Debug, Clone)]
pub struct Relabeling {
    frames: Vec<(Symmetry, usize, usize)>,
}

impl Relabeling {
    /// Applies `steps` to `g`, returning the final image and the record needed
    /// to map its vertices back onto `g`.
    pub fn apply(g: &GeneralizedLadder, steps: &[Symmetry]) -> (GeneralizedLadder, Relabeling) {
        let mut cur = g.clone();
        let mut frames = Vec::with_capacity(steps.len());
        for &w in steps {
            frames.push((w, cur.m, cur.n));
            cur = cur.apply_symmetry(w);
        }
        (cur, Relabeling { frames })
    }

    pub fn is_identity(&self) -> bool {
        self.frames.is_empty()
    }

    pub fn steps(&self) -> impl Iterator<Item = Symmetry> + '_ {
        self.frames.iter().map(|f| f.0)
    }

    /// Maps a vertex of the original instance forward to the image.
    pub fn forward_vertex(&self, mut v: VertexRef) -> VertexRef {
        for &(w, m, n) in &self.frames {
            v = w.map_vertex(v, m, n);
        }
        v
    }

    pub fn forward_edge(&self, mut e: CrossEdge) -> CrossEdge {
        for &(w, m, n) in &self.frames {
            e = w.map_edge(e, m, n);
        }
        e
    }

    /// Maps a vertex of the image back to the original instance.
    pub fn pull_vertex(&self, mut v: VertexRef) -> VertexRef {
        for &(w, m, n) in self.frames.iter().rev() {
            let (im, in_) = w.image_dims(m, n);
            v = w.map_vertex(v, im, in_);
        }
        v
    }

    pub fn pull_edge(&self, mut e: CrossEdge) -> CrossEdge {
        for &(w, m, n) in self.frames.iter().rev() {
            let (im, in_) = w.image_dims(m, n);
            e = w.map_edge(e, im, in_);
        }
        e
    }
}

/// Named instances used throughout the tests and documentation.
pub mod fixtures {
    use super::GeneralizedLadder;

    /// The 3-ladder `P_2 × P_3`.
    pub fn ladder3() -> GeneralizedLadder {
        GeneralizedLadder::new(3, 3, [(1, 1), (2, 2), (3, 3)]).unwrap()
    }

    /// Reversal functigraph on `P_3`.
    pub fn fan3() -> GeneralizedLadder {
        GeneralizedLadder::new(3, 3, [(1, 3), (2, 2), (3, 1)]).unwrap()
    }

    /// `K_4` as a (2, 2)-ladder with all four cross edges.
    pub fn k4() -> GeneralizedLadder {
        GeneralizedLadder::new(2, 2, [(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap()
    }

    /// A (3, 3)-ladder isomorphic to `K_{3,3}`.
    pub fn k33() -> GeneralizedLadder {
        GeneralizedLadder::new(3, 3, [(1, 1), (1, 3), (2, 2), (3, 1), (3, 3)]).unwrap()
    }

    pub const FIG1_EDGES: [(usize, usize); 20] = [
        (1, 5),
        (2, 6),
        (3, 3),
        (3, 4),
        (4, 2),
        (5, 9),
        (5, 7),
        (6, 10),
        (6, 11),
        (7, 1),
        (8, 3),
        (8, 5),
        (9, 11),
        (9, 13),
        (10, 12),
        (11, 12),
        (12, 6),
        (13, 7),
        (14, 10),
        (15, 8),
    ];

    /// A generalized (15, 13)-ladder used as the running example.
    pub fn fig1() -> GeneralizedLadder {
        GeneralizedLadder::new(15, 13, FIG1_EDGES).unwrap()
    }
}
