//! Forbidden-subdivision certificates.
//!
//! A non-planar generalized ladder contains a `K_{3,3}` subdivision built from
//! one edge with four occupied quadrants, one representative per quadrant and
//! two path sections. A non-outerplanar one contains a `K_{3,2}` or `K_4`
//! subdivision. Every certificate can be re-checked against the instance by
//! [`verify_certificate`] without trusting the construction.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::decision::{find_k32_edge, is_outerplanar, is_planar, Witness};
use crate::error::{Error, Result};
use crate::ladder::{CrossEdge, GeneralizedLadder, Relabeling, Side, Symmetry, VertexRef};
use crate::quadrant::{quadrant_flags_naive, quadrant_representatives};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    K33,
    K32,
    K4,
}

impl Pattern {
    pub fn num_paths(self) -> usize {
        match self {
            Pattern::K33 => 9,
            Pattern::K32 | Pattern::K4 => 6,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::K33 => "K33",
            Pattern::K32 => "K32",
            Pattern::K4 => "K4",
        })
    }
}

/// A path of the host graph, listed from one endpoint to the other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertPath {
    pub vertices: Vec<VertexRef>,
}

impl CertPath {
    pub fn new(vertices: Vec<VertexRef>) -> Self {
        CertPath { vertices }
    }

    pub fn endpoints(&self) -> Option<(VertexRef, VertexRef)> {
        Some((*self.vertices.first()?, *self.vertices.last()?))
    }

    pub fn interior(&self) -> &[VertexRef] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BranchClasses {
    /// Bipartition of a `K_{3,3}` or `K_{3,2}`.
    Bipartite { x: Vec<VertexRef>, y: Vec<VertexRef> },
    /// The four branch vertices of a `K_4`.
    Complete(Vec<VertexRef>),
}

impl BranchClasses {
    pub fn vertices(&self) -> Vec<VertexRef> {
        match self {
            BranchClasses::Bipartite { x, y } => x.iter().chain(y).copied().collect(),
            BranchClasses::Complete(v) => v.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionCertificate {
    pub pattern: Pattern,
    pub branch_classes: BranchClasses,
    pub paths: Vec<CertPath>,
}

impl SubdivisionCertificate {
    fn map_vertices(&self, f: impl Fn(VertexRef) -> VertexRef) -> SubdivisionCertificate {
        let map = |vs: &Vec<VertexRef>| vs.iter().map(|&v| f(v)).collect::<Vec<_>>();
        SubdivisionCertificate {
            pattern: self.pattern,
            branch_classes: match &self.branch_classes {
                BranchClasses::Bipartite { x, y } => BranchClasses::Bipartite { x: map(x), y: map(y) },
                BranchClasses::Complete(v) => BranchClasses::Complete(map(v)),
            },
            paths: self.paths.iter().map(|p| CertPath::new(map(&p.vertices))).collect(),
        }
    }

    /// Carries a certificate for the image of a relabeling back to the
    /// original instance.
    pub fn pull_back(&self, rel: &Relabeling) -> SubdivisionCertificate {
        self.map_vertices(|v| rel.pull_vertex(v))
    }
}

/// Vertices of the section of one path from `from` to `to`, both included.
fn section(side: Side, from: usize, to: usize) -> Vec<VertexRef> {
    let make = |index| VertexRef { side, index };
    if from <= to {
        (from..=to).map(make).collect()
    } else {
        (to..=from).rev().map(make).collect()
    }
}

/// Concatenates walks, merging the shared vertex at each junction.
fn join(parts: &[Vec<VertexRef>]) -> CertPath {
    let mut out: Vec<VertexRef> = Vec::new();
    for part in parts {
        let skip = usize::from(!part.is_empty() && out.last() == part.first());
        out.extend_from_slice(&part[skip..]);
    }
    CertPath::new(out)
}

/// Intermediate quantities of the `K_{3,3}` construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K33Construction {
    /// The edge with all four quadrants occupied.
    pub a: CrossEdge,
    /// Representatives of the up-down, up-up, down-up and down-down quadrants.
    pub b: CrossEdge,
    pub c: CrossEdge,
    pub d: CrossEdge,
    pub e: CrossEdge,
    /// Outer and inner extents of the two sections: `alpha ≤ alpha_inner <
    /// l(a) < beta_inner ≤ beta` on the first path, `gamma ≤ gamma_inner <
    /// r(a) < delta_inner ≤ delta` on the second.
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    pub alpha_inner: usize,
    pub beta_inner: usize,
    pub gamma_inner: usize,
    pub delta_inner: usize,
    pub certificate: SubdivisionCertificate,
}

pub fn extract_k33_witness(g: &GeneralizedLadder) -> Result<SubdivisionCertificate> {
    extract_k33_construction(g).map(|c| c.certificate)
}

pub fn extract_k33_construction(g: &GeneralizedLadder) -> Result<K33Construction> {
    let a = is_planar(g)
        .witness_edge()
        .ok_or(Error::NotApplicable("instance is planar"))?;
    let reps = quadrant_representatives(g, a);
    let missing = || Error::Internal(format!("quadrant of {a} unexpectedly empty"));
    let b = reps.up_down.ok_or_else(missing)?;
    let c = reps.up_up.ok_or_else(missing)?;
    let d = reps.down_up.ok_or_else(missing)?;
    let e = reps.down_down.ok_or_else(missing)?;

    let alpha = d.l.min(e.l);
    let beta = b.l.max(c.l);
    let gamma = b.r.min(e.r);
    let delta = c.r.max(d.r);
    let alpha_inner = d.l.max(e.l);
    let beta_inner = b.l.min(c.l);
    let gamma_inner = b.r.max(e.r);
    let delta_inner = c.r.min(d.r);

    let x = vec![a.right(), VertexRef::u(alpha_inner), VertexRef::u(beta_inner)];
    let y = vec![a.left(), VertexRef::v(gamma_inner), VertexRef::v(delta_inner)];

    // From u_{alpha_inner} (resp. u_{beta_inner}) walk the first path to the
    // foot of the chosen edge, cross, then walk the second path to the target.
    // When the foot is u_{alpha_inner} itself the first walk is empty; when it
    // is u_alpha the walk is the (alpha_inner, alpha) section.
    let via = |start: usize, edge: CrossEdge, target: usize| {
        join(&[section(Side::G1, start, edge.l), section(Side::G2, edge.r, target)])
    };

    let paths = vec![
        // v_{r(a)}
        CertPath::new(vec![a.right(), a.left()]),
        section(Side::G2, a.r, gamma_inner).into(),
        section(Side::G2, a.r, delta_inner).into(),
        // u_{alpha_inner}
        section(Side::G1, alpha_inner, a.l).into(),
        via(alpha_inner, e, gamma_inner),
        via(alpha_inner, d, delta_inner),
        // u_{beta_inner}
        section(Side::G1, beta_inner, a.l).into(),
        via(beta_inner, b, gamma_inner),
        via(beta_inner, c, delta_inner),
    ];

    Ok(K33Construction {
        a,
        b,
        c,
        d,
        e,
        alpha,
        beta,
        gamma,
        delta,
        alpha_inner,
        beta_inner,
        gamma_inner,
        delta_inner,
        certificate: SubdivisionCertificate {
            pattern: Pattern::K33,
            branch_classes: BranchClasses::Bipartite { x, y },
            paths,
        },
    })
}

impl From<Vec<VertexRef>> for CertPath {
    fn from(vertices: Vec<VertexRef>) -> Self {
        CertPath::new(vertices)
    }
}

/// Relabelings tried, in order, to bring an edge into the canonical case
/// (up-down and down-down quadrants occupied). Together they form the whole
/// symmetry group of the ladder.
const NORMALIZATIONS: [&[Symmetry]; 8] = {
    use Symmetry::*;
    [
        &[],
        &[Swap],
        &[ReverseFirst],
        &[ReverseSecond],
        &[ReverseFirst, ReverseSecond],
        &[ReverseFirst, Swap],
        &[Swap, ReverseFirst],
        &[ReverseFirst, ReverseSecond, Swap],
    ]
};

/// `K_{3,2}` certificate around an edge with one of up-up/down-down and one of
/// up-down/down-up occupied.
pub fn k32_around_edge(g: &GeneralizedLadder, edge: CrossEdge) -> Result<SubdivisionCertificate> {
    let flags = quadrant_flags_naive(g, edge)?;
    let steps = NORMALIZATIONS
        .iter()
        .find(|steps| {
            let f = steps.iter().fold(flags, |f, &w| f.conjugate(w));
            f.up_down && f.down_down
        })
        .ok_or(Error::NotApplicable("edge does not yield a K32 subdivision"))?;

    let (h, rel) = Relabeling::apply(g, steps);
    let e = rel.forward_edge(edge);
    let reps = quadrant_representatives(&h, e);
    let missing = || Error::Internal(format!("normalization of {edge} failed"));
    let a = reps.up_down.ok_or_else(missing)?;
    let b = reps.down_down.ok_or_else(missing)?;
    let top = a.r.max(b.r);

    let x = vec![a.left(), b.left(), e.right()];
    let y = vec![e.left(), VertexRef::v(top)];
    let paths: Vec<CertPath> = vec![
        section(Side::G1, a.l, e.l).into(),
        join(&[vec![a.left()], section(Side::G2, a.r, top)]),
        section(Side::G1, b.l, e.l).into(),
        join(&[vec![b.left()], section(Side::G2, b.r, top)]),
        CertPath::new(vec![e.right(), e.left()]),
        section(Side::G2, e.r, top).into(),
    ];
    let cert = SubdivisionCertificate {
        pattern: Pattern::K32,
        branch_classes: BranchClasses::Bipartite { x, y },
        paths,
    };
    Ok(cert.pull_back(&rel))
}

/// `K_{3,2}` or `K_4` certificate for a non-outerplanar instance.
pub fn extract_outerplanar_witness(g: &GeneralizedLadder) -> Result<SubdivisionCertificate> {
    let report = is_outerplanar(g);
    let (e, f) = match report.witness {
        Some(Witness::Outerplanarity { clause_i, clause_ii }) => (clause_i.edge, clause_ii.edge),
        _ => return Err(Error::NotApplicable("instance is outerplanar")),
    };
    if let Some(edge) = find_k32_edge(g) {
        return k32_around_edge(g, edge);
    }
    k4_or_k32(g, e, f)
}

/// Case analysis on an edge `e` breaking clause i (up-up or down-down
/// occupied) and an edge `f` breaking clause ii (up-down or down-up occupied).
fn k4_or_k32(g: &GeneralizedLadder, e: CrossEdge, f: CrossEdge) -> Result<SubdivisionCertificate> {
    if e == f {
        return k32_around_edge(g, e);
    }
    if e.l != f.l && e.r != f.r {
        // f sits in an up-down or down-up quadrant of e, or e sits in an
        // up-up or down-down quadrant of f
        let f_crosses_e = (e.l < f.l) != (e.r < f.r);
        return k32_around_edge(g, if f_crosses_e { e } else { f });
    }

    // Normalize to l(e) = l(f) and r(e) < r(f).
    let mut steps = Vec::new();
    if e.l != f.l {
        steps.push(Symmetry::Swap);
    }
    let (_, rel) = Relabeling::apply(g, &steps);
    let swap_roles = rel.forward_edge(e).r > rel.forward_edge(f).r;
    if swap_roles {
        steps.push(Symmetry::ReverseFirst);
    }
    let (h, rel) = Relabeling::apply(g, &steps);
    let (e, f) = if swap_roles {
        (rel.forward_edge(f), rel.forward_edge(e))
    } else {
        (rel.forward_edge(e), rel.forward_edge(f))
    };
    debug_assert!(e.l == f.l && e.r < f.r);

    let lemma = |x: CrossEdge| k32_around_edge(g, rel.pull_edge(x));
    let reps_e = quadrant_representatives(&h, e);
    let reps_f = quadrant_representatives(&h, f);

    let Some(a) = reps_e.up_up else {
        // e has a down-down neighbour, which is also down-down for f
        return lemma(f);
    };
    let Some(b) = reps_f.up_down else {
        // f has a down-up neighbour, which is also down-up for e
        return lemma(e);
    };
    // a is up-up for e, b is up-down for f; e is down-down for a and f is
    // down-up for b.
    if a.r < f.r {
        return lemma(a);
    }
    if b.r > e.r {
        return lemma(b);
    }
    if a.r > f.r {
        return lemma(f);
    }
    if b.r < e.r {
        return lemma(e);
    }
    if a.l < b.l {
        return lemma(a);
    }
    if b.l < a.l {
        return lemma(b);
    }

    // e = (p, s), f = (p, t), a = (q, t), b = (q, s) with p < q and s < t.
    let cert = SubdivisionCertificate {
        pattern: Pattern::K4,
        branch_classes: BranchClasses::Complete(vec![e.left(), a.left(), e.right(), a.right()]),
        paths: vec![
            section(Side::G1, e.l, a.l).into(),
            CertPath::new(vec![e.left(), e.right()]),
            CertPath::new(vec![e.left(), a.right()]),
            CertPath::new(vec![a.left(), e.right()]),
            CertPath::new(vec![a.left(), a.right()]),
            section(Side::G2, e.r, a.r).into(),
        ],
    };
    Ok(cert.pull_back(&rel))
}

/// Structural check of a certificate against the instance.
pub fn verify_certificate(g: &GeneralizedLadder, cert: &SubdivisionCertificate) -> bool {
    let branch = cert.branch_classes.vertices();
    let shape_ok = match (&cert.branch_classes, cert.pattern) {
        (BranchClasses::Bipartite { x, y }, Pattern::K33) => x.len() == 3 && y.len() == 3,
        (BranchClasses::Bipartite { x, y }, Pattern::K32) => x.len() == 3 && y.len() == 2,
        (BranchClasses::Complete(v), Pattern::K4) => v.len() == 4,
        _ => false,
    };
    if !shape_ok || cert.paths.len() != cert.pattern.num_paths() {
        return false;
    }
    let branch_set: HashSet<VertexRef> = branch.iter().copied().collect();
    if branch_set.len() != branch.len() || !branch.iter().all(|&v| g.contains_vertex(v)) {
        return false;
    }

    let mut required: HashSet<(VertexRef, VertexRef)> = HashSet::new();
    let ordered = |a: VertexRef, b: VertexRef| if a <= b { (a, b) } else { (b, a) };
    match &cert.branch_classes {
        BranchClasses::Bipartite { x, y } => {
            for &p in x {
                for &q in y {
                    required.insert(ordered(p, q));
                }
            }
        }
        BranchClasses::Complete(v) => {
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    required.insert(ordered(v[i], v[j]));
                }
            }
        }
    }

    let mut interior_seen: HashSet<VertexRef> = HashSet::new();
    for path in &cert.paths {
        let Some((s, t)) = path.endpoints() else {
            return false;
        };
        if path.vertices.len() < 2 || !required.remove(&ordered(s, t)) {
            return false;
        }
        if !path.vertices.windows(2).all(|w| g.adjacent(w[0], w[1])) {
            return false;
        }
        let mut own: HashSet<VertexRef> = HashSet::new();
        if !path.vertices.iter().all(|&v| own.insert(v)) {
            return false;
        }
        for &v in path.interior() {
            if branch_set.contains(&v) || !interior_seen.insert(v) {
                return false;
            }
        }
    }
    required.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::fixtures::*;

    fn set(vs: &[VertexRef]) -> HashSet<VertexRef> {
        vs.iter().copied().collect()
    }

    #[test]
    fn k33_on_k33_fixture() {
        let c = extract_k33_construction(&k33()).unwrap();
        assert_eq!(
            (c.a, c.b, c.c, c.d, c.e),
            (
                CrossEdge::new(2, 2),
                CrossEdge::new(3, 1),
                CrossEdge::new(3, 3),
                CrossEdge::new(1, 3),
                CrossEdge::new(1, 1)
            )
        );
        let BranchClasses::Bipartite { x, y } = &c.certificate.branch_classes else {
            panic!()
        };
        assert_eq!(set(x), set(&[VertexRef::v(2), VertexRef::u(1), VertexRef::u(3)]));
        assert_eq!(set(y), set(&[VertexRef::u(2), VertexRef::v(1), VertexRef::v(3)]));
        assert!(c.certificate.paths.iter().all(|p| p.vertices.len() == 2));
        assert!(verify_certificate(&k33(), &c.certificate));
    }

    #[test]
    fn k33_ignores_extra_edge() {
        let g = GeneralizedLadder::new(3, 3, [(1, 1), (1, 3), (2, 1), (2, 2), (3, 1), (3, 3)]).unwrap();
        let cert = extract_k33_witness(&g).unwrap();
        let plain = extract_k33_witness(&k33()).unwrap();
        assert_eq!(cert.branch_classes, plain.branch_classes);
        assert!(verify_certificate(&g, &cert));
    }

    #[test]
    fn k33_on_planar_is_not_applicable() {
        assert!(matches!(extract_k33_witness(&ladder3()), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn k33_with_long_sections() {
        // a = (4, 4); quadrant representatives far from a so every good path
        // uses a nontrivial section, and l(d) = l(e) exercises the tie case.
        let g = GeneralizedLadder::new(7, 7, [(1, 2), (1, 6), (4, 4), (6, 1), (7, 7)]).unwrap();
        let c = extract_k33_construction(&g).unwrap();
        assert_eq!(c.d.l, c.e.l);
        assert!(verify_certificate(&g, &c.certificate));

        let g = GeneralizedLadder::new(8, 8, [(1, 7), (2, 1), (4, 4), (6, 2), (8, 6)]).unwrap();
        let c = extract_k33_construction(&g).unwrap();
        assert!(c.certificate.paths.iter().any(|p| p.vertices.len() > 3));
        assert!(verify_certificate(&g, &c.certificate));
    }

    #[test]
    fn k4_fixture() {
        let g = k4();
        let cert = extract_outerplanar_witness(&g).unwrap();
        assert_eq!(cert.pattern, Pattern::K4);
        assert_eq!(
            set(&cert.branch_classes.vertices()),
            set(&[VertexRef::u(1), VertexRef::u(2), VertexRef::v(1), VertexRef::v(2)])
        );
        assert!(verify_certificate(&g, &cert));
    }

    #[test]
    fn k32_on_k33_fixture() {
        let g = k33();
        let cert = extract_outerplanar_witness(&g).unwrap();
        assert_eq!(cert.pattern, Pattern::K32);
        let BranchClasses::Bipartite { x, y } = &cert.branch_classes else {
            panic!()
        };
        assert_eq!(x, &vec![VertexRef::u(3), VertexRef::u(1), VertexRef::v(2)]);
        assert_eq!(y, &vec![VertexRef::u(2), VertexRef::v(1)]);
        assert!(verify_certificate(&g, &cert));
    }

    #[test]
    fn outerplanar_witness_not_applicable() {
        assert!(matches!(
            extract_outerplanar_witness(&ladder3()),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn k32_in_every_orientation() {
        // one base configuration, pushed through every symmetry so that the
        // normalization has to undo each one
        let base = GeneralizedLadder::new(5, 6, [(1, 2), (3, 5), (5, 1)]).unwrap();
        for steps in NORMALIZATIONS {
            let (g, rel) = Relabeling::apply(&base, steps);
            let edge = rel.forward_edge(CrossEdge::new(3, 5));
            let cert = k32_around_edge(&g, edge).unwrap();
            assert!(verify_certificate(&g, &cert), "{steps:?}");
        }
    }

    #[test]
    fn k4_in_every_orientation() {
        let base = GeneralizedLadder::new(4, 5, [(1, 2), (1, 4), (3, 2), (3, 4)]).unwrap();
        assert!(find_k32_edge(&base).is_none());
        for steps in NORMALIZATIONS {
            let (g, _) = Relabeling::apply(&base, steps);
            let cert = extract_outerplanar_witness(&g).unwrap();
            assert_eq!(cert.pattern, Pattern::K4);
            assert!(verify_certificate(&g, &cert), "{steps:?}");
        }
    }

    #[test]
    fn truncated_path_is_rejected() {
        let g = k33();
        let mut cert = extract_k33_witness(&g).unwrap();
        cert.paths[0].vertices.pop();
        assert!(!verify_certificate(&g, &cert));
    }

    #[test]
    fn shared_interior_is_rejected() {
        // K4 on a (3, 2)-ladder: two paths routed through u2
        let g = GeneralizedLadder::new(3, 2, [(1, 1), (1, 2), (3, 1), (3, 2), (2, 1)]).unwrap();
        let (u1, u2, u3, v1, v2) = (
            VertexRef::u(1),
            VertexRef::u(2),
            VertexRef::u(3),
            VertexRef::v(1),
            VertexRef::v(2),
        );
        let good = SubdivisionCertificate {
            pattern: Pattern::K4,
            branch_classes: BranchClasses::Complete(vec![u1, u3, v1, v2]),
            paths: vec![
                CertPath::new(vec![u1, u2, u3]),
                CertPath::new(vec![u1, v1]),
                CertPath::new(vec![u1, v2]),
                CertPath::new(vec![u3, v1]),
                CertPath::new(vec![u3, v2]),
                CertPath::new(vec![v1, v2]),
            ],
        };
        assert!(verify_certificate(&g, &good));
        let mut bad = good.clone();
        bad.paths[3] = CertPath::new(vec![u3, u2, v1]);
        assert!(!verify_certificate(&g, &bad));
    }

    #[test]
    fn wrong_endpoint_pattern_is_rejected() {
        let g = k33();
        let mut cert = extract_k33_witness(&g).unwrap();
        cert.paths[1] = cert.paths[0].clone();
        assert!(!verify_certificate(&g, &cert));
        let mut cert = extract_k33_witness(&g).unwrap();
        cert.pattern = Pattern::K4;
        assert!(!verify_certificate(&g, &cert));
    }
}
