//! Brute-force planarity and outerplanarity by exhaustive rotation systems.
//!
//! Shares no code with the quadrant characterization. Every rotation system
//! (cyclic neighbour order at each vertex) is traced into faces; a connected
//! component is planar iff some rotation gives `V - E + F = 2`. Exponential,
//! meant for graphs of a dozen vertices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ladder::GeneralizedLadder;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Undirected simple graph on `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list; loops and repeated edges are dropped.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut sets = vec![BTreeSet::new(); vertex_count];
        for (a, b) in edges {
            assert!(a < vertex_count && b < vertex_count, "edge ({a}, {b}) out of range");
            if a != b {
                sets[a].insert(b);
                sets[b].insert(a);
            }
        }
        SimpleGraph {
            vertex_count,
            adjacency: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    pub fn complete(k: usize) -> Self {
        Self::new(k, (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// The graph with one extra vertex adjacent to every existing vertex.
    pub fn with_apex(&self) -> SimpleGraph {
        let apex = self.vertex_count;
        SimpleGraph::new(self.vertex_count + 1, self.edges().chain((0..apex).map(|v| (v, apex))))
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in &self.adjacency[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Number of rotation systems, `∏ max(1, (deg - 1)!)`, saturating.
    pub fn rotation_space(&self) -> u128 {
        self.adjacency
            .iter()
            .map(|ns| factorial(ns.len().saturating_sub(1)))
            .fold(1u128, |acc, f| acc.saturating_mul(f))
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).fold(1u128, |acc, x| acc.saturating_mul(x))
}

/// Vertex ids: `u_i ↦ i - 1`, `v_j ↦ m + j - 1`.
pub fn to_simple_graph(g: &GeneralizedLadder) -> SimpleGraph {
    let m = g.m();
    let n = g.n();
    let edges = (1..m)
        .map(|i| (i - 1, i))
        .chain((1..n).map(|j| (m + j - 1, m + j)))
        .chain(g.cross().iter().map(|e| (e.l - 1, m + e.r - 1)));
    SimpleGraph::new(m + n, edges)
}

/// A rotation system: for every vertex, its neighbours in cyclic order.
pub type Rotation = Vec<Vec<usize>>;

/// Face boundary walks of a rotation system, each as its dart sequence
/// `(tail, head)`.
pub fn trace_faces(h: &SimpleGraph, rotation: &Rotation) -> Vec<Vec<(usize, usize)>> {
    let next = successor_table(h, rotation);
    let darts = dart_offsets(h);
    let mut seen = vec![false; *darts.last().unwrap()];
    let mut faces = Vec::new();
    for v in 0..h.vertex_count {
        for i in 0..h.adjacency[v].len() {
            if seen[darts[v] + i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut x, mut k) = (v, i);
            while !seen[darts[x] + k] {
                seen[darts[x] + k] = true;
                let w = h.adjacency[x][k];
                face.push((x, w));
                let back = position(&h.adjacency[w], x);
                k = next[darts[w] + back];
                x = w;
            }
            faces.push(face);
        }
    }
    faces
}

/// `V - E + F` for a rotation system, with the outer faces of separate
/// components identified (isolated vertices contribute a face each before
/// identification). Never exceeds `1 + C`; equal iff every component is
/// embedded in the sphere.
pub fn euler_characteristic(h: &SimpleGraph, rotation: &Rotation) -> i64 {
    let comps = h.components().len() as i64;
    let isolated = h.adjacency.iter().filter(|ns| ns.is_empty()).count() as i64;
    let traced = trace_faces(h, rotation).len() as i64;
    let faces = traced + isolated - (comps - 1);
    h.vertex_count as i64 - h.edge_count() as i64 + faces
}

fn position(list: &[usize], x: usize) -> usize {
    list.binary_search(&x).expect("symmetric adjacency")
}

fn dart_offsets(h: &SimpleGraph) -> Vec<usize> {
    let mut off = Vec::with_capacity(h.vertex_count + 1);
    let mut acc = 0;
    off.push(0);
    for ns in &h.adjacency {
        acc += ns.len();
        off.push(acc);
    }
    off
}

/// For the dart arriving at `w` from its `back`-th neighbour, the index of
/// the next neighbour of `w` in rotation order.
fn successor_table(h: &SimpleGraph, rotation: &Rotation) -> Vec<usize> {
    let darts = dart_offsets(h);
    let mut next = vec![0; *darts.last().unwrap()];
    for (w, order) in rotation.iter().enumerate() {
        for (p, &x) in order.iter().enumerate() {
            let y = order[(p + 1) % order.len()];
            next[darts[w] + position(&h.adjacency[w], x)] = position(&h.adjacency[w], y);
        }
    }
    next
}

/// All cyclic orders of `items`, with the first item fixed in front.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 2 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest: Vec<usize> = items[1..].to_vec();
    permute(&mut rest, 0, &mut |p| {
        let mut order = Vec::with_capacity(items.len());
        order.push(items[0]);
        order.extend_from_slice(p);
        out.push(order);
    });
    out
}

fn permute(xs: &mut Vec<usize>, k: usize, emit: &mut dyn FnMut(&[usize])) {
    if k == xs.len() {
        emit(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, emit);
        xs.swap(k, i);
    }
}

/// Induced subgraph on `vertices` (sorted), relabelled to `0..len`.
fn induced(h: &SimpleGraph, vertices: &[usize]) -> SimpleGraph {
    let id = |v: usize| vertices.binary_search(&v).expect("vertex of component");
    SimpleGraph::new(
        vertices.len(),
        vertices.iter().flat_map(|&a| {
            h.adjacency[a]
                .iter()
                .filter(move |&&b| a < b)
                .map(move |&b| (id(a), id(b)))
        }),
    )
}

fn check_budget(h: &SimpleGraph, budget: u64) -> Result<Vec<SimpleGraph>> {
    let comps: Vec<SimpleGraph> = h.components().iter().map(|c| induced(h, c)).collect();
    let size = comps
        .iter()
        .map(SimpleGraph::rotation_space)
        .fold(0u128, |a, b| a.saturating_add(b));
    if size > budget as u128 {
        return Err(Error::BudgetExceeded { size, budget });
    }
    Ok(comps)
}

/// Runs `accept` on the faces of every rotation system of a connected graph
/// until it returns true.
fn search_rotations(h: &SimpleGraph, mut accept: impl FnMut(&SimpleGraph, &Rotation) -> bool) -> bool {
    let choices: Vec<Vec<Vec<usize>>> = h.adjacency.iter().map(|ns| cyclic_orders(ns)).collect();
    let mut pick = vec![0usize; h.vertex_count];
    let mut rotation: Rotation = choices.iter().map(|c| c[0].clone()).collect();
    loop {
        if accept(h, &rotation) {
            return true;
        }
        // odometer step
        let mut v = 0;
        loop {
            if v == h.vertex_count {
                return false;
            }
            pick[v] += 1;
            if pick[v] < choices[v].len() {
                rotation[v] = choices[v][pick[v]].clone();
                break;
            }
            pick[v] = 0;
            rotation[v] = choices[v][0].clone();
            v += 1;
        }
    }
}

fn face_count(h: &SimpleGraph, rotation: &Rotation) -> usize {
    trace_faces(h, rotation).len()
}

/// Exhaustive planarity test; fails if the rotation search space exceeds
/// `budget`.
pub fn oracle_is_planar(h: &SimpleGraph, budget: u64) -> Result<bool> {
    let comps = check_budget(h, budget)?;
    Ok(comps.iter().all(|c| {
        if c.edge_count() == 0 {
            return true;
        }
        let target = c.edge_count() + 2 - c.vertex_count;
        search_rotations(c, |c, rot| face_count(c, rot) == target)
    }))
}

/// Outerplanarity as planarity of the graph with an added apex vertex.
pub fn oracle_is_outerplanar_apex(h: &SimpleGraph, budget: u64) -> Result<bool> {
    oracle_is_planar(&h.with_apex(), budget)
}

/// Outerplanarity by searching the rotation systems of `h` itself for a
/// spherical embedding with one face touching every vertex, which is exactly
/// where the apex of [`oracle_is_outerplanar_apex`] can be inserted. Apex
/// and face criteria decide the same predicate; this one avoids the factorial
/// blow-up at the apex.
pub fn oracle_is_outerplanar(h: &SimpleGraph, budget: u64) -> Result<bool> {
    let comps = check_budget(h, budget)?;
    Ok(comps.iter().all(|c| {
        if c.edge_count() == 0 {
            return true;
        }
        let target = c.edge_count() + 2 - c.vertex_count;
        let mut on_face = vec![false; c.vertex_count];
        search_rotations(c, |c, rot| {
            let faces = trace_faces(c, rot);
            faces.len() == target
                && faces.iter().any(|face| {
                    on_face.iter_mut().for_each(|x| *x = false);
                    face.iter().for_each(|&(t, _)| on_face[t] = true);
                    on_face.iter().all(|&x| x)
                })
        })
    }))
}
