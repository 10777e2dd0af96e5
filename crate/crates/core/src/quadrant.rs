//! Quadrant sets of a cross edge and an index answering their emptiness.
//!
//! For a cross edge `e`, the four quadrants are the cross edges `e'` with
//! `l(e')` strictly above/below `l(e)` and `r(e')` strictly above/below
//! `r(e)`. Edges sharing `l(e)` belong to no quadrant.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ladder::{CrossEdge, GeneralizedLadder};

/// Non-emptiness of the four quadrants around one cross edge.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadrantFlags {
    /// Some edge has larger `l` and smaller `r`.
    pub up_down: bool,
    /// Some edge has larger `l` and larger `r`.
    pub up_up: bool,
    /// Some edge has smaller `l` and larger `r`.
    pub down_up: bool,
    /// Some edge has smaller `l` and smaller `r`.
    pub down_down: bool,
}

impl QuadrantFlags {
    pub fn all(self) -> bool {
        self.up_down && self.up_up && self.down_up && self.down_down
    }

    pub fn any(self) -> bool {
        self.up_down || self.up_up || self.down_up || self.down_down
    }

    /// Flags of the image edge after the corresponding relabeling.
    pub fn conjugate(self, w: crate::ladder::Symmetry) -> QuadrantFlags {
        use crate::ladder::Symmetry::*;
        let QuadrantFlags {
            up_down,
            up_up,
            down_up,
            down_down,
        } = self;
        match w {
            ReverseFirst => QuadrantFlags {
                up_down: down_down,
                up_up: down_up,
                down_up: up_up,
                down_down: up_down,
            },
            ReverseSecond => QuadrantFlags {
                up_down: up_up,
                up_up: up_down,
                down_up: down_down,
                down_down: down_up,
            },
            Swap => QuadrantFlags {
                up_down: down_up,
                up_up,
                down_up: up_down,
                down_down,
            },
        }
    }

    /// Compact `TFTF` rendering in the order up_down, up_up, down_up, down_down.
    pub fn code(self) -> String {
        [self.up_down, self.up_up, self.down_up, self.down_down]
            .iter()
            .map(|&b| if b { 'T' } else { 'F' })
            .collect()
    }
}

const NO_MIN: usize = usize::MAX;
const NO_MAX: usize = 0;

/// Prefix/suffix extrema of `r` over the distinct `l` groups of an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrantIndex {
    distinct_l: Vec<usize>,
    prefix_min: Vec<usize>,
    prefix_max: Vec<usize>,
    suffix_min: Vec<usize>,
    suffix_max: Vec<usize>,
    group_of_edge: Vec<u32>,
}

impl QuadrantIndex {
    pub fn build(g: &GeneralizedLadder) -> QuadrantIndex {
        let cross = g.cross();
        let mut distinct_l = Vec::new();
        let mut group_min = Vec::new();
        let mut group_max = Vec::new();
        let mut group_of_edge = Vec::with_capacity(cross.len());
        for e in cross {
            if distinct_l.last() != Some(&e.l) {
                distinct_l.push(e.l);
                group_min.push(e.r);
                group_max.push(e.r);
            } else {
                // r is increasing within a group
                *group_max.last_mut().unwrap() = e.r;
            }
            group_of_edge.push((distinct_l.len() - 1) as u32);
        }

        let groups = distinct_l.len();
        let mut prefix_min = vec![NO_MIN; groups];
        let mut prefix_max = vec![NO_MAX; groups];
        for p in 1..groups {
            prefix_min[p] = prefix_min[p - 1].min(group_min[p - 1]);
            prefix_max[p] = prefix_max[p - 1].max(group_max[p - 1]);
        }
        let mut suffix_min = vec![NO_MIN; groups];
        let mut suffix_max = vec![NO_MAX; groups];
        for p in (0..groups.saturating_sub(1)).rev() {
            suffix_min[p] = suffix_min[p + 1].min(group_min[p + 1]);
            suffix_max[p] = suffix_max[p + 1].max(group_max[p + 1]);
        }

        QuadrantIndex {
            distinct_l,
            prefix_min,
            prefix_max,
            suffix_min,
            suffix_max,
            group_of_edge,
        }
    }

    pub fn distinct_l(&self) -> &[usize] {
        &self.distinct_l
    }

    /// Group position of the distinct value `l`, if any edge has it.
    pub fn group(&self, l: usize) -> Option<usize> {
        self.distinct_l.binary_search(&l).ok()
    }

    /// Minimum `r` over edges with `l` strictly below group `p`.
    pub fn prefix_min_r(&self, p: usize) -> Option<usize> {
        Some(self.prefix_min[p]).filter(|&x| x != NO_MIN)
    }

    pub fn prefix_max_r(&self, p: usize) -> Option<usize> {
        Some(self.prefix_max[p]).filter(|&x| x != NO_MAX)
    }

    /// Minimum `r` over edges with `l` strictly above group `p`.
    pub fn suffix_min_r(&self, p: usize) -> Option<usize> {
        Some(self.suffix_min[p]).filter(|&x| x != NO_MIN)
    }

    pub fn suffix_max_r(&self, p: usize) -> Option<usize> {
        Some(self.suffix_max[p]).filter(|&x| x != NO_MAX)
    }

    /// Flags of the `i`-th cross edge (in canonical order) in O(1).
    pub fn flags_at(&self, i: usize, e: CrossEdge) -> QuadrantFlags {
        self.flags_in_group(self.group_of_edge[i] as usize, e.r)
    }

    fn flags_in_group(&self, p: usize, r: usize) -> QuadrantFlags {
        QuadrantFlags {
            up_down: self.suffix_min[p] < r,
            up_up: self.suffix_max[p] > r,
            down_up: self.prefix_max[p] > r,
            down_down: self.prefix_min[p] < r,
        }
    }
}

/// Quadrant flags of `e` using a prebuilt index.
pub fn quadrant_flags(g: &GeneralizedLadder, idx: &QuadrantIndex, e: CrossEdge) -> Result<QuadrantFlags> {
    if !g.contains_edge(e) {
        return Err(Error::EdgeNotInInstance(e));
    }
    let p = idx.group(e.l).ok_or(Error::EdgeNotInInstance(e))?;
    Ok(idx.flags_in_group(p, e.r))
}

/// Reference implementation: a direct scan over every cross edge.
pub fn quadrant_flags_naive(g: &GeneralizedLadder, e: CrossEdge) -> Result<QuadrantFlags> {
    if !g.contains_edge(e) {
        return Err(Error::EdgeNotInInstance(e));
    }
    let mut flags = QuadrantFlags::default();
    for f in g.cross() {
        let above = f.l > e.l;
        let below = f.l < e.l;
        flags.up_down |= above && f.r < e.r;
        flags.up_up |= above && f.r > e.r;
        flags.down_up |= below && f.r > e.r;
        flags.down_down |= below && f.r < e.r;
    }
    Ok(flags)
}

/// Representative of each quadrant: the lexicographically smallest member.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QuadrantReps {
    pub up_down: Option<CrossEdge>,
    pub up_up: Option<CrossEdge>,
    pub down_up: Option<CrossEdge>,
    pub down_down: Option<CrossEdge>,
}

pub fn quadrant_representatives(g: &GeneralizedLadder, e: CrossEdge) -> QuadrantReps {
    let mut reps = QuadrantReps::default();
    // cross is sorted, so the first hit in each quadrant is the smallest
    for &f in g.cross() {
        let slot = match (f.l.cmp(&e.l), f.r.cmp(&e.r)) {
            (std::cmp::Ordering::Greater, std::cmp::Ordering::Less) => &mut reps.up_down,
            (std::cmp::Ordering::Greater, std::cmp::Ordering::Greater) => &mut reps.up_up,
            (std::cmp::Ordering::Less, std::cmp::Ordering::Greater) => &mut reps.down_up,
            (std::cmp::Ordering::Less, std::cmp::Ordering::Less) => &mut reps.down_down,
            _ => continue,
        };
        slot.get_or_insert(f);
    }
    reps
}
