//! Exact integer predicates for segment intersection.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Largest coordinate magnitude accepted by the predicates. Differences then
/// fit in 63 bits and cross products in `i128` without overflow.
pub const COORD_LIMIT: i64 = 1 << 61;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn in_range(self) -> bool {
        self.x.abs() <= COORD_LIMIT && self.y.abs() <= COORD_LIMIT
    }
}

/// Sign of the turn `a → b → c`: `Greater` for counter-clockwise.
pub fn orientation(a: Point, b: Point, c: Point) -> Ordering {
    let abx = (b.x - a.x) as i128;
    let aby = (b.y - a.y) as i128;
    let acx = (c.x - a.x) as i128;
    let acy = (c.y - a.y) as i128;
    (abx * acy - aby * acx).cmp(&0)
}

/// `p` lies on the closed segment `[a, b]`, given that the three are
/// collinear.
fn within_box(a: Point, b: Point, p: Point) -> bool {
    a.x.min(b.x) <= p.x && p.x <= a.x.max(b.x) && a.y.min(b.y) <= p.y && p.y <= a.y.max(b.y)
}

pub fn on_segment(a: Point, b: Point, p: Point) -> bool {
    orientation(a, b, p) == Ordering::Equal && within_box(a, b, p)
}

/// How two closed segments meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Contact {
    Disjoint,
    /// A single common point that is an endpoint of at least one segment.
    Touch(Point),
    /// A single common point interior to both segments.
    Cross,
    /// Collinear with a common part of positive length.
    Overlap,
}

/// Classifies the intersection of segments `[a, b]` and `[c, d]`, both of
/// positive length.
pub fn contact(a: Point, b: Point, c: Point, d: Point) -> Contact {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);

    if o1 == Ordering::Equal && o2 == Ordering::Equal {
        // collinear: project onto the dominant axis
        let key = |p: Point| if a.x != b.x { p.x } else { p.y };
        let (s0, s1) = (key(a).min(key(b)), key(a).max(key(b)));
        let (t0, t1) = (key(c).min(key(d)), key(c).max(key(d)));
        let lo = s0.max(t0);
        let hi = s1.min(t1);
        return match lo.cmp(&hi) {
            Ordering::Greater => Contact::Disjoint,
            Ordering::Less => Contact::Overlap,
            Ordering::Equal => {
                let p = [a, b, c, d].into_iter().find(|&p| key(p) == lo).unwrap();
                Contact::Touch(p)
            }
        };
    }

    if o1 != o2 && o3 != o4 {
        if o1 == Ordering::Equal {
            return Contact::Touch(c);
        }
        if o2 == Ordering::Equal {
            return Contact::Touch(d);
        }
        if o3 == Ordering::Equal {
            return Contact::Touch(a);
        }
        if o4 == Ordering::Equal {
            return Contact::Touch(b);
        }
        return Contact::Cross;
    }
    Contact::Disjoint
}
