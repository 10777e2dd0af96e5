//! Planarity and outerplanarity decisions from quadrant emptiness.
//!
//! A generalized ladder is planar iff every cross edge has at least one empty
//! quadrant. It is outerplanar iff no edge has an occupied up-up or down-down
//! quadrant (clause i), or no edge has an occupied up-down or down-up
//! quadrant (clause ii).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ladder::{CrossEdge, GeneralizedLadder};
use crate::quadrant::{quadrant_flags_naive, quadrant_representatives, QuadrantFlags, QuadrantIndex};

/// The clause of the outerplanarity characterization that holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OuterCondition {
    /// Every edge has empty up-up and down-down quadrants.
    I,
    /// Every edge has empty up-down and down-up quadrants.
    II,
}

impl fmt::Display for OuterCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OuterCondition::I => "i",
            OuterCondition::II => "ii",
        })
    }
}

/// An edge breaking a condition, with a member of the offending quadrant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub edge: CrossEdge,
    pub via: CrossEdge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// Smallest edge with all four quadrants occupied.
    Planarity(CrossEdge),
    /// Smallest violator of each outerplanarity clause.
    Outerplanarity { clause_i: Violation, clause_ii: Violation },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionReport {
    pub verdict: bool,
    pub witness: Option<Witness>,
    pub outerplanar_condition: Option<OuterCondition>,
    pub per_edge_flags: Option<Vec<(CrossEdge, QuadrantFlags)>>,
}

impl DecisionReport {
    /// Witness edge of a negative planarity report.
    pub fn witness_edge(&self) -> Option<CrossEdge> {
        match self.witness {
            Some(Witness::Planarity(e)) => Some(e),
            _ => None,
        }
    }
}

fn first_nonplanar_edge(g: &GeneralizedLadder, idx: &QuadrantIndex) -> Option<CrossEdge> {
    g.cross()
        .iter()
        .enumerate()
        .find(|&(i, &e)| idx.flags_at(i, e).all())
        .map(|(_, &e)| e)
}

pub fn is_planar(g: &GeneralizedLadder) -> DecisionReport {
    let idx = QuadrantIndex::build(g);
    is_planar_indexed(g, &idx)
}

pub fn is_planar_indexed(g: &GeneralizedLadder, idx: &QuadrantIndex) -> DecisionReport {
    let witness = first_nonplanar_edge(g, idx);
    DecisionReport {
        verdict: witness.is_none(),
        witness: witness.map(Witness::Planarity),
        outerplanar_condition: None,
        per_edge_flags: None,
    }
}

/// Quadratic reference decision, kept for benchmarking and cross-checks.
pub fn is_planar_naive(g: &GeneralizedLadder) -> DecisionReport {
    let witness = g
        .cross()
        .iter()
        .copied()
        .find(|&e| quadrant_flags_naive(g, e).expect("edge of g").all());
    DecisionReport {
        verdict: witness.is_none(),
        witness: witness.map(Witness::Planarity),
        outerplanar_condition: None,
        per_edge_flags: None,
    }
}

/// [`is_planar`] with the flags of every cross edge attached.
pub fn planarity_report(g: &GeneralizedLadder) -> DecisionReport {
    let idx = QuadrantIndex::build(g);
    let flags: Vec<(CrossEdge, QuadrantFlags)> = g
        .cross()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, idx.flags_at(i, e)))
        .collect();
    let witness = flags.iter().find(|(_, f)| f.all()).map(|&(e, _)| e);
    DecisionReport {
        verdict: witness.is_none(),
        witness: witness.map(Witness::Planarity),
        outerplanar_condition: None,
        per_edge_flags: Some(flags),
    }
}

/// [`planarity_report`] computed with the quadratic per-edge scan; never
/// stops early, so its cost depends only on the number of cross edges.
pub fn planarity_report_naive(g: &GeneralizedLadder) -> DecisionReport {
    let flags: Vec<(CrossEdge, QuadrantFlags)> = g
        .cross()
        .iter()
        .map(|&e| (e, quadrant_flags_naive(g, e).expect("edge of g")))
        .collect();
    let witness = flags.iter().find(|(_, f)| f.all()).map(|&(e, _)| e);
    DecisionReport {
        verdict: witness.is_none(),
        witness: witness.map(Witness::Planarity),
        outerplanar_condition: None,
        per_edge_flags: Some(flags),
    }
}

fn violates_clause_i(f: QuadrantFlags) -> bool {
    f.up_up || f.down_down
}

fn violates_clause_ii(f: QuadrantFlags) -> bool {
    f.up_down || f.down_up
}

pub fn is_outerplanar(g: &GeneralizedLadder) -> DecisionReport {
    let idx = QuadrantIndex::build(g);
    let mut first_i = None;
    let mut first_ii = None;
    for (i, &e) in g.cross().iter().enumerate() {
        let f = idx.flags_at(i, e);
        if first_i.is_none() && violates_clause_i(f) {
            first_i = Some(e);
        }
        if first_ii.is_none() && violates_clause_ii(f) {
            first_ii = Some(e);
        }
        if first_i.is_some() && first_ii.is_some() {
            break;
        }
    }
    match (first_i, first_ii) {
        (None, _) => DecisionReport {
            verdict: true,
            witness: None,
            outerplanar_condition: Some(OuterCondition::I),
            per_edge_flags: None,
        },
        (Some(_), None) => DecisionReport {
            verdict: true,
            witness: None,
            outerplanar_condition: Some(OuterCondition::II),
            per_edge_flags: None,
        },
        (Some(ei), Some(eii)) => {
            let ri = quadrant_representatives(g, ei);
            let rii = quadrant_representatives(g, eii);
            let clause_i = Violation {
                edge: ei,
                via: ri.up_up.or(ri.down_down).expect("clause i violated"),
            };
            let clause_ii = Violation {
                edge: eii,
                via: rii.up_down.or(rii.down_up).expect("clause ii violated"),
            };
            DecisionReport {
                verdict: false,
                witness: Some(Witness::Outerplanarity { clause_i, clause_ii }),
                outerplanar_condition: None,
                per_edge_flags: None,
            }
        }
    }
}

/// Edge satisfying both hypotheses of the `K_{3,2}` construction: one of
/// up-up/down-down and one of up-down/down-up occupied.
pub fn find_k32_edge(g: &GeneralizedLadder) -> Option<CrossEdge> {
    let idx = QuadrantIndex::build(g);
    g.cross()
        .iter()
        .enumerate()
        .find(|&(i, &e)| {
            let f = idx.flags_at(i, e);
            violates_clause_i(f) && violates_clause_ii(f)
        })
        .map(|(_, &e)| e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::fixtures::*;

    #[test]
    fn planarity_examples() {
        assert!(is_planar(&fig1()).verdict);
        let r = is_planar(&k33());
        assert!(!r.verdict);
        assert_eq!(r.witness_edge(), Some(CrossEdge::new(2, 2)));
        assert!(is_planar(&k4()).verdict);
        let empty = GeneralizedLadder::new(4, 2, Vec::<CrossEdge>::new()).unwrap();
        assert!(is_planar(&empty).verdict);
        assert_eq!(is_planar_naive(&k33()), r);
    }

    #[test]
    fn outerplanarity_examples() {
        let r = is_outerplanar(&ladder3());
        assert!(r.verdict);
        assert_eq!(r.outerplanar_condition, Some(OuterCondition::II));

        let r = is_outerplanar(&fan3());
        assert_eq!(r.outerplanar_condition, Some(OuterCondition::I));

        let r = is_outerplanar(&k4());
        assert!(!r.verdict);
        assert_eq!(r.outerplanar_condition, None);
        assert_eq!(
            r.witness,
            Some(Witness::Outerplanarity {
                clause_i: Violation {
                    edge: CrossEdge::new(1, 1),
                    via: CrossEdge::new(2, 2)
                },
                clause_ii: Violation {
                    edge: CrossEdge::new(1, 2),
                    via: CrossEdge::new(2, 1)
                },
            })
        );
    }

    #[test]
    fn fig1_is_not_outerplanar() {
        let g = fig1();
        let r = is_outerplanar(&g);
        assert!(!r.verdict);
        // edge (3, 3) breaks both clauses on its own
        let f = quadrant_flags_naive(&g, CrossEdge::new(3, 3)).unwrap();
        assert!(f.up_up && f.down_up);
        let reps = quadrant_representatives(&g, CrossEdge::new(3, 3));
        assert_eq!(reps.up_up, Some(CrossEdge::new(5, 7)));
        assert!(quadrant_representatives(&g, CrossEdge::new(3, 3)).down_up.is_some());
        // smallest violators are reported
        match r.witness {
            Some(Witness::Outerplanarity { clause_i, clause_ii }) => {
                assert_eq!(clause_i.edge, CrossEdge::new(1, 5));
                assert_eq!(clause_ii.edge, CrossEdge::new(1, 5));
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn trivial_instances_prefer_clause_i() {
        let single = GeneralizedLadder::new(2, 3, [(1, 2)]).unwrap();
        assert_eq!(is_outerplanar(&single).outerplanar_condition, Some(OuterCondition::I));
        let empty = GeneralizedLadder::new(1, 1, Vec::<CrossEdge>::new()).unwrap();
        assert_eq!(is_outerplanar(&empty).outerplanar_condition, Some(OuterCondition::I));
    }

    #[test]
    fn report_carries_flags() {
        let r = planarity_report(&fan3());
        assert!(r.verdict);
        let flags = r.per_edge_flags.unwrap();
        let (_, f) = flags.iter().find(|(e, _)| *e == CrossEdge::new(2, 2)).unwrap();
        assert_eq!(f.code(), "TFTF");

        let single = GeneralizedLadder::new(1, 1, [(1, 1)]).unwrap();
        let r = planarity_report(&single);
        assert!(r.verdict);
        assert!(!r.per_edge_flags.unwrap()[0].1.any());

        let r = planarity_report(&k33());
        assert!(!r.verdict);
        let flags = r.per_edge_flags.unwrap();
        assert!(flags.iter().any(|(e, f)| *e == CrossEdge::new(2, 2) && f.all()));
    }
}
