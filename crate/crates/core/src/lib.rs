//! Planarity and outerplanarity of generalized ladder graphs.
//!
//! A generalized `(m, n)`-ladder is a pair of paths `u_1 … u_m` and
//! `v_1 … v_n` plus cross edges `u_l v_r`. Both properties are decided from
//! the four "quadrants" around each cross edge ([`quadrant`]), negative
//! answers come with checkable `K_{3,3}`, `K_{3,2}` or `K_4` subdivisions
//! ([`witness`]), and positive answers with exact integer drawings
//! ([`embedding`]). [`oracle`] is an independent exhaustive checker for small
//! graphs.

pub mod decision;
pub mod embedding;
pub mod error;
pub mod format;
pub mod geometry;
pub mod ladder;
pub mod oracle;
pub mod quadrant;
pub mod random;
pub mod svg;
pub mod witness;

pub use decision::{is_outerplanar, is_planar, planarity_report, DecisionReport, OuterCondition};
pub use embedding::{classify_edges, outerplanar_embedding, planar_embedding, verify_embedding, EdgeClass, Embedding};
pub use error::{Error, Result};
pub use ladder::{fixtures, CrossEdge, GeneralizedLadder, Side, Symmetry, VertexRef};
pub use quadrant::{quadrant_flags, quadrant_flags_naive, QuadrantFlags, QuadrantIndex};
pub use witness::{extract_k33_witness, extract_outerplanar_witness, verify_certificate, SubdivisionCertificate};
