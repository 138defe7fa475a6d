//! tampkit: task-and-motion planning over sampling streams.
//!
//! The crate couples a PDDL subset (STRIPS + negative preconditions +
//! stratified axioms) with *streams* — conditional generators of continuous
//! values such as poses and trajectories that certify facts about their
//! outputs. Three solvers search that joint space:
//!
//! - `incremental`: evaluate all streams level by level, then plan over
//!   concrete values only (the reference oracle).
//! - `adaptive`: plan over optimistic placeholders bounded by level, then
//!   evaluate only the streams the candidate plan needs, balancing time
//!   between the two phases.
//! - `bilevel`: plan over unbounded optimistic placeholders, bind them by
//!   backtracking search, and on failure inject a precondition that forces
//!   the offending movable to be moved first.
//!
//! Any solver role (task planning, pose sampling, or both at once) can be
//! filled by an external chat-completion model under a verify-and-reprompt
//! loop; the engineered components remain the verifiers. A benchmark
//! harness runs seeded algorithm × domain matrices and a statistics module
//! compares algorithms with exact paired tests.
//!
//! Start with the runnable examples: `cargo run --example plan_blocked`.

pub mod geometry;
pub mod pddl;
pub mod sexpr;

pub use geometry::{Aabb, Payload, Pose2, Scene, Vec2};
