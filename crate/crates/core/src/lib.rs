//! Motzkin paths, labeled full binary (Motzkin) trees, and bijections between
//! pattern-restricted Motzkin path classes.
//!
//! A Motzkin path is read as a Dyck path with a flat-step count on every
//! vertex; under the preorder correspondence those counts become vertex labels
//! of a full binary tree. The bijections in [`bijections`] each come in a
//! recursive form (first-return rewriting on the path) and an explicit form
//! (token moves on the tree), and [`verify`] checks both against each other
//! and against the statistic identities they transport.

pub mod bijections;
pub mod enumerate;
pub mod paths;
pub mod trees;
pub mod verify;

pub use bijections::{Bijection, BijectionError, BijectionId, BijectionRegistry, Mode};
pub use enumerate::{all_avoiding, all_paths, count_avoiding, motzkin_number, ClassSpec};
pub use paths::{MotzkinPath, PathError, PathStatistics, Pattern, Step};
pub use trees::{MotzkinTree, TreeError, VertexRef};
pub use verify::{CheckId, Harness, VerificationReport};
