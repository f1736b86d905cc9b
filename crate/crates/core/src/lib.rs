//! Exact counting of independent sets and kernels of graphs with reduced
//! ordered binary decision diagrams, plus the random-ensemble experiment
//! harness built on top of it.

pub mod bdd;
pub mod cli;
pub mod constraints;
pub mod graph;
pub mod experiment;
pub mod oracle;
pub mod report;

pub use bdd::{Bdd, BddError, BddNode, BddStore, BoolOp, NodeId};
pub use constraints::{ConstraintMode, VarOrder};
pub use graph::{EnsembleKind, Graph, GraphError, RegularStrategy};
