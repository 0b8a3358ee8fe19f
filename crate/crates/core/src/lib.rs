//! Mitsch's natural partial order on the monoid of binary relations `B_n`
//! and on the partition monoid `P_n`, the inclusion and refinement orders,
//! their meets, composites and joins, and exhaustive verification sweeps
//! over small universes.

pub mod error;
pub mod lattice_lab;
pub mod partition;
pub mod partition_orders;
pub mod relation;
pub mod relation_orders;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
pub use partition::Partition;
pub use relation::Relation;
pub use report::CheckReport;
pub use suites::{run_suite, SuiteConfig};
