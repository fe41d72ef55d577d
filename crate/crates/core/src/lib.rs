//! Partition statistics (crank, mex, fixed points, parts greater than one),
//! explicit bijections between the even-mex, fixed-point, negative-crank and
//! positive-crank families refined by the number of parts greater than one,
//! and exact truncated q-series checks of the matching generating functions.

pub mod bijections;
pub mod classes;
pub mod enumerate;
pub mod error;
pub mod partition;
pub mod qseries;
pub mod tables;
pub mod verify;

pub use classes::{count_classes, member, ClassTag, CountTable, PartitionClassId};
pub use enumerate::partitions;
pub use error::{Error, Result};
pub use partition::Partition;
