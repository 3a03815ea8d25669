//! File formats, experiment sweeps and the command-line front end for
//! `congestion-core`.

pub mod cli;
pub mod error;
pub mod experiment;
pub mod format;

pub use error::{LabError, LabResult};
pub use format::{
    parse_edge_list, parse_tree, parse_tree_for, serialize_edge_list, serialize_tree,
};
