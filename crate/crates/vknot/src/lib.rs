//! File formats, the example catalog and the `vknot` command-line front end.

pub mod catalog;
pub mod cli;
pub mod move_syntax;
pub mod surface_file;
