//! File formats and the `rerail` command line front end.

pub mod cli;
pub mod format;
