//! Command-line front end for `mulat-core`, plus the cover-file, DOT and
//! JSON formats it reads and writes.

pub mod cli;
pub mod formats;
