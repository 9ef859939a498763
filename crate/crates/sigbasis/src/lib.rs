//! Text formats, the benchmark harness and the command-line driver for
//! `sigbasis-core`.

pub mod bench;
pub mod cli;
pub mod format;
