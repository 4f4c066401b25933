//! Library side of the `mccp` command-line driver: per-size wall-clock
//! budgets, dataset runs with derived seeds, and the CSV report writer.
//! The binary in `main.rs` is a thin argument parser over this module.

pub mod bench;
