//! Toolkit for the minimum coloring cut problem: given a connected graph
//! whose edges are colored, find a set of colors as small as possible whose
//! removal disconnects the graph.
//!
//! The crate provides the edge-colored graph model and cut primitives
//! ([`graph`]), a variable neighborhood search heuristic with greedy and
//! probabilistic construction ([`solver`]), exact small-instance references
//! ([`exact`]), and an instance file format plus random generator
//! ([`instance`]).

pub mod color_set;
pub mod exact;
pub mod graph;
pub mod instance;
pub mod solver;
pub mod union_find;

pub use color_set::ColorSet;
pub use exact::{brute_force_optimum, global_min_cut, ExactError, ExactResult};
pub use graph::{
    count_components, disconnecting_edges, extract_minimal_cut, is_feasible, validate,
    ColoredGraph, CutError, Edge, InvalidInstance, Solution, Violation,
};
pub use instance::{
    generate_instance, parse_instance, write_instance, GenerateError, GeneratorParams, ParseError,
};
pub use solver::{
    boltzmann_select, fix, generate_initial_solution, local_search, new_solution, shake, solve,
    Mode, RunReport, ShakeOutcome, SolverConfig, SolverError, StopCondition,
};
pub use union_find::DisjointSets;
