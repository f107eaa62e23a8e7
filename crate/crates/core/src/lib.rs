//! Combinatorics of disconnected character degree graphs.
//!
//! A character degree graph has the primes dividing the irreducible
//! character degrees of a finite group as vertices, with `p -- q` whenever
//! `p * q` divides some degree. For solvable groups every three vertices
//! contain an adjacent pair (Pálfy's condition), so a disconnected graph is
//! two cliques of sizes `a <= b`, and those sizes obey `b >= 2^a - 1`
//! (Pálfy's inequality).
//!
//! This crate builds graphs from degree sets ([`graph`]), checks both
//! conditions ([`palfy`]), counts how many component-size pairs of a graph
//! of order `n` survive the inequality ([`counting`]), reproduces the
//! reference tables ([`tables`]), and runs batch sweeps over orders and
//! random graphs ([`sweep`]).

pub mod counting;
mod error;
pub mod factor;
pub mod graph;
pub mod palfy;
pub mod sweep;
pub mod tables;

pub use counting::{
    brute_force_c, c_of_n, order_range_for_count, parse_decimal, raw_pair_count, valid_pairs,
    BruteForceConfig, GraphOrder, OrderRange, MAX_ALPHA,
};
pub use error::{Error, Result};
pub use graph::{
    build_graph, complement, connected_components, is_clique, parse_degrees, parse_edge_list,
    ComponentDecomposition, DegreeSet, PrimeGraph,
};
pub use palfy::{
    classify, independent_triple, pair_satisfies_inequality, satisfies_palfy_condition,
    Classification, ComponentPair, ViolationReason,
};
pub use tables::{render, table1, table2, Format, Table1Row, Table2Row};
