//! Turán numbers of edge blow-ups of trees.
//!
//! The crate bundles everything needed to evaluate and check the extremal
//! theory for `T^{p+1}`, the graph obtained from a tree `T` by replacing every
//! edge with a `K_{p+1}`:
//!
//! * [`graph`], [`canon`], [`graph6`]: bitset graphs, canonical forms, graph6 I/O.
//! * [`tree`]: bipartitions, the parameters `(a, k, A₀, B₀, b)`, vertex splits
//!   and splitting families.
//! * [`construct`]: Turán graphs, almost-regular graphs, the `L`/`H` extremal
//!   constructions, edge blow-ups and the embedding witness into
//!   `ℓP₂ ∨ K(2(p−1)ℓ; p−1)`.
//! * [`formulas`]: `g₁`, `g₂`, `g`, the Chvátal–Hanson bound and the case
//!   dispatch for `ex(n, T^{p+1})`.
//! * [`matching`]: blossom matching, König covers, Gallai–Edmonds.
//! * [`containment`]: subgraph search and forbidden-family checks.
//! * [`search`]: isomorph-free generation of family-free graphs and the
//!   extremal censuses built on it.
//! * [`cli`]: the command-line front end.

pub mod canon;
pub mod cli;
pub mod construct;
pub mod containment;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod search;
pub mod tree;

pub use canon::{canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use graph::Graph;
