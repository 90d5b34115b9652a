//! Zero-error codes and capacities for binary channels with order-1 memory.
//!
//! A channel is described by a confusability graph on the four pairs of
//! consecutive input bits `00, 01, 10, 11`. Two words of equal length are
//! distinguishable when, at some position, their two-bit windows are joined
//! by an edge of the graph. The crate provides:
//!
//! - [`model`]: words, pair letters, channel graphs, digraphs and walk sets.
//! - [`search`]: exact maximum codes `M(G, n)`, cliques in graph powers
//!   restricted to a topological Markov type, and symmetric cliques for
//!   Sperner-type problems.
//! - [`construct`]: explicit code families (ministring codes, odd-run codes,
//!   run-length constrained sets) and the maps used in the converse
//!   arguments.
//! - [`capacity`]: roots of characteristic equations, Perron growth rates and
//!   empirical rate series.
//! - [`cli`]: the `zecap` command-line front end.
//!
//! ```
//! use zecap::model::{ChannelGraph, Word};
//!
//! let f = ChannelGraph::alias("F").unwrap();
//! let x: Word = "00".parse().unwrap();
//! let y: Word = "01".parse().unwrap();
//! assert!(zecap::model::distinguishable(&x, &y, &f).unwrap());
//! ```

pub mod capacity;
pub mod cli;
pub mod construct;
pub mod error;
pub mod model;
pub mod search;

pub use error::{Error, Result};
