//! Modular representation theory of the Brauer algebra `B_n(δ)` over the
//! complex field, for integer `δ`.
//!
//! The crate computes blocks, decomposition numbers, the restriction
//! structure of simple modules, and explicit matrix representations of
//! simple modules on δ-restricted walk bases.  An independent brute-force
//! diagram-algebra oracle ([`oracle`]) provides exact ground truth for all
//! of it.
//!
//! The main pieces:
//!
//! * [`partition`]: partitions, the Young graph, hook/content data and
//!   King polynomials in factored form.
//! * [`geometry`]: the embedding of the Young graph into `R^N`, degree of
//!   singularity, δ-regularity, the restricted set `A_δ`, and walk
//!   enumeration.
//! * [`weight`]: weight diagrams, readings back to partitions, blocks and
//!   the partial order.
//! * [`cap`]: cap diagrams with curls and chambers, and decomposition
//!   numbers.
//! * [`restriction`]: restriction/induction of standard modules and the
//!   Loewy structure of restricted simple modules.
//! * [`leduc_ram`]: generic walk-basis matrices over exact rational
//!   functions, specialisation at `u = δ`, and truncation to δ-restricted
//!   walks.
//! * [`oracle`]: the diagram algebra itself, cell modules, Gram matrices
//!   and exact ranks over the rationals.
//!
//! See the crate examples for runnable entry points into each capability,
//! and the `brauer` binary for the command-line front end.

pub mod cap;
pub mod cli;
pub mod geometry;
pub mod leduc_ram;
pub mod oracle;
pub mod partition;
pub mod ratfun;
pub mod render;
pub mod restriction;
pub mod weight;

pub use cap::CapDiagram;
pub use geometry::{EmbeddedPoint, Walk};
pub use partition::{KingPolynomial, Partition};
pub use weight::WeightDiagram;
