//! Exact workbench for L-algebras and triplicial algebras.
//!
//! The crate implements, over exact rational arithmetic:
//!
//! - the free L-algebra on one generator, modeled on lattice-path words over
//!   {+1, -2}, with its two products, involution, canonical decomposition,
//!   binary-tree codec and graded arithmetic ([`words`]);
//! - generic coassociative-coproduct machinery for presented algebras
//!   (nonunital infinitesimal relation), primitive subspaces and the
//!   left/right projector idempotents ([`bialg`]);
//! - free algebras on n binary products over colored planar binary trees,
//!   operadic ideal spans and quotient dimensions, and the order-3 action
//!   on binary operations ([`freemag`]);
//! - everything triplicial: even trees, the free triplicial algebra and its
//!   involution, the tensor presentation over words, the dual with its
//!   triangular-number dimensions, marked set partitions, and the
//!   convolution shift operators ([`trip`]);
//! - the three-term chain complex of the free L-algebra with exact homology
//!   ranks ([`homology`]);
//! - truncated exact power series with composition and reversion, verifying
//!   the generating-function identities that tie all the counts together
//!   ([`series`]);
//! - weighted directed graphs as entangled pairs of co-operations, with the
//!   induced convolution algebra ([`graphs`]).
//!
//! The `examples/` directory demonstrates each capability; `verify` bundles
//! the whole battery into machine-readable reports, exposed by the small
//! CLI in `src/main.rs`.

pub mod bialg;
pub mod cli;
pub mod exact;
pub mod freemag;
pub mod graphs;
pub mod homology;
pub mod report;
pub mod series;
pub mod trip;
pub mod verify;
pub mod words;
