//! Everything triplicial: even trees and the free algebra with three
//! entangled associative products, its tensor presentation over words, the
//! quasi-nilpotent dual, commutative triplicial algebras on marked set
//! partitions, tensor constructions from involutive associative algebras,
//! and the convolution shift operators.

pub mod asl;
pub mod assoc;
pub mod comtrip;
pub mod conv;
pub mod even;
pub mod lshriek;
pub mod qntrip;

pub use even::{enumerate_even, even_count, EvenTree, EvenTripAlgebra};
