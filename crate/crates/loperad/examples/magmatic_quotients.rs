//! Quotients of free multi-product algebras by operadic ideals, computed by
//! exact rank: colored binary trees modulo the entanglement relation
//! reproduce the word counts, modulo the six triplicial relations the
//! even-tree counts, and the associative quotient collapses to one
//! dimension per degree. Also the order-3 action on the binary operations.
//!
//! ```bash
//! cargo run --example magmatic_quotients
//! ```

use loperad::freemag::{
    enumerate_colored, ideal_span_dim, l_relation, matrix_order, quotient_dim, tau2_matrix,
    trip_relations, graded_ideal_dims, Relation2,
};
use loperad::trip::even::even_count;
use loperad::words::{word_count, LWordAlgebra, OP_PREC, OP_SUCC};

fn main() {
    println!("two products modulo (x>y)<z = x>(y<z):");
    println!("degree | free dim | ideal | quotient | word count");
    for d in 1..=5 {
        let free = enumerate_colored(2, d).len();
        let ideal = if d >= 3 { ideal_span_dim(2, &l_relation(), d) } else { 0 };
        let q = quotient_dim(2, &l_relation(), d);
        println!("{d:>6} | {free:>8} | {ideal:>5} | {q:>8} | {:>10}", word_count(d));
        assert_eq!(q, word_count(d));
    }

    println!("\nthree products modulo the six entanglement relations:");
    println!("degree | free dim | quotient | even trees");
    for d in 1..=4 {
        let free = enumerate_colored(3, d).len();
        let q = quotient_dim(3, &trip_relations(), d);
        println!("{d:>6} | {free:>8} | {q:>8} | {:>10}", even_count(d));
        assert_eq!(q, even_count(d));
    }

    println!("\nwords modulo succ = prec (the associative collapse):");
    let rel = Relation2::difference(OP_SUCC, OP_PREC);
    let ideal = graded_ideal_dims(&LWordAlgebra, &[], &[rel], 4);
    for d in 1..=4usize {
        let q = word_count(d) - ideal[d - 1];
        println!("  degree {d}: {q}");
        assert_eq!(q, 1);
    }

    println!("\norder of the action on n binary operations:");
    for n in 2..=6 {
        let order = matrix_order(&tau2_matrix(n), 10).unwrap();
        println!("  n = {n}: order {order}");
        assert_eq!(order, 3);
    }
}
