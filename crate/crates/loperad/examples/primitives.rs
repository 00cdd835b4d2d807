//! The coassociative coproduct on word and even-tree algebras, primitive
//! subspaces as exact kernels, and the recursive projectors onto them.
//!
//! ```bash
//! cargo run --example primitives
//! ```

use loperad::bialg::{Bialgebra, Side};
use loperad::trip::even::EvenTripAlgebra;
use loperad::words::{LWord, LWordAlgebra, OP_PREC};

fn main() {
    let words = Bialgebra::new(LWordAlgebra);

    let w = LWord::parse("1112").unwrap();
    println!("coproduct of {w}:");
    for ((a, b), c) in words.coproduct_key(&w).terms() {
        println!("  {c} . {a} (x) {b}");
    }

    println!("\nprimitive dimensions on words (degree: dim):");
    for n in 1..=5 {
        println!("  {n}: {}", words.primitive_dim(n));
    }

    println!("\ndegree-2 primitive basis:");
    for v in words.primitive_basis(2) {
        let terms: Vec<String> = v.terms().map(|(k, c)| format!("{c}.{k}")).collect();
        println!("  {}", terms.join(" + "));
    }

    // the right projector for < sends 1121 to the primitive 1121 - 1112
    let e = words.idempotent_key(OP_PREC, Side::Right, &LWord::parse("1121").unwrap());
    let terms: Vec<String> = e.terms().map(|(k, c)| format!("{c}.{k}")).collect();
    println!("\nprojector image of 1121: {}", terms.join(" + "));
    assert!(words.coproduct(&e).is_zero());
    assert_eq!(words.idempotent(OP_PREC, Side::Right, &e), e);

    // same machinery on even trees; the primitive dimensions reproduce the
    // word counts, the dimension-level shadow of the equivalence between
    // the two categories
    let even = Bialgebra::new(EvenTripAlgebra);
    println!("\nprimitive dimensions on even trees (degree: dim):");
    for n in 1..=4 {
        println!("  {n}: {}", even.primitive_dim(n));
    }

    // a primitive element stays primitive under every projector
    for p in even.primitive_basis(2) {
        for op in 0..3 {
            assert_eq!(even.idempotent(op, Side::Right, &p), p);
        }
    }
    println!("\nprojector laws verified: e idempotent, image primitive");
}
