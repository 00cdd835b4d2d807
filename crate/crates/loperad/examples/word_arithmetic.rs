//! The two graded additions and the substitution product on words, the
//! canonical decomposition, and the involution.
//!
//! ```bash
//! cargo run --example word_arithmetic
//! ```

use loperad::words::{enumerate_words, LWord};

fn main() {
    let one = LWord::generator();
    let succ = one.succ(&one);
    let prec = one.prec(&one);
    println!("1 > 1 = {succ}");
    println!("1 < 1 = {prec}");

    // the entanglement law as a word identity
    let lhs = one.succ(&one).prec(&one);
    let rhs = one.succ(&one.prec(&one));
    println!("(1 > 1) < 1 = {lhs} = 1 > (1 < 1) = {rhs}");
    assert_eq!(lhs, rhs);

    // canonical decomposition prefers the succ-outermost split
    println!("decompose({lhs}) = {:?}", lhs.decompose());

    // substitution multiplies degrees
    let w = LWord::parse("1112").unwrap();
    for r in enumerate_words(2) {
        let product = w.ltimes(&r);
        println!("{w} ltimes {r} = {product}  (degree {})", product.degree());
        assert_eq!(product, r.prec(&r));
    }

    // the involution swaps the two additions
    for w in enumerate_words(3) {
        let d = w.involution();
        assert_eq!(d.involution(), w);
        println!("{w}^+ = {d}");
    }
}
