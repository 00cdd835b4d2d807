//! Enumerate the lattice-path word basis and check the closed-form count.
//!
//! ```bash
//! cargo run --example enumerate_words
//! ```

use loperad::words::{enumerate_words, word_count};

fn main() {
    println!("degree | count | formula (1/n) C(3n-2, 2n-1)");
    for n in 1..=6 {
        let words = enumerate_words(n);
        println!("{n:>6} | {:>5} | {:>5}", words.len(), word_count(n));
        assert_eq!(words.len(), word_count(n));
    }

    println!("\nall words of degree 3, lexicographic:");
    for w in enumerate_words(3) {
        println!("  {w}");
    }

    let w = enumerate_words(4)[10].clone();
    println!("\na degree-4 word: {w} (length {}, degree {})", w.len(), w.degree());
}
