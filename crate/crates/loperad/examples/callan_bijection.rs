//! Convert between positive integer sequences (odd length, first entry 1,
//! differences in {1, -1, -3, ...}) and lattice-path words, both ways.
//!
//! ```bash
//! cargo run --example callan_bijection
//! ```

use loperad::words::{enumerate_words, omega_to_word, word_to_omega, OmegaWord};

fn main() {
    for entries in [vec![1], vec![1, 2, 3], vec![1, 2, 1], vec![1, 2, 3, 2, 1]] {
        let o = OmegaWord::new(entries).unwrap();
        let w = omega_to_word(&o);
        println!("{o:<12} -> {w}");
        assert_eq!(word_to_omega(&w), o);
    }

    println!("\nall degree-3 words and their sequences:");
    for w in enumerate_words(3) {
        println!("  {w} <-> {}", word_to_omega(&w));
    }

    // malformed sequences are rejected with the failed condition
    let err = OmegaWord::new(vec![1, 3, 1]).unwrap_err();
    println!("\nrejected [1,3,1]: {err}");
}
