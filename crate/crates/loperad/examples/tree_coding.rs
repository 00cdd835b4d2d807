//! Code rooted planar binary trees as lattice-path words: a leaf becomes
//! "1" and node(a, b) becomes code(a) < code(b). Decoding interprets the
//! canonical decomposition with < as grafting and > as the zero map, so
//! words with a succ split decode to zero.
//!
//! ```bash
//! cargo run --example tree_coding
//! ```

use loperad::words::{enumerate_binary_trees, phi_decode, psi_encode, LWord};

fn main() {
    for p in 0..=4 {
        let trees = enumerate_binary_trees(p);
        println!("{} trees with {p} nodes:", trees.len());
        for t in &trees {
            let w = psi_encode(t);
            assert_eq!(phi_decode(&w).as_ref(), Some(t));
            println!("  {} <- {}", w, t.to_json());
        }
    }

    let zero = LWord::parse("1121").unwrap();
    println!(
        "\n{} has a succ split, so it decodes to zero: {:?}",
        zero,
        phi_decode(&zero)
    );
}
