//! Exact homology of the three-term chain complex on the free L-algebra:
//! the complex is exact except in chain level 1, degree 1.
//!
//! ```bash
//! cargo run --example homology_table
//! ```

use loperad::homology::{homology_dims, ChainDegree};

fn main() {
    println!("degree | dim C3 | dim C2 | dim C1 | H3 | H2 | H1 | d^2 = 0");
    for n in 1..=5 {
        let cd = ChainDegree::new(n);
        let (h1, h2, h3) = cd.homology();
        println!(
            "{n:>6} | {:>6} | {:>6} | {:>6} | {h3:>2} | {h2:>2} | {h1:>2} | {}",
            cd.c3.len(),
            cd.c2.len(),
            cd.c1.len(),
            cd.d_squared_is_zero(),
        );
    }

    let dims = homology_dims(5);
    assert_eq!(dims[0], (1, 0, 0));
    assert!(dims[1..].iter().all(|&d| d == (0, 0, 0)));
    println!("\nhomology concentrated in level 1, degree 1: the complex is exact");
}
