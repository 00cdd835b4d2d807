//! The three-term chain complex of the free L-algebra on one generator.
//!
//! Since the dual operad has no operations of arity above three, the chain
//! complex stops at length 3:
//!
//! ```text
//! 0 -> K (x) A^3  -d2->  K^2 (x) A^2  -d1->  K (x) A  -> 0
//! ```
//!
//! with d2(1; x, y, z) = (1; x > y, z) - (2; x, y < z), d1(1; x, y) = x < y
//! and d1(2; x, y) = x > y. d^2 = 0 is the entanglement law. The complex is
//! graded by total word degree and each degree is handled independently; the
//! homology is concentrated in chain level 1 and degree 1, which is the
//! Koszulity of the underlying operad, checked here by exact ranks.

use crate::bialg::LinComb;
use crate::exact::RationalMatrix;
use crate::words::{enumerate_words, LWord};
use num::Zero;

/// Basis key of a chain space: a level-2 label and a pair, or a triple.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ChainKey {
    One(LWord),
    Two(u8, LWord, LWord), // label 1 or 2
    Three(LWord, LWord, LWord),
}

/// Ordered bases of the three chain spaces in one total degree.
pub struct ChainDegree {
    pub degree: usize,
    pub c1: Vec<ChainKey>,
    pub c2: Vec<ChainKey>,
    pub c3: Vec<ChainKey>,
}

impl ChainDegree {
    pub fn new(n: usize) -> Self {
        let words: Vec<Vec<LWord>> = (0..=n)
            .map(|d| if d == 0 { Vec::new() } else { enumerate_words(d) })
            .collect();
        let c1 = words[n].iter().cloned().map(ChainKey::One).collect();
        let mut c2 = Vec::new();
        for label in [1u8, 2u8] {
            for a in 1..n {
                for x in &words[a] {
                    for y in &words[n - a] {
                        c2.push(ChainKey::Two(label, x.clone(), y.clone()));
                    }
                }
            }
        }
        let mut c3 = Vec::new();
        for a in 1..n {
            for b in 1..n - a {
                let c = n - a - b;
                for x in &words[a] {
                    for y in &words[b] {
                        for z in &words[c] {
                            c3.push(ChainKey::Three(x.clone(), y.clone(), z.clone()));
                        }
                    }
                }
            }
        }
        ChainDegree { degree: n, c1, c2, c3 }
    }

    /// The differential on a single basis key, one level down.
    pub fn differential(key: &ChainKey) -> LinComb<ChainKey> {
        let mut out = LinComb::zero();
        match key {
            ChainKey::One(_) => {}
            ChainKey::Two(1, x, y) => {
                out.add_term(ChainKey::One(x.prec(y)), crate::exact::rat(1));
            }
            ChainKey::Two(2, x, y) => {
                out.add_term(ChainKey::One(x.succ(y)), crate::exact::rat(1));
            }
            ChainKey::Two(l, _, _) => panic!("bad level-2 label {l}"),
            ChainKey::Three(x, y, z) => {
                out.add_term(
                    ChainKey::Two(1, x.succ(y), z.clone()),
                    crate::exact::rat(1),
                );
                out.add_term(
                    ChainKey::Two(2, x.clone(), y.prec(z)),
                    crate::exact::rat(-1),
                );
            }
        }
        out
    }

    fn matrix(from: &[ChainKey], to: &[ChainKey]) -> RationalMatrix {
        let index: std::collections::BTreeMap<&ChainKey, usize> = to.iter().zip(0..).collect();
        let mut m = RationalMatrix::zeros(to.len(), from.len());
        for (j, k) in from.iter().enumerate() {
            for (key, c) in Self::differential(k).terms() {
                let i = *index.get(key).expect("differential lands in the basis");
                m.set(i, j, c.clone());
            }
        }
        m
    }

    pub fn d1_matrix(&self) -> RationalMatrix {
        Self::matrix(&self.c2, &self.c1)
    }

    pub fn d2_matrix(&self) -> RationalMatrix {
        Self::matrix(&self.c3, &self.c2)
    }

    /// (dim H1, dim H2, dim H3) at this degree, by exact ranks.
    pub fn homology(&self) -> (usize, usize, usize) {
        let d1 = self.d1_matrix();
        let d2 = self.d2_matrix();
        let r1 = d1.rank();
        let r2 = d2.rank();
        let h1 = self.c1.len() - r1;
        let ker_d1 = self.c2.len() - r1;
        let h2 = ker_d1 - r2;
        let h3 = self.c3.len() - r2;
        (h1, h2, h3)
    }

    /// d1 d2 = 0 as exact matrices.
    pub fn d_squared_is_zero(&self) -> bool {
        let prod = self.d1_matrix().mul(&self.d2_matrix());
        (0..prod.rows()).all(|r| (0..prod.cols()).all(|c| prod.get(r, c).is_zero()))
    }
}

/// Homology dimensions (H1, H2, H3) per degree 1..=max_degree.
pub fn homology_dims(max_degree: usize) -> Vec<(usize, usize, usize)> {
    (1..=max_degree)
        .map(|n| ChainDegree::new(n).homology())
        .collect()
}
