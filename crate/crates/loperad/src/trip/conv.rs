//! Convolution algebra of graded endomorphisms of the truncated free
//! triplicial algebra, and the shift operators
//!
//! ```text
//! beta_i(f) = id conv_i f,      gamma_i(f) = f conv_i id,
//! ```
//!
//! where f conv_i g = (.i) (f (x) g) delta. The convolution products make
//! the endomorphism space a triplicial algebra again, so the shifts commute
//! as beta_i gamma_j = gamma_j beta_i for i <= j. Endomorphisms are stored
//! as one matrix per degree on the even-tree basis; the coproduct output at
//! degree n only involves lower degrees, so the truncation is consistent.

use super::even::{enumerate_even, EvenTree, EvenTripAlgebra};
use crate::bialg::{Bialgebra, LinComb, OpIdx};
use crate::exact::{rat, RationalMatrix};
use num::Zero;
use rand::Rng;

/// Degree-preserving endomorphism of the even-tree span, truncated at
/// `max_degree`: one square matrix per degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedEndo {
    pub blocks: Vec<RationalMatrix>, // blocks[d-1] acts on degree d
}

pub struct ConvolutionCtx {
    h: Bialgebra<EvenTripAlgebra>,
    bases: Vec<Vec<EvenTree>>, // bases[d-1] = degree-d basis
}

impl ConvolutionCtx {
    pub fn new(max_degree: usize) -> Self {
        ConvolutionCtx {
            h: Bialgebra::new(EvenTripAlgebra),
            bases: (1..=max_degree).map(enumerate_even).collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.bases.len()
    }

    pub fn bialgebra(&self) -> &Bialgebra<EvenTripAlgebra> {
        &self.h
    }

    pub fn basis(&self, d: usize) -> &[EvenTree] {
        &self.bases[d - 1]
    }

    pub fn zero_endo(&self) -> GradedEndo {
        GradedEndo {
            blocks: self
                .bases
                .iter()
                .map(|b| RationalMatrix::zeros(b.len(), b.len()))
                .collect(),
        }
    }

    pub fn identity_endo(&self) -> GradedEndo {
        GradedEndo {
            blocks: self
                .bases
                .iter()
                .map(|b| RationalMatrix::identity(b.len()))
                .collect(),
        }
    }

    /// Projector onto the degree-k component.
    pub fn projector(&self, k: usize) -> GradedEndo {
        let mut e = self.zero_endo();
        e.blocks[k - 1] = RationalMatrix::identity(self.bases[k - 1].len());
        e
    }

    pub fn random_endo(&self, rng: &mut impl Rng) -> GradedEndo {
        GradedEndo {
            blocks: self
                .bases
                .iter()
                .map(|b| {
                    let n = b.len();
                    let mut m = RationalMatrix::zeros(n, n);
                    for r in 0..n {
                        for c in 0..n {
                            m.set(r, c, rat(rng.gen_range(-2..=2)));
                        }
                    }
                    m
                })
                .collect(),
        }
    }

    /// Applies an endomorphism to a basis key.
    fn apply_key(&self, f: &GradedEndo, t: &EvenTree) -> LinComb<EvenTree> {
        let d = t.size();
        let basis = self.basis(d);
        let j = basis.binary_search(t).expect("key in basis");
        let block = &f.blocks[d - 1];
        let mut out = LinComb::zero();
        for (i, key) in basis.iter().enumerate() {
            let c = block.get(i, j);
            if !c.is_zero() {
                out.add_term(key.clone(), c.clone());
            }
        }
        out
    }

    pub fn apply(&self, f: &GradedEndo, x: &LinComb<EvenTree>) -> LinComb<EvenTree> {
        let mut out = LinComb::zero();
        for (k, c) in x.terms() {
            out.add_scaled(&self.apply_key(f, k), c);
        }
        out
    }

    /// f conv_op g = (.op) (f (x) g) delta. Kills degree 1 (the coproduct
    /// vanishes on the generator) and preserves every degree.
    pub fn convolve(&self, op: OpIdx, f: &GradedEndo, g: &GradedEndo) -> GradedEndo {
        let mut out = self.zero_endo();
        for d in 1..=self.max_degree() {
            let basis = self.basis(d).to_vec();
            let mut m = RationalMatrix::zeros(basis.len(), basis.len());
            for (j, t) in basis.iter().enumerate() {
                let mut val: LinComb<EvenTree> = LinComb::zero();
                for ((a, b), c) in self.h.coproduct_key(t).terms() {
                    let fa = self.apply_key(f, a);
                    let gb = self.apply_key(g, b);
                    val.add_scaled(&self.h.mul(op, &fa, &gb), c);
                }
                for (key, c) in val.terms() {
                    let i = basis.binary_search(key).expect("degree preserved");
                    let cur = m.get(i, j).clone();
                    m.set(i, j, cur + c);
                }
            }
            out.blocks[d - 1] = m;
        }
        out
    }

    /// beta_op(f) = id conv_op f.
    pub fn beta(&self, op: OpIdx, f: &GradedEndo) -> GradedEndo {
        self.convolve(op, &self.identity_endo(), f)
    }

    /// gamma_op(f) = f conv_op id.
    pub fn gamma(&self, op: OpIdx, f: &GradedEndo) -> GradedEndo {
        self.convolve(op, f, &self.identity_endo())
    }
}
