//! The quadratic dual of the L-operad, realized on one generator: the
//! four-dimensional space (V + K) (x) V (x) (K + V) with the two products
//!
//! ```text
//! x |- y = [x.left, x.right, y.left all absent] (x.mid, y.mid, y.right)
//! x -| y = [x.right, y.left, y.right all absent] (x.left, x.mid, y.mid)
//! ```
//!
//! where the bracket is 1 or 0. Both products are associative (every
//! double composition on the same side vanishes), the mixed law
//! (x |- y) -| z = x |- (y -| z) holds, and the graded dimensions are
//! 1, 2, 1, 0, ... Pairing these elements with lattice-path words gives an
//! associative product on the tensor product, the exactness engine behind
//! the Koszul-duality checks.

use crate::bialg::LinComb;
use crate::words::LWord;
use std::fmt;

/// Basis element of the one-generator dual algebra: the middle slot is
/// always occupied; the outer slots each hold the generator or nothing.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LShriekElem {
    pub left: bool,
    pub right: bool,
}

impl LShriekElem {
    pub fn generator() -> Self {
        LShriekElem { left: false, right: false }
    }

    pub fn degree(&self) -> usize {
        1 + usize::from(self.left) + usize::from(self.right)
    }

    /// The whole basis: degrees 1, 2, 2, 3.
    pub fn basis() -> Vec<LShriekElem> {
        vec![
            LShriekElem { left: false, right: false },
            LShriekElem { left: true, right: false },
            LShriekElem { left: false, right: true },
            LShriekElem { left: true, right: true },
        ]
    }

    /// Dimension of the degree-n component: 1, 2, 1, then zero.
    pub fn dim(n: usize) -> usize {
        match n {
            1 | 3 => 1,
            2 => 2,
            _ => 0,
        }
    }
}

impl fmt::Display for LShriekElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |b| if b { "e" } else { "-" };
        write!(f, "({},e,{})", s(self.left), s(self.right))
    }
}

/// x |- y: nonzero only when x.left, x.right and y.left are all absent;
/// x's middle moves into the left slot of y.
pub fn vdash(x: &LShriekElem, y: &LShriekElem) -> LinComb<LShriekElem> {
    if !x.left && !x.right && !y.left {
        LinComb::from_key(LShriekElem { left: true, right: y.right })
    } else {
        LinComb::zero()
    }
}

/// x -| y: nonzero only when x.right, y.left and y.right are all absent;
/// y's middle moves into the right slot of x.
pub fn dashv(x: &LShriekElem, y: &LShriekElem) -> LinComb<LShriekElem> {
    if !x.right && !y.left && !y.right {
        LinComb::from_key(LShriekElem { left: x.left, right: true })
    } else {
        LinComb::zero()
    }
}

fn lift(
    f: impl Fn(&LShriekElem, &LShriekElem) -> LinComb<LShriekElem>,
    x: &LinComb<LShriekElem>,
    y: &LinComb<LShriekElem>,
) -> LinComb<LShriekElem> {
    let mut out = LinComb::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            out.add_scaled(&f(a, b), &(ca * cb));
        }
    }
    out
}

pub fn vdash_lin(x: &LinComb<LShriekElem>, y: &LinComb<LShriekElem>) -> LinComb<LShriekElem> {
    lift(vdash, x, y)
}

pub fn dashv_lin(x: &LinComb<LShriekElem>, y: &LinComb<LShriekElem>) -> LinComb<LShriekElem> {
    lift(dashv, x, y)
}

// ---------------------------------------------------------------------------
// the associative product on dual (x) word pairs
// ---------------------------------------------------------------------------

/// Pure tensor of a dual element and a word.
pub type PairedElem = (LShriekElem, LWord);

/// (x (x) a) * (y (x) b) = (x -| y) (x) (a < b) + (x |- y) (x) (a > b),
/// extended bilinearly. Associative.
pub fn paired_product(
    u: &LinComb<PairedElem>,
    v: &LinComb<PairedElem>,
) -> LinComb<PairedElem> {
    let mut out = LinComb::zero();
    for ((x, a), cu) in u.terms() {
        for ((y, b), cv) in v.terms() {
            let c = cu * cv;
            for (m, cm) in dashv(x, y).terms() {
                out.add_term((*m, a.prec(b)), &c * cm);
            }
            for (m, cm) in vdash(x, y).terms() {
                out.add_term((*m, a.succ(b)), &c * cm);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::words::enumerate_words;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn e(left: bool, right: bool) -> LShriekElem {
        LShriekElem { left, right }
    }

    #[test]
    fn product_examples() {
        // (-,e,-) |- (-,e,-) = (e,e,-)
        let g = e(false, false);
        assert_eq!(vdash(&g, &g), LinComb::from_key(e(true, false)));
        // (-,e,e) |- (-,e,-) = 0: the tested right slot is present
        assert!(vdash(&e(false, true), &g).is_zero());
        // (-,e,-) -| (-,e,-) = (-,e,e)
        assert_eq!(dashv(&g, &g), LinComb::from_key(e(false, true)));
    }

    #[test]
    fn graded_dims() {
        let mut by_degree = [0usize; 4];
        for b in LShriekElem::basis() {
            by_degree[b.degree() - 1] += 1;
        }
        assert_eq!(by_degree, [1, 2, 1, 0]);
        for n in 1..=6 {
            assert_eq!(
                LShriekElem::dim(n),
                LShriekElem::basis().iter().filter(|b| b.degree() == n).count()
            );
        }
    }

    #[test]
    fn seven_relations_on_full_basis() {
        let basis = LShriekElem::basis();
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    let xv = LinComb::from_key(*x);
                    let yv = LinComb::from_key(*y);
                    let zv = LinComb::from_key(*z);
                    // entanglement
                    assert_eq!(
                        dashv_lin(&vdash_lin(&xv, &yv), &zv),
                        vdash_lin(&xv, &dashv_lin(&yv, &zv))
                    );
                    // the six vanishing double compositions
                    assert!(vdash_lin(&vdash_lin(&xv, &yv), &zv).is_zero());
                    assert!(vdash_lin(&xv, &vdash_lin(&yv, &zv)).is_zero());
                    assert!(dashv_lin(&dashv_lin(&xv, &yv), &zv).is_zero());
                    assert!(dashv_lin(&xv, &dashv_lin(&yv, &zv)).is_zero());
                    assert!(vdash_lin(&dashv_lin(&xv, &yv), &zv).is_zero());
                    assert!(dashv_lin(&xv, &vdash_lin(&yv, &zv)).is_zero());
                }
            }
        }
    }

    #[test]
    fn paired_product_example() {
        let g = e(false, false);
        let one = LWord::generator();
        let u: LinComb<PairedElem> = LinComb::from_key((g, one.clone()));
        let p = paired_product(&u, &u);
        // (e,e,-) (x) "1121" + (-,e,e) (x) "1112"
        assert_eq!(
            p.coeff(&(e(true, false), LWord::parse("1121").unwrap())),
            rat(1)
        );
        assert_eq!(
            p.coeff(&(e(false, true), LWord::parse("1112").unwrap())),
            rat(1)
        );
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn paired_product_zero_factor() {
        let u: LinComb<PairedElem> = LinComb::from_key((e(false, false), LWord::generator()));
        assert!(paired_product(&LinComb::zero(), &u).is_zero());
    }

    #[test]
    fn paired_product_associative_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let words: Vec<LWord> = (1..=2).flat_map(enumerate_words).collect();
        let basis = LShriekElem::basis();
        let mut random_elem = |rng: &mut ChaCha8Rng| {
            let mut v: LinComb<PairedElem> = LinComb::zero();
            for _ in 0..3 {
                let x = *basis.choose(rng).unwrap();
                let w = words.choose(rng).unwrap().clone();
                let c = rat(rng.gen_range(-3..=3));
                v.add_term((x, w), c);
            }
            v
        };
        for _ in 0..50 {
            let a = random_elem(&mut rng);
            let b = random_elem(&mut rng);
            let c = random_elem(&mut rng);
            assert_eq!(
                paired_product(&paired_product(&a, &b), &c),
                paired_product(&a, &paired_product(&b, &c))
            );
        }
    }
}
