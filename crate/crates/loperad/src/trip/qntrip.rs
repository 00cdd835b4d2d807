//! The quasi-nilpotent dual of the triplicial operad: three products with
//! the i <= j entanglement laws and all i > j compositions equal to zero.
//! The free algebra lives on elements (omega, [v, xi], theta) — three words
//! around a distinguished generator — and each product is nonzero only when
//! two specific words are empty, in which case the right mid slides into
//! one of the three words. Dimensions are the triangular numbers n(n+1)/2.

use crate::bialg::LinComb;

pub type Sym = u32;

/// Basis element: three generator words around a distinguished generator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QNTripElem {
    pub omega: Vec<Sym>,
    pub mid: Sym,
    pub xi: Vec<Sym>,
    pub theta: Vec<Sym>,
}

impl QNTripElem {
    pub fn generator(v: Sym) -> Self {
        QNTripElem {
            omega: Vec::new(),
            mid: v,
            xi: Vec::new(),
            theta: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.omega.len() + 1 + self.xi.len() + self.theta.len()
    }
}

fn cat(a: &[Sym], v: Sym, b: &[Sym]) -> Vec<Sym> {
    let mut out = Vec::with_capacity(a.len() + 1 + b.len());
    out.extend_from_slice(a);
    out.push(v);
    out.extend_from_slice(b);
    out
}

/// x .1 y: defined when x.xi and x.theta are empty; x's mid slides into the
/// front word.
pub fn op1(x: &QNTripElem, y: &QNTripElem) -> LinComb<QNTripElem> {
    if x.xi.is_empty() && x.theta.is_empty() {
        LinComb::from_key(QNTripElem {
            omega: cat(&x.omega, x.mid, &y.omega),
            mid: y.mid,
            xi: y.xi.clone(),
            theta: y.theta.clone(),
        })
    } else {
        LinComb::zero()
    }
}

/// x .2 y: defined when x.theta and y.omega are empty; y's mid slides into
/// the middle word.
pub fn op2(x: &QNTripElem, y: &QNTripElem) -> LinComb<QNTripElem> {
    if x.theta.is_empty() && y.omega.is_empty() {
        LinComb::from_key(QNTripElem {
            omega: x.omega.clone(),
            mid: x.mid,
            xi: cat(&x.xi, y.mid, &y.xi),
            theta: y.theta.clone(),
        })
    } else {
        LinComb::zero()
    }
}

/// x .3 y: defined when y.omega and y.xi are empty; y's mid slides into the
/// tail word.
pub fn op3(x: &QNTripElem, y: &QNTripElem) -> LinComb<QNTripElem> {
    if y.omega.is_empty() && y.xi.is_empty() {
        LinComb::from_key(QNTripElem {
            omega: x.omega.clone(),
            mid: x.mid,
            xi: x.xi.clone(),
            theta: cat(&x.theta, y.mid, &y.theta),
        })
    } else {
        LinComb::zero()
    }
}

pub fn op(which: usize, x: &QNTripElem, y: &QNTripElem) -> LinComb<QNTripElem> {
    match which {
        0 => op1(x, y),
        1 => op2(x, y),
        2 => op3(x, y),
        other => panic!("unknown operation {other}"),
    }
}

/// One-generator basis at degree n: one element per split of n-1 letters
/// among the three words; n(n+1)/2 of them.
pub fn enumerate_qntrip(n: usize) -> Vec<QNTripElem> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let rest = n - 1;
    for a in 0..=rest {
        for b in 0..=rest - a {
            let c = rest - a - b;
            out.push(QNTripElem {
                omega: vec![0; a],
                mid: 0,
                xi: vec![0; b],
                theta: vec![0; c],
            });
        }
    }
    out.sort();
    out
}
