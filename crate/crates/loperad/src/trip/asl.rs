//! The tensor presentation of the free triplicial algebra: nonempty tensors
//! of lattice-path words, with
//!
//! ```text
//! x o1 y = x (x) y + x > y,     x o2 y = x (x) y,     x o3 y = x (x) y + x < y,
//! ```
//!
//! where > and < extend the word products through the recursive rules
//!
//! ```text
//! x > (y (x) l) = (x > y) (x) l
//! (x (x) l) > m = -(x > l) > m + x > (l > m) + x (x) (l > m)
//! (l (x) x) < y = l (x) (x < y)
//! l < (m (x) y) = (l < m) < y - l < (m < y) + (l < m) (x) y
//! ```
//!
//! (l, m single words). All three operations are associative and pairwise
//! entangled, and the graded dimensions reproduce the even-tree counts:
//! the two models present the same algebra.

use crate::bialg::LinComb;
use crate::words::{enumerate_words, word_count, LWord};

/// A nonempty tensor of words; degree is the sum of the word degrees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WordTensor(Vec<LWord>);

impl WordTensor {
    pub fn new(factors: Vec<LWord>) -> Self {
        assert!(!factors.is_empty(), "tensors are nonempty");
        WordTensor(factors)
    }

    pub fn single(w: LWord) -> Self {
        WordTensor(vec![w])
    }

    pub fn factors(&self) -> &[LWord] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(LWord::degree).sum()
    }

    pub fn concat(&self, other: &WordTensor) -> WordTensor {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        WordTensor(v)
    }
}

pub type AsLElem = LinComb<WordTensor>;

fn single(w: &LWord) -> AsLElem {
    LinComb::from_key(WordTensor::single(w.clone()))
}

/// Concatenation, extended bilinearly: the middle operation o2.
pub fn op2(x: &AsLElem, y: &AsLElem) -> AsLElem {
    let mut out = LinComb::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            out.add_term(a.concat(b), ca * cb);
        }
    }
    out
}

// x > y on basis tensors, by the recursive extension rules
fn succ_keys(x: &WordTensor, y: &WordTensor) -> AsLElem {
    let xf = x.factors();
    let yf = y.factors();
    if yf.len() >= 2 {
        // x > (y' (x) l) = (x > y') (x) l
        let head = WordTensor::new(yf[..yf.len() - 1].to_vec());
        let last = &yf[yf.len() - 1];
        let inner = succ_keys(x, &head);
        return op2(&inner, &single(last));
    }
    let m = &yf[0];
    if xf.len() == 1 {
        return single(&xf[0].succ(m));
    }
    // (x' (x) l) > m = -(x' > l) > m + x' > (l > m) + x' (x) (l > m)
    let head = WordTensor::new(xf[..xf.len() - 1].to_vec());
    let l = &xf[xf.len() - 1];
    let xl = succ_keys(&head, &WordTensor::single(l.clone()));
    let lm = l.succ(m);
    let mut out = succ_lin(&xl, &single(m)).scaled(&-crate::exact::rat(1));
    out.add(&succ_keys(&head, &WordTensor::single(lm.clone())));
    out.add(&op2(&LinComb::from_key(head), &single(&lm)));
    out
}

fn succ_lin(x: &AsLElem, y: &AsLElem) -> AsLElem {
    let mut out = LinComb::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            out.add_scaled(&succ_keys(a, b), &(ca * cb));
        }
    }
    out
}

// x < y on basis tensors
fn prec_keys(x: &WordTensor, y: &WordTensor) -> AsLElem {
    let xf = x.factors();
    let yf = y.factors();
    if xf.len() >= 2 {
        // (l (x) x') < y = l (x) (x' < y)
        let first = &xf[0];
        let tail = WordTensor::new(xf[1..].to_vec());
        let inner = prec_keys(&tail, y);
        return op2(&single(first), &inner);
    }
    let l = &xf[0];
    if yf.len() == 1 {
        return single(&l.prec(&yf[0]));
    }
    // l < (m (x) y') = (l < m) < y' - l < (m < y') + (l < m) (x) y'
    let m = &yf[0];
    let tail = WordTensor::new(yf[1..].to_vec());
    let lm = l.prec(m);
    let mut out = prec_keys(&WordTensor::single(lm.clone()), &tail);
    let m_tail = prec_keys(&WordTensor::single(m.clone()), &tail);
    out.sub(&prec_lin(&single(l), &m_tail));
    out.add(&op2(&single(&lm), &LinComb::from_key(tail)));
    out
}

fn prec_lin(x: &AsLElem, y: &AsLElem) -> AsLElem {
    let mut out = LinComb::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            out.add_scaled(&prec_keys(a, b), &(ca * cb));
        }
    }
    out
}

/// x o1 y = x (x) y + x > y.
pub fn op1(x: &AsLElem, y: &AsLElem) -> AsLElem {
    let mut out = op2(x, y);
    out.add(&succ_lin(x, y));
    out
}

/// x o3 y = x (x) y + x < y.
pub fn op3(x: &AsLElem, y: &AsLElem) -> AsLElem {
    let mut out = op2(x, y);
    out.add(&prec_lin(x, y));
    out
}

pub fn op(which: usize, x: &AsLElem, y: &AsLElem) -> AsLElem {
    match which {
        0 => op1(x, y),
        1 => op2(x, y),
        2 => op3(x, y),
        other => panic!("unknown operation {other}"),
    }
}

/// Ordered basis of the degree-n component: all tensors of words with
/// degrees summing to n.
pub fn tensor_basis(n: usize) -> Vec<WordTensor> {
    fn go(n: usize, out: &mut Vec<Vec<LWord>>, prefix: &mut Vec<LWord>) {
        if n == 0 {
            if !prefix.is_empty() {
                out.push(prefix.clone());
            }
            return;
        }
        for first in 1..=n {
            for w in enumerate_words(first) {
                prefix.push(w);
                go(n - first, out, prefix);
                prefix.pop();
            }
        }
    }
    let mut raw = Vec::new();
    go(n, &mut raw, &mut Vec::new());
    let mut out: Vec<WordTensor> = raw.into_iter().map(WordTensor::new).collect();
    out.sort();
    out
}

/// Graded dimension: sum over compositions of n of products of word counts.
pub fn graded_dim(n: usize) -> usize {
    // dp[d] = number of tensors of total degree d
    let mut dp = vec![0usize; n + 1];
    dp[0] = 1;
    for d in 1..=n {
        dp[d] = (1..=d).map(|k| word_count(k) * dp[d - k]).sum();
    }
    dp[n]
}
