//! Even trees: ordered rooted trees in which every node has an even number
//! of children. Size n = half the edge count; there are
//! (1/(2n+1)) C(3n, n) of them: 1, 3, 12, 55, 273, ...
//!
//! Even trees of size >= 1 carry three operations,
//!
//! - `smile` glues two roots (concatenates child lists),
//! - `ne` sets the left operand on the leftmost leaf of the right one,
//! - `nw` sets the right operand on the rightmost leaf of the left one,
//!
//! and these make the graded span of even trees the free algebra with three
//! associative products entangled by (x .i y) .j z = x .i (y .j z) for
//! i <= j, under the binding .1 = ne, .2 = smile, .3 = nw. The derived
//! products x > y = x ne y - x smile y and x < y = x nw y - x smile y
//! satisfy the entanglement law of an L-algebra.

use crate::bialg::{InvolutiveAlgebra, LinComb, OpIdx, PresentedAlgebra, Split};
use serde_json::Value;

/// Ordered tree with an even number of children at every node; an empty
/// child list is a leaf.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EvenTree(Vec<EvenTree>);

/// Operation indices fixing the binding to the three products.
pub const OP_NE: OpIdx = 0;
pub const OP_SMILE: OpIdx = 1;
pub const OP_NW: OpIdx = 2;

impl EvenTree {
    pub fn leaf() -> Self {
        EvenTree(Vec::new())
    }

    /// The generator: one node with two leaf children.
    pub fn cherry() -> Self {
        EvenTree(vec![Self::leaf(), Self::leaf()])
    }

    pub fn new(children: Vec<EvenTree>) -> Self {
        assert!(children.len() % 2 == 0, "odd number of children");
        EvenTree(children)
    }

    pub fn children(&self) -> &[EvenTree] {
        &self.0
    }

    pub fn is_leaf(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> usize {
        self.0.iter().map(|c| 1 + c.edges()).sum()
    }

    /// Size n = edges / 2.
    pub fn size(&self) -> usize {
        self.edges() / 2
    }

    /// Glues the roots: child lists concatenated.
    pub fn smile(&self, s: &EvenTree) -> EvenTree {
        assert!(self.size() >= 1 && s.size() >= 1, "size-0 operand");
        let mut children = self.0.clone();
        children.extend_from_slice(&s.0);
        EvenTree(children)
    }

    /// Sets `self` on the leftmost leaf of `s`.
    pub fn ne(&self, s: &EvenTree) -> EvenTree {
        assert!(self.size() >= 1 && s.size() >= 1, "size-0 operand");
        s.replace_leftmost_leaf(self)
    }

    /// Sets `s` on the rightmost leaf of `self`.
    pub fn nw(&self, s: &EvenTree) -> EvenTree {
        assert!(self.size() >= 1 && s.size() >= 1, "size-0 operand");
        self.replace_rightmost_leaf(s)
    }

    fn replace_leftmost_leaf(&self, t: &EvenTree) -> EvenTree {
        let mut children = self.0.clone();
        let first = &mut children[0];
        *first = if first.is_leaf() {
            t.clone()
        } else {
            first.replace_leftmost_leaf(t)
        };
        EvenTree(children)
    }

    fn replace_rightmost_leaf(&self, t: &EvenTree) -> EvenTree {
        let mut children = self.0.clone();
        let last = children.last_mut().expect("size >= 1 has children");
        *last = if last.is_leaf() {
            t.clone()
        } else {
            last.replace_rightmost_leaf(t)
        };
        EvenTree(children)
    }

    /// Planar mirror: children reversed at every node. This is the
    /// involution reversing the three operations.
    pub fn mirror(&self) -> EvenTree {
        EvenTree(self.0.iter().rev().map(EvenTree::mirror).collect())
    }

    /// Canonical split. Root out-degree > 2 peels the first two children off
    /// as a smile factor; out-degree 2 is the generator, an ne product when
    /// the first child is internal, and an nw product otherwise.
    pub fn decompose(&self) -> EvenSplit {
        let c = &self.0;
        assert!(!c.is_empty(), "cannot decompose a leaf");
        if c.len() > 2 {
            return EvenSplit::Smile(
                EvenTree(c[..2].to_vec()),
                EvenTree(c[2..].to_vec()),
            );
        }
        match (c[0].is_leaf(), c[1].is_leaf()) {
            (true, true) => EvenSplit::Generator,
            (false, _) => EvenSplit::Ne(
                c[0].clone(),
                EvenTree(vec![EvenTree::leaf(), c[1].clone()]),
            ),
            (true, false) => EvenSplit::Nw(EvenTree::cherry(), c[1].clone()),
        }
    }

    /// JSON form: nested arrays, leaf = [].
    pub fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(EvenTree::to_json).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self, String> {
        match v {
            Value::Array(items) => {
                if items.len() % 2 != 0 {
                    return Err(format!("odd out-degree {}", items.len()));
                }
                let children = items
                    .iter()
                    .map(Self::from_json)
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(EvenTree(children))
            }
            other => Err(format!("expected an array, got {other}")),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EvenSplit {
    Generator,
    Smile(EvenTree, EvenTree),
    Ne(EvenTree, EvenTree),
    Nw(EvenTree, EvenTree),
}

impl EvenSplit {
    pub fn reassemble(&self) -> Option<EvenTree> {
        match self {
            EvenSplit::Generator => None,
            EvenSplit::Smile(a, b) => Some(a.smile(b)),
            EvenSplit::Ne(a, b) => Some(a.ne(b)),
            EvenSplit::Nw(a, b) => Some(a.nw(b)),
        }
    }
}

/// All even trees of size n, sorted structurally.
pub fn enumerate_even(n: usize) -> Vec<EvenTree> {
    assert!(n >= 1);
    let mut out = enumerate_with_size(n);
    out.retain(|t| !t.is_leaf());
    out.sort();
    out
}

// trees of exactly this size, size 0 = leaf
fn enumerate_with_size(n: usize) -> Vec<EvenTree> {
    if n == 0 {
        return vec![EvenTree::leaf()];
    }
    let mut out = Vec::new();
    // root with 2k children whose sizes sum to n - k
    for k in 1..=n {
        for forest in forests(2 * k, n - k) {
            out.push(EvenTree(forest));
        }
    }
    out
}

// ordered forests of `slots` trees with total size `budget`
fn forests(slots: usize, budget: usize) -> Vec<Vec<EvenTree>> {
    if slots == 0 {
        return if budget == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=budget {
        for head in enumerate_with_size(first) {
            for mut tail in forests(slots - 1, budget - first) {
                let mut forest = Vec::with_capacity(slots);
                forest.push(head.clone());
                forest.append(&mut tail);
                out.push(forest);
            }
        }
    }
    out
}

/// Closed-form count (1/(2n+1)) C(3n, n).
pub fn even_count(n: usize) -> usize {
    use num::ToPrimitive;
    let c = crate::exact::binomial(3 * n as u64, n as u64);
    (c / num::BigInt::from(2 * n + 1))
        .to_usize()
        .expect("count fits usize")
}

/// The free triplicial algebra on one generator, presented on even trees
/// with operations [ne, smile, nw].
pub struct EvenTripAlgebra;

impl PresentedAlgebra for EvenTripAlgebra {
    type Key = EvenTree;

    fn op_names(&self) -> Vec<&'static str> {
        vec!["ne", "smile", "nw"]
    }

    fn degree(&self, k: &EvenTree) -> usize {
        k.size()
    }

    fn basis(&self, n: usize) -> Vec<EvenTree> {
        enumerate_even(n)
    }

    fn apply(&self, op: OpIdx, a: &EvenTree, b: &EvenTree) -> LinComb<EvenTree> {
        LinComb::from_key(match op {
            OP_NE => a.ne(b),
            OP_SMILE => a.smile(b),
            OP_NW => a.nw(b),
            other => panic!("unknown operation {other}"),
        })
    }

    fn split(&self, k: &EvenTree) -> Split<EvenTree> {
        match k.decompose() {
            EvenSplit::Generator => Split::Generator,
            EvenSplit::Ne(a, b) => Split::Product(OP_NE, a, b),
            EvenSplit::Smile(a, b) => Split::Product(OP_SMILE, a, b),
            EvenSplit::Nw(a, b) => Split::Product(OP_NW, a, b),
        }
    }
}

impl InvolutiveAlgebra for EvenTripAlgebra {
    fn dagger_key(&self, k: &EvenTree) -> EvenTree {
        k.mirror()
    }

    fn dagger_op(&self, op: OpIdx) -> OpIdx {
        match op {
            OP_NE => OP_NW,
            OP_SMILE => OP_SMILE,
            OP_NW => OP_NE,
            other => panic!("unknown operation {other}"),
        }
    }
}

fn bilinear(
    x: &LinComb<EvenTree>,
    y: &LinComb<EvenTree>,
    f: impl Fn(&EvenTree, &EvenTree) -> EvenTree,
) -> LinComb<EvenTree> {
    let mut out = LinComb::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            out.add_term(f(a, b), ca * cb);
        }
    }
    out
}

/// Derived product x > y = x ne y - x smile y.
pub fn derived_succ(x: &LinComb<EvenTree>, y: &LinComb<EvenTree>) -> LinComb<EvenTree> {
    let mut out = bilinear(x, y, |a, b| a.ne(b));
    out.sub(&bilinear(x, y, |a, b| a.smile(b)));
    out
}

/// Derived product x < y = x nw y - x smile y.
pub fn derived_prec(x: &LinComb<EvenTree>, y: &LinComb<EvenTree>) -> LinComb<EvenTree> {
    let mut out = bilinear(x, y, |a, b| a.nw(b));
    out.sub(&bilinear(x, y, |a, b| a.smile(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialg::Bialgebra;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn g() -> EvenTree {
        EvenTree::cherry()
    }

    #[test]
    fn op_examples() {
        let four = EvenTree::new(vec![
            EvenTree::leaf(),
            EvenTree::leaf(),
            EvenTree::leaf(),
            EvenTree::leaf(),
        ]);
        assert_eq!(g().smile(&g()), four);
        assert_eq!(g().ne(&g()), EvenTree::new(vec![g(), EvenTree::leaf()]));
        assert_eq!(g().nw(&g()), EvenTree::new(vec![EvenTree::leaf(), g()]));
        // the three results exhaust size 2
        let mut got = vec![g().smile(&g()), g().ne(&g()), g().nw(&g())];
        got.sort();
        assert_eq!(got, enumerate_even(2));
    }

    #[test]
    fn enumeration_counts() {
        let expected = [1, 3, 12, 55, 273];
        for (i, &c) in expected.iter().enumerate() {
            let n = i + 1;
            let trees = enumerate_even(n);
            assert_eq!(trees.len(), c, "size {n}");
            assert_eq!(even_count(n), c);
            assert!(trees.iter().all(|t| t.size() == n));
        }
        assert_eq!(enumerate_even(1), vec![g()]);
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(g().decompose(), EvenSplit::Generator);
        assert_eq!(g().smile(&g()).decompose(), EvenSplit::Smile(g(), g()));
        assert_eq!(g().ne(&g()).decompose(), EvenSplit::Ne(g(), g()));
        assert_eq!(g().nw(&g()).decompose(), EvenSplit::Nw(g(), g()));
    }

    #[test]
    fn decompose_reassembles() {
        for n in 2..=4 {
            for t in enumerate_even(n) {
                assert_eq!(t.decompose().reassemble().unwrap(), t);
            }
        }
    }

    #[test]
    fn involution_is_mirror_and_reverses_ops() {
        // recursive definition agrees with the structural mirror
        fn recursive_dagger(t: &EvenTree) -> EvenTree {
            match t.decompose() {
                EvenSplit::Generator => t.clone(),
                EvenSplit::Ne(a, b) => recursive_dagger(&b).nw(&recursive_dagger(&a)),
                EvenSplit::Smile(a, b) => recursive_dagger(&b).smile(&recursive_dagger(&a)),
                EvenSplit::Nw(a, b) => recursive_dagger(&b).ne(&recursive_dagger(&a)),
            }
        }
        for n in 1..=4 {
            for t in enumerate_even(n) {
                let m = t.mirror();
                assert_eq!(m, recursive_dagger(&t));
                assert_eq!(m.mirror(), t, "self-inverse");
            }
        }
        // anti-homomorphism laws on pairs
        for a in enumerate_even(1).iter().chain(&enumerate_even(2)) {
            for b in enumerate_even(1).iter().chain(&enumerate_even(2)) {
                assert_eq!(a.ne(b).mirror(), b.mirror().nw(&a.mirror()));
                assert_eq!(a.nw(b).mirror(), b.mirror().ne(&a.mirror()));
                assert_eq!(a.smile(b).mirror(), b.mirror().smile(&a.mirror()));
            }
        }
    }

    fn apply_op(op: OpIdx, a: &EvenTree, b: &EvenTree) -> EvenTree {
        match op {
            OP_NE => a.ne(b),
            OP_SMILE => a.smile(b),
            OP_NW => a.nw(b),
            _ => unreachable!(),
        }
    }

    #[test]
    fn triplicial_axioms_exhaustive_small() {
        let small: Vec<EvenTree> = (1..=2).flat_map(enumerate_even).collect();
        for i in 0..3 {
            for j in i..3 {
                for x in &small {
                    for y in &small {
                        for z in &small {
                            assert_eq!(
                                apply_op(j, &apply_op(i, x, y), z),
                                apply_op(i, x, &apply_op(j, y, z)),
                                "axiom ({i},{j})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn triplicial_axioms_random_larger() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pool: Vec<EvenTree> = (1..=4).flat_map(enumerate_even).collect();
        for _ in 0..200 {
            let x = pool.choose(&mut rng).unwrap();
            let y = pool.choose(&mut rng).unwrap();
            let z = pool.choose(&mut rng).unwrap();
            for i in 0..3 {
                for j in i..3 {
                    assert_eq!(
                        apply_op(j, &apply_op(i, x, y), z),
                        apply_op(i, x, &apply_op(j, y, z))
                    );
                }
            }
        }
    }

    #[test]
    fn derived_l_structure() {
        let gg = LinComb::from_key(g());
        // G > G = ne - smile
        let s = derived_succ(&gg, &gg);
        assert_eq!(s.coeff(&g().ne(&g())), crate::exact::rat(1));
        assert_eq!(s.coeff(&g().smile(&g())), crate::exact::rat(-1));
        // entanglement of the derived products on generators
        let lhs = derived_prec(&derived_succ(&gg, &gg), &gg);
        let rhs = derived_succ(&gg, &derived_prec(&gg, &gg));
        assert_eq!(lhs, rhs);
        // the derived product of primitives is primitive
        let h = Bialgebra::new(EvenTripAlgebra);
        assert!(h.coproduct(&s).is_zero());
    }

    #[test]
    fn quotient_dims_match_enumeration() {
        use crate::freemag::{quotient_dim, trip_relations};
        for n in 1..=4 {
            assert_eq!(quotient_dim(3, &trip_relations(), n), even_count(n));
        }
    }

    #[test]
    fn json_roundtrip() {
        let t = g().ne(&g().smile(&g()));
        let v = t.to_json();
        assert_eq!(EvenTree::from_json(&v).unwrap(), t);
        let odd = serde_json::json!([[], [], []]);
        assert!(EvenTree::from_json(&odd).is_err());
    }
}
