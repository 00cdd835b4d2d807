//! Free algebras on n unconstrained binary products: colored planar binary
//! trees, the leaf-splitting coproduct, spans of operadic ideals, quotient
//! dimensions, and the order-3 matrices behind the anticyclic structure.
//!
//! Quotient dimensions are computed without any rewriting machinery: the
//! degree-d component of a two-sided ideal is spanned by all relation
//! instances of degree d together with one-sided products of lower-degree
//! ideal elements with basis trees, and a single rank computation finishes
//! the job.

use crate::bialg::{LinComb, OpIdx, PresentedAlgebra, Split, TensorComb};
use crate::exact::{Rational, RationalMatrix, RowSpace};
use num::One;
use serde_json::{json, Value};

/// Planar binary tree with nodes colored 1..=ncolors. Degree = leaf count.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ColoredTree {
    Leaf,
    Node {
        color: usize,
        left: Box<ColoredTree>,
        right: Box<ColoredTree>,
    },
}

impl ColoredTree {
    pub fn node(color: usize, left: ColoredTree, right: ColoredTree) -> Self {
        ColoredTree::Node {
            color,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            ColoredTree::Leaf => 1,
            ColoredTree::Node { left, right, .. } => left.leaves() + right.leaves(),
        }
    }

    /// Splits between leaf j and leaf j+1 (1-based, 1 <= j < leaves): the
    /// two sides of the path from that gap to the root; the color of the
    /// node where the path ends is dropped.
    pub fn split_at_gap(&self, j: usize) -> (ColoredTree, ColoredTree) {
        match self {
            ColoredTree::Leaf => panic!("no gap in a leaf"),
            ColoredTree::Node { color, left, right } => {
                let nl = left.leaves();
                if j < nl {
                    let (a, b) = left.split_at_gap(j);
                    (a, ColoredTree::node(*color, b, (**right).clone()))
                } else if j == nl {
                    ((**left).clone(), (**right).clone())
                } else {
                    let (a, b) = right.split_at_gap(j - nl);
                    (ColoredTree::node(*color, (**left).clone(), a), b)
                }
            }
        }
    }

    /// JSON form: `"o"` or `{"c": color, "l": .., "r": ..}`.
    pub fn to_json(&self) -> Value {
        match self {
            ColoredTree::Leaf => json!("o"),
            ColoredTree::Node { color, left, right } => {
                json!({"c": color, "l": left.to_json(), "r": right.to_json()})
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, String> {
        match v {
            Value::String(s) if s == "o" => Ok(ColoredTree::Leaf),
            Value::Object(o) => {
                let c = o
                    .get("c")
                    .and_then(Value::as_u64)
                    .ok_or("node without integer \"c\"")? as usize;
                let l = o.get("l").ok_or("node without \"l\"")?;
                let r = o.get("r").ok_or("node without \"r\"")?;
                Ok(ColoredTree::node(
                    c,
                    Self::from_json(l)?,
                    Self::from_json(r)?,
                ))
            }
            other => Err(format!("expected \"o\" or a node object, got {other}")),
        }
    }
}

/// All colored trees with `degree` leaves: Catalan(degree-1) * ncolors^(degree-1).
pub fn enumerate_colored(ncolors: usize, degree: usize) -> Vec<ColoredTree> {
    assert!(ncolors >= 1 && degree >= 1);
    if degree == 1 {
        return vec![ColoredTree::Leaf];
    }
    let mut out = Vec::new();
    for k in 1..degree {
        let lefts = enumerate_colored(ncolors, k);
        let rights = enumerate_colored(ncolors, degree - k);
        for color in 1..=ncolors {
            for l in &lefts {
                for r in &rights {
                    out.push(ColoredTree::node(color, l.clone(), r.clone()));
                }
            }
        }
    }
    out.sort();
    out
}

/// Sum of all gap splits; equals the recursive coproduct defined by the
/// nonunital infinitesimal relation.
pub fn split_coproduct(t: &ColoredTree) -> TensorComb<ColoredTree> {
    let mut out = TensorComb::zero();
    for j in 1..t.leaves() {
        out.add_term(t.split_at_gap(j), Rational::one());
    }
    out
}

/// The free algebra on `ncolors` binary operations, presented on colored
/// trees; operation i-1 grafts with root color i.
pub struct ColoredMagAlgebra {
    pub ncolors: usize,
}

const COLOR_NAMES: [&str; 8] = ["v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"];

impl PresentedAlgebra for ColoredMagAlgebra {
    type Key = ColoredTree;

    fn op_names(&self) -> Vec<&'static str> {
        COLOR_NAMES[..self.ncolors].to_vec()
    }

    fn degree(&self, k: &ColoredTree) -> usize {
        k.leaves()
    }

    fn basis(&self, n: usize) -> Vec<ColoredTree> {
        enumerate_colored(self.ncolors, n)
    }

    fn apply(&self, op: OpIdx, a: &ColoredTree, b: &ColoredTree) -> LinComb<ColoredTree> {
        assert!(op < self.ncolors);
        LinComb::from_key(ColoredTree::node(op + 1, a.clone(), b.clone()))
    }

    fn split(&self, k: &ColoredTree) -> Split<ColoredTree> {
        match k {
            ColoredTree::Leaf => Split::Generator,
            ColoredTree::Node { color, left, right } => {
                Split::Product(color - 1, (**left).clone(), (**right).clone())
            }
        }
    }
}

// ---------------------------------------------------------------------------
// relations and graded ideals
// ---------------------------------------------------------------------------

/// Shape of a degree-3 monomial in three ordered slots.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Bracketing {
    /// `(a .i b) .j c`
    LeftFirst,
    /// `a .i (b .j c)`
    RightFirst,
}

#[derive(Clone, Debug)]
pub struct RelationTerm {
    pub coeff: Rational,
    pub bracketing: Bracketing,
    pub ops: (OpIdx, OpIdx),
}

/// A regular degree-3 relation: a formal combination of bracketed monomials
/// in three ordered slots, no variable permutation.
#[derive(Clone, Debug)]
pub struct Relation3 {
    pub terms: Vec<RelationTerm>,
}

impl Relation3 {
    /// `(x .i y) .j z - x .i (y .j z)`.
    pub fn entanglement(i: OpIdx, j: OpIdx) -> Self {
        Relation3 {
            terms: vec![
                RelationTerm {
                    coeff: Rational::one(),
                    bracketing: Bracketing::LeftFirst,
                    ops: (i, j),
                },
                RelationTerm {
                    coeff: -Rational::one(),
                    bracketing: Bracketing::RightFirst,
                    ops: (i, j),
                },
            ],
        }
    }

    pub fn eval<A: PresentedAlgebra>(
        &self,
        alg: &A,
        x: &A::Key,
        y: &A::Key,
        z: &A::Key,
    ) -> LinComb<A::Key> {
        let mut out = LinComb::zero();
        for t in &self.terms {
            let (i, j) = t.ops;
            let part = match t.bracketing {
                Bracketing::LeftFirst => {
                    let xy = alg.apply(i, x, y);
                    mul_lin(alg, j, &xy, &LinComb::from_key(z.clone()))
                }
                Bracketing::RightFirst => {
                    let yz = alg.apply(j, y, z);
                    mul_lin(alg, i, &LinComb::from_key(x.clone()), &yz)
                }
            };
            out.add_scaled(&part, &t.coeff);
        }
        out
    }
}

/// A degree-2 relation: a formal combination of single products of two slots,
/// e.g. `x > y - x < y`.
#[derive(Clone, Debug)]
pub struct Relation2 {
    pub terms: Vec<(Rational, OpIdx)>,
}

impl Relation2 {
    pub fn difference(i: OpIdx, j: OpIdx) -> Self {
        Relation2 {
            terms: vec![(Rational::one(), i), (-Rational::one(), j)],
        }
    }

    pub fn eval<A: PresentedAlgebra>(&self, alg: &A, x: &A::Key, y: &A::Key) -> LinComb<A::Key> {
        let mut out = LinComb::zero();
        for (c, op) in &self.terms {
            out.add_scaled(&alg.apply(*op, x, y), c);
        }
        out
    }
}

fn mul_lin<A: PresentedAlgebra>(
    alg: &A,
    op: OpIdx,
    x: &LinComb<A::Key>,
    y: &LinComb<A::Key>,
) -> LinComb<A::Key> {
    let mut out = LinComb::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            out.add_scaled(&alg.apply(op, a, b), &(ca * cb));
        }
    }
    out
}

/// The entanglement relation of an L-algebra placed in two colors:
/// color 1 plays the left product, color 2 the right one.
pub fn l_relation() -> Vec<Relation3> {
    vec![Relation3::entanglement(0, 1)]
}

/// The six relations (x .i y) .j z = x .i (y .j z), i <= j, in three colors.
pub fn trip_relations() -> Vec<Relation3> {
    let mut rels = Vec::new();
    for i in 0..3 {
        for j in i..3 {
            rels.push(Relation3::entanglement(i, j));
        }
    }
    rels
}

/// Plain associativity of a single product.
pub fn assoc_relation() -> Vec<Relation3> {
    vec![Relation3::entanglement(0, 0)]
}

/// Degree-by-degree dimensions of the two-sided ideal generated by the given
/// relations, for degrees 1..=max_degree.
///
/// Degree d is spanned by relation instances on basis keys of total degree d
/// plus one-sided products of the (already reduced) lower-degree ideal bases
/// with basis keys; the RowSpace keeps each degree reduced as it is built.
pub fn graded_ideal_dims<A: PresentedAlgebra>(
    alg: &A,
    rel3: &[Relation3],
    rel2: &[Relation2],
    max_degree: usize,
) -> Vec<usize> {
    let bases: Vec<Vec<A::Key>> = (0..=max_degree)
        .map(|d| if d == 0 { Vec::new() } else { alg.basis(d) })
        .collect();
    let mut ideal: Vec<Vec<LinComb<A::Key>>> = vec![Vec::new(); max_degree + 1];
    let mut dims = Vec::new();
    for d in 1..=max_degree {
        let basis = &bases[d];
        let mut span = RowSpace::new(basis.len());
        for rel in rel2 {
            for da in 1..d {
                for a in &bases[da] {
                    for b in &bases[d - da] {
                        span.insert(rel.eval(alg, a, b).to_vec(basis));
                    }
                }
            }
        }
        if d >= 3 {
            for rel in rel3 {
                for da in 1..=d - 2 {
                    for db in 1..=d - da - 1 {
                        let dc = d - da - db;
                        for a in &bases[da] {
                            for b in &bases[db] {
                                for c in &bases[dc] {
                                    span.insert(rel.eval(alg, a, b, c).to_vec(basis));
                                }
                            }
                        }
                    }
                }
            }
        }
        for dlow in 1..d {
            for v in &ideal[dlow] {
                for b in &bases[d - dlow] {
                    let bk = LinComb::from_key(b.clone());
                    for op in 0..alg.op_count() {
                        span.insert(mul_lin(alg, op, v, &bk).to_vec(basis));
                        span.insert(mul_lin(alg, op, &bk, v).to_vec(basis));
                    }
                }
            }
        }
        dims.push(span.rank());
        ideal[d] = span
            .basis()
            .map(|v| LinComb::from_vec(basis, v))
            .collect();
    }
    dims
}

/// Dimension of the degree-d component of the ideal the relations generate
/// in the algebra on `ncolors` free products. Zero below degree 3 for
/// degree-3 relations.
pub fn ideal_span_dim(ncolors: usize, relations: &[Relation3], degree: usize) -> usize {
    let alg = ColoredMagAlgebra { ncolors };
    *graded_ideal_dims(&alg, relations, &[], degree)
        .last()
        .expect("degree >= 1")
}

/// Dimension of the degree-d component of the quotient by the relations.
pub fn quotient_dim(ncolors: usize, relations: &[Relation3], degree: usize) -> usize {
    let alg = ColoredMagAlgebra { ncolors };
    let dims = graded_ideal_dims(&alg, relations, &[], degree);
    alg.basis(degree).len() - dims.last().expect("degree >= 1")
}

// ---------------------------------------------------------------------------
// anticyclic structure on the binary operations
// ---------------------------------------------------------------------------

/// The 2x2 matrix [[0, -1], [1, -1]], of order 3.
pub fn c_matrix() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[0, -1], &[1, -1]])
}

/// The cyclic 3x3 permutation matrix, of order 3.
pub fn perm_matrix() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])
}

/// The order-3 action on the n binary operations: copies of C for even n,
/// copies of C plus one 3-cycle block for odd n. Needs n >= 2.
pub fn tau2_matrix(ncolors: usize) -> RationalMatrix {
    assert!(ncolors >= 2, "the action needs at least two operations");
    let mut blocks = Vec::new();
    let c_count = if ncolors % 2 == 0 {
        ncolors / 2
    } else {
        (ncolors - 3) / 2
    };
    for _ in 0..c_count {
        blocks.push(c_matrix());
    }
    if ncolors % 2 == 1 {
        blocks.push(perm_matrix());
    }
    let mut out = blocks[0].clone();
    for b in &blocks[1..] {
        out = out.direct_sum(b);
    }
    out
}

/// Smallest k <= maxpow with m^k = id.
pub fn matrix_order(m: &RationalMatrix, maxpow: usize) -> Option<usize> {
    m.order(maxpow)
}
