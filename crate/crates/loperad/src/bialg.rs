//! Coassociative coproduct machinery for presented graded algebras.
//!
//! Everything here is generic over a [`PresentedAlgebra`]: a graded algebra
//! with an ordered basis per degree, finitely many binary operations, and a
//! canonical decomposition of every non-generator basis key as a product.
//! The coproduct is the unique one vanishing on generators and satisfying
//! the nonunital infinitesimal relation
//!
//! ```text
//! delta(x . y) = x_(1) (x) (x_(2) . y)  +  (x . y_(1)) (x) y_(2)  +  x (x) y
//! ```
//!
//! for every generating operation. From it we compute primitive subspaces
//! (kernels of delta, by exact linear algebra) and the recursive projectors
//!
//! ```text
//! e_r(x) = x - x_(1) . e_r(x_(2)),      e_l(x) = x - e_l(x_(1)) . x_(2),
//! ```
//!
//! which are idempotents onto the primitives. Coproducts and projector values
//! are memoized per basis key behind RwLocks, so a shared context is safe to
//! query concurrently.

use crate::exact::{RationalMatrix, Rational, RowSpace};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt::Debug;
use std::sync::RwLock;

/// Index into an algebra's operation list.
pub type OpIdx = usize;

/// Canonical decomposition of a basis key.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Split<K> {
    Generator,
    Product(OpIdx, K, K),
}

/// A graded algebra presented by basis keys and binary operations.
pub trait PresentedAlgebra {
    type Key: Ord + Clone + Debug;

    /// Names of the generating binary operations, fixing their indices.
    fn op_names(&self) -> Vec<&'static str>;

    fn degree(&self, k: &Self::Key) -> usize;

    /// Ordered basis of the degree-n component.
    fn basis(&self, n: usize) -> Vec<Self::Key>;

    /// Applies operation `op` to two basis keys, degree-additively.
    fn apply(&self, op: OpIdx, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;

    /// Canonical decomposition; reassembling through `apply` must reproduce
    /// the key.
    fn split(&self, k: &Self::Key) -> Split<Self::Key>;

    fn op_count(&self) -> usize {
        self.op_names().len()
    }
}

/// A presented algebra carrying an involution that reverses products:
/// `(a .op b)^† = b^† .op^† a^†`.
pub trait InvolutiveAlgebra: PresentedAlgebra {
    fn dagger_key(&self, k: &Self::Key) -> Self::Key;
    fn dagger_op(&self, op: OpIdx) -> OpIdx;
}

// ---------------------------------------------------------------------------
// linear combinations
// ---------------------------------------------------------------------------

/// Finite formal sum of basis keys with exact rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<K: Ord>(BTreeMap<K, Rational>);

impl<K: Ord + Clone> Default for LinComb<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb(BTreeMap::new())
    }

    pub fn from_key(k: K) -> Self {
        let mut m = BTreeMap::new();
        m.insert(k, Rational::one());
        LinComb(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Rational {
        self.0.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, k: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(k);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &LinComb<K>) {
        for (k, c) in other.terms() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub(&mut self, other: &LinComb<K>) {
        for (k, c) in other.terms() {
            self.add_term(k.clone(), -c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<K>, s: &Rational) {
        if s.is_zero() {
            return;
        }
        for (k, c) in other.terms() {
            self.add_term(k.clone(), c * s);
        }
    }

    pub fn scaled(&self, s: &Rational) -> LinComb<K> {
        let mut out = LinComb::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn map_keys<J: Ord + Clone>(&self, f: impl Fn(&K) -> J) -> LinComb<J> {
        let mut out = LinComb::zero();
        for (k, c) in self.terms() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Coefficient vector with respect to an ordered basis. Panics on a key
    /// outside the basis.
    pub fn to_vec(&self, basis: &[K]) -> Vec<Rational> {
        let index: BTreeMap<&K, usize> = basis.iter().zip(0..).collect();
        let mut v = vec![Rational::zero(); basis.len()];
        for (k, c) in self.terms() {
            let i = *index.get(k).expect("key outside basis");
            v[i] = c.clone();
        }
        v
    }

    pub fn from_vec(basis: &[K], v: &[Rational]) -> LinComb<K> {
        let mut out = LinComb::zero();
        for (k, c) in basis.iter().zip(v) {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

/// Formal sum of key pairs: an element of the two-fold tensor power.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorComb<K: Ord>(BTreeMap<(K, K), Rational>);

impl<K: Ord + Clone> Default for TensorComb<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> TensorComb<K> {
    pub fn zero() -> Self {
        TensorComb(BTreeMap::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(K, K), &Rational)> {
        self.0.iter()
    }

    pub fn add_term(&mut self, pair: (K, K), c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(pair);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &TensorComb<K>) {
        for (p, c) in other.terms() {
            self.add_term(p.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &TensorComb<K>, s: &Rational) {
        for (p, c) in other.terms() {
            self.add_term(p.clone(), c * s);
        }
    }

    /// `(a (x) b)^† = b^† (x) a^†`, keys mapped through `f`.
    pub fn dagger(&self, f: impl Fn(&K) -> K) -> TensorComb<K> {
        let mut out = TensorComb::zero();
        for ((a, b), c) in self.terms() {
            out.add_term((f(b), f(a)), c.clone());
        }
        out
    }
}

// ---------------------------------------------------------------------------
// the bialgebra context
// ---------------------------------------------------------------------------

/// Side of the recursive projector: `e_r(x) = x - x_(1) . e_r(x_(2))`,
/// `e_l(x) = x - e_l(x_(1)) . x_(2)`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A presented algebra together with its memoized coproduct and projectors.
pub struct Bialgebra<A: PresentedAlgebra> {
    alg: A,
    delta_cache: RwLock<BTreeMap<A::Key, TensorComb<A::Key>>>,
    idem_cache: RwLock<BTreeMap<(OpIdx, Side, A::Key), LinComb<A::Key>>>,
}

impl<A: PresentedAlgebra> Bialgebra<A> {
    pub fn new(alg: A) -> Self {
        Bialgebra {
            alg,
            delta_cache: RwLock::new(BTreeMap::new()),
            idem_cache: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn algebra(&self) -> &A {
        &self.alg
    }

    /// Bilinear extension of a generating operation.
    pub fn mul(&self, op: OpIdx, x: &LinComb<A::Key>, y: &LinComb<A::Key>) -> LinComb<A::Key> {
        let mut out = LinComb::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                out.add_scaled(&self.alg.apply(op, a, b), &(ca * cb));
            }
        }
        out
    }

    /// The coproduct on a basis key, via its canonical decomposition.
    pub fn coproduct_key(&self, k: &A::Key) -> TensorComb<A::Key> {
        if let Some(hit) = self.delta_cache.read().unwrap().get(k) {
            return hit.clone();
        }
        let result = match self.alg.split(k) {
            Split::Generator => TensorComb::zero(),
            Split::Product(op, a, b) => {
                let da = self.coproduct_key(&a);
                let db = self.coproduct_key(&b);
                let mut out = TensorComb::zero();
                // x_(1) (x) (x_(2) . y)
                for ((a1, a2), c) in da.terms() {
                    for (k2, c2) in self.alg.apply(op, a2, &b).terms() {
                        out.add_term((a1.clone(), k2.clone()), c * c2);
                    }
                }
                // (x . y_(1)) (x) y_(2)
                for ((b1, b2), c) in db.terms() {
                    for (k1, c1) in self.alg.apply(op, &a, b1).terms() {
                        out.add_term((k1.clone(), b2.clone()), c * c1);
                    }
                }
                out.add_term((a, b), Rational::one());
                out
            }
        };
        self.delta_cache
            .write()
            .unwrap()
            .insert(k.clone(), result.clone());
        result
    }

    /// Linear extension of the coproduct.
    pub fn coproduct(&self, x: &LinComb<A::Key>) -> TensorComb<A::Key> {
        let mut out = TensorComb::zero();
        for (k, c) in x.terms() {
            out.add_scaled(&self.coproduct_key(k), c);
        }
        out
    }

    /// All pairs (a, b) of basis keys with deg a + deg b = n, ordered
    /// lexicographically in (left key, right key).
    pub fn tensor_basis(&self, n: usize) -> Vec<(A::Key, A::Key)> {
        let mut pairs = Vec::new();
        for i in 1..n {
            for a in self.alg.basis(i) {
                for b in self.alg.basis(n - i) {
                    pairs.push((a.clone(), b));
                }
            }
        }
        pairs.sort();
        pairs
    }

    /// Matrix of the coproduct restricted to degree n: rows indexed by the
    /// tensor basis, columns by the degree-n basis.
    pub fn coproduct_matrix(&self, n: usize) -> (RationalMatrix, Vec<A::Key>, Vec<(A::Key, A::Key)>) {
        let cols = self.alg.basis(n);
        let pairs = self.tensor_basis(n);
        let index: BTreeMap<&(A::Key, A::Key), usize> = pairs.iter().zip(0..).collect();
        let mut m = RationalMatrix::zeros(pairs.len(), cols.len());
        for (j, k) in cols.iter().enumerate() {
            for (pair, c) in self.coproduct_key(k).terms() {
                let i = *index.get(pair).expect("coproduct pair outside tensor basis");
                m.set(i, j, c.clone());
            }
        }
        (m, cols, pairs)
    }

    /// Basis of ker delta restricted to degree n.
    pub fn primitive_basis(&self, n: usize) -> Vec<LinComb<A::Key>> {
        let (m, cols, _) = self.coproduct_matrix(n);
        m.kernel_basis()
            .into_iter()
            .map(|v| LinComb::from_vec(&cols, &v))
            .collect()
    }

    pub fn primitive_dim(&self, n: usize) -> usize {
        let (m, cols, _) = self.coproduct_matrix(n);
        cols.len() - m.rank()
    }

    /// The recursive projector, memoized per basis key.
    pub fn idempotent_key(&self, op: OpIdx, side: Side, k: &A::Key) -> LinComb<A::Key> {
        if let Some(hit) = self.idem_cache.read().unwrap().get(&(op, side, k.clone())) {
            return hit.clone();
        }
        let delta = self.coproduct_key(k);
        let mut out = LinComb::from_key(k.clone());
        for ((a, b), c) in delta.terms() {
            let correction = match side {
                Side::Right => {
                    let eb = self.idempotent_key(op, side, b);
                    self.mul(op, &LinComb::from_key(a.clone()), &eb)
                }
                Side::Left => {
                    let ea = self.idempotent_key(op, side, a);
                    self.mul(op, &ea, &LinComb::from_key(b.clone()))
                }
            };
            out.add_scaled(&correction, &-c.clone());
        }
        self.idem_cache
            .write()
            .unwrap()
            .insert((op, side, k.clone()), out.clone());
        out
    }

    /// Linear extension of the projector.
    pub fn idempotent(&self, op: OpIdx, side: Side, x: &LinComb<A::Key>) -> LinComb<A::Key> {
        let mut out = LinComb::zero();
        for (k, c) in x.terms() {
            out.add_scaled(&self.idempotent_key(op, side, k), c);
        }
        out
    }

    /// Matrix of the projector on the degree-n component.
    pub fn idempotent_matrix(&self, op: OpIdx, side: Side, n: usize) -> RationalMatrix {
        let basis = self.alg.basis(n);
        let mut m = RationalMatrix::zeros(basis.len(), basis.len());
        for (j, k) in basis.iter().enumerate() {
            let e = self.idempotent_key(op, side, k);
            for (i, v) in e.to_vec(&basis).into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Dimension of the span of all products a .op b with deg a + deg b = n.
    pub fn product_span_dim(&self, op: OpIdx, n: usize) -> usize {
        let basis = self.alg.basis(n);
        let mut span = RowSpace::new(basis.len());
        for i in 1..n {
            for a in self.alg.basis(i) {
                for b in self.alg.basis(n - i) {
                    span.insert(self.alg.apply(op, &a, &b).to_vec(&basis));
                }
            }
        }
        span.rank()
    }

    /// Checks (delta (x) id) delta = (id (x) delta) delta on every degree-n key.
    pub fn coassociative_at(&self, n: usize) -> bool {
        self.alg.basis(n).iter().all(|k| {
            let d = self.coproduct_key(k);
            let mut lhs: BTreeMap<(A::Key, A::Key, A::Key), Rational> = BTreeMap::new();
            let mut rhs: BTreeMap<(A::Key, A::Key, A::Key), Rational> = BTreeMap::new();
            for ((a, b), c) in d.terms() {
                for ((a1, a2), c1) in self.coproduct_key(a).terms() {
                    let e = lhs
                        .entry((a1.clone(), a2.clone(), b.clone()))
                        .or_insert_with(Rational::zero);
                    *e += c * c1;
                }
                for ((b1, b2), c2) in self.coproduct_key(b).terms() {
                    let e = rhs
                        .entry((a.clone(), b1.clone(), b2.clone()))
                        .or_insert_with(Rational::zero);
                    *e += c * c2;
                }
            }
            lhs.retain(|_, v| !v.is_zero());
            rhs.retain(|_, v| !v.is_zero());
            lhs == rhs
        })
    }

    /// Checks that every coproduct term strictly lowers the degree on both
    /// sides (connectedness of the coradical filtration).
    pub fn connected_at(&self, n: usize) -> bool {
        self.alg.basis(n).iter().all(|k| {
            self.coproduct_key(k).terms().all(|((a, b), _)| {
                let (da, db) = (self.alg.degree(a), self.alg.degree(b));
                da >= 1 && db >= 1 && da + db == n && da < n && db < n
            })
        })
    }
}

impl<A: InvolutiveAlgebra> Bialgebra<A> {
    pub fn dagger(&self, x: &LinComb<A::Key>) -> LinComb<A::Key> {
        x.map_keys(|k| self.alg.dagger_key(k))
    }

    /// delta(t^†) = delta(t)^† on every degree-n basis key.
    pub fn involution_commutes_with_coproduct(&self, n: usize) -> bool {
        self.alg.basis(n).iter().all(|k| {
            let lhs = self.coproduct_key(&self.alg.dagger_key(k));
            let rhs = self.coproduct_key(k).dagger(|x| self.alg.dagger_key(x));
            lhs == rhs
        })
    }

    /// e_r_op(t^†) = (e_l_{op^†}(t))^† and the mirrored law, on every
    /// degree-n basis key and operation.
    pub fn idempotent_exchange_at(&self, n: usize) -> bool {
        self.alg.basis(n).iter().all(|k| {
            (0..self.alg.op_count()).all(|op| {
                let dag_op = self.alg.dagger_op(op);
                let kd = self.alg.dagger_key(k);
                let lhs_r = self.idempotent_key(op, Side::Right, &kd);
                let rhs_r = self.dagger(&self.idempotent_key(dag_op, Side::Left, k));
                let lhs_l = self.idempotent_key(op, Side::Left, &kd);
                let rhs_l = self.dagger(&self.idempotent_key(dag_op, Side::Right, k));
                lhs_r == rhs_r && lhs_l == rhs_l
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    // toy presented algebra: the free associative algebra on one generator,
    // basis = degree, single operation = addition of degrees, canonical
    // split n = 1 + (n-1)
    struct FreeAssocOne;

    impl PresentedAlgebra for FreeAssocOne {
        type Key = usize;

        fn op_names(&self) -> Vec<&'static str> {
            vec!["*"]
        }

        fn degree(&self, k: &usize) -> usize {
            *k
        }

        fn basis(&self, n: usize) -> Vec<usize> {
            vec![n]
        }

        fn apply(&self, _op: OpIdx, a: &usize, b: &usize) -> LinComb<usize> {
            LinComb::from_key(a + b)
        }

        fn split(&self, k: &usize) -> Split<usize> {
            if *k == 1 {
                Split::Generator
            } else {
                Split::Product(0, 1, k - 1)
            }
        }
    }

    #[test]
    fn deconcatenation_on_one_generator() {
        let h = Bialgebra::new(FreeAssocOne);
        // delta(x^n) = sum_{i=1}^{n-1} x^i (x) x^{n-i}
        let d = h.coproduct_key(&4);
        let mut expected = TensorComb::zero();
        for i in 1..4 {
            expected.add_term((i, 4 - i), rat(1));
        }
        assert_eq!(d, expected);
        for n in 1..=6 {
            assert!(h.coassociative_at(n));
            assert!(h.connected_at(n));
        }
        // primitives: only the generator
        assert_eq!(h.primitive_dim(1), 1);
        for n in 2..=6 {
            assert_eq!(h.primitive_dim(n), 0);
        }
    }

    #[test]
    fn associative_projector_kernel() {
        let h = Bialgebra::new(FreeAssocOne);
        // e_* kills all products: e(x^n) = 0 for n >= 2
        for n in 2..=6 {
            let e = h.idempotent_key(0, Side::Right, &n);
            assert!(e.is_zero(), "degree {n}");
            assert_eq!(h.product_span_dim(0, n), 1);
        }
        let e1 = h.idempotent_key(0, Side::Right, &1);
        assert_eq!(e1, LinComb::from_key(1));
    }

    #[test]
    fn lincomb_arithmetic() {
        let mut x: LinComb<u32> = LinComb::from_key(1);
        x.add_term(2, rat(3));
        x.add_term(1, rat(-1));
        assert_eq!(x.len(), 1);
        assert_eq!(x.coeff(&2), rat(3));
        let y = x.scaled(&rat(2));
        assert_eq!(y.coeff(&2), rat(6));
        let v = y.to_vec(&[1, 2, 3]);
        assert_eq!(v, vec![rat(0), rat(6), rat(0)]);
        assert_eq!(LinComb::from_vec(&[1, 2, 3], &v), y);
    }
}
