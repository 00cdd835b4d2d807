//! Lattice-path words: the canonical basis of the free L-algebra on one
//! generator.
//!
//! A word is a sequence over {U, D} where U counts +1 and D counts -2, every
//! proper prefix sums to >= 0 and the whole word sums to 1. Degree-n words
//! have length 3n-2 (2n-1 letters U, n-1 letters D) and there are
//! (1/n) C(3n-2, 2n-1) of them: 1, 2, 7, 30, 143, 728, ...
//!
//! The module provides
//! - validation, enumeration and the text codec ('1' for U, '2' for D),
//! - the two products `succ` (l > r = U l D r) and `prec` (l < r = l U r D),
//!   which satisfy the entanglement law (a > b) < c = a > (b < c),
//! - the canonical decomposition of a word into generator / succ / prec,
//!   preferring the succ-outermost split,
//! - the involution swapping the two products,
//! - the bijection with ascent sequences (odd-length positive integer words
//!   with first entry 1 and differences in {1, -1, -3, -5, ...}),
//! - the binary-tree codec `psi_encode` / `phi_decode`, and
//! - the graded word arithmetic: two additions and a substitution product.

use serde_json::{json, Value};
use std::fmt;
use thiserror::Error;

/// One step of a lattice-path word: `U` counts +1, `D` counts -2.
///
/// The derived order `U < D` fixes the lexicographic enumeration order.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    U,
    D,
}

impl Letter {
    pub fn value(self) -> i64 {
        match self {
            Letter::U => 1,
            Letter::D => -2,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("empty word: degrees start at 1")]
    Empty,
    #[error("letter {0} is not '1' or '2'")]
    BadLetter(char),
    #[error("prefix of length {0} has negative sum")]
    NegativePrefix(usize),
    #[error("total sum is {0}, expected 1")]
    BadTotal(i64),
}

/// A valid lattice-path word. Construction always validates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LWord(Vec<Letter>);

/// True iff every proper prefix sums to >= 0 and the total equals 1.
pub fn validate(letters: &[Letter]) -> bool {
    check(letters).is_ok()
}

fn check(letters: &[Letter]) -> Result<(), WordError> {
    if letters.is_empty() {
        return Err(WordError::Empty);
    }
    let mut sum = 0i64;
    for (i, l) in letters.iter().enumerate() {
        sum += l.value();
        if sum < 0 && i + 1 < letters.len() {
            return Err(WordError::NegativePrefix(i + 1));
        }
    }
    if sum != 1 {
        return Err(WordError::BadTotal(sum));
    }
    Ok(())
}

impl LWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self, WordError> {
        check(&letters)?;
        Ok(LWord(letters))
    }

    /// The generator: the one-letter word "1".
    pub fn generator() -> Self {
        LWord(vec![Letter::U])
    }

    /// Parses the text form, e.g. `"1121"`.
    pub fn parse(s: &str) -> Result<Self, WordError> {
        let letters = s
            .chars()
            .map(|c| match c {
                '1' => Ok(Letter::U),
                '2' => Ok(Letter::D),
                other => Err(WordError::BadLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        LWord::new(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Degree n, with len = 3n - 2.
    pub fn degree(&self) -> usize {
        debug_assert_eq!(self.0.len() % 3, 1);
        (self.0.len() + 2) / 3
    }

    pub fn is_generator(&self) -> bool {
        self.0.len() == 1
    }

    /// l > r = U l D r.
    pub fn succ(&self, r: &LWord) -> LWord {
        let mut v = Vec::with_capacity(self.len() + r.len() + 2);
        v.push(Letter::U);
        v.extend_from_slice(&self.0);
        v.push(Letter::D);
        v.extend_from_slice(&r.0);
        debug_assert!(validate(&v));
        LWord(v)
    }

    /// l < r = l U r D.
    pub fn prec(&self, r: &LWord) -> LWord {
        let mut v = Vec::with_capacity(self.len() + r.len() + 2);
        v.extend_from_slice(&self.0);
        v.push(Letter::U);
        v.extend_from_slice(&r.0);
        v.push(Letter::D);
        debug_assert!(validate(&v));
        LWord(v)
    }

    /// Canonical decomposition, preferring the succ-outermost split.
    ///
    /// Writing the word as U.rest, the smallest k with rest[k] = D and
    /// rest[..k] a valid word yields the succ split U.(rest[..k]).D.(rest[k+1..]).
    /// Such a D is never terminal (the total sum would be 0), so when no
    /// interior split exists the word is a prec product l U r D, found by
    /// scanning prefix splits; that split is unique by freeness.
    pub fn decompose(&self) -> Decomposition {
        if self.is_generator() {
            return Decomposition::Generator;
        }
        let rest = &self.0[1..];
        for k in 0..rest.len() {
            if rest[k] == Letter::D && validate(&rest[..k]) {
                debug_assert!(k + 1 < rest.len(), "terminal D after a word prefix");
                let left = LWord(rest[..k].to_vec());
                let right = LWord::new(rest[k + 1..].to_vec())
                    .expect("succ suffix is a word");
                return Decomposition::Succ(left, right);
            }
        }
        // no succ split: the word is l U r D
        let body = &self.0[..self.0.len() - 1];
        debug_assert_eq!(*self.0.last().unwrap(), Letter::D);
        for j in 1..body.len() {
            if body[j] == Letter::U && validate(&body[..j]) && validate(&body[j + 1..]) {
                return Decomposition::Prec(LWord(body[..j].to_vec()), LWord(body[j + 1..].to_vec()));
            }
        }
        unreachable!("every word of degree >= 2 splits")
    }

    /// The involution: 1 fixed, (l < r)^† = r^† > l^†, (l > r)^† = r^† < l^†.
    pub fn involution(&self) -> LWord {
        match self.decompose() {
            Decomposition::Generator => self.clone(),
            Decomposition::Prec(l, r) => r.involution().succ(&l.involution()),
            Decomposition::Succ(l, r) => r.involution().prec(&l.involution()),
        }
    }

    /// Substitution product: replaces every generator occurrence in the
    /// canonical decomposition of `self` by `r`. Degrees multiply.
    pub fn ltimes(&self, r: &LWord) -> LWord {
        match self.decompose() {
            Decomposition::Generator => r.clone(),
            Decomposition::Prec(a, b) => a.ltimes(r).prec(&b.ltimes(r)),
            Decomposition::Succ(a, b) => a.ltimes(r).succ(&b.ltimes(r)),
        }
    }
}

impl fmt::Display for LWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::U => "1",
                Letter::D => "2",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LWord({self})")
    }
}

/// Canonical split of a word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Decomposition {
    Generator,
    Prec(LWord, LWord),
    Succ(LWord, LWord),
}

impl Decomposition {
    /// Reassembles the decomposed word.
    pub fn reassemble(&self) -> Option<LWord> {
        match self {
            Decomposition::Generator => None,
            Decomposition::Prec(l, r) => Some(l.prec(r)),
            Decomposition::Succ(l, r) => Some(l.succ(r)),
        }
    }
}

/// All valid words of degree n, in lexicographic order with U < D.
pub fn enumerate_words(n: usize) -> Vec<LWord> {
    assert!(n >= 1, "degrees start at 1");
    let len = 3 * n - 2;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    // backtracking with prefix-sum pruning; trying U before D keeps the
    // output lexicographically sorted
    fn go(cur: &mut Vec<Letter>, sum: i64, ups_left: i64, downs_left: i64, out: &mut Vec<LWord>) {
        if ups_left == 0 && downs_left == 0 {
            if sum == 1 {
                out.push(LWord(cur.clone()));
            }
            return;
        }
        if sum < 0 {
            return;
        }
        if ups_left > 0 {
            cur.push(Letter::U);
            go(cur, sum + 1, ups_left - 1, downs_left, out);
            cur.pop();
        }
        if downs_left > 0 && sum >= 2 {
            cur.push(Letter::D);
            go(cur, sum - 2, ups_left, downs_left - 1, out);
            cur.pop();
        }
    }
    go(&mut cur, 0, (2 * n - 1) as i64, (n - 1) as i64, &mut out);
    debug_assert_eq!(out.len(), word_count(n));
    out
}

/// The closed-form count (1/n) C(3n-2, 2n-1).
pub fn word_count(n: usize) -> usize {
    use num::ToPrimitive;
    let c = crate::exact::binomial((3 * n - 2) as u64, (2 * n - 1) as u64);
    (c / num::BigInt::from(n)).to_usize().expect("count fits usize")
}

// ---------------------------------------------------------------------------
// ascent words and the bijection onto lattice-path words
// ---------------------------------------------------------------------------

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OmegaError {
    #[error("length {0} is even, expected 2n-1")]
    EvenLength(usize),
    #[error("empty sequence")]
    Empty,
    #[error("first entry is {0}, expected 1")]
    FirstEntry(u64),
    #[error("entry {index} is {value}, expected positive")]
    NonPositive { index: usize, value: i64 },
    #[error("difference at index {index} is {diff}, expected 1 or a negative odd number")]
    BadDifference { index: usize, diff: i64 },
    #[error("entry {0} is not an integer")]
    BadEntry(String),
}

/// A sequence from the combinatorial family counted by (1/n) C(3n-2, 2n-1):
/// odd length, first entry 1, all entries positive, successive differences
/// in {1, -1, -3, -5, ...}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OmegaWord(Vec<u64>);

impl OmegaWord {
    pub fn new(entries: Vec<u64>) -> Result<Self, OmegaError> {
        if entries.is_empty() {
            return Err(OmegaError::Empty);
        }
        if entries.len() % 2 == 0 {
            return Err(OmegaError::EvenLength(entries.len()));
        }
        if entries[0] != 1 {
            return Err(OmegaError::FirstEntry(entries[0]));
        }
        for (i, &e) in entries.iter().enumerate() {
            if e == 0 {
                return Err(OmegaError::NonPositive { index: i, value: 0 });
            }
        }
        for i in 1..entries.len() {
            let diff = entries[i] as i64 - entries[i - 1] as i64;
            let ok = diff == 1 || (diff < 0 && diff % 2 != 0);
            if !ok {
                return Err(OmegaError::BadDifference { index: i, diff });
            }
        }
        Ok(OmegaWord(entries))
    }

    /// Parses comma-separated positive integers.
    pub fn parse(s: &str) -> Result<Self, OmegaError> {
        let entries = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| OmegaError::BadEntry(p.trim().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        OmegaWord::new(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        (self.0.len() + 1) / 2
    }
}

impl fmt::Display for OmegaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// The bijection onto lattice-path words: keep the first entry, turn each
/// difference +1 into U and each difference 1-2k into k copies of D followed
/// by a U, then pad with D until the total sum is 1.
pub fn omega_to_word(omega: &OmegaWord) -> LWord {
    let e = omega.entries();
    let mut letters = vec![Letter::U];
    for i in 1..e.len() {
        let diff = e[i] as i64 - e[i - 1] as i64;
        if diff == 1 {
            letters.push(Letter::U);
        } else {
            let copies = (1 - diff) / 2;
            for _ in 0..copies {
                letters.push(Letter::D);
            }
            letters.push(Letter::U);
        }
    }
    // entries at odd positions are odd, so the final running sum is odd
    let sum: i64 = letters.iter().map(|l| l.value()).sum();
    debug_assert!(sum >= 1 && sum % 2 == 1);
    for _ in 0..(sum - 1) / 2 {
        letters.push(Letter::D);
    }
    LWord::new(letters).expect("image of the bijection is a word")
}

/// Exact inverse of [`omega_to_word`].
pub fn word_to_omega(word: &LWord) -> OmegaWord {
    let letters = word.letters();
    let mut entries = vec![1u64];
    let mut cur = 1i64;
    let mut down_run = 0i64;
    for &l in &letters[1..] {
        match l {
            Letter::D => down_run += 1,
            Letter::U => {
                cur += 1 - 2 * down_run;
                debug_assert!(cur > 0);
                entries.push(cur as u64);
                down_run = 0;
            }
        }
    }
    // the trailing D run is exactly the padding
    debug_assert_eq!(down_run, (cur - 1) / 2);
    OmegaWord::new(entries).expect("inverse image is a valid sequence")
}

// ---------------------------------------------------------------------------
// binary trees and the word codec
// ---------------------------------------------------------------------------

/// Rooted planar binary tree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(l: BinaryTree, r: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(l), Box::new(r))
    }

    pub fn nodes(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.nodes() + r.nodes(),
        }
    }

    /// JSON form: `"o"` for a leaf, `{"l": .., "r": ..}` for a node.
    pub fn to_json(&self) -> Value {
        match self {
            BinaryTree::Leaf => json!("o"),
            BinaryTree::Node(l, r) => json!({"l": l.to_json(), "r": r.to_json()}),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, String> {
        match v {
            Value::String(s) if s == "o" => Ok(BinaryTree::Leaf),
            Value::Object(o) => {
                let l = o.get("l").ok_or("node without \"l\"")?;
                let r = o.get("r").ok_or("node without \"r\"")?;
                Ok(BinaryTree::node(Self::from_json(l)?, Self::from_json(r)?))
            }
            other => Err(format!("expected \"o\" or a node object, got {other}")),
        }
    }
}

/// All binary trees with p nodes (Catalan(p) of them).
pub fn enumerate_binary_trees(p: usize) -> Vec<BinaryTree> {
    if p == 0 {
        return vec![BinaryTree::Leaf];
    }
    let mut out = Vec::new();
    for k in 0..p {
        for l in enumerate_binary_trees(k) {
            for r in enumerate_binary_trees(p - 1 - k) {
                out.push(BinaryTree::node(l.clone(), r));
            }
        }
    }
    out
}

/// Word coding of binary trees: leaf -> "1", node(a, b) -> psi(a) < psi(b).
pub fn psi_encode(t: &BinaryTree) -> LWord {
    match t {
        BinaryTree::Leaf => LWord::generator(),
        BinaryTree::Node(l, r) => psi_encode(l).prec(&psi_encode(r)),
    }
}

/// Left inverse of [`psi_encode`]: evaluates the canonical decomposition
/// with prec as grafting and succ as the zero map. `None` is the zero
/// element; the result does not depend on the choice of decomposition
/// because a word is a single basis monomial.
pub fn phi_decode(w: &LWord) -> Option<BinaryTree> {
    match w.decompose() {
        Decomposition::Generator => Some(BinaryTree::Leaf),
        Decomposition::Succ(_, _) => None,
        Decomposition::Prec(l, r) => Some(BinaryTree::node(phi_decode(&l)?, phi_decode(&r)?)),
    }
}

// ---------------------------------------------------------------------------
// the word algebra as a presented algebra
// ---------------------------------------------------------------------------

use crate::bialg::{InvolutiveAlgebra, LinComb, OpIdx, PresentedAlgebra, Split};

/// The free L-algebra on one generator, presented on the word basis with
/// operations `succ` (index 0) and `prec` (index 1).
pub struct LWordAlgebra;

pub const OP_SUCC: OpIdx = 0;
pub const OP_PREC: OpIdx = 1;

impl PresentedAlgebra for LWordAlgebra {
    type Key = LWord;

    fn op_names(&self) -> Vec<&'static str> {
        vec!["succ", "prec"]
    }

    fn degree(&self, k: &LWord) -> usize {
        k.degree()
    }

    fn basis(&self, n: usize) -> Vec<LWord> {
        enumerate_words(n)
    }

    fn apply(&self, op: OpIdx, a: &LWord, b: &LWord) -> LinComb<LWord> {
        LinComb::from_key(match op {
            OP_SUCC => a.succ(b),
            OP_PREC => a.prec(b),
            other => panic!("unknown operation {other}"),
        })
    }

    fn split(&self, k: &LWord) -> Split<LWord> {
        match k.decompose() {
            Decomposition::Generator => Split::Generator,
            Decomposition::Succ(a, b) => Split::Product(OP_SUCC, a, b),
            Decomposition::Prec(a, b) => Split::Product(OP_PREC, a, b),
        }
    }
}

impl InvolutiveAlgebra for LWordAlgebra {
    fn dagger_key(&self, k: &LWord) -> LWord {
        k.involution()
    }

    fn dagger_op(&self, op: OpIdx) -> OpIdx {
        1 - op // succ <-> prec
    }
}
