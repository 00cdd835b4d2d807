//! Involutive triplicial structures built from an involutive associative
//! algebra: on pairs (head, tail) in A (x) As(A),
//!
//! ```text
//! (a, t) .1 (a', t') = (a * a', t ++ t')
//! (a, t) .2 (a', t') = (a, t ++ [a'] ++ t')
//! (a, t) .3 (a', t') = iota(iota(a', t') .1 iota(a, t))
//! ```
//!
//! with the involution iota(a, [a1..an]) = (iota(an), [iota(a(n-1)), ..,
//! iota(a1), iota(a)]). When both tails are nonempty the third product takes
//! the closed form (a, t[..n-1] ++ [a'] ++ t'[..m-1] ++ [t[n-1] * t'[m-1]]).
//!
//! The second tensor factor is the free associative algebra without unit:
//! the six entanglement axioms hold on elements with nonempty tails, and
//! the (1,3) axiom genuinely fails if the empty tail is adjoined. Pairs
//! with empty tails are still accepted by .1 and .2, which restrict to the
//! product and the trivial extension on bare heads.

use std::fmt::Debug;

/// An associative multiplication with an anti-automorphic involution,
/// acting on monomial-like elements.
pub struct InvolutiveAssoc<T> {
    mul: Box<dyn Fn(&T, &T) -> T>,
    inv: Box<dyn Fn(&T) -> T>,
}

/// Element of the tensor construction: a head and an ordered tail.
pub type TensorElem<T> = (T, Vec<T>);

impl<T: Clone + Eq + Debug> InvolutiveAssoc<T> {
    /// Builds the structure after checking, on the given samples, that the
    /// involution is anti-multiplicative and self-inverse.
    pub fn new(
        mul: impl Fn(&T, &T) -> T + 'static,
        inv: impl Fn(&T) -> T + 'static,
        samples: &[T],
    ) -> Result<Self, String> {
        for a in samples {
            if inv(&inv(a)) != *a {
                return Err(format!("involution not self-inverse at {a:?}"));
            }
            for b in samples {
                if inv(&mul(a, b)) != mul(&inv(b), &inv(a)) {
                    return Err(format!("involution not anti-multiplicative at {a:?}, {b:?}"));
                }
                for c in samples {
                    if mul(&mul(a, b), c) != mul(a, &mul(b, c)) {
                        return Err(format!("multiplication not associative at {a:?}, {b:?}, {c:?}"));
                    }
                }
            }
        }
        Ok(InvolutiveAssoc {
            mul: Box::new(mul),
            inv: Box::new(inv),
        })
    }

    pub fn iota(&self, x: &TensorElem<T>) -> TensorElem<T> {
        let (a, tail) = x;
        match tail.split_last() {
            None => ((self.inv)(a), Vec::new()),
            Some((last, front)) => {
                let mut new_tail: Vec<T> = front.iter().rev().map(|t| (self.inv)(t)).collect();
                new_tail.push((self.inv)(a));
                ((self.inv)(last), new_tail)
            }
        }
    }

    pub fn op1(&self, x: &TensorElem<T>, y: &TensorElem<T>) -> TensorElem<T> {
        let mut tail = x.1.clone();
        tail.extend(y.1.iter().cloned());
        ((self.mul)(&x.0, &y.0), tail)
    }

    pub fn op2(&self, x: &TensorElem<T>, y: &TensorElem<T>) -> TensorElem<T> {
        let mut tail = x.1.clone();
        tail.push(y.0.clone());
        tail.extend(y.1.iter().cloned());
        (x.0.clone(), tail)
    }

    pub fn op3(&self, x: &TensorElem<T>, y: &TensorElem<T>) -> TensorElem<T> {
        self.iota(&self.op1(&self.iota(y), &self.iota(x)))
    }

    /// The displayed form of .3 for nonempty tails, used to cross-check the
    /// conjugation definition.
    pub fn op3_literal(&self, x: &TensorElem<T>, y: &TensorElem<T>) -> Option<TensorElem<T>> {
        let (xn, xfront) = x.1.split_last()?;
        let (ym, yfront) = y.1.split_last()?;
        let mut tail = xfront.to_vec();
        tail.push(y.0.clone());
        tail.extend(yfront.iter().cloned());
        tail.push((self.mul)(xn, ym));
        Some((x.0.clone(), tail))
    }

    pub fn op(&self, which: usize, x: &TensorElem<T>, y: &TensorElem<T>) -> TensorElem<T> {
        match which {
            0 => self.op1(x, y),
            1 => self.op2(x, y),
            2 => self.op3(x, y),
            other => panic!("unknown operation {other}"),
        }
    }
}

/// Free-monoid model: words under concatenation with reversal as the
/// involution.
pub fn word_concat_model(sample_letters: &str) -> InvolutiveAssoc<String> {
    let samples: Vec<String> = sample_letters
        .chars()
        .map(|c| c.to_string())
        .chain([sample_letters.to_string()])
        .collect();
    InvolutiveAssoc::new(
        |a: &String, b: &String| format!("{a}{b}"),
        |a: &String| a.chars().rev().collect(),
        &samples,
    )
    .expect("concatenation with reversal is involutive associative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn model() -> InvolutiveAssoc<String> {
        word_concat_model("abc")
    }

    // nonempty tails: the nonunital space where all six axioms hold
    fn random_elem(rng: &mut ChaCha8Rng) -> TensorElem<String> {
        let letters = ["a", "b", "c", "ab", "ba"];
        let head = letters.choose(rng).unwrap().to_string();
        let n = rng.gen_range(1..=2);
        let tail = (0..n)
            .map(|_| letters.choose(rng).unwrap().to_string())
            .collect();
        (head, tail)
    }

    #[test]
    fn pure_heads() {
        let m = model();
        let x = ("a".to_string(), vec![]);
        let y = ("b".to_string(), vec![]);
        assert_eq!(m.op1(&x, &y), ("ab".to_string(), vec![]));
    }

    #[test]
    fn involution_self_inverse() {
        let m = model();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let x = random_elem(&mut rng);
            assert_eq!(m.iota(&m.iota(&x)), x);
        }
    }

    #[test]
    fn literal_op3_agrees_with_conjugation() {
        let m = model();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let x = random_elem(&mut rng);
            let y = random_elem(&mut rng);
            if let Some(lit) = m.op3_literal(&x, &y) {
                assert_eq!(lit, m.op3(&x, &y));
            }
        }
    }

    #[test]
    fn triplicial_axioms_random() {
        let m = model();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let x = random_elem(&mut rng);
            let y = random_elem(&mut rng);
            let z = random_elem(&mut rng);
            for i in 0..3 {
                for j in i..3 {
                    assert_eq!(
                        m.op(j, &m.op(i, &x, &y), &z),
                        m.op(i, &x, &m.op(j, &y, &z)),
                        "axiom ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn involutive_laws() {
        let m = model();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let x = random_elem(&mut rng);
            let y = random_elem(&mut rng);
            assert_eq!(m.iota(&m.op1(&x, &y)), m.op3(&m.iota(&y), &m.iota(&x)));
            assert_eq!(m.iota(&m.op2(&x, &y)), m.op2(&m.iota(&y), &m.iota(&x)));
            assert_eq!(m.iota(&m.op3(&x, &y)), m.op1(&m.iota(&y), &m.iota(&x)));
        }
    }

    #[test]
    fn rejects_non_antimultiplicative() {
        // identity is not an anti-automorphism of a noncommutative product
        let r = InvolutiveAssoc::new(
            |a: &String, b: &String| format!("{a}{b}"),
            |a: &String| a.clone(),
            &["a".to_string(), "b".to_string()],
        );
        assert!(r.is_err());
    }
}
