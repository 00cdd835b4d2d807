//! Randomized invariants over the core structures.

use loperad::exact::{rat, RationalMatrix};
use loperad::series::{SeriesKind, TruncSeries};
use loperad::trip::even::{enumerate_even, even_count, EvenTree};
use loperad::words::{
    enumerate_words, omega_to_word, word_count, word_to_omega, LWord,
};
use num::Zero;
use proptest::prelude::*;

fn word(max_degree: usize) -> impl Strategy<Value = LWord> {
    (1..=max_degree).prop_flat_map(|n| {
        (0..word_count(n)).prop_map(move |i| enumerate_words(n)[i].clone())
    })
}

fn even_tree(max_size: usize) -> impl Strategy<Value = EvenTree> {
    (1..=max_size).prop_flat_map(|n| {
        (0..even_count(n)).prop_map(move |i| enumerate_even(n)[i].clone())
    })
}

proptest! {
    #[test]
    fn word_text_roundtrip(w in word(5)) {
        let printed = w.to_string();
        prop_assert_eq!(LWord::parse(&printed).unwrap(), w);
    }

    #[test]
    fn word_sequence_roundtrip(w in word(5)) {
        let o = word_to_omega(&w);
        prop_assert_eq!(o.degree(), w.degree());
        prop_assert_eq!(omega_to_word(&o), w);
    }

    #[test]
    fn involution_laws(a in word(3), b in word(3)) {
        prop_assert_eq!(a.involution().involution(), a.clone());
        prop_assert_eq!(a.prec(&b).involution(), b.involution().succ(&a.involution()));
        prop_assert_eq!(a.succ(&b).involution(), b.involution().prec(&a.involution()));
    }

    #[test]
    fn entanglement(a in word(3), b in word(3), c in word(3)) {
        prop_assert_eq!(a.succ(&b).prec(&c), a.succ(&b.prec(&c)));
    }

    #[test]
    fn decompose_reassembles(w in word(5)) {
        if let Some(back) = w.decompose().reassemble() {
            prop_assert_eq!(back, w);
        } else {
            prop_assert!(w.is_generator());
        }
    }

    #[test]
    fn substitution_grading(a in word(3), b in word(3), r in word(2)) {
        prop_assert_eq!(a.ltimes(&r).degree(), a.degree() * r.degree());
        prop_assert_eq!(a.prec(&b).ltimes(&r), a.ltimes(&r).prec(&b.ltimes(&r)));
        prop_assert_eq!(a.succ(&b).ltimes(&r), a.ltimes(&r).succ(&b.ltimes(&r)));
    }

    #[test]
    fn even_tree_axioms(x in even_tree(3), y in even_tree(3), z in even_tree(3)) {
        let op = |i: usize, a: &EvenTree, b: &EvenTree| match i {
            0 => a.ne(b),
            1 => a.smile(b),
            2 => a.nw(b),
            _ => unreachable!(),
        };
        for i in 0..3 {
            for j in i..3 {
                prop_assert_eq!(op(j, &op(i, &x, &y), &z), op(i, &x, &op(j, &y, &z)));
            }
        }
        prop_assert_eq!(x.mirror().mirror(), x.clone());
        prop_assert_eq!(x.ne(&y).mirror(), y.mirror().nw(&x.mirror()));
    }

    #[test]
    fn rank_nullity(rows in 1usize..=4, cols in 1usize..=4, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut m = RationalMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, rat(rng.gen_range(-5..=5)));
            }
        }
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in kernel {
            prop_assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn reversion_roundtrip(coeffs in proptest::collection::vec(-3i64..=3, 5), lead in prop_oneof![Just(1i64), Just(-1), Just(2)]) {
        let order = 6;
        let mut pairs = vec![(1usize, rat(lead))];
        for (i, &c) in coeffs.iter().enumerate() {
            pairs.push((i + 2, rat(c)));
        }
        let a = TruncSeries::from_coeffs(SeriesKind::Ordinary, order, &pairs);
        let g = a.revert().unwrap();
        prop_assert!(a.compose(&g).unwrap().is_identity());
        prop_assert!(g.compose(&a).unwrap().is_identity());
    }
}
