mod common;

use common::{config, letters, word};
use mazurkit_core::algebra::{
    fox_derivative, simplify_presentation, smith_normal_form, Generator, GroupRingElement, IntMatrix, LaurentPoly,
    Letter, Presentation, Word,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

/// Free reduction by cancelling adjacent pairs in an order driven by `picks`.
fn reduce_in_order(mut ls: Vec<Letter>, picks: &[usize]) -> Vec<Letter> {
    let mut pick = picks.iter().cycle();
    loop {
        let spots: Vec<usize> = (0..ls.len().saturating_sub(1))
            .filter(|&i| ls[i].generator == ls[i + 1].generator && ls[i].inverted != ls[i + 1].inverted)
            .collect();
        if spots.is_empty() {
            return ls;
        }
        let i = spots[pick.next().copied().unwrap_or(0) % spots.len()];
        ls.drain(i..i + 2);
    }
}

fn group_ring_element(rank: usize) -> impl Strategy<Value = GroupRingElement> {
    prop::collection::vec((-3i64..=3, word(rank, 8)), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(GroupRingElement::zero(rank), |acc, (c, w)| &acc + &GroupRingElement::term(c, w))
    })
}

fn matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_rows, 0..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r).prop_map(move |rows| {
            if rows.is_empty() {
                IntMatrix::zeros(0, c)
            } else {
                IntMatrix::from_rows(&rows)
            }
        })
    })
}

proptest! {
    #![proptest_config(config(600))]

    #[test]
    fn reduction_is_confluent(ls in letters(3, 40), picks in prop::collection::vec(0usize..7, 1..10)) {
        let w = Word::from_letters(3, ls.clone()).unwrap();
        prop_assert_eq!(w.letters(), &reduce_in_order(ls, &picks)[..]);
        // idempotent
        prop_assert_eq!(Word::from_letters(3, w.letters().iter().copied()).unwrap(), w);
    }

    #[test]
    fn multiplication_is_associative(a in word(3, 15), b in word(3, 15), c in word(3, 15)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a * &a.inverse()).is_identity());
        prop_assert_eq!(a.inverse().inverse(), a);
    }

    #[test]
    fn fox_product_rule(u in word(3, 30), v in word(3, 30), g in 0usize..3) {
        let g = Generator(g);
        let lhs = fox_derivative(&(&u * &v), g).unwrap();
        let rhs = &fox_derivative(&u, g).unwrap() + &fox_derivative(&v, g).unwrap().left_mul_word(&u);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn abelianize_is_multiplicative(a in group_ring_element(3), b in group_ring_element(3),
                                    weights in prop::collection::vec(-2i64..=2, 3)) {
        let lhs = (&a * &b).abelianize(&weights).unwrap();
        let rhs = &a.abelianize(&weights).unwrap() * &b.abelianize(&weights).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetric_second_derivative_is_even(half in prop::collection::vec(-5i64..=5, 0..6), middle in -5i64..=5) {
        let mut p = LaurentPoly::monomial(middle, 0);
        for (i, &c) in half.iter().enumerate() {
            let e = i as i64 + 1;
            p = &p + &(&LaurentPoly::monomial(c, e) + &LaurentPoly::monomial(c, -e));
        }
        prop_assert!(p.second_derivative_at_one().is_even());
    }

    #[test]
    fn smith_normal_form_is_correct(m in matrix(4, 5, 6)) {
        let snf = smith_normal_form(&m);
        prop_assert_eq!(&(&snf.u * &m) * &snf.v, snf.d.clone());
        prop_assert!(snf.u.determinant().unwrap().abs().is_one());
        prop_assert!(snf.v.determinant().unwrap().abs().is_one());
        prop_assert!(snf.d.is_diagonal());
        let n = m.rows().min(m.cols());
        let diag: Vec<BigInt> = (0..n).map(|i| snf.d[(i, i)].clone()).collect();
        prop_assert!(diag.iter().all(|d| !d.is_negative()));
        for pair in diag.windows(2) {
            prop_assert!(pair[0].is_zero() && pair[1].is_zero() || (!pair[0].is_zero() && pair[1].is_multiple_of(&pair[0])));
        }
    }

    #[test]
    fn simplification_preserves_abelianization(
        relators in prop::collection::vec(word(3, 8), 0..4)
    ) {
        let p = Presentation::with_default_names(3, relators).unwrap();
        let s = simplify_presentation(&p, 40);
        let summary = |q: &Presentation| {
            let f = smith_normal_form(&q.exponent_matrix()).invariant_factors();
            let free = q.generator_count() - f.len();
            let torsion: Vec<BigInt> = f.into_iter().filter(|d| !d.is_one()).collect();
            (free, torsion)
        };
        prop_assert_eq!(summary(&p), summary(&s.presentation));
        prop_assert!(s.moves <= 40);
    }
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn fox_fundamental_identity(w in word(3, 30)) {
        let rank = 3;
        let one = GroupRingElement::one(rank);
        let mut total = GroupRingElement::zero(rank);
        for g in 0..rank {
            let gen = GroupRingElement::from_word(Word::generator(rank, g).unwrap());
            total = &total + &(&fox_derivative(&w, Generator(g)).unwrap() * &(&gen - &one));
        }
        prop_assert_eq!(total, &GroupRingElement::from_word(w) - &one);
    }
}
