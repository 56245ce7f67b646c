mod common;

use common::config;
use mazurkit::monodromy::{parse_curve_spec, parse_mapping_class, parse_monodromy};
use mazurkit::parse::{parse_laurent, parse_presentation, parse_word};
use mazurkit::report::{Conventions, FamilyReport, FamilyReportRow};
use mazurkit_core::algebra::{LaurentPoly, Letter, Presentation, Word};
use mazurkit_core::lefschetz::{CurveSpec, FamilyFixture};
use mazurkit_core::surface::{MappingClass, PlanarSurface, Side};
use num_bigint::BigInt;
use proptest::prelude::*;

const POOL: [&str; 6] = ["x", "y", "z_1", "gen2", "A", "b_"];

fn reduced_word(rank: usize, max_len: usize) -> BoxedStrategy<Word> {
    if rank == 0 {
        return Just(Word::identity(0)).boxed();
    }
    prop::collection::vec((0..rank, any::<bool>()), 0..=max_len)
        .prop_map(move |ls| Word::from_letters(rank, ls.into_iter().map(|(g, inv)| Letter::new(g, inv))).unwrap())
        .boxed()
}

fn presentation() -> impl Strategy<Value = Presentation> {
    (0..=POOL.len()).prop_flat_map(|rank| {
        prop::collection::vec(reduced_word(rank, 10), 0..4).prop_map(move |relators| {
            Presentation::new(POOL[..rank].iter().map(|s| s.to_string()).collect(), relators).unwrap()
        })
    })
}

/// A word expression with its value computed directly.
#[derive(Clone, Debug)]
enum Expr {
    Gen(usize),
    One,
    Power(Box<Expr>, i64),
    Product(Vec<Expr>),
}

impl Expr {
    fn text(&self) -> String {
        match self {
            Expr::Gen(i) => POOL[*i].to_string(),
            Expr::One => "1".into(),
            Expr::Power(e, k) => format!("({})^{k}", e.text()),
            Expr::Product(es) => es.iter().map(|e| format!("({})", e.text())).collect::<Vec<_>>().join(" "),
        }
    }

    fn value(&self, rank: usize) -> Word {
        match self {
            Expr::Gen(i) => Word::generator(rank, *i).unwrap(),
            Expr::One => Word::identity(rank),
            Expr::Power(e, k) => e.value(rank).pow(*k),
            Expr::Product(es) => es.iter().fold(Word::identity(rank), |acc, e| &acc * &e.value(rank)),
        }
    }
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![(0..3usize).prop_map(Expr::Gen), Just(Expr::One)];
    leaf.prop_recursive(4, 24, 4, |inner| {
        prop_oneof![
            (inner.clone(), -3i64..=3).prop_map(|(e, k)| Expr::Power(Box::new(e), k)),
            prop::collection::vec(inner, 1..4).prop_map(Expr::Product),
        ]
    })
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-8i64..=8, -1000i64..=1000), 0..8)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

/// Proper hole sets of S(0,6) with sides for skipped holes.
fn curve_spec() -> impl Strategy<Value = CurveSpec> {
    prop::collection::btree_set(1u32..=6, 1..=5).prop_flat_map(|holes| {
        let holes: Vec<u32> = holes.into_iter().collect();
        let skipped = (holes[0]..=*holes.last().unwrap()).filter(|h| !holes.contains(h)).count();
        let enclosed = if holes.contains(&6) {
            (1..=6).filter(|h| !holes.contains(h)).collect::<Vec<u32>>()
        } else {
            holes.clone()
        };
        let skipped_in_complement = match enclosed.as_slice() {
            [first, .., last] => (*first..=*last).filter(|h| !enclosed.contains(h)).count(),
            _ => 0,
        };
        let sides = if holes.contains(&6) { skipped_in_complement } else { skipped };
        prop::collection::vec(prop_oneof![Just(Side::Near), Just(Side::Far)], sides)
            .prop_map(move |sides| CurveSpec::new(&holes, &sides))
    })
}

fn text_field() -> impl Strategy<Value = String> {
    prop_oneof![any::<String>(), "[a-z0-9 ^+-]{0,30}".prop_map(String::from)]
}

fn row() -> impl Strategy<Value = FamilyReportRow> {
    (
        (any::<u32>(), any::<bool>(), text_field(), any::<i64>(), text_field()),
        (text_field(), text_field(), any::<i64>(), any::<i64>(), any::<bool>(), any::<bool>()),
    )
        .prop_map(|((n, allowable, homology, chi, verdict), (f, delta, second, casson, matched, sphere))| {
            FamilyReportRow {
                n,
                allowable,
                homology,
                euler_characteristic: chi,
                pi1_verdict: verdict,
                f,
                delta,
                delta_second_derivative: second,
                casson,
                closed_form_match: matched,
                boundary_homology_sphere: sphere,
            }
        })
}

proptest! {
    #![proptest_config(config(500))]

    #[test]
    fn presentation_print_parse_identity(p in presentation()) {
        let text = p.to_string();
        let back = parse_presentation(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn word_grammar_evaluates_expressions(e in expr()) {
        let parsed = parse_word(&e.text(), &POOL[..3]).unwrap();
        prop_assert_eq!(parsed, e.value(3));
    }

    #[test]
    fn word_print_parse_identity(w in reduced_word(4, 20)) {
        let names = ["x1", "x2", "x3", "x4"];
        prop_assert_eq!(parse_word(&w.to_string(), &names).unwrap(), w);
    }

    #[test]
    fn laurent_print_parse_identity(p in laurent()) {
        let text = p.to_string();
        let back = parse_laurent(&text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn laurent_explicit_products(terms in prop::collection::vec((-6i64..=6, 1i64..=50, any::<bool>()), 1..6)) {
        let mut text = String::new();
        let mut expected = LaurentPoly::zero();
        for (i, (e, c, negative)) in terms.iter().enumerate() {
            let sign = if *negative { "-" } else if i > 0 { "+" } else { "" };
            text += &format!(" {sign} {c} * t^{e}");
            expected = &expected + &LaurentPoly::monomial(if *negative { -c } else { *c }, *e);
        }
        prop_assert_eq!(parse_laurent(&text).unwrap(), expected);
    }

    #[test]
    fn curve_spec_print_parse_identity(spec in curve_spec()) {
        let s = PlanarSurface::new(6).unwrap();
        let text = spec.to_string();
        prop_assert_eq!(parse_curve_spec(s, &text).unwrap(), spec.clone());
        let palf = parse_monodromy(&format!("S(0,6); T {text}")).unwrap();
        let expected = spec.build(s).unwrap();
        prop_assert_eq!(palf.vanishing_cycles[0].word(), expected.word());
    }

    #[test]
    fn map_expressions_compose_functionally(factors in prop::collection::vec((curve_spec(), -2i64..=2), 1..4)) {
        let s = PlanarSurface::new(6).unwrap();
        let text: Vec<String> = factors.iter().map(|(c, k)| format!("(T {c})^{k}")).collect();
        let expected = factors.iter().fold(MappingClass::identity(s), |acc, (c, k)| {
            acc.compose(&c.build(s).unwrap().twist().unwrap().pow(*k)).unwrap()
        });
        prop_assert_eq!(parse_mapping_class(s, &text.join(" ")).unwrap(), expected);
    }

    #[test]
    fn report_json_round_trip(rows in prop::collection::vec(row(), 0..5), flags in any::<[bool; 5]>(), n_max in any::<u32>()) {
        let report = FamilyReport {
            n_max,
            conventions: Conventions::new(&FamilyFixture::calibrated()),
            failed: rows.iter().map(|r| r.n).collect(),
            rows,
            casson_values_distinct: flags[0],
            casson_values_nonzero: flags[1],
            boundaries_pairwise_non_homeomorphic: flags[2],
            no_boundary_is_s3: flags[3],
            passed: flags[4],
        };
        prop_assert_eq!(FamilyReport::from_json(&report.to_json()).unwrap(), report);
    }
}
