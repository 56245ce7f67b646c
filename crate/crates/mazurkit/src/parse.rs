//! Group presentations, words and Laurent polynomials. The grammar lives in
//! `grammar.pest` next to this file.

use mazurkit_core::algebra::{LaurentPoly, Presentation, Word};
use num_bigint::BigInt;
use pest::iterators::Pair;
use pest::Parser;
use pest_derive::Parser;

use crate::ParseError;

#[derive(Parser)]
#[grammar = "grammar.pest"]
pub(crate) struct Grammar;

/// Largest accepted `|k|` in a word power `w^k`.
pub const MAX_WORD_EXPONENT: i64 = 1 << 20;

pub(crate) fn parse_rule(rule: Rule, text: &str) -> Result<Pair<'_, Rule>, ParseError> {
    let mut pairs = Grammar::parse(rule, text)?;
    Ok(pairs.next().expect("start rule matched"))
}

pub(crate) fn integer(pair: &Pair<'_, Rule>) -> Result<i64, ParseError> {
    pair.as_str().parse().map_err(|_| ParseError::at(pair, format!("integer `{}` out of range", pair.as_str())))
}

/// `x1 .. xn`, the names used when a presentation carries none.
pub fn default_names(rank: usize) -> Vec<String> {
    (1..=rank).map(|i| format!("x{i}")).collect()
}

/// `gens | relators`, e.g. `x y | (x y)^2 x (x y)^-2 y^-1`.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let top = parse_rule(Rule::presentation, text)?;
    let mut names: Vec<String> = Vec::new();
    let mut relators = Vec::new();
    for part in top.into_inner() {
        match part.as_rule() {
            Rule::generator_names => {
                for id in part.into_inner() {
                    if names.iter().any(|n| n == id.as_str()) {
                        return Err(ParseError::at(&id, format!("duplicate generator `{}`", id.as_str())));
                    }
                    names.push(id.as_str().to_owned());
                }
            }
            Rule::relators => {
                for w in part.into_inner() {
                    relators.push(word(w, &names)?);
                }
            }
            _ => {}
        }
    }
    Ok(Presentation::new(names, relators).expect("relators are built over the declared generators"))
}

/// A single word over the given generator names.
pub fn parse_word<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Word, ParseError> {
    let top = parse_rule(Rule::word_input, text)?;
    word(top.into_inner().next().expect("word"), names)
}

fn word<S: AsRef<str>>(pair: Pair<'_, Rule>, names: &[S]) -> Result<Word, ParseError> {
    let mut w = Word::identity(names.len());
    for power in pair.into_inner().filter(|p| p.as_rule() == Rule::power) {
        let mut inner = power.into_inner();
        let atom = inner.next().expect("atom").into_inner().next().expect("atom body");
        let base = match atom.as_rule() {
            Rule::ident => {
                let index = names
                    .iter()
                    .position(|n| n.as_ref() == atom.as_str())
                    .ok_or_else(|| ParseError::at(&atom, format!("unknown generator `{}`", atom.as_str())))?;
                Word::generator(names.len(), index).expect("index in range")
            }
            _ => word(atom, names)?,
        };
        let k = match inner.next() {
            Some(e) => {
                let k = integer(&e)?;
                if k.abs() > MAX_WORD_EXPONENT {
                    return Err(ParseError::at(&e, format!("exponent {k} exceeds {MAX_WORD_EXPONENT}")));
                }
                k
            }
            None => 1,
        };
        w = &w * &base.pow(k);
    }
    Ok(w)
}

/// Laurent polynomial in `t`, in the form produced by its `Display`.
pub fn parse_laurent(text: &str) -> Result<LaurentPoly, ParseError> {
    let top = parse_rule(Rule::laurent, text)?;
    let mut p = LaurentPoly::zero();
    let mut negative = false;
    for part in top.into_inner() {
        match part.as_rule() {
            Rule::sign => negative = part.as_str() == "-",
            Rule::monomial => {
                let mut coefficient = BigInt::from(1);
                let mut exponent = 0;
                for piece in part.into_inner() {
                    match piece.as_rule() {
                        Rule::coefficient => coefficient = piece.as_str().parse().expect("digits"),
                        _ => {
                            exponent = match piece.into_inner().next() {
                                Some(e) => integer(&e)?,
                                None => 1,
                            }
                        }
                    }
                }
                if negative {
                    coefficient = -coefficient;
                }
                p.add_term(exponent, coefficient);
                negative = false;
            }
            _ => {}
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ribbon_relator() {
        let p = parse_presentation("x y | (x y)^2 x (x y)^-2 y^-1").unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p, mazurkit_core::knot::ribbon_presentation(2));
    }

    #[test]
    fn free_group() {
        let p = parse_presentation("x |").unwrap();
        assert_eq!(p.generator_count(), 1);
        assert!(p.relators().is_empty());
        assert_eq!(parse_presentation("|").unwrap().generator_count(), 0);
    }

    #[test]
    fn stray_parenthesis() {
        let e = parse_presentation("x |)").unwrap_err();
        assert_eq!((e.line, e.column), (1, 4));
    }

    #[test]
    fn unknown_and_duplicate_generators() {
        let e = parse_presentation("x y | x z").unwrap_err();
        assert_eq!((e.column, e.message.as_str()), (9, "unknown generator `z`"));
        let e = parse_presentation("x y x | x").unwrap_err();
        assert_eq!(e.column, 5);
        assert!(parse_presentation("x | xx").is_err());
    }

    #[test]
    fn identity_and_nesting() {
        let names = ["a", "b"];
        assert!(parse_word("1", &names).unwrap().is_identity());
        assert!(parse_word("a b b^-1 a^-1", &names).unwrap().is_identity());
        let w = parse_word("((a b)^2 a)^-1", &names).unwrap();
        assert_eq!(w.to_string(), "x1^-1 x2^-1 x1^-1 x2^-1 x1^-1");
        assert!(parse_word("a^99999999999999999999", &names).is_err());
        assert!(parse_word("a^2000000", &names).is_err());
    }

    #[test]
    fn error_positions_span_lines() {
        let e = parse_presentation("x y |\n  x y,\n  x ^ ^").unwrap_err();
        assert_eq!((e.line, e.column), (3, 7));
    }

    #[test]
    fn laurent_forms() {
        let p = parse_laurent("t^-2 - 2t^-1 + 3 - 2t + t^2").unwrap();
        assert_eq!(p, LaurentPoly::from_coefficients(-2, &[1, -2, 3, -2, 1]));
        assert_eq!(parse_laurent("-t^3").unwrap(), LaurentPoly::from_coefficients(3, &[-1]));
        assert_eq!(parse_laurent("2*t + t").unwrap(), LaurentPoly::from_coefficients(1, &[3]));
        assert!(parse_laurent("t - t").unwrap().is_zero());
        assert!(parse_laurent("0").unwrap().is_zero());
        assert!(parse_laurent("x").is_err());
        assert!(parse_laurent("t t").is_err());
    }

    #[test]
    fn laurent_display_round_trip() {
        for text in ["0", "1", "-t^3", "1 - t + t^2", "t^-2 - 2t^-1 + 3 - 2t + t^2", "-5t^-7 + 12t^40"] {
            assert_eq!(parse_laurent(text).unwrap().to_string(), text);
        }
    }
}
