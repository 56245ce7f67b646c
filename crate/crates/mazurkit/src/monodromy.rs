//! Monodromy files and mapping-class expressions; see `grammar.pest`.

use std::collections::HashMap;

use mazurkit_core::lefschetz::{CurveSpec, FamilyFixture, PalfSpec};
use mazurkit_core::surface::{standard_curve, Curve, MappingClass, PlanarSurface, Side};
use pest::iterators::Pair;

use crate::parse::{integer, parse_rule, Rule};
use crate::ParseError;

/// Largest accepted `|k|` in a mapping-class power `(m)^k`.
pub const MAX_MAP_EXPONENT: i64 = 64;

struct Scope {
    surface: PlanarSurface,
    curves: HashMap<String, Curve>,
}

impl Scope {
    fn core<T>(pair: &Pair<'_, Rule>, r: mazurkit_core::Result<T>) -> Result<T, ParseError> {
        r.map_err(|e| ParseError::at(pair, e.to_string()))
    }

    fn curve(&self, pair: Pair<'_, Rule>) -> Result<Curve, ParseError> {
        let body = pair.into_inner().next().expect("curve body");
        match body.as_rule() {
            Rule::standard_curve => {
                let spec = curve_spec(body.clone())?;
                Self::core(&body, standard_curve(self.surface, &spec.holes, &spec.sides))
            }
            Rule::image_curve => {
                let mut inner = body.clone().into_inner();
                let map = self.map_expr(inner.next().expect("map"))?;
                let base = self.curve(inner.next().expect("curve"))?;
                Self::core(&body, map.apply_curve(&base))
            }
            _ => self
                .curves
                .get(body.as_str())
                .cloned()
                .ok_or_else(|| ParseError::at(&body, format!("unknown curve `{}`", body.as_str()))),
        }
    }

    /// Factors compose as functions: `A B` is `A ∘ B`.
    fn map_expr(&self, pair: Pair<'_, Rule>) -> Result<MappingClass, ParseError> {
        let mut acc = MappingClass::identity(self.surface);
        for factor in pair.into_inner() {
            let mut inner = factor.clone().into_inner();
            let head = inner.next().expect("factor head");
            let mut m = match head.as_rule() {
                Rule::twist_factor => {
                    let c = self.curve(head.clone().into_inner().next().expect("curve"))?;
                    Self::core(&head, c.twist())?
                }
                _ => self.map_expr(head.into_inner().next().expect("group body"))?,
            };
            if let Some(e) = inner.next() {
                let k = integer(&e)?;
                if k.abs() > MAX_MAP_EXPONENT {
                    return Err(ParseError::at(&e, format!("exponent {k} exceeds {MAX_MAP_EXPONENT}")));
                }
                m = m.pow(k);
            }
            acc = Self::core(&factor, acc.compose(&m))?;
        }
        Ok(acc)
    }
}

fn curve_spec(pair: Pair<'_, Rule>) -> Result<CurveSpec, ParseError> {
    let mut spec = CurveSpec::new(&[], &[]);
    for part in pair.into_inner() {
        for item in part.into_inner() {
            match item.as_rule() {
                Rule::natural => spec.holes.push(
                    item.as_str()
                        .parse()
                        .map_err(|_| ParseError::at(&item, format!("hole `{}` out of range", item.as_str())))?,
                ),
                _ => spec.sides.push(if item.as_str() == "near" { Side::Near } else { Side::Far }),
            }
        }
    }
    Ok(spec)
}

/// `std{..}` text, checked against `surface`.
pub fn parse_curve_spec(surface: PlanarSurface, text: &str) -> Result<CurveSpec, ParseError> {
    let top = parse_rule(Rule::curve_spec_input, text)?;
    let body = top.into_inner().next().expect("curve");
    let spec = curve_spec(body.clone())?;
    spec.build(surface).map_err(|e| ParseError::at(&body, e.to_string()))?;
    Ok(spec)
}

fn surface(pair: Pair<'_, Rule>) -> Result<PlanarSurface, ParseError> {
    let holes = pair.into_inner().next().expect("hole count");
    let r = holes.as_str().parse().map_err(|_| ParseError::at(&holes, "hole count out of range"))?;
    PlanarSurface::new(r).map_err(|e| ParseError::at(&holes, e.to_string()))
}

/// `S(0,r)`.
pub fn parse_surface(text: &str) -> Result<PlanarSurface, ParseError> {
    surface(parse_rule(Rule::surface_input, text)?.into_inner().next().expect("surface"))
}

/// A mapping-class expression such as `(T std{1,2} T std{2,3})^2`, with no
/// named curves in scope.
pub fn parse_mapping_class(surface: PlanarSurface, text: &str) -> Result<MappingClass, ParseError> {
    let top = parse_rule(Rule::map_input, text)?;
    Scope { surface, curves: HashMap::new() }.map_expr(top.into_inner().next().expect("map"))
}

/// A monodromy file: surface header, then `let` bindings and twists in
/// factorization order.
pub fn parse_monodromy(text: &str) -> Result<PalfSpec, ParseError> {
    let mut parts = parse_rule(Rule::monodromy, text)?.into_inner();
    let mut scope = Scope { surface: surface(parts.next().expect("header"))?, curves: HashMap::new() };
    let mut cycles = Vec::new();
    for statement in parts.filter(|p| p.as_rule() == Rule::statement) {
        let s = statement.into_inner().next().expect("statement body");
        match s.as_rule() {
            Rule::let_statement => {
                let mut inner = s.into_inner();
                let name = inner.next().expect("name").as_str().to_owned();
                let c = scope.curve(inner.next().expect("curve"))?;
                scope.curves.insert(name, c);
            }
            _ => cycles.push(scope.curve(s.into_inner().next().expect("curve"))?),
        }
    }
    Ok(PalfSpec::new(scope.surface, cycles).expect("curves are built on the declared surface"))
}

/// Monodromy file describing `X_n` for the given fixture.
pub fn family_source(fixture: &FamilyFixture, n: u32) -> String {
    format!(
        "# X_{n}: vanishing cycles alpha, beta, gamma_{n} = (t_gamma t_beta)^{n} (gamma)\n\
         S(0,{holes});\n\
         let alpha = {a};\n\
         let beta = {b};\n\
         let gamma = {g};\n\
         T alpha;\n\
         T beta;\n\
         T apply((Tgamma Tbeta)^{n}, gamma);\n",
        holes = FamilyFixture::surface().holes(),
        a = fixture.alpha,
        b = fixture.beta,
        g = fixture.gamma,
    )
}
