//! The `X_n` verification pipeline and its JSON and text reports.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use mazurkit_core::algebra::{simplify_presentation, Verdict};
use mazurkit_core::knot::{
    alexander_from_presentation, casson_surgery, family_invariants, fox_milnor_compose, ribbon_presentation,
};
use mazurkit_core::lefschetz::{allowable, boundary_is_homology_sphere, homology, pi1_presentation, FamilyFixture};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::Error;

/// Move budget handed to the presentation simplifier.
pub const PI1_BUDGET: usize = 1_000;

/// Homology summary of a point.
pub const POINT_HOMOLOGY: &str = "Z,0,0";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReportRow {
    pub n: u32,
    pub allowable: bool,
    /// `H_0,H_1,H_2`, e.g. `Z,0,0`.
    pub homology: String,
    pub euler_characteristic: i64,
    /// `trivial` when the simplifier reached the empty presentation,
    /// `unknown` otherwise.
    pub pi1_verdict: String,
    /// Alexander polynomial of the ribbon disk.
    pub f: String,
    /// Normalized Alexander polynomial of the boundary knot.
    pub delta: String,
    pub delta_second_derivative: i64,
    /// Casson invariant of the boundary.
    pub casson: i64,
    pub closed_form_match: bool,
    pub boundary_homology_sphere: bool,
}

impl FamilyReportRow {
    pub fn passed(&self) -> bool {
        self.allowable && self.homology == POINT_HOMOLOGY && self.closed_form_match
    }
}

/// Everything needed to reproduce the rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub fiber: String,
    pub basepoint: String,
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    pub monodromy: String,
    pub composition: String,
    pub twist_direction: String,
    pub ribbon_group: String,
    pub casson: String,
    pub pi1_budget: usize,
}

impl Conventions {
    pub fn new(fixture: &FamilyFixture) -> Self {
        Conventions {
            fiber: FamilyFixture::surface().to_string(),
            basepoint: "on the outer boundary; x_i loops once around hole i, x_1 x_2 ... x_{r-1} is the outer boundary"
                .into(),
            alpha: fixture.alpha.to_string(),
            beta: fixture.beta.to_string(),
            gamma: fixture.gamma.to_string(),
            monodromy: "(t_alpha, t_beta, t_gamma_n) with gamma_n = (t_gamma t_beta)^n (gamma)".into(),
            composition: "functional: (f g)(w) = f(g(w)); total monodromy t_c1 t_c2 ... t_cm".into(),
            twist_direction: "positive twist about a curve with word c sends each enclosed x_k to c x_k c^-1".into(),
            ribbon_group: "<x, y | (x y)^n x (x y)^-n y^-1>, x, y -> t".into(),
            casson: "lambda(S^3) = 0; boundary is +1 surgery on K_n".into(),
            pi1_budget: PI1_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub n_max: u32,
    pub conventions: Conventions,
    pub rows: Vec<FamilyReportRow>,
    pub casson_values_distinct: bool,
    pub casson_values_nonzero: bool,
    /// Distinct Casson invariants of homology spheres.
    pub boundaries_pairwise_non_homeomorphic: bool,
    /// Nonzero Casson invariants of homology spheres.
    pub no_boundary_is_s3: bool,
    /// `n` of every row that failed its checks.
    pub failed: Vec<u32>,
    pub passed: bool,
}

fn small(n: u32, quantity: &'static str, v: &BigInt) -> Result<i64, Error> {
    v.to_i64().ok_or(Error::Overflow { n, quantity })
}

fn row(fixture: &FamilyFixture, n: u32) -> Result<FamilyReportRow, Error> {
    let spec = fixture.family(n)?;
    let h = homology(&spec);
    let verdict = match simplify_presentation(&pi1_presentation(&spec), PI1_BUDGET).verdict {
        Verdict::Trivial => "trivial",
        Verdict::Unknown => "unknown",
    };
    let (f, delta, second, casson, closed_form_match) = match family_invariants(n) {
        Ok(inv) => (inv.f, inv.delta, inv.second_derivative, inv.casson, true),
        Err(_) => {
            let f = alexander_from_presentation(&ribbon_presentation(n), &[1, 1])?;
            let delta = fox_milnor_compose(&f)?;
            let casson = casson_surgery(&BigInt::zero(), &BigInt::from(1), &delta)?;
            (f, delta.clone(), delta.second_derivative_at_one(), casson, false)
        }
    };
    Ok(FamilyReportRow {
        n,
        allowable: allowable(&spec).is_ok(),
        homology: h.to_string(),
        euler_characteristic: h.euler_characteristic,
        pi1_verdict: verdict.into(),
        f: f.to_string(),
        delta: delta.to_string(),
        delta_second_derivative: small(n, "Δ''(1)", &second)?,
        casson: small(n, "λ", &casson.0)?,
        closed_form_match,
        boundary_homology_sphere: boundary_is_homology_sphere(&spec),
    })
}

/// Builds and checks `X_1 .. X_{n_max}` from `fixture`. Rows are in order
/// of `n`; an empty range gives an empty, passing report.
pub fn run_family_report(fixture: &FamilyFixture, n_max: u32) -> Result<FamilyReport, Error> {
    let rows = (1..=n_max).map(|n| row(fixture, n)).collect::<Result<Vec<_>, _>>()?;
    let values: BTreeSet<i64> = rows.iter().map(|r| r.casson).collect();
    let casson_values_distinct = values.len() == rows.len();
    let casson_values_nonzero = rows.iter().all(|r| r.casson != 0);
    let spheres = rows.iter().all(|r| r.boundary_homology_sphere);
    let failed: Vec<u32> = rows.iter().filter(|r| !r.passed()).map(|r| r.n).collect();
    let passed = failed.is_empty() && casson_values_distinct && casson_values_nonzero;
    Ok(FamilyReport {
        n_max,
        conventions: Conventions::new(fixture),
        rows,
        casson_values_distinct,
        casson_values_nonzero,
        boundaries_pairwise_non_homeomorphic: spheres && casson_values_distinct,
        no_boundary_is_s3: spheres && casson_values_nonzero,
        failed,
        passed,
    })
}

impl FamilyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.conventions;
        writeln!(f, "family X_n, n = 1..{}", self.n_max)?;
        writeln!(f, "fiber {}, alpha = {}, beta = {}, gamma = {}", c.fiber, c.alpha, c.beta, c.gamma)?;
        writeln!(f, "monodromy {}", c.monodromy)?;
        writeln!(f, "composition {}", c.composition)?;
        writeln!(f, "twists: {}", c.twist_direction)?;
        writeln!(f, "basepoint {}", c.basepoint)?;
        for r in &self.rows {
            writeln!(f)?;
            writeln!(
                f,
                "n = {}: allowable {}, H_* = {}, chi = {}, pi1 {}, boundary homology sphere {}, closed forms {}",
                r.n,
                yes(r.allowable),
                r.homology,
                r.euler_characteristic,
                r.pi1_verdict,
                yes(r.boundary_homology_sphere),
                if r.closed_form_match { "match" } else { "MISMATCH" },
            )?;
            writeln!(f, "  f(t)       = {}", r.f)?;
            writeln!(f, "  Delta(t)   = {}", r.delta)?;
            writeln!(f, "  Delta''(1) = {}", r.delta_second_derivative)?;
            writeln!(f, "  lambda     = {}", r.casson)?;
        }
        writeln!(f)?;
        writeln!(f, "Casson invariants pairwise distinct: {}", yes(self.casson_values_distinct))?;
        writeln!(f, "Casson invariants nonzero: {}", yes(self.casson_values_nonzero))?;
        writeln!(f, "boundaries pairwise non-homeomorphic: {}", yes(self.boundaries_pairwise_non_homeomorphic))?;
        writeln!(f, "no boundary is S^3: {}", yes(self.no_boundary_is_s3))?;
        if self.passed {
            write!(f, "result: PASS")
        } else {
            let mut failed = String::new();
            for (i, n) in self.failed.iter().enumerate() {
                let _ = write!(failed, "{}{n}", if i == 0 { "" } else { ", " });
            }
            write!(f, "result: FAIL (n = {failed})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mazurkit_core::lefschetz::CurveSpec;

    #[test]
    fn second_row() {
        let r = run_family_report(&FamilyFixture::calibrated(), 2).unwrap();
        assert!(r.passed);
        assert_eq!((r.rows[1].delta_second_derivative, r.rows[1].casson), (12, 6));
        assert_eq!(r.rows[1].f, "1 - t + t^2 - t^3 + t^4");
    }

    #[test]
    fn first_row() {
        let r = run_family_report(&FamilyFixture::calibrated(), 1).unwrap();
        let row = &r.rows[0];
        assert_eq!(row.homology, "Z,0,0");
        assert_eq!(row.euler_characteristic, 1);
        assert_eq!(row.pi1_verdict, "trivial");
        assert_eq!(row.delta, "t^-2 - 2t^-1 + 3 - 2t + t^2");
    }

    #[test]
    fn corrupted_fixture_fails() {
        let mut fixture = FamilyFixture::calibrated();
        fixture.alpha = CurveSpec::new(&[1, 2], &[]);
        let r = run_family_report(&fixture, 3).unwrap();
        assert!(!r.passed);
        assert_eq!(r.failed, vec![1, 2, 3]);
        assert!(r.to_string().ends_with("result: FAIL (n = 1, 2, 3)"));
        assert_eq!(r.conventions.alpha, "std{1,2}");
    }

    #[test]
    fn json_round_trip() {
        let r = run_family_report(&FamilyFixture::calibrated(), 3).unwrap();
        let json = r.to_json();
        assert!(json.contains("\"rows\"") && json.contains("\"conventions\""));
        assert_eq!(FamilyReport::from_json(&json).unwrap(), r);
    }
}
