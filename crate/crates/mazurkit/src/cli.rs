//! Command-line front end. Exit status 0 means every check passed, 1 a
//! verification failure, 2 a usage or parse error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use mazurkit_core::algebra::{simplify_presentation, Verdict};
use mazurkit_core::knot::{alexander_from_presentation, casson_surgery, NormalizedAlexander};
use mazurkit_core::lefschetz::{
    allowable, boundary_is_homology_sphere, homology, pi1_presentation, total_monodromy, FamilyFixture, PalfSpec,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::monodromy::{parse_curve_spec, parse_mapping_class, parse_monodromy, parse_surface};
use crate::parse::{default_names, parse_laurent, parse_presentation, parse_word};
use crate::report::{run_family_report, PI1_BUDGET};
use crate::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "mazurkit", version, about = "Exact invariants of planar Lefschetz fibrations and ribbon knots")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build X_1 .. X_N and check homology, allowability and the knot invariants.
    Family {
        #[arg(long = "n-max", value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long)]
        json: bool,
        /// Replace the fixture curve alpha, e.g. `std{1}`.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Analyze a monodromy file.
    Palf {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Alexander polynomial of a deficiency-one presentation.
    Alexander {
        #[arg(long)]
        presentation: String,
        /// Image exponent of each generator under abelianization; all 1 by default.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        weights: Option<Vec<i64>>,
    },
    /// Casson invariant of 1/m surgery on a knot with the given Alexander polynomial.
    Casson {
        #[arg(long)]
        delta: String,
        #[arg(long, allow_negative_numbers = true)]
        m: BigInt,
        #[arg(long, allow_negative_numbers = true, default_value = "0")]
        lambda0: BigInt,
    },
    /// Action of a mapping-class expression on pi_1 of the fiber.
    Twist {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        expr: String,
        /// Print the image of this word instead of the generator images.
        #[arg(long)]
        word: Option<String>,
    },
}

/// Summary printed by `palf`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PalfReport {
    pub fiber: String,
    pub vanishing_cycles: Vec<String>,
    pub classes: Vec<Vec<i64>>,
    pub allowable: bool,
    pub homology: String,
    pub euler_characteristic: i64,
    pub boundary_homology_sphere: bool,
    pub pi1: String,
    pub pi1_verdict: String,
    pub total_monodromy: String,
}

impl PalfReport {
    pub fn new(spec: &PalfSpec) -> Result<Self, Error> {
        let h = homology(spec);
        let p = pi1_presentation(spec);
        let verdict = simplify_presentation(&p, PI1_BUDGET).verdict;
        Ok(PalfReport {
            fiber: spec.fiber.to_string(),
            vanishing_cycles: spec.vanishing_cycles.iter().map(|c| c.word().to_string()).collect(),
            classes: spec.vanishing_cycles.iter().map(|c| c.class()).collect(),
            allowable: allowable(spec).is_ok(),
            homology: h.to_string(),
            euler_characteristic: h.euler_characteristic,
            boundary_homology_sphere: boundary_is_homology_sphere(spec),
            pi1: p.to_string(),
            pi1_verdict: if verdict == Verdict::Trivial { "trivial" } else { "unknown" }.into(),
            total_monodromy: total_monodromy(spec)?.to_string(),
        })
    }
}

fn status(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io { .. } => EXIT_USAGE,
        Error::Core(_) | Error::Overflow { .. } => EXIT_FAIL,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            status(&e)
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    let io = |e: std::io::Error| Error::Io { path: "<stdout>".into(), source: e };
    match command {
        Command::Family { n_max, json, alpha, beta, gamma } => {
            let mut fixture = FamilyFixture::calibrated();
            let s = FamilyFixture::surface();
            for (text, slot) in [(alpha, &mut fixture.alpha), (beta, &mut fixture.beta), (gamma, &mut fixture.gamma)] {
                if let Some(text) = text {
                    *slot = parse_curve_spec(s, &text)?;
                }
            }
            let report = run_family_report(&fixture, n_max)?;
            if json {
                writeln!(out, "{}", report.to_json()).map_err(io)?;
            } else {
                writeln!(out, "{report}").map_err(io)?;
            }
            Ok(if report.passed { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Palf { input, json } => {
            let text = std::fs::read_to_string(&input)
                .map_err(|source| Error::Io { path: input.display().to_string(), source })?;
            let report = PalfReport::new(&parse_monodromy(&text)?)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes")).map_err(io)?;
            } else {
                writeln!(out, "fiber: {}", report.fiber).map_err(io)?;
                for (i, (w, c)) in report.vanishing_cycles.iter().zip(&report.classes).enumerate() {
                    writeln!(out, "cycle {}: {w}  class {c:?}", i + 1).map_err(io)?;
                }
                writeln!(out, "allowable: {}", report.allowable).map_err(io)?;
                writeln!(out, "homology: {}", report.homology).map_err(io)?;
                writeln!(out, "euler characteristic: {}", report.euler_characteristic).map_err(io)?;
                writeln!(out, "boundary homology sphere: {}", report.boundary_homology_sphere).map_err(io)?;
                writeln!(out, "pi1: {}", report.pi1).map_err(io)?;
                writeln!(out, "pi1 verdict: {}", report.pi1_verdict).map_err(io)?;
                writeln!(out, "total monodromy: {}", report.total_monodromy).map_err(io)?;
            }
            Ok(if report.allowable { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Alexander { presentation, weights } => {
            let p = parse_presentation(&presentation)?;
            let weights = weights.unwrap_or_else(|| vec![1; p.generator_count()]);
            let delta = alexander_from_presentation(&p, &weights)?;
            writeln!(out, "{delta}").map_err(io)?;
            if let Ok(symmetric) = NormalizedAlexander::new(&delta) {
                writeln!(out, "symmetric: {symmetric}").map_err(io)?;
            }
            Ok(EXIT_PASS)
        }
        Command::Casson { delta, m, lambda0 } => {
            let delta = NormalizedAlexander::new(&parse_laurent(&delta)?)?;
            writeln!(out, "{}", casson_surgery(&lambda0, &m, &delta)?).map_err(io)?;
            Ok(EXIT_PASS)
        }
        Command::Twist { surface, expr, word } => {
            let surface = parse_surface(&surface)?;
            let map = parse_mapping_class(surface, &expr)?;
            match word {
                Some(w) => {
                    let w = parse_word(&w, &default_names(surface.rank()))?;
                    writeln!(out, "{}", map.apply(&w)?).map_err(io)?;
                }
                None => {
                    for (i, image) in map.images().iter().enumerate() {
                        writeln!(out, "x{} -> {image}", i + 1).map_err(io)?;
                    }
                }
            }
            Ok(EXIT_PASS)
        }
    }
}
