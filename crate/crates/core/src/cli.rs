//! Command-line surface.
//!
//! Every subcommand prints one JSON document (with `schema_version`) to
//! stdout or `--out`, and a one-line summary to stderr.
//!
//! Exit codes: 0 success, 1 no witness or a negative property check,
//! 2 parse or precondition error, 3 resource cap.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::elliptic::{default_base_point, on_curve, scalar_mul, Curve};
use crate::error::{Error, Result};
use crate::groebner::{TermOrder, DEFAULT_MAX_PAIRS};
use crate::lattice::{build_s, first_primes, stabilizer_bruteforce_capped, DEFAULT_ENUMERATION_CAP};
use crate::oracle::{check_equivalence, check_instance, CheckConfig, DEFAULT_BOUND, DEFAULT_EVAL_CAP};
use crate::poly::{parse_with_inferred_registry, Polynomial};
use crate::reducer::{compile_default, four_squares_transform, CompileConfig, InstanceDescriptor, SolvabilityMode, HOMOGENIZING_VAR};
use crate::serial::{CurveDto, PointDto, PolyDto, SmoothingDto, SCHEMA_VERSION};
use crate::smoothing::{smooth_lift, SmoothConfig, DEFAULT_C_MAX};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dioph-reduce", version, about = "Diophantine equations to automorphism orbit problems")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find the least c making c(y^2 - y) + f^2 smooth.
    Smooth {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        smoothing: SmoothingArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Homogenize with a fresh trailing variable.
    Homog {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Replace every variable by a sum of four squares.
    Foursq {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the lattice set S = {0, p_i e_i}.
    LatticeS {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate affine maps with entries in [-bound, bound] stabilizing S.
    StabCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        bound: i64,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        eval_cap: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Multiply the base point of 37a1 by k.
    EcMul {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compile f into an instance descriptor.
    Compile {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "Z")]
        mode: SolvabilityMode,
        #[command(flatten)]
        smoothing: SmoothingArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Search both sides of the equivalence within a box.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Instance JSON written by `compile`.
        #[arg(long, conflicts_with_all = ["f", "file"])]
        instance: Option<PathBuf>,
        #[arg(long)]
        mode: Option<SolvabilityMode>,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: i64,
        #[arg(long, default_value_t = DEFAULT_EVAL_CAP)]
        eval_cap: u64,
        #[command(flatten)]
        smoothing: SmoothingArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Inline polynomial expression.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "file")]
    pub f: Option<String>,
    /// File holding one expression; `#` starts a comment.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SmoothingArgs {
    #[arg(long, default_value_t = DEFAULT_C_MAX)]
    pub c_max: u64,
    #[arg(long, default_value = "grevlex")]
    pub order: TermOrder,
    #[arg(long, default_value_t = DEFAULT_MAX_PAIRS)]
    pub max_pairs: u64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl InputArgs {
    fn read(&self) -> Result<Option<String>> {
        match (&self.f, &self.file) {
            (Some(f), _) => Ok(Some(f.clone())),
            (None, Some(path)) => Ok(Some(strip_comments(&std::fs::read_to_string(path)?))),
            (None, None) => Ok(None),
        }
    }

    fn polynomial(&self) -> Result<Polynomial> {
        let text = self.read()?.ok_or_else(|| Error::InvalidArgument("one of --f or --file is required".into()))?;
        parse_with_inferred_registry(&text)
    }
}

impl SmoothingArgs {
    fn config(&self) -> Result<SmoothConfig> {
        if self.c_max == 0 || self.max_pairs == 0 {
            return Err(Error::InvalidArgument("caps must be positive".into()));
        }
        Ok(SmoothConfig { c_max: self.c_max, order: self.order, max_pairs: self.max_pairs })
    }
}

/// Drops `#` comments and joins the remaining lines.
pub fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|line| line.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(" ")
        .trim()
        .to_string()
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ResourceCap { .. } | Error::CSearchExhausted { .. } => EXIT_RESOURCE,
        Error::StabilizerOutsideG(_) | Error::EquivalenceViolation(_) | Error::InfiniteOrderSanityFailed => {
            EXIT_NEGATIVE
        }
        _ => EXIT_USAGE,
    }
}

struct Outcome {
    json: String,
    summary: String,
    code: i32,
}

impl Outcome {
    fn ok(value: &impl Serialize, summary: String) -> Self {
        Outcome { json: to_pretty(value), summary, code: EXIT_OK }
    }
}

fn to_pretty(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

/// Parses `argv` (including the program name) and runs one subcommand.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let out_path = config.command.out_path().cloned();
    match execute(&config.command) {
        Ok(outcome) => {
            let text = format!("{}\n", outcome.json);
            let written = match &out_path {
                Some(path) => std::fs::write(path, &text).map_err(Error::from),
                None => stdout.write_all(text.as_bytes()).map_err(Error::from),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            let _ = writeln!(stderr, "{}", outcome.summary);
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

impl Command {
    fn out_path(&self) -> Option<&PathBuf> {
        match self {
            Command::Smooth { output, .. }
            | Command::Homog { output, .. }
            | Command::Foursq { output, .. }
            | Command::LatticeS { output, .. }
            | Command::StabCheck { output, .. }
            | Command::EcMul { output, .. }
            | Command::Compile { output, .. }
            | Command::Verify { output, .. } => output.out.as_ref(),
        }
    }
}

fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Smooth { input, smoothing, .. } => {
            let f = input.polynomial()?;
            let r = smooth_lift(&f, &smoothing.config()?)?;
            let summary = format!(
                "c = {}, certificate {{1}}, degree {} -> {}, {} rejected",
                r.c,
                r.degree_in,
                r.degree_out,
                r.rejected.len()
            );
            let mut value = serde_json::to_value(SmoothingDto::from_result(&r)).expect("dto serializes");
            value["schema_version"] = json!(SCHEMA_VERSION);
            Ok(Outcome::ok(&value, summary))
        }
        Command::Homog { input, .. } => {
            let f = input.polynomial()?;
            let var = f.registry().fresh_name(HOMOGENIZING_VAR);
            let h = f.homogenize(&var)?;
            let summary = format!("homogenized with {var}: {h}");
            Ok(Outcome::ok(
                &json!({
                    "schema_version": SCHEMA_VERSION,
                    "input": PolyDto::from_poly(&f),
                    "homogenizing_var": var,
                    "homogenized": PolyDto::from_poly(&h),
                }),
                summary,
            ))
        }
        Command::Foursq { input, .. } => {
            let f = input.polynomial()?;
            let g = four_squares_transform(&f)?;
            let (m, d) = (f.registry().arity(), f.total_degree().finite().unwrap_or(0));
            let (m2, d2) = (g.registry().arity(), g.total_degree().finite().unwrap_or(0));
            let summary = format!("(m, d) = ({m}, {d}) -> ({m2}, {d2})");
            Ok(Outcome::ok(
                &json!({
                    "schema_version": SCHEMA_VERSION,
                    "input": PolyDto::from_poly(&f),
                    "transformed": PolyDto::from_poly(&g),
                    "variables_in": m,
                    "variables_out": m2,
                    "degree_in": d,
                    "degree_out": d2,
                }),
                summary,
            ))
        }
        Command::LatticeS { n, .. } => {
            let s = build_s(*n)?;
            let summary = format!("S has {} points in Z^{n}", s.points.len());
            Ok(Outcome::ok(
                &json!({
                    "schema_version": SCHEMA_VERSION,
                    "n": n,
                    "primes": first_primes(*n),
                    "S": s.points,
                }),
                summary,
            ))
        }
        Command::StabCheck { n, bound, eval_cap, .. } => {
            if *bound < 0 {
                return Err(Error::InvalidArgument("--bound must be non-negative".into()));
            }
            let maps = stabilizer_bruteforce_capped(*n, *bound, *eval_cap)?;
            let g: Vec<_> = maps.iter().filter_map(|m| m.as_g_element()).collect();
            let summary = format!("{} stabilizing maps, all of G-form", maps.len());
            Ok(Outcome::ok(
                &json!({
                    "schema_version": SCHEMA_VERSION,
                    "n": n,
                    "bound": bound,
                    "count": maps.len(),
                    "all_g_form": g.len() == maps.len(),
                    "maps": maps,
                }),
                summary,
            ))
        }
        Command::EcMul { k, .. } => {
            let curve = Curve::cremona_37a1();
            let p = default_base_point();
            let kp = scalar_mul(*k, &p, &curve)?;
            let summary = format!("{k}P = {kp}");
            Ok(Outcome::ok(
                &json!({
                    "schema_version": SCHEMA_VERSION,
                    "curve": CurveDto::from_curve(&curve),
                    "P": PointDto::from(&p),
                    "k": k,
                    "kP": PointDto::from(&kp),
                    "on_curve": on_curve(&kp, &curve),
                }),
                summary,
            ))
        }
        Command::Compile { input, mode, smoothing, .. } => {
            let f = input.polynomial()?;
            let desc = compile_default(&f, &CompileConfig { mode: *mode, smoothing: smoothing.config()? })?;
            let summary = format!(
                "n = {}, c = {}, Z: {} = 0 in P^{}",
                desc.n,
                desc.smoothing.c,
                desc.z_equation,
                desc.n - 1
            );
            Ok(Outcome { json: desc.to_json(), summary, code: EXIT_OK })
        }
        Command::Verify { input, instance, mode, bound, eval_cap, smoothing, .. } => {
            if *bound < 0 {
                return Err(Error::InvalidArgument("--bound must be non-negative".into()));
            }
            if *eval_cap == 0 {
                return Err(Error::InvalidArgument("caps must be positive".into()));
            }
            let report = match instance {
                Some(path) => {
                    let desc = InstanceDescriptor::from_json(&std::fs::read_to_string(path)?)?;
                    if mode.is_some_and(|m| m != desc.mode) {
                        return Err(Error::InvalidArgument("--mode disagrees with the instance".into()));
                    }
                    check_instance(&desc, *bound, *eval_cap)?
                }
                None => {
                    let f = input.polynomial()?;
                    let compile = CompileConfig { mode: mode.unwrap_or_default(), smoothing: smoothing.config()? };
                    check_equivalence(&f, *bound, &CheckConfig { compile, eval_cap: *eval_cap })?
                }
            };
            let summary = format!(
                "{}: {} zeros, {} automorphism witnesses, consistent",
                report.verdict,
                report.f_zeros.len(),
                report.sigma_witnesses.len()
            );
            let code = if report.found_witness() { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(Outcome { json: report.to_json(), summary, code })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("dioph-reduce").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn smooth_linear() {
        let (code, out, _) = run_capture(&["smooth", "--f", "t1 - 5"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["c"], 1);
        assert_eq!(v["certificate"]["generators"], json!(["1"]));
        assert_eq!((v["degree_in"].clone(), v["degree_out"].clone()), (json!(1), json!(2)));
    }

    #[test]
    fn verify_linear() {
        let (code, out, err) = run_capture(&["verify", "--f", "t1 - 5", "--bound", "6"]);
        assert_eq!(code, 0, "{err}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["consistent"], true);
        assert_eq!(v["sigma_witnesses"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn no_witness_phrasing() {
        let (code, out, err) = run_capture(&["verify", "--f", "t1^2 + 1", "--bound", "3"]);
        assert_eq!(code, 1);
        assert!(out.contains("no witness within bound 3"));
        assert!(err.contains("no witness within bound 3"));
        assert!(!out.contains("unsolvable"));
    }

    #[test]
    fn lattice_s_three() {
        let (code, out, _) = run_capture(&["lattice-s", "--n", "3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["S"], json!([[0, 0, 0], [2, 0, 0], [0, 3, 0]]));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["smooth", "--f", "2x"]).0, 2);
        assert_eq!(run_capture(&["smooth"]).0, 2);
        assert_eq!(run_capture(&["bogus"]).0, 2);
        assert_eq!(run_capture(&["smooth", "--f", "2*x^2 + 2*x", "--c-max", "1"]).0, 3);
        assert_eq!(run_capture(&["verify", "--f", "t1 - 5", "--bound", "6", "--eval-cap", "3"]).0, 3);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn negative_k() {
        let (code, out, _) = run_capture(&["ec-mul", "--k", "-3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["kP"], json!({"kind": "affine", "x": "-1/1", "y": "0/1"}));
    }

    #[test]
    fn comments_are_stripped() {
        assert_eq!(strip_comments("# header\nt1 -\n 5 # tail\n"), "t1 -  5");
    }
}
