//! `d4git` command-line front end.
//!
//! Exit codes: 0 success / stable / all checks pass, 1 some check failed,
//! 2 unstable, 3 precondition violation (point off `Z`, not in the chart, …),
//! 64 usage error, 65 malformed input data, 66 unreadable input file.

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use d4git::charts::{chart_closure_check, normalize, to_quiver_chart};
use d4git::equations::{in_zo, on_z, residuals, EquationResidual};
use d4git::json::{group_element_to_json, mat2_to_json, parse_point, point_to_json};
use d4git::linalg::join_fields;
use d4git::orbit::{base_point, stabilizer, Constraints};
use d4git::quiver::{build_rep, king_stable, preprojective_residual};
use d4git::stability::{semistable_minus_theta, semistable_theta, StabilityVerdict};
use d4git::suite::{run_suite, Status, SUITES};
use d4git::tannakian::s3::{invariant_cubic, s3_base_point, s3_residual, s3_stabilizer};
use d4git::tannakian::toric::an_quotient_fan;
use d4git::{Error, Scalar};

#[derive(Parser)]
#[command(name = "d4git", version, about = "Exact checks for the D4 quiver / GIT construction")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Residuals of E1–E3 at a point, and Z / Z° membership.
    VerifyPoint {
        /// JSON point file (`-` for stdin).
        #[arg(long)]
        point: PathBuf,
    },
    /// Stability verdict with witness or destabilizing cocharacter.
    Stability {
        #[arg(long, value_enum)]
        character: CharacterArg,
        #[arg(long)]
        point: PathBuf,
    },
    /// Quiver representations.
    Quiver {
        #[command(subcommand)]
        cmd: QuiverCmd,
    },
    /// Affine charts of the resolution.
    Chart {
        #[command(subcommand)]
        cmd: ChartCmd,
    },
    /// Isotropy groups.
    Orbit {
        #[command(subcommand)]
        cmd: OrbitCmd,
    },
    /// The cyclic and S3 examples.
    Examples {
        #[command(subcommand)]
        cmd: ExamplesCmd,
    },
    /// Run a check suite.
    Suite {
        #[arg(default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        name: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CharacterArg {
    Theta,
    MinusTheta,
}

#[derive(Subcommand)]
enum QuiverCmd {
    /// Build the eight maps of the representation attached to a point.
    Build {
        #[arg(long)]
        point: PathBuf,
    },
}

#[derive(Subcommand)]
enum ChartCmd {
    /// Move a point into the normal form of chart `--index`.
    Normalize {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        index: u8,
        #[arg(long)]
        point: PathBuf,
    },
    /// Reduce every residual component modulo the chart divisor.
    ClosureCheck,
}

#[derive(Subcommand)]
enum OrbitCmd {
    /// Enumerate the stabilizer of a point of Z° (default: the base point).
    Stabilizer {
        #[arg(long)]
        point: Option<PathBuf>,
        /// Let β move and α change by a common sign.
        #[arg(long)]
        relaxed: bool,
    },
}

#[derive(Subcommand)]
enum ExamplesCmd {
    /// Quotient fan of the redundant presentation of the cyclic group of order n.
    An {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=12))]
        n: u32,
        /// Character, n−1 comma-separated integers (default all ones).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        chi: Option<Vec<i64>>,
    },
    /// The S3 base point: relation, invariant cubic, stabilizer.
    S3,
}

/// A failed command: exit code and message.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse(_) => 65,
            Error::UnknownSuite(_) => 64,
            _ => 3,
        };
        Failure(code, e.to_string())
    }
}

struct Output {
    text: String,
    json: Value,
    code: u8,
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure(66, format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure(66, format!("{}: {e}", path.display())))
}

fn load_point(path: &Path) -> Result<d4git::git::PointHV, Failure> {
    Ok(parse_point(&read_input(path)?)?)
}

fn scalars_json(xs: &[Scalar]) -> Value {
    let f = join_fields(xs);
    Value::Array(xs.iter().map(|x| x.to_json_in(&f)).collect())
}

fn join(xs: &[Scalar]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn verify_point(path: &Path) -> Result<Output, Failure> {
    let p = load_point(path)?;
    let r = residuals(&p);
    let labels = EquationResidual::<Scalar>::labels();
    let nonzero: Vec<(String, Scalar)> = labels
        .into_iter()
        .zip(r.all())
        .filter(|(_, v)| !v.is_zero())
        .collect();
    let z = on_z(&p);
    let zo = if z { Some(in_zo(&p)?) } else { None };
    let mut text = String::new();
    for (name, ok) in [("E1", r.e1_zero()), ("E2", r.e2_zero()), ("E3", r.e3_zero())] {
        writeln!(text, "{name}: {}", if ok { "0" } else { "nonzero" }).unwrap();
    }
    for (l, v) in &nonzero {
        writeln!(text, "  {l} = {v}").unwrap();
    }
    writeln!(text, "in Z: {z}").unwrap();
    match zo {
        Some(b) => writeln!(text, "in Z°: {b}").unwrap(),
        None => writeln!(text, "in Z°: n/a").unwrap(),
    }
    let json = json!({
        "e1_zero": r.e1_zero(),
        "e2_zero": r.e2_zero(),
        "e3_zero": r.e3_zero(),
        "nonzero_components": nonzero
            .iter()
            .map(|(l, v)| json!({"component": l, "value": v.to_string()}))
            .collect::<Vec<_>>(),
        "in_z": z,
        "in_zo": zo,
    });
    Ok(Output { text, json, code: 0 })
}

fn stability_cmd(character: CharacterArg, path: &Path) -> Result<Output, Failure> {
    let p = load_point(path)?;
    let (name, v) = match character {
        CharacterArg::Theta => ("theta", semistable_theta(&p)?),
        CharacterArg::MinusTheta => ("minus-theta", semistable_minus_theta(&p)?),
    };
    let s = v.summary();
    let mut json = json!({"character": name, "status": s.status, "witness": s.witness});
    if let StabilityVerdict::Unstable(c) = &v {
        json["certificate"] = json!({
            "family": c.family,
            "torus": c.cocharacter.a,
            "gl": c.cocharacter.w,
            "basis": mat2_to_json(&c.basis),
        });
    }
    let text = format!("{name}: {}\n  {}\n", s.status, s.witness);
    let code = if v.is_stable() { 0 } else { 2 };
    Ok(Output { text, json, code })
}

fn quiver_build(path: &Path) -> Result<Output, Failure> {
    let p = load_point(path)?;
    let r = build_rep(&p);
    let res = preprojective_residual(&r);
    let king = king_stable(&r);
    let mut text = String::new();
    writeln!(text, "E0 = ({})", join(&r.e0)).unwrap();
    writeln!(text, "D0 = ({})", join(&r.d0)).unwrap();
    for i in 0..3 {
        writeln!(text, "D{} = ({})", i + 1, join(&r.d[i])).unwrap();
        writeln!(text, "E{} = ({})", i + 1, join(&r.e[i])).unwrap();
    }
    writeln!(text, "D_i E_i = {}", join(&res.legs)).unwrap();
    writeln!(text, "sum E_i D_i - E0 D0 = {:?}", res.center).unwrap();
    writeln!(text, "preprojective: {}", res.is_zero()).unwrap();
    writeln!(text, "king stable: {king}").unwrap();
    let json = json!({
        "E0": scalars_json(&r.e0),
        "D0": scalars_json(&r.d0),
        "D": r.d.iter().map(|v| scalars_json(v)).collect::<Vec<_>>(),
        "E": r.e.iter().map(|v| scalars_json(v)).collect::<Vec<_>>(),
        "leg_residuals": scalars_json(&res.legs),
        "central_residual": mat2_to_json(&res.center),
        "preprojective": res.is_zero(),
        "king_stable": king,
    });
    Ok(Output { text, json, code: 0 })
}

fn chart_normalize(index: u8, path: &Path) -> Result<Output, Failure> {
    let p = load_point(path)?;
    let c = normalize(&p, index as usize - 1)?;
    let hat = to_quiver_chart(&c)?;
    let inv = c.torus_invariants();
    let pj = point_to_json(&c.point);
    let mut text = String::new();
    writeln!(text, "chart U{index}").unwrap();
    writeln!(text, "point: {pj}").unwrap();
    writeln!(text, "normalizer: {}", group_element_to_json(&c.normalizer)).unwrap();
    writeln!(text, "torus invariants: {}", join(&inv)).unwrap();
    writeln!(
        text,
        "hat: alpha = ({}), p = ({}), q = ({}), beta = {}, omega = {}",
        join(&hat.alpha),
        join(&hat.p),
        join(&hat.q),
        hat.beta,
        hat.omega
    )
    .unwrap();
    let json = json!({
        "index": index,
        "point": pj,
        "normalizer": group_element_to_json(&c.normalizer),
        "torus_invariants": scalars_json(&inv),
        "hat": {
            "alpha": scalars_json(&hat.alpha),
            "p": scalars_json(&hat.p),
            "q": scalars_json(&hat.q),
            "beta": scalars_json(std::slice::from_ref(&hat.beta))[0],
            "omega": scalars_json(std::slice::from_ref(&hat.omega))[0],
        },
    });
    Ok(Output { text, json, code: 0 })
}

fn closure_check() -> Result<Output, Failure> {
    let r = chart_closure_check()?;
    let mut text = format!("divisor N = {}\n", r.divisor);
    for c in &r.components {
        writeln!(
            text,
            "{} {}: remainder {}",
            if c.ok { "ok  " } else { "FAIL" },
            c.component,
            c.remainder
        )
        .unwrap();
    }
    writeln!(text, "{}/{} components reduce to 0", r.passed, r.total).unwrap();
    let code = if r.ok() { 0 } else { 1 };
    let json = serde_json::to_value(&r).expect("report serialises");
    Ok(Output { text, json, code })
}

fn orbit_stabilizer(point: Option<&Path>, relaxed: bool) -> Result<Output, Failure> {
    let p = match point {
        Some(f) => load_point(f)?,
        None => base_point(),
    };
    let constraints = if relaxed { Constraints::Relaxed } else { Constraints::Full };
    let g = stabilizer(&p, constraints)?;
    let s = g.summary();
    let mut text = format!("order {}, type {}, abelian: {}\n", s.order, s.iso_type, s.abelian);
    let profile: Vec<String> = s.order_profile.iter().map(|(k, n)| format!("{n} of order {k}")).collect();
    writeln!(text, "elements: {}", profile.join(", ")).unwrap();
    for (k, e) in g.elements.iter().enumerate() {
        writeln!(text, "  {k}: {}", group_element_to_json(e)).unwrap();
    }
    writeln!(text, "multiplication table:").unwrap();
    for row in &s.table {
        let r: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
        writeln!(text, "  {}", r.join(" ")).unwrap();
    }
    let mut json = serde_json::to_value(&s).expect("summary serialises");
    json["elements"] = Value::Array(g.elements.iter().map(group_element_to_json).collect());
    Ok(Output { text, json, code: 0 })
}

fn examples_an(n: u32, chi: Option<Vec<i64>>) -> Result<Output, Failure> {
    let n = n as usize;
    let chi = chi.unwrap_or_else(|| vec![1; n - 1]);
    let fan = an_quotient_fan(n, &chi)?;
    let interior = fan.interior_rays();
    let mut text = format!("n = {n}, chi = {chi:?}\n");
    writeln!(text, "rays: {:?}", fan.rays).unwrap();
    for c in &fan.cones {
        writeln!(text, "  cone {:?} {:?} multiplicity {}", c.coords, c.rays, c.multiplicity).unwrap();
    }
    writeln!(text, "interior rays: {} {:?}", interior.len(), interior).unwrap();
    let mut json = serde_json::to_value(&fan).expect("fan serialises");
    json["interior_rays"] = json!(interior);
    Ok(Output { text, json, code: 0 })
}

fn examples_s3() -> Result<Output, Failure> {
    let p = s3_base_point();
    let rel = s3_residual(&p).is_zero();
    let cubic = invariant_cubic(&p);
    let g = s3_stabilizer(&p)?;
    let s = g.summary();
    let report = run_suite("examples", 0)?;
    let checks: Vec<_> = report.checks.iter().filter(|c| c.id.starts_with("examples.s3")).collect();
    let all_ok = rel && s.order == 6 && checks.iter().all(|c| c.status == Status::Pass);
    let mut text = format!("base point B = {:?}\n", p.b);
    writeln!(text, "relation holds: {rel}").unwrap();
    writeln!(text, "invariant cubic coefficients: {}", join(&cubic)).unwrap();
    writeln!(text, "stabilizer: order {}, type {}", s.order, s.iso_type).unwrap();
    for c in &checks {
        let st = if c.status == Status::Pass { "PASS" } else { "FAIL" };
        writeln!(text, "{st} {} — {}", c.id, c.details).unwrap();
    }
    let json = json!({
        "relation_holds": rel,
        "invariant_cubic": scalars_json(&cubic),
        "stabilizer": s,
        "elements": g.elements.iter().map(mat2_to_json).collect::<Vec<_>>(),
        "checks": checks,
    });
    Ok(Output { text, json, code: if all_ok { 0 } else { 1 } })
}

fn suite_cmd(name: &str, seed: u64, as_json: bool) -> Result<Output, Failure> {
    let r = run_suite(name, seed)?;
    let code = if r.all_passed() { 0 } else { 1 };
    // printed verbatim so that `--json` output is exactly `Report::to_json`
    let text = if as_json { r.to_json() + "\n" } else { r.to_text() };
    Ok(Output {
        text,
        json: Value::Null,
        code,
    })
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.cmd {
        Cmd::VerifyPoint { point } => verify_point(&point),
        Cmd::Stability { character, point } => stability_cmd(character, &point),
        Cmd::Quiver { cmd: QuiverCmd::Build { point } } => quiver_build(&point),
        Cmd::Chart { cmd: ChartCmd::Normalize { index, point } } => chart_normalize(index, &point),
        Cmd::Chart { cmd: ChartCmd::ClosureCheck } => closure_check(),
        Cmd::Orbit { cmd: OrbitCmd::Stabilizer { point, relaxed } } => orbit_stabilizer(point.as_deref(), relaxed),
        Cmd::Examples { cmd: ExamplesCmd::An { n, chi } } => examples_an(n, chi),
        Cmd::Examples { cmd: ExamplesCmd::S3 } => examples_s3(),
        Cmd::Suite { name, seed } => suite_cmd(&name, seed, cli.json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let as_json = cli.json;
    match run(cli) {
        Ok(out) => {
            if as_json && !out.json.is_null() {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
