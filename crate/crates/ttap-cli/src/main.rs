//! Command-line frontend for the torus-knot torsion library.
//!
//! Subcommands mirror the library modules: `components` lists character-
//! variety components, `tap` prints twisted Alexander polynomials, `torsion`
//! and `seifert` print Reidemeister torsions, `powersum` evaluates the
//! closed-form/brute-force power-sum pairs, `oracle` runs the numerical
//! Fox-calculus comparison, and `verify` runs the built-in check suites.
//!
//! Exit codes: 0 on success, 1 when a verification-style command finds a
//! failing check, 2 on usage errors. JSON output is schema-stable: records
//! use a fixed field order and exact values are rendered in the documented
//! `N=12: 1/2 - 1*z^2` textual form, so identical inputs (and seeds) produce
//! byte-identical output. Set `NO_COLOR` to disable color in pretty output.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{One, Signed};
use serde::Serialize;

use ttap::alexander;
use ttap::charvar::{
    enumerate_components, sl2_pairs, ComponentData, ComponentJson, Multiplicity, TorusKnot,
};
use ttap::cyclotomic::{CyclotomicNumber, RootExponent};
use ttap::laurent::LaurentPolynomial;
use ttap::oracle;
use ttap::powersum::{
    adjoint_neg_power_sum, adjoint_pos_power_sum, sl2_neg_power_sum, sl2_pos_power_sum,
    PowerSumReport,
};
use ttap::seifert::{
    seeded_eigen_data, seifert_integrality_certificate, seifert_torsion, SeifertError,
    SeifertIndex, SeifertRepData,
};
use ttap::torsion::{
    adjoint_torsion, certify_torsion_integrality, torsion_from_component, TorsionValue,
};
use ttap::verify::{run_suite, Suite, DEFAULT_SEED};

#[derive(Parser)]
#[command(
    name = "ttap",
    version,
    about = "Exact twisted Alexander polynomials and Reidemeister torsions of torus knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the components of the irreducible SL(n) character variety
    Components(ComponentsArgs),
    /// Twisted Alexander polynomial of each component
    Tap(TapArgs),
    /// Reidemeister torsion of each component
    Torsion(TorsionArgs),
    /// Torsion of a Seifert fibered space from its index and eigenvalue data
    Seifert(SeifertArgs),
    /// Power sums of torsions over a character variety, two ways
    Powersum(PowerSumArgs),
    /// Numerical Fox-calculus check of the closed-form polynomials
    Oracle(OracleArgs),
    /// Run the built-in verification suites
    Verify(VerifyArgs),
}

#[derive(Args)]
struct KnotArgs {
    /// Torus-knot parameter p (coprime to q, both at least 2)
    #[arg(long)]
    p: u32,
    /// Torus-knot parameter q
    #[arg(long)]
    q: u32,
}

impl KnotArgs {
    fn knot(&self) -> Result<TorusKnot, String> {
        TorusKnot::new(self.p, self.q).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TapFormat {
    Json,
    Pretty,
    Factored,
}

#[derive(Args)]
struct ComponentsArgs {
    #[command(flatten)]
    knot: KnotArgs,
    /// Representation dimension n >= 2
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: OutFormat,
}

#[derive(Args)]
struct TapArgs {
    #[command(flatten)]
    knot: KnotArgs,
    /// Representation dimension n >= 2
    #[arg(long)]
    n: u32,
    /// Restrict to one component, by its index in enumeration order
    #[arg(long)]
    component: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: TapFormat,
}

#[derive(Args)]
struct TorsionArgs {
    #[command(flatten)]
    knot: KnotArgs,
    /// Representation dimension n >= 2
    #[arg(long)]
    n: u32,
    /// Adjoint torsion from the SL(2) closed form (requires --n 2)
    #[arg(long)]
    adjoint: bool,
    /// Restrict to one component, by its index in enumeration order
    #[arg(long, conflicts_with = "all")]
    component: Option<usize>,
    /// All components (the default)
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: OutFormat,
}

#[derive(Args)]
struct SeifertArgs {
    /// Seifert index "v,g" or "v,g;(a1,b1),(a2,b2),..."
    #[arg(long, allow_hyphen_values = true)]
    index: String,
    /// Representation dimension n >= 1
    #[arg(long)]
    n: u32,
    /// Exponent k of the central scalar omega = zeta_n^k
    #[arg(long)]
    omega: u32,
    /// JSON file with one eigenvalue-exponent list per fiber, e.g. [[1,3],[0,4]]
    /// (entry x means the root zeta_{n*alpha_j}^x); omitted, data is sampled
    #[arg(long)]
    eigs: Option<PathBuf>,
    /// Seed for sampled eigenvalue data when --eigs is not given
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: OutFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    /// Sum of tau^{-m} over acyclic SL(2) components
    Sl2Neg,
    /// Sum of tau^m over acyclic SL(2) components
    Sl2Pos,
    /// Sum of tau_adjoint^{-m}
    AdjNeg,
    /// Sum of tau_adjoint^m
    AdjPos,
}

#[derive(Args)]
struct PowerSumArgs {
    #[command(flatten)]
    knot: KnotArgs,
    /// Power-sum exponent (negative kinds need m >= 0, positive need m >= -1)
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Scale the adj-neg sum for the curve u*mu + w*lambda instead of mu
    #[arg(long, value_parser = parse_curve, allow_hyphen_values = true)]
    curve: Option<(i64, i64)>,
    #[arg(long, value_enum, default_value = "json")]
    format: OutFormat,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    knot: KnotArgs,
    /// Representation dimension n >= 2
    #[arg(long)]
    n: u32,
    /// Random evaluation points per component
    #[arg(long, default_value_t = 20)]
    trials: u32,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Relative-error tolerance
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Restrict to one component, by its index in enumeration order
    #[arg(long)]
    component: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: OutFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name (examples, counting, integrality, oracle, lemmas, powersum,
    /// seifert, sl2) or "all"
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, value_enum, default_value = "pretty")]
    format: OutFormat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` means the command ran but a verification check failed.
fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Components(args) => cmd_components(args),
        Command::Tap(args) => cmd_tap(args),
        Command::Torsion(args) => cmd_torsion(args),
        Command::Seifert(args) => cmd_seifert(args),
        Command::Powersum(args) => cmd_powersum(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn components_of(knot: TorusKnot, n: u32) -> Result<Vec<ComponentData>, String> {
    if n < 2 {
        return Err(format!(
            "representation dimension must be at least 2, got {n}"
        ));
    }
    Ok(enumerate_components(knot, n))
}

fn select<T>(items: Vec<T>, index: Option<usize>) -> Result<Vec<(usize, T)>, String> {
    let len = items.len();
    let mut indexed: Vec<(usize, T)> = items.into_iter().enumerate().collect();
    match index {
        None => Ok(indexed),
        Some(i) if i < len => Ok(vec![indexed.swap_remove(i)]),
        Some(i) => Err(format!("component index {i} out of range (0..{len})")),
    }
}

// ---------------------------------------------------------------------------
// components
// ---------------------------------------------------------------------------

fn cmd_components(args: ComponentsArgs) -> Result<bool, String> {
    let comps = components_of(args.knot.knot()?, args.n)?;
    for (i, c) in comps.iter().enumerate() {
        match args.format {
            OutFormat::Json => println!("{}", json(&c.to_json())),
            OutFormat::Pretty => {
                let j = c.to_json();
                println!(
                    "[{i}] k={} a={} b={} dim={}",
                    j.k,
                    mult_list(&j.a),
                    mult_list(&j.b),
                    j.dim
                );
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// tap
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct TapJson {
    component: ComponentJson,
    polynomial: ttap::laurent::LaurentJson,
    /// Sign relating the expanded polynomial to the determinant ratio.
    ratio_sign: i8,
}

fn cmd_tap(args: TapArgs) -> Result<bool, String> {
    let comps = components_of(args.knot.knot()?, args.n)?;
    for (_, c) in select(comps, args.component)? {
        match args.format {
            TapFormat::Json => {
                let record = TapJson {
                    component: c.to_json(),
                    polynomial: alexander::polynomial(&c).to_json(),
                    ratio_sign: alexander::expansion_sign(&c),
                };
                println!("{}", json(&record));
            }
            TapFormat::Pretty => println!("{}", pretty_polynomial(&alexander::polynomial(&c))),
            TapFormat::Factored => println!("{}", pretty_closed_form(&alexander::closed_form(&c))),
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// torsion
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct FloatJson {
    re: f64,
    im: f64,
}

fn float_of(value: &CyclotomicNumber) -> FloatJson {
    let e = value.embed();
    FloatJson {
        re: e.re_f64(),
        im: e.im_f64(),
    }
}

#[derive(Serialize)]
struct TorsionJson {
    index: usize,
    component: ComponentJson,
    value: String,
    value_float: FloatJson,
    acyclic: bool,
    algebraic_integer: bool,
}

#[derive(Serialize)]
struct AdjointTorsionJson {
    index: usize,
    a: u32,
    b: u32,
    value: String,
    value_float: FloatJson,
    acyclic: bool,
    sign_defined: bool,
    algebraic_integer: bool,
}

fn torsion_line(i: usize, label: &str, tv: &TorsionValue) -> String {
    let f = float_of(&tv.value);
    format!(
        "[{i}] {label} value={} float=({:.6}, {:.6}) acyclic={} integer={}",
        tv.value,
        f.re,
        f.im,
        tv.acyclic,
        certify_torsion_integrality(tv)
    )
}

fn cmd_torsion(args: TorsionArgs) -> Result<bool, String> {
    let knot = args.knot.knot()?;
    if args.adjoint {
        if args.n != 2 {
            return Err(format!(
                "adjoint torsion is computed from SL(2) component data; use --n 2, got --n {}",
                args.n
            ));
        }
        for (i, (a, b)) in select(sl2_pairs(knot), args.component)? {
            let tv = adjoint_torsion(knot, a, b).map_err(|e| e.to_string())?;
            match args.format {
                OutFormat::Json => {
                    let record = AdjointTorsionJson {
                        index: i,
                        a,
                        b,
                        value: tv.value.to_string(),
                        value_float: float_of(&tv.value),
                        acyclic: tv.acyclic,
                        sign_defined: tv.sign_defined,
                        algebraic_integer: certify_torsion_integrality(&tv),
                    };
                    println!("{}", json(&record));
                }
                OutFormat::Pretty => {
                    println!("{}", torsion_line(i, &format!("(a,b)=({a},{b})"), &tv))
                }
            }
        }
        return Ok(true);
    }
    for (i, c) in select(components_of(knot, args.n)?, args.component)? {
        let tv = torsion_from_component(&c);
        match args.format {
            OutFormat::Json => {
                let record = TorsionJson {
                    index: i,
                    component: c.to_json(),
                    value: tv.value.to_string(),
                    value_float: float_of(&tv.value),
                    acyclic: tv.acyclic,
                    algebraic_integer: certify_torsion_integrality(&tv),
                };
                println!("{}", json(&record));
            }
            OutFormat::Pretty => {
                let j = c.to_json();
                let label = format!("k={} a={} b={}", j.k, mult_list(&j.a), mult_list(&j.b));
                println!("{}", torsion_line(i, &label, &tv));
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// seifert
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SeifertJson {
    euler_v: i64,
    genus: u32,
    fibers: Vec<(u32, i64)>,
    n: u32,
    omega_exp: u32,
    /// Eigenvalue exponents per fiber; entry x in fiber j is zeta_{n*alpha_j}^x.
    eigen_exps: Vec<Vec<u32>>,
    value: String,
    value_float: FloatJson,
    acyclic: bool,
    /// Factored-path certificate; absent when a denominator factor vanishes.
    certificate: Option<CertificateJson>,
}

#[derive(Serialize)]
struct CertificateJson {
    factored_matches: bool,
    algebraic_integer: bool,
}

fn cmd_seifert(args: SeifertArgs) -> Result<bool, String> {
    if args.n < 1 {
        return Err("representation dimension must be at least 1".into());
    }
    let index = parse_seifert_index(&args.index)?;
    let rep = match &args.eigs {
        Some(path) => read_eigen_file(path, &index, args.n, args.omega)?,
        None => seeded_eigen_data(&index, args.n, args.omega, args.seed),
    };
    let tv = seifert_torsion(&index, &rep).map_err(|e| e.to_string())?;
    let certificate = match seifert_integrality_certificate(&index, &rep) {
        Ok(cert) => Some(CertificateJson {
            factored_matches: true,
            algebraic_integer: cert.is_algebraic_integer,
        }),
        Err(SeifertError::VanishingFactor) => None,
        Err(e @ SeifertError::CertificateMismatch { .. }) => {
            // Arithmetic self-check failure, not bad input.
            eprintln!("error: {e}");
            return Ok(false);
        }
        Err(e) => return Err(e.to_string()),
    };
    let record = SeifertJson {
        euler_v: index.euler_v(),
        genus: index.genus(),
        fibers: index.fibers().to_vec(),
        n: rep.n(),
        omega_exp: rep.omega().exponent(),
        eigen_exps: rep
            .eigen_exps()
            .iter()
            .map(|f| f.iter().map(|e| e.exponent()).collect())
            .collect(),
        value: tv.value.to_string(),
        value_float: float_of(&tv.value),
        acyclic: tv.acyclic,
        certificate,
    };
    match args.format {
        OutFormat::Json => println!("{}", json(&record)),
        OutFormat::Pretty => {
            println!(
                "index: v={} g={} fibers={:?}, n={} omega=zeta_{}^{}",
                record.euler_v, record.genus, record.fibers, record.n, record.n, record.omega_exp
            );
            println!("eigenvalue exponents: {:?}", record.eigen_exps);
            println!(
                "torsion = {} (float {:.6}, {:.6}) acyclic={}",
                record.value, record.value_float.re, record.value_float.im, record.acyclic
            );
            match &record.certificate {
                Some(c) => println!(
                    "factored path matches; algebraic integer: {}",
                    c.algebraic_integer
                ),
                None => println!("a denominator factor vanishes; torsion is zero"),
            }
        }
    }
    Ok(true)
}

/// Parses `"v,g"` or `"v,g;(a1,b1),(a2,b2),..."` (whitespace ignored).
fn parse_seifert_index(s: &str) -> Result<SeifertIndex, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (head, tail) = match compact.split_once(';') {
        Some((h, t)) => (h, t),
        None => (compact.as_str(), ""),
    };
    let (v, g) = head
        .split_once(',')
        .ok_or_else(|| format!("index must start with \"v,g\", got \"{head}\""))?;
    let v: i64 = v
        .parse()
        .map_err(|_| format!("invalid Euler part \"{v}\""))?;
    let g: u32 = g.parse().map_err(|_| format!("invalid genus \"{g}\""))?;
    let fibers = parse_fiber_list(tail)?;
    SeifertIndex::new(v, g, fibers).map_err(|e| e.to_string())
}

fn parse_fiber_list(t: &str) -> Result<Vec<(u32, i64)>, String> {
    if t.is_empty() {
        return Ok(vec![]);
    }
    let bad = || format!("fibers must look like (a1,b1),(a2,b2), got \"{t}\"");
    let inner = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(bad)?;
    inner
        .split("),(")
        .map(|pair| {
            let (a, b) = pair.split_once(',').ok_or_else(bad)?;
            let a: u32 = a.parse().map_err(|_| bad())?;
            let b: i64 = b.parse().map_err(|_| bad())?;
            Ok((a, b))
        })
        .collect()
}

fn read_eigen_file(
    path: &PathBuf,
    index: &SeifertIndex,
    n: u32,
    omega: u32,
) -> Result<SeifertRepData, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let lists: Vec<Vec<i64>> =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if lists.len() != index.fiber_count() {
        return Err(format!(
            "{}: expected {} eigenvalue lists (one per fiber), got {}",
            path.display(),
            index.fiber_count(),
            lists.len()
        ));
    }
    let eigen_exps = lists
        .iter()
        .zip(index.fibers())
        .map(|(exps, &(alpha, _))| {
            exps.iter()
                .map(|&x| RootExponent::new(n * alpha, x))
                .collect()
        })
        .collect();
    Ok(SeifertRepData::new(n, omega, eigen_exps))
}

// ---------------------------------------------------------------------------
// powersum
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct PowerSumJson {
    p: u32,
    q: u32,
    m: i64,
    kind: String,
    closed_form: String,
    brute_force: String,
    integrality_scale: String,
    passes: bool,
}

fn cmd_powersum(args: PowerSumArgs) -> Result<bool, String> {
    let knot = args.knot.knot()?;
    if args.curve.is_some() && args.kind != KindArg::AdjNeg {
        return Err("--curve only applies to --kind adj-neg".into());
    }
    let neg_m = || -> Result<u32, String> {
        u32::try_from(args.m).map_err(|_| format!("this kind needs m >= 0, got {}", args.m))
    };
    if matches!(args.kind, KindArg::Sl2Pos | KindArg::AdjPos) && args.m < -1 {
        return Err(format!("this kind needs m >= -1, got {}", args.m));
    }
    let report: PowerSumReport = match args.kind {
        KindArg::Sl2Neg => sl2_neg_power_sum(knot, neg_m()?),
        KindArg::Sl2Pos => sl2_pos_power_sum(knot, args.m),
        KindArg::AdjNeg => {
            adjoint_neg_power_sum(knot, neg_m()?, args.curve).map_err(|e| e.to_string())?
        }
        KindArg::AdjPos => adjoint_pos_power_sum(knot, args.m),
    };
    match args.format {
        OutFormat::Json => {
            let record = PowerSumJson {
                p: report.p,
                q: report.q,
                m: report.m,
                kind: report.kind.to_string(),
                closed_form: report.closed_form.to_string(),
                brute_force: report.brute_force.to_string(),
                integrality_scale: report.integrality_scale.to_string(),
                passes: report.passes,
            };
            println!("{}", json(&record));
        }
        OutFormat::Pretty => println!(
            "{} ({},{}) m={}: closed={} brute={} scale={} passes={}",
            report.kind,
            report.p,
            report.q,
            report.m,
            report.closed_form,
            report.brute_force,
            report.integrality_scale,
            report.passes
        ),
    }
    Ok(report.passes)
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct OracleComponentJson {
    index: usize,
    component: ComponentJson,
    max_relative_error: f64,
    passed: bool,
}

#[derive(Serialize)]
struct OracleJson {
    p: u32,
    q: u32,
    n: u32,
    trials: u32,
    seed: u64,
    tolerance: f64,
    components: Vec<OracleComponentJson>,
    passed: bool,
}

fn cmd_oracle(args: OracleArgs) -> Result<bool, String> {
    if args.trials == 0 {
        return Err("need at least one trial".into());
    }
    let knot = args.knot.knot()?;
    let mut records = Vec::new();
    for (i, c) in select(components_of(knot, args.n)?, args.component)? {
        let report = oracle::compare_component(&c, args.trials, args.seed, args.tol);
        records.push(OracleComponentJson {
            index: i,
            component: c.to_json(),
            max_relative_error: report.max_relative_error,
            passed: report.passed,
        });
    }
    let passed = records.iter().all(|r| r.passed);
    match args.format {
        OutFormat::Json => {
            let record = OracleJson {
                p: args.knot.p,
                q: args.knot.q,
                n: args.n,
                trials: args.trials,
                seed: args.seed,
                tolerance: args.tol,
                components: records,
                passed,
            };
            println!("{}", json(&record));
        }
        OutFormat::Pretty => {
            for r in &records {
                println!(
                    "[{}] k={} a={} b={} max_rel={:.3e} {}",
                    r.index,
                    r.component.k,
                    mult_list(&r.component.a),
                    mult_list(&r.component.b),
                    r.max_relative_error,
                    pass_tag(r.passed)
                );
            }
            println!(
                "{} components, {} trials each, tolerance {:.1e}: {}",
                records.len(),
                args.trials,
                args.tol,
                pass_tag(passed)
            );
        }
    }
    Ok(passed)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CheckJson {
    name: String,
    passed: bool,
    details: String,
}

#[derive(Serialize)]
struct SuiteJson {
    suite: &'static str,
    passed: bool,
    checks: Vec<CheckJson>,
}

#[derive(Serialize)]
struct VerifyJson {
    suites: Vec<SuiteJson>,
    passed: bool,
}

fn cmd_verify(args: VerifyArgs) -> Result<bool, String> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::from_name(&args.suite).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            format!(
                "unknown suite \"{}\"; expected one of {} or all",
                args.suite,
                names.join(", ")
            )
        })?]
    };
    let mut all_passed = true;
    let mut results = Vec::new();
    for suite in suites {
        let report = run_suite(suite);
        all_passed &= report.passed;
        match args.format {
            OutFormat::Json => results.push(SuiteJson {
                suite: report.suite.name(),
                passed: report.passed,
                checks: report
                    .checks
                    .iter()
                    .map(|c| CheckJson {
                        name: c.name.clone(),
                        passed: c.passed,
                        details: c.details.clone(),
                    })
                    .collect(),
            }),
            OutFormat::Pretty => {
                println!(
                    "{} {:<11} {:>9.2?}  {}",
                    pass_tag(report.passed),
                    report.suite.name(),
                    report.elapsed,
                    report.suite.description()
                );
                for c in report.checks.iter().filter(|c| !c.passed) {
                    println!("        {}: {}", c.name, c.details);
                }
            }
        }
    }
    match args.format {
        OutFormat::Json => println!(
            "{}",
            json(&VerifyJson {
                suites: results,
                passed: all_passed,
            })
        ),
        OutFormat::Pretty => {
            if !all_passed {
                println!("some suites failed");
            }
        }
    }
    Ok(all_passed)
}

// ---------------------------------------------------------------------------
// rendering helpers
// ---------------------------------------------------------------------------

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output records serialize")
}

fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty())
}

fn pass_tag(passed: bool) -> String {
    let (word, code) = if passed { ("PASS", 32) } else { ("FAIL", 31) };
    if use_color() {
        format!("[\x1b[{code}m{word}\x1b[0m]")
    } else {
        format!("[{word}]")
    }
}

/// `0,1^2`-style rendering of an exponent/multiplicity list.
fn mult_list(list: &[Multiplicity]) -> String {
    list.iter()
        .map(|m| {
            if m.mult == 1 {
                m.exp.to_string()
            } else {
                format!("{}^{}", m.exp, m.mult)
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Human form with descending exponents: `t^3 - 1`, `-t^15 - t^12 + t^3 + 1`.
///
/// Rational coefficients print bare; cyclotomic ones print parenthesized in
/// the `N=...` textual form.
fn pretty_polynomial(poly: &LaurentPolynomial) -> String {
    let mut terms: Vec<(i64, &CyclotomicNumber)> = poly.terms().collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.reverse();
    let mut out = String::new();
    for (e, c) in terms {
        let (negative, magnitude) = match c.as_rational() {
            Ok(r) => {
                let abs = r.abs();
                let mag = if e == 0 {
                    abs.to_string()
                } else if abs.is_one() {
                    power(e)
                } else {
                    format!("{abs}*{}", power(e))
                };
                (r.is_negative(), mag)
            }
            Err(_) => {
                let mag = if e == 0 {
                    format!("({c})")
                } else {
                    format!("({c})*{}", power(e))
                };
                (false, mag)
            }
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&magnitude);
    }
    out
}

fn power(e: i64) -> String {
    if e == 1 {
        "t".into()
    } else {
        format!("t^{e}")
    }
}

fn pretty_factor(f: &alexander::Factor) -> String {
    let base = if f.scalar.exponent() == 0 {
        format!("t^{}", f.t_power)
    } else {
        format!("{}*t^{}", f.scalar, f.t_power)
    };
    if f.multiplicity == 1 {
        format!("({base} - 1)")
    } else {
        format!("({base} - 1)^{}", f.multiplicity)
    }
}

fn pretty_closed_form(form: &alexander::RationalFunctionForm) -> String {
    let join = |factors: &[alexander::Factor]| {
        factors
            .iter()
            .map(pretty_factor)
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!("{} / {}", join(&form.numerator), join(&form.denominator))
}

fn parse_curve(s: &str) -> Result<(i64, i64), String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (u, w) = compact
        .split_once(',')
        .ok_or_else(|| format!("expected \"u,w\", got \"{s}\""))?;
    let u = u.parse().map_err(|_| format!("invalid integer \"{u}\""))?;
    let w = w.parse().map_err(|_| format!("invalid integer \"{w}\""))?;
    Ok((u, w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seifert_index_strings_parse() {
        let ix = parse_seifert_index("0,1;(2,1),(3,-1)").unwrap();
        assert_eq!(ix.euler_v(), 0);
        assert_eq!(ix.genus(), 1);
        assert_eq!(ix.fibers(), &[(2, 1), (3, -1)]);

        let ix = parse_seifert_index(" -2 , 3 ").unwrap();
        assert_eq!(ix.euler_v(), -2);
        assert_eq!(ix.genus(), 3);
        assert!(ix.fibers().is_empty());

        assert!(parse_seifert_index("1").is_err());
        assert!(parse_seifert_index("0,1;(2,1),(4,2)").is_err()); // gcd > 1
        assert!(parse_seifert_index("0,1;2,1").is_err());
    }

    #[test]
    fn curve_strings_parse() {
        assert_eq!(parse_curve("7,1").unwrap(), (7, 1));
        assert_eq!(parse_curve(" -3 , 2 ").unwrap(), (-3, 2));
        assert!(parse_curve("7").is_err());
        assert!(parse_curve("a,b").is_err());
    }

    #[test]
    fn polynomials_render_like_handwriting() {
        let one = CyclotomicNumber::one();
        let t3_minus_1 = LaurentPolynomial::binomial(one.clone(), 3, -&one);
        assert_eq!(pretty_polynomial(&t3_minus_1), "t^3 - 1");

        let half = CyclotomicNumber::from_rational(num::BigRational::new(1.into(), 2.into()));
        let f = LaurentPolynomial::binomial(half, 1, CyclotomicNumber::from_integer(-2));
        assert_eq!(pretty_polynomial(&f), "1/2*t - 2");

        let zeta = RootExponent::new(3, 1).as_cyclotomic();
        let g = LaurentPolynomial::binomial(zeta, 2, one);
        assert_eq!(pretty_polynomial(&g), "(N=3: 1*z^1)*t^2 + 1");

        assert_eq!(pretty_polynomial(&LaurentPolynomial::zero()), "0");
    }

    #[test]
    fn multiplicity_lists_render_compactly() {
        let list = [
            Multiplicity { exp: 0, mult: 1 },
            Multiplicity { exp: 1, mult: 2 },
        ];
        assert_eq!(mult_list(&list), "0,1^2");
    }
}
