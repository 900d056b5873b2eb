//! Self-contained verification suites covering the library's headline claims.
//!
//! Each [`Suite`] bundles one family of checks — golden polynomial tables,
//! component-count formulas, integrality certificates, the numerical
//! Fox-calculus oracle, the trigonometric lemmas, the power-sum grid, the
//! Seifert two-path comparison, and the `SL(2)` torsion cross-path — and
//! reports per-check pass/fail results. The CLI `verify` subcommand and the
//! acceptance test target both run these suites, so there is a single source
//! of truth for what "working" means.
//!
//! Golden expectations are spelled out literally (explicit roots of unity and
//! exponents) rather than re-derived through the code under test.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alexander;
use crate::charvar::{
    component_dimension, component_for_sl2, enumerate_components, max_dimension_component_count,
    sl2_component_count, sl2_pairs, sl3_dim2_component_count, ComponentData, Multiplicity,
    TorusKnot,
};
use crate::cyclotomic::{CyclotomicNumber, RootExponent};
use crate::laurent::LaurentPolynomial;
use crate::oracle;
use crate::powersum::{
    adjoint_neg_power_sum, adjoint_pos_power_sum, full_sin_power_sum, odd_sin_power_sum,
    sl2_neg_power_sum, sl2_pos_power_sum, verlinde_rank,
};
use crate::seifert::{
    random_eigen_data, seifert_integrality_certificate, seifert_torsion, SeifertError,
    SeifertIndex, SeifertRepData,
};
use crate::torsion::{certify_torsion_integrality, sl2_torsion, torsion_from_component};

/// Seed used by all randomized verification paths (and the CLI default).
pub const DEFAULT_SEED: u64 = 1729;

/// Outcome of one named check inside a suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl CheckResult {
    fn from_failures(name: &str, checked: usize, failures: Vec<String>) -> Self {
        let passed = failures.is_empty();
        let details = if passed {
            format!("{checked} cases checked")
        } else {
            let mut d = format!("{} of {checked} cases failed: ", failures.len());
            d.push_str(&failures.join("; "));
            d
        };
        CheckResult {
            name: name.to_string(),
            passed,
            details,
        }
    }
}

/// The eight verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Examples,
    Counting,
    Integrality,
    Oracle,
    Lemmas,
    PowerSum,
    Seifert,
    Sl2CrossPath,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Examples,
        Suite::Counting,
        Suite::Integrality,
        Suite::Oracle,
        Suite::Lemmas,
        Suite::PowerSum,
        Suite::Seifert,
        Suite::Sl2CrossPath,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Examples => "examples",
            Suite::Counting => "counting",
            Suite::Integrality => "integrality",
            Suite::Oracle => "oracle",
            Suite::Lemmas => "lemmas",
            Suite::PowerSum => "powersum",
            Suite::Seifert => "seifert",
            Suite::Sl2CrossPath => "sl2",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Examples => "golden polynomial tables match exactly",
            Suite::Counting => "component-count formulas match enumeration",
            Suite::Integrality => "polynomial coefficients and torsions are algebraic integers",
            Suite::Oracle => "Fox-calculus determinant ratios match the closed form",
            Suite::Lemmas => "sine power sums and Verlinde ranks",
            Suite::PowerSum => "torsion power sums: closed form vs brute force",
            Suite::Seifert => "Seifert torsion: direct formula vs factored certificate",
            Suite::Sl2CrossPath => "general torsion path equals the SL(2) closed form",
        }
    }

    /// Wall-clock budget the suite is expected to fit in on desktop hardware.
    pub fn time_budget(self) -> Duration {
        Duration::from_secs(match self {
            Suite::Examples => 1,
            Suite::Counting => 10,
            Suite::Integrality => 60,
            Suite::Oracle => 300,
            Suite::Lemmas => 60,
            Suite::PowerSum => 300,
            Suite::Seifert => 30,
            Suite::Sl2CrossPath => 10,
        })
    }
}

/// All check results of one suite run.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
    pub elapsed: Duration,
}

pub fn run_suite(suite: Suite) -> SuiteReport {
    let start = Instant::now();
    let checks = match suite {
        Suite::Examples => examples_checks(),
        Suite::Counting => counting_checks(),
        Suite::Integrality => integrality_checks(),
        Suite::Oracle => oracle_checks(),
        Suite::Lemmas => lemma_checks(),
        Suite::PowerSum => powersum_checks(),
        Suite::Seifert => seifert_checks(),
        Suite::Sl2CrossPath => sl2_cross_path_checks(),
    };
    SuiteReport {
        suite,
        passed: checks.iter().all(|c| c.passed),
        checks,
        elapsed: start.elapsed(),
    }
}

fn knot(p: u32, q: u32) -> TorusKnot {
    TorusKnot::new(p, q).expect("verification grids use valid knots")
}

fn coprime_pairs(max: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for p in 2..=max {
        for q in (p + 1)..=max {
            if num_integer::gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Golden examples
// ---------------------------------------------------------------------------

fn mults(entries: &[(u32, u32)]) -> Vec<Multiplicity> {
    entries
        .iter()
        .map(|&(exp, mult)| Multiplicity { exp, mult })
        .collect()
}

/// `ζ_order^exp · t^t_pow − 1`, the factor shape of all golden rows.
fn root_binomial(order: u32, exp: i64, t_pow: i64) -> LaurentPolynomial {
    LaurentPolynomial::binomial(
        RootExponent::new(order, exp).as_cyclotomic(),
        t_pow,
        -CyclotomicNumber::one(),
    )
}

/// One golden-table factor: `(order, exp, t_pow, times)` for
/// `(ζ_order^exp · t^t_pow − 1)^times`.
type GoldenFactor = (u32, i64, i64, u32);

/// Golden-table eigenvalue entries `(exp, mult)` for one generator.
type GoldenMults = [(u32, u32); 2];

fn product(factors: &[GoldenFactor]) -> LaurentPolynomial {
    let mut acc = LaurentPolynomial::one();
    for &(order, exp, t_pow, times) in factors {
        for _ in 0..times {
            acc = acc * root_binomial(order, exp, t_pow);
        }
    }
    acc
}

fn row_check(
    failures: &mut Vec<String>,
    label: &str,
    component: Result<ComponentData, crate::charvar::CharVarError>,
    expected: LaurentPolynomial,
) {
    match component {
        Ok(c) => {
            let got = alexander::polynomial(&c);
            if got != expected {
                failures.push(format!("{label}: polynomial mismatch"));
            }
        }
        Err(e) => failures.push(format!("{label}: invalid component data: {e}")),
    }
}

fn examples_checks() -> Vec<CheckResult> {
    let mut checks = Vec::new();

    // Rank-3 trefoil component: t³ − 1.
    {
        let mut failures = Vec::new();
        row_check(
            &mut failures,
            "trefoil rank 3",
            ComponentData::new(
                knot(2, 3),
                3,
                0,
                mults(&[(0, 1), (1, 2)]),
                mults(&[(0, 1), (1, 1), (2, 1)]),
            ),
            root_binomial(1, 0, 3),
        );
        checks.push(CheckResult::from_failures("trefoil-rank3", 1, failures));
    }

    // Maximal (dimension-4) component of the (3,4) knot: −(t¹²−1)(t³+1).
    {
        let mut failures = Vec::new();
        // (t¹² − 1)(ζ₂ t³ − 1) = −(t¹² − 1)(t³ + 1).
        let expected = root_binomial(1, 0, 12) * root_binomial(2, 1, 3);
        row_check(
            &mut failures,
            "(3,4) maximal",
            ComponentData::new(
                knot(3, 4),
                3,
                0,
                mults(&[(0, 1), (1, 1), (2, 1)]),
                mults(&[(0, 1), (1, 1), (3, 1)]),
            ),
            expected,
        );
        checks.push(CheckResult::from_failures("k34-maximal", 1, failures));
    }

    // All six rank-3 components of the (2,5) knot:
    // (ζ₃^{2k} t⁵ − 1) · ∏_{b unused} (ζ₁₅^{k+3b} t² − 1).
    {
        let mut failures = Vec::new();
        let rows: [(u32, [u32; 3], [GoldenFactor; 3]); 6] = [
            (0, [0, 1, 4], [(3, 0, 5, 1), (15, 6, 2, 1), (15, 9, 2, 1)]),
            (0, [0, 2, 3], [(3, 0, 5, 1), (15, 3, 2, 1), (15, 12, 2, 1)]),
            (1, [0, 1, 3], [(3, 2, 5, 1), (15, 7, 2, 1), (15, 13, 2, 1)]),
            (1, [2, 3, 4], [(3, 2, 5, 1), (15, 1, 2, 1), (15, 4, 2, 1)]),
            (2, [0, 1, 2], [(3, 1, 5, 1), (15, 11, 2, 1), (15, 14, 2, 1)]),
            (2, [1, 3, 4], [(3, 1, 5, 1), (15, 2, 2, 1), (15, 8, 2, 1)]),
        ];
        for (k, b_used, factors) in rows {
            let a_list = if k % 2 == 1 {
                mults(&[(0, 2), (1, 1)])
            } else {
                mults(&[(0, 1), (1, 2)])
            };
            let b_list = mults(&[(b_used[0], 1), (b_used[1], 1), (b_used[2], 1)]);
            row_check(
                &mut failures,
                &format!("(2,5) k={k} b={b_used:?}"),
                ComponentData::new(knot(2, 5), 3, k, a_list, b_list),
                product(&factors),
            );
        }
        if enumerate_components(knot(2, 5), 3).len() != 6 {
            failures.push("expected exactly 6 rank-3 components of (2,5)".into());
        }
        checks.push(CheckResult::from_failures("k25-rank3-table", 7, failures));
    }

    // (3,4) rank-3 components with a repeated first-generator eigenvalue:
    // (ζ₉^{k+3a₂} t⁴ − 1) (ζ₉^{k+3a₃} t⁴ − 1)² (ζ₁₂^{k+3u} t³ − 1),
    // six rows for k = 1, 2.
    {
        let mut failures = Vec::new();
        let rows: [(u32, GoldenMults, [u32; 3], [GoldenFactor; 3]); 6] = [
            (
                1,
                [(0, 2), (2, 1)],
                [0, 1, 2],
                [(9, 7, 4, 1), (9, 4, 4, 2), (12, 10, 3, 1)],
            ),
            (
                1,
                [(0, 1), (1, 2)],
                [0, 1, 2],
                [(9, 1, 4, 1), (9, 7, 4, 2), (12, 10, 3, 1)],
            ),
            (
                1,
                [(1, 1), (2, 2)],
                [0, 1, 2],
                [(9, 4, 4, 1), (9, 1, 4, 2), (12, 10, 3, 1)],
            ),
            (
                2,
                [(0, 2), (1, 1)],
                [1, 2, 3],
                [(9, 5, 4, 1), (9, 8, 4, 2), (12, 2, 3, 1)],
            ),
            (
                2,
                [(1, 2), (2, 1)],
                [1, 2, 3],
                [(9, 8, 4, 1), (9, 2, 4, 2), (12, 2, 3, 1)],
            ),
            (
                2,
                [(0, 1), (2, 2)],
                [1, 2, 3],
                [(9, 2, 4, 1), (9, 5, 4, 2), (12, 2, 3, 1)],
            ),
        ];
        for (k, a_entries, b_used, factors) in rows {
            row_check(
                &mut failures,
                &format!("(3,4) k={k} a={a_entries:?}"),
                ComponentData::new(
                    knot(3, 4),
                    3,
                    k,
                    mults(&a_entries),
                    mults(&[(b_used[0], 1), (b_used[1], 1), (b_used[2], 1)]),
                ),
                product(&factors),
            );
        }
        checks.push(CheckResult::from_failures(
            "k34-repeated-x-table",
            6,
            failures,
        ));
    }

    // (3,4) rank-3 components with a repeated second-generator eigenvalue
    // (k = 0): (ζ₁₂^{3b₂} t³ − 1) ∏_{b unused} (ζ₁₂^{3b} t³ − 1)².
    {
        let mut failures = Vec::new();
        let rows: [(GoldenMults, [GoldenFactor; 3]); 3] = [
            (
                [(1, 2), (2, 1)],
                [(12, 6, 3, 1), (12, 0, 3, 2), (12, 9, 3, 2)],
            ),
            (
                [(0, 1), (2, 2)],
                [(12, 0, 3, 1), (12, 3, 3, 2), (12, 9, 3, 2)],
            ),
            (
                [(2, 1), (3, 2)],
                [(12, 6, 3, 1), (12, 0, 3, 2), (12, 3, 3, 2)],
            ),
        ];
        for (b_entries, factors) in rows {
            row_check(
                &mut failures,
                &format!("(3,4) k=0 b={b_entries:?}"),
                ComponentData::new(
                    knot(3, 4),
                    3,
                    0,
                    mults(&[(0, 1), (1, 1), (2, 1)]),
                    mults(&b_entries),
                ),
                product(&factors),
            );
        }
        if enumerate_components(knot(3, 4), 3).len() != 10 {
            failures.push("expected exactly 10 rank-3 components of (3,4)".into());
        }
        checks.push(CheckResult::from_failures(
            "k34-repeated-y-table",
            4,
            failures,
        ));
    }

    checks
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

fn counting_checks() -> Vec<CheckResult> {
    let mut checks = Vec::new();

    let mut failures = Vec::new();
    let mut total = 0;
    for (p, q) in coprime_pairs(12) {
        total += 1;
        let k = knot(p, q);
        let formula = ((p - 1) * (q - 1) / 2) as usize;
        let enumerated = enumerate_components(k, 2).len();
        let pairs = sl2_pairs(k).len();
        if sl2_component_count(k) as usize != formula || enumerated != formula || pairs != formula {
            failures.push(format!(
                "({p},{q}): formula {formula}, enumerated {enumerated}, pairs {pairs}"
            ));
        }
    }
    checks.push(CheckResult::from_failures("sl2-counts", total, failures));

    let mut failures = Vec::new();
    let mut total = 0;
    for (p, q) in coprime_pairs(9) {
        total += 1;
        let k = knot(p, q);
        let comps = enumerate_components(k, 3);
        let max_dim = comps.iter().filter(|c| component_dimension(c) == 4).count();
        let dim2 = comps.iter().filter(|c| component_dimension(c) == 2).count();
        if max_dim != max_dimension_component_count(k, 3) as usize {
            failures.push(format!("({p},{q}): maximal-dimension count {max_dim}"));
        }
        if dim2 != sl3_dim2_component_count(k) as usize {
            failures.push(format!("({p},{q}): dimension-2 count {dim2}"));
        }
        if p == 3 {
            let qn = q as usize;
            if max_dim != (qn - 1) * (qn - 2) / 6 || dim2 != (qn - 1) * (qn - 1) {
                failures.push(format!("(3,{q}): specialized counts {max_dim}, {dim2}"));
            }
        }
    }
    checks.push(CheckResult::from_failures("rank3-counts", total, failures));

    checks
}

// ---------------------------------------------------------------------------
// Integrality
// ---------------------------------------------------------------------------

fn integrality_grid() -> Vec<ComponentData> {
    let mut out = Vec::new();
    for (p, q) in coprime_pairs(7) {
        for n in 2..=4 {
            out.extend(enumerate_components(knot(p, q), n));
        }
    }
    out
}

fn integrality_checks() -> Vec<CheckResult> {
    let mut coeff_failures = Vec::new();
    let mut torsion_failures = Vec::new();
    let grid = integrality_grid();
    for c in &grid {
        let poly = alexander::polynomial(c);
        if !poly.terms().all(|(_, coeff)| coeff.is_algebraic_integer()) {
            coeff_failures.push(format!("{c:?}"));
        }
        if !certify_torsion_integrality(&torsion_from_component(c)) {
            torsion_failures.push(format!("{c:?}"));
        }
    }
    vec![
        CheckResult::from_failures("polynomial-coefficients", grid.len(), coeff_failures),
        CheckResult::from_failures("torsion-values", grid.len(), torsion_failures),
    ]
}

// ---------------------------------------------------------------------------
// Oracle
// ---------------------------------------------------------------------------

fn oracle_checks() -> Vec<CheckResult> {
    let mut failures = Vec::new();
    let grid = integrality_grid();
    let mut worst = 0.0f64;
    for c in &grid {
        let report = oracle::compare_component(c, 20, DEFAULT_SEED, 1e-9);
        worst = worst.max(report.max_relative_error);
        if !report.passed {
            failures.push(format!(
                "{c:?}: max relative error {:.3e}",
                report.max_relative_error
            ));
        }
    }
    let mut check = CheckResult::from_failures("fox-calculus-agreement", grid.len(), failures);
    if check.passed {
        check.details = format!(
            "{} components x 20 trials, worst relative error {:.3e}",
            grid.len(),
            worst
        );
    }
    vec![check]
}

// ---------------------------------------------------------------------------
// Lemmas
// ---------------------------------------------------------------------------

fn lemma_checks() -> Vec<CheckResult> {
    let mut failures = Vec::new();
    let mut total = 0;
    for p in 2..=10 {
        for m in 0..=12 {
            total += 2;
            let odd = odd_sin_power_sum(p, m);
            if odd.direct != odd.binomial || !odd.direct.is_integer() {
                failures.push(format!("odd p={p} m={m}"));
            }
            let full = full_sin_power_sum(p, m);
            if full.direct != full.binomial || !full.direct.is_integer() {
                failures.push(format!("full p={p} m={m}"));
            }
        }
    }
    let sine = CheckResult::from_failures("sine-binomial-sums", total, failures);

    let mut failures = Vec::new();
    let mut total = 0;
    for p in 3..=16 {
        for m in -1..=6 {
            total += 1;
            if !verlinde_rank(p, m).is_integer() {
                failures.push(format!("rank p={p} m={m} not an integer"));
            }
        }
    }
    for q in (3..=15).step_by(2) {
        for m in -1..=6 {
            total += 1;
            let doubled = verlinde_rank(2 * q, m);
            let single = verlinde_rank(q, m);
            let mut factor = num::BigRational::from_integer(1.into());
            for _ in 0..(m + 1) {
                factor *= num::BigRational::from_integer(2.into());
            }
            if doubled != factor * single {
                failures.push(format!("doubling q={q} m={m}"));
            }
        }
    }
    let ranks = CheckResult::from_failures("verlinde-ranks", total, failures);

    vec![sine, ranks]
}

// ---------------------------------------------------------------------------
// Power sums
// ---------------------------------------------------------------------------

fn powersum_checks() -> Vec<CheckResult> {
    let pairs = coprime_pairs(9);
    let mut grid_failures = Vec::new();
    let mut special_failures = Vec::new();
    let mut grid_total = 0;
    let mut special_total = 0;
    for &(p, q) in &pairs {
        let k = knot(p, q);
        for m in 0..=5 {
            grid_total += 2;
            let neg = sl2_neg_power_sum(k, m);
            if !neg.passes {
                grid_failures.push(format!("sl2-neg ({p},{q}) m={m}"));
            }
            let adj = adjoint_neg_power_sum(k, m, None).expect("no curve");
            if !adj.passes {
                grid_failures.push(format!("adj-neg ({p},{q}) m={m}"));
            }
        }
        for m in -1..=5 {
            grid_total += 2;
            if !sl2_pos_power_sum(k, m).passes {
                grid_failures.push(format!("sl2-pos ({p},{q}) m={m}"));
            }
            if !adjoint_pos_power_sum(k, m).passes {
                grid_failures.push(format!("adj-pos ({p},{q}) m={m}"));
            }
        }

        special_total += 2;
        let (pi, qi) = (p as i64, q as i64);
        let expected = num::BigRational::new((pi - 2 * (pi % 2)).into(), 2.into())
            * num::BigRational::new((qi - 2 * (qi % 2)).into(), 2.into());
        if sl2_neg_power_sum(k, 1).closed_form != expected {
            special_failures.push(format!("sl2-neg m=1 ({p},{q})"));
        }
        let two = num::BigRational::from_integer(2.into());
        if adjoint_neg_power_sum(k, 1, None)
            .expect("no curve")
            .closed_form
            != two
        {
            special_failures.push(format!("adj-neg m=1 ({p},{q})"));
        }
    }
    vec![
        CheckResult::from_failures("grid-closed-vs-brute", grid_total, grid_failures),
        CheckResult::from_failures("m1-specializations", special_total, special_failures),
    ]
}

// ---------------------------------------------------------------------------
// Seifert
// ---------------------------------------------------------------------------

fn seifert_checks() -> Vec<CheckResult> {
    let mut failures = Vec::new();

    let index = SeifertIndex::new(0, 1, vec![(2, 1)]).expect("valid index");
    let data = SeifertRepData::new(
        2,
        1,
        vec![vec![RootExponent::new(4, 1), RootExponent::new(4, 3)]],
    );
    match seifert_torsion(&index, &data) {
        Ok(tv) if tv.value == CyclotomicNumber::from_integer(2) => {}
        other => failures.push(format!("hand case expected 2, got {other:?}")),
    }

    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for trial in 0..200 {
        let genus = rng.gen_range(1..=3);
        let m = rng.gen_range(0..=3);
        let fibers = (0..m)
            .map(|_| loop {
                let alpha = rng.gen_range(2..=7u32);
                let beta = rng.gen_range(-10..=10i64);
                if num_integer::gcd(alpha as i64, beta) == 1 {
                    return (alpha, beta);
                }
            })
            .collect();
        let index = match SeifertIndex::new(rng.gen_range(-3..=3), genus, fibers) {
            Ok(ix) => ix,
            Err(e) => {
                failures.push(format!("trial {trial}: index rejected: {e}"));
                continue;
            }
        };
        let n = rng.gen_range(2..=4);
        let data = random_eigen_data(&index, n, rng.gen_range(0..n), &mut rng);
        let tv = match seifert_torsion(&index, &data) {
            Ok(tv) => tv,
            Err(e) => {
                failures.push(format!("trial {trial}: torsion failed: {e}"));
                continue;
            }
        };
        match seifert_integrality_certificate(&index, &data) {
            Ok(cert) => {
                if cert.factored_value != tv.value {
                    failures.push(format!("trial {trial}: paths disagree"));
                }
                if !cert.is_algebraic_integer {
                    failures.push(format!("trial {trial}: value not integral"));
                }
            }
            Err(SeifertError::VanishingFactor) => {
                if tv.acyclic {
                    failures.push(format!("trial {trial}: vanishing factor but acyclic"));
                }
            }
            Err(e) => failures.push(format!("trial {trial}: certificate error: {e}")),
        }
    }
    vec![CheckResult::from_failures(
        "direct-vs-factored",
        201,
        failures,
    )]
}

// ---------------------------------------------------------------------------
// SL(2) cross-path
// ---------------------------------------------------------------------------

fn sl2_cross_path_checks() -> Vec<CheckResult> {
    let mut failures = Vec::new();
    let mut total = 0;
    for (p, q) in coprime_pairs(11) {
        let k = knot(p, q);
        for (a, b) in sl2_pairs(k) {
            total += 1;
            let closed = sl2_torsion(k, a, b).expect("valid pair");
            let general = torsion_from_component(&component_for_sl2(k, a, b).expect("valid pair"));
            if general.value != closed.value || general.acyclic != closed.acyclic {
                failures.push(format!("({p},{q}) index ({a},{b})"));
            }
        }
    }
    vec![CheckResult::from_failures(
        "general-vs-closed-form",
        total,
        failures,
    )]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(Suite::from_name(suite.name()), Some(suite));
        }
        assert_eq!(Suite::from_name("bogus"), None);
    }

    #[test]
    fn golden_examples_pass() {
        let report = run_suite(Suite::Examples);
        for check in &report.checks {
            assert!(check.passed, "{}: {}", check.name, check.details);
        }
    }

    #[test]
    fn counting_suite_passes() {
        let report = run_suite(Suite::Counting);
        assert!(report.passed, "{:?}", report.checks);
    }
}
