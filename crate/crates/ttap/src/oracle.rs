//! Numerical cross-check of the closed-form twisted Alexander polynomial.
//!
//! Instead of trusting the product formula, this module rebuilds the
//! invariant from first principles: explicit representation matrices for the
//! presentation `⟨x, y | x^p y^{−q}⟩`, Fox free differential calculus on the
//! relator, and determinant ratios
//!
//! ```text
//! Δ(t) = det Φ(∂r/∂x) / det Φ(y − 1)    (or the x/y-swapped variant)
//! ```
//!
//! evaluated in double-double complex arithmetic at random sample points.
//! `X` is diagonal with the component's first-generator eigenvalues; `Y` is a
//! seeded random conjugate of the second diagonal, so agreement with the
//! closed form is evidence independent of the eigenvector basis. The
//! abelianization sends `x ↦ t^q`, `y ↦ t^p`.
//!
//! Irreducibility of the sampled matrix pair is deliberately not checked:
//! the determinant ratio depends only on the eigenvalue data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use thiserror::Error;

use crate::alexander;
use crate::charvar::ComponentData;
use crate::laurent::LaurentPolynomial;
use crate::numeric::{DdComplex, DdMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("denominator determinant vanishes at the sample point")]
    SingularDenominator,
}

/// Free-group generator of the torus-knot presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    X,
    Y,
}

/// One letter of a free-group word: a generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub gen: Generator,
    pub inverse: bool,
}

/// A word in the free group on `x, y`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FoxWord {
    letters: Vec<Letter>,
}

impl FoxWord {
    pub fn empty() -> Self {
        FoxWord::default()
    }

    /// `gen^exp`, spelled out letter by letter (inverses for negative `exp`).
    pub fn power(gen: Generator, exp: i64) -> Self {
        let letter = Letter {
            gen,
            inverse: exp < 0,
        };
        FoxWord {
            letters: vec![letter; exp.unsigned_abs() as usize],
        }
    }

    pub fn concat(mut self, other: &FoxWord) -> Self {
        self.letters.extend_from_slice(&other.letters);
        self
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The torus-knot relator `x^p y^{−q}`.
    pub fn torus_relator(p: u32, q: u32) -> Self {
        FoxWord::power(Generator::X, p as i64).concat(&FoxWord::power(Generator::Y, -(q as i64)))
    }
}

/// Fox free derivative `∂word/∂gen` as a signed sum of prefix words.
///
/// Rules: `∂(uv)/∂g = ∂u/∂g + u·∂v/∂g`, `∂g/∂g = 1`, `∂g^{−1}/∂g = −g^{−1}`,
/// and `∂h/∂g = 0` for the other generator.
pub fn fox_derivative(word: &FoxWord, gen: Generator) -> Vec<(i8, FoxWord)> {
    let mut terms = Vec::new();
    for (i, letter) in word.letters.iter().enumerate() {
        if letter.gen != gen {
            continue;
        }
        let mut prefix = FoxWord {
            letters: word.letters[..i].to_vec(),
        };
        if letter.inverse {
            prefix.letters.push(*letter);
            terms.push((-1, prefix));
        } else {
            terms.push((1, prefix));
        }
    }
    terms
}

/// Explicit matrices realizing a component's eigenvalue data.
///
/// `X` is diagonal; `Y = C·diag(β)·C^{−1}` for a seeded random complex
/// conjugator `C`, rejected while its Frobenius condition estimate exceeds
/// `10³`.
#[derive(Debug, Clone)]
pub struct NumericRep {
    n: u32,
    seed: u64,
    x: DdMatrix,
    y: DdMatrix,
    p: u32,
    q: u32,
}

impl NumericRep {
    pub fn from_component(c: &ComponentData, seed: u64) -> Self {
        let expand = |mults: &[crate::charvar::Multiplicity], eig: &dyn Fn(usize) -> DdComplex| {
            let mut out = Vec::with_capacity(c.n() as usize);
            for (i, m) in mults.iter().enumerate() {
                for _ in 0..m.mult {
                    out.push(eig(i));
                }
            }
            out
        };
        let alphas = expand(c.a_list(), &|i| c.alpha(i).embed());
        let betas = expand(c.b_list(), &|j| c.beta(j).embed());
        Self::from_eigenvalues(&alphas, &betas, c.knot().p(), c.knot().q(), seed)
    }

    /// Builds matrices from raw eigenvalue lists; used by the negative
    /// controls, which deliberately feed mismatched data.
    pub fn from_eigenvalues(
        alphas: &[DdComplex],
        betas: &[DdComplex],
        p: u32,
        q: u32,
        seed: u64,
    ) -> Self {
        assert_eq!(alphas.len(), betas.len());
        let n = alphas.len();
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let conjugator = loop {
            let mut c = DdMatrix::zeros(n);
            for i in 0..n {
                for j in 0..n {
                    c.set(
                        i,
                        j,
                        DdComplex::from_f64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                    );
                }
            }
            if let Ok(inv) = c.inverse() {
                let cond = c.frobenius_norm() * inv.frobenius_norm();
                if cond.hi() <= 1e3 {
                    break c;
                }
            }
        };
        let inv = conjugator.inverse().expect("conditioning already checked");
        let y = conjugator
            .matmul(&DdMatrix::from_diagonal(betas))
            .matmul(&inv);
        NumericRep {
            n: n as u32,
            seed,
            x: DdMatrix::from_diagonal(alphas),
            y,
            p,
            q,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Frobenius norm of `X^p − Y^q`, which both equal `ω·I` for valid data.
    pub fn relation_residual(&self) -> f64 {
        let pow = |m: &DdMatrix, e: u32| {
            let mut acc = DdMatrix::identity(self.n as usize);
            for _ in 0..e {
                acc = acc.matmul(m);
            }
            acc
        };
        pow(&self.x, self.p)
            .sub(&pow(&self.y, self.q))
            .frobenius_norm()
            .hi()
    }

    /// Distance of `(det X, det Y)` from `(1, 1)`.
    pub fn determinant_residual(&self) -> f64 {
        let one = DdComplex::one();
        let dx = (self.x.det() - one).abs().hi();
        let dy = (self.y.det() - one).abs().hi();
        dx.max(dy)
    }
}

/// Which generator's column is removed from the Fox matrix; the denominator
/// is `det Φ(g − 1)` for that generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    X,
    Y,
}

struct WordContext {
    mats: [DdMatrix; 2],
    invs: [DdMatrix; 2],
    n: usize,
}

impl WordContext {
    fn new(rep: &NumericRep, t0: DdComplex) -> Result<Self, OracleError> {
        // Φ(x) = t^q X, Φ(y) = t^p Y.
        let mx = rep.x.scale(t0.powi(rep.q as i64));
        let my = rep.y.scale(t0.powi(rep.p as i64));
        let inv = |m: &DdMatrix| m.inverse().map_err(|_| OracleError::SingularDenominator);
        Ok(WordContext {
            invs: [inv(&mx)?, inv(&my)?],
            mats: [mx, my],
            n: rep.n as usize,
        })
    }

    fn eval_word(&self, word: &FoxWord) -> DdMatrix {
        let mut acc = DdMatrix::identity(self.n);
        for letter in word.letters() {
            let idx = match letter.gen {
                Generator::X => 0,
                Generator::Y => 1,
            };
            let m = if letter.inverse {
                &self.invs[idx]
            } else {
                &self.mats[idx]
            };
            acc = acc.matmul(m);
        }
        acc
    }

    fn eval_sum(&self, terms: &[(i8, FoxWord)]) -> DdMatrix {
        let mut acc = DdMatrix::zeros(self.n);
        for (sign, word) in terms {
            let m = self.eval_word(word);
            acc = if *sign < 0 { acc.sub(&m) } else { acc.add(&m) };
        }
        acc
    }
}

/// Wada's determinant ratio at the sample point `t0`.
///
/// For `column = Y` this is `det Φ(∂r/∂x) / det Φ(y − 1)`; for `column = X`
/// it is `det Φ(∂r/∂y) / det Φ(x − 1)`. Both numerator and denominator come
/// out of the Fox engine.
pub fn wada_value(
    rep: &NumericRep,
    column: Column,
    t0: DdComplex,
) -> Result<DdComplex, OracleError> {
    let ctx = WordContext::new(rep, t0)?;
    let relator = FoxWord::torus_relator(rep.p, rep.q);
    let (derive_by, denom_gen) = match column {
        Column::Y => (Generator::X, Generator::Y),
        Column::X => (Generator::Y, Generator::X),
    };
    let numerator = ctx.eval_sum(&fox_derivative(&relator, derive_by)).det();
    let denominator = ctx
        .eval_sum(&[(1, FoxWord::power(denom_gen, 1)), (-1, FoxWord::empty())])
        .det();
    if denominator.abs().hi() < 1e-25 {
        return Err(OracleError::SingularDenominator);
    }
    Ok(numerator / denominator)
}

/// Evaluates an exact Laurent polynomial at a complex point.
pub fn eval_polynomial(poly: &LaurentPolynomial, t0: DdComplex) -> DdComplex {
    let mut acc = DdComplex::zero();
    for (e, coeff) in poly.terms() {
        acc = acc + coeff.embed() * t0.powi(e);
    }
    acc
}

/// Outcome of [`compare_component`].
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub trials: u32,
    pub tolerance: f64,
    pub max_relative_error: f64,
    pub passed: bool,
}

/// Samples a point in the annulus `0.5 < |t| < 2`, bounded away from the
/// unit circle where the polynomial's roots live.
fn sample_point<R: Rng>(rng: &mut R) -> DdComplex {
    let r = if rng.gen::<bool>() {
        rng.gen_range(0.55..0.92)
    } else {
        rng.gen_range(1.12..1.90)
    };
    let theta = rng.gen_range(0.0..std::f64::consts::TAU);
    DdComplex::from_f64(r * theta.cos(), r * theta.sin())
}

/// Runs `trials` random evaluations of the Fox-calculus ratio against the
/// closed-form polynomial for one component.
///
/// Each trial draws its own conjugator seed and sample point from a stream
/// derived deterministically from `seed` and the trial index, evaluates
/// [`wada_value`] with the `Y` column, and compares with the closed form
/// (times the unit relating the displayed polynomial to the ratio).
pub fn compare_component(c: &ComponentData, trials: u32, seed: u64, tol: f64) -> OracleReport {
    assert!(trials >= 1, "need at least one trial");
    let poly = alexander::polynomial(c);
    let sign = alexander::expansion_sign(c);
    let mut max_rel = 0.0f64;
    for trial in 0..trials {
        let mut rng = ChaCha12Rng::seed_from_u64(
            seed ^ (trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15),
        );
        let rep = NumericRep::from_component(c, rng.gen());
        let (wada, reference) = loop {
            let t0 = sample_point(&mut rng);
            match wada_value(&rep, Column::Y, t0) {
                Ok(w) => {
                    let mut r = eval_polynomial(&poly, t0);
                    if sign < 0 {
                        r = -r;
                    }
                    break (w, r);
                }
                Err(OracleError::SingularDenominator) => continue,
            }
        };
        let rel = ((wada - reference).abs() / reference.abs()).hi();
        max_rel = max_rel.max(rel);
    }
    OracleReport {
        trials,
        tolerance: tol,
        max_relative_error: max_rel,
        passed: max_rel <= tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charvar::{enumerate_components, TorusKnot};

    fn knot(p: u32, q: u32) -> TorusKnot {
        TorusKnot::new(p, q).unwrap()
    }

    fn letters(word: &FoxWord) -> Vec<(Generator, bool)> {
        word.letters().iter().map(|l| (l.gen, l.inverse)).collect()
    }

    #[test]
    fn fox_rules_on_generators_and_powers() {
        let x = FoxWord::power(Generator::X, 1);
        let d = fox_derivative(&x, Generator::X);
        assert_eq!(d, vec![(1, FoxWord::empty())]);
        assert!(fox_derivative(&x, Generator::Y).is_empty());

        // ∂(x^3)/∂x = 1 + x + x².
        let d = fox_derivative(&FoxWord::power(Generator::X, 3), Generator::X);
        assert_eq!(d.len(), 3);
        for (i, (sign, prefix)) in d.iter().enumerate() {
            assert_eq!(*sign, 1);
            assert_eq!(prefix, &FoxWord::power(Generator::X, i as i64));
        }

        // ∂(y^{-1})/∂y = −y^{-1}.
        let d = fox_derivative(&FoxWord::power(Generator::Y, -1), Generator::Y);
        assert_eq!(d, vec![(-1, FoxWord::power(Generator::Y, -1))]);
    }

    #[test]
    fn fox_derivative_of_torus_relator() {
        // ∂(x^p y^{−q})/∂y = −x^p (y^{−1} + … + y^{−q}).
        let relator = FoxWord::torus_relator(2, 3);
        let d = fox_derivative(&relator, Generator::Y);
        assert_eq!(d.len(), 3);
        for (j, (sign, prefix)) in d.iter().enumerate() {
            assert_eq!(*sign, -1);
            let expected = FoxWord::power(Generator::X, 2)
                .concat(&FoxWord::power(Generator::Y, -(j as i64 + 1)));
            assert_eq!(letters(prefix), letters(&expected));
        }
        let d = fox_derivative(&relator, Generator::X);
        assert_eq!(d.len(), 2);
        assert_eq!(d[0], (1, FoxWord::empty()));
        assert_eq!(d[1], (1, FoxWord::power(Generator::X, 1)));
    }

    #[test]
    fn representation_matrices_satisfy_the_relation() {
        for c in enumerate_components(knot(3, 4), 3) {
            let rep = NumericRep::from_component(&c, 17);
            assert!(rep.relation_residual() < 1e-24, "{c:?}");
            assert!(rep.determinant_residual() < 1e-24, "{c:?}");
        }
    }

    #[test]
    fn trefoil_rank_three_value_at_two() {
        let comps = enumerate_components(knot(2, 3), 3);
        let rep = NumericRep::from_component(&comps[0], 5);
        let w = wada_value(&rep, Column::Y, DdComplex::from_f64(2.0, 0.0)).unwrap();
        assert!((w.re_f64() - 7.0).abs() < 1e-9, "got {}", w.re_f64());
        assert!(w.im_f64().abs() < 1e-9);
    }

    #[test]
    fn maximal_component_matches_its_product_form() {
        // The (n−1)² = 4 dimensional component of the (3,4) knot, distinct
        // eigenvalues on both sides: polynomial ±(t¹²−1)(t³+1).
        let mult = |exp| crate::charvar::Multiplicity { exp, mult: 1 };
        let c = crate::charvar::ComponentData::new(
            knot(3, 4),
            3,
            0,
            vec![mult(0), mult(1), mult(2)],
            vec![mult(0), mult(1), mult(3)],
        )
        .unwrap();
        let t0 = DdComplex::from_f64(1.1, 0.0);
        let rep = NumericRep::from_component(&c, 23);
        let w = wada_value(&rep, Column::Y, t0).unwrap();
        let t12 = 1.1f64.powi(12) - 1.0;
        let t3 = 1.1f64.powi(3) + 1.0;
        assert!((w.re_f64().abs() - t12 * t3).abs() < 1e-8, "got {w:?}");
    }

    #[test]
    fn columns_agree_up_to_a_unit() {
        let comps = enumerate_components(knot(2, 5), 3);
        let c = &comps[2];
        let rep = NumericRep::from_component(c, 99);

        // On the unit circle the unit ±t^i has modulus 1.
        let theta = 1.234f64;
        let t0 = DdComplex::from_f64(theta.cos(), theta.sin());
        let wx = wada_value(&rep, Column::X, t0).unwrap();
        let wy = wada_value(&rep, Column::Y, t0).unwrap();
        assert!((wx.abs() / wy.abs()).hi() - 1.0 < 1e-8);

        // At a real point the ratio is exactly ±t0^i for some small i.
        let t0 = DdComplex::from_f64(1.3, 0.0);
        let wx = wada_value(&rep, Column::X, t0).unwrap();
        let wy = wada_value(&rep, Column::Y, t0).unwrap();
        let ratio = (wx / wy).re_f64();
        let matches_unit = (-40..=40).any(|i| {
            let u = 1.3f64.powi(i);
            (ratio - u).abs() < 1e-8 || (ratio + u).abs() < 1e-8
        });
        assert!(matches_unit, "ratio {ratio} is not ±t^i");
    }

    #[test]
    fn conjugator_choice_does_not_move_the_value() {
        let comps = enumerate_components(knot(3, 5), 2);
        let c = &comps[0];
        let t0 = DdComplex::from_f64(0.8, 0.4);
        let w1 = wada_value(&NumericRep::from_component(c, 1), Column::Y, t0).unwrap();
        let w2 = wada_value(&NumericRep::from_component(c, 2), Column::Y, t0).unwrap();
        assert!(((w1 - w2).abs() / w1.abs()).hi() < 1e-20);
    }

    #[test]
    fn comparison_harness_passes_on_small_grids() {
        for c in enumerate_components(knot(2, 3), 2) {
            let report = compare_component(&c, 20, 42, 1e-9);
            assert!(report.passed, "{c:?}: {report:?}");
        }
        for c in enumerate_components(knot(2, 5), 3) {
            let report = compare_component(&c, 20, 42, 1e-9);
            assert!(report.passed, "{c:?}: {report:?}");
        }
    }

    #[test]
    fn wrong_eigenvalues_are_detected() {
        let comps = enumerate_components(knot(2, 5), 2);
        let (good, bad) = (&comps[0], &comps[1]);
        let poly = alexander::polynomial(good);
        let t0 = DdComplex::from_f64(1.4, 0.2);
        let w = wada_value(&NumericRep::from_component(bad, 7), Column::Y, t0).unwrap();
        let mut reference = eval_polynomial(&poly, t0);
        if alexander::expansion_sign(good) < 0 {
            reference = -reference;
        }
        let rel = ((w - reference).abs() / reference.abs()).hi();
        assert!(rel > 1e-3, "mismatched data should disagree, rel = {rel}");
    }
}
