//! Reidemeister torsion of Seifert fibered spaces over orientable base
//! orbifolds of genus at least one.
//!
//! A space is described by its Seifert index `{v, (o, g); (α_1, β_1), …,
//! (α_m, β_m)}` together with eigenvalue data for a representation that sends
//! the regular fiber to `ω·I_n`: the generator of the `j`-th exceptional
//! fiber acts with eigenvalues `e_{j,1}, …, e_{j,n}` satisfying
//! `e_{j,k}^{α_j} ω^{β_j} = 1`. The torsion is
//!
//! ```text
//! τ = (ω − 1)^{n(m + 2g − 2)} / ∏_{j,k} (ω^{ν_j} e_{j,k}^{μ_j} − 1)
//! ```
//!
//! where `(μ_j, ν_j)` solves `α_j ν_j − β_j μ_j = −1` with `0 < μ_j < α_j`.
//!
//! Writing `x_{j,k} = ω^{ν_j} e_{j,k}^{μ_j}` one has `x_{j,k}^{α_j} = ω^{−1}`,
//! so `(ω−1)/(x−1) = −ω·(1 + x + … + x^{α_j−1})` and the torsion factors as
//!
//! ```text
//! τ = (ω − 1)^{n(2g−2)} · (−ω)^{nm} · ∏_{j,k} (1 + x_{j,k} + … + x_{j,k}^{α_j−1}),
//! ```
//!
//! a product of algebraic integers times a unit. [`seifert_integrality_certificate`]
//! recomputes the torsion along this factored route and checks it against the
//! direct quotient, certifying both the value and its integrality.
//!
//! The input is eigenvalue data only: this module does not verify that an
//! irreducible representation realizing the data exists.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::cyclotomic::{CyclotomicNumber, RootExponent};
use crate::torsion::TorsionValue;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeifertError {
    #[error("base orbifold genus must be at least 1, got {genus}")]
    GenusTooSmall { genus: u32 },
    #[error(
        "invalid exceptional fiber ({alpha}, {beta}): need alpha >= 2 and gcd(alpha, beta) = 1"
    )]
    InvalidFiber { alpha: u32, beta: i64 },
    #[error("no (mu, nu) with alpha*nu - beta*mu = -1 exists for ({alpha}, {beta})")]
    NoSolution { alpha: u32, beta: i64 },
    #[error("invalid eigenvalue data: {0}")]
    InvalidEigenData(String),
    #[error("integrality certificate requires every denominator factor to be nonzero")]
    VanishingFactor,
    #[error("direct and factored torsion computations disagree: {direct} vs {factored}")]
    CertificateMismatch { direct: String, factored: String },
}

/// Seifert index `{v, (o, g); (α_1, β_1), …, (α_m, β_m)}`.
///
/// The Euler part `v` is carried along for round-tripping the index notation
/// but does not enter the torsion formula, which depends only on the genus
/// and the exceptional fibers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertIndex {
    euler_v: i64,
    genus: u32,
    fibers: Vec<(u32, i64)>,
}

impl SeifertIndex {
    pub fn new(euler_v: i64, genus: u32, fibers: Vec<(u32, i64)>) -> Result<Self, SeifertError> {
        if genus < 1 {
            return Err(SeifertError::GenusTooSmall { genus });
        }
        for &(alpha, beta) in &fibers {
            if alpha < 2 || (alpha as i64).gcd(&beta) != 1 {
                return Err(SeifertError::InvalidFiber { alpha, beta });
            }
        }
        Ok(SeifertIndex {
            euler_v,
            genus,
            fibers,
        })
    }

    pub fn euler_v(&self) -> i64 {
        self.euler_v
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn fibers(&self) -> &[(u32, i64)] {
        &self.fibers
    }

    pub fn fiber_count(&self) -> usize {
        self.fibers.len()
    }
}

/// Eigenvalue data of a representation sending the regular fiber to `ω·I_n`.
///
/// `omega_exp` fixes `ω = ζ_n^{omega_exp}`; `eigen_exps[j]` lists the `n`
/// eigenvalues of the `j`-th exceptional generator as roots of unity of order
/// `n·α_j`. Validity against an index is checked by the torsion routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertRepData {
    n: u32,
    omega_exp: u32,
    eigen_exps: Vec<Vec<RootExponent>>,
}

impl SeifertRepData {
    pub fn new(n: u32, omega_exp: u32, eigen_exps: Vec<Vec<RootExponent>>) -> Self {
        assert!(n >= 1, "representation dimension must be positive");
        SeifertRepData {
            n,
            omega_exp: omega_exp % n,
            eigen_exps,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn omega_exp(&self) -> u32 {
        self.omega_exp
    }

    pub fn eigen_exps(&self) -> &[Vec<RootExponent>] {
        &self.eigen_exps
    }

    pub fn omega(&self) -> RootExponent {
        RootExponent::new(self.n, self.omega_exp as i64)
    }
}

/// Solves `alpha·nu − beta·mu = −1` with `0 < mu < alpha`.
pub fn mu_nu(alpha: u32, beta: i64) -> Result<(u32, i64), SeifertError> {
    if alpha < 2 || (alpha as i64).gcd(&beta) != 1 {
        return Err(SeifertError::NoSolution { alpha, beta });
    }
    let a = alpha as i64;
    for mu in 1..a {
        if (beta * mu - 1).rem_euclid(a) == 0 {
            return Ok((mu as u32, (beta * mu - 1) / a));
        }
    }
    Err(SeifertError::NoSolution { alpha, beta })
}

/// Group-ring element of `Z[ζ_N]` stored on the exponent basis `ζ^0, …, ζ^{N−1}`.
///
/// Multiplication by `ζ^e − 1` or by a geometric sum `1 + ζ^e + … + ζ^{e(l−1)}`
/// is a rotation-and-add on the coefficient vector, so long products stay in
/// integer arithmetic; reduction to the power basis happens once at the end.
struct Cyclic {
    order: u32,
    v: Vec<i64>,
}

impl Cyclic {
    fn one(order: u32) -> Self {
        let mut v = vec![0; order as usize];
        v[0] = 1;
        Cyclic { order, v }
    }

    fn rotated(&self, e: i64) -> Vec<i64> {
        let n = self.order as usize;
        let shift = e.rem_euclid(self.order as i64) as usize;
        let mut out = vec![0; n];
        for (i, &c) in self.v.iter().enumerate() {
            out[(i + shift) % n] += c;
        }
        out
    }

    /// Multiplies by `ζ^e − 1`.
    fn mul_root_minus_one(&mut self, e: i64) {
        let rot = self.rotated(e);
        for (o, r) in self.v.iter_mut().zip(rot) {
            *o = r - *o;
        }
    }

    /// Multiplies by `1 + ζ^e + ζ^{2e} + … + ζ^{e(len−1)}`.
    fn mul_geometric(&mut self, e: i64, len: u32) {
        let mut acc = vec![0; self.order as usize];
        for i in 0..len {
            for (a, r) in acc.iter_mut().zip(self.rotated(e * i as i64)) {
                *a += r;
            }
        }
        self.v = acc;
    }

    /// Multiplies by `±ζ^e`.
    fn mul_signed_root(&mut self, e: i64, negate: bool) {
        self.v = self.rotated(e);
        if negate {
            for c in &mut self.v {
                *c = -*c;
            }
        }
    }

    fn into_cyclotomic(self) -> CyclotomicNumber {
        crate::cyclotomic::from_group_ring(self.order, &self.v)
    }
}

/// Denominator factors of one fiber: all `x_{j,k}` as exponents at the
/// fiber's own conductor `n·α_j`, plus the lift scale into the common one.
struct FiberFactors {
    alpha: u32,
    order: u32,
    scale: i64,
    exps: Vec<i64>,
}

struct Factors {
    conductor: u32,
    omega_shift: i64,
    per_fiber: Vec<FiberFactors>,
    any_vanishing: bool,
}

fn validated_factors(index: &SeifertIndex, rep: &SeifertRepData) -> Result<Factors, SeifertError> {
    if rep.eigen_exps.len() != index.fiber_count() {
        return Err(SeifertError::InvalidEigenData(format!(
            "expected eigenvalue lists for {} fibers, got {}",
            index.fiber_count(),
            rep.eigen_exps.len()
        )));
    }
    let n = rep.n;
    let conductor = index
        .fibers
        .iter()
        .fold(n, |acc, &(alpha, _)| acc.lcm(&(n * alpha)));
    let omega_shift = (conductor / n) as i64 * rep.omega_exp as i64;
    let mut per_fiber = Vec::with_capacity(index.fiber_count());
    let mut any_vanishing = false;
    for (j, (&(alpha, beta), eigens)) in index.fibers.iter().zip(&rep.eigen_exps).enumerate() {
        if eigens.len() != n as usize {
            return Err(SeifertError::InvalidEigenData(format!(
                "fiber {j}: expected {n} eigenvalues, got {}",
                eigens.len()
            )));
        }
        let order = n * alpha;
        let (mu, nu) = mu_nu(alpha, beta)?;
        let scale = (conductor / order) as i64;
        let mut exps = Vec::with_capacity(n as usize);
        for (k, e) in eigens.iter().enumerate() {
            if e.order() != order {
                return Err(SeifertError::InvalidEigenData(format!(
                    "fiber {j}, eigenvalue {k}: expected a root of order {order}, got order {}",
                    e.order()
                )));
            }
            // e^α ω^β = 1 on exponents: α·x + α·K·β ≡ 0 (mod n·α).
            let x = e.exponent() as i64;
            if (x + rep.omega_exp as i64 * beta).rem_euclid(n as i64) != 0 {
                return Err(SeifertError::InvalidEigenData(format!(
                    "fiber {j}, eigenvalue {k}: e^alpha * omega^beta != 1"
                )));
            }
            // x_{j,k} = ω^ν e^μ at order n·α_j.
            let factor_exp =
                (nu * (alpha * rep.omega_exp) as i64 + mu as i64 * x).rem_euclid(order as i64);
            if factor_exp == 0 {
                any_vanishing = true;
            }
            exps.push(factor_exp);
        }
        per_fiber.push(FiberFactors {
            alpha,
            order,
            scale,
            exps,
        });
    }
    Ok(Factors {
        conductor,
        omega_shift,
        per_fiber,
        any_vanishing,
    })
}

/// Torsion of the Seifert fibered space via the direct quotient formula.
///
/// Returns the zero, non-acyclic torsion when a denominator factor vanishes
/// or when `ω = 1` with positive numerator exponent; otherwise the exact
/// value at conductor `n · lcm(α_j)`.
pub fn seifert_torsion(
    index: &SeifertIndex,
    rep: &SeifertRepData,
) -> Result<TorsionValue, SeifertError> {
    let f = validated_factors(index, rep)?;
    if f.any_vanishing {
        return Ok(TorsionValue {
            value: CyclotomicNumber::zero(),
            acyclic: false,
            sign_defined: true,
        });
    }
    let exponent = rep.n as i64 * (index.fiber_count() as i64 + 2 * index.genus as i64 - 2);
    let mut num = Cyclic::one(rep.n);
    for _ in 0..exponent {
        num.mul_root_minus_one(rep.omega_exp as i64);
    }
    // Each fiber's factors lie in Q(ζ_{n·α_j}), so the extended-Euclid
    // inversion runs at degree φ(n·α_j) per fiber; only the final products
    // touch the common conductor.
    let mut value = num.into_cyclotomic();
    for fiber in &f.per_fiber {
        let mut den = Cyclic::one(fiber.order);
        for &e in &fiber.exps {
            den.mul_root_minus_one(e);
        }
        let den = den.into_cyclotomic();
        if !den.is_one() {
            value = value
                * den
                    .inverse()
                    .expect("denominator is a product of nonzero factors");
        }
    }
    Ok(TorsionValue {
        acyclic: !value.is_zero(),
        sign_defined: true,
        value,
    })
}

/// The factored witness produced by [`seifert_integrality_certificate`].
#[derive(Debug, Clone, PartialEq)]
pub struct IntegralityCertificate {
    /// Torsion recomputed as `(ω−1)^{n(2g−2)} (−ω)^{nm} ∏(1 + x + … + x^{α−1})`.
    pub factored_value: CyclotomicNumber,
    /// Whether the witness lies in the ring of algebraic integers.
    pub is_algebraic_integer: bool,
}

/// Recomputes the torsion along the factored route and certifies integrality.
///
/// Fails with [`SeifertError::VanishingFactor`] when some `x_{j,k} = 1` (the
/// factorization needs every denominator factor nonzero) and with
/// [`SeifertError::CertificateMismatch`] if the two routes disagree, which
/// would indicate an arithmetic bug rather than bad input.
pub fn seifert_integrality_certificate(
    index: &SeifertIndex,
    rep: &SeifertRepData,
) -> Result<IntegralityCertificate, SeifertError> {
    let f = validated_factors(index, rep)?;
    if f.any_vanishing {
        return Err(SeifertError::VanishingFactor);
    }
    let mut fac = Cyclic::one(f.conductor);
    for _ in 0..rep.n as i64 * (2 * index.genus as i64 - 2) {
        fac.mul_root_minus_one(f.omega_shift);
    }
    for fiber in &f.per_fiber {
        for &e in &fiber.exps {
            fac.mul_geometric(e * fiber.scale, fiber.alpha);
        }
    }
    let nm = rep.n as i64 * index.fiber_count() as i64;
    fac.mul_signed_root(nm * f.omega_shift, nm % 2 == 1);
    let factored = fac.into_cyclotomic();
    let direct = seifert_torsion(index, rep)?.value;
    check_paths(&direct, &factored)?;
    Ok(IntegralityCertificate {
        is_algebraic_integer: factored.is_algebraic_integer(),
        factored_value: factored,
    })
}

fn check_paths(direct: &CyclotomicNumber, factored: &CyclotomicNumber) -> Result<(), SeifertError> {
    if direct == factored {
        Ok(())
    } else {
        Err(SeifertError::CertificateMismatch {
            direct: direct.to_string(),
            factored: factored.to_string(),
        })
    }
}

/// Samples valid eigenvalue data for the given index, dimension, and `ω`.
///
/// For each fiber and slot the exponent is drawn uniformly from the `α_j`
/// roots of `e^{α_j} = ω^{−β_j}`.
pub fn random_eigen_data<R: Rng + ?Sized>(
    index: &SeifertIndex,
    n: u32,
    omega_exp: u32,
    rng: &mut R,
) -> SeifertRepData {
    let omega_exp = omega_exp % n;
    let eigen_exps = index
        .fibers
        .iter()
        .map(|&(alpha, beta)| {
            let residue = (-(omega_exp as i64) * beta).rem_euclid(n as i64);
            (0..n)
                .map(|_| {
                    let c = rng.gen_range(0..alpha) as i64;
                    RootExponent::new(n * alpha, residue + n as i64 * c)
                })
                .collect()
        })
        .collect();
    SeifertRepData::new(n, omega_exp, eigen_exps)
}

/// [`random_eigen_data`] on a deterministic stream: the same seed always
/// produces the same representation data.
pub fn seeded_eigen_data(
    index: &SeifertIndex,
    n: u32,
    omega_exp: u32,
    seed: u64,
) -> SeifertRepData {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    random_eigen_data(index, n, omega_exp, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rep(n: u32, omega_exp: u32, eigens: Vec<Vec<(u32, i64)>>) -> SeifertRepData {
        SeifertRepData::new(
            n,
            omega_exp,
            eigens
                .into_iter()
                .map(|f| {
                    f.into_iter()
                        .map(|(o, e)| RootExponent::new(o, e))
                        .collect()
                })
                .collect(),
        )
    }

    #[test]
    fn mu_nu_small_cases() {
        assert_eq!(mu_nu(3, 1).unwrap(), (1, 0));
        assert_eq!(mu_nu(2, 1).unwrap(), (1, 0));
        assert_eq!(mu_nu(5, 3).unwrap(), (2, 1));
        assert_eq!(mu_nu(3, -1).unwrap(), (2, -1));
        assert!(matches!(mu_nu(4, 2), Err(SeifertError::NoSolution { .. })));
    }

    #[test]
    fn mu_nu_solves_the_bezout_condition() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut seen = 0;
        while seen < 60 {
            let alpha = rng.gen_range(2..=9u32);
            let beta = rng.gen_range(-9..=9i64);
            if (alpha as i64).gcd(&beta) != 1 {
                continue;
            }
            seen += 1;
            let (mu, nu) = mu_nu(alpha, beta).unwrap();
            assert!(0 < mu && mu < alpha);
            assert_eq!(alpha as i64 * nu - beta * mu as i64, -1);
        }
    }

    #[test]
    fn empty_fiber_list_gives_unit_or_power() {
        // Genus 1, no exceptional fibers: exponent n(m + 2g − 2) = 0.
        let index = SeifertIndex::new(0, 1, vec![]).unwrap();
        let data = rep(3, 1, vec![]);
        let tv = seifert_torsion(&index, &data).unwrap();
        assert!(tv.value.is_one());
        assert!(tv.acyclic);

        // Genus 2, no fibers, ω = −1: (ω−1)^{2·2} = 16.
        let index = SeifertIndex::new(0, 2, vec![]).unwrap();
        let data = rep(2, 1, vec![]);
        let tv = seifert_torsion(&index, &data).unwrap();
        assert_eq!(tv.value, CyclotomicNumber::from_integer(16));
        let cert = seifert_integrality_certificate(&index, &data).unwrap();
        assert!(cert.is_algebraic_integer);
        assert_eq!(cert.factored_value, tv.value);
    }

    #[test]
    fn half_fiber_hand_computation() {
        // Genus 1, one (2,1) fiber, n = 2, ω = −1, eigenvalues ±i:
        // numerator (ω−1)² = 4, denominator (i−1)(−i−1) = 2.
        let index = SeifertIndex::new(0, 1, vec![(2, 1)]).unwrap();
        let data = rep(2, 1, vec![vec![(4, 1), (4, 3)]]);
        let tv = seifert_torsion(&index, &data).unwrap();
        assert_eq!(tv.value, CyclotomicNumber::from_integer(2));
        assert!(tv.acyclic);
        let cert = seifert_integrality_certificate(&index, &data).unwrap();
        assert_eq!(cert.factored_value, tv.value);
        assert!(cert.is_algebraic_integer);
    }

    #[test]
    fn trivial_fiber_action_forces_zero() {
        let index = SeifertIndex::new(0, 1, vec![(2, 1)]).unwrap();
        // ω = 1 and an eigenvalue 1: vanishing denominator factor.
        let data = rep(2, 0, vec![vec![(4, 0), (4, 2)]]);
        let tv = seifert_torsion(&index, &data).unwrap();
        assert!(tv.value.is_zero());
        assert!(!tv.acyclic);
        assert_eq!(
            seifert_integrality_certificate(&index, &data),
            Err(SeifertError::VanishingFactor)
        );

        // ω = 1 with eigenvalues −1, −1: numerator vanishes instead; both
        // routes give 0 and the certificate still applies.
        let data = rep(2, 0, vec![vec![(4, 2), (4, 2)]]);
        let tv = seifert_torsion(&index, &data).unwrap();
        assert!(tv.value.is_zero());
        let cert = seifert_integrality_certificate(&index, &data).unwrap();
        assert!(cert.factored_value.is_zero());
        assert!(cert.is_algebraic_integer);
    }

    #[test]
    fn rejects_bad_indices_and_eigen_data() {
        assert_eq!(
            SeifertIndex::new(0, 0, vec![]),
            Err(SeifertError::GenusTooSmall { genus: 0 })
        );
        assert_eq!(
            SeifertIndex::new(0, 1, vec![(4, 2)]),
            Err(SeifertError::InvalidFiber { alpha: 4, beta: 2 })
        );
        let index = SeifertIndex::new(0, 1, vec![(3, 1)]).unwrap();
        // Wrong fiber count.
        let data = rep(2, 1, vec![]);
        assert!(matches!(
            seifert_torsion(&index, &data),
            Err(SeifertError::InvalidEigenData(_))
        ));
        // Wrong root order (must be n·α = 6).
        let data = rep(2, 1, vec![vec![(4, 1), (4, 3)]]);
        assert!(matches!(
            seifert_torsion(&index, &data),
            Err(SeifertError::InvalidEigenData(_))
        ));
        // Right order, but e^α ω^β ≠ 1.
        let data = rep(2, 1, vec![vec![(6, 0), (6, 1)]]);
        assert!(matches!(
            seifert_torsion(&index, &data),
            Err(SeifertError::InvalidEigenData(_))
        ));
    }

    #[test]
    fn direct_and_factored_routes_agree_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(20260825);
        for _ in 0..60 {
            let genus = rng.gen_range(1..=3);
            let m = rng.gen_range(0..=3);
            let fibers = (0..m)
                .map(|_| loop {
                    let alpha = rng.gen_range(2..=7u32);
                    let beta = rng.gen_range(-10..=10i64);
                    if (alpha as i64).gcd(&beta) == 1 {
                        return (alpha, beta);
                    }
                })
                .collect();
            let index = SeifertIndex::new(rng.gen_range(-3..=3), genus, fibers).unwrap();
            let n = rng.gen_range(2..=4);
            let data = random_eigen_data(&index, n, rng.gen_range(0..n), &mut rng);
            let tv = seifert_torsion(&index, &data).unwrap();
            match seifert_integrality_certificate(&index, &data) {
                Ok(cert) => {
                    assert_eq!(cert.factored_value, tv.value);
                    assert!(cert.is_algebraic_integer);
                }
                Err(SeifertError::VanishingFactor) => assert!(!tv.acyclic),
                Err(other) => panic!("unexpected certificate failure: {other}"),
            }
        }
    }

    #[test]
    fn torsion_ignores_fiber_and_eigenvalue_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let index = SeifertIndex::new(1, 1, vec![(3, 2), (5, 3), (4, 1)]).unwrap();
        let data = random_eigen_data(&index, 3, 2, &mut rng);
        let baseline = seifert_torsion(&index, &data).unwrap();

        let mut order: Vec<usize> = (0..3).collect();
        order.shuffle(&mut rng);
        let fibers = order.iter().map(|&j| index.fibers()[j]).collect();
        let mut eigens: Vec<Vec<RootExponent>> = order
            .iter()
            .map(|&j| data.eigen_exps()[j].to_vec())
            .collect();
        for f in &mut eigens {
            f.shuffle(&mut rng);
        }
        let permuted_index = SeifertIndex::new(1, 1, fibers).unwrap();
        let permuted_data = SeifertRepData::new(3, 2, eigens);
        let tv = seifert_torsion(&permuted_index, &permuted_data).unwrap();
        assert_eq!(tv.value, baseline.value);
    }

    #[test]
    fn mismatched_paths_raise_the_dedicated_error() {
        let two = CyclotomicNumber::from_integer(2);
        let three = CyclotomicNumber::from_integer(3);
        assert!(check_paths(&two, &two.clone()).is_ok());
        assert!(matches!(
            check_paths(&two, &three),
            Err(SeifertError::CertificateMismatch { .. })
        ));
    }
}
