//! Laurent polynomials in one variable `t` with cyclotomic coefficients.
//!
//! This is the carrier type for twisted Alexander polynomials, which are only
//! well-defined up to a unit `±t^i`; [`LaurentPolynomial::equal_up_to_unit`]
//! decides that equivalence. Representation is a sparse exponent map because
//! the polynomials that show up for large `pq` have few terms relative to
//! their span.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::CyclotomicNumber;

/// Errors from Laurent-polynomial evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    /// Evaluation at zero is undefined when negative exponents are present.
    #[error("cannot evaluate a negative-exponent term at x = 0")]
    ZeroBaseNegativeExponent,
}

/// A finitely supported map `exponent -> nonzero coefficient`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, CyclotomicNumber>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(CyclotomicNumber::one(), 0)
    }

    /// `c · t^e` (normalized away if `c = 0`).
    pub fn monomial(c: CyclotomicNumber, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPolynomial { terms }
    }

    /// `a · t^e + b`, the shape of every factor in the product formulas.
    pub fn binomial(a: CyclotomicNumber, e: i64, b: CyclotomicNumber) -> Self {
        Self::monomial(a, e) + Self::monomial(b, 0)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, CyclotomicNumber)>) -> Self {
        let mut out = LaurentPolynomial::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: i64, c: CyclotomicNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            None => {
                self.terms.insert(e, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(e, sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &CyclotomicNumber)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, e: i64) -> CyclotomicNumber {
        self.terms
            .get(&e)
            .cloned()
            .unwrap_or_else(CyclotomicNumber::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max exponent − min exponent`; zero polynomial has no span.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exponent()? - self.min_exponent()?)
    }

    /// Multiplies by the unit `±t^i`.
    pub fn mul_unit(&self, sign: i8, shift: i64) -> Self {
        assert!(sign == 1 || sign == -1);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e + shift, if sign == 1 { c.clone() } else { -c }))
            .collect();
        LaurentPolynomial { terms }
    }

    /// Exact evaluation `Σ coeff · x^exp`.
    pub fn evaluate(&self, x: &CyclotomicNumber) -> Result<CyclotomicNumber, LaurentError> {
        if x.is_zero() && self.min_exponent().is_some_and(|e| e < 0) {
            return Err(LaurentError::ZeroBaseNegativeExponent);
        }
        let mut acc = CyclotomicNumber::zero();
        for (e, c) in &self.terms {
            if x.is_zero() {
                if *e == 0 {
                    acc = acc + c;
                }
                continue;
            }
            let power = x.pow(*e).expect("x != 0 so negative powers exist");
            acc = acc + c * power;
        }
        Ok(acc)
    }

    /// True iff `self = ±t^i · other` for some integer `i`.
    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let shift = self.min_exponent().unwrap() - other.min_exponent().unwrap();
        let plus = other.mul_unit(1, shift);
        if *self == plus {
            return true;
        }
        *self == plus.mul_unit(-1, 0)
    }

    /// JSON form with every coefficient lifted to the least common conductor
    /// and written in the power basis.
    pub fn to_json(&self) -> LaurentJson {
        let conductor = self
            .terms
            .values()
            .fold(1u32, |acc, c| num_integer::lcm(acc, c.conductor()));
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| LaurentTermJson {
                exp: *e,
                coeff: c
                    .lift_to(conductor)
                    .coeffs()
                    .iter()
                    .map(|r| r.to_string())
                    .collect(),
            })
            .collect();
        LaurentJson {
            var: "t",
            conductor,
            terms,
        }
    }
}

/// Serializable form of a [`LaurentPolynomial`].
#[derive(Debug, Clone, Serialize)]
pub struct LaurentJson {
    pub var: &'static str,
    pub conductor: u32,
    pub terms: Vec<LaurentTermJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LaurentTermJson {
    pub exp: i64,
    pub coeff: Vec<String>,
}

impl std::ops::Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self + &rhs
    }
}

impl std::ops::Add<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl std::ops::Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self - &rhs
    }
}

impl std::ops::Sub<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl std::ops::Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl std::ops::Mul<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl std::ops::Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.mul_unit(-1, 0)
    }
}

impl std::ops::Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl std::fmt::Display for LaurentPolynomial {
    /// Ascending exponents, coefficients in the cyclotomic textual form.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c})*t^{e}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::cyclotomic::RootExponent;

    fn zeta(n: u32, e: i64) -> CyclotomicNumber {
        RootExponent::new(n, e).as_cyclotomic()
    }

    fn int(k: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_integer(k)
    }

    /// `t^e + c` helper for readable expected values.
    fn t_plus(e: i64, c: i64) -> LaurentPolynomial {
        LaurentPolynomial::binomial(int(1), e, int(c))
    }

    #[test]
    fn product_and_sum_normalize() {
        let lhs = t_plus(1, -1) * t_plus(1, 1);
        assert_eq!(lhs, t_plus(2, -1));
        let cancel = t_plus(3, -1) + (-t_plus(3, -1));
        assert!(cancel.is_zero());
    }

    #[test]
    fn full_third_root_product() {
        // (ζ₃t−1)(ζ₃²t−1)(t−1) = t³−1
        let f = LaurentPolynomial::binomial(zeta(3, 1), 1, int(-1))
            * LaurentPolynomial::binomial(zeta(3, 2), 1, int(-1))
            * LaurentPolynomial::binomial(int(1), 1, int(-1));
        assert_eq!(f, t_plus(3, -1));
    }

    #[test]
    fn evaluate_examples() {
        let f = t_plus(3, -1); // t³ − 1
        assert!(f.evaluate(&int(1)).unwrap().is_zero());
        assert_eq!(f.evaluate(&int(-1)).unwrap(), int(-2));
        // (ζ₄t²−1) at t = ζ₈ → ζ₄·ζ₄ − 1 = −2
        let g = LaurentPolynomial::binomial(zeta(4, 1), 2, int(-1));
        assert_eq!(g.evaluate(&zeta(8, 1)).unwrap(), int(-2));
    }

    #[test]
    fn evaluate_negative_exponent_at_zero_fails() {
        let f = LaurentPolynomial::monomial(int(1), -2);
        assert_eq!(
            f.evaluate(&CyclotomicNumber::zero()),
            Err(LaurentError::ZeroBaseNegativeExponent)
        );
        // but a plain polynomial evaluates fine at zero
        assert_eq!(
            t_plus(3, -1).evaluate(&CyclotomicNumber::zero()).unwrap(),
            int(-1)
        );
    }

    #[test]
    fn unit_equivalence() {
        let f = t_plus(3, -1);
        assert!(f.equal_up_to_unit(&f.mul_unit(-1, 0))); // 1 − t³
        assert!(f.equal_up_to_unit(&f.mul_unit(1, 2))); // t⁵ − t²
        assert!(!f.equal_up_to_unit(&t_plus(3, 1))); // t³ + 1
        assert!(LaurentPolynomial::zero().equal_up_to_unit(&LaurentPolynomial::zero()));
        assert!(!f.equal_up_to_unit(&LaurentPolynomial::zero()));
    }

    #[test]
    fn span_and_exponents() {
        let f = LaurentPolynomial::from_terms([(-2, int(3)), (5, zeta(3, 1))]);
        assert_eq!(f.min_exponent(), Some(-2));
        assert_eq!(f.max_exponent(), Some(5));
        assert_eq!(f.span(), Some(7));
        assert_eq!(LaurentPolynomial::zero().span(), None);
    }

    #[test]
    fn json_shape() {
        let f = LaurentPolynomial::binomial(zeta(4, 1), 2, int(-1));
        let json = serde_json::to_value(f.to_json()).unwrap();
        assert_eq!(json["var"], "t");
        assert_eq!(json["conductor"], 4);
        assert_eq!(json["terms"][0]["exp"], 0);
        assert_eq!(json["terms"][0]["coeff"][0], "-1");
        assert_eq!(json["terms"][1]["exp"], 2);
        assert_eq!(json["terms"][1]["coeff"][1], "1");
    }

    #[test]
    fn display_orders_ascending() {
        let f = LaurentPolynomial::from_terms([(2, int(-1)), (0, int(1))]);
        assert_eq!(f.to_string(), "(N=1: 1)*t^0 + (N=1: -1)*t^2");
    }

    /// Conductors used below. Coefficient arithmetic and evaluation lift to
    /// the lcm of every conductor in sight, and each conductor's power table
    /// is cached process-wide at O(phi^2) rationals, so the choices are
    /// divisors of 12: any lcm they can form again divides 12.
    fn arb_conductor() -> impl Strategy<Value = u32> {
        prop::sample::select(&[1u32, 2, 3, 4, 6, 12][..])
    }

    /// Small integer multiples of roots of unity.
    fn arb_coeff() -> impl Strategy<Value = CyclotomicNumber> {
        (-3i64..=3, arb_conductor(), 0i64..24).prop_map(|(c, n, e)| int(c) * zeta(n, e))
    }

    /// Laurent polynomials with a handful of terms and exponents in ±6.
    fn arb_laurent() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((-6i64..=6, arb_coeff()), 0..4)
            .prop_map(LaurentPolynomial::from_terms)
    }

    proptest! {
        #[test]
        fn evaluation_at_roots_is_a_ring_map(
            f in arb_laurent(),
            g in arb_laurent(),
            n in arb_conductor(),
            e in 0i64..24,
        ) {
            let x = zeta(n, e);
            let f_x = f.evaluate(&x).unwrap();
            let g_x = g.evaluate(&x).unwrap();
            prop_assert_eq!((&f + &g).evaluate(&x).unwrap(), &f_x + &g_x);
            prop_assert_eq!((&f * &g).evaluate(&x).unwrap(), &f_x * &g_x);
        }

        #[test]
        fn unit_multiples_compare_equal(f in arb_laurent(), shift in -5i64..=5, flip in any::<bool>()) {
            let sign = if flip { -1 } else { 1 };
            let g = f.mul_unit(sign, shift);
            prop_assert!(f.equal_up_to_unit(&g));
            prop_assert!(g.equal_up_to_unit(&f));
            if !f.is_zero() {
                let stretched = &f * &LaurentPolynomial::binomial(int(1), 1, int(-1));
                prop_assert!(!f.equal_up_to_unit(&stretched));
            }
        }

        #[test]
        fn unit_multiplication_composes(f in arb_laurent(), s1 in -2i64..=2, s2 in -3i64..=3) {
            let twice = f.mul_unit(1, s1).mul_unit(-1, s2);
            prop_assert_eq!(twice, f.mul_unit(-1, s1 + s2));
        }

        #[test]
        fn monomials_multiply_by_adding_exponents(
            c in arb_coeff(),
            d in arb_coeff(),
            e1 in -6i64..=6,
            e2 in -6i64..=6,
        ) {
            let lhs = LaurentPolynomial::monomial(c.clone(), e1) * LaurentPolynomial::monomial(d.clone(), e2);
            prop_assert_eq!(lhs, LaurentPolynomial::monomial(c * d, e1 + e2));
        }
    }
}
