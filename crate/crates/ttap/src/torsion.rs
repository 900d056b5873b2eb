//! Reidemeister torsion of torus-knot exteriors with respect to the meridian.
//!
//! Three computation paths are provided:
//!
//! * [`torsion_from_component`] evaluates the twisted Alexander polynomial of
//!   an arbitrary character-variety component at `t = 1`, which yields the
//!   torsion of the knot exterior for the representations on that component.
//! * [`sl2_torsion`] is the closed form for irreducible `SL(2)` components:
//!   the inverse of `4 sin²(aπ/2p) sin²(bπ/2q)`, expressed exactly in
//!   cyclotomic arithmetic. Non-acyclic components (even index pairs) get the
//!   conventional value `0`.
//! * [`adjoint_torsion`] is the adjoint (rank-3) torsion attached to an
//!   `SL(2)` component, `pq / (16 sin²(aπ/p) sin²(bπ/q))`. It is only defined
//!   up to sign; this module returns the positive representative and marks the
//!   value with `sign_defined = false`.
//!
//! The first two paths agree exactly on every `SL(2)` component, which is one
//! of the stronger cross-checks in the verification suite: they share no code
//! beyond the cyclotomic arithmetic itself.

use crate::alexander;
use crate::charvar::{CharVarError, ComponentData, TorusKnot};
use crate::cyclotomic::{CyclotomicNumber, RootExponent};

/// The torsion of a knot exterior, tagged with its acyclicity status.
///
/// `value` is exact. A representation with non-vanishing torsion is acyclic;
/// conversely, torsion of a non-acyclic representation is defined to be `0`,
/// so `acyclic` is equivalent to `value != 0`. `sign_defined` is `false` for
/// quantities that are only pinned down up to sign (the adjoint torsion), in
/// which case `value` is the positive real representative.
#[derive(Debug, Clone, PartialEq)]
pub struct TorsionValue {
    pub value: CyclotomicNumber,
    pub acyclic: bool,
    pub sign_defined: bool,
}

/// Torsion of the exterior for representations on the given component.
///
/// The displayed Alexander polynomial differs from the determinant ratio
/// `(t^{pq}ω − 1)^n / ∏(t^q α_i − 1)^{v_i} ∏(t^p β_j − 1)^{w_j}` by the unit
/// `(−1)^{(p+1)v + (q+1)w}`; the torsion is the ratio representative at
/// `t = 1`, so the evaluated polynomial is multiplied by that sign. Whenever
/// `ω ≠ 1` the result equals `(ω−1)^n / ∏(α_i−1)^{v_i} ∏(β_j−1)^{w_j}` and is
/// an algebraic integer.
pub fn torsion_from_component(c: &ComponentData) -> TorsionValue {
    let delta = alexander::polynomial(c);
    let at_one = delta
        .evaluate(&CyclotomicNumber::one())
        .expect("the expanded polynomial has no negative exponents");
    let value = if alexander::expansion_sign(c) < 0 {
        -at_one
    } else {
        at_one
    };
    TorsionValue {
        acyclic: !value.is_zero(),
        sign_defined: true,
        value,
    }
}

/// Torsion of the irreducible `SL(2)` component indexed by `(a, b)`.
///
/// The component is acyclic exactly when `a` and `b` are both odd, in which
/// case the torsion is `[4 sin²(aπ/2p) sin²(bπ/2q)]⁻¹`, computed here as
/// `4 · (2 − ζ_{2p}^a − ζ_{2p}^{−a})⁻¹ · (2 − ζ_{2q}^b − ζ_{2q}^{−b})⁻¹`.
/// Even index pairs yield the zero torsion of a non-acyclic representation.
pub fn sl2_torsion(knot: TorusKnot, a: u32, b: u32) -> Result<TorsionValue, CharVarError> {
    validate_index_pair(knot, a, b)?;
    if a.is_multiple_of(2) {
        return Ok(TorsionValue {
            value: CyclotomicNumber::zero(),
            acyclic: false,
            sign_defined: true,
        });
    }
    let x = four_sin_squared(2 * knot.p(), a as i64);
    let y = four_sin_squared(2 * knot.q(), b as i64);
    let value = CyclotomicNumber::from_integer(4) * invert_nonzero(&x) * invert_nonzero(&y);
    Ok(TorsionValue {
        value,
        acyclic: true,
        sign_defined: true,
    })
}

/// Adjoint torsion of the `SL(2)` component indexed by `(a, b)`, up to sign.
///
/// Returns `pq / (16 sin²(aπ/p) sin²(bπ/q))` as the positive representative,
/// computed as `pq · (2 − ζ_p^a − ζ_p^{−a})⁻¹ · (2 − ζ_q^b − ζ_q^{−b})⁻¹`.
/// Unlike [`sl2_torsion`] this is defined (and nonzero) for both parities,
/// but is generally not an algebraic integer.
pub fn adjoint_torsion(knot: TorusKnot, a: u32, b: u32) -> Result<TorsionValue, CharVarError> {
    validate_index_pair(knot, a, b)?;
    let x = four_sin_squared(knot.p(), a as i64);
    let y = four_sin_squared(knot.q(), b as i64);
    let pq = CyclotomicNumber::from_integer((knot.p() * knot.q()) as i64);
    Ok(TorsionValue {
        value: pq * invert_nonzero(&x) * invert_nonzero(&y),
        acyclic: true,
        sign_defined: false,
    })
}

/// Checks that the torsion value is an algebraic integer.
///
/// This holds for every [`torsion_from_component`] output (the evaluated
/// polynomial lives in the ring of integers by construction, and the ratio
/// form it equals is therefore integral as well). The adjoint torsion
/// typically fails this certificate.
pub fn certify_torsion_integrality(tv: &TorsionValue) -> bool {
    tv.value.is_algebraic_integer()
}

fn validate_index_pair(knot: TorusKnot, a: u32, b: u32) -> Result<(), CharVarError> {
    let invalid = |reason| CharVarError::InvalidIndex {
        p: knot.p(),
        q: knot.q(),
        a,
        b,
        reason,
    };
    if a == 0 || a >= knot.p() {
        return Err(invalid("a must satisfy 0 < a < p"));
    }
    if b == 0 || b >= knot.q() {
        return Err(invalid("b must satisfy 0 < b < q"));
    }
    if !(a + b).is_multiple_of(2) {
        return Err(invalid("a and b must have equal parity"));
    }
    Ok(())
}

/// `2 − ζ^e − ζ^{−e}` at the given order, i.e. `4 sin²(eπ/order)`.
fn four_sin_squared(order: u32, e: i64) -> CyclotomicNumber {
    let z = RootExponent::new(order, e);
    CyclotomicNumber::from_integer(2) - z.as_cyclotomic() - z.pow(-1).as_cyclotomic()
}

fn invert_nonzero(x: &CyclotomicNumber) -> CyclotomicNumber {
    x.inverse()
        .expect("4 sin² factors are nonzero for indices strictly between 0 and the order")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charvar::{component_for_sl2, enumerate_components, sl2_pairs, Multiplicity};
    use num::{BigRational, FromPrimitive};

    fn knot(p: u32, q: u32) -> TorusKnot {
        TorusKnot::new(p, q).unwrap()
    }

    #[test]
    fn trefoil_rank_three_component_is_non_acyclic() {
        let comps = enumerate_components(knot(2, 3), 3);
        assert_eq!(comps.len(), 1);
        let tv = torsion_from_component(&comps[0]);
        assert!(tv.value.is_zero());
        assert!(!tv.acyclic);
        assert!(certify_torsion_integrality(&tv));
    }

    #[test]
    fn sl2_closed_form_frozen_values() {
        let tv = sl2_torsion(knot(2, 3), 1, 1).unwrap();
        assert_eq!(tv.value, CyclotomicNumber::from_integer(2));
        assert!(tv.acyclic && tv.sign_defined);
        assert!(certify_torsion_integrality(&tv));

        // 1/(4 sin²(π/4) sin²(π/10)) = 3 + √5: irrational, so `as_rational`
        // must refuse while the float embedding pins the value.
        let tv = sl2_torsion(knot(2, 5), 1, 1).unwrap();
        assert!(tv.value.as_rational().is_err());
        let z = tv.value.embed();
        assert!((z.re_f64() - 5.236_067_977_499_79).abs() < 1e-12);
        assert!(z.im_f64().abs() < 1e-25);

        let tv = sl2_torsion(knot(3, 5), 2, 2).unwrap();
        assert!(tv.value.is_zero());
        assert!(!tv.acyclic);
    }

    #[test]
    fn sl2_rejects_invalid_index_pairs() {
        assert!(sl2_torsion(knot(2, 3), 0, 1).is_err());
        assert!(sl2_torsion(knot(3, 5), 3, 1).is_err());
        assert!(sl2_torsion(knot(3, 5), 1, 5).is_err());
        assert!(matches!(
            sl2_torsion(knot(3, 5), 1, 2),
            Err(CharVarError::InvalidIndex { reason, .. }) if reason.contains("parity")
        ));
    }

    #[test]
    fn adjoint_frozen_values() {
        let tv = adjoint_torsion(knot(2, 3), 1, 1).unwrap();
        assert_eq!(
            tv.value.as_rational().unwrap(),
            BigRational::from_f64(0.5).unwrap()
        );
        assert!(tv.acyclic);
        assert!(!tv.sign_defined);
        assert!(!certify_torsion_integrality(&tv));

        let tv = adjoint_torsion(knot(2, 5), 1, 1).unwrap();
        let z = tv.value.embed();
        assert!((z.re_f64() - 1.809_016_994_374_947).abs() < 1e-12);

        let tv = adjoint_torsion(knot(3, 4), 2, 2).unwrap();
        assert!(tv.value.is_one());
    }

    #[test]
    fn general_path_matches_sl2_closed_form() {
        for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5)] {
            let knot = knot(p, q);
            for (a, b) in sl2_pairs(knot) {
                let closed = sl2_torsion(knot, a, b).unwrap();
                let general = torsion_from_component(&component_for_sl2(knot, a, b).unwrap());
                assert_eq!(general.value, closed.value, "({p},{q}) index ({a},{b})");
                assert_eq!(general.acyclic, closed.acyclic);
            }
        }
    }

    #[test]
    fn acyclic_value_equals_eigenvalue_ratio() {
        // Independent path: (ω−1)^n / ∏(α_i−1)^{v_i} ∏(β_j−1)^{w_j} computed
        // with cyclotomic inversion, no polynomial expansion involved.
        for (p, q, n) in [(2, 3, 2), (2, 3, 3), (2, 5, 3), (3, 4, 3)] {
            for c in enumerate_components(knot(p, q), n) {
                if c.k() == 0 {
                    continue;
                }
                let one = CyclotomicNumber::one();
                let mut ratio = (c.omega().as_cyclotomic() - &one)
                    .pow(c.n() as i64)
                    .unwrap();
                for (i, m) in c.a_list().iter().enumerate() {
                    let factor = c.alpha(i).as_cyclotomic() - &one;
                    ratio = ratio * invert_nonzero(&factor).pow(m.mult as i64).unwrap();
                }
                for (j, m) in c.b_list().iter().enumerate() {
                    let factor = c.beta(j).as_cyclotomic() - &one;
                    ratio = ratio * invert_nonzero(&factor).pow(m.mult as i64).unwrap();
                }
                let tv = torsion_from_component(&c);
                assert!(tv.acyclic);
                assert_eq!(tv.value, ratio, "({p},{q}) n={n} component {c:?}");
            }
        }
    }

    #[test]
    fn vanishing_matches_trivial_total_eigenvalue_only_up_to_rank_three() {
        for (p, q) in [(2, 3), (2, 5), (3, 4)] {
            for n in [2, 3] {
                for c in enumerate_components(knot(p, q), n) {
                    let tv = torsion_from_component(&c);
                    assert_eq!(tv.value.is_zero(), c.k() == 0, "({p},{q}) n={n} {c:?}");
                }
            }
        }
        // In rank 4 a component with ω = 1 can still have nonzero torsion:
        // repeated unit eigenvalues make the determinant ratio indeterminate
        // and the polynomial limit survives at t = 1.
        let c = ComponentData::new(
            knot(2, 3),
            4,
            0,
            vec![
                Multiplicity { exp: 0, mult: 2 },
                Multiplicity { exp: 1, mult: 2 },
            ],
            vec![
                Multiplicity { exp: 0, mult: 2 },
                Multiplicity { exp: 1, mult: 1 },
                Multiplicity { exp: 2, mult: 1 },
            ],
        )
        .unwrap();
        let tv = torsion_from_component(&c);
        assert_eq!(tv.value, CyclotomicNumber::from_integer(3));
        assert!(tv.acyclic);
    }

    #[test]
    fn torsion_values_are_algebraic_integers_on_small_grid() {
        for (p, q, n_max) in [(2, 3, 4), (2, 5, 3), (3, 4, 3)] {
            for n in 2..=n_max {
                for c in enumerate_components(knot(p, q), n) {
                    let tv = torsion_from_component(&c);
                    assert!(certify_torsion_integrality(&tv), "({p},{q}) n={n} {c:?}");
                }
            }
        }
    }

    #[test]
    fn closed_form_values_are_real_and_positive() {
        for (p, q) in [(2, 5), (3, 4), (3, 5)] {
            let knot = knot(p, q);
            for (a, b) in sl2_pairs(knot) {
                let adj = adjoint_torsion(knot, a, b).unwrap();
                assert_eq!(adj.value, adj.value.conjugate());
                assert!(adj.value.embed().re_f64() > 0.0);
                assert!(adj.value.embed().im_f64().abs() < 1e-25);
                let tv = sl2_torsion(knot, a, b).unwrap();
                if tv.acyclic {
                    assert_eq!(tv.value, tv.value.conjugate());
                    assert!(tv.value.embed().re_f64() > 0.0);
                }
            }
        }
    }
}
