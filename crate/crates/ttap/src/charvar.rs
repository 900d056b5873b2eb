//! Components of the irreducible `SL(n, C)` character variety of a torus
//! knot.
//!
//! An irreducible representation of the torus-knot group
//! `⟨x, y | x^p = y^q⟩` sends the central element `x^p = y^q` to a scalar
//! `ω = ζ_n^k`, forcing `ρ(x)^p = ρ(y)^q = ωI`. The eigenvalue data of
//! `ρ(x)` and `ρ(y)` — which `p`-th (resp. `q`-th) roots of `ω` occur and
//! with what multiplicities — is locally constant, and a component of the
//! character variety is exactly one admissible choice of that data, recorded
//! here as a [`ComponentData`].
//!
//! Admissibility, validated by the constructor and used by the enumerator:
//! multiplicities sum to `n` on both sides, no eigenvalue fills the whole
//! matrix (else the generator is scalar and the representation abelian), any
//! `x`-multiplicity plus any `y`-multiplicity is at most `n` (else the two
//! eigenspaces share a vector line generating an invariant subspace), and
//! both determinant congruences `Σ v_i a_i + k ≡ 0 (mod p)`,
//! `Σ w_j b_j + k ≡ 0 (mod q)` hold so that `det ρ = 1` is possible.

use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::{CyclotomicNumber, RootExponent};

/// Errors from component bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharVarError {
    #[error("torus knot needs coprime p, q >= 2; got ({p}, {q})")]
    InvalidKnot { p: u32, q: u32 },
    #[error("invalid SL(2) index (a, b) = ({a}, {b}) for (p, q) = ({p}, {q}): {reason}")]
    InvalidIndex {
        p: u32,
        q: u32,
        a: u32,
        b: u32,
        reason: &'static str,
    },
    #[error("invalid component data: {0}")]
    InvalidComponent(String),
}

/// The torus knot `K_{p,q}` with coprime `p, q ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TorusKnot {
    p: u32,
    q: u32,
}

impl TorusKnot {
    pub fn new(p: u32, q: u32) -> Result<Self, CharVarError> {
        if p < 2 || q < 2 || num_integer::gcd(p, q) != 1 {
            return Err(CharVarError::InvalidKnot { p, q });
        }
        Ok(TorusKnot { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }
}

/// One eigenvalue exponent with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Multiplicity {
    pub exp: u32,
    pub mult: u32,
}

/// One component of the irreducible `SL(n)` character variety of `K_{p,q}`.
///
/// `k` determines the central scalar `ω = ζ_n^k`; `a_list` (over `Z_p`) and
/// `b_list` (over `Z_q`) give the eigenvalue exponents and multiplicities of
/// the two generators. Both lists are kept sorted by exponent, and
/// [`enumerate_components`] emits components in lexicographic order of
/// `(k, a_list, b_list)`, so indices into that order are stable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ComponentData {
    knot: TorusKnot,
    n: u32,
    k: u32,
    a_list: Vec<Multiplicity>,
    b_list: Vec<Multiplicity>,
}

impl ComponentData {
    pub fn new(
        knot: TorusKnot,
        n: u32,
        k: u32,
        mut a_list: Vec<Multiplicity>,
        mut b_list: Vec<Multiplicity>,
    ) -> Result<Self, CharVarError> {
        let fail = |msg: String| Err(CharVarError::InvalidComponent(msg));
        if n < 2 {
            return fail(format!("dimension must be at least 2, got {n}"));
        }
        if k >= n {
            return fail(format!("k must lie in [0, n); got k={k}, n={n}"));
        }
        a_list.sort();
        b_list.sort();
        for (list, modulus, name) in [(&a_list, knot.p, "a"), (&b_list, knot.q, "b")] {
            if list.iter().map(|m| m.mult).sum::<u32>() != n {
                return fail(format!("{name}-multiplicities must sum to {n}"));
            }
            if list.iter().any(|m| m.mult == 0 || m.mult >= n) {
                return fail(format!("{name}-multiplicities must lie in [1, n)"));
            }
            if list.iter().any(|m| m.exp >= modulus) {
                return fail(format!("{name}-exponents must lie in [0, {modulus})"));
            }
            if list.windows(2).any(|w| w[0].exp == w[1].exp) {
                return fail(format!("{name}-exponents must be distinct"));
            }
        }
        let max_v = a_list.iter().map(|m| m.mult).max().unwrap_or(0);
        let max_w = b_list.iter().map(|m| m.mult).max().unwrap_or(0);
        if max_v + max_w > n {
            return fail(format!(
                "multiplicities {max_v} + {max_w} exceed {n}; the representation would be reducible"
            ));
        }
        let wsum = |list: &[Multiplicity]| -> u64 {
            list.iter().map(|m| m.exp as u64 * m.mult as u64).sum()
        };
        if !(wsum(&a_list) + k as u64).is_multiple_of(knot.p as u64) {
            return fail("determinant condition fails mod p".into());
        }
        if !(wsum(&b_list) + k as u64).is_multiple_of(knot.q as u64) {
            return fail("determinant condition fails mod q".into());
        }
        Ok(ComponentData {
            knot,
            n,
            k,
            a_list,
            b_list,
        })
    }

    pub fn knot(&self) -> TorusKnot {
        self.knot
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn a_list(&self) -> &[Multiplicity] {
        &self.a_list
    }

    pub fn b_list(&self) -> &[Multiplicity] {
        &self.b_list
    }

    /// The central scalar `ω = ζ_n^k` at the run conductor `npq`.
    pub fn omega(&self) -> RootExponent {
        let n = self.n;
        let (p, q) = (self.knot.p, self.knot.q);
        RootExponent::new(n * p * q, (p as i64) * (q as i64) * (self.k as i64))
    }

    /// Eigenvalue `α_i = ζ_{np}^{k + n·a_i}` at the run conductor `npq`.
    pub fn alpha(&self, i: usize) -> RootExponent {
        let m = &self.a_list[i];
        let n = self.n as i64;
        RootExponent::new(
            self.n * self.knot.p * self.knot.q,
            self.knot.q as i64 * (self.k as i64 + n * m.exp as i64),
        )
    }

    /// Eigenvalue `β_j = ζ_{nq}^{k + n·b_j}` at the run conductor `npq`.
    pub fn beta(&self, j: usize) -> RootExponent {
        let m = &self.b_list[j];
        let n = self.n as i64;
        RootExponent::new(
            self.n * self.knot.p * self.knot.q,
            self.knot.p as i64 * (self.k as i64 + n * m.exp as i64),
        )
    }

    /// Largest `x`-side and `y`-side multiplicities `(v, w)`.
    pub fn max_multiplicities(&self) -> (u32, u32) {
        (
            self.a_list.iter().map(|m| m.mult).max().unwrap(),
            self.b_list.iter().map(|m| m.mult).max().unwrap(),
        )
    }

    pub fn to_json(&self) -> ComponentJson {
        ComponentJson {
            p: self.knot.p,
            q: self.knot.q,
            n: self.n,
            k: self.k,
            a: self.a_list.clone(),
            b: self.b_list.clone(),
            dim: component_dimension(self),
        }
    }
}

/// Serializable form of a [`ComponentData`].
#[derive(Debug, Clone, Serialize)]
pub struct ComponentJson {
    pub p: u32,
    pub q: u32,
    pub n: u32,
    pub k: u32,
    pub a: Vec<Multiplicity>,
    pub b: Vec<Multiplicity>,
    pub dim: i64,
}

/// All components of the irreducible `SL(n)` character variety, each exactly
/// once, in lexicographic order of `(k, a_list, b_list)`.
pub fn enumerate_components(knot: TorusKnot, n: u32) -> Vec<ComponentData> {
    assert!(n >= 2, "irreducible components need n >= 2");
    let mut out = Vec::new();
    for k in 0..n {
        let a_sides = eigenvalue_multisets(knot.p, n, k);
        let b_sides = eigenvalue_multisets(knot.q, n, k);
        let mut block = Vec::new();
        for a_list in &a_sides {
            let max_v = a_list.iter().map(|m| m.mult).max().unwrap();
            for b_list in &b_sides {
                let max_w = b_list.iter().map(|m| m.mult).max().unwrap();
                if max_v + max_w <= n {
                    block.push(ComponentData {
                        knot,
                        n,
                        k,
                        a_list: a_list.clone(),
                        b_list: b_list.clone(),
                    });
                }
            }
        }
        block.sort();
        out.extend(block);
    }
    out
}

/// All sorted lists of distinct exponents in `[0, modulus)` with
/// multiplicities in `[1, n)` summing to `n`, subject to the determinant
/// congruence `Σ exp·mult + k ≡ 0 (mod modulus)`.
fn eigenvalue_multisets(modulus: u32, n: u32, k: u32) -> Vec<Vec<Multiplicity>> {
    struct Search {
        modulus: u32,
        n: u32,
        k: u32,
        current: Vec<Multiplicity>,
        out: Vec<Vec<Multiplicity>>,
    }
    impl Search {
        fn recurse(&mut self, exp: u32, remaining: u32, weight: u32) {
            if remaining == 0 {
                if (weight + self.k).is_multiple_of(self.modulus) {
                    self.out.push(self.current.clone());
                }
                return;
            }
            if exp >= self.modulus {
                return;
            }
            self.recurse(exp + 1, remaining, weight);
            for mult in 1..=remaining.min(self.n - 1) {
                self.current.push(Multiplicity { exp, mult });
                self.recurse(
                    exp + 1,
                    remaining - mult,
                    (weight + exp * mult) % self.modulus,
                );
                self.current.pop();
            }
        }
    }
    let mut search = Search {
        modulus,
        n,
        k,
        current: Vec::new(),
        out: Vec::new(),
    };
    search.recurse(0, n, 0);
    search.out
}

/// Dimension of the component: `n² + 1 − Σ v_i² − Σ w_j²`.
///
/// For all-ones multiplicities this is the maximal dimension `(n−1)²`; for
/// `n = 2` every component is a line, and for `n = 3` the values are 4 and 2.
pub fn component_dimension(c: &ComponentData) -> i64 {
    let sq_sum = |list: &[Multiplicity]| -> i64 {
        list.iter().map(|m| (m.mult as i64) * (m.mult as i64)).sum()
    };
    let n = c.n as i64;
    n * n + 1 - sq_sum(&c.a_list) - sq_sum(&c.b_list)
}

/// Number of enumerated components, optionally filtered by dimension.
pub fn count_components(knot: TorusKnot, n: u32, dimension: Option<i64>) -> usize {
    enumerate_components(knot, n)
        .iter()
        .filter(|c| dimension.is_none_or(|d| component_dimension(c) == d))
        .count()
}

/// Closed-form count of `SL(2)` components: `(p−1)(q−1)/2`.
pub fn sl2_component_count(knot: TorusKnot) -> u64 {
    (knot.p as u64 - 1) * (knot.q as u64 - 1) / 2
}

/// Closed-form count of maximal-dimension components:
/// `(1/n)·C(p−1, n−1)·C(q−1, n−1)`.
pub fn max_dimension_component_count(knot: TorusKnot, n: u32) -> u64 {
    let product = num_integer::binomial((knot.p - 1) as u64, (n - 1) as u64)
        * num_integer::binomial((knot.q - 1) as u64, (n - 1) as u64);
    assert!(
        product.is_multiple_of(n as u64),
        "maximal-dimension count formula must divide evenly"
    );
    product / n as u64
}

/// Closed-form count of dimension-2 components for `n = 3`:
/// `(p−1)(q−1)(p+q−4)/2`.
pub fn sl3_dim2_component_count(knot: TorusKnot) -> u64 {
    let (p, q) = (knot.p as u64, knot.q as u64);
    (p - 1) * (q - 1) * (p + q - 4) / 2
}

/// The unique meridian coefficients `(r, s)` with `ps − qr = 1` and
/// `0 < s ≤ q`. The meridian of `K_{p,q}` is `μ = x^{−r} y^{s}`.
pub fn meridian_coeffs(knot: TorusKnot) -> (i64, i64) {
    for s in 1..=knot.q as i64 {
        let ps_minus_1 = knot.p as i64 * s - 1;
        if ps_minus_1 % knot.q as i64 == 0 {
            return (ps_minus_1 / knot.q as i64, s);
        }
    }
    unreachable!("p is invertible mod q for a valid torus knot");
}

/// Exact trace data of the `SL(2)` component indexed by `(a, b)`.
#[derive(Debug, Clone)]
pub struct Sl2ComponentInfo {
    pub a: u32,
    pub b: u32,
    /// `tr ρ(x) = 2cos(aπ/p)`.
    pub trace_x: CyclotomicNumber,
    /// `tr ρ(y) = 2cos(bπ/q)`.
    pub trace_y: CyclotomicNumber,
    /// Meridian traces excluded on the irreducible component:
    /// `2cos(π(ra/p ± sb/q))`.
    pub excluded_traces: [CyclotomicNumber; 2],
    /// `(r, s)` with `ps − qr = 1`, `0 < s ≤ q`.
    pub meridian: (i64, i64),
}

/// Validates the index pair and assembles the exact `SL(2)` trace data.
///
/// Components are indexed by `0 < a < p`, `0 < b < q`, `a ≡ b (mod 2)`.
pub fn sl2_component_info(
    knot: TorusKnot,
    a: u32,
    b: u32,
) -> Result<Sl2ComponentInfo, CharVarError> {
    let invalid = |reason| CharVarError::InvalidIndex {
        p: knot.p,
        q: knot.q,
        a,
        b,
        reason,
    };
    if a == 0 || a >= knot.p {
        return Err(invalid("a must satisfy 0 < a < p"));
    }
    if b == 0 || b >= knot.q {
        return Err(invalid("b must satisfy 0 < b < q"));
    }
    if !(a + b).is_multiple_of(2) {
        return Err(invalid("a and b must have equal parity"));
    }
    let two_cos = |order: u32, e: i64| -> CyclotomicNumber {
        let z = RootExponent::new(order, e);
        z.as_cyclotomic() + z.pow(-1).as_cyclotomic()
    };
    let (r, s) = meridian_coeffs(knot);
    let (p, q) = (knot.p as i64, knot.q as i64);
    let spine = q * r * a as i64;
    let offset = p * s * b as i64;
    Ok(Sl2ComponentInfo {
        a,
        b,
        trace_x: two_cos(2 * knot.p, a as i64),
        trace_y: two_cos(2 * knot.q, b as i64),
        excluded_traces: [
            two_cos(2 * knot.p * knot.q, spine + offset),
            two_cos(2 * knot.p * knot.q, spine - offset),
        ],
        meridian: (r, s),
    })
}

/// The `(a, b)` index pairs of all `SL(2)` components, lexicographically.
pub fn sl2_pairs(knot: TorusKnot) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for a in 1..knot.p {
        for b in 1..knot.q {
            if (a + b) % 2 == 0 {
                out.push((a, b));
            }
        }
    }
    out
}

/// The `SL(2)` component with `tr ρ(x) = 2cos(aπ/p)`, `tr ρ(y) = 2cos(bπ/q)`
/// expressed as eigenvalue data: `ρ(x)` has eigenvalues `ζ_{2p}^{±a}`, so the
/// exponent pair solves `k + 2·a_i ≡ ±a (mod 2p)` with `k = a mod 2`.
pub fn component_for_sl2(knot: TorusKnot, a: u32, b: u32) -> Result<ComponentData, CharVarError> {
    // validate the index the same way as sl2_component_info
    sl2_component_info(knot, a, b)?;
    let k = (a % 2) as i64;
    let side = |x: i64, modulus: u32| -> Vec<Multiplicity> {
        let m = modulus as i64;
        let e1 = ((x - k) / 2).rem_euclid(m) as u32;
        let e2 = ((-x - k) / 2).rem_euclid(m) as u32;
        vec![
            Multiplicity { exp: e1, mult: 1 },
            Multiplicity { exp: e2, mult: 1 },
        ]
    };
    ComponentData::new(
        knot,
        2,
        k as u32,
        side(a as i64, knot.p),
        side(b as i64, knot.q),
    )
}
