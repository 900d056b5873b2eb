//! Double-double complex arithmetic and small dense linear algebra.
//!
//! The exact modules never touch floats; everything here exists for the
//! numerical cross-check oracle and for printing approximate values. The
//! scalar type is `twofloat::TwoFloat`, an unevaluated sum of two `f64`s with
//! roughly 32 significant decimal digits.
//!
//! twofloat's `TwoFloat / TwoFloat` operator computes `1 − b·t` without an
//! FMA and can lose the entire low word when `b·t` lands on a rounding tie
//! (e.g. `1/3`), so all division in this module goes through [`dd_recip`], a
//! Newton-refined reciprocal built only from the FMA-correct add/mul paths.

use num::{BigRational, ToPrimitive};
use thiserror::Error;
use twofloat::TwoFloat;

/// Errors from the floating-point helpers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    /// A matrix inverse hit a numerically zero pivot.
    #[error("matrix is singular to double-double precision")]
    Singular,
}

/// Double-double reciprocal: two Newton steps on an `f64` seed, each of which
/// squares the relative error, so the result is correct to the last unit.
pub fn dd_recip(d: TwoFloat) -> TwoFloat {
    let mut r = TwoFloat::from(d.hi().recip());
    for _ in 0..2 {
        r = r + r * (TwoFloat::from(1.0) - d * r);
    }
    r
}

/// Converts an exact rational to double-double: the `f64` rounding plus the
/// exactly-computed residue.
pub fn dd_from_rational(r: &BigRational) -> TwoFloat {
    let hi = r.to_f64().unwrap_or(f64::NAN);
    if !hi.is_finite() {
        return TwoFloat::from(hi);
    }
    let residue = r - BigRational::from_float(hi).expect("finite f64");
    TwoFloat::new_add(hi, residue.to_f64().unwrap_or(0.0))
}

/// A complex number with double-double real and imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DdComplex {
    re: TwoFloat,
    im: TwoFloat,
}

impl DdComplex {
    pub fn new(re: TwoFloat, im: TwoFloat) -> Self {
        DdComplex { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        DdComplex {
            re: TwoFloat::from(re),
            im: TwoFloat::from(im),
        }
    }

    pub fn zero() -> Self {
        Self::from_f64(0.0, 0.0)
    }

    pub fn one() -> Self {
        Self::from_f64(1.0, 0.0)
    }

    pub fn re_f64(&self) -> f64 {
        self.re.hi()
    }

    pub fn im_f64(&self) -> f64 {
        self.im.hi()
    }

    pub fn conj(&self) -> Self {
        DdComplex {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn scale(&self, s: TwoFloat) -> Self {
        DdComplex {
            re: self.re * s,
            im: self.im * s,
        }
    }

    pub fn norm_sqr(&self) -> TwoFloat {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(&self) -> TwoFloat {
        self.norm_sqr().sqrt()
    }

    pub fn recip(&self) -> Self {
        let inv = dd_recip(self.norm_sqr());
        self.conj().scale(inv)
    }

    /// Binary powering; negative exponents go through [`DdComplex::recip`].
    pub fn powi(&self, k: i64) -> Self {
        let (base, mut e) = if k < 0 {
            (self.recip(), k.unsigned_abs())
        } else {
            (*self, k as u64)
        };
        let mut acc = DdComplex::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * sq;
            }
            e >>= 1;
            if e > 0 {
                sq = sq * sq;
            }
        }
        acc
    }

    /// `exp(2πi e/N)` to double-double accuracy: an `f64` seed polished by
    /// Newton iteration on `z^N − 1`. The seed is within ~1e−15 of the target
    /// root while neighboring roots are at least `2π/N` apart, so Newton
    /// converges to the intended root.
    pub fn root_of_unity(order: u32, exp: i64) -> Self {
        assert!(order >= 1);
        let e = exp.rem_euclid(order as i64);
        if e == 0 {
            return DdComplex::one();
        }
        let theta = 2.0 * std::f64::consts::PI * (e as f64) / (order as f64);
        let mut z = DdComplex::from_f64(theta.cos(), theta.sin());
        for _ in 0..3 {
            let w = z.powi(order as i64 - 1); // z^{N−1}
            let zn = w * z;
            let num = zn - DdComplex::one();
            let den = w.scale(TwoFloat::from(order as f64));
            z = z - num * den.recip();
        }
        z
    }
}

impl std::ops::Add for DdComplex {
    type Output = DdComplex;
    fn add(self, rhs: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl std::ops::Sub for DdComplex {
    type Output = DdComplex;
    fn sub(self, rhs: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl std::ops::Mul for DdComplex {
    type Output = DdComplex;
    fn mul(self, rhs: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl std::ops::Div for DdComplex {
    type Output = DdComplex;
    // Division must route through the Newton reciprocal: the underlying
    // scalar type's own `/` loses accuracy.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: DdComplex) -> DdComplex {
        self * rhs.recip()
    }
}

impl std::ops::Neg for DdComplex {
    type Output = DdComplex;
    fn neg(self) -> DdComplex {
        DdComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// A dense square complex matrix in double-double precision.
#[derive(Debug, Clone, PartialEq)]
pub struct DdMatrix {
    n: usize,
    a: Vec<DdComplex>,
}

impl DdMatrix {
    pub fn zeros(n: usize) -> Self {
        DdMatrix {
            n,
            a: vec![DdComplex::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, DdComplex::one());
        }
        m
    }

    pub fn from_diagonal(diag: &[DdComplex]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, *d);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> DdComplex {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: DdComplex) {
        self.a[i * self.n + j] = v;
    }

    pub fn matmul(&self, rhs: &DdMatrix) -> DdMatrix {
        assert_eq!(self.n, rhs.n);
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let aik = self.get(i, k);
                for j in 0..self.n {
                    let v = out.get(i, j) + aik * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn scale(&self, s: DdComplex) -> DdMatrix {
        DdMatrix {
            n: self.n,
            a: self.a.iter().map(|x| *x * s).collect(),
        }
    }

    pub fn sub(&self, rhs: &DdMatrix) -> DdMatrix {
        assert_eq!(self.n, rhs.n);
        DdMatrix {
            n: self.n,
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| *x - *y).collect(),
        }
    }

    pub fn add(&self, rhs: &DdMatrix) -> DdMatrix {
        assert_eq!(self.n, rhs.n);
        DdMatrix {
            n: self.n,
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| *x + *y).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> TwoFloat {
        let mut s = TwoFloat::from(0.0);
        for x in &self.a {
            s += x.norm_sqr();
        }
        s.sqrt()
    }

    /// Determinant by LU elimination with partial pivoting.
    pub fn det(&self) -> DdComplex {
        let n = self.n;
        let mut m = self.clone();
        let mut det = DdComplex::one();
        for col in 0..n {
            let mut pivot = col;
            let mut best = m.get(col, col).norm_sqr();
            for row in col + 1..n {
                let v = m.get(row, col).norm_sqr();
                if v > best {
                    best = v;
                    pivot = row;
                }
            }
            if best.hi() == 0.0 {
                return DdComplex::zero();
            }
            if pivot != col {
                for j in 0..n {
                    let tmp = m.get(col, j);
                    m.set(col, j, m.get(pivot, j));
                    m.set(pivot, j, tmp);
                }
                det = -det;
            }
            let diag = m.get(col, col);
            det = det * diag;
            let inv = diag.recip();
            for row in col + 1..n {
                let factor = m.get(row, col) * inv;
                if factor.norm_sqr().hi() == 0.0 {
                    continue;
                }
                for j in col..n {
                    let v = m.get(row, j) - factor * m.get(col, j);
                    m.set(row, j, v);
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<DdMatrix, NumericError> {
        let n = self.n;
        let mut m = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let mut pivot = col;
            let mut best = m.get(col, col).norm_sqr();
            for row in col + 1..n {
                let v = m.get(row, col).norm_sqr();
                if v > best {
                    best = v;
                    pivot = row;
                }
            }
            if best.hi() == 0.0 {
                return Err(NumericError::Singular);
            }
            if pivot != col {
                for j in 0..n {
                    let tmp = m.get(col, j);
                    m.set(col, j, m.get(pivot, j));
                    m.set(pivot, j, tmp);
                    let tmp = inv.get(col, j);
                    inv.set(col, j, inv.get(pivot, j));
                    inv.set(pivot, j, tmp);
                }
            }
            let scale = m.get(col, col).recip();
            for j in 0..n {
                m.set(col, j, m.get(col, j) * scale);
                inv.set(col, j, inv.get(col, j) * scale);
            }
            for row in 0..n {
                if row == col {
                    continue;
                }
                let factor = m.get(row, col);
                if factor.norm_sqr().hi() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let v = m.get(row, j) - factor * m.get(col, j);
                    m.set(row, j, v);
                    let v = inv.get(row, j) - factor * inv.get(col, j);
                    inv.set(row, j, v);
                }
            }
        }
        Ok(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recip_is_double_double_accurate() {
        let r = dd_recip(TwoFloat::from(3.0));
        let resid = r * TwoFloat::from(3.0) - TwoFloat::from(1.0);
        assert!(f64::from(resid).abs() < 1e-31, "resid={resid:?}");
    }

    #[test]
    fn rational_conversion_keeps_low_word() {
        let third = BigRational::new(1.into(), 3.into());
        let dd = dd_from_rational(&third);
        let resid = dd * TwoFloat::from(3.0) - TwoFloat::from(1.0);
        assert!(f64::from(resid).abs() < 1e-31);
    }

    #[test]
    fn roots_of_unity_satisfy_their_equation() {
        for (order, exp) in [(3u32, 1i64), (12, 5), (15, 7), (140, 97), (1, 0), (2, 1)] {
            let z = DdComplex::root_of_unity(order, exp);
            let resid = z.powi(order as i64) - DdComplex::one();
            assert!(
                f64::from(resid.abs()) < 1e-30,
                "zeta_{order}^{exp} residual {:?}",
                resid
            );
        }
    }

    #[test]
    fn complex_division_round_trips() {
        let z = DdComplex::from_f64(1.25, -0.75);
        let w = DdComplex::from_f64(0.1, 3.0);
        let q = z / w;
        let resid = (q * w - z).abs();
        assert!(f64::from(resid) < 1e-30);
    }

    #[test]
    fn determinant_of_diagonal_times_conjugation() {
        // det(C D C^{-1}) should equal det(D) for any invertible C.
        let d = DdMatrix::from_diagonal(&[
            DdComplex::from_f64(2.0, 0.0),
            DdComplex::from_f64(0.0, 1.0),
            DdComplex::from_f64(-1.5, 0.5),
        ]);
        let mut c = DdMatrix::zeros(3);
        let entries = [
            (1.0, 0.3),
            (0.2, -0.4),
            (0.0, 1.1),
            (-0.7, 0.0),
            (2.0, 0.1),
            (0.5, 0.5),
            (0.3, -1.2),
            (0.0, 0.9),
            (1.0, 0.0),
        ];
        for (idx, (re, im)) in entries.iter().enumerate() {
            c.set(idx / 3, idx % 3, DdComplex::from_f64(*re, *im));
        }
        let cinv = c.inverse().unwrap();
        let conjugated = c.matmul(&d).matmul(&cinv);
        let resid = (conjugated.det() - d.det()).abs();
        assert!(f64::from(resid) < 1e-26, "resid={resid:?}");
    }

    #[test]
    fn singular_matrix_is_detected() {
        let mut m = DdMatrix::zeros(2);
        m.set(0, 0, DdComplex::one());
        m.set(0, 1, DdComplex::one());
        m.set(1, 0, DdComplex::one());
        m.set(1, 1, DdComplex::one());
        assert_eq!(m.inverse(), Err(NumericError::Singular));
        assert_eq!(m.det(), DdComplex::zero());
    }
}
