//! Scalar fields: prime fields F_p, rationals, reals, and complexes.
//!
//! A [`FieldSpec`] names the field an array or matrix lives over; a
//! [`Scalar`] is one element of such a field. Exact kinds (`Fp`, `Q`)
//! compare bit-exactly, float kinds carry a per-field absolute tolerance
//! used by every comparison in the crate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Default comparison tolerance for real/complex fields.
pub const DEFAULT_TOL: f64 = 1e-9;

/// The scalar field of an array, matrix, or polynomial system.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum FieldSpec {
    /// Prime field F_p, residues stored as `u64` in `0..p`.
    Fp { p: u64 },
    /// Rational numbers with arbitrary-precision integer backing.
    Q,
    /// Real numbers as `f64` with absolute comparison tolerance `tol`.
    R { tol: f64 },
    /// Complex numbers as a pair of `f64` with tolerance `tol`.
    C { tol: f64 },
}

impl FieldSpec {
    pub fn fp(p: u64) -> Result<Self> {
        if p < 2 || p >= (1u64 << 31) {
            return Err(Error::Input(format!("modulus {p} out of range [2, 2^31)")));
        }
        if !is_prime(p) {
            return Err(Error::Input(format!("modulus {p} is not prime")));
        }
        Ok(FieldSpec::Fp { p })
    }

    pub fn rational() -> Self {
        FieldSpec::Q
    }

    pub fn real() -> Self {
        FieldSpec::R { tol: DEFAULT_TOL }
    }

    pub fn complex() -> Self {
        FieldSpec::C { tol: DEFAULT_TOL }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, FieldSpec::Fp { .. } | FieldSpec::Q)
    }

    /// Comparison tolerance: 0 for exact kinds.
    pub fn tol(&self) -> f64 {
        match self {
            FieldSpec::Fp { .. } | FieldSpec::Q => 0.0,
            FieldSpec::R { tol } | FieldSpec::C { tol } => *tol,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Fp { .. } => Scalar::Fp(0),
            FieldSpec::Q => Scalar::Q(BigRational::zero()),
            FieldSpec::R { .. } => Scalar::R(0.0),
            FieldSpec::C { .. } => Scalar::C(Complex64::new(0.0, 0.0)),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Fp { .. } => Scalar::Fp(1),
            FieldSpec::Q => Scalar::Q(BigRational::one()),
            FieldSpec::R { .. } => Scalar::R(1.0),
            FieldSpec::C { .. } => Scalar::C(Complex64::new(1.0, 0.0)),
        }
    }

    /// Embed a small signed integer.
    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Fp { p } => {
                let m = v.rem_euclid(*p as i64) as u64;
                Scalar::Fp(m)
            }
            FieldSpec::Q => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::R { .. } => Scalar::R(v as f64),
            FieldSpec::C { .. } => Scalar::C(Complex64::new(v as f64, 0.0)),
        }
    }

    /// Check that a scalar is a valid element of this field (reduced
    /// residue, finite float) and matches the field kind.
    pub fn validate(&self, s: &Scalar) -> Result<()> {
        let ok = match (self, s) {
            (FieldSpec::Fp { p }, Scalar::Fp(v)) => v < p,
            (FieldSpec::Q, Scalar::Q(_)) => true,
            (FieldSpec::R { .. }, Scalar::R(v)) => v.is_finite(),
            (FieldSpec::C { .. }, Scalar::C(v)) => v.re.is_finite() && v.im.is_finite(),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Input(format!("scalar {s:?} invalid for field {self:?}")))
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Fp { p }, Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (FieldSpec::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (FieldSpec::R { .. }, Scalar::R(x), Scalar::R(y)) => Scalar::R(x + y),
            (FieldSpec::C { .. }, Scalar::C(x), Scalar::C(y)) => Scalar::C(x + y),
            _ => panic!("field/scalar mismatch in add"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Fp { p }, Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            (FieldSpec::Q, Scalar::Q(x)) => Scalar::Q(-x),
            (FieldSpec::R { .. }, Scalar::R(x)) => Scalar::R(-x),
            (FieldSpec::C { .. }, Scalar::C(x)) => Scalar::C(-x),
            _ => panic!("field/scalar mismatch in neg"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            // p < 2^31 keeps the product inside u64.
            (FieldSpec::Fp { p }, Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x * y) % p),
            (FieldSpec::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (FieldSpec::R { .. }, Scalar::R(x), Scalar::R(y)) => Scalar::R(x * y),
            (FieldSpec::C { .. }, Scalar::C(x), Scalar::C(y)) => Scalar::C(x * y),
            _ => panic!("field/scalar mismatch in mul"),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::Input("division by zero".into()));
        }
        Ok(match (self, a) {
            (FieldSpec::Fp { p }, Scalar::Fp(x)) => Scalar::Fp(mod_inverse(*x, *p)),
            (FieldSpec::Q, Scalar::Q(x)) => Scalar::Q(x.recip()),
            (FieldSpec::R { .. }, Scalar::R(x)) => Scalar::R(1.0 / x),
            (FieldSpec::C { .. }, Scalar::C(x)) => Scalar::C(x.inv()),
            _ => panic!("field/scalar mismatch in inv"),
        })
    }

    /// Complex conjugate; identity on the other kinds.
    pub fn conj(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::C { .. }, Scalar::C(x)) => Scalar::C(x.conj()),
            _ => a.clone(),
        }
    }

    /// Exact zero test for exact fields, |a| == 0 for floats (tolerance
    /// decisions are made at comparison sites where a scale is known).
    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(x) => *x == 0,
            Scalar::Q(x) => x.is_zero(),
            Scalar::R(x) => *x == 0.0,
            Scalar::C(x) => x.re == 0.0 && x.im == 0.0,
        }
    }

    /// Absolute value of a scalar as f64 (norm for complex, 0/positive
    /// indicator for exact kinds where only zero/nonzero matters).
    pub fn abs(&self, a: &Scalar) -> f64 {
        match a {
            Scalar::Fp(x) => {
                if *x == 0 {
                    0.0
                } else {
                    1.0
                }
            }
            Scalar::Q(x) => {
                if x.is_zero() {
                    0.0
                } else {
                    1.0
                }
            }
            Scalar::R(x) => x.abs(),
            Scalar::C(x) => x.norm(),
        }
    }

    /// Scale-aware equality: exact for exact kinds, `|a-b| <= tol*max(1, scale)`
    /// for floats. `scale` is usually the max-abs entry of the operands.
    pub fn approx_eq_scaled(&self, a: &Scalar, b: &Scalar, scale: f64) -> bool {
        match (a, b) {
            (Scalar::Fp(x), Scalar::Fp(y)) => x == y,
            (Scalar::Q(x), Scalar::Q(y)) => x == y,
            (Scalar::R(x), Scalar::R(y)) => (x - y).abs() <= self.tol() * scale.max(1.0),
            (Scalar::C(x), Scalar::C(y)) => (x - y).norm() <= self.tol() * scale.max(1.0),
            _ => false,
        }
    }

    pub fn approx_eq(&self, a: &Scalar, b: &Scalar) -> bool {
        let scale = self.abs(a).max(self.abs(b));
        self.approx_eq_scaled(a, b, scale)
    }

    /// All residues of F_p in order 0..p. Panics on non-prime-field kinds.
    pub fn residues(&self) -> impl Iterator<Item = Scalar> {
        match self {
            FieldSpec::Fp { p } => (0..*p).map(Scalar::Fp),
            _ => panic!("residues() requires a prime field"),
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            FieldSpec::Fp { p } => Some(*p),
            _ => None,
        }
    }
}

/// One element of a [`FieldSpec`].
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub enum Scalar {
    Fp(u64),
    Q(BigRational),
    R(f64),
    C(Complex64),
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(v) => write!(f, "{v}"),
            Scalar::Q(v) => write!(f, "{v}"),
            Scalar::R(v) => write!(f, "{v}"),
            Scalar::C(v) => write!(f, "{}+{}i", v.re, v.im),
        }
    }
}

impl Scalar {
    /// Render in the canonical JSON value form: decimal residue string for
    /// F_p, `num/den` for Q, plain number for R, `[re, im]` for C.
    pub fn to_json_value(&self) -> serde_json::Value {
        match self {
            Scalar::Fp(v) => serde_json::Value::String(v.to_string()),
            Scalar::Q(v) => {
                let s = if v.denom().is_one() {
                    v.numer().to_string()
                } else {
                    format!("{}/{}", v.numer(), v.denom())
                };
                serde_json::Value::String(s)
            }
            Scalar::R(v) => serde_json::json!(v),
            Scalar::C(v) => serde_json::json!([v.re, v.im]),
        }
    }

    pub fn from_json_value(field: &FieldSpec, v: &serde_json::Value) -> Result<Scalar> {
        let s = match (field, v) {
            (FieldSpec::Fp { p }, serde_json::Value::String(s)) => {
                let n: i64 = s
                    .parse()
                    .map_err(|_| Error::Input(format!("bad residue {s:?}")))?;
                Scalar::Fp(n.rem_euclid(*p as i64) as u64)
            }
            (FieldSpec::Fp { p }, serde_json::Value::Number(n)) => {
                let n = n
                    .as_i64()
                    .ok_or_else(|| Error::Input("residue not an integer".into()))?;
                Scalar::Fp(n.rem_euclid(*p as i64) as u64)
            }
            (FieldSpec::Q, serde_json::Value::String(s)) => Scalar::Q(parse_rational(s)?),
            (FieldSpec::Q, serde_json::Value::Number(n)) => {
                let n = n
                    .as_i64()
                    .ok_or_else(|| Error::Input("rational literal must be integral".into()))?;
                Scalar::Q(BigRational::from_integer(BigInt::from(n)))
            }
            (FieldSpec::R { .. }, serde_json::Value::Number(n)) => Scalar::R(
                n.as_f64()
                    .ok_or_else(|| Error::Input("bad real value".into()))?,
            ),
            (FieldSpec::C { .. }, serde_json::Value::Array(a)) if a.len() == 2 => {
                let re = a[0]
                    .as_f64()
                    .ok_or_else(|| Error::Input("bad complex value".into()))?;
                let im = a[1]
                    .as_f64()
                    .ok_or_else(|| Error::Input("bad complex value".into()))?;
                Scalar::C(Complex64::new(re, im))
            }
            _ => return Err(Error::Input(format!("value {v} does not fit field {field:?}"))),
        };
        field.validate(&s)?;
        Ok(s)
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let parts: Vec<&str> = s.split('/').collect();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse()
            .map_err(|_| Error::Input(format!("bad integer {t:?}")))
    };
    match parts.as_slice() {
        [n] => Ok(BigRational::from_integer(parse_int(n)?)),
        [n, d] => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Input("zero denominator".into()));
            }
            Ok(BigRational::new(parse_int(n)?, den))
        }
        _ => Err(Error::Input(format!("bad rational {s:?}"))),
    }
}

/// Extended-Euclid inverse of `a` mod prime `p`; caller guarantees `a != 0`.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of non-unit");
    t.rem_euclid(p as i128) as u64
}

/// Deterministic trial-division primality test; moduli are < 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic_wraps() {
        let f = FieldSpec::fp(5).unwrap();
        let a = Scalar::Fp(3);
        let b = Scalar::Fp(4);
        assert_eq!(f.add(&a, &b), Scalar::Fp(2));
        assert_eq!(f.mul(&a, &b), Scalar::Fp(2));
        assert_eq!(f.neg(&a), Scalar::Fp(2));
        assert_eq!(f.inv(&a).unwrap(), Scalar::Fp(2)); // 3*2 = 6 = 1 mod 5
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(FieldSpec::fp(6).is_err());
        assert!(FieldSpec::fp(1).is_err());
        assert!(FieldSpec::fp(32771).is_ok());
    }

    #[test]
    fn float_comparison_uses_scale() {
        let f = FieldSpec::R { tol: 1e-9 };
        let a = Scalar::R(1e6);
        let b = Scalar::R(1e6 + 1e-4);
        assert!(f.approx_eq(&a, &b));
        let c = Scalar::R(1e-4);
        assert!(!f.approx_eq(&f.zero(), &c));
    }

    #[test]
    fn tol_is_zero_for_exact_kinds() {
        assert_eq!(FieldSpec::fp(7).unwrap().tol(), 0.0);
        assert_eq!(FieldSpec::Q.tol(), 0.0);
    }

    #[test]
    fn json_value_round_trip() {
        let cases = vec![
            (FieldSpec::fp(7).unwrap(), Scalar::Fp(5)),
            (
                FieldSpec::Q,
                Scalar::Q(BigRational::new(BigInt::from(-3), BigInt::from(4))),
            ),
            (FieldSpec::real(), Scalar::R(0.125)),
            (FieldSpec::complex(), Scalar::C(Complex64::new(1.5, -2.0))),
        ];
        for (f, s) in cases {
            let v = s.to_json_value();
            assert_eq!(Scalar::from_json_value(&f, &v).unwrap(), s);
        }
    }
}
