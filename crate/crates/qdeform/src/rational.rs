//! The extended rational line Q ∪ {∞} and classical 2x2 integer matrices
//! acting on it by fractional-linear transformations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A point of P^1(Q): a rational number or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(BigRational),
    Infinity,
}

impl ExtRational {
    pub fn from_frac(num: i64, den: i64) -> Self {
        if den == 0 {
            ExtRational::Infinity
        } else {
            ExtRational::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
        }
    }

    pub fn from_int(n: i64) -> Self {
        ExtRational::Finite(BigRational::from(BigInt::from(n)))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRational::Infinity)
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            ExtRational::Infinity => None,
        }
    }
}

impl From<BigRational> for ExtRational {
    fn from(r: BigRational) -> Self {
        ExtRational::Finite(r)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            ExtRational::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for ExtRational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") || s == "1/0" {
            return Ok(ExtRational::Infinity);
        }
        if let Some((n, d)) = s.split_once('/') {
            let num: BigInt = n.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
            let den: BigInt = d.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
            if den.is_zero() {
                if num.is_zero() {
                    return Err("0/0 is not a point of the projective line".into());
                }
                return Ok(ExtRational::Infinity);
            }
            Ok(ExtRational::Finite(BigRational::new(num, den)))
        } else {
            let n: BigInt = s.parse().map_err(|e| format!("bad integer: {e}"))?;
            Ok(ExtRational::Finite(BigRational::from(n)))
        }
    }
}

/// A 2x2 integer matrix, used for the classical (q = 1) side of every
/// quantized computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMatrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMatrix { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        IntMatrix::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        IntMatrix {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    /// Inverse scaled to integer entries; valid for det = +-1.
    pub fn inv_unimodular(&self) -> IntMatrix {
        let det = self.det();
        assert!(det.abs().is_one(), "inverse requires determinant +-1");
        let m = IntMatrix { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() };
        if det.is_one() {
            m
        } else {
            IntMatrix { a: -m.a, b: -m.b, c: -m.c, d: -m.d }
        }
    }

    pub fn pow(&self, n: i64) -> IntMatrix {
        let base = if n < 0 { self.inv_unimodular() } else { self.clone() };
        let mut acc = IntMatrix::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// The fractional-linear action (a r + b s)/(c r + d s) on r/s.
    pub fn act(&self, x: &ExtRational) -> ExtRational {
        let (r, s) = match x {
            ExtRational::Infinity => (BigInt::one(), BigInt::zero()),
            ExtRational::Finite(v) => (v.numer().clone(), v.denom().clone()),
        };
        let num = &self.a * &r + &self.b * &s;
        let den = &self.c * &r + &self.d * &s;
        if den.is_zero() {
            assert!(!num.is_zero(), "degenerate action of a singular matrix");
            ExtRational::Infinity
        } else {
            ExtRational::Finite(BigRational::new(num, den))
        }
    }
}
