//! Points of P^1(Z(q)) in canonical form.
//!
//! A point is a pair of Laurent polynomials (num, den), not both zero,
//! reduced so that gcd(num, den) is a unit and the denominator has
//! valuation 0 and positive leading coefficient. The point at infinity is
//! 1/0. Under this normalization equal points have identical
//! representations, so projective equality is structural equality.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::laurent::LaurentPoly;
use crate::rational::ExtRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointError {
    BothZero,
    /// A Mobius image collapsed to 0/0; impossible for invertible matrices.
    DegeneratePoint,
    /// Numerator and denominator both vanish at q = 1.
    Indeterminate,
}

impl fmt::Display for PointError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointError::BothZero => write!(f, "0/0 is not a projective point"),
            PointError::DegeneratePoint => write!(f, "Mobius action degenerated to 0/0"),
            PointError::Indeterminate => write!(f, "numerator and denominator both vanish at q=1"),
        }
    }
}

impl std::error::Error for PointError {}

impl ProjPoint {
    /// Canonical representative of [num : den].
    pub fn make(num: LaurentPoly, den: LaurentPoly) -> Result<ProjPoint, PointError> {
        if num.is_zero() && den.is_zero() {
            return Err(PointError::BothZero);
        }
        if den.is_zero() {
            return Ok(ProjPoint { num: LaurentPoly::one(), den });
        }
        if num.is_zero() {
            return Ok(ProjPoint { num, den: LaurentPoly::one() });
        }
        let g = num.gcd(&den).expect("both operands nonzero");
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        // remaining unit freedom: scale so den has valuation 0 and
        // positive leading coefficient
        let shift = -den.valuation().unwrap();
        num = num.shift(shift);
        den = den.shift(shift);
        if den.leading_coeff().unwrap() < &BigInt::zero() {
            num = -&num;
            den = -&den;
        }
        Ok(ProjPoint { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> ProjPoint {
        ProjPoint { num: p, den: LaurentPoly::one() }
    }

    /// The point at infinity 1/0.
    pub fn infinity() -> ProjPoint {
        ProjPoint { num: LaurentPoly::one(), den: LaurentPoly::zero() }
    }

    /// The left deformation of infinity, 1/(1-q), in canonical form
    /// -1/(q-1).
    pub fn flat_infinity() -> ProjPoint {
        ProjPoint::make(LaurentPoly::one(), &LaurentPoly::one() - &LaurentPoly::q()).unwrap()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_infinity(&self) -> bool {
        self.den.is_zero()
    }

    /// Projective equality by cross-multiplication.
    pub fn equals(&self, other: &ProjPoint) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// The substitution q -> q^-1 applied to the point.
    pub fn reverse(&self) -> ProjPoint {
        ProjPoint::make(self.num.reverse(), self.den.reverse()).expect("not both zero")
    }

    /// Scales by a Laurent polynomial unit-like factor (exact, projective
    /// no-op but useful to build displayed representatives).
    pub fn scale(&self, f: &LaurentPoly) -> Result<ProjPoint, PointError> {
        ProjPoint::make(&self.num * f, self.den.clone())
    }

    /// Value at q = 1 as an extended rational.
    pub fn eval_at_one(&self) -> Result<ExtRational, PointError> {
        let n = self.num.eval_at_one();
        let d = self.den.eval_at_one();
        if d.is_zero() {
            if n.is_zero() {
                return Err(PointError::Indeterminate);
            }
            return Ok(ExtRational::Infinity);
        }
        Ok(ExtRational::Finite(BigRational::new(n, d)))
    }

    /// JSON encoding {"num": [[exp, coeff], ...], "den": ...} with
    /// coefficients as decimal strings when they exceed i64.
    pub fn to_json(&self) -> serde_json::Value {
        fn poly_json(p: &LaurentPoly) -> serde_json::Value {
            let terms: Vec<serde_json::Value> = p
                .terms()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| {
                    let coeff = match i64::try_from(c) {
                        Ok(v) => serde_json::json!(v),
                        Err(_) => serde_json::json!(c.to_string()),
                    };
                    serde_json::json!([e, coeff])
                })
                .collect();
            serde_json::Value::Array(terms)
        }
        serde_json::json!({ "num": poly_json(&self.num), "den": poly_json(&self.den) })
    }

    pub fn from_json(v: &serde_json::Value) -> Option<ProjPoint> {
        fn poly_from(v: &serde_json::Value) -> Option<LaurentPoly> {
            let mut p = LaurentPoly::zero();
            for term in v.as_array()? {
                let pair = term.as_array()?;
                let e = pair.first()?.as_i64()?;
                let c = match pair.get(1)? {
                    serde_json::Value::Number(n) => BigInt::from(n.as_i64()?),
                    serde_json::Value::String(s) => s.parse().ok()?,
                    _ => return None,
                };
                p = &p + &LaurentPoly::monomial(c, e);
            }
            Some(p)
        }
        let num = poly_from(v.get("num")?)?;
        let den = poly_from(v.get("den")?)?;
        ProjPoint::make(num, den).ok()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.to_string();
        let den = self.den.to_string();
        let wrap = |s: &str| {
            if s.contains(' ') {
                format!("({s})")
            } else {
                s.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&num), wrap(&den))
    }
}
