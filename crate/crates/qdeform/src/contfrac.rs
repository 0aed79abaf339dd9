//! Positive and negative continued fractions and their quantized matrix
//! factorizations.
//!
//! A rational u/v has a unique positive expansion [a1, ..., an] once the
//! parity of n is fixed (a1 in Z, later digits >= 1), and a unique negative
//! (Hirzebruch-Jung) expansion [[c1, ..., ck]] with c1 in Z and ci >= 2 for
//! i >= 2. Positive expansions translate to words (R^a1 J)(R^a2 J)... and
//! negative ones to R^c1 S ... R^ck S; quantizing those words produces the
//! q-deformed convergents, up to an explicit unit q^min(0,a1) t^m.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::laurent::{LambdaUnit, LaurentPoly};
use crate::projective::ProjPoint;
use crate::qgroup::{self, Generator, GroupWord, QMatrix};
use crate::rational::ExtRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CFKind {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFExpansion {
    pub kind: CFKind,
    pub digits: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CFError {
    /// Digits violate the positivity constraints of the expansion kind.
    BadDigits(String),
    /// The quantized word does not factor through the predicted unit.
    ShapeMismatch(String),
    /// The odd positive factorization needs at least three digits.
    OddTooShort,
}

impl fmt::Display for CFError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CFError::BadDigits(s) => write!(f, "bad continued-fraction digits: {s}"),
            CFError::ShapeMismatch(s) => write!(f, "factorization shape mismatch: {s}"),
            CFError::OddTooShort => {
                write!(f, "odd positive factorization needs at least three digits")
            }
        }
    }
}

impl std::error::Error for CFError {}

impl CFExpansion {
    pub fn positive(digits: Vec<i64>) -> Result<Self, CFError> {
        if digits.is_empty() {
            return Err(CFError::BadDigits("empty".into()));
        }
        if digits[1..].iter().any(|&d| d < 1) {
            return Err(CFError::BadDigits(format!("{digits:?}: tail digits must be >= 1")));
        }
        Ok(CFExpansion { kind: CFKind::Positive, digits })
    }

    pub fn negative(digits: Vec<i64>) -> Result<Self, CFError> {
        if digits.is_empty() {
            return Err(CFError::BadDigits("empty".into()));
        }
        if digits[1..].iter().any(|&d| d < 2) {
            return Err(CFError::BadDigits(format!("{digits:?}: tail digits must be >= 2")));
        }
        Ok(CFExpansion { kind: CFKind::Negative, digits })
    }

    /// Classical value of the expansion.
    pub fn value(&self) -> ExtRational {
        let mut acc = ExtRational::Infinity;
        for &d in self.digits.iter().rev() {
            let dd = BigRational::from(BigInt::from(d));
            acc = match (self.kind, acc) {
                (_, ExtRational::Infinity) => ExtRational::Finite(dd),
                (CFKind::Positive, ExtRational::Finite(x)) => {
                    if x.is_zero() {
                        ExtRational::Infinity
                    } else {
                        ExtRational::Finite(dd + x.recip())
                    }
                }
                (CFKind::Negative, ExtRational::Finite(x)) => {
                    if x.is_zero() {
                        ExtRational::Infinity
                    } else {
                        ExtRational::Finite(dd - x.recip())
                    }
                }
            };
        }
        acc
    }
}

impl fmt::Display for CFExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
        match self.kind {
            CFKind::Positive => write!(f, "[{}]", digits.join(",")),
            CFKind::Negative => write!(f, "[[{}]]", digits.join(",")),
        }
    }
}

/// Euclidean positive expansion: a1 = floor(x), later digits >= 1, final
/// digit >= 2 unless the expansion is a single integer.
fn euclid_digits(x: &BigRational) -> Vec<i64> {
    let mut digits = Vec::new();
    let mut cur = x.clone();
    loop {
        let fl = cur.floor().to_integer();
        let d = i64::try_from(&fl).expect("continued-fraction digit exceeds i64");
        digits.push(d);
        let frac = &cur - BigRational::from(fl);
        if frac.is_zero() {
            break;
        }
        cur = frac.recip();
    }
    digits
}

/// The positive continued fraction of x with the requested digit-count
/// parity. The tail rewrite [..., a] <-> [..., a-1, 1] switches parity.
pub fn positive_cf(x: &BigRational, parity: Parity) -> CFExpansion {
    let mut digits = euclid_digits(x);
    let want_even = matches!(parity, Parity::Even);
    if (digits.len() % 2 == 0) != want_even {
        let n = digits.len();
        if n >= 2 && digits[n - 1] == 1 {
            // merge [..., a, 1] -> [..., a+1]
            digits.pop();
            *digits.last_mut().unwrap() += 1;
        } else {
            // split [..., a] -> [..., a-1, 1]
            *digits.last_mut().unwrap() -= 1;
            digits.push(1);
        }
    }
    CFExpansion { kind: CFKind::Positive, digits }
}

/// The negative (Hirzebruch-Jung) continued fraction of x: c1 = ceil(x),
/// recurse on 1/(c1 - x); all later digits are >= 2.
pub fn negative_cf(x: &BigRational) -> CFExpansion {
    let mut digits = Vec::new();
    let mut cur = x.clone();
    loop {
        let c = cur.ceil().to_integer();
        let d = i64::try_from(&c).expect("continued-fraction digit exceeds i64");
        digits.push(d);
        let rem = BigRational::from(c) - &cur;
        if rem.is_zero() {
            break;
        }
        cur = rem.recip();
    }
    CFExpansion { kind: CFKind::Negative, digits }
}

/// The group word of the expansion: (R^a1 J)(R^a2 J)... for positive,
/// (R^c1 S)(R^c2 S)... for negative. Zero exponents drop their R.
pub fn cf_to_word(cf: &CFExpansion) -> GroupWord {
    let second = match cf.kind {
        CFKind::Positive => Generator::J,
        CFKind::Negative => Generator::S,
    };
    let mut w = GroupWord::new();
    for &d in &cf.digits {
        w.push(Generator::R, d);
        w.push(second, 1);
    }
    w
}

/// Output of [`factorization_shape`]: the unit predicted by the expansion
/// type, the reduced matrix, and the two quantized convergents read off
/// its columns.
#[derive(Debug, Clone)]
pub struct FactorizationShape {
    pub unit: LambdaUnit,
    /// The full quantized word equals unit * matrix.
    pub matrix: QMatrix,
    /// The quantization of the expansion's value carried by the first
    /// column (sharp for even positive, flat for odd positive and for the
    /// N-prefixed negative form).
    pub convergent: ProjPoint,
    /// The quantization carried by the second column: the one-digit-shorter
    /// convergent of the same flavor.
    pub prev_convergent: ProjPoint,
}

/// Evaluates the quantized word of the expansion and extracts the
/// predicted unit.
///
/// Even positive [a1..a2m]: word = q^min(0,a1) t^m [[q U+, U'+], [q V+, V'+]]
/// with U+/V+ the sharp convergent. Odd positive [a1..a2m+1] (m >= 1):
/// same with flat convergents. Negative [[c1..ck]]: the word is prefixed
/// by N and factors as q^(min(0,c1)-1) [[U-, -q^(ck-1) U'-], [V-, ...]]
/// with U-/V- the flat quantization of the negated value.
pub fn factorization_shape(cf: &CFExpansion) -> Result<FactorizationShape, CFError> {
    match cf.kind {
        CFKind::Positive => {
            let n = cf.digits.len();
            let m = if n % 2 == 0 {
                n / 2
            } else {
                if n < 3 {
                    return Err(CFError::OddTooShort);
                }
                (n - 1) / 2
            };
            let unit =
                LambdaUnit { negative: false, qpow: cf.digits[0].min(0), tpow: m as i64 };
            let word_matrix = qgroup::eval_word(&cf_to_word(cf));
            let reduced = divide_by_unit(&word_matrix, &unit)
                .ok_or_else(|| CFError::ShapeMismatch(format!("{cf}: unit {unit}")))?;
            // columns (q U, U') / (q V, V')
            let q = LaurentPoly::q();
            let u = reduced.a.div_exact(&q).map_err(|_| {
                CFError::ShapeMismatch(format!("{cf}: first column not divisible by q"))
            })?;
            let v = reduced.c.div_exact(&q).map_err(|_| {
                CFError::ShapeMismatch(format!("{cf}: first column not divisible by q"))
            })?;
            let convergent =
                ProjPoint::make(u, v).map_err(|e| CFError::ShapeMismatch(format!("{cf}: {e}")))?;
            let prev_convergent = ProjPoint::make(reduced.b.clone(), reduced.d.clone())
                .map_err(|e| CFError::ShapeMismatch(format!("{cf}: {e}")))?;
            Ok(FactorizationShape { unit, matrix: reduced, convergent, prev_convergent })
        }
        CFKind::Negative => {
            let unit = LambdaUnit { negative: false, qpow: cf.digits[0].min(0) - 1, tpow: 0 };
            let word = GroupWord::new().with(Generator::N, 1).concat(&cf_to_word(cf));
            let word_matrix = qgroup::eval_word(&word);
            let reduced = divide_by_unit(&word_matrix, &unit)
                .ok_or_else(|| CFError::ShapeMismatch(format!("{cf}: unit {unit}")))?;
            let convergent = ProjPoint::make(reduced.a.clone(), reduced.c.clone())
                .map_err(|e| CFError::ShapeMismatch(format!("{cf}: {e}")))?;
            // second column carries -q^(ck - 1) times the truncated flat value
            let ck = *cf.digits.last().unwrap();
            let scale = LaurentPoly::monomial(-BigInt::from(1), ck - 1);
            let ub = reduced
                .b
                .div_exact(&scale)
                .map_err(|_| CFError::ShapeMismatch(format!("{cf}: second column scale")))?;
            let vb = reduced
                .d
                .div_exact(&scale)
                .map_err(|_| CFError::ShapeMismatch(format!("{cf}: second column scale")))?;
            let prev_convergent = ProjPoint::make(ub, vb)
                .map_err(|e| CFError::ShapeMismatch(format!("{cf}: {e}")))?;
            Ok(FactorizationShape { unit, matrix: reduced, convergent, prev_convergent })
        }
    }
}

/// Divides every entry by the unit, failing when the division is inexact.
fn divide_by_unit(m: &QMatrix, unit: &LambdaUnit) -> Option<QMatrix> {
    let tpow = unit.tpow + m.t_neg();
    if tpow < 0 {
        return None;
    }
    let sign = if unit.negative { -BigInt::from(1) } else { BigInt::from(1) };
    let divisor = &LaurentPoly::monomial(sign, unit.qpow) * &LaurentPoly::t().pow(tpow as u32);
    let div = |p: &LaurentPoly| -> Option<LaurentPoly> {
        if p.is_zero() {
            Some(LaurentPoly::zero())
        } else {
            p.div_exact(&divisor).ok()
        }
    };
    Some(QMatrix::new(div(&m.a)?, div(&m.b)?, div(&m.c)?, div(&m.d)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn positive_cf_of_7_5() {
        assert_eq!(positive_cf(&rat(7, 5), Parity::Even).digits, vec![1, 2, 1, 1]);
        assert_eq!(positive_cf(&rat(7, 5), Parity::Odd).digits, vec![1, 2, 2]);
    }

    #[test]
    fn positive_cf_of_integers() {
        assert_eq!(positive_cf(&rat(3, 1), Parity::Even).digits, vec![2, 1]);
        assert_eq!(positive_cf(&rat(3, 1), Parity::Odd).digits, vec![3]);
        assert_eq!(positive_cf(&rat(0, 1), Parity::Even).digits, vec![-1, 1]);
        assert_eq!(positive_cf(&rat(-3, 1), Parity::Odd).digits, vec![-3]);
    }

    #[test]
    fn negative_cf_examples() {
        // ceil-and-reciprocate oracle: 2 - 1/(2 - 1/3) = 7/5
        let cf = negative_cf(&rat(7, 5));
        assert_eq!(cf.digits, vec![2, 2, 3]);
        assert_eq!(cf.value(), ExtRational::from_frac(7, 5));
        assert_eq!(negative_cf(&rat(3, 1)).digits, vec![3]);
        let neg = negative_cf(&rat(-7, 5));
        assert_eq!(neg.digits[0], -1);
        assert_eq!(neg.value(), ExtRational::from_frac(-7, 5));
    }

    #[test]
    fn words_from_expansions() {
        let cf = positive_cf(&rat(7, 5), Parity::Odd);
        assert_eq!(cf_to_word(&cf).to_string(), "R J R^2 J R^2 J");
        // [0] gives R^0 J = J
        let zero = CFExpansion::positive(vec![0]).unwrap();
        assert_eq!(cf_to_word(&zero).to_string(), "J");
        // negative expansion of 7/5 prefixed by N has the classical matrix
        // [[-7, 3], [5, -2]]
        let neg = negative_cf(&rat(7, 5));
        let word = GroupWord::new().with(Generator::N, 1).concat(&cf_to_word(&neg));
        assert_eq!(word.classical(), crate::rational::IntMatrix::new(-7, 3, 5, -2));
    }

    #[test]
    fn factorization_even_gives_sharp_7_5() {
        let cf = positive_cf(&rat(7, 5), Parity::Even);
        let shape = factorization_shape(&cf).unwrap();
        assert_eq!(shape.unit, LambdaUnit { negative: false, qpow: 0, tpow: 2 });
        let sharp =
            ProjPoint::make(p("1 + q + 2q^2 + 2q^3 + q^4"), p("1 + q + 2q^2 + q^3")).unwrap();
        assert_eq!(shape.convergent, sharp);
        // the truncation [1,2,1] = 4/3
        assert_eq!(shape.prev_convergent.eval_at_one().unwrap(), ExtRational::from_frac(4, 3));
    }

    #[test]
    fn factorization_odd_gives_flat_7_5() {
        let cf = positive_cf(&rat(7, 5), Parity::Odd);
        let shape = factorization_shape(&cf).unwrap();
        assert_eq!(shape.unit, LambdaUnit { negative: false, qpow: 0, tpow: 1 });
        let flat =
            ProjPoint::make(p("1 + q + q^2 + 2q^3 + q^4 + q^5"), p("1 + q + q^2 + q^3 + q^4"))
                .unwrap();
        assert_eq!(shape.convergent, flat);
        // matrix exactly as displayed for R J R^2 J R^2 J divided by t
        let expected = QMatrix::new(
            p("q^6 + q^5 + 2q^4 + q^3 + q^2 + q"),
            p("q^3 + q^2 + 1"),
            p("q^5 + q^4 + q^3 + q^2 + q"),
            p("q^2 + 1"),
        );
        assert!(shape.matrix.value_eq(&expected));
    }

    #[test]
    fn factorization_negative_shape() {
        let cf = negative_cf(&rat(7, 5));
        let shape = factorization_shape(&cf).unwrap();
        assert_eq!(shape.unit, LambdaUnit { negative: false, qpow: -1, tpow: 0 });
        // first column is the flat quantization of -7/5
        assert_eq!(shape.convergent.eval_at_one().unwrap(), ExtRational::from_frac(-7, 5));
        // second column carries -q^(ck-1) times the flat value of -3/2
        assert_eq!(shape.prev_convergent.eval_at_one().unwrap(), ExtRational::from_frac(-3, 2));
    }

    #[test]
    fn factorization_single_digit() {
        // even [n-1, 1] of an integer works; odd single digit is rejected
        let cf = positive_cf(&rat(5, 1), Parity::Even);
        let shape = factorization_shape(&cf).unwrap();
        assert_eq!(shape.convergent, ProjPoint::from_poly(p("1 + q + q^2 + q^3 + q^4")));
        let single = CFExpansion::positive(vec![4]).unwrap();
        assert_eq!(factorization_shape(&single), Err(CFError::OddTooShort));
    }

    #[test]
    fn digit_constraints_validated() {
        assert!(CFExpansion::positive(vec![2, 0]).is_err());
        assert!(CFExpansion::negative(vec![2, 1]).is_err());
        assert!(CFExpansion::positive(vec![-5, 3, 1]).is_ok());
        assert!(CFExpansion::negative(vec![-5, 3, 2]).is_ok());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_rational() -> impl Strategy<Value = BigRational> {
            (-60i64..61, 1i64..31).prop_map(|(n, d)| rat(n, d))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn positive_roundtrip(x in arb_rational(), even in proptest::bool::ANY) {
                let parity = if even { Parity::Even } else { Parity::Odd };
                let cf = positive_cf(&x, parity);
                prop_assert_eq!(cf.digits.len() % 2 == 0, even);
                prop_assert!(CFExpansion::positive(cf.digits.clone()).is_ok());
                prop_assert_eq!(cf.value(), ExtRational::Finite(x));
            }

            #[test]
            fn negative_roundtrip(x in arb_rational()) {
                let cf = negative_cf(&x);
                prop_assert!(CFExpansion::negative(cf.digits.clone()).is_ok());
                prop_assert_eq!(cf.value(), ExtRational::Finite(x));
            }

            #[test]
            fn parities_differ_by_tail_rewrite(x in arb_rational()) {
                let even = positive_cf(&x, Parity::Even).digits;
                let odd = positive_cf(&x, Parity::Odd).digits;
                // the rewrite [..., a] <-> [..., a-1, 1] preserves digit sums
                prop_assert_eq!(even.iter().sum::<i64>(), odd.iter().sum::<i64>());
                let (long, short) =
                    if even.len() > odd.len() { (&even, &odd) } else { (&odd, &even) };
                prop_assert_eq!(long.len(), short.len() + 1);
                prop_assert_eq!(long[long.len() - 1], 1);
                prop_assert_eq!(&long[..short.len() - 1], &short[..short.len() - 1]);
                prop_assert_eq!(long[short.len() - 1], short[short.len() - 1] - 1);
            }

            #[test]
            fn even_word_on_infinity_is_sharp(x in arb_rational()) {
                // cross-module: the quantized even word sends 1/0 to the
                // sharp factorization convergent
                let cf = positive_cf(&x, Parity::Even);
                let m = qgroup::eval_word(&cf_to_word(&cf));
                let img = qgroup::mobius(&m, &ProjPoint::infinity()).unwrap();
                let shape = factorization_shape(&cf).unwrap();
                prop_assert_eq!(img, shape.convergent);
            }
        }
    }
}
