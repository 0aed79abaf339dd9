//! Laurent polynomials Z[q, q^-1] with arbitrary-precision integer
//! coefficients.
//!
//! This is the coefficient ring for everything downstream: quantized
//! matrices, q-rationals and q-traces all live over it. Coefficients grow
//! without bound (trace coefficients, continued-fraction numerators), so
//! they are `BigInt` throughout.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors from Laurent polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LaurentError {
    /// An operation that requires a nonzero polynomial got zero.
    ZeroInput,
    /// Division was requested by the zero polynomial.
    DivisionByZero,
    /// No exact quotient exists over Z[q, q^-1].
    NotDivisible,
    /// The input string is not in the supported textual grammar.
    Parse(String),
}

impl fmt::Display for LaurentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LaurentError::ZeroInput => write!(f, "operation undefined on the zero polynomial"),
            LaurentError::DivisionByZero => write!(f, "division by the zero polynomial"),
            LaurentError::NotDivisible => write!(f, "no exact quotient over Z[q,q^-1]"),
            LaurentError::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl std::error::Error for LaurentError {}

/// A Laurent polynomial in q over Z.
///
/// Invariant: `coeffs` is empty exactly when the polynomial is zero;
/// otherwise the first and last entries are nonzero and `coeffs[i]` is the
/// coefficient of `q^(val + i)`. The zero polynomial has no valuation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    val: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { val: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(BigInt::one(), 0)
    }

    /// The monomial c * q^e (zero if c = 0).
    pub fn monomial(c: BigInt, e: i64) -> Self {
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { val: e, coeffs: vec![c] }
        }
    }

    pub fn q() -> Self {
        LaurentPoly::monomial(BigInt::one(), 1)
    }

    pub fn q_pow(e: i64) -> Self {
        LaurentPoly::monomial(BigInt::one(), e)
    }

    /// t = q^2 - q + 1, the determinant factor of the quantized reflection.
    pub fn t() -> Self {
        LaurentPoly::from_coeffs(0, vec![BigInt::one(), -BigInt::one(), BigInt::one()])
    }

    /// Builds from the coefficient sequence of q^val, q^(val+1), ...
    /// normalizing away leading and trailing zeros.
    pub fn from_coeffs(val: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { val, coeffs };
        p.normalize();
        p
    }

    pub fn from_int(n: i64) -> Self {
        LaurentPoly::monomial(BigInt::from(n), 0)
    }

    /// Builds from (exponent, coefficient) pairs; repeated exponents add.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = LaurentPoly::zero();
        for &(e, c) in terms {
            p = &p + &LaurentPoly::monomial(BigInt::from(c), e);
        }
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.val += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.val = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.val == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent; None for the zero polynomial (zero has no valuation).
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.val)
        }
    }

    /// Highest exponent; None for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.val + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        let i = e - self.val;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Iterates (exponent, coefficient) over the stored range, including
    /// interior zeros.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let val = self.val;
        self.coeffs.iter().enumerate().map(move |(i, c)| (val + i as i64, c))
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn trailing_coeff(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    /// Multiplication by q^k.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { val: self.val + k, coeffs: self.coeffs.clone() }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { val: self.val, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at q = 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// The substitution q -> q^-1; an involution.
    pub fn reverse(&self) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let deg = self.degree().unwrap();
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { val: -deg, coeffs }
    }

    /// Whether the coefficient sequence reads the same reversed, together
    /// with the symmetry center (degree + valuation) / 2 reported as twice
    /// its value so half-integers stay exact. Zero input is rejected.
    pub fn is_palindromic(&self) -> Result<PalindromeInfo, LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::ZeroInput);
        }
        let n = self.coeffs.len();
        let palindromic = (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i]);
        Ok(PalindromeInfo { palindromic, center_twice: self.val + self.degree().unwrap() })
    }

    /// Exact quotient over Z[q, q^-1], if it exists.
    pub fn div_exact(&self, b: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if b.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let qdeg = self.coeffs.len() as i64 - b.coeffs.len() as i64;
        if qdeg < 0 {
            return Err(LaurentError::NotDivisible);
        }
        let qdeg = qdeg as usize;
        let blead = b.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); qdeg + 1];
        for i in (0..=qdeg).rev() {
            let top = rem[i + b.coeffs.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(blead);
            if !r.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                rem[i + j] -= &qc * bc;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(LaurentError::NotDivisible);
        }
        Ok(LaurentPoly::from_coeffs(self.val - b.val, quot))
    }

    /// Integer content (gcd of coefficients), positive; zero for zero.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// A greatest common divisor over Z[q, q^-1] including the integer
    /// content, normalized to valuation 0 and positive leading coefficient.
    /// gcd over the rationals by the Euclidean algorithm, then the integer
    /// content of the two inputs is restored.
    pub fn gcd(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if self.is_zero() && other.is_zero() {
            return Err(LaurentError::ZeroInput);
        }
        if self.is_zero() {
            return Ok(other.canonical_assoc());
        }
        if other.is_zero() {
            return Ok(self.canonical_assoc());
        }
        // monic gcd over Q[q], on the polynomial parts
        let mut a: Vec<BigRational> =
            self.coeffs.iter().map(|c| BigRational::from(c.clone())).collect();
        let mut b: Vec<BigRational> =
            other.coeffs.iter().map(|c| BigRational::from(c.clone())).collect();
        loop {
            if b.iter().all(Zero::is_zero) {
                break;
            }
            rational_rem(&mut a, &b);
            std::mem::swap(&mut a, &mut b);
        }
        // a now holds the gcd over Q; clear denominators, make primitive
        while a.last().map_or(false, Zero::is_zero) {
            a.pop();
        }
        let mut denom_lcm = BigInt::one();
        for c in &a {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = a.iter().map(|c| (c * BigRational::from(denom_lcm.clone())).to_integer()).collect();
        let mut g = LaurentPoly::from_coeffs(0, ints).canonical_assoc();
        let prim = g.content();
        if !prim.is_one() {
            g = g.div_exact(&LaurentPoly::monomial(prim, 0)).unwrap();
        }
        // restore the integer content shared by the inputs
        let content = self.content().gcd(&other.content());
        Ok(g.scale(&content))
    }

    /// The associate with valuation 0 and positive leading coefficient.
    pub fn canonical_assoc(&self) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut p = self.shift(-self.val);
        if p.coeffs.last().unwrap().is_negative() {
            p = -&p;
        }
        p
    }

    /// Decomposes into +-q^a * t^b if the polynomial is a unit of the
    /// localization Lambda = Z[q,q^-1]_t.
    pub fn as_lambda_unit(&self) -> Option<LambdaUnit> {
        if self.is_zero() {
            return None;
        }
        let mut p = self.clone();
        let mut tpow = 0i64;
        let t = LaurentPoly::t();
        while p.coeffs.len() > 1 {
            match p.div_exact(&t) {
                Ok(d) => {
                    p = d;
                    tpow += 1;
                }
                Err(_) => return None,
            }
        }
        let c = &p.coeffs[0];
        if c.is_one() {
            Some(LambdaUnit { negative: false, qpow: p.val, tpow })
        } else if (-c).is_one() {
            Some(LambdaUnit { negative: true, qpow: p.val, tpow })
        } else {
            None
        }
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// True when every nonzero coefficient has the same sign (the zero
    /// polynomial counts as single-signed).
    pub fn single_signed(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative()) || self.coeffs.iter().all(|c| !c.is_positive())
    }
}

/// Remainder of a by b over Q[q], in place on coefficient vectors.
fn rational_rem(a: &mut Vec<BigRational>, b: &[BigRational]) {
    let bdeg = b.len() - 1 - b.iter().rev().take_while(|c| c.is_zero()).count();
    let blead = b[bdeg].clone();
    while {
        while a.last().map_or(false, Zero::is_zero) {
            a.pop();
        }
        a.len() > bdeg
    } {
        let adeg = a.len() - 1;
        let f = a[adeg].clone() / blead.clone();
        for j in 0..=bdeg {
            let sub = &f * &b[j];
            a[adeg - bdeg + j] -= sub;
        }
        a.pop();
    }
}

/// Palindromicity verdict with the symmetry center as a half-integer
/// (stored doubled so 5/2 stays exact).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PalindromeInfo {
    pub palindromic: bool,
    pub center_twice: i64,
}

/// A unit +-q^a t^b of the localization Lambda = Z[q,q^-1]_t, where
/// t = q^2 - q + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaUnit {
    pub negative: bool,
    pub qpow: i64,
    pub tpow: i64,
}

impl LambdaUnit {
    pub fn one() -> Self {
        LambdaUnit { negative: false, qpow: 0, tpow: 0 }
    }

    pub fn q_power(k: i64) -> Self {
        LambdaUnit { negative: false, qpow: k, tpow: 0 }
    }

    pub fn mul(&self, other: &LambdaUnit) -> LambdaUnit {
        LambdaUnit {
            negative: self.negative != other.negative,
            qpow: self.qpow + other.qpow,
            tpow: self.tpow + other.tpow,
        }
    }

    pub fn inv(&self) -> LambdaUnit {
        LambdaUnit { negative: self.negative, qpow: -self.qpow, tpow: -self.tpow }
    }

    /// The unit as a Laurent polynomial; requires tpow >= 0.
    pub fn to_poly(&self) -> LaurentPoly {
        assert!(self.tpow >= 0, "negative t-power has no polynomial representative");
        let sign = if self.negative { -BigInt::one() } else { BigInt::one() };
        let p = LaurentPoly::monomial(sign, self.qpow);
        &p * &LaurentPoly::t().pow(self.tpow as u32)
    }
}

impl fmt::Display for LambdaUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.qpow {
            0 => {}
            1 => parts.push("q".into()),
            e => parts.push(format!("q^{e}")),
        }
        match self.tpow {
            0 => {}
            1 => parts.push("t".into()),
            e => parts.push(format!("t^{e}")),
        }
        let body = if parts.is_empty() { "1".to_string() } else { parts.join(" ") };
        if self.negative {
            write!(f, "-{body}")
        } else {
            write!(f, "{body}")
        }
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let val = self.val.min(rhs.val);
        let hi = self.degree().unwrap().max(rhs.degree().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - val + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - val) as usize] += c;
        }
        for (e, c) in rhs.terms() {
            coeffs[(e - val) as usize] += c;
        }
        LaurentPoly::from_coeffs(val, coeffs)
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { val: self.val, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.val + rhs.val, coeffs)
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in increasing exponent order: "1 + q + 2q^2 - q^4", with
    /// "q^-1" style negative exponents. The zero polynomial prints "0".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    /// Parses the textual format produced by `Display` (sign-separated
    /// terms like "-q^-1 - q^-2 - q^-4" or "1 + 2q^2"); an optional '*'
    /// between coefficient and q is accepted.
    fn from_str(s: &str) -> Result<Self, LaurentError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(LaurentError::Parse("empty input".into()));
        }
        let bytes = compact.as_bytes();
        let mut i = 0usize;
        let mut acc = LaurentPoly::zero();
        let err = |msg: &str| LaurentError::Parse(format!("{msg} in {compact:?}"));
        while i < bytes.len() {
            let mut neg = false;
            match bytes[i] {
                b'+' => i += 1,
                b'-' => {
                    neg = true;
                    i += 1;
                }
                _ => {}
            }
            if i >= bytes.len() {
                return Err(err("dangling sign"));
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mut coeff = if i > start {
                BigInt::from_str(&compact[start..i]).map_err(|_| err("bad coefficient"))?
            } else {
                BigInt::one()
            };
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            let mut exp = 0i64;
            if i < bytes.len() && bytes[i] == b'q' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let estart = i;
                    if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = compact[estart..i].parse().map_err(|_| err("bad exponent"))?;
                }
            } else if i == start {
                return Err(err("expected coefficient or q"));
            }
            if neg {
                coeff = -coeff;
            }
            acc = &acc + &LaurentPoly::monomial(coeff, exp);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    /// Independent model: exponent -> coefficient map with naive arithmetic.
    #[derive(Debug, Clone, PartialEq)]
    struct MapPoly(BTreeMap<i64, i64>);

    impl MapPoly {
        fn of(terms: &[(i64, i64)]) -> Self {
            let mut m = BTreeMap::new();
            for &(e, c) in terms {
                *m.entry(e).or_insert(0) += c;
            }
            m.retain(|_, c| *c != 0);
            MapPoly(m)
        }
        fn add(&self, other: &Self) -> Self {
            let mut m = self.0.clone();
            for (&e, &c) in &other.0 {
                *m.entry(e).or_insert(0) += c;
            }
            m.retain(|_, c| *c != 0);
            MapPoly(m)
        }
        fn mul(&self, other: &Self) -> Self {
            let mut m = BTreeMap::new();
            for (&e1, &c1) in &self.0 {
                for (&e2, &c2) in &other.0 {
                    *m.entry(e1 + e2).or_insert(0) += c1 * c2;
                }
            }
            m.retain(|_, c| *c != 0);
            MapPoly(m)
        }
        fn reverse(&self) -> Self {
            MapPoly(self.0.iter().map(|(&e, &c)| (-e, c)).collect())
        }
        fn eval_at_one(&self) -> i64 {
            self.0.values().sum()
        }
        fn to_poly(&self) -> LaurentPoly {
            let terms: Vec<(i64, i64)> = self.0.iter().map(|(&e, &c)| (e, c)).collect();
            LaurentPoly::from_terms(&terms)
        }
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        // (1+q) + (-q) = 1
        assert_eq!(&p("1 + q") + &p("-q"), p("1"));
        // [2]_q + q^2 = [3]_q
        assert_eq!(&p("1 + q") + &p("q^2"), p("1 + q + q^2"));
        // oracle: coefficient-wise integer addition
        let a = MapPoly::of(&[(-1, 1), (0, 1)]);
        let b = MapPoly::of(&[(-1, 1)]);
        assert_eq!(a.add(&b).to_poly(), p("2q^-1 + 1"));
        assert_eq!(&p("q^-1 + 1") + &p("q^-1"), a.add(&b).to_poly());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("1 - q") * &p("1 + q + q^2"), p("1 - q^3"));
        // t*t against the schoolbook convolution oracle
        let t = MapPoly::of(&[(0, 1), (1, -1), (2, 1)]);
        let tt = t.mul(&t);
        assert_eq!(tt.to_poly(), p("q^4 - 2q^3 + 3q^2 - 2q + 1"));
        assert_eq!(&LaurentPoly::t() * &LaurentPoly::t(), tt.to_poly());
        assert_eq!(&LaurentPoly::zero() * &p("3q^-2 + q"), LaurentPoly::zero());
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(p("1 + q + q^2 + q^3 + q^4").eval_at_one(), BigInt::from(5));
        assert_eq!(LaurentPoly::t().eval_at_one(), BigInt::one());
        // direct substitution oracle
        let m = MapPoly::of(&[(-2, 1), (1, -3)]);
        assert_eq!(m.eval_at_one(), -2);
        assert_eq!(p("q^-2 - 3q").eval_at_one(), BigInt::from(-2));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p("1 + 2q + q^3").reverse(), p("1 + 2q^-1 + q^-3"));
        // reversal oracle; t is palindromic so reverse(t) = q^-2 t
        let t = MapPoly::of(&[(0, 1), (1, -1), (2, 1)]);
        assert_eq!(LaurentPoly::t().reverse(), t.reverse().to_poly());
        assert_eq!(LaurentPoly::t().reverse(), p("q^-2 - q^-1 + 1"));
        // [4]_q reversed = q^-3 [4]_q
        let four = p("1 + q + q^2 + q^3");
        assert_eq!(four.reverse(), &four * &LaurentPoly::q_pow(-3));
    }

    #[test]
    fn palindrome_examples() {
        let tr = p("1 + q + 2q^2 + q^3 + 2q^4 + q^5 + q^6");
        let info = tr.is_palindromic().unwrap();
        assert!(info.palindromic);
        assert_eq!(info.center_twice, 6);
        assert!(!p("1 + 2q").is_palindromic().unwrap().palindromic);
        let sym = p("q^-1 + 1 + q");
        let info = sym.is_palindromic().unwrap();
        assert!(info.palindromic);
        assert_eq!(info.center_twice, 0);
        assert_eq!(LaurentPoly::zero().is_palindromic(), Err(LaurentError::ZeroInput));
    }

    #[test]
    fn div_exact_examples() {
        let c = p("q^5 + 2q^4 + 2q^3 + 3q^2 + 2q + 1");
        let prod = &c * &LaurentPoly::t();
        assert_eq!(prod.div_exact(&LaurentPoly::t()).unwrap(), c);
        assert_eq!(p("1 - q^3").div_exact(&p("1 - q")).unwrap(), p("1 + q + q^2"));
        assert_eq!(p("1 + q").div_exact(&LaurentPoly::t()), Err(LaurentError::NotDivisible));
        assert_eq!(p("1").div_exact(&LaurentPoly::zero()), Err(LaurentError::DivisionByZero));
        // quotient exists over Q but not over Z
        assert_eq!(p("q").div_exact(&p("2q")), Err(LaurentError::NotDivisible));
    }

    #[test]
    fn gcd_examples() {
        // gcd(1-q^2, 1-q^3) is an associate of 1-q; canonical form is q-1
        let g = p("1 - q^2").gcd(&p("1 - q^3")).unwrap();
        assert_eq!(g, p("q - 1"));
        let f = p("-2q^-3 + 2q^-1");
        assert_eq!(f.gcd(&LaurentPoly::zero()).unwrap(), p("2q^2 - 2"));
        assert_eq!(LaurentPoly::t().gcd(&p("q")).unwrap(), p("1"));
        assert_eq!(
            LaurentPoly::zero().gcd(&LaurentPoly::zero()),
            Err(LaurentError::ZeroInput)
        );
        // shared integer content is preserved
        assert_eq!(p("2 + 2q").gcd(&p("4q^5")).unwrap(), p("2"));
    }

    #[test]
    fn unit_decomposition() {
        let u = p("-q^3").as_lambda_unit().unwrap();
        assert_eq!(u, LambdaUnit { negative: true, qpow: 3, tpow: 0 });
        let v = (&LaurentPoly::t() * &p("q^-2")).as_lambda_unit().unwrap();
        assert_eq!(v, LambdaUnit { negative: false, qpow: -2, tpow: 1 });
        assert!(p("1 + q").as_lambda_unit().is_none());
        assert!(p("2q").as_lambda_unit().is_none());
    }

    #[test]
    fn display_and_parse_roundtrip() {
        let cases = [
            "0",
            "1",
            "-1",
            "q",
            "-q^-1 - q^-2 - q^-4",
            "1 + q + 2q^2 + 2q^3 + q^4",
            "2 - 3q + q^17",
            "5q^-3",
        ];
        for s in cases {
            let poly = p(s);
            let shown = poly.to_string();
            assert_eq!(shown.parse::<LaurentPoly>().unwrap(), poly, "case {s}");
        }
        // canonical rendering uses increasing exponent order
        assert_eq!(p("-q^-1 - q^-2 - q^-4").to_string(), "-q^-4 - q^-2 - q^-1");
        assert_eq!(p("1+q+2q^2").to_string(), "1 + q + 2q^2");
        assert_eq!(p("3*q^2 + 1").to_string(), "1 + 3q^2");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
            proptest::collection::vec((-6i64..7, -9i64..10), 0..6)
                .prop_map(|terms| LaurentPoly::from_terms(&terms))
        }

        fn arb_nonzero() -> impl Strategy<Value = LaurentPoly> {
            arb_poly().prop_filter("nonzero", |p| !p.is_zero())
        }

        proptest! {
            #[test]
            fn add_commutes(a in arb_poly(), b in arb_poly()) {
                prop_assert_eq!(&a + &b, &b + &a);
            }

            #[test]
            fn mul_commutes(a in arb_poly(), b in arb_poly()) {
                prop_assert_eq!(&a * &b, &b * &a);
            }

            #[test]
            fn add_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            }

            #[test]
            fn mul_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            }

            #[test]
            fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            }

            #[test]
            fn reverse_involution(a in arb_poly()) {
                prop_assert_eq!(a.reverse().reverse(), a);
            }

            #[test]
            fn reverse_multiplicative(a in arb_poly(), b in arb_poly()) {
                prop_assert_eq!((&a * &b).reverse(), &a.reverse() * &b.reverse());
            }

            #[test]
            fn eval_at_one_is_ring_morphism(a in arb_poly(), b in arb_poly()) {
                prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
                prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
            }

            #[test]
            fn div_exact_inverts_mul(a in arb_poly(), b in arb_nonzero()) {
                prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
            }

            #[test]
            fn palindrome_iff_reverse_is_shift(a in arb_nonzero()) {
                let info = a.is_palindromic().unwrap();
                let shifted = a.reverse().shift(a.valuation().unwrap() + a.degree().unwrap());
                prop_assert_eq!(info.palindromic, shifted == a);
            }

            #[test]
            fn parse_display_roundtrip(a in arb_poly()) {
                let shown = a.to_string();
                prop_assert_eq!(shown.parse::<LaurentPoly>().unwrap(), a);
            }

            #[test]
            fn gcd_divides_both(a in arb_nonzero(), b in arb_nonzero()) {
                let g = a.gcd(&b).unwrap();
                prop_assert!(a.div_exact(&g).is_ok());
                prop_assert!(b.div_exact(&g).is_ok());
            }
        }
    }
}
