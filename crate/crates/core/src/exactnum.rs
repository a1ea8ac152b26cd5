//! Exact scalar arithmetic: arbitrary-precision rationals, half-integer spin
//! labels, quadratic root-pair factors, generalized factorials, single
//! quadratic surds, and signed-square coupling values.
//!
//! Root pairs are never extracted as radicals. A pair of roots (r1, r2) with
//! leading coefficient `a` lives here as the quadratic map
//! k -> a k^2 - a (r1 + r2) k + a r1 r2, whose coefficients are rational even
//! when the roots are irrational or complex conjugate. All generalized
//! factorials are products of evaluations of such maps and therefore exact.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar, always reduced, denominator positive.
pub type Rational = BigRational;

/// Small rational constant `n/d`.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses an exact rational from `"p"` or `"p/q"` with q > 0.
///
/// Decimal and exponent notation are rejected so that no silent
/// float-to-rational conversion can reach the exact kernels.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("malformed rational {s:?}; expected \"p\" or \"p/q\""));
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = num_s.parse().map_err(|_| bad())?;
    let denom: BigInt = match den_s {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom <= BigInt::zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Renders a rational as `"p"` or `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// A spin or weight held exactly as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The value as an integer, when it is one.
    pub fn as_int(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.twice / 2)
        } else {
            None
        }
    }

    /// The value as a nonnegative integer, when it is one. `j + m` and
    /// `j - m` for a valid (j, m) pair always pass through here.
    pub fn as_nonneg_int(self) -> Option<i64> {
        self.as_int().filter(|v| *v >= 0)
    }

    pub fn to_rational(self) -> Rational {
        rat(self.twice, 2)
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    pub fn is_negative(self) -> bool {
        self.twice < 0
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `"2"`, `"3/2"`, `"-1/2"`; any other denominator is rejected.
    fn from_str(s: &str) -> Result<HalfInt> {
        let r = parse_rational(s)?;
        let twice = &r * rat_int(2);
        if !twice.is_integer() {
            return Err(Error::InvalidInput(format!(
                "{s:?} is not an integer or half-integer"
            )));
        }
        let t = twice.to_integer().to_i64().ok_or_else(|| {
            Error::InvalidInput(format!("{s:?} out of supported spin range"))
        })?;
        Ok(HalfInt::from_twice(t))
    }
}

/// n! for n >= 0; `None` for negative n. Terms whose denominator contains a
/// negative-argument factorial are dropped by the 1/(-n)! = 0 convention.
pub fn factorial_opt(n: i64) -> Option<BigInt> {
    if n < 0 {
        return None;
    }
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Some(acc)
}

/// n! as a rational; panics on negative input (callers guard ranges).
pub fn factorial_rat(n: i64) -> Rational {
    Rational::from_integer(factorial_opt(n).expect("factorial of negative integer"))
}

/// Binomial coefficient, zero outside 0 <= k <= n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
pub fn pochhammer(a: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// The quadratic map k -> alpha k^2 + beta k + gamma encoding a root pair by
/// its symmetric functions. The degenerate linear limit is (0, 0, 1), which
/// makes every generalized factorial built from it equal to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFactor {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl QuadraticFactor {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        QuadraticFactor { alpha, beta, gamma }
    }

    /// The linear-limit factor: identically one.
    pub fn degenerate() -> Self {
        QuadraticFactor {
            alpha: Rational::zero(),
            beta: Rational::zero(),
            gamma: Rational::one(),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_one()
    }

    pub fn eval_int(&self, k: i64) -> Rational {
        self.eval(&rat_int(k))
    }

    pub fn eval(&self, k: &Rational) -> Rational {
        (&self.alpha * k + &self.beta) * k + &self.gamma
    }

    /// Factor for the reflected-and-shifted root pair r -> 1 - r + c.
    ///
    /// If the original pair has root sum s and product p, the new pair has
    /// sum 2 + 2c - s and product (1+c)^2 - (1+c) s + p; both stay rational,
    /// so the new coefficients follow directly from the old ones.
    pub fn shift_reflect(&self, c: &Rational) -> Self {
        let one_plus_c = c + Rational::one();
        let beta = -(&self.alpha * rat_int(2) * &one_plus_c) - &self.beta;
        let gamma =
            &self.alpha * &one_plus_c * &one_plus_c + &self.beta * &one_plus_c + &self.gamma;
        QuadraticFactor { alpha: self.alpha.clone(), beta, gamma }
    }
}

/// Generalized factorial over a quadratic factor: the product of q(k) for
/// k = 1..n, with the empty product equal to one. Zero factors are allowed;
/// the caller decides whether a zero is fatal.
pub fn gen_factorial(q: &QuadraticFactor, n: u32) -> Rational {
    let mut acc = Rational::one();
    for k in 1..=n as i64 {
        acc *= q.eval_int(k);
    }
    acc
}

fn extract_square_u64(n: u64) -> (u64, u64) {
    let mut m = n;
    let mut outer: u64 = 1;
    let mut free: u64 = 1;
    let mut d: u64 = 2;
    while d.saturating_mul(d) <= m {
        if m % d == 0 {
            let mut e = 0u32;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            outer *= d.pow(e / 2);
            if e % 2 == 1 {
                free *= d;
            }
        }
        d += 1;
    }
    (outer, free * m)
}

/// Splits n into (s, f) with n = s^2 * f and f squarefree, by trial division.
pub fn extract_square(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() || n.is_one() {
        return (BigUint::one(), n.clone());
    }
    if let Some(v) = n.to_u64() {
        let (s, f) = extract_square_u64(v);
        return (BigUint::from(s), BigUint::from(f));
    }
    let mut m = n.clone();
    let mut outer = BigUint::one();
    let mut free = BigUint::one();
    let mut d = BigUint::from(2u32);
    while &d * &d <= m {
        if (&m % &d).is_zero() {
            let mut e = 0u32;
            while (&m % &d).is_zero() {
                m /= &d;
                e += 1;
            }
            outer *= d.pow(e / 2);
            if e % 2 == 1 {
                free *= &d;
            }
        }
        d += BigUint::one();
    }
    (outer, free * m)
}

/// An exact value c * sqrt(r) with c rational and r a squarefree positive
/// integer. Zero is (0, 1). This is the closure class of ladder-operator
/// matrix elements: sums arising there only ever combine like radicands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    coeff: Rational,
    radicand: BigUint,
}

impl QuadraticSurd {
    pub fn zero() -> Self {
        QuadraticSurd { coeff: Rational::zero(), radicand: BigUint::one() }
    }

    pub fn one() -> Self {
        QuadraticSurd { coeff: Rational::one(), radicand: BigUint::one() }
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        QuadraticSurd { coeff: r, radicand: BigUint::one() }
    }

    /// Canonicalizing constructor for c * sqrt(r) with rational r >= 0.
    ///
    /// All perfect-square factors of the radicand's numerator and denominator
    /// move into the coefficient (trial-division factorization; the values at
    /// play stay at desk scale).
    pub fn new(coeff: Rational, radicand: Rational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::NegativeRadicand(format_rational(&radicand)));
        }
        if coeff.is_zero() || radicand.is_zero() {
            return Ok(Self::zero());
        }
        let p = radicand.numer().to_biguint().expect("nonnegative numerator");
        let q = radicand.denom().to_biguint().expect("positive denominator");
        // sqrt(p/q) = sqrt(p q) / q
        let (outer, free) = extract_square(&(&p * &q));
        let c = coeff
            * Rational::new(BigInt::from(outer), BigInt::from(q));
        Ok(QuadraticSurd { coeff: c, radicand: free })
    }

    /// sqrt(r) for rational r >= 0.
    pub fn sqrt_rational(r: &Rational) -> Result<Self> {
        Self::new(Rational::one(), r.clone())
    }

    /// Internal constructor for an already-canonical pair.
    pub(crate) fn from_canonical(coeff: Rational, radicand: BigUint) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        QuadraticSurd { coeff, radicand }
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_one()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.coeff)
        } else {
            None
        }
    }

    /// The square c^2 * r, always rational.
    pub fn square(&self) -> Rational {
        &self.coeff * &self.coeff * Rational::from_integer(BigInt::from(self.radicand.clone()))
    }

    pub fn signum(&self) -> i8 {
        if self.coeff.is_zero() {
            0
        } else if self.coeff.is_negative() {
            -1
        } else {
            1
        }
    }

    /// Product of two surds. The radicands are squarefree, so the square part
    /// of their product is exactly gcd^2; no factorization is needed.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.radicand.gcd(&other.radicand);
        let rad = (&self.radicand / &g) * (&other.radicand / &g);
        let coeff = &self.coeff * &other.coeff * Rational::from_integer(BigInt::from(g));
        QuadraticSurd { coeff, radicand: rad }
    }

    /// Sum of like surds. Unlike radicands are a logic error in this domain.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.radicand != other.radicand {
            return Err(Error::UnlikeSurds(self.radicand.clone(), other.radicand.clone()));
        }
        let coeff = &self.coeff + &other.coeff;
        if coeff.is_zero() {
            return Ok(Self::zero());
        }
        Ok(QuadraticSurd { coeff, radicand: self.radicand.clone() })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if self.is_zero() || r.is_zero() {
            return Self::zero();
        }
        QuadraticSurd { coeff: &self.coeff * r, radicand: self.radicand.clone() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64().unwrap_or(f64::NAN) * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}*sqrt({})", self.coeff, self.radicand)
        }
    }
}

/// A coupling coefficient held exactly as a sign and a rational square:
/// the value is sign * sqrt(square).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CGValue {
    sign: i8,
    square: Rational,
}

impl CGValue {
    pub fn zero() -> Self {
        CGValue { sign: 0, square: Rational::zero() }
    }

    pub fn new(sign: i8, square: Rational) -> Result<Self> {
        if square.is_negative() {
            return Err(Error::InvalidInput("negative square in CG value".into()));
        }
        if square.is_zero() != (sign == 0) {
            return Err(Error::InvalidInput(
                "CG value sign must be 0 exactly when its square is 0".into(),
            ));
        }
        Ok(CGValue { sign, square })
    }

    /// Carrier for Num / sqrt(Den): sign from the numerator coefficient,
    /// square = Num^2 / Den. Requires Den > 0.
    pub fn from_ratio(num: &QuadraticSurd, den: &Rational) -> Result<Self> {
        if !den.is_positive() {
            return Err(Error::NullProjection(format!(
                "projection denominator {} is not positive",
                format_rational(den)
            )));
        }
        let square = num.square() / den;
        Ok(CGValue { sign: num.signum(), square })
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn square(&self) -> &Rational {
        &self.square
    }

    pub fn to_f64(&self) -> f64 {
        self.sign as f64 * self.square.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// Decimal rendering at 15 significant digits.
    pub fn decimal15(&self) -> String {
        let v = self.to_f64();
        if v == 0.0 {
            "0".to_string()
        } else {
            format!("{:.14e}", v)
        }
    }
}

/// A nonzero rational kept as a signed product of prime powers, so that exact
/// square roots of large factorial products can be split without factoring
/// big composites. Each ingredient is factored while it is still small.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    sign: i8,
    exps: BTreeMap<u64, i64>,
}

impl Factored {
    pub fn one() -> Self {
        Factored { sign: 1, exps: BTreeMap::new() }
    }

    pub fn zero() -> Self {
        Factored { sign: 0, exps: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    fn push_prime(&mut self, p: u64, e: i64) {
        if e == 0 {
            return;
        }
        let entry = self.exps.entry(p).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.exps.remove(&p);
        }
    }

    fn mul_uint(&mut self, n: &BigUint, power: i64) {
        let mut m = n.clone();
        let mut d = BigUint::from(2u32);
        while &d * &d <= m {
            if (&m % &d).is_zero() {
                let mut e = 0i64;
                while (&m % &d).is_zero() {
                    m /= &d;
                    e += 1;
                }
                self.push_prime(d.to_u64().expect("small prime"), e * power);
            }
            d += BigUint::one();
        }
        if !m.is_one() {
            self.push_prime(m.to_u64().expect("desk-scale factor"), power);
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let mut f = Factored { sign: if r.is_negative() { -1 } else { 1 }, exps: BTreeMap::new() };
        f.mul_uint(&r.numer().abs().to_biguint().expect("abs"), 1);
        f.mul_uint(&r.denom().to_biguint().expect("positive denominator"), -1);
        f
    }

    pub fn from_factorial(n: i64) -> Self {
        let mut f = Self::one();
        for k in 2..=n {
            f.mul_uint(&BigUint::from(k as u64), 1);
        }
        f
    }

    pub fn mul_assign(&mut self, other: &Factored) {
        if self.sign == 0 {
            return;
        }
        if other.sign == 0 {
            *self = Self::zero();
            return;
        }
        self.sign *= other.sign;
        for (&p, &e) in &other.exps {
            self.push_prime(p, e);
        }
    }

    pub fn mul_rational(&mut self, r: &Rational) {
        self.mul_assign(&Factored::from_rational(r));
    }

    pub fn div_rational(&mut self, r: &Rational) {
        let mut inv = Factored::from_rational(r);
        debug_assert!(!inv.is_zero(), "division by zero in factored product");
        inv = inv.pow(-1);
        self.mul_assign(&inv);
    }

    pub fn pow(&self, e: i32) -> Self {
        if self.sign == 0 {
            return Self::zero();
        }
        let sign = if e % 2 == 0 { 1 } else { self.sign };
        let exps = self.exps.iter().map(|(&p, &x)| (p, x * e as i64)).collect();
        Factored { sign, exps }
    }

    pub fn to_rational(&self) -> Rational {
        if self.sign == 0 {
            return Rational::zero();
        }
        let mut numer = BigInt::from(self.sign);
        let mut denom = BigInt::one();
        for (&p, &e) in &self.exps {
            let pw = BigInt::from(p).pow(e.unsigned_abs() as u32);
            if e > 0 {
                numer *= pw;
            } else {
                denom *= pw;
            }
        }
        Rational::new(numer, denom)
    }

    /// Exact square root as a surd: even prime exponents form the rational
    /// coefficient, odd exponents the squarefree radicand.
    pub fn sqrt_surd(&self) -> Result<QuadraticSurd> {
        if self.sign == 0 {
            return Ok(QuadraticSurd::zero());
        }
        if self.sign < 0 {
            return Err(Error::NegativeRadicand(format_rational(&self.to_rational())));
        }
        let mut coeff_num = BigInt::one();
        let mut coeff_den = BigInt::one();
        let mut radicand = BigUint::one();
        for (&p, &e) in &self.exps {
            let q = e.div_euclid(2);
            let r = e.rem_euclid(2);
            let pw = BigInt::from(p).pow(q.unsigned_abs() as u32);
            if q >= 0 {
                coeff_num *= pw;
            } else {
                coeff_den *= pw;
            }
            if r == 1 {
                radicand *= BigUint::from(p);
            }
        }
        // A root left in the denominator is rationalized: 1/sqrt(p) = sqrt(p)/p.
        // Negative odd exponents never arise in the brackets built here, but
        // handle them anyway.
        Ok(QuadraticSurd::from_canonical(Rational::new(coeff_num, coeff_den), radicand))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_and_format() {
        assert_eq!(parse_rational("21/20").unwrap(), rat(21, 20));
        assert_eq!(parse_rational("-7").unwrap(), rat_int(-7));
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(format_rational(&rat(-1, 2)), "-1/2");
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("1e-3").is_err());
    }

    #[test]
    fn half_int_parse_display() {
        assert_eq!("3/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(3));
        assert_eq!("2".parse::<HalfInt>().unwrap(), HalfInt::from_int(2));
        assert_eq!("-1/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-1));
        assert!("1/3".parse::<HalfInt>().is_err());
        assert_eq!(HalfInt::from_twice(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_int(2).to_string(), "2");
    }

    #[test]
    fn pochhammer_examples() {
        // (a)_0 = 1 for any a
        assert_eq!(pochhammer(&rat(-17, 5), 0), Rational::one());
        // 3 * 4
        assert_eq!(pochhammer(&rat_int(3), 2), rat_int(12));
        // (-1/2)(1/2)(3/2)
        assert_eq!(pochhammer(&rat(-1, 2), 3), rat(-3, 8));
    }

    #[test]
    fn pochhammer_recurrence() {
        let a = rat(7, 3);
        for n in 0..20u32 {
            let lhs = pochhammer(&a, n + 1);
            let rhs = pochhammer(&a, n) * (&a + rat_int(n as i64));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn gen_factorial_degenerate_and_recurrence() {
        let q = QuadraticFactor::degenerate();
        for n in 0..8 {
            assert_eq!(gen_factorial(&q, n), Rational::one());
        }
        let q = QuadraticFactor::new(rat(1, 10), rat(-3, 10), rat(7, 5));
        for n in 1..8u32 {
            assert_eq!(gen_factorial(&q, n), gen_factorial(&q, n - 1) * q.eval_int(n as i64));
        }
    }

    #[test]
    fn surd_normalization() {
        let s = QuadraticSurd::new(rat_int(1), rat_int(8)).unwrap();
        assert_eq!(s.coeff(), &rat_int(2));
        assert_eq!(s.radicand(), &BigUint::from(2u32));

        let s = QuadraticSurd::new(rat_int(3), rat_int(1)).unwrap();
        assert_eq!(s.coeff(), &rat_int(3));
        assert!(s.is_rational());

        // 21/20 = 105/100
        let s = QuadraticSurd::new(rat_int(1), rat(21, 20)).unwrap();
        assert_eq!(s.coeff(), &rat(1, 10));
        assert_eq!(s.radicand(), &BigUint::from(105u32));

        assert!(QuadraticSurd::new(rat_int(1), rat_int(-1)).is_err());
    }

    #[test]
    fn surd_combine() {
        let a = QuadraticSurd::new(rat_int(2), rat_int(3)).unwrap();
        let b = QuadraticSurd::new(rat_int(5), rat_int(3)).unwrap();
        let sum = a.checked_add(&b).unwrap();
        assert_eq!(sum.coeff(), &rat_int(7));

        let r2 = QuadraticSurd::new(rat_int(1), rat_int(2)).unwrap();
        let prod = r2.mul(&r2);
        assert_eq!(prod.as_rational(), Some(&rat_int(2)));

        let psi1 = QuadraticSurd::new(rat_int(1), rat(21, 20)).unwrap();
        assert_eq!(psi1.mul(&psi1).as_rational(), Some(&rat(21, 20)));

        let unlike = QuadraticSurd::new(rat_int(1), rat_int(5)).unwrap();
        assert!(a.checked_add(&unlike).is_err());
        assert!(a.checked_add(&QuadraticSurd::zero()).is_ok());
    }

    #[test]
    fn cg_from_ratio_examples() {
        let num = QuadraticSurd::from_rational(rat(9, 16));
        let v = CGValue::from_ratio(&num, &rat(9, 16)).unwrap();
        assert_eq!(v.sign(), 1);
        assert_eq!(v.square(), &rat(9, 16));

        let v = CGValue::from_ratio(&QuadraticSurd::zero(), &rat_int(1)).unwrap();
        assert_eq!(v, CGValue::zero());

        let num = QuadraticSurd::from_rational(rat(-7, 16));
        let v = CGValue::from_ratio(&num, &rat(9, 16)).unwrap();
        assert_eq!(v.sign(), -1);
        assert_eq!(v.square(), &rat(49, 144));

        assert!(CGValue::from_ratio(&num, &rat_int(0)).is_err());
        assert!(CGValue::from_ratio(&num, &rat_int(-1)).is_err());
    }

    #[test]
    fn factored_roundtrip_and_sqrt() {
        let f = Factored::from_rational(&rat(-441, 400));
        assert_eq!(f.to_rational(), rat(-441, 400));
        let mut g = f.pow(2);
        assert_eq!(g.to_rational(), rat(441 * 441, 400 * 400));
        g.mul_rational(&rat(400, 441));
        let s = g.sqrt_surd().unwrap();
        assert_eq!(s.as_rational(), Some(&rat(21, 20)));

        let f = Factored::from_rational(&rat(21, 20));
        let s = f.sqrt_surd().unwrap();
        assert_eq!(s.coeff(), &rat(1, 10));
        assert_eq!(s.radicand(), &BigUint::from(105u32));

        assert!(Factored::from_rational(&rat_int(-2)).sqrt_surd().is_err());
    }
}
