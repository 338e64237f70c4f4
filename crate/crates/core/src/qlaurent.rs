//! Laurent polynomials in a rational power of `q` with exact rational
//! coefficients.
//!
//! A [`LaurentQ`] stores its exponents as integers over a per-value
//! denominator `D`, so `q^{3/2} - 2*q^{-1/2}` is kept as `D = 2` with
//! numerators `3` and `-1`. The denominator is always the smallest one that
//! makes every exponent integral; this gives a unique representation and lets
//! `==` compare values coming from algebras with different `D(g)`.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Rational = BigRational;
/// Exponent of `q`.
pub type Exponent = Rational64;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `f(e^h) mod h^2`, written `c0 + c1*h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HJet {
    pub c0: Rational,
    pub c1: Rational,
}

impl HJet {
    pub fn new(c0: Rational, c1: Rational) -> Self {
        HJet { c0, c1 }
    }
}

impl Add for HJet {
    type Output = HJet;
    fn add(self, rhs: HJet) -> HJet {
        HJet::new(self.c0 + rhs.c0, self.c1 + rhs.c1)
    }
}

impl Mul for HJet {
    type Output = HJet;
    fn mul(self, rhs: HJet) -> HJet {
        let c1 = &self.c0 * &rhs.c1 + &self.c1 * &rhs.c0;
        HJet::new(self.c0 * rhs.c0, c1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentQ {
    denom: i64,
    // exponent numerator (over `denom`) -> nonzero coefficient
    terms: BTreeMap<i64, Rational>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        LaurentQ {
            denom: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::monomial(Exponent::zero(), c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// `q^e`.
    pub fn q_pow(e: Exponent) -> Self {
        Self::monomial(e, Rational::one())
    }

    /// `c * q^e`.
    pub fn monomial(e: Exponent, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut terms = BTreeMap::new();
        terms.insert(*e.numer(), c);
        LaurentQ {
            denom: *e.denom(),
            terms,
        }
    }

    /// Builds a value from `(exponent, coefficient)` pairs; repeated exponents
    /// are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        terms
            .into_iter()
            .map(|(e, c)| Self::monomial(e, c))
            .sum()
    }

    fn from_raw(denom: i64, terms: BTreeMap<i64, Rational>) -> Self {
        let mut v = LaurentQ { denom, terms };
        v.normalize();
        v
    }

    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        if self.terms.is_empty() {
            self.denom = 1;
            return;
        }
        let g = self
            .terms
            .keys()
            .fold(self.denom, |g, &k| g.gcd(&k));
        if g > 1 {
            self.denom /= g;
            self.terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|(k, c)| (k / g, c))
                .collect();
        }
    }

    fn rescaled(&self, denom: i64) -> BTreeMap<i64, Rational> {
        debug_assert_eq!(denom % self.denom, 0);
        let f = denom / self.denom;
        self.terms.iter().map(|(k, c)| (k * f, c.clone())).collect()
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&0)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponent, &Rational)> + '_ {
        let d = self.denom;
        self.terms
            .iter()
            .map(move |(k, c)| (Exponent::new(*k, d), c))
    }

    pub fn coeff(&self, e: Exponent) -> Rational {
        if self.denom % e.denom() != 0 {
            return Rational::zero();
        }
        let k = e.numer() * (self.denom / e.denom());
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// The single term, if there is exactly one.
    pub fn as_monomial(&self) -> Option<(Exponent, &Rational)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    /// The value as a plain rational if it has no `q`-dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentQ {
            denom: self.denom,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: Exponent) -> Self {
        let d = self.denom.lcm(e.denom());
        let s = e.numer() * (d / e.denom());
        let terms = self
            .rescaled(d)
            .into_iter()
            .map(|(k, c)| (k + s, c))
            .collect();
        Self::from_raw(d, terms)
    }

    /// Value at `q = 1`: the sum of the coefficients.
    pub fn eval_q1(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// The involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentQ {
            denom: self.denom,
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// First-order expansion under `q = e^h`, using `q^e = 1 + e*h mod h^2`.
    pub fn h_jet(&self) -> HJet {
        let mut c0 = Rational::zero();
        let mut c1 = Rational::zero();
        for (e, c) in self.terms() {
            c0 += c;
            c1 += c * Rational::new(BigInt::from(*e.numer()), BigInt::from(*e.denom()));
        }
        HJet { c0, c1 }
    }

    /// Integer power. Negative powers exist only for monomials.
    pub fn pow(&self, n: i64) -> Option<Self> {
        if n >= 0 {
            let mut acc = Self::one();
            let mut base = self.clone();
            let mut k = n as u64;
            while k > 0 {
                if k & 1 == 1 {
                    acc = &acc * &base;
                }
                k >>= 1;
                if k > 0 {
                    base = &base * &base;
                }
            }
            return Some(acc);
        }
        let (e, c) = self.as_monomial()?;
        let inv = c.recip();
        let m = -n;
        Some(Self::monomial(e * (-m), num_traits::pow(inv, m as usize)))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder (or the divisor is zero).
    pub fn div_exact(&self, divisor: &LaurentQ) -> Option<LaurentQ> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d = self.denom.lcm(&divisor.denom);
        let num = self.rescaled(d);
        let den = divisor.rescaled(d);
        let (&nlo, _) = num.first_key_value()?;
        let (&nhi, _) = num.last_key_value()?;
        let (&dlo, _) = den.first_key_value()?;
        let (&dhi, _) = den.last_key_value()?;
        if nhi - nlo < dhi - dlo {
            return None;
        }
        let mut rem: Vec<Rational> = vec![Rational::zero(); (nhi - nlo + 1) as usize];
        for (k, c) in &num {
            rem[(k - nlo) as usize] = c.clone();
        }
        let dv: Vec<(usize, Rational)> = den
            .iter()
            .map(|(k, c)| ((k - dlo) as usize, c.clone()))
            .collect();
        let dlen = (dhi - dlo) as usize;
        let lead_inv = dv.last().unwrap().1.recip();
        let qlen = rem.len() - dlen;
        let mut quot = BTreeMap::new();
        for i in (0..qlen).rev() {
            let top = &rem[i + dlen];
            if top.is_zero() {
                continue;
            }
            let f = top * &lead_inv;
            for (j, c) in &dv {
                let idx = i + j;
                rem[idx] = &rem[idx] - &f * c;
            }
            quot.insert(i as i64 + nlo - dlo, f);
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_raw(d, quot))
    }

    fn fmt_exponent(e: Exponent) -> String {
        if *e.denom() == 1 {
            format!("{}", e.numer())
        } else {
            format!("{}/{}", e.numer(), e.denom())
        }
    }

    /// Renders one term with a nonnegative coefficient; the sign is handled by
    /// the caller.
    fn fmt_term(e: Exponent, abs: &Rational) -> String {
        if e.is_zero() {
            return abs.to_string();
        }
        let qpart = if e.is_one() {
            "q".to_string()
        } else {
            format!("q^{{{}}}", Self::fmt_exponent(e))
        };
        if abs.is_one() {
            qpart
        } else {
            format!("{}*{}", abs, qpart)
        }
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let body = Self::fmt_term(e, &c.abs());
            match (i, neg) {
                (0, false) => write!(f, "{}", body)?,
                (0, true) => write!(f, "-{}", body)?,
                (_, false) => write!(f, " + {}", body)?,
                (_, true) => write!(f, " - {}", body)?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentQ {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_laurent(s)
    }
}

impl Zero for LaurentQ {
    fn zero() -> Self {
        LaurentQ::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentQ {
    fn one() -> Self {
        LaurentQ::one()
    }
}

impl From<Rational> for LaurentQ {
    fn from(c: Rational) -> Self {
        LaurentQ::from_rational(c)
    }
}

impl From<i64> for LaurentQ {
    fn from(n: i64) -> Self {
        LaurentQ::from_int(n)
    }
}

impl<'a> Add<&'a LaurentQ> for &'a LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let d = self.denom.lcm(&rhs.denom);
        let mut terms = self.rescaled(d);
        let f = d / rhs.denom;
        for (k, c) in &rhs.terms {
            *terms.entry(k * f).or_insert_with(Rational::zero) += c;
        }
        LaurentQ::from_raw(d, terms)
    }
}

impl<'a> Sub<&'a LaurentQ> for &'a LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentQ> for &'a LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        if self.is_zero() || rhs.is_zero() {
            return LaurentQ::zero();
        }
        let d = self.denom.lcm(&rhs.denom);
        let a = self.rescaled(d);
        let b = rhs.rescaled(d);
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        for (ka, ca) in &a {
            for (kb, cb) in &b {
                *terms.entry(ka + kb).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        LaurentQ::from_raw(d, terms)
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ {
            denom: self.denom,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(mut self) -> LaurentQ {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentQ> for LaurentQ {
            type Output = LaurentQ;
            fn $m(self, rhs: LaurentQ) -> LaurentQ {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentQ> for LaurentQ {
            type Output = LaurentQ;
            fn $m(self, rhs: &LaurentQ) -> LaurentQ {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<LaurentQ> for &'a LaurentQ {
            type Output = LaurentQ;
            fn $m(self, rhs: LaurentQ) -> LaurentQ {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentQ> for LaurentQ {
    fn add_assign(&mut self, rhs: &LaurentQ) {
        *self = &*self + rhs;
    }
}

impl AddAssign for LaurentQ {
    fn add_assign(&mut self, rhs: LaurentQ) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&LaurentQ> for LaurentQ {
    fn sub_assign(&mut self, rhs: &LaurentQ) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&LaurentQ> for LaurentQ {
    fn mul_assign(&mut self, rhs: &LaurentQ) {
        *self = &*self * rhs;
    }
}

impl Sum for LaurentQ {
    fn sum<I: Iterator<Item = LaurentQ>>(iter: I) -> Self {
        iter.fold(LaurentQ::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a LaurentQ> for LaurentQ {
    fn sum<I: Iterator<Item = &'a LaurentQ>>(iter: I) -> Self {
        iter.fold(LaurentQ::zero(), |a, b| a + b)
    }
}

impl Product for LaurentQ {
    fn product<I: Iterator<Item = LaurentQ>>(iter: I) -> Self {
        iter.fold(LaurentQ::one(), |a, b| a * b)
    }
}

/// The quantum integer `[n] = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2})`,
/// with `[-n] = -[n]`.
pub fn quantum_integer(n: i64) -> LaurentQ {
    if n < 0 {
        return -quantum_integer(-n);
    }
    (1..=n)
        .map(|i| LaurentQ::q_pow(Exponent::new(n + 1 - 2 * i, 2)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> LaurentQ {
        LaurentQ::q_pow(Exponent::new(n, d))
    }

    /// `[n]` from the defining quotient, via long division of the numerator
    /// by the denominator.
    fn quantum_integer_by_division(n: i64) -> LaurentQ {
        let num = &q(n, 2) - &q(-n, 2);
        let den = &q(1, 2) - &q(-1, 2);
        num.div_exact(&den).unwrap()
    }

    #[test]
    fn additive_inverse_vanishes() {
        assert!((&q(1, 2) + &(-q(1, 2))).is_zero());
    }

    #[test]
    fn quantum_integer_small_values() {
        assert_eq!(quantum_integer(2), &q(1, 2) + &q(-1, 2));
        assert!(quantum_integer(0).is_zero());
        assert_eq!(quantum_integer(3), q(1, 1) + LaurentQ::one() + q(-1, 1));
        assert_eq!(&quantum_integer(2) + &quantum_integer(0), quantum_integer(2));
        for n in -12..=12 {
            let by_div = if n >= 0 {
                quantum_integer_by_division(n)
            } else {
                -quantum_integer_by_division(-n)
            };
            assert_eq!(quantum_integer(n), by_div, "n = {n}");
        }
    }

    #[test]
    fn shifted_quantum_integers_sum() {
        // [4] + [2] expanded by hand from the defining quotient
        let expected = LaurentQ::from_terms([
            (Exponent::new(3, 2), int(1)),
            (Exponent::new(1, 2), int(2)),
            (Exponent::new(-1, 2), int(2)),
            (Exponent::new(-3, 2), int(1)),
        ]);
        assert_eq!(&quantum_integer(4) + &quantum_integer(2), expected);
        assert_eq!(expected, quantum_integer_by_division(4) + quantum_integer_by_division(2));
    }

    #[test]
    fn clearing_the_denominator() {
        let den = &q(1, 2) - &q(-1, 2);
        for n in 0..10 {
            assert_eq!(&den * &quantum_integer(n), &q(n, 2) - &q(-n, 2));
        }
        let x = &q(5, 4) - &LaurentQ::from_int(3);
        assert_eq!(&x * &LaurentQ::one(), x);
        assert_eq!(&q(1, 2) * &q(1, 2), q(1, 1));
    }

    #[test]
    fn evaluation_at_one() {
        assert_eq!(quantum_integer(5).eval_q1(), int(5));
        assert_eq!(quantum_integer_by_division(5).eval_q1(), int(5));
        assert_eq!((&q(1, 2) + &q(-1, 2)).eval_q1(), int(2));
        assert_eq!(LaurentQ::zero().eval_q1(), int(0));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(q(5, 4).bar(), q(-5, 4));
        for n in -6..6 {
            assert_eq!(quantum_integer(n).bar(), quantum_integer(n));
        }
        let x = &q(7, 3) - &LaurentQ::monomial(Exponent::new(-1, 2), rat(2, 3));
        assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn h_jet_examples() {
        assert_eq!(q(1, 3).h_jet(), HJet::new(int(1), rat(1, 3)));
        assert_eq!(LaurentQ::one().h_jet(), HJet::new(int(1), int(0)));
        assert_eq!((&q(1, 1) - &q(-1, 1)).h_jet(), HJet::new(int(0), int(2)));
    }

    #[test]
    fn canonical_denominator() {
        let x = &q(1, 2) + &q(1, 2);
        assert_eq!(x.denom(), 2);
        let y = &q(3, 4) * &q(1, 4);
        assert_eq!(y.denom(), 1);
        assert_eq!(y, q(1, 1));
        let z = &q(1, 2) - &q(1, 2);
        assert_eq!(z, LaurentQ::zero());
        assert_eq!(z.denom(), 1);
    }

    #[test]
    fn exact_division() {
        let a = &q(1, 3) - &LaurentQ::one();
        let b = &q(2, 3) + &q(-1, 2);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(q(1, 1).div_exact(&(&q(1, 1) + &LaurentQ::one())), None);
        assert_eq!(a.div_exact(&LaurentQ::zero()), None);
    }

    #[test]
    fn negative_powers_need_monomials() {
        let m = LaurentQ::monomial(Exponent::new(1, 2), int(2));
        assert_eq!(
            m.pow(-2).unwrap(),
            LaurentQ::monomial(Exponent::new(-1, 1), rat(1, 4))
        );
        assert!(quantum_integer(2).pow(-1).is_none());
        assert_eq!(quantum_integer(2).pow(2).unwrap(), &quantum_integer(3) + &LaurentQ::one());
    }

    #[test]
    fn display_and_parse() {
        let x = &q(3, 2) - &LaurentQ::monomial(Exponent::new(-1, 2), int(2));
        assert_eq!(x.to_string(), "q^{3/2} - 2*q^{-1/2}");
        assert_eq!(x.to_string().parse::<LaurentQ>().unwrap(), x);
        let y = &LaurentQ::monomial(Exponent::new(1, 1), rat(-1, 3)) + &LaurentQ::from_int(7);
        assert_eq!(y.to_string(), "-1/3*q + 7");
        assert_eq!(y.to_string().parse::<LaurentQ>().unwrap(), y);
        assert_eq!(LaurentQ::zero().to_string(), "0");
    }
}
