//! Exact arithmetic in the rational function field Q(θ).
//!
//! A [`RatFun`] is stored as a reduced fraction `num / den` of polynomials in θ
//! with rational coefficients. The denominator is monic and coprime to the
//! numerator, so two equal elements of Q(θ) always have identical
//! representations and equality is structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// Parses `"p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let r = BigRational::from_str(s).map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    Ok(r)
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense univariate polynomial in θ, lowest power first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ThetaPoly {
    coeffs: Vec<BigRational>,
}

impl ThetaPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ThetaPoly { coeffs }
    }

    pub fn zero() -> Self {
        ThetaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `θ`.
    pub fn theta() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn monomial(c: BigRational, power: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigRational {
        self.coeffs.get(power).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ThetaPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let t = &c * d;
                rem[k + i] -= t;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Quotient of an exact division; callers guarantee divisibility.
    fn div_exact(&self, divisor: &Self) -> Self {
        if divisor.is_one() {
            return self.clone();
        }
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd. Both arguments zero is an error.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidInput("gcd of two zero polynomials".into()));
        }
        Ok(Self::gcd_nonzero(a, b))
    }

    fn gcd_nonzero(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return Self::one();
        }
        let (mut x, mut y) = if a.coeffs.len() >= b.coeffs.len() {
            (a.monic(), b.monic())
        } else {
            (b.monic(), a.monic())
        };
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// `θ^deg · p(1/θ)`, i.e. the coefficient list reversed within `deg + 1` slots.
    fn reversed(&self, deg: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[deg - k] = c.clone();
        }
        Self::new(coeffs)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, symbol: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            if k == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                if a.is_integer() {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "({a})")?;
                }
            }
            write!(f, "{symbol}")?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }

    fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for ThetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "θ")
    }
}

impl<'a> Add<&'a ThetaPoly> for &'a ThetaPoly {
    type Output = ThetaPoly;
    fn add(self, rhs: &ThetaPoly) -> ThetaPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        ThetaPoly::new(coeffs)
    }
}

impl<'a> Sub<&'a ThetaPoly> for &'a ThetaPoly {
    type Output = ThetaPoly;
    fn sub(self, rhs: &ThetaPoly) -> ThetaPoly {
        self + &(-rhs)
    }
}

impl Neg for &ThetaPoly {
    type Output = ThetaPoly;
    fn neg(self) -> ThetaPoly {
        ThetaPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a ThetaPoly> for &'a ThetaPoly {
    type Output = ThetaPoly;
    fn mul(self, rhs: &ThetaPoly) -> ThetaPoly {
        if self.is_zero() || rhs.is_zero() {
            return ThetaPoly::zero();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return rhs.clone();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ThetaPoly::new(coeffs)
    }
}

/// An element of Q(θ) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: ThetaPoly,
    den: ThetaPoly,
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFun {
    pub fn new(num: ThetaPoly, den: ThetaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: ThetaPoly, den: ThetaPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = ThetaPoly::gcd_nonzero(&num, &den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFun { num, den }
        } else {
            let inv = lc.recip();
            RatFun { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero() -> Self {
        RatFun { num: ThetaPoly::zero(), den: ThetaPoly::one() }
    }

    pub fn one() -> Self {
        RatFun { num: ThetaPoly::one(), den: ThetaPoly::one() }
    }

    pub fn theta() -> Self {
        Self::from_poly(ThetaPoly::theta())
    }

    /// `1/θ`.
    pub fn theta_inv() -> Self {
        RatFun { num: ThetaPoly::one(), den: ThetaPoly::theta() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(ThetaPoly::constant(c))
    }

    pub fn from_poly(p: ThetaPoly) -> Self {
        RatFun { num: p, den: ThetaPoly::one() }
    }

    /// `a + bθ` for integers a, b.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_poly(ThetaPoly::from_ints(&[a, b]))
    }

    pub fn num(&self) -> &ThetaPoly {
        &self.num
    }

    pub fn den(&self) -> &ThetaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational number if it does not depend on θ.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Specializes θ to a rational number.
    pub fn evaluate_at(&self, t: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(Error::PoleAtTheta(t.to_string()));
        }
        Ok(self.num.eval(t) / d)
    }

    /// The substitution θ ↦ 1/θ.
    pub fn invert_parameter(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let a = self.num.degree().unwrap_or(0);
        let b = self.den.degree().unwrap_or(0);
        let mut num = self.num.reversed(a);
        let mut den = self.den.reversed(b);
        match a.cmp(&b) {
            Ordering::Less => num = &num * &ThetaPoly::monomial(BigRational::one(), b - a),
            Ordering::Greater => den = &den * &ThetaPoly::monomial(BigRational::one(), a - b),
            Ordering::Equal => {}
        }
        Self::reduce(num, den)
    }

    pub fn fmt_with_symbol(&self, symbol: &str) -> String {
        struct W<'a>(&'a ThetaPoly, &'a str);
        impl fmt::Display for W<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, self.1)
            }
        }
        if self.den.is_one() {
            return W(&self.num, symbol).to_string();
        }
        // clear denominators and common integer content so fractions read as (θ + 1)/(2θ^2)
        let all = || self.num.coeffs.iter().chain(&self.den.coeffs);
        let l = all().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let g = all()
            .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
            .fold(BigInt::zero(), |acc, c| acc.gcd(&c));
        let k = BigRational::new(l, g);
        let (num, den) = (self.num.scale(&k), self.den.scale(&k));
        let wrap_num = num.term_count() > 1;
        let num = W(&num, symbol).to_string();
        let den_s = W(&den, symbol).to_string();
        let num = if wrap_num { format!("({num})") } else { num };
        let den = if den.term_count() > 1 || den.leading().is_some_and(|c| !c.is_one()) {
            format!("({den_s})")
        } else {
            den_s
        };
        format!("{num}/{den}")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with_symbol("θ"))
    }
}

impl From<i64> for RatFun {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for RatFun {
    fn from(c: BigRational) -> Self {
        Self::from_rational(c)
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFun { num, den: ThetaPoly::one() };
            }
            return RatFun::reduce(num, self.den.clone());
        }
        let g = ThetaPoly::gcd_nonzero(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            if num.is_zero() {
                return RatFun::zero();
            }
            return RatFun { num, den };
        }
        let a = self.den.div_exact(&g);
        let b = rhs.den.div_exact(&g);
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        let den = &self.den * &b;
        RatFun::reduce(num, den)
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun { num: &self.num * &rhs.num, den: ThetaPoly::one() };
        }
        let g1 = ThetaPoly::gcd_nonzero(&self.num, &rhs.den);
        let g2 = ThetaPoly::gcd_nonzero(&rhs.num, &self.den);
        let num = &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1);
        // quotients of monic polynomials by monic gcds stay monic
        RatFun { num, den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&RatFun> for RatFun {
    fn add_assign(&mut self, rhs: &RatFun) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFun> for RatFun {
    fn sub_assign(&mut self, rhs: &RatFun) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RatFun> for RatFun {
    fn mul_assign(&mut self, rhs: &RatFun) {
        *self = &*self * rhs;
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}

impl std::iter::Sum for RatFun {
    fn sum<I: Iterator<Item = RatFun>>(iter: I) -> Self {
        iter.fold(RatFun::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for RatFun {
    fn product<I: Iterator<Item = RatFun>>(iter: I) -> Self {
        iter.fold(RatFun::one(), |acc, x| acc * x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn field_ops(a: &RatFun, b: &RatFun, op: FieldOp) -> Result<RatFun> {
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => a.checked_div(b)?,
    })
}

pub fn poly_gcd(a: &ThetaPoly, b: &ThetaPoly) -> Result<ThetaPoly> {
    ThetaPoly::gcd(a, b)
}

#[derive(Serialize, Deserialize)]
struct RatFunRepr {
    num: Vec<String>,
    den: Vec<String>,
}

fn coeff_strings(p: &ThetaPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn poly_from_strings(v: &[String]) -> Result<ThetaPoly> {
    Ok(ThetaPoly::new(v.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?))
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFunRepr { num: coeff_strings(&self.num), den: coeff_strings(&self.den) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RatFunRepr::deserialize(d)?;
        let num = poly_from_strings(&repr.num).map_err(D::Error::custom)?;
        let den = poly_from_strings(&repr.den).map_err(D::Error::custom)?;
        RatFun::new(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(ThetaPoly::from_ints(num), ThetaPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn field_op_examples() {
        let theta = RatFun::theta();
        let one_plus = RatFun::linear(1, 1);
        assert_eq!(field_ops(&theta, &one_plus, FieldOp::Add).unwrap(), RatFun::linear(1, 2));
        assert_eq!(field_ops(&RatFun::one(), &RatFun::one(), FieldOp::Div).unwrap(), RatFun::one());
        let a = rf(&[0, 2], &[1, 1]);
        let b = rf(&[1, 1], &[2]);
        assert_eq!(field_ops(&a, &b, FieldOp::Mul).unwrap(), theta);
        assert_eq!(field_ops(&a, &RatFun::zero(), FieldOp::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(rf(&[0, 2], &[1, 1]).evaluate_at(&q(1)).unwrap(), q(1));
        assert!(matches!(rf(&[1], &[1, 1]).evaluate_at(&q(-1)), Err(Error::PoleAtTheta(_))));
        // (θ²−1)/(θ−1) reduces to θ+1 before evaluation
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]).evaluate_at(&q(1)).unwrap(), q(2));
    }

    #[test]
    fn gcd_examples() {
        let g = poly_gcd(&ThetaPoly::from_ints(&[-1, 0, 1]), &ThetaPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(g, ThetaPoly::from_ints(&[-1, 1]));
        assert!(poly_gcd(&ThetaPoly::theta(), &ThetaPoly::one()).unwrap().is_one());
        let g = poly_gcd(&ThetaPoly::from_ints(&[0, 2, 2]), &ThetaPoly::from_ints(&[0, 4])).unwrap();
        assert_eq!(g, ThetaPoly::theta());
        assert!(poly_gcd(&ThetaPoly::zero(), &ThetaPoly::zero()).is_err());
    }

    #[test]
    fn canonical_form() {
        let a = rf(&[2, 2], &[4, 4]);
        assert!(a.den().is_one());
        assert_eq!(a, RatFun::from_rational(rational(1, 2)));
        let z = rf(&[0], &[3, 1]);
        assert_eq!(z, RatFun::zero());
        let b = rf(&[1], &[2, 4]);
        assert_eq!(b.den().leading().unwrap(), &q(1));
    }

    #[test]
    fn invert_parameter() {
        let a = rf(&[0, 2], &[1, 1]); // 2θ/(θ+1) -> 2/(1+θ)
        assert_eq!(a.invert_parameter(), rf(&[2], &[1, 1]));
        assert_eq!(RatFun::theta().invert_parameter(), RatFun::theta_inv());
        assert_eq!(a.invert_parameter().invert_parameter(), a);
    }

    #[test]
    fn display() {
        assert_eq!(rf(&[0, 2], &[1, 1]).to_string(), "2θ/(θ + 1)");
        assert_eq!(rf(&[1, 0, -3], &[1]).to_string(), "-3θ^2 + 1");
        assert_eq!(rf(&[1], &[0, 2]).to_string(), "1/(2θ)");
        assert_eq!(RatFun::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let a = rf(&[1], &[0, 2]);
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, r#"{"num":["1/2"],"den":["0","1"]}"#);
        let back: RatFun = serde_json::from_str(&js).unwrap();
        assert_eq!(back, a);
        // non-canonical input is normalized on the way in
        let b: RatFun = serde_json::from_str(r#"{"num":["2","2"],"den":["4","4"]}"#).unwrap();
        assert_eq!(b, RatFun::from_rational(rational(1, 2)));
        assert!(serde_json::from_str::<RatFun>(r#"{"num":["1"],"den":[]}"#).is_err());
    }

    fn small_poly() -> impl Strategy<Value = ThetaPoly> {
        prop::collection::vec(-4i64..=4, 0..4).prop_map(|v| ThetaPoly::from_ints(&v))
    }

    fn ratfun() -> impl Strategy<Value = RatFun> {
        (small_poly(), small_poly())
            .prop_filter("nonzero den", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RatFun::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn normalization_idempotent(n in small_poly(), d in small_poly()) {
            prop_assume!(!d.is_zero());
            let a = RatFun::new(n, d).unwrap();
            let b = RatFun::new(a.num().clone(), a.den().clone()).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in ratfun(), b in ratfun(), t in -5i64..=5) {
            let t = q(t);
            if let (Ok(x), Ok(y)) = (a.evaluate_at(&t), b.evaluate_at(&t)) {
                prop_assert_eq!((&a + &b).evaluate_at(&t).unwrap(), &x + &y);
                prop_assert_eq!((&a * &b).evaluate_at(&t).unwrap(), &x * &y);
            }
        }
    }
}
