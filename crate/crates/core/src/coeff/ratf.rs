use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly2;
use crate::error::{Error, Result};
use crate::expr::{self, Interp};

/// An element of `Q(r, s)` in reduced canonical form.
///
/// `gcd(num, den) = 1` in `Z[r,s]` and the leading coefficient of `den`
/// (grlex, `r > s`) is positive, so equal values are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatF {
    num: Poly2,
    den: Poly2,
}

impl RatF {
    pub fn zero() -> Self {
        RatF { num: Poly2::zero(), den: Poly2::one() }
    }

    pub fn one() -> Self {
        RatF { num: Poly2::one(), den: Poly2::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(Poly2::constant(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_poly(Poly2::constant(n))
    }

    pub fn from_poly(p: Poly2) -> Self {
        RatF { num: p, den: Poly2::one() }
    }

    pub fn r() -> Self {
        Self::from_poly(Poly2::r())
    }

    pub fn s() -> Self {
        Self::from_poly(Poly2::s())
    }

    /// `r^a s^b` for arbitrary integer exponents.
    pub fn monomial(a: i32, b: i32) -> Self {
        let up = (a.max(0) as u32, b.max(0) as u32);
        let down = ((-a).max(0) as u32, (-b).max(0) as u32);
        RatF { num: Poly2::monomial(BigInt::one(), up), den: Poly2::monomial(BigInt::one(), down) }
    }

    /// Reduces `num / den` to canonical form.
    pub fn new(num: Poly2, den: Poly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly2, den: Poly2) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
            }
        };
        if den.leading_sign() < 0 {
            num = num.neg();
            den = den.neg();
        }
        RatF { num, den }
    }

    pub fn num(&self) -> &Poly2 {
        &self.num
    }

    pub fn den(&self) -> &Poly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `Q` (no `r` or `s` dependence).
    pub fn is_rational_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading_sign() < 0 {
            num = num.neg();
            den = den.neg();
        }
        Ok(RatF { num, den })
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        let n = u32::try_from(n).map_err(|_| Error::Other("exponent too large".into()))?;
        Ok(RatF { num: self.num.pow(n), den: self.den.pow(n) })
    }

    /// Value at the rational point `(r0, s0)`.
    pub fn eval(&self, r0: &BigRational, s0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(r0, s0);
        if d.is_zero() {
            return Err(Error::Pole { r: r0.to_string(), s: s0.to_string() });
        }
        Ok(self.num.eval(r0, s0) / d)
    }

    fn add_impl(&self, other: &RatF, negate: bool) -> RatF {
        let rhs_num = if negate { other.num.neg() } else { other.num.clone() };
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return RatF { num: rhs_num, den: other.den.clone() };
        }
        if self.den == other.den {
            let num = self.num.add(&rhs_num);
            if self.den.is_one() {
                return RatF { num, den: self.den.clone() };
            }
            return Self::reduce(num, self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&rhs_num.mul(&self.den));
            return Self::reduce(num, self.den.mul(&other.den));
        }
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&b).add(&rhs_num.mul(&a));
        Self::reduce(num, a.mul(&other.den))
    }

    fn mul_impl(&self, other: &RatF) -> RatF {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatF { num: self.num.mul(&other.num), den: Poly2::one() };
        }
        // cross-cancel: both inputs are reduced
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.leading_sign() < 0 {
            num = num.neg();
            den = den.neg();
        }
        RatF { num, den }
    }

    /// Parses the textual grammar (`r`, `s`, integers, `+ - * / ^`, parentheses).
    pub fn parse(src: &str) -> Result<Self> {
        let e = expr::parse(src)?;
        expr::eval(&e, &RatfInterp)
    }
}

/// Interprets expressions whose only symbols are `r` and `s`.
pub struct RatfInterp;

impl Interp for RatfInterp {
    type Value = RatF;

    fn int(&self, n: &BigInt) -> Result<RatF> {
        Ok(RatF::from_bigint(n.clone()))
    }

    fn sym(&self, name: &str) -> Result<RatF> {
        match name {
            "r" => Ok(RatF::r()),
            "s" => Ok(RatF::s()),
            _ => Err(Error::UnknownSymbol(name.to_string())),
        }
    }

    fn add(&self, a: RatF, b: RatF) -> Result<RatF> {
        Ok(a + b)
    }

    fn neg(&self, a: RatF) -> Result<RatF> {
        Ok(-a)
    }

    fn mul(&self, a: RatF, b: RatF) -> Result<RatF> {
        Ok(a * b)
    }

    fn div(&self, a: RatF, b: RatF) -> Result<RatF> {
        Ok(a * b.inv()?)
    }

    fn pow(&self, a: RatF, n: i64) -> Result<RatF> {
        a.pow(n)
    }

    fn scalar(&self, v: &RatF) -> Option<RatF> {
        Some(v.clone())
    }
}

impl Add<&RatF> for &RatF {
    type Output = RatF;
    fn add(self, rhs: &RatF) -> RatF {
        self.add_impl(rhs, false)
    }
}

impl Sub<&RatF> for &RatF {
    type Output = RatF;
    fn sub(self, rhs: &RatF) -> RatF {
        self.add_impl(rhs, true)
    }
}

impl Mul<&RatF> for &RatF {
    type Output = RatF;
    fn mul(self, rhs: &RatF) -> RatF {
        self.mul_impl(rhs)
    }
}

/// Panics on division by zero; use [`RatF::inv`] for a fallible inverse.
impl Div<&RatF> for &RatF {
    type Output = RatF;
    fn div(self, rhs: &RatF) -> RatF {
        self.mul_impl(&rhs.inv().expect("division by zero"))
    }
}

impl Neg for &RatF {
    type Output = RatF;
    fn neg(self) -> RatF {
        RatF { num: self.num.neg(), den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatF> for RatF {
            type Output = RatF;
            fn $m(self, rhs: RatF) -> RatF {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatF> for RatF {
            type Output = RatF;
            fn $m(self, rhs: &RatF) -> RatF {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatF> for &RatF {
            type Output = RatF;
            fn $m(self, rhs: RatF) -> RatF {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatF {
    type Output = RatF;
    fn neg(self) -> RatF {
        -&self
    }
}

impl Zero for RatF {
    fn zero() -> Self {
        RatF::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatF {
    fn one() -> Self {
        RatF::one()
    }
}

impl From<i64> for RatF {
    fn from(n: i64) -> Self {
        RatF::from_int(n)
    }
}

impl FromStr for RatF {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RatF::parse(s)
    }
}

fn needs_parens(p: &Poly2) -> bool {
    p.len() > 1
}

fn is_atomic_den(p: &Poly2) -> bool {
    if p.is_constant() {
        return true;
    }
    let (e, c) = p.leading().expect("nonzero");
    p.len() == 1 && c.is_one() && (e.0 == 0 || e.1 == 0)
}

impl fmt::Display for RatF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if is_atomic_den(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for RatF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatF({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> RatF {
        RatF::parse(s).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn cancellation() {
        assert_eq!(q("(r^2 - s^2)/(r - s)"), q("r + s"));
        assert!(q("(r^2 - s^2)/(r - s)").is_polynomial());
        assert_eq!(q("(2*r)/(4*s)"), q("r/(2*s)"));
        assert_eq!(q("1/(s - r)"), q("-1/(r - s)"));
    }

    #[test]
    fn lambda_times_denominator_is_r() {
        let lambda = q("r/((r^2 - s^2)*(r - s))");
        assert_eq!(&lambda * &q("(r^2 - s^2)*(r - s)"), RatF::r());
    }

    #[test]
    fn additive_inverse() {
        let a = q("(r^3*s - 2)/(s + 1)");
        assert!((&a + &(-&a)).is_zero());
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn eval_points() {
        assert_eq!(q("r + s").eval(&rat(2, 1), &rat(3, 1)).unwrap(), rat(5, 1));
        let lambda = q("r/((r^2 - s^2)*(r - s))");
        // 2 / ((4 - 9)(2 - 3)) = 2/5
        assert_eq!(lambda.eval(&rat(2, 1), &rat(3, 1)).unwrap(), rat(2, 5));
        let err = q("1/(r - s)").eval(&rat(2, 1), &rat(2, 1)).unwrap_err();
        assert!(matches!(err, Error::Pole { .. }));
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(RatF::zero().inv().unwrap_err(), Error::DivisionByZero);
        assert!(RatF::parse("1/(r - r)").is_err());
    }

    #[test]
    fn negative_powers() {
        assert_eq!(q("r^-2"), RatF::monomial(-2, 0));
        assert_eq!(q("(r*s)^(-1)"), RatF::monomial(-1, -1));
        assert_eq!(q("s^-2 - r^-1*s^-1"), q("(r - s)/(r*s^2)"));
    }

    #[test]
    fn genericity_model() {
        for m in -3..=3 {
            for n in -3..=3 {
                assert_eq!(RatF::monomial(m, n).is_one(), m == 0 && n == 0);
            }
        }
    }

    #[test]
    fn display_round_trip() {
        for src in ["r/((r^2 - s^2)*(r - s))", "-1/r^2", "(r*s - 2)/(3*s)", "r^2*s - 7", "-5/3"] {
            let a = q(src);
            assert_eq!(q(&a.to_string()), a, "{src} printed as {a}");
        }
    }
}
