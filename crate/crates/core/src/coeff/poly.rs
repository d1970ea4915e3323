//! Sparse bivariate integer polynomials in `r` and `s`.
//!
//! Terms are kept sorted by descending graded-lexicographic order with
//! `r > s`, so the first stored term is the leading term and structural
//! equality is polynomial equality.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(deg_r, deg_s)`.
pub type Exp2 = (u32, u32);

/// Graded-lexicographic comparison with `r > s`.
pub fn grlex(a: Exp2, b: Exp2) -> Ordering {
    (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0))
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    terms: Vec<(Exp2, BigInt)>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn monomial(c: BigInt, e: Exp2) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly2 { terms: vec![(e, c)] }
        }
    }

    pub fn r() -> Self {
        Self::monomial(BigInt::one(), (1, 0))
    }

    pub fn s() -> Self {
        Self::monomial(BigInt::one(), (0, 1))
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exp2, BigInt)>>(it: I) -> Self {
        let mut v: Vec<(Exp2, BigInt)> = it.into_iter().collect();
        v.sort_by(|a, b| grlex(b.0, a.0));
        let mut out: Vec<(Exp2, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly2 { terms: out }
    }

    pub fn terms(&self) -> &[(Exp2, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == (0, 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Exp2, BigInt)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|(e, _)| e.0 + e.1).unwrap_or(0)
    }

    pub fn deg_r(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.0).max().unwrap_or(0)
    }

    pub fn deg_s(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.1).max().unwrap_or(0)
    }

    /// Componentwise minimum exponent over all terms (the monomial content).
    pub fn min_exps(&self) -> Exp2 {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return (0, 0);
        };
        it.fold(*first, |acc, (e, _)| (acc.0.min(e.0), acc.1.min(e.1)))
    }

    /// Gcd of the integer coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn neg(&self) -> Self {
        Poly2 { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Poly2 { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Multiplies by `r^a s^b`.
    pub fn shift(&self, by: Exp2) -> Self {
        Poly2 { terms: self.terms.iter().map(|(e, c)| ((e.0 + by.0, e.1 + by.1), c.clone())).collect() }
    }

    /// Divides by `r^a s^b`; the caller guarantees divisibility.
    pub fn unshift(&self, by: Exp2) -> Self {
        Poly2 { terms: self.terms.iter().map(|(e, c)| ((e.0 - by.0, e.1 - by.1), c.clone())).collect() }
    }

    /// Exact integer division of every coefficient.
    pub fn div_int(&self, k: &BigInt) -> Self {
        Poly2 { terms: self.terms.iter().map(|(e, c)| (*e, c / k)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match grlex(a[i].0, b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly2 { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.shift(*e).scale(c);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.shift(*e).scale(c);
        }
        let mut acc = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                acc.push(((ea.0 + eb.0, ea.1 + eb.1), ca * cb));
            }
        }
        Self::from_terms(acc)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact division; `None` when `d` does not divide `self` in `Z[r,s]`.
    pub fn div_exact(&self, d: &Poly2) -> Option<Poly2> {
        let (de, dc) = d.leading()?.clone();
        if d.terms.len() == 1 {
            let mut out = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                if e.0 < de.0 || e.1 < de.1 {
                    return None;
                }
                let (q, rem) = c.div_rem(&dc);
                if !rem.is_zero() {
                    return None;
                }
                out.push(((e.0 - de.0, e.1 - de.1), q));
            }
            return Some(Poly2 { terms: out });
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((re, rc)) = rem.leading().cloned() {
            if re.0 < de.0 || re.1 < de.1 {
                return None;
            }
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let qe = (re.0 - de.0, re.1 - de.1);
            rem = rem.sub(&d.shift(qe).scale(&q));
            quot.push((qe, q));
        }
        Some(Self::from_terms(quot))
    }

    pub fn eval(&self, r: &BigRational, s: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let t = num_traits::pow(r.clone(), e.0 as usize) * num_traits::pow(s.clone(), e.1 as usize);
            acc += t * BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the leading coefficient (0 for the zero polynomial).
    pub fn leading_sign(&self) -> i32 {
        match self.leading() {
            None => 0,
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }

    /// Greatest common divisor in `Z[r,s]`, normalized to a positive leading coefficient.
    pub fn gcd(&self, other: &Poly2) -> Poly2 {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let ma = self.min_exps();
        let mb = other.min_exps();
        let mono = (ma.0.min(mb.0), ma.1.min(mb.1));
        let int_g = self.content().gcd(&other.content());
        if self.is_monomial() || other.is_monomial() || self.is_constant() || other.is_constant() {
            return Poly2::monomial(int_g, mono);
        }
        let a = self.unshift(ma);
        let b = other.unshift(mb);
        let g = super::dense::gcd(&a, &b);
        g.shift(mono).normalize_sign()
    }

    fn normalize_sign(&self) -> Poly2 {
        if self.leading_sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    fn fmt_term(f: &mut fmt::Formatter<'_>, e: Exp2, c: &BigInt, first: bool) -> fmt::Result {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mut parts: Vec<String> = Vec::new();
        if !abs.is_one() || e == (0, 0) {
            parts.push(abs.to_string());
        }
        for (name, k) in [("r", e.0), ("s", e.1)] {
            match k {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{k}")),
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            Self::fmt_term(f, *e, c, k == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i64)]) -> Poly2 {
        Poly2::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    #[test]
    fn leading_term_is_grlex_max() {
        let a = p(&[((0, 3), 1), ((2, 0), 5), ((1, 2), -2)]);
        assert_eq!(a.leading().unwrap().0, (1, 2));
        assert_eq!(a.to_string(), "-2*r*s^2 + s^3 + 5*r^2");
    }

    #[test]
    fn exact_division() {
        // (r^2 - s^2) / (r - s) = r + s
        let num = p(&[((2, 0), 1), ((0, 2), -1)]);
        let den = p(&[((1, 0), 1), ((0, 1), -1)]);
        assert_eq!(num.div_exact(&den).unwrap(), p(&[((1, 0), 1), ((0, 1), 1)]));
        assert!(den.div_exact(&num).is_none());
        assert!(num.div_exact(&p(&[((1, 0), 1), ((0, 0), 1)])).is_none());
    }

    #[test]
    fn gcd_of_products() {
        let f = p(&[((1, 0), 1), ((0, 1), -1)]); // r - s
        let g = p(&[((1, 1), 3), ((0, 0), 2)]); // 3rs + 2
        let h = p(&[((2, 0), 1), ((0, 1), 1)]); // r^2 + s
        let a = f.mul(&g).scale(&BigInt::from(6));
        let b = f.mul(&h).scale(&BigInt::from(4)).shift((1, 0));
        assert_eq!(a.gcd(&b), f.scale(&BigInt::from(2)));
        assert!(g.gcd(&h).is_one());
    }
}
