//! Iterated skew-polynomial algebras with a PBW basis of ordered monomials.

pub mod doc;
pub mod element;
pub mod ore;
pub mod rewrite;
pub mod spec;

use std::collections::BTreeMap;

use num_bigint::BigInt;

pub use element::{format_mono, Element, Mono, Weight};
pub use spec::{AlgebraSpec, SpecBuilder};

use crate::coeff::RatF;
use crate::error::{Error, Result};
use crate::expr::{self, Interp};

/// Evaluates expressions as elements of a PBW algebra.
///
/// Symbols are the algebra's variables, the parameters `r` and `s`, and any
/// named elements passed in `extra`.
pub struct ElementInterp<'a> {
    pub spec: &'a AlgebraSpec,
    pub extra: BTreeMap<String, Element>,
}

impl<'a> ElementInterp<'a> {
    pub fn new(spec: &'a AlgebraSpec) -> Self {
        ElementInterp { spec, extra: BTreeMap::new() }
    }

    pub fn with(mut self, name: &str, value: Element) -> Self {
        self.extra.insert(name.to_string(), value);
        self
    }
}

impl Interp for ElementInterp<'_> {
    type Value = Element;

    fn int(&self, n: &BigInt) -> Result<Element> {
        Ok(self.spec.scalar(RatF::from_bigint(n.clone())))
    }

    fn sym(&self, name: &str) -> Result<Element> {
        if let Some(i) = self.spec.var_index(name) {
            return Ok(self.spec.var(i));
        }
        if let Some(v) = self.extra.get(name) {
            return Ok(v.clone());
        }
        match name {
            "r" => Ok(self.spec.scalar(RatF::r())),
            "s" => Ok(self.spec.scalar(RatF::s())),
            _ => Err(Error::UnknownSymbol(name.to_string())),
        }
    }

    fn add(&self, a: Element, b: Element) -> Result<Element> {
        Ok(a.add(&b))
    }

    fn neg(&self, a: Element) -> Result<Element> {
        Ok(a.neg())
    }

    fn mul(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.spec.mul(&a, &b))
    }

    fn pow(&self, a: Element, n: i64) -> Result<Element> {
        let base = if n < 0 { self.spec.inverse(&a)? } else { a };
        let k = u32::try_from(n.unsigned_abs()).map_err(|_| Error::Other("exponent too large".into()))?;
        Ok(self.spec.pow(&base, k))
    }

    fn scalar(&self, v: &Element) -> Option<RatF> {
        v.as_scalar()
    }

    fn scale(&self, a: Element, k: &RatF) -> Result<Element> {
        Ok(a.scale(k))
    }
}

/// Parses an element string over `spec`.
pub fn parse_element(spec: &AlgebraSpec, src: &str) -> Result<Element> {
    let e = expr::parse(src)?;
    expr::eval(&e, &ElementInterp::new(spec))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        let spec = AlgebraSpec::builder(&["a", "b"]).invertible(&[true, false]).commute(2, 1, RatF::parse("r^2/s").unwrap()).build().unwrap();
        let x = parse_element(&spec, "(r - s)/(r+1) * a^-2 b + 3 - b a").unwrap();
        let back = parse_element(&spec, &spec.format(&x)).unwrap();
        assert_eq!(x, back);
        assert!(parse_element(&spec, "b^-1").is_err());
        assert!(parse_element(&spec, "c").is_err());
    }
}
