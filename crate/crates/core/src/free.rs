//! The free algebra on `e1, e2` over `Q(r, s)` and a bounded-degree membership
//! oracle for the two-sided ideal generated by the Serre relators.
//!
//! Both relators are homogeneous in the bidegree (number of `e1`, number of
//! `e2`), so membership is decided one weight component at a time: the query
//! component is matched against the span of all `u R_i v` of the same weight.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::coeff::RatF;
use crate::error::{Error, Result};
use crate::expr::{self, Interp};
use crate::linalg::{self, SparseRow};
use crate::pbw::{AlgebraSpec, Element, Weight};

/// A word over `{e1, e2}`; letter `0` is `e1`, `1` is `e2`.
pub type FreeWord = Vec<u8>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeElt {
    terms: BTreeMap<FreeWord, RatF>,
}

impl FreeElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: FreeWord) -> Self {
        Self::term(w, RatF::one())
    }

    pub fn term(w: FreeWord, c: RatF) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn scalar(c: RatF) -> Self {
        Self::term(Vec::new(), c)
    }

    pub fn e1() -> Self {
        Self::word(vec![0])
    }

    pub fn e2() -> Self {
        Self::word(vec![1])
    }

    pub fn add_term(&mut self, w: FreeWord, c: RatF) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(RatF::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> &BTreeMap<FreeWord, RatF> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[u8]) -> RatF {
        self.terms.get(w).cloned().unwrap_or_else(RatF::zero)
    }

    pub fn add(&self, o: &FreeElt) -> FreeElt {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &FreeElt) -> FreeElt {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> FreeElt {
        self.scale(&RatF::from_int(-1))
    }

    pub fn scale(&self, k: &RatF) -> FreeElt {
        let mut out = FreeElt::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, o: &FreeElt) -> FreeElt {
        let mut out = FreeElt::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> FreeElt {
        (0..n).fold(FreeElt::scalar(RatF::one()), |acc, _| acc.mul(self))
    }

    /// Maximum word length (0 for the zero element).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Split into homogeneous components by weight.
    pub fn components(&self) -> BTreeMap<Weight, FreeElt> {
        let mut out: BTreeMap<Weight, FreeElt> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(word_weight(w)).or_default().add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn weight(&self) -> Option<Weight> {
        let comps = self.components();
        if comps.len() == 1 {
            comps.keys().next().copied()
        } else {
            None
        }
    }

    /// Image under the algebra map sending `e1, e2` to the given elements.
    pub fn map_to(&self, spec: &AlgebraSpec, e1: &Element, e2: &Element) -> Element {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            let mut acc = spec.one();
            for &l in w {
                acc = spec.mul(&acc, if l == 0 { e1 } else { e2 });
            }
            out.add_scaled(&acc, c);
        }
        out
    }
}

impl std::fmt::Display for FreeElt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word: Vec<&str> = w.iter().map(|&l| if l == 0 { "e1" } else { "e2" }).collect();
                match (w.is_empty(), c.is_one()) {
                    (true, _) => format!("({c})"),
                    (false, true) => word.join(" "),
                    (false, false) => format!("({c})*{}", word.join(" ")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn word_weight(w: &[u8]) -> Weight {
    let n2 = w.iter().filter(|&&l| l == 1).count() as i32;
    (w.len() as i32 - n2, n2)
}

fn q(src: &str) -> RatF {
    RatF::parse(src).expect("constant coefficient parses")
}

/// `R1` (weight (2,1)) and `R2` (weight (1,3)).
pub fn serre_relators() -> (FreeElt, FreeElt) {
    let mut r1 = FreeElt::zero();
    r1.add_term(vec![0, 0, 1], RatF::one());
    r1.add_term(vec![0, 1, 0], -q("r^2 + s^2"));
    r1.add_term(vec![1, 0, 0], q("r^2 s^2"));
    let mut r2 = FreeElt::zero();
    r2.add_term(vec![0, 1, 1, 1], RatF::one());
    r2.add_term(vec![1, 0, 1, 1], -q("r^2 + r s + s^2"));
    r2.add_term(vec![1, 1, 0, 1], q("r s (r^2 + r s + s^2)"));
    r2.add_term(vec![1, 1, 1, 0], -q("r^3 s^3"));
    (r1, r2)
}

/// Named elements of the free algebra: `e1, e2, e3, X1..X4, W, Zp`.
pub fn named(name: &str) -> Option<FreeElt> {
    let e1 = FreeElt::e1();
    let e2 = FreeElt::e2();
    let x2 = e1.mul(&e2).sub(&e2.mul(&e1).scale(&q("r^2")));
    let x3 = || e2.mul(&x2).sub(&x2.mul(&e2).scale(&q("s^-2")));
    let w = || x3().add(&x2.mul(&e2).scale(&q("s^-2 - r^-1 s^-1")));
    Some(match name {
        "e1" | "X1" => e1,
        "e2" | "X4" => e2,
        "e3" | "X2" => x2,
        "X3" => x3(),
        "W" => w(),
        "Zp" => {
            let w = w();
            e1.mul(&w).sub(&w.mul(&e1).scale(&q("s^4")))
        }
        _ => return None,
    })
}

pub struct FreeInterp;

impl Interp for FreeInterp {
    type Value = FreeElt;

    fn int(&self, n: &BigInt) -> Result<FreeElt> {
        Ok(FreeElt::scalar(RatF::from_bigint(n.clone())))
    }

    fn sym(&self, name: &str) -> Result<FreeElt> {
        match name {
            "r" => Ok(FreeElt::scalar(RatF::r())),
            "s" => Ok(FreeElt::scalar(RatF::s())),
            _ => named(name).ok_or_else(|| Error::UnknownSymbol(name.to_string())),
        }
    }

    fn add(&self, a: FreeElt, b: FreeElt) -> Result<FreeElt> {
        Ok(a.add(&b))
    }

    fn neg(&self, a: FreeElt) -> Result<FreeElt> {
        Ok(a.neg())
    }

    fn mul(&self, a: FreeElt, b: FreeElt) -> Result<FreeElt> {
        Ok(a.mul(&b))
    }

    fn pow(&self, a: FreeElt, n: i64) -> Result<FreeElt> {
        if n < 0 {
            let k = self.scalar(&a).ok_or_else(|| Error::NotInvertible(a.to_string()))?;
            return Ok(FreeElt::scalar(k.pow(n)?));
        }
        let n = u32::try_from(n).map_err(|_| Error::Other("exponent too large".into()))?;
        Ok(a.pow(n))
    }

    fn scalar(&self, v: &FreeElt) -> Option<RatF> {
        match v.terms.len() {
            0 => Some(RatF::zero()),
            1 => v.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    fn scale(&self, a: FreeElt, k: &RatF) -> Result<FreeElt> {
        Ok(a.scale(k))
    }
}

/// Expands an expression over `e1, e2, e3, X1..X4, W, Zp, r, s`.
pub fn expand(src: &str) -> Result<FreeElt> {
    let e = expr::parse(src)?;
    expr::eval(&e, &FreeInterp)
}

/// One summand `coeff * u * R_index * v` of a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertTerm {
    pub left: FreeWord,
    /// 0 for `R1`, 1 for `R2`.
    pub relator: usize,
    pub right: FreeWord,
    pub coeff: RatF,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub terms: Vec<CertTerm>,
}

impl MembershipCertificate {
    pub fn expand(&self) -> FreeElt {
        let rel = serre_relators();
        let rels = [rel.0, rel.1];
        let mut out = FreeElt::zero();
        for t in &self.terms {
            let x = FreeElt::word(t.left.clone()).mul(&rels[t.relator]).mul(&FreeElt::word(t.right.clone()));
            out = out.add(&x.scale(&t.coeff));
        }
        out
    }
}

/// All words of the given weight.
pub fn words_of_weight(w: Weight) -> Vec<FreeWord> {
    let (a, b) = w;
    if a < 0 || b < 0 {
        return Vec::new();
    }
    let n = (a + b) as usize;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as i32 == b {
            out.push((0..n).map(|k| ((mask >> (n - 1 - k)) & 1) as u8).collect());
        }
    }
    out
}

fn member_component(x: &FreeElt, w: Weight) -> Option<Vec<CertTerm>> {
    let rel = serre_relators();
    let rels = [(rel.0, (2, 1)), (rel.1, (1, 3))];
    let mut cols: Vec<(FreeWord, usize, FreeWord)> = Vec::new();
    for (idx, (_, rw)) in rels.iter().enumerate() {
        let rest = (w.0 - rw.0, w.1 - rw.1);
        for outer in words_of_weight(rest) {
            for cut in 0..=outer.len() {
                cols.push((outer[..cut].to_vec(), idx, outer[cut..].to_vec()));
            }
        }
    }
    let rows_words = words_of_weight(w);
    let index: BTreeMap<&FreeWord, usize> = rows_words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut rows: Vec<SparseRow> = vec![SparseRow::new(); rows_words.len()];
    for (k, (u, idx, v)) in cols.iter().enumerate() {
        let img = FreeElt::word(u.clone()).mul(&rels[*idx].0).mul(&FreeElt::word(v.clone()));
        for (word, c) in img.terms() {
            rows[index[word]].insert(k, c.clone());
        }
    }
    let rhs: Vec<RatF> = rows_words.iter().map(|wd| x.coeff(wd)).collect();
    let sol = linalg::solve(&rows, &rhs, cols.len())?;
    Some(cols.into_iter().zip(sol).filter(|(_, c)| !c.is_zero()).map(|((left, relator, right), coeff)| CertTerm { left, relator, right, coeff }).collect())
}

/// Decides whether `x` lies in the ideal at word length `<= degbound`.
///
/// A returned certificate has already been re-expanded and compared with `x`.
pub fn ideal_member(x: &FreeElt, degbound: usize) -> Result<(bool, Option<MembershipCertificate>)> {
    if x.degree() > degbound {
        return Err(Error::Usage(format!("degbound {degbound} is below the query degree {}", x.degree())));
    }
    let mut cert = MembershipCertificate::default();
    for (w, comp) in x.components() {
        match member_component(&comp, w) {
            Some(terms) => cert.terms.extend(terms),
            None => return Ok((false, None)),
        }
    }
    if cert.expand() != *x {
        return Err(Error::Other("membership certificate failed re-expansion".into()));
    }
    Ok((true, Some(cert)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relator_shapes() {
        let (r1, r2) = serre_relators();
        assert_eq!(r1.len(), 3);
        assert_eq!(r2.len(), 4);
        assert_eq!(r1.coeff(&[0, 0, 1]), RatF::one());
        assert_eq!(r2.coeff(&[1, 1, 1, 0]), q("-r^3 s^3"));
        assert_eq!(r1.weight(), Some((2, 1)));
        assert_eq!(r2.weight(), Some((1, 3)));
    }

    #[test]
    fn expand_x3() {
        let x3 = expand("X3").unwrap();
        let expect = expand("e2 e1 e2 - r^2 e2 e2 e1 - s^-2 e1 e2 e2 + r^2 s^-2 e2 e1 e2").unwrap();
        assert_eq!(x3, expect);
        assert_eq!(expand("X1").unwrap(), FreeElt::e1());
        let zp = expand("Zp").unwrap();
        assert_eq!(zp.weight(), Some((2, 2)));
        assert_eq!(zp.degree(), 4);
        assert!(expand("Y").is_err());
    }

    #[test]
    fn trivial_and_negative_membership() {
        let (r1, _) = serre_relators();
        let (ok, cert) = ideal_member(&r1, 3).unwrap();
        assert!(ok);
        assert_eq!(cert.unwrap().terms.len(), 1);
        let comm = expand("e1 e2 - e2 e1").unwrap();
        assert!(!ideal_member(&comm, 3).unwrap().0);
        assert!(ideal_member(&comm, 1).is_err());
        assert_eq!(words_of_weight((3, 4)).len(), 35);
    }
}
