use std::cmp::Ordering;
use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;

use crate::coeff::RatF;

/// Bidegree `(e1-count, e2-count)`.
pub type Weight = (i32, i32);

/// Exponent tuple of an ordered (PBW) monomial, one entry per variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<i32>);

impl Mono {
    pub fn one(nvars: usize) -> Self {
        Mono(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, e: i32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Mono(v)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().sum()
    }

    /// Sum of absolute exponents (word length of the monomial).
    pub fn length(&self) -> i32 {
        self.0.iter().map(|e| e.abs()).sum()
    }

    pub fn mul_commutative(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn inverse_exponents(&self) -> Mono {
        Mono(self.0.iter().map(|e| -e).collect())
    }

    pub fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e != 0)
    }

    pub fn last_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e != 0)
    }
}

/// Graded order: total degree first, then lexicographic on exponents.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of PBW monomials with coefficients in `Q(r,s)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Mono, RatF>,
}

impl Element {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::mono(Mono::one(nvars))
    }

    pub fn mono(m: Mono) -> Self {
        Self::term(m, RatF::one())
    }

    pub fn term(m: Mono, c: RatF) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn scalar(nvars: usize, c: RatF) -> Self {
        Self::term(Mono::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::mono(Mono::var(nvars, i, 1))
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, RatF)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (m, c) in it {
            e.add_term(m, c);
        }
        e
    }

    pub fn add_term(&mut self, m: Mono, c: RatF) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, k: &RatF) {
        if k.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * k);
        }
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

    pub fn iter(&self) -> btree_map::Iter<'_, Mono, RatF> {
        self.terms.iter()
    }

    pub fn terms(&self) -> &BTreeMap<Mono, RatF> {
        &self.terms
    }

    pub fn coeff(&self, m: &Mono) -> RatF {
        self.terms.get(m).cloned().unwrap_or_else(RatF::zero)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Mono> {
        self.terms.keys()
    }

    /// The coefficient if the element is a multiple of the unit.
    pub fn as_scalar(&self) -> Option<RatF> {
        match self.terms.len() {
            0 => Some(RatF::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().expect("one term");
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// `(coefficient, monomial)` when the element has exactly one term.
    pub fn as_term(&self) -> Option<(&Mono, &RatF)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Element {
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &RatF) -> Element {
        if k.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn map_monomials<F: Fn(&Mono) -> Mono>(&self, f: F) -> Element {
        Element::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Renders in the element-string grammar using the given variable names.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mono = format_mono(m, names);
            let simple = c.is_polynomial() && c.num().is_constant();
            let (neg, mag) = if simple && c.num().leading_sign() < 0 { (true, -c) } else { (false, c.clone()) };
            let body = match (mono.is_empty(), mag.is_one(), simple) {
                (true, _, _) => mag.to_string(),
                (false, true, _) => mono,
                (false, false, true) => format!("{mag}*{mono}"),
                (false, false, false) => format!("({mag})*{mono}"),
            };
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }
}

pub fn format_mono(m: &Mono, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ if e < 0 => parts.push(format!("{}^({e})", names[i])),
            _ => parts.push(format!("{}^{e}", names[i])),
        }
    }
    parts.join(" ")
}

impl<'a> IntoIterator for &'a Element {
    type Item = (&'a Mono, &'a RatF);
    type IntoIter = btree_map::Iter<'a, Mono, RatF>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}
