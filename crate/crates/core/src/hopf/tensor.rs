//! Tensor powers `A^{(x)n}` of a PBW algebra, with coefficients that may carry
//! symbolic markers `lambda1, lambda2, gamma1, gamma2` (Laurent exponents).
//!
//! `n = 0` is the ground field, `n = 1` the algebra itself.

use std::collections::BTreeMap;

use crate::coeff::RatF;
use crate::free::FreeElt;
use crate::pbw::{AlgebraSpec, Element, Mono};

pub const MARKER_NAMES: [&str; 4] = ["lambda1", "lambda2", "gamma1", "gamma2"];

pub type Marks = [i32; 4];

/// A marker monomial times a coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    pub marks: Marks,
    pub value: RatF,
}

impl Scalar {
    pub fn value(v: RatF) -> Self {
        Scalar { marks: [0; 4], value: v }
    }

    pub fn one() -> Self {
        Self::value(RatF::one())
    }

    pub fn marker(k: usize) -> Self {
        let mut marks = [0; 4];
        marks[k] = 1;
        Scalar { marks, value: RatF::one() }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        let mut marks = self.marks;
        for (m, x) in marks.iter_mut().zip(o.marks) {
            *m += x;
        }
        Scalar { marks, value: &self.value * &o.value }
    }

    pub fn pow(&self, e: i32) -> Scalar {
        Scalar { marks: self.marks.map(|m| m * e), value: self.value.pow(i64::from(e)).expect("nonzero scalar") }
    }

    pub fn inv(&self) -> Scalar {
        self.pow(-1)
    }

    pub fn is_symbolic(&self) -> bool {
        self.marks != [0; 4]
    }
}

type Key = (Marks, Vec<Mono>);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElt {
    terms: BTreeMap<Key, RatF>,
}

impl TensorElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(parts: Vec<Mono>) -> Self {
        let mut t = Self::zero();
        t.add_term([0; 4], parts, RatF::one());
        t
    }

    pub fn scalar(s: &Scalar) -> Self {
        let mut t = Self::zero();
        t.add_term(s.marks, Vec::new(), s.value.clone());
        t
    }

    pub fn from_element(e: &Element) -> Self {
        let mut t = Self::zero();
        for (m, c) in e {
            t.add_term([0; 4], vec![m.clone()], c.clone());
        }
        t
    }

    pub fn add_term(&mut self, marks: Marks, parts: Vec<Mono>, c: RatF) {
        if c.is_zero() {
            return;
        }
        let key = (marks, parts);
        let next = match self.terms.get(&key) {
            Some(old) => old + &c,
            None => c,
        };
        if next.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, next);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Marks, &[Mono], &RatF)> {
        self.terms.iter().map(|((m, p), c)| (m, p.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &TensorElt) -> TensorElt {
        let mut out = self.clone();
        for ((m, p), c) in &o.terms {
            out.add_term(*m, p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &TensorElt) -> TensorElt {
        self.add(&o.scale(&Scalar::value(RatF::from_int(-1))))
    }

    pub fn scale(&self, s: &Scalar) -> TensorElt {
        let mut out = TensorElt::zero();
        for ((m, p), c) in &self.terms {
            let mut marks = *m;
            for (a, b) in marks.iter_mut().zip(s.marks) {
                *a += b;
            }
            out.add_term(marks, p.clone(), c * &s.value);
        }
        out
    }

    /// `a (x) b`: factors concatenated.
    pub fn outer(&self, o: &TensorElt) -> TensorElt {
        let mut out = TensorElt::zero();
        for ((ma, pa), ca) in &self.terms {
            for ((mb, pb), cb) in &o.terms {
                let mut marks = *ma;
                for (a, b) in marks.iter_mut().zip(mb) {
                    *a += b;
                }
                let mut parts = pa.clone();
                parts.extend(pb.iter().cloned());
                out.add_term(marks, parts, ca * cb);
            }
        }
        out
    }

    /// Replaces every marker by its value (`None` keeps it symbolic).
    pub fn specialize(&self, values: &[Option<RatF>; 4]) -> TensorElt {
        let mut out = TensorElt::zero();
        for ((m, p), c) in &self.terms {
            let mut marks = *m;
            let mut c = c.clone();
            for k in 0..4 {
                if let Some(v) = &values[k] {
                    c = &c * &v.pow(i64::from(marks[k])).expect("marker value nonzero");
                    marks[k] = 0;
                }
            }
            out.add_term(marks, p.clone(), c);
        }
        out
    }

    /// The `n = 1` element with the given marker monomial (markers must match exactly).
    pub fn marker_component(&self, marks: &Marks) -> Element {
        let mut e = Element::zero();
        for ((m, p), c) in &self.terms {
            if m == marks && p.len() == 1 {
                e.add_term(p[0].clone(), c.clone());
            }
        }
        e
    }

    /// Sum over marker monomials, for elements without markers.
    pub fn to_element(&self) -> Option<Element> {
        let mut e = Element::zero();
        for ((m, p), c) in &self.terms {
            if *m != [0; 4] || p.len() != 1 {
                return None;
            }
            e.add_term(p[0].clone(), c.clone());
        }
        Some(e)
    }

    /// Groups terms by their tensor part: each part with its marker polynomial.
    pub fn by_parts(&self) -> BTreeMap<Vec<Mono>, BTreeMap<Marks, RatF>> {
        let mut out: BTreeMap<Vec<Mono>, BTreeMap<Marks, RatF>> = BTreeMap::new();
        for ((m, p), c) in &self.terms {
            out.entry(p.clone()).or_default().insert(*m, c.clone());
        }
        out
    }

    pub fn format(&self, spec: &AlgebraSpec) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, ((m, p), c)) in self.terms.iter().enumerate() {
            let mut words: Vec<String> = Vec::new();
            for (j, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => words.push(MARKER_NAMES[j].to_string()),
                    _ => words.push(format!("{}^{}", MARKER_NAMES[j], e)),
                }
            }
            if !p.iter().all(Mono::is_one) || p.len() > 1 {
                let factors: Vec<String> = p.iter().map(|x| spec.format(&Element::mono(x.clone()))).collect();
                words.push(factors.join(" ⊗ "));
            }
            let simple = c.is_polynomial() && c.num().is_constant();
            let neg = simple && c.num().leading_sign() < 0;
            let mag = if neg { -c } else { c.clone() };
            if !mag.is_one() || words.is_empty() {
                words.insert(0, if simple { mag.to_string() } else { format!("({mag})") });
            }
            out.push_str(match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            out.push_str(&words.join(" "));
        }
        out
    }
}

/// Multiplication in `A^{(x)n}`.
#[derive(Clone, Copy)]
pub struct TensorSpace<'a> {
    pub spec: &'a AlgebraSpec,
    pub n: usize,
}

impl<'a> TensorSpace<'a> {
    pub fn new(spec: &'a AlgebraSpec, n: usize) -> Self {
        TensorSpace { spec, n }
    }

    pub fn one(&self) -> TensorElt {
        TensorElt::basis(vec![Mono::one(self.spec.nvars()); self.n])
    }

    pub fn scalar(&self, s: &Scalar) -> TensorElt {
        self.one().scale(s)
    }

    /// `a (x) 1 (x) ... (x) 1` style embedding of a plain element at slot `k`.
    pub fn at(&self, k: usize, e: &Element) -> TensorElt {
        let mut t = TensorElt::zero();
        for (m, c) in e {
            let mut parts = vec![Mono::one(self.spec.nvars()); self.n];
            parts[k] = m.clone();
            t.add_term([0; 4], parts, c.clone());
        }
        t
    }

    pub fn mul(&self, a: &TensorElt, b: &TensorElt) -> TensorElt {
        let mut out = TensorElt::zero();
        for ((ma, pa), ca) in &a.terms {
            for ((mb, pb), cb) in &b.terms {
                debug_assert_eq!(pa.len(), self.n);
                debug_assert_eq!(pb.len(), self.n);
                let mut marks = *ma;
                for (x, y) in marks.iter_mut().zip(mb) {
                    *x += y;
                }
                let products: Vec<Element> = pa.iter().zip(pb).map(|(x, y)| self.spec.mul_mono(x, y)).collect();
                let coeff = ca * cb;
                expand_into(&mut out, marks, &products, &coeff);
            }
        }
        out
    }

    /// Inverse of a single term whose factors only involve invertible variables.
    pub fn inverse_term(&self, t: &TensorElt) -> Option<TensorElt> {
        if t.len() != 1 {
            return None;
        }
        let ((marks, parts), c) = t.terms.iter().next()?;
        let mut factors = Vec::with_capacity(parts.len());
        for p in parts {
            factors.push(self.spec.inverse_term(p, &RatF::one()).ok()?);
        }
        let coeff = c.inv().ok()?;
        let mut out = TensorElt::zero();
        expand_into(&mut out, marks.map(|m| -m), &factors, &coeff);
        Some(out)
    }

    /// Multiplies all factors together: `A^{(x)n} -> A`.
    pub fn multiply_out(&self, t: &TensorElt) -> TensorElt {
        let mut out = TensorElt::zero();
        for ((m, p), c) in &t.terms {
            let mut acc = Element::one(self.spec.nvars());
            for x in p {
                acc = self.spec.mul(&acc, &Element::mono(x.clone()));
            }
            let piece = TensorElt::from_element(&acc).scale(&Scalar { marks: *m, value: c.clone() });
            out = out.add(&piece);
        }
        out
    }

    /// Evaluates a free-algebra element at the given images of `e1, e2`.
    pub fn eval_free(&self, f: &FreeElt, e1: &TensorElt, e2: &TensorElt) -> TensorElt {
        let mut out = TensorElt::zero();
        for (w, c) in f.terms() {
            let mut acc = self.one();
            for &l in w {
                acc = self.mul(&acc, if l == 0 { e1 } else { e2 });
            }
            out = out.add(&acc.scale(&Scalar::value(c.clone())));
        }
        out
    }
}

fn expand_into(out: &mut TensorElt, marks: Marks, factors: &[Element], coeff: &RatF) {
    fn rec(out: &mut TensorElt, marks: Marks, factors: &[Element], parts: &mut Vec<Mono>, c: RatF) {
        if parts.len() == factors.len() {
            out.add_term(marks, parts.clone(), c);
            return;
        }
        let k = parts.len();
        for (m, x) in &factors[k] {
            parts.push(m.clone());
            rec(out, marks, factors, parts, &c * x);
            parts.pop();
        }
    }
    rec(out, marks, factors, &mut Vec::new(), coeff.clone());
}

/// A map given on variables, extended multiplicatively (or anti-multiplicatively)
/// into `A^{(x)n}`. Invertible variables carry their inverse images.
#[derive(Clone, Debug)]
pub struct GenMap {
    pub images: Vec<TensorElt>,
    pub inverses: Vec<Option<TensorElt>>,
    pub anti: bool,
    pub target: usize,
}

impl GenMap {
    pub fn apply_mono(&self, spec: &AlgebraSpec, m: &Mono) -> TensorElt {
        let space = TensorSpace::new(spec, self.target);
        let mut letters: Vec<&TensorElt> = Vec::new();
        for (v, &e) in m.0.iter().enumerate() {
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    letters.push(&self.images[v]);
                } else {
                    letters.push(self.inverses[v].as_ref().expect("inverse image of an invertible variable"));
                }
            }
        }
        if self.anti {
            letters.reverse();
        }
        letters.into_iter().fold(space.one(), |acc, x| space.mul(&acc, x))
    }

    /// Image of a one-factor element.
    pub fn apply(&self, spec: &AlgebraSpec, x: &TensorElt) -> TensorElt {
        let mut out = TensorElt::zero();
        for ((marks, parts), c) in &x.terms {
            assert_eq!(parts.len(), 1, "map applied to a tensor of the wrong arity");
            let img = self.apply_mono(spec, &parts[0]);
            out = out.add(&img.scale(&Scalar { marks: *marks, value: c.clone() }));
        }
        out
    }

    pub fn apply_element(&self, spec: &AlgebraSpec, x: &Element) -> TensorElt {
        self.apply(spec, &TensorElt::from_element(x))
    }

    /// Applies the map to factor `k` of an `n`-fold tensor.
    pub fn apply_at(&self, spec: &AlgebraSpec, x: &TensorElt, k: usize) -> TensorElt {
        let mut out = TensorElt::zero();
        for ((marks, parts), c) in &x.terms {
            let left = TensorElt::basis(parts[..k].to_vec());
            let right = TensorElt::basis(parts[k + 1..].to_vec());
            let mid = self.apply_mono(spec, &parts[k]);
            let piece = left.outer(&mid).outer(&right).scale(&Scalar { marks: *marks, value: c.clone() });
            out = out.add(&piece);
        }
        out
    }
}
