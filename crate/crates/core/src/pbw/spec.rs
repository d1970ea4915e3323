use std::collections::HashMap;
use std::sync::Mutex;

use super::element::{Element, Mono, Weight};
use crate::coeff::RatF;
use crate::error::{Error, Result};

/// An iterated skew-polynomial (PBW) presentation.
///
/// For `j > i` the defining relation is `x_j x_i = q(j,i) x_i x_j + c(j,i)`,
/// where `c(j,i)` is a combination of the unit and single variables with index
/// strictly between `i` and `j`. Normal monomials list variables in ascending
/// index order. Variables flagged invertible carry Laurent exponents.
pub struct AlgebraSpec {
    name: String,
    vars: Vec<String>,
    invertible: Vec<bool>,
    q: Vec<Vec<RatF>>,
    c: Vec<Vec<Element>>,
    weights: Vec<Weight>,
    cache: Mutex<HashMap<(Mono, Mono), Element>>,
}

impl Clone for AlgebraSpec {
    fn clone(&self) -> Self {
        AlgebraSpec {
            name: self.name.clone(),
            vars: self.vars.clone(),
            invertible: self.invertible.clone(),
            q: self.q.clone(),
            c: self.c.clone(),
            weights: self.weights.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl PartialEq for AlgebraSpec {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.invertible == other.invertible && self.q == other.q && self.c == other.c && self.weights == other.weights
    }
}

impl std::fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AlgebraSpec").field("name", &self.name).field("vars", &self.vars).field("invertible", &self.invertible).finish_non_exhaustive()
    }
}

/// Builder for [`AlgebraSpec`]; relation indices are 1-based as in the document format.
pub struct SpecBuilder {
    name: String,
    vars: Vec<String>,
    invertible: Vec<bool>,
    q: Vec<Vec<Option<RatF>>>,
    c: Vec<Vec<Element>>,
    weights: Option<Vec<Weight>>,
}

impl SpecBuilder {
    pub fn invertible(mut self, flags: &[bool]) -> Self {
        self.invertible = flags.to_vec();
        self
    }

    pub fn weights(mut self, w: &[Weight]) -> Self {
        self.weights = Some(w.to_vec());
        self
    }

    pub fn name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// `x_j x_i = q x_i x_j + c` with 1-based `j > i`.
    pub fn relation(mut self, j: usize, i: usize, q: RatF, c: Element) -> Self {
        assert!(j > i && i >= 1 && j <= self.vars.len(), "relation indices must satisfy n >= j > i >= 1");
        self.q[j - 1][i - 1] = Some(q);
        self.c[j - 1][i - 1] = c;
        self
    }

    pub fn commute(self, j: usize, i: usize, q: RatF) -> Self {
        self.relation(j, i, q, Element::zero())
    }

    pub fn build(self) -> Result<AlgebraSpec> {
        let n = self.vars.len();
        if self.invertible.len() != n {
            return Err(Error::InvalidSpec("`invertible` must have one flag per variable".into()));
        }
        let weights = self.weights.unwrap_or_else(|| vec![(0, 0); n]);
        if weights.len() != n {
            return Err(Error::InvalidSpec("`weights` must have one pair per variable".into()));
        }
        let mut q = vec![vec![RatF::one(); n]; n];
        for j in 0..n {
            for i in 0..j {
                let v = self.q[j][i].clone().ok_or_else(|| Error::InvalidSpec(format!("missing q({},{})", j + 1, i + 1)))?;
                if v.is_zero() {
                    return Err(Error::InvalidSpec(format!("q({},{}) must be nonzero", j + 1, i + 1)));
                }
                q[j][i] = v;
            }
        }
        for j in 0..n {
            for i in 0..j {
                let c = &self.c[j][i];
                if c.is_zero() {
                    continue;
                }
                if self.invertible[j] {
                    return Err(Error::InvalidSpec(format!("variable {} is invertible but has a correction term against {}", self.vars[j], self.vars[i])));
                }
                let target = (weights[i].0 + weights[j].0, weights[i].1 + weights[j].1);
                for m in c.monomials() {
                    if m.nvars() != n {
                        return Err(Error::InvalidSpec("correction has wrong arity".into()));
                    }
                    if m.length() > 1 || m.0.iter().any(|&e| e < 0) {
                        return Err(Error::InvalidSpec(format!("c({},{}) must be a combination of 1 and single variables", j + 1, i + 1)));
                    }
                    if let Some(k) = m.first_var() {
                        if k <= i || k >= j {
                            return Err(Error::InvalidSpec(format!("c({},{}) uses {} outside the open index range", j + 1, i + 1, self.vars[k])));
                        }
                    }
                    let w = weight_of_with(&weights, m);
                    if w != target {
                        return Err(Error::InvalidSpec(format!("c({},{}) is not homogeneous of weight {:?}", j + 1, i + 1, target)));
                    }
                }
            }
        }
        Ok(AlgebraSpec { name: self.name, vars: self.vars, invertible: self.invertible, q, c: self.c, weights, cache: Mutex::new(HashMap::new()) })
    }
}

fn weight_of_with(weights: &[Weight], m: &Mono) -> Weight {
    m.0.iter().zip(weights).fold((0, 0), |acc, (&e, w)| (acc.0 + e * w.0, acc.1 + e * w.1))
}

impl AlgebraSpec {
    pub fn builder(vars: &[&str]) -> SpecBuilder {
        let n = vars.len();
        SpecBuilder {
            name: String::new(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
            invertible: vec![false; n],
            q: vec![vec![None; n]; n],
            c: vec![vec![Element::zero(); n]; n],
            weights: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_invertible(&self, i: usize) -> bool {
        self.invertible[i]
    }

    pub fn invertible_flags(&self) -> &[bool] {
        &self.invertible
    }

    /// `q(j,i)` for 0-based `j > i`.
    pub fn q(&self, j: usize, i: usize) -> &RatF {
        &self.q[j][i]
    }

    /// `c(j,i)` for 0-based `j > i`.
    pub fn c(&self, j: usize, i: usize) -> &Element {
        &self.c[j][i]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight_of(&self, m: &Mono) -> Weight {
        weight_of_with(&self.weights, m)
    }

    /// The common weight of all terms, or `None` for zero or inhomogeneous elements.
    pub fn is_homogeneous(&self, a: &Element) -> Option<Weight> {
        let mut it = a.monomials().map(|m| self.weight_of(m));
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    pub fn one(&self) -> Element {
        Element::one(self.nvars())
    }

    pub fn var(&self, i: usize) -> Element {
        Element::var(self.nvars(), i)
    }

    pub fn scalar(&self, c: RatF) -> Element {
        Element::scalar(self.nvars(), c)
    }

    /// A copy with every correction term removed (the associated graded algebra).
    pub fn graded(&self) -> AlgebraSpec {
        let n = self.nvars();
        AlgebraSpec {
            name: self.name.clone(),
            vars: self.vars.clone(),
            invertible: self.invertible.clone(),
            q: self.q.clone(),
            c: vec![vec![Element::zero(); n]; n],
            weights: self.weights.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// A copy with different invertibility flags.
    pub fn with_invertible(&self, flags: &[bool]) -> Result<AlgebraSpec> {
        let mut b = AlgebraSpec::builder(&self.vars.iter().map(String::as_str).collect::<Vec<_>>()).name(&self.name).invertible(flags).weights(&self.weights);
        for j in 0..self.nvars() {
            for i in 0..j {
                b = b.relation(j + 1, i + 1, self.q[j][i].clone(), self.c[j][i].clone());
            }
        }
        b.build()
    }

    pub fn renamed(mut self, name: &str) -> AlgebraSpec {
        self.name = name.to_string();
        self
    }

    /// Whether `x_j^{±1} x_i^{±1}` swaps to a pure scalar multiple.
    fn is_pure(&self, j: usize, i: usize) -> bool {
        self.c[j][i].is_zero()
    }

    fn check_mono(&self, m: &Mono) {
        debug_assert_eq!(m.nvars(), self.nvars());
        debug_assert!(m.0.iter().enumerate().all(|(i, &e)| e >= 0 || self.invertible[i]));
    }

    /// Normal form of the product of two normal monomials.
    pub fn mul_mono(&self, a: &Mono, b: &Mono) -> Element {
        self.check_mono(a);
        self.check_mono(b);
        let (Some(j), Some(i)) = (a.last_var(), b.first_var()) else {
            return Element::mono(a.mul_commutative(b));
        };
        if j <= i {
            return Element::mono(a.mul_commutative(b));
        }
        if let Some(k) = self.cross_pure_scalar(a, b) {
            return Element::term(a.mul_commutative(b), k);
        }
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let sa = a.0[j].signum();
        let sb = b.0[i].signum();
        let mut a_rest = a.clone();
        a_rest.0[j] -= sa;
        let mut b_rest = b.clone();
        b_rest.0[i] -= sb;
        let swapped = self.swap_letters(j, sa, i, sb);
        let mut out = Element::zero();
        for (m, c) in &swapped {
            let left = self.mul_mono(&a_rest, m);
            for (lm, lc) in &left {
                let full = self.mul_mono(lm, &b_rest);
                out.add_scaled(&full, &(c * lc));
            }
        }
        self.cache.lock().expect("cache lock").insert(key, out.clone());
        out
    }

    /// Scalar for `a * b` when every cross pair that must be swapped is pure.
    fn cross_pure_scalar(&self, a: &Mono, b: &Mono) -> Option<RatF> {
        let mut k = RatF::one();
        for (j, &ea) in a.0.iter().enumerate() {
            if ea == 0 {
                continue;
            }
            for (i, &eb) in b.0.iter().enumerate().take(j) {
                if eb == 0 {
                    continue;
                }
                if !self.is_pure(j, i) {
                    return None;
                }
                let p = i64::from(ea) * i64::from(eb);
                k = &k * &self.q[j][i].pow(p).expect("q nonzero");
            }
        }
        Some(k)
    }

    /// Normal form of `x_j^{sa} x_i^{sb}` for `j > i`, `sa, sb ∈ {±1}`.
    fn swap_letters(&self, j: usize, sa: i32, i: usize, sb: i32) -> Element {
        let n = self.nvars();
        let mut both = Mono::one(n);
        both.0[i] = sb;
        both.0[j] = sa;
        let q = &self.q[j][i];
        if self.is_pure(j, i) {
            let k = q.pow(i64::from(sa * sb)).expect("q nonzero");
            return Element::term(both, k);
        }
        assert_eq!(sa, 1, "invertible variable with correction term");
        let c = &self.c[j][i];
        if sb == 1 {
            let mut out = Element::term(both, q.clone());
            out = out.add(c);
            return out;
        }
        // x_j x_i^{-1} = q^{-1} x_i^{-1} x_j - q^{-1} x_i^{-1} c x_i^{-1}
        let qi = q.inv().expect("q nonzero");
        let mut out = Element::term(both, qi.clone());
        let inv_i = Element::mono(Mono::var(n, i, -1));
        let tail = self.mul(&self.mul(&inv_i, c), &inv_i);
        out.add_scaled(&tail, &(-&qi));
        out
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let p = self.mul_mono(ma, mb);
                out.add_scaled(&p, &(ca * cb));
            }
        }
        out
    }

    pub fn mul_all<'a, I: IntoIterator<Item = &'a Element>>(&self, factors: I) -> Element {
        factors.into_iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// `a b - b a`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    pub fn pow(&self, a: &Element, n: u32) -> Element {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// Inverse of `c * m` when every variable of `m` is invertible.
    pub fn inverse_term(&self, m: &Mono, c: &RatF) -> Result<Element> {
        for (i, &e) in m.0.iter().enumerate() {
            if e != 0 && !self.invertible[i] {
                return Err(Error::NotInvertible(self.vars[i].clone()));
            }
        }
        let mut acc = Element::scalar(self.nvars(), c.inv()?);
        for i in (0..self.nvars()).rev() {
            if m.0[i] != 0 {
                let f = Element::mono(Mono::var(self.nvars(), i, -m.0[i]));
                acc = self.mul(&acc, &f);
            }
        }
        Ok(acc)
    }

    /// Inverse of a single-term element.
    pub fn inverse(&self, a: &Element) -> Result<Element> {
        match a.as_term() {
            Some((m, c)) => self.inverse_term(m, c),
            None => Err(Error::NotInvertible("not a single term".into())),
        }
    }

    /// Number of monomials in the non-invertible variables with total degree `<= n`.
    pub fn dimension_count(&self, n: u32) -> u64 {
        let k = self.invertible.iter().filter(|f| !**f).count() as u64;
        // C(n + k, k)
        let mut acc: u64 = 1;
        for t in 1..=k {
            acc = acc * (u64::from(n) + t) / t;
        }
        acc
    }

    /// All normal monomials in the non-invertible variables of total degree `<= n`
    /// (invertible variables get exponent range `[-n, n]` when `laurent` is set, else 0).
    pub fn monomials_up_to(&self, n: i32, laurent: bool) -> Vec<Mono> {
        let mut out = Vec::new();
        let mut cur = vec![0i32; self.nvars()];
        fn rec(spec: &AlgebraSpec, idx: usize, budget: i32, n: i32, laurent: bool, cur: &mut Vec<i32>, out: &mut Vec<Mono>) {
            if idx == cur.len() {
                out.push(Mono(cur.clone()));
                return;
            }
            if spec.invertible[idx] {
                let range = if laurent { -n..=n } else { 0..=0 };
                for e in range {
                    cur[idx] = e;
                    rec(spec, idx + 1, budget, n, laurent, cur, out);
                }
            } else {
                for e in 0..=budget {
                    cur[idx] = e;
                    rec(spec, idx + 1, budget - e, n, laurent, cur, out);
                }
            }
            cur[idx] = 0;
        }
        rec(self, 0, n, n, laurent, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Monomials of a given weight with non-negative exponents and total degree `<= degbound`.
    pub fn monomials_of_weight(&self, w: Weight, degbound: i32) -> Vec<Mono> {
        self.monomials_up_to(degbound, false).into_iter().filter(|m| self.weight_of(m) == w).collect()
    }

    pub fn format(&self, a: &Element) -> String {
        a.to_string_with(&self.vars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> RatF {
        RatF::parse(s).unwrap()
    }

    fn weyl_like() -> AlgebraSpec {
        // x2 x1 = q x1 x2 + 1-free correction through a middle variable
        AlgebraSpec::builder(&["a", "b", "c"])
            .commute(2, 1, q("r"))
            .commute(3, 2, q("s"))
            .relation(3, 1, q("r*s"), Element::var(3, 1))
            .weights(&[(1, 0), (1, 1), (0, 1)])
            .build()
            .unwrap()
    }

    #[test]
    fn correction_must_sit_between() {
        let bad = AlgebraSpec::builder(&["a", "b"]).relation(2, 1, q("r"), Element::var(2, 0)).build();
        assert!(bad.is_err());
        let missing = AlgebraSpec::builder(&["a", "b"]).build();
        assert!(missing.is_err());
    }

    #[test]
    fn invertible_upper_variable_with_correction_is_rejected() {
        let bad = AlgebraSpec::builder(&["a", "b", "c"])
            .invertible(&[false, false, true])
            .commute(2, 1, q("r"))
            .commute(3, 2, q("s"))
            .relation(3, 1, q("r*s"), Element::var(3, 1))
            .weights(&[(1, 0), (1, 1), (0, 1)])
            .build();
        assert!(bad.is_err());
    }

    #[test]
    fn swap_with_correction() {
        let a = weyl_like();
        let x = a.var(0);
        let z = a.var(2);
        let zx = a.mul(&z, &x);
        let expect = Element::term(Mono(vec![1, 0, 1]), q("r*s")).add(&a.var(1));
        assert_eq!(zx, expect);
    }

    #[test]
    fn laurent_inverse_with_correction() {
        let a = weyl_like().with_invertible(&[true, false, false]).unwrap();
        let x = a.var(0);
        let xinv = a.inverse(&x).unwrap();
        let z = a.var(2);
        // (z x^{-1}) x = z
        let lhs = a.mul(&a.mul(&z, &xinv), &x);
        assert_eq!(lhs, z);
        assert_eq!(a.mul(&x, &xinv), a.one());
    }

    #[test]
    fn dimension_counts() {
        let a = weyl_like();
        assert_eq!(a.dimension_count(2), 10);
        assert_eq!(a.monomials_up_to(2, false).len(), 10);
    }
}
