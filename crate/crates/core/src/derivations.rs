//! Derivations of `U`: Leibniz consistency, inner derivations, weight-space
//! scans and the bounded first Hochschild cohomology.
//!
//! A derivation is given by its values on `X1..X4`. It extends to `U` exactly
//! when applying the Leibniz rule to each defining relation gives zero.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebras::NamedAlgebra;
use crate::coeff::RatF;
use crate::linalg::{self, SparseRow};
use crate::pbw::{AlgebraSpec, Element, Mono, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub images: Vec<Element>,
}

impl Derivation {
    pub fn zero(n: usize) -> Self {
        Derivation { images: vec![Element::zero(); n] }
    }

    pub fn add(&self, o: &Derivation) -> Derivation {
        Derivation { images: self.images.iter().zip(&o.images).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, k: &RatF) -> Derivation {
        Derivation { images: self.images.iter().map(|a| a.scale(k)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Element::is_zero)
    }

    /// Leibniz extension to a polynomial element (non-negative exponents).
    pub fn apply(&self, spec: &AlgebraSpec, x: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in x {
            let letters: Vec<usize> =
                m.0.iter()
                    .enumerate()
                    .flat_map(|(k, &e)| {
                        assert!(e >= 0, "derivation applied to a Laurent monomial");
                        std::iter::repeat_n(k, e as usize)
                    })
                    .collect();
            for p in 0..letters.len() {
                let mut left = Mono::one(spec.nvars());
                for &k in &letters[..p] {
                    left.0[k] += 1;
                }
                let mut right = Mono::one(spec.nvars());
                for &k in &letters[p + 1..] {
                    right.0[k] += 1;
                }
                let t = spec.mul(&spec.mul(&Element::mono(left), &self.images[letters[p]]), &Element::mono(right));
                out.add_scaled(&t, c);
            }
        }
        out
    }
}

/// Leibniz residual of the relation `x_j x_i - q x_i x_j - c` (0-based `j > i`).
pub fn relation_residual(spec: &AlgebraSpec, d: &Derivation, j: usize, i: usize) -> Element {
    let (xj, xi) = (spec.var(j), spec.var(i));
    let (dj, di) = (&d.images[j], &d.images[i]);
    let lhs = spec.mul(dj, &xi).add(&spec.mul(&xj, di));
    let swapped = spec.mul(di, &xj).add(&spec.mul(&xi, dj)).scale(spec.q(j, i));
    lhs.sub(&swapped).sub(&d.apply(spec, spec.c(j, i)))
}

/// Residual per relation, keyed by 1-based `(j, i)`.
pub fn is_derivation(spec: &AlgebraSpec, d: &Derivation) -> Vec<((usize, usize), Element)> {
    let mut out = Vec::new();
    for j in 0..spec.nvars() {
        for i in 0..j {
            out.push(((j + 1, i + 1), relation_residual(spec, d, j, i)));
        }
    }
    out
}

pub fn is_valid(spec: &AlgebraSpec, d: &Derivation) -> bool {
    is_derivation(spec, d).iter().all(|(_, r)| r.is_zero())
}

/// `ad_t : x -> t x - x t`.
pub fn inner(spec: &AlgebraSpec, t: &Element) -> Derivation {
    Derivation { images: (0..spec.nvars()).map(|i| spec.commutator(t, &spec.var(i))).collect() }
}

fn diagonal(spec: &AlgebraSpec, alphas: [i64; 4]) -> Derivation {
    Derivation { images: alphas.iter().enumerate().map(|(i, &a)| spec.var(i).scale(&RatF::from_int(a))).collect() }
}

/// `D1 = (X1, X2, X3, 0)`.
pub fn d1(spec: &AlgebraSpec) -> Derivation {
    diagonal(spec, [1, 1, 1, 0])
}

/// `D2` with the values as printed: `(0, X2, X3, X4)`.
pub fn d2_printed(spec: &AlgebraSpec) -> Derivation {
    diagonal(spec, [0, 1, 1, 1])
}

/// `D2 = (0, X2, 2 X3, X4)`, the value forced by `X3 = e2 X2 - s^-2 X2 e2`.
pub fn d2(spec: &AlgebraSpec) -> Derivation {
    diagonal(spec, [0, 1, 2, 1])
}

/// Solution space of `alpha` for diagonal derivations `X_i -> alpha_i X_i`.
pub fn scaling_constraints(spec: &AlgebraSpec) -> Vec<Vec<RatF>> {
    let n = spec.nvars();
    let columns: Vec<Vec<((usize, usize), Element)>> = (0..n)
        .map(|k| {
            let mut a = [0i64; 4];
            a[k] = 1;
            is_derivation(spec, &diagonal(spec, a))
        })
        .collect();
    let rows = assemble_rows(&columns);
    linalg::nullspace(&rows, n)
}

/// Rows indexed by (relation, output monomial) from per-column residual lists.
fn assemble_rows<K: Ord + Clone>(columns: &[Vec<(K, Element)>]) -> Vec<SparseRow> {
    let mut index: BTreeMap<(K, Mono), usize> = BTreeMap::new();
    let mut rows: Vec<SparseRow> = Vec::new();
    for (col, res) in columns.iter().enumerate() {
        for (key, e) in res {
            for (m, c) in e {
                let next = index.len();
                let r = *index.entry((key.clone(), m.clone())).or_insert(next);
                if r == rows.len() {
                    rows.push(SparseRow::new());
                }
                rows[r].insert(col, c.clone());
            }
        }
    }
    rows
}

fn shift(a: Weight, b: Weight) -> Weight {
    (a.0 + b.0, a.1 + b.1)
}

/// Coordinates `(generator, monomial)` for weight-`w` derivations within `degbound`.
pub fn support(spec: &AlgebraSpec, w: Weight, degbound: i32) -> Vec<(usize, Mono)> {
    let all = spec.monomials_up_to(degbound, false);
    let mut out = Vec::new();
    for i in 0..spec.nvars() {
        let target = shift(spec.weights()[i], w);
        for m in &all {
            if spec.weight_of(m) == target {
                out.push((i, m.clone()));
            }
        }
    }
    out
}

fn single(spec: &AlgebraSpec, i: usize, m: &Mono) -> Derivation {
    let mut d = Derivation::zero(spec.nvars());
    d.images[i] = Element::mono(m.clone());
    d
}

pub fn to_derivation(spec: &AlgebraSpec, coords: &[(usize, Mono)], v: &[RatF]) -> Derivation {
    let mut d = Derivation::zero(spec.nvars());
    for ((i, m), c) in coords.iter().zip(v) {
        d.images[*i].add_term(m.clone(), c.clone());
    }
    d
}

/// Basis of weight-`w` derivations whose images have degree `<= degbound`.
pub fn derivation_space(spec: &AlgebraSpec, w: Weight, degbound: i32) -> (Vec<(usize, Mono)>, Vec<Vec<RatF>>) {
    let coords = support(spec, w, degbound);
    if coords.is_empty() {
        return (coords, Vec::new());
    }
    let columns: Vec<Vec<((usize, usize), Element)>> = coords.iter().map(|(i, m)| is_derivation(spec, &single(spec, *i, m))).collect();
    let rows = assemble_rows(&columns);
    let basis = linalg::nullspace(&rows, coords.len());
    (coords, basis)
}

/// Dimension of `{ad_t : t of weight w, ad_t within the degree bound}`.
pub fn inner_space_dim(spec: &AlgebraSpec, w: Weight, degbound: i32) -> usize {
    let ts = spec.monomials_of_weight(w, degbound);
    if ts.is_empty() {
        return 0;
    }
    let columns: Vec<Vec<(usize, Element)>> = ts.iter().map(|t| inner(spec, &Element::mono(t.clone())).images.into_iter().enumerate().collect()).collect();
    let all_rows = assemble_rows(&columns);
    // rows whose monomial exceeds the bound must vanish for ad_t to lie in the support
    let mut outside: Vec<SparseRow> = Vec::new();
    {
        let mut index: BTreeMap<(usize, Mono), ()> = BTreeMap::new();
        for col in &columns {
            for (k, e) in col {
                for (m, _) in e {
                    if m.degree() > degbound {
                        index.insert((*k, m.clone()), ());
                    }
                }
            }
        }
        for (k, m) in index.keys() {
            let mut row = SparseRow::new();
            for (c, col) in columns.iter().enumerate() {
                let v = col[*k].1.coeff(m);
                if !v.is_zero() {
                    row.insert(c, v);
                }
            }
            outside.push(row);
        }
    }
    let n_ok = ts.len() - linalg::rank(&outside, ts.len());
    let ker = linalg::nullspace(&all_rows, ts.len()).len();
    n_ok - ker
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightRow {
    pub weight: Weight,
    pub der: usize,
    pub inner: usize,
}

impl WeightRow {
    pub fn outer(&self) -> usize {
        self.der - self.inner
    }
}

/// Per-weight dimensions over `|w_1|, |w_2| <= window`.
pub fn hh1_scan(spec: &AlgebraSpec, window: i32, degbound: i32) -> Vec<WeightRow> {
    let weights: Vec<Weight> = (-window..=window).flat_map(|a| (-window..=window).map(move |b| (a, b))).collect();
    weights
        .par_iter()
        .map(|&w| {
            let (_, basis) = derivation_space(spec, w, degbound);
            WeightRow { weight: w, der: basis.len(), inner: inner_space_dim(spec, w, degbound) }
        })
        .collect()
}

/// `d = ad_t + mu1 D1 + mu2 D2`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub t: Element,
    pub mu1: RatF,
    pub mu2: RatF,
}

/// Splits a derivation into weight components.
fn weight_components(spec: &AlgebraSpec, d: &Derivation) -> Option<BTreeMap<Weight, Derivation>> {
    let mut out: BTreeMap<Weight, Derivation> = BTreeMap::new();
    for (i, img) in d.images.iter().enumerate() {
        for (m, c) in img {
            let wm = spec.weight_of(m);
            let base = spec.weights()[i];
            let w = (wm.0 - base.0, wm.1 - base.1);
            out.entry(w).or_insert_with(|| Derivation::zero(spec.nvars())).images[i].add_term(m.clone(), c.clone());
        }
    }
    Some(out)
}

/// Writes `d` as `ad_t + mu1 D1 + mu2 D2`; `None` when no such `t` of degree `<= degbound` exists
/// or the coefficients are not unique.
pub fn decompose(u: &NamedAlgebra, d: &Derivation, degbound: i32) -> Option<Decomposition> {
    let spec = &u.spec;
    let comps = weight_components(spec, d)?;
    let mut t = Element::zero();
    let (mut mu1, mut mu2) = (RatF::zero(), RatF::zero());
    let specials = [d1(spec), d2(spec)];
    for (w, dw) in comps {
        let ts: Vec<Mono> = spec.monomials_of_weight(w, degbound).into_iter().filter(|m| !m.is_one()).collect();
        let mut cols: Vec<Derivation> = ts.iter().map(|m| inner(spec, &Element::mono(m.clone()))).collect();
        let extra = if w == (0, 0) { 2 } else { 0 };
        if extra == 2 {
            cols.extend(specials.iter().cloned());
        }
        let columns: Vec<Vec<(usize, Element)>> = cols.iter().map(|c| c.images.iter().cloned().enumerate().collect()).collect();
        let target: Vec<(usize, Element)> = dw.images.iter().cloned().enumerate().collect();
        let mut all = columns.clone();
        all.push(target);
        let rows = assemble_rows(&all);
        let n = cols.len();
        let a_rows: Vec<SparseRow> = rows.iter().map(|r| r.iter().filter(|(&k, _)| k < n).map(|(&k, v)| (k, v.clone())).collect()).collect();
        let rhs: Vec<RatF> = rows.iter().map(|r| r.get(&n).cloned().unwrap_or_else(RatF::zero)).collect();
        let x = linalg::solve(&a_rows, &rhs, n)?;
        if !linalg::nullspace(&a_rows, n).is_empty() {
            return None;
        }
        for (m, c) in ts.iter().zip(&x) {
            t.add_term(m.clone(), c.clone());
        }
        if extra == 2 {
            mu1 = &mu1 + &x[n - 2];
            mu2 = &mu2 + &x[n - 1];
        }
    }
    let rebuilt = inner(spec, &t).add(&specials[0].scale(&mu1)).add(&specials[1].scale(&mu2));
    (rebuilt == *d).then_some(Decomposition { t, mu1, mu2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::build_u;

    #[test]
    fn d1_and_corrected_d2_are_derivations() {
        let u = build_u();
        assert!(is_valid(&u.spec, &d1(&u.spec)));
        assert!(is_valid(&u.spec, &d2(&u.spec)));
        let bad = is_derivation(&u.spec, &d2_printed(&u.spec));
        let nonzero: Vec<_> = bad.iter().filter(|(_, r)| !r.is_zero()).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0].0, (4, 2));
        assert_eq!(nonzero[0].1, u.spec.var(2));
    }

    #[test]
    fn inner_of_x2_on_x1() {
        let u = build_u();
        let d = inner(&u.spec, &u.spec.var(1));
        let expect = Element::term(Mono(vec![1, 1, 0, 0]), RatF::parse("s^-2 - 1").unwrap());
        assert_eq!(d.images[0], expect);
        assert!(inner(&u.spec, &u.spec.one()).is_zero());
    }
}
