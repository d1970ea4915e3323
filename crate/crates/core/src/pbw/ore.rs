//! Ore data `(τ_j, δ_j)` of an iterated skew-polynomial presentation.
//!
//! `x_j a = τ_j(a) x_j + δ_j(a)` for `a` in the subalgebra generated by
//! `x_1 .. x_{j-1}`. `τ_j` must preserve the earlier relations and `δ_j` must
//! be a left `τ_j`-derivation on them.

use super::element::{Element, Mono};
use super::spec::AlgebraSpec;

#[derive(Clone, Debug)]
pub struct OreData {
    /// 0-based index of the adjoined variable.
    pub j: usize,
    pub tau: Vec<Element>,
    pub delta: Vec<Element>,
    /// Per earlier relation `(b, a)`: residuals for `τ_j` and `δ_j`.
    pub residuals: Vec<((usize, usize), Element, Element)>,
}

impl OreData {
    pub fn consistent(&self) -> bool {
        self.residuals.iter().all(|(_, t, d)| t.is_zero() && d.is_zero())
    }
}

/// Extends `f` (given on variables `< j`) linearly over words, as an algebra map.
fn apply_hom(spec: &AlgebraSpec, imgs: &[Element], x: &Element) -> Element {
    let mut out = Element::zero();
    for (m, c) in x {
        let mut acc = spec.one();
        for (k, &e) in m.0.iter().enumerate() {
            for _ in 0..e {
                acc = spec.mul(&acc, &imgs[k]);
            }
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// Applies the `τ`-derivation `δ` to the word `letters` (each a variable index).
fn apply_skew_derivation(spec: &AlgebraSpec, tau: &[Element], delta: &[Element], letters: &[usize]) -> Element {
    // δ(u v) = τ(u) δ(v) + δ(u) v, expanded left to right
    let mut out = Element::zero();
    for (p, &l) in letters.iter().enumerate() {
        let mut term = spec.one();
        for &k in &letters[..p] {
            term = spec.mul(&term, &tau[k]);
        }
        term = spec.mul(&term, &delta[l]);
        for &k in &letters[p + 1..] {
            term = spec.mul(&term, &spec.var(k));
        }
        out = out.add(&term);
    }
    out
}

fn mono_letters(m: &Mono) -> Vec<usize> {
    let mut v = Vec::new();
    for (k, &e) in m.0.iter().enumerate() {
        for _ in 0..e {
            v.push(k);
        }
    }
    v
}

fn apply_skew_linear(spec: &AlgebraSpec, tau: &[Element], delta: &[Element], x: &Element) -> Element {
    let mut out = Element::zero();
    for (m, c) in x {
        out.add_scaled(&apply_skew_derivation(spec, tau, delta, &mono_letters(m)), c);
    }
    out
}

/// Reads off `τ_j, δ_j` (0-based `j >= 1`) and checks them on every relation among earlier variables.
pub fn ore_data(spec: &AlgebraSpec, j: usize) -> OreData {
    assert!(j >= 1 && j < spec.nvars(), "ore_data needs 1 <= j < n (0-based)");
    let tau: Vec<Element> = (0..j).map(|i| spec.var(i).scale(spec.q(j, i))).collect();
    let delta: Vec<Element> = (0..j).map(|i| spec.c(j, i).clone()).collect();
    let mut residuals = Vec::new();
    for b in 0..j {
        for a in 0..b {
            // x_b x_a - q x_a x_b - c
            let lhs_words: [(Vec<usize>, crate::coeff::RatF); 2] = [(vec![b, a], crate::coeff::RatF::one()), (vec![a, b], -spec.q(b, a))];
            let c = spec.c(b, a);
            let rel_img = |imgs: &[Element]| {
                let mut acc = Element::zero();
                for (w, k) in &lhs_words {
                    let prod = w.iter().fold(spec.one(), |p, &l| spec.mul(&p, &imgs[l]));
                    acc.add_scaled(&prod, k);
                }
                acc.sub(&apply_hom(spec, imgs, c))
            };
            let tau_res = rel_img(&tau);
            let mut delta_res = Element::zero();
            for (w, k) in &lhs_words {
                delta_res.add_scaled(&apply_skew_derivation(spec, &tau, &delta, w), k);
            }
            delta_res = delta_res.sub(&apply_skew_linear(spec, &tau, &delta, c));
            residuals.push(((b, a), tau_res, delta_res));
        }
    }
    OreData { j, tau, delta, residuals }
}
