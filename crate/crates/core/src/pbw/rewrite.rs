//! Word-level rewriting, independent of the monomial multiplication engine.
//!
//! Words are sequences of letters `x_i^{±1}`. One rewrite step either cancels
//! `x_i x_i^{-1}` or swaps an out-of-order adjacent pair using the defining
//! relation. Confluence is checked on every overlap `x_k x_j x_i`, `k > j > i`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::element::{Element, Mono};
use super::spec::AlgebraSpec;
use crate::coeff::RatF;

/// A letter `(variable index, ±1)`.
pub type Letter = (usize, i32);
pub type Word = Vec<Letter>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

fn redex_at(w: &[Letter], p: usize) -> bool {
    let (a, b) = (w[p], w[p + 1]);
    a.0 > b.0 || (a.0 == b.0 && a.1 == -b.1)
}

fn find_redex(w: &[Letter], strategy: Strategy) -> Option<usize> {
    if w.len() < 2 {
        return None;
    }
    match strategy {
        Strategy::Leftmost => (0..w.len() - 1).find(|&p| redex_at(w, p)),
        Strategy::Rightmost => (0..w.len() - 1).rev().find(|&p| redex_at(w, p)),
    }
}

fn correction_words(spec: &AlgebraSpec, j: usize, i: usize) -> Vec<(Word, RatF)> {
    spec.c(j, i)
        .iter()
        .map(|(m, c)| {
            let w: Word = m.0.iter().enumerate().filter(|(_, &e)| e != 0).map(|(k, &e)| (k, e)).collect();
            (w, c.clone())
        })
        .collect()
}

/// Replacement for the pair at positions `p, p+1`.
fn rewrite_pair(spec: &AlgebraSpec, a: Letter, b: Letter) -> Vec<(Word, RatF)> {
    if a.0 == b.0 {
        return vec![(Vec::new(), RatF::one())];
    }
    let ((j, sa), (i, sb)) = (a, b);
    let q = spec.q(j, i);
    if spec.c(j, i).is_zero() {
        let k = q.pow(i64::from(sa * sb)).expect("q nonzero");
        return vec![(vec![b, a], k)];
    }
    assert_eq!(sa, 1, "inverted upper variable in a corrected pair");
    let cw = correction_words(spec, j, i);
    if sb == 1 {
        let mut out = vec![(vec![b, a], q.clone())];
        out.extend(cw);
        return out;
    }
    let qi = q.inv().expect("q nonzero");
    let mut out = vec![(vec![b, a], qi.clone())];
    for (w, c) in cw {
        let mut word = vec![b];
        word.extend(w);
        word.push(b);
        out.push((word, -(&qi * &c)));
    }
    out
}

fn add_word(acc: &mut BTreeMap<Word, RatF>, w: Word, c: RatF) {
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
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

/// Applies one rewrite at position `p` of `w`.
pub fn step_at(spec: &AlgebraSpec, w: &[Letter], p: usize) -> Vec<(Word, RatF)> {
    rewrite_pair(spec, w[p], w[p + 1])
        .into_iter()
        .map(|(mid, c)| {
            let mut out = w[..p].to_vec();
            out.extend(mid);
            out.extend_from_slice(&w[p + 2..]);
            (out, c)
        })
        .collect()
}

fn word_to_mono(n: usize, w: &[Letter]) -> Mono {
    let mut m = Mono::one(n);
    for &(k, e) in w {
        m.0[k] += e;
    }
    m
}

/// Rewrites a linear combination of words to normal form; also returns the number of steps.
pub fn normalize_words(spec: &AlgebraSpec, input: Vec<(Word, RatF)>, strategy: Strategy) -> (Element, usize) {
    let mut pending: BTreeMap<Word, RatF> = BTreeMap::new();
    for (w, c) in input {
        add_word(&mut pending, w, c);
    }
    let mut out = Element::zero();
    let mut steps = 0;
    while let Some((w, c)) = pending.pop_last() {
        match find_redex(&w, strategy) {
            None => out.add_term(word_to_mono(spec.nvars(), &w), c),
            Some(p) => {
                steps += 1;
                for (nw, k) in step_at(spec, &w, p) {
                    add_word(&mut pending, nw, &k * &c);
                }
            }
        }
    }
    (out, steps)
}

pub fn normalize_word(spec: &AlgebraSpec, w: &[Letter], strategy: Strategy) -> Element {
    normalize_words(spec, vec![(w.to_vec(), RatF::one())], strategy).0
}

/// One overlap `x_k^{±1} x_j^{±1} x_i^{±1}` and its two resolutions.
#[derive(Clone, Debug)]
pub struct OverlapCheck {
    pub word: Word,
    /// Normal form after first rewriting the left pair.
    pub left: Element,
    /// Normal form after first rewriting the right pair.
    pub right: Element,
    /// Product computed by the multiplication engine.
    pub engine: Element,
}

impl OverlapCheck {
    pub fn resolves(&self) -> bool {
        self.left == self.right
    }

    pub fn engine_agrees(&self) -> bool {
        self.left == self.engine && self.right == self.engine
    }
}

#[derive(Clone, Debug, Default)]
pub struct ConfluenceReport {
    pub checks: Vec<OverlapCheck>,
}

impl ConfluenceReport {
    pub fn confluent(&self) -> bool {
        self.checks.iter().all(OverlapCheck::resolves)
    }

    pub fn failures(&self) -> impl Iterator<Item = &OverlapCheck> {
        self.checks.iter().filter(|c| !c.resolves())
    }

    /// Distinct index triples `(k, j, i)` (0-based) that were examined.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let mut t: Vec<_> = self.checks.iter().map(|c| (c.word[0].0, c.word[1].0, c.word[2].0)).collect();
        t.dedup();
        t
    }
}

fn signs_for(spec: &AlgebraSpec, v: usize) -> Vec<i32> {
    if spec.is_invertible(v) {
        vec![1, -1]
    } else {
        vec![1]
    }
}

/// Checks every overlap `k > j > i`, including inverse letters of invertible variables.
pub fn validate_spec(spec: &AlgebraSpec) -> ConfluenceReport {
    let n = spec.nvars();
    let mut report = ConfluenceReport::default();
    for k in 0..n {
        for j in 0..k {
            for i in 0..j {
                for sk in signs_for(spec, k) {
                    for sj in signs_for(spec, j) {
                        for si in signs_for(spec, i) {
                            let word = vec![(k, sk), (j, sj), (i, si)];
                            report.checks.push(check_overlap(spec, word));
                        }
                    }
                }
            }
        }
    }
    report
}

fn check_overlap(spec: &AlgebraSpec, word: Word) -> OverlapCheck {
    let n = spec.nvars();
    let resolve = |p: usize| {
        let first = step_at(spec, &word, p);
        normalize_words(spec, first, Strategy::Leftmost).0
    };
    let left = resolve(0);
    let right = resolve(1);
    let engine = word.iter().fold(Element::one(n), |acc, &(v, e)| spec.mul(&acc, &Element::mono(Mono::var(n, v, e))));
    OverlapCheck { word, left, right, engine }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancels_inverse_pairs() {
        let spec = AlgebraSpec::builder(&["a", "b"]).invertible(&[true, true]).commute(2, 1, RatF::parse("r").unwrap()).build().unwrap();
        let w = vec![(1, 1), (0, -1), (1, -1), (0, 1)];
        let nf = normalize_word(&spec, &w, Strategy::Leftmost);
        let nf2 = normalize_word(&spec, &w, Strategy::Rightmost);
        assert_eq!(nf, nf2);
        assert_eq!(nf, Element::scalar(2, RatF::parse("1/r").unwrap()));
        assert!(validate_spec(&spec).confluent());
    }
}
