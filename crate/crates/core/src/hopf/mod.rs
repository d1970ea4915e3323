//! Hopf structures on `U>=0` and on its augmented version `V`: coproduct,
//! counit, antipode, their axioms, units, and automorphism scans.
//!
//! Both algebras have the variable order `g1, g2, X1, X2, X3, X4` with
//! `e1 = X1`, `e2 = X4`. Maps are given on `g1, g2, e1, e2`; the images of
//! `X2 = e1 e2 - r^2 e2 e1` and `X3 = e2 X2 - s^-2 X2 e2` follow.

pub mod auto;
pub mod tensor;

use crate::algebras::NamedAlgebra;
use crate::coeff::RatF;
use crate::error::{Error, Result};
use crate::free::{self, FreeElt};
use crate::linalg::{self, SparseRow};
use crate::pbw::{AlgebraSpec, Element, Mono};

pub use tensor::{GenMap, Scalar, TensorElt, TensorSpace, MARKER_NAMES};

/// Variable slots of the generators `g1, g2, e1, e2`.
pub const GENERATORS: [usize; 4] = [0, 1, 2, 5];
pub const GENERATOR_NAMES: [&str; 4] = ["g1", "g2", "e1", "e2"];

fn q(src: &str) -> RatF {
    RatF::parse(src).expect("constant parses")
}

/// Display names for the generators of a concrete algebra (`k1, k2, e1, e2`).
pub fn generator_names(alg: &NamedAlgebra) -> [String; 4] {
    [alg.spec.vars()[0].clone(), alg.spec.vars()[1].clone(), "e1".into(), "e2".into()]
}

/// Builds a map from images of `g1, g2, e1, e2` (and inverses of `g1, g2`).
pub fn gen_map(spec: &AlgebraSpec, gens: [TensorElt; 4], inverses: [TensorElt; 2], anti: bool, target: usize) -> GenMap {
    let space = TensorSpace::new(spec, target);
    let m = |a: &TensorElt, b: &TensorElt| if anti { space.mul(b, a) } else { space.mul(a, b) };
    let [g1, g2, e1, e2] = gens;
    let x2 = m(&e1, &e2).sub(&m(&e2, &e1).scale(&Scalar::value(q("r^2"))));
    let x3 = m(&e2, &x2).sub(&m(&x2, &e2).scale(&Scalar::value(q("s^-2"))));
    let [i1, i2] = inverses;
    GenMap { images: vec![g1, g2, e1, x2, x3, e2], inverses: vec![Some(i1), Some(i2), None, None, None, None], anti, target }
}

/// Residuals of every defining relation under a map (anti-maps reverse products).
pub fn relation_residuals(spec: &AlgebraSpec, map: &GenMap) -> Vec<(String, TensorElt)> {
    let space = TensorSpace::new(spec, map.target);
    let mut out = Vec::new();
    for j in 0..spec.nvars() {
        for i in 0..j {
            let (a, b) = (&map.images[j], &map.images[i]);
            let (ab, ba) = if map.anti { (space.mul(b, a), space.mul(a, b)) } else { (space.mul(a, b), space.mul(b, a)) };
            let res = ab.sub(&ba.scale(&Scalar::value(spec.q(j, i).clone()))).sub(&map.apply_element(spec, spec.c(j, i)));
            out.push((format!("({},{})", j + 1, i + 1), res));
        }
    }
    out
}

fn reversed(f: &FreeElt) -> FreeElt {
    let mut out = FreeElt::zero();
    for (w, c) in f.terms() {
        let mut w = w.clone();
        w.reverse();
        out.add_term(w, c.clone());
    }
    out
}

/// Serre relators at the images of `e1, e2`.
pub fn serre_residuals(spec: &AlgebraSpec, map: &GenMap) -> [TensorElt; 2] {
    let space = TensorSpace::new(spec, map.target);
    let (r1, r2) = free::serre_relators();
    let prep = |f: FreeElt| if map.anti { reversed(&f) } else { f };
    [space.eval_free(&prep(r1), &map.images[2], &map.images[5]), space.eval_free(&prep(r2), &map.images[2], &map.images[5])]
}

/// One named axiom instance and its residual.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub residual: TensorElt,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.residual.is_zero()
    }
}

pub fn all_ok(checks: &[Check]) -> bool {
    checks.iter().all(Check::ok)
}

/// Coproduct, counit and antipode on `g1, g2, e1, e2`.
#[derive(Clone, Debug)]
pub struct HopfData {
    /// Group-likes with `Delta(e_l) = e_l (x) 1 + h_l (x) e_l`.
    pub h: [Mono; 2],
    pub delta: [TensorElt; 4],
    pub eps: [RatF; 4],
    pub antipode: [Element; 4],
}

impl HopfData {
    /// `Delta(g) = g (x) g`, `Delta(e_l) = e_l (x) 1 + h_l (x) e_l`, `eps(g) = 1`, `eps(e) = 0`,
    /// with the given antipode.
    pub fn skew_primitive(alg: &NamedAlgebra, h: [Mono; 2], antipode: [Element; 4]) -> Self {
        let spec = &alg.spec;
        let one = Mono::one(spec.nvars());
        let mut delta: Vec<TensorElt> = Vec::new();
        for l in 0..2 {
            let g = Mono::var(spec.nvars(), l, 1);
            delta.push(TensorElt::basis(vec![g.clone(), g]));
        }
        for l in 0..2 {
            let e = Mono::var(spec.nvars(), GENERATORS[2 + l], 1);
            delta.push(TensorElt::basis(vec![e.clone(), one.clone()]).add(&TensorElt::basis(vec![h[l].clone(), e])));
        }
        HopfData { h, delta: delta.try_into().expect("four images"), eps: [RatF::one(), RatF::one(), RatF::zero(), RatF::zero()], antipode }
    }

    pub fn delta_map(&self, spec: &AlgebraSpec) -> GenMap {
        let two = TensorSpace::new(spec, 2);
        let inv = |t: &TensorElt| two.inverse_term(t).expect("group-like coproduct is invertible");
        gen_map(spec, self.delta.clone(), [inv(&self.delta[0]), inv(&self.delta[1])], false, 2)
    }

    pub fn eps_map(&self, spec: &AlgebraSpec) -> GenMap {
        let sc = |c: &RatF| TensorElt::scalar(&Scalar::value(c.clone()));
        let inv = |c: &RatF| TensorElt::scalar(&Scalar::value(c.inv().expect("group-like counit nonzero")));
        gen_map(spec, self.eps.clone().map(|c| sc(&c)), [inv(&self.eps[0]), inv(&self.eps[1])], false, 0)
    }

    pub fn antipode_map(&self, spec: &AlgebraSpec) -> GenMap {
        let t = |e: &Element| TensorElt::from_element(e);
        let inv = |e: &Element| t(&spec.inverse(e).expect("antipode of a group-like is invertible"));
        gen_map(spec, self.antipode.clone().map(|e| t(&e)), [inv(&self.antipode[0]), inv(&self.antipode[1])], true, 1)
    }

    pub fn with_antipode(&self, antipode: [Element; 4]) -> Self {
        HopfData { antipode, ..self.clone() }
    }
}

/// `h_l` for `U>=0` (`w1, w2`) or `V` (`k1^2 k2^-2, k1^-1 k2^2`).
pub fn skew_factors(alg: &NamedAlgebra) -> [Mono; 2] {
    let n = alg.spec.nvars();
    let mono = |a: i32, b: i32| {
        let mut m = Mono::one(n);
        m.0[0] = a;
        m.0[1] = b;
        m
    };
    if alg.spec.vars()[0] == "w1" {
        [mono(1, 0), mono(0, 1)]
    } else {
        [mono(2, -2), mono(-1, 2)]
    }
}

fn minus_h_e(alg: &NamedAlgebra, h: &Mono, e: usize) -> Element {
    let spec = &alg.spec;
    spec.mul(&Element::mono(h.clone()), &spec.var(e)).neg()
}

/// The antipode as printed: `S(e_l) = -h_l e_l`, `S(g) = g^-1`.
pub fn printed_antipode(alg: &NamedAlgebra) -> [Element; 4] {
    let spec = &alg.spec;
    let h = skew_factors(alg);
    [
        spec.inverse(&spec.var(0)).expect("group-like"),
        spec.inverse(&spec.var(1)).expect("group-like"),
        minus_h_e(alg, &h[0], GENERATORS[2]),
        minus_h_e(alg, &h[1], GENERATORS[3]),
    ]
}

/// Standard Hopf data with the printed antipode.
pub fn hopf_data(alg: &NamedAlgebra) -> HopfData {
    HopfData::skew_primitive(alg, skew_factors(alg), printed_antipode(alg))
}

/// `(Delta (x) id) Delta(x)` and `(id (x) Delta) Delta(x)` for a generator slot.
pub fn coassociativity_sides(spec: &AlgebraSpec, h: &HopfData, k: usize) -> (TensorElt, TensorElt) {
    let d = h.delta_map(spec);
    let dx = &h.delta[k];
    (d.apply_at(spec, dx, 0), d.apply_at(spec, dx, 1))
}

/// Relation preservation by `Delta` and `eps`, coassociativity and counit.
pub fn verify_bialgebra(alg: &NamedAlgebra, h: &HopfData) -> Vec<Check> {
    let spec = &alg.spec;
    let names = generator_names(alg);
    let mut out = Vec::new();
    let d = h.delta_map(spec);
    for (n, r) in relation_residuals(spec, &d) {
        out.push(Check { name: format!("delta.relation{n}"), residual: r });
    }
    for (k, r) in serre_residuals(spec, &d).into_iter().enumerate() {
        out.push(Check { name: format!("delta.serre{}", k + 1), residual: r });
    }
    for k in 0..4 {
        let (l, r) = coassociativity_sides(spec, h, k);
        out.push(Check { name: format!("coassoc.{}", names[k]), residual: l.sub(&r) });
    }
    let e = h.eps_map(spec);
    for k in 0..4 {
        let x = TensorElt::from_element(&spec.var(GENERATORS[k]));
        let left = e.apply_at(spec, &h.delta[k], 0);
        let right = e.apply_at(spec, &h.delta[k], 1);
        out.push(Check { name: format!("counit.left.{}", names[k]), residual: left.sub(&x) });
        out.push(Check { name: format!("counit.right.{}", names[k]), residual: right.sub(&x) });
    }
    for (n, r) in relation_residuals(spec, &e) {
        out.push(Check { name: format!("eps.relation{n}"), residual: r });
    }
    out
}

/// `m(S (x) id) Delta(x) - eps(x) 1` and `m(id (x) S) Delta(x) - eps(x) 1`.
pub fn convolution_residuals(spec: &AlgebraSpec, h: &HopfData, k: usize) -> (TensorElt, TensorElt) {
    let s = h.antipode_map(spec);
    let two = TensorSpace::new(spec, 2);
    let unit = TensorElt::from_element(&spec.scalar(h.eps[k].clone()));
    let left = two.multiply_out(&s.apply_at(spec, &h.delta[k], 0)).sub(&unit);
    let right = two.multiply_out(&s.apply_at(spec, &h.delta[k], 1)).sub(&unit);
    (left, right)
}

/// Both convolution identities on generators, plus the anti-homomorphism checks.
pub fn verify_antipode(alg: &NamedAlgebra, h: &HopfData) -> Vec<Check> {
    let spec = &alg.spec;
    let names = generator_names(alg);
    let mut out = Vec::new();
    for k in 0..4 {
        let (l, r) = convolution_residuals(spec, h, k);
        out.push(Check { name: format!("convolution.left.{}", names[k]), residual: l });
        out.push(Check { name: format!("convolution.right.{}", names[k]), residual: r });
    }
    let s = h.antipode_map(spec);
    for (n, r) in relation_residuals(spec, &s) {
        out.push(Check { name: format!("anti.relation{n}"), residual: r });
    }
    for (k, r) in serre_residuals(spec, &s).into_iter().enumerate() {
        out.push(Check { name: format!("anti.serre{}", k + 1), residual: r });
    }
    out
}

/// Reads `S` off the coproduct: `S(g) = g^-1` for `Delta g = g (x) g`,
/// `S(x) = -h^-1 x` for `Delta x = x (x) 1 + h (x) x`.
pub fn solve_antipode(alg: &NamedAlgebra, delta: &[TensorElt; 4]) -> Result<[Element; 4]> {
    let spec = &alg.spec;
    let one = Mono::one(spec.nvars());
    let mut out = Vec::new();
    for (k, d) in delta.iter().enumerate() {
        let terms: Vec<(&[Mono], &RatF)> = d.terms().map(|(_, p, c)| (p, c)).collect();
        let x = Mono::var(spec.nvars(), GENERATORS[k], 1);
        let s = match terms.as_slice() {
            [(p, c)] if c.is_one() && p[0] == p[1] => spec.inverse_term(&p[0], &RatF::one())?,
            [_, _] => {
                let prim = terms.iter().any(|(p, c)| c.is_one() && p[0] == x && p[1] == one);
                let skew = terms.iter().find(|(p, c)| c.is_one() && p[1] == x && p[0] != x);
                match (prim, skew) {
                    (true, Some((p, _))) => {
                        let hinv = spec.inverse_term(&p[0], &RatF::one())?;
                        spec.mul(&hinv, &spec.var(GENERATORS[k])).neg()
                    }
                    _ => return Err(Error::Other(format!("generator {k} is not skew-primitive"))),
                }
            }
            _ => return Err(Error::Other(format!("generator {k} is neither group-like nor skew-primitive"))),
        };
        out.push(s);
    }
    Ok(out.try_into().expect("four images"))
}

/// Hopf data with the antipode solved from the coproduct.
pub fn solved_hopf_data(alg: &NamedAlgebra) -> HopfData {
    let h = hopf_data(alg);
    let s = solve_antipode(alg, &h.delta).expect("standard coproduct is solvable");
    h.with_antipode(s)
}

/// `Delta(g1^m g2^n) - g1^m g2^n (x) g1^m g2^n`.
pub fn group_like_residual(alg: &NamedAlgebra, h: &HopfData, m: i32, n: i32) -> TensorElt {
    let spec = &alg.spec;
    let mut g = Mono::one(spec.nvars());
    g.0[0] = m;
    g.0[1] = n;
    h.delta_map(spec).apply_mono(spec, &g).sub(&TensorElt::basis(vec![g.clone(), g]))
}

/// Basis monomials `g1^m g2^n X^alpha` with `|m|, |n| <= window`, `|alpha| <= degbound`.
pub fn window_monomials(spec: &AlgebraSpec, degbound: i32, window: i32) -> Vec<Mono> {
    let xs = spec.monomials_up_to(degbound, false);
    let mut out = Vec::new();
    for m in -window..=window {
        for n in -window..=window {
            for x in &xs {
                let mut v = x.clone();
                v.0[0] = m;
                v.0[1] = n;
                out.push(v);
            }
        }
    }
    out.sort();
    out
}

/// A two-sided inverse of `x` supported on the window, if one exists.
pub fn find_inverse(spec: &AlgebraSpec, x: &Element, basis: &[Mono]) -> Option<Element> {
    let mut index: std::collections::BTreeMap<Mono, usize> = std::collections::BTreeMap::new();
    let mut rows: Vec<SparseRow> = Vec::new();
    for (col, m) in basis.iter().enumerate() {
        let p = spec.mul(x, &Element::mono(m.clone()));
        for (pm, c) in &p {
            let next = index.len();
            let r = *index.entry(pm.clone()).or_insert(next);
            if r == rows.len() {
                rows.push(SparseRow::new());
            }
            rows[r].insert(col, c.clone());
        }
    }
    let one = Mono::one(spec.nvars());
    let mut rhs = vec![RatF::zero(); rows.len()];
    match index.get(&one) {
        Some(&r) => rhs[r] = RatF::one(),
        None => return None,
    }
    let y = linalg::solve(&rows, &rhs, basis.len())?;
    let inv = Element::from_terms(basis.iter().cloned().zip(y));
    let ok = spec.mul(x, &inv) == spec.one() && spec.mul(&inv, x) == spec.one();
    ok.then_some(inv)
}

#[derive(Clone, Debug)]
pub struct UnitScan {
    pub candidates: Vec<Element>,
    pub units: Vec<(Element, Element)>,
}

impl UnitScan {
    /// Every unit found is a scalar times a monomial in the group-likes.
    pub fn only_group_likes(&self) -> bool {
        self.units.iter().all(|(u, _)| match u.as_term() {
            Some((m, _)) => m.0[2..].iter().all(|&e| e == 0),
            None => false,
        })
    }
}

/// Tests group-like monomials, `X`-monomials, and `1 + X`-monomials for inverses in the window.
pub fn units_scan(alg: &NamedAlgebra, degbound: i32, window: i32) -> UnitScan {
    use rayon::prelude::*;
    let spec = &alg.spec;
    let basis = window_monomials(spec, degbound, window);
    let mut candidates: Vec<Element> = Vec::new();
    for m in -window..=window {
        for n in -window..=window {
            let mut g = Mono::one(spec.nvars());
            g.0[0] = m;
            g.0[1] = n;
            candidates.push(Element::mono(g));
        }
    }
    for x in spec.monomials_up_to(degbound, false) {
        if !x.is_one() {
            candidates.push(Element::mono(x.clone()));
            candidates.push(spec.one().add(&Element::mono(x)));
        }
    }
    let units: Vec<(Element, Element)> = candidates.par_iter().filter_map(|c| find_inverse(spec, c, &basis).map(|inv| (c.clone(), inv))).collect();
    UnitScan { candidates, units }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::build_vcheck;

    #[test]
    fn solved_antipode_values() {
        let v = build_vcheck();
        let h = solved_hopf_data(&v);
        assert_eq!(v.spec.format(&h.antipode[2]), "-k1^(-2) k2^2 X1");
        assert_eq!(v.spec.format(&h.antipode[3]), "-k1 k2^(-2) X4");
    }

    #[test]
    fn one_plus_x1_has_no_inverse() {
        let v = build_vcheck();
        let basis = window_monomials(&v.spec, 2, 1);
        let x = v.parse("1 + X1").unwrap();
        assert!(find_inverse(&v.spec, &x, &basis).is_none());
        let g = v.parse("k1 k2^-1").unwrap();
        assert!(find_inverse(&v.spec, &g, &basis).is_some());
    }
}
