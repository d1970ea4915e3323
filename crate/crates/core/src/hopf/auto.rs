//! Algebra and Hopf automorphisms of the form
//! `theta(k_l) = lambda_l k_sigma(l)`, `theta(e1) = gamma1 k1^a k2^b e_sigma(1)`,
//! `theta(e2) = gamma2 k1^c k2^d e_sigma(2)`.

use std::fmt;

use rayon::prelude::*;

use super::tensor::{GenMap, Scalar, TensorElt, TensorSpace};
use super::{gen_map, relation_residuals, serre_residuals, Check, HopfData, GENERATORS};
use crate::algebras::NamedAlgebra;
use crate::coeff::RatF;
use crate::error::{Error, Result};
use crate::pbw::{AlgebraSpec, Mono};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutoCandidate {
    pub swap: bool,
    pub lambda: [Scalar; 2],
    pub gamma: [Scalar; 2],
    /// `[a, b, c, d]`.
    pub exps: [i32; 4],
}

impl AutoCandidate {
    /// Candidate with symbolic `lambda`, `gamma`.
    pub fn symbolic(swap: bool, exps: [i32; 4]) -> Self {
        AutoCandidate { swap, lambda: [Scalar::marker(0), Scalar::marker(1)], gamma: [Scalar::marker(2), Scalar::marker(3)], exps }
    }

    pub fn identity() -> Self {
        AutoCandidate { swap: false, lambda: [Scalar::one(), Scalar::one()], gamma: [Scalar::one(), Scalar::one()], exps: [0; 4] }
    }

    /// Parses `sigma=id a=1 b=2 c=1 d=-3`, optionally with `lambda1=`, `gamma2=` etc.
    /// Unset `lambda`/`gamma` stay symbolic.
    pub fn parse(src: &str) -> Result<Self> {
        let mut c = AutoCandidate::symbolic(false, [0; 4]);
        let mut seen_sigma = false;
        for tok in src.split_whitespace() {
            let (k, v) = tok.split_once('=').ok_or_else(|| Error::Usage(format!("expected key=value, got `{tok}`")))?;
            let int = || v.parse::<i32>().map_err(|_| Error::Usage(format!("`{k}` needs an integer, got `{v}`")));
            let val = || -> Result<Scalar> {
                let x = RatF::parse(v)?;
                if x.is_zero() {
                    return Err(Error::Usage(format!("`{k}` must be nonzero")));
                }
                Ok(Scalar::value(x))
            };
            match k {
                "sigma" => {
                    c.swap = match v {
                        "id" | "e" | "()" => false,
                        "swap" | "(12)" | "tau" => true,
                        _ => return Err(Error::Usage(format!("unknown permutation `{v}`"))),
                    };
                    seen_sigma = true;
                }
                "a" => c.exps[0] = int()?,
                "b" => c.exps[1] = int()?,
                "c" => c.exps[2] = int()?,
                "d" => c.exps[3] = int()?,
                "lambda1" => c.lambda[0] = val()?,
                "lambda2" => c.lambda[1] = val()?,
                "gamma1" => c.gamma[0] = val()?,
                "gamma2" => c.gamma[1] = val()?,
                _ => return Err(Error::Usage(format!("unknown candidate field `{k}`"))),
            }
        }
        if !seen_sigma {
            return Err(Error::Usage("candidate needs `sigma=`".into()));
        }
        Ok(c)
    }

    fn sigma(&self, l: usize) -> usize {
        if self.swap {
            1 - l
        } else {
            l
        }
    }

    fn shift(&self, l: usize) -> [i32; 2] {
        [self.exps[2 * l], self.exps[2 * l + 1]]
    }

    /// The map on `V` (target one factor).
    pub fn map(&self, spec: &AlgebraSpec) -> GenMap {
        let n = spec.nvars();
        let k = |v: [i32; 2]| {
            let mut m = Mono::one(n);
            m.0[0] = v[0];
            m.0[1] = v[1];
            m
        };
        let gimg = |l: usize| {
            let mut u = [0; 2];
            u[self.sigma(l)] = 1;
            TensorElt::basis(vec![k(u)]).scale(&self.lambda[l])
        };
        let ginv = |l: usize| {
            let mut u = [0; 2];
            u[self.sigma(l)] = -1;
            TensorElt::basis(vec![k(u)]).scale(&self.lambda[l].inv())
        };
        let eimg = |l: usize| {
            let e = spec.var(GENERATORS[2 + self.sigma(l)]);
            let g = crate::pbw::Element::mono(k(self.shift(l)));
            TensorElt::from_element(&spec.mul(&g, &e)).scale(&self.gamma[l])
        };
        gen_map(spec, [gimg(0), gimg(1), eimg(0), eimg(1)], [ginv(0), ginv(1)], false, 1)
    }

    /// The candidate inverse: `lambda'_m = lambda_{s(m)}^-1`, shifts transported back and negated.
    pub fn inverse(&self) -> AutoCandidate {
        let mut lambda = [Scalar::one(), Scalar::one()];
        let mut gamma = [Scalar::one(), Scalar::one()];
        let mut exps = [0; 4];
        for m in 0..2 {
            let l = self.sigma(m);
            lambda[m] = self.lambda[l].inv();
            let v = self.shift(l);
            // u_j = -v_{sigma(j)}
            let u = [-v[self.sigma(0)], -v[self.sigma(1)]];
            exps[2 * m] = u[0];
            exps[2 * m + 1] = u[1];
            let mut g = self.gamma[l].clone();
            for (j, &uj) in u.iter().enumerate() {
                g = g.mul(&self.lambda[j].pow(uj));
            }
            gamma[m] = g.inv();
        }
        AutoCandidate { swap: self.swap, lambda, gamma, exps }
    }

    /// `k`-exponent matrix: column `l` is the exponent vector of `theta(k_l)`.
    pub fn theta_matrix(&self) -> [[i64; 2]; 2] {
        let mut m = [[0; 2]; 2];
        for l in 0..2 {
            m[self.sigma(l)][l] = 1;
        }
        m
    }
}

impl fmt::Display for AutoCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.exps;
        write!(f, "sigma={} a={a} b={b} c={c} d={d}", if self.swap { "swap" } else { "id" })?;
        let named = [("lambda1", &self.lambda[0]), ("lambda2", &self.lambda[1]), ("gamma1", &self.gamma[0]), ("gamma2", &self.gamma[1])];
        for (n, s) in named {
            if !s.is_symbolic() {
                write!(f, " {n}={}", s.value)?;
            }
        }
        Ok(())
    }
}

/// Relation and Serre residuals of `theta`; the inverse candidate and both compositions.
#[derive(Clone, Debug)]
pub struct AutoReport {
    pub relations: Vec<Check>,
    pub inverse: Vec<Check>,
}

impl AutoReport {
    pub fn endomorphism(&self) -> bool {
        super::all_ok(&self.relations)
    }

    pub fn automorphism(&self) -> bool {
        self.endomorphism() && super::all_ok(&self.inverse)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.relations.iter().chain(&self.inverse).filter(|c| !c.ok())
    }
}

fn endo_checks(spec: &AlgebraSpec, map: &GenMap, prefix: &str) -> Vec<Check> {
    let mut out: Vec<Check> = relation_residuals(spec, map).into_iter().map(|(n, r)| Check { name: format!("{prefix}relation{n}"), residual: r }).collect();
    for (k, r) in serre_residuals(spec, map).into_iter().enumerate() {
        out.push(Check { name: format!("{prefix}serre{}", k + 1), residual: r });
    }
    out
}

/// `f(g(x)) - x` on the generators.
fn composition_checks(spec: &AlgebraSpec, f: &GenMap, g: &GenMap, name: &str) -> Vec<Check> {
    GENERATORS
        .iter()
        .zip(super::GENERATOR_NAMES)
        .map(|(&v, gn)| {
            let x = TensorElt::from_element(&spec.var(v));
            Check { name: format!("{name}.{gn}"), residual: f.apply(spec, &g.images[v]).sub(&x) }
        })
        .collect()
}

pub fn endomorphism_checks(alg: &NamedAlgebra, c: &AutoCandidate) -> Vec<Check> {
    endo_checks(&alg.spec, &c.map(&alg.spec), "")
}

pub fn is_automorphism(alg: &NamedAlgebra, c: &AutoCandidate) -> AutoReport {
    let spec = &alg.spec;
    let relations = endomorphism_checks(alg, c);
    let inv = c.inverse();
    let (f, g) = (c.map(spec), inv.map(spec));
    let mut inverse = endo_checks(spec, &g, "inverse.");
    inverse.extend(composition_checks(spec, &f, &g, "theta.inverse"));
    inverse.extend(composition_checks(spec, &g, &f, "inverse.theta"));
    AutoReport { relations, inverse }
}

pub fn window_tuples(window: i32) -> Vec<[i32; 4]> {
    let r = -window..=window;
    let mut out = Vec::new();
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// `{(a, b, c, d) : b = 2c, a + 2c + d = 0}` inside the window.
pub fn closed_form(window: i32) -> Vec<[i32; 4]> {
    window_tuples(window).into_iter().filter(|[a, b, c, d]| *b == 2 * c && a + 2 * c + d == 0).collect()
}

/// Exponent tuples whose symbolic candidate (given `sigma`) preserves all relations.
pub fn auto_scan_sigma(alg: &NamedAlgebra, window: i32, swap: bool) -> Vec<[i32; 4]> {
    let mut out: Vec<[i32; 4]> =
        window_tuples(window).into_par_iter().filter(|t| super::all_ok(&endomorphism_checks(alg, &AutoCandidate::symbolic(swap, *t)))).collect();
    out.sort();
    out
}

pub fn auto_scan(alg: &NamedAlgebra, window: i32) -> Vec<[i32; 4]> {
    auto_scan_sigma(alg, window, false)
}

/// `Delta(theta(x)) - (theta (x) theta)(Delta(x))` on the generators.
pub fn delta_compatibility(alg: &NamedAlgebra, h: &HopfData, c: &AutoCandidate) -> Vec<Check> {
    let spec = &alg.spec;
    let theta = c.map(spec);
    let delta = h.delta_map(spec);
    (0..4)
        .map(|k| {
            let lhs = delta.apply(spec, &theta.images[GENERATORS[k]]);
            let rhs = theta.apply_at(spec, &theta.apply_at(spec, &h.delta[k], 0), 1);
            Check { name: format!("delta-compat.{}", super::GENERATOR_NAMES[k]), residual: lhs.sub(&rhs) }
        })
        .collect()
}

/// `lambda^p = lambda^q` read off a residual `c (lambda^p - lambda^q) T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkerEquation {
    pub marker: usize,
    pub p: i32,
    pub q: i32,
}

impl MarkerEquation {
    /// The nonzero solution, when the equation pins it down over any field: `lambda^1 = 1`.
    pub fn unique_nonzero_root(&self) -> Option<RatF> {
        ((self.q - self.p).abs() == 1).then(RatF::one)
    }
}

/// Extracts the marker equation from a residual involving one marker only.
pub fn marker_equation(res: &TensorElt) -> Option<MarkerEquation> {
    if res.is_zero() {
        return None;
    }
    let mut eq: Option<MarkerEquation> = None;
    for (_, poly) in res.by_parts() {
        let terms: Vec<(&[i32; 4], &RatF)> = poly.iter().collect();
        let [(ma, ca), (mb, cb)] = terms.as_slice() else { return None };
        let k = (0..4).find(|&k| ma[k] != 0 || mb[k] != 0)?;
        let single = |m: &[i32; 4]| (0..4).all(|j| j == k || m[j] == 0);
        if !single(ma) || !single(mb) || &(-(*ca).clone()) != *cb {
            return None;
        }
        let this = MarkerEquation { marker: k, p: ma[k].min(mb[k]), q: ma[k].max(mb[k]) };
        match &eq {
            None => eq = Some(this),
            Some(e) if *e == this => {}
            Some(_) => return None,
        }
    }
    eq
}

#[derive(Clone, Debug)]
pub struct HopfAutoRow {
    pub exps: [i32; 4],
    /// Marker equations from the group-like generators and their forced values.
    pub lambda: [Option<RatF>; 2],
    pub equations: Vec<MarkerEquation>,
    /// Residuals on `e1, e2` after substituting the forced `lambda`.
    pub e_checks: Vec<Check>,
}

impl HopfAutoRow {
    pub fn survives(&self) -> bool {
        self.lambda.iter().all(Option::is_some) && super::all_ok(&self.e_checks)
    }
}

/// Delta-compatibility for one exponent tuple (`sigma = id`), with `lambda` solved and `gamma` symbolic.
pub fn hopf_auto_row(alg: &NamedAlgebra, h: &HopfData, exps: [i32; 4]) -> HopfAutoRow {
    let cand = AutoCandidate::symbolic(false, exps);
    let checks = delta_compatibility(alg, h, &cand);
    let mut lambda = [None, None];
    let mut equations = Vec::new();
    for l in 0..2 {
        if checks[l].ok() {
            continue;
        }
        if let Some(eq) = marker_equation(&checks[l].residual) {
            if eq.marker == l {
                lambda[l] = eq.unique_nonzero_root();
            }
            equations.push(eq);
        }
    }
    let mut e_checks = Vec::new();
    if let [Some(l1), Some(l2)] = &lambda {
        let mut fixed = cand.clone();
        fixed.lambda = [Scalar::value(l1.clone()), Scalar::value(l2.clone())];
        e_checks = delta_compatibility(alg, h, &fixed).split_off(2);
    }
    HopfAutoRow { exps, lambda, equations, e_checks }
}

pub fn hopf_auto_scan(alg: &NamedAlgebra, h: &HopfData, window: i32) -> Vec<HopfAutoRow> {
    auto_scan(alg, window).into_par_iter().map(|t| hopf_auto_row(alg, h, t)).collect()
}

/// `S(theta(x)) - theta(S(x))` on the generators.
pub fn antipode_naturality(alg: &NamedAlgebra, h: &HopfData, c: &AutoCandidate) -> Vec<Check> {
    let spec = &alg.spec;
    let theta = c.map(spec);
    let s = h.antipode_map(spec);
    (0..4)
        .map(|k| {
            let v = GENERATORS[k];
            let lhs = s.apply(spec, &theta.images[v]);
            let rhs = theta.apply(spec, &s.images[v]);
            Check { name: format!("naturality.{}", super::GENERATOR_NAMES[k]), residual: lhs.sub(&rhs) }
        })
        .collect()
}

/// Composition of two `sigma = id` candidates: exponents add, scalars multiply.
pub fn compose_maps(spec: &AlgebraSpec, f: &GenMap, g: &GenMap) -> Vec<TensorElt> {
    GENERATORS.iter().map(|&v| f.apply(spec, &g.images[v])).collect()
}

#[derive(Clone, Debug)]
pub struct PermLemma {
    pub enumerated: usize,
    pub survivors: Vec<[[i64; 2]; 2]>,
}

impl PermLemma {
    pub fn only_permutations(&self) -> bool {
        self.survivors.iter().all(is_permutation)
    }
}

pub fn is_permutation(m: &[[i64; 2]; 2]) -> bool {
    *m == [[1, 0], [0, 1]] || *m == [[0, 1], [1, 0]]
}

/// The inverse of an integer matrix, when it is integral.
pub fn integer_inverse(m: &[[i64; 2]; 2]) -> Option<[[i64; 2]; 2]> {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if det.abs() != 1 {
        return None;
    }
    Some([[m[1][1] * det, -m[0][1] * det], [-m[1][0] * det, m[0][0] * det]])
}

/// Matrices with entries in `[0, bound]` that are invertible with nonnegative integer inverse.
pub fn perm_matrix_check(bound: i64) -> PermLemma {
    let mut enumerated = 0;
    let mut survivors = Vec::new();
    for x in 0..=bound {
        for y in 0..=bound {
            for z in 0..=bound {
                for w in 0..=bound {
                    enumerated += 1;
                    let m = [[x, y], [z, w]];
                    if let Some(inv) = integer_inverse(&m) {
                        if inv.iter().flatten().all(|&e| e >= 0) {
                            survivors.push(m);
                        }
                    }
                }
            }
        }
    }
    PermLemma { enumerated, survivors }
}

/// Tensor-algebra product check `(a (x) b)(c (x) d) = ac (x) bd`.
pub fn exchange_residual(spec: &AlgebraSpec, a: &TensorElt, b: &TensorElt, c: &TensorElt, d: &TensorElt) -> TensorElt {
    let one = TensorSpace::new(spec, 1);
    let two = TensorSpace::new(spec, 2);
    let lhs = two.mul(&a.outer(b), &c.outer(d));
    let rhs = one.mul(a, c).outer(&one.mul(b, d));
    lhs.sub(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::build_vcheck;

    #[test]
    fn candidate_round_trip() {
        let c = AutoCandidate::parse("sigma=id a=1 b=2 c=1 d=-3").unwrap();
        assert_eq!(c.exps, [1, 2, 1, -3]);
        assert!(c.lambda[0].is_symbolic());
        assert_eq!(c.to_string(), "sigma=id a=1 b=2 c=1 d=-3");
        assert!(AutoCandidate::parse("a=1").is_err());
        assert!(AutoCandidate::parse("sigma=id gamma1=0").is_err());
    }

    #[test]
    fn identity_is_an_automorphism() {
        let v = build_vcheck();
        assert!(is_automorphism(&v, &AutoCandidate::identity()).automorphism());
    }

    #[test]
    fn perm_lemma_small() {
        let p = perm_matrix_check(2);
        assert_eq!(p.enumerated, 81);
        assert_eq!(p.survivors.len(), 2);
        assert!(integer_inverse(&[[1, 1], [0, 1]]).unwrap()[0][1] < 0);
    }
}
