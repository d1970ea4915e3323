//! Catalog of concrete algebras: `U`, its graded algebra, the localizations
//! `B4, B3, B2`, the quantum torus `Q4`, and the Hopf algebras `U>=0` and `V`.
//! Also the named elements `W`, `Z'`, the embedding `U -> Q4` and center scans.

use std::collections::BTreeMap;

use crate::coeff::RatF;
use crate::error::{Error, Result};
use crate::expr;
use crate::free::{self, FreeElt};
use crate::linalg::{self, SparseRow};
use crate::pbw::{AlgebraSpec, Element, ElementInterp, Mono};

fn q(src: &str) -> RatF {
    RatF::parse(src).expect("constant coefficient parses")
}

/// A spec together with the images of the designated generators.
#[derive(Clone, Debug)]
pub struct NamedAlgebra {
    pub name: String,
    pub spec: AlgebraSpec,
    /// Images of `e1, e2`.
    pub e1: Element,
    pub e2: Element,
    /// Group-like generators, if any (`w1, w2` or `k1, k2`).
    pub group: Vec<Element>,
}

impl NamedAlgebra {
    fn new(name: &str, spec: AlgebraSpec, e1: usize, e2: usize, group: &[usize]) -> Self {
        let g = group.iter().map(|&i| spec.var(i)).collect();
        NamedAlgebra { name: name.to_string(), e1: spec.var(e1), e2: spec.var(e2), group: g, spec }
    }

    /// Both Serre relators evaluated at the designated `e1, e2`.
    pub fn serre_residuals(&self) -> (Element, Element) {
        let (r1, r2) = free::serre_relators();
        (r1.map_to(&self.spec, &self.e1, &self.e2), r2.map_to(&self.spec, &self.e1, &self.e2))
    }

    pub fn parse(&self, src: &str) -> Result<Element> {
        let e = expr::parse(src)?;
        expr::eval(&e, &self.interp())
    }

    /// Interpreter knowing the variables, `e1`, `e2`, `e3 = e1 e2 - r^2 e2 e1` and (for `U`-like algebras) `W`, `Zp`.
    pub fn interp(&self) -> ElementInterp<'_> {
        let s = &self.spec;
        let e3 = s.mul(&self.e1, &self.e2).sub(&s.mul(&self.e2, &self.e1).scale(&q("r^2")));
        let mut it = ElementInterp::new(s).with("e1", self.e1.clone()).with("e2", self.e2.clone()).with("e3", e3);
        if let (Some(_), Some(_)) = (self.spec.var_index("X1"), self.spec.var_index("X4")) {
            if let Ok(w) = element_w_in(&self.spec) {
                let z = element_zprime_in(&self.spec, &w);
                it = it.with("W", w).with("Zp", z);
            }
        }
        it
    }
}

const X_NAMES: [&str; 4] = ["X1", "X2", "X3", "X4"];
const X_WEIGHTS: [(i32, i32); 4] = [(1, 0), (1, 1), (1, 2), (0, 1)];

/// The six rewrite relations among `X1..X4`, 1-based `(j, i, q, correction)`.
fn x_relations() -> Vec<(usize, usize, &'static str, &'static str)> {
    vec![(2, 1, "s^-2", "0"), (3, 1, "r^-2 s^-2", "0"), (3, 2, "r^-1 s^-1", "0"), (4, 1, "r^-2", "-r^-2 X2"), (4, 2, "s^-2", "X3"), (4, 3, "r^-1 s^-1", "0")]
}

/// The `U` spec with given variable offset and extra leading variables already in the builder.
fn u_spec(name: &str, invertible: [bool; 4]) -> AlgebraSpec {
    let mut b = AlgebraSpec::builder(&X_NAMES).name(name).invertible(&invertible).weights(&X_WEIGHTS);
    let scratch = AlgebraSpec::builder(&X_NAMES)
        .commute(2, 1, RatF::one())
        .commute(3, 1, RatF::one())
        .commute(3, 2, RatF::one())
        .commute(4, 1, RatF::one())
        .commute(4, 2, RatF::one())
        .commute(4, 3, RatF::one())
        .build()
        .expect("scratch spec");
    for (j, i, qs, cs) in x_relations() {
        let c = crate::pbw::parse_element(&scratch, cs).expect("correction parses");
        b = b.relation(j, i, q(qs), c);
    }
    b.build().expect("U spec is well formed")
}

pub fn build_u() -> NamedAlgebra {
    NamedAlgebra::new("U", u_spec("U", [false; 4]), 0, 3, &[])
}

pub fn build_gr_u() -> NamedAlgebra {
    let spec = u_spec("grU", [false; 4]).graded();
    NamedAlgebra::new("grU", spec, 0, 3, &[])
}

/// `B4, B3, B2`: `U` with `X1`, then `X1, X2`, then `X1, X2, X3` inverted.
pub fn build_localization(k: usize) -> NamedAlgebra {
    assert!((2..=4).contains(&k), "localizations B4, B3, B2");
    let mut inv = [false; 4];
    for f in inv.iter_mut().take(5 - k) {
        *f = true;
    }
    let name = format!("B{k}");
    NamedAlgebra::new(&name, u_spec(&name, inv), 0, 3, &[])
}

/// The quantum torus in `T1..T4`; `e1, e2` are left as `T1, T4`.
pub fn build_q4() -> NamedAlgebra {
    let spec = AlgebraSpec::builder(&["T1", "T2", "T3", "T4"])
        .name("Q4")
        .invertible(&[true; 4])
        .weights(&X_WEIGHTS)
        .commute(2, 1, q("s^-2"))
        .commute(3, 1, q("r^-2 s^-2"))
        .commute(4, 1, q("r^-2"))
        .commute(3, 2, q("r^-1 s^-1"))
        .commute(4, 2, q("s^-2"))
        .commute(4, 3, q("r^-1 s^-1"))
        .build()
        .expect("torus spec");
    NamedAlgebra::new("Q4", spec, 0, 3, &[])
}

pub fn build_chain() -> [NamedAlgebra; 4] {
    [build_localization(4), build_localization(3), build_localization(2), build_q4()]
}

/// Skew-commutation character: `e_t g = chi[g][t] g e_t` for group-like `g`.
type Chars = [[&'static str; 2]; 2];

const UGEQ0_CHARS: Chars = [["r^-2 s^2", "s^-2"], ["r^2", "r^-1 s"]];
const VCHECK_CHARS: Chars = [["s^2", "r^-1 s^-1"], ["r s", "r^-1"]];

fn group_extension(name: &str, gnames: [&str; 2], chars: &Chars) -> AlgebraSpec {
    let mut vars: Vec<&str> = gnames.to_vec();
    vars.extend(X_NAMES);
    let mut weights = vec![(0, 0), (0, 0)];
    weights.extend(X_WEIGHTS);
    let mut b = AlgebraSpec::builder(&vars).name(name).invertible(&[true, true, false, false, false, false]).weights(&weights).commute(2, 1, RatF::one());
    for (g, row) in chars.iter().enumerate() {
        let (c1, c2) = (q(row[0]), q(row[1]));
        for (x, &(p, t)) in X_WEIGHTS.iter().enumerate() {
            let chi = &c1.pow(i64::from(p)).expect("nonzero") * &c2.pow(i64::from(t)).expect("nonzero");
            b = b.commute(x + 3, g + 1, chi);
        }
    }
    let scratch = u_spec("scratch", [false; 4]);
    for (j, i, qs, cs) in x_relations() {
        let c = crate::pbw::parse_element(&scratch, cs).expect("correction parses");
        let shifted = c.map_monomials(|m| {
            let mut v = vec![0, 0];
            v.extend_from_slice(&m.0);
            Mono(v)
        });
        b = b.relation(j + 2, i + 2, q(qs), shifted);
    }
    b.build().expect("group extension spec")
}

/// `U>=0` with invertible `w1, w2`.
pub fn build_ugeq0() -> NamedAlgebra {
    NamedAlgebra::new("Ugeq0", group_extension("Ugeq0", ["w1", "w2"], &UGEQ0_CHARS), 2, 5, &[0, 1])
}

/// The augmented algebra with invertible `k1, k2`.
pub fn build_vcheck() -> NamedAlgebra {
    NamedAlgebra::new("Vcheck", group_extension("Vcheck", ["k1", "k2"], &VCHECK_CHARS), 2, 5, &[0, 1])
}

/// Looks up an algebra by its CLI name.
pub fn by_name(name: &str) -> Result<NamedAlgebra> {
    Ok(match name.to_ascii_lowercase().as_str() {
        "u" => build_u(),
        "gru" => build_gr_u(),
        "b4" => build_localization(4),
        "b3" => build_localization(3),
        "b2" => build_localization(2),
        "q4" => build_q4(),
        "ugeq0" => build_ugeq0(),
        "vcheck" => build_vcheck(),
        other => return Err(Error::Usage(format!("unknown algebra `{other}`"))),
    })
}

fn element_w_in(spec: &AlgebraSpec) -> Result<Element> {
    let x = |n: &str| spec.var_index(n).map(|i| spec.var(i)).ok_or_else(|| Error::UnknownSymbol(n.into()));
    let x24 = spec.mul(&x("X2")?, &x("X4")?);
    Ok(x("X3")?.add(&x24.scale(&q("s^-2 - r^-1 s^-1"))))
}

fn element_zprime_in(spec: &AlgebraSpec, w: &Element) -> Element {
    let x1 = spec.var(spec.var_index("X1").expect("X1"));
    spec.mul(&x1, w).sub(&spec.mul(w, &x1).scale(&q("s^4")))
}

/// `W = X3 + (s^-2 - r^-1 s^-1) X2 X4` in `U`.
pub fn element_w(u: &NamedAlgebra) -> Element {
    element_w_in(&u.spec).expect("U has X1..X4")
}

/// `Z' = X1 W - s^4 W X1` in `U`.
pub fn element_zprime(u: &NamedAlgebra) -> Element {
    element_zprime_in(&u.spec, &element_w(u))
}

/// An identity `lhs = rhs` written in the shared expression grammar.
#[derive(Clone, Copy, Debug)]
pub struct Identity {
    pub id: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

impl Identity {
    pub fn text(&self) -> String {
        format!("{} = {}", self.lhs, self.rhs)
    }

    /// `lhs - rhs` normalized in the given algebra.
    pub fn residual(&self, alg: &NamedAlgebra) -> Result<Element> {
        Ok(alg.parse(self.lhs)?.sub(&alg.parse(self.rhs)?))
    }

    /// `lhs - rhs` expanded in the free algebra.
    pub fn free_residual(&self) -> Result<FreeElt> {
        Ok(free::expand(self.lhs)?.sub(&free::expand(self.rhs)?))
    }
}

pub fn lemma12_identities() -> Vec<Identity> {
    vec![
        Identity { id: "lemma12.1", lhs: "X1 X2", rhs: "s^2 X2 X1" },
        Identity { id: "lemma12.2", lhs: "X1 X3", rhs: "r^2 s^2 X3 X1" },
        Identity { id: "lemma12.3", lhs: "X2 X3", rhs: "r s X3 X2" },
        Identity { id: "lemma12.4", lhs: "X1 X4", rhs: "r^2 X4 X1 + X2" },
        Identity { id: "lemma12.5", lhs: "X2 X4", rhs: "s^2 X4 X2 - s^2 X3" },
        Identity { id: "lemma12.6", lhs: "X4 X3", rhs: "r^-1 s^-1 X3 X4" },
    ]
}

pub fn w_identities() -> Vec<Identity> {
    vec![
        Identity { id: "w-zprime.1", lhs: "X1 W", rhs: "r^2 s^2 W X1 + (1 - r^-1 s) X2^2" },
        Identity { id: "w-zprime.2", lhs: "X2 W", rhs: "s^2 W X2" },
        Identity { id: "w-zprime.3", lhs: "X3 W", rhs: "W X3" },
        Identity { id: "w-zprime.4", lhs: "X4 W", rhs: "s^-2 W X4" },
        Identity { id: "w-zprime.5", lhs: "X1 Zp", rhs: "r^2 s^2 Zp X1" },
        Identity { id: "w-zprime.6", lhs: "X2 Zp", rhs: "Zp X2" },
        Identity { id: "w-zprime.7", lhs: "X3 Zp", rhs: "r^-2 s^-2 Zp X3" },
        Identity { id: "w-zprime.8", lhs: "X4 Zp", rhs: "r^-2 s^-2 Zp X4" },
    ]
}

/// Residuals of the eight `W`/`Z'` identities in `U`.
pub fn verify_w_identities(u: &NamedAlgebra) -> Vec<(Identity, Element)> {
    w_identities()
        .into_iter()
        .map(|id| {
            let r = id.residual(u).expect("identity parses");
            (id, r)
        })
        .collect()
}

/// An algebra map given on the variables of the source.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub images: Vec<Element>,
}

impl Morphism {
    /// Image of a source element whose exponents are non-negative.
    pub fn apply(&self, target: &AlgebraSpec, x: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in x {
            let mut acc = target.one();
            for (k, &e) in m.0.iter().enumerate() {
                assert!(e >= 0, "morphism applied to a Laurent monomial");
                for _ in 0..e {
                    acc = target.mul(&acc, &self.images[k]);
                }
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// Residual of each defining relation `x_j x_i - q x_i x_j - c` under the map.
    pub fn relation_residuals(&self, source: &AlgebraSpec, target: &AlgebraSpec) -> Vec<((usize, usize), Element)> {
        let mut out = Vec::new();
        for j in 0..source.nvars() {
            for i in 0..j {
                out.push(((j + 1, i + 1), self.relation_residual(source, target, j, i)));
            }
        }
        out
    }

    pub fn relation_residual(&self, source: &AlgebraSpec, target: &AlgebraSpec, j: usize, i: usize) -> Element {
        let (a, b) = (&self.images[j], &self.images[i]);
        let lhs = target.mul(a, b);
        let rhs = target.mul(b, a).scale(source.q(j, i));
        lhs.sub(&rhs).sub(&self.apply(target, source.c(j, i)))
    }

    /// Serre relators at the images of the designated generators `e1 = x_{e1}`, `e2 = x_{e2}`.
    pub fn serre_residuals(&self, target: &AlgebraSpec, e1: usize, e2: usize) -> (Element, Element) {
        let (r1, r2) = free::serre_relators();
        (r1.map_to(target, &self.images[e1], &self.images[e2]), r2.map_to(target, &self.images[e1], &self.images[e2]))
    }
}

/// `lambda = r / ((r^2 - s^2)(r - s))`.
pub fn lambda() -> RatF {
    q("r / ((r^2 - s^2) (r - s))")
}

/// The two inner coefficients of the image of `X4`: `s^4 - r^2 s^2` and `r^-1 s - 1`.
pub fn embedding_coefficients() -> (RatF, RatF) {
    (q("s^4 - r^2 s^2"), q("r^-1 s - 1"))
}

fn y_element(q4: &AlgebraSpec, c1: &RatF, c2: &RatF) -> Element {
    let t = |i: usize| q4.var(i);
    let inv = |i: usize| q4.inverse(&t(i)).expect("torus variable");
    t(3).add(&q4.mul(&inv(1), &t(2)).scale(c1)).add(&q4.mul(&t(1), &inv(0)).scale(c2))
}

/// `U -> Q4` with the given scalar and inner coefficients.
pub fn embedding_with(q4: &AlgebraSpec, lambda: &RatF, c1: &RatF, c2: &RatF) -> Morphism {
    let y = y_element(q4, c1, c2).scale(lambda);
    Morphism { images: vec![q4.var(0), q4.var(1), q4.var(2), y] }
}

pub fn embedding_i(q4: &AlgebraSpec) -> Morphism {
    let (c1, c2) = embedding_coefficients();
    embedding_with(q4, &lambda(), &c1, &c2)
}

/// Outcome of solving for the scalar of the embedding.
#[derive(Clone, Debug)]
pub struct LambdaSolution {
    pub value: Option<RatF>,
    /// Dimension of the homogeneous solution space (0 means unique).
    pub kernel_dim: usize,
}

/// Solves `residual(lambda) = 0` where the residual is affine in `lambda`.
pub fn solve_affine<F: Fn(&RatF) -> Element>(residual: F) -> LambdaSolution {
    let b = residual(&RatF::zero());
    let a = residual(&RatF::one()).sub(&b);
    let monos: Vec<&Mono> = {
        let mut v: Vec<&Mono> = a.monomials().chain(b.monomials()).collect();
        v.sort();
        v.dedup();
        v
    };
    let rows: Vec<SparseRow> = monos
        .iter()
        .map(|m| {
            let c = a.coeff(m);
            let mut row = SparseRow::new();
            if !c.is_zero() {
                row.insert(0, c);
            }
            row
        })
        .collect();
    let rhs: Vec<RatF> = monos.iter().map(|m| -b.coeff(m)).collect();
    let value = linalg::solve(&rows, &rhs, 1).map(|x| x[0].clone());
    let kernel_dim = linalg::nullspace(&rows, 1).len();
    LambdaSolution { value, kernel_dim }
}

/// Solves for the scalar from the image of `X4 X1 = r^-2 X1 X4 - r^-2 X2`, with inner coefficient `c2`.
pub fn solve_lambda_with(q4: &NamedAlgebra, u: &NamedAlgebra, c2: &RatF) -> LambdaSolution {
    let (c1, _) = embedding_coefficients();
    solve_affine(|l| embedding_with(&q4.spec, l, &c1, c2).relation_residual(&u.spec, &q4.spec, 3, 0))
}

pub fn solve_lambda(q4: &NamedAlgebra, u: &NamedAlgebra) -> LambdaSolution {
    solve_lambda_with(q4, u, &embedding_coefficients().1)
}

/// Residuals of the `T4` reconstruction: `(T2^-1 Z'' T1^-1 - T4, I(W) - W'', I(Z') - Z'')`.
pub fn t4_consistency(q4: &NamedAlgebra, u: &NamedAlgebra) -> (Element, Element, Element) {
    let s = &q4.spec;
    let i = embedding_i(s);
    let t = |k: usize| s.var(k);
    let w2 = t(2).add(&s.mul(&t(1), &i.images[3]).scale(&q("s^-2 - r^-1 s^-1")));
    let z2 = s.mul(&t(0), &w2).sub(&s.mul(&w2, &t(0)).scale(&q("s^4")));
    let t2inv = s.inverse(&t(1)).expect("invertible");
    let t1inv = s.inverse(&t(0)).expect("invertible");
    let rebuilt = s.mul(&s.mul(&t2inv, &z2), &t1inv);
    let w_img = i.apply(s, &element_w(u));
    let z_img = i.apply(s, &element_zprime(u));
    (rebuilt.sub(&t(3)), w_img.sub(&w2), z_img.sub(&z2))
}

/// `T4 = X2^-1 Z' X1^-1` computed inside `B3`.
pub fn t4_in_b3(b3: &NamedAlgebra) -> Element {
    let s = &b3.spec;
    let z = element_zprime_in(s, &element_w_in(s).expect("X vars"));
    let x1inv = s.inverse(&s.var(0)).expect("X1 invertible in B3");
    let x2inv = s.inverse(&s.var(1)).expect("X2 invertible in B3");
    s.mul(&s.mul(&x2inv, &z), &x1inv)
}

/// The scalar `q` with `a = q b`, if one exists.
pub fn proportionality(a: &Element, b: &Element) -> Option<RatF> {
    let (m, cb) = b.iter().next()?;
    let k = a.coeff(m) / cb.clone();
    (b.scale(&k) == *a).then_some(k)
}

/// For `i = 1, 2, 3`: the scalar `q_i` with `X_i T4 = q_i T4 X_i` in `B3`.
pub fn derive_t4_relations(b3: &NamedAlgebra) -> Vec<Option<RatF>> {
    let s = &b3.spec;
    let t4 = t4_in_b3(b3);
    (0..3).map(|i| proportionality(&s.mul(&s.var(i), &t4), &s.mul(&t4, &s.var(i)))).collect()
}

/// Basis of central elements spanned by `monomials`, tested against `gens`.
pub fn center_scan(spec: &AlgebraSpec, gens: &[Element], monomials: &[Mono]) -> Vec<Element> {
    let mut row_index: BTreeMap<Mono, usize> = BTreeMap::new();
    let mut rows: Vec<SparseRow> = Vec::new();
    for (col, m) in monomials.iter().enumerate() {
        let me = Element::mono(m.clone());
        for (g_idx, g) in gens.iter().enumerate() {
            let c = spec.commutator(&me, g);
            for (mm, cc) in &c {
                let key = {
                    let mut v = mm.0.clone();
                    v.push(g_idx as i32);
                    Mono(v)
                };
                let next = row_index.len();
                let r = *row_index.entry(key).or_insert(next);
                if r == rows.len() {
                    rows.push(SparseRow::new());
                }
                rows[r].insert(col, cc.clone());
            }
        }
    }
    linalg::nullspace(&rows, monomials.len()).into_iter().map(|v| Element::from_terms(monomials.iter().cloned().zip(v))).collect()
}

/// Generators used for centrality: `{X1, X4}` for `U`, every variable otherwise.
pub fn center_generators(alg: &NamedAlgebra) -> Vec<Element> {
    if alg.name == "U" {
        vec![alg.e1.clone(), alg.e2.clone()]
    } else {
        (0..alg.spec.nvars()).map(|i| alg.spec.var(i)).collect()
    }
}

/// Exponent vector `(alpha, beta)` of a monomial scalar `r^alpha s^beta`.
pub fn monomial_exponents(k: &RatF) -> Option<(i64, i64)> {
    let (n, d) = (k.num(), k.den());
    if !(n.is_monomial() && d.is_monomial()) {
        return None;
    }
    let (ne, nc) = n.leading()?;
    let (de, dc) = d.leading()?;
    if nc != dc {
        return None;
    }
    Some((i64::from(ne.0) - i64::from(de.0), i64::from(ne.1) - i64::from(de.1)))
}

/// Integer linear forms in `(a, b, c, d)` whose vanishing makes `X^(a,b,c,d)` commute
/// with `X1` and with `X4` in the graded algebra: `[r-exp, s-exp]` for each generator.
pub fn graded_center_system(gr: &NamedAlgebra) -> Vec<[i64; 4]> {
    let s = &gr.spec;
    let mut forms = Vec::new();
    for g in [0usize, 3] {
        // X_g m = (prod over k of q-power) m X_g
        let mut r_form = [0i64; 4];
        let mut s_form = [0i64; 4];
        for k in 0..4 {
            if k == g {
                continue;
            }
            // scalar for X_g X_k = sc X_k X_g
            let sc = if k > g { s.q(k, g).inv().expect("nonzero") } else { s.q(g, k).clone() };
            let (a, b) = monomial_exponents(&sc).expect("graded scalars are monomials");
            r_form[k] = a;
            s_form[k] = b;
        }
        forms.push(r_form);
        forms.push(s_form);
    }
    forms
}

/// The printed equations `2b+2c=0, 2c+2d=0, 2a+c=0, 2b+c=0`.
pub fn printed_graded_system() -> Vec<[i64; 4]> {
    vec![[0, 2, 2, 0], [0, 0, 2, 2], [2, 0, 1, 0], [0, 2, 1, 0]]
}

pub fn eval_forms(forms: &[[i64; 4]], x: [i64; 4]) -> Vec<i64> {
    forms.iter().map(|f| f.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

/// Rank over `Q` of a set of integer forms.
pub fn forms_rank(forms: &[[i64; 4]]) -> usize {
    let rows: Vec<SparseRow> = forms.iter().map(|f| f.iter().enumerate().filter(|(_, &v)| v != 0).map(|(k, &v)| (k, RatF::from_int(v))).collect()).collect();
    linalg::rank(&rows, 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_and_homogeneity() {
        let u = build_u();
        let w = element_w(&u);
        assert_eq!(u.spec.is_homogeneous(&w), Some((1, 2)));
        assert_eq!(u.spec.is_homogeneous(&element_zprime(&u)), Some((2, 2)));
        assert_eq!(u.spec.weight_of(&Mono(vec![1, 0, 0, 2])), (1, 2));
    }

    #[test]
    fn group_characters_agree_under_substitution() {
        // w1 = k1^2 k2^-2, w2 = k1^-1 k2^2
        let ug = build_ugeq0();
        let v = build_vcheck();
        for x in 2..6 {
            let via = |a: i64, b: i64| &v.spec.q(x, 0).pow(a).unwrap() * &v.spec.q(x, 1).pow(b).unwrap();
            assert_eq!(ug.spec.q(x, 0), &via(2, -2));
            assert_eq!(ug.spec.q(x, 1), &via(-1, 2));
        }
    }
}
