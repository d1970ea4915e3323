//! Verification suites. Each suite runs exact computations and turns them into
//! report records; `all` runs every suite in order.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebras::{self, NamedAlgebra};
use crate::coeff::RatF;
use crate::derivations as der;
use crate::error::{Error, Result};
use crate::free::{self, FreeElt};
use crate::hopf::{self, auto};
use crate::linalg::{self, SparseRow};
use crate::pbw::doc::parse_spec;
use crate::pbw::ore::ore_data;
use crate::pbw::rewrite::validate_spec;
use crate::pbw::{AlgebraSpec, Element, Mono};
use crate::report::{Config, Recorder, Residual, Status, VerificationReport};

pub const SUITES: [&str; 17] = [
    "lemma12",
    "ore-data",
    "pbw-confluence",
    "gr-center",
    "center",
    "w-zprime",
    "torus",
    "embedding",
    "t4",
    "derivations",
    "hh1",
    "hopf-axioms",
    "units",
    "auto-scan",
    "hopf-auto",
    "perm-lemma",
    "gk-growth",
];

pub const U_JSON: &str = include_str!("../specs/u.json");
pub const U_MISPRINT_JSON: &str = include_str!("../specs/u_misprint.json");
pub const U_NONCONFLUENT_JSON: &str = include_str!("../specs/u_nonconfluent.json");

pub mod anchor {
    pub const LEMMA12: &str = "The following identities hold";
    pub const SERRE: &str = "subject to the following relations";
    pub const PBW: &str = "forms a PBW-basis of the algebra";
    pub const ORE: &str = "define some algebra automorphisms";
    pub const SKEW: &str = "an iterated skew polynomial ring";
    pub const CENTER: &str = "is reduced to the base field";
    pub const CHAIN: &str = "The center of $B^{i}$";
    pub const W: &str = "Let us set a new variable";
    pub const TVARS: &str = "define the following new variables";
    pub const TORUS: &str = "describes the relations between the variables";
    pub const EMBED: &str = "extended to an algebra monomorphism";
    pub const DERS: &str = "define two derivations";
    pub const ALPHA: &str = "Thus we shall have the following";
    pub const ALPHA_PRINTED: &str = "We have $\\alpha_{3}=\\alpha_{1}+\\alpha_{4}$";
    pub const DELTA_T3: &str = "Let us set a derivation";
    pub const INNER: &str = "where $ad_{t}$ is an inner derivation";
    pub const HH1: &str = "two-dimensional vector space spanned by";
    pub const UNIQUE: &str = "can be uniquely written as follows";
    pub const HOPF_U: &str = "define a Hopf algebra structure";
    pub const HOPF_V: &str = "introduce a Hopf algebra structure";
    pub const VBASIS: &str = "has a $\\C-$basis";
    pub const VDEF: &str = "is a $\\C$-algebra generated by";
    pub const UNITS: &str = "all the invertible elements of";
    pub const AUTO: &str = "such that $b=2c, a+2c+d=0$";
    pub const SWAP: &str = "can not be exchanged by";
    pub const HOPF_AUTO: &str = "determine all the Hopf algebra automorphisms";
    pub const LAMBDA_SQ: &str = "which imply the following";
    pub const PERM: &str = "an element of the symmetric group";
    pub const MTHETA: &str = "we have $M_{\\theta} \\in GL(2,\\Z_{\\geq 0})$";
    pub const DET: &str = "i.e., we have $xw-yz=\\pm 1$";
    pub const GK: &str = "has a $GK-$dimension";
}

fn q(src: &str) -> RatF {
    RatF::parse(src).expect("constant parses")
}

fn none() -> Residual<'static> {
    Residual::None
}

/// Runs one suite (or `all`). Timing is recorded only when asked for.
pub fn run_suite(name: &str, config: &Config, timing: bool) -> Result<VerificationReport> {
    let names: Vec<&str> = match name {
        "all" => SUITES.to_vec(),
        n if SUITES.contains(&n) => vec![n],
        other => return Err(Error::Usage(format!("unknown suite `{other}` (try one of: all, {})", SUITES.join(", ")))),
    };
    let mut report = VerificationReport::new(name, config.clone());
    let mut times = BTreeMap::new();
    for n in names {
        let start = Instant::now();
        let mut rec = Recorder::new(config)?;
        run_one(n, &mut rec)?;
        times.insert(n.to_string(), start.elapsed().as_secs_f64());
        report.checks.extend(rec.records);
    }
    if timing {
        report.timing = Some(times);
    }
    debug_assert!(report.ids_unique());
    Ok(report)
}

fn run_one(name: &str, rec: &mut Recorder<'_>) -> Result<()> {
    match name {
        "lemma12" => lemma12(rec),
        "ore-data" => ore(rec),
        "pbw-confluence" => confluence(rec),
        "gr-center" => gr_center(rec),
        "center" => center(rec),
        "w-zprime" => w_zprime(rec),
        "torus" => torus(rec),
        "embedding" => embedding(rec),
        "t4" => t4(rec),
        "derivations" => derivations(rec),
        "hh1" => hh1(rec),
        "hopf-axioms" => hopf_axioms(rec),
        "units" => units(rec),
        "auto-scan" => auto_scan(rec),
        "hopf-auto" => hopf_auto(rec),
        "perm-lemma" => perm_lemma(rec),
        "gk-growth" => gk_growth(rec),
        _ => unreachable!("suite names are checked by run_suite"),
    }
}

fn identity_records(rec: &mut Recorder<'_>, u: &NamedAlgebra, ids: &[algebras::Identity], anchor: &str, degbound: usize) -> Result<()> {
    for id in ids {
        let r = id.residual(u)?;
        let fr = id.free_residual()?;
        let (member, cert) = free::ideal_member(&fr, degbound)?;
        let terms = cert.as_ref().map_or(0, |c| c.terms.len());
        let ok = r.is_zero() && member;
        let note = format!("{}; ideal membership at degbound {degbound}: {} ({terms} certificate terms)", id.text(), if member { "yes" } else { "no" });
        rec.check(id.id, anchor, ok, Residual::Element(&u.spec, &r), note);
    }
    Ok(())
}

fn lemma12(rec: &mut Recorder<'_>) -> Result<()> {
    let u = algebras::build_u();
    let degbound = rec.config.degbound.max(0) as usize;
    identity_records(rec, &u, &algebras::lemma12_identities(), anchor::LEMMA12, degbound)
}

fn w_zprime(rec: &mut Recorder<'_>) -> Result<()> {
    let u = algebras::build_u();
    let w = algebras::element_w(&u);
    let z = algebras::element_zprime(&u);
    let ok = u.spec.is_homogeneous(&w) == Some((1, 2)) && u.spec.is_homogeneous(&z) == Some((2, 2));
    rec.check("w-zprime.weights", anchor::W, ok, none(), format!("W = {}, Z' = {}", u.spec.format(&w), u.spec.format(&z)));
    let degbound = rec.config.degbound.max(0) as usize + 1;
    identity_records(rec, &u, &algebras::w_identities(), anchor::W, degbound)
}

/// Printed Ore block entries: `(j, i, tau coefficient, delta)` 1-based.
const PRINTED_ORE: [(usize, usize, &str, &str); 6] =
    [(2, 1, "s^-2", "0"), (3, 1, "r^-2 s^-2", "0"), (3, 2, "r^-1 s^-1", "0"), (4, 1, "r^-2", "-r^-1 X2"), (4, 2, "s^-2", "X3"), (4, 3, "r^-1 s^-1", "0")];

/// `X1 X4 - r^2 X4 X1 - X2`, the defining identity of `X2` with `e1 = X1`, `e2 = X4`.
fn x2_definition_residual(spec: &AlgebraSpec) -> Element {
    let (x1, x4) = (spec.var(0), spec.var(3));
    spec.mul(&x1, &x4).sub(&spec.mul(&x4, &x1).scale(&q("r^2"))).sub(&spec.var(1))
}

fn ore(rec: &mut Recorder<'_>) -> Result<()> {
    let u = algebras::build_u();
    let spec = &u.spec;
    let misprint = parse_spec(U_MISPRINT_JSON)?;
    let x2_printed = x2_definition_residual(&misprint);
    let x2_derived = x2_definition_residual(spec);
    for j in 1..4 {
        let od = ore_data(spec, j);
        rec.check(
            &format!("ore.consistent.X{}", j + 1),
            anchor::SKEW,
            od.consistent(),
            none(),
            format!("tau_{0} preserves and delta_{0} is a tau_{0}-derivation on the relations among X1..X{j}", j + 1),
        );
        for i in 0..j {
            let (_, _, tq, dp) = PRINTED_ORE.iter().find(|(a, b, _, _)| *a == j + 1 && *b == i + 1).expect("printed entry");
            let tau_printed = spec.var(i).scale(&q(tq));
            let tr = od.tau[i].sub(&tau_printed);
            let mut note = format!("tau_{}(X{}) = {}", j + 1, i + 1, spec.format(&od.tau[i]));
            if (j, i) == (3, 1) {
                note.push_str("; printed with a capital S for s");
            }
            rec.check(&format!("ore.tau{}.X{}", j + 1, i + 1), anchor::ORE, tr.is_zero(), Residual::Element(spec, &tr), note);
            let delta_printed = u.parse(dp)?;
            let dr = od.delta[i].sub(&delta_printed);
            let id = format!("ore.delta{}.X{}", j + 1, i + 1);
            let derived = spec.format(&od.delta[i]);
            if dr.is_zero() {
                let mut note = format!("delta_{}(X{}) = {derived}", j + 1, i + 1);
                if (j, i) == (1, 0) {
                    note.push_str("; printed with argument X2");
                }
                rec.check(&id, anchor::ORE, true, none(), note);
            } else {
                rec.discrepancy(
                    &id,
                    anchor::ORE,
                    !x2_printed.is_zero(),
                    x2_derived.is_zero() && od.consistent(),
                    Residual::Element(&misprint, &x2_printed),
                    format!(
                        "printed {dp}; derived {derived}; with the printed value X1X4 - r^2 X4X1 = X2 fails (residual {}); the misprinted presentation is still confluent",
                        misprint.format(&x2_printed)
                    ),
                );
            }
        }
    }
    Ok(())
}

fn overlap_name(spec: &AlgebraSpec, word: &[(usize, i32)]) -> String {
    word.iter().map(|&(v, e)| if e == 1 { spec.vars()[v].clone() } else { format!("{}^-1", spec.vars()[v]) }).collect::<Vec<_>>().join("")
}

fn confluence(rec: &mut Recorder<'_>) -> Result<()> {
    let u = algebras::build_u();
    let (r1, r2) = u.serre_residuals();
    rec.check("serre.R1", anchor::SERRE, r1.is_zero(), Residual::Element(&u.spec, &r1), "e1 -> X1, e2 -> X4");
    rec.check("serre.R2", anchor::SERRE, r2.is_zero(), Residual::Element(&u.spec, &r2), "e1 -> X1, e2 -> X4");
    let report = validate_spec(&u.spec);
    for c in &report.checks {
        let diff = c.left.sub(&c.right);
        rec.check(
            &format!("confluence.U.{}", overlap_name(&u.spec, &c.word)),
            anchor::PBW,
            c.resolves() && c.engine_agrees(),
            Residual::Element(&u.spec, &diff),
            format!("both resolutions give {}", u.spec.format(&c.left)),
        );
    }
    rec.check("confluence.U.triples", anchor::PBW, report.triples().len() == 4, none(), format!("{} overlap triples", report.triples().len()));
    for alg in algebras::build_chain().into_iter().chain([algebras::build_ugeq0(), algebras::build_vcheck()]) {
        let r = validate_spec(&alg.spec);
        let anchor = if alg.name.starts_with('V') { anchor::VBASIS } else { anchor::PBW };
        rec.check(&format!("confluence.{}", alg.name), anchor, r.confluent(), none(), format!("{} overlaps including inverse letters", r.checks.len()));
    }
    let round = parse_spec(U_JSON).map(|s| s == u.spec).unwrap_or(false);
    rec.check("ingest.u-json", anchor::PBW, round, none(), "shipped spec document equals the built-in U");
    let misprint_ok = parse_spec(U_MISPRINT_JSON).is_ok();
    rec.check(
        "ingest.misprint-confluent",
        anchor::PBW,
        misprint_ok,
        none(),
        "delta_4(X1) = -r^-1 X2 gives an isomorphic, confluent presentation (rescale X2, X3)",
    );
    let msg = match parse_spec(U_NONCONFLUENT_JSON) {
        Err(e) => e.to_string(),
        Ok(_) => String::new(),
    };
    rec.check("ingest.nonconfluent-rejected", anchor::PBW, msg.contains("not confluent on overlap"), none(), msg);
    Ok(())
}

fn gr_center(rec: &mut Recorder<'_>) -> Result<()> {
    let gr = algebras::build_gr_u();
    let forms = algebras::graded_center_system(&gr);
    let printed = algebras::printed_graded_system();
    let matches = forms.len() == printed.len() && forms.iter().all(|f| printed.iter().any(|p| p == f || p.iter().zip(f).all(|(a, b)| *a == -b)));
    rec.check("gr-center.system", anchor::CENTER, matches, none(), format!("derived forms {forms:?} agree with the printed ones up to sign"));
    let rank = algebras::forms_rank(&forms);
    rec.check("gr-center.unique-solution", anchor::CENTER, rank == 4, none(), format!("rank {rank}: only (a,b,c,d) = (0,0,0,0)"));
    let monos = gr.spec.monomials_up_to(rec.config.degbound, false);
    let c = algebras::center_scan(&gr.spec, &algebras::center_generators(&gr), &monos);
    rec.check(
        "gr-center.scan",
        anchor::CENTER,
        is_constants(&gr.spec, &c),
        none(),
        format!("center of grU up to degree {} is spanned by 1", rec.config.degbound),
    );
    Ok(())
}

fn is_constants(spec: &AlgebraSpec, basis: &[Element]) -> bool {
    basis.len() == 1 && basis[0].as_scalar().is_some() && !basis[0].is_zero() && spec.nvars() > 0
}

fn center(rec: &mut Recorder<'_>) -> Result<()> {
    let u = algebras::build_u();
    let monos = u.spec.monomials_up_to(rec.config.degbound, false);
    let c = algebras::center_scan(&u.spec, &algebras::center_generators(&u), &monos);
    rec.check(
        "center.U",
        anchor::CENTER,
        is_constants(&u.spec, &c),
        none(),
        format!("{} monomials of degree <= {}; commutators with X1, X4", monos.len(), rec.config.degbound),
    );
    let window = rec.config.window_or(3);
    for alg in algebras::build_chain() {
        let w = if alg.name == "Q4" { window } else { window.min(2) };
        let monos = alg.spec.monomials_up_to(w, true);
        let c = algebras::center_scan(&alg.spec, &algebras::center_generators(&alg), &monos);
        rec.check(
            &format!("center.{}", alg.name),
            anchor::CHAIN,
            is_constants(&alg.spec, &c),
            none(),
            format!("{} monomials, exponent window {w}", monos.len()),
        );
    }
    Ok(())
}

fn torus(rec: &mut Recorder<'_>) -> Result<()> {
    let b3 = algebras::build_localization(3);
    let s = &b3.spec;
    let t4 = algebras::t4_in_b3(&b3);
    let t = |i: usize| if i == 3 { t4.clone() } else { s.var(i) };
    let derived = algebras::derive_t4_relations(&b3);
    // T_i T_j = k T_j T_i for i < j
    let expected = [((0, 1), "s^2"), ((0, 2), "r^2 s^2"), ((0, 3), "r^2"), ((1, 2), "r s"), ((1, 3), "s^2"), ((2, 3), "r s")];
    for ((i, j), k) in expected {
        let lhs = s.mul(&t(i), &t(j));
        let rhs = s.mul(&t(j), &t(i));
        let found = algebras::proportionality(&lhs, &rhs);
        let id = format!("torus.T{}T{}", i + 1, j + 1);
        let want = q(k);
        if (i, j) == (0, 3) {
            let printed = s.mul(&t4, &s.var(1)).scale(&want);
            let printed_res = lhs.sub(&printed);
            rec.discrepancy(
                &id,
                anchor::TORUS,
                !printed_res.is_zero(),
                found.as_ref() == Some(&want) && derived[0].as_ref() == Some(&want),
                Residual::Element(s, &printed_res),
                "printed T1T4 = r^2 T4T2; derived T1T4 = r^2 T4T1 in B3",
            );
        } else {
            let ok = found.as_ref() == Some(&want);
            let note = format!("T{}T{} = ({}) T{}T{}", i + 1, j + 1, found.map(|f| f.to_string()).unwrap_or("?".into()), j + 1, i + 1);
            rec.check(&id, anchor::TORUS, ok, none(), note);
        }
    }
    let q4 = algebras::build_q4();
    let mut ok = true;
    for ((i, j), k) in expected {
        ok &= q4.spec.q(j, i).inv().ok() == Some(q(k));
    }
    rec.check("torus.q4-relations", anchor::TORUS, ok, none(), "the quantum torus uses the derived commutation scalars");
    Ok(())
}

fn embedding(rec: &mut Recorder<'_>) -> Result<()> {
    let u = algebras::build_u();
    let q4 = algebras::build_q4();
    let i = algebras::embedding_i(&q4.spec);
    for ((j, k), r) in i.relation_residuals(&u.spec, &q4.spec) {
        rec.check(&format!("embedding.relation({j},{k})"), anchor::EMBED, r.is_zero(), Residual::Element(&q4.spec, &r), "");
    }
    let (r1, r2) = i.serre_residuals(&q4.spec, 0, 3);
    rec.check("embedding.serre1", anchor::EMBED, r1.is_zero(), Residual::Element(&q4.spec, &r1), "");
    rec.check("embedding.serre2", anchor::EMBED, r2.is_zero(), Residual::Element(&q4.spec, &r2), "");
    let sol = algebras::solve_lambda(&q4, &u);
    let ok = sol.value.as_ref() == Some(&algebras::lambda()) && sol.kernel_dim == 0;
    let shown = sol.value.map(|v| v.to_string()).unwrap_or("none".into());
    rec.check("embedding.lambda", anchor::EMBED, ok, none(), format!("solved from X4X1 = r^-2 X1X4 - r^-2 X2: lambda = {shown}, unique"));
    let (c1, c2) = algebras::embedding_coefficients();
    let alt = algebras::solve_affine(|l| algebras::embedding_with(&q4.spec, l, &c1, &c2).relation_residual(&u.spec, &q4.spec, 3, 1));
    let ok = alt.value.as_ref() == Some(&algebras::lambda());
    rec.check("embedding.lambda-crosscheck", anchor::EMBED, ok, none(), "the relation X4X2 = s^-2 X2X4 + X3 gives the same value");
    // injectivity on low degrees: images of PBW monomials stay independent
    let deg = rec.config.degbound.min(4);
    let monos = u.spec.monomials_up_to(deg, false);
    let images: Vec<Element> = monos.iter().map(|m| i.apply(&q4.spec, &Element::mono(m.clone()))).collect();
    let rank = element_rank(&images);
    rec.check("embedding.injective", anchor::EMBED, rank == monos.len(), none(), format!("rank {rank} on {} monomials of degree <= {deg}", monos.len()));
    Ok(())
}

fn element_rank(v: &[Element]) -> usize {
    let mut index: BTreeMap<Mono, usize> = BTreeMap::new();
    let mut cols: Vec<SparseRow> = Vec::new();
    for e in v {
        let mut row = SparseRow::new();
        for (m, c) in e {
            let next = index.len();
            let k = *index.entry(m.clone()).or_insert(next);
            row.insert(k, c.clone());
        }
        cols.push(row);
    }
    linalg::rank(&cols, index.len())
}

fn t4(rec: &mut Recorder<'_>) -> Result<()> {
    let u = algebras::build_u();
    let q4 = algebras::build_q4();
    let (a, b, c) = algebras::t4_consistency(&q4, &u);
    rec.check("t4.rebuild", anchor::TVARS, a.is_zero(), Residual::Element(&q4.spec, &a), "T2^-1 Z'' T1^-1 = T4");
    rec.check("t4.W", anchor::W, b.is_zero(), Residual::Element(&q4.spec, &b), "I(W) = W''");
    rec.check("t4.Zp", anchor::W, c.is_zero(), Residual::Element(&q4.spec, &c), "I(Z') = Z''");
    let b3 = algebras::build_localization(3);
    let t = algebras::t4_in_b3(&b3);
    let homogeneous = b3.spec.is_homogeneous(&t) == Some((0, 1));
    rec.check("t4.in-B3", anchor::TVARS, homogeneous, none(), format!("T4 = {}", b3.spec.format(&t)));
    Ok(())
}

fn span_equal(a: &[Vec<RatF>], b: &[Vec<RatF>], n: usize) -> bool {
    let rows = |v: &[Vec<RatF>]| -> Vec<SparseRow> {
        v.iter().map(|x| x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()).collect()
    };
    let (ra, rb) = (rows(a), rows(b));
    let mut both = ra.clone();
    both.extend(rb.iter().cloned());
    let r = linalg::rank(&ra, n);
    r == linalg::rank(&rb, n) && r == linalg::rank(&both, n)
}

fn ints(v: &[i64]) -> Vec<RatF> {
    v.iter().map(|&x| RatF::from_int(x)).collect()
}

fn derivation_string(spec: &AlgebraSpec, d: &der::Derivation) -> String {
    d.images.iter().enumerate().map(|(i, e)| format!("{} -> {}", spec.vars()[i], spec.format(e))).collect::<Vec<_>>().join(", ")
}

fn derivations(rec: &mut Recorder<'_>) -> Result<()> {
    let u = algebras::build_u();
    let s = &u.spec;
    let d1 = der::d1(s);
    rec.check("derivations.D1", anchor::DERS, der::is_valid(s, &d1), none(), derivation_string(s, &d1));
    let d2 = der::d2(s);
    let printed = der::d2_printed(s);
    let res = der::is_derivation(s, &printed);
    let bad: Vec<&((usize, usize), Element)> = res.iter().filter(|(_, r)| !r.is_zero()).collect();
    let residual = bad.first().map(|(_, r)| r.clone()).unwrap_or_else(Element::zero);
    let rel = bad.first().map(|(k, _)| format!("{k:?}")).unwrap_or_default();
    rec.discrepancy(
        "derivations.D2-printed",
        anchor::DERS,
        !bad.is_empty(),
        der::is_valid(s, &d2),
        Residual::Element(s, &residual),
        format!("printed D2(X3) = X3 leaves a Leibniz residual on relation {rel} (X4X2 = s^-2 X2X4 + X3); corrected D2(X3) = 2 X3"),
    );
    rec.check("derivations.D2", anchor::DERS, der::is_valid(s, &d2), none(), derivation_string(s, &d2));
    let space = der::scaling_constraints(s);
    let expected = vec![ints(&[1, 1, 1, 0]), ints(&[0, 1, 2, 1])];
    let ok = space.len() == 2 && span_equal(&space, &expected, 4);
    rec.check("derivations.alpha-space", anchor::ALPHA, ok, none(), "alpha2 = alpha1 + alpha4, alpha3 = alpha1 + 2 alpha4; span{(1,1,1,0),(0,1,2,1)}");
    let printed_alpha = ints(&[0, 1, 1, 1]);
    let mut with = space.clone();
    with.push(printed_alpha);
    let printed_fails = !span_equal(&space, &with, 4);
    let proof_holds = space.iter().all(|v| v[2] == &v[0] + &(&v[3] * &RatF::from_int(2)));
    rec.discrepancy(
        "derivations.alpha-statement",
        anchor::ALPHA_PRINTED,
        printed_fails,
        proof_holds,
        none(),
        "the statement alpha3 = alpha1 + alpha4 admits (0,1,1,1), which is not a derivation; alpha3 = alpha1 + 2 alpha4 holds on the whole space",
    );
    // delta = mu1 D1 + mu2 D2 acts on T3 = X3 with factor mu1 * D1(X3)/X3 + mu2 * D2(X3)/X3
    let f1 = algebras::proportionality(&d1.images[2], &s.var(2));
    let f2 = algebras::proportionality(&d2.images[2], &s.var(2));
    let corrected = f1 == Some(RatF::one()) && f2 == Some(RatF::from_int(2));
    let printed_f2 = algebras::proportionality(&printed.images[2], &s.var(2));
    rec.discrepancy(
        "derivations.delta-T3",
        anchor::DELTA_T3,
        printed_f2 != f2,
        corrected,
        none(),
        "printed (mu1 + mu2) T3; with the corrected D2 the value is (mu1 + 2 mu2) T3",
    );
    let ad = der::inner(s, &s.var(1));
    let want = Element::term(Mono(vec![1, 1, 0, 0]), q("s^-2 - 1"));
    rec.check("derivations.inner-X2-on-X1", anchor::INNER, ad.images[0] == want, none(), format!("ad_X2(X1) = {}", s.format(&ad.images[0])));
    let t = u.parse("X2 X4")?;
    let d = der::inner(s, &t).add(&d1.scale(&RatF::from_int(3)));
    let ok = match der::decompose(&u, &d, 3) {
        Some(dec) => dec.mu1 == RatF::from_int(3) && dec.mu2.is_zero() && dec.t.sub(&t).as_scalar().is_some(),
        None => false,
    };
    rec.check("derivations.decompose.example", anchor::UNIQUE, ok, none(), "ad_{X2X4} + 3 D1 -> t = X2X4, mu = (3, 0)");
    for (name, dd, m1, m2) in [("D1", &d1, 1, 0), ("D2", &d2, 0, 1)] {
        let ok = der::decompose(&u, dd, 2).map(|x| x.mu1 == RatF::from_int(m1) && x.mu2 == RatF::from_int(m2) && x.t.as_scalar().is_some()).unwrap_or(false);
        rec.check(&format!("derivations.decompose.{name}"), anchor::UNIQUE, ok, none(), format!("mu = ({m1}, {m2}), t constant"));
    }
    let samples = 20;
    let mut rng = ChaCha8Rng::seed_from_u64(rec.config.seed);
    let monos: Vec<Mono> = s.monomials_up_to(4, false).into_iter().filter(|m| !m.is_one()).collect();
    let mut failures = 0;
    for _ in 0..samples {
        let (t, m1, m2) = random_inner(&mut rng, &monos);
        let d = der::inner(s, &t).add(&d1.scale(&m1)).add(&d2.scale(&m2));
        let ok = der::decompose(&u, &d, 5).map(|x| x.mu1 == m1 && x.mu2 == m2 && x.t.sub(&t).as_scalar().is_some()).unwrap_or(false);
        failures += usize::from(!ok);
    }
    rec.check(
        "derivations.decompose.round-trip",
        anchor::UNIQUE,
        failures == 0,
        none(),
        format!("{samples} random ad_t + mu1 D1 + mu2 D2 with deg t <= 4, seed {}", rec.config.seed),
    );
    Ok(())
}

/// A random `t` of degree `<= 4` with up to three terms and integer `mu1, mu2`.
pub fn random_inner<R: Rng>(rng: &mut R, monos: &[Mono]) -> (Element, RatF, RatF) {
    let mut t = Element::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let m = monos[rng.gen_range(0..monos.len())].clone();
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-4..=4);
        }
        t.add_term(m, RatF::from_int(c));
    }
    (t, RatF::from_int(rng.gen_range(-3..=3)), RatF::from_int(rng.gen_range(-3..=3)))
}

fn hh1(rec: &mut Recorder<'_>) -> Result<()> {
    let u = algebras::build_u();
    let window = rec.config.window_or(2);
    let degbound = rec.config.degbound;
    let rows = der::hh1_scan(&u.spec, window, degbound);
    let mut total = 0;
    for r in &rows {
        let expected = if r.weight == (0, 0) { 2 } else { 0 };
        total += r.outer();
        rec.check(
            &format!("hh1.weight({},{})", r.weight.0, r.weight.1),
            anchor::HH1,
            r.outer() == expected,
            none(),
            format!("der {} inner {} outer {}", r.der, r.inner, r.outer()),
        );
    }
    rec.check(
        "hh1.total",
        anchor::HH1,
        total == 2,
        none(),
        format!("outer dimension {total} over |w| <= {window}, degbound {degbound}; verified within window"),
    );
    let (coords, basis) = der::derivation_space(&u.spec, (0, 0), degbound);
    let as_vec = |d: &der::Derivation| -> Vec<RatF> { coords.iter().map(|(i, m)| d.images[*i].coeff(m)).collect() };
    let ok = span_equal(&basis, &[as_vec(&der::d1(&u.spec)), as_vec(&der::d2(&u.spec))], coords.len());
    rec.check("hh1.weight0-basis", anchor::HH1, ok, none(), "weight-0 derivations are spanned by D1 and the corrected D2");
    let up = degbound + 2;
    let rows = der::hh1_scan(&u.spec, window, up);
    let total_up: usize = rows.iter().map(der::WeightRow::outer).sum();
    let at0 = rows.iter().find(|r| r.weight == (0, 0)).map_or(0, der::WeightRow::outer);
    rec.check("hh1.stable", anchor::HH1, total_up == 2 && at0 == 2, none(), format!("degbound {up}: outer dimension {total_up}, {at0} at (0,0)"));
    Ok(())
}

fn hopf_axioms(rec: &mut Recorder<'_>) -> Result<()> {
    for alg in [algebras::build_ugeq0(), algebras::build_vcheck()] {
        let s = &alg.spec;
        let tag = alg.name.to_ascii_lowercase();
        let anchor = if tag == "ugeq0" { anchor::HOPF_U } else { anchor::HOPF_V };
        let h = hopf::hopf_data(&alg);
        let checks = hopf::verify_bialgebra(&alg, &h);
        for (group, prefix) in [("delta-relations", "delta."), ("coassociativity", "coassoc."), ("counit", "counit."), ("eps-relations", "eps.")] {
            let part: Vec<&hopf::Check> = checks.iter().filter(|c| c.name.starts_with(prefix)).collect();
            let first_bad = part.iter().find(|c| !c.ok());
            let residual = first_bad.map_or(Residual::None, |c| Residual::Tensor(s, &c.residual));
            rec.check(&format!("hopf.{tag}.{group}"), anchor, first_bad.is_none(), residual, format!("{} checks", part.len()));
        }
        let printed = hopf::verify_antipode(&alg, &h);
        let solved = hopf::solved_hopf_data(&alg);
        let solved_checks = hopf::verify_antipode(&alg, &solved);
        let conv_bad = printed.iter().find(|c| c.name.starts_with("convolution") && !c.ok());
        let conv: Vec<&hopf::Check> = solved_checks.iter().filter(|c| c.name.starts_with("convolution")).collect();
        let anti: Vec<&hopf::Check> = solved_checks.iter().filter(|c| c.name.starts_with("anti")).collect();
        let names = hopf::generator_names(&alg);
        let fmt_s = |d: &hopf::HopfData| format!("S(e1) = {}, S(e2) = {}", s.format(&d.antipode[2]), s.format(&d.antipode[3]));
        rec.discrepancy(
            &format!("hopf.{tag}.antipode-printed"),
            anchor,
            conv_bad.is_some(),
            conv.iter().all(|c| c.ok()) && anti.iter().all(|c| c.ok()),
            conv_bad.map_or(Residual::None, |c| Residual::Tensor(s, &c.residual)),
            format!(
                "printed {}; convolution fails on {}; axiom gives {}",
                fmt_s(&h),
                conv_bad.map_or("-".into(), |c| c.name.replace("e1", &names[2])),
                fmt_s(&solved)
            ),
        );
        rec.check(&format!("hopf.{tag}.antipode-solved.convolution"), anchor, conv.iter().all(|c| c.ok()), none(), fmt_s(&solved));
        rec.check(
            &format!("hopf.{tag}.antipode-solved.anti-homomorphism"),
            anchor,
            anti.iter().all(|c| c.ok()),
            none(),
            format!("{} relation checks", anti.len()),
        );
        let mut gl_ok = true;
        for m in -3..=3 {
            for n in -3..=3 {
                gl_ok &= hopf::group_like_residual(&alg, &h, m, n).is_zero();
            }
        }
        rec.check(
            &format!("hopf.{tag}.group-likes"),
            anchor,
            gl_ok,
            none(),
            format!("Delta({0}^m {1}^n) = {0}^m {1}^n (x) {0}^m {1}^n for |m|, |n| <= 3", names[0], names[1]),
        );
    }
    let u = algebras::build_ugeq0();
    let lhs = u.parse("w1 X1")?;
    let rhs = u.parse("r^2 s^-2 X1 w1")?;
    rec.check("hopf.ugeq0.w1e1", anchor::HOPF_U, lhs == rhs, none(), "w1 e1 = r^2 s^-2 e1 w1");
    let v = algebras::build_vcheck();
    for (l, r, what) in [("k1 X2", "r s^-1 X2 k1", "k1 X2 = r s^-1 X2 k1"), ("k1 X3", "r^2 X3 k1", "k1 X3 = r^2 X3 k1")] {
        let ok = v.parse(l)? == v.parse(r)?;
        rec.check(&format!("hopf.vcheck.{}", what.split(" =").next().unwrap_or(what).replace(' ', "")), anchor::VDEF, ok, none(), what);
    }
    let m = algebras::Morphism { images: vec![v.parse("k1^2 k2^-2")?, v.parse("k1^-1 k2^2")?, v.spec.var(2), v.spec.var(3), v.spec.var(4), v.spec.var(5)] };
    let ok = m.relation_residuals(&u.spec, &v.spec).iter().all(|(_, r)| r.is_zero());
    rec.check("hopf.ugeq0-into-vcheck", anchor::VDEF, ok, none(), "w1 -> k1^2 k2^-2, w2 -> k1^-1 k2^2 preserves every relation");
    rec.push(
        "hopf.vcheck.header",
        anchor::VDEF,
        Status::Discrepancy,
        none(),
        "the definition header names type A2 (sl3); the relations and computations here are those of type B2",
    );
    Ok(())
}

fn units(rec: &mut Recorder<'_>) -> Result<()> {
    let v = algebras::build_vcheck();
    let window = rec.config.window_or(3);
    let degree = 3;
    let scan = hopf::units_scan(&v, degree, window);
    let expected = ((2 * window + 1) * (2 * window + 1)) as usize;
    rec.check(
        "units.only-group-likes",
        anchor::UNITS,
        scan.only_group_likes() && scan.units.len() == expected,
        none(),
        format!(
            "{} of {} candidates invertible, all scalar multiples of k1^m k2^n; inverses sought in degree <= {degree}, window {window}",
            scan.units.len(),
            scan.candidates.len()
        ),
    );
    let basis = hopf::window_monomials(&v.spec, degree, window);
    let x = v.parse("1 + X1")?;
    rec.check("units.1+X1", anchor::UNITS, hopf::find_inverse(&v.spec, &x, &basis).is_none(), none(), "no inverse within the window");
    let g = v.parse("5 k1^2 k2^-3")?;
    let inv = hopf::find_inverse(&v.spec, &g, &basis);
    let ok = inv.as_ref().map(|i| v.spec.mul(&g, i) == v.spec.one()).unwrap_or(false);
    rec.check("units.scalar-group-like", anchor::UNITS, ok, none(), format!("(5 k1^2 k2^-3)^-1 = {}", inv.map(|i| v.spec.format(&i)).unwrap_or_default()));
    Ok(())
}

fn tuple(t: &[i32; 4]) -> String {
    format!("({},{},{},{})", t[0], t[1], t[2], t[3])
}

fn auto_scan(rec: &mut Recorder<'_>) -> Result<()> {
    let v = algebras::build_vcheck();
    let window = rec.config.window_or(3);
    let sols = auto::auto_scan(&v, window);
    let closed = auto::closed_form(window);
    rec.check(
        "auto.closed-form",
        anchor::AUTO,
        sols == closed,
        none(),
        format!("{} tuples in [-{window},{window}]^4, equal to {{b = 2c, a + 2c + d = 0}}", sols.len()),
    );
    let member = |t: [i32; 4]| sols.contains(&t);
    rec.check("auto.contains(1,2,1,-3)", anchor::AUTO, window < 3 || member([1, 2, 1, -3]), none(), "");
    let bad = auto::AutoCandidate::symbolic(false, [1, 1, 1, -3]);
    let fails: Vec<String> = auto::endomorphism_checks(&v, &bad).into_iter().filter(|c| !c.ok()).map(|c| c.name).collect();
    rec.check("auto.excludes(1,1,1,-3)", anchor::AUTO, !fails.is_empty(), none(), format!("fails on {}", fails.join(", ")));
    let set: std::collections::BTreeSet<[i32; 4]> = sols.iter().copied().collect();
    let in_window = |t: &[i32; 4]| t.iter().all(|x| x.abs() <= window);
    let mut closed_ok = true;
    for a in &sols {
        closed_ok &= set.contains(&a.map(|x| -x));
        for b in &sols {
            let sum = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
            if in_window(&sum) {
                closed_ok &= set.contains(&sum);
            }
        }
    }
    rec.check("auto.group-law", anchor::AUTO, closed_ok, none(), "closed under addition and negation inside the window");
    let mut inverse_ok = true;
    for t in &sols {
        inverse_ok &= auto::is_automorphism(&v, &auto::AutoCandidate::symbolic(false, *t)).automorphism();
    }
    rec.check("auto.inverses", anchor::AUTO, inverse_ok, none(), "each solution has an inverse candidate composing to the identity");
    let swaps = auto::auto_scan_sigma(&v, window, true);
    let example = auto::is_automorphism(&v, &auto::AutoCandidate::symbolic(true, [0; 4]));
    let first = example.failures().next().map(|c| c.name.clone()).unwrap_or_default();
    rec.check(
        "auto.transpositions",
        anchor::SWAP,
        swaps.is_empty(),
        none(),
        format!("no candidate exchanging k1, k2 and e1, e2 survives; the plain swap fails first on {first}"),
    );
    rec.check("auto.identity", anchor::AUTO, auto::is_automorphism(&v, &auto::AutoCandidate::identity()).automorphism(), none(), "");
    Ok(())
}

fn hopf_auto(rec: &mut Recorder<'_>) -> Result<()> {
    let v = algebras::build_vcheck();
    let h = hopf::solved_hopf_data(&v);
    let window = rec.config.window_or(3);
    let rows = auto::hopf_auto_scan(&v, &h, window);
    let survivors: Vec<&auto::HopfAutoRow> = rows.iter().filter(|r| r.survives()).collect();
    let ok = survivors.len() == 1 && survivors[0].exps == [0; 4] && survivors[0].lambda.iter().all(|l| l.as_ref().is_some_and(RatF::is_one));
    let list: Vec<String> = survivors.iter().map(|r| tuple(&r.exps)).collect();
    rec.check("hopf-auto.survivors", anchor::HOPF_AUTO, ok, none(), format!("survivors {} with lambda1 = lambda2 = 1, gamma1, gamma2 free", list.join(" ")));
    let zero = rows.iter().find(|r| r.exps == [0; 4]);
    let eq_ok = zero.is_some_and(|r| r.equations.len() == 2 && r.equations.iter().all(|e| e.p == 1 && e.q == 2));
    rec.check("hopf-auto.lambda-equation", anchor::LAMBDA_SQ, eq_ok, none(), "Delta-compatibility on k_l leaves (lambda_l - lambda_l^2) k_l (x) k_l");
    let shifted: Vec<&auto::HopfAutoRow> = rows.iter().filter(|r| r.exps[0] != 0 || r.exps[1] != 0).collect();
    let nonzero = shifted.iter().all(|r| r.e_checks.first().is_some_and(|c| !c.ok()));
    rec.check(
        "hopf-auto.shifted-fail",
        anchor::HOPF_AUTO,
        nonzero,
        none(),
        format!("{} solutions with (a,b) != (0,0) leave a nonzero residual on e1", shifted.len()),
    );
    let c = auto::AutoCandidate::parse("sigma=id lambda1=1 lambda2=1 gamma1=5 gamma2=7")?;
    let ok = auto::is_automorphism(&v, &c).automorphism()
        && hopf::all_ok(&auto::delta_compatibility(&v, &h, &c))
        && hopf::all_ok(&auto::antipode_naturality(&v, &h, &c));
    rec.check("hopf-auto.gamma-5-7", anchor::HOPF_AUTO, ok, none(), c.to_string());
    let sym = auto::AutoCandidate { lambda: [hopf::Scalar::one(), hopf::Scalar::one()], ..auto::AutoCandidate::symbolic(false, [0; 4]) };
    let ok = hopf::all_ok(&auto::antipode_naturality(&v, &h, &sym));
    rec.check("hopf-auto.naturality", anchor::HOPF_AUTO, ok, none(), "S theta = theta S with symbolic gamma");
    Ok(())
}

fn perm_lemma(rec: &mut Recorder<'_>) -> Result<()> {
    let p = auto::perm_matrix_check(5);
    let ok = p.enumerated == 1296 && p.survivors.len() == 2 && p.only_permutations();
    rec.check(
        "perm.enumeration",
        anchor::PERM,
        ok,
        none(),
        format!("{} matrices, {} with nonnegative integer inverse: {:?}", p.enumerated, p.survivors.len(), p.survivors),
    );
    let mats = [auto::AutoCandidate::identity().theta_matrix(), auto::AutoCandidate::symbolic(true, [0; 4]).theta_matrix()];
    rec.check("perm.theta-matrix", anchor::MTHETA, mats.iter().all(auto::is_permutation), none(), format!("{mats:?}"));
    let m = [[1, 1], [0, 1]];
    let inv = auto::integer_inverse(&m);
    let excluded = inv.is_some_and(|i| i.iter().flatten().any(|&x| x < 0));
    rec.check("perm.unipotent-excluded", anchor::DET, excluded, none(), format!("{m:?} has inverse {inv:?}"));
    Ok(())
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, t| acc * (n + 1 - t) / t)
}

fn gk_growth(rec: &mut Recorder<'_>) -> Result<()> {
    let u = algebras::build_u();
    for n in 0..=8 {
        let count = u.spec.monomials_up_to(n, false).len() as u64;
        let want = binomial(n as u64 + 4, 4);
        rec.check(&format!("gk.count.{n}"), anchor::GK, count == want, none(), format!("{count} normal monomials of degree <= {n}"));
    }
    let c = |n: i32| u.spec.monomials_up_to(n, false).len() as f64;
    let est = (c(16) / c(8)).ln() / 2f64.ln();
    rec.check("gk.exponent", anchor::GK, (3.0..4.0).contains(&est), none(), format!("log2(d(16)/d(8)) = {est:.3}, increasing to 4"));
    Ok(())
}

/// Which computation produced a check id.
pub fn explain(id: &str) -> Option<String> {
    let table: [(&str, &str, &str); 24] = [
        ("lemma12", anchor::LEMMA12, "Each identity is normalized in the PBW model of U and, independently, expanded in the free algebra on e1, e2 and decided for membership in the ideal of the two Serre relators."),
        ("ore.delta4.X1", anchor::ORE, "delta_4(X1) is read off the rewrite rule X4X1 = r^-2 X1X4 - r^-2 X2. The printed -r^-1 X2 is substituted into a copy of the presentation, which then fails overlap resolution."),
        ("ore", anchor::ORE, "tau_j and delta_j are read off the rewrite rules and checked to be an endomorphism and a tau-derivation on the earlier relations."),
        ("serre", anchor::SERRE, "The relators are evaluated at e1 -> X1, e2 -> X4 and normalized."),
        ("confluence", anchor::PBW, "Each overlap x_k x_j x_i is rewritten starting from the left and from the right pair, and both normal forms are compared with the engine's product."),
        ("ingest", anchor::PBW, "Spec documents are parsed, validated and checked for confluence."),
        ("gr-center", anchor::CENTER, "For X^(a,b,c,d) in grU the commutation scalars with X1 and X4 are monomials in r, s; their exponents give four linear forms whose only common zero is 0."),
        ("center", anchor::CHAIN, "A linear solve for combinations of monomials whose commutators with every generator vanish."),
        ("w-zprime", anchor::W, "Each identity is normalized in U and decided in the free algebra with W, Z' expanded in e1, e2."),
        ("torus.T1T4", anchor::TORUS, "T4 = X2^-1 Z' X1^-1 is computed in B3. X1 T4 is compared with T4 X1 (scalar r^2) and with T4 X2 (the printed right side), which is not proportional."),
        ("torus", anchor::TORUS, "Products T_i T_j and T_j T_i are normalized in B3 and tested for proportionality."),
        ("embedding", anchor::EMBED, "The images T1, T2, T3 and lambda (T4 + c1 T2^-1 T3 + c2 T2 T1^-1) are substituted into every relation in Q4; lambda is solved from the affine residual."),
        ("t4", anchor::TVARS, "T4 is rebuilt from the images of W and Z' in Q4, and computed directly in B3."),
        ("derivations.D2-printed", anchor::DERS, "The Leibniz rule is applied to each defining relation of U; the printed D2 leaves X3 on X4X2 = s^-2 X2X4 + X3."),
        ("derivations.alpha", anchor::ALPHA, "Diagonal derivations X_i -> alpha_i X_i are imposed on the six relations; the solution space is computed exactly."),
        ("derivations.delta-T3", anchor::DELTA_T3, "The factor of mu1 D1 + mu2 D2 on X3 = T3 is read off both derivations."),
        ("derivations", anchor::UNIQUE, "Derivations are checked relation by relation; decompositions solve ad_t + mu1 D1 + mu2 D2 = d per weight component."),
        ("hh1", anchor::HH1, "For every weight shift in the window: derivations with images of bounded degree (nullspace) minus inner derivations whose images stay in the bound."),
        ("hopf", anchor::HOPF_V, "Coproduct, counit and antipode are extended as (anti-)homomorphisms and checked on every relation and generator, with exact tensor arithmetic."),
        ("units", anchor::UNITS, "For each candidate a linear solve x y = 1 over the basis monomials of the window."),
        ("auto", anchor::AUTO, "theta(k_l) = lambda_l k_sigma(l), theta(e_l) = gamma_l k^v e_sigma(l) with symbolic lambda, gamma is applied to every relation of the augmented algebra."),
        ("hopf-auto", anchor::HOPF_AUTO, "Delta theta = (theta (x) theta) Delta is imposed on generators; the k_l residuals force lambda_l^2 = lambda_l."),
        ("perm", anchor::PERM, "All 2x2 matrices with entries in [0, 5] are enumerated; those with a nonnegative integral inverse are kept."),
        ("gk", anchor::GK, "Normal monomials of bounded degree are counted and compared with binomial(n + 4, 4)."),
    ];
    table
        .iter()
        .filter(|(p, _, _)| id == *p || id.starts_with(&format!("{p}.")) || id.starts_with(&format!("{p}-")) || (p.len() > 3 && id.starts_with(p)))
        .max_by_key(|(p, _, _)| p.len())
        .map(|(_, a, text)| format!("{id}\n  anchor: \"{a}\"\n  {text}"))
}

/// Free-algebra residuals of a list of identities (for callers that want the raw elements).
pub fn free_residuals(ids: &[algebras::Identity]) -> Result<Vec<FreeElt>> {
    ids.iter().map(|i| i.free_residual()).collect()
}
