use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use qserre::algebras::{self, NamedAlgebra};
use qserre::derivations::{self as der, Derivation};
use qserre::hopf::{self, auto};
use qserre::pbw::doc::parse_spec;
use qserre::report::{Config, Recorder, Residual, Status, VerificationReport};
use qserre::suites::{self, anchor};
use qserre::Error;

#[derive(Parser)]
#[command(name = "qserre", version, about = "Exact verification of the two-parameter quantum algebra U+_{r,s}(B2) and its Hopf relatives")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct RunOpts {
    /// Degree bound (default 6, or QSERRE_DEGBOUND)
    #[arg(long)]
    degbound: Option<i32>,
    /// Exponent or weight window
    #[arg(long)]
    window: Option<i32>,
    /// Worker threads
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the JSON report here
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also evaluate residual coefficients at r = R0, s = S0
    #[arg(long, num_args = 2, value_names = ["R0", "S0"])]
    numeric_sample: Option<Vec<String>>,
    /// Print the JSON report instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite (or `all`)
    Verify {
        suite: String,
        #[command(flatten)]
        opts: RunOpts,
        /// Record per-suite wall time in the report
        #[arg(long)]
        timing: bool,
    },
    /// Parse, validate and confluence-check a spec document
    Ingest {
        file: PathBuf,
        /// Name to register the algebra under
        #[arg(long)]
        name: Option<String>,
        /// Compare with a built-in algebra
        #[arg(long)]
        compare: Option<String>,
    },
    /// Describe the computation behind a check id
    Explain { id: String },
    #[command(subcommand)]
    Derivations(DerCmd),
    #[command(subcommand)]
    Hopf(HopfCmd),
}

#[derive(Subcommand)]
enum DerCmd {
    /// Outer derivations per weight in a window
    Scan {
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Check a derivation given by generator images, e.g. `X3="2 X3"`
    Check {
        #[arg(long, default_value = "u")]
        algebra: String,
        images: Vec<String>,
        #[command(flatten)]
        opts: RunOpts,
    },
}

#[derive(Subcommand)]
enum HopfCmd {
    /// Bialgebra and antipode axioms
    Verify {
        #[arg(long, default_value = "vcheck")]
        algebra: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Algebra automorphisms in an exponent window
    AutoScan {
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Hopf automorphisms in an exponent window
    HopfAutoScan {
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Check one candidate, e.g. `sigma=id a=1 b=2 c=1 d=-3`
    CheckCandidate {
        candidate: String,
        #[command(flatten)]
        opts: RunOpts,
    },
}

enum Failure {
    Usage(String),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(Error::Usage(m)) => Failure::Usage(m.clone()),
            _ => Failure::Other(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(anyhow::Error::new(e))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn config(opts: &RunOpts) -> Result<Config, Failure> {
    let mut c = Config::from_env()?;
    if let Some(d) = opts.degbound {
        c.degbound = d;
    }
    if c.degbound < 1 {
        return Err(Failure::Usage(format!("degbound must be positive, got {}", c.degbound)));
    }
    if let Some(w) = opts.window {
        if w < 0 {
            return Err(Failure::Usage(format!("window must be nonnegative, got {w}")));
        }
        c.window = Some(w);
    }
    c.jobs = opts.jobs;
    if let Some(v) = &opts.numeric_sample {
        c.numeric_sample = Some([v[0].clone(), v[1].clone()]);
    }
    c.sample().map_err(|e| Failure::Usage(format!("--numeric-sample: {e}")))?;
    if let Some(n) = opts.jobs {
        if n == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("thread pool")?;
    }
    Ok(c)
}

fn emit(report: &VerificationReport, opts: &RunOpts) -> Result<bool, Failure> {
    if let Some(path) = &opts.out {
        std::fs::write(path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    if opts.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(report.ok())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.cmd {
        Cmd::Verify { suite, opts, timing } => {
            let c = config(&opts)?;
            let report = suites::run_suite(&suite, &c, timing)?;
            emit(&report, &opts)
        }
        Cmd::Ingest { file, name, compare } => {
            let src = std::fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let spec = parse_spec(&src).map_err(|e| Failure::Other(anyhow::anyhow!("{}: {e}", file.display())))?;
            let label = name.unwrap_or_else(|| spec.name().to_string());
            println!("{label}: {} variables, confluent", spec.nvars());
            let names = spec.vars();
            for j in 0..spec.nvars() {
                for i in 0..j {
                    let c = spec.c(j, i);
                    let tail = if c.is_zero() { String::new() } else { format!(" + ({})", spec.format(c)) };
                    println!("  {0} {1} = ({2}) {1} {0}{tail}", names[j], names[i], spec.q(j, i));
                }
            }
            if let Some(other) = compare {
                let alg = algebras::by_name(&other)?;
                let same = alg.spec == spec;
                println!("{} {}", if same { "equal to" } else { "differs from" }, alg.name);
                return Ok(same);
            }
            Ok(true)
        }
        Cmd::Explain { id } => match suites::explain(&id) {
            Some(text) => {
                println!("{text}");
                Ok(true)
            }
            None => Err(Failure::Usage(format!("no check id matches `{id}`"))),
        },
        Cmd::Derivations(DerCmd::Scan { opts }) => {
            let c = config(&opts)?;
            let u = algebras::build_u();
            let window = c.window_or(2);
            let rows = der::hh1_scan(&u.spec, window, c.degbound);
            let mut report = VerificationReport::new("derivations-scan", c.clone());
            let mut rec = Recorder::new(&c)?;
            let mut total = 0;
            for r in &rows {
                total += r.outer();
                rec.push(
                    &format!("hh1.weight({},{})", r.weight.0, r.weight.1),
                    anchor::HH1,
                    Status::Pass,
                    Residual::None,
                    format!("der {} inner {} outer {}", r.der, r.inner, r.outer()),
                );
            }
            rec.check("hh1.total", anchor::HH1, total == 2, Residual::None, format!("outer dimension {total}; verified within window"));
            report.checks = rec.records;
            emit(&report, &opts)
        }
        Cmd::Derivations(DerCmd::Check { algebra, images, opts }) => {
            let c = config(&opts)?;
            let alg = algebras::by_name(&algebra)?;
            let d = parse_derivation(&alg, &images)?;
            let mut report = VerificationReport::new("derivations-check", c.clone());
            let mut rec = Recorder::new(&c)?;
            for ((j, i), r) in der::is_derivation(&alg.spec, &d) {
                rec.check(&format!("leibniz.relation({j},{i})"), anchor::DERS, r.is_zero(), Residual::Element(&alg.spec, &r), "");
            }
            if alg.name == "U" && der::is_valid(&alg.spec, &d) {
                match der::decompose(&alg, &d, c.degbound) {
                    Some(x) => {
                        rec.check("decompose", anchor::UNIQUE, true, Residual::None, format!("t = {}, mu1 = {}, mu2 = {}", alg.spec.format(&x.t), x.mu1, x.mu2))
                    }
                    None => rec.check("decompose", anchor::UNIQUE, false, Residual::None, format!("no decomposition with deg t <= {}", c.degbound)),
                }
            }
            report.checks = rec.records;
            emit(&report, &opts)
        }
        Cmd::Hopf(HopfCmd::Verify { algebra, opts }) => {
            let c = config(&opts)?;
            let alg = algebras::by_name(&algebra)?;
            if alg.group.is_empty() {
                return Err(Failure::Usage(format!("`{algebra}` carries no Hopf structure (use ugeq0 or vcheck)")));
            }
            let anchor = if alg.name == "Ugeq0" { anchor::HOPF_U } else { anchor::HOPF_V };
            let printed = hopf::hopf_data(&alg);
            let solved = hopf::solved_hopf_data(&alg);
            let mut report = VerificationReport::new("hopf-verify", c.clone());
            let mut rec = Recorder::new(&c)?;
            let s = &alg.spec;
            for ch in hopf::verify_bialgebra(&alg, &printed) {
                rec.check(&ch.name, anchor, ch.ok(), Residual::Tensor(s, &ch.residual), "");
            }
            for ch in hopf::verify_antipode(&alg, &printed) {
                if !ch.ok() {
                    rec.push(&format!("printed.{}", ch.name), anchor, Status::Discrepancy, Residual::Tensor(s, &ch.residual), "printed antipode");
                }
            }
            for ch in hopf::verify_antipode(&alg, &solved) {
                rec.check(&ch.name, anchor, ch.ok(), Residual::Tensor(s, &ch.residual), "axiom-solved antipode");
            }
            report.checks = rec.records;
            emit(&report, &opts)
        }
        Cmd::Hopf(HopfCmd::AutoScan { opts }) => {
            let c = config(&opts)?;
            let v = algebras::build_vcheck();
            let window = c.window_or(3);
            let sols = auto::auto_scan(&v, window);
            let mut report = VerificationReport::new("auto-scan", c.clone());
            let mut rec = Recorder::new(&c)?;
            for t in &sols {
                rec.push(&format!("auto({},{},{},{})", t[0], t[1], t[2], t[3]), anchor::AUTO, Status::Pass, Residual::None, "");
            }
            rec.check("auto.closed-form", anchor::AUTO, sols == auto::closed_form(window), Residual::None, format!("{} tuples", sols.len()));
            let swaps = auto::auto_scan_sigma(&v, window, true);
            rec.check("auto.transpositions", anchor::SWAP, swaps.is_empty(), Residual::None, format!("{} swap survivors", swaps.len()));
            report.checks = rec.records;
            emit(&report, &opts)
        }
        Cmd::Hopf(HopfCmd::HopfAutoScan { opts }) => {
            let c = config(&opts)?;
            let v = algebras::build_vcheck();
            let h = hopf::solved_hopf_data(&v);
            let rows = auto::hopf_auto_scan(&v, &h, c.window_or(3));
            let mut report = VerificationReport::new("hopf-auto-scan", c.clone());
            let mut rec = Recorder::new(&c)?;
            for r in &rows {
                let lambda: Vec<String> = r.lambda.iter().map(|l| l.as_ref().map_or("-".into(), |x| x.to_string())).collect();
                let note = if r.survives() { format!("survives, lambda = ({})", lambda.join(", ")) } else { "not Delta-compatible".to_string() };
                rec.push(&format!("hopf-auto({},{},{},{})", r.exps[0], r.exps[1], r.exps[2], r.exps[3]), anchor::HOPF_AUTO, Status::Pass, Residual::None, note);
            }
            let survivors: Vec<&auto::HopfAutoRow> = rows.iter().filter(|r| r.survives()).collect();
            let ok = survivors.len() == 1 && survivors[0].exps == [0; 4];
            rec.check("hopf-auto.survivors", anchor::HOPF_AUTO, ok, Residual::None, format!("{} survivors", survivors.len()));
            report.checks = rec.records;
            emit(&report, &opts)
        }
        Cmd::Hopf(HopfCmd::CheckCandidate { candidate, opts }) => {
            let c = config(&opts)?;
            let v = algebras::build_vcheck();
            let h = hopf::solved_hopf_data(&v);
            let cand = auto::AutoCandidate::parse(&candidate)?;
            let mut report = VerificationReport::new("check-candidate", c.clone());
            let mut rec = Recorder::new(&c)?;
            let s = &v.spec;
            let a = auto::is_automorphism(&v, &cand);
            for ch in &a.relations {
                rec.check(&format!("theta.{}", ch.name), anchor::AUTO, ch.ok(), Residual::Tensor(s, &ch.residual), "");
            }
            rec.check("theta.invertible", anchor::AUTO, a.automorphism(), Residual::None, format!("inverse {}", cand.inverse()));
            for ch in auto::delta_compatibility(&v, &h, &cand) {
                rec.check(&ch.name, anchor::HOPF_AUTO, ch.ok(), Residual::Tensor(s, &ch.residual), "");
            }
            report.checks = rec.records;
            emit(&report, &opts)
        }
    }
}

/// `VAR=ELEMENT` pairs; unspecified generators map to 0.
fn parse_derivation(alg: &NamedAlgebra, images: &[String]) -> Result<Derivation, Failure> {
    let mut d = Derivation::zero(alg.spec.nvars());
    for item in images {
        let (var, rhs) = item.split_once('=').ok_or_else(|| Failure::Usage(format!("expected VAR=ELEMENT, got `{item}`")))?;
        let k = alg.spec.vars().iter().position(|v| v == var.trim()).ok_or_else(|| Failure::Usage(format!("unknown generator `{var}`")))?;
        d.images[k] = alg.parse(rhs)?;
    }
    Ok(d)
}
