mod report;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use multiseg::corpus::{enumerate_corpus, CorpusSpec};
use multiseg::duality::{dual, dual_with_trace};
use multiseg::grammar::{parse_multisegment, parse_point, parse_segment, parse_slots};
use multiseg::properties::{run_properties, Violation};
use multiseg::ring::{jacquet, l_sup_standard, lemme2_jac, multiplicity, Composition, StandardProduct};
use multiseg::socle::{
    condition_c, is_irreducible_with_cuspidal, l_prime_invariant, l_sup_formula, q_c, s_c, socle_cosocle, Mode, Side,
    SocleQuery,
};
use multiseg::theta::{cor_comb_check, lemma_com_check, sweep_com, sweep_comb, ThetaQuery};
use multiseg::{HalfInt, IrreducibleParam, Multisegment, Param};

use report::{Outcome, RunReport, SCHEMA_VERSION};

#[derive(Parser)]
#[command(name = "multiseg", version, about = "Multisegment calculus for GL_n over a p-adic division algebra")]
struct Cli {
    /// Print a machine-readable report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// How multisegment arguments parametrize representations.
    #[arg(long, global = true, value_enum, default_value_t = ParamArg::Langlands)]
    param: ParamArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParamArg {
    Langlands,
    Zelevinsky,
}

impl From<ParamArg> for Param {
    fn from(p: ParamArg) -> Param {
        match p {
            ParamArg::Langlands => Param::Langlands,
            ParamArg::Zelevinsky => Param::Zelevinsky,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    /// the cuspidal on the left: `ρ × π`
    Left,
    /// the cuspidal on the right: `π × ρ`
    Right,
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible submodule of the product of a representation with a cuspidal.
    Socle(SocleArgs),
    /// Irreducible quotient of the product of a representation with a cuspidal.
    Cosocle(SocleArgs),
    /// Whether the product with a cuspidal is irreducible.
    Irreducible(PointArgs),
    /// Apply Q_c.
    Qc(PointArgs),
    /// Apply S_c.
    Sc(PointArgs),
    /// Number of unmatched segments beginning at c, and n times it.
    Lprime(PointArgs),
    /// Pairwise unlinked and pairwise equal-or-disjoint.
    ConditionC {
        #[arg(allow_hyphen_values = true)]
        m: String,
    },
    /// Zelevinsky involution.
    Dual {
        #[arg(allow_hyphen_values = true)]
        m: String,
        /// Show each peeling step.
        #[arg(long)]
        trace: bool,
    },
    /// Jacquet restriction of a standard product, e.g. `jacquet '[0..1]+[2..3]' 3,1`.
    Jacquet {
        #[arg(allow_hyphen_values = true)]
        std: String,
        gamma: String,
    },
    /// Coefficient of a tensor of standard products, slots separated by `|`.
    Multiplicity {
        #[arg(allow_hyphen_values = true)]
        std: String,
        #[arg(allow_hyphen_values = true)]
        target: String,
        gamma: String,
    },
    /// Filtered restriction of the quotient of two linked segments.
    Lemme2 {
        #[arg(allow_hyphen_values = true)]
        delta: String,
        #[arg(allow_hyphen_values = true)]
        delta_p: String,
    },
    /// Largest degree that splits off on the right inside the given points.
    Lsup {
        #[arg(allow_hyphen_values = true)]
        std: String,
        /// Comma-separated points.
        #[arg(allow_hyphen_values = true)]
        support: String,
    },
    /// Langlands parameter of the theta lift of index TARGET.
    Theta {
        #[arg(allow_hyphen_values = true)]
        m: String,
        target: u64,
        /// Degree of the representation; defaults to the degree of M.
        #[arg(long)]
        n: Option<u64>,
    },
    /// Commutation of Q_c with a descending chain of cuspidals.
    CheckCom(ComArgs),
    /// The two computations of the theta lift of a socle.
    CheckComb(CombArgs),
    /// List the corpus.
    Enumerate(CorpusArgs),
    /// Run property suites over the corpus.
    Check {
        /// Suites to run (all when omitted).
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
}

#[derive(Args)]
struct SocleArgs {
    #[arg(allow_hyphen_values = true)]
    m: String,
    /// The cuspidal, as a point such as `0`, `1/2` or `3@1:2`.
    #[arg(allow_hyphen_values = true)]
    rho: String,
    #[arg(long, value_enum, default_value_t = SideArg::Right)]
    side: SideArg,
}

#[derive(Args)]
struct PointArgs {
    #[arg(allow_hyphen_values = true)]
    m: String,
    #[arg(allow_hyphen_values = true)]
    c: String,
}

#[derive(Args)]
struct ComArgs {
    /// `m' a b c`; omit with --sweep.
    #[arg(allow_hyphen_values = true)]
    values: Vec<String>,
    /// Sweep b and c over the half-integers of `lo:hi`.
    #[arg(long, allow_hyphen_values = true)]
    sweep: Option<String>,
    #[arg(long, default_value_t = 3)]
    a_max: u32,
    /// Largest degree of m' in a sweep.
    #[arg(long, default_value_t = 4)]
    max_degree: u64,
    #[command(flatten)]
    corpus: CorpusArgs,
}

#[derive(Args)]
struct CombArgs {
    /// `m1 M c`; omit with --sweep.
    #[arg(allow_hyphen_values = true)]
    values: Vec<String>,
    /// Sweep c over the half-integers of `lo:hi`.
    #[arg(long, allow_hyphen_values = true)]
    sweep: Option<String>,
    /// Degree of the cuspidal; only 1 is handled.
    #[arg(long, default_value_t = 1)]
    p: u64,
    /// In a sweep, M runs from n to n + extra.
    #[arg(long, default_value_t = 3)]
    extra: u64,
    /// Largest degree n of the socle in a sweep.
    #[arg(long, default_value_t = 3)]
    max_n: u64,
    #[command(flatten)]
    corpus: CorpusArgs,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    lo: i64,
    #[arg(long, default_value_t = 4, allow_hyphen_values = true)]
    hi: i64,
    #[arg(long, default_value_t = 4)]
    max_segments: usize,
    #[arg(long, default_value_t = 2)]
    max_multiplicity: usize,
    #[arg(long, default_value_t = 1)]
    lines: u32,
}

impl From<&CorpusArgs> for CorpusSpec {
    fn from(a: &CorpusArgs) -> Self {
        CorpusSpec {
            lo: a.lo,
            hi: a.hi,
            max_segments: a.max_segments,
            max_multiplicity: a.max_multiplicity,
            line_count: a.lines,
        }
    }
}

fn mseg(text: &str) -> Result<Multisegment> {
    parse_multisegment(text).with_context(|| format!("in `{text}`"))
}

fn composition(text: &str) -> Result<Composition> {
    let parts: Result<Vec<u32>, _> = text.split(',').map(|p| p.trim().parse::<u32>()).collect();
    Ok(parts.with_context(|| format!("`{text}` is not a comma-separated list of degrees"))?.into())
}

fn half(text: &str) -> Result<HalfInt> {
    text.trim().parse::<HalfInt>().with_context(|| format!("in `{text}`"))
}

fn range(text: &str) -> Result<(HalfInt, HalfInt)> {
    let (lo, hi) = text.split_once(':').ok_or_else(|| anyhow!("expected `lo:hi`, got `{text}`"))?;
    Ok((half(lo)?, half(hi)?))
}

fn run(cli: &Cli) -> Result<Outcome> {
    let param: Param = cli.param.into();
    let out = match &cli.command {
        Command::Socle(a) | Command::Cosocle(a) => {
            let mode = if matches!(cli.command, Command::Socle(_)) { Mode::Socle } else { Mode::Cosocle };
            let side = match a.side {
                SideArg::Left => Side::CuspidalLeft,
                SideArg::Right => Side::CuspidalRight,
            };
            let q =
                SocleQuery { pi: IrreducibleParam { param, m: mseg(&a.m)? }, rho: parse_point(&a.rho)?, side, mode };
            let answer = socle_cosocle(&q);
            Outcome::new(&answer, answer.to_string())
        }
        Command::Irreducible(a) => {
            let irr = is_irreducible_with_cuspidal(&mseg(&a.m)?, parse_point(&a.c)?);
            Outcome::new(json!({ "irreducible": irr }), if irr { "irreducible" } else { "reducible" })
        }
        Command::Qc(a) => {
            let r = q_c(&mseg(&a.m)?, parse_point(&a.c)?);
            Outcome::new(&r, r.to_string())
        }
        Command::Sc(a) => match s_c(&mseg(&a.m)?, parse_point(&a.c)?) {
            Some(r) => Outcome::new(json!({ "in_image": true, "m": r }), r.to_string()),
            None => Outcome::new(json!({ "in_image": false, "m": null }), "not in the image"),
        },
        Command::Lprime(a) => {
            let (m, c) = (mseg(&a.m)?, parse_point(&a.c)?);
            let lp = l_prime_invariant(&m, c);
            let bound = l_sup_formula(&m, c, c.line.unit_degree as u64);
            Outcome::new(json!({ "l_prime": lp, "l_sup": bound }), format!("l' = {lp}, n l' = {bound}"))
        }
        Command::ConditionC { m } => {
            let ok = condition_c(&mseg(m)?);
            Outcome::new(json!({ "condition_c": ok }), ok.to_string())
        }
        Command::Dual { m, trace } => {
            let m = mseg(m)?;
            if *trace {
                let t = dual_with_trace(&m);
                let mut text = String::new();
                for step in &t.steps {
                    writeln!(text, "S_{} -> {}", step.c, step.peeled)?;
                }
                write!(text, "dual = {}", t.result)?;
                Outcome::new(&t, text)
            } else {
                let d = dual(&m);
                Outcome::new(&d, d.to_string())
            }
        }
        Command::Jacquet { std, gamma } => {
            let v = jacquet(&StandardProduct::new(param, mseg(std)?), &composition(gamma)?)?;
            Outcome::new(&v, v.to_string())
        }
        Command::Multiplicity { std, target, gamma } => {
            let k =
                multiplicity(&StandardProduct::new(param, mseg(std)?), &parse_slots(target)?, &composition(gamma)?)?;
            Outcome::new(json!({ "multiplicity": k }), k.to_string())
        }
        Command::Lemme2 { delta, delta_p } => {
            let v = lemme2_jac(&parse_segment(delta)?, &parse_segment(delta_p)?)?;
            Outcome::new(json!({ "zero": v.is_zero(), "jac": v }), v.to_string())
        }
        Command::Lsup { std, support } => {
            let pts: BTreeSet<_> = support.split(',').map(parse_point).collect::<Result<_, _>>()?;
            let k = l_sup_standard(&StandardProduct::new(param, mseg(std)?), &pts)?;
            Outcome::new(json!({ "l_sup": k }), k.to_string())
        }
        Command::Theta { m, target, n } => {
            let m = mseg(m)?;
            let n = n.unwrap_or(m.degree());
            let r = multiseg::theta::theta_star(&ThetaQuery { m, n, target: *target })?;
            Outcome::new(&r, r.to_string())
        }
        Command::CheckCom(a) => check_com(a)?,
        Command::CheckComb(a) => check_comb(a)?,
        Command::Enumerate(a) => {
            let all = enumerate_corpus(&a.into());
            let text = all.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("\n");
            Outcome::new(&all, text)
        }
        Command::Check { suites, corpus } => {
            let run = run_properties(&corpus.into(), suites)?;
            let mut text = format!("corpus of {} multisegments\n", run.corpus_size);
            for s in &run.suites {
                writeln!(text, "{}: {} checks, {} violations", s.suite, s.checked, s.violations.len())?;
                for n in &s.notes {
                    writeln!(text, "  {n}")?;
                }
                for v in s.violations.iter().take(5) {
                    writeln!(text, "  {}: {}: {}", v.property, v.input, v.detail)?;
                }
            }
            let violations = run.violations().cloned().collect();
            Outcome::new(&run, text.trim_end()).with_violations(violations)
        }
    };
    Ok(out)
}

fn check_com(a: &ComArgs) -> Result<Outcome> {
    if let Some(sweep) = &a.sweep {
        let (lo, hi) = range(sweep)?;
        let corpus: Vec<_> =
            enumerate_corpus(&(&a.corpus).into()).into_iter().filter(|m| m.degree() <= a.max_degree).collect();
        let r = sweep_com(&corpus, a.a_max, lo, hi);
        let violations = r
            .violations
            .iter()
            .map(|i| Violation {
                property: "commutation".into(),
                input: format!("m' = {}, a = {}, b = {}, c = {}", i.m_prime, i.a, i.b, i.c),
                detail: format!("lhs {}, rhs {}", i.report.lhs, i.report.rhs),
            })
            .collect();
        let mut text = format!(
            "{} instances, {} violations, {} differ outside the condition",
            r.checked,
            r.violations.len(),
            r.counterexamples.len()
        );
        if let Some(i) = r.counterexamples.first() {
            write!(
                text,
                "\nfirst outside: m' = {}, a = {}, b = {}, c = {}: {} vs {}",
                i.m_prime, i.a, i.b, i.c, i.report.lhs, i.report.rhs
            )?;
        }
        let summary = json!({
            "checked": r.checked,
            "violations": r.violations.len(),
            "counterexamples": r.counterexamples.len(),
            "first_counterexample": r.counterexamples.first(),
        });
        return Ok(Outcome::new(summary, text).with_violations(violations));
    }
    let [m, a_, b, c] = a.values.as_slice() else {
        bail!("check-com takes `m' a b c` or --sweep lo:hi");
    };
    let (m, b, c) = (mseg(m)?, half(b)?, half(c)?);
    let a_: u32 = a_.parse().with_context(|| format!("`{a_}` is not a non-negative integer"))?;
    let r = lemma_com_check(&m, a_, b, c);
    let mut violations = Vec::new();
    if r.condition_holds && !r.equal {
        violations.push(Violation {
            property: "commutation".into(),
            input: format!("m' = {m}, a = {a_}, b = {b}, c = {c}"),
            detail: format!("lhs {}, rhs {}", r.lhs, r.rhs),
        });
    }
    let text = format!("lhs = {}\nrhs = {}\nequal = {}, condition = {}", r.lhs, r.rhs, r.equal, r.condition_holds);
    Ok(Outcome::new(&r, text).with_violations(violations))
}

fn check_comb(a: &CombArgs) -> Result<Outcome> {
    if let Some(sweep) = &a.sweep {
        let (lo, hi) = range(sweep)?;
        let corpus: Vec<_> = enumerate_corpus(&(&a.corpus).into())
            .into_iter()
            .filter(|m| m.degree() < a.max_n && m.iter().all(|s| s.line().is_default()))
            .collect();
        let r = sweep_comb(&corpus, a.extra, lo, hi);
        let violations = r
            .violations
            .iter()
            .map(|i| Violation {
                property: "theta-socle".into(),
                input: format!("m1 = {}, n = {}, M = {}, c = {}", i.m1, i.n, i.target, i.c),
                detail: format!("lhs {}, rhs {}", i.report.lhs, i.report.rhs),
            })
            .collect();
        let text = format!(
            "{} instances, {} violations, {} excluded instances differ",
            r.checked,
            r.violations.len(),
            r.counterexamples.len()
        );
        let summary = json!({
            "checked": r.checked,
            "violations": r.violations.len(),
            "counterexamples": r.counterexamples.len(),
            "first_counterexample": r.counterexamples.first(),
        });
        return Ok(Outcome::new(summary, text).with_violations(violations));
    }
    let [m1, target, c] = a.values.as_slice() else {
        bail!("check-comb takes `m1 M c` or --sweep lo:hi");
    };
    let (m1, c) = (mseg(m1)?, half(c)?);
    let target: u64 = target.parse().with_context(|| format!("`{target}` is not a non-negative integer"))?;
    let n = m1.degree() + a.p;
    let r = cor_comb_check(&m1, n, target, c, a.p)?;
    let mut violations = Vec::new();
    if !r.excluded && !r.equal {
        violations.push(Violation {
            property: "theta-socle".into(),
            input: format!("m1 = {m1}, n = {n}, M = {target}, c = {c}"),
            detail: format!("lhs {}, rhs {}", r.lhs, r.rhs),
        });
    }
    let text = format!("lhs = {}\nrhs = {}\nequal = {}, excluded = {}", r.lhs, r.rhs, r.equal, r.excluded);
    Ok(Outcome::new(&r, text).with_violations(violations))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if cli.json {
        let report = RunReport {
            schema_version: SCHEMA_VERSION,
            command: std::env::args().skip(1).collect(),
            elapsed_ms: start.elapsed().as_millis() as u64,
            result: out.result,
            violations: out.violations.clone(),
        };
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        println!("{}", out.text);
    }
    if out.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
