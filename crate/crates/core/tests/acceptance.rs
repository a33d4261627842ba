//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

mod oracle;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use multiseg::corpus::{enumerate_corpus, CorpusSpec};
use multiseg::duality::dual;
use multiseg::properties::{preceding_pairs, run_properties, window_segments, PropertyRun, SuiteReport};
use multiseg::ring::{margin_matrices, multiplicity, Composition, StandardProduct};
use multiseg::theta::{lemma_com_check, sweep_com};
use multiseg::{range_sort, HalfInt, Multisegment, Segment};

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn suite(spec: &CorpusSpec, name: &str) -> SuiteReport {
    let run = run_properties(spec, &[name.to_string()]).expect("known suite");
    run.suites.into_iter().next().unwrap()
}

fn from_suite(r: &SuiteReport) -> Outcome {
    let mut detail = format!("{} checks, {} violations", r.checked, r.violations.len());
    if let Some(v) = r.violations.first() {
        detail.push_str(&format!("; first: {} on {}: {}", v.property, v.input, v.detail));
    }
    Outcome { ok: r.violations.is_empty() && r.checked > 0, detail }
}

fn involution(spec: &CorpusSpec, corpus: &[Multisegment]) -> Outcome {
    let mut out = from_suite(&suite(spec, "involution"));
    let disagree: Vec<&Multisegment> =
        corpus.iter().filter(|m| dual(m) != oracle::from_plain(&oracle::mw_dual(&oracle::plain(m)))).collect();
    out.ok &= disagree.is_empty();
    out.detail.push_str(&format!("; chain-algorithm oracle disagrees on {} of {}", disagree.len(), corpus.len()));
    if let Some(m) = disagree.first() {
        out.detail.push_str(&format!(" (first {m})"));
    }
    out
}

fn multiplicity_two() -> Outcome {
    let nu = |x: i64| Segment::of(x, x);
    let std = StandardProduct::langlands([nu(0), nu(1), nu(0)]);
    let target = [range_sort([nu(0)]), range_sort([nu(1)]), range_sort([nu(0)])];
    let got = multiplicity(&std, &target, &Composition::from([1, 1, 1])).unwrap();
    let expected = oracle::cuspidal_arrangements(&[0, 1, 0], &[0, 1, 0]) as i64;
    Outcome { ok: got == 2 && expected == 2, detail: format!("multiplicity {got}, arrangement count {expected}") }
}

fn geometric(spec: &CorpusSpec) -> Outcome {
    let mut out = from_suite(&suite(spec, "geometric"));
    let mut mismatches = 0;
    let shapes: [(&[u32], &[u32]); 6] = [
        (&[1, 1], &[1, 1]),
        (&[2, 1], &[1, 2]),
        (&[2, 2], &[1, 2, 1]),
        (&[3], &[1, 1, 1]),
        (&[2, 1, 1], &[2, 2]),
        (&[1, 1, 1], &[1, 1, 1]),
    ];
    for (b, g) in shapes {
        let ours = margin_matrices(&b.to_vec().into(), &g.to_vec().into()).unwrap().len();
        if ours != oracle::brute_margins(b, g) {
            mismatches += 1;
        }
    }
    out.ok &= mismatches == 0;
    out.detail.push_str(&format!("; brute-force margin counts differ on {mismatches} of {} shapes", shapes.len()));
    out
}

fn theta(spec: &CorpusSpec) -> Outcome {
    let r = suite(spec, "theta");
    let mut out = from_suite(&r);
    // the instance with c = b - a - 1 must really differ
    let known = lemma_com_check(&Multisegment::new(), 0, HalfInt::ZERO, HalfInt::from_int(-1));
    let corpus: Vec<Multisegment> = enumerate_corpus(spec).into_iter().filter(|m| m.degree() <= 4).collect();
    let sweep = sweep_com(&corpus, 3, HalfInt::from_int(-3), HalfInt::from_int(3));
    let genuine = !sweep.counterexamples.is_empty() && !known.equal && !known.condition_holds;
    out.ok &= genuine;
    out.detail.push_str(&format!("; {} genuine failures outside the condition", sweep.counterexamples.len()));
    for n in &r.notes {
        out.detail.push_str(&format!("\n        {n}"));
    }
    out
}

fn determinism(spec: &CorpusSpec) -> Outcome {
    let mut out = from_suite(&suite(spec, "permutation"));
    let all: Vec<String> =
        ["involution", "qs-identity", "mirror", "permutation"].iter().map(|s| s.to_string()).collect();
    let json = |r: &PropertyRun| serde_json::to_string(r).unwrap();
    let first = json(&run_properties(spec, &all).unwrap());
    let second = json(&run_properties(spec, &all).unwrap());
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let serial = pool.install(|| json(&run_properties(spec, &all).unwrap()));
    let same = first == second && first == serial;
    out.ok &= same;
    out.detail.push_str(&format!("; repeated and single-threaded reports identical: {same}"));
    out
}

fn lemme2(spec: &CorpusSpec) -> Outcome {
    let mut out = from_suite(&suite(spec, "lemme2"));
    let n = window_segments(-3, 3).len();
    out.detail.push_str(&format!(
        " ({} ordered pairs, {} preceding, endpoints in [-3, 3])",
        n * n,
        preceding_pairs(-3, 3).len()
    ));
    out
}

fn main() -> ExitCode {
    let spec = CorpusSpec::default();
    let corpus = enumerate_corpus(&spec);
    println!(
        "corpus: window [{}, {}], <= {} segments, multiplicity <= {}: {} items",
        spec.lo,
        spec.hi,
        spec.max_segments,
        spec.max_multiplicity,
        corpus.len()
    );
    let start = Instant::now();

    let criteria: Vec<Criterion> = vec![
        ("1 involution", Box::new(|| involution(&spec, &corpus))),
        ("2 operator identities", Box::new(|| from_suite(&suite(&spec, "qs-identity")))),
        ("3 lemme2 equivalence", Box::new(|| lemme2(&spec))),
        ("4 irreducibility cross-check", Box::new(|| from_suite(&suite(&spec, "irreducibility")))),
        ("5 multiplicity two in 1 x | | x 1", Box::new(multiplicity_two)),
        ("6 mirror consistency", Box::new(|| from_suite(&suite(&spec, "mirror")))),
        ("7 geometric lemma sanity", Box::new(|| geometric(&spec))),
        ("8 theta sweep", Box::new(|| theta(&spec))),
        ("9 determinism and permutation invariance", Box::new(|| determinism(&spec))),
    ];

    let mut results = BTreeMap::new();
    for (name, run) in &criteria {
        let t = Instant::now();
        let o = run();
        println!("[{}] {name} ({:.2}s): {}", if o.ok { "PASS" } else { "FAIL" }, t.elapsed().as_secs_f64(), o.detail);
        results.insert(*name, o.ok);
    }
    let failed = results.values().filter(|ok| !**ok).count();
    println!(
        "{} of {} criteria passed in {:.2}s",
        results.len() - failed,
        results.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
