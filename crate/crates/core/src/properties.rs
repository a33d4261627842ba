//! Named invariant suites run over a corpus of multisegments.
//!
//! Each suite fans the corpus out over the rayon pool and collects results
//! in corpus order, so reports do not depend on the number of workers.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{enumerate_corpus, CorpusSpec};
use crate::duality::dual;
use crate::error::{Error, Result};
use crate::matching::{candidates_socle, matching, matching_primed, MatchingReport};
use crate::multisegment::{range_sort, IrreducibleParam, Multisegment, Param};
use crate::point::{HalfInt, Line, Point};
use crate::ring::{
    diagonal_multiplicity, jacquet, l_sup, l_sup_standard, lemme2_jac, margin_matrices, paired_product_class,
    prop_cons_hypothesis, Composition, GrothVector, StandardProduct,
};
use crate::segment::{linked, precedes, Segment};
use crate::socle::{
    is_irreducible_with_cuspidal, l_prime_invariant, l_sup_formula, q_c, q_primed_c, s_c, socle_cosocle,
    unlinked_product_irreducible, Mode, Side, SocleQuery,
};
use crate::theta::{half_steps, sweep_com, sweep_comb};

/// The operators under test. Suites call through these pointers so that a
/// deliberately broken operator can be swapped in.
#[derive(Clone, Copy)]
pub struct Ops {
    pub q: fn(&Multisegment, Point) -> Multisegment,
    pub s: fn(&Multisegment, Point) -> Option<Multisegment>,
    pub q_primed: fn(&Multisegment, Point) -> Multisegment,
    pub dual: fn(&Multisegment) -> Multisegment,
}

impl Default for Ops {
    fn default() -> Self {
        Ops { q: q_c, s: s_c, q_primed: q_primed_c, dual }
    }
}

pub const SUITES: &[&str] = &[
    "involution",
    "qs-identity",
    "mirror",
    "irreducibility",
    "lemme2",
    "geometric",
    "theta",
    "permutation",
    "lsup",
    "prop-cons",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub property: String,
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyRun {
    pub corpus: CorpusSpec,
    pub corpus_size: usize,
    pub suites: Vec<SuiteReport>,
}

impl PropertyRun {
    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.suites.iter().flat_map(|s| s.violations.iter())
    }

    pub fn ok(&self) -> bool {
        self.violations().next().is_none()
    }
}

pub fn run_properties(spec: &CorpusSpec, suites: &[String]) -> Result<PropertyRun> {
    run_properties_with(spec, suites, Ops::default())
}

/// Runs the named suites (all of them when `suites` is empty).
pub fn run_properties_with(spec: &CorpusSpec, suites: &[String], ops: Ops) -> Result<PropertyRun> {
    let names: Vec<String> =
        if suites.is_empty() { SUITES.iter().map(|s| s.to_string()).collect() } else { suites.to_vec() };
    if let Some(bad) = names.iter().find(|n| !SUITES.contains(&n.as_str())) {
        return Err(Error::UnknownProperty(bad.clone()));
    }
    let corpus = enumerate_corpus(spec);
    let ctx = Ctx { spec, corpus: &corpus, ops };
    let suites = names.iter().map(|n| ctx.run(n)).collect();
    Ok(PropertyRun { corpus: spec.clone(), corpus_size: corpus.len(), suites })
}

struct Ctx<'a> {
    spec: &'a CorpusSpec,
    corpus: &'a [Multisegment],
    ops: Ops,
}

/// Collects `(checked, violations)` while a check runs.
#[derive(Default)]
struct Tally {
    checked: usize,
    violations: Vec<Violation>,
}

impl Tally {
    fn check(&mut self, ok: bool, property: &str, input: impl FnOnce() -> String, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation { property: property.into(), input: input(), detail: detail() });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.violations.extend(other.violations);
        self
    }
}

impl Ctx<'_> {
    fn run(&self, name: &str) -> SuiteReport {
        let mut notes = Vec::new();
        let tally = match name {
            "involution" => self.per_item(|m, t| self.involution(m, t)),
            "qs-identity" => self.per_item(|m, t| self.qs_identity(m, t)),
            "mirror" => self.per_item(|m, t| self.mirror(m, t)),
            "irreducibility" => self.per_item(|m, t| self.irreducibility(m, t)).merge(cuspidal_pairs()),
            "lemme2" => lemme2_window(-3, 3),
            "geometric" => margin_counts(5).merge(self.per_item(support_conservation)),
            "theta" => self.theta(&mut notes),
            "permutation" => self.per_item(|m, t| self.permutation(m, t)),
            "lsup" => self.per_item(|m, t| self.lsup(m, t)),
            "prop-cons" => self.per_item(prop_cons),
            _ => unreachable!("suite names are validated"),
        };
        SuiteReport { suite: name.into(), checked: tally.checked, violations: tally.violations, notes }
    }

    fn per_item(&self, f: impl Fn(&Multisegment, &mut Tally) + Sync) -> Tally {
        self.corpus
            .par_iter()
            .map(|m| {
                let mut t = Tally::default();
                f(m, &mut t);
                t
            })
            .collect::<Vec<_>>()
            .into_iter()
            .fold(Tally::default(), Tally::merge)
    }

    /// Cuspidal points one step beyond the window on every line.
    fn points(&self) -> Vec<Point> {
        (0..self.spec.line_count)
            .flat_map(|id| {
                (self.spec.lo - 1..=self.spec.hi + 1)
                    .map(move |x| Point::new(Line { id, unit_degree: 1 }, HalfInt::from_int(x)))
            })
            .collect()
    }

    fn involution(&self, m: &Multisegment, t: &mut Tally) {
        let d = (self.ops.dual)(m);
        let dd = (self.ops.dual)(&d);
        t.check(dd == *m, "dual-involution", || m.to_string(), || format!("dual = {d}, dual(dual) = {dd}"));
        if let [seg] = m.segments() {
            let singletons = range_sort(seg.points().map(Segment::point));
            t.check(d == singletons, "dual-segment", || m.to_string(), || format!("dual = {d}"));
        }
    }

    fn qs_identity(&self, m: &Multisegment, t: &mut Tally) {
        let Ops { q, s, .. } = self.ops;
        for c in self.points() {
            let input = || format!("m = {m}, c = {c}");
            let lp = l_prime_invariant(m, c);
            let qm = q(m, c);
            let lq = l_prime_invariant(&qm, c);
            t.check(lq == lp + 1, "l-prime-of-q", input, || format!("l'(m) = {lp}, l'(Q_c m) = {lq}"));
            let mut supp = m.support();
            *supp.entry(c).or_insert(0) += 1;
            t.check(qm.support() == supp, "support-of-q", input, || format!("Q_c m = {qm}"));
            match s(m, c) {
                Some(sm) => {
                    let back = q(&sm, c);
                    t.check(back == *m, "q-after-s", input, || format!("S_c m = {sm}, Q_c S_c m = {back}"));
                    let ls = l_prime_invariant(&sm, c);
                    t.check(ls + 1 == lp, "l-prime-of-s", input, || format!("l'(m) = {lp}, l'(S_c m) = {ls}"));
                }
                None => t.check(lp == 0, "s-defined", input, || format!("S_c undefined although l' = {lp}")),
            }
            let cands = candidates_socle(m, c);
            t.check(cands.contains(&qm), "q-is-candidate", input, || format!("Q_c m = {qm} not among candidates"));
            for w in cands.iter().filter(|w| **w != qm) {
                let lw = l_prime_invariant(w, c);
                t.check(lw == lp, "other-candidates", input, || format!("candidate {w} has l' = {lw}, l'(m) = {lp}"));
            }
        }
    }

    fn mirror(&self, m: &Multisegment, t: &mut Tally) {
        let Ops { q, q_primed, .. } = self.ops;
        let r = m.reflect();
        for c in self.points() {
            let neg = Point::new(c.line, -c.x);
            let input = || format!("m = {m}, c = {c}");
            let direct = q_primed(m, c);
            let mirrored = q(&r, neg).reflect();
            t.check(direct == mirrored, "q-primed-mirror", input, || {
                format!("primed rule {direct}, mirror {mirrored}")
            });

            let a = matching_shape(m, &matching_primed(m, c), true);
            let b = matching_shape(&r, &matching(&r, neg), false);
            t.check(a == b, "matching-mirror", input, || format!("{a:?} vs {b:?}"));

            for param in [Param::Langlands, Param::Zelevinsky] {
                let pi = IrreducibleParam { param, m: m.clone() };
                let left = socle_cosocle(&SocleQuery { pi, rho: c, side: Side::CuspidalLeft, mode: Mode::Socle });
                let pi_r = IrreducibleParam { param, m: r.clone() };
                let right_r =
                    socle_cosocle(&SocleQuery { pi: pi_r, rho: neg, side: Side::CuspidalRight, mode: Mode::Socle });
                let via_contragredient = right_r.m.reflect();
                t.check(left.m == via_contragredient, "socle-side-symmetry", input, || {
                    format!("{param}: left socle {}, through the contragredient {via_contragredient}", left.m)
                });
            }
        }
    }

    fn irreducibility(&self, m: &Multisegment, t: &mut Tally) {
        let [seg] = m.segments() else { return };
        for c in self.points() {
            let irr = is_irreducible_with_cuspidal(m, c);
            let unlinked = !linked(seg, &Segment::point(c));
            t.check(
                irr == unlinked,
                "single-segment-irreducibility",
                || format!("m = {m}, c = {c}"),
                || format!("matching says irreducible = {irr}, linkage says {unlinked}"),
            );
        }
    }

    fn theta(&self, notes: &mut Vec<String>) -> Tally {
        let on_default: Vec<Multisegment> =
            self.corpus.iter().filter(|m| m.iter().all(|s| s.line().is_default())).cloned().collect();
        let small: Vec<Multisegment> = on_default.iter().filter(|m| m.degree() <= 4).cloned().collect();
        let (lo, hi) = (HalfInt::from_int(-3), HalfInt::from_int(3));
        let com = sweep_com(&small, 3, lo, hi);
        let tiny: Vec<Multisegment> = on_default.iter().filter(|m| m.degree() <= 2).cloned().collect();
        let comb = sweep_comb(&tiny, 3, lo, hi);

        let mut t = Tally { checked: com.checked + comb.checked, violations: Vec::new() };
        for i in &com.violations {
            t.violations.push(Violation {
                property: "commutation".into(),
                input: format!("m' = {}, a = {}, b = {}, c = {}", i.m_prime, i.a, i.b, i.c),
                detail: format!("lhs {}, rhs {}", i.report.lhs, i.report.rhs),
            });
        }
        for i in &comb.violations {
            t.violations.push(Violation {
                property: "theta-socle".into(),
                input: format!("m1 = {}, n = {}, M = {}, c = {}", i.m1, i.n, i.target, i.c),
                detail: format!("lhs {}, rhs {}", i.report.lhs, i.report.rhs),
            });
        }
        notes.push(match com.counterexamples.first() {
            Some(i) => format!(
                "commutation: {} instances with c in {{b, b-a-1}} differ, e.g. m' = {}, a = {}, b = {}, c = {}: {} vs {}",
                com.counterexamples.len(),
                i.m_prime,
                i.a,
                i.b,
                i.c,
                i.report.lhs,
                i.report.rhs
            ),
            None => "commutation: no instance outside the guarantee differs".into(),
        });
        notes.push(match comb.counterexamples.first() {
            Some(i) => format!(
                "theta-socle: {} excluded instances differ, e.g. m1 = {}, n = {}, M = {}, c = {}",
                comb.counterexamples.len(),
                i.m1,
                i.n,
                i.target,
                i.c
            ),
            None => "theta-socle: no excluded instance differs in the window".into(),
        });
        t
    }

    fn permutation(&self, m: &Multisegment, t: &mut Tally) {
        let Ops { q, s, q_primed, dual } = self.ops;
        let mut rotated: Vec<Segment> = m.segments().to_vec();
        rotated.reverse();
        if !rotated.is_empty() {
            rotated.rotate_left(1);
        }
        let p = range_sort(rotated);
        let input = || m.to_string();
        t.check(dual(&p) == dual(m), "dual-order-free", input, String::new);
        for c in self.points() {
            let input = || format!("m = {m}, c = {c}");
            t.check(q(&p, c) == q(m, c), "q-order-free", input, String::new);
            t.check(s(&p, c) == s(m, c), "s-order-free", input, String::new);
            t.check(q_primed(&p, c) == q_primed(m, c), "q-primed-order-free", input, String::new);

            // any equal choice among the free or unmatched segments gives the same answer
            let rep = matching(m, c);
            if let Some(&first) = rep.l.first() {
                for &p in rep.l.iter().filter(|&&p| m[p] == m[first]) {
                    let alt = m.replace(p, Some(m[p].extend_down()));
                    t.check(alt == q(m, c), "q-equal-choice", input, || format!("extending position {p} gives {alt}"));
                }
            }
            if let Some(&last) = rep.s.last() {
                for &p in rep.s.iter().filter(|&&p| m[p] == m[last]) {
                    let alt = m.replace(p, m[p].truncate_begin());
                    t.check(Some(&alt) == s(m, c).as_ref(), "s-equal-choice", input, || {
                        format!("truncating position {p} gives {alt}")
                    });
                }
            }
            let rep = matching_primed(m, c);
            if let Some(&first) = rep.l.first() {
                for &p in rep.l.iter().filter(|&&p| m[p] == m[first]) {
                    let alt = m.replace(p, Some(m[p].extend_up()));
                    t.check(alt == q_primed(m, c), "q-primed-equal-choice", input, || {
                        format!("extending position {p} gives {alt}")
                    });
                }
            }
        }
    }

    fn lsup(&self, m: &Multisegment, t: &mut Tally) {
        // the Jacquet enumeration grows quickly with the degree
        if m.degree() > 8 {
            return;
        }
        let std = StandardProduct::new(Param::Langlands, m.clone());
        for c in self.points() {
            let n = l_sup_formula(m, c, c.line.unit_degree as u64);
            let supp = BTreeSet::from([c]);
            let input = || format!("m = {m}, c = {c}");
            let paired = l_sup(&paired_product_class(m, c), &supp).expect("single-slot vector");
            t.check(paired == n, "paired-product-l-sup", input, || format!("l_sup = {paired}, n l' = {n}"));
            let standard = l_sup_standard(&std, &supp).expect("single-slot vector");
            t.check(standard >= n, "standard-l-sup-bound", input, || format!("l_sup = {standard}, n l' = {n}"));
        }
    }
}

/// Shape of a matching in terms of segments rather than positions, with the
/// primed side reflected so both shapes live on the same side.
#[derive(Debug, PartialEq, Eq)]
struct Shape {
    j: Vec<Segment>,
    pairs: Vec<(Segment, Segment)>,
    l: Vec<Segment>,
    s: Vec<Segment>,
}

fn matching_shape(m: &Multisegment, rep: &MatchingReport, reflect: bool) -> Shape {
    let seg = |p: usize| if reflect { m[p].reflect() } else { m[p] };
    let sorted = |v: &[usize]| {
        let mut out: Vec<Segment> = v.iter().map(|&p| seg(p)).collect();
        out.sort();
        out
    };
    let mut pairs: Vec<(Segment, Segment)> = rep.k.iter().zip(&rep.h).map(|(&k, &h)| (seg(k), seg(h))).collect();
    pairs.sort();
    Shape { j: sorted(&rep.j), pairs, l: rep.l.iter().map(|&p| seg(p)).collect(), s: sorted(&rep.s) }
}

fn cuspidal_pairs() -> Tally {
    let mut t = Tally::default();
    let nu = |x: i64| Segment::of(x, x);
    for (x, reducible) in [(1, true), (2, false)] {
        let m = range_sort([nu(x)]);
        let irr = is_irreducible_with_cuspidal(&m, Point::at(0));
        let unl = unlinked_product_irreducible(&[nu(0), nu(x)]);
        let input = || format!("nu^0 x nu^{x}");
        t.check(irr != reducible, "cuspidal-pair", input, || format!("matching says irreducible = {irr}"));
        t.check(unl != reducible, "cuspidal-pair-linkage", input, || format!("linkage says irreducible = {unl}"));
    }
    t
}

/// Every segment with endpoints in `[lo, hi]`, integral or half-integral.
pub fn window_segments(lo: i64, hi: i64) -> Vec<Segment> {
    let (lo, hi) = (HalfInt::from_int(lo), HalfInt::from_int(hi));
    let mut out = Vec::new();
    for b in half_steps(lo, hi) {
        for e in half_steps(b, hi).step_by(2) {
            out.push(Segment::of(b, e));
        }
    }
    out
}

/// Every preceding pair among [`window_segments`].
pub fn preceding_pairs(lo: i64, hi: i64) -> Vec<(Segment, Segment)> {
    let segs = window_segments(lo, hi);
    let mut out = Vec::new();
    for a in &segs {
        for b in &segs {
            if precedes(a, b) {
                out.push((*a, *b));
            }
        }
    }
    out
}

/// Every ordered pair of window segments: preceding pairs satisfy the
/// vanishing criterion, the others are rejected.
fn lemme2_window(lo: i64, hi: i64) -> Tally {
    let mut t = Tally::default();
    let segs = window_segments(lo, hi);
    for a in &segs {
        for b in &segs {
            let input = || format!("{a}, {b}");
            match lemme2_jac(a, b) {
                Ok(v) => {
                    let adjacent_start = b.b() == a.b() + HalfInt::ONE;
                    t.check(precedes(a, b) && v.is_zero() == adjacent_start, "lemme2", input, || format!("Jac = {v}"));
                }
                Err(e) => t.check(!precedes(a, b), "lemme2-precondition", input, || e.to_string()),
            }
        }
    }
    t
}

fn margin_counts(k_max: u32) -> Tally {
    let mut t = Tally::default();
    for k in 1..=k_max {
        let ones = Composition(vec![1; k as usize]);
        let ms = margin_matrices(&ones, &ones).expect("equal totals");
        let factorial: usize = (1..=k as usize).product();
        t.check(ms.len() == factorial, "margin-count", || format!("k = {k}"), || format!("{} matrices", ms.len()));
        for b in &ms {
            let ok = b.row_sums() == ones.0 && b.col_sums() == ones.0;
            t.check(ok, "margin-sums", || format!("k = {k}"), || format!("{b:?}"));
        }
    }
    t
}

/// All compositions of `total` into `parts` non-negative parts.
pub fn compositions(total: u32, parts: usize) -> Vec<Composition> {
    if parts == 0 {
        return if total == 0 { vec![Composition(Vec::new())] } else { Vec::new() };
    }
    if parts == 1 {
        return vec![Composition(vec![total])];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |rest| {
                let mut v = vec![first];
                v.extend(rest.0);
                Composition(v)
            })
        })
        .collect()
}

fn support_conservation(m: &Multisegment, t: &mut Tally) {
    if m.len() > 3 {
        return;
    }
    let total = m.degree() as u32;
    for tag in [Param::Langlands, Param::Zelevinsky] {
        let std = StandardProduct::new(tag, m.clone());
        let supp = m.support();
        for gamma in compositions(total, 2).into_iter().chain(compositions(total, 3)) {
            let v: GrothVector = jacquet(&std, &gamma).expect("composition matches the degree");
            for (slots, coef) in v.iter() {
                let joined = range_sort(slots.iter().flat_map(|s| s.factors.iter().copied()));
                let degrees_ok = slots.iter().zip(gamma.iter()).all(|(s, &g)| s.degree() == g as u64);
                let ok = coef > 0 && joined.support() == supp && degrees_ok;
                t.check(
                    ok,
                    "support-conservation",
                    || format!("{tag} {m} at {gamma}"),
                    || {
                        let body: Vec<String> = slots.iter().map(|s| s.to_string()).collect();
                        format!("term {coef}*({})", body.join(" | "))
                    },
                );
            }
        }
    }
}

fn prop_cons(m: &Multisegment, t: &mut Tally) {
    if m.len() < 2 || m.len() > 3 {
        return;
    }
    let mut orders: Vec<Vec<Segment>> = permutations(m.segments());
    orders.sort();
    orders.dedup();
    for order in orders {
        for tag in [Param::Langlands, Param::Zelevinsky] {
            if !prop_cons_hypothesis(&order, tag) {
                continue;
            }
            let mult = diagonal_multiplicity(&order, tag);
            t.check(mult == 1, "prop-cons", || format!("{tag} {order:?}"), || format!("multiplicity {mult}"));
        }
    }
}

fn permutations(items: &[Segment]) -> Vec<Vec<Segment>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}
