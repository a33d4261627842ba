//! Langlands parameters under the type II theta correspondence, and the
//! commutation of `Q_c` with prepending a descending chain of cuspidals.
//!
//! Everything here lives on the default line with half-integer exponents.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multisegment::{range_sort, Multisegment};
use crate::point::{HalfInt, Point};
use crate::segment::Segment;
use crate::socle::{q_c, q_primed_c};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaQuery {
    pub m: Multisegment,
    /// Degree of the representation.
    pub n: u64,
    /// Index of the lift; at least `n`.
    pub target: u64,
}

/// The singletons `top, top - 1, ...`, `count` of them.
pub fn singleton_chain(top: HalfInt, count: u64) -> Multisegment {
    range_sort((0..count as i64).map(|k| Segment::point(Point::at(top - HalfInt::from_int(k)))))
}

fn check_line(m: &Multisegment) -> Result<()> {
    if m.iter().all(|s| s.line().is_default()) {
        Ok(())
    } else {
        Err(Error::NotOnCharacterLine)
    }
}

/// `θ*_M`: the singletons `(M-2n-1)/2, ..., (-M+1)/2` together with
/// `[(M-n)/2 - e, (M-n)/2 - b]` for every `[b..e]` in the parameter.
pub fn theta_star(q: &ThetaQuery) -> Result<Multisegment> {
    check_line(&q.m)?;
    if q.m.degree() != q.n {
        return Err(Error::DegreeMismatch { expected: q.n, actual: q.m.degree() });
    }
    if q.target < q.n {
        return Err(Error::ThetaIndex { n: q.n, target: q.target });
    }
    let (n, big) = (q.n as i64, q.target as i64);
    let chain = singleton_chain(HalfInt::from_twice(big - 2 * n - 1), (big - n) as u64);
    let shift = HalfInt::from_twice(big - n);
    Ok(chain.union(&q.m.contragredient().twist(shift)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComReport {
    pub lhs: Multisegment,
    pub rhs: Multisegment,
    pub equal: bool,
    pub condition_holds: bool,
}

/// Compares `{b, ..., b-a} ⊎ Q_c(m′)` with `Q_c({b, ..., b-a} ⊎ m′)`, the
/// chain being `a + 1` singletons. Equality is guaranteed when
/// `c ∉ {b, b-a-1}`.
pub fn lemma_com_check(m_prime: &Multisegment, a: u32, b: HalfInt, c: HalfInt) -> ComReport {
    let chain = singleton_chain(b, a as u64 + 1);
    let c_pt = Point::at(c);
    let lhs = chain.union(&q_c(m_prime, c_pt));
    let rhs = q_c(&chain.union(m_prime), c_pt);
    let low = b - HalfInt::from_int(a as i64 + 1);
    ComReport { equal: lhs == rhs, condition_holds: c != b && c != low, lhs, rhs }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombReport {
    pub lhs: Multisegment,
    pub rhs: Multisegment,
    pub equal: bool,
    pub excluded: bool,
}

/// Lifts the socle of `ν^{-c} × π₁` to `θ*_M` in two ways: directly, and as
/// the socle of `ν^{-1/2} θ*_{M-1}(ν^{-1/2} π₁) × ν^{(M-n)/2} ν^{c}`.
/// `n` is the degree of the socle, so `π₁` has degree `n - p`.
pub fn cor_comb_check(m1: &Multisegment, n: u64, target: u64, c: HalfInt, p: u64) -> Result<CombReport> {
    if p != 1 {
        return Err(Error::Unsupported(format!("cuspidal of degree {p}; only degree 1 is handled")));
    }
    check_line(m1)?;
    if m1.degree() + p != n {
        return Err(Error::DegreeMismatch { expected: n - p.min(n), actual: m1.degree() });
    }
    if target < n {
        return Err(Error::ThetaIndex { n, target });
    }
    let half = HalfInt::HALF;
    // socle(ρ × π₁) with ρ = ν^{-c}
    let pi = q_primed_c(m1, Point::at(-c));
    let lhs = theta_star(&ThetaQuery { m: pi, n, target })?;
    let inner = theta_star(&ThetaQuery { m: m1.twist(-half), n: n - 1, target: target - 1 })?.twist(-half);
    let d = HalfInt::from_twice(target as i64 - n as i64) + c;
    let rhs = q_c(&inner, Point::at(d));
    let excluded =
        [HalfInt::from_twice(n as i64 + 1), HalfInt::from_twice(2 * target as i64 - n as i64 + 1)].contains(&-c);
    Ok(CombReport { equal: lhs == rhs, excluded, lhs, rhs })
}

/// Half-integers from `lo` to `hi` inclusive, in steps of one half.
pub fn half_steps(lo: HalfInt, hi: HalfInt) -> impl Iterator<Item = HalfInt> {
    (lo.twice()..=hi.twice()).map(HalfInt::from_twice)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComInstance {
    pub m_prime: Multisegment,
    pub a: u32,
    pub b: HalfInt,
    pub c: HalfInt,
    pub report: ComReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombInstance {
    pub m1: Multisegment,
    pub n: u64,
    pub target: u64,
    pub c: HalfInt,
    pub report: CombReport,
}

/// Outcome of a sweep: how many instances ran, those violating the
/// guarantee, and those outside it where the two sides really differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport<T> {
    pub checked: usize,
    pub violations: Vec<T>,
    pub counterexamples: Vec<T>,
}

pub fn sweep_com(corpus: &[Multisegment], a_max: u32, lo: HalfInt, hi: HalfInt) -> SweepReport<ComInstance> {
    use rayon::prelude::*;
    let instances: Vec<ComInstance> = corpus
        .par_iter()
        .flat_map_iter(|m| {
            (0..=a_max).flat_map(move |a| {
                half_steps(lo, hi).flat_map(move |b| {
                    half_steps(lo, hi).map(move |c| ComInstance {
                        m_prime: m.clone(),
                        a,
                        b,
                        c,
                        report: lemma_com_check(m, a, b, c),
                    })
                })
            })
        })
        .filter(|i| !i.report.equal)
        .collect();
    let checked = corpus.len() * (a_max as usize + 1) * half_steps(lo, hi).count().pow(2);
    let (violations, counterexamples) = instances.into_iter().partition(|i| i.report.condition_holds);
    SweepReport { checked, violations, counterexamples }
}

/// Runs [`cor_comb_check`] with `p = 1` for every `m1`, every `M` from `n`
/// to `n + extra`, and every half-integer `c` in `[lo, hi]`.
pub fn sweep_comb(corpus: &[Multisegment], extra: u64, lo: HalfInt, hi: HalfInt) -> SweepReport<CombInstance> {
    use rayon::prelude::*;
    let all: Vec<Vec<CombInstance>> = corpus
        .par_iter()
        .map(|m1| {
            let n = m1.degree() + 1;
            let mut out = Vec::new();
            for target in n..=n + extra {
                for c in half_steps(lo, hi) {
                    let report =
                        cor_comb_check(m1, n, target, c, 1).expect("inputs built to satisfy the preconditions");
                    out.push(CombInstance { m1: m1.clone(), n, target, c, report });
                }
            }
            out
        })
        .collect();
    let checked = all.iter().map(Vec::len).sum();
    let (violations, counterexamples) =
        all.into_iter().flatten().filter(|i| !i.report.equal).partition(|i| !i.report.excluded);
    SweepReport { checked, violations, counterexamples }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_multisegment;

    fn ms(text: &str) -> Multisegment {
        parse_multisegment(text).unwrap()
    }

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn theta_examples() {
        let q = |m: &str, n, target| theta_star(&ThetaQuery { m: ms(m), n, target }).unwrap();
        assert_eq!(q("[0..0]", 1, 1), ms("[0..0]"));
        assert_eq!(q("0", 0, 2), ms("[1/2..1/2]+[-1/2..-1/2]"));
        assert_eq!(q("[-1/2..1/2]", 2, 4), ms("[1/2..3/2]+[-1/2..-1/2]+[-3/2..-3/2]"));
    }

    #[test]
    fn theta_errors() {
        let q = |m: &str, n, target| theta_star(&ThetaQuery { m: ms(m), n, target });
        assert_eq!(q("[0..1]", 2, 1), Err(Error::ThetaIndex { n: 2, target: 1 }));
        assert_eq!(q("[0..1]", 3, 4), Err(Error::DegreeMismatch { expected: 3, actual: 2 }));
        assert_eq!(q("[0..1]@1", 2, 4), Err(Error::NotOnCharacterLine));
    }

    #[test]
    fn theta_degree_and_equal_index() {
        for text in ["0", "[0..1]", "[0..0]+[1/2..3/2]", "[-2..0]+[1..1]"] {
            let m = ms(text);
            let n = m.degree();
            for target in n..n + 4 {
                assert_eq!(theta_star(&ThetaQuery { m: m.clone(), n, target }).unwrap().degree(), target);
            }
            assert_eq!(theta_star(&ThetaQuery { m: m.clone(), n, target: n }).unwrap(), m.contragredient());
        }
    }

    #[test]
    fn com_examples() {
        let r = lemma_com_check(&ms("0"), 0, h(4), h(0));
        assert_eq!((r.lhs.clone(), r.equal, r.condition_holds), (ms("[0..0]+[2..2]"), true, true));
        let r = lemma_com_check(&ms("0"), 0, h(0), h(-2));
        assert_eq!(r.lhs, ms("[-1..-1]+[0..0]"));
        assert_eq!(r.rhs, ms("[-1..0]"));
        assert!(!r.equal && !r.condition_holds);
        let r = lemma_com_check(&ms("[5..6]"), 1, h(2), h(18));
        assert!(r.equal && r.condition_holds);
    }

    #[test]
    fn chain_is_made_of_singletons() {
        // with a single segment [0..1] in place of the chain {1},{0} the two
        // sides would differ here although c = 0 avoids {1, -1}
        let r = lemma_com_check(&ms("[1..3]"), 1, h(2), h(0));
        assert!(r.condition_holds && r.equal);
        let seg = ms("[0..1]");
        assert_ne!(seg.union(&q_c(&ms("[1..3]"), Point::at(0))), q_c(&seg.union(&ms("[1..3]")), Point::at(0)));
    }

    #[test]
    fn comb_degenerate_cuspidal() {
        // π₁ trivial, π = ρ
        for c in half_steps(h(-6), h(6)) {
            for target in 1..4 {
                let r = cor_comb_check(&ms("0"), 1, target, c, 1).unwrap();
                assert!(r.equal || r.excluded, "c = {c}, M = {target}: {r:?}");
            }
        }
    }

    #[test]
    fn comb_rejects_general_degree() {
        assert!(matches!(cor_comb_check(&ms("0"), 2, 2, h(0), 2), Err(Error::Unsupported(_))));
        assert!(matches!(cor_comb_check(&ms("[0..1]"), 2, 3, h(0), 1), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn small_sweeps() {
        let corpus = [ms("0"), ms("[0..0]"), ms("[0..1]"), ms("[1..1]+[0..0]")];
        let com = sweep_com(&corpus, 2, h(-4), h(4));
        assert!(com.violations.is_empty(), "{:?}", com.violations.first());
        assert!(!com.counterexamples.is_empty());
        let comb = sweep_comb(&corpus[..3], 2, h(-4), h(4));
        assert!(comb.violations.is_empty(), "{:?}", comb.violations.first());
    }
}
