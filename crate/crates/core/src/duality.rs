//! The Zelevinsky involution on multisegments.
//!
//! If `ν^c` is the highest beginning on some line of `m`, every segment
//! beginning there is unmatched, so `⟨m⟩^t` is the socle of
//! `⟨S_c m⟩^t × ν^c`. Passing to Zelevinsky parameters turns that socle into
//! `Q′_c`, which gives `dual(m) = Q′_c(dual(S_c m))`.

use serde::Serialize;

use crate::matching::matching;
use crate::multisegment::Multisegment;
use crate::point::Point;
use crate::socle::{q_c, q_primed_c, s_c};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualStep {
    pub c: Point,
    /// `S_c` of the multisegment at this stage.
    pub peeled: Multisegment,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualTrace {
    pub steps: Vec<DualStep>,
    pub result: Multisegment,
}

impl DualTrace {
    /// Rebuilds the input by applying `Q_c` to each peeled stage.
    pub fn replay_input(&self) -> Multisegment {
        match self.steps.first() {
            Some(step) => q_c(&step.peeled, step.c),
            None => Multisegment::new(),
        }
    }

    /// Rebuilds the result by applying `Q′_c` from the innermost step out.
    pub fn replay_result(&self) -> Multisegment {
        self.steps.iter().rev().fold(Multisegment::new(), |acc, step| q_primed_c(&acc, step.c))
    }
}

/// The highest beginning on the first line of `m`.
fn top_point(m: &Multisegment) -> Option<Point> {
    let first = m.segments().first()?;
    // canonical order puts the largest beginning of a line first
    Some(first.begin())
}

pub fn dual(m: &Multisegment) -> Multisegment {
    dual_with_trace(m).result
}

pub fn dual_with_trace(m: &Multisegment) -> DualTrace {
    dual_by(m, |rest, _| top_point(rest).expect("non-empty"))
}

/// The involution computed with a caller-chosen peeling point at each stage.
///
/// `choose` receives the current multisegment and every point at which `S_c`
/// is defined (the beginnings of its segments carrying an unmatched segment)
/// and returns one of them. Every choice yields the same result.
pub fn dual_by(m: &Multisegment, mut choose: impl FnMut(&Multisegment, &[Point]) -> Point) -> DualTrace {
    let mut steps = Vec::new();
    let mut current = m.clone();
    while !current.is_empty() {
        let options = peel_points(&current);
        let c = choose(&current, &options);
        let peeled = s_c(&current, c).expect("peeling point must carry an unmatched segment");
        steps.push(DualStep { c, peeled: peeled.clone() });
        current = peeled;
    }
    let result = steps.iter().rev().fold(Multisegment::new(), |acc, step| q_primed_c(&acc, step.c));
    DualTrace { steps, result }
}

/// Points `c` with `l′(m, c) ≥ 1`.
pub fn peel_points(m: &Multisegment) -> Vec<Point> {
    let mut out: Vec<Point> = m.iter().map(|s| s.begin()).collect();
    out.dedup();
    out.retain(|&c| matching(m, c).l_prime > 0);
    out
}
