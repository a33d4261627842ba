//! Greedy matching of segments starting at `c` against segments starting at
//! `c + 1` (and the mirror version on ends), with the derived index families.
//!
//! Positions are indices into the canonical order of the multisegment. Only
//! segments on the line of `c` take part.

use serde::Serialize;

use crate::multisegment::Multisegment;
use crate::point::Point;
use crate::segment::{precedes, Segment};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingReport {
    pub c: Point,
    /// `false` for the matching on beginnings, `true` for the mirror on ends.
    pub primed: bool,
    /// Segments beginning (ending) at `c`, ascending positions, i.e. in
    /// decreasing segment order.
    pub j: Vec<usize>,
    /// Partner of each `j` entry; `None` when unmatched.
    pub i: Vec<Option<usize>>,
    /// Matched `j` positions, ascending.
    pub k: Vec<usize>,
    /// Partners of `k`, in the same order.
    pub h: Vec<usize>,
    /// Free segments beginning at `c + 1` (ending at `c - 1`). The first entry
    /// is the longest one, the segment the creation operator extends.
    pub l: Vec<usize>,
    /// Unmatched `j` positions, ascending.
    pub s: Vec<usize>,
    pub t: usize,
    pub w: usize,
    pub u: usize,
    pub l_prime: usize,
}

impl MatchingReport {
    fn assemble(c: Point, primed: bool, j: Vec<usize>, i: Vec<Option<usize>>, mut l: Vec<usize>) -> Self {
        let (mut k, mut h, mut s) = (Vec::new(), Vec::new(), Vec::new());
        for (&jp, ip) in j.iter().zip(&i) {
            match ip {
                Some(q) => {
                    k.push(jp);
                    h.push(*q);
                }
                None => s.push(jp),
            }
        }
        if primed {
            l.reverse();
        }
        let (t, w, u) = (j.len(), k.len(), l.len());
        MatchingReport { c, primed, j, i, k, h, l, s, t, w, u, l_prime: t - w }
    }
}

fn positions(m: &Multisegment, pred: impl Fn(&Segment) -> bool) -> Vec<usize> {
    m.iter().enumerate().filter(|(_, s)| pred(s)).map(|(p, _)| p).collect()
}

/// Matching on beginnings.
///
/// Segments beginning at `c` are taken longest first; each is paired with
/// the unused segment beginning at `c + 1` that it precedes and that sits
/// furthest down the canonical order (the shortest such segment).
pub fn matching(m: &Multisegment, c: Point) -> MatchingReport {
    let j = positions(m, |s| s.begin() == c);
    let cands = positions(m, |s| s.begin() == c.next());
    let mut used = vec![false; cands.len()];
    let i = j
        .iter()
        .map(|&jp| {
            let pick = (0..cands.len()).rev().find(|&q| !used[q] && precedes(&m[jp], &m[cands[q]]))?;
            used[pick] = true;
            Some(cands[pick])
        })
        .collect();
    let free = cands.iter().zip(&used).filter(|(_, &u)| !u).map(|(&p, _)| p).collect();
    MatchingReport::assemble(c, false, j, i, free)
}

/// Matching on ends.
///
/// Segments ending at `c` are taken from the last position backwards
/// (longest first); each is paired with the unused segment ending at `c - 1`
/// that precedes it and has the smallest position (the shortest such segment).
pub fn matching_primed(m: &Multisegment, c: Point) -> MatchingReport {
    let j = positions(m, |s| s.end() == c);
    let cands = positions(m, |s| s.end() == c.prev());
    let mut used = vec![false; cands.len()];
    let mut i = vec![None; j.len()];
    for (slot, &jp) in j.iter().enumerate().rev() {
        if let Some(q) = (0..cands.len()).find(|&q| !used[q] && precedes(&m[cands[q]], &m[jp])) {
            used[q] = true;
            i[slot] = Some(cands[q]);
        }
    }
    let free = cands.iter().zip(&used).filter(|(_, &u)| !u).map(|(&p, _)| p).collect();
    MatchingReport::assemble(c, true, j, i, free)
}

/// Parameters that may occur as irreducible submodules of `⟨m⟩^t × ν^c`:
/// `m + {c}` first, then `⁺Δ` for every free segment `Δ` beginning at `c + 1`.
pub fn candidates_socle(m: &Multisegment, c: Point) -> Vec<Multisegment> {
    let rep = matching(m, c);
    std::iter::once(m.with(Segment::point(c)))
        .chain(rep.l.iter().map(|&p| m.replace(p, Some(m[p].extend_down()))))
        .collect()
}

/// Quotient analogue: `m + {c}`, then every free segment ending at `c - 1`
/// extended up to `c`.
pub fn candidates_quotient(m: &Multisegment, c: Point) -> Vec<Multisegment> {
    let rep = matching_primed(m, c);
    std::iter::once(m.with(Segment::point(c)))
        .chain(rep.l.iter().map(|&p| m.replace(p, Some(m[p].extend_up()))))
        .collect()
}
