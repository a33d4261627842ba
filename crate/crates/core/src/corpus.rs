//! Exhaustive, ordered enumeration of small multisegments.

use serde::Serialize;

use crate::multisegment::{range_sort, Multisegment};
use crate::point::{HalfInt, Line};
use crate::segment::Segment;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    /// Integer window `[lo, hi]` containing every point.
    pub lo: i64,
    pub hi: i64,
    pub max_segments: usize,
    pub max_multiplicity: usize,
    /// Lines `0, 1, ...` (all of unit degree 1).
    pub line_count: u32,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec { lo: 0, hi: 4, max_segments: 4, max_multiplicity: 2, line_count: 1 }
    }
}

impl CorpusSpec {
    pub fn window(lo: i64, hi: i64) -> Self {
        CorpusSpec { lo, hi, ..CorpusSpec::default() }
    }

    /// Every segment inside the window: by line, then by length, then by
    /// beginning.
    pub fn segments(&self) -> Vec<Segment> {
        let mut out = Vec::new();
        for id in 0..self.line_count {
            let line = Line { id, unit_degree: 1 };
            for len in 0..=(self.hi - self.lo) {
                for b in self.lo..=self.hi - len {
                    let seg = Segment::new(line, HalfInt::from_int(b), HalfInt::from_int(b + len));
                    out.push(seg.expect("window segments are well formed"));
                }
            }
        }
        out
    }
}

/// All multisegments allowed by `spec`, by number of segments and then in
/// lexicographic order of the segment list of [`CorpusSpec::segments`].
pub fn enumerate_corpus(spec: &CorpusSpec) -> Vec<Multisegment> {
    let segs = spec.segments();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    for size in 0..=spec.max_segments {
        combos(&segs, size, 0, spec.max_multiplicity, &mut pick, &mut out);
    }
    out
}

fn combos(
    segs: &[Segment],
    size: usize,
    from: usize,
    max_mult: usize,
    pick: &mut Vec<usize>,
    out: &mut Vec<Multisegment>,
) {
    if pick.len() == size {
        out.push(range_sort(pick.iter().map(|&i| segs[i])));
        return;
    }
    for i in from..segs.len() {
        let repeats = pick.iter().rev().take_while(|&&p| p == i).count();
        if repeats >= max_mult {
            continue;
        }
        pick.push(i);
        combos(segs, size, i, max_mult, pick, out);
        pick.pop();
    }
}
