//! Segments `[b..e]` on a cuspidal line and the relations between them.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::point::{HalfInt, Line, Point};

/// The segment `{ν_ρ^b ρ, ..., ν_ρ^e ρ}`. Never empty: `e - b` is a
/// non-negative integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    line: Line,
    b: HalfInt,
    e: HalfInt,
}

impl Segment {
    pub fn new(line: Line, b: HalfInt, e: HalfInt) -> Result<Self> {
        match e.steps_from(b) {
            Some(d) if d >= 0 => Ok(Segment { line, b, e }),
            _ => Err(Error::BadSegment { b: b.to_string(), e: e.to_string() }),
        }
    }

    /// `[b..e]` on the default line. Panics on an invalid segment.
    pub fn of(b: impl Into<HalfInt>, e: impl Into<HalfInt>) -> Self {
        Segment::new(Line::DEFAULT, b.into(), e.into()).expect("invalid segment")
    }

    /// The singleton `{c}`.
    pub fn point(c: Point) -> Self {
        Segment { line: c.line, b: c.x, e: c.x }
    }

    pub fn line(&self) -> Line {
        self.line
    }

    pub fn b(&self) -> HalfInt {
        self.b
    }

    pub fn e(&self) -> HalfInt {
        self.e
    }

    pub fn begin(&self) -> Point {
        Point::new(self.line, self.b)
    }

    pub fn end(&self) -> Point {
        Point::new(self.line, self.e)
    }

    /// Number of points.
    pub fn len(&self) -> u64 {
        (self.e.steps_from(self.b).unwrap() + 1) as u64
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn degree(&self) -> u64 {
        self.len() * self.line.unit_degree as u64
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.len() as i64).map(move |k| Point::new(self.line, self.b + HalfInt::from_int(k)))
    }

    pub fn contains(&self, p: Point) -> bool {
        p.line == self.line && p.x.steps_from(self.b).is_some() && self.b <= p.x && p.x <= self.e
    }

    /// Inclusion of point sets.
    pub fn includes(&self, other: &Segment) -> bool {
        self.same_class(other) && self.b <= other.b && other.e <= self.e
    }

    /// Same line and exponents differing by an integer, i.e. both segments
    /// live on one chain `{ν_ρ^t ρ : t ∈ x + ℤ}`.
    pub fn same_class(&self, other: &Segment) -> bool {
        self.line == other.line && self.b.steps_from(other.b).is_some()
    }

    pub fn shift(&self, by: HalfInt) -> Segment {
        Segment { line: self.line, b: self.b + by, e: self.e + by }
    }

    /// `[b..e] ↦ [-e..-b]`, the segment of the contragredient.
    pub fn reflect(&self) -> Segment {
        Segment { line: self.line, b: -self.e, e: -self.b }
    }

    /// `⁺Δ`: prepend the point below the beginning.
    pub fn extend_down(&self) -> Segment {
        Segment { line: self.line, b: self.b - HalfInt::ONE, e: self.e }
    }

    /// `⁻Δ`: drop the beginning point. `None` for a singleton.
    pub fn truncate_begin(&self) -> Option<Segment> {
        (self.b < self.e).then(|| Segment { line: self.line, b: self.b + HalfInt::ONE, e: self.e })
    }

    /// Append the point above the end.
    pub fn extend_up(&self) -> Segment {
        Segment { line: self.line, b: self.b, e: self.e + HalfInt::ONE }
    }

    /// Drop the end point. `None` for a singleton.
    pub fn truncate_end(&self) -> Option<Segment> {
        (self.b < self.e).then(|| Segment { line: self.line, b: self.b, e: self.e - HalfInt::ONE })
    }

    /// Split into `(top, bottom)` where `top` holds the highest `k` points.
    pub(crate) fn split_top(&self, k: u64) -> (Option<Segment>, Option<Segment>) {
        let n = self.len();
        debug_assert!(k <= n);
        let cut = self.e - HalfInt::from_int(k as i64);
        let top = (k > 0).then(|| Segment { line: self.line, b: cut + HalfInt::ONE, e: self.e });
        let bottom = (k < n).then_some(Segment { line: self.line, b: self.b, e: cut });
        (top, bottom)
    }

    /// Split into `(bottom, top)` where `bottom` holds the lowest `k` points.
    pub(crate) fn split_bottom(&self, k: u64) -> (Option<Segment>, Option<Segment>) {
        let (top, bottom) = self.split_top(self.len() - k);
        (bottom, top)
    }
}

/// Two segments are linked when their union is a segment and neither
/// contains the other. Segments on different lines are never linked.
pub fn linked(a: &Segment, b: &Segment) -> bool {
    if !a.same_class(b) {
        return false;
    }
    let contiguous = a.b.max(b.b) <= a.e.min(b.e) + HalfInt::ONE;
    contiguous && !a.includes(b) && !b.includes(a)
}

/// `a` precedes `b`: linked, and `b` starts one step after a point of `a`.
pub fn precedes(a: &Segment, b: &Segment) -> bool {
    linked(a, b) && a.b < b.b
}

/// The order `a ≥ b` on segments of one line: `a` begins later, or both
/// begin together and `a` is at least as long.
pub fn segment_ge(a: &Segment, b: &Segment) -> Result<bool> {
    if a.line != b.line {
        return Err(Error::LineMismatch(*a, *b));
    }
    Ok(a.b > b.b || (a.b == b.b && a.e >= b.e))
}

/// `(Δ ∪ Δ′, Δ ∩ Δ′)` for linked segments; the intersection is `None` when
/// the two are adjacent but disjoint.
pub fn union_intersection(a: &Segment, b: &Segment) -> Result<(Segment, Option<Segment>)> {
    if !linked(a, b) {
        return Err(Error::NotLinked(*a, *b));
    }
    let union = Segment { line: a.line, b: a.b.min(b.b), e: a.e.max(b.e) };
    let (lo, hi) = (a.b.max(b.b), a.e.min(b.e));
    let inter = (lo <= hi).then_some(Segment { line: a.line, b: lo, e: hi });
    Ok((union, inter))
}

/// Canonical order: lines by id, then `b` descending, then `e` descending.
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.line.cmp(&other.line).then_with(|| other.b.cmp(&self.b)).then_with(|| other.e.cmp(&self.e))
    }
}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.b, self.e)?;
        if !self.line.is_default() {
            write!(f, "@{}", self.line)?;
        }
        Ok(())
    }
}

impl Serialize for Segment {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(b: i64, e: i64) -> Segment {
        Segment::of(b, e)
    }

    #[test]
    fn linked_examples() {
        assert!(linked(&s(0, 1), &s(1, 2)));
        assert!(!linked(&s(0, 3), &s(1, 2)));
        assert!(!linked(&s(0, 0), &s(2, 3)));
        assert!(linked(&s(0, 0), &s(1, 1)));
        let other = Segment::new(Line::new(1, 1).unwrap(), 1.into(), 2.into()).unwrap();
        assert!(!linked(&s(0, 1), &other));
        // ν^0 and ν^{1/2} never link
        let half = Segment::new(Line::DEFAULT, HalfInt::HALF, HalfInt::from_twice(3)).unwrap();
        assert!(!linked(&s(0, 1), &half));
    }

    #[test]
    fn precedes_examples() {
        assert!(precedes(&s(0, 1), &s(1, 2)));
        assert!(!precedes(&s(1, 2), &s(0, 1)));
        assert!(!precedes(&s(0, 1), &s(0, 1)));
        assert!(precedes(&s(0, 0), &s(1, 3)));
    }

    #[test]
    fn order_examples() {
        assert!(segment_ge(&s(2, 2), &s(0, 5)).unwrap());
        assert!(segment_ge(&s(0, 5), &s(0, 2)).unwrap());
        assert!(!segment_ge(&s(0, 2), &s(1, 1)).unwrap());
        let other = Segment::new(Line::new(3, 2).unwrap(), 0.into(), 0.into()).unwrap();
        assert!(segment_ge(&s(0, 0), &other).is_err());
    }

    #[test]
    fn union_intersection_examples() {
        assert_eq!(union_intersection(&s(0, 1), &s(1, 2)).unwrap(), (s(0, 2), Some(s(1, 1))));
        assert_eq!(union_intersection(&s(0, 1), &s(2, 3)).unwrap(), (s(0, 3), None));
        assert!(union_intersection(&s(0, 2), &s(1, 1)).is_err());
    }

    #[test]
    fn empty_segment_rejected() {
        assert!(Segment::new(Line::DEFAULT, 2.into(), 0.into()).is_err());
        assert!(Segment::new(Line::DEFAULT, 0.into(), HalfInt::HALF).is_err());
    }

    #[test]
    fn splits() {
        assert_eq!(s(0, 2).split_top(1), (Some(s(2, 2)), Some(s(0, 1))));
        assert_eq!(s(0, 2).split_top(0), (None, Some(s(0, 2))));
        assert_eq!(s(0, 2).split_bottom(3), (Some(s(0, 2)), None));
        assert_eq!(s(0, 2).split_bottom(1), (Some(s(0, 0)), Some(s(1, 2))));
    }

    #[test]
    fn degree_counts_unit() {
        let l = Line::new(2, 3).unwrap();
        let seg = Segment::new(l, 0.into(), 1.into()).unwrap();
        assert_eq!(seg.degree(), 6);
        assert_eq!(seg.to_string(), "[0..1]@2:3");
    }
}
