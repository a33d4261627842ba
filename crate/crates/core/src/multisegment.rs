//! Multisegments in canonical (rangé) order and irreducible parameters.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::point::{HalfInt, Line, Point};
use crate::segment::Segment;

/// A finite multiset of segments, stored sorted by the canonical segment
/// order (line id, then `b` descending, then `e` descending).
///
/// On each line no segment precedes a segment placed after it, so the
/// stored sequence is always a valid rangé ordering.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multisegment {
    items: Vec<Segment>,
}

/// Sorts an arbitrary collection of segments into canonical order.
pub fn range_sort(items: impl IntoIterator<Item = Segment>) -> Multisegment {
    let mut items: Vec<Segment> = items.into_iter().collect();
    items.sort();
    Multisegment { items }
}

impl Multisegment {
    pub fn new() -> Self {
        Multisegment::default()
    }

    pub fn segments(&self) -> &[Segment] {
        &self.items
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Segment> {
        self.items.iter()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.items.iter().map(Segment::degree).sum()
    }

    /// Multiset of all points of all segments.
    pub fn support(&self) -> BTreeMap<Point, usize> {
        let mut out = BTreeMap::new();
        for p in self.items.iter().flat_map(|s| s.points()) {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    /// Distinct lines in order.
    pub fn lines(&self) -> Vec<Line> {
        let mut lines: Vec<Line> = self.items.iter().map(Segment::line).collect();
        lines.dedup();
        lines
    }

    pub fn restrict_to(&self, line: Line) -> Multisegment {
        Multisegment { items: self.items.iter().copied().filter(|s| s.line() == line).collect() }
    }

    /// Multiset sum `self ⊎ other`.
    pub fn union(&self, other: &Multisegment) -> Multisegment {
        range_sort(self.items.iter().chain(other.items.iter()).copied())
    }

    pub fn with(&self, seg: Segment) -> Multisegment {
        let mut items = self.items.clone();
        let at = items.partition_point(|s| *s <= seg);
        items.insert(at, seg);
        Multisegment { items }
    }

    /// Replace the segment at `pos` by `seg` (or drop it when `seg` is `None`).
    pub fn replace(&self, pos: usize, seg: Option<Segment>) -> Multisegment {
        let mut items = self.items.clone();
        items.remove(pos);
        let out = Multisegment { items };
        match seg {
            Some(seg) => out.with(seg),
            None => out,
        }
    }

    pub fn twist(&self, by: HalfInt) -> Multisegment {
        // a uniform shift preserves the canonical order
        Multisegment { items: self.items.iter().map(|s| s.shift(by)).collect() }
    }

    /// Parameter of the contragredient: every `[b..e]` becomes `[-e..-b]`.
    pub fn contragredient(&self) -> Multisegment {
        range_sort(self.items.iter().map(Segment::reflect))
    }

    /// Same as [`Multisegment::contragredient`]; the name used when the map
    /// serves as a mirror between primed and unprimed constructions.
    pub fn reflect(&self) -> Multisegment {
        self.contragredient()
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        range_sort(iter)
    }
}

impl<'a> IntoIterator for &'a Multisegment {
    type Item = &'a Segment;
    type IntoIter = std::slice::Iter<'a, Segment>;
    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

impl std::ops::Index<usize> for Multisegment {
    type Output = Segment;
    fn index(&self, i: usize) -> &Segment {
        &self.items[i]
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.items.is_empty() {
            return f.write_str("0");
        }
        for (k, s) in self.items.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl Serialize for Multisegment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Which classification a multisegment parametrizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    /// `⟨m⟩^t`, the unique quotient of the product of the `⟨Δ⟩^t`.
    Langlands,
    /// `⟨m⟩`, the unique submodule of the product of the `⟨Δ⟩`.
    Zelevinsky,
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Param::Langlands => "langlands",
            Param::Zelevinsky => "zelevinsky",
        })
    }
}

/// An irreducible representation given by its tagged parameter. Equality is
/// equality of tag and multiset.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IrreducibleParam {
    pub param: Param,
    pub m: Multisegment,
}

impl IrreducibleParam {
    pub fn langlands(m: Multisegment) -> Self {
        IrreducibleParam { param: Param::Langlands, m }
    }

    pub fn zelevinsky(m: Multisegment) -> Self {
        IrreducibleParam { param: Param::Zelevinsky, m }
    }
}

impl fmt::Display for IrreducibleParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.param {
            Param::Langlands => write!(f, "<{}>^t", self.m),
            Param::Zelevinsky => write!(f, "<{}>", self.m),
        }
    }
}
