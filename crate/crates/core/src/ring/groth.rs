//! Elements of the Grothendieck group kept in the basis of standard
//! products, possibly tensored over several slots.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::multisegment::{Multisegment, Param};
use crate::segment::Segment;

/// Class of `⟨Δ_1⟩^t × ⋯ × ⟨Δ_r⟩^t` (or the unprimed analogue). The class
/// only depends on the multiset of factors, so the factors are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardProduct {
    pub tag: Param,
    pub factors: Multisegment,
}

impl StandardProduct {
    pub fn new(tag: Param, factors: Multisegment) -> Self {
        StandardProduct { tag, factors }
    }

    pub fn langlands(factors: impl IntoIterator<Item = Segment>) -> Self {
        StandardProduct { tag: Param::Langlands, factors: factors.into_iter().collect() }
    }

    pub fn zelevinsky(factors: impl IntoIterator<Item = Segment>) -> Self {
        StandardProduct { tag: Param::Zelevinsky, factors: factors.into_iter().collect() }
    }

    pub fn degree(&self) -> u64 {
        self.factors.degree()
    }

    /// Product in the ring: concatenation of factors. Tags must agree.
    pub fn times(&self, other: &StandardProduct) -> StandardProduct {
        debug_assert_eq!(self.tag, other.tag);
        StandardProduct { tag: self.tag, factors: self.factors.union(&other.factors) }
    }
}

impl fmt::Display for StandardProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.factors)
    }
}

impl Serialize for StandardProduct {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub type Slots = Vec<StandardProduct>;

/// Finitely supported integer combination of tensor products of standard
/// classes. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrothVector {
    terms: BTreeMap<Slots, i64>,
}

impl GrothVector {
    pub fn zero() -> Self {
        GrothVector::default()
    }

    pub fn single(slots: Slots) -> Self {
        let mut v = GrothVector::zero();
        v.add_term(slots, 1);
        v
    }

    pub fn add_term(&mut self, slots: Slots, coef: i64) {
        if coef == 0 {
            return;
        }
        let entry = self.terms.entry(slots);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
        }
    }

    pub fn coefficient(&self, slots: &[StandardProduct]) -> i64 {
        self.terms.get(slots).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Slots, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    /// Number of tensor slots when every term agrees; `None` for the zero
    /// vector or a mixed one.
    pub fn arity(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(Vec::len);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Slots) -> bool) -> GrothVector {
        GrothVector { terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, &v)| (k.clone(), v)).collect() }
    }

    /// `self ≤ other`: `other - self` has no negative coefficient.
    pub fn le(&self, other: &GrothVector) -> bool {
        (other.clone() - self.clone()).terms.values().all(|&c| c > 0)
    }

    /// Ring product of two single-slot vectors.
    pub fn times(&self, other: &GrothVector) -> GrothVector {
        let mut out = GrothVector::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                debug_assert!(a.len() == 1 && b.len() == 1);
                out.add_term(vec![a[0].times(&b[0])], ca * cb);
            }
        }
        out
    }

    pub fn scaled(&self, k: i64) -> GrothVector {
        let mut out = GrothVector::zero();
        for (s, &c) in &self.terms {
            out.add_term(s.clone(), c * k);
        }
        out
    }
}

impl From<StandardProduct> for GrothVector {
    fn from(std: StandardProduct) -> Self {
        GrothVector::single(vec![std])
    }
}

impl AddAssign for GrothVector {
    fn add_assign(&mut self, rhs: GrothVector) {
        for (s, c) in rhs.terms {
            self.add_term(s, c);
        }
    }
}

impl Add for GrothVector {
    type Output = GrothVector;
    fn add(mut self, rhs: GrothVector) -> GrothVector {
        self += rhs;
        self
    }
}

impl Neg for GrothVector {
    type Output = GrothVector;
    fn neg(self) -> GrothVector {
        self.scaled(-1)
    }
}

impl Sub for GrothVector {
    type Output = GrothVector;
    fn sub(self, rhs: GrothVector) -> GrothVector {
        self + (-rhs)
    }
}

impl fmt::Display for GrothVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (slots, c)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 {
                "-"
            } else if n > 0 {
                "+"
            } else {
                ""
            };
            if n > 0 {
                f.write_str(" ")?;
            }
            let body: Vec<String> = slots.iter().map(|s| s.to_string()).collect();
            write!(f, "{sign}{}*({})", c.abs(), body.join(" | "))?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermRef<'a> {
    coefficient: i64,
    slots: &'a Slots,
}

impl Serialize for GrothVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (slots, &coefficient) in &self.terms {
            seq.serialize_element(&TermRef { coefficient, slots })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cusp(x: i64) -> StandardProduct {
        StandardProduct::langlands([Segment::of(x, x)])
    }

    #[test]
    fn arithmetic_drops_zeros() {
        let a = GrothVector::single(vec![cusp(0), cusp(1)]);
        let b = GrothVector::single(vec![cusp(1), cusp(0)]);
        let sum = a.clone() + b.clone();
        assert_eq!(sum.len(), 2);
        assert!((sum.clone() - a.clone() - b.clone()).is_zero());
        assert_eq!((a.clone() - a.clone()).len(), 0);
        assert_eq!(sum.coefficient(&[cusp(0), cusp(1)]), 1);
        assert_eq!(sum.arity(), Some(2));
    }

    #[test]
    fn order_is_entrywise() {
        let a = GrothVector::single(vec![cusp(0)]);
        let two_a = a.scaled(2);
        assert!(a.le(&two_a));
        assert!(!two_a.le(&a));
        assert!(GrothVector::zero().le(&a));
        assert!(a.le(&a));
    }

    #[test]
    fn products_commute() {
        let a: GrothVector = cusp(0).into();
        let b: GrothVector = cusp(1).into();
        assert_eq!(a.times(&b), b.times(&a));
        assert_eq!(a.times(&b).to_string(), "1*([1..1]+[0..0])");
    }

    #[test]
    fn display_and_json() {
        let v = GrothVector::single(vec![cusp(0)]) - GrothVector::single(vec![cusp(1)]);
        // canonical order lists the higher segment first
        assert_eq!(v.to_string(), "-1*([1..1]) +1*([0..0])");
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"[{"coefficient":-1,"slots":["[1..1]"]},{"coefficient":1,"slots":["[0..0]"]}]"#);
    }
}
