//! Jacquet restrictions of standard products through the geometric lemma,
//! support filters, and the invariants built on them.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::matching::matching;
use crate::multisegment::{range_sort, Multisegment, Param};
use crate::point::Point;
use crate::segment::{precedes, union_intersection, Segment};

use super::groth::{GrothVector, Slots, StandardProduct};
use super::margin::{margin_matrices, Composition};

/// Cuts `seg` into consecutive pieces of the given degrees, one per slot.
/// Langlands factors hand their top piece to the first slot, Zelevinsky
/// factors their bottom piece. `None` if a degree is not a multiple of the
/// line's unit.
fn split_segment(seg: &Segment, tag: Param, degrees: &[u32]) -> Option<Vec<Option<Segment>>> {
    let unit = seg.line().unit_degree as u64;
    let mut rest = Some(*seg);
    let mut pieces = Vec::with_capacity(degrees.len());
    for &d in degrees {
        let d = d as u64;
        if !d.is_multiple_of(unit) {
            return None;
        }
        let k = d / unit;
        if k == 0 {
            pieces.push(None);
            continue;
        }
        let cur = rest?;
        let (piece, remaining) = match tag {
            Param::Langlands => cur.split_top(k),
            Param::Zelevinsky => cur.split_bottom(k),
        };
        pieces.push(piece);
        rest = remaining;
    }
    Some(pieces)
}

/// `r_γ(⟨Δ_1⟩^t × ⋯ × ⟨Δ_r⟩^t)` as a sum over margin matrices, one term each.
pub fn jacquet(std: &StandardProduct, gamma: &Composition) -> Result<GrothVector> {
    let total = std.degree();
    if gamma.total() != total {
        return Err(Error::IncompatibleComposition { composition: gamma.to_vec(), total });
    }
    let factors = std.factors.segments();
    let beta: Composition = factors.iter().map(|s| s.degree() as u32).collect::<Vec<_>>().into();
    let mut out = GrothVector::zero();
    'matrices: for b in margin_matrices(&beta, gamma)? {
        let mut columns: Vec<Vec<Segment>> = vec![Vec::new(); gamma.len()];
        for (i, seg) in factors.iter().enumerate() {
            let Some(pieces) = split_segment(seg, std.tag, b.row(i)) else {
                continue 'matrices;
            };
            for (j, piece) in pieces.into_iter().enumerate() {
                columns[j].extend(piece);
            }
        }
        let slots = columns.into_iter().map(|c| StandardProduct::new(std.tag, range_sort(c))).collect();
        out.add_term(slots, 1);
    }
    Ok(out)
}

/// Linear extension of [`jacquet`] to single-slot vectors.
pub fn jacquet_vector(v: &GrothVector, gamma: &Composition) -> Result<GrothVector> {
    let mut out = GrothVector::zero();
    for (slots, c) in v.iter() {
        if slots.len() != 1 {
            return Err(Error::Arity { expected: 1, found: slots.len() });
        }
        out += jacquet(&slots[0], gamma)?.scaled(c);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FilterSide {
    Left,
    Right,
}

/// Keeps the terms of a two-slot vector whose `side` slot has cuspidal
/// support exactly `end_support` (as a multiset).
pub fn jac_filter(v: &GrothVector, end_support: &BTreeMap<Point, usize>, side: FilterSide) -> Result<GrothVector> {
    if let Some((slots, _)) = v.iter().find(|(s, _)| s.len() != 2) {
        return Err(Error::Arity { expected: 2, found: slots.len() });
    }
    let idx = match side {
        FilterSide::Left => 0,
        FilterSide::Right => 1,
    };
    Ok(v.filter(|slots| slots[idx].factors.support() == *end_support))
}

/// Coefficient of `target` in `jacquet(std, gamma)`; the target slots carry
/// the tag of `std`.
pub fn multiplicity(std: &StandardProduct, target: &[Multisegment], gamma: &Composition) -> Result<i64> {
    if target.len() != gamma.len() {
        return Err(Error::Arity { expected: gamma.len(), found: target.len() });
    }
    let slots: Slots = target.iter().map(|m| StandardProduct::new(std.tag, m.clone())).collect();
    Ok(jacquet(std, gamma)?.coefficient(&slots))
}

/// `Jac̄_b(⟨Δ, Δ′⟩^t)` in the Grothendieck group, computed as the filtered
/// restriction of `⟨Δ⟩^t × ⟨Δ′⟩^t` minus that of `⟨Δ∪Δ′⟩^t × ⟨Δ∩Δ′⟩^t`.
pub fn lemme2_jac(delta: &Segment, delta_p: &Segment) -> Result<GrothVector> {
    if !precedes(delta, delta_p) {
        return Err(Error::NotPreceding(*delta, *delta_p));
    }
    let (union, inter) = union_intersection(delta, delta_p)?;
    let whole = StandardProduct::langlands([*delta, *delta_p]);
    let sub = StandardProduct::langlands(std::iter::once(union).chain(inter));
    let n = delta.line().unit_degree;
    let total = whole.degree() as u32;
    let gamma = Composition::from([total - n, n]);
    let tail = BTreeMap::from([(delta.begin(), 1)]);
    let filtered =
        |s: &StandardProduct| -> Result<GrothVector> { jac_filter(&jacquet(s, &gamma)?, &tail, FilterSide::Right) };
    Ok(filtered(&whole)? - filtered(&sub)?)
}

/// Largest `i` such that the restriction of `v` to `(total - i, i)` has a
/// non-zero part whose right slot is supported inside `support`.
pub fn l_sup(v: &GrothVector, support: &BTreeSet<Point>) -> Result<u64> {
    let Some((slots, _)) = v.iter().next() else {
        return Ok(0);
    };
    if slots.len() != 1 {
        return Err(Error::Arity { expected: 1, found: slots.len() });
    }
    let total = slots[0].degree();
    for i in (0..=total).rev() {
        let gamma = Composition::from([(total - i) as u32, i as u32]);
        let part = jacquet_vector(v, &gamma)?.filter(|s| s[1].factors.support().keys().all(|p| support.contains(p)));
        if !part.is_zero() {
            return Ok(i);
        }
    }
    Ok(0)
}

pub fn l_sup_standard(std: &StandardProduct, support: &BTreeSet<Point>) -> Result<u64> {
    l_sup(&GrothVector::from(std.clone()), support)
}

/// Class of `⟨a, b⟩^t` for `a` preceding `b`:
/// `⟨a⟩^t × ⟨b⟩^t − ⟨a∪b⟩^t × ⟨a∩b⟩^t`.
pub fn linked_pair_class(a: &Segment, b: &Segment) -> Result<GrothVector> {
    if !precedes(a, b) {
        return Err(Error::NotPreceding(*a, *b));
    }
    let (union, inter) = union_intersection(a, b)?;
    Ok(GrothVector::from(StandardProduct::langlands([*a, *b]))
        - GrothVector::from(StandardProduct::langlands(std::iter::once(union).chain(inter))))
}

/// `V_1 × ⋯ × V_r` for the matching of `m` at `c`: matched pairs become
/// `⟨Δ_k, Δ_h⟩^t`, every other segment stays `⟨Δ⟩^t`.
pub fn paired_product_class(m: &Multisegment, c: Point) -> GrothVector {
    let rep = matching(m, c);
    let partner: BTreeMap<usize, usize> = rep.h.iter().copied().zip(rep.k.iter().copied()).collect();
    let mut acc = GrothVector::from(StandardProduct::langlands([]));
    for (p, seg) in m.iter().enumerate() {
        if rep.k.contains(&p) {
            continue;
        }
        let v = match partner.get(&p) {
            Some(&k) => linked_pair_class(&m[k], seg).expect("matched segments precede"),
            None => StandardProduct::langlands([*seg]).into(),
        };
        acc = acc.times(&v);
    }
    acc
}

/// Whether the ordered factors `⟨Δ_1⟩ × ⋯ × ⟨Δ_r⟩` meet the support
/// hypothesis that forces `Δ_1 ⊗ ⋯ ⊗ Δ_r` to occur once in the
/// restriction: for every two-piece split of every factor (the trivial
/// splits included), the first piece escapes the support of the factors
/// before it or the second escapes the support of those after it.
pub fn prop_cons_hypothesis(factors: &[Segment], tag: Param) -> bool {
    let supp = |segs: &[Segment]| -> BTreeSet<Point> { segs.iter().flat_map(|s| s.points()).collect() };
    let escapes = |piece: Option<Segment>, around: &BTreeSet<Point>| match piece {
        Some(p) => p.points().any(|x| !around.contains(&x)),
        None => false,
    };
    factors.iter().enumerate().all(|(i, seg)| {
        let before = supp(&factors[..i]);
        let after = supp(&factors[i + 1..]);
        (0..=seg.len()).all(|k| {
            let (first, second) = match tag {
                Param::Langlands => seg.split_top(k),
                Param::Zelevinsky => seg.split_bottom(k),
            };
            escapes(first, &before) || escapes(second, &after)
        })
    })
}

/// Multiplicity of `Δ_1 ⊗ ⋯ ⊗ Δ_r` in the restriction of the product to
/// the composition of its factor degrees.
pub fn diagonal_multiplicity(factors: &[Segment], tag: Param) -> i64 {
    let std = StandardProduct::new(tag, factors.iter().copied().collect());
    let target: Vec<Multisegment> = factors.iter().map(|s| range_sort([*s])).collect();
    let beta: Composition = factors.iter().map(|s| s.degree() as u32).collect::<Vec<_>>().into();
    multiplicity(&std, &target, &beta).expect("shapes agree by construction")
}
