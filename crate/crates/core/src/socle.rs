//! Creation and annihilation operators at a cuspidal point, socles and
//! cosocles of products with a cuspidal, and the irreducibility criteria.

use serde::Serialize;

use crate::matching::{matching, matching_primed};
use crate::multisegment::{IrreducibleParam, Multisegment, Param};
use crate::point::Point;
use crate::segment::{linked, Segment};

/// `Q_c`: the Langlands parameter of the socle of `⟨m⟩^t × ν^c`.
///
/// Extends the longest free segment beginning at `c + 1` down to `c`, or
/// adjoins `{c}` when there is none.
pub fn q_c(m: &Multisegment, c: Point) -> Multisegment {
    let rep = matching(m, c);
    match rep.l.first() {
        Some(&p) => m.replace(p, Some(m[p].extend_down())),
        None => m.with(Segment::point(c)),
    }
}

/// `S_c`, the left inverse of `Q_c`. `None` when `m` is not in the image of
/// `Q_c` (no unmatched segment begins at `c`).
pub fn s_c(m: &Multisegment, c: Point) -> Option<Multisegment> {
    let rep = matching(m, c);
    let &p = rep.s.last()?;
    Some(m.replace(p, m[p].truncate_begin()))
}

/// `Q′_c`: the Langlands parameter of the cosocle of `⟨m⟩^t × ν^c`.
pub fn q_primed_c(m: &Multisegment, c: Point) -> Multisegment {
    let rep = matching_primed(m, c);
    match rep.l.first() {
        Some(&p) => m.replace(p, Some(m[p].extend_up())),
        None => m.with(Segment::point(c)),
    }
}

/// `Q′_c` computed through the contragredient: `reflect ∘ Q_{-c} ∘ reflect`.
pub fn q_primed_by_reflection(m: &Multisegment, c: Point) -> Multisegment {
    let mirrored = Point::new(c.line, -c.x);
    q_c(&m.reflect(), mirrored).reflect()
}

/// Position of the cuspidal factor in the product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// `π × ρ`
    CuspidalRight,
    /// `ρ × π`
    CuspidalLeft,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Socle,
    Cosocle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleQuery {
    pub pi: IrreducibleParam,
    pub rho: Point,
    pub side: Side,
    pub mode: Mode,
}

/// Which of the two operators answers a query.
fn uses_q(param: Param, side: Side, mode: Mode) -> bool {
    use {Mode::*, Param::*, Side::*};
    match (param, side, mode) {
        // socle(⟨m⟩^t × ρ) = cosocle(ρ × ⟨m⟩^t) = ⟨Q_c m⟩^t
        (Langlands, CuspidalRight, Socle) | (Langlands, CuspidalLeft, Cosocle) => true,
        // cosocle(⟨m⟩^t × ρ) = socle(ρ × ⟨m⟩^t) = ⟨Q′_c m⟩^t
        (Langlands, CuspidalRight, Cosocle) | (Langlands, CuspidalLeft, Socle) => false,
        // socle(ρ × ⟨m⟩) = cosocle(⟨m⟩ × ρ) = ⟨Q_c m⟩
        (Zelevinsky, CuspidalLeft, Socle) | (Zelevinsky, CuspidalRight, Cosocle) => true,
        // socle(⟨m⟩ × ρ) = cosocle(ρ × ⟨m⟩) = ⟨Q′_c m⟩
        (Zelevinsky, CuspidalRight, Socle) | (Zelevinsky, CuspidalLeft, Cosocle) => false,
    }
}

/// The unique irreducible submodule or quotient of the product of `q.pi`
/// with the cuspidal `q.rho`, in the same parametrization as `q.pi`.
pub fn socle_cosocle(q: &SocleQuery) -> IrreducibleParam {
    let m = &q.pi.m;
    let c = q.rho;
    let out = if !m.lines().contains(&c.line) {
        m.with(Segment::point(c))
    } else if uses_q(q.pi.param, q.side, q.mode) {
        q_c(m, c)
    } else {
        q_primed_c(m, c)
    };
    IrreducibleParam { param: q.pi.param, m: out }
}

/// `⟨m⟩^t × ν^c` is irreducible iff `u = u′ = 0`.
pub fn is_irreducible_with_cuspidal(m: &Multisegment, c: Point) -> bool {
    matching(m, c).u == 0 && matching_primed(m, c).u == 0
}

/// Number of unmatched segments beginning at `c`.
pub fn l_prime_invariant(m: &Multisegment, c: Point) -> usize {
    matching(m, c).l_prime
}

/// `n · l′`, the largest degree that can be split off towards `{ν^c}` on
/// the right of a Jacquet restriction of `⟨m⟩^t`; `n` is the degree of the
/// cuspidal.
pub fn l_sup_formula(m: &Multisegment, c: Point, n: u64) -> u64 {
    n * l_prime_invariant(m, c) as u64
}

/// Segments pairwise unlinked, and any two either equal or disjoint.
pub fn condition_c(m: &Multisegment) -> bool {
    let segs = m.segments();
    segs.iter().enumerate().all(|(i, a)| {
        segs[i + 1..].iter().all(|b| {
            let disjoint = !a.same_class(b) || a.e() < b.b() || b.e() < a.b();
            !linked(a, b) && (a == b || disjoint)
        })
    })
}

/// A product of segment representations (either kind) is irreducible iff
/// no two of its segments are linked.
pub fn unlinked_product_irreducible(segs: &[Segment]) -> bool {
    segs.iter().enumerate().all(|(i, a)| segs[i + 1..].iter().all(|b| !linked(a, b)))
}
