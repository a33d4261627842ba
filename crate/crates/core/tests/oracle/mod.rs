//! Reference computations that share no code with the library.
#![allow(dead_code)]

use multiseg::{range_sort, Multisegment, Segment};

/// Integer segments `(b, e)` of a multisegment on the default line.
pub fn plain(m: &Multisegment) -> Vec<(i64, i64)> {
    m.iter().map(|s| (s.b().to_int().unwrap(), s.e().to_int().unwrap())).collect()
}

pub fn from_plain(segs: &[(i64, i64)]) -> Multisegment {
    range_sort(segs.iter().map(|&(b, e)| Segment::of(b, e)))
}

/// The involution by the end-point chain algorithm: start from the shortest
/// segment with the largest end `e`, then repeatedly take the shortest
/// segment ending one step lower that begins strictly lower. A chain of
/// length `s` contributes `[e - s + 1, e]`; every chain segment then loses
/// its end point.
pub fn mw_dual(segs: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut m: Vec<(i64, i64)> = segs.to_vec();
    let mut out = Vec::new();
    while !m.is_empty() {
        let e = m.iter().map(|s| s.1).max().unwrap();
        let start = (0..m.len()).filter(|&i| m[i].1 == e).max_by_key(|&i| m[i].0).unwrap();
        let mut chain = vec![start];
        let (mut cur_b, mut cur_e) = m[start];
        loop {
            let next = (0..m.len())
                .filter(|&i| !chain.contains(&i) && m[i].1 == cur_e - 1 && m[i].0 < cur_b)
                .max_by_key(|&i| m[i].0);
            match next {
                Some(i) => {
                    chain.push(i);
                    (cur_b, cur_e) = m[i];
                }
                None => break,
            }
        }
        out.push((e - chain.len() as i64 + 1, e));
        let mut rest = Vec::new();
        for (i, &(b, end)) in m.iter().enumerate() {
            if !chain.contains(&i) {
                rest.push((b, end));
            } else if b < end {
                rest.push((b, end - 1));
            }
        }
        m = rest;
    }
    out
}

/// Matrices with the given margins by trying every filling with entries up
/// to the largest margin.
pub fn brute_margins(beta: &[u32], gamma: &[u32]) -> usize {
    let cells = beta.len() * gamma.len();
    let top = beta.iter().chain(gamma).copied().max().unwrap_or(0) as u64 + 1;
    let mut count = 0;
    for code in 0..top.pow(cells as u32) {
        let mut c = code;
        let entries: Vec<u32> = (0..cells)
            .map(|_| {
                let v = (c % top) as u32;
                c /= top;
                v
            })
            .collect();
        let rows_ok =
            (0..beta.len()).all(|i| (0..gamma.len()).map(|j| entries[i * gamma.len() + j]).sum::<u32>() == beta[i]);
        let cols_ok =
            (0..gamma.len()).all(|j| (0..beta.len()).map(|i| entries[i * gamma.len() + j]).sum::<u32>() == gamma[j]);
        if rows_ok && cols_ok {
            count += 1;
        }
    }
    count
}

/// Orderings of the cuspidal exponents `xs` that spell out `target`: the
/// coefficient of `ν^{t_1} ⊗ ⋯ ⊗ ν^{t_k}` in the full restriction of
/// `ν^{x_1} × ⋯ × ν^{x_k}`.
pub fn cuspidal_arrangements(xs: &[i64], target: &[i64]) -> usize {
    fn go(left: &mut Vec<i64>, target: &[i64]) -> usize {
        let Some((&first, rest)) = target.split_first() else {
            return 1;
        };
        let mut total = 0;
        for i in 0..left.len() {
            if left[i] == first {
                let x = left.remove(i);
                total += go(left, rest);
                left.insert(i, x);
            }
        }
        total
    }
    go(&mut xs.to_vec(), target)
}
