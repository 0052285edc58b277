//! Evacuation, folding and the symmetry predicates.

use super::jdt::{promote_bounded, promote_bounded_inverse};
use super::Tableau;
use crate::error::{Error, Result};

/// `k̄ = N + 1 − k`.
pub fn complement(n: usize, k: usize) -> usize {
    n + 1 - k
}

/// Evacuation `E = P_1 ∘ P_2 ∘ ⋯ ∘ P_N`.
pub fn evacuate(t: &Tableau) -> Result<Tableau> {
    let mut cur = t.clone();
    for k in (1..=t.size()).rev() {
        cur = promote_bounded(&cur, k)?;
    }
    Ok(cur)
}

/// Partial folding `f^j = P_{N−2j+2} ∘ ⋯ ∘ P_{N−2} ∘ P_N`.
pub fn partial_fold(t: &Tableau, j: usize) -> Result<Tableau> {
    let n = t.size();
    if j < 1 || j > n / 2 {
        return Err(Error::OutOfRange { what: "j", value: j as i64, lo: 1, hi: (n / 2) as i64 });
    }
    fold_steps(t, j)
}

fn fold_steps(t: &Tableau, j: usize) -> Result<Tableau> {
    let n = t.size();
    let mut cur = t.clone();
    for i in 0..j {
        cur = promote_bounded(&cur, n - 2 * i)?;
    }
    Ok(cur)
}

/// Folding `F = f^{⌊N/2⌋}`; the identity when `N < 2`.
pub fn fold(t: &Tableau) -> Result<Tableau> {
    fold_steps(t, t.size() / 2)
}

/// Inverse of [`fold`].
pub fn unfold(d: &Tableau) -> Result<Tableau> {
    let n = d.size();
    let mut cur = d.clone();
    for i in (0..n / 2).rev() {
        cur = promote_bounded_inverse(&cur, n - 2 * i)?;
    }
    Ok(cur)
}

/// Rotates a rectangular tableau by 180° and complements every entry.
pub fn rotate180_complement(t: &Tableau) -> Result<Tableau> {
    if !t.shape().is_rectangle() {
        return Err(Error::NotRectangular);
    }
    let n = t.size() as u32;
    let rows: Vec<Vec<u32>> = t
        .raw_rows()
        .iter()
        .rev()
        .map(|row| row.iter().rev().map(|&v| n + 1 - v).collect())
        .collect();
    Ok(Tableau::from_parts_unchecked(t.shape().clone(), rows))
}

/// Whether a rectangular tableau equals its rotated complement.
pub fn is_rotationally_symmetric(t: &Tableau) -> Result<bool> {
    Ok(rotate180_complement(t)? == *t)
}

/// Whether consecutive entries pair into dominoes: `(2j−1, 2j)` when `N` is
/// even, `(2j, 2j+1)` with 1 left alone when `N` is odd.
pub fn is_domino(t: &Tableau) -> bool {
    let pos = t.positions();
    let n = t.size();
    let first = if n.is_multiple_of(2) { 1 } else { 2 };
    (first..n).step_by(2).all(|a| pos[a].is_adjacent(&pos[a + 1]))
}
