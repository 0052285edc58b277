//! Jeu de taquin slides and the promotion operators built on them.

use super::{Cell, Shape, Tableau};
use crate::error::{Error, Result};

/// Slides into the inner corner `corner`, shifting entries one step back
/// along the sliding path (always toward the smaller of the right and lower
/// neighbours).
pub fn slide(t: &Tableau, corner: Cell) -> Result<Tableau> {
    if !t.shape().inner_corners().contains(&corner) {
        return Err(Error::NotACorner { row: corner.row, col: corner.col });
    }
    let shape = t.shape();
    let mut rows = t.raw_rows().to_vec();
    let (mut r, mut c) = (corner.row - 1, corner.col - 1);
    loop {
        let right = (c + 1 < shape.outer_len(r)).then(|| rows[r][c + 1]);
        let below = (r + 1 < shape.num_rows() && c < shape.outer_len(r + 1)).then(|| rows[r + 1][c]);
        let step_right = match (right, below) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => a < b,
        };
        if step_right {
            rows[r][c] = rows[r][c + 1];
            c += 1;
        } else {
            rows[r][c] = rows[r + 1][c];
            r += 1;
        }
    }
    // (r, c) is now an outer corner of λ; it leaves the shape.
    rows[r].pop();
    let mut outer = shape.outer().to_vec();
    outer[r] -= 1;
    let mut inner = shape.inner().to_vec();
    inner[corner.row - 1] -= 1;
    if outer[r] == 0 {
        rows.truncate(r);
    }
    let new_shape = Shape::new(outer, inner)?;
    Ok(Tableau::from_parts_unchecked(new_shape, rows))
}

/// Rectifies by sliding into inner corners until the shape is straight.
pub fn rectify(t: &Tableau) -> Tableau {
    rectify_with(t, |corners| corners.len() - 1)
}

/// Rectifies, letting `choose` pick which of the available inner corners to
/// slide into at each step.
pub fn rectify_with(t: &Tableau, mut choose: impl FnMut(&[Cell]) -> usize) -> Tableau {
    let mut cur = t.clone();
    loop {
        let corners = cur.shape().inner_corners();
        if corners.is_empty() {
            return cur;
        }
        let pick = choose(&corners).min(corners.len() - 1);
        cur = slide(&cur, corners[pick]).expect("inner corners are always slidable");
    }
}

fn require_straight(t: &Tableau) -> Result<()> {
    if t.shape().is_straight() {
        Ok(())
    } else {
        Err(Error::WrongShape { expected: "a straight shape".into() })
    }
}

/// Promotion `P`: delete 1, slide the hole out, decrement, and put `N` in the
/// vacated outer corner.
pub fn promote(t: &Tableau) -> Result<Tableau> {
    require_straight(t)?;
    let n = t.size();
    if n == 0 {
        return Ok(t.clone());
    }
    let slid = slide(&t.above(1)?, Cell::new(1, 1))?;
    Ok(append_cell(t.shape(), &slid, n as u32))
}

/// Fills the single cell of `full \ part.shape()` with `value`.
fn append_cell(full: &Shape, part: &Tableau, value: u32) -> Tableau {
    let mut rows: Vec<Vec<u32>> = part.raw_rows().to_vec();
    rows.resize(full.num_rows(), Vec::new());
    for (r, row) in rows.iter_mut().enumerate() {
        if row.len() < full.outer()[r] {
            row.push(value);
        }
    }
    Tableau::from_parts_unchecked(full.clone(), rows)
}

/// Inverse promotion: remove `N`, slide the hole back to the top-left corner
/// (toward the larger of the upper and left neighbours), increment, and put 1
/// in the corner.
pub fn promote_inverse(t: &Tableau) -> Result<Tableau> {
    require_straight(t)?;
    let n = t.size() as u32;
    if n == 0 {
        return Ok(t.clone());
    }
    let start = t.find(n).expect("largest entry present");
    let mut rows = t.raw_rows().to_vec();
    let (mut r, mut c) = (start.row - 1, start.col - 1);
    while r > 0 || c > 0 {
        let up = (r > 0).then(|| rows[r - 1][c]);
        let left = (c > 0).then(|| rows[r][c - 1]);
        let step_up = match (up, left) {
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => a > b,
            (None, None) => unreachable!(),
        };
        if step_up {
            rows[r][c] = rows[r - 1][c];
            r -= 1;
        } else {
            rows[r][c] = rows[r][c - 1];
            c -= 1;
        }
    }
    for row in rows.iter_mut() {
        for v in row.iter_mut() {
            *v += 1;
        }
    }
    rows[0][0] = 1;
    Ok(Tableau::from_parts_unchecked(t.shape().clone(), rows))
}

fn bounded(t: &Tableau, k: usize, op: fn(&Tableau) -> Result<Tableau>) -> Result<Tableau> {
    require_straight(t)?;
    let n = t.size();
    if k < 1 || k > n {
        return Err(Error::OutOfRange { what: "k", value: k as i64, lo: 1, hi: n as i64 });
    }
    let low = op(&t.at_most(k)?)?;
    let mut out = t.clone();
    for (r, row) in low.raw_rows().iter().enumerate() {
        out.rows_mut()[r][..row.len()].copy_from_slice(row);
    }
    Ok(out)
}

/// `P_k`: promotion on the entries `≤ k`, entries above `k` fixed.
pub fn promote_bounded(t: &Tableau, k: usize) -> Result<Tableau> {
    bounded(t, k, promote)
}

/// Inverse of [`promote_bounded`].
pub fn promote_bounded_inverse(t: &Tableau, k: usize) -> Result<Tableau> {
    bounded(t, k, promote_inverse)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(t: &Tableau) -> Vec<Vec<u32>> {
        (1..=t.shape().num_rows()).map(|r| t.row(r).to_vec()).collect()
    }

    fn skew_example() -> Tableau {
        let shape = Shape::new(vec![5, 5, 4, 4], vec![3, 1]).unwrap();
        Tableau::from_parts(
            shape,
            vec![vec![0, 0, 0, 1, 9], vec![0, 2, 3, 11, 12], vec![4, 6, 7, 13], vec![5, 8, 10, 14]],
        )
        .unwrap()
    }

    #[test]
    fn slide_follows_the_smaller_neighbour() {
        let out = slide(&skew_example(), Cell::new(2, 1)).unwrap();
        assert_eq!(out.shape().inner(), &[3]);
        assert_eq!(out.shape().outer(), &[5, 5, 4, 3]);
        assert_eq!(rows(&out), vec![vec![1, 9], vec![2, 3, 7, 11, 12], vec![4, 6, 10, 13], vec![5, 8, 14]]);
    }

    #[test]
    fn slide_rejects_non_corners() {
        let t = skew_example();
        assert_eq!(slide(&t, Cell::new(1, 2)).unwrap_err(), Error::NotACorner { row: 1, col: 2 });
        let straight = Tableau::from_word("1122").unwrap();
        assert!(matches!(slide(&straight, Cell::new(1, 1)), Err(Error::NotACorner { .. })));
    }

    #[test]
    fn single_cell_slide() {
        let t = Tableau::from_shape_word(Shape::new(vec![2], vec![1]).unwrap(), "1").unwrap();
        let out = slide(&t, Cell::new(1, 1)).unwrap();
        assert!(out.shape().is_straight());
        assert_eq!(rows(&out), vec![vec![1]]);
    }

    #[test]
    fn rectification_is_order_independent_on_the_example() {
        let t = skew_example();
        let a = rectify_with(&t, |_| 0);
        let b = rectify_with(&t, |c| c.len() - 1);
        assert!(a.shape().is_straight());
        assert_eq!(a, b);
    }

    #[test]
    fn promotion_example() {
        let t = Tableau::from_rows(vec![vec![1, 2, 5], vec![3, 4, 8], vec![6, 7, 9]]).unwrap();
        let rect = rectify(&t.above(1).unwrap());
        assert_eq!(rows(&rect), vec![vec![1, 3, 4], vec![2, 6, 7], vec![5, 8]]);
        let p = promote(&t).unwrap();
        assert_eq!(rows(&p), vec![vec![1, 3, 4], vec![2, 6, 7], vec![5, 8, 9]]);
        assert_eq!(promote_inverse(&p).unwrap(), t);
    }

    #[test]
    fn column_is_fixed() {
        let col = Tableau::from_word("1234").unwrap();
        assert_eq!(promote(&col).unwrap(), col);
        assert_eq!(promote_inverse(&col).unwrap(), col);
    }

    #[test]
    fn bounded_promotion_range() {
        let t = Tableau::from_word("12112212").unwrap();
        assert_eq!(promote_bounded(&t, 1).unwrap(), t);
        assert_eq!(promote_bounded(&t, 8).unwrap(), promote(&t).unwrap());
        assert!(matches!(promote_bounded(&t, 0), Err(Error::OutOfRange { .. })));
        assert!(matches!(promote_bounded(&t, 9), Err(Error::OutOfRange { .. })));
        assert!(matches!(promote_bounded_inverse(&t, 9), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn folding_steps_of_the_two_row_example() {
        let t = Tableau::from_rows(vec![vec![1, 3, 4, 7], vec![2, 5, 6, 8]]).unwrap();
        let expected = [
            (8, vec![vec![1, 2, 3, 6], vec![4, 5, 7, 8]]),
            (6, vec![vec![1, 2, 5, 6], vec![3, 4, 7, 8]]),
            (4, vec![vec![1, 3, 5, 6], vec![2, 4, 7, 8]]),
            (2, vec![vec![1, 3, 5, 6], vec![2, 4, 7, 8]]),
        ];
        let mut cur = t;
        for (k, want) in expected {
            cur = promote_bounded(&cur, k).unwrap();
            assert_eq!(rows(&cur), want, "after P_{k}");
        }
    }
}
