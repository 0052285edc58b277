//! 2-webs: noncrossing perfect matchings on `1..=2n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mdiagram::match_parentheses;
use crate::tableau::Tableau;

/// A noncrossing perfect matching, arcs `(a, b)` with `a < b`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Matching2Json", into = "Matching2Json")]
pub struct Matching2 {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct Matching2Json {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

impl TryFrom<Matching2Json> for Matching2 {
    type Error = Error;
    fn try_from(j: Matching2Json) -> Result<Self> {
        Matching2::new(j.n, j.arcs.into_iter().map(|[a, b]| (a, b)).collect())
    }
}

impl From<Matching2> for Matching2Json {
    fn from(m: Matching2) -> Self {
        Matching2Json { n: m.n, arcs: m.arcs.iter().map(|&(a, b)| [a, b]).collect() }
    }
}

impl Matching2 {
    /// `n` is the number of arcs; endpoints may be given in either order.
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        arcs.sort();
        if arcs.len() != n {
            return Err(Error::InvalidMatching(format!("{} arcs for n = {n}", arcs.len())));
        }
        let mut seen = vec![false; 2 * n + 1];
        for &(a, b) in &arcs {
            if a == 0 || b > 2 * n || a == b || seen[a] || seen[b] {
                return Err(Error::InvalidMatching(format!("bad arc ({a}, {b})")));
            }
            seen[a] = true;
            seen[b] = true;
        }
        for (i, &(a, b)) in arcs.iter().enumerate() {
            if let Some(&(c, d)) = arcs[i + 1..].iter().find(|&&(c, d)| a < c && c < b && b < d) {
                return Err(Error::InvalidMatching(format!("arcs ({a}, {b}) and ({c}, {d}) cross")));
            }
        }
        Ok(Matching2 { n, arcs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    fn relabel(&self, f: impl Fn(usize) -> usize) -> Matching2 {
        Matching2::new(self.n, self.arcs.iter().map(|&(a, b)| (f(a), f(b))).collect())
            .expect("boundary symmetries preserve noncrossing matchings")
    }
}

impl fmt::Display for Matching2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Row-1 entries become left ends, row-2 entries right ends.
pub fn web2_of_tableau(t: &Tableau) -> Result<Matching2> {
    if t.shape().num_rows() != 2 || !t.shape().is_rectangle() {
        return Err(Error::WrongShape { expected: "a 2 × n rectangle".into() });
    }
    let letters = t.row_letters();
    let arcs = match_parentheses(letters.iter().enumerate().map(|(i, &r)| (i + 1, r == 1)))?;
    Matching2::new(letters.len() / 2, arcs)
}

pub fn tableau_of_web2(m: &Matching2) -> Result<Tableau> {
    let mut left: Vec<u32> = m.arcs.iter().map(|&(a, _)| a as u32).collect();
    let mut right: Vec<u32> = m.arcs.iter().map(|&(_, b)| b as u32).collect();
    left.sort();
    right.sort();
    Tableau::from_rows(vec![left, right])
}

/// `k ↦ k − 1`, with 1 going to `2n`.
pub fn rotate2(m: &Matching2) -> Matching2 {
    let n2 = 2 * m.n;
    m.relabel(|k| if k == 1 { n2 } else { k - 1 })
}

/// `k ↦ 2n + 1 − k`.
pub fn reflect2(m: &Matching2) -> Matching2 {
    let n2 = 2 * m.n;
    m.relabel(|k| n2 + 1 - k)
}

pub fn is_symmetrical2(m: &Matching2) -> bool {
    reflect2(m) == *m
}

/// Folds a symmetric 2-web to the right.
///
/// With `k̄ = 2n + 1 − k`, a mirror pair `{a, b}, {ā, b̄}` (`a < b ≤ n`)
/// becomes `{2a̅, 2b̅ + 1}, {2a̅ + 1, 2b̅}` and a self-symmetric arc
/// `{a, ā}` becomes `{2a̅, 2a̅ + 1}`.
pub fn fold2(m: &Matching2) -> Result<Matching2> {
    if !is_symmetrical2(m) {
        return Err(Error::NotSymmetrical);
    }
    let n = m.n;
    let bar = |k: usize| 2 * n + 1 - k;
    let mut arcs = Vec::new();
    for &(a, b) in &m.arcs {
        if b == bar(a) {
            arcs.push((bar(2 * a), bar(2 * a) + 1));
        } else if b <= n {
            arcs.push((bar(2 * a), bar(2 * b) + 1));
            arcs.push((bar(2 * a) + 1, bar(2 * b)));
        }
    }
    Matching2::new(n, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{evacuate, fold, promote};

    fn example() -> Matching2 {
        Matching2::new(4, vec![(1, 2), (3, 6), (4, 5), (7, 8)]).unwrap()
    }

    #[test]
    fn bijection_on_the_example() {
        let t = Tableau::from_rows(vec![vec![1, 3, 4, 7], vec![2, 5, 6, 8]]).unwrap();
        assert_eq!(web2_of_tableau(&t).unwrap(), example());
        assert_eq!(tableau_of_web2(&example()).unwrap(), t);
        let small = Tableau::from_rows(vec![vec![1], vec![2]]).unwrap();
        assert_eq!(web2_of_tableau(&small).unwrap().arcs(), &[(1, 2)]);
    }

    #[test]
    fn fold_of_the_example() {
        let m = example();
        assert!(is_symmetrical2(&m));
        let f = fold2(&m).unwrap();
        assert_eq!(f, Matching2::new(4, vec![(1, 2), (3, 4), (6, 7), (5, 8)]).unwrap());
        let t = Tableau::from_rows(vec![vec![1, 3, 4, 7], vec![2, 5, 6, 8]]).unwrap();
        assert_eq!(f, web2_of_tableau(&fold(&t).unwrap()).unwrap());
        let one = Matching2::new(1, vec![(1, 2)]).unwrap();
        assert_eq!(fold2(&one).unwrap(), one);
        assert_eq!(rotate2(&one), one);
    }

    #[test]
    fn symmetries_match_operators() {
        let t = Tableau::from_word("11212122").unwrap();
        let m = web2_of_tableau(&t).unwrap();
        assert_eq!(rotate2(&m), web2_of_tableau(&promote(&t).unwrap()).unwrap());
        assert_eq!(reflect2(&m), web2_of_tableau(&evacuate(&t).unwrap()).unwrap());
    }

    #[test]
    fn invalid_inputs() {
        assert!(matches!(Matching2::new(2, vec![(1, 3), (2, 4)]), Err(Error::InvalidMatching(_))));
        assert!(matches!(Matching2::new(2, vec![(1, 2), (2, 3)]), Err(Error::InvalidMatching(_))));
        let asym = Matching2::new(3, vec![(1, 4), (2, 3), (5, 6)]).unwrap();
        assert_eq!(fold2(&asym).unwrap_err(), Error::NotSymmetrical);
        let t = Tableau::from_word("123").unwrap();
        assert!(matches!(web2_of_tableau(&t), Err(Error::WrongShape { .. })));
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&example()).unwrap();
        assert_eq!(s, r#"{"n":4,"arcs":[[1,2],[3,6],[4,5],[7,8]]}"#);
        let back: Matching2 = serde_json::from_str(&s).unwrap();
        assert_eq!(back, example());
        assert!(serde_json::from_str::<Matching2>(r#"{"n":2,"arcs":[[1,3],[2,4]]}"#).is_err());
    }
}
