//! 3-webs and rectangular three-row tableaux, and the folded
//! correspondence between symmetrical webs and domino tableaux.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mdiagram::{arc_distance, Arc, ArcKind, BoundaryVertex, MDiagram, Resolution};
use crate::tableau::{is_domino, Cell, Shape, Tableau};
use crate::web::{FaceId, PlanarWeb};

/// `Φ(−1, 0, 1) = (1, 2, 3)`.
pub fn phi(step: i64) -> Option<u8> {
    match step {
        -1 => Some(1),
        0 => Some(2),
        1 => Some(3),
        _ => None,
    }
}

/// `Λ(−2, …, 2) = (1,1), (1,2), (2,2), (2,3), (3,3)`.
pub fn lambda(step: i64) -> Option<(u8, u8)> {
    match step {
        -2 => Some((1, 1)),
        -1 => Some((1, 2)),
        0 => Some((2, 2)),
        1 => Some((2, 3)),
        2 => Some((3, 3)),
        _ => None,
    }
}

fn letters_to_word(letters: &[u8]) -> String {
    letters.iter().map(|&r| char::from(b'0' + r)).collect()
}

fn require_web(w: &PlanarWeb) -> Result<()> {
    let report = w.validate_3web();
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(Error::NotAWeb(format!("{v:?}"))),
    }
}

/// `d_i = webdist(B_0, B_i)` for `i = 0..=N`.
pub fn boundary_distances(w: &PlanarWeb) -> Result<Vec<usize>> {
    let dist = w.distances_from(w.boundary_face(0))?;
    (0..=w.n_boundary())
        .map(|i| dist[w.boundary_face(i)].ok_or_else(|| Error::NotAWeb("disconnected dual graph".into())))
        .collect()
}

/// `h_j = webdist(B_j, B_{N−j})` for `j = 0..=⌊N/2⌋`.
pub fn symmetric_distances(w: &PlanarWeb) -> Result<Vec<usize>> {
    let n = w.n_boundary();
    (0..=n / 2).map(|j| w.web_distance(w.boundary_face(j), w.boundary_face(n - j))).collect()
}

/// The tableau whose row word is `w_i = Φ(d_{i−1} − d_i)`.
pub fn tableau_of_web(w: &PlanarWeb) -> Result<Tableau> {
    require_web(w)?;
    let d = boundary_distances(w)?;
    let letters = d
        .windows(2)
        .map(|p| phi(p[0] as i64 - p[1] as i64).ok_or_else(|| Error::NotAWeb("boundary step larger than 1".into())))
        .collect::<Result<Vec<u8>>>()?;
    let t = Tableau::from_word(&letters_to_word(&letters))?;
    if t.shape().num_rows() != 3 || !t.shape().is_rectangle() {
        return Err(Error::NotAWeb(format!("distance word {} is not of rectangular shape", t.word())));
    }
    Ok(t)
}

/// Draws the m-diagram of `t` and resolves it.
pub fn web_of_tableau(t: &Tableau) -> Result<PlanarWeb> {
    MDiagram::of_tableau(t)?.resolve()
}

/// The domino tableau read off the distances across the symmetry axis.
pub fn domino_of_symmetric_web(w: &PlanarWeb) -> Result<Tableau> {
    require_web(w)?;
    if !w.is_symmetrical() {
        return Err(Error::NotSymmetrical);
    }
    let n = w.n_boundary();
    let h = symmetric_distances(w)?;
    let mut letters = vec![0u8; n];
    if n % 2 == 1 {
        letters[0] = 1;
    }
    for j in 1..=n / 2 {
        let (a, b) = lambda(h[j] as i64 - h[j - 1] as i64)
            .ok_or_else(|| Error::NotAWeb(format!("h_{j} − h_{} out of range", j - 1)))?;
        // 1-based positions N+1−2j and N+2−2j
        letters[n - 2 * j] = a;
        letters[n + 1 - 2 * j] = b;
    }
    Tableau::from_word(&letters_to_word(&letters))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BlockType {
    /// Lone cell plus one vertical domino in rows 2–3 (odd size only).
    Zero,
    /// Two vertical dominoes in rows 1–2.
    One,
    /// Two vertical dominoes in rows 2–3.
    Two,
    /// Horizontal dominoes only.
    Three,
}

/// A block spanning columns `first..=last` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Block {
    pub kind: BlockType,
    pub first: usize,
    pub last: usize,
}

/// A vertical pair `(k1, k2)`; label 0 stands for the lone cell.
pub type VerticalPair = (u32, u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridClassification {
    pub blocks: Vec<Block>,
    pub vertical_pairs: Vec<VerticalPair>,
    /// `v_k` for `k = 1..=M` (index 0 unused).
    pub letters: Vec<u8>,
}

/// Splits a grid of domino labels into blocks and classifies them.
///
/// `grid[r][c]` is the label of the domino covering the cell; label 0 marks
/// the lone cell. Every positive label must cover exactly two adjacent cells.
pub fn classify_grid(grid: &[Vec<u32>]) -> Result<GridClassification> {
    let rows = grid.len();
    let width = grid.first().map_or(0, Vec::len);
    if rows != 3 || grid.iter().any(|r| r.len() != width) {
        return Err(Error::WrongShape { expected: "a 3-row rectangular grid".into() });
    }
    let m = grid.iter().flatten().copied().max().unwrap_or(0) as usize;
    let mut cells: Vec<Vec<Cell>> = vec![Vec::new(); m + 1];
    for (r, row) in grid.iter().enumerate() {
        for (c, &k) in row.iter().enumerate() {
            cells[k as usize].push(Cell::new(r + 1, c + 1));
        }
    }
    if cells.iter().skip(1).any(|cs| cs.len() != 2 || !cs[0].is_adjacent(&cs[1])) {
        return Err(Error::NotDomino);
    }
    let vertical = |k: usize| cells[k][0].col == cells[k][1].col;

    let mut bounds = vec![0usize];
    for c in 0..width.saturating_sub(1) {
        let spanned = (0..3).any(|r| grid[r][c] != 0 && grid[r][c] == grid[r][c + 1]);
        if !spanned {
            bounds.push(c + 1);
        }
    }
    bounds.push(width);

    let mut letters = vec![0u8; m + 1];
    for k in 1..=m {
        letters[k] = cells[k][0].row.min(cells[k][1].row) as u8;
    }
    let mut blocks = Vec::new();
    let mut pairs = Vec::new();
    for w in bounds.windows(2) {
        let (first, last) = (w[0] + 1, w[1]);
        let mut labels: Vec<u32> = grid.iter().flat_map(|r| r[w[0]..w[1]].iter().copied()).collect();
        labels.sort();
        labels.dedup();
        let lone = labels.first() == Some(&0);
        let verts: Vec<usize> = labels.iter().filter(|&&k| k != 0 && vertical(k as usize)).map(|&k| k as usize).collect();
        let top = |k: usize| cells[k][0].row.min(cells[k][1].row);
        let col = |k: usize| cells[k][0].col;
        let unrecognized = Error::UnrecognizedBlock { first, last };
        let kind = if lone {
            if first != 1 || verts.len() != 1 || top(verts[0]) != 2 || col(verts[0]) != last {
                return Err(unrecognized);
            }
            letters[verts[0]] = 3;
            pairs.push((verts[0] as u32, 0));
            BlockType::Zero
        } else if verts.is_empty() {
            BlockType::Three
        } else if verts.len() == 2 && top(verts[0]) == top(verts[1]) && first < last && {
            let cs = [col(verts[0]), col(verts[1])];
            cs.contains(&first) && cs.contains(&last)
        } {
            let (lo, hi) = (verts[0].min(verts[1]), verts[0].max(verts[1]));
            letters[hi] += 1;
            match top(lo) {
                1 => {
                    pairs.push((lo as u32, hi as u32));
                    BlockType::One
                }
                _ => {
                    pairs.push((hi as u32, lo as u32));
                    BlockType::Two
                }
            }
        } else {
            return Err(unrecognized);
        };
        blocks.push(Block { kind, first, last });
    }
    Ok(GridClassification { blocks, vertical_pairs: pairs, letters })
}

/// A three-row domino tableau cut into simple blocks, with its vertical
/// pairs and compression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominoDecomposition {
    pub source: Tableau,
    /// Domino labels per cell (`relabeled[r][c]`); 0 marks the lone cell.
    pub relabeled: Vec<Vec<u32>>,
    pub blocks: Vec<Block>,
    pub vertical_pairs: Vec<VerticalPair>,
    /// `C`, with row word `v_1 … v_M`.
    pub compression: Tableau,
    /// Odd size only: `C_0`, which is `C` with the lone label placed at row 2,
    /// column 1 and every entry shifted up by one.
    pub compression0: Option<Tableau>,
}

impl DominoDecomposition {
    /// Number of dominoes `M`.
    pub fn num_dominoes(&self) -> usize {
        self.compression.size()
    }

    pub fn is_odd(&self) -> bool {
        self.compression0.is_some()
    }
}

/// Decomposes a `3 × n` domino tableau.
pub fn decompose_blocks(d: &Tableau) -> Result<DominoDecomposition> {
    let shape = d.shape();
    if shape.num_rows() != 3 || !shape.is_rectangle() {
        return Err(Error::WrongShape { expected: "a 3 × n rectangle".into() });
    }
    if !is_domino(d) {
        return Err(Error::NotDomino);
    }
    let n = d.size();
    let odd = n % 2 == 1;
    let relabeled: Vec<Vec<u32>> = d
        .raw_rows()
        .iter()
        .map(|row| row.iter().map(|&v| if odd { v / 2 } else { v.div_ceil(2) }).collect())
        .collect();
    let cls = classify_grid(&relabeled)?;
    let m = cls.letters.len() - 1;
    let word = letters_to_word(&cls.letters[1..]);
    let cols = shape.outer()[0];
    let (compression, compression0) = if odd {
        let half = cols.div_ceil(2);
        let c = Tableau::from_shape_word(Shape::new(vec![half; 3], vec![1, 1])?, &word)?;
        let mut rows: Vec<Vec<u32>> =
            c.raw_rows().iter().map(|r| r.iter().map(|&v| if v == 0 { 0 } else { v + 1 }).collect()).collect();
        rows[1][0] = 1;
        let c0 = Tableau::from_parts(Shape::new(vec![half; 3], vec![1])?, rows)?;
        (c, Some(c0))
    } else {
        let c = Tableau::from_word(&word)?;
        if !c.shape().is_rectangle() || c.shape().num_rows() != 3 || c.size() != m {
            return Err(Error::InvalidShape(format!("compression word {word} is not rectangular")));
        }
        (c, None)
    };
    Ok(DominoDecomposition {
        source: d.clone(),
        relabeled,
        blocks: cls.blocks,
        vertical_pairs: cls.vertical_pairs,
        compression,
        compression0,
    })
}

fn label(k: u32, primed: bool) -> String {
    if primed && k != 0 {
        format!("{k}'")
    } else {
        k.to_string()
    }
}

/// The crossed m-diagram: the m-diagram of the compression on `1..M` (with
/// second arcs from `C_0` on `0..M` when `c0` is given), its mirror image on
/// `M′..1′`, and each vertical pair's two mirror arcs swapped for arcs across
/// the axis.
pub fn crossed_mdiagram(c: &Tableau, c0: Option<&Tableau>, pairs: &[VerticalPair]) -> Result<MDiagram> {
    let m = c.size() as u32;
    let row_of = |k: u32| -> usize {
        if k == 0 {
            2
        } else {
            c.find(k).expect("label present").row
        }
    };
    let lo = if c0.is_some() { 0 } else { 1 };
    let mut half: Vec<(u32, u32, ArcKind)> = Vec::new();
    for (kind, top, bottom, from) in [(ArcKind::First, 1, 2, 1), (ArcKind::Second, 2, 3, lo)] {
        let items = (from..=m).filter(|&k| [top, bottom].contains(&row_of(k))).map(|k| (k, row_of(k) == top));
        for (o, cl) in crate::mdiagram::match_parentheses(items)? {
            half.push(if kind == ArcKind::First { (o, cl, kind) } else { (cl, o, kind) });
        }
    }
    check_vertical_pairs(&half, pairs)?;

    let mut boundary = Vec::new();
    for k in (1..=m).rev() {
        boundary.push(BoundaryVertex { label: label(k, true), x: -(k as i64) });
    }
    if c0.is_some() {
        boundary.push(BoundaryVertex { label: "0".into(), x: 0 });
    }
    for k in 1..=m {
        boundary.push(BoundaryVertex { label: label(k, false), x: k as i64 });
    }
    let idx = |k: u32, primed: bool| -> usize {
        if c0.is_some() {
            if k == 0 {
                m as usize
            } else if primed {
                (m - k) as usize
            } else {
                (m + k) as usize
            }
        } else if primed {
            (m - k) as usize
        } else {
            (m + k - 1) as usize
        }
    };
    let mut arcs = Vec::new();
    for &(t, h, kind) in &half {
        let crossed = pairs.contains(&(t, h));
        for primed in [false, true] {
            // a vertical pair joins each endpoint to the other side's partner
            let head_primed = if crossed { !primed } else { primed };
            arcs.push(Arc { tail: idx(t, primed), head: idx(h, head_primed), kind, crossed });
        }
    }
    MDiagram::new(boundary, arcs)
}

/// Each pair must be an arc of the half diagram, maximal among arcs of its
/// kind, and no two pair arcs may intersect.
fn check_vertical_pairs(half: &[(u32, u32, ArcKind)], pairs: &[VerticalPair]) -> Result<()> {
    let span = |a: &(u32, u32, ArcKind)| (a.0.min(a.1), a.0.max(a.1));
    let mut found = Vec::new();
    for &(k1, k2) in pairs {
        let Some(arc) = half.iter().find(|a| a.0 == k1 && a.1 == k2) else {
            return Err(Error::VerticalPairNotAnArc(k1 as i64, k2 as i64));
        };
        let (p, q) = span(arc);
        if half.iter().any(|b| b.2 == arc.2 && b != arc && span(b).0 <= p && q <= span(b).1) {
            return Err(Error::InvalidDiagram(format!("vertical pair ({k1}, {k2}) is not a maximal arc")));
        }
        found.push((p, q));
    }
    for (i, &(p1, q1)) in found.iter().enumerate() {
        for &(p2, q2) in &found[i + 1..] {
            if !(q1 < p2 || q2 < p1) {
                return Err(Error::InvalidDiagram("two vertical pair arcs intersect".into()));
            }
        }
    }
    Ok(())
}

/// The crossed web of a domino tableau: the resolution of its crossed
/// m-diagram, boundary labelled `1..=N` from left to right.
pub fn crossed_web(d: &Tableau) -> Result<PlanarWeb> {
    let dec = decompose_blocks(d)?;
    crossed_mdiagram(&dec.compression, dec.compression0.as_ref(), &dec.vertical_pairs)?.resolve()
}

/// A crossed m-diagram together with its resolution and the face
/// bookkeeping used by the distance identities.
#[derive(Debug, Clone)]
pub struct CrossedDiagram {
    pub decomposition: DominoDecomposition,
    pub diagram: MDiagram,
    pub resolution: Resolution,
    /// Sorted arc set above each face (`None` for the exterior face).
    pub face_arcs: Vec<Option<Vec<usize>>>,
    /// `mirror_arc[a]` is the reflection of arc `a`.
    pub mirror_arc: Vec<usize>,
    /// Arc indices of `(k1, k2′)` and `(k1′, k2)` per vertical pair.
    pub crossed_arcs: Vec<(usize, usize)>,
}

impl CrossedDiagram {
    pub fn of_domino(d: &Tableau) -> Result<Self> {
        let decomposition = decompose_blocks(d)?;
        let diagram = crossed_mdiagram(
            &decomposition.compression,
            decomposition.compression0.as_ref(),
            &decomposition.vertical_pairs,
        )?;
        let resolution = diagram.resolve_traced()?;
        let face_arcs = resolution.face_arcs()?;
        let b = diagram.boundary();
        let mirror_vertex = |v: usize| b.len() - 1 - v;
        let mirror_arc = diagram
            .arcs()
            .iter()
            .map(|a| {
                let (t, h) = (mirror_vertex(a.tail), mirror_vertex(a.head));
                diagram
                    .arcs()
                    .iter()
                    .position(|x| x.tail == t && x.head == h)
                    .ok_or_else(|| Error::InvalidDiagram("crossed diagram is not mirror symmetric".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let find = |l1: String, l2: String| -> Result<usize> {
            let (i, j) = (diagram.index_of(&l1), diagram.index_of(&l2));
            i.zip(j)
                .and_then(|(i, j)| diagram.arcs().iter().position(|a| a.tail == i && a.head == j))
                .ok_or_else(|| Error::InvalidDiagram(format!("missing crossed arc ({l1}, {l2})")))
        };
        let crossed_arcs = decomposition
            .vertical_pairs
            .iter()
            .map(|&(k1, k2)| Ok((find(label(k1, false), label(k2, true))?, find(label(k1, true), label(k2, false))?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(CrossedDiagram { decomposition, diagram, resolution, face_arcs, mirror_arc, crossed_arcs })
    }

    pub fn web(&self) -> &PlanarWeb {
        &self.resolution.web
    }

    /// Arcs above a disk face.
    pub fn arcs_above(&self, f: FaceId) -> Result<&[usize]> {
        self.face_arcs.get(f).and_then(|s| s.as_deref()).ok_or(Error::UnknownFace(f))
    }

    pub fn arc_distance(&self, x: FaceId, y: FaceId) -> Result<usize> {
        Ok(arc_distance(self.arcs_above(x)?, self.arcs_above(y)?))
    }

    pub fn coherent_separators(&self, x: FaceId, y: FaceId) -> Result<Vec<(usize, usize)>> {
        Ok(self.diagram.coherent_separators(self.arcs_above(x)?, self.arcs_above(y)?))
    }

    /// `ε(X)`: 1 when exactly one arc of some crossed pair lies above `X`.
    pub fn epsilon(&self, x: FaceId) -> Result<usize> {
        let s = self.arcs_above(x)?;
        let between = self
            .crossed_arcs
            .iter()
            .any(|&(a, b)| s.binary_search(&a).is_ok() != s.binary_search(&b).is_ok());
        Ok(between as usize)
    }

    /// The face whose arc set is the mirror image of `x`'s.
    pub fn mirror_face(&self, x: FaceId) -> Result<FaceId> {
        let mut want: Vec<usize> = self.arcs_above(x)?.iter().map(|&a| self.mirror_arc[a]).collect();
        want.sort();
        let hits: Vec<FaceId> =
            (0..self.face_arcs.len()).filter(|&f| self.face_arcs[f].as_deref() == Some(&want[..])).collect();
        match hits[..] {
            [f] => Ok(f),
            _ => Err(Error::InvalidDiagram(format!("{} faces mirror face {x}", hits.len()))),
        }
    }

    /// Classifies an intersecting pair by the four admissible cases, or
    /// `None` if it fits none of them.
    pub fn crossing_case(&self, a: usize, b: usize) -> Option<CrossingCase> {
        let arcs = self.diagram.arcs();
        let (x, y) = (arcs[a], arcs[b]);
        match (x.crossed, y.crossed) {
            (false, false) => (x.kind != y.kind).then_some(CrossingCase::OppositeUncrossed),
            (true, true) => (self.mirror_arc[a] == b).then_some(CrossingCase::MirrorCrossed),
            _ => {
                let (cr, un) = if x.crossed { (a, b) } else { (b, a) };
                match (arcs[cr].kind, arcs[un].kind) {
                    (ArcKind::First, ArcKind::Second) if self.diagram.directed_toward(un, cr) => {
                        Some(CrossingCase::CrossedFirst)
                    }
                    (ArcKind::Second, ArcKind::First) if self.diagram.directed_away(un, cr) => {
                        Some(CrossingCase::CrossedSecond)
                    }
                    _ => None,
                }
            }
        }
    }
}

/// The four ways two arcs of a crossed m-diagram may intersect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingCase {
    /// Both uncrossed, of opposite kinds.
    OppositeUncrossed,
    /// Both crossed, mirror images of each other.
    MirrorCrossed,
    /// A crossed first arc and an uncrossed second arc directed toward it.
    CrossedFirst,
    /// A crossed second arc and an uncrossed first arc directed away from it.
    CrossedSecond,
}

impl fmt::Display for DominoDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kinds: Vec<&str> = self
            .blocks
            .iter()
            .map(|b| match b.kind {
                BlockType::Zero => "0",
                BlockType::One => "1",
                BlockType::Two => "2",
                BlockType::Three => "3",
            })
            .collect();
        let pairs: Vec<String> = self.vertical_pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "blocks {} V {{{}}} C {}", kinds.join(""), pairs.join(","), self.compression.word())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::fold;

    const RUNNING: &str = "111122213132223333";
    const RUNNING_FOLD: &str = "112212121133332323";

    #[test]
    fn tripod_words() {
        let t = Tableau::from_word("123").unwrap();
        let w = web_of_tableau(&t).unwrap();
        assert_eq!(boundary_distances(&w).unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(tableau_of_web(&w).unwrap(), t);
        assert_eq!(symmetric_distances(&w).unwrap(), vec![0, 1]);
        assert_eq!(domino_of_symmetric_web(&w).unwrap().word(), "123");
    }

    #[test]
    fn running_web() {
        let t = Tableau::from_word(RUNNING).unwrap();
        let w = web_of_tableau(&t).unwrap();
        assert_eq!(tableau_of_web(&w).unwrap().word(), RUNNING);
        assert!(w.is_symmetrical());
        assert_eq!(symmetric_distances(&w).unwrap(), vec![0, 1, 2, 4, 6, 4, 3, 2, 2, 0]);
        assert_eq!(domino_of_symmetric_web(&w).unwrap().word(), RUNNING_FOLD);
    }

    #[test]
    fn even_decomposition() {
        let d = Tableau::from_word(RUNNING_FOLD).unwrap();
        let dec = decompose_blocks(&d).unwrap();
        let kinds: Vec<BlockType> = dec.blocks.iter().map(|b| b.kind).collect();
        assert_eq!(kinds, vec![BlockType::Three, BlockType::One, BlockType::Two]);
        assert_eq!(dec.vertical_pairs, vec![(3, 4), (9, 8)]);
        assert_eq!(dec.compression.word(), "121213323");
        assert_eq!(dec.compression, Tableau::from_rows(vec![vec![1, 3, 5], vec![2, 4, 8], vec![6, 7, 9]]).unwrap());
        assert!(!dec.is_odd());
    }

    #[test]
    fn odd_decomposition() {
        let d = Tableau::from_word("111232323").unwrap();
        let dec = decompose_blocks(&d).unwrap();
        assert_eq!(dec.vertical_pairs, vec![(2, 0), (4, 3)]);
        let c = &dec.compression;
        assert_eq!(c.shape().inner(), &[1, 1]);
        assert_eq!((c.row(1), c.row(2), c.row(3)), (&[1][..], &[3][..], &[2, 4][..]));
        let c0 = dec.compression0.as_ref().unwrap();
        assert_eq!(c0.raw_rows(), &[vec![0, 2], vec![1, 4], vec![3, 5]]);
        assert_eq!(dec.blocks[0], Block { kind: BlockType::Zero, first: 1, last: 1 });
    }

    #[test]
    fn horizontal_only() {
        let dec = decompose_blocks(&Tableau::from_word("112233").unwrap()).unwrap();
        assert_eq!(dec.blocks, vec![Block { kind: BlockType::Three, first: 1, last: 2 }]);
        assert!(dec.vertical_pairs.is_empty());
    }

    #[test]
    fn crossed_web_of_running_fold() {
        let t = Tableau::from_word(RUNNING).unwrap();
        let d = fold(&t).unwrap();
        let cd = CrossedDiagram::of_domino(&d).unwrap();
        let (a, b) = cd.crossed_arcs[0];
        assert_eq!(cd.diagram.crossing_x(a, b), Some(num_rational::Ratio::from_integer(0)));
        assert_eq!(cd.web().canonical(), web_of_tableau(&t).unwrap().canonical());
    }

    #[test]
    fn crossed_web_of_odd_example() {
        let d = Tableau::from_word("111232323").unwrap();
        let w = crossed_web(&d).unwrap();
        assert_eq!(w.n_boundary(), 9);
        assert!(w.is_3web());
        assert!(w.is_symmetrical());
        assert_eq!(domino_of_symmetric_web(&w).unwrap(), d);
    }

    #[test]
    fn lone_cell_over_an_upper_vertical_is_unrecognized() {
        let grid = vec![vec![1], vec![1], vec![0]];
        assert_eq!(classify_grid(&grid).unwrap_err(), Error::UnrecognizedBlock { first: 1, last: 1 });
    }

    #[test]
    fn bogus_vertical_pair_is_rejected() {
        let dec = decompose_blocks(&Tableau::from_word(RUNNING_FOLD).unwrap()).unwrap();
        let err = crossed_mdiagram(&dec.compression, None, &[(1, 9)]).unwrap_err();
        assert_eq!(err, Error::VerticalPairNotAnArc(1, 9));
    }

    #[test]
    fn non_domino_input() {
        let t = Tableau::from_rows(vec![vec![1, 3], vec![2, 5], vec![4, 6]]).unwrap();
        assert_eq!(decompose_blocks(&t).unwrap_err(), Error::NotDomino);
    }

    #[test]
    fn lambda_splits_into_phi() {
        for s in -2..=2 {
            let (a, b) = lambda(s).unwrap();
            let inv = |x: u8| x as i64 - 2;
            assert_eq!(inv(a) + inv(b), s);
            assert_eq!(phi(inv(a)), Some(a));
        }
    }
}
