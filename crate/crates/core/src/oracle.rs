//! Brute-force enumeration and the exhaustive verification drivers.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableau::{
    evacuate, fold, is_domino, is_rotationally_symmetric, partial_fold, promote, promote_inverse, rectify,
    rectify_with, rotate180_complement, unfold, Shape, Tableau,
};
use crate::web::PlanarWeb;
use crate::web2::{fold2, reflect2, rotate2, tableau_of_web2, web2_of_tableau};
use crate::web3::{
    crossed_web, decompose_blocks, domino_of_symmetric_web, tableau_of_web, web_of_tableau,
    BlockType, CrossedDiagram,
};

/// Which tableaux of a shape to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Filter {
    #[default]
    All,
    /// Equal to their 180° rotated complement.
    Symmetric,
    Domino,
}

impl FromStr for Filter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Filter::All),
            "symmetric" => Ok(Filter::Symmetric),
            "domino" => Ok(Filter::Domino),
            _ => Err(Error::Parse(format!("unknown filter {s:?} (all, symmetric, domino)"))),
        }
    }
}

impl Filter {
    pub fn keeps(self, t: &Tableau) -> bool {
        match self {
            Filter::All => true,
            Filter::Symmetric => is_rotationally_symmetric(t).unwrap_or(false),
            Filter::Domino => is_domino(t),
        }
    }
}

/// Lattice words of a straight shape in lexicographic order, built by
/// backtracking with prefix pruning.
#[derive(Debug, Clone)]
pub struct LatticeWords {
    shape: Vec<usize>,
    word: Vec<u8>,
    counts: Vec<usize>,
    started: bool,
    done: bool,
}

impl LatticeWords {
    pub fn new(shape: &[usize]) -> Self {
        LatticeWords {
            shape: shape.to_vec(),
            word: Vec::new(),
            counts: vec![0; shape.len()],
            started: false,
            done: false,
        }
    }

    fn allowed(&self, r: usize) -> bool {
        self.counts[r] < self.shape[r] && (r == 0 || self.counts[r - 1] > self.counts[r])
    }

    fn push(&mut self, r: usize) {
        self.counts[r] += 1;
        self.word.push(r as u8 + 1);
    }

    fn fill(&mut self) {
        let n: usize = self.shape.iter().sum();
        while self.word.len() < n {
            let r = (0..self.shape.len()).find(|&r| self.allowed(r)).expect("a partition inside λ can grow");
            self.push(r);
        }
    }
}

impl Iterator for LatticeWords {
    type Item = String;

    fn next(&mut self) -> Option<String> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
        } else {
            loop {
                let Some(last) = self.word.pop() else {
                    self.done = true;
                    return None;
                };
                let last = last as usize - 1;
                self.counts[last] -= 1;
                if let Some(r) = (last + 1..self.shape.len()).find(|&r| self.allowed(r)) {
                    self.push(r);
                    self.fill();
                    break;
                }
            }
        }
        Some(self.word.iter().map(|&r| char::from(b'0' + r)).collect())
    }
}

fn tableau_of_lattice_word(shape: &[usize], word: &str) -> Tableau {
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&l| Vec::with_capacity(l)).collect();
    for (i, b) in word.bytes().enumerate() {
        rows[(b - b'1') as usize].push(i as u32 + 1);
    }
    Tableau::from_rows(rows).expect("lattice words fill standard tableaux")
}

/// Every standard tableau of a straight shape passing `filter`, in
/// lexicographic order of row words.
pub fn enumerate(shape: &Shape, filter: Filter) -> Result<impl Iterator<Item = Tableau>> {
    if !shape.is_straight() {
        return Err(Error::WrongShape { expected: "a straight shape".into() });
    }
    let outer = shape.outer().to_vec();
    Ok(LatticeWords::new(&outer).map(move |w| tableau_of_lattice_word(&outer, &w)).filter(move |t| filter.keeps(t)))
}

/// `N! / ∏ hooks`, or `None` on overflow.
pub fn hook_length_count(shape: &[usize]) -> Option<u128> {
    let n: usize = shape.iter().sum();
    let mut hooks = Vec::with_capacity(n);
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = shape[r + 1..].iter().take_while(|&&l| l > c).count();
            hooks.push((arm + leg + 1) as u128);
        }
    }
    let mut num: u128 = 1;
    for k in 1..=n as u128 {
        num = num.checked_mul(k)?;
    }
    Some(num / hooks.iter().product::<u128>())
}

/// Largest `n` per family: shapes `(n, n)` and `(n, n, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Scope {
    pub two_row: usize,
    pub three_row: usize,
}

impl Scope {
    pub fn uniform(max_n: usize) -> Self {
        Scope { two_row: max_n, three_row: max_n }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Folding a symmetric 2-web agrees with folding its tableau.
    TwoByN,
    /// The domino tableau of a symmetrical 3-web is the fold of its tableau.
    Fw1,
    /// The crossed web of the fold of `T` is the web of `T`.
    Fw2,
    /// Tableau → web → tableau, plus web validity and dual metric sanity.
    Roundtrip3Web,
    PromotionRotation,
    EvacuationReflection,
    /// `P^N = id` on rectangles, and rotating `N` times fixes the web.
    PromotionOrder,
    /// `T` symmetric ⇔ `F(T)` is a domino tableau.
    FoldDomino,
    /// Face distance identities on crossed diagrams.
    DistanceLemmas,
    /// Block decomposition, vertical pairs and the inverse bijection.
    BlockPatterns,
    /// Involutions, inverses and the promotion/folding/rectification identities.
    OperatorAlgebra,
}

impl Theorem {
    pub const ALL: [Theorem; 11] = [
        Theorem::TwoByN,
        Theorem::Fw1,
        Theorem::Fw2,
        Theorem::Roundtrip3Web,
        Theorem::PromotionRotation,
        Theorem::EvacuationReflection,
        Theorem::PromotionOrder,
        Theorem::FoldDomino,
        Theorem::DistanceLemmas,
        Theorem::BlockPatterns,
        Theorem::OperatorAlgebra,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::TwoByN => "thm-2byn",
            Theorem::Fw1 => "thm-fw1",
            Theorem::Fw2 => "thm-fw2",
            Theorem::Roundtrip3Web => "roundtrip-3web",
            Theorem::PromotionRotation => "promotion-rotation",
            Theorem::EvacuationReflection => "evacuation-reflection",
            Theorem::PromotionOrder => "promotion-order",
            Theorem::FoldDomino => "fold-domino",
            Theorem::DistanceLemmas => "distance-lemmas",
            Theorem::BlockPatterns => "block-patterns",
            Theorem::OperatorAlgebra => "operator-algebra",
        }
    }

    /// Default scope: quick enough for a routine run.
    pub fn default_scope(self) -> Scope {
        match self {
            Theorem::DistanceLemmas => Scope { two_row: 8, three_row: 4 },
            _ => Scope { two_row: 8, three_row: 5 },
        }
    }

    /// `(two-row family?, three-row family?, filter)`.
    fn families(self) -> (bool, bool, Filter) {
        match self {
            Theorem::TwoByN => (true, false, Filter::Symmetric),
            Theorem::Fw1 | Theorem::Fw2 => (false, true, Filter::Symmetric),
            Theorem::Roundtrip3Web => (true, true, Filter::All),
            Theorem::PromotionRotation | Theorem::EvacuationReflection => (true, true, Filter::All),
            Theorem::PromotionOrder | Theorem::FoldDomino | Theorem::OperatorAlgebra => (true, true, Filter::All),
            Theorem::DistanceLemmas | Theorem::BlockPatterns => (false, true, Filter::Domino),
        }
    }

    fn check(self, t: &Tableau, c: &mut Checks) {
        let rows = t.shape().num_rows();
        match self {
            Theorem::TwoByN => check_two_by_n(t, c),
            Theorem::Fw1 => check_fw1(t, c),
            Theorem::Fw2 => check_fw2(t, c),
            Theorem::Roundtrip3Web => check_roundtrip(t, c),
            Theorem::PromotionRotation if rows == 2 => check_symmetry2(t, c, true),
            Theorem::PromotionRotation => check_symmetry3(t, c, true),
            Theorem::EvacuationReflection if rows == 2 => check_symmetry2(t, c, false),
            Theorem::EvacuationReflection => check_symmetry3(t, c, false),
            Theorem::PromotionOrder => check_promotion_order(t, c),
            Theorem::FoldDomino => check_fold_domino(t, c),
            Theorem::DistanceLemmas => check_distance_lemmas(t, c),
            Theorem::BlockPatterns => check_block_patterns(t, c),
            Theorem::OperatorAlgebra => check_operator_algebra(t, c),
        }
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL.into_iter().find(|t| t.id() == s).ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub word: String,
    pub check: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub scope: Scope,
    pub instances: usize,
    /// Sorted by word, then check name.
    pub failures: Vec<Failure>,
    /// Wall-clock time; not part of [`VerificationReport::comparable`].
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Everything except the timing, for byte-stable comparison.
    pub fn comparable(&self) -> serde_json::Value {
        serde_json::json!({
            "theorem": self.theorem,
            "scope": self.scope,
            "instances": self.instances,
            "failures": self.failures,
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{status} {} (2-row n ≤ {}, 3-row n ≤ {}): {} instances, {} failures, {} ms",
            self.theorem,
            self.scope.two_row,
            self.scope.three_row,
            self.instances,
            self.failures.len(),
            self.elapsed_ms
        )?;
        for x in &self.failures {
            writeln!(f, "  {} [{}] expected {} got {}", x.word, x.check, x.expected, x.actual)?;
        }
        Ok(())
    }
}

/// Failures collected while checking one tableau.
struct Checks {
    word: String,
    failures: Vec<Failure>,
}

impl Checks {
    fn fail(&mut self, check: &str, expected: impl fmt::Display, actual: impl fmt::Display) {
        self.failures.push(Failure {
            word: self.word.clone(),
            check: check.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, check: &str, expected: T, actual: T) {
        if expected != actual {
            self.fail(check, expected, actual);
        }
    }

    fn holds(&mut self, check: &str, cond: bool) {
        if !cond {
            self.fail(check, true, false);
        }
    }

    fn ok<T>(&mut self, check: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(check, "success", format!("{}: {e}", e.name()));
                None
            }
        }
    }

    fn same_web(&mut self, check: &str, expected: &PlanarWeb, actual: &PlanarWeb) {
        self.eq(check, expected.canonical().digest, actual.canonical().digest);
    }
}

fn check_two_by_n(t: &Tableau, c: &mut Checks) {
    let (Some(f), Some(w)) = (c.ok("fold", fold(t)), c.ok("web2", web2_of_tableau(t))) else { return };
    let (Some(lhs), Some(rhs)) = (c.ok("web2 of fold", web2_of_tableau(&f)), c.ok("fold2", fold2(&w))) else {
        return;
    };
    c.eq("web2(F(T)) = fold2(web2(T))", lhs, rhs);
}

fn check_fw1(t: &Tableau, c: &mut Checks) {
    let Some(w) = c.ok("web", web_of_tableau(t)) else { return };
    let (Some(d), Some(f)) = (c.ok("domino of web", domino_of_symmetric_web(&w)), c.ok("fold", fold(t))) else {
        return;
    };
    c.eq("D_W = F(T_W)", f.word(), d.word());
}

fn check_fw2(t: &Tableau, c: &mut Checks) {
    let Some(w) = c.ok("web", web_of_tableau(t)) else { return };
    let Some(f) = c.ok("fold", fold(t)) else { return };
    let Some(x) = c.ok("crossed web", crossed_web(&f)) else { return };
    c.same_web("crossed web of F(T) = W_T", &w, &x);
}

fn check_roundtrip(t: &Tableau, c: &mut Checks) {
    if t.shape().num_rows() == 2 {
        if let Some(m) = c.ok("web2", web2_of_tableau(t)) {
            if let Some(back) = c.ok("tableau of web2", tableau_of_web2(&m)) {
                c.eq("2-web round trip", t.word(), back.word());
            }
        }
        return;
    }
    let Some(w) = c.ok("web", web_of_tableau(t)) else { return };
    let report = w.validate_3web();
    c.holds("valid 3-web", report.is_valid());
    if let Some(back) = c.ok("tableau of web", tableau_of_web(&w)) {
        c.eq("3-web round trip", t.word(), back.word());
    }
    check_dual_metric(&w, c);
}

fn check_dual_metric(w: &PlanarWeb, c: &mut Checks) {
    let faces = w.disk_faces();
    let rows: Vec<Vec<Option<usize>>> = faces.iter().map(|&f| w.distances_from(f).unwrap()).collect();
    let d = |i: usize, j: usize| rows[i][faces[j]];
    for i in 0..faces.len() {
        for j in 0..faces.len() {
            if d(i, j).is_none() || d(i, j) != d(j, i) {
                c.fail("dual distance symmetric", format!("{:?}", d(j, i)), format!("{:?}", d(i, j)));
                return;
            }
        }
    }
    for i in 0..faces.len() {
        for j in 0..faces.len() {
            for k in 0..faces.len() {
                if d(i, k).unwrap() > d(i, j).unwrap() + d(j, k).unwrap() {
                    c.fail("dual triangle inequality", "≤", format!("faces {i}, {j}, {k}"));
                    return;
                }
            }
        }
    }
}

fn check_symmetry2(t: &Tableau, c: &mut Checks, promotion: bool) {
    let Some(w) = c.ok("web2", web2_of_tableau(t)) else { return };
    if promotion {
        if let Some(p) = c.ok("promote", promote(t)).and_then(|p| c.ok("web2", web2_of_tableau(&p))) {
            c.eq("rotate2(W_T) = W_P(T)", p, rotate2(&w));
        }
    } else if let Some(e) = c.ok("evacuate", evacuate(t)).and_then(|e| c.ok("web2", web2_of_tableau(&e))) {
        c.eq("reflect2(W_T) = W_E(T)", e, reflect2(&w));
    }
}

fn check_symmetry3(t: &Tableau, c: &mut Checks, promotion: bool) {
    let Some(w) = c.ok("web", web_of_tableau(t)) else { return };
    if promotion {
        if let Some(p) = c.ok("promote", promote(t)).and_then(|p| c.ok("web", web_of_tableau(&p))) {
            c.same_web("rotate(W_T) = W_P(T)", &p, &w.rotate());
        }
    } else {
        if let Some(e) = c.ok("evacuate", evacuate(t)).and_then(|e| c.ok("web", web_of_tableau(&e))) {
            c.same_web("reflect(W_T) = W_E(T)", &e, &w.reflect());
        }
        if let Some(sym) = c.ok("symmetry", is_rotationally_symmetric(t)) {
            c.eq("T symmetric ⇔ W_T symmetrical", sym, w.is_symmetrical());
        }
    }
}

fn check_promotion_order(t: &Tableau, c: &mut Checks) {
    let n = t.size();
    let mut cur = t.clone();
    for _ in 0..n {
        let Some(next) = c.ok("promote", promote(&cur)) else { return };
        cur = next;
    }
    c.eq("P^N(T) = T", t.word(), cur.word());
    if t.shape().num_rows() == 3 {
        if let Some(w) = c.ok("web", web_of_tableau(t)) {
            let mut r = w.clone();
            for _ in 0..n {
                r = r.rotate();
            }
            c.same_web("rotate^N(W) = W", &w, &r);
        }
    }
}

fn check_fold_domino(t: &Tableau, c: &mut Checks) {
    let (Some(sym), Some(f)) = (c.ok("symmetry", is_rotationally_symmetric(t)), c.ok("fold", fold(t))) else {
        return;
    };
    c.eq("T symmetric ⇔ F(T) domino", sym, is_domino(&f));
}

fn check_operator_algebra(t: &Tableau, c: &mut Checks) {
    let n = t.size();
    if let Some(e) = c.ok("evacuate", evacuate(t)) {
        if let Some(ee) = c.ok("evacuate", evacuate(&e)) {
            c.eq("E(E(T)) = T", t.word(), ee.word());
        }
        if let Some(rc) = c.ok("rotate-complement", rotate180_complement(t)) {
            c.eq("E(T) = rotate-complement(T)", rc.word(), e.word());
        }
    }
    if let Some(p) = c.ok("promote", promote(t)) {
        if let Some(back) = c.ok("promote inverse", promote_inverse(&p)) {
            c.eq("P⁻¹(P(T)) = T", t.word(), back.word());
        }
    }
    if let Some(f) = c.ok("fold", fold(t)) {
        if let Some(u) = c.ok("unfold", unfold(&f)) {
            c.eq("unfold(F(T)) = T", t.word(), u.word());
        }
    }
    if let Some(u) = c.ok("unfold", unfold(t)) {
        if let Some(f) = c.ok("fold", fold(&u)) {
            c.eq("F(unfold(T)) = T", t.word(), f.word());
        }
    }

    // powers P^0 … P^N
    let mut powers = vec![t.clone()];
    for _ in 0..n {
        let Some(p) = c.ok("promote", promote(powers.last().unwrap())) else { return };
        powers.push(p);
    }
    for k in 1..n {
        let lhs = powers[k].at_most(n - k).map(|x| x.word());
        let rhs = t.above(k).map(|x| rectify(&x).word());
        if let (Some(l), Some(r)) = (c.ok("restrict", lhs), c.ok("rectify", rhs)) {
            c.eq(&format!("P^{k}(T)≤{} = Rect(T>{k} − {k})", n - k), r, l);
        }
        let lhs = t.at_most(k).map(|x| x.word());
        let rhs = powers[k].above(n - k).map(|x| rectify(&x).word());
        if let (Some(l), Some(r)) = (c.ok("restrict", lhs), c.ok("rectify", rhs)) {
            c.eq(&format!("T≤{k} = Rect(P^{k}(T)>{} − {})", n - k, n - k), r, l);
        }
    }
    for j in 1..=n / 2 {
        let bound = n + 1 - 2 * j;
        let lhs = partial_fold(t, j).and_then(|f| f.at_most(bound)).map(|x| x.word());
        let rhs = powers[j].at_most(bound).map(|x| x.word());
        if let (Some(l), Some(r)) = (c.ok("partial fold", lhs), c.ok("restrict", rhs)) {
            c.eq(&format!("f^{j}(T)≤{bound} = P^{j}(T)≤{bound}"), r, l);
        }
    }
    if is_rotationally_symmetric(t).unwrap_or(false) {
        if let Some(f) = c.ok("fold", fold(t)) {
            for j in 1..=n.div_ceil(2) {
                let v = (n + 2 - 2 * j) as u32;
                let (a, b) = (f.find(v), powers[j - 1].find(v));
                if a != b {
                    c.fail(&format!("entry {v} of F(T) sits as in P^{}(T)", j - 1), format!("{b:?}"), format!("{a:?}"));
                }
            }
        }
    }
    // slide order independence on T>k − k with a seeded random corner order
    let seed = t.word().bytes().fold(0u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in [n / 3, n / 2, 2 * n / 3] {
        if k == 0 || k >= n {
            continue;
        }
        let Some(skew) = c.ok("restrict", t.above(k)) else { return };
        let random = rectify_with(&skew, |corners| *(0..corners.len()).collect::<Vec<_>>().choose(&mut rng).unwrap());
        c.eq(&format!("Rect(T>{k}) order independent"), rectify(&skew).word(), random.word());
    }
}

fn check_block_patterns(d: &Tableau, c: &mut Checks) {
    let Some(dec) = c.ok("decompose", decompose_blocks(d)) else { return };
    let cols = d.shape().outer()[0];
    let mut next = 1;
    for (i, b) in dec.blocks.iter().enumerate() {
        c.eq("blocks partition the columns", next, b.first);
        next = b.last + 1;
        if b.kind == BlockType::Zero {
            c.holds("type-0 block is first and odd-only", i == 0 && dec.is_odd());
        }
    }
    c.eq("blocks partition the columns", cols + 1, next);
    let mut support: Vec<u32> = dec.vertical_pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let len = support.len();
    support.sort();
    support.dedup();
    c.eq("vertical pairs are disjoint", len, support.len());
    c.eq("one compression letter per domino", d.size() / 2, dec.num_dominoes());
    let Some(w) = c.ok("crossed web", crossed_web(d)) else { return };
    c.holds("crossed web is a 3-web", w.is_3web());
    c.holds("crossed web is symmetrical", w.is_symmetrical());
    if let Some(back) = c.ok("domino of crossed web", domino_of_symmetric_web(&w)) {
        c.eq("D of crossed web = D", d.word(), back.word());
    }
    if let Some(t) = c.ok("unfold", unfold(d)) {
        c.holds("unfold of a domino tableau is symmetric", is_rotationally_symmetric(&t).unwrap_or(false));
    }
}

fn check_distance_lemmas(d: &Tableau, c: &mut Checks) {
    let Some(cd) = c.ok("crossed diagram", CrossedDiagram::of_domino(d)) else { return };
    let web = cd.web();
    c.holds("crossed web is a 3-web", web.is_3web());
    for (a, b) in cd.diagram.intersecting_pairs() {
        if cd.crossing_case(a, b).is_none() {
            c.fail("intersecting arcs fall in a listed case", "(a)–(d)", format!("arcs {} and {}", a, b));
        }
    }
    let faces = web.disk_faces();
    for &x in &faces {
        let Some(dist) = c.ok("dual distances", web.distances_from(x)) else { return };
        for &y in &faces {
            let (Some(ad), Some(cs)) = (c.ok("arcdist", cd.arc_distance(x, y)), c.ok("CS", cd.coherent_separators(x, y)))
            else {
                return;
            };
            let wd = dist[y].unwrap_or(usize::MAX);
            if wd + cs.len() < ad {
                c.fail(&format!("webdist ≥ arcdist − |CS| on faces {x}, {y}"), format!("≥ {}", ad - cs.len()), wd);
            }
        }
        let Some(xm) = c.ok("mirror face", cd.mirror_face(x)) else { return };
        let (Some(ad), Some(eps)) = (c.ok("arcdist", cd.arc_distance(x, xm)), c.ok("ε", cd.epsilon(x))) else {
            return;
        };
        c.eq(&format!("webdist(X, X′) = arcdist − ε on face {x}"), ad - eps, dist[xm].unwrap_or(usize::MAX));
    }
    let n = web.n_boundary();
    for j in 1..=n {
        let l = web.web_distance(web.boundary_face(j), web.boundary_face(n - j + 1));
        let r = web.web_distance(web.boundary_face(j - 1), web.boundary_face(n - j));
        if let (Some(l), Some(r)) = (c.ok("webdist", l), c.ok("webdist", r)) {
            c.eq(&format!("webdist(B_{j}, B_{}) = webdist(B_{}, B_{})", n - j + 1, j - 1, n - j), r, l);
        }
    }
    if cd.decomposition.is_odd() {
        return;
    }
    let m = cd.decomposition.num_dominoes();
    let Some(wc) = c.ok("web of compression", web_of_tableau(&cd.decomposition.compression)) else { return };
    for k in 0..=m {
        let ad = cd.arc_distance(web.boundary_face(m + k), web.boundary_face(m - k));
        let wd = wc.web_distance(wc.boundary_face(k), wc.boundary_face(0));
        if let (Some(ad), Some(wd)) = (c.ok("arcdist", ad), c.ok("webdist", wd)) {
            c.eq(&format!("arcdist(A_{k}, A_{k}′) = 2 webdist(B_{k}, B_0)"), 2 * wd, ad);
        }
    }
}

fn worker_pool() -> rayon::ThreadPool {
    let workers = std::env::var("WEBFOLD_WORKERS").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool")
}

/// Runs a theorem over every filtered tableau of the shapes in `scope`.
pub fn verify_scoped(theorem: Theorem, scope: Scope) -> VerificationReport {
    let start = Instant::now();
    let (two, three, filter) = theorem.families();
    let mut shapes = Vec::new();
    if two {
        shapes.extend((1..=scope.two_row).map(|n| vec![n, n]));
    }
    if three {
        shapes.extend((1..=scope.three_row).map(|n| vec![n, n, n]));
    }
    let pool = worker_pool();
    let (instances, mut failures) = pool.install(|| {
        shapes
            .iter()
            .map(|s| {
                let words: Vec<String> = LatticeWords::new(s).collect();
                words
                    .par_iter()
                    .map(|w| tableau_of_lattice_word(s, w))
                    .filter(|t| filter.keeps(t))
                    .map(|t| {
                        let mut c = Checks { word: t.word(), failures: Vec::new() };
                        theorem.check(&t, &mut c);
                        (1usize, c.failures)
                    })
                    .reduce(
                        || (0, Vec::new()),
                        |(n1, mut f1), (n2, f2)| {
                            f1.extend(f2);
                            (n1 + n2, f1)
                        },
                    )
            })
            .fold((0, Vec::new()), |(n1, mut f1), (n2, f2)| {
                f1.extend(f2);
                (n1 + n2, f1)
            })
    });
    failures.sort();
    VerificationReport {
        theorem: theorem.id().to_string(),
        scope,
        instances,
        failures,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Runs a theorem by id with the same `max_n` for both families.
pub fn verify(theorem_id: &str, max_n: usize) -> Result<VerificationReport> {
    Ok(verify_scoped(theorem_id.parse()?, Scope::uniform(max_n)))
}
