//! Arc diagrams on a horizontal boundary line and their resolution into
//! planar webs.
//!
//! Arcs are upper semicircles between integer boundary positions. Two arcs
//! cross when their endpoints strictly interleave; crossing abscissae are
//! exact rationals, so the order of crossings along an arc never depends on
//! floating point.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::Tableau;
use crate::web::{Edge, EdgeTag, Layout, PlanarWeb, WebBuilder};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryVertex {
    pub label: String,
    pub x: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArcKind {
    First,
    Second,
}

/// A directed arc between two boundary vertices (indices in x order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub kind: ArcKind,
    pub crossed: bool,
}

/// A set of directed semicircular arcs in which every boundary vertex is
/// either a source with one outgoing arc or a sink with two incoming arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MDiagram {
    boundary: Vec<BoundaryVertex>,
    arcs: Vec<Arc>,
}

/// Pairs openers with closers like parentheses. Returns `(opener, closer)`.
pub(crate) fn match_parentheses<T: Copy>(items: impl IntoIterator<Item = (T, bool)>) -> Result<Vec<(T, T)>> {
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    for (item, open) in items {
        if open {
            stack.push(item);
        } else {
            let o = stack.pop().ok_or_else(|| Error::InvalidDiagram("unmatched closing vertex".into()))?;
            pairs.push((o, item));
        }
    }
    if !stack.is_empty() {
        return Err(Error::InvalidDiagram("unmatched opening vertex".into()));
    }
    Ok(pairs)
}

impl MDiagram {
    pub fn new(mut boundary: Vec<BoundaryVertex>, arcs: Vec<Arc>) -> Result<Self> {
        let mut order: Vec<usize> = (0..boundary.len()).collect();
        order.sort_by_key(|&i| boundary[i].x);
        let mut rank = vec![0; boundary.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        boundary = order.iter().map(|&i| boundary[i].clone()).collect();
        if boundary.windows(2).any(|w| w[0].x == w[1].x) {
            return Err(Error::InvalidDiagram("two boundary vertices share a position".into()));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(v) = boundary.iter().find(|v| !seen.insert(v.label.as_str())) {
            return Err(Error::InvalidDiagram(format!("duplicate label {}", v.label)));
        }
        let mut arcs = arcs;
        for a in arcs.iter_mut() {
            if a.tail >= rank.len() || a.head >= rank.len() || a.tail == a.head {
                return Err(Error::InvalidDiagram("arc endpoint out of range".into()));
            }
            a.tail = rank[a.tail];
            a.head = rank[a.head];
        }
        let mut outd = vec![0; boundary.len()];
        let mut ind = vec![0; boundary.len()];
        for a in &arcs {
            outd[a.tail] += 1;
            ind[a.head] += 1;
        }
        for (v, b) in boundary.iter().enumerate() {
            if !matches!((outd[v], ind[v]), (1, 0) | (0, 2)) {
                return Err(Error::InvalidBoundaryDegrees { label: b.label.clone() });
            }
        }
        Ok(MDiagram { boundary, arcs })
    }

    /// The m-diagram of a standard tableau of rectangular shape `3 × n`:
    /// first arcs join row-1 entries to row-2 entries, second arcs run from
    /// row-3 entries back to row-2 entries.
    pub fn of_tableau(t: &Tableau) -> Result<Self> {
        if t.shape().num_rows() != 3 || !t.shape().is_rectangle() {
            return Err(Error::WrongShape { expected: "a 3 × n rectangle".into() });
        }
        let letters = t.row_letters();
        let n = letters.len();
        let boundary = (1..=n).map(|k| BoundaryVertex { label: k.to_string(), x: k as i64 }).collect();
        let mut arcs = Vec::new();
        for (kind, top, bottom) in [(ArcKind::First, 1u8, 2u8), (ArcKind::Second, 2, 3)] {
            let items = (0..n).filter(|&i| letters[i] == top || letters[i] == bottom).map(|i| (i, letters[i] == top));
            for (o, c) in match_parentheses(items)? {
                let (tail, head) = if kind == ArcKind::First { (o, c) } else { (c, o) };
                arcs.push(Arc { tail, head, kind, crossed: false });
            }
        }
        MDiagram::new(boundary, arcs)
    }

    pub fn boundary(&self) -> &[BoundaryVertex] {
        &self.boundary
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Boundary index of a label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.boundary.iter().position(|b| b.label == label)
    }

    /// Arc index joining two boundary indices in either direction.
    pub fn find_arc(&self, a: usize, b: usize) -> Option<usize> {
        self.arcs.iter().position(|x| (x.tail == a && x.head == b) || (x.tail == b && x.head == a))
    }

    /// `(left, right)` boundary positions of an arc.
    pub fn span(&self, a: usize) -> (i64, i64) {
        let (p, q) = (self.boundary[self.arcs[a].tail].x, self.boundary[self.arcs[a].head].x);
        (p.min(q), p.max(q))
    }

    /// Abscissa of the interior crossing of two arcs, if they cross.
    pub fn crossing_x(&self, a: usize, b: usize) -> Option<Ratio<i64>> {
        let (p1, q1) = self.span(a);
        let (p2, q2) = self.span(b);
        let interleaved = (p1 < p2 && p2 < q1 && q1 < q2) || (p2 < p1 && p1 < q2 && q2 < q1);
        interleaved.then(|| Ratio::new(p2 * q2 - p1 * q1, (p2 + q2) - (p1 + q1)))
    }

    /// All crossings `(a, b, x)` with `a < b`.
    pub fn crossings(&self) -> Vec<(usize, usize, Ratio<i64>)> {
        let m = self.arcs.len();
        let mut out = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                if let Some(x) = self.crossing_x(a, b) {
                    out.push((a, b, x));
                }
            }
        }
        out
    }

    pub fn is_noncrossing(&self) -> bool {
        self.crossings().is_empty()
    }

    /// Pairs `(a, b)`, `a < b`, of arcs that cross or share an endpoint.
    pub fn intersecting_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.arcs.len();
        let mut out = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                let (x, y) = (self.arcs[a], self.arcs[b]);
                let shared = x.head == y.head || x.tail == y.tail || x.head == y.tail || x.tail == y.head;
                if shared || self.crossing_x(a, b).is_some() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Whether a face with the given arc-membership flags lies in the region
    /// `R_kl` cut out by two intersecting arcs, where `k` and `l` are
    /// boundary indices among their endpoints.
    ///
    /// A region over the boundary segment between two consecutive endpoints
    /// is identified by which of the two semicircles cover that segment; the
    /// remaining pair (leftmost and rightmost endpoint) names the outside.
    fn region_flags(&self, alpha: usize, beta: usize, k: usize, l: usize) -> (bool, bool) {
        let mut xs: Vec<i64> = [self.arcs[alpha].tail, self.arcs[alpha].head, self.arcs[beta].tail, self.arcs[beta].head]
            .iter()
            .map(|&v| self.boundary[v].x)
            .collect();
        xs.sort();
        xs.dedup();
        let (xk, xl) = (self.boundary[k].x, self.boundary[l].x);
        let (s, t) = (xk.min(xl), xk.max(xl));
        let i = xs.iter().position(|&x| x == s).expect("k is an endpoint");
        if xs.get(i + 1) != Some(&t) {
            return (false, false);
        }
        let covers = |a: usize| {
            let (p, q) = self.span(a);
            p <= s && t <= q
        };
        (covers(alpha), covers(beta))
    }

    /// `CS(X, Y)`: intersecting pairs `{α, β}`, `α = (a, b)`, `β = (c, d)`,
    /// with one face in `R_ad` and the other in `R_bc`. Faces are given by
    /// their sorted arc sets.
    pub fn coherent_separators(&self, x: &[usize], y: &[usize]) -> Vec<(usize, usize)> {
        let flags = |set: &[usize], a: usize, b: usize| (set.binary_search(&a).is_ok(), set.binary_search(&b).is_ok());
        self.intersecting_pairs()
            .into_iter()
            .filter(|&(al, be)| {
                let (a, b) = (self.arcs[al].tail, self.arcs[al].head);
                let (c, d) = (self.arcs[be].tail, self.arcs[be].head);
                let ad = self.region_flags(al, be, a, d);
                let bc = self.region_flags(al, be, b, c);
                let (fx, fy) = (flags(x, al, be), flags(y, al, be));
                (fx == ad && fy == bc) || (fx == bc && fy == ad)
            })
            .collect()
    }

    /// `α = (a, b)` is directed toward `β` when `a` is an extreme endpoint.
    pub fn directed_toward(&self, alpha: usize, beta: usize) -> bool {
        self.is_extreme(alpha, beta, self.arcs[alpha].tail)
    }

    /// `α = (a, b)` is directed away from `β` when `b` is an extreme endpoint.
    pub fn directed_away(&self, alpha: usize, beta: usize) -> bool {
        self.is_extreme(alpha, beta, self.arcs[alpha].head)
    }

    fn is_extreme(&self, alpha: usize, beta: usize, v: usize) -> bool {
        let xs = [self.arcs[alpha].tail, self.arcs[alpha].head, self.arcs[beta].tail, self.arcs[beta].head]
            .map(|v| self.boundary[v].x);
        let x = self.boundary[v].x;
        x == *xs.iter().min().unwrap() || x == *xs.iter().max().unwrap()
    }

    /// Replaces the planar web by resolving every crossing and every sink.
    pub fn resolve(&self) -> Result<PlanarWeb> {
        Ok(self.resolve_traced()?.web)
    }

    /// Resolves crossings into pairs of trivalent vertices joined by an
    /// intersection edge, and each sink into a trivalent sink hanging off
    /// its boundary vertex. Also reports where every web edge came from.
    pub fn resolve_traced(&self) -> Result<Resolution> {
        let nb = self.boundary.len();
        let crossings = self.crossings();
        // crossings met along each arc, in order from its tail
        let mut along: Vec<Vec<(Ratio<i64>, usize)>> = vec![Vec::new(); self.arcs.len()];
        for (c, &(a, b, x)) in crossings.iter().enumerate() {
            along[a].push((x, c));
            along[b].push((x, c));
        }
        for (a, list) in along.iter_mut().enumerate() {
            list.sort();
            for w in list.windows(2) {
                if w[0].0 == w[1].0 {
                    let other = |c: usize| if crossings[c].0 == a { crossings[c].1 } else { crossings[c].0 };
                    let mut t = [a, other(w[0].1), other(w[1].1)];
                    t.sort();
                    return Err(Error::ConcurrentArcs(t[0], t[1], t[2]));
                }
            }
            let arc = self.arcs[a];
            if self.boundary[arc.tail].x > self.boundary[arc.head].x {
                list.reverse();
            }
        }

        let mut bld = WebBuilder::new(nb);
        let mut origin = vec![EdgeOrigin::Boundary; nb];
        let mut sink_vertex = vec![None; nb];
        for (v, slot) in sink_vertex.iter_mut().enumerate() {
            if self.arcs.iter().any(|a| a.head == v) {
                *slot = Some(bld.add_vertex());
            }
        }
        let cross_vertices: Vec<(usize, usize)> =
            crossings.iter().map(|_| (bld.add_vertex(), bld.add_vertex())).collect();

        // darts at each crossing, keyed by (crossing, arc, incoming?)
        let mut at_cross: HashMap<(usize, usize, bool), usize> = HashMap::new();
        let mut up_dart = vec![usize::MAX; nb];
        let mut at_sink: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nb];
        for (a, arc) in self.arcs.iter().enumerate() {
            let mut from = arc.tail;
            let mut from_crossing: Option<usize> = None;
            for &(_, c) in along[a].iter().chain(std::iter::once(&(Ratio::from_integer(0), usize::MAX))) {
                let to = if c == usize::MAX { sink_vertex[arc.head].unwrap() } else { cross_vertices[c].0 };
                let (d_out, d_in) = bld.edge(from, to, EdgeTag::Arc);
                origin.push(EdgeOrigin::Arc(a));
                match from_crossing {
                    None => up_dart[arc.tail] = d_out,
                    Some(pc) => {
                        at_cross.insert((pc, a, false), d_out);
                    }
                }
                if c == usize::MAX {
                    at_sink[arc.head].push((a, d_in));
                } else {
                    at_cross.insert((c, a, true), d_in);
                    from = cross_vertices[c].1;
                    from_crossing = Some(c);
                }
            }
        }

        for (c, &(a, b, _)) in crossings.iter().enumerate() {
            let (u, w) = cross_vertices[c];
            let (e_w, e_u) = bld.edge(w, u, EdgeTag::Intersection);
            origin.push(EdgeOrigin::Crossing(c));
            let (alpha, beta) = if self.center2(a) < self.center2(b) { (a, b) } else { (b, a) };
            // ccw around the crossing: α toward right, β toward right, α toward left, β toward left
            let halves = [(alpha, true), (beta, true), (alpha, false), (beta, false)];
            let incoming = |(arc, right): (usize, bool)| {
                let tail_right = self.boundary[self.arcs[arc].tail].x > self.boundary[self.arcs[arc].head].x;
                tail_right == right
            };
            let i = (0..4)
                .find(|&i| incoming(halves[i]) && incoming(halves[(i + 1) % 4]))
                .expect("incoming halves of two crossing arcs are adjacent");
            let x1 = at_cross[&(c, halves[i].0, true)];
            let x2 = at_cross[&(c, halves[(i + 1) % 4].0, true)];
            let y1 = at_cross[&(c, halves[(i + 2) % 4].0, false)];
            let y2 = at_cross[&(c, halves[(i + 3) % 4].0, false)];
            bld.set_rotation(u, vec![x1, x2, e_u]);
            bld.set_rotation(w, vec![y1, y2, e_w]);
        }

        for v in 0..nb {
            if let Some(s) = sink_vertex[v] {
                let (d_v, d_s) = bld.edge(v, s, EdgeTag::Intersection);
                origin.push(EdgeOrigin::Sink(v));
                up_dart[v] = d_v;
                let xv = self.boundary[v].x;
                let mut incoming = at_sink[v].clone();
                // right-going arcs by increasing radius, then left-going by decreasing radius
                incoming.sort_by_key(|&(a, _)| {
                    let (p, q) = self.span(a);
                    if q > xv {
                        (0, q - p)
                    } else {
                        (1, -(q - p))
                    }
                });
                let mut rot: Vec<usize> = incoming.iter().map(|&(_, d)| d).collect();
                rot.push(d_s);
                bld.set_rotation(s, rot);
            }
            let rot = vec![bld.boundary_east(v), up_dart[v], bld.boundary_west(v)];
            bld.set_rotation(v, rot);
        }

        let layout = self.layout(&crossings, &cross_vertices, &sink_vertex, &along);
        let layout = layout.finish(&origin, bld.edges());
        let web = bld.build(Some(layout))?;
        let sink_heads: BTreeMap<usize, (usize, usize)> = (0..nb)
            .filter(|&v| sink_vertex[v].is_some())
            .map(|v| {
                let ins: Vec<usize> = at_sink[v].iter().map(|&(a, _)| a).collect();
                (v, (ins[0], ins[1]))
            })
            .collect();
        Ok(Resolution {
            web,
            edge_origin: origin,
            crossings: crossings
                .iter()
                .zip(&cross_vertices)
                .map(|(&(a, b, x), &(u, w))| Crossing { arcs: (a, b), x, u, w })
                .collect(),
            sink_arcs: sink_heads,
        })
    }

    /// Twice the centre of an arc.
    fn center2(&self, a: usize) -> i64 {
        let (p, q) = self.span(a);
        p + q
    }

    fn layout(
        &self,
        crossings: &[(usize, usize, Ratio<i64>)],
        cross_vertices: &[(usize, usize)],
        sink_vertex: &[Option<usize>],
        along: &[Vec<(Ratio<i64>, usize)>],
    ) -> LayoutDraft {
        let nb = self.boundary.len();
        let nv = nb + sink_vertex.iter().flatten().count() + 2 * crossings.len();
        let mut pos = vec![(0.0, 0.0); nv];
        let lift = 0.3;
        for (v, b) in self.boundary.iter().enumerate() {
            pos[v] = (b.x as f64, 0.0);
            if let Some(s) = sink_vertex[v] {
                pos[s] = (b.x as f64, lift);
            }
        }
        let point = |a: usize, x: f64| {
            let (p, q) = self.span(a);
            let (c, r) = ((p + q) as f64 / 2.0, (q - p) as f64 / 2.0);
            (x, (r * r - (x - c) * (x - c)).max(0.0).sqrt())
        };
        for (c, &(a, b, x)) in crossings.iter().enumerate() {
            let xf = *x.numer() as f64 / *x.denom() as f64;
            let pt = point(a, xf);
            // u sits below the crossing (toward the tails), w above
            let (u, w) = cross_vertices[c];
            let tail_dir = |arc: usize| {
                let t = self.boundary[self.arcs[arc].tail].x as f64;
                let p = point(arc, xf + (t - xf).signum() * 0.05);
                let (dx, dy) = (p.0 - pt.0, p.1 - pt.1);
                let l = (dx * dx + dy * dy).sqrt().max(1e-9);
                (dx / l, dy / l)
            };
            let (da, db) = (tail_dir(a), tail_dir(b));
            let (mx, my) = (da.0 + db.0, da.1 + db.1);
            let l = (mx * mx + my * my).sqrt().max(1e-9);
            let off = 0.12;
            pos[u] = (pt.0 + off * mx / l, pt.1 + off * my / l);
            pos[w] = (pt.0 - off * mx / l, pt.1 - off * my / l);
        }
        let mut arc_paths = Vec::new();
        for (a, list) in along.iter().enumerate() {
            let arc = self.arcs[a];
            let mut stops: Vec<f64> = vec![self.boundary[arc.tail].x as f64];
            stops.extend(list.iter().map(|(x, _)| *x.numer() as f64 / *x.denom() as f64));
            stops.push(self.boundary[arc.head].x as f64);
            let mut segs = Vec::new();
            for w in stops.windows(2) {
                let steps = 12;
                let seg: Vec<(f64, f64)> =
                    (1..steps).map(|i| point(a, w[0] + (w[1] - w[0]) * i as f64 / steps as f64)).collect();
                segs.push(seg);
            }
            arc_paths.push(segs);
        }
        LayoutDraft { pos, arc_paths }
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            boundary: self.boundary.clone(),
            arcs: self
                .arcs
                .iter()
                .map(|a| ArcJson {
                    tail: self.boundary[a.tail].label.clone(),
                    head: self.boundary[a.head].label.clone(),
                    kind: a.kind,
                    crossed: a.crossed,
                })
                .collect(),
        }
    }

    pub fn from_json(j: &DiagramJson) -> Result<Self> {
        let idx = |l: &str| {
            j.boundary
                .iter()
                .position(|b| b.label == l)
                .ok_or_else(|| Error::Parse(format!("arc endpoint {l:?} is not a boundary label")))
        };
        let arcs = j
            .arcs
            .iter()
            .map(|a| Ok(Arc { tail: idx(&a.tail)?, head: idx(&a.head)?, kind: a.kind, crossed: a.crossed }))
            .collect::<Result<Vec<_>>>()?;
        MDiagram::new(j.boundary.clone(), arcs)
    }
}

struct LayoutDraft {
    pos: Vec<(f64, f64)>,
    arc_paths: Vec<Vec<Vec<(f64, f64)>>>,
}

impl LayoutDraft {
    /// Gives each arc edge the stretch of its arc between its endpoints.
    fn finish(self, origin: &[EdgeOrigin], edges: &[Edge]) -> Layout {
        let d2 = |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).powi(2) + (p.1 - q.1).powi(2);
        let paths = origin
            .iter()
            .zip(edges)
            .map(|(o, e)| match *o {
                EdgeOrigin::Arc(a) => {
                    let (from, to) = (self.pos[e.from], self.pos[e.to]);
                    let mut best = self.arc_paths[a]
                        .iter()
                        .flat_map(|seg| {
                            let mut rev = seg.clone();
                            rev.reverse();
                            [seg.clone(), rev]
                        })
                        .min_by(|p, q| {
                            let cost = |s: &Vec<(f64, f64)>| d2(s[0], from) + d2(s[s.len() - 1], to);
                            cost(p).total_cmp(&cost(q))
                        })
                        .unwrap_or_default();
                    best.retain(|&p| d2(p, from) > 0.09 && d2(p, to) > 0.09);
                    best.insert(0, from);
                    best.push(to);
                    best
                }
                _ => Vec::new(),
            })
            .collect();
        Layout { vertices: self.pos, paths }
    }
}

impl fmt::Display for MDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .arcs
            .iter()
            .map(|a| {
                let mark = if a.crossed { "*" } else { "" };
                format!("{}→{}{}", self.boundary[a.tail].label, self.boundary[a.head].label, mark)
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// What a web edge of a resolved diagram stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrigin {
    Boundary,
    /// A piece of an arc.
    Arc(usize),
    /// The short edge replacing a crossing.
    Crossing(usize),
    /// The edge from a sink boundary vertex to its resolved trivalent sink.
    Sink(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub arcs: (usize, usize),
    pub x: Ratio<i64>,
    /// The trivalent sink receiving both arcs.
    pub u: usize,
    /// The trivalent source continuing both arcs.
    pub w: usize,
}

#[derive(Debug, Clone)]
pub struct Resolution {
    pub web: PlanarWeb,
    /// Origin of each web edge, indexed like `web.edges()`.
    pub edge_origin: Vec<EdgeOrigin>,
    pub crossings: Vec<Crossing>,
    /// The two arcs ending at each sink boundary vertex.
    pub sink_arcs: BTreeMap<usize, (usize, usize)>,
}

impl Resolution {
    /// The arcs whose semicircle lies above each face (`None` for the
    /// exterior face). Crossing a web edge toggles the arcs it stands for.
    pub fn face_arcs(&self) -> Result<Vec<Option<Vec<usize>>>> {
        let web = &self.web;
        let start = web.boundary_face(0);
        let mut sets: Vec<Option<Vec<bool>>> = vec![None; web.num_faces()];
        let n_arcs = 1 + self
            .edge_origin
            .iter()
            .filter_map(|o| if let EdgeOrigin::Arc(a) = o { Some(*a) } else { None })
            .max()
            .unwrap_or(0);
        sets[start] = Some(vec![false; n_arcs]);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            let here = sets[f].clone().unwrap();
            for &d in web.face_darts(f)? {
                let toggled: Vec<usize> = match self.edge_origin[d / 2] {
                    EdgeOrigin::Boundary => continue,
                    EdgeOrigin::Arc(a) => vec![a],
                    EdgeOrigin::Crossing(c) => vec![self.crossings[c].arcs.0, self.crossings[c].arcs.1],
                    EdgeOrigin::Sink(v) => vec![self.sink_arcs[&v].0, self.sink_arcs[&v].1],
                };
                let mut there = here.clone();
                for a in toggled {
                    there[a] = !there[a];
                }
                let g = web.face_of_dart(d ^ 1);
                match &sets[g] {
                    None => {
                        sets[g] = Some(there);
                        queue.push_back(g);
                    }
                    Some(s) if *s != there => {
                        return Err(Error::InvalidMap(format!("inconsistent arc sets on face {g}")));
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(sets
            .into_iter()
            .map(|s| s.map(|v| v.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()))
            .collect())
    }
}

/// Size of the symmetric difference of two sorted arc sets.
pub fn arc_distance(x: &[usize], y: &[usize]) -> usize {
    let (mut i, mut j, mut d) = (0, 0, 0);
    while i < x.len() || j < y.len() {
        match (x.get(i), y.get(j)) {
            (Some(a), Some(b)) if a == b => {
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => {
                d += 1;
                i += 1;
            }
            (Some(_), None) => {
                d += 1;
                i += 1;
            }
            _ => {
                d += 1;
                j += 1;
            }
        }
    }
    d
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArcJson {
    pub tail: String,
    pub head: String,
    pub kind: ArcKind,
    #[serde(default)]
    pub crossed: bool,
}

/// `{"boundary":[{"label":"3'","x":-3},…],"arcs":[{"tail":…,"head":…,"kind":"first","crossed":false}]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramJson {
    pub boundary: Vec<BoundaryVertex>,
    pub arcs: Vec<ArcJson>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verts(xs: &[i64]) -> Vec<BoundaryVertex> {
        xs.iter().map(|&x| BoundaryVertex { label: x.to_string(), x }).collect()
    }

    fn arc(tail: usize, head: usize) -> Arc {
        Arc { tail, head, kind: ArcKind::First, crossed: false }
    }

    #[test]
    fn tripod_from_column() {
        let t = Tableau::from_word("123").unwrap();
        let d = MDiagram::of_tableau(&t).unwrap();
        assert_eq!(d.to_string(), "1→2 3→2");
        let w = d.resolve().unwrap();
        assert!(w.is_3web());
        assert_eq!(w.num_internal(), 1);
    }

    #[test]
    fn crossing_abscissa_is_exact() {
        // geometry only; the degrees are not those of an m-diagram
        let d = MDiagram {
            boundary: verts(&[1, 2, 4, 7]),
            arcs: vec![arc(0, 2), arc(1, 3)],
        };
        // circles centred at 5/2 and 9/2: x = (2·7 − 1·4) / (9 − 5)
        assert_eq!(d.crossing_x(0, 1), Some(Ratio::new(10, 4)));
        assert_eq!(d.crossing_x(0, 0), None);
    }

    #[test]
    fn running_diagram_resolves_to_a_web() {
        let t = Tableau::from_word("111122213132223333").unwrap();
        let d = MDiagram::of_tableau(&t).unwrap();
        assert!(!d.is_noncrossing());
        let r = d.resolve_traced().unwrap();
        assert!(r.web.validate_3web().is_valid(), "{:?}", r.web.validate_3web());
        let arcs = r.face_arcs().unwrap();
        assert_eq!(arcs[r.web.boundary_face(0)].as_deref(), Some(&[][..]));
        assert!(arcs[r.web.exterior_face()].is_none());
        assert!(r.web.disk_faces().iter().all(|&f| arcs[f].is_some()));
    }

    #[test]
    fn three_concurrent_arcs_are_rejected() {
        // 1→9, 1'→9' and 3'→3 all pass through (0, 3)
        let labels = [-10, -9, -3, -1, 1, 3, 4, 9, 10];
        let b = verts(&labels);
        let at = |x: i64| labels.iter().position(|&y| y == x).unwrap();
        let arcs = vec![
            arc(at(-1), at(9)),
            arc(at(1), at(-9)),
            arc(at(-3), at(3)),
            arc(at(10), at(9)),
            arc(at(-10), at(-9)),
            arc(at(4), at(3)),
        ];
        let d = MDiagram::new(b, arcs).unwrap();
        assert_eq!(d.resolve().unwrap_err(), Error::ConcurrentArcs(0, 1, 2));
    }

    #[test]
    fn degree_violations_name_the_vertex() {
        let err = MDiagram::new(verts(&[1, 2, 3]), vec![arc(0, 1), arc(1, 2)]).unwrap_err();
        assert_eq!(err, Error::InvalidBoundaryDegrees { label: "2".into() });
    }

    #[test]
    fn json_round_trip() {
        let d = MDiagram::of_tableau(&Tableau::from_word("112323").unwrap()).unwrap();
        let s = serde_json::to_string(&d.to_json()).unwrap();
        assert_eq!(MDiagram::from_json(&serde_json::from_str(&s).unwrap()).unwrap(), d);
    }

    #[test]
    fn arc_distance_is_symmetric_difference() {
        assert_eq!(arc_distance(&[0, 2, 5], &[2, 3]), 3);
        assert_eq!(arc_distance(&[], &[]), 0);
    }
}
