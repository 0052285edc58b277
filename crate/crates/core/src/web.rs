//! Planar webs on a disk, stored as rotation systems.
//!
//! Boundary vertices carry ids `0..N` (label `k` has id `k − 1`); internal
//! vertices follow. Edge `e` owns two darts: `2e` leaves `edges[e].from`,
//! `2e + 1` leaves `edges[e].to`. The boundary line is closed into a circle
//! by boundary edges `k → k+1` (and `N → 1`), so the map is a sphere map with
//! one exterior face bounded only by boundary edges.
//!
//! Faces are orbits of `d ↦ σ⁻¹(twin(d))`, which keeps the face on the left
//! of each dart. Boundary vertex rotations always start with the boundary
//! dart toward the next label, followed by the web dart and the boundary dart
//! toward the previous label.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeTag {
    Arc,
    Intersection,
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub tag: EdgeTag,
}

/// Face identifier, valid for the web it came from.
pub type FaceId = usize;

/// Drawing coordinates carried along for rendering.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Layout {
    pub vertices: Vec<(f64, f64)>,
    /// Optional polyline per edge (endpoints included); empty means straight.
    pub paths: Vec<Vec<(f64, f64)>>,
}

#[derive(Debug, Clone)]
pub struct PlanarWeb {
    n_boundary: usize,
    n_vertices: usize,
    edges: Vec<Edge>,
    rotation: Vec<Vec<usize>>,
    dart_pos: Vec<usize>,
    face_of_dart: Vec<FaceId>,
    faces: Vec<Vec<usize>>,
    layout: Option<Layout>,
}

#[inline]
fn twin(d: usize) -> usize {
    d ^ 1
}

impl PlanarWeb {
    /// Assembles a map and checks that it is a consistent disk map.
    ///
    /// `rotation[v]` lists the darts leaving `v` counterclockwise. Boundary
    /// rotations may start anywhere; they are normalized.
    pub fn from_parts(
        n_boundary: usize,
        edges: Vec<Edge>,
        mut rotation: Vec<Vec<usize>>,
        layout: Option<Layout>,
    ) -> Result<Self> {
        let n_vertices = rotation.len();
        if n_boundary < 3 || n_boundary > n_vertices {
            return Err(Error::InvalidMap(format!("{n_boundary} boundary vertices")));
        }
        let origin = |d: usize| if d.is_multiple_of(2) { edges[d / 2].from } else { edges[d / 2].to };
        let mut dart_pos = vec![usize::MAX; 2 * edges.len()];
        for e in &edges {
            if e.from >= n_vertices || e.to >= n_vertices {
                return Err(Error::InvalidMap("edge endpoint out of range".into()));
            }
        }
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= dart_pos.len() || dart_pos[d] != usize::MAX || origin(d) != v {
                    return Err(Error::InvalidMap(format!("dart {d} misplaced at vertex {v}")));
                }
                dart_pos[d] = i;
            }
        }
        if dart_pos.contains(&usize::MAX) {
            return Err(Error::InvalidMap("a dart is missing from the rotation system".into()));
        }
        let n = n_boundary;
        for (b, rot) in rotation.iter_mut().enumerate().take(n) {
            let next = (b + 1) % n;
            let prev = (b + n - 1) % n;
            let is_bd = |d: usize, to: usize| {
                let e = edges[d / 2];
                e.tag == EdgeTag::Boundary && origin(twin(d)) == to
            };
            let Some(start) = rot.iter().position(|&d| is_bd(d, next)) else {
                return Err(Error::InvalidMap(format!("boundary vertex {} lacks its boundary edges", b + 1)));
            };
            rot.rotate_left(start);
            if rot.len() != 3 || !is_bd(rot[2], prev) || edges[rot[1] / 2].tag == EdgeTag::Boundary {
                return Err(Error::InvalidMap(format!("boundary vertex {} is not [next, web, previous]", b + 1)));
            }
            for (i, &d) in rot.iter().enumerate() {
                dart_pos[d] = i;
            }
        }
        for (v, rot) in rotation.iter().enumerate().skip(n) {
            if rot.iter().any(|&d| edges[d / 2].tag == EdgeTag::Boundary) {
                return Err(Error::InvalidMap(format!("internal vertex {v} touches a boundary edge")));
            }
        }
        let boundary_edges = edges.iter().filter(|e| e.tag == EdgeTag::Boundary).count();
        if boundary_edges != n {
            return Err(Error::InvalidMap(format!("{boundary_edges} boundary edges for {n} boundary vertices")));
        }

        let mut web = PlanarWeb {
            n_boundary,
            n_vertices,
            edges,
            rotation,
            dart_pos,
            face_of_dart: Vec::new(),
            faces: Vec::new(),
            layout,
        };
        web.trace_faces();
        let (v, e, f) = (web.n_vertices as i64, web.edges.len() as i64, web.faces.len() as i64);
        if v - e + f != 2 {
            return Err(Error::InvalidMap(format!("Euler characteristic {} ≠ 2", v - e + f)));
        }
        Ok(web)
    }

    fn trace_faces(&mut self) {
        let mut face_of_dart = vec![usize::MAX; 2 * self.edges.len()];
        let mut faces = Vec::new();
        for start in 0..face_of_dart.len() {
            if face_of_dart[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            while face_of_dart[d] == usize::MAX {
                face_of_dart[d] = id;
                walk.push(d);
                d = self.next_in_face(d);
            }
            faces.push(walk);
        }
        self.face_of_dart = face_of_dart;
        self.faces = faces;
    }

    /// Origin vertex of a dart.
    pub fn origin(&self, d: usize) -> usize {
        let e = self.edges[d / 2];
        if d.is_multiple_of(2) {
            e.from
        } else {
            e.to
        }
    }

    /// Vertex a dart points at.
    pub fn head(&self, d: usize) -> usize {
        self.origin(twin(d))
    }

    /// The dart following `d` around the face on its left.
    pub fn next_in_face(&self, d: usize) -> usize {
        let t = twin(d);
        let v = self.origin(t);
        let rot = &self.rotation[v];
        rot[(self.dart_pos[t] + rot.len() - 1) % rot.len()]
    }

    pub fn n_boundary(&self) -> usize {
        self.n_boundary
    }

    pub fn num_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn num_internal(&self) -> usize {
        self.n_vertices - self.n_boundary
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn layout(&self) -> Option<&Layout> {
        self.layout.as_ref()
    }

    pub fn is_boundary_vertex(&self, v: usize) -> bool {
        v < self.n_boundary
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn face_of_dart(&self, d: usize) -> FaceId {
        self.face_of_dart[d]
    }

    pub fn face_darts(&self, f: FaceId) -> Result<&[usize]> {
        self.faces.get(f).map(Vec::as_slice).ok_or(Error::UnknownFace(f))
    }

    /// `B_k` for `k ∈ 0..=N`: the face between boundary labels `k` and `k+1`;
    /// `B_0 = B_N` is the outer face between `N` and `1`.
    pub fn boundary_face(&self, k: usize) -> FaceId {
        let n = self.n_boundary;
        let b = (k % n + n - 1) % n;
        self.face_of_dart[self.rotation[b][0]]
    }

    /// The face outside the disk, bounded only by boundary edges.
    pub fn exterior_face(&self) -> FaceId {
        self.face_of_dart[self.rotation[0][2]]
    }

    /// All faces except the exterior one.
    pub fn disk_faces(&self) -> Vec<FaceId> {
        let ext = self.exterior_face();
        (0..self.faces.len()).filter(|&f| f != ext).collect()
    }

    /// A face with no boundary edge on its walk.
    pub fn is_internal_face(&self, f: FaceId) -> bool {
        self.faces[f].iter().all(|&d| self.edges[d / 2].tag != EdgeTag::Boundary)
    }

    /// Breadth-first distances in the dual graph; boundary edges are walls.
    pub fn distances_from(&self, x: FaceId) -> Result<Vec<Option<usize>>> {
        if x >= self.faces.len() {
            return Err(Error::UnknownFace(x));
        }
        let mut dist = vec![None; self.faces.len()];
        dist[x] = Some(0);
        let mut queue = VecDeque::from([x]);
        while let Some(f) = queue.pop_front() {
            let here = dist[f].unwrap();
            for &d in &self.faces[f] {
                if self.edges[d / 2].tag == EdgeTag::Boundary {
                    continue;
                }
                let g = self.face_of_dart[twin(d)];
                if dist[g].is_none() {
                    dist[g] = Some(here + 1);
                    queue.push_back(g);
                }
            }
        }
        Ok(dist)
    }

    /// The minimal number of web edges crossed to get from `x` to `y`.
    pub fn web_distance(&self, x: FaceId, y: FaceId) -> Result<usize> {
        if y >= self.faces.len() {
            return Err(Error::UnknownFace(y));
        }
        self.distances_from(x)?[y].ok_or_else(|| Error::InvalidMap(format!("faces {x} and {y} are not connected")))
    }

    /// Checks the 3-web conditions and reports every violation found.
    pub fn validate_3web(&self) -> WebReport {
        let mut violations = Vec::new();
        let n = self.n_boundary;
        if !n.is_multiple_of(3) {
            violations.push(Violation::BoundaryCount(n));
        }
        for v in 0..self.n_vertices {
            let web_darts: Vec<usize> = self.rotation[v]
                .iter()
                .copied()
                .filter(|&d| self.edges[d / 2].tag != EdgeTag::Boundary)
                .collect();
            let outgoing = web_darts.iter().filter(|&&d| d % 2 == 0).count();
            if v < n {
                if web_darts.len() != 1 {
                    violations.push(Violation::BoundaryDegree { label: v + 1, degree: web_darts.len() });
                } else if outgoing != 1 {
                    violations.push(Violation::BoundaryNotSource { label: v + 1 });
                }
            } else if web_darts.len() != 3 {
                violations.push(Violation::InternalDegree { vertex: v, degree: web_darts.len() });
            } else if outgoing != 0 && outgoing != 3 {
                violations.push(Violation::MixedOrientation { vertex: v });
            }
        }
        for f in 0..self.faces.len() {
            if self.is_internal_face(f) && self.faces[f].len() < 6 {
                violations.push(Violation::SmallFace { face: f, sides: self.faces[f].len() });
            }
        }
        WebReport { violations }
    }

    pub fn is_3web(&self) -> bool {
        self.validate_3web().is_valid()
    }

    fn relabelled(&self, map_boundary: impl Fn(usize) -> usize, mirror: bool) -> PlanarWeb {
        let n = self.n_boundary;
        let map = |v: usize| if v < n { map_boundary(v) } else { v };
        let edges: Vec<Edge> =
            self.edges.iter().map(|e| Edge { from: map(e.from), to: map(e.to), tag: e.tag }).collect();
        let mut rotation = vec![Vec::new(); self.n_vertices];
        for (v, rot) in self.rotation.iter().enumerate() {
            let mut r = rot.clone();
            if mirror {
                r.reverse();
            }
            rotation[map(v)] = r;
        }
        let layout = if mirror {
            self.layout.as_ref().map(|l| Layout {
                vertices: {
                    let mut vs = vec![(0.0, 0.0); self.n_vertices];
                    for (v, &(x, y)) in l.vertices.iter().enumerate() {
                        vs[map(v)] = (-x, y);
                    }
                    vs
                },
                paths: l.paths.iter().map(|p| p.iter().map(|&(x, y)| (-x, y)).collect()).collect(),
            })
        } else {
            None
        };
        PlanarWeb::from_parts(n, edges, rotation, layout).expect("relabelling preserves map validity")
    }

    /// Cyclic rotation: boundary label `k` becomes `k − 1` (and 1 becomes `N`).
    pub fn rotate(&self) -> PlanarWeb {
        let n = self.n_boundary;
        self.relabelled(|b| (b + n - 1) % n, false)
    }

    /// Reflection: label `k` becomes `N + 1 − k`, and the embedding is mirrored.
    pub fn reflect(&self) -> PlanarWeb {
        let n = self.n_boundary;
        self.relabelled(|b| n - 1 - b, true)
    }

    pub fn is_symmetrical(&self) -> bool {
        self.reflect().canonical() == self.canonical()
    }

    /// Deterministic serialization, equal exactly for webs related by a
    /// boundary-label-preserving, orientation-preserving planar isomorphism.
    ///
    /// Internal vertices are renamed in breadth-first discovery order starting
    /// from the boundary; each vertex lists its darts counterclockwise from a
    /// canonical start dart as `neighbour.twin_position` plus `o`/`i` for the
    /// edge direction or `b` for boundary edges.
    pub fn canonical(&self) -> CanonicalWebForm {
        let n = self.n_boundary;
        let mut id = vec![usize::MAX; self.n_vertices];
        let mut start = vec![0usize; self.n_vertices];
        let mut order: Vec<usize> = (0..n).collect();
        for (b, slot) in id.iter_mut().enumerate().take(n) {
            *slot = b;
        }
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            let rot = &self.rotation[v];
            for k in 0..rot.len() {
                let d = rot[(start[v] + k) % rot.len()];
                let w = self.head(d);
                if id[w] == usize::MAX {
                    id[w] = order.len();
                    start[w] = self.dart_pos[twin(d)];
                    order.push(w);
                }
            }
            i += 1;
        }
        let mut text = format!("n={} v={} e={}\n", n, self.n_vertices, self.edges.len());
        if order.len() < self.n_vertices {
            text.push_str(&format!("unreached={}\n", self.n_vertices - order.len()));
        }
        for &v in &order {
            let rot = &self.rotation[v];
            let deg = rot.len();
            let items: Vec<String> = (0..deg)
                .map(|k| {
                    let d = rot[(start[v] + k) % deg];
                    let w = self.head(d);
                    let tp = (self.dart_pos[twin(d)] + self.rotation[w].len() - start[w]) % self.rotation[w].len();
                    let dir = match self.edges[d / 2].tag {
                        EdgeTag::Boundary => 'b',
                        _ if d.is_multiple_of(2) => 'o',
                        _ => 'i',
                    };
                    format!("{}.{}{}", id[w], tp, dir)
                })
                .collect();
            text.push_str(&format!("{}:{}\n", id[v], items.join(",")));
        }
        let digest = hex::encode(Sha256::digest(text.as_bytes()));
        CanonicalWebForm { digest, text }
    }

    /// The serialized JSON form.
    pub fn to_json(&self) -> WebJson {
        let n = self.n_boundary;
        let rotation = (0..self.n_vertices).map(|v| ((v + 1).to_string(), self.rotation[v].clone())).collect();
        let coords = self.layout.as_ref().map(|l| {
            l.vertices.iter().enumerate().map(|(v, &(x, y))| ((v + 1).to_string(), [x, y])).collect()
        });
        let paths = self.layout.as_ref().and_then(|l| {
            let p: BTreeMap<String, Vec<[f64; 2]>> = l
                .paths
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.is_empty())
                .map(|(e, p)| (e.to_string(), p.iter().map(|&(x, y)| [x, y]).collect()))
                .collect();
            (!p.is_empty()).then_some(p)
        });
        WebJson {
            n,
            internal: self.n_vertices - n,
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson { from: e.from + 1, to: e.to + 1, tag: e.tag })
                .collect(),
            rotation,
            coords,
            paths,
        }
    }

    pub fn from_json(j: &WebJson) -> Result<PlanarWeb> {
        let nv = j.n + j.internal;
        let vid = |v: usize| {
            if v == 0 || v > nv {
                Err(Error::Parse(format!("vertex {v} out of range 1..={nv}")))
            } else {
                Ok(v - 1)
            }
        };
        let edges = j
            .edges
            .iter()
            .map(|e| Ok(Edge { from: vid(e.from)?, to: vid(e.to)?, tag: e.tag }))
            .collect::<Result<Vec<_>>>()?;
        let mut rotation = vec![Vec::new(); nv];
        for (k, darts) in &j.rotation {
            let v = vid(k.parse().map_err(|_| Error::Parse(format!("bad vertex key {k:?}")))?)?;
            rotation[v] = darts.clone();
        }
        let layout = j.coords.as_ref().map(|c| {
            let mut vertices = vec![(0.0, 0.0); nv];
            for (k, &[x, y]) in c {
                if let Some(v) = k.parse::<usize>().ok().and_then(|v| vid(v).ok()) {
                    vertices[v] = (x, y);
                }
            }
            let mut paths = vec![Vec::new(); edges.len()];
            if let Some(ps) = &j.paths {
                for (k, p) in ps {
                    if let Some(e) = k.parse::<usize>().ok().filter(|&e| e < edges.len()) {
                        paths[e] = p.iter().map(|&[x, y]| (x, y)).collect();
                    }
                }
            }
            Layout { vertices, paths }
        });
        PlanarWeb::from_parts(j.n, edges, rotation, layout)
    }
}

impl PartialEq for PlanarWeb {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalWebForm {
    /// Lowercase hex SHA-256 of `text`.
    pub digest: String,
    pub text: String,
}

impl fmt::Display for CanonicalWebForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digest)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    BoundaryCount(usize),
    BoundaryDegree { label: usize, degree: usize },
    BoundaryNotSource { label: usize },
    InternalDegree { vertex: usize, degree: usize },
    MixedOrientation { vertex: usize },
    SmallFace { face: FaceId, sides: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WebReport {
    pub violations: Vec<Violation>,
}

impl WebReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: usize,
    pub to: usize,
    pub tag: EdgeTag,
}

/// `{"n":N,"internal":m,"edges":[…],"rotation":{vertex:[darts ccw]}}` with
/// 1-based vertex ids (boundary `1..=N`); edge `i` owns darts `2i` (at
/// `from`) and `2i+1` (at `to`).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WebJson {
    pub n: usize,
    pub internal: usize,
    pub edges: Vec<EdgeJson>,
    pub rotation: BTreeMap<String, Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<BTreeMap<String, [f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paths: Option<BTreeMap<String, Vec<[f64; 2]>>>,
}

/// Incremental builder used by resolution and by tests that hand-build maps.
#[derive(Debug, Default)]
pub struct WebBuilder {
    n_boundary: usize,
    edges: Vec<Edge>,
    rotation: Vec<Vec<usize>>,
}

impl WebBuilder {
    /// Starts a map with `n` boundary vertices and their boundary cycle.
    /// Returns the builder; the web dart of each boundary vertex is added by
    /// [`WebBuilder::edge`] and placed with [`WebBuilder::set_rotation`].
    pub fn new(n_boundary: usize) -> Self {
        let mut b = WebBuilder { n_boundary, edges: Vec::new(), rotation: vec![Vec::new(); n_boundary] };
        for k in 0..n_boundary {
            b.edges.push(Edge { from: k, to: (k + 1) % n_boundary, tag: EdgeTag::Boundary });
        }
        b
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn add_vertex(&mut self) -> usize {
        self.rotation.push(Vec::new());
        self.rotation.len() - 1
    }

    /// Adds an edge and returns `(dart at from, dart at to)`.
    pub fn edge(&mut self, from: usize, to: usize, tag: EdgeTag) -> (usize, usize) {
        self.edges.push(Edge { from, to, tag });
        let e = self.edges.len() - 1;
        (2 * e, 2 * e + 1)
    }

    /// Dart at boundary vertex `b` toward `b + 1`.
    pub fn boundary_east(&self, b: usize) -> usize {
        2 * b
    }

    /// Dart at boundary vertex `b` toward `b − 1`.
    pub fn boundary_west(&self, b: usize) -> usize {
        let n = self.n_boundary;
        2 * ((b + n - 1) % n) + 1
    }

    pub fn set_rotation(&mut self, v: usize, darts: Vec<usize>) {
        self.rotation[v] = darts;
    }

    pub fn build(self, layout: Option<Layout>) -> Result<PlanarWeb> {
        PlanarWeb::from_parts(self.n_boundary, self.edges, self.rotation, layout)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Three boundary sources feeding one internal sink.
    fn tripod() -> PlanarWeb {
        let mut b = WebBuilder::new(3);
        let s = b.add_vertex();
        let mut at_s = Vec::new();
        for k in 0..3 {
            let (out, inn) = b.edge(k, s, EdgeTag::Arc);
            let rot = vec![b.boundary_east(k), out, b.boundary_west(k)];
            b.set_rotation(k, rot);
            at_s.push(inn);
        }
        // seen from the sink, 1, 2, 3 lie counterclockwise below it
        b.set_rotation(s, at_s);
        b.build(None).unwrap()
    }

    #[test]
    fn tripod_is_a_web() {
        let w = tripod();
        assert_eq!(w.num_faces(), 4);
        assert!(w.validate_3web().is_valid());
        assert_eq!(w.web_distance(w.boundary_face(0), w.boundary_face(0)).unwrap(), 0);
        let d: Vec<usize> = (0..=3).map(|k| w.web_distance(w.boundary_face(0), w.boundary_face(k)).unwrap()).collect();
        assert_eq!(d, vec![0, 1, 1, 0]);
        assert!(w.is_symmetrical());
        assert_eq!(w.canonical(), w.canonical());
        assert_eq!(w.rotate().rotate().rotate().canonical(), w.canonical());
    }

    /// Six boundary sources around an internal square `t1 → s1 ← t2 → s2 ← t1`.
    fn square() -> PlanarWeb {
        let mut b = WebBuilder::new(6);
        let [s1, t1, s2, t2, s3, s4] = [(); 6].map(|_| b.add_vertex());
        let attach = |b: &mut WebBuilder, k: usize, v: usize| {
            let (out, inn) = b.edge(k, v, EdgeTag::Arc);
            let rot = vec![b.boundary_east(k), out, b.boundary_west(k)];
            b.set_rotation(k, rot);
            inn
        };
        let b1 = attach(&mut b, 0, s1);
        let b2 = attach(&mut b, 1, s3);
        let b3 = attach(&mut b, 2, s3);
        let b4 = attach(&mut b, 3, s2);
        let b5 = attach(&mut b, 4, s4);
        let b6 = attach(&mut b, 5, s4);
        let (t1s1, s1t1) = b.edge(t1, s1, EdgeTag::Arc);
        let (t1s2, s2t1) = b.edge(t1, s2, EdgeTag::Arc);
        let (t2s1, s1t2) = b.edge(t2, s1, EdgeTag::Arc);
        let (t2s2, s2t2) = b.edge(t2, s2, EdgeTag::Arc);
        let (t1s3, s3t1) = b.edge(t1, s3, EdgeTag::Arc);
        let (t2s4, s4t2) = b.edge(t2, s4, EdgeTag::Arc);
        b.set_rotation(s1, vec![b1, s1t1, s1t2]);
        b.set_rotation(t1, vec![t1s1, t1s3, t1s2]);
        b.set_rotation(s2, vec![s2t2, s2t1, b4]);
        b.set_rotation(t2, vec![t2s4, t2s1, t2s2]);
        b.set_rotation(s3, vec![s3t1, b2, b3]);
        b.set_rotation(s4, vec![b6, s4t2, b5]);
        b.build(None).unwrap()
    }

    #[test]
    fn square_face_is_rejected() {
        let w = square();
        assert_eq!(w.num_faces(), 8);
        let report = w.validate_3web();
        assert!(!report.is_valid());
        assert!(report.violations.iter().any(|v| matches!(v, Violation::SmallFace { sides: 4, .. })), "{report:?}");
        assert!(!w.is_3web());
    }

    #[test]
    fn unknown_faces_are_reported() {
        let w = tripod();
        assert_eq!(w.web_distance(0, 99).unwrap_err(), Error::UnknownFace(99));
        assert_eq!(w.distances_from(42).unwrap_err(), Error::UnknownFace(42));
    }

    #[test]
    fn json_round_trip_preserves_canonical_form() {
        let w = tripod();
        let j = serde_json::to_string(&w.to_json()).unwrap();
        let back = PlanarWeb::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back.canonical(), w.canonical());
    }

    #[test]
    fn orientation_changes_the_canonical_form() {
        let w = tripod();
        let mut j = w.to_json();
        let e = j.edges.iter_mut().find(|e| e.tag == EdgeTag::Arc).unwrap();
        std::mem::swap(&mut e.from, &mut e.to);
        // swapping endpoints also swaps dart ownership; fix the rotation lists
        let idx = j.edges.iter().position(|e| e.tag == EdgeTag::Arc).unwrap();
        let (d0, d1) = (2 * idx, 2 * idx + 1);
        for darts in j.rotation.values_mut() {
            for d in darts.iter_mut() {
                if *d == d0 {
                    *d = d1;
                } else if *d == d1 {
                    *d = d0;
                }
            }
        }
        let flipped = PlanarWeb::from_json(&j).unwrap();
        assert_ne!(flipped.canonical(), w.canonical());
        assert!(!flipped.is_3web());
    }
}
