//! Plane bipartite graphs carrying an explicit straight-line drawing.
//!
//! A [`PlaneGraph`] is built from a [`GraphDocument`] (vertices with integer
//! coordinates, edges as id pairs). Everything else is derived: the proper
//! 2-coloring, the clockwise rotation system, the face set traced from the
//! rotations, and the infinite face. Construction validates simplicity,
//! connectivity, bipartiteness, and that the drawing is a plane embedding
//! (exact segment-intersection tests, no floating point).
//!
//! Orientation convention: finite face walks run clockwise, so their
//! polygons have negative signed area; the infinite face walk is the single
//! one with positive signed area.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{self, Containment, Point, RationalPoint, COORD_LIMIT};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// On-disk form of a plane graph; see the input schema in the README.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDocument {
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexSpec {
    pub id: String,
    pub x: i64,
    pub y: i64,
}

#[derive(Debug, Clone)]
pub struct Vertex {
    pub name: String,
    pub pos: Point,
    pub color: Color,
}

/// A face of the embedding. The boundary walk stores directed traversals
/// `(source vertex, edge)`; in a 2-connected graph every walk is a simple
/// cycle.
#[derive(Debug, Clone)]
pub struct Face {
    pub id: FaceId,
    walk: Vec<(VertexId, EdgeId)>,
    pub is_infinite: bool,
    area2: i128,
    interior: Option<RationalPoint>,
}

impl Face {
    pub fn walk(&self) -> &[(VertexId, EdgeId)] {
        &self.walk
    }

    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.walk.iter().map(|&(_, e)| e)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.walk.iter().map(|&(v, _)| v)
    }

    /// Twice the signed area of the boundary walk polygon.
    pub fn area2(&self) -> i128 {
        self.area2
    }

    /// An exact point strictly inside the face; `None` for the infinite
    /// face and for non-simple walks.
    pub fn interior_point(&self) -> Option<RationalPoint> {
        self.interior
    }

    /// The boundary as a vertex cycle, when the walk is simple.
    pub fn simple_cycle(&self) -> Option<Vec<VertexId>> {
        let verts: Vec<VertexId> = self.vertices().collect();
        let distinct: HashSet<_> = verts.iter().copied().collect();
        (distinct.len() == verts.len() && verts.len() >= 3).then_some(verts)
    }
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(VertexId, VertexId)>,
    /// Clockwise cyclic neighbor order per vertex: `(neighbor, edge)`.
    rotation: Vec<Vec<(VertexId, EdgeId)>>,
    faces: Vec<Face>,
    infinite_face: FaceId,
    /// The two faces bordering each edge (in dart order).
    edge_faces: Vec<[FaceId; 2]>,
}

impl PlaneGraph {
    pub fn from_document(doc: &GraphDocument) -> Result<PlaneGraph> {
        let vertices = validate_vertices(&doc.vertices)?;
        let index: HashMap<&str, VertexId> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.name.as_str(), i))
            .collect();
        let edges = validate_edges(&doc.edges, &index)?;

        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (e, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, e));
            adjacency[v].push((u, e));
        }

        check_connected(vertices.len(), &adjacency)?;
        let colors = two_color(&vertices, &adjacency)?;
        let mut vertices = vertices;
        for (v, c) in colors.into_iter().enumerate() {
            vertices[v].color = c;
        }
        check_plane_drawing(&vertices, &edges)?;

        let rotation = clockwise_rotation(&vertices, adjacency);
        let (faces, infinite_face, edge_faces) =
            trace_faces_impl(&vertices, &edges, &rotation)?;

        Ok(PlaneGraph {
            vertices,
            edges,
            rotation,
            faces,
            infinite_face,
            edge_faces,
        })
    }

    pub fn from_json(text: &str) -> Result<PlaneGraph> {
        let doc: GraphDocument = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("bad graph JSON: {e}")))?;
        PlaneGraph::from_document(&doc)
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexSpec {
                    id: v.name.clone(),
                    x: v.pos.0,
                    y: v.pos.1,
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| [self.vertices[u].name.clone(), self.vertices[v].name.clone()])
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn pos(&self, v: VertexId) -> Point {
        self.vertices[v].pos
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.vertices[v].color
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.vertices[v].name
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v.name == name)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    /// Clockwise neighbor order around `v`.
    pub fn rotation(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.rotation[v]
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.rotation[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    pub fn finite_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| !f.is_infinite)
    }

    pub fn infinite_face_id(&self) -> FaceId {
        self.infinite_face
    }

    /// The two faces bordering edge `e`.
    pub fn faces_of_edge(&self, e: EdgeId) -> [FaceId; 2] {
        self.edge_faces[e]
    }

    pub fn is_boundary_edge(&self, e: EdgeId) -> bool {
        self.edge_faces[e].contains(&self.infinite_face)
    }

    /// A peripheral face shares at least one edge with the boundary.
    pub fn is_peripheral_face(&self, f: FaceId) -> bool {
        !self.faces[f].is_infinite && self.faces[f].edges().any(|e| self.is_boundary_edge(e))
    }

    pub fn face_polygon(&self, f: FaceId) -> Option<Vec<Point>> {
        self.faces[f]
            .simple_cycle()
            .map(|c| c.into_iter().map(|v| self.pos(v)).collect())
    }

    /// The boundary cycle of the graph (the infinite face walk), failing
    /// when the walk repeats a vertex.
    pub fn boundary_cycle(&self) -> Result<Cycle> {
        let walk = &self.faces[self.infinite_face];
        match walk.simple_cycle() {
            Some(verts) => Cycle::from_vertices(self, &verts),
            None => {
                let vs: Vec<VertexId> = walk.vertices().collect();
                let mut seen = HashSet::new();
                let repeat = vs.iter().find(|v| !seen.insert(**v)).copied().unwrap_or(0);
                Err(Error::NotTwoConnected {
                    vertex: self.name(repeat).to_string(),
                })
            }
        }
    }

    /// Brute-force 2-connectivity test: no articulation vertex.
    pub fn is_two_connected(&self) -> bool {
        let n = self.vertex_count();
        if n < 3 {
            return false;
        }
        (0..n).all(|skip| {
            let start = (skip + 1) % n;
            let mut seen = vec![false; n];
            seen[skip] = true;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut reached = 1;
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.rotation[v] {
                    if !seen[w] {
                        seen[w] = true;
                        reached += 1;
                        queue.push_back(w);
                    }
                }
            }
            reached == n - 1
        })
    }

    /// Removes the interior vertices and all edges of `path`, which must be
    /// a common boundary of some peripheral face and the graph boundary.
    /// Remaining vertices keep their names and coordinates.
    pub fn remove_common_boundary(&self, path: &OddPath) -> Result<PlaneGraph> {
        let face = self.common_finite_face(path)?;
        debug_assert!(!self.faces[face].is_infinite);
        for &v in path.interior_vertices() {
            if self.degree(v) != 2 {
                return Err(Error::PathNotPeripheral(format!(
                    "interior vertex {} has degree {}",
                    self.name(v),
                    self.degree(v)
                )));
            }
        }
        let drop_vertices: HashSet<VertexId> = path.interior_vertices().iter().copied().collect();
        let drop_edges: HashSet<EdgeId> = path.edges().iter().copied().collect();
        self.subgraph(
            |v| !drop_vertices.contains(&v),
            |e| !drop_edges.contains(&e),
        )
    }

    /// Checks that every edge of `path` lies on the boundary and that all
    /// its edges border one common finite face; returns that face.
    fn common_finite_face(&self, path: &OddPath) -> Result<FaceId> {
        let mut common: Option<HashSet<FaceId>> = None;
        for &e in path.edges() {
            if !self.is_boundary_edge(e) {
                return Err(Error::PathNotPeripheral(format!(
                    "edge {} is not on the graph boundary",
                    self.edge_label(e)
                )));
            }
            let faces: HashSet<FaceId> = self.edge_faces[e]
                .iter()
                .copied()
                .filter(|&f| !self.faces[f].is_infinite)
                .collect();
            common = Some(match common {
                None => faces,
                Some(acc) => acc.intersection(&faces).copied().collect(),
            });
        }
        common
            .and_then(|set| set.into_iter().next())
            .ok_or_else(|| {
                Error::PathNotPeripheral("edges do not border a common finite face".into())
            })
    }

    /// Induced-style subgraph: keeps vertices and edges passing the given
    /// filters, then revalidates the drawing from scratch.
    pub fn subgraph(
        &self,
        keep_vertex: impl Fn(VertexId) -> bool,
        keep_edge: impl Fn(EdgeId) -> bool,
    ) -> Result<PlaneGraph> {
        let doc = GraphDocument {
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .filter(|&(v, _)| keep_vertex(v))
                .map(|(_, v)| VertexSpec {
                    id: v.name.clone(),
                    x: v.pos.0,
                    y: v.pos.1,
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .filter(|&(e, &(u, v))| keep_edge(e) && keep_vertex(u) && keep_vertex(v))
                .map(|(_, &(u, v))| {
                    [self.vertices[u].name.clone(), self.vertices[v].name.clone()]
                })
                .collect(),
        };
        PlaneGraph::from_document(&doc)
    }

    pub fn edge_label(&self, e: EdgeId) -> String {
        let (u, v) = self.edges[e];
        format!("{}-{}", self.name(u), self.name(v))
    }
}

/// A simple cycle of a plane graph, stored as a closed vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl Cycle {
    /// Builds a cycle from a vertex sequence `v0 v1 ... vk` (closing edge
    /// `vk v0` implied). Fails unless consecutive vertices are adjacent and
    /// all vertices are distinct.
    pub fn from_vertices(g: &PlaneGraph, verts: &[VertexId]) -> Result<Cycle> {
        if verts.len() < 3 {
            return Err(Error::NotACycle(format!(
                "{} vertices is too short",
                verts.len()
            )));
        }
        let distinct: HashSet<_> = verts.iter().copied().collect();
        if distinct.len() != verts.len() {
            return Err(Error::NotACycle("repeated vertex".into()));
        }
        let mut edges = Vec::with_capacity(verts.len());
        for i in 0..verts.len() {
            let u = verts[i];
            let v = verts[(i + 1) % verts.len()];
            match g.edge_between(u, v) {
                Some(e) => edges.push(e),
                None => {
                    return Err(Error::NotACycle(format!(
                        "{} and {} are not adjacent",
                        g.name(u),
                        g.name(v)
                    )))
                }
            }
        }
        Ok(Cycle {
            vertices: verts.to_vec(),
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn polygon(&self, g: &PlaneGraph) -> Vec<Point> {
        self.vertices.iter().map(|&v| g.pos(v)).collect()
    }

    pub fn area2(&self, g: &PlaneGraph) -> i128 {
        geom::signed_area2(&self.polygon(g))
    }

    /// The same cycle traversed clockwise (negative signed area). Applying
    /// this twice returns the identical orientation.
    pub fn clockwise(&self, g: &PlaneGraph) -> Cycle {
        if self.area2(g) < 0 {
            self.clone()
        } else {
            let mut verts = self.vertices.clone();
            verts.reverse();
            Cycle::from_vertices(g, &verts).expect("reversal of a cycle is a cycle")
        }
    }

    /// True when the rational point lies strictly inside the cycle polygon.
    pub fn encloses(&self, g: &PlaneGraph, p: RationalPoint) -> bool {
        geom::point_in_polygon(p, &self.polygon(g)) == Containment::Inside
    }
}

/// Directed clockwise traversal of a simple cycle of `g`.
pub fn cycle_clockwise_orientation(g: &PlaneGraph, verts: &[VertexId]) -> Result<Cycle> {
    Ok(Cycle::from_vertices(g, verts)?.clockwise(g))
}

/// A path with an odd number of edges, as used for common boundaries and
/// decomposition ears.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddPath {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl OddPath {
    pub fn from_vertices(g: &PlaneGraph, verts: &[VertexId]) -> Result<OddPath> {
        if verts.len() < 2 || verts.len() % 2 != 0 {
            return Err(Error::InvalidInput(format!(
                "odd path needs an even number of vertices, got {}",
                verts.len()
            )));
        }
        let distinct: HashSet<_> = verts.iter().copied().collect();
        if distinct.len() != verts.len() {
            return Err(Error::InvalidInput("path repeats a vertex".into()));
        }
        let mut edges = Vec::with_capacity(verts.len() - 1);
        for pair in verts.windows(2) {
            match g.edge_between(pair[0], pair[1]) {
                Some(e) => edges.push(e),
                None => {
                    return Err(Error::InvalidInput(format!(
                        "{} and {} are not adjacent",
                        g.name(pair[0]),
                        g.name(pair[1])
                    )))
                }
            }
        }
        Ok(OddPath {
            vertices: verts.to_vec(),
            edges,
        })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn end_edges(&self) -> (EdgeId, EdgeId) {
        (self.edges[0], *self.edges.last().unwrap())
    }

    pub fn interior_vertices(&self) -> &[VertexId] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

// ---------------------------------------------------------------------------
// construction internals

fn validate_vertices(specs: &[VertexSpec]) -> Result<Vec<Vertex>> {
    if specs.is_empty() {
        return Err(Error::InvalidInput("graph has no vertices".into()));
    }
    let mut names = HashSet::new();
    let mut positions = HashSet::new();
    let mut out = Vec::with_capacity(specs.len());
    for s in specs {
        if !names.insert(s.id.as_str()) {
            return Err(Error::InvalidInput(format!("duplicate vertex id {}", s.id)));
        }
        if s.x.abs() > COORD_LIMIT || s.y.abs() > COORD_LIMIT {
            return Err(Error::InvalidInput(format!(
                "vertex {} coordinates exceed the +/-{COORD_LIMIT} grid",
                s.id
            )));
        }
        if !positions.insert((s.x, s.y)) {
            return Err(Error::NotPlaneDrawing(format!(
                "two vertices share position ({}, {})",
                s.x, s.y
            )));
        }
        out.push(Vertex {
            name: s.id.clone(),
            pos: (s.x, s.y),
            color: Color::White,
        });
    }
    Ok(out)
}

fn validate_edges(
    specs: &[[String; 2]],
    index: &HashMap<&str, VertexId>,
) -> Result<Vec<(VertexId, VertexId)>> {
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(specs.len());
    for pair in specs {
        let u = *index
            .get(pair[0].as_str())
            .ok_or_else(|| Error::InvalidInput(format!("unknown vertex id {}", pair[0])))?;
        let v = *index
            .get(pair[1].as_str())
            .ok_or_else(|| Error::InvalidInput(format!("unknown vertex id {}", pair[1])))?;
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop at {}", pair[0])));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(Error::InvalidInput(format!(
                "duplicate edge {}-{}",
                pair[0], pair[1]
            )));
        }
        edges.push(key);
    }
    // canonical edge index space: lexicographic by endpoint indices
    edges.sort_unstable();
    Ok(edges)
}

fn check_connected(n: usize, adjacency: &[Vec<(VertexId, EdgeId)>]) -> Result<()> {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &(w, _) in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    if reached == n {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

fn two_color(vertices: &[Vertex], adjacency: &[Vec<(VertexId, EdgeId)>]) -> Result<Vec<Color>> {
    let n = vertices.len();
    let mut color = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    color[0] = Some(Color::White);
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        let cv = color[v].unwrap();
        for &(w, _) in &adjacency[v] {
            match color[w] {
                None => {
                    color[w] = Some(cv.flip());
                    parent[w] = v;
                    queue.push_back(w);
                }
                Some(cw) if cw == cv => {
                    return Err(Error::NotBipartite {
                        witness: odd_walk_witness(vertices, &parent, v, w),
                    });
                }
                Some(_) => {}
            }
        }
    }
    Ok(color.into_iter().map(|c| c.unwrap()).collect())
}

fn odd_walk_witness(
    vertices: &[Vertex],
    parent: &[usize],
    u: VertexId,
    v: VertexId,
) -> Vec<String> {
    let chain = |mut x: VertexId| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let (a, b) = (chain(u), chain(v));
    let common: HashSet<_> = a.iter().copied().collect();
    let mut walk: Vec<VertexId> = Vec::new();
    for &x in &a {
        walk.push(x);
        if b.contains(&x) {
            break;
        }
    }
    let stop = *walk.last().unwrap();
    let mut tail: Vec<VertexId> = b.into_iter().take_while(|x| *x != stop).collect();
    tail.retain(|x| !common.contains(x) || *x == stop);
    tail.reverse();
    walk.extend(tail);
    walk.iter().map(|&x| vertices[x].name.clone()).collect()
}

fn check_plane_drawing(vertices: &[Vertex], edges: &[(VertexId, VertexId)]) -> Result<()> {
    // no vertex in the interior of an edge segment
    for (w, vert) in vertices.iter().enumerate() {
        for &(u, v) in edges {
            if w != u && w != v && geom::on_segment(vert.pos, vertices[u].pos, vertices[v].pos) {
                return Err(Error::NotPlaneDrawing(format!(
                    "vertex {} lies on edge {}-{}",
                    vert.name, vertices[u].name, vertices[v].name
                )));
            }
        }
    }
    // edges not sharing an endpoint must be disjoint segments
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in edges.iter().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if geom::segments_intersect(
                vertices[a].pos,
                vertices[b].pos,
                vertices[c].pos,
                vertices[d].pos,
            ) {
                return Err(Error::NotPlaneDrawing(format!(
                    "edges {}-{} and {}-{} cross",
                    vertices[a].name, vertices[b].name, vertices[c].name, vertices[d].name
                )));
            }
        }
    }
    Ok(())
}

/// Sorts each adjacency list into clockwise cyclic order around the vertex,
/// using exact angle comparisons.
fn clockwise_rotation(
    vertices: &[Vertex],
    mut adjacency: Vec<Vec<(VertexId, EdgeId)>>,
) -> Vec<Vec<(VertexId, EdgeId)>> {
    for (v, list) in adjacency.iter_mut().enumerate() {
        let origin = vertices[v].pos;
        list.sort_by(|&(a, _), &(b, _)| {
            ccw_angle_order(origin, vertices[a].pos, vertices[b].pos)
        });
        list.reverse();
    }
    adjacency
}

/// Orders directions counterclockwise starting from the positive x-axis.
fn ccw_angle_order(origin: Point, a: Point, b: Point) -> std::cmp::Ordering {
    let da = (a.0 - origin.0, a.1 - origin.1);
    let db = (b.0 - origin.0, b.1 - origin.1);
    let half = |d: (i64, i64)| usize::from(!(d.1 > 0 || (d.1 == 0 && d.0 > 0)));
    half(da).cmp(&half(db)).then_with(|| {
        let cross = i128::from(da.0) * i128::from(db.1) - i128::from(da.1) * i128::from(db.0);
        0i128.cmp(&cross)
    })
}

/// Traces all faces from the rotation system. Walks advance by taking, at
/// each arrival vertex, the predecessor of the arrival edge in clockwise
/// order; finite faces then come out clockwise (negative area) and the
/// infinite face counterclockwise (positive area).
fn trace_faces_impl(
    vertices: &[Vertex],
    edges: &[(VertexId, VertexId)],
    rotation: &[Vec<(VertexId, EdgeId)>],
) -> Result<(Vec<Face>, FaceId, Vec<[FaceId; 2]>)> {
    let n = vertices.len();
    let m = edges.len();

    if m == 0 {
        // single vertex: one infinite face with an empty walk
        let face = Face {
            id: 0,
            walk: Vec::new(),
            is_infinite: true,
            area2: 0,
            interior: None,
        };
        return Ok((vec![face], 0, Vec::new()));
    }

    // position of each neighbor in the clockwise list
    let mut pos: Vec<HashMap<VertexId, usize>> = vec![HashMap::new(); n];
    for (v, list) in rotation.iter().enumerate() {
        for (i, &(w, _)) in list.iter().enumerate() {
            pos[v].insert(w, i);
        }
    }

    // dart 2e = u->v, dart 2e+1 = v->u for edge e = (u, v)
    let dart_source = |d: usize| {
        let (u, v) = edges[d / 2];
        if d % 2 == 0 {
            u
        } else {
            v
        }
    };
    let dart_target = |d: usize| {
        let (u, v) = edges[d / 2];
        if d % 2 == 0 {
            v
        } else {
            u
        }
    };

    let mut face_of_dart = vec![usize::MAX; 2 * m];
    let mut faces: Vec<Face> = Vec::new();

    for start in 0..2 * m {
        if face_of_dart[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            face_of_dart[d] = id;
            walk.push((dart_source(d), d / 2));
            let (from, to) = (dart_source(d), dart_target(d));
            let list = &rotation[to];
            let i = pos[to][&from];
            let (w, e) = list[(i + list.len() - 1) % list.len()];
            d = 2 * e + usize::from(edges[e].0 != to);
            debug_assert_eq!(dart_source(d), to);
            debug_assert_eq!(dart_target(d), w);
            if d == start {
                break;
            }
        }
        let poly: Vec<Point> = walk.iter().map(|&(v, _)| vertices[v].pos).collect();
        let area2 = geom::signed_area2(&poly);
        faces.push(Face {
            id,
            walk,
            is_infinite: false,
            area2,
            interior: None,
        });
    }

    let expected = m + 2 - n;
    if faces.len() != expected {
        return Err(Error::EulerViolation {
            vertices: n,
            edges: m,
            faces: faces.len(),
        });
    }

    let infinite = if faces.len() == 1 {
        0
    } else {
        let positives: Vec<FaceId> = faces
            .iter()
            .filter(|f| f.area2 > 0)
            .map(|f| f.id)
            .collect();
        match positives.as_slice() {
            [one] => *one,
            _ => {
                return Err(Error::NotPlaneDrawing(
                    "face orientation does not single out an infinite face".into(),
                ))
            }
        }
    };

    for f in &mut faces {
        f.is_infinite = f.id == infinite;
        if !f.is_infinite {
            let simple: Vec<Point> = match f.simple_cycle() {
                Some(cycle) => cycle.iter().map(|&v| vertices[v].pos).collect(),
                None => continue,
            };
            f.interior = geom::interior_point(&simple);
        }
    }

    let mut edge_faces = vec![[usize::MAX; 2]; m];
    for e in 0..m {
        edge_faces[e] = [face_of_dart[2 * e], face_of_dart[2 * e + 1]];
    }

    Ok((faces, infinite, edge_faces))
}

// ---------------------------------------------------------------------------
// elementarity (delegates matching enumeration to the matching module)

impl PlaneGraph {
    /// True when the allowed edges (those lying in at least one perfect
    /// matching) span a connected subgraph covering every vertex.
    pub fn is_elementary(&self) -> Result<bool> {
        let matchings = crate::matching::enumerate_perfect_matchings(self)?;
        if matchings.is_empty() {
            return Ok(false);
        }
        let mut allowed = crate::matching::EdgeSet::empty();
        for m in &matchings {
            allowed = allowed.union(m.edge_set());
        }
        // every vertex incident to an allowed edge?
        let mut covered = vec![false; self.vertex_count()];
        for e in allowed.iter() {
            let (u, v) = self.edges[e];
            covered[u] = true;
            covered[v] = true;
        }
        if covered.iter().any(|c| !c) {
            return Ok(false);
        }
        // connectivity of the allowed subgraph
        let mut seen = vec![false; self.vertex_count()];
        let start = self.edges[allowed.iter().next().unwrap()].0;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &(w, e) in &self.rotation[v] {
                if allowed.contains(e) && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(reached == self.vertex_count())
    }

    /// True when for every nice cycle (a cycle alternating with respect to
    /// some perfect matching) the subgraph consisting of the cycle and
    /// everything drawn inside it is elementary.
    pub fn is_weakly_elementary(&self) -> Result<bool> {
        let matchings = crate::matching::enumerate_perfect_matchings(self)?;
        if matchings.is_empty() {
            return Ok(false);
        }
        // Every nice cycle arises as one component of the symmetric
        // difference of two perfect matchings (flip the cycle to get the
        // partner), so scanning all pairs enumerates them all.
        let mut seen: HashSet<Vec<EdgeId>> = HashSet::new();
        for (i, m1) in matchings.iter().enumerate() {
            for m2 in &matchings[i + 1..] {
                for cycle in crate::matching::symmetric_difference_cycles(self, m1, m2) {
                    let mut key: Vec<EdgeId> = cycle.edges().to_vec();
                    key.sort_unstable();
                    if !seen.insert(key) {
                        continue;
                    }
                    if !self.region_subgraph(&cycle)?.is_elementary()? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The subgraph consisting of `cycle` and everything embedded inside
    /// its polygon.
    fn region_subgraph(&self, cycle: &Cycle) -> Result<PlaneGraph> {
        let poly = cycle.polygon(self);
        let on_cycle: HashSet<VertexId> = cycle.vertices().iter().copied().collect();
        let keep_vertex: Vec<bool> = (0..self.vertex_count())
            .map(|v| {
                on_cycle.contains(&v)
                    || geom::point_in_polygon(RationalPoint::from_integer(self.pos(v)), &poly)
                        == Containment::Inside
            })
            .collect();
        let keep_edge: Vec<bool> = (0..self.edge_count())
            .map(|e| {
                let (u, v) = self.edges[e];
                if !keep_vertex[u] || !keep_vertex[v] {
                    return false;
                }
                cycle.contains_edge(e)
                    || geom::point_in_polygon(
                        RationalPoint::midpoint(self.pos(u), self.pos(v)),
                        &poly,
                    ) == Containment::Inside
            })
            .collect();
        self.subgraph(|v| keep_vertex[v], |e| keep_edge[e])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn c4_has_two_faces() {
        let g = corpus::c4();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.faces().len(), 2);
        assert_eq!(g.finite_faces().count(), 1);
        let finite = g.finite_faces().next().unwrap();
        assert!(finite.area2() < 0, "finite faces must run clockwise");
        assert!(g.face(g.infinite_face_id()).area2() > 0);
    }

    #[test]
    fn c6_alternately_colored() {
        let g = corpus::c6();
        assert_eq!(g.faces().len(), 2);
        assert_eq!(g.vertex_count(), 6);
        for &(u, v) in g.edges() {
            assert_ne!(g.color(u), g.color(v));
        }
    }

    #[test]
    fn l2_face_census() {
        let g = corpus::l2();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 11);
        assert_eq!(g.faces().len(), 3);
        let mut finite_lens: Vec<usize> = g.finite_faces().map(Face::len).collect();
        finite_lens.sort_unstable();
        assert_eq!(finite_lens, vec![6, 6]);
        assert_eq!(g.face(g.infinite_face_id()).len(), 10);
    }

    #[test]
    fn q3_face_census() {
        let g = corpus::q3();
        assert_eq!(g.faces().len(), 6);
        assert_eq!(g.finite_faces().count(), 5);
        assert_eq!(g.face(g.infinite_face_id()).len(), 4);
    }

    #[test]
    fn euler_formula_on_corpus() {
        for (name, g) in corpus::all() {
            let (v, e, f) = (g.vertex_count(), g.edge_count(), g.faces().len());
            assert_eq!(v + f, e + 2, "Euler count failed for {name}");
        }
    }

    #[test]
    fn boundary_matches_edges_on_one_finite_face() {
        for (name, g) in corpus::all() {
            assert!(g.is_two_connected(), "{name} should be 2-connected");
            let boundary = g.boundary_cycle().unwrap();
            let via_faces: HashSet<EdgeId> = (0..g.edge_count())
                .filter(|&e| g.is_boundary_edge(e))
                .collect();
            let via_cycle: HashSet<EdgeId> = boundary.edges().iter().copied().collect();
            assert_eq!(via_cycle, via_faces, "boundary mismatch for {name}");
        }
    }

    #[test]
    fn clockwise_orientation_is_idempotent() {
        let g = corpus::l2();
        let boundary = g.boundary_cycle().unwrap();
        let cw = boundary.clockwise(&g);
        assert!(cw.area2(&g) < 0);
        assert_eq!(cw.clockwise(&g), cw);
        // the two orientations have opposite area signs
        let mut reversed = cw.vertices().to_vec();
        reversed.reverse();
        let ccw = Cycle::from_vertices(&g, &reversed).unwrap();
        assert_eq!(ccw.area2(&g), -cw.area2(&g));
    }

    #[test]
    fn crossing_inputs_rejected() {
        let doc = GraphDocument {
            vertices: vec![
                VertexSpec { id: "a".into(), x: 0, y: 0 },
                VertexSpec { id: "b".into(), x: 4, y: 4 },
                VertexSpec { id: "c".into(), x: 0, y: 4 },
                VertexSpec { id: "d".into(), x: 4, y: 0 },
            ],
            edges: vec![
                ["a".into(), "b".into()],
                ["c".into(), "d".into()],
                ["a".into(), "c".into()],
                ["b".into(), "d".into()],
            ],
        };
        assert!(matches!(
            PlaneGraph::from_document(&doc),
            Err(Error::NotPlaneDrawing(_))
        ));
    }

    #[test]
    fn odd_cycle_rejected() {
        let doc = GraphDocument {
            vertices: vec![
                VertexSpec { id: "a".into(), x: 0, y: 0 },
                VertexSpec { id: "b".into(), x: 4, y: 0 },
                VertexSpec { id: "c".into(), x: 2, y: 3 },
            ],
            edges: vec![
                ["a".into(), "b".into()],
                ["b".into(), "c".into()],
                ["c".into(), "a".into()],
            ],
        };
        match PlaneGraph::from_document(&doc) {
            Err(Error::NotBipartite { witness }) => assert!(witness.len() >= 3),
            other => panic!("expected NotBipartite, got {other:?}"),
        }
    }

    #[test]
    fn disconnected_rejected() {
        let doc = GraphDocument {
            vertices: vec![
                VertexSpec { id: "a".into(), x: 0, y: 0 },
                VertexSpec { id: "b".into(), x: 2, y: 0 },
                VertexSpec { id: "c".into(), x: 6, y: 0 },
                VertexSpec { id: "d".into(), x: 8, y: 0 },
            ],
            edges: vec![["a".into(), "b".into()], ["c".into(), "d".into()]],
        };
        assert!(matches!(
            PlaneGraph::from_document(&doc),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn remove_common_boundary_of_l2_leaves_hexagon() {
        let g = corpus::l2();
        // find the reducible path for the right hexagon via the boundary:
        // the five boundary edges of the face not containing the shared edge
        let shared: Vec<EdgeId> = (0..g.edge_count())
            .filter(|&e| !g.is_boundary_edge(e))
            .collect();
        assert_eq!(shared.len(), 1);
        let faces = g.faces_of_edge(shared[0]);
        let s = faces[0].min(faces[1]);
        let other = faces[0].max(faces[1]);
        // walk of `other` minus the shared edge is the 5-edge path
        let path = crate::decomp::common_boundary_path(&g, other).unwrap();
        assert_eq!(path.edge_count(), 5);
        let h = g.remove_common_boundary(&path).unwrap();
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(h.edge_count(), 6);
        assert_eq!(h.faces().len(), 2);
        let _ = s;
    }

    #[test]
    fn remove_single_edge_of_c6_gives_path() {
        let g = corpus::c6();
        let (u, v) = g.endpoints(0);
        let p = OddPath::from_vertices(&g, &[u, v]).unwrap();
        let h = g.remove_common_boundary(&p).unwrap();
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(h.edge_count(), 5);
        assert!(!h.is_elementary().unwrap());
    }

    #[test]
    fn elementary_corpus() {
        for (name, g) in corpus::all() {
            assert!(g.is_elementary().unwrap(), "{name} should be elementary");
            assert!(
                g.is_weakly_elementary().unwrap(),
                "{name} should be weakly elementary"
            );
            // cross-check against 2-connectivity on the corpus
            assert!(g.is_two_connected(), "{name} should be 2-connected");
        }
    }

    #[test]
    fn p4_not_elementary() {
        let doc = GraphDocument {
            vertices: vec![
                VertexSpec { id: "a".into(), x: 0, y: 0 },
                VertexSpec { id: "b".into(), x: 2, y: 0 },
                VertexSpec { id: "c".into(), x: 4, y: 0 },
                VertexSpec { id: "d".into(), x: 6, y: 0 },
            ],
            edges: vec![
                ["a".into(), "b".into()],
                ["b".into(), "c".into()],
                ["c".into(), "d".into()],
            ],
        };
        let g = PlaneGraph::from_document(&doc).unwrap();
        assert!(!g.is_elementary().unwrap());
    }

    #[test]
    fn k2_elementary() {
        let doc = GraphDocument {
            vertices: vec![
                VertexSpec { id: "a".into(), x: 0, y: 0 },
                VertexSpec { id: "b".into(), x: 2, y: 0 },
            ],
            edges: vec![["a".into(), "b".into()]],
        };
        let g = PlaneGraph::from_document(&doc).unwrap();
        assert!(g.is_elementary().unwrap());
        assert_eq!(g.faces().len(), 1);
    }
}
