use crate::error::{Error, Result};

use super::cycles::{girth, has_five_cycle, has_four_cycle, Girth};
use super::Graph;

/// A graph together with a rotation system: for every vertex, the clockwise
/// cyclic order of its neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    /// `slot[v][i]` is the position of `graph.neighbors(v)[i]` in `rotation[v]`.
    slot: Vec<Vec<usize>>,
}

/// A face of an embedding, as the closed walk of directed edges bounding it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    boundary: Vec<(usize, usize)>,
}

impl Face {
    pub fn boundary(&self) -> &[(usize, usize)] {
        &self.boundary
    }

    /// Number of edge traversals; a cutedge on the face counts twice.
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Boundary vertices in walk order (with repetitions).
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.boundary.iter().map(|&(u, _)| u)
    }
}

impl PlaneGraph {
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<PlaneGraph> {
        if rotation.len() != graph.vertex_count() {
            return Err(Error::BadEmbedding(format!(
                "rotation covers {} vertices, graph has {}",
                rotation.len(),
                graph.vertex_count()
            )));
        }
        let mut slot = Vec::with_capacity(rotation.len());
        for (v, rot) in rotation.iter().enumerate() {
            let neighbors = graph.neighbors(v);
            if rot.len() != neighbors.len() {
                return Err(Error::BadEmbedding(format!(
                    "rotation at {v} lists {} neighbors, degree is {}",
                    rot.len(),
                    neighbors.len()
                )));
            }
            let mut s = vec![usize::MAX; neighbors.len()];
            for (pos, &w) in rot.iter().enumerate() {
                let i = neighbors
                    .binary_search(&w)
                    .map_err(|_| Error::BadEmbedding(format!("rotation at {v} lists non-neighbor {w}")))?;
                if s[i] != usize::MAX {
                    return Err(Error::BadEmbedding(format!("rotation at {v} repeats {w}")));
                }
                s[i] = pos;
            }
            slot.push(s);
        }
        Ok(PlaneGraph { graph, rotation, slot })
    }

    /// Rotation system from vertex coordinates of a straight-line drawing:
    /// neighbors sorted clockwise by angle, starting from the positive x axis.
    pub fn from_coordinates(graph: Graph, coords: &[(f64, f64)]) -> Result<PlaneGraph> {
        assert_eq!(coords.len(), graph.vertex_count());
        let rotation = (0..graph.vertex_count())
            .map(|v| {
                let (x, y) = coords[v];
                let mut rot: Vec<(f64, usize)> = graph
                    .neighbors(v)
                    .iter()
                    .map(|&w| {
                        let (wx, wy) = coords[w];
                        (-(wy - y).atan2(wx - x), w)
                    })
                    .collect();
                rot.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
                rot.into_iter().map(|(_, w)| w).collect()
            })
            .collect();
        PlaneGraph::new(graph, rotation)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// The neighbor following `u` in the rotation at `v`.
    fn successor(&self, v: usize, u: usize) -> usize {
        let i = self.graph.neighbors(v).binary_search(&u).expect("u adjacent to v");
        let rot = &self.rotation[v];
        rot[(self.slot[v][i] + 1) % rot.len()]
    }

    /// Traces every face without validating the embedding. Directed edges
    /// are visited in lexicographic order, so face ids are deterministic.
    fn trace(&self) -> Vec<Face> {
        let g = &self.graph;
        let offset: Vec<usize> = std::iter::once(0)
            .chain(g.adjacency.iter().scan(0, |acc, l| {
                *acc += l.len();
                Some(*acc)
            }))
            .collect();
        let mut used = vec![false; offset[g.vertex_count()]];
        let id = |u: usize, v: usize| offset[u] + g.neighbors(u).binary_search(&v).unwrap();
        let mut faces = Vec::new();
        for u in 0..g.vertex_count() {
            for &v in g.neighbors(u) {
                if used[id(u, v)] {
                    continue;
                }
                let mut boundary = Vec::new();
                let (mut a, mut b) = (u, v);
                while !used[id(a, b)] {
                    used[id(a, b)] = true;
                    boundary.push((a, b));
                    let c = self.successor(b, a);
                    a = b;
                    b = c;
                }
                faces.push(Face { boundary });
            }
        }
        faces
    }

    /// Faces of a connected plane graph, checked against Euler's formula.
    pub fn faces(&self) -> Result<Vec<Face>> {
        let g = &self.graph;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut faces = self.trace();
        if faces.is_empty() {
            // A single vertex bounds one face of length zero.
            faces.push(Face { boundary: Vec::new() });
        }
        let euler = g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::NonplanarEmbedding { euler, expected: 2 });
        }
        Ok(faces)
    }

    /// Euler check generalised to `c` components: `V - E + F = 1 + c`.
    pub fn is_planar_embedding(&self) -> bool {
        let g = &self.graph;
        if g.vertex_count() == 0 {
            return true;
        }
        let isolated = (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).count();
        let components = g.component_count();
        // Each non-trivial component contributes its own outer face; an
        // isolated vertex contributes none of the traced walks.
        let traced = self.trace().len() as i64;
        let faces = traced - (components - isolated) as i64 + 1;
        g.vertex_count() as i64 - g.edge_count() as i64 + faces == 1 + components as i64
    }
}

/// Membership of a plane graph in the class the theorem talks about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub is_planar_embedding: bool,
    pub has_4_cycle: bool,
    pub has_5_cycle: bool,
    pub girth: Girth,
    pub min_degree: usize,
    pub max_degree: usize,
    pub in_class: bool,
}

pub fn check_class(pg: &PlaneGraph) -> ClassReport {
    let g = pg.graph();
    let is_planar_embedding = pg.is_planar_embedding();
    let has_4_cycle = has_four_cycle(g);
    let has_5_cycle = has_five_cycle(g);
    ClassReport {
        is_planar_embedding,
        has_4_cycle,
        has_5_cycle,
        girth: girth(g),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        in_class: is_planar_embedding && !has_4_cycle && !has_5_cycle,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn tetrahedron() -> PlaneGraph {
        // Vertex 3 in the middle of triangle 0 1 2.
        let coords = [(0.0, 2.0), (-2.0, -1.0), (2.0, -1.0), (0.0, 0.0)];
        PlaneGraph::from_coordinates(Graph::complete(4), &coords).unwrap()
    }

    fn cycle_plane(n: usize) -> PlaneGraph {
        let coords: Vec<_> = (0..n)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / n as f64;
                (t.cos(), t.sin())
            })
            .collect();
        PlaneGraph::from_coordinates(Graph::cycle(n), &coords).unwrap()
    }

    fn cube() -> PlaneGraph {
        let edges = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ];
        let coords = [
            (-2.0, -2.0),
            (2.0, -2.0),
            (2.0, 2.0),
            (-2.0, 2.0),
            (-1.0, -1.0),
            (1.0, -1.0),
            (1.0, 1.0),
            (-1.0, 1.0),
        ];
        PlaneGraph::from_coordinates(Graph::from_edges(8, edges).unwrap(), &coords).unwrap()
    }

    #[test]
    fn tetrahedron_faces() {
        let faces = tetrahedron().faces().unwrap();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn cycle_and_cube_faces() {
        let faces = cycle_plane(6).faces().unwrap();
        assert_eq!(faces.iter().map(Face::len).collect::<Vec<_>>(), vec![6, 6]);
        let faces = cube().faces().unwrap();
        assert_eq!(faces.len(), 6);
        assert!(faces.iter().all(|f| f.len() == 4));
    }

    #[test]
    fn cutedge_counts_twice() {
        let coords = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)];
        let pg = PlaneGraph::from_coordinates(Graph::path(3), &coords).unwrap();
        let faces = pg.faces().unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 4);
    }

    #[test]
    fn single_vertex_has_one_empty_face() {
        let pg = PlaneGraph::new(Graph::empty(1), vec![vec![]]).unwrap();
        let faces = pg.faces().unwrap();
        assert_eq!(faces.len(), 1);
        assert!(faces[0].is_empty());
    }

    #[test]
    fn rejects_bad_rotations_and_nonplanar() {
        let g = Graph::cycle(3);
        assert!(matches!(
            PlaneGraph::new(g.clone(), vec![vec![1, 2], vec![0, 2], vec![0]]),
            Err(Error::BadEmbedding(_))
        ));
        assert!(matches!(
            PlaneGraph::new(g.clone(), vec![vec![1, 1], vec![0, 2], vec![0, 1]]),
            Err(Error::BadEmbedding(_))
        ));
        // K4 with every rotation in increasing order is not a planar embedding.
        let k4 = Graph::complete(4);
        let rot = (0..4).map(|v| k4.neighbors(v).to_vec()).collect();
        let pg = PlaneGraph::new(k4, rot).unwrap();
        assert!(matches!(pg.faces(), Err(Error::NonplanarEmbedding { .. })));
        assert!(!pg.is_planar_embedding());
        let two = PlaneGraph::new(Graph::empty(2), vec![vec![], vec![]]).unwrap();
        assert_eq!(two.faces(), Err(Error::Disconnected));
        assert!(two.is_planar_embedding());
    }

    #[test]
    fn check_class_small() {
        let c4 = check_class(&cycle_plane(4));
        assert!(c4.has_4_cycle && !c4.in_class);
        let c6 = check_class(&cycle_plane(6));
        assert!(c6.in_class);
        assert_eq!(c6.girth, Some(6));
        let tet = check_class(&tetrahedron());
        assert!(tet.is_planar_embedding && tet.has_4_cycle && !tet.in_class);
    }
}
