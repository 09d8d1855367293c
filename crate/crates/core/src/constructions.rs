//! Deterministic generators, with embeddings, for the extremal families:
//! Wegner's Δ ≥ 8 example, the min-degree-3 family `G_k` built from the
//! 6-cycle gadget `H`, and the girth-6 lower-bound graphs of Dvořák et al.
//!
//! Every embedding comes from an explicit straight-line drawing; the
//! rotation at each vertex is the clockwise angular order of its neighbors.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::graph::{Graph, PlaneGraph};

/// Vertex coordinates paired with the graph they draw.
struct Drawing {
    coords: Vec<(f64, f64)>,
    edges: Vec<(usize, usize)>,
}

impl Drawing {
    fn new() -> Self {
        Drawing {
            coords: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self, x: f64, y: f64) -> usize {
        self.coords.push((x, y));
        self.coords.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn finish(self) -> (PlaneGraph, Vec<(f64, f64)>) {
        let g = Graph::from_edges(self.coords.len(), self.edges).expect("construction is simple");
        let pg = PlaneGraph::from_coordinates(g, &self.coords).expect("drawing gives a rotation");
        debug_assert!(pg.is_planar_embedding());
        (pg, self.coords)
    }
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Degenerate(what.to_string()))
    }
}

/// Cycle `C_n` drawn as a regular polygon.
pub fn cycle(n: usize) -> Result<PlaneGraph> {
    require(n >= 3, "cycle needs n >= 3")?;
    let coords: Vec<_> = (0..n)
        .map(|i| {
            let t = TAU * i as f64 / n as f64;
            (t.cos(), t.sin())
        })
        .collect();
    Ok(PlaneGraph::from_coordinates(Graph::cycle(n), &coords).expect("polygon"))
}

/// `K_4` with vertex 3 drawn inside triangle 0 1 2.
pub fn tetrahedron() -> PlaneGraph {
    let coords = [(0.0, 2.0), (-2.0, -1.0), (2.0, -1.0), (0.0, 0.0)];
    PlaneGraph::from_coordinates(Graph::complete(4), &coords).expect("planar drawing")
}

/// Wegner's construction: `u`, `v`, `w` (ids 0, 1, 2), the edge `vw`,
/// ⌈Δ/2⌉ paths `u·v`, ⌊Δ/2⌋ paths `u·w` and ⌊Δ/2⌋−1 paths `v·w` of length
/// two. With `subdivided`, the edge `vw` becomes a path `v s w` (`s` last).
pub fn wegner(delta: usize, subdivided: bool) -> Result<PlaneGraph> {
    Ok(wegner_drawing(delta, subdivided)?.0)
}

fn wegner_drawing(delta: usize, subdivided: bool) -> Result<(PlaneGraph, Vec<(f64, f64)>)> {
    require(delta >= 2, "wegner needs delta >= 2")?;
    let mut d = Drawing::new();
    let u = d.vertex(0.0, 10.0);
    let v = d.vertex(-10.0, -5.0);
    let w = d.vertex(10.0, -5.0);
    let sides = [
        (u, v, delta.div_ceil(2), 0.0),
        (u, w, delta / 2, 0.0),
        (v, w, delta / 2 - 1, 1.0),
    ];
    for (a, b, count, start) in sides {
        let (ax, ay) = d.coords[a];
        let (bx, by) = d.coords[b];
        let (mx, my) = ((ax + bx) / 2.0, (ay + by) / 2.0);
        // Unit normal pointing at the centroid (the origin).
        let len = (mx * mx + my * my).sqrt();
        let (nx, ny) = (-mx / len, -my / len);
        for i in 0..count {
            let t = start + 2.5 * i as f64 / count.max(2) as f64;
            let m = d.vertex(mx + t * nx, my + t * ny);
            d.edge(a, m);
            d.edge(m, b);
        }
    }
    if subdivided {
        let s = d.vertex(0.0, -5.0);
        d.edge(v, s);
        d.edge(s, w);
    } else {
        d.edge(v, w);
    }
    Ok(d.finish())
}

/// The gadget `H`: a 6-cycle `v1..v6` (ids 0..5) with `u1, u2, u3` (ids
/// 6, 7, 8) on the edges `v1v2`, `v3v4`, `v5v6`. Each `u_i` is a port that
/// takes one pendant edge when the gadget is wired into a host graph.
#[derive(Debug, Clone)]
pub struct GadgetH {
    pub plane: PlaneGraph,
    pub ports: [usize; 3],
}

/// Local layout of `H` in a frame whose x axis points away from the hub:
/// `u1` faces backwards (270°), `u2` forwards (90°), `u3` the hub (180°).
const HEX_ANGLES: [f64; 6] = [250.0, 290.0, 70.0, 110.0, 160.0, 200.0];
const PORT_ANGLES: [f64; 3] = [270.0, 90.0, 180.0];
const PORT_RADIUS: f64 = 1.6;

fn gadget_local() -> Vec<(f64, f64)> {
    HEX_ANGLES
        .iter()
        .map(|&a| (1.0, a))
        .chain(PORT_ANGLES.iter().map(|&a| (PORT_RADIUS, a)))
        .map(|(r, a): (f64, f64)| (r * a.to_radians().cos(), r * a.to_radians().sin()))
        .collect()
}

fn gadget_edges(base: usize) -> impl Iterator<Item = (usize, usize)> {
    let cycle = (0..6).map(move |i| (base + i, base + (i + 1) % 6));
    let ports = (0..3).flat_map(move |j| [(base + 6 + j, base + 2 * j), (base + 6 + j, base + 2 * j + 1)]);
    cycle.chain(ports)
}

pub fn gadget_h() -> GadgetH {
    let mut d = Drawing::new();
    for (x, y) in gadget_local() {
        d.vertex(x, y);
    }
    for (a, b) in gadget_edges(0) {
        d.edge(a, b);
    }
    GadgetH {
        plane: d.finish().0,
        ports: [6, 7, 8],
    }
}

/// `G_k`: the wheel on `C_k` with each rim vertex replaced by a copy of `H`.
///
/// The hub is vertex 0; copy `i` occupies `1 + 9i .. 1 + 9i + 9` in the
/// order `v1..v6, u1, u2, u3`. Port `u3` joins the hub, `u2` of copy `i`
/// joins `u1` of copy `i + 1 (mod k)`.
pub fn g_k(k: usize) -> Result<PlaneGraph> {
    Ok(g_k_drawing(k)?.0)
}

fn g_k_drawing(k: usize) -> Result<(PlaneGraph, Vec<(f64, f64)>)> {
    require(k >= 3, "g_k needs k >= 3")?;
    let radius = 2.0 * k as f64 + 10.0;
    let local = gadget_local();
    let mut d = Drawing::new();
    let hub = d.vertex(0.0, 0.0);
    for i in 0..k {
        let theta = TAU * i as f64 / k as f64;
        let (er, et) = ((theta.cos(), theta.sin()), (-theta.sin(), theta.cos()));
        let (px, py) = (radius * er.0, radius * er.1);
        for &(x, y) in &local {
            d.vertex(px + x * er.0 + y * et.0, py + x * er.1 + y * et.1);
        }
    }
    let base = |i: usize| 1 + 9 * (i % k);
    for i in 0..k {
        for (a, b) in gadget_edges(base(i)) {
            d.edge(a, b);
        }
        d.edge(base(i) + 8, hub);
        d.edge(base(i) + 7, base(i + 1) + 6);
    }
    Ok(d.finish())
}

/// The gadget `G'_Δ`: `x` and `y` joined by Δ−1 internally disjoint paths of
/// length 3, plus a path `y c z`.
#[derive(Debug, Clone)]
pub struct DvorakGadget {
    pub plane: PlaneGraph,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl DvorakGadget {
    pub fn graph(&self) -> &Graph {
        self.plane.graph()
    }
}

/// Ids: `x = 0, y = 1, c = 2, z = 3`, then the path interiors in pairs.
pub fn dvorak_gadget(delta: usize) -> Result<DvorakGadget> {
    require(delta >= 2, "dvorak gadget needs delta >= 2")?;
    let mut d = Drawing::new();
    let x = d.vertex(0.0, 3.0);
    let y = d.vertex(0.0, 0.0);
    let c = d.vertex(0.0, -1.0);
    let z = d.vertex(0.0, -2.0);
    d.edge(y, c);
    d.edge(c, z);
    add_parallel_paths(&mut d, x, y, 0.0, delta - 1);
    Ok(DvorakGadget {
        plane: d.finish().0,
        x,
        y,
        z,
    })
}

fn add_parallel_paths(d: &mut Drawing, x: usize, y: usize, center: f64, count: usize) {
    for t in 0..count {
        let dx = center + t as f64 - (count as f64 - 1.0) / 2.0;
        let p = d.vertex(dx, 2.0);
        let q = d.vertex(dx, 1.0);
        d.edge(x, p);
        d.edge(p, q);
        d.edge(q, y);
    }
}

/// `G_Δ`: Δ−1 copies of `G'_Δ` sharing `z`, a vertex `u` adjacent to every
/// copy's `x`, and `w` adjacent to `u` and `z`.
///
/// Ids: `u = 0, w = 1, z = 2`; copy `j` follows as `x, y, c` and then its
/// path interiors.
pub fn dvorak_lower(delta: usize) -> Result<PlaneGraph> {
    Ok(dvorak_lower_drawing(delta)?.0)
}

fn dvorak_lower_drawing(delta: usize) -> Result<(PlaneGraph, Vec<(f64, f64)>)> {
    require(delta >= 2, "dvorak_lower needs delta >= 2")?;
    let copies = delta - 1;
    let spacing = delta as f64 + 3.0;
    let center = spacing * (copies as f64 - 1.0) / 2.0;
    let depth = 5.0 + spacing * copies as f64;
    let mut d = Drawing::new();
    let u = d.vertex(center, 3.0 + depth);
    let w = d.vertex(-10.0 * spacing * copies as f64 - 20.0, 1.0);
    let z = d.vertex(center, -depth);
    d.edge(u, w);
    d.edge(w, z);
    for j in 0..copies {
        let cx = spacing * j as f64;
        let x = d.vertex(cx, 3.0);
        let y = d.vertex(cx, 0.0);
        let c = d.vertex(cx, -1.0);
        d.edge(u, x);
        d.edge(y, c);
        d.edge(c, z);
        add_parallel_paths(&mut d, x, y, cx, delta - 1);
    }
    Ok(d.finish())
}

/// Generator lookup by family name, as used by the `gen` subcommand.
pub fn by_name(family: &str, param: usize) -> Result<PlaneGraph> {
    match family {
        "gk" => g_k(param),
        "wegner" => wegner(param, false),
        "wegner-subdivided" => wegner(param, true),
        "gadget" => Ok(gadget_h().plane),
        "dvorak-gadget" => Ok(dvorak_gadget(param)?.plane),
        "dvorak" => dvorak_lower(param),
        "cycle" => cycle(param),
        "tetrahedron" => Ok(tetrahedron()),
        other => Err(Error::BadParams(format!("unknown family {other:?}"))),
    }
}

pub const FAMILIES: [&str; 8] = [
    "gk",
    "wegner",
    "wegner-subdivided",
    "gadget",
    "dvorak-gadget",
    "dvorak",
    "cycle",
    "tetrahedron",
];
