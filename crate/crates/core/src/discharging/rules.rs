use std::collections::{BTreeMap, HashSet};

use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::graph::{Face, Graph, PlaneGraph};

use super::{check_conserved, initial_ledger, ratio, Charge, ChargeLedger, Discharge, Phase};

/// Incidence data shared by the rules.
struct Embedded<'a> {
    g: &'a Graph,
    faces: Vec<Face>,
    edges: Vec<(usize, usize)>,
    /// For edge id `e = (a, b)`: faces on the `a→b` and `b→a` sides.
    sides: Vec<(usize, usize)>,
    /// Pairs `(min, max)` lying on a common 3-face.
    triangle_pairs: HashSet<(usize, usize)>,
}

impl<'a> Embedded<'a> {
    fn new(pg: &'a PlaneGraph, faces: Vec<Face>) -> Self {
        let g = pg.graph();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut sides = vec![(usize::MAX, usize::MAX); edges.len()];
        let mut triangle_pairs = HashSet::new();
        for (fid, face) in faces.iter().enumerate() {
            for &(a, b) in face.boundary() {
                let e = edges.binary_search(&(a.min(b), a.max(b))).expect("face edge exists");
                if a < b {
                    sides[e].0 = fid;
                } else {
                    sides[e].1 = fid;
                }
            }
            if face.len() == 3 {
                let vs: Vec<usize> = face.vertices().collect();
                for i in 0..3 {
                    let (x, y) = (vs[i], vs[(i + 1) % 3]);
                    triangle_pairs.insert((x.min(y), x.max(y)));
                }
            }
        }
        Embedded {
            g,
            faces,
            edges,
            sides,
            triangle_pairs,
        }
    }

    fn degree(&self, v: usize) -> usize {
        self.g.degree(v)
    }

    fn share_triangle(&self, u: usize, v: usize) -> bool {
        self.triangle_pairs.contains(&(u.min(v), u.max(v)))
    }

    fn has_neighbor_of_degree_at_least(&self, v: usize, bound: i64) -> bool {
        self.g.neighbors(v).iter().any(|&w| self.degree(w) as i64 >= bound)
    }
}

/// Applies R1–R4 in sequence, recording a ledger after each and checking
/// that the total never changes.
pub fn apply_rules(pg: &PlaneGraph, d_param: usize) -> Result<Discharge> {
    let faces = pg.faces()?;
    let initial = initial_ledger(pg, &faces);
    let expected = initial.total();
    let ctx = Embedded::new(pg, faces);
    let mut snapshots = vec![initial];

    let mut ledger = snapshots[0].clone();
    rule_one(&ctx, &mut ledger);
    ledger.phase = Phase::AfterR1;
    check_conserved(&expected, &ledger)?;
    snapshots.push(ledger.clone());

    let gifts = rule_two(&ctx, &mut ledger, d_param);
    ledger.phase = Phase::AfterR2;
    check_conserved(&expected, &ledger)?;
    snapshots.push(ledger.clone());

    rule_three(&ctx, &mut ledger, &gifts, d_param);
    ledger.phase = Phase::AfterR3;
    check_conserved(&expected, &ledger)?;
    snapshots.push(ledger.clone());

    rule_four(&ctx, &mut ledger);
    ledger.phase = Phase::AfterR4;
    check_conserved(&expected, &ledger)?;
    snapshots.push(ledger);

    Ok(Discharge {
        faces: ctx.faces,
        snapshots,
    })
}

/// R1: each 6⁺-face sends 1/3 through every edge traversal of its
/// boundary. Each edge passes what it holds to an incident 3-face if it has
/// one, else splits it among its 3⁻-endpoints, else between both endpoints.
fn rule_one(ctx: &Embedded<'_>, ledger: &mut ChargeLedger) {
    let third = ratio(1, 3);
    for (fid, face) in ctx.faces.iter().enumerate() {
        if face.len() < 6 {
            continue;
        }
        for &(a, b) in face.boundary() {
            let e = ctx.edges.binary_search(&(a.min(b), a.max(b))).unwrap();
            ledger.face[fid] -= &third;
            ledger.edge[e] += &third;
        }
    }
    for (e, &(a, b)) in ctx.edges.iter().enumerate() {
        let held = std::mem::replace(&mut ledger.edge[e], Charge::zero());
        if held.is_zero() {
            continue;
        }
        let (left, right) = ctx.sides[e];
        if let Some(&f) = [left, right].iter().find(|&&f| ctx.faces[f].len() == 3) {
            ledger.face[f] += held;
            continue;
        }
        let low: Vec<usize> = [a, b].into_iter().filter(|&v| ctx.degree(v) <= 3).collect();
        let targets = if low.is_empty() { vec![a, b] } else { low };
        let share = held / ratio(targets.len() as i64, 1);
        for v in targets {
            ledger.vertex[v] += &share;
        }
    }
}

/// (donor, recipient) -> amount given in R2.
type Gifts = BTreeMap<(usize, usize), Charge>;

/// Recipients of a vertex's initial charge under R2.
fn rule_two_recipients(ctx: &Embedded<'_>, v: usize, d_param: usize) -> Vec<usize> {
    let g = ctx.g;
    let d = ctx.degree(v);
    let neighbors = g.neighbors(v).iter().copied();
    if d >= 6 {
        neighbors.filter(|&w| ctx.degree(w) <= d).collect()
    } else if d == 5 {
        if ctx.has_neighbor_of_degree_at_least(v, 16) {
            neighbors.filter(|&w| ctx.degree(w) <= 4).collect()
        } else {
            neighbors
                .filter(|&w| {
                    let on_triangle = ctx.share_triangle(v, w);
                    match ctx.degree(w) {
                        3 => on_triangle && !ctx.has_neighbor_of_degree_at_least(w, 12),
                        2 => on_triangle || !ctx.has_neighbor_of_degree_at_least(w, d_param as i64 - 2),
                        _ => false,
                    }
                })
                .collect()
        }
    } else {
        Vec::new()
    }
}

/// R2: 5⁺-vertices split their initial charge `d(v) − 4` among eligible
/// neighbors. Eligibility depends only on degrees and faces, so all
/// donations are computed up front.
fn rule_two(ctx: &Embedded<'_>, ledger: &mut ChargeLedger, d_param: usize) -> Gifts {
    let mut gifts = Gifts::new();
    for v in 0..ctx.g.vertex_count() {
        let recipients = rule_two_recipients(ctx, v, d_param);
        if recipients.is_empty() {
            continue;
        }
        let share = ratio(ctx.degree(v) as i64 - 4, recipients.len() as i64);
        for w in recipients {
            gifts.insert((v, w), share.clone());
        }
    }
    for ((v, w), amount) in &gifts {
        ledger.vertex[*v] -= amount;
        ledger.vertex[*w] += amount;
    }
    gifts
}

/// R3: a 4⁺-vertex `u` on a 3-face `uvw` that got `c` from `v` in R2 passes
/// `c` to `w` if `w` is a 2-vertex, or `min(c, 1/2)` if `w` is a 3-vertex
/// with a 2-neighbor whose other neighbor has degree below `D`. Forwards
/// never exceed what `u` holds at that moment; faces are processed by id,
/// then donor, then `u`.
fn rule_three(ctx: &Embedded<'_>, ledger: &mut ChargeLedger, gifts: &Gifts, d_param: usize) {
    let half = ratio(1, 2);
    for face in ctx.faces.iter().filter(|f| f.len() == 3) {
        let mut vs: Vec<usize> = face.vertices().collect();
        vs.sort_unstable();
        for &v in &vs {
            for &u in vs.iter().filter(|&&u| u != v) {
                if ctx.degree(u) < 4 {
                    continue;
                }
                let Some(c) = gifts.get(&(v, u)) else { continue };
                let w = *vs.iter().find(|&&x| x != u && x != v).unwrap();
                let amount = match ctx.degree(w) {
                    2 => c.clone(),
                    3 if weak_three_vertex(ctx, w, d_param) => c.clone().min(half.clone()),
                    _ => continue,
                };
                let available = ledger.vertex[u].clone().max(Charge::zero());
                let amount = amount.min(available);
                if amount.is_positive() {
                    ledger.vertex[u] -= &amount;
                    ledger.vertex[w] += amount;
                }
            }
        }
    }
}

/// A 3-vertex with a 2-neighbor whose other neighbor has degree below `D`.
fn weak_three_vertex(ctx: &Embedded<'_>, w: usize, d_param: usize) -> bool {
    ctx.g
        .neighbors(w)
        .iter()
        .any(|&x| ctx.degree(x) == 2 && ctx.g.neighbors(x).iter().any(|&y| y != w && ctx.degree(y) < d_param))
}

/// R4: every 3⁺-vertex with positive charge splits it evenly among its
/// neighbors that are negative after R3; a 3-vertex gives another 3-vertex
/// at most 4/15 and keeps the rest.
fn rule_four(ctx: &Embedded<'_>, ledger: &mut ChargeLedger) {
    let snapshot = ledger.vertex.clone();
    let cap = ratio(4, 15);
    for v in 0..ctx.g.vertex_count() {
        if ctx.degree(v) < 3 || !snapshot[v].is_positive() {
            continue;
        }
        let needy: Vec<usize> = ctx
            .g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| snapshot[w].is_negative())
            .collect();
        if needy.is_empty() {
            continue;
        }
        let share = &snapshot[v] / ratio(needy.len() as i64, 1);
        for w in needy {
            let amount = if ctx.degree(v) == 3 && ctx.degree(w) == 3 {
                share.clone().min(cap.clone())
            } else {
                share.clone()
            };
            ledger.vertex[v] -= &amount;
            ledger.vertex[w] += amount;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, dvorak_lower, g_k, tetrahedron, wegner};
    use crate::graph::check_class;

    fn frac(n: i64, d: i64) -> Charge {
        ratio(n, d)
    }

    #[test]
    fn tetrahedron_nothing_fires() {
        let d = apply_rules(&tetrahedron(), 32).unwrap();
        assert_eq!(d.at(Phase::Initial).vertex, d.final_ledger().vertex);
        assert_eq!(d.at(Phase::Initial).face, d.final_ledger().face);
        assert_eq!(d.final_ledger().total(), frac(-8, 1));
    }

    #[test]
    fn c6_trace() {
        let d = apply_rules(&cycle(6).unwrap(), 32).unwrap();
        let r1 = d.at(Phase::AfterR1);
        assert!(r1.vertex.iter().all(|c| *c == frac(-4, 3)));
        assert!(r1.face.iter().all(Zero::is_zero));
        assert_eq!(
            r1,
            &ChargeLedger {
                phase: Phase::AfterR1,
                ..d.final_ledger().clone()
            }
        );
    }

    #[test]
    fn cutedge_gets_two_thirds() {
        // A 6-cycle with a pendant vertex 6 attached to vertex 0; the outer
        // face walks the pendant edge twice (length 8).
        let g = Graph::from_edges(7, (0..6).map(|i| (i, (i + 1) % 6)).chain([(0, 6)])).unwrap();
        let mut coords: Vec<(f64, f64)> = (0..6)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / 6.0;
                (t.cos(), t.sin())
            })
            .collect();
        coords.push((2.0, 0.0));
        let pg = PlaneGraph::from_coordinates(g, &coords).unwrap();
        let d = apply_rules(&pg, 32).unwrap();
        let lens: Vec<usize> = d.faces.iter().map(Face::len).collect();
        assert!(lens.contains(&8) && lens.contains(&6));
        // Both endpoints of the cutedge are 3⁻, so its 2/3 splits evenly.
        let r1 = d.at(Phase::AfterR1);
        assert_eq!(r1.vertex[6], frac(-3, 1) + frac(1, 3));
        // Vertex 0 has degree 3: 1/3 from the pendant edge and 1/3 from each
        // cycle edge (2/3 held, shared with the other 2-vertex endpoint).
        assert_eq!(r1.vertex[0], frac(0, 1));
    }

    #[test]
    fn g32_faces_end_exactly() {
        let pg = g_k(32).unwrap();
        let d = apply_rules(&pg, 32).unwrap();
        let last = d.final_ledger();
        for (fid, f) in d.faces.iter().enumerate() {
            let expect = if f.len() == 3 {
                frac(0, 1)
            } else {
                frac(2 * f.len() as i64 - 12, 3)
            };
            assert_eq!(last.face[fid], expect);
        }
        let g = pg.graph();
        for v in 0..g.vertex_count() {
            if g.degree(v) >= 4 {
                assert!(!last.vertex[v].is_negative());
            }
        }
    }

    #[test]
    fn conservation_and_neutral_edges_on_corpus() {
        let mut corpus = vec![tetrahedron(), cycle(6).unwrap()];
        corpus.extend((3..=12).map(|k| g_k(k).unwrap()));
        corpus.extend((2..=12).map(|d| wegner(d, false).unwrap()));
        corpus.extend((2..=12).map(|d| wegner(d, true).unwrap()));
        corpus.extend((2..=6).map(|d| dvorak_lower(d).unwrap()));
        for pg in &corpus {
            for d_param in [4, 16, 32] {
                let d = apply_rules(pg, d_param).unwrap();
                for l in &d.snapshots {
                    assert_eq!(l.total(), frac(-8, 1));
                    assert!(l.edges_neutral());
                }
                let g = pg.graph();
                let last = d.final_ledger();
                for v in 0..g.vertex_count() {
                    if g.degree(v) >= 4 {
                        assert!(!last.vertex[v].is_negative());
                    }
                }
                if check_class(pg).in_class && pg.graph().min_degree() >= 2 {
                    assert!(last.face.iter().all(|c| !c.is_negative()));
                }
            }
        }
    }

    #[test]
    fn class_exceptions_with_negative_faces() {
        // A triangle is in the class, but its two 3-faces have no 6⁺-face
        // to draw from.
        let k3 = cycle(3).unwrap();
        assert!(check_class(&k3).in_class);
        let d = apply_rules(&k3, 32).unwrap();
        assert!(d.final_ledger().face.iter().all(|c| *c == frac(-1, 1)));
    }

    #[test]
    fn rule_two_high_vertex_splits_initial_charge() {
        // Star K_{1,6} drawn in the plane: the center splits 2 among six leaves.
        let g = Graph::star(6);
        let mut coords = vec![(0.0, 0.0)];
        coords.extend((0..6).map(|i| {
            let t = std::f64::consts::TAU * i as f64 / 6.0;
            (t.cos(), t.sin())
        }));
        let pg = PlaneGraph::from_coordinates(g, &coords).unwrap();
        let d = apply_rules(&pg, 32).unwrap();
        // One face of length 12: each edge gets 2/3, split between the
        // leaf (3⁻) only.
        let r1 = d.at(Phase::AfterR1);
        assert!((1..7).all(|v| r1.vertex[v] == frac(-3, 1) + frac(2, 3)));
        let r2 = d.at(Phase::AfterR2);
        assert_eq!(r2.vertex[0], frac(0, 1));
        assert!((1..7).all(|v| r2.vertex[v] == frac(-3, 1) + frac(2, 3) + frac(1, 3)));
        // R4: no 3⁺-vertex is positive any more.
        assert_eq!(d.final_ledger().vertex, r2.vertex);
    }
}
