//! Checkers that recompute base-graph distances by breadth-first search,
//! independent of the square construction used by the producers.

use crate::graph::Graph;

use super::{Coloring, Labeling, ListAssignment, LpqParams};

/// Pairs `(u, v, dist)` with `u < v` and `dist ∈ {1, 2}` in `g`.
fn close_pairs(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        for (v, d) in g.distances_from(u).into_iter().enumerate() {
            if let Some(d @ 1..=2) = d {
                if u < v {
                    out.push((u, v, d));
                }
            }
        }
    }
    out
}

/// Proper on `g²`: vertices within distance two get distinct colors.
pub fn is_proper_square_coloring(g: &Graph, coloring: &Coloring) -> bool {
    coloring.colors().len() == g.vertex_count()
        && close_pairs(g)
            .iter()
            .all(|&(u, v, _)| coloring.color(u) != coloring.color(v))
}

pub fn is_proper_list_coloring(g: &Graph, lists: &ListAssignment, coloring: &Coloring) -> bool {
    is_proper_square_coloring(g, coloring) && (0..g.vertex_count()).all(|v| lists.list(v).contains(&coloring.color(v)))
}

/// Proper coloring of `target` itself (no squaring).
pub fn is_proper_coloring(target: &Graph, colors: &[u32]) -> bool {
    colors.len() == target.vertex_count() && target.edges().all(|(u, v)| colors[u] != colors[v])
}

/// Separation `p` across edges and `q` across distance-two pairs.
pub fn is_valid_labeling(g: &Graph, params: LpqParams, labeling: &Labeling) -> bool {
    let labels = labeling.labels();
    labels.len() == g.vertex_count()
        && labeling.span() == labels.iter().copied().max().unwrap_or(0)
        && close_pairs(g).iter().all(|&(u, v, d)| {
            let sep = if d == 1 { params.p() } else { params.q() };
            labels[u].abs_diff(labels[v]) >= sep
        })
}
