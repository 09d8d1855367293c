//! Good orderings: every vertex has at most `t_g` earlier neighbors in `G`
//! and at most `D + 2` earlier neighbors in `G²`.
//!
//! Orderings are extracted by peeling. A vertex is removable when, among the
//! vertices still present, it has at most `t_g` neighbors in `G` and at most
//! `D + 2` in `G²`. Removed vertices fill the ordering from the back. Since
//! removing other vertices only lowers these counts, a removable vertex stays
//! removable, so greedy peeling finds an ordering whenever one exists.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{square, Graph, SquareGraph};

/// Default lower bound on the degree parameter `D`.
pub const MIN_D_PARAM: usize = 32;
/// Default bound on earlier neighbors in `G`.
pub const DEFAULT_T_G: usize = 3;

/// Back-degree limits for an ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Thresholds {
    pub d_param: usize,
    /// Earlier neighbors allowed in `G`.
    pub graph: usize,
    /// Earlier neighbors allowed in `G²`; `d_param + 2`.
    pub square: usize,
}

impl Thresholds {
    /// `D = max(Δ, 32)` and `t_g = 3` unless overridden.
    pub fn for_graph(g: &Graph, d_param: Option<usize>, t_g: Option<usize>) -> Thresholds {
        let d_param = d_param.unwrap_or_else(|| g.max_degree().max(MIN_D_PARAM));
        Thresholds::new(d_param, t_g.unwrap_or(DEFAULT_T_G))
    }

    pub fn new(d_param: usize, t_g: usize) -> Thresholds {
        Thresholds {
            d_param,
            graph: t_g,
            square: d_param + 2,
        }
    }

    fn admits(&self, back_g: usize, back_sq: usize) -> bool {
        back_g <= self.graph && back_sq <= self.square
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodOrdering {
    order: Vec<usize>,
    thresholds: Thresholds,
    back_g: Vec<usize>,
    back_sq: Vec<usize>,
}

impl GoodOrdering {
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn thresholds(&self) -> Thresholds {
        self.thresholds
    }

    pub fn d_param(&self) -> usize {
        self.thresholds.d_param
    }

    /// Earlier `G`-neighbors of vertex `v`.
    pub fn back_g(&self, v: usize) -> usize {
        self.back_g[v]
    }

    /// Earlier `G²`-neighbors of vertex `v`.
    pub fn back_sq(&self, v: usize) -> usize {
        self.back_sq[v]
    }

    pub fn max_back_g(&self) -> usize {
        self.back_g.iter().copied().max().unwrap_or(0)
    }

    pub fn max_back_sq(&self) -> usize {
        self.back_sq.iter().copied().max().unwrap_or(0)
    }
}

/// Vertices that peeling could not remove, with their degrees in `G` and
/// `G²` restricted to the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StuckCertificate {
    pub remaining: Vec<usize>,
    pub residual_g: Vec<usize>,
    pub residual_sq: Vec<usize>,
    pub thresholds: Thresholds,
}

impl StuckCertificate {
    /// Every listed vertex violates a threshold against the rest of the set.
    pub fn is_genuine(&self, g: &Graph) -> bool {
        let sq = square(g);
        let mut inside = vec![false; g.vertex_count()];
        for &v in &self.remaining {
            inside[v] = true;
        }
        !self.remaining.is_empty()
            && self.remaining.iter().all(|&v| {
                let dg = g.neighbors(v).iter().filter(|&&w| inside[w]).count();
                let dsq = sq.neighbors(v).iter().filter(|&&w| inside[w]).count();
                !self.thresholds.admits(dg, dsq)
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderingOutcome {
    Good(GoodOrdering),
    Stuck(StuckCertificate),
}

impl OrderingOutcome {
    pub fn good(self) -> Option<GoodOrdering> {
        match self {
            OrderingOutcome::Good(o) => Some(o),
            OrderingOutcome::Stuck(_) => None,
        }
    }

    pub fn is_good(&self) -> bool {
        matches!(self, OrderingOutcome::Good(_))
    }
}

/// Extracts a good ordering by peeling with a FIFO bag. Only `G²`-neighbors
/// of a removed vertex are re-examined.
pub fn good_ordering(g: &Graph, d_param: Option<usize>, t_g: Option<usize>) -> OrderingOutcome {
    let thresholds = Thresholds::for_graph(g, d_param, t_g);
    good_ordering_with(g, &square(g), thresholds)
}

/// As [`good_ordering`], reusing a precomputed square.
pub fn good_ordering_with(g: &Graph, sq: &SquareGraph, thresholds: Thresholds) -> OrderingOutcome {
    let n = g.vertex_count();
    let mut res_g: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut res_sq: Vec<usize> = (0..n).map(|v| sq.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queued = vec![false; n];
    let mut bag = VecDeque::new();
    for v in 0..n {
        if thresholds.admits(res_g[v], res_sq[v]) {
            queued[v] = true;
            bag.push_back(v);
        }
    }
    let mut back_g = vec![0; n];
    let mut back_sq = vec![0; n];
    let mut peeled = Vec::with_capacity(n);
    while let Some(v) = bag.pop_front() {
        removed[v] = true;
        back_g[v] = res_g[v];
        back_sq[v] = res_sq[v];
        peeled.push(v);
        for (&w, kind) in sq.neighbors(v).iter().zip(sq.kinds(v)) {
            if removed[w] {
                continue;
            }
            res_sq[w] -= 1;
            if *kind == crate::graph::EdgeKind::Adjacent {
                res_g[w] -= 1;
            }
            if !queued[w] && thresholds.admits(res_g[w], res_sq[w]) {
                queued[w] = true;
                bag.push_back(w);
            }
        }
    }
    if peeled.len() == n {
        peeled.reverse();
        OrderingOutcome::Good(GoodOrdering {
            order: peeled,
            thresholds,
            back_g,
            back_sq,
        })
    } else {
        let remaining: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
        OrderingOutcome::Stuck(StuckCertificate {
            residual_g: remaining.iter().map(|&v| res_g[v]).collect(),
            residual_sq: remaining.iter().map(|&v| res_sq[v]).collect(),
            remaining,
            thresholds,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub pass: bool,
    pub thresholds: Thresholds,
    pub max_back_g: usize,
    /// A vertex attaining `max_back_g`.
    pub argmax_g: Option<usize>,
    pub max_back_sq: usize,
    pub argmax_sq: Option<usize>,
    /// First vertex in the ordering exceeding a threshold.
    pub first_violation: Option<usize>,
    pub back_g: Vec<usize>,
    pub back_sq: Vec<usize>,
}

/// Recomputes back-degrees from scratch, with `t_g = 3`.
pub fn verify_ordering(g: &Graph, order: &[usize], d_param: usize) -> Result<VerifyReport> {
    verify_ordering_with(g, order, Thresholds::new(d_param, DEFAULT_T_G))
}

pub fn verify_ordering_with(g: &Graph, order: &[usize], thresholds: Thresholds) -> Result<VerifyReport> {
    let pos = g.positions(order)?;
    let sq = square(g);
    let n = g.vertex_count();
    let earlier = |v: usize, list: &[usize]| list.iter().filter(|&&w| pos[w] < pos[v]).count();
    let back_g: Vec<usize> = (0..n).map(|v| earlier(v, g.neighbors(v))).collect();
    let back_sq: Vec<usize> = (0..n).map(|v| earlier(v, sq.neighbors(v))).collect();
    let argmax = |b: &[usize]| order.iter().copied().max_by_key(|&v| (b[v], std::cmp::Reverse(pos[v])));
    let argmax_g = argmax(&back_g);
    let argmax_sq = argmax(&back_sq);
    let first_violation = order
        .iter()
        .copied()
        .find(|&v| !thresholds.admits(back_g[v], back_sq[v]));
    Ok(VerifyReport {
        pass: first_violation.is_none(),
        thresholds,
        max_back_g: argmax_g.map_or(0, |v| back_g[v]),
        argmax_g,
        max_back_sq: argmax_sq.map_or(0, |v| back_sq[v]),
        argmax_sq,
        first_violation,
        back_g,
        back_sq,
    })
}

impl GoodOrdering {
    /// Wraps an externally supplied ordering after verifying it.
    pub fn from_order(g: &Graph, order: Vec<usize>, thresholds: Thresholds) -> Result<GoodOrdering> {
        let report = verify_ordering_with(g, &order, thresholds)?;
        if let Some(v) = report.first_violation {
            return Err(Error::Unverified(format!(
                "vertex {v} has {} earlier neighbors in G and {} in G^2",
                report.back_g[v], report.back_sq[v]
            )));
        }
        Ok(GoodOrdering {
            order,
            thresholds,
            back_g: report.back_g,
            back_sq: report.back_sq,
        })
    }
}

/// `d(u) ≤ 3`, `|N²(u)| ≤ D + 2`, and deleting `u` does not change the
/// square on the other vertices.
pub fn check_basic_reducible(g: &Graph, u: usize, d_param: usize) -> bool {
    let sq = square(g);
    if g.degree(u) > 3 || sq.degree(u) > d_param + 2 {
        return false;
    }
    let without = square(&g.isolate(u));
    (0..g.vertex_count()).filter(|&v| v != u).all(|v| {
        without
            .neighbors(v)
            .iter()
            .eq(sq.neighbors(v).iter().filter(|&&w| w != u))
    })
}

/// An ordered sequence of distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibleSequence {
    vertices: Vec<usize>,
}

impl ReducibleSequence {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptySequence);
        }
        let mut seen = std::collections::HashSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::NotDistinct(v));
            }
        }
        Ok(ReducibleSequence { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }
}

/// `G[S]` has an edge, and each `w_i` has at most 3 neighbors and at most
/// `D + 2` square-neighbors outside `{w_{i+1}, ..., w_k}`.
pub fn check_reducible_sequence(g: &Graph, s: &ReducibleSequence, d_param: usize) -> Result<bool> {
    let n = g.vertex_count();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in s.vertices.iter().enumerate() {
        if v >= n {
            return Err(Error::BadVertex {
                vertex: v,
                vertex_count: n,
            });
        }
        index[v] = i;
    }
    let has_edge = s
        .vertices
        .iter()
        .any(|&v| g.neighbors(v).iter().any(|&w| index[w] != usize::MAX));
    if !has_edge {
        return Ok(false);
    }
    let sq = square(g);
    let outside_later = |i: usize, list: &[usize]| {
        list.iter()
            .filter(|&&w| index[w] == usize::MAX || index[w] <= i)
            .count()
    };
    Ok(s.vertices
        .iter()
        .enumerate()
        .all(|(i, &w)| outside_later(i, g.neighbors(w)) <= 3 && outside_later(i, sq.neighbors(w)) <= d_param + 2))
}
