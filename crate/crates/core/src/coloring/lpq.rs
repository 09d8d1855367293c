use crate::error::{Error, Result};
use crate::graph::{square, EdgeKind, Graph, SquareGraph};
use crate::ordering::{verify_ordering, GoodOrdering, DEFAULT_T_G};

/// Separations for an L(p,q)-labeling, `p ≥ q ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LpqParams {
    p: u32,
    q: u32,
}

impl LpqParams {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if q == 0 || p < q {
            return Err(Error::BadParams(format!("need p >= q >= 1, got p = {p}, q = {q}")));
        }
        Ok(LpqParams { p, q })
    }

    /// Separation across edges.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Separation across distance-two pairs.
    pub fn q(&self) -> u32 {
        self.q
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    labels: Vec<u32>,
    span: u32,
}

impl Labeling {
    pub fn new(labels: Vec<u32>) -> Self {
        let span = labels.iter().copied().max().unwrap_or(0);
        Labeling { labels, span }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    /// Largest label used.
    pub fn span(&self) -> u32 {
        self.span
    }
}

/// Labels vertices along `order`, each with the smallest nonnegative integer
/// at distance `≥ p` from earlier neighbors and `≥ q` from earlier vertices
/// at distance exactly two.
pub fn greedy_lpq(g: &Graph, order: &[usize], params: LpqParams) -> Result<Labeling> {
    greedy_lpq_with(&square(g), order, params)
}

pub fn greedy_lpq_with(sq: &SquareGraph, order: &[usize], params: LpqParams) -> Result<Labeling> {
    let n = sq.vertex_count();
    sq.positions(order)?;
    let mut labels: Vec<Option<u32>> = vec![None; n];
    // Closed forbidden intervals [lo, hi].
    let mut forbidden: Vec<(u32, u32)> = Vec::new();
    for &v in order {
        forbidden.clear();
        for (&w, kind) in sq.neighbors(v).iter().zip(sq.kinds(v)) {
            if let Some(x) = labels[w] {
                let sep = match kind {
                    EdgeKind::Adjacent => params.p,
                    EdgeKind::DistanceTwo => params.q,
                };
                forbidden.push((x.saturating_sub(sep - 1), x + (sep - 1)));
            }
        }
        forbidden.sort_unstable();
        let mut candidate = 0u32;
        for &(lo, hi) in &forbidden {
            if lo > candidate {
                break;
            }
            candidate = candidate.max(hi + 1);
        }
        labels[v] = Some(candidate);
    }
    Ok(Labeling::new(labels.into_iter().map(Option::unwrap).collect()))
}

/// The span guaranteed by an ordering with thresholds `(3, D + 2)`:
/// `3(2p − 1) + (D − 1)(2q − 1) = (2q − 1)D + 6p − 2q − 2`.
pub fn span_bound(g: &Graph, order: &GoodOrdering, params: LpqParams) -> Result<u64> {
    let th = order.thresholds();
    if th.graph != DEFAULT_T_G || th.square != th.d_param + 2 {
        return Err(Error::Unverified(format!(
            "thresholds ({}, {}) are not (3, D + 2)",
            th.graph, th.square
        )));
    }
    let report = verify_ordering(g, order.order(), th.d_param)?;
    if !report.pass {
        return Err(Error::Unverified("ordering exceeds (3, D + 2)".into()));
    }
    let (p, q, d, t) = (params.p as u64, params.q as u64, th.d_param as u64, DEFAULT_T_G as u64);
    Ok(t * (2 * p - 1) + (d + 2 - t) * (2 * q - 1))
}
