//! Exact solvers for small graphs, used to cross-check the greedy side.
//!
//! Every search counts nodes against an [`OracleBudget`] and fails with
//! [`Error::Budget`] instead of guessing. Branching is deterministic: most
//! constrained vertex first, ties broken by smallest id.

use std::time::{Duration, Instant};

use crate::coloring::{greedy_lpq_with, ListAssignment, LpqParams};
use crate::error::{Error, Result};
use crate::graph::{square, EdgeKind, Graph};

/// Bitset width; vertex sets are single `u128` words.
const WORD: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 24,
            max_nodes: Some(200_000_000),
            time_limit: None,
        }
    }
}

impl OracleBudget {
    pub fn unlimited_nodes(max_vertices: usize) -> Self {
        OracleBudget {
            max_vertices,
            max_nodes: None,
            time_limit: None,
        }
    }
}

struct Search {
    task: &'static str,
    nodes: u64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl Search {
    fn start(task: &'static str, budget: &OracleBudget, n: usize) -> Result<Self> {
        if n > budget.max_vertices {
            return Err(Error::Budget(format!(
                "{task}: {n} vertices exceeds limit {}",
                budget.max_vertices
            )));
        }
        if n > WORD {
            return Err(Error::BadParams(format!("{task}: at most {WORD} vertices supported")));
        }
        Ok(Search {
            task,
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: budget.time_limit.map(|t| Instant::now() + t),
        })
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.max_nodes.is_some_and(|m| self.nodes > m) {
            return Err(Error::Budget(format!(
                "{}: node limit {} reached",
                self.task,
                self.nodes - 1
            )));
        }
        if self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(Error::Budget(format!(
                "{}: time limit reached after {} nodes",
                self.task, self.nodes
            )));
        }
        Ok(())
    }
}

fn bits(mut set: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (set != 0).then(|| {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            v
        })
    })
}

fn masks(g: &Graph) -> Vec<u128> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect()
}

fn full(n: usize) -> u128 {
    if n == WORD {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Clique number by branch and bound with a greedy-coloring bound.
pub fn max_clique(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    let mut search = Search::start("clique", budget, g.vertex_count())?;
    clique_number(&masks(g), &mut search)
}

fn clique_number(adj: &[u128], search: &mut Search) -> Result<usize> {
    let mut best = 0;
    if !adj.is_empty() {
        expand_clique(adj, 0, full(adj.len()), &mut best, search)?;
    }
    Ok(best)
}

fn expand_clique(adj: &[u128], size: usize, mut cand: u128, best: &mut usize, search: &mut Search) -> Result<()> {
    search.tick()?;
    let (order, bounds) = color_classes(adj, cand);
    for (&v, &bound) in order.iter().zip(&bounds).rev() {
        if size + bound <= *best {
            return Ok(());
        }
        let next = cand & adj[v];
        if next == 0 {
            *best = (*best).max(size + 1);
        } else {
            expand_clique(adj, size + 1, next, best, search)?;
        }
        cand &= !(1 << v);
    }
    Ok(())
}

/// Greedy sequential coloring of `cand`; returns vertices by class with the
/// class index (1-based) of each, an upper bound on any clique among the
/// vertices up to that point.
fn color_classes(adj: &[u128], cand: u128) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::new();
    let mut bounds = Vec::new();
    let mut left = cand;
    let mut class = 0;
    while left != 0 {
        class += 1;
        let mut open = left;
        while open != 0 {
            let v = open.trailing_zeros() as usize;
            open &= !(1 << v) & !adj[v];
            left &= !(1 << v);
            order.push(v);
            bounds.push(class);
        }
    }
    (order, bounds)
}

/// Chromatic number: clique lower bound, DSATUR upper bound, then one exact
/// k-colorability search per k in between.
pub fn exact_chromatic(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    let n = g.vertex_count();
    let mut search = Search::start("chi", budget, n)?;
    if n == 0 {
        return Ok(0);
    }
    let adj = masks(g);
    let lower = clique_number(&adj, &mut search)?;
    let upper = dsatur_greedy(&adj);
    for k in lower..upper {
        let mut colors = vec![usize::MAX; n];
        if colorable(&adj, k, &mut colors, 0, full(n), &mut search)? {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn forbidden_colors(adj: &[u128], colors: &[usize], v: usize, uncolored: u128) -> u128 {
    bits(adj[v] & !uncolored).fold(0, |m, w| m | 1 << colors[w])
}

/// Most saturated uncolored vertex, then most uncolored neighbors, then
/// smallest id. Returns the vertex and its forbidden colors.
fn pick_saturated(adj: &[u128], colors: &[usize], uncolored: u128) -> (usize, u128) {
    let mut best: Option<(usize, u128, u32, u32)> = None;
    for v in bits(uncolored) {
        let forb = forbidden_colors(adj, colors, v, uncolored);
        let key = (forb.count_ones(), (adj[v] & uncolored).count_ones());
        if best.is_none_or(|(_, _, s, d)| key > (s, d)) {
            best = Some((v, forb, key.0, key.1));
        }
    }
    let (v, forb, _, _) = best.expect("nonempty");
    (v, forb)
}

fn dsatur_greedy(adj: &[u128]) -> usize {
    let n = adj.len();
    let mut colors = vec![usize::MAX; n];
    let mut uncolored = full(n);
    let mut used = 0;
    while uncolored != 0 {
        let (v, forb) = pick_saturated(adj, &colors, uncolored);
        let c = (!forb).trailing_zeros() as usize;
        colors[v] = c;
        used = used.max(c + 1);
        uncolored &= !(1 << v);
    }
    used
}

fn colorable(
    adj: &[u128],
    k: usize,
    colors: &mut [usize],
    used: usize,
    uncolored: u128,
    search: &mut Search,
) -> Result<bool> {
    if uncolored == 0 {
        return Ok(true);
    }
    search.tick()?;
    let (v, forb) = pick_saturated(adj, colors, uncolored);
    // A fresh color is interchangeable with any other unused one.
    let limit = k.min(used + 1);
    for c in bits(!forb & full(limit)) {
        colors[v] = c;
        if colorable(adj, k, colors, used.max(c + 1), uncolored & !(1 << v), search)? {
            return Ok(true);
        }
    }
    colors[v] = usize::MAX;
    Ok(false)
}

/// Whether `g` has a proper coloring choosing each vertex's color from its
/// list.
pub fn exact_list_colorable(g: &Graph, lists: &ListAssignment, budget: &OracleBudget) -> Result<bool> {
    let n = g.vertex_count();
    if lists.len() != n {
        return Err(Error::BadParams(format!("{} lists for {n} vertices", lists.len())));
    }
    let mut search = Search::start("listcol", budget, n)?;
    let adj = masks(g);
    let mut assigned = vec![None; n];
    list_search(&adj, lists, &mut assigned, full(n), &mut search)
}

fn list_search(
    adj: &[u128],
    lists: &ListAssignment,
    assigned: &mut [Option<u32>],
    uncolored: u128,
    search: &mut Search,
) -> Result<bool> {
    if uncolored == 0 {
        return Ok(true);
    }
    search.tick()?;
    let options = |v: usize, assigned: &[Option<u32>]| -> Vec<u32> {
        let taken: Vec<u32> = bits(adj[v] & !uncolored).filter_map(|w| assigned[w]).collect();
        lists.list(v).iter().copied().filter(|c| !taken.contains(c)).collect()
    };
    let mut best: Option<(usize, Vec<u32>)> = None;
    for v in bits(uncolored) {
        let opts = options(v, assigned);
        if opts.is_empty() {
            return Ok(false);
        }
        if best.as_ref().is_none_or(|(_, b)| opts.len() < b.len()) {
            best = Some((v, opts));
        }
    }
    let (v, opts) = best.expect("nonempty");
    for c in opts {
        assigned[v] = Some(c);
        if list_search(adj, lists, assigned, uncolored & !(1 << v), search)? {
            return Ok(true);
        }
    }
    assigned[v] = None;
    Ok(false)
}

/// Smallest span of a valid L(p,q)-labeling, by iterative deepening from a
/// degree lower bound up to the greedy span.
pub fn exact_lpq(g: &Graph, params: LpqParams, budget: &OracleBudget) -> Result<u32> {
    let n = g.vertex_count();
    let mut search = Search::start("lpq", budget, n)?;
    let sq = square(g);
    let identity: Vec<usize> = (0..n).collect();
    let upper = greedy_lpq_with(&sq, &identity, params)?.span();
    let (p, q) = (params.p(), params.q());
    let lower = (0..n)
        .filter(|&v| g.degree(v) > 0)
        .map(|v| p + (g.degree(v) as u32 - 1) * q)
        .max()
        .unwrap_or(0);
    let mut near = vec![0u128; n];
    let mut far = vec![0u128; n];
    for v in 0..n {
        for (&w, &kind) in sq.neighbors(v).iter().zip(sq.kinds(v)) {
            match kind {
                EdgeKind::Adjacent => near[v] |= 1 << w,
                EdgeKind::DistanceTwo => far[v] |= 1 << w,
            }
        }
    }
    let problem = LabelProblem { near, far, p, q };
    for span in lower..upper {
        let mut labels = vec![0u32; n];
        if problem.solve(span, &mut labels, full(n), true, &mut search)? {
            return Ok(span);
        }
    }
    Ok(upper)
}

struct LabelProblem {
    near: Vec<u128>,
    far: Vec<u128>,
    p: u32,
    q: u32,
}

impl LabelProblem {
    /// Labels in `0..=span` still open for `v`.
    fn open_labels(&self, v: usize, span: u32, labels: &[u32], unlabeled: u128) -> Vec<u32> {
        let mut blocked = vec![false; span as usize + 1];
        let mut block = |center: u32, gap: u32| {
            let lo = center.saturating_sub(gap - 1);
            let hi = (center + gap - 1).min(span);
            for slot in &mut blocked[lo as usize..=hi as usize] {
                *slot = true;
            }
        };
        for w in bits(self.near[v] & !unlabeled) {
            block(labels[w], self.p);
        }
        for w in bits(self.far[v] & !unlabeled) {
            block(labels[w], self.q);
        }
        (0..=span).filter(|&l| !blocked[l as usize]).collect()
    }

    fn solve(&self, span: u32, labels: &mut [u32], unlabeled: u128, first: bool, search: &mut Search) -> Result<bool> {
        if unlabeled == 0 {
            return Ok(true);
        }
        search.tick()?;
        let mut best: Option<(usize, Vec<u32>)> = None;
        for v in bits(unlabeled) {
            let open = self.open_labels(v, span, labels, unlabeled);
            if open.is_empty() {
                return Ok(false);
            }
            if best.as_ref().is_none_or(|(_, b)| open.len() < b.len()) {
                best = Some((v, open));
            }
        }
        let (v, mut open) = best.expect("nonempty");
        if first {
            // Reflection l -> span - l preserves validity.
            open.retain(|&l| 2 * l <= span);
        }
        for l in open {
            labels[v] = l;
            if self.solve(span, labels, unlabeled & !(1 << v), false, search)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
