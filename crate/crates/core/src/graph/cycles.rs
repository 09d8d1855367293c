use std::collections::VecDeque;

use super::Graph;

/// Length of a shortest cycle; `None` stands for infinity (forests).
pub type Girth = Option<usize>;

/// Exact girth by a breadth-first search from every vertex.
pub fn girth(g: &Graph) -> Girth {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            if let Some(b) = best {
                // Any cycle found from here on is at least 2*dist[x]+1 long.
                if 2 * dist[x] + 1 >= b {
                    break;
                }
            }
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Whether some cycle has exactly `len` vertices, by exhaustive search of
/// simple paths whose smallest vertex is their start.
pub fn has_cycle_of_length(g: &Graph, len: usize) -> bool {
    if len < 3 {
        return false;
    }
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    fn extend(g: &Graph, start: usize, at: usize, depth: usize, len: usize, on_path: &mut [bool]) -> bool {
        for &w in g.neighbors(at) {
            if w == start && depth == len && len >= 3 {
                return true;
            }
            if w <= start || on_path[w] || depth >= len {
                continue;
            }
            on_path[w] = true;
            let found = extend(g, start, w, depth + 1, len, on_path);
            on_path[w] = false;
            if found {
                return true;
            }
        }
        false
    }
    (0..n).any(|s| {
        on_path[s] = true;
        let found = extend(g, s, s, 1, len, &mut on_path);
        on_path[s] = false;
        found
    })
}

/// A 4-cycle exists iff two vertices share two common neighbors.
pub(crate) fn has_four_cycle(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut seen_from = vec![usize::MAX; n];
    for u in 0..n {
        for &a in g.neighbors(u) {
            for &w in g.neighbors(a) {
                if w == u {
                    continue;
                }
                if seen_from[w] == u {
                    return true;
                }
                seen_from[w] = u;
            }
        }
    }
    false
}

/// A 5-cycle `a b c d e` exists iff for some edge `bc`, some `a ∈ N(b)` and
/// `d ∈ N(c)` have a common neighbor outside `{b, c}`.
pub(crate) fn has_five_cycle(g: &Graph) -> bool {
    for b in 0..g.vertex_count() {
        for &c in g.neighbors(b) {
            for &a in g.neighbors(b) {
                if a == c {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d == b || d == a {
                        continue;
                    }
                    if common_neighbor_outside(g, a, d, b, c) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn common_neighbor_outside(g: &Graph, a: usize, d: usize, x: usize, y: usize) -> bool {
    let (mut i, mut j) = (0, 0);
    let (na, nd) = (g.neighbors(a), g.neighbors(d));
    while i < na.len() && j < nd.len() {
        match na[i].cmp(&nd[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if na[i] != x && na[i] != y {
                    return true;
                }
                i += 1;
                j += 1;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn girth_of_basics() {
        assert_eq!(girth(&Graph::cycle(6)), Some(6));
        assert_eq!(girth(&Graph::complete(4)), Some(3));
        assert_eq!(girth(&Graph::path(5)), None);
        assert_eq!(girth(&Graph::star(4)), None);
    }

    #[test]
    fn short_cycles() {
        assert!(has_four_cycle(&Graph::cycle(4)));
        assert!(!has_four_cycle(&Graph::cycle(5)));
        assert!(has_five_cycle(&Graph::cycle(5)));
        assert!(!has_five_cycle(&Graph::cycle(6)));
        assert!(has_cycle_of_length(&Graph::cycle(7), 7));
        assert!(!has_cycle_of_length(&Graph::cycle(7), 6));
        // K4 has 4-cycles but no 5-cycles.
        assert!(has_four_cycle(&Graph::complete(4)));
        assert!(!has_five_cycle(&Graph::complete(4)));
    }

    proptest! {
        #[test]
        fn fast_checks_match_exhaustive_search(g in arb_graph(8)) {
            prop_assert_eq!(has_four_cycle(&g), has_cycle_of_length(&g, 4));
            prop_assert_eq!(has_five_cycle(&g), has_cycle_of_length(&g, 5));
            let shortest = (3..=g.vertex_count()).find(|&l| has_cycle_of_length(&g, l));
            prop_assert_eq!(girth(&g), shortest);
        }
    }
}
