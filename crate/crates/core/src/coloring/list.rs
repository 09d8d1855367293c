use crate::error::{Error, Result};
use crate::graph::Graph;

/// Allowed colors per vertex, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<u32>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        ListAssignment { lists }
    }

    /// Every vertex gets `colors`.
    pub fn uniform(n: usize, colors: impl IntoIterator<Item = u32>) -> Self {
        let list: Vec<u32> = colors.into_iter().collect();
        Self::new(vec![list; n])
    }

    pub fn list(&self, v: usize) -> &[u32] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Self {
        Coloring { colors }
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn distinct_count(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

/// Colors `target` (normally a square) greedily along `order`: each vertex
/// takes the smallest color of its list not used by an earlier neighbor.
///
/// Fails with [`Error::ListExhausted`] at the first vertex whose list is
/// used up.
pub fn greedy_list_color(target: &Graph, order: &[usize], lists: &ListAssignment) -> Result<Coloring> {
    let n = target.vertex_count();
    if lists.len() != n {
        return Err(Error::BadParams(format!("{} lists for {} vertices", lists.len(), n)));
    }
    target.positions(order)?;
    let mut colors: Vec<Option<u32>> = vec![None; n];
    let mut blocked: Vec<u32> = Vec::new();
    for &v in order {
        blocked.clear();
        blocked.extend(target.neighbors(v).iter().filter_map(|&w| colors[w]));
        let choice = lists.list(v).iter().copied().find(|c| !blocked.contains(c));
        match choice {
            Some(c) => colors[v] = Some(c),
            None => {
                return Err(Error::ListExhausted {
                    vertex: v,
                    list: lists.list(v).to_vec(),
                })
            }
        }
    }
    Ok(Coloring {
        colors: colors.into_iter().map(Option::unwrap).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::validate::is_proper_list_coloring;
    use crate::constructions::g_k;
    use crate::graph::square;
    use crate::ordering::good_ordering;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn clique_examples() {
        let k3 = square(&Graph::path(3)).into_graph();
        let all = ListAssignment::uniform(3, [1, 2, 3]);
        assert_eq!(greedy_list_color(&k3, &[0, 1, 2], &all).unwrap().colors(), &[1, 2, 3]);
        let mixed = ListAssignment::new(vec![vec![1], vec![1, 2], vec![2, 3]]);
        assert_eq!(greedy_list_color(&k3, &[0, 1, 2], &mixed).unwrap().colors(), &[1, 2, 3]);
        let two = ListAssignment::uniform(3, [1, 2]);
        assert_eq!(
            greedy_list_color(&k3, &[0, 1, 2], &two),
            Err(Error::ListExhausted {
                vertex: 2,
                list: vec![1, 2]
            })
        );
    }

    #[test]
    fn empty_list_fails_immediately() {
        let g = Graph::path(2);
        let lists = ListAssignment::new(vec![vec![], vec![1]]);
        assert_eq!(
            greedy_list_color(&g, &[0, 1], &lists),
            Err(Error::ListExhausted {
                vertex: 0,
                list: vec![]
            })
        );
        assert!(matches!(greedy_list_color(&g, &[0], &lists), Err(Error::BadOrder(_))));
    }

    #[test]
    fn random_lists_of_size_back_sq_plus_one_never_fail() {
        let g = g_k(8).unwrap().graph().clone();
        let o = good_ordering(&g, None, None).good().unwrap();
        let sq = square(&g);
        let size = o.max_back_sq() + 1;
        for seed in 0..100 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let palette: Vec<u32> = (0..(2 * size as u32)).collect();
            let lists: Vec<Vec<u32>> = (0..g.vertex_count())
                .map(|_| palette.choose_multiple(&mut rng, size).copied().collect())
                .collect();
            let lists = ListAssignment::new(lists);
            let c = greedy_list_color(&sq, o.order(), &lists).unwrap();
            assert!(is_proper_list_coloring(&g, &lists, &c));
        }
    }
}
