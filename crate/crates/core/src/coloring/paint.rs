use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A Lister strategy for the online list-coloring game.
pub trait Lister {
    /// Vertices to list in `round` (0-based); `uncolored` is sorted and
    /// nonempty. Returned ids outside `uncolored` are ignored.
    fn list(&mut self, round: usize, uncolored: &[usize]) -> Vec<usize>;
}

/// Lists every uncolored vertex every round.
#[derive(Debug, Default, Clone)]
pub struct AllUncolored;

impl Lister for AllUncolored {
    fn list(&mut self, _round: usize, uncolored: &[usize]) -> Vec<usize> {
        uncolored.to_vec()
    }
}

/// Lists each uncolored vertex independently with probability 1/2, or a
/// single uniformly chosen one if that comes out empty.
#[derive(Debug, Clone)]
pub struct RandomSubset {
    rng: ChaCha8Rng,
}

impl RandomSubset {
    pub fn new(seed: u64) -> Self {
        RandomSubset {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Lister for RandomSubset {
    fn list(&mut self, _round: usize, uncolored: &[usize]) -> Vec<usize> {
        let mut chosen: Vec<usize> = uncolored.iter().copied().filter(|_| self.rng.gen_bool(0.5)).collect();
        if chosen.is_empty() {
            chosen.push(uncolored[self.rng.gen_range(0..uncolored.len())]);
        }
        chosen
    }
}

/// Replays scripted rounds. Lines whose vertices are all colored already
/// are skipped; once the script runs out every uncolored vertex is listed.
#[derive(Debug, Clone)]
pub struct Scripted {
    rounds: Vec<Vec<usize>>,
    next: usize,
}

impl Scripted {
    pub fn new(rounds: Vec<Vec<usize>>) -> Self {
        Scripted { rounds, next: 0 }
    }
}

impl Lister for Scripted {
    fn list(&mut self, _round: usize, uncolored: &[usize]) -> Vec<usize> {
        while self.next < self.rounds.len() {
            let line = &self.rounds[self.next];
            self.next += 1;
            let kept: Vec<usize> = line
                .iter()
                .copied()
                .filter(|v| uncolored.binary_search(v).is_ok())
                .collect();
            if !kept.is_empty() {
                return kept;
            }
        }
        uncolored.to_vec()
    }
}

/// Built-in lister by name: `all`, `random` (seeded) or `script`.
pub fn lister_by_name(name: &str, seed: u64, script: Option<Vec<Vec<usize>>>) -> Result<Box<dyn Lister>> {
    match name {
        "all" | "all-uncolored" => Ok(Box::new(AllUncolored)),
        "random" | "random-subset" => Ok(Box::new(RandomSubset::new(seed))),
        "script" | "scripted" => Ok(Box::new(Scripted::new(script.unwrap_or_default()))),
        other => Err(Error::UnknownStrategy(other.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaintRound {
    pub listed: Vec<usize>,
    pub painted: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaintOutcome {
    PainterWins,
    /// `vertex` was listed `k` times without being painted.
    ListerWins {
        vertex: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaintTranscript {
    pub rounds: Vec<PaintRound>,
    pub outcome: PaintOutcome,
}

impl PaintTranscript {
    pub fn painter_won(&self) -> bool {
        self.outcome == PaintOutcome::PainterWins
    }
}

/// Plays the `k`-token game on `target` (normally a square). Each round
/// Painter scans the listed vertices in ordering order and paints every one
/// with no neighbor painted earlier in the same round.
pub fn paint_game(target: &Graph, tokens: usize, order: &[usize], lister: &mut dyn Lister) -> Result<PaintTranscript> {
    if tokens == 0 {
        return Err(Error::BadParams("token count must be at least 1".into()));
    }
    let n = target.vertex_count();
    let pos = target.positions(order)?;
    let mut colored = vec![false; n];
    let mut listed_count = vec![0usize; n];
    let mut painted_now = vec![false; n];
    let mut rounds = Vec::new();
    let mut uncolored: Vec<usize> = (0..n).collect();
    while !uncolored.is_empty() {
        let mut listed: Vec<usize> = lister
            .list(rounds.len(), &uncolored)
            .into_iter()
            .filter(|&v| v < n && !colored[v])
            .collect();
        listed.sort_unstable();
        listed.dedup();
        if listed.is_empty() {
            return Err(Error::BadParams("lister presented an empty list".into()));
        }
        let mut scan = listed.clone();
        scan.sort_by_key(|&v| pos[v]);
        let mut painted = Vec::new();
        for v in scan {
            if target.neighbors(v).iter().all(|&w| !painted_now[w]) {
                painted_now[v] = true;
                painted.push(v);
            }
        }
        for &v in &painted {
            painted_now[v] = false;
            colored[v] = true;
        }
        painted.sort_unstable();
        let mut loser = None;
        for &v in &listed {
            listed_count[v] += 1;
            if !colored[v] && listed_count[v] >= tokens && loser.is_none() {
                loser = Some(v);
            }
        }
        rounds.push(PaintRound { listed, painted });
        if let Some(vertex) = loser {
            return Ok(PaintTranscript {
                rounds,
                outcome: PaintOutcome::ListerWins { vertex },
            });
        }
        uncolored.retain(|&v| !colored[v]);
    }
    Ok(PaintTranscript {
        rounds,
        outcome: PaintOutcome::PainterWins,
    })
}
