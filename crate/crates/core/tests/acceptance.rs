//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runtime limits are part of each criterion.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Zero;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sqo_core::coloring::validate::{is_proper_list_coloring, is_valid_labeling};
use sqo_core::coloring::{greedy_list_color, greedy_lpq, paint_game, ListAssignment, LpqParams, RandomSubset};
use sqo_core::constructions::{cycle, dvorak_gadget, dvorak_lower, g_k, gadget_h, tetrahedron, wegner};
use sqo_core::discharging::{apply_rules, concavity_min, initial_charges, Charge};
use sqo_core::graph::{check_class, girth};
use sqo_core::oracle::{exact_chromatic, max_clique, OracleBudget};
use sqo_core::ordering::{good_ordering, verify_ordering, OrderingOutcome};
use sqo_core::{square, Graph, PlaneGraph};

type Criterion = (u32, &'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn int(n: i64) -> Charge {
    BigRational::from_integer(BigInt::from(n))
}

fn within(elapsed: Duration, limit_secs: f64) -> bool {
    elapsed.as_secs_f64() < limit_secs
}

/// Connected corpus named by the Euler-sum criterion.
fn euler_corpus() -> Vec<(String, PlaneGraph)> {
    let mut out = vec![
        ("tetrahedron".to_string(), tetrahedron()),
        ("C6".to_string(), cycle(6).unwrap()),
    ];
    out.extend((4..=34).map(|k| (format!("g_{k}"), g_k(k).unwrap())));
    out.extend((8..=12).map(|d| (format!("wegner({d})"), wegner(d, false).unwrap())));
    out.extend((3..=6).map(|d| (format!("dvorak({d})"), dvorak_lower(d).unwrap())));
    out
}

/// Every generated plane graph exercised by the conservation criterion.
fn full_corpus() -> Vec<(String, PlaneGraph)> {
    let mut out = euler_corpus();
    out.extend(
        (3..=40)
            .filter(|k| !(4..=34).contains(k))
            .map(|k| (format!("g_{k}"), g_k(k).unwrap())),
    );
    out.extend((2..=12).map(|d| (format!("wegner-subdivided({d})"), wegner(d, true).unwrap())));
    out.extend([2, 7, 8].map(|d| (format!("dvorak({d})"), dvorak_lower(d).unwrap())));
    out.extend((2..=6).map(|d| (format!("dvorak-gadget({d})"), dvorak_gadget(d).unwrap().plane)));
    out.push(("gadget".to_string(), gadget_h().plane));
    out.extend([3, 5, 7, 8].map(|n| (format!("C{n}"), cycle(n).unwrap())));
    out
}

fn c1_euler_sum() -> Verdict {
    let corpus = euler_corpus();
    let mut slowest = Duration::ZERO;
    let mut bad = Vec::new();
    for (name, pg) in &corpus {
        let t = Instant::now();
        let total = initial_charges(pg).map(|l| l.total());
        slowest = slowest.max(t.elapsed());
        if total != Ok(int(-8)) {
            bad.push(name.clone());
        }
    }
    let pass = bad.is_empty() && corpus.len() >= 20 && within(slowest, 1.0);
    verdict(
        pass,
        format!(
            "total -8 on {}/{} graphs, slowest {:.3}s (limit 1s) {bad:?}",
            corpus.len() - bad.len(),
            corpus.len(),
            slowest.as_secs_f64()
        ),
    )
}

fn c2_conservation() -> Verdict {
    let corpus = full_corpus();
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut phases = 0;
    for (name, pg) in &corpus {
        match apply_rules(pg, pg.graph().max_degree().max(32)) {
            Ok(d) => {
                phases += d.snapshots.len();
                if !d.snapshots.iter().all(|l| l.total() == int(-8) && l.edges_neutral()) {
                    bad.push(name.clone());
                }
            }
            Err(_) => bad.push(name.clone()),
        }
    }
    let elapsed = t.elapsed();
    let pass = bad.is_empty() && within(elapsed, 5.0);
    verdict(
        pass,
        format!(
            "{} graphs, {phases} snapshots exact, {:.2}s total (limit 5s) {bad:?}",
            corpus.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn c3_good_ordering() -> Verdict {
    let mut slowest = Duration::ZERO;
    let mut bad = Vec::new();
    let mut worst = (0, 0);
    for k in 32..=40 {
        let g = g_k(k).unwrap().into_graph();
        let t = Instant::now();
        let ok = match good_ordering(&g, None, None) {
            OrderingOutcome::Good(o) => {
                let v = verify_ordering(&g, o.order(), k).unwrap();
                worst = (worst.0.max(v.max_back_g), worst.1.max(v.max_back_sq.saturating_sub(k)));
                v.pass && v.max_back_g <= 3 && v.max_back_sq <= k + 2
            }
            OrderingOutcome::Stuck(_) => false,
        };
        slowest = slowest.max(t.elapsed());
        if !ok {
            bad.push(k);
        }
    }
    let pass = bad.is_empty() && within(slowest, 2.0);
    verdict(
        pass,
        format!(
            "g_k(32..40): max back_g {}, max back_sq - k {} (limits 3, 2), slowest {:.3}s (limit 2s) failing {bad:?}",
            worst.0,
            worst.1,
            slowest.as_secs_f64()
        ),
    )
}

fn c4_stuck_certificate() -> Verdict {
    let g = g_k(32).unwrap().into_graph();
    let t = Instant::now();
    let outcome = good_ordering(&g, None, Some(2));
    let elapsed = t.elapsed();
    match outcome {
        OrderingOutcome::Stuck(cert) => {
            let mut rest = cert.remaining.clone();
            rest.sort_unstable();
            let full = rest == (0..g.vertex_count()).collect::<Vec<_>>();
            let pass = full && cert.is_genuine(&g) && within(elapsed, 1.0);
            verdict(
                pass,
                format!(
                    "stuck on {}/{} vertices, {:.3}s (limit 1s)",
                    rest.len(),
                    g.vertex_count(),
                    elapsed.as_secs_f64()
                ),
            )
        }
        OrderingOutcome::Good(_) => verdict(false, "t_g = 2 unexpectedly produced an ordering"),
    }
}

fn c5_list_and_paint() -> Verdict {
    let g = g_k(32).unwrap().into_graph();
    let n = g.vertex_count();
    let k = g.max_degree() + 3;
    let sq = square(&g);
    let t = Instant::now();
    let order = good_ordering(&g, None, None).good().expect("good ordering on g_32");
    let mut colored = 0;
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let palette = rng.gen_range(k..=3 * k);
        let lists = ListAssignment::new(
            (0..n)
                .map(|_| sample(&mut rng, palette, k).into_iter().map(|c| c as u32).collect())
                .collect(),
        );
        if let Ok(c) = greedy_list_color(sq.graph(), order.order(), &lists) {
            colored += is_proper_list_coloring(&g, &lists, &c) as usize;
        }
    }
    let mut painted = 0;
    for seed in 0..100u64 {
        let mut lister = RandomSubset::new(seed);
        let transcript = paint_game(sq.graph(), k, order.order(), &mut lister).unwrap();
        painted += transcript.painter_won() as usize;
    }
    let elapsed = t.elapsed();
    let pass = colored == 100 && painted == 100 && within(elapsed, 30.0);
    verdict(
        pass,
        format!(
            "lists of size {k}: {colored}/100 colored, painter won {painted}/100, {:.2}s (limit 30s)",
            elapsed.as_secs_f64()
        ),
    )
}

fn c6_labeling() -> Verdict {
    let g = g_k(32).unwrap().into_graph();
    let delta = g.max_degree() as u32;
    let t = Instant::now();
    let order = good_ordering(&g, None, None).good().expect("good ordering on g_32");
    let verified = verify_ordering(&g, order.order(), 32).unwrap().pass;
    let mut pass = verified;
    let mut parts = Vec::new();
    for (p, q) in [(2, 1), (1, 1), (3, 1), (3, 2)] {
        let params = LpqParams::new(p, q).unwrap();
        let labeling = greedy_lpq(&g, order.order(), params).unwrap();
        let bound = if (p, q) == (2, 1) {
            delta + 8
        } else {
            (2 * q - 1) * delta + 6 * p - 2 * q - 2
        };
        pass &= labeling.span() <= bound && is_valid_labeling(&g, params, &labeling);
        parts.push(format!("({p},{q}) span {} <= {bound}", labeling.span()));
    }
    let elapsed = t.elapsed();
    pass &= within(elapsed, 5.0);
    verdict(
        pass,
        format!("{}, {:.2}s (limit 5s)", parts.join(", "), elapsed.as_secs_f64()),
    )
}

fn c7_lower_bound() -> Verdict {
    let budget = OracleBudget {
        max_vertices: 64,
        max_nodes: None,
        time_limit: Some(Duration::from_secs(300)),
    };
    let t = Instant::now();
    let mut pass = true;
    let mut parts = Vec::new();
    for delta in [3, 4] {
        let pg = dvorak_lower(delta).unwrap();
        let chi = exact_chromatic(square(pg.graph()).graph(), &budget);
        let gir = girth(pg.graph());
        pass &= chi == Ok(delta + 2) && gir == Some(6);
        parts.push(format!(
            "delta {delta}: chi {chi:?} (want {}), girth {gir:?}",
            delta + 2
        ));
    }
    let elapsed = t.elapsed();
    pass &= within(elapsed, 300.0);
    verdict(
        pass,
        format!("{}, {:.2}s (limit 300s)", parts.join("; "), elapsed.as_secs_f64()),
    )
}

fn c8_wegner() -> Verdict {
    let t = Instant::now();
    let budget = OracleBudget {
        max_vertices: 64,
        ..OracleBudget::default()
    };
    let plain = max_clique(square(wegner(8, false).unwrap().graph()).graph(), &budget).unwrap();
    let sub = max_clique(square(wegner(8, true).unwrap().graph()).graph(), &budget).unwrap();
    let elapsed = t.elapsed();
    let pass = plain >= 13 && sub >= 12 && within(elapsed, 60.0);
    verdict(
        pass,
        format!(
            "omega {plain} (want >= 13), subdivided {sub} (want >= 12), {:.3}s (limit 60s)",
            elapsed.as_secs_f64()
        ),
    )
}

/// Minimum of `Σ (1 − 4/x_i)` over `x_i = m_i/den ≥ a`, `Σ x_i = c`, by
/// enumerating nondecreasing `m` (the objective is symmetric).
fn grid_min(a: i128, n: usize, c: i128, den: i128) -> Ratio<i128> {
    fn go(lo: i128, left: usize, rest: i128, den: i128, acc: Ratio<i128>, best: &mut Option<Ratio<i128>>) {
        let f = |m: i128| Ratio::new(m - 4 * den, m);
        if left == 1 {
            if rest >= lo {
                let v = acc + f(rest);
                if best.as_ref().is_none_or(|b| v < *b) {
                    *best = Some(v);
                }
            }
            return;
        }
        let mut m = lo;
        while m * left as i128 <= rest {
            go(m, left - 1, rest - m, den, acc + f(m), best);
            m += 1;
        }
    }
    let mut best = None;
    go(a * den, n, c * den, den, Ratio::zero(), &mut best);
    best.expect("feasible")
}

fn c9_concavity() -> Verdict {
    let mut checked = 0;
    let mut bad = Vec::new();
    for a in 3..=5i64 {
        for n in 2..=4usize {
            for c in (n as i64 * a)..=30 {
                let (xs, value) = concavity_min(&int(a), n, &int(c)).unwrap();
                let boundary_ok = xs[..n - 1].iter().all(|x| *x == int(a)) && xs[n - 1] == int(c - a * (n as i64 - 1));
                for den in 1..=6 {
                    let m = grid_min(a as i128, n, c as i128, den);
                    let m = BigRational::new(BigInt::from(*m.numer()), BigInt::from(*m.denom()));
                    checked += 1;
                    if !(boundary_ok && m == value) {
                        bad.push((a, n, c, den));
                    }
                }
            }
        }
    }
    verdict(
        bad.is_empty(),
        format!("{checked} (a, n, C, denominator) grids match exactly; mismatches {bad:?}"),
    )
}

fn brute_force_orderable(g: &Graph, t_g: u32, t_sq: u32) -> bool {
    let n = g.vertex_count();
    let mut adj = vec![0u32; n];
    let mut close = vec![0u32; n];
    for u in 0..n {
        for (v, d) in g.distances_from(u).into_iter().enumerate() {
            match d {
                Some(1) => {
                    adj[u] |= 1 << v;
                    close[u] |= 1 << v;
                }
                Some(2) => close[u] |= 1 << v,
                _ => {}
            }
        }
    }
    fn extend(placed: u32, full: u32, adj: &[u32], close: &[u32], t: (u32, u32), dead: &mut HashSet<u32>) -> bool {
        if placed == full {
            return true;
        }
        if dead.contains(&placed) {
            return false;
        }
        for v in 0..adj.len() {
            let bit = 1 << v;
            if placed & bit == 0
                && (adj[v] & placed).count_ones() <= t.0
                && (close[v] & placed).count_ones() <= t.1
                && extend(placed | bit, full, adj, close, t, dead)
            {
                return true;
            }
        }
        dead.insert(placed);
        false
    }
    extend(0, (1u32 << n) - 1, &adj, &close, (t_g, t_sq), &mut HashSet::new())
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e)).unwrap()
}

fn c10_completeness() -> Verdict {
    let t = Instant::now();
    let (mut graphs, mut good, mut mismatches) = (0, 0, Vec::new());
    let mut check = |g: &Graph| {
        let fast = good_ordering(g, Some(4), Some(3)).is_good();
        let slow = brute_force_orderable(g, 3, 6);
        graphs += 1;
        good += fast as usize;
        if fast != slow {
            mismatches.push(g.edges().collect::<Vec<_>>());
        }
    };
    let mut exhaustive = 0;
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0..1u64 << pairs {
            let g = graph_from_mask(n, mask);
            if g.is_connected() {
                check(&g);
                exhaustive += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut sampled = 0;
    while sampled < 500 {
        let density: f64 = rng.gen_range(0.25..0.95);
        let mask = (0..21).fold(0u64, |m, i| m | ((rng.gen::<f64>() < density) as u64) << i);
        let g = graph_from_mask(7, mask);
        if g.is_connected() {
            check(&g);
            sampled += 1;
        }
    }
    let elapsed = t.elapsed();
    let pass = mismatches.is_empty() && within(elapsed, 120.0);
    verdict(
        pass,
        format!(
            "{exhaustive} connected graphs on <= 6 vertices plus {sampled} sampled on 7; {good} orderable; \
             {} mismatches; {:.2}s (limit 120s)",
            mismatches.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn c11_class_membership() -> Verdict {
    let not_in_class: Vec<usize> = (3..=40).filter(|&k| !check_class(&g_k(k).unwrap()).in_class).collect();
    let girths: Vec<(usize, Option<usize>)> = (2..=8).map(|d| (d, girth(dvorak_lower(d).unwrap().graph()))).collect();
    let wrong_girth: Vec<(usize, Option<usize>)> = girths.iter().copied().filter(|&(_, g)| g != Some(6)).collect();
    let mut nonzero_triangles = Vec::new();
    for k in 3..=40 {
        let pg = g_k(k).unwrap();
        let d = apply_rules(&pg, pg.graph().max_degree().max(32)).unwrap();
        let last = d.final_ledger();
        if d.faces
            .iter()
            .zip(&last.face)
            .any(|(f, c)| f.len() == 3 && !c.is_zero())
        {
            nonzero_triangles.push(k);
        }
    }
    let pass = not_in_class.is_empty() && wrong_girth.is_empty() && nonzero_triangles.is_empty();
    verdict(
        pass,
        format!(
            "g_k(3..40) outside class {not_in_class:?}; dvorak_lower girth != 6 at {wrong_girth:?}; \
             g_k with a nonzero 3-face {nonzero_triangles:?}"
        ),
    )
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "euler charge sum", c1_euler_sum),
        (2, "conservation", c2_conservation),
        (3, "good ordering in class", c3_good_ordering),
        (4, "min-degree-3 impossibility", c4_stuck_certificate),
        (5, "list coloring and paintability", c5_list_and_paint),
        (6, "labeling bounds", c6_labeling),
        (7, "lower-bound construction", c7_lower_bound),
        (8, "wegner clique", c8_wegner),
        (9, "concavity minimum", c9_concavity),
        (10, "ordering completeness", c10_completeness),
        (11, "class membership of corpus", c11_class_membership),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        let t = Instant::now();
        let v = run();
        failed += !v.pass as usize;
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {id:>2} {status} {name}: {} [{:.2}s]",
            v.detail,
            t.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
