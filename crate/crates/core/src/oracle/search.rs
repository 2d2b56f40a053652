//! Exhaustive backtracking over edge colorings with a prescribed distribution.
//!
//! Edges are colored in a fixed order. At each edge the colors that would close
//! a rainbow triangle with two earlier edges are excluded (if the two earlier
//! edges differ, the new color must repeat one of them), exhausted colors are
//! skipped, and among unused colors with equal targets only the lowest id may
//! be introduced.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::model::{choose2, Color, Coloring, Distribution, Verdict};
use crate::verify::{check_necessary, is_gallai};

/// Search limits; exceeding either yields an `unknown` verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub nodes: u64,
    pub time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            nodes: 1_000_000_000,
            time: None,
        }
    }
}

impl Budget {
    pub fn nodes(nodes: u64) -> Self {
        Self { nodes, time: None }
    }
}

/// Edge visiting order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EdgeOrder {
    /// `(u, v)` sorted by `u`, then `v`.
    #[default]
    Lexicographic,
    /// `(u, v)` sorted by `v`, then `u`: vertex by vertex.
    Colex,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub budget: Budget,
    /// Worker threads; `1` searches sequentially.
    pub jobs: usize,
    pub order: EdgeOrder,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            budget: Budget::default(),
            jobs: 1,
            order: EdgeOrder::default(),
        }
    }
}

struct Plan {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Positions of the two other edges of every triangle completed at each step.
    closes: Vec<Vec<(u32, u32)>>,
    targets: Vec<usize>,
}

impl Plan {
    fn new(d: &Distribution, order: EdgeOrder) -> Self {
        let n = d.n();
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(choose2(n));
        match order {
            EdgeOrder::Lexicographic => {
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
            }
            EdgeOrder::Colex => {
                for v in 1..n {
                    for u in 0..v {
                        edges.push((u, v));
                    }
                }
            }
        }
        let mut pos = vec![vec![usize::MAX; n]; n];
        for (t, &(u, v)) in edges.iter().enumerate() {
            pos[u][v] = t;
            pos[v][u] = t;
        }
        let closes = edges
            .iter()
            .enumerate()
            .map(|(t, &(u, v))| {
                (0..n)
                    .filter(|&w| w != u && w != v && pos[u][w] < t && pos[v][w] < t)
                    .map(|w| (pos[u][w] as u32, pos[v][w] as u32))
                    .collect()
            })
            .collect();
        Self {
            n,
            edges,
            closes,
            targets: d.sizes().to_vec(),
        }
    }
}

struct Shared<'a> {
    plan: &'a Plan,
    budget: Budget,
    start: Instant,
    nodes: AtomicU64,
    found: AtomicBool,
    exhausted: AtomicBool,
    witness: Mutex<Option<Vec<u8>>>,
}

struct Worker<'a, 'b> {
    shared: &'b Shared<'a>,
    col: Vec<u8>,
    remaining: Vec<usize>,
    local_nodes: u64,
}

const FLUSH: u64 = 1 << 12;

impl Worker<'_, '_> {
    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        let s = self.shared;
        if self.local_nodes > s.budget.nodes {
            s.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        if !self.local_nodes.is_multiple_of(FLUSH) {
            return true;
        }
        let total = s.nodes.fetch_add(FLUSH, Ordering::Relaxed) + FLUSH;
        if total > s.budget.nodes || s.budget.time.is_some_and(|limit| s.start.elapsed() > limit) {
            s.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        !s.found.load(Ordering::Relaxed)
    }

    fn stopped(&self) -> bool {
        self.shared.found.load(Ordering::Relaxed) || self.shared.exhausted.load(Ordering::Relaxed)
    }

    fn candidates(&self, t: usize) -> u64 {
        let k = self.remaining.len();
        let mut allowed: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        for &(a, b) in &self.shared.plan.closes[t] {
            let (x, y) = (self.col[a as usize], self.col[b as usize]);
            if x != y {
                allowed &= (1u64 << x) | (1u64 << y);
            }
        }
        allowed
    }

    fn may_introduce(&self, c: usize) -> bool {
        let targets = &self.shared.plan.targets;
        let fresh = |j: usize| self.remaining[j] == targets[j];
        if !fresh(c) || c == 0 {
            return true;
        }
        // equal-target unused colors are interchangeable: only the lowest may open
        !(targets[c - 1] == targets[c] && fresh(c - 1))
    }

    /// Returns `true` once a complete coloring is found.
    fn dfs(&mut self, t: usize) -> bool {
        if t == self.col.len() {
            return true;
        }
        if !self.tick() {
            return false;
        }
        let mut allowed = self.candidates(t);
        while allowed != 0 {
            let c = allowed.trailing_zeros() as usize;
            allowed &= allowed - 1;
            if self.remaining[c] == 0 || !self.may_introduce(c) {
                continue;
            }
            self.remaining[c] -= 1;
            self.col[t] = c as u8;
            if self.dfs(t + 1) {
                return true;
            }
            self.remaining[c] += 1;
            if self.stopped() {
                return false;
            }
        }
        false
    }

    /// Enumerates consistent prefixes of length `depth`.
    fn prefixes(&mut self, t: usize, depth: usize, out: &mut Vec<(Vec<u8>, Vec<usize>)>) {
        if t == depth {
            out.push((self.col[..depth].to_vec(), self.remaining.clone()));
            return;
        }
        let mut allowed = self.candidates(t);
        while allowed != 0 {
            let c = allowed.trailing_zeros() as usize;
            allowed &= allowed - 1;
            if self.remaining[c] == 0 || !self.may_introduce(c) {
                continue;
            }
            self.remaining[c] -= 1;
            self.col[t] = c as u8;
            self.prefixes(t + 1, depth, out);
            self.remaining[c] += 1;
        }
    }
}

fn witness_of(plan: &Plan, col: &[u8]) -> Coloring {
    let triples = plan
        .edges
        .iter()
        .zip(col)
        .map(|(&(u, v), &c)| (u, v, c as Color + 1));
    Coloring::from_edges(plan.n, triples).expect("complete search state")
}

/// Decides whether some Gallai coloring of `K_n` has distribution `d`.
pub fn search_realizable(d: &Distribution, budget: Budget) -> Verdict {
    search_with(
        d,
        &SearchOptions {
            budget,
            ..SearchOptions::default()
        },
    )
}

pub fn search_with(d: &Distribution, opts: &SearchOptions) -> Verdict {
    if d.k() > 63 {
        return Verdict::unknown(0);
    }
    if check_necessary(d).is_err() {
        return Verdict::infeasible(0);
    }
    let plan = Plan::new(d, opts.order);
    let shared = Shared {
        plan: &plan,
        budget: opts.budget,
        start: Instant::now(),
        nodes: AtomicU64::new(0),
        found: AtomicBool::new(false),
        exhausted: AtomicBool::new(false),
        witness: Mutex::new(None),
    };
    let fresh_worker = || Worker {
        shared: &shared,
        col: vec![0; plan.edges.len()],
        remaining: plan.targets.clone(),
        local_nodes: 0,
    };
    if opts.jobs <= 1 || plan.edges.len() < 4 {
        let mut w = fresh_worker();
        if w.dfs(0) {
            *shared.witness.lock().unwrap() = Some(w.col.clone());
            shared.found.store(true, Ordering::Relaxed);
        }
        shared.nodes.fetch_add(w.local_nodes % FLUSH, Ordering::Relaxed);
    } else {
        let depth = 2.min(plan.edges.len());
        let mut prefixes = Vec::new();
        fresh_worker().prefixes(0, depth, &mut prefixes);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build();
        let run = || {
            prefixes.par_iter().for_each(|(prefix, remaining)| {
                let mut w = fresh_worker();
                w.col[..depth].copy_from_slice(prefix);
                w.remaining.clone_from(remaining);
                if !w.stopped() && w.dfs(depth) {
                    let mut slot = shared.witness.lock().unwrap();
                    if slot.is_none() {
                        *slot = Some(w.col.clone());
                    }
                    shared.found.store(true, Ordering::Relaxed);
                }
                shared.nodes.fetch_add(w.local_nodes % FLUSH, Ordering::Relaxed);
            })
        };
        match pool {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        }
    }
    let nodes = shared.nodes.load(Ordering::Relaxed);
    if let Some(col) = shared.witness.into_inner().unwrap() {
        let witness = witness_of(&plan, &col);
        assert!(is_gallai(&witness) && witness.distribution() == *d, "oracle witness failed its post-check");
        return Verdict::feasible(witness, nodes);
    }
    if shared.exhausted.load(Ordering::Relaxed) {
        Verdict::unknown(nodes)
    } else {
        Verdict::infeasible(nodes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::VerdictTag;

    fn dist(sizes: &[usize], n: usize) -> Distribution {
        Distribution::canonicalize(sizes.to_vec(), n).unwrap()
    }

    #[test]
    fn tiny_instances() {
        assert_eq!(search_realizable(&dist(&[1, 1, 1], 3), Budget::default()).tag, VerdictTag::Infeasible);
        assert_eq!(search_realizable(&dist(&[2, 1], 3), Budget::default()).tag, VerdictTag::Feasible);
        let v = search_realizable(&dist(&[8, 1, 1], 5), Budget::default());
        let w = v.witness.unwrap();
        assert!(is_gallai(&w));
        assert_eq!(w.distribution(), dist(&[8, 1, 1], 5));
    }

    #[test]
    fn necessary_failure_short_circuits() {
        let v = search_realizable(&dist(&[2, 2, 2], 4), Budget::default());
        assert_eq!((v.tag, v.nodes_explored), (VerdictTag::Infeasible, 0));
    }

    #[test]
    fn budget_gives_unknown() {
        let v = search_realizable(&dist(&[7, 3, 2, 2, 1], 6), Budget::nodes(10));
        assert_eq!(v.tag, VerdictTag::Unknown);
    }

    #[test]
    fn orders_and_jobs_agree() {
        for sizes in crate::model::partitions(15, 4) {
            let d = dist(&sizes, 6);
            let base = search_realizable(&d, Budget::default()).tag;
            for order in [EdgeOrder::Lexicographic, EdgeOrder::Colex] {
                for jobs in [1, 3] {
                    let opts = SearchOptions {
                        budget: Budget::default(),
                        jobs,
                        order,
                    };
                    assert_eq!(search_with(&d, &opts).tag, base, "{d} {order:?} jobs={jobs}");
                }
            }
        }
    }

    #[test]
    fn matches_brute_force_on_k5() {
        // every 3-coloring of K_5 (3^10 of them), bucketed by distribution
        let n = 5;
        let mut realizable = std::collections::BTreeSet::new();
        for code in 0..3usize.pow(10) {
            let mut x = code;
            let c = Coloring::compacted(
                n,
                (0..10)
                    .map(|_| {
                        let c = (x % 3) as Color + 1;
                        x /= 3;
                        c
                    })
                    .collect(),
            )
            .unwrap();
            if is_gallai(&c) {
                realizable.insert(c.distribution());
            }
        }
        for k in 1..=3 {
            for sizes in crate::model::partitions(10, k) {
                let d = dist(&sizes, n);
                let v = search_realizable(&d, Budget::default());
                assert_eq!(v.is_feasible(), realizable.contains(&d), "{d}");
            }
        }
    }
}
