//! Exact longest paths for small graphs.
//!
//! The default method is a depth-first enumeration over vertex bitmasks,
//! pruned by the number of unvisited vertices still reachable from the
//! current endpoint. A subset dynamic program over `(vertex set, endpoint)`
//! is available for up to [`DP_MAX_VERTICES`] vertices.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Graph, Path};

/// Largest graph the subset DP accepts.
pub const DP_MAX_VERTICES: usize = 20;
const BITSET_MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OracleMethod {
    #[default]
    Dfs,
    SubsetDp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub time_budget: Option<Duration>,
    pub method: OracleMethod,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 18,
            time_budget: None,
            method: OracleMethod::Dfs,
        }
    }
}

impl OracleLimits {
    fn admit(&self, g: &Graph) -> Result<()> {
        let hard_cap = match self.method {
            OracleMethod::Dfs => BITSET_MAX_VERTICES,
            OracleMethod::SubsetDp => DP_MAX_VERTICES,
        };
        let cap = self.max_vertices.min(hard_cap);
        if g.n() > cap {
            return Err(Error::OracleRefused { n: g.n(), cap });
        }
        if g.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(())
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Vertices reachable from `from` without entering `blocked`, excluding `from`.
fn reachable(adj: &[u64], from: usize, blocked: u64) -> u64 {
    let mut seen = 1u64 << from;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        next &= !blocked & !seen;
        seen |= next;
        frontier = next;
    }
    seen & !(1u64 << from)
}

struct Clock {
    deadline: Option<Instant>,
    ticks: u32,
}

impl Clock {
    fn new(budget: Option<Duration>) -> Self {
        Clock {
            deadline: budget.map(|b| Instant::now() + b),
            ticks: 0,
        }
    }

    fn expired(&mut self) -> bool {
        self.ticks = self.ticks.wrapping_add(1);
        match self.deadline {
            Some(d) if self.ticks % 1024 == 0 => Instant::now() >= d,
            _ => false,
        }
    }
}

struct LongestDfs<'a> {
    adj: &'a [u64],
    stack: Vec<usize>,
    best: Vec<usize>,
    target: usize,
    clock: Clock,
    timed_out: bool,
}

impl LongestDfs<'_> {
    /// Returns `true` to abort the whole enumeration.
    fn extend(&mut self, visited: u64) -> bool {
        let u = *self.stack.last().unwrap();
        if self.stack.len() > self.best.len() {
            self.best.clone_from(&self.stack);
            if self.best.len() - 1 == self.target {
                return true;
            }
        }
        if self.clock.expired() {
            self.timed_out = true;
            return true;
        }
        let room = reachable(self.adj, u, visited).count_ones() as usize;
        if self.stack.len() + room <= self.best.len() {
            return false;
        }
        let mut next = self.adj[u] & !visited;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            self.stack.push(w);
            let stop = self.extend(visited | 1 << w);
            self.stack.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

/// A longest simple path of `g`.
pub fn exact_longest_path(g: &Graph, limits: &OracleLimits) -> Result<Path> {
    limits.admit(g)?;
    if limits.method == OracleMethod::SubsetDp {
        return Ok(subset_dp(g));
    }
    let adj = adjacency_masks(g);
    let comps = g.components();
    let mut comp_size = vec![0usize; g.n()];
    for &c in &comps {
        comp_size[c] += 1;
    }
    let target = comp_size.iter().max().copied().unwrap_or(1) - 1;

    let mut dfs = LongestDfs {
        adj: &adj,
        stack: Vec::with_capacity(g.n()),
        best: vec![0],
        target,
        clock: Clock::new(limits.time_budget),
        timed_out: false,
    };
    for s in 0..g.n() {
        if comp_size[comps[s]] <= dfs.best.len() {
            continue;
        }
        dfs.stack.clear();
        dfs.stack.push(s);
        if dfs.extend(1 << s) {
            break;
        }
    }
    let best = Path::new(dfs.best);
    if dfs.timed_out {
        return Err(Error::OracleTimeout { best });
    }
    Ok(best)
}

fn subset_dp(g: &Graph) -> Path {
    let n = g.n();
    let adj = adjacency_masks(g);
    // ends[mask]: endpoints v such that some simple path covers exactly `mask`
    // and ends at v
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best_mask = 1usize;
    for mask in 1usize..1 << n {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        if mask.count_ones() > best_mask.count_ones() {
            best_mask = mask;
        }
        let mut it = e;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let mut out = adj[v] & !(mask as u64);
            while out != 0 {
                let w = out.trailing_zeros() as usize;
                out &= out - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }

    let mut mask = best_mask;
    let mut v = ends[mask].trailing_zeros() as usize;
    let mut rev = vec![v];
    while mask.count_ones() > 1 {
        mask ^= 1 << v;
        let prev = ends[mask] & adj[v] as u32;
        v = prev.trailing_zeros() as usize;
        rev.push(v);
    }
    rev.reverse();
    Path::new(rev)
}

struct PairDfs<'a> {
    adj: &'a [u64],
    goal: usize,
    stack: Vec<usize>,
    best: Option<Vec<usize>>,
    clock: Clock,
    timed_out: bool,
}

impl PairDfs<'_> {
    fn extend(&mut self, visited: u64) -> bool {
        let u = *self.stack.last().unwrap();
        if u == self.goal {
            if self.best.as_ref().is_none_or(|b| self.stack.len() > b.len()) {
                self.best = Some(self.stack.clone());
            }
            return false;
        }
        if self.clock.expired() {
            self.timed_out = true;
            return true;
        }
        let room = reachable(self.adj, u, visited);
        if room & (1 << self.goal) == 0 {
            return false;
        }
        let best_len = self.best.as_ref().map_or(0, Vec::len);
        if self.stack.len() + room.count_ones() as usize <= best_len {
            return false;
        }
        let mut next = self.adj[u] & !visited;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            self.stack.push(w);
            let stop = self.extend(visited | 1 << w);
            self.stack.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

/// A longest simple path from `s` to `t`, or `None` when `t` is not
/// reachable from `s`.
pub fn exact_from_pair(
    g: &Graph,
    s: usize,
    t: usize,
    limits: &OracleLimits,
) -> Result<Option<Path>> {
    OracleLimits { method: OracleMethod::Dfs, ..*limits }.admit(g)?;
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::InvalidParams("source and target must differ".into()));
    }
    let adj = adjacency_masks(g);
    let mut dfs = PairDfs {
        adj: &adj,
        goal: t,
        stack: vec![s],
        best: None,
        clock: Clock::new(limits.time_budget),
        timed_out: false,
    };
    dfs.extend(1 << s);
    if dfs.timed_out {
        return Err(Error::OracleTimeout {
            best: Path::new(dfs.best.unwrap_or_else(|| vec![s])),
        });
    }
    Ok(dfs.best.map(Path::new))
}
