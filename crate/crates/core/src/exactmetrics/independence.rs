use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::Graph;

use super::bitset::BitSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceResult {
    pub size: usize,
    /// Sorted witness set, verified independent.
    pub witness: Vec<usize>,
    /// False when the node budget ran out; `size` is then a lower bound.
    pub exact: bool,
    pub nodes: u64,
}

struct Search<'a> {
    adj: &'a [BitSet],
    best: Vec<usize>,
    budget: u64,
    nodes: u64,
    exhausted: bool,
}

impl Search<'_> {
    /// Greedy clique cover of `cand`; its size bounds α(G[cand]).
    fn clique_cover(&self, cand: &BitSet) -> usize {
        let mut rest = cand.clone();
        let mut cliques = 0;
        while let Some(v) = rest.first() {
            let mut common = self.adj[v].and(&rest);
            rest.remove(v);
            while let Some(w) = common.first() {
                rest.remove(w);
                common = common.and(&self.adj[w]);
            }
            cliques += 1;
        }
        cliques
    }

    fn run(&mut self, mut cand: BitSet, current: &mut Vec<usize>) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let depth = current.len();
        // Vertices of candidate-degree <= 1 belong to some maximum set.
        loop {
            let forced = cand.iter().find(|&v| self.adj[v].intersection_len(&cand) <= 1);
            match forced {
                Some(v) => {
                    current.push(v);
                    cand = cand.and_not(&self.adj[v]);
                    cand.remove(v);
                }
                None => break,
            }
        }
        if cand.is_empty() {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            current.truncate(depth);
            return;
        }
        if current.len() + self.clique_cover(&cand) <= self.best.len() {
            current.truncate(depth);
            return;
        }
        // Branch on the max-degree candidate, lowest index on ties.
        let mut pivot = usize::MAX;
        let mut pivot_deg = 0;
        for v in cand.iter() {
            let d = self.adj[v].intersection_len(&cand);
            if pivot == usize::MAX || d > pivot_deg {
                pivot = v;
                pivot_deg = d;
            }
        }
        let mut with = cand.and_not(&self.adj[pivot]);
        with.remove(pivot);
        current.push(pivot);
        self.run(with, current);
        current.pop();
        let mut without = cand;
        without.remove(pivot);
        self.run(without, current);
        current.truncate(depth);
    }
}

/// Min-degree-first greedy independent set, sorted.
pub fn greedy_independent_set(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut blocked = vec![false; g.n()];
    let mut set = Vec::new();
    for v in order {
        if !blocked[v] {
            set.push(v);
            blocked[v] = true;
            for &w in g.neighbors(v) {
                blocked[w as usize] = true;
            }
        }
    }
    set.sort_unstable();
    set
}

pub fn is_independent(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .all(|&u| set.iter().all(|&v| !g.has_edge(u, v).unwrap_or(true) || u == v))
}

/// Exact independence number by branch and bound. If `node_budget` is
/// exhausted the best set found so far is returned with `exact = false`.
pub fn exact_independence(g: &Graph, max_n: usize, node_budget: u64) -> Result<IndependenceResult> {
    let n = g.n();
    if n > max_n {
        return Err(Error::TooLarge {
            what: "exact independence",
            n,
            limit: max_n,
        });
    }
    let adj: Vec<BitSet> = (0..n)
        .map(|u| {
            let mut s = BitSet::new(n);
            for &w in g.neighbors(u) {
                s.insert(w as usize);
            }
            s
        })
        .collect();
    let mut search = Search {
        adj: &adj,
        best: greedy_independent_set(g),
        budget: node_budget,
        nodes: 0,
        exhausted: false,
    };
    search.run(BitSet::full(n), &mut Vec::new());
    let mut witness = search.best;
    witness.sort_unstable();
    debug_assert!(is_independent(g, &witness));
    if !is_independent(g, &witness) {
        return Err(Error::BadParameter("internal: witness not independent".into()));
    }
    Ok(IndependenceResult {
        size: witness.len(),
        witness,
        exact: !search.exhausted,
        nodes: search.nodes,
    })
}
